use crate::error::{Error, Result};
use crate::graph::Graph;

/// Named graph families used throughout the test corpus and the CLI.
///
/// Vertex layouts (0-based):
/// - `Comb(n)`: clique `u_1..u_n` at `0..n`, pendant `v_i = n+i-1` attached to
///   `u_i`. Requires `n >= 1`.
/// - `Anticomb(n)`: clique `u_1..u_n` at `0..n`, `v_i = n+i-1` adjacent to
///   every `u_j` with `j != i`. Requires `n >= 1`.
/// - `SettledComb(n)`: comb plus an apex `u_0` (vertex 0, shifting the rest up
///   by one) adjacent to all of the clique.
/// - `SettledAnticomb(n)`: clique `u_0..u_n` at `0..n`, each `v_i = n+i`
///   adjacent to all of `u_1..u_n`.
/// - `CobipMatching(n)`: cliques `u_0..u_n` at `0..n` and `v_0..v_n` at
///   `n+1..2n+2`, plus the matching `u_i v_i` for `1 <= i <= n`.
/// - `SubdivStar(n)`: tree on `u_0..u_n`, `v_0..v_n` with edges `u_0 v_0`,
///   `u_0 u_i`, and `u_i v_i`.
/// - `Band(n)`: vertices `0..2n`, `i ~ j` iff `|i-j| < n`. Requires `n >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Comb(usize),
    Anticomb(usize),
    SettledComb(usize),
    SettledAnticomb(usize),
    CobipMatching(usize),
    SubdivStar(usize),
    Band(usize),
    Corona(Box<FamilySpec>),
}

impl FamilySpec {
    /// Parses `name n`, where `name` may be prefixed by `corona-`.
    pub fn parse(name: &str, n: usize) -> Result<FamilySpec> {
        if let Some(rest) = name.strip_prefix("corona-") {
            return Ok(FamilySpec::Corona(Box::new(FamilySpec::parse(rest, n)?)));
        }
        let f = match name {
            "path" => FamilySpec::Path(n),
            "cycle" => FamilySpec::Cycle(n),
            "complete" => FamilySpec::Complete(n),
            "comb" => FamilySpec::Comb(n),
            "anticomb" => FamilySpec::Anticomb(n),
            "settled-comb" | "settled_comb" => FamilySpec::SettledComb(n),
            "settled-anticomb" | "settled_anticomb" => FamilySpec::SettledAnticomb(n),
            "cobip-matching" | "cobip_matching" => FamilySpec::CobipMatching(n),
            "subdiv-star" | "subdiv_star" => FamilySpec::SubdivStar(n),
            "band" => FamilySpec::Band(n),
            other => {
                return Err(Error::InvalidInput(format!("unknown family '{other}'")));
            }
        };
        Ok(f)
    }
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidInput(what.to_string()))
    }
}

fn add_clique(g: &mut Graph, vs: std::ops::Range<usize>) -> Result<()> {
    let vs: Vec<usize> = vs.collect();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            g.add_edge(u, v)?;
        }
    }
    Ok(())
}

/// The corona of a graph: one new pendant vertex attached to each vertex.
pub fn corona(g: &Graph) -> Result<Graph> {
    let n = g.n();
    let mut out = Graph::new(2 * n)?;
    for (u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    for v in 0..n {
        out.add_edge(v, n + v)?;
    }
    Ok(out)
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match *spec {
        FamilySpec::Path(n) => {
            require(n >= 1, "path needs n >= 1")?;
            let mut g = Graph::new(n)?;
            for i in 1..n {
                g.add_edge(i - 1, i)?;
            }
            Ok(g)
        }
        FamilySpec::Cycle(n) => {
            require(n >= 3, "cycle needs n >= 3")?;
            let mut g = Graph::new(n)?;
            for i in 1..n {
                g.add_edge(i - 1, i)?;
            }
            g.add_edge(0, n - 1)?;
            Ok(g)
        }
        FamilySpec::Complete(n) => {
            require(n >= 1, "complete needs n >= 1")?;
            let mut g = Graph::new(n)?;
            add_clique(&mut g, 0..n)?;
            Ok(g)
        }
        FamilySpec::Comb(n) => {
            require(n >= 1, "comb needs n >= 1")?;
            let mut g = Graph::new(2 * n)?;
            add_clique(&mut g, 0..n)?;
            for i in 0..n {
                g.add_edge(i, n + i)?;
            }
            Ok(g)
        }
        FamilySpec::Anticomb(n) => {
            require(n >= 1, "anticomb needs n >= 1")?;
            let mut g = Graph::new(2 * n)?;
            add_clique(&mut g, 0..n)?;
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        g.add_edge(j, n + i)?;
                    }
                }
            }
            Ok(g)
        }
        FamilySpec::SettledComb(n) => {
            require(n >= 1, "settled-comb needs n >= 1")?;
            // u_0 = 0, u_i = i, v_i = n + i
            let mut g = Graph::new(2 * n + 1)?;
            add_clique(&mut g, 0..n + 1)?;
            for i in 1..=n {
                g.add_edge(i, n + i)?;
            }
            Ok(g)
        }
        FamilySpec::SettledAnticomb(n) => {
            require(n >= 1, "settled-anticomb needs n >= 1")?;
            // u_0 = 0, u_i = i, v_i = n + i; v_i sees the whole settled clique
            // except the apex
            let mut g = Graph::new(2 * n + 1)?;
            add_clique(&mut g, 0..n + 1)?;
            for i in 1..=n {
                for j in 1..=n {
                    g.add_edge(j, n + i)?;
                }
            }
            Ok(g)
        }
        FamilySpec::CobipMatching(n) => {
            require(n >= 1, "cobip-matching needs n >= 1")?;
            // u_i = i (0..=n), v_i = n + 1 + i (0..=n)
            let mut g = Graph::new(2 * n + 2)?;
            add_clique(&mut g, 0..n + 1)?;
            add_clique(&mut g, n + 1..2 * n + 2)?;
            for i in 1..=n {
                g.add_edge(i, n + 1 + i)?;
            }
            Ok(g)
        }
        FamilySpec::SubdivStar(n) => {
            require(n >= 1, "subdiv-star needs n >= 1")?;
            // u_i = i (0..=n), v_i = n + 1 + i (0..=n)
            let mut g = Graph::new(2 * n + 2)?;
            g.add_edge(0, n + 1)?;
            for i in 1..=n {
                g.add_edge(0, i)?;
                g.add_edge(i, n + 1 + i)?;
            }
            Ok(g)
        }
        FamilySpec::Band(n) => {
            require(n >= 2, "band needs n >= 2")?;
            let mut g = Graph::new(2 * n)?;
            for i in 0..2 * n {
                for j in i + 1..2 * n {
                    if j - i < n {
                        g.add_edge(i, j)?;
                    }
                }
            }
            Ok(g)
        }
        FamilySpec::Corona(ref base) => corona(&generate(base)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hypergraph;
    use crate::set::VertexSet;

    #[test]
    fn comb_cliques_match_published_form() {
        // E(C(G)) = {C} ∪ {{u_i, v_i}}
        let g = generate(&FamilySpec::Comb(5)).unwrap();
        let ch = g.clique_hypergraph().unwrap();
        let mut want: Vec<VertexSet> = vec![(0..5).collect()];
        for i in 0..5 {
            want.push(VertexSet::from_slice(&[i, 5 + i]));
        }
        let want = Hypergraph::new(10, want).unwrap();
        assert_eq!(ch, want);
    }

    #[test]
    fn comb_dual_matches_published_form() {
        // E(C^d(G)) = { S ∪ f(S) : ∅ ≠ S ⊆ {u_1..u_n} }, f(S) = {v_j : u_j ∉ S}
        let n = 4;
        let g = generate(&FamilySpec::Comb(n)).unwrap();
        let dual = g.minimal_clique_transversals(100000).unwrap();
        let mut want = Vec::new();
        for bits in 1u64..(1 << n) {
            let s = VertexSet::from_bits(bits);
            let f: VertexSet = (0..n).filter(|&j| !s.contains(j)).map(|j| n + j).collect();
            want.push(s.union(f));
        }
        assert_eq!(dual, Hypergraph::new(2 * n, want).unwrap());
    }

    #[test]
    fn anticomb_cliques_and_dual_match_published_form() {
        let n = 5;
        let g = generate(&FamilySpec::Anticomb(n)).unwrap();
        let ch = g.clique_hypergraph().unwrap();
        let c: VertexSet = (0..n).collect();
        let mut cliques = vec![c];
        for i in 0..n {
            let mut e = c;
            e.remove(i);
            e.insert(n + i);
            cliques.push(e);
        }
        assert_eq!(ch, Hypergraph::new(2 * n, cliques).unwrap());
        // dual: all pairs inside C plus the non-edges u_i v_i
        let dual = g.minimal_clique_transversals(100000).unwrap();
        let mut want = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                want.push(VertexSet::from_slice(&[i, j]));
            }
        }
        for i in 0..n {
            want.push(VertexSet::from_slice(&[i, n + i]));
        }
        assert_eq!(dual, Hypergraph::new(2 * n, want).unwrap());
    }

    #[test]
    fn comb_two_is_p4_and_anticomb_dual_is_comb() {
        let comb2 = generate(&FamilySpec::Comb(2)).unwrap();
        let p4 = generate(&FamilySpec::Path(4)).unwrap();
        assert!(crate::iso::is_isomorphic(&comb2, &p4).unwrap());
        // the anticomb's clique-dual is the comb on the same labels
        let n = 4;
        let anti = generate(&FamilySpec::Anticomb(n)).unwrap();
        let comb = generate(&FamilySpec::Comb(n)).unwrap();
        let dual = anti
            .clique_dual(crate::graph::DualMode::Full, 100000)
            .unwrap();
        assert_eq!(dual, comb);
        // and the comb's complement is an anticomb with the halves swapped
        assert!(crate::iso::is_isomorphic(&comb.complement(), &anti).unwrap());
    }

    #[test]
    fn band_cliques() {
        // band(5): maximal cliques are the n+1 windows of size n
        let g = generate(&FamilySpec::Band(5)).unwrap();
        let cliques = g.maximal_cliques().unwrap();
        assert_eq!(cliques.len(), 6);
        assert!(cliques.iter().all(|c| c.len() == 5));
        for j in 0..=5 {
            let w: VertexSet = (j..j + 5).collect();
            assert!(cliques.contains(&w));
        }
    }

    #[test]
    fn subdiv_star_cliques_are_edges() {
        let g = generate(&FamilySpec::SubdivStar(4)).unwrap();
        assert_eq!(g.n(), 10);
        let cliques = g.maximal_cliques().unwrap();
        assert_eq!(cliques.len(), 9);
        assert!(cliques.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn cobip_matching_cliques() {
        let n = 4;
        let g = generate(&FamilySpec::CobipMatching(n)).unwrap();
        let ch = g.clique_hypergraph().unwrap();
        let c: VertexSet = (0..=n).collect();
        let d: VertexSet = (n + 1..=2 * n + 1).collect();
        let mut want = vec![c, d];
        for i in 1..=n {
            want.push(VertexSet::from_slice(&[i, n + 1 + i]));
        }
        assert_eq!(ch, Hypergraph::new(2 * n + 2, want).unwrap());
    }

    #[test]
    fn settled_comb_shape() {
        let g = generate(&FamilySpec::SettledComb(2)).unwrap();
        // bull: triangle with two pendants
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 5);
        assert!(g.is_split());
        let cliques = g.maximal_cliques().unwrap();
        assert_eq!(cliques.len(), 3);
    }

    #[test]
    fn settled_anticomb_shape() {
        let g = generate(&FamilySpec::SettledAnticomb(3)).unwrap();
        assert_eq!(g.n(), 7);
        assert!(g.is_split());
        // maximal cliques: the settled clique and one per v_i
        let cliques = g.maximal_cliques().unwrap();
        assert_eq!(cliques.len(), 4);
        assert!(cliques.iter().all(|c| c.len() == 4));
    }

    #[test]
    fn corona_and_parse() {
        let g = generate(&FamilySpec::parse("corona-cycle", 5).unwrap()).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 10);
        assert!(FamilySpec::parse("nope", 3).is_err());
        assert!(generate(&FamilySpec::Cycle(2)).is_err());
        assert!(generate(&FamilySpec::Band(1)).is_err());
    }
}
