use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::DEFAULT_ISO_CAP;

/// Degree of v plus the sorted degrees of its neighbors; cheap refinement
/// invariant for the backtracking search.
fn vertex_signature(g: &Graph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

fn compatible(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut sg: Vec<_> = (0..g.n()).map(|v| vertex_signature(g, v)).collect();
    let mut sh: Vec<_> = (0..h.n()).map(|v| vertex_signature(h, v)).collect();
    sg.sort_unstable();
    sh.sort_unstable();
    sg == sh
}

/// Backtracking mapper. Maps the vertices of `g` in order onto vertices of `h`,
/// pruning by signatures and adjacency to the already-mapped prefix. When
/// `count_all` is set it exhausts the space and returns the number of complete
/// maps (used for automorphism counting with `g == h`).
fn search_maps(g: &Graph, h: &Graph, count_all: bool) -> u64 {
    let n = g.n();
    let sig_g: Vec<_> = (0..n).map(|v| vertex_signature(g, v)).collect();
    let sig_h: Vec<_> = (0..n).map(|v| vertex_signature(h, v)).collect();
    // order g's vertices by rarity of signature, then connectivity
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&v| {
        let rarity = sig_g.iter().filter(|s| **s == sig_g[v]).count();
        (rarity, std::cmp::Reverse(g.degree(v)))
    });
    let mut image = vec![usize::MAX; n];
    let mut used = VertexSet::EMPTY;
    fn go(
        g: &Graph,
        h: &Graph,
        order: &[usize],
        depth: usize,
        image: &mut Vec<usize>,
        used: &mut VertexSet,
        sig_g: &[(usize, Vec<usize>)],
        sig_h: &[(usize, Vec<usize>)],
        count_all: bool,
    ) -> u64 {
        if depth == order.len() {
            return 1;
        }
        let v = order[depth];
        let mut found = 0;
        for w in 0..h.n() {
            if used.contains(w) || sig_g[v] != sig_h[w] {
                continue;
            }
            let ok = order[..depth].iter().all(|&u| {
                g.has_edge(v, u) == h.has_edge(w, image[u])
            });
            if !ok {
                continue;
            }
            image[v] = w;
            used.insert(w);
            found += go(g, h, order, depth + 1, image, used, sig_g, sig_h, count_all);
            used.remove(w);
            image[v] = usize::MAX;
            if found > 0 && !count_all {
                return found;
            }
        }
        found
    }
    go(
        g, h, &order, 0, &mut image, &mut used, &sig_g, &sig_h, count_all,
    )
}

/// Graph isomorphism by refinement plus backtracking, intended for small
/// graphs; errors above the cap.
pub fn is_isomorphic_with_cap(g: &Graph, h: &Graph, cap: usize) -> Result<bool> {
    if g.n() > cap || h.n() > cap {
        return Err(Error::BudgetExceeded {
            stage: "is_isomorphic",
            limit: cap,
        });
    }
    if !compatible(g, h) {
        return Ok(false);
    }
    Ok(search_maps(g, h, false) > 0)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    is_isomorphic_with_cap(g, h, DEFAULT_ISO_CAP)
}

/// Number of automorphisms; exhausts the mapping search space.
pub fn count_automorphisms(g: &Graph) -> Result<u64> {
    if g.n() > DEFAULT_ISO_CAP {
        return Err(Error::BudgetExceeded {
            stage: "count_automorphisms",
            limit: DEFAULT_ISO_CAP,
        });
    }
    Ok(search_maps(g, g, true))
}

/// Canonical form: the lexicographically smallest upper-triangle bitstring
/// over all vertex orderings, packed row by row. Two graphs on the same vertex
/// count are isomorphic iff their canonical forms agree. Supports n <= 11
/// (55 triangle bits).
pub fn canonical_form(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n * (n - 1) / 2 > 64 {
        return Err(Error::TooManyVertices { n, max: 11 });
    }
    // branch and bound over orderings, minimizing the packed bitstring
    fn go(
        g: &Graph,
        perm: &mut Vec<usize>,
        remaining: &mut Vec<usize>,
        best: &mut Option<u64>,
        prefix: u64,
        bits_used: u32,
    ) {
        let total = (g.n() * (g.n() - 1) / 2) as u32;
        let k = perm.len();
        if remaining.is_empty() {
            if best.map_or(true, |b| prefix < b) {
                *best = Some(prefix);
            }
            return;
        }
        for idx in 0..remaining.len() {
            let v = remaining[idx];
            // appending v contributes its adjacency column against perm[0..k]
            let mut p = prefix;
            for i in 0..k {
                p = p << 1 | (g.has_edge(perm[i], v) as u64);
            }
            let used = bits_used + k as u32;
            // prune against the incumbent's prefix of equal length
            if let Some(b) = *best {
                if p > b >> (total - used) {
                    continue;
                }
            }
            perm.push(v);
            remaining.swap_remove(idx);
            go(g, perm, remaining, best, p, used);
            // undo the swap_remove so iteration order stays deterministic
            remaining.push(v);
            let last = remaining.len() - 1;
            remaining.swap(idx, last);
            perm.pop();
        }
    }
    let mut best = None;
    let mut perm = Vec::with_capacity(n);
    let mut remaining: Vec<usize> = (0..n).collect();
    go(g, &mut perm, &mut remaining, &mut best, 0, 0);
    Ok(best.unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn iso_basic() {
        let c5a = cycle(5);
        let c5b = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert!(is_isomorphic(&c5a, &c5b).unwrap());
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(!is_isomorphic(&c5a, &p5).unwrap());
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(count_automorphisms(&cycle(5)).unwrap(), 10);
        assert_eq!(count_automorphisms(&cycle(4)).unwrap(), 8);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(count_automorphisms(&k4).unwrap(), 24);
    }

    #[test]
    fn canonical_form_separates_classes() {
        let c5a = cycle(5);
        let c5b = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(canonical_form(&c5a).unwrap(), canonical_form(&c5b).unwrap());
        assert_ne!(canonical_form(&c5a).unwrap(), canonical_form(&p5).unwrap());
    }

    #[test]
    fn canonical_form_is_a_true_minimum() {
        // check against min over all permutations on small graphs
        fn naive(g: &Graph) -> u64 {
            fn perms(n: usize) -> Vec<Vec<usize>> {
                if n == 1 {
                    return vec![vec![0]];
                }
                let mut out = Vec::new();
                for p in perms(n - 1) {
                    for pos in 0..=p.len() {
                        let mut q: Vec<usize> = p.iter().map(|&x| x + 1).collect();
                        q.insert(pos, 0);
                        out.push(q);
                    }
                }
                out
            }
            // interpret q as ordering: position i holds original vertex q[i]
            perms(g.n())
                .into_iter()
                .map(|q| {
                    let mut bits = 0u64;
                    for k in 1..g.n() {
                        for i in 0..k {
                            bits = bits << 1 | (g.has_edge(q[i], q[k]) as u64);
                        }
                    }
                    bits
                })
                .min()
                .unwrap()
        }
        let samples = vec![
            cycle(5),
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
            Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (3, 4)]).unwrap(),
            Graph::new(4).unwrap(),
        ];
        for g in samples {
            assert_eq!(canonical_form(&g).unwrap(), naive(&g), "on {g:?}");
        }
    }
}
