use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::DEFAULT_CLIQUE_LIMIT;

/// Vertex cap for the exponential invariants (clique cover, localizable).
pub const DEFAULT_INVARIANT_CAP: usize = 20;

/// Maximum cardinality of an independent set, via maximal-clique enumeration
/// on the complement.
pub fn independence_number(g: &Graph) -> Result<usize> {
    let cliques = g.complement().maximal_cliques_with_limit(DEFAULT_CLIQUE_LIMIT)?;
    Ok(cliques.iter().map(|c| c.len()).max().unwrap_or(0))
}

/// Minimum vertex cover size: `n - α`.
pub fn vertex_cover_number(g: &Graph) -> Result<usize> {
    Ok(g.n() - independence_number(g)?)
}

/// Maximum matching size, general graphs (blossom contraction).
pub fn matching_number(g: &Graph) -> usize {
    let n = g.n();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    // greedy warm start
    for v in 0..n {
        if mate[v].is_none() {
            if let Some(u) = g.neighbors(v).iter().find(|&u| mate[u].is_none()) {
                mate[v] = Some(u);
                mate[u] = Some(v);
            }
        }
    }
    for root in 0..n {
        if mate[root].is_none() {
            try_augment(g, root, &mut mate);
        }
    }
    mate.iter().flatten().count() / 2
}

/// BFS over the alternating forest rooted at `root`, contracting blossoms via
/// the `base` array; flips the augmenting path if one is found.
fn try_augment(g: &Graph, root: usize, mate: &mut [Option<usize>]) -> bool {
    let n = g.n();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut outer = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    outer[root] = true;
    queue.push_back(root);

    while let Some(v) = queue.pop_front() {
        for to in g.neighbors(v).iter() {
            if base[v] == base[to] || mate[v] == Some(to) {
                continue;
            }
            if to == root || mate[to].map_or(false, |m| parent[m].is_some()) {
                // both endpoints are outer: an odd cycle closes, contract it
                let curbase = {
                    let mut marked = vec![false; n];
                    let mut a = v;
                    loop {
                        a = base[a];
                        marked[a] = true;
                        match mate[a].and_then(|m| parent[m]) {
                            Some(p) => a = p,
                            None => break,
                        }
                    }
                    let mut b = to;
                    loop {
                        b = base[b];
                        if marked[b] {
                            break b;
                        }
                        b = parent[mate[b].expect("non-root tree vertices are matched")]
                            .expect("alternating path reaches the root");
                    }
                };
                let mut blossom = vec![false; n];
                for (mut x, mut child) in [(v, to), (to, v)] {
                    while base[x] != curbase {
                        let m = mate[x].expect("blossom vertices below the base are matched");
                        blossom[base[x]] = true;
                        blossom[base[m]] = true;
                        parent[x] = Some(child);
                        child = m;
                        x = parent[m].expect("even vertices above the root have parents");
                    }
                }
                for i in 0..n {
                    if blossom[base[i]] {
                        base[i] = curbase;
                        if !outer[i] {
                            outer[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to].is_none() {
                parent[to] = Some(v);
                match mate[to] {
                    None => {
                        // augmenting path: flip matched edges back to the root
                        let mut cur = to;
                        loop {
                            let p = parent[cur].expect("alternating path reaches the root");
                            let next = mate[p];
                            mate[cur] = Some(p);
                            mate[p] = Some(cur);
                            match next {
                                Some(nx) => cur = nx,
                                None => break,
                            }
                        }
                        return true;
                    }
                    Some(m) => {
                        if !outer[m] {
                            outer[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
    }
    false
}

/// Minimum number of cliques covering all vertices (chromatic number of the
/// complement), exact via recursion over maximal independent sets.
pub fn clique_cover_number(g: &Graph) -> Result<usize> {
    if g.n() > DEFAULT_INVARIANT_CAP {
        return Err(Error::BudgetExceeded {
            stage: "clique_cover_number",
            limit: DEFAULT_INVARIANT_CAP,
        });
    }
    chromatic_number(&g.complement())
}

fn chromatic_number(g: &Graph) -> Result<usize> {
    // color classes are independent sets; the lowest uncolored vertex always
    // joins a maximal one
    fn go(
        g: &Graph,
        s: VertexSet,
        memo: &mut HashMap<u64, usize>,
        bound: usize,
    ) -> Result<usize> {
        if s.is_empty() {
            return Ok(0);
        }
        if bound == 0 {
            return Ok(usize::MAX - 1); // pruned
        }
        if let Some(&v) = memo.get(&s.bits()) {
            return Ok(v);
        }
        let v = s.first().unwrap();
        let (sub, vertices) = g.induced_subgraph(s)?;
        let v_local = vertices.iter().position(|&x| x == v).unwrap();
        let mut best = usize::MAX - 1;
        let independents = sub
            .complement()
            .maximal_cliques_with_limit(DEFAULT_CLIQUE_LIMIT)?;
        for ind in independents {
            if !ind.contains(v_local) {
                continue;
            }
            let chosen: VertexSet = ind.iter().map(|i| vertices[i]).collect();
            let rest = go(g, s.difference(chosen), memo, best.saturating_sub(1))?;
            best = best.min(1 + rest);
        }
        memo.insert(s.bits(), best);
        Ok(best)
    }
    let mut memo = HashMap::new();
    go(g, VertexSet::full(g.n()), &mut memo, g.n())
}

/// Vertex cover number equals matching number.
pub fn is_konig_egervary(g: &Graph) -> Result<bool> {
    Ok(vertex_cover_number(g)? == matching_number(g))
}

/// All maximal independent sets share one cardinality.
pub fn is_well_covered(g: &Graph) -> Result<bool> {
    let mis = g.complement().maximal_cliques_with_limit(DEFAULT_CLIQUE_LIMIT)?;
    Ok(mis.windows(2).all(|w| w[0].len() == w[1].len()))
}

/// Is `c` a clique meeting every maximal independent set?
pub fn is_strong_clique(g: &Graph, c: VertexSet) -> Result<bool> {
    if c.is_empty() || !g.is_clique(c) {
        return Ok(false);
    }
    let mis = g.complement().maximal_cliques_with_limit(DEFAULT_CLIQUE_LIMIT)?;
    Ok(mis.iter().all(|&m| m.intersects(c)))
}

/// Can the vertex set be partitioned into strong cliques?
pub fn is_localizable(g: &Graph) -> Result<bool> {
    if g.n() > DEFAULT_INVARIANT_CAP {
        return Err(Error::BudgetExceeded {
            stage: "is_localizable",
            limit: DEFAULT_INVARIANT_CAP,
        });
    }
    let mis = g.complement().maximal_cliques_with_limit(DEFAULT_CLIQUE_LIMIT)?;
    let strong = |c: VertexSet| mis.iter().all(|&m| m.intersects(c));
    // cover the lowest uncovered vertex by some strong clique, remembering
    // vertex sets that already failed
    fn go(
        g: &Graph,
        remaining: VertexSet,
        strong: &dyn Fn(VertexSet) -> bool,
        dead: &mut std::collections::HashSet<u64>,
    ) -> bool {
        if remaining.is_empty() {
            return true;
        }
        if dead.contains(&remaining.bits()) {
            return false;
        }
        let v = remaining.first().unwrap();
        // enumerate cliques within `remaining` containing v
        let mut stack = vec![(VertexSet::singleton(v), g.neighbors(v).intersection(remaining))];
        while let Some((clique, ext)) = stack.pop() {
            if strong(clique) && go(g, remaining.difference(clique), strong, dead) {
                return true;
            }
            for u in ext.iter() {
                let bigger = clique.union(VertexSet::singleton(u));
                let next_ext: VertexSet = ext
                    .intersection(g.neighbors(u))
                    .iter()
                    .filter(|&w| w > u)
                    .collect();
                stack.push((bigger, next_ext));
            }
        }
        dead.insert(remaining.bits());
        false
    }
    let mut dead = std::collections::HashSet::new();
    Ok(go(g, VertexSet::full(g.n()), &strong, &mut dead))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{corona, generate, FamilySpec};

    fn path(n: usize) -> Graph {
        generate(&FamilySpec::Path(n)).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        generate(&FamilySpec::Cycle(n)).unwrap()
    }

    fn complete(n: usize) -> Graph {
        generate(&FamilySpec::Complete(n)).unwrap()
    }

    /// Exponential matching oracle: take or skip the lowest vertex.
    pub(crate) fn matching_bruteforce(g: &Graph) -> usize {
        fn go(g: &Graph, s: VertexSet, memo: &mut HashMap<u64, usize>) -> usize {
            let v = match s.first() {
                None => return 0,
                Some(v) => v,
            };
            if let Some(&m) = memo.get(&s.bits()) {
                return m;
            }
            let mut rest = s;
            rest.remove(v);
            let mut best = go(g, rest, memo);
            for u in g.neighbors(v).intersection(rest).iter() {
                let mut r2 = rest;
                r2.remove(u);
                best = best.max(1 + go(g, r2, memo));
            }
            memo.insert(s.bits(), best);
            best
        }
        go(g, VertexSet::full(g.n()), &mut HashMap::new())
    }

    fn alpha_bruteforce(g: &Graph) -> usize {
        (0..(1u64 << g.n()))
            .map(VertexSet::from_bits)
            .filter(|&s| g.is_independent_set(s))
            .map(|s| s.len())
            .max()
            .unwrap()
    }

    #[test]
    fn alpha_tau_examples() {
        assert_eq!(independence_number(&cycle(5)).unwrap(), 2);
        assert_eq!(independence_number(&path(5)).unwrap(), 3);
        assert_eq!(vertex_cover_number(&complete(4)).unwrap(), 3);
        for g in [path(6), cycle(7), complete(3), corona(&cycle(5)).unwrap()] {
            assert_eq!(independence_number(&g).unwrap(), alpha_bruteforce(&g));
        }
    }

    #[test]
    fn matching_matches_bruteforce() {
        let samples = vec![
            path(7),
            cycle(5),
            cycle(9),
            complete(6),
            corona(&cycle(5)).unwrap(),
            // two triangles sharing structure that needs blossoms
            Graph::from_edges(
                8,
                &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6), (6, 7)],
            )
            .unwrap(),
        ];
        for g in samples {
            assert_eq!(matching_number(&g), matching_bruteforce(&g), "on {g:?}");
        }
    }

    #[test]
    fn matching_exhaustive_small() {
        // all labeled graphs on 5 vertices
        for bits in 0u64..(1 << 10) {
            let mut g = Graph::new(5).unwrap();
            let mut k = 0;
            for i in 0..5 {
                for j in i + 1..5 {
                    if bits >> k & 1 == 1 {
                        g.add_edge(i, j).unwrap();
                    }
                    k += 1;
                }
            }
            assert_eq!(matching_number(&g), matching_bruteforce(&g), "bits={bits}");
        }
    }

    #[test]
    fn clique_cover_examples() {
        assert_eq!(clique_cover_number(&complete(5)).unwrap(), 1);
        assert_eq!(clique_cover_number(&cycle(5)).unwrap(), 3);
        assert_eq!(clique_cover_number(&path(4)).unwrap(), 2);
    }

    #[test]
    fn konig_egervary_and_well_covered() {
        // bipartite graphs are König-Egerváry
        for g in [path(6), cycle(6), cycle(8)] {
            assert!(is_konig_egervary(&g).unwrap());
        }
        assert!(!is_konig_egervary(&cycle(5)).unwrap());
        assert!(is_well_covered(&cycle(4)).unwrap());
        assert!(is_well_covered(&path(4)).unwrap());
        assert!(!is_well_covered(&path(3)).unwrap()); // {0,2} vs {1}
        assert!(is_well_covered(&corona(&cycle(5)).unwrap()).unwrap());
    }

    #[test]
    fn strong_cliques_and_localizable() {
        let c5 = cycle(5);
        // no strong edge in C5
        for (u, v) in c5.edges() {
            assert!(!is_strong_clique(&c5, VertexSet::from_slice(&[u, v])).unwrap());
        }
        assert!(!is_localizable(&c5).unwrap());
        // corona of C5: pendant edges are strong, and they partition V
        let g = corona(&c5).unwrap();
        for v in 0..5 {
            assert!(is_strong_clique(&g, VertexSet::from_slice(&[v, v + 5])).unwrap());
        }
        assert!(is_localizable(&g).unwrap());
        assert!(is_localizable(&complete(4)).unwrap());
    }
}
