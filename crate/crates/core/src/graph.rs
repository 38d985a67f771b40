use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, SubstitutionMap};
use crate::recognizers::{CdcVerdict, RecognitionMethod};
use crate::set::{VertexSet, MAX_VERTICES};
use crate::{DEFAULT_CLIQUE_LIMIT, DEFAULT_DUAL_LIMIT};

/// A simple undirected graph on vertices `0..n-1`, adjacency stored as one
/// bitmask row per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// How to compute the clique-dual.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualMode {
    /// Enumerate all minimal clique transversals, then project to a graph.
    Full,
    /// Decide each vertex pair by a subtransversal test; never builds the dual.
    Pairwise,
}

/// A split partition `(K, I)` of a graph: `K` a clique, `I` an independent set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
    /// `I` is a maximal independent set (every clique vertex has a neighbor in `I`).
    pub i_maximal: bool,
    /// `K` is a maximal clique.
    pub k_maximal: bool,
}

impl Graph {
    /// An edgeless graph on `n >= 1` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("graphs have n >= 1".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds from adjacency rows, verifying symmetry and irreflexivity.
    pub fn from_adjacency(n: usize, adj: Vec<VertexSet>) -> Result<Self> {
        if n == 0 || adj.len() != n {
            return Err(Error::InvalidInput("adjacency length must equal n >= 1".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let full = VertexSet::full(n);
        for (u, &row) in adj.iter().enumerate() {
            if row.contains(u) {
                return Err(Error::InvalidInput(format!("self-loop at {u}")));
            }
            if !row.is_subset_of(full) {
                return Err(Error::VertexOutOfRange {
                    v: row.difference(full).first().unwrap(),
                    n,
                });
            }
            for v in row.iter() {
                if !adj[v].contains(u) {
                    return Err(Error::InvalidInput(format!(
                        "asymmetric adjacency between {u} and {v}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(Error::InvalidInput(format!("self-loop at {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].union(VertexSet::singleton(v))
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn complement(&self) -> Graph {
        let adj = (0..self.n)
            .map(|v| {
                let mut row = self.adj[v].complement(self.n);
                row.remove(v);
                row
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// Neighborhood of a set: vertices outside `s` with a neighbor in `s`.
    pub fn set_neighborhood(&self, s: VertexSet) -> VertexSet {
        s.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
            .difference(s)
    }

    /// Induced subgraph plus the list of original vertex ids, in order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        let vertices: Vec<usize> = s.iter().collect();
        if vertices.is_empty() {
            return Err(Error::InvalidInput("induced subgraph needs a vertex".into()));
        }
        let mut g = Graph::new(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok((g, vertices))
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen.contains(v) {
                continue;
            }
            let mut comp = VertexSet::singleton(v);
            let mut frontier = VertexSet::singleton(v);
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for u in frontier.iter() {
                    next = next.union(self.adj[u]);
                }
                frontier = next.difference(comp);
                comp = comp.union(frontier);
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s;
            rest.remove(v);
            rest.is_subset_of(self.adj[v])
        })
    }

    pub fn is_independent_set(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    pub fn is_maximal_clique(&self, s: VertexSet) -> bool {
        if s.is_empty() || !self.is_clique(s) {
            return false;
        }
        // no outside vertex is adjacent to all of s
        !(0..self.n).any(|v| !s.contains(v) && s.is_subset_of(self.adj[v]))
    }

    pub fn is_maximal_independent_set(&self, s: VertexSet) -> bool {
        self.is_independent_set(s)
            && (0..self.n).all(|v| s.contains(v) || self.adj[v].intersects(s))
    }

    /// All maximal cliques (Bron–Kerbosch with pivoting), canonically ordered.
    /// Isolated vertices yield singleton cliques.
    pub fn maximal_cliques_with_limit(&self, limit: usize) -> Result<Vec<VertexSet>> {
        fn expand(
            g: &Graph,
            r: VertexSet,
            mut p: VertexSet,
            mut x: VertexSet,
            out: &mut Vec<VertexSet>,
            limit: usize,
        ) -> Result<()> {
            if p.is_empty() && x.is_empty() {
                out.push(r);
                if out.len() > limit {
                    return Err(Error::BudgetExceeded {
                        stage: "maximal_cliques",
                        limit,
                    });
                }
                return Ok(());
            }
            // pivot: vertex of P ∪ X with most neighbors in P
            let pivot = p
                .union(x)
                .iter()
                .max_by_key(|&u| g.adj[u].intersection(p).len())
                .unwrap();
            for v in p.difference(g.adj[pivot]).iter() {
                let nv = g.adj[v];
                expand(
                    g,
                    r.union(VertexSet::singleton(v)),
                    p.intersection(nv),
                    x.intersection(nv),
                    out,
                    limit,
                )?;
                p.remove(v);
                x.insert(v);
            }
            Ok(())
        }
        let mut out = Vec::new();
        expand(
            self,
            VertexSet::EMPTY,
            VertexSet::full(self.n),
            VertexSet::EMPTY,
            &mut out,
            limit,
        )?;
        out.sort_unstable_by(|a, b| a.lex_cmp(*b));
        Ok(out)
    }

    pub fn maximal_cliques(&self) -> Result<Vec<VertexSet>> {
        self.maximal_cliques_with_limit(DEFAULT_CLIQUE_LIMIT)
    }

    /// The hypergraph of all maximal cliques; Sperner and conformal, and its
    /// co-occurrence graph is this graph again.
    pub fn clique_hypergraph_with_limit(&self, limit: usize) -> Result<Hypergraph> {
        Hypergraph::new(self.n, self.maximal_cliques_with_limit(limit)?)
    }

    pub fn clique_hypergraph(&self) -> Result<Hypergraph> {
        self.clique_hypergraph_with_limit(DEFAULT_CLIQUE_LIMIT)
    }

    /// The dual of the clique hypergraph: all minimal clique transversals.
    pub fn minimal_clique_transversals(&self, limit: usize) -> Result<Hypergraph> {
        self.clique_hypergraph()?.dualize(limit)
    }

    /// The clique-dual: same vertices, `u ~ v` iff `u` and `v` lie in a common
    /// minimal clique transversal.
    pub fn clique_dual(&self, mode: DualMode, limit: usize) -> Result<Graph> {
        match mode {
            DualMode::Full => Ok(self.minimal_clique_transversals(limit)?.co_occurrence_graph()),
            DualMode::Pairwise => {
                let ch = self.clique_hypergraph()?;
                let mut g = Graph::new(self.n)?;
                for u in 0..self.n {
                    for v in u + 1..self.n {
                        if ch.is_subtransversal(VertexSet::from_slice(&[u, v]))? {
                            g.add_edge(u, v)?;
                        }
                    }
                }
                Ok(g)
            }
        }
    }

    /// Does `x` meet every maximal clique, with every member owning a private
    /// maximal clique?
    pub fn is_minimal_clique_transversal(&self, x: VertexSet) -> Result<bool> {
        let cliques = self.maximal_cliques()?;
        if !cliques.iter().all(|&c| c.intersects(x)) {
            return Ok(false);
        }
        Ok(x.iter().all(|v| {
            cliques
                .iter()
                .any(|&c| c.intersection(x) == VertexSet::singleton(v))
        }))
    }

    /// Reference CDC decision: the maximal cliques of the clique-dual must be
    /// exactly the minimal clique transversals. On failure the witness is the
    /// lexicographically least offending maximal clique of the clique-dual.
    pub fn is_cdc_bruteforce(&self, limit: usize) -> Result<CdcVerdict> {
        let dual = self.minimal_clique_transversals(limit)?;
        let gc = dual.co_occurrence_graph();
        let cliques = gc.maximal_cliques()?;
        // each dual hyperedge is a clique of gc, so set equality reduces to
        // every maximal clique of gc being a hyperedge of the dual
        let witness = cliques.iter().copied().find(|&c| !dual.contains_edge(c));
        Ok(CdcVerdict {
            is_cdc: witness.is_none(),
            method: RecognitionMethod::BruteForce,
            witness,
            certificate: None,
        })
    }

    /// True iff the graphs are each other's clique-duals.
    pub fn are_clique_duals(&self, other: &Graph, limit: usize) -> Result<bool> {
        if self.n != other.n {
            return Ok(false);
        }
        Ok(self.clique_dual(DualMode::Full, limit)? == *other
            && other.clique_dual(DualMode::Full, limit)? == *self)
    }

    /// Substitutes `f` for vertex `v`: disjoint union of `self - v` and `f`,
    /// plus all edges joining `f` to the neighbors of `v`.
    pub fn substitute(&self, v: usize, f: &Graph) -> Result<(Graph, SubstitutionMap)> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        let n = f.n + self.n - 1;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let map = SubstitutionMap::build(self.n, f.n, v);
        let mut g = Graph::new(n)?;
        for (a, b) in f.edges() {
            g.add_edge(a, b)?;
        }
        for (a, b) in self.edges() {
            if a != v && b != v {
                g.add_edge(map.outer[a].unwrap(), map.outer[b].unwrap())?;
            }
        }
        for u in self.adj[v].iter() {
            let nu = map.outer[u].unwrap();
            for w in 0..f.n {
                g.add_edge(nu, w)?;
            }
        }
        Ok((g, map))
    }

    pub fn is_triangle_free(&self) -> bool {
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u && self.adj[u].intersects(self.adj[v]) {
                    return false;
                }
            }
        }
        true
    }

    /// No induced path on four vertices.
    pub fn is_p4_free(&self) -> bool {
        // a 4-subset induces P4 iff it has 3 edges and degree multiset {1,1,2,2}
        for a in 0..self.n {
            for b in a + 1..self.n {
                for c in b + 1..self.n {
                    for d in c + 1..self.n {
                        let s = VertexSet::from_slice(&[a, b, c, d]);
                        let degs: Vec<usize> = s
                            .iter()
                            .map(|v| self.adj[v].intersection(s).len())
                            .collect();
                        let edges: usize = degs.iter().sum::<usize>() / 2;
                        if edges == 3 && degs.iter().filter(|&&x| x == 2).count() == 2 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Partition of the vertices into classes with equal open neighborhoods
    /// (false twins), ordered by smallest member.
    pub fn twins(&self) -> Vec<VertexSet> {
        let mut classes: Vec<(VertexSet, VertexSet)> = Vec::new(); // (neighborhood, members)
        for v in 0..self.n {
            match classes.iter_mut().find(|(nb, _)| *nb == self.adj[v]) {
                Some((_, members)) => members.insert(v),
                None => classes.push((self.adj[v], VertexSet::singleton(v))),
            }
        }
        classes.into_iter().map(|(_, m)| m).collect()
    }

    pub fn is_split(&self) -> bool {
        self.split_partition().is_some()
    }

    /// Split partition by the degree-sequence criterion, normalized so the
    /// independent side is a maximal independent set. Returns `None` when the
    /// graph is not split.
    pub fn split_partition(&self) -> Option<SplitPartition> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_unstable_by(|&a, &b| self.degree(b).cmp(&self.degree(a)).then(a.cmp(&b)));
        let degs: Vec<usize> = order.iter().map(|&v| self.degree(v)).collect();
        let mut m = 0;
        for i in 0..self.n {
            if degs[i] >= i {
                m = i + 1;
            }
        }
        let head: usize = degs[..m].iter().sum();
        let tail: usize = degs[m..].iter().sum();
        if head != m * (m - 1) + tail {
            return None;
        }
        let mut clique: VertexSet = order[..m].iter().copied().collect();
        let mut independent = clique.complement(self.n);
        // move the (at most one, then all others gain a neighbor) clique vertex
        // with no independent-side neighbor
        loop {
            let stray = clique
                .iter()
                .find(|&v| !self.adj[v].intersects(independent));
            match stray {
                Some(v) => {
                    clique.remove(v);
                    independent.insert(v);
                }
                None => break,
            }
        }
        debug_assert!(self.is_clique(clique));
        debug_assert!(self.is_independent_set(independent));
        let k_maximal = !clique.is_empty()
            && !independent
                .iter()
                .any(|v| clique.is_subset_of(self.adj[v]));
        Some(SplitPartition {
            clique,
            independent,
            i_maximal: true,
            k_maximal,
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Default-budget CDC brute force; see [`Graph::is_cdc_bruteforce`].
pub fn is_cdc_bruteforce_default(g: &Graph) -> Result<CdcVerdict> {
    g.is_cdc_bruteforce(DEFAULT_DUAL_LIMIT)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Brute-force maximal cliques over all subsets.
    fn cliques_bruteforce(g: &Graph) -> Vec<VertexSet> {
        let mut out = Vec::new();
        for bits in 1..(1u64 << g.n()) {
            let s = VertexSet::from_bits(bits);
            if g.is_maximal_clique(s) {
                out.push(s);
            }
        }
        out.sort_unstable_by(|a, b| a.lex_cmp(*b));
        out
    }

    #[test]
    fn construction_and_basics() {
        let g = path(4);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(1, 2));
        assert!(!g.has_edge(0, 2));
        assert!(Graph::new(0).is_err());
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert_eq!(g.complement().edge_count(), 3);
        assert_eq!(complete(5).complement().edge_count(), 0);
    }

    #[test]
    fn components_and_isolated() {
        let mut g = Graph::new(5).unwrap();
        g.add_edge(0, 1).unwrap();
        g.add_edge(3, 4).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[1], VertexSet::singleton(2));
        assert_eq!(g.isolated_vertices(), VertexSet::singleton(2));
    }

    #[test]
    fn bron_kerbosch_matches_bruteforce() {
        let samples = vec![
            path(6),
            cycle(5),
            complete(4),
            Graph::new(3).unwrap(),
            Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])
                .unwrap(),
        ];
        for g in samples {
            assert_eq!(
                g.maximal_cliques().unwrap(),
                cliques_bruteforce(&g),
                "on {g:?}"
            );
        }
    }

    #[test]
    fn clique_examples() {
        assert_eq!(complete(4).maximal_cliques().unwrap().len(), 1);
        // clique budget
        assert!(matches!(
            cycle(8).maximal_cliques_with_limit(3),
            Err(Error::BudgetExceeded { .. })
        ));
        // edgeless graph: singletons
        let e3 = Graph::new(3).unwrap();
        let ch = e3.clique_hypergraph().unwrap();
        assert_eq!(ch.edge_count(), 3);
        assert!(ch.edges().iter().all(|e| e.len() == 1));
    }

    #[test]
    fn clique_hypergraph_round_trip() {
        for g in [path(5), cycle(6), complete(3)] {
            let ch = g.clique_hypergraph().unwrap();
            assert!(ch.is_sperner());
            assert!(ch.is_conformal());
            assert_eq!(ch.co_occurrence_graph(), g);
        }
    }

    #[test]
    fn transversals_of_c5() {
        let d = cycle(5).minimal_clique_transversals(1000).unwrap();
        let want =
            Hypergraph::from_edge_lists(5, &[&[0, 1, 3], &[1, 2, 4], &[0, 2, 3], &[1, 3, 4], &[0, 2, 4]])
                .unwrap();
        assert_eq!(d, want);
    }

    #[test]
    fn clique_dual_examples() {
        // complete -> edgeless
        let kd = complete(4).clique_dual(DualMode::Full, 1000).unwrap();
        assert_eq!(kd.edge_count(), 0);
        // C5 -> K5
        let cd = cycle(5).clique_dual(DualMode::Full, 1000).unwrap();
        assert_eq!(cd.edge_count(), 10);
        // modes agree
        for g in [path(5), cycle(6), complete(3), cycle(5)] {
            assert_eq!(
                g.clique_dual(DualMode::Full, 100000).unwrap(),
                g.clique_dual(DualMode::Pairwise, 100000).unwrap()
            );
        }
    }

    #[test]
    fn minimal_clique_transversal_check() {
        let k3 = complete(3);
        assert!(k3
            .is_minimal_clique_transversal(VertexSet::singleton(1))
            .unwrap());
        assert!(!k3
            .is_minimal_clique_transversal(VertexSet::from_slice(&[0, 1]))
            .unwrap());
        let p4 = path(4);
        // {0,3} misses the middle edge {1,2}
        assert!(!p4
            .is_minimal_clique_transversal(VertexSet::from_slice(&[0, 3]))
            .unwrap());
        assert!(p4
            .is_minimal_clique_transversal(VertexSet::from_slice(&[1, 2]))
            .unwrap());
    }

    #[test]
    fn cdc_bruteforce_examples() {
        assert!(path(4).is_cdc_bruteforce(1000).unwrap().is_cdc);
        assert!(cycle(4).is_cdc_bruteforce(1000).unwrap().is_cdc);
        let v = cycle(5).is_cdc_bruteforce(1000).unwrap();
        assert!(!v.is_cdc);
        assert_eq!(v.witness, Some(VertexSet::full(5))); // K5's unique maximal clique
    }

    #[test]
    fn are_clique_duals_examples() {
        let k1 = Graph::new(1).unwrap();
        assert!(k1.are_clique_duals(&k1, 1000).unwrap());
        assert!(!cycle(5).are_clique_duals(&complete(5), 1000).unwrap());
    }

    #[test]
    fn substitution_identity_and_twins() {
        let g = path(4);
        let k1 = Graph::new(1).unwrap();
        let (s, _) = g.substitute(2, &k1).unwrap();
        assert_eq!(s.edge_count(), g.edge_count());
        // twin expansion: substituting 2K1 duplicates a vertex
        let two_k1 = Graph::new(2).unwrap();
        let (t, map) = g.substitute(0, &two_k1).unwrap();
        assert_eq!(t.n(), 5);
        assert_eq!(t.neighbors(0), t.neighbors(1));
        assert_eq!(map.outer[1], Some(2));
    }

    #[test]
    fn predicates() {
        assert!(path(4).is_triangle_free());
        assert!(!complete(3).is_triangle_free());
        assert!(!path(4).is_p4_free());
        assert!(cycle(4).is_p4_free());
        assert!(complete(5).is_p4_free());
        // twins in C4: opposite corners
        let classes = cycle(4).twins();
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[0], VertexSet::from_slice(&[0, 2]));
    }

    #[test]
    fn split_partitions() {
        assert!(cycle(4).split_partition().is_none());
        assert!(path(4).split_partition().is_some());
        let k3 = complete(3);
        let p = k3.split_partition().unwrap();
        assert!(p.i_maximal);
        // K3: one vertex moves to the independent side, K stays non-maximal
        assert_eq!(p.clique.len(), 2);
        assert!(!p.k_maximal);
        // edgeless: everything lands on the independent side
        let e3 = Graph::new(3).unwrap();
        let p = e3.split_partition().unwrap();
        assert!(p.clique.is_empty());
        assert!(!p.k_maximal);
    }
}
