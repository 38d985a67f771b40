use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::{VertexSet, MAX_VERTICES};
use crate::DEFAULT_CLIQUE_LIMIT;

/// A finite hypergraph on vertices `0..n-1`.
///
/// The hyperedge list is kept canonical: every edge nonempty, no duplicates,
/// sorted lexicographically by ascending vertex list. Equality of hypergraphs
/// is equality of canonical forms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

fn canonicalize(edges: &mut Vec<VertexSet>) {
    edges.sort_unstable_by(|a, b| a.lex_cmp(*b));
    edges.dedup();
}

impl Hypergraph {
    /// Builds a hypergraph, requiring every vertex to lie in some hyperedge.
    pub fn new(n: usize, edges: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let h = Self::new_allow_uncovered(n, edges)?;
        let covered = h
            .edges
            .iter()
            .fold(VertexSet::EMPTY, |acc, &e| acc.union(e));
        if covered != VertexSet::full(n) {
            let v = covered.complement(n).first().unwrap();
            return Err(Error::InvalidInput(format!(
                "vertex {v} does not belong to any hyperedge"
            )));
        }
        Ok(h)
    }

    /// Relaxed builder that tolerates vertices outside every hyperedge.
    ///
    /// Needed for intermediate states (substitution assembly, neighborhood
    /// hypergraphs of split partitions, duals of non-Sperner inputs).
    pub fn new_allow_uncovered(
        n: usize,
        edges: impl IntoIterator<Item = VertexSet>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("hypergraphs have n >= 1".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let full = VertexSet::full(n);
        let mut edges: Vec<VertexSet> = edges.into_iter().collect();
        for &e in &edges {
            if e.is_empty() {
                return Err(Error::InvalidInput("empty hyperedge".into()));
            }
            if !e.is_subset_of(full) {
                let v = e.difference(full).first().unwrap();
                return Err(Error::VertexOutOfRange { v, n });
            }
        }
        canonicalize(&mut edges);
        Ok(Hypergraph { n, edges })
    }

    /// Convenience constructor from explicit vertex lists.
    pub fn from_edge_lists(n: usize, lists: &[&[usize]]) -> Result<Self> {
        let mut edges = Vec::with_capacity(lists.len());
        for l in lists {
            edges.push(VertexSet::from_vertices(n, l)?);
        }
        Self::new(n, edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Maximum hyperedge size.
    pub fn dim(&self) -> usize {
        self.edges.iter().map(|e| e.len()).max().unwrap_or(0)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Membership test against the canonical edge list.
    pub fn contains_edge(&self, e: VertexSet) -> bool {
        self.edges.binary_search_by(|x| x.lex_cmp(e)).is_ok()
    }

    /// True iff no hyperedge contains another.
    pub fn is_sperner(&self) -> bool {
        for (i, &a) in self.edges.iter().enumerate() {
            for &b in &self.edges[i + 1..] {
                if a.is_subset_of(b) || b.is_subset_of(a) {
                    return false;
                }
            }
        }
        true
    }

    /// The inclusion-minimal hyperedges.
    fn minimal_edges(&self) -> Vec<VertexSet> {
        let mut by_size: Vec<VertexSet> = self.edges.clone();
        by_size.sort_unstable_by_key(|e| e.len());
        let mut kept: Vec<VertexSet> = Vec::with_capacity(by_size.len());
        for e in by_size {
            if !kept.iter().any(|k| k.is_subset_of(e)) {
                kept.push(e);
            }
        }
        kept
    }

    /// Gilmore's criterion: for every triple of hyperedges, the union of the
    /// three pairwise intersections lies inside some hyperedge.
    pub fn is_conformal(&self) -> bool {
        // Sperner inputs admit a faster route: conformal iff equal to the
        // clique hypergraph of the co-occurrence graph.
        if self.is_sperner() {
            if let Ok(c) = self.conformalize() {
                return *self == c;
            }
        }
        let m = self.edges.len();
        for i in 0..m {
            for j in i..m {
                let ij = self.edges[i].intersection(self.edges[j]);
                for k in j..m {
                    let s = ij
                        .union(self.edges[i].intersection(self.edges[k]))
                        .union(self.edges[j].intersection(self.edges[k]));
                    if !self.edges.iter().any(|&e| s.is_subset_of(e)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Graph on the same vertices where `u ~ v` iff some hyperedge contains both.
    pub fn co_occurrence_graph(&self) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for &e in &self.edges {
            for v in e.iter() {
                let mut row = e;
                row.remove(v);
                adj[v] = adj[v].union(row);
            }
        }
        Graph::from_adjacency(self.n, adj).expect("co-occurrence adjacency is symmetric")
    }

    /// The clique hypergraph of the co-occurrence graph. Fixed point exactly on
    /// Sperner conformal inputs; always Sperner and conformal.
    pub fn conformalize(&self) -> Result<Hypergraph> {
        self.co_occurrence_graph()
            .clique_hypergraph_with_limit(DEFAULT_CLIQUE_LIMIT)
    }

    /// All inclusion-minimal transversals (the dual hypergraph, or blocker).
    ///
    /// Sequential construction: hyperedges are folded in one at a time while
    /// maintaining the minimal transversals of the prefix. `limit` bounds the
    /// intermediate and final family size.
    pub fn dualize(&self, limit: usize) -> Result<Hypergraph> {
        if self.edges.is_empty() {
            return Err(Error::InvalidInput(
                "cannot dualize a hypergraph with no hyperedges".into(),
            ));
        }
        // Containment-minimal edges determine the transversals.
        let edges = self.minimal_edges();
        let mut partial: Vec<VertexSet> = vec![VertexSet::EMPTY];
        for &e in &edges {
            let (hitting, missing): (Vec<VertexSet>, Vec<VertexSet>) =
                partial.iter().partition(|t| t.intersects(e));
            // Transversals that already hit `e` stay minimal. Extensions of the
            // others need a minimality filter, smallest first.
            let mut candidates: Vec<VertexSet> = missing
                .iter()
                .flat_map(|&t| e.iter().map(move |v| t.union(VertexSet::singleton(v))))
                .collect();
            candidates.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
            candidates.dedup();
            let mut next = hitting;
            for c in candidates {
                if !next.iter().any(|k| k.is_subset_of(c)) {
                    next.push(c);
                }
            }
            if next.len() > limit {
                return Err(Error::BudgetExceeded {
                    stage: "dualize",
                    limit,
                });
            }
            partial = next;
        }
        Hypergraph::new_allow_uncovered(self.n, partial)
    }

    /// Is `s` contained in some minimal transversal?
    ///
    /// Decided without enumerating the dual: search for hyperedges
    /// `e_v` with `e_v ∩ S = {v}` (one per `v ∈ S`) whose union, minus `S`,
    /// contains no hyperedge.
    pub fn is_subtransversal(&self, s: VertexSet) -> Result<bool> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        // E_v(S) per vertex of S; any empty bucket refutes immediately.
        let mut buckets: Vec<(usize, Vec<VertexSet>)> = Vec::with_capacity(s.len());
        for v in s.iter() {
            let evs: Vec<VertexSet> = self
                .edges
                .iter()
                .copied()
                .filter(|e| e.intersection(s) == VertexSet::singleton(v))
                .collect();
            if evs.is_empty() {
                return Ok(false);
            }
            buckets.push((v, evs));
        }
        // Most constrained vertex first.
        buckets.sort_unstable_by_key(|(_, evs)| evs.len());
        let disjoint: Vec<VertexSet> = self
            .edges
            .iter()
            .copied()
            .filter(|e| !e.intersects(s))
            .collect();
        fn search(
            buckets: &[(usize, Vec<VertexSet>)],
            depth: usize,
            union: VertexSet,
            s: VertexSet,
            disjoint: &[VertexSet],
        ) -> bool {
            let outside = union.difference(s);
            if disjoint.iter().any(|e| e.is_subset_of(outside)) {
                return false; // the union already swallowed a hyperedge
            }
            if depth == buckets.len() {
                return true;
            }
            buckets[depth]
                .1
                .iter()
                .any(|&e| search(buckets, depth + 1, union.union(e), s, disjoint))
        }
        Ok(search(&buckets, 0, VertexSet::EMPTY, s, &disjoint))
    }

    /// All maximal sets meeting every hyperedge at most once; equivalently the
    /// maximal independent sets of the co-occurrence graph.
    pub fn antiblocker(&self) -> Result<Hypergraph> {
        let g = self.co_occurrence_graph();
        let cliques = g
            .complement()
            .maximal_cliques_with_limit(DEFAULT_CLIQUE_LIMIT)?;
        Hypergraph::new(self.n, cliques)
    }
}

/// Vertex re-indexing produced by substitution: the inner graph's vertices come
/// first, then the outer graph's vertices except the replaced one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubstitutionMap {
    /// Inner (substituted) vertex -> new index.
    pub inner: Vec<usize>,
    /// Outer vertex -> new index; `None` for the replaced vertex.
    pub outer: Vec<Option<usize>>,
}

impl SubstitutionMap {
    pub(crate) fn build(outer_n: usize, inner_n: usize, v: usize) -> Self {
        let inner = (0..inner_n).collect();
        let mut outer = Vec::with_capacity(outer_n);
        let mut next = inner_n;
        for u in 0..outer_n {
            if u == v {
                outer.push(None);
            } else {
                outer.push(Some(next));
                next += 1;
            }
        }
        SubstitutionMap { inner, outer }
    }
}

/// Substitutes `f` for vertex `v` of `g`: edges avoiding `v` survive, and every
/// edge through `v` is replaced by its combinations with the edges of `f`.
pub fn substitute_hypergraph(
    g: &Hypergraph,
    v: usize,
    f: &Hypergraph,
) -> Result<(Hypergraph, SubstitutionMap)> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { v, n: g.n() });
    }
    let n = f.n() + g.n() - 1;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let map = SubstitutionMap::build(g.n(), f.n(), v);
    let relabel_outer = |e: VertexSet| -> VertexSet {
        e.iter()
            .filter(|&u| u != v)
            .map(|u| map.outer[u].unwrap())
            .collect()
    };
    let mut edges = Vec::new();
    for &ge in g.edges() {
        if !ge.contains(v) {
            edges.push(relabel_outer(ge));
        } else {
            let stem = relabel_outer(ge);
            for &fe in f.edges() {
                edges.push(stem.union(fe));
            }
        }
    }
    // Intermediate states may leave vertices uncovered only if v had degree 0,
    // which valid inputs exclude; keep the relaxed path for relaxed inputs.
    let h = Hypergraph::new_allow_uncovered(n, edges)?;
    Ok((h, map))
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(n={}, {{", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}})")
    }
}
