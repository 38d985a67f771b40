use crate::error::{Error, Result};
use crate::graph::{Graph, SplitPartition};
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;
use crate::DEFAULT_DUAL_LIMIT;

/// Which decision procedure produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecognitionMethod {
    P4Free,
    TriangleFree,
    Split,
    BruteForce,
}

impl RecognitionMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            RecognitionMethod::P4Free => "p4free",
            RecognitionMethod::TriangleFree => "trianglefree",
            RecognitionMethod::Split => "split",
            RecognitionMethod::BruteForce => "bruteforce",
        }
    }
}

/// A perfect matching of bisimplicial edges, in the vertex ids of the reduced
/// component it certifies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BisimplicialMatching {
    pub edges: Vec<(usize, usize)>,
}

/// Per-component reduction: vertices, twin classes (class k becomes vertex k
/// of the reduced graph), and the reduced graph itself.
#[derive(Debug, Clone)]
pub struct ComponentReduction {
    pub vertices: Vec<usize>,
    pub twin_classes: Vec<Vec<usize>>,
    pub reduced: Graph,
}

/// The component/twin-contraction steps taken before the matching test; enough
/// to lift certificates back to the input graph.
#[derive(Debug, Clone)]
pub struct ReductionTrace {
    pub n: usize,
    pub components: Vec<ComponentReduction>,
}

impl ReductionTrace {
    /// Undoes the reduction: expands every twin class and reassembles the
    /// components on the original vertex ids. Equals the input graph.
    pub fn replay(&self) -> Result<Graph> {
        let mut g = Graph::new(self.n)?;
        for comp in &self.components {
            for (i, ci) in comp.twin_classes.iter().enumerate() {
                for (j, cj) in comp.twin_classes.iter().enumerate() {
                    if j > i && comp.reduced.has_edge(i, j) {
                        for &u in ci {
                            for &v in cj {
                                g.add_edge(u, v)?;
                            }
                        }
                    }
                }
            }
        }
        Ok(g)
    }
}

/// Certificate for a positive triangle-free verdict: the reduction trace plus
/// one bisimplicial perfect matching per reduced component (`None` for
/// single-vertex components).
#[derive(Debug, Clone)]
pub struct TriangleFreeCertificate {
    pub trace: ReductionTrace,
    pub matchings: Vec<Option<BisimplicialMatching>>,
}

/// Outcome of a CDC decision.
#[derive(Debug, Clone)]
pub struct CdcVerdict {
    pub is_cdc: bool,
    pub method: RecognitionMethod,
    /// On a negative verdict: a maximal clique of the clique-dual that is not
    /// a minimal clique transversal. Specialized recognizers leave this empty;
    /// see [`find_non_cdc_witness`].
    pub witness: Option<VertexSet>,
    pub certificate: Option<TriangleFreeCertificate>,
}

/// Is `{u,v}` a bisimplicial edge: every neighbor of `u` adjacent to every
/// neighbor of `v`?
pub fn is_bisimplicial_edge(g: &Graph, u: usize, v: usize) -> Result<bool> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    for x in g.neighbors(u).iter() {
        for y in g.neighbors(v).iter() {
            // a common neighbor (x == y) is not adjacent to itself
            if x == y || !g.has_edge(x, y) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Triangle-free reformulation: `{u,v}` is bisimplicial iff it is not the
/// middle edge of any induced path on four vertices.
pub fn is_bisimplicial_edge_p4(g: &Graph, u: usize, v: usize) -> Result<bool> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    for x in g.neighbors(u).iter() {
        if x == v {
            continue;
        }
        for y in g.neighbors(v).iter() {
            if y == u || y == x {
                continue;
            }
            // x-u-v-y induced needs x !~ v, y !~ u, x !~ y
            if !g.has_edge(x, v) && !g.has_edge(y, u) && !g.has_edge(x, y) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Records the component split and twin contraction that reduce the CDC
/// question on a triangle-free graph to twin-free connected pieces.
pub fn justify_reduction(g: &Graph) -> ReductionTrace {
    let mut components = Vec::new();
    for comp in g.components() {
        let (sub, vertices) = g
            .induced_subgraph(comp)
            .expect("components are nonempty");
        let classes_local = sub.twins();
        let twin_classes: Vec<Vec<usize>> = classes_local
            .iter()
            .map(|c| c.iter().map(|i| vertices[i]).collect())
            .collect();
        let reps: Vec<usize> = classes_local.iter().map(|c| c.first().unwrap()).collect();
        let mut reduced = Graph::new(reps.len()).expect("at least one class");
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                if sub.has_edge(reps[i], reps[j]) {
                    reduced.add_edge(i, j).unwrap();
                }
            }
        }
        components.push(ComponentReduction {
            vertices,
            twin_classes,
            reduced,
        });
    }
    ReductionTrace {
        n: g.n(),
        components,
    }
}

/// Decides the CDC property for a triangle-free graph.
///
/// Splits into components, contracts twin classes, then checks each reduced
/// component: a single vertex qualifies, and otherwise every vertex must be
/// the endpoint of exactly one bisimplicial edge, those edges forming a
/// perfect matching. Components and twin expansion preserve the property in
/// both directions, so the verdicts combine by conjunction.
pub fn recognize_triangle_free_cdc(g: &Graph) -> Result<CdcVerdict> {
    if !g.is_triangle_free() {
        return Err(Error::NotTriangleFree);
    }
    let trace = justify_reduction(g);
    let mut matchings = Vec::with_capacity(trace.components.len());
    let mut all_ok = true;
    for comp in &trace.components {
        let r = &comp.reduced;
        if r.n() == 1 {
            matchings.push(None);
            continue;
        }
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); r.n()];
        for (u, v) in r.edges() {
            if is_bisimplicial_edge(r, u, v)? {
                incident[u].push(v);
                incident[v].push(u);
            }
        }
        if incident.iter().any(|p| p.len() != 1) {
            all_ok = false;
            matchings.push(None);
            continue;
        }
        let edges: Vec<(usize, usize)> = incident
            .iter()
            .enumerate()
            .filter(|(v, p)| *v < p[0])
            .map(|(v, p)| (v, p[0]))
            .collect();
        debug_assert_eq!(edges.len() * 2, r.n());
        matchings.push(Some(BisimplicialMatching { edges }));
    }
    Ok(CdcVerdict {
        is_cdc: all_ok,
        method: RecognitionMethod::TriangleFree,
        witness: None,
        certificate: if all_ok {
            Some(TriangleFreeCertificate { trace, matchings })
        } else {
            None
        },
    })
}

/// The neighborhood hypergraph of a split partition: vertex set `I`
/// (re-indexed densely), one hyperedge `N(v) ∩ I` per clique vertex `v`.
/// Equal neighborhoods collapse to one hyperedge; `sources` remembers which
/// clique vertices produced each one.
#[derive(Debug, Clone)]
pub struct NeighborhoodHypergraph {
    pub hypergraph: Hypergraph,
    /// Dense index -> original vertex id of `I`.
    pub i_vertices: Vec<usize>,
    /// Per canonical hyperedge, the clique vertices with that neighborhood.
    pub sources: Vec<Vec<usize>>,
}

pub fn neighborhood_hypergraph(g: &Graph, p: &SplitPartition) -> Result<NeighborhoodHypergraph> {
    let i_vertices: Vec<usize> = p.independent.iter().collect();
    let rank = |v: usize| i_vertices.binary_search(&v).unwrap();
    let mut edges: Vec<(VertexSet, usize)> = Vec::new();
    for v in p.clique.iter() {
        let e: VertexSet = g
            .neighbors(v)
            .intersection(p.independent)
            .iter()
            .map(rank)
            .collect();
        edges.push((e, v));
    }
    let hypergraph =
        Hypergraph::new_allow_uncovered(i_vertices.len().max(1), edges.iter().map(|&(e, _)| e))?;
    let sources = hypergraph
        .edges()
        .iter()
        .map(|&he| {
            edges
                .iter()
                .filter(|&&(e, _)| e == he)
                .map(|&(_, v)| v)
                .collect()
        })
        .collect();
    Ok(NeighborhoodHypergraph {
        hypergraph,
        i_vertices,
        sources,
    })
}

/// The Sperner-private property, via its reformulation: fails exactly when
/// some hyperedge is contained in the union of the hyperedges incomparable
/// with it.
pub fn sp_property(h: &Hypergraph) -> bool {
    for (i, &e) in h.edges().iter().enumerate() {
        let mut union = VertexSet::EMPTY;
        for (j, &f) in h.edges().iter().enumerate() {
            if i != j && !f.is_subset_of(e) && !e.is_subset_of(f) {
                union = union.union(f);
            }
        }
        if e.is_subset_of(union) {
            return false;
        }
    }
    true
}

/// For a split partition whose clique is a maximal clique: do all minimal
/// subsets of `I` dominating `K` have size exactly two? Size one is excluded
/// by the maximality of `K`, so this reduces to the absence of subtransversals
/// of size three in the neighborhood hypergraph.
pub fn is_two_well_dominated(g: &Graph, p: &SplitPartition) -> Result<bool> {
    if !p.i_maximal {
        return Err(Error::Precondition("independent side must be maximal"));
    }
    if !p.k_maximal {
        return Err(Error::Precondition("clique side must be a maximal clique"));
    }
    let nh = neighborhood_hypergraph(g, p)?;
    let m = nh.i_vertices.len();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                let s = VertexSet::from_slice(&[a, b, c]);
                if nh.hypergraph.is_subtransversal(s)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Decides the CDC property for a split graph: the neighborhood hypergraph
/// must have the Sperner-private property, and when the clique side is a
/// maximal clique the graph must additionally be 2-well-dominated.
pub fn recognize_split_cdc(g: &Graph) -> Result<CdcVerdict> {
    let p = g.split_partition().ok_or(Error::NotSplit)?;
    let nh = neighborhood_hypergraph(g, &p)?;
    let ok = sp_property(&nh.hypergraph) && (!p.k_maximal || is_two_well_dominated(g, &p)?);
    Ok(CdcVerdict {
        is_cdc: ok,
        method: RecognitionMethod::Split,
        witness: None,
        certificate: None,
    })
}

/// Produces a concrete offending clique for a non-CDC graph via the
/// brute-force path. `None` when the graph is CDC after all.
pub fn find_non_cdc_witness(g: &Graph, limit: usize) -> Result<Option<VertexSet>> {
    Ok(g.is_cdc_bruteforce(limit)?.witness)
}

/// Dispatcher: picks the fastest applicable method.
///
/// P4-free graphs are CDC outright; triangle-free and split graphs go to the
/// specialized recognizers; everything else falls back to the brute-force
/// oracle under `limit`.
pub fn is_cdc_with_limit(g: &Graph, limit: usize) -> Result<CdcVerdict> {
    if g.is_p4_free() {
        return Ok(CdcVerdict {
            is_cdc: true,
            method: RecognitionMethod::P4Free,
            witness: None,
            certificate: None,
        });
    }
    if g.is_triangle_free() {
        return recognize_triangle_free_cdc(g);
    }
    if g.is_split() {
        return recognize_split_cdc(g);
    }
    g.is_cdc_bruteforce(limit)
}

pub fn is_cdc(g: &Graph) -> Result<CdcVerdict> {
    is_cdc_with_limit(g, DEFAULT_DUAL_LIMIT)
}
