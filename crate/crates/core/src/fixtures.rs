//! Reference instances used by the regression and acceptance suites.
//!
//! Vertex ids in the original 1-based descriptions are shifted to 0-based
//! here; the nine-vertex instances below keep their structure bit for bit.

use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

fn hg(n: usize, lists: &[&[usize]]) -> Hypergraph {
    Hypergraph::from_edge_lists(n, lists).expect("fixture data is valid")
}

/// Clique hypergraph of the nine-vertex graph whose clique-dual pairs it with
/// a second non-CDC graph (both satisfy `G^cc = G`). Original labels 1..9.
pub fn non_cdc_pair_cliques() -> Hypergraph {
    hg(
        9,
        &[
            &[0, 1, 2],
            &[0, 1, 3],
            &[0, 2, 7],
            &[0, 7, 8],
            &[1, 2, 5],
            &[1, 3, 4],
            &[2, 5, 6],
        ],
    )
}

/// The graph itself (co-occurrence graph of its clique hypergraph).
pub fn non_cdc_pair_graph() -> Graph {
    non_cdc_pair_cliques().co_occurrence_graph()
}

/// The twelve distinct published minimal clique transversals of
/// [`non_cdc_pair_graph`]; the printed list duplicates one entry, so the full
/// dual has thirteen hyperedges. The recovered thirteenth set is
/// [`non_cdc_pair_recovered_transversal`].
pub fn non_cdc_pair_dual_published() -> Vec<Vec<usize>> {
    vec![
        vec![0, 1, 2],
        vec![0, 1, 5],
        vec![0, 2, 3],
        vec![0, 2, 4],
        vec![0, 3, 5],
        vec![0, 4, 5],
        vec![1, 2, 7],
        vec![1, 2, 8],
        vec![1, 5, 7],
        vec![1, 6, 7],
        vec![2, 3, 7],
        vec![2, 3, 8],
    ]
}

/// The transversal missing from the printed list (its slot was occupied by a
/// duplicate). Verified against the brute-force dual in the test suite.
pub fn non_cdc_pair_recovered_transversal() -> Vec<usize> {
    vec![0, 1, 6]
}

pub fn non_cdc_pair_dual_size() -> usize {
    13
}

/// The offending set: a maximal clique of the clique-dual that is not a
/// minimal clique transversal. Original labels {4, 6, 8}.
pub fn non_cdc_pair_witness() -> Vec<usize> {
    vec![3, 5, 7]
}

/// Clique hypergraph of the nine-vertex graph isomorphic to both its
/// complement and its clique-dual. Original labels 1..9.
pub fn self_dual_nine_cliques() -> Hypergraph {
    hg(
        9,
        &[
            &[0, 3, 7],
            &[0, 5, 7],
            &[0, 6, 7],
            &[1, 4, 6],
            &[2, 5, 7],
            &[2, 5, 8],
            &[2, 6, 7],
            &[2, 6, 8],
            &[4, 6, 7],
            &[4, 6, 8],
        ],
    )
}

pub fn self_dual_nine_graph() -> Graph {
    self_dual_nine_cliques().co_occurrence_graph()
}

/// Published dual of [`self_dual_nine_cliques`] (ten hyperedges).
pub fn self_dual_nine_dual() -> Hypergraph {
    hg(
        9,
        &[
            &[0, 2, 4],
            &[0, 2, 6],
            &[0, 5, 6],
            &[1, 7, 8],
            &[2, 4, 7],
            &[2, 6, 7],
            &[3, 5, 6],
            &[4, 7, 8],
            &[5, 6, 7],
            &[6, 7, 8],
        ],
    )
}

/// Seed of the published period-8 walk: 21 pairs on nine vertices
/// (already 0-based in the source).
pub fn period_eight_seed() -> Hypergraph {
    hg(
        9,
        &[
            &[0, 3],
            &[0, 5],
            &[0, 7],
            &[0, 8],
            &[1, 6],
            &[1, 8],
            &[2, 3],
            &[2, 4],
            &[2, 5],
            &[2, 8],
            &[3, 4],
            &[3, 7],
            &[4, 5],
            &[4, 6],
            &[4, 7],
            &[4, 8],
            &[5, 6],
            &[5, 7],
            &[6, 7],
            &[6, 8],
            &[7, 8],
        ],
    )
}

/// The published states after the seed, in walk order (alternating
/// conformalize/dualize). The ninth entry equals the first: the walk closes
/// with period 8 after a tail of length 1.
pub fn period_eight_states() -> Vec<Hypergraph> {
    vec![
        // after c
        hg(
            9,
            &[
                &[0, 3, 7],
                &[0, 5, 7],
                &[0, 7, 8],
                &[1, 6, 8],
                &[2, 3, 4],
                &[2, 4, 5],
                &[2, 4, 8],
                &[3, 4, 7],
                &[4, 5, 6, 7],
                &[4, 6, 7, 8],
            ],
        ),
        // after cd
        hg(
            9,
            &[
                &[0, 1, 4],
                &[0, 2, 3, 6],
                &[0, 4, 6],
                &[0, 4, 8],
                &[1, 2, 7],
                &[1, 4, 7],
                &[2, 6, 7],
                &[2, 7, 8],
                &[3, 5, 8],
                &[4, 6, 7],
                &[4, 7, 8],
            ],
        ),
        // after cdc
        hg(
            9,
            &[
                &[0, 1, 2],
                &[0, 1, 4],
                &[0, 2, 3, 6],
                &[0, 2, 3, 8],
                &[0, 4, 6],
                &[0, 4, 8],
                &[1, 2, 7],
                &[1, 4, 7],
                &[2, 6, 7],
                &[2, 7, 8],
                &[3, 5, 8],
                &[4, 6, 7],
                &[4, 7, 8],
            ],
        ),
        // after cdcd
        hg(
            9,
            &[
                &[0, 3, 7],
                &[0, 5, 7],
                &[0, 7, 8],
                &[1, 3, 4, 7],
                &[1, 6, 8],
                &[2, 3, 4],
                &[2, 4, 5],
                &[2, 4, 8],
            ],
        ),
        // after cdcdc
        hg(
            9,
            &[
                &[0, 3, 7],
                &[0, 5, 7],
                &[0, 7, 8],
                &[1, 3, 4, 7],
                &[1, 4, 7, 8],
                &[1, 6, 8],
                &[2, 3, 4],
                &[2, 4, 5],
                &[2, 4, 8],
                &[4, 5, 7],
            ],
        ),
        // after cdcdcd
        hg(
            9,
            &[
                &[0, 1, 2, 5],
                &[0, 1, 4],
                &[0, 4, 6],
                &[0, 4, 8],
                &[1, 2, 7],
                &[1, 4, 7],
                &[2, 6, 7],
                &[2, 7, 8],
                &[3, 5, 8],
                &[4, 6, 7],
                &[4, 7, 8],
            ],
        ),
        // after cdcdcdc
        hg(
            9,
            &[
                &[0, 1, 2, 5],
                &[0, 1, 4],
                &[0, 2, 5, 8],
                &[0, 2, 6],
                &[0, 4, 6],
                &[0, 4, 8],
                &[1, 2, 7],
                &[1, 4, 7],
                &[2, 6, 7],
                &[2, 7, 8],
                &[3, 5, 8],
                &[4, 6, 7],
                &[4, 7, 8],
            ],
        ),
        // after cdcdcdcd
        hg(
            9,
            &[
                &[0, 3, 7],
                &[0, 5, 7],
                &[0, 7, 8],
                &[1, 6, 8],
                &[2, 3, 4],
                &[2, 4, 5],
                &[2, 4, 8],
                &[4, 5, 6, 7],
            ],
        ),
        // after cdcdcdcdc — equal to the first state above
        hg(
            9,
            &[
                &[0, 3, 7],
                &[0, 5, 7],
                &[0, 7, 8],
                &[1, 6, 8],
                &[2, 3, 4],
                &[2, 4, 5],
                &[2, 4, 8],
                &[3, 4, 7],
                &[4, 5, 6, 7],
                &[4, 6, 7, 8],
            ],
        ),
    ]
}

/// The fifteen-vertex triangle-free CDC graph that is not König-Egerváry:
/// the corona of a five-cycle with each degree-3 vertex split into a twin
/// pair. Built here by literal substitution so the construction itself is
/// exercised.
pub fn non_konig_egervary_cdc_graph() -> Graph {
    let c5 = crate::families::generate(&crate::families::FamilySpec::Cycle(5)).unwrap();
    let mut g = crate::families::corona(&c5).unwrap();
    let two_k1 = Graph::new(2).unwrap();
    // the degree-3 vertices of the corona are the original cycle vertices;
    // indices shift with every substitution, so track the remaining targets
    // through the returned maps
    let mut targets: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 3).collect();
    assert_eq!(targets.len(), 5);
    while let Some(v) = targets.pop() {
        let (next, map) = g.substitute(v, &two_k1).unwrap();
        g = next;
        for t in &mut targets {
            *t = map.outer[*t].unwrap();
        }
    }
    g
}
