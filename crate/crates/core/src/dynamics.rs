use std::collections::BTreeMap;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::{DEFAULT_DUAL_LIMIT, DEFAULT_MAX_STATES};

/// One step of the alternating walk. Dualization steps carry their edge type:
/// the number of conformal endpoints (2 closes a two-cycle, 0 cannot occur on
/// more than one vertex).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepLabel {
    Conformalize,
    Dualize { edge_type: u8 },
}

impl StepLabel {
    pub fn letter(self) -> char {
        match self {
            StepLabel::Conformalize => 'c',
            StepLabel::Dualize { .. } => 'd',
        }
    }
}

/// The walk of a hypergraph under alternating conformalization and
/// dualization, with self-loops collapsed away.
///
/// `states` are the distinct hypergraphs visited; `labels[i]` is the operation
/// applied to `states[i]` (the last label closes the cycle back to
/// `states[tail_length]`). The `period` is the cycle length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    pub states: Vec<Hypergraph>,
    pub labels: Vec<StepLabel>,
    pub tail_length: usize,
    pub period: usize,
}

impl Trajectory {
    /// Edge types of the dualization steps, in walk order.
    pub fn d_edge_types(&self) -> Vec<u8> {
        self.labels
            .iter()
            .filter_map(|l| match l {
                StepLabel::Dualize { edge_type } => Some(*edge_type),
                StepLabel::Conformalize => None,
            })
            .collect()
    }
}

/// Walk outcome; single-vertex hypergraphs are fixed points of both
/// operations and produce no cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrajectoryOutcome {
    SingleVertexFixedPoint,
    Periodic(Trajectory),
}

/// Iterates conformalize/dualize alternately from `h`, collapsing self-loops,
/// until a state repeats. Deterministic: states are compared by canonical form
/// under the fixed vertex labeling.
pub fn trajectory(h: &Hypergraph, max_states: usize, limit: usize) -> Result<TrajectoryOutcome> {
    if h.n() == 1 {
        return Ok(TrajectoryOutcome::SingleVertexFixedPoint);
    }
    let mut states = vec![h.clone()];
    let mut labels = Vec::new();
    let mut seen: HashMap<Hypergraph, usize> = HashMap::new();
    seen.insert(h.clone(), 0);
    let mut apply_c = true;
    loop {
        if states.len() > max_states {
            return Err(Error::BudgetExceeded {
                stage: "trajectory",
                limit: max_states,
            });
        }
        let cur = states.last().unwrap();
        let next = if apply_c {
            cur.conformalize()?
        } else {
            cur.dualize(limit)?
        };
        let label = if apply_c {
            StepLabel::Conformalize
        } else {
            let edge_type = cur.is_conformal() as u8 + next.is_conformal() as u8;
            StepLabel::Dualize { edge_type }
        };
        apply_c = !apply_c;
        if next == *cur {
            continue; // loop edge, dropped from the walk
        }
        labels.push(label);
        if let Some(&j) = seen.get(&next) {
            let period = states.len() - j;
            return Ok(TrajectoryOutcome::Periodic(Trajectory {
                states,
                labels,
                tail_length: j,
                period,
            }));
        }
        seen.insert(next.clone(), states.len());
        states.push(next);
    }
}

/// Cycle length of the walk; `None` for the single-vertex fixed point.
pub fn period(h: &Hypergraph, max_states: usize, limit: usize) -> Result<Option<usize>> {
    match trajectory(h, max_states, limit)? {
        TrajectoryOutcome::SingleVertexFixedPoint => Ok(None),
        TrajectoryOutcome::Periodic(t) => Ok(Some(t.period)),
    }
}

pub fn period_default(h: &Hypergraph) -> Result<Option<usize>> {
    period(h, DEFAULT_MAX_STATES, DEFAULT_DUAL_LIMIT)
}

/// Aggregate of a period scan over a stream of graphs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PeriodSummary {
    /// period -> number of graphs
    pub counts: BTreeMap<usize, usize>,
    /// graphs skipped as single-vertex fixed points
    pub fixed_points: usize,
    /// indices (into the input stream) of graphs with period > 2
    pub offenders: Vec<usize>,
}

impl PeriodSummary {
    pub fn max_period(&self) -> usize {
        self.counts.keys().copied().max().unwrap_or(0)
    }

    pub fn merge(&mut self, other: &PeriodSummary) {
        for (&p, &c) in &other.counts {
            *self.counts.entry(p).or_insert(0) += c;
        }
        self.fixed_points += other.fixed_points;
        self.offenders.extend_from_slice(&other.offenders);
    }
}

/// Computes the period of every graph's clique hypergraph. After one
/// conformalization any walk lives in clique hypergraphs, so seeding with
/// graphs covers the reachable cycles. The reporter sees records in input
/// order.
pub fn scan_periods(
    graphs: &[Graph],
    max_states: usize,
    limit: usize,
    mut reporter: impl FnMut(usize, &Graph, Option<usize>, usize),
) -> Result<PeriodSummary> {
    let mut summary = PeriodSummary::default();
    for (i, g) in graphs.iter().enumerate() {
        let outcome = trajectory(&g.clique_hypergraph()?, max_states, limit)?;
        match outcome {
            TrajectoryOutcome::SingleVertexFixedPoint => {
                summary.fixed_points += 1;
                reporter(i, g, None, 0);
            }
            TrajectoryOutcome::Periodic(t) => {
                *summary.counts.entry(t.period).or_insert(0) += 1;
                if t.period > 2 {
                    summary.offenders.push(i);
                }
                reporter(i, g, Some(t.period), t.tail_length);
            }
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use crate::fixtures;

    #[test]
    fn single_vertex_is_a_fixed_point() {
        let h = Hypergraph::from_edge_lists(1, &[&[0]]).unwrap();
        assert_eq!(
            trajectory(&h, 64, 1000).unwrap(),
            TrajectoryOutcome::SingleVertexFixedPoint
        );
        assert_eq!(period_default(&h).unwrap(), None);
    }

    #[test]
    fn cdc_graph_gives_period_two() {
        let p4 = generate(&FamilySpec::Path(4)).unwrap();
        let h = p4.clique_hypergraph().unwrap();
        let t = match trajectory(&h, 64, 1000).unwrap() {
            TrajectoryOutcome::Periodic(t) => t,
            _ => panic!("expected a cycle"),
        };
        assert_eq!(t.period, 2);
        assert_eq!(t.tail_length, 0);
        assert_eq!(t.states.len(), 2);
        assert_eq!(t.states[1], h.dualize(1000).unwrap());
        // both transitions are dualizations of type 2
        assert_eq!(t.d_edge_types(), vec![2, 2]);
    }

    #[test]
    fn c5_reaches_the_complete_edgeless_pair() {
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        let h = c5.clique_hypergraph().unwrap();
        let t = match trajectory(&h, 64, 10000).unwrap() {
            TrajectoryOutcome::Periodic(t) => t,
            _ => panic!("expected a cycle"),
        };
        // hand-iterated: C(C5) -> dual (5 triples) -> conformalize = {V} ->
        // dual = singletons -> conformalize = singletons (loop) -> dual = {V}
        assert_eq!(t.period, 2);
        assert_eq!(t.tail_length, 2);
        let full = Hypergraph::from_edge_lists(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        let singletons =
            Hypergraph::from_edge_lists(5, &[&[0], &[1], &[2], &[3], &[4]]).unwrap();
        assert_eq!(t.states[2], full);
        assert_eq!(t.states[3], singletons);
    }

    #[test]
    fn period_four_on_the_nine_vertex_pair()
    {
        let h = fixtures::non_cdc_pair_cliques();
        assert_eq!(period_default(&h).unwrap(), Some(4));
    }

    #[test]
    fn trajectory_determinism() {
        let h = fixtures::period_eight_seed();
        let a = trajectory(&h, 64, 100000).unwrap();
        let b = trajectory(&h, 64, 100000).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn invariants_along_the_walk() {
        for spec in [
            FamilySpec::Cycle(5),
            FamilySpec::Cycle(6),
            FamilySpec::Comb(3),
            FamilySpec::Path(6),
        ] {
            let g = generate(&spec).unwrap();
            let t = match trajectory(&g.clique_hypergraph().unwrap(), 64, 100000).unwrap() {
                TrajectoryOutcome::Periodic(t) => t,
                _ => unreachable!(),
            };
            assert!(t.period >= 2 && t.period % 2 == 0, "{spec:?}");
            // no type-0 dualization, and period 2 iff some type-2 edge
            let types = t.d_edge_types();
            assert!(types.iter().all(|&x| x == 1 || x == 2));
            assert_eq!(t.period == 2, types.contains(&2), "{spec:?}");
            // every state after the seed is Sperner; every dualization source
            // is conformal
            for s in &t.states[1..] {
                assert!(s.is_sperner());
            }
            for (i, l) in t.labels.iter().enumerate() {
                if matches!(l, StepLabel::Dualize { .. }) {
                    assert!(t.states[i].is_conformal());
                }
            }
            // labels never show two conformalizations in a row
            for w in t.labels.windows(2) {
                assert!(
                    !(w[0] == StepLabel::Conformalize && w[1] == StepLabel::Conformalize)
                );
            }
        }
    }

    #[test]
    fn scan_period_reporting() {
        let graphs: Vec<Graph> = (1..=5)
            .map(|n| generate(&FamilySpec::Complete(n)).unwrap())
            .collect();
        let mut seen = Vec::new();
        let summary = scan_periods(&graphs, 64, 1000, |i, _, p, tail| {
            seen.push((i, p, tail));
        })
        .unwrap();
        assert_eq!(summary.fixed_points, 1);
        assert_eq!(summary.counts.get(&2), Some(&4));
        assert!(summary.offenders.is_empty());
        assert_eq!(seen[0], (0, None, 0));
        assert_eq!(seen[1], (1, Some(2), 0));
        // empty stream -> empty histogram
        let empty = scan_periods(&[], 64, 1000, |_, _, _, _| {}).unwrap();
        assert!(empty.counts.is_empty());
    }
}
