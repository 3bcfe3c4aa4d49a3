//! Complete backtracking search: the ground-truth decision procedure.

use crate::model::{Colouring, ConflictInstance};
use std::time::{Duration, Instant};

/// Optional node and wall-time budgets for the exact search.
#[derive(Debug, Clone, Copy, Default)]
pub struct SearchLimits {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl SearchLimits {
    pub fn none() -> Self {
        SearchLimits::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        SearchLimits { max_nodes: Some(max_nodes), max_time: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactOutcome {
    Colouring(Colouring),
    /// Complete search exhausted every branch.
    Unsatisfiable,
    /// The budget ran out first; never conflated with unsatisfiable.
    BudgetExhausted,
}

#[derive(Debug, Clone)]
pub struct ExactResult {
    pub outcome: ExactOutcome,
    /// Vertex assignments attempted.
    pub nodes: u64,
}

struct Search<'a> {
    inst: &'a ConflictInstance,
    /// Vertices in descending-degree order (ties by id).
    order: Vec<usize>,
    /// incident[v] = (other endpoint, local colour at v, local colour at other).
    incident: Vec<Vec<(usize, usize, usize)>>,
    colour: Vec<usize>,
    /// forbid[v][c-1] = number of coloured neighbours forcing v away from c.
    forbid: Vec<Vec<u32>>,
    nodes: u64,
    limits: SearchLimits,
    started: Instant,
    exhausted: bool,
}

impl<'a> Search<'a> {
    fn new(inst: &'a ConflictInstance, limits: SearchLimits) -> Self {
        let n = inst.graph().vertex_count();
        let deg = inst.graph().degrees();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
        let mut incident = vec![Vec::new(); n];
        for (e, &(u, v)) in inst.graph().edges().iter().enumerate() {
            let (lu, lv) = inst.pair(e);
            incident[u].push((v, lu, lv));
            incident[v].push((u, lv, lu));
        }
        Search {
            inst,
            order,
            incident,
            colour: vec![0; n],
            forbid: vec![vec![0; inst.k()]; n],
            nodes: 0,
            limits,
            started: Instant::now(),
            exhausted: false,
        }
    }

    fn budget_hit(&mut self) -> bool {
        if let Some(max) = self.limits.max_nodes {
            if self.nodes >= max {
                self.exhausted = true;
                return true;
            }
        }
        if let Some(max) = self.limits.max_time {
            if self.nodes.is_multiple_of(1024) && self.started.elapsed() >= max {
                self.exhausted = true;
                return true;
            }
        }
        false
    }

    fn dfs(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let v = self.order[pos];
        for c in 1..=self.inst.k() {
            if self.forbid[v][c - 1] > 0 {
                continue;
            }
            self.nodes += 1;
            if self.budget_hit() {
                return false;
            }
            self.colour[v] = c;
            // A neighbour w is forced away from its local colour on every
            // edge whose local colour at v equals c.
            for i in 0..self.incident[v].len() {
                let (w, lv, lw) = self.incident[v][i];
                if self.colour[w] == 0 && lv == c {
                    self.forbid[w][lw - 1] += 1;
                }
            }
            if self.dfs(pos + 1) {
                return true;
            }
            for i in 0..self.incident[v].len() {
                let (w, lv, lw) = self.incident[v][i];
                if self.colour[w] == 0 && lv == c {
                    self.forbid[w][lw - 1] -= 1;
                }
            }
            self.colour[v] = 0;
            if self.exhausted {
                return false;
            }
        }
        false
    }
}

/// Backtracking over vertices in descending-degree order, colours ascending,
/// with forbidden-colour propagation to uncoloured neighbours.
pub fn solve_exact(inst: &ConflictInstance, limits: &SearchLimits) -> ExactResult {
    let mut search = Search::new(inst, *limits);
    if search.dfs(0) {
        let colouring = Colouring::new(search.colour);
        debug_assert!(inst.validate_colouring(&colouring).unwrap().is_empty());
        ExactResult { outcome: ExactOutcome::Colouring(colouring), nodes: search.nodes }
    } else if search.exhausted {
        ExactResult { outcome: ExactOutcome::BudgetExhausted, nodes: search.nodes }
    } else {
        ExactResult { outcome: ExactOutcome::Unsatisfiable, nodes: search.nodes }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ConflictInstance;

    fn forced_edge(k: usize) -> ConflictInstance {
        ConflictInstance::build(2, vec![(0, 1)], k, vec![(1, 1)]).unwrap()
    }

    /// Brute force over all k^n colourings, for cross-checking.
    fn enumerate_satisfiable(inst: &ConflictInstance) -> bool {
        let n = inst.graph().vertex_count();
        let k = inst.k();
        let mut assignment = vec![1usize; n];
        loop {
            let c = Colouring::new(assignment.clone());
            if inst.validate_colouring(&c).unwrap().is_empty() {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                if assignment[i] < k {
                    assignment[i] += 1;
                    break;
                }
                assignment[i] = 1;
                i += 1;
            }
        }
    }

    #[test]
    fn forced_edge_unsat_at_one_colour() {
        let res = solve_exact(&forced_edge(1), &SearchLimits::none());
        assert_eq!(res.outcome, ExactOutcome::Unsatisfiable);
    }

    #[test]
    fn forced_edge_sat_at_two_colours() {
        let inst = forced_edge(2);
        let res = solve_exact(&inst, &SearchLimits::none());
        match res.outcome {
            ExactOutcome::Colouring(c) => {
                assert!(inst.validate_colouring(&c).unwrap().is_empty())
            }
            other => panic!("expected colouring, got {other:?}"),
        }
    }

    #[test]
    fn two_vertex_full_pairs() {
        let full = ConflictInstance::build(
            2,
            vec![(0, 1); 4],
            2,
            vec![(1, 1), (1, 2), (2, 1), (2, 2)],
        )
        .unwrap();
        assert!(!enumerate_satisfiable(&full));
        let res = solve_exact(&full, &SearchLimits::none());
        assert_eq!(res.outcome, ExactOutcome::Unsatisfiable);

        // Same graph at budget 3: only 4 of the 9 pairs are forbidden.
        let wider = full.with_budget(3).unwrap();
        assert!(enumerate_satisfiable(&wider));
        let res = solve_exact(&wider, &SearchLimits::none());
        assert!(matches!(res.outcome, ExactOutcome::Colouring(_)));
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let inst = forced_edge(1);
        let res = solve_exact(&inst, &SearchLimits::nodes(1));
        assert_eq!(res.outcome, ExactOutcome::BudgetExhausted);
        assert_eq!(res.nodes, 1);
    }

    #[test]
    fn matches_enumeration_on_random_instances() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..400 {
            let n = rng.random_range(1..=6);
            let m = rng.random_range(0..=8);
            let k = rng.random_range(1..=3);
            let edges: Vec<(usize, usize)> = (0..m)
                .filter_map(|_| {
                    if n < 2 {
                        return None;
                    }
                    let u = rng.random_range(0..n);
                    let mut v = rng.random_range(0..n);
                    while v == u {
                        v = rng.random_range(0..n);
                    }
                    Some((u, v))
                })
                .collect();
            let pairs: Vec<(usize, usize)> = edges
                .iter()
                .map(|_| (rng.random_range(1..=k), rng.random_range(1..=k)))
                .collect();
            let inst = ConflictInstance::build(n, edges, k, pairs).unwrap();
            let expected = enumerate_satisfiable(&inst);
            let res = solve_exact(&inst, &SearchLimits::none());
            match res.outcome {
                ExactOutcome::Colouring(c) => {
                    assert!(expected);
                    assert!(inst.validate_colouring(&c).unwrap().is_empty());
                }
                ExactOutcome::Unsatisfiable => assert!(!expected),
                ExactOutcome::BudgetExhausted => panic!("no budget was set"),
            }
        }
    }
}
