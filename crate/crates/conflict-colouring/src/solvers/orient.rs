//! Minimum-maximum-outdegree orientations by path reversal, and the
//! colouring solver built on them.
//!
//! The minimum achievable maximum outdegree equals the maximum over vertex
//! subsets S of ceil(|E(G[S])| / |S|); an orientation of maximum outdegree
//! strictly below the colour budget is valid for every local partition, so
//! it immediately yields a colouring.

use crate::model::{Colouring, ConflictInstance, Multigraph, Orientation};
use std::collections::VecDeque;

#[derive(Debug, Clone)]
pub struct OrientationSolve {
    /// Minimum achievable maximum outdegree.
    pub k_star: usize,
    pub orientation: Orientation,
}

/// Outcome of [`solve_via_orientation`]: never claims unsatisfiability.
#[derive(Debug, Clone)]
pub enum ViaOrientation {
    Colouring { colouring: Colouring, k_star: usize },
    /// The graph is too dense for the budget (`k_star >= k`).
    NotApplicable { k_star: usize },
}

/// Tries to orient all edges with maximum outdegree at most `target` by
/// repeatedly reversing a directed path from an overloaded vertex to one
/// with spare capacity. Returns the head vector on success.
fn orient_with_max_outdegree(g: &Multigraph, target: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if m == 0 {
        return Some(Vec::new());
    }
    if n == 0 {
        return None;
    }
    let mut head: Vec<usize> = g.edges().iter().map(|&(_, v)| v).collect();
    let mut outdeg = vec![0usize; n];
    // out[v] holds edge ids currently leaving v (lazily compacted).
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, &(u, _)) in g.edges().iter().enumerate() {
        out[u].push(e);
        outdeg[u] += 1;
    }

    loop {
        let Some(start) = (0..n).find(|&v| outdeg[v] > target) else {
            return Some(head);
        };
        // BFS along edge directions for a vertex with outdegree < target.
        let mut parent_edge = vec![usize::MAX; n];
        let mut visited = vec![false; n];
        let mut queue = VecDeque::new();
        visited[start] = true;
        queue.push_back(start);
        let mut sink = None;
        'bfs: while let Some(v) = queue.pop_front() {
            for &e in &out[v] {
                if head[e] == v {
                    continue; // stale entry, e no longer leaves v
                }
                let w = head[e];
                if visited[w] {
                    continue;
                }
                visited[w] = true;
                parent_edge[w] = e;
                if outdeg[w] < target {
                    sink = Some(w);
                    break 'bfs;
                }
                queue.push_back(w);
            }
        }
        let Some(mut w) = sink else {
            // Everything reachable from the overloaded vertex already has
            // outdegree >= target, so the induced density exceeds target.
            return None;
        };
        // Reverse the path: the overloaded start loses one out-edge, the
        // sink gains one.
        while w != start {
            let e = parent_edge[w];
            let (a, b) = g.endpoints(e);
            let tail = if head[e] == a { b } else { a };
            head[e] = tail;
            out[w].push(e);
            outdeg[w] += 1;
            outdeg[tail] -= 1;
            w = tail;
        }
    }
}

/// Finds an orientation whose maximum outdegree is minimum, by binary search
/// over the target outdegree.
pub fn solve_orientation(g: &Multigraph) -> OrientationSolve {
    let max_degree = g.degrees().iter().copied().max().unwrap_or(0);
    let mut lo = 0usize;
    let mut hi = max_degree;
    let mut best = orient_with_max_outdegree(g, hi).expect("degree bound is always feasible");
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        match orient_with_max_outdegree(g, mid) {
            Some(head) => {
                best = head;
                hi = mid;
            }
            None => lo = mid + 1,
        }
    }
    OrientationSolve { k_star: lo, orientation: Orientation::new(best) }
}

/// Colours the instance through an orientation when the graph is sparse
/// enough (`k_star < k`); otherwise reports not-applicable.
pub fn solve_via_orientation(inst: &ConflictInstance) -> ViaOrientation {
    let solve = solve_orientation(inst.graph());
    if solve.k_star >= inst.k() {
        return ViaOrientation::NotApplicable { k_star: solve.k_star };
    }
    // Outdegree below k means no vertex's out-colours can cover [k].
    let colouring = inst
        .colouring_from_orientation(&solve.orientation)
        .expect("orientation with outdegree below k is valid");
    ViaOrientation::Colouring { colouring, k_star: solve.k_star }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adversary;

    /// Minimum maximum outdegree by brute force over all 2^m orientations.
    fn brute_force_k_star(g: &Multigraph) -> usize {
        let m = g.edge_count();
        let n = g.vertex_count();
        assert!(m <= 16);
        let mut best = usize::MAX;
        for mask in 0..(1u32 << m) {
            let mut outdeg = vec![0usize; n];
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                let tail = if mask & (1 << e) == 0 { u } else { v };
                outdeg[tail] += 1;
            }
            best = best.min(outdeg.iter().copied().max().unwrap_or(0));
        }
        best
    }

    /// max over nonempty S of ceil(|E(G[S])| / |S|).
    fn max_density(g: &Multigraph) -> usize {
        let n = g.vertex_count();
        assert!(n <= 20);
        let mut best = 0;
        for mask in 1u32..(1 << n) {
            let size = mask.count_ones() as usize;
            let edges = g
                .edges()
                .iter()
                .filter(|&&(u, v)| mask & (1 << u) != 0 && mask & (1 << v) != 0)
                .count();
            best = best.max(edges.div_ceil(size));
        }
        best
    }

    #[test]
    fn cycle_orients_cyclically() {
        let g = Multigraph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let s = solve_orientation(&g);
        assert_eq!(s.k_star, 1);
    }

    #[test]
    fn k4_needs_outdegree_two() {
        let g = adversary::gen_complete_multigraph(4, 1).unwrap();
        let s = solve_orientation(&g);
        assert_eq!(s.k_star, brute_force_k_star(&g));
        assert_eq!(s.k_star, 2);
    }

    #[test]
    fn parallel_edges_split_evenly() {
        let g = Multigraph::new(2, vec![(0, 1); 4]).unwrap();
        let s = solve_orientation(&g);
        assert_eq!(s.k_star, brute_force_k_star(&g));
        assert_eq!(s.k_star, 2);
    }

    #[test]
    fn empty_graph() {
        let g = Multigraph::new(3, vec![]).unwrap();
        assert_eq!(solve_orientation(&g).k_star, 0);
    }

    #[test]
    fn matches_brute_force_and_density() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.random_range(2..=7);
            let m = rng.random_range(0..=12);
            let edges: Vec<(usize, usize)> = (0..m)
                .map(|_| {
                    let u = rng.random_range(0..n);
                    let mut v = rng.random_range(0..n);
                    while v == u {
                        v = rng.random_range(0..n);
                    }
                    (u, v)
                })
                .collect();
            let g = Multigraph::new(n, edges).unwrap();
            let s = solve_orientation(&g);
            let expected = brute_force_k_star(&g);
            assert_eq!(s.k_star, expected);
            assert_eq!(s.k_star, max_density(&g));
            // The returned orientation must achieve k_star.
            let mut outdeg = vec![0usize; n];
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                let head = s.orientation.head(e);
                outdeg[if head == v { u } else { v }] += 1;
            }
            assert_eq!(outdeg.iter().copied().max().unwrap_or(0), s.k_star);
        }
    }

    #[test]
    fn tree_instances_colourable_with_two() {
        let g = Multigraph::new(5, vec![(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let inst = adversary::gen_random_partition(&g, 2, 99);
        match solve_via_orientation(&inst) {
            ViaOrientation::Colouring { colouring, k_star } => {
                assert_eq!(k_star, 1);
                assert!(inst.validate_colouring(&colouring).unwrap().is_empty());
            }
            ViaOrientation::NotApplicable { .. } => panic!("trees are 1-degenerate"),
        }
    }

    #[test]
    fn triangulation_instances_colourable_with_four() {
        let g = adversary::gen_planar_triangulation(30, 7).unwrap();
        let inst = adversary::gen_random_partition(&g, 4, 3);
        match solve_via_orientation(&inst) {
            ViaOrientation::Colouring { colouring, k_star } => {
                assert!(k_star <= 3);
                assert!(inst.validate_colouring(&colouring).unwrap().is_empty());
            }
            ViaOrientation::NotApplicable { .. } => panic!("planar density is at most 3"),
        }
    }

    #[test]
    fn dense_two_vertex_not_applicable() {
        let inst = adversary::gen_two_vertex(2);
        match solve_via_orientation(&inst) {
            ViaOrientation::NotApplicable { k_star } => assert_eq!(k_star, 2),
            ViaOrientation::Colouring { .. } => panic!("k_star = 2 is not below k = 2"),
        }
    }
}
