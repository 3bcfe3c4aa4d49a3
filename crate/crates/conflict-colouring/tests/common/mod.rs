//! Shared test support: brute-force oracles independent of the library's
//! solver paths, tiny-graph enumeration, and exact adaptable / separation
//! choosability by pattern enumeration.
//!
//! Each test binary uses its own subset of these helpers.
#![allow(dead_code)]

use conflict_colouring::model::{ConflictInstance, Multigraph};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// First valid colouring by plain odometer enumeration, or None.
pub fn brute_force_colouring(inst: &ConflictInstance) -> Option<Vec<usize>> {
    let n = inst.graph().vertex_count();
    let k = inst.k();
    let edges = inst.graph().edges();
    let pairs = inst.pairs();
    let mut assignment = vec![1usize; n];
    loop {
        let valid = edges
            .iter()
            .zip(pairs)
            .all(|(&(u, v), &(lu, lv))| !(assignment[u] == lu && assignment[v] == lv));
        if valid {
            return Some(assignment);
        }
        let mut i = 0;
        loop {
            if i == n {
                return None;
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

/// First valid orientation (as a head vector) over all 2^m choices, or None.
pub fn brute_force_orientation(inst: &ConflictInstance) -> Option<Vec<usize>> {
    let n = inst.graph().vertex_count();
    let k = inst.k();
    let m = inst.graph().edge_count();
    assert!(m <= 20, "orientation enumeration is 2^m");
    let full: u32 = (1 << k) - 1;
    'mask: for mask in 0..(1u64 << m) {
        let mut out_colours = vec![0u32; n];
        for (e, &(u, v)) in inst.graph().edges().iter().enumerate() {
            let (lu, lv) = inst.pair(e);
            // bit set = head is v, so the edge leaves u.
            if mask & (1 << e) != 0 {
                out_colours[u] |= 1 << (lu - 1);
            } else {
                out_colours[v] |= 1 << (lv - 1);
            }
        }
        for &bits in &out_colours {
            if bits == full {
                continue 'mask;
            }
        }
        let head = inst
            .graph()
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| if mask & (1 << e) != 0 { v } else { u })
            .collect();
        return Some(head);
    }
    None
}

/// Random instance with n in [1, n_max], m in [0, m_max], k in [1, k_max].
pub fn random_instance(rng: &mut ChaCha8Rng, n_max: usize, m_max: usize, k_max: usize) -> ConflictInstance {
    let n = rng.random_range(1..=n_max);
    let m = if n < 2 { 0 } else { rng.random_range(0..=m_max) };
    let k = rng.random_range(1..=k_max);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let u = rng.random_range(0..n);
        let mut v = rng.random_range(0..n);
        while v == u {
            v = rng.random_range(0..n);
        }
        edges.push((u, v));
    }
    let pairs = edges
        .iter()
        .map(|_| (rng.random_range(1..=k), rng.random_range(1..=k)))
        .collect();
    ConflictInstance::build(n, edges, k, pairs).unwrap()
}

/// All labelled simple graphs on `n` vertices with at most `m_max` edges.
pub fn labelled_graphs(n: usize, m_max: usize) -> Vec<Multigraph> {
    let mut slots = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            slots.push((u, v));
        }
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << slots.len()) {
        if (mask.count_ones() as usize) > m_max {
            continue;
        }
        let edges: Vec<(usize, usize)> = slots
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        out.push(Multigraph::new(n, edges).unwrap());
    }
    out
}

/// One representative per isomorphism class (small n only).
pub fn dedup_isomorphic(graphs: Vec<Multigraph>) -> Vec<Multigraph> {
    use std::collections::HashSet;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in graphs {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<(usize, usize)>> = None;
        permute(&mut perm, 0, &mut |p| {
            let mut edges: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (p[u], p[v]);
                    (a.min(b), a.max(b))
                })
                .collect();
            edges.sort_unstable();
            edges.dedup();
            if best.as_ref().is_none_or(|b| edges < *b) {
                best = Some(edges);
            }
        });
        let key = (n, best.unwrap_or_default());
        if seen.insert(key) {
            out.push(g);
        }
    }
    out
}

fn permute(perm: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
    if i == perm.len() {
        f(perm);
        return;
    }
    for j in i..perm.len() {
        perm.swap(i, j);
        permute(perm, i + 1, f);
        perm.swap(i, j);
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// A constraint pattern: per edge, either no constraint or a pair of list
/// positions forced to share one colour value. Realizable patterns are
/// exactly the reduced instances of adaptable (resp. separation) inputs.
#[derive(Clone, Copy, PartialEq)]
enum Mode {
    Adaptable,
    Separation,
}

/// Checks whether a pattern can arise from an actual list assignment:
/// merged slots must stay distinct within each vertex, and for separation
/// each edge's endpoints may share exactly the designated component.
fn realizable(g: &Multigraph, k: usize, pattern: &[Option<(usize, usize)>], mode: Mode) -> bool {
    let n = g.vertex_count();
    let slot = |v: usize, pos: usize| v * k + (pos - 1);
    let mut uf = UnionFind::new(n * k);
    for (e, constraint) in pattern.iter().enumerate() {
        if let Some((a, b)) = constraint {
            let (u, v) = g.endpoints(e);
            uf.union(slot(u, *a), slot(v, *b));
        }
    }
    for v in 0..n {
        for i in 1..=k {
            for j in (i + 1)..=k {
                if uf.find(slot(v, i)) == uf.find(slot(v, j)) {
                    return false;
                }
            }
        }
    }
    if mode == Mode::Separation {
        // Lists realize components as distinct colours, so an edge's lists
        // share exactly the components common to both endpoints.
        for (e, constraint) in pattern.iter().enumerate() {
            let (u, v) = g.endpoints(e);
            let mut shared = 0;
            for i in 1..=k {
                let cu = uf.find(slot(u, i));
                for j in 1..=k {
                    if cu == uf.find(slot(v, j)) {
                        shared += 1;
                    }
                }
            }
            let expected = usize::from(constraint.is_some());
            if shared != expected {
                return false;
            }
        }
    }
    true
}

/// Does every position assignment avoid all constrained pairs somewhere?
fn pattern_colourable(g: &Multigraph, k: usize, pattern: &[Option<(usize, usize)>]) -> bool {
    let n = g.vertex_count();
    let mut assignment = vec![1usize; n];
    loop {
        let ok = pattern.iter().enumerate().all(|(e, c)| match c {
            Some((a, b)) => {
                let (u, v) = g.endpoints(e);
                !(assignment[u] == *a && assignment[v] == *b)
            }
            None => true,
        });
        if ok {
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

/// Every realizable pattern over `[k]` positions is colourable. Position
/// names at each vertex can be permuted independently, so the first edge is
/// only enumerated as unconstrained or pinned to (1, 1).
fn all_patterns_colourable(g: &Multigraph, k: usize, mode: Mode) -> bool {
    let m = g.edge_count();
    if m == 0 {
        return true;
    }
    let choices = k * k + 1; // digit 0 = unconstrained, else pair index + 1
    let decode = |d: usize| {
        if d == 0 {
            None
        } else {
            Some(((d - 1) / k + 1, (d - 1) % k + 1))
        }
    };
    for first in [0usize, 1] {
        // first = 1 decodes to the pinned pair (1, 1)
        let mut digits = vec![0usize; m];
        digits[0] = first;
        loop {
            let pattern: Vec<Option<(usize, usize)>> =
                digits.iter().map(|&d| decode(d)).collect();
            if realizable(g, k, &pattern, mode) && !pattern_colourable(g, k, &pattern) {
                return false;
            }
            let mut i = 1;
            loop {
                if i >= m {
                    break;
                }
                digits[i] += 1;
                if digits[i] < choices {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i >= m {
                break;
            }
        }
    }
    true
}

/// Exact adaptable choosability by pattern enumeration (panics if above cap).
pub fn exact_adaptable_choosability(g: &Multigraph, k_cap: usize) -> usize {
    for k in 1..=k_cap {
        if all_patterns_colourable(g, k, Mode::Adaptable) {
            return k;
        }
    }
    panic!("adaptable choosability above cap {k_cap}");
}

/// Exact separation choosability by pattern enumeration (panics if above cap).
pub fn exact_separation_choosability(g: &Multigraph, k_cap: usize) -> usize {
    for k in 1..=k_cap {
        if all_patterns_colourable(g, k, Mode::Separation) {
            return k;
        }
    }
    panic!("separation choosability above cap {k_cap}");
}
