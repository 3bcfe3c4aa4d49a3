//! Minimum-degree peeling: strip vertices of degree below the colour budget,
//! colour the remaining core, then replay the removals in reverse. Each
//! replayed vertex has fewer than `k` coloured neighbours and each forbids at
//! most one colour, so a free colour always exists.

use crate::model::{Colouring, ConflictInstance};
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelStep {
    pub vertex: usize,
    /// Ids (in the original instance) of the edges incident at removal time.
    pub edges: Vec<usize>,
}

/// Removal order of the peel; replayed in reverse by [`extend_peeled`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PeelTrace {
    pub steps: Vec<PeelStep>,
}

impl PeelTrace {
    /// True when every vertex was peeled (the core is empty).
    pub fn covers_all(&self, n: usize) -> bool {
        self.steps.len() == n
    }
}

/// Repeatedly removes the lowest-id vertex of current degree below `k`.
/// The returned core keeps the vertex ids of the input (peeled vertices
/// become isolated) and relabels the surviving edges densely.
pub fn kernelize(inst: &ConflictInstance) -> (ConflictInstance, PeelTrace) {
    let n = inst.graph().vertex_count();
    let k = inst.k();
    let incidence = inst.graph().incidence();
    let mut degree = inst.graph().degrees();
    let mut vertex_alive = vec![true; n];
    let mut edge_alive = vec![true; inst.graph().edge_count()];

    let mut candidates: BTreeSet<usize> = (0..n).filter(|&v| degree[v] < k).collect();
    let mut steps = Vec::new();
    while let Some(&v) = candidates.iter().next() {
        candidates.remove(&v);
        if !vertex_alive[v] || degree[v] >= k {
            continue;
        }
        vertex_alive[v] = false;
        let mut removed_edges = Vec::new();
        for &(e, w) in &incidence[v] {
            if edge_alive[e] {
                edge_alive[e] = false;
                removed_edges.push(e);
                degree[w] -= 1;
                degree[v] -= 1;
                if vertex_alive[w] && degree[w] < k {
                    candidates.insert(w);
                }
            }
        }
        removed_edges.sort_unstable();
        steps.push(PeelStep { vertex: v, edges: removed_edges });
    }

    let mut core_edges = Vec::new();
    let mut core_pairs = Vec::new();
    for (e, alive) in edge_alive.iter().enumerate() {
        if *alive {
            core_edges.push(inst.graph().endpoints(e));
            core_pairs.push(inst.pair(e));
        }
    }
    let core = ConflictInstance::build(n, core_edges, k, core_pairs)
        .expect("surviving edges remain valid");
    (core, PeelTrace { steps })
}

/// Replays a peel trace in reverse on top of a valid core colouring; each
/// vertex takes the lowest colour not forbidden by its recorded edges.
/// Core vertices are never recoloured.
pub fn extend_peeled(
    core_colouring: &Colouring,
    trace: &PeelTrace,
    inst: &ConflictInstance,
) -> Colouring {
    let k = inst.k();
    let mut colours = core_colouring.colours().to_vec();
    for step in trace.steps.iter().rev() {
        let v = step.vertex;
        let mut forbidden = vec![false; k];
        for &e in &step.edges {
            let (a, b) = inst.graph().endpoints(e);
            let w = if a == v { b } else { a };
            // The other endpoint is already final (core, or peeled earlier
            // in replay order); it forbids one colour if its own local
            // colour matches.
            if colours[w] == inst.local_colour(e, w) {
                forbidden[inst.local_colour(e, v) - 1] = true;
            }
        }
        let free = (1..=k)
            .find(|&c| !forbidden[c - 1])
            .expect("fewer than k incident edges leave a free colour");
        colours[v] = free;
    }
    Colouring::new(colours)
}
