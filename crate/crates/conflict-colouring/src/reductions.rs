//! Translations into conflict instances: conflict-list assignments on simple
//! graphs, adaptable list colouring, and separation list colouring.
//!
//! List colours are decoded positionally (instance colour `i` at `v` means
//! the `i`-th element of `L(v)`), so reduced instances always use colours
//! `[1, k]` whatever the list contents. Edges that impose no constraint are
//! dropped from the reduced multigraph.

use crate::model::{ConflictInstance, Multigraph};
use crate::{Error, Result};

/// `(u, v, K(u,v))`: one simple edge and its forbidden ordered pairs.
pub type ConflictList = (usize, usize, Vec<(usize, usize)>);

/// Per simple edge, a set of forbidden ordered colour pairs from `[k]^2`.
#[derive(Debug, Clone)]
pub struct ConflictListAssignment {
    pub n: usize,
    pub k: usize,
    /// Declared bound on the number of conflicts per edge.
    pub max_conflicts: usize,
    /// One entry per edge; the underlying graph must be simple.
    pub lists: Vec<ConflictList>,
}

impl ConflictListAssignment {
    pub fn new(
        n: usize,
        k: usize,
        max_conflicts: usize,
        lists: Vec<ConflictList>,
    ) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroColourBudget);
        }
        Multigraph::new(n, lists.iter().map(|&(u, v, _)| (u, v)).collect())?;
        let mut seen = std::collections::HashSet::new();
        for &(u, v, _) in &lists {
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateConflictPair { u, v });
            }
        }
        for (index, (_, _, pairs)) in lists.iter().enumerate() {
            if pairs.len() > max_conflicts {
                return Err(Error::LengthMismatch {
                    what: "conflict list exceeds declared bound",
                    expected: max_conflicts,
                    got: pairs.len(),
                });
            }
            for &(a, b) in pairs {
                if a < 1 || a > k {
                    return Err(Error::ColourOutOfRange { index, colour: a, k });
                }
                if b < 1 || b > k {
                    return Err(Error::ColourOutOfRange { index, colour: b, k });
                }
            }
        }
        Ok(ConflictListAssignment { n, k, max_conflicts, lists })
    }
}

/// One parallel edge per conflict pair; the resulting multiplicity equals
/// the largest conflict list. Duplicate pairs within one list are rejected.
pub fn conflict_lists_to_instance(a: &ConflictListAssignment) -> Result<ConflictInstance> {
    let mut edges = Vec::new();
    let mut pairs = Vec::new();
    for (u, v, list) in &a.lists {
        let mut seen = std::collections::HashSet::new();
        for &pair in list {
            if !seen.insert(pair) {
                return Err(Error::DuplicateConflictPair { u: *u, v: *v });
            }
            edges.push((*u, *v));
            pairs.push(pair);
        }
    }
    ConflictInstance::build(a.n, edges, a.k, pairs)
}

/// A simple graph with a size-`k` colour list per vertex and a label per
/// edge; a colouring from the lists is adapted when no edge has both
/// endpoint colours equal to its label.
#[derive(Debug, Clone)]
pub struct AdaptableInstance {
    graph: Multigraph,
    lists: Vec<Vec<usize>>,
    labels: Vec<usize>,
}

impl AdaptableInstance {
    pub fn new(graph: Multigraph, lists: Vec<Vec<usize>>, labels: Vec<usize>) -> Result<Self> {
        if lists.len() != graph.vertex_count() {
            return Err(Error::LengthMismatch {
                what: "vertex lists",
                expected: graph.vertex_count(),
                got: lists.len(),
            });
        }
        if labels.len() != graph.edge_count() {
            return Err(Error::LengthMismatch {
                what: "edge labels",
                expected: graph.edge_count(),
                got: labels.len(),
            });
        }
        let k = lists.first().map_or(0, |l| l.len());
        for (v, list) in lists.iter().enumerate() {
            if list.len() != k {
                return Err(Error::LengthMismatch {
                    what: "list sizes must be uniform",
                    expected: k,
                    got: list.len(),
                });
            }
            let mut sorted = list.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != list.len() || list.contains(&0) {
                return Err(Error::ColourOutsideList { vertex: v, colour: 0 });
            }
        }
        Ok(AdaptableInstance { graph, lists, labels })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn lists(&self) -> &[Vec<usize>] {
        &self.lists
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Uniform list size.
    pub fn k(&self) -> usize {
        self.lists.first().map_or(0, |l| l.len())
    }
}

/// A simple graph with a size-`k` list per vertex, meant to satisfy maximum
/// separation (every edge's lists meet in at most one colour). The property
/// is checked by [`check_separation`], not at construction.
#[derive(Debug, Clone)]
pub struct SeparationInstance {
    graph: Multigraph,
    lists: Vec<Vec<usize>>,
}

impl SeparationInstance {
    pub fn new(graph: Multigraph, lists: Vec<Vec<usize>>) -> Result<Self> {
        // Shares shape validation with the adaptable type.
        let labels = vec![1; graph.edge_count()];
        let a = AdaptableInstance::new(graph, lists, labels)?;
        Ok(SeparationInstance { graph: a.graph, lists: a.lists })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn lists(&self) -> &[Vec<usize>] {
        &self.lists
    }

    pub fn k(&self) -> usize {
        self.lists.first().map_or(0, |l| l.len())
    }
}

/// Positional decoder from instance colours back to list colours.
#[derive(Debug, Clone)]
pub struct ColourDecoder {
    lists: Vec<Vec<usize>>,
}

impl ColourDecoder {
    /// The list colour meant by instance colour `colour` at vertex `v`.
    pub fn decode(&self, v: usize, colour: usize) -> usize {
        self.lists[v][colour - 1]
    }

    /// Decodes a whole instance colouring to list colours.
    pub fn decode_all(&self, colours: &[usize]) -> Vec<usize> {
        colours.iter().enumerate().map(|(v, &c)| self.decode(v, c)).collect()
    }

    /// The instance colour encoding `list_colour` at `v`, if it is listed.
    pub fn encode(&self, v: usize, list_colour: usize) -> Option<usize> {
        self.lists[v].iter().position(|&c| c == list_colour).map(|i| i + 1)
    }
}

/// Encodes adaptable colouring as a conflict instance: edge `e = uv` gets
/// the pair of list positions of its label when the label lies in both
/// lists, and is dropped otherwise.
pub fn adaptable_to_conflict(a: &AdaptableInstance) -> (ConflictInstance, ColourDecoder) {
    let k = a.k();
    let mut edges = Vec::new();
    let mut pairs = Vec::new();
    for (e, &(u, v)) in a.graph.edges().iter().enumerate() {
        let label = a.labels[e];
        let pu = a.lists[u].iter().position(|&c| c == label);
        let pv = a.lists[v].iter().position(|&c| c == label);
        if let (Some(pu), Some(pv)) = (pu, pv) {
            edges.push((u, v));
            pairs.push((pu + 1, pv + 1));
        }
    }
    let inst = ConflictInstance::build(a.graph.vertex_count(), edges, k, pairs)
        .expect("reduction output is valid by construction");
    (inst, ColourDecoder { lists: a.lists.clone() })
}

/// Encodes separation colouring as a conflict instance: edge `e = uv` with
/// `L(u) ∩ L(v) = {i}` gets the pair of positions of `i`; disjoint-list
/// edges are dropped. Rejects edges sharing more than one colour.
pub fn separation_to_conflict(
    s: &SeparationInstance,
) -> Result<(ConflictInstance, ColourDecoder)> {
    let k = s.k();
    let mut edges = Vec::new();
    let mut pairs = Vec::new();
    for &(u, v) in s.graph.edges() {
        let shared: Vec<usize> =
            s.lists[u].iter().copied().filter(|c| s.lists[v].contains(c)).collect();
        match shared.len() {
            0 => {}
            1 => {
                let i = shared[0];
                let pu = s.lists[u].iter().position(|&c| c == i).unwrap();
                let pv = s.lists[v].iter().position(|&c| c == i).unwrap();
                edges.push((u, v));
                pairs.push((pu + 1, pv + 1));
            }
            _ => return Err(Error::SeparationViolated { u, v }),
        }
    }
    let inst = ConflictInstance::build(s.graph.vertex_count(), edges, k, pairs)
        .expect("reduction output is valid by construction");
    Ok((inst, ColourDecoder { lists: s.lists.clone() }))
}

/// True iff no edge has both endpoint colours equal to its label. The
/// colouring must pick from the lists.
pub fn check_adapted(a: &AdaptableInstance, colours: &[usize]) -> Result<bool> {
    if colours.len() != a.graph.vertex_count() {
        return Err(Error::LengthMismatch {
            what: "list colouring",
            expected: a.graph.vertex_count(),
            got: colours.len(),
        });
    }
    for (v, &c) in colours.iter().enumerate() {
        if !a.lists[v].contains(&c) {
            return Err(Error::ColourOutsideList { vertex: v, colour: c });
        }
    }
    for (e, &(u, v)) in a.graph.edges().iter().enumerate() {
        if colours[u] == a.labels[e] && colours[v] == a.labels[e] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff every edge's lists meet in at most one colour.
pub fn check_separation(s: &SeparationInstance) -> bool {
    s.graph.edges().iter().all(|&(u, v)| {
        s.lists[u].iter().filter(|c| s.lists[v].contains(c)).count() <= 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Colouring;

    fn simple_graph(n: usize, edges: Vec<(usize, usize)>) -> Multigraph {
        Multigraph::new(n, edges).unwrap()
    }

    #[test]
    fn conflict_lists_direct_transcription() {
        let a = ConflictListAssignment::new(2, 2, 2, vec![(0, 1, vec![(1, 2), (2, 1)])]).unwrap();
        let inst = conflict_lists_to_instance(&a).unwrap();
        assert_eq!(inst.graph().edge_count(), 2);
        assert_eq!(inst.pairs(), &[(1, 2), (2, 1)]);
        assert_eq!(inst.graph().stats().max_multiplicity, 2);
    }

    #[test]
    fn conflict_lists_full_square_gives_multiplicity_four() {
        let all: Vec<(usize, usize)> =
            (1..=2).flat_map(|a| (1..=2).map(move |b| (a, b))).collect();
        let a = ConflictListAssignment::new(2, 2, 4, vec![(0, 1, all)]).unwrap();
        let inst = conflict_lists_to_instance(&a).unwrap();
        assert_eq!(inst.graph().stats().max_multiplicity, 4);
        assert_eq!(inst.pairs().len(), 4);
    }

    #[test]
    fn conflict_lists_empty_lists_drop_edges() {
        let a =
            ConflictListAssignment::new(3, 2, 1, vec![(0, 1, vec![]), (1, 2, vec![])]).unwrap();
        let inst = conflict_lists_to_instance(&a).unwrap();
        assert_eq!(inst.graph().edge_count(), 0);
        let c = Colouring::new(vec![1, 1, 1]);
        assert!(inst.validate_colouring(&c).unwrap().is_empty());
    }

    #[test]
    fn conflict_lists_reject_duplicates() {
        let a = ConflictListAssignment::new(2, 2, 3, vec![(0, 1, vec![(1, 1), (1, 1)])]).unwrap();
        assert_eq!(
            conflict_lists_to_instance(&a).unwrap_err(),
            Error::DuplicateConflictPair { u: 0, v: 1 }
        );
    }

    #[test]
    fn adaptable_triangle_monochromatic_labels() {
        let g = simple_graph(3, vec![(0, 1), (1, 2), (0, 2)]);
        let a = AdaptableInstance::new(g, vec![vec![1, 2]; 3], vec![1, 1, 1]).unwrap();
        let (inst, dec) = adaptable_to_conflict(&a);
        assert_eq!(inst.pairs(), &[(1, 1), (1, 1), (1, 1)]);
        // Instance colouring 2 everywhere decodes to list colour 2,
        // which is adapted.
        let decoded = dec.decode_all(&[2, 2, 2]);
        assert_eq!(decoded, vec![2, 2, 2]);
        assert!(check_adapted(&a, &decoded).unwrap());
        assert!(!check_adapted(&a, &[1, 1, 1]).unwrap());
    }

    #[test]
    fn adaptable_label_outside_list_drops_edge() {
        let g = simple_graph(2, vec![(0, 1)]);
        let a = AdaptableInstance::new(g, vec![vec![1, 2], vec![3, 4]], vec![1]).unwrap();
        let (inst, _) = adaptable_to_conflict(&a);
        assert_eq!(inst.graph().edge_count(), 0);
    }

    #[test]
    fn adaptable_index_bookkeeping() {
        let g = simple_graph(2, vec![(0, 1)]);
        let a = AdaptableInstance::new(g, vec![vec![1, 2], vec![2, 3]], vec![2]).unwrap();
        let (inst, dec) = adaptable_to_conflict(&a);
        assert_eq!(inst.pairs(), &[(2, 1)]);
        // The forbidden pair decodes to colour 2 at both ends.
        assert_eq!(dec.decode(0, 2), 2);
        assert_eq!(dec.decode(1, 1), 2);
    }

    #[test]
    fn decoder_encode_inverts_decode() {
        let g = simple_graph(2, vec![(0, 1)]);
        let a = AdaptableInstance::new(g, vec![vec![5, 9], vec![2, 9]], vec![9]).unwrap();
        let (_, dec) = adaptable_to_conflict(&a);
        for v in 0..2 {
            for colour in 1..=2 {
                assert_eq!(dec.encode(v, dec.decode(v, colour)), Some(colour));
            }
        }
        assert_eq!(dec.encode(0, 7), None);
    }

    #[test]
    fn proper_colouring_is_adapted() {
        let g = simple_graph(3, vec![(0, 1), (1, 2), (0, 2)]);
        let a = AdaptableInstance::new(g, vec![vec![1, 2, 3]; 3], vec![7, 1, 2]).unwrap();
        // 1, 2, 3 is proper on the triangle, so adapted to any labelling.
        assert!(check_adapted(&a, &[1, 2, 3]).unwrap());
    }

    #[test]
    fn check_adapted_rejects_colour_outside_list() {
        let g = simple_graph(2, vec![(0, 1)]);
        let a = AdaptableInstance::new(g, vec![vec![1, 2], vec![1, 2]], vec![1]).unwrap();
        assert!(matches!(
            check_adapted(&a, &[3, 1]),
            Err(Error::ColourOutsideList { vertex: 0, colour: 3 })
        ));
    }

    #[test]
    fn separation_single_shared_colour() {
        let g = simple_graph(2, vec![(0, 1)]);
        let s = SeparationInstance::new(g, vec![vec![1, 2], vec![1, 3]]).unwrap();
        assert!(check_separation(&s));
        let (inst, dec) = separation_to_conflict(&s).unwrap();
        assert_eq!(inst.pairs(), &[(1, 1)]);
        // Decoding colours (2, 2) gives list colours 2 and 3: proper.
        assert_eq!(dec.decode_all(&[2, 2]), vec![2, 3]);
    }

    #[test]
    fn separation_disjoint_lists_drop_edge() {
        let g = simple_graph(2, vec![(0, 1)]);
        let s = SeparationInstance::new(g, vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert!(check_separation(&s));
        let (inst, _) = separation_to_conflict(&s).unwrap();
        assert_eq!(inst.graph().edge_count(), 0);
    }

    #[test]
    fn separation_violation_rejected() {
        let g = simple_graph(2, vec![(0, 1)]);
        let s = SeparationInstance::new(g, vec![vec![1, 2], vec![1, 2]]).unwrap();
        assert!(!check_separation(&s));
        assert_eq!(
            separation_to_conflict(&s).unwrap_err(),
            Error::SeparationViolated { u: 0, v: 1 }
        );
    }

    #[test]
    fn separation_vacuous_on_edgeless_graph() {
        let g = simple_graph(3, vec![]);
        let s = SeparationInstance::new(g, vec![vec![1, 2], vec![1, 2], vec![1, 2]]).unwrap();
        assert!(check_separation(&s));
    }
}
