//! Core data model: multigraphs, conflict instances, colourings, orientations,
//! and the validity predicates and conversions between them.
//!
//! A conflict instance stores its local colour data per edge as the ordered
//! pair `(lu, lv)` following the stored `(u, v)` endpoint order; a colouring
//! is valid when no edge realizes its pair, and an orientation is valid when
//! no vertex's outgoing local colours cover all of `[1, k]`.

use crate::{Error, Result};
use std::collections::HashMap;

/// An undirected multigraph: `n` vertices and a dense edge list.
///
/// Parallel edges are allowed; loops are rejected at construction. Edge ids
/// are the positions in the edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for (index, &(u, v)) in edges.iter().enumerate() {
            if u >= n {
                return Err(Error::VertexOutOfRange { index, vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { index, vertex: v, n });
            }
            if u == v {
                return Err(Error::LoopEdge { index });
            }
        }
        Ok(Multigraph { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of edge `e` in stored order.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Per-vertex incidence lists as `(edge id, other endpoint)`.
    pub fn incidence(&self) -> Vec<Vec<(usize, usize)>> {
        let mut inc = vec![Vec::new(); self.n];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push((e, v));
            inc[v].push((e, u));
        }
        inc
    }

    /// True when no two edges join the same vertex pair.
    pub fn is_simple(&self) -> bool {
        let mut seen = HashMap::new();
        for &(u, v) in &self.edges {
            let key = (u.min(v), u.max(v));
            if *seen.entry(key).or_insert(0usize) >= 1 {
                return false;
            }
            *seen.get_mut(&key).unwrap() += 1;
        }
        true
    }

    pub fn stats(&self) -> GraphStats {
        let m = self.edges.len();
        let deg = self.degrees();
        let max_degree = deg.iter().copied().max().unwrap_or(0);
        let mut mult: HashMap<(usize, usize), usize> = HashMap::new();
        for &(u, v) in &self.edges {
            *mult.entry((u.min(v), u.max(v))).or_insert(0) += 1;
        }
        let max_multiplicity = mult.values().copied().max().unwrap_or(0);
        let avg_degree = if self.n > 0 { 2.0 * m as f64 / self.n as f64 } else { 0.0 };
        GraphStats { n: self.n, m, max_multiplicity, max_degree, avg_degree }
    }
}

/// Size and degree statistics of a multigraph.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    /// Largest number of parallel edges on one vertex pair.
    pub max_multiplicity: usize,
    pub max_degree: usize,
    /// `2m / n`, zero on the empty vertex set.
    pub avg_degree: f64,
}

/// A multigraph with a colour budget and one ordered local colour pair per
/// edge: `pairs[e] = (lu, lv)` holds the local colours of the stored
/// endpoints `u` and `v` of edge `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConflictInstance {
    graph: Multigraph,
    k: usize,
    pairs: Vec<(usize, usize)>,
}

impl ConflictInstance {
    pub fn new(graph: Multigraph, k: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroColourBudget);
        }
        if pairs.len() != graph.edge_count() {
            return Err(Error::LengthMismatch {
                what: "conflict pairs",
                expected: graph.edge_count(),
                got: pairs.len(),
            });
        }
        for (index, &(lu, lv)) in pairs.iter().enumerate() {
            if lu < 1 || lu > k {
                return Err(Error::ColourOutOfRange { index, colour: lu, k });
            }
            if lv < 1 || lv > k {
                return Err(Error::ColourOutOfRange { index, colour: lv, k });
            }
        }
        Ok(ConflictInstance { graph, k, pairs })
    }

    /// Builds graph and instance together; edge ids follow input order.
    pub fn build(
        n: usize,
        edges: Vec<(usize, usize)>,
        k: usize,
        pairs: Vec<(usize, usize)>,
    ) -> Result<Self> {
        if edges.len() != pairs.len() {
            return Err(Error::LengthMismatch {
                what: "edge and pair lists",
                expected: edges.len(),
                got: pairs.len(),
            });
        }
        let graph = Multigraph::new(n, edges)?;
        ConflictInstance::new(graph, k, pairs)
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// The pair of edge `e` in stored endpoint order.
    pub fn pair(&self, e: usize) -> (usize, usize) {
        self.pairs[e]
    }

    /// Local colour of endpoint `x` on edge `e`; `x` must be an endpoint.
    pub fn local_colour(&self, e: usize, x: usize) -> usize {
        let (u, v) = self.graph.endpoints(e);
        let (lu, lv) = self.pairs[e];
        if x == u {
            lu
        } else {
            debug_assert_eq!(x, v);
            lv
        }
    }

    /// Rebudgets the same graph and pairs to a larger `k`.
    pub fn with_budget(&self, k: usize) -> Result<Self> {
        ConflictInstance::new(self.graph.clone(), k, self.pairs.clone())
    }

    /// The edges realizing their conflict pair under `c`.
    pub fn validate_colouring(&self, c: &Colouring) -> Result<Violations> {
        if c.len() != self.graph.vertex_count() {
            return Err(Error::LengthMismatch {
                what: "colouring",
                expected: self.graph.vertex_count(),
                got: c.len(),
            });
        }
        for (v, &col) in c.colours().iter().enumerate() {
            if col < 1 || col > self.k {
                return Err(Error::ColourOutOfRange { index: v, colour: col, k: self.k });
            }
        }
        let mut edges = Vec::new();
        for (e, &(u, v)) in self.graph.edges().iter().enumerate() {
            let (lu, lv) = self.pairs[e];
            if c.get(u) == lu && c.get(v) == lv {
                edges.push(e);
            }
        }
        Ok(Violations { edges })
    }

    /// Witness edges for every vertex whose outgoing local colours cover
    /// `[1, k]`: one out-edge per colour at each failing vertex.
    pub fn validate_orientation(&self, o: &Orientation) -> Result<Violations> {
        if o.len() != self.graph.edge_count() {
            return Err(Error::LengthMismatch {
                what: "orientation",
                expected: self.graph.edge_count(),
                got: o.len(),
            });
        }
        for (e, &(u, v)) in self.graph.edges().iter().enumerate() {
            let h = o.head(e);
            if h != u && h != v {
                return Err(Error::HeadNotEndpoint { edge: e, head: h });
            }
        }
        // out_witness[x][c-1] = an edge leaving x with local colour c at x
        let mut out_witness = vec![vec![usize::MAX; self.k]; self.graph.vertex_count()];
        for (e, &(u, v)) in self.graph.edges().iter().enumerate() {
            let (lu, lv) = self.pairs[e];
            let (tail, local) = if o.head(e) == v { (u, lu) } else { (v, lv) };
            if out_witness[tail][local - 1] == usize::MAX {
                out_witness[tail][local - 1] = e;
            }
        }
        let mut edges = Vec::new();
        for wit in &out_witness {
            if wit.iter().all(|&e| e != usize::MAX) {
                edges.extend(wit.iter().copied());
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Violations { edges })
    }

    /// Colours each vertex with the lowest colour absent from its outgoing
    /// local colours. Requires a valid orientation.
    pub fn colouring_from_orientation(&self, o: &Orientation) -> Result<Colouring> {
        let violations = self.validate_orientation(o)?;
        if !violations.is_empty() {
            return Err(Error::InvalidOrientation { violations: violations.edges.len() });
        }
        let mut out_colours = vec![vec![false; self.k]; self.graph.vertex_count()];
        for (e, &(u, v)) in self.graph.edges().iter().enumerate() {
            let (lu, lv) = self.pairs[e];
            let (tail, local) = if o.head(e) == v { (u, lu) } else { (v, lv) };
            out_colours[tail][local - 1] = true;
        }
        let colours = out_colours
            .iter()
            .map(|used| 1 + used.iter().position(|&b| !b).expect("valid orientation leaves a free colour"))
            .collect();
        Ok(Colouring::new(colours))
    }

    /// Orients each edge towards the endpoint whose local colour matches the
    /// colouring; unmatched edges head toward the lower-id endpoint.
    /// Requires a valid colouring.
    pub fn orientation_from_colouring(&self, c: &Colouring) -> Result<Orientation> {
        let violations = self.validate_colouring(c)?;
        if !violations.is_empty() {
            return Err(Error::InvalidColouring { violations: violations.edges.len() });
        }
        let head = self
            .graph
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| {
                let (lu, lv) = self.pairs[e];
                if c.get(v) == lv {
                    v
                } else if c.get(u) == lu {
                    u
                } else {
                    u.min(v)
                }
            })
            .collect();
        Ok(Orientation::new(head))
    }
}

/// A total vertex colouring with values in `[1, k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    colours: Vec<usize>,
}

impl Colouring {
    pub fn new(colours: Vec<usize>) -> Self {
        Colouring { colours }
    }

    pub fn get(&self, v: usize) -> usize {
        self.colours[v]
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.colours
    }
}

/// A head-endpoint choice per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    head: Vec<usize>,
}

impl Orientation {
    pub fn new(head: Vec<usize>) -> Self {
        Orientation { head }
    }

    pub fn head(&self, e: usize) -> usize {
        self.head[e]
    }

    pub fn len(&self) -> usize {
        self.head.len()
    }

    pub fn is_empty(&self) -> bool {
        self.head.is_empty()
    }

    pub fn heads(&self) -> &[usize] {
        &self.head
    }
}

/// Edge ids witnessing a failed validation; empty iff the object is valid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violations {
    pub edges: Vec<usize>,
}

impl Violations {
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}
