//! Conflict colouring of multigraphs.
//!
//! Every vertex of a multigraph carries a local colour (from `[k]`) on each
//! incident edge; a colouring of the vertices is valid when no edge sees both
//! of its local colours chosen. This crate provides the data model for such
//! instances, exact and randomized solvers, orientation-based solvers, the
//! reductions from adaptable and separation list colouring, closed-form
//! colour-count bounds, adversarial generators, and a brute-force
//! exact-choosability oracle for small graphs.
//!
//! The `examples/` directory has one runnable program per capability; the
//! `conflict` binary exposes the same machinery as subcommands
//! (`solve`, `verify`, `gen`, `exact-ch`, `bounds`, `bench`).

pub mod adversary;
pub mod bounds;
pub mod io;
pub mod model;
pub mod reductions;
pub mod report;
pub mod solvers;

pub use model::{Colouring, ConflictInstance, GraphStats, Multigraph, Orientation, Violations};

use std::fmt;

/// Errors raised by instance construction, validation and the oracles.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An edge with both endpoints equal; index names the offending edge.
    LoopEdge { index: usize },
    /// An endpoint outside `[0, n)`.
    VertexOutOfRange { index: usize, vertex: usize, n: usize },
    /// A local colour outside `[1, k]`.
    ColourOutOfRange { index: usize, colour: usize, k: usize },
    /// Aligned input lists of different lengths.
    LengthMismatch { what: &'static str, expected: usize, got: usize },
    /// The colour budget must be a positive integer.
    ZeroColourBudget,
    /// Orientation head is not an endpoint of its edge.
    HeadNotEndpoint { edge: usize, head: usize },
    /// A conversion was called on an object that fails validation.
    InvalidColouring { violations: usize },
    /// A conversion was called on an orientation that fails validation.
    InvalidOrientation { violations: usize },
    /// A list colouring used a colour outside the vertex's list.
    ColourOutsideList { vertex: usize, colour: usize },
    /// Two identical conflict pairs on one vertex pair.
    DuplicateConflictPair { u: usize, v: usize },
    /// A list assignment violates maximum separation on an edge.
    SeparationViolated { u: usize, v: usize },
    /// A formula argument is outside its domain.
    ArgOutOfDomain { what: &'static str, detail: String },
    /// An exhaustive enumeration would exceed the configured work budget.
    WorkBudgetExceeded { estimated: f64, budget: f64 },
    /// The exact solver ran out of its search budget mid-procedure.
    SearchBudgetExhausted,
    /// Solver parameters that cannot be run as requested.
    InfeasibleParams(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LoopEdge { index } => write!(f, "edge {index} is a loop (u = v)"),
            Error::VertexOutOfRange { index, vertex, n } => {
                write!(f, "edge {index}: vertex {vertex} outside [0, {n})")
            }
            Error::ColourOutOfRange { index, colour, k } => {
                write!(f, "edge {index}: local colour {colour} outside [1, {k}]")
            }
            Error::LengthMismatch { what, expected, got } => {
                write!(f, "{what}: expected {expected} entries, got {got}")
            }
            Error::ZeroColourBudget => write!(f, "colour budget k must be at least 1"),
            Error::HeadNotEndpoint { edge, head } => {
                write!(f, "orientation head {head} is not an endpoint of edge {edge}")
            }
            Error::InvalidColouring { violations } => {
                write!(f, "colouring is invalid ({violations} conflict edges)")
            }
            Error::InvalidOrientation { violations } => {
                write!(f, "orientation is invalid ({violations} witness edges)")
            }
            Error::ColourOutsideList { vertex, colour } => {
                write!(f, "colour {colour} is not in the list of vertex {vertex}")
            }
            Error::DuplicateConflictPair { u, v } => {
                write!(f, "duplicate conflict pair on edge ({u}, {v})")
            }
            Error::SeparationViolated { u, v } => {
                write!(f, "lists of edge ({u}, {v}) share more than one colour")
            }
            Error::ArgOutOfDomain { what, detail } => write!(f, "{what}: {detail}"),
            Error::WorkBudgetExceeded { estimated, budget } => {
                write!(f, "estimated work {estimated:.3e} exceeds budget {budget:.3e}")
            }
            Error::SearchBudgetExhausted => {
                write!(f, "exact search budget exhausted before a verdict")
            }
            Error::InfeasibleParams(msg) => write!(f, "infeasible parameters: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
