//! Constructive solvers: exact backtracking, bounded-outdegree orientation,
//! randomized resampling, the palette-split adaptable pipeline, the
//! two-phase degree-split pipeline, and peel-and-extend.
//!
//! Every solver returns colourings that pass `validate_colouring`; success
//! outputs are re-checked before being handed back. Randomized solvers are
//! one-sided: they report cap exhaustion, never unsatisfiability. Budget
//! exhaustion is always a distinct verdict.

mod exact;
mod lll;
mod orient;
mod peel;
mod split;
mod two_phase;

pub use exact::{solve_exact, ExactOutcome, ExactResult, SearchLimits};
pub use lll::{solve_lll, LllOutcome, LllResult};
pub use orient::{solve_orientation, solve_via_orientation, OrientationSolve, ViaOrientation};
pub use peel::{extend_peeled, kernelize, PeelStep, PeelTrace};
pub use split::{split_adaptable, SplitColouring, SplitFailure};
pub use two_phase::{
    lll_feasibility_check, two_phase, FeasibilityCheck, PipelineMode, TwoPhaseColouring,
    TwoPhaseFailure, TwoPhaseParams,
};
