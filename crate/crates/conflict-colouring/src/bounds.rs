//! Closed-form colour-count bounds as pure formulas.
//!
//! The existential results behind these formulas fix no constants, so every
//! formula that carries one takes it from [`BoundConstants`] (all default to
//! 1.0). Logarithms are natural by default; the base is a knob for
//! sensitivity checks. Each bound reports both the raw real value and the
//! integer colour count obtained by the formula's own rounding.

use crate::{Error, Result};

/// Multiplicative constants left free by the existential bounds, plus the
/// logarithm base used by the formulas that contain a log.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundConstants {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub c: f64,
    pub log_base: f64,
}

impl Default for BoundConstants {
    fn default() -> Self {
        BoundConstants { c1: 1.0, c2: 1.0, c3: 1.0, c: 1.0, log_base: std::f64::consts::E }
    }
}

impl BoundConstants {
    fn log(&self, x: f64) -> f64 {
        x.ln() / self.log_base.ln()
    }
}

/// A bound value: the raw real and the rounded colour count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bound {
    pub raw: f64,
    pub colours: u64,
}

impl Bound {
    fn ceil(raw: f64) -> Self {
        Bound { raw, colours: raw.ceil() as u64 }
    }

    fn floor(raw: f64) -> Self {
        Bound { raw, colours: raw.floor() as u64 }
    }
}

/// `ceil(sqrt(e * (2*max_degree - 1)))`: colours sufficient for any
/// multigraph of the given maximum degree.
pub fn bound_max_degree(max_degree: u64) -> Result<Bound> {
    if max_degree < 1 {
        return Err(Error::ArgOutOfDomain {
            what: "bound_max_degree",
            detail: format!("maximum degree must be >= 1, got {max_degree}"),
        });
    }
    let raw = (std::f64::consts::E * (2.0 * max_degree as f64 - 1.0)).sqrt();
    Ok(Bound::ceil(raw))
}

/// `floor(sqrt(d / ln d))`: a colour count below which some local partition
/// of any multigraph of average degree `d` is uncolourable.
pub fn lower_bound_avg_degree(avg_degree: f64) -> Result<Bound> {
    if avg_degree < 3.0 {
        return Err(Error::ArgOutOfDomain {
            what: "lower_bound_avg_degree",
            detail: format!("average degree must be >= 3, got {avg_degree}"),
        });
    }
    let raw = (avg_degree / avg_degree.ln()).sqrt();
    Ok(Bound::floor(raw))
}

/// `ceil(C2 * (mu*m)^(1/4) * log(mu*m))` for a multigraph with `m >= 3`
/// edges and maximum multiplicity `mu`.
pub fn bound_edges(m: u64, mu: u64, consts: &BoundConstants) -> Result<Bound> {
    if m < 3 {
        return Err(Error::ArgOutOfDomain {
            what: "bound_edges",
            detail: format!("edge count must be >= 3, got {m}"),
        });
    }
    if mu < 1 {
        return Err(Error::ArgOutOfDomain {
            what: "bound_edges",
            detail: format!("multiplicity must be >= 1, got {mu}"),
        });
    }
    let mm = (mu * m) as f64;
    let raw = consts.c2 * mm.powf(0.25) * consts.log(mm);
    Ok(Bound::ceil(raw))
}

/// `ceil(max(C1 * sqrt(mu) * (g+1)^(1/4) * log(mu^2 * (g+2)), 8*mu))` for
/// multigraphs embeddable on a surface of Euler genus `g`.
pub fn bound_surface(genus: u64, mu: u64, consts: &BoundConstants) -> Result<Bound> {
    if mu < 1 {
        return Err(Error::ArgOutOfDomain {
            what: "bound_surface",
            detail: format!("multiplicity must be >= 1, got {mu}"),
        });
    }
    let g = genus as f64;
    let mu_f = mu as f64;
    let term = consts.c1 * mu_f.sqrt() * (g + 1.0).powf(0.25) * consts.log(mu_f * mu_f * (g + 2.0));
    let raw = term.max(8.0 * mu_f);
    Ok(Bound::ceil(raw))
}

/// Result of [`bound_adaptable_edges`]: the guarantee behind the formula
/// needs `m >= 2^16`; smaller inputs are flagged, not rejected.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdaptableEdgesBound {
    pub bound: Bound,
    pub below_threshold: bool,
}

/// `ceil(2^(11/4) * sqrt(e) * (mu*m)^(1/4))`: list size sufficient for
/// adaptable colouring of any multigraph with `m` edges, multiplicity `mu`.
pub fn bound_adaptable_edges(m: u64, mu: u64) -> Result<AdaptableEdgesBound> {
    if mu < 1 || m < 1 {
        return Err(Error::ArgOutOfDomain {
            what: "bound_adaptable_edges",
            detail: format!("need m >= 1 and mu >= 1, got m={m}, mu={mu}"),
        });
    }
    let coeff = 2f64.powf(11.0 / 4.0) * std::f64::consts::E.sqrt();
    let raw = coeff * ((mu * m) as f64).powf(0.25);
    Ok(AdaptableEdgesBound { bound: Bound::ceil(raw), below_threshold: m < (1 << 16) })
}

/// `ceil(C3 * sqrt(mu) * (g+1)^(1/4))`: list size sufficient for adaptable
/// colouring on a surface of Euler genus `g`.
pub fn bound_adaptable_surface(genus: u64, mu: u64, consts: &BoundConstants) -> Result<Bound> {
    if mu < 1 {
        return Err(Error::ArgOutOfDomain {
            what: "bound_adaptable_surface",
            detail: format!("multiplicity must be >= 1, got {mu}"),
        });
    }
    let raw = consts.c3 * (mu as f64).sqrt() * (genus as f64 + 1.0).powf(0.25);
    Ok(Bound::ceil(raw))
}

/// Orientation-based bound for simple graphs on surfaces. Positive genus
/// gives `H_g/2 + 1` with `H_g = floor((7 + sqrt(24g+1)) / 2)` as an exact
/// rational; genus zero routes to the planar constants (4, and 3 for
/// triangle-free).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeawoodBound {
    Planar { bound: u64, triangle_free: u64 },
    Surface { heawood: u64, numer: u64, denom: u64 },
}

impl HeawoodBound {
    /// The bound as a real number.
    pub fn value(&self) -> f64 {
        match self {
            HeawoodBound::Planar { bound, .. } => *bound as f64,
            HeawoodBound::Surface { numer, denom, .. } => *numer as f64 / *denom as f64,
        }
    }

    /// The bound floored to an integer colour count.
    pub fn floored(&self) -> u64 {
        match self {
            HeawoodBound::Planar { bound, .. } => *bound,
            HeawoodBound::Surface { numer, denom, .. } => numer / denom,
        }
    }
}

pub fn heawood_orientation_bound(genus: u64) -> HeawoodBound {
    if genus == 0 {
        return HeawoodBound::Planar { bound: 4, triangle_free: 3 };
    }
    // Integer sqrt keeps the floor exact for large genus.
    let s = (24 * genus + 1).isqrt();
    let heawood = (7 + s) / 2;
    // H/2 + 1 = (H + 2) / 2, kept as an exact rational.
    HeawoodBound::Surface { heawood, numer: heawood + 2, denom: 2 }
}
