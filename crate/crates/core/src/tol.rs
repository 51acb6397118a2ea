//! Default tolerances and grid sizes. Every threshold used by the library is
//! named here so callers (and the CLI) can see and override the numerics.

/// A denominator root with |root| <= 1 + TAU_DISK rejects the denominator:
/// poles must stay off the closed unit disk.
pub const TAU_DISK: f64 = 1e-9;

/// Slack for nonnegativity of the boundary defect on the sampling grid.
/// The defect vanishes exactly where |q| = 1, so exact zeros must pass.
pub const EPS_NEG: f64 = 1e-9;

/// Default root clustering tolerance (scaled by root magnitude).
pub const CLUSTER_TOL: f64 = 1e-6;

/// Roots with ||root| - 1| below this are treated as unimodular.
pub const UNIMODULAR_TOL: f64 = 1e-6;

/// Boundary zeros of the mate are matched to kernel base points within this.
pub const BOUNDARY_MATCH_TOL: f64 = 1e-8;

/// Relative threshold for trimming numerically-zero trailing coefficients.
pub const TRIM_REL: f64 = 1e-14;

/// Default tolerance for exact polynomial division remainders.
pub const REM_TOL: f64 = 1e-9;

/// Grid size for boundary defect nonnegativity checks.
pub const GRID_DEFECT: usize = 4096;

/// Grid size for Pythagorean pair identity checks.
pub const GRID_PAIR: usize = 1024;

/// Default Hardy-space truncation degree.
pub const TRUNC_DEFAULT: usize = 256;

/// Membership verdict: member when the top-rung residual is below this.
pub const MEMBER_RESIDUAL: f64 = 1e-6;

/// Membership verdict: non-member when residuals plateau above this.
pub const NONMEMBER_RESIDUAL: f64 = 1e-2;

/// Radial sampling exponents for boundary limits: t = 1 - 2^{-s}.
pub const RADIAL_S_RANGE: std::ops::RangeInclusive<u32> = 4..=12;

/// Successive Richardson extrapolants must agree to this for convergence.
pub const RICHARDSON_TOL: f64 = 1e-8;
