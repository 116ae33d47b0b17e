//! Closed-form cell-size bounds and the constructive check of the chain bound.
//!
//! Every backbone link forces two radio discs of radius `R` to overlap by at
//! least `Δ = lens_area(R, R)`. A chain of `n` cells therefore covers at most
//! `nπR² − (n−1)Δ`, so the average cell is at most `πR² − ((n−1)/n)Δ`, which
//! tends to `πR² − Δ ≈ 1.9132 R²`.
//!
//! The per-link bound is checked constructively: the extremal chain (centers
//! spaced exactly `R` apart) attains it. Quantifying over every field shape is
//! out of reach for a test, so no universal check is attempted.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::geometry::chain_union_area_mc;
use crate::partition::Scheme;

/// Percentages printed in the published lifetime table, in `Scheme::ALL`
/// order followed by the bound row.
pub const PUBLISHED_LIFETIME_PCT: [f64; 6] = [11.0, 26.0, 52.0, 68.0, 91.0, 100.0];

fn check_range(range: f64) -> Result<()> {
    if range > 0.0 && range.is_finite() {
        Ok(())
    } else {
        Err(invalid(format!("radio range must be positive and finite, got {range}")))
    }
}

fn check_count(n: u32) -> Result<()> {
    if n >= 1 {
        Ok(())
    } else {
        Err(invalid("chain length must be >= 1"))
    }
}

/// Overlap of two radius-`R` discs whose centers are `R` apart: `(4π−3√3)/6 · R²`.
pub fn delta(range: f64) -> Result<f64> {
    check_range(range)?;
    Ok((4.0 * PI - 3.0 * 3f64.sqrt()) / 6.0 * range * range)
}

/// Largest area `n` linked cells can cover: `nπR² − (n−1)Δ`.
pub fn chain_max_area(n: u32, range: f64) -> Result<f64> {
    check_count(n)?;
    let n = f64::from(n);
    Ok(n * PI * range * range - (n - 1.0) * delta(range)?)
}

/// Average cell-size bound for `n` cells: `πR² − ((n−1)/n)Δ`.
pub fn avg_cell_bound(n: u32, range: f64) -> Result<f64> {
    check_count(n)?;
    let n = f64::from(n);
    Ok(PI * range * range - (n - 1.0) / n * delta(range)?)
}

/// The `n → ∞` limit of [`avg_cell_bound`], `πR² − Δ`.
pub fn theoretical_bound(range: f64) -> Result<f64> {
    Ok(PI * range * range - delta(range)?)
}

/// Maximal cell area of each scheme at `d = 0` (two-type: the `k → ∞` average).
pub fn scheme_max_area(scheme: Scheme, range: f64) -> Result<f64> {
    check_range(range)?;
    let r2 = range * range;
    Ok(match scheme {
        Scheme::Gaf => r2 / 5.0,
        Scheme::Hgaf => r2 / 2.0,
        Scheme::Ehgaf => r2,
        Scheme::EhgafTriangle => 3.0 * 3f64.sqrt() / 4.0 * r2,
        Scheme::EhgafTwoType => 3f64.sqrt() * r2,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AltShape {
    Triangle,
    Hexagon,
}

/// GAF cell area when the square cells are replaced by triangles or hexagons.
pub fn gaf_alt_shape_area(shape: AltShape, range: f64) -> f64 {
    let r2 = range * range;
    match shape {
        AltShape::Triangle => r2 / (4.0 * 3f64.sqrt()),
        AltShape::Hexagon => 3.0 * 3f64.sqrt() / 26.0 * r2,
    }
}

/// Average cell area of the two-type tiling with period `k`: `√3kR²/(k+1)`.
pub fn two_type_avg_area(k: u32, range: f64) -> Result<f64> {
    if k < 2 {
        return Err(invalid(format!("two-type period k must be >= 2, got {k}")));
    }
    check_range(range)?;
    let k = f64::from(k);
    Ok(3f64.sqrt() * k * range * range / (k + 1.0))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainReport {
    pub n: u32,
    pub radio_range: f64,
    pub spacing: f64,
    pub analytic: f64,
    pub estimate: f64,
    pub std_error: f64,
    pub pass: bool,
    /// `estimate(n) − estimate(n−1)`, compared against `πR² − Δ`.
    pub increment: f64,
    pub increment_std_error: f64,
    pub increment_pass: bool,
}

/// Estimate the union of `n` discs spaced `R` apart and compare it with
/// [`chain_max_area`]. Passes when within 3 standard errors.
pub fn verify_chain_construction(n: u32, range: f64, samples: u64, seed: u64) -> Result<ChainReport> {
    chain_report(n, range, range, samples, seed)
}

pub(crate) fn chain_report(n: u32, range: f64, spacing: f64, samples: u64, seed: u64) -> Result<ChainReport> {
    if n < 2 {
        return Err(invalid(format!("chain check needs n >= 2, got {n}")));
    }
    let analytic = chain_max_area(n, range)?;
    let full = chain_union_area_mc(n as usize, spacing, range, samples, seed)?;
    let shorter = chain_union_area_mc(n as usize - 1, spacing, range, samples, seed.wrapping_add(1))?;
    let increment = full.area - shorter.area;
    let increment_std_error = full.std_error.hypot(shorter.std_error);
    Ok(ChainReport {
        n,
        radio_range: range,
        spacing,
        analytic,
        estimate: full.area,
        std_error: full.std_error,
        pass: (full.area - analytic).abs() <= 3.0 * full.std_error,
        increment,
        increment_std_error,
        increment_pass: (increment - theoretical_bound(range)?).abs() <= 3.0 * increment_std_error,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundSet {
    pub radio_range: f64,
    pub delta: f64,
    /// `πR²`: one cell on its own.
    pub single_cell_max: f64,
    /// `(n, chain_max_area(n))` for the requested chain lengths.
    pub chain_max: Vec<(u32, f64)>,
    /// `(n, avg_cell_bound(n))` for the same lengths.
    pub avg_cell_bound: Vec<(u32, f64)>,
    pub limit: f64,
    pub scheme_max: BTreeMap<String, f64>,
}

impl BoundSet {
    pub fn new(range: f64, chain_lengths: impl IntoIterator<Item = u32>) -> Result<Self> {
        let lengths: Vec<u32> = chain_lengths.into_iter().collect();
        let chain_max = lengths.iter().map(|&n| Ok((n, chain_max_area(n, range)?))).collect::<Result<_>>()?;
        let avg = lengths.iter().map(|&n| Ok((n, avg_cell_bound(n, range)?))).collect::<Result<_>>()?;
        let scheme_max = Scheme::ALL
            .iter()
            .map(|&s| Ok((s.name().to_string(), scheme_max_area(s, range)?)))
            .collect::<Result<_>>()?;
        Ok(Self {
            radio_range: range,
            delta: delta(range)?,
            single_cell_max: PI * range * range,
            chain_max,
            avg_cell_bound: avg,
            limit: theoretical_bound(range)?,
            scheme_max,
        })
    }
}
