//! Feasibility of the two communication requirements.
//!
//! Req I: active nodes of adjacent cells must be within radio range of each
//! other. Req II: an active node must reach every point of its own cell.
//! Each scheme has a closed-form worst case for both; the brute-force oracle
//! recomputes them from an actual [`Partition`] by sampling.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::geometry::{distance, within_range, CellShape, Point, RANGE_REL_TOL};
use crate::partition::{CellId, Partition, Scheme, SchemeParams};

const SQRT2: f64 = std::f64::consts::SQRT_2;
const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Which requirement limits a configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Binding {
    #[serde(rename = "ReqI")]
    ReqI,
    #[serde(rename = "ReqII")]
    ReqII,
    #[serde(rename = "both")]
    Both,
    #[serde(rename = "none")]
    None,
}

impl Binding {
    fn from_flags(req1: bool, req2: bool) -> Self {
        match (req1, req2) {
            (true, true) => Binding::Both,
            (true, false) => Binding::ReqI,
            (false, true) => Binding::ReqII,
            (false, false) => Binding::None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReqReport {
    pub scheme: Scheme,
    pub params: SchemeParams,
    pub radio_range: f64,
    pub req1_worst: f64,
    pub req2_worst: f64,
    pub feasible: bool,
    /// Requirements that are tight or violated (worst ≥ R within 1e−9).
    pub binding: Binding,
}

fn tight_or_violated(worst: f64, range: f64) -> bool {
    worst >= range * (1.0 - RANGE_REL_TOL)
}

fn check_range(range: f64) -> Result<()> {
    if range > 0.0 && range.is_finite() {
        Ok(())
    } else {
        Err(invalid(format!("radio range must be positive, got {range}")))
    }
}

/// Closed-form largest distance between active nodes of two cells that
/// must be linked.
pub fn worst_adjacent_distance(params: &SchemeParams, range: f64) -> Result<f64> {
    params.validate()?;
    check_range(range)?;
    Ok(adjacent_closed_form(params.scheme, params.r, params.d, range))
}

/// Closed-form largest distance from an active node to a point of its cell.
pub fn worst_intracell_distance(params: &SchemeParams, range: f64) -> Result<f64> {
    params.validate()?;
    check_range(range)?;
    Ok(intracell_closed_form(params.scheme, params.r, params.d, range))
}

fn adjacent_closed_form(scheme: Scheme, r: f64, d: f64, range: f64) -> f64 {
    match scheme {
        // opposite corners of two side-by-side cells
        Scheme::Gaf => r * 5f64.sqrt(),
        Scheme::Hgaf | Scheme::Ehgaf => (d * d + (r + d) * (r + d)).sqrt(),
        // outward apexes of the central subcells across a shared edge
        Scheme::EhgafTriangle => 2.0 * (r + 2.0 * d) / 3.0,
        Scheme::EhgafTwoType => range,
    }
}

fn intracell_closed_form(scheme: Scheme, r: f64, d: f64, range: f64) -> f64 {
    match scheme {
        Scheme::Gaf | Scheme::Hgaf => r * SQRT2,
        Scheme::Ehgaf => SQRT2 * (r + d) / 2.0,
        Scheme::EhgafTriangle => 2.0 / 3.0 * (r * r + r * d + d * d).sqrt(),
        // half-diagonal of a √3R × R type-A cell
        Scheme::EhgafTwoType => (3.0 * range * range + range * range).sqrt() / 2.0,
    }
}

/// Analytic report for a scheme without building a partition.
pub fn analytic_report(params: &SchemeParams, range: f64) -> Result<ReqReport> {
    let req1 = worst_adjacent_distance(params, range)?;
    let req2 = worst_intracell_distance(params, range)?;
    Ok(report(*params, range, req1, req2))
}

fn report(params: SchemeParams, range: f64, req1: f64, req2: f64) -> ReqReport {
    ReqReport {
        scheme: params.scheme,
        params,
        radio_range: range,
        req1_worst: req1,
        req2_worst: req2,
        feasible: within_range(req1, range) && within_range(req2, range),
        binding: Binding::from_flags(tight_or_violated(req1, range), tight_or_violated(req2, range)),
    }
}

/// Largest feasible cell for a scheme (continuous in `r`, ignoring the
/// `r/d` divisibility rule).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MaxCellDims {
    /// Square edge, triangle height, or two-type column width.
    pub r_max: f64,
    /// Area of one maximal cell (type A for the two-type scheme).
    pub cell_area: f64,
    pub binding: Binding,
    /// Area of a type-B cell, two-type scheme only.
    pub type_b_area: Option<f64>,
}

pub fn max_cell_dims(scheme: Scheme, d: f64, range: f64) -> Result<MaxCellDims> {
    check_range(range)?;
    if !(d >= 0.0 && d.is_finite()) {
        return Err(invalid(format!("subcell size must be >= 0, got {d}")));
    }
    let pick = |req1_limit: f64, req2_limit: f64| -> Result<(f64, Binding)> {
        let r = req1_limit.min(req2_limit);
        if !(r > 0.0) {
            return Err(invalid(format!("no feasible cell size for d = {d}, R = {range}")));
        }
        let close = (req1_limit - req2_limit).abs() <= 1e-12 * r.max(1.0);
        let binding = if close {
            Binding::Both
        } else if req1_limit < req2_limit {
            Binding::ReqI
        } else {
            Binding::ReqII
        };
        Ok((r, binding))
    };
    let req1_square = (range * range - d * d).max(0.0).sqrt() - d;
    Ok(match scheme {
        Scheme::Gaf => MaxCellDims {
            r_max: range / 5f64.sqrt(),
            cell_area: range * range / 5.0,
            binding: Binding::ReqI,
            type_b_area: None,
        },
        Scheme::Hgaf => {
            let (r, binding) = pick(req1_square, range / SQRT2)?;
            MaxCellDims { r_max: r, cell_area: r * r, binding, type_b_area: None }
        }
        Scheme::Ehgaf => {
            let (r, binding) = pick(req1_square, SQRT2 * range - d)?;
            MaxCellDims { r_max: r, cell_area: r * r, binding, type_b_area: None }
        }
        Scheme::EhgafTriangle => {
            let req2 = (-d + (9.0 * range * range - 3.0 * d * d).max(0.0).sqrt()) / 2.0;
            let (r, binding) = pick(1.5 * range - 2.0 * d, req2)?;
            MaxCellDims { r_max: r, cell_area: r * r / SQRT3, binding, type_b_area: None }
        }
        Scheme::EhgafTwoType => {
            if d != 0.0 {
                return Err(invalid("two-type scheme is defined for d = 0 only"));
            }
            MaxCellDims {
                r_max: range,
                cell_area: SQRT3 * range * range,
                binding: Binding::Both,
                type_b_area: Some(SQRT3 / 2.0 * range * range),
            }
        }
    })
}

/// Parameters at the maximal feasible size for `d = 0` (two-type uses `k`).
pub fn maximal_params(scheme: Scheme, range: f64, k: u32) -> Result<SchemeParams> {
    let dims = max_cell_dims(scheme, 0.0, range)?;
    Ok(match scheme {
        Scheme::Gaf => SchemeParams::gaf(dims.r_max),
        Scheme::Hgaf => SchemeParams::hgaf(dims.r_max, 0.0),
        Scheme::Ehgaf => SchemeParams::ehgaf(dims.r_max, 0.0),
        Scheme::EhgafTriangle => SchemeParams::triangle(dims.r_max, 0.0),
        Scheme::EhgafTwoType => SchemeParams::two_type(k),
    })
}

/// Worst Req I / Req II distances realized by concrete active positions.
///
/// Req II uses the farthest vertex of each (clipped) cell region.
pub fn check_requirements(
    partition: &Partition,
    actives: &[Option<Point>],
    range: f64,
) -> Result<ReqReport> {
    check_range(range)?;
    let active = |id: CellId| actives.get(id.0).copied().flatten();
    let mut req1 = 0.0f64;
    for &(a, b) in &partition.adjacency {
        let (pa, pb) = match (active(a), active(b)) {
            (Some(pa), Some(pb)) => (pa, pb),
            _ => {
                return Err(Error::IncompleteInput(format!(
                    "no active position for adjacency pair ({a}, {b})"
                )))
            }
        };
        req1 = req1.max(distance(pa, pb));
    }
    let mut req2 = 0.0f64;
    for cell in &partition.cells {
        if let Some(p) = active(cell.id) {
            for v in &cell.region {
                req2 = req2.max(distance(p, *v));
            }
        }
    }
    Ok(report(partition.params, range, req1, req2))
}

/// Active positions that realize the analytic worst cases.
///
/// Rectangular cells take a corner of their active region, lower-left in
/// even columns and upper-right in odd ones, so horizontally adjacent pairs
/// are as far apart as the region allows. Triangular cells take the apex of
/// the active region pointing away from the cell's base. Point regions are
/// returned unchanged.
pub fn adversarial_actives(partition: &Partition, round: u64) -> Vec<Option<Point>> {
    partition
        .cells
        .iter()
        .map(|cell| {
            let region = partition.active_region(cell.id, round).ok()?;
            let lex = |a: &&Point, b: &&Point| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y));
            let pick = match cell.shape {
                CellShape::Rectangle { .. } if cell.col.rem_euclid(2) == 0 => region.iter().min_by(lex),
                CellShape::Rectangle { .. } => region.iter().max_by(lex),
                CellShape::TriangleUp { .. } => region.iter().max_by(|a, b| a.y.total_cmp(&b.y)),
                CellShape::TriangleDown { .. } => region.iter().min_by(|a, b| a.y.total_cmp(&b.y)),
            };
            pick.copied()
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WorstDistances {
    pub req1_worst: f64,
    pub req2_worst: f64,
}

/// Samples of a convex region: for horizontal scan lines at pitch ≤
/// `resolution` (including the top and bottom), the two endpoints of the
/// line's intersection with the region. The maximum distance from any point
/// to the region is attained on these extremes, so interior samples would
/// not change the result.
fn scanline_samples(region: &[Point], resolution: f64) -> Vec<Point> {
    if region.len() < 3 {
        return region.to_vec();
    }
    let (ymin, ymax) = region
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| (lo.min(p.y), hi.max(p.y)));
    let lines = ((ymax - ymin) / resolution).ceil().max(1.0) as usize;
    let mut out = Vec::with_capacity(2 * (lines + 1));
    for i in 0..=lines {
        let y = if i == lines { ymax } else { ymin + (ymax - ymin) * i as f64 / lines as f64 };
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for e in 0..region.len() {
            let (a, b) = (region[e], region[(e + 1) % region.len()]);
            let (y0, y1) = (a.y.min(b.y), a.y.max(b.y));
            if y < y0 || y > y1 {
                continue;
            }
            if a.y == b.y {
                lo = lo.min(a.x.min(b.x));
                hi = hi.max(a.x.max(b.x));
            } else {
                let x = a.x + (y - a.y) / (b.y - a.y) * (b.x - a.x);
                lo = lo.min(x);
                hi = hi.max(x);
            }
        }
        if lo.is_finite() {
            out.push(Point::new(lo, y));
            if hi > lo {
                out.push(Point::new(hi, y));
            }
        }
    }
    out
}

fn max_pair_distance(a: &[Point], b: &[Point]) -> f64 {
    let mut best = 0.0f64;
    for p in a {
        for q in b {
            let dx = p.x - q.x;
            let dy = p.y - q.y;
            best = best.max(dx * dx + dy * dy);
        }
    }
    best.sqrt()
}

/// Sampling oracle for the worst Req I / Req II distances of a partition.
///
/// Every cell and every active region is sampled at pitch ≤ `resolution`.
/// HGAF with `d > 0` is checked over `min(rounds_to_check, (r/d)²)` rounds;
/// HGAF with `d = 0` treats each sampled in-cell offset as one round of the
/// lockstep rotation. Other schemes are static and use round 0.
pub fn brute_force_worst_distances(
    partition: &Partition,
    resolution: f64,
    rounds_to_check: u64,
) -> Result<WorstDistances> {
    if !(resolution > 0.0 && resolution.is_finite()) {
        return Err(invalid(format!("resolution must be positive, got {resolution}")));
    }
    let cell_samples: Vec<Vec<Point>> = partition
        .cells
        .iter()
        .map(|c| scanline_samples(&c.region, resolution))
        .collect();

    let params = partition.params;
    if params.scheme == Scheme::Hgaf && params.d == 0.0 {
        return Ok(lockstep_offsets(partition, &cell_samples, resolution));
    }
    let rounds = match (params.scheme, params.subdivisions()) {
        (Scheme::Hgaf, Some(q)) => rounds_to_check.clamp(1, u64::from(q) * u64::from(q)),
        _ => 1,
    };

    let mut worst = WorstDistances { req1_worst: 0.0, req2_worst: 0.0 };
    for round in 0..rounds {
        let active_samples: Vec<Vec<Point>> = partition
            .cells
            .iter()
            .map(|c| partition.active_region(c.id, round).map(|r| scanline_samples(&r, resolution)))
            .collect::<Result<_>>()?;
        for &(a, b) in &partition.adjacency {
            worst.req1_worst = worst
                .req1_worst
                .max(max_pair_distance(&active_samples[a.0], &active_samples[b.0]));
        }
        for (act, cell) in active_samples.iter().zip(&cell_samples) {
            worst.req2_worst = worst.req2_worst.max(max_pair_distance(act, cell));
        }
    }
    Ok(worst)
}

fn lockstep_offsets(partition: &Partition, cell_samples: &[Vec<Point>], resolution: f64) -> WorstDistances {
    let r = partition.params.r;
    let unit = CellShape::Rectangle { origin: Point::new(0.0, 0.0), width: r, height: r };
    let offsets = scanline_samples(&unit.vertices(), resolution);
    let origins: Vec<Point> = partition
        .cells
        .iter()
        .map(|c| match c.shape {
            CellShape::Rectangle { origin, .. } => origin,
            other => other.centroid(),
        })
        .collect();
    let mut worst = WorstDistances { req1_worst: 0.0, req2_worst: 0.0 };
    for off in offsets {
        let active = |i: usize| {
            let p = Point::new(origins[i].x + off.x, origins[i].y + off.y);
            crate::geometry::polygon_contains_closed(&partition.cells[i].region, p).then_some(p)
        };
        for &(a, b) in &partition.adjacency {
            if let (Some(pa), Some(pb)) = (active(a.0), active(b.0)) {
                worst.req1_worst = worst.req1_worst.max(distance(pa, pb));
            }
        }
        for (i, samples) in cell_samples.iter().enumerate() {
            if let Some(p) = active(i) {
                worst.req2_worst = worst.req2_worst.max(max_pair_distance(&[p], samples));
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Orientation;
    use crate::partition::{build_partition, FieldSpec};
    use proptest::prelude::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn worst_adjacent_examples() {
        let gaf = SchemeParams::gaf(1.0 / 5f64.sqrt());
        assert!(close(worst_adjacent_distance(&gaf, 1.0).unwrap(), 1.0, 1e-15));
        let e = SchemeParams::ehgaf(0.9, 0.1);
        assert!(close(worst_adjacent_distance(&e, 1.0).unwrap(), 1.01f64.sqrt(), 1e-15));
        assert!(close(worst_adjacent_distance(&e, 1.0).unwrap(), 1.004_987, 1e-6));
        let t = SchemeParams::triangle(1.5, 0.0);
        assert!(close(worst_adjacent_distance(&t, 1.0).unwrap(), 1.0, 1e-15));
    }

    #[test]
    fn worst_intracell_examples() {
        let gaf = SchemeParams::gaf(1.0 / SQRT2);
        assert!(close(worst_intracell_distance(&gaf, 1.0).unwrap(), 1.0, 1e-15));
        let e = SchemeParams::ehgaf(0.9, 0.1);
        assert!(close(worst_intracell_distance(&e, 1.0).unwrap(), std::f64::consts::FRAC_1_SQRT_2, 1e-7));
        let two = SchemeParams::two_type(4);
        assert!(close(worst_intracell_distance(&two, 1.0).unwrap(), 1.0, 1e-15));
        assert!(worst_intracell_distance(&SchemeParams::hgaf(1.0, 0.3), 1.0).is_err());
    }

    /// Vertex enumeration over the central subcells of two triangles that
    /// share a horizontal edge; independent of the closed forms above.
    #[test]
    fn triangle_subcell_formulas_match_vertex_enumeration() {
        for (h, d) in [(1.2, 0.3), (1.0, 0.25), (2.0, 0.2), (0.7, 0.1)] {
            let b = 2.0 * h / SQRT3;
            let up = CellShape::triangle(Point::new(0.0, 0.0), b, Orientation::Up);
            let below = CellShape::triangle(Point::new(0.0, 0.0), b, Orientation::Down);
            let sub_b = 2.0 * d / SQRT3;
            let cu = up.centroid();
            let cd = below.centroid();
            let sub_up = CellShape::triangle(Point::new(cu.x - sub_b / 2.0, cu.y - d / 3.0), sub_b, Orientation::Up);
            let sub_down = CellShape::triangle(Point::new(cd.x - sub_b / 2.0, cd.y + d / 3.0), sub_b, Orientation::Down);
            let adj = max_pair_distance(&sub_up.vertices(), &sub_down.vertices());
            let intra = max_pair_distance(&sub_up.vertices(), &up.vertices());
            let params = SchemeParams::triangle(h, d);
            assert!(close(worst_adjacent_distance(&params, 1.0).unwrap(), adj, 1e-12), "h={h} d={d}");
            assert!(close(worst_intracell_distance(&params, 1.0).unwrap(), intra, 1e-12), "h={h} d={d}");
        }
    }

    #[test]
    fn max_dims_examples() {
        let g = max_cell_dims(Scheme::Gaf, 0.0, 1.0).unwrap();
        assert!(close(g.r_max, 0.447_213_6, 1e-7) && close(g.cell_area, 0.2, 1e-15));
        assert_eq!(g.binding, Binding::ReqI);
        let e = max_cell_dims(Scheme::Ehgaf, 0.0, 1.0).unwrap();
        assert_eq!((e.r_max, e.cell_area, e.binding), (1.0, 1.0, Binding::ReqI));
        let t = max_cell_dims(Scheme::EhgafTriangle, 0.0, 1.0).unwrap();
        assert!(close(t.r_max, 1.5, 1e-15) && close(t.cell_area, 1.299_038_1, 1e-7));
        assert_eq!(t.binding, Binding::Both);
        let h = max_cell_dims(Scheme::Hgaf, 0.0, 1.0).unwrap();
        assert!(close(h.cell_area, 0.5, 1e-15));
        assert_eq!(h.binding, Binding::ReqII);
        let two = max_cell_dims(Scheme::EhgafTwoType, 0.0, 1.0).unwrap();
        assert!(close(two.cell_area, SQRT3, 1e-15));
        assert!(close(two.type_b_area.unwrap(), SQRT3 / 2.0, 1e-15));
        assert!(max_cell_dims(Scheme::Hgaf, -0.1, 1.0).is_err());
        assert!(max_cell_dims(Scheme::Hgaf, 0.9, 1.0).is_err());
    }

    #[test]
    fn check_requirements_examples() {
        let field = FieldSpec::new(2.0 / 5f64.sqrt(), 1.0 / 5f64.sqrt(), 1.0).unwrap();
        let r = 1.0 / 5f64.sqrt();
        let p = build_partition(field, SchemeParams::gaf(r)).unwrap();
        assert_eq!(p.len(), 2);
        let fig = vec![Some(Point::new(0.0, 0.0)), Some(Point::new(2.0 * r, r))];
        let rep = check_requirements(&p, &fig, 1.0).unwrap();
        assert!(close(rep.req1_worst, 1.0, 1e-12) && rep.feasible);
        assert_eq!(rep.binding, Binding::ReqI);

        let wide = build_partition(FieldSpec::new(1.0, 0.5, 1.0).unwrap(), SchemeParams::gaf(0.5)).unwrap();
        let fig = vec![Some(Point::new(0.0, 0.0)), Some(Point::new(1.0, 0.5))];
        let rep = check_requirements(&wide, &fig, 1.0).unwrap();
        assert!(close(rep.req1_worst, 0.5 * 5f64.sqrt(), 1e-12));
        assert!(!rep.feasible);

        let single = build_partition(FieldSpec::new(1.0, 1.0, 1.0).unwrap(), SchemeParams::ehgaf(1.0, 0.0)).unwrap();
        let rep = check_requirements(&single, &[Some(Point::new(0.5, 0.5))], 1.0).unwrap();
        assert!(close(rep.req2_worst, SQRT2 / 2.0, 1e-15) && rep.feasible);
        assert_eq!(rep.binding, Binding::None);

        assert!(matches!(check_requirements(&p, &[Some(Point::new(0.0, 0.0))], 1.0), Err(Error::IncompleteInput(_))));
    }

    #[test]
    fn brute_force_examples() {
        let r = 1.0 / 5f64.sqrt();
        let p = build_partition(FieldSpec::new(3.0 * r, 3.0 * r, 1.0).unwrap(), SchemeParams::gaf(r)).unwrap();
        let w = brute_force_worst_distances(&p, 1e-3, 1).unwrap();
        assert!(w.req1_worst <= 1.0 + 1e-12 && w.req1_worst >= 1.0 - 3e-3, "{w:?}");

        let one = build_partition(FieldSpec::new(1.0, 1.0, 1.0).unwrap(), SchemeParams::ehgaf(1.0, 0.0)).unwrap();
        let mut prev = 0.0;
        for res in [0.3, 0.1, 0.01] {
            let w = brute_force_worst_distances(&one, res, 1).unwrap();
            assert_eq!(w.req1_worst, 0.0);
            assert!(w.req2_worst >= prev - 1e-12 && w.req2_worst <= SQRT2 / 2.0 + 1e-12);
            prev = w.req2_worst;
        }
        assert!(close(prev, SQRT2 / 2.0, 1e-9));
        assert!(brute_force_worst_distances(&one, 0.0, 1).is_err());
    }

    #[test]
    fn adversarial_placement_realizes_analytic_worst() {
        let cases = [
            (SchemeParams::gaf(0.4), 3.0 * 0.4),
            (SchemeParams::hgaf(0.6, 0.2), 1.8),
            (SchemeParams::hgaf(0.7, 0.0), 2.1),
            (SchemeParams::ehgaf(0.9, 0.1), 2.7),
        ];
        for (params, side) in cases {
            let p = build_partition(FieldSpec::new(side, side, 1.0).unwrap(), params).unwrap();
            let rep = check_requirements(&p, &adversarial_actives(&p, 0), 1.0).unwrap();
            let want = analytic_report(&params, 1.0).unwrap();
            assert!(close(rep.req1_worst, want.req1_worst, 1e-12), "{params:?}: {rep:?}");
            assert!(close(rep.req2_worst, want.req2_worst, 1e-12), "{params:?}: {rep:?}");
        }
        let h = 1.2;
        let b = 2.0 * h / SQRT3;
        let params = SchemeParams::triangle(h, 0.3);
        let p = build_partition(FieldSpec::new(3.0 * b, 3.0 * h, 1.0).unwrap(), params).unwrap();
        let rep = check_requirements(&p, &adversarial_actives(&p, 0), 1.0).unwrap();
        assert!(close(rep.req1_worst, worst_adjacent_distance(&params, 1.0).unwrap(), 1e-12));
        assert!(close(rep.req2_worst, worst_intracell_distance(&params, 1.0).unwrap(), 1e-12));
    }

    fn arb_square(max_r: f64) -> impl Strategy<Value = SchemeParams> {
        prop_oneof![
            (0.1..max_r).prop_map(SchemeParams::gaf),
            (0.1..max_r, 1u32..4).prop_map(|(r, q)| SchemeParams::hgaf(r, r / q as f64)),
            (0.1..max_r, 0u32..3).prop_map(|(r, c)| SchemeParams::ehgaf(r, r / (2 * c + 1) as f64)),
            (0.1..max_r, 1u32..3).prop_map(|(r, c)| SchemeParams::triangle(r, r / (3 * c + 1) as f64)),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn oracle_agrees_with_closed_forms(params in arb_square(1.0)) {
            let (w, h) = match params.scheme {
                Scheme::EhgafTriangle => (3.0 * 2.0 * params.r / SQRT3, 3.0 * params.r),
                _ => (3.0 * params.r, 3.0 * params.r),
            };
            let p = build_partition(FieldSpec::new(w, h, 1.0).unwrap(), params).unwrap();
            let res = 5e-3;
            let bf = brute_force_worst_distances(&p, res, u64::MAX).unwrap();
            let a1 = worst_adjacent_distance(&params, 1.0).unwrap();
            let a2 = worst_intracell_distance(&params, 1.0).unwrap();
            let slack = 2.0 * res * SQRT2;
            prop_assert!(bf.req1_worst <= a1 + 1e-12 && bf.req1_worst >= a1 - slack, "{:?} vs {}", bf, a1);
            prop_assert!(bf.req2_worst <= a2 + 1e-12 && bf.req2_worst >= a2 - slack, "{:?} vs {}", bf, a2);
        }

        #[test]
        fn max_dims_are_tight(scheme in prop::sample::select(vec![Scheme::Gaf, Scheme::Hgaf, Scheme::Ehgaf, Scheme::EhgafTriangle]),
                              frac in 0.0..0.2f64, range in 0.5..3.0f64) {
            let d = if scheme == Scheme::Gaf { 0.0 } else { frac * range };
            let dims = max_cell_dims(scheme, d, range).unwrap();
            // divisibility of r by d is irrelevant to the closed forms
            let eval = |r: f64| (adjacent_closed_form(scheme, r, d, range), intracell_closed_form(scheme, r, d, range));
            let (a1, a2) = eval(dims.r_max);
            let bound = match dims.binding { Binding::ReqI => a1, Binding::ReqII => a2, _ => a1.max(a2) };
            prop_assert!((bound - range).abs() <= 1e-9 * range);
            prop_assert!(a1 <= range * (1.0 + 1e-9) && a2 <= range * (1.0 + 1e-9));
            let (b1, b2) = eval(dims.r_max * (1.0 + 1e-6));
            prop_assert!(b1.max(b2) > range * (1.0 + 1e-9));
        }

        #[test]
        fn square_r_max_non_increasing_in_d(scheme in prop::sample::select(vec![Scheme::Hgaf, Scheme::Ehgaf]),
                                            d1 in 0.0..0.3f64, d2 in 0.0..0.3f64) {
            let (lo, hi) = if d1 <= d2 { (d1, d2) } else { (d2, d1) };
            prop_assert!(max_cell_dims(scheme, hi, 1.0).unwrap().r_max <= max_cell_dims(scheme, lo, 1.0).unwrap().r_max + 1e-15);
        }
    }
}
