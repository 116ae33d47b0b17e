//! Planar primitives shared by every scheme: points, discs, the equal-radius
//! lens area, convex cell shapes with half-open ownership, and a seeded
//! Monte Carlo area estimator for unions and intersections of discs.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Relative slack used for every "distance ≤ R" comparison.
pub const RANGE_REL_TOL: f64 = 1e-9;

/// Number of independent RNG streams a Monte Carlo estimate is split into.
/// Fixed so results do not depend on the size of the thread pool.
pub const MC_WORKERS: u64 = 8;

/// Absolute slack (scaled by shape size) for deciding that a point sits on an edge.
const EDGE_EPS: f64 = 1e-12;

/// True when `dist` is within radio range `range`, using [`RANGE_REL_TOL`].
pub fn within_range(dist: f64, range: f64) -> bool {
    dist <= range * (1.0 + RANGE_REL_TOL)
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(self, other: Point) -> f64 {
        distance(self, other)
    }

    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

/// Euclidean distance.
pub fn distance(p: Point, q: Point) -> f64 {
    (p.x - q.x).hypot(p.y - q.y)
}

fn cross(a: Point, b: Point) -> f64 {
    a.x * b.y - a.y * b.x
}

/// A closed disc, the coverage region of a node with radio range `radius`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Disc {
    pub center: Point,
    pub radius: f64,
}

impl Disc {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(invalid(format!("disc radius must be positive, got {radius}")));
        }
        if !center.is_finite() {
            return Err(invalid("disc center must be finite"));
        }
        Ok(Self { center, radius })
    }

    pub fn contains(&self, p: Point) -> bool {
        let dx = p.x - self.center.x;
        let dy = p.y - self.center.y;
        dx * dx + dy * dy <= self.radius * self.radius
    }

    pub fn area(&self) -> f64 {
        PI * self.radius * self.radius
    }
}

/// Area of the intersection of two discs of radius `radius` whose centers are
/// `center_distance` apart.
///
/// `2r²·acos(d/2r) − (d/2)·√(4r² − d²)` for `d < 2r`, zero otherwise.
pub fn lens_area(radius: f64, center_distance: f64) -> Result<f64> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(invalid(format!("radius must be positive, got {radius}")));
    }
    if !(center_distance >= 0.0) {
        return Err(invalid(format!(
            "center distance must be non-negative, got {center_distance}"
        )));
    }
    let d = center_distance;
    if d >= 2.0 * radius {
        return Ok(0.0);
    }
    let r2 = radius * radius;
    let half_angle = (d / (2.0 * radius)).clamp(-1.0, 1.0).acos();
    let chord_term = 0.5 * d * (4.0 * r2 - d * d).max(0.0).sqrt();
    Ok((2.0 * r2 * half_angle - chord_term).max(0.0))
}

/// Axis-aligned box used as the Monte Carlo sampling domain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundingBox {
    pub min: Point,
    pub max: Point,
}

impl BoundingBox {
    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    fn of_discs(discs: &[Disc]) -> Option<Self> {
        let first = discs.first()?;
        let mut bb = BoundingBox {
            min: Point::new(first.center.x - first.radius, first.center.y - first.radius),
            max: Point::new(first.center.x + first.radius, first.center.y + first.radius),
        };
        for d in &discs[1..] {
            bb.min.x = bb.min.x.min(d.center.x - d.radius);
            bb.min.y = bb.min.y.min(d.center.y - d.radius);
            bb.max.x = bb.max.x.max(d.center.x + d.radius);
            bb.max.y = bb.max.y.max(d.center.y + d.radius);
        }
        Some(bb)
    }
}

/// A Monte Carlo area estimate with its binomial standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AreaEstimate {
    pub area: f64,
    pub std_error: f64,
    pub samples: u64,
}

/// Hit-or-miss estimate of the area of `{p in domain : inside(p)}`.
///
/// Samples are split across [`MC_WORKERS`] ChaCha8 streams derived from
/// `seed`, so the result is identical however the work is scheduled.
pub fn estimate_area<F>(domain: BoundingBox, samples: u64, seed: u64, inside: F) -> Result<AreaEstimate>
where
    F: Fn(Point) -> bool + Sync,
{
    if samples == 0 {
        return Err(invalid("Monte Carlo estimate needs at least one sample"));
    }
    if !(domain.width() >= 0.0 && domain.height() >= 0.0) {
        return Err(invalid("sampling domain has negative extent"));
    }
    let per_worker = samples / MC_WORKERS;
    let remainder = samples % MC_WORKERS;
    let hits: u64 = (0..MC_WORKERS)
        .into_par_iter()
        .map(|worker| {
            let n = per_worker + u64::from(worker < remainder);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(worker);
            let mut hits = 0u64;
            for _ in 0..n {
                let p = Point::new(
                    domain.min.x + rng.gen::<f64>() * domain.width(),
                    domain.min.y + rng.gen::<f64>() * domain.height(),
                );
                if inside(p) {
                    hits += 1;
                }
            }
            hits
        })
        .sum();
    let frac = hits as f64 / samples as f64;
    let box_area = domain.area();
    Ok(AreaEstimate {
        area: box_area * frac,
        std_error: box_area * (frac * (1.0 - frac) / samples as f64).sqrt(),
        samples,
    })
}

/// Monte Carlo estimate of the area covered by at least one disc.
pub fn union_area_mc(discs: &[Disc], samples: u64, seed: u64) -> Result<AreaEstimate> {
    let domain = BoundingBox::of_discs(discs).ok_or_else(|| invalid("no discs given"))?;
    estimate_area(domain, samples, seed, |p| discs.iter().any(|d| d.contains(p)))
}

/// Monte Carlo estimate of the area covered by every disc.
pub fn intersection_area_mc(discs: &[Disc], samples: u64, seed: u64) -> Result<AreaEstimate> {
    let domain = BoundingBox::of_discs(discs).ok_or_else(|| invalid("no discs given"))?;
    estimate_area(domain, samples, seed, |p| discs.iter().all(|d| d.contains(p)))
}

/// Union area of `n` radius-`radius` discs centered at `(i·spacing, 0)`.
pub fn chain_union_area_mc(
    n: usize,
    spacing: f64,
    radius: f64,
    samples: u64,
    seed: u64,
) -> Result<AreaEstimate> {
    if n == 0 {
        return Err(invalid("chain needs at least one disc"));
    }
    if !(spacing >= 0.0 && spacing.is_finite()) {
        return Err(invalid(format!("spacing must be non-negative, got {spacing}")));
    }
    let discs = (0..n)
        .map(|i| Disc::new(Point::new(i as f64 * spacing, 0.0), radius))
        .collect::<Result<Vec<_>>>()?;
    union_area_mc(&discs, samples, seed)
}

/// Orientation of a triangular cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    Up,
    Down,
}

/// Geometric extent of one cell.
///
/// Triangles are equilateral. For an upward triangle `base_left` is the
/// lower-left vertex; for a downward one it is the upper-left vertex and
/// the apex points down.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CellShape {
    Rectangle { origin: Point, width: f64, height: f64 },
    TriangleUp { base_left: Point, base: f64 },
    TriangleDown { base_left: Point, base: f64 },
}

impl CellShape {
    pub fn triangle(base_left: Point, base: f64, orientation: Orientation) -> Self {
        match orientation {
            Orientation::Up => CellShape::TriangleUp { base_left, base },
            Orientation::Down => CellShape::TriangleDown { base_left, base },
        }
    }

    pub fn is_well_formed(&self) -> bool {
        match *self {
            CellShape::Rectangle { origin, width, height } => {
                origin.is_finite() && width > 0.0 && height > 0.0 && width.is_finite() && height.is_finite()
            }
            CellShape::TriangleUp { base_left, base } | CellShape::TriangleDown { base_left, base } => {
                base_left.is_finite() && base > 0.0 && base.is_finite()
            }
        }
    }

    /// Vertices in counter-clockwise order.
    pub fn vertices(&self) -> Vec<Point> {
        match *self {
            CellShape::Rectangle { origin, width, height } => vec![
                origin,
                Point::new(origin.x + width, origin.y),
                Point::new(origin.x + width, origin.y + height),
                Point::new(origin.x, origin.y + height),
            ],
            CellShape::TriangleUp { base_left: p, base } => vec![
                p,
                Point::new(p.x + base, p.y),
                Point::new(p.x + 0.5 * base, p.y + triangle_height(base)),
            ],
            CellShape::TriangleDown { base_left: p, base } => vec![
                p,
                Point::new(p.x + 0.5 * base, p.y - triangle_height(base)),
                Point::new(p.x + base, p.y),
            ],
        }
    }

    pub fn area(&self) -> f64 {
        match *self {
            CellShape::Rectangle { width, height, .. } => width * height,
            CellShape::TriangleUp { base, .. } | CellShape::TriangleDown { base, .. } => {
                0.5 * base * triangle_height(base)
            }
        }
    }

    /// Center of mass; the barycenter for triangles.
    pub fn centroid(&self) -> Point {
        let v = self.vertices();
        let n = v.len() as f64;
        Point::new(
            v.iter().map(|p| p.x).sum::<f64>() / n,
            v.iter().map(|p| p.y).sum::<f64>() / n,
        )
    }

    pub fn bounding_box(&self) -> BoundingBox {
        polygon_bounds(&self.vertices())
    }

    fn scale(&self) -> f64 {
        match *self {
            CellShape::Rectangle { width, height, .. } => width.max(height),
            CellShape::TriangleUp { base, .. } | CellShape::TriangleDown { base, .. } => base,
        }
    }
}

/// Height of an equilateral triangle with side `base`.
pub fn triangle_height(base: f64) -> f64 {
    base * 3f64.sqrt() / 2.0
}

/// Half-open membership: a point on an edge belongs to the shape iff a tiny
/// step in direction `(1, ε)` moves it inside. For rectangles this makes the
/// left and bottom edges inclusive; for upward triangles the base and left
/// edge. Adjacent cells of a tiling therefore never both claim a point.
pub fn point_in_shape(shape: &CellShape, p: Point) -> bool {
    owns_point(&shape.vertices(), p, shape.scale())
}

pub(crate) fn owns_point(ccw: &[Point], p: Point, scale: f64) -> bool {
    let eps = EDGE_EPS * scale.max(1.0);
    let n = ccw.len();
    for i in 0..n {
        let a = ccw[i];
        let b = ccw[(i + 1) % n];
        let edge = b.sub(a);
        let len = edge.x.hypot(edge.y);
        if len == 0.0 {
            continue;
        }
        let signed = cross(edge, p.sub(a)) / len;
        if signed > eps {
            continue;
        }
        if signed < -eps {
            return false;
        }
        // inward normal of a CCW edge is (-edge.y, edge.x)
        let nx = -edge.y / len;
        let ny = edge.x / len;
        let inclusive = if nx.abs() > EDGE_EPS { nx > 0.0 } else { ny > 0.0 };
        if !inclusive {
            return false;
        }
    }
    true
}

/// Closed containment test for a convex CCW polygon.
pub fn polygon_contains_closed(ccw: &[Point], p: Point) -> bool {
    match ccw.len() {
        0 => false,
        1 => distance(ccw[0], p) <= EDGE_EPS,
        _ => {
            let scale = polygon_bounds(ccw).width().max(polygon_bounds(ccw).height()).max(1.0);
            let eps = EDGE_EPS * 1e3 * scale;
            (0..ccw.len()).all(|i| {
                let a = ccw[i];
                let b = ccw[(i + 1) % ccw.len()];
                let edge = b.sub(a);
                let len = edge.x.hypot(edge.y);
                len == 0.0 || cross(edge, p.sub(a)) / len >= -eps
            })
        }
    }
}

pub fn polygon_area(ccw: &[Point]) -> f64 {
    let n = ccw.len();
    if n < 3 {
        return 0.0;
    }
    0.5 * (0..n).map(|i| cross(ccw[i], ccw[(i + 1) % n])).sum::<f64>()
}

pub fn polygon_centroid(ccw: &[Point]) -> Point {
    let area = polygon_area(ccw);
    let n = ccw.len();
    if area.abs() <= f64::EPSILON || n < 3 {
        let k = n.max(1) as f64;
        return Point::new(
            ccw.iter().map(|p| p.x).sum::<f64>() / k,
            ccw.iter().map(|p| p.y).sum::<f64>() / k,
        );
    }
    let (mut cx, mut cy) = (0.0, 0.0);
    for i in 0..n {
        let (a, b) = (ccw[i], ccw[(i + 1) % n]);
        let w = cross(a, b);
        cx += (a.x + b.x) * w;
        cy += (a.y + b.y) * w;
    }
    Point::new(cx / (6.0 * area), cy / (6.0 * area))
}

pub fn polygon_bounds(pts: &[Point]) -> BoundingBox {
    let mut bb = BoundingBox {
        min: Point::new(f64::INFINITY, f64::INFINITY),
        max: Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
    };
    for p in pts {
        bb.min.x = bb.min.x.min(p.x);
        bb.min.y = bb.min.y.min(p.y);
        bb.max.x = bb.max.x.max(p.x);
        bb.max.y = bb.max.y.max(p.y);
    }
    bb
}

/// Sutherland–Hodgman clip of a convex CCW polygon against an axis-aligned box.
pub fn clip_to_box(ccw: &[Point], bb: &BoundingBox) -> Vec<Point> {
    // (normal axis, sign, bound): keep points with sign * coord >= sign * bound
    let planes = [
        (0usize, 1.0, bb.min.x),
        (0, -1.0, bb.max.x),
        (1, 1.0, bb.min.y),
        (1, -1.0, bb.max.y),
    ];
    let coord = |p: &Point, axis: usize| if axis == 0 { p.x } else { p.y };
    let mut poly = ccw.to_vec();
    for (axis, sign, bound) in planes {
        if poly.is_empty() {
            break;
        }
        let inside = |p: &Point| sign * (coord(p, axis) - bound) >= 0.0;
        let mut out = Vec::with_capacity(poly.len() + 1);
        for i in 0..poly.len() {
            let cur = poly[i];
            let prev = poly[(i + poly.len() - 1) % poly.len()];
            let (cin, pin) = (inside(&cur), inside(&prev));
            if cin != pin {
                let t = (bound - coord(&prev, axis)) / (coord(&cur, axis) - coord(&prev, axis));
                let mut q = Point::new(prev.x + t * (cur.x - prev.x), prev.y + t * (cur.y - prev.y));
                if axis == 0 {
                    q.x = bound;
                } else {
                    q.y = bound;
                }
                out.push(q);
            }
            if cin {
                out.push(cur);
            }
        }
        poly = out;
    }
    dedup_ring(poly)
}

fn dedup_ring(mut poly: Vec<Point>) -> Vec<Point> {
    poly.dedup_by(|a, b| distance(*a, *b) <= EDGE_EPS);
    while poly.len() > 1 && distance(poly[0], poly[poly.len() - 1]) <= EDGE_EPS {
        poly.pop();
    }
    poly
}

/// Intersection of two convex CCW polygons (clip `subject` by each edge of `clip`).
pub fn clip_convex(subject: &[Point], clip: &[Point]) -> Vec<Point> {
    if clip.len() < 3 {
        return subject.iter().copied().filter(|p| polygon_contains_closed(clip, *p)).collect();
    }
    let mut poly = subject.to_vec();
    for i in 0..clip.len() {
        if poly.is_empty() {
            break;
        }
        let a = clip[i];
        let b = clip[(i + 1) % clip.len()];
        let edge = b.sub(a);
        let side = |p: Point| cross(edge, p.sub(a));
        if poly.len() == 1 {
            if side(poly[0]) < -EDGE_EPS {
                poly.clear();
            }
            continue;
        }
        let mut out = Vec::with_capacity(poly.len() + 1);
        for j in 0..poly.len() {
            let cur = poly[j];
            let prev = poly[(j + poly.len() - 1) % poly.len()];
            let (sc, sp) = (side(cur), side(prev));
            if (sc >= 0.0) != (sp >= 0.0) {
                let t = sp / (sp - sc);
                out.push(Point::new(prev.x + t * (cur.x - prev.x), prev.y + t * (cur.y - prev.y)));
            }
            if sc >= 0.0 {
                out.push(cur);
            }
        }
        poly = out;
    }
    dedup_ring(poly)
}
