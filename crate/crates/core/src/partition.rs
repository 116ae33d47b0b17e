//! Cell decompositions of a rectangular sensor field for the five schemes.
//!
//! Rectangular schemes (GAF, HGAF, eHGAF) use an `r × r` square grid.
//! eHGAF-Triangle tiles the field with equilateral triangles of height `r`.
//! eHGAF-TwoType uses columns of width `R`: per period of `k` columns, `k − 1`
//! columns of `√3R`-tall type-A cells followed by one column of
//! `(√3/2)R`-tall type-B cells whose tiling is shifted down by `(√3/4)R`, so
//! every second B center lines up with the A centers beside it.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::geometry::{
    clip_convex, clip_to_box, owns_point, point_in_shape, polygon_area, polygon_centroid,
    polygon_contains_closed, BoundingBox, Orientation, Point,
};

pub use crate::geometry::CellShape;

const SQRT3: f64 = 1.732_050_807_568_877_2;
/// Slack when rounding `r / d` to an integer or counting cells.
const COUNT_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Scheme {
    #[serde(rename = "gaf")]
    Gaf,
    #[serde(rename = "hgaf")]
    Hgaf,
    #[serde(rename = "ehgaf")]
    Ehgaf,
    #[serde(rename = "ehgaf-triangle")]
    EhgafTriangle,
    #[serde(rename = "ehgaf-twotype")]
    EhgafTwoType,
}

impl Scheme {
    /// All schemes in increasing order of maximal cell size.
    pub const ALL: [Scheme; 5] = [
        Scheme::Gaf,
        Scheme::Hgaf,
        Scheme::Ehgaf,
        Scheme::EhgafTriangle,
        Scheme::EhgafTwoType,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Gaf => "gaf",
            Scheme::Hgaf => "hgaf",
            Scheme::Ehgaf => "ehgaf",
            Scheme::EhgafTriangle => "ehgaf-triangle",
            Scheme::EhgafTwoType => "ehgaf-twotype",
        }
    }

    pub fn is_rectangular_grid(self) -> bool {
        matches!(self, Scheme::Gaf | Scheme::Hgaf | Scheme::Ehgaf)
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scheme::ALL
            .into_iter()
            .find(|sc| sc.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| invalid(format!("unknown scheme `{s}`")))
    }
}

/// Rectangular field `[0, width) × [0, height)` and the common radio range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub width: f64,
    pub height: f64,
    pub radio_range: f64,
}

impl FieldSpec {
    pub fn new(width: f64, height: f64, radio_range: f64) -> Result<Self> {
        let f = Self { width, height, radio_range };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("width", self.width), ("height", self.height), ("radio range", self.radio_range)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(invalid(format!("field {name} must be positive, got {v}")));
            }
        }
        Ok(())
    }

    pub fn area(&self) -> f64 {
        self.width * self.height
    }

    pub fn bounds(&self) -> BoundingBox {
        BoundingBox { min: Point::new(0.0, 0.0), max: Point::new(self.width, self.height) }
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x >= 0.0 && p.y >= 0.0 && p.x < self.width && p.y < self.height
    }
}

/// Scheme choice plus its size parameters.
///
/// `r` is the square edge (GAF/HGAF/eHGAF) or the triangle height
/// (eHGAF-Triangle) and is unused by eHGAF-TwoType. `d` is the subcell size,
/// with `d = 0` standing for the infinitely fine subdivision. `k` is the
/// period of type-B columns for eHGAF-TwoType.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SchemeParams {
    pub scheme: Scheme,
    pub r: f64,
    #[serde(default)]
    pub d: f64,
    #[serde(default)]
    pub k: u32,
}

impl SchemeParams {
    pub fn gaf(r: f64) -> Self {
        Self { scheme: Scheme::Gaf, r, d: 0.0, k: 0 }
    }

    pub fn hgaf(r: f64, d: f64) -> Self {
        Self { scheme: Scheme::Hgaf, r, d, k: 0 }
    }

    pub fn ehgaf(r: f64, d: f64) -> Self {
        Self { scheme: Scheme::Ehgaf, r, d, k: 0 }
    }

    pub fn triangle(height: f64, d: f64) -> Self {
        Self { scheme: Scheme::EhgafTriangle, r: height, d, k: 0 }
    }

    pub fn two_type(k: u32) -> Self {
        Self { scheme: Scheme::EhgafTwoType, r: 0.0, d: 0.0, k }
    }

    /// Number of subcells along one cell edge (`r / d`), `None` when `d = 0`.
    pub fn subdivisions(&self) -> Option<u32> {
        if self.d == 0.0 || self.scheme == Scheme::Gaf || self.scheme == Scheme::EhgafTwoType {
            None
        } else {
            Some((self.r / self.d).round() as u32)
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.scheme == Scheme::EhgafTwoType {
            if self.k < 2 {
                return Err(invalid(format!("two-type period k must be >= 2, got {}", self.k)));
            }
            if self.d != 0.0 {
                return Err(invalid("two-type scheme is defined for d = 0 only"));
            }
            return Ok(());
        }
        if !(self.r > 0.0 && self.r.is_finite()) {
            return Err(invalid(format!("cell size r must be positive, got {}", self.r)));
        }
        if !(self.d >= 0.0 && self.d.is_finite()) {
            return Err(invalid(format!("subcell size d must be >= 0, got {}", self.d)));
        }
        if self.d == 0.0 || self.scheme == Scheme::Gaf {
            return Ok(());
        }
        let q = self.r / self.d;
        let qi = q.round();
        if qi < 1.0 || (q - qi).abs() > COUNT_EPS * q.max(1.0) {
            return Err(invalid(format!("r = {} is not divisible by d = {}", self.r, self.d)));
        }
        let qi = qi as u64;
        match self.scheme {
            Scheme::Ehgaf if qi.is_multiple_of(2) => {
                Err(invalid(format!("eHGAF needs an odd r/d, got {qi}")))
            }
            Scheme::EhgafTriangle if qi < 4 || qi % 3 != 1 => {
                Err(invalid(format!("triangle cells need r/d = 3c+1 with c >= 1, got {qi}")))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CellId(pub usize);

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CellType {
    A,
    B,
    #[serde(rename = "uniform")]
    Uniform,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cell {
    pub id: CellId,
    pub col: i64,
    pub row: i64,
    #[serde(flatten)]
    pub shape: CellShape,
    #[serde(rename = "type")]
    pub cell_type: CellType,
    /// The shape clipped to the field, counter-clockwise.
    pub region: Vec<Point>,
}

impl Cell {
    pub fn area(&self) -> f64 {
        polygon_area(&self.region)
    }

    pub fn is_clipped(&self) -> bool {
        (self.area() - self.shape.area()).abs() > 1e-9 * self.shape.area()
    }
}

#[derive(Serialize, Deserialize)]
struct PartitionDoc {
    field: FieldSpec,
    scheme: Scheme,
    params: SchemeParams,
    cells: Vec<Cell>,
    adjacency: Vec<[CellId; 2]>,
    grid_offset: Point,
}

/// A tiling of the field plus the cell pairs whose active nodes must be linked.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "PartitionDoc", try_from = "PartitionDoc")]
pub struct Partition {
    pub field: FieldSpec,
    pub params: SchemeParams,
    pub cells: Vec<Cell>,
    pub adjacency: Vec<(CellId, CellId)>,
    pub grid_offset: Point,
}

impl From<Partition> for PartitionDoc {
    fn from(p: Partition) -> Self {
        PartitionDoc {
            field: p.field,
            scheme: p.params.scheme,
            params: p.params,
            cells: p.cells,
            adjacency: p.adjacency.into_iter().map(|(a, b)| [a, b]).collect(),
            grid_offset: p.grid_offset,
        }
    }
}

impl TryFrom<PartitionDoc> for Partition {
    type Error = Error;

    fn try_from(doc: PartitionDoc) -> Result<Self> {
        doc.field.validate()?;
        doc.params.validate()?;
        if doc.scheme != doc.params.scheme {
            return Err(invalid("scheme does not match params.scheme"));
        }
        for (i, c) in doc.cells.iter().enumerate() {
            if c.id.0 != i {
                return Err(invalid(format!("cell ids must be dense and ordered, found {} at {i}", c.id)));
            }
            if !c.shape.is_well_formed() {
                return Err(invalid(format!("cell {} has a malformed shape", c.id)));
            }
        }
        let n = doc.cells.len();
        let mut adjacency = Vec::with_capacity(doc.adjacency.len());
        for [a, b] in doc.adjacency {
            if a.0 >= n || b.0 >= n || a == b {
                return Err(invalid(format!("bad adjacency pair ({a}, {b})")));
            }
            adjacency.push((a.min(b), a.max(b)));
        }
        adjacency.sort_unstable();
        adjacency.dedup();
        Ok(Partition {
            field: doc.field,
            params: doc.params,
            cells: doc.cells,
            adjacency,
            grid_offset: doc.grid_offset,
        })
    }
}

/// Build the cell decomposition for `params` over `field`.
pub fn build_partition(field: FieldSpec, params: SchemeParams) -> Result<Partition> {
    build_with_offset(field, params, Point::new(0.0, 0.0))
}

fn build_with_offset(field: FieldSpec, params: SchemeParams, offset: Point) -> Result<Partition> {
    field.validate()?;
    params.validate()?;
    let raw = match params.scheme {
        Scheme::Gaf | Scheme::Hgaf | Scheme::Ehgaf => square_grid(&field, params.r, offset),
        Scheme::EhgafTriangle => triangle_grid(&field, params.r, offset),
        Scheme::EhgafTwoType => two_type_grid(&field, params.k),
    };
    Ok(assemble(field, params, offset, raw))
}

struct RawCell {
    col: i64,
    row: i64,
    shape: CellShape,
    cell_type: CellType,
}

/// Pair of quantized (col, row) or vertex keys.
type EdgeKey = ((i64, i64), (i64, i64));

struct RawTiling {
    cells: Vec<RawCell>,
    /// Adjacency expressed on (col, row) keys; `None` means derive from shared edges.
    links: Option<Vec<EdgeKey>>,
}

/// Range of integer indices `i` with `[start + i·step, start + (i+1)·step)` meeting `[0, len)`.
fn index_range(start: f64, step: f64, len: f64) -> (i64, i64) {
    let lo = ((0.0 - start) / step + COUNT_EPS).floor() as i64;
    let hi = ((len - start) / step - COUNT_EPS).ceil() as i64 - 1;
    (lo, hi.max(lo))
}

fn square_grid(field: &FieldSpec, r: f64, offset: Point) -> RawTiling {
    let (c0, c1) = index_range(offset.x, r, field.width);
    let (r0, r1) = index_range(offset.y, r, field.height);
    let mut cells = Vec::new();
    let mut links = Vec::new();
    for i in c0..=c1 {
        for j in r0..=r1 {
            let origin = Point::new(offset.x + i as f64 * r, offset.y + j as f64 * r);
            cells.push(RawCell {
                col: i - c0,
                row: j - r0,
                shape: CellShape::Rectangle { origin, width: r, height: r },
                cell_type: CellType::Uniform,
            });
            let key = (i - c0, j - r0);
            if i < c1 {
                links.push((key, (key.0 + 1, key.1)));
            }
            if j < r1 {
                links.push((key, (key.0, key.1 + 1)));
            }
        }
    }
    RawTiling { cells, links: Some(links) }
}

fn triangle_grid(field: &FieldSpec, height: f64, offset: Point) -> RawTiling {
    let base = 2.0 * height / SQRT3;
    let half = 0.5 * base;
    let (j0, j1) = index_range(offset.y, height, field.height);
    let mut cells = Vec::new();
    for j in j0..=j1 {
        let shift = offset.x + (j.rem_euclid(2)) as f64 * half;
        let y = offset.y + j as f64 * height;
        // triangle m spans x in [shift + m·b/2, shift + m·b/2 + b]
        let m0 = ((0.0 - shift - base) / half).floor() as i64;
        let m1 = ((field.width - shift) / half).ceil() as i64;
        for m in m0..=m1 {
            let left = shift + m as f64 * half;
            let shape = if m.rem_euclid(2) == 0 {
                CellShape::triangle(Point::new(left, y), base, Orientation::Up)
            } else {
                CellShape::triangle(Point::new(left, y + height), base, Orientation::Down)
            };
            cells.push(RawCell { col: m, row: j - j0, shape, cell_type: CellType::Uniform });
        }
    }
    RawTiling { cells, links: None }
}

fn two_type_grid(field: &FieldSpec, k: u32) -> RawTiling {
    let big_r = field.radio_range;
    let a_height = SQRT3 * big_r;
    let b_height = 0.5 * a_height;
    let b_phase = -0.25 * a_height;
    let columns = (field.width / big_r - COUNT_EPS).ceil().max(1.0) as i64;
    let is_b = |c: i64| c.rem_euclid(i64::from(k)) == i64::from(k) - 1;
    let (_, a_last) = index_range(0.0, a_height, field.height);
    let (_, b_last) = index_range(b_phase, b_height, field.height);

    let mut cells = Vec::new();
    let mut links = Vec::new();
    for c in 0..columns {
        let x = c as f64 * big_r;
        if is_b(c) {
            for m in 0..=b_last {
                let origin = Point::new(x, b_phase + m as f64 * b_height);
                cells.push(RawCell {
                    col: c,
                    row: m,
                    shape: CellShape::Rectangle { origin, width: big_r, height: b_height },
                    cell_type: CellType::B,
                });
                if m < b_last {
                    links.push(((c, m), (c, m + 1)));
                }
            }
        } else {
            for j in 0..=a_last {
                let origin = Point::new(x, j as f64 * a_height);
                cells.push(RawCell {
                    col: c,
                    row: j,
                    shape: CellShape::Rectangle { origin, width: big_r, height: a_height },
                    cell_type: CellType::A,
                });
            }
        }
    }
    // horizontal links: A–A in the same row, A(j)–B(2j+1) where the centers align
    for c in 0..columns - 1 {
        let (left_b, right_b) = (is_b(c), is_b(c + 1));
        for j in 0..=a_last {
            match (left_b, right_b) {
                (false, false) => links.push(((c, j), (c + 1, j))),
                (false, true) => links.push(((c, j), (c + 1, 2 * j + 1))),
                (true, false) => links.push(((c, 2 * j + 1), (c + 1, j))),
                (true, true) => {}
            }
        }
    }
    RawTiling { cells, links: Some(links) }
}

fn assemble(field: FieldSpec, params: SchemeParams, offset: Point, raw: RawTiling) -> Partition {
    let bounds = field.bounds();
    let mut kept: Vec<(RawCell, Vec<Point>)> = raw
        .cells
        .into_iter()
        .filter_map(|c| {
            let region = clip_to_box(&c.shape.vertices(), &bounds);
            (polygon_area(&region) > 1e-12 * c.shape.area()).then_some((c, region))
        })
        .collect();
    let min_col = kept.iter().map(|(c, _)| c.col).min().unwrap_or(0);
    for (c, _) in &mut kept {
        c.col -= min_col;
    }
    kept.sort_by_key(|(c, _)| (c.col, c.row));

    let index: HashMap<(i64, i64), CellId> = kept
        .iter()
        .enumerate()
        .map(|(i, (c, _))| ((c.col, c.row), CellId(i)))
        .collect();

    let mut adjacency: Vec<(CellId, CellId)> = match raw.links {
        Some(links) => links
            .into_iter()
            .filter_map(|((ac, ar), (bc, br))| {
                let a = index.get(&(ac - min_col, ar))?;
                let b = index.get(&(bc - min_col, br))?;
                Some((*a.min(b), *a.max(b)))
            })
            .collect(),
        None => shared_edge_pairs(kept.iter().map(|(c, _)| &c.shape)),
    };
    adjacency.sort_unstable();
    adjacency.dedup();

    let cells = kept
        .into_iter()
        .enumerate()
        .map(|(i, (c, region))| Cell {
            id: CellId(i),
            col: c.col,
            row: c.row,
            shape: c.shape,
            cell_type: c.cell_type,
            region,
        })
        .collect();
    Partition { field, params, cells, adjacency, grid_offset: offset }
}

/// Pairs of shapes that share a full edge, found by hashing quantized edges.
fn shared_edge_pairs<'a>(shapes: impl Iterator<Item = &'a CellShape>) -> Vec<(CellId, CellId)> {
    let shapes: Vec<&CellShape> = shapes.collect();
    let scale = shapes
        .iter()
        .map(|s| s.bounding_box().width())
        .fold(0.0f64, f64::max)
        .max(f64::MIN_POSITIVE);
    let quantum = scale * 1e-7;
    let q = |p: Point| ((p.x / quantum).round() as i64, (p.y / quantum).round() as i64);
    let mut edges: HashMap<EdgeKey, Vec<usize>> = HashMap::new();
    for (i, s) in shapes.iter().enumerate() {
        let v = s.vertices();
        for e in 0..v.len() {
            let (a, b) = (q(v[e]), q(v[(e + 1) % v.len()]));
            edges.entry((a.min(b), a.max(b))).or_default().push(i);
        }
    }
    edges
        .into_values()
        .filter(|owners| owners.len() == 2)
        .map(|o| (CellId(o[0].min(o[1])), CellId(o[0].max(o[1]))))
        .collect()
}

impl Partition {
    pub fn cell(&self, id: CellId) -> Result<&Cell> {
        self.cells.get(id.0).ok_or(Error::CellNotFound(id))
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn scheme(&self) -> Scheme {
        self.params.scheme
    }

    /// Sum of clipped cell areas; equals the field area for a valid tiling.
    pub fn covered_area(&self) -> f64 {
        self.cells.iter().map(Cell::area).sum()
    }

    /// Neighbors of every cell under the required adjacency.
    pub fn neighbors(&self) -> Vec<Vec<CellId>> {
        let mut out = vec![Vec::new(); self.cells.len()];
        for &(a, b) in &self.adjacency {
            out[a.0].push(b);
            out[b.0].push(a);
        }
        out
    }

    /// The cell owning `p` under half-open ownership.
    pub fn cell_of_point(&self, p: Point) -> Result<CellId> {
        if !p.is_finite() || !self.field.contains(p) {
            return Err(Error::OutOfBounds { x: p.x, y: p.y });
        }
        let candidates = || {
            self.cells.iter().filter(move |c| {
                let bb = c.shape.bounding_box();
                p.x >= bb.min.x - 1e-9 && p.x <= bb.max.x + 1e-9 && p.y >= bb.min.y - 1e-9 && p.y <= bb.max.y + 1e-9
            })
        };
        if let Some(c) = candidates().find(|c| point_in_shape(&c.shape, p)) {
            return Ok(c.id);
        }
        // rounding at a shared vertex can leave a point unowned; fall back to closed regions
        candidates()
            .find(|c| polygon_contains_closed(&c.region, p))
            .map(|c| c.id)
            .ok_or(Error::OutOfBounds { x: p.x, y: p.y })
    }

    /// Reference position of the active subcell of `id` in `round`.
    ///
    /// GAF has no constraint and reports the centroid. HGAF walks the
    /// subcells row-major from the lower-left, one per round, in lockstep
    /// across cells; with `d = 0` this degenerates to the lower-left corner.
    /// eHGAF and the triangle scheme keep the active subcell at the center
    /// (barycenter). Two-type cells use their centers.
    pub fn active_position(&self, id: CellId, round: u64) -> Result<Point> {
        let cell = self.cell(id)?;
        let canonical = match (self.params.scheme, cell.shape) {
            (Scheme::Gaf, _) => polygon_centroid(&cell.region),
            (Scheme::Hgaf, CellShape::Rectangle { origin, .. }) => match self.params.subdivisions() {
                None => origin,
                Some(q) => {
                    let q = u64::from(q);
                    let idx = round % (q * q);
                    let d = self.params.d;
                    Point::new(
                        origin.x + ((idx % q) as f64 + 0.5) * d,
                        origin.y + ((idx / q) as f64 + 0.5) * d,
                    )
                }
            },
            _ => cell.shape.centroid(),
        };
        if polygon_contains_closed(&cell.region, canonical) {
            Ok(canonical)
        } else {
            Ok(polygon_centroid(&cell.region))
        }
    }

    /// Region the active node of `id` may occupy in `round` (convex, CCW);
    /// a single point for the degenerate `d = 0` cases.
    pub fn active_region(&self, id: CellId, round: u64) -> Result<Vec<Point>> {
        let cell = self.cell(id)?;
        let d = self.params.d;
        let nominal: Vec<Point> = match (self.params.scheme, cell.shape) {
            (Scheme::Gaf, _) => return Ok(cell.region.clone()),
            (Scheme::EhgafTwoType, _) => vec![self.active_position(id, round)?],
            (_, _) if d == 0.0 => vec![self.active_position(id, round)?],
            (Scheme::Hgaf, CellShape::Rectangle { .. }) | (Scheme::Ehgaf, CellShape::Rectangle { .. }) => {
                let c = if self.params.scheme == Scheme::Hgaf {
                    self.active_position(id, round)?
                } else {
                    cell.shape.centroid()
                };
                CellShape::Rectangle { origin: Point::new(c.x - 0.5 * d, c.y - 0.5 * d), width: d, height: d }
                    .vertices()
            }
            (Scheme::EhgafTriangle, shape) => {
                // central subcell: a small triangle of height d sharing the barycenter
                let c = shape.centroid();
                let sub_base = 2.0 * d / SQRT3;
                match shape {
                    CellShape::TriangleUp { .. } => CellShape::triangle(
                        Point::new(c.x - 0.5 * sub_base, c.y - d / 3.0),
                        sub_base,
                        Orientation::Up,
                    ),
                    _ => CellShape::triangle(
                        Point::new(c.x - 0.5 * sub_base, c.y + d / 3.0),
                        sub_base,
                        Orientation::Down,
                    ),
                }
                .vertices()
            }
            _ => vec![cell.shape.centroid()],
        };
        let clipped = clip_convex(&nominal, &cell.region);
        if clipped.is_empty() {
            Ok(vec![self.active_position(id, round)?])
        } else {
            Ok(clipped)
        }
    }

    /// Canonical active positions of every cell for `round`.
    pub fn canonical_actives(&self, round: u64) -> Vec<Point> {
        (0..self.cells.len())
            .map(|i| self.active_position(CellId(i), round).expect("cell id in range"))
            .collect()
    }

    /// True if `p` lies in the active region of cell `id` for `round`.
    pub fn in_active_region(&self, id: CellId, round: u64, p: Point) -> Result<bool> {
        let region = self.active_region(id, round)?;
        Ok(match region.len() {
            0..=2 => true,
            _ => owns_point(&region, p, 1.0) || polygon_contains_closed(&region, p),
        })
    }
}

/// Free-function form of [`Partition::cell_of_point`].
pub fn cell_of_point(partition: &Partition, p: Point) -> Result<CellId> {
    partition.cell_of_point(p)
}

/// Free-function form of [`Partition::active_position`].
pub fn active_position(partition: &Partition, id: CellId, round: u64) -> Result<Point> {
    partition.active_position(id, round)
}

/// Re-tile an eHGAF (or triangle) partition for `epoch` with grid offset
/// `((epoch mod q)·d, (epoch mod q)·d)`, `q = r/d`.
pub fn slide_boundaries(partition: &Partition, epoch: u64) -> Result<Partition> {
    let params = partition.params;
    match params.scheme {
        Scheme::Ehgaf | Scheme::EhgafTriangle => {}
        other => return Err(Error::UnsupportedScheme(other)),
    }
    let q = params
        .subdivisions()
        .ok_or_else(|| invalid("boundary sliding needs d > 0"))?;
    let shift = (epoch % u64::from(q)) as f64 * params.d;
    build_with_offset(partition.field, params, Point::new(shift, shift))
}
