//! Active-node election and the backbone graph over active nodes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::geometry::{distance, within_range, Point};
use crate::partition::{CellId, Partition};

pub type NodeId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Active,
    Sleeping,
    Dead,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NodeState {
    pub id: NodeId,
    pub position: Point,
    pub energy: f64,
    pub role: Role,
}

impl NodeState {
    pub fn new(id: NodeId, position: Point, energy: f64) -> Self {
        let role = if energy > 0.0 { Role::Sleeping } else { Role::Dead };
        Self { id, position, energy: energy.max(0.0), role }
    }

    pub fn is_alive(&self) -> bool {
        self.energy > 0.0
    }
}

/// Alive node with the most remaining energy; ties go to the smaller id.
pub fn elect_active<'a, I>(nodes_in_cell: I) -> Option<NodeId>
where
    I: IntoIterator<Item = &'a NodeState>,
{
    nodes_in_cell
        .into_iter()
        .filter(|n| n.is_alive())
        .max_by(|a, b| a.energy.total_cmp(&b.energy).then(b.id.cmp(&a.id)))
        .map(|n| n.id)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Vertex {
    pub cell: CellId,
    pub node: NodeId,
    pub position: Point,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub a: CellId,
    pub b: CellId,
    pub length: f64,
    /// Longer than the radio range.
    pub violation: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BackboneGraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub violations: usize,
    pub component_count: usize,
}

/// Link the active nodes of every required adjacency pair whose cells both
/// have an active. Over-long links are kept and flagged as violations.
pub fn build_backbone(
    partition: &Partition,
    actives: &[Option<(NodeId, Point)>],
    range: f64,
) -> BackboneGraph {
    let active = |id: CellId| actives.get(id.0).copied().flatten();
    let vertices: Vec<Vertex> = partition
        .cells
        .iter()
        .filter_map(|c| active(c.id).map(|(node, position)| Vertex { cell: c.id, node, position }))
        .collect();
    let edges: Vec<Edge> = partition
        .adjacency
        .iter()
        .filter_map(|&(a, b)| {
            let (pa, pb) = (active(a)?.1, active(b)?.1);
            let length = distance(pa, pb);
            Some(Edge { a, b, length, violation: !within_range(length, range) })
        })
        .collect();
    let violations = edges.iter().filter(|e| e.violation).count();
    let component_count = count_components(partition.len(), &vertices, &edges);
    BackboneGraph { vertices, edges, violations, component_count }
}

fn count_components(cell_count: usize, vertices: &[Vertex], edges: &[Edge]) -> usize {
    let mut dsu = DisjointSet::new(cell_count);
    for e in edges.iter().filter(|e| !e.violation) {
        dsu.union(e.a.0, e.b.0);
    }
    let mut roots: Vec<usize> = vertices.iter().map(|v| dsu.find(v.cell.0)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

/// Connected over non-violating edges; empty and single-vertex graphs count as connected.
pub fn is_connected(graph: &BackboneGraph) -> bool {
    graph.component_count <= 1
}

/// Vertex degree counts over non-violating edges.
pub fn degree_histogram(graph: &BackboneGraph) -> BTreeMap<usize, usize> {
    let mut degree: BTreeMap<CellId, usize> = graph.vertices.iter().map(|v| (v.cell, 0)).collect();
    for e in graph.edges.iter().filter(|e| !e.violation) {
        *degree.entry(e.a).or_default() += 1;
        *degree.entry(e.b).or_default() += 1;
    }
    let mut hist = BTreeMap::new();
    for d in degree.into_values() {
        *hist.entry(d).or_default() += 1;
    }
    hist
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}
