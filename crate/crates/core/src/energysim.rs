//! Round-based energy simulation of GAF-family sleep scheduling.
//!
//! Each round: advance the HGAF rotation / eHGAF boundary slide at epoch
//! boundaries, check the lifetime criterion, elect one active node per cell
//! (most remaining energy, smallest id on ties), then drain `e_active` from
//! actives and `e_sleep` from every other alive node.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::backbone::{build_backbone, is_connected, NodeId, NodeState, Role};
use crate::bounds::{scheme_max_area, theoretical_bound};
use crate::error::{invalid, Error, Result};
use crate::geometry::Point;
use crate::partition::{build_partition, slide_boundaries, CellId, FieldSpec, Partition, Scheme, SchemeParams};

/// When the network counts as dead.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LifetimeCriterion {
    /// Some cell that received nodes at deployment has no alive node left.
    FirstCellDead,
    /// The backbone over cells that still have an alive node is disconnected
    /// (or empty).
    BackboneDisconnected,
    /// At least this fraction of the cells that received nodes are dead.
    CellsDeadFraction(f64),
}

impl fmt::Display for LifetimeCriterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LifetimeCriterion::FirstCellDead => f.write_str("first-cell-dead"),
            LifetimeCriterion::BackboneDisconnected => f.write_str("backbone-disconnected"),
            LifetimeCriterion::CellsDeadFraction(x) => write!(f, "cells-dead:{x}"),
        }
    }
}

impl FromStr for LifetimeCriterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first-cell-dead" => Ok(Self::FirstCellDead),
            "backbone-disconnected" => Ok(Self::BackboneDisconnected),
            other => {
                let frac = other
                    .strip_prefix("cells-dead:")
                    .and_then(|v| v.parse::<f64>().ok())
                    .ok_or_else(|| invalid(format!("unknown lifetime criterion `{other}`")))?;
                Ok(Self::CellsDeadFraction(frac))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    pub field: FieldSpec,
    pub params: SchemeParams,
    pub node_count: u32,
    pub initial_energy: f64,
    pub e_active: f64,
    pub e_sleep: f64,
    pub seed: u64,
    pub epoch_length: u64,
    pub lifetime_criterion: LifetimeCriterion,
    /// Hard stop; a run that reaches it is reported as truncated.
    pub max_rounds: u64,
}

impl SimConfig {
    pub fn new(field: FieldSpec, params: SchemeParams) -> Self {
        Self {
            field,
            params,
            node_count: 100,
            initial_energy: 10.0,
            e_active: 1.0,
            e_sleep: 0.0,
            seed: 0,
            epoch_length: 1,
            lifetime_criterion: LifetimeCriterion::FirstCellDead,
            max_rounds: 10_000_000,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.field.validate()?;
        self.params.validate()?;
        if self.node_count < 1 {
            return Err(invalid("node_count must be >= 1"));
        }
        if !(self.initial_energy > 0.0 && self.initial_energy.is_finite()) {
            return Err(invalid("initial_energy must be positive"));
        }
        if !(self.e_sleep >= 0.0 && self.e_active > self.e_sleep && self.e_active.is_finite()) {
            return Err(invalid("energy rates must satisfy e_active > e_sleep >= 0"));
        }
        if self.epoch_length < 1 {
            return Err(invalid("epoch_length must be >= 1"));
        }
        if let LifetimeCriterion::CellsDeadFraction(f) = self.lifetime_criterion {
            if !(f > 0.0 && f <= 1.0) {
                return Err(invalid(format!("dead-cell fraction must be in (0, 1], got {f}")));
            }
        }
        Ok(())
    }

    /// Deployed nodes per unit area.
    pub fn density(&self) -> f64 {
        f64::from(self.node_count) / self.field.area()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimResult {
    /// Rounds completed before the lifetime criterion triggered.
    pub lifetime: u64,
    pub mean_active_count: f64,
    pub active_counts: Vec<u32>,
    pub sleeper_counts: Vec<u32>,
    /// Energy removed from the network in each round.
    pub energy_drained: Vec<f64>,
    pub initial_total_energy: f64,
    pub final_energies: Vec<f64>,
    /// Energy a rate asked for but a nearly empty node could not supply,
    /// summed over the run.
    pub drain_shortfall: f64,
    /// Cells that received at least one node at deployment (first epoch).
    pub non_empty_cells: usize,
    pub truncated: bool,
}

impl SimResult {
    pub fn total_drained(&self) -> f64 {
        self.energy_drained.iter().sum()
    }

    pub fn final_total_energy(&self) -> f64 {
        self.final_energies.iter().sum()
    }
}

/// Nodes placed i.i.d. uniformly over the field, all sleeping with full energy.
pub fn place_nodes(field: &FieldSpec, node_count: u32, seed: u64, initial_energy: f64) -> Vec<NodeState> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..node_count)
        .map(|id| {
            let p = Point::new(rng.gen::<f64>() * field.width, rng.gen::<f64>() * field.height);
            NodeState::new(id, p, initial_energy)
        })
        .collect()
}

struct Layout {
    partition: Partition,
    members: Vec<Vec<usize>>,
}

impl Layout {
    fn new(partition: Partition, nodes: &[NodeState]) -> Result<Self> {
        let mut members = vec![Vec::new(); partition.len()];
        for (i, n) in nodes.iter().enumerate() {
            members[partition.cell_of_point(n.position)?.0].push(i);
        }
        Ok(Self { partition, members })
    }
}

fn slides(params: &SchemeParams) -> bool {
    matches!(params.scheme, Scheme::Ehgaf | Scheme::EhgafTriangle) && params.d > 0.0
}

/// Whether only nodes inside the active subcell may be elected.
fn restricted_to_subcell(params: &SchemeParams) -> bool {
    matches!(params.scheme, Scheme::Hgaf | Scheme::Ehgaf | Scheme::EhgafTriangle) && params.d > 0.0
}

pub fn run_simulation(config: &SimConfig) -> Result<SimResult> {
    config.validate()?;
    let mut nodes = place_nodes(&config.field, config.node_count, config.seed, config.initial_energy);
    let initial_total_energy: f64 = nodes.iter().map(|n| n.energy).sum();
    let base = build_partition(config.field, config.params)?;
    let mut layout = Layout::new(base.clone(), &nodes)?;
    let non_empty_cells = layout.members.iter().filter(|m| !m.is_empty()).count();
    let subcell_only = restricted_to_subcell(&config.params);

    let mut active_counts = Vec::new();
    let mut sleeper_counts = Vec::new();
    let mut energy_drained = Vec::new();
    let mut truncated = false;
    let mut drain_shortfall = 0.0;
    let mut round: u64 = 0;
    let mut elected: Vec<Option<usize>> = Vec::new();

    loop {
        if round > 0 && round.is_multiple_of(config.epoch_length) && slides(&config.params) {
            let epoch = round / config.epoch_length;
            layout = Layout::new(slide_boundaries(&base, epoch)?, &nodes)?;
        }
        // rotation index for HGAF advances once per epoch
        let phase = round / config.epoch_length;

        if network_dead(config, &layout, &nodes, phase) {
            break;
        }
        if round >= config.max_rounds {
            truncated = true;
            break;
        }

        elected.clear();
        for (cell, members) in layout.members.iter().enumerate() {
            let mut best: Option<usize> = None;
            for &i in members {
                let n = &nodes[i];
                if !n.is_alive() {
                    continue;
                }
                if subcell_only && !layout.partition.in_active_region(CellId(cell), phase, n.position)? {
                    continue;
                }
                best = match best {
                    Some(b) if nodes[b].energy > n.energy || (nodes[b].energy == n.energy && nodes[b].id < n.id) => Some(b),
                    _ => Some(i),
                };
            }
            elected.push(best);
        }

        for n in nodes.iter_mut().filter(|n| n.is_alive()) {
            n.role = Role::Sleeping;
        }
        let mut drained = 0.0;
        let mut actives = 0u32;
        for &i in elected.iter().flatten() {
            nodes[i].role = Role::Active;
            actives += 1;
        }
        let mut sleepers = 0u32;
        for n in nodes.iter_mut() {
            let rate = match n.role {
                Role::Active => config.e_active,
                Role::Sleeping => {
                    sleepers += 1;
                    config.e_sleep
                }
                Role::Dead => continue,
            };
            let take = rate.min(n.energy);
            drain_shortfall += rate - take;
            n.energy -= take;
            drained += take;
            if n.energy <= 0.0 {
                n.energy = 0.0;
                n.role = Role::Dead;
            }
        }
        active_counts.push(actives);
        sleeper_counts.push(sleepers);
        energy_drained.push(drained);
        round += 1;
    }

    let mean_active_count = if active_counts.is_empty() {
        0.0
    } else {
        active_counts.iter().map(|&a| f64::from(a)).sum::<f64>() / active_counts.len() as f64
    };
    Ok(SimResult {
        lifetime: round,
        mean_active_count,
        active_counts,
        sleeper_counts,
        energy_drained,
        initial_total_energy,
        final_energies: nodes.iter().map(|n| n.energy).collect(),
        drain_shortfall,
        non_empty_cells,
        truncated,
    })
}

fn network_dead(config: &SimConfig, layout: &Layout, nodes: &[NodeState], phase: u64) -> bool {
    let alive = |m: &Vec<usize>| m.iter().any(|&i| nodes[i].is_alive());
    match config.lifetime_criterion {
        LifetimeCriterion::FirstCellDead => layout.members.iter().any(|m| !m.is_empty() && !alive(m)),
        LifetimeCriterion::CellsDeadFraction(frac) => {
            let occupied = layout.members.iter().filter(|m| !m.is_empty()).count();
            let dead = layout.members.iter().filter(|m| !m.is_empty() && !alive(m)).count();
            occupied > 0 && dead as f64 >= frac * occupied as f64
        }
        LifetimeCriterion::BackboneDisconnected => {
            let actives: Vec<Option<(NodeId, Point)>> = layout
                .members
                .iter()
                .enumerate()
                .map(|(cell, m)| {
                    let node = m.iter().find(|&&i| nodes[i].is_alive())?;
                    let pos = layout.partition.active_position(CellId(cell), phase).ok()?;
                    Some((nodes[*node].id, pos))
                })
                .collect();
            // a network with no alive cell left has no backbone at all
            let graph = build_backbone(&layout.partition, &actives, config.field.radio_range);
            graph.vertices.is_empty() || !is_connected(&graph)
        }
    }
}

/// Runs `config` once per seed in parallel; results come back in seed order.
pub fn run_seed_sweep(config: &SimConfig, seeds: &[u64]) -> Result<Vec<(u64, SimResult)>> {
    seeds
        .par_iter()
        .map(|&seed| {
            let cfg = SimConfig { seed, ..config.clone() };
            run_simulation(&cfg).map(|r| (seed, r))
        })
        .collect()
}

/// Median of a non-empty sample (mean of the two middle values for even sizes).
pub fn median(values: &[f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let mid = v.len() / 2;
    Some(if v.len().is_multiple_of(2) { 0.5 * (v[mid - 1] + v[mid]) } else { v[mid] })
}

/// One scheme's simulated lifetime together with the configuration it came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchemeLifetime {
    pub scheme: Scheme,
    pub lifetime: f64,
    pub config: SimConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LifetimeRow {
    pub label: String,
    pub max_cell_area: f64,
    /// Maximal cell area as a percentage of the theoretical bound.
    pub analytic_pct: f64,
    /// Simulated lifetime over the lifetime a bound-sized cell would give
    /// under pooled drain, `density · bound · E / e_active`.
    pub empirical_pct: Option<f64>,
}

/// Lifetime of every scheme relative to the theoretical cell-size bound,
/// analytic and (when simulated) empirical.
pub fn lifetime_ratio_table(results: &[SchemeLifetime], bound_area: f64) -> Result<Vec<LifetimeRow>> {
    if results.is_empty() {
        return Err(invalid("no simulation results"));
    }
    if !(bound_area > 0.0) {
        return Err(invalid("bound area must be positive"));
    }
    let mut rows = Vec::with_capacity(results.len() + 1);
    for res in results {
        let range = res.config.field.radio_range;
        let area = scheme_max_area(res.scheme, range)?;
        let reference = res.config.density() * bound_area * res.config.initial_energy / res.config.e_active;
        rows.push(LifetimeRow {
            label: res.scheme.name().to_string(),
            max_cell_area: area,
            analytic_pct: 100.0 * area / bound_area,
            empirical_pct: Some(100.0 * res.lifetime / reference),
        });
    }
    let range = results[0].config.field.radio_range;
    let bound = theoretical_bound(range)?;
    rows.push(LifetimeRow {
        label: "bound".to_string(),
        max_cell_area: bound,
        analytic_pct: 100.0 * bound / bound_area,
        empirical_pct: None,
    });
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::maximal_params;
    use proptest::prelude::*;

    fn single_cell(nodes: u32, energy: f64) -> SimConfig {
        let field = FieldSpec::new(1.0, 1.0, 1.0).unwrap();
        SimConfig { node_count: nodes, initial_energy: energy, ..SimConfig::new(field, SchemeParams::ehgaf(1.0, 0.0)) }
    }

    fn assert_conserved(r: &SimResult) {
        let lhs = r.initial_total_energy - r.final_total_energy();
        let rhs = r.total_drained();
        assert!((lhs - rhs).abs() <= 1e-9 * r.initial_total_energy.max(1.0), "{lhs} vs {rhs}");
    }

    #[test]
    fn single_node_lifetime() {
        let r = run_simulation(&single_cell(1, 10.0)).unwrap();
        assert_eq!(r.lifetime, 10);
        assert_eq!(r.active_counts, vec![1; 10]);
        assert_eq!(r.drain_shortfall, 0.0);
        assert_conserved(&r);
    }

    #[test]
    fn two_nodes_alternate() {
        let r = run_simulation(&single_cell(2, 10.0)).unwrap();
        assert_eq!(r.lifetime, 20);
        assert!(r.final_energies.iter().all(|&e| e == 0.0));
        assert_conserved(&r);
    }

    #[test]
    fn sleep_drain_counts_exactly() {
        let cfg = SimConfig { e_sleep: 0.5, ..single_cell(3, 6.0) };
        let r = run_simulation(&cfg).unwrap();
        let by_count: f64 = r
            .active_counts
            .iter()
            .zip(&r.sleeper_counts)
            .map(|(&a, &s)| f64::from(a) * cfg.e_active + f64::from(s) * cfg.e_sleep)
            .sum();
        assert_eq!(r.initial_total_energy - r.final_total_energy(), by_count - r.drain_shortfall);
        assert_conserved(&r);
    }

    #[test]
    fn placement_is_deterministic() {
        let f = FieldSpec::new(10.0, 10.0, 1.0).unwrap();
        assert_eq!(place_nodes(&f, 100, 42, 1.0), place_nodes(&f, 100, 42, 1.0));
        let one = place_nodes(&f, 1, 7, 1.0);
        assert_eq!(one.len(), 1);
        assert!(f.contains(one[0].position));
    }

    #[test]
    fn placement_is_uniform() {
        let f = FieldSpec::new(10.0, 10.0, 1.0).unwrap();
        let nodes = place_nodes(&f, 10_000, 3, 1.0);
        let mut counts = [0u32; 100];
        for n in &nodes {
            counts[(n.position.y.floor() as usize) * 10 + n.position.x.floor() as usize] += 1;
        }
        // 3 sigma of Binomial(10^4, 0.01) is about 30
        assert!(counts.iter().all(|&c| (70..=130).contains(&c)), "{counts:?}");
    }

    #[test]
    fn invalid_configs() {
        let base = single_cell(1, 1.0);
        assert!(run_simulation(&SimConfig { node_count: 0, ..base.clone() }).is_err());
        assert!(run_simulation(&SimConfig { e_sleep: 1.0, ..base.clone() }).is_err());
        assert!(run_simulation(&SimConfig { epoch_length: 0, ..base.clone() }).is_err());
        assert!(run_simulation(&SimConfig {
            lifetime_criterion: LifetimeCriterion::CellsDeadFraction(1.5),
            ..base
        })
        .is_err());
    }

    #[test]
    fn criterion_parsing() {
        assert_eq!("first-cell-dead".parse::<LifetimeCriterion>().unwrap(), LifetimeCriterion::FirstCellDead);
        assert_eq!("cells-dead:0.5".parse::<LifetimeCriterion>().unwrap(), LifetimeCriterion::CellsDeadFraction(0.5));
        assert!("sometime".parse::<LifetimeCriterion>().is_err());
        let c = LifetimeCriterion::CellsDeadFraction(0.25);
        assert_eq!(c.to_string().parse::<LifetimeCriterion>().unwrap(), c);
    }

    #[test]
    fn rotating_and_sliding_runs_conserve_energy() {
        let field = FieldSpec::new(3.0, 3.0, 1.0).unwrap();
        for params in [SchemeParams::hgaf(0.6, 0.2), SchemeParams::ehgaf(0.9, 0.3), SchemeParams::triangle(1.2, 0.3)] {
            for criterion in [LifetimeCriterion::FirstCellDead, LifetimeCriterion::BackboneDisconnected] {
                let cfg = SimConfig {
                    node_count: 400,
                    initial_energy: 3.0,
                    e_sleep: 0.25,
                    epoch_length: 2,
                    lifetime_criterion: criterion,
                    seed: 5,
                    ..SimConfig::new(field, params)
                };
                let r = run_simulation(&cfg).unwrap();
                assert!(!r.truncated);
                assert!(r.lifetime > 0);
                assert_conserved(&r);
                assert_eq!(run_simulation(&cfg).unwrap(), r);
            }
        }
    }

    #[test]
    fn dense_deployment_keeps_every_cell_active() {
        let field = FieldSpec::new(4.0, 4.0, 1.0).unwrap();
        let cfg = SimConfig {
            node_count: 2_000,
            initial_energy: 2.0,
            ..SimConfig::new(field, maximal_params(Scheme::Ehgaf, 1.0, 4).unwrap())
        };
        let r = run_simulation(&cfg).unwrap();
        assert_eq!(r.non_empty_cells, 16);
        assert!((r.mean_active_count - 16.0).abs() < 1e-12);
        assert!(r.mean_active_count <= r.non_empty_cells as f64);
        assert_conserved(&r);
    }

    #[test]
    fn sweep_is_ordered_by_seed() {
        let cfg = single_cell(3, 2.0);
        let out = run_seed_sweep(&cfg, &[5, 1, 3]).unwrap();
        assert_eq!(out.iter().map(|(s, _)| *s).collect::<Vec<_>>(), vec![5, 1, 3]);
        assert_eq!(median(&[3.0, 1.0, 2.0]), Some(2.0));
        assert_eq!(median(&[4.0, 1.0, 2.0, 3.0]), Some(2.5));
        assert_eq!(median(&[]), None);
    }

    #[test]
    fn analytic_lifetime_percentages() {
        let bound = theoretical_bound(1.0).unwrap();
        let field = FieldSpec::new(1.0, 1.0, 1.0).unwrap();
        let entries: Vec<SchemeLifetime> = Scheme::ALL
            .iter()
            .map(|&s| SchemeLifetime {
                scheme: s,
                lifetime: 1.0,
                config: SimConfig::new(field, maximal_params(s, 1.0, 4).unwrap()),
            })
            .collect();
        let rows = lifetime_ratio_table(&entries, bound).unwrap();
        let pct: Vec<f64> = rows.iter().map(|r| r.analytic_pct).collect();
        assert!((pct[2] - 52.27).abs() < 0.01);
        assert!((pct[4] - 90.53).abs() < 0.01);
        assert!((pct[5] - 100.0).abs() < 1e-12);
        assert!(lifetime_ratio_table(&[], bound).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn more_energy_never_shortens_life(seed in any::<u64>(), e in 1u32..5, extra in 1u32..4, sleep in 0u32..2) {
            let field = FieldSpec::new(2.0, 2.0, 1.0).unwrap();
            let base = SimConfig {
                node_count: 60,
                initial_energy: f64::from(e),
                e_sleep: f64::from(sleep) * 0.25,
                seed,
                ..SimConfig::new(field, SchemeParams::ehgaf(1.0, 0.0))
            };
            let more = SimConfig { initial_energy: f64::from(e + extra), ..base.clone() };
            let (a, b) = (run_simulation(&base).unwrap(), run_simulation(&more).unwrap());
            prop_assert!(b.lifetime >= a.lifetime);
            let lhs = a.initial_total_energy - a.final_total_energy();
            prop_assert!((lhs - a.total_drained()).abs() <= 1e-9 * a.initial_total_energy);
        }
    }
}
