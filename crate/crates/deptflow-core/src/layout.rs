//! ForceAtlas2 force-directed layout and the expansion rescale step.
//!
//! Forces, per iteration (degrees on the undirected view, `mass = deg + 1`):
//! - attraction along each edge: `d(u,v) * w^delta`, or
//!   `ln(1 + d) * w^delta` in LinLog mode;
//! - repulsion between every node pair: `k_r * mass_u * mass_v / d`;
//! - gravity toward the origin: `k_g * mass`.
//!
//! Displacement is damped by the swinging heuristic: fast-oscillating nodes
//! slow down, steadily traveling nodes keep speed. Repulsion is exact
//! O(n^2) — target graphs are a few hundred nodes and determinism stays
//! trivial. Same graph, params and seed give bitwise-identical output.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::DeptGraph;
use crate::math;

/// Per-node plane positions, indexed by node id.
pub type Coordinates = Vec<(f64, f64)>;

#[derive(Debug, Clone, PartialEq)]
pub struct LayoutParams {
    pub iterations: u32,
    /// Repulsion scaling `k_r`.
    pub scaling: f64,
    /// Gravity strength `k_g`; zero disables gravity.
    pub gravity: f64,
    /// Logarithmic attraction mode.
    pub linlog: bool,
    /// Exponent `delta` applied to edge weights in the attraction term.
    pub edge_weight_influence: f64,
    pub seed: u64,
    /// Initial global speed; adapted every iteration.
    pub global_speed: f64,
    /// Tolerance to swinging (the jitter tolerance `tau`).
    pub swing_tolerance: f64,
}

impl Default for LayoutParams {
    fn default() -> Self {
        LayoutParams {
            iterations: 1000,
            scaling: 2.0,
            gravity: 1.0,
            linlog: false,
            edge_weight_influence: 1.0,
            seed: 0,
            global_speed: 1.0,
            swing_tolerance: 1.0,
        }
    }
}

const LOCAL_SPEED_FACTOR: f64 = 0.1;
const MAX_DISPLACEMENT: f64 = 10.0;
const MIN_DISTANCE: f64 = 1e-9;

/// Runs the layout from a seed-determined random placement in the unit disk.
pub fn force_atlas2(g: &DeptGraph, params: &LayoutParams) -> Coordinates {
    force_atlas2_from(g, params, initial_positions(g.node_count(), params.seed))
}

/// Uniformly random positions inside the unit disk; a single node sits at
/// the origin.
pub fn initial_positions(n: usize, seed: u64) -> Coordinates {
    if n == 1 {
        return vec![(0.0, 0.0)];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let r = math::sqrt(rng.random::<f64>());
            let theta = rng.random::<f64>() * 2.0 * core::f64::consts::PI;
            (r * math::cos(theta), r * math::sin(theta))
        })
        .collect()
}

/// Runs the layout from explicit initial positions (one per node).
pub fn force_atlas2_from(
    g: &DeptGraph,
    params: &LayoutParams,
    initial: Coordinates,
) -> Coordinates {
    let n = g.node_count();
    assert_eq!(initial.len(), n, "one initial position per node");
    if n <= 1 {
        return initial;
    }

    let mass: Vec<f64> = g
        .undirected_neighbors()
        .iter()
        .map(|nbrs| nbrs.len() as f64 + 1.0)
        .collect();
    let edges: Vec<(usize, usize, f64)> = g
        .edges()
        .map(|(s, d, w)| {
            let wf = if params.edge_weight_influence == 1.0 {
                w as f64
            } else if params.edge_weight_influence == 0.0 {
                1.0
            } else {
                math::powf(w as f64, params.edge_weight_influence)
            };
            (s, d, wf)
        })
        .collect();

    let mut positions = initial;
    let mut prev_forces: Vec<(f64, f64)> = vec![(0.0, 0.0); n];
    let mut speed = params.global_speed;

    for _ in 0..params.iterations {
        let forces = net_forces(&positions, &mass, &edges, params);

        // Swinging heuristic: global speed follows the traction/swinging
        // ratio, capped to at most 1.5x growth per iteration.
        let mut swinging = 0.0;
        let mut traction = 0.0;
        for v in 0..n {
            let (fx, fy) = forces[v];
            let (px, py) = prev_forces[v];
            swinging += mass[v] * math::hypot(fx - px, fy - py);
            traction += mass[v] * math::hypot(fx + px, fy + py) / 2.0;
        }
        if swinging > MIN_DISTANCE {
            let target = params.swing_tolerance * traction / swinging;
            speed = target.min(1.5 * speed);
        }

        for v in 0..n {
            let (fx, fy) = forces[v];
            let (px, py) = prev_forces[v];
            let node_swing = math::hypot(fx - px, fy - py);
            let mut factor = LOCAL_SPEED_FACTOR * speed / (1.0 + speed * math::sqrt(node_swing));
            let magnitude = math::hypot(fx, fy);
            if magnitude * factor > MAX_DISPLACEMENT {
                factor = MAX_DISPLACEMENT / magnitude;
            }
            positions[v].0 += fx * factor;
            positions[v].1 += fy * factor;
        }
        prev_forces = forces;
    }
    positions
}

/// Net force on every node for the current positions; pure so the
/// zero-sum property of the pairwise terms is directly checkable.
pub(crate) fn net_forces(
    positions: &[(f64, f64)],
    mass: &[f64],
    edges: &[(usize, usize, f64)],
    params: &LayoutParams,
) -> Vec<(f64, f64)> {
    let n = positions.len();
    let mut forces = vec![(0.0f64, 0.0f64); n];

    // Exact pairwise repulsion.
    for u in 0..n {
        for v in (u + 1)..n {
            let dx = positions[u].0 - positions[v].0;
            let dy = positions[u].1 - positions[v].1;
            let d = math::hypot(dx, dy).max(MIN_DISTANCE);
            let rep = params.scaling * mass[u] * mass[v] / (d * d);
            forces[u].0 += dx * rep;
            forces[u].1 += dy * rep;
            forces[v].0 -= dx * rep;
            forces[v].1 -= dy * rep;
        }
    }

    // Attraction along each directed edge.
    for &(u, v, wf) in edges {
        let dx = positions[v].0 - positions[u].0;
        let dy = positions[v].1 - positions[u].1;
        if params.linlog {
            let d = math::hypot(dx, dy).max(MIN_DISTANCE);
            let att = math::ln(1.0 + d) * wf / d;
            forces[u].0 += dx * att;
            forces[u].1 += dy * att;
            forces[v].0 -= dx * att;
            forces[v].1 -= dy * att;
        } else {
            forces[u].0 += dx * wf;
            forces[u].1 += dy * wf;
            forces[v].0 -= dx * wf;
            forces[v].1 -= dy * wf;
        }
    }

    // Gravity toward the origin.
    if params.gravity > 0.0 {
        for v in 0..n {
            let (x, y) = positions[v];
            let d = math::hypot(x, y);
            if d > MIN_DISTANCE {
                let grav = params.gravity * mass[v] / d;
                forces[v].0 -= x * grav;
                forces[v].1 -= y * grav;
            }
        }
    }

    forces
}

/// Uniform scaling about the centroid; factor 1 is the identity.
pub fn expand(coords: &[(f64, f64)], factor: f64) -> Coordinates {
    if coords.is_empty() || factor == 1.0 {
        return coords.to_vec();
    }
    let n = coords.len() as f64;
    let cx = coords.iter().map(|p| p.0).sum::<f64>() / n;
    let cy = coords.iter().map(|p| p.1).sum::<f64>() / n;
    coords
        .iter()
        .map(|&(x, y)| (cx + factor * (x - cx), cy + factor * (y - cy)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dist(a: (f64, f64), b: (f64, f64)) -> f64 {
        math::hypot(a.0 - b.0, a.1 - b.1)
    }

    fn pair_graph() -> DeptGraph {
        DeptGraph::from_transfers([("A", "B")]).unwrap()
    }

    #[test]
    fn single_node_sits_at_origin() {
        let g = DeptGraph::from_parts(vec!["A".into()], core::iter::empty()).unwrap();
        let coords = force_atlas2(&g, &LayoutParams::default());
        assert_eq!(coords, vec![(0.0, 0.0)]);
    }

    #[test]
    fn two_node_equilibrium_matches_force_balance() {
        // Attraction d equals repulsion k_r * 2 * 2 / d at d* = sqrt(8):
        // frozen analytic value 2.8284271247461903.
        let params = LayoutParams {
            gravity: 0.0,
            scaling: 2.0,
            ..LayoutParams::default()
        };
        let coords = force_atlas2(&pair_graph(), &params);
        let d = dist(coords[0], coords[1]);
        let target = 2.828_427_124_746_190_3_f64;
        assert!(
            (d - target).abs() / target < 0.05,
            "distance {d} not within 5% of {target}"
        );
    }

    #[test]
    fn layout_is_seed_deterministic() {
        let g = DeptGraph::from_transfers([("A", "B"), ("B", "C"), ("C", "A"), ("C", "D")])
            .unwrap();
        let params = LayoutParams {
            iterations: 200,
            seed: 11,
            ..LayoutParams::default()
        };
        let a = force_atlas2(&g, &params);
        let b = force_atlas2(&g, &params);
        assert_eq!(a, b);
    }

    #[test]
    fn pairwise_forces_sum_to_zero_without_gravity() {
        let g = DeptGraph::from_transfers([("A", "B"), ("B", "C"), ("C", "A"), ("A", "D")])
            .unwrap();
        let params = LayoutParams {
            gravity: 0.0,
            ..LayoutParams::default()
        };
        let mass: Vec<f64> = g
            .undirected_neighbors()
            .iter()
            .map(|nbrs| nbrs.len() as f64 + 1.0)
            .collect();
        let edges: Vec<(usize, usize, f64)> =
            g.edges().map(|(s, d, w)| (s, d, w as f64)).collect();
        let positions = initial_positions(g.node_count(), 3);
        let forces = net_forces(&positions, &mass, &edges, &params);
        let (sx, sy) = forces
            .iter()
            .fold((0.0, 0.0), |(ax, ay), &(fx, fy)| (ax + fx, ay + fy));
        assert!(sx.abs() < 1e-9, "x forces sum to {sx}");
        assert!(sy.abs() < 1e-9, "y forces sum to {sy}");
    }

    #[test]
    fn linlog_forces_also_sum_to_zero() {
        let g = DeptGraph::from_transfers([("A", "B"), ("B", "C")]).unwrap();
        let params = LayoutParams {
            gravity: 0.0,
            linlog: true,
            ..LayoutParams::default()
        };
        let mass = vec![2.0, 3.0, 2.0];
        let edges: Vec<(usize, usize, f64)> =
            g.edges().map(|(s, d, w)| (s, d, w as f64)).collect();
        let positions = initial_positions(3, 17);
        let forces = net_forces(&positions, &mass, &edges, &params);
        let (sx, sy) = forces
            .iter()
            .fold((0.0, 0.0), |(ax, ay), &(fx, fy)| (ax + fx, ay + fy));
        assert!(sx.abs() < 1e-9 && sy.abs() < 1e-9);
    }

    #[test]
    fn expand_scales_about_centroid() {
        let out = expand(&[(0.0, 0.0), (1.0, 0.0)], 2.0);
        assert_eq!(out, vec![(-0.5, 0.0), (1.5, 0.0)]);
    }

    #[test]
    fn expand_with_factor_one_is_identity() {
        let pts = [(0.3, -1.2), (4.5, 2.0), (-2.0, 0.1)];
        assert_eq!(expand(&pts, 1.0), pts.to_vec());
    }

    #[test]
    fn expand_scales_all_pairwise_distances() {
        let pts = [(0.0, 0.0), (3.0, 1.0), (-1.5, 2.5), (0.25, -4.0)];
        let factor = 1.2;
        let out = expand(&pts, factor);
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                let before = dist(pts[i], pts[j]);
                let after = dist(out[i], out[j]);
                assert!((after - factor * before).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn layout_is_equivariant_under_relabeling_with_matched_initials() {
        // Same structure, nodes listed in a different order.
        let g1 = DeptGraph::from_transfers([("A", "B"), ("B", "C"), ("C", "A")]).unwrap();
        let g2 = DeptGraph::from_transfers([("B", "C"), ("C", "A"), ("A", "B")]).unwrap();
        let params = LayoutParams {
            iterations: 120,
            gravity: 0.5,
            ..LayoutParams::default()
        };
        let init1 = initial_positions(3, 9);
        // g2's id k holds the label at position perm[k] of g1.
        let perm: Vec<usize> = (0..3)
            .map(|id2| g1.node_id(g2.label(id2)).unwrap())
            .collect();
        let init2: Coordinates = perm.iter().map(|&id1| init1[id1]).collect();
        let out1 = force_atlas2_from(&g1, &params, init1);
        let out2 = force_atlas2_from(&g2, &params, init2);
        // Force accumulation order differs between labelings, so expect
        // equality up to float associativity, not bitwise.
        for id2 in 0..3 {
            assert!((out2[id2].0 - out1[perm[id2]].0).abs() < 1e-9);
            assert!((out2[id2].1 - out1[perm[id2]].1).abs() < 1e-9);
        }
    }

    #[test]
    fn initial_positions_fill_the_unit_disk() {
        let coords = initial_positions(64, 5);
        assert!(coords
            .iter()
            .all(|&(x, y)| math::hypot(x, y) <= 1.0 + 1e-12));
        // Not all collapsed to a point.
        assert!(coords.iter().any(|&(x, y)| math::hypot(x, y) > 0.5));
    }
}
