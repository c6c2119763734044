//! Deterministic samplers: linear grids, Halton low-discrepancy points,
//! sphere direction sets. No randomness anywhere — identical calls yield
//! identical point sets, which keeps every downstream artifact reproducible.

use crate::vecmath as vm;

const HALTON_BASES: [usize; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![0.5 * (a + b)],
        _ => (0..n)
            .map(|i| a + (b - a) * (i as f64) / ((n - 1) as f64))
            .collect(),
    }
}

/// Radical-inverse of `i` in the given base (van der Corput).
pub fn radical_inverse(mut i: usize, base: usize) -> f64 {
    let mut inv = 0.0;
    let mut denom = 1.0;
    while i > 0 {
        denom *= base as f64;
        inv += (i % base) as f64 / denom;
        i /= base;
    }
    inv
}

/// The `i`-th Halton point in `[0,1]^dim` (1-based index avoids the origin).
pub fn halton_point(i: usize, dim: usize) -> Vec<f64> {
    (0..dim)
        .map(|d| radical_inverse(i + 1, HALTON_BASES[d % HALTON_BASES.len()]))
        .collect()
}

/// Deterministic fill of the closed ball `radius * B(center)`: the center
/// first, then the axis extremes, then Halton points clamped radially.
pub fn ball_points(center: &[f64], radius: f64, count: usize) -> Vec<Vec<f64>> {
    let n = center.len();
    let mut pts = Vec::with_capacity(count);
    pts.push(center.to_vec());
    for i in 0..n {
        for sign in [1.0, -1.0] {
            if pts.len() >= count {
                return pts;
            }
            let mut p = center.to_vec();
            p[i] += sign * radius;
            pts.push(p);
        }
    }
    let mut idx = 0usize;
    while pts.len() < count {
        let h = halton_point(idx, n);
        idx += 1;
        let z: Vec<f64> = h.iter().map(|u| 2.0 * u - 1.0).collect();
        let r = vm::norm(&z).max(1.0);
        pts.push(
            center
                .iter()
                .zip(&z)
                .map(|(c, zi)| c + radius * zi / r)
                .collect(),
        );
    }
    pts
}

/// Unit directions covering the sphere: exact `±e_i` pairs in 1-D, uniform
/// angles in 2-D, a Fibonacci lattice in 3-D, Halton-normalized above.
pub fn sphere_directions(dim: usize, count: usize) -> Vec<Vec<f64>> {
    match dim {
        0 => Vec::new(),
        1 => vec![vec![1.0], vec![-1.0]],
        2 => (0..count.max(4))
            .map(|i| {
                let theta = 2.0 * std::f64::consts::PI * (i as f64) / (count.max(4) as f64);
                vec![theta.cos(), theta.sin()]
            })
            .collect(),
        3 => {
            let m = count.max(6);
            let golden = std::f64::consts::PI * (3.0 - 5.0_f64.sqrt());
            (0..m)
                .map(|i| {
                    let z = 1.0 - 2.0 * (i as f64 + 0.5) / m as f64;
                    let r = (1.0 - z * z).sqrt();
                    let phi = golden * i as f64;
                    vec![r * phi.cos(), r * phi.sin(), z]
                })
                .collect()
        }
        _ => {
            let mut dirs = Vec::with_capacity(count);
            for i in 0..dim {
                dirs.push(vm::unit(dim, i, 1.0));
                dirs.push(vm::unit(dim, i, -1.0));
            }
            let mut idx = 0usize;
            while dirs.len() < count {
                let z: Vec<f64> = halton_point(idx, dim).iter().map(|u| 2.0 * u - 1.0).collect();
                idx += 1;
                let r = vm::norm(&z);
                if r > 1e-3 {
                    dirs.push(vm::scale(&z, 1.0 / r));
                }
            }
            dirs
        }
    }
}

/// Cartesian grid over a box; `counts[i]` nodes along coordinate `i`.
pub fn box_grid(lower: &[f64], upper: &[f64], counts: &[usize]) -> Vec<Vec<f64>> {
    let n = lower.len();
    let axes: Vec<Vec<f64>> = (0..n)
        .map(|i| linspace(lower[i], upper[i], counts[i].max(1)))
        .collect();
    let total: usize = axes.iter().map(|a| a.len()).product();
    let mut out = Vec::with_capacity(total);
    let mut idx = vec![0usize; n];
    for _ in 0..total {
        out.push((0..n).map(|i| axes[i][idx[i]]).collect());
        for i in (0..n).rev() {
            idx[i] += 1;
            if idx[i] < axes[i].len() {
                break;
            }
            idx[i] = 0;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halton_is_in_unit_cube_and_deterministic() {
        for i in 0..100 {
            let p = halton_point(i, 3);
            assert!(p.iter().all(|&u| (0.0..1.0).contains(&u)));
            assert_eq!(p, halton_point(i, 3));
        }
    }

    #[test]
    fn ball_points_stay_in_ball() {
        let pts = ball_points(&[1.0, -2.0], 0.5, 40);
        assert_eq!(pts.len(), 40);
        assert_eq!(pts[0], vec![1.0, -2.0]);
        for p in &pts {
            assert!(vm::dist(p, &[1.0, -2.0]) <= 0.5 + 1e-12);
        }
    }

    #[test]
    fn box_grid_covers_corners() {
        let g = box_grid(&[0.0, 0.0], &[1.0, 2.0], &[3, 5]);
        assert_eq!(g.len(), 15);
        assert!(g.contains(&vec![0.0, 0.0]));
        assert!(g.contains(&vec![1.0, 2.0]));
    }

    #[test]
    fn sphere_directions_are_unit() {
        for dim in [1usize, 2, 3] {
            for d in sphere_directions(dim, 16) {
                assert!((vm::norm(&d) - 1.0).abs() < 1e-12);
            }
        }
    }
}
