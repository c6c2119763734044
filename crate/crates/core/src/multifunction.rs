//! Set-valued dynamics. [`SetRepr`] is a concrete, finitely described
//! velocity set supporting exact maximization of linear functionals;
//! [`Multifunction`] wraps a state-to-set oracle together with its
//! linear-growth constants and exposes the Hamiltonian
//! `H_F(x, p) = sup { <v, p> : v in F(x) }`, membership in `cone{F(x)}`,
//! and growth-envelope estimation.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::sampling;
use crate::vecmath as vm;

/// Finitely represented nonempty subset of `R^n`.
///
/// Every variant admits a closed-form support function, an exact maximum
/// norm, and an exact (or exactly enumerated) nearest-point map, which is
/// what the certifiers and the cone test rely on.
#[derive(Debug, Clone, PartialEq)]
pub enum SetRepr {
    FinitePoints(Vec<Vec<f64>>),
    Segment { a: Vec<f64>, b: Vec<f64> },
    Box { lower: Vec<f64>, upper: Vec<f64> },
    Ball { center: Vec<f64>, radius: f64 },
    HullOfPoints(Vec<Vec<f64>>),
    Union(Vec<SetRepr>),
}

impl SetRepr {
    pub fn singleton(p: Vec<f64>) -> SetRepr {
        SetRepr::FinitePoints(vec![p])
    }

    /// 1-D interval as a segment.
    pub fn interval(a: f64, b: f64) -> SetRepr {
        SetRepr::Segment { a: vec![a], b: vec![b] }
    }

    pub fn dim(&self) -> usize {
        match self {
            SetRepr::FinitePoints(pts) | SetRepr::HullOfPoints(pts) => {
                pts.first().map_or(0, |p| p.len())
            }
            SetRepr::Segment { a, .. } => a.len(),
            SetRepr::Box { lower, .. } => lower.len(),
            SetRepr::Ball { center, .. } => center.len(),
            SetRepr::Union(members) => members.first().map_or(0, |m| m.dim()),
        }
    }

    /// Structural invariants: nonemptiness, `radius >= 0`, ordered box
    /// bounds, consistent dimensions.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: &str| Err(Error::InvalidConfig(msg.to_string()));
        match self {
            SetRepr::FinitePoints(pts) | SetRepr::HullOfPoints(pts) => {
                if pts.is_empty() {
                    return fail("point list must be nonempty");
                }
                if pts.iter().any(|p| p.len() != pts[0].len()) {
                    return fail("points must share one dimension");
                }
            }
            SetRepr::Segment { a, b } => {
                if a.len() != b.len() {
                    return fail("segment endpoints must share one dimension");
                }
            }
            SetRepr::Box { lower, upper } => {
                if lower.len() != upper.len() {
                    return fail("box corners must share one dimension");
                }
                if lower.iter().zip(upper).any(|(l, u)| l > u) {
                    return fail("box requires lower <= upper componentwise");
                }
            }
            SetRepr::Ball { radius, .. } => {
                if *radius < 0.0 {
                    return fail("ball radius must be nonnegative");
                }
            }
            SetRepr::Union(members) => {
                if members.is_empty() {
                    return fail("union must have at least one member");
                }
                for m in members {
                    m.validate()?;
                    if m.dim() != members[0].dim() {
                        return fail("union members must share one dimension");
                    }
                }
            }
        }
        Ok(())
    }

    /// Exact support function `sup { <v, p> : v in S }`.
    pub fn support(&self, p: &[f64]) -> f64 {
        match self {
            SetRepr::FinitePoints(pts) | SetRepr::HullOfPoints(pts) => pts
                .iter()
                .map(|v| vm::dot(v, p))
                .fold(f64::NEG_INFINITY, f64::max),
            SetRepr::Segment { a, b } => vm::dot(a, p).max(vm::dot(b, p)),
            SetRepr::Box { lower, upper } => lower
                .iter()
                .zip(upper)
                .zip(p)
                .map(|((l, u), pi)| (l * pi).max(u * pi))
                .sum(),
            SetRepr::Ball { center, radius } => vm::dot(center, p) + radius * vm::norm(p),
            SetRepr::Union(members) => members
                .iter()
                .map(|m| m.support(p))
                .fold(f64::NEG_INFINITY, f64::max),
        }
    }

    /// A maximizer of `<v, p>` over the set.
    pub fn support_point(&self, p: &[f64]) -> Vec<f64> {
        match self {
            SetRepr::FinitePoints(pts) | SetRepr::HullOfPoints(pts) => pts
                .iter()
                .max_by(|u, v| vm::dot(u, p).total_cmp(&vm::dot(v, p)))
                .unwrap()
                .clone(),
            SetRepr::Segment { a, b } => {
                if vm::dot(a, p) >= vm::dot(b, p) {
                    a.clone()
                } else {
                    b.clone()
                }
            }
            SetRepr::Box { lower, upper } => lower
                .iter()
                .zip(upper)
                .zip(p)
                .map(|((l, u), pi)| if l * pi >= u * pi { *l } else { *u })
                .collect(),
            SetRepr::Ball { center, radius } => {
                let nrm = vm::norm(p);
                if nrm < 1e-300 {
                    center.clone()
                } else {
                    vm::add(center, &vm::scale(p, radius / nrm))
                }
            }
            SetRepr::Union(members) => members
                .iter()
                .max_by(|u, v| u.support(p).total_cmp(&v.support(p)))
                .unwrap()
                .support_point(p),
        }
    }

    /// Exact `sup { ||v|| : v in S }`. The norm is convex, so the maximum
    /// over polytopal variants sits at a vertex; boxes separate per
    /// coordinate and balls are closed-form.
    pub fn max_norm(&self) -> f64 {
        match self {
            SetRepr::FinitePoints(pts) | SetRepr::HullOfPoints(pts) => {
                pts.iter().map(|p| vm::norm(p)).fold(0.0, f64::max)
            }
            SetRepr::Segment { a, b } => vm::norm(a).max(vm::norm(b)),
            SetRepr::Box { lower, upper } => lower
                .iter()
                .zip(upper)
                .map(|(l, u)| (l * l).max(u * u))
                .sum::<f64>()
                .sqrt(),
            SetRepr::Ball { center, radius } => vm::norm(center) + radius,
            SetRepr::Union(members) => {
                members.iter().map(|m| m.max_norm()).fold(0.0, f64::max)
            }
        }
    }

    /// Nearest point of the set to `w` (exact per variant; hull distances
    /// enumerate candidate faces).
    pub fn nearest_point(&self, w: &[f64]) -> Vec<f64> {
        match self {
            SetRepr::FinitePoints(pts) => pts
                .iter()
                .min_by(|u, v| vm::dist(u, w).total_cmp(&vm::dist(v, w)))
                .unwrap()
                .clone(),
            SetRepr::Segment { a, b } => {
                let ab = vm::sub(b, a);
                let denom = vm::dot(&ab, &ab);
                let s = if denom < 1e-300 {
                    0.0
                } else {
                    (vm::dot(&vm::sub(w, a), &ab) / denom).clamp(0.0, 1.0)
                };
                vm::lerp(a, b, s)
            }
            SetRepr::Box { lower, upper } => w
                .iter()
                .zip(lower)
                .zip(upper)
                .map(|((wi, l), u)| wi.clamp(*l, *u))
                .collect(),
            SetRepr::Ball { center, radius } => {
                let d = vm::dist(w, center);
                if d <= *radius || d < 1e-300 {
                    w.to_vec()
                } else {
                    vm::add(center, &vm::scale(&vm::sub(w, center), radius / d))
                }
            }
            SetRepr::HullOfPoints(pts) => hull_nearest_point(pts, w),
            SetRepr::Union(members) => members
                .iter()
                .map(|m| m.nearest_point(w))
                .min_by(|u, v| vm::dist(u, w).total_cmp(&vm::dist(v, w)))
                .unwrap(),
        }
    }

    pub fn distance_to(&self, w: &[f64]) -> f64 {
        vm::dist(w, &self.nearest_point(w))
    }

    pub fn contains(&self, w: &[f64], tol: f64) -> bool {
        self.distance_to(w) <= tol
    }

    /// Image of the set under multiplication by `eta >= 0`.
    pub fn scaled(&self, eta: f64) -> SetRepr {
        assert!(eta >= 0.0, "cone scaling uses nonnegative factors");
        match self {
            SetRepr::FinitePoints(pts) => {
                SetRepr::FinitePoints(pts.iter().map(|p| vm::scale(p, eta)).collect())
            }
            SetRepr::Segment { a, b } => SetRepr::Segment {
                a: vm::scale(a, eta),
                b: vm::scale(b, eta),
            },
            SetRepr::Box { lower, upper } => SetRepr::Box {
                lower: vm::scale(lower, eta),
                upper: vm::scale(upper, eta),
            },
            SetRepr::Ball { center, radius } => SetRepr::Ball {
                center: vm::scale(center, eta),
                radius: radius * eta,
            },
            SetRepr::HullOfPoints(pts) => {
                SetRepr::HullOfPoints(pts.iter().map(|p| vm::scale(p, eta)).collect())
            }
            SetRepr::Union(members) => {
                SetRepr::Union(members.iter().map(|m| m.scaled(eta)).collect())
            }
        }
    }

    /// Whether the representation is convex by construction.
    pub fn is_convex(&self) -> bool {
        match self {
            SetRepr::FinitePoints(pts) => {
                pts.len() == 1 || pts.iter().all(|p| p == &pts[0])
            }
            SetRepr::Segment { .. }
            | SetRepr::Box { .. }
            | SetRepr::Ball { .. }
            | SetRepr::HullOfPoints(_) => true,
            SetRepr::Union(members) => members.len() == 1 && members[0].is_convex(),
        }
    }

    /// Nearest point as a convex projection; rejects representations that
    /// are not convex by construction.
    pub fn project_convex(&self, w: &[f64]) -> Result<Vec<f64>> {
        if !self.is_convex() {
            return Err(Error::NonconvexValue);
        }
        Ok(self.nearest_point(w))
    }

    /// Deterministic dense sample of the set (used by consistency checks
    /// and the brute-force oracles, not by the exact formulas).
    pub fn sample_points(&self, budget: usize) -> Vec<Vec<f64>> {
        let budget = budget.max(1);
        match self {
            SetRepr::FinitePoints(pts) => pts.clone(),
            SetRepr::Segment { a, b } => sampling::linspace(0.0, 1.0, budget.max(2))
                .into_iter()
                .map(|s| vm::lerp(a, b, s))
                .collect(),
            SetRepr::Box { lower, upper } => {
                let n = lower.len();
                let per_axis = (budget as f64).powf(1.0 / n as f64).ceil() as usize;
                sampling::box_grid(lower, upper, &vec![per_axis.max(2); n])
            }
            SetRepr::Ball { center, radius } => {
                let n = center.len();
                let dirs = sampling::sphere_directions(n, (budget / 4).max(8));
                let mut pts = vec![center.clone()];
                for rho in sampling::linspace(0.0, 1.0, 5).into_iter().skip(1) {
                    for d in &dirs {
                        pts.push(vm::add(center, &vm::scale(d, rho * radius)));
                        if pts.len() >= budget {
                            return pts;
                        }
                    }
                }
                pts
            }
            SetRepr::HullOfPoints(pts) => {
                let mut out = pts.clone();
                for i in 0..pts.len() {
                    for j in (i + 1)..pts.len() {
                        out.push(vm::lerp(&pts[i], &pts[j], 0.5));
                    }
                }
                let mut idx = 0usize;
                while out.len() < budget {
                    // Halton barycentric weights over the vertex list.
                    let raw = sampling::halton_point(idx, pts.len());
                    idx += 1;
                    let total: f64 = raw.iter().sum();
                    if total < 1e-12 {
                        continue;
                    }
                    let mut p = vm::zeros(self.dim());
                    for (v, wgt) in pts.iter().zip(&raw) {
                        vm::axpy(&mut p, wgt / total, v);
                    }
                    out.push(p);
                }
                out
            }
            SetRepr::Union(members) => {
                let per = budget.div_ceil(members.len());
                members.iter().flat_map(|m| m.sample_points(per)).collect()
            }
        }
    }

    /// Extreme points in a deterministic direction fan (exact support
    /// maximizers), used by the growth-envelope fit.
    pub fn extreme_points(&self, budget: usize) -> Vec<Vec<f64>> {
        sampling::sphere_directions(self.dim(), budget.max(2))
            .iter()
            .map(|d| self.support_point(d))
            .collect()
    }
}

/// Exact nearest point of `conv(pts)` to `w` by face enumeration: the
/// projection lies in the relative interior of some face spanned by at
/// most `n + 1` affinely independent vertices (Carathéodory), so solving
/// the affine least-squares problem on every small vertex subset and
/// keeping feasible (nonnegative-weight) candidates is exhaustive.
fn hull_nearest_point(pts: &[Vec<f64>], w: &[f64]) -> Vec<f64> {
    let mut best = pts
        .iter()
        .min_by(|u, v| vm::dist(u, w).total_cmp(&vm::dist(v, w)))
        .unwrap()
        .clone();
    let dim = pts[0].len();
    let max_size = (dim + 1).min(pts.len());
    if pts.len() > 18 {
        // Large vertex lists fall back to Frank-Wolfe refinement.
        return frank_wolfe_nearest(pts, w, best);
    }
    let m = pts.len();
    // Enumerate index subsets of size 2..=max_size.
    let mut subset: Vec<usize> = Vec::new();
    enumerate_subsets(m, max_size, &mut subset, &mut |idx: &[usize]| {
        if idx.len() < 2 {
            return;
        }
        if let Some(candidate) = affine_projection(pts, idx, w) {
            if vm::dist(&candidate, w) < vm::dist(&best, w) {
                best = candidate;
            }
        }
    });
    best
}

fn enumerate_subsets(
    m: usize,
    max_size: usize,
    current: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    fn rec(
        start: usize,
        m: usize,
        max_size: usize,
        current: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        visit(current);
        if current.len() == max_size {
            return;
        }
        for i in start..m {
            current.push(i);
            rec(i + 1, m, max_size, current, visit);
            current.pop();
        }
    }
    rec(0, m, max_size, current, visit);
}

/// Least-squares affine combination of `pts[idx]` closest to `w`; `None`
/// when the subset is affinely dependent or the weights leave the simplex.
fn affine_projection(pts: &[Vec<f64>], idx: &[usize], w: &[f64]) -> Option<Vec<f64>> {
    let v0 = &pts[idx[0]];
    let edges: Vec<Vec<f64>> = idx[1..].iter().map(|&i| vm::sub(&pts[i], v0)).collect();
    let rhs: Vec<f64> = edges.iter().map(|e| vm::dot(&vm::sub(w, v0), e)).collect();
    let gram: Vec<Vec<f64>> = edges
        .iter()
        .map(|ei| edges.iter().map(|ej| vm::dot(ei, ej)).collect())
        .collect();
    let mu = vm::solve_dense(gram, rhs)?;
    let lambda0 = 1.0 - mu.iter().sum::<f64>();
    if lambda0 < -1e-10 || mu.iter().any(|&m| m < -1e-10) {
        return None;
    }
    let mut p = v0.clone();
    for (e, m) in edges.iter().zip(&mu) {
        vm::axpy(&mut p, *m, e);
    }
    Some(p)
}

fn frank_wolfe_nearest(pts: &[Vec<f64>], w: &[f64], start: Vec<f64>) -> Vec<f64> {
    let mut x = start;
    for _ in 0..400 {
        let grad = vm::sub(&x, w);
        let neg = vm::scale(&grad, -1.0);
        let s = pts
            .iter()
            .max_by(|u, v| vm::dot(u, &neg).total_cmp(&vm::dot(v, &neg)))
            .unwrap();
        let dir = vm::sub(s, &x);
        let denom = vm::dot(&dir, &dir);
        if denom < 1e-30 {
            break;
        }
        let step = (-vm::dot(&grad, &dir) / denom).clamp(0.0, 1.0);
        if step * denom.sqrt() < 1e-14 {
            break;
        }
        vm::axpy(&mut x, step, &dir);
    }
    x
}

/// State-to-velocity-set oracle with linear-growth metadata. The oracle is
/// required to be deterministic; all methods are pure.
#[derive(Clone)]
pub struct Multifunction {
    dim: usize,
    oracle: Arc<dyn Fn(&[f64]) -> SetRepr + Send + Sync>,
    growth: (f64, f64),
}

impl std::fmt::Debug for Multifunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Multifunction")
            .field("dim", &self.dim)
            .field("growth", &self.growth)
            .finish()
    }
}

impl Multifunction {
    pub fn new(
        dim: usize,
        growth: (f64, f64),
        oracle: impl Fn(&[f64]) -> SetRepr + Send + Sync + 'static,
    ) -> Multifunction {
        Multifunction {
            dim,
            growth,
            oracle: Arc::new(oracle),
        }
    }

    /// Constant multifunction `F(x) = S` for all `x`.
    pub fn constant(dim: usize, value: SetRepr) -> Multifunction {
        let c1 = value.max_norm();
        Multifunction::new(dim, (c1, 0.0), move |_| value.clone())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Linear-growth constants `(c1, c2)` with `||v|| <= c1 + c2 ||x||`.
    pub fn growth(&self) -> (f64, f64) {
        self.growth
    }

    fn check_dim(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        Ok(())
    }

    /// The set value `F(x)`.
    pub fn eval_set(&self, x: &[f64]) -> Result<SetRepr> {
        self.check_dim(x)?;
        Ok((self.oracle)(x))
    }

    /// Upper Hamiltonian `H_F(x, p) = sup { <v, p> : v in F(x) }`, exact
    /// via support functions (union = max over members).
    pub fn hamiltonian(&self, x: &[f64], p: &[f64]) -> Result<f64> {
        self.check_dim(x)?;
        self.check_dim(p)?;
        Ok(self.eval_set(x)?.support(p))
    }

    /// `H_F(x, d) <= tol` for every direction `d` in `dirs`; vacuously true
    /// on an empty direction list.
    pub fn hamiltonian_over_set(&self, x: &[f64], dirs: &[Vec<f64>], tol: f64) -> Result<bool> {
        for d in dirs {
            if self.hamiltonian(x, d)? > tol {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Distance from `w` to `cone{F(x)} = union of eta F(x), eta >= 0`,
    /// minimized over a geometric grid of scalings refined by local
    /// ternary search.
    pub fn cone_distance(&self, x: &[f64], w: &[f64]) -> Result<f64> {
        self.check_dim(x)?;
        self.check_dim(w)?;
        let value = self.eval_set(x)?;
        let d_at = |eta: f64| value.scaled(eta).distance_to(w);
        let mut best_eta = 0.0;
        let mut best = vm::norm(w); // eta = 0 collapses the cone to the origin
        for j in -20..=20 {
            let eta = (j as f64).exp2();
            let d = d_at(eta);
            if d < best {
                best = d;
                best_eta = eta;
            }
        }
        if best_eta > 0.0 {
            // Local refinement on the bracketing grid cell; the objective
            // is piecewise smooth in the scaling.
            let (mut lo, mut hi) = (best_eta / 2.0, best_eta * 2.0);
            for _ in 0..120 {
                let m1 = lo + (hi - lo) / 3.0;
                let m2 = hi - (hi - lo) / 3.0;
                if d_at(m1) <= d_at(m2) {
                    hi = m2;
                } else {
                    lo = m1;
                }
            }
            best = best.min(d_at(0.5 * (lo + hi)));
        }
        Ok(best)
    }

    /// Whether `dist(w, cone{F(x)}) <= tol`.
    pub fn cone_contains(&self, x: &[f64], w: &[f64], tol: f64) -> Result<bool> {
        if tol <= 0.0 {
            return Err(Error::PreconditionViolated(
                "cone_contains requires tol > 0".into(),
            ));
        }
        Ok(self.cone_distance(x, w)? <= tol)
    }
}

/// Least-squares fit of the envelope `||v|| <= c1 + c2 ||x||` over the
/// sampled states, lifted so the returned constants dominate every sample.
pub fn growth_estimate(f: &Multifunction, samples: &[Vec<f64>]) -> Result<(f64, f64)> {
    if samples.is_empty() {
        return Err(Error::PreconditionViolated(
            "growth_estimate requires at least one sample".into(),
        ));
    }
    let mut data = Vec::with_capacity(samples.len());
    for x in samples {
        let value = f.eval_set(x)?;
        data.push((vm::norm(x), value.max_norm()));
    }
    let n = data.len() as f64;
    let sum_r: f64 = data.iter().map(|(r, _)| r).sum();
    let sum_m: f64 = data.iter().map(|(_, m)| m).sum();
    let sum_rr: f64 = data.iter().map(|(r, _)| r * r).sum();
    let sum_rm: f64 = data.iter().map(|(r, m)| r * m).sum();
    let det = n * sum_rr - sum_r * sum_r;
    let (mut c1, mut c2) = if det.abs() > 1e-12 * (1.0 + sum_rr) {
        let c2 = (n * sum_rm - sum_r * sum_m) / det;
        let c1 = (sum_m - c2 * sum_r) / n;
        (c1, c2)
    } else {
        (sum_m / n, 0.0)
    };
    if c2 < 0.0 {
        c2 = 0.0;
        c1 = sum_m / n;
    }
    c1 = c1.max(0.0);
    let worst = data
        .iter()
        .map(|(r, m)| m - (c1 + c2 * r))
        .fold(f64::NEG_INFINITY, f64::max);
    if worst > 0.0 {
        c1 += worst;
    }
    Ok((c1, c2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn intro_dynamics() -> Multifunction {
        // F(0) = [-1, +1], F(x) = {-sign(x)} otherwise.
        Multifunction::new(1, (1.0, 0.0), |x| {
            if x[0] == 0.0 {
                SetRepr::interval(-1.0, 1.0)
            } else {
                SetRepr::singleton(vec![-x[0].signum()])
            }
        })
    }

    #[test]
    fn eval_set_intro_values() {
        let f = intro_dynamics();
        assert_eq!(f.eval_set(&[0.0]).unwrap(), SetRepr::interval(-1.0, 1.0));
        assert_eq!(
            f.eval_set(&[0.5]).unwrap(),
            SetRepr::singleton(vec![-1.0])
        );
        let zero = Multifunction::constant(1, SetRepr::singleton(vec![0.0]));
        assert_eq!(
            zero.eval_set(&[42.0]).unwrap(),
            SetRepr::singleton(vec![0.0])
        );
    }

    #[test]
    fn eval_set_checks_dimension() {
        let f = intro_dynamics();
        assert!(matches!(
            f.eval_set(&[1.0, 2.0]),
            Err(Error::DimensionMismatch { expected: 1, got: 2 })
        ));
    }

    #[test]
    fn hamiltonian_intro_values() {
        let f = intro_dynamics();
        assert!((f.hamiltonian(&[0.0], &[1.0]).unwrap() - 1.0).abs() < 1e-12);
        // At x = 2 with p = Psi'(2) = 4 for Psi = x^2: sup v*4 over {-1} = -4.
        assert!((f.hamiltonian(&[2.0], &[4.0]).unwrap() + 4.0).abs() < 1e-12);
        assert_eq!(f.hamiltonian(&[3.0], &[0.0]).unwrap(), 0.0);
    }

    #[test]
    fn hamiltonian_over_set_cases() {
        let f = intro_dynamics();
        let tol = 1e-9;
        assert!(f.hamiltonian_over_set(&[1.0], &[], tol).unwrap());
        assert!(f
            .hamiltonian_over_set(&[2.0], &[vec![4.0]], tol)
            .unwrap());
        let ones = Multifunction::constant(1, SetRepr::singleton(vec![1.0]));
        // H = 1 * 0.2 = 0.02 > tol.
        assert!(!ones
            .hamiltonian_over_set(&[0.1], &[vec![0.2]], tol)
            .unwrap());
    }

    #[test]
    fn support_closed_forms() {
        let seg = SetRepr::Segment {
            a: vec![-1.0, 0.0],
            b: vec![2.0, 3.0],
        };
        let p = [0.5, -1.5];
        assert!((seg.support(&p) - (-0.5f64).max(1.0 - 4.5)).abs() < 1e-12);

        let bx = SetRepr::Box {
            lower: vec![-1.0, 2.0],
            upper: vec![3.0, 5.0],
        };
        assert!((bx.support(&p) - (3.0 * 0.5 + 2.0 * -1.5)).abs() < 1e-12);

        let ball = SetRepr::Ball {
            center: vec![1.0, 1.0],
            radius: 2.0,
        };
        let expect = (0.5 - 1.5) + 2.0 * (0.25f64 + 2.25).sqrt();
        assert!((ball.support(&p) - expect).abs() < 1e-12);
    }

    #[test]
    fn support_matches_dense_sample() {
        let sets = vec![
            SetRepr::interval(-1.0, 1.0),
            SetRepr::Box {
                lower: vec![-1.0, 0.0],
                upper: vec![2.0, 1.0],
            },
            SetRepr::Ball {
                center: vec![0.5, -0.5],
                radius: 1.5,
            },
            SetRepr::HullOfPoints(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 2.0]]),
            SetRepr::Union(vec![
                SetRepr::singleton(vec![3.0, 0.0]),
                SetRepr::Segment {
                    a: vec![0.0, -1.0],
                    b: vec![1.0, 1.0],
                },
            ]),
        ];
        for s in sets {
            let dim = s.dim();
            for d in sampling::sphere_directions(dim, 24) {
                let sup = s.support(&d);
                let sampled = s
                    .sample_points(2000)
                    .iter()
                    .map(|v| vm::dot(v, &d))
                    .fold(f64::NEG_INFINITY, f64::max);
                assert!(sampled <= sup + 1e-9, "sample exceeded support");
                assert!(sup - sampled <= 2e-3 * (1.0 + sup.abs()), "support too loose");
            }
        }
    }

    #[test]
    fn positive_homogeneity() {
        let f = intro_dynamics();
        for lambda in [0.0, 0.5, 1.0, 7.25] {
            let base = f.hamiltonian(&[0.0], &[1.0]).unwrap();
            let scaled = f.hamiltonian(&[0.0], &[lambda]).unwrap();
            assert!((scaled - lambda * base).abs() < 1e-12);
        }
    }

    #[test]
    fn cone_contains_basic() {
        let f = intro_dynamics();
        // w = 0 always belongs (eta = 0).
        assert!(f.cone_contains(&[0.7], &[0.0], 1e-9).unwrap());
        // w = 2 v for v = -1 in F(0.7).
        assert!(f.cone_contains(&[0.7], &[-2.0], 1e-9).unwrap());
        // +1 is not in cone{-1}.
        assert!(!f.cone_contains(&[0.7], &[1.0], 1e-9).unwrap());
        assert!(matches!(
            f.cone_contains(&[0.7], &[1.0], 0.0),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn cone_contains_example24_scalar_part() {
        // lambda = 2, delta = 1, U(x) = [-1, 1]: the scalar factor set is
        // [1, 3] and any w = 2 + u', u' in [-1, 1], lies in cone{[1, 3]}.
        // Interval oracle: w / eta in [1, 3] for eta = w / 2.
        let factors = Multifunction::constant(1, SetRepr::interval(1.0, 3.0));
        for u in sampling::linspace(-1.0, 1.0, 21) {
            let w = 2.0 + u;
            let eta = w / 2.0;
            assert!(w / eta >= 1.0 && w / eta <= 3.0);
            assert!(factors.cone_contains(&[0.3], &[w], 1e-9).unwrap());
        }
    }

    #[test]
    fn cone_scale_invariance() {
        let f = intro_dynamics();
        for s in [0.25, 1.0, 4.0, 64.0] {
            assert!(f.cone_contains(&[0.7], &[-0.5 * s], 1e-9).unwrap());
        }
    }

    #[test]
    fn growth_estimate_cases() {
        let zero = Multifunction::constant(1, SetRepr::singleton(vec![0.0]));
        let samples: Vec<Vec<f64>> = sampling::linspace(-2.0, 2.0, 9)
            .into_iter()
            .map(|x| vec![x])
            .collect();
        let (c1, c2) = growth_estimate(&zero, &samples).unwrap();
        assert!(c1 >= 0.0 && c1 < 1e-9);
        assert_eq!(c2, 0.0);

        let intro = intro_dynamics();
        let (c1, c2) = growth_estimate(&intro, &samples).unwrap();
        assert!(c1 >= 1.0 - 1e-9);
        assert!(c2.abs() < 1e-9);

        let identity = Multifunction::new(1, (0.0, 1.0), |x| SetRepr::singleton(x.to_vec()));
        let (c1, c2) = growth_estimate(&identity, &samples).unwrap();
        assert!(c2 >= 1.0 - 1e-9);
        // Envelope dominates every sample.
        for x in &samples {
            let m = identity.eval_set(x).unwrap().max_norm();
            assert!(c1 + c2 * vm::norm(x) >= m - 1e-12);
        }
    }

    #[test]
    fn hull_nearest_point_matches_grid() {
        let pts = vec![vec![0.0, 0.0], vec![2.0, 0.0], vec![0.0, 2.0]];
        let hull = SetRepr::HullOfPoints(pts);
        // Outside past the hypotenuse: projection onto x + y = 2.
        let p = hull.nearest_point(&[2.0, 2.0]);
        assert!(vm::dist(&p, &[1.0, 1.0]) < 1e-9);
        // Interior point projects to itself (distance 0).
        assert!(hull.distance_to(&[0.5, 0.5]) < 1e-9);
        // Vertex region.
        let q = hull.nearest_point(&[3.0, -1.0]);
        assert!(vm::dist(&q, &[2.0, 0.0]) < 1e-9);
    }

    #[test]
    fn oracle_is_deterministic() {
        let f = intro_dynamics();
        for x in [[0.0], [0.3], [-2.0]] {
            assert_eq!(f.eval_set(&x).unwrap(), f.eval_set(&x).unwrap());
        }
    }
}
