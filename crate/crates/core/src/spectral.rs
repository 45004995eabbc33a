//! First intersection matrix, its spectrum and eigenvectors.
//!
//! A homogeneous monotonic P-polynomial table algebra of dimension `d` and
//! valency `k` has a tridiagonal first intersection matrix `B₁` fixed by
//! `(d, k, α)`, with `α = (3k−6)/4` forced once `d ≥ 5`. Writing
//! `a = (k+2)/4`, every eigenvalue has the form
//! `λ = 2a·cos θ + (k−2)/2`, where `θ = 0` gives `λ = k` and the remaining
//! `d` angles are the roots in `(0, π)` of
//!
//! ```text
//! G(θ) = (k+2) sin((d+2)θ) − 4 sin((d+1)θ) − 2k sin(dθ)
//!        + 4 sin((d−1)θ) + (k−2) sin((d−2)θ).
//! ```
//!
//! [`find_spectrum`] locates those roots by a uniform sign scan followed by
//! bisection. [`oracle_spectrum`] computes the same eigenvalues with the
//! Sturm solver from [`crate::tridiag`] and works for every `d ≥ 2`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::tridiag::Tridiagonal;

/// Grid points per unit of `d + 2` used by [`find_spectrum`].
pub const DEFAULT_GRID_DENSITY: usize = 64;

/// Roots closer than this after bisection are treated as a double root.
const MIN_ROOT_GAP: f64 = 1e-10;
const MAX_BISECTIONS: usize = 200;
/// `|G(θ)|` above this is not accepted as a root by [`eigenvector_from_theta`].
const ROOT_RESIDUAL_GUARD: f64 = 1e-6;
/// Relative slack when comparing `α` against its admissible range.
const ALPHA_SLACK: f64 = 1e-12;

/// The parameters `(d, k, α)` of a homogeneous monotonic P-polynomial table
/// algebra. The basis has `d + 1` elements.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableAlgebraParams {
    d: usize,
    k: f64,
    alpha: f64,
}

impl TableAlgebraParams {
    /// Parameters with the default `α = (3k−6)/4`. This is the only admissible
    /// value for `d ≥ 5` and the upper end of the admissible range below that.
    pub fn homogeneous(d: usize, k: f64) -> Result<Self> {
        Self::with_alpha(d, k, forced_alpha(k))
    }

    pub fn with_alpha(d: usize, k: f64, alpha: f64) -> Result<Self> {
        if d < 2 {
            return Err(invalid(format!("d = {d} must be at least 2")));
        }
        if !k.is_finite() || k < 2.0 {
            return Err(invalid(format!(
                "valency k = {k} must be a finite real >= 2"
            )));
        }
        if !alpha.is_finite() {
            return Err(invalid(format!("alpha = {alpha} must be finite")));
        }
        let upper = forced_alpha(k);
        let slack = ALPHA_SLACK * k.abs().max(1.0);
        let alpha = match d {
            5.. => {
                if (alpha - upper).abs() > slack {
                    return Err(invalid(format!(
                        "d >= 5 requires alpha = (3k-6)/4 = {upper}, got {alpha}"
                    )));
                }
                upper
            }
            4 => check_range(
                alpha,
                (2.0 * k - 4.0) / 3.0,
                upper,
                slack,
                "d = 4",
                "(2k-4)/3",
                "(3k-6)/4",
            )?,
            3 => check_range(
                alpha,
                (k - 2.0) / 2.0,
                upper,
                slack,
                "d = 3",
                "(k-2)/2",
                "(3k-6)/4",
            )?,
            _ => check_range(alpha, 0.0, k - 2.0, slack, "d = 2", "0", "k-2")?,
        };
        if k - alpha - 1.0 <= 0.0 {
            return Err(invalid(format!(
                "k - alpha - 1 = {} must be > 0",
                k - alpha - 1.0
            )));
        }
        Ok(Self { d, k, alpha })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `1 + d·k`, the sum of the valencies.
    pub fn order(&self) -> f64 {
        1.0 + self.d as f64 * self.k
    }

    /// The common off-diagonal entry `k − α − 1`, equal to `(k+2)/4` for `d ≥ 5`.
    pub fn off_band(&self) -> f64 {
        self.k - self.alpha - 1.0
    }

    /// `λ = (k+2)/2·cos θ + (k−2)/2`.
    pub fn lambda_of_theta(&self, theta: f64) -> f64 {
        lambda_of_theta(self.k, theta)
    }
}

fn forced_alpha(k: f64) -> f64 {
    (3.0 * k - 6.0) / 4.0
}

fn invalid(msg: String) -> Error {
    Error::InvalidParams(msg)
}

fn check_range(
    alpha: f64,
    lo: f64,
    hi: f64,
    slack: f64,
    case: &str,
    lo_name: &str,
    hi_name: &str,
) -> Result<f64> {
    if alpha < lo - slack || alpha > hi + slack {
        return Err(invalid(format!(
            "{case} requires {lo_name} = {lo} <= alpha <= {hi_name} = {hi}, got {alpha}"
        )));
    }
    Ok(alpha.clamp(lo, hi))
}

fn lambda_of_theta(k: f64, theta: f64) -> f64 {
    0.5 * (k + 2.0) * theta.cos() + 0.5 * (k - 2.0)
}

/// Inverse of the `θ ↦ λ` map, or `None` when `λ` falls outside `[−2, k]`.
fn theta_of_lambda(k: f64, lambda: f64) -> Option<f64> {
    let c = (lambda - 0.5 * (k - 2.0)) / (0.5 * (k + 2.0));
    if (-1.0 - 1e-9..=1.0 + 1e-9).contains(&c) {
        Some(c.clamp(-1.0, 1.0).acos())
    } else {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpectrumMethod {
    /// Roots of the sine equation mapped through `θ ↦ λ`.
    ClosedForm,
    /// Sturm bisection on the tridiagonal matrix.
    Oracle,
}

/// Eigenvalues of a first intersection matrix, sorted descending, with the
/// matching angles when every eigenvalue lies in the range of `θ ↦ λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    thetas: Option<Vec<f64>>,
    lambdas: Vec<f64>,
    method: SpectrumMethod,
}

impl Spectrum {
    /// Wraps eigenvalues from a numerical solver. They are sorted descending
    /// and, when possible, mapped back to angles through `λ = (k+2)/2·cos θ + (k−2)/2`.
    pub fn from_oracle(mut lambdas: Vec<f64>, k: f64) -> Self {
        lambdas.sort_by(|a, b| b.total_cmp(a));
        let thetas = lambdas
            .iter()
            .map(|&l| theta_of_lambda(k, l))
            .collect::<Option<Vec<_>>>();
        Self {
            thetas,
            lambdas,
            method: SpectrumMethod::Oracle,
        }
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    pub fn thetas(&self) -> Option<&[f64]> {
        self.thetas.as_deref()
    }

    pub fn method(&self) -> SpectrumMethod {
        self.method
    }

    pub fn len(&self) -> usize {
        self.lambdas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambdas.is_empty()
    }
}

/// The first intersection matrix `B₁`.
///
/// `diag = [0, α, 2(α+1)−k, …, 2(α+1)−k, α+1]`,
/// `sup = [1, k−α−1, …]`, `sub = [k, k−α−1, …]`.
pub fn build_b1(p: &TableAlgebraParams) -> Tridiagonal {
    let d = p.d;
    let off = p.off_band();
    let mut diag = vec![2.0 * (p.alpha + 1.0) - p.k; d + 1];
    diag[0] = 0.0;
    diag[1] = p.alpha;
    diag[d] = p.alpha + 1.0;
    let mut sub = vec![off; d];
    let mut sup = vec![off; d];
    sub[0] = p.k;
    sup[0] = 1.0;
    Tridiagonal::new(diag, sub, sup).expect("band lengths are d+1, d, d")
}

/// `G(θ)`, whose roots in `(0, π)` give the non-trivial eigenvalues of `B₁`.
pub fn sine_equation_residual(theta: f64, p: &TableAlgebraParams) -> f64 {
    let d = p.d as f64;
    let k = p.k;
    (k + 2.0) * ((d + 2.0) * theta).sin()
        - 4.0 * ((d + 1.0) * theta).sin()
        - 2.0 * k * (d * theta).sin()
        + 4.0 * ((d - 1.0) * theta).sin()
        + (k - 2.0) * ((d - 2.0) * theta).sin()
}

/// Spectrum of `B₁` from the roots of [`sine_equation_residual`].
///
/// Scans `grid_density·(d+2)` uniform cells of `[0, π]`, bisects every sign
/// change to width `tol`, adjoins `θ = 0` and returns `λ` descending.
/// Requires `d ≥ 5`. Fails with [`Error::RootCountMismatch`] unless exactly
/// `d` well-separated interior roots turn up.
pub fn find_spectrum(p: &TableAlgebraParams, grid_density: usize, tol: f64) -> Result<Spectrum> {
    if p.d < 5 {
        return Err(invalid(format!(
            "closed-form spectrum needs d >= 5, got d = {}",
            p.d
        )));
    }
    if !(tol > 0.0) {
        return Err(invalid(format!("tol = {tol} must be > 0")));
    }
    if grid_density == 0 {
        return Err(invalid("grid_density must be positive".into()));
    }
    let g = |theta: f64| sine_equation_residual(theta, p);
    let cells = grid_density * (p.d + 2);
    let node = |m: usize| m as f64 * PI / cells as f64;

    // Endpoints are trivial zeros of G and are skipped.
    let mut roots = Vec::with_capacity(p.d);
    let mut left = g(node(1));
    if left == 0.0 {
        roots.push(node(1));
    }
    for m in 1..cells - 1 {
        let right = g(node(m + 1));
        if right == 0.0 {
            roots.push(node(m + 1));
        } else if left * right < 0.0 {
            roots.push(bisect(&g, node(m), node(m + 1), left, tol));
        }
        left = right;
    }

    let separated = roots.windows(2).all(|w| w[1] - w[0] >= MIN_ROOT_GAP);
    if roots.len() != p.d || !separated {
        return Err(Error::RootCountMismatch {
            found: roots.len(),
            expected: p.d,
        });
    }

    let mut thetas = Vec::with_capacity(p.d + 1);
    thetas.push(0.0);
    thetas.extend(roots);
    let mut lambdas: Vec<f64> = thetas.iter().map(|&t| p.lambda_of_theta(t)).collect();
    lambdas[0] = p.k;
    Ok(Spectrum {
        thetas: Some(thetas),
        lambdas,
        method: SpectrumMethod::ClosedForm,
    })
}

fn bisect(g: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, mut g_lo: f64, tol: f64) -> f64 {
    for _ in 0..MAX_BISECTIONS {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let g_mid = g(mid);
        if g_mid == 0.0 {
            return mid;
        }
        if (g_mid < 0.0) == (g_lo < 0.0) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Spectrum of `B₁` by Sturm bisection. Valid for every `d ≥ 2`.
pub fn oracle_spectrum(p: &TableAlgebraParams, tol: f64) -> Result<Spectrum> {
    let lambdas = build_b1(p).eigenvalues_oracle(tol)?;
    Ok(Spectrum::from_oracle(lambdas, p.k))
}

/// Eigenvector of `B₁` synthesized from a root `θ` of the sine equation.
///
/// `u[0]` here is the first coordinate (normalized to 1). The sequence is
/// implicitly extended by zeros on both sides; [`EigvecCoefficients::boundary`]
/// holds the value the sine formula produces one step past the end, which
/// vanishes exactly when `θ` is a root.
#[derive(Debug, Clone, PartialEq)]
pub struct EigvecCoefficients {
    pub theta: f64,
    /// Eigenvalue of `B₁` belonging to `theta`.
    pub lambda: f64,
    pub u: Vec<f64>,
    pub boundary: f64,
}

/// Builds the eigenvector for interior root `θ`.
///
/// With `a = (k+2)/4` and `μ = 2a·cos θ` (the eigenvalue of `B₁ − (k−2)/2·I`),
/// `u₁ = 1`, `u₂ = k − 2a + μ`, and for `j ≥ 3`
///
/// ```text
/// u_j = [a·u₁ sin(jθ) + c₁ sin((j−1)θ) + c₂ sin((j−2)θ)] / (a sin θ)
/// c₁ = (k−2a)u₁ + (a−1)u₂,   c₂ = (a−k)u₁ + (1−a)u₂.
/// ```
pub fn eigenvector_from_theta(p: &TableAlgebraParams, theta: f64) -> Result<EigvecCoefficients> {
    if p.d < 5 {
        return Err(invalid(format!(
            "eigenvector synthesis needs d >= 5, got d = {}",
            p.d
        )));
    }
    let residual = sine_equation_residual(theta, p);
    if !(theta > 0.0 && theta < PI) || !(residual.abs() <= ROOT_RESIDUAL_GUARD) {
        return Err(Error::NotARoot { theta, residual });
    }
    let d = p.d;
    let k = p.k;
    let a = 0.25 * (k + 2.0);
    let mu = 2.0 * a * theta.cos();
    let u1 = 1.0;
    let u2 = (k - 2.0 * a + mu) * u1;
    let c1 = (k - 2.0 * a) * u1 + (a - 1.0) * u2;
    let c2 = (a - k) * u1 + (1.0 - a) * u2;
    let denom = a * theta.sin();
    let sine_sum = |j: usize| {
        let j = j as f64;
        a * u1 * (j * theta).sin() + c1 * ((j - 1.0) * theta).sin() + c2 * ((j - 2.0) * theta).sin()
    };

    let mut u = Vec::with_capacity(d + 1);
    u.push(u1);
    u.push(u2);
    for j in 3..=d + 1 {
        u.push(sine_sum(j) / denom);
    }
    let last = u[d];
    let boundary = (sine_sum(d + 2) - a * last * theta.sin()) / denom;

    Ok(EigvecCoefficients {
        theta,
        lambda: p.lambda_of_theta(theta),
        u,
        boundary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(d: usize, k: f64) -> TableAlgebraParams {
        TableAlgebraParams::homogeneous(d, k).unwrap()
    }

    #[test]
    fn b1_for_odd_polygon() {
        let b1 = build_b1(&params(5, 2.0));
        assert_eq!(b1.diag(), &[0.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        assert_eq!(b1.sup(), &[1.0; 5]);
        assert_eq!(b1.sub(), &[2.0, 1.0, 1.0, 1.0, 1.0]);
        let off = b1.symmetrize().unwrap();
        assert_eq!(off.off(), &[2.0_f64.sqrt(), 1.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn b1_for_valency_four() {
        let p = params(5, 4.0);
        assert_eq!(p.alpha(), 1.5);
        let b1 = build_b1(&p);
        assert_eq!(b1.diag(), &[0.0, 1.5, 1.0, 1.0, 1.0, 2.5]);
        assert_eq!(b1.sup(), &[1.0, 1.5, 1.5, 1.5, 1.5]);
        assert_eq!(b1.sub(), &[4.0, 1.5, 1.5, 1.5, 1.5]);
    }

    #[test]
    fn valency_vector_is_perron_eigenvector() {
        for (d, k, alpha) in [(2, 3.0, 0.5), (3, 4.0, 1.2), (4, 5.0, 2.1), (7, 6.0, 3.0)] {
            let b1 = build_b1(&TableAlgebraParams::with_alpha(d, k, alpha).unwrap());
            let mut v = vec![k; d + 1];
            v[0] = 1.0;
            let bv = b1.mul_vec(&v);
            assert!(
                bv.iter().zip(&v).all(|(x, y)| (x - k * y).abs() < 1e-12),
                "{bv:?}"
            );
            // Column sums are k as well.
            let cols = b1.transpose().mul_vec(&vec![1.0; d + 1]);
            assert!(cols.iter().all(|s| (s - k).abs() < 1e-12), "{cols:?}");
        }
    }

    #[test]
    fn alpha_constraints() {
        let err = TableAlgebraParams::with_alpha(5, 4.0, 1.0).unwrap_err();
        assert!(
            matches!(&err, Error::InvalidParams(m) if m.contains("(3k-6)/4")),
            "{err}"
        );
        assert!(TableAlgebraParams::with_alpha(4, 4.0, 1.0).is_err());
        assert!(TableAlgebraParams::with_alpha(4, 4.0, 4.0 / 3.0).is_ok());
        assert!(TableAlgebraParams::with_alpha(3, 4.0, 1.0).is_ok());
        assert!(TableAlgebraParams::with_alpha(3, 4.0, 0.9).is_err());
        assert!(TableAlgebraParams::with_alpha(2, 4.0, 0.0).is_ok());
        assert!(TableAlgebraParams::with_alpha(2, 4.0, 2.5).is_err());
        assert!(TableAlgebraParams::homogeneous(1, 4.0).is_err());
        assert!(TableAlgebraParams::homogeneous(5, 1.5).is_err());
        assert!(TableAlgebraParams::homogeneous(5, f64::NAN).is_err());
        // Non-integer valency is allowed.
        assert!(TableAlgebraParams::homogeneous(6, 2.5).is_ok());
    }

    #[test]
    fn residual_examples() {
        assert_eq!(sine_equation_residual(0.0, &params(7, 3.0)), 0.0);
        assert!(sine_equation_residual(2.0 * PI / 11.0, &params(5, 2.0)).abs() < 1e-12);
        assert!((sine_equation_residual(PI / 2.0, &params(5, 4.0)) + 16.0).abs() < 1e-12);
    }

    #[test]
    fn residual_is_odd_and_vanishes_at_multiples_of_pi() {
        let p = params(8, 6.0);
        for t in [0.1, 0.7, 1.3, 2.9] {
            assert!((sine_equation_residual(-t, &p) + sine_equation_residual(t, &p)).abs() < 1e-12);
        }
        for m in 0..4 {
            assert!(sine_equation_residual(m as f64 * PI, &p).abs() < 1e-12);
        }
    }

    #[test]
    fn odd_polygon_spectrum() {
        for d in [5usize, 6] {
            let s = find_spectrum(&params(d, 2.0), DEFAULT_GRID_DENSITY, 1e-12).unwrap();
            assert_eq!(s.method(), SpectrumMethod::ClosedForm);
            let n = (2 * d + 1) as f64;
            for (j, (&l, &t)) in s.lambdas().iter().zip(s.thetas().unwrap()).enumerate() {
                let angle = 2.0 * j as f64 * PI / n;
                assert!((t - angle).abs() < 1e-9);
                assert!((l - 2.0 * angle.cos()).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn closed_form_matches_oracle_k4() {
        let p = params(5, 4.0);
        let s = find_spectrum(&p, DEFAULT_GRID_DENSITY, 1e-12).unwrap();
        let o = oracle_spectrum(&p, 1e-12).unwrap();
        assert_eq!(o.method(), SpectrumMethod::Oracle);
        for (a, b) in s.lambdas().iter().zip(o.lambdas()) {
            assert!((a - b).abs() < 1e-8, "{a} vs {b}");
        }
        assert_eq!(s.lambdas()[0], 4.0);
    }

    #[test]
    fn spectrum_requires_d_at_least_five() {
        let p = TableAlgebraParams::homogeneous(4, 3.0).unwrap();
        assert!(matches!(
            find_spectrum(&p, DEFAULT_GRID_DENSITY, 1e-12),
            Err(Error::InvalidParams(_))
        ));
        assert_eq!(oracle_spectrum(&p, 1e-12).unwrap().len(), 5);
    }

    #[test]
    fn coarse_grid_reports_mismatch() {
        let p = params(12, 10.0);
        assert!(matches!(
            find_spectrum(&p, 1, 1e-12),
            Err(Error::RootCountMismatch { expected: 12, .. })
        ));
    }

    #[test]
    fn eigenvector_satisfies_b1() {
        for (d, k) in [(5, 2.0), (5, 4.0), (9, 10.0)] {
            let p = params(d, k);
            let b1 = build_b1(&p);
            let s = find_spectrum(&p, DEFAULT_GRID_DENSITY, 1e-12).unwrap();
            for &theta in &s.thetas().unwrap()[1..] {
                let ev = eigenvector_from_theta(&p, theta).unwrap();
                assert_eq!(ev.u[0], 1.0);
                let bu = b1.mul_vec(&ev.u);
                let norm = ev.u.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
                let res = bu
                    .iter()
                    .zip(&ev.u)
                    .fold(0.0_f64, |m, (b, u)| m.max((b - ev.lambda * u).abs()));
                assert!(res <= 1e-8 * norm, "d={d} k={k} res={res}");
                assert!(ev.boundary.abs() < 1e-8 * norm);
            }
        }
    }

    #[test]
    fn eigenvector_rejects_non_roots() {
        let p = params(5, 4.0);
        assert!(matches!(
            eigenvector_from_theta(&p, PI / 2.0),
            Err(Error::NotARoot { .. })
        ));
        assert!(eigenvector_from_theta(&p, 0.0).is_err());
    }

    #[test]
    fn oracle_thetas_roundtrip() {
        let p = params(6, 3.0);
        let o = oracle_spectrum(&p, 1e-13).unwrap();
        for (&l, &t) in o.lambdas().iter().zip(o.thetas().unwrap()) {
            assert!((p.lambda_of_theta(t) - l).abs() < 1e-9);
        }
        let outside = Spectrum::from_oracle(vec![1.0, -5.0], 2.0);
        assert!(outside.thetas().is_none());
    }
}
