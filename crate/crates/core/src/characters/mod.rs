//! Character tables.
//!
//! Row `i` of a character table holds `pᵢ(j)` for every eigenvalue column
//! `j`. Three independent constructions are provided for the homogeneous
//! case:
//!
//! * [`CharacterMethod::ClosedForm`] evaluates the Chebyshev-`U` formula
//!   (only for `d ≥ 5`, where `α` is forced).
//! * [`CharacterMethod::NuRecursion`] builds the polynomials `νᵢ` with
//!   `xᵢ = νᵢ(x₁)` and evaluates them at each eigenvalue.
//! * [`CharacterMethod::ThreeTermRecursion`] applies each character to
//!   `x₁xᵢ = b_{i−1}x_{i−1} + aᵢxᵢ + c_{i+1}x_{i+1}` using the bands of `B₁`
//!   directly. It uses nothing but the structure constants, so it is the
//!   reference the other two are checked against, and it also covers
//!   non-homogeneous matrices such as the even polygon.

mod krein;
mod ngon;

pub use krein::{krein_tensor, multiplicities, KreinTensor};
pub use ngon::{even_gon_b1, ngon_even, ngon_odd, EvenGon, OddGon};

use crate::chebyshev::cheb_u_signed;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::spectral::{build_b1, Spectrum, TableAlgebraParams};
use crate::tridiag::Tridiagonal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharacterMethod {
    ClosedForm,
    NuRecursion,
    ThreeTermRecursion,
}

/// `P[i][j] = pᵢ(j)`, with the valency column at `j = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterTable {
    p: Vec<Vec<f64>>,
    valencies: Vec<f64>,
    order_n: f64,
}

impl CharacterTable {
    /// Three-term recursion on arbitrary bands. `lambdas[0]` must be the
    /// valency eigenvalue; the valencies are read off its column.
    pub fn from_recurrence(b1: &Tridiagonal, lambdas: &[f64]) -> Result<Self> {
        let p = recurrence_rows(b1, lambdas)?;
        let valencies: Vec<f64> = p.iter().map(|row| row[0]).collect();
        Ok(Self::new(p, valencies))
    }

    fn new(p: Vec<Vec<f64>>, valencies: Vec<f64>) -> Self {
        let order_n = valencies.iter().sum();
        Self {
            p,
            valencies,
            order_n,
        }
    }

    /// `d`, so the table is `(d+1) × (d+1)`.
    pub fn d(&self) -> usize {
        self.p.len() - 1
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.p[i][j]
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.p
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        self.p.iter().map(|row| row[j]).collect()
    }

    pub fn valencies(&self) -> &[f64] {
        &self.valencies
    }

    pub fn order_n(&self) -> f64 {
        self.order_n
    }

    /// Largest entrywise difference to another table of the same size.
    pub fn max_abs_diff(&self, other: &CharacterTable) -> f64 {
        self.p
            .iter()
            .flatten()
            .zip(other.p.iter().flatten())
            .fold(0.0, |m, (a, b)| f64::max(m, (a - b).abs()))
    }
}

fn recurrence_rows(b1: &Tridiagonal, lambdas: &[f64]) -> Result<Vec<Vec<f64>>> {
    let n = b1.n();
    if lambdas.len() != n {
        return Err(Error::SpectrumLength {
            expected: n,
            found: lambdas.len(),
        });
    }
    if let Some(index) = b1.sup().iter().position(|&c| c == 0.0) {
        return Err(Error::InvalidParams(format!(
            "superdiagonal entry {index} is zero; the recursion cannot advance"
        )));
    }
    let (a, b, c) = (b1.diag(), b1.sub(), b1.sup());
    let mut p = Vec::with_capacity(n);
    p.push(vec![1.0; n]);
    if n > 1 {
        // p₁(j) = (λⱼ − a₀)/c₁, which is λⱼ for a₀ = 0, c₁ = 1.
        p.push(lambdas.iter().map(|&l| (l - a[0]) / c[0]).collect());
    }
    for i in 1..n - 1 {
        let row: Vec<f64> = lambdas
            .iter()
            .enumerate()
            .map(|(j, &l)| ((l - a[i]) * p[i][j] - b[i - 1] * p[i - 1][j]) / c[i])
            .collect();
        p.push(row);
    }
    Ok(p)
}

/// The polynomials `ν₀ = 1, ν₁ = x, ν₂ = (x² − αx − k)/(k−α−1)` and
/// `νᵢ = [(x − 2(α+1) + k)ν_{i−1} − (k−α−1)ν_{i−2}]/(k−α−1)` for `3 ≤ i ≤ d`.
pub fn nu_polys(p: &TableAlgebraParams) -> Result<Vec<Polynomial>> {
    let off = p.off_band();
    if !(off > 0.0) {
        return Err(Error::InvalidParams(format!(
            "k - alpha - 1 = {off} must be > 0"
        )));
    }
    let (k, alpha) = (p.k(), p.alpha());
    let mut nu = Vec::with_capacity(p.d() + 1);
    nu.push(Polynomial::constant(1.0));
    nu.push(Polynomial::new(vec![0.0, 1.0]));
    nu.push(Polynomial::new(vec![-k, -alpha, 1.0]).scale(1.0 / off));
    let shift = Polynomial::linear(2.0 * (alpha + 1.0) - k);
    for i in 3..=p.d() {
        let next = &(&shift * &nu[i - 1]) - &nu[i - 2].scale(off);
        nu.push(next.scale(1.0 / off));
    }
    Ok(nu)
}

/// `pᵢ(λ)` for `2 ≤ i ≤ d` by the Chebyshev closed form.
///
/// For `3 ≤ i ≤ d` the recursion for `νᵢ` reads `νᵢ = 2y·ν_{i−1} − ν_{i−2}`
/// with `y = (2λ − k + 2)/(k + 2)`, which is `cos θ` for `λ = (k+2)/2·cos θ + (k−2)/2`.
/// Matching `ν₂` and `ν₃` then gives
///
/// ```text
/// pᵢ(λ) = ν₂(λ)·U_{i−2}(y) − λ·U_{i−3}(y),   ν₂(λ) = 4(λ² − (3k−6)/4·λ − k)/(k+2),
/// ```
///
/// with `U₋₁ = 0`. At `k = 2` this is `(λ² − 2)U_{i−2}(λ/2) − λU_{i−3}(λ/2) = 2Tᵢ(λ/2)`.
pub fn character_closed_form(p: &TableAlgebraParams, i: usize, lambda: f64) -> Result<f64> {
    if p.d() < 5 {
        return Err(Error::InvalidParams(format!(
            "closed-form characters need d >= 5, got d = {}",
            p.d()
        )));
    }
    if !(2..=p.d()).contains(&i) {
        return Err(Error::InvalidParams(format!(
            "closed form covers 2 <= i <= d = {}, got i = {i}",
            p.d()
        )));
    }
    let k = p.k();
    let y = (2.0 * lambda - k + 2.0) / (k + 2.0);
    let nu2 = 4.0 * (lambda * lambda - (3.0 * k - 6.0) / 4.0 * lambda - k) / (k + 2.0);
    let i = i as i64;
    Ok(nu2 * cheb_u_signed(i - 2, y) - lambda * cheb_u_signed(i - 3, y))
}

/// Character table of the homogeneous algebra with parameters `p`, whose
/// columns follow the order of `s` (descending eigenvalues).
pub fn character_table(
    p: &TableAlgebraParams,
    s: &Spectrum,
    method: CharacterMethod,
) -> Result<CharacterTable> {
    let n = p.d() + 1;
    let lambdas = s.lambdas();
    if lambdas.len() != n {
        return Err(Error::SpectrumLength {
            expected: n,
            found: lambdas.len(),
        });
    }
    let rows = match method {
        CharacterMethod::ThreeTermRecursion => recurrence_rows(&build_b1(p), lambdas)?,
        CharacterMethod::NuRecursion => nu_polys(p)?
            .iter()
            .map(|nu| lambdas.iter().map(|&l| nu.eval(l)).collect())
            .collect(),
        CharacterMethod::ClosedForm => {
            let mut rows = vec![vec![1.0; n], lambdas.to_vec()];
            for i in 2..n {
                rows.push(
                    lambdas
                        .iter()
                        .map(|&l| character_closed_form(p, i, l))
                        .collect::<Result<_>>()?,
                );
            }
            rows
        }
    };
    let mut valencies = vec![p.k(); n];
    valencies[0] = 1.0;
    Ok(CharacterTable::new(rows, valencies))
}
