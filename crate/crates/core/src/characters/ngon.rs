//! The valency-2 polygon schemes.
//!
//! The `(2d+1)`-gon is the homogeneous algebra with `k = 2`, so the whole
//! closed-form pipeline applies. The `2d`-gon is not homogeneous (its last
//! valency is 1) and its characters come from the three-term recursion on its
//! own intersection matrix.

use super::{character_table, CharacterMethod, CharacterTable};
use crate::error::{Error, Result};
use crate::spectral::{
    find_spectrum, oracle_spectrum, Spectrum, TableAlgebraParams, DEFAULT_GRID_DENSITY,
};
use crate::tridiag::{Tridiagonal, DEFAULT_TOL};

/// The ordinary `(2d+1)`-gon.
#[derive(Debug, Clone, PartialEq)]
pub struct OddGon {
    pub params: TableAlgebraParams,
    pub spectrum: Spectrum,
    /// Characters from the Chebyshev closed form.
    pub table: CharacterTable,
    /// Largest deviation of the closed-form spectrum and table from the Sturm
    /// eigenvalues and the three-term recursion.
    pub pipeline_gap: f64,
}

/// The ordinary `2d`-gon.
#[derive(Debug, Clone, PartialEq)]
pub struct EvenGon {
    pub b1: Tridiagonal,
    pub spectrum: Spectrum,
    pub table: CharacterTable,
}

pub fn ngon_odd(d: usize) -> Result<OddGon> {
    if d < 5 {
        return Err(Error::InvalidParams(format!(
            "odd polygon needs d >= 5, got d = {d}"
        )));
    }
    let params = TableAlgebraParams::homogeneous(d, 2.0)?;
    let spectrum = find_spectrum(&params, DEFAULT_GRID_DENSITY, DEFAULT_TOL)?;
    let table = character_table(&params, &spectrum, CharacterMethod::ClosedForm)?;

    let oracle = oracle_spectrum(&params, DEFAULT_TOL)?;
    let reference = character_table(&params, &spectrum, CharacterMethod::ThreeTermRecursion)?;
    let spectral_gap = spectrum
        .lambdas()
        .iter()
        .zip(oracle.lambdas())
        .fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()));
    let pipeline_gap = spectral_gap.max(table.max_abs_diff(&reference));

    Ok(OddGon {
        params,
        spectrum,
        table,
        pipeline_gap,
    })
}

/// Intersection matrix of the `2d`-gon: zero diagonal,
/// `sub = [2, 1, …, 1]`, `sup = [1, …, 1, 2]`.
pub fn even_gon_b1(d: usize) -> Result<Tridiagonal> {
    if d < 3 {
        return Err(Error::InvalidParams(format!(
            "even polygon needs d >= 3, got d = {d}"
        )));
    }
    let mut sub = vec![1.0; d];
    let mut sup = vec![1.0; d];
    sub[0] = 2.0;
    sup[d - 1] = 2.0;
    Tridiagonal::new(vec![0.0; d + 1], sub, sup)
}

pub fn ngon_even(d: usize) -> Result<EvenGon> {
    let b1 = even_gon_b1(d)?;
    let spectrum = Spectrum::from_oracle(b1.eigenvalues_oracle(DEFAULT_TOL)?, 2.0);
    let table = CharacterTable::from_recurrence(&b1, spectrum.lambdas())?;
    Ok(EvenGon {
        b1,
        spectrum,
        table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn odd_d5() {
        let gon = ngon_odd(5).unwrap();
        assert!((gon.spectrum.lambdas()[1] - 1.682_507_065_662_362).abs() < 1e-9);
        assert!((gon.table.get(2, 1) - 2.0 * (4.0 * PI / 11.0).cos()).abs() < 1e-9);
        for i in 1..=5 {
            assert!((gon.table.get(i, 0) - 2.0).abs() < 1e-12);
        }
        assert_eq!(gon.table.order_n(), 11.0);
        assert!(gon.pipeline_gap < 1e-9);
        assert!(ngon_odd(4).is_err());
    }

    #[test]
    fn even_d5() {
        let gon = ngon_even(5).unwrap();
        let lambdas = gon.spectrum.lambdas();
        for (j, l) in lambdas.iter().enumerate() {
            assert!((l - 2.0 * (j as f64 * PI / 5.0).cos()).abs() < 1e-9);
        }
        assert!((lambdas[0] - 2.0).abs() < 1e-9 && (lambdas[5] + 2.0).abs() < 1e-9);
        for j in 0..=5 {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            assert!((gon.table.get(5, j) - sign).abs() < 1e-9);
        }
        assert!((gon.table.get(2, 1) - 0.618_033_988_7).abs() < 1e-9);
        let val = gon.table.valencies();
        assert!((val[5] - 1.0).abs() < 1e-9 && (val[1] - 2.0).abs() < 1e-9);
        assert!((gon.table.order_n() - 10.0).abs() < 1e-9);
    }

    #[test]
    fn even_minimum_dimension() {
        assert!(ngon_even(2).is_err());
        let gon = ngon_even(3).unwrap();
        assert_eq!(gon.b1.sub(), &[2.0, 1.0, 1.0]);
        assert_eq!(gon.b1.sup(), &[1.0, 1.0, 2.0]);
    }
}
