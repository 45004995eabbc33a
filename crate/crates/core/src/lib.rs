//! Spectra, characters, multiplicities and Krein parameters of homogeneous
//! monotonic P-polynomial table algebras.
//!
//! The first intersection matrix `B₁` of such an algebra is tridiagonal and is
//! fixed by the dimension `d` and valency `k`. For `d ≥ 5` its eigenvalues are
//! `λ = (k+2)/2·cos θ + (k−2)/2` where `θ` runs over the roots of a five-term
//! sine equation, and the remaining characters are Chebyshev-`U` expressions in
//! `λ`. This crate implements that closed-form route next to an independent
//! Sturm-bisection eigensolver and a plain three-term recursion, so every
//! result can be cross-checked.
//!
//! Module map:
//!
//! * [`tridiag`]: tridiagonal matrices, determinant recursion, Sturm bisection.
//! * [`chebyshev`]: `Tₙ`, `Uₙ` and the constant-band characteristic polynomial.
//! * [`spectral`]: parameters, `B₁`, the sine equation, spectra, eigenvectors.
//! * [`characters`]: character tables, multiplicities, Krein parameters and
//!   the odd/even polygon schemes.

pub mod characters;
pub mod chebyshev;
mod error;
pub mod poly;
pub mod spectral;
pub mod tridiag;

pub use characters::{
    character_closed_form, character_table, krein_tensor, multiplicities, ngon_even, ngon_odd,
    nu_polys, CharacterMethod, CharacterTable, EvenGon, KreinTensor, OddGon,
};
pub use chebyshev::{charpoly_toeplitz_tridiag, cheb_t, cheb_u, ChebKind};
pub use error::{Error, Result};
pub use poly::Polynomial;
pub use spectral::{
    build_b1, eigenvector_from_theta, find_spectrum, oracle_spectrum, sine_equation_residual,
    EigvecCoefficients, Spectrum, SpectrumMethod, TableAlgebraParams, DEFAULT_GRID_DENSITY,
};
pub use tridiag::{SymmetrizedTridiagonal, Tridiagonal, DEFAULT_TOL};
