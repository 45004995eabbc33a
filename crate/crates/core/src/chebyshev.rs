//! Chebyshev polynomials of the first and second kind.
//!
//! Inside `[-1, 1]` both kinds are evaluated through their trigonometric
//! forms, `Tₙ(cos θ) = cos nθ` and `Uₙ(cos θ) = sin((n+1)θ)/sin θ`. Outside
//! that interval, and wherever `|sin θ|` drops below `1e-6`, the three-term
//! recurrence is used instead.

use crate::error::{Error, Result};

/// Below this `|sin θ|` the trigonometric form of `Uₙ` loses accuracy.
const TRIG_SIN_FLOOR: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChebKind {
    First,
    Second,
}

impl ChebKind {
    pub fn eval(self, n: u32, x: f64) -> f64 {
        match self {
            ChebKind::First => cheb_t(n, x),
            ChebKind::Second => cheb_u(n, x),
        }
    }
}

/// `Uₙ(x)`, the Chebyshev polynomial of the second kind.
pub fn cheb_u(n: u32, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    if x.abs() <= 1.0 {
        let theta = x.acos();
        let s = theta.sin();
        if s.abs() >= TRIG_SIN_FLOOR {
            return ((n as f64 + 1.0) * theta).sin() / s;
        }
    }
    cheb_u_recurrence(n, x)
}

/// `Uₙ` extended to negative degree by `U₋₁ = 0` and `U₋ₙ₋₂ = −Uₙ`.
pub fn cheb_u_signed(n: i64, x: f64) -> f64 {
    match n {
        -1 => 0.0,
        n if n >= 0 => cheb_u(n as u32, x),
        n => -cheb_u((-n - 2) as u32, x),
    }
}

/// `Tₙ(x)`, the Chebyshev polynomial of the first kind.
pub fn cheb_t(n: u32, x: f64) -> f64 {
    match n {
        0 => 1.0,
        1 => x,
        _ if x.abs() <= 1.0 => (n as f64 * x.acos()).cos(),
        _ => cheb_t_recurrence(n, x),
    }
}

/// `Uₙ` by `U₀ = 1, U₁ = 2x, Uₙ = 2x·Uₙ₋₁ − Uₙ₋₂`.
pub fn cheb_u_recurrence(n: u32, x: f64) -> f64 {
    three_term(n, 1.0, 2.0 * x, x)
}

/// `Tₙ` by `T₀ = 1, T₁ = x, Tₙ = 2x·Tₙ₋₁ − Tₙ₋₂`.
pub fn cheb_t_recurrence(n: u32, x: f64) -> f64 {
    three_term(n, 1.0, x, x)
}

fn three_term(n: u32, p0: f64, p1: f64, x: f64) -> f64 {
    if n == 0 {
        return p0;
    }
    let (mut prev, mut cur) = (p0, p1);
    for _ in 1..n {
        let next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Characteristic polynomial of the `n × n` constant-band matrix with `a` on
/// the diagonal, `b` on the subdiagonal and `1` on the superdiagonal:
/// `(√b)ⁿ·Uₙ((x − a)/(2√b))`.
///
/// Only the real branch `b > 0` is supported.
pub fn charpoly_toeplitz_tridiag(a: f64, b: f64, n: u32, x: f64) -> Result<f64> {
    if !(b > 0.0) {
        return Err(Error::NonPositiveB(b));
    }
    let root = b.sqrt();
    Ok(root.powi(n as i32) * cheb_u(n, (x - a) / (2.0 * root)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u_examples() {
        assert_eq!(cheb_u(0, 17.0), 1.0);
        assert_eq!(cheb_u(2, 1.0), 3.0);
        // U₃(x) = 8x³ − 4x at x = 0.5 is −1.
        assert!((cheb_u(3, 0.5) + 1.0).abs() < 1e-15);
    }

    #[test]
    fn t_examples() {
        assert_eq!(cheb_t(0, -4.0), 1.0);
        assert_eq!(cheb_t(1, 0.3), 0.3);
        // T₄(x) = 8x⁴ − 8x² + 1 at x = 0.5 is −0.5.
        assert!((cheb_t(4, 0.5) + 0.5).abs() < 1e-15);
    }

    #[test]
    fn u_at_endpoints_is_exact() {
        for n in 0..40u32 {
            let np1 = n as f64 + 1.0;
            assert_eq!(cheb_u(n, 1.0), np1);
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert_eq!(cheb_u(n, -1.0), sign * np1);
        }
    }

    #[test]
    fn outside_unit_interval_uses_recurrence() {
        // U₂(x) = 4x² − 1, T₂(x) = 2x² − 1.
        assert_eq!(cheb_u(2, 3.0), 35.0);
        assert_eq!(cheb_t(2, -3.0), 17.0);
    }

    #[test]
    fn negative_degree_extension() {
        assert_eq!(cheb_u_signed(-1, 0.3), 0.0);
        assert_eq!(cheb_u_signed(-2, 0.3), -1.0);
        assert!((cheb_u_signed(-3, 0.3) + 0.6).abs() < 1e-15);
        assert_eq!(cheb_u_signed(2, 2.0), cheb_u(2, 2.0));
    }

    #[test]
    fn kind_dispatch() {
        assert_eq!(ChebKind::First.eval(3, 0.2), cheb_t(3, 0.2));
        assert_eq!(ChebKind::Second.eval(3, 0.2), cheb_u(3, 0.2));
    }

    #[test]
    fn toeplitz_charpoly_examples() {
        assert!(charpoly_toeplitz_tridiag(3.0, 4.0, 1, 3.0).unwrap().abs() < 1e-14);
        assert!((charpoly_toeplitz_tridiag(0.0, 1.0, 2, 2.0).unwrap() - 3.0).abs() < 1e-14);
        assert_eq!(
            charpoly_toeplitz_tridiag(0.0, 0.0, 2, 2.0),
            Err(Error::NonPositiveB(0.0))
        );
        assert!(charpoly_toeplitz_tridiag(0.0, -1.0, 2, 2.0).is_err());
    }

    #[test]
    fn toeplitz_charpoly_k4_three_by_three() {
        // a = (k−2)/2 = 1, b = (k+2)/4 = 1.5, n = 3, x = 1.
        // By cofactor expansion: (x−a)³ − 2b(x−a) = 0 at x = a.
        let value = charpoly_toeplitz_tridiag(1.0, 1.5, 3, 1.0).unwrap();
        let m = crate::Tridiagonal::toeplitz(3, 1.0, 1.5, 1.0).unwrap();
        assert!(value.abs() < 1e-12);
        assert!((value - m.charpoly_eval(1.0)).abs() < 1e-12);
        // Off the root: (2−1)³ − 3·(2−1) = −2.
        let off = charpoly_toeplitz_tridiag(1.0, 1.5, 3, 2.0).unwrap();
        assert!((off + 2.0).abs() < 1e-12);
    }
}
