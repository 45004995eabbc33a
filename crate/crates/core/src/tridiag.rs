//! General tridiagonal matrices.
//!
//! [`Tridiagonal`] stores the three bands of an `n × n` matrix. The
//! determinant and characteristic polynomial come from the usual three-term
//! minor recursion. Matrices whose off-diagonal products are all positive are
//! similar (by a positive diagonal scaling) to a symmetric tridiagonal matrix,
//! and [`Tridiagonal::eigenvalues_oracle`] computes their spectrum by Sturm
//! sequence bisection on that symmetric form. The bisection solver shares no
//! code with the trigonometric root finder in [`crate::spectral`] and serves as
//! its reference.

use crate::error::{Error, Result};

/// Default absolute bracket width for [`Tridiagonal::eigenvalues_oracle`].
pub const DEFAULT_TOL: f64 = 1e-12;

const MAX_BISECTIONS: usize = 200;
const RESCALE_ABOVE: f64 = 1e150;
const RESCALE_BELOW: f64 = 1e-150;

#[derive(Debug, Clone, PartialEq)]
pub struct Tridiagonal {
    diag: Vec<f64>,
    /// `sub[i]` is entry `(i+1, i)`.
    sub: Vec<f64>,
    /// `sup[i]` is entry `(i, i+1)`.
    sup: Vec<f64>,
}

impl Tridiagonal {
    pub fn new(diag: Vec<f64>, sub: Vec<f64>, sup: Vec<f64>) -> Result<Self> {
        let n = diag.len();
        if n == 0 || sub.len() + 1 != n || sup.len() + 1 != n {
            return Err(Error::BandLength {
                diag: n,
                sub: sub.len(),
                sup: sup.len(),
            });
        }
        Ok(Self { diag, sub, sup })
    }

    /// Constant-band matrix: `diag` on the diagonal, `sub` below, `sup` above.
    pub fn toeplitz(n: usize, diag: f64, sub: f64, sup: f64) -> Result<Self> {
        Self::new(
            vec![diag; n],
            vec![sub; n.saturating_sub(1)],
            vec![sup; n.saturating_sub(1)],
        )
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn sub(&self) -> &[f64] {
        &self.sub
    }

    pub fn sup(&self) -> &[f64] {
        &self.sup
    }

    /// Entry `(row, col)`; zero outside the three bands.
    pub fn get(&self, row: usize, col: usize) -> f64 {
        if row == col {
            self.diag[row]
        } else if row == col + 1 {
            self.sub[col]
        } else if col == row + 1 {
            self.sup[row]
        } else {
            0.0
        }
    }

    pub fn transpose(&self) -> Self {
        Self {
            diag: self.diag.clone(),
            sub: self.sup.clone(),
            sup: self.sub.clone(),
        }
    }

    /// Matrix-vector product `M·v`.
    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.n(), "vector length must match matrix order");
        let n = self.n();
        (0..n)
            .map(|i| {
                let mut acc = self.diag[i] * v[i];
                if i > 0 {
                    acc += self.sub[i - 1] * v[i - 1];
                }
                if i + 1 < n {
                    acc += self.sup[i] * v[i + 1];
                }
                acc
            })
            .collect()
    }

    /// Determinant by the three-term minor recursion
    /// `|H_i| = h_{i,i}|H_{i−1}| − h_{i−1,i} h_{i,i−1} |H_{i−2}|`.
    pub fn det_recursive(&self) -> f64 {
        let h = &self.diag;
        match self.n() {
            1 => h[0],
            2 => h[0] * h[1] - self.sup[0] * self.sub[0],
            n => {
                let mut prev = h[0];
                let mut cur = h[0] * h[1] - self.sup[0] * self.sub[0];
                for i in 2..n {
                    let next = h[i] * cur - self.sup[i - 1] * self.sub[i - 1] * prev;
                    prev = cur;
                    cur = next;
                }
                cur
            }
        }
    }

    /// Leading principal minors `det(xI − H_i)` for `i = 0..=n`, with
    /// `det(xI − H_0) = 1`. The last entry is the characteristic polynomial.
    pub fn leading_minors(&self, x: f64) -> Vec<f64> {
        let n = self.n();
        let mut minors = Vec::with_capacity(n + 1);
        minors.push(1.0);
        minors.push(x - self.diag[0]);
        for i in 1..n {
            let next =
                (x - self.diag[i]) * minors[i] - self.sup[i - 1] * self.sub[i - 1] * minors[i - 1];
            minors.push(next);
        }
        minors
    }

    /// `det(xI − M)`.
    pub fn charpoly_eval(&self, x: f64) -> f64 {
        let d = &self.diag;
        match self.n() {
            1 => x - d[0],
            2 => (x - d[0]) * (x - d[1]) - self.sup[0] * self.sub[0],
            _ => *self.leading_minors(x).last().expect("n >= 1"),
        }
    }

    /// Similar symmetric tridiagonal matrix with `off[i] = √(sub[i]·sup[i])`.
    pub fn symmetrize(&self) -> Result<SymmetrizedTridiagonal> {
        let off = self
            .sub
            .iter()
            .zip(&self.sup)
            .enumerate()
            .map(|(index, (&b, &c))| {
                let product = b * c;
                if product > 0.0 {
                    Ok(product.sqrt())
                } else {
                    Err(Error::NonSimilarizable { index, product })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SymmetrizedTridiagonal {
            diag: self.diag.clone(),
            off,
        })
    }

    /// All eigenvalues, ascending, each bracketed to width `≤ tol` by Sturm
    /// bisection on the symmetrized matrix.
    pub fn eigenvalues_oracle(&self, tol: f64) -> Result<Vec<f64>> {
        self.symmetrize()?.eigenvalues(tol)
    }
}

/// Symmetric tridiagonal matrix produced by [`Tridiagonal::symmetrize`].
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetrizedTridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>,
}

impl SymmetrizedTridiagonal {
    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn off(&self) -> &[f64] {
        &self.off
    }

    pub fn to_tridiagonal(&self) -> Tridiagonal {
        Tridiagonal {
            diag: self.diag.clone(),
            sub: self.off.clone(),
            sup: self.off.clone(),
        }
    }

    /// Union of the Gershgorin discs as a closed interval `(lo, hi)`.
    pub fn gershgorin_bounds(&self) -> (f64, f64) {
        let n = self.n();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// Number of eigenvalues strictly less than `x`.
    ///
    /// Counts sign changes in the leading minors of `M − xI`. A zero minor
    /// inherits the sign of its predecessor. Consecutive minors are rescaled
    /// together whenever they leave `[1e-150, 1e150]`.
    pub fn sturm_count(&self, x: f64) -> usize {
        let mut count = 0;
        let mut prev = 1.0_f64;
        let mut cur = self.diag[0] - x;
        let mut prev_sign = true;
        let mut update = |value: f64, prev_sign: &mut bool| {
            if value != 0.0 {
                let positive = value > 0.0;
                if positive != *prev_sign {
                    count += 1;
                }
                *prev_sign = positive;
            }
        };
        update(cur, &mut prev_sign);
        for i in 1..self.n() {
            let e = self.off[i - 1];
            let next = (self.diag[i] - x) * cur - e * e * prev;
            prev = cur;
            cur = next;
            let scale = cur.abs().max(prev.abs());
            if scale > RESCALE_ABOVE {
                cur *= RESCALE_BELOW;
                prev *= RESCALE_BELOW;
            } else if scale > 0.0 && scale < RESCALE_BELOW {
                cur *= RESCALE_ABOVE;
                prev *= RESCALE_ABOVE;
            }
            update(cur, &mut prev_sign);
        }
        count
    }

    /// All eigenvalues in ascending order. Repeated eigenvalues appear once
    /// per multiplicity.
    pub fn eigenvalues(&self, tol: f64) -> Result<Vec<f64>> {
        if !(tol > 0.0) {
            return Err(Error::InvalidParams(format!("tol = {tol} must be > 0")));
        }
        let d = &self.diag;
        match self.n() {
            1 => Ok(vec![d[0]]),
            2 => {
                let mean = 0.5 * (d[0] + d[1]);
                let radius = (0.5 * (d[0] - d[1])).hypot(self.off[0]);
                Ok(vec![mean - radius, mean + radius])
            }
            n => {
                let (lo, hi) = self.gershgorin_bounds();
                let pad = f64::EPSILON * lo.abs().max(hi.abs()).max(1.0);
                (0..n)
                    .map(|rank| self.bisect(rank, lo - pad, hi + pad, tol))
                    .collect()
            }
        }
    }

    /// Locates the eigenvalue of ascending rank `rank` inside `[lo, hi]`.
    fn bisect(&self, rank: usize, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
        for _ in 0..MAX_BISECTIONS {
            if hi - lo <= tol {
                return Ok(0.5 * (lo + hi));
            }
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.sturm_count(mid) > rank {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        if hi - lo <= tol {
            Ok(0.5 * (lo + hi))
        } else {
            Err(Error::ToleranceNotMet {
                tol,
                width: hi - lo,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(m: &Tridiagonal) -> Vec<Vec<f64>> {
        let n = m.n();
        (0..n)
            .map(|i| (0..n).map(|j| m.get(i, j)).collect())
            .collect()
    }

    // Gaussian elimination with partial pivoting, independent of the minor recursion.
    fn dense_det(mut a: Vec<Vec<f64>>) -> f64 {
        let n = a.len();
        let mut det = 1.0;
        for c in 0..n {
            let p = (c..n)
                .max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs()))
                .unwrap();
            if a[p][c] == 0.0 {
                return 0.0;
            }
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            det *= a[c][c];
            for r in c + 1..n {
                let f = a[r][c] / a[c][c];
                for k in c..n {
                    a[r][k] -= f * a[c][k];
                }
            }
        }
        det
    }

    #[test]
    fn rejects_bad_bands() {
        assert!(matches!(
            Tridiagonal::new(vec![1.0, 2.0], vec![], vec![1.0]),
            Err(Error::BandLength { .. })
        ));
        assert!(Tridiagonal::new(vec![], vec![], vec![]).is_err());
    }

    #[test]
    fn det_small_cases() {
        let one = Tridiagonal::new(vec![2.0], vec![], vec![]).unwrap();
        assert_eq!(one.det_recursive(), 2.0);

        let two = Tridiagonal::new(vec![0.0, 0.0], vec![1.0], vec![1.0]).unwrap();
        assert_eq!(two.det_recursive(), -1.0);

        let three = Tridiagonal::new(vec![0.0; 3], vec![1.0, 1.0], vec![2.0, 2.0]).unwrap();
        assert_eq!(dense_det(dense(&three)), 0.0);
        assert_eq!(three.det_recursive(), 0.0);
    }

    #[test]
    fn det_matches_dense_elimination() {
        let m = Tridiagonal::new(
            vec![1.5, -2.0, 0.25, 3.0, 1.0],
            vec![0.5, 2.0, -1.0, 0.75],
            vec![1.0, -0.5, 2.5, 1.25],
        )
        .unwrap();
        let reference = dense_det(dense(&m));
        assert!((m.det_recursive() - reference).abs() < 1e-12 * reference.abs().max(1.0));
    }

    #[test]
    fn charpoly_examples() {
        // A_1 with a = 3: single root at 3.
        let a1 = Tridiagonal::toeplitz(1, 3.0, 4.0, 1.0).unwrap();
        assert_eq!(a1.charpoly_eval(3.0), 0.0);
        // A_2 with a = 0, b = 1: x² − 1.
        let a2 = Tridiagonal::toeplitz(2, 0.0, 1.0, 1.0).unwrap();
        assert_eq!(a2.charpoly_eval(2.0), 3.0);
    }

    #[test]
    fn leading_minors_end_in_charpoly() {
        let m = Tridiagonal::new(vec![1.0, 2.0, 3.0], vec![1.0, 1.0], vec![2.0, 0.5]).unwrap();
        let minors = m.leading_minors(0.7);
        assert_eq!(minors.len(), 4);
        assert_eq!(minors[0], 1.0);
        assert!((minors[1] - (0.7 - 1.0)).abs() < 1e-15);
        assert_eq!(*minors.last().unwrap(), m.charpoly_eval(0.7));
    }

    #[test]
    fn symmetrize_examples() {
        let m = Tridiagonal::new(vec![0.0, 0.0], vec![2.0], vec![1.0]).unwrap();
        assert_eq!(m.symmetrize().unwrap().off(), &[2.0_f64.sqrt()]);

        let sym = Tridiagonal::new(vec![1.0, 2.0, 3.0], vec![0.5, 4.0], vec![0.5, 4.0]).unwrap();
        assert_eq!(sym.symmetrize().unwrap().off(), sym.sub());
    }

    #[test]
    fn symmetrize_rejects_nonpositive_products() {
        let m = Tridiagonal::new(vec![0.0; 3], vec![1.0, -1.0], vec![1.0, 1.0]).unwrap();
        assert_eq!(
            m.symmetrize(),
            Err(Error::NonSimilarizable {
                index: 1,
                product: -1.0
            })
        );
        let z = Tridiagonal::new(vec![0.0; 2], vec![0.0], vec![1.0]).unwrap();
        assert!(matches!(
            z.eigenvalues_oracle(1e-12),
            Err(Error::NonSimilarizable { .. })
        ));
    }

    #[test]
    fn one_by_one_eigenvalue() {
        let m = Tridiagonal::new(vec![5.0], vec![], vec![]).unwrap();
        assert_eq!(m.eigenvalues_oracle(DEFAULT_TOL).unwrap(), vec![5.0]);
    }

    #[test]
    fn two_by_two_closed_form() {
        let m = Tridiagonal::new(vec![1.0, 1.0], vec![4.0], vec![1.0]).unwrap();
        let ev = m.eigenvalues_oracle(DEFAULT_TOL).unwrap();
        assert!((ev[0] + 1.0).abs() < 1e-15 && (ev[1] - 3.0).abs() < 1e-15);
    }

    #[test]
    fn path_graph_spectrum() {
        // Adjacency matrix of the path on n vertices: 2cos(jπ/(n+1)).
        let n = 9;
        let m = Tridiagonal::toeplitz(n, 0.0, 1.0, 1.0).unwrap();
        let ev = m.eigenvalues_oracle(DEFAULT_TOL).unwrap();
        for (r, value) in ev.iter().enumerate() {
            let j = (n - r) as f64;
            let expected = 2.0 * (j * std::f64::consts::PI / (n as f64 + 1.0)).cos();
            assert!((value - expected).abs() < 1e-11, "{value} vs {expected}");
        }
    }

    #[test]
    fn repeated_eigenvalues_are_kept() {
        // Block diagonal in all but name: tiny coupling keeps it unreduced.
        let m = Tridiagonal::new(
            vec![1.0, 1.0, 1.0],
            vec![1e-100, 1e-100],
            vec![1e-100, 1e-100],
        )
        .unwrap();
        let ev = m.eigenvalues_oracle(1e-12).unwrap();
        assert_eq!(ev.len(), 3);
        assert!(ev.iter().all(|v| (v - 1.0).abs() < 1e-12));
    }

    #[test]
    fn sturm_count_survives_large_minors() {
        let n = 400;
        let m = Tridiagonal::toeplitz(n, 0.0, 1e3, 1e3)
            .unwrap()
            .symmetrize()
            .unwrap();
        // Minors of magnitude ~1e1200 would overflow without rescaling.
        assert_eq!(m.sturm_count(-3e3), 0);
        assert_eq!(m.sturm_count(3e3), n);
        assert_eq!(m.sturm_count(0.0), n / 2);
    }

    #[test]
    fn sturm_count_at_exact_eigenvalue_is_strict() {
        let m = Tridiagonal::new(vec![0.0, 0.0], vec![1.0], vec![1.0]).unwrap();
        let s = m.symmetrize().unwrap();
        assert_eq!(s.sturm_count(1.0), 1);
        assert_eq!(s.sturm_count(-1.0), 0);
    }

    #[test]
    fn unreachable_tolerance_is_reported() {
        let m = Tridiagonal::toeplitz(4, 1e6, 1.0, 1.0).unwrap();
        assert!(matches!(
            m.eigenvalues_oracle(1e-20),
            Err(Error::ToleranceNotMet { .. })
        ));
        assert!(m.eigenvalues_oracle(0.0).is_err());
    }
}
