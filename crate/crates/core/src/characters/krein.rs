//! Multiplicities and Krein parameters from a character table.
//!
//! Both use the standard formulas for commutative symmetric schemes:
//!
//! ```text
//! mⱼ      = n / Σᵢ pᵢ(j)² / kᵢ
//! q_{ij}^w = (mᵢ mⱼ / n) Σ_l p_l(i) p_l(j) p_l(w) / k_l²
//! ```

use super::CharacterTable;
use crate::error::{Error, Result};

pub fn multiplicities(ct: &CharacterTable) -> Result<Vec<f64>> {
    let n = ct.order_n();
    (0..=ct.d())
        .map(|j| {
            let denom: f64 = ct
                .rows()
                .iter()
                .zip(ct.valencies())
                .map(|(row, &k)| row[j] * row[j] / k)
                .sum();
            if denom > 0.0 && denom.is_finite() {
                Ok(n / denom)
            } else {
                Err(Error::DegenerateColumn { column: j, denom })
            }
        })
        .collect()
}

/// The `(d+1)³` Krein parameters `q[i][j][w]`, stored flat.
#[derive(Debug, Clone, PartialEq)]
pub struct KreinTensor {
    dim: usize,
    q: Vec<f64>,
    multiplicities: Vec<f64>,
}

impl KreinTensor {
    /// `d + 1`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, w: usize) -> f64 {
        self.q[(i * self.dim + j) * self.dim + w]
    }

    pub fn multiplicities(&self) -> &[f64] {
        &self.multiplicities
    }

    /// `q[i][j][w]` as nested vectors.
    pub fn nested(&self) -> Vec<Vec<Vec<f64>>> {
        self.q
            .chunks(self.dim * self.dim)
            .map(|plane| plane.chunks(self.dim).map(<[f64]>::to_vec).collect())
            .collect()
    }

    /// Smallest entry. The Krein condition asks for this to be `≥ 0`; it
    /// holds for association schemes but not for every table algebra.
    pub fn min_entry(&self) -> f64 {
        self.q.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// `max |q[i][j][w] − q[j][i][w]|`.
    pub fn max_asymmetry(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in 0..i {
                for w in 0..n {
                    worst = worst.max((self.get(i, j, w) - self.get(j, i, w)).abs());
                }
            }
        }
        worst
    }
}

pub fn krein_tensor(ct: &CharacterTable, m: &[f64]) -> Result<KreinTensor> {
    let dim = ct.d() + 1;
    if m.len() != dim {
        return Err(Error::SpectrumLength {
            expected: dim,
            found: m.len(),
        });
    }
    let n = ct.order_n();
    let p = ct.rows();
    let inv_k2: Vec<f64> = ct.valencies().iter().map(|k| 1.0 / (k * k)).collect();
    let mut q = vec![0.0; dim * dim * dim];
    for i in 0..dim {
        for j in 0..=i {
            let weight = m[i] * m[j] / n;
            for w in 0..dim {
                let sum: f64 = (0..dim)
                    .map(|l| p[l][i] * p[l][j] * p[l][w] * inv_k2[l])
                    .sum();
                let value = weight * sum;
                q[(i * dim + j) * dim + w] = value;
                q[(j * dim + i) * dim + w] = value;
            }
        }
    }
    Ok(KreinTensor {
        dim,
        q,
        multiplicities: m.to_vec(),
    })
}
