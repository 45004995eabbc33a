//! Cross-validation checks behind the `verify` command.

use crate::report::{Check, Method, VerifyReport};
use crate::solve::Solved;
use tabalg::{
    build_b1, character_table, eigenvector_from_theta, krein_tensor, multiplicities,
    CharacterMethod, CharacterTable, Result, TableAlgebraParams, Tridiagonal,
};

const ORACLE_AGREEMENT: f64 = 1e-8;
const METHOD_AGREEMENT: f64 = 1e-7;
const EIGEN_RESIDUAL: f64 = 1e-8;
const ORTHOGONALITY: f64 = 1e-6;
const MULTIPLICITY_SUM: f64 = 1e-9;
const KREIN_SYMMETRY: f64 = 1e-9;
const KREIN_IDENTITY: f64 = 1e-7;
const KREIN_CONDITION: f64 = 1e-9;

fn check(name: &str, residual: f64, threshold: f64, gating: bool) -> Check {
    Check {
        name: name.to_string(),
        residual,
        threshold,
        passed: residual <= threshold,
        gating,
    }
}

fn sup_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
}

/// `‖B·v − λv‖∞ / ‖v‖∞`.
fn eigen_residual(b: &Tridiagonal, v: &[f64], lambda: f64) -> f64 {
    let bv = b.mul_vec(v);
    let r = bv
        .iter()
        .zip(v)
        .fold(0.0_f64, |m, (x, y)| m.max((x - lambda * y).abs()));
    r / sup_norm(v)
}

/// Runs every check that the solved spectrum supports. Checks that need the
/// closed-form spectrum are omitted when the oracle was used instead.
pub fn verify(p: &TableAlgebraParams, solved: &Solved, oracle: &[f64]) -> Result<VerifyReport> {
    let b1 = build_b1(p);
    let spectrum = &solved.spectrum;
    let table = &solved.table;
    let closed = solved.method == Method::ClosedForm;
    let mut checks = Vec::new();

    if closed {
        let gap = spectrum
            .lambdas()
            .iter()
            .zip(oracle)
            .fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()));
        checks.push(check("oracle_agreement", gap, ORACLE_AGREEMENT, true));

        let nu = character_table(p, spectrum, CharacterMethod::NuRecursion)?;
        let three = character_table(p, spectrum, CharacterMethod::ThreeTermRecursion)?;
        let spread = table
            .max_abs_diff(&nu)
            .max(table.max_abs_diff(&three))
            .max(nu.max_abs_diff(&three));
        checks.push(check("method_agreement", spread, METHOD_AGREEMENT, true));

        let mut worst = 0.0_f64;
        for &theta in &spectrum.thetas().unwrap_or(&[])[1..] {
            let ev = eigenvector_from_theta(p, theta)?;
            worst = worst.max(eigen_residual(&b1, &ev.u, ev.lambda));
        }
        checks.push(check("eigenvector_formula", worst, EIGEN_RESIDUAL, true));
    }

    let columns = (0..=p.d()).fold(0.0_f64, |m, j| {
        m.max(eigen_residual(&b1, &table.column(j), spectrum.lambdas()[j]))
    });
    checks.push(check("character_columns", columns, EIGEN_RESIDUAL, true));

    let m = multiplicities(table)?;
    checks.push(check(
        "orthogonality",
        orthogonality(table, &m),
        ORTHOGONALITY,
        true,
    ));

    let n = table.order_n();
    let sum_gap = (m.iter().sum::<f64>() - n).abs() / n;
    checks.push(check("multiplicity_sum", sum_gap, MULTIPLICITY_SUM, true));

    let q = krein_tensor(table, &m)?;
    let scale = m.iter().fold(1.0_f64, |a, &x| a.max(x * x));
    checks.push(check(
        "krein_symmetry",
        q.max_asymmetry() / scale,
        KREIN_SYMMETRY,
        true,
    ));
    checks.push(check(
        "krein_identities",
        krein_identities(&q),
        KREIN_IDENTITY,
        true,
    ));
    checks.push(check(
        "krein_condition",
        (-q.min_entry()).max(0.0),
        KREIN_CONDITION,
        false,
    ));

    Ok(VerifyReport {
        d: p.d(),
        k: p.k(),
        alpha: p.alpha(),
        spectrum_method: solved.method,
        passed: checks.iter().all(|c| c.passed || !c.gating),
        checks,
    })
}

/// `max |Σⱼ mⱼ pᵢ(j) p_l(j) − n·kᵢ·δᵢₗ| / (n·kᵢ)`.
pub fn orthogonality(table: &CharacterTable, m: &[f64]) -> f64 {
    let n = table.order_n();
    let rows = table.rows();
    let mut worst = 0.0_f64;
    for (i, (pi, &ki)) in rows.iter().zip(table.valencies()).enumerate() {
        for (l, pl) in rows.iter().enumerate() {
            let s: f64 = (0..m.len()).map(|j| m[j] * pi[j] * pl[j]).sum();
            let target = if i == l { n * ki } else { 0.0 };
            worst = worst.max((s - target).abs() / (n * ki));
        }
    }
    worst
}

/// Largest violation of `q_{0j}^w = δ_{jw}`, `q_{ij}^0 = mᵢδᵢⱼ` and
/// `Σ_w q_{ij}^w m_w = mᵢmⱼ`, each scaled by its natural size.
pub fn krein_identities(q: &tabalg::KreinTensor) -> f64 {
    let m = q.multiplicities();
    let dim = q.dim();
    let mut worst = 0.0_f64;
    for i in 0..dim {
        for j in 0..dim {
            let unit = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((q.get(0, i, j) - unit).abs());
            worst = worst.max((q.get(i, j, 0) - m[i] * unit).abs() / m[i]);
            let s: f64 = (0..dim).map(|w| q.get(i, j, w) * m[w]).sum();
            worst = worst.max((s - m[i] * m[j]).abs() / (m[i] * m[j]));
        }
    }
    worst
}
