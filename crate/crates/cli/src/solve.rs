//! Spectrum and character table for one parameter point, with oracle fallback.

use crate::report::Method;
use tabalg::{
    character_table, find_spectrum, oracle_spectrum, CharacterMethod, CharacterTable, Error,
    Result, Spectrum, TableAlgebraParams,
};

pub struct Solved {
    pub spectrum: Spectrum,
    pub table: CharacterTable,
    pub method: Method,
    /// Set when the closed-form route failed to isolate the roots and the
    /// oracle spectrum was used in its place.
    pub fallback: Option<Error>,
}

/// For `d ≥ 5`: sine-equation roots and closed-form characters. Otherwise, or
/// on a root-count mismatch: Sturm eigenvalues and the three-term recursion.
pub fn solve(p: &TableAlgebraParams, grid_density: usize, tol: f64) -> Result<Solved> {
    let mut fallback = None;
    if p.d() >= 5 {
        match find_spectrum(p, grid_density, tol) {
            Ok(spectrum) => {
                let table = character_table(p, &spectrum, CharacterMethod::ClosedForm)?;
                return Ok(Solved {
                    spectrum,
                    table,
                    method: Method::ClosedForm,
                    fallback: None,
                });
            }
            Err(e @ Error::RootCountMismatch { .. }) => fallback = Some(e),
            Err(e) => return Err(e),
        }
    }
    let spectrum = oracle_spectrum(p, tol)?;
    let table = character_table(p, &spectrum, CharacterMethod::ThreeTermRecursion)?;
    Ok(Solved {
        spectrum,
        table,
        method: Method::Oracle,
        fallback,
    })
}
