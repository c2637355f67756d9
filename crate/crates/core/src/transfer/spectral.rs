use crate::error::{Error, Result};
use crate::exactpoly::{BiPoly, PolyMatrix};

/// Candidate eigenvector of a polynomial matrix, one entry per row, with
/// entries polynomial in `λ` and `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigTemplate {
    components: Vec<BiPoly>,
}

impl EigTemplate {
    pub fn new(components: Vec<BiPoly>) -> Self {
        EigTemplate { components }
    }

    pub fn components(&self) -> &[BiPoly] {
        &self.components
    }

    pub fn components_mut(&mut self) -> &mut [BiPoly] {
        &mut self.components
    }
}

/// `(M − λI) u` with every entry reduced modulo the monic polynomial `phi`.
/// All entries vanish exactly when `u` is an eigenvector of `M` over the
/// quotient ring in which `λ` is a root of `phi`.
pub fn eigen_residuals(m: &PolyMatrix, u: &EigTemplate, phi: &BiPoly) -> Result<Vec<BiPoly>> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if u.components.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "template of length {} for a {}x{} matrix",
            u.components.len(),
            m.rows(),
            m.cols()
        )));
    }
    let lambda = BiPoly::lambda();
    (0..m.rows())
        .map(|i| {
            let mut acc = BiPoly::zero();
            for (j, uj) in u.components.iter().enumerate() {
                acc = &acc + &(&BiPoly::constant(m.get(i, j).clone()) * uj);
            }
            acc = &acc - &(&lambda * &u.components[i]);
            acc.rem_monic(phi)
        })
        .collect()
}

pub fn verify_eigvector_template(m: &PolyMatrix, u: &EigTemplate, phi: &BiPoly) -> Result<bool> {
    Ok(eigen_residuals(m, u, phi)?.iter().all(BiPoly::is_zero))
}

/// Compares `det(λI − M)` with an expected polynomial.
pub fn verify_char_poly(m: &PolyMatrix, expected: &BiPoly) -> Result<bool> {
    Ok(&m.char_poly()? == expected)
}
