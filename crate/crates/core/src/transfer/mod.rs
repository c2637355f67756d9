//! Transfer-matrix computation of genus polynomials.
//!
//! The matrix is derived from the family itself by exhaustive extension of
//! one representative embedding per boundary type; nothing is tabulated.

mod derive;
mod extend;
mod lump;
mod spectral;

use std::fmt;
use std::str::FromStr;

pub use derive::{
    check_representative_independence, derive_transfer_matrix, derive_transfer_matrix_with,
    stratified_bruteforce, DeriveOptions, Derivation, IndependenceReport, Representative,
    StratifiedDist, TransferMatrix, TypeIndependence,
};
pub use extend::enumerate_extensions;
pub use lump::{lump_types, Lumping};
pub use spectral::{eigen_residuals, verify_char_poly, verify_eigvector_template, EigTemplate};

use crate::error::{Error, Result};
use crate::exactpoly::UniPoly;
use crate::fascia::{build_fasciagraph, doubly_hex_spec, FamilySpec};
use crate::rotation::{genus_distribution_bruteforce, BruteForce};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Brute,
    Transfer,
    TransferReduced,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Brute, Method::Transfer, Method::TransferReduced];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Transfer => "transfer",
            Method::TransferReduced => "transfer-reduced",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "brute" => Ok(Method::Brute),
            "transfer" => Ok(Method::Transfer),
            "transfer-reduced" | "transfer_reduced" | "reduced" => Ok(Method::TransferReduced),
            other => Err(format!("unknown method {other:?}")),
        }
    }
}

fn check_length(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidFamily("chain length must be at least 1".into()));
    }
    Ok(())
}

/// A family with its derived transfer system, ready for repeated queries.
#[derive(Clone, Debug)]
pub struct GenusEngine {
    spec: FamilySpec,
    derivation: Derivation,
    matrix: TransferMatrix,
    initial: StratifiedDist,
    lumping: Lumping,
}

impl GenusEngine {
    pub fn new(spec: FamilySpec) -> Result<Self> {
        spec.validate()?;
        let derivation = derive_transfer_matrix(&spec)?;
        let (matrix, initial) = derivation.named()?;
        let lumping = lump_types(&matrix, &initial)?;
        Ok(GenusEngine { spec, derivation, matrix, initial, lumping })
    }

    pub fn doubly_hex() -> Result<Self> {
        Self::new(doubly_hex_spec())
    }

    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    pub fn derivation(&self) -> &Derivation {
        &self.derivation
    }

    /// Transfer matrix in display order.
    pub fn matrix(&self) -> &TransferMatrix {
        &self.matrix
    }

    /// Type vector of `G_1` in display order.
    pub fn initial(&self) -> &StratifiedDist {
        &self.initial
    }

    pub fn lumping(&self) -> &Lumping {
        &self.lumping
    }

    /// Adds `delta` to one entry of the matrix (display order) and redoes
    /// the lumping. Used to check that verification notices a wrong entry.
    pub fn perturb_entry(&mut self, row: usize, col: usize, delta: &UniPoly) -> Result<()> {
        let k = self.matrix.types.len();
        if row >= k || col >= k {
            return Err(Error::DimensionMismatch(format!("entry ({row}, {col}) of a {k}x{k} matrix")));
        }
        self.matrix.q.add_to(row, col, delta);
        self.lumping = lump_types(&self.matrix, &self.initial)?;
        Ok(())
    }

    /// `Q^{n−1} v_1`: the genus polynomials of `G_n` split by type.
    pub fn stratified(&self, n: usize) -> Result<StratifiedDist> {
        check_length(n)?;
        Ok(StratifiedDist {
            types: self.matrix.types.clone(),
            entries: self.matrix.q.power_apply(&self.initial.entries, n - 1)?,
        })
    }

    pub fn genus_polynomial(&self, n: usize, method: Method, limits: &BruteForce) -> Result<UniPoly> {
        check_length(n)?;
        match method {
            Method::Brute => brute_genus_polynomial(&self.spec, n, limits),
            Method::Transfer => Ok(self.stratified(n)?.total()),
            Method::TransferReduced => Ok(self.lumping.vector_at(n)?.sum()),
        }
    }

    /// Genus polynomials of `G_1, ..., G_max_n` by one pass of the reduced
    /// recurrence.
    pub fn genus_polynomials(&self, max_n: usize) -> Result<Vec<UniPoly>> {
        let mut out = Vec::with_capacity(max_n);
        let mut v = self.lumping.initial.clone();
        for n in 1..=max_n {
            if n > 1 {
                v = self.lumping.matrix.mat_vec(&v)?;
            }
            out.push(v.sum());
        }
        Ok(out)
    }
}

fn brute_genus_polynomial(spec: &FamilySpec, n: usize, limits: &BruteForce) -> Result<UniPoly> {
    let fg = build_fasciagraph(spec, n)?;
    Ok(genus_distribution_bruteforce(&fg.graph, limits)?.into_poly())
}

/// One-shot genus polynomial of `G_n`. Transfer methods derive the matrix
/// first; use [`GenusEngine`] for repeated queries.
pub fn genus_polynomial(spec: &FamilySpec, n: usize, method: Method) -> Result<UniPoly> {
    genus_polynomial_with(spec, n, method, &BruteForce::default())
}

pub fn genus_polynomial_with(
    spec: &FamilySpec,
    n: usize,
    method: Method,
    limits: &BruteForce,
) -> Result<UniPoly> {
    check_length(n)?;
    match method {
        Method::Brute => brute_genus_polynomial(spec, n, limits),
        _ => GenusEngine::new(spec.clone())?.genus_polynomial(n, method, limits),
    }
}

pub fn stratified_distribution(spec: &FamilySpec, n: usize) -> Result<StratifiedDist> {
    GenusEngine::new(spec.clone())?.stratified(n)
}
