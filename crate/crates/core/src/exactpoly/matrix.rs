use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;

use super::{BiPoly, UniPoly};
use crate::error::{Error, Result};

/// Vector over `ℤ[Y]`, typically indexed by embedding types.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolyVector {
    entries: Vec<UniPoly>,
}

impl PolyVector {
    pub fn new(entries: Vec<UniPoly>) -> Self {
        PolyVector { entries }
    }

    pub fn zeros(len: usize) -> Self {
        PolyVector {
            entries: vec![UniPoly::zero(); len],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[UniPoly] {
        &self.entries
    }

    pub fn entries_mut(&mut self) -> &mut [UniPoly] {
        &mut self.entries
    }

    pub fn into_entries(self) -> Vec<UniPoly> {
        self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, UniPoly> {
        self.entries.iter()
    }

    pub fn sum(&self) -> UniPoly {
        self.entries.iter().sum()
    }
}

impl Index<usize> for PolyVector {
    type Output = UniPoly;

    fn index(&self, i: usize) -> &UniPoly {
        &self.entries[i]
    }
}

impl From<Vec<UniPoly>> for PolyVector {
    fn from(entries: Vec<UniPoly>) -> Self {
        PolyVector { entries }
    }
}

impl fmt::Display for PolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&e.compact('Y'))?;
        }
        f.write_str("]")
    }
}

/// Dense row-major matrix over `ℤ[Y]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<UniPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<UniPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![UniPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { UniPoly::one() } else { UniPoly::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> UniPoly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    /// Builds a matrix from rows of polynomial strings (text or compact form).
    pub fn parse_rows(rows: &[&[&str]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for s in row.iter() {
                entries.push(UniPoly::parse(s)?);
            }
        }
        Self::new(rows.len(), cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &UniPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: UniPoly) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn add_to(&mut self, r: usize, c: usize, value: &UniPoly) {
        self.entries[r * self.cols + c] += value;
    }

    pub fn entries(&self) -> &[UniPoly] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[UniPoly] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<UniPoly> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn mat_vec(&self, v: &PolyVector) -> Result<PolyVector> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix applied to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let out = (0..self.rows)
            .map(|r| {
                let mut acc = UniPoly::zero();
                for (a, x) in self.row(r).iter().zip(v.iter()) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect();
        Ok(PolyVector::new(out))
    }

    /// Applies the matrix `k` times to `v` by repeated matrix-vector
    /// products. Entry degrees grow linearly in `k`, so this keeps every
    /// intermediate at vector size.
    pub fn power_apply(&self, v: &PolyVector, k: usize) -> Result<PolyVector> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix applied to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut cur = v.clone();
        for _ in 0..k {
            cur = self.mat_vec(&cur)?;
        }
        Ok(cur)
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = UniPoly::zero();
            for k in 0..self.cols {
                let (a, b) = (self.get(r, k), rhs.get(k, c));
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
            acc
        }))
    }

    pub fn trace(&self) -> UniPoly {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Simultaneous row and column permutation: entry `(i, j)` of the
    /// result is entry `(order[i], order[j])` of `self`.
    pub fn permuted(&self, order: &[usize]) -> Result<PolyMatrix> {
        if !self.is_square() || order.len() != self.rows {
            return Err(Error::DimensionMismatch("permutation size".into()));
        }
        Ok(Self::from_fn(self.rows, self.cols, |r, c| {
            self.get(order[r], order[c]).clone()
        }))
    }

    /// Column sums evaluated at `Y = 1`.
    pub fn column_sums_at_one(&self) -> Vec<BigInt> {
        (0..self.cols)
            .map(|c| (0..self.rows).map(|r| self.get(r, c).eval_at_one()).sum())
            .collect()
    }

    /// `det(λI − A)` by the Faddeev–LeVerrier recurrence over `ℤ[Y]`.
    ///
    /// With `M_0 = 0` and `c_n = 1`, each step sets `M_k = A·M_{k−1} + c_{n−k+1}·I`
    /// and `c_{n−k} = −tr(A·M_k) / k`. The division by `k` is exact for any
    /// integral matrix; a nonzero remainder is reported as an error.
    pub fn char_poly(&self) -> Result<BiPoly> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut coeffs = vec![UniPoly::zero(); n + 1];
        coeffs[n] = UniPoly::one();
        let mut m = PolyMatrix::zeros(n, n);
        for k in 1..=n {
            let mut next = self.mul(&m)?;
            for i in 0..n {
                next.add_to(i, i, &coeffs[n - k + 1]);
            }
            m = next;
            let t = self.mul(&m)?.trace();
            coeffs[n - k] = (-t).div_exact(&BigInt::from(k)).map_err(|e| {
                Error::InexactDivision(format!("Faddeev–LeVerrier step {k}: {e}"))
            })?;
        }
        Ok(BiPoly::from_coeffs(coeffs))
    }

    /// Rows of compact entries separated by single spaces.
    pub fn render_rows(&self, var: char) -> Vec<String> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|e| e.compact(var))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect()
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.render_rows('Y') {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn y(s: &str) -> UniPoly {
        s.parse().unwrap()
    }

    fn vector(items: &[&str]) -> PolyVector {
        PolyVector::new(items.iter().map(|s| y(s)).collect())
    }

    const Q6: [[&str; 6]; 6] = [
        ["1", "2", "2", "4", "8", "8"],
        ["6Y", "4Y", "4Y", "8Y", "0", "0"],
        ["2Y", "4Y", "4Y", "0", "0", "0"],
        ["2Y", "4Y", "4Y", "0", "0", "0"],
        ["2Y^2", "0", "0", "0", "0", "0"],
        ["2Y^2+Y", "2Y", "2Y", "4Y", "8Y", "8Y"],
    ];

    fn q6() -> PolyMatrix {
        let rows: Vec<&[&str]> = Q6.iter().map(|r| &r[..]).collect();
        PolyMatrix::parse_rows(&rows).unwrap()
    }

    /// Laplace expansion of det(λI − A) along the first row; independent of
    /// the trace recurrence used by `char_poly`.
    fn char_poly_by_cofactors(a: &PolyMatrix) -> BiPoly {
        fn det(m: &[Vec<BiPoly>]) -> BiPoly {
            if m.is_empty() {
                return BiPoly::one();
            }
            let mut acc = BiPoly::zero();
            for (j, pivot) in m[0].iter().enumerate() {
                if pivot.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BiPoly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, e)| e.clone())
                            .collect()
                    })
                    .collect();
                let term = pivot * &det(&minor);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
        let n = a.rows();
        let m: Vec<Vec<BiPoly>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let neg = -&BiPoly::constant(a.get(r, c).clone());
                        if r == c {
                            &neg + &BiPoly::lambda()
                        } else {
                            neg
                        }
                    })
                    .collect()
            })
            .collect();
        det(&m)
    }

    #[test]
    fn mat_vec_identity() {
        let v = vector(&["2", "0", "Y", "0", "3Y^2", "2Y"]);
        assert_eq!(PolyMatrix::identity(6).mat_vec(&v).unwrap(), v);
    }

    #[test]
    fn mat_vec_transfer_step() {
        // Hand expansion of 2·col(τ0) + 2Y·col(τ5).
        let v1 = vector(&["2", "0", "0", "0", "0", "2Y"]);
        let v2 = q6().mat_vec(&v1).unwrap();
        assert_eq!(v2, vector(&["2+16Y", "12Y", "4Y", "4Y", "4Y^2", "2Y+20Y^2"]));
        assert_eq!(v2.sum(), y("2 + 38Y + 24Y^2"));
    }

    #[test]
    fn mat_vec_dimension_mismatch() {
        let err = q6().mat_vec(&vector(&["1", "2"])).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch(_)));
        assert!(matches!(
            PolyMatrix::zeros(2, 3).power_apply(&vector(&["1", "1", "1"]), 2),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn power_apply_zero_is_identity() {
        let v = vector(&["2", "0", "0", "0", "0", "2Y"]);
        assert_eq!(q6().power_apply(&v, 0).unwrap(), v);
    }

    #[test]
    fn char_poly_small_cases() {
        let one = PolyMatrix::parse_rows(&[&["3Y"]]).unwrap();
        assert_eq!(one.char_poly().unwrap().coeffs(), &[y("-3Y"), y("1")]);
        let swap = PolyMatrix::parse_rows(&[&["0", "1"], &["1", "0"]]).unwrap();
        assert_eq!(swap.char_poly().unwrap().coeffs(), &[y("-1"), y("0"), y("1")]);
        assert!(matches!(
            PolyMatrix::zeros(2, 3).char_poly(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn char_poly_agrees_with_cofactor_expansion_on_transfer_matrix() {
        let q = q6();
        assert_eq!(q.char_poly().unwrap(), char_poly_by_cofactors(&q));
    }

    #[test]
    fn permuted_reorders_rows_and_columns() {
        let m = PolyMatrix::parse_rows(&[&["1", "2"], &["3", "4"]]).unwrap();
        let p = m.permuted(&[1, 0]).unwrap();
        assert_eq!(p.render_rows('Y'), vec!["4 3", "2 1"]);
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = PolyMatrix> {
        prop::collection::vec(prop::collection::vec(-4i64..5, 0..3), n * n).prop_map(move |cs| {
            PolyMatrix::new(n, n, cs.iter().map(|c| UniPoly::from_i64s(c)).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn char_poly_of_diagonal_is_product(ds in prop::collection::vec(-20i64..20, 1..6)) {
            let n = ds.len();
            let a = PolyMatrix::from_fn(n, n, |r, c| {
                if r == c { UniPoly::constant(ds[r]) } else { UniPoly::zero() }
            });
            let expected = ds.iter().fold(BiPoly::one(), |acc, &d| {
                &acc * &BiPoly::from_coeffs(vec![UniPoly::constant(-d), UniPoly::one()])
            });
            prop_assert_eq!(a.char_poly().unwrap(), expected);
        }

        #[test]
        fn char_poly_matches_cofactors(a in (1usize..5).prop_flat_map(small_matrix)) {
            prop_assert_eq!(a.char_poly().unwrap(), char_poly_by_cofactors(&a));
        }

        #[test]
        fn power_apply_composes(
            a in small_matrix(3),
            v in prop::collection::vec(prop::collection::vec(-4i64..5, 0..3), 3),
            j in 0usize..4,
            k in 0usize..4,
        ) {
            let v = PolyVector::new(v.iter().map(|c| UniPoly::from_i64s(c)).collect());
            let direct = a.power_apply(&v, j + k).unwrap();
            let split = a.power_apply(&a.power_apply(&v, k).unwrap(), j).unwrap();
            prop_assert_eq!(direct, split);
        }
    }
}
