use crate::error::{Error, Result};
use crate::exactpoly::{PolyMatrix, PolyVector, UniPoly};

use super::derive::{StratifiedDist, TransferMatrix};

/// Aggregation of types with identical columns.
///
/// Types whose columns agree extend in the same way, so summing the rows of
/// each class gives a smaller matrix that acts on class totals exactly as
/// the full matrix acts on type vectors. The genus polynomial is unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lumping {
    /// Member indices of each class, in order of first member.
    pub classes: Vec<Vec<usize>>,
    pub names: Vec<String>,
    pub matrix: PolyMatrix,
    pub initial: PolyVector,
}

impl Lumping {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Sums a type-indexed vector into class totals.
    pub fn project(&self, v: &PolyVector) -> Result<PolyVector> {
        let width: usize = self.classes.iter().map(Vec::len).sum();
        if v.len() != width {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} projected onto {width} types",
                v.len()
            )));
        }
        Ok(PolyVector::new(
            self.classes
                .iter()
                .map(|class| class.iter().map(|&i| v[i].clone()).sum())
                .collect(),
        ))
    }

    /// Class vector after `n − 1` steps: the reduced counterpart of
    /// `Q^{n−1} v_1`.
    pub fn vector_at(&self, n: usize) -> Result<PolyVector> {
        if n == 0 {
            return Err(Error::InvalidFamily("chain length must be at least 1".into()));
        }
        self.matrix.power_apply(&self.initial, n - 1)
    }
}

/// Name for a class: `τ0` + `τ3` becomes `τ03`; other names are joined
/// with `+`.
fn class_name(members: &[&str]) -> String {
    if let [one] = members {
        return one.to_string();
    }
    let suffixes: Option<Vec<&str>> = members
        .iter()
        .map(|m| m.strip_prefix('τ').filter(|s| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())))
        .collect();
    match suffixes {
        Some(s) => format!("τ{}", s.concat()),
        None => members.join("+"),
    }
}

/// Groups types with identical columns, in order of first occurrence.
pub fn lump_types(q: &TransferMatrix, v1: &StratifiedDist) -> Result<Lumping> {
    let k = q.types.len();
    if q.q.rows() != k || q.q.cols() != k || v1.entries.len() != k {
        return Err(Error::DimensionMismatch(format!(
            "{k} type names for a {}x{} matrix and a vector of length {}",
            q.q.rows(),
            q.q.cols(),
            v1.entries.len()
        )));
    }
    let columns: Vec<Vec<UniPoly>> = (0..k).map(|j| q.q.column(j)).collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for j in 0..k {
        match classes.iter_mut().find(|c| columns[c[0]] == columns[j]) {
            Some(c) => c.push(j),
            None => classes.push(vec![j]),
        }
    }
    let m = classes.len();
    let matrix = PolyMatrix::from_fn(m, m, |a, b| {
        classes[a].iter().map(|&i| q.q.get(i, classes[b][0]).clone()).sum()
    });
    let names = classes
        .iter()
        .map(|c| class_name(&c.iter().map(|&i| q.types[i].as_str()).collect::<Vec<_>>()))
        .collect();
    let mut lumping = Lumping { classes, names, matrix, initial: PolyVector::zeros(0) };
    lumping.initial = lumping.project(&v1.entries)?;
    Ok(lumping)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dist(types: &[&str], entries: &[&str]) -> StratifiedDist {
        StratifiedDist {
            types: types.iter().map(|s| s.to_string()).collect(),
            entries: PolyVector::new(entries.iter().map(|e| e.parse().unwrap()).collect()),
        }
    }

    #[test]
    fn class_names() {
        assert_eq!(class_name(&["τ1", "τ2"]), "τ12");
        assert_eq!(class_name(&["τ3"]), "τ3");
        assert_eq!(class_name(&["T0", "T4"]), "T0+T4");
    }

    #[test]
    fn lumped_iteration_matches_projection() {
        // Columns 1 and 2 agree.
        let q = TransferMatrix {
            types: vec!["p".into(), "q".into(), "r".into()],
            q: PolyMatrix::parse_rows(&[
                &["1", "Y", "Y"],
                &["2Y", "1", "1"],
                &["Y^2", "Y+1", "Y+1"],
            ])
            .unwrap(),
        };
        let v = dist(&["p", "q", "r"], &["1", "Y", "3"]);
        let l = lump_types(&q, &v).unwrap();
        assert_eq!(l.classes, vec![vec![0], vec![1, 2]]);
        assert_eq!(l.names, vec!["p", "q+r"]);
        let mut full = v.entries.clone();
        for n in 1..6 {
            assert_eq!(l.vector_at(n).unwrap(), l.project(&full).unwrap());
            full = q.q.mat_vec(&full).unwrap();
        }
    }

    #[test]
    fn mismatched_sizes_rejected() {
        let q = TransferMatrix {
            types: vec!["p".into()],
            q: PolyMatrix::identity(2),
        };
        assert!(lump_types(&q, &dist(&["p"], &["1"])).is_err());
    }
}
