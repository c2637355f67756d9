use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactpoly::{PolyMatrix, PolyVector, UniPoly};
use crate::fascia::{build_fasciagraph, FamilySpec, FasciaGraph};
use crate::rotation::{add_counts, genus, BruteForce, RotationSystem};
use crate::stype::{extract_stype, named_type_table, SType, TypeRegistry};

use super::extend::enumerate_extensions;

/// Type-indexed vector of genus polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratifiedDist {
    pub types: Vec<String>,
    pub entries: PolyVector,
}

impl StratifiedDist {
    /// The genus polynomial: the sum over all types.
    pub fn total(&self) -> UniPoly {
        self.entries.sum()
    }

    pub fn get(&self, name: &str) -> Option<&UniPoly> {
        self.types.iter().position(|t| t == name).map(|i| &self.entries[i])
    }

    pub fn reordered(&self, order: &[usize]) -> StratifiedDist {
        StratifiedDist {
            types: order.iter().map(|&i| self.types[i].clone()).collect(),
            entries: PolyVector::new(order.iter().map(|&i| self.entries[i].clone()).collect()),
        }
    }
}

/// Transfer matrix with columns indexed by source type and rows by target
/// type: entry `(τ, σ)` counts the extensions of one embedding of type `σ`
/// that have type `τ`, with `Y^k` marking a genus increase of `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferMatrix {
    pub types: Vec<String>,
    pub q: PolyMatrix,
}

impl TransferMatrix {
    pub fn apply(&self, v: &StratifiedDist) -> Result<StratifiedDist> {
        if v.types != self.types {
            return Err(Error::DimensionMismatch(format!(
                "vector over {:?} applied to matrix over {:?}",
                v.types, self.types
            )));
        }
        Ok(StratifiedDist {
            types: self.types.clone(),
            entries: self.q.mat_vec(&v.entries)?,
        })
    }

    pub fn reordered(&self, order: &[usize]) -> Result<TransferMatrix> {
        Ok(TransferMatrix {
            types: order.iter().map(|&i| self.types[i].clone()).collect(),
            q: self.q.permuted(order)?,
        })
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.types.iter().position(|t| t == name)
    }

    /// Largest power of `Y` among all entries.
    pub fn max_exponent(&self) -> Option<usize> {
        self.q.entries().iter().filter_map(UniPoly::degree).max()
    }
}

/// First embedding found for a type during discovery.
#[derive(Clone, Debug)]
pub struct Representative {
    pub level: usize,
    pub rotation: RotationSystem,
    pub genus: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeriveOptions {
    /// Deepest chain length a representative may come from.
    pub max_level: usize,
}

impl Default for DeriveOptions {
    fn default() -> Self {
        DeriveOptions { max_level: 8 }
    }
}

/// Output of the discovery loop, indexed by registry id.
#[derive(Clone, Debug)]
pub struct Derivation {
    pub registry: TypeRegistry,
    pub matrix: TransferMatrix,
    pub initial: StratifiedDist,
    pub representatives: Vec<Representative>,
}

impl Derivation {
    /// Registry ids sorted by their position in the named type table when
    /// every discovered type is named there; registry order otherwise.
    pub fn display_order(&self) -> Vec<usize> {
        table_order(&self.registry).unwrap_or_else(|| (0..self.registry.len()).collect())
    }

    /// Matrix and initial vector in display order.
    pub fn named(&self) -> Result<(TransferMatrix, StratifiedDist)> {
        let order = self.display_order();
        Ok((self.matrix.reordered(&order)?, self.initial.reordered(&order)))
    }
}

/// Every one-step extension of `rot` with its type and genus.
fn extension_profile(
    next: &FasciaGraph,
    rot: &RotationSystem,
) -> Result<Vec<(RotationSystem, SType, usize)>> {
    enumerate_extensions(next, rot)?
        .into_iter()
        .map(|r| {
            let t = extract_stype(next, &r)?;
            let g = genus(&next.graph, &r)?;
            Ok((r, t, g))
        })
        .collect()
}

/// Registry ids in named-table order when the registry holds exactly the
/// tabulated types.
fn table_order(registry: &TypeRegistry) -> Option<Vec<usize>> {
    let table = named_type_table();
    if registry.len() != table.len() {
        return None;
    }
    table.iter().map(|(_, t)| registry.id_of(t)).collect()
}

fn increment(before: usize, after: usize) -> Result<usize> {
    after.checked_sub(before).ok_or(Error::GenusDecrease { before, after })
}

struct Levels<'a> {
    spec: &'a FamilySpec,
    graphs: BTreeMap<usize, FasciaGraph>,
}

impl<'a> Levels<'a> {
    fn get(&mut self, n: usize) -> Result<&FasciaGraph> {
        if !self.graphs.contains_key(&n) {
            self.graphs.insert(n, build_fasciagraph(self.spec, n)?);
        }
        Ok(&self.graphs[&n])
    }
}

pub fn derive_transfer_matrix(spec: &FamilySpec) -> Result<Derivation> {
    derive_transfer_matrix_with(spec, &DeriveOptions::default())
}

/// Discovers the boundary types and the transfer matrix of a family.
///
/// All embeddings of `G_1` seed the registry and the initial vector. Then,
/// in id order, each type's representative is extended by one step and the
/// types and genus increments of its extensions fill that type's column.
/// Types first met among extensions get the extension as representative
/// and are processed in turn, until no type is left without a column.
pub fn derive_transfer_matrix_with(spec: &FamilySpec, opts: &DeriveOptions) -> Result<Derivation> {
    let mut levels = Levels { spec, graphs: BTreeMap::new() };
    let mut registry = TypeRegistry::new();
    let mut reps: Vec<Representative> = Vec::new();
    let mut initial: Vec<UniPoly> = Vec::new();

    let g1 = levels.get(1)?.clone();
    let en = BruteForce::default().enumerator(&g1.graph)?;
    let mut failure = None;
    en.for_each(|_, rot| {
        if failure.is_some() {
            return;
        }
        let step = (|| -> Result<()> {
            let t = extract_stype(&g1, rot)?;
            let g = genus(&g1.graph, rot)?;
            let (id, new) = registry.intern(t);
            if new {
                reps.push(Representative { level: 1, rotation: rot.clone(), genus: g });
                initial.push(UniPoly::zero());
            }
            initial[id] += &UniPoly::monomial(1, g);
            Ok(())
        })();
        failure = step.err();
    });
    if let Some(err) = failure {
        return Err(err);
    }

    let mut columns: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut id = 0;
    while id < registry.len() {
        let rep = reps[id].clone();
        if rep.level >= opts.max_level {
            return Err(Error::NoClosure(opts.max_level));
        }
        let next = levels.get(rep.level + 1)?;
        let mut column = Vec::new();
        for (r, t, g) in extension_profile(next, &rep.rotation)? {
            let (target, new) = registry.intern(t);
            if new {
                reps.push(Representative { level: rep.level + 1, rotation: r, genus: g });
                initial.push(UniPoly::zero());
            }
            column.push((target, increment(rep.genus, g)?));
        }
        columns.push(column);
        id += 1;
    }

    let k = registry.len();
    let mut q = PolyMatrix::zeros(k, k);
    for (source, column) in columns.iter().enumerate() {
        for &(target, dg) in column {
            q.add_to(target, source, &UniPoly::monomial(1, dg));
        }
    }
    if table_order(&registry).is_some() {
        registry.attach_names(&named_type_table());
    }
    let types = registry.names();
    Ok(Derivation {
        matrix: TransferMatrix { types: types.clone(), q },
        initial: StratifiedDist { types, entries: PolyVector::new(initial) },
        registry,
        representatives: reps,
    })
}

/// Outcome of re-deriving every column from every embedding of `G_level`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceReport {
    pub level: usize,
    pub types: Vec<TypeIndependence>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeIndependence {
    pub name: String,
    pub representatives: usize,
    /// Extension counts seen over all representatives.
    pub extension_counts: Vec<usize>,
    /// Representatives whose column differs from the derived one.
    pub mismatches: usize,
}

impl IndependenceReport {
    pub fn holds(&self) -> bool {
        self.types.iter().all(|t| t.mismatches == 0 && t.representatives > 0)
    }
}

/// Checks that the column produced by an embedding depends only on its type.
pub fn check_representative_independence(
    spec: &FamilySpec,
    derivation: &Derivation,
    level: usize,
) -> Result<IndependenceReport> {
    let here = build_fasciagraph(spec, level)?;
    let next = build_fasciagraph(spec, level + 1)?;
    let reg = &derivation.registry;
    let k = reg.len();
    let mut stats: Vec<TypeIndependence> = (0..k)
        .map(|id| TypeIndependence {
            name: reg.name(id),
            representatives: 0,
            extension_counts: Vec::new(),
            mismatches: 0,
        })
        .collect();
    let en = BruteForce::default().enumerator(&here.graph)?;
    let mut failure = None;
    en.for_each(|_, rot| {
        if failure.is_some() {
            return;
        }
        let step = (|| -> Result<()> {
            let t = extract_stype(&here, rot)?;
            let id = reg
                .id_of(&t)
                .ok_or_else(|| Error::UnknownType(t.display(&spec.labels).to_string()))?;
            let g = genus(&here.graph, rot)?;
            let profile = extension_profile(&next, rot)?;
            let mut column = vec![UniPoly::zero(); k];
            for (_, t2, g2) in &profile {
                let target = reg
                    .id_of(t2)
                    .ok_or_else(|| Error::UnknownType(t2.display(&spec.labels).to_string()))?;
                column[target] += &UniPoly::monomial(1, increment(g, *g2)?);
            }
            let s = &mut stats[id];
            s.representatives += 1;
            if !s.extension_counts.contains(&profile.len()) {
                s.extension_counts.push(profile.len());
            }
            if column != derivation.matrix.q.column(id) {
                s.mismatches += 1;
            }
            Ok(())
        })();
        failure = step.err();
    });
    if let Some(err) = failure {
        return Err(err);
    }
    Ok(IndependenceReport { level, types: stats })
}

/// Per-type genus polynomials of `G_n` by exhaustive enumeration, indexed
/// by registry id. Fails on a type the registry does not know.
pub fn stratified_bruteforce(
    spec: &FamilySpec,
    n: usize,
    registry: &TypeRegistry,
    limits: &BruteForce,
) -> Result<PolyVector> {
    let fg = build_fasciagraph(spec, n)?;
    let en = limits.enumerator(&fg.graph)?;
    let k = registry.len();
    type Acc = (Vec<Vec<u64>>, Option<Error>);
    let (counts, failure): Acc = en.par_fold(
        limits.threads,
        || (vec![Vec::new(); k], None),
        |(counts, failure), _, rot| {
            if failure.is_some() {
                return;
            }
            let step = extract_stype(&fg, rot).and_then(|t| {
                let id = registry
                    .id_of(&t)
                    .ok_or_else(|| Error::UnknownType(t.display(&spec.labels).to_string()))?;
                Ok((id, genus(&fg.graph, rot)?))
            });
            match step {
                Ok((id, g)) => {
                    let row = &mut counts[id];
                    if row.len() <= g {
                        row.resize(g + 1, 0);
                    }
                    row[g] += 1;
                }
                Err(e) => *failure = Some(e),
            }
        },
        |(a, fa), (b, fb)| {
            let merged = a.into_iter().zip(b).map(|(x, y)| add_counts(x, y)).collect();
            (merged, fa.or(fb))
        },
    );
    if let Some(err) = failure {
        return Err(err);
    }
    Ok(PolyVector::new(
        counts
            .iter()
            .map(|c| UniPoly::from_coeffs(c.iter().map(|&x| x.into()).collect()))
            .collect(),
    ))
}
