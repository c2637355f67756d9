//! Exhaustive enumeration of rotation systems.
//!
//! Every vertex contributes one digit of a mixed-radix odometer. The digit
//! of a vertex of degree `k` selects one of its `(k − 1)!` cyclic orders:
//! the first dart in construction order is fixed and the remaining darts
//! are permuted in lexicographic order of their construction positions.
//! Vertices of degree at most two have a single order and no digit. Digits
//! are ordered by ascending vertex index and the highest vertex turns
//! fastest, so index `i` is the `i`-th rotation in lexicographic order of
//! the digit tuple.

use std::num::NonZeroUsize;
use std::ops::Range;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::embedding::{euler_genus, FaceCounter, RotationSystem};
use super::graph::DartGraph;
use crate::error::{Error, Result};
use crate::exactpoly::UniPoly;

pub const DEFAULT_BUDGET: u64 = 1 << 28;

/// `∏ (deg(v) − 1)!`, with vertices of degree at most two contributing 1.
pub fn count_embeddings(graph: &DartGraph) -> BigUint {
    let mut total = BigUint::one();
    for v in 0..graph.vertex_count() {
        for k in 2..graph.degree(v) {
            total *= k as u64;
        }
    }
    total
}

/// All cyclic orders of a vertex's darts, in enumeration order.
pub(crate) fn cyclic_orders(darts: &[u32]) -> Vec<Vec<u32>> {
    if darts.len() <= 2 {
        return vec![darts.to_vec()];
    }
    let mut rest: Vec<usize> = (1..darts.len()).collect();
    let mut out = Vec::new();
    loop {
        let mut order = Vec::with_capacity(darts.len());
        order.push(darts[0]);
        order.extend(rest.iter().map(|&i| darts[i]));
        out.push(order);
        if !next_permutation(&mut rest) {
            break;
        }
    }
    out
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = xs.iter().rposition(|&x| x > xs[i]).expect("pivot has a successor");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

pub(crate) fn write_order(next: &mut [u32], order: &[u32]) {
    for (i, &d) in order.iter().enumerate() {
        next[d as usize] = order[(i + 1) % order.len()];
    }
}

/// Odometer over all rotation systems of a graph.
#[derive(Debug, Clone)]
pub struct Enumerator<'g> {
    graph: &'g DartGraph,
    /// Per vertex, its cyclic orders.
    choices: Vec<Vec<Vec<u32>>>,
    /// Vertices with more than one order, ascending.
    active: Vec<usize>,
    total: u64,
}

impl<'g> Enumerator<'g> {
    pub fn new(graph: &'g DartGraph) -> Result<Self> {
        let required = count_embeddings(graph);
        let total = required.to_u64().ok_or(Error::BudgetExceeded {
            required: required.clone(),
            budget: u64::MAX,
        })?;
        let choices: Vec<Vec<Vec<u32>>> = (0..graph.vertex_count())
            .map(|v| {
                let darts: Vec<u32> = graph.out_darts(v).iter().map(|d| d.index() as u32).collect();
                cyclic_orders(&darts)
            })
            .collect();
        let active = (0..choices.len()).filter(|&v| choices[v].len() > 1).collect();
        Ok(Enumerator { graph, choices, active, total })
    }

    pub fn graph(&self) -> &'g DartGraph {
        self.graph
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    fn digits_of(&self, mut index: u64) -> Vec<usize> {
        let mut digits = vec![0; self.active.len()];
        for (slot, &v) in self.active.iter().enumerate().rev() {
            let radix = self.choices[v].len() as u64;
            digits[slot] = (index % radix) as usize;
            index /= radix;
        }
        digits
    }

    /// The rotation system at position `index` of the enumeration order.
    pub fn rotation_at(&self, index: u64) -> RotationSystem {
        assert!(index < self.total, "index {index} out of range 0..{}", self.total);
        let digits = self.digits_of(index);
        let mut next = vec![0u32; self.graph.dart_count()];
        for orders in &self.choices {
            write_order(&mut next, &orders[0]);
        }
        for (slot, &v) in self.active.iter().enumerate() {
            write_order(&mut next, &self.choices[v][digits[slot]]);
        }
        RotationSystem::from_raw(next)
    }

    /// Visits the rotation systems with indices in `range`, in order.
    pub fn for_each_in(&self, range: Range<u64>, mut visit: impl FnMut(u64, &RotationSystem)) {
        let end = range.end.min(self.total);
        if range.start >= end {
            return;
        }
        let mut digits = self.digits_of(range.start);
        let mut rot = self.rotation_at(range.start);
        for index in range.start..end {
            visit(index, &rot);
            for slot in (0..self.active.len()).rev() {
                let v = self.active[slot];
                let radix = self.choices[v].len();
                digits[slot] += 1;
                let wrapped = digits[slot] == radix;
                if wrapped {
                    digits[slot] = 0;
                }
                write_order(rot.raw_mut(), &self.choices[v][digits[slot]]);
                if !wrapped {
                    break;
                }
            }
        }
    }

    pub fn for_each(&self, visit: impl FnMut(u64, &RotationSystem)) {
        self.for_each_in(0..self.total, visit);
    }

    /// Splits the index space into at most `workers` contiguous ranges, folds
    /// each on its own thread, and merges the partial results in range order.
    pub fn par_fold<T, I, F, M>(&self, workers: usize, init: I, fold: F, merge: M) -> T
    where
        T: Send,
        I: Fn() -> T + Sync,
        F: Fn(&mut T, u64, &RotationSystem) + Sync,
        M: Fn(T, T) -> T,
    {
        let ranges = partition(self.total, workers);
        if ranges.len() <= 1 {
            let mut acc = init();
            self.for_each(|i, r| fold(&mut acc, i, r));
            return acc;
        }
        let partials: Vec<T> = std::thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .into_iter()
                .map(|range| {
                    let (init, fold) = (&init, &fold);
                    scope.spawn(move || {
                        let mut acc = init();
                        self.for_each_in(range, |i, r| fold(&mut acc, i, r));
                        acc
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("enumeration worker panicked"))
                .collect()
        });
        let mut iter = partials.into_iter();
        let first = iter.next().unwrap_or_else(&init);
        iter.fold(first, merge)
    }
}

/// Contiguous near-equal ranges covering `0..total`.
pub fn partition(total: u64, workers: usize) -> Vec<Range<u64>> {
    let workers = (workers.max(1) as u64).min(total.max(1));
    let chunk = total.div_ceil(workers);
    (0..workers)
        .map(|w| (w * chunk).min(total)..((w + 1) * chunk).min(total))
        .filter(|r| !r.is_empty())
        .collect()
}

/// Calls `consumer` once per rotation system, in enumeration order.
pub fn enumerate_embeddings(graph: &DartGraph, mut consumer: impl FnMut(&RotationSystem)) -> Result<()> {
    Enumerator::new(graph)?.for_each(|_, r| consumer(r));
    Ok(())
}

/// Limits for exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteForce {
    pub budget: u64,
    pub threads: usize,
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce {
            budget: DEFAULT_BUDGET,
            threads: std::thread::available_parallelism().map_or(1, NonZeroUsize::get),
        }
    }
}

impl BruteForce {
    pub fn with_threads(threads: usize) -> Self {
        BruteForce { threads: threads.max(1), ..Self::default() }
    }

    /// Builds the enumerator after checking connectivity and the budget.
    pub fn enumerator<'g>(&self, graph: &'g DartGraph) -> Result<Enumerator<'g>> {
        let required = count_embeddings(graph);
        if required > BigUint::from(self.budget) {
            return Err(Error::BudgetExceeded { required, budget: self.budget });
        }
        Enumerator::new(graph)
    }
}

/// Genus polynomial `Σ α_g Y^g` of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusDist {
    poly: UniPoly,
}

impl GenusDist {
    pub fn from_counts(counts: &[u64]) -> Self {
        GenusDist {
            poly: UniPoly::from_coeffs(counts.iter().map(|&c| c.into()).collect()),
        }
    }

    pub fn poly(&self) -> &UniPoly {
        &self.poly
    }

    pub fn into_poly(self) -> UniPoly {
        self.poly
    }

    pub fn total(&self) -> BigUint {
        self.poly
            .eval_at_one()
            .to_biguint()
            .expect("genus counts are nonnegative")
    }
}

pub(crate) fn add_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Counts rotation systems by genus.
pub fn genus_distribution_bruteforce(graph: &DartGraph, limits: &BruteForce) -> Result<GenusDist> {
    let components = graph.component_count();
    if components > 1 {
        return Err(Error::Disconnected(components));
    }
    let en = limits.enumerator(graph)?;
    let (v, e) = (graph.vertex_count(), graph.edge_count());
    let (counts, violation, _) = en.par_fold(
        limits.threads,
        || (Vec::<u64>::new(), None::<Error>, FaceCounter::new()),
        |(counts, violation, fc), _, rot| {
            match euler_genus(v, e, fc.count(rot)) {
                Ok(g) => {
                    if counts.len() <= g {
                        counts.resize(g + 1, 0);
                    }
                    counts[g] += 1;
                }
                Err(err) => {
                    violation.get_or_insert(err);
                }
            }
        },
        |(a, va, fc), (b, vb, _)| (add_counts(a, b), va.or(vb), fc),
    );
    if let Some(err) = violation {
        return Err(err);
    }
    Ok(GenusDist::from_counts(&counts))
}
