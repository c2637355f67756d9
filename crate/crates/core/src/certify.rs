//! End-to-end verification of the doubly hexagonal results.
//!
//! Each check compares a computed object against either reference values
//! (see [`crate::known`]) or an independent brute-force oracle, and reports
//! PASS or FAIL with the offending entries named.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::error::Result;
use crate::exactpoly::{BiPoly, PolyMatrix, PolyVector, UniPoly};
use crate::fascia::{build_fasciagraph, theta_branch_lengths};
use crate::known;
use crate::rotation::BruteForce;
use crate::transfer::{
    check_representative_independence, eigen_residuals, stratified_bruteforce, GenusEngine, Method,
};

pub const TABLE_LIMIT: Duration = Duration::from_secs(1);
pub const BRUTE_FAST_LIMIT: Duration = Duration::from_secs(5);
pub const BRUTE_SLOW_LIMIT: Duration = Duration::from_secs(120);
pub const INDEPENDENCE_LIMIT: Duration = Duration::from_secs(1);
pub const SCALE_LIMIT: Duration = Duration::from_secs(10);
pub const SCALE_N: usize = 1000;

/// Chain lengths up to which brute force counts as the fast tier.
pub const FAST_BRUTE_MAX: usize = 4;

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    /// Longest chain checked by exhaustive enumeration.
    pub max_brute_n: usize,
    pub limits: BruteForce,
    /// Adds `Y` to the entry `(τ1, τ0)` of the derived matrix first.
    pub inject_fault: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            max_brute_n: FAST_BRUTE_MAX,
            limits: BruteForce::default(),
            inject_fault: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub criterion: u8,
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
    pub elapsed: Duration,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{:>2}] {:<26} {} ({:.3}s)",
            self.status,
            self.criterion,
            self.name,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, criterion: u8) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(move |c| c.criterion == criterion)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.failures().count();
        if failed == 0 {
            write!(f, "all {} checks passed", self.checks.len())
        } else {
            write!(f, "{failed} of {} checks failed", self.checks.len())
        }
    }
}

type Outcome = Result<(bool, String)>;

fn run(criterion: u8, name: &'static str, limit: Option<Duration>, body: impl FnOnce() -> Outcome) -> Check {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let (status, mut detail) = match outcome {
        Ok((true, d)) => (Status::Pass, d),
        Ok((false, d)) => (Status::Fail, d),
        Err(e) => (Status::Fail, format!("error: {e}")),
    };
    let mut status = status;
    if let Some(limit) = limit {
        if status == Status::Pass && elapsed > limit {
            status = Status::Fail;
            detail = format!("{detail}; took longer than {:.0}s", limit.as_secs_f64());
        }
    }
    Check { criterion, name, status, detail, elapsed }
}

fn skip(criterion: u8, name: &'static str, detail: String) -> Check {
    Check { criterion, name, status: Status::Skip, detail, elapsed: Duration::ZERO }
}

/// Entry-by-entry differences, named by row and column type.
fn matrix_diff(got: &PolyMatrix, want: &PolyMatrix, names: &[String]) -> Vec<String> {
    if got.rows() != want.rows() || got.cols() != want.cols() {
        return vec![format!(
            "shape {}x{} vs expected {}x{}",
            got.rows(),
            got.cols(),
            want.rows(),
            want.cols()
        )];
    }
    let name = |i: usize| names.get(i).cloned().unwrap_or_else(|| i.to_string());
    let mut out = Vec::new();
    for r in 0..got.rows() {
        for c in 0..got.cols() {
            if got.get(r, c) != want.get(r, c) {
                out.push(format!(
                    "Q({},{}) = {}, expected {}",
                    name(r),
                    name(c),
                    got.get(r, c).compact('Y'),
                    want.get(r, c).compact('Y')
                ));
            }
        }
    }
    out
}

fn vector_diff(got: &PolyVector, want: &PolyVector, names: &[String]) -> Vec<String> {
    if got.len() != want.len() {
        return vec![format!("length {} vs expected {}", got.len(), want.len())];
    }
    (0..got.len())
        .filter(|&i| got[i] != want[i])
        .map(|i| {
            let n = names.get(i).cloned().unwrap_or_else(|| i.to_string());
            format!("[{n}] = {}, expected {}", got[i].compact('Y'), want[i].compact('Y'))
        })
        .collect()
}

/// Simultaneous row and column relabeling of `got` closest to `want`, as
/// `(order, differing entries)`; ties go to the first order found.
fn closest_relabeling(got: &PolyMatrix, want: &PolyMatrix) -> Result<(Vec<usize>, usize)> {
    fn permutations(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in permutations(k - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k - 1);
                out.push(q);
            }
        }
        out
    }
    let mut best = ((0..got.rows()).collect::<Vec<_>>(), usize::MAX);
    let mut orders = permutations(got.rows());
    orders.sort();
    for order in orders {
        let p = got.permuted(&order)?;
        let diff = (0..p.rows())
            .flat_map(|r| (0..p.cols()).map(move |c| (r, c)))
            .filter(|&(r, c)| p.get(r, c) != want.get(r, c))
            .count();
        if diff < best.1 {
            best = (order, diff);
        }
    }
    Ok(best)
}

fn verdict(problems: Vec<String>, ok: String) -> (bool, String) {
    if problems.is_empty() {
        (true, ok)
    } else {
        (false, problems.join("; "))
    }
}

/// Runs every check and collects the results. Only setup errors (the
/// family cannot be derived at all) are returned as `Err`.
pub fn certify(opts: &CertifyOptions) -> Result<Report> {
    let mut engine = GenusEngine::doubly_hex()?;
    if opts.inject_fault {
        engine.perturb_entry(1, 0, &UniPoly::monomial(1, 1))?;
    }
    let engine = &engine;
    let spec = engine.spec();
    let mut checks = Vec::new();

    checks.push(run(1, "table reproduction", Some(TABLE_LIMIT), || {
        let mut problems = Vec::new();
        for (i, want) in known::genus_table().iter().enumerate() {
            let got = engine.genus_polynomial(i + 1, Method::TransferReduced, &opts.limits)?;
            if &got != want {
                problems.push(format!("n = {}: got {}", i + 1, got.render('x')));
            }
        }
        Ok(verdict(problems, "n = 1..8 match".into()))
    }));

    let brute_vs_transfer = |range: std::ops::RangeInclusive<usize>| -> Outcome {
        let mut problems = Vec::new();
        for n in range.clone() {
            let brute = engine.genus_polynomial(n, Method::Brute, &opts.limits)?;
            for m in [Method::Transfer, Method::TransferReduced] {
                let t = engine.genus_polynomial(n, m, &opts.limits)?;
                if t != brute {
                    problems.push(format!("n = {n} {m}: {} vs brute {}", t.render('x'), brute.render('x')));
                }
            }
        }
        Ok(verdict(problems, format!("n = {}..{} agree", range.start(), range.end())))
    };
    let fast_end = opts.max_brute_n.min(FAST_BRUTE_MAX);
    if fast_end >= 1 {
        checks.push(run(2, "brute force = transfer", Some(BRUTE_FAST_LIMIT), || {
            brute_vs_transfer(1..=fast_end)
        }));
    } else {
        checks.push(skip(2, "brute force = transfer", "max brute n is 0".into()));
    }
    if opts.max_brute_n > FAST_BRUTE_MAX {
        checks.push(run(2, "brute force = transfer (slow)", Some(BRUTE_SLOW_LIMIT), || {
            brute_vs_transfer(FAST_BRUTE_MAX + 1..=opts.max_brute_n)
        }));
    } else {
        checks.push(skip(
            2,
            "brute force = transfer (slow)",
            format!("n = {}.. not requested", FAST_BRUTE_MAX + 1),
        ));
    }

    checks.push(run(3, "stratified oracle", None, || {
        let der = engine.derivation();
        let order = der.display_order();
        let names = &engine.matrix().types;
        let mut problems = Vec::new();
        for n in 2..=3 {
            let brute = stratified_bruteforce(spec, n, &der.registry, &opts.limits)?;
            let brute = PolyVector::new(order.iter().map(|&i| brute[i].clone()).collect());
            let transfer = engine.stratified(n)?.entries;
            for p in vector_diff(&transfer, &brute, names) {
                problems.push(format!("n = {n} {p}"));
            }
        }
        Ok(verdict(problems, "D_2, D_3 agree per type".into()))
    }));

    checks.push(run(4, "transfer matrix as printed", None, || {
        let m = engine.matrix();
        let mut problems = Vec::new();
        let want_names: Vec<String> = known::TYPE_NAMES.iter().map(|s| s.to_string()).collect();
        if m.types != want_names {
            problems.push(format!("types {:?}", m.types));
        }
        let printed = known::q_matrix();
        problems.extend(matrix_diff(&m.q, &printed, &m.types));
        if !problems.is_empty() && m.q.rows() == printed.rows() && m.q.rows() <= 8 {
            let (order, diff) = closest_relabeling(&m.q, &printed)?;
            let relabeled: Vec<String> = order.iter().map(|&i| m.types[i].clone()).collect();
            problems.push(format!(
                "closest relabeling {relabeled:?} still differs in {diff} entries: {}",
                matrix_diff(&m.q.permuted(&order)?, &printed, &known::TYPE_NAMES.map(String::from))
                    .join(", ")
            ));
        }
        Ok(verdict(problems, "6x6 matrix matches".into()))
    }));
    checks.push(run(4, "initial vector", None, || {
        let problems = vector_diff(&engine.initial().entries, &known::v1(), &engine.initial().types);
        Ok(verdict(problems, "[2, 0, 0, 0, 0, 2Y]".into()))
    }));

    checks.push(run(5, "lumping", None, || {
        let l = engine.lumping();
        let mut problems = Vec::new();
        let want: Vec<Vec<usize>> = vec![vec![0], vec![1, 2], vec![3], vec![4, 5]];
        if l.classes != want || l.names != known::LUMPED_NAMES {
            problems.push(format!("classes {:?}", l.names));
        }
        problems.extend(matrix_diff(&l.matrix, &known::q_hat(), &l.names));
        problems.extend(vector_diff(&l.initial, &known::v1_hat(), &l.names));
        Ok(verdict(problems, "{τ0},{τ1,τ2},{τ3},{τ4,τ5}; 4x4 matrix and vector match".into()))
    }));

    checks.push(run(6, "characteristic polynomial", None, || {
        let phi = engine.lumping().matrix.char_poly()?;
        let want = known::char_poly();
        Ok(if phi == want {
            (true, phi.to_string())
        } else {
            (false, format!("got {phi}"))
        })
    }));

    checks.push(run(7, "eigenvector identity", None, || {
        let q = &engine.lumping().matrix;
        let phi = known::char_poly();
        let u = known::eigen_template();
        let residuals = eigen_residuals(q, &u, &phi)?;
        let mut problems: Vec<String> = residuals
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_zero())
            .map(|(i, r)| format!("component {} leaves {r}", i + 1))
            .collect();
        let mut bad = u.clone();
        bad.components_mut()[2] = &bad.components()[2] + &BiPoly::one();
        if eigen_residuals(q, &bad, &phi)?.iter().all(BiPoly::is_zero) {
            problems.push("perturbed template also passes".into());
        }
        Ok(verdict(problems, "all residuals vanish; perturbed template rejected".into()))
    }));

    checks.push(run(8, "counting identities", None, || {
        let mut problems = Vec::new();
        for (i, p) in engine.genus_polynomials(8)?.iter().enumerate() {
            let n = i + 1;
            let total = BigInt::from(1u8) << (4 * n - 2);
            if p.eval_at_one() != total {
                problems.push(format!("n = {n}: α(1) = {}", p.eval_at_one()));
            }
            if p.coeff(0) != BigInt::from(2u8) {
                problems.push(format!("n = {n}: constant term {}", p.coeff(0)));
            }
            if p.degree() != Some(n) {
                problems.push(format!("n = {n}: degree {:?}", p.degree()));
            }
        }
        Ok(verdict(problems, "α(1) = 2^(4n-2), constant 2, degree n for n = 1..8".into()))
    }));

    checks.push(run(9, "representative independence", Some(INDEPENDENCE_LIMIT), || {
        let report = check_representative_independence(spec, engine.derivation(), 2)?;
        let mut problems = Vec::new();
        let total: usize = report.types.iter().map(|t| t.representatives).sum();
        if total != 64 {
            problems.push(format!("{total} embeddings of D_2 classified"));
        }
        for t in &report.types {
            if t.representatives == 0 {
                problems.push(format!("{}: no representative in D_2", t.name));
            }
            if t.extension_counts != [16] {
                problems.push(format!("{}: extension counts {:?}", t.name, t.extension_counts));
            }
            if t.mismatches > 0 {
                problems.push(format!("{}: {} representatives disagree", t.name, t.mismatches));
            }
        }
        Ok(verdict(problems, format!("{} types, 64 embeddings, 16 extensions each", report.types.len())))
    }));

    checks.push(run(10, "chain structure", None, || {
        let mut problems = Vec::new();
        for n in 1..=8 {
            let fg = build_fasciagraph(spec, n)?;
            let (v, e, d3) = (fg.graph.vertex_count(), fg.graph.edge_count(), fg.degree_count(3));
            if (v, e, d3) != (4 * (n + 1), 6 * n + 3, 4 * n - 2) {
                problems.push(format!("n = {n}: {v} vertices, {e} edges, {d3} of degree 3"));
            }
        }
        let d1 = build_fasciagraph(spec, 1)?;
        if theta_branch_lengths(&d1.graph) != Some(vec![3, 3, 3]) {
            problems.push("D_1 is not a (3,3,3) theta graph".into());
        }
        Ok(verdict(problems, "counts for n = 1..8; D_1 is a (3,3,3) theta graph".into()))
    }));

    checks.push(run(11, "scaling", Some(SCALE_LIMIT), || {
        let p = engine.genus_polynomial(SCALE_N, Method::TransferReduced, &opts.limits)?;
        let want = BigInt::from(1u8) << (4 * SCALE_N - 2);
        Ok(if p.eval_at_one() == want {
            (true, format!("α(D_{SCALE_N}, 1) = 2^{}", 4 * SCALE_N - 2))
        } else {
            (false, format!("α(D_{SCALE_N}, 1) is not 2^{}", 4 * SCALE_N - 2))
        })
    }));

    Ok(Report { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fault_is_named() {
        let opts = CertifyOptions { max_brute_n: 2, inject_fault: true, ..Default::default() };
        let report = certify(&opts).unwrap();
        let q = report.get(4).next().unwrap();
        assert_eq!(q.status, Status::Fail);
        assert!(q.detail.contains("Q(τ1,τ0)"), "{}", q.detail);
        // The fault also breaks everything computed from the matrix.
        for c in [1, 5, 6, 7] {
            assert!(report.get(c).any(|x| x.status == Status::Fail), "criterion {c}");
        }
    }

    #[test]
    fn unfaulted_run() {
        let opts = CertifyOptions { max_brute_n: 3, ..Default::default() };
        let report = certify(&opts).unwrap();
        let failing: Vec<(u8, &str)> = report.failures().map(|c| (c.criterion, c.name)).collect();
        // Only the printed 6x6 comparison fails; see the README.
        assert_eq!(failing, vec![(4, "transfer matrix as printed")]);
        assert!(report.to_string().contains("1 of 13 checks failed"));
    }
}
