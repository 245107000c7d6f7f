//! Finite-level verification that the diagonal BP operations are exactly the
//! Adams subalgebra: for each `n`, the BP congruence lattice on `mu_0..mu_n`
//! coincides with the Gaussian (or, at `p = 2`, ku) lattice.
//!
//! For each `n` the pipeline computes
//!
//! * `L_g`: the lattice of the Adams-side congruences `c_0..c_n`;
//! * `C_n^BP` from the element `d_n`, and `L_T` cut out by `c_0..c_{n-1}, C_n^BP`;
//! * the projection onto `mu_0..mu_n` of the lattice of all `D^gamma_delta`
//!   integrality conditions from `t`-monomials of weight at most `W`;
//!
//! and checks `L_g = L_T` (with the triangular-shape hypotheses verified) and
//! `L_g` inside the sampled BP lattice. A full-weight inclusion at dimension
//! `W + 1` identifies the offending `gamma` when it fails.

use std::time::Instant;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::adamsk::{g_congruence_system, ku_lattice, AdamsError, AdamsFamily, FamilyKind};
use crate::arith::{delta_p, find_q, int, is_p_local_int, is_p_local_unit, rat, val_p, Prime, Rational};
use crate::fgl::{BPContext, FglError};
use crate::hopf::{BpRow, HopfAlgebroid, HopfError};
use crate::lattice::{
    dot, lower_triangular_inverse, sandwich_check, solve, CongruenceSystem, CongruenceVector, LatticeError,
    SandwichVerdict, SolutionLattice,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CentreError {
    #[error(transparent)]
    Arith(#[from] crate::arith::ArithError),
    #[error(transparent)]
    Adams(#[from] AdamsError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Fgl(#[from] FglError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("verification failed at n = {n}: {detail}; gamma = {gamma:?}; witness mu = [{}]", witness.join(", "))]
    Failure { n: usize, gamma: Option<Vec<u32>>, witness: Vec<String>, detail: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentreConfig {
    pub p: Prime,
    pub n_max: usize,
    /// Weight bound for sampled congruences; `None` picks `delta_p(n_max)`.
    pub weight: Option<u32>,
    pub q: Option<i64>,
    pub timings: bool,
}

impl CentreConfig {
    pub fn new(p: Prime, n_max: usize) -> Self {
        CentreConfig { p, n_max, weight: None, q: None, timings: false }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CentreRow {
    pub n: usize,
    pub delta: u64,
    pub pivots_adams: Vec<u32>,
    pub c_bp: Vec<String>,
    pub c_bp_valuations: Vec<String>,
    pub pivots_t: Vec<u32>,
    pub pivots_bp_sample: Vec<u32>,
    pub included_in_sample: bool,
    pub sample_equal: bool,
    pub sandwich: SandwichVerdict,
    pub equal: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct CentreReport {
    pub p: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<i64>,
    pub n_max: usize,
    pub weight: u32,
    pub warnings: Vec<String>,
    pub bp_rows: usize,
    pub full_weight_inclusion: bool,
    pub realizable: bool,
    pub rows: Vec<CentreRow>,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<Vec<(String, f64)>>,
}

/// Runs the pipeline with default `q` and weight `W` (raised to `delta_p(n_max)` if lower).
pub fn verify_centre_bp(p: Prime, n_max: usize, weight: Option<u32>) -> Result<CentreReport, CentreError> {
    verify_centre(&CentreConfig { weight, ..CentreConfig::new(p, n_max) })
}

pub fn verify_centre(cfg: &CentreConfig) -> Result<CentreReport, CentreError> {
    let p = cfg.p;
    let mut timings = Vec::new();
    let mut clock = Instant::now();
    let mut lap = |name: &str, timings: &mut Vec<(String, f64)>| {
        timings.push((name.to_string(), clock.elapsed().as_secs_f64() * 1e3));
        clock = Instant::now();
    };

    let needed = delta_p(p, cfg.n_max as u64) as u32;
    let mut warnings = Vec::new();
    let weight = match cfg.weight {
        Some(w) if w < needed => {
            warnings.push(format!("weight bound {w} raised to {needed}, the weight of d_{}", cfg.n_max));
            needed
        }
        Some(w) => w,
        None => needed,
    };
    let q = if p.is_odd() { Some(cfg.q.map_or(Ok(find_q(p).q()), |q| crate::arith::check_q(p, q))?) } else { None };

    let adams = AdamsSide::new(p, q, weight as usize)?;
    lap("adams", &mut timings);

    let hopf = HopfAlgebroid::new(BPContext::new(p, q, weight)?)?;
    let bp_rows = hopf.bp_congruence_rows(weight)?;
    let big = weight as usize;
    let bp_system = CongruenceSystem::from_ragged(p, big, bp_rows.iter().map(|r| r.form.to_vec(big + 1)));
    let bp_full = solve(&bp_system);
    lap("bp rows", &mut timings);

    // full-weight inclusion, with a gamma witness on failure
    let g_full = adams.lattice(big);
    if let Some(col) = g_full.witness_outside(&bp_full) {
        let row = bp_rows.iter().find(|r| !is_p_local_int(p, &r.form.evaluate(&col)));
        return Err(failure(cfg.n_max, row, &col, "Adams lattice not inside the sampled BP lattice"));
    }

    let mut rows = Vec::with_capacity(cfg.n_max + 1);
    for n in 0..=cfg.n_max {
        let row = centre_row(&adams, &hopf, &bp_full, n)?;
        rows.push(row);
    }
    lap("per-n", &mut timings);

    let realizable = adams.realizable(cfg.n_max);
    if !realizable {
        return Err(CentreError::Failure {
            n: cfg.n_max,
            gamma: None,
            witness: Vec::new(),
            detail: "a basis column of the Adams lattice has a non-integral family expansion".into(),
        });
    }
    let verdict = rows.iter().all(|r| r.equal && r.included_in_sample && r.sandwich.equal);
    Ok(CentreReport {
        p: p.get(),
        q,
        n_max: cfg.n_max,
        weight,
        warnings,
        bp_rows: bp_rows.len(),
        full_weight_inclusion: true,
        realizable,
        rows,
        verdict,
        timings_ms: cfg.timings.then_some(timings),
    })
}

fn centre_row(
    adams: &AdamsSide,
    hopf: &HopfAlgebroid,
    bp_full: &SolutionLattice,
    n: usize,
) -> Result<CentreRow, CentreError> {
    let p = adams.p;
    let l_g = adams.lattice(n);
    let d = hopf.construct_d(n as u64)?;
    let c_bp = CongruenceVector::new(n, d.coefficients.clone());

    let base_rows: Vec<Vec<Rational>> = adams.rows[..n].iter().map(|c| c.padded(n + 1)).collect();
    let base = CongruenceSystem::new(p, n, base_rows.clone())?;
    let mut t_rows = base_rows;
    t_rows.push(c_bp.padded(n + 1));
    let l_t = solve(&CongruenceSystem::new(p, n, t_rows)?);

    let sample = project(bp_full, n);
    let included = l_g.leq(&sample)?;
    if !included {
        let col = l_g.witness_outside(&sample).expect("not included");
        return Err(failure(n, None, &col, "Adams lattice not inside the projected BP lattice"));
    }

    let sandwich = sandwich_check(&base, &adams.rows[n], &c_bp)?;
    let equal = l_g.equals(&l_t)?;
    if !equal {
        let col = l_g.witness_outside(&l_t).or_else(|| l_t.witness_outside(&l_g)).unwrap_or_default();
        return Err(failure(n, None, &col, "C_n^BP does not cut out the Adams lattice"));
    }
    Ok(CentreRow {
        n,
        delta: delta_p(p, n as u64),
        pivots_adams: l_g.pivots().to_vec(),
        c_bp: d.coefficients.iter().map(|c| c.to_string()).collect(),
        c_bp_valuations: d.coefficients.iter().map(|c| val_p(p, c).to_string()).collect(),
        pivots_t: l_t.pivots().to_vec(),
        pivots_bp_sample: sample.pivots().to_vec(),
        included_in_sample: included,
        sample_equal: sample.equals(&l_g)?,
        sandwich,
        equal,
    })
}

fn failure(n: usize, row: Option<&BpRow>, witness: &[Rational], detail: &str) -> CentreError {
    CentreError::Failure {
        n,
        gamma: row.map(|r| r.gamma.clone()),
        witness: witness.iter().map(|x| x.to_string()).collect(),
        detail: detail.to_string(),
    }
}

/// Projection of a triangular lattice onto its first `n + 1` coordinates:
/// the span of its truncated columns `0..=n` (later columns project to zero).
pub fn project(l: &SolutionLattice, n: usize) -> SolutionLattice {
    let dim = n + 1;
    let b: Vec<Vec<Rational>> = (0..dim).map(|i| (0..dim).map(|k| l.columns()[k][i].clone()).collect()).collect();
    // rows of B^{-1} cut out the span of the columns of B
    solve(&CongruenceSystem::new(l.p(), n, lower_triangular_inverse(&b)).expect("square"))
}

/// The Adams-side congruences: Gaussian rows for odd `p`, normalized ku rows for `p = 2`.
struct AdamsSide {
    p: Prime,
    family: AdamsFamily,
    rows: Vec<CongruenceVector>,
}

impl AdamsSide {
    fn new(p: Prime, q: Option<i64>, top: usize) -> Result<Self, CentreError> {
        if p.is_odd() {
            let q = q.expect("odd primes carry q");
            let sys = g_congruence_system(p, q, top)?;
            let rows = sys.rows().iter().enumerate().map(|(r, v)| CongruenceVector::new(r, v[..=r].to_vec())).collect();
            Ok(AdamsSide { p, family: AdamsFamily::new(FamilyKind::PhihatG, p, Some(q))?, rows })
        } else {
            let rows = ku_lattice(p, top)?.normalized_rows()?;
            Ok(AdamsSide { p, family: AdamsFamily::new(FamilyKind::ZetaKu2, p, None)?, rows })
        }
    }

    fn lattice(&self, n: usize) -> SolutionLattice {
        solve(&CongruenceSystem::from_ragged(self.p, n, self.rows[..=n].iter().map(|c| c.entries.clone())))
    }

    /// Every basis column of the lattice on `mu_0..mu_n` expands integrally in the family.
    fn realizable(&self, n: usize) -> bool {
        self.lattice(n).columns().iter().all(|c| self.family.expand(c).integral)
    }
}

/// Realizability of the Adams lattice as integral family expansions.
pub fn adams_lattice(
    p: Prime,
    q: Option<i64>,
    n: usize,
) -> Result<(SolutionLattice, Vec<CongruenceVector>), CentreError> {
    let side = AdamsSide::new(p, q.or_else(|| p.is_odd().then(|| find_q(p).q())), n)?;
    Ok((side.lattice(n), side.rows))
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct InjectionReport {
    pub p: u64,
    pub n_max: usize,
    pub family: FamilyKind,
    pub trials: usize,
    pub failures: Vec<String>,
}

impl InjectionReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For finitely supported `a`, the action of `sum a_n f_n` vanishes below the
/// first nonzero index `m`, equals `a_m action(m, m) != 0` there, and on
/// weight `w` depends only on `a_0..a_w`.
pub fn verify_basis_injections(
    p: Prime,
    n_max: usize,
    trials: usize,
    seed: u64,
) -> Result<InjectionReport, CentreError> {
    let f = AdamsFamily::connective(p, None)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut cases: Vec<Vec<Rational>> = Vec::new();
    for m in 0..=n_max {
        let mut e = vec![Rational::zero(); n_max + 1];
        e[m] = int(1);
        cases.push(e);
    }
    for _ in 0..trials {
        let m = rng.gen_range(0..=n_max);
        let a: Vec<Rational> =
            (0..=n_max).map(|k| if k < m { Rational::zero() } else { random_local_int(p, &mut rng, k == m) }).collect();
        cases.push(a);
    }
    for a in &cases {
        let m = a.iter().position(|x| !x.is_zero()).expect("nonzero");
        let acts = f.evaluate(a);
        if acts[..m].iter().any(|x| !x.is_zero()) {
            failures.push(format!("nonzero action below index {m} for a = {a:?}"));
        }
        let expected = &a[m] * f.action(m, m as i64);
        if expected.is_zero() || acts[m] != expected {
            failures.push(format!("action at {m} is {} (expected {expected})", acts[m]));
        }
        for w in 0..a.len() {
            if f.evaluate(&a[..=w])[w] != acts[w] {
                failures.push(format!("action on weight {w} depends on coefficients beyond {w}"));
            }
        }
    }
    if cases[0].iter().skip(1).all(Zero::is_zero) && f.evaluate(&cases[0]).iter().any(|x| *x != int(1)) {
        failures.push("identity does not act as 1".into());
    }
    Ok(InjectionReport { p: p.get(), n_max, family: f.kind(), trials: cases.len(), failures })
}

fn random_local_int(p: Prime, rng: &mut impl Rng, nonzero: bool) -> Rational {
    loop {
        let num: i64 = rng.gen_range(-50..=50);
        let mut den: i64 = rng.gen_range(1..=20);
        while den % p.get() as i64 == 0 {
            den += 1;
        }
        if !nonzero || num != 0 {
            return rat(num, den);
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct MultiplicativityReport {
    pub p: u64,
    pub max_weight: u32,
    pub pairs: usize,
    pub failures: Vec<String>,
}

/// `Psi^a Psi^b = Psi^{ab}` on eigenvalues for BP (`a^{(p-1)w}` on weight
/// `w`) and on K-theory (`a^w`), for `(1, 1)`, `(q, 1/q)` and random unit pairs.
pub fn adams_multiplicativity_check(
    p: Prime,
    max_weight: u32,
    samples: usize,
    seed: u64,
) -> Result<MultiplicativityReport, CentreError> {
    let ctx = BPContext::new(p, None, max_weight)?;
    let g = find_q(p).q();
    let mut pairs = vec![(int(1), int(1)), (int(g), rat(1, g))];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while pairs.len() < samples + 2 {
        let a = random_local_int(p, &mut rng, true);
        let b = random_local_int(p, &mut rng, true);
        if is_p_local_unit(p, &a) && is_p_local_unit(p, &b) {
            pairs.push((a, b));
        }
    }
    let mut failures = Vec::new();
    for (a, b) in &pairs {
        let ab = a * b;
        for w in 0..=max_weight {
            let bp = ctx.adams_on_coeff(a, w)? * ctx.adams_on_coeff(b, w)?;
            if bp != ctx.adams_on_coeff(&ab, w)? {
                failures.push(format!("BP: ({a}, {b}) on weight {w}"));
            }
            let k = crate::arith::pow_rat(a, w as i64) * crate::arith::pow_rat(b, w as i64);
            if k != crate::arith::pow_rat(&ab, w as i64) {
                failures.push(format!("K: ({a}, {b}) on weight {w}"));
            }
        }
    }
    if pairs[1].0.clone() * &pairs[1].1 != int(1) {
        failures.push("q * q^-1 is not the identity".into());
    }
    Ok(MultiplicativityReport { p: p.get(), max_weight, pairs: pairs.len(), failures })
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ScanPoint {
    pub weight: u32,
    pub bp_rows: usize,
    pub pivots: Vec<u32>,
    pub equals_adams: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ScanReport {
    pub p: u64,
    pub n: usize,
    pub adams_pivots: Vec<u32>,
    pub points: Vec<ScanPoint>,
    /// Smallest scanned weight from which the projected BP lattice equals the Adams lattice.
    pub stable_from: Option<u32>,
}

/// Projected BP lattice on `mu_0..mu_n` from all congruences of weight `<= W`,
/// for `W` up to `max_weight`, compared with the Adams lattice.
pub fn scan_stabilization(p: Prime, n: usize, max_weight: u32) -> Result<ScanReport, CentreError> {
    let (l_g, _) = adams_lattice(p, None, n)?;
    let hopf = HopfAlgebroid::new(BPContext::new(p, None, max_weight)?)?;
    let all_rows = hopf.bp_congruence_rows(max_weight)?;
    let mut points = Vec::new();
    for w in 0..=max_weight {
        let big = (w as usize).max(n);
        let rows: Vec<Vec<Rational>> = all_rows
            .iter()
            .filter(|r| hopf.context().lt_table().weight_of(&gamma_as_lt(&hopf, &r.gamma)) <= w)
            .map(|r| r.form.to_vec(big + 1))
            .collect();
        let count = rows.len();
        let lat = project(&solve(&CongruenceSystem::new(p, big, rows)?), n);
        points.push(ScanPoint {
            weight: w,
            bp_rows: count,
            pivots: lat.pivots().to_vec(),
            equals_adams: lat.equals(&l_g)?,
        });
    }
    let stable_from =
        points.iter().rposition(|pt| !pt.equals_adams).map_or(Some(0), |i| points.get(i + 1).map(|pt| pt.weight));
    Ok(ScanReport { p: p.get(), n, adams_pivots: l_g.pivots().to_vec(), points, stable_from })
}

fn gamma_as_lt(hopf: &HopfAlgebroid, gamma: &[u32]) -> Vec<u32> {
    let k = hopf.context().num_gens();
    let mut e = vec![0; 2 * k];
    e[k..].copy_from_slice(gamma);
    e
}

/// `c . mu` for a normalized Adams row; exposed for reports.
pub fn apply_row(row: &CongruenceVector, mu: &[Rational]) -> Rational {
    dot(&row.entries, mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn p3_n1() {
        let r = verify_centre_bp(pr(3), 1, None).unwrap();
        assert!(r.verdict);
        assert_eq!(r.rows[1].pivots_adams, vec![0, 1]);
    }

    #[test]
    fn p2_small() {
        let r = verify_centre_bp(pr(2), 2, None).unwrap();
        assert!(r.verdict);
        assert_eq!(r.weight, 3);
    }

    #[test]
    fn weight_raised() {
        let r = verify_centre_bp(pr(3), 2, Some(1)).unwrap();
        assert_eq!(r.weight, 2);
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn injections_and_multiplicativity() {
        assert!(verify_basis_injections(pr(3), 6, 20, 1).unwrap().ok());
        assert!(verify_basis_injections(pr(2), 6, 20, 1).unwrap().ok());
        assert!(adams_multiplicativity_check(pr(3), 10, 10, 7).unwrap().failures.is_empty());
    }

    #[test]
    fn scan_runs() {
        let s = scan_stabilization(pr(3), 2, 4).unwrap();
        assert_eq!(s.points.len(), 5);
        assert!(s.points.last().unwrap().equals_adams);
    }
}
