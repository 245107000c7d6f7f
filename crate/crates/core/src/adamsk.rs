//! Polynomials in Adams operations forming triangular bases of the connective
//! and periodic K-theory operation rings, and the congruences they induce.
//!
//! Operations are represented by their eigenvalue sequences on coefficient
//! groups. `action(n, m)` is the eigenvalue of the `n`-th family element on
//! the coefficient group of weight `m` (degree `2m` for ku, `2(p-1)m` for g).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::arith::{
    binomial, check_q, find_q, gaussian, int, is_p_local_int, pow_rat, AdamsGenerators, ArithError, Prime, Rational,
};
use crate::lattice::{lower_triangular_inverse, solve, CongruenceSystem, SolutionLattice};

pub use crate::lattice::CongruenceVector;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AdamsError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("family {family} is not defined at p = {p}")]
    WrongPrime { family: FamilyKind, p: u64 },
    #[error("unknown family '{0}' (expected phi_ku, Phi_KU, phihat_g or zeta_ku2)")]
    UnknownFamily(String),
    #[error("binomial offset j = {j} must satisfy j <= p - 2 = {max}")]
    OffsetRange { j: u64, max: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyKind {
    #[serde(rename = "phi_ku")]
    PhiKu,
    #[serde(rename = "Phi_KU")]
    PhiKU,
    #[serde(rename = "phihat_g")]
    PhihatG,
    #[serde(rename = "zeta_ku2")]
    ZetaKu2,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::PhiKu => "phi_ku",
            FamilyKind::PhiKU => "Phi_KU",
            FamilyKind::PhihatG => "phihat_g",
            FamilyKind::ZetaKu2 => "zeta_ku2",
        })
    }
}

impl FromStr for FamilyKind {
    type Err = AdamsError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "phi_ku" | "phi" => Ok(FamilyKind::PhiKu),
            "Phi_KU" | "Phi" => Ok(FamilyKind::PhiKU),
            "phihat_g" | "phihat" => Ok(FamilyKind::PhihatG),
            "zeta_ku2" | "zeta" => Ok(FamilyKind::ZetaKu2),
            other => Err(AdamsError::UnknownFamily(other.to_string())),
        }
    }
}

/// One of the triangular families together with the data fixing its actions.
#[derive(Debug, Clone, PartialEq)]
pub struct AdamsFamily {
    kind: FamilyKind,
    p: Prime,
    q: i64,
    qhat: Rational,
}

impl AdamsFamily {
    /// `q_override` must be primitive modulo `p^2`; it is ignored for `zeta_ku2`.
    pub fn new(kind: FamilyKind, p: Prime, q_override: Option<i64>) -> Result<Self, AdamsError> {
        match (kind, p.is_odd()) {
            (FamilyKind::ZetaKu2, false) => {
                return Ok(AdamsFamily { kind, p, q: 3, qhat: int(3) });
            }
            (FamilyKind::ZetaKu2, true) | (_, false) => {
                return Err(AdamsError::WrongPrime { family: kind, p: p.get() })
            }
            _ => {}
        }
        let q = match q_override {
            Some(q) => check_q(p, q)?,
            None => find_q(p).q(),
        };
        let qhat = pow_rat(&int(q), p.get() as i64 - 1);
        Ok(AdamsFamily { kind, p, q, qhat })
    }

    /// The family spanning ku_(p) operations: `phi_ku` for odd `p`, `zeta_ku2` for `p = 2`.
    pub fn connective(p: Prime, q_override: Option<i64>) -> Result<Self, AdamsError> {
        let kind = if p.is_odd() { FamilyKind::PhiKu } else { FamilyKind::ZetaKu2 };
        Self::new(kind, p, q_override)
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn qhat(&self) -> &Rational {
        &self.qhat
    }

    /// The weight at position `j` of the index set on which the family is
    /// triangular: `0, 1, -1, 2, -2, ...` for `Phi_KU`, `j` otherwise.
    pub fn index_point(&self, j: usize) -> i64 {
        match self.kind {
            FamilyKind::PhiKU => periodic_point(j),
            _ => j as i64,
        }
    }

    /// Eigenvalue of the `n`-th element on weight `m`.
    pub fn action(&self, n: usize, m: i64) -> Rational {
        let qr = int(self.q);
        match self.kind {
            FamilyKind::PhiKu => {
                let qm = pow_rat(&qr, m);
                (0..n).map(|i| &qm - pow_rat(&qr, i as i64)).product()
            }
            FamilyKind::PhihatG => {
                let qm = pow_rat(&self.qhat, m);
                (0..n).map(|i| &qm - pow_rat(&self.qhat, i as i64)).product()
            }
            FamilyKind::PhiKU => {
                let qm = pow_rat(&qr, m);
                (0..n).map(|i| &qm - pow_rat(&qr, periodic_point(i))).product()
            }
            FamilyKind::ZetaKu2 => zeta_action(n, m),
        }
    }

    /// The action matrix `M[j][n] = action(n, index_point(j))` for `j, n <= big_n`.
    pub fn action_matrix(&self, big_n: usize) -> Vec<Vec<Rational>> {
        (0..=big_n).map(|j| (0..=big_n).map(|n| self.action(n, self.index_point(j))).collect()).collect()
    }

    /// Solves `lambda_j = sum_{n<=j} a_n action(n, index_point(j))`.
    pub fn expand(&self, lambda: &[Rational]) -> Expansion {
        let mut a: Vec<Rational> = Vec::with_capacity(lambda.len());
        for (j, l) in lambda.iter().enumerate() {
            let m = self.index_point(j);
            let mut r = l.clone();
            for (n, an) in a.iter().enumerate() {
                if !an.is_zero() {
                    r -= an * self.action(n, m);
                }
            }
            a.push(r / self.action(j, m));
        }
        let integral = a.iter().all(|x| is_p_local_int(self.p, x));
        Expansion { coefficients: a, integral }
    }

    /// The action sequence of `sum a_n f_n` on the first `a.len()` index points.
    pub fn evaluate(&self, a: &[Rational]) -> Vec<Rational> {
        (0..a.len())
            .map(|j| {
                let m = self.index_point(j);
                a.iter()
                    .enumerate()
                    .take(j + 1)
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(n, x)| x * self.action(n, m))
                    .fold(Rational::zero(), |s, t| s + t)
            })
            .collect()
    }
}

fn periodic_point(j: usize) -> i64 {
    let k = j.div_ceil(2) as i64;
    if j % 2 == 1 {
        k
    } else {
        -k
    }
}

/// `theta_r(X) = prod_{i<r} (X - 3^{2i})`.
fn theta(r: usize, x: &Rational) -> Rational {
    (0..r).map(|i| x - pow_rat(&int(3), 2 * i as i64)).product()
}

/// Coefficient of `zeta_{2m-2i+1}` in `zeta_{2m}`.
pub fn zeta_recursion_coefficient(m: usize, i: usize) -> Rational {
    let three = int(3);
    theta(i, &three) * theta(i, &pow_rat(&three, 2 * m as i64)) / (int(2) * theta(i, &pow_rat(&three, 2 * i as i64)))
}

fn zeta_action(n: usize, w: i64) -> Rational {
    let three = int(3);
    let psi3 = pow_rat(&three, w);
    let psi_minus = if w.rem_euclid(2) == 0 { int(1) } else { int(-1) };
    let m = n / 2;
    if n % 2 == 1 {
        (psi_minus - int(1)) * (0..m).map(|i| &psi3 - pow_rat(&three, 2 * i as i64 + 1)).product::<Rational>()
    } else {
        let mut acc: Rational = (0..m).map(|i| &psi3 - pow_rat(&three, 2 * i as i64)).product();
        for i in 1..=m {
            acc += zeta_recursion_coefficient(m, i) * zeta_action(2 * m - 2 * i + 1, w);
        }
        acc
    }
}

/// Result of a triangular expansion.
#[derive(Debug, Clone, PartialEq)]
pub struct Expansion {
    pub coefficients: Vec<Rational>,
    pub integral: bool,
}

pub fn family_action(f: &AdamsFamily, n: usize, m: i64) -> Rational {
    f.action(n, m)
}

pub fn expand_in_family(f: &AdamsFamily, lambda: &[Rational]) -> Expansion {
    f.expand(lambda)
}

/// `C_{n,i} = (-1)^{n-i} qhat^{binom(n-i, 2)} [n i]_{qhat} / p^{delta_p(n)}`.
pub fn c_vector(p: Prime, q: i64, n: usize) -> Result<CongruenceVector, AdamsError> {
    let q = check_q(p, q)?;
    let qhat = pow_rat(&int(q), p.get() as i64 - 1);
    let denom = crate::arith::p_pow(p, -(crate::arith::delta_p(p, n as u64) as i64));
    let entries = (0..=n)
        .map(|i| {
            let k = (n - i) as i64;
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            sign * pow_rat(&qhat, k * (k - 1) / 2) * gaussian(n as u64, i as u64, &qhat) * &denom
        })
        .collect();
    Ok(CongruenceVector::new(n, entries))
}

/// `C_r . mu in Z_(p)` for each `r <= n`.
pub fn check_g_congruences(p: Prime, q: i64, mu: &[Rational], n: usize) -> Result<Vec<bool>, AdamsError> {
    (0..=n).map(|r| Ok(is_p_local_int(p, &c_vector(p, q, r)?.apply(mu)))).collect()
}

/// The Gaussian congruence system `C_0..C_n` on `mu_0..mu_n`.
pub fn g_congruence_system(p: Prime, q: i64, n: usize) -> Result<CongruenceSystem, AdamsError> {
    let rows = (0..=n).map(|r| c_vector(p, q, r).map(|c| c.padded(n + 1))).collect::<Result<Vec<_>, _>>()?;
    Ok(CongruenceSystem::new(p, n, rows).expect("rows padded to n + 1"))
}

/// The ku_(p) system on `lambda_0..lambda_N`: realizability means integrality of
/// every coefficient of the expansion in the connective family, i.e. each row
/// of the inverse action matrix.
pub fn ku_congruence_system(p: Prime, big_n: usize) -> Result<CongruenceSystem, AdamsError> {
    let f = AdamsFamily::connective(p, None)?;
    let inv = lower_triangular_inverse(&f.action_matrix(big_n));
    Ok(CongruenceSystem::new(p, big_n, inv).expect("square matrix"))
}

/// The ku_(p) solution lattice together with its normalized rows.
pub fn ku_lattice(p: Prime, big_n: usize) -> Result<SolutionLattice, AdamsError> {
    Ok(solve(&ku_congruence_system(p, big_n)?))
}

/// Expansion of the connective action sequence of `Phi_n` (weights `0..=big_n`)
/// in the `phi_ku` family.
pub fn phi_big_in_phi(p: Prime, q: i64, n: usize, big_n: usize) -> Result<Expansion, AdamsError> {
    let big = AdamsFamily::new(FamilyKind::PhiKU, p, Some(q))?;
    let small = AdamsFamily::new(FamilyKind::PhiKu, p, Some(q))?;
    let lambda: Vec<Rational> = (0..=big_n).map(|m| big.action(n, m as i64)).collect();
    Ok(small.expand(&lambda))
}

/// The finite difference `((-1)^{j-l} binom(j, l))_l`, placed on ku indices
/// `(p-1)k .. (p-1)k + j`.
pub fn binomial_mu_congruence(p: Prime, j: u64, k: u64) -> Result<CongruenceVector, AdamsError> {
    let max = p.get().saturating_sub(2);
    if j > max {
        return Err(AdamsError::OffsetRange { j, max });
    }
    let start = ((p.get() - 1) * k) as usize;
    let mut entries = vec![Rational::zero(); start];
    for l in 0..=j {
        let sign = if (j - l).is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
        entries.push(Rational::from_integer(sign * binomial(j, l)));
    }
    Ok(CongruenceVector::new(start + j as usize, entries))
}

/// Exploratory: compares the ku_(p) lattice on `lambda_0..lambda_N` with the
/// lattice of sequences whose progressions `lambda_{j + (p-1)k}` each satisfy
/// the g-congruences.
pub fn ku_progression_check(p: Prime, big_n: usize) -> Result<ProgressionReport, AdamsError> {
    if !p.is_odd() {
        return Err(AdamsError::WrongPrime { family: FamilyKind::PhihatG, p: p.get() });
    }
    let q = find_q(p).q();
    let ku = ku_lattice(p, big_n)?;
    let step = (p.get() - 1) as usize;
    let mut rows = Vec::new();
    for j in 0..step.min(big_n + 1) {
        let len = (big_n - j) / step;
        for r in 0..=len {
            let c = c_vector(p, q, r)?;
            let mut row = vec![Rational::zero(); big_n + 1];
            for (k, x) in c.entries.iter().enumerate() {
                row[j + k * step] = x.clone();
            }
            rows.push(row);
        }
    }
    let prog = solve(&CongruenceSystem::new(p, big_n, rows).expect("rows sized"));
    Ok(ProgressionReport {
        p: p.get(),
        n: big_n,
        ku_pivots: ku.pivots().to_vec(),
        progression_pivots: prog.pivots().to_vec(),
        ku_in_progressions: ku.leq(&prog).expect("same shape"),
        progressions_in_ku: prog.leq(&ku).expect("same shape"),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProgressionReport {
    pub p: u64,
    pub n: usize,
    pub ku_pivots: Vec<u32>,
    pub progression_pivots: Vec<u32>,
    pub ku_in_progressions: bool,
    pub progressions_in_ku: bool,
}

/// The generators used for a prime: `q` for odd `p`, `(3, -1)` for `p = 2`.
pub fn generators(p: Prime) -> AdamsGenerators {
    find_q(p)
}
