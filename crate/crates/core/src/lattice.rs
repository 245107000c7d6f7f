//! Solution lattices of finite congruence systems over `Z_(p)`.
//!
//! A system is a list of rational rows `c_r`, each imposing `c_r . mu in Z_(p)`
//! on `mu in Z_(p)^{n+1}`. Solutions form a full-rank lattice, stored in a
//! canonical lower-triangular column basis: column `j` vanishes above index
//! `j`, has `p^{e_j}` on the diagonal, and entries below the diagonal in row
//! `i` are integers in `[0, p^{e_i})`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{
    delta_p, is_p_local_int, is_p_local_unit, p_pow, parse_rational, residue_mod_p_pow, val_p, ArithError,
    ExtValuation, Prime, Rational,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("row {row} has length {found}, expected {expected}")]
    RowLength { row: usize, expected: usize, found: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("prime mismatch: {left} vs {right}")]
    PrimeMismatch { left: u64, right: u64 },
    #[error("hypothesis violated by {which} row {row}: {detail}")]
    Hypothesis { which: String, row: usize, detail: String },
    #[error("no row of the normalized shape exists at index {row}")]
    NotNormalizable { row: usize },
    #[error("input {field}: {detail}")]
    Input { field: String, detail: String },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Conditions `c_r . mu in Z_(p)` on `mu_0..mu_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct CongruenceSystem {
    p: Prime,
    n: usize,
    rows: Vec<Vec<Rational>>,
}

impl CongruenceSystem {
    pub fn new(p: Prime, n: usize, rows: Vec<Vec<Rational>>) -> Result<Self, LatticeError> {
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n + 1 {
                return Err(LatticeError::RowLength { row: i, expected: n + 1, found: r.len() });
            }
        }
        Ok(CongruenceSystem { p, n, rows })
    }

    /// Builds a system from rows of varying length, padding with zeros and
    /// truncating to `mu_0..mu_n`.
    ///
    /// Truncation is only meaningful for rows whose dropped entries are zero,
    /// or when the caller deliberately restricts to sequences vanishing above `n`.
    pub fn from_ragged(p: Prime, n: usize, rows: impl IntoIterator<Item = Vec<Rational>>) -> Self {
        let rows = rows
            .into_iter()
            .map(|mut r| {
                r.resize(n + 1, Rational::zero());
                r
            })
            .collect();
        CongruenceSystem { p, n, rows }
    }

    pub fn empty(p: Prime, n: usize) -> Self {
        CongruenceSystem { p, n, rows: Vec::new() }
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn push(&mut self, row: Vec<Rational>) -> Result<(), LatticeError> {
        if row.len() != self.n + 1 {
            return Err(LatticeError::RowLength { row: self.rows.len(), expected: self.n + 1, found: row.len() });
        }
        self.rows.push(row);
        Ok(())
    }

    /// Index of the first row violated by `mu`, if any.
    pub fn first_violation(&self, mu: &[Rational]) -> Option<usize> {
        self.rows.iter().position(|r| !is_p_local_int(self.p, &dot(r, mu)))
    }

    pub fn is_satisfied_by(&self, mu: &[Rational]) -> bool {
        self.first_violation(mu).is_none()
    }

    pub fn solve(&self) -> SolutionLattice {
        solve(self)
    }
}

/// A congruence row `c_{n,0..n}` in the normalized triangular shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceVector {
    pub n: usize,
    #[serde(serialize_with = "ser_rationals")]
    pub entries: Vec<Rational>,
}

impl CongruenceVector {
    pub fn new(n: usize, entries: Vec<Rational>) -> Self {
        CongruenceVector { n, entries }
    }

    /// `c . mu`, treating missing entries of either side as zero.
    pub fn apply(&self, mu: &[Rational]) -> Rational {
        dot(&self.entries, mu)
    }

    /// Checks `c_{n,i} in p^{-e}Z_(p)` for `i < n`, `c_{n,n} in p^{-e}Z_(p)^x`
    /// and `c_{n,i} = 0` for `i > n`, where `e = budget`.
    pub fn check_shape(&self, p: Prime, budget: u64) -> Result<(), String> {
        let scale = p_pow(p, budget as i64);
        for (i, c) in self.entries.iter().enumerate() {
            let s = c * &scale;
            let ok = match i.cmp(&self.n) {
                std::cmp::Ordering::Less => is_p_local_int(p, &s),
                std::cmp::Ordering::Equal => is_p_local_unit(p, &s),
                std::cmp::Ordering::Greater => c.is_zero(),
            };
            if !ok {
                return Err(format!("entry {i} = {c} has valuation {} against budget {budget}", val_p(p, c)));
            }
        }
        if self.entries.len() <= self.n {
            return Err(format!("missing diagonal entry {}", self.n));
        }
        Ok(())
    }

    pub fn padded(&self, len: usize) -> Vec<Rational> {
        let mut v = self.entries.clone();
        v.resize(len.max(v.len()), Rational::zero());
        v.truncate(len);
        v
    }
}

/// Lattice of solutions in canonical triangular form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionLattice {
    p: Prime,
    /// columns; `basis[j][i]` is entry `i` of column `j`
    basis: Vec<Vec<Rational>>,
    pivots: Vec<u32>,
}

impl SolutionLattice {
    /// The whole of `Z_(p)^{n+1}`.
    pub fn full(p: Prime, n: usize) -> Self {
        SolutionLattice { p, basis: identity(n + 1), pivots: vec![0; n + 1] }
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn n(&self) -> usize {
        self.basis.len() - 1
    }

    pub fn pivots(&self) -> &[u32] {
        &self.pivots
    }

    pub fn columns(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// `log_p` of the index in `Z_(p)^{n+1}`.
    pub fn log_index(&self) -> u64 {
        self.pivots.iter().map(|&e| e as u64).sum()
    }

    /// Exact membership by forward substitution.
    pub fn contains(&self, mu: &[Rational]) -> bool {
        self.coordinates(mu).is_some()
    }

    /// Integral coordinates of `mu` in the basis, if `mu` is a member.
    pub fn coordinates(&self, mu: &[Rational]) -> Option<Vec<Rational>> {
        if mu.len() != self.basis.len() {
            return None;
        }
        let mut x: Vec<Rational> = Vec::with_capacity(mu.len());
        for (i, m) in mu.iter().enumerate() {
            let mut r = m.clone();
            for (j, xj) in x.iter().enumerate() {
                r -= &self.basis[j][i] * xj;
            }
            let xi = r / &self.basis[i][i];
            if !is_p_local_int(self.p, &xi) {
                return None;
            }
            x.push(xi);
        }
        Some(x)
    }

    pub fn leq(&self, other: &SolutionLattice) -> Result<bool, LatticeError> {
        self.compatible(other)?;
        Ok(self.basis.iter().all(|b| other.contains(b)))
    }

    pub fn equals(&self, other: &SolutionLattice) -> Result<bool, LatticeError> {
        self.compatible(other)?;
        Ok(self.basis == other.basis)
    }

    fn compatible(&self, other: &SolutionLattice) -> Result<(), LatticeError> {
        if self.p != other.p {
            return Err(LatticeError::PrimeMismatch { left: self.p.get(), right: other.p.get() });
        }
        if self.basis.len() != other.basis.len() {
            return Err(LatticeError::DimensionMismatch { left: self.basis.len(), right: other.basis.len() });
        }
        Ok(())
    }

    /// A basis column not in `other`, if any.
    pub fn witness_outside(&self, other: &SolutionLattice) -> Option<Vec<Rational>> {
        self.basis.iter().find(|b| !other.contains(b)).cloned()
    }

    /// Rows `c_r = p^{-e_r}(mu_r + y)` with `y` an integral combination of
    /// `mu_0..mu_{r-1}`, one per index, defining this lattice.
    pub fn normalized_rows(&self) -> Result<Vec<CongruenceVector>, LatticeError> {
        let p = self.p;
        let mut out = Vec::with_capacity(self.basis.len());
        for r in 0..self.basis.len() {
            let e = self.pivots[r] as i64;
            let modulus = p_pow(p, e);
            // y_i coefficient rows (basis columns truncated to 0..r), then p^{e_r} e_j
            let mut m: Vec<Vec<Rational>> =
                (0..r).map(|i| (0..r).map(|j| self.basis[j][i].clone()).collect()).collect();
            for j in 0..r {
                let mut row = vec![Rational::zero(); r];
                row[j] = modulus.clone();
                m.push(row);
            }
            let target: Vec<Rational> = (0..r).map(|j| -&self.basis[j][r]).collect();
            let sol = integral_solution(p, &m, &target).ok_or(LatticeError::NotNormalizable { row: r })?;
            let inv = p_pow(p, -e);
            let mut entries: Vec<Rational> = sol[..r].iter().map(|y| reduce_mod(p, y, self.pivots[r]) * &inv).collect();
            entries.push(inv);
            out.push(CongruenceVector::new(r, entries));
        }
        Ok(out)
    }

    pub fn record(&self) -> LatticeRecord {
        LatticeRecord {
            p: self.p.get(),
            n: self.n(),
            pivots: self.pivots.clone(),
            basis: self.basis.iter().map(|c| c.iter().map(|x| x.to_string()).collect()).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "p = {}, n = {}, pivots = {:?}", self.p, self.n(), self.pivots);
        let dim = self.basis.len();
        for i in 0..dim {
            let row: Vec<String> = (0..dim).map(|j| self.basis[j][i].to_string()).collect();
            let _ = writeln!(s, "  [{}]", row.join(", "));
        }
        s
    }
}

/// Serializable form of a lattice: basis columns as exact rational strings.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct LatticeRecord {
    pub p: u64,
    pub n: usize,
    pub pivots: Vec<u32>,
    pub basis: Vec<Vec<String>>,
}

/// Input form of a system: `{"p": 3, "rows": [["-1/3", "1/3"]]}`.
#[derive(Debug, Clone, Deserialize)]
pub struct SystemInput {
    pub p: Option<u64>,
    pub n: Option<usize>,
    pub rows: Vec<Vec<String>>,
}

impl SystemInput {
    pub fn into_system(self, p_override: Option<u64>) -> Result<CongruenceSystem, LatticeError> {
        let p = p_override.or(self.p).ok_or_else(|| LatticeError::Input {
            field: "p".into(),
            detail: "prime not given in file or on the command line".into(),
        })?;
        let p = Prime::new(p)?;
        let width = self.rows.iter().map(Vec::len).max().unwrap_or(1);
        let n = self.n.unwrap_or(width.saturating_sub(1));
        let mut rows = Vec::with_capacity(self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            if r.len() > n + 1 {
                return Err(LatticeError::RowLength { row: i, expected: n + 1, found: r.len() });
            }
            let mut parsed = Vec::with_capacity(n + 1);
            for (j, s) in r.iter().enumerate() {
                parsed.push(
                    parse_rational(s)
                        .map_err(|e| LatticeError::Input { field: format!("rows[{i}][{j}]"), detail: e.to_string() })?,
                );
            }
            parsed.resize(n + 1, Rational::zero());
            rows.push(parsed);
        }
        CongruenceSystem::new(p, n, rows)
    }
}

/// Outcome of the sandwich comparison `S subseteq T => S = T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SandwichVerdict {
    pub included: bool,
    pub equal: bool,
}

/// `S` is cut out by `c_0..c_{n-1}, c_n`, `T` by `c_0..c_{n-1}, c_hat_n`. All
/// rows must have the triangular shape with budget `delta_p(r)`.
pub fn sandwich_check(
    base: &CongruenceSystem,
    cn: &CongruenceVector,
    cn_hat: &CongruenceVector,
) -> Result<SandwichVerdict, LatticeError> {
    let p = base.p();
    let n = cn.n;
    if cn_hat.n != n || base.rows().len() != n || base.n() < n {
        return Err(LatticeError::DimensionMismatch { left: base.rows().len(), right: n });
    }
    for (r, row) in base.rows().iter().enumerate() {
        let v = CongruenceVector::new(r, row.clone());
        v.check_shape(p, delta_p(p, r as u64)).map_err(|detail| LatticeError::Hypothesis {
            which: "base".into(),
            row: r,
            detail,
        })?;
    }
    let budget = delta_p(p, n as u64);
    cn.check_shape(p, budget).map_err(|detail| LatticeError::Hypothesis { which: "c_n".into(), row: n, detail })?;
    cn_hat.check_shape(p, budget).map_err(|detail| LatticeError::Hypothesis {
        which: "c_hat_n".into(),
        row: n,
        detail,
    })?;

    let dim = n + 1;
    let base_rows: Vec<Vec<Rational>> = base.rows().iter().map(|r| r[..dim].to_vec()).collect();
    let mut s_rows = base_rows.clone();
    s_rows.push(cn.padded(dim));
    let mut t_rows = base_rows;
    t_rows.push(cn_hat.padded(dim));
    let s = solve(&CongruenceSystem::new(p, n, s_rows)?);
    let t = solve(&CongruenceSystem::new(p, n, t_rows)?);
    let included = s.leq(&t)?;
    let equal = included && s.equals(&t)?;
    Ok(SandwichVerdict { included, equal })
}

pub fn solve(sys: &CongruenceSystem) -> SolutionLattice {
    let p = sys.p();
    let dim = sys.n() + 1;
    let mut cols = identity(dim);
    for row in sys.rows() {
        let forms: Vec<Rational> = cols.iter().map(|b| dot(row, b)).collect();
        let Some((jstar, v)) = forms
            .iter()
            .enumerate()
            .filter_map(|(j, f)| val_p(p, f).finite().map(|v| (j, v)))
            .min_by_key(|&(j, v)| (v, j))
        else {
            continue;
        };
        if v >= 0 {
            continue;
        }
        let pivot = forms[jstar].clone();
        let bstar = cols[jstar].clone();
        for (j, col) in cols.iter_mut().enumerate() {
            if j == jstar {
                *col = scale_vec(col, &p_pow(p, -v));
            } else if !forms[j].is_zero() {
                let m = &forms[j] / &pivot;
                axpy(col, &-m, &bstar);
            }
        }
    }
    hermite(p, cols)
}

/// Canonical column Hermite form of a full-rank integral basis.
fn hermite(p: Prime, mut cols: Vec<Vec<Rational>>) -> SolutionLattice {
    let dim = cols.len();
    let mut pivots = Vec::with_capacity(dim);
    for i in 0..dim {
        let (k, _) = (i..dim)
            .filter_map(|k| val_p(p, &cols[k][i]).finite().map(|v| (k, v)))
            .min_by_key(|&(k, v)| (v, k))
            .expect("solution lattices have full rank");
        cols.swap(i, k);
        let (e, unit) = crate::arith::split_p_power(p, &cols[i][i]).expect("nonzero pivot");
        let inv = unit.recip();
        cols[i] = scale_vec(&cols[i], &inv);
        pivots.push(e as u32);
        let piv = cols[i].clone();
        for col in cols.iter_mut().skip(i + 1) {
            if !col[i].is_zero() {
                let m = &col[i] / &piv[i];
                axpy(col, &-m, &piv);
            }
        }
    }
    for j in 0..dim {
        for i in j + 1..dim {
            let r = reduce_mod(p, &cols[j][i], pivots[i]);
            let m = (&cols[j][i] - &r) / &cols[i][i];
            if !m.is_zero() {
                let ci = cols[i].clone();
                axpy(&mut cols[j], &-m, &ci);
            }
        }
    }
    SolutionLattice { p, basis: cols, pivots }
}

/// Integral `x` with `sum_i x_i rows_i = target`, for integral `rows`.
///
/// Smith form with valuation pivoting: `U M V = D`, so `x M = t` becomes
/// `(x U^{-1}) D = t V`.
pub fn integral_solution(p: Prime, rows: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let k = rows.len();
    let r = target.len();
    if r == 0 {
        return Some(vec![Rational::zero(); k]);
    }
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let mut u = identity(k);
    let mut v = identity(r);
    let mut rank = 0;
    for s in 0..k.min(r) {
        let best = (s..k)
            .flat_map(|i| (s..r).map(move |j| (i, j)))
            .filter_map(|(i, j)| val_p(p, &a[i][j]).finite().map(|val| (val, i, j)))
            .min();
        let Some((_, i, j)) = best else { break };
        a.swap(s, i);
        u.swap(s, i);
        for row in a.iter_mut() {
            row.swap(s, j);
        }
        for row in v.iter_mut() {
            row.swap(s, j);
        }
        let piv = a[s][s].clone();
        for i in s + 1..k {
            if !a[i][s].is_zero() {
                let f = &a[i][s] / &piv;
                let (top, bottom) = a.split_at_mut(i);
                axpy(&mut bottom[0], &-f.clone(), &top[s]);
                let (ut, ub) = u.split_at_mut(i);
                axpy(&mut ub[0], &-f, &ut[s]);
            }
        }
        for j in s + 1..r {
            if !a[s][j].is_zero() {
                let f = &a[s][j] / &piv;
                for row in a.iter_mut() {
                    let d = &row[s] * &f;
                    row[j] -= d;
                }
                for row in v.iter_mut() {
                    let d = &row[s] * &f;
                    row[j] -= d;
                }
            }
        }
        rank = s + 1;
    }
    // t V
    let tv: Vec<Rational> =
        (0..r).map(|j| (0..r).map(|i| &target[i] * &v[i][j]).fold(Rational::zero(), |x, y| x + y)).collect();
    let mut z = vec![Rational::zero(); k];
    for j in 0..r {
        if j < rank {
            let zj = &tv[j] / &a[j][j];
            if !is_p_local_int(p, &zj) {
                return None;
            }
            z[j] = zj;
        } else if !tv[j].is_zero() {
            return None;
        }
    }
    Some((0..k).map(|c| (0..k).map(|i| &z[i] * &u[i][c]).fold(Rational::zero(), |x, y| x + y)).collect())
}

/// Inverse of a square lower-triangular matrix with nonzero diagonal (row-major).
#[allow(clippy::needless_range_loop)]
pub fn lower_triangular_inverse(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut inv = vec![vec![Rational::zero(); n]; n];
    for col in 0..n {
        for i in col..n {
            let mut s = if i == col { Rational::one() } else { Rational::zero() };
            for k in col..i {
                if !m[i][k].is_zero() && !inv[k][col].is_zero() {
                    s -= &m[i][k] * &inv[k][col];
                }
            }
            inv[i][col] = s / &m[i][i];
        }
    }
    inv
}

/// Canonical residue of a `p`-local integer in `[0, p^e)`.
fn reduce_mod(p: Prime, x: &Rational, e: u32) -> Rational {
    let r: BigInt = residue_mod_p_pow(p, x, e).expect("p-local integer");
    Rational::from_integer(r)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .fold(Rational::zero(), |s, t| s + t)
}

fn identity(n: usize) -> Vec<Vec<Rational>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect()
}

fn scale_vec(v: &[Rational], s: &Rational) -> Vec<Rational> {
    v.iter().map(|x| x * s).collect()
}

fn axpy(y: &mut [Rational], a: &Rational, x: &[Rational]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += a * xi;
        }
    }
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// `val_p` of the smallest-valuation entry, or `+inf` for the zero vector.
pub fn min_valuation(p: Prime, v: &[Rational]) -> ExtValuation {
    v.iter().map(|x| val_p(p, x)).min().unwrap_or(ExtValuation::Infinite)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn p3() -> Prime {
        Prime::new(3).unwrap()
    }

    #[test]
    fn single_row() {
        let sys = CongruenceSystem::new(p3(), 1, vec![vec![rat(-1, 3), rat(1, 3)]]).unwrap();
        let l = solve(&sys);
        assert_eq!(l.pivots(), &[0, 1]);
        assert_eq!(l.columns(), &[vec![int(1), int(1)], vec![int(0), int(3)]]);
        assert!(l.contains(&[int(2), int(5)]));
        assert!(!l.contains(&[int(2), int(4)]));
    }

    #[test]
    fn trivial_systems() {
        let full = SolutionLattice::full(p3(), 2);
        assert_eq!(solve(&CongruenceSystem::empty(p3(), 2)), full);
        let sys = CongruenceSystem::new(p3(), 2, vec![vec![int(1), rat(2, 5), int(7)]]).unwrap();
        assert_eq!(solve(&sys), full);
    }

    #[test]
    fn negated_rows_agree() {
        let a = solve(&CongruenceSystem::new(p3(), 1, vec![vec![rat(-1, 3), rat(1, 3)]]).unwrap());
        let b = solve(&CongruenceSystem::new(p3(), 1, vec![vec![rat(1, 3), rat(-1, 3)]]).unwrap());
        assert!(a.equals(&b).unwrap());
        assert!(a.leq(&a).unwrap());
        assert!(matches!(a.leq(&SolutionLattice::full(p3(), 2)), Err(LatticeError::DimensionMismatch { .. })));
    }

    #[test]
    fn normalized_rows_regenerate() {
        let sys = CongruenceSystem::new(
            p3(),
            2,
            vec![vec![rat(1, 9), rat(2, 9), rat(4, 27)], vec![rat(-1, 3), rat(1, 3), int(0)]],
        )
        .unwrap();
        let l = solve(&sys);
        let rows = l.normalized_rows().unwrap();
        let again = solve(&CongruenceSystem::from_ragged(p3(), 2, rows.iter().map(|c| c.entries.clone())));
        assert_eq!(again, l);
        for (r, c) in rows.iter().enumerate() {
            assert!(c.check_shape(p3(), l.pivots()[r] as u64).is_ok());
        }
    }

    #[test]
    fn not_normalizable() {
        // {(3a, a + 3b)}: mu_1 - mu_0/3 in 3Z cannot be written with an integral y
        let sys = CongruenceSystem::new(p3(), 1, vec![vec![rat(1, 3), int(0)], vec![rat(-1, 9), rat(1, 3)]]).unwrap();
        let l = solve(&sys);
        assert_eq!(l.pivots(), &[1, 1]);
        assert_eq!(l.normalized_rows(), Err(LatticeError::NotNormalizable { row: 1 }));
    }

    #[test]
    fn sandwich_basic() {
        let base = CongruenceSystem::new(p3(), 1, vec![vec![int(1), int(0)]]).unwrap();
        let c1 = CongruenceVector::new(1, vec![rat(-1, 3), rat(1, 3)]);
        let v = sandwich_check(&base, &c1, &c1).unwrap();
        assert!(v.included && v.equal);
        let weak = CongruenceVector::new(1, vec![int(0), int(1)]);
        assert!(matches!(sandwich_check(&base, &c1, &weak), Err(LatticeError::Hypothesis { .. })));
        let other = CongruenceVector::new(1, vec![rat(1, 3), rat(1, 3)]);
        let v = sandwich_check(&base, &c1, &other).unwrap();
        assert!(!v.included && !v.equal);
    }

    #[test]
    fn integral_solution_cases() {
        let p = p3();
        let rows = vec![vec![int(3), int(0)], vec![int(1), int(9)]];
        let x = integral_solution(p, &rows, &[int(4), int(9)]).unwrap();
        assert_eq!(x, vec![int(1), int(1)]);
        assert!(integral_solution(p, &rows, &[int(1), int(0)]).is_none());
        assert!(integral_solution(p, &[vec![int(0)]], &[int(1)]).is_none());
    }
}
