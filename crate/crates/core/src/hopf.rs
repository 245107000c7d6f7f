//! The right unit of the BP Hopf algebroid and the evaluation of diagonal
//! operations on `BP_*(BP)`.
//!
//! Elements of `BP_*(BP) (x) Q` are polynomials in `l_1.., t_1..`. A diagonal
//! operation acting on weight `w` as `mu_w` is evaluated by rewriting an
//! element in the basis `l^a * prod eta_R(l_n)^{b_n}` and sending each basis
//! element to `mu_{|b|} l^{a+b}`; this is forced by left linearity and
//! `theta_bar . eta_R = theta_*`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::arith::{delta_p, int, is_p_local_int, is_p_local_unit, p_pow, val_p, ExtValuation, Prime, Rational};
use crate::fgl::{BPContext, FglError};
use crate::polyring::{GeneratorTable, GradedPoly, MuLinear, PolyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error(transparent)]
    Fgl(#[from] FglError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("element of weight {needed} does not fit the context bound {bound}")]
    WeightOverflow { needed: u32, bound: u32 },
    #[error("construction of d_{n} failed: {detail}")]
    CancellationFailed { n: u64, detail: String },
}

/// `E^alpha_{beta, gamma}` keyed by `(beta, gamma)`.
pub type ECoefficients = BTreeMap<(Vec<u32>, Vec<u32>), Rational>;

/// An element of `BP_*(BP) (x) Q` over the `{l, t}` table.
pub type BPBPElement = GradedPoly<Rational>;

/// The right unit and evaluation machinery over a fixed [`BPContext`].
#[derive(Debug, Clone)]
pub struct HopfAlgebroid {
    ctx: BPContext,
    /// `eta_R(l_n)` over `{l, t}`.
    eta_l: Vec<GradedPoly>,
    /// images for `{l, t} -> {l, r}`: `l_n -> l_n`, `t_n -> t_n(l, r)`.
    to_r_basis: Vec<GradedPoly>,
    /// images for `{l, r} -> {l, t}`: `l_n -> l_n`, `r_n -> eta_R(l_n)`.
    from_r_basis: Vec<GradedPoly>,
    /// images for `{l, t} -> {v, t}`.
    lt_to_vt: Vec<GradedPoly>,
}

impl HopfAlgebroid {
    pub fn new(ctx: BPContext) -> Result<Self, HopfError> {
        let n = ctx.num_gens();
        let b = ctx.bound();
        let p = ctx.p().get() as u32;
        let lt = Arc::clone(ctx.lt_table());
        let lr = Arc::clone(ctx.lr_table());
        let vt = Arc::clone(ctx.vt_table());
        let l_lt = |k: usize| GradedPoly::generator(&lt, b, k - 1);
        let t_lt = |k: usize| GradedPoly::generator(&lt, b, n + k - 1);

        // eta_R(l_m) = sum_{k=0}^m l_k t_{m-k}^{p^k}, with l_0 = t_0 = 1
        let mut eta_l = Vec::with_capacity(n);
        for m in 1..=n {
            let mut acc = &t_lt(m) + &l_lt(m);
            for k in 1..m {
                acc = &acc + &(&l_lt(k) * &t_lt(m - k).pow(p.pow(k as u32)));
            }
            eta_l.push(acc);
        }

        // t_m = r_m - l_m - sum_{1<=k<m} l_k t_{m-k}^{p^k}
        let l_lr = |k: usize| GradedPoly::generator(&lr, b, k - 1);
        let mut t_in_r: Vec<GradedPoly> = Vec::with_capacity(n);
        for m in 1..=n {
            let mut acc = &GradedPoly::generator(&lr, b, n + m - 1) - &l_lr(m);
            for k in 1..m {
                acc = &acc - &(&l_lr(k) * &t_in_r[m - k - 1].pow(p.pow(k as u32)));
            }
            t_in_r.push(acc);
        }
        let to_r_basis: Vec<GradedPoly> = (1..=n).map(l_lr).chain(t_in_r).collect();
        let from_r_basis: Vec<GradedPoly> = (1..=n).map(l_lt).chain(eta_l.iter().cloned()).collect();

        let mut lt_to_vt = Vec::with_capacity(2 * n);
        for k in 1..=n {
            lt_to_vt.push(ctx.araki_l(k)?.embed(&vt)?);
        }
        for k in 1..=n {
            lt_to_vt.push(GradedPoly::generator(&vt, b, n + k - 1));
        }
        Ok(HopfAlgebroid { ctx, eta_l, to_r_basis, from_r_basis, lt_to_vt })
    }

    pub fn context(&self) -> &BPContext {
        &self.ctx
    }

    pub fn p(&self) -> Prime {
        self.ctx.p()
    }

    pub fn bound(&self) -> u32 {
        self.ctx.bound()
    }

    pub fn lt_table(&self) -> &Arc<GeneratorTable> {
        self.ctx.lt_table()
    }

    fn n(&self) -> usize {
        self.ctx.num_gens()
    }

    pub fn one(&self) -> BPBPElement {
        GradedPoly::one(self.lt_table(), self.bound())
    }

    /// `t_k` (zero if it lies above the bound).
    pub fn t(&self, k: usize) -> BPBPElement {
        if k == 0 {
            return self.one();
        }
        if k > self.n() {
            return GradedPoly::zero(self.lt_table(), self.bound());
        }
        GradedPoly::generator(self.lt_table(), self.bound(), self.n() + k - 1)
    }

    pub fn l(&self, k: usize) -> BPBPElement {
        if k == 0 {
            return self.one();
        }
        if k > self.n() {
            return GradedPoly::zero(self.lt_table(), self.bound());
        }
        GradedPoly::generator(self.lt_table(), self.bound(), k - 1)
    }

    /// `t^gamma` for an exponent vector over `t_1..t_N`.
    pub fn t_monomial(&self, gamma: &[u32]) -> BPBPElement {
        let mut e = vec![0; 2 * self.n()];
        e[self.n()..].copy_from_slice(gamma);
        GradedPoly::monomial(self.lt_table(), self.bound(), e, Rational::one())
    }

    /// All `t`-monomials of weight at most `max_weight`.
    pub fn t_monomials(&self, max_weight: u32) -> Vec<Vec<u32>> {
        let ws: Vec<(String, u32)> = (1..=self.n()).map(|k| (format!("t{k}"), self.ctx.weight(k))).collect();
        GeneratorTable::new(ws).expect("valid t table").monomials_up_to(max_weight.min(self.bound()))
    }

    pub fn eta_r_l(&self, n: usize) -> Result<&BPBPElement, HopfError> {
        if n == 0 || n > self.n() {
            return Err(HopfError::WeightOverflow { needed: self.ctx.weight(n), bound: self.bound() });
        }
        Ok(&self.eta_l[n - 1])
    }

    /// Applies the ring map `eta_R` to a polynomial in the `l` generators.
    pub fn eta_r_of_l_poly(&self, x: &GradedPoly) -> Result<BPBPElement, HopfError> {
        Ok(x.substitute(self.lt_table(), &self.eta_l)?)
    }

    /// `eta_R(v^alpha)` over the `{v, t}` table; its coefficients are the
    /// `E^alpha_{beta, gamma}`.
    pub fn eta_r_v(&self, alpha: &[u32]) -> Result<GradedPoly, HopfError> {
        let in_lt = self.eta_r_v_lt(alpha)?;
        Ok(in_lt.substitute(self.ctx.vt_table(), &self.lt_to_vt)?)
    }

    /// `eta_R(v^alpha)` over the `{l, t}` table.
    pub fn eta_r_v_lt(&self, alpha: &[u32]) -> Result<BPBPElement, HopfError> {
        let w = self.ctx.v_table().weight_of(alpha);
        if w > self.bound() {
            return Err(HopfError::WeightOverflow { needed: w, bound: self.bound() });
        }
        let v_alpha = GradedPoly::monomial(self.ctx.v_table(), self.bound(), alpha.to_vec(), Rational::one());
        let in_l = self.ctx.v_to_l(&v_alpha)?;
        self.eta_r_of_l_poly(&in_l)
    }

    /// All `E^alpha_{beta, gamma}` keyed by `(beta, gamma)`.
    pub fn e_coefficients(&self, alpha: &[u32]) -> Result<ECoefficients, HopfError> {
        let n = self.n();
        Ok(self.eta_r_v(alpha)?.terms().map(|(e, c)| ((e[..n].to_vec(), e[n..].to_vec()), c.clone())).collect())
    }

    /// Expansion in the basis `l^a prod eta_R(l_n)^{b_n}` (over `{l, r}`).
    pub fn rewrite_in_eta_r_basis(&self, x: &BPBPElement) -> Result<GradedPoly, HopfError> {
        Ok(x.substitute(self.ctx.lr_table(), &self.to_r_basis)?)
    }

    /// Inverse of [`rewrite_in_eta_r_basis`](Self::rewrite_in_eta_r_basis).
    pub fn from_eta_r_basis(&self, y: &GradedPoly) -> Result<BPBPElement, HopfError> {
        Ok(y.substitute(self.lt_table(), &self.from_r_basis)?)
    }

    fn r_weight(&self, e: &[u32]) -> usize {
        let n = self.n();
        (0..n).map(|k| e[n + k] * self.ctx.weight(k + 1)).sum::<u32>() as usize
    }

    /// `theta_bar(x)` over the `l` table.
    pub fn theta_bar_l(&self, x: &BPBPElement) -> Result<GradedPoly<MuLinear>, HopfError> {
        let n = self.n();
        let y = self.rewrite_in_eta_r_basis(x)?;
        let mut out = GradedPoly::<MuLinear>::zero(self.ctx.l_table(), self.bound());
        for (e, c) in y.terms() {
            let w = self.r_weight(e);
            let merged: Vec<u32> = (0..n).map(|k| e[k] + e[n + k]).collect();
            out.add_term(merged, &MuLinear::term(w, c.clone()));
        }
        Ok(out)
    }

    /// `theta_bar(x)` as a polynomial in the `v` generators; the coefficient
    /// of `v^delta` in `theta_bar(t^gamma)` is `D^gamma_delta(mu)`.
    pub fn theta_bar(&self, x: &BPBPElement) -> Result<GradedPoly<MuLinear>, HopfError> {
        Ok(self.ctx.l_to_v(&self.theta_bar_l(x)?)?)
    }

    /// `V_mu(x) = pi(theta_bar(x))` with `pi(v_1) = 1`, `pi(v_i) = 0` for `i > 1`.
    pub fn v_mu(&self, x: &BPBPElement) -> Result<MuLinear, HopfError> {
        let n = self.n();
        let pil = self.ctx.pi_of_l();
        let y = self.rewrite_in_eta_r_basis(x)?;
        let mut out = MuLinear::zero();
        for (e, c) in y.terms() {
            let mut scalar = c.clone();
            for k in 0..n {
                let ex = e[k] + e[n + k];
                if ex > 0 {
                    scalar *= num_traits::pow(pil[k].clone(), ex as usize);
                }
            }
            out.add_term(self.r_weight(e), &scalar);
        }
        Ok(out)
    }

    /// Applies `pi` to a polynomial over `v` with `MuLinear` coefficients.
    pub fn pi_of_v(&self, x: &GradedPoly<MuLinear>) -> MuLinear {
        let mut out = MuLinear::zero();
        for (e, c) in x.terms() {
            if e.iter().skip(1).all(|&k| k == 0) {
                out += c;
            }
        }
        out
    }

    /// Compares `V_mu(t_{i+1})` with
    /// `p^{-(i+1)} abar_{i+1}^{-1} mu_{delta(p^i)} - sum_{k=1}^{i+1} p^{-k} abar_k^{-1} V_mu(t_{i+1-k}^{p^k})`.
    pub fn v_t_recursion_check(&self, i: usize) -> Result<bool, HopfError> {
        let p = self.p();
        let c = self.ctx.constants();
        let lhs = self.v_mu(&self.t(i + 1))?;
        if self.t(i + 1).is_zero() {
            return Err(HopfError::WeightOverflow { needed: self.ctx.weight(i + 1), bound: self.bound() });
        }
        let top = delta_p(p, p.get().pow(i as u32)) as usize;
        let mut rhs = MuLinear::term(top, p_pow(p, -(i as i64 + 1)) * c.alphabar(i as u32 + 1).recip());
        for k in 1..=i + 1 {
            let scal = p_pow(p, -(k as i64)) * c.alphabar(k as u32).recip();
            let power = self.t(i + 1 - k).pow((p.get() as u32).pow(k as u32));
            rhs = &rhs - &self.v_mu(&power)?.scale(&scal);
        }
        Ok(lhs == rhs)
    }

    /// Every `D^gamma_delta` integrality row for `t`-monomials of weight at most `max_weight`.
    pub fn bp_congruence_rows(&self, max_weight: u32) -> Result<Vec<BpRow>, HopfError> {
        let mut rows = Vec::new();
        for gamma in self.t_monomials(max_weight) {
            let tb = self.theta_bar(&self.t_monomial(&gamma))?;
            for (delta, c) in tb.sorted_terms() {
                rows.push(BpRow { gamma: gamma.clone(), delta: delta.clone(), form: c.clone() });
            }
        }
        Ok(rows)
    }

    /// Builds `d_n` and its congruence vector.
    pub fn construct_d(&self, n: u64) -> Result<SpecialElement, HopfError> {
        let p = self.p();
        let needed = delta_p(p, n) as u32;
        if needed > self.bound() {
            return Err(HopfError::WeightOverflow { needed, bound: self.bound() });
        }
        let mut digits = Vec::new();
        let mut m = n;
        while m > 0 {
            digits.push((m % p.get()) as u32);
            m /= p.get();
        }
        let mut cache: Vec<BPBPElement> = Vec::new();
        let mut d = self.one();
        for (i, &a) in digits.iter().enumerate() {
            while cache.len() <= i {
                let next = self.prime_power_d(cache.len(), &cache)?;
                cache.push(next);
            }
            if a > 0 {
                d = &d * &cache[i].pow(a);
            }
        }
        let v = self.v_mu(&d)?;
        if !v.supported_within(n as usize) {
            return Err(HopfError::CancellationFailed {
                n,
                detail: format!("V_mu(d) = {v} is supported beyond mu_{n}; d = {d}"),
            });
        }
        let coefficients = v.to_vec(n as usize + 1);
        let se = SpecialElement { p, n, element: d, coefficients };
        se.check(self).map_err(|detail| HopfError::CancellationFailed { n, detail })?;
        Ok(se)
    }

    /// `d_{p^i}` given `d_{p^j}` for `j < i` in `lower`.
    fn prime_power_d(&self, i: usize, lower: &[BPBPElement]) -> Result<BPBPElement, HopfError> {
        if i == 0 {
            return Ok(self.t(1));
        }
        let p = self.p();
        let pu = p.get() as u32;
        let c = self.ctx.constants();
        let n = pu.pow(i as u32) as usize;
        let top = delta_p(p, n as u64) as usize;

        let mut x = self.t(i + 1);
        for k in 1..=i {
            let scal = c.alphabar(k as u32).recip() * p_pow(p, -(k as i64));
            let pk = pu.pow(k as u32);
            let diff = &lower[i - k].pow(pk) - &self.t(i - k + 1).pow(pk);
            x = &x - &diff.scale(&scal);
        }
        let mut v = self.v_mu(&x)?;
        // clear mu_j for j > p^i with multiples of t_1^j
        for j in (n + 1..=top).rev() {
            let cj = v.coeff(j);
            if cj.is_zero() {
                continue;
            }
            let t1j = self.t(1).pow(j as u32);
            let vj = self.v_mu(&t1j)?;
            let lead = vj.coeff(j);
            let mult = &cj / &lead;
            if val_p(p, &mult) < ExtValuation::Finite(1) {
                return Err(HopfError::CancellationFailed {
                    n: n as u64,
                    detail: format!("correction coefficient {mult} of t1^{j} is not divisible by p"),
                });
            }
            x = &x - &t1j.scale(&mult);
            v = &v - &vj.scale(&mult);
        }
        Ok(x)
    }
}

/// One BP congruence `D^gamma_delta(mu) in Z_(p)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BpRow {
    pub gamma: Vec<u32>,
    pub delta: Vec<u32>,
    pub form: MuLinear,
}

/// An element `d_n` with `V_mu(d_n) = sum_{j<=n} d_{n,j} mu_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecialElement {
    pub p: Prime,
    pub n: u64,
    pub element: BPBPElement,
    /// `d_{n,0}, ..., d_{n,n}`.
    pub coefficients: Vec<Rational>,
}

impl SpecialElement {
    pub fn delta(&self) -> u64 {
        delta_p(self.p, self.n)
    }

    /// Checks the valuation profile and, for prime powers, the shape `t_{i+1} + p r`.
    pub fn check(&self, hopf: &HopfAlgebroid) -> Result<(), String> {
        let p = self.p;
        let scale = p_pow(p, self.delta() as i64);
        let n = self.n as usize;
        for (j, c) in self.coefficients.iter().enumerate() {
            let scaled = c * &scale;
            let ok = if j == n { is_p_local_unit(p, &scaled) } else { is_p_local_int(p, &scaled) };
            if !ok {
                return Err(format!("d_{{{},{j}}} = {c} has valuation {}", self.n, val_p(p, c)));
            }
        }
        if let Some(i) = prime_power_exponent(p, self.n) {
            let rest = &self.element - &hopf.t(i as usize + 1);
            let bad = rest
                .terms()
                .find(|(_, c)| val_p(p, c) < ExtValuation::Finite(1))
                .map(|(e, c)| (crate::polyring::monomial_text(rest.table(), e), c.clone()));
            if let Some((m, c)) = bad {
                return Err(format!("d_{} - t_{} has coefficient {c} on {m} not divisible by p", self.n, i + 1));
            }
        }
        if self.element.terms().any(|(_, c)| !is_p_local_int(p, c)) {
            return Err(format!("d_{} has non-integral coefficients", self.n));
        }
        Ok(())
    }

    pub fn as_mu_linear(&self) -> MuLinear {
        MuLinear::from_vec(&self.coefficients)
    }

    pub fn record(&self) -> SpecialElementRecord {
        SpecialElementRecord {
            p: self.p.get(),
            n: self.n,
            delta: self.delta(),
            element: self.element.to_string(),
            coefficients: self.coefficients.iter().map(|c| c.to_string()).collect(),
            valuations: self.coefficients.iter().map(|c| val_p(self.p, c).to_string()).collect(),
        }
    }
}

/// Serializable form of a [`SpecialElement`].
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SpecialElementRecord {
    pub p: u64,
    pub n: u64,
    pub delta: u64,
    pub element: String,
    pub coefficients: Vec<String>,
    pub valuations: Vec<String>,
}

impl SpecialElementRecord {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "d_{} (p = {}, delta = {})", self.n, self.p, self.delta);
        let _ = writeln!(s, "  element: {}", self.element);
        for (j, (c, v)) in self.coefficients.iter().zip(&self.valuations).enumerate() {
            let _ = writeln!(s, "  d[{},{j}] = {c}  (val {v})", self.n);
        }
        s
    }
}

fn prime_power_exponent(p: Prime, n: u64) -> Option<u32> {
    let mut m = n;
    let mut i = 0;
    while m > 1 && m.is_multiple_of(p.get()) {
        m /= p.get();
        i += 1;
    }
    (m == 1).then_some(i)
}

/// `(p^{-1} abar_1^{-1})^k`, the leading coefficient of `V_mu(t_1^k)`.
pub fn t1_power_lead(p: Prime, k: u32) -> Rational {
    let c = crate::fgl::ArakiConstants::new(p);
    num_traits::pow((int(p.get() as i64) * c.alphabar(1)).recip(), k as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn hopf(p: u64, bound: u32) -> HopfAlgebroid {
        HopfAlgebroid::new(BPContext::new(Prime::new(p).unwrap(), None, bound).unwrap()).unwrap()
    }

    fn mu(v: &[Rational]) -> MuLinear {
        MuLinear::from_vec(v)
    }

    #[test]
    fn eta_r_on_l() {
        let h = hopf(3, 4);
        assert_eq!(*h.eta_r_l(1).unwrap(), &h.l(1) + &h.t(1));
        let expected = &(&h.l(2) + &(&h.l(1) * &h.t(1).pow(3))) + &h.t(2);
        assert_eq!(*h.eta_r_l(2).unwrap(), expected);
        let l1sq = GradedPoly::generator(h.context().l_table(), 4, 0).pow(2);
        assert_eq!(h.eta_r_of_l_poly(&l1sq).unwrap(), (&h.l(1) + &h.t(1)).pow(2));
    }

    #[test]
    fn eta_r_on_v() {
        let h = hopf(3, 4);
        let vt = h.context().vt_table().clone();
        let got = h.eta_r_v(&[1, 0]).unwrap();
        let v1 = GradedPoly::generator(&vt, 4, 0);
        let t1 = GradedPoly::generator(&vt, 4, 2);
        assert_eq!(got, &v1 + &t1.scale(&h.context().constants().pi(1)));
        assert_eq!(h.eta_r_v(&[0, 0]).unwrap(), GradedPoly::one(&vt, 4));
    }

    #[test]
    fn rewrite_examples() {
        let h = hopf(2, 3);
        let lr = h.context().lr_table().clone();
        let r1 = GradedPoly::generator(&lr, 3, 2);
        let l1 = GradedPoly::generator(&lr, 3, 0);
        assert_eq!(h.rewrite_in_eta_r_basis(&h.t(1)).unwrap(), &r1 - &l1);
        let sq = h.rewrite_in_eta_r_basis(&h.t(1).pow(2)).unwrap();
        let expected = &(&r1.pow(2) - &(&l1 * &r1).scale(&int(2))) + &l1.pow(2);
        assert_eq!(sq, expected);
        assert_eq!(h.from_eta_r_basis(&sq).unwrap(), h.t(1).pow(2));
    }

    #[test]
    fn theta_bar_small() {
        for p in [2u64, 3] {
            let h = hopf(p, 2);
            let pp = Prime::new(p).unwrap();
            let c = h.context().constants();
            assert_eq!(h.v_mu(&h.one()).unwrap(), MuLinear::mu(0));
            let tb = h.theta_bar(&h.t(1)).unwrap();
            let coeff = p_pow(pp, -1) * c.pibar(1).recip();
            assert_eq!(tb.coefficient_of(&[1]), mu(&[-coeff.clone(), coeff.clone()]));
            let tb2 = h.theta_bar(&h.t(1).pow(2)).unwrap();
            let c2 = &coeff * &coeff;
            assert_eq!(tb2.coefficient_of(&[2]), mu(&[c2.clone(), -&c2 * int(2), c2]));
            assert_eq!(h.v_mu(&h.t(1)).unwrap(), mu(&[-coeff.clone(), coeff]));
        }
    }

    #[test]
    fn pi_routes_agree() {
        let h = hopf(2, 4);
        for g in h.t_monomials(4) {
            let x = h.t_monomial(&g);
            assert_eq!(h.v_mu(&x).unwrap(), h.pi_of_v(&h.theta_bar(&x).unwrap()));
        }
    }

    #[test]
    fn recursion_small() {
        assert!(hopf(2, 1).v_t_recursion_check(0).unwrap());
        assert!(hopf(3, 4).v_t_recursion_check(1).unwrap());
        assert!(hopf(2, 7).v_t_recursion_check(2).unwrap());
    }

    #[test]
    fn d1_is_t1() {
        let h = hopf(3, 1);
        let d = h.construct_d(1).unwrap();
        assert_eq!(d.element, h.t(1));
        let lead = t1_power_lead(Prime::new(3).unwrap(), 1);
        assert_eq!(d.coefficients, vec![-lead.clone(), lead]);
        assert_eq!(lead_check(&d), rat(1, 1));
    }

    fn lead_check(d: &SpecialElement) -> Rational {
        // unit part of d_{n,n} p^{delta}
        let s = d.coefficients.last().unwrap() * p_pow(d.p, d.delta() as i64);
        if is_p_local_unit(d.p, &s) {
            int(1)
        } else {
            int(0)
        }
    }

    #[test]
    fn d2_at_two() {
        let h = hopf(2, 3);
        let d = h.construct_d(2).unwrap();
        assert_eq!(d.coefficients.len(), 3);
        assert_eq!(val_p(d.p, &d.coefficients[2]), ExtValuation::Finite(-3));
    }

    #[test]
    fn weight_overflow() {
        let h = hopf(2, 2);
        assert!(matches!(h.construct_d(2), Err(HopfError::WeightOverflow { needed: 3, bound: 2 })));
    }
}
