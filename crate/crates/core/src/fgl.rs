//! The p-typical formal group law of BP in Araki's generators: the rational
//! log coefficients `l_n`, conversion between `v` and `l`, truncated log/exp
//! series, and the coefficient action of Adams operations.

use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{check_q, find_q, int, p_pow, pow_rat, ArithError, Prime, Rational};
use crate::polyring::{Coeff, GeneratorTable, GradedPoly, PolyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FglError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("generator index {index} has weight {weight}, above the context bound {bound}")]
    WeightOverflow { index: usize, weight: u32, bound: u32 },
    #[error("series degree {degree} needs weight {needed}, above the bound {bound}")]
    SeriesTooLong { degree: usize, needed: u32, bound: u32 },
    #[error("{0} is not a p-local unit")]
    NotUnit(Rational),
}

/// `pi_n = p - p^{p^n}`, `pibar_n = pi_n / p` and `alphabar_n = prod_{i<=n} pibar_i`.
#[derive(Debug, Clone, Copy)]
pub struct ArakiConstants {
    p: Prime,
}

impl ArakiConstants {
    pub fn new(p: Prime) -> Self {
        ArakiConstants { p }
    }

    pub fn pi(&self, n: u32) -> Rational {
        let p = self.p.as_rational();
        &p - pow_rat(&p, self.p.get().pow(n) as i64)
    }

    pub fn pibar(&self, n: u32) -> Rational {
        int(1) - p_pow(self.p, self.p.get().pow(n) as i64 - 1)
    }

    pub fn alphabar(&self, n: u32) -> Rational {
        (1..=n).map(|i| self.pibar(i)).fold(Rational::one(), |a, b| a * b)
    }
}

/// Weight of `v_n`, `l_n` and `t_n`: `1 + p + ... + p^{n-1}`.
pub fn generator_weight(p: Prime, n: usize) -> u32 {
    let p = p.get() as u32;
    (0..n as u32).map(|k| p.pow(k)).sum()
}

/// Shared state for BP computations at a prime and weight bound.
///
/// All generator tables and the `l <-> v` conversion data are built eagerly;
/// the context is immutable afterwards.
#[derive(Debug, Clone)]
pub struct BPContext {
    p: Prime,
    q: i64,
    bound: u32,
    num_gens: usize,
    v_table: Arc<GeneratorTable>,
    l_table: Arc<GeneratorTable>,
    lt_table: Arc<GeneratorTable>,
    lr_table: Arc<GeneratorTable>,
    vt_table: Arc<GeneratorTable>,
    l_in_v: Vec<GradedPoly>,
    v_in_l: Vec<GradedPoly>,
    pi_of_l: Vec<Rational>,
    constants: ArakiConstants,
}

impl BPContext {
    /// Builds a context; `q_override` must be primitive modulo `p^2` (odd `p`).
    /// For `p = 2` the Adams generator is 3.
    pub fn new(p: Prime, q_override: Option<i64>, bound: u32) -> Result<Self, FglError> {
        let q = match q_override {
            Some(q) if p.is_odd() => check_q(p, q)?,
            _ => find_q(p).q(),
        };
        let mut num_gens = 0;
        while generator_weight(p, num_gens + 1) <= bound {
            num_gens += 1;
        }
        let ws: Vec<u32> = (1..=num_gens).map(|n| generator_weight(p, n)).collect();
        let mk = |prefixes: &[&str]| -> Result<Arc<GeneratorTable>, PolyError> {
            let gens = prefixes
                .iter()
                .flat_map(|pre| ws.iter().enumerate().map(move |(i, &w)| (format!("{pre}{}", i + 1), w)));
            Ok(Arc::new(GeneratorTable::new(gens)?))
        };
        let v_table = mk(&["v"])?;
        let l_table = mk(&["l"])?;
        let lt_table = mk(&["l", "t"])?;
        let lr_table = mk(&["l", "r"])?;
        let vt_table = mk(&["v", "t"])?;
        let mut ctx = BPContext {
            p,
            q,
            bound,
            num_gens,
            v_table,
            l_table,
            lt_table,
            lr_table,
            vt_table,
            l_in_v: Vec::new(),
            v_in_l: Vec::new(),
            pi_of_l: Vec::new(),
            constants: ArakiConstants::new(p),
        };
        ctx.build_araki();
        Ok(ctx)
    }

    fn build_araki(&mut self) {
        let p = self.p.get() as u32;
        let b = self.bound;
        for n in 1..=self.num_gens {
            // pi_n l_n = v_n + sum_{1<=i<n} l_i v_{n-i}^{p^i}
            let mut rhs = GradedPoly::generator(&self.v_table, b, n - 1);
            for i in 1..n {
                let mut e = vec![0u32; self.num_gens];
                e[n - i - 1] = p.pow(i as u32);
                let vpow = GradedPoly::monomial(&self.v_table, b, e, Rational::one());
                rhs = &rhs + &(&self.l_in_v[i - 1] * &vpow);
            }
            self.l_in_v.push(rhs.scale(&self.constants.pi(n as u32).recip()));
        }
        for n in 1..=self.num_gens {
            // v_n = pi_n l_n - sum_{1<=i<n} l_i (v_{n-i})^{p^i}
            let mut acc = GradedPoly::generator(&self.l_table, b, n - 1).scale(&self.constants.pi(n as u32));
            for i in 1..n {
                let li = GradedPoly::generator(&self.l_table, b, i - 1);
                acc = &acc - &(&li * &self.v_in_l[n - i - 1].pow(p.pow(i as u32)));
            }
            self.v_in_l.push(acc);
        }
        let mut at = vec![Rational::zero(); self.num_gens];
        if let Some(first) = at.first_mut() {
            *first = Rational::one();
        }
        self.pi_of_l = self.l_in_v.iter().map(|l| l.evaluate(&at)).collect();
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `q^{p-1}`; for `p = 2` this is 3.
    pub fn qhat(&self) -> Rational {
        pow_rat(&int(self.q), self.p.get() as i64 - 1)
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// Number of generators `v_1..v_N` of weight within the bound.
    pub fn num_gens(&self) -> usize {
        self.num_gens
    }

    pub fn constants(&self) -> ArakiConstants {
        self.constants
    }

    pub fn weight(&self, n: usize) -> u32 {
        generator_weight(self.p, n)
    }

    pub fn v_table(&self) -> &Arc<GeneratorTable> {
        &self.v_table
    }

    pub fn l_table(&self) -> &Arc<GeneratorTable> {
        &self.l_table
    }

    /// `{l_1..l_N, t_1..t_N}`: the table for elements of `BP_*(BP) (x) Q`.
    pub fn lt_table(&self) -> &Arc<GeneratorTable> {
        &self.lt_table
    }

    /// `{l_1..l_N, r_1..r_N}` where `r_n` stands for `eta_R(l_n)`.
    pub fn lr_table(&self) -> &Arc<GeneratorTable> {
        &self.lr_table
    }

    pub fn vt_table(&self) -> &Arc<GeneratorTable> {
        &self.vt_table
    }

    fn check_index(&self, n: usize) -> Result<(), FglError> {
        if n == 0 || n > self.num_gens {
            return Err(FglError::WeightOverflow { index: n, weight: self.weight(n), bound: self.bound });
        }
        Ok(())
    }

    /// `l_n` as a polynomial in the `v` generators.
    pub fn araki_l(&self, n: usize) -> Result<&GradedPoly, FglError> {
        self.check_index(n)?;
        Ok(&self.l_in_v[n - 1])
    }

    /// `v_n` as a polynomial in the `l` generators.
    pub fn v_in_l(&self, n: usize) -> Result<&GradedPoly, FglError> {
        self.check_index(n)?;
        Ok(&self.v_in_l[n - 1])
    }

    /// Images of `l_1..l_N` under `pi: v_1 -> 1, v_i -> 0 (i > 1)`.
    pub fn pi_of_l(&self) -> &[Rational] {
        &self.pi_of_l
    }

    pub fn l_to_v<C: Coeff>(&self, x: &GradedPoly<C>) -> Result<GradedPoly<C>, FglError> {
        Ok(x.substitute(&self.v_table, &self.l_in_v)?)
    }

    pub fn v_to_l<C: Coeff>(&self, x: &GradedPoly<C>) -> Result<GradedPoly<C>, FglError> {
        Ok(x.substitute(&self.l_table, &self.v_in_l)?)
    }

    /// Eigenvalue of `Psi^alpha` on the weight-`w` part of `BP_*`
    /// (topological degree `2(p-1)w`): `alpha^{(p-1)w}`.
    pub fn adams_on_coeff(&self, alpha: &Rational, w: u32) -> Result<Rational, FglError> {
        if !crate::arith::is_p_local_unit(self.p, alpha) {
            return Err(FglError::NotUnit(alpha.clone()));
        }
        Ok(pow_rat(alpha, (self.p.get() as i64 - 1) * w as i64))
    }

    /// The BP logarithm `sum_n l_n x^{p^n}` up to `x^degree`, over the `l` table.
    pub fn log_series(&self, degree: usize) -> Result<PowerSeries, FglError> {
        let needed = (degree.saturating_sub(1) as u32).div_ceil(self.p.get() as u32 - 1);
        if needed > self.bound {
            return Err(FglError::SeriesTooLong { degree, needed, bound: self.bound });
        }
        let mut coeffs = vec![GradedPoly::zero(&self.l_table, self.bound); degree + 1];
        let mut pn = 1usize;
        let mut n = 0usize;
        while pn <= degree {
            coeffs[pn] = if n == 0 {
                GradedPoly::one(&self.l_table, self.bound)
            } else {
                GradedPoly::generator(&self.l_table, self.bound, n - 1)
            };
            pn *= self.p.get() as usize;
            n += 1;
        }
        Ok(PowerSeries { coeffs })
    }

    /// `(log, exp)` with `exp` the compositional inverse of `log`.
    pub fn log_exp_series(&self, degree: usize) -> Result<(PowerSeries, PowerSeries), FglError> {
        let log = self.log_series(degree)?;
        let exp = log.reverse();
        Ok((log, exp))
    }

    /// Checks that `log((Psi^alpha)^{-1}(x)) = sum alpha^i m_i x^{i+1}` to order `degree`,
    /// building `Psi^alpha(x) = [alpha](x) / alpha` and inverting it as a series.
    pub fn adams_log_transform_check(&self, alpha: &Rational, degree: usize) -> Result<bool, FglError> {
        if !crate::arith::is_p_local_unit(self.p, alpha) {
            return Err(FglError::NotUnit(alpha.clone()));
        }
        let (log, exp) = self.log_exp_series(degree)?;
        Ok(log_transform_holds(&log, &exp, alpha))
    }
}

/// The generic logarithm `sum m_i x^{i+1}` with free coefficients `m_i` of
/// weight `i`, up to `x^degree`.
pub fn generic_log_series(degree: usize) -> PowerSeries {
    let bound = degree.saturating_sub(1) as u32;
    let table = Arc::new(
        GeneratorTable::new((1..degree.max(1)).map(|i| (format!("m{i}"), i as u32))).expect("valid generic table"),
    );
    let mut coeffs = vec![GradedPoly::zero(&table, bound); degree + 1];
    for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = if k == 1 { GradedPoly::one(&table, bound) } else { GradedPoly::generator(&table, bound, k - 2) };
    }
    PowerSeries { coeffs }
}

/// The log transform identity for an arbitrary log series.
pub fn log_transform_holds(log: &PowerSeries, exp: &PowerSeries, alpha: &Rational) -> bool {
    let multiple = exp.compose(&log.scale(alpha));
    let psi = multiple.scale(&alpha.recip());
    let psi_inv = psi.reverse();
    let lhs = log.compose(&psi_inv);
    lhs.coeffs.iter().enumerate().all(|(k, c)| {
        let expected = if k == 0 { c.clone() } else { log.coeffs[k].scale(&pow_rat(alpha, k as i64 - 1)) };
        *c == expected
    })
}

/// A power series in `x` truncated after `x^D`, with polynomial coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<GradedPoly>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<GradedPoly>) -> Self {
        assert!(!coeffs.is_empty());
        PowerSeries { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &GradedPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[GradedPoly] {
        &self.coeffs
    }

    fn zero_like(&self) -> Self {
        let z = self.coeffs[0].with_bound(self.coeffs[0].bound());
        let z = GradedPoly::zero(z.table(), z.bound());
        PowerSeries { coeffs: vec![z; self.coeffs.len()] }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.degree();
        let mut out = self.zero_like();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(d + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
                }
            }
        }
        out
    }

    /// `self(inner(x))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Self {
        assert!(inner.coeffs[0].is_zero(), "inner series must vanish at 0");
        let mut out = self.zero_like();
        let mut power = self.zero_like();
        power.coeffs[0] = GradedPoly::one(self.coeffs[0].table(), self.coeffs[0].bound());
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                power = power.mul(inner);
            }
            if c.is_zero() {
                continue;
            }
            for (slot, term) in out.coeffs.iter_mut().zip(&power.coeffs) {
                if !term.is_zero() {
                    *slot = &*slot + &(c * term);
                }
            }
        }
        out
    }

    /// Compositional inverse of a series `x + O(x^2)`.
    pub fn reverse(&self) -> Self {
        let one = GradedPoly::one(self.coeffs[0].table(), self.coeffs[0].bound());
        assert!(self.coeffs[0].is_zero() && self.degree() >= 1 && self.coeffs[1] == one);
        let mut g = self.zero_like();
        g.coeffs[1] = one;
        for k in 2..=self.degree() {
            let h = self.compose(&g);
            g.coeffs[k] = &g.coeffs[k] - &h.coeffs[k];
        }
        g
    }

    /// The series `x` over the same coefficient ring.
    pub fn identity_like(&self) -> Self {
        let mut s = self.zero_like();
        if s.coeffs.len() > 1 {
            s.coeffs[1] = GradedPoly::one(self.coeffs[0].table(), self.coeffs[0].bound());
        }
        s
    }
}
