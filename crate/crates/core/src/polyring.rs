//! Sparse multivariate polynomials with integer weights, truncated above a
//! fixed weight bound.
//!
//! A polynomial carries its [`GeneratorTable`] and bound. Terms of weight
//! greater than the bound are dropped by every operation, so arithmetic takes
//! place in the quotient by the ideal of high-weight monomials.
//!
//! Coefficients are either exact rationals or [`MuLinear`] forms; the latter
//! form a module over the rational polynomials but not a ring.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("operands use different generator tables")]
    TableMismatch,
    #[error("operands use different weight bounds ({0} vs {1})")]
    BoundMismatch(u32, u32),
    #[error("binding for {generator} is not homogeneous of weight {weight}")]
    InhomogeneousBinding { generator: String, weight: u32 },
    #[error("expected {expected} bindings, got {got}")]
    BindingCount { expected: usize, got: usize },
    #[error("exponent vector has length {got}, table has {expected} generators")]
    Arity { expected: usize, got: usize },
    #[error("monomial of weight {weight} exceeds bound {bound}")]
    AboveBound { weight: u32, bound: u32 },
    #[error("invalid generator table: {0}")]
    BadTable(String),
    #[error("cannot parse monomial {0:?}")]
    Parse(String),
}

/// Named generators with positive integer weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorTable {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl GeneratorTable {
    pub fn new<S: Into<String>>(gens: impl IntoIterator<Item = (S, u32)>) -> Result<Self, PolyError> {
        let mut names = Vec::new();
        let mut weights = Vec::new();
        for (name, w) in gens {
            let name = name.into();
            if w == 0 {
                return Err(PolyError::BadTable(format!("generator {name} has weight 0")));
            }
            if names.contains(&name) {
                return Err(PolyError::BadTable(format!("duplicate generator {name}")));
            }
            names.push(name);
            weights.push(w);
        }
        Ok(GeneratorTable { names, weights })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn weight_of(&self, exps: &[u32]) -> u32 {
        exps.iter().zip(&self.weights).map(|(e, w)| e * w).sum()
    }

    /// All exponent vectors of weight at most `bound`, in canonical order.
    pub fn monomials_up_to(&self, bound: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.len()];
        self.enumerate(0, bound, &mut cur, &mut out);
        out.sort_by(|a, b| monomial_order(self, a, b));
        out
    }

    fn enumerate(&self, i: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == self.len() {
            out.push(cur.clone());
            return;
        }
        let w = self.weights[i];
        for e in 0..=rem / w {
            cur[i] = e;
            self.enumerate(i + 1, rem - e * w, cur, out);
        }
        cur[i] = 0;
    }

    /// Parses a monomial such as `v1^2*v2` or `1`.
    pub fn parse_monomial(&self, s: &str) -> Result<Vec<u32>, PolyError> {
        let mut exps = vec![0u32; self.len()];
        let t = s.trim();
        if t == "1" || t.is_empty() {
            return Ok(exps);
        }
        for factor in t.split('*') {
            let factor = factor.trim();
            let (name, e) = match factor.split_once('^') {
                Some((n, e)) => (n.trim(), e.trim().parse::<u32>().map_err(|_| PolyError::Parse(s.into()))?),
                None => (factor, 1),
            };
            let idx = self.index_of(name).ok_or_else(|| PolyError::Parse(s.into()))?;
            exps[idx] += e;
        }
        Ok(exps)
    }
}

/// Graded lexicographic: lower weight first, then larger exponent of the
/// earlier generator first.
pub fn monomial_order(table: &GeneratorTable, a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    table.weight_of(a).cmp(&table.weight_of(b)).then_with(|| b.cmp(a))
}

/// Coefficient domain of a [`GradedPoly`].
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero_value() -> Self;
    fn is_zero_value(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn neg_ref(&self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    fn fmt_coeff(&self) -> String;
}

impl Coeff for Rational {
    fn zero_value() -> Self {
        Zero::zero()
    }
    fn is_zero_value(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn fmt_coeff(&self) -> String {
        self.to_string()
    }
}

// ---------------------------------------------------------------------------
// MuLinear

/// A finite rational linear form `sum c_i mu_i` in a symbolic sequence `mu`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct MuLinear {
    coeffs: BTreeMap<usize, Rational>,
}

impl MuLinear {
    pub fn zero() -> Self {
        MuLinear::default()
    }

    /// The form `mu_i`.
    pub fn mu(i: usize) -> Self {
        Self::term(i, Rational::one())
    }

    pub fn term(i: usize, c: Rational) -> Self {
        let mut m = MuLinear::zero();
        if !c.is_zero_value() {
            m.coeffs.insert(i, c);
        }
        m
    }

    pub fn from_vec(v: &[Rational]) -> Self {
        let mut m = MuLinear::zero();
        for (i, c) in v.iter().enumerate() {
            m.add_term(i, c);
        }
        m
    }

    pub fn add_term(&mut self, i: usize, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(i).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    /// Largest index with a nonzero coefficient.
    pub fn max_index(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn supported_within(&self, n: usize) -> bool {
        self.max_index().is_none_or(|m| m <= n)
    }

    /// Dense coefficient vector of length `len`; entries past `len` are dropped.
    pub fn to_vec(&self, len: usize) -> Vec<Rational> {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return MuLinear::zero();
        }
        MuLinear { coeffs: self.coeffs.iter().map(|(i, c)| (*i, c * r)).collect() }
    }

    /// Re-indexes `mu_i -> mu_{i + k}`.
    pub fn shift(&self, k: usize) -> Self {
        MuLinear { coeffs: self.coeffs.iter().map(|(i, c)| (i + k, c.clone())).collect() }
    }

    /// `sum_i sum_j a_i b_j mu_{i+j}`.
    pub fn convolve(&self, other: &MuLinear) -> Self {
        let mut out = MuLinear::zero();
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                out.add_term(i + j, &(a * b));
            }
        }
        out
    }

    /// Evaluates at a concrete sequence; indices past its end count as zero.
    pub fn evaluate(&self, mu: &[Rational]) -> Rational {
        self.coeffs.iter().filter_map(|(i, c)| mu.get(*i).map(|m| c * m)).fold(Rational::zero(), |a, b| a + b)
    }
}

impl Coeff for MuLinear {
    fn zero_value() -> Self {
        MuLinear::zero()
    }
    fn is_zero_value(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (i, c) in &other.coeffs {
            self.add_term(*i, c);
        }
    }
    fn neg_ref(&self) -> Self {
        MuLinear { coeffs: self.coeffs.iter().map(|(i, c)| (*i, -c)).collect() }
    }
    fn scale(&self, r: &Rational) -> Self {
        MuLinear::scale(self, r)
    }
    fn fmt_coeff(&self) -> String {
        format!("({self})")
    }
}

impl Add<&MuLinear> for &MuLinear {
    type Output = MuLinear;
    fn add(self, rhs: &MuLinear) -> MuLinear {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub<&MuLinear> for &MuLinear {
    type Output = MuLinear;
    fn sub(self, rhs: &MuLinear) -> MuLinear {
        let mut out = self.clone();
        out.add_assign_ref(&rhs.neg_ref());
        out
    }
}

impl Neg for &MuLinear {
    type Output = MuLinear;
    fn neg(self) -> MuLinear {
        self.neg_ref()
    }
}

impl AddAssign<&MuLinear> for MuLinear {
    fn add_assign(&mut self, rhs: &MuLinear) {
        self.add_assign_ref(rhs);
    }
}

impl fmt::Display for MuLinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (i, c)) in self.coeffs.iter().enumerate() {
            write_signed_term(f, k == 0, c, &format!("mu{i}"))?;
        }
        Ok(())
    }
}

fn write_signed_term(f: &mut fmt::Formatter<'_>, first: bool, c: &Rational, body: &str) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    match (first, neg) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    if body.is_empty() {
        write!(f, "{abs}")
    } else if abs.is_one() {
        write!(f, "{body}")
    } else {
        write!(f, "{abs}*{body}")
    }
}

// ---------------------------------------------------------------------------
// GradedPoly

#[derive(Clone, Debug)]
pub struct GradedPoly<C: Coeff = Rational> {
    table: Arc<GeneratorTable>,
    bound: u32,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coeff> PartialEq for GradedPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.bound == other.bound && same_table(&self.table, &other.table) && self.terms == other.terms
    }
}

fn same_table(a: &Arc<GeneratorTable>, b: &Arc<GeneratorTable>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<C: Coeff> GradedPoly<C> {
    pub fn zero(table: &Arc<GeneratorTable>, bound: u32) -> Self {
        GradedPoly { table: Arc::clone(table), bound, terms: BTreeMap::new() }
    }

    pub fn constant(table: &Arc<GeneratorTable>, bound: u32, c: C) -> Self {
        Self::monomial(table, bound, vec![0; table.len()], c)
    }

    /// `c * x^exps`, or zero if the monomial lies above the bound.
    pub fn monomial(table: &Arc<GeneratorTable>, bound: u32, exps: Vec<u32>, c: C) -> Self {
        assert_eq!(exps.len(), table.len(), "exponent vector arity");
        let mut p = Self::zero(table, bound);
        if table.weight_of(&exps) <= bound && !c.is_zero_value() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.table
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    /// Terms in canonical (graded lexicographic) order.
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| monomial_order(&self.table, a.0, b.0));
        v
    }

    pub fn coefficient_of(&self, exps: &[u32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero_value)
    }

    /// Like [`coefficient_of`](Self::coefficient_of) but validates the monomial.
    pub fn checked_coefficient_of(&self, exps: &[u32]) -> Result<C, PolyError> {
        if exps.len() != self.table.len() {
            return Err(PolyError::Arity { expected: self.table.len(), got: exps.len() });
        }
        let weight = self.table.weight_of(exps);
        if weight > self.bound {
            return Err(PolyError::AboveBound { weight, bound: self.bound });
        }
        Ok(self.coefficient_of(exps))
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(|e| self.table.weight_of(e)).max()
    }

    /// True if every term has weight exactly `w`.
    pub fn is_homogeneous_of(&self, w: u32) -> bool {
        self.terms.keys().all(|e| self.table.weight_of(e) == w)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: &C) {
        if c.is_zero_value() || self.table.weight_of(&exps) > self.bound {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(c);
                if o.get().is_zero_value() {
                    o.remove();
                }
            }
        }
    }

    fn check_compatible<D: Coeff>(&self, other: &GradedPoly<D>) -> Result<(), PolyError> {
        if !same_table(&self.table, &other.table) {
            return Err(PolyError::TableMismatch);
        }
        if self.bound != other.bound {
            return Err(PolyError::BoundMismatch(self.bound, other.bound));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_add(&other.neg_poly())
    }

    pub fn neg_poly(&self) -> Self {
        self.map_coeffs(|c| c.neg_ref())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero(&self.table, self.bound);
        }
        self.map_coeffs(|c| c.scale(r))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> GradedPoly<D> {
        let mut out = GradedPoly::zero(&self.table, self.bound);
        for (e, c) in &self.terms {
            let d = f(c);
            if !d.is_zero_value() {
                out.terms.insert(e.clone(), d);
            }
        }
        out
    }

    /// The same polynomial viewed with a different weight bound.
    pub fn with_bound(&self, bound: u32) -> Self {
        let mut out = Self::zero(&self.table, bound);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    /// Re-expresses in a table that contains this table's generators by name.
    pub fn embed(&self, target: &Arc<GeneratorTable>) -> Result<Self, PolyError> {
        let map: Vec<usize> = self
            .table
            .names()
            .iter()
            .map(|n| target.index_of(n).ok_or(PolyError::TableMismatch))
            .collect::<Result<_, _>>()?;
        for (i, &j) in map.iter().enumerate() {
            if self.table.weights()[i] != target.weights()[j] {
                return Err(PolyError::TableMismatch);
            }
        }
        let mut out = GradedPoly::zero(target, self.bound);
        for (e, c) in &self.terms {
            let mut f = vec![0; target.len()];
            for (i, &j) in map.iter().enumerate() {
                f[j] = e[i];
            }
            out.terms.insert(f, c.clone());
        }
        Ok(out)
    }

    /// Multiplies by a rational polynomial (the module action).
    pub fn checked_mul_scalar_poly(&self, r: &GradedPoly<Rational>) -> Result<Self, PolyError> {
        self.check_compatible(r)?;
        let weights = self.table.weights();
        let lw: Vec<(u32, &Vec<u32>, &Rational)> =
            r.terms.iter().map(|(e, c)| (self.table.weight_of(e), e, c)).collect();
        let mut out = Self::zero(&self.table, self.bound);
        for (e1, c1) in &self.terms {
            let w1 = self.table.weight_of(e1);
            for (w2, e2, c2) in &lw {
                if w1 + w2 > self.bound {
                    continue;
                }
                let e: Vec<u32> = e1.iter().zip(e2.iter()).map(|(a, b)| a + b).collect();
                debug_assert_eq!(e.iter().zip(weights).map(|(x, w)| x * w).sum::<u32>(), w1 + w2);
                out.add_term(e, &c1.scale(c2));
            }
        }
        Ok(out)
    }

    /// Substitutes generator `i` by `images[i]`, a rational polynomial over
    /// `target`. Images must be homogeneous of their generator's weight (the
    /// zero polynomial is allowed).
    pub fn substitute(&self, target: &Arc<GeneratorTable>, images: &[GradedPoly<Rational>]) -> Result<Self, PolyError> {
        if images.len() != self.table.len() {
            return Err(PolyError::BindingCount { expected: self.table.len(), got: images.len() });
        }
        for (i, img) in images.iter().enumerate() {
            if !same_table(img.table(), target) {
                return Err(PolyError::TableMismatch);
            }
            let w = self.table.weights()[i];
            if !img.is_homogeneous_of(w) {
                return Err(PolyError::InhomogeneousBinding { generator: self.table.names()[i].clone(), weight: w });
            }
        }
        let bound = self.bound;
        let mut powers = PowerCache::new(images, bound);
        let mut out = GradedPoly::zero(target, bound);
        for (e, c) in &self.terms {
            let mut prod = GradedPoly::<Rational>::constant(target, bound, Rational::one());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    prod = &prod * powers.get(i, k);
                    if prod.is_zero() {
                        break;
                    }
                }
            }
            for (f, r) in &prod.terms {
                out.add_term(f.clone(), &c.scale(r));
            }
        }
        Ok(out)
    }
}

struct PowerCache<'a> {
    images: &'a [GradedPoly<Rational>],
    bound: u32,
    cache: Vec<Vec<GradedPoly<Rational>>>,
}

impl<'a> PowerCache<'a> {
    fn new(images: &'a [GradedPoly<Rational>], bound: u32) -> Self {
        PowerCache { images, bound, cache: vec![Vec::new(); images.len()] }
    }

    fn get(&mut self, i: usize, k: u32) -> &GradedPoly<Rational> {
        let row = &mut self.cache[i];
        if row.is_empty() {
            row.push(GradedPoly::constant(self.images[i].table(), self.bound, Rational::one()));
        }
        while row.len() <= k as usize {
            let next = row.last().unwrap() * &self.images[i].with_bound(self.bound);
            row.push(next);
        }
        &row[k as usize]
    }
}

impl GradedPoly<Rational> {
    pub fn one(table: &Arc<GeneratorTable>, bound: u32) -> Self {
        Self::constant(table, bound, Rational::one())
    }

    /// The generator at `idx`, or zero if its weight exceeds the bound.
    pub fn generator(table: &Arc<GeneratorTable>, bound: u32, idx: usize) -> Self {
        let mut e = vec![0; table.len()];
        e[idx] = 1;
        Self::monomial(table, bound, e, Rational::one())
    }

    pub fn named(table: &Arc<GeneratorTable>, bound: u32, name: &str) -> Option<Self> {
        table.index_of(name).map(|i| Self::generator(table, bound, i))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_mul_scalar_poly(other)
    }

    /// `self^k` by repeated squaring, truncating at every step.
    pub fn checked_pow(&self, mut k: u32) -> Result<Self, PolyError> {
        let mut base = self.clone();
        let mut acc = Self::one(&self.table, self.bound);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        self.checked_pow(k).expect("pow of a single polynomial is always compatible")
    }

    /// Evaluates at rational values of the generators.
    pub fn evaluate(&self, values: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in values.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident, $c:ty, $rhs:ty) => {
        impl $tr<&$rhs> for &GradedPoly<$c> {
            type Output = GradedPoly<$c>;
            fn $m(self, rhs: &$rhs) -> GradedPoly<$c> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

forward_binop!(Add, add, checked_add, Rational, GradedPoly<Rational>);
forward_binop!(Sub, sub, checked_sub, Rational, GradedPoly<Rational>);
forward_binop!(Mul, mul, checked_mul, Rational, GradedPoly<Rational>);
forward_binop!(Add, add, checked_add, MuLinear, GradedPoly<MuLinear>);
forward_binop!(Sub, sub, checked_sub, MuLinear, GradedPoly<MuLinear>);
forward_binop!(Mul, mul, checked_mul_scalar_poly, MuLinear, GradedPoly<Rational>);

impl<C: Coeff> Neg for &GradedPoly<C> {
    type Output = GradedPoly<C>;
    fn neg(self) -> GradedPoly<C> {
        self.neg_poly()
    }
}

impl<C: Coeff> fmt::Display for GradedPoly<C> {
    /// Canonical text: graded lexicographic order, explicit rational
    /// coefficients, `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let body = monomial_text(&self.table, e);
            let cs = c.fmt_coeff();
            let (neg, abs) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            match (k == 0, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            if body.is_empty() {
                write!(f, "{abs}")?;
            } else if abs == "1" {
                write!(f, "{body}")?;
            } else {
                write!(f, "{abs}*{body}")?;
            }
        }
        Ok(())
    }
}

pub fn monomial_text(table: &GeneratorTable, e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { table.names()[i].clone() } else { format!("{}^{k}", table.names()[i]) })
        .collect();
    parts.join("*")
}
