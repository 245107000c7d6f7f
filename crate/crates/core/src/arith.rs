//! Exact rationals, p-adic valuations and the combinatorial functions that
//! govern congruence pivots.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact rational number, always stored in lowest terms with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("q = {q} is not primitive modulo {modulus}: its multiplicative order is {order}, expected {expected}")]
    NotPrimitive { q: i64, modulus: u64, order: u64, expected: u64 },
    #[error("operation requires an odd prime, got p = {0}")]
    EvenPrime(u64),
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

/// A validated prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self, ArithError> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(ArithError::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 != 2
    }

    pub fn as_bigint(self) -> BigInt {
        BigInt::from(self.0)
    }

    pub fn as_rational(self) -> Rational {
        Rational::from_integer(self.as_bigint())
    }
}

impl TryFrom<u64> for Prime {
    type Error = ArithError;
    fn try_from(p: u64) -> Result<Self, Self::Error> {
        Prime::new(p)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A p-adic valuation, with `Infinite` reserved for zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtValuation {
    Finite(i64),
    Infinite,
}

impl ExtValuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtValuation::Finite(v) => Some(v),
            ExtValuation::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, ExtValuation::Infinite)
    }
}

impl std::ops::Add for ExtValuation {
    type Output = ExtValuation;
    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (ExtValuation::Finite(a), ExtValuation::Finite(b)) => ExtValuation::Finite(a + b),
            _ => ExtValuation::Infinite,
        }
    }
}

impl fmt::Display for ExtValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtValuation::Finite(v) => write!(f, "{v}"),
            ExtValuation::Infinite => write!(f, "+inf"),
        }
    }
}

// ---------------------------------------------------------------------------
// constructors

#[inline]
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[inline]
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"a/b"` or `"a"`; surrounding whitespace is ignored.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let t = s.trim();
    let parsed = match t.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| ArithError::Parse(s.to_string()))?;
            let b: BigInt = b.trim().parse().map_err(|_| ArithError::Parse(s.to_string()))?;
            if b.is_zero() {
                return Err(ArithError::Parse(s.to_string()));
            }
            Rational::new(a, b)
        }
        None => Rational::from_integer(t.parse().map_err(|_| ArithError::Parse(s.to_string()))?),
    };
    Ok(parsed)
}

/// `base^exp` for a possibly negative exponent.
pub fn pow_rat(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow(base.recip(), (-exp) as usize)
    }
}

/// `p^e` as a rational, `e` may be negative.
pub fn p_pow(p: Prime, e: i64) -> Rational {
    pow_rat(&p.as_rational(), e)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

// ---------------------------------------------------------------------------
// valuations

/// Largest `e` with `p^e | n`; infinite for zero.
pub fn nu_p(p: Prime, n: &BigInt) -> ExtValuation {
    if n.is_zero() {
        return ExtValuation::Infinite;
    }
    let pb = p.as_bigint();
    let mut m = n.abs();
    let mut e = 0i64;
    loop {
        let (q, r) = m.div_rem(&pb);
        if !r.is_zero() {
            break;
        }
        m = q;
        e += 1;
    }
    ExtValuation::Finite(e)
}

pub fn nu_p_i64(p: Prime, n: i64) -> ExtValuation {
    nu_p(p, &BigInt::from(n))
}

pub fn val_p(p: Prime, x: &Rational) -> ExtValuation {
    if x.is_zero() {
        return ExtValuation::Infinite;
    }
    let num = nu_p(p, x.numer()).finite().unwrap_or(0);
    let den = nu_p(p, x.denom()).finite().unwrap_or(0);
    ExtValuation::Finite(num - den)
}

pub fn is_p_local_int(p: Prime, x: &Rational) -> bool {
    val_p(p, x) >= ExtValuation::Finite(0)
}

pub fn is_p_local_unit(p: Prime, x: &Rational) -> bool {
    val_p(p, x) == ExtValuation::Finite(0)
}

/// Splits a nonzero rational as `p^e * u` with `u` a p-local unit.
pub fn split_p_power(p: Prime, x: &Rational) -> Option<(i64, Rational)> {
    let e = val_p(p, x).finite()?;
    Some((e, x * p_pow(p, -e)))
}

/// Legendre's formula for the exponent of `p` in `n!`.
pub fn nu_p_factorial(p: Prime, n: u64) -> u64 {
    let mut total = 0;
    let mut pk = p.get();
    while pk <= n {
        total += n / pk;
        match pk.checked_mul(p.get()) {
            Some(next) => pk = next,
            None => break,
        }
    }
    total
}

/// `n + nu_p(n!)`: the valuation budget of the n-th congruence.
pub fn delta_p(p: Prime, n: u64) -> u64 {
    n + nu_p_factorial(p, n)
}

/// `delta_p(floor(i / (p - 1)))`.
pub fn gamma_p(p: Prime, i: u64) -> u64 {
    delta_p(p, i / (p.get() - 1))
}

/// Residue of a p-local integer modulo `p^e`, as an integer in `[0, p^e)`.
pub fn residue_mod_p_pow(p: Prime, x: &Rational, e: u32) -> Option<BigInt> {
    if !is_p_local_int(p, x) {
        return None;
    }
    let m = num_traits::pow(p.as_bigint(), e as usize);
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let den_inv = mod_inverse(x.denom(), &m)?;
    Some((x.numer() * den_inv).mod_floor(&m))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}

// ---------------------------------------------------------------------------
// Gaussian polynomials

/// Integer coefficients (constant term first) of the Gaussian polynomial
/// `prod_{k<i} (1 - t^{n-k}) / (1 - t^{i-k})`; the zero polynomial when `i > n`.
pub fn gaussian_poly(n: u64, i: u64) -> Vec<BigInt> {
    if i > n {
        return vec![];
    }
    let mut num = vec![BigInt::one()];
    for k in 0..i {
        num = mul_one_minus_t_pow(&num, (n - k) as usize);
    }
    for k in 0..i {
        num = div_one_minus_t_pow(&num, (i - k) as usize);
    }
    while num.last().is_some_and(|c| c.is_zero()) {
        num.pop();
    }
    num
}

fn mul_one_minus_t_pow(a: &[BigInt], d: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + d];
    for (k, c) in a.iter().enumerate() {
        out[k] += c;
        out[k + d] -= c;
    }
    out
}

// exact division by (1 - t^d): b_k = a_k + b_{k-d}
fn div_one_minus_t_pow(a: &[BigInt], d: usize) -> Vec<BigInt> {
    let len = a.len() - d;
    let mut b: Vec<BigInt> = Vec::with_capacity(len);
    for k in 0..len {
        let mut c = a[k].clone();
        if k >= d {
            c += &b[k - d];
        }
        b.push(c);
    }
    debug_assert!((len..a.len()).all(|k| {
        let mut r = a[k].clone();
        if k >= d {
            r += &b[k - d];
        }
        r.is_zero()
    }));
    b
}

/// Value of the Gaussian polynomial at `t`, by Horner on the expanded form.
pub fn gaussian(n: u64, i: u64, t: &Rational) -> Rational {
    let coeffs = gaussian_poly(n, i);
    let mut acc = Rational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * t + Rational::from_integer(c.clone());
    }
    acc
}

// ---------------------------------------------------------------------------
// primitive roots

pub fn multiplicative_order(q: i64, modulus: u64) -> Option<u64> {
    let m = modulus as i128;
    let q = (q as i128).rem_euclid(m);
    if q.gcd(&m) != 1 {
        return None;
    }
    let mut x = q;
    let mut k = 1u64;
    while x != 1 % m {
        x = x * q % m;
        k += 1;
    }
    Some(k)
}

fn euler_phi_prime_power(p: u64, r: u32) -> u64 {
    (p - 1) * p.pow(r - 1)
}

/// Adams operation generators used to build the operation bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdamsGenerators {
    /// Odd p: a single `q` primitive modulo `p^2`.
    Primitive(i64),
    /// p = 2: the pair `(3, -1)`.
    TwoAdic { three: i64, minus_one: i64 },
}

impl AdamsGenerators {
    pub fn q(self) -> i64 {
        match self {
            AdamsGenerators::Primitive(q) => q,
            AdamsGenerators::TwoAdic { three, .. } => three,
        }
    }
}

/// Smallest positive `q` primitive modulo `p^2` (hence modulo every `p^r`).
pub fn find_q(p: Prime) -> AdamsGenerators {
    if !p.is_odd() {
        return AdamsGenerators::TwoAdic { three: 3, minus_one: -1 };
    }
    let m = p.get() * p.get();
    let target = euler_phi_prime_power(p.get(), 2);
    let q = (2..m as i64)
        .find(|&q| multiplicative_order(q, m) == Some(target))
        .expect("cyclic unit group mod p^2 has a generator");
    AdamsGenerators::Primitive(q)
}

/// Validates a user-supplied `q` for an odd prime.
pub fn check_q(p: Prime, q: i64) -> Result<i64, ArithError> {
    if !p.is_odd() {
        return Err(ArithError::EvenPrime(p.get()));
    }
    let m = p.get() * p.get();
    let expected = euler_phi_prime_power(p.get(), 2);
    let order = multiplicative_order(q, m).unwrap_or(0);
    if order != expected {
        return Err(ArithError::NotPrimitive { q, modulus: m, order, expected });
    }
    Ok(q)
}

pub fn to_i64(x: &BigInt) -> Option<i64> {
    x.to_i64()
}
