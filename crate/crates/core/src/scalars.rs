//! Scalar tower and the deformation-parameter polynomial ring.
//!
//! Three exact fields drive the whole engine through the [`Field`] trait:
//!
//! * [`Rat`] — arbitrary-precision rationals;
//! * [`QuadRat`] — the real quadratic field generated by a root `a` of
//!   `2a² + 10a + 3 = 0` (equivalently `ℚ(√19)`);
//! * [`LambdaScalar`] — rational functions in a formal weight `l`.
//!
//! Every engine computation is generic over `K: Field`; a concrete weight is
//! an *element* of `K` handed to the computation, so the same code runs
//! symbolically and at numeric (rational or algebraic) weights.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Arbitrary-precision rational number.
pub type Rat = num_rational::BigRational;

/// `n` as a [`Rat`].
pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a [`Rat`]. Panics if `d == 0` (static call sites only).
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Exact field of scalars the engine is generic over.
///
/// All operations are by reference and pure; `inv`/`div` are fallible so
/// that symbolic division by an identically-zero rational function is a
/// reportable error rather than a panic.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rat(q: Rat) -> Self;
    fn from_i64(n: i64) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv()?).pipe_ok()
    }
    /// Exact equality with a rational constant.
    fn eq_rat(&self, q: &Rat) -> bool {
        self.sub(&Self::from_rat(q.clone())).is_zero()
    }
    /// Exact equality with a small integer constant.
    fn eq_i64(&self, n: i64) -> bool {
        self.sub(&Self::from_i64(n)).is_zero()
    }
}

trait PipeOk: Sized {
    fn pipe_ok(self) -> Result<Self> {
        Ok(self)
    }
}
impl<T> PipeOk for T {}

impl Field for Rat {
    fn zero() -> Self {
        rat_i(0)
    }
    fn one() -> Self {
        rat_i(1)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rat(q: Rat) -> Self {
        q
    }
    fn from_i64(n: i64) -> Self {
        rat_i(n)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            return Err(Error::DivisionByZeroPolynomial);
        }
        Ok(self.recip())
    }
}

/// Exact binomial coefficient `C(n, r)` as a rational.
pub fn binom(n: u32, r: u32) -> Rat {
    if r > n {
        return rat_i(0);
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..r.min(n - r) {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Rat::new(num, den)
}

/// Generalized binomial `C(x, i) = x(x−1)…(x−i+1)/i!` over any field.
pub fn gbinom<K: Field>(x: &K, i: u32) -> K {
    let mut out = K::one();
    for j in 0..i {
        out = out.mul(&x.sub(&K::from_i64(j as i64)));
    }
    let mut fact = rat_i(1);
    for j in 1..=i {
        fact *= rat_i(j as i64);
    }
    out.mul(&K::from_rat(fact.recip()))
}

// ---------------------------------------------------------------------------
// dense polynomials
// ---------------------------------------------------------------------------

/// Dense univariate polynomial with ascending coefficients and no trailing
/// zeros (the zero polynomial is the empty vector).
#[derive(Clone, PartialEq, Debug)]
pub struct DensePoly<K: Field> {
    coeffs: Vec<K>,
}

impl<K: Field> DensePoly<K> {
    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn constant(c: K) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![K::zero(), K::one()])
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().map_or(false, K::is_zero) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&other.coeff(i)));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        DensePoly {
            coeffs: self.coeffs.iter().map(K::neg).collect(),
        }
    }

    pub fn scale(&self, s: &K) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.mul(s)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.mul(&K::from_i64(i as i64 + 1)))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..n {
            p = p.derivative();
            if p.is_zero() {
                break;
            }
        }
        p
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn div_rem(&self, div: &Self) -> Result<(Self, Self)> {
        let dl = div.leading().ok_or(Error::DivisionByZeroPolynomial)?;
        let dl_inv = dl.inv()?;
        let dd = div.degree().unwrap();
        let mut rem = self.clone();
        let mut quo = vec![K::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let f = rem.leading().unwrap().mul(&dl_inv);
            let shift = rd - dd;
            quo[shift] = quo[shift].add(&f);
            let mut sub = vec![K::zero(); shift];
            sub.extend(div.coeffs.iter().map(|c| c.mul(&f)));
            rem = rem.sub(&Self::from_coeffs(sub));
        }
        Ok((Self::from_coeffs(quo), rem))
    }
}

impl DensePoly<Rat> {
    /// Positive rational `c` with `self = c · (primitive integer polynomial)`.
    pub fn content(&self) -> Rat {
        if self.is_zero() {
            return rat_i(0);
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rat::new(num_gcd, den_lcm)
    }

    /// `self / content`: integer coefficients with gcd 1; sign preserved.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        self.scale(&c.recip())
    }

    /// Exact division (remainder asserted zero).
    pub fn div_exact(&self, div: &Self) -> Self {
        let (q, r) = self.div_rem(div).expect("div_exact by zero");
        debug_assert!(r.is_zero(), "div_exact with nonzero remainder");
        q
    }

    /// Monic, primitive-remainder Euclidean gcd; result is primitive with a
    /// positive leading coefficient (`1` for coprime inputs).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive();
        let mut b = other.primitive();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("gcd division");
            a = b;
            b = r.primitive();
        }
        if a.is_zero() {
            return a;
        }
        if a.leading().unwrap().is_negative() {
            a = a.neg();
        }
        a
    }

    /// Extended gcd: returns `(g, u, v)` with `u·self + v·other = g`, `g`
    /// monic (or zero for zero inputs).
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut u0 = Self::one();
        let mut u1 = Self::zero();
        let mut v0 = Self::zero();
        let mut v1 = Self::one();
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("ext_gcd division");
            let u = u0.sub(&q.mul(&u1));
            let v = v0.sub(&q.mul(&v1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
            v0 = v1;
            v1 = v;
        }
        if let Some(lead) = r0.leading() {
            let s = lead.recip();
            return (r0.scale(&s), u0.scale(&s), v0.scale(&s));
        }
        (r0, u0, v0)
    }

    /// All rational roots (each once), by the rational root theorem on the
    /// primitive part.
    pub fn rational_roots(&self) -> Vec<Rat> {
        if self.is_zero() || self.degree() == Some(0) {
            return Vec::new();
        }
        let p = self.primitive();
        // strip x^m factors: 0 is a root iff the constant term vanishes
        let mut roots = Vec::new();
        let mut coeffs = p.coeffs().to_vec();
        let mut k = 0;
        while Zero::is_zero(&coeffs[k]) {
            k += 1;
        }
        if k > 0 {
            roots.push(rat_i(0));
            coeffs.drain(0..k);
        }
        let q = DensePoly::from_coeffs(coeffs);
        if q.degree().map_or(true, |d| d == 0) {
            return roots;
        }
        let a0 = q.coeff(0).numer().abs();
        let an = q.leading().unwrap().numer().abs();
        for p_div in divisors(&a0) {
            for q_div in divisors(&an) {
                for sign in [1i64, -1] {
                    let cand = Rat::new(&p_div * BigInt::from(sign), q_div.clone());
                    if Zero::is_zero(&q.eval(&cand)) && !roots.contains(&cand) {
                        roots.push(cand.clone());
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    if Zero::is_zero(n) {
        return out;
    }
    let n = n.abs();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if Zero::is_zero(&(&n % &d)) {
            out.push(d.clone());
            let e = &n / &d;
            if e != d {
                out.push(e);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// rational functions in the formal weight
// ---------------------------------------------------------------------------

/// Rational function in the formal weight symbol `l`, kept reduced with a
/// monic denominator.
#[derive(Clone, PartialEq, Debug)]
pub struct LambdaScalar {
    num: DensePoly<Rat>,
    den: DensePoly<Rat>,
}

impl LambdaScalar {
    /// Canonicalize `num/den`: reduce by the gcd and make the denominator
    /// monic. Errors on an identically-zero denominator.
    pub fn normalize_ratfun(num: DensePoly<Rat>, den: DensePoly<Rat>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        if num.is_zero() {
            return Ok(LambdaScalar {
                num,
                den: DensePoly::one(),
            });
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree().map_or(false, |d| d > 0) {
            (num.div_exact(&g), den.div_exact(&g))
        } else {
            (num, den)
        };
        let lead = den.leading().unwrap().clone();
        if !lead.is_one() {
            let s = lead.recip();
            num = num.scale(&s);
            den = den.scale(&s);
        }
        Ok(LambdaScalar { num, den })
    }

    /// The weight symbol itself.
    pub fn lambda() -> Self {
        LambdaScalar {
            num: DensePoly::x(),
            den: DensePoly::one(),
        }
    }

    pub fn from_poly(p: DensePoly<Rat>) -> Self {
        LambdaScalar {
            num: p,
            den: DensePoly::one(),
        }
    }

    pub fn numerator(&self) -> &DensePoly<Rat> {
        &self.num
    }

    pub fn denominator(&self) -> &DensePoly<Rat> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }
}

impl Field for LambdaScalar {
    fn zero() -> Self {
        Self::from_poly(DensePoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(DensePoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_rat(q: Rat) -> Self {
        Self::from_poly(DensePoly::constant(q))
    }
    fn from_i64(n: i64) -> Self {
        Self::from_rat(rat_i(n))
    }
    fn add(&self, other: &Self) -> Self {
        // combine over the lcm of the denominators to limit growth
        let g = self.den.gcd(&other.den);
        let da = self.den.div_exact(&g);
        let db = other.den.div_exact(&g);
        let num = self.num.mul(&db).add(&other.num.mul(&da));
        let den = self.den.mul(&db);
        Self::normalize_ratfun(num, den).expect("nonzero denominator")
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        // cross-reduce before multiplying
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = if g1.degree().map_or(false, |d| d > 0) {
            self.num.div_exact(&g1)
        } else {
            self.num.clone()
        };
        let d2 = if g1.degree().map_or(false, |d| d > 0) {
            other.den.div_exact(&g1)
        } else {
            other.den.clone()
        };
        let n2 = if g2.degree().map_or(false, |d| d > 0) {
            other.num.div_exact(&g2)
        } else {
            other.num.clone()
        };
        let d1 = if g2.degree().map_or(false, |d| d > 0) {
            self.den.div_exact(&g2)
        } else {
            self.den.clone()
        };
        Self::normalize_ratfun(n1.mul(&n2), d1.mul(&d2)).expect("nonzero denominator")
    }
    fn neg(&self) -> Self {
        LambdaScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        Self::normalize_ratfun(self.den.clone(), self.num.clone())
    }
}

fn fmt_rat_coeff(c: &Rat) -> String {
    c.to_string()
}

fn fmt_poly(p: &DensePoly<Rat>, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for i in (0..p.coeffs().len()).rev() {
        let c = p.coeff(i);
        if Zero::is_zero(&c) {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let unit = mag.is_one() && i > 0;
        if !unit {
            out.push_str(&fmt_rat_coeff(&mag));
        }
        if i > 0 {
            if !unit {
                out.push('*');
            }
            out.push_str(var);
            if i > 1 {
                out.push_str(&format!("^{i}"));
            }
        }
    }
    out
}

impl fmt::Display for LambdaScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = fmt_poly(&self.num, "l");
        if self.den.degree() == Some(0) {
            return write!(f, "{num}");
        }
        write!(f, "({num})/({})", fmt_poly(&self.den, "l"))
    }
}

// ---------------------------------------------------------------------------
// the quadratic field
// ---------------------------------------------------------------------------

/// Which root of `2a² + 10a + 3 = 0` a computation is anchored at.
///
/// `Plus` is the root `(−5 + √19)/2`, `Minus` is `(−5 − √19)/2`. Arithmetic
/// in [`QuadRat`] is branch-free; the branch only matters when translating
/// constants written in terms of `√19`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Branch {
    Plus,
    Minus,
}

/// Element `c0 + c1·a` of the quadratic field with `a² = −5a − 3/2`.
#[derive(Clone, PartialEq, Debug)]
pub struct QuadRat {
    pub c0: Rat,
    pub c1: Rat,
}

impl QuadRat {
    pub fn new(c0: Rat, c1: Rat) -> Self {
        QuadRat { c0, c1 }
    }

    /// The generator `a` itself (the weight root).
    pub fn theta() -> Self {
        QuadRat::new(rat_i(0), rat_i(1))
    }

    /// `√19` expressed in this field: `∓(2a + 5)` depending on the branch.
    ///
    /// For the first root `a = −(5+√19)/2` we have `2a + 5 = −√19`, so the
    /// positive square root is `−(2a+5)`; for the second root it is `+(2a+5)`.
    pub fn sqrt19_for(branch: Branch) -> Self {
        let base = QuadRat::new(rat_i(5), rat_i(2));
        match branch {
            Branch::Plus => base.neg(),
            Branch::Minus => base,
        }
    }

    /// Field norm `c0² − 5·c0·c1 + (3/2)·c1²`; zero only at zero since the
    /// discriminant 19 is not a rational square.
    fn norm(&self) -> Rat {
        &self.c0 * &self.c0 - rat_i(5) * &self.c0 * &self.c1
            + rat(3, 2) * &self.c1 * &self.c1
    }
}

impl Field for QuadRat {
    fn zero() -> Self {
        QuadRat::new(rat_i(0), rat_i(0))
    }
    fn one() -> Self {
        QuadRat::new(rat_i(1), rat_i(0))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.c0) && Zero::is_zero(&self.c1)
    }
    fn from_rat(q: Rat) -> Self {
        QuadRat::new(q, rat_i(0))
    }
    fn from_i64(n: i64) -> Self {
        Self::from_rat(rat_i(n))
    }
    fn add(&self, other: &Self) -> Self {
        QuadRat::new(&self.c0 + &other.c0, &self.c1 + &other.c1)
    }
    fn sub(&self, other: &Self) -> Self {
        QuadRat::new(&self.c0 - &other.c0, &self.c1 - &other.c1)
    }
    fn mul(&self, other: &Self) -> Self {
        // (c0 + c1 a)(d0 + d1 a) with a² = −5a − 3/2
        let cross = &self.c1 * &other.c1;
        QuadRat::new(
            &self.c0 * &other.c0 - rat(3, 2) * &cross,
            &self.c0 * &other.c1 + &self.c1 * &other.c0 - rat_i(5) * &cross,
        )
    }
    fn neg(&self) -> Self {
        QuadRat::new(-&self.c0, -&self.c1)
    }
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        // conjugate is (c0 − 5 c1) − c1 a  (the other root is −5 − a)
        let n = self.norm();
        let s = n.recip();
        Ok(QuadRat::new(
            (&self.c0 - rat_i(5) * &self.c1) * &s,
            -&self.c1 * &s,
        ))
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.c1) {
            return write!(f, "{}", self.c0);
        }
        let mut out = String::new();
        let mag = self.c1.abs();
        if self.c1.is_negative() {
            out.push('-');
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag}*"));
        }
        out.push('a');
        if !Zero::is_zero(&self.c0) {
            out.push_str(if self.c0.is_negative() { " - " } else { " + " });
            out.push_str(&self.c0.abs().to_string());
        }
        write!(f, "{out}")
    }
}

// ---------------------------------------------------------------------------
// weights
// ---------------------------------------------------------------------------

/// A density weight: the formal symbol, a rational value, or a root of
/// `2λ² + 10λ + 3 = 0`.
#[derive(Clone, PartialEq, Debug)]
pub enum Weight {
    Generic,
    Rational(Rat),
    Algebraic { branch: Branch },
}

impl Weight {
    /// Parse the command-line syntax: `generic`, `p/q` (or an integer), or
    /// `alg:2,10,3:+` / `alg:2,10,3:-` (minimal-polynomial coefficients,
    /// descending, content-normalized, plus the branch sign).
    pub fn parse(s: &str) -> std::result::Result<Weight, String> {
        let s = s.trim();
        if s == "generic" {
            return Ok(Weight::Generic);
        }
        if let Some(rest) = s.strip_prefix("alg:") {
            let mut parts = rest.rsplitn(2, ':');
            let branch = parts.next().ok_or("malformed algebraic weight")?;
            let coeffs = parts.next().ok_or("malformed algebraic weight")?;
            let branch = match branch {
                "+" => Branch::Plus,
                "-" => Branch::Minus,
                other => return Err(format!("unknown branch sign {other:?}")),
            };
            let nums: Vec<i64> = coeffs
                .split(',')
                .map(|c| c.trim().parse::<i64>().map_err(|e| e.to_string()))
                .collect::<std::result::Result<_, _>>()?;
            if nums.len() != 3 {
                return Err("algebraic weight needs three coefficients".into());
            }
            let mut g = 0i64;
            for n in &nums {
                g = g.unsigned_abs().gcd(&n.unsigned_abs()) as i64;
            }
            if g == 0 {
                return Err("zero minimal polynomial".into());
            }
            let sign = if nums[0] < 0 { -g } else { g };
            let norm: Vec<i64> = nums.iter().map(|n| n / sign).collect();
            if norm != [2, 10, 3] {
                return Err(format!(
                    "unsupported minimal polynomial {nums:?}; only 2,10,3 is available"
                ));
            }
            return Ok(Weight::Algebraic { branch });
        }
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let n: i64 = num.trim().parse().map_err(|_| format!("bad weight {s:?}"))?;
        let d: i64 = den.trim().parse().map_err(|_| format!("bad weight {s:?}"))?;
        if d == 0 {
            return Err("zero denominator in weight".into());
        }
        Ok(Weight::Rational(rat(n, d)))
    }

    /// Label used when rendering parameters and weights.
    pub fn label(&self) -> String {
        match self {
            Weight::Generic => "l".to_string(),
            Weight::Rational(q) => q.to_string(),
            Weight::Algebraic { branch: Branch::Plus } => "a1".to_string(),
            Weight::Algebraic { branch: Branch::Minus } => "a2".to_string(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Minimal polynomial `2λ² + 10λ + 3` of the algebraic weights.
pub fn algebraic_minpoly() -> DensePoly<Rat> {
    DensePoly::from_coeffs(vec![rat_i(3), rat_i(10), rat_i(2)])
}

/// Specialize a rational function at a weight.
///
/// * `Rational(q)` substitutes `λ = q`;
/// * `Algebraic` reduces numerator and denominator modulo the minimal
///   polynomial and inverts the denominator by the extended gcd, returning a
///   degree-<2 residue-class representative;
/// * a vanishing denominator is reported as a pole.
pub fn weight_specialize(s: &LambdaScalar, w: &Weight) -> Result<LambdaScalar> {
    match w {
        Weight::Generic => Ok(s.clone()),
        Weight::Rational(q) => {
            let dv = s.denominator().eval(q);
            if Zero::is_zero(&dv) {
                return Err(Error::PoleAtWeight);
            }
            let nv = s.numerator().eval(q);
            Ok(LambdaScalar::from_rat(nv / dv))
        }
        Weight::Algebraic { .. } => {
            let m = algebraic_minpoly();
            let (_, nr) = s.numerator().div_rem(&m)?;
            let (_, dr) = s.denominator().div_rem(&m)?;
            if dr.is_zero() {
                return Err(Error::PoleAtWeight);
            }
            // m is irreducible over the rationals, so dr is invertible mod m
            let (g, u, _) = dr.ext_gcd(&m);
            debug_assert_eq!(g.degree(), Some(0));
            let ginv = g.leading().unwrap().recip();
            let (_, out) = nr.mul(&u.scale(&ginv)).div_rem(&m)?;
            Ok(LambdaScalar::from_poly(out))
        }
    }
}

/// Convert a specialized (degree < 2) rational-weight residue into the
/// quadratic field.
pub fn quadrat_from_residue(p: &DensePoly<Rat>) -> QuadRat {
    QuadRat::new(p.coeff(0), p.coeff(1))
}

// ---------------------------------------------------------------------------
// deformation parameters
// ---------------------------------------------------------------------------

/// Deformation parameter `t[base+p, base+q]`, stored by window offsets.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ParamSymbol {
    pub p: i32,
    pub q: i32,
}

impl ParamSymbol {
    pub fn new(p: i32, q: i32) -> Self {
        debug_assert!(q > p, "parameter target must exceed source");
        ParamSymbol { p, q }
    }
}

/// Label of the window base weight, used only for rendering.
#[derive(Clone, PartialEq, Debug)]
pub enum BaseLabel {
    Generic,
    Numeric(Rat),
    AlgebraicRoot(Branch),
}

impl BaseLabel {
    pub fn from_weight(w: &Weight) -> Self {
        match w {
            Weight::Generic => BaseLabel::Generic,
            Weight::Rational(q) => BaseLabel::Numeric(q.clone()),
            Weight::Algebraic { branch } => BaseLabel::AlgebraicRoot(*branch),
        }
    }

    fn offset_label(&self, off: i32) -> String {
        match self {
            BaseLabel::Generic => {
                if off == 0 {
                    "l".to_string()
                } else if off > 0 {
                    format!("l+{off}")
                } else {
                    format!("l{off}")
                }
            }
            BaseLabel::Numeric(q) => (q + rat_i(off as i64)).to_string(),
            BaseLabel::AlgebraicRoot(b) => {
                let root = if *b == Branch::Plus { "a1" } else { "a2" };
                if off == 0 {
                    root.to_string()
                } else if off > 0 {
                    format!("{root}+{off}")
                } else {
                    format!("{root}{off}")
                }
            }
        }
    }

    /// Render one parameter symbol against this base.
    pub fn symbol(&self, s: &ParamSymbol) -> String {
        format!("t[{},{}]", self.offset_label(s.p), self.offset_label(s.q))
    }
}

/// Multiset of parameter symbols; ordered by total degree, then
/// lexicographically on the sorted symbol list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamMonomial(Vec<ParamSymbol>);

impl ParamMonomial {
    pub fn one() -> Self {
        ParamMonomial(Vec::new())
    }

    pub fn from_symbols(mut syms: Vec<ParamSymbol>) -> Self {
        syms.sort();
        ParamMonomial(syms)
    }

    pub fn symbol(s: ParamSymbol) -> Self {
        ParamMonomial(vec![s])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn symbols(&self) -> &[ParamSymbol] {
        &self.0
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut syms = self.0.clone();
        syms.extend_from_slice(&other.0);
        Self::from_symbols(syms)
    }

    /// Multiset divisibility: `other` divides `self`.
    pub fn divisible_by(&self, other: &Self) -> bool {
        self.quotient(other).is_some()
    }

    /// `self / other` as a multiset difference, if divisible.
    pub fn quotient(&self, other: &Self) -> Option<Self> {
        let mut rest = self.0.clone();
        for s in &other.0 {
            let idx = rest.iter().position(|r| r == s)?;
            rest.remove(idx);
        }
        Some(ParamMonomial(rest))
    }

    pub fn render(&self, base: &BaseLabel) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|s| base.symbol(s))
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for ParamMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.0.len(), &self.0).cmp(&(other.0.len(), &other.0))
    }
}

impl PartialOrd for ParamMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in the deformation parameters with coefficients in `K`.
#[derive(Clone, PartialEq, Debug)]
pub struct ParamPoly<K: Field> {
    terms: BTreeMap<ParamMonomial, K>,
}

impl<K: Field> ParamPoly<K> {
    pub fn zero() -> Self {
        ParamPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: K) -> Self {
        let mut out = Self::zero();
        out.accumulate(ParamMonomial::one(), c);
        out
    }

    pub fn symbol(s: ParamSymbol) -> Self {
        let mut out = Self::zero();
        out.accumulate(ParamMonomial::symbol(s), K::one());
        out
    }

    pub fn monomial(m: ParamMonomial, c: K) -> Self {
        let mut out = Self::zero();
        out.accumulate(m, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ParamMonomial, &K)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &ParamMonomial) -> K {
        self.terms.get(m).cloned().unwrap_or_else(K::zero)
    }

    fn accumulate(&mut self, m: ParamMonomial, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let nv = v.add(&c);
                if nv.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = nv;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        ParamPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &K) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        ParamPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.mul(s)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.accumulate(m1.mul(m2), c1.mul(c2));
            }
        }
        out
    }

    /// Leading (largest) monomial and its coefficient.
    pub fn leading(&self) -> Option<(&ParamMonomial, &K)> {
        self.terms.iter().next_back()
    }

    /// `(monic polynomial, leading coefficient)`, or `None` for zero.
    pub fn normalize_monic(&self) -> Option<(Self, K)> {
        let (_, lead) = self.leading()?;
        let lead = lead.clone();
        let inv = lead.inv().ok()?;
        Some((self.scale(&inv), lead))
    }

    /// The scalar `q` with `self = q·other`, if one exists (`other` nonzero).
    pub fn ratio_to(&self, other: &Self) -> Option<K> {
        let (m0, c0) = other.leading()?;
        let q = self.coeff(m0).div(c0).ok()?;
        if self.sub(&other.scale(&q)).is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn render(&self, base: &BaseLabel) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                // only strip a purely leading sign of a simple scalar
                Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
                _ => (false, cs),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let needs_parens = mag.contains(['+', '-', ' ', '/']) && m.degree() > 0;
            let coeff_str = if needs_parens {
                format!("({mag})")
            } else {
                mag.clone()
            };
            if m.degree() == 0 {
                out.push_str(&coeff_str);
            } else if coeff_str == "1" {
                out.push_str(&m.render(base));
            } else {
                out.push_str(&format!("{coeff_str}*{}", m.render(base)));
            }
        }
        out
    }
}

/// One oriented rewrite rule extracted from an ideal generator.
enum Rewrite<K: Field> {
    /// `m → 0` (monomial generator).
    Kill(ParamMonomial),
    /// `hi → c·lo` (binomial generator, oriented larger → smaller).
    Replace(ParamMonomial, ParamMonomial, K),
}

fn rewrites_of<K: Field>(gens: &[ParamPoly<K>]) -> Result<Vec<Rewrite<K>>> {
    let mut rules = Vec::new();
    for g in gens {
        match g.num_terms() {
            0 => {}
            1 => {
                let (m, _) = g.leading().unwrap();
                rules.push(Rewrite::Kill(m.clone()));
            }
            2 => {
                let mut it = g.terms();
                let (lo, c_lo) = it.next().unwrap();
                let (hi, c_hi) = it.next().unwrap();
                let c = c_lo.neg().div(c_hi)?;
                rules.push(Rewrite::Replace(hi.clone(), lo.clone(), c));
            }
            _ => return Err(Error::UnsupportedIdealShape),
        }
    }
    Ok(rules)
}

/// Reduce `p` to a normal form modulo monomial/binomial generators.
///
/// Monomial generators kill their monomial and all multiples; binomial
/// generators rewrite the term-order-larger monomial (and its multiples) to
/// the smaller one. Terminates because each step strictly decreases in the
/// monomial order; generators with three or more terms are rejected.
pub fn parampoly_reduce<K: Field>(
    p: &ParamPoly<K>,
    gens: &[ParamPoly<K>],
) -> Result<ParamPoly<K>> {
    let rules = rewrites_of(gens)?;
    let mut cur = p.clone();
    'outer: loop {
        for (m, c) in cur.terms.iter().rev() {
            for rule in &rules {
                match rule {
                    Rewrite::Kill(km) => {
                        if m.divisible_by(km) {
                            let m = m.clone();
                            let c = c.clone();
                            cur.accumulate(m, c.neg());
                            continue 'outer;
                        }
                    }
                    Rewrite::Replace(hi, lo, f) => {
                        if let Some(rest) = m.quotient(hi) {
                            let m = m.clone();
                            let c = c.clone();
                            cur.accumulate(m, c.neg());
                            cur.accumulate(rest.mul(lo), c.mul(f));
                            continue 'outer;
                        }
                    }
                }
            }
        }
        return Ok(cur);
    }
}
