//! Multilinear jet expressions.
//!
//! A `k`-cochain on density modules is a polynomial differential operator in
//! up to three vector-field slots `X, Y, Z` and one density slot `f`. We
//! represent such an operator as a finite sum of *jet monomials*
//! `X^(i) · Y^(j) · Z^(k) · f^(m)` (parenthesized exponents are derivative
//! orders) with scalar coefficients. All structural operations — formal
//! derivative, slot swaps, composition into nested brackets — are exact term
//! rewrites on this basis.

use crate::scalars::{binom, Field};
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU8, Ordering as AtomicOrdering};

/// Slot indices into a [`JetKey`].
pub const SLOT_X: usize = 0;
pub const SLOT_Y: usize = 1;
pub const SLOT_Z: usize = 2;
pub const SLOT_F: usize = 3;

/// Global cap on derivative orders, guarding against runaway expressions.
static MAX_ORDER: AtomicU8 = AtomicU8::new(16);

/// Raise or lower the global derivative-order cap (default 16).
pub fn set_max_order(max: u8) {
    MAX_ORDER.store(max, AtomicOrdering::Relaxed);
}

pub fn max_order() -> u8 {
    MAX_ORDER.load(AtomicOrdering::Relaxed)
}

/// Derivative orders of one jet monomial: `[X, Y, Z, f]`, unused slots 0.
///
/// Keys order by total order first, then lexicographically by slot — a
/// graded order, so "first key" scans are grade-aware.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct JetKey {
    grade: u16,
    orders: [u8; 4],
}

impl JetKey {
    pub fn new(orders: [u8; 4]) -> Result<Self> {
        let max = max_order();
        for &o in &orders {
            if o > max {
                return Err(Error::JetOrderOverflow {
                    order: o as u32,
                    max: max as u32,
                });
            }
        }
        Ok(JetKey {
            grade: orders.iter().map(|&o| o as u16).sum(),
            orders,
        })
    }

    pub fn orders(&self) -> [u8; 4] {
        self.orders
    }

    pub fn order(&self, slot: usize) -> u8 {
        self.orders[slot]
    }

    pub fn total_order(&self) -> u16 {
        self.grade
    }

    fn bump(&self, slot: usize, by: i32) -> Result<Self> {
        let mut o = self.orders;
        let v = o[slot] as i32 + by;
        debug_assert!(v >= 0);
        if v > max_order() as i32 {
            return Err(Error::JetOrderOverflow {
                order: v as u32,
                max: max_order() as u32,
            });
        }
        o[slot] = v as u8;
        Self::new(o)
    }
}

/// Finite sum of jet monomials with coefficients in `K`.
///
/// `arity` is the number of vector-field slots in use (1, 2, or 3); slot `f`
/// is always present. Monomials with zero coefficient are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct JetExpr<K: Field> {
    arity: usize,
    terms: BTreeMap<JetKey, K>,
}

impl<K: Field> JetExpr<K> {
    pub fn zero(arity: usize) -> Self {
        debug_assert!((1..=3).contains(&arity));
        JetExpr {
            arity,
            terms: BTreeMap::new(),
        }
    }

    /// Single monomial builder for slot-order lists `(X, f)`, `(X, Y, f)`,
    /// or `(X, Y, Z, f)` depending on arity.
    pub fn monomial(arity: usize, orders: &[u8], coeff: K) -> Result<Self> {
        debug_assert_eq!(orders.len(), arity + 1);
        let mut key = [0u8; 4];
        key[..arity].copy_from_slice(&orders[..arity]);
        key[SLOT_F] = orders[arity];
        let mut out = Self::zero(arity);
        out.accumulate(JetKey::new(key)?, coeff);
        Ok(out)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&JetKey, &K)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &JetKey> {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &JetKey) -> K {
        self.terms.get(key).cloned().unwrap_or_else(K::zero)
    }

    /// First (grade-then-lex smallest) term.
    pub fn leading(&self) -> Option<(&JetKey, &K)> {
        self.terms.iter().next()
    }

    pub fn accumulate(&mut self, key: JetKey, coeff: K) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                let nv = v.add(&coeff);
                if nv.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *v = nv;
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.accumulate(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        JetExpr {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &K) -> Self {
        if s.is_zero() {
            return Self::zero(self.arity);
        }
        JetExpr {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, c)| (*k, c.mul(s))).collect(),
        }
    }

    /// Map coefficients into another field (e.g. weight specialization),
    /// dropping terms that map to zero.
    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> Result<L>) -> Result<JetExpr<L>> {
        let mut out = JetExpr::zero(self.arity);
        for (k, c) in &self.terms {
            out.accumulate(*k, f(c)?);
        }
        Ok(out)
    }

    /// Apply a key rewrite `key → [(key', factor)]`, summing the images.
    pub fn map_terms(
        &self,
        arity: usize,
        f: impl Fn(&JetKey, &K, &mut JetExpr<K>) -> Result<()>,
    ) -> Result<Self> {
        let mut out = Self::zero(arity);
        for (k, c) in &self.terms {
            f(k, c, &mut out)?;
        }
        Ok(out)
    }

    /// Formal derivative in the base variable: the Leibniz image bumping each
    /// slot in turn.
    pub fn derive(&self) -> Result<Self> {
        let slots = self.arity + 1;
        self.map_terms(self.arity, |key, coeff, out| {
            for slot in 0..slots {
                let slot = if slot == self.arity { SLOT_F } else { slot };
                out.accumulate(key.bump(slot, 1)?, coeff.clone());
            }
            Ok(())
        })
    }

    /// Swap two vector-field slots.
    pub fn swap_slots(&self, a: usize, b: usize) -> Self {
        debug_assert!(a < self.arity && b < self.arity);
        let mut out = Self::zero(self.arity);
        for (k, c) in &self.terms {
            let mut o = k.orders();
            o.swap(a, b);
            out.accumulate(JetKey::new(o).expect("swap preserves orders"), c.clone());
        }
        out
    }

    /// Antisymmetrize in the first two slots: `self − swap(self)`.
    pub fn antisymmetrize(&self) -> Self {
        self.sub(&self.swap_slots(SLOT_X, SLOT_Y))
    }

    /// Cyclic slot rotation `(X, Y, Z) → (Z, X, Y)` on arity-3 expressions.
    pub fn cycle3(&self) -> Self {
        debug_assert_eq!(self.arity, 3);
        let mut out = Self::zero(3);
        for (k, c) in &self.terms {
            let o = k.orders();
            let rotated = [o[SLOT_Z], o[SLOT_X], o[SLOT_Y], o[SLOT_F]];
            out.accumulate(JetKey::new(rotated).expect("rotation preserves orders"), c.clone());
        }
        out
    }

    /// Truncate to terms with `X`-order at most `max_x` (the inner test used
    /// by the invariance defects, which live in low `X`-order).
    pub fn sl2_truncation(&self, max_x: u8) -> Self {
        let mut out = Self::zero(self.arity);
        for (k, c) in &self.terms {
            if k.order(SLOT_X) <= max_x {
                out.accumulate(*k, c.clone());
            }
        }
        out
    }

    /// The scalar `q` with `self = q·other`, if one exists (`other` nonzero).
    pub fn ratio_to(&self, other: &Self) -> Option<K> {
        let (k0, c0) = other.leading()?;
        let q = self.coeff(k0).div(c0).ok()?;
        if self.sub(&other.scale(&q)).is_zero() {
            Some(q)
        } else {
            None
        }
    }
}

/// Compose one arity-1 operator into the density slot of another:
/// `(top ∘ bot)(X, Y, f) = top(X, bot(Y, f))`.
///
/// A monomial `X^(i) f^(j)` of `top` receives `bot(Y, f) = Σ Y^(p) f^(q)`,
/// and the `j` density derivatives distribute over the product `Y^(p) f^(q)`
/// by Leibniz: `Σ_r C(j, r) · X^(i) Y^(p+r) f^(q+j−r)`.
pub fn compose_density<K: Field>(top: &JetExpr<K>, bot: &JetExpr<K>) -> Result<JetExpr<K>> {
    debug_assert_eq!(top.arity(), 1);
    debug_assert_eq!(bot.arity(), 1);
    let mut out = JetExpr::zero(2);
    for (tk, tc) in top.terms() {
        let i = tk.order(SLOT_X);
        let j = tk.order(SLOT_F);
        for (bk, bc) in bot.terms() {
            let p = bk.order(SLOT_X);
            let q = bk.order(SLOT_F);
            let c = tc.mul(bc);
            for r in 0..=j {
                let key = JetKey::new([i, p + r, 0, q + j - r])?;
                out.accumulate(key, c.mul(&K::from_rat(binom(j as u32, r as u32))));
            }
        }
    }
    Ok(out)
}

/// Antisymmetrized density composition
/// `top(X, bot(Y, f)) − top(Y, bot(X, f))`: the raw bilinear pairing of two
/// arity-1 operators into an arity-2 one, before any orientation convention.
pub fn compose_antisym<K: Field>(top: &JetExpr<K>, bot: &JetExpr<K>) -> Result<JetExpr<K>> {
    let raw = compose_density(top, bot)?;
    Ok(raw.antisymmetrize())
}

/// Expand one vector-field slot of `expr` by the bracket
/// `[X, ·] = X(·)' − X'(·)`, raising the arity by one.
///
/// The new `X` slot is prepended (receiving the `r` / `r+1` derivative
/// parts), all existing slots shift right by one, and the expanded slot —
/// now at position `slot + 1` — receives the complementary orders:
/// `A^(i) ↦ Σ_r C(i, r) (X^(r) A^(i−r+1) − X^(r+1) A^(i−r))`.
pub fn substitute_bracket<K: Field>(expr: &JetExpr<K>, slot: usize) -> Result<JetExpr<K>> {
    let n = expr.arity();
    debug_assert!(n < 3 && slot < n);
    let mut out = JetExpr::zero(n + 1);
    for (key, co) in expr.terms() {
        let o = key.orders();
        let i = o[slot];
        for r in 0..=i {
            let c = co.mul(&K::from_rat(binom(i as u32, r as u32)));
            let mut base = [0u8; 4];
            for s in 0..n {
                base[s + 1] = o[s];
            }
            base[SLOT_F] = o[SLOT_F];
            let mut plus = base;
            plus[SLOT_X] = r;
            plus[slot + 1] = i - r + 1;
            out.accumulate(JetKey::new(plus)?, c.clone());
            let mut minus = base;
            minus[SLOT_X] = r + 1;
            minus[slot + 1] = i - r;
            out.accumulate(JetKey::new(minus)?, c.neg());
        }
    }
    Ok(out)
}
