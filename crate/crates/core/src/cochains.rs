//! Relative Chevalley–Eilenberg calculus on density modules.
//!
//! Cochains take vector-field arguments and one density argument. The
//! differential combines the Lie-derivative action on values and arguments;
//! relativity (vanishing on the projective subalgebra) is tracked by
//! low-order truncation defects. All operations are exact term rewrites on
//! [`JetExpr`] bodies.

use crate::jets::{
    compose_antisym, substitute_bracket, JetExpr, JetKey, SLOT_X, SLOT_Y,
};
use crate::linalg::decompose_in_span;
use crate::scalars::{binom, Field};
use crate::transvectants::{jk, shift};
use crate::{Error, Result};

/// A 1-cochain: bilinear operator body `c(X, f)` mapping `F_lam → F_{lam+k}`.
#[derive(Clone, PartialEq, Debug)]
pub struct Cochain1<K: Field> {
    pub body: JetExpr<K>,
    pub lam: K,
    pub k: i32,
}

impl<K: Field> Cochain1<K> {
    pub fn target(&self) -> K {
        shift(&self.lam, self.k)
    }
}

/// A 2-cochain: trilinear operator body `w(X, Y, f)` mapping
/// `F_lam → F_{lam+k}`, antisymmetric in `X, Y`.
#[derive(Clone, PartialEq, Debug)]
pub struct Cochain2<K: Field> {
    pub body: JetExpr<K>,
    pub lam: K,
    pub k: i32,
}

impl<K: Field> Cochain2<K> {
    pub fn target(&self) -> K {
        shift(&self.lam, self.k)
    }
}

/// Action of a vector field on a `lam`-density, as an arity-1 body:
/// `X f′ + lam·X′ f`.
pub fn lie_density<K: Field>(lam: &K) -> JetExpr<K> {
    let mut out = JetExpr::monomial(1, &[0, 1], K::one()).expect("small orders");
    out = out.add(&JetExpr::monomial(1, &[1, 0], lam.clone()).expect("small orders"));
    out
}

/// Lie derivative of a 1-cochain body along a new first slot `X`, for a
/// cochain of bidegree `(lam, mu)`: the value part
/// `X·c(Y,f)′ + mu·X′·c(Y,f)` minus the density-argument part `c(Y, L_X f)`.
/// (The vector-argument part `c([X,Y], f)` is handled separately.)
pub fn lie_action1<K: Field>(body: &JetExpr<K>, lam: &K, mu: &K) -> Result<JetExpr<K>> {
    debug_assert_eq!(body.arity(), 1);
    let mut out = JetExpr::zero(2);
    for (key, co) in body.terms() {
        let b = key.order(SLOT_X);
        let cf = key.order(crate::jets::SLOT_F);
        out.accumulate(JetKey::new([0, b + 1, 0, cf])?, co.clone());
        out.accumulate(JetKey::new([0, b, 0, cf + 1])?, co.clone());
        out.accumulate(JetKey::new([1, b, 0, cf])?, co.mul(mu));
        for r in 0..=cf {
            let c = co.mul(&K::from_rat(binom(cf as u32, r as u32)));
            out.accumulate(JetKey::new([r, b, 0, cf - r + 1])?, c.neg());
            out.accumulate(JetKey::new([r + 1, b, 0, cf - r])?, c.mul(lam).neg());
        }
    }
    Ok(out)
}

/// Lie derivative of a 2-cochain body along a new first slot `X`, of
/// bidegree `(lam, mu)`; as in [`lie_action1`], vector-argument parts are
/// handled by bracket substitution separately.
pub fn lie_action2<K: Field>(body: &JetExpr<K>, lam: &K, mu: &K) -> Result<JetExpr<K>> {
    debug_assert_eq!(body.arity(), 2);
    let mut out = JetExpr::zero(3);
    for (key, co) in body.terms() {
        let b = key.order(SLOT_X);
        let c = key.order(SLOT_Y);
        let d = key.order(crate::jets::SLOT_F);
        out.accumulate(JetKey::new([0, b + 1, c, d])?, co.clone());
        out.accumulate(JetKey::new([0, b, c + 1, d])?, co.clone());
        out.accumulate(JetKey::new([0, b, c, d + 1])?, co.clone());
        out.accumulate(JetKey::new([1, b, c, d])?, co.mul(mu));
        for r in 0..=d {
            let f = co.mul(&K::from_rat(binom(d as u32, r as u32)));
            out.accumulate(JetKey::new([r, b, c, d - r + 1])?, f.neg());
            out.accumulate(JetKey::new([r + 1, b, c, d - r])?, f.mul(lam).neg());
        }
    }
    Ok(out)
}

/// Coboundary of a 1-cochain body of bidegree `(lam, mu)`: antisymmetrized
/// Lie action minus the bracket-argument term.
pub fn coboundary1<K: Field>(body: &JetExpr<K>, lam: &K, mu: &K) -> Result<JetExpr<K>> {
    let a = lie_action1(body, lam, mu)?;
    Ok(a.antisymmetrize().sub(&substitute_bracket(body, 0)?))
}

/// Cocycle defect of a 2-cochain body of bidegree `(lam, mu)`: the cyclic
/// symmetrization of (Lie action minus first-slot bracket term). Vanishes
/// exactly when the 2-cochain is closed.
pub fn cocycle2_defect<K: Field>(body: &JetExpr<K>, lam: &K, mu: &K) -> Result<JetExpr<K>> {
    let base = lie_action2(body, lam, mu)?.sub(&substitute_bracket(body, 0)?);
    let c1 = base.cycle3();
    let c2 = c1.cycle3();
    Ok(base.add(&c1).add(&c2))
}

/// Relativity defect of a cochain body of bidegree `(lam, mu)`: the full
/// Lie-derivative defect truncated to acting fields of derivative order ≤ 2
/// (the projective subalgebra). Zero exactly for relative cochains.
/// Dispatches on the body's arity (1 or 2).
pub fn invariance_defect<K: Field>(body: &JetExpr<K>, lam: &K, mu: &K) -> Result<JetExpr<K>> {
    let full = match body.arity() {
        1 => lie_action1(body, lam, mu)?.sub(&substitute_bracket(body, 0)?),
        2 => lie_action2(body, lam, mu)?
            .sub(&substitute_bracket(body, 0)?)
            .sub(&substitute_bracket(body, 1)?),
        a => unreachable!("invariance defect on arity {a}"),
    };
    Ok(full.sl2_truncation(2))
}

/// Coboundary body of the basis 0-cochain `f^(j)` of bidegree `(lam, mu)`.
fn coboundary0_basis<K: Field>(j: u8, lam: &K, mu: &K) -> Result<JetExpr<K>> {
    let mut out = JetExpr::zero(1);
    out.accumulate(JetKey::new([0, 0, 0, j + 1])?, K::one());
    out.accumulate(JetKey::new([1, 0, 0, j])?, mu.clone());
    for r in 0..=j {
        let c = K::from_rat(binom(j as u32, r as u32));
        out.accumulate(JetKey::new([r, 0, 0, j - r + 1])?, c.neg());
        out.accumulate(JetKey::new([r + 1, 0, 0, j - r])?, c.mul(lam).neg());
    }
    Ok(out)
}

/// Coboundary of the 0-cochain `g = Σ_j coeffs[j] · f^(j)` at source weight
/// `lam` (target `lam + deg g`).
///
/// The result is a relative 1-cochain only when `g` itself is invariant
/// under the projective subalgebra; otherwise the low-order truncation of
/// the coboundary survives and the call fails with
/// [`Error::NotInvariantZeroCochain`].
pub fn coboundary0<K: Field>(coeffs: &[K], lam: &K) -> Result<Cochain1<K>> {
    let deg = coeffs
        .iter()
        .rposition(|c| !c.is_zero())
        .ok_or(Error::NotInvariantZeroCochain)?;
    let mu = shift(lam, deg as i32);
    let mut body = JetExpr::zero(1);
    for (j, a) in coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        body = body.add(&coboundary0_basis(j as u8, lam, &mu)?.scale(a));
    }
    if !body.sl2_truncation(2).is_zero() {
        return Err(Error::NotInvariantZeroCochain);
    }
    Ok(Cochain1 {
        body,
        lam: lam.clone(),
        k: deg as i32,
    })
}

/// Cup product of two 1-cochains, oriented so that the classical order-5
/// pairing satisfies its printed normalization. Errors unless the operands
/// compose: the source of `c1` must equal the target of `c2`.
pub fn cup<K: Field>(c1: &Cochain1<K>, c2: &Cochain1<K>) -> Result<Cochain2<K>> {
    if !c1.lam.sub(&c2.target()).is_zero() {
        return Err(Error::NonComposableCup);
    }
    let body = compose_antisym(&c1.body, &c2.body)?.neg();
    Ok(Cochain2 {
        body,
        lam: c2.lam.clone(),
        k: c1.k + c2.k,
    })
}

/// Outcome of testing a 2-cocycle against the coboundary line it may lie on.
#[derive(Clone, PartialEq, Debug)]
pub enum Triviality<K: Field> {
    /// `omega = scale · dj` exactly.
    Coboundary { scale: K },
    /// Not proportional; the obstruction left after the best pivot match.
    Nontrivial { residual: JetExpr<K> },
}

/// Decide whether `omega` is the coboundary multiple of a given reference
/// coboundary `dj` (both arity-2 bodies of the same bidegree).
///
/// If `dj ≡ 0` the only coboundary available is zero, so `omega` is trivial
/// exactly when it vanishes. Otherwise the candidate scale is fixed by the
/// first (grade-ordered) monomial of `dj` and verified exactly.
pub fn triviality_test<K: Field>(omega: &JetExpr<K>, dj: &JetExpr<K>) -> Triviality<K> {
    let Some((piv, dc)) = dj.leading() else {
        return if omega.is_zero() {
            Triviality::Coboundary { scale: K::zero() }
        } else {
            Triviality::Nontrivial {
                residual: omega.clone(),
            }
        };
    };
    let scale = omega
        .coeff(piv)
        .div(dc)
        .expect("leading coefficient is nonzero");
    let residual = omega.sub(&dj.scale(&scale));
    if residual.is_zero() {
        Triviality::Coboundary { scale }
    } else {
        Triviality::Nontrivial { residual }
    }
}

/// Exact span membership: coefficients expressing `target` over `gens`, or
/// `None` if outside the span. Coordinates run over the union of monomials.
pub fn decompose<K: Field>(target: &JetExpr<K>, gens: &[&JetExpr<K>]) -> Option<Vec<K>> {
    let mut keys: Vec<JetKey> = target.keys().copied().collect();
    for g in gens {
        for k in g.keys() {
            if !keys.contains(k) {
                keys.push(*k);
            }
        }
    }
    keys.sort();
    let owned: Vec<JetExpr<K>> = gens.iter().map(|g| (*g).clone()).collect();
    let sol = decompose_in_span(target, &owned, &keys, |e, k| e.coeff(k))?;
    Some(sol)
}

/// Dimension of the relative first cohomology in order `k` at weight `lam`.
///
/// The candidate class is the order-`(k+1)` transvectant: if its coboundary
/// is nonzero there is no class; if it vanishes, the class survives unless
/// it is itself the coboundary of an invariant 0-cochain, which happens only
/// on the branch `2·lam = 1 − k` where the pure derivative power is
/// projectively invariant.
pub fn h1_dimension<K: Field>(k: u32, lam: &K) -> Result<usize> {
    let j = jk(k + 1, lam)?;
    let mu = shift(lam, k as i32);
    let d = coboundary1(&j, lam, &mu)?;
    if !d.is_zero() {
        return Ok(0);
    }
    if lam.add(lam).eq_i64(1 - k as i64) {
        let d0 = coboundary0_basis(k as u8, lam, &mu)?;
        if !d0.is_zero() && j.ratio_to(&d0).is_some() {
            return Ok(0);
        }
    }
    Ok(1)
}
