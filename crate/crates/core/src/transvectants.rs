//! Bilinear invariant operators between density modules.
//!
//! For weights `(τ, λ)` on the two arguments, the bilinear operators of
//! total order `k` commuting with the projective action form a space cut out
//! by a bidiagonal linear system. Away from resonances it is spanned by a
//! single classical expression with closed-form binomial coefficients; at
//! resonant weights the space is computed as an exact nullspace. The
//! distinguished family used throughout the engine is the one with a
//! vector-field first argument (`τ = −1`), built by an integer recurrence.

use crate::jets::{JetExpr, JetKey, SLOT_F, SLOT_X};
use crate::linalg::Matrix;
use crate::scalars::{binom, gbinom, rat, rat_i, Field, Rat};
use crate::{Error, Result};

/// Shift a weight by an integer: `lam + n`.
pub fn shift<K: Field>(lam: &K, n: i32) -> K {
    lam.add(&K::from_i64(n as i64))
}

/// `2·lam + n`.
fn two_lam_plus<K: Field>(lam: &K, n: i32) -> K {
    lam.add(lam).add(&K::from_i64(n as i64))
}

/// Classical normalization factor for the order-`m` transvectant of the
/// distinguished family: the order-6 operator is traditionally scaled by 3.
pub fn classical_normalization(m: i32) -> Rat {
    if m == 6 {
        rat_i(3)
    } else {
        rat_i(1)
    }
}

/// Body of the order-`k` transvectant with vector-field first slot, in the
/// engine normalization `c₃ = 1`: coefficients satisfy
/// `(i+1)(i−2)·c_{i+1} = −(j+1)(j+2λ)·c_i` with `j = k−1−i`, and
/// `c₀ = c₁ = c₂ = 0`.
pub fn jk<K: Field>(k: u32, lam: &K) -> Result<JetExpr<K>> {
    debug_assert!(k >= 3);
    let mut out = JetExpr::zero(1);
    let mut c = K::one();
    for i in 3..=k {
        out = out.add(&JetExpr::monomial(1, &[i as u8, (k - i) as u8], c.clone())?);
        if i == k {
            break;
        }
        let j = (k - 1 - i) as i32;
        let num = K::from_i64((j + 1) as i64).mul(&two_lam_plus(lam, j));
        let den = K::from_rat(rat(((i + 1) * (i - 2)) as i64, 1));
        c = c.mul(&num.neg()).div(&den)?;
    }
    Ok(out)
}

/// The order-`k` transvectant `J_k` as a 1-cochain `F_λ → F_{λ+k−1}`, in the
/// classical normalization (`J₆` carries an extra factor 3).
pub fn transvectant_j<K: Field>(k: u32, lam: &K) -> Result<crate::cochains::Cochain1<K>> {
    let body = jk(k, lam)?.scale(&K::from_rat(classical_normalization(k as i32)));
    Ok(crate::cochains::Cochain1 {
        body,
        lam: lam.clone(),
        k: k as i32 - 1,
    })
}

/// Whether `(τ, λ)` is resonant at order `k`: `2τ` or `2λ` lies in
/// `{0, −1, …, −(k−1)}`.
pub fn is_resonant<K: Field>(k: u32, tau: &K, lam: &K) -> bool {
    (0..k as i32).any(|n| two_lam_plus(tau, n).is_zero() || two_lam_plus(lam, n).is_zero())
}

/// Closed-form coefficients of the order-`k` bilinear invariant at
/// non-resonant weights: `c_{i,j} = (−1)^j · C(2τ+k−1, j) · C(2λ+k−1, i)` on
/// the monomial with `i` derivatives on the first slot and `j = k − i` on the
/// second (the classical bilinear-covariant coefficients; each binomial top
/// pairs one slot's weight with the other slot's derivative order). Resonant
/// weights are rejected; use [`resonant_solutions`].
pub fn generic_coefficients<K: Field>(k: u32, tau: &K, lam: &K) -> Result<JetExpr<K>> {
    if is_resonant(k, tau, lam) {
        return Err(Error::ResonantWeights);
    }
    let two_tau_k = two_lam_plus(tau, k as i32 - 1);
    let two_lam_k = two_lam_plus(lam, k as i32 - 1);
    let mut out = JetExpr::zero(1);
    for i in 0..=k {
        let j = k - i;
        let mut c = gbinom(&two_tau_k, j).mul(&gbinom(&two_lam_k, i));
        if j % 2 == 1 {
            c = c.neg();
        }
        out = out.add(&JetExpr::monomial(1, &[i as u8, j as u8], c)?);
    }
    Ok(out)
}

/// Exact basis of the order-`k` bilinear invariants at arbitrary weights:
/// the nullspace of the bidiagonal system
/// `(i+1)(i+2τ)·c_{i+1} + (j+1)(j+2λ)·c_i = 0`, `j = k−1−i`, `0 ≤ i < k`.
pub fn resonant_solutions<K: Field>(k: u32, tau: &K, lam: &K) -> Result<Vec<JetExpr<K>>> {
    let mut m = Matrix::zeros(k as usize, k as usize + 1);
    for i in 0..k as usize {
        let j = (k as usize - 1 - i) as i32;
        m.set(
            i,
            i + 1,
            K::from_i64(i as i64 + 1).mul(&two_lam_plus(tau, i as i32)),
        );
        m.set(
            i,
            i,
            K::from_i64((j + 1) as i64).mul(&two_lam_plus(lam, j)),
        );
    }
    let mut basis = Vec::new();
    for vec in m.nullspace() {
        let mut body = JetExpr::zero(1);
        for (i, c) in vec.into_iter().enumerate() {
            body = body.add(&JetExpr::monomial(1, &[i as u8, (k as usize - i) as u8], c)?);
        }
        basis.push(body);
    }
    Ok(basis)
}

/// Projective-invariance defect of a bilinear body acting on a pair of
/// density arguments of weights `(τ, λ)`: the Lie derivative of the value —
/// each order-`k` monomial maps into weight `τ + λ + k` — minus the actions
/// on both arguments, truncated to acting fields of derivative order ≤ 2.
/// Zero exactly when the body commutes with the projective action.
///
/// Unlike [`crate::cochains::invariance_defect`], the first slot transforms
/// as a density of weight `τ` rather than as a vector field.
pub fn bilinear_invariance_defect<K: Field>(
    body: &JetExpr<K>,
    tau: &K,
    lam: &K,
) -> Result<JetExpr<K>> {
    debug_assert_eq!(body.arity(), 1);
    let mut out = JetExpr::zero(2);
    for (key, co) in body.terms() {
        let b = key.order(SLOT_X);
        let cf = key.order(SLOT_F);
        let mu = shift(&tau.add(lam), (b + cf) as i32);
        out.accumulate(JetKey::new([0, b + 1, 0, cf])?, co.clone());
        out.accumulate(JetKey::new([0, b, 0, cf + 1])?, co.clone());
        out.accumulate(JetKey::new([1, b, 0, cf])?, co.mul(&mu));
        for r in 0..=b {
            let c = co.mul(&K::from_rat(binom(b as u32, r as u32)));
            out.accumulate(JetKey::new([r, b - r + 1, 0, cf])?, c.neg());
            out.accumulate(JetKey::new([r + 1, b - r, 0, cf])?, c.mul(tau).neg());
        }
        for r in 0..=cf {
            let c = co.mul(&K::from_rat(binom(cf as u32, r as u32)));
            out.accumulate(JetKey::new([r, b, 0, cf - r + 1])?, c.neg());
            out.accumulate(JetKey::new([r + 1, b, 0, cf - r])?, c.mul(lam).neg());
        }
    }
    Ok(out.sl2_truncation(2))
}

/// The exceptional low-order invariant `I_k`, defined only on the three
/// branches `2λ = b − k`, `b ∈ {1, 2, 3}`:
///
/// * branch 1: `f^(k)`;
/// * branch 2: `f^(k) + (k/2)·X′ f^(k−1)`;
/// * branch 3: `f^(k) + k·X′ f^(k−1) + (k(k−1)/2)·X″ f^(k−2)`.
///
/// These are invariant 1-cochain bodies of low vector-field order (≤ 2) but
/// are not relative, so they never enter coboundary calculus; outside the
/// three branches the operator does not exist.
pub fn operator_i<K: Field>(k: u32, lam: &K) -> Result<JetExpr<K>> {
    debug_assert!(k >= 2);
    let branch = (1..=3)
        .find(|&b| two_lam_plus(lam, k as i32 - b).is_zero())
        .ok_or(Error::IOperatorUndefined)?;
    let mut out = JetExpr::monomial(1, &[0, k as u8], K::one())?;
    if branch >= 2 {
        let c1 = if branch == 2 {
            K::from_rat(rat(k as i64, 2))
        } else {
            K::from_i64(k as i64)
        };
        out = out.add(&JetExpr::monomial(1, &[1, k as u8 - 1], c1)?);
    }
    if branch == 3 {
        let c2 = K::from_rat(rat((k * (k - 1)) as i64, 2));
        out = out.add(&JetExpr::monomial(1, &[2, k as u8 - 2], c2)?);
    }
    Ok(out)
}
