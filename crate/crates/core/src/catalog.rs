//! Catalog of the nonzero relative cohomology classes and their pairings.
//!
//! The order-`k` relative 1-cocycles `C_{λ,λ+k}` exist for `k ∈ {2, 3, 4}`
//! away from one excluded weight each, at two rational weights for `k = 5`,
//! and at the two roots of `2λ² + 10λ + 3` for `k = 6`. Their cup products
//! generate closed 2-cochains with closed-form displays through order 8 and
//! weight-by-weight constructions at orders 9 and 10. The order-7 displays
//! satisfy a three-term linear relation with the coboundary of the order-8
//! transvectant, classified by [`abc_relation`].

use crate::cochains::{coboundary1, decompose, Cochain1, Cochain2};
use crate::jets::{compose_antisym, JetExpr};
use crate::scalars::{rat, Field};
use crate::transvectants::{jk, shift};
use crate::{Error, Result};

fn li<K: Field>(n: i64) -> K {
    K::from_i64(n)
}

fn lr<K: Field>(n: i64, d: i64) -> K {
    K::from_rat(rat(n, d))
}

/// `2λ + n` at a shifted weight.
fn two_lam_plus<K: Field>(lam: &K, n: i64) -> K {
    lam.add(lam).add(&li(n))
}

/// `2λ² + 10λ + 3`, the minimal polynomial of the order-6 weights.
pub fn minpoly_value<K: Field>(lam: &K) -> K {
    lam.mul(lam)
        .mul(&li(2))
        .add(&lam.mul(&li(10)))
        .add(&li(3))
}

/// Whether the order-`k` catalog 1-cocycle exists at weight `lam`.
pub fn cocycle_exists<K: Field>(k: i32, lam: &K) -> bool {
    match k {
        2 => !two_lam_plus(lam, 1).is_zero(),
        3 => !shift(lam, 1).is_zero(),
        4 => !two_lam_plus(lam, 3).is_zero(),
        5 => lam.eq_i64(0) || lam.eq_i64(-4),
        6 => minpoly_value(lam).is_zero(),
        _ => false,
    }
}

/// The stored order-`k` relative 1-cocycle `C_{λ,λ+k}` at weight `lam`.
pub fn cocycle<K: Field>(k: i32, lam: &K) -> Result<Cochain1<K>> {
    if !cocycle_exists(k, lam) {
        return Err(Error::NoTableCocycle {
            weight: lam.to_string(),
            k,
        });
    }
    let body = match k {
        2 => JetExpr::monomial(1, &[3, 0], K::one())?,
        3 => JetExpr::monomial(1, &[3, 1], K::one())?
            .add(&JetExpr::monomial(1, &[4, 0], lam.mul(&lr(-1, 2)))?),
        4 => {
            let c41 = two_lam_plus(lam, 1).mul(&lr(-1, 2));
            let c50 = lam.mul(&two_lam_plus(lam, 1)).mul(&lr(1, 10));
            JetExpr::monomial(1, &[3, 2], K::one())?
                .add(&JetExpr::monomial(1, &[4, 1], c41)?)
                .add(&JetExpr::monomial(1, &[5, 0], c50)?)
        }
        5 => {
            if lam.eq_i64(0) {
                JetExpr::monomial(1, &[5, 1], li(-3))?
                    .add(&JetExpr::monomial(1, &[4, 2], li(15))?)
                    .add(&JetExpr::monomial(1, &[3, 3], li(-10))?)
            } else {
                JetExpr::monomial(1, &[6, 0], li(28))?
                    .add(&JetExpr::monomial(1, &[5, 1], li(63))?)
                    .add(&JetExpr::monomial(1, &[4, 2], li(45))?)
                    .add(&JetExpr::monomial(1, &[3, 3], li(10))?)
            }
        }
        6 => jk(7, lam)?.scale(&li(210)),
        _ => unreachable!("existence already checked"),
    };
    Ok(Cochain1 {
        body,
        lam: lam.clone(),
        k,
    })
}

/// Antisymmetrized sum of `(X-order, Y-order, f-order)` monomials: each
/// entry contributes `X^(a) Y^(b) f^(c) − Y^(a) X^(b) f^(c)`.
pub fn antisym_pairs<K: Field>(entries: &[([u8; 3], K)]) -> Result<JetExpr<K>> {
    let mut raw = JetExpr::zero(2);
    for (o, c) in entries {
        raw = raw.add(&JetExpr::monomial(2, o, c.clone())?);
    }
    Ok(raw.antisymmetrize())
}

/// Raw oriented pairing used by the printed displays at orders ≥ 8: the
/// antisymmetrized density composition of two catalog cocycles, *without*
/// the engine cup orientation.
fn display_pairing<K: Field>(
    top_k: i32,
    top_lam: &K,
    bot_k: i32,
    bot_lam: &K,
) -> Result<JetExpr<K>> {
    let top = cocycle(top_k, top_lam)?;
    let bot = cocycle(bot_k, bot_lam)?;
    compose_antisym(&top.body, &bot.body)
}

/// The closed 2-cocycle `Ω_{λ,λ+k}` in its display orientation.
///
/// Orders 5–8 have weight-uniform closed forms; orders 9 and 10 exist only
/// at isolated weights, where the display is the oriented pairing of the two
/// catalog cocycles filling the window.
pub fn omega<K: Field>(k: i32, lam: &K) -> Result<Cochain2<K>> {
    let no_entry = || Error::NoCatalogOmega {
        weight: lam.to_string(),
        k,
    };
    let body = match k {
        5 => antisym_pairs(&[([4, 3, 0], K::one())])?,
        6 => antisym_pairs(&[
            ([3, 4, 1], K::one()),
            ([3, 5, 0], lam.mul(&lr(-1, 5))),
        ])?,
        7 => {
            let c540 = lam
                .mul(&two_lam_plus(lam, 7))
                .mul(&shift(lam, 8))
                .mul(&lr(-1, 20));
            let c531 = two_lam_plus(lam, 0)
                .mul(lam)
                .add(&lam.mul(&li(23)))
                .add(&li(11))
                .mul(&lr(1, 10));
            antisym_pairs(&[
                ([5, 4, 0], c540),
                ([3, 6, 0], lam.mul(&lr(-1, 2))),
                ([5, 3, 1], c531),
                ([3, 4, 2], shift(lam, 11).mul(&lr(1, 2))),
            ])?
        }
        8 => {
            let t1 = two_lam_plus(lam, 1);
            let t9 = two_lam_plus(lam, 9);
            antisym_pairs(&[
                ([4, 6, 0], lam.mul(&t1).mul(&t9).mul(&lr(-1, 20))),
                ([3, 7, 0], lam.mul(&t1).mul(&lr(1, 10))),
                ([5, 4, 1], t1.mul(&t9).mul(&lr(-9, 20))),
                ([3, 6, 1], t1.mul(&two_lam_plus(lam, -5)).mul(&lr(1, 10))),
                ([5, 3, 2], shift(lam, 1).mul(&lr(18, 5))),
                ([4, 3, 3], li(-6)),
            ])?
        }
        9 => {
            if lam.eq_i64(0) {
                display_pairing(4, &shift(lam, 5), 5, lam)?
            } else if lam.eq_i64(-4) {
                display_pairing(5, &shift(lam, 4), 4, lam)?
            } else if lam.eq_i64(-8) {
                display_pairing(5, &shift(lam, 4), 4, lam)?
            } else if minpoly_value(lam).is_zero() {
                display_pairing(3, &shift(lam, 6), 6, lam)?
            } else if minpoly_value(&shift(lam, 3)).is_zero() {
                display_pairing(6, &shift(lam, 3), 3, lam)?
            } else {
                return Err(no_entry());
            }
        }
        10 => {
            if minpoly_value(lam).is_zero() {
                display_pairing(4, &shift(lam, 6), 6, lam)?
            } else if minpoly_value(&shift(lam, 4)).is_zero() {
                display_pairing(6, &shift(lam, 4), 4, lam)?
            } else {
                return Err(no_entry());
            }
        }
        _ => return Err(no_entry()),
    };
    Ok(Cochain2 {
        body,
        lam: lam.clone(),
        k,
    })
}

/// The companion order-7 display `Ω̃_{λ,λ+7}`.
pub fn omega_tilde<K: Field>(lam: &K) -> Result<Cochain2<K>> {
    let t1 = two_lam_plus(lam, 1);
    let body = antisym_pairs(&[
        ([3, 6, 0], lam.mul(&t1).mul(&lr(1, 10))),
        ([4, 5, 0], lam.mul(&shift(lam, 4)).mul(&t1).mul(&lr(-1, 20))),
        ([3, 5, 1], shift(lam, -5).mul(&t1).mul(&lr(1, 10))),
        ([3, 4, 2], shift(lam, -5).mul(&lr(-1, 2))),
    ])?;
    Ok(Cochain2 {
        body,
        lam: lam.clone(),
        k: 7,
    })
}

/// How the two order-7 displays relate to the coboundary of the order-8
/// transvectant at a given weight.
#[derive(Clone, PartialEq, Debug)]
pub enum AbcRelation<K: Field> {
    /// `Ω₇ + b·Ω̃₇ = c·∂J₈` with the leading coefficient normalized to 1.
    Generic { b: K, c: K },
    /// The generic decomposition degenerates (`b → ∞`); instead
    /// `Ω̃₇ = c·∂J₈` on its own.
    TildeOnly { c: K },
    /// `Ω₇ = Ω̃₇` and `∂J₈ = 0`: every combination with `a + b = 0` holds.
    EqualPair,
}

/// Classify the three-term relation among `Ω₇`, `Ω̃₇`, and `∂J₈` at `lam`.
pub fn abc_relation<K: Field>(lam: &K) -> Result<AbcRelation<K>> {
    let om = omega(7, lam)?.body;
    let omt = omega_tilde(lam)?.body;
    let dj = coboundary1(&jk(8, lam)?, lam, &shift(lam, 7))?;
    if om.sub(&omt).is_zero() && dj.is_zero() {
        return Ok(AbcRelation::EqualPair);
    }
    if let Some(sol) = decompose(&om, &[&omt, &dj]) {
        return Ok(AbcRelation::Generic {
            b: sol[0].neg(),
            c: sol[1].clone(),
        });
    }
    if let Some(c) = omt.ratio_to(&dj) {
        return Ok(AbcRelation::TildeOnly { c });
    }
    Err(Error::DecompositionFailure(format!(
        "order-7 relation at weight {lam}"
    )))
}
