//! Exact identities between cup products, obstruction classes, and
//! transvectant coboundaries, verified symbolically over the rational
//! function field in the weight.

use sl2deform_core::catalog::{cocycle, omega};
use sl2deform_core::cochains::{coboundary1, cup, Cochain1, Cochain2};
use sl2deform_core::reference::dj8_display;
use sl2deform_core::scalars::{Field, LambdaScalar};
use sl2deform_core::transvectants::{jk, shift, transvectant_j};
use sl2deform_core::Error;

fn lam() -> LambdaScalar {
    LambdaScalar::lambda()
}

fn li(n: i64) -> LambdaScalar {
    LambdaScalar::from_i64(n)
}

/// `c3 λ³ + c2 λ² + c1 λ + c0` in the symbolic weight.
fn cubic(c3: i64, c2: i64, c1: i64, c0: i64) -> LambdaScalar {
    let l = lam();
    let mut v = li(c3);
    for c in [c2, c1, c0] {
        v = v.mul(&l).add(&li(c));
    }
    v
}

fn catalog_at(k: i32, base: &LambdaScalar) -> Cochain1<LambdaScalar> {
    cocycle(k, base).unwrap()
}

fn scaled(c: &Cochain2<LambdaScalar>, s: &LambdaScalar) -> sl2deform_core::jets::JetExpr<LambdaScalar> {
    c.body.scale(s)
}

#[test]
fn order_five_class_has_the_two_pinned_cup_presentations() {
    let l = lam();
    let om5 = omega(5, &l).unwrap();

    // (λ+4) Ω₅ = 2 ⟨C_{λ+2,λ+5}, C_{λ,λ+2}⟩
    let cup_23 = cup(&catalog_at(3, &shift(&l, 2)), &catalog_at(2, &l)).unwrap();
    assert_eq!(scaled(&om5, &l.add(&li(4))), cup_23.body.scale(&li(2)));

    // λ Ω₅ = −2 ⟨C_{λ+3,λ+5}, C_{λ,λ+3}⟩
    let cup_32 = cup(&catalog_at(2, &shift(&l, 3)), &catalog_at(3, &l)).unwrap();
    assert_eq!(scaled(&om5, &l), cup_32.body.scale(&li(-2)));
}

#[test]
fn order_six_class_has_the_pinned_triple_relation() {
    let l = lam();
    let om6 = omega(6, &l).unwrap();
    let two_l1 = l.add(&l).add(&li(1));

    // 5(2λ+1) Ω₆ = −2(2λ+1) ⟨C_{λ+3,λ+6}, C_{λ,λ+3}⟩ = 10 ⟨C_{λ+4,λ+6}, C_{λ,λ+4}⟩
    let lhs = scaled(&om6, &two_l1.mul(&li(5)));
    let cup_33 = cup(&catalog_at(3, &shift(&l, 3)), &catalog_at(3, &l)).unwrap();
    assert_eq!(lhs, cup_33.body.scale(&two_l1.mul(&li(-2))));
    let cup_42 = cup(&catalog_at(2, &shift(&l, 4)), &catalog_at(4, &l)).unwrap();
    assert_eq!(lhs, cup_42.body.scale(&li(10)));
}

#[test]
fn transvectant_coboundaries_are_the_pinned_class_multiples() {
    let l = lam();

    // 3 ∂J₆ = −λ(λ² + 6λ + 8) Ω₅
    let dj6 = coboundary1(&jk(6, &l).unwrap(), &l, &shift(&l, 5)).unwrap();
    let om5 = omega(5, &l).unwrap();
    assert_eq!(
        dj6.scale(&li(3)),
        om5.body.scale(&cubic(0, 1, 6, 8).mul(&l).neg())
    );

    // 3 ∂J₇ = (4λ³ + 30λ² + 56λ + 15) Ω₆
    let dj7 = coboundary1(&jk(7, &l).unwrap(), &l, &shift(&l, 6)).unwrap();
    let om6 = omega(6, &l).unwrap();
    assert_eq!(dj7.scale(&li(3)), om6.body.scale(&cubic(4, 30, 56, 15)));
}

#[test]
fn order_eight_coboundary_matches_the_tabulated_display_term_by_term() {
    let l = lam();
    let dj8 = coboundary1(&jk(8, &l).unwrap(), &l, &shift(&l, 7)).unwrap();
    assert_eq!(dj8, dj8_display(&l).unwrap());
}

#[test]
fn order_eight_coboundary_decomposes_over_the_nested_cup_routes() {
    // ∂J₈ at weight λ is a combination of the two nested routes through the
    // classically normalized order-six transvectant (leading coefficient 3)
    // and the gap-two cocycle:
    //   A = λ(λ+2)(4λ² − 109) / (108(λ+5)),
    //   B = (λ+4)(λ+6)(4λ² + 48λ + 35) / (108(λ+1)).
    let l = lam();
    let dj8 = coboundary1(&jk(8, &l).unwrap(), &l, &shift(&l, 7)).unwrap();

    let j6_up2 = transvectant_j(6, &shift(&l, 2)).unwrap();
    let route1 = cup(&j6_up2, &catalog_at(2, &l)).unwrap();

    let j6_base = transvectant_j(6, &l).unwrap();
    let route2 = cup(&catalog_at(2, &shift(&l, 5)), &j6_base).unwrap();

    let a = l
        .mul(&l.add(&li(2)))
        .mul(&cubic(0, 4, 0, -109))
        .div(&l.add(&li(5)).mul(&li(108)))
        .unwrap();
    let b = l
        .add(&li(4))
        .mul(&l.add(&li(6)))
        .mul(&cubic(0, 4, 48, 35))
        .div(&l.add(&li(1)).mul(&li(108)))
        .unwrap();

    let combined = route1.body.scale(&a).add(&route2.body.scale(&b));
    assert_eq!(dj8, combined);

    // In particular the three 2-cochains are linearly dependent: the written
    // combination leaves no residual on any jet monomial.
    assert!(dj8.sub(&combined).is_zero());
}

#[test]
fn cup_rejects_non_composable_weights() {
    let l = lam();
    let bottom = catalog_at(2, &l);
    let top = catalog_at(3, &shift(&l, 4));
    match cup(&top, &bottom) {
        Err(Error::NonComposableCup) => {}
        other => panic!("mismatched weights must be rejected, got {other:?}"),
    }
}
