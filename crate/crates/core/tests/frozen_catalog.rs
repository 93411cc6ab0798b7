//! The cocycle catalog, the obstruction-class displays, and the expected
//! cohomology dimensions, pinned against hand-tabulated values.

use sl2deform_core::catalog::{
    abc_relation, cocycle, cocycle_exists, minpoly_value, omega, omega_tilde, AbcRelation,
};
use sl2deform_core::cochains::{
    coboundary1, cocycle2_defect, invariance_defect, triviality_test, Triviality,
};
use sl2deform_core::reference::{
    h1_expected, mixing_denominator, mixing_numerator, order6_cocycle_row, solution_dim_expected,
    tabulated_generic_c, tabulated_tilde_coefficient, transvectant_rows,
};
use sl2deform_core::scalars::{rat, rat_i, Field, LambdaScalar, QuadRat, Rat};
use sl2deform_core::jets::{JetExpr, SLOT_F, SLOT_X};
use sl2deform_core::transvectants::{
    bilinear_invariance_defect, classical_normalization, generic_coefficients, is_resonant, jk,
    operator_i, resonant_solutions, shift, transvectant_j,
};
use sl2deform_core::{cochains::h1_dimension, Error};

fn lam() -> LambdaScalar {
    LambdaScalar::lambda()
}

/// All rational weights 2λ ∈ {−16, …, 4} used for grid checks.
fn half_integer_grid() -> Vec<Rat> {
    (-16..=4).map(|n| rat(n, 2)).collect()
}

#[test]
fn first_order_cocycles_close_and_are_invariant_generically() {
    let l = lam();
    for k in 2..=4 {
        let c = cocycle(k, &l).unwrap();
        let mu = c.target();
        assert!(coboundary1(&c.body, &c.lam, &mu).unwrap().is_zero());
        assert!(invariance_defect(&c.body, &c.lam, &mu).unwrap().is_zero());
    }
}

#[test]
fn first_order_cocycles_close_at_exceptional_weights() {
    for (k, w) in [(5, rat_i(0)), (5, rat_i(-4))] {
        let c = cocycle(k, &w).unwrap();
        let mu = c.target();
        assert!(coboundary1(&c.body, &c.lam, &mu).unwrap().is_zero());
        assert!(invariance_defect(&c.body, &c.lam, &mu).unwrap().is_zero());
    }
    let w = QuadRat::theta();
    assert!(minpoly_value(&w).is_zero());
    let c = cocycle(6, &w).unwrap();
    let mu = c.target();
    assert!(coboundary1(&c.body, &c.lam, &mu).unwrap().is_zero());
    assert!(invariance_defect(&c.body, &c.lam, &mu).unwrap().is_zero());
}

#[test]
fn cocycle_existence_matches_the_weight_gates() {
    let l = lam();
    assert!(cocycle_exists(2, &l) && cocycle_exists(3, &l) && cocycle_exists(4, &l));
    assert!(!cocycle_exists(2, &rat(-1, 2)));
    assert!(!cocycle_exists(3, &rat_i(-1)));
    assert!(!cocycle_exists(4, &rat(-3, 2)));
    assert!(cocycle_exists(5, &rat_i(0)) && cocycle_exists(5, &rat_i(-4)));
    assert!(!cocycle_exists(5, &rat_i(1)) && !cocycle_exists(5, &l));
    assert!(cocycle_exists(6, &QuadRat::theta()));
    assert!(!cocycle_exists(6, &rat_i(2)));

    match cocycle(5, &rat_i(1)) {
        Err(Error::NoTableCocycle { weight, k }) => {
            assert_eq!((weight.as_str(), k), ("1", 5));
        }
        other => panic!("expected a missing-cocycle error, got {other:?}"),
    }
}

#[test]
fn low_order_cocycle_displays_are_pinned() {
    // C_{λ,λ+2} = X⁽³⁾f; C_{λ,λ+3} = X⁽³⁾f′ − (λ/2)X⁽⁴⁾f;
    // C_{λ,λ+4} = X⁽³⁾f″ − ((2λ+1)/2)X⁽⁴⁾f′ + (λ(2λ+1)/10)X⁽⁵⁾f.
    let l = lam();
    let two_l1 = l.add(&l).add(&LambdaScalar::from_i64(1));

    let c2 = cocycle(2, &l).unwrap().body;
    assert_eq!(c2.coeff(&key2(&c2, [3, 0])), LambdaScalar::from_i64(1));
    assert_eq!(c2.num_terms(), 1);

    let c3 = cocycle(3, &l).unwrap().body;
    assert_eq!(c3.coeff(&key2(&c3, [3, 1])), LambdaScalar::from_i64(1));
    assert_eq!(
        c3.coeff(&key2(&c3, [4, 0])),
        l.mul(&LambdaScalar::from_rat(rat(-1, 2)))
    );

    let c4 = cocycle(4, &l).unwrap().body;
    assert_eq!(c4.coeff(&key2(&c4, [3, 2])), LambdaScalar::from_i64(1));
    assert_eq!(
        c4.coeff(&key2(&c4, [4, 1])),
        two_l1.mul(&LambdaScalar::from_rat(rat(-1, 2)))
    );
    assert_eq!(
        c4.coeff(&key2(&c4, [5, 0])),
        l.mul(&two_l1).mul(&LambdaScalar::from_rat(rat(1, 10)))
    );

    // C_{0,5} = −3X⁽⁵⁾f′ + 15X⁽⁴⁾f″ − 10X⁽³⁾f⁽³⁾ and
    // C_{−4,1} = 28X⁽⁶⁾f + 63X⁽⁵⁾f′ + 45X⁽⁴⁾f″ + 10X⁽³⁾f⁽³⁾.
    let c50 = cocycle(5, &rat_i(0)).unwrap().body;
    for (orders, v) in [([5u8, 1u8], -3i64), ([4, 2], 15), ([3, 3], -10)] {
        assert_eq!(c50.coeff(&key2(&c50, orders)), rat_i(v));
    }
    let c54 = cocycle(5, &rat_i(-4)).unwrap().body;
    for (orders, v) in [([6u8, 0u8], 28i64), ([5, 1], 63), ([4, 2], 45), ([3, 3], 10)] {
        assert_eq!(c54.coeff(&key2(&c54, orders)), rat_i(v));
    }
}

/// Look up the key with the given `[X, f]` orders in an arity-1 body.
fn key2<K: Field>(e: &sl2deform_core::jets::JetExpr<K>, orders: [u8; 2]) ->
    sl2deform_core::jets::JetKey
{
    *e.keys()
        .find(|k| k.orders() == [orders[0], 0, 0, orders[1]])
        .unwrap_or_else(|| panic!("missing monomial {orders:?}"))
}

#[test]
fn order_six_catalog_row_closes_but_the_tabulated_row_does_not() {
    let w = QuadRat::theta();
    let mu = shift(&w, 6);

    let engine = cocycle(6, &w).unwrap().body;
    assert!(coboundary1(&engine, &w, &mu).unwrap().is_zero());
    // Shared normalization: both rows put 210 on X⁽³⁾f⁽⁴⁾.
    assert_eq!(engine.coeff(&key2(&engine, [3, 4])), QuadRat::from_i64(210));

    let tabulated = order6_cocycle_row().unwrap();
    assert_eq!(
        tabulated.coeff(&key2(&tabulated, [3, 4])),
        QuadRat::from_i64(210)
    );
    // The tabulated display does not satisfy the cocycle equation; the
    // engine's row is the closing one.  Keep both facts pinned.
    assert!(!coboundary1(&tabulated, &w, &mu).unwrap().is_zero());
    assert_ne!(engine, tabulated);
}

#[test]
fn obstruction_displays_are_relative_cocycles() {
    let l = lam();
    for k in [5, 6, 7, 8] {
        let om = omega(k, &l).unwrap();
        let mu = om.target();
        assert!(cocycle2_defect(&om.body, &om.lam, &mu).unwrap().is_zero());
        assert!(invariance_defect(&om.body, &om.lam, &mu).unwrap().is_zero());
    }
    let omt = omega_tilde(&l).unwrap();
    let mu = omt.target();
    assert!(cocycle2_defect(&omt.body, &omt.lam, &mu).unwrap().is_zero());
    assert!(invariance_defect(&omt.body, &omt.lam, &mu).unwrap().is_zero());
}

#[test]
fn singular_obstruction_displays_close_at_their_weights() {
    let nine: Vec<Rat> = vec![rat_i(0), rat_i(-4), rat_i(-8)];
    for w in nine {
        let om = omega(9, &w).unwrap();
        let mu = om.target();
        assert!(cocycle2_defect(&om.body, &om.lam, &mu).unwrap().is_zero());
        assert!(invariance_defect(&om.body, &om.lam, &mu).unwrap().is_zero());
    }
    let th = QuadRat::theta();
    for base in [th.clone(), th.sub(&QuadRat::from_i64(3))] {
        let om = omega(9, &base).unwrap();
        let mu = om.target();
        assert!(cocycle2_defect(&om.body, &om.lam, &mu).unwrap().is_zero());
        assert!(invariance_defect(&om.body, &om.lam, &mu).unwrap().is_zero());
    }
    for base in [th.clone(), th.sub(&QuadRat::from_i64(4))] {
        let om = omega(10, &base).unwrap();
        let mu = om.target();
        assert!(cocycle2_defect(&om.body, &om.lam, &mu).unwrap().is_zero());
        assert!(invariance_defect(&om.body, &om.lam, &mu).unwrap().is_zero());
    }
}

#[test]
fn order_five_class_at_weight_one_is_a_coboundary_with_scale_minus_one_fifth() {
    // At λ = 1 the order-five obstruction lies in the image of the
    // coboundary: specializing the order-six pairing identity gives
    // ∂(jk₆) = −5 Ω, i.e. Ω = −(1/5) ∂(jk₆) in the lead-1 normalization.
    let w = rat_i(1);
    let om = omega(5, &w).unwrap();
    let dj = coboundary1(&jk(6, &w).unwrap(), &w, &shift(&w, 5)).unwrap();
    match triviality_test(&om.body, &dj) {
        Triviality::Coboundary { scale } => assert_eq!(scale, rat(-1, 5)),
        Triviality::Nontrivial { .. } => panic!("expected a coboundary"),
    }
}

#[test]
fn mixing_relation_generic_branch_pins_b_and_flips_the_tabulated_c() {
    let l = lam();
    match abc_relation(&l).unwrap() {
        AbcRelation::Generic { b, c } => {
            let b_expected = mixing_numerator(&l).div(&mixing_denominator(&l)).unwrap();
            assert_eq!(b, b_expected);
            // The engine's decomposition reproduces the tabulated c up to a
            // global sign; the divergence is deliberate and pinned here.
            let c_tab = tabulated_generic_c(&l, &b_expected).unwrap();
            assert_eq!(c, c_tab.neg());
        }
        other => panic!("generic weight must mix both classes, got {other:?}"),
    }
}

#[test]
fn mixing_relation_special_branches() {
    // λ = −3: the two classes coincide and the coboundary target vanishes.
    assert_eq!(abc_relation(&rat_i(-3)).unwrap(), AbcRelation::EqualPair);

    // Roots of the mixing denominator: only the alternate class obstructs,
    // with the engine's c again opposite to the tabulated one.
    for w in [rat_i(-5), rat(-3, 2), rat(1, 2)] {
        assert!(mixing_denominator(&w).is_zero());
        match abc_relation(&w).unwrap() {
            AbcRelation::TildeOnly { c } => {
                assert_eq!(c, tabulated_tilde_coefficient(&w).neg());
            }
            other => panic!("expected the alternate-class branch at {w}, got {other:?}"),
        }
    }

    // Roots of the mixing numerator stay on the generic branch with b = 0.
    for w in [rat_i(-1), rat(-9, 2), rat(-13, 2)] {
        assert!(mixing_numerator(&w).is_zero());
        match abc_relation(&w).unwrap() {
            AbcRelation::Generic { b, c } => {
                assert!(b.is_zero());
                assert_eq!(c, tabulated_generic_c(&w, &b).unwrap().neg());
            }
            other => panic!("expected the generic branch at {w}, got {other:?}"),
        }
    }
}

#[test]
fn transvectant_series_matches_the_tabulated_coefficients() {
    let l = lam();
    assert_eq!(classical_normalization(6), rat_i(3));
    assert_eq!(classical_normalization(7), rat_i(1));
    assert_eq!(classical_normalization(8), rat_i(1));
    for k in [6, 7, 8] {
        let normalized = jk(k, &l)
            .unwrap()
            .scale(&LambdaScalar::from_rat(classical_normalization(k as i32)));
        let rows = transvectant_rows(k as i32, &l);
        assert_eq!(normalized.num_terms(), rows.len());
        for (orders, coeff) in rows {
            assert_eq!(normalized.coeff(&key2(&normalized, orders)), coeff);
        }
        assert_eq!(transvectant_j(k, &l).unwrap().body, normalized);
    }
}

#[test]
fn h1_dimension_matches_the_tabulated_theorem_on_a_grid() {
    for w in half_integer_grid() {
        for k in 2..=8u32 {
            let got = h1_dimension(k, &w).unwrap();
            assert_eq!(
                got,
                h1_expected(k, &w),
                "dimension mismatch at weight {w}, order {k}"
            );
        }
    }
    // Algebraic weights carry the order-six class.
    let th = QuadRat::theta();
    assert_eq!(h1_dimension(6, &th).unwrap(), 1);
    assert_eq!(h1_expected(6, &th), 1);
    // Symbolic weight: generic answers.
    let l = lam();
    for (k, d) in [(2u32, 1usize), (3, 1), (4, 1), (5, 0), (6, 0), (7, 0), (8, 0)] {
        assert_eq!(h1_dimension(k, &l).unwrap(), d);
    }
}

#[test]
fn weight_minus_three_order_seven_is_zero_by_the_invariant_ratio_route() {
    // The order-eight transvectant closes at λ = −3 (its coboundary factor
    // vanishes), yet the dimension is still zero: the candidate is matched
    // by an invariant pure-power 0-cochain on the 2λ = 1 − k branch.  Pin
    // both halves so the tension stays visible rather than silently passing.
    let w = rat_i(-3);
    let j = jk(8, &w).unwrap();
    let d = coboundary1(&j, &w, &shift(&w, 7)).unwrap();
    assert!(d.is_zero(), "the order-eight candidate closes at weight −3");
    assert_eq!(h1_dimension(7, &w).unwrap(), 0);
    assert_eq!(h1_expected(7, &w), 0);
}

#[test]
fn resonant_solution_dimensions_match_the_gated_predicate() {
    for k in 2..=10u32 {
        for s in 0..=12i64 {
            for t in 0..=12i64 {
                let tau = rat(-t, 2);
                let l = rat(-s, 2);
                let dim = resonant_solutions(k, &tau, &l).unwrap().len();
                assert_eq!(
                    dim,
                    solution_dim_expected(k, -t, -s),
                    "solution-space mismatch at k={k}, s={s}, t={t}"
                );
            }
        }
    }
}

#[test]
fn generic_coefficients_agree_with_the_nullspace_route() {
    let tau = rat(1, 3);
    let l = rat(2, 5);
    assert!(!is_resonant(4, &tau, &l));
    let closed = generic_coefficients(4, &tau, &l).unwrap();
    let basis = resonant_solutions(4, &tau, &l).unwrap();
    assert_eq!(basis.len(), 1);
    assert!(closed.ratio_to(&basis[0]).is_some());

    match generic_coefficients(4, &rat_i(0), &l) {
        Err(Error::ResonantWeights) => {}
        other => panic!("resonant weights must be rejected, got {other:?}"),
    }
}

/// Find the coefficient of `φ^(i) ϕ^(j)` in a bilinear body.
fn coeff2(body: &JetExpr<Rat>, i: u8, j: u8) -> Rat {
    body.terms()
        .find(|(key, _)| key.order(SLOT_X) == i && key.order(SLOT_F) == j)
        .map(|(_, c)| c.clone())
        .unwrap_or_else(Rat::zero)
}

#[test]
fn generic_coefficients_low_order_values() {
    // Order 0: the empty product.
    let t0 = generic_coefficients(0, &rat(1, 3), &rat(2, 5)).unwrap();
    assert_eq!(coeff2(&t0, 0, 0), rat_i(1));

    // Order 1: the unique invariant pairing is 2λ·φ′ϕ − 2τ·φϕ′.
    let (tau, l) = (rat(1, 3), rat(2, 5));
    let t1 = generic_coefficients(1, &tau, &l).unwrap();
    assert_eq!(coeff2(&t1, 1, 0), l.add(&l));
    assert_eq!(coeff2(&t1, 0, 1), tau.add(&tau).neg());

    // Order 2 at τ = λ = 1: binomial tops 2τ+1 = 2λ+1 = 3 give (3, −9, 3).
    let one = rat_i(1);
    let t2 = generic_coefficients(2, &one, &one).unwrap();
    assert_eq!(coeff2(&t2, 2, 0), rat_i(3));
    assert_eq!(coeff2(&t2, 1, 1), rat_i(-9));
    assert_eq!(coeff2(&t2, 0, 2), rat_i(3));
}

#[test]
fn generic_coefficients_satisfy_the_recurrence_and_are_invariant() {
    // Ten pinned non-resonant rational weight pairs (2τ and 2λ stay outside
    // {0, −1, …, −(k−1)} for every order k ≤ 8).
    let pairs: [(Rat, Rat); 10] = [
        (rat(1, 3), rat(2, 5)),
        (rat_i(1), rat(1, 2)),
        (rat(3, 2), rat_i(2)),
        (rat(-9, 5), rat(1, 4)),
        (rat(5, 2), rat(-11, 3)),
        (rat(7, 3), rat(1, 7)),
        (rat(-13, 5), rat(-17, 7)),
        (rat_i(4), rat(3, 8)),
        (rat(9, 7), rat(-15, 11)),
        (rat(1, 6), rat(5, 6)),
    ];
    for (tau, l) in &pairs {
        for k in 1..=8u32 {
            assert!(!is_resonant(k, tau, l), "pair (τ={tau}, λ={l}) resonates");
            let table = generic_coefficients(k, tau, l).unwrap();
            // Entrywise recurrence:
            // (i+1)(i+2τ)·c_{i+1,j} + (j+1)(j+2λ)·c_{i,j+1} = 0 for i+j = k−1.
            for i in 0..k {
                let j = k - 1 - i;
                let lhs = rat_i(i as i64 + 1)
                    .mul(&tau.add(tau).add(&rat_i(i as i64)))
                    .mul(&coeff2(&table, i as u8 + 1, j as u8));
                let rhs = rat_i(j as i64 + 1)
                    .mul(&l.add(l).add(&rat_i(j as i64)))
                    .mul(&coeff2(&table, i as u8, j as u8 + 1));
                assert!(
                    lhs.add(&rhs).is_zero(),
                    "recurrence fails at k={k}, i={i}, (τ={tau}, λ={l})"
                );
            }
            // Every entry present and nonzero away from resonance.
            assert_eq!(table.terms().count(), k as usize + 1);
            // Full projective invariance of the table.
            assert!(
                bilinear_invariance_defect(&table, tau, l).unwrap().is_zero(),
                "invariance fails at k={k}, (τ={tau}, λ={l})"
            );
        }
    }
}

#[test]
fn low_order_invariants_exist_only_on_three_branches_and_are_invariant() {
    for k in 3..=8u32 {
        for b in 1..=3i64 {
            let w = rat(b - k as i64, 2);
            let body = operator_i(k, &w).unwrap();
            // A body of total order k maps F_w into F_{w+k−1}.
            let mu = shift(&w, k as i32 - 1);
            assert!(
                invariance_defect(&body, &w, &mu).unwrap().is_zero(),
                "invariance fails at k={k}, branch {b}"
            );
        }
        match operator_i(k, &rat_i(1)) {
            Err(Error::IOperatorUndefined) => {}
            other => panic!("off-branch operator must not exist, got {other:?}"),
        }
    }
}

#[test]
fn error_messages_are_pinned() {
    assert_eq!(
        Error::DivisionByZeroPolynomial.to_string(),
        "division by zero polynomial"
    );
    assert_eq!(Error::PoleAtWeight.to_string(), "pole at weight");
    assert_eq!(
        Error::UnsupportedIdealShape.to_string(),
        "unsupported ideal shape"
    );
    assert_eq!(
        Error::NotInvariantZeroCochain.to_string(),
        "not an invariant 0-cochain"
    );
    assert_eq!(
        Error::NonComposableCup.to_string(),
        "non-composable cup operands"
    );
    assert_eq!(
        Error::ResonantWeights.to_string(),
        "resonant weights: use resonant_solutions"
    );
    assert_eq!(Error::IOperatorUndefined.to_string(), "I-operator undefined");
}
