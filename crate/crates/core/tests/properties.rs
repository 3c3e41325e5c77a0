use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use motivic_dt::dt::{self, omega_bbs, omega_curv, omega_series};
use motivic_dt::lambda::{power, sigma_n};
use motivic_dt::oracles::plane_partitions_count;
use motivic_dt::quiver::presets::{bbs, conifold_dims, conifold_framed, framed_loop_dims, q_r};
use motivic_dt::relative::{split_atoms, DiagonalAtom, DiagonalRelativeSeries, PointLocation, SupportLabel};
use motivic_dt::series::product_expand;
use motivic_dt::{half_power, MotiveClass, MotiveSeries, Representation};

fn arb_class() -> impl Strategy<Value = MotiveClass> {
    prop::collection::vec((-4i64..5, -2i64..3), 0..3).prop_map(MotiveClass::from_terms)
}

fn arb_unit_series(order: usize) -> impl Strategy<Value = MotiveSeries> {
    prop::collection::vec(arb_class(), order).prop_map(move |c| {
        let mut v = vec![MotiveClass::one()];
        v.extend(c);
        MotiveSeries::from_coeffs(v, order)
    })
}

fn arb_weights(order: usize) -> impl Strategy<Value = MotiveSeries> {
    prop::collection::vec(arb_class(), order).prop_map(move |c| {
        let mut v = vec![MotiveClass::zero()];
        v.extend(c);
        MotiveSeries::from_coeffs(v, order)
    })
}

const ORDER: usize = 5;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn power_zero_and_one(a in arb_unit_series(ORDER)) {
        prop_assert_eq!(power(&a, &MotiveClass::zero()).unwrap(), MotiveSeries::one(ORDER));
        prop_assert_eq!(power(&a, &MotiveClass::one()).unwrap(), a);
    }

    #[test]
    fn power_of_product(a in arb_unit_series(ORDER), b in arb_unit_series(ORDER), x in arb_class()) {
        let lhs = power(&(&a * &b), &x).unwrap();
        prop_assert_eq!(lhs, &power(&a, &x).unwrap() * &power(&b, &x).unwrap());
    }

    #[test]
    fn power_of_sum(a in arb_unit_series(ORDER), x in arb_class(), y in arb_class()) {
        let lhs = power(&a, &(&x + &y)).unwrap();
        prop_assert_eq!(lhs, &power(&a, &x).unwrap() * &power(&a, &y).unwrap());
    }

    #[test]
    fn power_of_power(a in arb_unit_series(ORDER), x in arb_class(), y in arb_class()) {
        let lhs = power(&a, &(&x * &y)).unwrap();
        prop_assert_eq!(lhs, power(&power(&a, &x).unwrap(), &y).unwrap());
    }

    #[test]
    fn power_of_one_plus_t(x in arb_class()) {
        let s = MotiveSeries::from_coeffs(vec![MotiveClass::one(), MotiveClass::one()], ORDER);
        let p = power(&s, &x).unwrap();
        prop_assert!(p.coeff(0).is_one());
        prop_assert_eq!(p.coeff(1), &x);
    }

    #[test]
    fn power_commutes_with_t_to_the_k(a in arb_unit_series(ORDER), x in arb_class(), k in 1usize..4) {
        let one = MotiveClass::one();
        let lhs = power(&a, &x).unwrap().substitute_t(&one, k).unwrap();
        prop_assert_eq!(lhs, power(&a.substitute_t(&one, k).unwrap(), &x).unwrap());
    }

    #[test]
    fn lambda_relation_with_difference(a in arb_class(), b in arb_class(), n in 0usize..7) {
        let diff = &a - &b;
        let sum: MotiveClass = (0..=n).map(|i| &sigma_n(&diff, i) * &sigma_n(&b, n - i)).sum();
        prop_assert_eq!(sum, sigma_n(&a, n));
    }

    #[test]
    fn euler_is_weight_at_one(a in arb_class()) {
        prop_assert_eq!(a.specialize_weight().at_one(), a.specialize_euler());
    }

    #[test]
    fn product_expand_ignores_factor_order(
        fs in prop::collection::vec((arb_unit_series(ORDER), arb_class()), 1..4),
        rot in 0usize..4,
    ) {
        let mut shuffled = fs.clone();
        let r = rot % shuffled.len();
        shuffled.rotate_left(r);
        shuffled.reverse();
        prop_assert_eq!(product_expand(&fs, ORDER).unwrap(), product_expand(&shuffled, ORDER).unwrap());
    }

    #[test]
    fn pushforward_ignores_atom_order(
        w1 in arb_weights(ORDER), w2 in arb_weights(ORDER), w3 in arb_weights(ORDER),
        u1 in arb_class(), u2 in arb_class(), u3 in arb_class(),
    ) {
        let atoms = vec![
            DiagonalAtom::new(u1, SupportLabel::OnCurve, w1).unwrap(),
            DiagonalAtom::new(u2, SupportLabel::OffCurve, w2).unwrap(),
            DiagonalAtom::new(u3, SupportLabel::Ambient, w3).unwrap(),
        ];
        let mut rev = atoms.clone();
        rev.reverse();
        let a = DiagonalRelativeSeries::new(atoms);
        let b = DiagonalRelativeSeries::new(rev);
        prop_assert_eq!(a.pushforward_absolute(ORDER), b.pushforward_absolute(ORDER));
        for p in [PointLocation::OnCurve, PointLocation::OffCurve] {
            prop_assert_eq!(a.fiber_at(p, ORDER), b.fiber_at(p, ORDER));
        }
    }

    #[test]
    fn splitting_an_atom(w in arb_weights(ORDER), u1 in arb_class(), u2 in arb_class()) {
        let whole = DiagonalRelativeSeries::new(vec![
            DiagonalAtom::new(&u1 + &u2, SupportLabel::Ambient, w.clone()).unwrap(),
        ]);
        let split = split_atoms(u1, u2, w.clone(), w);
        prop_assert_eq!(whole.pushforward_absolute(ORDER), split.pushforward_absolute(ORDER));
        for p in [PointLocation::OnCurve, PointLocation::OffCurve] {
            prop_assert_eq!(whole.fiber_at(p, ORDER), split.fiber_at(p, ORDER));
        }
    }

    #[test]
    fn quiver_gauge_invariance(seed in any::<u64>(), n in 1usize..4, which in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (qp, dims) = match which {
            0 => (bbs(), framed_loop_dims(n)),
            1 => (conifold_framed(), conifold_dims(n)),
            _ => (q_r(), framed_loop_dims(n)),
        };
        let (q, w) = (&qp.quiver, &qp.potential);
        let rep = Representation::random(q, dims, &mut rng, 5);
        let g = rep.random_gauge(q, &mut rng);
        let moved = rep.gauge_transform(q, &g).unwrap();
        prop_assert_eq!(rep.trace_potential(q, w), moved.trace_potential(q, w));
        let report = rep.critical_check(q, w, &mut rng);
        prop_assert!(report.directional_ok);
        for k in 0..4 {
            prop_assert_eq!(rep.trace_potential(q, &w.rotated(k)), rep.trace_potential(q, w));
            for a in 0..q.arrows().len() {
                prop_assert_eq!(w.rotated(k).cyclic_derivative(a), w.cyclic_derivative(a));
            }
        }
    }
}

#[test]
fn plane_partitions_match_macmahon() {
    let order = 10;
    let mac = motivic_dt::harness::series("macmahon", order).unwrap().specialize_euler();
    for (n, c) in mac.iter().enumerate() {
        assert_eq!(*c, plane_partitions_count(n).unwrap().into());
    }
}

#[test]
fn f_factorized() {
    let order = 8;
    let c = MotiveClass::poly_in_l(&[1, 1]);
    let binom = MotiveSeries::from_coeffs(vec![MotiveClass::one(), half_power(-1)], order);
    let rhs = power(&(&dt::z0(order) * &binom.inverse().unwrap()), &c).unwrap();
    assert_eq!(power(&dt::f_curv(order), &c).unwrap(), rhs);
}

#[test]
fn conifold_cross_check() {
    let order = 8;
    let c0 = MotiveClass::poly_in_l(&[1, 1]);
    let r = split_atoms(
        &dt::class_conifold() - &c0,
        c0,
        omega_series(order, omega_bbs),
        omega_series(order, omega_curv),
    );
    assert_eq!(
        r.pushforward_absolute(order),
        dt::q_quot_neg(&motivic_dt::GeometryInput::conifold(), order)
    );
}
