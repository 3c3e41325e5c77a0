//! Acceptance suite: one PASS/FAIL line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use motivic_dt::dt::{self, class_conifold, omega_bbs, omega_twisted};
use motivic_dt::harness::{run_check, CheckOptions, DEFAULT_SEED};
use motivic_dt::oracles::{euler_wallcross_series, macmahon_by_recurrence, plane_partitions_count};
use motivic_dt::relative::{line_in_a3_ambient_atoms, line_in_a3_punctual_atoms, PointLocation};
use motivic_dt::{curve_class, half_power, GeometryInput, MotiveClass};

type Verdict = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Verdict, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Verdict {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same(a: &motivic_dt::MotiveSeries, b: &motivic_dt::MotiveSeries, what: &str) -> Verdict {
    match a.first_difference(b) {
        None => Ok(()),
        Some(n) => Err(format!("{what}: t^{n}: {} vs {}", a.coeff(n), b.coeff(n))),
    }
}

fn check(name: &str, order: usize) -> Verdict {
    let opts = CheckOptions {
        seed: DEFAULT_SEED,
        mutate_omega_bbs: false,
    };
    let r = run_check(name, order, &opts).map_err(|e| e.to_string())?;
    ensure(r.passed(), || format!("{name}: {:?}", r.first_discrepancy))
}

fn criterion_1() -> Verdict {
    let n = 10;
    let exp_form = dt::q_l_exp_form(n);
    same(&exp_form, &dt::q_quot(&GeometryInput::affine_line(), n).negate_t(), "exp form vs quot")?;
    same(&exp_form, &dt::q_l_local_product(n), "exp form vs local product")
}

fn criterion_2() -> Verdict {
    for y in [half_power(6), class_conifold()] {
        for g in 0..=3 {
            let geo = GeometryInput::with_curve_genus(y.clone(), g);
            same(&dt::q_quot(&geo, 8), &dt::q_quot_factored(&geo, 8), &format!("[Y] = {y}, g = {g}"))?;
        }
    }
    Ok(())
}

fn criterion_3() -> Verdict {
    let c1 = dt::q_quot(&GeometryInput::affine_line(), 1).coeff(1).clone();
    let want: MotiveClass = "L^(3/2) + L^(1/2)".parse().expect("literal");
    ensure(c1 == want, || format!("t^1 coefficient is {c1}"))
}

fn criterion_4() -> Verdict {
    let r = dt::conifold_wallcross_check(8);
    match r.first_failure() {
        None => Ok(()),
        Some((n, a, b)) => Err(format!("s^{n}: {} vs {}", a.coeff(n), b.coeff(n))),
    }
}

fn criterion_5() -> Verdict {
    let n = 12;
    let cases = [
        (
            GeometryInput::from_classes(MotiveClass::poly_in_l(&[0, 1, 1, 1]), MotiveClass::poly_in_l(&[1, 1])),
            3,
            2,
        ),
        (GeometryInput::conifold(), 2, 2),
    ];
    for (geo, chi_y, chi_c) in cases {
        ensure(geo.chi_y == chi_y && geo.chi_c == chi_c, || "Euler characteristics".into())?;
        let got = dt::q_quot(&geo, n).specialize_euler();
        let want = euler_wallcross_series(chi_y, chi_c, n);
        ensure(got == want, || format!("({chi_y},{chi_c}): {got:?} vs {want:?}"))?;
    }
    let listed: [u64; 8] = [1, 1, 3, 6, 13, 24, 48, 86];
    let macmahon = macmahon_by_recurrence(7);
    for (k, &c) in listed.iter().enumerate() {
        let brute = plane_partitions_count(k).map_err(|e| e.to_string())?;
        ensure(brute == c, || format!("plane partitions of {k}: {brute}"))?;
        ensure(macmahon[k] == BigInt::from(c), || format!("MacMahon coefficient {k}: {}", macmahon[k]))?;
    }
    Ok(())
}

fn criterion_6() -> Verdict {
    for (name, s) in [("Z_0", dt::z0(12)), ("F_curv", dt::f_curv(12))] {
        for (k, c) in s.coeffs().iter().enumerate() {
            let d = c.effective_decompose();
            ensure(d.is_effective && d.reassemble() == *c, || format!("{name} t^{k}: {c}"))?;
        }
    }
    Ok(())
}

fn criterion_7() -> Verdict {
    check("power-axioms", 8)?;
    check("kapranov-macdonald", 8)?;
    for g in 0..=3 {
        same(
            &motivic_dt::lambda::zeta(&curve_class(g), 8),
            &motivic_dt::lambda::macdonald_curve_zeta(g, 8),
            &format!("g = {g}"),
        )?;
    }
    Ok(())
}

fn criterion_8() -> Verdict {
    let n = 8;
    let target = dt::q_l_exp_form(n);
    same(&line_in_a3_ambient_atoms(n).pushforward_absolute(n), &target, "ambient atoms")?;
    let punctual = line_in_a3_punctual_atoms(n);
    same(&punctual.pushforward_absolute(n), &target, "punctual atoms")?;
    same(&punctual.fiber_at(PointLocation::OffCurve, n), &dt::z0(n), "off-curve fiber")?;
    same(&punctual.fiber_at(PointLocation::OnCurve, n), &dt::f_curv(n), "on-curve fiber")?;
    let ambient = line_in_a3_ambient_atoms(n);
    same(&ambient.fiber_at(PointLocation::OffCurve, n), &dt::z0(n), "ambient off-curve fiber")?;
    same(&ambient.fiber_at(PointLocation::OnCurve, n), &dt::f_curv(n), "ambient on-curve fiber")
}

fn criterion_9() -> Verdict {
    for name in [
        "quiver-moduli-dims",
        "quiver-critql-relations",
        "quiver-gauge-invariance",
        "quiver-directional-derivative",
    ] {
        check(name, 4)?;
    }
    Ok(())
}

fn criterion_10() -> Verdict {
    for n in 1..=10 {
        let lhs = omega_bbs(n).map_err(|e| e.to_string())?.shifted(-(n as i64), n % 2 == 1);
        let rhs = omega_twisted(n);
        ensure(lhs == rhs, || format!("n = {n}: {lhs} vs {rhs}"))?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("local Quot series triple agreement through t^10", criterion_1, Duration::from_secs(5)),
        ("factorization Q = Z_Y Z_C through t^8", criterion_2, Duration::from_secs(10)),
        ("t^1 coefficient of Q_{L/A^3}", criterion_3, Duration::from_secs(1)),
        ("conifold DT/PT wall-crossing through s^8", criterion_4, Duration::from_secs(10)),
        ("Euler shadow through t^12 and plane partitions", criterion_5, Duration::from_secs(30)),
        ("effectiveness of Z_0 and F_curv through t^12", criterion_6, Duration::from_secs(10)),
        ("power structure axioms and Kapranov anchor", criterion_7, Duration::from_secs(30)),
        ("relative atom decompositions and fibers", criterion_8, Duration::from_secs(10)),
        ("quiver suite", criterion_9, Duration::from_secs(30)),
        ("shifted point weights for n <= 10", criterion_10, Duration::from_secs(1)),
    ];
    let mut failures = Vec::new();
    for (i, (label, f, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let n = i + 1;
        let verdict = verdict.and_then(|()| {
            ensure(elapsed <= *budget, || format!("took {} ms", elapsed.as_millis()))
        });
        match verdict {
            Ok(()) => println!("criterion {n}: PASS {label} ({} ms, budget {} s)", elapsed.as_millis(), budget.as_secs()),
            Err(why) => {
                println!("criterion {n}: FAIL {label}: {why}");
                failures.push(n);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
