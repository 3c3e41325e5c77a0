use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CheckOptions, Discrepancy};
use crate::dt::{self, class_conifold, omega_bbs, omega_curv, omega_series, GeometryInput};
use crate::error::Result;
use crate::lambda::{exp, log, macdonald_curve_zeta, power, sigma_n, zeta};
use crate::motive::{curve_class, half_power, MotiveClass};
use crate::oracles::{self, partitions, plane_partitions_count, PLANE_PARTITION_LIMIT};
use crate::quiver::presets::{
    bbs, conifold_dims, conifold_framed, forget_to_q_r, framed_loop_dims, q_alpha, q_alpha_dims, q_r,
};
use crate::quiver::{specialize_relations, DimVector, PathPoly, QMatrix, QuiverWithPotential, Representation};
use crate::relative::{ambient_atoms_with, split_atoms, DiagonalRelativeSeries, PointLocation};
use crate::series::{product_expand, MotiveSeries};

pub type CheckFn = fn(usize, &CheckOptions) -> Result<Option<Discrepancy>>;

pub struct CheckEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub run: CheckFn,
}

macro_rules! check {
    ($name:literal, $summary:literal, $f:path) => {
        CheckEntry {
            name: $name,
            summary: $summary,
            run: $f,
        }
    };
}

pub static CHECKS: &[CheckEntry] = &[
    check!("atom-splitting", "ambient and split atom decompositions agree", atom_splitting),
    check!("conifold-atoms-pushforward", "conifold atoms push forward to the Quot series", conifold_atoms_pushforward),
    check!("dt-numbers-bps", "integer DT numbers against the Euler shadow", dt_numbers_bps),
    check!("dtpt-conifold", "DT/PT wall-crossing on the resolved conifold", dtpt_conifold),
    check!("equivalent-exp-form", "Quot series against its plethystic form", equivalent_exp_form),
    check!("equivalent-product", "Quot series against its infinite product", equivalent_product),
    check!("euler-exp-compat", "Euler specialization commutes with Exp", euler_exp_compat),
    check!("euler-shadow", "Euler specialization of the Quot series", euler_shadow),
    check!("exp-effective", "Exp of an effective series is effective", exp_effective),
    check!("exp-homomorphism", "Exp(f + g) = Exp(f) Exp(g)", exp_homomorphism),
    check!("exp-log-roundtrip", "Log and Exp are inverse", exp_log_roundtrip),
    check!("f-curv-effective", "every coefficient of F_curv(-t) is effective", f_curv_effective),
    check!("f-curv-exp-omega", "F_curv(-t) = Exp(sum omega_curv(n) t^n)", f_curv_exp_omega),
    check!("f-factorized", "F_curv^[C] against Z_0 times the curve factor", f_factorized),
    check!("kapranov-macdonald", "Kapranov zeta of curve classes against Macdonald", kapranov_macdonald),
    check!("lambda-relation", "sigma_n(a + b) = sum sigma_i(a) sigma_(n-i)(b)", lambda_relation),
    check!("local-quot-exp-form", "three forms of the local Quot series of L in A^3", local_quot_exp_form),
    check!("macmahon-vs-plane-partitions", "MacMahon product against plane partition counts", macmahon_vs_plane_partitions),
    check!("omega-bbs-log-z0", "Log Z_0(-t) = sum omega_bbs(n) t^n", omega_bbs_log_z0),
    check!("power-axioms", "axioms of the power structure on random instances", power_axioms),
    check!("punctual-thm-fibers", "fibers of the split atoms over points", punctual_thm_fibers),
    check!("punctual-thm-pushforward", "split atoms of L in A^3 push forward to the Quot series", punctual_thm_pushforward),
    check!("q-alpha-pullback", "Tr W on Q_alpha is pulled back from Q_r", q_alpha_pullback),
    check!("quiver-critql-relations", "relations of the presets and critical representations", quiver_critical_relations),
    check!("quiver-cyclic-rotation", "cyclic derivatives and traces are rotation invariant", quiver_cyclic_rotation),
    check!("quiver-directional-derivative", "first variation of Tr W against the derivative pairing", quiver_directional_derivative),
    check!("quiver-gauge-invariance", "Tr W and criticality are gauge invariant", quiver_gauge_invariance),
    check!("quiver-moduli-dims", "expected dimensions of the framed moduli spaces", quiver_moduli_dims),
    check!("thm-C-factorization", "Quot series factors as Z_Y Z_C", thm_c_factorization),
    check!("thm-newB-pushforward", "ambient atoms of L in A^3 push forward to the Quot series", thm_new_b_pushforward),
    check!("twisted-graded-dims", "shifted Quot series as a free symmetric algebra", twisted_graded_dims),
    check!("twisted-omega", "shifted point weights", twisted_omega),
    check!("z-hilb-A3-product", "Hilbert series of A^3 against its product form", z_hilb_a3_product),
    check!("z0-effective", "every coefficient of Z_0(-t) is effective", z0_effective),
];

type Outcome = Result<Option<Discrepancy>>;

fn compare(lhs: &MotiveSeries, rhs: &MotiveSeries) -> Option<Discrepancy> {
    lhs.first_difference(rhs)
        .map(|n| Discrepancy::new(n, lhs.coeff(n), rhs.coeff(n)))
}

fn compare_ints(lhs: &[BigInt], rhs: &[BigInt]) -> Option<Discrepancy> {
    let n = lhs.len().min(rhs.len());
    (0..n)
        .find(|&i| lhs[i] != rhs[i])
        .map(|i| Discrepancy::new(i, &lhs[i], &rhs[i]))
}

fn first_of(items: impl IntoIterator<Item = Option<Discrepancy>>) -> Option<Discrepancy> {
    items.into_iter().flatten().next()
}

fn rng_for(opts: &CheckOptions) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(opts.seed)
}

fn point_omega(opts: &CheckOptions, n: usize) -> Result<MotiveClass> {
    let w = omega_bbs(n)?;
    Ok(if opts.mutate_omega_bbs && n == 1 { &w + &half_power(-1) } else { w })
}

fn point_weights(order: usize, opts: &CheckOptions) -> MotiveSeries {
    omega_series(order, |n| point_omega(opts, n))
}

fn curve_weights(order: usize) -> MotiveSeries {
    omega_series(order, omega_curv)
}

fn random_class<R: Rng>(rng: &mut R, max_terms: usize, coeff: i64) -> MotiveClass {
    let k = rng.gen_range(0..=max_terms);
    MotiveClass::from_terms((0..k).map(|_| (rng.gen_range(-4..=4), rng.gen_range(-coeff..=coeff))))
}

/// Zero constant term, a few small coefficients.
fn random_series<R: Rng>(rng: &mut R, order: usize) -> MotiveSeries {
    MotiveSeries::from_fn(order, |_| random_class(rng, 2, 2))
}

fn random_unit_series<R: Rng>(rng: &mut R, order: usize) -> MotiveSeries {
    &MotiveSeries::one(order) + &random_series(rng, order)
}

/// Nonnegative combination of powers of `-L^(1/2)`.
fn random_effective<R: Rng>(rng: &mut R) -> MotiveClass {
    let k = rng.gen_range(0..=3);
    MotiveClass::from_terms((0..k).map(|_| {
        let e: i64 = rng.gen_range(-4..=4);
        let c: i64 = rng.gen_range(0..=3);
        (e, if e.rem_euclid(2) == 1 { -c } else { c })
    }))
}

/// `prod_m (1 - t^m)^(-m)` with integer coefficients.
pub(super) fn macmahon_series(order: usize) -> Result<MotiveSeries> {
    let factors: Vec<(MotiveSeries, MotiveClass)> = (1..=order)
        .map(|m| {
            let mut f = MotiveSeries::one(order);
            f.set_coeff(m, -MotiveClass::one());
            (f, MotiveClass::from(-(m as i64)))
        })
        .collect();
    product_expand(&factors, order)
}

/// `prod (1 - t^n)^(-chi_n)` over the integers.
fn int_exp(chis: &[BigInt]) -> Vec<BigInt> {
    let order = chis.len() - 1;
    let mut acc = vec![BigInt::zero(); order + 1];
    acc[0] = BigInt::one();
    for (n, c) in chis.iter().enumerate().skip(1) {
        let mut factor = vec![BigInt::zero(); order + 1];
        factor[0] = BigInt::one();
        let mut a = BigInt::one();
        for j in 1..=order / n {
            a = a * (c + BigInt::from(j - 1)) / BigInt::from(j);
            factor[n * j] = a.clone();
        }
        let mut next = vec![BigInt::zero(); order + 1];
        for i in 0..=order {
            if acc[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                next[i + j] += &acc[i] * &factor[j];
            }
        }
        acc = next;
    }
    acc
}

fn local_quot_exp_form(order: usize, _: &CheckOptions) -> Outcome {
    let exp_form = dt::q_l_exp_form(order);
    let quot = dt::q_quot(&GeometryInput::affine_line(), order).negate_t();
    let local = dt::q_l_local_product(order);
    Ok(first_of([compare(&exp_form, &quot), compare(&exp_form, &local)]))
}

fn thm_geometries() -> Vec<GeometryInput> {
    let mut out = Vec::new();
    for y in [half_power(6), class_conifold(), MotiveClass::poly_in_l(&[0, 1, 1, 1])] {
        for g in 0..=3 {
            out.push(GeometryInput::with_curve_genus(y.clone(), g));
        }
    }
    out.push(GeometryInput::affine_line());
    out
}

fn thm_c_factorization(order: usize, _: &CheckOptions) -> Outcome {
    Ok(first_of(
        thm_geometries()
            .iter()
            .map(|g| compare(&dt::q_quot(g, order), &dt::q_quot_factored(g, order))),
    ))
}

fn f_factorized(order: usize, _: &CheckOptions) -> Outcome {
    let z0 = dt::z0(order);
    let mut curve = MotiveSeries::one(order);
    curve.set_coeff(1, half_power(-1));
    let direct = &z0 * &exp(&MotiveSeries::monomial(-half_power(-1), 1, order))?;
    let mut out = vec![compare(&dt::f_curv(order), &direct)];
    for g in 0..=2 {
        let c = curve_class(g);
        let lhs = power(&dt::f_curv(order), &c)?;
        let rhs = &power(&z0, &c)? * &power(&curve.inverse()?, &c)?;
        out.push(compare(&lhs, &rhs));
    }
    Ok(first_of(out))
}

fn f_curv_exp_omega(order: usize, _: &CheckOptions) -> Outcome {
    Ok(compare(&exp(&curve_weights(order))?, &dt::f_curv(order)))
}

fn euler_cases() -> Vec<(GeometryInput, i64, i64)> {
    vec![
        (GeometryInput::affine_line(), 1, 1),
        (GeometryInput::conifold(), 2, 2),
        (
            GeometryInput::from_classes(MotiveClass::poly_in_l(&[0, 1, 1, 1]), MotiveClass::poly_in_l(&[1, 1])),
            3,
            2,
        ),
    ]
}

fn euler_shadow(order: usize, _: &CheckOptions) -> Outcome {
    let mut out = Vec::new();
    for (geo, chi_y, chi_c) in euler_cases() {
        if geo.chi_y != chi_y || geo.chi_c != chi_c {
            return Ok(Some(Discrepancy::new(0, geo.chi_y, chi_y)));
        }
        let lhs = dt::q_quot(&geo, order).specialize_euler();
        out.push(compare_ints(&lhs, &oracles::euler_wallcross_series(chi_y, chi_c, order)));
    }
    Ok(first_of(out))
}

fn equivalent_product(order: usize, _: &CheckOptions) -> Outcome {
    Ok(first_of(
        thm_geometries()
            .iter()
            .map(|g| compare(&dt::q_quot(g, order), &dt::q_quot_product_form(g, order))),
    ))
}

fn equivalent_exp_form(order: usize, _: &CheckOptions) -> Outcome {
    Ok(first_of(
        thm_geometries()
            .iter()
            .map(|g| compare(&dt::q_quot_neg(g, order), &dt::q_quot_exp_form_neg(g, order))),
    ))
}

fn dtpt_conifold(order: usize, _: &CheckOptions) -> Outcome {
    let r = dt::conifold_wallcross_check(order);
    Ok(r.first_failure().map(|(n, a, b)| Discrepancy::new(n, a.coeff(n), b.coeff(n))))
}

fn macmahon_vs_plane_partitions(order: usize, _: &CheckOptions) -> Outcome {
    let m = macmahon_series(order)?.specialize_euler();
    let rec = oracles::macmahon_by_recurrence(order);
    if let Some(d) = compare_ints(&m, &rec) {
        return Ok(Some(d));
    }
    for (n, c) in m.iter().enumerate().take(PLANE_PARTITION_LIMIT + 1) {
        let count = BigInt::from(plane_partitions_count(n)?);
        if *c != count {
            return Ok(Some(Discrepancy::new(n, c, count)));
        }
    }
    Ok(None)
}

fn effective_check(s: &MotiveSeries) -> Option<Discrepancy> {
    s.coeffs()
        .iter()
        .position(|c| !c.is_effective())
        .map(|n| Discrepancy::new(n, s.coeff(n), "effective"))
}

fn z0_effective(order: usize, _: &CheckOptions) -> Outcome {
    Ok(effective_check(&dt::z0(order)))
}

fn f_curv_effective(order: usize, _: &CheckOptions) -> Outcome {
    Ok(effective_check(&dt::f_curv(order)))
}

fn omega_bbs_log_z0(order: usize, opts: &CheckOptions) -> Outcome {
    Ok(compare(&log(&dt::z0(order))?, &point_weights(order, opts)))
}

fn z_hilb_a3_product(order: usize, _: &CheckOptions) -> Outcome {
    // prod_m prod_{k<m} (1 - L^(k+2-m/2) t^m)^(-1) by plain series inversion
    let mut prod = MotiveSeries::one(order);
    for m in 1..=order {
        for k in 0..m {
            let mut f = MotiveSeries::one(order);
            f.set_coeff(m, -half_power(2 * k as i64 + 4 - m as i64));
            prod = &prod * &f.inverse()?;
        }
    }
    Ok(compare(&dt::z_hilb(&half_power(6), order), &prod))
}

fn power_axioms(order: usize, opts: &CheckOptions) -> Outcome {
    let order = order.min(8);
    let mut rng = rng_for(opts);
    for trial in 0..200 {
        let a = random_unit_series(&mut rng, order);
        let b = random_unit_series(&mut rng, order);
        let x = random_class(&mut rng, 2, 2);
        let y = random_class(&mut rng, 2, 2);
        let (lhs, rhs) = match trial % 7 {
            0 => (power(&a, &MotiveClass::zero())?, MotiveSeries::one(order)),
            1 => (power(&a, &MotiveClass::one())?, a.clone()),
            2 => (power(&(&a * &b), &x)?, &power(&a, &x)? * &power(&b, &x)?),
            3 => (power(&a, &(&x + &y))?, &power(&a, &x)? * &power(&a, &y)?),
            4 => (power(&a, &(&x * &y))?, power(&power(&a, &x)?, &y)?),
            5 => {
                let one_plus_t = MotiveSeries::from_coeffs(vec![MotiveClass::one(), MotiveClass::one()], order);
                let lhs = power(&one_plus_t, &x)?.truncate(order.min(1));
                (lhs, MotiveSeries::from_coeffs(vec![MotiveClass::one(), x.clone()], order.min(1)))
            }
            _ => {
                let k = rng.gen_range(2..=3);
                let sub = a.substitute_t(&MotiveClass::one(), k)?;
                (power(&a, &x)?.substitute_t(&MotiveClass::one(), k)?, power(&sub, &x)?)
            }
        };
        if let Some(n) = lhs.first_difference(&rhs) {
            return Ok(Some(Discrepancy::new(trial, lhs.coeff(n), rhs.coeff(n))));
        }
    }
    Ok(None)
}

fn kapranov_macdonald(order: usize, _: &CheckOptions) -> Outcome {
    Ok(first_of(
        (0..=3).map(|g| compare(&zeta(&curve_class(g), order), &macdonald_curve_zeta(g, order))),
    ))
}

fn lambda_relation(order: usize, opts: &CheckOptions) -> Outcome {
    let mut rng = rng_for(opts);
    let nmax = order.min(6);
    for trial in 0..50 {
        let a = random_class(&mut rng, 3, 2);
        let b = random_class(&mut rng, 3, 2);
        let sum = &a + &b;
        for n in 0..=nmax {
            let lhs = sigma_n(&sum, n);
            let rhs: MotiveClass = (0..=n).map(|i| &sigma_n(&a, i) * &sigma_n(&b, n - i)).sum();
            if lhs != rhs {
                return Ok(Some(Discrepancy::new(trial, lhs, rhs)));
            }
        }
    }
    Ok(None)
}

fn exp_log_roundtrip(order: usize, opts: &CheckOptions) -> Outcome {
    let mut rng = rng_for(opts);
    for _ in 0..20 {
        let f = random_series(&mut rng, order);
        if let Some(d) = compare(&log(&exp(&f)?)?, &f) {
            return Ok(Some(d));
        }
        let a = random_unit_series(&mut rng, order);
        if let Some(d) = compare(&exp(&log(&a)?)?, &a) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

fn exp_homomorphism(order: usize, opts: &CheckOptions) -> Outcome {
    let mut rng = rng_for(opts);
    for _ in 0..20 {
        let f = random_series(&mut rng, order);
        let g = random_series(&mut rng, order);
        if let Some(d) = compare(&exp(&(&f + &g))?, &(&exp(&f)? * &exp(&g)?)) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

fn exp_effective(order: usize, opts: &CheckOptions) -> Outcome {
    let mut rng = rng_for(opts);
    for _ in 0..20 {
        let f = MotiveSeries::from_fn(order, |_| random_effective(&mut rng));
        if let Some(d) = effective_check(&exp(&f)?) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

fn euler_exp_compat(order: usize, opts: &CheckOptions) -> Outcome {
    let mut rng = rng_for(opts);
    for _ in 0..20 {
        let f = random_series(&mut rng, order);
        let lhs = exp(&f)?.specialize_euler();
        if let Some(d) = compare_ints(&lhs, &int_exp(&f.specialize_euler())) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

fn thm_new_b_pushforward(order: usize, opts: &CheckOptions) -> Outcome {
    let atoms = ambient_atoms_with(point_weights(order, opts));
    Ok(compare(&atoms.pushforward_absolute(order), &dt::q_l_exp_form(order)))
}

fn line_split(order: usize, opts: &CheckOptions) -> DiagonalRelativeSeries {
    let l = MotiveClass::lefschetz();
    split_atoms(&half_power(6) - &l, l, point_weights(order, opts), curve_weights(order))
}

fn conifold_split(order: usize, opts: &CheckOptions) -> DiagonalRelativeSeries {
    let c0 = curve_class(0);
    split_atoms(&class_conifold() - &c0, c0, point_weights(order, opts), curve_weights(order))
}

fn punctual_thm_pushforward(order: usize, opts: &CheckOptions) -> Outcome {
    Ok(compare(&line_split(order, opts).pushforward_absolute(order), &dt::q_l_exp_form(order)))
}

fn punctual_thm_fibers(order: usize, opts: &CheckOptions) -> Outcome {
    let mut out = Vec::new();
    for r in [line_split(order, opts), conifold_split(order, opts)] {
        out.push(compare(&r.fiber_at(PointLocation::OnCurve, order), &dt::f_curv(order)));
        out.push(compare(&r.fiber_at(PointLocation::OffCurve, order), &dt::z0(order)));
    }
    Ok(first_of(out))
}

fn conifold_atoms_pushforward(order: usize, opts: &CheckOptions) -> Outcome {
    Ok(compare(
        &conifold_split(order, opts).pushforward_absolute(order),
        &dt::q_quot_neg(&GeometryInput::conifold(), order),
    ))
}

fn atom_splitting(order: usize, opts: &CheckOptions) -> Outcome {
    let ambient = ambient_atoms_with(point_weights(order, opts));
    let split = line_split(order, opts);
    let mut out = vec![compare(&ambient.pushforward_absolute(order), &split.pushforward_absolute(order))];
    for p in [PointLocation::OnCurve, PointLocation::OffCurve] {
        out.push(compare(&ambient.fiber_at(p, order), &split.fiber_at(p, order)));
    }
    Ok(first_of(out))
}

fn twisted_omega(order: usize, _: &CheckOptions) -> Outcome {
    let r = dt::twisted_omega_check(order);
    Ok(r.omega_mismatch.map(|(n, a, b)| Discrepancy::new(n, a, b)))
}

fn twisted_graded_dims(order: usize, _: &CheckOptions) -> Outcome {
    let r = dt::twisted_omega_check(order);
    Ok(first_of([
        compare(&r.shifted_quot, &r.twisted_exp),
        compare(&r.twisted_exp, &r.graded_dims),
    ]))
}

fn dt_numbers_bps(order: usize, _: &CheckOptions) -> Outcome {
    let mut out = Vec::new();
    for (geo, chi_y, chi_c) in euler_cases() {
        let ones = dt::dt_numbers(chi_y, chi_c, 1, order);
        out.push(compare_ints(&ones, &dt::q_quot(&geo, order).specialize_euler()));
        out.push(compare_ints(&ones, &oracles::euler_wallcross_series(chi_y, chi_c, order)));
        let scaled: Vec<BigInt> = ones.iter().map(|c| c * 3).collect();
        out.push(compare_ints(&dt::dt_numbers(chi_y, chi_c, 3, order), &scaled));
    }
    Ok(first_of(out))
}

fn quiver_moduli_dims(_: usize, _: &CheckOptions) -> Outcome {
    let c = conifold_framed();
    let b = bbs();
    for n in 0..=50usize {
        let n2 = (n * n) as i64;
        let got = c.quiver.moduli_dim(&conifold_dims(n));
        if got != 2 * n2 + 3 * n as i64 {
            return Ok(Some(Discrepancy::new(n, got, 2 * n2 + 3 * n as i64)));
        }
        let got = b.quiver.moduli_dim(&framed_loop_dims(n));
        if got != 2 * n2 + n as i64 {
            return Ok(Some(Discrepancy::new(n, got, 2 * n2 + n as i64)));
        }
    }
    Ok(None)
}

fn words(qp: &QuiverWithPotential, terms: &[(&str, i64)]) -> PathPoly {
    let q = &qp.quiver;
    PathPoly::from_terms(terms.iter().map(|(s, c)| {
        let w: Vec<usize> = s.split_whitespace().map(|a| q.arrow_id(a).expect("preset arrow")).collect();
        (w, *c)
    }))
}

fn quiver_critical_relations(_: usize, _: &CheckOptions) -> Outcome {
    let b = bbs();
    let want = [
        words(&b, &[("y z", 1), ("z y", -1)]),
        words(&b, &[("z x", 1), ("x z", -1)]),
        words(&b, &[("x y", 1), ("y x", -1)]),
    ];
    let rels = b.potential.superpotential_relations(&b.quiver);
    for (i, w) in want.iter().enumerate() {
        if !rels.iter().any(|(_, p)| p.equal_up_to_sign(w)) {
            return Ok(Some(Discrepancy::new(i, w.render(&b.quiver), "missing relation")));
        }
    }
    let r = q_r();
    let q = &r.quiver;
    let rels = specialize_relations(&r.potential.superpotential_relations(q), &[q.arrow_id("b1'").expect("b1'")]);
    let want = [
        words(&r, &[("a2' a1''", 1), ("a1' a2''", -1)]),
        words(&r, &[("a1'' a2''", 1), ("a2'' a1''", -1)]),
        words(&r, &[("a1'' b1''", 1), ("b1'' a1''", -1)]),
        words(&r, &[("a2'' b1''", 1), ("b1'' a2''", -1)]),
    ];
    for (i, w) in want.iter().enumerate() {
        if !rels.iter().any(|(_, p)| p.equal_up_to_sign(w)) {
            return Ok(Some(Discrepancy::new(i, w.render(q), "missing relation")));
        }
    }
    // commuting triples are critical, a non-commuting one is not
    let m = QMatrix::from_rows(&[vec![1, 2, 0], vec![0, 3, 1], vec![4, 0, 1]]);
    let m2 = m.mul(&m).add(&QMatrix::identity(3));
    let iota = QMatrix::from_rows(&[vec![1], vec![0], vec![2]]);
    let xyz = [("x", m.scale(&BigRational::from_integer(2.into()))), ("y", m2), ("z", m.clone()), ("i", iota.clone())];
    let mut rep = Representation::zero(&b.quiver, framed_loop_dims(3));
    for (name, mat) in xyz {
        rep.set_matrix(b.quiver.arrow_id(name).expect("arrow"), mat)?;
    }
    if !rep.is_critical(&b.quiver, &b.potential) {
        return Ok(Some(Discrepancy::new(0, "commuting triple", "not critical")));
    }
    let e = QMatrix::from_rows(&[vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 0]]);
    rep.set_matrix(b.quiver.arrow_id("x").expect("x"), e)?;
    if rep.is_critical(&b.quiver, &b.potential) {
        return Ok(Some(Discrepancy::new(1, "non-commuting triple", "critical")));
    }
    Ok(None)
}

fn random_preset<R: Rng>(rng: &mut R, trial: usize) -> (QuiverWithPotential, DimVector) {
    let n = rng.gen_range(1..=4);
    match trial % 3 {
        0 => (bbs(), framed_loop_dims(n)),
        1 => (conifold_framed(), conifold_dims(n)),
        _ => (q_r(), framed_loop_dims(n)),
    }
}

fn quiver_gauge_invariance(_: usize, opts: &CheckOptions) -> Outcome {
    let mut rng = rng_for(opts);
    for trial in 0..50 {
        let (qp, dims) = random_preset(&mut rng, trial);
        let (q, w) = (&qp.quiver, &qp.potential);
        let rep = Representation::random(q, dims, &mut rng, 4);
        let g = rep.random_gauge(q, &mut rng);
        let moved = rep.gauge_transform(q, &g)?;
        let (a, b) = (rep.trace_potential(q, w), moved.trace_potential(q, w));
        if a != b {
            return Ok(Some(Discrepancy::new(trial, a, b)));
        }
        if rep.is_critical(q, w) != moved.is_critical(q, w) {
            return Ok(Some(Discrepancy::new(trial, "criticality", "changed under gauge")));
        }
    }
    Ok(None)
}

fn quiver_directional_derivative(_: usize, opts: &CheckOptions) -> Outcome {
    let mut rng = rng_for(opts);
    for trial in 0..50 {
        let (qp, dims) = random_preset(&mut rng, trial);
        let rep = Representation::random(&qp.quiver, dims, &mut rng, 4);
        let report = rep.critical_check(&qp.quiver, &qp.potential, &mut rng);
        if !report.directional_ok {
            return Ok(Some(Discrepancy::new(trial, "first variation", "derivative pairing")));
        }
    }
    Ok(None)
}

fn quiver_cyclic_rotation(_: usize, opts: &CheckOptions) -> Outcome {
    let mut rng = rng_for(opts);
    let mut presets = vec![bbs(), conifold_framed(), q_r()];
    presets.push(q_alpha(&oracles::Partition::from_parts(&[2, 1]))?);
    for (i, qp) in presets.iter().enumerate() {
        let (q, w) = (&qp.quiver, &qp.potential);
        let longest = w.terms().iter().map(|(_, t)| t.len()).max().unwrap_or(0);
        let dims = DimVector(q.vertices().iter().map(|v| if v.framing { 1 } else { 2 }).collect());
        let rep = Representation::random(q, dims, &mut rng, 4);
        for k in 0..longest {
            let r = w.rotated(k);
            for a in 0..q.arrows().len() {
                if r.cyclic_derivative(a) != w.cyclic_derivative(a) {
                    return Ok(Some(Discrepancy::new(i, r.render(q), w.render(q))));
                }
            }
            let (x, y) = (rep.trace_potential(q, &r), rep.trace_potential(q, w));
            if x != y {
                return Ok(Some(Discrepancy::new(i, x, y)));
            }
        }
    }
    Ok(None)
}

fn q_alpha_pullback(_: usize, opts: &CheckOptions) -> Outcome {
    let mut rng = rng_for(opts);
    let qr = q_r();
    let mut trial = 0;
    for n in 1..=4 {
        for alpha in partitions(n) {
            let qa = q_alpha(&alpha)?;
            for _ in 0..3 {
                let rep = Representation::random(&qa.quiver, q_alpha_dims(&alpha), &mut rng, 4);
                let down = forget_to_q_r(&alpha, &qa.quiver, &rep, &qr.quiver)?;
                let (a, b) = (
                    rep.trace_potential(&qa.quiver, &qa.potential),
                    down.trace_potential(&qr.quiver, &qr.potential),
                );
                if a != b {
                    return Ok(Some(Discrepancy::new(trial, a, b)));
                }
                trial += 1;
            }
        }
    }
    Ok(None)
}
