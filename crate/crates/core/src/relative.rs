//! Relative motives over symmetric products that are built from classes on
//! small diagonals.
//!
//! A [`DiagonalRelativeSeries`] is a `⊠_∪` product of `Exp_∪` of atoms. Each
//! atom spreads a series `sum_n w_n t^n` over the `n`-fold small diagonal of
//! its support. The direct image to a point is `prod Exp(w)^[support]`, and
//! the pullback to a point `p` keeps only the atoms whose support holds `p`.

use crate::error::{Error, Result};
use crate::lambda::{exp, power};
use crate::motive::{half_power, MotiveClass};
use crate::series::MotiveSeries;
use crate::dt::{class_conifold, omega_bbs, omega_curv, omega_series};

/// Where an atom's support sits relative to the curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SupportLabel {
    OnCurve,
    OffCurve,
    Ambient,
}

/// Position of a point whose fiber is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointLocation {
    OnCurve,
    OffCurve,
}

impl SupportLabel {
    pub fn contains(self, p: PointLocation) -> bool {
        match self {
            SupportLabel::Ambient => true,
            SupportLabel::OnCurve => p == PointLocation::OnCurve,
            SupportLabel::OffCurve => p == PointLocation::OffCurve,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalAtom {
    support_class: MotiveClass,
    support_label: SupportLabel,
    weights: MotiveSeries,
}

impl DiagonalAtom {
    pub fn new(support_class: MotiveClass, support_label: SupportLabel, weights: MotiveSeries) -> Result<Self> {
        if !weights.coeff(0).is_zero() {
            return Err(Error::ConstantTerm {
                expected: "0",
                found: weights.coeff(0).to_string(),
            });
        }
        Ok(DiagonalAtom {
            support_class,
            support_label,
            weights,
        })
    }

    pub fn support_class(&self) -> &MotiveClass {
        &self.support_class
    }

    pub fn support_label(&self) -> SupportLabel {
        self.support_label
    }

    pub fn weights(&self) -> &MotiveSeries {
        &self.weights
    }

    /// `Exp` of the weights: the fiber over a point of the support.
    pub fn fiber(&self, order: usize) -> MotiveSeries {
        exp(&self.weights.truncate(order.min(self.weights.order()))).expect("zero constant term")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiagonalRelativeSeries {
    atoms: Vec<DiagonalAtom>,
}

impl DiagonalRelativeSeries {
    pub fn new(atoms: Vec<DiagonalAtom>) -> Self {
        DiagonalRelativeSeries { atoms }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn atoms(&self) -> &[DiagonalAtom] {
        &self.atoms
    }

    /// `⊠_∪`: concatenate the atom lists.
    pub fn boxtimes_cup(&self, other: &DiagonalRelativeSeries) -> DiagonalRelativeSeries {
        let mut atoms = self.atoms.clone();
        atoms.extend(other.atoms.iter().cloned());
        DiagonalRelativeSeries { atoms }
    }

    /// Direct image to the absolute series `prod Exp(w)^[support]`.
    pub fn pushforward_absolute(&self, order: usize) -> MotiveSeries {
        self.atoms.iter().fold(MotiveSeries::one(order), |acc, a| {
            let f = power(&a.fiber(order), &a.support_class).expect("constant term 1");
            &acc * &f
        })
    }

    /// Pullback to a point: product of the fibers of the atoms selected by `member`.
    pub fn fiber_at_point<F: Fn(&DiagonalAtom) -> bool>(&self, member: F, order: usize) -> MotiveSeries {
        self.atoms
            .iter()
            .filter(|a| member(a))
            .fold(MotiveSeries::one(order), |acc, a| &acc * &a.fiber(order))
    }

    /// Fiber over a point on or off the curve.
    pub fn fiber_at(&self, p: PointLocation, order: usize) -> MotiveSeries {
        self.fiber_at_point(|a| a.support_label.contains(p), order)
    }
}

/// `A^3` carrying the point weights, and `L` carrying `-L^(-1/2) t`.
pub fn line_in_a3_ambient_atoms(order: usize) -> DiagonalRelativeSeries {
    ambient_atoms_with(omega_series(order, omega_bbs))
}

/// As [`line_in_a3_ambient_atoms`], with caller-supplied point weights.
pub fn ambient_atoms_with(point_weights: MotiveSeries) -> DiagonalRelativeSeries {
    let order = point_weights.order();
    let crv = MotiveSeries::monomial(-half_power(-1), 1, order);
    DiagonalRelativeSeries::new(vec![
        DiagonalAtom::new(half_power(6), SupportLabel::Ambient, point_weights).expect("zero constant term"),
        DiagonalAtom::new(MotiveClass::lefschetz(), SupportLabel::OnCurve, crv).expect("zero constant term"),
    ])
}

/// `A^3 \ L` carrying the point weights, and `L` carrying the curve weights.
pub fn line_in_a3_punctual_atoms(order: usize) -> DiagonalRelativeSeries {
    let l = MotiveClass::lefschetz();
    split_atoms(&half_power(6) - &l, l, omega_series(order, omega_bbs), omega_series(order, omega_curv))
}

/// `X \ C_0` carrying the point weights, and `C_0` carrying the curve weights.
pub fn conifold_atoms(order: usize) -> DiagonalRelativeSeries {
    let c0 = MotiveClass::poly_in_l(&[1, 1]);
    split_atoms(
        &class_conifold() - &c0,
        c0,
        omega_series(order, omega_bbs),
        omega_series(order, omega_curv),
    )
}

/// Off-curve atom with `point_weights` and on-curve atom with `curve_weights`.
pub fn split_atoms(
    off: MotiveClass,
    on: MotiveClass,
    point_weights: MotiveSeries,
    curve_weights: MotiveSeries,
) -> DiagonalRelativeSeries {
    DiagonalRelativeSeries::new(vec![
        DiagonalAtom::new(off, SupportLabel::OffCurve, point_weights).expect("zero constant term"),
        DiagonalAtom::new(on, SupportLabel::OnCurve, curve_weights).expect("zero constant term"),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dt::{f_curv, q_l_exp_form, q_quot_neg, z0, GeometryInput};

    #[test]
    fn ambient_decomposition_pushes_to_local_quot() {
        assert_eq!(line_in_a3_ambient_atoms(6).pushforward_absolute(6), q_l_exp_form(6));
    }

    #[test]
    fn punctual_decomposition_pushes_to_local_quot() {
        assert_eq!(line_in_a3_punctual_atoms(6).pushforward_absolute(6), q_l_exp_form(6));
    }

    #[test]
    fn conifold_pushforward() {
        assert_eq!(conifold_atoms(6).pushforward_absolute(6), q_quot_neg(&GeometryInput::conifold(), 6));
    }

    #[test]
    fn fibers() {
        let r = conifold_atoms(6);
        assert_eq!(r.fiber_at(PointLocation::OnCurve, 6), f_curv(6));
        assert_eq!(r.fiber_at(PointLocation::OffCurve, 6), z0(6));
        assert_eq!(r.fiber_at_point(|_| false, 6), MotiveSeries::one(6));
        let p = line_in_a3_punctual_atoms(6);
        assert_eq!(p.fiber_at(PointLocation::OnCurve, 6), f_curv(6));
        assert_eq!(p.fiber_at(PointLocation::OffCurve, 6), z0(6));
    }

    #[test]
    fn empty_and_unit() {
        assert_eq!(DiagonalRelativeSeries::empty().pushforward_absolute(5), MotiveSeries::one(5));
        let r = conifold_atoms(4);
        assert_eq!(r.boxtimes_cup(&DiagonalRelativeSeries::empty()), r);
    }

    #[test]
    fn boxtimes_is_monoidal() {
        let a = line_in_a3_ambient_atoms(6);
        let b = conifold_atoms(6);
        assert_eq!(
            a.boxtimes_cup(&b).pushforward_absolute(6),
            &a.pushforward_absolute(6) * &b.pushforward_absolute(6)
        );
    }

    #[test]
    fn nonzero_constant_weight_is_rejected() {
        assert!(DiagonalAtom::new(MotiveClass::one(), SupportLabel::Ambient, MotiveSeries::one(3)).is_err());
    }
}
