use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use super::{ArrowId, DimVector, PathPoly, Potential, QMatrix, Quiver};
use crate::error::{Error, Result};

/// One matrix per arrow, shaped `dim(target) x dim(source)` in the effective orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    dims: DimVector,
    mats: Vec<QMatrix>,
}

/// Result of [`Representation::critical_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalReport {
    /// Every evaluated cyclic derivative vanishes.
    pub critical: bool,
    /// First-order variation of the trace matched the derivative pairing for every arrow.
    pub directional_ok: bool,
    /// Arrows whose evaluated derivative is nonzero.
    pub nonzero_derivatives: Vec<ArrowId>,
}

impl Representation {
    pub fn new(q: &Quiver, dims: DimVector, mats: Vec<QMatrix>) -> Result<Self> {
        if dims.0.len() != q.vertices().len() {
            return Err(Error::Shape(format!(
                "dimension vector has {} entries for {} vertices",
                dims.0.len(),
                q.vertices().len()
            )));
        }
        if mats.len() != q.arrows().len() {
            return Err(Error::Shape(format!("{} matrices for {} arrows", mats.len(), q.arrows().len())));
        }
        for (a, m) in mats.iter().enumerate() {
            let want = (dims.get(q.target(a)), dims.get(q.source(a)));
            if m.shape() != want {
                return Err(Error::Shape(format!(
                    "arrow {} has shape {:?}, expected {:?}",
                    q.arrow_name(a),
                    m.shape(),
                    want
                )));
            }
        }
        Ok(Representation { dims, mats })
    }

    pub fn zero(q: &Quiver, dims: DimVector) -> Self {
        let mats = (0..q.arrows().len())
            .map(|a| QMatrix::zeros(dims.get(q.target(a)), dims.get(q.source(a))))
            .collect();
        Representation { dims, mats }
    }

    pub fn random<R: Rng>(q: &Quiver, dims: DimVector, rng: &mut R, bound: i64) -> Self {
        let mats = (0..q.arrows().len())
            .map(|a| QMatrix::random(rng, dims.get(q.target(a)), dims.get(q.source(a)), bound))
            .collect();
        Representation { dims, mats }
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn matrix(&self, a: ArrowId) -> &QMatrix {
        &self.mats[a]
    }

    pub fn set_matrix(&mut self, a: ArrowId, m: QMatrix) -> Result<()> {
        if m.shape() != self.mats[a].shape() {
            return Err(Error::Shape(format!(
                "replacement has shape {:?}, expected {:?}",
                m.shape(),
                self.mats[a].shape()
            )));
        }
        self.mats[a] = m;
        Ok(())
    }

    /// `rho(u_k) ... rho(u_1)` for the path `u_1 ... u_k`; the empty word is the identity at `start`.
    pub fn eval_word_with(&self, word: &[ArrowId], start_dim: usize, subst: Option<(usize, &QMatrix)>) -> QMatrix {
        let mut acc = QMatrix::identity(start_dim);
        for (i, &a) in word.iter().enumerate() {
            let m = match subst {
                Some((pos, e)) if pos == i => e,
                _ => &self.mats[a],
            };
            acc = m.mul(&acc);
        }
        acc
    }

    /// Evaluate a path polynomial whose words run from `from` to `to`.
    pub fn eval_poly(&self, q: &Quiver, p: &PathPoly, from: usize, to: usize) -> QMatrix {
        let (r, c) = (self.dims.get(to), self.dims.get(from));
        let mut acc = QMatrix::zeros(r, c);
        for (w, coeff) in p.terms() {
            let start = w.first().map_or(from, |&a| q.source(a));
            let m = self.eval_word_with(w, self.dims.get(start), None);
            acc = acc.add(&m.scale(&BigRational::from_integer(coeff.clone())));
        }
        acc
    }

    /// `Tr W(rho)`.
    pub fn trace_potential(&self, q: &Quiver, w: &Potential) -> BigRational {
        w.terms()
            .iter()
            .map(|(c, word)| {
                let d = self.dims.get(q.source(word[0]));
                self.eval_word_with(word, d, None).trace() * BigRational::from_integer(c.clone())
            })
            .sum()
    }

    /// `dW/da` evaluated at `rho`, a map from the target of `a` back to its source.
    pub fn eval_derivative(&self, q: &Quiver, w: &Potential, a: ArrowId) -> QMatrix {
        self.eval_poly(q, &w.cyclic_derivative(a), q.target(a), q.source(a))
    }

    /// First-order coefficient of `Tr W(rho + eps E_a)`, expanded term by term.
    pub fn first_variation(&self, q: &Quiver, w: &Potential, a: ArrowId, e: &QMatrix) -> BigRational {
        let mut total = BigRational::zero();
        for (c, word) in w.terms() {
            let d = self.dims.get(q.source(word[0]));
            for (i, &x) in word.iter().enumerate() {
                if x == a {
                    let m = self.eval_word_with(word, d, Some((i, e)));
                    total += m.trace() * BigRational::from_integer(c.clone());
                }
            }
        }
        total
    }

    /// `Tr(E * dW/da(rho))`.
    pub fn derivative_pairing(&self, q: &Quiver, w: &Potential, a: ArrowId, e: &QMatrix) -> BigRational {
        e.mul(&self.eval_derivative(q, w, a)).trace()
    }

    pub fn is_critical(&self, q: &Quiver, w: &Potential) -> bool {
        (0..q.arrows().len()).all(|a| self.eval_derivative(q, w, a).is_zero())
    }

    /// Criticality plus the exact directional-derivative identity along random perturbations.
    pub fn critical_check<R: Rng>(&self, q: &Quiver, w: &Potential, rng: &mut R) -> CriticalReport {
        let nonzero_derivatives: Vec<ArrowId> = (0..q.arrows().len())
            .filter(|&a| !self.eval_derivative(q, w, a).is_zero())
            .collect();
        let directional_ok = (0..q.arrows().len()).all(|a| {
            let (r, c) = self.mats[a].shape();
            let e = QMatrix::random(rng, r, c, 5);
            self.first_variation(q, w, a, &e) == self.derivative_pairing(q, w, a, &e)
        });
        CriticalReport {
            critical: nonzero_derivatives.is_empty(),
            directional_ok,
            nonzero_derivatives,
        }
    }

    /// `rho(a) -> g_t rho(a) g_s^(-1)`; the framing vertex must carry the identity.
    pub fn gauge_transform(&self, q: &Quiver, g: &[QMatrix]) -> Result<Representation> {
        if g.len() != q.vertices().len() {
            return Err(Error::Shape("one gauge matrix per vertex required".into()));
        }
        let mut inv = Vec::with_capacity(g.len());
        for (v, m) in g.iter().enumerate() {
            let d = self.dims.get(v);
            if m.shape() != (d, d) {
                return Err(Error::Shape(format!("gauge matrix at vertex {v} must be {d}x{d}")));
            }
            inv.push(
                m.inverse()
                    .ok_or_else(|| Error::InvalidArgument(format!("gauge matrix at vertex {v} is singular")))?,
            );
        }
        let mats = (0..q.arrows().len())
            .map(|a| g[q.target(a)].mul(&self.mats[a]).mul(&inv[q.source(a)]))
            .collect();
        Ok(Representation {
            dims: self.dims.clone(),
            mats,
        })
    }

    /// Random invertible gauge element, identity at the framing vertex.
    pub fn random_gauge<R: Rng>(&self, q: &Quiver, rng: &mut R) -> Vec<QMatrix> {
        (0..q.vertices().len())
            .map(|v| {
                let d = self.dims.get(v);
                if q.vertices()[v].framing {
                    QMatrix::identity(d)
                } else {
                    QMatrix::random_invertible(rng, d, 3)
                }
            })
            .collect()
    }
}
