//! Quivers with potential and their exact-rational representations.
//!
//! Arrows are stored as written in the input. The [`Orientation`] flag says
//! how to read them: with [`Orientation::Path`] an arrow `a: i -> j` is a map
//! from the space at `i` to the space at `j`; with
//! [`Orientation::RightModule`] the same arrow is a map from `j` to `i`.
//! Words in a potential are always paths in the effective orientation, read
//! left to right, and `rho(a)` has shape `dim(target) x dim(source)` in that
//! orientation.

mod matrix;
mod parse;
mod path;
pub mod presets;
mod rep;

pub use matrix::QMatrix;
pub use parse::{parse_potential, parse_quiver, ParseError, ParseErrorKind};
pub use path::PathPoly;
pub use rep::{CriticalReport, Representation};

use num_bigint::BigInt;
use num_traits::Zero;

pub type VertexId = usize;
pub type ArrowId = usize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Orientation {
    #[default]
    Path,
    RightModule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub name: String,
    pub framing: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
    orientation: Orientation,
}

/// Reasons a quiver or potential fails validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuiverError {
    DuplicateVertex(String),
    DuplicateArrow(String),
    UnknownVertex(String),
    UnknownArrow(String),
    SecondFramingVertex(String),
    NotComposable { left: String, right: String },
    NotCyclic(String),
    EmptyWord,
}

impl std::fmt::Display for QuiverError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QuiverError::DuplicateVertex(v) => write!(f, "duplicate vertex {v:?}"),
            QuiverError::DuplicateArrow(a) => write!(f, "duplicate arrow {a:?}"),
            QuiverError::UnknownVertex(v) => write!(f, "unknown vertex {v:?}"),
            QuiverError::UnknownArrow(a) => write!(f, "unknown arrow {a:?}"),
            QuiverError::SecondFramingVertex(v) => write!(f, "second framing vertex {v:?}"),
            QuiverError::NotComposable { left, right } => {
                write!(f, "arrow {right:?} does not start where {left:?} ends")
            }
            QuiverError::NotCyclic(w) => write!(f, "word {w:?} is not a cycle"),
            QuiverError::EmptyWord => f.write_str("empty word"),
        }
    }
}

impl Quiver {
    pub fn new(orientation: Orientation) -> Self {
        Quiver {
            orientation,
            ..Default::default()
        }
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn set_orientation(&mut self, o: Orientation) {
        self.orientation = o;
    }

    pub fn add_vertex(&mut self, name: &str, framing: bool) -> Result<VertexId, QuiverError> {
        if self.vertex_id(name).is_some() {
            return Err(QuiverError::DuplicateVertex(name.into()));
        }
        if framing && self.framing_vertex().is_some() {
            return Err(QuiverError::SecondFramingVertex(name.into()));
        }
        self.vertices.push(Vertex {
            name: name.into(),
            framing,
        });
        Ok(self.vertices.len() - 1)
    }

    pub fn add_arrow(&mut self, name: &str, source: &str, target: &str) -> Result<ArrowId, QuiverError> {
        if self.arrow_id(name).is_some() {
            return Err(QuiverError::DuplicateArrow(name.into()));
        }
        let s = self
            .vertex_id(source)
            .ok_or_else(|| QuiverError::UnknownVertex(source.into()))?;
        let t = self
            .vertex_id(target)
            .ok_or_else(|| QuiverError::UnknownVertex(target.into()))?;
        self.arrows.push(Arrow {
            name: name.into(),
            source: s,
            target: t,
        });
        Ok(self.arrows.len() - 1)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v.name == name)
    }

    pub fn arrow_id(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn arrow_name(&self, a: ArrowId) -> &str {
        &self.arrows[a].name
    }

    pub fn framing_vertex(&self) -> Option<VertexId> {
        self.vertices.iter().position(|v| v.framing)
    }

    /// Source in the effective orientation.
    pub fn source(&self, a: ArrowId) -> VertexId {
        match self.orientation {
            Orientation::Path => self.arrows[a].source,
            Orientation::RightModule => self.arrows[a].target,
        }
    }

    /// Target in the effective orientation.
    pub fn target(&self, a: ArrowId) -> VertexId {
        match self.orientation {
            Orientation::Path => self.arrows[a].target,
            Orientation::RightModule => self.arrows[a].source,
        }
    }

    /// Check that consecutive arrows compose and the word closes up.
    pub fn check_cycle(&self, word: &[ArrowId]) -> Result<(), QuiverError> {
        let (first, last) = match (word.first(), word.last()) {
            (Some(f), Some(l)) => (*f, *l),
            _ => return Err(QuiverError::EmptyWord),
        };
        for w in word.windows(2) {
            if self.target(w[0]) != self.source(w[1]) {
                return Err(QuiverError::NotComposable {
                    left: self.arrow_name(w[0]).into(),
                    right: self.arrow_name(w[1]).into(),
                });
            }
        }
        if self.target(last) != self.source(first) {
            return Err(QuiverError::NotCyclic(self.render_word(word)));
        }
        Ok(())
    }

    pub fn render_word(&self, word: &[ArrowId]) -> String {
        word.iter().map(|&a| self.arrow_name(a)).collect::<Vec<_>>().join(" ")
    }

    /// Copy with the framing vertex and its arrows removed.
    pub fn unframed(&self) -> Quiver {
        let Some(f) = self.framing_vertex() else {
            return self.clone();
        };
        let mut q = Quiver::new(self.orientation);
        for (i, v) in self.vertices.iter().enumerate() {
            if i != f {
                q.add_vertex(&v.name, false).expect("names are unique");
            }
        }
        for a in &self.arrows {
            if a.source != f && a.target != f {
                q.add_arrow(&a.name, &self.vertices[a.source].name, &self.vertices[a.target].name)
                    .expect("endpoints exist");
            }
        }
        q
    }

    /// `sum_i d_i d'_i - sum_a d_{s(a)} d'_{t(a)}`, optionally skipping the framing vertex.
    pub fn euler_form(&self, d: &DimVector, e: &DimVector, include_framing: bool) -> i64 {
        let skip = if include_framing { None } else { self.framing_vertex() };
        let dim = |v: &DimVector, i: VertexId| v.get(i) as i64;
        let verts: i64 = (0..self.vertices.len())
            .filter(|&i| Some(i) != skip)
            .map(|i| dim(d, i) * dim(e, i))
            .sum();
        let arrows: i64 = (0..self.arrows.len())
            .filter(|&a| Some(self.source(a)) != skip && Some(self.target(a)) != skip)
            .map(|a| dim(d, self.source(a)) * dim(e, self.target(a)))
            .sum();
        verts - arrows
    }

    /// Dimension of the representation space minus the gauge group at non-framing vertices.
    pub fn moduli_dim(&self, d: &DimVector) -> i64 {
        let rep: i64 = self
            .arrows
            .iter()
            .map(|a| d.get(a.source) as i64 * d.get(a.target) as i64)
            .sum();
        let gauge: i64 = self
            .vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.framing)
            .map(|(i, _)| (d.get(i) as i64).pow(2))
            .sum();
        rep - gauge
    }
}

/// Dimension at each vertex, indexed by [`VertexId`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DimVector(pub Vec<usize>);

impl DimVector {
    pub fn get(&self, v: VertexId) -> usize {
        self.0.get(v).copied().unwrap_or(0)
    }
}

/// Signed sum of cyclic words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Potential {
    terms: Vec<(BigInt, Vec<ArrowId>)>,
}

impl Potential {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Build a potential, checking every word is a cycle of `q`.
    pub fn new(q: &Quiver, terms: Vec<(BigInt, Vec<ArrowId>)>) -> Result<Self, QuiverError> {
        for (_, w) in &terms {
            q.check_cycle(w)?;
        }
        Ok(Potential {
            terms: terms.into_iter().filter(|(c, _)| !c.is_zero()).collect(),
        })
    }

    /// Words given by arrow names.
    pub fn from_names(q: &Quiver, terms: &[(i64, &str)]) -> Result<Self, QuiverError> {
        let mut out = Vec::new();
        for (c, w) in terms {
            let word = w
                .split_whitespace()
                .map(|a| q.arrow_id(a).ok_or_else(|| QuiverError::UnknownArrow(a.into())))
                .collect::<Result<Vec<_>, _>>()?;
            out.push((BigInt::from(*c), word));
        }
        Potential::new(q, out)
    }

    pub fn terms(&self) -> &[(BigInt, Vec<ArrowId>)] {
        &self.terms
    }

    pub fn extend(&mut self, other: Potential) {
        self.terms.extend(other.terms);
    }

    /// Rotate every word by `k` positions; the trace function is unchanged.
    pub fn rotated(&self, k: usize) -> Potential {
        Potential {
            terms: self
                .terms
                .iter()
                .map(|(c, w)| {
                    let mut w = w.clone();
                    let r = k % w.len();
                    w.rotate_left(r);
                    (c.clone(), w)
                })
                .collect(),
        }
    }

    /// Cyclic derivative: each occurrence of `a` is removed and the word is
    /// rotated to start just after it.
    pub fn cyclic_derivative(&self, a: ArrowId) -> PathPoly {
        let mut out = PathPoly::zero();
        for (c, w) in &self.terms {
            for (i, &x) in w.iter().enumerate() {
                if x == a {
                    let mut rot: Vec<ArrowId> = w[i + 1..].to_vec();
                    rot.extend_from_slice(&w[..i]);
                    out.add_term(rot, c.clone());
                }
            }
        }
        out
    }

    /// `{dW/da}` for every arrow of `q`, zero relations dropped.
    pub fn superpotential_relations(&self, q: &Quiver) -> Vec<(ArrowId, PathPoly)> {
        (0..q.arrows().len())
            .map(|a| (a, self.cyclic_derivative(a)))
            .filter(|(_, p)| !p.is_zero())
            .collect()
    }

    pub fn render(&self, q: &Quiver) -> String {
        let mut p = PathPoly::zero();
        for (c, w) in &self.terms {
            p.add_term(w.clone(), c.clone());
        }
        p.render(q)
    }
}

/// Set the given arrows to zero in every relation and drop relations that vanish.
pub fn specialize_relations(relations: &[(ArrowId, PathPoly)], zero_arrows: &[ArrowId]) -> Vec<(ArrowId, PathPoly)> {
    relations
        .iter()
        .map(|(a, p)| (*a, p.specialize_zero(zero_arrows)))
        .filter(|(_, p)| !p.is_zero())
        .collect()
}

/// A parsed quiver file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverWithPotential {
    pub quiver: Quiver,
    pub potential: Potential,
}
