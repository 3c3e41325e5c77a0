//! Motivic Donaldson-Thomas generating series for points and curves in 3-folds.
//!
//! The ring of classes is `Z[L^(1/2), L^(-1/2)]` with the pre-lambda structure
//! in which `-L^(1/2)` is a line element. On top of it sit truncated power
//! series, the power structure, the closed-form DT series, relative motives on
//! small diagonals, quivers with potential, and a check harness.

pub mod dt;
pub mod error;
pub mod harness;
pub mod lambda;
pub mod motive;
pub mod oracles;
pub mod quiver;
pub mod relative;
pub mod series;

pub use dt::GeometryInput;
pub use error::{Error, Result};
pub use motive::{curve_class, half_power, EffectiveDecomposition, MotiveClass, WeightPolynomial};
pub use oracles::Partition;
pub use quiver::{DimVector, Potential, Quiver, QuiverWithPotential, Representation};
pub use relative::{DiagonalAtom, DiagonalRelativeSeries, PointLocation, SupportLabel};
pub use series::{BigradedSeries, MotiveSeries};
