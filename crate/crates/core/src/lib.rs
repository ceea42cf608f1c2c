//! Unit shapes: canonical representatives of similarity classes of planar
//! shapes, chosen so that area equals semiperimeter.
//!
//! The crate is `no_std` and only needs `alloc`. It contains:
//!
//! - [`curve`] and [`shape`]: piecewise parametric closed curves, similarity
//!   transforms, and area/perimeter by exact formulas or adaptive quadrature.
//! - [`unitizer`]: Tong inradius, canonical unit shape and fundamental measure.
//! - [`catalog`]: closed-form fundamental measures and builders for triangles,
//!   rectangles, rhombi, parallelograms, ellipses and regular polygons.
//! - [`optimize`]: golden-section and Nelder–Mead searches over family
//!   parameters, plus grid scans.
//! - [`verify`]: numerical checks of the isoperimetric bounds, the blob
//!   Pythagorean relation and related identities.
//! - [`solids`]: the three-dimensional analogue for the Platonic solids.
//!
//! IO, random sampling and the command-line tool live in the `unit-shapes`
//! companion crate.
#![no_std]

extern crate alloc;

pub mod catalog;
pub mod curve;
mod error;
pub mod geometry;
mod math;
pub mod optimize;
pub mod quadrature;
pub mod shape;
pub mod solids;
pub mod unitizer;
pub mod verify;

pub use catalog::{FamilyKind, FamilyParam};
pub use curve::CurvePiece;
pub use error::{Error, Result};
pub use geometry::{Point, RigidMotion, Similarity};
pub use shape::Shape;
pub use solids::{PlatonicKind, PlatonicSolid};
pub use unitizer::{unitize, UnitizationResult};
pub use verify::VerificationReport;
