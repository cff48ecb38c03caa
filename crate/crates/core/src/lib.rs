//! Combinatorial directed topology for computads: exact chain-level
//! cells, computad presentations, quotients, tensor products, cones and
//! smash products, and a catalog of derived algebraic theories.

pub mod catalog;
pub mod cell;
pub mod chain;
pub mod complex;
pub mod computad;
pub mod constructions;
pub mod error;
pub mod io;
pub mod iso;
pub mod map;
pub mod name;
pub mod quotient;
pub mod tensor;

pub use cell::{Sign, SteinerCell, SIGNS};
pub use chain::Chain;
pub use complex::DirectedComplex;
pub use computad::{rename_cell, Computad, ValidationReport, Violation};
pub use constructions::{
    circle, cone, cube, cylinder, globe, interval, oriental, pushout, reduced_cylinder, smash,
    suspension, wedge, PointedComputad,
};
pub use error::{Error, Result};
pub use iso::{find_isomorphism, shape_classes};
pub use map::ComputadMap;
pub use name::GenName;
pub use quotient::{collapse, quotient_by_relation, GeneratorRelation, QuotientMode};
pub use tensor::{explicit_border, check_tensor_borders, tensor_product, TensorBorderReport};
