//! Certificates for lower bounds on the unimodular degree of a root system
//! and the resulting upper bounds on the canonical dimension of split
//! semisimple groups.
//!
//! Polynomials live in the symmetric algebra of the weight lattice, written
//! in the fundamental weights `x_1..x_n`. Divided-difference operators act
//! on them; a certificate is a monic monomial `p` and a word `w` with
//! `d_w(p) = 1`.

pub mod abelian;
pub mod cli;
pub mod demazure;
pub mod error;
pub mod isogeny;
pub mod polynomial;
pub mod properties;
pub mod root_system;
pub mod search;
pub mod weyl;

pub use abelian::AbelianGroup;
pub use demazure::OperatorContext;
pub use error::{Error, Result};
pub use polynomial::{Monomial, Polynomial};
pub use root_system::{parse_diagram, CartanMatrix, DynkinDiagram, Family, SimpleType};
pub use search::{Certificate, Step, StepKind};
pub use weyl::{WeylElement, WeylGroup};
