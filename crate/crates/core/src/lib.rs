//! Exact computations on multigraded Hilbert schemes of the plane.
//!
//! The ring is `k[x, y]`, graded by a finitely generated abelian group
//! `A = Z^r + Z/m_1 + ... + Z/m_s`. Everything here is exact: rationals,
//! integers and integer polynomials in a deformation parameter `t`.
//!
//! * [`grading`]: the group `A`, degrees of monomials, the degree-zero submonoid.
//! * [`staircase`]: monomial ideals as staircases, Hilbert functions, colon
//!   ideals and gcd factorization.
//! * [`arrows`]: arrows of a monomial ideal and their classification.
//! * [`groebner`]: a small Buchberger engine for bivariate polynomials over `Q`.
//! * [`edge`]: edge ideals `I_alpha(t)`, their syzygies and initial ideals.
//! * [`poset`]: the poset of monomial ideals with a fixed Hilbert function,
//!   its Hasse diagram, the lex-most ideal and chains towards it.
//! * [`tangent`]: tangent-space equations at edge ideals, their reduced form,
//!   relations among them, and an independent syzygy-based oracle.
//! * [`chart`]: the parametrized family of ideals around the lex-most point.

pub mod arrows;
pub mod chart;
pub mod edge;
mod error;
pub mod grading;
pub mod groebner;
pub mod linalg;
pub mod monomial;
pub mod mpoly;
pub mod poset;
mod ratstr;
pub mod staircase;
pub mod tangent;

pub use arrows::{Arrow, ArrowClass, ArrowSet};
pub use chart::{ChartFamily, ChartReport};
pub use edge::{Binomial, EdgeIdeal, SyzygyRow};
pub use error::{Error, Result};
pub use grading::{DegreeValue, DegreeZero, Grading};
pub use groebner::{MonomialOrder, Poly2};
pub use linalg::IntPoly;
pub use monomial::Monomial;
pub use poset::{ChainStep, Poset};
pub use staircase::{FactorKind, FactorSpace, HilbertFunction, MonomialIdeal};
pub use tangent::{TMode, TangentSystem};
