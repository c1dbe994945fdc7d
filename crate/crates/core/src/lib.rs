//! Exact grading calculus for bordered Heegaard Floer theory.
//!
//! The crate implements the grading group `G'_Q(Z)` of a pointed matched
//! circle, rationally generated subgroups and their double cosets, the
//! combinatorics of bordered and closed Heegaard diagrams (domains, Euler
//! and point measures, periodic domains, gluing), and graded type-A/type-D
//! module presentations. Together these compute the relative rational
//! Maslov grading between generators of a glued 3-manifold, either from the
//! bordered pieces or directly from the closed diagram.
//!
//! All arithmetic is exact; the ambient scalar is [`Q`].

pub mod bundled;
pub mod diagram;
pub mod error;
pub mod grgroup;
pub mod linalg;
pub mod modules;
pub mod oracle;
pub mod pmc;
pub mod rational;

pub use error::{Error, Result};
pub use grgroup::{DoubleCoset, GradingElement, Membership, RelativeGrading, SubgroupSpan};
pub use pmc::{H0Chain, H1Chain, PointedMatchedCircle};
pub use rational::Q;
