//! Exact geometry kernel for a discontinuous two-sheet model space.
//!
//! The space consists of two half-planes joined only at two gate points by
//! out-of-plane strings, plus isolated island points. On top of the exact
//! metric the crate provides: maximal geodesic lines with their end behavior,
//! the incidence vocabulary (betweenness, angles as tangent means, congruence,
//! triangles), an executable catalog of axiom counterexamples, an exhaustive
//! finite counter-model search for the counter-projective axioms, and a
//! paraconsistent consequence calculus for inconsistent axiom systems.

pub mod config;
pub mod counter;
pub mod extend;
pub mod harness;
pub mod incidence;
pub mod logic;
pub mod metric;
pub mod oracle;
pub mod path;
pub mod point;
pub mod svg;

pub use config::{MdConfig, TOL};
pub use metric::{circle, distance, geodesics_between, CircleDescription, Distance};
pub use path::{is_geodesic, Leg, PathRep, Region};
pub use point::{connectable, make_point, parse_point_expr, IsolatedId, PointRef, RawPoint};
