//! Exact construction and certification of totally real sextic points on the
//! Fermat quintic x^5 + y^5 + z^5 = 0.
//!
//! For a rational parameter t the conic x^2 + y^2 + z^2 + t(xy + xz + yz) = 0
//! meets the quintic in six points whose coordinates generate a degree-6
//! number field K_t.  This crate builds the defining sextic f_t and the
//! second coordinate beta exactly, certifies irreducibility, the Galois
//! group, the point identities, and the totally-real criterion (satisfied
//! precisely for 2 < t < r with 7r^5 - 10r^4 - 20r^3 - 4 = 0), and packages
//! every verdict into a deterministic certificate.
//!
//! All arithmetic is exact: big rationals, integer polynomial remainder
//! sequences, Sturm chains, and quotient-ring arithmetic.  Floating point
//! appears nowhere in the mathematical path.

pub mod certificate;
pub mod checks;
pub mod numberfield;
pub mod params;
pub mod points;
pub mod poly;
pub mod polyfp;
pub mod rational;
pub mod realroots;
pub mod resultant;
pub mod search;

pub use certificate::Certificate;
pub use checks::{IrreducibilityVerdict, ProjectivePointNF, TotallyRealVerdict};
pub use numberfield::{NFElement, NumberFieldCtx};
pub use params::{ParamData, QuinticError};
pub use poly::PolyQ;
pub use rational::Rational;
pub use realroots::IsolatingInterval;
