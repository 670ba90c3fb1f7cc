//! Exact polynomial arithmetic: sparse multivariate and dense univariate
//! integer polynomials, certified complex root enclosures, rational
//! factorization, power-sum conversions, and exact interpolation.

pub mod factor;
pub mod interp;
pub mod modp;
pub mod multi;
pub mod newton;
pub mod parse;
pub mod roots;
pub mod uni;

pub use factor::{factor_rational, Factorization, FACTOR_DEGREE_CAP};
pub use interp::{interpolate_integer, interpolate_tensor, newton_interpolate};
pub use modp::factor_degrees_mod_p;
pub use multi::MultiPoly;
pub use newton::{elementary_to_power_sums, power_sums_to_elementary};
pub use parse::{parse_multipoly, parse_unipoly};
pub use roots::{complex_roots, integer_roots, roots_with_multiplicity, ComplexBall, CRat};
pub use uni::{is_perfect_square, UniPoly};
