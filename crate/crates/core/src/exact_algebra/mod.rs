//! Exact rationals and (symmetric) Laurent polynomial arithmetic.

pub mod laurent;
pub mod scalar;
pub mod sym;
pub mod xpoly;

pub use laurent::Laurent;
pub use scalar::{format_rational, int, parse_rational, pow, rat, Scalar};
pub use sym::{sym_to_x, x_to_sym, SymLaurent};
pub use xpoly::XPoly;
