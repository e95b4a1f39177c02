//! Exact sparse polynomials in the indeterminates `x[i,j]` (`i < j`) of a
//! generic skew-symmetric matrix.

mod division;
mod field;
mod monomial;
mod order;
mod poly;
mod text;
mod var;

pub use division::normal_form;
pub(crate) use division::reduce_by;
pub use field::{Coeff, Field, DEFAULT_PRIME};
pub use monomial::Monomial;
pub use order::TermOrder;
pub use poly::{Polynomial, Ring, Term};
pub use text::parse_polynomial;
pub use var::{make_var, Sign, SignedVar, VarId};
