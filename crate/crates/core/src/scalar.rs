//! Scalar abstraction for the linear algebra layer.

use num_traits::{Num, Signed};

use crate::error::{Error, Result};
use crate::{Int, Rational};

/// Field-like scalar the elimination routines are generic over.
///
/// Satisfied by any exact field type from the `num` ecosystem
/// (`BigRational`, `Ratio<i64>`, ...) as well as the primitive floats.
/// The crate instantiates it at [`crate::Rational`] throughout.
pub trait Scalar: Num + Signed + Clone {}

impl<T: Num + Signed + Clone> Scalar for T {}

/// Parse a rational written `p` or `p/q` in decimal.
///
/// Unlike `BigRational::from_str`, a zero denominator is reported as an
/// error instead of panicking. The result is in canonical form.
pub fn parse_rational(token: &str) -> Result<Rational> {
    let bad = || Error::InvalidArgument(format!("malformed rational `{token}`"));
    match token.split_once('/') {
        None => {
            let n: Int = token.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
        Some((num, den)) => {
            let n: Int = num.parse().map_err(|_| bad())?;
            let d: Int = den.parse().map_err(|_| bad())?;
            if d == Int::from(0) {
                return Err(Error::InvalidArgument(format!(
                    "zero denominator in `{token}`"
                )));
            }
            Ok(Rational::new(n, d))
        }
    }
}
