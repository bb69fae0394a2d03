//! Checked 64-bit helpers used by every formula path.
//!
//! The classification formulas are low-degree polynomials in small inputs,
//! so plain `i64` suffices, but every operation is checked and overflow is
//! reported loudly rather than wrapped.

use crate::{Error, Result};

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow("addition"))
}

pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow("subtraction"))
}

pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow("multiplication"))
}

pub(crate) fn neg(a: i64) -> Result<i64> {
    a.checked_neg().ok_or(Error::Overflow("negation"))
}

/// Exact division by two of a value that is even whenever the caller's
/// invariants hold. An odd argument is a bug, not an input error.
pub(crate) fn halve(a: i64, context: &'static str) -> Result<i64> {
    if a % 2 != 0 {
        return Err(Error::Parity(context));
    }
    Ok(a / 2)
}
