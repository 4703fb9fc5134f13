//! Certified rational enclosures of the exponential on [-1, 1].
//!
//! The lower bound is the Taylor partial sum, the upper bound adds the
//! Lagrange remainder capped by 3*|x|^(n+1)/(n+1)! (valid since e < 3 on
//! this range). Negative arguments go through the exact reciprocal of the
//! enclosure at -x, so both bounds stay rational and certified.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::rat::Rat;

/// Certified enclosure `lower <= exp(x) <= upper`, exact rationals.
/// `lower == upper` only at `x == 0`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ExpBound {
    pub x: Rat,
    pub lower: Rat,
    pub upper: Rat,
    pub terms: u32,
}

/// Certified bounds for `exp(x)` with the Taylor sum truncated after the
/// `terms`-th power. Requires `terms >= 1` and `|x| <= 1`.
pub fn exp_bounds(x: &Rat, terms: u32) -> Result<ExpBound> {
    if terms == 0 {
        return Err(Error::ExpZeroTerms);
    }
    if x.abs() > Rat::one() {
        return Err(Error::ExpArgumentOutOfRange { x: x.clone() });
    }
    if x.is_negative() {
        let mirrored = exp_bounds(&-x, terms)?;
        // partial sums at -x >= 1 > 0, so both reciprocals exist
        return Ok(ExpBound {
            x: x.clone(),
            lower: mirrored.upper.recip()?,
            upper: mirrored.lower.recip()?,
            terms,
        });
    }
    let mut sum = Rat::one();
    let mut term = Rat::one();
    for i in 1..=terms {
        term = term * x / Rat::from(i);
        sum += &term;
    }
    let remainder = term * x / Rat::from(terms + 1) * Rat::from_int(3);
    let upper = &sum + &remainder;
    Ok(ExpBound {
        x: x.clone(),
        lower: sum,
        upper,
        terms,
    })
}
