//! Exact jet-space dimension counts on projective space.
//!
//! A level-`k` jet space on `P^(d-1)` is the space of degree-`k` forms in
//! `d` variables; `point_jet_dim` counts the forms vanishing to a given
//! order at a coordinate point. These integer counts are the per-level
//! terms whose normalised sums converge to the piecewise densities the
//! certifiers integrate.

pub mod discrete;

pub use discrete::{discrete_budget_sum, DiscreteSumReport};

use num::bigint::BigInt;
use num::integer::binomial;
use num::Zero;

use crate::error::{Error, Result};
use crate::kernel::poly::Poly;
use crate::kernel::rat::Rat;

/// Brute-force enumeration never runs past this degree; it exists to check
/// the closed-form counts, not to be fast.
pub const ORACLE_DEGREE_CAP: u64 = 40;

fn require_surface_or_higher(d: u32) -> Result<()> {
    if d < 2 {
        return Err(Error::AmbientDimensionTooSmall { d });
    }
    Ok(())
}

/// Dimension of the space of degree-`k` forms in `d` variables:
/// `C(k + d - 1, d - 1)`.
pub fn jet_space_dim(d: u32, k: u64) -> Result<BigInt> {
    require_surface_or_higher(d)?;
    Ok(binomial(
        BigInt::from(k + u64::from(d) - 1),
        BigInt::from(u64::from(d) - 1),
    ))
}

/// Dimension of the space of degree-`k` forms in `d` variables vanishing to
/// order at least `m` at the point `[1:0:...:0]`: the forms of degree `>= m`
/// in the last `d - 1` variables, summed level by level. Zero when `m > k`.
pub fn point_jet_dim(d: u32, k: u64, m: u64) -> Result<BigInt> {
    require_surface_or_higher(d)?;
    if m > k {
        return Ok(BigInt::zero());
    }
    let mut total = BigInt::zero();
    for j in m..=k {
        total += binomial(
            BigInt::from(j + u64::from(d) - 2),
            BigInt::from(u64::from(d) - 2),
        );
    }
    Ok(total)
}

/// Counts the same monomials as [`point_jet_dim`] by explicit enumeration
/// of exponent vectors. Capped at `k <= 40`.
pub fn monomial_vanishing_oracle(d: u32, k: u64, m: u64) -> Result<BigInt> {
    require_surface_or_higher(d)?;
    if k > ORACLE_DEGREE_CAP {
        return Err(Error::EnumerationCap {
            k,
            max: ORACLE_DEGREE_CAP,
        });
    }
    let mut count = BigInt::zero();
    let mut exponents = vec![0u64; d as usize];
    enumerate(&mut exponents, 0, k, m, &mut count);
    Ok(count)
}

/// Recursively assigns exponents summing to `remaining`; counts vectors
/// whose total degree in the last `d - 1` variables is at least `m`.
fn enumerate(exponents: &mut [u64], pos: usize, remaining: u64, m: u64, count: &mut BigInt) {
    if pos + 1 == exponents.len() {
        exponents[pos] = remaining;
        let tail_degree: u64 = exponents.iter().skip(1).sum();
        if tail_degree >= m {
            *count += 1;
        }
        return;
    }
    for e in 0..=remaining {
        exponents[pos] = e;
        enumerate(exponents, pos + 1, remaining - e, m, count);
    }
    exponents[pos] = 0;
}

/// Density of jets killed per unit multiplicity step by a point of
/// multiplicity `q` on a surface: `q * u^2 / 2` in the step variable `u`.
pub fn fat_point_defect_density(q: u64) -> Result<Poly> {
    if q == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    Ok(Poly::monomial(Rat::new(q as i64, 2), 2))
}
