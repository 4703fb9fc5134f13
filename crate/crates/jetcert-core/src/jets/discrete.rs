//! Discrete jet-budget sums: the integer counts whose `n -> infinity`
//! limits the piecewise densities upper-bound.
//!
//! For a candidate `p/q` and a sample count `n`, the per-level bound
//! `b_k` caps the dimension of level-`k` jets a section of `n*A` can
//! realize along the candidate curve. Summing `b_k` for `k` below
//! `3*n*p/q` and dividing by `n^3` gives a quantity that converges to the
//! profile integral from above, with gap `O(1/n)`. The report exposes the
//! exact sum, the exact integral and their difference so certificates can
//! record how far a finite `n` sits from the asymptotic budget.

use num::integer::binomial;
use num::BigInt;

use crate::error::{Error, Result};
use crate::jets::{jet_space_dim, point_jet_dim};
use crate::kernel::rat::Rat;
use crate::threefold::{build_profile, Candidate, Mode};

/// Exact comparison of a discrete budget sum against its limiting
/// integral. `sum` is the integer total of the per-level bounds;
/// `exact_sum` is `sum / n^3`.
#[derive(Clone, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
pub struct DiscreteSumReport {
    pub n: u64,
    pub mode: Mode,
    pub sum: Rat,
    pub exact_sum: Rat,
    pub integral: Rat,
    pub gap: Rat,
}

impl DiscreteSumReport {
    /// `n * gap`: bounded uniformly in `n`, which certifies the `O(1/n)`
    /// convergence rate.
    pub fn scaled_gap(&self) -> Rat {
        Rat::from(self.n) * &self.gap
    }
}

fn choose2(m: u64) -> BigInt {
    binomial(BigInt::from(m), BigInt::from(2u32))
}

/// Per-level integer bounds `b_0 .. b_(K-1)` with `K = floor(3np/q)`.
///
/// Levels up to `a3 = floor(2np/q)` use the front estimates directly;
/// beyond `a3` a section is forced to multiplicity 3 along the candidate
/// curve, so level `k` contributes the front bound at the reflected level
/// `3*a3 - 2*k` (zero once that undershoots).
pub fn per_level_bounds(c: &Candidate, mode: Mode, n: u64) -> Result<Vec<BigInt>> {
    if n == 0 {
        return Err(Error::ZeroSampleCount);
    }
    if mode == Mode::LargeQ && c.q() < 9 {
        return Err(Error::InadmissibleMode {
            mode: "LARGE_Q",
            p: c.p(),
            q: c.q(),
            reason: "plateau bounds need q >= 9".into(),
        });
    }
    let (p, q) = (c.p() as u128, c.q() as u128);
    let np = n as u128 * p;
    let a1 = (np / q) as u64;
    let a3 = (2 * np / q) as u64;
    let cap = (3 * np / q) as u64;

    // plateau level and the deflated count frozen there (LARGE_Q only)
    let a2 = if c.q() >= 5 { (np / (q - 4)) as u64 } else { 0 };
    let est2 = |k: u64| -> BigInt {
        // level k minus q times the forced fat-point conditions at the
        // half step u = floor((k - np/q) / 2); for k at or below the
        // first breakpoint the step is not yet positive and nothing
        // accrues (only reachable when floors push a2 down to a1)
        let num = k as i128 * q as i128 - np as i128;
        let deflation = if num < 0 {
            BigInt::from(0)
        } else {
            let f = (num as u128 / (2 * q)) as u64;
            BigInt::from(c.q()) * choose2(f + 1)
        };
        let v = jet_space_dim(3, k).expect("d = 3 is a surface or higher") - deflation;
        if v < BigInt::from(0) {
            BigInt::from(0)
        } else {
            v
        }
    };
    let frozen = if mode == Mode::LargeQ {
        est2(a2)
    } else {
        BigInt::from(0)
    };

    let front = |j: u64| -> BigInt {
        match mode {
            Mode::SmallQ => {
                if j <= a1 {
                    jet_space_dim(3, j).expect("d = 3 is a surface or higher")
                } else {
                    let m = j - a1 - 1;
                    point_jet_dim(3, j, m).expect("d = 3 is a surface or higher")
                }
            }
            Mode::LargeQ => {
                if j <= a1 {
                    jet_space_dim(3, j).expect("d = 3 is a surface or higher")
                } else if j <= a2 {
                    est2(j)
                } else {
                    frozen.clone()
                }
            }
        }
    };

    let mut bounds = Vec::with_capacity(cap as usize);
    for k in 0..cap {
        let b = if k <= a3 {
            front(k)
        } else {
            match (3 * a3).checked_sub(2 * k) {
                Some(s) => front(s),
                None => BigInt::from(0),
            }
        };
        bounds.push(b);
    }
    Ok(bounds)
}

/// Sums the per-level bounds, normalizes by `n^3` and compares against the
/// exact profile integral.
pub fn discrete_budget_sum(c: &Candidate, mode: Mode, n: u64) -> Result<DiscreteSumReport> {
    let bounds = per_level_bounds(c, mode, n)?;
    let total: BigInt = bounds.into_iter().sum();
    let sum = Rat::from(total);
    let n_cubed = Rat::from(n).pow(3);
    let exact_sum = &sum / &n_cubed;
    let integral = build_profile(c, mode)?.total_integral();
    let gap = (&exact_sum - &integral).abs();
    Ok(DiscreteSumReport {
        n,
        mode,
        sum,
        exact_sum,
        integral,
        gap,
    })
}
