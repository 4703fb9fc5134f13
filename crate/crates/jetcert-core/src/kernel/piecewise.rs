//! Piecewise-polynomial jet-density profiles.
//!
//! A density is a list of polynomial pieces over contiguous half-open
//! intervals `(b[i-1], b[i]]`; the leftmost breakpoint additionally belongs
//! to piece 0, so the closed domain `[b0, bm]` is covered. Each piece
//! carries a provenance label naming the counting estimate that produced
//! it, so a certificate consumer can audit where every contribution to a
//! budget came from.

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::kernel::poly::Poly;
use crate::kernel::rat::Rat;

/// Which counting estimate a piece encodes.
///
/// `EST1` is the unconstrained jet count, `EST2` the fat-point defect
/// count, `EST3` the frozen plateau, `EST4` the reflected tail, and `F3`
/// the tangent-cone count used when no plateau is available.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Provenance {
    #[serde(rename = "EST1")]
    Est1,
    #[serde(rename = "EST2")]
    Est2,
    #[serde(rename = "EST3")]
    Est3,
    #[serde(rename = "EST4")]
    Est4,
    #[serde(rename = "F3")]
    F3,
    #[serde(rename = "CUSTOM")]
    Custom,
}

impl Provenance {
    pub fn label(self) -> &'static str {
        match self {
            Provenance::Est1 => "EST1",
            Provenance::Est2 => "EST2",
            Provenance::Est3 => "EST3",
            Provenance::Est4 => "EST4",
            Provenance::F3 => "F3",
            Provenance::Custom => "CUSTOM",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Piece {
    pub poly: Poly,
    pub provenance: Provenance,
}

/// Piecewise-polynomial density over `[b0, bm]`.
///
/// Invariants enforced on construction: breakpoints strictly increase,
/// there is one piece per gap, and every piece is nonnegative at both
/// endpoints of its interval.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PiecewiseDensity {
    breakpoints: Vec<Rat>,
    pieces: Vec<Piece>,
}

impl PiecewiseDensity {
    pub fn try_new(breakpoints: Vec<Rat>, pieces: Vec<Piece>) -> Result<Self> {
        if breakpoints.len() < 2 {
            return Err(Error::MalformedDensity {
                reason: format!("need at least 2 breakpoints, got {}", breakpoints.len()),
            });
        }
        if pieces.len() + 1 != breakpoints.len() {
            return Err(Error::MalformedDensity {
                reason: format!(
                    "{} breakpoints require {} pieces, got {}",
                    breakpoints.len(),
                    breakpoints.len() - 1,
                    pieces.len()
                ),
            });
        }
        for w in breakpoints.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::MalformedDensity {
                    reason: format!(
                        "breakpoints not strictly increasing at {} >= {}",
                        w[0], w[1]
                    ),
                });
            }
        }
        for (i, piece) in pieces.iter().enumerate() {
            for end in [&breakpoints[i], &breakpoints[i + 1]] {
                if piece.poly.eval(end).is_negative() {
                    return Err(Error::MalformedDensity {
                        reason: format!(
                            "piece {} ({}) is negative at endpoint {}",
                            i,
                            piece.provenance.label(),
                            end
                        ),
                    });
                }
            }
        }
        Ok(PiecewiseDensity {
            breakpoints,
            pieces,
        })
    }

    pub fn breakpoints(&self) -> &[Rat] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn domain(&self) -> (&Rat, &Rat) {
        (
            self.breakpoints.first().expect("nonempty"),
            self.breakpoints.last().expect("nonempty"),
        )
    }

    /// Iterates `(lo, hi, piece)` over the half-open intervals.
    pub fn intervals(&self) -> impl Iterator<Item = (&Rat, &Rat, &Piece)> {
        self.breakpoints
            .windows(2)
            .zip(&self.pieces)
            .map(|(w, piece)| (&w[0], &w[1], piece))
    }

    /// Index of the piece owning `t` under the half-open convention.
    pub fn piece_index(&self, t: &Rat) -> Result<usize> {
        let (lo, hi) = self.domain();
        if t < lo || t > hi {
            return Err(Error::EvalOutsideDomain {
                t: t.clone(),
                lo: lo.clone(),
                hi: hi.clone(),
            });
        }
        if t == lo {
            return Ok(0);
        }
        // first i with breakpoints[i] < t <= breakpoints[i+1]
        let i = self
            .breakpoints
            .iter()
            .skip(1)
            .position(|b| t <= b)
            .expect("t <= hi was checked");
        Ok(i)
    }

    pub fn eval(&self, t: &Rat) -> Result<Rat> {
        Ok(self.pieces[self.piece_index(t)?].poly.eval(t))
    }

    /// Exact integral over `[a, b]`, which must sit inside the domain.
    pub fn integrate_between(&self, a: &Rat, b: &Rat) -> Result<Rat> {
        if a > b {
            return Err(Error::ReversedInterval {
                a: a.clone(),
                b: b.clone(),
            });
        }
        let (lo, hi) = self.domain();
        if a < lo || b > hi {
            return Err(Error::OutsideDomain {
                a: a.clone(),
                b: b.clone(),
                lo: lo.clone(),
                hi: hi.clone(),
            });
        }
        let mut total = Rat::zero();
        for (plo, phi, piece) in self.intervals() {
            let left = if a > plo { a } else { plo };
            let right = if b < phi { b } else { phi };
            if left < right {
                total += &piece.poly.integrate_between(left, right)?;
            }
        }
        Ok(total)
    }

    /// Exact integral over the whole domain.
    pub fn total_integral(&self) -> Rat {
        let (lo, hi) = self.domain();
        let (lo, hi) = (lo.clone(), hi.clone());
        self.integrate_between(&lo, &hi)
            .expect("own domain is always valid")
    }

    /// Pointwise sum of two densities on the same breakpoint grid.
    /// Provenance is kept where the summands agree and marked `CUSTOM`
    /// elsewhere.
    pub fn try_add(&self, other: &PiecewiseDensity) -> Result<PiecewiseDensity> {
        if self.breakpoints != other.breakpoints {
            return Err(Error::MalformedDensity {
                reason: "cannot add densities on different breakpoint grids".into(),
            });
        }
        let pieces = self
            .pieces
            .iter()
            .zip(&other.pieces)
            .map(|(a, b)| Piece {
                poly: &a.poly + &b.poly,
                provenance: if a.provenance == b.provenance {
                    a.provenance
                } else {
                    Provenance::Custom
                },
            })
            .collect();
        PiecewiseDensity::try_new(self.breakpoints.clone(), pieces)
    }
}

impl<'de> Deserialize<'de> for PiecewiseDensity {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct RawPiece {
            poly: Poly,
            provenance: Provenance,
        }
        #[derive(Deserialize)]
        struct Raw {
            breakpoints: Vec<Rat>,
            pieces: Vec<RawPiece>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let pieces = raw
            .pieces
            .into_iter()
            .map(|p| Piece {
                poly: p.poly,
                provenance: p.provenance,
            })
            .collect();
        PiecewiseDensity::try_new(raw.breakpoints, pieces).map_err(serde::de::Error::custom)
    }
}
