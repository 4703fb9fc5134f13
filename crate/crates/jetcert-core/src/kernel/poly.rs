//! Exact univariate polynomials with rational coefficients.
//!
//! Coefficients are stored ascending by power with no trailing zeros; the
//! zero polynomial is the empty list and has degree `None`. These are the
//! densities the certifiers evaluate and integrate, so every operation here
//! is exact.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::kernel::rat::Rat;

#[derive(Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    /// Builds a polynomial from ascending coefficients, stripping trailing
    /// zeros into canonical form.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// `c * t^power`.
    pub fn monomial(c: Rat, power: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); power + 1];
        coeffs[power] = c;
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * t + c)
    }

    /// Antiderivative with constant term zero.
    pub fn antiderivative(&self) -> Poly {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rat::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / Rat::from_int(i as i64 + 1));
        }
        Poly::new(coeffs)
    }

    /// Exact definite integral over `[a, b]`; requires `a <= b`.
    pub fn integrate_between(&self, a: &Rat, b: &Rat) -> Result<Rat> {
        if a > b {
            return Err(Error::ReversedInterval {
                a: a.clone(),
                b: b.clone(),
            });
        }
        let anti = self.antiderivative();
        Ok(anti.eval(b) - anti.eval(a))
    }

    /// Substitutes `t -> a*t + b`, returning `P(a*t + b)` exactly.
    pub fn compose_affine(&self, a: &Rat, b: &Rat) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_linear(a, b);
            acc = &acc + &Poly::constant(c.clone());
        }
        acc
    }

    /// Multiplies by the linear factor `a*t + b`.
    fn mul_linear(&self, a: &Rat, b: &Rat) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += &(c * b);
            coeffs[i + 1] += &(c * a);
        }
        Poly::new(coeffs)
    }

    pub fn scaled(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Poly::new(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coeffs = Vec::<Rat>::deserialize(deserializer)?;
        Ok(Poly::new(coeffs))
    }
}

/// Exact maximum of a polynomial of degree at most 2 over `[a, b]`,
/// returned as `(argmax, max)`. Ties break toward the smaller argument; a
/// concave interior vertex wins when it lies inside the interval.
pub fn quadratic_argmax_on_interval(p: &Poly, a: &Rat, b: &Rat) -> Result<(Rat, Rat)> {
    if a > b {
        return Err(Error::ReversedInterval {
            a: a.clone(),
            b: b.clone(),
        });
    }
    let degree = p.degree().unwrap_or(0);
    if degree > 2 {
        return Err(Error::UnsupportedDegree { degree, max: 2 });
    }
    if degree == 2 {
        let c2 = &p.coeffs()[2];
        let c1 = &p.coeffs()[1];
        if c2.is_negative() {
            let vertex = -c1 / (Rat::from_int(2) * c2);
            if &vertex >= a && &vertex <= b {
                let value = p.eval(&vertex);
                return Ok((vertex, value));
            }
        }
    }
    let fa = p.eval(a);
    let fb = p.eval(b);
    if fa >= fb {
        Ok((a.clone(), fa))
    } else {
        Ok((b.clone(), fb))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half_t_squared() -> Poly {
        Poly::monomial(Rat::new(1, 2), 2)
    }

    /// t^2/2 - (t - 3/7)^2/2, the tangent-cone density for p/q = 3/7.
    fn f3_density_3_7() -> Poly {
        let shifted = half_t_squared().compose_affine(&Rat::one(), &Rat::new(-3, 7));
        &half_t_squared() - &shifted
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        let p = Poly::new(vec![Rat::one(), Rat::zero(), Rat::zero()]);
        assert_eq!(p.degree(), Some(0));
        assert!(Poly::new(vec![Rat::zero(); 3]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn eval_zero_polynomial_is_zero() {
        assert_eq!(Poly::zero().eval(&Rat::new(5, 3)), Rat::zero());
    }

    #[test]
    fn eval_half_square_at_one() {
        assert_eq!(half_t_squared().eval(&Rat::one()), Rat::new(1, 2));
    }

    #[test]
    fn eval_tangent_cone_density_at_six_sevenths() {
        // (6/7)^2/2 - (3/7)^2/2 = 18/49 - 9/98 = 27/98
        assert_eq!(f3_density_3_7().eval(&Rat::new(6, 7)), Rat::new(27, 98));
    }

    #[test]
    fn integrate_half_square() {
        let p = half_t_squared();
        assert_eq!(
            p.integrate_between(&Rat::zero(), &Rat::one()).unwrap(),
            Rat::new(1, 6)
        );
        assert_eq!(
            p.integrate_between(&Rat::zero(), &Rat::new(3, 7)).unwrap(),
            Rat::new(9, 686)
        );
    }

    #[test]
    fn integrate_zero_polynomial() {
        assert_eq!(
            Poly::zero()
                .integrate_between(&Rat::new(-5, 1), &Rat::new(7, 1))
                .unwrap(),
            Rat::zero()
        );
    }

    #[test]
    fn integrate_rejects_reversed_interval() {
        let err = half_t_squared()
            .integrate_between(&Rat::one(), &Rat::zero())
            .unwrap_err();
        assert!(matches!(err, Error::ReversedInterval { .. }));
    }

    #[test]
    fn compose_affine_identity() {
        let p = f3_density_3_7();
        assert_eq!(p.compose_affine(&Rat::one(), &Rat::zero()), p);
    }

    #[test]
    fn compose_affine_expands_square() {
        // t^2 at t -> -2t + 12/7 gives 4t^2 - (48/7)t + 144/49
        let p = Poly::monomial(Rat::one(), 2);
        let q = p.compose_affine(&Rat::from_int(-2), &Rat::new(12, 7));
        assert_eq!(
            q.coeffs(),
            &[Rat::new(144, 49), Rat::new(-48, 7), Rat::from_int(4)]
        );
    }

    #[test]
    fn compose_affine_leaves_constants_alone() {
        let p = Poly::constant(Rat::new(5, 9));
        assert_eq!(p.compose_affine(&Rat::new(7, 2), &Rat::new(-1, 3)), p);
    }

    #[test]
    fn argmax_returns_interior_vertex_of_concave_quadratic() {
        // t^2/2 - 10(t - 2/5)^2/8 peaks at t = 2/5 * 10/(10-4) = 2/3
        let defect =
            Poly::monomial(Rat::new(10, 8), 2).compose_affine(&Rat::one(), &Rat::new(-2, 5));
        let p = &half_t_squared() - &defect;
        let (arg, max) = quadratic_argmax_on_interval(&p, &Rat::new(2, 5), &Rat::one()).unwrap();
        assert_eq!(arg, Rat::new(2, 3));
        assert_eq!(max, Rat::new(2, 15));
    }

    #[test]
    fn argmax_vertex_at_origin() {
        let p = Poly::monomial(Rat::from_int(-1), 2);
        let (arg, max) = quadratic_argmax_on_interval(&p, &Rat::from_int(-1), &Rat::one()).unwrap();
        assert_eq!((arg, max), (Rat::zero(), Rat::zero()));
    }

    #[test]
    fn argmax_linear_takes_endpoint() {
        let p = Poly::monomial(Rat::one(), 1);
        let (arg, max) = quadratic_argmax_on_interval(&p, &Rat::zero(), &Rat::one()).unwrap();
        assert_eq!((arg, max), (Rat::one(), Rat::one()));
    }

    #[test]
    fn argmax_constant_breaks_tie_toward_left_endpoint() {
        let p = Poly::constant(Rat::new(2, 7));
        let (arg, max) =
            quadratic_argmax_on_interval(&p, &Rat::new(-1, 2), &Rat::new(1, 2)).unwrap();
        assert_eq!((arg, max), (Rat::new(-1, 2), Rat::new(2, 7)));
    }

    #[test]
    fn argmax_concave_vertex_outside_interval_takes_nearer_endpoint() {
        let p = Poly::monomial(Rat::from_int(-1), 2);
        let (arg, max) = quadratic_argmax_on_interval(&p, &Rat::one(), &Rat::from_int(2)).unwrap();
        assert_eq!((arg, max), (Rat::one(), Rat::from_int(-1)));
    }

    #[test]
    fn argmax_rejects_cubic_and_reversed_interval() {
        let cubic = Poly::monomial(Rat::one(), 3);
        assert!(matches!(
            quadratic_argmax_on_interval(&cubic, &Rat::zero(), &Rat::one()),
            Err(Error::UnsupportedDegree { degree: 3, max: 2 })
        ));
        let p = half_t_squared();
        assert!(matches!(
            quadratic_argmax_on_interval(&p, &Rat::one(), &Rat::zero()),
            Err(Error::ReversedInterval { .. })
        ));
    }

    #[test]
    fn argmax_degenerate_interval() {
        let p = half_t_squared();
        let (arg, max) =
            quadratic_argmax_on_interval(&p, &Rat::new(3, 7), &Rat::new(3, 7)).unwrap();
        assert_eq!((arg, max), (Rat::new(3, 7), Rat::new(9, 98)));
    }

    #[test]
    fn serde_round_trips_canonical_coefficients() {
        let p = f3_density_3_7();
        let json = serde_json::to_string(&p).unwrap();
        let back: Poly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        // trailing zeros in the wire form are stripped on load
        let padded: Poly =
            serde_json::from_str(r#"[{"num":"1","den":"2"},{"num":"0","den":"1"}]"#).unwrap();
        assert_eq!(padded, Poly::constant(Rat::new(1, 2)));
    }
}
