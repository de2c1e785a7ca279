use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::Laurent;
use super::scalar::{int, Scalar};
use super::sym::{x_to_sym, SymLaurent};
use crate::error::{Error, Result};

/// An ordinary polynomial in `x`, coefficients indexed by power.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct XPoly {
    coeffs: Vec<Scalar>,
}

impl XPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn x() -> Self {
        Self::from_coeffs(vec![Scalar::zero(), Scalar::one()])
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c x^k`.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut v = vec![Scalar::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&v| int(v)).collect())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = Vec::with_capacity(self.coeffs.len() + 1);
        v.push(Scalar::zero());
        v.extend(self.coeffs.iter().cloned());
        Self { coeffs: v }
    }

    /// Exact division by `x`; fails unless the constant term vanishes.
    pub fn div_x(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroRemainder);
        }
        Ok(Self::from_coeffs(self.coeffs[1..].to_vec()))
    }

    /// `f(x) -> f(r x)`.
    pub fn dilate(&self, r: &Scalar) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::ZeroDilation);
        }
        let mut p = Scalar::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &p);
            p *= r;
        }
        Ok(Self::from_coeffs(out))
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    /// The same polynomial written as `f[z] = f((z + 1/z)/2)`.
    pub fn to_sym(&self) -> SymLaurent {
        x_to_sym(self)
    }

    /// `f((z + 1/z)/2)` as a Laurent polynomial in `z`.
    pub fn to_z_laurent(&self) -> Laurent {
        self.to_sym().to_laurent()
    }

    /// The same coefficients read as a Laurent polynomial in `x` itself.
    pub fn as_laurent(&self) -> Laurent {
        Laurent::from_coeffs(0, self.coeffs.clone())
    }

    /// Inverse of [`XPoly::as_laurent`]; fails on negative powers.
    pub fn from_laurent(f: &Laurent) -> Result<Self> {
        match f.lo() {
            None => Ok(Self::zero()),
            Some(lo) if lo < 0 => Err(Error::NonzeroRemainder),
            Some(_) => {
                let hi = f.hi().unwrap();
                Ok(Self::from_coeffs((0..=hi).map(|k| f.coeff(k)).collect()))
            }
        }
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_laurent())
    }
}

impl Add<&XPoly> for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&XPoly> for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&XPoly> for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        XPoly::from_coeffs(out)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

crate::forward_owned_ops!(XPoly);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::scalar::rat;

    #[test]
    fn basic_ring_ops() {
        let f = XPoly::from_ints(&[1, 2]);
        let g = XPoly::from_ints(&[-1, 0, 3]);
        assert_eq!(&f * &g, XPoly::from_ints(&[-1, -2, 3, 6]));
        assert_eq!(&f + &XPoly::zero(), f);
        assert_eq!(f.scale(&int(0)), XPoly::zero());
        assert_eq!(g.derivative(), XPoly::from_ints(&[0, 6]));
        assert_eq!(g.eval(&rat(1, 2)), rat(-1, 4));
    }

    #[test]
    fn div_x_requires_zero_constant() {
        assert_eq!(XPoly::from_ints(&[0, 3, 1]).div_x().unwrap(), XPoly::from_ints(&[3, 1]));
        assert!(XPoly::from_ints(&[1, 3]).div_x().is_err());
    }
}
