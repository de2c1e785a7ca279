use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{pow, Scalar};
use super::sym::SymLaurent;
use crate::error::{Error, Result};

/// A finite Laurent polynomial `sum_k c_k z^k` with exact coefficients.
///
/// Stored as the exponent of the lowest term plus a dense coefficient run.
/// The first and last stored coefficients are nonzero; the zero polynomial
/// has no coefficients at all, so derived equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct Laurent {
    lo: i64,
    coeffs: Vec<Scalar>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_coeffs(0, vec![c])
    }

    /// `c z^k`.
    pub fn monomial(c: Scalar, k: i64) -> Self {
        Self::from_coeffs(k, vec![c])
    }

    /// The variable `z`.
    pub fn z() -> Self {
        Self::monomial(Scalar::one(), 1)
    }

    /// Coefficients for exponents `lo, lo+1, ...`, normalized.
    pub fn from_coeffs(lo: i64, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        Self {
            lo: lo + lead as i64,
            coeffs,
        }
    }

    /// Product `prod_i (1 - r_i z)`.
    pub fn linear_product<'a>(roots: impl IntoIterator<Item = &'a Scalar>) -> Self {
        roots.into_iter().fold(Self::one(), |acc, r| {
            &acc * &Self::from_coeffs(0, vec![Scalar::one(), -r.clone()])
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn lo(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.lo)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn hi(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.lo + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, k: i64) -> Scalar {
        let i = k - self.lo;
        if i < 0 || i >= self.coeffs.len() as i64 {
            Scalar::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Stored coefficients, from exponent `lo()` upward.
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Nonzero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.lo + i as i64, c))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            lo: self.lo + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// `f(z) -> f(r z)`: the coefficient of `z^k` is multiplied by `r^k`.
    pub fn dilate(&self, r: &Scalar) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::ZeroDilation);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let mut p = pow(r, self.lo);
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &p);
            p *= r;
        }
        Ok(Self::from_coeffs(self.lo, out))
    }

    /// `f(z) -> f(1/z)`.
    pub fn reflect(&self) -> Self {
        match self.hi() {
            None => Self::zero(),
            Some(hi) => Self::from_coeffs(-hi, self.coeffs.iter().rev().cloned().collect()),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.reflect()
    }

    /// The unique `h` with `self = g * h`, or `NonzeroRemainder`.
    pub fn divide_exact(&self, g: &Self) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::DivisionByZero("Laurent division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Strip the monomial parts and divide as ordinary polynomials from the top.
        let num = &self.coeffs;
        let den = &g.coeffs;
        if num.len() < den.len() {
            return Err(Error::NonzeroRemainder);
        }
        let lead_inv = den.last().expect("nonzero divisor").recip();
        let mut rem = num.clone();
        let qlen = num.len() - den.len() + 1;
        let mut quot = vec![Scalar::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = &rem[i + den.len() - 1] * &lead_inv;
            if !c.is_zero() {
                for (j, d) in den.iter().enumerate() {
                    rem[i + j] -= &c * d;
                }
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonzeroRemainder);
        }
        Ok(Self::from_coeffs(self.lo - g.lo, quot))
    }

    /// Reinterpret as a symmetric Laurent polynomial, if it is one.
    pub fn to_sym(&self) -> Result<SymLaurent> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        match self.hi() {
            None => Ok(SymLaurent::zero()),
            Some(hi) => Ok(SymLaurent::from_coeffs(
                (0..=hi).map(|k| self.coeff(k)).collect(),
            )),
        }
    }

    /// Evaluate at a nonzero rational point.
    pub fn eval(&self, z: &Scalar) -> Scalar {
        self.terms().map(|(k, c)| c * pow(z, k)).sum()
    }

    /// Maximum absolute coefficient (zero for the zero polynomial).
    pub fn max_abs_coeff(&self) -> Scalar {
        self.coeffs
            .iter()
            .map(num_traits::Signed::abs)
            .max()
            .unwrap_or_else(Scalar::zero)
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{k}")?,
            }
        }
        Ok(())
    }
}

fn add_impl(a: &Laurent, b: &Laurent, sign: bool) -> Laurent {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if sign { b.clone() } else { -b };
    }
    let lo = a.lo.min(b.lo);
    let hi = a.hi().unwrap().max(b.hi().unwrap());
    let mut out = Vec::with_capacity((hi - lo + 1) as usize);
    for k in lo..=hi {
        let x = a.coeff(k);
        let y = b.coeff(k);
        out.push(if sign { x + y } else { x - y });
    }
    Laurent::from_coeffs(lo, out)
}

impl Add<&Laurent> for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        add_impl(self, rhs, true)
    }
}

impl Sub<&Laurent> for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        add_impl(self, rhs, false)
    }
}

impl Mul<&Laurent> for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
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
        Laurent::from_coeffs(self.lo + rhs.lo, out)
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

crate::forward_owned_ops!(Laurent);
