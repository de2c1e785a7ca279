//! Continuous q-ultraspherical polynomials `C_n(x; t | q)`.
//!
//! The base scale is `s = q^{1/2}`, so `q = s^2` and every coefficient below
//! is rational in `t` and `s`.

use num_traits::{One, Signed, Zero};

use super::askey_wilson::{aw_polynomial, AwParams};
use crate::error::{Error, Result};
use crate::exact_algebra::scalar::{div, sqrt_exact};
use crate::exact_algebra::{int, pow, Scalar, XPoly};
use crate::qcalculus::q_pochhammer;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CqUltraParams {
    pub t: Scalar,
    /// `q = s^2`.
    pub s: Scalar,
}

impl CqUltraParams {
    pub fn new(t: Scalar, s: Scalar) -> Self {
        Self { t, s }
    }

    pub fn q(&self) -> Scalar {
        pow(&self.s, 2)
    }

    pub fn check_admissible(&self, cap: usize) -> Result<()> {
        if !(self.s.is_positive() && self.s < Scalar::one()) {
            return Err(Error::Inadmissible("s must lie in (0, 1)".into()));
        }
        if self.t.is_zero() || self.t.abs() >= Scalar::one() {
            return Err(Error::Inadmissible("need 0 < |t| < 1".into()));
        }
        for n in 0..=cap + 1 {
            let (a, _, c) = cqu_recurrence(n, self)?;
            if a.is_zero() || (n > 0 && c.is_zero()) {
                return Err(Error::Inadmissible(format!("degenerate recurrence at n = {n}")));
            }
            if cqu_gamma(n, self).is_zero() {
                return Err(Error::Inadmissible(format!("vanishing slope at n = {n}")));
            }
        }
        Ok(())
    }

    /// Askey-Wilson parameters `(u, -u, r, -r | s)` with `u^2 = t`,
    /// `r^2 = s`, when both square roots are rational.
    pub fn aw_params(&self) -> Option<AwParams> {
        let u = sqrt_exact(&self.t)?;
        let r = sqrt_exact(&self.s)?;
        Some(AwParams::new(u.clone(), -u, r.clone(), -r, self.s.clone()))
    }
}

/// `(A_n, B_n, C_n)` in `x C_n = A_n C_{n+1} + B_n C_n + C_n C_{n-1}`,
/// read off from `(z + 1/z) C_n = ...` with `z + 1/z = 2x`.
pub fn cqu_recurrence(n: usize, p: &CqUltraParams) -> Result<(Scalar, Scalar, Scalar)> {
    let s = &p.s;
    let t = &p.t;
    let n = n as i64;
    let den = int(2) * (Scalar::one() - t * pow(s, 2 * n));
    let a = div(&(Scalar::one() - pow(s, 2 * n + 2)), &den)?;
    let c = if n == 0 {
        Scalar::zero()
    } else {
        div(&(Scalar::one() - t * t * pow(s, 2 * n - 2)), &den)?
    };
    Ok((a, Scalar::zero(), c))
}

/// Slope of the skew operator `L`: `2 (t q^{(n+1)/2} - q^{-n/2})`.
pub fn cqu_gamma(n: usize, p: &CqUltraParams) -> Scalar {
    let n = n as i64;
    int(2) * (&p.t * pow(&p.s, n + 1) - pow(&p.s, -n))
}

/// Eigenvalue of the second-order operator obtained from the Askey-Wilson
/// one with `abcd = t q^{1/2}` and base `q^{1/2}`.
pub fn cqu_lambda(n: usize, p: &CqUltraParams) -> Scalar {
    super::askey_wilson::aw_lambda(n, &(&p.t * &p.s), &p.s)
}

/// `C_0..=C_max` from the three-term recurrence.
pub fn cqultra_polynomials(max: usize, p: &CqUltraParams) -> Result<Vec<XPoly>> {
    let mut out = vec![XPoly::one()];
    for n in 0..max {
        let (a, _, c) = cqu_recurrence(n, p)?;
        let mut next = out[n].mul_x();
        if n > 0 {
            next = &next - &out[n - 1].scale(&c);
        }
        out.push(next.scale(&div(&Scalar::one(), &a)?));
    }
    Ok(out)
}

pub fn cqultra_polynomial(n: usize, p: &CqUltraParams) -> Result<XPoly> {
    Ok(cqultra_polynomials(n, p)?.pop().expect("nonempty"))
}

/// `C_n` through the Askey-Wilson specialization; needs rational `t^{1/2}`
/// and `q^{1/4}`.
pub fn cqultra_polynomial_via_aw(n: usize, p: &CqUltraParams) -> Result<XPoly> {
    let aw = p
        .aw_params()
        .ok_or_else(|| Error::Inadmissible("t or q^(1/2) is not a rational square".into()))?;
    let q = p.q();
    let num = q_pochhammer(&p.t, &p.s, n);
    let den = q_pochhammer(&(&p.s * &p.t), &q, n) * q_pochhammer(&q, &q, n);
    Ok(aw_polynomial(n, &aw)?.scale(&div(&num, &den)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::rat;

    #[test]
    fn first_polynomial_from_recurrence() {
        let p = CqUltraParams::new(rat(1, 3), rat(1, 2));
        let c1 = cqultra_polynomial(1, &p).unwrap();
        // C_1[z] = (1 - t)(z + 1/z)/(1 - q), i.e. 2(1 - t)x/(1 - q).
        let q = p.q();
        assert_eq!(c1, XPoly::monomial(int(2) * (int(1) - &p.t) / (int(1) - q), 1));
    }

    #[test]
    fn recurrence_matches_askey_wilson_specialization() {
        let p = CqUltraParams::new(rat(1, 4), rat(1, 4));
        let rec = cqultra_polynomials(8, &p).unwrap();
        for (n, c) in rec.iter().enumerate() {
            assert_eq!(*c, cqultra_polynomial_via_aw(n, &p).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn slope_is_eigenvalue_gap() {
        let p = CqUltraParams::new(rat(-2, 5), rat(2, 3));
        for n in 0..8 {
            assert_eq!(cqu_gamma(n, &p), cqu_lambda(n + 1, &p) - cqu_lambda(n, &p));
        }
    }

    #[test]
    fn admissibility() {
        assert!(CqUltraParams::new(rat(1, 3), rat(1, 2)).check_admissible(8).is_ok());
        assert!(CqUltraParams::new(int(1), rat(1, 2)).check_admissible(8).is_err());
        assert!(CqUltraParams::new(rat(1, 3), int(1)).check_admissible(8).is_err());
    }
}
