//! Continuous q-Jacobi polynomials `P_n^{(alpha, beta)}(x | q)`.
//!
//! Parameters carry a base scale `s` with `q = s^4`, and `alpha`, `beta`
//! are restricted to half-integers so that every power of `q` appearing
//! below (`q^{alpha/2 + 1/4}`, `q^{(alpha + beta + 1)/2}`, ...) is an integer
//! power of `s`. The family is built from Askey-Wilson polynomials in two
//! ways, with base `q^{1/2}` or with base `q`; both must agree.

use num_traits::{One, Signed, Zero};

use super::askey_wilson::{aw_gamma, aw_lambda, aw_polynomial, AwParams};
use crate::error::{Error, Result};
use crate::exact_algebra::scalar::div;
use crate::exact_algebra::{int, pow, rat, Scalar, XPoly};
use crate::qcalculus::q_pochhammer;

/// Which Askey-Wilson restriction produces the polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QJacobiEmbedding {
    /// Parameters `(q^{a/2+1/4}, -q^{b/2+1/4}, q^{1/4}, -q^{1/4})`, base `q^{1/2}`.
    HalfBase,
    /// Parameters `(q^{a/2+1/4}, q^{a/2+3/4}, -q^{b/2+1/4}, -q^{b/2+3/4})`, base `q`.
    FullBase,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CqJacobiParams {
    pub alpha: Scalar,
    pub beta: Scalar,
    /// `q = s^4`.
    pub s: Scalar,
    pub embedding: QJacobiEmbedding,
}

impl CqJacobiParams {
    pub fn new(alpha: Scalar, beta: Scalar, s: Scalar, embedding: QJacobiEmbedding) -> Self {
        Self { alpha, beta, s, embedding }
    }

    pub fn q(&self) -> Scalar {
        pow(&self.s, 4)
    }

    /// `q^e` for a rational exponent `e` with `4e` integral.
    pub fn q_pow(&self, e: &Scalar) -> Result<Scalar> {
        let four_e = e * int(4);
        if !four_e.is_integer() {
            return Err(Error::Inadmissible(format!("q^({e}) is not an integer power of s")));
        }
        let k: i64 = four_e
            .to_integer()
            .try_into()
            .map_err(|_| Error::Inadmissible("exponent out of range".into()))?;
        Ok(pow(&self.s, k))
    }

    /// `q^{alpha/2 + 1/4}`.
    pub fn q_alpha(&self) -> Result<Scalar> {
        self.q_pow(&(&self.alpha / int(2) + rat(1, 4)))
    }

    /// `q^{beta/2 + 1/4}`.
    pub fn q_beta(&self) -> Result<Scalar> {
        self.q_pow(&(&self.beta / int(2) + rat(1, 4)))
    }

    /// The induced Askey-Wilson parameters for the given embedding.
    pub fn aw_params(&self, embedding: QJacobiEmbedding) -> Result<AwParams> {
        let qa = self.q_alpha()?;
        let qb = self.q_beta()?;
        let s = &self.s;
        Ok(match embedding {
            QJacobiEmbedding::HalfBase => AwParams::new(qa, -qb, s.clone(), -s.clone(), pow(s, 2)),
            QJacobiEmbedding::FullBase => {
                let s2 = pow(s, 2);
                AwParams::new(qa.clone(), qa * &s2, -qb.clone(), -(qb * &s2), pow(s, 4))
            }
        })
    }

    pub fn check_admissible(&self, cap: usize) -> Result<()> {
        if !(self.s.is_positive() && self.s < Scalar::one()) {
            return Err(Error::Inadmissible("s must lie in (0, 1)".into()));
        }
        for v in [&self.alpha, &self.beta] {
            if *v <= int(-1) || !(v * int(2)).is_integer() {
                return Err(Error::Inadmissible("alpha, beta must be half-integers > -1".into()));
            }
        }
        for n in 0..=cap + 1 {
            let (a, c) = (cqj_a(n, self)?, cqj_c(n, self)?);
            if a.is_zero() || (n > 0 && c.is_zero()) {
                return Err(Error::Inadmissible(format!("degenerate recurrence at n = {n}")));
            }
            for g in [cqj_gamma(n, self)?, cqj_gamma_tilde(n, self)?] {
                if g.is_zero() {
                    return Err(Error::Inadmissible(format!("vanishing slope at n = {n}")));
                }
            }
        }
        Ok(())
    }
}

/// `P_n` through the selected Askey-Wilson restriction.
pub fn cqjacobi_polynomial(n: usize, p: &CqJacobiParams, embedding: QJacobiEmbedding) -> Result<XPoly> {
    let aw = p.aw_params(embedding)?;
    let half = pow(&p.s, 2);
    let q = p.q();
    let shift = -p.q_pow(&((&p.alpha + &p.beta + int(1)) / int(2)))?;
    let len = match embedding {
        QJacobiEmbedding::HalfBase => n,
        QJacobiEmbedding::FullBase => 2 * n,
    };
    let den = q_pochhammer(&shift, &half, len) * q_pochhammer(&q, &q, n);
    let front = div(&pow(&p.q_alpha()?, n as i64), &den)?;
    Ok(aw_polynomial(n, &aw)?.scale(&front))
}

/// Closed form of `A_n`.
pub fn cqj_a(n: usize, p: &CqJacobiParams) -> Result<Scalar> {
    let (al, be) = (&p.alpha, &p.beta);
    let nn = int(n as i64);
    let one = Scalar::one();
    let num = (&one - p.q_pow(&(&nn + int(1)))?) * (&one - p.q_pow(&(&nn + al + be + int(1)))?);
    let den = int(2)
        * p.q_alpha()?
        * (&one - p.q_pow(&(&nn + (al + be + int(1)) / int(2)))?)
        * (&one - p.q_pow(&(&nn + (al + be + int(2)) / int(2)))?);
    div(&num, &den)
}

/// Closed form of `C_n` (zero at `n = 0`).
pub fn cqj_c(n: usize, p: &CqJacobiParams) -> Result<Scalar> {
    if n == 0 {
        return Ok(Scalar::zero());
    }
    let (al, be) = (&p.alpha, &p.beta);
    let nn = int(n as i64);
    let one = Scalar::one();
    let num = p.q_alpha()? * (&one - p.q_pow(&(&nn + al))?) * (&one - p.q_pow(&(&nn + be))?);
    let den = int(2)
        * (&one - p.q_pow(&(&nn + (al + be) / int(2)))?)
        * (&one - p.q_pow(&(&nn + (al + be + int(1)) / int(2)))?);
    div(&num, &den)
}

/// `gamma_n = 2 (q^{(n + alpha + beta + 2)/2} - q^{-n/2})`, slope of `L`.
pub fn cqj_gamma(n: usize, p: &CqJacobiParams) -> Result<Scalar> {
    let nn = int(n as i64);
    Ok(int(2) * (p.q_pow(&((&nn + &p.alpha + &p.beta + int(2)) / int(2)))? - p.q_pow(&(-nn / int(2)))?))
}

/// `gamma~_n = 2 (q^{n + alpha + beta + 2} - q^{-n})`, slope of `L~`.
pub fn cqj_gamma_tilde(n: usize, p: &CqJacobiParams) -> Result<Scalar> {
    let nn = int(n as i64);
    Ok(int(2) * (p.q_pow(&(&nn + &p.alpha + &p.beta + int(2)))? - p.q_pow(&(-nn))?))
}

/// Eigenvalue of the `D` obtained from the given embedding.
pub fn cqj_lambda(n: usize, p: &CqJacobiParams, embedding: QJacobiEmbedding) -> Result<Scalar> {
    let aw = p.aw_params(embedding)?;
    Ok(aw_lambda(n, &aw.abcd(), &aw.q))
}

/// Slope through the Askey-Wilson formula; must equal [`cqj_gamma`] or
/// [`cqj_gamma_tilde`].
pub fn cqj_gamma_via_aw(n: usize, p: &CqJacobiParams, embedding: QJacobiEmbedding) -> Result<Scalar> {
    let aw = p.aw_params(embedding)?;
    Ok(aw_gamma(n, &aw.abcd(), &aw.q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> CqJacobiParams {
        CqJacobiParams::new(int(1), int(2), rat(1, 2), QJacobiEmbedding::HalfBase)
    }

    #[test]
    fn embeddings_agree() {
        let p = sample();
        for n in 0..=8 {
            let a = cqjacobi_polynomial(n, &p, QJacobiEmbedding::HalfBase).unwrap();
            let b = cqjacobi_polynomial(n, &p, QJacobiEmbedding::FullBase).unwrap();
            assert_eq!(a, b, "n = {n}");
        }
        assert_eq!(cqjacobi_polynomial(0, &p, QJacobiEmbedding::HalfBase).unwrap(), XPoly::one());
    }

    #[test]
    fn slopes_agree_with_askey_wilson() {
        let p = CqJacobiParams::new(rat(1, 2), int(0), rat(2, 3), QJacobiEmbedding::HalfBase);
        for n in 0..8 {
            assert_eq!(cqj_gamma(n, &p).unwrap(), cqj_gamma_via_aw(n, &p, QJacobiEmbedding::HalfBase).unwrap());
            assert_eq!(
                cqj_gamma_tilde(n, &p).unwrap(),
                cqj_gamma_via_aw(n, &p, QJacobiEmbedding::FullBase).unwrap()
            );
        }
    }

    #[test]
    fn recurrence_product_is_positive_for_legendre_type() {
        let p = CqJacobiParams::new(int(0), int(0), rat(1, 2), QJacobiEmbedding::HalfBase);
        assert!((cqj_a(0, &p).unwrap() * cqj_c(1, &p).unwrap()).is_positive());
    }

    #[test]
    fn rejects_quarter_integer_parameters() {
        let p = CqJacobiParams::new(rat(1, 4), int(0), rat(1, 2), QJacobiEmbedding::HalfBase);
        assert!(p.check_admissible(4).is_err());
        assert!(sample().check_admissible(4).is_ok());
    }
}
