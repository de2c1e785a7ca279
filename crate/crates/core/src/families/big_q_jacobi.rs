//! Big q-Jacobi polynomials `P_n(x; a, b, -c; q)`.
//!
//! `c` is stored with the sign used by the defining 3phi2, whose lower
//! parameters are `aq` and `-cq`.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_algebra::scalar::div;
use crate::exact_algebra::{pow, Scalar, XPoly};
use crate::qcalculus::{q_pochhammer, x_pochhammer};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigQParams {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub q: Scalar,
}

impl BigQParams {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, q: Scalar) -> Self {
        Self { a, b, c, q }
    }

    pub fn check_admissible(&self, cap: usize) -> Result<()> {
        let (a, b, c, q) = (&self.a, &self.b, &self.c, &self.q);
        if !(q.is_positive() && *q < Scalar::one()) {
            return Err(Error::Inadmissible("q must lie in (0, 1)".into()));
        }
        if a.is_zero() || c.is_zero() || b.is_zero() {
            return Err(Error::Inadmissible("a, b, c must be nonzero".into()));
        }
        let m = 2 * cap as i64 + 4;
        for k in 0..=m {
            let qk = pow(q, k);
            let bad = [a * &qk, -(c * &qk), a * b * &qk, b * &qk, a * b / c * &qk];
            if k >= 1 && bad.iter().any(One::is_one) {
                return Err(Error::Inadmissible(format!("vanishing factor at q^{k}")));
            }
        }
        for n in 0..=cap + 1 {
            if bigq_gamma(n, self)?.is_zero() {
                return Err(Error::Inadmissible(format!("vanishing slope at n = {n}")));
            }
        }
        Ok(())
    }
}

/// `P_n` from the terminating 3phi2 with upper parameters `q^-n, abq^{n+1}, x`.
pub fn bigq_polynomial(n: usize, p: &BigQParams) -> Result<XPoly> {
    let (a, b, c, q) = (&p.a, &p.b, &p.c, &p.q);
    let top1 = pow(q, -(n as i64));
    let top2 = a * b * pow(q, n as i64 + 1);
    let mut sum = XPoly::zero();
    let mut coef = Scalar::one();
    for k in 0..=n {
        if k > 0 {
            let qj = pow(q, k as i64 - 1);
            let num = (Scalar::one() - &top1 * &qj) * (Scalar::one() - &top2 * &qj) * q;
            let den = (Scalar::one() - a * q * &qj) * (Scalar::one() + c * q * &qj) * (Scalar::one() - q * &qj);
            coef *= div(&num, &den).map_err(|_| Error::Inadmissible("zero 3phi2 denominator".into()))?;
        }
        sum = &sum + &x_pochhammer(q, k).scale(&coef);
    }
    Ok(sum)
}

/// Leading coefficient of `P_n`:
/// `(q^-n, abq^{n+1}; q)_n q^n (-1)^n q^{n(n-1)/2} / (aq, -cq, q; q)_n`.
pub fn bigq_leading(n: usize, p: &BigQParams) -> Result<Scalar> {
    let (a, b, c, q) = (&p.a, &p.b, &p.c, &p.q);
    let ni = n as i64;
    let num = q_pochhammer(&pow(q, -ni), q, n) * q_pochhammer(&(a * b * pow(q, ni + 1)), q, n);
    let den = q_pochhammer(&(a * q), q, n) * q_pochhammer(&(-(c * q)), q, n) * q_pochhammer(q, q, n);
    let sign = if n.is_multiple_of(2) { Scalar::one() } else { -Scalar::one() };
    Ok(div(&num, &den)? * pow(q, ni + ni * (ni - 1) / 2) * sign)
}

/// Slope of `L`: `gamma_n = (1 - ab q^{2n+2}) / (ac q^{n+2})`.
pub fn bigq_gamma(n: usize, p: &BigQParams) -> Result<Scalar> {
    let (a, b, c, q) = (&p.a, &p.b, &p.c, &p.q);
    let n = n as i64;
    div(&(Scalar::one() - a * b * pow(q, 2 * n + 2)), &(a * c * pow(q, n + 2)))
}
