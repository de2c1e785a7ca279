//! Jacobi polynomials `P_n^{(alpha, beta)}(x)`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_algebra::scalar::div;
use crate::exact_algebra::{int, rat, Scalar, XPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiParams {
    pub alpha: Scalar,
    pub beta: Scalar,
}

impl JacobiParams {
    pub fn new(alpha: Scalar, beta: Scalar) -> Self {
        Self { alpha, beta }
    }

    pub fn check_admissible(&self, cap: usize) -> Result<()> {
        if self.alpha <= int(-1) || self.beta <= int(-1) {
            return Err(Error::Inadmissible("alpha and beta must exceed -1".into()));
        }
        for n in 0..=cap + 1 {
            let c = jacobi_coefficients(n, self)?;
            if c.a.is_zero() || (n > 0 && c.c.is_zero()) {
                return Err(Error::Inadmissible(format!("degenerate recurrence at n = {n}")));
            }
        }
        Ok(())
    }
}

/// Recurrence data, slope of `L` and eigenvalue of `D` at degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiCoefficients {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub gamma: Scalar,
    pub lambda: Scalar,
}

/// Closed forms for `A_n, B_n, C_n`, `gamma_n = -(2n + alpha + beta + 2)/2`
/// and `lambda_n = -n (n + alpha + beta + 1) / 2`.
///
/// At `n = 0` the common factor `alpha + beta (+1)` is cancelled first, so
/// Legendre-type parameters (`alpha + beta` in `{0, -1}`) stay defined.
pub fn jacobi_coefficients(n: usize, p: &JacobiParams) -> Result<JacobiCoefficients> {
    let (al, be) = (&p.alpha, &p.beta);
    let nn = int(n as i64);
    let s = al + be;
    let (a, b, c) = if n == 0 {
        let d = &s + int(2);
        (div(&int(2), &d)?, div(&(be - al), &d)?, Scalar::zero())
    } else {
        let two_n = int(2 * n as i64);
        let d0 = &two_n + &s;
        let d1 = &d0 + int(1);
        let d2 = &d0 + int(2);
        let a = div(&(int(2) * (&nn + int(1)) * (&nn + &s + int(1))), &(&d1 * &d2))?;
        let b = div(&(be * be - al * al), &(&d0 * &d2))?;
        let c = div(&(int(2) * (&nn + al) * (&nn + be)), &(&d0 * &d1))?;
        (a, b, c)
    };
    Ok(JacobiCoefficients {
        a,
        b,
        c,
        gamma: -rat(1, 2) * (int(2) * &nn + &s + int(2)),
        lambda: -rat(1, 2) * &nn * (&nn + &s + int(1)),
    })
}

/// `P_0..=P_max` from the three-term recurrence seeded with `P_0 = 1`.
pub fn jacobi_polynomials(max: usize, p: &JacobiParams) -> Result<Vec<XPoly>> {
    let mut out = vec![XPoly::one()];
    for n in 0..max {
        let c = jacobi_coefficients(n, p)?;
        let mut next = &out[n].mul_x() - &out[n].scale(&c.b);
        if n > 0 {
            next = &next - &out[n - 1].scale(&c.c);
        }
        out.push(next.scale(&div(&Scalar::one(), &c.a)?));
    }
    Ok(out)
}

pub fn jacobi_polynomial(n: usize, p: &JacobiParams) -> Result<XPoly> {
    Ok(jacobi_polynomials(n, p)?.pop().expect("nonempty"))
}

/// Generalized binomial `C(top, m)` for rational `top`.
fn binom(top: &Scalar, m: usize) -> Scalar {
    (1..=m).fold(Scalar::one(), |acc, j| acc * (top - int(m as i64) + int(j as i64)) / int(j as i64))
}

/// `P_n` as the finite sum
/// `sum_k C(n+alpha, n-k) C(n+beta, k) ((x-1)/2)^k ((x+1)/2)^(n-k)`.
pub fn jacobi_by_sum(n: usize, p: &JacobiParams) -> XPoly {
    let xm = XPoly::from_coeffs(vec![rat(-1, 2), rat(1, 2)]);
    let xp = XPoly::from_coeffs(vec![rat(1, 2), rat(1, 2)]);
    let pw = |f: &XPoly, e: usize| (0..e).fold(XPoly::one(), |acc, _| &acc * f);
    let nn = int(n as i64);
    (0..=n).fold(XPoly::zero(), |acc, k| {
        let c = binom(&(&nn + &p.alpha), n - k) * binom(&(&nn + &p.beta), k);
        &acc + &(&pw(&xm, k) * &pw(&xp, n - k)).scale(&c)
    })
}
