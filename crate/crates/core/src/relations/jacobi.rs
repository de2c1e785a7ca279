//! Jacobi specific identities.

use num_traits::Zero;

use super::{flatten, Basis, Checker, Identity, IdentityId};
use crate::error::Result;
use crate::exact_algebra::{int, Scalar, XPoly};
use crate::families::{FamilySpec, JacobiParams};
use crate::operators::PolyOperator;

/// Coefficients of `P_{n+1}` and `P_{n-1}` in `L P_n`.
pub(super) fn structure_coeffs(n: usize, p: &JacobiParams) -> Result<(Scalar, Scalar)> {
    let (al, be) = (&p.alpha, &p.beta);
    let nn = int(n as i64);
    let den = int(2) * &nn + al + be + int(1);
    let up = -((&nn + int(1)) * (&nn + al + be + int(1))) / &den;
    let down = (&nn + al) * (&nn + be) / &den;
    Ok((up, down))
}

/// Coefficients of `P_{n+1}, P_n, P_{n-1}` in `(1 - x^2) P_n'`.
pub(super) fn derivative_coeffs(n: usize, p: &JacobiParams) -> (Scalar, Scalar, Scalar) {
    let (al, be) = (&p.alpha, &p.beta);
    let nn = int(n as i64);
    let s = al + be;
    let d0 = int(2) * &nn + &s;
    let d1 = &d0 + int(1);
    let d2 = &d0 + int(2);
    let up = -(int(2) * &nn * (&nn + int(1)) * (&nn + &s + int(1))) / (&d1 * &d2);
    let mid = int(2) * &nn * (&nn + &s + int(1)) * (al - be) / (&d0 * &d2);
    let down = int(2) * (&nn + al) * (&nn + be) * (&nn + &s + int(1)) / (&d0 * &d1);
    (up, mid, down)
}

fn params<'a>(c: &'a Checker) -> &'a JacobiParams {
    match &c.data.spec {
        FamilySpec::Jacobi(p) => p,
        _ => unreachable!("Jacobi identity on another family"),
    }
}

impl Checker<'_> {
    pub(super) fn derivative_structure(&self, n: usize) -> Result<Identity> {
        let f = self.data.p(n);
        let lhs = &XPoly::from_ints(&[1, 0, -1]) * &f.derivative();
        let (up, mid, down) = derivative_coeffs(n, params(self));
        let down = if n == 0 { Scalar::zero() } else { down };
        Ok(Identity::new(IdentityId::DerivativeStructure, n, Basis::X, lhs.as_laurent())
            .term("P_{n+1} coefficient", up, self.p(n + 1))
            .term("P_n coefficient", mid, self.p(n))
            .term("P_{n-1} coefficient", down, self.p_prev(n)))
    }

    /// `[X, L] = -(1 - X^2)` on polynomials of degree `<= max_deg`.
    pub(super) fn string_equation(&self, max_deg: usize) -> Result<Identity> {
        let stride = max_deg + 4;
        let xl = PolyOperator::commutator(&self.x, &self.l).matrix(max_deg)?;
        let f0 = XPoly::from_ints(&[1, 0, -1]);
        let mult = PolyOperator::new("1 - X^2", 2, move |f| Ok(&f0 * f));
        Ok(Identity::new(IdentityId::StringEquation, max_deg, Basis::Flat, flatten(&xl, stride))
            .term("sign", -Scalar::from_integer(1.into()), flatten(&mult.matrix(max_deg)?, stride)))
    }
}
