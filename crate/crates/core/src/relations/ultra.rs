//! Identities of the continuous q-ultraspherical family. Everything is in
//! `z` with step `s = q^{1/2}`.

use num_traits::{One, Zero};

use super::{Basis, Checker, Identity, IdentityId};
use crate::error::Result;
use crate::exact_algebra::{int, pow, Laurent, Scalar};
use crate::families::{CqUltraParams, FamilySpec};
use crate::operators::{cqultra_l_kernel, skew_difference, skew_difference_laurent};

fn one() -> Scalar {
    Scalar::one()
}

/// `z^-2 - t`.
fn kernel_lowering(t: &Scalar) -> Laurent {
    Laurent::from_coeffs(-2, vec![one(), Scalar::zero(), -t.clone()])
}

/// `1 - t z^2`.
fn kernel_raising(t: &Scalar) -> Laurent {
    Laurent::from_coeffs(0, vec![one(), Scalar::zero(), -t.clone()])
}

/// `(1 - t z^2)(1 - z^-2)`.
fn kernel_difference(t: &Scalar) -> Laurent {
    &kernel_raising(t) * &Laurent::from_coeffs(-2, vec![-one(), Scalar::zero(), one()])
}

/// `-(1 - t z^2)(1 + z^-2)`.
fn kernel_connecting(t: &Scalar) -> Laurent {
    -&(&kernel_raising(t) * &Laurent::from_coeffs(-2, vec![one(), Scalar::zero(), one()]))
}

fn z_plus_inverse() -> Laurent {
    Laurent::from_coeffs(-1, vec![one(), Scalar::zero(), one()])
}

/// Coefficients of `C_{n+1}` and `C_{n-1}` in `L C_n`.
pub(super) fn structure_coeffs(n: usize, p: &CqUltraParams) -> Result<(Scalar, Scalar)> {
    let (s, t) = (&p.s, &p.t);
    let ni = n as i64;
    let den = one() - t * pow(s, 2 * ni);
    let up = -(one() - t * pow(s, 2 * ni + 1)) * (one() - pow(s, 2 * ni + 2)) / (pow(s, ni) * &den);
    let down = (one() - t * pow(s, 2 * ni - 1)) * (one() - t * t * pow(s, 2 * ni - 2)) / (pow(s, ni - 1) * &den);
    Ok((up, down))
}

fn params<'a>(c: &'a Checker) -> &'a CqUltraParams {
    match &c.data.spec {
        FamilySpec::CqUltra(p) => p,
        _ => unreachable!("q-ultraspherical identity on another family"),
    }
}

impl Checker<'_> {
    fn ultra_t(&self, g: &Laurent, n: usize) -> Result<Laurent> {
        skew_difference_laurent(g, &params(self).s, &self.p(n))
    }

    /// `z^-1 (1 - t z^2) C_n[sz] + z (1 - t z^-2) C_n[z/s]`, written out
    /// without the division by `z - 1/z`.
    fn ultra_difference_lhs(&self, n: usize) -> Result<Laurent> {
        let p = params(self);
        let c = self.p(n);
        let up = &kernel_raising(&p.t).shift(-1) * &c.dilate(&p.s)?;
        let down = &kernel_raising(&p.t).reflect().shift(1) * &c.dilate(&p.s.recip())?;
        Ok(&up + &down)
    }

    /// `(z + 1/z) C_n`.
    fn ultra_xc(&self, n: usize) -> Laurent {
        &z_plus_inverse() * &self.p(n)
    }

    pub(super) fn ultra_lowering(&self, n: usize) -> Result<Identity> {
        let p = params(self);
        let sn = pow(&p.s, -(n as i64));
        let right = &sn - &p.t * &p.t * pow(&p.s, n as i64 - 2);
        Ok(Identity::new(IdentityId::UltraLowering, n, Basis::Z, self.ultra_t(&kernel_lowering(&p.t), n)?)
            .term("-q^{-n/2}", -sn, self.ultra_xc(n))
            .term("C_{n-1} coefficient", right, self.p_prev(n)))
    }

    pub(super) fn ultra_raising(&self, n: usize) -> Result<Identity> {
        let p = params(self);
        let sn = pow(&p.s, -(n as i64));
        let right = &sn - pow(&p.s, n as i64 + 2);
        Ok(Identity::new(IdentityId::UltraRaising, n, Basis::Z, self.ultra_t(&kernel_raising(&p.t), n)?)
            .term("-q^{-n/2}", -sn, self.ultra_xc(n))
            .term("C_{n+1} coefficient", right, self.p(n + 1)))
    }

    pub(super) fn ultra_difference(&self, n: usize) -> Result<Identity> {
        let p = params(self);
        let ni = n as i64;
        let sn = pow(&p.s, -ni);
        let up = &sn * (one() - pow(&p.s, 2 * ni + 2));
        let down = -(&sn * (one() - &p.t * &p.t * pow(&p.s, 2 * ni - 2)));
        Ok(Identity::new(IdentityId::UltraDifference, n, Basis::Z, self.ultra_difference_lhs(n)?)
            .term("C_{n+1} coefficient", up, self.p(n + 1))
            .term("C_{n-1} coefficient", down, self.p_prev(n)))
    }

    /// The raising form minus the lowering form is the difference form.
    pub(super) fn ultra_subtraction(&self, n: usize) -> Result<Identity> {
        let p = params(self);
        let lhs = &self.ultra_t(&kernel_raising(&p.t), n)? - &self.ultra_t(&kernel_lowering(&p.t), n)?;
        Ok(Identity::new(IdentityId::UltraSubtraction, n, Basis::Z, lhs).term(
            "1",
            one(),
            self.ultra_difference_lhs(n)?,
        ))
    }

    pub(super) fn ultra_connecting(&self, n: usize) -> Result<Identity> {
        let p = params(self);
        let ni = n as i64;
        let (s, t) = (&p.s, &p.t);
        let front = (pow(s, -ni) + t * pow(s, ni)) / (one() - t * pow(s, 2 * ni));
        let up = &front * (one() - pow(s, 2 * ni + 2));
        let down = &front * (one() - t * t * pow(s, 2 * ni - 2));
        Ok(Identity::new(IdentityId::UltraConnecting, n, Basis::Z, self.ultra_t(&kernel_connecting(t), n)?)
            .term("C_{n+1} coefficient", up, self.p(n + 1))
            .term("C_{n-1} coefficient", down, self.p_prev(n)))
    }

    pub(super) fn ultra_recurrence(&self, n: usize) -> Result<Identity> {
        let p = params(self);
        let ni = n as i64;
        let (s, t) = (&p.s, &p.t);
        let den = one() - t * pow(s, 2 * ni);
        let up = (one() - pow(s, 2 * ni + 2)) / &den;
        let down = (one() - t * t * pow(s, 2 * ni - 2)) / &den;
        Ok(Identity::new(IdentityId::UltraRecurrence, n, Basis::Z, self.ultra_xc(n))
            .term("C_{n+1} coefficient", up, self.p(n + 1))
            .term("C_{n-1} coefficient", down, self.p_prev(n)))
    }

    /// The second-order q-difference equation multiplied through by
    /// `(1 - z^2)(1 - z^-2)`.
    pub(super) fn ultra_qdifference(&self, n: usize) -> Result<Identity> {
        let p = params(self);
        let (s, t) = (&p.s, &p.t);
        let c = self.p(n);
        let w = Laurent::from_coeffs(-2, vec![-one(), Scalar::zero(), int(2), Scalar::zero(), -one()]);
        let k = kernel_difference(t);
        let lhs = &(&k * &c.dilate(s)?) + &(&k.reflect() * &c.dilate(&s.recip())?);
        let ni = n as i64;
        Ok(Identity::new(IdentityId::UltraQDifference, n, Basis::Z, lhs).term(
            "q^{-n/2} + t q^{n/2}",
            pow(s, -ni) + t * pow(s, ni),
            &w * &c,
        ))
    }

    /// The structure form written as a combination of the connecting and
    /// difference forms. `stated` uses the weights `(q - 1)/2, (q + 1)/2`;
    /// otherwise `(q^{1/2} - 1)/2, -(q^{1/2} + 1)/2`, obtained by matching
    /// the `f[q^{1/2} z]` parts of the three kernels.
    pub(super) fn ultra_combination(&self, n: usize, stated: bool) -> Result<Identity> {
        let p = params(self);
        let (s, t) = (&p.s, &p.t);
        let half = Scalar::new(1.into(), 2.into());
        let (id, wc, wd) = if stated {
            let q = s * s;
            (IdentityId::UltraCombinationStated, &half * (&q - one()), &half * (&q + one()))
        } else {
            (IdentityId::UltraCombination, &half * (s - one()), -(&half * (s + one())))
        };
        Ok(Identity::new(id, n, Basis::Z, self.ultra_t(&cqultra_l_kernel(p), n)?)
            .term("connecting weight", wc, self.ultra_t(&kernel_connecting(t), n)?)
            .term("difference weight", wd, self.ultra_t(&kernel_difference(t), n)?))
    }

    /// The difference-form operator is not skew-symmetric; expected nonzero.
    pub(super) fn ultra_nonskew(&self, max_deg: usize) -> Result<Identity> {
        let p = params(self);
        let op = skew_difference("T", kernel_difference(&p.t), p.s.clone());
        self.pairing(IdentityId::NonSkewDetected, &op, max_deg, true)
    }
}
