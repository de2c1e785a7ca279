//! Askey-Wilson specific identities.

use num_traits::{One, Zero};

use super::{flatten, Basis, Checker, Identity, IdentityId};
use crate::error::{Error, Result};
use crate::exact_algebra::{int, pow, rat, Laurent, Scalar, XPoly};
use crate::families::{AwParams, FamilySpec};
use crate::operators::aw_type_l;

fn one() -> Scalar {
    Scalar::one()
}

/// `prod (1 - xy q^{n-1})` over the six parameter pairs.
fn pair_factor(n: usize, p: &AwParams) -> Scalar {
    let qn1 = pow(&p.q, n as i64 - 1);
    p.pair_products().iter().map(|xy| one() - xy * &qn1).product()
}

/// Coefficients of `p_{n+1}` and `p_{n-1}` in `L p_n`.
pub(crate) fn structure_coeffs(n: usize, p: &AwParams) -> Result<(Scalar, Scalar)> {
    let (q, abcd) = (&p.q, p.abcd());
    let ni = n as i64;
    let den = one() - &abcd * pow(q, 2 * ni - 1);
    let up = -(one() - &abcd * pow(q, ni - 1)) / (pow(q, ni) * &den);
    let down = pair_factor(n, p) * (one() - pow(q, ni)) / (pow(q, ni - 1) * &den);
    Ok((up, down))
}

/// `(abcd q^n - q^-n, c)` with
/// `L p_n - (abcd q^n - q^-n)(z + 1/z - 2 B_n) p_n = c p_{n-1}`.
pub(super) fn lowering_coeffs(n: usize, p: &AwParams) -> Result<(Scalar, Scalar)> {
    let (q, abcd) = (&p.q, p.abcd());
    let ni = n as i64;
    let left = &abcd * pow(q, ni) - pow(q, -ni);
    let den = pow(q, ni) * (one() - &abcd * pow(q, 2 * ni - 2));
    if den.is_zero() {
        return Err(Error::DivisionByZero("lowering coefficient".into()));
    }
    let right = pair_factor(n, p) * (one() + q) * (one() - pow(q, ni)) / den;
    Ok((left, right))
}

/// `(abcd q^{n-1} - q^{1-n}, c)` with
/// `L p_n + (abcd q^{n-1} - q^{1-n})(z + 1/z - 2 B_n) p_n = c p_{n+1}`.
pub(super) fn raising_coeffs(n: usize, p: &AwParams) -> Result<(Scalar, Scalar)> {
    let (q, abcd) = (&p.q, p.abcd());
    let ni = n as i64;
    let left = &abcd * pow(q, ni - 1) - pow(q, 1 - ni);
    let den = pow(q, ni) * (one() - &abcd * pow(q, 2 * ni));
    if den.is_zero() {
        return Err(Error::DivisionByZero("raising coefficient".into()));
    }
    let right = -(one() + q) * (one() - &abcd * pow(q, ni - 1)) / den;
    Ok((left, right))
}

fn params<'a>(c: &'a Checker) -> &'a AwParams {
    match &c.data.spec {
        FamilySpec::AskeyWilson(p) => p,
        _ => unreachable!("Askey-Wilson identity on another family"),
    }
}

/// `(1/2)(1 - 1/q)(z - q/z)`.
fn augment_factor(q: &Scalar) -> Laurent {
    let k = rat(1, 2) * (one() - q.recip());
    Laurent::from_coeffs(-1, vec![-(&k * q), Scalar::zero(), k])
}

impl Checker<'_> {
    /// `(z + 1/z - 2 B_n) p_n` with the closed `B_n`.
    fn centered_closed(&self, n: usize, p: &AwParams) -> Result<Laurent> {
        let b = crate::families::askey_wilson::aw_b(n, p)?;
        let f = self.data.p(n);
        Ok((&f.mul_x() - &f.scale(&b)).scale(&int(2)).to_z_laurent())
    }

    /// Left side `L p_n`, plus `(1/2)(1 - 1/q)(z - q/z) D p_n` when augmented;
    /// the matching `-lambda_n` term is returned for the caller to append.
    fn augmented_lhs(&self, n: usize, augmented: bool) -> Result<(Laurent, Option<(Scalar, Laurent)>)> {
        let lp = self.apply(&self.l, n)?;
        if !augmented {
            return Ok((lp, None));
        }
        let w = augment_factor(&params(self).q);
        let dp = self.apply(&self.d, n)?;
        Ok((&lp + &(&w * &dp), Some((self.lambda(n)?, &w * &self.p(n)))))
    }

    pub(super) fn aw_lowering_explicit(&self, n: usize, augmented: bool) -> Result<Identity> {
        let p = params(self);
        let (left, right) = lowering_coeffs(n, p)?;
        let id = if augmented { IdentityId::LoweringAugmented } else { IdentityId::LoweringExplicit };
        let (lhs, extra) = self.augmented_lhs(n, augmented)?;
        let mut out = Identity::new(id, n, Basis::Z, lhs)
            .term("abcd q^n - q^-n", left, self.centered_closed(n, p)?)
            .term("p_{n-1} coefficient", right, self.p_prev(n));
        if let Some((l, w)) = extra {
            out = out.term("lambda_n", l, w);
        }
        Ok(out)
    }

    pub(super) fn aw_raising_explicit(&self, n: usize, augmented: bool) -> Result<Identity> {
        let p = params(self);
        let (left, right) = raising_coeffs(n, p)?;
        let id = if augmented { IdentityId::RaisingAugmented } else { IdentityId::RaisingExplicit };
        let (lhs, extra) = self.augmented_lhs(n, augmented)?;
        let mut out = Identity::new(id, n, Basis::Z, lhs)
            .term("-(abcd q^{n-1} - q^{1-n})", -left, self.centered_closed(n, p)?)
            .term("p_{n+1} coefficient", right, self.p(n + 1));
        if let Some((l, w)) = extra {
            out = out.term("lambda_n", l, w);
        }
        Ok(out)
    }

    /// The two halves of the q-bispectral form, stacked: `D X p_n` against
    /// `A lambda_{n+1} p_{n+1} + B lambda_n p_n + C lambda_{n-1} p_{n-1}`, and
    /// `X D p_n` against `lambda_n (A p_{n+1} + B p_n + C p_{n-1})`.
    /// Reported, not asserted.
    pub(super) fn q_bispectral(&self, n: usize) -> Result<Identity> {
        let d = self.data;
        let stride = n + 3;
        let zero = XPoly::zero();
        let lam = |k: usize| self.lambda(k);
        let prev = if n == 0 { zero.clone() } else { d.p(n - 1).clone() };
        let lprev = if n == 0 { Scalar::zero() } else { lam(n - 1)? };
        let dx = self.d.apply(&d.p(n).mul_x())?;
        let xd = self.d.apply(d.p(n))?.mul_x();
        let first = |f: &XPoly| flatten(&[f.clone(), zero.clone()], stride);
        let second = |f: &XPoly| flatten(&[zero.clone(), f.clone()], stride);
        let ln = lam(n)?;
        Ok(Identity::new(IdentityId::QBispectral, n, Basis::Flat, flatten(&[dx, xd], stride))
            .term("A_n lambda_{n+1}", d.a(n) * lam(n + 1)?, first(d.p(n + 1)))
            .term("B_n lambda_n", d.b(n) * &ln, first(d.p(n)))
            .term("C_n lambda_{n-1}", d.c(n) * lprev, first(&prev))
            .term("lambda_n A_n", &ln * d.a(n), second(d.p(n + 1)))
            .term("lambda_n B_n", &ln * d.b(n), second(d.p(n)))
            .term("lambda_n C_n", &ln * d.c(n), second(&prev)))
    }

    /// `L_{a,b,ce,d/e} L_{qa,qb,c/q,d/q} = L_{a,b,c,d} L_{qa,qb,ce/q,d/(eq)}`
    /// on polynomials of degree `<= max_deg`, for a few values of `e`.
    pub(super) fn quasi_commutation(&self, max_deg: usize) -> Result<Vec<Identity>> {
        let p = params(self);
        let q = &p.q;
        let l = |a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar| {
            aw_type_l("L", &AwParams::new(a.clone(), b.clone(), c.clone(), d.clone(), q.clone()).quartic(), q.clone())
        };
        let stride = max_deg + 4;
        let mut out = Vec::new();
        for e in [int(2), int(3), rat(-1, 2)] {
            let (a, b, c, d) = (&p.a, &p.b, &p.c, &p.d);
            let left = crate::operators::PolyOperator::compose(
                &l(a, b, &(c * &e), &(d / &e)),
                &l(&(a * q), &(b * q), &(c / q), &(d / q)),
            );
            let right = crate::operators::PolyOperator::compose(
                &l(a, b, c, d),
                &l(&(a * q), &(b * q), &(c * &e / q), &(d / (&e * q))),
            );
            let mut id = Identity::new(IdentityId::QuasiCommutation, max_deg, Basis::Flat, flatten(&left.matrix(max_deg)?, stride))
                .term("1", Scalar::one(), flatten(&right.matrix(max_deg)?, stride));
            id.extra.push(("e".into(), e));
            out.push(id);
        }
        Ok(out)
    }
}
