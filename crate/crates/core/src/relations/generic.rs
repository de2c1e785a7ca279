//! Identities shared by every family.

use num_traits::{One, Zero};

use super::{flatten, scalars, Basis, Checker, Identity, IdentityId};
use crate::error::Result;
use crate::exact_algebra::{Laurent, Scalar};
use crate::families::FamilySpec;
use crate::inner_product::pairing_matrices;
use crate::operators::{d_from_l, family_l_via_aw, PolyOperator};

/// `e_k`, the `k`-th unit vector of length `len`.
fn unit(k: usize, len: usize) -> Laurent {
    let mut v = vec![Scalar::zero(); len];
    v[k] = Scalar::one();
    scalars(&v)
}

impl Checker<'_> {
    /// `(x - B_n) p_n` in the family's Laurent form.
    pub(super) fn centered(&self, n: usize) -> Laurent {
        let p = self.data.p(n);
        self.lift(&(&p.mul_x() - &p.scale(self.data.b(n))))
    }

    pub(super) fn apply(&self, op: &PolyOperator, n: usize) -> Result<Laurent> {
        Ok(self.lift(&op.apply(self.data.p(n))?))
    }

    pub(super) fn dual_path(&self, n: usize) -> Result<Option<Identity>> {
        let Some(alt) = self.data.spec.alternate_polynomials(n)? else {
            return Ok(None);
        };
        Ok(Some(
            Identity::new(IdentityId::DualPath, n, Basis::X, self.data.p(n).as_laurent())
                .term("second construction", Scalar::one(), alt[n].as_laurent()),
        ))
    }

    /// Closed-form `A_n, B_n, C_n` (and `h_n` where known) against the values
    /// recovered by expansion.
    pub(super) fn closed_coefficients(&self, n: usize) -> Result<Identity> {
        let closed = self.data.spec.closed_recurrence(n)?;
        let mut measured = vec![self.data.a(n).clone(), self.data.b(n).clone(), self.data.c(n).clone()];
        let mut named = vec![("A_n", closed.a), ("B_n", closed.b), ("C_n", closed.c)];
        if let FamilySpec::AskeyWilson(p) = &self.data.spec {
            measured.push(self.data.h(n).clone());
            named.push(("h_n", Some(crate::families::askey_wilson::aw_norm_ratio(n, p)?)));
        }
        let len = measured.len();
        let mut id = Identity::new(IdentityId::ClosedCoefficients, n, Basis::Flat, scalars(&measured));
        for (k, (label, value)) in named.into_iter().enumerate() {
            match value {
                Some(v) => id = id.term(label, v, unit(k, len)),
                // no closed form: compare the expansion with itself
                None => id = id.term(format!("{label} (expansion)"), measured[k].clone(), unit(k, len)),
            }
        }
        Ok(id)
    }

    /// Generic structure coefficients `gamma_n A_n` and `-gamma_{n-1} C_n`.
    pub(super) fn generic_structure_coeffs(&self, n: usize) -> Result<(Scalar, Scalar)> {
        Ok((self.gamma(n)? * self.data.a(n), -(self.gamma_prev(n)? * self.data.c(n))))
    }

    pub(super) fn structure(&self, n: usize) -> Result<Identity> {
        let (up, down) = self.generic_structure_coeffs(n)?;
        Ok(Identity::new(IdentityId::Structure, n, self.basis(), self.apply(&self.l, n)?)
            .term("gamma_n A_n", up, self.p(n + 1))
            .term("-gamma_{n-1} C_n", down, self.p_prev(n)))
    }

    pub(super) fn structure_explicit(&self, n: usize) -> Result<Identity> {
        let (up, down) = self.explicit_structure_coeffs(n)?;
        Ok(Identity::new(IdentityId::StructureExplicit, n, self.basis(), self.apply(&self.l, n)?)
            .term("p_{n+1} coefficient", up, self.p(n + 1))
            .term("p_{n-1} coefficient", down, self.p_prev(n)))
    }

    /// Closed-form structure coefficients of each family.
    pub(super) fn explicit_structure_coeffs(&self, n: usize) -> Result<(Scalar, Scalar)> {
        match &self.data.spec {
            FamilySpec::AskeyWilson(p) => super::askey_wilson::structure_coeffs(n, p),
            FamilySpec::Jacobi(p) => super::jacobi::structure_coeffs(n, p),
            FamilySpec::CqJacobi(p) => {
                use crate::families::cq_jacobi::{cqj_a, cqj_c};
                let g = |k: usize| self.data.spec.gamma(k);
                let down = if n == 0 { Scalar::zero() } else { -(g(n - 1)? * cqj_c(n, p)?) };
                Ok((g(n)? * cqj_a(n, p)?, down))
            }
            FamilySpec::CqUltra(p) => super::ultra::structure_coeffs(n, p),
            FamilySpec::BigQJacobi(p) => super::big_q::structure_coeffs(n, p),
        }
    }

    /// Closed structure coefficients against the generic ones; for
    /// Askey-Wilson also the lowering and raising right-hand coefficients.
    pub(super) fn structure_coefficients(&self, n: usize) -> Result<Identity> {
        let (up, down) = self.explicit_structure_coeffs(n)?;
        let (gup, gdown) = self.generic_structure_coeffs(n)?;
        let mut closed = vec![up, down];
        let mut generic = vec![("generic gamma_n A_n", gup), ("generic -gamma_{n-1} C_n", gdown)];
        if let FamilySpec::AskeyWilson(p) = &self.data.spec {
            let sum = self.gamma(n)? + self.gamma_prev(n)?;
            closed.push(super::askey_wilson::lowering_coeffs(n, p)?.1);
            closed.push(super::askey_wilson::raising_coeffs(n, p)?.1);
            generic.push(("generic -(gamma_n + gamma_{n-1}) C_n", -(&sum * self.data.c(n))));
            generic.push(("generic (gamma_n + gamma_{n-1}) A_n", &sum * self.data.a(n)));
        }
        let len = closed.len();
        let mut id = Identity::new(IdentityId::StructureCoefficients, n, Basis::Flat, scalars(&closed));
        for (k, (label, v)) in generic.into_iter().enumerate() {
            id = id.term(label, v, unit(k, len));
        }
        Ok(id)
    }

    pub(super) fn lowering(&self, n: usize) -> Result<Identity> {
        let g = self.gamma(n)?;
        let sum = &g + self.gamma_prev(n)?;
        Ok(Identity::new(IdentityId::Lowering, n, self.basis(), self.apply(&self.l, n)?)
            .term("gamma_n", g, self.centered(n))
            .term("-(gamma_n + gamma_{n-1}) C_n", -(sum * self.data.c(n)), self.p_prev(n)))
    }

    pub(super) fn raising(&self, n: usize) -> Result<Identity> {
        let gp = self.gamma_prev(n)?;
        let sum = self.gamma(n)? + &gp;
        Ok(Identity::new(IdentityId::Raising, n, self.basis(), self.apply(&self.l, n)?)
            .term("-gamma_{n-1}", -gp, self.centered(n))
            .term("(gamma_n + gamma_{n-1}) A_n", sum * self.data.a(n), self.p(n + 1)))
    }

    pub(super) fn eigenvalue(&self, n: usize) -> Result<Identity> {
        Ok(Identity::new(IdentityId::Eigenvalue, n, self.basis(), self.apply(&self.d, n)?)
            .term("lambda_n", self.lambda(n)?, self.p(n)))
    }

    /// `lambda_{n+1} - lambda_n`, the measured slope of `L` and the measured
    /// diagonal gap of `D` all equal the closed slope `gamma_n`.
    pub(super) fn slope_gap(&self, n: usize) -> Result<Identity> {
        let measured = [
            self.lambda(n + 1)? - self.lambda(n)?,
            self.gamma(n)?,
            self.d.diagonal(n + 1)? - self.d.diagonal(n)?,
        ];
        Ok(Identity::new(IdentityId::SlopeGap, n, Basis::Flat, scalars(&measured)).term(
            "gamma_n",
            self.data.spec.gamma(n)?,
            scalars(&[Scalar::one(), Scalar::one(), Scalar::one()]),
        ))
    }

    /// `[D, X] p_n = A_n (lambda_{n+1} - lambda_n) p_{n+1} + C_n (lambda_{n-1} - lambda_n) p_{n-1}`.
    pub(super) fn bispectral(&self, n: usize) -> Result<Identity> {
        let p = self.data.p(n);
        let dx = self.d.apply(&p.mul_x())?;
        let xd = self.d.apply(p)?.mul_x();
        let ln = self.lambda(n)?;
        let down = if n == 0 { Scalar::zero() } else { self.data.c(n) * (self.lambda(n - 1)? - &ln) };
        Ok(Identity::new(IdentityId::Bispectral, n, self.basis(), self.lift(&(&dx - &xd)))
            .term("A_n (lambda_{n+1} - lambda_n)", self.data.a(n) * (self.lambda(n + 1)? - &ln), self.p(n + 1))
            .term("C_n (lambda_{n-1} - lambda_n)", down, self.p_prev(n)))
    }

    pub(super) fn commutator(&self, max_deg: usize) -> Result<Identity> {
        let stride = max_deg + 4;
        let dx = PolyOperator::commutator(&self.d, &self.x).matrix(max_deg)?;
        Ok(Identity::new(IdentityId::Commutator, max_deg, Basis::Flat, flatten(&dx, stride))
            .term("L", Scalar::one(), flatten(&self.l.matrix(max_deg)?, stride)))
    }

    /// `D` rebuilt from `L` equals the explicit `D` up to a multiple of the identity.
    pub(super) fn d_from_l_check(&self, max_deg: usize) -> Result<Identity> {
        let stride = max_deg + 4;
        let d = self.d_explicit.as_ref().unwrap_or(&self.d);
        let rebuilt = d_from_l(&self.l);
        let c = rebuilt.column(0)?.coeff(0) - d.column(0)?.coeff(0);
        Ok(
            Identity::new(IdentityId::DFromL, max_deg, Basis::Flat, flatten(&rebuilt.matrix(max_deg)?, stride))
                .term("explicit D", Scalar::one(), flatten(&d.matrix(max_deg)?, stride))
                .term("multiple of the identity", c, flatten(&PolyOperator::identity().matrix(max_deg)?, stride)),
        )
    }

    pub(super) fn operator_dual_path(&self, max_deg: usize) -> Result<Option<Identity>> {
        let Some(via) = family_l_via_aw(&self.data.spec)? else {
            return Ok(None);
        };
        let stride = max_deg + 4;
        Ok(Some(
            Identity::new(IdentityId::OperatorDualPath, max_deg, Basis::Flat, flatten(&self.l.matrix(max_deg)?, stride))
                .term("specialized Askey-Wilson L", Scalar::one(), flatten(&via.matrix(max_deg)?, stride)),
        ))
    }

    /// `<op x^i, x^j>` against `+-<x^i, op x^j>`.
    pub(super) fn pairing(&self, id: IdentityId, op: &PolyOperator, max_deg: usize, skew: bool) -> Result<Identity> {
        let (left, right) = pairing_matrices(op, self.data, max_deg)?;
        let sign = if skew { -Scalar::one() } else { Scalar::one() };
        Ok(Identity::new(id, max_deg, Basis::Flat, scalars(&left)).term("adjoint", sign, scalars(&right)))
    }
}
