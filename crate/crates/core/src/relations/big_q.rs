//! Recovery of second-order q-difference equations by linear algebra, and
//! the reduction of the big q-Jacobi structure relation to one in the
//! q-derivative.

use num_traits::{One, Zero};

use super::{scalars, Basis, Checker, Identity, IdentityId};
use crate::error::{Error, Result};
use crate::exact_algebra::{int, pow, Laurent, Scalar, XPoly};
use crate::families::{BigQParams, FamilyData, FamilyKind, FamilySpec};
use crate::linalg::nullspace;
use crate::qcalculus::q_derivative;

fn one() -> Scalar {
    Scalar::one()
}

/// `a(v) p(Qv) + b(v) p(v) + c(v) p(v/Q) = lambda_n W(v) p(v)` for every family
/// member, with `v = z` (Askey-Wilson) or `v = x` (big q-Jacobi).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QDiffEquation {
    pub basis: Basis,
    pub q: Scalar,
    pub a: Laurent,
    pub b: Laurent,
    pub c: Laurent,
    pub weight: Laurent,
    /// `lambda_0 = 0`, `lambda_1 = 1`, then as found, for `n <= N + 1`.
    pub lambdas: Vec<Scalar>,
}

impl QDiffEquation {
    pub fn lhs(&self, p: &Laurent) -> Result<Laurent> {
        let up = &self.a * &p.dilate(&self.q)?;
        let down = &self.c * &p.dilate(&self.q.recip())?;
        Ok(&(&up + &(&self.b * p)) + &down)
    }
}

/// Solves for coefficients supported on exponents `lo..=hi` against the
/// weight `w`, using degrees `0..=k` and growing `k` until the solution space
/// is a line whose member holds for every degree. `None` if there is no
/// nonzero solution.
fn solve(polys: &[Laurent], basis: Basis, q: &Scalar, w: &Laurent, lo: i64, hi: i64) -> Result<Option<QDiffEquation>> {
    let width = (hi - lo + 1) as usize;
    let max_k = polys.len() - 1;
    for k in 2..=max_k {
        let cols = 3 * width + k;
        let mut rows = Vec::new();
        for (n, p) in polys.iter().enumerate().take(k + 1) {
            let pq = p.dilate(q)?;
            let pqi = p.dilate(&q.recip())?;
            let wp = w * p;
            let e_lo = (lo + p.lo().unwrap_or(0)).min(wp.lo().unwrap_or(0));
            let e_hi = (hi + p.hi().unwrap_or(0)).max(wp.hi().unwrap_or(0));
            for e in e_lo..=e_hi {
                let mut row = vec![Scalar::zero(); cols];
                for j in 0..width {
                    let shift = e - (lo + j as i64);
                    row[j] = pq.coeff(shift);
                    row[width + j] = p.coeff(shift);
                    row[2 * width + j] = pqi.coeff(shift);
                }
                if n >= 1 {
                    row[3 * width + n - 1] = -wp.coeff(e);
                }
                rows.push(row);
            }
        }
        let ns = nullspace(&rows, cols);
        match ns.len() {
            0 => return Ok(None),
            1 => {}
            _ => continue,
        }
        let v = &ns[0];
        let l1 = v[3 * width].clone();
        if l1.is_zero() {
            continue;
        }
        let v: Vec<Scalar> = v.iter().map(|x| x / &l1).collect();
        let part = |i: usize| Laurent::from_coeffs(lo, v[i * width..(i + 1) * width].to_vec());
        let mut eq = QDiffEquation {
            basis,
            q: q.clone(),
            a: part(0),
            b: part(1),
            c: part(2),
            weight: w.clone(),
            lambdas: Vec::new(),
        };
        if eq.fill_eigenvalues(polys)? {
            return Ok(Some(eq));
        }
    }
    Ok(None)
}

impl QDiffEquation {
    /// Reads off `lambda_n` for every degree; `false` if some degree fails.
    fn fill_eigenvalues(&mut self, polys: &[Laurent]) -> Result<bool> {
        self.lambdas.clear();
        for p in polys {
            let lhs = self.lhs(p)?;
            let wp = &self.weight * p;
            let top = wp.hi().unwrap_or(0);
            let lam = &lhs.coeff(top) / &wp.coeff(top);
            if lhs != wp.scale(&lam) {
                return Ok(false);
            }
            self.lambdas.push(lam);
        }
        Ok(true)
    }
}

/// Finds the second-order q-difference equation satisfied by the family
/// from the polynomials alone, verified for every stored degree.
pub fn derive_second_order_qdiff(data: &FamilyData) -> Result<QDiffEquation> {
    let q = data.spec.q().ok_or_else(|| Error::NoSolution("family has no base q".into()))?;
    let (basis, polys, attempts): (Basis, Vec<Laurent>, Vec<(Laurent, i64, i64)>) = match data.kind() {
        FamilyKind::AskeyWilson => {
            let e = Laurent::from_coeffs(0, vec![one(), Scalar::zero(), -(one() + &q), Scalar::zero(), q.clone()]);
            let w = &e * &e.reflect();
            (Basis::Z, data.polys.iter().map(XPoly::to_z_laurent).collect(), vec![(w, -4, 4)])
        }
        FamilyKind::BigQJacobi => {
            let mut att = Vec::new();
            for hi in [2, 3] {
                for d in 0..=2 {
                    att.push((Laurent::monomial(one(), d), 0, hi));
                }
            }
            (Basis::X, data.polys.iter().map(XPoly::as_laurent).collect(), att)
        }
        k => return Err(Error::NoSolution(format!("no q-difference derivation for {k}"))),
    };
    for (w, lo, hi) in attempts {
        if let Some(eq) = solve(&polys, basis, &q, &w, lo, hi)? {
            return Ok(eq);
        }
    }
    Err(Error::NoSolution("no weight admits a verified solution".into()))
}

/// Data of the elimination of `f(x/q)` from `L` with the derived equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub q: Scalar,
    /// `(1 - x/(aq))(1 + x/(cq)) = kappa C(x)`.
    pub kappa: Scalar,
    /// `(1 - x)(1 + bx/c) + kappa A(x) = mu (x - 1)(bx + c)`.
    pub mu: Scalar,
    pub a: XPoly,
    pub b: XPoly,
    pub c: XPoly,
    pub lambdas: Vec<Scalar>,
    /// `(x - 1)(bx + c)`.
    pub front: XPoly,
}

/// Coefficients of `(x - 1)(bx + c) D_q P_n` in the two forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DqCoefficients {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub gamma: Scalar,
    pub delta: Scalar,
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
}

fn constant_quotient(num: &XPoly, den: &XPoly, what: &str) -> Result<Scalar> {
    let quo = num
        .as_laurent()
        .divide_exact(&den.as_laurent())
        .map_err(|_| Error::EliminationImpossible(format!("{what} is not a polynomial multiple")))?;
    if quo.hi().unwrap_or(0) != 0 || quo.lo().unwrap_or(0) != 0 {
        return Err(Error::EliminationImpossible(format!("{what} is not constant")));
    }
    Ok(quo.coeff(0))
}

fn params(spec: &FamilySpec) -> Result<&BigQParams> {
    match spec {
        FamilySpec::BigQJacobi(p) => Ok(p),
        _ => Err(Error::EliminationImpossible("reduction needs the big q-Jacobi family".into())),
    }
}

pub fn reduce_bigq(data: &FamilyData, eq: &QDiffEquation) -> Result<Reduction> {
    let p = params(&data.spec)?;
    let (pa, pb, pc, q) = (&p.a, &p.b, &p.c, &p.q);
    if eq.weight != Laurent::monomial(one(), 2) {
        return Err(Error::EliminationImpossible("expected the weight x^2".into()));
    }
    let to_x = |l: &Laurent| XPoly::from_laurent(l);
    let (a, b, c) = (to_x(&eq.a)?, to_x(&eq.b)?, to_x(&eq.c)?);
    let e = &XPoly::from_coeffs(vec![one(), -(pa * q).recip()]) * &XPoly::from_coeffs(vec![one(), (pc * q).recip()]);
    let kappa = constant_quotient(&e, &c, "the backward coefficient")?;
    let up = &XPoly::from_coeffs(vec![one(), -one()]) * &XPoly::from_coeffs(vec![one(), pb / pc]);
    let front = &XPoly::from_coeffs(vec![-one(), one()]) * &XPoly::from_coeffs(vec![pc.clone(), pb.clone()]);
    let mu = constant_quotient(&(&up + &a.scale(&kappa)), &front, "the forward coefficient")?;
    Ok(Reduction { q: q.clone(), kappa, mu, a, b, c, lambdas: eq.lambdas.clone(), front })
}

impl Reduction {
    /// `(delta_n, beta_n)` with `R_n = mu (1 - q) x (delta_n x + beta_n)`.
    pub fn affine_part(&self, n: usize) -> Result<(Scalar, Scalar)> {
        let w = XPoly::monomial(self.lambdas[n].clone(), 2);
        let r = &self.front.scale(&self.mu) + &(&self.b - &w).scale(&self.kappa);
        if !r.coeff(0).is_zero() || r.degree().unwrap_or(0) > 2 {
            return Err(Error::EliminationImpossible(format!("R_{n} is not x times an affine function")));
        }
        let k = &self.mu * (one() - &self.q);
        Ok((r.coeff(2) / &k, r.coeff(1) / &k))
    }

    /// Coefficients from the structure coefficients `(up, down)` of
    /// `L P_n = up P_{n+1} + down P_{n-1}` and the recurrence `(A_n, B_n, C_n)`.
    pub fn coefficients(&self, n: usize, structure: (Scalar, Scalar), rec: (&Scalar, &Scalar, &Scalar)) -> Result<DqCoefficients> {
        let (delta, beta) = self.affine_part(n)?;
        let k = &self.mu * (one() - &self.q);
        let alpha = -(structure.0 / &k);
        let gamma = -(structure.1 / &k);
        Ok(DqCoefficients {
            a: &alpha + &delta * rec.0,
            b: &beta + &delta * rec.1,
            c: &gamma + &delta * rec.2,
            alpha,
            beta,
            gamma,
            delta,
        })
    }
}

/// `L P_n = up P_{n+1} + down P_{n-1}` with closed-form coefficients.
pub(crate) fn structure_coeffs(n: usize, p: &BigQParams) -> Result<(Scalar, Scalar)> {
    let (a, b, c, q) = (&p.a, &p.b, &p.c, &p.q);
    let ni = n as i64;
    let den = one() - a * b * pow(q, 2 * ni + 1);
    let up = (one() - a * pow(q, ni + 1)) * (one() + c * pow(q, ni + 1)) * (one() - a * b * pow(q, ni + 1))
        / (pow(q, ni + 2) * a * c * &den);
    let down = (one() - pow(q, ni)) * (one() - b * pow(q, ni)) * (one() + a * b * pow(q, ni) / c) / &den;
    Ok((up, -down))
}

impl Checker<'_> {
    fn dq_coefficients(&self, n: usize) -> Result<DqCoefficients> {
        let p = params(&self.data.spec)?;
        let d = self.data;
        self.reduction()?.coefficients(n, structure_coeffs(n, p)?, (d.a(n), d.b(n), d.c(n)))
    }

    fn dq_lhs(&self, n: usize) -> Result<Laurent> {
        let r = self.reduction()?;
        Ok((&r.front * &q_derivative(self.data.p(n), &r.q)?).as_laurent())
    }

    pub(super) fn dq_structure_intermediate(&self, n: usize) -> Result<Identity> {
        let k = self.dq_coefficients(n)?;
        Ok(Identity::new(IdentityId::DqStructureIntermediate, n, Basis::X, self.dq_lhs(n)?)
            .term("alpha_n", k.alpha, self.p(n + 1))
            .term("delta_n", k.delta, self.data.p(n).mul_x().as_laurent())
            .term("beta_n", k.beta, self.p(n))
            .term("gamma_n", k.gamma, self.p_prev(n)))
    }

    pub(super) fn dq_structure(&self, n: usize) -> Result<Identity> {
        let k = self.dq_coefficients(n)?;
        Ok(Identity::new(IdentityId::DqStructure, n, Basis::X, self.dq_lhs(n)?)
            .term("a_n", k.a, self.p(n + 1))
            .term("b_n", k.b, self.p(n))
            .term("c_n", k.c, self.p_prev(n)))
    }

    /// The recovered eigenvalues are a fixed multiple of the closed ones.
    pub(super) fn qdiff_recovery(&self) -> Result<Identity> {
        let eq = self.qdiff()?;
        let closed = (0..eq.lambdas.len()).map(|n| self.lambda(n)).collect::<Result<Vec<_>>>()?;
        let scale = &eq.lambdas[1] / &closed[1];
        let mut id = Identity::new(IdentityId::QDiffRecovery, eq.lambdas.len() - 1, Basis::Flat, scalars(&eq.lambdas))
            .term("scale", scale, scalars(&closed));
        id.extra.push(("weight degree".into(), int(eq.weight.hi().unwrap_or(0))));
        Ok(id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::rat;
    use crate::families::AwParams;

    fn bigq() -> FamilyData {
        let p = BigQParams::new(rat(1, 3), rat(1, 4), rat(1, 5), rat(1, 2));
        FamilyData::build(FamilySpec::BigQJacobi(p), 8).unwrap()
    }

    #[test]
    fn bigq_equation_has_weight_x_squared() {
        let d = bigq();
        let eq = derive_second_order_qdiff(&d).unwrap();
        assert_eq!(eq.weight, Laurent::monomial(one(), 2));
        assert_eq!(eq.lambdas[0], int(0));
        assert_eq!(eq.lambdas[1], int(1));
    }

    #[test]
    fn bigq_reduction_vanishes_at_zero() {
        let d = bigq();
        let c = Checker::new(&d).unwrap();
        let k = c.dq_coefficients(0).unwrap();
        assert!(k.a.is_zero() && k.b.is_zero());
        assert!(c.dq_structure(0).unwrap().residual().is_zero());
    }

    #[test]
    fn aw_equation_recovers_eigenvalues() {
        let p = AwParams::new(rat(1, 3), rat(1, 4), rat(1, 5), rat(-1, 6), rat(1, 2));
        let d = FamilyData::build(FamilySpec::AskeyWilson(p), 7).unwrap();
        let c = Checker::new(&d).unwrap();
        assert!(c.qdiff_recovery().unwrap().holds());
    }

    #[test]
    fn other_families_have_no_derivation() {
        let d = FamilyData::build(
            FamilySpec::Jacobi(crate::families::JacobiParams::new(int(1), int(1))),
            5,
        )
        .unwrap();
        assert!(matches!(derive_second_order_qdiff(&d), Err(Error::NoSolution(_))));
    }
}
