//! The five polynomial families, their closed-form coefficient data and
//! the recurrence and norms recovered from the polynomials themselves.

pub mod askey_wilson;
pub mod big_q_jacobi;
pub mod cq_jacobi;
pub mod cq_ultra;
pub mod jacobi;
pub mod sampler;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_algebra::scalar::div;
use crate::exact_algebra::{pow, Scalar, XPoly};

pub use askey_wilson::AwParams;
pub use big_q_jacobi::BigQParams;
pub use cq_jacobi::{CqJacobiParams, QJacobiEmbedding};
pub use cq_ultra::CqUltraParams;
pub use jacobi::JacobiParams;

/// Family identifiers. The continuous q-Jacobi family appears twice, once
/// per Askey-Wilson restriction, since each carries its own `L` and `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    AskeyWilson,
    Jacobi,
    CqJacobiHalf,
    CqJacobiFull,
    CqUltra,
    BigQJacobi,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::AskeyWilson,
        FamilyKind::Jacobi,
        FamilyKind::CqJacobiHalf,
        FamilyKind::CqJacobiFull,
        FamilyKind::CqUltra,
        FamilyKind::BigQJacobi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::AskeyWilson => "askey-wilson",
            FamilyKind::Jacobi => "jacobi",
            FamilyKind::CqJacobiHalf => "cq-jacobi-half",
            FamilyKind::CqJacobiFull => "cq-jacobi-full",
            FamilyKind::CqUltra => "cq-ultraspherical",
            FamilyKind::BigQJacobi => "big-q-jacobi",
        }
    }

    /// Polynomials live in `z` (`x = (z + 1/z)/2`) rather than directly in `x`.
    pub fn is_circle(self) -> bool {
        !matches!(self, FamilyKind::Jacobi | FamilyKind::BigQJacobi)
    }

    /// Names accepted on the command line; `cq-jacobi` selects both restrictions.
    pub fn parse_selection(s: &str) -> Result<Vec<FamilyKind>> {
        match s {
            "all" => Ok(Self::ALL.to_vec()),
            "cq-jacobi" => Ok(vec![FamilyKind::CqJacobiHalf, FamilyKind::CqJacobiFull]),
            _ => Ok(vec![s.parse()?]),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family '{s}'")))
    }
}

/// A family together with concrete parameter values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    AskeyWilson(AwParams),
    Jacobi(JacobiParams),
    CqJacobi(CqJacobiParams),
    CqUltra(CqUltraParams),
    BigQJacobi(BigQParams),
}

/// Closed-form recurrence coefficients where the family has them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClosedRecurrence {
    pub a: Option<Scalar>,
    pub b: Option<Scalar>,
    pub c: Option<Scalar>,
}

impl FamilySpec {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::AskeyWilson(_) => FamilyKind::AskeyWilson,
            FamilySpec::Jacobi(_) => FamilyKind::Jacobi,
            FamilySpec::CqJacobi(p) => match p.embedding {
                QJacobiEmbedding::HalfBase => FamilyKind::CqJacobiHalf,
                QJacobiEmbedding::FullBase => FamilyKind::CqJacobiFull,
            },
            FamilySpec::CqUltra(_) => FamilyKind::CqUltra,
            FamilySpec::BigQJacobi(_) => FamilyKind::BigQJacobi,
        }
    }

    /// Parameter values by name, sorted, as they appear in reports.
    pub fn params(&self) -> BTreeMap<String, Scalar> {
        let pairs: Vec<(&str, &Scalar)> = match self {
            FamilySpec::AskeyWilson(p) => vec![("a", &p.a), ("b", &p.b), ("c", &p.c), ("d", &p.d), ("q", &p.q)],
            FamilySpec::Jacobi(p) => vec![("alpha", &p.alpha), ("beta", &p.beta)],
            FamilySpec::CqJacobi(p) => vec![("alpha", &p.alpha), ("beta", &p.beta), ("s", &p.s)],
            FamilySpec::CqUltra(p) => vec![("t", &p.t), ("s", &p.s)],
            FamilySpec::BigQJacobi(p) => vec![("a", &p.a), ("b", &p.b), ("c", &p.c), ("q", &p.q)],
        };
        pairs.into_iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
    }

    /// Builds a spec from named values, e.g. parsed from `a=1/3,b=1/4`.
    pub fn from_params(kind: FamilyKind, m: &BTreeMap<String, Scalar>) -> Result<Self> {
        let get = |k: &str| {
            m.get(k)
                .cloned()
                .ok_or_else(|| Error::Parse(format!("missing parameter '{k}' for {kind}")))
        };
        let allowed: &[&str] = match kind {
            FamilyKind::AskeyWilson => &["a", "b", "c", "d", "q"],
            FamilyKind::Jacobi => &["alpha", "beta"],
            FamilyKind::CqJacobiHalf | FamilyKind::CqJacobiFull => &["alpha", "beta", "s"],
            FamilyKind::CqUltra => &["t", "s"],
            FamilyKind::BigQJacobi => &["a", "b", "c", "q"],
        };
        if let Some(extra) = m.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(Error::Parse(format!("unexpected parameter '{extra}' for {kind}")));
        }
        Ok(match kind {
            FamilyKind::AskeyWilson => {
                FamilySpec::AskeyWilson(AwParams::new(get("a")?, get("b")?, get("c")?, get("d")?, get("q")?))
            }
            FamilyKind::Jacobi => FamilySpec::Jacobi(JacobiParams::new(get("alpha")?, get("beta")?)),
            FamilyKind::CqJacobiHalf | FamilyKind::CqJacobiFull => {
                let e = if kind == FamilyKind::CqJacobiHalf {
                    QJacobiEmbedding::HalfBase
                } else {
                    QJacobiEmbedding::FullBase
                };
                FamilySpec::CqJacobi(CqJacobiParams::new(get("alpha")?, get("beta")?, get("s")?, e))
            }
            FamilyKind::CqUltra => FamilySpec::CqUltra(CqUltraParams::new(get("t")?, get("s")?)),
            FamilyKind::BigQJacobi => {
                FamilySpec::BigQJacobi(BigQParams::new(get("a")?, get("b")?, get("c")?, get("q")?))
            }
        })
    }

    /// The base scale `s` and exponent `m` with `q = s^m`; `None` for Jacobi.
    pub fn base_scale(&self) -> Option<(Scalar, u32)> {
        match self {
            FamilySpec::AskeyWilson(p) => Some((p.q.clone(), 1)),
            FamilySpec::Jacobi(_) => None,
            FamilySpec::CqJacobi(p) => Some((p.s.clone(), 4)),
            FamilySpec::CqUltra(p) => Some((p.s.clone(), 2)),
            FamilySpec::BigQJacobi(p) => Some((p.q.clone(), 1)),
        }
    }

    pub fn check_admissible(&self, cap: usize) -> Result<()> {
        match self {
            FamilySpec::AskeyWilson(p) => p.check_admissible(cap),
            FamilySpec::Jacobi(p) => p.check_admissible(cap),
            FamilySpec::CqJacobi(p) => {
                p.check_admissible(cap)?;
                for e in [QJacobiEmbedding::HalfBase, QJacobiEmbedding::FullBase] {
                    p.aw_params(e)?.check_admissible(cap)?;
                }
                Ok(())
            }
            FamilySpec::CqUltra(p) => p.check_admissible(cap),
            FamilySpec::BigQJacobi(p) => p.check_admissible(cap),
        }
    }

    /// `p_0..=p_max` along the primary construction path.
    pub fn polynomials(&self, max: usize) -> Result<Vec<XPoly>> {
        match self {
            FamilySpec::AskeyWilson(p) => (0..=max).map(|n| askey_wilson::aw_polynomial(n, p)).collect(),
            FamilySpec::Jacobi(p) => jacobi::jacobi_polynomials(max, p),
            FamilySpec::CqJacobi(p) => (0..=max)
                .map(|n| cq_jacobi::cqjacobi_polynomial(n, p, p.embedding))
                .collect(),
            FamilySpec::CqUltra(p) => cq_ultra::cqultra_polynomials(max, p),
            FamilySpec::BigQJacobi(p) => (0..=max).map(|n| big_q_jacobi::bigq_polynomial(n, p)).collect(),
        }
    }

    /// `p_0..=p_max` along an independent second path, where one exists:
    /// the closed-form recurrence (Askey-Wilson), the explicit finite sum
    /// (Jacobi), the other restriction (continuous q-Jacobi) or the
    /// Askey-Wilson specialization (q-ultraspherical, needs square `t`, `s`).
    pub fn alternate_polynomials(&self, max: usize) -> Result<Option<Vec<XPoly>>> {
        Ok(match self {
            FamilySpec::AskeyWilson(_) => {
                let closed = (0..max).map(|n| self.closed_recurrence(n)).collect::<Result<Vec<_>>>()?;
                Some(polynomials_from_recurrence(max, |n| {
                    let r = &closed[n];
                    Ok((r.a.clone().unwrap(), r.b.clone().unwrap(), r.c.clone().unwrap()))
                })?)
            }
            FamilySpec::Jacobi(p) => Some((0..=max).map(|n| jacobi::jacobi_by_sum(n, p)).collect()),
            FamilySpec::CqJacobi(p) => {
                let other = match p.embedding {
                    QJacobiEmbedding::HalfBase => QJacobiEmbedding::FullBase,
                    QJacobiEmbedding::FullBase => QJacobiEmbedding::HalfBase,
                };
                Some((0..=max).map(|n| cq_jacobi::cqjacobi_polynomial(n, p, other)).collect::<Result<_>>()?)
            }
            FamilySpec::CqUltra(p) => match p.aw_params() {
                Some(_) => Some((0..=max).map(|n| cq_ultra::cqultra_polynomial_via_aw(n, p)).collect::<Result<_>>()?),
                None => None,
            },
            FamilySpec::BigQJacobi(_) => None,
        })
    }

    /// Closed-form `A_n, B_n, C_n` (each `None` where no closed form is
    /// available and the expansion is authoritative).
    pub fn closed_recurrence(&self, n: usize) -> Result<ClosedRecurrence> {
        Ok(match self {
            FamilySpec::AskeyWilson(p) => {
                let c = askey_wilson::aw_coefficients(n, p)?;
                ClosedRecurrence { a: Some(c.a), b: Some(c.b), c: Some(c.c) }
            }
            FamilySpec::Jacobi(p) => {
                let c = jacobi::jacobi_coefficients(n, p)?;
                ClosedRecurrence { a: Some(c.a), b: Some(c.b), c: Some(c.c) }
            }
            FamilySpec::CqJacobi(p) => ClosedRecurrence {
                a: Some(cq_jacobi::cqj_a(n, p)?),
                b: None,
                c: Some(cq_jacobi::cqj_c(n, p)?),
            },
            FamilySpec::CqUltra(p) => {
                let (a, b, c) = cq_ultra::cqu_recurrence(n, p)?;
                ClosedRecurrence { a: Some(a), b: Some(b), c: Some(c) }
            }
            FamilySpec::BigQJacobi(_) => ClosedRecurrence::default(),
        })
    }

    /// Closed-form slope `gamma_n` of the family's skew operator `L`.
    pub fn gamma(&self, n: usize) -> Result<Scalar> {
        match self {
            FamilySpec::AskeyWilson(p) => Ok(askey_wilson::aw_gamma(n, &p.abcd(), &p.q)),
            FamilySpec::Jacobi(p) => Ok(jacobi::jacobi_coefficients(n, p)?.gamma),
            FamilySpec::CqJacobi(p) => match p.embedding {
                QJacobiEmbedding::HalfBase => cq_jacobi::cqj_gamma(n, p),
                QJacobiEmbedding::FullBase => cq_jacobi::cqj_gamma_tilde(n, p),
            },
            FamilySpec::CqUltra(p) => Ok(cq_ultra::cqu_gamma(n, p)),
            FamilySpec::BigQJacobi(p) => big_q_jacobi::bigq_gamma(n, p),
        }
    }

    /// Closed-form eigenvalue `lambda_n` of the explicit second-order
    /// operator, if the family has one.
    pub fn lambda(&self, n: usize) -> Result<Option<Scalar>> {
        Ok(match self {
            FamilySpec::AskeyWilson(p) => Some(askey_wilson::aw_lambda(n, &p.abcd(), &p.q)),
            FamilySpec::Jacobi(p) => Some(jacobi::jacobi_coefficients(n, p)?.lambda),
            FamilySpec::CqJacobi(p) => Some(cq_jacobi::cqj_lambda(n, p, p.embedding)?),
            FamilySpec::CqUltra(p) => Some(cq_ultra::cqu_lambda(n, p)),
            FamilySpec::BigQJacobi(_) => None,
        })
    }

    /// The base `q` of the family (`None` for Jacobi).
    pub fn q(&self) -> Option<Scalar> {
        self.base_scale().map(|(s, m)| pow(&s, m as i64))
    }
}

/// `p_0..=p_max` from `x p_n = A_n p_{n+1} + B_n p_n + C_n p_{n-1}`, `p_0 = 1`.
pub fn polynomials_from_recurrence(
    max: usize,
    mut coeffs: impl FnMut(usize) -> Result<(Scalar, Scalar, Scalar)>,
) -> Result<Vec<XPoly>> {
    let mut out = vec![XPoly::one()];
    for n in 0..max {
        let (a, b, c) = coeffs(n)?;
        let mut next = &out[n].mul_x() - &out[n].scale(&b);
        if n > 0 {
            next = &next - &out[n - 1].scale(&c);
        }
        out.push(next.scale(&div(&Scalar::from_integer(1.into()), &a)?));
    }
    Ok(out)
}

/// Coefficients of `f` in the basis `basis[0..]` (with `deg basis[n] = n`),
/// by repeated leading-term elimination. Fails if `f` has higher degree
/// than the basis covers.
pub fn expand_in_basis(f: &XPoly, basis: &[XPoly]) -> Result<Vec<Scalar>> {
    let Some(deg) = f.degree() else {
        return Ok(Vec::new());
    };
    if deg >= basis.len() {
        return Err(Error::DegreeCap { n: deg, cap: basis.len().saturating_sub(1) });
    }
    let mut rem = f.clone();
    let mut out = vec![Scalar::zero(); deg + 1];
    for n in (0..=deg).rev() {
        let c = rem.coeff(n);
        if c.is_zero() {
            continue;
        }
        let lead = basis[n].coeff(n);
        if lead.is_zero() || basis[n].degree() != Some(n) {
            return Err(Error::ExpansionResidual);
        }
        let k = div(&c, &lead)?;
        rem = &rem - &basis[n].scale(&k);
        out[n] = k;
    }
    if !rem.is_zero() {
        return Err(Error::ExpansionResidual);
    }
    Ok(out)
}

/// Family polynomials and the recurrence and norm data recovered from them.
#[derive(Clone, Debug)]
pub struct FamilyData {
    pub spec: FamilySpec,
    /// Degree cap `N`.
    pub cap: usize,
    /// `p_0..=p_{N+1}`.
    pub polys: Vec<XPoly>,
    /// `(A_n, B_n, C_n)` for `n <= N`, from expanding `x p_n`.
    pub recurrence: Vec<(Scalar, Scalar, Scalar)>,
    /// `h_n` for `n <= N`, with `h_0 = 1`.
    pub norms: Vec<Scalar>,
}

impl FamilyData {
    pub fn build(spec: FamilySpec, cap: usize) -> Result<Self> {
        spec.check_admissible(cap)?;
        let polys = spec.polynomials(cap + 1)?;
        for (n, p) in polys.iter().enumerate() {
            if p.degree() != Some(n) {
                return Err(Error::Inadmissible(format!("p_{n} has the wrong degree")));
            }
        }
        let recurrence = (0..=cap)
            .map(|n| recurrence_from_expansion(&polys, n))
            .collect::<Result<Vec<_>>>()?;
        let norms = norms_from_recurrence(&recurrence)?;
        Ok(Self { spec, cap, polys, recurrence, norms })
    }

    pub fn kind(&self) -> FamilyKind {
        self.spec.kind()
    }

    pub fn p(&self, n: usize) -> &XPoly {
        &self.polys[n]
    }

    /// Leading coefficient `k_n`.
    pub fn k(&self, n: usize) -> Scalar {
        self.polys[n].leading()
    }

    pub fn a(&self, n: usize) -> &Scalar {
        &self.recurrence[n].0
    }

    pub fn b(&self, n: usize) -> &Scalar {
        &self.recurrence[n].1
    }

    pub fn c(&self, n: usize) -> &Scalar {
        &self.recurrence[n].2
    }

    pub fn h(&self, n: usize) -> &Scalar {
        &self.norms[n]
    }
}

/// The unique `(A_n, B_n, C_n)` with `x p_n = A_n p_{n+1} + B_n p_n + C_n p_{n-1}`.
pub fn recurrence_from_expansion(polys: &[XPoly], n: usize) -> Result<(Scalar, Scalar, Scalar)> {
    if n + 1 >= polys.len() {
        return Err(Error::DegreeCap { n: n + 1, cap: polys.len().saturating_sub(1) });
    }
    let coeffs = expand_in_basis(&polys[n].mul_x(), &polys[..=n + 1])?;
    let lower = n.saturating_sub(1);
    if coeffs[..lower].iter().any(|c| !c.is_zero()) {
        return Err(Error::ExpansionResidual);
    }
    let c = if n == 0 { Scalar::zero() } else { coeffs[n - 1].clone() };
    Ok((coeffs[n + 1].clone(), coeffs[n].clone(), c))
}

/// `h_0 = 1`, `h_n = h_{n-1} C_n / A_{n-1}`.
pub fn norms_from_recurrence(rec: &[(Scalar, Scalar, Scalar)]) -> Result<Vec<Scalar>> {
    let mut h = vec![Scalar::from_integer(1.into())];
    for n in 1..rec.len() {
        let next = div(&(&h[n - 1] * &rec[n].2), &rec[n - 1].0)?;
        h.push(next);
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::{int, rat};
    use num_traits::Signed;

    fn aw() -> FamilySpec {
        FamilySpec::AskeyWilson(AwParams::new(rat(1, 3), rat(1, 4), rat(1, 5), rat(-1, 6), rat(1, 2)))
    }

    #[test]
    fn expansion_recovers_closed_recurrences() {
        let jac = FamilySpec::Jacobi(JacobiParams::new(int(1), int(2)));
        let ultra = FamilySpec::CqUltra(CqUltraParams::new(rat(1, 3), rat(1, 2)));
        for spec in [aw(), jac, ultra] {
            let data = FamilyData::build(spec.clone(), 10).unwrap();
            for n in 0..=10 {
                let r = spec.closed_recurrence(n).unwrap();
                assert_eq!(r.a.as_ref(), Some(data.a(n)), "{} A_{n}", spec.kind());
                assert_eq!(r.b.as_ref(), Some(data.b(n)), "{} B_{n}", spec.kind());
                assert_eq!(r.c.as_ref(), Some(data.c(n)), "{} C_{n}", spec.kind());
            }
        }
    }

    #[test]
    fn askey_wilson_norms_match_closed_form() {
        let FamilySpec::AskeyWilson(p) = aw() else { unreachable!() };
        let data = FamilyData::build(aw(), 8).unwrap();
        for n in 0..=8 {
            assert_eq!(*data.h(n), askey_wilson::aw_norm_ratio(n, &p).unwrap());
            assert!(data.h(n).is_positive());
        }
    }

    #[test]
    fn second_askey_wilson_degree_two_matches_recurrence() {
        let alt = aw().alternate_polynomials(2).unwrap().unwrap();
        assert_eq!(alt[2], aw().polynomials(2).unwrap()[2]);
    }

    #[test]
    fn expansion_of_basis_element_is_a_unit_vector() {
        let data = FamilyData::build(aw(), 6).unwrap();
        let e = expand_in_basis(data.p(3), &data.polys).unwrap();
        assert_eq!(e, vec![int(0), int(0), int(0), int(1)]);
        assert_eq!(expand_in_basis(&XPoly::one(), &data.polys).unwrap(), vec![int(1)]);
    }

    #[test]
    fn family_names_round_trip() {
        for k in FamilyKind::ALL {
            assert_eq!(k.name().parse::<FamilyKind>().unwrap(), k);
        }
        assert_eq!(FamilyKind::parse_selection("cq-jacobi").unwrap().len(), 2);
        assert!("nope".parse::<FamilyKind>().is_err());
    }
}
