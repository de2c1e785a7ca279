//! Linear operators on polynomials: multiplication by `x`, the skew
//! operators `L`, the second-order operators `D`, commutators and the
//! reconstruction of `D` from `L`.
//!
//! Every operator acts on [`XPoly`]. Operators of Askey-Wilson type are
//! evaluated on the Laurent form `f[z] = f((z + 1/z)/2)` and converted back.

use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_algebra::{int, pow, rat, Laurent, Scalar, XPoly};
use crate::families::{AwParams, BigQParams, CqJacobiParams, CqUltraParams, FamilySpec, JacobiParams, QJacobiEmbedding};

type Action = dyn Fn(&XPoly) -> Result<XPoly> + Send + Sync;

/// A linear operator given by its action, with images of the monomials
/// `x^j` cached on first use. Clones share the cache.
#[derive(Clone)]
pub struct PolyOperator {
    name: Arc<str>,
    action: Arc<Action>,
    degree_shift: i64,
    columns: Arc<Mutex<Vec<XPoly>>>,
}

impl fmt::Debug for PolyOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PolyOperator")
            .field("name", &self.name)
            .field("degree_shift", &self.degree_shift)
            .finish()
    }
}

impl PolyOperator {
    pub fn new(
        name: impl Into<String>,
        degree_shift: i64,
        action: impl Fn(&XPoly) -> Result<XPoly> + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: Arc::from(name.into()),
            action: Arc::new(action),
            degree_shift,
            columns: Arc::new(Mutex::new(Vec::new())),
        }
    }

    /// An operator on the Laurent form of its argument. The result must be
    /// symmetric under `z -> 1/z`.
    pub fn on_laurent(
        name: impl Into<String>,
        degree_shift: i64,
        action: impl Fn(&Laurent) -> Result<Laurent> + Send + Sync + 'static,
    ) -> Self {
        Self::new(name, degree_shift, move |f: &XPoly| {
            Ok(action(&f.to_z_laurent())?.to_sym()?.to_x())
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Maximal increase of degree.
    pub fn degree_shift(&self) -> i64 {
        self.degree_shift
    }

    /// Applies the defining action.
    pub fn apply(&self, f: &XPoly) -> Result<XPoly> {
        (self.action)(f)
    }

    /// Image of `x^j`.
    pub fn column(&self, j: usize) -> Result<XPoly> {
        if let Some(c) = self.columns.lock().expect("cache lock").get(j) {
            return Ok(c.clone());
        }
        // Compute outside the lock; other threads may race to fill the same
        // entries, which is harmless because the values are identical.
        let start = self.columns.lock().expect("cache lock").len();
        let mut fresh = Vec::new();
        for k in start..=j {
            fresh.push(self.apply(&XPoly::monomial(Scalar::one(), k))?);
        }
        let mut cols = self.columns.lock().expect("cache lock");
        for (i, c) in fresh.into_iter().enumerate() {
            if cols.len() == start + i {
                cols.push(c);
            }
        }
        Ok(cols[j].clone())
    }

    /// Columns `0..=cap`: entry `(i, j)` is the coefficient of `x^i` in the
    /// image of `x^j`.
    pub fn matrix(&self, cap: usize) -> Result<Vec<XPoly>> {
        self.column(cap)?;
        Ok(self.columns.lock().expect("cache lock")[..=cap].to_vec())
    }

    /// Applies the operator through its cached columns.
    pub fn apply_via_matrix(&self, f: &XPoly) -> Result<XPoly> {
        let mut acc = XPoly::zero();
        for (j, c) in f.coeffs().iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &self.column(j)?.scale(c);
            }
        }
        Ok(acc)
    }

    /// Multiplication by `x`.
    pub fn x() -> Self {
        Self::new("X", 1, |f: &XPoly| Ok(f.mul_x()))
    }

    pub fn identity() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::new(format!("{c} Id"), 0, move |f: &XPoly| Ok(f.scale(&c)))
    }

    /// `a b`, i.e. `f -> a(b(f))`.
    pub fn compose(a: &Self, b: &Self) -> Self {
        let (a2, b2) = (a.clone(), b.clone());
        Self::new(format!("{} {}", a.name, b.name), a.degree_shift + b.degree_shift, move |f| {
            a2.apply_via_matrix(&b2.apply_via_matrix(f)?)
        })
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        let (a2, b2) = (a.clone(), b.clone());
        Self::new(format!("[{}, {}]", a.name, b.name), a.degree_shift + b.degree_shift, move |f| {
            let ab = a2.apply_via_matrix(&b2.apply_via_matrix(f)?)?;
            let ba = b2.apply_via_matrix(&a2.apply_via_matrix(f)?)?;
            Ok(&ab - &ba)
        })
    }

    /// `a - b`.
    pub fn sub(a: &Self, b: &Self) -> Self {
        let (a2, b2) = (a.clone(), b.clone());
        Self::new(format!("{} - {}", a.name, b.name), a.degree_shift.max(b.degree_shift), move |f| {
            Ok(&a2.apply_via_matrix(f)? - &b2.apply_via_matrix(f)?)
        })
    }

    /// `c a`.
    pub fn scaled(&self, c: Scalar) -> Self {
        let a2 = self.clone();
        Self::new(format!("{c} {}", self.name), self.degree_shift, move |f| {
            Ok(a2.apply_via_matrix(f)?.scale(&c))
        })
    }

    /// `Some(c)` if the first `cap + 1` columns are those of `c Id`.
    pub fn scalar_identity_multiple(&self, cap: usize) -> Result<Option<Scalar>> {
        let cols = self.matrix(cap)?;
        let c = cols[0].coeff(0);
        for (j, col) in cols.iter().enumerate() {
            if *col != XPoly::monomial(c.clone(), j) {
                return Ok(None);
            }
        }
        Ok(Some(c))
    }

    /// The coefficient of `x^{n+1}` in the image of `x^n`.
    pub fn slope(&self, n: usize) -> Result<Scalar> {
        Ok(self.column(n)?.coeff(n + 1))
    }

    /// The coefficient of `x^n` in the image of `x^n`.
    pub fn diagonal(&self, n: usize) -> Result<Scalar> {
        Ok(self.column(n)?.coeff(n))
    }
}

/// `z - 1/z`.
pub fn z_minus_inverse() -> Laurent {
    Laurent::from_coeffs(-1, vec![-Scalar::one(), Scalar::zero(), Scalar::one()])
}

/// `(g(z) f(Qz) - g(1/z) f(z/Q)) / (z - 1/z)`.
pub fn skew_difference_laurent(g: &Laurent, q: &Scalar, f: &Laurent) -> Result<Laurent> {
    let num = &(g * &f.dilate(q)?) - &(&g.reflect() * &f.dilate(&q.recip())?);
    num.divide_exact(&z_minus_inverse())
}

/// The operator `f -> (g(z) f[Qz] - g(1/z) f[z/Q]) / (z - 1/z)`.
pub fn skew_difference(name: &str, g: Laurent, q: Scalar) -> PolyOperator {
    let shift = g.hi().unwrap_or(0) - 1;
    PolyOperator::on_laurent(name, shift, move |f| skew_difference_laurent(&g, &q, f))
}

/// Skew operator of Askey-Wilson type for the numerator `P(z)`:
/// `(P(z) z^-2 f[Qz] - P(1/z) z^2 f[z/Q]) / (z - 1/z)`.
pub fn aw_type_l(name: &str, numerator: &Laurent, q: Scalar) -> PolyOperator {
    skew_difference(name, numerator.shift(-2), q)
}

/// `E(z) = (1 - z^2)(1 - Q z^2)`.
fn aw_denominator(q: &Scalar) -> Laurent {
    Laurent::from_coeffs(0, vec![Scalar::one(), Scalar::zero(), -(Scalar::one() + q), Scalar::zero(), q.clone()])
}

/// `(D f)` for the second-order operator of Askey-Wilson type with numerator
/// `P(z)`: `(1/2)(1 - 1/Q) D f = v(z) f[Qz] - (v(z) + v(1/z)) f[z] + v(1/z) f[z/Q]`,
/// `v = P / E`. Denominators are cleared and divided out exactly.
pub fn aw_type_d_laurent(numerator: &Laurent, q: &Scalar, f: &Laurent) -> Result<Laurent> {
    let e = aw_denominator(q);
    let er = e.reflect();
    let pr = numerator.reflect();
    let up = numerator * &er;
    let down = &pr * &e;
    let num = &(&(&up * &f.dilate(q)?) - &(&(&up + &down) * f)) + &(&down * &f.dilate(&q.recip())?);
    let scale = int(2) / (Scalar::one() - q.recip());
    Ok(num.divide_exact(&(&e * &er))?.scale(&scale))
}

pub fn aw_type_d(name: &str, numerator: Laurent, q: Scalar) -> PolyOperator {
    PolyOperator::on_laurent(name, 0, move |f| aw_type_d_laurent(&numerator, &q, f))
}

pub fn aw_l(p: &AwParams) -> PolyOperator {
    aw_type_l("L", &p.quartic(), p.q.clone())
}

pub fn aw_d(p: &AwParams) -> PolyOperator {
    aw_type_d("D", p.quartic(), p.q.clone())
}

/// `L = (1 - x^2) d/dx - (alpha - beta + (alpha + beta + 2) x) / 2`.
pub fn jacobi_l(p: &JacobiParams) -> PolyOperator {
    let one_minus_x2 = XPoly::from_coeffs(vec![int(1), int(0), int(-1)]);
    let shift = XPoly::from_coeffs(vec![
        (&p.alpha - &p.beta) / int(2),
        (&p.alpha + &p.beta + int(2)) / int(2),
    ]);
    PolyOperator::new("L", 1, move |f| Ok(&(&one_minus_x2 * &f.derivative()) - &(&shift * f)))
}

/// `D = (1/2)(1 - x^2) d^2/dx^2 + (1/2)(beta - alpha - (alpha + beta + 2) x) d/dx`.
pub fn jacobi_d(p: &JacobiParams) -> PolyOperator {
    let second = XPoly::from_coeffs(vec![rat(1, 2), int(0), rat(-1, 2)]);
    let first = XPoly::from_coeffs(vec![
        (&p.beta - &p.alpha) / int(2),
        -(&p.alpha + &p.beta + int(2)) / int(2),
    ]);
    PolyOperator::new("D", 0, move |f| {
        let d1 = f.derivative();
        Ok(&(&second * &d1.derivative()) + &(&first * &d1))
    })
}

/// `L` for the half-base restriction, built from
/// `v(z) = (1 - q^{a/2+1/4} z)(1 + q^{b/2+1/4} z)(1 - q^{1/2} z^2) z^-2` with step `q^{1/2}`.
pub fn cqjacobi_l(p: &CqJacobiParams) -> Result<PolyOperator> {
    let s2 = pow(&p.s, 2);
    let v = &(&Laurent::linear_product([&p.q_alpha()?, &(-p.q_beta()?)])
        * &Laurent::from_coeffs(0, vec![int(1), int(0), -s2.clone()]))
        .shift(-2);
    Ok(skew_difference("L", v.clone(), s2))
}

/// `L~` for the full-base restriction, built from the quartic
/// `(1 - q^{a/2+1/4} z)(1 - q^{a/2+3/4} z)(1 + q^{b/2+1/4} z)(1 + q^{b/2+3/4} z) z^-2`
/// with step `q`.
pub fn cqjacobi_ltilde(p: &CqJacobiParams) -> Result<PolyOperator> {
    let s2 = pow(&p.s, 2);
    let (qa, qb) = (p.q_alpha()?, p.q_beta()?);
    let roots = [qa.clone(), &qa * &s2, -qb.clone(), -(&qb * &s2)];
    let v = Laurent::linear_product(roots.iter()).shift(-2);
    Ok(skew_difference("L~", v, p.q()))
}

/// `D` for the continuous q-Jacobi family under a given restriction.
pub fn cqjacobi_d(p: &CqJacobiParams, embedding: QJacobiEmbedding) -> Result<PolyOperator> {
    Ok(aw_d(&p.aw_params(embedding)?))
}

/// `(Lf)[z] = ((1 - t z^2)(z^-2 - q^{1/2}) f[q^{1/2} z] - (1 - t z^-2)(z^2 - q^{1/2}) f[q^{-1/2} z]) / (z - 1/z)`.
pub fn cqultra_l(p: &CqUltraParams) -> PolyOperator {
    skew_difference("L", cqultra_l_kernel(p), p.s.clone())
}

/// `(1 - t z^2)(z^-2 - q^{1/2})`.
pub fn cqultra_l_kernel(p: &CqUltraParams) -> Laurent {
    let a = Laurent::from_coeffs(0, vec![int(1), int(0), -p.t.clone()]);
    let b = Laurent::from_coeffs(-2, vec![int(1), int(0), -p.s.clone()]);
    &a * &b
}

/// Second-order operator with numerator `(1 - t z^2)(1 - q^{1/2} z^2)` and step `q^{1/2}`.
pub fn cqultra_d(p: &CqUltraParams) -> PolyOperator {
    let num = &Laurent::from_coeffs(0, vec![int(1), int(0), -p.t.clone()])
        * &Laurent::from_coeffs(0, vec![int(1), int(0), -p.s.clone()]);
    aw_type_d("D", num, p.s.clone())
}

/// `(Lf)(x) = ((1 - x)(1 + b x / c) f(qx) - (1 - x/(aq))(1 + x/(cq)) f(x/q)) / x`.
pub fn bigq_l(p: &BigQParams) -> Result<PolyOperator> {
    let (a, b, c, q) = (&p.a, &p.b, &p.c, &p.q);
    if a.is_zero() || c.is_zero() {
        return Err(Error::Inadmissible("a and c must be nonzero".into()));
    }
    let up = &XPoly::from_coeffs(vec![int(1), int(-1)]) * &XPoly::from_coeffs(vec![int(1), b / c]);
    let down = &XPoly::from_coeffs(vec![int(1), -(a * q).recip()]) * &XPoly::from_coeffs(vec![int(1), (c * q).recip()]);
    let q = q.clone();
    Ok(PolyOperator::new("L", 1, move |f| {
        let num = &(&up * &f.dilate(&q)?) - &(&down * &f.dilate(&q.recip())?);
        num.div_x()
    }))
}

/// `D(1) = 0`, `D(x^n) = sum_{k<n} X^k L(x^{n-k-1})`, computed through
/// `D(x^n) = L(x^{n-1}) + x D(x^{n-1})`.
pub fn d_from_l(l: &PolyOperator) -> PolyOperator {
    let l2 = l.clone();
    PolyOperator::new(format!("D[{}]", l.name()), l.degree_shift() - 1, move |f| {
        let mut acc = XPoly::zero();
        let mut col = XPoly::zero();
        for (j, c) in f.coeffs().iter().enumerate() {
            if j > 0 {
                col = &l2.column(j - 1)? + &col.mul_x();
            }
            if !c.is_zero() {
                acc = &acc + &col.scale(c);
            }
        }
        Ok(acc)
    })
}

/// The family's skew operator `L` (`L~` for the full-base restriction).
pub fn family_l(spec: &FamilySpec) -> Result<PolyOperator> {
    match spec {
        FamilySpec::AskeyWilson(p) => Ok(aw_l(p)),
        FamilySpec::Jacobi(p) => Ok(jacobi_l(p)),
        FamilySpec::CqJacobi(p) => match p.embedding {
            QJacobiEmbedding::HalfBase => cqjacobi_l(p),
            QJacobiEmbedding::FullBase => cqjacobi_ltilde(p),
        },
        FamilySpec::CqUltra(p) => Ok(cqultra_l(p)),
        FamilySpec::BigQJacobi(p) => bigq_l(p),
    }
}

/// The family's explicit second-order operator, if it has one.
pub fn family_d_explicit(spec: &FamilySpec) -> Result<Option<PolyOperator>> {
    Ok(match spec {
        FamilySpec::AskeyWilson(p) => Some(aw_d(p)),
        FamilySpec::Jacobi(p) => Some(jacobi_d(p)),
        FamilySpec::CqJacobi(p) => Some(cqjacobi_d(p, p.embedding)?),
        FamilySpec::CqUltra(p) => Some(cqultra_d(p)),
        FamilySpec::BigQJacobi(_) => None,
    })
}

/// The explicit `D` where available, otherwise `D` reconstructed from `L`.
pub fn family_d(spec: &FamilySpec) -> Result<PolyOperator> {
    match family_d_explicit(spec)? {
        Some(d) => Ok(d),
        None => Ok(d_from_l(&family_l(spec)?)),
    }
}

/// `L` obtained by specializing the Askey-Wilson operator, as a second
/// construction path for the restricted families.
pub fn family_l_via_aw(spec: &FamilySpec) -> Result<Option<PolyOperator>> {
    Ok(match spec {
        FamilySpec::CqJacobi(p) => Some(aw_l(&p.aw_params(p.embedding)?)),
        FamilySpec::CqUltra(p) => p.aw_params().map(|aw| aw_l(&aw)),
        _ => None,
    })
}

/// Whether two operators agree on `x^0..=x^cap`.
pub fn matrices_equal(a: &PolyOperator, b: &PolyOperator, cap: usize) -> Result<bool> {
    Ok(a.matrix(cap)? == b.matrix(cap)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::askey_wilson::aw_polynomial;
    use crate::families::jacobi::jacobi_polynomial;

    fn aw() -> AwParams {
        AwParams::new(rat(1, 3), rat(1, 4), rat(1, 5), rat(-1, 6), rat(1, 2))
    }

    #[test]
    fn x_raises_degree() {
        assert_eq!(PolyOperator::x().apply(&XPoly::one()).unwrap(), XPoly::x());
    }

    #[test]
    fn aw_l_on_constant_has_slope_gamma_zero() {
        let p = aw();
        let l1 = aw_l(&p).apply(&XPoly::one()).unwrap();
        assert_eq!(l1.degree(), Some(1));
        assert_eq!(l1.leading(), int(2) * (p.abcd() - int(1)));
    }

    #[test]
    fn aw_d_eigenvalues() {
        let p = aw();
        let d = aw_d(&p);
        assert!(d.apply(&XPoly::one()).unwrap().is_zero());
        for n in 0..6 {
            let pn = aw_polynomial(n, &p).unwrap();
            let lam = crate::families::askey_wilson::aw_lambda(n, &p.abcd(), &p.q);
            assert_eq!(d.apply(&pn).unwrap(), pn.scale(&lam), "n = {n}");
        }
    }

    #[test]
    fn commutator_of_aw_d_with_x_is_aw_l() {
        let p = aw();
        let lhs = PolyOperator::commutator(&aw_d(&p), &PolyOperator::x());
        assert!(matrices_equal(&lhs, &aw_l(&p), 8).unwrap());
    }

    #[test]
    fn jacobi_operators() {
        let p = JacobiParams::new(int(1), int(2));
        let l = jacobi_l(&p);
        // L(1) = -(alpha - beta)/2 - (alpha + beta + 2) x / 2
        assert_eq!(l.apply(&XPoly::one()).unwrap(), XPoly::from_coeffs(vec![rat(1, 2), rat(-5, 2)]));
        let d = jacobi_d(&p);
        assert_eq!(d.apply(&XPoly::x()).unwrap(), XPoly::from_coeffs(vec![rat(1, 2), rat(-5, 2)]));
        let p3 = jacobi_polynomial(3, &p).unwrap();
        assert_eq!(d.apply(&p3).unwrap(), p3.scale(&(rat(-1, 2) * int(3) * int(7))));
        let string = PolyOperator::commutator(&PolyOperator::x(), &l);
        let expect = PolyOperator::new("-(1 - X^2)", 2, |f| {
            Ok(&XPoly::from_coeffs(vec![int(-1), int(0), int(1)]) * f)
        });
        assert!(matrices_equal(&string, &expect, 10).unwrap());
    }

    #[test]
    fn bigq_l_on_constant() {
        let p = BigQParams::new(rat(1, 3), rat(1, 4), rat(1, 5), rat(1, 2));
        let (a, b, c, q) = (&p.a, &p.b, &p.c, &p.q);
        let l1 = bigq_l(&p).unwrap().apply(&XPoly::one()).unwrap();
        let c0 = (b / c - int(1)) - ((c * q).recip() - (a * q).recip());
        let c1 = (a * c * q * q).recip() - b / c;
        assert_eq!(l1, XPoly::from_coeffs(vec![c0, c1]));
        let l = bigq_l(&p).unwrap();
        for n in 0..=10 {
            assert_eq!(l.column(n).unwrap().degree(), Some(n + 1));
        }
    }

    #[test]
    fn d_from_l_basics() {
        let p = aw();
        let l = aw_l(&p);
        let d = d_from_l(&l);
        assert!(d.apply(&XPoly::one()).unwrap().is_zero());
        assert_eq!(d.apply(&XPoly::x()).unwrap(), l.apply(&XPoly::one()).unwrap());
        let diff = PolyOperator::sub(&d, &aw_d(&p));
        assert!(diff.scalar_identity_multiple(8).unwrap().is_some());
    }

    #[test]
    fn matrix_and_action_agree() {
        let l = aw_l(&aw());
        let f = XPoly::from_coeffs(vec![rat(1, 2), int(-3), int(0), rat(2, 7)]);
        assert_eq!(l.apply(&f).unwrap(), l.apply_via_matrix(&f).unwrap());
    }
}
