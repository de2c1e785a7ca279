//! Convergence tables for two limit transitions.
//!
//! The Askey-Wilson to big q-Jacobi limit is computed exactly: `eps` is
//! rational and every deviation is an exact rational, converted to `f64`
//! only for the table. The continuous q-Jacobi to Jacobi limit needs
//! irrational powers `q^{alpha/2 + 1/4}`, so it runs in `f64` complex
//! arithmetic at points `z = e^{i theta}` of the unit circle, away from
//! `z = +-1` where `z - 1/z` vanishes. With `q = 1 - 2^-k` the deviation is of
//! order `1 - q`; rounding contributes about `1e-16 / (1 - q)`, so the noise
//! floor stays far below the deviation for `k <= 20`.

use std::f64::consts::PI;
use std::fmt::Write as _;

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_algebra::scalar::to_f64;
use crate::exact_algebra::{pow, Laurent, Scalar, XPoly};
use crate::families::big_q_jacobi::bigq_polynomial;
use crate::families::jacobi::jacobi_polynomial;
use crate::families::{AwParams, BigQParams, JacobiParams};
use crate::operators::jacobi_l;
use crate::qcalculus::q_pochhammer;
use crate::relations::{aw_structure_coeffs, bigq_structure_coeffs};

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceRow {
    pub step: usize,
    pub parameter: f64,
    pub max_deviation: f64,
    /// Previous deviation over this one; `None` on the first row.
    pub ratio: Option<f64>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ConvergenceTable {
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceTable {
    fn from_pairs(pairs: impl IntoIterator<Item = (f64, f64)>) -> Self {
        let mut rows: Vec<ConvergenceRow> = Vec::new();
        for (step, (parameter, max_deviation)) in pairs.into_iter().enumerate() {
            let ratio = rows.last().map(|r| r.max_deviation / max_deviation);
            rows.push(ConvergenceRow { step, parameter, max_deviation, ratio });
        }
        Self { rows }
    }

    pub const CSV_HEADER: &'static str = "step,parameter_value,max_deviation,ratio";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let ratio = r.ratio.map(|x| format!("{x:e}")).unwrap_or_default();
            let _ = writeln!(out, "{},{:e},{:e},{}", r.step, r.parameter, r.max_deviation, ratio);
        }
        out
    }

    /// Whether `count` consecutive ratios are all at least `factor`.
    pub fn has_run_of_ratios(&self, factor: f64, count: usize) -> bool {
        let mut run = 0;
        for r in &self.rows {
            match r.ratio {
                Some(x) if x >= factor => {
                    run += 1;
                    if run >= count {
                        return true;
                    }
                }
                Some(_) => run = 0,
                None => {}
            }
        }
        count == 0
    }

    /// Whether every ratio is at least `factor`.
    pub fn all_ratios_at_least(&self, factor: f64) -> bool {
        self.rows.iter().filter_map(|r| r.ratio).all(|x| x >= factor)
    }
}

/// Exact deviations at one value of `eps`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsDeviation {
    pub eps: Scalar,
    /// Largest coefficient of the rescaled Askey-Wilson polynomial minus `P_n`.
    pub polynomial: Scalar,
    /// Largest deviation of the two rescaled structure coefficients.
    pub structure: Scalar,
}

/// `eps_k = 2^-(k + 3)`, `k = 0..=steps`.
pub fn eps_sequence(steps: usize) -> Vec<Scalar> {
    (0..=steps).map(|k| pow(&Scalar::new(1.into(), 2.into()), k as i64 + 3)).collect()
}

/// Askey-Wilson parameters `(eps, aq/eps, -cq/eps, -eps b/c | q)`.
pub fn aw_for_bigq(p: &BigQParams, eps: &Scalar) -> AwParams {
    let (a, b, c, q) = (&p.a, &p.b, &p.c, &p.q);
    AwParams::new(eps.clone(), a * q / eps, -(c * q) / eps, -(eps * b / c), q.clone())
}

/// `kappa_n = eps^n / (aq, -cq, -eps^2 b/c; q)_n`.
pub fn eps_normalization(p: &BigQParams, eps: &Scalar, n: usize) -> Result<Scalar> {
    let (a, b, c, q) = (&p.a, &p.b, &p.c, &p.q);
    let den = q_pochhammer(&(a * q), q, n) * q_pochhammer(&(-(c * q)), q, n) * q_pochhammer(&(-(eps * eps * b / c)), q, n);
    if den.is_zero() {
        return Err(Error::Inadmissible("vanishing normalization".into()));
    }
    Ok(pow(eps, n as i64) / den)
}

/// `kappa_n p_n(x_AW)` with `x_AW = (z + 1/z)/2` and `z = x / scale`, as a
/// Laurent polynomial in `x`. The limit needs `scale = eps`.
pub fn rescaled_aw(p: &BigQParams, eps: &Scalar, n: usize, scale: &Scalar) -> Result<Laurent> {
    let aw = aw_for_bigq(p, eps);
    aw.check_admissible(n + 1)?;
    let poly = crate::families::askey_wilson::aw_polynomial(n, &aw)?;
    Ok(poly.to_z_laurent().dilate(&scale.recip())?.scale(&eps_normalization(p, eps, n)?))
}

fn max_abs(l: &Laurent) -> Scalar {
    l.coeffs().iter().map(Signed::abs).max().unwrap_or_else(Scalar::zero)
}

/// Deviation of the rescaled Askey-Wilson data from big q-Jacobi data at one `eps`.
pub fn aw_to_bigq_deviation(p: &BigQParams, n: usize, eps: &Scalar) -> Result<EpsDeviation> {
    let target = bigq_polynomial(n, p)?.as_laurent();
    let polynomial = max_abs(&(&rescaled_aw(p, eps, n, eps)? - &target));
    // L p_n = up p_{n+1} + down p_{n-1}; with P_n = kappa_n p_n and
    // L_big = -eps/(acq^2) L_AW the coefficients pick up kappa ratios.
    let aw = aw_for_bigq(p, eps);
    let (up, down) = aw_structure_coeffs(n, &aw)?;
    let k = |m: usize| eps_normalization(p, eps, m);
    let factor = -(eps / (&p.a * &p.c * &p.q * &p.q));
    let up = &factor * up * k(n)? / k(n + 1)?;
    let down = if n == 0 { Scalar::zero() } else { &factor * down * k(n)? / k(n - 1)? };
    let (bup, bdown) = bigq_structure_coeffs(n, p)?;
    let structure = (up - bup).abs().max((down - bdown).abs());
    Ok(EpsDeviation { eps: eps.clone(), polynomial, structure })
}

/// The Askey-Wilson to big q-Jacobi table: at each `eps` the larger of the
/// polynomial and structure-coefficient deviations.
pub fn limit_aw_to_bigq(p: &BigQParams, n: usize, eps: &[Scalar]) -> Result<(Vec<EpsDeviation>, ConvergenceTable)> {
    let devs = eps.iter().map(|e| aw_to_bigq_deviation(p, n, e)).collect::<Result<Vec<_>>>()?;
    let table = ConvergenceTable::from_pairs(
        devs.iter().map(|d| (to_f64(&d.eps), to_f64(&d.polynomial).max(to_f64(&d.structure)))),
    );
    Ok((devs, table))
}

/// `(a; q)_n` in floating point.
fn poch(a: f64, q: f64, n: usize) -> f64 {
    (0..n).map(|j| 1.0 - a * q.powi(j as i32)).product()
}

/// The Askey-Wilson polynomial from its 4phi3 series at a complex point.
fn aw_eval(n: usize, params: [f64; 4], q: f64, x: Complex64) -> Complex64 {
    let [a, b, c, d] = params;
    let lower = [a * b, a * c, a * d];
    let prefactor = lower.iter().map(|l| poch(*l, q, n)).product::<f64>() / a.powi(n as i32);
    let top1 = q.powi(-(n as i32));
    let top2 = a * b * c * d * q.powi(n as i32 - 1);
    let mut sum = Complex64::zero();
    let mut coef = 1.0;
    let mut prod = Complex64::one();
    for k in 0..=n {
        if k > 0 {
            let qj = q.powi(k as i32 - 1);
            coef *= (1.0 - top1 * qj) * (1.0 - top2 * qj) * q
                / (lower.iter().map(|l| 1.0 - l * qj).product::<f64>() * (1.0 - q * qj));
            prod *= Complex64::one() - x * (2.0 * a * qj) + a * a * qj * qj;
        }
        sum += prod * coef;
    }
    sum * prefactor
}

/// Continuous q-Jacobi `P_n[w; q]` (half-base normalization) at `x = (w + 1/w)/2`.
fn cqjacobi_eval(n: usize, alpha: f64, beta: f64, q: f64, w: Complex64) -> Complex64 {
    let qa = q.powf(alpha / 2.0 + 0.25);
    let qb = q.powf(beta / 2.0 + 0.25);
    let q4 = q.powf(0.25);
    let half = q.sqrt();
    let x = (w + w.inv()) * 0.5;
    let front = qa.powi(n as i32) / (poch(-q.powf((alpha + beta + 1.0) / 2.0), half, n) * poch(q, q, n));
    aw_eval(n, [qa, -qb, q4, -q4], half, x) * front
}

/// `(L_q P_n)[z]` for the half-base skew operator, at a point of the circle.
fn cqjacobi_l_eval(n: usize, alpha: f64, beta: f64, q: f64, z: Complex64) -> Complex64 {
    let qa = q.powf(alpha / 2.0 + 0.25);
    let qb = q.powf(beta / 2.0 + 0.25);
    let half = q.sqrt();
    let v = |u: Complex64| (Complex64::one() - u * qa) * (Complex64::one() + u * qb) * (Complex64::one() - u * u * half) / (u * u);
    let num = v(z) * cqjacobi_eval(n, alpha, beta, q, z * half) - v(z.inv()) * cqjacobi_eval(n, alpha, beta, q, z / half);
    num / (z - z.inv())
}

/// Sample angles in `(0, pi)`, avoiding the endpoints.
fn angles(count: usize) -> impl Iterator<Item = f64> {
    (0..count).map(move |j| PI * (j as f64 + 0.5) / count as f64)
}

/// `max |(2/(1-q)) (L_q P_n)[e^{i theta}] - 4 (L P_n)(cos theta)|` over sample angles.
pub fn cqjacobi_to_jacobi_deviation(alpha: &Scalar, beta: &Scalar, n: usize, q: f64) -> Result<f64> {
    let jp = JacobiParams::new(alpha.clone(), beta.clone());
    let target: XPoly = jacobi_l(&jp).apply(&jacobi_polynomial(n, &jp)?)?;
    let coeffs: Vec<f64> = target.coeffs().iter().map(to_f64).collect();
    let (al, be) = (to_f64(alpha), to_f64(beta));
    let mut worst: f64 = 0.0;
    for theta in angles(16) {
        let z = Complex64::from_polar(1.0, theta);
        let lhs = cqjacobi_l_eval(n, al, be, q, z) * (2.0 / (1.0 - q));
        let x = theta.cos();
        let rhs = 4.0 * coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c);
        let dev = (lhs - rhs).norm();
        if !dev.is_finite() {
            return Err(Error::Numeric(format!("non-finite deviation at q = {q}")));
        }
        worst = worst.max(dev);
    }
    Ok(worst)
}

/// The q -> 1 table over `q = 1 - 2^-k` for the given `k`.
pub fn limit_cqjacobi_to_jacobi(alpha: &Scalar, beta: &Scalar, n: usize, ks: &[u32]) -> Result<ConvergenceTable> {
    if *alpha <= -Scalar::one() || *beta <= -Scalar::one() {
        return Err(Error::Inadmissible("alpha, beta must exceed -1".into()));
    }
    let pairs = ks
        .iter()
        .map(|&k| {
            let q = 1.0 - 0.5f64.powi(k as i32);
            Ok((q, cqjacobi_to_jacobi_deviation(alpha, beta, n, q)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConvergenceTable::from_pairs(pairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::{int, rat};
    use crate::families::cq_jacobi::{cqj_gamma, cqjacobi_polynomial, CqJacobiParams, QJacobiEmbedding};

    fn bigq() -> BigQParams {
        BigQParams::new(rat(1, 3), rat(1, 4), rat(1, 5), rat(1, 2))
    }

    #[test]
    fn degree_zero_is_exact() {
        for e in eps_sequence(3) {
            let d = aw_to_bigq_deviation(&bigq(), 0, &e).unwrap();
            assert!(d.polynomial.is_zero());
        }
    }

    #[test]
    fn eps_deviation_shrinks_at_least_linearly() {
        for n in 1..=3 {
            let (devs, table) = limit_aw_to_bigq(&bigq(), n, &eps_sequence(7)).unwrap();
            assert!(table.all_ratios_at_least(2.0), "n = {n}: {table:?}");
            for d in &devs {
                assert!(d.polynomial <= d.eps, "n = {n}");
            }
        }
    }

    #[test]
    fn stated_argument_collapses_to_a_constant() {
        // with z = x/a the top coefficient is kappa_n (abcd q^{n-1}; q)_n a^-n -> 0
        let p = bigq();
        let e = rat(1, 1 << 12);
        let f = rescaled_aw(&p, &e, 2, &p.a).unwrap();
        assert!(f.coeff(2).abs() < rat(1, 1000));
        let target = bigq_polynomial(2, &p).unwrap();
        assert!((f.coeff(2) - target.coeff(2)).abs() > rat(1, 10));
    }

    #[test]
    fn float_evaluation_matches_exact() {
        let p = CqJacobiParams::new(int(1), int(2), rat(1, 2), QJacobiEmbedding::HalfBase);
        let exact = cqjacobi_polynomial(3, &p, QJacobiEmbedding::HalfBase).unwrap();
        let q = to_f64(&p.q());
        let w = Complex64::from_polar(1.0, 0.7);
        let got = cqjacobi_eval(3, 1.0, 2.0, q, w);
        let x = 0.7f64.cos();
        let want = exact.coeffs().iter().rev().fold(0.0, |acc, c| acc * x + to_f64(c));
        assert!((got - want).norm() < 1e-9 * want.abs().max(1.0));
    }

    #[test]
    fn slope_limit() {
        // (2/(1-q)) gamma_0(q) -> -2(alpha + beta + 2)
        let (al, be) = (1.0, 2.0);
        let q = 1.0 - 2f64.powi(-20);
        let g0 = 2.0 * (q.powf((al + be + 2.0) / 2.0) - 1.0);
        assert!((2.0 / (1.0 - q) * g0 + 2.0 * (al + be + 2.0)).abs() < 1e-4);
        // and the exact slope agrees with the float form at a rational point
        let p = CqJacobiParams::new(int(1), int(2), rat(1, 2), QJacobiEmbedding::HalfBase);
        let qf = to_f64(&p.q());
        let gf = 2.0 * (qf.powf((al + be + 2.0) / 2.0) - 1.0);
        assert!((to_f64(&cqj_gamma(0, &p).unwrap()) - gf).abs() < 1e-12);
    }

    #[test]
    fn q_limit_converges() {
        let ks: Vec<u32> = (3..=10).collect();
        for n in 0..=5 {
            let t = limit_cqjacobi_to_jacobi(&int(1), &int(2), n, &ks).unwrap();
            assert!(t.all_ratios_at_least(1.5), "n = {n}: {t:?}");
        }
        let t = limit_cqjacobi_to_jacobi(&int(1), &int(2), 3, &ks).unwrap();
        assert!(t.to_csv().starts_with("step,parameter_value,max_deviation,ratio\n0,"));
    }
}
