//! q-Pochhammer symbols, q-derivatives and the divided q-difference.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_algebra::{int, Laurent, Scalar, SymLaurent, XPoly};

/// Finite q-shifted factorial `(a; q)_n = prod_{j<n} (1 - a q^j)`.
pub fn q_pochhammer(a: &Scalar, q: &Scalar, n: usize) -> Scalar {
    let mut acc = Scalar::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= Scalar::one() - &term;
        term *= q;
    }
    acc
}

/// Product of several finite q-shifted factorials with a common base.
pub fn q_pochhammer_prod(params: &[Scalar], q: &Scalar, n: usize) -> Scalar {
    params.iter().map(|a| q_pochhammer(a, q, n)).product()
}

/// `(x; q)_k` as a polynomial in `x`.
pub fn x_pochhammer(q: &Scalar, k: usize) -> XPoly {
    let mut acc = XPoly::one();
    let mut qj = Scalar::one();
    for _ in 0..k {
        acc = &acc * &XPoly::from_coeffs(vec![Scalar::one(), -qj.clone()]);
        qj *= q;
    }
    acc
}

/// `(a z, a/z; q)_k` as a polynomial in `x = (z + 1/z)/2`:
/// each factor is `1 - 2 a q^j x + a^2 q^{2j}`.
pub fn circle_pochhammer(a: &Scalar, q: &Scalar, k: usize) -> XPoly {
    let mut acc = XPoly::one();
    let mut aqj = a.clone();
    for _ in 0..k {
        let factor = XPoly::from_coeffs(vec![Scalar::one() + &aqj * &aqj, -(&aqj * int(2))]);
        acc = &acc * &factor;
        aqj *= q;
    }
    acc
}

/// `(D_q f)(x) = (f(x) - f(qx)) / ((1 - q) x)`.
pub fn q_derivative(f: &XPoly, q: &Scalar) -> Result<XPoly> {
    if q.is_one() {
        return Err(Error::DivisionByZero("q-derivative at q = 1".into()));
    }
    let num = f - &f.dilate(q)?;
    Ok(num.div_x()?.scale(&(Scalar::one() - q).recip()))
}

/// Central q-derivative `(g(qx) - g(x/q)) / ((q - 1/q) x)`.
pub fn central_q_derivative(g: &XPoly, q: &Scalar) -> Result<XPoly> {
    if q.is_zero() || q.is_one() || *q == -Scalar::one() {
        return Err(Error::DivisionByZero("central q-derivative needs q not in {0, 1, -1}".into()));
    }
    let qi = q.recip();
    let num = &g.dilate(q)? - &g.dilate(&qi)?;
    Ok(num.div_x()?.scale(&(q - &qi).recip()))
}

/// Divided q-difference on symmetric Laurent polynomials, parametrized by
/// `q_half = q^{1/2}`:
/// `2 (g[q^{1/2} z] - g[q^{-1/2} z]) / ((q^{1/2} - q^{-1/2}) (z - 1/z))`.
pub fn divided_q_difference(g: &SymLaurent, q_half: &Scalar) -> Result<SymLaurent> {
    if q_half.is_zero() || q_half.is_one() || *q_half == -Scalar::one() {
        return Err(Error::DivisionByZero("divided q-difference needs q^(1/2) not in {0, 1, -1}".into()));
    }
    let gl = g.to_laurent();
    let inv = q_half.recip();
    let num = (&gl.dilate(q_half)? - &gl.dilate(&inv)?).scale(&(int(2) / (q_half - &inv)));
    let z_minus = Laurent::from_coeffs(-1, vec![-Scalar::one(), Scalar::zero(), Scalar::one()]);
    num.divide_exact(&z_minus)?.to_sym()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::{pow, rat};

    #[test]
    fn pochhammer_values() {
        let a = rat(2, 7);
        let q = rat(1, 3);
        assert_eq!(q_pochhammer(&a, &q, 0), int(1));
        assert_eq!(q_pochhammer(&a, &q, 1), int(1) - &a);
        assert_eq!(q_pochhammer(&rat(1, 2), &rat(1, 2), 2), rat(3, 8));
    }

    #[test]
    fn q_derivative_of_monomials() {
        let q = rat(1, 3);
        assert_eq!(q_derivative(&XPoly::constant(int(5)), &q).unwrap(), XPoly::zero());
        assert_eq!(q_derivative(&XPoly::x(), &q).unwrap(), XPoly::one());
        assert_eq!(
            q_derivative(&XPoly::monomial(int(1), 2), &q).unwrap(),
            XPoly::monomial(int(1) + &q, 1)
        );
        assert!(q_derivative(&XPoly::x(), &int(1)).is_err());
    }

    #[test]
    fn central_q_derivative_of_monomials() {
        let q = rat(2, 5);
        assert_eq!(central_q_derivative(&XPoly::one(), &q).unwrap(), XPoly::zero());
        assert_eq!(central_q_derivative(&XPoly::x(), &q).unwrap(), XPoly::one());
        assert_eq!(
            central_q_derivative(&XPoly::monomial(int(1), 2), &q).unwrap(),
            XPoly::monomial(&q + q.recip(), 1)
        );
    }

    #[test]
    fn bracket_ratios_on_higher_monomials() {
        let q = rat(3, 7);
        for n in 1..=8usize {
            let xn = XPoly::monomial(int(1), n);
            let dq = q_derivative(&xn, &q).unwrap();
            let expect = (int(1) - pow(&q, n as i64)) / (int(1) - &q);
            assert_eq!(dq, XPoly::monomial(expect, n - 1));
            let cq = central_q_derivative(&xn, &q).unwrap();
            let expect = (pow(&q, n as i64) - pow(&q, -(n as i64))) / (&q - q.recip());
            assert_eq!(cq, XPoly::monomial(expect, n - 1));
        }
    }

    #[test]
    fn divided_difference_small_cases() {
        let h = rat(1, 2);
        assert_eq!(divided_q_difference(&SymLaurent::one(), &h).unwrap(), SymLaurent::zero());
        assert_eq!(
            divided_q_difference(&SymLaurent::basis(1), &h).unwrap(),
            SymLaurent::one().scale(&int(2))
        );
        // z^2 + z^-2: numerator 2(q - 1/q)(z^2 - z^-2)/(q^{1/2} - q^{-1/2}),
        // divided by z - 1/z gives 2(q^{1/2} + q^{-1/2})(z + 1/z).
        let got = divided_q_difference(&SymLaurent::basis(2), &h).unwrap();
        let expect = SymLaurent::basis(1).scale(&(int(2) * (&h + h.recip())));
        assert_eq!(got, expect);
    }

    #[test]
    fn x_pochhammer_vanishes_at_one() {
        let q = rat(1, 2);
        for k in 1..5 {
            assert!(x_pochhammer(&q, k).eval(&int(1)).is_zero());
        }
        assert_eq!(x_pochhammer(&q, 0), XPoly::one());
    }
}
