//! Askey-Wilson polynomials `p_n(x; a, b, c, d | q)`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_algebra::scalar::div;
use crate::exact_algebra::{int, pow, Laurent, Scalar, XPoly};
use crate::qcalculus::{circle_pochhammer, q_pochhammer, q_pochhammer_prod};

/// Parameters `a, b, c, d` and base `q` of an Askey-Wilson family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AwParams {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub d: Scalar,
    pub q: Scalar,
}

impl AwParams {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar, q: Scalar) -> Self {
        Self { a, b, c, d, q }
    }

    pub fn abcd(&self) -> Scalar {
        &self.a * &self.b * &self.c * &self.d
    }

    /// The six pairwise products `ab, ac, ad, bc, bd, cd`.
    pub fn pair_products(&self) -> [Scalar; 6] {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        [a * b, a * c, a * d, b * c, b * d, c * d]
    }

    /// `(1 - az)(1 - bz)(1 - cz)(1 - dz)`, the numerator shared by `L` and `D`.
    pub fn quartic(&self) -> Laurent {
        Laurent::linear_product([&self.a, &self.b, &self.c, &self.d])
    }

    /// Rejects parameters for which some quantity used up to degree `cap`
    /// is undefined: `q` outside `(0, 1)`, `a = 0`, a product in the
    /// exclusion set `{q^-k : k <= 2 cap}`, or a vanishing denominator.
    pub fn check_admissible(&self, cap: usize) -> Result<()> {
        let q = &self.q;
        if *q <= Scalar::zero() || *q >= Scalar::one() {
            return Err(Error::Inadmissible("q must lie in (0, 1)".into()));
        }
        if self.a.is_zero() {
            return Err(Error::Inadmissible("a = 0".into()));
        }
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let mut products = vec![a * a, b * b, c * c, d * d];
        products.extend(self.pair_products());
        for k in 0..=(2 * cap as i64 + 2) {
            let qk = pow(q, -k);
            if products.contains(&qk) {
                return Err(Error::Inadmissible(format!("a parameter product equals q^-{k}")));
            }
        }
        for n in 0..=cap + 1 {
            aw_coefficients(n, self)?;
        }
        Ok(())
    }
}

/// Closed-form coefficient data of the Askey-Wilson family at degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AwCoefficients {
    /// Leading coefficient of `p_n` in `x`.
    pub k: Scalar,
    pub a: Scalar,
    pub b: Scalar,
    /// Zero at `n = 0`.
    pub c: Scalar,
    /// `h_n / h_0`.
    pub h: Scalar,
    pub lambda: Scalar,
    pub gamma: Scalar,
}

/// `k_n = 2^n (abcd q^{n-1}; q)_n`.
pub fn aw_leading(n: usize, p: &AwParams) -> Scalar {
    let s = p.abcd() * pow(&p.q, n as i64 - 1);
    pow(&int(2), n as i64) * q_pochhammer(&s, &p.q, n)
}

/// `h_n / h_0`.
pub fn aw_norm_ratio(n: usize, p: &AwParams) -> Result<Scalar> {
    let q = &p.q;
    let s = p.abcd() / q;
    let mut num = q_pochhammer(q, q, n);
    num *= q_pochhammer_prod(&p.pair_products(), q, n);
    let den = q_pochhammer(&s, q, n);
    let front = div(&(Scalar::one() - &s), &(Scalar::one() - &s * pow(q, 2 * n as i64)))?;
    Ok(front * div(&num, &den)?)
}

/// The three-term recurrence middle coefficient `B_n`.
pub fn aw_b(n: usize, p: &AwParams) -> Result<Scalar> {
    let (a, b, c, d, q) = (&p.a, &p.b, &p.c, &p.d, &p.q);
    let abcd = p.abcd();
    let n = n as i64;
    let e1 = a + b + c + d;
    let e3 = b * c * d + a * b * d + a * c * d + a * b * c;
    let t1 = q - &abcd * pow(q, n - 1) - &abcd * pow(q, n) + &abcd * pow(q, 2 * n);
    let t2 = Scalar::one() - pow(q, n) - pow(q, n + 1) + &abcd * pow(q, 2 * n - 1);
    let den = int(2) * (Scalar::one() - &abcd * pow(q, 2 * n - 2)) * (Scalar::one() - &abcd * pow(q, 2 * n));
    div(&((e1 * t1 + e3 * t2) * pow(q, n - 1)), &den)
}

/// Eigenvalue of `D` on `p_n`: `(1/2)(1 - 1/q) lambda_n = (q^-n - 1)(1 - abcd q^{n-1})`.
pub fn aw_lambda(n: usize, abcd: &Scalar, q: &Scalar) -> Scalar {
    let n = n as i64;
    let rhs = (pow(q, -n) - Scalar::one()) * (Scalar::one() - abcd * pow(q, n - 1));
    int(2) * rhs / (Scalar::one() - q.recip())
}

/// Slope of `L`: `gamma_n = 2 (abcd q^n - q^-n)`.
pub fn aw_gamma(n: usize, abcd: &Scalar, q: &Scalar) -> Scalar {
    let n = n as i64;
    int(2) * (abcd * pow(q, n) - pow(q, -n))
}

pub fn aw_coefficients(n: usize, p: &AwParams) -> Result<AwCoefficients> {
    let k = aw_leading(n, p);
    let k1 = aw_leading(n + 1, p);
    let a = div(&k, &k1)?;
    let h = aw_norm_ratio(n, p)?;
    let c = if n == 0 {
        Scalar::zero()
    } else {
        let a_prev = div(&aw_leading(n - 1, p), &k)?;
        a_prev * div(&h, &aw_norm_ratio(n - 1, p)?)?
    };
    let abcd = p.abcd();
    Ok(AwCoefficients {
        k,
        a,
        b: aw_b(n, p)?,
        c,
        h,
        lambda: aw_lambda(n, &abcd, &p.q),
        gamma: aw_gamma(n, &abcd, &p.q),
    })
}

/// `p_n` from the terminating balanced 4phi3 series, as a polynomial in `x`.
pub fn aw_polynomial(n: usize, p: &AwParams) -> Result<XPoly> {
    let q = &p.q;
    if p.a.is_zero() {
        return Err(Error::Inadmissible("a = 0".into()));
    }
    let [ab, ac, ad, ..] = p.pair_products();
    let lower = [ab, ac, ad];
    let prefactor = div(&q_pochhammer_prod(&lower, q, n), &pow(&p.a, n as i64))?;
    let top1 = pow(q, -(n as i64));
    let top2 = p.abcd() * pow(q, n as i64 - 1);
    let mut sum = XPoly::zero();
    // Running scalar part of the k-th term.
    let mut coef = Scalar::one();
    for k in 0..=n {
        if k > 0 {
            let j = (k - 1) as i64;
            let qj = pow(q, j);
            let num = (Scalar::one() - &top1 * &qj) * (Scalar::one() - &top2 * &qj) * q;
            let den: Scalar = lower.iter().map(|l| Scalar::one() - l * &qj).product::<Scalar>()
                * (Scalar::one() - q * &qj);
            coef *= div(&num, &den).map_err(|_| Error::Inadmissible("zero 4phi3 denominator".into()))?;
        }
        if coef.is_zero() {
            break;
        }
        sum = &sum + &circle_pochhammer(&p.a, q, k).scale(&coef);
    }
    Ok(sum.scale(&prefactor))
}
