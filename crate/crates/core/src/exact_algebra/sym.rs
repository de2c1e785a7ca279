use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::Laurent;
use super::scalar::{int, Scalar};
use super::xpoly::XPoly;

/// A symmetric Laurent polynomial `c_0 + sum_{k>=1} c_k (z^k + z^-k)`.
///
/// These are exactly the polynomials in `x = (z + 1/z)/2`; see [`sym_to_x`]
/// and [`x_to_sym`].
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct SymLaurent {
    c: Vec<Scalar>,
}

impl SymLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![Scalar::one()])
    }

    pub fn from_coeffs(mut c: Vec<Scalar>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Self { c }
    }

    /// `z^k + z^-k` (or `1` for `k = 0`).
    pub fn basis(k: usize) -> Self {
        let mut c = vec![Scalar::zero(); k + 1];
        c[k] = Scalar::one();
        Self::from_coeffs(c)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn to_laurent(&self) -> Laurent {
        let n = match self.degree() {
            None => return Laurent::zero(),
            Some(n) => n,
        };
        let mut out = Vec::with_capacity(2 * n + 1);
        out.extend(self.c.iter().rev().cloned());
        out.extend(self.c.iter().skip(1).cloned());
        Laurent::from_coeffs(-(n as i64), out)
    }

    pub fn to_x(&self) -> XPoly {
        sym_to_x(self)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::from_coeffs(self.c.iter().map(|x| x * s).collect())
    }
}

/// Chebyshev polynomials of the first kind, `T_0..=T_n`, as x-polynomials.
fn chebyshev_t(n: usize) -> Vec<XPoly> {
    let mut t = vec![XPoly::one()];
    if n >= 1 {
        t.push(XPoly::x());
    }
    for k in 1..n {
        let next = &t[k].mul_x().scale(&int(2)) - &t[k - 1];
        t.push(next);
    }
    t
}

/// `f[z] -> f(x)` with `f(x(z)) = f[z]`, using `z^k + z^-k = 2 T_k(x)`.
pub fn sym_to_x(f: &SymLaurent) -> XPoly {
    let n = match f.degree() {
        None => return XPoly::zero(),
        Some(n) => n,
    };
    let t = chebyshev_t(n);
    let mut out = XPoly::constant(f.c[0].clone());
    for (k, ck) in f.c.iter().enumerate().skip(1) {
        if !ck.is_zero() {
            out = &out + &t[k].scale(&(ck * int(2)));
        }
    }
    out
}

/// `f(x) -> f[z]`, expanding `x^n = 2^-n (z + 1/z)^n` binomially.
pub fn x_to_sym(f: &XPoly) -> SymLaurent {
    let n = match f.degree() {
        None => return SymLaurent::zero(),
        Some(n) => n,
    };
    let mut c = vec![Scalar::zero(); n + 1];
    let mut binom: Vec<Scalar> = vec![Scalar::one()];
    let mut two_pow = Scalar::one();
    for (m, fm) in f.coeffs().iter().enumerate() {
        if m > 0 {
            let mut next = vec![Scalar::one(); m + 1];
            for j in 1..m {
                next[j] = &binom[j - 1] + &binom[j];
            }
            binom = next;
            two_pow /= int(2);
        }
        if fm.is_zero() {
            continue;
        }
        // x^m = 2^-m sum_j C(m, j) z^(m - 2j); fold k = |m - 2j| into c_k.
        for (j, b) in binom.iter().enumerate().take(m / 2 + 1) {
            c[m - 2 * j] += fm * b * &two_pow;
        }
    }
    SymLaurent::from_coeffs(c)
}

impl Add<&SymLaurent> for &SymLaurent {
    type Output = SymLaurent;
    fn add(self, rhs: &SymLaurent) -> SymLaurent {
        let n = self.c.len().max(rhs.c.len());
        let get = |v: &[Scalar], i: usize| v.get(i).cloned().unwrap_or_else(Scalar::zero);
        SymLaurent::from_coeffs((0..n).map(|i| get(&self.c, i) + get(&rhs.c, i)).collect())
    }
}

impl Sub<&SymLaurent> for &SymLaurent {
    type Output = SymLaurent;
    fn sub(self, rhs: &SymLaurent) -> SymLaurent {
        self + &(-rhs)
    }
}

impl Mul<&SymLaurent> for &SymLaurent {
    type Output = SymLaurent;
    fn mul(self, rhs: &SymLaurent) -> SymLaurent {
        (&self.to_laurent() * &rhs.to_laurent())
            .to_sym()
            .expect("product of symmetric Laurent polynomials is symmetric")
    }
}

impl Neg for &SymLaurent {
    type Output = SymLaurent;
    fn neg(self) -> SymLaurent {
        SymLaurent {
            c: self.c.iter().map(|x| -x).collect(),
        }
    }
}

crate::forward_owned_ops!(SymLaurent);
