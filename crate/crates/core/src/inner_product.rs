//! Inner products through orthogonal expansion: with `f = sum f_n p_n` and
//! `g = sum g_n p_n`, `<f, g> = sum f_n g_n h_n` (normalized by `h_0 = 1`).

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_algebra::{Scalar, XPoly};
use crate::families::{expand_in_basis, FamilyData};
use crate::operators::PolyOperator;

/// Coefficients of `f` in the family basis; `deg f <= N` is required.
pub fn expand_in_family(f: &XPoly, data: &FamilyData) -> Result<Vec<Scalar>> {
    if let Some(d) = f.degree() {
        if d > data.cap {
            return Err(Error::DegreeCap { n: d, cap: data.cap });
        }
    }
    expand_in_basis(f, &data.polys[..=data.cap])
}

/// Bilinear form from two expansions.
pub fn inner_from_expansions(f: &[Scalar], g: &[Scalar], data: &FamilyData) -> Scalar {
    f.iter()
        .zip(g)
        .zip(&data.norms)
        .map(|((a, b), h)| a * b * h)
        .sum()
}

pub fn inner(f: &XPoly, g: &XPoly, data: &FamilyData) -> Result<Scalar> {
    Ok(inner_from_expansions(&expand_in_family(f, data)?, &expand_in_family(g, data)?, data))
}

/// The matrices `G_ij = <op x^i, x^j>` and `G'_ij = <x^i, op x^j>` for
/// `i, j <= max_deg`, row-major.
pub fn pairing_matrices(op: &PolyOperator, data: &FamilyData, max_deg: usize) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    let basis: Vec<Vec<Scalar>> = (0..=max_deg)
        .map(|i| expand_in_family(&XPoly::monomial(Scalar::from_integer(1.into()), i), data))
        .collect::<Result<_>>()?;
    let images: Vec<Vec<Scalar>> = (0..=max_deg)
        .map(|i| expand_in_family(&op.column(i)?, data))
        .collect::<Result<_>>()?;
    let mut left = Vec::with_capacity((max_deg + 1).pow(2));
    let mut right = Vec::with_capacity((max_deg + 1).pow(2));
    for i in 0..=max_deg {
        for j in 0..=max_deg {
            left.push(inner_from_expansions(&images[i], &basis[j], data));
            right.push(inner_from_expansions(&basis[i], &images[j], data));
        }
    }
    Ok((left, right))
}

fn max_abs(v: impl Iterator<Item = Scalar>) -> Scalar {
    v.map(|x| x.abs()).max().unwrap_or_else(Scalar::zero)
}

/// `max |<op e_i, e_j> - <e_i, op e_j>|` over monomials of degree `<= max_deg`.
pub fn symmetry_residual(op: &PolyOperator, data: &FamilyData, max_deg: usize) -> Result<Scalar> {
    let (l, r) = pairing_matrices(op, data, max_deg)?;
    Ok(max_abs(l.into_iter().zip(r).map(|(a, b)| a - b)))
}

/// `max |<op e_i, e_j> + <e_i, op e_j>|` over monomials of degree `<= max_deg`.
pub fn skew_symmetry_residual(op: &PolyOperator, data: &FamilyData, max_deg: usize) -> Result<Scalar> {
    let (l, r) = pairing_matrices(op, data, max_deg)?;
    Ok(max_abs(l.into_iter().zip(r).map(|(a, b)| a + b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::{int, rat};
    use crate::families::{AwParams, FamilySpec, JacobiParams};
    use crate::operators::{aw_d, aw_l};

    fn jacobi() -> FamilyData {
        FamilyData::build(FamilySpec::Jacobi(JacobiParams::new(int(1), int(2))), 8).unwrap()
    }

    #[test]
    fn normalization_and_orthogonality() {
        let d = jacobi();
        assert_eq!(inner(d.p(0), d.p(0), &d).unwrap(), int(1));
        assert!(inner(d.p(1), d.p(0), &d).unwrap().is_zero());
        for m in 0..=6 {
            for n in 0..=6 {
                let v = inner(d.p(m), d.p(n), &d).unwrap();
                assert_eq!(v, if m == n { d.h(n).clone() } else { int(0) });
            }
        }
    }

    #[test]
    fn inner_of_x_with_itself() {
        let d = jacobi();
        let expect = d.b(0) * d.b(0) * d.h(0) + d.a(0) * d.a(0) * d.h(1);
        assert_eq!(inner(&XPoly::x(), &XPoly::x(), &d).unwrap(), expect);
        let e = expand_in_family(&d.p(2).mul_x(), &d).unwrap();
        assert_eq!(e, vec![int(0), d.c(2).clone(), d.b(2).clone(), d.a(2).clone()]);
    }

    #[test]
    fn aw_operators_have_the_right_symmetry() {
        let p = AwParams::new(rat(1, 3), rat(1, 4), rat(1, 5), rat(-1, 6), rat(1, 2));
        let d = FamilyData::build(FamilySpec::AskeyWilson(p.clone()), 8).unwrap();
        assert!(skew_symmetry_residual(&aw_l(&p), &d, 6).unwrap().is_zero());
        assert!(symmetry_residual(&aw_d(&p), &d, 6).unwrap().is_zero());
        assert!(symmetry_residual(&PolyOperator::x(), &d, 6).unwrap().is_zero());
        assert!(!symmetry_residual(&aw_l(&p), &d, 6).unwrap().is_zero());
    }
}
