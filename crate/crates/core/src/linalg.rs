//! Exact Gaussian elimination over the rationals.

use num_traits::Zero;

use crate::exact_algebra::Scalar;

/// Basis of the right nullspace of a dense row-major matrix with `cols` columns.
pub fn nullspace(rows: &[Vec<Scalar>], cols: usize) -> Vec<Vec<Scalar>> {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::from_integer(1.into());
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[i][f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::int;

    #[test]
    fn rank_deficient_system() {
        let rows = vec![
            vec![int(1), int(2), int(3)],
            vec![int(2), int(4), int(6)],
            vec![int(1), int(0), int(1)],
        ];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        for row in &rows {
            let dot: Scalar = row.iter().zip(&ns[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn full_rank_has_trivial_nullspace() {
        let rows = vec![vec![int(1), int(1)], vec![int(1), int(-1)]];
        assert!(nullspace(&rows, 2).is_empty());
    }
}
