//! Gauss-Jordan elimination over an exact field.

use super::dense::Matrix;
use crate::error::{Error, Result};
use crate::field::Field;

/// Reduced row echelon form and the pivot column of each nonzero row.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let t = a[(p, j)].clone();
                a[(p, j)] = a[(r, j)].clone();
                a[(r, j)] = t;
            }
        }
        let inv = a[(r, c)].inv().unwrap();
        for j in c..cols {
            a[(r, j)] = a[(r, j)].clone() * inv.clone();
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..cols {
                if a[(r, j)].is_zero() {
                    continue;
                }
                a[(i, j)] = a[(i, j)].clone() - f.clone() * a[(r, j)].clone();
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    rref(m).1.len()
}

/// Basis of `{x : m·x = 0}`, one vector per free column.
pub fn nullspace<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let (r, pivots) = rref(m);
    let cols = m.cols();
    let mut out = Vec::new();
    let mut pi = 0;
    for free in 0..cols {
        if pi < pivots.len() && pivots[pi] == free {
            pi += 1;
            continue;
        }
        let mut v = vec![F::zero(); cols];
        v[free] = F::one();
        for (row, &pc) in pivots.iter().enumerate() {
            if !r[(row, free)].is_zero() {
                v[pc] = -r[(row, free)].clone();
            }
        }
        out.push(v);
    }
    out
}

pub fn inverse<F: Field>(m: &Matrix<F>) -> Result<Matrix<F>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: m.cols(),
        });
    }
    let n = m.rows();
    let mut aug = Matrix::zeros(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, &Matrix::identity(n));
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Singular);
    }
    Ok(r.block(0, n, n, n))
}

pub fn determinant<F: Field>(m: &Matrix<F>) -> F {
    assert!(m.is_square());
    let n = m.rows();
    let mut a = m.clone();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
            return F::zero();
        };
        if p != c {
            for j in 0..n {
                let t = a[(p, j)].clone();
                a[(p, j)] = a[(c, j)].clone();
                a[(c, j)] = t;
            }
            det = -det;
        }
        let pivot = a[(c, c)].clone();
        det = det * pivot.clone();
        let inv = pivot.inv().unwrap();
        for i in c + 1..n {
            if a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone() * inv.clone();
            for j in c..n {
                a[(i, j)] = a[(i, j)].clone() - f.clone() * a[(c, j)].clone();
            }
        }
    }
    det
}

impl<F: Field> Matrix<F> {
    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn nullspace(&self) -> Vec<Vec<F>> {
        nullspace(self)
    }

    pub fn inverse(&self) -> Result<Self> {
        inverse(self)
    }

    pub fn determinant(&self) -> F {
        determinant(self)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && rank(self) == self.rows()
    }

    /// `mⁿ = 0` for an `n×n` matrix.
    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows() as u32).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::scalar::RatFunc;
    use num_traits::{One, Zero};

    type M = Matrix<RatFunc>;

    fn q() -> RatFunc {
        RatFunc::q()
    }

    #[test]
    fn unit_matrix_is_nilpotent() {
        let e12 = M::unit(4, 0, 1);
        assert!(e12.is_nilpotent());
        assert!(!e12.is_invertible());
        assert_eq!(e12.inverse(), Err(Error::Singular));
    }

    #[test]
    fn diagonal_inverse() {
        let m = M::diag(vec![RatFunc::q_pow(2), q(), q(), RatFunc::one()]);
        let inv = m.inverse().unwrap();
        assert_eq!(
            inv,
            M::diag(vec![
                RatFunc::q_pow(-2),
                RatFunc::q_pow(-1),
                RatFunc::q_pow(-1),
                RatFunc::one()
            ])
        );
        assert_eq!(&m * &inv, M::identity(4));
    }

    #[test]
    fn triangular_with_nonzero_diagonal_is_invertible() {
        // diag(q²,q²,q,q) − q·e₂₃
        let mut c22 = M::diag(vec![RatFunc::q_pow(2), RatFunc::q_pow(2), q(), q()]);
        c22[(1, 2)] = -q();
        assert!(c22.is_invertible());
        let inv = c22.inverse().unwrap();
        assert_eq!(&inv * &c22, M::identity(4));
        assert_eq!(c22.determinant(), RatFunc::q_pow(6));
    }

    #[test]
    fn rank_nullity() {
        // rows (1, q, q²), (q, q², q³): rank 1 over Q(q)
        let m = M::from_rows(vec![
            vec![RatFunc::one(), q(), RatFunc::q_pow(2)],
            vec![q(), RatFunc::q_pow(2), RatFunc::q_pow(3)],
        ])
        .unwrap();
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            let col = Matrix::from_fn(3, 1, |i, _| v[i].clone());
            assert!((&m * &col).is_zero());
        }
    }

    #[test]
    fn determinant_matches_inverse() {
        let m = M::from_rows(vec![
            vec![q(), RatFunc::one()],
            vec![RatFunc::from_i64(2), q()],
        ])
        .unwrap();
        let det = m.determinant();
        assert_eq!(det, &(&q() * &q()) - &RatFunc::from_i64(2));
        assert!(!det.is_zero());
        assert_eq!(&m * &m.inverse().unwrap(), M::identity(2));
    }
}
