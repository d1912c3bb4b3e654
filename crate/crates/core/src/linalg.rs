//! Small dense LU factorisation with partial pivoting.

use crate::scalar::Real;

/// Row-major square matrix factorised in place as `P A = L U`.
#[derive(Debug, Clone)]
pub struct Lu<T> {
    dim: usize,
    lu: Vec<T>,
    perm: Vec<usize>,
}

impl<T: Real> Lu<T> {
    /// Returns `None` when a pivot is exactly zero or non-finite.
    pub fn factor(rows: &[Vec<T>]) -> Option<Self> {
        let dim = rows.len();
        let mut lu: Vec<T> = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "matrix must be square");
            lu.extend_from_slice(row);
        }
        let mut perm: Vec<usize> = (0..dim).collect();
        for col in 0..dim {
            let pivot_row = (col..dim)
                .max_by(|&a, &b| {
                    lu[a * dim + col]
                        .abs()
                        .partial_cmp(&lu[b * dim + col].abs())
                        .unwrap_or(std::cmp::Ordering::Equal)
                })
                .unwrap();
            let pivot = lu[pivot_row * dim + col];
            if pivot == T::zero() || !pivot.is_finite() {
                return None;
            }
            if pivot_row != col {
                for c in 0..dim {
                    lu.swap(col * dim + c, pivot_row * dim + c);
                }
                perm.swap(col, pivot_row);
            }
            for r in col + 1..dim {
                let factor = lu[r * dim + col] / pivot;
                lu[r * dim + col] = factor;
                if factor != T::zero() {
                    for c in col + 1..dim {
                        lu[r * dim + c] = lu[r * dim + c] - factor * lu[col * dim + c];
                    }
                }
            }
        }
        Some(Lu { dim, lu, perm })
    }

    pub fn solve(&self, rhs: &[T]) -> Vec<T> {
        let d = self.dim;
        let mut x: Vec<T> = self.perm.iter().map(|&p| rhs[p]).collect();
        for r in 0..d {
            let row = &self.lu[r * d..r * d + r];
            x[r] = row
                .iter()
                .zip(&x[..r])
                .fold(x[r], |acc, (&l, &xc)| acc - l * xc);
        }
        for r in (0..d).rev() {
            let row = &self.lu[r * d + r + 1..(r + 1) * d];
            let acc = row
                .iter()
                .zip(&x[r + 1..])
                .fold(x[r], |acc, (&u, &xc)| acc - u * xc);
            x[r] = acc / self.lu[r * d + r];
        }
        x
    }

    /// `‖A⁻¹‖₁`, from solving against every unit vector.
    pub fn inverse_norm1(&self) -> T {
        let d = self.dim;
        let mut col_sums = vec![T::zero(); d];
        let mut e = vec![T::zero(); d];
        for c in 0..d {
            e[c] = T::one();
            let col = self.solve(&e);
            col_sums[c] = col.iter().fold(T::zero(), |acc, v| acc + v.abs());
            e[c] = T::zero();
        }
        col_sums.into_iter().fold(T::zero(), T::max)
    }
}

pub fn norm1<T: Real>(rows: &[Vec<T>]) -> T {
    let d = rows.first().map_or(0, Vec::len);
    (0..d)
        .map(|c| rows.iter().fold(T::zero(), |acc, r| acc + r[c].abs()))
        .fold(T::zero(), T::max)
}

pub fn mat_vec<T: Real>(rows: &[Vec<T>], x: &[T]) -> Vec<T> {
    rows.iter()
        .map(|r| r.iter().zip(x).fold(T::zero(), |acc, (&a, &b)| acc + a * b))
        .collect()
}

pub fn max_abs<T: Real>(v: &[T]) -> T {
    v.iter().fold(T::zero(), |m, x| m.max(x.abs()))
}
