use std::array;
use std::fmt;
use std::ops::Mul;

use super::{ArithError, Field};

/// Column vector of length `N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector<S, const N: usize>(pub [S; N]);

/// `N x N` matrix stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S, const N: usize>(pub [[S; N]; N]);

impl<S: Field, const N: usize> Vector<S, N> {
    pub fn zero() -> Self {
        Vector(array::from_fn(|_| S::zero()))
    }

    /// Standard basis vector `e_{i+1}` (0-based `i`).
    pub fn basis(i: usize) -> Self {
        Vector(array::from_fn(
            |j| if i == j { S::one() } else { S::zero() },
        ))
    }

    pub fn dot(&self, other: &Self) -> S {
        self.0
            .iter()
            .zip(other.0.iter())
            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn scale(&self, k: &S) -> Self {
        Vector(array::from_fn(|i| self.0[i].clone() * k.clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        Vector(array::from_fn(|i| self.0[i].clone() + other.0[i].clone()))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Vector(array::from_fn(|i| self.0[i].clone() - other.0[i].clone()))
    }

    pub fn neg(&self) -> Self {
        Vector(array::from_fn(|i| -self.0[i].clone()))
    }
}

impl<S: Field> Vector<S, 3> {
    pub fn cross(&self, other: &Self) -> Self {
        let [a1, a2, a3] = &self.0;
        let [b1, b2, b3] = &other.0;
        Vector([
            a2.clone() * b3.clone() - a3.clone() * b2.clone(),
            a3.clone() * b1.clone() - a1.clone() * b3.clone(),
            a1.clone() * b2.clone() - a2.clone() * b1.clone(),
        ])
    }
}

impl<S: Field, const N: usize> Matrix<S, N> {
    pub fn identity() -> Self {
        Matrix(array::from_fn(|i| {
            array::from_fn(|j| if i == j { S::one() } else { S::zero() })
        }))
    }

    pub fn from_rows(rows: [[S; N]; N]) -> Self {
        Matrix(rows)
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(cols: &[Vector<S, N>; N]) -> Self {
        Matrix(array::from_fn(|i| array::from_fn(|j| cols[j].0[i].clone())))
    }

    pub fn entry(&self, row: usize, col: usize) -> &S {
        &self.0[row][col]
    }

    pub fn column(&self, j: usize) -> Vector<S, N> {
        Vector(array::from_fn(|i| self.0[i][j].clone()))
    }

    pub fn transpose(&self) -> Self {
        Matrix(array::from_fn(|i| array::from_fn(|j| self.0[j][i].clone())))
    }

    pub fn scale(&self, k: &S) -> Self {
        Matrix(array::from_fn(|i| {
            array::from_fn(|j| self.0[i][j].clone() * k.clone())
        }))
    }

    pub fn mul_mat(&self, rhs: &Self) -> Self {
        Matrix(array::from_fn(|i| {
            array::from_fn(|j| {
                (0..N).fold(S::zero(), |acc, k| {
                    acc + self.0[i][k].clone() * rhs.0[k][j].clone()
                })
            })
        }))
    }

    pub fn apply(&self, v: &Vector<S, N>) -> Vector<S, N> {
        Vector(array::from_fn(|i| {
            (0..N).fold(S::zero(), |acc, k| {
                acc + self.0[i][k].clone() * v.0[k].clone()
            })
        }))
    }

    pub fn is_identity(&self) -> bool {
        (0..N).all(|i| {
            (0..N).all(|j| {
                let e = &self.0[i][j];
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    /// Determinant by Gaussian elimination over the field.
    pub fn det(&self) -> S {
        let mut a = self.0.clone();
        let mut det = S::one();
        for col in 0..N {
            let Some(pivot) = (col..N).find(|&r| !a[r][col].is_zero()) else {
                return S::zero();
            };
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            let p = a[col][col].clone();
            det = det * p.clone();
            for r in col + 1..N {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone() / p.clone();
                for c in col..N {
                    let t = a[col][c].clone() * factor.clone();
                    a[r][c] = a[r][c].clone() - t;
                }
            }
        }
        det
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self, ArithError> {
        let mut a = self.0.clone();
        let mut inv = Self::identity().0;
        for col in 0..N {
            let pivot = (col..N)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(ArithError::Singular)?;
            a.swap(pivot, col);
            inv.swap(pivot, col);
            let p = a[col][col].clone();
            for c in 0..N {
                a[col][c] = a[col][c].clone() / p.clone();
                inv[col][c] = inv[col][c].clone() / p.clone();
            }
            for r in 0..N {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in 0..N {
                    let t = a[col][c].clone() * factor.clone();
                    a[r][c] = a[r][c].clone() - t;
                    let t = inv[col][c].clone() * factor.clone();
                    inv[r][c] = inv[r][c].clone() - t;
                }
            }
        }
        Ok(Matrix(inv))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(), |acc, _| acc.mul_mat(self))
    }

    /// Smallest `k <= max` with `self^k = I`.
    pub fn order(&self, max: u32) -> Option<u32> {
        let mut acc = Self::identity();
        for k in 1..=max {
            acc = acc.mul_mat(self);
            if acc.is_identity() {
                return Some(k);
            }
        }
        None
    }

    /// `A^T A = I` and `det A = 1`.
    pub fn is_special_orthogonal(&self) -> bool {
        self.transpose().mul_mat(self).is_identity() && self.det().is_one()
    }
}

impl<S: Field, const N: usize> Mul for &Matrix<S, N> {
    type Output = Matrix<S, N>;
    fn mul(self, rhs: Self) -> Matrix<S, N> {
        self.mul_mat(rhs)
    }
}

impl<S: Field, const N: usize> Mul<&Vector<S, N>> for &Matrix<S, N> {
    type Output = Vector<S, N>;
    fn mul(self, rhs: &Vector<S, N>) -> Vector<S, N> {
        self.apply(rhs)
    }
}

impl<S: fmt::Display, const N: usize> fmt::Display for Vector<S, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl<S: fmt::Display, const N: usize> fmt::Display for Matrix<S, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type M = Matrix<Ratio<i64>, 4>;

    fn int(rows: [[i64; 4]; 4]) -> M {
        Matrix(rows.map(|r| r.map(Ratio::from_integer)))
    }

    #[test]
    fn identity_is_neutral() {
        let v = Vector([1, 2, 3, 4].map(Ratio::from_integer));
        assert_eq!(M::identity().apply(&v), v);
    }

    #[test]
    fn det_and_inverse() {
        let a = int([[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        assert_eq!(a.det(), Ratio::from_integer(2));
        assert!(!a.is_special_orthogonal());
        let inv = a.inverse().unwrap();
        assert!(a.mul_mat(&inv).is_identity());
        let singular = int([[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        assert_eq!(singular.det(), Ratio::from_integer(0));
        assert_eq!(singular.inverse(), Err(ArithError::Singular));
    }

    #[test]
    fn row_swap_flips_det_sign() {
        let p = int([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        assert_eq!(p.det(), Ratio::from_integer(-1));
        assert_eq!(p.order(6), Some(2));
    }

    #[test]
    fn works_over_floats() {
        let r: Matrix<f64, 3> = Matrix([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]);
        assert_eq!(r.order(8), Some(4));
        assert!(r.is_special_orthogonal());
    }

    #[test]
    fn cross_product() {
        let x = Vector::<Ratio<i64>, 3>::basis(0);
        let y = Vector::<Ratio<i64>, 3>::basis(1);
        assert_eq!(x.cross(&y), Vector::basis(2));
    }
}
