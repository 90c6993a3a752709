use super::{Matrix, Polynomial, Scalar};
use num_traits::{One, Zero};
use std::ops::{Mul, Neg, Sub};

/// Commutative ring without zero divisors and with exact division, enough for
/// fraction-free elimination.
pub trait IntegralDomain:
    Clone + Zero + One + PartialEq + Mul<Output = Self> + Sub<Output = Self> + Neg<Output = Self>
{
    /// `self / rhs`, where the caller guarantees `rhs` divides `self`.
    fn div_exact(&self, rhs: &Self) -> Self;
}

impl<T: Scalar> IntegralDomain for T {
    fn div_exact(&self, rhs: &Self) -> Self {
        debug_assert!((self.clone() % rhs.clone()).is_zero());
        self.clone() / rhs.clone()
    }
}

impl<T: Scalar> IntegralDomain for Polynomial<T> {
    fn div_exact(&self, rhs: &Self) -> Self {
        Polynomial::div_exact(self, rhs).expect("Bareiss division must be exact")
    }
}

/// Determinant by Bareiss fraction-free elimination.
pub fn determinant<T: IntegralDomain>(m: &Matrix<T>) -> T {
    let n = m.dim();
    if n == 0 {
        return T::one();
    }
    let mut a = m.clone();
    let mut prev = T::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return T::zero(),
            }
        }
        let pivot = a[(k, k)].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = pivot.clone() * a[(i, j)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                a[(i, j)] = v.div_exact(&prev);
            }
            a[(i, k)] = T::zero();
        }
        prev = pivot;
    }
    let d = a[(n - 1, n - 1)].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// `det(xI - m)` by Berkowitz's division-free algorithm.
pub fn charpoly<T: Scalar>(m: &Matrix<T>) -> Polynomial<T> {
    let n = m.dim();
    // descending coefficients of the characteristic polynomial of the leading r x r block
    let mut p: Vec<T> = vec![T::one()];
    for r in 0..n {
        // q = (1, -a_rr, -R C, -R A C, ..., -R A^(r-1) C) with A the leading r x r block,
        // R = row r left of the diagonal, C = column r above the diagonal.
        let mut q: Vec<T> = Vec::with_capacity(r + 2);
        q.push(T::one());
        q.push(-m[(r, r)].clone());
        let mut v: Vec<T> = (0..r).map(|i| m[(i, r)].clone()).collect();
        for k in 0..r {
            let rv = (0..r).fold(T::zero(), |acc, j| acc + m[(r, j)].clone() * v[j].clone());
            q.push(-rv);
            if k + 1 < r {
                v = (0..r)
                    .map(|i| {
                        (0..r).fold(T::zero(), |acc, j| acc + m[(i, j)].clone() * v[j].clone())
                    })
                    .collect();
            }
        }
        // p <- Toeplitz(q) * p
        let next: Vec<T> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r)).fold(T::zero(), |acc, j| {
                    acc + q.get(i - j).cloned().unwrap_or_else(T::zero) * p[j].clone()
                })
            })
            .collect();
        p = next;
    }
    p.reverse();
    Polynomial::new(p)
}

/// `c(x) = cof(xI - m)`, so that `det(xI - m + yJ) = charpoly(m) + y c(x)`.
pub fn cof_polynomial<T: Scalar>(m: &Matrix<T>) -> Polynomial<T> {
    let j = Matrix::all_ones(m.dim());
    &charpoly(&(m - &j)) - &charpoly(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type M = Matrix<BigInt>;
    type P = Polynomial<BigInt>;

    use crate::linalg::oracle::laplace_det;

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&M::identity(3)), BigInt::from(1));
        let atrs_star = M::from_i64_rows(&[
            &[5, 0, 0, -1],
            &[0, 5, 0, -1],
            &[0, 0, 5, -1],
            &[-1, -1, -1, 3],
        ]);
        assert_eq!(determinant(&atrs_star), BigInt::from(300));
        let lk3 = M::from_i64_rows(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]);
        assert_eq!(determinant(&lk3), BigInt::from(0));
        assert_eq!(determinant(&M::zeros(0)), BigInt::from(1));
    }

    #[test]
    fn determinant_needs_pivoting() {
        let m = M::from_i64_rows(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_eq!(determinant(&m), laplace_det(&m));
        assert_eq!(determinant(&m), BigInt::from(-2));
    }

    #[test]
    fn charpoly_examples() {
        let ak2 = M::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(charpoly(&ak2), P::from_i64(&[-1, 0, 1]));
        let ak3 = M::from_i64_rows(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        assert_eq!(charpoly(&ak3), P::from_i64(&[-2, -3, 0, 1]));
        let lk2 = M::from_i64_rows(&[&[1, -1], &[-1, 1]]);
        assert_eq!(charpoly(&lk2), P::from_i64(&[0, -2, 1]));
        assert_eq!(charpoly(&M::zeros(0)), P::one());
    }

    #[test]
    fn cof_examples() {
        let ak2 = M::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(cof_polynomial(&ak2), P::from_i64(&[2, 2]));
        assert_eq!(cof_polynomial(&M::zeros(1)), P::one());
        // cof(-L(K_3)) sums nine cofactors, each equal to the 3 spanning trees
        let lk3 = M::from_i64_rows(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]);
        let c0 = cof_polynomial(&lk3).coeff(0);
        assert_eq!(c0, BigInt::from(27));
        // det(-L + 2J) = det(-L) + 2 cof(-L)
        let shifted = lk3.shifted(&BigInt::from(0), &BigInt::from(2));
        assert_eq!(laplace_det(&shifted), BigInt::from(2) * &c0);
    }

    #[test]
    fn generic_over_machine_integers() {
        let m: Matrix<i64> = Matrix::from_i64_rows(&[&[2, 1], &[1, 2]]);
        assert_eq!(determinant(&m), 3);
        assert_eq!(charpoly(&m), Polynomial::from_i64(&[3, -4, 1]));
    }

    #[test]
    fn polynomial_matrix_determinant() {
        // det(xI - A(K_2)) over Z[x]
        let x = P::x();
        let one = P::one();
        let m = Matrix::from_rows(vec![vec![x.clone(), -one.clone()], vec![-one, x]]);
        assert_eq!(determinant(&m), P::from_i64(&[-1, 0, 1]));
    }
}
