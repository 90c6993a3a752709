use super::{determinant, Matrix, Polynomial, Scalar};
use crate::error::{Error, Result};
use num_rational::Ratio;

/// Minor enumeration is combinatorial; C(8,4)^2 = 4900 minors at the widest level.
pub const DETGCD_MAX_N: usize = 8;

/// Monic generators `g_1 | g_2 | ... | g_n` of the determinantal ideals of
/// `xI - M` over `Q[x]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalPolyDivisors<T: Scalar> {
    g: Vec<Polynomial<Ratio<T>>>,
}

impl<T: Scalar> RationalPolyDivisors<T> {
    pub fn divisors(&self) -> &[Polynomial<Ratio<T>>] {
        &self.g
    }

    /// Invariant factors `g_k / g_(k-1)` over `Q[x]`, as primitive integer polynomials.
    pub fn quotients(&self) -> Vec<Polynomial<T>> {
        let ints: Vec<Polynomial<T>> = self.g.iter().map(primitive_integer).collect();
        let mut prev = Polynomial::one();
        ints.into_iter()
            .map(|g| {
                let q = g.div_exact(&prev).expect("divisor chain");
                prev = g;
                q.primitive_part()
            })
            .collect()
    }
}

fn primitive_integer<T: Scalar>(p: &Polynomial<Ratio<T>>) -> Polynomial<T> {
    let denom = p
        .coeffs()
        .iter()
        .fold(T::one(), |l, c| l.lcm(c.denom()));
    Polynomial::new(
        p.coeffs()
            .iter()
            .map(|c| c.numer().clone() * (denom.clone() / c.denom().clone()))
            .collect(),
    )
    .primitive_part()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// `g_k` = monic gcd of all `k x k` minors of `xI - m` over `Q[x]`.
pub fn determinantal_gcds_qx<T: Scalar>(m: &Matrix<T>) -> Result<RationalPolyDivisors<T>> {
    let n = m.dim();
    if n > DETGCD_MAX_N {
        return Err(Error::UnsupportedSize {
            what: "determinantal_gcds_qx",
            size: n,
            max: DETGCD_MAX_N,
        });
    }
    let x = Polynomial::<T>::x();
    let char_matrix: Matrix<Polynomial<T>> = Matrix::from_fn(n, |i, j| {
        let c = Polynomial::constant(-m[(i, j)].clone());
        if i == j {
            &x + &c
        } else {
            c
        }
    });

    let mut g = Vec::with_capacity(n);
    for k in 1..=n {
        let sets = combinations(n, k);
        let mut acc = Polynomial::<T>::zero();
        'outer: for rows in &sets {
            for cols in &sets {
                let minor = determinant(&char_matrix.submatrix(rows, cols));
                acc = acc.gcd(&minor);
                if acc.degree() == Some(0) {
                    break 'outer;
                }
            }
        }
        g.push(acc.to_monic_rational());
    }
    Ok(RationalPolyDivisors { g })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::charpoly;
    use num_bigint::BigInt;

    type M = Matrix<BigInt>;
    type P = Polynomial<BigInt>;

    fn int_divisors(m: &M) -> Vec<P> {
        determinantal_gcds_qx(m)
            .unwrap()
            .divisors()
            .iter()
            .map(primitive_integer)
            .collect()
    }

    #[test]
    fn complete_graph_k3() {
        let a = M::from_i64_rows(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        let d = determinantal_gcds_qx(&a).unwrap();
        assert!(d.divisors().iter().all(Polynomial::is_monic));
        assert_eq!(
            int_divisors(&a),
            vec![P::one(), P::from_i64(&[1, 1]), P::from_i64(&[-2, -3, 0, 1])]
        );
        assert_eq!(
            d.quotients(),
            vec![P::one(), P::from_i64(&[1, 1]), P::from_i64(&[-2, -1, 1])]
        );
    }

    #[test]
    fn small_cases() {
        assert_eq!(int_divisors(&M::zeros(1)), vec![P::x()]);
        let a = M::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(int_divisors(&a), vec![P::one(), P::from_i64(&[-1, 0, 1])]);
    }

    #[test]
    fn last_divisor_is_charpoly() {
        let m = M::from_i64_rows(&[&[2, -1, 0, 3], &[-1, 0, 4, 1], &[0, 4, -2, 2], &[3, 1, 2, 1]]);
        let d = int_divisors(&m);
        assert_eq!(d.last().unwrap(), &charpoly(&m));
        for w in d.windows(2) {
            assert!(w[1].div_exact(&w[0]).is_some());
        }
    }

    #[test]
    fn scalar_matrix_has_repeated_factor() {
        // xI - 2I: every k-minor's gcd is (x-2)^k
        let m = M::identity(3).scaled(&BigInt::from(2));
        let d = int_divisors(&m);
        let lin = P::from_i64(&[-2, 1]);
        assert_eq!(d[0], lin);
        assert_eq!(d[1], &lin * &lin);
        assert_eq!(d[2], &(&lin * &lin) * &lin);
    }

    #[test]
    fn size_bound() {
        assert!(matches!(
            determinantal_gcds_qx(&M::zeros(9)),
            Err(Error::UnsupportedSize { size: 9, .. })
        ));
    }

    #[test]
    fn combinations_enumerate() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(8, 4).len(), 70);
    }
}
