use super::{Matrix, Scalar};
use std::fmt;

/// Smith normal form diagonal: nonnegative, each nonzero entry divides the
/// next, zeros form a trailing block.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct InvariantFactors<T>(Vec<T>);

impl<T: Scalar> InvariantFactors<T> {
    /// Validates the divisibility chain.
    pub fn new(d: Vec<T>) -> Option<Self> {
        let f = InvariantFactors(d);
        f.is_chain().then_some(f)
    }

    pub fn from_i64(d: &[i64]) -> Option<Self> {
        Self::new(d.iter().map(|&v| T::from_i64_exact(v)).collect())
    }

    fn is_chain(&self) -> bool {
        self.0.iter().all(|d| !d.is_negative())
            && self.0.windows(2).all(|w| {
                if w[0].is_zero() {
                    w[1].is_zero()
                } else {
                    (w[1].clone() % w[0].clone()).is_zero()
                }
            })
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<T> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.0.iter().take_while(|d| !d.is_zero()).count()
    }

    /// Product of the nonzero factors, i.e. the gcd of the rank-sized minors.
    pub fn nonzero_product(&self) -> T {
        self.0
            .iter()
            .filter(|d| !d.is_zero())
            .fold(T::one(), |a, b| a * b.clone())
    }

    /// Number of leading unit factors.
    pub fn trivial_count(&self) -> usize {
        self.0.iter().take_while(|d| d.is_one()).count()
    }
}

impl<T: fmt::Display> fmt::Display for InvariantFactors<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Smith normal form over the integers by unimodular row and column
/// operations, always pivoting on the smallest nonzero entry in absolute
/// value.
pub fn smith_normal_form<T: Scalar>(m: &Matrix<T>) -> InvariantFactors<T> {
    let n = m.dim();
    let mut a = m.clone();
    let mut diag = Vec::with_capacity(n);

    for t in 0..n {
        let Some((pi, pj)) = min_entry(&a, t) else {
            diag.extend(std::iter::repeat_n(T::zero(), n - t));
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);

        loop {
            let p = a[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..n {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&p);
                for j in t..n {
                    let v = a[(i, j)].clone() - q.clone() * a[(t, j)].clone();
                    a[(i, j)] = v;
                }
                dirty |= !a[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&p);
                for i in t..n {
                    let v = a[(i, j)].clone() - q.clone() * a[(i, t)].clone();
                    a[(i, j)] = v;
                }
                dirty |= !a[(t, j)].is_zero();
            }
            if dirty {
                // a remainder smaller than the pivot survived in row or column t
                let (pi, pj) = min_in_cross(&a, t);
                a.swap_rows(t, pi);
                a.swap_cols(t, pj);
                continue;
            }
            // row and column are clear; the pivot must divide the remaining block
            let bad = (t + 1..n)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !(a[(i, j)].clone() % p.clone()).is_zero());
            match bad {
                Some((i, _)) => {
                    for j in t..n {
                        let v = a[(t, j)].clone() + a[(i, j)].clone();
                        a[(t, j)] = v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[(t, t)].abs());
    }
    InvariantFactors(diag)
}

fn min_entry<T: Scalar>(a: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let n = a.dim();
    let mut best: Option<(usize, usize)> = None;
    for i in t..n {
        for j in t..n {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < a[(bi, bj)].abs()) {
                best = Some((i, j));
                if v.is_one() || (-v.clone()).is_one() {
                    return best;
                }
            }
        }
    }
    best
}

fn min_in_cross<T: Scalar>(a: &Matrix<T>, t: usize) -> (usize, usize) {
    let n = a.dim();
    let mut best = (t, t);
    for k in t + 1..n {
        for (i, j) in [(k, t), (t, k)] {
            let v = &a[(i, j)];
            if !v.is_zero() && (a[best].is_zero() || v.abs() < a[best].abs()) {
                best = (i, j);
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::oracle::invariant_factors_by_minors;
    use crate::linalg::determinant;
    use num_bigint::BigInt;
    use num_traits::{Signed, Zero};
    use proptest::prelude::*;

    type M = Matrix<BigInt>;

    fn snf_vec(m: &M) -> Vec<i64> {
        smith_normal_form(m)
            .as_slice()
            .iter()
            .map(|v| i64::try_from(v).unwrap())
            .collect()
    }

    #[test]
    fn laplacian_k2() {
        let m = M::from_i64_rows(&[&[1, -1], &[-1, 1]]);
        assert_eq!(snf_vec(&m), vec![1, 0]);
    }

    #[test]
    fn adjacency_k5() {
        let m = M::from_fn(5, |i, j| BigInt::from((i != j) as i64));
        assert_eq!(snf_vec(&m), vec![1, 1, 1, 1, 4]);
    }

    #[test]
    fn zero_and_empty() {
        assert_eq!(snf_vec(&M::zeros(3)), vec![0, 0, 0]);
        assert!(smith_normal_form(&M::zeros(0)).is_empty());
    }

    #[test]
    fn needs_divisibility_fix() {
        // diag(2,3) is not in Smith form; SNF is (1,6)
        let m = M::from_i64_rows(&[&[2, 0], &[0, 3]]);
        assert_eq!(snf_vec(&m), vec![1, 6]);
        let m = M::from_i64_rows(&[&[4, 0, 0], &[0, 6, 0], &[0, 0, 10]]);
        assert_eq!(snf_vec(&m), vec![2, 2, 60]);
    }

    #[test]
    fn chain_validation() {
        assert!(InvariantFactors::<BigInt>::from_i64(&[1, 2, 4, 0]).is_some());
        assert!(InvariantFactors::<BigInt>::from_i64(&[2, 3]).is_none());
        assert!(InvariantFactors::<BigInt>::from_i64(&[0, 1]).is_none());
        assert!(InvariantFactors::<BigInt>::from_i64(&[-1]).is_none());
    }

    #[test]
    fn machine_integers() {
        let m: Matrix<i128> = Matrix::from_i64_rows(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        assert_eq!(smith_normal_form(&m).as_slice(), &[2, 6, 12]);
    }

    fn sym_matrix() -> impl Strategy<Value = M> {
        (1usize..=6).prop_flat_map(|n| {
            proptest::collection::vec(-5i64..=5, n * (n + 1) / 2).prop_map(move |vals| {
                let mut m = M::zeros(n);
                let mut k = 0;
                for i in 0..n {
                    for j in i..n {
                        m[(i, j)] = BigInt::from(vals[k]);
                        m[(j, i)] = BigInt::from(vals[k]);
                        k += 1;
                    }
                }
                m
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn agrees_with_gcd_of_minors(m in sym_matrix()) {
            let snf = smith_normal_form(&m);
            prop_assert_eq!(snf.as_slice().to_vec(), invariant_factors_by_minors(&m));
            prop_assert!(InvariantFactors::new(snf.as_slice().to_vec()).is_some());
            let det = determinant(&m);
            if !det.is_zero() {
                prop_assert_eq!(snf.nonzero_product(), det.abs());
            }
        }
    }
}
