//! Closed-form Smith normal forms of `A^trs` and `A^trs_+` for stars, trees and
//! transmission-regular complete multipartite graphs.

use crate::error::{Error, Result};
use crate::graph::{is_tree, Graph};
use crate::linalg::{determinant, smith_normal_form};
use crate::matrices::{build_matrix, MatrixKind};
use crate::{IntMatrix, InvariantFactors};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

/// Bound for the brute-force routes over edge and vertex subsets.
pub const TREE_ENUM_MAX_N: usize = 12;

/// `(1, 1, 2n-1 repeated n-2 times, 2n(n-1)(2n-1))` for the star with `n` leaves.
pub fn star_snf(leaves: usize) -> Result<InvariantFactors> {
    if leaves < 2 {
        return Err(Error::InvalidArgument(format!("star needs at least 2 leaves, got {leaves}")));
    }
    let n = BigInt::from(leaves);
    let odd: BigInt = 2 * &n - 1;
    let mut d = vec![BigInt::one(), BigInt::one()];
    d.extend(std::iter::repeat_n(odd.clone(), leaves - 2));
    d.push(2 * &n * (&n - 1) * odd);
    Ok(InvariantFactors::new(d).expect("divisibility chain"))
}

/// A tree with `c(u) = trs(u) - deg(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeData {
    tree: Graph,
    c: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl TreeData {
    pub fn new(tree: Graph) -> Result<TreeData> {
        if !is_tree(&tree) {
            return Err(Error::InvalidArgument(format!("{tree} is not a tree")));
        }
        let dd = tree.distance_data();
        let trs = dd.trs.expect("trees are connected");
        let c = trs.iter().zip(&dd.deg).map(|(t, d)| t - d).collect();
        let edges = tree.edges();
        Ok(TreeData { tree, c, edges })
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn c(&self) -> &[u64] {
        &self.c
    }

    pub fn order(&self) -> usize {
        self.tree.order()
    }

    fn check_enum_size(&self, what: &'static str) -> Result<()> {
        if self.order() > TREE_ENUM_MAX_N {
            return Err(Error::UnsupportedSize {
                what,
                size: self.order(),
                max: TREE_ENUM_MAX_N,
            });
        }
        Ok(())
    }

    /// Edge subsets (bitmasks over `edges`) in which no vertex has degree above 2.
    fn path_forests(&self) -> Vec<(u32, u64)> {
        let mut out = Vec::new();
        let mut deg = vec![0u8; self.order()];
        self.forests_from(0, 0, 0, &mut deg, &mut out);
        out
    }

    fn forests_from(&self, i: usize, mask: u32, touched: u64, deg: &mut [u8], out: &mut Vec<(u32, u64)>) {
        if i == self.edges.len() {
            out.push((mask, touched));
            return;
        }
        self.forests_from(i + 1, mask, touched, deg, out);
        let (u, v) = self.edges[i];
        if deg[u] < 2 && deg[v] < 2 {
            deg[u] += 1;
            deg[v] += 1;
            self.forests_from(i + 1, mask | 1 << i, touched | 1 << u | 1 << v, deg, out);
            deg[u] -= 1;
            deg[v] -= 1;
        }
    }
}

/// A 2-matching of the tree with a loop added at every vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TwoMatching {
    pub edges: Vec<(usize, usize)>,
    pub loops: Vec<usize>,
}

impl TwoMatching {
    pub fn size(&self) -> usize {
        self.edges.len() + self.loops.len()
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| mask >> i & 1 == 1)
}

fn subsets_of_size(pool: &[usize], k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    fn go(pool: &[usize], k: usize, start: usize, acc: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < k {
                break;
            }
            go(pool, k - 1, i + 1, acc | 1 << pool[i], out);
        }
    }
    go(pool, k, 0, 0, &mut out);
    out
}

/// Every size-`k` 2-matching whose loop set is minimal under inclusion among
/// the loop sets of size-`k` 2-matchings. A looped vertex carries no edge, so
/// each 2-matching is a path forest plus loops on vertices the forest misses.
pub fn minimal_two_matchings(t: &TreeData, k: usize) -> Result<Vec<TwoMatching>> {
    t.check_enum_size("minimal_two_matchings")?;
    let n = t.order();
    let mut all: Vec<(u32, u64)> = Vec::new();
    for (mask, touched) in t.path_forests() {
        let e = mask.count_ones() as usize;
        if e > k {
            continue;
        }
        let free: Vec<usize> = (0..n).filter(|&v| touched >> v & 1 == 0).collect();
        if k - e > free.len() {
            continue;
        }
        all.extend(subsets_of_size(&free, k - e).into_iter().map(|loops| (mask, loops)));
    }
    let sets: BTreeSet<u64> = all.iter().map(|&(_, l)| l).collect();
    let minimal: BTreeSet<u64> = sets
        .iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&r| r != s && r & s == r))
        .collect();
    let mut out: Vec<TwoMatching> = all
        .into_iter()
        .filter(|(_, l)| minimal.contains(l))
        .map(|(mask, loops)| TwoMatching {
            edges: bits(mask as u64).map(|i| t.edges[i]).collect(),
            loops: bits(loops).collect(),
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Loop sets of the minimal size-`k` 2-matchings, as vertex bitmasks.
fn minimal_loop_sets(t: &TreeData, k: usize) -> BTreeSet<u64> {
    minimal_two_matchings(t, k)
        .expect("size checked by caller")
        .into_iter()
        .map(|m| m.loops.iter().fold(0u64, |acc, &v| acc | 1 << v))
        .collect()
}

/// `Delta_k`: gcd of the principal minors of `A^trs(T)` on the loop sets of
/// minimal size-`k` 2-matchings.
pub fn tree_determinantal_divisor(t: &TreeData, k: usize) -> Result<BigInt> {
    t.check_enum_size("tree_determinantal_divisor")?;
    let m = build_matrix(t.tree(), MatrixKind::Atrs)?;
    Ok(loop_set_gcd(&m, t, k))
}

fn loop_set_gcd(m: &IntMatrix, t: &TreeData, k: usize) -> BigInt {
    minimal_loop_sets(t, k).into_iter().fold(BigInt::zero(), |g, set| {
        let idx: Vec<usize> = bits(set).collect();
        g.gcd(&determinant(&m.principal(&idx)))
    })
}

/// Invariant factors `Delta_k / Delta_(k-1)` of `A^trs(T)` (equally of
/// `A^trs_+(T)`) from the 2-matching description of `Delta_k`.
pub fn tree_snf(t: &TreeData) -> Result<InvariantFactors> {
    t.check_enum_size("tree_snf")?;
    let n = t.order();
    if n < 3 {
        return Err(Error::InvalidArgument(format!("tree_snf needs at least 3 vertices, got {n}")));
    }
    let m = build_matrix(t.tree(), MatrixKind::Atrs)?;
    let mut prev = BigInt::one();
    let mut d = Vec::with_capacity(n);
    for k in 1..=n {
        let delta = loop_set_gcd(&m, t, k);
        let (q, r) = delta.div_rem(&prev);
        if delta.is_zero() || !r.is_zero() {
            return Err(Error::Consistency(format!(
                "Delta_{k} = {delta} is not a nonzero multiple of Delta_{} = {prev}",
                k - 1
            )));
        }
        d.push(q);
        prev = delta;
    }
    InvariantFactors::new(d.clone()).ok_or_else(|| {
        Error::Consistency(format!("quotients {d:?} do not form a divisibility chain"))
    })
}

/// Tree edges lying on the path between every pair of vertices, as edge bitmasks.
fn path_masks(t: &TreeData) -> Vec<Vec<u32>> {
    let n = t.order();
    let mut masks = vec![vec![0u32; n]; n];
    for root in 0..n {
        let mut stack = vec![(root, usize::MAX, 0u32)];
        while let Some((v, parent, mask)) = stack.pop() {
            masks[root][v] = mask;
            for (i, &(a, b)) in t.edges.iter().enumerate() {
                let w = if a == v { b } else if b == v { a } else { continue };
                if w != parent {
                    stack.push((w, v, mask | 1 << i));
                }
            }
        }
    }
    masks
}

/// Number of `(|U|-1)`-edge sets meeting the path between every two vertices of `U`.
pub fn rho(t: &TreeData, u: &[usize]) -> Result<u64> {
    t.check_enum_size("rho")?;
    if u.is_empty() {
        return Err(Error::InvalidArgument("rho needs a nonempty vertex set".into()));
    }
    if let Some(&v) = u.iter().find(|&&v| v >= t.order()) {
        return Err(Error::InvalidArgument(format!("vertex {v} out of range")));
    }
    Ok(rho_with(&path_masks(t), t.edges.len(), u))
}

fn rho_with(paths: &[Vec<u32>], edge_count: usize, u: &[usize]) -> u64 {
    let edge_ids: Vec<usize> = (0..edge_count).collect();
    let mut pair_paths = Vec::new();
    for (i, &a) in u.iter().enumerate() {
        for &b in &u[i + 1..] {
            pair_paths.push(paths[a][b]);
        }
    }
    subsets_of_size(&edge_ids, u.len() - 1)
        .into_iter()
        .filter(|&f| pair_paths.iter().all(|&p| p as u64 & f != 0))
        .count() as u64
}

/// `Delta_n` of `A^trs(T)` three ways: the rho-weighted sum over vertex
/// subsets, `|det A^trs(T)|` (spanning trees of the tree plus an apex joined
/// to each `u` by `c(u)` parallel edges) and the product of the direct SNF.
pub fn tree_delta_n(t: &TreeData) -> Result<BigInt> {
    t.check_enum_size("tree_delta_n")?;
    let n = t.order();
    let paths = path_masks(t);
    let mut sum = BigInt::zero();
    for set in 1u64..(1 << n) {
        let u: Vec<usize> = bits(set).collect();
        let weight: BigInt = u.iter().map(|&v| BigInt::from(t.c[v])).product();
        if weight.is_zero() {
            continue;
        }
        sum += weight * rho_with(&paths, t.edges.len(), &u);
    }
    let m = build_matrix(t.tree(), MatrixKind::Atrs)?;
    let det = determinant(&m).abs();
    let snf = smith_normal_form(&m).nonzero_product();
    if sum != det || det != snf {
        return Err(Error::Consistency(format!(
            "Delta_n routes disagree for {}: rho-sum {sum}, determinant {det}, SNF product {snf}",
            t.tree()
        )));
    }
    Ok(sum)
}

/// SNF of `A^trs` (or `A^trs_+` when `signless`) of the complete multipartite
/// graph with `m` parts of size `s`.
pub fn multipartite_snf(m: usize, s: usize, signless: bool) -> Result<InvariantFactors> {
    if m < 2 || s < 2 {
        return Err(Error::InvalidArgument(format!(
            "multipartite_snf needs m, s >= 2, got m = {m}, s = {s}"
        )));
    }
    let (mb, sb) = (BigInt::from(m), BigInt::from(s));
    let two = BigInt::from(2);
    let t: BigInt = &mb * &sb + &sb - 2;
    let a = (&mb - 1u32).gcd(&(&two * (&sb - 1u32)));
    let both_even = m.is_multiple_of(2) && s.is_multiple_of(2);
    let (tail, lead) = if signless {
        (&t * (&t - &sb), &mb * &sb - 1)
    } else {
        (&t * (&t + &sb), &sb - 1)
    };
    let mut d = vec![BigInt::one(); m - 1];
    d.push(a.clone());
    d.extend(std::iter::repeat_n(t.clone(), m * s - 2 * m));
    d.push(if both_even { &two * &t } else { t.clone() });
    d.extend(std::iter::repeat_n(tail.clone(), m - 2));
    let last = if both_even { lead * &tail / &a } else { two * lead * &tail / &a };
    d.push(last);
    InvariantFactors::new(d.clone()).ok_or_else(|| {
        Error::Consistency(format!("formula for m = {m}, s = {s} is not a divisibility chain: {d:?}"))
    })
}
