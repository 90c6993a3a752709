//! Free trees: centre-rooted AHU encodings and an isomorph-free generator.

use super::Graph;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

pub const TREE_MAX_N: usize = 16;

pub fn is_tree(g: &Graph) -> bool {
    g.edge_count() + 1 == g.order() && g.is_connected()
}

fn rooted_code(g: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .filter(|&w| Some(w) != parent)
        .map(|w| rooted_code(g, w, Some(v)))
        .collect();
    kids.sort();
    let mut s = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
    s.push('(');
    for k in kids {
        s.push_str(&k);
    }
    s.push(')');
    s
}

fn centres(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut deg: Vec<usize> = g.degrees();
    let mut alive = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut removed = vec![false; n];
    while alive > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            alive -= 1;
            for w in g.neighbors(v) {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

/// Isomorphism-invariant encoding of a tree; equal codes iff isomorphic trees.
pub fn tree_key(g: &Graph) -> Result<String> {
    if !is_tree(g) {
        return Err(Error::InvalidArgument("tree_key expects a tree".into()));
    }
    Ok(centres(g)
        .into_iter()
        .map(|c| rooted_code(g, c, None))
        .min()
        .unwrap())
}

/// One representative per isomorphism class of trees on `n` vertices,
/// ordered by [`tree_key`].
pub fn generate_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > TREE_MAX_N {
        return Err(Error::UnsupportedSize {
            what: "generate_trees",
            size: n,
            max: TREE_MAX_N,
        });
    }
    let mut level: Vec<Graph> = vec![Graph::empty(1)?];
    for _ in 1..n {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for t in &level {
            for v in 0..t.order() {
                let h = t.with_new_vertex(1 << v)?;
                next.entry(tree_key(&h)?).or_insert(h);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts() {
        // OEIS A000055
        let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(generate_trees(i + 1).unwrap().len(), e, "n = {}", i + 1);
        }
    }

    #[test]
    fn trees_agree_with_connected_census() {
        for n in 2..=7 {
            let from_census = super::super::generate_connected(n)
                .unwrap()
                .into_iter()
                .filter(is_tree)
                .count();
            assert_eq!(from_census, generate_trees(n).unwrap().len());
        }
    }

    #[test]
    fn relabelled_trees_share_key() {
        let a = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let b = Graph::from_edges(5, &[(4, 3), (3, 2), (2, 1), (3, 0)]).unwrap();
        assert_eq!(tree_key(&a).unwrap(), tree_key(&b).unwrap());
        assert_ne!(
            tree_key(&a).unwrap(),
            tree_key(&Graph::path(5).unwrap()).unwrap()
        );
        assert!(tree_key(&Graph::cycle(4).unwrap()).is_err());
    }
}
