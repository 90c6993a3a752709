//! Brute-force canonical labelling and the bundled connected-graph generator.

use super::{write_graph6, Graph};
use crate::error::{Error, Result};
use rayon::prelude::*;
use std::collections::BTreeSet;
use std::sync::OnceLock;

pub const CANON_MAX_N: usize = 8;

#[derive(Clone, Copy)]
struct Partial {
    perm: [u8; CANON_MAX_N],
    used: u16,
}

/// Lexicographically smallest graph6 string over all vertex relabellings.
///
/// The upper-triangle bits are emitted column by column, so fixing the vertex
/// at position `j` appends one `j`-bit block. Keeping only the partial
/// labellings that minimise every block so far yields the global minimum.
pub fn canonical_key(g: &Graph) -> Result<Vec<u8>> {
    let n = g.order();
    if n > CANON_MAX_N {
        return Err(Error::UnsupportedSize {
            what: "canonical_key",
            size: n,
            max: CANON_MAX_N,
        });
    }
    let mut frontier = vec![Partial {
        perm: [0; CANON_MAX_N],
        used: 0,
    }];
    let mut next = Vec::new();
    for pos in 0..n {
        let mut best = u32::MAX;
        next.clear();
        for p in &frontier {
            for v in 0..n {
                if p.used >> v & 1 == 1 {
                    continue;
                }
                let mut block = 0u32;
                for i in 0..pos {
                    block = (block << 1) | g.has_edge(p.perm[i] as usize, v) as u32;
                }
                if block > best {
                    continue;
                }
                if block < best {
                    best = block;
                    next.clear();
                }
                let mut q = *p;
                q.perm[pos] = v as u8;
                q.used |= 1 << v;
                next.push(q);
            }
        }
        std::mem::swap(&mut frontier, &mut next);
    }
    let perm: Vec<usize> = frontier[0].perm[..n].iter().map(|&v| v as usize).collect();
    Ok(write_graph6(&g.permuted(&perm)).into_bytes())
}

static CONNECTED: [OnceLock<Vec<Graph>>; CANON_MAX_N + 1] = [const { OnceLock::new() }; CANON_MAX_N + 1];
static ALL: [OnceLock<Vec<Graph>>; CANON_MAX_N + 1] = [const { OnceLock::new() }; CANON_MAX_N + 1];

fn check_order(n: usize, what: &'static str) -> Result<()> {
    if n > CANON_MAX_N {
        return Err(Error::UnsupportedSize {
            what,
            size: n,
            max: CANON_MAX_N,
        });
    }
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    Ok(())
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, ordered by canonical key. Results are memoised per `n`.
pub fn generate_connected(n: usize) -> Result<Vec<Graph>> {
    check_order(n, "generate_connected (supply an external graph6 file instead)")?;
    Ok(classes(&CONNECTED, n, 1).to_vec())
}

/// As [`generate_connected`], but over all graphs on `n` vertices.
pub fn generate_graphs(n: usize) -> Result<Vec<Graph>> {
    check_order(n, "generate_graphs")?;
    Ok(classes(&ALL, n, 0).to_vec())
}

// Every connected graph has a non-cut vertex, so extending each connected
// class on n-1 vertices by a vertex with a nonempty neighbourhood reaches
// every connected class on n vertices. Without the connectivity constraint
// any vertex can be the new one.
fn classes(memo: &'static [OnceLock<Vec<Graph>>], n: usize, min_mask: u64) -> &'static [Graph] {
    memo[n].get_or_init(|| {
        if n == 1 {
            return vec![Graph::empty(1).unwrap()];
        }
        let prev = classes(memo, n - 1, min_mask);
        let keys: BTreeSet<Vec<u8>> = prev
            .par_iter()
            .flat_map_iter(|g| {
                (min_mask..(1 << (n - 1))).map(move |mask| {
                    let h = g.with_new_vertex(mask).expect("n <= 8");
                    canonical_key(&h).expect("n <= 8")
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        keys.into_iter()
            .map(|k| super::parse_graph6(std::str::from_utf8(&k).unwrap()).unwrap())
            .collect()
    })
}
