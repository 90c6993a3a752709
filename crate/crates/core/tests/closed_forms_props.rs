use graphinv::closed_forms::{multipartite_snf, star_snf, tree_delta_n, tree_snf, TreeData};
use graphinv::graph::{generate_connected, generate_trees};
use graphinv::linalg::{determinant, smith_normal_form};
use graphinv::{build_matrix, Graph, IntMatrix, MatrixKind};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Zero};

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

fn gcd_of_minors(m: &IntMatrix, k: usize) -> BigInt {
    let sets = combinations(m.dim(), k);
    let mut g = BigInt::zero();
    for r in &sets {
        for c in &sets {
            g = g.gcd(&determinant(&m.submatrix(r, c)));
        }
    }
    g
}

#[test]
fn trees_match_direct_snf() {
    for n in 3..=9 {
        for g in generate_trees(n).unwrap() {
            let t = TreeData::new(g.clone()).unwrap();
            let minus = smith_normal_form(&build_matrix(&g, MatrixKind::Atrs).unwrap());
            let plus = smith_normal_form(&build_matrix(&g, MatrixKind::AtrsPlus).unwrap());
            assert_eq!(tree_snf(&t).unwrap(), minus, "{g}");
            assert_eq!(plus, minus, "{g}");
            assert_eq!(tree_delta_n(&t).unwrap(), minus.nonzero_product(), "{g}");
        }
    }
}

#[test]
fn apex_identity() {
    for n in 2..=9 {
        for g in generate_trees(n).unwrap() {
            let t = TreeData::new(g.clone()).unwrap();
            let c = IntMatrix::diagonal(t.c().iter().map(|&x| BigInt::from(x)).collect());
            assert_eq!(
                build_matrix(&g, MatrixKind::Atrs).unwrap(),
                &build_matrix(&g, MatrixKind::L).unwrap() + &c
            );
            for v in 0..n {
                assert_eq!(t.c()[v] == 0, g.degree(v) == n - 1);
            }
        }
    }
}

#[test]
fn star_formula_matches_direct_snf() {
    for leaves in 2..=30 {
        let g = Graph::star(leaves).unwrap();
        let expected = star_snf(leaves).unwrap();
        for kind in [MatrixKind::Atrs, MatrixKind::AtrsPlus] {
            assert_eq!(smith_normal_form(&build_matrix(&g, kind).unwrap()), expected, "{leaves} {kind}");
        }
    }
}

#[test]
fn star_determinantal_divisors() {
    for leaves in 2..=5 {
        let m = build_matrix(&Graph::star(leaves).unwrap(), MatrixKind::Atrs).unwrap();
        let base = BigInt::from(2 * leaves - 1);
        for k in 3..=leaves {
            assert_eq!(gcd_of_minors(&m, k), base.clone().pow(k as u32 - 2), "leaves {leaves}, k {k}");
        }
    }
}

#[test]
fn stars_are_determined_by_snf() {
    for n in 5..=8 {
        let target = star_snf(n - 1).unwrap();
        for kind in [MatrixKind::Atrs, MatrixKind::AtrsPlus] {
            let hits: Vec<Graph> = generate_connected(n)
                .unwrap()
                .into_iter()
                .filter(|g| smith_normal_form(&build_matrix(g, kind).unwrap()) == target)
                .collect();
            assert_eq!(hits.len(), 1, "n = {n}, {kind}");
            let degrees = hits[0].degrees();
            assert_eq!(degrees.iter().filter(|&&d| d == n - 1).count(), 1);
            assert_eq!(hits[0].edge_count(), n - 1);
        }
    }
}

#[test]
fn multipartite_formula_matches_direct_snf() {
    for m in 2..=6 {
        for s in 2..=6 {
            if m * s > 12 {
                continue;
            }
            let g = Graph::complete_multipartite(m, s).unwrap();
            for (kind, signless) in [(MatrixKind::Atrs, false), (MatrixKind::AtrsPlus, true)] {
                let direct = smith_normal_form(&build_matrix(&g, kind).unwrap());
                assert_eq!(multipartite_snf(m, s, signless).unwrap(), direct, "m = {m}, s = {s}, {kind}");
            }
        }
    }
}
