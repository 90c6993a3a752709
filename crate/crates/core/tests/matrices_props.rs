use graphinv::graph::generate_connected;
use graphinv::{build_matrix, complement_shift, Graph, IntMatrix, MatrixKind};
use num_bigint::BigInt;
use num_traits::Zero;

fn diam2_pairs(n: usize) -> Vec<Graph> {
    generate_connected(n)
        .unwrap()
        .iter()
        .filter(|g| {
            g.distance_data().diameter == Some(2) && g.complement().distance_data().diameter == Some(2)
        })
        .cloned()
        .collect()
}

fn scalar_minus(s: u64, m: &IntMatrix) -> IntMatrix {
    m.shifted(&BigInt::from(s), &BigInt::zero())
}

#[test]
fn complement_shift_on_adjacency_kinds() {
    for n in 2..=7 {
        for g in generate_connected(n).unwrap().iter() {
            let h = g.complement();
            for kind in [MatrixKind::A, MatrixKind::L, MatrixKind::Q] {
                let shift = complement_shift(kind, n);
                assert_eq!(
                    build_matrix(&h, kind).unwrap(),
                    shift.apply(&build_matrix(g, kind).unwrap()),
                    "{kind} on {g}"
                );
            }
        }
    }
}

#[test]
fn complement_shift_on_diameter_two_pairs() {
    let graphs = diam2_pairs(8);
    assert_eq!(graphs.len(), 218);
    for g in &graphs {
        let h = g.complement();
        for kind in MatrixKind::ALL {
            let shift = complement_shift(kind, 8);
            assert_eq!(
                build_matrix(&h, kind).unwrap(),
                shift.apply(&build_matrix(g, kind).unwrap()),
                "{kind} on {g}"
            );
        }
    }
}

#[test]
fn regularity_relations() {
    let mut seen = 0;
    for n in 2..=8 {
        for g in generate_connected(n).unwrap().iter() {
            let dd = g.distance_data();
            let trs = dd.trs.as_ref().unwrap();
            let s = trs[0] + dd.deg[0];
            if (0..n).any(|v| trs[v] + dd.deg[v] != s) {
                continue;
            }
            seen += 1;
            let m = |k| build_matrix(g, k).unwrap();
            assert_eq!(m(MatrixKind::Atrs), scalar_minus(s, &m(MatrixKind::Q)));
            assert_eq!(m(MatrixKind::AtrsPlus), scalar_minus(s, &m(MatrixKind::L)));
            assert_eq!(m(MatrixKind::Ddeg), scalar_minus(s, &m(MatrixKind::DQ)));
            assert_eq!(m(MatrixKind::DdegPlus), scalar_minus(s, &m(MatrixKind::DL)));
        }
    }
    assert!(seen > 0);
}

#[test]
fn diameter_two_identities() {
    for n in 3..=8 {
        for g in generate_connected(n).unwrap().iter() {
            if g.distance_data().diameter != Some(2) {
                continue;
            }
            let m = |k| build_matrix(g, k).unwrap();
            let two = BigInt::from(2);
            let j_minus_i = &IntMatrix::all_ones(n) - &IntMatrix::identity(n);
            assert_eq!(&m(MatrixKind::A) + &m(MatrixKind::D), j_minus_i.scaled(&two));
            let expected = m(MatrixKind::L).shifted(&BigInt::from(2 * n), &BigInt::from(-2));
            assert_eq!(m(MatrixKind::DL), expected);
        }
    }
}

#[test]
fn row_sums() {
    for n in 2..=7 {
        for g in generate_connected(n).unwrap().iter() {
            let dd = g.distance_data();
            let trs = dd.trs.as_ref().unwrap();
            let rs = |k| build_matrix(g, k).unwrap().row_sums();
            assert!(rs(MatrixKind::L).iter().all(Zero::is_zero));
            assert!(rs(MatrixKind::DL).iter().all(Zero::is_zero));
            for v in 0..n {
                assert_eq!(rs(MatrixKind::Q)[v], BigInt::from(2 * dd.deg[v]));
                assert_eq!(rs(MatrixKind::DQ)[v], BigInt::from(2 * trs[v]));
            }
        }
    }
}
