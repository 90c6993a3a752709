//! The ten graph matrices and the complement shifts `M(G^c) = xI + yJ - M(G)`.

use crate::error::{Error, Result};
use crate::graph::{DistanceData, Graph};
use crate::IntMatrix;
use num_bigint::BigInt;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatrixKind {
    /// Adjacency.
    A,
    /// Laplacian `diag(deg) - A`.
    L,
    /// Signless Laplacian `diag(deg) + A`.
    Q,
    /// Distance.
    D,
    /// `diag(trs) - D`.
    DL,
    /// `diag(trs) + D`.
    DQ,
    /// `diag(trs) - A`.
    Atrs,
    /// `diag(trs) + A`.
    AtrsPlus,
    /// `diag(deg) - D`.
    Ddeg,
    /// `diag(deg) + D`.
    DdegPlus,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 10] = [
        MatrixKind::A,
        MatrixKind::L,
        MatrixKind::Q,
        MatrixKind::D,
        MatrixKind::DL,
        MatrixKind::DQ,
        MatrixKind::Atrs,
        MatrixKind::AtrsPlus,
        MatrixKind::Ddeg,
        MatrixKind::DdegPlus,
    ];

    /// Kinds built from distances or transmissions.
    pub fn requires_connected(self) -> bool {
        !matches!(self, MatrixKind::A | MatrixKind::L | MatrixKind::Q)
    }

    pub fn token(self) -> &'static str {
        match self {
            MatrixKind::A => "a",
            MatrixKind::L => "l",
            MatrixKind::Q => "q",
            MatrixKind::D => "d",
            MatrixKind::DL => "dl",
            MatrixKind::DQ => "dq",
            MatrixKind::Atrs => "atrs",
            MatrixKind::AtrsPlus => "atrs+",
            MatrixKind::Ddeg => "ddeg",
            MatrixKind::DdegPlus => "ddeg+",
        }
    }

    fn tag(self) -> u8 {
        self as u8
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for MatrixKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MatrixKind::ALL
            .into_iter()
            .find(|k| k.token() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown matrix kind '{s}'")))
    }
}

pub(crate) fn kind_tag(kind: MatrixKind) -> u8 {
    kind.tag()
}

pub fn build_matrix(g: &Graph, kind: MatrixKind) -> Result<IntMatrix> {
    build_matrix_with(g, &g.distance_data(), kind)
}

/// As [`build_matrix`], reusing precomputed distance data for `g`.
pub fn build_matrix_with(g: &Graph, dd: &DistanceData, kind: MatrixKind) -> Result<IntMatrix> {
    let n = g.order();
    let adj = |i: usize, j: usize| BigInt::from(g.has_edge(i, j) as u8);
    let deg = |i: usize| BigInt::from(dd.deg[i]);
    if !kind.requires_connected() {
        return Ok(IntMatrix::from_fn(n, |i, j| match (kind, i == j) {
            (MatrixKind::A, _) => adj(i, j),
            (MatrixKind::L, true) => deg(i),
            (MatrixKind::L, false) => -adj(i, j),
            (MatrixKind::Q, true) => deg(i),
            (_, false) => adj(i, j),
            _ => unreachable!(),
        }));
    }
    let trs = dd
        .trs
        .as_ref()
        .ok_or_else(|| Error::Disconnected(format!("matrix kind '{kind}'")))?;
    let dist = |i: usize, j: usize| BigInt::from(dd.dist(i, j).expect("connected"));
    let trs = |i: usize| BigInt::from(trs[i]);
    Ok(IntMatrix::from_fn(n, |i, j| {
        if i == j {
            match kind {
                MatrixKind::D => BigInt::from(0),
                MatrixKind::DL | MatrixKind::DQ | MatrixKind::Atrs | MatrixKind::AtrsPlus => trs(i),
                MatrixKind::Ddeg | MatrixKind::DdegPlus => deg(i),
                _ => unreachable!(),
            }
        } else {
            match kind {
                MatrixKind::D | MatrixKind::DQ | MatrixKind::DdegPlus => dist(i, j),
                MatrixKind::DL | MatrixKind::Ddeg => -dist(i, j),
                MatrixKind::Atrs => -adj(i, j),
                MatrixKind::AtrsPlus => adj(i, j),
                _ => unreachable!(),
            }
        }
    }))
}

/// Parameters with `M(G^c) = x I + y J - M(G)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShiftParams {
    pub x: i64,
    pub y: i64,
}

impl ShiftParams {
    pub fn apply(&self, m: &IntMatrix) -> IntMatrix {
        m.shifted(&BigInt::from(self.x), &BigInt::from(self.y))
    }
}

/// Complement shift for `kind` on `n` vertices. Valid for every graph when
/// `kind` is A, L or Q; for the distance kinds only when both the graph and
/// its complement have diameter at most 2.
pub fn complement_shift(kind: MatrixKind, n: usize) -> ShiftParams {
    let n = n as i64;
    let (x, y) = match kind {
        MatrixKind::A => (-1, 1),
        MatrixKind::L => (n, -1),
        MatrixKind::Q => (n - 2, 1),
        MatrixKind::D => (-3, 3),
        MatrixKind::DL => (3 * n, -3),
        MatrixKind::DQ => (3 * n - 6, 3),
        MatrixKind::Atrs => (3 * n - 2, -1),
        MatrixKind::AtrsPlus => (3 * n - 4, 1),
        MatrixKind::Ddeg => (n + 2, -3),
        MatrixKind::DdegPlus => (n - 4, 3),
    };
    ShiftParams { x, y }
}
