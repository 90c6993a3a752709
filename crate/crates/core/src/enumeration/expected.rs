//! Published census counts.

use super::Domain;
use crate::invariants::Flavor;
use crate::matrices::MatrixKind;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedCell {
    pub table: u8,
    pub n: usize,
    pub domain: Domain,
    pub flavor: Flavor,
    /// `None` for the domain-size row.
    pub kind: Option<MatrixKind>,
    pub value: u64,
}

impl ExpectedCell {
    /// Cells whose census needs graphs beyond the bundled generator or a long run.
    pub fn long_running(&self) -> bool {
        match self.table {
            1 | 2 => self.n >= 9,
            _ => self.n >= 10,
        }
    }

    pub fn row_label(&self) -> String {
        match self.kind {
            None => format!("|{}_n|", self.domain.symbol()),
            Some(k) => k.to_string(),
        }
    }
}

impl fmt::Display for ExpectedCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "table {} {} {} n={} row {}",
            self.table,
            self.flavor,
            self.domain,
            self.n,
            self.row_label()
        )
    }
}

type Row = (Option<MatrixKind>, &'static [u64]);

const T12_SIZES_G: &[u64] = &[6, 21, 112, 853, 11117, 261080, 11716571];
const T12_SIZES_CG: &[u64] = &[1, 8, 68, 662, 9888, 247492, 11427974];
const T34_SIZES: &[u64] = &[2, 18, 218, 6069, 364270, 44343606];

const TABLE1_ADJ: &[Row] = &[
    (None, T12_SIZES_G),
    (Some(MatrixKind::A), &[0, 12, 95, 830, 11079, 261021, 11716497]),
    (Some(MatrixKind::L), &[0, 0, 0, 14, 886, 22124, 950291]),
    (Some(MatrixKind::Q), &[0, 2, 42, 122, 1000, 10467, 450816]),
];

const TABLE1_DIST: &[Row] = &[
    (None, T12_SIZES_CG),
    (Some(MatrixKind::D), &[0, 0, 12, 340, 7467, 232611, 11316322]),
    (Some(MatrixKind::DL), &[0, 0, 0, 0, 45, 2114, 185406]),
    (Some(MatrixKind::DQ), &[0, 0, 0, 0, 18, 891, 78208]),
    (Some(MatrixKind::Atrs), &[0, 0, 0, 0, 32, 616, 87841]),
    (Some(MatrixKind::AtrsPlus), &[0, 0, 0, 0, 36, 2206, 179094]),
    (Some(MatrixKind::Ddeg), &[0, 0, 0, 0, 48, 964, 98588]),
    (Some(MatrixKind::DdegPlus), &[0, 3, 4, 34, 500, 7915, 427394]),
];

const TABLE2_ADJ: &[Row] = &[
    (None, T12_SIZES_G),
    (Some(MatrixKind::A), &[0, 0, 0, 32, 1042, 41212, 2338933]),
    (Some(MatrixKind::L), &[0, 0, 4, 115, 1611, 40560, 1367215]),
    (Some(MatrixKind::Q), &[0, 2, 10, 80, 998, 17453, 613954]),
];

const TABLE2_DIST: &[Row] = &[
    (None, T12_SIZES_CG),
    (Some(MatrixKind::D), &[0, 0, 0, 0, 48, 3480, 276328]),
    (Some(MatrixKind::DL), &[0, 0, 0, 0, 105, 4118, 245140]),
    (Some(MatrixKind::DQ), &[0, 0, 0, 4, 86, 1519, 95296]),
    (Some(MatrixKind::Atrs), &[0, 0, 0, 4, 56, 1212, 75364]),
    (Some(MatrixKind::AtrsPlus), &[0, 0, 0, 0, 105, 3624, 232962]),
    (Some(MatrixKind::Ddeg), &[0, 0, 0, 4, 76, 2370, 124866]),
    (Some(MatrixKind::DdegPlus), &[0, 0, 0, 24, 413, 11536, 445738]),
];

const TABLE3_GSP: &[Row] = &[
    (None, T34_SIZES),
    (Some(MatrixKind::A), &[0, 0, 0, 420, 48992, 6935002]),
    (Some(MatrixKind::L), &[0, 0, 23, 952, 60884, 4849676]),
    (Some(MatrixKind::Q), &[0, 0, 2, 212, 20710, 1918758]),
];

const TABLE3_GIN: &[Row] = &[
    (None, T34_SIZES),
    (Some(MatrixKind::A), &[0, 10, 163, 5918, 363834, 44342414]),
    (Some(MatrixKind::L), &[0, 0, 9, 382, 45250, 2466748]),
    (Some(MatrixKind::Q), &[0, 0, 0, 84, 18760, 902038]),
];

const TABLE4: &[Row] = &[
    (None, T34_SIZES),
    (Some(MatrixKind::D), &[0, 4, 126, 5206, 353826, 44245420]),
    (Some(MatrixKind::DL), &[0, 0, 9, 428, 45186, 2615994]),
    (Some(MatrixKind::DQ), &[0, 0, 0, 84, 19048, 932632]),
    (Some(MatrixKind::Ddeg), &[0, 0, 0, 96, 19280, 953406]),
    (Some(MatrixKind::DdegPlus), &[0, 0, 110, 1523, 116854, 3495822]),
    (Some(MatrixKind::Atrs), &[0, 0, 0, 84, 18872, 945612]),
    (Some(MatrixKind::AtrsPlus), &[0, 0, 8, 492, 45544, 2463526]),
];

fn push(out: &mut Vec<ExpectedCell>, table: u8, first_n: usize, domain: Domain, flavor: Flavor, rows: &[Row]) {
    for &(kind, values) in rows {
        for (i, &value) in values.iter().enumerate() {
            out.push(ExpectedCell {
                table,
                n: first_n + i,
                domain,
                flavor,
                kind,
                value,
            });
        }
    }
}

/// Every cell of the four census tables.
pub fn expected_tables() -> Vec<ExpectedCell> {
    use Domain::*;
    use Flavor::*;
    let mut out = Vec::new();
    push(&mut out, 1, 4, Connected, GenInvariant, TABLE1_ADJ);
    push(&mut out, 1, 4, ConnectedComplement, GenInvariant, TABLE1_DIST);
    push(&mut out, 2, 4, Connected, GenSpectral, TABLE2_ADJ);
    push(&mut out, 2, 4, ConnectedComplement, GenSpectral, TABLE2_DIST);
    push(&mut out, 3, 6, Diam2Pair, GenSpectral, TABLE3_GSP);
    push(&mut out, 3, 6, Diam2Pair, GenInvariant, TABLE3_GIN);
    push(&mut out, 4, 6, Diam2Pair, GenInvariant, TABLE4);
    out
}
