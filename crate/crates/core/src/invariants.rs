//! Fingerprints deciding cospectrality, coinvariance and their generalized
//! (complement-paired) versions, plus codeterminantality over `Q[x]`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{charpoly, cof_polynomial, determinantal_gcds_qx, smith_normal_form};
use crate::matrices::{build_matrix_with, kind_tag, MatrixKind};
use crate::{IntMatrix, IntPolynomial, InvariantFactors};
use num_bigint::BigInt;
use num_traits::One;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    /// Charpoly of `M(G)`.
    Spectral,
    /// Charpolys of `M(G)` and `M(G^c)`.
    GenSpectral,
    /// Charpoly and cofactor polynomial of `M(G)`; equal pairs mean
    /// `yJ - M` cospectral for every real `y`.
    RSpectral,
    /// Invariant factors of `M(G)`.
    Invariant,
    /// Invariant factors of `M(G)` and `M(G^c)`.
    GenInvariant,
}

impl Flavor {
    pub const ALL: [Flavor; 5] = [
        Flavor::Spectral,
        Flavor::GenSpectral,
        Flavor::RSpectral,
        Flavor::Invariant,
        Flavor::GenInvariant,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Flavor::Spectral => "spectral",
            Flavor::GenSpectral => "gen-spectral",
            Flavor::RSpectral => "r-spectral",
            Flavor::Invariant => "invariant",
            Flavor::GenInvariant => "gen-invariant",
        }
    }

    /// Whether the flavor also looks at the complement.
    pub fn is_generalized(self) -> bool {
        matches!(self, Flavor::GenSpectral | Flavor::GenInvariant)
    }

    /// The flavor this one refines, if any.
    pub fn plain(self) -> Flavor {
        match self {
            Flavor::GenSpectral | Flavor::RSpectral => Flavor::Spectral,
            Flavor::GenInvariant => Flavor::Invariant,
            f => f,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.replace('_', "-");
        Flavor::ALL
            .into_iter()
            .find(|f| f.token() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown flavor '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Fingerprint {
    Spectral(IntPolynomial),
    GenSpectral(IntPolynomial, IntPolynomial),
    RSpectral(IntPolynomial, IntPolynomial),
    Invariant(InvariantFactors),
    GenInvariant(InvariantFactors, InvariantFactors),
}

impl Fingerprint {
    pub fn flavor(&self) -> Flavor {
        match self {
            Fingerprint::Spectral(_) => Flavor::Spectral,
            Fingerprint::GenSpectral(..) => Flavor::GenSpectral,
            Fingerprint::RSpectral(..) => Flavor::RSpectral,
            Fingerprint::Invariant(_) => Flavor::Invariant,
            Fingerprint::GenInvariant(..) => Flavor::GenInvariant,
        }
    }

    /// Byte key: flavor tag, then each component as a length-prefixed list
    /// of length-prefixed two's-complement integers.
    pub fn key(&self, kind: MatrixKind) -> Vec<u8> {
        let mut out = vec![self.flavor() as u8, kind_tag(kind)];
        match self {
            Fingerprint::Spectral(p) => put_list(&mut out, p.coeffs()),
            Fingerprint::GenSpectral(p, q) | Fingerprint::RSpectral(p, q) => {
                put_list(&mut out, p.coeffs());
                put_list(&mut out, q.coeffs());
            }
            Fingerprint::Invariant(d) => put_list(&mut out, d.as_slice()),
            Fingerprint::GenInvariant(d, e) => {
                put_list(&mut out, d.as_slice());
                put_list(&mut out, e.as_slice());
            }
        }
        out
    }
}

fn put_list(out: &mut Vec<u8>, xs: &[BigInt]) {
    out.extend_from_slice(&(xs.len() as u32).to_be_bytes());
    for x in xs {
        let b = x.to_signed_bytes_be();
        out.extend_from_slice(&(b.len() as u32).to_be_bytes());
        out.extend_from_slice(&b);
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fingerprint::Spectral(p) => write!(f, "p = {p}"),
            Fingerprint::GenSpectral(p, q) => write!(f, "p = {p}; complement p = {q}"),
            Fingerprint::RSpectral(p, c) => write!(f, "p = {p}; c = {c}"),
            Fingerprint::Invariant(d) => write!(f, "snf = {d}"),
            Fingerprint::GenInvariant(d, e) => write!(f, "snf = {d}; complement snf = {e}"),
        }
    }
}

fn complement_error(e: Error) -> Error {
    match e {
        Error::Disconnected(what) => Error::Disconnected(format!("complement, {what}")),
        e => e,
    }
}

fn fingerprint_of(m: &IntMatrix, mbar: Option<&IntMatrix>, flavor: Flavor) -> Fingerprint {
    let mbar = || mbar.expect("complement matrix for a generalized flavor");
    match flavor {
        Flavor::Spectral => Fingerprint::Spectral(charpoly(m)),
        Flavor::GenSpectral => Fingerprint::GenSpectral(charpoly(m), charpoly(mbar())),
        Flavor::RSpectral => Fingerprint::RSpectral(charpoly(m), cof_polynomial(m)),
        Flavor::Invariant => Fingerprint::Invariant(smith_normal_form(m)),
        Flavor::GenInvariant => {
            Fingerprint::GenInvariant(smith_normal_form(m), smith_normal_form(mbar()))
        }
    }
}

pub fn compute_fingerprint(g: &Graph, kind: MatrixKind, flavor: Flavor) -> Result<Fingerprint> {
    let m = build_matrix_with(g, &g.distance_data(), kind)?;
    let mbar = if flavor.is_generalized() {
        let h = g.complement();
        Some(build_matrix_with(&h, &h.distance_data(), kind).map_err(complement_error)?)
    } else {
        None
    };
    Ok(fingerprint_of(&m, mbar.as_ref(), flavor))
}

/// Keys for several kinds at once, sharing the distance computations.
pub fn fingerprint_keys(g: &Graph, kinds: &[MatrixKind], flavor: Flavor) -> Result<Vec<Vec<u8>>> {
    let dd = g.distance_data();
    let comp = flavor.is_generalized().then(|| {
        let h = g.complement();
        let hd = h.distance_data();
        (h, hd)
    });
    kinds
        .iter()
        .map(|&kind| {
            let m = build_matrix_with(g, &dd, kind)?;
            let mbar = match &comp {
                Some((h, hd)) => Some(build_matrix_with(h, hd, kind).map_err(complement_error)?),
                None => None,
            };
            Ok(fingerprint_of(&m, mbar.as_ref(), flavor).key(kind))
        })
        .collect()
}

/// Canonical byte key; equal keys iff the graphs stand in the relation.
pub fn fingerprint(g: &Graph, kind: MatrixKind, flavor: Flavor) -> Result<Vec<u8>> {
    Ok(compute_fingerprint(g, kind, flavor)?.key(kind))
}

fn same_order(g: &Graph, h: &Graph) -> Result<()> {
    if g.order() != h.order() {
        return Err(Error::InvalidArgument(format!(
            "vertex counts differ ({} vs {})",
            g.order(),
            h.order()
        )));
    }
    Ok(())
}

pub fn related(g: &Graph, h: &Graph, kind: MatrixKind, flavor: Flavor) -> Result<bool> {
    same_order(g, h)?;
    Ok(compute_fingerprint(g, kind, flavor)? == compute_fingerprint(h, kind, flavor)?)
}

/// Same determinantal divisors of `xI - M` over `Q[x]`.
pub fn is_codeterminantal_qx(g: &Graph, h: &Graph, kind: MatrixKind) -> Result<bool> {
    same_order(g, h)?;
    let a = determinantal_gcds_qx(&build_matrix_with(g, &g.distance_data(), kind)?)?;
    let b = determinantal_gcds_qx(&build_matrix_with(h, &h.distance_data(), kind)?)?;
    Ok(a == b)
}

/// `Z^n / Im M` as `Z_{d_1} + ... + Z_{d_r} + Z^free_rank` with every `d_i > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CokernelGroup {
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl CokernelGroup {
    pub fn from_invariant_factors(d: &InvariantFactors) -> CokernelGroup {
        let torsion = d
            .as_slice()
            .iter()
            .filter(|v| !v.is_one() && v.sign() != num_bigint::Sign::NoSign)
            .cloned()
            .collect();
        CokernelGroup {
            torsion,
            free_rank: d.len() - d.rank(),
        }
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }
}

impl fmt::Display for CokernelGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z_{d}")).collect();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

pub fn cokernel_group(g: &Graph, kind: MatrixKind) -> Result<CokernelGroup> {
    let m = build_matrix_with(g, &g.distance_data(), kind)?;
    Ok(CokernelGroup::from_invariant_factors(&smith_normal_form(&m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sawtooth() -> (Graph, Graph) {
        let star = Graph::star(4).unwrap();
        let c4k1 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        (star, c4k1)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn sawtooth_pair() {
        let (s, c) = sawtooth();
        let p = IntPolynomial::from_i64(&[0, 0, 0, -4, 0, 1]);
        assert_eq!(compute_fingerprint(&s, MatrixKind::A, Flavor::Spectral).unwrap(), Fingerprint::Spectral(p.clone()));
        assert_eq!(compute_fingerprint(&c, MatrixKind::A, Flavor::Spectral).unwrap(), Fingerprint::Spectral(p));
        assert!(related(&s, &c, MatrixKind::A, Flavor::Spectral).unwrap());
        assert!(!related(&s, &c, MatrixKind::A, Flavor::GenSpectral).unwrap());
        assert!(is_codeterminantal_qx(&s, &c, MatrixKind::A).unwrap());
    }

    #[test]
    fn relabelled_cycle_shares_fingerprints() {
        let c5 = Graph::cycle(5).unwrap();
        let r = c5.permuted(&[3, 0, 4, 1, 2]);
        assert_ne!(c5, r);
        for kind in MatrixKind::ALL {
            for flavor in Flavor::ALL {
                assert_eq!(fingerprint(&c5, kind, flavor).unwrap(), fingerprint(&r, kind, flavor).unwrap());
                assert!(related(&c5, &r, kind, flavor).unwrap());
            }
        }
    }

    #[test]
    fn invariant_key_of_k2() {
        let k2 = Graph::complete(2).unwrap();
        let fp = compute_fingerprint(&k2, MatrixKind::L, Flavor::Invariant).unwrap();
        assert_eq!(fp.to_string(), "snf = 1 0");
        let key = fp.key(MatrixKind::L);
        assert_eq!(key, [3, 1, 0, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0]);
    }

    #[test]
    fn keys_separate_distinct_values() {
        // same bytes concatenated would collide without length prefixes
        let a = Fingerprint::GenInvariant(
            InvariantFactors::from_i64(&[1, 256]).unwrap(),
            InvariantFactors::from_i64(&[1]).unwrap(),
        );
        let b = Fingerprint::GenInvariant(
            InvariantFactors::from_i64(&[1]).unwrap(),
            InvariantFactors::from_i64(&[1, 256]).unwrap(),
        );
        assert_ne!(a.key(MatrixKind::A), b.key(MatrixKind::A));
    }

    #[test]
    fn domain_errors() {
        let (s, c) = sawtooth();
        assert!(matches!(fingerprint(&c, MatrixKind::D, Flavor::Spectral), Err(Error::Disconnected(_))));
        // the star's complement is K4 plus an isolated vertex
        assert!(matches!(fingerprint(&s, MatrixKind::D, Flavor::GenSpectral), Err(Error::Disconnected(_))));
        assert!(fingerprint(&s, MatrixKind::D, Flavor::Spectral).is_ok());
        let p3 = Graph::path(3).unwrap();
        assert!(matches!(related(&s, &p3, MatrixKind::A, Flavor::Spectral), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn codeterminantal_examples() {
        let p3 = Graph::path(3).unwrap();
        let k3 = Graph::complete(3).unwrap();
        assert!(!is_codeterminantal_qx(&p3, &k3, MatrixKind::A).unwrap());
        assert!(is_codeterminantal_qx(&p3, &p3, MatrixKind::A).unwrap());
        let big = Graph::path(9).unwrap();
        assert!(matches!(
            is_codeterminantal_qx(&big, &big, MatrixKind::A),
            Err(Error::UnsupportedSize { .. })
        ));
    }

    #[test]
    fn cokernels() {
        let k3 = Graph::complete(3).unwrap();
        let g = cokernel_group(&k3, MatrixKind::L).unwrap();
        assert_eq!(g, CokernelGroup { torsion: ints(&[3]), free_rank: 1 });
        assert_eq!(g.to_string(), "Z_3 + Z^1");
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(cokernel_group(&k2, MatrixKind::L).unwrap(), CokernelGroup { torsion: vec![], free_rank: 1 });
        let star = Graph::star(3).unwrap();
        let g = cokernel_group(&star, MatrixKind::Atrs).unwrap();
        assert_eq!(g, CokernelGroup { torsion: ints(&[5, 60]), free_rank: 0 });
        assert_eq!(g.torsion_order(), BigInt::from(300));
    }

    #[test]
    fn batch_keys_match_single_keys() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        for flavor in Flavor::ALL {
            let batch = fingerprint_keys(&g, &MatrixKind::ALL, flavor).unwrap();
            for (kind, key) in MatrixKind::ALL.into_iter().zip(batch) {
                assert_eq!(key, fingerprint(&g, kind, flavor).unwrap());
            }
        }
    }

    #[test]
    fn flavor_tokens() {
        for f in Flavor::ALL {
            assert_eq!(f.token().parse::<Flavor>().unwrap(), f);
        }
        assert_eq!("gen_spectral".parse::<Flavor>().unwrap(), Flavor::GenSpectral);
        assert!("cospectral".parse::<Flavor>().is_err());
    }
}
