//! Steiner triple system construction.
//!
//! An STS(v) is a 2-(v,3,1) design; it exists iff v ≡ 1 or 3 (mod 6). The
//! builders here are the classical Bose construction (v ≡ 3 mod 6) and
//! Skolem construction (v ≡ 1 mod 6), both deterministic. Every result is
//! re-verified before being returned.

use crate::error::{Error, Result};

use super::{BlockDesign, SubsetLabel};

/// Builds a verified 2-(v,3,1) design with v(v−1)/6 blocks.
pub fn construct_sts(v: u32) -> Result<BlockDesign> {
    if v < 3 {
        return Err(Error::InvalidParameter(format!("v = {v} < 3")));
    }
    let triples = match v % 6 {
        3 => bose(v),
        1 => skolem(v),
        _ => return Err(Error::NoSts(v)),
    };

    let mut blocks = Vec::with_capacity(triples.len());
    for t in triples {
        blocks.push(SubsetLabel::new(t.to_vec(), v)?);
    }
    blocks.sort_by(|a, b| a.elements().cmp(b.elements()));

    let design = BlockDesign::new(2, v, 3, 1, blocks)?;
    let expected = (v as u64) * (v as u64 - 1) / 6;
    if design.block_count() as u64 != expected {
        return Err(Error::ConstructionUnverified(format!(
            "STS({v}) produced {} blocks, expected {expected}",
            design.block_count()
        )));
    }
    match design.verify()? {
        super::DesignCheck::Pass => Ok(design),
        super::DesignCheck::Fail { witness, count } => Err(Error::ConstructionUnverified(format!(
            "STS({v}) candidate covers pair {witness} {count} times"
        ))),
    }
}

/// Bose construction for v = 6t + 3, over Z_{2t+1} × {0,1,2}.
///
/// Uses the idempotent commutative quasigroup x∘y = (x+y)·(t+1) mod (2t+1),
/// where t+1 is the inverse of 2 in the odd modulus.
fn bose(v: u32) -> Vec<[u32; 3]> {
    let t = (v - 3) / 6;
    let q = 2 * t + 1; // odd modulus
    let half = t + 1;
    let point = |x: u32, class: u32| class * q + x + 1;
    let mut triples = Vec::new();
    for x in 0..q {
        triples.push([point(x, 0), point(x, 1), point(x, 2)]);
    }
    for x in 0..q {
        for y in (x + 1)..q {
            let z = ((x + y) * half) % q;
            for class in 0..3 {
                triples.push([point(x, class), point(y, class), point(z, (class + 1) % 3)]);
            }
        }
    }
    triples
}

/// Skolem construction for v = 6t + 1, over (Z_{2t} × {0,1,2}) ∪ {∞}.
///
/// The half-idempotent commutative quasigroup on Z_{2t} is the relabeled
/// addition table σ(x+y), where σ sends even values 2x to x and odd values
/// 2x+1 to t+x. Then x∘x = x for x < t and (t+x)∘(t+x) = x.
fn skolem(v: u32) -> Vec<[u32; 3]> {
    let t = (v - 1) / 6;
    let q = 2 * t; // even modulus
    let relabel = |s: u32| if s % 2 == 0 { s / 2 } else { t + (s - 1) / 2 };
    let op = |x: u32, y: u32| relabel((x + y) % q);
    let point = |x: u32, class: u32| class * q + x + 1;
    let infinity = v; // the last point
    let mut triples = Vec::new();
    for x in 0..t {
        triples.push([point(x, 0), point(x, 1), point(x, 2)]);
    }
    for x in 0..t {
        for class in 0..3 {
            triples.push([infinity, point(t + x, class), point(x, (class + 1) % 3)]);
        }
    }
    for x in 0..q {
        for y in (x + 1)..q {
            let z = op(x, y);
            for class in 0..3 {
                triples.push([point(x, class), point(y, class), point(z, (class + 1) % 3)]);
            }
        }
    }
    triples
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::DesignCheck;

    #[test]
    fn sts7_has_seven_blocks() {
        let d = construct_sts(7).unwrap();
        assert_eq!(d.block_count(), 7);
        assert_eq!((d.t(), d.v(), d.block_size(), d.lambda()), (2, 7, 3, 1));
    }

    #[test]
    fn sts9_has_twelve_blocks() {
        assert_eq!(construct_sts(9).unwrap().block_count(), 12);
    }

    #[test]
    fn no_sts_for_bad_residues() {
        assert!(matches!(construct_sts(5), Err(Error::NoSts(5))));
        assert!(matches!(construct_sts(6), Err(Error::NoSts(6))));
        assert!(matches!(construct_sts(8), Err(Error::NoSts(8))));
        assert!(matches!(construct_sts(11), Err(Error::NoSts(11))));
        assert!(construct_sts(2).is_err());
    }

    #[test]
    fn all_admissible_orders_up_to_33_verify() {
        for v in [7u32, 9, 13, 15, 19, 21, 25, 27, 31, 33] {
            let d = construct_sts(v).unwrap();
            assert_eq!(d.block_count() as u64, (v as u64) * (v as u64 - 1) / 6, "v={v}");
            assert_eq!(d.verify().unwrap(), DesignCheck::Pass, "v={v}");
        }
    }

    #[test]
    fn deterministic_output() {
        let a = construct_sts(13).unwrap();
        let b = construct_sts(13).unwrap();
        assert_eq!(a, b);
    }
}
