//! Block designs: the t-(v, k, λ) structure, coverage verification, and the
//! design text format.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};

use super::{binomial, subsets_of, SubsetLabel};

/// Default cap on the number of t-subsets enumerated by [`BlockDesign::verify`].
pub const DEFAULT_VERIFY_BUDGET: u64 = 10_000_000;

/// A t-(v, k, λ) block design candidate: a family of k-subsets (blocks) of
/// [v] meant to cover every t-subset exactly λ times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDesign {
    t: u32,
    v: u32,
    k: u32,
    lambda: u64,
    blocks: Vec<SubsetLabel>,
}

/// Outcome of a design coverage check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DesignCheck {
    Pass,
    /// The colex-least t-subset whose coverage differs from λ, with the
    /// count actually observed.
    Fail { witness: SubsetLabel, count: u64 },
}

impl DesignCheck {
    pub fn is_pass(&self) -> bool {
        matches!(self, DesignCheck::Pass)
    }
}

impl BlockDesign {
    /// Structural validation only; coverage is checked by [`verify`](Self::verify).
    pub fn new(t: u32, v: u32, k: u32, lambda: u64, blocks: Vec<SubsetLabel>) -> Result<Self> {
        if !(1 <= t && t <= k && k <= v) {
            return Err(Error::InvalidDesign(format!(
                "need v >= k >= t >= 1, got t={t} k={k} v={v}"
            )));
        }
        if lambda < 1 {
            return Err(Error::InvalidDesign("lambda must be >= 1".into()));
        }
        for (i, b) in blocks.iter().enumerate() {
            if b.size() != k as usize {
                return Err(Error::InvalidDesign(format!(
                    "block {} has {} elements, expected {k}",
                    i + 1,
                    b.size()
                )));
            }
            if b.ground_set() != v {
                return Err(Error::InvalidDesign(format!(
                    "block {} is over [{}], expected [{v}]",
                    i + 1,
                    b.ground_set()
                )));
            }
        }
        Ok(Self { t, v, k, lambda, blocks })
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn v(&self) -> u32 {
        self.v
    }

    pub fn block_size(&self) -> u32 {
        self.k
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    pub fn blocks(&self) -> &[SubsetLabel] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Checks that every t-subset of [v] lies in exactly λ blocks, with the
    /// default enumeration budget.
    pub fn verify(&self) -> Result<DesignCheck> {
        self.verify_with_budget(DEFAULT_VERIFY_BUDGET)
    }

    /// Coverage check with an explicit budget on C(v, t). Exceeding the
    /// budget is an explicit error, never a silent pass.
    pub fn verify_with_budget(&self, budget: u64) -> Result<DesignCheck> {
        let subsets = binomial(self.v as u64, self.t as u64)?;
        if subsets > budget {
            return Err(Error::VerifyBudgetExceeded { subsets, budget });
        }
        // Count per t-subset by colex rank: for each block, bump every
        // t-subset of the block. Then a single ascending scan finds the
        // colex-least violation.
        let mut counts = vec![0u64; subsets as usize];
        for block in &self.blocks {
            for sub in subsets_of(block.elements(), self.t, self.v)? {
                counts[sub.colex_rank()? as usize] += 1;
            }
        }
        for (rank, &count) in counts.iter().enumerate() {
            if count != self.lambda {
                let witness = SubsetLabel::colex_unrank(rank as u64, self.v, self.t)?;
                return Ok(DesignCheck::Fail { witness, count });
            }
        }
        Ok(DesignCheck::Pass)
    }
}

/// Reads the design text format: header `t v k lambda b`, then b block
/// lines of k space-separated elements.
pub fn read_design<R: BufRead>(reader: R) -> Result<BlockDesign> {
    let mut lines = reader.lines().enumerate();
    let (line_no, header) = loop {
        match lines.next() {
            Some((i, line)) => {
                let line = line?;
                let trimmed = line.trim();
                if !trimmed.is_empty() && !trimmed.starts_with('#') {
                    break (i + 1, trimmed.to_string());
                }
            }
            None => {
                return Err(Error::Parse { line: 0, msg: "empty design file".into() });
            }
        }
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 5 {
        return Err(Error::Parse {
            line: line_no,
            msg: format!("header must be `t v k lambda b`, got {header:?}"),
        });
    }
    let parse = |s: &str, what: &str| -> Result<u64> {
        s.parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("bad {what}: {s:?}"),
        })
    };
    let t = parse(fields[0], "t")? as u32;
    let v = parse(fields[1], "v")? as u32;
    let k = parse(fields[2], "k")? as u32;
    let lambda = parse(fields[3], "lambda")?;
    let b = parse(fields[4], "block count")?;

    let mut blocks = Vec::with_capacity(b as usize);
    for (i, line) in lines {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut elements = Vec::with_capacity(k as usize);
        for tok in trimmed.split_whitespace() {
            let e: u32 = tok.parse().map_err(|_| Error::Parse {
                line: i + 1,
                msg: format!("bad element {tok:?}"),
            })?;
            elements.push(e);
        }
        let block = SubsetLabel::new(elements, v).map_err(|e| Error::Parse {
            line: i + 1,
            msg: e.to_string(),
        })?;
        blocks.push(block);
    }
    if blocks.len() as u64 != b {
        return Err(Error::Parse {
            line: line_no,
            msg: format!("header declares {b} blocks, found {}", blocks.len()),
        });
    }
    BlockDesign::new(t, v, k, lambda, blocks)
}

/// Writes the design text format.
pub fn write_design<W: Write>(design: &BlockDesign, mut writer: W) -> Result<()> {
    writeln!(
        writer,
        "{} {} {} {} {}",
        design.t,
        design.v,
        design.k,
        design.lambda,
        design.blocks.len()
    )?;
    for block in &design.blocks {
        let words: Vec<String> = block.elements().iter().map(|e| e.to_string()).collect();
        writeln!(writer, "{}", words.join(" "))?;
    }
    Ok(())
}

/// The Fano plane as a 2-(7,3,1) design, a handy fixture.
#[cfg(test)]
pub(crate) fn fano() -> BlockDesign {
    let triples = [
        [1, 2, 4],
        [2, 3, 5],
        [3, 4, 6],
        [4, 5, 7],
        [5, 6, 1],
        [6, 7, 2],
        [7, 1, 3],
    ];
    let blocks = triples
        .iter()
        .map(|t| SubsetLabel::new(t.to_vec(), 7).unwrap())
        .collect();
    BlockDesign::new(2, 7, 3, 1, blocks).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::colex_subsets;

    /// Naive reference: count containment separately for every t-subset.
    fn naive_check(d: &BlockDesign) -> DesignCheck {
        for sub in colex_subsets(d.v(), d.t()) {
            let count = d
                .blocks()
                .iter()
                .filter(|b| sub.is_subset_of(b))
                .count() as u64;
            if count != d.lambda() {
                return DesignCheck::Fail { witness: sub, count };
            }
        }
        DesignCheck::Pass
    }

    #[test]
    fn fano_verifies() {
        assert_eq!(fano().verify().unwrap(), DesignCheck::Pass);
    }

    #[test]
    fn single_triple_on_three_points() {
        let d = BlockDesign::new(
            2,
            3,
            3,
            1,
            vec![SubsetLabel::new(vec![1, 2, 3], 3).unwrap()],
        )
        .unwrap();
        assert_eq!(d.verify().unwrap(), DesignCheck::Pass);
    }

    #[test]
    fn fano_minus_a_block_fails_with_uncovered_pair() {
        let full = fano();
        let blocks = full.blocks()[1..].to_vec(); // drop {1,2,4}
        let d = BlockDesign::new(2, 7, 3, 1, blocks).unwrap();
        match d.verify().unwrap() {
            DesignCheck::Fail { witness, count } => {
                assert_eq!(count, 0);
                // {1,2} is the colex-least pair of the deleted block.
                assert_eq!(witness.elements(), &[1, 2]);
            }
            DesignCheck::Pass => panic!("must fail"),
        }
    }

    #[test]
    fn agrees_with_naive_reference() {
        let mut designs = vec![fano()];
        // Fano with a duplicated block (over-coverage).
        let mut blocks = fano().blocks().to_vec();
        blocks.push(blocks[0].clone());
        designs.push(BlockDesign::new(2, 7, 3, 1, blocks).unwrap());
        // Wrong lambda.
        designs.push(BlockDesign::new(2, 7, 3, 2, fano().blocks().to_vec()).unwrap());
        // A 1-design of singletons.
        let singles = (1..=5)
            .map(|e| SubsetLabel::new(vec![e], 5).unwrap())
            .collect();
        designs.push(BlockDesign::new(1, 5, 1, 1, singles).unwrap());
        for d in &designs {
            assert_eq!(d.verify().unwrap(), naive_check(d), "design {d:?}");
        }
    }

    #[test]
    fn budget_exceeded_is_explicit() {
        let d = fano();
        assert!(matches!(
            d.verify_with_budget(20),
            Err(Error::VerifyBudgetExceeded { subsets: 21, budget: 20 })
        ));
    }

    #[test]
    fn structural_validation() {
        assert!(BlockDesign::new(2, 3, 4, 1, vec![]).is_err()); // k > v
        assert!(BlockDesign::new(0, 3, 3, 1, vec![]).is_err()); // t < 1
        assert!(BlockDesign::new(2, 7, 3, 0, vec![]).is_err()); // lambda < 1
        let wrong_size = vec![SubsetLabel::new(vec![1, 2], 7).unwrap()];
        assert!(BlockDesign::new(2, 7, 3, 1, wrong_size).is_err());
    }

    #[test]
    fn design_file_roundtrip() {
        let d = fano();
        let mut buf = Vec::new();
        write_design(&d, &mut buf).unwrap();
        let back = read_design(&buf[..]).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn design_file_rejects_bad_counts() {
        let text = "2 7 3 1 2\n1 2 4\n";
        assert!(matches!(read_design(text.as_bytes()), Err(Error::Parse { .. })));
    }
}
