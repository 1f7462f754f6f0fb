//! Subset arithmetic: binomial coefficients, sorted subsets of `[n]`, and
//! colexicographic ranking.
//!
//! All integers are fixed-width with checked arithmetic; overflow is an
//! error, never a silent wrap.

mod design;
mod sts;

pub use design::{read_design, write_design, BlockDesign, DesignCheck, DEFAULT_VERIFY_BUDGET};
pub use sts::construct_sts;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// C(n, k) with checked 64-bit arithmetic. Returns 0 when k > n.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc
            .checked_mul((n - k + i) as u128)
            .ok_or_else(|| Error::Overflow(format!("C({n},{k})")))?;
        // Exact at every step: acc is C(n-k+i, i) after the division.
        acc /= i as u128;
    }
    u64::try_from(acc).map_err(|_| Error::Overflow(format!("C({n},{k})")))
}

/// A sorted m-subset of [n] = {1, …, n}. The identity of a Kneser vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubsetLabel {
    elements: Vec<u32>,
    n: u32,
}

impl SubsetLabel {
    /// Builds a label from elements of `1..=n`. The input may be unsorted;
    /// duplicates and out-of-range elements are rejected.
    pub fn new(mut elements: Vec<u32>, n: u32) -> Result<Self> {
        elements.sort_unstable();
        for w in elements.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidSubset(format!("duplicate element {}", w[0])));
            }
        }
        if let Some(&first) = elements.first() {
            if first == 0 {
                return Err(Error::InvalidSubset("elements are 1-based".into()));
            }
        }
        if let Some(&last) = elements.last() {
            if last > n {
                return Err(Error::InvalidSubset(format!("element {last} exceeds ground set [{n}]")));
            }
        }
        Ok(Self { elements, n })
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn ground_set(&self) -> u32 {
        self.n
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, e: u32) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    /// True iff the two subsets share no element.
    pub fn is_disjoint(&self, other: &SubsetLabel) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.elements.len() && j < other.elements.len() {
            match self.elements[i].cmp(&other.elements[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    /// True iff every element of `self` is an element of `other`.
    pub fn is_subset_of(&self, other: &SubsetLabel) -> bool {
        self.elements.iter().all(|&e| other.contains(e))
    }

    /// 0-based colexicographic rank among all m-subsets of [n]:
    /// sum of C(e_i − 1, i) over the sorted elements e_1 < … < e_m.
    /// Independent of n.
    pub fn colex_rank(&self) -> Result<u64> {
        let mut rank: u64 = 0;
        for (i, &e) in self.elements.iter().enumerate() {
            let term = binomial((e - 1) as u64, (i + 1) as u64)?;
            rank = rank
                .checked_add(term)
                .ok_or_else(|| Error::Overflow("colex rank".into()))?;
        }
        Ok(rank)
    }

    /// Inverse of [`colex_rank`](Self::colex_rank) for m-subsets of [n].
    pub fn colex_unrank(rank: u64, n: u32, m: u32) -> Result<Self> {
        if m > n {
            return Err(Error::InvalidParameter(format!("m = {m} > n = {n}")));
        }
        let count = binomial(n as u64, m as u64)?;
        if rank >= count {
            return Err(Error::RankOutOfRange { rank, n, m, count });
        }
        let mut elements = vec![0u32; m as usize];
        let mut r = rank;
        let mut upper = n;
        for i in (1..=m).rev() {
            // Largest e with C(e-1, i) <= r.
            let mut e = i;
            for cand in (i..=upper).rev() {
                if binomial((cand - 1) as u64, i as u64)? <= r {
                    e = cand;
                    break;
                }
            }
            r -= binomial((e - 1) as u64, i as u64)?;
            elements[(i - 1) as usize] = e;
            upper = e - 1;
        }
        Ok(Self { elements, n })
    }
}

impl fmt::Display for SubsetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for SubsetLabel {
    type Err = Error;

    /// Parses `{a,b,c}` subset syntax. The ground set is taken to be the
    /// largest element; callers that know n should rebuild with
    /// [`SubsetLabel::new`].
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::InvalidSubset(format!("expected {{a,b,…}}, got {s:?}")))?;
        let mut elements = Vec::new();
        if !inner.is_empty() {
            for tok in inner.split(',') {
                let e: u32 = tok
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidSubset(format!("bad element {tok:?} in {s:?}")))?;
                elements.push(e);
            }
        }
        let n = elements.iter().copied().max().unwrap_or(0);
        Self::new(elements, n)
    }
}

/// All m-subsets of [n] in colexicographic order.
pub fn colex_subsets(n: u32, m: u32) -> ColexSubsets {
    ColexSubsets {
        n,
        m,
        current: None,
        done: m > n,
    }
}

/// Iterator over m-subsets of [n] in colex order, by successor stepping.
pub struct ColexSubsets {
    n: u32,
    m: u32,
    current: Option<Vec<u32>>,
    done: bool,
}

impl Iterator for ColexSubsets {
    type Item = SubsetLabel;

    fn next(&mut self) -> Option<SubsetLabel> {
        if self.done {
            return None;
        }
        match &mut self.current {
            None => {
                let first: Vec<u32> = (1..=self.m).collect();
                self.current = Some(first.clone());
                if self.m == 0 {
                    self.done = true;
                }
                Some(SubsetLabel { elements: first, n: self.n })
            }
            Some(cur) => {
                // Smallest position whose element can grow without touching
                // the next one; everything below it resets to 1..=i.
                let m = self.m as usize;
                let mut i = 0;
                loop {
                    if i == m {
                        self.done = true;
                        return None;
                    }
                    let cap = if i + 1 < m { cur[i + 1] - 1 } else { self.n };
                    if cur[i] < cap {
                        cur[i] += 1;
                        for (j, slot) in cur.iter_mut().enumerate().take(i) {
                            *slot = j as u32 + 1;
                        }
                        return Some(SubsetLabel { elements: cur.clone(), n: self.n });
                    }
                    i += 1;
                }
            }
        }
    }
}

/// All m-subsets of the given sorted pool, in colex order of index patterns.
pub fn subsets_of(pool: &[u32], m: u32, n: u32) -> Result<Vec<SubsetLabel>> {
    let mut out = Vec::new();
    for pattern in colex_subsets(pool.len() as u32, m) {
        let elements: Vec<u32> = pattern.elements().iter().map(|&i| pool[(i - 1) as usize]).collect();
        out.push(SubsetLabel::new(elements, n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 0).unwrap(), 1);
        assert_eq!(binomial(7, 2).unwrap(), 21);
        assert_eq!(binomial(2, 5).unwrap(), 0);
        assert_eq!(binomial(0, 0).unwrap(), 1);
        assert_eq!(binomial(33, 2).unwrap(), 528);
        assert_eq!(binomial(52, 26).unwrap(), 495_918_532_948_104);
    }

    #[test]
    fn binomial_overflow_is_an_error() {
        // C(68,34) exceeds u64::MAX; must surface as Overflow, not wrap.
        assert!(matches!(binomial(68, 34), Err(Error::Overflow(_))));
        // Just below the edge still works.
        assert!(binomial(62, 31).is_ok());
    }

    #[test]
    fn subset_label_validation() {
        assert!(SubsetLabel::new(vec![3, 1, 2], 5).is_ok());
        assert!(SubsetLabel::new(vec![1, 1], 5).is_err());
        assert!(SubsetLabel::new(vec![0, 2], 5).is_err());
        assert!(SubsetLabel::new(vec![6], 5).is_err());
        let s = SubsetLabel::new(vec![5, 2], 6).unwrap();
        assert_eq!(s.elements(), &[2, 5]);
    }

    #[test]
    fn colex_rank_examples() {
        let r = |els: &[u32], n| SubsetLabel::new(els.to_vec(), n).unwrap().colex_rank().unwrap();
        assert_eq!(r(&[1, 2], 5), 0);
        assert_eq!(r(&[4, 5], 5), 9);
        assert_eq!(r(&[1, 3], 5), 1);
    }

    #[test]
    fn colex_order_matches_brute_force() {
        // Brute-force the 2-subsets of [5] in colex order and compare ranks.
        let mut expected: Vec<Vec<u32>> = Vec::new();
        for b in 1..=5u32 {
            for a in 1..b {
                expected.push(vec![a, b]);
            }
        }
        for (rank, els) in expected.iter().enumerate() {
            let s = SubsetLabel::new(els.clone(), 5).unwrap();
            assert_eq!(s.colex_rank().unwrap(), rank as u64);
            assert_eq!(SubsetLabel::colex_unrank(rank as u64, 5, 2).unwrap(), s);
        }
    }

    #[test]
    fn unrank_rejects_out_of_range() {
        assert!(matches!(
            SubsetLabel::colex_unrank(10, 5, 2),
            Err(Error::RankOutOfRange { .. })
        ));
        assert!(SubsetLabel::colex_unrank(0, 3, 4).is_err());
    }

    #[test]
    fn roundtrip_exhaustive() {
        for &(n, m) in &[(1u32, 1u32), (6, 3), (10, 3), (12, 6), (20, 2), (17, 8)] {
            let count = binomial(n as u64, m as u64).unwrap();
            assert!(count <= 100_000);
            for rank in 0..count {
                let s = SubsetLabel::colex_unrank(rank, n, m).unwrap();
                assert_eq!(s.colex_rank().unwrap(), rank);
            }
        }
    }

    #[test]
    fn iterator_agrees_with_unrank() {
        for &(n, m) in &[(5u32, 2u32), (7, 3), (9, 4), (6, 1), (4, 4)] {
            let count = binomial(n as u64, m as u64).unwrap();
            let listed: Vec<SubsetLabel> = colex_subsets(n, m).collect();
            assert_eq!(listed.len() as u64, count);
            for (rank, s) in listed.iter().enumerate() {
                assert_eq!(s, &SubsetLabel::colex_unrank(rank as u64, n, m).unwrap());
            }
        }
    }

    #[test]
    fn display_and_parse() {
        let s = SubsetLabel::new(vec![1, 2, 5], 7).unwrap();
        assert_eq!(s.to_string(), "{1,2,5}");
        let parsed: SubsetLabel = "{1,2,5}".parse().unwrap();
        assert_eq!(parsed.elements(), s.elements());
        assert!("{1,2,".parse::<SubsetLabel>().is_err());
        assert!("1,2".parse::<SubsetLabel>().is_err());
    }

    #[test]
    fn disjointness() {
        let a = SubsetLabel::new(vec![1, 2], 5).unwrap();
        let b = SubsetLabel::new(vec![3, 4], 5).unwrap();
        let c = SubsetLabel::new(vec![2, 3], 5).unwrap();
        assert!(a.is_disjoint(&b));
        assert!(!a.is_disjoint(&c));
        assert!(b.is_disjoint(&a));
    }
}
