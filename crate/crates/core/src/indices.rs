//! Index combinatorics: compositions of integers, the 0/1-word encoding,
//! Hoffman duals, reversal, refinement, and the enumerations driving the
//! sweep harness.
//!
//! An index k = (k_1, ..., k_m) corresponds to the word
//! 0^{k_1 - 1} 1 0^{k_2 - 1} 1 ... 0^{k_m - 1} 1 over {0, 1}; the Hoffman
//! dual strips the final 1, swaps 0 <-> 1, and re-appends the 1.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A nonempty tuple of positive integers (k_1, ..., k_m).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Index {
    parts: Vec<u32>,
}

impl Index {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyIndex);
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::ZeroPart);
        }
        Ok(Index { parts })
    }

    /// Shorthand for tests and internal construction; panics on invalid parts.
    pub fn of(parts: &[u32]) -> Self {
        Index::new(parts.to_vec()).expect("valid index parts")
    }

    /// The index ({1}^m).
    pub fn ones(m: usize) -> Self {
        assert!(m >= 1, "ones(m) needs m >= 1");
        Index { parts: vec![1; m] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// wt(k) = k_1 + ... + k_m.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// dep(k) = m.
    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    /// The reverse index (k_m, ..., k_1).
    pub fn reverse(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        Index { parts }
    }

    /// Componentwise sum with a same-length tuple of nonnegative integers.
    pub fn oplus(&self, l: &NonNegTuple) -> Result<Self> {
        if self.depth() != l.len() {
            return Err(Error::LengthMismatch {
                depth: self.depth(),
                len: l.len(),
            });
        }
        let parts = self
            .parts
            .iter()
            .zip(l.parts())
            .map(|(&a, &b)| a + b)
            .collect();
        Ok(Index { parts })
    }

    /// The concatenation index (k, l).
    pub fn concat(&self, l: &Index) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&l.parts);
        Index { parts }
    }

    /// The index ({1}^i, k).
    pub fn prepend_ones(&self, i: usize) -> Self {
        let mut parts = vec![1u32; i];
        parts.extend_from_slice(&self.parts);
        Index { parts }
    }

    /// The 0/1-word 0^{k_1 - 1} 1 ... 0^{k_m - 1} 1 of length wt(k).
    pub fn to_word(&self) -> Word01 {
        let mut letters = Vec::with_capacity(self.weight() as usize);
        for &k in &self.parts {
            letters.extend(std::iter::repeat(false).take(k as usize - 1));
            letters.push(true);
        }
        Word01 { letters }
    }

    /// Inverse of [`Index::to_word`]; the word must be nonempty and end in 1.
    pub fn from_word(w: &Word01) -> Result<Self> {
        if !w.encodes_index() {
            return Err(Error::InvalidWord {
                word: w.to_string(),
            });
        }
        let mut parts = Vec::new();
        let mut zeros: u32 = 0;
        for &c in &w.letters {
            if c {
                parts.push(zeros + 1);
                zeros = 0;
            } else {
                zeros += 1;
            }
        }
        Ok(Index { parts })
    }

    /// The Hoffman dual k^v: strip the final 1 of w(k), swap 0 <-> 1,
    /// re-append the 1. An involution with wt(k^v) = wt(k) and
    /// dep(k) + dep(k^v) = wt(k) + 1.
    pub fn hoffman_dual(&self) -> Self {
        let word = self.to_word();
        let mut letters = word.letters;
        letters.pop();
        for c in &mut letters {
            *c = !*c;
        }
        letters.push(true);
        Index::from_word(&Word01 { letters }).expect("dual word ends in 1")
    }

    /// True iff `self` arises from (k_1 [] k_2 [] ... [] k_m) by filling each
    /// box with a comma or a plus, i.e. by summing consecutive blocks of `k`.
    pub fn refines(&self, k: &Index) -> bool {
        let mut target = self.parts.iter();
        let mut want = match target.next() {
            Some(&w) => w,
            None => return false,
        };
        let mut acc: u32 = 0;
        for &part in &k.parts {
            acc += part;
            if acc == want {
                acc = 0;
                want = match target.next() {
                    Some(&w) => w,
                    None => 0,
                };
            } else if acc > want {
                return false;
            }
        }
        acc == 0 && want == 0 && target.next().is_none()
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|k| k.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Index {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<u32> = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::BadIndex(s.to_string()))?;
        Index::new(parts)
    }
}

/// A fixed-length tuple of nonnegative integers (the summation variable of
/// the reversal expansion).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NonNegTuple {
    parts: Vec<u32>,
}

impl NonNegTuple {
    pub fn new(parts: Vec<u32>) -> Self {
        NonNegTuple { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }
}

/// A finite word over {0, 1}. Encodes an index iff nonempty and ending in 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word01 {
    letters: Vec<bool>,
}

impl Word01 {
    pub fn new(letters: Vec<bool>) -> Self {
        Word01 { letters }
    }

    pub fn letters(&self) -> &[bool] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn encodes_index(&self) -> bool {
        self.letters.last() == Some(&true)
    }

    /// The letter swap 0 <-> 1 applied to the whole word.
    pub fn flip(&self) -> Self {
        Word01 {
            letters: self.letters.iter().map(|&c| !c).collect(),
        }
    }
}

impl fmt::Display for Word01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.letters {
            write!(f, "{}", if c { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl FromStr for Word01 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => letters.push(false),
                '1' => letters.push(true),
                other => return Err(Error::BadLetter(other)),
            }
        }
        Ok(Word01 { letters })
    }
}

/// All 2^{w-1} indices of weight `w`, ordered lexicographically by their
/// 0/1-words. The order is fixed so sweep reports are reproducible.
pub fn enumerate_indices(w: u32) -> Vec<Index> {
    if w == 0 {
        return Vec::new();
    }
    assert!(w <= 32, "enumerate_indices is meant for desk-scale weights");
    let prefix_len = (w - 1) as usize;
    let count: u64 = 1 << prefix_len;
    let mut out = Vec::with_capacity(count as usize);
    for b in 0..count {
        let mut letters = Vec::with_capacity(w as usize);
        for pos in (0..prefix_len).rev() {
            letters.push((b >> pos) & 1 == 1);
        }
        letters.push(true);
        out.push(Index::from_word(&Word01 { letters }).expect("word ends in 1"));
    }
    out
}

/// All indices of weight 1..=w in enumeration order.
pub fn indices_up_to_weight(w: u32) -> Vec<Index> {
    (1..=w).flat_map(enumerate_indices).collect()
}

/// All m-tuples of nonnegative integers summing to `total`, first coordinate
/// descending; there are C(total + m - 1, m - 1) of them.
pub fn enumerate_nonneg_tuples(total: u32, m: usize) -> Vec<NonNegTuple> {
    assert!(m >= 1, "tuples need at least one slot");
    fn rec(total: u32, m: usize, prefix: &mut Vec<u32>, out: &mut Vec<NonNegTuple>) {
        if m == 1 {
            prefix.push(total);
            out.push(NonNegTuple::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for v in (0..=total).rev() {
            prefix.push(v);
            rec(total - v, m - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, m, &mut Vec::with_capacity(m), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_and_depth() {
        assert_eq!(Index::of(&[1]).weight(), 1);
        assert_eq!(Index::of(&[2, 1]).weight(), 3);
        assert_eq!(Index::of(&[3, 1, 2]).weight(), 6);
        assert_eq!(Index::of(&[1]).depth(), 1);
        assert_eq!(Index::of(&[2, 1]).depth(), 2);
        assert_eq!(Index::ones(5).depth(), 5);
    }

    #[test]
    fn construction_rejects_bad_parts() {
        assert_eq!(Index::new(vec![]), Err(Error::EmptyIndex));
        assert_eq!(Index::new(vec![2, 0]), Err(Error::ZeroPart));
    }

    #[test]
    fn reverse_is_involution() {
        assert_eq!(Index::of(&[1]).reverse(), Index::of(&[1]));
        assert_eq!(Index::of(&[2, 1]).reverse(), Index::of(&[1, 2]));
        let k = Index::of(&[3, 1, 2]);
        assert_eq!(k.reverse().reverse(), k);
        assert_eq!(k.reverse().weight(), k.weight());
        assert_eq!(k.reverse().depth(), k.depth());
    }

    #[test]
    fn oplus_componentwise() {
        let k = Index::of(&[2, 1]);
        assert_eq!(k.oplus(&NonNegTuple::new(vec![0, 0])).unwrap(), k);
        assert_eq!(
            k.oplus(&NonNegTuple::new(vec![1, 0])).unwrap(),
            Index::of(&[3, 1])
        );
        assert_eq!(
            Index::of(&[1, 1, 1])
                .oplus(&NonNegTuple::new(vec![2, 0, 1]))
                .unwrap(),
            Index::of(&[3, 1, 2])
        );
        assert_eq!(
            k.oplus(&NonNegTuple::new(vec![1])),
            Err(Error::LengthMismatch { depth: 2, len: 1 })
        );
    }

    #[test]
    fn concat_adds_weight_and_depth() {
        assert_eq!(
            Index::of(&[2]).concat(&Index::of(&[1])),
            Index::of(&[2, 1])
        );
        assert_eq!(
            Index::ones(2).concat(&Index::of(&[3])),
            Index::of(&[1, 1, 3])
        );
        let (k, l) = (Index::of(&[2, 1]), Index::of(&[3]));
        assert_eq!(k.concat(&l).weight(), 6);
        assert_eq!(k.concat(&l).depth(), k.depth() + l.depth());
    }

    #[test]
    fn word_encoding() {
        assert_eq!(Index::of(&[1]).to_word().to_string(), "1");
        assert_eq!(Index::of(&[2, 1]).to_word().to_string(), "011");
        assert_eq!(Index::of(&[3]).to_word().to_string(), "001");
        assert_eq!(
            Index::from_word(&"1".parse().unwrap()).unwrap(),
            Index::of(&[1])
        );
        assert_eq!(
            Index::from_word(&"101".parse().unwrap()).unwrap(),
            Index::of(&[1, 2])
        );
        assert_eq!(
            Index::from_word(&"111".parse().unwrap()).unwrap(),
            Index::ones(3)
        );
        assert!(Index::from_word(&"".parse().unwrap()).is_err());
        assert!(Index::from_word(&"10".parse().unwrap()).is_err());
    }

    #[test]
    fn word_roundtrip_exhaustive() {
        for w in 1..=8 {
            for k in enumerate_indices(w) {
                assert_eq!(Index::from_word(&k.to_word()).unwrap(), k);
            }
        }
        // Valid words of length <= 8 are exactly the index words.
        for len in 1..=8u32 {
            for k in enumerate_indices(len) {
                let word = k.to_word();
                assert_eq!(Index::from_word(&word).unwrap().to_word(), word);
            }
        }
    }

    #[test]
    fn hoffman_dual_examples() {
        assert_eq!(Index::of(&[1]).hoffman_dual(), Index::of(&[1]));
        assert_eq!(Index::of(&[2]).hoffman_dual(), Index::of(&[1, 1]));
        assert_eq!(Index::of(&[2, 1]).hoffman_dual(), Index::of(&[1, 2]));
    }

    #[test]
    fn hoffman_dual_involution_and_weight_exhaustive() {
        for w in 1..=8 {
            for k in enumerate_indices(w) {
                let d = k.hoffman_dual();
                assert_eq!(d.hoffman_dual(), k);
                assert_eq!(d.weight(), k.weight());
                assert_eq!(
                    k.depth() as u32 + d.depth() as u32,
                    k.weight() + 1,
                    "depth relation fails for {k}"
                );
            }
        }
    }

    #[test]
    fn refinement() {
        assert!(Index::of(&[3]).refines(&Index::of(&[2, 1])));
        assert!(Index::of(&[2, 1]).refines(&Index::of(&[2, 1])));
        assert!(!Index::of(&[1, 2]).refines(&Index::of(&[2, 1])));
        // Refinement preserves weight and cannot increase depth.
        for k in enumerate_indices(6) {
            for l in indices_up_to_weight(6) {
                if l.refines(&k) {
                    assert_eq!(l.weight(), k.weight());
                    assert!(l.depth() <= k.depth());
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_indices(1), vec![Index::of(&[1])]);
        let w2 = enumerate_indices(2);
        assert_eq!(w2.len(), 2);
        assert!(w2.contains(&Index::of(&[2])) && w2.contains(&Index::ones(2)));
        assert_eq!(enumerate_indices(5).len(), 16);
    }

    #[test]
    fn nonneg_tuple_enumeration() {
        assert_eq!(
            enumerate_nonneg_tuples(0, 2),
            vec![NonNegTuple::new(vec![0, 0])]
        );
        assert_eq!(
            enumerate_nonneg_tuples(2, 1),
            vec![NonNegTuple::new(vec![2])]
        );
        let t22 = enumerate_nonneg_tuples(2, 2);
        assert_eq!(
            t22,
            vec![
                NonNegTuple::new(vec![2, 0]),
                NonNegTuple::new(vec![1, 1]),
                NonNegTuple::new(vec![0, 2]),
            ]
        );
    }

    #[test]
    fn index_text_roundtrip() {
        let k: Index = "2,1".parse().unwrap();
        assert_eq!(k, Index::of(&[2, 1]));
        assert_eq!(k.to_string(), "2,1");
        assert!("".parse::<Index>().is_err());
        assert!("2,0".parse::<Index>().is_err());
        assert!("2,x".parse::<Index>().is_err());
    }
}
