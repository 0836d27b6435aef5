//! Permutations, signed permutations and the word statistics built on them.
//!
//! Positions are 1-indexed in every public API that returns positions.
//! Entries are `i32`; a signed entry `-k` is the barred letter k̄.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of pairwise distinct integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct Word(Vec<i32>);

impl Word {
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        let mut seen = entries.clone();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateValue(w[0]));
        }
        Ok(Word(entries))
    }

    pub fn into_vec(self) -> Vec<i32> {
        self.0
    }
}

impl Deref for Word {
    type Target = [i32];
    fn deref(&self) -> &[i32] {
        &self.0
    }
}

impl TryFrom<Vec<i32>> for Word {
    type Error = Error;
    fn try_from(v: Vec<i32>) -> Result<Self> {
        Word::new(v)
    }
}

impl From<Word> for Vec<i32> {
    fn from(w: Word) -> Self {
        w.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_entries(&self.0))
    }
}

/// A permutation of `{1, …, n}`.
///
/// The empty permutation (n = 0) exists only as the image of the length-1
/// André permutation under the André-to-Simsun map.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct Permutation(Vec<i32>);

impl Permutation {
    pub fn from_sequence(values: &[i32]) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in values {
            if v < 1 || v as usize > n {
                return Err(Error::ValueOutOfRange { value: v, n });
            }
            if std::mem::replace(&mut seen[v as usize], true) {
                return Err(Error::DuplicateValue(v));
            }
        }
        Ok(Permutation(values.to_vec()))
    }

    /// Wraps entries already known to form a permutation of `[n]`.
    pub(crate) fn from_vec_unchecked(values: Vec<i32>) -> Self {
        debug_assert!(Permutation::from_sequence(&values).is_ok());
        Permutation(values)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as i32).collect())
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<i32> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<i32> {
        self.0.last().copied()
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i32> {
        self.0
    }

    pub fn to_word(&self) -> Word {
        Word(self.0.clone())
    }

    pub fn subword_smallest(&self, k: usize) -> Result<Word> {
        subword_smallest(&self.0, k)
    }
}

impl Deref for Permutation {
    type Target = [i32];
    fn deref(&self) -> &[i32] {
        &self.0
    }
}

impl TryFrom<Vec<i32>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<i32>) -> Result<Self> {
        Permutation::from_sequence(&v)
    }
}

impl From<Permutation> for Vec<i32> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Permutation::from_sequence(&parse_entries(s)?)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_entries(&self.0))
    }
}

/// A signed permutation: nonzero entries whose absolute values are `{1, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SignedPermutation(Vec<i32>);

impl SignedPermutation {
    pub fn from_sequence(values: &[i32]) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in values {
            if v == 0 {
                return Err(Error::ZeroEntry);
            }
            let a = v.unsigned_abs() as usize;
            if a > n {
                return Err(Error::ValueOutOfRange { value: v, n });
            }
            if std::mem::replace(&mut seen[a], true) {
                return Err(Error::DuplicateAbsValue(a as i32));
            }
        }
        Ok(SignedPermutation(values.to_vec()))
    }

    pub(crate) fn from_vec_unchecked(values: Vec<i32>) -> Self {
        debug_assert!(SignedPermutation::from_sequence(&values).is_ok());
        SignedPermutation(values)
    }

    pub fn empty() -> Self {
        SignedPermutation(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<i32> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<i32> {
        self.0.last().copied()
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i32> {
        self.0
    }

    /// The word `|π_1| … |π_n|`.
    pub fn abs_word(&self) -> Permutation {
        Permutation(self.0.iter().map(|v| v.abs()).collect())
    }

    /// The sign function ε: `true` where the entry is positive.
    pub fn signs(&self) -> Vec<bool> {
        self.0.iter().map(|&v| v > 0).collect()
    }

    pub fn subword_smallest(&self, k: usize) -> Result<Word> {
        subword_smallest(&self.0, k)
    }
}

impl Deref for SignedPermutation {
    type Target = [i32];
    fn deref(&self) -> &[i32] {
        &self.0
    }
}

impl TryFrom<Vec<i32>> for SignedPermutation {
    type Error = Error;
    fn try_from(v: Vec<i32>) -> Result<Self> {
        SignedPermutation::from_sequence(&v)
    }
}

impl From<SignedPermutation> for Vec<i32> {
    fn from(p: SignedPermutation) -> Self {
        p.0
    }
}

impl From<Permutation> for SignedPermutation {
    fn from(p: Permutation) -> Self {
        SignedPermutation(p.0)
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SignedPermutation::from_sequence(&parse_entries(s)?)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_entries(&self.0))
    }
}

/// Subsequence of the `k` smallest entries (signed integer order), in the
/// order they appear.
pub fn subword_smallest(w: &[i32], k: usize) -> Result<Word> {
    if k == 0 || k > w.len() {
        return Err(Error::IndexOutOfRange {
            index: k,
            len: w.len(),
        });
    }
    let mut sorted = w.to_vec();
    sorted.sort_unstable();
    let cutoff = sorted[k - 1];
    Ok(Word(w.iter().copied().filter(|&v| v <= cutoff).collect()))
}

pub fn has_double_descent(w: &[i32]) -> bool {
    w.windows(3).any(|t| t[0] > t[1] && t[1] > t[2])
}

/// Length ≤ 1 counts as ending with an ascent.
pub fn ends_with_ascent(w: &[i32]) -> bool {
    match w {
        [.., a, b] => a < b,
        _ => true,
    }
}

/// 1-indexed positions `i` with `w_i = min(w_i, …, w_m)`, increasing.
pub fn rtl_min_positions(w: &[i32]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut min = i32::MAX;
    for (i, &v) in w.iter().enumerate().rev() {
        if v < min {
            min = v;
            out.push(i + 1);
        }
    }
    out.reverse();
    out
}

/// Applies the unique order isomorphism from the entries of `w` onto
/// `targets` (which need not be sorted).
pub fn order_relabel(w: &[i32], targets: &[i32]) -> Result<Vec<i32>> {
    let map = OrderMap::new(w, targets)?;
    Ok(w.iter().map(|&v| map.apply(v)).collect())
}

/// Order-preserving bijection between two equal-size sets of integers.
#[derive(Debug, Clone)]
pub(crate) struct OrderMap {
    from: Vec<i32>,
    to: Vec<i32>,
}

impl OrderMap {
    pub(crate) fn new(source: &[i32], targets: &[i32]) -> Result<Self> {
        let mut from = source.to_vec();
        from.sort_unstable();
        let mut to = targets.to_vec();
        to.sort_unstable();
        if let Some(w) = to.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateValue(w[0]));
        }
        if from.len() != to.len() {
            return Err(Error::SizeMismatch {
                expected: from.len(),
                actual: to.len(),
            });
        }
        Ok(OrderMap { from, to })
    }

    /// Maps onto `1..=n`.
    pub(crate) fn standardize(source: &[i32]) -> Self {
        let mut from = source.to_vec();
        from.sort_unstable();
        let to = (1..=from.len() as i32).collect();
        OrderMap { from, to }
    }

    pub(crate) fn apply(&self, v: i32) -> i32 {
        let i = self
            .from
            .binary_search(&v)
            .expect("label outside order map");
        self.to[i]
    }

    pub(crate) fn inverse(&self) -> OrderMap {
        OrderMap {
            from: self.to.clone(),
            to: self.from.clone(),
        }
    }
}

/// Parses permutation text: whitespace- or comma-separated integers, or a
/// single compact token read digit by digit where `-` bars the next digit
/// (`"1-23"` is 1 2̄ 3).
pub fn parse_entries(text: &str) -> Result<Vec<i32>> {
    let t = text.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    let separated = t.contains(|c: char| c == ',' || c.is_whitespace());
    if separated {
        let base = text.len() - text.trim_start().len();
        let mut out = Vec::new();
        let mut offset = base;
        for raw in t.split(|c: char| c == ',' || c.is_whitespace()) {
            let here = offset;
            offset += raw.len() + 1;
            if raw.is_empty() {
                continue;
            }
            let v = raw.parse::<i32>().map_err(|_| Error::Parse {
                offset: here,
                message: format!("`{raw}` is not an integer"),
            })?;
            out.push(v);
        }
        return Ok(out);
    }
    let base = text.len() - text.trim_start().len();
    let mut out = Vec::new();
    let mut negate = false;
    for (i, c) in t.char_indices() {
        match c {
            '-' if !negate => negate = true,
            '0'..='9' => {
                let d = c as i32 - '0' as i32;
                out.push(if negate { -d } else { d });
                negate = false;
            }
            _ => {
                return Err(Error::Parse {
                    offset: base + i,
                    message: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    if negate {
        return Err(Error::Parse {
            offset: base + t.len(),
            message: "dangling `-`".into(),
        });
    }
    Ok(out)
}

/// Compact digit form when every entry is a single digit, space-separated
/// otherwise.
pub fn format_entries(w: &[i32]) -> String {
    if w.iter().all(|v| v.abs() <= 9) {
        w.iter().map(|v| v.to_string()).collect()
    } else {
        w.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn sp(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn perm_validation() {
        assert_eq!(p("2143").as_slice(), &[2, 1, 4, 3]);
        assert_eq!(p("1").as_slice(), &[1]);
        assert_eq!(
            Permutation::from_sequence(&[2, 2, 3]),
            Err(Error::DuplicateValue(2))
        );
        assert!(matches!(
            Permutation::from_sequence(&[1, 5]),
            Err(Error::ValueOutOfRange { value: 5, .. })
        ));
    }

    #[test]
    fn signed_perm_validation() {
        assert_eq!(sp("1 -2 3").as_slice(), &[1, -2, 3]);
        assert_eq!(sp("-1").as_slice(), &[-1]);
        assert_eq!(
            SignedPermutation::from_sequence(&[1, -1]),
            Err(Error::DuplicateAbsValue(1))
        );
        assert_eq!(
            SignedPermutation::from_sequence(&[0, 1]),
            Err(Error::ZeroEntry)
        );
        assert!(SignedPermutation::from_sequence(&[1, 3]).is_err());
    }

    #[test]
    fn text_forms() {
        assert_eq!(
            parse_entries("684512937").unwrap(),
            vec![6, 8, 4, 5, 1, 2, 9, 3, 7]
        );
        assert_eq!(parse_entries("1-23").unwrap(), vec![1, -2, 3]);
        assert_eq!(parse_entries(" 10, 2 ,-3 ").unwrap(), vec![10, 2, -3]);
        assert!(parse_entries("1x").is_err());
        assert!(parse_entries("12-").is_err());
        assert!(parse_entries("--1").is_err());
        assert_eq!(format_entries(&[5, 7, -1, 2]), "57-12");
        assert_eq!(format_entries(&[10, 2]), "10 2");
    }

    #[test]
    fn subwords() {
        assert_eq!(p("31245").subword_smallest(3).unwrap()[..], [3, 1, 2]);
        assert_eq!(sp("2 -4 -1 3 5").subword_smallest(1).unwrap()[..], [-4]);
        assert_eq!(
            sp("2 -4 -1 3 5").subword_smallest(3).unwrap()[..],
            [2, -4, -1]
        );
        let s = p("43512");
        assert_eq!(s.subword_smallest(5).unwrap()[..], *s.as_slice());
        assert!(s.subword_smallest(0).is_err());
        assert!(s.subword_smallest(6).is_err());
    }

    #[test]
    fn descents_and_ascents() {
        assert!(has_double_descent(&[4, 3, 1, 2]));
        assert!(!has_double_descent(&[3, 1, 2]));
        assert!(!has_double_descent(&[2, 1]));
        assert!(ends_with_ascent(&[3, 1, 2, 4]));
        assert!(!ends_with_ascent(&[2, 1]));
        assert!(ends_with_ascent(&[1]));
        assert!(ends_with_ascent(&[]));
    }

    #[test]
    fn right_to_left_minima() {
        assert_eq!(
            rtl_min_positions(&[6, 8, 4, 5, 1, 2, 9, 3, 7]),
            vec![5, 6, 8, 9]
        );
        assert_eq!(rtl_min_positions(&[1, 2, 3, 4]), vec![1, 2, 3, 4]);
        assert_eq!(rtl_min_positions(&[5, 7, 3, 4, 1, 2, 8, 6]), vec![5, 6, 8]);
    }

    #[test]
    fn relabeling() {
        let s = sp("6 -3 9 -8 2 -1 7 -4 5");
        let t = order_relabel(&s, &(1..=9).collect::<Vec<_>>()).unwrap();
        assert_eq!(t, vec![7, 3, 9, 1, 5, 4, 8, 2, 6]);
        let id = p("2143");
        assert_eq!(order_relabel(&id, &[1, 2, 3, 4]).unwrap(), id.as_slice());
        assert!(matches!(
            order_relabel(&id, &[1, 2, 3]),
            Err(Error::SizeMismatch { .. })
        ));
    }
}
