//! Membership predicates and exhaustive enumerators for the ten object
//! families.
//!
//! Permutation families are enumerated by filtering every permutation (or
//! signed permutation) of the right size in lexicographic order. Trees are
//! generated directly by inserting labels `2, …, n` in turn under any vertex
//! that still has room; type B trees come from relabeling each type A tree
//! onto every signed label set.
//!
//! Trees are ordered by their sorted label set and then by the sequence of
//! parents of the labels in ascending order.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{
    ends_with_ascent, has_double_descent, rtl_min_positions, Permutation, SignedPermutation,
};
use crate::tree::{IncreasingTree, OneTwoTree, SignedIncreasingTree};

/// Largest size enumerated over plain permutations or type A trees without
/// `force`.
pub const TYPE_A_GUARD: usize = 12;
/// Largest size enumerated over signed objects without `force`.
pub const TYPE_B_GUARD: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    /// Down-up alternating permutations.
    Alt,
    /// Down-up alternating signed permutations.
    AltB,
    /// Alternating signed permutations with a positive first entry.
    Snake,
    Tree,
    TreeB,
    Andre,
    Simsun,
    /// Signed André permutations (subwords by signed order).
    AndreB,
    /// Hetyei's signed André permutations.
    AndreH,
    SimsunB,
}

/// Which statistic a refinement `k` constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Refinement {
    First,
    Last,
    Pleaf,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 10] = [
        FamilyTag::Alt,
        FamilyTag::AltB,
        FamilyTag::Snake,
        FamilyTag::Tree,
        FamilyTag::TreeB,
        FamilyTag::Andre,
        FamilyTag::Simsun,
        FamilyTag::AndreB,
        FamilyTag::AndreH,
        FamilyTag::SimsunB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Alt => "alt",
            FamilyTag::AltB => "alt-b",
            FamilyTag::Snake => "snake",
            FamilyTag::Tree => "tree",
            FamilyTag::TreeB => "tree-b",
            FamilyTag::Andre => "andre",
            FamilyTag::Simsun => "simsun",
            FamilyTag::AndreB => "andre-b",
            FamilyTag::AndreH => "andre-h",
            FamilyTag::SimsunB => "simsun-b",
        }
    }

    pub fn is_signed(self) -> bool {
        matches!(
            self,
            FamilyTag::AltB
                | FamilyTag::Snake
                | FamilyTag::TreeB
                | FamilyTag::AndreB
                | FamilyTag::AndreH
                | FamilyTag::SimsunB
        )
    }

    pub fn refinement(self) -> Refinement {
        match self {
            FamilyTag::Alt | FamilyTag::AltB | FamilyTag::Snake => Refinement::First,
            FamilyTag::Tree | FamilyTag::TreeB => Refinement::Pleaf,
            _ => Refinement::Last,
        }
    }

    pub fn guard(self) -> usize {
        if self.is_signed() {
            TYPE_B_GUARD
        } else {
            TYPE_A_GUARD
        }
    }

    /// Errors if `n` exceeds the guard and `force` is unset.
    pub fn guard_check(self, n: usize, force: bool) -> Result<()> {
        if !force && n > self.guard() {
            return Err(Error::GuardExceeded {
                n,
                limit: self.guard(),
            });
        }
        Ok(())
    }

    /// Simsun families also exist at size 0 (the empty permutation), where
    /// the last entry is read as 0.
    fn allows_empty(self) -> bool {
        matches!(self, FamilyTag::Simsun | FamilyTag::SimsunB)
    }

    fn validate(self, n: usize, k: Option<i32>, force: bool) -> Result<()> {
        self.guard_check(n, force)?;
        let bad = |k| Error::InvalidRefinement {
            family: self.name(),
            n,
            k,
        };
        if n == 0 && !self.allows_empty() {
            return Err(bad(k.unwrap_or(0)));
        }
        let Some(k) = k else { return Ok(()) };
        let mag = k.unsigned_abs() as usize;
        let ok = if k == 0 {
            self.allows_empty()
        } else if self.is_signed() {
            mag <= n
        } else {
            k > 0 && mag <= n
        };
        if ok {
            Ok(())
        } else {
            Err(bad(k))
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// One enumerated object.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyObject {
    Perm(Permutation),
    Signed(SignedPermutation),
    Tree(IncreasingTree),
    SignedTree(SignedIncreasingTree),
}

impl FamilyObject {
    /// Entries for permutation objects, `None` for trees.
    pub fn entries(&self) -> Option<&[i32]> {
        match self {
            FamilyObject::Perm(p) => Some(p),
            FamilyObject::Signed(p) => Some(p),
            _ => None,
        }
    }

    pub fn tree(&self) -> Option<&OneTwoTree> {
        match self {
            FamilyObject::Tree(t) => Some(t),
            FamilyObject::SignedTree(t) => Some(t),
            _ => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match (self.entries(), self.tree()) {
            (Some(e), _) => serde_json::json!(e),
            (_, Some(t)) => serde_json::to_value(t.to_json()).expect("tree serializes"),
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for FamilyObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyObject::Perm(p) => p.fmt(f),
            FamilyObject::Signed(p) => p.fmt(f),
            FamilyObject::Tree(t) => t.fmt(f),
            FamilyObject::SignedTree(t) => t.fmt(f),
        }
    }
}

// ---------------------------------------------------------------------------
// Predicates

/// `w_1 > w_2 < w_3 > …`; length ≤ 1 is alternating.
pub fn is_alternating(w: &[i32]) -> bool {
    w.windows(2)
        .enumerate()
        .all(|(i, p)| if i % 2 == 0 { p[0] > p[1] } else { p[0] < p[1] })
}

pub fn is_snake(p: &SignedPermutation) -> bool {
    is_alternating(p) && p.first().is_some_and(|v| v > 0)
}

/// Calls `f` on every subword of the `k` smallest entries, `k = 1..=len`,
/// stopping early when `f` returns false.
fn all_smallest_subwords(w: &[i32], mut f: impl FnMut(&[i32]) -> bool) -> bool {
    let mut sorted = w.to_vec();
    sorted.sort_unstable();
    let mut sub = Vec::with_capacity(w.len());
    for &cutoff in &sorted {
        sub.clear();
        sub.extend(w.iter().copied().filter(|&v| v <= cutoff));
        if !f(&sub) {
            return false;
        }
    }
    true
}

fn andre_word(w: &[i32]) -> bool {
    all_smallest_subwords(w, |s| !has_double_descent(s) && ends_with_ascent(s))
}

fn simsun_word(w: &[i32]) -> bool {
    all_smallest_subwords(w, |s| !has_double_descent(s))
}

pub fn is_andre(p: &Permutation) -> bool {
    andre_word(p)
}

pub fn is_simsun(p: &Permutation) -> bool {
    simsun_word(p)
}

/// The André condition with subwords taken in signed order.
pub fn is_signed_andre_b(p: &SignedPermutation) -> bool {
    andre_word(p)
}

/// Valley formulation: no double descents, ends with an ascent, and at every
/// valley `σ_{i-1} > σ_i < σ_{i+1}` the maximal block of larger letters just
/// left of `σ_i` has a larger minimum than the block just right of it.
pub fn is_andre_valley(p: &Permutation) -> bool {
    let w: &[i32] = p;
    let n = w.len();
    if has_double_descent(w) || !ends_with_ascent(w) {
        return false;
    }
    for i in 1..n.saturating_sub(1) {
        let v = w[i];
        if !(w[i - 1] > v && v < w[i + 1]) {
            continue;
        }
        let left_min = w[..i].iter().rev().take_while(|&&x| x > v).min();
        let right_min = w[i + 1..].iter().take_while(|&&x| x > v).min();
        match (left_min, right_min) {
            (Some(l), Some(r)) if l > r => {}
            _ => return false,
        }
    }
    true
}

/// Positions (0-indexed) of suffix minima of the absolute-value word.
fn forced_positive(p: &[i32]) -> Vec<usize> {
    let abs: Vec<i32> = p.iter().map(|v| v.abs()).collect();
    rtl_min_positions(&abs).into_iter().map(|i| i - 1).collect()
}

/// Hetyei's signed André permutations: the absolute-value word is André and
/// every suffix minimum of it carries a positive sign.
pub fn is_hetyei_andre(p: &SignedPermutation) -> bool {
    andre_word(&p.abs_word()) && forced_positive(p).into_iter().all(|i| p[i] > 0)
}

/// The absolute-value word is Simsun and every suffix minimum of it carries a
/// positive sign.
pub fn is_signed_simsun(p: &SignedPermutation) -> bool {
    simsun_word(&p.abs_word()) && forced_positive(p).into_iter().all(|i| p[i] > 0)
}

// ---------------------------------------------------------------------------
// Raw generators

/// Steps `w` to its lexicographic successor; false after the last one.
pub(crate) fn next_permutation(w: &mut [i32]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| w[i] < w[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| w[j] > w[i]).unwrap();
    w.swap(i, j);
    w[i + 1..].reverse();
    true
}

/// Every permutation of `[n]` in lexicographic order.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[i32])) {
    let mut w: Vec<i32> = (1..=n as i32).collect();
    loop {
        f(&w);
        if !next_permutation(&mut w) {
            break;
        }
    }
}

/// Every signed permutation of `[n]` in lexicographic (signed) order.
pub fn for_each_signed_permutation(n: usize, mut f: impl FnMut(&[i32])) {
    fn go(n: usize, used: &mut [bool], cur: &mut Vec<i32>, f: &mut dyn FnMut(&[i32])) {
        if cur.len() == n {
            f(cur);
            return;
        }
        let alphabet = (-(n as i32)..=-1).chain(1..=n as i32);
        for v in alphabet {
            let a = v.unsigned_abs() as usize;
            if used[a] {
                continue;
            }
            used[a] = true;
            cur.push(v);
            go(n, used, cur, f);
            cur.pop();
            used[a] = false;
        }
    }
    let mut used = vec![false; n + 1];
    go(n, &mut used, &mut Vec::with_capacity(n), &mut f);
}

/// Every increasing 1-2 tree on `[n]`, generated by inserting `m = 2..=n`
/// under each vertex with fewer than two children, parents tried in
/// ascending order (which yields the tree order).
pub fn for_each_tree(n: usize, mut f: impl FnMut(&IncreasingTree)) {
    fn go(
        m: usize,
        n: usize,
        parent: &mut Vec<i32>,
        kids: &mut [u8],
        f: &mut dyn FnMut(&IncreasingTree),
    ) {
        if m > n {
            let labels: Vec<i32> = (1..=n as i32).collect();
            let edges: Vec<(i32, i32)> = parent
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, i as i32 + 2))
                .collect();
            f(&IncreasingTree::from_edges(&labels, &edges).expect("generated tree is valid"));
            return;
        }
        for p in 1..m {
            if kids[p] < 2 {
                kids[p] += 1;
                parent.push(p as i32);
                go(m + 1, n, parent, kids, f);
                parent.pop();
                kids[p] -= 1;
            }
        }
    }
    if n == 0 {
        return;
    }
    let mut kids = vec![0u8; n + 1];
    go(2, n, &mut Vec::with_capacity(n), &mut kids, &mut f);
}

/// Every type B increasing 1-2 tree on `[n]`: each type A tree relabeled
/// onto each of the `2^n` signed label sets.
pub fn for_each_signed_tree(n: usize, mut f: impl FnMut(&SignedIncreasingTree)) {
    let mut base = Vec::new();
    for_each_tree(n, |t| base.push(t.clone()));
    let mut label_sets: Vec<Vec<i32>> = (0..1u32 << n)
        .map(|mask| {
            let mut ls: Vec<i32> = (1..=n as i32)
                .map(|i| if mask >> (i - 1) & 1 == 1 { -i } else { i })
                .collect();
            ls.sort_unstable();
            ls
        })
        .collect();
    label_sets.sort();
    for ls in &label_sets {
        for t in &base {
            let relabeled = t.relabel_onto(ls).expect("same size");
            f(&SignedIncreasingTree::new(relabeled).expect("signed labels cover [n]"));
        }
    }
}

// ---------------------------------------------------------------------------
// Family enumeration

/// A configured family enumeration.
#[derive(Debug, Clone, Copy)]
pub struct Enumeration {
    tag: FamilyTag,
    n: usize,
    k: Option<i32>,
    force: bool,
}

impl Enumeration {
    pub fn new(tag: FamilyTag, n: usize) -> Self {
        Enumeration {
            tag,
            n,
            k: None,
            force: false,
        }
    }

    pub fn refine(mut self, k: Option<i32>) -> Self {
        self.k = k;
        self
    }

    /// Lifts the size guard.
    pub fn force(mut self, force: bool) -> Self {
        self.force = force;
        self
    }

    pub fn validate(&self) -> Result<()> {
        self.tag.validate(self.n, self.k, self.force)
    }

    fn keep_stat(&self, v: Option<i32>) -> bool {
        match self.k {
            None => true,
            Some(0) => v.is_none(),
            Some(k) => v == Some(k),
        }
    }

    fn keep_entries(&self, w: &[i32]) -> bool {
        let stat = match self.tag.refinement() {
            Refinement::First => w.first(),
            _ => w.last(),
        };
        self.keep_stat(stat.copied())
    }

    /// Streams the family in order.
    pub fn for_each(&self, mut f: impl FnMut(FamilyObject)) -> Result<()> {
        self.validate()?;
        let n = self.n;
        let tag = self.tag;
        if n == 0 {
            if self.keep_stat(None) {
                f(match tag {
                    FamilyTag::Simsun => FamilyObject::Perm(Permutation::empty()),
                    _ => FamilyObject::Signed(SignedPermutation::empty()),
                });
            }
            return Ok(());
        }
        match tag {
            FamilyTag::Tree => for_each_tree(n, |t| {
                if self.keep_stat(Some(t.pleaf())) {
                    f(FamilyObject::Tree(t.clone()));
                }
            }),
            FamilyTag::TreeB => for_each_signed_tree(n, |t| {
                if self.keep_stat(Some(t.pleaf())) {
                    f(FamilyObject::SignedTree(t.clone()));
                }
            }),
            FamilyTag::Alt | FamilyTag::Andre | FamilyTag::Simsun => for_each_permutation(n, |w| {
                if !self.keep_entries(w) {
                    return;
                }
                let p = Permutation::from_vec_unchecked(w.to_vec());
                let member = match tag {
                    FamilyTag::Alt => is_alternating(&p),
                    FamilyTag::Andre => is_andre(&p),
                    _ => is_simsun(&p),
                };
                if member {
                    f(FamilyObject::Perm(p));
                }
            }),
            _ => for_each_signed_permutation(n, |w| {
                if !self.keep_entries(w) {
                    return;
                }
                let p = SignedPermutation::from_vec_unchecked(w.to_vec());
                let member = match tag {
                    FamilyTag::AltB => is_alternating(&p),
                    FamilyTag::Snake => is_snake(&p),
                    FamilyTag::AndreB => is_signed_andre_b(&p),
                    FamilyTag::AndreH => is_hetyei_andre(&p),
                    _ => is_signed_simsun(&p),
                };
                if member {
                    f(FamilyObject::Signed(p));
                }
            }),
        }
        Ok(())
    }

    pub fn collect(&self) -> Result<Vec<FamilyObject>> {
        let mut out = Vec::new();
        self.for_each(|o| out.push(o))?;
        Ok(out)
    }

    pub fn count(&self) -> Result<u64> {
        let mut c = 0;
        self.for_each(|_| c += 1)?;
        Ok(c)
    }
}

/// All members of a family of size `n` (optionally refined by `k`), in order.
pub fn enumerate_family(tag: FamilyTag, n: usize, k: Option<i32>) -> Result<Vec<FamilyObject>> {
    Enumeration::new(tag, n).refine(k).collect()
}

pub fn count_family(tag: FamilyTag, n: usize, k: Option<i32>) -> Result<u64> {
    Enumeration::new(tag, n).refine(k).count()
}

/// `|A^H_{n,k}|` without touching signed permutations: each André
/// permutation of `[n]` ending in `k` contributes `2^(n - #suffix minima)`.
pub fn count_hetyei_fast(n: usize, k: i32) -> Result<u64> {
    count_hetyei_fast_forced(n, k, false)
}

pub fn count_hetyei_fast_forced(n: usize, k: i32, force: bool) -> Result<u64> {
    FamilyTag::Andre.validate(n, Some(k), force)?;
    let mut total = 0u64;
    for_each_permutation(n, |w| {
        if w.last() != Some(&k) {
            return;
        }
        if andre_word(w) {
            total += 1u64 << (n - rtl_min_positions(w).len());
        }
    });
    Ok(total)
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

    fn strings(objs: &[FamilyObject]) -> Vec<String> {
        objs.iter().map(|o| o.to_string()).collect()
    }

    #[test]
    fn alternating() {
        assert!(is_alternating(&p("2143")));
        assert!(!is_alternating(&p("1234")));
        assert!(is_alternating(&sp("2 -3 1")));
        assert!(is_alternating(&[1]));
    }

    #[test]
    fn snakes() {
        assert!(is_snake(&sp("3 -2 -1")));
        assert!(!is_snake(&sp("-1 2 -3")));
        assert!(!is_snake(&sp("-1 -2 3")));
        assert!(is_snake(&sp("1")));
    }

    #[test]
    fn andre_and_simsun() {
        assert!(is_andre(&p("31245")));
        assert!(!is_andre(&p("43512")));
        assert!(is_andre(&p("684512937")));
        assert!(is_simsun(&p("25134")));
        assert!(!is_andre(&p("25134")));
        assert!(is_simsun(&p("213")));
        assert!(!is_simsun(&p("321")));
    }

    #[test]
    fn valley_definition() {
        assert!(is_andre_valley(&p("31245")));
        assert!(!is_andre_valley(&p("43512")));
        assert!(is_andre_valley(&p("1")));
        assert!(is_andre_valley(&Permutation::empty()));
    }

    #[test]
    fn signed_andre() {
        assert!(is_signed_andre_b(&sp("2 -4 -1 3 5")));
        assert!(is_signed_andre_b(&sp("3 -2 1")));
        assert!(!is_signed_andre_b(&sp("-1 -2 3")));
    }

    #[test]
    fn hetyei_and_signed_simsun() {
        assert!(is_hetyei_andre(&sp("-3 1 2 4")));
        assert!(is_hetyei_andre(&sp("1 -4 2 3")));
        assert!(!is_hetyei_andre(&sp("-1 2 3 4")));
        assert!(is_signed_simsun(&sp("-2 1 3")));
        assert!(is_signed_simsun(&sp("2 -3 1")));
        assert!(!is_signed_simsun(&sp("-1 2 3")));
    }

    #[test]
    fn small_families() {
        assert_eq!(
            strings(&enumerate_family(FamilyTag::Andre, 4, None).unwrap()),
            ["1234", "1423", "3124", "3412", "4123"]
        );
        assert_eq!(
            strings(&enumerate_family(FamilyTag::Simsun, 3, None).unwrap()),
            ["123", "132", "213", "231", "312"]
        );
        assert_eq!(
            strings(&enumerate_family(FamilyTag::Alt, 4, None).unwrap()),
            ["2143", "3142", "3241", "4132", "4231"]
        );
        assert_eq!(count_family(FamilyTag::TreeB, 3, None).unwrap(), 16);
        assert_eq!(count_family(FamilyTag::Snake, 3, None).unwrap(), 11);
    }

    #[test]
    fn refined_counts() {
        assert_eq!(count_family(FamilyTag::Alt, 5, Some(3)).unwrap(), 4);
        assert_eq!(count_family(FamilyTag::Snake, 4, Some(2)).unwrap(), 14);
        for n in 2..=6 {
            assert_eq!(count_family(FamilyTag::Andre, n, Some(1)).unwrap(), 0);
        }
        assert_eq!(count_family(FamilyTag::Simsun, 0, None).unwrap(), 1);
        assert_eq!(count_family(FamilyTag::Simsun, 0, Some(0)).unwrap(), 1);
        assert_eq!(count_family(FamilyTag::Simsun, 3, Some(0)).unwrap(), 0);
    }

    #[test]
    fn guards_and_bad_refinements() {
        assert!(matches!(
            count_family(FamilyTag::Alt, 13, None),
            Err(Error::GuardExceeded { n: 13, limit: 12 })
        ));
        assert!(matches!(
            count_family(FamilyTag::AndreB, 9, None),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(Enumeration::new(FamilyTag::Alt, 13)
            .force(true)
            .validate()
            .is_ok());
        assert!(count_family(FamilyTag::Alt, 4, Some(5)).is_err());
        assert!(count_family(FamilyTag::Alt, 4, Some(-1)).is_err());
        assert!(count_family(FamilyTag::Alt, 4, Some(0)).is_err());
        assert!(count_family(FamilyTag::Alt, 0, None).is_err());
        assert!(count_family(FamilyTag::Snake, 3, Some(-4)).is_err());
        assert_eq!(count_family(FamilyTag::Snake, 3, Some(-1)).unwrap(), 0);
    }

    #[test]
    fn hetyei_fast_examples() {
        assert_eq!(count_hetyei_fast(4, 4).unwrap(), 3);
        assert_eq!(count_hetyei_fast(4, 2).unwrap(), 4);
        assert!(count_hetyei_fast(13, 2).is_err());
    }

    #[test]
    fn tags_round_trip() {
        for t in FamilyTag::ALL {
            assert_eq!(t.name().parse::<FamilyTag>().unwrap(), t);
        }
        assert!("alt_b".parse::<FamilyTag>().is_err());
    }

    #[test]
    fn lexicographic_generators() {
        let mut seen = Vec::new();
        for_each_signed_permutation(2, |w| seen.push(w.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![-2, -1],
                vec![-2, 1],
                vec![-1, -2],
                vec![-1, 2],
                vec![1, -2],
                vec![1, 2],
                vec![2, -1],
                vec![2, 1]
            ]
        );
        let mut c = 0;
        for_each_permutation(5, |_| c += 1);
        assert_eq!(c, 120);
    }
}
