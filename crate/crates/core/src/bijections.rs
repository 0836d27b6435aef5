//! Bijections between alternating permutations, increasing 1-2 trees,
//! André permutations and Simsun permutations, in types A and B.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{
    for_each_permutation, is_alternating, is_andre, is_hetyei_andre, TYPE_A_GUARD,
};
use crate::perm::{rtl_min_positions, OrderMap, Permutation, SignedPermutation};
use crate::tree::{IncreasingTree, OneTwoTree, OrderedTree, SignedIncreasingTree};

/// Reverse inorder reading `T ↦ André permutation`.
pub fn omega(t: &IncreasingTree) -> Permutation {
    let mut w = t.inorder();
    w.reverse();
    Permutation::from_vec_unchecked(w)
}

/// Rebuilds the tree whose reverse inorder reading is `p`.
pub fn omega_inv(p: &Permutation) -> Result<IncreasingTree> {
    if p.is_empty() || !is_andre(p) {
        return Err(Error::Precondition("a non-empty André permutation"));
    }
    let mut w = p.as_slice().to_vec();
    w.reverse();
    let n = w.len();
    let mut o = OrderedTree::with_capacity(n);
    // Each segment of the inorder word hangs its minimum under a parent, on
    // the right side when the flag is set.
    type Segment = (usize, usize, Option<(usize, bool)>);
    let mut stack: Vec<Segment> = vec![(0, n, None)];
    while let Some((lo, hi, attach)) = stack.pop() {
        let (off, &m) = w[lo..hi]
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| *v)
            .unwrap();
        let (i, m) = (lo + off, m as usize);
        match attach {
            None => o.root = Some(m),
            Some((par, false)) => o.set_left(par, Some(m)),
            Some((par, true)) => o.set_right(par, Some(m)),
        }
        if lo < i {
            stack.push((lo, i, Some((m, false))));
        }
        if i + 1 < hi {
            stack.push((i + 1, hi, Some((m, true))));
        }
    }
    for v in 1..=n {
        let ok = match (o.left[v], o.right[v]) {
            (None, Some(_)) => false,
            (Some(l), Some(r)) => l < r,
            _ => true,
        };
        if !ok {
            return Err(Error::Precondition("a non-empty André permutation"));
        }
    }
    IncreasingTree::new(o.canonicalize()?)
}

/// Simsun image of an André permutation: move every right-to-left minimum
/// into the slot of the previous one, drop the last entry and subtract one.
pub fn phi(p: &Permutation) -> Result<Permutation> {
    if p.is_empty() || !is_andre(p) {
        return Err(Error::Precondition("a non-empty André permutation"));
    }
    let w = p.as_slice();
    let mut out = w.to_vec();
    let mins = rtl_min_positions(w);
    for pair in mins.windows(2) {
        out[pair[0] - 1] = w[pair[1] - 1];
    }
    out.pop();
    for v in &mut out {
        *v -= 1;
    }
    Ok(Permutation::from_vec_unchecked(out))
}

/// Inverse of [`phi`]: shift up, append `n + 1` and move each
/// right-to-left minimum back one slot, leaving `1` in the first.
pub fn phi_inv(s: &Permutation) -> Result<Permutation> {
    if !crate::families::is_simsun(s) {
        return Err(Error::Precondition("a Simsun permutation"));
    }
    let mut w: Vec<i32> = s.iter().map(|v| v + 1).collect();
    w.push(s.len() as i32 + 2);
    // Suffix minima of the shifted word plus the appended maximum, read left
    // to right, are the slots 1 travels through.
    let mins = rtl_min_positions(&w);
    let mut out = w.clone();
    out[mins[0] - 1] = 1;
    for pair in mins.windows(2) {
        out[pair[1] - 1] = w[pair[0] - 1];
    }
    Ok(Permutation::from_vec_unchecked(out))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AlgoCCase {
    C1,
    C2,
}

/// One insertion step of the pair `(σ_{2i-1}, σ_{2i})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgoCStep {
    pub i: usize,
    pub a: i32,
    pub b: Option<i32>,
    pub case: AlgoCCase,
}

/// Steps in execution order (`i` descending) and the trees `T^(m)`, …,
/// `T^(1)` seen along the way.
#[derive(Debug, Clone, Default, Serialize)]
pub struct AlgoCTrace {
    pub steps: Vec<AlgoCStep>,
    #[serde(serialize_with = "literals")]
    pub trees: Vec<OneTwoTree>,
}

fn literals<S: serde::Serializer>(
    trees: &[OneTwoTree],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(trees.iter().map(OneTwoTree::to_literal))
}

impl AlgoCTrace {
    /// `a_i` indexed by `i` (`1..m`), as in a left-to-right table.
    pub fn a_by_index(&self) -> Vec<i32> {
        let mut v: Vec<_> = self.steps.iter().map(|s| (s.i, s.a)).collect();
        v.sort_unstable();
        v.into_iter().map(|(_, a)| a).collect()
    }

    pub fn b_by_index(&self) -> Vec<Option<i32>> {
        let mut v: Vec<_> = self.steps.iter().map(|s| (s.i, s.b)).collect();
        v.sort_unstable();
        v.into_iter().map(|(_, b)| b).collect()
    }
}

/// Alternating permutation to increasing 1-2 tree by pair insertion.
pub fn psi(p: &Permutation) -> Result<IncreasingTree> {
    psi_c(p, false).map(|(t, _)| t)
}

/// Pair insertion with an optional trace.
pub fn psi_c(p: &Permutation, trace: bool) -> Result<(IncreasingTree, AlgoCTrace)> {
    if p.is_empty() || !is_alternating(p) {
        return Err(Error::Precondition("a non-empty alternating permutation"));
    }
    let s: Vec<usize> = p.iter().map(|&v| v as usize).collect();
    let n = s.len();
    let m = n.div_ceil(2);
    let mut o = OrderedTree::with_capacity(n);
    o.root = Some(s[n - 1]);
    if n.is_multiple_of(2) {
        o.set_left(s[n - 1], Some(s[n - 2]));
    }
    let mut tr = AlgoCTrace::default();
    if trace {
        tr.trees.push(o.canonicalize()?);
    }
    for i in (1..m).rev() {
        let (hi, lo) = (s[2 * i - 2], s[2 * i - 1]);
        let mut a = o.root.unwrap();
        while a < lo {
            a = o.left[a].expect("minimal path ends below the inserted pair");
        }
        if a < hi {
            let mut chain = vec![a];
            while let Some(r) = o.right[*chain.last().unwrap()] {
                if r > hi {
                    break;
                }
                chain.push(r);
            }
            let b = *chain.last().unwrap();
            let mut subs: Vec<Option<usize>> = chain.iter().map(|&v| o.left[v]).collect();
            subs.push(o.right[b]);
            o.replace_in_parent(a, lo);
            o.set_left(lo, Some(a));
            o.set_right(lo, subs[0]);
            for t in 0..chain.len() {
                let next = chain.get(t + 1).copied().unwrap_or(hi);
                o.set_left(chain[t], Some(next));
                o.set_right(chain[t], subs[t + 1]);
            }
            if trace {
                tr.steps.push(AlgoCStep {
                    i,
                    a: a as i32,
                    b: Some(b as i32),
                    case: AlgoCCase::C1,
                });
            }
        } else {
            o.replace_in_parent(a, lo);
            o.set_left(lo, Some(hi));
            o.set_right(lo, Some(a));
            if trace {
                tr.steps.push(AlgoCStep {
                    i,
                    a: a as i32,
                    b: None,
                    case: AlgoCCase::C2,
                });
            }
        }
        if trace {
            tr.trees.push(o.canonicalize()?);
        }
    }
    Ok((IncreasingTree::new(o.canonicalize()?)?, tr))
}

/// Recursive construction on the first two letters; agrees with [`psi`].
pub fn psi_b(p: &Permutation) -> Result<IncreasingTree> {
    if p.is_empty() || !is_alternating(p) {
        return Err(Error::Precondition("a non-empty alternating permutation"));
    }
    let parent = psi_b_parents(p);
    let labels: Vec<i32> = (1..=p.len() as i32).collect();
    let edges: Vec<(i32, i32)> = (1..=p.len())
        .filter(|&v| parent[v] != 0)
        .map(|v| (parent[v] as i32, v as i32))
        .collect();
    IncreasingTree::from_edges(&labels, &edges)
}

/// Parent array indexed by label; 0 marks the root.
fn psi_b_parents(w: &[i32]) -> Vec<usize> {
    let n = w.len();
    let mut parent = vec![0usize; n + 1];
    if n == 1 {
        return parent;
    }
    if n == 2 {
        parent[2] = 1;
        return parent;
    }
    let k = w[0] as usize;
    if w[1] as usize == k - 1 {
        let rest: Vec<i32> = w[2..]
            .iter()
            .map(|&x| if (x as usize) < k - 1 { x } else { x - 2 })
            .collect();
        let sub = psi_b_parents(&rest);
        let up = |x: usize| if x == 0 || x <= k - 2 { x } else { x + 2 };
        for x in 1..=n - 2 {
            parent[up(x)] = up(sub[x]);
        }
        parent[k - 1] = 0;
        parent[k] = 0;
        let mut children = vec![Vec::new(); n + 1];
        let mut root = 0;
        for v in 1..=n {
            if v == k - 1 || v == k {
                continue;
            }
            if parent[v] == 0 {
                root = v;
            } else {
                children[parent[v]].push(v);
            }
        }
        let mut m = root;
        while m < k {
            m = *children[m].iter().min().expect("minimal path passes k");
        }
        parent[k - 1] = parent[m];
        parent[m] = k - 1;
        parent[k] = k - 1;
        parent
    } else {
        let mut swapped = w.to_vec();
        for x in &mut swapped {
            if *x as usize == k {
                *x -= 1;
            } else if *x as usize == k - 1 {
                *x += 1;
            }
        }
        let sub = psi_b_parents(&swapped);
        if sub[k] != sub[k - 1] {
            let sw = |x: usize| match x {
                _ if x == k => k - 1,
                _ if x == k - 1 => k,
                _ => x,
            };
            for x in 1..=n {
                parent[sw(x)] = sw(sub[x]);
            }
        } else {
            parent.copy_from_slice(&sub);
            let ell = sub[k];
            let mut kids: Vec<usize> = (1..=n).filter(|&v| sub[v] == k).collect();
            kids.sort_unstable();
            parent[k] = k - 1;
            if let Some(&a) = kids.first() {
                parent[a] = ell;
            }
            if let Some(&b) = kids.get(1) {
                parent[b] = k - 1;
            }
        }
        parent
    }
}

/// Inverse of [`psi`] for one size, tabulated by running the forward map
/// over all alternating permutations.
#[derive(Debug, Clone)]
pub struct PsiInverse {
    n: usize,
    table: HashMap<IncreasingTree, Permutation>,
}

impl PsiInverse {
    pub fn build(n: usize, force: bool) -> Result<Self> {
        if n > TYPE_A_GUARD && !force {
            return Err(Error::GuardExceeded {
                n,
                limit: TYPE_A_GUARD,
            });
        }
        let mut table = HashMap::new();
        for_each_permutation(n, |w| {
            if is_alternating(w) {
                let p = Permutation::from_vec_unchecked(w.to_vec());
                let t = psi(&p).expect("alternating input");
                table.insert(t, p);
            }
        });
        Ok(PsiInverse { n, table })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, t: &IncreasingTree) -> Option<&Permutation> {
        self.table.get(t)
    }
}

/// Inverse of [`psi`]; subject to the type A enumeration guard.
pub fn psi_inv(t: &IncreasingTree) -> Result<Permutation> {
    let inv = PsiInverse::build(t.len(), false)?;
    Ok(inv.get(t).expect("psi is onto").clone())
}

/// Signed alternating permutation to signed increasing 1-2 tree.
pub fn psi_signed(p: &SignedPermutation) -> Result<SignedIncreasingTree> {
    if p.is_empty() || !is_alternating(p) {
        return Err(Error::Precondition(
            "a non-empty signed alternating permutation",
        ));
    }
    let map = OrderMap::standardize(p);
    let tau = Permutation::from_vec_unchecked(p.iter().map(|&v| map.apply(v)).collect());
    let t = psi(&tau)?;
    SignedIncreasingTree::new(t.relabel_with(&map.inverse()))
}

/// Reverse inorder reading of a signed tree.
pub fn omega_signed(t: &SignedIncreasingTree) -> SignedPermutation {
    let mut w = t.inorder();
    w.reverse();
    SignedPermutation::from_vec_unchecked(w)
}

/// Hetyei André permutation of `±[n]` to signed Simsun permutation of
/// `±[n-1]`: suffix-minimum values of the absolute word shift one slot left,
/// every other entry keeps its sign, and all magnitudes drop by one.
pub fn phi_signed(p: &SignedPermutation) -> Result<SignedPermutation> {
    if p.is_empty() || !is_hetyei_andre(p) {
        return Err(Error::Precondition("a non-empty Hetyei André permutation"));
    }
    let abs = p.abs_word();
    let mins = rtl_min_positions(&abs);
    let mut out: Vec<i32> = p.iter().map(|&v| v.signum() * (v.abs() - 1)).collect();
    for pair in mins.windows(2) {
        out[pair[0] - 1] = abs[pair[1] - 1] - 1;
    }
    out.pop();
    Ok(SignedPermutation::from_vec_unchecked(out))
}

/// Chuang's reading of a tree as a Simsun permutation of `[n-1]`: walk down
/// from the root; a single child is emitted; at a fork the larger child's
/// subtree is emitted in reverse inorder and the walk continues to the
/// smaller child.
pub fn chuang_phi(t: &IncreasingTree) -> Permutation {
    let o = OrderedTree::from_tree(t);
    let mut word = Vec::with_capacity(t.len());
    let mut r = o.root.unwrap();
    while let Some(v) = o.left[r] {
        if let Some(u) = o.right[r] {
            word.extend(o.inorder_from(u).into_iter().rev());
        }
        word.push(v);
        r = v;
    }
    Permutation::from_vec_unchecked(word.into_iter().map(|v| v as i32 - 1).collect())
}
