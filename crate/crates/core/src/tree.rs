//! Increasing 1-2 trees.
//!
//! A tree is stored as a parent relation over its sorted label set; the
//! left/right orientation is derived from the labels (a unique child, or the
//! smaller of two children, is the left child). Two drawings that differ by
//! flips are therefore the same value.
//!
//! Literal grammar (labels are possibly-negative decimal integers):
//!
//! ```text
//! T ::= LABEL | LABEL "(" T ")" | LABEL "(" T "," T ")"
//! ```
//!
//! The one-child form is a left child; the two-child form lists the left
//! (smaller) child first.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::OrderMap;

const MAX_LITERAL_DEPTH: usize = 4096;

/// An increasing 1-2 tree on an arbitrary set of distinct integer labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OneTwoTree {
    /// Sorted ascending; index 0 is the root.
    labels: Vec<i32>,
    /// Parent index per node; always smaller than the node's own index.
    parent: Vec<Option<usize>>,
    /// Children per node, smaller label first.
    children: Vec<[Option<usize>; 2]>,
}

impl OneTwoTree {
    pub fn single(label: i32) -> Self {
        OneTwoTree {
            labels: vec![label],
            parent: vec![None],
            children: vec![[None, None]],
        }
    }

    /// Builds a tree from its labels and `(parent, child)` edges.
    pub fn from_edges(labels: &[i32], edges: &[(i32, i32)]) -> Result<Self> {
        let mut sorted = labels.to_vec();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateValue(w[0]));
        }
        if sorted.is_empty() {
            return Err(Error::InvalidTree(
                "a tree needs at least one vertex".into(),
            ));
        }
        let n = sorted.len();
        let idx = |l: i32| sorted.binary_search(&l).map_err(|_| Error::UnknownLabel(l));
        let mut parent = vec![None; n];
        let mut children: Vec<[Option<usize>; 2]> = vec![[None, None]; n];
        for &(p, c) in edges {
            let (pi, ci) = (idx(p)?, idx(c)?);
            if p >= c {
                return Err(Error::InvalidTree(format!(
                    "edge {p} -> {c} is not increasing"
                )));
            }
            if parent[ci].replace(pi).is_some() {
                return Err(Error::InvalidTree(format!("label {c} has two parents")));
            }
            let slot = &mut children[pi];
            match slot {
                [None, _] => slot[0] = Some(ci),
                [Some(_), None] => slot[1] = Some(ci),
                _ => {
                    return Err(Error::InvalidTree(format!(
                        "label {p} has more than two children"
                    )))
                }
            }
        }
        if let Some(orphan) = (1..n).find(|&i| parent[i].is_none()) {
            return Err(Error::InvalidTree(format!(
                "label {} has no parent",
                sorted[orphan]
            )));
        }
        for slot in &mut children {
            if let [Some(a), Some(b)] = *slot {
                if a > b {
                    *slot = [Some(b), Some(a)];
                }
            }
        }
        Ok(OneTwoTree {
            labels: sorted,
            parent,
            children,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn root(&self) -> i32 {
        self.labels[0]
    }

    /// Labels in ascending order.
    pub fn labels(&self) -> &[i32] {
        &self.labels
    }

    pub fn contains(&self, label: i32) -> bool {
        self.labels.binary_search(&label).is_ok()
    }

    fn index(&self, label: i32) -> Result<usize> {
        self.labels
            .binary_search(&label)
            .map_err(|_| Error::UnknownLabel(label))
    }

    pub fn parent(&self, label: i32) -> Result<Option<i32>> {
        Ok(self.parent[self.index(label)?].map(|p| self.labels[p]))
    }

    pub fn left_child(&self, label: i32) -> Result<Option<i32>> {
        Ok(self.children[self.index(label)?][0].map(|c| self.labels[c]))
    }

    pub fn right_child(&self, label: i32) -> Result<Option<i32>> {
        Ok(self.children[self.index(label)?][1].map(|c| self.labels[c]))
    }

    /// `(parent, child)` edges in child-label order.
    pub fn edges(&self) -> Vec<(i32, i32)> {
        (1..self.len())
            .map(|i| (self.labels[self.parent[i].unwrap()], self.labels[i]))
            .collect()
    }

    /// Left subtree, node, right subtree, recursively.
    pub fn inorder(&self) -> Vec<i32> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = Vec::new();
        let mut cur = Some(0);
        while cur.is_some() || !stack.is_empty() {
            while let Some(i) = cur {
                stack.push(i);
                cur = self.children[i][0];
            }
            let i = stack.pop().unwrap();
            out.push(self.labels[i]);
            cur = self.children[i][1];
        }
        out
    }

    /// Root, then left children down to a leaf.
    pub fn minimal_path(&self) -> Vec<i32> {
        let mut out = vec![self.labels[0]];
        let mut i = 0;
        while let Some(c) = self.children[i][0] {
            out.push(self.labels[c]);
            i = c;
        }
        out
    }

    /// Terminal vertex of the minimal path.
    pub fn pleaf(&self) -> i32 {
        *self.minimal_path().last().unwrap()
    }

    /// Chain of right children starting at `v`. The last vertex has no right
    /// child but may still have a left child.
    pub fn maximal_path_from(&self, v: i32) -> Result<Vec<i32>> {
        let mut i = self.index(v)?;
        let mut out = vec![v];
        while let Some(c) = self.children[i][1] {
            out.push(self.labels[c]);
            i = c;
        }
        Ok(out)
    }

    /// Relabels through the order isomorphism onto `targets`.
    pub fn relabel_onto(&self, targets: &[i32]) -> Result<OneTwoTree> {
        let map = OrderMap::new(&self.labels, targets)?;
        Ok(self.relabel_with(&map))
    }

    pub(crate) fn relabel_with(&self, map: &OrderMap) -> OneTwoTree {
        // Order isomorphisms keep the sorted label order, so the index
        // structure is unchanged.
        OneTwoTree {
            labels: self.labels.iter().map(|&l| map.apply(l)).collect(),
            parent: self.parent.clone(),
            children: self.children.clone(),
        }
    }

    pub fn to_literal(&self) -> String {
        let mut out = String::new();
        self.write_literal(0, &mut out);
        out
    }

    fn write_literal(&self, i: usize, out: &mut String) {
        out.push_str(&self.labels[i].to_string());
        match self.children[i] {
            [Some(l), None] => {
                out.push('(');
                self.write_literal(l, out);
                out.push(')');
            }
            [Some(l), Some(r)] => {
                out.push('(');
                self.write_literal(l, out);
                out.push(',');
                self.write_literal(r, out);
                out.push(')');
            }
            _ => {}
        }
    }

    pub fn parse_literal(text: &str) -> Result<Self> {
        let mut p = LiteralParser {
            src: text.as_bytes(),
            pos: 0,
            labels: Vec::new(),
            edges: Vec::new(),
        };
        p.skip_ws();
        p.node(None, 0)?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        OneTwoTree::from_edges(&p.labels, &p.edges)
    }

    pub fn to_json(&self) -> TreeJson {
        self.json_node(0)
    }

    fn json_node(&self, i: usize) -> TreeJson {
        TreeJson {
            label: self.labels[i],
            left: self.children[i][0].map(|c| Box::new(self.json_node(c))),
            right: self.children[i][1].map(|c| Box::new(self.json_node(c))),
        }
    }

    pub fn from_json(node: &TreeJson) -> Result<Self> {
        let mut labels = Vec::new();
        let mut edges = Vec::new();
        let mut stack = vec![(node, None::<i32>)];
        while let Some((n, parent)) = stack.pop() {
            labels.push(n.label);
            if let Some(p) = parent {
                edges.push((p, n.label));
            }
            if n.left.is_none() && n.right.is_some() {
                return Err(Error::InvalidTree(format!(
                    "label {} has a right child but no left child",
                    n.label
                )));
            }
            if let (Some(l), Some(r)) = (&n.left, &n.right) {
                if l.label > r.label {
                    return Err(Error::InvalidTree(format!(
                        "children of {} are not in canonical order",
                        n.label
                    )));
                }
            }
            for c in [&n.left, &n.right].into_iter().flatten() {
                stack.push((c, Some(n.label)));
            }
        }
        OneTwoTree::from_edges(&labels, &edges)
    }
}

impl fmt::Display for OneTwoTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl FromStr for OneTwoTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        OneTwoTree::parse_literal(s)
    }
}

/// JSON tree form: `{"label": 1, "left": {...} | null, "right": {...} | null}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub label: i32,
    #[serde(default)]
    pub left: Option<Box<TreeJson>>,
    #[serde(default)]
    pub right: Option<Box<TreeJson>>,
}

struct LiteralParser<'a> {
    src: &'a [u8],
    pos: usize,
    labels: Vec<i32>,
    edges: Vec<(i32, i32)>,
}

impl LiteralParser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn label(&mut self) -> Result<i32> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.error("expected a label"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| {
                self.pos = start;
                self.error("label out of range")
            })
    }

    /// Parses one subtree and returns its root label.
    fn node(&mut self, parent: Option<i32>, depth: usize) -> Result<i32> {
        if depth > MAX_LITERAL_DEPTH {
            return Err(self.error("nesting too deep"));
        }
        let label = self.label()?;
        self.labels.push(label);
        if let Some(p) = parent {
            self.edges.push((p, label));
        }
        if self.eat(b'(') {
            let left = self.node(Some(label), depth + 1)?;
            if self.eat(b',') {
                let at = self.pos;
                let right = self.node(Some(label), depth + 1)?;
                if left > right {
                    return Err(Error::Parse {
                        offset: at,
                        message: format!("children of {label} must list the smaller label first"),
                    });
                }
            }
            if !self.eat(b')') {
                return Err(self.error("expected `)`"));
            }
        }
        Ok(label)
    }
}

macro_rules! tree_newtype {
    ($name:ident, $check:path) => {
        impl $name {
            pub fn new(tree: OneTwoTree) -> Result<Self> {
                $check(tree.labels())?;
                Ok($name(tree))
            }

            pub fn from_edges(labels: &[i32], edges: &[(i32, i32)]) -> Result<Self> {
                $name::new(OneTwoTree::from_edges(labels, edges)?)
            }

            pub fn as_tree(&self) -> &OneTwoTree {
                &self.0
            }

            pub fn into_tree(self) -> OneTwoTree {
                self.0
            }
        }

        impl Deref for $name {
            type Target = OneTwoTree;
            fn deref(&self) -> &OneTwoTree {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt(f)
            }
        }

        impl FromStr for $name {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                $name::new(OneTwoTree::parse_literal(s)?)
            }
        }

        impl TryFrom<OneTwoTree> for $name {
            type Error = Error;
            fn try_from(t: OneTwoTree) -> Result<Self> {
                $name::new(t)
            }
        }
    };
}

/// Increasing 1-2 tree on `{1, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncreasingTree(OneTwoTree);

/// Increasing 1-2 tree whose labels are nonzero with absolute values
/// `{1, …, n}`, increasing in signed order from the root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedIncreasingTree(OneTwoTree);

fn check_unsigned_labels(sorted: &[i32]) -> Result<()> {
    for (i, &l) in sorted.iter().enumerate() {
        if l != i as i32 + 1 {
            return Err(Error::ValueOutOfRange {
                value: l,
                n: sorted.len(),
            });
        }
    }
    Ok(())
}

fn check_signed_labels(sorted: &[i32]) -> Result<()> {
    let n = sorted.len();
    let mut seen = vec![false; n + 1];
    for &l in sorted {
        if l == 0 {
            return Err(Error::ZeroEntry);
        }
        let a = l.unsigned_abs() as usize;
        if a > n {
            return Err(Error::ValueOutOfRange { value: l, n });
        }
        if std::mem::replace(&mut seen[a], true) {
            return Err(Error::DuplicateAbsValue(a as i32));
        }
    }
    Ok(())
}

tree_newtype!(IncreasingTree, check_unsigned_labels);
tree_newtype!(SignedIncreasingTree, check_signed_labels);

impl IncreasingTree {
    pub fn single() -> Self {
        IncreasingTree(OneTwoTree::single(1))
    }
}

impl From<IncreasingTree> for SignedIncreasingTree {
    fn from(t: IncreasingTree) -> Self {
        SignedIncreasingTree(t.0)
    }
}

/// Ordered binary tree on labels `1..=n` with explicit left/right links;
/// the working state of the step-by-step tree algorithms.
#[derive(Debug, Clone)]
pub(crate) struct OrderedTree {
    pub left: Vec<Option<usize>>,
    pub right: Vec<Option<usize>>,
    pub parent: Vec<Option<usize>>,
    pub root: Option<usize>,
}

impl OrderedTree {
    pub fn with_capacity(n: usize) -> Self {
        OrderedTree {
            left: vec![None; n + 1],
            right: vec![None; n + 1],
            parent: vec![None; n + 1],
            root: None,
        }
    }

    /// Canonical drawing of an increasing tree on `[n]`.
    pub fn from_tree(t: &IncreasingTree) -> Self {
        let mut o = OrderedTree::with_capacity(t.len());
        o.root = Some(t.root() as usize);
        for (p, c) in t.edges() {
            let (p, c) = (p as usize, c as usize);
            o.parent[c] = Some(p);
            if t.left_child(p as i32).unwrap() == Some(c as i32) {
                o.left[p] = Some(c);
            } else {
                o.right[p] = Some(c);
            }
        }
        o
    }

    pub fn set_left(&mut self, p: usize, c: Option<usize>) {
        self.left[p] = c;
        if let Some(c) = c {
            self.parent[c] = Some(p);
        }
    }

    pub fn set_right(&mut self, p: usize, c: Option<usize>) {
        self.right[p] = c;
        if let Some(c) = c {
            self.parent[c] = Some(p);
        }
    }

    /// Puts `new` where `old` hangs (or makes it the root); `old` is detached.
    pub fn replace_in_parent(&mut self, old: usize, new: usize) {
        match self.parent[old] {
            None => {
                self.root = Some(new);
                self.parent[new] = None;
            }
            Some(p) => {
                if self.left[p] == Some(old) {
                    self.set_left(p, Some(new));
                } else {
                    self.set_right(p, Some(new));
                }
            }
        }
        self.parent[old] = None;
    }

    /// Forgets the drawing and keeps the parent relation.
    pub fn canonicalize(&self) -> Result<OneTwoTree> {
        let mut labels = Vec::new();
        let mut edges = Vec::new();
        let mut stack: Vec<usize> = self.root.into_iter().collect();
        while let Some(v) = stack.pop() {
            labels.push(v as i32);
            for c in [self.left[v], self.right[v]].into_iter().flatten() {
                edges.push((v as i32, c as i32));
                stack.push(c);
            }
        }
        OneTwoTree::from_edges(&labels, &edges)
    }

    /// Labels of the subtree at `v` in inorder.
    pub fn inorder_from(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        let mut cur = Some(v);
        while cur.is_some() || !stack.is_empty() {
            while let Some(i) = cur {
                stack.push(i);
                cur = self.left[i];
            }
            let i = stack.pop().unwrap();
            out.push(i);
            cur = self.right[i];
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const RUNNING: &str = "1(2(3(7,9)),4(5,6(8)))";
    const SIGNED: &str = "-8(-4(-3(6,9)),-1(2,5(7)))";

    #[test]
    fn literal_round_trip() {
        let t: IncreasingTree = RUNNING.parse().unwrap();
        assert_eq!(t.to_literal(), RUNNING);
        assert_eq!(t.len(), 9);
        let s: SignedIncreasingTree = SIGNED.parse().unwrap();
        assert_eq!(s.to_literal(), SIGNED);
        assert_eq!("1".parse::<IncreasingTree>().unwrap().to_literal(), "1");
        assert_eq!(
            " 1 ( 2 , 3 ( 4 ) ) "
                .parse::<IncreasingTree>()
                .unwrap()
                .to_literal(),
            "1(2,3(4))"
        );
    }

    #[test]
    fn literal_rejects_bad_input() {
        for bad in [
            "",
            "1(",
            "1()",
            "1(3,2)",
            "2(1)",
            "1(2,3,4)",
            "1(2)(3)",
            "x",
            "1(2,2)",
            "1(2(3),2)",
            "99999999999",
        ] {
            assert!(OneTwoTree::parse_literal(bad).is_err(), "{bad}");
        }
        assert!("1(3)".parse::<IncreasingTree>().is_err());
        assert!("1(2)".parse::<SignedIncreasingTree>().is_ok());
        assert!("-1(1)".parse::<SignedIncreasingTree>().is_err());
        let deep = "1(".repeat(5000);
        assert!(OneTwoTree::parse_literal(&deep).is_err());
    }

    #[test]
    fn inorder_reading() {
        let t: IncreasingTree = RUNNING.parse().unwrap();
        assert_eq!(t.inorder(), vec![7, 3, 9, 2, 1, 5, 4, 8, 6]);
        assert_eq!(IncreasingTree::single().inorder(), vec![1]);
        let s: SignedIncreasingTree = SIGNED.parse().unwrap();
        assert_eq!(s.inorder(), vec![6, -3, 9, -4, -8, 2, -1, 7, 5]);
    }

    #[test]
    fn paths() {
        let t: IncreasingTree = RUNNING.parse().unwrap();
        assert_eq!(t.minimal_path(), vec![1, 2, 3, 7]);
        assert_eq!(t.pleaf(), 7);
        assert_eq!(t.maximal_path_from(1).unwrap(), vec![1, 4, 6]);
        assert_eq!(t.maximal_path_from(9).unwrap(), vec![9]);
        assert_eq!(t.maximal_path_from(12), Err(Error::UnknownLabel(12)));
        let s: SignedIncreasingTree = "-2(1,3)".parse().unwrap();
        assert_eq!(s.minimal_path(), vec![-2, 1]);
        assert_eq!(s.pleaf(), 1);
        let single = IncreasingTree::single();
        assert_eq!(single.minimal_path(), vec![1]);
        assert_eq!(single.pleaf(), 1);
        let t2: OneTwoTree = "1(2(5(8,9)),3(6))".parse().unwrap();
        assert_eq!(t2.maximal_path_from(5).unwrap(), vec![5, 9]);
    }

    #[test]
    fn relabel_running_tree_onto_signed_labels() {
        let t: IncreasingTree = RUNNING.parse().unwrap();
        let r = t.relabel_onto(&[-8, -4, -3, -1, 2, 5, 6, 7, 9]).unwrap();
        assert_eq!(r.to_literal(), SIGNED);
        assert_eq!(
            t.relabel_onto(&(1..=9).collect::<Vec<_>>()).unwrap(),
            *t.as_tree()
        );
        assert!(t.relabel_onto(&[1, 2]).is_err());
    }

    #[test]
    fn json_form() {
        let t: IncreasingTree = "1(2,3(4))".parse().unwrap();
        let v = serde_json::to_string(&t.to_json()).unwrap();
        assert_eq!(
            v,
            r#"{"label":1,"left":{"label":2,"left":null,"right":null},"right":{"label":3,"left":{"label":4,"left":null,"right":null},"right":null}}"#
        );
        let back: TreeJson = serde_json::from_str(&v).unwrap();
        assert_eq!(OneTwoTree::from_json(&back).unwrap(), *t.as_tree());
        let bad: TreeJson = serde_json::from_str(r#"{"label":1,"right":{"label":2}}"#).unwrap();
        assert!(OneTwoTree::from_json(&bad).is_err());
    }

    #[test]
    fn ordered_view_round_trip() {
        let t: IncreasingTree = RUNNING.parse().unwrap();
        assert_eq!(
            OrderedTree::from_tree(&t).canonicalize().unwrap(),
            *t.as_tree()
        );
    }
}
