use entringer::bijections::{
    omega, omega_inv, omega_signed, phi, phi_inv, phi_signed, psi_b, psi_c, psi_signed,
};
use entringer::cdindex::{reduced_variation_andre, reduced_variation_simsun, variation};
use entringer::families::{
    is_alternating, is_andre, is_hetyei_andre, is_signed_andre_b, is_signed_simsun, is_simsun,
};
use entringer::perm::{format_entries, order_relabel, parse_entries};
use entringer::{IncreasingTree, OneTwoTree, Permutation, SignedIncreasingTree, SignedPermutation};
use proptest::prelude::*;

/// Builds a tree on `[n]` by hanging `m = 2..=n` under the `choice`-th
/// vertex that still has room.
fn tree_from_choices(choices: &[u32]) -> IncreasingTree {
    let n = choices.len() + 1;
    let mut kids = vec![0u8; n + 1];
    let mut edges = Vec::new();
    for (i, &c) in choices.iter().enumerate() {
        let m = i + 2;
        let open: Vec<usize> = (1..m).filter(|&v| kids[v] < 2).collect();
        let p = open[c as usize % open.len()];
        kids[p] += 1;
        edges.push((p as i32, m as i32));
    }
    let labels: Vec<i32> = (1..=n as i32).collect();
    IncreasingTree::from_edges(&labels, &edges).unwrap()
}

fn arb_tree(max: usize) -> impl Strategy<Value = IncreasingTree> {
    prop::collection::vec(any::<u32>(), 0..max).prop_map(|c| tree_from_choices(&c))
}

/// One pass of adjacent swaps makes any word alternate down-up.
fn wiggle(mut w: Vec<i32>) -> Vec<i32> {
    for i in 0..w.len().saturating_sub(1) {
        let down = i % 2 == 0;
        if (down && w[i] < w[i + 1]) || (!down && w[i] > w[i + 1]) {
            w.swap(i, i + 1);
        }
    }
    w
}

fn arb_perm(max: usize) -> impl Strategy<Value = Vec<i32>> {
    (1..=max).prop_flat_map(|n| Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle())
}

fn arb_alternating(max: usize) -> impl Strategy<Value = Permutation> {
    arb_perm(max).prop_map(|w| Permutation::from_sequence(&wiggle(w)).unwrap())
}

fn arb_signed_alternating(max: usize) -> impl Strategy<Value = SignedPermutation> {
    arb_perm(max)
        .prop_flat_map(|w| {
            let n = w.len();
            (Just(w), prop::collection::vec(any::<bool>(), n))
        })
        .prop_map(|(w, signs)| {
            let s: Vec<i32> = w
                .iter()
                .zip(signs)
                .map(|(&v, neg)| if neg { -v } else { v })
                .collect();
            SignedPermutation::from_sequence(&wiggle(s)).unwrap()
        })
}

fn signed_labels(n: usize, signs: &[bool]) -> Vec<i32> {
    (1..=n as i32)
        .zip(signs.iter().cycle())
        .map(|(v, &neg)| if neg { -v } else { v })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn tree_literal_round_trip(t in arb_tree(40)) {
        let lit = t.to_literal();
        prop_assert_eq!(lit.parse::<IncreasingTree>().unwrap(), t.clone());
        prop_assert_eq!(OneTwoTree::from_json(&t.to_json()).unwrap(), t.into_tree());
    }

    #[test]
    fn first_of_inorder_is_pleaf(t in arb_tree(40)) {
        prop_assert_eq!(t.inorder()[0], t.pleaf());
    }

    #[test]
    fn relabel_round_trip(t in arb_tree(20), signs in prop::collection::vec(any::<bool>(), 1..8)) {
        let n = t.len();
        let targets = signed_labels(n, &signs);
        let s = SignedIncreasingTree::new(t.relabel_onto(&targets).unwrap()).unwrap();
        let back: Vec<i32> = (1..=n as i32).collect();
        prop_assert_eq!(s.relabel_onto(&back).unwrap(), t.into_tree());
    }

    #[test]
    fn relabel_commutes_with_reading(t in arb_tree(20), signs in prop::collection::vec(any::<bool>(), 1..8)) {
        let targets = signed_labels(t.len(), &signs);
        let s = SignedIncreasingTree::new(t.relabel_onto(&targets).unwrap()).unwrap();
        let relabeled = order_relabel(&omega(&t), &targets).unwrap();
        prop_assert_eq!(omega_signed(&s).into_vec(), relabeled);
    }

    #[test]
    fn permutation_text_round_trip(w in arb_perm(30)) {
        let text = format_entries(&w);
        prop_assert_eq!(parse_entries(&text).unwrap(), w.clone());
        let p: Permutation = text.parse().unwrap();
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn variation_of_reverse(w in arb_perm(30)) {
        let mut r = w.clone();
        r.reverse();
        let flipped: String = variation(&w)
            .as_str()
            .chars()
            .rev()
            .map(|c| if c == 'a' { 'b' } else { 'a' })
            .collect();
        prop_assert_eq!(variation(&r).to_string(), flipped);
    }

    #[test]
    fn omega_round_trip(t in arb_tree(60)) {
        let w = omega(&t);
        prop_assert!(is_andre(&w));
        prop_assert_eq!(w.last(), Some(t.pleaf()));
        prop_assert_eq!(omega_inv(&w).unwrap(), t);
    }

    #[test]
    fn phi_round_trip(t in arb_tree(40)) {
        let w = omega(&t);
        let s = phi(&w).unwrap();
        prop_assert!(is_simsun(&s));
        prop_assert_eq!(s.last().unwrap_or(0), w.last().unwrap() - 1);
        prop_assert_eq!(phi_inv(&s).unwrap(), w.clone());
        prop_assert_eq!(reduced_variation_andre(&w), reduced_variation_simsun(&s));
    }

    #[test]
    fn cd_weight(t in arb_tree(40)) {
        let w = omega(&t);
        prop_assert_eq!(reduced_variation_andre(&w).unwrap().weight(), w.len() - 1);
    }

    #[test]
    fn psi_constructions_agree(p in arb_alternating(40)) {
        prop_assert!(is_alternating(&p));
        let (t, trace) = psi_c(&p, true).unwrap();
        prop_assert_eq!(psi_b(&p).unwrap(), t.clone());
        prop_assert_eq!(t.pleaf(), p[0]);
        let m = p.len().div_ceil(2);
        for (j, tj) in trace.trees.iter().enumerate() {
            prop_assert_eq!(tj.pleaf(), p[2 * (m - j) - 2]);
        }
    }

    #[test]
    fn signed_psi_statistics(p in arb_signed_alternating(30)) {
        let t = psi_signed(&p).unwrap();
        prop_assert_eq!(t.pleaf(), p[0]);
        let w = omega_signed(&t);
        prop_assert!(is_signed_andre_b(&w));
        prop_assert_eq!(w.last(), Some(t.pleaf()));
    }

    #[test]
    fn signed_phi_statistics(t in arb_tree(30), signs in prop::collection::vec(any::<bool>(), 30)) {
        // Negate entries of an André word away from its suffix minima.
        let w = omega(&t);
        let mut low = i32::MAX;
        let mut keep = vec![false; w.len()];
        for i in (0..w.len()).rev() {
            if w[i] < low {
                low = w[i];
                keep[i] = true;
            }
        }
        let h: Vec<i32> = w
            .iter()
            .enumerate()
            .map(|(i, &v)| if !keep[i] && signs[i] { -v } else { v })
            .collect();
        let h = SignedPermutation::from_sequence(&h).unwrap();
        prop_assert!(is_hetyei_andre(&h));
        let s = phi_signed(&h).unwrap();
        prop_assert!(is_signed_simsun(&s));
        prop_assert_eq!(s.last().unwrap_or(0), h.last().unwrap() - 1);
    }
}
