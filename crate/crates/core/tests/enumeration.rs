use entringer::families::{
    count_hetyei_fast, for_each_tree, Enumeration, FamilyObject, TYPE_A_GUARD, TYPE_B_GUARD,
};
use entringer::perm::rtl_min_positions;
use entringer::triangles::{arnold_table, entringer_table, euler_number};
use entringer::{count_family, enumerate_family, Error, FamilyTag};
use num_bigint::BigUint;

/// Parent sequences `(p_2, …, p_n)` with `p_v < v` and at most two
/// children per vertex, in lexicographic order.
fn parent_sequences(n: usize) -> Vec<Vec<i32>> {
    fn go(v: usize, n: usize, cur: &mut Vec<i32>, kids: &mut Vec<u8>, out: &mut Vec<Vec<i32>>) {
        if v > n {
            out.push(cur.clone());
            return;
        }
        for q in 1..v {
            if kids[q] == 2 {
                continue;
            }
            kids[q] += 1;
            cur.push(q as i32);
            go(v + 1, n, cur, kids, out);
            cur.pop();
            kids[q] -= 1;
        }
    }
    let mut out = Vec::new();
    go(2, n, &mut Vec::new(), &mut vec![0; n + 1], &mut out);
    out
}

#[test]
fn tree_generator_matches_parent_filter() {
    for n in 1..=8 {
        let mut got = Vec::new();
        for_each_tree(n, |t| {
            got.push(t.edges().into_iter().map(|(p, _)| p).collect::<Vec<_>>())
        });
        assert_eq!(got, parent_sequences(n), "n = {n}");
    }
}

#[test]
fn tree_counts_are_euler_numbers() {
    let want = [1u64, 1, 2, 5, 16, 61, 272];
    for (i, &w) in want.iter().enumerate() {
        let n = i + 1;
        assert_eq!(count_family(FamilyTag::Tree, n, None).unwrap(), w);
        assert_eq!(BigUint::from(w), euler_number(n));
        if n <= 5 {
            assert_eq!(count_family(FamilyTag::TreeB, n, None).unwrap(), w << n);
        }
    }
}

#[test]
fn enumerations_are_strictly_increasing() {
    for tag in FamilyTag::ALL {
        let n_max = if tag.is_signed() { 4 } else { 6 };
        for n in 1..=n_max {
            let all = enumerate_family(tag, n, None).unwrap();
            assert!(all.windows(2).all(|w| w[0] < w[1]), "{tag} n = {n}");
            let entries: Vec<Vec<i32>> = all
                .iter()
                .filter_map(|o| o.entries().map(<[i32]>::to_vec))
                .collect();
            assert!(entries.windows(2).all(|w| w[0] < w[1]), "{tag} n = {n}");
        }
    }
}

#[test]
fn refinements_partition_the_family() {
    for tag in FamilyTag::ALL {
        let n = if tag.is_signed() { 4 } else { 6 };
        let total = count_family(tag, n, None).unwrap();
        let ni = n as i32;
        let ks: Vec<i32> = if tag.is_signed() {
            (-ni..=-1).chain(1..=ni).collect()
        } else {
            (1..=ni).collect()
        };
        let parts: u64 = ks
            .iter()
            .map(|&k| count_family(tag, n, Some(k)).unwrap())
            .sum();
        assert_eq!(parts, total, "{tag}");
    }
}

#[test]
fn andre_members_at_four() {
    let andre: Vec<String> = enumerate_family(FamilyTag::Andre, 4, None)
        .unwrap()
        .iter()
        .map(FamilyObject::to_string)
        .collect();
    assert_eq!(andre, ["1234", "1423", "3124", "3412", "4123"]);
    assert_eq!(count_family(FamilyTag::Simsun, 0, Some(0)).unwrap(), 1);
    assert_eq!(count_family(FamilyTag::SimsunB, 0, Some(0)).unwrap(), 1);
}

#[test]
fn hetyei_fast_matches_brute_force() {
    for n in 1..=6 {
        for k in 1..=n as i32 {
            assert_eq!(
                count_hetyei_fast(n, k).unwrap(),
                count_family(FamilyTag::AndreH, n, Some(k)).unwrap(),
                "({n},{k})"
            );
        }
    }
    assert_eq!(count_hetyei_fast(4, 4).unwrap(), 3);
    assert_eq!(count_hetyei_fast(4, 2).unwrap(), 4);
}

#[test]
fn hetyei_weights_by_hand() {
    // 3412 has suffix minima at positions 3 and 4, so two free signs.
    assert_eq!(rtl_min_positions(&[3, 4, 1, 2]), [3, 4]);
}

#[test]
fn guards() {
    let e = Enumeration::new(FamilyTag::Alt, TYPE_A_GUARD + 1);
    assert!(matches!(e.validate(), Err(Error::GuardExceeded { .. })));
    assert!(e.force(true).validate().is_ok());
    let e = Enumeration::new(FamilyTag::AltB, TYPE_B_GUARD + 1);
    assert!(matches!(e.validate(), Err(Error::GuardExceeded { .. })));
    assert!(count_family(FamilyTag::Alt, 0, None).is_err());
    assert!(count_family(FamilyTag::Alt, 3, Some(0)).is_err());
    assert!(count_family(FamilyTag::Alt, 3, Some(-1)).is_err());
    assert!(count_family(FamilyTag::AltB, 3, Some(-4)).is_err());
}

#[test]
fn triangles_against_u128_recurrence() {
    let mut rows: Vec<Vec<u128>> = vec![vec![1]];
    for n in 2..=30usize {
        let prev = &rows[n - 2];
        let mut row = vec![0u128];
        for k in 2..=n {
            row.push(row[k - 2] + prev[n - k]);
        }
        rows.push(row);
    }
    let e = entringer_table(30);
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            assert_eq!(
                e.get(i + 1, j as i32 + 1).unwrap().to_string(),
                v.to_string()
            );
        }
    }
    // Springer numbers from the A001586 listing.
    let s = arnold_table(10);
    let springer = [1u64, 3, 11, 57, 361, 2763, 24611, 250737, 2873041, 36581523];
    for (i, &v) in springer.iter().enumerate() {
        assert_eq!(s.row_sum(i + 1).unwrap(), BigUint::from(v));
    }
}
