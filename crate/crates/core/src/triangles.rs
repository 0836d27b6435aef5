//! Entringer and Arnold triangles computed by boustrophedon summation.

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::Serialize;

/// Largest `n_max` built by default.
pub const DEFAULT_N_MAX_CAP: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TriangleKind {
    Entringer,
    Arnold,
}

/// Dense table of `E_{n,k}` (k in `1..=n`) or `S_{n,k}` (k in `±1..=±n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleTable {
    kind: TriangleKind,
    /// Row `n - 1`: for Entringer index `k - 1`; for Arnold index
    /// `k + n` for negative `k` and `k + n - 1` for positive `k`.
    rows: Vec<Vec<BigUint>>,
}

fn arnold_index(n: usize, k: i32) -> usize {
    if k < 0 {
        (k + n as i32) as usize
    } else {
        (k + n as i32 - 1) as usize
    }
}

impl TriangleTable {
    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    /// Valid `k` for row `n`, in storage order.
    pub fn ks(&self, n: usize) -> Vec<i32> {
        let n = n as i32;
        match self.kind {
            TriangleKind::Entringer => (1..=n).collect(),
            TriangleKind::Arnold => (-n..=-1).chain(1..=n).collect(),
        }
    }

    pub fn get(&self, n: usize, k: i32) -> Option<&BigUint> {
        if n == 0 || n > self.rows.len() || k == 0 || k.unsigned_abs() as usize > n {
            return None;
        }
        match self.kind {
            TriangleKind::Entringer if k > 0 => self.rows[n - 1].get(k as usize - 1),
            TriangleKind::Entringer => None,
            TriangleKind::Arnold => self.rows[n - 1].get(arnold_index(n, k)),
        }
    }

    /// `E_{n,k}` or `S_{n,k}` as `u64`; `None` out of range or on overflow.
    pub fn get_u64(&self, n: usize, k: i32) -> Option<u64> {
        self.get(n, k).and_then(|v| v.try_into().ok())
    }

    /// Euler number `E_n` (sum over the row) or Springer number `S_n` (sum
    /// over positive `k`).
    pub fn row_sum(&self, n: usize) -> Option<BigUint> {
        if n == 0 || n > self.rows.len() {
            return None;
        }
        let ks = self.ks(n);
        Some(
            ks.into_iter()
                .filter(|&k| k > 0)
                .map(|k| self.get(n, k).unwrap())
                .sum(),
        )
    }

    pub fn row_sums(&self) -> Vec<BigUint> {
        (1..=self.n_max())
            .map(|n| self.row_sum(n).unwrap())
            .collect()
    }

    /// `n,k,value` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,value\n");
        for n in 1..=self.n_max() {
            for k in self.ks(n) {
                writeln!(out, "{n},{k},{}", self.get(n, k).unwrap()).unwrap();
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<_> = (1..=self.n_max())
            .map(|n| {
                let values: Vec<_> = self
                    .ks(n)
                    .into_iter()
                    .map(|k| serde_json::json!({"k": k, "value": self.get(n, k).unwrap().to_string()}))
                    .collect();
                serde_json::json!({
                    "n": n,
                    "values": values,
                    "row_sum": self.row_sum(n).unwrap().to_string(),
                })
            })
            .collect();
        serde_json::json!({
            "schema_version": 1,
            "kind": self.kind,
            "rows": rows,
        })
    }

    /// Rows written in alternating directions, the way the tables are
    /// traditionally drawn. Arnold numbers print as two twin triangles.
    pub fn to_boustrophedon(&self) -> String {
        match self.kind {
            TriangleKind::Entringer => {
                let rows: Vec<(Vec<i32>, bool)> = (1..=self.n_max() as i32)
                    .map(|n| {
                        if n % 2 == 0 {
                            ((1..=n).collect(), true)
                        } else {
                            ((1..=n).rev().collect(), false)
                        }
                    })
                    .collect();
                self.render(&rows)
            }
            TriangleKind::Arnold => {
                let left: Vec<(Vec<i32>, bool)> = (1..=self.n_max() as i32)
                    .map(|n| {
                        if n % 2 == 1 {
                            ((-n..=-1).collect(), true)
                        } else {
                            ((1..=n).rev().collect(), false)
                        }
                    })
                    .collect();
                let right: Vec<(Vec<i32>, bool)> = (1..=self.n_max() as i32)
                    .map(|n| {
                        if n % 2 == 1 {
                            ((1..=n).collect(), true)
                        } else {
                            ((-n..=-1).rev().collect(), false)
                        }
                    })
                    .collect();
                format!("{}\n{}", self.render(&left), self.render(&right))
            }
        }
    }

    fn render(&self, rows: &[(Vec<i32>, bool)]) -> String {
        let lines: Vec<String> = rows
            .iter()
            .enumerate()
            .map(|(i, (ks, rightward))| {
                let arrow = if *rightward { " → " } else { " ← " };
                ks.iter()
                    .map(|&k| self.get(i + 1, k).unwrap().to_string())
                    .collect::<Vec<_>>()
                    .join(arrow)
            })
            .collect();
        let width = lines.iter().map(|l| l.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for l in lines {
            let pad = (width - l.chars().count()) / 2;
            writeln!(out, "{}{}", " ".repeat(pad), l).unwrap();
        }
        out
    }
}

/// `E_{1,1} = 1`, `E_{n,1} = 0` for n ≥ 2, `E_{n,k} = E_{n,k-1} + E_{n-1,n+1-k}`.
pub fn entringer_table(n_max: usize) -> TriangleTable {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut row = Vec::with_capacity(n);
        if n == 1 {
            row.push(BigUint::from(1u32));
        } else {
            let prev = &rows[n - 2];
            row.push(BigUint::from(0u32));
            for k in 2..=n {
                let v = &row[k - 2] + &prev[n - k];
                row.push(v);
            }
        }
        rows.push(row);
    }
    TriangleTable {
        kind: TriangleKind::Entringer,
        rows,
    }
}

/// `S_{1,±1} = 1`, `S_{n,-n} = 0` for n ≥ 2, and
/// `S_{n,k} = S_{n,k-1} + S_{n-1,-k}` for `-1 ≥ k > -n`,
/// `S_{n,1} = S_{n,-1}`,
/// `S_{n,k} = S_{n,k-1} + S_{n-1,1-k}` for `n ≥ k > 1`.
pub fn arnold_table(n_max: usize) -> TriangleTable {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut row = vec![BigUint::from(0u32); 2 * n];
        if n == 1 {
            row[0] = BigUint::from(1u32);
            row[1] = BigUint::from(1u32);
        } else {
            let prev = &rows[n - 2];
            let pget = |k: i32| &prev[arnold_index(n - 1, k)];
            let ni = n as i32;
            for k in (-ni + 1)..=-1 {
                row[arnold_index(n, k)] = &row[arnold_index(n, k - 1)] + pget(-k);
            }
            row[arnold_index(n, 1)] = row[arnold_index(n, -1)].clone();
            for k in 2..=ni {
                row[arnold_index(n, k)] = &row[arnold_index(n, k - 1)] + pget(1 - k);
            }
        }
        rows.push(row);
    }
    TriangleTable {
        kind: TriangleKind::Arnold,
        rows,
    }
}

pub fn euler_number(n: usize) -> BigUint {
    entringer_table(n).row_sum(n).expect("n >= 1")
}

pub fn springer_number(n: usize) -> BigUint {
    arnold_table(n).row_sum(n).expect("n >= 1")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entringer_values() {
        let t = entringer_table(7);
        assert_eq!(t.get_u64(5, 3), Some(4));
        // 0 + 16 + 32 + 46 + 56 + 61 + 61.
        assert_eq!(t.row_sum(7).unwrap(), BigUint::from(272u32));
        for n in 2..=7 {
            assert_eq!(t.get_u64(n, 1), Some(0));
        }
        assert_eq!(t.get(3, 0), None);
        assert_eq!(t.get(3, 4), None);
        assert_eq!(t.get(8, 1), None);
    }

    #[test]
    fn arnold_values() {
        let t = arnold_table(6);
        assert_eq!(t.get_u64(4, 2), Some(14));
        assert_eq!(t.row_sum(6).unwrap(), BigUint::from(2763u32));
        assert_eq!(t.get_u64(3, -2), Some(2));
        assert_eq!(t.get_u64(5, -5), Some(0));
    }

    #[test]
    fn named_numbers() {
        assert_eq!(euler_number(6), BigUint::from(61u32));
        assert_eq!(springer_number(5), BigUint::from(361u32));
        assert_eq!(euler_number(1), BigUint::from(1u32));
    }

    #[test]
    fn structural_identities() {
        let e = entringer_table(30);
        for n in 3..=30 {
            assert_eq!(e.get(n, n as i32), e.get(n, n as i32 - 1));
        }
        let s = arnold_table(30);
        for n in 1..=30 {
            assert_eq!(s.get(n, 1), s.get(n, -1));
        }
    }

    #[test]
    fn big_rows_do_not_overflow() {
        // E_25 is beyond u64; the table stays exact.
        let e = entringer_table(DEFAULT_N_MAX_CAP);
        assert_eq!(e.row_sum(25).unwrap().to_string(), "246921480190207983616");
        assert!(e.get_u64(50, 50).is_none());
    }

    #[test]
    fn renderings() {
        let csv = entringer_table(7).to_csv();
        assert!(csv.starts_with("n,k,value\n1,1,1\n"));
        assert!(csv.contains("\n7,4,46\n"));
        let b = entringer_table(4).to_boustrophedon();
        let lines: Vec<&str> = b.lines().map(str::trim).collect();
        assert_eq!(lines, ["1", "0 → 1", "1 ← 1 ← 0", "0 → 1 → 2 → 2"]);
        let a = arnold_table(4).to_boustrophedon();
        let lines: Vec<&str> = a.lines().map(str::trim).collect();
        assert_eq!(
            lines,
            [
                "1",
                "2 ← 1",
                "0 → 2 → 3",
                "16 ← 16 ← 14 ← 11",
                "",
                "1",
                "1 ← 0",
                "3 → 4 → 4",
                "11 ← 8 ← 4 ← 0",
            ]
        );
        let j = arnold_table(2).to_json();
        assert_eq!(j["schema_version"], 1);
        assert_eq!(j["kind"], "arnold");
        assert_eq!(j["rows"][1]["row_sum"], "3");
    }
}
