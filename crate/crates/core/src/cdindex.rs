//! Variation words and their cd-reductions.

use std::fmt;

use crate::error::{Error, Result};

/// Word over `{a, b}`: `a` for an ascent, `b` for a descent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbWord(String);

impl AbWord {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for AbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Word over `{c, d}`; `c` has degree 1 and `d` degree 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CdWord(String);

impl CdWord {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.chars().map(|c| if c == 'd' { 2 } else { 1 }).sum()
    }
}

impl fmt::Display for CdWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn variation(w: &[i32]) -> AbWord {
    AbWord(
        w.windows(2)
            .map(|p| if p[0] < p[1] { 'a' } else { 'b' })
            .collect(),
    )
}

fn reduce(ab: &str, pair: &str) -> Result<CdWord> {
    let bytes = ab.as_bytes();
    let pair = pair.as_bytes();
    let mut out = String::with_capacity(bytes.len());
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i..].starts_with(pair) {
            out.push('d');
            i += 2;
        } else if bytes[i] == b'a' {
            out.push('c');
            i += 1;
        } else {
            return Err(Error::Precondition(
                "a word whose variation reduces to c and d",
            ));
        }
    }
    Ok(CdWord(out))
}

/// `ba ↦ d`, then `a ↦ c`, over the variation of `w`.
pub fn reduced_variation_andre(w: &[i32]) -> Result<CdWord> {
    reduce(variation(w).as_str(), "ba")
}

/// `ab ↦ d`, then `a ↦ c`, over the variation of `0 w`.
pub fn reduced_variation_simsun(w: &[i32]) -> Result<CdWord> {
    let mut z = Vec::with_capacity(w.len() + 1);
    z.push(0);
    z.extend_from_slice(w);
    reduce(variation(&z).as_str(), "ab")
}
