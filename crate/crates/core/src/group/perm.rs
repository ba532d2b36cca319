use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};

/// Largest degree accepted for permutations.
pub const MAX_DEGREE: usize = 255;

/// A permutation of `{1, ..., n}`.
///
/// The public interface is one-indexed; composition is right to left,
/// `(v * w)(i) = v(w(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Perm(Box<[u8]>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_DEGREE, "degree {n} too large");
        Perm((0..n as u8).collect())
    }

    /// From the image list `[w(1), ..., w(n)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(CoreError::InvalidInput(format!("degree {n} exceeds {MAX_DEGREE}")));
        }
        let mut seen = vec![false; n];
        for &i in images {
            if i == 0 || i > n || std::mem::replace(&mut seen[i - 1], true) {
                return Err(CoreError::InvalidInput(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Perm(images.iter().map(|&i| (i - 1) as u8).collect()))
    }

    pub(crate) fn zero_based(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize + 1
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(CoreError::InvalidInput(format!("({i},{j}) outside 1..{n}")));
        }
        let mut p = Perm::identity(n);
        p.0.swap(i - 1, j - 1);
        Ok(p)
    }

    /// The Coxeter generator `s_i = (i, i+1)`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(CoreError::InvalidInput(format!("s_{i} is not a generator of S_{n}")));
        }
        Perm::transposition(n, i, i + 1)
    }

    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.degree()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm(inv.into_boxed_slice())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// Number of inversions, which is the Coxeter length.
    pub fn coxeter_length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// A reduced word `[i_1, ..., i_k]` with `self = s_{i_1} ... s_{i_k}`,
    /// found by bubble sort of the image list.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.0.to_vec();
        let mut word = Vec::with_capacity(self.coxeter_length());
        'outer: loop {
            for i in 0..w.len().saturating_sub(1) {
                if w[i] > w[i + 1] {
                    // w * s_{i+1} swaps positions i and i+1
                    w.swap(i, i + 1);
                    word.push(i + 1);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        word
    }

    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        word.iter()
            .try_fold(Perm::identity(n), |acc, &i| Ok(acc.compose(&Perm::simple(n, i)?)))
    }

    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n + 1];
        for cycle in cycles {
            for &i in cycle {
                if i == 0 || i > n || std::mem::replace(&mut used[i], true) {
                    return Err(CoreError::InvalidInput(format!("bad cycle entry {i} for degree {n}")));
                }
            }
            for (k, &i) in cycle.iter().enumerate() {
                images[i - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Perm::from_images(&images)
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.0[i] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Parse cycle notation such as `(1,2)(3,4,5)`; `()` and `id` denote
    /// the identity.  Entries may be separated by commas or spaces.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        if n > MAX_DEGREE {
            return Err(CoreError::InvalidInput(format!("degree {n} exceeds {MAX_DEGREE}")));
        }
        let text = text.trim();
        if text == "id" || text == "e" {
            return Ok(Perm::identity(n));
        }
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| CoreError::InvalidInput(format!("malformed cycle notation {text:?}")))?;
            let entries = body
                .0
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| CoreError::InvalidInput(format!("bad cycle entry {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if entries.len() > 1 {
                cycles.push(entries);
            } else if entries.len() == 1 && (entries[0] == 0 || entries[0] > n) {
                return Err(CoreError::InvalidInput(format!("point {} outside 1..{n}", entries[0])));
            }
            rest = body.1.trim_start();
        }
        Perm::from_cycles(n, &cycles)
    }
}

impl TryFrom<Vec<usize>> for Perm {
    type Error = CoreError;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Perm::from_images(&v)
    }
}

impl From<Perm> for Vec<usize> {
    fn from(p: Perm) -> Self {
        p.images()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Longest accepted generator word.
pub const MAX_WORD_LEN: usize = 4096;

/// Parse a word in the Coxeter generators such as `s1 s2 s1`, `s_1s_2` or
/// `T1*T2`; the empty word and `1` denote the identity.
pub fn parse_word(text: &str, n: usize) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() || text == "1" || text == "id" {
        return Ok(Vec::new());
    }
    let bad = |msg: String| CoreError::InvalidInput(msg);
    let mut word = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((at, c)) = chars.next() {
        if c.is_whitespace() || c == '*' || c == ',' {
            continue;
        }
        if c != 's' && c != 'T' {
            return Err(bad(format!("bad generator at byte {at} of {text:?}")));
        }
        chars.next_if(|&(_, c)| c == '_');
        let mut idx: usize = 0;
        let mut digits = 0;
        while let Some((_, d)) = chars.next_if(|(_, d)| d.is_ascii_digit()) {
            idx = idx
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as usize - '0' as usize))
                .ok_or_else(|| bad(format!("generator index overflows in {text:?}")))?;
            digits += 1;
        }
        if digits == 0 {
            return Err(bad(format!("bad generator at byte {at} of {text:?}")));
        }
        if idx == 0 || idx >= n {
            return Err(bad(format!("s{idx} is not a generator of S_{n}")));
        }
        if word.len() == MAX_WORD_LEN {
            return Err(bad(format!("word longer than {MAX_WORD_LEN} generators")));
        }
        word.push(idx);
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths_and_words() {
        let n = 3;
        assert_eq!(Perm::identity(n).coxeter_length(), 0);
        assert_eq!(Perm::simple(n, 1).unwrap().coxeter_length(), 1);
        let longest = Perm::from_images(&[3, 2, 1]).unwrap();
        assert_eq!(longest.coxeter_length(), 3);
        let w = longest.reduced_word();
        assert_eq!(w.len(), 3);
        assert_eq!(Perm::from_word(n, &w).unwrap(), longest);
        assert!(Perm::identity(4).reduced_word().is_empty());
    }

    #[test]
    fn composition_is_right_to_left() {
        let a = Perm::parse("(1,2)", 3).unwrap();
        let b = Perm::parse("(2,3)", 3).unwrap();
        // (a b)(3) = a(b(3)) = a(2) = 1
        assert_eq!(a.compose(&b).apply(3), 1);
        assert_eq!(a.compose(&b).to_string(), "(1,2,3)");
    }

    #[test]
    fn parse_round_trip() {
        let p = Perm::parse("(1,3)(2 4 5)", 6).unwrap();
        assert_eq!(p.to_string(), "(1,3)(2,4,5)");
        assert_eq!(Perm::parse(&p.to_string(), 6).unwrap(), p);
        assert!(Perm::parse("(1,1)", 3).is_err());
        assert!(Perm::parse("(1,2", 3).is_err());
        assert_eq!(parse_word("s1 s2 s1", 3).unwrap(), vec![1, 2, 1]);
        assert!(parse_word("s3", 3).is_err());
        assert_eq!(parse_word("s1s2 T_1*s2", 3).unwrap(), vec![1, 2, 1, 2]);
        assert!(parse_word("s", 3).is_err());
        assert!(parse_word("s1x", 3).is_err());
        assert!(parse_word("s99999999999999999999999", 3).is_err());
    }
}
