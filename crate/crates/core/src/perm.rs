//! Permutations in one-line notation, with parsing, printing and
//! lexicographic generation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::PermtabError;

/// A permutation of `{1, …, n}` in one-line notation.  The empty
/// permutation (`n = 0`) is allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line word, checking that it is a
    /// bijection on `{1, …, n}`.
    pub fn from_word(word: Vec<usize>) -> Result<Self, PermtabError> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v > n || seen[v - 1] {
                return Err(PermtabError::InvalidPermutation {
                    word: word.clone(),
                });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// The image `π(i)` of a 1-based position.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Positions `i` with `π(i) ≥ i` (1-based, increasing).
    pub fn wexbottoms(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.at(i) >= i).collect()
    }

    /// Values `π(i)` with `π(i) ≥ i`, sorted increasingly.
    pub fn wextops(&self) -> Vec<usize> {
        let mut tops: Vec<usize> = (1..=self.n())
            .filter(|&i| self.at(i) >= i)
            .map(|i| self.at(i))
            .collect();
        tops.sort_unstable();
        tops
    }

    pub fn wex(&self) -> usize {
        (1..=self.n()).filter(|&i| self.at(i) >= i).count()
    }

    /// Descent positions: `i` with `π(i) > π(i+1)` (1-based).
    pub fn descent_positions(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.at(i) > self.at(i + 1)).collect()
    }

    pub fn des(&self) -> usize {
        self.descent_positions().len()
    }

    /// Letters `π(i+1)` over all descents, sorted increasingly.
    pub fn descent_bottoms(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.descent_positions().iter().map(|&i| self.at(i + 1)).collect();
        v.sort_unstable();
        v
    }

    /// Letters `π(i)` over all descents, sorted increasingly.
    pub fn descent_tops(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.descent_positions().iter().map(|&i| self.at(i)).collect();
        v.sort_unstable();
        v
    }

    /// Major index: sum of descent positions.
    pub fn maj(&self) -> usize {
        self.descent_positions().iter().sum()
    }

    /// Number of left-to-right minima.
    pub fn lr_minima(&self) -> usize {
        let mut min = usize::MAX;
        let mut count = 0;
        for &v in &self.word {
            if v < min {
                min = v;
                count += 1;
            }
        }
        count
    }

    /// Number of cycles in the disjoint-cycle decomposition.
    pub fn cycles(&self) -> usize {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut count = 0;
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.at(i);
            }
        }
        count
    }

    /// All permutations of `{1, …, n}` in lexicographic order.
    pub fn all(n: usize) -> LexPermutations {
        LexPermutations {
            next: Some(Permutation::identity(n)),
        }
    }

    /// Permutations of `{1, …, n}` with the given first letter, in
    /// lexicographic order.  Used to shard exhaustive sweeps.
    pub fn all_with_first(n: usize, first: usize) -> Vec<Permutation> {
        assert!(n >= 1 && (1..=n).contains(&first));
        let rest: Vec<usize> = (1..=n).filter(|&v| v != first).collect();
        let mut out = Vec::new();
        let mut current = rest;
        loop {
            let mut word = Vec::with_capacity(n);
            word.push(first);
            word.extend_from_slice(&current);
            out.push(Permutation { word });
            if !next_lex(&mut current) {
                break;
            }
        }
        out
    }
}

/// Advances `word` to the next permutation of its letters in lexicographic
/// order; returns false when `word` was already the last one.
fn next_lex(word: &mut [usize]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// Iterator over `S_n` in lexicographic order.
pub struct LexPermutations {
    next: Option<Permutation>,
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut word = current.word.clone();
        if next_lex(&mut word) {
            self.next = Some(Permutation { word });
        }
        Some(current)
    }
}

impl fmt::Display for Permutation {
    /// Compact digit string for `n ≤ 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = PermtabError;

    /// Accepts comma- or whitespace-separated values, or a bare digit
    /// string (one letter per digit; only usable for `n ≤ 9`).
    fn from_str(s: &str) -> Result<Self, PermtabError> {
        let s = s.trim();
        if s.is_empty() {
            return Permutation::from_word(Vec::new());
        }
        let word: Vec<usize> = if s.contains(',') || s.contains(char::is_whitespace) {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>().map_err(|_| PermtabError::Parse {
                        input: s.to_string(),
                        what: "permutation letter",
                    })
                })
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10).map(|d| d as usize).ok_or(PermtabError::Parse {
                        input: s.to_string(),
                        what: "permutation digit",
                    })
                })
                .collect::<Result<_, _>>()?
        };
        Permutation::from_word(word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_word(vec![1, 1]).is_err());
        assert!(Permutation::from_word(vec![0]).is_err());
        assert!(Permutation::from_word(vec![3]).is_err());
        assert!(Permutation::from_word(vec![2, 3, 1]).is_ok());
    }

    #[test]
    fn empty_permutation_is_allowed() {
        let e = Permutation::from_word(vec![]).unwrap();
        assert_eq!(e.n(), 0);
        assert_eq!(Permutation::all(0).count(), 1);
    }

    #[test]
    fn lex_order_and_count() {
        let all: Vec<Permutation> = Permutation::all(3).collect();
        let words: Vec<Vec<usize>> = all.iter().map(|p| p.word().to_vec()).collect();
        assert_eq!(
            words,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1],
            ]
        );
        assert_eq!(Permutation::all(5).count(), 120);
    }

    #[test]
    fn sharded_generation_matches_full() {
        let full: Vec<Permutation> = Permutation::all(4).collect();
        let sharded: Vec<Permutation> = (1..=4)
            .flat_map(|first| Permutation::all_with_first(4, first))
            .collect();
        assert_eq!(full, sharded);
    }

    #[test]
    fn wex_and_descent_data() {
        let p: Permutation = "74836215".parse().unwrap();
        assert_eq!(p.wexbottoms(), vec![1, 2, 3, 5]);
        assert_eq!(p.wex(), 4);
        let q: Permutation = "215896374".parse().unwrap();
        assert_eq!(q.descent_bottoms(), vec![1, 3, 4, 6]);
        assert_eq!(q.descent_tops(), vec![2, 6, 7, 9]);
        assert_eq!(q.des(), 4);
    }

    #[test]
    fn parse_and_display_round_trip() {
        let p: Permutation = "2,1,5,13,4,3,6,7,8,9,10,11,12".parse().unwrap();
        assert_eq!(p.n(), 13);
        assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
        let q: Permutation = "3 1 2".parse().unwrap();
        assert_eq!(q.to_string(), "312");
    }

    #[test]
    fn cycles_and_lr_minima() {
        let p: Permutation = "231".parse().unwrap();
        assert_eq!(p.cycles(), 1);
        let id = Permutation::identity(4);
        assert_eq!(id.cycles(), 4);
        assert_eq!(id.lr_minima(), 1);
        let r: Permutation = "321".parse().unwrap();
        assert_eq!(r.lr_minima(), 3);
    }
}
