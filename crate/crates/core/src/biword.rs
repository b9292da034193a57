//! Biwords (relative permutations): two parallel words of distinct
//! integers, read as the map `bottoms[i] ↦ tops[i]`.

use std::fmt;

use serde::Serialize;

use crate::error::PermtabError;
use crate::perm::Permutation;

#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct Biword {
    tops: Vec<usize>,
    bottoms: Vec<usize>,
}

impl Biword {
    pub fn new(tops: Vec<usize>, bottoms: Vec<usize>) -> Result<Self, PermtabError> {
        let distinct = |v: &[usize]| {
            let mut sorted = v.to_vec();
            sorted.sort_unstable();
            sorted.windows(2).all(|w| w[0] != w[1])
        };
        if tops.len() != bottoms.len() || !distinct(&tops) || !distinct(&bottoms) {
            return Err(PermtabError::Parse {
                input: format!("({tops:?} / {bottoms:?})"),
                what: "biword",
            });
        }
        Ok(Biword { tops, bottoms })
    }

    /// The biword `(word / 1…n)` of a permutation.
    pub fn from_permutation(p: &Permutation) -> Self {
        Biword {
            tops: p.word().to_vec(),
            bottoms: (1..=p.n()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.tops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tops.is_empty()
    }

    pub fn tops(&self) -> &[usize] {
        &self.tops
    }

    pub fn bottoms(&self) -> &[usize] {
        &self.bottoms
    }

    /// The pair `bottom ↦ top` at a 0-based index.
    pub fn pair(&self, idx: usize) -> (usize, usize) {
        (self.bottoms[idx], self.tops[idx])
    }

    /// Rank of each entry within its own row (1-based).
    fn ranks(values: &[usize]) -> Vec<usize> {
        let mut sorted = values.to_vec();
        sorted.sort_unstable();
        values
            .iter()
            .map(|v| sorted.binary_search(v).expect("distinct entries") + 1)
            .collect()
    }

    /// Replaces each top by its rank among the tops and each bottom by its
    /// rank among the bottoms, yielding a genuine permutation.
    pub fn reduce(&self) -> Permutation {
        let top_ranks = Self::ranks(&self.tops);
        let bottom_ranks = Self::ranks(&self.bottoms);
        let n = self.len();
        let mut word = vec![0; n];
        for i in 0..n {
            word[bottom_ranks[i] - 1] = top_ranks[i];
        }
        Permutation::from_word(word).expect("ranks form a permutation")
    }

    /// 0-based indices of the pairs whose two letters have equal rank in
    /// their respective rows.
    pub fn relative_fixed_points(&self) -> Vec<usize> {
        let top_ranks = Self::ranks(&self.tops);
        let bottom_ranks = Self::ranks(&self.bottoms);
        (0..self.len()).filter(|&i| top_ranks[i] == bottom_ranks[i]).collect()
    }

    /// Removes the pair with the given bottom letter; returns false if
    /// absent.
    pub fn remove_bottom(&mut self, bottom: usize) -> bool {
        match self.bottoms.iter().position(|&b| b == bottom) {
            Some(idx) => {
                self.bottoms.remove(idx);
                self.tops.remove(idx);
                true
            }
            None => false,
        }
    }

    /// Removes relative fixed points repeatedly until none remain, and
    /// returns the bottom letters deleted, in deletion order.
    pub fn strip_relative_fixed_points(&mut self) -> Vec<usize> {
        let mut deleted = Vec::new();
        loop {
            let rfps = self.relative_fixed_points();
            if rfps.is_empty() {
                return deleted;
            }
            for &idx in rfps.iter().rev() {
                deleted.push(self.bottoms[idx]);
                self.bottoms.remove(idx);
                self.tops.remove(idx);
            }
        }
    }

    /// Two biwords are congruent when their reductions coincide.
    pub fn congruent(&self, other: &Biword) -> bool {
        self.len() == other.len() && self.reduce() == other.reduce()
    }
}

impl fmt::Debug for Biword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "({} / {})", row(&self.tops), row(&self.bottoms))
    }
}
