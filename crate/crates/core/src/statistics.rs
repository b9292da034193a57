//! Permutation and tableau statistics: weak-excedance data, the six
//! pairwise alignment/crossing counts, vincular pattern counts, embracing
//! numbers, and tableau cell counts.

use std::str::FromStr;

use serde::Serialize;

use crate::error::PermtabError;
use crate::perm::Permutation;
use crate::tableau::PermutationTableau;

/// The six pairwise statistics, with per-position vectors (index = i − 1).
///
/// For `π = a_1 … a_n`:
/// `A_EE(i) = #{j : j < i ≤ a_i < a_j}`, `A_NN(i) = #{j : a_j < a_i < i < j}`,
/// `A_EN(i) = #{j : j ≤ a_j < a_i < i}`, `A_NE(i) = #{j : a_i < i < j ≤ a_j}`,
/// `C_EE(i) = #{j : j < i ≤ a_j < a_i}`, `C_NN(i) = #{j : a_i < a_j < i < j}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlignmentsCrossings {
    pub a_ee: Vec<usize>,
    pub a_nn: Vec<usize>,
    pub a_en: Vec<usize>,
    pub a_ne: Vec<usize>,
    pub c_ee: Vec<usize>,
    pub c_nn: Vec<usize>,
}

impl AlignmentsCrossings {
    pub fn total_a_ee(&self) -> usize {
        self.a_ee.iter().sum()
    }
    pub fn total_a_nn(&self) -> usize {
        self.a_nn.iter().sum()
    }
    pub fn total_a_en(&self) -> usize {
        self.a_en.iter().sum()
    }
    pub fn total_a_ne(&self) -> usize {
        self.a_ne.iter().sum()
    }
    pub fn total_c_ee(&self) -> usize {
        self.c_ee.iter().sum()
    }
    pub fn total_c_nn(&self) -> usize {
        self.c_nn.iter().sum()
    }

    /// Crossing count of position `i` (1-based): `C_EE(i) + C_NN(i)`.
    pub fn crossings_at(&self, i: usize) -> usize {
        self.c_ee[i - 1] + self.c_nn[i - 1]
    }
}

pub fn alignments_crossings(p: &Permutation) -> AlignmentsCrossings {
    let n = p.n();
    let mut ac = AlignmentsCrossings {
        a_ee: vec![0; n],
        a_nn: vec![0; n],
        a_en: vec![0; n],
        a_ne: vec![0; n],
        c_ee: vec![0; n],
        c_nn: vec![0; n],
    };
    for i in 1..=n {
        let ai = p.at(i);
        for j in 1..=n {
            if j == i {
                continue;
            }
            let aj = p.at(j);
            if j < i && i <= ai && ai < aj {
                ac.a_ee[i - 1] += 1;
            }
            if aj < ai && ai < i && i < j {
                ac.a_nn[i - 1] += 1;
            }
            if j <= aj && aj < ai && ai < i {
                ac.a_en[i - 1] += 1;
            }
            if ai < i && i < j && j <= aj {
                ac.a_ne[i - 1] += 1;
            }
            if j < i && i <= aj && aj < ai {
                ac.c_ee[i - 1] += 1;
            }
            if ai < aj && aj < i && i < j {
                ac.c_nn[i - 1] += 1;
            }
        }
    }
    ac
}

/// A vincular (generalized) pattern: letters not separated by a dash must
/// be adjacent in the host permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VincularPattern {
    letters: Vec<usize>,
    /// Dash present in gap `g` (between letters `g` and `g+1`, 1-based).
    dashes: Vec<bool>,
}

impl VincularPattern {
    pub fn new(letters: Vec<usize>, dash_gaps: &[usize]) -> Result<Self, PermtabError> {
        let len = letters.len();
        Permutation::from_word(letters.clone()).map_err(|_| PermtabError::Parse {
            input: format!("{letters:?}"),
            what: "pattern letters",
        })?;
        let mut dashes = vec![false; len.saturating_sub(1)];
        for &g in dash_gaps {
            if g == 0 || g >= len {
                return Err(PermtabError::Parse {
                    input: format!("gap {g}"),
                    what: "pattern dash position",
                });
            }
            dashes[g - 1] = true;
        }
        Ok(VincularPattern { letters, dashes })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Maximal runs of letters with no dash in between; each block must be
    /// contiguous in the host.
    fn blocks(&self) -> Vec<(usize, usize)> {
        let mut blocks = Vec::new();
        let mut start = 0;
        for g in 0..self.dashes.len() {
            if self.dashes[g] {
                blocks.push((start, g + 1));
                start = g + 1;
            }
        }
        if self.len() > 0 {
            blocks.push((start, self.len()));
        }
        blocks
    }
}

impl FromStr for VincularPattern {
    type Err = PermtabError;

    /// Parses forms like `2-31`, `31-2`, `2-3-1`, `123` (single digits).
    fn from_str(s: &str) -> Result<Self, PermtabError> {
        let mut letters = Vec::new();
        let mut dash_gaps = Vec::new();
        for segment in s.split('-') {
            if segment.is_empty() {
                return Err(PermtabError::Parse {
                    input: s.to_string(),
                    what: "vincular pattern",
                });
            }
            if !letters.is_empty() {
                dash_gaps.push(letters.len());
            }
            for c in segment.chars() {
                let d = c.to_digit(10).ok_or(PermtabError::Parse {
                    input: s.to_string(),
                    what: "vincular pattern",
                })? as usize;
                letters.push(d);
            }
        }
        VincularPattern::new(letters, &dash_gaps)
    }
}

/// Number of occurrences of `pat` in `p`: index tuples, increasing and
/// block-adjacent, whose letters are order-isomorphic to the pattern.
pub fn count_vincular(p: &Permutation, pat: &VincularPattern) -> usize {
    let n = p.n();
    let len = pat.len();
    if len == 0 {
        return 1;
    }
    if len > n {
        return 0;
    }
    let blocks = pat.blocks();
    let word = p.word();
    let letters = pat.letters();
    let mut count = 0;
    // host[x] = letter of the host at the x-th pattern position, filled
    // block by block as starts are chosen; reused across all tuples.
    let mut host = vec![0usize; len];

    fn matches(host: &[usize], letters: &[usize]) -> bool {
        for x in 0..host.len() {
            for y in (x + 1)..host.len() {
                if (host[x] < host[y]) != (letters[x] < letters[y]) {
                    return false;
                }
            }
        }
        true
    }

    fn rec(
        word: &[usize],
        letters: &[usize],
        blocks: &[(usize, usize)],
        host: &mut Vec<usize>,
        t: usize,
        min_start: usize,
        count: &mut usize,
    ) {
        if t == blocks.len() {
            if matches(host, letters) {
                *count += 1;
            }
            return;
        }
        let (bs, be) = blocks[t];
        let block_len = be - bs;
        let mut start = min_start;
        while start + block_len <= word.len() {
            host[bs..be].copy_from_slice(&word[start..start + block_len]);
            rec(word, letters, blocks, host, t + 1, start + block_len, count);
            start += 1;
        }
    }

    rec(word, letters, &blocks, &mut host, 0, 0, &mut count);
    count
}

/// Right embracing numbers: `rembr[ℓ-1]` counts descents `…yx…` strictly to
/// the right of the letter `ℓ` with `x < ℓ < y`.
pub fn rembr_vector(p: &Permutation) -> Vec<usize> {
    let n = p.n();
    let mut pos = vec![0; n + 1];
    for i in 1..=n {
        pos[p.at(i)] = i;
    }
    let mut rembr = vec![0; n];
    for i in 1..n {
        let (y, x) = (p.at(i), p.at(i + 1));
        if y > x {
            for ell in (x + 1)..y {
                if pos[ell] < i {
                    rembr[ell - 1] += 1;
                }
            }
        }
    }
    rembr
}

fn choose2(x: usize) -> i64 {
    (x as i64) * (x as i64 - 1) / 2
}

/// The composite pattern statistics translated to tableau cell counts:
/// `a = (21-3)+(3-21)+(31-2) − C(des,2)`, `b = (2-31)+n−1−des`,
/// `c = (1-32)+(32-1) − C(des,2)`.
pub fn abc_statistics(p: &Permutation) -> (i64, i64, i64) {
    let des = p.des();
    let pat = |s: &str| count_vincular(p, &s.parse().unwrap()) as i64;
    let a = pat("21-3") + pat("3-21") + pat("31-2") - choose2(des);
    let b = pat("2-31") + p.n() as i64 - 1 - des as i64;
    let c = pat("1-32") + pat("32-1") - choose2(des);
    (a, b, c)
}

/// `mak = (1-32) + (32-1) + (2-31) + des`.
pub fn mak(p: &Permutation) -> usize {
    let pat = |s: &str| count_vincular(p, &s.parse().unwrap());
    pat("1-32") + pat("32-1") + pat("2-31") + p.des()
}

/// Everything at once, for JSON dumps and sweeps.
#[derive(Debug, Clone, Serialize)]
pub struct StatBundle {
    pub n: usize,
    pub wex: usize,
    pub des: usize,
    pub maj: usize,
    pub mak: usize,
    pub wexbots: Vec<usize>,
    pub wextops: Vec<usize>,
    pub desbots: Vec<usize>,
    pub destops: Vec<usize>,
    pub wexbotsum: usize,
    pub wextopsum: usize,
    pub desbotsum: usize,
    pub destopsum: usize,
    pub a_ee: usize,
    pub a_nn: usize,
    pub a_en: usize,
    pub a_ne: usize,
    pub c_ee: usize,
    pub c_nn: usize,
    pub a_ee_by_pos: Vec<usize>,
    pub a_nn_by_pos: Vec<usize>,
    pub a_en_by_pos: Vec<usize>,
    pub a_ne_by_pos: Vec<usize>,
    pub c_ee_by_pos: Vec<usize>,
    pub c_nn_by_pos: Vec<usize>,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub rembr: Vec<usize>,
}

impl StatBundle {
    pub fn of(p: &Permutation) -> StatBundle {
        let ac = alignments_crossings(p);
        let (a, b, c) = abc_statistics(p);
        let wexbots = p.wexbottoms();
        let wextops = p.wextops();
        let desbots = p.descent_bottoms();
        let destops = p.descent_tops();
        StatBundle {
            n: p.n(),
            wex: wexbots.len(),
            des: desbots.len(),
            maj: p.maj(),
            mak: mak(p),
            wexbotsum: wexbots.iter().sum(),
            wextopsum: wextops.iter().sum(),
            desbotsum: desbots.iter().sum(),
            destopsum: destops.iter().sum(),
            wexbots,
            wextops,
            desbots,
            destops,
            a_ee: ac.total_a_ee(),
            a_nn: ac.total_a_nn(),
            a_en: ac.total_a_en(),
            a_ne: ac.total_a_ne(),
            c_ee: ac.total_c_ee(),
            c_nn: ac.total_c_nn(),
            a_ee_by_pos: ac.a_ee,
            a_nn_by_pos: ac.a_nn,
            a_en_by_pos: ac.a_en,
            a_ne_by_pos: ac.a_ne,
            c_ee_by_pos: ac.c_ee,
            c_nn_by_pos: ac.c_nn,
            a,
            b,
            c,
            rembr: rembr_vector(p),
        }
    }
}

/// Cell statistics of a tableau.  `rows` is the box height `k` (the weak
/// excedance count of the image permutation), regardless of how many
/// shape rows are nonempty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableauStats {
    pub k: usize,
    pub n: usize,
    pub rows: usize,
    pub zeros: usize,
    pub ones: usize,
    pub twos: usize,
    pub essential_ones: usize,
    pub white: usize,
    pub black: usize,
    pub bad_zeros: usize,
}

pub fn tableau_stats(t: &PermutationTableau) -> TableauStats {
    let m = t.cols();
    let mut essential = 0;
    let mut bad_zeros = 0;
    let mut topmost_seen = vec![false; m];
    for row in t.rows() {
        let mut leftmost_seen = false;
        for (c, &bit) in row.iter().enumerate() {
            if bit {
                let topmost = !topmost_seen[c];
                let leftmost = !leftmost_seen;
                topmost_seen[c] = true;
                leftmost_seen = true;
                if topmost || leftmost {
                    essential += 1;
                }
            } else if topmost_seen[c] {
                // A 0 lying underneath some 1 in its column.
                bad_zeros += 1;
            }
        }
    }
    let ones = t.ones();
    TableauStats {
        k: t.k(),
        n: t.n(),
        rows: t.k(),
        zeros: t.zeros(),
        ones,
        twos: t.twos(),
        essential_ones: essential,
        white: m,
        black: ones - m,
        bad_zeros,
    }
}
