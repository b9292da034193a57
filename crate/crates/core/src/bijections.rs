//! The two bijections: Φ from permutation tableaux onto permutations
//! (zig-zag paths on the 0/1 grid), and Ψ from permutations to
//! permutations (descent data to weak-excedance data).

use serde::Serialize;

use crate::biword::Biword;
use crate::error::PermtabError;
use crate::perm::Permutation;
use crate::statistics::{alignments_crossings, rembr_vector};
use crate::tableau::{PathStep, PermutationTableau};

/// One zig-zag walk of Φ: the 1-cells visited, in order, from the start
/// cell to the last cell before exiting at `exit_label`.  A vertical-start
/// walk first heads south and exits at a label `≥ label`; a horizontal
/// start first heads east and exits at a label `< label`.  Fixed points
/// (all-zero rows) have no cells.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZigZagTrace {
    pub label: usize,
    pub start: PathStep,
    pub cells: Vec<(usize, usize)>,
    pub exit_label: usize,
}

/// Runs the zig-zag walk for one border label of a valid tableau.
pub fn phi_trace(t: &PermutationTableau, label: usize) -> ZigZagTrace {
    let labeling = t.path_labeling();
    let start = labeling.step(label);
    let mut cells = Vec::new();

    // Nearest 1 strictly south of (row, col) within the shape.
    let south = |row: usize, col: usize| -> Option<usize> {
        let height = t.shape().column_height(col);
        ((row + 1)..height).find(|&r| t.cell(r, col) == Some(true))
    };
    // Nearest 1 strictly east of (row, col) within the shape.
    let east = |row: usize, col: usize| -> Option<usize> {
        ((col + 1)..t.shape().part(row)).find(|&c| t.cell(row, c) == Some(true))
    };

    let (mut pos, mut heading_south) = match start {
        PathStep::Vertical { row } => {
            let leftmost = (0..t.shape().part(row)).find(|&c| t.cell(row, c) == Some(true));
            match leftmost {
                Some(col) => ((row, col), true),
                None => {
                    // Empty row: the label is a fixed point.
                    return ZigZagTrace { label, start, cells, exit_label: label };
                }
            }
        }
        PathStep::Horizontal { col } => {
            let topmost = (0..t.shape().column_height(col))
                .find(|&r| t.cell(r, col) == Some(true))
                .expect("valid tableau: every column has a 1");
            ((topmost, col), false)
        }
    };

    cells.push(pos);
    loop {
        let (row, col) = pos;
        if heading_south {
            match south(row, col) {
                Some(r) => {
                    pos = (r, col);
                    cells.push(pos);
                    heading_south = false;
                }
                None => {
                    return ZigZagTrace {
                        label,
                        start,
                        cells,
                        exit_label: labeling.col_label(col),
                    };
                }
            }
        } else {
            match east(row, col) {
                Some(c) => {
                    pos = (row, c);
                    cells.push(pos);
                    heading_south = true;
                }
                None => {
                    return ZigZagTrace {
                        label,
                        start,
                        cells,
                        exit_label: labeling.row_label(row),
                    };
                }
            }
        }
    }
}

/// Φ: maps a valid tableau in the `k × (n−k)` box to the permutation in
/// `S_n` with `k` weak excedances whose weak excedance bottoms are the
/// vertical border labels.
pub fn phi(t: &PermutationTableau) -> Result<Permutation, PermtabError> {
    t.validate()?;
    let n = t.n();
    let mut word = vec![0usize; n];
    for label in 1..=n {
        word[label - 1] = phi_trace(t, label).exit_label;
    }
    Permutation::from_word(word)
}

/// Φ⁻¹: rebuilds the unique tableau mapping to `p`, column by column from
/// the right, using relative fixed points to place all-zero row segments
/// and reverse zig-zag walks to place each column's topmost 1.
pub fn phi_inverse(p: &Permutation) -> PermutationTableau {
    let n = p.n();
    let wexbots = p.wexbottoms();
    let k = wexbots.len();
    let m = n - k;

    // Row index of each vertical label; column index of each horizontal
    // label (smallest horizontal label = rightmost column).
    let mut row_of = vec![usize::MAX; n + 1];
    for (j, &w) in wexbots.iter().enumerate() {
        row_of[w] = j;
    }
    let horizontals: Vec<usize> = (1..=n).filter(|&i| p.at(i) < i).collect();
    let mut col_of = vec![usize::MAX; n + 1];
    for (i, &h) in horizontals.iter().enumerate() {
        col_of[h] = m - 1 - i;
    }

    // Shape: row j spans the columns whose horizontal label exceeds w_j.
    let lambda: Vec<usize> = wexbots
        .iter()
        .map(|&w| horizontals.iter().filter(|&&h| h > w).count())
        .collect();
    let ell = lambda.iter().filter(|&&l| l > 0).count();
    let mut cells: Vec<Vec<Option<bool>>> =
        (0..ell).map(|j| vec![None; lambda[j]]).collect();
    let col_height = |c: usize| lambda.iter().take(ell).filter(|&&l| l > c).count();

    let mut working = Biword::from_permutation(p);

    // Fills the undetermined cells of the rows of current relative fixed
    // points with 0s, then deletes the fixed points, repeatedly.
    let fill_fixed_point_rows = |working: &mut Biword, cells: &mut Vec<Vec<Option<bool>>>| {
        loop {
            let rfps = working.relative_fixed_points();
            if rfps.is_empty() {
                return;
            }
            for &idx in rfps.iter().rev() {
                let (bottom, _) = working.pair(idx);
                let row = row_of[bottom];
                assert!(row != usize::MAX, "relative fixed point on a column label");
                if row < ell {
                    for cell in cells[row].iter_mut() {
                        cell.get_or_insert(false);
                    }
                }
                working.remove_bottom(bottom);
            }
        }
    };

    for (i, &r) in horizontals.iter().enumerate() {
        fill_fixed_point_rows(&mut working, &mut cells);

        // Reverse zig-zag from the exit a_r back to the topmost 1 of the
        // column indexed by r.  Everything east of that column is already
        // determined.
        let c_idx = m - 1 - i;
        let target = p.at(r);
        let is_one = |cells: &Vec<Vec<Option<bool>>>, row: usize, col: usize| {
            cells[row][col] == Some(true)
        };

        // Current cell, about to scan west.  The sentinel column one past
        // the row end models entering from the row's right border.
        let mut state: (usize, usize) = if row_of[target] != usize::MAX {
            let row = row_of[target];
            let width = if row < ell { lambda[row] } else { 0 };
            (row, width)
        } else {
            // Exit was south out of this column: enter heading north to
            // its bottommost 1, then turn west.
            let col = col_of[target];
            let bottom = (0..col_height(col))
                .rev()
                .find(|&rr| is_one(&cells, rr, col))
                .expect("determined column must contain a 1");
            (bottom, col)
        };

        let top_row = loop {
            let (row, col) = state;
            // Scan west within (c_idx, col).
            match ((c_idx + 1)..col).rev().find(|&cc| is_one(&cells, row, cc)) {
                None => break row,
                Some(west) => {
                    // Turn north: nearest determined 1 above.
                    let above = (0..row)
                        .rev()
                        .find(|&rr| is_one(&cells, rr, west))
                        .expect("reverse walk must find a 1 to the north");
                    state = (above, west);
                }
            }
        };

        for rr in 0..top_row {
            let prev = cells[rr][c_idx].replace(false);
            assert!(prev != Some(true), "1 above the reconstructed topmost 1");
        }
        let prev = cells[top_row][c_idx].replace(true);
        assert!(prev.is_none(), "topmost 1 lands on a determined cell");
        for rr in (top_row + 1)..col_height(c_idx) {
            cells[rr][c_idx].get_or_insert(true);
        }

        assert!(working.remove_bottom(r), "column label already deleted");
    }
    fill_fixed_point_rows(&mut working, &mut cells);

    let rows: Vec<Vec<bool>> = cells
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|c| c.expect("all cells determined"))
                .collect()
        })
        .collect();
    PermutationTableau::new(k, n, rows).expect("reconstructed shape fits box")
}

/// The relative-permutation sequence `π_0, …, π_m` of a valid tableau:
/// `π_0 = Φ(T)`, and `π_{i+1}` deletes `r_{i+1} ↦ π_0(r_{i+1})` from `π_i`
/// (the `r_i` are the non-wexbottoms of `π_0`, increasing) and then all
/// resulting relative fixed points.
pub fn relative_sequence(t: &PermutationTableau) -> Result<Vec<Biword>, PermtabError> {
    let p = phi(t)?;
    let mut current = Biword::from_permutation(&p);
    let mut seq = vec![current.clone()];
    for r in (1..=p.n()).filter(|&i| p.at(i) < i) {
        assert!(current.remove_bottom(r), "non-wexbottom survives fixed-point deletion");
        current.strip_relative_fixed_points();
        seq.push(current.clone());
    }
    Ok(seq)
}

/// The data determining a permutation: descent bottoms, descent tops, and
/// per-letter right embracing numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PsiData {
    pub desbots: Vec<usize>,
    pub destops: Vec<usize>,
    pub rembr: Vec<usize>,
}

impl PsiData {
    pub fn of(p: &Permutation) -> PsiData {
        PsiData {
            desbots: p.descent_bottoms(),
            destops: p.descent_tops(),
            rembr: rembr_vector(p),
        }
    }

    /// Reads the same data off the image side: weak excedance bottoms and
    /// tops (shifted), and crossing numbers as embracing numbers.
    pub fn from_image(tau: &Permutation) -> PsiData {
        let n = tau.n();
        let ac = alignments_crossings(tau);
        PsiData {
            desbots: tau.wexbottoms().into_iter().filter(|&b| b != 1).map(|b| b - 1).collect(),
            destops: tau.wextops().into_iter().filter(|&t| t != n).map(|t| t + 1).collect(),
            rembr: (1..=n).map(|i| ac.crossings_at(i)).collect(),
        }
    }

    /// Rebuilds the unique permutation with these descent bottoms, descent
    /// tops and right embracing numbers.
    ///
    /// Letters are inserted in increasing order into a line of placed
    /// letters and open descent-top slots.  A letter that is a descent
    /// top fills an existing slot; a letter that is a descent bottom
    /// brings its own slot, glued to its left; any other letter is placed
    /// alone.  In every case the position is pinned by the letter's
    /// embracing number: the number of open slots strictly to its right.
    /// Open insertion points always sit immediately left of distinct
    /// slots (or at the right end), so their slot counts are distinct and
    /// the placement is forced; no backtracking is needed.
    pub fn reconstruct(&self, n: usize) -> Permutation {
        #[derive(Clone, Copy, PartialEq)]
        enum Unit {
            Letter(usize),
            Slot,
        }
        assert_eq!(self.rembr.len(), n, "rembr vector must have one entry per letter");
        let in_db = |l: usize| self.desbots.binary_search(&l).is_ok();
        let in_dt = |l: usize| self.destops.binary_search(&l).is_ok();

        let mut units: Vec<Unit> = Vec::with_capacity(2 * n);
        let mut open: Vec<bool> = vec![true];

        for letter in 1..=n {
            let e = self.rembr[letter - 1];
            if in_dt(letter) {
                // Fill the (e+1)-th slot from the right.
                let slot_positions: Vec<usize> = units
                    .iter()
                    .enumerate()
                    .filter_map(|(i, &u)| (u == Unit::Slot).then_some(i))
                    .collect();
                assert!(e < slot_positions.len(), "embracing number exceeds open slots");
                let s = slot_positions[slot_positions.len() - 1 - e];
                units[s] = Unit::Letter(letter);
                if in_db(letter) {
                    units.insert(s, Unit::Slot);
                    open.insert(s + 1, false);
                } else {
                    open[s] = false;
                }
            } else {
                // Insert at the open point with exactly e slots to its right.
                let mut suffix_slots = vec![0usize; units.len() + 1];
                for i in (0..units.len()).rev() {
                    suffix_slots[i] =
                        suffix_slots[i + 1] + usize::from(units[i] == Unit::Slot);
                }
                let point = (0..=units.len())
                    .find(|&i| open[i] && suffix_slots[i] == e)
                    .expect("a unique open point carries each slot count");
                if in_db(letter) {
                    units.insert(point, Unit::Letter(letter));
                    units.insert(point, Unit::Slot);
                    open.insert(point + 1, true);
                    open.insert(point + 1, false);
                } else {
                    units.insert(point, Unit::Letter(letter));
                    open[point] = false;
                    open.insert(point + 1, true);
                }
            }
        }

        let word: Vec<usize> = units
            .iter()
            .map(|u| match u {
                Unit::Letter(l) => *l,
                Unit::Slot => panic!("unfilled descent-top slot after reconstruction"),
            })
            .collect();
        let result = Permutation::from_word(word).expect("reconstruction yields a permutation");
        assert_eq!(
            PsiData::of(&result),
            *self,
            "reconstructed permutation must reproduce its descent data"
        );
        result
    }
}

/// Ψ: builds the permutation whose weak excedance bottoms are the shifted
/// descent bottoms of `p` (plus 1), whose weak excedance tops are the
/// shifted descent tops (plus `n`), and whose crossing numbers
/// `C_EE(i)+C_NN(i)` equal the right embracing numbers of `p`.
pub fn psi(p: &Permutation) -> Permutation {
    let n = p.n();
    if n == 0 {
        return p.clone();
    }
    let data = PsiData::of(p);
    let rembr = &data.rembr;

    let mut wexbots: Vec<usize> = data.desbots.iter().map(|d| d + 1).collect();
    wexbots.insert(0, 1);
    let mut wextops: Vec<usize> = data.destops.iter().map(|t| t - 1).collect();
    wextops.push(n);
    wextops.sort_unstable();
    let in_set = |sorted: &[usize], v: usize| sorted.binary_search(&v).is_ok();
    let nonwexbots: Vec<usize> = (1..n).filter(|&x| !in_set(&data.desbots, x)).map(|x| x + 1).collect();
    let nonwextops: Vec<usize> = (2..=n).filter(|&x| !in_set(&data.destops, x)).map(|x| x - 1).collect();

    let mut word = vec![0usize; n];

    // Weak excedance part: wexbottoms in decreasing order, each taking
    // the (e+1)-th smallest unused wextop ≥ b, so that exactly e unused
    // wextops land in [b, top).
    let mut tops = wextops.clone();
    for &b in wexbots.iter().rev() {
        let e = rembr[b - 1];
        let idx = tops
            .iter()
            .position(|&t| t >= b)
            .and_then(|first| (first + e < tops.len()).then_some(first + e))
            .expect("enough wextops above each wexbottom");
        word[b - 1] = tops.remove(idx);
    }

    // Non-weak-excedance part: non-wexbottoms in increasing order, each
    // taking the (e+1)-th largest unused non-wextop < b.
    let mut bots = nonwextops;
    for &b in &nonwexbots {
        let e = rembr[b - 1];
        let below = bots.iter().filter(|&&d| d < b).count();
        assert!(e < below, "enough non-wextops below each non-wexbottom");
        word[b - 1] = bots.remove(below - 1 - e);
    }

    Permutation::from_word(word).expect("psi image is a permutation")
}

/// Ψ⁻¹: reads the descent data off the weak excedance data of `tau` and
/// reconstructs the unique source permutation.
pub fn psi_inverse(tau: &Permutation) -> Permutation {
    if tau.n() == 0 {
        return tau.clone();
    }
    PsiData::from_image(tau).reconstruct(tau.n())
}

/// The composed map Ψ⁻¹ ∘ Φ, carrying tableau cell counts to the
/// pattern-based statistics.
pub fn tableau_to_pattern_world(t: &PermutationTableau) -> Result<Permutation, PermtabError> {
    Ok(psi_inverse(&phi(t)?))
}
