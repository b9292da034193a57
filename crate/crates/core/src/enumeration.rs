//! Exact enumeration: the filling-count recurrence F_λ, the content
//! polynomials D_{k,n}(p,q,r), the closed form E_{k,n}(q) and its
//! normalization Ê, Carlitz's q-Eulerian polynomials, rational generating
//! functions for k ≤ 3, the weighted-lattice-path method, and the two
//! generating-function forms of Ê(q,x,y).

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::partition::Partition;
use crate::perm::Permutation;
use crate::polyalg::{binomial, pq_analog, q_analog, Expo, MPoly, TruncatedSeries, Var};
use crate::statistics::count_vincular;

/// F_λ(p,q): coefficient of p^s q^t counts the valid fillings of Y_λ with
/// s zeros and t ones.
///
/// Recurrence on the bottom-right cell: it is the single 1 of an
/// otherwise-zero full-height column, or a 1 with another 1 above it, or
/// part of an all-zero bottom row.  The last two cases are impossible for
/// single-row shapes, whose columns each hold exactly one forced 1.
pub fn f_lambda(shape: &Partition) -> MPoly {
    thread_local! {
        static CACHE: RefCell<HashMap<Vec<usize>, MPoly>> = RefCell::new(HashMap::new());
    }

    fn compute(parts: &[usize]) -> MPoly {
        let k = parts.len();
        if k == 0 {
            return MPoly::one();
        }
        if k == 1 {
            return MPoly::var_pow(Var::Q, parts[0] as i64);
        }
        if let Some(hit) = CACHE.with(|c| c.borrow().get(parts).cloned()) {
            return hit;
        }
        let normalize = |mut v: Vec<usize>| {
            while v.last() == Some(&0) {
                v.pop();
            }
            v
        };
        let last = parts[k - 1];
        // Full-height column whose only 1 is the bottom cell.
        let shrunk = normalize(parts.iter().map(|&l| l - 1).collect());
        let b1 = MPoly::var_pow(Var::P, (k - 1) as i64)
            .mul(&MPoly::var(Var::Q))
            .mul(&compute(&shrunk));
        // Bottom-right 1 with another 1 above it.
        let mut trimmed = parts.to_vec();
        trimmed[k - 1] -= 1;
        let b2 = MPoly::var(Var::Q).mul(&compute(&normalize(trimmed)));
        // All-zero bottom row of length λ_k.
        let b3 = MPoly::var_pow(Var::P, last as i64).mul(&compute(&parts[..k - 1]));
        let result = b1.add(&b2).add(&b3);
        CACHE.with(|c| c.borrow_mut().insert(parts.to_vec(), result.clone()));
        result
    }

    compute(shape.parts())
}

/// D_{k,n}(p,q,r) = Σ_λ F_λ(p,q) · r^{k(n−k)−|λ|}, summed over the shapes
/// of valid tableaux in the k×(n−k) box: λ_1 = n−k exactly when n > k
/// (the column condition forces a full top row), at most k parts.
pub fn d_kn(k: usize, n: usize) -> MPoly {
    assert!(k <= n, "need k ≤ n");
    if k == n {
        return MPoly::one();
    }
    if k == 0 {
        return MPoly::zero();
    }
    let box_cells = (k * (n - k)) as i64;
    let mut out = MPoly::zero();
    for shape in Partition::shapes_with_first_part(n - k, k) {
        let twos = box_cells - shape.size() as i64;
        out = out.add(&f_lambda(&shape).mul(&MPoly::var_pow(Var::R, twos)));
    }
    out
}

/// The literal sum over all partitions contained in the box (first part
/// unconstrained).  Kept for comparison with the restricted sum; it
/// disagrees with the k = 1 closed form already at n = 2.
pub fn d_kn_unrestricted(k: usize, n: usize) -> MPoly {
    assert!(k <= n, "need k ≤ n");
    let box_cells = (k * (n - k)) as i64;
    let mut out = MPoly::zero();
    for shape in Partition::shapes_in_box(k, n - k) {
        let twos = box_cells - shape.size() as i64;
        out = out.add(&f_lambda(&shape).mul(&MPoly::var_pow(Var::R, twos)));
    }
    out
}

/// E_{k,n}(q) = D_{k,n}(1,q,1) by the closed alternating sum
/// `q^{n−k²} Σ_{i=0}^{k−1} (−1)^i [k−i]^n q^{ki−k} (C(n,i) q^{k−i} + C(n,i−1))`.
/// Intermediate terms are Laurent in q; the result must normalize to a
/// genuine polynomial.
pub fn e_kn_closed(k: usize, n: usize) -> MPoly {
    assert!(1 <= k && k <= n, "need 1 ≤ k ≤ n");
    let mut sum = MPoly::zero();
    for i in 0..k {
        let parenthesis = MPoly::var_pow(Var::Q, (k - i) as i64)
            .mul_int(binomial(n, i as i64))
            .add(&MPoly::constant(binomial(n, i as i64 - 1)));
        let term = q_analog(k - i)
            .pow(n)
            .mul_q_power((k * i) as i64 - k as i64)
            .mul(&parenthesis);
        sum = if i % 2 == 0 { sum.add(&term) } else { sum.sub(&term) };
    }
    sum.mul_q_power(n as i64 - (k * k) as i64)
        .assert_polynomial()
        .expect("E_{k,n} must be a polynomial in q")
}

/// Ê_{k,n}(q) = q^{k−n} E_{k,n}(q), the renormalized q-Eulerian analog.
pub fn e_hat(k: usize, n: usize) -> MPoly {
    e_kn_closed(k, n)
        .mul_q_power(k as i64 - n as i64)
        .assert_polynomial()
        .expect("Ê_{k,n} must be a polynomial in q")
}

/// Carlitz's recurrence `B_{n,k} = [k+1] B_{n−1,k} + q^k [n−k] B_{n−1,k−1}`
/// with `B_{0,0} = 1`, taken verbatim: here the second index counts
/// descents directly, and no power of q is subtracted.
pub fn carlitz_recurrence(n: usize, k: usize) -> MPoly {
    let mut prev: Vec<MPoly> = vec![MPoly::one()];
    if n == 0 {
        return if k == 0 { MPoly::one() } else { MPoly::zero() };
    }
    for m in 1..=n {
        let mut row: Vec<MPoly> = Vec::with_capacity(m);
        for j in 0..m {
            let from_same = if j < prev.len() {
                q_analog(j + 1).mul(&prev[j])
            } else {
                MPoly::zero()
            };
            let from_below = if j >= 1 && j - 1 < prev.len() && m >= j {
                q_analog(m - j).mul_q_power(j as i64).mul(&prev[j - 1])
            } else {
                MPoly::zero()
            };
            row.push(from_same.add(&from_below));
        }
        prev = row;
    }
    prev.get(k).cloned().unwrap_or_else(MPoly::zero)
}

/// Carlitz's q-Eulerian polynomial in the convention matching the tableau
/// content polynomial: `B_{n,k}(q) = Σ q^{maj(π) − C(k,2)}` over π with
/// k−1 descents.  Relative to the raw recurrence this shifts the index by
/// one and divides by `q^{C(k,2)}` (k−1 descents force maj ≥ C(k,2)), a
/// convention fixed against brute-force maj/des tallies at n = 3, 4.
pub fn carlitz_b(n: usize, k: usize) -> MPoly {
    if k == 0 {
        return MPoly::zero();
    }
    let shift = -((k * (k - 1) / 2) as i64);
    carlitz_recurrence(n, k - 1)
        .mul_q_power(shift)
        .assert_polynomial()
        .expect("maj ≥ C(k,2) on permutations with k−1 descents")
}

/// The definitional form of `carlitz_b`, tallied over S_n directly.
pub fn carlitz_b_by_sweep(n: usize, k: usize) -> MPoly {
    let mut out = MPoly::zero();
    if k == 0 {
        return out;
    }
    let shift = -((k * (k - 1) / 2) as i64);
    for p in Permutation::all(n) {
        if p.des() == k - 1 {
            out.add_term(
                Expo { q: p.maj() as i64 + shift, ..Expo::default() },
                BigInt::one(),
            );
        }
    }
    out
}

/// Rational closed forms of D_k(p,q,r,x) for k = 1, 2, 3, expanded as
/// numerator × reciprocal(denominator) at the given truncation.
pub fn d_k_series(k: usize, order: usize) -> TruncatedSeries {
    assert!((1..=3).contains(&k), "closed forms exist for k ∈ {{1,2,3}} only");
    assert!(order >= k, "order must reach the leading term x^k");
    let p = MPoly::var(Var::P);
    let q = MPoly::var(Var::Q);
    let r = MPoly::var(Var::R);
    // Builds Π (1 − t_i x) and inverts it.
    let denominator = |factors: &[MPoly]| -> TruncatedSeries {
        let mut out = TruncatedSeries::one(order);
        for t in factors {
            let mut linear = TruncatedSeries::zero(order);
            linear.set_coeff(0, MPoly::one());
            linear.set_coeff(1, t.neg());
            out = out.mul(&linear);
        }
        out.reciprocal().expect("constant term 1")
    };
    match k {
        1 => TruncatedSeries::monomial(order, 1, MPoly::one()).mul(&denominator(&[q.clone()])),
        2 => {
            let factors = [p.mul(&q), q.mul(&r), q.mul(&pq_analog(2))];
            TruncatedSeries::monomial(order, 2, MPoly::one()).mul(&denominator(&factors))
        }
        _ => {
            let two = pq_analog(2);
            let factors = [
                p.pow(2).mul(&q),
                p.mul(&q).mul(&r),
                q.mul(&r.pow(2)),
                p.mul(&q).mul(&two),
                q.mul(&r).mul(&two),
                q.mul(&pq_analog(3)),
            ];
            // Numerator x³(1 + pq²x − p³q²rx² − 2p²q³rx² − pq⁴rx²).
            let mut numerator = TruncatedSeries::zero(order);
            numerator.set_coeff(3, MPoly::one());
            if order >= 4 {
                numerator.set_coeff(4, p.mul(&q.pow(2)));
            }
            if order >= 5 {
                let c1 = p.pow(3).mul(&q.pow(2)).mul(&r);
                let c2 = p.pow(2).mul(&q.pow(3)).mul(&r).mul_int(2);
                let c3 = p.mul(&q.pow(4)).mul(&r);
                numerator.set_coeff(5, c1.add(&c2).add(&c3).neg());
            }
            numerator.mul(&denominator(&factors))
        }
    }
}

/// Kind of one weighted lattice step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LatticeStepKind {
    /// (1,1): a row of the box; weight x.
    NorthEast,
    /// (1,0): a column introducing no new bad zeros.
    East,
    /// (1,−drop): a column introducing `drop` new bad zeros.
    SouthEast { drop: usize },
}

/// One admissible step together with its p,q,r weight (the factor x is
/// carried by the step itself).
#[derive(Debug, Clone, Serialize)]
pub struct WeightedLatticeStep {
    pub kind: LatticeStepKind,
    pub weight: MPoly,
}

/// The horizontal steps available at a point with `rows_so_far` NE steps
/// behind it and current height `height`, for a box of height `k`.  Each
/// entry fixes the position of the column's topmost 1 among the `height`
/// free cells and the number of new bad zeros below it; its weight is
/// `ways · p^zeros q^ones r^twos` with zeros+ones+twos = k.
pub fn column_steps(k: usize, rows_so_far: usize, height: usize) -> Vec<WeightedLatticeStep> {
    let mut out = Vec::new();
    let forced = rows_so_far - height;
    for top in 1..=height {
        for drop in 0..=(height - top) {
            let zeros = forced + (top - 1) + drop;
            let ones = height - top - drop + 1;
            let twos = k - rows_so_far;
            let ways = binomial(height - top, drop as i64);
            let weight = MPoly::var_pow(Var::P, zeros as i64)
                .mul(&MPoly::var_pow(Var::Q, ones as i64))
                .mul(&MPoly::var_pow(Var::R, twos as i64))
                .mul_int(ways);
            let kind = if drop == 0 {
                LatticeStepKind::East
            } else {
                LatticeStepKind::SouthEast { drop }
            };
            out.push(WeightedLatticeStep { kind, weight });
        }
    }
    out
}

/// D_k(p,q,r,x) by the weighted lattice-path method: paths of NE, E and
/// SE steps with exactly k NE steps in total; the coefficient of x^n sums
/// the weights of the length-n paths.
pub fn lattice_path_d(k: usize, order: usize) -> TruncatedSeries {
    assert!(k >= 1, "need at least one row");
    let mut out = TruncatedSeries::zero(order);
    // dp[r][h]: weight sum over partial paths with r NE steps, height h.
    let mut dp: Vec<Vec<MPoly>> = vec![vec![MPoly::zero(); k + 1]; k + 1];
    dp[0][0] = MPoly::one();
    for step in 1..=order {
        let mut next: Vec<Vec<MPoly>> = vec![vec![MPoly::zero(); k + 1]; k + 1];
        for r in 0..=k {
            for h in 0..=r {
                if dp[r][h].is_zero() {
                    continue;
                }
                if r < k {
                    let bumped = next[r + 1][h + 1].add(&dp[r][h]);
                    next[r + 1][h + 1] = bumped;
                }
                if h >= 1 {
                    for s in column_steps(k, r, h) {
                        let new_h = match s.kind {
                            LatticeStepKind::East => h,
                            LatticeStepKind::SouthEast { drop } => h - drop,
                            LatticeStepKind::NorthEast => unreachable!(),
                        };
                        let bumped = next[r][new_h].add(&dp[r][h].mul(&s.weight));
                        next[r][new_h] = bumped;
                    }
                }
            }
        }
        dp = next;
        let mut total = MPoly::zero();
        for h in 0..=k {
            total = total.add(&dp[k][h]);
        }
        out.set_coeff(step, total);
    }
    out
}

/// Ê(q,x,y) from the explicit series
/// `Σ_{i≥0} y^i (q^{2i+1} − y) / (q^{i²+i+1} (q^i − q^{i+1}[i]x + [i]xy))`,
/// truncated at i ≤ order.  Terms with i > order carry y-order > order,
/// so every coefficient of y^k x^n with k ≤ order is exact.
///
/// Expanded as printed, the sum generates the unnormalized polynomials
/// E_{k,n}(q) = q^{n−k} Ê_{k,n}(q) (its x² coefficient is qy + y², which
/// is E_{1,2}y + E_{2,2}y²), so each y^k x^n coefficient is rescaled by
/// q^{k−n} here to deliver Ê.
pub fn e_hat_gf_series(order: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(order);
    let y = MPoly::var(Var::Y);
    for i in 0..=order {
        // The i-th summand is  base · Σ_j (ratio·x)^j  with
        // base = y^i (q^{2i+1} − y) q^{−(i+1)²} and
        // ratio = [i]_q (q − q^{−i} y).
        let base = MPoly::var_pow(Var::Y, i as i64)
            .mul(&MPoly::var_pow(Var::Q, 2 * i as i64 + 1).sub(&y))
            .mul_q_power(-((i as i64 + 1) * (i as i64 + 1)));
        let ratio = q_analog(i).mul(&MPoly::var(Var::Q).sub(&y.mul_q_power(-(i as i64))));
        let mut power = base;
        for j in 0..=order {
            out.add_to_coeff(j, &power);
            if j < order {
                power = power.mul(&ratio);
            }
        }
    }
    for n in 0..=order {
        let renormalized = renormalize_by_y(out.coeff(n), -(n as i64));
        out.set_coeff(n, renormalized);
    }
    out
}

/// Multiplies the y^k part of a polynomial by q^{k + shift}.
fn renormalize_by_y(poly: &MPoly, shift: i64) -> MPoly {
    let mut out = MPoly::zero();
    for (expo, coeff) in poly.terms() {
        let mut e = *expo;
        e.q += e.y as i64 + shift;
        out.add_term(e, coeff.clone());
    }
    out
}

/// Ê(q,x,y) as the continued fraction with `b_h = y[h+1]_q + [h]_q` and
/// `λ_h = y[h]_q²`, evaluated by the weighted-Motzkin-path expansion: the
/// coefficient of x^n sums, over Motzkin paths of length n, the product
/// of b_h over level steps at height h and λ_h over down steps from h.
pub fn e_hat_cf_series(order: usize) -> TruncatedSeries {
    let y = MPoly::var(Var::Y);
    let max_h = order / 2 + 1;
    let b: Vec<MPoly> = (0..=max_h)
        .map(|h| y.mul(&q_analog(h + 1)).add(&q_analog(h)))
        .collect();
    let lam: Vec<MPoly> = (0..=max_h + 1)
        .map(|h| y.mul(&q_analog(h).pow(2)))
        .collect();
    let mut out = TruncatedSeries::zero(order);
    let mut dp: Vec<MPoly> = vec![MPoly::zero(); max_h + 2];
    dp[0] = MPoly::one();
    out.set_coeff(0, MPoly::one());
    for step in 1..=order {
        let mut next: Vec<MPoly> = vec![MPoly::zero(); max_h + 2];
        for h in 0..=max_h {
            if dp[h].is_zero() {
                continue;
            }
            if h + 1 <= max_h {
                next[h + 1] = next[h + 1].add(&dp[h]);
            }
            next[h] = next[h].add(&dp[h].mul(&b[h]));
            if h >= 1 {
                next[h - 1] = next[h - 1].add(&dp[h].mul(&lam[h]));
            }
        }
        dp = next;
        out.set_coeff(step, dp[0].clone());
    }
    out
}

/// Brute-force Eulerian count: permutations of S_n with `descents` descents.
pub fn eulerian_by_sweep(n: usize, descents: usize) -> BigInt {
    let mut count = BigInt::from(0);
    for p in Permutation::all(n) {
        if p.des() == descents {
            count += 1;
        }
    }
    count
}

/// Brute-force Narayana count: permutations with k−1 descents avoiding the
/// vincular pattern (2-31).
pub fn narayana_by_sweep(n: usize, k: usize) -> BigInt {
    let pattern = "2-31".parse().unwrap();
    let mut count = BigInt::from(0);
    for p in Permutation::all(n) {
        if p.des() + 1 == k && count_vincular(&p, &pattern) == 0 {
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::PermutationTableau;

    fn parts(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn f_single_row_is_all_ones() {
        for l in 0..=6 {
            let shape = if l == 0 { Partition::empty() } else { parts(&[l]) };
            assert_eq!(f_lambda(&shape), MPoly::var_pow(Var::Q, l as i64));
        }
    }

    #[test]
    fn f_two_rows_matches_closed_form() {
        // F_{(λ1,λ2)} = −q^{λ1−1} p^{λ2+1} + q^{λ1−1} [2]_{p,q}^{λ2+1}.
        for (l1, l2) in [(1usize, 1usize), (2, 1), (3, 2), (4, 4)] {
            let direct = f_lambda(&parts(&[l1, l2]));
            let closed = MPoly::var_pow(Var::Q, l1 as i64 - 1).mul(
                &pq_analog(2)
                    .pow(l2 + 1)
                    .sub(&MPoly::var_pow(Var::P, l2 as i64 + 1)),
            );
            assert_eq!(direct, closed, "shape ({l1},{l2})");
        }
    }

    /// Oracle: tally (zeros, ones) over the valid fillings produced by the
    /// exhaustive generator.
    fn f_by_enumeration(k: usize, n: usize, shape: &Partition) -> MPoly {
        let mut out = MPoly::zero();
        for t in PermutationTableau::enumerate(k, n) {
            if t.shape() == shape {
                out.add_term(
                    Expo {
                        p: t.zeros() as u32,
                        q: t.ones() as i64,
                        ..Expo::default()
                    },
                    BigInt::one(),
                );
            }
        }
        out
    }

    #[test]
    fn f_agrees_with_exhaustive_enumeration() {
        assert_eq!(f_lambda(&parts(&[2, 1])), f_by_enumeration(2, 4, &parts(&[2, 1])));
        assert_eq!(
            f_lambda(&parts(&[3, 3, 2])),
            f_by_enumeration(3, 6, &parts(&[3, 3, 2]))
        );
        assert_eq!(
            f_lambda(&parts(&[4, 4, 4, 3])),
            f_by_enumeration(4, 8, &parts(&[4, 4, 4, 3]))
        );
    }

    #[test]
    fn d_first_row_family() {
        for n in 1..=7 {
            assert_eq!(d_kn(1, n), MPoly::var_pow(Var::Q, n as i64 - 1));
        }
        assert_eq!(d_kn(3, 3), MPoly::one());
        assert_eq!(d_kn(0, 0), MPoly::one());
        assert_eq!(d_kn(0, 2), MPoly::zero());
    }

    #[test]
    fn d_counts_tableaux_by_content() {
        // Coefficient of p^a q^b r^c counts tableaux with that content.
        for (k, n) in [(2usize, 4usize), (3, 5), (4, 8)] {
            let mut table = MPoly::zero();
            for t in PermutationTableau::enumerate(k, n) {
                table.add_term(
                    Expo {
                        p: t.zeros() as u32,
                        q: t.ones() as i64,
                        r: t.twos() as u32,
                        ..Expo::default()
                    },
                    BigInt::one(),
                );
            }
            assert_eq!(d_kn(k, n), table, "content mismatch at ({k},{n})");
        }
    }

    #[test]
    fn d_specializes_to_eulerian_counts() {
        for n in 1..=7 {
            for k in 1..=n {
                let value = d_kn(k, n)
                    .substitute_int(Var::P, 1)
                    .substitute_int(Var::Q, 1)
                    .substitute_int(Var::R, 1)
                    .as_integer()
                    .unwrap();
                assert_eq!(value, eulerian_by_sweep(n, k - 1), "({k},{n})");
            }
        }
    }

    #[test]
    fn unrestricted_sum_differs_already_at_n_two() {
        let restricted = d_kn(1, 2);
        let literal = d_kn_unrestricted(1, 2);
        assert_eq!(restricted, MPoly::var(Var::Q));
        assert_eq!(literal, MPoly::var(Var::Q).add(&MPoly::var(Var::R)));
    }

    #[test]
    fn e_closed_small_values() {
        assert_eq!(e_kn_closed(1, 4), MPoly::var_pow(Var::Q, 3));
        // E_{2,3} = 3q + q²  (from D_{2,3} = qr + q² + 2pq at p = r = 1).
        let expected = MPoly::var(Var::Q).mul_int(3).add(&MPoly::var_pow(Var::Q, 2));
        assert_eq!(e_kn_closed(2, 3), expected);
        assert_eq!(
            d_kn(2, 3).substitute_int(Var::P, 1).substitute_int(Var::R, 1),
            expected
        );
    }

    #[test]
    fn e_hat_is_polynomial_up_to_nine() {
        for n in 1..=9 {
            for k in 1..=n {
                let _ = e_hat(k, n); // panics if a negative exponent survives
            }
        }
    }

    #[test]
    fn e_hat_symmetry() {
        for n in 1..=9 {
            for k in 1..=n {
                assert_eq!(e_hat(k, n), e_hat(n + 1 - k, n), "({k},{n})");
            }
        }
    }

    #[test]
    fn carlitz_convention_fixed_by_brute_force() {
        for n in [3, 4] {
            for k in 0..=n {
                assert_eq!(
                    carlitz_b(n, k),
                    carlitz_b_by_sweep(n, k),
                    "convention mismatch at ({n},{k})"
                );
            }
        }
    }

    #[test]
    fn carlitz_row_sums_are_factorials() {
        for n in 1..=7 {
            let mut total = BigInt::from(0);
            for k in 1..=n {
                total += carlitz_b(n, k).substitute_int(Var::Q, 1).as_integer().unwrap();
            }
            let factorial: u64 = (1..=n as u64).product();
            assert_eq!(total, BigInt::from(factorial));
        }
    }

    #[test]
    fn carlitz_specializes_d() {
        for n in 1..=6 {
            for k in 1..=n {
                let d = d_kn(k, n)
                    .substitute_int(Var::Q, 1)
                    .substitute_int(Var::R, 1);
                // D uses p for zeros; compare against B_{n,k}(p).
                let b = carlitz_b(n, k);
                let b_in_p: MPoly = {
                    let mut out = MPoly::zero();
                    for (e, c) in b.terms() {
                        out.add_term(
                            Expo { p: e.q as u32, q: 0, ..*e },
                            c.clone(),
                        );
                    }
                    out
                };
                assert_eq!(d, b_in_p, "({k},{n})");
            }
        }
    }

    #[test]
    fn rational_forms_match_shape_sums() {
        for k in 1..=3 {
            let series = d_k_series(k, 7);
            for n in 0..=7 {
                let expected = if n >= k { d_kn(k, n) } else { MPoly::zero() };
                assert_eq!(series.coeff(n), &expected, "k={k}, n={n}");
            }
        }
    }

    #[test]
    fn lattice_paths_match_shape_sums() {
        for k in 1..=4 {
            let series = lattice_path_d(k, 7);
            for n in 0..=7 {
                let expected = if n >= k { d_kn(k, n) } else { MPoly::zero() };
                assert_eq!(series.coeff(n), &expected, "k={k}, n={n}");
            }
        }
    }

    #[test]
    fn column_step_weights_cover_k_cells() {
        for k in 1..=5 {
            for r in 1..=k {
                for h in 1..=r {
                    for s in column_steps(k, r, h) {
                        for (e, _) in s.weight.terms() {
                            assert_eq!(e.p as i64 + e.q + e.r as i64, k as i64);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn gf_and_cf_agree_with_e_hat() {
        let order = 6;
        let gf = e_hat_gf_series(order);
        let cf = e_hat_cf_series(order);
        for n in 0..=order {
            for k in 0..=n.max(1) {
                let from_gf = gf.coeff(n).coeff_y(k as u32);
                let from_cf = cf.coeff(n).coeff_y(k as u32);
                assert_eq!(from_gf, from_cf, "y^{k} x^{n}");
                if n >= 1 {
                    let expected = if (1..=n).contains(&k) {
                        e_hat(k, n)
                    } else {
                        MPoly::zero()
                    };
                    assert_eq!(from_cf, expected, "Ê y^{k} x^{n}");
                }
            }
        }
    }

    #[test]
    fn cf_smallest_coefficients() {
        let cf = e_hat_cf_series(2);
        assert_eq!(cf.coeff(1), &MPoly::var(Var::Y));
        // b_0² + λ_1 = y² + y.
        assert_eq!(
            cf.coeff(2),
            &MPoly::var(Var::Y).add(&MPoly::var_pow(Var::Y, 2))
        );
    }

    #[test]
    fn narayana_and_eulerian_specializations() {
        for n in 1..=6 {
            for k in 1..=n {
                let poly = e_hat(k, n);
                assert_eq!(
                    poly.substitute_int(Var::Q, 1).as_integer().unwrap(),
                    eulerian_by_sweep(n, k - 1),
                    "q=1 at ({k},{n})"
                );
                assert_eq!(
                    poly.substitute_int(Var::Q, 0).as_integer().unwrap(),
                    narayana_by_sweep(n, k),
                    "q=0 at ({k},{n})"
                );
                assert_eq!(
                    poly.substitute_int(Var::Q, -1).as_integer().unwrap(),
                    binomial(n - 1, k as i64 - 1),
                    "q=-1 at ({k},{n})"
                );
            }
        }
    }
}
