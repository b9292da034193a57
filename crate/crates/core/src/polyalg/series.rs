//! Formal power series in x, truncated at a fixed order, with polynomial
//! coefficients.  All arithmetic is exact through x^N.

use num_traits::Signed;

use crate::error::PermtabError;
use crate::polyalg::mpoly::MPoly;

/// Coefficients of x^0 … x^N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<MPoly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: vec![MPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = MPoly::one();
        s
    }

    /// The series `c · x^k`.
    pub fn monomial(order: usize, k: usize, c: MPoly) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &MPoly {
        &self.coeffs[i]
    }

    pub fn set_coeff(&mut self, i: usize, c: MPoly) {
        self.coeffs[i] = c;
    }

    pub fn add_to_coeff(&mut self, i: usize, c: &MPoly) {
        if i < self.coeffs.len() {
            self.coeffs[i] = self.coeffs[i].add(c);
        }
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut out = TruncatedSeries::zero(order);
        for i in 0..=order {
            out.coeffs[i] = self.coeffs[i].add(&other.coeffs[i]);
        }
        out
    }

    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut out = TruncatedSeries::zero(order);
        for i in 0..=order {
            out.coeffs[i] = self.coeffs[i].sub(&other.coeffs[i]);
        }
        out
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut out = TruncatedSeries::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let prod = self.coeffs[i].mul(&other.coeffs[j]);
                out.coeffs[i + j] = out.coeffs[i + j].add(&prod);
            }
        }
        out
    }

    pub fn mul_poly(&self, c: &MPoly) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Multiplicative inverse through x^N; the constant term must be ±1
    /// so that the inverse stays over the integers.
    pub fn reciprocal(&self) -> Result<TruncatedSeries, PermtabError> {
        let c0 = &self.coeffs[0];
        let unit = match c0.as_integer() {
            Some(v) if v.abs() == 1.into() => v,
            _ => {
                return Err(PermtabError::NonUnitConstantTerm {
                    found: c0.to_string(),
                })
            }
        };
        // unit ∈ {1, -1}; 1/unit = unit.
        let inv0 = MPoly::constant(unit.clone());
        let order = self.order();
        let mut out = TruncatedSeries::zero(order);
        out.coeffs[0] = inv0.clone();
        // c_n = -(1/a_0) Σ_{k=1}^{n} a_k c_{n-k}, and 1/a_0 = a_0 here.
        for n in 1..=order {
            let mut acc = MPoly::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() || out.coeffs[n - k].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[k].mul(&out.coeffs[n - k]));
            }
            out.coeffs[n] = acc.mul(&inv0).neg();
        }
        Ok(out)
    }
}

/// The geometric reciprocal `1 / (1 − t·x)` for a polynomial `t`.
pub fn geometric(order: usize, t: &MPoly) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(order);
    let mut power = MPoly::one();
    for i in 0..=order {
        out.set_coeff(i, power.clone());
        if i < order {
            power = power.mul(t);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::mpoly::{q_analog, Var};

    #[test]
    fn geometric_series_inverts_linear_factor() {
        let q = MPoly::var(Var::Q);
        // 1 − qx
        let mut denom = TruncatedSeries::zero(8);
        denom.set_coeff(0, MPoly::one());
        denom.set_coeff(1, q.neg());
        let recip = denom.reciprocal().unwrap();
        for i in 0..=8 {
            assert_eq!(recip.coeff(i), &q.pow(i), "coefficient of x^{i}");
        }
        assert_eq!(recip, geometric(8, &q));
        assert_eq!(denom.mul(&recip), TruncatedSeries::one(8));
    }

    #[test]
    fn reciprocal_of_reciprocal_round_trips() {
        let mut s = TruncatedSeries::zero(6);
        s.set_coeff(0, MPoly::constant(-1));
        s.set_coeff(1, q_analog(2));
        s.set_coeff(3, MPoly::var(Var::P));
        let r = s.reciprocal().unwrap();
        assert_eq!(s.mul(&r), TruncatedSeries::one(6));
        assert_eq!(r.reciprocal().unwrap(), s);
    }

    #[test]
    fn non_unit_constant_term_is_rejected() {
        let mut s = TruncatedSeries::zero(3);
        s.set_coeff(0, MPoly::constant(2));
        assert!(s.reciprocal().is_err());
        let mut t = TruncatedSeries::zero(3);
        t.set_coeff(1, MPoly::one());
        assert!(t.reciprocal().is_err());
    }

    #[test]
    fn series_and_polynomial_arithmetic_agree() {
        // (1 + qx)(1 − qx) as series vs expanded polynomial coefficients.
        let q = MPoly::var(Var::Q);
        let mut a = TruncatedSeries::zero(5);
        a.set_coeff(0, MPoly::one());
        a.set_coeff(1, q.clone());
        let mut b = TruncatedSeries::zero(5);
        b.set_coeff(0, MPoly::one());
        b.set_coeff(1, q.neg());
        let prod = a.mul(&b);
        assert_eq!(prod.coeff(0), &MPoly::one());
        assert!(prod.coeff(1).is_zero());
        assert_eq!(prod.coeff(2), &q.pow(2).neg());
    }
}
