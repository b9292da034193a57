//! Sparse exact polynomials in the variables p, q, r, y with
//! arbitrary-precision integer coefficients.  The q exponent may be
//! negative (Laurent in q only); all other exponents stay nonnegative.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::PermtabError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    P,
    Q,
    R,
    Y,
}

/// Exponent vector of one monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Expo {
    pub p: u32,
    pub q: i64,
    pub r: u32,
    pub y: u32,
}

impl Expo {
    fn total_degree(&self) -> i64 {
        self.p as i64 + self.q + self.r as i64 + self.y as i64
    }

    fn mul(&self, other: &Expo) -> Expo {
        Expo {
            p: self.p + other.p,
            q: self.q + other.q,
            r: self.r + other.r,
            y: self.y + other.y,
        }
    }
}

// Graded lexicographic order on (p, q, r, y).
impl Ord for Expo {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then(self.p.cmp(&other.p))
            .then(self.q.cmp(&other.q))
            .then(self.r.cmp(&other.r))
            .then(self.y.cmp(&other.y))
    }
}

impl PartialOrd for Expo {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Expo, BigInt>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly::default()
    }

    pub fn one() -> MPoly {
        MPoly::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> MPoly {
        let mut poly = MPoly::zero();
        poly.add_term(Expo::default(), c.into());
        poly
    }

    pub fn var(v: Var) -> MPoly {
        MPoly::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i64) -> MPoly {
        let mut expo = Expo::default();
        match v {
            Var::P => expo.p = u32::try_from(e).expect("p exponent must be nonnegative"),
            Var::Q => expo.q = e,
            Var::R => expo.r = u32::try_from(e).expect("r exponent must be nonnegative"),
            Var::Y => expo.y = u32::try_from(e).expect("y exponent must be nonnegative"),
        }
        let mut poly = MPoly::zero();
        poly.add_term(expo, BigInt::one());
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, expo: Expo, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(expo) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, expo: &Expo) -> BigInt {
        self.terms.get(expo).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            out.terms.insert(*e, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.mul(eb), ca * cb);
            }
        }
        out
    }

    pub fn mul_int<T: Into<BigInt>>(&self, c: T) -> MPoly {
        let c = c.into();
        let mut out = MPoly::zero();
        if c.is_zero() {
            return out;
        }
        for (e, coeff) in &self.terms {
            out.terms.insert(*e, coeff * &c);
        }
        out
    }

    pub fn pow(&self, e: usize) -> MPoly {
        let mut out = MPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Multiplies by `q^e` (the only Laurent direction).
    pub fn mul_q_power(&self, e: i64) -> MPoly {
        let mut out = MPoly::zero();
        for (expo, c) in &self.terms {
            let mut shifted = *expo;
            shifted.q += e;
            out.terms.insert(shifted, c.clone());
        }
        out
    }

    /// Substitutes an integer for one variable.  Negative q exponents only
    /// accept ±1 (used for the q = ±1 specializations).
    pub fn substitute_int(&self, v: Var, value: i64) -> MPoly {
        let value = BigInt::from(value);
        let mut out = MPoly::zero();
        for (expo, c) in &self.terms {
            let (e, rest) = match v {
                Var::P => (expo.p as i64, Expo { p: 0, ..*expo }),
                Var::Q => (expo.q, Expo { q: 0, ..*expo }),
                Var::R => (expo.r as i64, Expo { r: 0, ..*expo }),
                Var::Y => (expo.y as i64, Expo { y: 0, ..*expo }),
            };
            let factor = if e >= 0 {
                value.pow(e as u32)
            } else if value.magnitude().is_one() {
                // (±1)^e for negative e.
                if value.is_negative() && e % 2 != 0 {
                    -BigInt::one()
                } else {
                    BigInt::one()
                }
            } else {
                panic!("cannot substitute {value} into q^{e}");
            };
            out.add_term(rest, c * factor);
        }
        out
    }

    /// A constant polynomial's value, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Expo::default()).cloned(),
            _ => None,
        }
    }

    pub fn min_q_exponent(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.q).min()
    }

    /// Coefficient of `y^k`, as a polynomial in the remaining variables.
    pub fn coeff_y(&self, k: u32) -> MPoly {
        let mut out = MPoly::zero();
        for (expo, c) in &self.terms {
            if expo.y == k {
                out.terms.insert(Expo { y: 0, ..*expo }, c.clone());
            }
        }
        out
    }

    pub fn max_y_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.y).max().unwrap_or(0)
    }

    /// Coefficients by q exponent, for a polynomial using only q.
    pub fn q_coefficients(&self) -> BTreeMap<i64, BigInt> {
        let mut out = BTreeMap::new();
        for (expo, c) in &self.terms {
            assert!(
                expo.p == 0 && expo.r == 0 && expo.y == 0,
                "q_coefficients on a multivariate polynomial"
            );
            out.insert(expo.q, c.clone());
        }
        out
    }

    /// Guards Laurent intermediates: succeeds only if every q exponent is
    /// nonnegative, reporting the most negative one otherwise.
    pub fn assert_polynomial(self) -> Result<MPoly, PermtabError> {
        match self.min_q_exponent() {
            Some(min) if min < 0 => Err(PermtabError::NegativeExponent { min_exponent: min }),
            _ => Ok(self),
        }
    }

    /// Terms as JSON-friendly records, in display (descending) order.
    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .rev()
            .map(|(e, c)| TermJson {
                p: e.p,
                q: e.q,
                r: e.r,
                y: e.y,
                coeff: c.to_string(),
            })
            .collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TermJson {
    pub p: u32,
    pub q: i64,
    pub r: u32,
    pub y: u32,
    pub coeff: String,
}

/// `[n]_q = 1 + q + … + q^{n−1}`; `[0]_q = 0`.
pub fn q_analog(n: usize) -> MPoly {
    let mut out = MPoly::zero();
    for e in 0..n {
        out.add_term(Expo { q: e as i64, ..Expo::default() }, BigInt::one());
    }
    out
}

/// `[n]_{p,q} = p^{n−1} + p^{n−2} q + … + q^{n−1}`; `[0]_{p,q} = 0`.
pub fn pq_analog(n: usize) -> MPoly {
    let mut out = MPoly::zero();
    for e in 0..n {
        out.add_term(
            Expo {
                p: (n - 1 - e) as u32,
                q: e as i64,
                ..Expo::default()
            },
            BigInt::one(),
        );
    }
    out
}

pub fn binomial(n: usize, k: i64) -> BigInt {
    if k < 0 || k as usize > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

impl fmt::Display for MPoly {
    /// Canonical rendering, terms in descending graded-lex order, e.g.
    /// `q^2*r + p*q` or `2*p*q - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (expo, coeff)) in self.terms.iter().rev().enumerate() {
            let negative = coeff.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.abs();
            let mut vars = Vec::new();
            for (name, e) in [("p", expo.p as i64), ("q", expo.q), ("r", expo.r as i64), ("y", expo.y as i64)] {
                match e {
                    0 => {}
                    1 => vars.push(name.to_string()),
                    _ => vars.push(format!("{name}^{e}")),
                }
            }
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

// Operator forms for references only; owned impls would shadow the
// inherent by-reference methods during method resolution.
macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl:ident) => {
        impl $trait for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                MPoly::$impl(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly::neg(self)
    }
}

/// Serialized as the canonical display string.
impl serde::Serialize for MPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_analog_values() {
        assert_eq!(q_analog(0).to_string(), "0");
        assert_eq!(q_analog(1).to_string(), "1");
        assert_eq!(q_analog(3).to_string(), "q^2 + q + 1");
        assert_eq!(
            q_analog(5).substitute_int(Var::Q, 1).as_integer().unwrap(),
            BigInt::from(5)
        );
    }

    #[test]
    fn pq_analog_values() {
        assert_eq!(pq_analog(2).to_string(), "p + q");
        assert_eq!(pq_analog(3).to_string(), "p^2 + p*q + q^2");
        assert_eq!(pq_analog(1).to_string(), "1");
    }

    #[test]
    fn display_ordering_and_signs() {
        let poly = MPoly::var(Var::Q).pow(2).mul(&MPoly::var(Var::R)).add(
            &MPoly::var(Var::P).mul(&MPoly::var(Var::Q)),
        );
        assert_eq!(poly.to_string(), "q^2*r + p*q");
        let with_signs = MPoly::constant(-2)
            .mul(&MPoly::var(Var::P))
            .add(&MPoly::constant(1));
        assert_eq!(with_signs.to_string(), "-2*p + 1");
    }

    #[test]
    fn laurent_normalization() {
        let q = MPoly::var(Var::Q);
        let product = q.pow(2).mul_q_power(-1);
        assert_eq!(product.to_string(), "q");
        assert!(product.assert_polynomial().is_ok());
        let bare = MPoly::one().mul_q_power(-1);
        assert!(matches!(
            bare.assert_polynomial(),
            Err(PermtabError::NegativeExponent { min_exponent: -1 })
        ));
    }

    #[test]
    fn substitution() {
        // (q^-1 + q) at q = -1 gives -2.
        let poly = MPoly::var_pow(Var::Q, -1).add(&MPoly::var(Var::Q));
        assert_eq!(
            poly.substitute_int(Var::Q, -1).as_integer().unwrap(),
            BigInt::from(-2)
        );
        let two_vars = pq_analog(3);
        assert_eq!(
            two_vars
                .substitute_int(Var::P, 1)
                .substitute_int(Var::Q, 1)
                .as_integer()
                .unwrap(),
            BigInt::from(3)
        );
    }

    #[test]
    fn binomial_edge_cases() {
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 0), BigInt::one());
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 6), BigInt::zero());
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = MPoly::var(Var::P);
        let diff = p.add(&MPoly::one()).sub(&p.add(&MPoly::one()));
        assert!(diff.is_zero());
        assert_eq!(diff.num_terms(), 0);
    }
}
