//! Exact Laurent polynomials in `q` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `sum c_e q^e`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exponent: i64, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exponent: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = self.terms.entry(exponent).or_insert(0);
        *c = c.checked_add(coeff).expect("coefficient overflow");
        if *c == 0 {
            self.terms.remove(&exponent);
        }
    }

    pub fn coeff(&self, exponent: i64) -> i64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            out.add_term(e, c.checked_mul(k).expect("coefficient overflow"));
        }
        out
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.scale(-1)
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1.checked_mul(c2).expect("coefficient overflow"));
            }
        }
        out
    }
}

/// One `q^e: c` line per nonzero term, ascending in `e`; the zero polynomial prints as
/// nothing.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, c) in self.terms() {
            writeln!(f, "q^{e}: {c}")?;
        }
        Ok(())
    }
}

impl FromStr for LaurentPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = Self::zero();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let bad = || Error::Parse(format!("expected `q^e: c`, got `{line}`"));
            let (lhs, rhs) = line.split_once(':').ok_or_else(bad)?;
            let e: i64 = lhs.trim().strip_prefix("q^").ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let c: i64 = rhs.trim().parse().map_err(|_| bad())?;
            out.add_term(e, c);
        }
        Ok(out)
    }
}

/// The Gaussian binomial `[m+p choose m]_q`: the generating function of partitions in an
/// `m x p` box. Zero when `p < 0 < m`.
pub fn q_binomial(m: usize, p: i64) -> LaurentPolynomial {
    if m == 0 {
        return LaurentPolynomial::one();
    }
    if p < 0 {
        return LaurentPolynomial::zero();
    }
    let p = p as usize;
    // row[k] = [j choose k] for the current j, via [j+1,k] = [j,k-1] + q^k [j,k]
    let mut row: Vec<LaurentPolynomial> = vec![LaurentPolynomial::one()];
    for j in 0..m + p {
        let mut next = vec![LaurentPolynomial::zero(); j + 2];
        for k in 0..=j + 1 {
            let mut v = LaurentPolynomial::zero();
            if k >= 1 {
                v += &row[k - 1];
            }
            if k <= j {
                v += &row[k].shift(k as i64);
            }
            next[k] = v;
        }
        row = next;
    }
    row.swap_remove(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Partitions with at most `m` parts, each at most `p`, counted by size.
    fn box_partitions(m: usize, p: usize) -> LaurentPolynomial {
        fn rec(parts_left: usize, max: usize, size: i64, out: &mut LaurentPolynomial) {
            out.add_term(size, 1);
            if parts_left == 0 {
                return;
            }
            for x in 1..=max {
                rec(parts_left - 1, x, size + x as i64, out);
            }
        }
        let mut out = LaurentPolynomial::zero();
        rec(m, p, 0, &mut out);
        out
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(1, 2), "q^0: 1\nq^1: 1\nq^2: 1".parse().unwrap());
        assert_eq!(q_binomial(0, 5), LaurentPolynomial::one());
        assert_eq!(q_binomial(0, -3), LaurentPolynomial::one());
        assert!(q_binomial(2, -1).is_zero());
        assert_eq!(q_binomial(2, 2).to_string(), "q^0: 1\nq^1: 1\nq^2: 2\nq^3: 1\nq^4: 1\n");
    }

    #[test]
    fn q_binomial_matches_box_enumeration() {
        for m in 0..6 {
            for p in 0..6 {
                assert_eq!(q_binomial(m, p as i64), box_partitions(m, p), "m={m} p={p}");
            }
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("q^x: 1".parse::<LaurentPolynomial>().is_err());
        assert!("q^1 1".parse::<LaurentPolynomial>().is_err());
        assert!("".parse::<LaurentPolynomial>().unwrap().is_zero());
    }

    fn poly() -> impl Strategy<Value = LaurentPolynomial> {
        prop::collection::vec((-5i64..5, -4i64..4), 0..6).prop_map(|ts| {
            let mut p = LaurentPolynomial::zero();
            for (e, c) in ts {
                p.add_term(e, c);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn text_round_trip(p in poly()) {
            prop_assert_eq!(p.to_string().parse::<LaurentPolynomial>().unwrap(), p);
        }

        #[test]
        fn ring_laws(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
            prop_assert!(!(&a * &b).terms().any(|(_, c)| c == 0));
        }
    }
}
