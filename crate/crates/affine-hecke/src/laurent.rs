//! Laurent polynomials in one variable `v` over the integers.
//!
//! `v` is a square root of the Hecke parameter `q`, so `q = v^2`. Polynomials
//! that only involve even powers of `v` can be reinterpreted as polynomials in
//! `q`; [`LaurentPoly::render_q`] does exactly that and is used when printing
//! Kazhdan-Lusztig polynomials.
//!
//! Coefficients are arbitrary-precision integers. The internal map never
//! stores a zero coefficient, so structural equality is semantic equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Sparse Laurent polynomial: exponent -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    /// The variable `v` itself.
    pub fn v() -> Self {
        Self::monomial(1, BigInt::one())
    }

    /// `v^k` for any integer `k` (negative exponents allowed).
    pub fn v_pow(k: i64) -> Self {
        Self::monomial(k, BigInt::one())
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::monomial(0, c.into())
    }

    pub fn monomial<T: Into<BigInt>>(exp: i64, coeff: T) -> Self {
        let c = coeff.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// Builds from (exponent, coefficient) pairs; repeated exponents are summed.
    pub fn from_pairs<I, T>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, T)>,
        T: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map_or(false, |c| c.is_one())
    }

    /// Coefficient of `v^exp` (zero if absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// The bar involution `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Evaluates at a nonzero rational value of `v`.
    pub fn eval_rational(&self, v0: &BigRational) -> BigRational {
        assert!(!v0.is_zero(), "cannot evaluate a Laurent polynomial at v = 0");
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let pow = if *e >= 0 {
                num_traits::pow::Pow::pow(v0.clone(), *e as u64)
            } else {
                num_traits::pow::Pow::pow(v0.clone().recip(), (-*e) as u64)
            };
            acc += BigRational::from(c.clone()) * pow;
        }
        acc
    }

    /// Sum of all coefficients, i.e. the value at `v = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// True when every exponent is even, i.e. the element lies in Z[q^{±1}].
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Renders in the variable `v`, terms in ascending exponent order.
    pub fn render_v(&self) -> String {
        self.render("v", 1)
    }

    /// Renders in `q = v^2`; requires all exponents even and nonnegative scale.
    ///
    /// Panics if an odd exponent is present (callers only use this for
    /// polynomials known to live in Z[q^{±1}]).
    pub fn render_q(&self) -> String {
        assert!(self.is_even(), "polynomial has odd v-exponents, not in Z[q]");
        self.render("q", 2)
    }

    /// Renders with the exponents read directly as `q`-powers (for
    /// polynomials already indexed by `q`).
    pub fn render_in_q(&self) -> String {
        self.render("q", 1)
    }

    fn render(&self, var: &str, exp_div: i64) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let e = e / exp_div;
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push('-');
            } else {
                out.push('+');
            }
            let show_coeff = !mag.is_one() || e == 0;
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            if e != 0 {
                out.push_str(var);
                if e != 1 {
                    out.push_str(&format!("^{}", e));
                }
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_v())
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a> Sub for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Mul for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[(-1, 1), (1, 1)]); // v^-1 + v
        let b = p(&[(0, 1), (1, -1)]); // 1 - v
        assert_eq!(&a + &b, p(&[(-1, 1), (0, 1)]));
        assert_eq!(&a * &b, p(&[(-1, 1), (0, -1), (1, 1), (2, -1)]));
        assert_eq!(-&a, p(&[(-1, -1), (1, -1)]));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut a = p(&[(2, 5)]);
        a.add_term(2, BigInt::from(-5));
        assert!(a.is_zero());
        assert_eq!(a.num_terms(), 0);
    }

    #[test]
    fn bar_swaps_exponents() {
        let a = p(&[(-2, 3), (1, 1)]);
        assert_eq!(a.bar(), p(&[(2, 3), (-1, 1)]));
        assert_eq!(a.bar().bar(), a);
    }

    #[test]
    fn eval_points() {
        let a = p(&[(-1, 1), (0, 2), (2, 1)]); // v^-1 + 2 + v^2
        assert_eq!(a.eval_at_one(), BigInt::from(4));
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        // 2 + 2 + 1/4
        assert_eq!(
            a.eval_rational(&half),
            BigRational::new(BigInt::from(17), BigInt::from(4))
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(LaurentPoly::zero().render_v(), "0");
        assert_eq!(LaurentPoly::one().render_v(), "1");
        let a = p(&[(-1, -1), (0, 1), (3, 2)]);
        assert_eq!(a.render_v(), "-v^-1+1+2v^3");
        let kq = p(&[(0, 1), (2, 1)]); // 1 + q as a v-polynomial
        assert_eq!(kq.render_q(), "1+q");
        assert_eq!(p(&[(2, 1)]).render_v(), "v^2");
    }

    #[test]
    fn shift_and_scale() {
        let a = p(&[(0, 1), (1, 1)]);
        assert_eq!(a.shift(-2), p(&[(-2, 1), (-1, 1)]));
        assert_eq!(a.scale(&BigInt::from(3)), p(&[(0, 3), (1, 3)]));
    }
}
