//! Exact Laurent polynomials in one variable `q` and the Poincaré
//! polynomials built from them: Gaussian binomials, odd orthogonal
//! Grassmannians, and possibly singular quadrics.
//!
//! Coefficients live in any exact ring implementing [`Coeff`]; the crate
//! root fixes `BigInt` as the default through [`crate::Poly`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{FromPrimitive, Num, Signed};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact coefficient ring: integers (machine or arbitrary precision) or
/// rationals. Division is only ever used where it is exact.
pub trait Coeff: Clone + fmt::Debug + fmt::Display + Num + Signed + PartialOrd + FromPrimitive {}

impl<T> Coeff for T where T: Clone + fmt::Debug + fmt::Display + Num + Signed + PartialOrd + FromPrimitive {}

/// Finitely supported map from exponents to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    /// `c·q^exp`.
    pub fn monomial(exp: i64, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(exp, C::one())
    }

    /// `coeffs[0]·q^start + coeffs[1]·q^{start+1} + …`.
    pub fn from_coeffs<I: IntoIterator<Item = C>>(start: i64, coeffs: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            p.add_term(start + k as i64, c);
        }
        p
    }

    /// Builds from small integer coefficients; handy for literals.
    pub fn from_i64s(start: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(start, coeffs.iter().map(|&c| C::from_i64(c).expect("coefficient fits")))
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// `1 − q^l`.
    pub fn one_minus_q_pow(l: i64) -> Self {
        Self::one() - Self::q_pow(l)
    }

    pub fn add_term(&mut self, exp: i64, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `q^exp`; zero outside the support.
    pub fn coeff(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// Substitution `q ↦ q^m` (`m ≥ 1`).
    pub fn substitute_power(&self, m: i64) -> Self {
        assert!(m >= 1, "substitution exponent must be positive");
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e * m, c.clone())).collect() }
    }

    /// Substitution `q ↦ q^{-1}`.
    pub fn invert(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(&e, x)| (e, x.clone() * c.clone())).collect() }
    }

    /// Sum of coefficients (value at `q = 1`).
    pub fn eval_at_one(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc + c.clone())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Invariant under `q ↦ q^{-1}`.
    pub fn is_symmetric(&self) -> bool {
        *self == self.invert()
    }

    /// Coefficients symmetric about `center/2`: `c_a = c_{center − a}`.
    pub fn is_palindromic_about(&self, center: i64) -> bool {
        self.terms.iter().all(|(&e, c)| self.coeff(center - e) == *c)
    }

    /// Every exponent in the support is divisible by `m`.
    pub fn exponents_divisible_by(&self, m: i64) -> bool {
        self.terms.keys().all(|e| e.rem_euclid(m) == 0)
    }

    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    /// Exact division; fails if the remainder is nonzero or a quotient
    /// coefficient does not divide exactly in `C`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (d_lo, d_hi) = match (divisor.min_exp(), divisor.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(Error::DivisionByZero),
        };
        let lead = divisor.coeff(d_hi);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(top) = rem.max_exp() {
            if top - d_hi < rem.min_exp().unwrap() - d_lo {
                return Err(Error::InexactDivision);
            }
            let c = rem.coeff(top);
            let qc = c.clone() / lead.clone();
            if qc.clone() * lead.clone() != c {
                return Err(Error::InexactDivision);
            }
            let e = top - d_hi;
            rem -= &divisor.shift(e).scale(&qc);
            quot.add_term(e, qc);
        }
        Ok(quot)
    }

    /// Dense coefficient vector from `min_exp` to `max_exp`.
    pub fn dense(&self) -> (i64, Vec<C>) {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo, (lo..=hi).map(|e| self.coeff(e)).collect()),
            _ => (0, Vec::new()),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl<C: Coeff> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl<C: Coeff> SubAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn sub_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c.clone());
        }
    }
}

impl<C: Coeff> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coeff> Add for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(mut self, rhs: Self) -> LaurentPoly<C> {
        self += &rhs;
        self
    }
}

impl<C: Coeff> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coeff> Sub for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(mut self, rhs: Self) -> LaurentPoly<C> {
        self -= &rhs;
        self
    }
}

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<C: Coeff> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x.clone() * y.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Mul for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        &self * &rhs
    }
}

impl<C: Coeff> std::iter::Sum for LaurentPoly<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    /// Ascending exponents, e.g. `q^-3 + q^-1` or `1 + 2q + q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("q")?,
                1 => write!(f, "{mag}q")?,
                _ if unit => write!(f, "q^{e}")?,
                _ => write!(f, "{mag}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// JSON form: `[[exponent, "coefficient"], …]` sorted by exponent.
impl<C: Coeff> Serialize for LaurentPoly<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

impl<'de, C: Coeff> Deserialize<'de> for LaurentPoly<C>
where
    C::FromStrRadixErr: fmt::Display,
{
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(i64, String)> = Vec::deserialize(deserializer)?;
        let mut p = LaurentPoly::zero();
        for (e, s) in raw {
            let c = C::from_str_radix(&s, 10).map_err(serde::de::Error::custom)?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// Divides `numerator` by each `1 − q^l` in turn. When the numerator is
/// divisible by the whole product, every intermediate step is exact too.
fn divide_by_factors<C: Coeff>(numerator: LaurentPoly<C>, denominators: impl Iterator<Item = i64>) -> LaurentPoly<C> {
    denominators.fold(numerator, |acc, l| {
        acc.div_exact(&LaurentPoly::one_minus_q_pow(l))
            .expect("product formula divides exactly")
    })
}

/// `g_{k,m}(q)`: Poincaré polynomial of `Gr(k, m)`.
pub fn gaussian_binomial<C: Coeff>(k: usize, m: usize) -> Result<LaurentPoly<C>> {
    if k > m {
        return Err(Error::IndexOutOfRange(format!("gaussian binomial k = {k} > m = {m}")));
    }
    let num = (m - k + 1..=m).map(|l| LaurentPoly::one_minus_q_pow(l as i64)).fold(LaurentPoly::one(), |a, b| &a * &b);
    Ok(divide_by_factors(num, (1..=k).map(|l| l as i64)))
}

/// `og_{i,2n+1}(q)`: Poincaré polynomial of `OGr(i, 2n+1)`.
pub fn og_poincare<C: Coeff>(i: usize, n: usize) -> Result<LaurentPoly<C>> {
    if i > n {
        return Err(Error::IndexOutOfRange(format!("orthogonal Grassmannian i = {i} > n = {n}")));
    }
    let num = (n - i + 1..=n)
        .map(|l| LaurentPoly::one_minus_q_pow(2 * l as i64))
        .fold(LaurentPoly::one(), |a, b| &a * &b);
    Ok(divide_by_factors(num, (1..=i).map(|l| l as i64)))
}

/// `dim OGr(i, 2n+1) = i(4n − 3i + 1)/2`.
pub fn og_dim(i: usize, n: usize) -> usize {
    i * (4 * n + 1 - 3 * i) / 2
}

/// `1 + q + … + q^{d}`; zero for `d < 0`.
fn projective_space<C: Coeff>(d: i64) -> LaurentPoly<C> {
    LaurentPoly::from_coeffs(0, (0..=d).map(|_| C::one()))
}

/// Betti numbers of a smooth quadric of dimension `d` (`d < 0` is empty).
fn smooth_quadric<C: Coeff>(d: i64) -> LaurentPoly<C> {
    let mut p = projective_space(d);
    if d >= 0 && d % 2 == 0 {
        p.add_term(d / 2, C::one());
    }
    p
}

/// Even Betti numbers (exponent `a` ↔ `dim H^{2a}`) of the quadric
/// `b_1² + … + b_j² = 0` in `P^{m−1}`, `j = rank`, `m = coords`.
///
/// The quadric is the join of a smooth quadric in `P^{j−1}` with the vertex
/// `L = P^{m−j−1}`; its cohomology is `H(L)` plus the smooth quadric's
/// cohomology shifted by `q^{m−j}`.
pub fn quadric_betti<C: Coeff>(rank: usize, coords: usize) -> Result<LaurentPoly<C>> {
    if rank > coords {
        return Err(Error::IndexOutOfRange(format!("quadric rank {rank} > {coords} coordinates")));
    }
    let (j, m) = (rank as i64, coords as i64);
    Ok(projective_space(m - j - 1) + smooth_quadric(j - 2).shift(m - j))
}

/// Both sides of `og_{i,2n+1}(q) = ∑_j q^{(i−j)(i−j+1)/2} g_{⌊j/2⌋,n}(q²) g_{i−j,2n−i−j}(q)`.
pub fn sum_identity_sides<C: Coeff>(n: usize, i: usize) -> Result<(LaurentPoly<C>, LaurentPoly<C>)> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange(format!("identity needs 1 <= i <= n, got i = {i}, n = {n}")));
    }
    let lhs = og_poincare(i, n)?;
    let mut rhs = LaurentPoly::zero();
    for j in 0..=i {
        let d = (i - j) as i64;
        let term = &gaussian_binomial::<C>(j / 2, n)?.substitute_power(2) * &gaussian_binomial(i - j, 2 * n - i - j)?;
        rhs += &term.shift(d * (d + 1) / 2);
    }
    Ok((lhs, rhs))
}

pub fn verify_sum_identity<C: Coeff>(n: usize, i: usize) -> Result<bool> {
    let (lhs, rhs) = sum_identity_sides::<C>(n, i)?;
    Ok(lhs == rhs)
}

pub fn eval_at_one<C: Coeff>(p: &LaurentPoly<C>) -> C {
    p.eval_at_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = LaurentPoly<BigInt>;

    fn lp(start: i64, c: &[i64]) -> P {
        P::from_i64s(start, c)
    }

    #[test]
    fn arithmetic_basics() {
        let a = lp(-1, &[1, 2]);
        let b = lp(0, &[1, -1]);
        assert_eq!(&a * &b, lp(-1, &[1, 1, -2]));
        assert_eq!(&a - &a, P::zero());
        assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        assert_eq!(lp(0, &[1, 0, 1]).div_exact(&lp(0, &[1, 1])), Err(Error::InexactDivision));
        assert_eq!(a.div_exact(&P::zero()), Err(Error::DivisionByZero));
        assert_eq!(lp(0, &[3]).div_exact(&lp(0, &[2])), Err(Error::InexactDivision));
        assert!(P::monomial(4, BigInt::from(0)).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(lp(-3, &[1, 0, 1]).to_string(), "q^-3 + q^-1");
        assert_eq!(lp(0, &[1, 2, 1]).to_string(), "1 + 2q + q^2");
        assert_eq!(lp(0, &[-1, 0, -3]).to_string(), "-1 - 3q^2");
        assert_eq!(P::zero().to_string(), "0");
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(gaussian_binomial::<BigInt>(0, 5).unwrap(), P::one());
        assert_eq!(gaussian_binomial::<BigInt>(1, 2).unwrap(), lp(0, &[1, 1]));
        assert_eq!(gaussian_binomial::<BigInt>(2, 4).unwrap(), lp(0, &[1, 1, 2, 1, 1]));
        assert!(gaussian_binomial::<BigInt>(3, 2).is_err());
    }

    #[test]
    fn og_examples() {
        assert_eq!(og_poincare::<BigInt>(1, 2).unwrap(), lp(0, &[1, 1, 1, 1]));
        assert_eq!(og_poincare::<BigInt>(0, 7).unwrap(), P::one());
        assert_eq!(og_poincare::<BigInt>(2, 2).unwrap(), lp(0, &[1, 1, 1, 1]));
        assert!(og_poincare::<BigInt>(3, 2).is_err());
        for n in 0..8 {
            for i in 0..=n {
                let p = og_poincare::<BigInt>(i, n).unwrap();
                assert_eq!(p.max_exp(), Some(og_dim(i, n) as i64));
            }
        }
    }

    #[test]
    fn quadric_examples() {
        assert_eq!(quadric_betti::<BigInt>(4, 4).unwrap(), lp(0, &[1, 2, 1]));
        assert_eq!(quadric_betti::<BigInt>(2, 4).unwrap(), lp(0, &[1, 1, 2]));
        assert_eq!(quadric_betti::<BigInt>(1, 2).unwrap(), P::one());
        assert!(quadric_betti::<BigInt>(3, 2).is_err());
    }

    #[test]
    fn sum_identity_examples() {
        assert!(verify_sum_identity::<BigInt>(1, 1).unwrap());
        assert!(verify_sum_identity::<BigInt>(2, 2).unwrap());
        let (_, rhs) = sum_identity_sides::<BigInt>(2, 2).unwrap();
        assert_eq!(rhs, lp(0, &[1, 1, 1, 1]));
        assert!(verify_sum_identity::<BigInt>(2, 0).is_err());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval_at_one(&lp(0, &[1, 1, 1, 1])), BigInt::from(4));
        assert_eq!(eval_at_one(&P::zero()), BigInt::from(0));
        for n in 0..=10 {
            assert_eq!(og_poincare::<BigInt>(n, n).unwrap().eval_at_one(), BigInt::from(1u64 << n));
        }
    }

    #[test]
    fn machine_integers_agree_with_bigint() {
        let small = gaussian_binomial::<i64>(5, 12).unwrap();
        let big = gaussian_binomial::<BigInt>(5, 12).unwrap();
        assert_eq!(small.to_string(), big.to_string());
    }

    #[test]
    fn json_shape() {
        let p = lp(-2, &[3, 0, 1]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"[[-2,"3"],[0,"1"]]"#);
        let back: P = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
