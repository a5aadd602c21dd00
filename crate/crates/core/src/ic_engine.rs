//! IC stalks on the order-two orbits `O_{2^i 1^{2n+1-2i}}` and the
//! decomposition multiplicities of Reeder's resolutions.
//!
//! The solver works rank by rank. At rank `n` the stalk of the resolution
//! over `0` is the orthogonal Grassmannian `OGr(i, 2n+1)`, so
//!
//! ```text
//! og_{i,2n+1}(q) q^{-i(2n-i+1)/2} = ∑_{j=0}^{i} f_j(q) T^i_j(q)
//! ```
//!
//! with `f_0 = 1`, `T^i_i = 1`, `T^i_j` for `j ≥ 1` borrowed from rank
//! `n − j` (`T^i_j|_n = T^{i-j}_0|_{n-j}`), `T^i_0` symmetric and `f_i`
//! concentrated in negative degrees. Peeling the nonnegative part off the
//! left-hand side therefore determines `T^i_0` and `f_i` uniquely.
//!
//! Grading: exponent `a` records `dim H^{2a}`, absolute degrees, so the
//! stalk of `IC(O, C)` on its own orbit sits at `a = −dim O / 2`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::combinat::{self, bigint_str};
use crate::error::{Error, Result};
use crate::partitions::{has_gaps, is_richardson, richardson_label, OrbitLabel, Partition};
use crate::qseries::{gaussian_binomial, og_poincare, Coeff, LaurentPoly};

/// Human-readable statement of the grading used in every stalk table.
pub const GRADING_CONVENTION: &str =
    "exponent a records dim H^{2a}; absolute grading, on-orbit stalk of IC(O,C) at a = -dim(O)/2";

/// `m_i = dim O_{2^i 1^{2n+1-2i}} / 2 = i(2n−i+1)/2`.
pub fn half_orbit_dim(n: usize, i: usize) -> i64 {
    let v = i * (2 * n + 1 - i);
    debug_assert!(v % 2 == 0, "i(2n-i+1) is always even");
    (v / 2) as i64
}

/// Stalk polynomials `f_0, …, f_n` at `0` for one rank.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StalkTable<C: Coeff = BigInt> {
    pub rank: usize,
    pub f: Vec<LaurentPoly<C>>,
}

/// `T^i_j(q) = ∑_k t^i_{j,2k} q^{±k}` for `0 ≤ j ≤ i ≤ n`, stored as `t[i][j]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MultiplicityTable<C: Coeff = BigInt> {
    pub rank: usize,
    pub t: Vec<Vec<LaurentPoly<C>>>,
}

impl<C: Coeff> MultiplicityTable<C> {
    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly<C> {
        &self.t[i][j]
    }
}

/// Memoizing solver across ranks, since `T^i_j` at rank `n` is read off
/// rank `n − j`.
#[derive(Debug, Clone)]
pub struct StalkSolver<C: Coeff = BigInt> {
    ranks: Vec<(StalkTable<C>, MultiplicityTable<C>)>,
}

impl<C: Coeff> Default for StalkSolver<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Coeff> StalkSolver<C> {
    pub fn new() -> Self {
        let zero_rank = (
            StalkTable { rank: 0, f: vec![LaurentPoly::one()] },
            MultiplicityTable { rank: 0, t: vec![vec![LaurentPoly::one()]] },
        );
        StalkSolver { ranks: vec![zero_rank] }
    }

    pub fn solved_up_to(&self) -> usize {
        self.ranks.len() - 1
    }

    /// Solves every rank up to `n` and returns the tables for `n`.
    pub fn tables(&mut self, n: usize) -> Result<(&StalkTable<C>, &MultiplicityTable<C>)> {
        while self.solved_up_to() < n {
            let next = self.solved_up_to() + 1;
            let solved = self.solve_rank(next)?;
            self.ranks.push(solved);
        }
        let (s, m) = &self.ranks[n];
        Ok((s, m))
    }

    fn solve_rank(&self, n: usize) -> Result<(StalkTable<C>, MultiplicityTable<C>)> {
        let mut f: Vec<LaurentPoly<C>> = vec![LaurentPoly::one()];
        let mut t: Vec<Vec<LaurentPoly<C>>> = vec![vec![LaurentPoly::one()]];
        for i in 1..=n {
            let inconsistent = |reason: String| Error::InconsistentRecursion { rank: n, i, reason };

            // T^i_j for j ≥ 1 from lower ranks; j = i gives T^0_0 = 1.
            let mut row: Vec<LaurentPoly<C>> = vec![LaurentPoly::zero(); i + 1];
            for (j, slot) in row.iter_mut().enumerate().skip(1) {
                *slot = self.ranks[n - j].1.t[i - j][0].clone();
            }

            let m_i = half_orbit_dim(n, i);
            let mut rest = og_poincare::<C>(i, n)?.shift(-m_i);
            for j in 1..i {
                rest -= &(&f[j] * &row[j]);
            }

            let mut t_i0 = LaurentPoly::zero();
            let top = rest.max_exp().unwrap_or(-1);
            for k in (0..=top).rev() {
                let c = rest.coeff(k);
                if c.is_negative() {
                    return Err(inconsistent(format!("negative multiplicity {c} at q^{k}")));
                }
                let sym = if k == 0 {
                    LaurentPoly::monomial(0, c)
                } else {
                    LaurentPoly::from_terms([(k, c.clone()), (-k, c)])
                };
                rest -= &sym;
                t_i0 += &sym;
            }

            let bound = (i * (n - i)) as i64;
            if t_i0.max_exp().is_some_and(|e| e > bound) {
                return Err(inconsistent(format!("T^{i}_0 exceeds support bound {bound}")));
            }
            if rest.max_exp().is_some_and(|e| e >= 0) {
                return Err(inconsistent("remainder has a nonnegative exponent".into()));
            }
            if rest.min_exp().is_some_and(|e| e < -m_i) || !rest.has_nonnegative_coeffs() {
                return Err(inconsistent(format!("f_{i} = {rest} is not a stalk polynomial")));
            }
            row[0] = t_i0;
            f.push(rest);
            t.push(row);
        }
        Ok((StalkTable { rank: n, f }, MultiplicityTable { rank: n, t }))
    }

    /// Stalk of `IC(O_{2^i 1^{2n+1-2i}}, C)` at a point of `O_{2^j 1^{2n+1-2j}}`.
    ///
    /// Equals the stalk at `0` of the rank-`(n−j)` sheaf for `2^{i−j}`,
    /// shifted down by `s_j / 2 = j(2n+1−j)/2`.
    pub fn stalk_at(&mut self, n: usize, i: usize, j: usize) -> Result<LaurentPoly<C>> {
        if j > i || i > n {
            return Err(Error::IndexOutOfRange(format!("need j <= i <= n, got j = {j}, i = {i}, n = {n}")));
        }
        let (s, _) = self.tables(n - j)?;
        Ok(s.f[i - j].shift(-half_orbit_dim(n, j)))
    }
}

/// Runs the inductive solver up to rank `n`.
pub fn solve_stalk_tables<C: Coeff>(n: usize) -> Result<(StalkTable<C>, MultiplicityTable<C>)> {
    if n == 0 {
        return Err(Error::IndexOutOfRange("rank must be at least 1".into()));
    }
    let mut solver = StalkSolver::new();
    let (s, m) = solver.tables(n)?;
    Ok((s.clone(), m.clone()))
}

/// `f_i(q) = q^{−i(2n−i+1)/2} g_{⌊i/2⌋,n}(q²)`.
pub fn closed_form_f<C: Coeff>(n: usize, i: usize) -> Result<LaurentPoly<C>> {
    if i > n {
        return Err(Error::IndexOutOfRange(format!("i = {i} > n = {n}")));
    }
    Ok(gaussian_binomial::<C>(i / 2, n)?.substitute_power(2).shift(-half_orbit_dim(n, i)))
}

/// `T^i_j(q) = q^{−(i−j)(n−i)} g_{i−j,2n−i−j}(q)`.
pub fn closed_form_t<C: Coeff>(n: usize, i: usize, j: usize) -> Result<LaurentPoly<C>> {
    if j > i || i > n {
        return Err(Error::IndexOutOfRange(format!("need j <= i <= n, got j = {j}, i = {i}, n = {n}")));
    }
    Ok(gaussian_binomial::<C>(i - j, 2 * n - i - j)?.shift(-(((i - j) * (n - i)) as i64)))
}

pub fn ic_stalk_poly<C: Coeff>(n: usize, i: usize, j: usize) -> Result<LaurentPoly<C>> {
    StalkSolver::new().stalk_at(n, i, j)
}

/// Fake degree `P_i(q) = q^{n² − ni + i(i−1)/2} g_{⌊i/2⌋,n}(q²)` of the
/// type-C Springer representation attached to `O'_{2^i 1^{2n−2i}}`.
pub fn fake_degree_poly<C: Coeff>(n: usize, i: usize) -> Result<LaurentPoly<C>> {
    if i > n {
        return Err(Error::IndexOutOfRange(format!("i = {i} > n = {n}")));
    }
    let e = (n * n + i * i.saturating_sub(1) / 2) as i64 - (n * i) as i64;
    Ok(gaussian_binomial::<C>(i / 2, n)?.substitute_power(2).shift(e))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonodromyKind {
    /// Factors through the finite Tits extension `A[2] ⋊ S_{2n+1}`.
    FiniteTits,
    /// Infinite monodromy of the braid group (hyperelliptic family).
    InfiniteBraid,
}

/// One row of the Fourier-transform matching for order-two orbits.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FourierTableRow {
    pub i: usize,
    pub orbit: Partition,
    /// `dim L_i = C(2n+1, i)`.
    #[serde(with = "bigint_str")]
    pub trivial_target_dim: BigInt,
    pub trivial_monodromy: MonodromyKind,
    /// `dim F_i = C(2n, i) − C(2n, i−2)`, absent for `i = 0`.
    #[serde(serialize_with = "opt_bigint_str")]
    pub nontrivial_target_dim: Option<BigInt>,
    pub nontrivial_monodromy: Option<MonodromyKind>,
}

fn opt_bigint_str<S: serde::Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(b) => s.serialize_some(&b.to_string()),
        None => s.serialize_none(),
    }
}

pub fn ft_table(n: usize) -> Result<Vec<FourierTableRow>> {
    if n == 0 {
        return Err(Error::IndexOutOfRange("rank must be at least 1".into()));
    }
    let two_n = 2 * n as i64;
    Ok((0..=n)
        .map(|i| {
            let ii = i as i64;
            let nontrivial = (i >= 1).then(|| combinat::binomial(two_n, ii) - combinat::binomial(two_n, ii - 2));
            FourierTableRow {
                i,
                orbit: Partition::two_one(i, 2 * n + 1 - 2 * i),
                trivial_target_dim: combinat::binomial(two_n + 1, ii),
                trivial_monodromy: MonodromyKind::FiniteTits,
                nontrivial_monodromy: nontrivial.as_ref().map(|_| MonodromyKind::InfiniteBraid),
                nontrivial_target_dim: nontrivial,
            }
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LocalSystem {
    Trivial,
    Nontrivial,
}

/// Where the Fourier transform of a Richardson IC sheaf lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "index")]
pub enum RichardsonSupport {
    /// `g_1^0 = K·b_1` (one odd part).
    Borel,
    /// `g_1^i = K·p^i_1` (`2n−2i+1` odd parts).
    Parabolic(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "flag")]
pub enum SupportFlag {
    Full,
    Proper { richardson: Option<RichardsonSupport> },
    Unknown,
}

impl SupportFlag {
    pub fn name(&self) -> &'static str {
        match self {
            SupportFlag::Full => "full",
            SupportFlag::Proper { .. } => "proper",
            SupportFlag::Unknown => "unknown",
        }
    }
}

/// Support of `F(IC(O, E))` where the classification determines it.
pub fn ft_support_flag(o: &OrbitLabel, local_system: LocalSystem) -> Result<SupportFlag> {
    let p = o.partition();
    let order_two = p.order_two_index();
    match local_system {
        LocalSystem::Nontrivial => match order_two {
            Some(i) if i >= 1 => Ok(SupportFlag::Full),
            _ => Err(Error::NoNontrivialSystem(o.to_string())),
        },
        LocalSystem::Trivial => {
            if order_two.is_some() {
                return Ok(SupportFlag::Full);
            }
            let richardson = if is_richardson(p) {
                let l = richardson_label(p)?;
                Some(if l.odd_block == 1 {
                    RichardsonSupport::Borel
                } else {
                    RichardsonSupport::Parabolic(l.mu_weight)
                })
            } else {
                None
            };
            if has_gaps(p) || richardson.is_some() {
                Ok(SupportFlag::Proper { richardson })
            } else {
                Ok(SupportFlag::Unknown)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPoly<BigInt>;

    fn lp(start: i64, c: &[i64]) -> P {
        P::from_i64s(start, c)
    }

    #[test]
    fn solver_rank_two() {
        let (s, m) = solve_stalk_tables::<BigInt>(2).unwrap();
        assert_eq!(s.f[1], P::q_pow(-2));
        assert_eq!(m.t[1][0], lp(-1, &[1, 1, 1]));
        assert_eq!(s.f[2], lp(-3, &[1, 0, 1]));
        assert_eq!(m.t[2][0], P::one());
        assert_eq!(m.t[2][1], P::one());
        assert_eq!(m.t[2][2], P::one());
    }

    #[test]
    fn solver_rank_one() {
        let (s, m) = solve_stalk_tables::<BigInt>(1).unwrap();
        assert_eq!(s.f, vec![P::one(), P::q_pow(-1)]);
        assert_eq!(m.t[1][0], P::one());
        assert!(solve_stalk_tables::<BigInt>(0).is_err());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form_f::<BigInt>(2, 1).unwrap(), P::q_pow(-2));
        assert_eq!(closed_form_f::<BigInt>(2, 2).unwrap(), lp(-3, &[1, 0, 1]));
        assert_eq!(closed_form_f::<BigInt>(5, 0).unwrap(), P::one());
        assert!(closed_form_f::<BigInt>(2, 3).is_err());

        assert_eq!(closed_form_t::<BigInt>(2, 1, 0).unwrap(), lp(-1, &[1, 1, 1]));
        assert_eq!(closed_form_t::<BigInt>(4, 3, 3).unwrap(), P::one());
        assert_eq!(closed_form_t::<BigInt>(2, 2, 0).unwrap(), P::one());
        assert!(closed_form_t::<BigInt>(2, 1, 2).is_err());
    }

    #[test]
    fn stalks_at_orbits() {
        // On-orbit stalk: one-dimensional at a = -dim(O)/2.
        for n in 1..5 {
            for i in 0..=n {
                assert_eq!(ic_stalk_poly::<BigInt>(n, i, i).unwrap(), P::q_pow(-half_orbit_dim(n, i)));
            }
        }
        assert_eq!(ic_stalk_poly::<BigInt>(2, 1, 0).unwrap(), P::q_pow(-2));
        // f_1 at rank 2 is q^-2; shifted by s_1/2 = 3.
        assert_eq!(ic_stalk_poly::<BigInt>(3, 2, 1).unwrap(), P::q_pow(-5));
        assert!(ic_stalk_poly::<BigInt>(3, 1, 2).is_err());
    }

    #[test]
    fn fake_degrees() {
        assert_eq!(fake_degree_poly::<BigInt>(2, 0).unwrap(), P::q_pow(4));
        assert_eq!(fake_degree_poly::<BigInt>(2, 1).unwrap(), P::q_pow(2));
        assert_eq!(fake_degree_poly::<BigInt>(2, 2).unwrap(), lp(1, &[1, 0, 1]));
        for n in 1..7 {
            for i in 0..=n {
                let f = closed_form_f::<BigInt>(n, i).unwrap();
                assert_eq!(fake_degree_poly::<BigInt>(n, i).unwrap(), f.shift((n * n) as i64));
            }
        }
    }

    #[test]
    fn fourier_table() {
        let rows = ft_table(2).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].trivial_target_dim, BigInt::from(1));
        assert_eq!(rows[0].nontrivial_target_dim, None);
        assert_eq!(rows[1].trivial_target_dim, BigInt::from(5));
        assert_eq!(rows[1].nontrivial_target_dim, Some(BigInt::from(4)));
        assert_eq!(rows[1].nontrivial_monodromy, Some(MonodromyKind::InfiniteBraid));
        for n in 1..12 {
            let rows = ft_table(n).unwrap();
            for i in 1..=n {
                let lhs = &rows[i].trivial_target_dim;
                let rhs = rows[i].nontrivial_target_dim.clone().unwrap() + &rows[i - 1].trivial_target_dim;
                assert_eq!(*lhs, rhs);
            }
        }
    }

    #[test]
    fn support_flags() {
        let o = |s: &str| OrbitLabel::from_partition(s.parse().unwrap()).unwrap();
        assert_eq!(
            ft_support_flag(&o("3,2,2"), LocalSystem::Trivial).unwrap(),
            SupportFlag::Proper { richardson: Some(RichardsonSupport::Borel) }
        );
        assert_eq!(ft_support_flag(&o("2,2,1,1,1"), LocalSystem::Nontrivial).unwrap(), SupportFlag::Full);
        assert_eq!(ft_support_flag(&o("2,2,2,1"), LocalSystem::Trivial).unwrap(), SupportFlag::Full);
        assert_eq!(ft_support_flag(&o("3,2,1,1"), LocalSystem::Trivial).unwrap(), SupportFlag::Unknown);
        assert_eq!(ft_support_flag(&o("1,1,1"), LocalSystem::Trivial).unwrap(), SupportFlag::Full);
        assert!(ft_support_flag(&o("1,1,1"), LocalSystem::Nontrivial).is_err());
        assert!(ft_support_flag(&o("3,2,2"), LocalSystem::Nontrivial).is_err());
        assert_eq!(
            ft_support_flag(&o("3,1,1"), LocalSystem::Trivial).unwrap(),
            SupportFlag::Proper { richardson: Some(RichardsonSupport::Parabolic(1)) }
        );
        assert_eq!(
            ft_support_flag(&o("4,3"), LocalSystem::Trivial).unwrap(),
            SupportFlag::Proper { richardson: None }
        );
    }
}
