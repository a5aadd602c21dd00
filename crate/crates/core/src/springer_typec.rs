//! Type-C Springer data for the order-two orbits `O'_{2^i 1^{2n−2i}}` of
//! `Sp(2n)`: bipartition labels, Kostka numbers, and the local Euler
//! characteristics behind the characteristic-cycle identity.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::combinat::{self, binomial};
use crate::error::{Error, Result};
use crate::ic_engine::LocalSystem;
use crate::partitions::Partition;
use crate::qseries::og_poincare;

/// Irreducible representation `(α)(β)` of the type-`C_n` Weyl group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Bipartition {
    pub alpha: Partition,
    pub beta: Partition,
}

impl Bipartition {
    pub fn new(alpha: Partition, beta: Partition) -> Self {
        Bipartition { alpha, beta }
    }

    pub fn n(&self) -> usize {
        self.alpha.weight() + self.beta.weight()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({}),({}))", self.alpha, self.beta)
    }
}

/// Number of semistandard tableaux of shape `shape` and content `weight`.
///
/// Places the entries `1, 2, …` in turn, each as a horizontal strip of the
/// prescribed size; a row may only grow up to the old length of the row
/// above it, which is exactly column-strictness.
pub fn kostka(shape: &Partition, weight: &Partition) -> Result<u64> {
    if shape.weight() != weight.weight() {
        return Err(Error::WeightMismatch { expected: shape.weight(), found: weight.weight() });
    }
    fn place(cur: &mut Vec<usize>, shape: &[usize], content: &[usize]) -> u64 {
        let Some((&size, rest)) = content.split_first() else {
            return 1;
        };
        let old = cur.clone();
        let mut count = 0;
        strip(cur, &old, shape, 0, size, rest, &mut count);
        count
    }
    fn strip(
        cur: &mut Vec<usize>,
        old: &[usize],
        shape: &[usize],
        row: usize,
        left: usize,
        rest: &[usize],
        count: &mut u64,
    ) {
        if left == 0 {
            let mut next = cur.clone();
            *count += place(&mut next, shape, rest);
            return;
        }
        if row >= shape.len() {
            return;
        }
        let cap = if row == 0 { shape[0] } else { shape[row].min(old[row - 1]) };
        let room = cap.saturating_sub(old[row]);
        for add in (0..=room.min(left)).rev() {
            cur[row] = old[row] + add;
            strip(cur, old, shape, row + 1, left - add, rest, count);
        }
        cur[row] = old[row];
    }
    let mut cur = vec![0; shape.len()];
    Ok(place(&mut cur, shape.parts(), weight.parts()))
}

/// Standard Young tableaux of a shape, by removing corners recursively.
pub fn standard_tableaux(shape: &Partition) -> BigInt {
    fn rec(shape: Vec<usize>, memo: &mut HashMap<Vec<usize>, BigInt>) -> BigInt {
        if shape.is_empty() {
            return BigInt::from(1);
        }
        if let Some(v) = memo.get(&shape) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for r in 0..shape.len() {
            let is_corner = r + 1 == shape.len() || shape[r + 1] < shape[r];
            if is_corner {
                let mut smaller = shape.clone();
                smaller[r] -= 1;
                if smaller[r] == 0 {
                    smaller.pop();
                }
                total += rec(smaller, memo);
            }
        }
        memo.insert(shape, total.clone());
        total
    }
    rec(shape.parts().to_vec(), &mut HashMap::new())
}

/// Closed form `K_{2^{i−j₀}1^{n−2i}, 1^{n−2j₀}} = C(n−2j₀, i−j₀) − C(n−2j₀, i−j₀−1)`.
pub fn kostka_closed_form(n: usize, i: usize, j0: usize) -> Result<BigInt> {
    if j0 > i || 2 * i > n {
        return Err(Error::IndexOutOfRange(format!("need j0 <= i, 2i <= n; got n = {n}, i = {i}, j0 = {j0}")));
    }
    let (m, k) = ((n - 2 * j0) as i64, (i - j0) as i64);
    Ok(binomial(m, k) - binomial(m, k - 1))
}

/// Springer label of `(O'_{2^i 1^{2n−2i}}, local system)`.
pub fn springer_label(n: usize, i: usize, local_system: LocalSystem) -> Result<Bipartition> {
    if i > n {
        return Err(Error::IndexOutOfRange(format!("i = {i} > n = {n}")));
    }
    let ones = |k: usize| Partition::rectangle(1, k);
    match local_system {
        LocalSystem::Trivial if i % 2 == 0 => Ok(Bipartition::new(ones(i / 2), ones(n - i / 2))),
        LocalSystem::Trivial => {
            let m = i.div_ceil(2);
            Ok(Bipartition::new(ones(n - m + 1), ones(m - 1)))
        }
        LocalSystem::Nontrivial if i == 0 => Err(Error::NoNontrivialSystem("the zero orbit".into())),
        LocalSystem::Nontrivial if i % 2 == 1 => Err(Error::NotInSpringerImage(format!(
            "IC(O'_(2^{i} 1^{}), E') does not occur for odd i",
            2 * n - 2 * i
        ))),
        LocalSystem::Nontrivial => {
            let m = i / 2;
            Ok(Bipartition::new(Partition::empty(), Partition::two_one(m, n - 2 * m)))
        }
    }
}

/// `C(n, |α|) · f^α · f^β`.
pub fn bipartition_dim(b: &Bipartition) -> BigInt {
    binomial(b.n() as i64, b.alpha.weight() as i64) * standard_tableaux(&b.alpha) * standard_tableaux(&b.beta)
}

/// `χ(IC(O'_{2^i 1^{2n−2i}}, C))` at a point of `O'_{2^j …}`: `C(n−j, ⌊(i−j)/2⌋)`.
pub fn euler_chi_trivial(n: usize, i: usize, j: usize) -> Result<BigInt> {
    if j > i || i > n {
        return Err(Error::IndexOutOfRange(format!("need j <= i <= n, got j = {j}, i = {i}, n = {n}")));
    }
    Ok(binomial((n - j) as i64, ((i - j) / 2) as i64))
}

/// `χ(IC(O'_{2^{i2} …}, E'))` at `O'_{2^j …}` for even `i2`.
pub fn euler_chi_nontrivial(n: usize, i2: usize, j: usize) -> Result<BigInt> {
    if i2 % 2 == 1 {
        return Err(Error::NotInSpringerImage(format!("nontrivial system on 2^{i2} with i2 odd")));
    }
    if j > i2 || i2 > n {
        return Err(Error::IndexOutOfRange(format!("need j <= i2 <= n, got j = {j}, i2 = {i2}, n = {n}")));
    }
    if j % 2 == 1 {
        return Ok(BigInt::zero());
    }
    let (m, k) = ((n - j) as i64, ((i2 - j) / 2) as i64);
    Ok(binomial(m, k) - binomial(m, k - 1))
}

/// Trivial-system value extended by zero outside the orbit closure.
fn chi_trivial_or_zero(n: usize, i: usize, j: usize) -> BigInt {
    if j > i {
        BigInt::zero()
    } else {
        euler_chi_trivial(n, i, j).expect("indices checked")
    }
}

/// `χ(IC(2^i, C)) = χ(IC(2^i, E')) + χ(IC(2^{i−1}, C))` at every `x_j`, `j ≤ i`.
pub fn verify_cc_identity(n: usize, i: usize) -> Result<bool> {
    if i % 2 == 1 {
        return Err(Error::IndexOutOfRange(format!("identity needs even i, got {i}")));
    }
    if i < 2 || i > n {
        return Err(Error::IndexOutOfRange(format!("need 2 <= i <= n, got i = {i}, n = {n}")));
    }
    for j in 0..=i {
        let lhs = euler_chi_trivial(n, i, j)?;
        let rhs = euler_chi_nontrivial(n, i, j)? + chi_trivial_or_zero(n, i - 1, j);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `∑_{i=j}^{n} C(n−j, ⌊(i−j)/2⌋) = 2^{n−j}`, cross-checked against
/// `χ(OGr(n−j, 2n−2j+1))` and, for odd `j`, against the Euler
/// characteristic `(n−1)·2^{n−j}` of the quadric-bundle fiber.
pub fn verify_two_power_sum(n: usize, j: usize) -> Result<bool> {
    if j > n {
        return Err(Error::IndexOutOfRange(format!("j = {j} > n = {n}")));
    }
    let target = combinat::pow2((n - j) as u32);
    let sum: BigInt = (j..=n).map(|i| chi_trivial_or_zero(n, i, j)).sum();
    let og = og_poincare::<BigInt>(n - j, n - j)?.eval_at_one();
    let mut ok = sum == target && og == target;
    if j % 2 == 1 {
        let quadric = crate::qseries::quadric_betti::<BigInt>(j, n)?.eval_at_one();
        ok &= quadric * &og == BigInt::from(n as i64 - 1) * &target;
    }
    Ok(ok)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EulerRow {
    pub i: usize,
    /// Values at `x_0, …, x_i`.
    #[serde(serialize_with = "bigint_vec")]
    pub trivial: Vec<BigInt>,
    /// Present for even `i ≥ 2`.
    #[serde(serialize_with = "opt_bigint_vec")]
    pub nontrivial: Option<Vec<BigInt>>,
    pub cc_identity: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EulerTable {
    pub n: usize,
    pub rows: Vec<EulerRow>,
    /// `∑_{i ≥ j} χ_trivial(n, i, j)` for each `j`.
    #[serde(serialize_with = "bigint_vec")]
    pub column_sums: Vec<BigInt>,
    pub two_power_sums: bool,
}

fn bigint_vec<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|b| b.to_string()))
}

fn opt_bigint_vec<S: serde::Serializer>(v: &Option<Vec<BigInt>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_some(&v.iter().map(|b| b.to_string()).collect::<Vec<_>>()),
        None => s.serialize_none(),
    }
}

/// Local Euler characteristics of the whole order-two family at rank `n`.
pub fn euler_table(n: usize) -> Result<EulerTable> {
    if n == 0 {
        return Err(Error::IndexOutOfRange("rank must be at least 1".into()));
    }
    let mut rows = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let trivial = (0..=i).map(|j| euler_chi_trivial(n, i, j)).collect::<Result<Vec<_>>>()?;
        let (nontrivial, cc_identity) = if i >= 2 && i % 2 == 0 {
            let v = (0..=i).map(|j| euler_chi_nontrivial(n, i, j)).collect::<Result<Vec<_>>>()?;
            (Some(v), Some(verify_cc_identity(n, i)?))
        } else {
            (None, None)
        };
        rows.push(EulerRow { i, trivial, nontrivial, cc_identity });
    }
    let column_sums = (0..=n).map(|j| (j..=n).map(|i| chi_trivial_or_zero(n, i, j)).sum()).collect();
    let two_power_sums = (0..=n).map(|j| verify_two_power_sum(n, j)).collect::<Result<Vec<_>>>()?.into_iter().all(|b| b);
    Ok(EulerTable { n, rows, column_sums, two_power_sums })
}
