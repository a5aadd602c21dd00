//! Cohomology of the Fano variety `Fano_{i−1}^{2n}` of `(i−1)`-planes in a
//! smooth intersection of two quadrics in `P^{2n}`.
//!
//! `H^{2k} ≅ ⊕_j L_j^{⊕M_i(k,j)}` where `M_i(k,j)` is the coefficient of
//! `q^{k−j(n−i)}` in `g_{i−j,2n−i−j}(q)`; odd cohomology vanishes.

use num_bigint::BigInt;

use crate::combinat::binomial_in;
use crate::error::{Error, Result};
use crate::ic_engine::MultiplicityTable;
use crate::qseries::{gaussian_binomial, Coeff, LaurentPoly};

#[derive(Debug, Clone, PartialEq)]
pub struct FanoRow<C: Coeff = BigInt> {
    /// Cohomological degree is `2k`.
    pub k: usize,
    /// `(j, M_i(k, j))` for the nonzero multiplicities, `j` increasing.
    pub terms: Vec<(usize, C)>,
    /// `b_{2k} = ∑_j dim L_j · M_i(k, j)`.
    pub betti: C,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FanoCohomology<C: Coeff = BigInt> {
    pub rank: usize,
    /// The variety is `Fano_{i−1}^{2n}`.
    pub planes_index: usize,
    /// `2i(n−i)`.
    pub complex_dim: usize,
    /// One row per `k` in `0..=complex_dim`.
    pub rows: Vec<FanoRow<C>>,
    /// `dim L_j = C(2n+1, j)` for `j = 0..=i`.
    pub l_dims: Vec<C>,
}

impl<C: Coeff> FanoCohomology<C> {
    pub fn multiplicity(&self, k: usize, j: usize) -> C {
        self.rows
            .get(k)
            .and_then(|r| r.terms.iter().find(|(jj, _)| *jj == j))
            .map_or_else(C::zero, |(_, m)| m.clone())
    }

    /// `∑_k b_{2k} q^k`.
    pub fn betti_poly(&self) -> LaurentPoly<C> {
        LaurentPoly::from_terms(self.rows.iter().map(|r| (r.k as i64, r.betti.clone())))
    }
}

fn check_range(n: usize, i: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange(format!("need 1 <= i <= n, got i = {i}, n = {n}")));
    }
    Ok(())
}

pub fn fano_multiplicities<C: Coeff>(n: usize, i: usize) -> Result<FanoCohomology<C>> {
    check_range(n, i)?;
    let complex_dim = 2 * i * (n - i);
    let l_dims: Vec<C> = (0..=i).map(|j| binomial_in::<C>(2 * n as i64 + 1, j as i64)).collect();
    let gs = (0..=i).map(|j| gaussian_binomial::<C>(i - j, 2 * n - i - j)).collect::<Result<Vec<_>>>()?;
    let rows = (0..=complex_dim)
        .map(|k| {
            let terms: Vec<(usize, C)> = (0..=i)
                .map(|j| (j, gs[j].coeff(k as i64 - (j * (n - i)) as i64)))
                .filter(|(_, m)| !m.is_zero())
                .collect();
            let betti = terms.iter().fold(C::zero(), |acc, (j, m)| acc + l_dims[*j].clone() * m.clone());
            FanoRow { k, terms, betti }
        })
        .collect();
    Ok(FanoCohomology { rank: n, planes_index: i, complex_dim, rows, l_dims })
}

pub fn fano_betti_poly<C: Coeff>(n: usize, i: usize) -> Result<LaurentPoly<C>> {
    Ok(fano_multiplicities::<C>(n, i)?.betti_poly())
}

/// The Betti polynomial rebuilt from the multiplicity table of rank `n`:
/// `M_i(k, j)` is the coefficient of `q^{k−i(n−i)}` in `T^i_j`.
pub fn fano_betti_from_table<C: Coeff>(table: &MultiplicityTable<C>, i: usize) -> Result<LaurentPoly<C>> {
    let n = table.rank;
    check_range(n, i)?;
    let mut total = LaurentPoly::zero();
    for j in 0..=i {
        let dim = binomial_in::<C>(2 * n as i64 + 1, j as i64);
        total += &table.get(i, j).scale(&dim);
    }
    Ok(total.shift((i * (n - i)) as i64))
}

/// Compares every `M_i(k, j)` against the matching coefficient of `T^i_j`.
pub fn multiplicities_match_table<C: Coeff>(fano: &FanoCohomology<C>, table: &MultiplicityTable<C>) -> Result<bool> {
    let (n, i) = (fano.rank, fano.planes_index);
    if table.rank != n {
        return Err(Error::RankMismatch(table.rank, n));
    }
    let shift = (i * (n - i)) as i64;
    for k in 0..=fano.complex_dim {
        for j in 0..=i {
            if fano.multiplicity(k, j) != table.get(i, j).coeff(k as i64 - shift) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `χ(Fano_{i−1}^{2n})` summed over `j` first: `∑_j C(2n+1, j) · g_{i−j,2n−i−j}(1)`.
pub fn fano_euler_by_summand<C: Coeff>(n: usize, i: usize) -> Result<C> {
    check_range(n, i)?;
    let mut acc = C::zero();
    for j in 0..=i {
        let g = gaussian_binomial::<C>(i - j, 2 * n - i - j)?.eval_at_one();
        acc = acc + binomial_in::<C>(2 * n as i64 + 1, j as i64) * g;
    }
    Ok(acc)
}

/// Row `k` of the table for the Fano variety of lines (`i = 2`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinesRow {
    pub k: usize,
    pub trivial_mult: usize,
    pub has_l1: bool,
    pub has_l2: bool,
}

/// `H^{2k}(Fano_1^{2n})` for `k ≤ 2n−4`: `C^{⌊(k+2)/2⌋}`, plus one `L_1` for
/// `k ≥ n−2`, plus one `L_2` at `k = 2n−4`. The upper half follows by duality.
///
/// Checked row by row against [`fano_multiplicities`]; needs `n ≥ 3`.
pub fn lines_fano_table(n: usize) -> Result<Vec<LinesRow>> {
    if n < 3 {
        return Err(Error::DegenerateExample(n));
    }
    let fano = fano_multiplicities::<BigInt>(n, 2)?;
    let rows: Vec<LinesRow> = (0..=2 * n - 4)
        .map(|k| LinesRow { k, trivial_mult: (k + 2) / 2, has_l1: k + 2 >= n, has_l2: k == 2 * n - 4 })
        .collect();
    for r in &rows {
        let expect = [r.trivial_mult, r.has_l1 as usize, r.has_l2 as usize];
        for (j, e) in expect.into_iter().enumerate() {
            let got = fano.multiplicity(r.k, j);
            if got != BigInt::from(e) {
                return Err(Error::Mismatch(format!("n = {n}, k = {}: M(k, {j}) = {got}, expected {e}", r.k)));
            }
        }
    }
    Ok(rows)
}
