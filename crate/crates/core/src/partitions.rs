//! Partitions and the orbit-level combinatorics of nilpotent `SO(2n+1)`-orbits
//! in the symmetric space of `SL(2n+1)`.
//!
//! A `K`-orbit in the nilpotent cone is labelled by the Jordan type of its
//! elements, a partition of `N = 2n + 1`. Everything here is pure arithmetic
//! on those labels: dimensions, closure order, the gap/induction criterion,
//! Richardson and relevance templates, and the one-step branching rules that
//! drive the fiber-dimension recursion of the resolution `K ×^{B_K} n_1 → N_1`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates that `parts` is weakly decreasing and strictly positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts descending and drops zeros; treats the input as a multiset.
    pub fn from_multiset<I: IntoIterator<Item = usize>>(parts: I) -> Self {
        let mut v: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `a^k` as a partition (empty when `a == 0` or `k == 0`).
    pub fn rectangle(a: usize, k: usize) -> Self {
        if a == 0 {
            return Partition::empty();
        }
        Partition(vec![a; k])
    }

    /// The order-two label `2^i 1^rest`.
    pub fn two_one(twos: usize, ones: usize) -> Self {
        let mut v = vec![2; twos];
        v.extend(std::iter::repeat_n(1, ones));
        Partition(v)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Distinct part values with multiplicities, largest value first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// True when every part is at most 2, i.e. the label `2^i 1^j`.
    pub fn order_two_index(&self) -> Option<usize> {
        if self.0.iter().all(|&p| p <= 2) {
            Some(self.0.iter().filter(|&&p| p == 2).count())
        } else {
            None
        }
    }

    /// All partitions of `n`, in reverse lexicographic order (`(n)` first).
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated, weakly decreasing positive integers. The empty
    /// string is the empty partition. Unsorted input is rejected.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Nilpotent `K`-orbit for `N = 2·rank + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OrbitLabel {
    rank: usize,
    partition: Partition,
}

impl OrbitLabel {
    pub fn new(rank: usize, partition: Partition) -> Result<Self> {
        let expected = 2 * rank + 1;
        if partition.weight() != expected {
            return Err(Error::WeightMismatch { expected, found: partition.weight() });
        }
        Ok(OrbitLabel { rank, partition })
    }

    /// Orbit of `λ`, with the rank read off `|λ| = 2n + 1`.
    pub fn from_partition(partition: Partition) -> Result<Self> {
        let w = partition.weight();
        if w % 2 == 0 {
            return Err(Error::InvalidPartition(format!("{partition} has even weight {w}")));
        }
        Ok(OrbitLabel { rank: (w - 1) / 2, partition })
    }

    /// `O_{2^i 1^{2n+1-2i}}`.
    pub fn order_two(rank: usize, i: usize) -> Result<Self> {
        if i > rank {
            return Err(Error::IndexOutOfRange(format!("i = {i} > n = {rank}")));
        }
        Ok(OrbitLabel { rank, partition: Partition::two_one(i, 2 * rank + 1 - 2 * i) })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// `n(2n+1) − dim Z_K(x)`.
    pub fn dim(&self) -> usize {
        orbit_dim(self)
    }

    pub fn codim(&self) -> usize {
        nilcone_dim(self.rank) - self.dim()
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O_({})", self.partition)
    }
}

/// Transpose of the Young diagram.
pub fn conjugate(p: &Partition) -> Partition {
    let first = p.part(0);
    let parts = (1..=first).map(|k| p.parts().iter().take_while(|&&x| x >= k).count()).collect();
    Partition(parts)
}

/// Dominance order `a ≤ b` by partial sums.
pub fn dominance_leq(a: &Partition, b: &Partition) -> Result<bool> {
    if a.weight() != b.weight() {
        return Err(Error::IncomparableWeights(a.weight(), b.weight()));
    }
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0, 0);
    for k in 0..len {
        sa += a.part(k);
        sb += b.part(k);
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `inner ⊂ closure(outer)`.
pub fn closure_contains(outer: &OrbitLabel, inner: &OrbitLabel) -> Result<bool> {
    if outer.rank != inner.rank {
        return Err(Error::RankMismatch(outer.rank, inner.rank));
    }
    dominance_leq(&inner.partition, &outer.partition)
}

/// `∑ (i−1) λ_i` with 1-based `i`.
pub fn dim_centralizer(p: &Partition) -> usize {
    p.parts().iter().enumerate().map(|(i, &l)| i * l).sum()
}

/// `dim K = dim N_1 = n(2n+1)`.
pub fn nilcone_dim(rank: usize) -> usize {
    rank * (2 * rank + 1)
}

pub fn orbit_dim(o: &OrbitLabel) -> usize {
    nilcone_dim(o.rank) - dim_centralizer(&o.partition)
}

/// Some consecutive difference `λ_i − λ_{i+1} ≥ 2`, with `λ_{s+1} = 0`.
pub fn has_gaps(p: &Partition) -> bool {
    (0..p.len()).any(|i| p.part(i) - p.part(i + 1) >= 2)
}

/// `λ_i = core_i + ∑_j 2·(levi_j)_i`, re-sorted as a multiset.
///
/// `ambient` is `N`; the weights must satisfy `|core| + 2·∑|levi_j| = N`.
pub fn induced_orbit(levi_parts: &[Partition], core: &Partition, ambient: usize) -> Result<Partition> {
    let found = core.weight() + 2 * levi_parts.iter().map(Partition::weight).sum::<usize>();
    if found != ambient {
        return Err(Error::WeightMismatch { expected: ambient, found });
    }
    let len = levi_parts.iter().map(Partition::len).chain([core.len()]).max().unwrap_or(0);
    let parts = (0..len).map(|i| core.part(i) + levi_parts.iter().map(|l| 2 * l.part(i)).sum::<usize>());
    Ok(Partition::from_multiset(parts))
}

/// Witness of the template `(2μ_1+1, …, 2μ_l+1, 2μ_{l+1}, …, 2μ_s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemplateMatch {
    /// `μ`, weakly decreasing, zeros kept.
    pub mu: Vec<usize>,
    /// Number `l` of odd parts.
    pub odd_block: usize,
}

/// Canonical block matching: odd parts (sorted) lead, even parts (sorted)
/// trail, and the induced `μ` must be weakly decreasing.
pub fn template_match(p: &Partition) -> Option<TemplateMatch> {
    let odd: Vec<usize> = p.parts().iter().filter(|&&x| x % 2 == 1).map(|&x| (x - 1) / 2).collect();
    let even: Vec<usize> = p.parts().iter().filter(|&&x| x % 2 == 0).map(|&x| x / 2).collect();
    if odd.is_empty() {
        return None;
    }
    let mut mu = odd;
    let odd_block = mu.len();
    mu.extend(even);
    if mu.windows(2).all(|w| w[0] >= w[1]) {
        Some(TemplateMatch { mu, odd_block })
    } else {
        None
    }
}

/// Relevant for the resolution of the full nilpotent cone:
/// `λ = (2p_1+1, 2p_2, …, 2p_s)` with `p` weakly decreasing.
pub fn is_relevant_full(p: &Partition) -> bool {
    matches!(template_match(p), Some(m) if m.odd_block == 1)
}

/// Relevant for the parabolic map `π_i`: exactly `2n−2i+1` odd parts
/// leading a weakly decreasing `p` with `∑ p = i`. `n` is read off the weight.
pub fn is_relevant_parabolic(p: &Partition, i: usize) -> Result<bool> {
    let w = p.weight();
    if w % 2 == 0 {
        return Err(Error::InvalidPartition(format!("{p} has even weight {w}")));
    }
    let n = (w - 1) / 2;
    if i == 0 || i + 1 > n {
        return Err(Error::IndexOutOfRange(format!("i = {i} not in [1, {}] for n = {n}", n.saturating_sub(1))));
    }
    Ok(matches!(template_match(p), Some(m) if m.odd_block == 2 * n - 2 * i + 1))
}

pub fn is_richardson(p: &Partition) -> bool {
    template_match(p).is_some()
}

/// Springer label of a Richardson orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RichardsonLabel {
    /// `μ^t`.
    pub label: Partition,
    /// Length of the odd block; 1 for the Borel case.
    pub odd_block: usize,
    /// `∑ μ`, the size of the symmetric group acting on the label.
    pub mu_weight: usize,
    /// Odd block longer than one part (parabolic rather than Borel template).
    pub general_template: bool,
}

pub fn richardson_label(p: &Partition) -> Result<RichardsonLabel> {
    let m = template_match(p).ok_or_else(|| Error::NotRichardson(p.to_string()))?;
    let mu = Partition::from_multiset(m.mu.iter().copied());
    Ok(RichardsonLabel {
        label: conjugate(&mu),
        odd_block: m.odd_block,
        mu_weight: mu.weight(),
        general_template: m.odd_block > 1,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MoveKind {
    /// Two boxes removed from one row of length `μ_i`.
    RowRemoval,
    /// Two rows of length `μ_i` replaced by two rows of length `μ_i − 1`.
    RowSplit,
}

/// One step `λ → λ'` of the fiber recursion over `P(ker x)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchMove {
    pub target: Partition,
    pub kind: MoveKind,
    /// The row length `μ_i` the move acts on.
    pub row: usize,
    /// `codim λ − codim λ'`.
    pub codim_delta: usize,
    /// Dimension of the stratum of lines `V_1` producing this move.
    pub fiber_increment: usize,
}

/// All branch moves of `λ`, ordered by row length (largest first), removal
/// before split. Rows of length 1 admit no removal (no such isotropic line).
pub fn branch_moves(p: &Partition) -> Vec<BranchMove> {
    if p.weight() < 3 {
        return Vec::new();
    }
    let blocks = p.multiplicities();
    let mut out = Vec::new();
    let mut prefix = 0;
    for (b, &(mu, m)) in blocks.iter().enumerate() {
        prefix += m;
        let (next_mu, next_m) = blocks.get(b + 1).copied().unwrap_or((0, 0));
        if mu >= 2 {
            let target = Partition::from_multiset(blocks.iter().flat_map(|&(v, k)| {
                let k = if v == mu { k - 1 } else { k };
                std::iter::repeat_n(v, k)
            }).chain([mu - 2]));
            let base = 2 * (prefix - 1);
            let codim_delta = if next_mu + 2 <= mu { base } else { base + next_m };
            out.push(BranchMove { target, kind: MoveKind::RowRemoval, row: mu, codim_delta, fiber_increment: prefix - 1 });
        }
        if m >= 2 {
            let target = Partition::from_multiset(blocks.iter().flat_map(|&(v, k)| {
                let k = if v == mu { k - 2 } else { k };
                std::iter::repeat_n(v, k)
            }).chain([mu - 1, mu - 1]));
            out.push(BranchMove {
                target,
                kind: MoveKind::RowSplit,
                row: mu,
                codim_delta: 2 * (prefix - 1) - 1,
                fiber_increment: prefix - 2,
            });
        }
    }
    out
}

/// Codimension in the nilpotent cone of `SL(|λ|)`-type for odd `|λ|`.
///
/// The regular orbit has trivial centralizer, so this is `dim Z_K(x)`.
pub fn codim(p: &Partition) -> usize {
    dim_centralizer(p)
}

/// Upper bound `D(λ)` on the fiber dimension of the resolution over `O_λ`,
/// obtained by maximizing over branch moves recursively (`D((1)) = 0`).
pub fn semismall_bound(p: &Partition) -> usize {
    fn rec(p: &Partition, memo: &mut HashMap<Partition, usize>) -> usize {
        if let Some(&d) = memo.get(p) {
            return d;
        }
        let d = branch_moves(p)
            .iter()
            .map(|mv| mv.fiber_increment + rec(&mv.target, memo))
            .max()
            .unwrap_or(0);
        memo.insert(p.clone(), d);
        d
    }
    rec(p, &mut HashMap::new())
}
