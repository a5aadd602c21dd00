//! Independent brute-force oracles for the closed formulas.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use symspring::combinat::binomial;
use symspring::partitions::{
    branch_moves, codim, closure_contains, dim_centralizer, has_gaps, induced_orbit, orbit_dim, OrbitLabel,
};
use symspring::qseries::{gaussian_binomial, og_poincare, quadric_betti};
use symspring::springer_typec::{kostka, standard_tableaux};
use symspring::{Partition, Poly};

fn eval_at(p: &Poly, q: i64) -> BigInt {
    assert!(p.is_polynomial());
    p.terms().map(|(e, c)| c * BigInt::from(q).pow(e as u32)).sum()
}

/// Partitions inside a `k × (m−k)` box, counted by size.
fn box_partition_counts(k: usize, width: usize) -> Vec<u64> {
    fn rec(rows_left: usize, max: usize, size: usize, counts: &mut Vec<u64>) {
        counts[size] += 1;
        if rows_left == 0 {
            return;
        }
        for part in 1..=max {
            rec(rows_left - 1, part, size + part, counts);
        }
    }
    let mut counts = vec![0; k * width + 1];
    rec(k, width, 0, &mut counts);
    counts
}

#[test]
fn gaussian_binomial_counts_box_partitions() {
    for m in 0..=10 {
        for k in 0..=m {
            let g = gaussian_binomial::<BigInt>(k, m).unwrap();
            let counts = box_partition_counts(k, m - k);
            for (e, c) in counts.iter().enumerate() {
                assert_eq!(g.coeff(e as i64), BigInt::from(*c), "g_({k},{m}) at q^{e}");
            }
            assert_eq!(g.max_exp().unwrap(), (k * (m - k)) as i64);
        }
    }
}

/// Split quadratic form `x_0 x_1 + x_2 x_3 + … (+ x_{r−1}²)` of rank `r`.
fn split_form(x: &[i64], rank: usize, p: i64) -> i64 {
    let mut s = 0;
    let mut t = 0;
    while t + 1 < rank {
        s += x[t] * x[t + 1];
        t += 2;
    }
    if rank % 2 == 1 {
        s += x[rank - 1] * x[rank - 1];
    }
    s.rem_euclid(p)
}

fn projective_zeros(rank: usize, coords: usize, p: i64) -> i64 {
    let total = p.pow(coords as u32);
    let mut zeros = 0;
    let mut x = vec![0; coords];
    for code in 1..total {
        let mut c = code;
        for xi in x.iter_mut() {
            *xi = c % p;
            c /= p;
        }
        if split_form(&x, rank, p) == 0 {
            zeros += 1;
        }
    }
    zeros / (p - 1)
}

#[test]
fn quadric_betti_matches_point_counts() {
    for p in [3, 5] {
        for coords in 1..=5 {
            for rank in 1..=coords {
                let poly = quadric_betti::<BigInt>(rank, coords).unwrap();
                let count = projective_zeros(rank, coords, p);
                assert_eq!(eval_at(&poly, p), BigInt::from(count), "rank {rank} in P^{} over F_{p}", coords - 1);
            }
        }
    }
}

#[test]
fn quadric_betti_small_values() {
    let q = |j, m| quadric_betti::<BigInt>(j, m).unwrap();
    assert_eq!(q(2, 4), Poly::from_i64s(0, &[1, 1, 2]));
    assert_eq!(q(4, 4), Poly::from_i64s(0, &[1, 2, 1]));
    assert_eq!(q(1, 3), Poly::from_i64s(0, &[1, 1]));
    assert!(quadric_betti::<BigInt>(5, 4).is_err());
}

/// Form `x_0² + x_1 x_2 + x_3 x_4 + …` on `F_q^{2n+1}`.
struct OddQuadric {
    q: i64,
    dim: usize,
}

impl OddQuadric {
    fn bilinear(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 2 * a[0] * b[0];
        for t in (1..self.dim).step_by(2) {
            s += a[t] * b[t + 1] + a[t + 1] * b[t];
        }
        s.rem_euclid(self.q)
    }

    fn quad(&self, a: &[i64]) -> i64 {
        let mut s = a[0] * a[0];
        for t in (1..self.dim).step_by(2) {
            s += a[t] * a[t + 1];
        }
        s.rem_euclid(self.q)
    }

    fn decode(&self, mut code: i64) -> Vec<i64> {
        (0..self.dim)
            .map(|_| {
                let d = code % self.q;
                code /= self.q;
                d
            })
            .collect()
    }

    fn encode(&self, v: &[i64]) -> i64 {
        v.iter().rev().fold(0, |acc, &d| acc * self.q + d)
    }
}

/// Number of totally singular `i`-subspaces, by counting ordered bases.
fn isotropic_subspaces(n: usize, i: usize, q: i64) -> BigInt {
    let form = OddQuadric { q, dim: 2 * n + 1 };
    let total = q.pow(form.dim as u32);
    let singular: Vec<Vec<i64>> = (1..total).map(|c| form.decode(c)).filter(|v| form.quad(v) == 0).collect();

    fn extend(form: &OddQuadric, singular: &[Vec<i64>], basis: &mut Vec<Vec<i64>>, span: &BTreeSet<i64>, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut count = 0;
        for v in singular {
            if span.contains(&form.encode(v)) || basis.iter().any(|b| form.bilinear(b, v) != 0) {
                continue;
            }
            let mut bigger = span.clone();
            for s in span {
                let w = form.decode(*s);
                for c in 1..form.q {
                    let sum: Vec<i64> = w.iter().zip(v).map(|(a, b)| (a + c * b).rem_euclid(form.q)).collect();
                    bigger.insert(form.encode(&sum));
                }
            }
            basis.push(v.clone());
            count += extend(form, singular, basis, &bigger, left - 1);
            basis.pop();
        }
        count
    }

    let ordered = extend(&form, &singular, &mut Vec::new(), &BTreeSet::from([0]), i);
    let gl: i64 = (0..i as u32).map(|k| q.pow(i as u32) - q.pow(k)).product();
    let ordered = BigInt::from(ordered);
    assert_eq!(&ordered % gl, BigInt::from(0));
    ordered / gl
}

#[test]
fn og_poincare_matches_isotropic_counts_over_f3() {
    for (n, i) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)] {
        let og = og_poincare::<BigInt>(i, n).unwrap();
        assert_eq!(eval_at(&og, 3), isotropic_subspaces(n, i, 3), "OGr({i}, {})", 2 * n + 1);
    }
}

fn hook_length_count(p: &Partition) -> BigInt {
    let conj = symspring::partitions::conjugate(p);
    let mut denom = BigInt::from(1);
    for (r, &len) in p.parts().iter().enumerate() {
        for c in 0..len {
            denom *= (len - c - 1) + (conj.part(c) - r - 1) + 1;
        }
    }
    let mut fact = BigInt::from(1);
    for k in 1..=p.weight() {
        fact *= k;
    }
    fact / denom
}

#[test]
fn standard_tableaux_match_hook_lengths_and_kostka() {
    for w in 0..=9 {
        let ones = Partition::rectangle(1, w);
        for p in Partition::all(w) {
            let syt = standard_tableaux(&p);
            assert_eq!(syt, hook_length_count(&p), "{p}");
            assert_eq!(syt, BigInt::from(kostka(&p, &ones).unwrap()), "{p}");
        }
    }
}

#[test]
fn kostka_is_unitriangular_in_dominance() {
    for w in 1..=7 {
        let all = Partition::all(w);
        for a in &all {
            assert_eq!(kostka(a, a).unwrap(), 1);
            for b in &all {
                let dominated = symspring::partitions::dominance_leq(b, a).unwrap();
                assert_eq!(kostka(a, b).unwrap() > 0, dominated, "K({a}; {b})");
            }
        }
    }
}

#[test]
fn two_one_kostka_matches_binomial_difference() {
    for n in 1..=10usize {
        for i in 0..=n / 2 {
            for j0 in 0..=i {
                let shape = Partition::two_one(i - j0, n - 2 * i);
                let content = Partition::rectangle(1, n - 2 * j0);
                let m = (n - 2 * j0) as i64;
                let k = (i - j0) as i64;
                assert_eq!(BigInt::from(kostka(&shape, &content).unwrap()), binomial(m, k) - binomial(m, k - 1));
            }
        }
    }
}

#[test]
fn codim_delta_matches_centralizer_difference() {
    for w in (3..=15).step_by(2) {
        for p in Partition::all(w) {
            for mv in branch_moves(&p) {
                assert_eq!(mv.target.weight() + 2, w);
                assert_eq!(
                    dim_centralizer(&p) - dim_centralizer(&mv.target),
                    mv.codim_delta,
                    "{p} -> {} ({:?})",
                    mv.target,
                    mv.kind
                );
            }
        }
    }
}

#[test]
fn gaps_are_exactly_the_induced_orbits() {
    for n in 1..=6 {
        let big_n = 2 * n + 1;
        let mut induced = BTreeSet::new();
        for levi_weight in 1..=n {
            for levi in Partition::all(levi_weight) {
                for core in Partition::all(big_n - 2 * levi_weight) {
                    induced.insert(induced_orbit(std::slice::from_ref(&levi), &core, big_n).unwrap().to_string());
                }
            }
            // Two Levi factors give nothing new, but exercise the sum.
            if levi_weight >= 2 {
                let a = Partition::rectangle(1, 1);
                let b = Partition::rectangle(1, levi_weight - 1);
                for core in Partition::all(big_n - 2 * levi_weight) {
                    let lam = induced_orbit(&[a.clone(), b.clone()], &core, big_n).unwrap();
                    assert!(induced.contains(&lam.to_string()));
                }
            }
        }
        for p in Partition::all(big_n) {
            assert_eq!(has_gaps(&p), induced.contains(&p.to_string()), "{p}");
        }
    }
}

#[test]
fn orbit_dim_strictly_monotone_in_closure_order() {
    for n in 1..=5 {
        let orbits: Vec<OrbitLabel> =
            Partition::all(2 * n + 1).into_iter().map(|p| OrbitLabel::new(n, p).unwrap()).collect();
        for outer in &orbits {
            assert_eq!(outer.codim(), codim(outer.partition()));
            for inner in &orbits {
                if inner != outer && closure_contains(outer, inner).unwrap() {
                    assert!(orbit_dim(inner) < orbit_dim(outer), "{inner} in closure of {outer}");
                }
            }
        }
    }
}
