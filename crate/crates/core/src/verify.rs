//! Exhaustive identity suites behind `symspring verify`.

use std::thread;

use num_bigint::BigInt;
use serde::Serialize;

use crate::combinat::binomial;
use crate::error::Result;
use crate::fano::{fano_betti_from_table, fano_multiplicities, multiplicities_match_table};
use crate::ic_engine::{closed_form_f, closed_form_t, half_orbit_dim, StalkSolver};
use crate::partitions::{codim, is_relevant_full, semismall_bound, Partition};
use crate::qseries::verify_sum_identity;
use crate::springer_typec::{kostka, kostka_closed_form, verify_cc_identity, verify_two_power_sum};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: Result<bool>, what: impl FnOnce() -> String) {
        self.cases += 1;
        let failure = match ok {
            Ok(true) => return,
            Ok(false) => what(),
            Err(e) => format!("{}: {e}", what()),
        };
        self.failures += 1;
        self.first_failure.get_or_insert(failure);
    }

    fn finish(self, name: &'static str) -> SuiteReport {
        SuiteReport { name, cases: self.cases, failures: self.failures, first_failure: self.first_failure }
    }
}

pub fn poincare_identity(n_max: usize) -> SuiteReport {
    let mut t = Tally::default();
    for n in 1..=n_max {
        for i in 1..=n {
            t.check(verify_sum_identity::<BigInt>(n, i), || format!("og identity at n = {n}, i = {i}"));
        }
    }
    t.finish("poincare-identity")
}

/// Solver against closed forms, plus parity of `f_i` and positivity of `T^i_j`.
pub fn solver_closed_form(n_max: usize) -> SuiteReport {
    let mut t = Tally::default();
    let mut solver = StalkSolver::<BigInt>::new();
    for n in 1..=n_max {
        let (f, m) = match solver.tables(n) {
            Ok((f, m)) => (f.clone(), m.clone()),
            Err(e) => {
                t.check(Err(e), || format!("solver at rank {n}"));
                return t.finish("solver-closed-form");
            }
        };
        for i in 0..=n {
            t.check(closed_form_f(n, i).map(|c| c == f.f[i]), || format!("f_{i} at n = {n}"));
            let shifted = f.f[i].shift(half_orbit_dim(n, i));
            t.check(Ok(shifted.is_polynomial() && shifted.exponents_divisible_by(2)), || {
                format!("q^(m_i) f_{i} not a polynomial in q^2 at n = {n}")
            });
            for j in 0..=i {
                let tij = m.get(i, j);
                t.check(closed_form_t(n, i, j).map(|c| &c == tij), || format!("T^{i}_{j} at n = {n}"));
                t.check(Ok(tij.has_nonnegative_coeffs()), || format!("T^{i}_{j} negative at n = {n}"));
            }
        }
    }
    t.finish("solver-closed-form")
}

/// Brute-force tableau counts against the closed form, for both weight shapes.
pub fn kostka_oracle(n_max: usize) -> SuiteReport {
    let mut t = Tally::default();
    for n in 1..=n_max {
        for i in 0..=n / 2 {
            for j0 in 0..=i {
                let shape = Partition::two_one(i - j0, n - 2 * i);
                let ones = Partition::two_one(0, n - 2 * j0);
                let wide = Partition::two_one(i, n - 2 * i);
                let mixed = Partition::two_one(j0, n - 2 * j0);
                let expected = kostka_closed_form(n, i, j0);
                let check = |k: Result<u64>| -> Result<bool> {
                    let e = expected.clone()?;
                    Ok(BigInt::from(k?) == e)
                };
                t.check(check(kostka(&shape, &ones)), || format!("K({shape}; {ones}) at n = {n}"));
                t.check(check(kostka(&wide, &mixed)), || format!("K({wide}; {mixed}) at n = {n}"));
            }
        }
    }
    t.finish("kostka-oracle")
}

pub fn cc_identity(n_max: usize) -> SuiteReport {
    let mut t = Tally::default();
    for n in 2..=n_max {
        for i in (2..=n).step_by(2) {
            t.check(verify_cc_identity(n, i), || format!("characteristic-cycle identity at n = {n}, i = {i}"));
        }
    }
    t.finish("cc-identity")
}

pub fn two_power_sum(n_max: usize) -> SuiteReport {
    let mut t = Tally::default();
    for n in 1..=n_max {
        for j in 0..=n {
            t.check(verify_two_power_sum(n, j), || format!("two-power sum at n = {n}, j = {j}"));
        }
    }
    t.finish("two-power-sum")
}

/// `dim F_i + dim L_{i−1} = dim L_i`.
pub fn rank_identity(n_max: usize) -> SuiteReport {
    let mut t = Tally::default();
    for n in 1..=n_max {
        let (a, b) = (2 * n as i64, 2 * n as i64 + 1);
        for i in 1..=n as i64 {
            let lhs = binomial(a, i) - binomial(a, i - 2) + binomial(b, i - 1);
            t.check(Ok(lhs == binomial(b, i)), || format!("rank identity at n = {n}, i = {i}"));
        }
    }
    t.finish("rank-identity")
}

/// Betti numbers against the multiplicity tables, and Poincaré duality.
pub fn fano_routes(n_max: usize) -> SuiteReport {
    let mut t = Tally::default();
    let mut solver = StalkSolver::<BigInt>::new();
    for n in 1..=n_max {
        let table = match solver.tables(n) {
            Ok((_, m)) => m.clone(),
            Err(e) => {
                t.check(Err(e), || format!("solver at rank {n}"));
                break;
            }
        };
        for i in 1..=n {
            let fano = match fano_multiplicities::<BigInt>(n, i) {
                Ok(f) => f,
                Err(e) => {
                    t.check(Err(e), || format!("Fano n = {n}, i = {i}"));
                    continue;
                }
            };
            let betti = fano.betti_poly();
            t.check(fano_betti_from_table(&table, i).map(|b| b == betti), || {
                format!("Betti routes differ at n = {n}, i = {i}")
            });
            t.check(multiplicities_match_table(&fano, &table), || format!("M vs T at n = {n}, i = {i}"));
            t.check(Ok(betti.is_palindromic_about(fano.complex_dim as i64)), || {
                format!("Betti numbers not palindromic at n = {n}, i = {i}")
            });
        }
    }
    t.finish("fano-routes")
}

/// `2·D(λ) ≤ codim λ` with equality exactly on the relevant template,
/// for every partition of odd weight up to `2·n_max + 1`.
pub fn semismall(n_max: usize) -> SuiteReport {
    let mut t = Tally::default();
    for n in 1..=n_max {
        for p in Partition::all(2 * n + 1) {
            let (d, c) = (semismall_bound(&p), codim(&p));
            let ok = 2 * d <= c && ((2 * d == c) == is_relevant_full(&p));
            t.check(Ok(ok), || format!("semismall ledger at {p}: 2D = {}, codim = {c}", 2 * d));
        }
    }
    t.finish("semismall")
}

type Suite = fn(usize) -> SuiteReport;

const SUITES: [Suite; 8] =
    [cc_identity, fano_routes, kostka_oracle, poincare_identity, rank_identity, semismall, solver_closed_form, two_power_sum];

/// Runs every suite on its own thread; reports come back sorted by name.
pub fn run_all(n_max: usize) -> Vec<SuiteReport> {
    let mut reports: Vec<SuiteReport> = thread::scope(|s| {
        let handles: Vec<_> = SUITES.iter().map(|suite| s.spawn(move || suite(n_max))).collect();
        handles.into_iter().map(|h| h.join().expect("suite panicked")).collect()
    });
    reports.sort_by_key(|r| r.name);
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_pass_small() {
        let reports = run_all(4);
        assert_eq!(reports.len(), 8);
        assert!(reports.windows(2).all(|w| w[0].name < w[1].name));
        for r in &reports {
            assert!(r.passed(), "{r:?}");
            assert!(r.cases > 0, "{}", r.name);
        }
    }
}
