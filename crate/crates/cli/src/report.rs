//! Machine-readable views of the library tables and their text renderings.

use std::fmt::Write;

use num_bigint::BigInt;
use serde::Serialize;
use symspring::ic_engine::{
    ft_support_flag, ft_table, FourierTableRow, LocalSystem, MonodromyKind, RichardsonSupport, SupportFlag,
    GRADING_CONVENTION,
};
use symspring::partitions::{has_gaps, is_relevant_full, is_richardson, nilcone_dim};
use symspring::springer_typec::EulerTable;
use symspring::verify::SuiteReport;
use symspring::{Fano, Multiplicities, OrbitLabel, Partition, Poly, Result, Stalks};

pub trait Render: Serialize {
    fn tsv(&self) -> String;
    fn pretty(&self) -> String;
}

fn big<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn big_vec<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|b| b.to_string()))
}

fn table(header: &[&str], rows: &[Vec<String>], sep: &str) -> String {
    let widths: Vec<usize> = (0..header.len())
        .map(|c| rows.iter().map(|r| r[c].chars().count()).chain([header[c].len()]).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        writeln!(out, "{}", padded.join(sep).trim_end()).unwrap();
    };
    line(header.to_vec());
    for r in rows {
        line(r.iter().map(String::as_str).collect());
    }
    out
}

fn tsv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join("\t");
    out.push('\n');
    for r in rows {
        out.push_str(&r.join("\t"));
        out.push('\n');
    }
    out
}

fn yes(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn support_name(s: &SupportFlag) -> String {
    match s {
        SupportFlag::Proper { richardson: Some(RichardsonSupport::Borel) } => "proper (borel)".into(),
        SupportFlag::Proper { richardson: Some(RichardsonSupport::Parabolic(k)) } => format!("proper (parabolic {k})"),
        other => other.name().into(),
    }
}

#[derive(Serialize)]
pub struct OrbitRow {
    pub partition: Partition,
    pub dim: usize,
    pub codim: usize,
    pub has_gaps: bool,
    pub is_richardson: bool,
    pub is_relevant_full: bool,
    pub ft_support: SupportFlag,
}

#[derive(Serialize)]
pub struct OrbitsReport {
    pub n: usize,
    pub dim_nilcone: usize,
    pub orbits: Vec<OrbitRow>,
}

impl OrbitsReport {
    pub fn build(n: usize) -> Result<Self> {
        let orbits = Partition::all(2 * n + 1)
            .into_iter()
            .map(|p| {
                let o = OrbitLabel::new(n, p.clone())?;
                Ok(OrbitRow {
                    dim: o.dim(),
                    codim: o.codim(),
                    has_gaps: has_gaps(&p),
                    is_richardson: is_richardson(&p),
                    is_relevant_full: is_relevant_full(&p),
                    ft_support: ft_support_flag(&o, LocalSystem::Trivial)?,
                    partition: p,
                })
            })
            .collect::<Result<_>>()?;
        Ok(OrbitsReport { n, dim_nilcone: nilcone_dim(n), orbits })
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.orbits
            .iter()
            .map(|o| {
                vec![
                    o.partition.to_string(),
                    o.dim.to_string(),
                    o.codim.to_string(),
                    yes(o.has_gaps),
                    yes(o.is_richardson),
                    yes(o.is_relevant_full),
                    support_name(&o.ft_support),
                ]
            })
            .collect()
    }
}

const ORBIT_HEADER: [&str; 7] = ["partition", "dim", "codim", "gaps", "richardson", "relevant", "ft_support"];

impl Render for OrbitsReport {
    fn tsv(&self) -> String {
        tsv(&ORBIT_HEADER, &self.rows())
    }

    fn pretty(&self) -> String {
        format!(
            "n = {}, N = {}, dim nilcone = {}\n\n{}",
            self.n,
            2 * self.n + 1,
            self.dim_nilcone,
            table(&ORBIT_HEADER, &self.rows(), "  ")
        )
    }
}

#[derive(Serialize)]
pub struct StalkEntry {
    pub i: usize,
    pub poly: Poly,
}

#[derive(Serialize)]
pub struct MultiplicityEntry {
    pub i: usize,
    pub j: usize,
    pub poly: Poly,
}

#[derive(Serialize)]
pub struct StalksReport {
    pub rank: usize,
    pub grading: &'static str,
    pub f: Vec<StalkEntry>,
    pub t: Vec<MultiplicityEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_forms_match: Option<bool>,
}

impl StalksReport {
    pub fn build(stalks: &Stalks, mult: &Multiplicities, check: Option<bool>) -> Self {
        let f = stalks.f.iter().enumerate().map(|(i, p)| StalkEntry { i, poly: p.clone() }).collect();
        let t = mult
            .t
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, p)| MultiplicityEntry { i, j, poly: p.clone() }))
            .collect();
        StalksReport { rank: stalks.rank, grading: GRADING_CONVENTION, f, t, closed_forms_match: check }
    }
}

impl Render for StalksReport {
    fn tsv(&self) -> String {
        let mut rows: Vec<Vec<String>> =
            self.f.iter().map(|e| vec!["f".into(), e.i.to_string(), String::new(), e.poly.to_string()]).collect();
        rows.extend(self.t.iter().map(|e| vec!["T".into(), e.i.to_string(), e.j.to_string(), e.poly.to_string()]));
        tsv(&["table", "i", "j", "poly"], &rows)
    }

    fn pretty(&self) -> String {
        let mut out = format!("rank n = {}\ngrading: {}\n\n", self.rank, self.grading);
        for e in self.f.iter().skip(1) {
            writeln!(out, "f_{} = {}", e.i, e.poly).unwrap();
        }
        out.push('\n');
        for e in &self.t {
            writeln!(out, "T^{}_{} = {}", e.i, e.j, e.poly).unwrap();
        }
        if let Some(ok) = self.closed_forms_match {
            writeln!(out, "\nclosed forms: {}", if ok { "match" } else { "MISMATCH" }).unwrap();
        }
        out
    }
}

#[derive(Serialize)]
pub struct FanoTerm {
    pub j: usize,
    #[serde(serialize_with = "big")]
    pub mult: BigInt,
}

#[derive(Serialize)]
pub struct FanoRowView {
    pub k: usize,
    pub degree: usize,
    pub terms: Vec<FanoTerm>,
    #[serde(serialize_with = "big")]
    pub betti: BigInt,
}

#[derive(Serialize)]
pub struct FanoReport {
    pub n: usize,
    pub i: usize,
    pub complex_dim: usize,
    #[serde(serialize_with = "big_vec")]
    pub l_dims: Vec<BigInt>,
    pub rows: Vec<FanoRowView>,
}

impl FanoReport {
    pub fn build(f: &Fano) -> Self {
        let rows = f
            .rows
            .iter()
            .map(|r| FanoRowView {
                k: r.k,
                degree: 2 * r.k,
                terms: r.terms.iter().map(|(j, m)| FanoTerm { j: *j, mult: m.clone() }).collect(),
                betti: r.betti.clone(),
            })
            .collect();
        FanoReport { n: f.rank, i: f.planes_index, complex_dim: f.complex_dim, l_dims: f.l_dims.clone(), rows }
    }

    fn decomposition(r: &FanoRowView) -> String {
        let parts: Vec<String> = r
            .terms
            .iter()
            .map(|t| if t.mult == BigInt::from(1) { format!("L_{}", t.j) } else { format!("{}·L_{}", t.mult, t.j) })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl Render for FanoReport {
    fn tsv(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| vec![r.k.to_string(), r.degree.to_string(), Self::decomposition(r), r.betti.to_string()])
            .collect();
        tsv(&["k", "degree", "decomposition", "betti"], &rows)
    }

    fn pretty(&self) -> String {
        let dims: Vec<String> = self.l_dims.iter().enumerate().map(|(j, d)| format!("L_{j}={d}")).collect();
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| vec![format!("H^{}", r.degree), r.betti.to_string(), Self::decomposition(r)])
            .collect();
        format!(
            "Fano variety of {}-planes in an intersection of two quadrics in P^{}\ncomplex dimension {}; {}\n\n{}",
            self.i - 1,
            2 * self.n,
            self.complex_dim,
            dims.join(", "),
            table(&["degree", "betti", "decomposition"], &rows, "  ")
        )
    }
}

#[derive(Serialize)]
pub struct KostkaReport {
    pub shape: Partition,
    pub weight: Partition,
    pub kostka: u64,
}

impl Render for KostkaReport {
    fn tsv(&self) -> String {
        tsv(&["shape", "weight", "kostka"], &[vec![self.shape.to_string(), self.weight.to_string(), self.kostka.to_string()]])
    }

    fn pretty(&self) -> String {
        format!("K[({}), ({})] = {}\n", self.shape, self.weight, self.kostka)
    }
}

#[derive(Serialize)]
#[serde(transparent)]
pub struct EulerReport(pub EulerTable);

impl EulerReport {
    fn rows(&self) -> Vec<Vec<String>> {
        let join = |v: &[BigInt]| v.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(",");
        self.0
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.i.to_string(),
                    join(&r.trivial),
                    r.nontrivial.as_deref().map(join).unwrap_or_else(|| "-".into()),
                    r.cc_identity.map(yes).unwrap_or_else(|| "-".into()),
                ]
            })
            .collect()
    }
}

const EULER_HEADER: [&str; 4] = ["i", "trivial@x_0..x_i", "nontrivial@x_0..x_i", "cc_identity"];

impl Render for EulerReport {
    fn tsv(&self) -> String {
        tsv(&EULER_HEADER, &self.rows())
    }

    fn pretty(&self) -> String {
        let sums: Vec<String> = self.0.column_sums.iter().map(|b| b.to_string()).collect();
        format!(
            "Euler characteristics of IC stalks on O'_(2^i 1^(2n-2i)), n = {}\n\n{}\ncolumn sums over i: {}  (powers of two: {})\n",
            self.0.n,
            table(&EULER_HEADER, &self.rows(), "  "),
            sums.join(", "),
            yes(self.0.two_power_sums)
        )
    }
}

#[derive(Serialize)]
pub struct FtReport {
    pub n: usize,
    pub rows: Vec<FourierTableRow>,
}

impl FtReport {
    pub fn build(n: usize) -> Result<Self> {
        Ok(FtReport { n, rows: ft_table(n)? })
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let mono = |m: MonodromyKind| match m {
            MonodromyKind::FiniteTits => "finite",
            MonodromyKind::InfiniteBraid => "braid",
        };
        self.rows
            .iter()
            .map(|r| {
                vec![
                    r.i.to_string(),
                    r.orbit.to_string(),
                    r.trivial_target_dim.to_string(),
                    mono(r.trivial_monodromy).into(),
                    r.nontrivial_target_dim.as_ref().map_or("-".into(), |d| d.to_string()),
                    r.nontrivial_monodromy.map_or("-", mono).into(),
                ]
            })
            .collect()
    }
}

const FT_HEADER: [&str; 6] = ["i", "orbit", "dim_L_i", "monodromy", "dim_F_i", "monodromy"];

impl Render for FtReport {
    fn tsv(&self) -> String {
        tsv(&FT_HEADER, &self.rows())
    }

    fn pretty(&self) -> String {
        format!("Fourier transform of order-two IC sheaves, n = {}\n\n{}", self.n, table(&FT_HEADER, &self.rows(), "  "))
    }
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub n_max: usize,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl Render for VerifyReport {
    fn tsv(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .suites
            .iter()
            .map(|s| {
                vec![
                    s.name.into(),
                    s.cases.to_string(),
                    s.failures.to_string(),
                    s.first_failure.clone().unwrap_or_default(),
                ]
            })
            .collect();
        tsv(&["suite", "cases", "failures", "first_failure"], &rows)
    }

    fn pretty(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            let status = if s.passed() { "ok" } else { "FAIL" };
            writeln!(out, "{:<20} {:>6} cases  {status}", s.name, s.cases).unwrap();
            if let Some(f) = &s.first_failure {
                writeln!(out, "    first counterexample: {f}").unwrap();
            }
        }
        writeln!(out, "\nn <= {}: {}", self.n_max, if self.passed { "all suites pass" } else { "FAILED" }).unwrap();
        out
    }
}
