//! Embedded reference data and the runner that checks every entry against
//! the formulas in this crate.
//!
//! The data files live in `data/` and are compiled into the library. Setting
//! `PARADIM_DATA_DIR` makes the runner read the same file names from another
//! directory instead.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::arith::primes_up_to;
use crate::compact::trace_r;
use crate::elliptic::{dim_cusp_level1, dim_new_gamma0_signed, ALSign};
use crate::error::{Error, Result};
use crate::exactmath::{fit_numerator, Poly, RationalGF};
use crate::paramodular::{
    check_bias_region, dim_weight3, hilbert_series_with, search_weight3_zero, ParamodularFormula, Space,
};
use crate::quaternion::{enumerate_pi_gamma, verify_trace_p23};
use crate::siegel1::dim_cusp_sp4;

pub const DATA_DIR_ENV: &str = "PARADIM_DATA_DIR";

const EMBEDDED: &[(&str, &str)] = &[
    ("manifest.json", include_str!("../data/manifest.json")),
    ("table_k4.csv", include_str!("../data/table_k4.csv")),
    ("table_k5.csv", include_str!("../data/table_k5.csv")),
    ("table_k6.csv", include_str!("../data/table_k6.csv")),
    ("table_k7.csv", include_str!("../data/table_k7.csv")),
    ("table_k8.csv", include_str!("../data/table_k8.csv")),
    ("table_k10.csv", include_str!("../data/table_k10.csv")),
    ("series.json", include_str!("../data/series.json")),
    ("weight3.json", include_str!("../data/weight3.json")),
    ("bias_zero.csv", include_str!("../data/bias_zero.csv")),
    ("palindromic.json", include_str!("../data/palindromic.json")),
    ("jacobi_j2.csv", include_str!("../data/jacobi_j2.csv")),
    ("quaternion_p2.csv", include_str!("../data/quaternion_p2.csv")),
    ("quaternion_p3.csv", include_str!("../data/quaternion_p3.csv")),
    ("errata.csv", include_str!("../data/errata.csv")),
];

/// Where the data files are read from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DataSource {
    Embedded,
    Dir(PathBuf),
}

impl DataSource {
    /// The directory named by `PARADIM_DATA_DIR`, or the embedded copy.
    pub fn from_env() -> Self {
        match std::env::var_os(DATA_DIR_ENV) {
            Some(dir) if !dir.is_empty() => DataSource::Dir(dir.into()),
            _ => DataSource::Embedded,
        }
    }

    pub fn read(&self, name: &str) -> Result<String> {
        match self {
            DataSource::Embedded => EMBEDDED
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, text)| text.to_string())
                .ok_or_else(|| Error::Data(format!("no embedded file `{name}`"))),
            DataSource::Dir(dir) => {
                let path = dir.join(name);
                std::fs::read_to_string(&path).map_err(|e| Error::Data(format!("{}: {e}", path.display())))
            }
        }
    }

    /// Names of the files compiled into the library.
    pub fn embedded_names() -> impl Iterator<Item = &'static str> {
        EMBEDDED.iter().map(|(n, _)| *n)
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct Manifest {
    pub files: Vec<ManifestEntry>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct ManifestEntry {
    pub name: String,
    pub kind: String,
    pub group: String,
    #[serde(default)]
    pub k: Option<i64>,
    #[serde(default)]
    pub p: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Informational: a documented discrepancy that is shown but not asserted.
    Note,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Note => "NOTE",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Item {
    pub group: String,
    pub id: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}/{} expected={} actual={}",
            self.status, self.group, self.id, self.expected, self.actual
        )
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub items: Vec<Item>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.count(Status::Pass)
    }

    pub fn failed(&self) -> usize {
        self.count(Status::Fail)
    }

    pub fn notes(&self) -> usize {
        self.count(Status::Note)
    }

    pub fn is_success(&self) -> bool {
        self.failed() == 0
    }

    pub fn group(&self, group: &str) -> impl Iterator<Item = &Item> {
        let group = group.to_string();
        self.items.iter().filter(move |i| i.group == group)
    }

    fn count(&self, status: Status) -> usize {
        self.items.iter().filter(|i| i.status == status).count()
    }

    fn check<T: fmt::Display + PartialEq>(&mut self, group: &str, id: String, expected: T, actual: Result<T>) {
        let (actual, status) = match actual {
            Ok(a) if a == expected => (a.to_string(), Status::Pass),
            Ok(a) => (a.to_string(), Status::Fail),
            Err(e) => (format!("error: {e}"), Status::Fail),
        };
        self.items.push(Item {
            group: group.into(),
            id,
            expected: expected.to_string(),
            actual,
            status,
        });
    }

    fn note(&mut self, group: &str, id: String, expected: String, actual: String) {
        self.items.push(Item {
            group: group.into(),
            id,
            expected,
            actual,
            status: Status::Note,
        });
    }

    fn fail(&mut self, group: &str, id: String, err: Error) {
        self.items.push(Item {
            group: group.into(),
            id,
            expected: "-".into(),
            actual: format!("error: {err}"),
            status: Status::Fail,
        });
    }
}

/// Groups understood by `--only`.
pub const GROUPS: [&str; 7] = [
    "tables",
    "series",
    "weight3",
    "bias",
    "palindromic",
    "quaternion",
    "errata",
];

/// Runs every manifest entry, or only those in `only` when given.
pub fn verify(source: &DataSource, only: Option<&str>) -> Result<Report> {
    if let Some(g) = only {
        if !GROUPS.contains(&g) {
            return Err(Error::Parse(format!(
                "unknown group `{g}`; expected one of {}",
                GROUPS.join(", ")
            )));
        }
    }
    let manifest: Manifest =
        serde_json::from_str(&source.read("manifest.json")?).map_err(|e| Error::Data(format!("manifest.json: {e}")))?;
    let mut report = Report::default();
    for entry in &manifest.files {
        if only.is_some_and(|g| g != entry.group) {
            continue;
        }
        let text = match source.read(&entry.name) {
            Ok(t) => t,
            Err(e) => {
                report.fail(&entry.group, entry.name.clone(), e);
                continue;
            }
        };
        let outcome = match entry.kind.as_str() {
            "table" => run_table(&mut report, entry, &text),
            "series" => run_series(&mut report, &text),
            "weight3" => run_weight3(&mut report, &text),
            "bias_zero" => run_bias(&mut report, &text),
            "palindromic" => run_palindromic(&mut report, source, &text),
            "quaternion" => run_quaternion(&mut report, entry, &text),
            "jacobi" | "errata" => check_csv_shape(&text),
            other => Err(Error::Data(format!("unknown kind `{other}`"))),
        };
        if let Err(e) = outcome {
            report.fail(&entry.group, entry.name.clone(), e);
        }
    }
    Ok(report)
}

fn data_err(name: &str, e: impl fmt::Display) -> Error {
    Error::Data(format!("{name}: {e}"))
}

fn read_csv<T: for<'de> Deserialize<'de>>(name: &str, text: &str) -> Result<Vec<T>> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| data_err(name, e))
}

fn check_csv_shape(text: &str) -> Result<()> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    for rec in reader.records() {
        rec.map_err(|e| data_err("csv", e))?;
    }
    Ok(())
}

#[derive(Deserialize)]
struct TableRow {
    p: u64,
    row: String,
    value: i64,
}

/// One row of the tables for fixed weight `k` and `j = 0`.
pub fn table_value(formula: &ParamodularFormula, k: i64, row: &str) -> Result<i64> {
    let f = k - 3;
    let p = formula.p();
    match row {
        "H" => formula.compact().total(f, f),
        "R" => formula.compact().trace(f, f),
        "M+" => Ok(formula.compact().signed(f, f)?.plus),
        "M-" => Ok(formula.compact().signed(f, f)?.minus),
        "s2+" => dim_new_gamma0_signed(p, 2, ALSign::Plus),
        "s2-" => dim_new_gamma0_signed(p, 2, ALSign::Minus),
        "S+" => Ok(formula.signed(k, 0)?.plus),
        "S-" => Ok(formula.signed(k, 0)?.minus),
        other => Err(Error::Parse(format!("unknown table row `{other}`"))),
    }
}

fn run_table(report: &mut Report, entry: &ManifestEntry, text: &str) -> Result<()> {
    let k = entry.k.ok_or_else(|| data_err(&entry.name, "table entry needs `k`"))?;
    let rows: Vec<TableRow> = read_csv(&entry.name, text)?;
    let mut formulas: BTreeMap<u64, ParamodularFormula> = BTreeMap::new();
    for r in rows {
        let id = format!("k{k}/p{}/{}", r.p, r.row);
        let formula = match formulas.get(&r.p) {
            Some(f) => f,
            None => match ParamodularFormula::new(r.p) {
                Ok(f) => formulas.entry(r.p).or_insert(f),
                Err(e) => {
                    report.fail(&entry.group, id, e);
                    continue;
                }
            },
        };
        report.check(&entry.group, id, r.value, table_value(formula, k, &r.row));
    }
    Ok(())
}

#[derive(Clone, Debug, Deserialize)]
pub struct SeriesEntry {
    pub id: String,
    pub source: String,
    #[serde(default)]
    pub p: Option<u64>,
    #[serde(default)]
    pub space: Option<String>,
    #[serde(default)]
    pub j: i64,
    pub numerator: String,
    pub denominator: Vec<u32>,
    #[serde(default)]
    pub plus_factors: Vec<u32>,
    pub mode: String,
    pub group: String,
}

#[derive(Deserialize)]
struct SeriesFile {
    series: Vec<SeriesEntry>,
}

/// Terms compared for each printed generating function (`k` up to 80).
pub const SERIES_TERMS: usize = 81;

impl SeriesEntry {
    /// The printed generating function, with any `(1 + t^b)` denominator
    /// factors rewritten over `(1 - t^a)` factors.
    pub fn printed(&self) -> Result<RationalGF> {
        let numerator: Poly = self.numerator.parse()?;
        Ok(RationalGF::with_plus_factors(
            numerator,
            &self.denominator,
            &self.plus_factors,
        ))
    }

    /// The first `len` dimensions computed from the formulas.
    pub fn computed(&self, len: usize) -> Result<Vec<i64>> {
        let n = len as i64;
        match self.source.as_str() {
            "paramodular" => {
                let p = self.p.ok_or_else(|| data_err(&self.id, "missing `p`"))?;
                let space: Space = self
                    .space
                    .as_deref()
                    .ok_or_else(|| data_err(&self.id, "missing `space`"))?
                    .parse()?;
                ParamodularFormula::new(p)?.graded_dims(space, self.j, len)
            }
            "level1" => (0..n).map(|k| dim_cusp_sp4(k, self.j)).collect(),
            "elliptic" => Ok((0..n).map(|k| dim_cusp_level1(2 * k - 2)).collect()),
            other => Err(data_err(&self.id, format!("unknown source `{other}`"))),
        }
    }
}

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

fn run_series(report: &mut Report, text: &str) -> Result<()> {
    let file: SeriesFile = serde_json::from_str(text).map_err(|e| data_err("series.json", e))?;
    let group = "series";
    for mut s in file.series {
        s.id = format!("{}/{}", s.group, s.id);
        let computed = match s.computed(SERIES_TERMS) {
            Ok(c) => c,
            Err(e) => {
                report.fail(group, s.id.clone(), e);
                continue;
            }
        };
        let gf = match s.printed() {
            Ok(g) => g,
            Err(e) => {
                report.fail(group, s.id.clone(), e);
                continue;
            }
        };
        let denom = gf.denominator().to_vec();
        let total: usize = denom.iter().map(|&a| a as usize).sum();
        let fitted = fit_numerator(&computed, &denom, SERIES_TERMS - total - 1);
        if s.mode == "report" {
            match fitted {
                Ok(num) => {
                    let self_consistent = RationalGF::new(num.clone(), denom.clone());
                    report.check(
                        group,
                        format!("{}/fit_palindromic", s.id),
                        true,
                        Ok(self_consistent.is_palindromic()),
                    );
                    let status = if &num == gf.numerator() { "equal" } else { "differs" };
                    report.note(
                        group,
                        format!("{}/printed_numerator", s.id),
                        gf.numerator().to_string(),
                        format!("{num} ({status})"),
                    );
                }
                Err(e) => report.fail(group, format!("{}/fit_palindromic", s.id), e),
            }
            continue;
        }
        let expanded: Vec<i64> = gf
            .series_coeffs(SERIES_TERMS)
            .iter()
            .map(|c| c.try_into().unwrap_or(i64::MIN))
            .collect();
        if expanded == computed {
            report.check(
                group,
                format!("{}/expansion", s.id),
                join(&computed),
                Ok(join(&expanded)),
            );
        } else {
            let first = expanded.iter().zip(&computed).position(|(a, b)| a != b).unwrap_or(0);
            report.check(
                group,
                format!("{}/expansion@{first}", s.id),
                computed.get(first).copied().unwrap_or_default(),
                Ok(expanded.get(first).copied().unwrap_or_default()),
            );
        }
        report.check(
            group,
            format!("{}/numerator", s.id),
            gf.numerator().to_string(),
            fitted.map(|p| p.to_string()),
        );
    }
    Ok(())
}

#[derive(Deserialize)]
struct Weight3Data {
    search_bound: u64,
    zero_all_primes_up_to: u64,
    zero_extra: Vec<u64>,
    dim_one: Vec<u64>,
    dim_two: Vec<u64>,
}

fn list(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn run_weight3(report: &mut Report, text: &str) -> Result<()> {
    let data: Weight3Data = serde_json::from_str(text).map_err(|e| data_err("weight3.json", e))?;
    let group = "weight3";
    let mut expected = primes_up_to(data.zero_all_primes_up_to);
    expected.extend(&data.zero_extra);
    report.check(
        group,
        format!("zero_set/p<={}", data.search_bound),
        list(&expected),
        search_weight3_zero(data.search_bound).map(|v| list(&v)),
    );
    let bound = data.dim_one.iter().chain(&data.dim_two).copied().max().unwrap_or(0);
    for (dim, primes) in [(1, &data.dim_one), (2, &data.dim_two)] {
        let found: Result<Vec<u64>> = primes_up_to(bound)
            .into_iter()
            .filter_map(|p| match dim_weight3(p) {
                Ok((plus, _)) if plus == dim => Some(Ok(p)),
                Ok(_) => None,
                Err(e) => Some(Err(e)),
            })
            .collect();
        report.check(
            group,
            format!("dim{dim}_set/p<={bound}"),
            list(primes),
            found.map(|v| list(&v)),
        );
    }
    Ok(())
}

#[derive(Deserialize)]
struct BiasRow {
    p: u64,
    k: i64,
}

/// Region where the printed zero list of the bias is asserted.
pub const BIAS_ZERO_REGION: (u64, i64) = (300, 100);
/// Region where nonnegativity of the bias is checked.
pub const BIAS_SIGN_REGION: (u64, i64) = (500, 120);

fn pairs(v: &[(u64, i64)]) -> String {
    v.iter()
        .map(|(p, k)| format!("({p},{k})"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn run_bias(report: &mut Report, text: &str) -> Result<()> {
    let group = "bias";
    let rows: Vec<BiasRow> = read_csv("bias_zero.csv", text)?;
    let expected: Vec<(u64, i64)> = rows.iter().map(|r| (r.p, r.k)).collect();
    let (pmax, kmax) = BIAS_SIGN_REGION;
    let zeros = check_bias_region(pmax, kmax);
    report.check(
        group,
        format!("nonnegative/p<={pmax},k<={kmax}"),
        "ok".to_string(),
        zeros.as_ref().map(|_| "ok".to_string()).map_err(Clone::clone),
    );
    let (zp, zk) = BIAS_ZERO_REGION;
    let within = zeros.map(|z| z.into_iter().filter(|&(p, k)| p <= zp && k <= zk).collect::<Vec<_>>());
    report.check(
        group,
        format!("zero_set/p<={zp},k<={zk}"),
        pairs(&expected),
        within.map(|z| pairs(&z)),
    );
    Ok(())
}

#[derive(Deserialize)]
struct PalindromicData {
    prime_bound: u64,
    full_ring: Vec<u64>,
    plus_ring: Vec<u64>,
    plus_ring_additions: Vec<u64>,
}

#[derive(Deserialize)]
struct JacobiRow {
    p: u64,
    dim: i64,
}

/// Terms used to fit the Hilbert series of `A(K(p))` and `A^+(K(p))`.
pub const PALINDROMIC_TERMS: usize = 120;

/// Whether the Hilbert series of `space` at level `p` has a palindromic numerator.
pub fn palindromic(formula: &ParamodularFormula, space: Space) -> Result<bool> {
    Ok(hilbert_series_with(formula, space, 0, PALINDROMIC_TERMS, None)?
        .gf
        .is_palindromic())
}

fn run_palindromic(report: &mut Report, source: &DataSource, text: &str) -> Result<()> {
    let group = "palindromic";
    let data: PalindromicData = serde_json::from_str(text).map_err(|e| data_err("palindromic.json", e))?;
    let jacobi: Vec<JacobiRow> = read_csv("jacobi_j2.csv", &source.read("jacobi_j2.csv")?)?;
    let full: BTreeSet<u64> = data.full_ring.iter().copied().collect();
    let plus: BTreeSet<u64> = data
        .plus_ring
        .iter()
        .chain(&data.plus_ring_additions)
        .copied()
        .collect();
    let mut found_plus = Vec::new();
    for p in primes_up_to(data.prime_bound - 1) {
        let formula = match ParamodularFormula::new(p) {
            Ok(f) => f,
            Err(e) => {
                report.fail(group, format!("p{p}"), e);
                continue;
            }
        };
        report.check(
            group,
            format!("A/p{p}"),
            full.contains(&p),
            palindromic(&formula, Space::A),
        );
        let plus_pal = palindromic(&formula, Space::APlus);
        if matches!(plus_pal, Ok(true)) {
            found_plus.push(p);
        }
        report.check(group, format!("A+/p{p}"), plus.contains(&p), plus_pal);
    }
    let jacobi_zero: Vec<u64> = jacobi
        .iter()
        .filter(|r| r.dim == 0 && r.p < data.prime_bound)
        .map(|r| r.p)
        .collect();
    report.check(
        group,
        "A+_equals_jacobi_zero".into(),
        list(&jacobi_zero),
        Ok(list(&found_plus)),
    );
    Ok(())
}

#[derive(Deserialize)]
struct TallyRow {
    poly: String,
    family: String,
    count: usize,
}

/// Highest `f2` in the trace comparison; `f1 - f2` runs over `{0, 2, 4}`.
pub const QUATERNION_TRACE_BOUND: i64 = 40;

fn run_quaternion(report: &mut Report, entry: &ManifestEntry, text: &str) -> Result<()> {
    let group = "quaternion";
    let p = entry
        .p
        .ok_or_else(|| data_err(&entry.name, "quaternion entry needs `p`"))?;
    let rows: Vec<TallyRow> = read_csv(&entry.name, text)?;
    let enumeration = match enumerate_pi_gamma(p) {
        Ok(e) => e,
        Err(e) => {
            report.fail(group, format!("p{p}/enumerate"), e);
            return Ok(());
        }
    };
    let by_name = |tally: &BTreeMap<crate::quaternion::IntPrincipalPoly, usize>| -> BTreeMap<String, usize> {
        tally.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    };
    let total = by_name(&enumeration.total_tally());
    let mut sizes: BTreeMap<String, usize> = BTreeMap::new();
    for r in rows {
        let actual = if r.family == "total" {
            total.get(&r.poly).copied().unwrap_or(0)
        } else {
            match enumeration.family(&r.family) {
                Some(f) => by_name(&f.tally).get(&r.poly).copied().unwrap_or(0),
                None => {
                    report.fail(
                        group,
                        format!("p{p}/{}", r.family),
                        Error::Data("no such family".into()),
                    );
                    continue;
                }
            }
        };
        *sizes.entry(r.family.clone()).or_insert(0) += r.count;
        report.check(group, format!("p{p}/({})/{}", r.family, r.poly), r.count, Ok(actual));
    }
    for (family, expected) in sizes {
        let actual = if family == "total" {
            Some(enumeration.order())
        } else {
            enumeration.family(&family).map(|f| f.tally.values().sum())
        };
        report.check(
            group,
            format!("p{p}/({family})/size"),
            expected,
            actual.ok_or(Error::Data("no such family".into())),
        );
    }
    for shift in [0, 2, 4] {
        let mismatches: Result<Vec<String>> = (0..=QUATERNION_TRACE_BOUND)
            .filter_map(|f| {
                let quat = verify_trace_p23(p, f + shift, f);
                let formula = trace_r(p, f + shift, f);
                match (quat, formula) {
                    (Ok(a), Ok(b)) if a == b => None,
                    (Ok(a), Ok(b)) => Some(Ok(format!("({},{f}):{a}!={b}", f + shift))),
                    (Err(e), _) | (_, Err(e)) => Some(Err(e)),
                }
            })
            .collect();
        report.check(
            group,
            format!("p{p}/trace/f1=f2+{shift},f2<={QUATERNION_TRACE_BOUND}"),
            "agree".to_string(),
            mismatches.map(|m| if m.is_empty() { "agree".to_string() } else { m.join(" ") }),
        );
    }
    Ok(())
}
