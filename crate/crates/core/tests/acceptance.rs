//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use paradim::arith::primes_up_to;
use paradim::characters::{chi_closed, chi_closed_young, chi_series, principal_poly, WeightParams};
use paradim::compact::{trace_r, CompactFormula};
use paradim::corpus::{self, DataSource, Item, Report, Status};
use paradim::elliptic::{dim_cusp_level1, dim_new_gamma0, dim_new_gamma0_signed, ALSign};
use paradim::paramodular::{search_weight3_zero, ParamodularFormula};
use paradim::quaternion::{enumerate_pi_gamma, verify_trace_p23};
use paradim::siegel1::dim_cusp_sp4;

struct Fail(String);

impl From<paradim::Error> for Fail {
    fn from(e: paradim::Error) -> Self {
        Fail(e.to_string())
    }
}

impl From<&str> for Fail {
    fn from(msg: &str) -> Self {
        Fail(msg.to_string())
    }
}

type Check = Result<String, Fail>;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), Fail> {
    if cond {
        Ok(())
    } else {
        Err(Fail(msg()))
    }
}

fn items_pass<'a>(items: impl Iterator<Item = &'a Item>, what: &str) -> Check {
    let items: Vec<&Item> = items.collect();
    require(!items.is_empty(), || format!("no {what} items ran"))?;
    let failed: Vec<String> = items
        .iter()
        .filter(|i| i.status == Status::Fail)
        .map(|i| i.to_string())
        .collect();
    require(failed.is_empty(), || {
        format!(
            "{} of {} {what} items failed; first: {}",
            failed.len(),
            items.len(),
            failed[0]
        )
    })?;
    let notes = items.iter().filter(|i| i.status == Status::Note).count();
    Ok(if notes > 0 {
        format!("{} {what} items ({notes} reported, not asserted)", items.len())
    } else {
        format!("{} {what} items", items.len())
    })
}

fn table_items(report: &Report, k: i64) -> impl Iterator<Item = &Item> {
    let prefix = format!("k{k}/");
    report.group("tables").filter(move |i| i.id.starts_with(&prefix))
}

fn criterion_1(report: &Report) -> Check {
    let detail = items_pass(table_items(report, 4), "k=4")?;
    let started = Instant::now();
    let mut formulas: BTreeMap<u64, ParamodularFormula> = BTreeMap::new();
    for item in table_items(report, 4) {
        let mut parts = item.id.split('/').skip(1);
        let (p, row) = (parts.next().ok_or("bad id")?, parts.next().ok_or("bad id")?);
        let p: u64 = p
            .trim_start_matches('p')
            .parse()
            .map_err(|_| Fail(format!("bad id {}", item.id)))?;
        let formula = match formulas.entry(p) {
            std::collections::btree_map::Entry::Occupied(e) => e.into_mut(),
            std::collections::btree_map::Entry::Vacant(e) => e.insert(ParamodularFormula::new(p)?),
        };
        let value = corpus::table_value(formula, 4, row)?;
        require(value.to_string() == item.expected, || {
            format!("{}: {value} vs {}", item.id, item.expected)
        })?;
    }
    let elapsed = started.elapsed();
    let expected: Vec<u64> = primes_up_to(607).into_iter().filter(|&p| p >= 7).collect();
    require(formulas.keys().copied().eq(expected.iter().copied()), || {
        format!("{} columns", formulas.len())
    })?;
    require(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{detail} over all {} primes 7..607 in {elapsed:?}",
        formulas.len()
    ))
}

fn criterion_2(report: &Report) -> Check {
    let mut parts = Vec::new();
    for k in [5, 6, 7, 8, 10] {
        parts.push(items_pass(table_items(report, k), &format!("k={k}"))?);
    }
    let f = ParamodularFormula::new(277)?;
    let d = f.signed(8, 0)?;
    require((d.plus, d.minus) == (1761, 768), || {
        format!("S_8(K(277)) = ({}, {})", d.plus, d.minus)
    })?;
    Ok(format!("{}; S_8^+-(K(277)) = 1761/768", parts.join(", ")))
}

fn criterion_3(report: &Report) -> Check {
    let detail = items_pass(report.group("series"), "series")?;
    let p23 = report
        .group("series")
        .find(|i| i.id.ends_with("p23_plus/fit_palindromic"))
        .ok_or("P+ at level 23 not checked")?;
    require(p23.status == Status::Pass, || p23.to_string())?;
    Ok(detail)
}

fn criterion_4(report: &Report) -> Check {
    let started = Instant::now();
    let zeros = search_weight3_zero(3500)?;
    let elapsed = started.elapsed();
    let mut expected = primes_up_to(163);
    expected.extend([179, 181, 191, 193, 199, 211, 229, 241]);
    require(zeros == expected, || format!("zero set {zeros:?}"))?;
    require(elapsed < Duration::from_secs(5), || format!("search took {elapsed:?}"))?;
    let detail = items_pass(report.group("weight3"), "weight-3")?;
    Ok(format!("{} zero primes in {elapsed:?}; {detail}", zeros.len()))
}

fn criterion_5(report: &Report) -> Check {
    let printed = [
        (2, 3),
        (2, 4),
        (2, 5),
        (2, 6),
        (2, 7),
        (2, 9),
        (2, 13),
        (3, 3),
        (3, 4),
        (3, 5),
        (3, 7),
        (5, 3),
        (5, 4),
        (7, 3),
        (11, 3),
    ];
    let zeros = paradim::paramodular::check_bias_region(500, 120)?;
    let within: Vec<(u64, i64)> = zeros.iter().copied().filter(|&(p, k)| p <= 300 && k <= 100).collect();
    require(within == printed, || format!("zero set {within:?}"))?;
    let detail = items_pass(report.group("bias"), "bias")?;
    Ok(format!(
        "nonnegative on p<=500, k<=120; {} zeros match; {detail}",
        within.len()
    ))
}

fn criterion_6(report: &Report) -> Check {
    let mut plus_ring = vec![2, 3, 5, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71];
    plus_ring.push(7);
    plus_ring.sort_unstable();
    let mut found = Vec::new();
    for p in primes_up_to(99) {
        let f = ParamodularFormula::new(p)?;
        if corpus::palindromic(&f, paradim::paramodular::Space::APlus)? {
            found.push(p);
        }
    }
    require(found == plus_ring, || format!("A+ palindromic at {found:?}"))?;
    let jacobi_zero: Vec<u64> = primes_up_to(99)
        .into_iter()
        .filter(|&p| paradim::paramodular::jacobi_j2(p) == Ok(0))
        .collect();
    require(jacobi_zero == plus_ring, || format!("J_2,p = 0 at {jacobi_zero:?}"))?;
    items_pass(report.group("palindromic"), "palindromic")
}

fn criterion_7(report: &Report) -> Check {
    let sizes = |p: u64| -> Result<BTreeMap<String, usize>, Fail> {
        let e = enumerate_pi_gamma(p)?;
        Ok(e.families.iter().map(|f| (f.name.clone(), f.size)).collect())
    };
    let two = sizes(2)?;
    let want_two: BTreeMap<String, usize> = [("1", 192), ("2", 192), ("3", 192), ("4", 192), ("5", 1152)]
        .map(|(k, v)| (k.to_string(), v))
        .into();
    require(two == want_two, || format!("level 2 family sizes {two:?}"))?;
    let three = sizes(3)?;
    let want_three: BTreeMap<String, usize> = [("1", 36), ("2", 36), ("3", 324), ("4", 324)]
        .map(|(k, v)| (k.to_string(), v))
        .into();
    require(three == want_three, || format!("level 3 family sizes {three:?}"))?;

    let e2 = enumerate_pi_gamma(2)?;
    let mut fam4: Vec<usize> = e2
        .family("4")
        .ok_or("no family 4")?
        .tally
        .values()
        .copied()
        .filter(|&c| c > 0)
        .collect();
    fam4.sort_unstable_by(|a, b| b.cmp(a));
    require(fam4 == [144, 24, 24], || format!("family (4) tallies {fam4:?}"))?;

    let mut compared = 0;
    for p in [2, 3] {
        for f in 0..=40 {
            for shift in [0, 2, 4] {
                let (a, b) = (verify_trace_p23(p, f + shift, f)?, trace_r(p, f + shift, f)?);
                require(a == b, || format!("trace at p={p} ({},{f}): {a} vs {b}", f + shift))?;
                compared += 1;
            }
        }
    }
    let detail = items_pass(report.group("quaternion"), "table")?;
    Ok(format!(
        "family sizes and tallies match; {compared} traces agree; {detail}"
    ))
}

fn sweep() -> impl Iterator<Item = WeightParams> {
    (3..=60).flat_map(|k| (0..=60).step_by(2).map(move |j| WeightParams::new(k, j).unwrap()))
}

fn criterion_8() -> Check {
    let mut count = 0;
    for i in 1..=17 {
        let phi = principal_poly(i)?;
        let neg = phi.negated();
        for w in sweep() {
            let closed = chi_closed(i, w)?;
            let series = chi_series(i, w.f1(), w.f2())?;
            require(closed == series, || {
                format!("chi_{i} at (k={}, j={}): {closed} vs {series}", w.k, w.j)
            })?;
            let flipped = neg.character(w.f1(), w.f2())?;
            require(flipped == series, || format!("chi_{i}(-x) at (k={}, j={})", w.k, w.j))?;
            count += 1;
        }
    }
    for i in [2, 6, 9, 11, 13] {
        for w in sweep() {
            let (a, b) = (chi_closed_young(i, w.f1(), w.f2())?, chi_closed(i, w)?);
            require(a == b, || {
                format!("bracket tables differ for chi_{i} at (k={}, j={})", w.k, w.j)
            })?;
        }
    }
    Ok(format!("{count} closed/series pairs agree; bracket tables agree"))
}

fn criterion_9() -> Check {
    let mut checked = 0;
    for p in primes_up_to(300) {
        let formula = CompactFormula::new(p)?;
        for f1 in 0..=40 {
            for f2 in (f1 % 2..=f1).step_by(2) {
                let (total, trace) = (formula.total(f1, f2)?, formula.trace(f1, f2)?);
                require((total + trace) % 2 == 0, || {
                    format!("p={p} ({f1},{f2}): total {total} trace {trace}")
                })?;
                require(trace.abs() <= total, || {
                    format!("p={p} ({f1},{f2}): negative signed dimension")
                })?;
                checked += 1;
            }
        }
    }
    for p in primes_up_to(1000) {
        let formula = CompactFormula::new(p)?;
        let (h, tr) = (formula.total(0, 0)?, formula.trace(0, 0)?);
        require((h + tr) % 2 == 0, || format!("p={p}: H + trace odd"))?;
        let t = (h + tr) / 2;
        require(t <= h && h <= 2 * t, || format!("p={p}: H={h} T={t}"))?;
    }
    for p in primes_up_to(200) {
        for k in (2..=40).step_by(2) {
            let plus = dim_new_gamma0_signed(p, k, ALSign::Plus)?;
            let minus = dim_new_gamma0_signed(p, k, ALSign::Minus)?;
            let total = dim_new_gamma0(p, k)?;
            require(plus >= 0 && minus >= 0 && plus + minus == total, || {
                format!("S_{k}(Gamma0({p})) new: {plus}+{minus} vs {total}")
            })?;
        }
    }
    Ok(format!(
        "{checked} compact weights, H/T for p<=1000, newforms for p<=200"
    ))
}

fn criterion_10(report: &Report) -> Check {
    let vector = items_pass(
        report.group("series").filter(|i| i.id.starts_with("vector/")),
        "vector-valued series",
    )?;
    for p in [2u64, 3] {
        let f = ParamodularFormula::new(p)?;
        for k in 3..=60 {
            let level1 = dim_cusp_sp4(k, 2)?;
            let m = f.compact().signed(k - 1, k - 3)?;
            let s = f.signed(k, 2)?;
            require(s.plus == level1 + m.minus && s.minus == level1 + m.plus, || {
                format!("j=2 identity at p={p}, k={k}")
            })?;
            let level1 = dim_cusp_sp4(k, 4)?;
            let m = f.compact().signed(k + 1, k - 3)?;
            let s = f.signed(k, 4)?;
            let correction = if p == 3 { dim_cusp_level1(2 * k + 2) } else { 0 };
            require(s.total == 2 * level1 + m.total - correction, || {
                format!("j=4 identity at p={p}, k={k}")
            })?;
        }
    }
    Ok(format!(
        "{vector}; j=2,4 identities for k<=60 with the level-3 correction"
    ))
}

fn main() -> ExitCode {
    let started = Instant::now();
    let report = match corpus::verify(&DataSource::Embedded, None) {
        Ok(r) => r,
        Err(e) => {
            println!("FAIL corpus could not be loaded: {e}");
            return ExitCode::FAILURE;
        }
    };
    let criteria: [Criterion; 10] = [
        ("table k4 reproduction", Box::new(|| criterion_1(&report))),
        (
            "tables k5, k6, k7, k8, k10 reproduction",
            Box::new(|| criterion_2(&report)),
        ),
        ("generating-function corpus", Box::new(|| criterion_3(&report))),
        ("weight-3 vanishing search", Box::new(|| criterion_4(&report))),
        ("bias nonnegativity and zero set", Box::new(|| criterion_5(&report))),
        ("palindromic Hilbert series", Box::new(|| criterion_6(&report))),
        ("quaternion enumeration", Box::new(|| criterion_7(&report))),
        ("character oracle equivalence", Box::new(criterion_8)),
        ("structural invariants", Box::new(criterion_9)),
        ("vector-valued checks", Box::new(|| criterion_10(&report))),
    ];
    let mut failures = 0;
    for (n, (title, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {}: {title}: {detail}", n + 1),
            Err(Fail(msg)) => {
                failures += 1;
                println!("FAIL criterion {}: {title}: {msg}", n + 1);
            }
        }
    }
    println!("{} of 10 criteria passed in {:?}", 10 - failures, started.elapsed());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
