//! Command-line front end. Argument parsing lives here so it can be tested
//! without spawning a process; `src/bin/strongmin.rs` only forwards to
//! [`main_with_args`].

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bruhat::{demazure_report, smi_as_interval, words_json};
use crate::cartan::{Family, TypeLabel};
use crate::error::{Error, Result};
use crate::minuscule::{
    brute_force_strong_set, classify, classify_word, Classification, parity_profile, stembridge_violations,
};
use crate::reference::expected_strong_count;
use crate::products::{
    enumerate_quotient_products, enumerate_smi, enumerate_smi_closed_form, filter_quotient_strong,
    has_vi_suffix, verify_vi_catalog,
};
use crate::weyl::{
    format_word, parse_word, sort_canonically, ParabolicContext, WeylElement, WeylGroup,
    DEFAULT_BUDGET,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
    #[default]
    Pretty,
}

#[derive(Debug, Parser)]
#[command(name = "strongmin", version, about = "Strong minuscule elements of Weyl groups")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    pub format: Format,
    /// Largest group the full-group sweeps may enumerate.
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = parse_budget, global = true)]
    pub budget: u128,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

fn parse_budget(s: &str) -> std::result::Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("budget must be at least 1".into()),
        Ok(b) => Ok(b),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Classify the element given by a comma-separated word ("" is the identity).
    Classify { type_label: TypeLabel, word: String },
    /// List SM_i with a cross-check against an independent computation.
    Enumerate { type_label: TypeLabel, node: usize },
    /// Count SM_i for every short node of E6, E7, E8, F4 and G2.
    ExceptionalCounts,
    /// Demazure dimension for the minuscule weight at `node`.
    Demazure { type_label: TypeLabel, node: usize },
    /// Compare SM_i with the quotient interval above v_i.
    Interval { type_label: TypeLabel, node: usize },
    /// Run the invariant suite on every type of a family up to `max_rank`.
    Verify { family: String, max_rank: usize },
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub budget: u128,
    pub jobs: Option<usize>,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        RunConfig {
            command: cli.command,
            format: cli.format,
            budget: cli.budget,
            jobs: cli.jobs,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn report(stdout: String, ok: bool) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: if ok { EXIT_OK } else { EXIT_MISMATCH },
        }
    }

    fn failure(err: &Error) -> Self {
        let code = match err {
            Error::CountMismatch { .. } | Error::Invariant(_) => EXIT_MISMATCH,
            _ => EXIT_USAGE,
        };
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code,
        }
    }
}

/// Parse `args` (including the program name), run, and print. Returns the
/// process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let config = RunConfig::from(cli);
    if let Some(jobs) = config.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    }
    let out = run(&config);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

pub fn run(config: &RunConfig) -> Outcome {
    let result = match &config.command {
        Command::Classify { type_label, word } => cmd_classify(config, *type_label, word),
        Command::Enumerate { type_label, node } => cmd_enumerate(config, *type_label, *node),
        Command::ExceptionalCounts => cmd_exceptional_counts(config),
        Command::Demazure { type_label, node } => cmd_demazure(config, *type_label, *node),
        Command::Interval { type_label, node } => cmd_interval(config, *type_label, *node),
        Command::Verify { family, max_rank } => cmd_verify(config, family, *max_rank),
    };
    result.unwrap_or_else(|e| Outcome::failure(&e))
}

fn group_for(config: &RunConfig, label: TypeLabel) -> WeylGroup {
    WeylGroup::new(label).with_budget(config.budget)
}

fn node0(label: TypeLabel, node: usize) -> Result<usize> {
    if node == 0 || node > label.rank() {
        return Err(Error::NodeOutOfRange {
            node,
            label: label.to_string(),
        });
    }
    Ok(node - 1)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

pub fn cmd_classify(config: &RunConfig, label: TypeLabel, word: &str) -> Result<Outcome> {
    let group = group_for(config, label);
    let letters = parse_word(word)?;
    let class = classify_word(&group, &letters)?;
    let text = match config.format {
        Format::Json => to_json(&json!({
            "type": label,
            "word": format_word(&letters),
            "classification": class,
        })),
        Format::Tsv => {
            let mut row = class.status().to_string();
            if let Some(l) = class.strong_weight() {
                for c in &l.0 {
                    write!(row, "\t{c}").unwrap();
                }
            }
            row + "\n"
        }
        Format::Pretty => match class.strong_weight() {
            Some(l) => format!("{}  Λ_w = {l}\n", class.status()),
            None => format!("{}\n", class.status()),
        },
    };
    Ok(Outcome::report(text, true))
}

pub fn cmd_enumerate(config: &RunConfig, label: TypeLabel, node: usize) -> Result<Outcome> {
    let group = group_for(config, label);
    let i = node0(label, node)?;
    let mut elements = enumerate_smi(&group, i)?;
    let expected = expected_strong_count(label, i);
    let mut cross_check = expected == Some(elements.len() as u64);
    if label.family().is_classical() {
        let closed: HashSet<&WeylElement> = elements.iter().collect();
        let filtered = filter_quotient_strong(&group, i)?;
        cross_check &= filtered.len() == closed.len() && filtered.iter().all(|w| closed.contains(w));
    }
    sort_canonically(&group, &mut elements);
    let text = match config.format {
        Format::Json => to_json(&json!({
            "type": label,
            "node": node,
            "count": elements.len(),
            "expected": expected,
            "cross_check": cross_check,
            "elements": words_json(&group, &elements),
        })),
        Format::Tsv => {
            let mut s = String::new();
            for w in &elements {
                writeln!(s, "{}\t{}", w.length(), group.reduced_word(w)).unwrap();
            }
            s
        }
        Format::Pretty => {
            let mut s = format!("SM_{node} in {label}: {} elements\n", elements.len());
            for w in &elements {
                writeln!(s, "  {:>3}  {}", w.length(), group.reduced_word(w)).unwrap();
            }
            writeln!(s, "cross-check: {}", if cross_check { "ok" } else { "MISMATCH" }).unwrap();
            s
        }
    };
    Ok(Outcome::report(text, cross_check))
}

#[derive(Clone, Debug, Serialize)]
pub struct CountCell {
    #[serde(rename = "type")]
    pub label: TypeLabel,
    pub node: usize,
    pub count: u64,
    pub expected: Option<u64>,
    pub matches: bool,
}

/// Every populated cell of the exceptional count table, computed by
/// filtering the quotients.
pub fn exceptional_count_cells() -> Result<Vec<CountCell>> {
    let mut cells = Vec::new();
    for s in ["E6", "E7", "E8", "F4", "G2"] {
        let label: TypeLabel = s.parse()?;
        let group = WeylGroup::new(label);
        for &i in group.datum().short_nodes() {
            let count = filter_quotient_strong(&group, i)?.len() as u64;
            let expected = expected_strong_count(label, i);
            cells.push(CountCell {
                label,
                node: i + 1,
                count,
                expected,
                matches: expected == Some(count),
            });
        }
    }
    Ok(cells)
}

pub fn cmd_exceptional_counts(config: &RunConfig) -> Result<Outcome> {
    let cells = exceptional_count_cells()?;
    let ok = cells.iter().all(|c| c.matches);
    let text = match config.format {
        Format::Json => to_json(&cells),
        Format::Tsv => {
            let mut s = String::new();
            for c in &cells {
                let e = c.expected.map_or("-".to_string(), |e| e.to_string());
                writeln!(s, "{}\t{}\t{}\t{e}\t{}", c.label, c.node, c.count, c.matches as u8)
                    .unwrap();
            }
            s
        }
        Format::Pretty => {
            let labels: Vec<TypeLabel> = {
                let mut v: Vec<TypeLabel> = cells.iter().map(|c| c.label).collect();
                v.dedup();
                v
            };
            let by_cell: BTreeMap<(TypeLabel, usize), &CountCell> =
                cells.iter().map(|c| ((c.label, c.node), c)).collect();
            let mut s = String::from("  i");
            for l in &labels {
                write!(s, "{:>9}", l.to_string()).unwrap();
            }
            s.push('\n');
            for node in 1..=8 {
                write!(s, "{node:>3}").unwrap();
                for l in &labels {
                    let cell = match by_cell.get(&(*l, node)) {
                        Some(c) if c.matches => format!("{}", c.count),
                        Some(c) => format!("{}!", c.count),
                        None => String::new(),
                    };
                    write!(s, "{cell:>9}").unwrap();
                }
                s.push('\n');
            }
            let bad = cells.iter().filter(|c| !c.matches).count();
            writeln!(s, "{} cells, {bad} mismatches", cells.len()).unwrap();
            s
        }
    };
    Ok(Outcome::report(text, ok))
}

pub fn cmd_demazure(config: &RunConfig, label: TypeLabel, node: usize) -> Result<Outcome> {
    let group = group_for(config, label);
    let report = demazure_report(&group, node0(label, node)?)?;
    let text = match config.format {
        Format::Json => to_json(&report),
        Format::Tsv => format!(
            "{}\t{}\t{}\t{}\n",
            report.label,
            report.node,
            report.dim,
            report.expected.map_or("-".into(), |e| e.to_string())
        ),
        Format::Pretty => {
            let verdict = match report.expected {
                Some(e) if e == report.dim => format!("expected {e}: match"),
                Some(e) => format!("expected {e}: MISMATCH"),
                None => "no closed form recorded".into(),
            };
            format!("dim = {} ({verdict})\n", report.dim)
        }
    };
    Ok(Outcome::report(text, report.holds()))
}

pub fn cmd_interval(config: &RunConfig, label: TypeLabel, node: usize) -> Result<Outcome> {
    let group = group_for(config, label);
    let report = smi_as_interval(&group, node0(label, node)?)?;
    let text = match config.format {
        Format::Json => to_json(&report),
        Format::Tsv => format!(
            "{}\t{}\t{}\t{}\t{}\n",
            report.label,
            report.node,
            report.interval_size,
            report.smi_size,
            report.holds() as u8
        ),
        Format::Pretty => format!(
            "|[v_i, w_0^J]^J| = {}, |SM_i| = {}, relation {:?}, claim {:?}: {}\n",
            report.interval_size,
            report.smi_size,
            report.relation,
            report.claim,
            if report.holds() { "ok" } else { "MISMATCH" }
        ),
    };
    Ok(Outcome::report(text, report.holds()))
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    #[serde(rename = "type")]
    pub label: TypeLabel,
    pub check: &'static str,
    pub ok: bool,
    pub detail: String,
}

fn check(label: TypeLabel, name: &'static str, r: Result<String>) -> CheckResult {
    match r {
        Ok(detail) => CheckResult {
            label,
            check: name,
            ok: true,
            detail,
        },
        Err(e) => CheckResult {
            label,
            check: name,
            ok: false,
            detail: e.to_string(),
        },
    }
}

fn invariant(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Invariant(msg()))
    }
}

fn check_product_quotients(group: &WeylGroup) -> Result<String> {
    let mut total = 0;
    for i in 0..group.rank() {
        let ctx = ParabolicContext::new(group.datum(), i)?;
        let bfs: HashSet<WeylElement> = group.quotient_representatives(&ctx).into_iter().collect();
        let param = enumerate_quotient_products(group, i)?;
        let set: HashSet<&WeylElement> = param.iter().map(|p| &p.element).collect();
        invariant(
            set.len() == param.len() && set.len() == bfs.len() && bfs.iter().all(|w| set.contains(w)),
            || format!("product parametrization of W^J_{} differs from the quotient walk", i + 1),
        )?;
        total += param.len();
    }
    Ok(format!("{total} quotient elements over {} nodes", group.rank()))
}

fn check_smi(group: &WeylGroup) -> Result<String> {
    let mut parts = Vec::new();
    for &i in group.datum().short_nodes() {
        let filtered = filter_quotient_strong(group, i)?;
        if group.label().family().is_classical() {
            let closed = enumerate_smi_closed_form(group, i)?;
            let set: HashSet<&WeylElement> = closed.iter().map(|s| &s.element).collect();
            invariant(
                set.len() == filtered.len() && filtered.iter().all(|w| set.contains(w)),
                || format!("closed form of SM_{} differs from quotient filtering", i + 1),
            )?;
        }
        let expected = expected_strong_count(group.label(), i);
        invariant(expected == Some(filtered.len() as u64), || {
            format!("#SM_{} = {}, expected {expected:?}", i + 1, filtered.len())
        })?;
        for w in &filtered {
            let word = group.reduced_word(w);
            invariant(stembridge_violations(group.datum(), word.letters()).is_empty(), || {
                format!("neighbour-count constraint fails on {word}")
            })?;
            invariant(parity_profile(group, word.letters())?.holds(), || {
                format!("parity profile fails on {word}")
            })?;
        }
        parts.push(format!("SM_{}={}", i + 1, filtered.len()));
    }
    Ok(parts.join(" "))
}

fn check_full_sweep(group: &WeylGroup) -> Result<String> {
    let strong = brute_force_strong_set(group, false)?;
    let mut by_node: BTreeMap<usize, u64> = BTreeMap::new();
    for s in &strong {
        let node = s.weight.as_fundamental().ok_or_else(|| {
            Error::Invariant(format!(
                "{} is strong with non-fundamental weight {}",
                group.reduced_word(&s.element),
                s.weight
            ))
        })?;
        *by_node.entry(node).or_default() += 1;
        invariant(group.support(&s.element).iter().all(|&b| b), || {
            format!("{} is strong without full support", group.reduced_word(&s.element))
        })?;
    }
    for &i in group.datum().short_nodes() {
        let got = by_node.get(&i).copied().unwrap_or(0);
        invariant(expected_strong_count(group.label(), i) == Some(got), || {
            format!("full sweep finds {got} elements with weight Λ_{}", i + 1)
        })?;
    }
    invariant(by_node.keys().all(|&i| group.datum().is_short(i)), || {
        "a strong element has weight Λ_i with i outside K".into()
    })?;
    let all = group.enumerate_group()?;
    for w in &all {
        let class = classify(group, w);
        for &k in group.datum().short_nodes() {
            let lhs = class.strong_node() == Some(k);
            let rhs = class != Classification::NotMinuscule && has_vi_suffix(group, w, k)?;
            invariant(lhs == rhs, || {
                format!(
                    "v_{} suffix test disagrees with the classification of {}",
                    k + 1,
                    group.reduced_word(w)
                )
            })?;
        }
    }
    Ok(format!("{} elements, {} strong", all.len(), strong.len()))
}

/// The invariant suite for one type.
pub fn verify_type(group: &WeylGroup) -> Vec<CheckResult> {
    let label = group.label();
    let mut out = vec![check(label, "vi_catalog", verify_vi_catalog(group).map(|_| {
        format!("{} words", group.datum().short_nodes().len())
    }))];
    if label.family().is_classical() {
        out.push(check(label, "product_quotient", check_product_quotients(group)));
    }
    out.push(check(label, "smi", check_smi(group)));
    if group.order() <= group.budget() {
        out.push(check(label, "full_sweep", check_full_sweep(group)));
    } else {
        out.push(CheckResult {
            label,
            check: "full_sweep",
            ok: true,
            detail: format!("skipped: |W| = {} exceeds the budget", group.order()),
        });
    }
    out
}

fn family_arg(s: &str) -> Result<Family> {
    let letters: String = s.chars().take_while(|c| c.is_ascii_alphabetic()).collect();
    letters.parse()
}

pub fn cmd_verify(config: &RunConfig, family: &str, max_rank: usize) -> Result<Outcome> {
    let family = family_arg(family)?;
    let labels: Vec<TypeLabel> = (family.min_rank()..=max_rank)
        .filter(|&r| family.admits(r))
        .map(|r| TypeLabel::new(family, r))
        .collect::<Result<_>>()?;
    if labels.is_empty() {
        return Err(Error::InvalidRank {
            family: family.letter(),
            rank: max_rank,
        });
    }
    let results: Vec<CheckResult> = labels
        .iter()
        .flat_map(|&l| verify_type(&group_for(config, l)))
        .collect();
    let ok = results.iter().all(|r| r.ok);
    let text = match config.format {
        Format::Json => to_json(&json!({ "ok": ok, "checks": results })),
        Format::Tsv => {
            let mut s = String::new();
            for r in &results {
                writeln!(s, "{}\t{}\t{}\t{}", r.label, r.check, r.ok as u8, r.detail).unwrap();
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            for r in &results {
                let tag = if r.ok { "PASS" } else { "FAIL" };
                writeln!(s, "{tag}  {:<4} {:<16} {}", r.label.to_string(), r.check, r.detail)
                    .unwrap();
            }
            let failed = results.iter().filter(|r| !r.ok).count();
            writeln!(s, "{} checks, {failed} failed", results.len()).unwrap();
            s
        }
    };
    Ok(Outcome::report(text, ok))
}
