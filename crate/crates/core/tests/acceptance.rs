//! Acceptance run: one PASS/FAIL line per criterion, all comparisons exact.
//!
//! A criterion fails whenever any of its cells disagrees with the expected
//! value. Cells where the expected value itself contradicts the enumerated
//! counts are tagged `known` in the listing; the process exits nonzero only
//! when some failure is not one of those.

use std::collections::{BTreeMap, HashSet};
use std::process::ExitCode;
use std::time::Instant;

use std::cell::Cell;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use rayon::prelude::*;

use strongmin::bruhat::{bar_involution, bruhat_leq, demazure_report, smi_as_interval};
use strongmin::cli::exceptional_count_cells;
use strongmin::minuscule::{
    brute_force_strong_set, classify, classify_word, parity_profile, solve_word,
    stembridge_violations, Classification,
};
use strongmin::reference::{expected_strong_count, interval_characterization};
use strongmin::products::{
    enumerate_quotient_products, enumerate_smi_closed_form, filter_quotient_strong, has_vi_suffix,
    vi_element,
};
use strongmin::weyl::{braid_moves, parse_word, ParabolicContext, WeylElement, WeylGroup};
use strongmin::{Family, TypeLabel};

struct Failure {
    what: String,
    known: bool,
}

struct Criterion {
    id: u32,
    title: &'static str,
    detail: String,
    failures: Vec<Failure>,
}

impl Criterion {
    fn new(id: u32, title: &'static str) -> Self {
        Criterion {
            id,
            title,
            detail: String::new(),
            failures: Vec::new(),
        }
    }

    fn fail(&mut self, what: impl Into<String>) {
        self.failures.push(Failure {
            what: what.into(),
            known: false,
        });
    }

    fn fail_known(&mut self, what: impl Into<String>) {
        self.failures.push(Failure {
            what: what.into(),
            known: true,
        });
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.fail(what());
        }
    }
}

fn labels(family: Family, ranks: std::ops::RangeInclusive<usize>) -> Vec<TypeLabel> {
    ranks
        .filter(|&r| family.admits(r))
        .map(|r| TypeLabel::new(family, r).unwrap())
        .collect()
}

fn classical(max: [usize; 4]) -> Vec<TypeLabel> {
    let fams = [Family::A, Family::B, Family::C, Family::D];
    fams.iter()
        .zip(max)
        .flat_map(|(&f, m)| labels(f, 1..=m))
        .collect()
}

fn exceptional() -> Vec<TypeLabel> {
    ["E6", "E7", "E8", "F4", "G2"].iter().map(|s| s.parse().unwrap()).collect()
}

/// For C_n and D_n at node n the enumerated count (n, resp. n-1) and the
/// claimed "interval minus its top" description cannot both hold: the
/// quotient above v_n has exactly that many elements and its top is one of
/// them. Claims built on the exclusion inherit the discrepancy.
fn top_exclusion_cell(label: TypeLabel, node: usize) -> bool {
    matches!(label.family(), Family::C | Family::D) && node == label.rank() - 1
}

fn group(label: TypeLabel) -> WeylGroup {
    WeylGroup::new(label)
}

/// Strong elements found by full sweeps, kept for the property suite.
#[derive(Default)]
struct Found {
    strong: Vec<(TypeLabel, WeylElement)>,
}

fn criterion_1() -> Criterion {
    let mut c = Criterion::new(1, "exceptional counts by quotient filtering");
    let cells = exceptional_count_cells().expect("exceptional count table");
    c.check(cells.len() == 24, || format!("{} cells instead of 24", cells.len()));
    for cell in &cells {
        c.check(cell.matches, || {
            format!(
                "{} i={}: {} vs expected {:?}",
                cell.label, cell.node, cell.count, cell.expected
            )
        });
    }
    let mut cols: BTreeMap<String, Vec<u64>> = BTreeMap::new();
    for cell in &cells {
        cols.entry(cell.label.to_string()).or_default().push(cell.count);
    }
    c.detail = cols
        .iter()
        .map(|(k, v)| format!("{k}: {v:?}"))
        .collect::<Vec<_>>()
        .join("; ");
    c
}

fn criterion_2(found: &mut Found) -> Criterion {
    let mut c = Criterion::new(2, "classical closed forms, ranks 2-8");
    let mut closed_cells = 0;
    let mut swept = Vec::new();
    for label in classical([8, 8, 8, 8]) {
        if label.rank() < 2 {
            continue;
        }
        let g = group(label);
        for &i in g.datum().short_nodes() {
            let expected = expected_strong_count(label, i);
            match enumerate_smi_closed_form(&g, i) {
                Ok(sm) => c.check(expected == Some(sm.len() as u64), || {
                    format!("{label} i={}: closed form gives {}, expected {expected:?}", i + 1, sm.len())
                }),
                Err(e) => c.fail(format!("{label} i={}: {e}", i + 1)),
            }
            closed_cells += 1;
        }
        if g.order() > 1_000_000 {
            continue;
        }
        let strong = brute_force_strong_set(&g, false).expect("within budget");
        let mut by_node: BTreeMap<usize, u64> = BTreeMap::new();
        for s in &strong {
            match s.weight.as_fundamental() {
                Some(k) => *by_node.entry(k).or_default() += 1,
                None => c.fail(format!("{label}: strong weight {} is not fundamental", s.weight)),
            }
        }
        for (&k, &n) in &by_node {
            c.check(expected_strong_count(label, k) == Some(n), || {
                format!("{label} i={}: sweep finds {n}, expected {:?}", k + 1, expected_strong_count(label, k))
            });
        }
        for &i in g.datum().short_nodes() {
            c.check(by_node.contains_key(&i), || format!("{label} i={}: sweep finds none", i + 1));
        }
        found
            .strong
            .extend(strong.into_iter().map(|s| (label, s.element)));
        swept.push(label.to_string());
    }
    c.detail = format!(
        "{closed_cells} closed-form cells; full sweeps over {}",
        swept.join(",")
    );
    c
}

fn criterion_3() -> Criterion {
    let mut c = Criterion::new(3, "strong with weight Λ_k iff minuscule with right factor v_k");
    let mut types = classical([8, 8, 8, 8]);
    types.extend(exceptional());
    types.retain(|l| l.weyl_group_order() <= 100_000);
    let mut elements = 0usize;
    for label in &types {
        let g = group(*label);
        let all = g.enumerate_group().unwrap();
        elements += all.len();
        let bad: Vec<String> = all
            .par_iter()
            .flat_map_iter(|w| {
                let class = classify(&g, w);
                let mut out = Vec::new();
                for &k in g.datum().short_nodes() {
                    let lhs = class.strong_node() == Some(k);
                    let rhs = class != Classification::NotMinuscule
                        && has_vi_suffix(&g, w, k).unwrap();
                    if lhs != rhs {
                        out.push(format!("{label} k={} w={}", k + 1, g.reduced_word(w)));
                    }
                }
                out
            })
            .collect();
        for b in bad.into_iter().take(5) {
            c.fail(b);
        }
    }
    c.detail = format!("{} types, {elements} elements", types.len());
    c
}

fn criterion_4() -> Criterion {
    let mut c = Criterion::new(4, "SM_i as a quotient interval above v_i");
    let mut pairs: Vec<(TypeLabel, usize)> = Vec::new();
    for label in classical([6, 6, 6, 6]) {
        for i in 0..label.rank() {
            pairs.push((label, i));
        }
    }
    pairs.push(("E6".parse().unwrap(), 0));
    pairs.push(("E6".parse().unwrap(), 4));
    pairs.push(("E7".parse().unwrap(), 5));
    let mut checked = 0;
    let mut uncharacterized = 0;
    for (label, i) in pairs {
        if interval_characterization(label, i).is_none() {
            if group(label).datum().is_short(i) {
                uncharacterized += 1;
            }
            continue;
        }
        let r = smi_as_interval(&group(label), i).unwrap();
        checked += 1;
        if !r.holds() {
            let what = format!(
                "{label} i={}: claim {:?}, computed {:?} (|interval| = {}, |SM_i| = {})",
                i + 1,
                r.claim,
                r.relation,
                r.interval_size,
                r.smi_size
            );
            if top_exclusion_cell(label, i) {
                c.fail_known(what);
            } else {
                c.fail(what);
            }
        }
    }
    c.detail = format!("{checked} claimed pairs checked, {uncharacterized} short nodes without a claim");
    c
}

fn criterion_5() -> Criterion {
    let mut c = Criterion::new(5, "Demazure dimensions via bar(v_i)");
    let mut pairs: Vec<(TypeLabel, usize)> = Vec::new();
    for l in labels(Family::A, 2..=7) {
        pairs.extend((0..l.rank()).map(|i| (l, i)));
    }
    for l in labels(Family::B, 2..=6) {
        pairs.push((l, 0));
    }
    for l in labels(Family::C, 3..=6) {
        pairs.push((l, l.rank() - 1));
    }
    for l in labels(Family::D, 4..=6) {
        pairs.extend([(l, 0), (l, 1), (l, l.rank() - 1)]);
    }
    pairs.push(("E6".parse().unwrap(), 0));
    pairs.push(("E6".parse().unwrap(), 4));
    pairs.push(("E7".parse().unwrap(), 5));
    for &(label, i) in &pairs {
        let r = demazure_report(&group(label), i).unwrap();
        if r.expected.is_none() || !r.holds() {
            let what = format!("{label} i={}: dim {}, expected {:?}", i + 1, r.dim, r.expected);
            if top_exclusion_cell(label, i) {
                c.fail_known(what);
            } else {
                c.fail(what);
            }
        }
    }
    c.detail = format!("{} (type, i) pairs", pairs.len());
    c
}

fn criterion_6() -> Criterion {
    let mut c = Criterion::new(6, "A4 element s_2 v_3 lies in the interval but not the quotient");
    let g = group("A4".parse().unwrap());
    let ctx = ParabolicContext::new(g.datum(), 2).unwrap();
    let v3 = vi_element(&g, 2).unwrap();
    let x = g.mul_gen_left(&v3, 1);
    let word = parse_word("2,1,2,4,3").unwrap();
    c.check(g.evaluate(&word).unwrap() == x, || "s_2 v_3 != s2 s1 s2 s4 s3".into());
    c.check(x.length() == 5, || format!("length {}", x.length()));
    c.check(bruhat_leq(&g, &v3, &x), || "v_3 <= s_2 v_3 fails".into());
    c.check(bruhat_leq(&g, &x, &g.longest_quotient(&ctx)), || {
        "s_2 v_3 <= w_0^J fails".into()
    });
    c.check(!ctx.is_minimal_representative(&x), || "s_2 v_3 is in W^J".into());
    let class = classify_word(&g, &word).unwrap();
    c.check(class == Classification::NotMinuscule, || format!("classified {}", class.status()));
    c.detail = format!("classify = {}", class.status());
    c
}

fn braid_independence(c: &mut Criterion) -> usize {
    let types: Vec<TypeLabel> = ["A5", "B4", "C4", "D5", "E6", "F4", "G2"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let groups: Vec<WeylGroup> = types.iter().map(|&l| group(l)).collect();
    let mut runner = TestRunner::new_with_rng(
        Config {
            cases: 512,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    );
    let strategy = (0..groups.len(), prop::collection::vec(0usize..8, 0..40), prop::collection::vec(any::<prop::sample::Index>(), 1..12));
    let words_checked = Cell::new(0usize);
    let result = runner.run(&strategy, |(t, raw, picks)| {
        let g = &groups[t];
        let raw: Vec<usize> = raw.into_iter().filter(|&k| k < g.rank()).collect();
        let mut word = g.reduce(&raw).unwrap().into_letters();
        // Forced coefficients carry no meaning once the system is
        // inconsistent, so only the consistent case compares them.
        let solution = |word: &[usize]| {
            let s = solve_word(g.datum(), word);
            s.consistent.then_some((s.forced, s.free_nodes))
        };
        let base_sol = solution(&word);
        let base_class = classify_word(g, &word).unwrap();
        for pick in picks {
            let moves = braid_moves(g.datum(), &word);
            if moves.is_empty() {
                break;
            }
            word = moves[pick.index(moves.len())].clone();
            words_checked.set(words_checked.get() + 1);
            prop_assert_eq!(&solution(&word), &base_sol);
            prop_assert_eq!(&classify_word(g, &word).unwrap(), &base_class);
        }
        Ok(())
    });
    if let Err(e) = result {
        c.fail(format!("braid-move word independence: {e}"));
    }
    words_checked.get()
}

fn criterion_7(found: &Found) -> Criterion {
    let mut c = Criterion::new(7, "property suites");
    let words = braid_independence(&mut c);

    for (label, w) in &found.strong {
        let g = group(*label);
        c.check(g.support(w).iter().all(|&b| b), || {
            format!("{label}: {} lacks full support", g.reduced_word(w))
        });
    }

    let mut sm_elements = 0;
    let mut quotient_elements = 0;
    let mut all_sm: Vec<(TypeLabel, Vec<WeylElement>)> = Vec::new();
    for label in classical([8, 8, 8, 8]) {
        let g = group(label);
        for i in 0..label.rank() {
            match enumerate_quotient_products(&g, i) {
                Ok(q) => quotient_elements += q.len(),
                Err(e) => c.fail(format!("{label} i={}: {e}", i + 1)),
            }
        }
        for &i in g.datum().short_nodes() {
            match enumerate_smi_closed_form(&g, i) {
                Ok(sm) => all_sm.push((label, sm.into_iter().map(|s| s.element).collect())),
                Err(e) => c.fail(format!("{label} i={}: {e}", i + 1)),
            }
        }
    }
    for label in exceptional() {
        let g = group(label);
        for &i in g.datum().short_nodes() {
            all_sm.push((label, filter_quotient_strong(&g, i).unwrap()));
        }
    }
    for (label, elements) in &all_sm {
        let g = group(*label);
        for w in elements {
            sm_elements += 1;
            let word = g.reduced_word(w);
            c.check(g.support(w).iter().all(|&b| b), || format!("{label}: {word} lacks full support"));
            c.check(stembridge_violations(g.datum(), word.letters()).is_empty(), || {
                format!("{label}: neighbour constraint fails on {word}")
            });
            match parity_profile(&g, word.letters()) {
                Ok(p) => c.check(p.holds(), || format!("{label}: parity fails on {word}")),
                Err(e) => c.fail(format!("{label}: {word}: {e}")),
            }
        }
    }

    let mut bar_pairs = 0usize;
    for s in ["A3", "B3", "D4"] {
        let g = group(s.parse().unwrap());
        for i in 0..g.rank() {
            let ctx = ParabolicContext::new(g.datum(), i).unwrap();
            let q = g.quotient_representatives(&ctx);
            let bars: Vec<WeylElement> = q.iter().map(|x| bar_involution(&g, &ctx, x).unwrap()).collect();
            let distinct: HashSet<&WeylElement> = bars.iter().collect();
            c.check(distinct.len() == q.len(), || format!("{s} i={}: bar is not a bijection", i + 1));
            for (x, bx) in q.iter().zip(&bars) {
                for (y, by) in q.iter().zip(&bars) {
                    bar_pairs += 1;
                    c.check(bruhat_leq(&g, x, y) == bruhat_leq(&g, by, bx), || {
                        format!("{s} i={}: bar fails to reverse {} vs {}", i + 1, g.reduced_word(x), g.reduced_word(y))
                    });
                }
            }
        }
    }

    c.detail = format!(
        "{words} braid-moved words, {} swept strong elements, {sm_elements} SM elements, \
         {quotient_elements} product-form quotient elements, {bar_pairs} bar pairs",
        found.strong.len()
    );
    c
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut found = Found::default();
    let results = vec![
        criterion_1(),
        criterion_2(&mut found),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(&found),
    ];
    let mut unexpected = 0;
    for r in &results {
        let verdict = if r.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {} {verdict}: {} [{}]", r.id, r.title, r.detail);
        for f in &r.failures {
            let tag = if f.known { "known" } else { "unexpected" };
            println!("    {tag}: {}", f.what);
            unexpected += usize::from(!f.known);
        }
    }
    println!(
        "acceptance finished in {:.1}s, {unexpected} unexpected failures",
        start.elapsed().as_secs_f64()
    );
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
