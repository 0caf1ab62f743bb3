//! Minuscule, dominant minuscule and strong minuscule elements.
//!
//! For a reduced word `i_1 ... i_r`, `w` is `Lambda`-minuscule when
//! `<s_{i_{p+1}} ... s_{i_r}(Lambda), alpha_{i_p}^vee> = 1` for every `p`.
//! While the condition holds each reflection subtracts exactly one simple
//! root, so position `p` reads `c_{i_p} = 1 + sum_{q > p} a_{i_p, i_q}` and
//! the whole system can be solved in one right-to-left pass: the last
//! occurrence of each node fixes its coefficient, earlier occurrences only
//! check it, and nodes outside the support stay free.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cartan::{CartanDatum, Weight};
use crate::error::{Error, Result};
use crate::weyl::{format_word, WeylElement, WeylGroup};

/// All integral weights making an element minuscule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinusculeSolutionSet {
    /// Whether any integral weight works at all.
    pub consistent: bool,
    /// Coefficients forced on the support, zero elsewhere. Only meaningful
    /// when `consistent`.
    pub forced: Weight,
    /// Nodes outside the support; their coefficients are arbitrary.
    pub free_nodes: Vec<usize>,
}

impl MinusculeSolutionSet {
    pub fn is_dominant_minuscule(&self) -> bool {
        self.consistent && self.forced.is_dominant()
    }

    pub fn is_strong(&self) -> bool {
        self.is_dominant_minuscule() && self.free_nodes.is_empty()
    }

    /// Whether `weight` belongs to the solution set.
    pub fn contains(&self, weight: &Weight) -> bool {
        self.consistent
            && weight
                .0
                .iter()
                .enumerate()
                .all(|(j, &c)| self.free_nodes.contains(&j) || c == self.forced.0[j])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    NotMinuscule,
    MinusculeNotDominant,
    DominantNotStrong,
    /// Carries the unique dominant weight `Lambda_w`.
    Strong(Weight),
}

impl Classification {
    pub fn status(&self) -> &'static str {
        match self {
            Classification::NotMinuscule => "NotMinuscule",
            Classification::MinusculeNotDominant => "MinusculeNotDominant",
            Classification::DominantNotStrong => "DominantNotStrong",
            Classification::Strong(_) => "Strong",
        }
    }

    pub fn strong_weight(&self) -> Option<&Weight> {
        match self {
            Classification::Strong(w) => Some(w),
            _ => None,
        }
    }

    /// Node `i` when this is `Strong(Lambda_i)`.
    pub fn strong_node(&self) -> Option<usize> {
        self.strong_weight().and_then(Weight::as_fundamental)
    }

    pub fn is_dominant_minuscule(&self) -> bool {
        matches!(
            self,
            Classification::DominantNotStrong | Classification::Strong(_)
        )
    }
}

impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let lambda = self.strong_weight();
        let mut st = s.serialize_struct("Classification", if lambda.is_some() { 2 } else { 1 })?;
        st.serialize_field("status", self.status())?;
        if let Some(l) = lambda {
            st.serialize_field("lambda", &l.0)?;
        }
        st.end()
    }
}

fn require_reduced(group: &WeylGroup, letters: &[usize]) -> Result<()> {
    let w = group.evaluate(letters)?;
    if w.length() != letters.len() {
        return Err(Error::NotReduced {
            word: format_word(letters),
            length: w.length(),
        });
    }
    Ok(())
}

/// Checks the minuscule condition along `letters` by direct reflection.
/// Non-reduced words are rejected.
pub fn is_lambda_minuscule(group: &WeylGroup, letters: &[usize], lambda: &Weight) -> Result<bool> {
    if lambda.rank() != group.rank() {
        return Err(Error::RankMismatch {
            expected: group.rank(),
            got: lambda.rank(),
        });
    }
    require_reduced(group, letters)?;
    Ok(minuscule_along(group.datum(), letters, lambda))
}

fn minuscule_along(datum: &CartanDatum, letters: &[usize], lambda: &Weight) -> bool {
    let mut running = lambda.clone();
    for &j in letters.iter().rev() {
        if running.pairing(j) != 1 {
            return false;
        }
        datum.reflect_weight(j, &mut running);
    }
    true
}

/// Solve the minuscule condition along a word assumed to be reduced.
pub fn solve_word(datum: &CartanDatum, letters: &[usize]) -> MinusculeSolutionSet {
    let n = datum.rank();
    let mut count = vec![0i64; n];
    let mut forced: Vec<Option<i64>> = vec![None; n];
    let mut consistent = true;
    for &j in letters.iter().rev() {
        let need = 1 + (0..n)
            .filter(|&k| count[k] != 0)
            .map(|k| datum.a(j, k) * count[k])
            .sum::<i64>();
        match forced[j] {
            None => forced[j] = Some(need),
            Some(v) if v != need => {
                consistent = false;
                break;
            }
            Some(_) => {}
        }
        count[j] += 1;
    }
    let mut support = vec![false; n];
    for &j in letters {
        support[j] = true;
    }
    MinusculeSolutionSet {
        consistent,
        forced: Weight(forced.iter().map(|c| c.unwrap_or(0)).collect()),
        free_nodes: (0..n).filter(|&j| !support[j]).collect(),
    }
}

pub fn solve_minuscule_weights(group: &WeylGroup, w: &WeylElement) -> MinusculeSolutionSet {
    solve_word(group.datum(), group.reduced_word(w).letters())
}

pub fn classify_solution(sol: &MinusculeSolutionSet) -> Classification {
    if !sol.consistent {
        Classification::NotMinuscule
    } else if !sol.forced.is_dominant() {
        Classification::MinusculeNotDominant
    } else if !sol.free_nodes.is_empty() {
        Classification::DominantNotStrong
    } else {
        Classification::Strong(sol.forced.clone())
    }
}

pub fn classify(group: &WeylGroup, w: &WeylElement) -> Classification {
    classify_solution(&solve_minuscule_weights(group, w))
}

/// Classify the element spelled by `letters`, which must be reduced.
pub fn classify_word(group: &WeylGroup, letters: &[usize]) -> Result<Classification> {
    require_reduced(group, letters)?;
    Ok(classify_solution(&solve_word(group.datum(), letters)))
}

/// Number of dominant weights with every coordinate in `0..=bound` for which
/// `letters` satisfies the minuscule condition, found by testing each one.
pub fn dominant_solutions_in_box(datum: &CartanDatum, letters: &[usize], bound: i64) -> usize {
    let n = datum.rank();
    let mut lambda = Weight::zero(n);
    let mut hits = 0;
    loop {
        if minuscule_along(datum, letters, &lambda) {
            hits += 1;
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == n {
                return hits;
            }
            if lambda.0[k] < bound {
                lambda.0[k] += 1;
                break;
            }
            lambda.0[k] = 0;
            k += 1;
        }
    }
}

/// Verdict of the box search: no dominant solution, exactly one, or several.
/// The box `0..=max(2 l(w), 1)` contains every forced coefficient and at
/// least two values for each free one.
pub fn box_oracle_agrees(group: &WeylGroup, w: &WeylElement, verdict: &Classification) -> bool {
    let word = group.reduced_word(w);
    let bound = (2 * word.len() as i64).max(1);
    let hits = dominant_solutions_in_box(group.datum(), word.letters(), bound);
    match verdict {
        Classification::NotMinuscule | Classification::MinusculeNotDominant => hits == 0,
        Classification::Strong(_) => hits == 1,
        Classification::DominantNotStrong => hits > 1,
    }
}

#[derive(Clone, Debug)]
pub struct StrongElement {
    pub element: WeylElement,
    pub weight: Weight,
}

/// Every strong minuscule element of `W`, by a sweep over the whole group.
/// With `cross_check`, each verdict is also confirmed by the box search,
/// which costs `(2 l(w) + 1)^n` minuscule tests per element.
pub fn brute_force_strong_set(group: &WeylGroup, cross_check: bool) -> Result<Vec<StrongElement>> {
    use rayon::prelude::*;

    let all = group.enumerate_group()?;
    let verdicts: Vec<Result<Option<StrongElement>>> = all
        .par_iter()
        .map(|w| {
            let c = classify(group, w);
            if cross_check && !box_oracle_agrees(group, w, &c) {
                return Err(Error::Invariant(format!(
                    "box search disagrees with {} for {} in {}",
                    c.status(),
                    group.reduced_word(w),
                    group.label()
                )));
            }
            Ok(match c {
                Classification::Strong(weight) => Some(StrongElement {
                    element: w.clone(),
                    weight,
                }),
                _ => None,
            })
        })
        .collect();
    let mut out = Vec::new();
    for v in verdicts {
        if let Some(s) = v? {
            out.push(s);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityEntry {
    /// 0-based position in the word.
    pub position: usize,
    pub letter: usize,
    /// Later letters in `adj_s(letter)`.
    pub u: usize,
    /// Later letters in `adj_l(letter)`.
    pub t: usize,
    /// Later occurrences of `letter`.
    pub q: usize,
}

/// Neighbour counts along a reduced word of a strong element in `SM_i`:
/// `u_p` must be even at positions carrying `i` and odd elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityProfile {
    pub node: usize,
    pub entries: Vec<ParityEntry>,
}

impl ParityProfile {
    /// Positions where the parity of `u_p` is wrong.
    pub fn violations(&self) -> Vec<usize> {
        self.entries
            .iter()
            .filter(|e| (e.u % 2 == 0) != (e.letter == self.node))
            .map(|e| e.position)
            .collect()
    }

    pub fn holds(&self) -> bool {
        self.violations().is_empty()
    }
}

pub fn parity_profile(group: &WeylGroup, letters: &[usize]) -> Result<ParityProfile> {
    let class = classify_word(group, letters)?;
    let node = class.strong_node().ok_or_else(|| {
        Error::Precondition(format!(
            "parity profile needs a strong minuscule element with fundamental weight; {} is {}",
            format_word(letters),
            class.status()
        ))
    })?;
    let datum = group.datum();
    let r = letters.len();
    let entries = (0..r.saturating_sub(1))
        .map(|p| {
            let letter = letters[p];
            let (adj_s, adj_l) = datum.adjacency(letter);
            let later = &letters[p + 1..];
            ParityEntry {
                position: p,
                letter,
                u: later.iter().filter(|x| adj_s.contains(x)).count(),
                t: later.iter().filter(|x| adj_l.contains(x)).count(),
                q: later.iter().filter(|&&x| x == letter).count(),
            }
        })
        .collect();
    Ok(ParityProfile { node, entries })
}

/// Nodes `i` violating the neighbour constraint after the last occurrence of
/// `i`: at most one letter from `adj_s(i)` and none from `adj_l(i)`. Holds
/// for every reduced word of a dominant minuscule element.
pub fn stembridge_violations(datum: &CartanDatum, letters: &[usize]) -> Vec<usize> {
    (0..datum.rank())
        .filter(|&i| {
            let Some(last) = letters.iter().rposition(|&x| x == i) else {
                return false;
            };
            let (adj_s, adj_l) = datum.adjacency(i);
            let after = &letters[last + 1..];
            let short = after.iter().filter(|x| adj_s.contains(x)).count();
            let long = after.iter().filter(|x| adj_l.contains(x)).count();
            short > 1 || long > 0
        })
        .collect()
}
