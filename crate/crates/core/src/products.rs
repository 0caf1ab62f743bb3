//! Product parametrizations of the maximal parabolic quotients `W^{J_i}` of
//! the classical types, and the closed descriptions of `SM_i` built on them.
//!
//! Each node `j` carries a fixed word `w_j` and `w_j(l)` is its right suffix
//! of length `l`. An element of `W^{J_i}` is a product
//! `w_n(l_n) w_{n-1}(l_{n-1}) ... w_i(l_i)` whose exponent sequence obeys a
//! type-dependent set of inequalities; lengths add along the product. In
//! type D, `w_j(j-1)` for `j >= 3` is ambiguous between `s_1 s_3 ... s_j` and
//! `s_2 s_3 ... s_j`, and the choice is recorded as an explicit [`Branch`].
//! For `D_n` with `i` in `{1, 2}` the quotient uses an alternating product of
//! `w_1` and `w_2` instead (see [`SequenceForm::Alternating`]).
//!
//! All node numbers in this module's documentation are 1-based; the API is
//! 0-based like the rest of the crate.

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cartan::{CartanDatum, Family, TypeLabel, Weight};
use crate::error::{Error, Result};
use crate::minuscule::{classify, Classification};
use crate::reference::{exceptional_vi_word, expected_strong_count};
use crate::weyl::{format_word, ParabolicContext, ReducedWord, WeylElement, WeylGroup};

/// Which fork tip starts an ambiguous type-D factor `w_j(j-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    Node1,
    Node2,
}

impl Branch {
    fn other(self) -> Self {
        match self {
            Branch::Node1 => Branch::Node2,
            Branch::Node2 => Branch::Node1,
        }
    }

    fn letter(self) -> usize {
        match self {
            Branch::Node1 => 0,
            Branch::Node2 => 1,
        }
    }
}

impl Serialize for Branch {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.letter() as u8 + 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceForm {
    /// `l[k]` is the exponent of `w_{i+k}`; the product runs from `w_n` on
    /// the left down to `w_i` on the right.
    Chain,
    /// `D_n`, `i` in `{1, 2}`: `l = [l_1, ..., l_h]` strictly decreasing; the
    /// rightmost factor is `w_i(l_1)`, and factors alternate between `w_i`
    /// and the other fork tip moving left.
    Alternating,
}

/// Exponent data of one product.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LSequence {
    pub i: usize,
    pub form: SequenceForm,
    pub l: Vec<usize>,
    /// Parallel to `l` for chains; empty for alternating products.
    pub branch: Vec<Option<Branch>>,
}

impl Serialize for LSequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("LSequence", 3)?;
        st.serialize_field("i", &(self.i + 1))?;
        st.serialize_field("l", &self.l)?;
        st.serialize_field("branch", &self.branch)?;
        st.end()
    }
}

#[derive(Clone, Debug)]
pub struct ProductElement {
    pub seq: LSequence,
    pub word: ReducedWord,
    pub element: WeylElement,
}

fn require_classical(label: TypeLabel, what: &str) -> Result<()> {
    if label.family().is_classical() {
        Ok(())
    } else {
        Err(Error::Unsupported {
            what: what.into(),
            label: label.to_string(),
        })
    }
}

/// The full word of `w_j` (0-based `j`).
pub fn wj_word(datum: &CartanDatum, j: usize) -> Result<Vec<usize>> {
    let label = datum.label();
    require_classical(label, "the w_j factors")?;
    datum.check_node(j)?;
    let n = datum.rank();
    let word = match label.family() {
        Family::A => (0..=j).collect(),
        Family::B | Family::C => (1..n).rev().chain([0]).chain(1..=j).collect(),
        Family::D => match j {
            0 | 1 => (2..n).rev().chain([j]).collect(),
            _ => (2..n).rev().chain([0, 1]).chain(2..=j).collect(),
        },
        _ => unreachable!(),
    };
    Ok(word)
}

fn is_ambiguous(label: TypeLabel, j: usize, l: usize) -> bool {
    label.family() == Family::D && j >= 2 && l == j
}

/// `w_j(l)`, the right suffix of length `l` of `w_j`. A branch must be given
/// exactly for the ambiguous type-D factors `w_j(j-1)`, `j >= 3` (1-based).
pub fn build_wj(
    datum: &CartanDatum,
    j: usize,
    l: usize,
    branch: Option<Branch>,
) -> Result<ReducedWord> {
    let full = wj_word(datum, j)?;
    if l > full.len() {
        return Err(Error::Precondition(format!(
            "w_{}({l}) needs l <= {}",
            j + 1,
            full.len()
        )));
    }
    let mut word = full[full.len() - l..].to_vec();
    match (is_ambiguous(datum.label(), j, l), branch) {
        (true, Some(b)) => word[0] = b.letter(),
        (false, None) => {}
        (true, None) => {
            return Err(Error::Precondition(format!(
                "w_{}({l}) is ambiguous in type D; a branch is required",
                j + 1
            )))
        }
        (false, Some(_)) => {
            return Err(Error::Precondition(format!(
                "w_{}({l}) is not ambiguous; no branch may be given",
                j + 1
            )))
        }
    }
    Ok(ReducedWord::trusted(word))
}

/// The word of the product described by `seq`.
pub fn sequence_word(datum: &CartanDatum, seq: &LSequence) -> Result<Vec<usize>> {
    let mut word = Vec::new();
    match seq.form {
        SequenceForm::Chain => {
            if seq.branch.len() != seq.l.len() {
                return Err(Error::Precondition("branch list must parallel l".into()));
            }
            for k in (0..seq.l.len()).rev() {
                let w = build_wj(datum, seq.i + k, seq.l[k], seq.branch[k])?;
                word.extend_from_slice(w.letters());
            }
        }
        SequenceForm::Alternating => {
            let other = 1 - seq.i;
            for k in (0..seq.l.len()).rev() {
                let j = if k % 2 == 0 { seq.i } else { other };
                word.extend_from_slice(build_wj(datum, j, seq.l[k], None)?.letters());
            }
        }
    }
    Ok(word)
}

/// Per-family inequality system for chain sequences (1-based `i`, `j`).
#[derive(Clone, Copy)]
struct ChainRules {
    family: Family,
    i: usize,
}

impl ChainRules {
    fn upper(&self, j: usize) -> usize {
        match self.family {
            Family::A => self.i,
            Family::B | Family::C => j + self.i - 1,
            Family::D => j + self.i - 2,
            _ => unreachable!(),
        }
    }

    /// Whether `l_{j+1} = next` may follow `l_j = prev`.
    fn step_ok(&self, j: usize, prev: usize, next: usize) -> bool {
        match self.family {
            Family::A => next <= prev,
            Family::B | Family::C => next <= prev + 1 && (prev + 1 > j || next <= prev),
            Family::D => next <= prev + 1 && (prev + 2 > j || next <= prev),
            _ => unreachable!(),
        }
    }
}

fn chain_sequences(label: TypeLabel, i: usize) -> Vec<LSequence> {
    let n = label.rank();
    let rules = ChainRules {
        family: label.family(),
        i: i + 1,
    };
    let mut out = Vec::new();
    let mut l = Vec::new();
    let mut branch = Vec::new();
    extend_chain(label, &rules, i, n, &mut l, &mut branch, &mut out);
    out
}

fn extend_chain(
    label: TypeLabel,
    rules: &ChainRules,
    i: usize,
    n: usize,
    l: &mut Vec<usize>,
    branch: &mut Vec<Option<Branch>>,
    out: &mut Vec<LSequence>,
) {
    let j0 = i + l.len();
    if j0 == n {
        out.push(LSequence {
            i,
            form: SequenceForm::Chain,
            l: l.clone(),
            branch: branch.clone(),
        });
        return;
    }
    let j1 = j0 + 1;
    for v in 0..=rules.upper(j1) {
        if let Some(&prev) = l.last() {
            if !rules.step_ok(j1 - 1, prev, v) {
                continue;
            }
        }
        let choices: Vec<Option<Branch>> = if is_ambiguous(label, j0, v) {
            let forced = match (l.last(), branch.last()) {
                // l_{j+1} = l_j + 1 = j: the two factors must start with
                // different fork tips.
                (Some(&prev), Some(&Some(b))) if prev + 1 == v && v == j1 - 1 => Some(b.other()),
                _ => None,
            };
            match forced {
                Some(b) => vec![Some(b)],
                None => vec![Some(Branch::Node1), Some(Branch::Node2)],
            }
        } else {
            vec![None]
        };
        for b in choices {
            l.push(v);
            branch.push(b);
            extend_chain(label, rules, i, n, l, branch, out);
            l.pop();
            branch.pop();
        }
    }
}

/// Strictly decreasing sequences `n-1 >= l_1 > ... > l_h >= 1` drawn from
/// `pool`, for every `h` in `min_len..=max_len`.
fn decreasing_subsets(pool: &[usize], min_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let k = pool.len();
    for mask in 0u64..(1u64 << k) {
        if (mask.count_ones() as usize) < min_len {
            continue;
        }
        let mut seq: Vec<usize> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| pool[b]).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        out.push(seq);
    }
    out.sort();
    out
}

fn realize(group: &WeylGroup, seqs: Vec<LSequence>) -> Result<Vec<ProductElement>> {
    let datum = group.datum();
    seqs.into_par_iter()
        .map(|seq| {
            let word = sequence_word(datum, &seq)?;
            let element = group.evaluate(&word)?;
            if element.length() != word.len() {
                return Err(Error::Invariant(format!(
                    "length additivity fails for {} in {}: l(w) = {} but the factors have {} letters",
                    format_word(&word),
                    datum.label(),
                    element.length(),
                    word.len()
                )));
            }
            Ok(ProductElement {
                seq,
                word: ReducedWord::trusted(word),
                element,
            })
        })
        .collect()
}

/// All exponent sequences parametrizing `W^{J_i}`.
pub fn quotient_sequences(label: TypeLabel, i: usize) -> Result<Vec<LSequence>> {
    require_classical(label, "the product parametrization")?;
    if i >= label.rank() {
        return Err(Error::NodeOutOfRange {
            node: i + 1,
            label: label.to_string(),
        });
    }
    let n = label.rank();
    if label.family() == Family::D && i < 2 {
        let pool: Vec<usize> = (1..n).collect();
        return Ok(decreasing_subsets(&pool, 0)
            .into_iter()
            .map(|l| LSequence {
                i,
                form: SequenceForm::Alternating,
                l,
                branch: Vec::new(),
            })
            .collect());
    }
    Ok(chain_sequences(label, i))
}

/// `W^{J_i}` through the product parametrization, with length additivity
/// checked on every element.
pub fn enumerate_quotient_products(group: &WeylGroup, i: usize) -> Result<Vec<ProductElement>> {
    realize(group, quotient_sequences(group.label(), i)?)
}

fn require_short(datum: &CartanDatum, i: usize) -> Result<()> {
    datum.check_node(i)?;
    if datum.is_short(i) {
        Ok(())
    } else {
        Err(Error::NotShortNode {
            node: i + 1,
            label: datum.label().to_string(),
            k: format_word(datum.short_nodes()),
        })
    }
}

/// Exponent sequences of the closed description of `SM_i`.
pub fn smi_sequences(datum: &CartanDatum, i: usize) -> Result<Vec<LSequence>> {
    let label = datum.label();
    require_classical(label, "the closed description of SM_i")?;
    require_short(datum, i)?;
    let n = label.rank();
    let ii = i + 1;
    let chain = |l: Vec<usize>| LSequence {
        i,
        form: SequenceForm::Chain,
        branch: vec![None; l.len()],
        l,
    };
    let seqs = match label.family() {
        Family::A | Family::B => quotient_sequences(label, i)?
            .into_iter()
            .filter(|s| {
                let last_nonzero = *s.l.last().expect("nonempty chain") != 0;
                let top = label.family() == Family::B || s.l[0] == ii;
                last_nonzero && top
            })
            .collect(),
        Family::C if ii == n => (n..=2 * n - 1).map(|v| chain(vec![v])).collect(),
        Family::C => bounded_tails(ii, n, ii..=2 * ii - 2, |li| 2 * ii - li - 1)
            .into_iter()
            .map(chain)
            .collect(),
        Family::D if ii <= 2 => {
            let pool: Vec<usize> = (1..n - 1).collect();
            decreasing_subsets(&pool, 1)
                .into_iter()
                .map(|tail| {
                    let mut l = vec![n - 1];
                    l.extend(tail);
                    LSequence {
                        i,
                        form: SequenceForm::Alternating,
                        l,
                        branch: Vec::new(),
                    }
                })
                .collect()
        }
        Family::D if ii == n => (n..=2 * n - 2).map(|v| chain(vec![v])).collect(),
        Family::D => bounded_tails(ii, n, ii..=2 * ii - 3, |li| 2 * ii - li - 2)
            .into_iter()
            .map(chain)
            .collect(),
        _ => unreachable!(),
    };
    Ok(seqs)
}

/// Chains `[l_i, l_{i+1}, ..., l_n]` with `l_i` in `head` and
/// `bound(l_i) >= l_{i+1} >= ... >= l_n >= 1`.
fn bounded_tails(
    i: usize,
    n: usize,
    head: std::ops::RangeInclusive<usize>,
    bound: impl Fn(usize) -> usize,
) -> Vec<Vec<usize>> {
    fn rec(len: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in 1..=max {
            cur.push(v);
            rec(len, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for li in head {
        let mut cur = vec![li];
        rec(n - i + 1, bound(li), &mut cur, &mut out);
    }
    out
}

/// `SM_i` from its closed description (classical types).
pub fn enumerate_smi_closed_form(group: &WeylGroup, i: usize) -> Result<Vec<ProductElement>> {
    realize(group, smi_sequences(group.datum(), i)?)
}

/// Elements of `W^{J_i}` whose classification is `Strong(Lambda_i)`.
/// Works for every type; streams the quotient one length at a time.
pub fn filter_quotient_strong(group: &WeylGroup, i: usize) -> Result<Vec<WeylElement>> {
    let ctx = ParabolicContext::new(group.datum(), i)?;
    let target = Classification::Strong(Weight::fundamental(group.rank(), i));
    let mut out = Vec::new();
    for level in group.quotient_levels(&ctx) {
        let hits: Vec<WeylElement> = level
            .into_par_iter()
            .filter(|w| classify(group, w) == target)
            .collect();
        out.extend(hits);
    }
    Ok(out)
}

/// `SM_i` for the exceptional types, by filtering `W^{J_i}`.
pub fn enumerate_smi_exceptional(group: &WeylGroup, i: usize) -> Result<Vec<WeylElement>> {
    let label = group.label();
    if label.family().is_classical() {
        return Err(Error::Unsupported {
            what: "quotient filtering as the source of SM_i".into(),
            label: label.to_string(),
        });
    }
    require_short(group.datum(), i)?;
    filter_quotient_strong(group, i)
}

/// `SM_i` by the primary route for the type: the closed description for
/// classical types, quotient filtering otherwise.
pub fn enumerate_smi(group: &WeylGroup, i: usize) -> Result<Vec<WeylElement>> {
    if group.label().family().is_classical() {
        Ok(enumerate_smi_closed_form(group, i)?
            .into_iter()
            .map(|s| s.element)
            .collect())
    } else {
        enumerate_smi_exceptional(group, i)
    }
}

/// `#SM_i`, failing hard when it disagrees with the expected value.
pub fn count_smi(group: &WeylGroup, i: usize) -> Result<u64> {
    let count = enumerate_smi(group, i)?.len() as u64;
    let expected = expected_strong_count(group.label(), i).ok_or_else(|| Error::NotShortNode {
        node: i + 1,
        label: group.label().to_string(),
        k: format_word(group.datum().short_nodes()),
    })?;
    if count != expected {
        return Err(Error::CountMismatch {
            context: format!("#SM_{} in {}", i + 1, group.label()),
            enumerated: count,
            expected,
        });
    }
    Ok(count)
}

/// The word of `v_i` (0-based letters) for `i` in `K`.
pub fn vi_word(datum: &CartanDatum, i: usize) -> Result<Vec<usize>> {
    require_short(datum, i)?;
    let label = datum.label();
    let n = datum.rank();
    let word = match label.family() {
        Family::A | Family::C => (i + 1..n).rev().chain(0..=i).collect(),
        Family::B => (0..n).rev().collect(),
        Family::D => match i {
            0 | 1 => [1 - i].into_iter().chain((2..n).rev()).chain([i]).collect(),
            _ => (i + 1..n).rev().chain([0, 1]).chain(2..=i).collect(),
        },
        _ => exceptional_vi_word(label, i).ok_or_else(|| {
            Error::Reference(format!("no v_{} recorded for {label}", i + 1))
        })?,
    };
    Ok(word)
}

pub fn vi_element(group: &WeylGroup, i: usize) -> Result<WeylElement> {
    group.evaluate(&vi_word(group.datum(), i)?)
}

/// Whether `v_k` is a right factor of `w` in the length-additive sense,
/// i.e. `l(w v_k^{-1}) = l(w) - n`.
pub fn has_vi_suffix(group: &WeylGroup, w: &WeylElement, k: usize) -> Result<bool> {
    let v = vi_element(group, k)?;
    let rest = group.multiply(w, &group.inverse(&v));
    Ok(rest.length() + group.rank() == w.length())
}

/// Check that every `v_i` has length `n` and is strong with weight
/// `Lambda_i`.
pub fn verify_vi_catalog(group: &WeylGroup) -> Result<()> {
    let n = group.rank();
    for &i in group.datum().short_nodes() {
        let word = vi_word(group.datum(), i)?;
        let v = group.evaluate(&word)?;
        if v.length() != n || word.len() != n {
            return Err(Error::Invariant(format!(
                "v_{} = {} in {} has length {}, expected {n}",
                i + 1,
                format_word(&word),
                group.label(),
                v.length()
            )));
        }
        let class = classify(group, &v);
        if class.strong_node() != Some(i) {
            return Err(Error::Invariant(format!(
                "v_{} in {} classifies as {}",
                i + 1,
                group.label(),
                class.status()
            )));
        }
    }
    Ok(())
}
