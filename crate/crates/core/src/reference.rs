//! Expected values: tabulated data for the exceptional types (loaded from
//! `data/reference.toml`) and closed formulas for the classical ones.

use std::sync::OnceLock;

use serde::Deserialize;

use crate::cartan::{Family, TypeLabel};
use crate::error::{Error, Result};
use crate::weyl::parse_word;

const REFERENCE_TOML: &str = include_str!("../data/reference.toml");

#[derive(Debug, Deserialize)]
pub struct ReferenceData {
    pub version: u32,
    pub vi: Vec<ViEntry>,
    pub strong_count: Vec<CountRow>,
    pub interval: Vec<IntervalEntry>,
    pub demazure: Vec<DemazureEntry>,
}

#[derive(Debug, Deserialize)]
pub struct ViEntry {
    #[serde(rename = "type")]
    pub type_label: String,
    pub node: usize,
    pub word: String,
}

#[derive(Debug, Deserialize)]
pub struct CountRow {
    #[serde(rename = "type")]
    pub type_label: String,
    /// `(1-based node, count)` pairs.
    pub counts: Vec<(usize, u64)>,
}

#[derive(Debug, Deserialize)]
pub struct IntervalEntry {
    #[serde(rename = "type")]
    pub type_label: String,
    pub node: usize,
    pub excludes_top: bool,
}

#[derive(Debug, Deserialize)]
pub struct DemazureEntry {
    #[serde(rename = "type")]
    pub type_label: String,
    pub node: usize,
    pub dim: u64,
}

pub fn parse_reference(text: &str) -> Result<ReferenceData> {
    toml::from_str(text).map_err(|e| Error::Reference(e.to_string()))
}

/// The embedded reference data. Panics if the embedded file is malformed,
/// which the unit tests rule out.
pub fn reference() -> &'static ReferenceData {
    static DATA: OnceLock<ReferenceData> = OnceLock::new();
    DATA.get_or_init(|| parse_reference(REFERENCE_TOML).expect("embedded reference.toml"))
}

fn matches(type_label: &str, label: TypeLabel) -> bool {
    type_label.parse::<TypeLabel>().is_ok_and(|l| l == label)
}

/// Tabulated word (0-based letters) of `v_i` for an exceptional type.
pub fn exceptional_vi_word(label: TypeLabel, node: usize) -> Option<Vec<usize>> {
    reference()
        .vi
        .iter()
        .find(|e| matches(&e.type_label, label) && e.node == node + 1)
        .map(|e| parse_word(&e.word).expect("embedded v_i word"))
}

pub fn exceptional_strong_counts(label: TypeLabel) -> Option<Vec<(usize, u64)>> {
    reference()
        .strong_count
        .iter()
        .find(|r| matches(&r.type_label, label))
        .map(|r| r.counts.iter().map(|&(node, c)| (node - 1, c)).collect())
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

/// Expected `#SM_i` (0-based `node`); `None` when the node is not in `K`.
pub fn expected_strong_count(label: TypeLabel, node: usize) -> Option<u64> {
    let n = label.rank() as u64;
    let i = node as u64 + 1;
    if i > n {
        return None;
    }
    match label.family() {
        Family::A => Some(binomial(n - 1, i - 1)),
        Family::B => (i == 1).then(|| 1 << (n - 1)),
        Family::C => match i {
            1 => None,
            _ if i == n => Some(n),
            _ => Some(binomial(n - 1, i - 2)),
        },
        Family::D => match i {
            1 | 2 => Some((1 << (n - 2)) - 1),
            _ if i == n => Some(n - 1),
            _ => Some(binomial(n - 2, i - 3)),
        },
        Family::E | Family::F | Family::G => exceptional_strong_counts(label)?
            .into_iter()
            .find(|&(k, _)| k == node)
            .map(|(_, c)| c),
    }
}

/// For `(type, node)` where `SM_i` is known to be the quotient interval
/// `[v_i, w_0^J]^J`, whether the top element `w_0^J` must be removed.
/// `None` means no such description is claimed.
pub fn interval_characterization(label: TypeLabel, node: usize) -> Option<bool> {
    let n = label.rank();
    let i = node + 1;
    match label.family() {
        Family::A => (i <= n).then_some(false),
        Family::B => (i == 1).then_some(false),
        Family::C => (i == n).then_some(true),
        Family::D => match i {
            1 | 2 => Some(false),
            // D3 is A3 with the middle node labelled 3; there the interval
            // equals SM_3 including its top, so the statement needs n >= 4.
            _ if i == n && n >= 4 => Some(true),
            _ => None,
        },
        Family::E | Family::F | Family::G => reference()
            .interval
            .iter()
            .find(|e| matches(&e.type_label, label) && e.node == i)
            .map(|e| e.excludes_top),
    }
}

/// Expected `dim E_{bar v_i}(Lambda_i)`.
pub fn expected_demazure_dim(label: TypeLabel, node: usize) -> Option<u64> {
    let n = label.rank() as u64;
    let i = node as u64 + 1;
    match label.family() {
        Family::A => (i <= n).then(|| binomial(n - 1, i - 1)),
        Family::B => (i == 1).then(|| 1 << (n - 1)),
        Family::C => (i == n).then_some(n + 1),
        Family::D => match i {
            1 | 2 => Some((1 << (n - 2)) - 1),
            _ if i == n && n >= 4 => Some(n),
            _ => None,
        },
        Family::E | Family::F | Family::G => reference()
            .demazure
            .iter()
            .find(|e| matches(&e.type_label, label) && e.node == i as usize)
            .map(|e| e.dim),
    }
}
