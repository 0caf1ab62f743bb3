//! Root data for the finite simple types.
//!
//! Node numbering follows these Dynkin diagrams (labels are 1-based in text,
//! 0-based in every API of this crate):
//!
//! ```text
//! A_n   1 - 2 - ... - n
//! B_n   1 <= 2 - ... - n        (alpha_1 short)
//! C_n   1 => 2 - ... - n        (alpha_1 long)
//! D_n   n - (n-1) - ... - 3 < 1
//!                           < 2
//! E_n   1 - 2 - 3 - 4 - ... - (n-1),  n attached to 3
//! F_4   1 - 2 => 3 - 4          (alpha_3, alpha_4 short)
//! G_2   1 <≡ 2                  (alpha_1 short)
//! ```
//!
//! The Cartan matrix is stored with `a[i][j] = <alpha_j, alpha_i^vee>`, so
//! `a[i][j] = -2` (or `-3`) exactly when `alpha_i` is short and `alpha_j` is
//! long. Roots live in simple-root coordinates and weights in
//! fundamental-weight coordinates; the Cartan matrix is the only bridge
//! between the two.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    /// Smallest admissible rank.
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C | Family::G => 2,
            Family::D => 3,
            Family::F => 4,
            Family::E => 6,
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    pub fn admits(self, rank: usize) -> bool {
        match self {
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
            _ => rank >= self.min_rank(),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(Error::Parse(format!("unknown Lie type family {s:?}"))),
        }
    }
}

/// A finite Cartan type such as `D5` or `E8`.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeLabel {
    family: Family,
    rank: usize,
}

impl TypeLabel {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.admits(rank) {
            return Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            });
        }
        Ok(Self { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Order of the Weyl group from the degree product formula.
    pub fn weyl_group_order(self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }

    /// Number of positive roots for the type.
    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::Parse("empty type label".into()))?;
        let family: Family = letter.to_string().parse()?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!(
                "type label {s:?} must be a family letter followed by a decimal rank"
            )));
        }
        let rank = digits
            .parse()
            .map_err(|_| Error::Parse(format!("rank in {s:?} is out of range")))?;
        TypeLabel::new(family, rank)
    }
}

impl Serialize for TypeLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An integral weight in fundamental-weight coordinates: `coords[i]` is the
/// coefficient of `Lambda_i`, which is also `<lambda, alpha_i^vee>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `Lambda_i`.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = 1;
        w
    }

    /// `rho`, the sum of all fundamental weights.
    pub fn rho(rank: usize) -> Self {
        Weight(vec![1; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `<lambda, alpha_i^vee>`.
    pub fn pairing(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// If this weight is a single fundamental weight, its node.
    pub fn as_fundamental(&self) -> Option<usize> {
        let mut found = None;
        for (i, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(i) = self.as_fundamental() {
            return write!(f, "Λ_{}", i + 1);
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(if c > 0 { " + " } else { " - " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            first = false;
            match c.abs() {
                1 => write!(f, "Λ_{}", i + 1)?,
                a => write!(f, "{a}Λ_{}", i + 1)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Immutable root datum of a finite simple type.
#[derive(Debug, Clone)]
pub struct CartanDatum {
    label: TypeLabel,
    cartan: Vec<Vec<i64>>,
    short_nodes: Vec<usize>,
    adj_short: Vec<Vec<usize>>,
    adj_long: Vec<Vec<usize>>,
    positive_roots: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<i64>>,
    w0_word: Vec<usize>,
}

impl CartanDatum {
    pub fn new(label: TypeLabel) -> Self {
        let cartan = cartan_matrix(label);
        debug_assert!(is_generalized_cartan(&cartan));
        let n = label.rank();

        let lengths = squared_lengths(&cartan);
        let shortest = *lengths.iter().min().expect("rank >= 1");
        let short_nodes = (0..n).filter(|&i| lengths[i] == shortest).collect();

        let mut adj_short = vec![Vec::new(); n];
        let mut adj_long = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                match cartan[i][j] {
                    -1 => adj_short[i].push(j),
                    -2 | -3 => adj_long[i].push(j),
                    _ => {}
                }
            }
        }

        let positive_roots = reflection_closure(&cartan);
        let transpose: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| cartan[j][i]).collect())
            .collect();
        let positive_coroots = reflection_closure(&transpose);
        let w0_word = greedy_longest_word(&cartan);

        Self {
            label,
            cartan,
            short_nodes,
            adj_short,
            adj_long,
            positive_roots,
            positive_coroots,
            w0_word,
        }
    }

    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.label.rank()
    }

    pub fn family(&self) -> Family {
        self.label.family()
    }

    /// `a_{ij} = <alpha_j, alpha_i^vee>`.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Nodes whose simple root is short; every node in simply-laced types.
    pub fn short_nodes(&self) -> &[usize] {
        &self.short_nodes
    }

    pub fn is_short(&self, i: usize) -> bool {
        self.short_nodes.contains(&i)
    }

    /// `(adj_s(i), adj_l(i))`: neighbours `j` with `a_{ij} = -1`, resp.
    /// `a_{ij} in {-2, -3}`.
    pub fn adjacency(&self, i: usize) -> (&[usize], &[usize]) {
        (&self.adj_short[i], &self.adj_long[i])
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive coroots in simple-coroot coordinates.
    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    /// A reduced word for the longest element, found greedily.
    pub fn w0_word(&self) -> &[usize] {
        &self.w0_word
    }

    pub fn check_node(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node: i + 1,
                label: self.label.to_string(),
            })
        }
    }

    /// Weight coordinates of an element of the root lattice given in
    /// simple-root coordinates.
    pub fn root_to_weight(&self, root: &[i64]) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|k| (0..n).map(|m| self.cartan[k][m] * root[m]).sum())
                .collect(),
        )
    }

    /// The simple root `alpha_j` as a weight: column `j` of the Cartan matrix.
    pub fn simple_root_weight(&self, j: usize) -> Weight {
        Weight((0..self.rank()).map(|k| self.cartan[k][j]).collect())
    }

    /// `s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i`, in place.
    pub fn reflect_weight(&self, i: usize, weight: &mut Weight) {
        let c = weight.0[i];
        if c != 0 {
            for (k, x) in weight.0.iter_mut().enumerate() {
                *x -= c * self.cartan[k][i];
            }
        }
    }

    /// Whether `Lambda_i` pairs to 0 or ±1 with every coroot.
    pub fn is_minuscule_weight(&self, i: usize) -> bool {
        // <Lambda_i, beta^vee> is the alpha_i^vee coefficient of beta^vee.
        self.positive_coroots.iter().all(|c| c[i] <= 1)
    }
}

fn cartan_matrix(label: TypeLabel) -> Vec<Vec<i64>> {
    let n = label.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut bond = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match label.family() {
        Family::A | Family::B | Family::C => {
            for i in 1..n {
                bond(i - 1, i);
            }
        }
        Family::D => {
            bond(0, 2);
            bond(1, 2);
            for i in 3..n {
                bond(i - 1, i);
            }
        }
        Family::E => {
            for i in 1..n - 1 {
                bond(i - 1, i);
            }
            bond(2, n - 1);
        }
        Family::F => {
            bond(0, 1);
            bond(1, 2);
            bond(2, 3);
        }
        Family::G => bond(0, 1),
    }
    match label.family() {
        Family::B => a[0][1] = -2,
        Family::C => a[1][0] = -2,
        Family::F => a[2][1] = -2,
        Family::G => a[0][1] = -3,
        _ => {}
    }
    a
}

fn is_generalized_cartan(a: &[Vec<i64>]) -> bool {
    let n = a.len();
    (0..n).all(|i| {
        a[i][i] == 2
            && (0..n)
                .filter(|&j| j != i)
                .all(|j| a[i][j] <= 0 && ((a[i][j] == 0) == (a[j][i] == 0)))
    })
}

/// Relative squared root lengths `d_i` with `d_i a_{ij} = d_j a_{ji}`,
/// scaled so that all values are integers.
fn squared_lengths(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    // At most one multiple bond, so a start value of 6 never goes fractional.
    let mut d = vec![0i64; n];
    d[0] = 6;
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if j != i && a[i][j] != 0 && d[j] == 0 {
                d[j] = d[i] * a[i][j] / a[j][i];
                stack.push(j);
            }
        }
    }
    d
}

/// Close the simple roots of `a` under the simple reflections, keeping the
/// positive ones.
fn reflection_closure(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    let mut seen: std::collections::HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut frontier = roots.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| a[i][j] * beta[j]).sum();
                if pairing == 0 {
                    continue;
                }
                let mut image = beta.clone();
                image[i] -= pairing;
                if image.iter().all(|&c| c >= 0) && seen.insert(image.clone()) {
                    next.push(image);
                }
            }
        }
        roots.extend(next.iter().cloned());
        frontier = next;
    }
    roots.sort_by(|x, y| {
        let hx: i64 = x.iter().sum();
        let hy: i64 = y.iter().sum();
        hx.cmp(&hy).then_with(|| y.cmp(x))
    });
    roots
}

/// Build `w_0` one left factor at a time: while `w(rho)` has a positive
/// coordinate `j`, replace `w` by `s_j w`, which is one longer.
fn greedy_longest_word(a: &[Vec<i64>]) -> Vec<usize> {
    let n = a.len();
    let mut image = vec![1i64; n];
    let mut reversed = Vec::new();
    while let Some(j) = (0..n).find(|&j| image[j] > 0) {
        let c = image[j];
        for (k, x) in image.iter_mut().enumerate() {
            *x -= c * a[k][j];
        }
        reversed.push(j);
    }
    reversed.reverse();
    reversed
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> CartanDatum {
        CartanDatum::new(s.parse().unwrap())
    }

    fn all_small_types() -> Vec<TypeLabel> {
        let mut out = Vec::new();
        for f in [Family::A, Family::B, Family::C, Family::D] {
            for n in f.min_rank()..=8 {
                out.push(TypeLabel::new(f, n).unwrap());
            }
        }
        for s in ["E6", "E7", "E8", "F4", "G2"] {
            out.push(s.parse().unwrap());
        }
        out
    }

    #[test]
    fn parses_labels() {
        assert_eq!("e8".parse::<TypeLabel>().unwrap().to_string(), "E8");
        assert_eq!("D4".parse::<TypeLabel>().unwrap().rank(), 4);
        assert!("D2".parse::<TypeLabel>().is_err());
        assert!("E9".parse::<TypeLabel>().is_err());
        assert!("F5".parse::<TypeLabel>().is_err());
        assert!("B1".parse::<TypeLabel>().is_err());
        assert!("X3".parse::<TypeLabel>().is_err());
        assert!("A".parse::<TypeLabel>().is_err());
        assert!("A-1".parse::<TypeLabel>().is_err());
    }

    #[test]
    fn a2_matrix() {
        let d = datum("A2");
        assert_eq!(d.cartan(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(d.positive_roots().len(), 3);
    }

    #[test]
    fn short_node_sets() {
        let k = |s: &str| datum(s).short_nodes().to_vec();
        assert_eq!(k("B3"), vec![0]);
        assert_eq!(k("C4"), vec![1, 2, 3]);
        assert_eq!(k("F4"), vec![2, 3]);
        assert_eq!(k("G2"), vec![0]);
        assert_eq!(k("D5"), (0..5).collect::<Vec<_>>());
        assert_eq!(k("E6"), (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn adjacency_sets() {
        let b = datum("B4");
        assert_eq!(b.adjacency(0), (&[][..], &[1][..]));
        assert_eq!(b.adjacency(1), (&[0, 2][..], &[][..]));
        for i in 0..5 {
            assert!(datum("A5").adjacency(i).1.is_empty());
        }
        let g = datum("G2");
        assert_eq!(g.adjacency(0).1, &[1]);
        assert_eq!(g.adjacency(1).0, &[0]);
        let d = datum("D5");
        assert_eq!(d.adjacency(2).0, &[0, 1, 3]);
    }

    #[test]
    fn matrix_invariants_and_root_counts() {
        for label in all_small_types() {
            let d = CartanDatum::new(label);
            assert!(is_generalized_cartan(d.cartan()), "{label}");
            assert_eq!(d.positive_roots().len(), label.positive_root_count(), "{label}");
            assert_eq!(d.positive_coroots().len(), label.positive_root_count(), "{label}");
            // <alpha_j, alpha_i^vee> = a_ij via the weight embedding.
            for j in 0..d.rank() {
                let alpha = d.simple_root_weight(j);
                for i in 0..d.rank() {
                    assert_eq!(alpha.pairing(i), d.a(i, j));
                }
            }
            // Row sums of |a_ij| over neighbours equal the weighted degree.
            for i in 0..d.rank() {
                let (s, l) = d.adjacency(i);
                let weighted: i64 = s.len() as i64
                    + l.iter().map(|&j| -d.a(i, j)).sum::<i64>();
                let row: i64 = (0..d.rank()).filter(|&j| j != i).map(|j| -d.a(i, j)).sum();
                assert_eq!(weighted, row);
            }
            assert_eq!(d.w0_word().len(), label.positive_root_count(), "{label}");
        }
    }

    #[test]
    fn minuscule_weights() {
        for n in 1..=6 {
            let d = datum(&format!("A{n}"));
            assert!((0..n).all(|i| d.is_minuscule_weight(i)));
        }
        for n in 2..=6 {
            let b = datum(&format!("B{n}"));
            let mins: Vec<_> = (0..n).filter(|&i| b.is_minuscule_weight(i)).collect();
            assert_eq!(mins, vec![0]);
            let c = datum(&format!("C{n}"));
            let mins: Vec<_> = (0..n).filter(|&i| c.is_minuscule_weight(i)).collect();
            assert_eq!(mins, vec![n - 1]);
        }
        for n in 4..=7 {
            let d = datum(&format!("D{n}"));
            let mins: Vec<_> = (0..n).filter(|&i| d.is_minuscule_weight(i)).collect();
            assert_eq!(mins, vec![0, 1, n - 1]);
        }
        let e6 = datum("E6");
        assert_eq!((0..6).filter(|&i| e6.is_minuscule_weight(i)).collect::<Vec<_>>(), vec![0, 4]);
        let e7 = datum("E7");
        assert_eq!((0..7).filter(|&i| e7.is_minuscule_weight(i)).collect::<Vec<_>>(), vec![5]);
        let e8 = datum("E8");
        assert!((0..8).all(|i| !e8.is_minuscule_weight(i)));
        assert!((0..4).all(|i| !datum("F4").is_minuscule_weight(i)));
        assert!((0..2).all(|i| !datum("G2").is_minuscule_weight(i)));
    }

    #[test]
    fn weight_display() {
        assert_eq!(Weight::fundamental(3, 1).to_string(), "Λ_2");
        assert_eq!(Weight(vec![2, 0, -1]).to_string(), "2Λ_1 - Λ_3");
        assert_eq!(Weight::zero(2).to_string(), "0");
    }
}
