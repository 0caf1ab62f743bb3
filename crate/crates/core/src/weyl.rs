//! Weyl group elements in canonical matrix form.
//!
//! An element is stored as the integer matrix of its action on the root
//! lattice in simple-root coordinates (column `j` is `w(alpha_j)`), together
//! with the image `w(rho)` in fundamental-weight coordinates and its length.
//! Equality and hashing use the matrix only.
//!
//! Left and right multiplication by a simple reflection are O(n) and O(n^2)
//! updates, and both descent sets can be read off directly:
//! `j` is a right descent iff `w(alpha_j) < 0`, and a left descent iff
//! `<w(rho), alpha_j^vee> < 0`.

use std::fmt;
use std::hash::{Hash, Hasher};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::cartan::{CartanDatum, TypeLabel, Weight};
use crate::error::{Error, Result};

/// Default cap on the number of elements a full-group enumeration may visit.
pub const DEFAULT_BUDGET: u128 = 1_000_000;

#[derive(Clone, Debug)]
pub struct WeylElement {
    mat: Box<[i8]>,
    rho: Box<[i32]>,
    length: u32,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.length as usize
    }

    pub fn rank(&self) -> usize {
        self.rho.len()
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Row-major matrix of the action on simple-root coordinates.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|r| (0..n).map(|c| self.mat[r * n + c] as i64).collect())
            .collect()
    }

    /// `w(alpha_j)` in simple-root coordinates.
    pub fn image_of_simple_root(&self, j: usize) -> Vec<i64> {
        let n = self.rank();
        (0..n).map(|r| self.mat[r * n + j] as i64).collect()
    }

    /// `w(rho)` in fundamental-weight coordinates.
    pub fn rho_image(&self) -> Weight {
        Weight(self.rho.iter().map(|&x| x as i64).collect())
    }

    pub fn is_right_descent(&self, j: usize) -> bool {
        let n = self.rank();
        (0..n)
            .map(|r| self.mat[r * n + j])
            .find(|&x| x != 0)
            .is_some_and(|x| x < 0)
    }

    pub fn is_left_descent(&self, j: usize) -> bool {
        self.rho[j] < 0
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&j| self.is_right_descent(j)).collect()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&j| self.is_left_descent(j)).collect()
    }

    /// `(left descents, right descents)`.
    pub fn descents(&self) -> (Vec<usize>, Vec<usize>) {
        (self.left_descents(), self.right_descents())
    }

    fn first_left_descent(&self) -> Option<usize> {
        self.rho.iter().position(|&x| x < 0)
    }
}

impl Serialize for WeylElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.matrix().serialize(s)
    }
}

/// A word in the simple reflections that is known to be reduced.
/// Letters are 0-based node indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ReducedWord(Vec<usize>);

impl ReducedWord {
    pub fn new(group: &WeylGroup, letters: Vec<usize>) -> Result<Self> {
        let w = group.evaluate(&letters)?;
        if w.length() != letters.len() {
            return Err(Error::NotReduced {
                word: format_word(&letters),
                length: w.length(),
            });
        }
        Ok(ReducedWord(letters))
    }

    pub(crate) fn trusted(letters: Vec<usize>) -> Self {
        ReducedWord(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Nodes occurring in the word.
    pub fn support(&self, rank: usize) -> Vec<bool> {
        let mut s = vec![false; rank];
        for &i in &self.0 {
            s[i] = true;
        }
        s
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.0))
    }
}

impl Serialize for ReducedWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Comma-separated 1-based labels, e.g. `[2, 1, 0]` becomes `"3,2,1"`.
pub fn format_word(letters: &[usize]) -> String {
    letters
        .iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parse comma-separated 1-based labels into 0-based letters. The empty
/// string is the empty word.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            match tok.parse::<usize>() {
                Ok(k) if k >= 1 => Ok(k - 1),
                _ => Err(Error::Parse(format!("bad letter {tok:?} in word {s:?}"))),
            }
        })
        .collect()
}

/// Order of `s_i s_j`, read off the Cartan matrix.
pub fn braid_order(datum: &CartanDatum, i: usize, j: usize) -> usize {
    if i == j {
        return 1;
    }
    match datum.a(i, j) * datum.a(j, i) {
        0 => 2,
        1 => 3,
        2 => 4,
        3 => 6,
        p => unreachable!("finite type has a_ij a_ji <= 3, got {p}"),
    }
}

/// Every word obtained from `letters` by one braid move (commutations
/// included). All of them represent the same element.
pub fn braid_moves(datum: &CartanDatum, letters: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for p in 0..letters.len().saturating_sub(1) {
        let (a, b) = (letters[p], letters[p + 1]);
        if a == b {
            continue;
        }
        let m = braid_order(datum, a, b);
        if p + m > letters.len() {
            continue;
        }
        let alternates = (0..m).all(|k| letters[p + k] == if k % 2 == 0 { a } else { b });
        if alternates {
            let mut moved = letters.to_vec();
            for k in 0..m {
                moved[p + k] = if k % 2 == 0 { b } else { a };
            }
            out.push(moved);
        }
    }
    out
}

/// The maximal parabolic subgroup `W_J` with `J = S \ {s_excluded}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ParabolicContext {
    rank: usize,
    excluded: usize,
}

impl ParabolicContext {
    pub fn new(datum: &CartanDatum, excluded: usize) -> Result<Self> {
        datum.check_node(excluded)?;
        Ok(Self {
            rank: datum.rank(),
            excluded,
        })
    }

    pub fn excluded(&self) -> usize {
        self.excluded
    }

    pub fn contains(&self, j: usize) -> bool {
        j != self.excluded && j < self.rank
    }

    /// The `n - 1` nodes of `J`.
    pub fn nodes(&self) -> Vec<usize> {
        (0..self.rank).filter(|&j| j != self.excluded).collect()
    }

    /// Whether `w` is a minimal-length representative of `w W_J`.
    pub fn is_minimal_representative(&self, w: &WeylElement) -> bool {
        self.nodes().into_iter().all(|j| !w.is_right_descent(j))
    }
}

#[derive(Clone, Copy, Debug)]
enum TreeKind {
    /// All of `W`.
    Full,
    /// Elements with no right descent in `J`.
    Quotient(ParabolicContext),
    /// The subgroup generated by `J`.
    Parabolic(ParabolicContext),
}

/// A Weyl group attached to a root datum, with an enumeration budget.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    datum: CartanDatum,
    budget: u128,
}

impl WeylGroup {
    pub fn new(label: TypeLabel) -> Self {
        Self::from_datum(CartanDatum::new(label))
    }

    pub fn from_datum(datum: CartanDatum) -> Self {
        Self {
            datum,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = budget.max(1);
        self
    }

    pub fn budget(&self) -> u128 {
        self.budget
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn label(&self) -> TypeLabel {
        self.datum.label()
    }

    pub fn order(&self) -> u128 {
        self.label().weyl_group_order()
    }

    pub fn identity(&self) -> WeylElement {
        let n = self.rank();
        let mut mat = vec![0i8; n * n];
        for i in 0..n {
            mat[i * n + i] = 1;
        }
        WeylElement {
            mat: mat.into_boxed_slice(),
            rho: vec![1; n].into_boxed_slice(),
            length: 0,
        }
    }

    pub fn generator(&self, j: usize) -> WeylElement {
        self.mul_gen_right(&self.identity(), j)
    }

    /// `w s_j`.
    pub fn mul_gen_right(&self, w: &WeylElement, j: usize) -> WeylElement {
        let n = self.rank();
        let a = self.datum.cartan();
        let col_j: Vec<i32> = (0..n).map(|r| w.mat[r * n + j] as i32).collect();
        let ascent = col_j.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0);

        let mut mat = w.mat.clone();
        for k in 0..n {
            let c = a[j][k] as i32;
            if c == 0 {
                continue;
            }
            for r in 0..n {
                mat[r * n + k] = (mat[r * n + k] as i32 - c * col_j[r]) as i8;
            }
        }
        let mut rho = w.rho.clone();
        for (kk, x) in rho.iter_mut().enumerate() {
            let delta: i64 = (0..n).map(|m| a[kk][m] * col_j[m] as i64).sum();
            *x -= delta as i32;
        }
        WeylElement {
            mat,
            rho,
            length: if ascent { w.length + 1 } else { w.length - 1 },
        }
    }

    /// `s_j w`.
    pub fn mul_gen_left(&self, w: &WeylElement, j: usize) -> WeylElement {
        let n = self.rank();
        let a = self.datum.cartan();
        let mut mat = w.mat.clone();
        for c in 0..n {
            let mut v = -(w.mat[j * n + c] as i32);
            for k in 0..n {
                if k != j && a[j][k] != 0 {
                    v -= a[j][k] as i32 * w.mat[k * n + c] as i32;
                }
            }
            mat[j * n + c] = v as i8;
        }
        let pj = w.rho[j];
        let mut rho = w.rho.clone();
        if pj != 0 {
            for (k, x) in rho.iter_mut().enumerate() {
                *x -= pj * a[k][j] as i32;
            }
        }
        WeylElement {
            mat,
            rho,
            length: if pj > 0 { w.length + 1 } else { w.length - 1 },
        }
    }

    fn check_letters(&self, letters: &[usize]) -> Result<()> {
        letters.iter().try_for_each(|&i| self.datum.check_node(i))
    }

    /// Product `s_{i_1} ... s_{i_r}` of an arbitrary word.
    pub fn evaluate(&self, letters: &[usize]) -> Result<WeylElement> {
        self.check_letters(letters)?;
        Ok(letters
            .iter()
            .fold(self.identity(), |w, &j| self.mul_gen_right(&w, j)))
    }

    /// A reduced word for `w`, obtained by repeatedly stripping the smallest
    /// left descent.
    pub fn reduced_word(&self, w: &WeylElement) -> ReducedWord {
        let mut letters = Vec::with_capacity(w.length());
        let mut cur = w.clone();
        while let Some(j) = cur.first_left_descent() {
            letters.push(j);
            cur = self.mul_gen_left(&cur, j);
        }
        ReducedWord(letters)
    }

    /// A reduced word for the element represented by an arbitrary word.
    pub fn reduce(&self, letters: &[usize]) -> Result<ReducedWord> {
        Ok(self.reduced_word(&self.evaluate(letters)?))
    }

    pub fn multiply(&self, u: &WeylElement, v: &WeylElement) -> WeylElement {
        self.reduced_word(v)
            .0
            .iter()
            .fold(u.clone(), |acc, &j| self.mul_gen_right(&acc, j))
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        self.reduced_word(w)
            .0
            .iter()
            .fold(self.identity(), |acc, &j| self.mul_gen_left(&acc, j))
    }

    /// `#{beta > 0 : w(beta) < 0}`, recomputed from the matrix.
    pub fn inversion_count(&self, w: &WeylElement) -> usize {
        let n = self.rank();
        self.datum
            .positive_roots()
            .iter()
            .filter(|beta| {
                (0..n)
                    .map(|r| (0..n).map(|c| w.mat[r * n + c] as i64 * beta[c]).sum::<i64>())
                    .find(|&x| x != 0)
                    .is_some_and(|x| x < 0)
            })
            .count()
    }

    /// Nodes occurring in some (equivalently every) reduced word of `w`.
    pub fn support(&self, w: &WeylElement) -> Vec<bool> {
        self.reduced_word(w).support(self.rank())
    }

    /// Action on an integral weight.
    pub fn apply(&self, w: &WeylElement, weight: &Weight) -> Result<Weight> {
        if weight.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: weight.rank(),
            });
        }
        let word = self.reduced_word(w);
        let mut out = weight.clone();
        for &j in word.0.iter().rev() {
            self.datum.reflect_weight(j, &mut out);
        }
        Ok(out)
    }

    pub fn longest_element(&self) -> WeylElement {
        self.evaluate(self.datum.w0_word())
            .expect("w0 word uses valid nodes")
    }

    /// `w_{J,0}`, the longest element of `W_J`.
    pub fn longest_parabolic(&self, ctx: &ParabolicContext) -> WeylElement {
        let mut w = self.identity();
        while let Some(j) = ctx.nodes().into_iter().find(|&j| !w.is_right_descent(j)) {
            w = self.mul_gen_right(&w, j);
        }
        w
    }

    /// `w_0^J`, the minimal representative of `w_0 W_J`.
    pub fn longest_quotient(&self, ctx: &ParabolicContext) -> WeylElement {
        self.multiply(&self.longest_element(), &self.longest_parabolic(ctx))
    }

    fn check_budget(&self, order: u128) -> Result<()> {
        if order > self.budget {
            return Err(Error::BudgetExceeded {
                label: self.label().to_string(),
                order,
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// Every element of `W`, sorted by length.
    pub fn enumerate_group(&self) -> Result<Vec<WeylElement>> {
        self.check_budget(self.order())?;
        Ok(self.levels(TreeKind::Full).flatten().collect())
    }

    /// `W` one length at a time, refusing groups larger than the budget.
    pub fn group_levels(&self) -> Result<impl Iterator<Item = Vec<WeylElement>> + '_> {
        self.check_budget(self.order())?;
        Ok(self.levels(TreeKind::Full))
    }

    /// Every element of `W_J`, sorted by length.
    pub fn enumerate_parabolic(&self, ctx: &ParabolicContext) -> Result<Vec<WeylElement>> {
        Ok(self.levels(TreeKind::Parabolic(*ctx)).flatten().collect())
    }

    /// Minimal-length coset representatives `W^J`, sorted by length.
    pub fn quotient_representatives(&self, ctx: &ParabolicContext) -> Vec<WeylElement> {
        self.quotient_levels(ctx).flatten().collect()
    }

    /// `W^J` one length at a time.
    pub fn quotient_levels<'a>(
        &'a self,
        ctx: &ParabolicContext,
    ) -> impl Iterator<Item = Vec<WeylElement>> + 'a {
        self.levels(TreeKind::Quotient(*ctx))
    }

    /// Level-by-level walk of a spanning tree in which the parent of `x` is
    /// `s_m x` for the smallest left descent `m` of `x`. Every element is
    /// produced exactly once without a seen-set.
    fn levels(&self, kind: TreeKind) -> Levels<'_> {
        Levels {
            group: self,
            kind,
            current: Some(vec![self.identity()]),
        }
    }

    fn children(&self, w: &WeylElement, kind: TreeKind) -> Vec<WeylElement> {
        let mut out = Vec::new();
        for j in 0..self.rank() {
            if w.rho[j] <= 0 {
                continue;
            }
            if let TreeKind::Parabolic(ctx) = kind {
                if !ctx.contains(j) {
                    continue;
                }
            }
            // j is the smallest left descent of s_j w iff no smaller k is one.
            let x = self.mul_gen_left(w, j);
            if x.first_left_descent() != Some(j) {
                continue;
            }
            if let TreeKind::Quotient(ctx) = kind {
                if !ctx.is_minimal_representative(&x) {
                    continue;
                }
            }
            out.push(x);
        }
        out
    }
}

struct Levels<'a> {
    group: &'a WeylGroup,
    kind: TreeKind,
    current: Option<Vec<WeylElement>>,
}

impl Iterator for Levels<'_> {
    type Item = Vec<WeylElement>;

    fn next(&mut self) -> Option<Vec<WeylElement>> {
        let level = self.current.take()?;
        if level.is_empty() {
            return None;
        }
        let (group, kind) = (self.group, self.kind);
        let next: Vec<WeylElement> = level
            .par_iter()
            .flat_map_iter(|w| group.children(w, kind))
            .collect();
        self.current = Some(next);
        Some(level)
    }
}

/// Sort by length, then lexicographically by the canonical reduced word.
pub fn sort_canonically(group: &WeylGroup, elements: &mut [WeylElement]) {
    let mut keyed: Vec<(usize, ReducedWord, WeylElement)> = elements
        .iter()
        .map(|w| (w.length(), group.reduced_word(w), w.clone()))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    for (slot, (_, _, w)) in elements.iter_mut().zip(keyed) {
        *slot = w;
    }
}
