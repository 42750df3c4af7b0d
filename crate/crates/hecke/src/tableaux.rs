//! Partitions, double-partitions and standard double-tableaux, together with
//! the total order on shapes and the signs `ν`, `ν̃`.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("shape {0} is not self-transpose")]
    NotSelfTranspose(String),
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    BadParts(Vec<usize>),
    #[error("cannot parse shape {0:?}")]
    Parse(String),
}

/// An integer partition, parts weakly decreasing and positive.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition, TableauError> {
        if parts.iter().any(|&x| x == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauError::BadParts(parts));
        }
        Ok(Partition { parts })
    }

    /// Panicking constructor for literals.
    pub fn of(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).expect("valid partition")
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    pub fn row(k: usize) -> Partition {
        if k == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![k] }
        }
    }

    pub fn column(k: usize) -> Partition {
        Partition { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn transpose(&self) -> Partition {
        let w = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (0..w)
                .map(|c| self.parts.iter().filter(|&&x| x > c).count())
                .collect(),
        }
    }

    pub fn is_self_transpose(&self) -> bool {
        *self == self.transpose()
    }

    /// `[a, 1^b]`; the empty partition counts as a hook.
    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&x| x == 1)
    }

    pub fn is_row(&self) -> bool {
        self.parts.len() <= 1
    }

    pub fn is_column(&self) -> bool {
        self.parts.iter().all(|&x| x == 1)
    }

    /// `b(μ) = max{i : μ_i >= i}`.
    pub fn diagonal_size(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .filter(|(i, &x)| x > *i)
            .count()
    }

    /// Cells `(row, col)` in row-reading order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
            .collect()
    }

    /// Rows whose last box is removable.
    pub fn corner_rows(&self) -> Vec<usize> {
        (0..self.parts.len())
            .filter(|&i| i + 1 == self.parts.len() || self.parts[i] > self.parts[i + 1])
            .collect()
    }

    /// All partitions obtained by removing one box.
    pub fn remove_one(&self) -> Vec<Partition> {
        let mut out: Vec<Partition> = self
            .corner_rows()
            .into_iter()
            .map(|i| {
                let mut p = self.parts.clone();
                p[i] -= 1;
                if p[i] == 0 {
                    p.pop();
                }
                Partition { parts: p }
            })
            .collect();
        out.sort();
        out
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.parts.len() <= self.parts.len()
            && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = TableauError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| TableauError::Parse(s.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| TableauError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

/// Partitions of `r` in reverse lexicographic order, `[r]` first.
pub fn partitions_revlex(r: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            go(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r, r, &mut Vec::new(), &mut out);
    out
}

/// The total order on partitions of `r`: `[r]`, its transpose, then each
/// remaining non-self-transpose partition followed by its transpose, then
/// the self-transpose partitions.
pub fn partition_order(r: usize) -> Vec<Partition> {
    let all = partitions_revlex(r);
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(all.len());
    for p in &all {
        if seen.contains(p) || p.is_self_transpose() {
            continue;
        }
        let t = p.transpose();
        seen.insert(p.clone());
        seen.insert(t.clone());
        out.push(p.clone());
        out.push(t);
    }
    out.extend(all.into_iter().filter(|p| p.is_self_transpose()));
    out
}

type RankTable = Arc<HashMap<Partition, usize>>;

fn rank_table(r: usize) -> RankTable {
    static TABLES: OnceLock<Mutex<HashMap<usize, RankTable>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = tables.lock().unwrap().get(&r) {
        return t.clone();
    }
    let t: RankTable = Arc::new(
        partition_order(r)
            .into_iter()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect(),
    );
    tables.lock().unwrap().insert(r, t.clone());
    t
}

/// Position of `p` in [`partition_order`] of its size.
pub fn partition_rank(p: &Partition) -> usize {
    rank_table(p.size())[p]
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| partition_rank(self).cmp(&partition_rank(other)))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An ordered pair of partitions.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "(Partition, Partition)", from = "(Partition, Partition)")]
pub struct DoublePartition {
    pub left: Partition,
    pub right: Partition,
}

impl From<DoublePartition> for (Partition, Partition) {
    fn from(d: DoublePartition) -> Self {
        (d.left, d.right)
    }
}

impl From<(Partition, Partition)> for DoublePartition {
    fn from((left, right): (Partition, Partition)) -> Self {
        DoublePartition { left, right }
    }
}

impl DoublePartition {
    pub fn new(left: Partition, right: Partition) -> DoublePartition {
        DoublePartition { left, right }
    }

    /// Literal constructor, e.g. `DoublePartition::of(&[2, 1], &[1])`.
    pub fn of(left: &[usize], right: &[usize]) -> DoublePartition {
        DoublePartition::new(Partition::of(left), Partition::of(right))
    }

    pub fn n(&self) -> usize {
        self.left.size() + self.right.size()
    }

    /// `λ' = (λ₂', λ₁')`.
    pub fn transpose(&self) -> DoublePartition {
        DoublePartition::new(self.right.transpose(), self.left.transpose())
    }

    /// `(λ₂, λ₁)`.
    pub fn swap(&self) -> DoublePartition {
        DoublePartition::new(self.right.clone(), self.left.clone())
    }

    /// `(λ₁', λ₂')`.
    pub fn conj_components(&self) -> DoublePartition {
        DoublePartition::new(self.left.transpose(), self.right.transpose())
    }

    pub fn has_empty_component(&self) -> bool {
        self.left.is_empty() || self.right.is_empty()
    }

    /// `Some(1)` for `([1^(n-r)],[r])`, `Some(2)` for `([r],[1^(n-r)])`.
    /// `([1],[1])` reports family 1.
    pub fn hook_family(&self) -> Option<u8> {
        if self.has_empty_component() {
            return None;
        }
        if self.left.is_column() && self.right.is_row() {
            Some(1)
        } else if self.left.is_row() && self.right.is_column() {
            Some(2)
        } else {
            None
        }
    }

    pub fn is_hook(&self) -> bool {
        self.hook_family().is_some()
    }

    /// Number of standard double-tableaux.
    pub fn dim(&self) -> u128 {
        binomial(self.n(), self.left.size())
            * count_standard(&self.left)
            * count_standard(&self.right)
    }

    /// Shapes obtained by removing one box from either component, sorted.
    pub fn branch_candidates(&self) -> Vec<DoublePartition> {
        let mut out: Vec<DoublePartition> = self
            .left
            .remove_one()
            .into_iter()
            .map(|l| DoublePartition::new(l, self.right.clone()))
            .chain(
                self.right
                    .remove_one()
                    .into_iter()
                    .map(|r| DoublePartition::new(self.left.clone(), r)),
            )
            .collect();
        out.sort();
        out
    }
}

impl Ord for DoublePartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| self.left.size().cmp(&other.left.size()))
            .then_with(|| self.left.cmp(&other.left))
            .then_with(|| self.right.cmp(&other.right))
    }
}

impl PartialOrd for DoublePartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DoublePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.left, self.right)
    }
}

impl fmt::Debug for DoublePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for DoublePartition {
    type Err = TableauError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || TableauError::Parse(s.to_string());
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(bad)?;
        let split = inner.find(']').ok_or_else(bad)?;
        let (a, b) = inner.split_at(split + 1);
        let b = b.trim().strip_prefix(',').ok_or_else(bad)?;
        Ok(DoublePartition::new(a.parse()?, b.parse()?))
    }
}

/// All double-partitions of `n` in increasing order.
pub fn double_partitions(n: usize) -> Vec<DoublePartition> {
    let mut out = Vec::new();
    for r in 0..=n {
        for l in partition_order(r) {
            for rt in partition_order(n - r) {
                out.push(DoublePartition::new(l.clone(), rt));
            }
        }
    }
    out
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Number of standard Young tableaux of shape `μ`, by removing corners.
pub fn count_standard(mu: &Partition) -> u128 {
    static MEMO: OnceLock<Mutex<HashMap<Partition, u128>>> = OnceLock::new();
    fn go(mu: &Partition, memo: &mut HashMap<Partition, u128>) -> u128 {
        if mu.size() <= 1 {
            return 1;
        }
        if let Some(&v) = memo.get(mu) {
            return v;
        }
        let v = mu.remove_one().iter().map(|m| go(m, memo)).sum();
        memo.insert(mu.clone(), v);
        v
    }
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = memo.lock().unwrap();
    go(mu, &mut guard)
}

/// Position of one entry: component 1 (left) or 2 (right), 0-based row and column.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub comp: u8,
    pub row: u8,
    pub col: u8,
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.comp, self.row, self.col)
    }
}

impl Cell {
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// A standard filling of a double-partition; `placement[i-1]` holds entry `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DoubleTableau {
    pub placement: Vec<Cell>,
}

impl fmt::Debug for DoubleTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.placement)
    }
}

impl DoubleTableau {
    pub fn n(&self) -> usize {
        self.placement.len()
    }

    /// Entry `i` (1-based).
    pub fn cell(&self, i: usize) -> Cell {
        self.placement[i - 1]
    }

    pub fn shape(&self) -> DoublePartition {
        let mut rows: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
        for c in &self.placement {
            let v = &mut rows[(c.comp - 1) as usize];
            if v.len() <= c.row as usize {
                v.resize(c.row as usize + 1, 0);
            }
            v[c.row as usize] += 1;
        }
        let [l, r] = rows;
        DoublePartition::new(Partition { parts: l }, Partition { parts: r })
    }

    /// Swap entries `i` and `i+1`; `None` if the result is not standard.
    pub fn swap(&self, i: usize) -> Option<DoubleTableau> {
        let (a, b) = (self.placement[i - 1], self.placement[i]);
        if a.comp == b.comp && (a.row == b.row || a.col == b.col) {
            return None;
        }
        let mut p = self.placement.clone();
        p.swap(i - 1, i);
        Some(DoubleTableau { placement: p })
    }

    /// `𝕋' = (𝕋₂', 𝕋₁')`.
    pub fn transpose(&self) -> DoubleTableau {
        DoubleTableau {
            placement: self
                .placement
                .iter()
                .map(|c| Cell {
                    comp: 3 - c.comp,
                    row: c.col,
                    col: c.row,
                })
                .collect(),
        }
    }

    /// `σ(𝕋) = (𝕋₂, 𝕋₁)`.
    pub fn sigma(&self) -> DoubleTableau {
        DoubleTableau {
            placement: self
                .placement
                .iter()
                .map(|c| Cell {
                    comp: 3 - c.comp,
                    ..*c
                })
                .collect(),
        }
    }

    /// `(𝕋₁', 𝕋₂')`.
    pub fn conj_components(&self) -> DoubleTableau {
        self.transpose().sigma()
    }

    pub fn is_standard(&self) -> bool {
        let mut seen: HashMap<(u8, u8, u8), usize> = HashMap::new();
        for (i, c) in self.placement.iter().enumerate() {
            if seen.insert((c.comp, c.row, c.col), i).is_some() {
                return false;
            }
        }
        for (i, c) in self.placement.iter().enumerate() {
            if c.col > 0 && seen.get(&(c.comp, c.row, c.col - 1)).map_or(true, |&j| j > i) {
                return false;
            }
            if c.row > 0 && seen.get(&(c.comp, c.row - 1, c.col)).map_or(true, |&j| j > i) {
                return false;
            }
        }
        true
    }
}

/// Standard double-tableaux of `shape` in lexicographic placement order.
pub fn standard_tableaux(shape: &DoublePartition) -> Vec<DoubleTableau> {
    let n = shape.n();
    let shapes = [shape.left.parts().to_vec(), shape.right.parts().to_vec()];
    let mut filled: [Vec<usize>; 2] = [vec![0; shapes[0].len()], vec![0; shapes[1].len()]];
    let mut cur = Vec::with_capacity(n);
    let mut out = Vec::new();

    fn go(
        shapes: &[Vec<usize>; 2],
        filled: &mut [Vec<usize>; 2],
        cur: &mut Vec<Cell>,
        n: usize,
        out: &mut Vec<DoubleTableau>,
    ) {
        if cur.len() == n {
            out.push(DoubleTableau {
                placement: cur.clone(),
            });
            return;
        }
        for comp in 0..2 {
            for row in 0..shapes[comp].len() {
                let col = filled[comp][row];
                if col >= shapes[comp][row] {
                    continue;
                }
                if row > 0 && filled[comp][row - 1] <= col {
                    continue;
                }
                filled[comp][row] += 1;
                cur.push(Cell {
                    comp: comp as u8 + 1,
                    row: row as u8,
                    col: col as u8,
                });
                go(shapes, filled, cur, n, out);
                cur.pop();
                filled[comp][row] -= 1;
            }
        }
    }
    go(&shapes, &mut filled, &mut cur, n, &mut out);
    out
}

/// Index of each tableau in a basis list.
pub fn tableau_index(tabs: &[DoubleTableau]) -> HashMap<DoubleTableau, usize> {
    tabs.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect()
}

/// Row-reading filling of a single partition placed in component `comp`.
pub fn row_reading(mu: &Partition, comp: u8) -> Vec<Cell> {
    mu.cells()
        .into_iter()
        .map(|(r, c)| Cell {
            comp,
            row: r as u8,
            col: c as u8,
        })
        .collect()
}

/// `(-1)^(row inversions + column inversions)` of any standard tableau of
/// shape `μ`; equals `ν(μ)` on self-transpose shapes.
pub fn shape_sign(mu: &Partition) -> i8 {
    let cells = row_reading(mu, 1);
    let mut inv = 0usize;
    for i in 0..cells.len() {
        for j in i + 1..cells.len() {
            if cells[i].row > cells[j].row {
                inv += 1;
            }
            if cells[i].col > cells[j].col {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn sign_pow(e: usize) -> i8 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `ν(μ) = (-1)^((|μ| - b(μ))/2)` for self-transpose `μ`.
pub fn nu(mu: &Partition) -> Result<i8, TableauError> {
    if !mu.is_self_transpose() {
        return Err(TableauError::NotSelfTranspose(mu.to_string()));
    }
    Ok(sign_pow((mu.size() - mu.diagonal_size()) / 2))
}

/// The constant value of `ω(𝕋)ω(𝕋')` on the tableaux of `λ`.
pub fn transpose_sign(lam: &DoublePartition) -> i8 {
    let r = lam.left.size();
    shape_sign(&lam.left) * shape_sign(&lam.right) * sign_pow(r * (lam.n() - r))
}

/// `ν̃(λ)`; defined when `λ = λ'` or both components are self-transpose.
pub fn nu_tilde_b(lam: &DoublePartition) -> Result<i8, TableauError> {
    if *lam != lam.transpose()
        && !(lam.left.is_self_transpose() && lam.right.is_self_transpose())
    {
        return Err(TableauError::NotSelfTranspose(lam.to_string()));
    }
    Ok(transpose_sign(lam))
}

/// Whether `λ` is a type-D label, i.e. `λ₁ >= λ₂`.
pub fn is_d_normalized(lam: &DoublePartition) -> bool {
    lam.left >= lam.right
}

/// `(λ₁,λ₂)` reordered so that the larger component comes first.
pub fn d_normalize(lam: &DoublePartition) -> DoublePartition {
    if is_d_normalized(lam) {
        lam.clone()
    } else {
        lam.swap()
    }
}

/// Whether `φ(𝕋) = 𝕋'` (as opposed to `σ(𝕋')`) on the tableaux of `λ`.
pub fn phi_is_transpose(lam: &DoublePartition) -> bool {
    lam.right.transpose() > lam.left.transpose()
}

/// `φ(λ)`: `λ'` when `λ₂' > λ₁'`, else `(λ₁', λ₂')`.
pub fn phi_d(lam: &DoublePartition) -> DoublePartition {
    if phi_is_transpose(lam) {
        lam.transpose()
    } else {
        lam.conj_components()
    }
}

/// `φ` on tableaux of a normalized label.
pub fn phi_tableau(t: &DoubleTableau, lam: &DoublePartition) -> DoubleTableau {
    if phi_is_transpose(lam) {
        t.transpose()
    } else {
        t.conj_components()
    }
}

/// The constant value of `ω(𝕋)ω(φ(𝕋))` on the tableaux of `λ`.
pub fn nu_tilde_d(lam: &DoublePartition) -> i8 {
    if phi_is_transpose(lam) {
        transpose_sign(lam)
    } else {
        shape_sign(&lam.left) * shape_sign(&lam.right)
    }
}

/// Orbit `{λ, λ', (λ₁',λ₂'), (λ₂,λ₁)}`, sorted and deduplicated.
pub fn klein_orbit(lam: &DoublePartition) -> Vec<DoublePartition> {
    let mut v = vec![
        lam.clone(),
        lam.transpose(),
        lam.conj_components(),
        lam.swap(),
    ];
    v.sort();
    v.dedup();
    v
}

/// `μ < μ'` and `μ < (μ₁', μ₂')`.
pub fn satisfies_star(mu: &DoublePartition) -> bool {
    *mu < mu.transpose() && *mu < mu.conj_components()
}

/// The orbit members satisfying the order condition.
pub fn star_witnesses(lam: &DoublePartition) -> Vec<DoublePartition> {
    klein_orbit(lam)
        .into_iter()
        .filter(satisfies_star)
        .collect()
}

/// Number of standard tableaux of the `k × k` square.
pub fn square_tableaux_count(k: usize) -> u128 {
    count_standard(&Partition::new(vec![k; k]).unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let p3: Vec<String> = partition_order(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(p3, ["[3]", "[1,1,1]", "[2,1]"]);
        let p4: Vec<String> = partition_order(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(p4, ["[4]", "[1,1,1,1]", "[3,1]", "[2,1,1]", "[2,2]"]);
        assert_eq!(double_partitions(3).len(), 10);
        assert_eq!(double_partitions(4).len(), 20);
        let d1 = double_partitions(1);
        assert_eq!(d1[0], DoublePartition::of(&[], &[1]));
    }

    #[test]
    fn signs() {
        assert_eq!(nu(&Partition::of(&[1])), Ok(1));
        assert_eq!(nu(&Partition::of(&[2, 2])), Ok(-1));
        assert_eq!(nu(&Partition::of(&[2, 1])), Ok(-1));
        assert!(nu(&Partition::of(&[3])).is_err());
        assert_eq!(nu_tilde_b(&DoublePartition::of(&[1], &[1])), Ok(-1));
        assert_eq!(nu_tilde_b(&DoublePartition::of(&[2, 2], &[1])), Ok(-1));
        assert_eq!(nu_tilde_b(&DoublePartition::of(&[1], &[2, 2])), Ok(-1));
    }

    #[test]
    fn phi_examples() {
        let l = DoublePartition::of(&[2, 1], &[1]);
        assert_eq!(phi_d(&l), l);
        let h = DoublePartition::of(&[1, 1, 1], &[1]);
        assert_eq!(phi_d(&h), DoublePartition::of(&[3], &[1]));
    }

    #[test]
    fn tableau_counts() {
        assert_eq!(standard_tableaux(&DoublePartition::of(&[1], &[1])).len(), 2);
        assert_eq!(standard_tableaux(&DoublePartition::of(&[2], &[2, 1])).len(), 20);
        assert_eq!(
            standard_tableaux(&DoublePartition::of(&[2, 1], &[2, 1])).len(),
            80
        );
        assert_eq!(square_tableaux_count(3), 42);
        assert_eq!(square_tableaux_count(4), 24024);
    }

    #[test]
    fn parse_roundtrip() {
        let l: DoublePartition = "([2,1],[])".parse().unwrap();
        assert_eq!(l, DoublePartition::of(&[2, 1], &[]));
        assert_eq!(l.to_string(), "([2,1],[])");
    }
}
