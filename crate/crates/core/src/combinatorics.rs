//! Partitions, hook shapes, hook tableaux and their entry operations,
//! permutations of finite integer sets, and the strict-partition families
//! `P(s; t; u)` with their counting functions.

use crate::{Error, Result};
use serde::de::Deserializer;
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// An integer partition: weakly decreasing parts, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, trimming trailing zeros.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col >= 1
            && cell.row <= self.parts.len()
            && cell.col <= self.parts[cell.row - 1] as usize
    }

    /// All cells of the diagram, row by row.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 1..=len as usize {
                out.push(Cell { row: i + 1, col: j });
            }
        }
        out
    }

    /// All partitions of `n`, in descending lexicographic order.
    pub fn partitions_of(n: u32) -> Vec<Partition> {
        fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            let top = remaining.min(max_part);
            for part in (1..=top).rev() {
                prefix.push(part);
                rec(remaining - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// A box of a Young diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

/// Arm, leg and hook length of a cell inside a partition diagram.
///
/// The arm counts cells strictly to the right in the same row, the leg counts
/// cells strictly below in the same column, and `hook = arm + leg + 1`.
pub fn cell_stats(lambda: &Partition, cell: Cell) -> Result<(usize, usize, usize)> {
    if !lambda.contains_cell(cell) {
        return Err(Error::CellOutsideDiagram {
            row: cell.row,
            col: cell.col,
        });
    }
    let arm = lambda.parts[cell.row - 1] as usize - cell.col;
    let leg = lambda
        .parts
        .iter()
        .skip(cell.row)
        .filter(|&&len| len as usize >= cell.col)
        .count();
    Ok((arm, leg, arm + leg + 1))
}

/// The hook shape with `n` boxes and first-column length `k`, i.e. the
/// partition `(n-k+1, 1^(k-1))`. `k = 1` is the degenerate single-row case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HookShape {
    n: usize,
    k: usize,
}

impl HookShape {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k == 0 || k > n {
            return Err(Error::InvalidHookShape { n, k });
        }
        Ok(HookShape { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn as_partition(&self) -> Partition {
        let mut parts = vec![(self.n - self.k + 1) as u32];
        parts.extend(std::iter::repeat_n(1, self.k - 1));
        Partition { parts }
    }

    /// Number of standard tableaux of this shape: `binomial(n-1, k-1)`.
    pub fn standard_tableau_count(&self) -> u64 {
        binomial(self.n as u64 - 1, self.k as u64 - 1)
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// A hook tableau `D(s_1,...,s_k; s_1,s_{k+1},...,s_n)`: the first column and
/// the first row are stored explicitly with the shared corner duplicated.
/// Entries are mutually distinct positive integers, not necessarily `1..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HookTableau {
    column: Vec<u32>,
    row: Vec<u32>,
}

impl HookTableau {
    pub fn new(column: impl Into<Vec<u32>>, row: impl Into<Vec<u32>>) -> Result<Self> {
        let column = column.into();
        let row = row.into();
        if column.is_empty() || row.is_empty() {
            return Err(Error::InvalidTableau(
                "column and row must be nonempty".into(),
            ));
        }
        if column[0] != row[0] {
            return Err(Error::InvalidTableau(
                "column and row must share the corner entry".into(),
            ));
        }
        if column.contains(&0) || row.contains(&0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        let mut seen = BTreeSet::new();
        for &e in column.iter().chain(row.iter().skip(1)) {
            if !seen.insert(e) {
                return Err(Error::InvalidTableau(format!("duplicate entry {e}")));
            }
        }
        Ok(HookTableau { column, row })
    }

    /// The standard tableau `T(1, s_2, ..., s_k)` with `n` boxes: the first
    /// column is the given sequence and the first row is `1` followed by the
    /// complement of the column in `{1..n}`, in increasing order.
    pub fn standard(n: usize, column: impl Into<Vec<u32>>) -> Result<Self> {
        let column = column.into();
        let mut row = vec![1u32];
        row.extend((2..=n as u32).filter(|e| !column.contains(e)));
        let t = HookTableau::new(column, row)?;
        if !t.is_standard() {
            return Err(Error::NotStandard);
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.column.len() + self.row.len() - 1
    }

    pub fn k(&self) -> usize {
        self.column.len()
    }

    pub fn shape(&self) -> HookShape {
        HookShape {
            n: self.n(),
            k: self.k(),
        }
    }

    pub fn corner(&self) -> u32 {
        self.column[0]
    }

    pub fn column_entries(&self) -> &[u32] {
        &self.column
    }

    pub fn row_entries(&self) -> &[u32] {
        &self.row
    }

    /// All entries in the order `s_1, ..., s_k, s_{k+1}, ..., s_n`
    /// (column first, then the row past the corner).
    pub fn entries(&self) -> Vec<u32> {
        let mut out = self.column.clone();
        out.extend_from_slice(&self.row[1..]);
        out
    }

    /// The entry set `mem(D)`.
    pub fn mem(&self) -> BTreeSet<u32> {
        self.entries().into_iter().collect()
    }

    pub fn contains(&self, entry: u32) -> bool {
        self.column.contains(&entry) || self.row.contains(&entry)
    }

    /// True iff the entries are a permutation of `1..n`, the corner is 1, the
    /// column increases downward and the row increases rightward.
    pub fn is_standard(&self) -> bool {
        let n = self.n() as u32;
        self.corner() == 1
            && self.column.windows(2).all(|w| w[0] < w[1])
            && self.row.windows(2).all(|w| w[0] < w[1])
            && self.mem() == (1..=n).collect()
    }

    /// The tableau `D^s` with entry `s` removed.
    ///
    /// A non-corner column entry is dropped from the column; a row entry is
    /// dropped from the row; removing the corner `s_1` (which needs `k >= 2`)
    /// promotes `s_2` to the corner, so the row keeps its remaining entries
    /// behind the new corner.
    pub fn remove_entry(&self, s: u32) -> Result<HookTableau> {
        if !self.contains(s) {
            return Err(Error::EntryNotInTableau(s));
        }
        if s == self.corner() {
            if self.k() < 2 {
                return Err(Error::CornerOfSingleRow);
            }
            let column = self.column[1..].to_vec();
            let mut row = vec![column[0]];
            row.extend_from_slice(&self.row[1..]);
            return HookTableau::new(column, row);
        }
        if self.column.contains(&s) {
            let column: Vec<u32> = self.column.iter().copied().filter(|&e| e != s).collect();
            HookTableau::new(column, self.row.clone())
        } else {
            let row: Vec<u32> = self.row.iter().copied().filter(|&e| e != s).collect();
            HookTableau::new(self.column.clone(), row)
        }
    }

    /// The tableau `(i,j)D`: entries `i` and `j` are swapped if both occur,
    /// one is replaced by the other if only one occurs, and the tableau is
    /// unchanged if neither occurs.
    pub fn transpose_entries(&self, i: u32, j: u32) -> Result<HookTableau> {
        if i == j {
            return Err(Error::EqualTransposition(i));
        }
        let swap = |e: u32| {
            if e == i {
                j
            } else if e == j {
                i
            } else {
                e
            }
        };
        HookTableau::new(
            self.column.iter().copied().map(swap).collect::<Vec<_>>(),
            self.row.iter().copied().map(swap).collect::<Vec<_>>(),
        )
    }
}

impl fmt::Display for HookTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_seq = |f: &mut fmt::Formatter<'_>, seq: &[u32]| -> fmt::Result {
            for (i, e) in seq.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            Ok(())
        };
        write!(f, "D(")?;
        fmt_seq(f, &self.column)?;
        write!(f, ";")?;
        fmt_seq(f, &self.row)?;
        write!(f, ")")
    }
}

/// Free-function form of [`HookTableau::transpose_entries`].
pub fn transpose_tableau(i: u32, j: u32, d: &HookTableau) -> Result<HookTableau> {
    d.transpose_entries(i, j)
}

/// All standard tableaux of the given hook shape: `T(1, s_2, ..., s_k)` with
/// `1 < s_2 < ... < s_k <= n`, in lexicographic order on `(s_2, ..., s_k)`.
pub fn standard_hook_tableaux(shape: HookShape) -> Vec<HookTableau> {
    let n = shape.n() as u32;
    let k = shape.k();
    let mut out = Vec::new();
    let mut column = vec![1u32];
    fn rec(n: u32, k: usize, column: &mut Vec<u32>, out: &mut Vec<HookTableau>) {
        if column.len() == k {
            out.push(HookTableau::standard(n as usize, column.clone()).expect("valid by choice"));
            return;
        }
        let lo = column.last().unwrap() + 1;
        for s in lo..=n {
            column.push(s);
            rec(n, k, column, out);
            column.pop();
        }
    }
    rec(n, k, &mut column, &mut out);
    out
}

/// A strictly decreasing sequence of nonnegative integers. Unlike
/// [`Partition`], a trailing zero part is meaningful and kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let parts = parts.into();
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidStrictPartition);
        }
        Ok(StrictPartition { parts })
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for StrictPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StrictPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        StrictPartition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// The set `P(s; t; u)`: strict partitions of size `s` with exactly `u` parts
/// `t >= mu_1 > ... > mu_u >= 0`, in descending lexicographic order.
///
/// For `u = 0` this is `[()]` when `s = 0` and empty otherwise.
pub fn strict_partitions(s: u32, t: u32, u: usize) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(u);
    fn rec(
        remaining: u32,
        max_part: i64,
        slots: usize,
        prefix: &mut Vec<u32>,
        out: &mut Vec<StrictPartition>,
    ) {
        if slots == 0 {
            if remaining == 0 {
                out.push(StrictPartition {
                    parts: prefix.clone(),
                });
            }
            return;
        }
        // After choosing the current part, the tail holds slots-1 strictly
        // decreasing values >= 0, so its sum is at least 0 + 1 + ... + (slots-2).
        let tail_min = ((slots - 1) * slots.saturating_sub(2) / 2) as u32;
        let hi = max_part.min(remaining as i64);
        for part in (0..=hi).rev() {
            let part = part as u32;
            // The tail needs slots-1 distinct values strictly below `part`.
            if (part as usize) < slots - 1 || remaining - part < tail_min {
                continue;
            }
            prefix.push(part);
            rec(remaining - part, part as i64 - 1, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    rec(s, t as i64, u, &mut prefix, &mut out);
    out
}

/// `p(s; t; u) = |P(s; t; u)|`, computed by the branching recurrence on
/// whether the first part equals `t` (independent of the enumeration).
pub fn count_p(s: u32, t: u32, u: usize) -> u64 {
    fn rec(s: i64, t: i64, u: usize) -> u64 {
        if u == 0 {
            return u64::from(s == 0);
        }
        if s < 0 || t < 0 {
            return 0;
        }
        // Either no part equals t (all parts <= t-1), or mu_1 = t.
        rec(s, t - 1, u) + rec(s - t, t - 1, u - 1)
    }
    rec(s as i64, t as i64, u)
}

/// `q(s; t; u) = p(s; t; u) - p(s; t-1; u)`, the count of partitions in
/// `P(s; t; u)` whose first part equals `t`. For `t = 0` there is no smaller
/// bound, and `q(s; 0; u) = p(s; 0; u)`.
pub fn count_q(s: u32, t: u32, u: usize) -> u64 {
    if t == 0 {
        count_p(s, 0, u)
    } else {
        count_p(s, t, u) - count_p(s, t - 1, u)
    }
}

/// The family `P(t; u)`: all strict partitions with `u` parts bounded by `t`,
/// enumerated by increasing size and within a size by the
/// [`strict_partitions`] order. This is the fixed basis-enumeration order.
pub fn strict_partition_family(t: u32, u: usize) -> Vec<StrictPartition> {
    if u == 0 {
        return vec![StrictPartition::empty()];
    }
    let max = (0..u as u32).map(|i| t - i).sum::<u32>();
    let min = (0..u as u32).sum::<u32>();
    (min..=max)
        .flat_map(|s| strict_partitions(s, t, u))
        .collect()
}

/// A permutation of a finite set of positive integers, stored as the sorted
/// mapping of its moved points (fixed points are implicit).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    moved: Vec<(u32, u32)>,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation { moved: Vec::new() }
    }

    /// The transposition `(i, j)`. Panics if `i == j`.
    pub fn transposition(i: u32, j: u32) -> Self {
        assert_ne!(i, j, "transposition entries must differ");
        let mut moved = vec![(i, j), (j, i)];
        moved.sort_unstable();
        Permutation { moved }
    }

    /// Builds a permutation from an explicit mapping; the mapping must be a
    /// bijection of its domain onto itself.
    pub fn from_map(map: &BTreeMap<u32, u32>) -> Result<Self> {
        let domain: BTreeSet<u32> = map.keys().copied().collect();
        let image: BTreeSet<u32> = map.values().copied().collect();
        if domain != image {
            return Err(Error::NotABijection);
        }
        let moved = map
            .iter()
            .filter(|(k, v)| k != v)
            .map(|(&k, &v)| (k, v))
            .collect();
        Ok(Permutation { moved })
    }

    pub fn is_identity(&self) -> bool {
        self.moved.is_empty()
    }

    pub fn apply(&self, x: u32) -> u32 {
        match self.moved.binary_search_by_key(&x, |&(k, _)| k) {
            Ok(idx) => self.moved[idx].1,
            Err(_) => x,
        }
    }

    /// Points not fixed by the permutation.
    pub fn support(&self) -> Vec<u32> {
        self.moved.iter().map(|&(k, _)| k).collect()
    }

    /// Composition `self . other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let mut keys: BTreeSet<u32> = other.moved.iter().map(|&(k, _)| k).collect();
        keys.extend(self.moved.iter().map(|&(k, _)| k));
        let moved = keys
            .into_iter()
            .map(|k| (k, self.apply(other.apply(k))))
            .filter(|(k, v)| k != v)
            .collect();
        Permutation { moved }
    }

    pub fn inverse(&self) -> Permutation {
        let mut moved: Vec<(u32, u32)> = self.moved.iter().map(|&(k, v)| (v, k)).collect();
        moved.sort_unstable();
        Permutation { moved }
    }

    /// Sign of the permutation: `(-1)^(moved points - cycles)`.
    pub fn sign(&self) -> i32 {
        let mut seen: BTreeSet<u32> = BTreeSet::new();
        let mut transpositions = 0usize;
        for &(start, _) in &self.moved {
            if seen.contains(&start) {
                continue;
            }
            let mut len = 0usize;
            let mut x = start;
            loop {
                seen.insert(x);
                len += 1;
                x = self.apply(x);
                if x == start {
                    break;
                }
            }
            transpositions += len - 1;
        }
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// All permutations of the given set (must have distinct elements).
    pub fn all_of(set: &[u32]) -> Vec<Permutation> {
        let base: Vec<u32> = set.to_vec();
        let mut images = base.clone();
        let mut out = Vec::new();
        fn heap(k: usize, images: &mut Vec<u32>, base: &[u32], out: &mut Vec<Permutation>) {
            if k <= 1 {
                let moved = base
                    .iter()
                    .zip(images.iter())
                    .filter(|(a, b)| a != b)
                    .map(|(&a, &b)| (a, b))
                    .collect::<Vec<_>>();
                let mut moved = moved;
                moved.sort_unstable();
                out.push(Permutation { moved });
                return;
            }
            for i in 0..k {
                heap(k - 1, images, base, out);
                if k.is_multiple_of(2) {
                    images.swap(i, k - 1);
                } else {
                    images.swap(0, k - 1);
                }
            }
        }
        heap(base.len(), &mut images, &base, &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moved.is_empty() {
            return write!(f, "id");
        }
        // Cycle notation.
        let mut seen = BTreeSet::new();
        for &(start, _) in &self.moved {
            if seen.contains(&start) {
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            loop {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                seen.insert(x);
                first = false;
                x = self.apply(x);
                if x == start {
                    break;
                }
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Permutation", 1)?;
        let map: BTreeMap<String, u32> = self
            .moved
            .iter()
            .map(|&(k, v)| (k.to_string(), v))
            .collect();
        st.serialize_field("map", &map)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cell_stats_on_a_printed_diagram() {
        let lambda = Partition::new(vec![4, 3, 1]).unwrap();
        assert_eq!(
            cell_stats(&lambda, Cell { row: 1, col: 1 }).unwrap(),
            (3, 2, 6)
        );
        assert_eq!(
            cell_stats(&lambda, Cell { row: 2, col: 3 }).unwrap(),
            (0, 0, 1)
        );
        let single = Partition::new(vec![1]).unwrap();
        assert_eq!(
            cell_stats(&single, Cell { row: 1, col: 1 }).unwrap(),
            (0, 0, 1)
        );
        assert_eq!(
            cell_stats(&lambda, Cell { row: 3, col: 2 }),
            Err(Error::CellOutsideDiagram { row: 3, col: 2 })
        );
    }

    #[test]
    fn hook_corner_stats() {
        for n in 2..=8 {
            for k in 1..=n {
                let shape = HookShape::new(n, k).unwrap();
                let (arm, leg, hook) =
                    cell_stats(&shape.as_partition(), Cell { row: 1, col: 1 }).unwrap();
                assert_eq!((arm, leg, hook), (n - k, k - 1, n));
            }
        }
    }

    #[test]
    fn partition_rejects_increasing_parts() {
        assert_eq!(Partition::new(vec![1, 2]), Err(Error::InvalidPartition));
        assert_eq!(Partition::new(vec![3, 0, 0]).unwrap().parts(), &[3]);
    }

    #[test]
    fn hook_shape_partition() {
        let shape = HookShape::new(6, 3).unwrap();
        assert_eq!(shape.as_partition().parts(), &[4, 1, 1]);
        assert_eq!(shape.as_partition().length(), 3);
        assert_eq!(shape.as_partition().size(), 6);
    }

    /// Brute-force standard tableau enumeration for an arbitrary shape:
    /// place every permutation of 1..n into the cells and keep the fillings
    /// that increase along rows and columns. Independent of the hook-specific
    /// constructor.
    fn standard_tableaux_brute(lambda: &Partition) -> Vec<Vec<(Cell, u32)>> {
        let cells = lambda.cells();
        let n = cells.len();
        let perms = Permutation::all_of(&(1..=n as u32).collect::<Vec<_>>());
        let mut out = Vec::new();
        for p in perms {
            let filling: Vec<(Cell, u32)> = cells
                .iter()
                .map(|&c| {
                    (
                        c,
                        p.apply((cells.iter().position(|&x| x == c).unwrap() + 1) as u32),
                    )
                })
                .collect();
            let value = |r: usize, c: usize| -> Option<u32> {
                filling
                    .iter()
                    .find(|(cell, _)| cell.row == r && cell.col == c)
                    .map(|&(_, v)| v)
            };
            let ok = filling.iter().all(|&(cell, v)| {
                let right = value(cell.row, cell.col + 1).is_none_or(|w| v < w);
                let below = value(cell.row + 1, cell.col).is_none_or(|w| v < w);
                right && below
            });
            if ok {
                out.push(filling);
            }
        }
        out
    }

    #[test]
    fn standard_hook_tableaux_match_brute_force() {
        for (n, k) in [(3, 2), (4, 2), (4, 3), (5, 3), (5, 4)] {
            let shape = HookShape::new(n, k).unwrap();
            let fast = standard_hook_tableaux(shape);
            let brute = standard_tableaux_brute(&shape.as_partition());
            assert_eq!(fast.len(), brute.len(), "count mismatch at ({n},{k})");
            assert_eq!(fast.len() as u64, shape.standard_tableau_count());
            // Each brute filling corresponds to one enumerated tableau.
            for filling in &brute {
                let mut column: Vec<(usize, u32)> = filling
                    .iter()
                    .filter(|(c, _)| c.col == 1)
                    .map(|&(c, v)| (c.row, v))
                    .collect();
                column.sort_unstable();
                let column: Vec<u32> = column.into_iter().map(|(_, v)| v).collect();
                assert!(fast.iter().any(|t| t.column_entries() == column));
            }
        }
    }

    #[test]
    fn standard_hook_tableaux_small_cases() {
        let ts = standard_hook_tableaux(HookShape::new(3, 2).unwrap());
        assert_eq!(ts.len(), 2);
        assert_eq!(ts[0].column_entries(), &[1, 2]);
        assert_eq!(ts[0].row_entries(), &[1, 3]);
        assert_eq!(ts[1].column_entries(), &[1, 3]);
        assert_eq!(ts[1].row_entries(), &[1, 2]);

        // Single row: exactly one tableau.
        let ts = standard_hook_tableaux(HookShape::new(4, 1).unwrap());
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].row_entries(), &[1, 2, 3, 4]);

        // eta(6,3) contains T(1,3,4) with first row (1,2,5,6).
        let ts = standard_hook_tableaux(HookShape::new(6, 3).unwrap());
        let t134 = ts
            .iter()
            .find(|t| t.column_entries() == [1, 3, 4])
            .expect("T(1,3,4) must be enumerated");
        assert_eq!(t134.row_entries(), &[1, 2, 5, 6]);
    }

    #[test]
    fn tableau_counts_match_hook_length_formula() {
        for n in 2..=8usize {
            for k in 2..=n {
                let shape = HookShape::new(n, k).unwrap();
                let lambda = shape.as_partition();
                let mut hooks_product: u128 = 1;
                for cell in lambda.cells() {
                    hooks_product *= cell_stats(&lambda, cell).unwrap().2 as u128;
                }
                let factorial: u128 = (1..=n as u128).product();
                assert_eq!(factorial % hooks_product, 0);
                assert_eq!(
                    (factorial / hooks_product) as u64,
                    standard_hook_tableaux(shape).len() as u64
                );
            }
        }
    }

    #[test]
    fn remove_entry_printed_examples() {
        // T(1,3,4) = D(1,3,4;1,2,5,6) with 6 boxes.
        let t = HookTableau::standard(6, vec![1, 3, 4]).unwrap();
        assert_eq!(t.row_entries(), &[1, 2, 5, 6]);

        let t1 = t.remove_entry(1).unwrap();
        assert_eq!(t1.column_entries(), &[3, 4]);
        assert_eq!(t1.row_entries(), &[3, 2, 5, 6]);
        assert_eq!(t1.shape(), HookShape::new(5, 2).unwrap());

        let t2 = t.remove_entry(2).unwrap();
        assert_eq!(t2.column_entries(), &[1, 3, 4]);
        assert_eq!(t2.row_entries(), &[1, 5, 6]);

        let t3 = t.remove_entry(3).unwrap();
        assert_eq!(t3.column_entries(), &[1, 4]);
        assert_eq!(t3.row_entries(), &[1, 2, 5, 6]);

        assert_eq!(t.remove_entry(9), Err(Error::EntryNotInTableau(9)));
    }

    #[test]
    fn remove_entry_shrinks_mem_by_one() {
        let t = HookTableau::standard(6, vec![1, 3, 4]).unwrap();
        for s in t.mem() {
            let reduced = t.remove_entry(s).unwrap();
            let mut expected = t.mem();
            expected.remove(&s);
            assert_eq!(reduced.mem(), expected);
            assert_eq!(reduced.n(), t.n() - 1);
        }
    }

    #[test]
    fn transpose_entries_cases() {
        let t = HookTableau::standard(3, vec![1, 2]).unwrap();
        let swapped = t.transpose_entries(1, 2).unwrap();
        assert_eq!(swapped.column_entries(), &[2, 1]);
        assert_eq!(swapped.row_entries(), &[2, 3]);

        // Entries absent: identity.
        assert_eq!(t.transpose_entries(7, 8).unwrap(), t);

        // One entry present: replacement.
        let replaced = t.transpose_entries(3, 9).unwrap();
        assert_eq!(replaced.row_entries(), &[1, 9]);

        assert_eq!(t.transpose_entries(2, 2), Err(Error::EqualTransposition(2)));
    }

    #[test]
    fn strict_partitions_examples() {
        let ps = strict_partitions(1, 2, 2);
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].parts(), &[1, 0]);
        assert_eq!(count_p(1, 2, 2), 1);

        // u = 0: singleton for s = 0, empty otherwise.
        assert_eq!(strict_partitions(0, 7, 0), vec![StrictPartition::empty()]);
        assert!(strict_partitions(5, 3, 0).is_empty());
        assert_eq!(count_p(0, 7, 0), 1);
        assert_eq!(count_p(5, 3, 0), 0);
    }

    #[test]
    fn strict_partition_enumeration_matches_counting() {
        for s in 0..=12 {
            for t in 0..=6 {
                for u in 0..=4 {
                    assert_eq!(
                        strict_partitions(s, t, u).len() as u64,
                        count_p(s, t, u),
                        "mismatch at ({s},{t},{u})"
                    );
                }
            }
        }
    }

    #[test]
    fn family_size_is_binomial() {
        for n in 2..=8u32 {
            for k in 2..=4.min(n) {
                let family = strict_partition_family(n - 2, k as usize - 1);
                assert_eq!(
                    family.len() as u64,
                    binomial(n as u64 - 1, k as u64 - 1),
                    "family size mismatch at ({n},{k})"
                );
            }
        }
    }

    #[test]
    fn family_respects_size_bounds() {
        // Every mu in P(n-2; k-1) has (k-1)(k-2)/2 <= |mu| <= (k-1)(n-k) + (k-1)(k-2)/2,
        // and sizes outside the window give empty P(s; n-2; k-1).
        for n in 3..=8u32 {
            for k in 2..=4.min(n) {
                let u = k as usize - 1;
                let lo = (k - 1) * (k - 2) / 2;
                let hi = (k - 1) * (n - k) + lo;
                for mu in strict_partition_family(n - 2, u) {
                    assert!(mu.size() >= lo && mu.size() <= hi);
                }
                if lo > 0 {
                    assert!(strict_partitions(lo - 1, n - 2, u).is_empty());
                }
                assert!(strict_partitions(hi + 1, n - 2, u).is_empty());
            }
        }
    }

    #[test]
    fn q_counts_partitions_with_maximal_first_part() {
        for s in 0..=10 {
            for t in 1..=5 {
                for u in 1..=3 {
                    let with_max = strict_partitions(s, t, u)
                        .iter()
                        .filter(|mu| mu.parts()[0] == t)
                        .count() as u64;
                    assert_eq!(count_q(s, t, u), with_max);
                }
            }
        }
    }

    #[test]
    fn family_order_for_two_rows_is_by_exponent() {
        let family = strict_partition_family(3, 1);
        let parts: Vec<u32> = family.iter().map(|mu| mu.parts()[0]).collect();
        assert_eq!(parts, vec![0, 1, 2, 3]);
    }

    #[test]
    fn permutation_basics() {
        let s = Permutation::transposition(1, 2);
        let t = Permutation::transposition(2, 3);
        assert_eq!(s.apply(1), 2);
        assert_eq!(s.apply(3), 3);
        assert_eq!(s.sign(), -1);
        assert_eq!(s.compose(&s), Permutation::identity());
        // (1 2)(2 3) maps 2 -> 3 -> ... apply right first: 2 -> 3, 3 -> 2 -> 1.
        let st = s.compose(&t);
        assert_eq!(st.apply(2), 3);
        assert_eq!(st.apply(3), 1);
        assert_eq!(st.apply(1), 2);
        assert_eq!(st.sign(), 1);
        assert_eq!(st.inverse().compose(&st), Permutation::identity());
    }

    #[test]
    fn all_permutations_of_a_set() {
        let perms = Permutation::all_of(&[2, 5, 7]);
        assert_eq!(perms.len(), 6);
        let evens = perms.iter().filter(|p| p.sign() == 1).count();
        assert_eq!(evens, 3);
        let distinct: BTreeSet<_> = perms.iter().cloned().collect();
        assert_eq!(distinct.len(), 6);
    }

    #[test]
    fn from_map_requires_bijection() {
        let mut map = BTreeMap::new();
        map.insert(1, 2);
        map.insert(2, 2);
        assert_eq!(Permutation::from_map(&map), Err(Error::NotABijection));
        let mut ok = BTreeMap::new();
        ok.insert(1, 2);
        ok.insert(2, 1);
        ok.insert(5, 5);
        let p = Permutation::from_map(&ok).unwrap();
        assert_eq!(p, Permutation::transposition(1, 2));
    }

    #[test]
    fn partitions_of_small_n() {
        assert_eq!(Partition::partitions_of(4).len(), 5);
        assert_eq!(Partition::partitions_of(8).len(), 22);
        let all = Partition::partitions_of(5);
        assert!(all.iter().all(|p| p.size() == 5));
    }

    #[test]
    fn tableau_serialization_shape() {
        let t = HookTableau::standard(6, vec![1, 3, 4]).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"{"column":[1,3,4],"row":[1,2,5,6]}"#);
        let back: HookTableau = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
    }
}
