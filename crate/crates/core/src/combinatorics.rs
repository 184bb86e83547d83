//! Partitions, skew shapes, ribbons, compositions and descent-set bookkeeping.
//!
//! Row indices are 0-based in the API (`row_len(0)` is the top row). Integer
//! sets that index descents, generators `s_i`, or row pairs are 1-based, since
//! they are compared against descent sets of tableaux and words.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type IndexSet = BTreeSet<usize>;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((1..=width).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.0[i] <= self.0[i])
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions of `n` with at most `max_len` parts.
    pub fn all_with_max_len(n: usize, max_len: usize) -> Vec<Partition> {
        Partition::all(n).into_iter().filter(|p| p.len() <= max_len).collect()
    }

    /// Part vector padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        (0..n).map(|i| self.part(i)).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// A sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Sorting the parts gives the partition with the same multiset of parts.
    pub fn sorted(&self) -> Partition {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }
}

/// The cells of `outer` not in `inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer: outer.0, inner: inner.0 });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn from_parts(outer: &[usize], inner: &[usize]) -> Result<Self> {
        SkewShape::new(Partition::new(outer.to_vec())?, Partition::new(inner.to_vec())?)
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of rows of the outer partition, ℓ(λ).
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn row_len(&self, i: usize) -> usize {
        self.outer.part(i) - self.inner.part(i)
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }

    /// Cells as `(row, column)`, both 0-based, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.rows())
            .flat_map(|i| (self.inner.part(i)..self.outer.part(i)).map(move |c| (i, c)))
            .collect()
    }

    /// Rows with at least one cell, as a 1-based inclusive range `[a, b]`.
    pub fn support(&self) -> Option<(usize, usize)> {
        let nonempty: Vec<usize> = (0..self.rows()).filter(|&i| self.row_len(i) > 0).collect();
        Some((*nonempty.first()? + 1, *nonempty.last()? + 1))
    }

    /// Edge-connectedness of the cell set; the empty shape is not connected.
    pub fn is_connected(&self) -> bool {
        let Some((a, b)) = self.support() else { return false };
        (a - 1..b - 1).all(|i| self.row_len(i) > 0 && self.inner.part(i) < self.outer.part(i + 1))
            && self.row_len(b - 1) > 0
    }

    /// Whether rows `a, a+1, a+2` (1-based) contain a 3×2 block of cells.
    pub fn has_3x2_block_at(&self, a: usize) -> bool {
        a >= 1 && self.outer.part(a + 1) >= self.inner.part(a - 1) + 2
    }

    pub fn avoids_3x2(&self) -> bool {
        (1..=self.rows()).all(|a| !self.has_3x2_block_at(a))
    }

    pub fn is_ribbon(&self) -> bool {
        self.is_connected()
            && (0..self.rows()).all(|i| self.outer.part(i + 1) <= self.inner.part(i) + 1)
    }

    fn partial_sum(&self, i: usize) -> usize {
        (0..i).map(|j| self.row_len(j)).sum()
    }

    fn require_ribbon(&self) -> Result<()> {
        if self.is_ribbon() {
            Ok(())
        } else {
            Err(Error::NotRibbon(self.to_string()))
        }
    }

    /// Labelling cells from the top-right, `i` is a descent when cell `i+1`
    /// sits directly below cell `i`.
    pub fn ribbon_descents(&self) -> Result<IndexSet> {
        self.require_ribbon()?;
        let (a, b) = self.support().expect("ribbons are nonempty");
        Ok((a..b).map(|i| self.partial_sum(i)).collect())
    }

    /// `[m−1]` minus the descents.
    pub fn ribbon_nondescents(&self) -> Result<IndexSet> {
        let des = self.ribbon_descents()?;
        Ok((1..self.size()).filter(|i| !des.contains(i)).collect())
    }

    /// The same ribbon translated so its rows are exactly `1..=ℓ` and its
    /// lowest row starts in the first column.
    pub fn normalized_ribbon(&self) -> Result<SkewShape> {
        ribbon_from_descents(self.size(), &self.ribbon_descents()?)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |p: &Partition| p.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let outer = if self.outer.is_empty() { "0".to_string() } else { join(&self.outer) };
        if self.inner.is_empty() {
            write!(f, "{outer}")
        } else {
            write!(f, "{outer}/{}", join(&self.inner))
        }
    }
}

fn check_subset(set: &IndexSet, bound: usize) -> Result<()> {
    if set.iter().any(|&i| i == 0 || i > bound) {
        return Err(Error::SetOutOfRange { set: set.iter().copied().collect(), bound });
    }
    Ok(())
}

/// The ribbon of size `m`, with rows exactly `1..=|D|+1`, whose descent set is `D`.
pub fn ribbon_from_descents(m: usize, descents: &IndexSet) -> Result<SkewShape> {
    if m == 0 {
        return Err(Error::InvalidParam("ribbons have at least one cell".into()));
    }
    check_subset(descents, m - 1)?;
    let rows = comp_of(descents, m)?.0;
    let n = rows.len();
    let mut outer = vec![0; n];
    let mut inner = vec![0; n];
    outer[n - 1] = rows[n - 1];
    for i in (0..n - 1).rev() {
        inner[i] = outer[i + 1] - 1;
        outer[i] = inner[i] + rows[i];
    }
    SkewShape::from_parts(&outer, &inner)
}

/// Partial-sum relabelling `i ↦ Σ_{j≤i} (λ_j − μ_j)`.
///
/// Indices past the last row map to `|R|`, which lies outside `[|R|−1]`;
/// callers that need descent positions discard it.
pub fn d_of(set: &IndexSet, r: &SkewShape) -> Result<IndexSet> {
    r.require_ribbon()?;
    Ok(set.iter().map(|&i| r.partial_sum(i)).collect())
}

/// The ribbon `R_I` with descent set `d([n−1]∖I, R)`.
pub fn ribbon_r_i(r: &SkewShape, set: &IndexSet, n: usize) -> Result<SkewShape> {
    r.require_ribbon()?;
    if r.rows() > n {
        return Err(Error::TooManyRows { rows: r.rows(), n });
    }
    check_subset(set, n.saturating_sub(1))?;
    let m = r.size();
    let complement: IndexSet = (1..n).filter(|i| !set.contains(i)).collect();
    let des: IndexSet = d_of(&complement, r)?.into_iter().filter(|&d| d >= 1 && d < m).collect();
    ribbon_from_descents(m, &des)
}

/// Successive differences of `A ∪ {0, n}`.
pub fn comp_of(set: &IndexSet, n: usize) -> Result<Composition> {
    check_subset(set, n.saturating_sub(1))?;
    let mut points = vec![0];
    points.extend(set.iter().copied());
    points.push(n);
    Composition::new(points.windows(2).map(|w| w[1] - w[0]).collect())
}

/// Every 3×2 block in some shape, spanning rows `a..a+2`, is matched by a
/// shape that is empty in one of those rows. Rows past a shape's length count
/// as empty.
pub fn essentially_avoids_3x2(shapes: &[SkewShape]) -> bool {
    shapes.iter().all(|t| {
        (1..=t.rows()).filter(|&a| t.has_3x2_block_at(a)).all(|a| {
            shapes.iter().any(|s| (a..a + 3).any(|b| s.row_len(b - 1) == 0))
        })
    })
}

/// All `2^{m−1}` ribbons of size `m` in normal position, ordered by the
/// bitmask of their descent sets.
pub fn all_ribbons(m: usize) -> Vec<SkewShape> {
    (0u64..1 << (m - 1))
        .map(|mask| {
            let des: IndexSet = (1..m).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            ribbon_from_descents(m, &des).expect("descent sets are in range")
        })
        .collect()
}

/// Skew shapes of size exactly `size` with at most `max_rows` rows, in normal
/// position: top and bottom rows nonempty, bottom row starting in the first
/// column, and no cell right of column `size`. Interior empty rows are allowed.
pub fn all_skew_shapes(size: usize, max_rows: usize) -> Vec<SkewShape> {
    fn rec(
        max_rows: usize,
        remaining: usize,
        outer: &mut Vec<usize>,
        inner: &mut Vec<usize>,
        out: &mut Vec<SkewShape>,
    ) {
        let prev_o = *outer.last().expect("seeded");
        let prev_i = *inner.last().expect("seeded");
        if remaining <= prev_o {
            outer.push(remaining);
            inner.push(0);
            out.push(SkewShape::from_parts(outer, inner).expect("built in order"));
            outer.pop();
            inner.pop();
        }
        if outer.len() + 1 >= max_rows {
            return;
        }
        for o in 0..=prev_o {
            for i in 0..=o.min(prev_i) {
                if o - i >= remaining {
                    continue;
                }
                outer.push(o);
                inner.push(i);
                rec(max_rows, remaining - (o - i), outer, inner, out);
                outer.pop();
                inner.pop();
            }
        }
    }
    let mut out = Vec::new();
    if size == 0 || max_rows == 0 {
        return out;
    }
    for o in 1..=size {
        for i in 0..o {
            let len = o - i;
            if len == size && i == 0 {
                out.push(SkewShape::from_parts(&[o], &[]).expect("single row"));
            }
            if len < size && max_rows > 1 {
                rec(max_rows, size - len, &mut vec![o], &mut vec![i], &mut out);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn parse_list(text: &str, offset: usize) -> Result<Vec<usize>> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    let mut pos = offset;
    let mut out = Vec::new();
    for piece in text.split(',') {
        let value = piece.trim();
        let lead = piece.len() - piece.trim_start().len();
        out.push(value.parse::<usize>().map_err(|_| Error::Parse {
            pos: pos + lead,
            msg: format!("expected a nonnegative integer, found {value:?}"),
        })?);
        pos += piece.len() + 1;
    }
    Ok(out)
}

/// Parses `"7,6,5,2,2/5,1,1"`; the `/inner` part is optional.
pub fn parse_shape(text: &str) -> Result<SkewShape> {
    parse_shape_at(text, 0)
}

fn parse_shape_at(text: &str, offset: usize) -> Result<SkewShape> {
    let (outer_text, inner_text, inner_offset) = match text.find('/') {
        Some(slash) => (&text[..slash], &text[slash + 1..], offset + slash + 1),
        None => (text, "", offset + text.len()),
    };
    let outer = parse_list(outer_text, offset)?;
    let inner = parse_list(inner_text, inner_offset)?;
    let outer = Partition::new(outer.clone())
        .map_err(|_| Error::Parse { pos: offset, msg: format!("{outer:?} is not a partition") })?;
    let inner = Partition::new(inner.clone()).map_err(|_| Error::Parse {
        pos: inner_offset,
        msg: format!("{inner:?} is not a partition"),
    })?;
    SkewShape::new(outer, inner).map_err(|e| Error::Parse { pos: offset, msg: e.to_string() })
}

/// Parses a `;`-separated list of shapes.
pub fn parse_shapes(text: &str) -> Result<Vec<SkewShape>> {
    let mut offset = 0;
    let mut out = Vec::new();
    for piece in text.split(';') {
        out.push(parse_shape_at(piece, offset)?);
        offset += piece.len() + 1;
    }
    Ok(out)
}

/// Parses `"1,4"` (or the empty string) into a set.
pub fn parse_set(text: &str) -> Result<IndexSet> {
    Ok(parse_list(text, 0)?.into_iter().collect())
}
