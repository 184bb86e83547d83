//! Standard and semistandard tableaux, descent sets, RSK and words with a
//! prescribed descent set.

use std::collections::BTreeMap;
use std::fmt;

use crate::combinatorics::{IndexSet, Partition, SkewShape};
use crate::error::{Error, Result};

/// Default cap on the size of shapes whose standard tableaux are enumerated.
pub const SYT_SIZE_BOUND: usize = 10;

/// A filling of a skew shape, stored row by row over the cells of each row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Validates that rows weakly increase, columns strictly increase and
    /// entries are positive.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::NotStandard(msg));
        if rows.len() != shape.rows() {
            return bad(format!("{} rows for shape {shape}", rows.len()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(i) {
                return bad(format!("row {i} has {} entries for shape {shape}", row.len()));
            }
            if row.contains(&0) || row.windows(2).any(|w| w[0] > w[1]) {
                return bad(format!("row {i} = {row:?} is not weakly increasing and positive"));
            }
        }
        let t = Tableau { shape, rows };
        for (i, c) in t.shape.cells() {
            if i > 0 && c >= t.shape.inner().part(i - 1) && t.at(i - 1, c) >= t.at(i, c) {
                return bad(format!("column {c} does not strictly increase at row {i}"));
            }
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry in row `i`, absolute column `c` (both 0-based).
    pub fn at(&self, i: usize, c: usize) -> usize {
        self.rows[i][c - self.shape.inner().part(i)]
    }

    /// Row-major reading word, top row first.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn is_standard(&self) -> bool {
        let mut w = self.reading_word();
        w.sort_unstable();
        w.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Multiplicities of the entries `1..=n`.
    pub fn content(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for &v in self.rows.iter().flatten() {
            out[v - 1] += 1;
        }
        out
    }

    fn row_of(&self) -> Vec<usize> {
        let m = self.shape.size();
        let mut row = vec![0; m + 1];
        for (i, r) in self.rows.iter().enumerate() {
            for &v in r {
                row[v] = i;
            }
        }
        row
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            let pad = ".".repeat(self.shape.inner().part(i));
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{pad}{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Standard fillings of `shape`, sorted by reading word.
pub fn enumerate_syt(shape: &SkewShape) -> Result<Vec<Tableau>> {
    enumerate_syt_bounded(shape, SYT_SIZE_BOUND)
}

pub fn enumerate_syt_bounded(shape: &SkewShape, bound: usize) -> Result<Vec<Tableau>> {
    let m = shape.size();
    if m > bound {
        return Err(Error::BoundExceeded { what: "tableau size", value: m, bound });
    }
    fn rec(
        shape: &SkewShape,
        next: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if next > shape.size() {
            out.push(Tableau { shape: shape.clone(), rows: rows.clone() });
            return;
        }
        for i in 0..shape.rows() {
            let filled = rows[i].len();
            if filled == shape.row_len(i) {
                continue;
            }
            let c = shape.inner().part(i) + filled;
            let above_ok = i == 0 || {
                let inner_above = shape.inner().part(i - 1);
                c < inner_above || c - inner_above < rows[i - 1].len()
            };
            if above_ok {
                rows[i].push(next);
                rec(shape, next + 1, rows, out);
                rows[i].pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(shape, 1, &mut vec![Vec::new(); shape.rows()], &mut out);
    out.sort_by_cached_key(|t| t.reading_word());
    Ok(out)
}

/// `i` is a descent when `i+1` lies in a strictly lower row than `i`.
pub fn descents(t: &Tableau) -> Result<IndexSet> {
    if !t.is_standard() {
        return Err(Error::NotStandard(t.to_string()));
    }
    let row = t.row_of();
    Ok((1..t.shape.size()).filter(|&i| row[i + 1] > row[i]).collect())
}

/// Number of standard tableaux of shape `λ` with descent set exactly `set`.
pub fn f_count(lambda: &Partition, set: &IndexSet) -> Result<usize> {
    Ok(descent_distribution(lambda)?.get(set).copied().unwrap_or(0))
}

/// All descent sets of `SYT(λ)` with multiplicities.
pub fn descent_distribution(lambda: &Partition) -> Result<BTreeMap<IndexSet, usize>> {
    let mut out = BTreeMap::new();
    for t in enumerate_syt(&SkewShape::straight(lambda.clone()))? {
        *out.entry(descents(&t)?).or_insert(0) += 1;
    }
    Ok(out)
}

/// Content vectors (length `n`) of all semistandard fillings of `shape` with
/// entries in `1..=n`, one per tableau.
pub fn ssyt_contents(shape: &SkewShape, n: usize) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    for_each_ssyt(shape, n, |t| {
        let mut content = vec![0u16; n];
        for &v in t.iter().flatten() {
            content[v - 1] += 1;
        }
        out.push(content);
    });
    out
}

/// All semistandard tableaux of `shape` with entries at most `n`.
pub fn enumerate_ssyt(shape: &SkewShape, n: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_ssyt(shape, n, |rows| {
        out.push(Tableau { shape: shape.clone(), rows: rows.to_vec() });
    });
    out
}

fn for_each_ssyt(shape: &SkewShape, n: usize, mut visit: impl FnMut(&[Vec<usize>])) {
    fn rec(
        shape: &SkewShape,
        n: usize,
        cells: &[(usize, usize)],
        k: usize,
        rows: &mut Vec<Vec<usize>>,
        visit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        let Some(&(i, c)) = cells.get(k) else {
            visit(rows);
            return;
        };
        let left = rows[i].last().copied().unwrap_or(1);
        let above = if i > 0 && c >= shape.inner().part(i - 1) {
            rows[i - 1][c - shape.inner().part(i - 1)] + 1
        } else {
            1
        };
        for v in left.max(above)..=n {
            rows[i].push(v);
            rec(shape, n, cells, k + 1, rows, visit);
            rows[i].pop();
        }
    }
    let cells = shape.cells();
    rec(shape, n, &cells, 0, &mut vec![Vec::new(); shape.rows()], &mut visit);
}

/// Positions `i` (1-based) with `u_i > u_{i+1}`.
pub fn word_descents(u: &[usize]) -> IndexSet {
    (1..u.len()).filter(|&i| u[i - 1] > u[i]).collect()
}

/// Row-insertion RSK: the insertion tableau `P` and the standard recording
/// tableau `Q`.
pub fn rsk(u: &[usize]) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (pos, &letter) in u.iter().enumerate() {
        let mut x = letter;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![pos + 1]);
                break;
            }
            match p[row].iter().position(|&y| y > x) {
                Some(j) => {
                    x = std::mem::replace(&mut p[row][j], x);
                    row += 1;
                }
                None => {
                    p[row].push(x);
                    q[row].push(pos + 1);
                    break;
                }
            }
        }
    }
    let shape = SkewShape::straight(
        Partition::new(p.iter().map(|r| r.len()).collect()).expect("insertion keeps a partition"),
    );
    (Tableau { shape: shape.clone(), rows: p }, Tableau { shape, rows: q })
}

/// All words in `[n]^m` whose descent set is exactly `set`, in lex order.
pub fn words_with_descents(m: usize, set: &IndexSet, n: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, set: &IndexSet, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = cur.len();
        if i == m {
            out.push(cur.clone());
            return;
        }
        let range = match cur.last() {
            None => 1..=n,
            Some(&prev) if set.contains(&i) => 1..=prev.saturating_sub(1),
            Some(&prev) => prev..=n,
        };
        for v in range {
            cur.push(v);
            rec(m, set, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if set.iter().all(|&d| d >= 1 && d < m.max(1)) {
        rec(m, set, n, &mut Vec::new(), &mut out);
    }
    out
}
