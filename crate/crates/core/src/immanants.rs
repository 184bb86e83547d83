//! Jacobi–Trudi matrices, Hadamard products and immanants.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use ibig::IBig;
use itertools::Itertools;

use crate::algebra::{f_tau_perm, parse_tau, KauffmanDiagram, Permutation};
use crate::combinatorics::{Partition, SkewShape};
use crate::error::{Error, Result};
use crate::poly::{AlphabetSpec, Coeff, MultiPolynomial};
use crate::symfun::{elementary, expand_in_schur, homogeneous, power_sum_in_h, Basis, Expansion};

/// `imm_τ` of the Hadamard product of dual Jacobi–Trudi matrices, with
/// `n` the largest row count and one alphabet of size `|shape|` per shape.
/// `tau` is anything [`parse_tau`] accepts.
pub fn hadamard_tl_immanant(shapes: &[SkewShape], tau: &str) -> Result<MultiPolynomial> {
    let n = shapes.iter().map(SkewShape::rows).max().unwrap_or(0).max(1);
    let tau = parse_tau(tau, n)?;
    let factors = shapes
        .iter()
        .map(|s| jt_dual(s, n, 0, &AlphabetSpec::single(s.size().max(1))))
        .collect::<Result<Vec<_>>>()?;
    Ok(HadamardTable::new(&factors)?.immanant(|w| f_tau_perm(&tau, w)))
}

/// Largest matrix size accepted by the brute-force immanant.
pub const IMMANANT_BOUND: usize = 8;

/// A square matrix of polynomials over one alphabet spec.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    n: usize,
    spec: AlphabetSpec,
    entries: Vec<MultiPolynomial>,
}

impl PolyMatrix {
    /// From rows; all entries must share a spec.
    pub fn new(rows: Vec<Vec<MultiPolynomial>>) -> Result<Self> {
        let n = rows.len();
        let Some(spec) = rows.first().and_then(|r| r.first()).map(|p| p.spec().clone()) else {
            return Err(Error::SizeMismatch("empty matrix".into()));
        };
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::SizeMismatch("matrix is not square".into()));
        }
        let entries: Vec<MultiPolynomial> = rows.into_iter().flatten().collect();
        if entries.iter().any(|p| p.spec() != &spec) {
            return Err(Error::AlphabetMismatch("entries use different alphabets".into()));
        }
        Ok(PolyMatrix { n, spec, entries })
    }

    fn from_fn(n: usize, spec: &AlphabetSpec, f: impl Fn(usize, usize) -> MultiPolynomial) -> Self {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        PolyMatrix { n, spec: spec.clone(), entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn spec(&self) -> &AlphabetSpec {
        &self.spec
    }

    /// Entry `(i, j)`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> &MultiPolynomial {
        &self.entries[i * self.n + j]
    }

    fn check_bound(&self) -> Result<()> {
        if self.n > IMMANANT_BOUND {
            return Err(Error::BoundExceeded { what: "matrix size", value: self.n, bound: IMMANANT_BOUND });
        }
        Ok(())
    }

    /// Permutations `w` with every `M_{i,w(i)}` nonzero.
    pub fn support(&self) -> Result<Vec<Permutation>> {
        self.check_bound()?;
        let mut out = Vec::new();
        let mut row = Vec::with_capacity(self.n);
        let mut used = vec![false; self.n];
        self.support_rec(&mut row, &mut used, &mut out);
        Ok(out)
    }

    fn support_rec(&self, row: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        let i = row.len();
        if i == self.n {
            out.push(Permutation::new(&row.iter().map(|j| j + 1).collect::<Vec<_>>()).expect("bijection"));
            return;
        }
        for j in 0..self.n {
            if !used[j] && !self.get(i, j).is_zero() {
                used[j] = true;
                row.push(j);
                self.support_rec(row, used, out);
                row.pop();
                used[j] = false;
            }
        }
    }

    /// `Π_i M_{i,w(i)}`.
    pub fn diagonal_product(&self, w: &Permutation) -> Result<MultiPolynomial> {
        if w.n() != self.n {
            return Err(Error::SizeMismatch(format!("S_{} on a {}×{} matrix", w.n(), self.n, self.n)));
        }
        let mut out = MultiPolynomial::one(&self.spec);
        for i in 0..self.n {
            out = out.checked_mul(self.get(i, w.apply(i)))?;
            if out.is_zero() {
                break;
            }
        }
        Ok(out)
    }
}

fn check_shape(shape: &SkewShape, n: usize) -> Result<()> {
    if shape.rows() > n {
        return Err(Error::TooManyRows { rows: shape.rows(), n });
    }
    Ok(())
}

/// `(e_{λ_i − μ_j − i + j})_{i,j}` in alphabet `slot`.
pub fn jt_dual(shape: &SkewShape, n: usize, slot: usize, spec: &AlphabetSpec) -> Result<PolyMatrix> {
    check_shape(shape, n)?;
    let (l, m) = (shape.outer(), shape.inner());
    Ok(PolyMatrix::from_fn(n, spec, |i, j| {
        elementary(l.part(i) as i64 - m.part(j) as i64 - i as i64 + j as i64, slot, spec)
    }))
}

/// `(h_{λ_i − μ_j − i + j})_{i,j}` in alphabet `slot`, whose determinant is
/// `s_{λ/μ}`. With `+i − j` instead, (2,1) would already give 0; the two
/// conventions are transposes of each other whenever all rows of λ and of μ
/// agree, as for (2,2,2).
pub fn jt_ordinary(shape: &SkewShape, n: usize, slot: usize, spec: &AlphabetSpec) -> Result<PolyMatrix> {
    check_shape(shape, n)?;
    let (l, m) = (shape.outer(), shape.inner());
    Ok(PolyMatrix::from_fn(n, spec, |i, j| {
        homogeneous(l.part(i) as i64 - m.part(j) as i64 - i as i64 + j as i64, slot, spec)
    }))
}

/// Entrywise product, factor `j`'s alphabets placed after those of factors
/// `0..j`.
pub fn hadamard(ms: &[PolyMatrix]) -> Result<PolyMatrix> {
    let Some(first) = ms.first() else {
        return Err(Error::SizeMismatch("empty Hadamard product".into()));
    };
    if ms.iter().any(|m| m.n != first.n) {
        return Err(Error::SizeMismatch("Hadamard factors differ in size".into()));
    }
    let mut out = first.clone();
    for m in &ms[1..] {
        let spec = out.spec.tensor(&m.spec);
        let entries = out.entries.iter().zip(&m.entries).map(|(a, b)| a.tensor(b)).collect();
        out = PolyMatrix { n: out.n, spec, entries };
    }
    Ok(out)
}

/// `imm_f(M) = Σ_w f(w) Π_i M_{i,w(i)}`, by depth-first search over
/// partial permutations that skips zero entries and shares prefix products.
pub fn immanant(m: &PolyMatrix, f: impl Fn(&Permutation) -> i64) -> Result<MultiPolynomial> {
    m.check_bound()?;
    let mut out = MultiPolynomial::zero(&m.spec);
    let mut row = Vec::with_capacity(m.n);
    let mut used = vec![false; m.n];
    let prefix = MultiPolynomial::one(&m.spec);
    immanant_rec(m, &f, &prefix, &mut row, &mut used, &mut out)?;
    Ok(out)
}

fn immanant_rec(
    m: &PolyMatrix,
    f: &impl Fn(&Permutation) -> i64,
    prefix: &MultiPolynomial,
    row: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut MultiPolynomial,
) -> Result<()> {
    let i = row.len();
    if i + 1 == m.n {
        let j = (0..m.n).find(|&j| !used[j]).expect("one column left");
        if m.get(i, j).is_zero() {
            return Ok(());
        }
        row.push(j);
        let w = Permutation::new(&row.iter().map(|j| j + 1).collect::<Vec<_>>())?;
        row.pop();
        let c = f(&w);
        if c != 0 {
            out.add_product(prefix, m.get(i, j), &IBig::from(c));
        }
        return Ok(());
    }
    if m.n == 0 {
        return Ok(());
    }
    for j in 0..m.n {
        if used[j] || m.get(i, j).is_zero() {
            continue;
        }
        let next = prefix.checked_mul(m.get(i, j))?;
        used[j] = true;
        row.push(j);
        immanant_rec(m, f, &next, row, used, out)?;
        row.pop();
        used[j] = false;
    }
    Ok(())
}

/// `imm_f(M^(1) ∗ ⋯ ∗ M^(k))` without forming the Hadamard product: each
/// diagonal product is computed per factor and combined as a tensor.
pub fn hadamard_immanant(ms: &[PolyMatrix], f: impl Fn(&Permutation) -> i64) -> Result<MultiPolynomial> {
    let Some(first) = ms.first() else {
        return Err(Error::SizeMismatch("empty Hadamard product".into()));
    };
    if ms.iter().any(|m| m.n != first.n) {
        return Err(Error::SizeMismatch("Hadamard factors differ in size".into()));
    }
    let spec = ms[1..].iter().fold(first.spec.clone(), |s, m| s.tensor(&m.spec));
    let mut out = MultiPolynomial::zero(&spec);
    for w in first.support()? {
        let c = f(&w);
        if c == 0 {
            continue;
        }
        let parts: Vec<MultiPolynomial> = ms.iter().map(|m| m.diagonal_product(&w)).collect::<Result<_>>()?;
        if parts.iter().any(|p| p.is_zero()) {
            continue;
        }
        let refs: Vec<&MultiPolynomial> = parts.iter().collect();
        out.add_tensor_product(&refs, &Coeff::from(c));
    }
    Ok(out)
}

/// Per-factor diagonal products of a Hadamard product, one row per
/// permutation in the support. Many immanants of the same product can then
/// share the work.
pub struct HadamardTable {
    spec: AlphabetSpec,
    rows: Vec<(Permutation, Vec<MultiPolynomial>)>,
    schur_rows: OnceLock<std::result::Result<Vec<Vec<Expansion>>, Error>>,
}

impl HadamardTable {
    pub fn new(ms: &[PolyMatrix]) -> Result<Self> {
        let Some(first) = ms.first() else {
            return Err(Error::SizeMismatch("empty Hadamard product".into()));
        };
        if ms.iter().any(|m| m.n != first.n) {
            return Err(Error::SizeMismatch("Hadamard factors differ in size".into()));
        }
        let spec = ms[1..].iter().fold(first.spec.clone(), |s, m| s.tensor(&m.spec));
        let mut rows = Vec::new();
        for w in first.support()? {
            let parts: Vec<MultiPolynomial> = ms.iter().map(|m| m.diagonal_product(&w)).collect::<Result<_>>()?;
            if parts.iter().all(|p| !p.is_zero()) {
                rows.push((w, parts));
            }
        }
        Ok(HadamardTable { spec, rows, schur_rows: OnceLock::new() })
    }

    pub fn spec(&self) -> &AlphabetSpec {
        &self.spec
    }

    pub fn support(&self) -> impl Iterator<Item = &Permutation> {
        self.rows.iter().map(|(w, _)| w)
    }

    pub fn immanant(&self, f: impl Fn(&Permutation) -> i64) -> MultiPolynomial {
        let mut out = MultiPolynomial::zero(&self.spec);
        for (w, parts) in &self.rows {
            let c = f(w);
            if c != 0 {
                let refs: Vec<&MultiPolynomial> = parts.iter().collect();
                out.add_tensor_product(&refs, &Coeff::from(c));
            }
        }
        out
    }

    /// The Schur expansion of the immanant, assembled from the expansions of
    /// the single-alphabet diagonal products. Each alphabet must be at least
    /// as large as the degree it carries.
    pub fn immanant_schur(&self, f: impl Fn(&Permutation) -> i64) -> Result<Expansion> {
        let expanded = self
            .schur_rows
            .get_or_init(|| {
                self.rows.iter().map(|(_, parts)| parts.iter().map(expand_in_schur).collect()).collect()
            })
            .clone()?;
        let mut out = Expansion::zero(Basis::Schur, &self.spec);
        for ((w, _), parts) in self.rows.iter().zip(&expanded) {
            let c = f(w);
            if c == 0 {
                continue;
            }
            for combo in parts.iter().map(|e| e.terms().iter()).multi_cartesian_product() {
                let coeff = combo.iter().fold(Coeff::from(c), |acc, (_, v)| acc * *v);
                out.add_term(combo.iter().flat_map(|(k, _)| k.iter().cloned()).collect(), coeff);
            }
        }
        Ok(out)
    }
}

pub fn determinant(m: &PolyMatrix) -> Result<MultiPolynomial> {
    immanant(m, |w| w.sign())
}

pub fn permanent(m: &PolyMatrix) -> Result<MultiPolynomial> {
    immanant(m, |_| 1)
}

/// Determinant by Laplace expansion along successive rows, memoized on the
/// set of columns still available. Kept independent of [`immanant`].
pub fn determinant_laplace(m: &PolyMatrix) -> Result<MultiPolynomial> {
    if m.n > 16 {
        return Err(Error::BoundExceeded { what: "matrix size", value: m.n, bound: 16 });
    }
    let mut memo: HashMap<u32, MultiPolynomial> = HashMap::new();
    laplace(m, (1u32 << m.n) - 1, &mut memo)
}

fn laplace(m: &PolyMatrix, cols: u32, memo: &mut HashMap<u32, MultiPolynomial>) -> Result<MultiPolynomial> {
    let row = m.n - cols.count_ones() as usize;
    if row == m.n {
        return Ok(MultiPolynomial::one(&m.spec));
    }
    if let Some(v) = memo.get(&cols) {
        return Ok(v.clone());
    }
    let mut out = MultiPolynomial::zero(&m.spec);
    let mut sign = 1i64;
    for j in 0..m.n {
        if cols >> j & 1 == 0 {
            continue;
        }
        let entry = m.get(row, j);
        if !entry.is_zero() {
            let minor = laplace(m, cols & !(1 << j), memo)?;
            out.add_product(entry, &minor, &IBig::from(sign));
        }
        sign = -sign;
    }
    memo.insert(cols, out.clone());
    Ok(out)
}

/// `imm_τ(M) = imm_{f_τ}(M)`.
pub fn tl_immanant(tau: &KauffmanDiagram, m: &PolyMatrix) -> Result<MultiPolynomial> {
    if tau.n() != m.n {
        return Err(Error::SizeMismatch(format!("τ in TL_{} on a {}×{} matrix", tau.n(), m.n, m.n)));
    }
    immanant(m, |w| f_tau_perm(tau, w))
}

/// Largest `n` for the character tables.
pub const CHARACTER_BOUND: usize = 8;

fn check_character(eta: &Partition, w: &Permutation) -> Result<()> {
    if eta.size() != w.n() {
        return Err(Error::SizeMismatch(format!("χ^{eta} evaluated on S_{}", w.n())));
    }
    if w.n() > CHARACTER_BOUND {
        return Err(Error::BoundExceeded { what: "character size", value: w.n(), bound: CHARACTER_BOUND });
    }
    Ok(())
}

/// `χ^η(w)` by the Murnaghan–Nakayama rule.
pub fn ordinary_character(eta: &Partition, w: &Permutation) -> Result<i64> {
    check_character(eta, w)?;
    Ok(mn_character(eta.parts(), w.cycle_type().parts()))
}

/// `χ^η` on cycle type `mu`, memoized on `(η, μ)`.
pub fn mn_character(eta: &[usize], mu: &[usize]) -> i64 {
    type Memo = RwLock<HashMap<(Vec<usize>, Vec<usize>), i64>>;
    static MEMO: OnceLock<Memo> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    let key = (eta.to_vec(), mu.to_vec());
    if let Some(&v) = memo.read().expect("memo lock").get(&key) {
        return v;
    }
    let value = match mu.split_first() {
        None => i64::from(eta.iter().all(|&p| p == 0)),
        Some((&r, rest)) => {
            // Beta numbers λ_i + (L − 1 − i); removing a rim hook of length r
            // moves one bead from b to b − r.
            let len = eta.len();
            let beta: Vec<usize> = eta.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
            let mut total = 0;
            for (k, &b) in beta.iter().enumerate() {
                if b < r || beta.contains(&(b - r)) {
                    continue;
                }
                let between = beta.iter().filter(|&&c| b - r < c && c < b).count();
                let mut next = beta.clone();
                next[k] = b - r;
                next.sort_unstable_by(|a, b| b.cmp(a));
                let shape: Vec<usize> = next.iter().enumerate().map(|(i, &c)| c - (len - 1 - i)).collect();
                let trimmed: Vec<usize> = shape.into_iter().filter(|&p| p > 0).collect();
                let sign = if between % 2 == 0 { 1 } else { -1 };
                total += sign * mn_character(&trimmed, rest);
            }
            total
        }
    };
    memo.write().expect("memo lock").insert(key, value);
    value
}

/// `φ_η(w) = ⟨m_η, p_{type(w)}⟩`, the coefficient of `h_η` in `p_{type(w)}`.
pub fn monomial_character(eta: &Partition, w: &Permutation) -> Result<i64> {
    check_character(eta, w)?;
    Ok(power_sum_in_h(&w.cycle_type())?.get(eta).copied().unwrap_or(0))
}
