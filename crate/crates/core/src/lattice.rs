//! South-southwest lattice paths, path families, subnetworks and
//! multinetworks, together with `β`, noncrossing covers and the wiring
//! invariants `ε`, `ψ`.
//!
//! A path is stored as its destination column and the strictly decreasing
//! list of heights at which its southwest steps start; vertical steps are
//! implicit. Everything lives below a truncation height `N`: above it all
//! paths are vertical, and a southwest step starting at height `h` carries
//! the variable `x_h`, so heights in `[1, N]` are exactly the alphabet
//! `x_1..x_N`.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use rustc_hash::{FxHashMap, FxHashSet};
use serde_json::json;

use crate::algebra::{GroupAlgebraElement, KauffmanDiagram, Permutation, TlElement};
use crate::combinatorics::SkewShape;
use crate::error::{Error, Result};
use crate::poly::{AlphabetSpec, Monomial, MultiPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    South,
    SouthWest,
}

/// A directed edge leaving `(x, y)` towards height `y − 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub x: i64,
    pub y: usize,
    pub step: Step,
}

impl Edge {
    pub fn target(&self) -> (i64, usize) {
        match self.step {
            Step::South => (self.x, self.y - 1),
            Step::SouthWest => (self.x - 1, self.y - 1),
        }
    }
}

// Top to bottom, right to left, south before southwest. Within one height
// this is the order in which the noncrossing cover hands out edges.
impl Ord for Edge {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (Reverse(self.y), Reverse(self.x), self.step).cmp(&(Reverse(other.y), Reverse(other.x), other.step))
    }
}

impl PartialOrd for Edge {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.step {
            Step::South => "S",
            Step::SouthWest => "SW",
        };
        write!(f, "({},{}){s}", self.x, self.y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    dest: i64,
    sw: Vec<usize>,
}

impl LatticePath {
    pub fn new(dest: i64, sw_heights: Vec<usize>) -> Result<Self> {
        if sw_heights.contains(&0) || sw_heights.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidWord(format!(
                "southwest heights {sw_heights:?} must be positive and strictly decreasing"
            )));
        }
        Ok(LatticePath { dest, sw: sw_heights })
    }

    pub fn dest_column(&self) -> i64 {
        self.dest
    }

    pub fn start_column(&self) -> i64 {
        self.dest + self.sw.len() as i64
    }

    pub fn sw_heights(&self) -> &[usize] {
        &self.sw
    }

    /// Highest southwest start, or 0 for a vertical path.
    pub fn top(&self) -> usize {
        self.sw.first().copied().unwrap_or(0)
    }

    /// Column of the vertex at height `y`.
    pub fn column_at(&self, y: usize) -> i64 {
        self.start_column() - self.sw.iter().take_while(|&&h| h > y).count() as i64
    }

    /// Edges starting at heights `1..=height`.
    pub fn edges(&self, height: usize) -> Result<Vec<Edge>> {
        if self.top() > height {
            return Err(Error::BoundExceeded { what: "southwest height", value: self.top(), bound: height });
        }
        Ok((1..=height)
            .rev()
            .map(|y| Edge {
                x: self.column_at(y),
                y,
                step: if self.sw.contains(&y) { Step::SouthWest } else { Step::South },
            })
            .collect())
    }

    /// `Π x_h` over southwest start heights `h`.
    pub fn weight(&self, slot: usize, spec: &AlphabetSpec) -> Result<MultiPolynomial> {
        weight_of_heights(self.sw.iter().copied(), slot, spec)
    }
}

fn weight_of_heights(
    heights: impl Iterator<Item = usize>,
    slot: usize,
    spec: &AlphabetSpec,
) -> Result<MultiPolynomial> {
    let size = spec.size(slot);
    let mut exps = vec![0u16; size];
    for h in heights {
        if h == 0 || h > size {
            return Err(Error::InsufficientAlphabet { slot, size, degree: h });
        }
        exps[h - 1] += 1;
    }
    Ok(MultiPolynomial::term(spec, Monomial::from_slot_exponents(spec, slot, &exps)?, 1.into()))
}

/// Columns of `A(λ)_i = λ_i + n − i` and `B(μ)_i = μ_i + n − i`.
pub fn endpoints(shape: &SkewShape, n: usize) -> Result<(Vec<i64>, Vec<i64>)> {
    if shape.rows() > n {
        return Err(Error::TooManyRows { rows: shape.rows(), n });
    }
    let a = (0..n).map(|i| (shape.outer().part(i) + n - 1 - i) as i64).collect();
    let b = (0..n).map(|i| (shape.inner().part(i) + n - 1 - i) as i64).collect();
    Ok((a, b))
}

/// A `(λ, μ)`-path family: `p_i` runs from `A(λ)_i` to `B(μ)_{σ(i)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathFamily {
    shape: SkewShape,
    paths: Vec<LatticePath>,
    sigma: Permutation,
}

impl PathFamily {
    pub fn new(shape: &SkewShape, n: usize, paths: Vec<LatticePath>) -> Result<Self> {
        let (a, b) = endpoints(shape, n)?;
        if paths.len() != n {
            return Err(Error::SizeMismatch(format!("{} paths for n = {n}", paths.len())));
        }
        let mut one_line = Vec::with_capacity(n);
        for (i, p) in paths.iter().enumerate() {
            if p.start_column() != a[i] {
                return Err(Error::InvalidSubnetwork(format!(
                    "path {} starts in column {} instead of {}",
                    i + 1,
                    p.start_column(),
                    a[i]
                )));
            }
            let j = b.iter().position(|&c| c == p.dest).ok_or_else(|| {
                Error::InvalidSubnetwork(format!("path {} ends in column {}, not a sink", i + 1, p.dest))
            })?;
            one_line.push(j + 1);
        }
        let sigma = Permutation::new(&one_line)
            .map_err(|_| Error::InvalidSubnetwork(format!("two paths share a sink: {one_line:?}")))?;
        Ok(PathFamily { shape: shape.clone(), paths, sigma })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.paths.len()
    }

    pub fn paths(&self) -> &[LatticePath] {
        &self.paths
    }

    pub fn permutation(&self) -> &Permutation {
        &self.sigma
    }

    pub fn top(&self) -> usize {
        self.paths.iter().map(|p| p.top()).max().unwrap_or(0)
    }

    /// `cols[i][y]` for `y` in `0..=height+1`.
    fn columns(&self, height: usize) -> Vec<Vec<i64>> {
        self.paths.iter().map(|p| (0..=height + 1).map(|y| p.column_at(y)).collect()).collect()
    }

    pub fn is_nonintersecting(&self) -> bool {
        let cols = self.columns(self.top());
        (0..=self.top()).all(|y| cols.iter().map(|c| c[y]).collect::<FxHashSet<_>>().len() == cols.len())
    }

    pub fn is_noncrossing(&self) -> bool {
        let cols = self.columns(self.top());
        (0..self.n()).tuple_combinations().all(|(i, j)| {
            let left = cols[i].iter().zip(&cols[j]).any(|(p, q)| p < q);
            let right = cols[i].iter().zip(&cols[j]).any(|(p, q)| q < p);
            !(left && right)
        })
    }

    pub fn weight(&self, slot: usize, spec: &AlphabetSpec) -> Result<MultiPolynomial> {
        weight_of_heights(self.paths.iter().flat_map(|p| p.sw.iter().copied()), slot, spec)
    }

    /// The edge multiset union below `height`.
    pub fn subnetwork(&self, height: usize) -> Result<Subnetwork> {
        let mut edges = Vec::with_capacity(self.n() * height);
        for p in &self.paths {
            edges.extend(p.edges(height)?);
        }
        edges.sort();
        Ok(Subnetwork { shape: self.shape.clone(), n: self.n(), height, edges })
    }
}

/// The concatenation of the southwest-height words of the paths.
pub fn word_of_family(f: &PathFamily) -> Vec<usize> {
    f.paths.iter().flat_map(|p| p.sw.iter().copied()).collect()
}

/// Inverse of [`word_of_family`] on noncrossing identity-type families:
/// cuts `u` into consecutive blocks of lengths `λ_i − μ_i`.
pub fn family_of_word(u: &[usize], shape: &SkewShape, n: usize) -> Result<PathFamily> {
    let (_, b) = endpoints(shape, n)?;
    if u.len() != shape.size() {
        return Err(Error::InvalidWord(format!("word of length {} for a shape of size {}", u.len(), shape.size())));
    }
    let mut paths = Vec::with_capacity(n);
    let mut pos = 0;
    for (i, &dest) in b.iter().enumerate() {
        let len = shape.row_len(i);
        let block = u[pos..pos + len].to_vec();
        pos += len;
        paths.push(LatticePath::new(dest, block).map_err(|_| {
            Error::InvalidWord(format!("{u:?}: block {} is not strictly decreasing", i + 1))
        })?);
    }
    let f = PathFamily::new(shape, n, paths)?;
    if !f.is_noncrossing() {
        return Err(Error::InvalidWord(format!("{u:?} gives a crossing family")));
    }
    Ok(f)
}

/// Calls `visit` on every `(λ, μ)`-path family, of every type, whose
/// southwest steps start at heights in `[1, height]`.
pub fn for_each_path_family(
    shape: &SkewShape,
    n: usize,
    height: usize,
    mut visit: impl FnMut(&PathFamily),
) -> Result<()> {
    let (a, b) = endpoints(shape, n)?;
    for sigma in Permutation::all(n) {
        let lens: Option<Vec<usize>> = (0..n)
            .map(|i| {
                let d = a[i] - b[sigma.apply(i)];
                (0..=height as i64).contains(&d).then_some(d as usize)
            })
            .collect();
        let Some(lens) = lens else { continue };
        let choices: Vec<Vec<Vec<usize>>> =
            lens.iter().map(|&l| (1..=height).rev().combinations(l).collect()).collect();
        for pick in choices.iter().multi_cartesian_product_or_unit() {
            let paths = pick
                .iter()
                .enumerate()
                .map(|(i, sw)| LatticePath { dest: b[sigma.apply(i)], sw: (*sw).clone() })
                .collect();
            visit(&PathFamily { shape: shape.clone(), paths, sigma: sigma.clone() });
        }
    }
    Ok(())
}

trait CartesianOrUnit<'a, T: 'a> {
    fn multi_cartesian_product_or_unit(self) -> Box<dyn Iterator<Item = Vec<&'a T>> + 'a>;
}

// `multi_cartesian_product` yields nothing for zero factors; we want one
// empty tuple.
impl<'a, T: 'a> CartesianOrUnit<'a, T> for std::slice::Iter<'a, Vec<T>> {
    fn multi_cartesian_product_or_unit(self) -> Box<dyn Iterator<Item = Vec<&'a T>> + 'a> {
        if self.len() == 0 {
            Box::new(std::iter::once(Vec::new()))
        } else {
            Box::new(self.map(|v| v.iter()).multi_cartesian_product())
        }
    }
}

pub fn enumerate_path_families(shape: &SkewShape, n: usize, height: usize) -> Result<Vec<PathFamily>> {
    let mut out = Vec::new();
    for_each_path_family(shape, n, height, |f| out.push(f.clone()))?;
    Ok(out)
}

/// All `(λ, μ)`-subnetworks below `height`, via their noncrossing covers,
/// sorted by edge list.
pub fn enumerate_subnetworks(shape: &SkewShape, n: usize, height: usize) -> Result<Vec<Subnetwork>> {
    let (a, b) = endpoints(shape, n)?;
    let mut out = Vec::new();
    let mut chosen: Vec<LatticePath> = Vec::with_capacity(n);
    fn rec(
        i: usize,
        a: &[i64],
        b: &[i64],
        height: usize,
        chosen: &mut Vec<LatticePath>,
        out: &mut Vec<Vec<LatticePath>>,
    ) {
        if i == a.len() {
            out.push(chosen.clone());
            return;
        }
        let len = a[i] - b[i];
        if len < 0 || len > height as i64 {
            return;
        }
        for sw in (1..=height).rev().combinations(len as usize) {
            let p = LatticePath { dest: b[i], sw };
            if let Some(prev) = chosen.last() {
                if (0..=height).any(|y| prev.column_at(y) < p.column_at(y)) {
                    continue;
                }
            }
            chosen.push(p);
            rec(i + 1, a, b, height, chosen, out);
            chosen.pop();
        }
    }
    let mut families = Vec::new();
    rec(0, &a, &b, height, &mut chosen, &mut families);
    let sigma = Permutation::identity(n);
    for paths in families {
        out.push(PathFamily { shape: shape.clone(), paths, sigma: sigma.clone() }.subnetwork(height)?);
    }
    out.sort_by(|x, y| x.edges.cmp(&y.edges));
    Ok(out)
}

/// A vertex shared by `p_pair` and `p_{pair+1}` of the noncrossing cover
/// whose predecessors on those paths are not shared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EssentialPoint {
    pub x: i64,
    pub y: usize,
    pub pair: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WiringData {
    pub is_wiring: bool,
    pub essential_points: Vec<EssentialPoint>,
    /// In a compatible order.
    pub intersection_sequence: Vec<usize>,
    /// Loops removed from `t_{i_1} ⋯ t_{i_ℓ}`; 0 when not a wiring diagram.
    pub epsilon: u32,
    pub psi: Option<KauffmanDiagram>,
}

/// An edge multiset that is the union of some `(λ, μ)`-path family, kept
/// below a truncation height.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subnetwork {
    shape: SkewShape,
    n: usize,
    height: usize,
    edges: Vec<Edge>,
}

impl Subnetwork {
    /// Validates by building the noncrossing cover.
    pub fn new(shape: &SkewShape, n: usize, height: usize, mut edges: Vec<Edge>) -> Result<Self> {
        edges.sort();
        let h = Subnetwork { shape: shape.clone(), n, height, edges };
        h.noncrossing_cover()?;
        Ok(h)
    }

    /// The subnetwork covered by the identity-type family whose paths have
    /// the given southwest heights.
    pub fn from_cover_heights(shape: &SkewShape, n: usize, height: usize, heights: &[Vec<usize>]) -> Result<Self> {
        let (_, b) = endpoints(shape, n)?;
        if heights.len() != n {
            return Err(Error::SizeMismatch(format!("{} height lists for n = {n}", heights.len())));
        }
        let paths =
            b.iter().zip(heights).map(|(&d, sw)| LatticePath::new(d, sw.clone())).collect::<Result<Vec<_>>>()?;
        PathFamily::new(shape, n, paths)?.subnetwork(height)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Edges leaving height `y`, in cover order.
    fn level(&self, y: usize) -> &[Edge] {
        let start = (self.height - y) * self.n;
        &self.edges[start..start + self.n]
    }

    fn invalid(&self, why: String) -> Error {
        Error::InvalidSubnetwork(format!("{self}: {why}"))
    }

    pub fn weight(&self, slot: usize, spec: &AlphabetSpec) -> Result<MultiPolynomial> {
        weight_of_heights(self.edges.iter().filter(|e| e.step == Step::SouthWest).map(|e| e.y), slot, spec)
    }

    /// Hands out the edges at each height in (column descending, south
    /// first) order to `p_1, …, p_n`.
    pub fn noncrossing_cover(&self) -> Result<PathFamily> {
        let (a, b) = endpoints(&self.shape, self.n)?;
        if self.edges.len() != self.n * self.height
            || self.edges.iter().enumerate().any(|(k, e)| e.y != self.height - k / self.n.max(1))
        {
            return Err(self.invalid(format!("expected {} edges at each height 1..={}", self.n, self.height)));
        }
        let mut cols = a.clone();
        let mut sw: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for y in (1..=self.height).rev() {
            for (k, e) in self.level(y).iter().enumerate() {
                if e.x != cols[k] {
                    return Err(self.invalid(format!("no path reaches ({}, {})", e.x, y)));
                }
                if e.step == Step::SouthWest {
                    sw[k].push(y);
                    cols[k] -= 1;
                }
            }
        }
        if cols != b {
            return Err(self.invalid(format!("paths end in columns {cols:?}, expected {b:?}")));
        }
        let paths = sw.into_iter().zip(&b).map(|(sw, &dest)| LatticePath { dest, sw }).collect();
        Ok(PathFamily { shape: self.shape.clone(), paths, sigma: Permutation::identity(self.n) })
    }

    /// For each group of labelled paths sitting on one vertex, every way of
    /// sending the right number of them down the southwest edge.
    fn moves(&self, y: usize, cols: &[i64]) -> Result<Vec<Vec<bool>>> {
        let mut out_edges: BTreeMap<i64, (usize, usize)> = BTreeMap::new();
        for e in self.level(y) {
            let entry = out_edges.entry(e.x).or_default();
            match e.step {
                Step::South => entry.0 += 1,
                Step::SouthWest => entry.1 += 1,
            }
        }
        let mut groups: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (i, &c) in cols.iter().enumerate() {
            groups.entry(c).or_default().push(i);
        }
        let mut options: Vec<Vec<bool>> = vec![vec![false; cols.len()]];
        for (c, labels) in &groups {
            let (s, w) = out_edges.get(c).copied().unwrap_or_default();
            if s + w != labels.len() {
                return Err(self.invalid(format!("{} paths at ({c}, {y}) but {} edges", labels.len(), s + w)));
            }
            let mut next = Vec::new();
            for chosen in labels.iter().combinations(w) {
                for opt in &options {
                    let mut o = opt.clone();
                    for &&i in &chosen {
                        o[i] = true;
                    }
                    next.push(o);
                }
            }
            options = next;
        }
        Ok(options)
    }

    fn type_of(&self, cols: &[i64], b: &[i64]) -> Result<Permutation> {
        let one_line: Vec<usize> = cols
            .iter()
            .map(|c| b.iter().position(|d| d == c).map(|j| j + 1).unwrap_or(0))
            .collect();
        Permutation::new(&one_line).map_err(|_| self.invalid(format!("paths end in columns {cols:?}")))
    }

    /// Every path family whose edge union is `H`.
    pub fn covering_families(&self) -> Result<Vec<PathFamily>> {
        let (a, b) = endpoints(&self.shape, self.n)?;
        let mut partial: Vec<(Vec<i64>, Vec<Vec<usize>>)> = vec![(a, vec![Vec::new(); self.n])];
        for y in (1..=self.height).rev() {
            let mut next = Vec::new();
            for (cols, sw) in &partial {
                for mv in self.moves(y, cols)? {
                    let (mut c, mut s) = (cols.clone(), sw.clone());
                    for (i, &down) in mv.iter().enumerate() {
                        if down {
                            c[i] -= 1;
                            s[i].push(y);
                        }
                    }
                    next.push((c, s));
                }
            }
            partial = next;
        }
        partial
            .into_iter()
            .map(|(cols, sw)| {
                let sigma = self.type_of(&cols, &b)?;
                let paths = sw.into_iter().zip(&cols).map(|(sw, &dest)| LatticePath { dest, sw }).collect();
                Ok(PathFamily { shape: self.shape.clone(), paths, sigma })
            })
            .collect()
    }

    /// `β(H) = Σ type(p⃗)` over covering families, counted by dynamic
    /// programming on the labelled column vector.
    pub fn beta(&self) -> Result<GroupAlgebraElement> {
        let (a, b) = endpoints(&self.shape, self.n)?;
        let mut states: FxHashMap<Vec<i64>, i64> = FxHashMap::default();
        states.insert(a, 1);
        for y in (1..=self.height).rev() {
            let mut next: FxHashMap<Vec<i64>, i64> = FxHashMap::default();
            for (cols, count) in &states {
                for mv in self.moves(y, cols)? {
                    let c: Vec<i64> = cols.iter().zip(&mv).map(|(&c, &d)| c - d as i64).collect();
                    *next.entry(c).or_insert(0) += count;
                }
            }
            states = next;
        }
        let mut out = GroupAlgebraElement::zero(self.n);
        for (cols, count) in states {
            out.add_term(self.type_of(&cols, &b)?, count);
        }
        Ok(out)
    }

    pub fn essential_points(&self) -> Result<Vec<EssentialPoint>> {
        let cols = self.noncrossing_cover()?.columns(self.height);
        let mut out = Vec::new();
        for i in 0..self.n.saturating_sub(1) {
            for y in (0..=self.height).rev() {
                if cols[i][y] == cols[i + 1][y] && cols[i][y + 1] != cols[i + 1][y + 1] {
                    out.push(EssentialPoint { x: cols[i][y], y, pair: i + 1 });
                }
            }
        }
        Ok(out)
    }

    /// Whether some vertex lies on three paths of the noncrossing cover.
    pub fn has_triple_point(&self) -> Result<bool> {
        let cols = self.noncrossing_cover()?.columns(self.height);
        Ok((0..=self.height).any(|y| (2..self.n).any(|i| cols[i - 2][y] == cols[i][y])))
    }

    fn reachable_from(&self, start: (i64, usize)) -> FxHashSet<(i64, usize)> {
        let mut seen = FxHashSet::default();
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            if !seen.insert(v) || v.1 == 0 {
                continue;
            }
            for e in self.level(v.1) {
                if (e.x, e.y) == v {
                    stack.push(e.target());
                }
            }
        }
        seen
    }

    /// Kahn's algorithm on "reachable in H", ties broken by `key`.
    fn compatible_order<K: Ord>(&self, points: &[EssentialPoint], key: impl Fn(&EssentialPoint) -> K) -> Vec<usize> {
        let m = points.len();
        let reach: Vec<FxHashSet<(i64, usize)>> = points.iter().map(|p| self.reachable_from((p.x, p.y))).collect();
        let before = |u: usize, v: usize| u != v && reach[u].contains(&(points[v].x, points[v].y));
        let mut indegree: Vec<usize> = (0..m).map(|v| (0..m).filter(|&u| before(u, v)).count()).collect();
        let mut ready: BTreeSet<(K, usize)> =
            (0..m).filter(|&v| indegree[v] == 0).map(|v| (key(&points[v]), v)).collect();
        let mut order = Vec::with_capacity(m);
        while let Some((_, u)) = ready.pop_first() {
            order.push(u);
            for v in 0..m {
                if before(u, v) {
                    indegree[v] -= 1;
                    if indegree[v] == 0 {
                        ready.insert((key(&points[v]), v));
                    }
                }
            }
        }
        order
    }

    /// Detects wiring diagrams and computes `ε`, `ψ` from
    /// `t_{i_1} ⋯ t_{i_ℓ} = 2^ε ψ`. Two compatible orderings are formed and
    /// their products must agree.
    pub fn wiring_data(&self) -> Result<WiringData> {
        let points = self.essential_points()?;
        let by_pair = self.compatible_order(&points, |p| (p.pair, Reverse(p.y)));
        let by_height = self.compatible_order(&points, |p| (Reverse(p.y), p.pair));
        let seq = |order: &[usize]| order.iter().map(|&k| points[k].pair).collect::<Vec<_>>();
        let sequence = seq(&by_pair);
        if self.has_triple_point()? {
            return Ok(WiringData {
                is_wiring: false,
                essential_points: points,
                intersection_sequence: sequence,
                epsilon: 0,
                psi: None,
            });
        }
        let product = |s: &[usize]| -> Result<TlElement> {
            let mut out = TlElement::one(self.n);
            for &i in s {
                out = out.mul(&TlElement::generator(i, self.n)?)?;
            }
            Ok(out)
        };
        let p1 = product(&sequence)?;
        let p2 = product(&seq(&by_height))?;
        if p1 != p2 {
            return Err(Error::OrderingDependence(format!("{self}: {p1} vs {p2}")));
        }
        let (c, d) = p1.as_single().ok_or_else(|| self.invalid(format!("product {p1} is not a single diagram")))?;
        if c <= 0 || c.count_ones() != 1 {
            return Err(self.invalid(format!("product coefficient {c} is not a power of 2")));
        }
        Ok(WiringData {
            is_wiring: true,
            essential_points: points,
            intersection_sequence: sequence,
            epsilon: c.trailing_zeros(),
            psi: Some(d.clone()),
        })
    }

    /// Compact form: the southwest heights of each noncrossing-cover path.
    pub fn to_json(&self) -> serde_json::Value {
        let heights: Vec<Vec<usize>> = match self.noncrossing_cover() {
            Ok(f) => f.paths.iter().map(|p| p.sw.clone()).collect(),
            Err(_) => Vec::new(),
        };
        json!({
            "shape": self.shape.to_string(),
            "n": self.n,
            "height": self.height,
            "cover_sw_heights": heights,
        })
    }
}

impl fmt::Display for Subnetwork {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H[{} n={} N={}:", self.shape, self.n, self.height)?;
        for e in &self.edges {
            write!(f, " {e}")?;
        }
        write!(f, "]")
    }
}

/// A tuple of subnetworks, component `j` weighted in alphabet slot `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multinetwork {
    components: Vec<Subnetwork>,
}

impl Multinetwork {
    pub fn new(components: Vec<Subnetwork>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::InvalidParam("a multinetwork needs at least one component".into()));
        };
        if components.iter().any(|h| h.n != first.n) {
            return Err(Error::SizeMismatch("components use different n".into()));
        }
        Ok(Multinetwork { components })
    }

    pub fn components(&self) -> &[Subnetwork] {
        &self.components
    }

    pub fn n(&self) -> usize {
        self.components[0].n
    }

    /// `β(H^(1)) ⋆ ⋯ ⋆ β(H^(k))`.
    pub fn beta(&self) -> Result<GroupAlgebraElement> {
        let mut out = self.components[0].beta()?;
        for h in &self.components[1..] {
            out = out.star(&h.beta()?)?;
        }
        Ok(out)
    }

    /// `Σ type` over tuples of covering families that all share one type,
    /// enumerated tuple by tuple.
    pub fn beta_definitional(&self) -> Result<GroupAlgebraElement> {
        let covers: Vec<Vec<PathFamily>> =
            self.components.iter().map(|h| h.covering_families()).collect::<Result<_>>()?;
        let mut out = GroupAlgebraElement::zero(self.n());
        fn rec(j: usize, sigma: &Permutation, covers: &[Vec<PathFamily>]) -> i64 {
            if j == covers.len() {
                return 1;
            }
            covers[j].iter().filter(|f| &f.sigma == sigma).map(|_| rec(j + 1, sigma, covers)).sum()
        }
        for f in &covers[0] {
            let tuples = rec(1, &f.sigma, &covers);
            if tuples != 0 {
                out.add_term(f.sigma.clone(), tuples);
            }
        }
        Ok(out)
    }

    pub fn weight(&self, spec: &AlphabetSpec) -> Result<MultiPolynomial> {
        if spec.count() != self.components.len() {
            return Err(Error::AlphabetMismatch(format!(
                "{} alphabets for {} components",
                spec.count(),
                self.components.len()
            )));
        }
        let mut out = MultiPolynomial::one(spec);
        for (slot, h) in self.components.iter().enumerate() {
            out = out.checked_mul(&h.weight(slot, spec)?)?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.components.iter().map(|h| h.to_json()).collect())
    }
}

impl fmt::Display for Multinetwork {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.components.iter().map(|h| h.to_string()).join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{b_of, tau_of, theta};
    use crate::combinatorics::{all_skew_shapes, IndexSet};

    fn shape(o: &[usize], i: &[usize]) -> SkewShape {
        SkewShape::from_parts(o, i).unwrap()
    }

    fn set(v: &[usize]) -> IndexSet {
        v.iter().copied().collect()
    }

    fn hv(v: &[&[usize]]) -> Vec<Vec<usize>> {
        v.iter().map(|x| x.to_vec()).collect()
    }

    fn figure_2222() -> Subnetwork {
        let s = shape(&[2, 2, 2, 2], &[]);
        Subnetwork::from_cover_heights(&s, 4, 4, &hv(&[&[4, 2], &[3, 2], &[3, 1], &[4, 1]])).unwrap()
    }

    fn example_32() -> Subnetwork {
        let s = shape(&[7, 6, 5, 2, 2], &[5, 1, 1]);
        let h = hv(&[&[11, 10], &[11, 10, 8, 6, 2], &[9, 7, 5, 4], &[3, 2], &[9, 1]]);
        Subnetwork::from_cover_heights(&s, 5, 11, &h).unwrap()
    }

    #[test]
    fn single_path_weight() {
        let p = LatticePath::new(3, vec![5, 4, 2]).unwrap();
        assert_eq!(p.start_column(), 6);
        let spec = AlphabetSpec::single(5);
        let x = |i| MultiPolynomial::variable(&spec, 0, i).unwrap();
        let expect = x(5).checked_mul(&x(4)).unwrap().checked_mul(&x(2)).unwrap();
        assert_eq!(p.weight(0, &spec).unwrap(), expect);
        assert_eq!(p.column_at(5), 6);
        assert_eq!(p.column_at(4), 5);
        assert_eq!(p.column_at(1), 3);
        assert!(LatticePath::new(0, vec![2, 2]).is_err());
    }

    #[test]
    fn endpoint_columns() {
        let (a, b) = endpoints(&shape(&[7, 6, 5, 2, 2], &[5, 1, 1]), 5).unwrap();
        assert_eq!(a, vec![11, 9, 7, 3, 2]);
        assert_eq!(b, vec![9, 4, 3, 1, 0]);
        let (a, b) = endpoints(&shape(&[1, 1], &[]), 2).unwrap();
        assert_eq!((a, b), (vec![2, 1], vec![1, 0]));
        assert!(endpoints(&shape(&[1, 1], &[]), 1).is_err());
    }

    #[test]
    fn small_family_counts() {
        let one = shape(&[1], &[]);
        assert_eq!(enumerate_path_families(&one, 1, 2).unwrap().len(), 2);
        let col = shape(&[1, 1], &[]);
        let fams = enumerate_path_families(&col, 2, 2).unwrap();
        // type 1: e_1·e_1 = 4 families; type s_1: e_2·e_0 = 1 family.
        assert_eq!(fams.len(), 5);
        assert_eq!(fams.iter().filter(|f| f.permutation().sign() < 0).count(), 1);
        let flat = shape(&[2, 1], &[2, 1]);
        let fams = enumerate_path_families(&flat, 2, 3).unwrap();
        assert_eq!(fams.len(), 1);
        assert!(fams[0].subnetwork(3).unwrap().edges().iter().all(|e| e.step == Step::South));
    }

    #[test]
    fn figure_subnetwork_beta_and_psi() {
        let h = figure_2222();
        let covers = h.covering_families().unwrap();
        assert_eq!(covers.len(), 4);
        let expect = b_of(&set(&[1, 2]), 4).unwrap();
        assert_eq!(h.beta().unwrap(), expect);
        let w = h.wiring_data().unwrap();
        assert!(w.is_wiring);
        assert_eq!(w.intersection_sequence, vec![1, 2]);
        assert_eq!(w.epsilon, 0);
        assert_eq!(w.psi, Some(tau_of(&set(&[1, 2]), 4).unwrap()));
        let cover = h.noncrossing_cover().unwrap();
        assert!(cover.is_noncrossing());
        assert_eq!(cover.permutation(), &Permutation::identity(4));
        assert_eq!(cover.subnetwork(4).unwrap(), h);
    }

    #[test]
    fn example_32_values() {
        let h = example_32();
        let beta = h.beta().unwrap();
        assert_eq!(beta, b_of(&set(&[2, 3, 4]), 5).unwrap().scale(4));
        let w = h.wiring_data().unwrap();
        assert!(w.is_wiring);
        assert_eq!(w.epsilon, 2);
        assert_eq!(w.intersection_sequence.iter().copied().collect::<IndexSet>(), set(&[2, 3, 4]));
        assert_eq!(w.psi, Some(tau_of(&set(&[2, 3, 4]), 5).unwrap()));
        assert_eq!(h.covering_families().unwrap().len(), 32);
    }

    #[test]
    fn ribbon_word_example() {
        let r = shape(&[2, 2, 2, 2, 1], &[1, 1, 1]);
        let f = family_of_word(&[4, 2, 3, 6, 3, 1], &r, 5).unwrap();
        assert_eq!(word_of_family(&f), vec![4, 2, 3, 6, 3, 1]);
        let h = f.subnetwork(6).unwrap();
        assert_eq!(h.beta().unwrap(), b_of(&set(&[1, 4]), 5).unwrap());
        assert!(family_of_word(&[4, 2, 3, 3, 6, 1], &r, 5).is_err());
        assert!(family_of_word(&[4, 2, 3, 6], &r, 5).is_err());
    }

    #[test]
    fn multinetwork_figure() {
        let n = 5;
        let h1 = Subnetwork::from_cover_heights(
            &shape(&[5, 4, 2, 1, 1], &[2, 1]),
            n,
            8,
            &hv(&[&[8, 7, 5], &[6, 4, 3], &[2, 1], &[6], &[4]]),
        )
        .unwrap();
        let h2 = Subnetwork::from_cover_heights(
            &shape(&[2, 2, 2, 2, 1], &[1, 1, 1]),
            n,
            8,
            &hv(&[&[5], &[3], &[4], &[7, 4], &[2]]),
        )
        .unwrap();
        let h3 = Subnetwork::from_cover_heights(
            &shape(&[4, 4, 4, 2, 2], &[3, 1, 1, 1]),
            n,
            8,
            &hv(&[&[8], &[6, 4, 2], &[5, 3, 1], &[6], &[5, 2]]),
        )
        .unwrap();
        assert_eq!(h1.beta().unwrap(), b_of(&set(&[1, 2, 4]), n).unwrap().scale(2));
        assert_eq!(h2.beta().unwrap(), b_of(&set(&[1, 4]), n).unwrap());
        assert_eq!(h3.beta().unwrap(), b_of(&set(&[1, 2, 4]), n).unwrap().scale(4));
        let m = Multinetwork::new(vec![h1, h2, h3]).unwrap();
        let expect = b_of(&set(&[1, 4]), n).unwrap().scale(8);
        assert_eq!(m.beta().unwrap(), expect);
        assert_eq!(m.beta_definitional().unwrap(), expect);
    }

    #[test]
    fn invalid_subnetworks_are_rejected() {
        let h = figure_2222();
        let mut edges = h.edges().to_vec();
        edges.pop();
        assert!(Subnetwork::new(h.shape(), 4, 4, edges.clone()).is_err());
        edges.push(Edge { x: 0, y: 1, step: Step::SouthWest });
        assert!(Subnetwork::new(h.shape(), 4, 4, edges).is_err());
        assert_eq!(Subnetwork::new(h.shape(), 4, 4, h.edges().to_vec()).unwrap(), h);
    }

    #[test]
    fn subnetworks_are_family_unions() {
        for size in 1..=4 {
            for s in all_skew_shapes(size, 4) {
                let n = s.rows();
                let height = 3;
                let mut unions = BTreeSet::new();
                let mut all_families = 0usize;
                for_each_path_family(&s, n, height, |f| {
                    unions.insert(f.subnetwork(height).unwrap().edges().to_vec());
                    all_families += 1;
                })
                .unwrap();
                let listed: BTreeSet<Vec<Edge>> = enumerate_subnetworks(&s, n, height)
                    .unwrap()
                    .into_iter()
                    .map(|h| h.edges().to_vec())
                    .collect();
                assert_eq!(listed, unions, "{s}");
                let mut covered = 0usize;
                for h in enumerate_subnetworks(&s, n, height).unwrap() {
                    let beta = h.beta().unwrap();
                    let covers = h.covering_families().unwrap();
                    assert!(beta.terms().values().all(|&c| c > 0));
                    assert_eq!(beta.augmentation() as usize, covers.len());
                    covered += covers.len();
                    let w = h.wiring_data().unwrap();
                    if w.is_wiring {
                        let th = theta(&beta);
                        let psi = w.psi.clone().unwrap();
                        assert_eq!(th, TlElement::basis(psi).scale(1 << w.epsilon), "{h}");
                    } else {
                        assert!(theta(&beta).is_zero(), "{h}");
                    }
                }
                assert_eq!(covered, all_families, "{s}");
            }
        }
    }

    #[test]
    fn three_by_two_avoiding_structure() {
        for size in 1..=5 {
            for s in all_skew_shapes(size, 5).into_iter().filter(|s| s.avoids_3x2()) {
                let n = s.rows();
                for h in enumerate_subnetworks(&s, n, 3).unwrap() {
                    let w = h.wiring_data().unwrap();
                    assert!(w.is_wiring, "{h}");
                    let cover = h.noncrossing_cover().unwrap();
                    let cols = cover.columns(3);
                    let touching: IndexSet =
                        (1..n).filter(|&i| (0..=3).any(|y| cols[i - 1][y] == cols[i][y])).collect();
                    let beta = h.beta().unwrap();
                    assert_eq!(beta, b_of(&touching, n).unwrap().scale(1 << w.epsilon), "{h}");
                    if s.is_ribbon() {
                        assert_eq!(w.epsilon, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn non_wiring_example() {
        // Three paths through one vertex: (2,2,2) with every path touching column 2 at height 1.
        let s = shape(&[2, 2, 2], &[]);
        let h = Subnetwork::from_cover_heights(&s, 3, 4, &hv(&[&[4, 3], &[4, 2], &[2, 1]])).unwrap();
        assert!(h.has_triple_point().unwrap());
        let w = h.wiring_data().unwrap();
        assert!(!w.is_wiring);
        assert!(theta(&h.beta().unwrap()).is_zero());
    }
}
