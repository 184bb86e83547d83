//! The group algebra of `S_n`, the Temperley–Lieb algebra `TL_n(2)` on
//! Kauffman diagrams, and the homomorphism `θ(s_i) = t_i − 1` between them.
//!
//! Permutations compose left to right: `(uv)(i) = v(u(i))`, so `s_1 s_2 = 312`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::combinatorics::{parse_set, IndexSet, Partition};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    /// From one-line notation over `1..=n`.
    pub fn new(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in one_line {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::SizeMismatch(format!("{one_line:?} is not a permutation")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation(one_line.iter().map(|&v| (v - 1) as u8).collect()))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u8).collect())
    }

    /// The simple transposition `s_i` swapping `i` and `i+1` (1-based).
    pub fn simple(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::SizeMismatch(format!("s_{i} does not exist in S_{n}")));
        }
        let mut w = Permutation::identity(n);
        w.0.swap(i - 1, i);
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `w(i)` with 0-based input and output.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(format!("S_{} vs S_{}", self.n(), other.n())));
        }
        Ok(Permutation(self.0.iter().map(|&u| other.0[u as usize]).collect()))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation(inv)
    }

    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// A reduced word `[i_1, …, i_l]` with `self = s_{i_1} ⋯ s_{i_l}`, found by
    /// repeatedly swapping the leftmost adjacent inversion.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.0.clone();
        let mut word = Vec::new();
        while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
            // s_i · w swaps positions i, i+1 of the one-line notation.
            w.swap(i, i + 1);
            word.push(i + 1);
        }
        word
    }

    pub fn cycle_type(&self) -> Partition {
        let mut seen = vec![false; self.n()];
        let mut lens = Vec::new();
        for start in 0..self.n() {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
                len += 1;
            }
            if len > 0 {
                lens.push(len);
            }
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lens).expect("sorted cycle lengths")
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation(cur.clone()));
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v as u8);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() < 10 {
            write!(f, "{}", self.one_line().iter().map(|v| v.to_string()).collect::<String>())
        } else {
            write!(f, "{:?}", self.one_line())
        }
    }
}

/// An element of `ℤ[S_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, i64>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        GroupAlgebraElement::basis(Permutation::identity(n))
    }

    pub fn basis(w: Permutation) -> Self {
        let n = w.n();
        GroupAlgebraElement { n, terms: BTreeMap::from([(w, 1)]) }
    }

    /// `1 + s_i`.
    pub fn one_plus_simple(i: usize, n: usize) -> Result<Self> {
        let mut out = GroupAlgebraElement::one(n);
        out.add_term(Permutation::simple(i, n)?, 1);
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Permutation) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Permutation, c: i64) {
        assert_eq!(w.n(), self.n, "permutation size mismatch");
        let entry = self.terms.entry(w.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&w);
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::SizeMismatch(format!("ℤ[S_{}] vs ℤ[S_{}]", self.n, other.n)))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = GroupAlgebraElement::zero(self.n);
        if c != 0 {
            out.terms = self.terms.iter().map(|(w, &v)| (w.clone(), v * c)).collect();
        }
        out
    }

    /// Convolution product extending [`Permutation::compose`].
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = GroupAlgebraElement::zero(self.n);
        for (u, &a) in &self.terms {
            for (v, &b) in &other.terms {
                out.add_term(u.compose(v)?, a * b);
            }
        }
        Ok(out)
    }

    /// Pointwise product on the permutation basis: `u ⋆ w = δ_{u,w} u`.
    pub fn star(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = GroupAlgebraElement::zero(self.n);
        for (w, &a) in &self.terms {
            if let Some(&b) = other.terms.get(w) {
                out.add_term(w.clone(), a * b);
            }
        }
        Ok(out)
    }

    /// `Σ_w c_w sgn(w)`.
    pub fn sign_functional(&self) -> i64 {
        self.terms.iter().map(|(w, &c)| c * w.sign()).sum()
    }

    /// Sum of all coefficients.
    pub fn augmentation(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{c}·{w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `B(I) = Π_{i∈I} (1 + s_i)`, factors in increasing order of `i`.
pub fn b_of(set: &IndexSet, n: usize) -> Result<GroupAlgebraElement> {
    let mut out = GroupAlgebraElement::one(n);
    for &i in set {
        out = out.mul(&GroupAlgebraElement::one_plus_simple(i, n)?)?;
    }
    Ok(out)
}

/// A noncrossing perfect matching on `2n` boundary points. Endpoints are
/// numbered `0..n` up the left column, then `n..2n` up the right column.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KauffmanDiagram {
    partner: Vec<u8>,
}

impl KauffmanDiagram {
    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|e| if e < n { e + n } else { e - n } as u8).collect();
        KauffmanDiagram { partner }
    }

    /// The generator `t_i` (1-based): cups joining `i, i+1` on each side.
    pub fn generator(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::SizeMismatch(format!("t_{i} does not exist in TL_{n}")));
        }
        let mut d = KauffmanDiagram::identity(n);
        let (a, b) = (i - 1, i);
        d.partner[a] = b as u8;
        d.partner[b] = a as u8;
        d.partner[n + a] = (n + b) as u8;
        d.partner[n + b] = (n + a) as u8;
        Ok(d)
    }

    /// From a partner array using the 1-based endpoint labels `1..=2n`.
    pub fn from_partners(partners: &[usize]) -> Result<Self> {
        let m = partners.len();
        if !m.is_multiple_of(2) {
            return Err(Error::SizeMismatch(format!("odd number of endpoints {m}")));
        }
        let partner: Vec<u8> = partners.iter().map(|&p| p.wrapping_sub(1) as u8).collect();
        let valid = partner.iter().enumerate().all(|(e, &p)| {
            (p as usize) < m && p as usize != e && partner[p as usize] as usize == e
        });
        let d = KauffmanDiagram { partner };
        if !valid || !d.is_noncrossing() {
            return Err(Error::SizeMismatch(format!("{partners:?} is not a noncrossing matching")));
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    /// Partner of 0-based endpoint `e`.
    pub fn partner(&self, e: usize) -> usize {
        self.partner[e] as usize
    }

    fn circular(&self, e: usize) -> usize {
        let n = self.n();
        if e < n {
            e
        } else {
            3 * n - 1 - e
        }
    }

    /// Chord test on the circular order left-bottom → left-top → right-top →
    /// right-bottom.
    pub fn is_noncrossing(&self) -> bool {
        let arcs: Vec<(usize, usize)> = (0..self.partner.len())
            .filter(|&e| e < self.partner(e))
            .map(|e| {
                let (a, b) = (self.circular(e), self.circular(self.partner(e)));
                (a.min(b), a.max(b))
            })
            .collect();
        arcs.iter().all(|&(a, b)| {
            arcs.iter().all(|&(c, d)| {
                let c_in = a < c && c < b;
                let d_in = a < d && d < b;
                c_in == d_in
            })
        })
    }

    /// Places `other` to the right of `self`, gluing `self`'s right column to
    /// `other`'s left column. Returns the resulting diagram and the number of
    /// closed loops removed.
    pub fn concat(&self, other: &KauffmanDiagram) -> Result<(KauffmanDiagram, usize)> {
        let n = self.n();
        if other.n() != n {
            return Err(Error::SizeMismatch(format!("TL_{n} vs TL_{}", other.n())));
        }
        let mut result = vec![0u8; 2 * n];
        let mut middle_seen = vec![false; n];
        // Walk from an outer endpoint through the glued middle column.
        let trace = |first: bool, e: usize, middle_seen: &mut Vec<bool>| -> usize {
            let (mut first, mut e) = (first, e);
            loop {
                if first {
                    let p = self.partner(e);
                    if p < n {
                        return p;
                    }
                    middle_seen[p - n] = true;
                    first = false;
                    e = p - n;
                } else {
                    let p = other.partner(e);
                    if p >= n {
                        return p;
                    }
                    middle_seen[p] = true;
                    first = true;
                    e = p + n;
                }
            }
        };
        for e in 0..n {
            result[e] = trace(true, e, &mut middle_seen) as u8;
            result[n + e] = trace(false, n + e, &mut middle_seen) as u8;
        }
        let mut loops = 0;
        for start in 0..n {
            if middle_seen[start] {
                continue;
            }
            loops += 1;
            let mut m = start;
            loop {
                middle_seen[m] = true;
                let q = other.partner(m);
                middle_seen[q] = true;
                m = self.partner(n + q) - n;
                if m == start {
                    break;
                }
            }
        }
        Ok((KauffmanDiagram { partner: result }, loops))
    }

    /// All `C_n` diagrams, sorted.
    pub fn enumerate(n: usize) -> Result<Vec<KauffmanDiagram>> {
        if n > 10 {
            return Err(Error::BoundExceeded { what: "TL rank", value: n, bound: 10 });
        }
        fn matchings(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
            let Some((&first, rest)) = points.split_first() else { return vec![vec![]] };
            let mut out = Vec::new();
            for k in (0..rest.len()).step_by(2) {
                let inside = &rest[..k];
                let outside = &rest[k + 1..];
                for a in matchings(inside) {
                    for b in matchings(outside) {
                        let mut m = vec![(first, rest[k])];
                        m.extend(a.iter().copied());
                        m.extend(b.iter().copied());
                        out.push(m);
                    }
                }
            }
            out
        }
        let to_endpoint = |c: usize| if c < n { c } else { 3 * n - 1 - c };
        let points: Vec<usize> = (0..2 * n).collect();
        let mut out: Vec<KauffmanDiagram> = matchings(&points)
            .into_iter()
            .map(|m| {
                let mut partner = vec![0u8; 2 * n];
                for (a, b) in m {
                    let (ea, eb) = (to_endpoint(a), to_endpoint(b));
                    partner[ea] = eb as u8;
                    partner[eb] = ea as u8;
                }
                KauffmanDiagram { partner }
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// A shortest generator word `[i_1, …]` with `t_{i_1} ⋯ = 2^a · self`.
    pub fn generator_word(&self) -> Vec<usize> {
        static CACHE: OnceLock<RwLock<HashMap<usize, Arc<HashMap<KauffmanDiagram, Vec<usize>>>>>> =
            OnceLock::new();
        let n = self.n();
        let cache = CACHE.get_or_init(Default::default);
        let known = cache.read().expect("cache lock").get(&n).cloned();
        let table = match known {
            Some(t) => t,
            None => {
                let mut words = HashMap::from([(KauffmanDiagram::identity(n), Vec::new())]);
                let mut queue = VecDeque::from([KauffmanDiagram::identity(n)]);
                while let Some(d) = queue.pop_front() {
                    for i in 1..n {
                        let (next, _) =
                            d.concat(&KauffmanDiagram::generator(i, n).expect("in range")).expect("same n");
                        if !words.contains_key(&next) {
                            let mut w = words[&d].clone();
                            w.push(i);
                            words.insert(next.clone(), w);
                            queue.push_back(next);
                        }
                    }
                }
                let t = Arc::new(words);
                cache.write().expect("cache lock").insert(n, t.clone());
                t
            }
        };
        table[self].clone()
    }
}

impl fmt::Display for KauffmanDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = self.generator_word();
        if word.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", word.iter().map(|i| format!("t{i}")).collect::<Vec<_>>().join("*"))
        }
    }
}

/// An element of `TL_n(2)` over ℤ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TlElement {
    n: usize,
    terms: BTreeMap<KauffmanDiagram, i64>,
}

impl TlElement {
    pub fn zero(n: usize) -> Self {
        TlElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        TlElement::basis(KauffmanDiagram::identity(n))
    }

    pub fn basis(d: KauffmanDiagram) -> Self {
        let n = d.n();
        TlElement { n, terms: BTreeMap::from([(d, 1)]) }
    }

    pub fn generator(i: usize, n: usize) -> Result<Self> {
        Ok(TlElement::basis(KauffmanDiagram::generator(i, n)?))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<KauffmanDiagram, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, d: &KauffmanDiagram) -> i64 {
        self.terms.get(d).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, d: KauffmanDiagram, c: i64) {
        let entry = self.terms.entry(d.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&d);
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::SizeMismatch(format!("TL_{} vs TL_{}", self.n, other.n)))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (d, &c) in &other.terms {
            out.add_term(d.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = TlElement::zero(self.n);
        if c != 0 {
            out.terms = self.terms.iter().map(|(d, &v)| (d.clone(), v * c)).collect();
        }
        out
    }

    /// Bilinear extension of concatenation, each loop contributing a factor 2.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = TlElement::zero(self.n);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let (d, loops) = a.concat(b)?;
                out.add_term(d, (ca * cb) << loops);
            }
        }
        Ok(out)
    }

    /// If the element is `c·d` for a single diagram, returns `(c, d)`.
    pub fn as_single(&self) -> Option<(i64, &KauffmanDiagram)> {
        match self.terms.iter().collect::<Vec<_>>().as_slice() {
            [(d, &c)] => Some((c, d)),
            _ => None,
        }
    }
}

impl fmt::Display for TlElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(d, c)| format!("{c}·{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The product `Π_{i∈I} t_i` (increasing order), which is a single diagram.
pub fn tau_of(set: &IndexSet, n: usize) -> Result<KauffmanDiagram> {
    let mut d = KauffmanDiagram::identity(n);
    for &i in set {
        let (next, loops) = d.concat(&KauffmanDiagram::generator(i, n)?)?;
        debug_assert_eq!(loops, 0);
        d = next;
    }
    Ok(d)
}

type ThetaCache = HashMap<usize, Arc<RwLock<HashMap<Permutation, Arc<TlElement>>>>>;

/// `θ(w)` for a single permutation, memoized per `n`. Uses
/// `θ(w) = (t_i − 1)·θ(s_i w)` for the leftmost adjacent inversion `i`.
pub fn theta_perm(w: &Permutation) -> Arc<TlElement> {
    static CACHE: OnceLock<RwLock<ThetaCache>> = OnceLock::new();
    let n = w.n();
    let cache = CACHE.get_or_init(Default::default);
    let table = {
        let found = cache.read().expect("cache lock").get(&n).cloned();
        match found {
            Some(t) => t,
            None => cache.write().expect("cache lock").entry(n).or_default().clone(),
        }
    };
    if let Some(v) = table.read().expect("cache lock").get(w) {
        return v.clone();
    }
    let value = Arc::new(theta_uncached(w));
    table.write().expect("cache lock").insert(w.clone(), value.clone());
    value
}

fn theta_uncached(w: &Permutation) -> TlElement {
    let n = w.n();
    let word = w.reduced_word();
    let mut out = TlElement::one(n);
    for &i in &word {
        let factor = TlElement::generator(i, n)
            .expect("reduced word letters are in range")
            .add(&TlElement::one(n).scale(-1))
            .expect("same n");
        out = out.mul(&factor).expect("same n");
    }
    out
}

/// `θ` extended linearly.
pub fn theta(a: &GroupAlgebraElement) -> TlElement {
    let mut out = TlElement::zero(a.n());
    for (w, &c) in a.terms() {
        for (d, &v) in theta_perm(w).terms() {
            out.add_term(d.clone(), c * v);
        }
    }
    out
}

/// `f_τ(a)`: the coefficient of `τ` in `θ(a)`.
pub fn f_tau(tau: &KauffmanDiagram, a: &GroupAlgebraElement) -> Result<i64> {
    if tau.n() != a.n() {
        return Err(Error::SizeMismatch(format!("τ in TL_{} applied to ℤ[S_{}]", tau.n(), a.n())));
    }
    Ok(a.terms().iter().map(|(w, &c)| c * theta_perm(w).coefficient(tau)).sum())
}

/// `f_τ(w)` for a single permutation.
pub fn f_tau_perm(tau: &KauffmanDiagram, w: &Permutation) -> i64 {
    theta_perm(w).coefficient(tau)
}

/// Parses `"identity"`, `"I=1,3"` (the diagram `τ(I)`), or a generator word
/// `"t1*t3"` (reduced to its diagram) for `TL_n`.
pub fn parse_tau(text: &str, n: usize) -> Result<KauffmanDiagram> {
    let t = text.trim();
    if t == "identity" || t == "1" {
        return Ok(KauffmanDiagram::identity(n));
    }
    if let Some(rest) = t.strip_prefix("I=") {
        let set = parse_set(rest).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse { pos: pos + 2, msg },
            other => other,
        })?;
        if set.iter().any(|&i| i == 0 || i >= n) {
            return Err(Error::Parse { pos: 2, msg: format!("I must lie in [1, {}]", n - 1) });
        }
        return tau_of(&set, n);
    }
    let mut d = KauffmanDiagram::identity(n);
    let mut pos = 0;
    for piece in t.split('*') {
        let idx = piece
            .trim()
            .strip_prefix('t')
            .and_then(|s| s.parse::<usize>().ok())
            .filter(|&i| i >= 1 && i < n)
            .ok_or_else(|| Error::Parse {
                pos,
                msg: format!("expected a generator t1..t{}, found {piece:?}", n.saturating_sub(1)),
            })?;
        d = d.concat(&KauffmanDiagram::generator(idx, n)?)?.0;
        pos += piece.len() + 1;
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v).unwrap()
    }

    fn s(i: usize, n: usize) -> Permutation {
        Permutation::simple(i, n).unwrap()
    }

    fn t(i: usize, n: usize) -> TlElement {
        TlElement::generator(i, n).unwrap()
    }

    fn set(v: &[usize]) -> IndexSet {
        v.iter().copied().collect()
    }

    fn catalan(n: usize) -> usize {
        (0..n).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
    }

    #[test]
    fn composition_is_left_to_right() {
        assert_eq!(s(1, 3).compose(&s(2, 3)).unwrap(), perm(&[3, 1, 2]));
        assert_eq!(s(2, 3).compose(&s(1, 3)).unwrap(), perm(&[2, 3, 1]));
        let w = perm(&[2, 4, 1, 3]);
        assert_eq!(w.compose(&Permutation::identity(4)).unwrap(), w);
        assert_eq!(s(2, 4).compose(&s(2, 4)).unwrap(), Permutation::identity(4));
        assert!(s(1, 3).compose(&s(1, 4)).is_err());
    }

    #[test]
    fn reduced_words_multiply_back() {
        for n in 1..=6 {
            for w in Permutation::all(n) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                let mut prod = Permutation::identity(n);
                for &i in &word {
                    prod = prod.compose(&s(i, n)).unwrap();
                }
                assert_eq!(prod, w);
                assert_eq!(w.compose(&w.inverse()).unwrap(), Permutation::identity(n));
            }
        }
    }

    #[test]
    fn group_algebra_products() {
        let one_s1 = GroupAlgebraElement::one_plus_simple(1, 3).unwrap();
        let one_s2 = GroupAlgebraElement::one_plus_simple(2, 3).unwrap();
        let prod = one_s1.mul(&one_s2).unwrap();
        let mut expect = GroupAlgebraElement::one(3);
        for w in [s(1, 3), s(2, 3), perm(&[3, 1, 2])] {
            expect.add_term(w, 1);
        }
        assert_eq!(prod, expect);
        assert_eq!(prod, b_of(&set(&[1, 2]), 3).unwrap());
        assert_eq!(one_s1.mul(&one_s1).unwrap(), one_s1.scale(2));
        assert_eq!(prod.mul(&GroupAlgebraElement::one(3)).unwrap(), prod);
        assert_eq!(b_of(&set(&[]), 4).unwrap(), GroupAlgebraElement::one(4));
        assert_eq!(b_of(&set(&[1, 4]), 5).unwrap().terms().len(), 4);
    }

    #[test]
    fn star_products() {
        let n = 5;
        let b = |v: &[usize]| b_of(&set(v), n).unwrap();
        assert_eq!(b(&[1, 2, 4]).star(&b(&[1, 4])).unwrap(), b(&[1, 4]));
        assert!(b(&[1]).star(&GroupAlgebraElement::zero(n)).unwrap().is_zero());
        let l = GroupAlgebraElement::one_plus_simple(1, 3)
            .unwrap()
            .mul(&GroupAlgebraElement::one_plus_simple(2, 3).unwrap())
            .unwrap();
        let r = GroupAlgebraElement::one_plus_simple(2, 3)
            .unwrap()
            .mul(&GroupAlgebraElement::one_plus_simple(1, 3).unwrap())
            .unwrap();
        let st = l.star(&r).unwrap();
        let mut expect = GroupAlgebraElement::one(3);
        expect.add_term(s(1, 3), 1);
        expect.add_term(s(2, 3), 1);
        assert_eq!(st, expect);
        assert_eq!(st.sign_functional(), -1);
        assert_eq!(GroupAlgebraElement::one(3).sign_functional(), 1);
        assert_eq!(b_of(&set(&[2]), 3).unwrap().sign_functional(), 0);
    }

    #[test]
    fn star_of_b_is_b_of_intersection() {
        for n in 1..=6 {
            let subsets: Vec<IndexSet> = (0u32..1 << (n - 1))
                .map(|mask| (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
                .collect();
            let bs: Vec<_> = subsets.iter().map(|i| b_of(i, n).unwrap()).collect();
            for (i, bi) in subsets.iter().zip(&bs) {
                for (j, bj) in subsets.iter().zip(&bs) {
                    let meet: IndexSet = i.intersection(j).copied().collect();
                    assert_eq!(bi.star(bj).unwrap(), b_of(&meet, n).unwrap());
                }
            }
        }
    }

    #[test]
    fn tl_relations() {
        for n in 2..=6 {
            for i in 1..n {
                assert_eq!(t(i, n).mul(&t(i, n)).unwrap(), t(i, n).scale(2));
                for j in 1..n {
                    let tij = t(i, n).mul(&t(j, n)).unwrap();
                    if i.abs_diff(j) == 1 {
                        assert_eq!(tij.mul(&t(i, n)).unwrap(), t(i, n));
                    } else if i.abs_diff(j) >= 2 {
                        assert_eq!(tij, t(j, n).mul(&t(i, n)).unwrap());
                    }
                }
            }
        }
        let one = TlElement::one(4);
        assert_eq!(t(2, 4).mul(&one).unwrap(), t(2, 4));
        let (d, loops) =
            KauffmanDiagram::generator(1, 3).unwrap().concat(&KauffmanDiagram::generator(1, 3).unwrap()).unwrap();
        assert_eq!((d, loops), (KauffmanDiagram::generator(1, 3).unwrap(), 1));
    }

    #[test]
    fn figure_product_has_one_loop() {
        let n = 4;
        let word = [1, 2, 1, 1, 3];
        let mut d = KauffmanDiagram::identity(n);
        let mut loops = 0;
        for i in word {
            let (next, l) = d.concat(&KauffmanDiagram::generator(i, n).unwrap()).unwrap();
            d = next;
            loops += l;
        }
        assert_eq!(d, tau_of(&set(&[1, 3]), n).unwrap());
        assert_eq!(loops, 1);
    }

    #[test]
    fn catalan_counts() {
        for n in 1..=8 {
            let all = KauffmanDiagram::enumerate(n).unwrap();
            assert_eq!(all.len(), catalan(n));
            assert!(all.iter().all(|d| d.is_noncrossing()));
            // Every diagram is reachable from the generators.
            for d in &all {
                let mut e = KauffmanDiagram::identity(n);
                for &i in &d.generator_word() {
                    e = e.concat(&KauffmanDiagram::generator(i, n).unwrap()).unwrap().0;
                }
                assert_eq!(&e, d);
            }
        }
        assert!(KauffmanDiagram::enumerate(11).is_err());
    }

    #[test]
    fn diagram_validation() {
        assert!(KauffmanDiagram::from_partners(&[3, 4, 1, 2]).is_ok());
        // Left-bottom to right-top with left-top to right-bottom crosses.
        assert!(KauffmanDiagram::from_partners(&[4, 3, 2, 1]).is_err());
        assert!(KauffmanDiagram::from_partners(&[2, 1, 4, 3]).is_ok());
        assert!(KauffmanDiagram::from_partners(&[1, 2]).is_err());
    }

    #[test]
    fn theta_examples() {
        let n = 3;
        let s121 = perm(&[3, 2, 1]);
        let th = theta_perm(&s121);
        let t1 = KauffmanDiagram::generator(1, n).unwrap();
        let t2 = KauffmanDiagram::generator(2, n).unwrap();
        let t12 = tau_of(&set(&[1, 2]), n).unwrap();
        let t21 = t2.concat(&t1).unwrap().0;
        let mut expect = TlElement::zero(n);
        expect.add_term(t1.clone(), 1);
        expect.add_term(t2.clone(), 1);
        expect.add_term(t12.clone(), -1);
        expect.add_term(t21, -1);
        expect.add_term(KauffmanDiagram::identity(n), -1);
        assert_eq!(*th, expect);
        let s12 = perm(&[3, 1, 2]);
        assert_eq!(f_tau_perm(&t12, &s12), 1);
        assert_eq!(f_tau_perm(&t12, &s121), -1);
        for w in Permutation::all(4) {
            assert_eq!(f_tau_perm(&KauffmanDiagram::identity(4), &w), w.sign());
        }
        assert_eq!(*theta_perm(&Permutation::identity(3)), TlElement::one(3));
        for n in 2..=6 {
            for mask in 0u32..1 << (n - 1) {
                let i: IndexSet = (1..n).filter(|k| mask >> (k - 1) & 1 == 1).collect();
                let th = theta(&b_of(&i, n).unwrap());
                assert_eq!(th, TlElement::basis(tau_of(&i, n).unwrap()));
            }
        }
    }

    #[test]
    fn theta_kills_the_symmetrizer() {
        let all: GroupAlgebraElement = Permutation::all(3).into_iter().fold(
            GroupAlgebraElement::zero(3),
            |mut acc, w| {
                acc.add_term(w, 1);
                acc
            },
        );
        assert!(theta(&all).is_zero());
    }

    #[test]
    fn theta_is_a_homomorphism() {
        for n in 1..=4 {
            let perms = Permutation::all(n);
            for u in &perms {
                for v in &perms {
                    let lhs = theta_perm(&u.compose(v).unwrap());
                    let rhs = theta_perm(u).mul(&theta_perm(v)).unwrap();
                    assert_eq!(*lhs, rhs, "{u} {v}");
                }
            }
        }
    }

    #[test]
    fn theta_is_reconstructed_from_coefficients() {
        for n in 1..=5 {
            let diagrams = KauffmanDiagram::enumerate(n).unwrap();
            for w in Permutation::all(n) {
                let mut rebuilt = TlElement::zero(n);
                for d in &diagrams {
                    rebuilt.add_term(d.clone(), f_tau_perm(d, &w));
                }
                assert_eq!(rebuilt, *theta_perm(&w));
            }
        }
    }

    #[test]
    fn tau_of_is_injective() {
        for n in 1..=8 {
            let mut seen = std::collections::HashSet::new();
            for mask in 0u32..1 << (n - 1) {
                let i: IndexSet = (1..n).filter(|k| mask >> (k - 1) & 1 == 1).collect();
                assert!(seen.insert(tau_of(&i, n).unwrap()));
            }
        }
    }

    #[test]
    fn tau_parsing() {
        let n = 4;
        assert_eq!(parse_tau("identity", n).unwrap(), KauffmanDiagram::identity(n));
        assert_eq!(parse_tau("I=1,3", n).unwrap(), tau_of(&set(&[1, 3]), n).unwrap());
        assert_eq!(parse_tau("t1*t3", n).unwrap(), tau_of(&set(&[1, 3]), n).unwrap());
        assert_eq!(parse_tau("t1*t2*t1", n).unwrap(), tau_of(&set(&[1]), n).unwrap());
        assert!(matches!(parse_tau("t1*t9", n), Err(Error::Parse { pos: 3, .. })));
        assert!(parse_tau("I=4", n).is_err());
        assert_eq!(tau_of(&set(&[1, 3]), n).unwrap().to_string(), "t1*t3");
    }

    #[test]
    fn cycle_types() {
        assert_eq!(perm(&[2, 3, 1, 5, 4]).cycle_type().parts(), &[3, 2]);
        assert_eq!(Permutation::identity(3).cycle_type().parts(), &[1, 1, 1]);
    }
}
