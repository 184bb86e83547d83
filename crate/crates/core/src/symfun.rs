//! Symmetric polynomial generators and basis expansions in tensor products of
//! the Schur and monomial bases.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use ibig::IBig;
use itertools::Itertools;
use serde::Serialize;

use crate::combinatorics::{Partition, SkewShape};
use crate::error::{Error, Result};
use crate::poly::{is_negative, is_zero, AlphabetSpec, Coeff, Monomial, MultiPolynomial};
use crate::tableaux::ssyt_contents;

/// Largest `|μ|` accepted by [`power_sum_in_h`].
pub const POWER_SUM_BOUND: usize = 8;

fn one() -> Coeff {
    IBig::from(1u8)
}

fn slot_poly(spec: &AlphabetSpec, slot: usize, exps: &[u16], c: Coeff) -> (Monomial, Coeff) {
    (Monomial::from_slot_exponents(spec, slot, exps).expect("exponents fit the slot"), c)
}

/// `e_d` in the variables of alphabet `slot`; zero for `d < 0` or `d > N`.
pub fn elementary(d: i64, slot: usize, spec: &AlphabetSpec) -> MultiPolynomial {
    let n = spec.size(slot);
    let mut out = MultiPolynomial::zero(spec);
    if d < 0 || d as usize > n {
        return out;
    }
    for subset in (0..n).combinations(d as usize) {
        let mut exps = vec![0u16; n];
        for i in subset {
            exps[i] = 1;
        }
        let (m, c) = slot_poly(spec, slot, &exps, one());
        out.add_term(m, c);
    }
    out
}

/// `h_d` in the variables of alphabet `slot`; zero for `d < 0`.
pub fn homogeneous(d: i64, slot: usize, spec: &AlphabetSpec) -> MultiPolynomial {
    let n = spec.size(slot);
    let mut out = MultiPolynomial::zero(spec);
    if d < 0 {
        return out;
    }
    for multiset in (0..n).combinations_with_replacement(d as usize) {
        let mut exps = vec![0u16; n];
        for i in multiset {
            exps[i] += 1;
        }
        let (m, c) = slot_poly(spec, slot, &exps, one());
        out.add_term(m, c);
    }
    out
}

/// `m_λ`: the sum over distinct rearrangements of the padded part vector.
pub fn monomial_sym(lambda: &Partition, slot: usize, spec: &AlphabetSpec) -> Result<MultiPolynomial> {
    let n = spec.size(slot);
    if lambda.len() > n {
        return Err(Error::InsufficientAlphabet { slot, size: n, degree: lambda.len() });
    }
    let padded: Vec<u16> = lambda.padded(n).into_iter().map(|p| p as u16).collect();
    let mut out = MultiPolynomial::zero(spec);
    for perm in padded.iter().copied().permutations(n).unique() {
        let (m, c) = slot_poly(spec, slot, &perm, one());
        out.add_term(m, c);
    }
    Ok(out)
}

/// `p_d = Σ x_i^d`.
pub fn power_sum(d: usize, slot: usize, spec: &AlphabetSpec) -> MultiPolynomial {
    let n = spec.size(slot);
    let mut out = MultiPolynomial::zero(spec);
    if d == 0 {
        return MultiPolynomial::constant(spec, IBig::from(n));
    }
    for i in 0..n {
        let mut exps = vec![0u16; n];
        exps[i] = d as u16;
        let (m, c) = slot_poly(spec, slot, &exps, one());
        out.add_term(m, c);
    }
    out
}

/// `s_{λ/μ}` as the generating function of semistandard tableaux.
pub fn schur(shape: &SkewShape, slot: usize, spec: &AlphabetSpec) -> MultiPolynomial {
    let mut out = MultiPolynomial::zero(spec);
    for content in ssyt_contents(shape, spec.size(slot)) {
        let (m, c) = slot_poly(spec, slot, &content, one());
        out.add_term(m, c);
    }
    out
}

/// Expansion of `p_μ` in the `h` basis, by Newton's identity
/// `p_n = n h_n − Σ_{i<n} h_{n−i} p_i` applied to each part.
pub fn power_sum_in_h(mu: &Partition) -> Result<BTreeMap<Partition, i64>> {
    if mu.size() > POWER_SUM_BOUND {
        return Err(Error::BoundExceeded {
            what: "power sum degree",
            value: mu.size(),
            bound: POWER_SUM_BOUND,
        });
    }
    fn times(a: &BTreeMap<Partition, i64>, b: &BTreeMap<Partition, i64>) -> BTreeMap<Partition, i64> {
        let mut out = BTreeMap::new();
        for (pa, ca) in a {
            for (pb, cb) in b {
                let mut parts = pa.parts().to_vec();
                parts.extend_from_slice(pb.parts());
                parts.sort_unstable_by(|x, y| y.cmp(x));
                *out.entry(Partition::new(parts).expect("sorted")).or_insert(0) += ca * cb;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }
    let h = |d: usize| BTreeMap::from([(Partition::new(vec![d]).expect("single part"), 1i64)]);
    let mut single: Vec<BTreeMap<Partition, i64>> = vec![BTreeMap::new()];
    for n in 1..=mu.part(0) {
        let mut pn: BTreeMap<Partition, i64> = h(n).into_iter().map(|(k, v)| (k, v * n as i64)).collect();
        for i in 1..n {
            for (k, v) in times(&h(n - i), &single[i]) {
                *pn.entry(k).or_insert(0) -= v;
            }
        }
        pn.retain(|_, c| *c != 0);
        single.push(pn);
    }
    let mut out = BTreeMap::from([(Partition::empty(), 1i64)]);
    for &part in mu.parts() {
        out = times(&out, &single[part]);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Schur,
    Monomial,
}

/// Coefficients on tensor products `b_{λ^(1)}(x^(1)) ⋯ b_{λ^(k)}(x^(k))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    basis: Basis,
    spec: AlphabetSpec,
    terms: BTreeMap<Vec<Partition>, Coeff>,
}

#[derive(Serialize)]
struct ExpansionTermJson {
    partitions: Vec<Partition>,
    coeff: String,
}

impl Expansion {
    pub fn zero(basis: Basis, spec: &AlphabetSpec) -> Self {
        Expansion { basis, spec: spec.clone(), terms: BTreeMap::new() }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn spec(&self) -> &AlphabetSpec {
        &self.spec
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Partition>, Coeff> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, parts: &[Partition]) -> Coeff {
        self.terms.get(parts).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, parts: Vec<Partition>, c: Coeff) {
        if is_zero(&c) {
            return;
        }
        accumulate(&mut self.terms, parts, c);
    }

    pub fn add(&mut self, other: &Expansion) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !is_negative(c))
    }

    /// Terms with negative coefficients, smallest partition tuple first.
    pub fn negative_terms(&self) -> Vec<(&Vec<Partition>, &Coeff)> {
        self.terms.iter().filter(|(_, c)| is_negative(c)).collect()
    }

    /// Sums the basis elements back into a polynomial.
    pub fn to_polynomial(&self) -> Result<MultiPolynomial> {
        let mut out = MultiPolynomial::zero(&self.spec);
        for (parts, c) in &self.terms {
            let factors = parts
                .iter()
                .enumerate()
                .map(|(s, lam)| {
                    let single = AlphabetSpec::single(self.spec.size(s));
                    match self.basis {
                        Basis::Schur => Ok(schur(&SkewShape::straight(lam.clone()), 0, &single)),
                        Basis::Monomial => monomial_sym(lam, 0, &single),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            let refs: Vec<&MultiPolynomial> = factors.iter().collect();
            out.add_tensor_product(&refs, c);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<ExpansionTermJson> = self
            .terms
            .iter()
            .map(|(k, v)| ExpansionTermJson { partitions: k.clone(), coeff: v.to_string() })
            .collect();
        serde_json::to_value(terms).expect("plain data")
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.basis {
            Basis::Schur => "s",
            Basis::Monomial => "m",
        };
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(k, v)| {
                let factors: Vec<String> = k.iter().map(|p| format!("{letter}{p}")).collect();
                format!("{v}*{}", factors.join("⊗"))
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

/// `ω` on a Schur expansion: conjugate every partition in every slot.
pub fn omega_on_expansion(e: &Expansion) -> Expansion {
    let mut out = Expansion::zero(e.basis, &e.spec);
    for (k, v) in &e.terms {
        out.add_term(k.iter().map(Partition::conjugate).collect(), v.clone());
    }
    out
}

/// `map[key] += c`, removing the entry when it cancels.
fn accumulate<K: Ord>(map: &mut BTreeMap<K, Coeff>, key: K, c: Coeff) {
    match map.entry(key) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if is_zero(e.get()) {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

fn partition_of(exps: &[u16]) -> Partition {
    Partition::new(exps.iter().map(|&e| e as usize).collect()).expect("dominant exponents")
}

/// Expansion in the tensor monomial basis.
pub fn expand_in_monomial(p: &MultiPolynomial) -> Result<Expansion> {
    p.check_symmetric()?;
    let spec = p.spec();
    let mut out = Expansion::zero(Basis::Monomial, spec);
    for (m, c) in p.terms() {
        if m.is_dominant(spec) {
            let parts = (0..spec.count()).map(|s| partition_of(m.slot_exponents(spec, s))).collect();
            out.add_term(parts, c.clone());
        }
    }
    Ok(out)
}

/// Expansion in the tensor Schur basis. Each alphabet must have at least as
/// many variables as the degree it carries, so the expansion is faithful.
pub fn expand_in_schur(p: &MultiPolynomial) -> Result<Expansion> {
    for slot in 0..p.spec().count() {
        let degree = p.slot_degree(slot);
        if p.spec().size(slot) < degree {
            return Err(Error::InsufficientAlphabet { slot, size: p.spec().size(slot), degree });
        }
    }
    expand_in_schur_truncated(p)
}

type KostkaRow = Arc<Vec<(Vec<u16>, Coeff)>>;

/// Dominant part of `s_λ(x_1..x_n)`: Kostka numbers `K_{λ,α}` for partitions
/// `α` with at most `n` parts, padded to length `n`.
fn kostka_row(lambda: &Partition, n: usize) -> KostkaRow {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, usize), KostkaRow>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (lambda.clone(), n);
    if let Some(row) = cache.read().expect("cache lock").get(&key) {
        return row.clone();
    }
    let mut counts: BTreeMap<Vec<u16>, usize> = BTreeMap::new();
    for content in ssyt_contents(&SkewShape::straight(lambda.clone()), n) {
        if content.windows(2).all(|w| w[0] >= w[1]) {
            *counts.entry(content).or_insert(0) += 1;
        }
    }
    let row: KostkaRow = Arc::new(counts.into_iter().map(|(k, v)| (k, IBig::from(v))).collect());
    cache.write().expect("cache lock").insert(key, row.clone());
    row
}

/// Schur expansion over possibly truncated alphabets: only partitions with at
/// most `N_i` parts appear in slot `i`, and the result is the unique such
/// expansion of `p`.
///
/// A symmetric polynomial is determined by its coefficients on dominant
/// monomials (weakly decreasing exponents in every slot), so peeling works
/// on that projection: take the largest dominant monomial `x^α`, record its
/// coefficient on `s_α`, subtract that multiple of the dominant part of
/// `s_α`, and repeat. Leading monomials strictly decrease, so this ends.
pub fn expand_in_schur_truncated(p: &MultiPolynomial) -> Result<Expansion> {
    p.check_symmetric()?;
    let spec = p.spec();
    let k = spec.count();
    let mut residual: BTreeMap<Monomial, Coeff> =
        p.terms().filter(|(m, _)| m.is_dominant(spec)).map(|(m, c)| (m.clone(), c.clone())).collect();
    let mut out = Expansion::zero(Basis::Schur, spec);
    while let Some((lead, c)) = residual.pop_last() {
        let parts: Vec<Partition> = (0..k).map(|s| partition_of(lead.slot_exponents(spec, s))).collect();
        let rows: Vec<KostkaRow> =
            parts.iter().enumerate().map(|(s, lam)| kostka_row(lam, spec.size(s))).collect();
        for combo in rows.iter().map(|r| r.iter()).multi_cartesian_product() {
            let exps: Vec<Vec<u16>> = combo.iter().map(|(e, _)| e.clone()).collect();
            let m = Monomial::from_exponents(spec, &exps)?;
            if m == lead {
                continue;
            }
            let delta = combo.iter().fold(c.clone(), |acc, (_, kv)| acc * kv);
            accumulate(&mut residual, m, -delta);
        }
        out.add_term(parts, c);
    }
    Ok(out)
}

/// Reference Schur expansion by peeling the full polynomial: subtract
/// `c · Π_i s_{λ^(i)}(x^(i))` for the leading monomial until nothing is left.
/// Much slower than [`expand_in_schur`]; used to cross-check it.
pub fn expand_in_schur_reference(p: &MultiPolynomial) -> Result<Expansion> {
    p.check_symmetric()?;
    let spec = p.spec().clone();
    let mut residual = p.clone();
    let mut out = Expansion::zero(Basis::Schur, &spec);
    let mut schur_cache: HashMap<(usize, Partition), MultiPolynomial> = HashMap::new();
    while let Some((lead, c)) = residual.leading_term() {
        let (lead, c) = (lead.clone(), c.clone());
        let parts: Vec<Partition> =
            (0..spec.count()).map(|s| partition_of(lead.slot_exponents(&spec, s))).collect();
        let factors: Vec<MultiPolynomial> = parts
            .iter()
            .enumerate()
            .map(|(s, lam)| {
                schur_cache
                    .entry((spec.size(s), lam.clone()))
                    .or_insert_with(|| {
                        schur(&SkewShape::straight(lam.clone()), 0, &AlphabetSpec::single(spec.size(s)))
                    })
                    .clone()
            })
            .collect();
        let refs: Vec<&MultiPolynomial> = factors.iter().collect();
        residual.add_tensor_product(&refs, &-&c);
        out.add_term(parts, c);
    }
    Ok(out)
}
