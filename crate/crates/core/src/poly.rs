//! Sparse multivariate polynomials with big-integer coefficients over several
//! disjoint finite alphabets.
//!
//! A monomial is stored as one flat key: for each alphabet its total degree
//! followed by its exponent vector. Lexicographic order on that key is graded
//! lex within each alphabet with alphabets concatenated, which is the order the
//! Schur peeling relies on.

use std::fmt;

use ibig::IBig;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Coeff = IBig;

pub fn is_zero(c: &Coeff) -> bool {
    *c == IBig::from(0u8)
}

pub fn is_negative(c: &Coeff) -> bool {
    *c < IBig::from(0u8)
}

/// Sizes `N_1..N_k` of the alphabets `x^(1)..x^(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlphabetSpec {
    sizes: Vec<usize>,
}

impl AlphabetSpec {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::AlphabetMismatch(format!(
                "alphabet sizes must be a nonempty list of positive integers, got {sizes:?}"
            )));
        }
        Ok(AlphabetSpec { sizes })
    }

    pub fn single(n: usize) -> Self {
        AlphabetSpec::new(vec![n]).expect("positive size")
    }

    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    pub fn size(&self, slot: usize) -> usize {
        self.sizes[slot]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    fn key_len(&self) -> usize {
        self.sizes.iter().map(|n| n + 1).sum()
    }

    fn offset(&self, slot: usize) -> usize {
        self.sizes[..slot].iter().map(|n| n + 1).sum()
    }

    /// The alphabets of `self` followed by those of `other`.
    pub fn tensor(&self, other: &AlphabetSpec) -> AlphabetSpec {
        AlphabetSpec { sizes: self.sizes.iter().chain(&other.sizes).copied().collect() }
    }

    fn check(&self, other: &AlphabetSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch(format!("{:?} vs {:?}", self.sizes, other.sizes)))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    key: SmallVec<[u16; 16]>,
}

impl Monomial {
    pub fn one(spec: &AlphabetSpec) -> Self {
        Monomial { key: SmallVec::from_elem(0, spec.key_len()) }
    }

    /// Builds a monomial from one exponent vector per alphabet.
    pub fn from_exponents(spec: &AlphabetSpec, exps: &[Vec<u16>]) -> Result<Self> {
        if exps.len() != spec.count() || exps.iter().zip(&spec.sizes).any(|(e, &n)| e.len() != n) {
            return Err(Error::AlphabetMismatch(format!(
                "exponent vectors {exps:?} do not fit alphabet sizes {:?}",
                spec.sizes
            )));
        }
        let mut key = SmallVec::with_capacity(spec.key_len());
        for e in exps {
            key.push(e.iter().sum());
            key.extend_from_slice(e);
        }
        Ok(Monomial { key })
    }

    /// Single-alphabet convenience constructor.
    pub fn from_slot_exponents(spec: &AlphabetSpec, slot: usize, exps: &[u16]) -> Result<Self> {
        let mut all: Vec<Vec<u16>> = spec.sizes.iter().map(|&n| vec![0; n]).collect();
        if exps.len() > spec.size(slot) {
            return Err(Error::AlphabetMismatch(format!(
                "{} exponents for an alphabet of size {}",
                exps.len(),
                spec.size(slot)
            )));
        }
        all[slot][..exps.len()].copy_from_slice(exps);
        Monomial::from_exponents(spec, &all)
    }

    /// The variable `x^(slot)_i`, with `i` 1-based.
    pub fn variable(spec: &AlphabetSpec, slot: usize, i: usize) -> Result<Self> {
        if i == 0 || i > spec.size(slot) {
            return Err(Error::AlphabetMismatch(format!(
                "variable {i} outside alphabet {slot} of size {}",
                spec.size(slot)
            )));
        }
        let mut m = Monomial::one(spec);
        let off = spec.offset(slot);
        m.key[off] = 1;
        m.key[off + i] = 1;
        Ok(m)
    }

    pub fn slot_exponents<'a>(&'a self, spec: &AlphabetSpec, slot: usize) -> &'a [u16] {
        let off = spec.offset(slot);
        &self.key[off + 1..off + 1 + spec.size(slot)]
    }

    pub fn slot_degree(&self, spec: &AlphabetSpec, slot: usize) -> usize {
        self.key[spec.offset(slot)] as usize
    }

    pub fn exponents(&self, spec: &AlphabetSpec) -> Vec<Vec<u16>> {
        (0..spec.count()).map(|s| self.slot_exponents(spec, s).to_vec()).collect()
    }

    pub fn total_degree(&self, spec: &AlphabetSpec) -> usize {
        (0..spec.count()).map(|s| self.slot_degree(spec, s)).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.key.len(), other.key.len());
        Monomial { key: self.key.iter().zip(&other.key).map(|(a, b)| a + b).collect() }
    }

    fn concat(&self, other: &Monomial) -> Monomial {
        let mut key = self.key.clone();
        key.extend_from_slice(&other.key);
        Monomial { key }
    }

    fn swapped(&self, spec: &AlphabetSpec, slot: usize, i: usize, j: usize) -> Monomial {
        let off = spec.offset(slot);
        let mut key = self.key.clone();
        key.swap(off + 1 + i, off + 1 + j);
        Monomial { key }
    }

    /// Whether every alphabet's exponent vector is weakly decreasing.
    pub fn is_dominant(&self, spec: &AlphabetSpec) -> bool {
        (0..spec.count()).all(|s| self.slot_exponents(spec, s).windows(2).all(|w| w[0] >= w[1]))
    }
}

/// A sparse polynomial; equality is exact equality of term maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPolynomial {
    spec: AlphabetSpec,
    terms: FxHashMap<Monomial, Coeff>,
}

impl MultiPolynomial {
    pub fn zero(spec: &AlphabetSpec) -> Self {
        MultiPolynomial { spec: spec.clone(), terms: FxHashMap::default() }
    }

    pub fn one(spec: &AlphabetSpec) -> Self {
        MultiPolynomial::constant(spec, IBig::from(1u8))
    }

    pub fn constant(spec: &AlphabetSpec, c: Coeff) -> Self {
        MultiPolynomial::term(spec, Monomial::one(spec), c)
    }

    pub fn term(spec: &AlphabetSpec, m: Monomial, c: Coeff) -> Self {
        let mut p = MultiPolynomial::zero(spec);
        p.add_term(m, c);
        p
    }

    pub fn variable(spec: &AlphabetSpec, slot: usize, i: usize) -> Result<Self> {
        Ok(MultiPolynomial::term(spec, Monomial::variable(spec, slot, i)?, IBig::from(1u8)))
    }

    pub fn spec(&self) -> &AlphabetSpec {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    /// Terms in decreasing monomial order (leading term first).
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_unstable_by(|a, b| b.0.cmp(a.0));
        v
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().max_by(|a, b| a.0.cmp(b.0))
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Adds `c·m`, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if is_zero(e.get()) {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.spec.check(&other.spec)?;
        let mut out = self.clone();
        out.add_assign_ref(other);
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.spec.check(&other.spec)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.spec.check(&other.spec)?;
        let mut out = MultiPolynomial::zero(&self.spec);
        out.add_product(self, other, &IBig::from(1u8));
        Ok(out)
    }

    fn add_assign_ref(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// `self += scale · a · b`, all over the alphabets of `self`.
    pub fn add_product(&mut self, a: &Self, b: &Self, scale: &Coeff) {
        assert_eq!(a.spec, self.spec, "alphabet mismatch");
        assert_eq!(b.spec, self.spec, "alphabet mismatch");
        self.terms.reserve(a.len().saturating_mul(b.len()).min(1 << 20));
        for (ma, ca) in &a.terms {
            let sa = ca * scale;
            for (mb, cb) in &b.terms {
                self.add_term(ma.mul(mb), &sa * cb);
            }
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let mut out = MultiPolynomial::zero(&self.spec);
        if !is_zero(c) {
            out.terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = MultiPolynomial::one(&self.spec);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// The product in the tensor alphabet `self.spec ⊗ other.spec`.
    pub fn tensor(&self, other: &Self) -> Self {
        let spec = self.spec.tensor(&other.spec);
        let mut out = MultiPolynomial::zero(&spec);
        out.terms.reserve(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.terms.insert(ma.concat(mb), ca * cb);
            }
        }
        out
    }

    /// Adds `scale · Π parts` where the parts live on consecutive alphabets
    /// whose tensor is `self.spec`.
    pub fn add_tensor_product(&mut self, parts: &[&MultiPolynomial], scale: &Coeff) {
        fn rec(
            out: &mut MultiPolynomial,
            parts: &[&MultiPolynomial],
            key: &mut SmallVec<[u16; 16]>,
            coeff: &Coeff,
        ) {
            match parts.split_first() {
                None => out.add_term(Monomial { key: key.clone() }, coeff.clone()),
                Some((first, rest)) => {
                    let mark = key.len();
                    for (m, c) in &first.terms {
                        key.extend_from_slice(&m.key);
                        rec(out, rest, key, &(coeff * c));
                        key.truncate(mark);
                    }
                }
            }
        }
        debug_assert_eq!(
            parts.iter().map(|p| p.spec.key_len()).sum::<usize>(),
            self.spec.key_len()
        );
        if is_zero(scale) {
            return;
        }
        rec(self, parts, &mut SmallVec::new(), scale);
    }

    /// Largest total degree of a term (0 for the zero polynomial).
    pub fn total_degree(&self) -> usize {
        self.terms.keys().map(|m| m.total_degree(&self.spec)).max().unwrap_or(0)
    }

    /// Largest degree carried by alphabet `slot`.
    pub fn slot_degree(&self, slot: usize) -> usize {
        self.terms.keys().map(|m| m.slot_degree(&self.spec, slot)).max().unwrap_or(0)
    }

    /// Every stored coefficient is positive (vacuous for zero).
    pub fn is_coefficientwise_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !is_negative(c))
    }

    /// Swaps the variables `i` and `j` (0-based) of alphabet `slot`.
    pub fn swap_variables(&self, slot: usize, i: usize, j: usize) -> Self {
        MultiPolynomial {
            spec: self.spec.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.swapped(&self.spec, slot, i, j), c.clone()))
                .collect(),
        }
    }

    /// Invariance under every adjacent transposition of every alphabet.
    pub fn check_symmetric(&self) -> Result<()> {
        for slot in 0..self.spec.count() {
            for i in 0..self.spec.size(slot).saturating_sub(1) {
                for (m, c) in &self.terms {
                    let swapped = m.swapped(&self.spec, slot, i, i + 1);
                    if self.terms.get(&swapped) != Some(c) {
                        return Err(Error::NotSymmetric { slot, var: i + 1, next: i + 2 });
                    }
                }
            }
        }
        Ok(())
    }

    /// Re-expresses a polynomial over `spec`, which must have the same
    /// alphabet count and sizes at least as large; new variables get exponent 0.
    pub fn widen(&self, spec: &AlphabetSpec) -> Result<Self> {
        if spec.count() != self.spec.count()
            || (0..spec.count()).any(|s| spec.size(s) < self.spec.size(s))
        {
            return Err(Error::AlphabetMismatch(format!(
                "cannot widen {:?} to {:?}",
                self.spec.sizes, spec.sizes
            )));
        }
        let mut out = MultiPolynomial::zero(spec);
        for (m, c) in &self.terms {
            let mut exps = m.exponents(&self.spec);
            for (s, e) in exps.iter_mut().enumerate() {
                e.resize(spec.size(s), 0);
            }
            out.terms.insert(Monomial::from_exponents(spec, &exps)?, c.clone());
        }
        Ok(out)
    }

    /// Sets the variables past the first `spec.size(s)` of each alphabet to zero.
    pub fn truncate(&self, spec: &AlphabetSpec) -> Result<Self> {
        if spec.count() != self.spec.count()
            || (0..spec.count()).any(|s| spec.size(s) > self.spec.size(s))
        {
            return Err(Error::AlphabetMismatch(format!(
                "cannot truncate {:?} to {:?}",
                self.spec.sizes, spec.sizes
            )));
        }
        let mut out = MultiPolynomial::zero(spec);
        for (m, c) in &self.terms {
            let exps = m.exponents(&self.spec);
            if exps.iter().enumerate().all(|(s, e)| e[spec.size(s)..].iter().all(|&x| x == 0)) {
                let cut: Vec<Vec<u16>> =
                    exps.iter().enumerate().map(|(s, e)| e[..spec.size(s)].to_vec()).collect();
                out.terms.insert(Monomial::from_exponents(spec, &cut)?, c.clone());
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<TermJson> = self
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| TermJson { exps: m.exponents(&self.spec), coeff: c.to_string() })
            .collect();
        serde_json::to_value(terms).expect("plain data")
    }

    pub fn from_json(spec: &AlphabetSpec, value: &serde_json::Value) -> Result<Self> {
        let terms: Vec<TermJson> = serde_json::from_value(value.clone())
            .map_err(|e| Error::Parse { pos: 0, msg: e.to_string() })?;
        let mut out = MultiPolynomial::zero(spec);
        for t in terms {
            let c: IBig = t
                .coeff
                .parse()
                .map_err(|_| Error::Parse { pos: 0, msg: format!("bad coefficient {}", t.coeff) })?;
            out.add_term(Monomial::from_exponents(spec, &t.exps)?, c);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exps: Vec<Vec<u16>>,
    coeff: String,
}

fn slot_letter(slot: usize) -> String {
    match slot {
        0 => "x".into(),
        1 => "y".into(),
        2 => "z".into(),
        s => format!("w{s}_"),
    }
}

impl fmt::Display for MultiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = is_negative(c);
            let abs = if neg { -c } else { c.clone() };
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            for s in 0..self.spec.count() {
                for (i, &e) in m.slot_exponents(&self.spec, s).iter().enumerate() {
                    match e {
                        0 => {}
                        1 => factors.push(format!("{}{}", slot_letter(s), i + 1)),
                        _ => factors.push(format!("{}{}^{}", slot_letter(s), i + 1, e)),
                    }
                }
            }
            let one = IBig::from(1u8);
            match (abs == one, factors.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{}", factors.join("*"))?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&MultiPolynomial> for &MultiPolynomial {
            type Output = MultiPolynomial;
            /// Panics on mismatched alphabets; see the `checked_*` methods.
            fn $method(self, rhs: &MultiPolynomial) -> MultiPolynomial {
                self.$checked(rhs).expect("alphabet mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn neg(self) -> MultiPolynomial {
        self.scale(&IBig::from(-1))
    }
}

impl std::ops::AddAssign<&MultiPolynomial> for MultiPolynomial {
    fn add_assign(&mut self, rhs: &MultiPolynomial) {
        self.spec.check(&rhs.spec).expect("alphabet mismatch");
        self.add_assign_ref(rhs);
    }
}

impl std::ops::SubAssign<&MultiPolynomial> for MultiPolynomial {
    fn sub_assign(&mut self, rhs: &MultiPolynomial) {
        self.spec.check(&rhs.spec).expect("alphabet mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(spec: &AlphabetSpec, slot: usize, i: usize) -> MultiPolynomial {
        MultiPolynomial::variable(spec, slot, i).unwrap()
    }

    fn c(v: i64) -> Coeff {
        IBig::from(v)
    }

    #[test]
    fn ring_examples() {
        let spec = AlphabetSpec::single(2);
        let (x1, x2) = (x(&spec, 0, 1), x(&spec, 0, 2));
        let lhs = &(&x1 + &x2) * &(&x1 - &x2);
        let rhs = &(&x1 * &x1) - &(&x2 * &x2);
        assert_eq!(lhs, rhs);
        assert_eq!(&lhs * &MultiPolynomial::one(&spec), lhs);
        assert!((&lhs + &(-&lhs)).is_zero());
        assert_eq!((&lhs - &lhs).len(), 0);
    }

    #[test]
    fn coefficients() {
        let spec = AlphabetSpec::single(3);
        let (x1, x2, x3) = (x(&spec, 0, 1), x(&spec, 0, 2), x(&spec, 0, 3));
        let x2sq = Monomial::from_slot_exponents(&spec, 0, &[0, 2, 0]).unwrap();
        let p = &(&x1 * &x2) + &(&x2 * &x2).scale(&c(2));
        assert_eq!(p.coefficient(&x2sq), c(2));
        assert_eq!(MultiPolynomial::zero(&spec).coefficient(&x2sq), c(0));
        let e2 = &(&(&x1 * &x2) + &(&x1 * &x3)) + &(&x2 * &x3);
        let x1x3 = Monomial::from_slot_exponents(&spec, 0, &[1, 0, 1]).unwrap();
        assert_eq!(e2.coefficient(&x1x3), c(1));
    }

    #[test]
    fn nonnegativity() {
        let spec = AlphabetSpec::single(2);
        let (x1, x2) = (x(&spec, 0, 1), x(&spec, 0, 2));
        assert!((&(&x1 * &x1) + &(&x1 * &x2)).is_coefficientwise_nonnegative());
        assert!(!(&(&x1 * &x1) - &(&x2 * &x2)).is_coefficientwise_nonnegative());
        assert!(MultiPolynomial::zero(&spec).is_coefficientwise_nonnegative());
    }

    #[test]
    fn alphabet_mismatch_is_rejected() {
        let a = MultiPolynomial::one(&AlphabetSpec::single(2));
        let b = MultiPolynomial::one(&AlphabetSpec::single(3));
        assert!(matches!(a.checked_add(&b), Err(Error::AlphabetMismatch(_))));
        assert!(a.checked_mul(&b).is_err());
        assert!(AlphabetSpec::new(vec![]).is_err());
        assert!(AlphabetSpec::new(vec![2, 0]).is_err());
    }

    #[test]
    fn order_is_graded_lex_per_alphabet() {
        let spec = AlphabetSpec::new(vec![2, 2]).unwrap();
        let m = |a: [u16; 2], b: [u16; 2]| {
            Monomial::from_exponents(&spec, &[a.to_vec(), b.to_vec()]).unwrap()
        };
        // Higher x-degree wins regardless of y.
        assert!(m([0, 2], [0, 0]) > m([1, 0], [5, 5]));
        // Same x-degree: lex on x.
        assert!(m([2, 0], [0, 0]) > m([1, 1], [3, 0]));
        // Equal x part: compare y.
        assert!(m([1, 1], [1, 0]) > m([1, 1], [0, 1]));
    }

    #[test]
    fn tensor_and_truncation() {
        let sx = AlphabetSpec::single(2);
        let sy = AlphabetSpec::single(3);
        let p = &x(&sx, 0, 1) + &x(&sx, 0, 2);
        let q = x(&sy, 0, 3);
        let t = p.tensor(&q);
        assert_eq!(t.spec().sizes(), &[2, 3]);
        assert_eq!(t.len(), 2);
        let mut acc = MultiPolynomial::zero(t.spec());
        acc.add_tensor_product(&[&p, &q], &c(3));
        assert_eq!(acc, t.scale(&c(3)));
        let wide = p.widen(&AlphabetSpec::single(4)).unwrap();
        assert_eq!(wide.truncate(&sx).unwrap(), p);
        let cut = wide.truncate(&AlphabetSpec::single(1)).unwrap();
        assert_eq!(cut, x(&AlphabetSpec::single(1), 0, 1));
    }

    #[test]
    fn symmetry_check() {
        let spec = AlphabetSpec::single(3);
        let (x1, x2, x3) = (x(&spec, 0, 1), x(&spec, 0, 2), x(&spec, 0, 3));
        let p1 = &(&x1 + &x2) + &x3;
        assert!(p1.check_symmetric().is_ok());
        assert!(matches!(
            (&x1 + &x2).check_symmetric(),
            Err(Error::NotSymmetric { slot: 0, var: 2, next: 3 })
        ));
    }

    #[test]
    fn json_round_trip_and_display() {
        let spec = AlphabetSpec::new(vec![2, 1]).unwrap();
        let p = &x(&spec, 0, 1).scale(&c(-3)) + &(&x(&spec, 0, 2) * &x(&spec, 1, 1));
        let json = p.to_json();
        assert_eq!(MultiPolynomial::from_json(&spec, &json).unwrap(), p);
        assert_eq!(
            json.to_string(),
            r#"[{"coeff":"-3","exps":[[1,0],[0]]},{"coeff":"1","exps":[[0,1],[1]]}]"#
        );
        assert_eq!(p.to_string(), "-3*x1 + x2*y1");
    }
}
