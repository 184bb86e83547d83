//! Named verification checks. Each check evaluates the two sides of an
//! identity by separate routes and reports one instance per case, with a
//! concrete witness whenever an instance fails.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::time::Instant;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{b_of, f_tau_perm, tau_of, GroupAlgebraElement, KauffmanDiagram, Permutation};
use crate::combinatorics::{
    all_ribbons, all_skew_shapes, comp_of, d_of, essentially_avoids_3x2, ribbon_r_i, IndexSet, Partition,
    SkewShape,
};
use crate::error::{Error, Result};
use crate::immanants::{
    determinant_laplace, jt_dual, jt_ordinary, monomial_character, ordinary_character, tl_immanant,
    HadamardTable, PolyMatrix,
};
use crate::lattice::{enumerate_subnetworks, for_each_path_family, Multinetwork, Subnetwork};
use crate::poly::{is_negative, AlphabetSpec, Coeff, Monomial, MultiPolynomial};
use crate::symfun::{
    elementary, expand_in_monomial, expand_in_schur, homogeneous, omega_on_expansion, schur, Basis, Expansion,
};
use crate::tableaux::{descent_distribution, enumerate_syt};

/// Optional knobs shared by all checks. Each check accepts a subset and
/// rejects the rest; values outside the documented range are rejected too.
#[derive(Clone, Debug, Default)]
pub struct Params {
    pub max_size: Option<usize>,
    pub k: Option<usize>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub shapes: Option<Vec<SkewShape>>,
}

impl Params {
    fn given(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.max_size.is_some() {
            out.push("max-size");
        }
        if self.k.is_some() {
            out.push("k");
        }
        if self.n.is_some() {
            out.push("n");
        }
        if self.m.is_some() {
            out.push("m");
        }
        if self.shapes.is_some() {
            out.push("shapes");
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "consistent-with-conjecture")]
    Consistent,
    #[serde(rename = "refuted")]
    Refuted,
}

impl Status {
    pub fn is_pass(self) -> bool {
        matches!(self, Status::Pass | Status::Consistent)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Consistent => "consistent-with-conjecture",
            Status::Refuted => "refuted",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Instance {
    pub params: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

/// The outcome of one check. `runtime_ms` is kept out of the JSON so that
/// reports are byte-identical across runs.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub anchor: String,
    pub instances: Vec<Instance>,
    pub passed: usize,
    pub failed: usize,
    #[serde(skip)]
    pub runtime_ms: u128,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    /// The first failing instance; instances are listed smallest first.
    pub fn first_failure(&self) -> Option<&Instance> {
        self.instances.iter().find(|i| !i.status.is_pass())
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("plain data")
    }
}

pub struct CheckInfo {
    pub id: &'static str,
    pub anchor: &'static str,
    pub params: &'static [&'static str],
    run: fn(&Params) -> Result<Vec<Instance>>,
}

static REGISTRY: &[CheckInfo] = &[
    CheckInfo {
        id: "lgv",
        anchor: "Lindström–Gessel–Viennot: the nonintersecting path families of a skew shape weigh det tJT",
        params: &["max-size"],
        run: run_lgv,
    },
    CheckInfo {
        id: "tl-single",
        anchor: "TL immanant of one dual Jacobi–Trudi matrix = Σ 2^ε wt over generalized wiring diagrams with ψ(H) = τ",
        params: &["max-size"],
        run: run_tl_single,
    },
    CheckInfo {
        id: "tl-multi",
        anchor: "TL immanant of a Hadamard product of (3×2)-avoiding shapes = Σ 2^ε wt over multinetworks with β = 2^ε B(I); m-positive",
        params: &["max-size", "k", "shapes"],
        run: run_tl_multi,
    },
    CheckInfo {
        id: "schur-pos-3x2",
        anchor: "TL immanants of Hadamard products of (3×2)-avoiding shapes are Schur positive",
        params: &["max-size", "k", "shapes"],
        run: run_schur_pos,
    },
    CheckInfo {
        id: "ribbon-expansion",
        anchor: "Ribbon Hadamard products: Schur coefficients Σ Π f^ν(NDes(R) ∪ d(I_i, R)) over I_1 ∩ ⋯ ∩ I_k = I",
        params: &["max-size", "k"],
        run: run_ribbon_expansion,
    },
    CheckInfo {
        id: "thm-1-4",
        anchor: "det(tJT_R(x) ∗ tJT_R(y)) = Σ f^λ(I) f^μ(J) s_λ(x) s_μ(y) over I ∩ J = Des(R′)",
        params: &["m", "max-size", "k"],
        run: run_thm_1_4,
    },
    CheckInfo {
        id: "ribbon-sum",
        anchor: "Σ over ribbons of size m of the Hadamard determinant = Π (Σ_λ f^λ s_λ); staircase coefficient (m!)^k",
        params: &["max-size", "k"],
        run: run_ribbon_sum,
    },
    CheckInfo {
        id: "tl-equals-det",
        anchor: "imm_τ(I) of a ribbon Hadamard power = det of the R_I Hadamard power; imm_τ(I)(tJT_R) = s_(R_I)′",
        params: &["max-size", "k"],
        run: run_tl_equals_det,
    },
    CheckInfo {
        id: "ribbon-as-tl",
        anchor: "Ribbon Schur functions are exactly the nonzero TL immanants of tJT_(1^m)",
        params: &["max-size"],
        run: run_ribbon_as_tl,
    },
    CheckInfo {
        id: "essential-3x2",
        anchor: "Essentially (3×2)-avoiding collections: every TL immanant of the Hadamard product is Schur positive",
        params: &["shapes"],
        run: run_essential,
    },
    CheckInfo {
        id: "negative-beta",
        anchor: "Collections that are not essentially (3×2)-avoiding admit a multinetwork with sgn(β) < 0",
        params: &["shapes", "n"],
        run: run_negative_beta,
    },
    CheckInfo {
        id: "cx-schur",
        anchor: "det(tJT_(2,2,2)(x) ∗ tJT_(2,2,2)(y)) is not Schur positive",
        params: &[],
        run: run_cx_schur,
    },
    CheckInfo {
        id: "cx-hjt",
        anchor: "det(HJT_(2,2,2)(x) ∗ HJT_(2,2,2)(y)) is not monomial positive",
        params: &[],
        run: run_cx_hjt,
    },
    CheckInfo {
        id: "frobenius-formula",
        anchor: "det(tJT_R′(x) ∗ tJT_R′(y)) = ω Σ_{B ⊆ Des(R′)} (−1)^{|Des(R′)|−|B|} h_comp(B)(x) h_comp(B)(y)",
        params: &["max-size"],
        run: run_frobenius,
    },
    CheckInfo {
        id: "explore-conj",
        anchor: "Exploration: m-positivity of ordinary, monomial and TL immanants of tJT ∗ tJT (evidence only)",
        params: &["n", "max-size"],
        run: run_explore,
    },
];

pub fn registry() -> &'static [CheckInfo] {
    REGISTRY
}

pub fn lookup(id: &str) -> Result<&'static CheckInfo> {
    REGISTRY.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Runs a registered check. Parameters the check does not use are rejected.
pub fn run_check(id: &str, params: &Params) -> Result<CheckReport> {
    let info = lookup(id)?;
    for name in params.given() {
        if !info.params.contains(&name) {
            return Err(Error::InvalidParam(format!("--{name} is not used by check {id}")));
        }
    }
    let start = Instant::now();
    let instances = (info.run)(params)?;
    let passed = instances.iter().filter(|i| i.status.is_pass()).count();
    Ok(CheckReport {
        check: info.id.to_string(),
        anchor: info.anchor.to_string(),
        failed: instances.len() - passed,
        passed,
        instances,
        runtime_ms: start.elapsed().as_millis(),
    })
}

// ---------------------------------------------------------------------------
// shared helpers

fn bounded(name: &str, value: Option<usize>, default: usize, lo: usize, hi: usize) -> Result<usize> {
    let v = value.unwrap_or(default);
    if v < lo || v > hi {
        return Err(Error::InvalidParam(format!("--{name} must lie in [{lo}, {hi}], got {v}")));
    }
    Ok(v)
}

fn joint_bound(k: usize, size: usize, bound: usize) -> Result<()> {
    if k * size > bound {
        return Err(Error::InvalidParam(format!("k × size = {} exceeds {bound}", k * size)));
    }
    Ok(())
}

fn pass(params: Value) -> Instance {
    Instance { params, status: Status::Pass, witness: None }
}

fn fail(params: Value, witness: Value) -> Instance {
    Instance { params, status: Status::Fail, witness: Some(witness) }
}

fn verdict(params: Value, witness: Option<Value>) -> Instance {
    match witness {
        None => pass(params),
        Some(w) => fail(params, w),
    }
}

fn error_witness(e: &Error) -> Value {
    json!({ "error": e.to_string() })
}

/// The smallest monomial on which the two sides differ.
fn poly_diff(lhs: &MultiPolynomial, rhs: &MultiPolynomial) -> Option<Value> {
    let diff = match lhs.checked_sub(rhs) {
        Ok(d) => d,
        Err(e) => return Some(error_witness(&e)),
    };
    let (m, _) = diff.sorted_terms().into_iter().next()?;
    Some(json!({
        "monomial": m.exponents(diff.spec()),
        "lhs": lhs.coefficient(m).to_string(),
        "rhs": rhs.coefficient(m).to_string(),
    }))
}

/// The smallest partition tuple on which the two expansions differ.
fn expansion_diff(lhs: &Expansion, rhs: &Expansion) -> Option<Value> {
    let keys: std::collections::BTreeSet<&Vec<Partition>> = lhs.terms().keys().chain(rhs.terms().keys()).collect();
    keys.into_iter().find(|k| lhs.coefficient(k) != rhs.coefficient(k)).map(|k| {
        json!({
            "partitions": k,
            "lhs": lhs.coefficient(k).to_string(),
            "rhs": rhs.coefficient(k).to_string(),
        })
    })
}

fn negative_monomial(p: &MultiPolynomial) -> Option<Value> {
    p.sorted_terms().into_iter().find(|(_, c)| is_negative(c)).map(|(m, c)| {
        json!({ "monomial": m.exponents(p.spec()), "coeff": c.to_string() })
    })
}

fn negative_expansion_term(e: &Expansion) -> Option<Value> {
    let negs = e.negative_terms();
    negs.first().map(|(k, c)| json!({ "partitions": k, "coeff": c.to_string(), "negative_terms": negs.len() }))
}

fn shapes_json(shapes: &[SkewShape]) -> Value {
    Value::Array(shapes.iter().map(|s| Value::String(s.to_string())).collect())
}

fn set_json(set: &IndexSet) -> Value {
    json!(set.iter().collect::<Vec<_>>())
}

fn max_rows(shapes: &[SkewShape]) -> usize {
    shapes.iter().map(SkewShape::rows).max().unwrap_or(0).max(1)
}

/// One alphabet per shape, with as many variables as the shape has cells.
fn alphabet_sizes(shapes: &[SkewShape]) -> Vec<usize> {
    shapes.iter().map(|s| s.size().max(1)).collect()
}

fn dual_factors(shapes: &[SkewShape], n: usize) -> Result<Vec<PolyMatrix>> {
    shapes
        .iter()
        .zip(alphabet_sizes(shapes))
        .map(|(s, size)| jt_dual(s, n, 0, &AlphabetSpec::single(size)))
        .collect()
}

fn subsets(items: &[usize]) -> Vec<IndexSet> {
    (0..=items.len()).flat_map(|r| items.iter().copied().combinations(r)).map(|c| c.into_iter().collect()).collect()
}

fn skew_shapes_up_to(max: usize) -> Vec<SkewShape> {
    (1..=max).flat_map(|s| all_skew_shapes(s, s)).collect()
}

fn factorial(m: usize) -> Coeff {
    (1..=m).fold(Coeff::from(1u8), |acc, i| acc * Coeff::from(i))
}

fn ribbon_conjugate_descents(r: &SkewShape) -> Result<IndexSet> {
    r.conjugate().normalized_ribbon()?.ribbon_descents()
}

/// Runs `f` on every item in parallel and flattens, keeping input order.
fn par_flat<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<Vec<Instance>> + Sync + Send) -> Result<Vec<Instance>> {
    let parts: Vec<Result<Vec<Instance>>> = items.par_iter().map(f).collect();
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

/// `Σ_{ν} (Σ_{A_1 ∩ ⋯ ∩ A_k = T} Π f^{ν_i}(A_i)) s_{ν_1} ⊗ ⋯ ⊗ s_{ν_k}`,
/// with each `A_i ⊆ [m−1]` and `f^ν(A)` counted from standard tableaux.
fn tableau_sum(m: usize, k: usize, target: &IndexSet, spec: &AlphabetSpec) -> Result<Expansion> {
    let mut out = Expansion::zero(Basis::Schur, spec);
    if target.iter().any(|&t| t == 0 || t >= m) {
        return Ok(out);
    }
    let free: Vec<usize> = (1..m).filter(|i| !target.contains(i)).collect();
    let by_set = tableau_counts_by_descents(m)?;
    let supersets: Vec<(IndexSet, &Vec<(Partition, usize)>)> = subsets(&free)
        .into_iter()
        .filter_map(|extra| {
            let a: IndexSet = target.union(&extra).copied().collect();
            by_set.get(&a).map(|list| (a, list))
        })
        .collect();
    for combo in (0..k).map(|_| supersets.iter()).multi_cartesian_product() {
        let meet = combo.iter().skip(1).fold(combo[0].0.clone(), |acc, (a, _)| acc.intersection(a).copied().collect());
        if &meet != target {
            continue;
        }
        for nus in combo.iter().map(|(_, list)| list.iter()).multi_cartesian_product() {
            let c = nus.iter().fold(Coeff::from(1u8), |acc, (_, f)| acc * Coeff::from(*f));
            out.add_term(nus.iter().map(|(nu, _)| nu.clone()).collect(), c);
        }
    }
    Ok(out)
}

/// For each descent set `A ⊆ [m−1]`, the partitions `ν ⊢ m` with `f^ν(A) > 0`.
fn tableau_counts_by_descents(m: usize) -> Result<BTreeMap<IndexSet, Vec<(Partition, usize)>>> {
    let mut out: BTreeMap<IndexSet, Vec<(Partition, usize)>> = BTreeMap::new();
    for nu in Partition::all(m) {
        for (set, count) in descent_distribution(&nu)? {
            out.entry(set).or_default().push((nu.clone(), count));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// lgv

fn run_lgv(p: &Params) -> Result<Vec<Instance>> {
    let max = bounded("max-size", p.max_size, 5, 1, 5)?;
    par_flat(&skew_shapes_up_to(max), |shape| {
        let (n, size) = (shape.rows(), shape.size());
        let spec = AlphabetSpec::single(size);
        let mut lhs = MultiPolynomial::zero(&spec);
        let mut families = 0usize;
        let mut err = None;
        for_each_path_family(shape, n, size, |f| {
            if err.is_none() && f.is_nonintersecting() {
                families += 1;
                match f.weight(0, &spec) {
                    Ok(w) => lhs += &w,
                    Err(e) => err = Some(e),
                }
            }
        })?;
        if let Some(e) = err {
            return Err(e);
        }
        let rhs = determinant_laplace(&jt_dual(shape, n, 0, &spec)?)?;
        let params = json!({ "shape": shape.to_string(), "n": n, "N": size, "families": families });
        Ok(vec![verdict(params, poly_diff(&lhs, &rhs))])
    })
}

// ---------------------------------------------------------------------------
// tl-single

fn run_tl_single(p: &Params) -> Result<Vec<Instance>> {
    let max = bounded("max-size", p.max_size, 4, 1, 5)?;
    par_flat(&skew_shapes_up_to(max), |shape| {
        let (n, size) = (shape.rows(), shape.size());
        let spec = AlphabetSpec::single(size);
        let mut by_tau: BTreeMap<KauffmanDiagram, MultiPolynomial> = BTreeMap::new();
        for h in enumerate_subnetworks(shape, n, size)? {
            let data = h.wiring_data()?;
            if let (true, Some(psi)) = (data.is_wiring, data.psi) {
                let w = h.weight(0, &spec)?.scale(&Coeff::from(1u64 << data.epsilon));
                *by_tau.entry(psi).or_insert_with(|| MultiPolynomial::zero(&spec)) += &w;
            }
        }
        let m = jt_dual(shape, n, 0, &spec)?;
        let zero = MultiPolynomial::zero(&spec);
        KauffmanDiagram::enumerate(n)?
            .into_iter()
            .map(|tau| {
                let rhs = tl_immanant(&tau, &m)?;
                let lhs = by_tau.get(&tau).unwrap_or(&zero);
                let params = json!({ "shape": shape.to_string(), "n": n, "tau": tau.to_string() });
                Ok(verdict(params, poly_diff(lhs, &rhs)))
            })
            .collect()
    })
}

// ---------------------------------------------------------------------------
// tl-multi and schur-pos-3x2

/// Collections of (3×2)-avoiding shapes: the given one, or every multiset of
/// `k` shapes of size at most `max-size`.
fn avoiding_collections(p: &Params, default_max: usize) -> Result<Vec<Vec<SkewShape>>> {
    if let Some(shapes) = &p.shapes {
        if p.max_size.is_some() || p.k.is_some() {
            return Err(Error::InvalidParam("--shapes cannot be combined with --max-size or --k".into()));
        }
        check_given_shapes(shapes, 1, 3, 6)?;
        if let Some(s) = shapes.iter().find(|s| !s.avoids_3x2()) {
            return Err(Error::InvalidParam(format!("{s} contains a 3×2 block")));
        }
        return Ok(vec![shapes.clone()]);
    }
    let k = bounded("k", p.k, 2, 1, 3)?;
    let max = bounded("max-size", p.max_size, default_max, 1, 4)?;
    joint_bound(k, max, 8)?;
    let pool: Vec<SkewShape> = skew_shapes_up_to(max).into_iter().filter(|s| s.avoids_3x2()).collect();
    Ok((0..pool.len())
        .combinations_with_replacement(k)
        .map(|idx| idx.into_iter().map(|i| pool[i].clone()).collect())
        .collect())
}

fn check_given_shapes(shapes: &[SkewShape], min_k: usize, max_k: usize, max_size: usize) -> Result<()> {
    if shapes.len() < min_k || shapes.len() > max_k {
        return Err(Error::InvalidParam(format!(
            "expected between {min_k} and {max_k} shapes, got {}",
            shapes.len()
        )));
    }
    for s in shapes {
        if s.size() == 0 || s.size() > max_size {
            return Err(Error::InvalidParam(format!("shape {s} must have between 1 and {max_size} cells")));
        }
    }
    if max_rows(shapes) > 6 {
        return Err(Error::InvalidParam("shapes may have at most 6 rows".into()));
    }
    Ok(())
}

type BetaClasses = Vec<(GroupAlgebraElement, MultiPolynomial)>;

/// Subnetworks of `shape` grouped by `β(H)`, with their total weight.
fn beta_classes(shape: &SkewShape, n: usize) -> Result<BetaClasses> {
    let size = shape.size().max(1);
    let spec = AlphabetSpec::single(size);
    let mut map: BTreeMap<Vec<(Permutation, i64)>, (GroupAlgebraElement, MultiPolynomial)> = BTreeMap::new();
    for h in enumerate_subnetworks(shape, n, size)? {
        let beta = h.beta()?;
        let key = beta.terms().iter().map(|(w, c)| (w.clone(), *c)).collect();
        let w = h.weight(0, &spec)?;
        map.entry(key).or_insert_with(|| (beta, MultiPolynomial::zero(&spec))).1 += &w;
    }
    Ok(map.into_values().collect())
}

/// `Some((2^ε, I))` when `β = 2^ε B(I)`.
fn as_scaled_b(beta: &GroupAlgebraElement) -> Result<Option<(i64, IndexSet)>> {
    let n = beta.n();
    let c = beta.coefficient(&Permutation::identity(n));
    if c <= 0 || c & (c - 1) != 0 {
        return Ok(None);
    }
    let mut set = IndexSet::new();
    for i in 1..n {
        if beta.coefficient(&Permutation::simple(i, n)?) != 0 {
            set.insert(i);
        }
    }
    Ok((b_of(&set, n)?.scale(c) == *beta).then_some((c, set)))
}

fn run_tl_multi(p: &Params) -> Result<Vec<Instance>> {
    let collections = avoiding_collections(p, 3)?;
    let classes = class_cache(&collections)?;
    par_flat(&collections, |shapes| multinetwork_instances(shapes, &classes))
}

fn class_cache(collections: &[Vec<SkewShape>]) -> Result<HashMap<(SkewShape, usize), BetaClasses>> {
    let keys: Vec<(SkewShape, usize)> = collections
        .iter()
        .flat_map(|c| {
            let n = max_rows(c);
            c.iter().map(move |s| (s.clone(), n))
        })
        .unique()
        .collect();
    let values: Vec<Result<BetaClasses>> = keys.par_iter().map(|(s, n)| beta_classes(s, *n)).collect();
    keys.into_iter().zip(values).map(|(k, v)| Ok((k, v?))).collect()
}

fn multinetwork_instances(
    shapes: &[SkewShape],
    cache: &HashMap<(SkewShape, usize), BetaClasses>,
) -> Result<Vec<Instance>> {
    let n = max_rows(shapes);
    let spec = AlphabetSpec::new(alphabet_sizes(shapes))?;
    let classes: Vec<&BetaClasses> = shapes.iter().map(|s| &cache[&(s.clone(), n)]).collect();
    let mut lhs: BTreeMap<KauffmanDiagram, MultiPolynomial> = BTreeMap::new();
    let mut bad_beta = None;
    for combo in classes.iter().map(|c| c.iter()).multi_cartesian_product() {
        let mut beta = combo[0].0.clone();
        for (b, _) in &combo[1..] {
            beta = beta.star(b)?;
        }
        match as_scaled_b(&beta)? {
            Some((c, set)) => {
                let refs: Vec<&MultiPolynomial> = combo.iter().map(|(_, w)| w).collect();
                lhs.entry(tau_of(&set, n)?)
                    .or_insert_with(|| MultiPolynomial::zero(&spec))
                    .add_tensor_product(&refs, &Coeff::from(c));
            }
            None => {
                bad_beta.get_or_insert_with(|| json!({ "beta_not_a_scaled_B": beta.to_string() }));
            }
        }
    }
    let table = HadamardTable::new(&dual_factors(shapes, n)?)?;
    let zero = MultiPolynomial::zero(&spec);
    Ok(KauffmanDiagram::enumerate(n)?
        .into_iter()
        .map(|tau| {
            let params = json!({ "shapes": shapes_json(shapes), "n": n, "tau": tau.to_string() });
            if let Some(w) = &bad_beta {
                return fail(params, w.clone());
            }
            let rhs = table.immanant(|w| f_tau_perm(&tau, w));
            let lhs = lhs.get(&tau).unwrap_or(&zero);
            let witness = poly_diff(lhs, &rhs)
                .or_else(|| negative_monomial(&rhs).map(|neg| json!({ "not_m_positive": neg })));
            verdict(params, witness)
        })
        .collect())
}

fn run_schur_pos(p: &Params) -> Result<Vec<Instance>> {
    let collections = avoiding_collections(p, 3)?;
    par_flat(&collections, |shapes| schur_positivity_instances(shapes))
}

fn schur_positivity_instances(shapes: &[SkewShape]) -> Result<Vec<Instance>> {
    let n = max_rows(shapes);
    let table = HadamardTable::new(&dual_factors(shapes, n)?)?;
    KauffmanDiagram::enumerate(n)?
        .into_iter()
        .map(|tau| {
            let e = table.immanant_schur(|w| f_tau_perm(&tau, w))?;
            let params = json!({ "shapes": shapes_json(shapes), "n": n, "tau": tau.to_string() });
            Ok(verdict(params, negative_expansion_term(&e)))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// ribbon-expansion

/// `Σ_{I_i ⊆ [a_i, b_i−1], ∩ I_i = I} Π f^{ν_i}(NDes(R^(i)) ∪ d(I_i, R^(i)))`.
fn explicit_ribbon_expansion(ribbons: &[SkewShape], set: &IndexSet, spec: &AlphabetSpec) -> Result<Expansion> {
    let mut out = Expansion::zero(Basis::Schur, spec);
    let mut per: Vec<Vec<(IndexSet, Vec<(Partition, usize)>)>> = Vec::new();
    for r in ribbons {
        let (a, b) = r.support().ok_or_else(|| Error::NotRibbon(r.to_string()))?;
        if set.iter().any(|i| *i < a || *i >= b) {
            return Ok(out);
        }
        let m = r.size();
        let counts = tableau_counts_by_descents(m)?;
        let nondes = r.ribbon_nondescents()?;
        let free: Vec<usize> = (a..b).filter(|i| !set.contains(i)).collect();
        let mut options = Vec::new();
        for extra in subsets(&free) {
            let ii: IndexSet = set.union(&extra).copied().collect();
            let s: IndexSet = nondes.union(&d_of(&ii, r)?).copied().collect();
            options.push((ii, counts.get(&s).cloned().unwrap_or_default()));
        }
        per.push(options);
    }
    for combo in per.iter().map(|v| v.iter()).multi_cartesian_product() {
        let meet = combo.iter().skip(1).fold(combo[0].0.clone(), |acc, (s, _)| acc.intersection(s).copied().collect());
        if &meet != set {
            continue;
        }
        for nus in combo.iter().map(|(_, list)| list.iter()).multi_cartesian_product() {
            let c = nus.iter().fold(Coeff::from(1u8), |acc, (_, f)| acc * Coeff::from(*f));
            out.add_term(nus.iter().map(|(nu, _)| nu.clone()).collect(), c);
        }
    }
    Ok(out)
}

fn run_ribbon_expansion(p: &Params) -> Result<Vec<Instance>> {
    let k = bounded("k", p.k, 2, 1, 3)?;
    let max = bounded("max-size", p.max_size, 4, 1, 5)?;
    joint_bound(k, max, 10)?;
    let pool: Vec<SkewShape> = (1..=max).flat_map(all_ribbons).collect();
    let tuples: Vec<Vec<SkewShape>> = (0..pool.len())
        .combinations_with_replacement(k)
        .map(|idx| idx.into_iter().map(|i| pool[i].clone()).collect())
        .collect();
    par_flat(&tuples, |ribbons| {
        let n = max_rows(ribbons);
        let spec = AlphabetSpec::new(alphabet_sizes(ribbons))?;
        let table = HadamardTable::new(&dual_factors(ribbons, n)?)?;
        let power = ribbons.iter().all_equal();
        subsets(&(1..n).collect::<Vec<_>>())
            .into_iter()
            .map(|set| {
                let tau = tau_of(&set, n)?;
                let direct = table.immanant_schur(|w| f_tau_perm(&tau, w))?;
                let formula = explicit_ribbon_expansion(ribbons, &set, &spec)?;
                let mut witness = expansion_diff(&formula, &direct);
                if witness.is_none() && power {
                    // Single-ribbon powers also have the A_1 ∩ ⋯ ∩ A_k form.
                    let r = &ribbons[0];
                    let target: IndexSet = r.ribbon_nondescents()?.union(&d_of(&set, r)?).copied().collect();
                    let by_a = tableau_sum(r.size(), k, &target, &spec)?;
                    witness = expansion_diff(&by_a, &direct).map(|w| json!({ "power_form": w }));
                }
                let params = json!({ "ribbons": shapes_json(ribbons), "n": n, "I": set_json(&set) });
                Ok(verdict(params, witness))
            })
            .collect()
    })
}

// ---------------------------------------------------------------------------
// thm-1-4

fn run_thm_1_4(p: &Params) -> Result<Vec<Instance>> {
    let k = bounded("k", p.k, 2, 1, 3)?;
    let sizes: Vec<usize> = match (p.m, p.max_size) {
        (Some(_), Some(_)) => return Err(Error::InvalidParam("give either --m or --max-size".into())),
        (Some(m), None) => vec![bounded("m", Some(m), 4, 1, 6)?],
        (None, Some(max)) => (1..=bounded("max-size", Some(max), 4, 1, 6)?).collect(),
        (None, None) => vec![4],
    };
    joint_bound(k, *sizes.iter().max().expect("nonempty"), 12)?;
    let ribbons: Vec<SkewShape> = sizes.iter().flat_map(|&m| all_ribbons(m)).collect();
    par_flat(&ribbons, |r| {
        let m = r.size();
        let copies = vec![r.clone(); k];
        let n = r.rows();
        let spec = AlphabetSpec::new(vec![m; k])?;
        let lhs = HadamardTable::new(&dual_factors(&copies, n)?)?.immanant_schur(|w| w.sign())?;
        let des_conj = ribbon_conjugate_descents(r)?;
        let rhs = tableau_sum(m, k, &des_conj, &spec)?;
        let params = json!({ "ribbon": r.to_string(), "m": m, "k": k, "des_conjugate": set_json(&des_conj) });
        Ok(vec![verdict(params, expansion_diff(&lhs, &rhs))])
    })
}

// ---------------------------------------------------------------------------
// ribbon-sum

fn run_ribbon_sum(p: &Params) -> Result<Vec<Instance>> {
    let k = bounded("k", p.k, 2, 1, 3)?;
    let max = bounded("max-size", p.max_size, 4, 1, 5)?;
    joint_bound(k, max, 10)?;
    let sizes: Vec<usize> = (1..=max).collect();
    par_flat(&sizes, |&m| {
        let spec = AlphabetSpec::new(vec![m; k])?;
        let mut lhs = MultiPolynomial::zero(&spec);
        for r in all_ribbons(m) {
            let copies = vec![r.clone(); k];
            lhs += &HadamardTable::new(&dual_factors(&copies, r.rows())?)?.immanant(|w| w.sign());
        }
        let single = AlphabetSpec::single(m);
        let mut factor = MultiPolynomial::zero(&single);
        for lam in Partition::all(m) {
            let shape = SkewShape::straight(lam);
            let f = enumerate_syt(&shape)?.len();
            factor += &schur(&shape, 0, &single).scale(&Coeff::from(f));
        }
        let mut rhs = MultiPolynomial::zero(&spec);
        rhs.add_tensor_product(&vec![&factor; k], &Coeff::from(1u8));
        let staircase = Monomial::from_exponents(&spec, &vec![vec![1u16; m]; k])?;
        let expected = (0..k).fold(Coeff::from(1u8), |acc, _| acc * factorial(m));
        let (cl, cr) = (lhs.coefficient(&staircase), rhs.coefficient(&staircase));
        let params = json!({ "m": m, "k": k, "staircase_coefficient": cl.to_string(), "expected": expected.to_string() });
        let witness = poly_diff(&lhs, &rhs).or_else(|| {
            (cl != expected || cr != expected)
                .then(|| json!({ "lhs": cl.to_string(), "rhs": cr.to_string(), "expected": expected.to_string() }))
        });
        Ok(vec![verdict(params, witness)])
    })
}

// ---------------------------------------------------------------------------
// tl-equals-det

fn run_tl_equals_det(p: &Params) -> Result<Vec<Instance>> {
    let k = bounded("k", p.k, 2, 1, 3)?;
    let max = bounded("max-size", p.max_size, 4, 1, 5)?;
    joint_bound(k, max, 10)?;
    let ribbons: Vec<SkewShape> = (1..=max).flat_map(all_ribbons).collect();
    par_flat(&ribbons, |r| {
        let (m, n) = (r.size(), r.rows());
        let copies = vec![r.clone(); k];
        let table = HadamardTable::new(&dual_factors(&copies, n)?)?;
        let single = AlphabetSpec::single(m);
        let one = jt_dual(r, n, 0, &single)?;
        subsets(&(1..n).collect::<Vec<_>>())
            .into_iter()
            .map(|set| {
                let tau = tau_of(&set, n)?;
                let lhs = table.immanant(|w| f_tau_perm(&tau, w));
                let r_i = ribbon_r_i(r, &set, n)?;
                let r_i_copies = vec![r_i.clone(); k];
                let rhs = HadamardTable::new(&dual_factors(&r_i_copies, r_i.rows())?)?.immanant(|w| w.sign());
                let single_lhs = tl_immanant(&tau, &one)?;
                let single_rhs = schur(&r_i.conjugate(), 0, &single);
                let witness = poly_diff(&lhs, &rhs)
                    .or_else(|| poly_diff(&single_lhs, &single_rhs).map(|w| json!({ "single": w })));
                let params = json!({ "ribbon": r.to_string(), "n": n, "I": set_json(&set), "R_I": r_i.to_string() });
                Ok(verdict(params, witness))
            })
            .collect()
    })
}

// ---------------------------------------------------------------------------
// ribbon-as-tl

fn run_ribbon_as_tl(p: &Params) -> Result<Vec<Instance>> {
    let max = bounded("max-size", p.max_size, 5, 1, 6)?;
    let sizes: Vec<usize> = (1..=max).collect();
    par_flat(&sizes, |&m| {
        let spec = AlphabetSpec::single(m);
        let column = SkewShape::straight(Partition::new(vec![1; m])?);
        let mat = jt_dual(&column, m, 0, &spec)?;
        let ribbons = all_ribbons(m);
        let schurs: Vec<MultiPolynomial> = ribbons.iter().map(|r| schur(r, 0, &spec)).collect();
        let mut out = Vec::new();
        for (r, s) in ribbons.iter().zip(&schurs) {
            let des = r.ribbon_descents()?;
            let imm = tl_immanant(&tau_of(&des, m)?, &mat)?;
            let params = json!({ "direction": "ribbon-to-immanant", "ribbon": r.to_string(), "I": set_json(&des) });
            out.push(verdict(params, poly_diff(&imm, s)));
        }
        for tau in KauffmanDiagram::enumerate(m)? {
            let imm = tl_immanant(&tau, &mat)?;
            let params = json!({ "direction": "immanant-to-ribbon", "m": m, "tau": tau.to_string() });
            if imm.is_zero() {
                out.push(pass(params));
                continue;
            }
            match ribbons.iter().zip(&schurs).find(|(_, s)| **s == imm) {
                Some((r, _)) => {
                    let mut params = params;
                    params["ribbon"] = Value::String(r.to_string());
                    out.push(pass(params));
                }
                None => out.push(fail(params, json!({ "immanant": imm.to_string() }))),
            }
        }
        Ok(out)
    })
}

// ---------------------------------------------------------------------------
// essential-3x2

fn curated_essential() -> Vec<Vec<SkewShape>> {
    let sh = |o: &[usize], i: &[usize]| SkewShape::from_parts(o, i).expect("curated shape");
    vec![
        vec![sh(&[2, 2, 2], &[]), sh(&[1], &[])],
        vec![sh(&[2, 2, 2], &[]), sh(&[1, 1], &[])],
        vec![sh(&[2, 2, 2], &[]), sh(&[2, 2], &[])],
        vec![sh(&[2, 2, 2], &[]), sh(&[2, 1], &[1])],
        vec![sh(&[3, 2, 2], &[]), sh(&[2, 1], &[])],
        vec![sh(&[2, 2, 2, 1], &[]), sh(&[1, 1], &[1])],
        vec![sh(&[2, 2, 2], &[]), sh(&[2, 2], &[]), sh(&[1], &[])],
    ]
}

fn run_essential(p: &Params) -> Result<Vec<Instance>> {
    let collections = match &p.shapes {
        Some(shapes) => {
            check_given_shapes(shapes, 1, 3, 7)?;
            vec![shapes.clone()]
        }
        None => curated_essential(),
    };
    for c in &collections {
        if !essentially_avoids_3x2(c) {
            return Err(Error::InvalidParam(format!(
                "{} is not essentially (3×2)-avoiding",
                shapes_json(c)
            )));
        }
    }
    par_flat(&collections, |shapes| schur_positivity_instances(shapes))
}

// ---------------------------------------------------------------------------
// negative-beta

/// Largest truncation height tried when searching for the two families.
const NEGATIVE_BETA_HEIGHT: usize = 10;

/// A shape `t` and rows `a..a+2` carrying a 3×2 block of `t` in which no
/// shape of the collection has an empty row.
fn offending_block(shapes: &[SkewShape]) -> Option<(usize, usize)> {
    shapes.iter().enumerate().find_map(|(t, shape)| {
        (1..=shape.rows())
            .find(|&a| {
                shape.has_3x2_block_at(a) && shapes.iter().all(|s| (a..a + 3).all(|b| s.row_len(b - 1) > 0))
            })
            .map(|a| (t, a))
    })
}

fn perm_moving(n: usize, a: usize, images: [usize; 3]) -> Result<Permutation> {
    let mut one_line: Vec<usize> = (1..=n).collect();
    for (offset, &img) in images.iter().enumerate() {
        one_line[a - 1 + offset] = img;
    }
    Permutation::new(&one_line)
}

/// The first subnetwork, in enumeration order, covered by a family of type
/// `sigma` whose β equals `target`.
fn find_component(
    shape: &SkewShape,
    n: usize,
    height: usize,
    sigma: &Permutation,
    target: &GroupAlgebraElement,
) -> Result<Option<Subnetwork>> {
    let mut found = None;
    let mut err = None;
    for_each_path_family(shape, n, height, |f| {
        if found.is_some() || err.is_some() || f.permutation() != sigma {
            return;
        }
        match f.subnetwork(height).and_then(|h| Ok((h.beta()?, h))) {
            Ok((b, h)) if &b == target => found = Some(h),
            Ok(_) => {}
            Err(e) => err = Some(e),
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

fn run_negative_beta(p: &Params) -> Result<Vec<Instance>> {
    let shapes = match &p.shapes {
        Some(s) => s.clone(),
        None => vec![SkewShape::from_parts(&[2, 2, 2], &[])?; 2],
    };
    check_given_shapes(&shapes, 2, 3, 8)?;
    if let Some(s) = shapes.iter().find(|s| !s.is_connected()) {
        return Err(Error::InvalidParam(format!("{s} is not connected")));
    }
    let Some((t, a)) = offending_block(&shapes) else {
        return Err(Error::InvalidParam("the collection is essentially (3×2)-avoiding".into()));
    };
    let rows = max_rows(&shapes);
    let n = bounded("n", p.n, rows, rows, 6)?;
    let one_plus = |i: usize| GroupAlgebraElement::one_plus_simple(i, n);
    let beta_t = one_plus(a + 1)?.mul(&one_plus(a)?)?;
    let beta_s = one_plus(a)?.mul(&one_plus(a + 1)?)?;
    let sigma_t = perm_moving(n, a, [a + 1, a + 2, a])?;
    let sigma_s = perm_moving(n, a, [a + 2, a, a + 1])?;
    let mut expected = GroupAlgebraElement::one(n);
    expected.add_term(Permutation::simple(a, n)?, 1);
    expected.add_term(Permutation::simple(a + 1, n)?, 1);
    let params = json!({ "shapes": shapes_json(&shapes), "n": n, "block_shape": t + 1, "rows": [a, a + 1, a + 2] });
    for height in 1..=NEGATIVE_BETA_HEIGHT {
        let mut comps = Vec::with_capacity(shapes.len());
        for (j, shape) in shapes.iter().enumerate() {
            let (sigma, target) = if j == t { (&sigma_t, &beta_t) } else { (&sigma_s, &beta_s) };
            match find_component(shape, n, height, sigma, target)? {
                Some(h) => comps.push(h),
                None => break,
            }
        }
        if comps.len() < shapes.len() {
            continue;
        }
        let sequences: Vec<Vec<usize>> =
            comps.iter().map(|h| Ok(h.wiring_data()?.intersection_sequence)).collect::<Result<_>>()?;
        let net = Multinetwork::new(comps)?;
        let beta = net.beta()?;
        let literal = net.beta_definitional()?;
        let sign = beta.sign_functional();
        let witness = json!({
            "height": height,
            "multinetwork": net.to_json(),
            "intersection_sequences": sequences,
            "beta": beta.to_string(),
            "beta_by_tuples": literal.to_string(),
            "sign": sign,
        });
        let ok = beta == expected && literal == expected && sign == -1;
        let status = if ok { Status::Pass } else { Status::Fail };
        return Ok(vec![Instance { params, status, witness: Some(witness) }]);
    }
    Ok(vec![fail(params, json!({ "no_families_below_height": NEGATIVE_BETA_HEIGHT }))])
}

// ---------------------------------------------------------------------------
// counterexamples

fn triple_two() -> SkewShape {
    SkewShape::from_parts(&[2, 2, 2], &[]).expect("(2,2,2)")
}

fn hadamard_square_det(ordinary: bool) -> Result<MultiPolynomial> {
    let shape = triple_two();
    let single = AlphabetSpec::single(shape.size());
    let m = if ordinary { jt_ordinary(&shape, 3, 0, &single)? } else { jt_dual(&shape, 3, 0, &single)? };
    Ok(HadamardTable::new(&[m.clone(), m])?.immanant(|w| w.sign()))
}

/// Passes when a negative coefficient is found.
fn counterexample(params: Value, negative: Option<Value>) -> Instance {
    match negative {
        Some(w) => Instance { params, status: Status::Pass, witness: Some(w) },
        None => fail(params, json!({ "negative_coefficients": 0 })),
    }
}

fn run_cx_schur(_: &Params) -> Result<Vec<Instance>> {
    let e = expand_in_schur(&hadamard_square_det(false)?)?;
    let params = json!({ "shapes": ["2,2,2", "2,2,2"], "basis": "schur" });
    Ok(vec![counterexample(params, negative_expansion_term(&e))])
}

fn run_cx_hjt(_: &Params) -> Result<Vec<Instance>> {
    let e = expand_in_monomial(&hadamard_square_det(true)?)?;
    let params = json!({ "shapes": ["2,2,2", "2,2,2"], "basis": "monomial", "matrix": "HJT" });
    Ok(vec![counterexample(params, negative_expansion_term(&e))])
}

// ---------------------------------------------------------------------------
// frobenius-formula

fn run_frobenius(p: &Params) -> Result<Vec<Instance>> {
    let max = bounded("max-size", p.max_size, 5, 1, 6)?;
    let ribbons: Vec<SkewShape> = (1..=max).flat_map(all_ribbons).collect();
    par_flat(&ribbons, |r| {
        let m = r.size();
        let conj = r.conjugate().normalized_ribbon()?;
        let des = conj.ribbon_descents()?;
        let copies = vec![conj.clone(); 2];
        let lhs = HadamardTable::new(&dual_factors(&copies, conj.rows())?)?.immanant_schur(|w| w.sign())?;

        let single = AlphabetSpec::single(m);
        let spec = AlphabetSpec::new(vec![m, m])?;
        let mut alternating = MultiPolynomial::zero(&spec);
        let mut e_side = MultiPolynomial::zero(&single);
        let des_vec: Vec<usize> = des.iter().copied().collect();
        for b in subsets(&des_vec) {
            let sign = if (des.len() - b.len()) % 2 == 0 { 1 } else { -1 };
            let comp = comp_of(&b, m)?;
            let h = comp.parts().iter().fold(MultiPolynomial::one(&single), |acc, &c| &acc * &homogeneous(c as i64, 0, &single));
            let e = comp.parts().iter().fold(MultiPolynomial::one(&single), |acc, &c| &acc * &elementary(c as i64, 0, &single));
            alternating.add_tensor_product(&[&h, &h], &Coeff::from(sign));
            e_side += &e.scale(&Coeff::from(sign));
        }
        let rhs = omega_on_expansion(&expand_in_schur(&alternating)?);
        let witness = expansion_diff(&lhs, &rhs).or_else(|| {
            poly_diff(&schur(r, 0, &single), &e_side).map(|w| json!({ "e_expansion_of_s_R": w }))
        });
        let params = json!({ "ribbon": r.to_string(), "conjugate": conj.to_string(), "des_conjugate": set_json(&des) });
        Ok(vec![verdict(params, witness)])
    })
}

// ---------------------------------------------------------------------------
// explore-conj

fn run_explore(p: &Params) -> Result<Vec<Instance>> {
    let n = bounded("n", p.n, 3, 1, 4)?;
    let max = bounded("max-size", p.max_size, 3, 1, 4)?;
    let pool: Vec<SkewShape> = (1..=max).flat_map(|s| all_skew_shapes(s, n)).collect();
    let pairs: Vec<Vec<SkewShape>> =
        pool.iter().cloned().combinations_with_replacement(2).collect();
    let perms = Permutation::all(n);
    let mut tables: Vec<(String, HashMap<Permutation, i64>)> = Vec::new();
    for eta in Partition::all(n) {
        let chi = perms.iter().map(|w| Ok((w.clone(), ordinary_character(&eta, w)?))).collect::<Result<_>>()?;
        tables.push((format!("chi{eta}"), chi));
        let phi = perms.iter().map(|w| Ok((w.clone(), monomial_character(&eta, w)?))).collect::<Result<_>>()?;
        tables.push((format!("phi{eta}"), phi));
    }
    for tau in KauffmanDiagram::enumerate(n)? {
        let f = perms.iter().map(|w| (w.clone(), f_tau_perm(&tau, w))).collect();
        tables.push((format!("tau {tau}"), f));
    }
    par_flat(&pairs, |shapes| {
        let table = HadamardTable::new(&dual_factors(shapes, n)?)?;
        Ok(tables
            .iter()
            .map(|(name, f)| {
                let imm = table.immanant(|w| f[w]);
                let params = json!({ "shapes": shapes_json(shapes), "n": n, "immanant": name });
                match negative_monomial(&imm) {
                    None => Instance { params, status: Status::Consistent, witness: None },
                    Some(w) => Instance { params, status: Status::Refuted, witness: Some(w) },
                }
            })
            .collect())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // The tableau side must discriminate: using Des(R) instead of Des(R')
    // breaks the identity for every ribbon that is not self-conjugate.
    #[test]
    fn tableau_side_detects_wrong_descent_set() {
        let mut mismatches = 0;
        for r in all_ribbons(4) {
            let spec = AlphabetSpec::new(vec![4, 4]).unwrap();
            let lhs = HadamardTable::new(&dual_factors(&[r.clone(), r.clone()], r.rows()).unwrap())
                .unwrap()
                .immanant_schur(|w| w.sign())
                .unwrap();
            let des = r.ribbon_descents().unwrap();
            let conj = ribbon_conjugate_descents(&r).unwrap();
            let wrong = tableau_sum(4, 2, &des, &spec).unwrap();
            assert_eq!(lhs == wrong, des == conj, "{r}");
            mismatches += usize::from(lhs != wrong);
        }
        assert!(mismatches > 0);
    }

    #[test]
    fn registry_ids_are_unique() {
        let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), 15);
        assert!(ids.iter().all_unique());
    }

    #[test]
    fn unknown_check_and_foreign_param_rejected() {
        assert!(matches!(run_check("nope", &Params::default()), Err(Error::UnknownCheck(_))));
        let p = Params { k: Some(2), ..Params::default() };
        assert!(matches!(run_check("lgv", &p), Err(Error::InvalidParam(_))));
        let p = Params { max_size: Some(9), ..Params::default() };
        assert!(matches!(run_check("lgv", &p), Err(Error::InvalidParam(_))));
    }

    #[test]
    fn factorized_schur_route_matches_full_expansion() {
        for r in (1..=4).flat_map(all_ribbons) {
            let copies = vec![r.clone(); 2];
            let table = HadamardTable::new(&dual_factors(&copies, r.rows()).unwrap()).unwrap();
            let full = expand_in_schur(&table.immanant(|w| w.sign())).unwrap();
            let fact = table.immanant_schur(|w| w.sign()).unwrap();
            assert_eq!(full.terms(), fact.terms(), "{r}");
        }
    }

    #[test]
    fn small_runs_pass() {
        let p = Params { max_size: Some(3), ..Params::default() };
        for id in ["lgv", "tl-single", "ribbon-as-tl", "frobenius-formula"] {
            let report = run_check(id, &p).unwrap();
            assert!(report.all_passed(), "{id}: {:?}", report.first_failure());
        }
        let p = Params { m: Some(3), ..Params::default() };
        assert!(run_check("thm-1-4", &p).unwrap().all_passed());
    }

    #[test]
    fn essential_rejects_non_essential_collection() {
        let p = Params { shapes: Some(vec![triple_two(), triple_two()]), ..Params::default() };
        assert!(matches!(run_check("essential-3x2", &p), Err(Error::InvalidParam(_))));
        let p = Params { shapes: Some(vec![triple_two()]), ..Params::default() };
        assert!(matches!(run_check("negative-beta", &p), Err(Error::InvalidParam(_))));
    }

    #[test]
    fn report_json_has_no_runtime() {
        let report = run_check("ribbon-sum", &Params { max_size: Some(2), ..Params::default() }).unwrap();
        let v = report.to_json();
        assert!(v.get("runtime_ms").is_none());
        assert_eq!(v["passed"], 2);
    }
}
