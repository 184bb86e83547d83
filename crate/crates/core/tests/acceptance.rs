//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints exactly one PASS/FAIL line, then exits nonzero if any failed.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use tlimm::algebra::{b_of, f_tau_perm, theta_perm, GroupAlgebraElement, KauffmanDiagram, Permutation, TlElement};
use tlimm::checks::{run_check, CheckReport, Params};
use tlimm::combinatorics::{all_ribbons, d_of, IndexSet};
use tlimm::lattice::{enumerate_subnetworks, family_of_word, word_of_family};
use tlimm::tableaux::{word_descents, words_with_descents};

type Outcome = Result<String, String>;

fn report(id: &str, params: Params, limit: Duration) -> Outcome {
    let start = Instant::now();
    let r: CheckReport = run_check(id, &params).map_err(|e| format!("{id}: {e}"))?;
    let elapsed = start.elapsed();
    if let Some(bad) = r.first_failure() {
        return Err(format!("{id}: {} failed, first {} witness {:?}", r.failed, bad.params, bad.witness));
    }
    if r.instances.is_empty() {
        return Err(format!("{id}: no instances"));
    }
    if elapsed > limit {
        return Err(format!("{id}: {} instances took {elapsed:?}, limit {limit:?}", r.passed));
    }
    Ok(format!("{id}: {} instances in {:.2}s", r.passed, elapsed.as_secs_f64()))
}

fn sized(max_size: usize, k: Option<usize>) -> Params {
    Params { max_size: Some(max_size), k, ..Params::default() }
}

const MIN: Duration = Duration::from_secs(60);

fn thm_1_4() -> Outcome {
    // m = 1 is included too; it is a trivially true extra instance.
    report("thm-1-4", sized(6, Some(2)), 5 * MIN)
}

fn lgv() -> Outcome {
    report("lgv", sized(5, None), MIN)
}

fn multinetwork_formula() -> Outcome {
    let start = Instant::now();
    let one = report("tl-multi", sized(4, Some(1)), 10 * MIN)?;
    let two = report("tl-multi", sized(4, Some(2)), 10 * MIN)?;
    if start.elapsed() > 10 * MIN {
        return Err(format!("took {:?}", start.elapsed()));
    }
    Ok(format!("k=1 {one}; k=2 {two}"))
}

fn counterexamples() -> Outcome {
    let mut notes = Vec::new();
    for id in ["cx-schur", "cx-hjt"] {
        let start = Instant::now();
        let r = run_check(id, &Params::default()).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        let inst = &r.instances[0];
        let witness = inst.witness.as_ref().ok_or(format!("{id}: no witness"))?;
        let coeff: i64 = witness["coeff"].as_str().and_then(|c| c.parse().ok()).ok_or(format!("{id}: bad witness"))?;
        if !r.all_passed() || coeff >= 0 || elapsed > MIN {
            return Err(format!("{id}: status {} witness {witness} in {elapsed:?}", inst.status));
        }
        println!("    {id} witness: {witness}");
        notes.push(format!("{id} coefficient {coeff} at {}", witness["partitions"]));
    }
    Ok(notes.join("; "))
}

fn negative_beta() -> Outcome {
    let r = run_check("negative-beta", &Params::default()).map_err(|e| e.to_string())?;
    let inst = &r.instances[0];
    let w = inst.witness.as_ref().ok_or("no witness")?;
    let mut expected = GroupAlgebraElement::one(3);
    expected.add_term(Permutation::new(&[2, 1, 3]).map_err(|e| e.to_string())?, 1);
    expected.add_term(Permutation::new(&[1, 3, 2]).map_err(|e| e.to_string())?, 1);
    let want = expected.to_string();
    if !r.all_passed() || w["beta"] != want.as_str() || w["beta_by_tuples"] != want.as_str() || w["sign"] != -1 {
        return Err(format!("witness {w}"));
    }
    Ok(format!("beta = {want}, sign {}, intersection sequences {}", w["sign"], w["intersection_sequences"]))
}

fn tl_equals_det() -> Outcome {
    report("tl-equals-det", sized(5, Some(2)), 5 * MIN)
}

fn ribbon_sum() -> Outcome {
    report("ribbon-sum", sized(4, Some(2)), 5 * MIN)
}

fn frobenius() -> Outcome {
    report("frobenius-formula", sized(5, None), 5 * MIN)
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn algebra_suites() -> Outcome {
    let e = |e: tlimm::Error| e.to_string();
    // TL relations
    for n in 2..=6 {
        let t: Vec<TlElement> = (1..n).map(|i| TlElement::generator(i, n)).collect::<Result<_, _>>().map_err(e)?;
        for i in 0..n - 1 {
            ensure(t[i].mul(&t[i]).map_err(e)? == t[i].scale(2), || format!("t{}^2 != 2t{} (n={n})", i + 1, i + 1))?;
            for j in 0..n - 1 {
                let ij = t[i].mul(&t[j]).map_err(e)?;
                if i.abs_diff(j) == 1 {
                    ensure(ij.mul(&t[i]).map_err(e)? == t[i], || format!("braid-like relation {i},{j} n={n}"))?;
                } else if i.abs_diff(j) >= 2 {
                    ensure(ij == t[j].mul(&t[i]).map_err(e)?, || format!("t{i} t{j} do not commute"))?;
                }
            }
        }
    }
    // Catalan counts
    let mut catalan = 1u64;
    for n in 1..=8u64 {
        catalan = catalan * 2 * (2 * n - 1) / (n + 1);
        let count = KauffmanDiagram::enumerate(n as usize).map_err(e)?.len() as u64;
        ensure(count == catalan, || format!("|B_{n}| = {count}, expected {catalan}"))?;
    }
    // θ is a homomorphism, and θ(w) is recovered from the f_τ(w)
    let mut products = 0;
    for n in 1..=4 {
        let perms = Permutation::all(n);
        for u in &perms {
            for w in &perms {
                let lhs = theta_perm(&u.compose(w).map_err(e)?);
                let rhs = theta_perm(u).mul(&theta_perm(w)).map_err(e)?;
                ensure(*lhs == rhs, || format!("theta({u}{w}) != theta({u})theta({w})"))?;
                products += 1;
            }
        }
    }
    for n in 1..=5 {
        let diagrams = KauffmanDiagram::enumerate(n).map_err(e)?;
        for w in Permutation::all(n) {
            let mut rebuilt = TlElement::zero(n);
            for tau in &diagrams {
                rebuilt.add_term(tau.clone(), f_tau_perm(tau, &w));
            }
            ensure(rebuilt == *theta_perm(&w), || format!("reconstruction of theta({w})"))?;
        }
    }
    // B(I)⋆B(J) = B(I∩J)
    let mut pairs = 0;
    for n in 1..=6 {
        let subsets: Vec<IndexSet> = (0u32..1 << (n - 1))
            .map(|mask| (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
            .collect();
        let bs: Vec<GroupAlgebraElement> = subsets.iter().map(|s| b_of(s, n)).collect::<Result<_, _>>().map_err(e)?;
        for (i, a) in subsets.iter().enumerate() {
            for (j, b) in subsets.iter().enumerate() {
                let meet: IndexSet = a.intersection(b).copied().collect();
                ensure(bs[i].star(&bs[j]).map_err(e)? == b_of(&meet, n).map_err(e)?, || {
                    format!("B({a:?})*B({b:?}) != B({meet:?}) for n={n}")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("TL relations n<=6, Catalan n<=8, {products} theta products, {pairs} star pairs"))
}

fn bijection() -> Outcome {
    let e = |e: tlimm::Error| e.to_string();
    let mut checked = 0usize;
    let mut matched = 0usize;
    for m in 1..=5 {
        for r in all_ribbons(m) {
            let n = r.rows();
            let (a, b) = r.support().ok_or("empty ribbon")?;
            let nondes = r.ribbon_nondescents().map_err(e)?;
            let candidates: Vec<usize> = (a..b).collect();
            for mask in 0u32..1 << candidates.len() {
                let set: IndexSet =
                    candidates.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &i)| i).collect();
                let beta = b_of(&set, n).map_err(e)?;
                let target: IndexSet = nondes.union(&d_of(&set, &r).map_err(e)?).copied().collect();
                for height in 1..=3 {
                    let mut words = BTreeSet::new();
                    let mut count = 0;
                    for h in enumerate_subnetworks(&r, n, height).map_err(e)? {
                        if h.beta().map_err(e)? != beta {
                            continue;
                        }
                        count += 1;
                        let u = word_of_family(&h.noncrossing_cover().map_err(e)?);
                        ensure(word_descents(&u) == target, || format!("{r} I={set:?}: Des({u:?}) != {target:?}"))?;
                        let back = family_of_word(&u, &r, n).map_err(e)?.subnetwork(height).map_err(e)?;
                        ensure(back == h, || format!("{r} I={set:?}: {u:?} does not round-trip"))?;
                        ensure(words.insert(u.clone()), || format!("{r} I={set:?}: {u:?} hit twice"))?;
                    }
                    let expected: BTreeSet<Vec<usize>> = words_with_descents(m, &target, height).into_iter().collect();
                    ensure(words == expected && count == expected.len(), || {
                        format!("{r} I={set:?} N={height}: {count} subnetworks vs {} words", expected.len())
                    })?;
                    checked += 1;
                    matched += count;
                }
            }
        }
    }
    Ok(format!("{checked} (ribbon, I, N) cases, {matched} subnetworks matched to words"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 ribbon determinant Schur expansion, m <= 6", thm_1_4),
        ("2 LGV for skew shapes of size <= 5", lgv),
        ("3 multinetwork formula and m-positivity, k = 1, 2", multinetwork_formula),
        ("4 counterexamples for (2,2,2)", counterexamples),
        ("5 negative beta multinetwork", negative_beta),
        ("6 TL immanant of Hadamard square equals det", tl_equals_det),
        ("7 ribbon sum and (m!)^2", ribbon_sum),
        ("8 conjugate ribbon formula, size <= 5", frobenius),
        ("9 algebra suites", algebra_suites),
        ("10 subnetwork to word bijection", bijection),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failures += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
