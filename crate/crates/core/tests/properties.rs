use proptest::prelude::*;

use tlimm::algebra::{b_of, theta, theta_perm, GroupAlgebraElement, KauffmanDiagram, Permutation, TlElement};
use tlimm::checks::{run_check, Params};
use tlimm::combinatorics::{parse_shape, ribbon_from_descents, IndexSet, Partition, SkewShape};
use tlimm::immanants::{immanant, PolyMatrix};
use tlimm::poly::{AlphabetSpec, Coeff, Monomial, MultiPolynomial};
use tlimm::symfun::{elementary, expand_in_schur, homogeneous};
use tlimm::tableaux::{descents, rsk, word_descents};

fn spec() -> AlphabetSpec {
    AlphabetSpec::new(vec![3, 2]).unwrap()
}

fn poly() -> impl Strategy<Value = MultiPolynomial> {
    let term = (prop::collection::vec(0u16..3, 3), prop::collection::vec(0u16..3, 2), -4i64..=4);
    prop::collection::vec(term, 0..6).prop_map(|terms| {
        let s = spec();
        let mut p = MultiPolynomial::zero(&s);
        for (x, y, c) in terms {
            p.add_term(Monomial::from_exponents(&s, &[x, y]).unwrap(), Coeff::from(c));
        }
        p
    })
}

fn no_zero_terms(p: &MultiPolynomial) -> bool {
    p.terms().all(|(_, c)| *c != Coeff::from(0))
}

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::new(&v).unwrap())
}

fn subset(n: usize) -> impl Strategy<Value = IndexSet> {
    prop::collection::btree_set(1..n.max(2), 0..n).prop_map(move |s| s.into_iter().filter(|&i| i < n).collect())
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..6, 0..5).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        for x in [&p + &q, &p - &q, &p * &q] {
            prop_assert!(no_zero_terms(&x));
        }
    }

    #[test]
    fn degree_is_additive(p in poly(), q in poly()) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        prop_assert_eq!((&p * &q).total_degree(), p.total_degree() + q.total_degree());
    }

    #[test]
    fn permutations_form_a_group(u in perm(6), v in perm(6), w in perm(6)) {
        let uv = u.compose(&v).unwrap();
        prop_assert_eq!(uv.compose(&w).unwrap(), u.compose(&v.compose(&w).unwrap()).unwrap());
        prop_assert_eq!(u.compose(&u.inverse()).unwrap(), Permutation::identity(6));
        prop_assert_eq!(uv.sign(), u.sign() * v.sign());
        prop_assert_eq!(u.reduced_word().len(), u.length());
        // left to right: (uv)(i) = v(u(i))
        for i in 0..6 {
            prop_assert_eq!(uv.apply(i), v.apply(u.apply(i)));
        }
    }

    #[test]
    fn theta_respects_products(
        a in prop::collection::vec((perm(5), -2i64..=2), 1..4),
        b in prop::collection::vec((perm(5), -2i64..=2), 1..4),
    ) {
        let build = |terms: &[(Permutation, i64)]| {
            let mut x = GroupAlgebraElement::zero(5);
            for (w, c) in terms {
                x.add_term(w.clone(), *c);
            }
            x
        };
        let (x, y) = (build(&a), build(&b));
        prop_assert_eq!(theta(&x.mul(&y).unwrap()), theta(&x).mul(&theta(&y)).unwrap());
    }

    #[test]
    fn tl_multiplication_is_associative(i in 0usize..42, j in 0usize..42, k in 0usize..42) {
        let ds = KauffmanDiagram::enumerate(5).unwrap();
        let [a, b, c] = [i, j, k].map(|x| TlElement::basis(ds[x].clone()));
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn star_of_b_is_b_of_intersection(n in 2usize..=8, i in subset(8), j in subset(8)) {
        let clip = |s: &IndexSet| s.iter().copied().filter(|&x| x < n).collect::<IndexSet>();
        let (i, j) = (clip(&i), clip(&j));
        let meet: IndexSet = i.intersection(&j).copied().collect();
        prop_assert_eq!(b_of(&i, n).unwrap().star(&b_of(&j, n).unwrap()).unwrap(), b_of(&meet, n).unwrap());
    }

    #[test]
    fn theta_of_simple_is_generator_minus_one(n in 2usize..=6, i in 1usize..6) {
        prop_assume!(i < n);
        let expected = TlElement::generator(i, n).unwrap().add(&TlElement::one(n).scale(-1)).unwrap();
        prop_assert_eq!((*theta_perm(&Permutation::simple(i, n).unwrap())).clone(), expected);
    }

    #[test]
    fn immanants_are_linear(
        entries in prop::collection::vec(poly(), 9),
        f in prop::collection::vec(-3i64..=3, 6),
        g in prop::collection::vec(-3i64..=3, 6),
    ) {
        let rows: Vec<Vec<MultiPolynomial>> = entries.chunks(3).map(|c| c.to_vec()).collect();
        let m = PolyMatrix::new(rows).unwrap();
        let index = |w: &Permutation| Permutation::all(3).iter().position(|x| x == w).unwrap();
        let lhs = immanant(&m, |w| f[index(w)] + g[index(w)]).unwrap();
        let rhs = &immanant(&m, |w| f[index(w)]).unwrap() + &immanant(&m, |w| g[index(w)]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn schur_expansion_round_trips(es in prop::collection::vec(0i64..=3, 1..3), hs in prop::collection::vec(0i64..=2, 0..2)) {
        let degree = es.iter().chain(&hs).sum::<i64>() as usize;
        let s = AlphabetSpec::single(degree.max(1));
        let mut p = MultiPolynomial::one(&s);
        for d in es {
            p = &p * &elementary(d, 0, &s);
        }
        for d in hs {
            p = &p * &homogeneous(d, 0, &s);
        }
        let e = expand_in_schur(&p).unwrap();
        prop_assert!(e.is_nonnegative());
        prop_assert_eq!(e.to_polynomial().unwrap(), p);
    }

    #[test]
    fn rsk_preserves_descents_and_letters(u in prop::collection::vec(1usize..=4, 1..10)) {
        let (p, q) = rsk(&u);
        prop_assert!(q.is_standard());
        prop_assert_eq!(descents(&q).unwrap(), word_descents(&u));
        let mut letters: Vec<usize> = p.rows().concat();
        let mut sorted = u.clone();
        letters.sort_unstable();
        sorted.sort_unstable();
        prop_assert_eq!(letters, sorted);
    }

    #[test]
    fn ribbon_descents_round_trip(m in 1usize..=12, d in prop::collection::btree_set(1usize..12, 0..6)) {
        let d: IndexSet = d.into_iter().filter(|&i| i < m).collect();
        let r = ribbon_from_descents(m, &d).unwrap();
        prop_assert!(r.is_ribbon() && r.avoids_3x2());
        prop_assert_eq!(r.size(), m);
        prop_assert_eq!(r.ribbon_descents().unwrap(), d);
    }

    #[test]
    fn shape_parsing_round_trips(outer in partition(), inner in partition()) {
        prop_assume!(outer.contains(&inner) && !outer.is_empty());
        let s = SkewShape::new(outer.clone(), inner).unwrap();
        prop_assert_eq!(parse_shape(&s.to_string()).unwrap(), s);
        prop_assert_eq!(outer.conjugate().conjugate(), outer);
    }
}

#[test]
fn reports_are_deterministic() {
    for (id, params) in [
        ("tl-multi", Params { max_size: Some(3), k: Some(2), ..Params::default() }),
        ("explore-conj", Params { max_size: Some(2), n: Some(2), ..Params::default() }),
        ("negative-beta", Params::default()),
    ] {
        let a = serde_json::to_string(&run_check(id, &params).unwrap().to_json()).unwrap();
        let b = serde_json::to_string(&run_check(id, &params).unwrap().to_json()).unwrap();
        assert_eq!(a, b, "{id}");
    }
}
