mod common;

use anyonic_core::anyspace::{AnySpace, ThetaPoly};
use anyonic_core::constructions::build_ansatz;
use anyonic_core::envelope::*;
use anyonic_core::graded::{Bicharacter, GradingGroup};
use anyonic_core::{q_binomial, AlgebraSpec, CycNum, Rational};
use common::*;
use std::sync::OnceLock;
use num_bigint::BigInt;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
}

/// Random element of `Q(ζ_m)` for `m` in 1..=12, as a sum of root powers.
fn cyc() -> impl Strategy<Value = CycNum> {
    (1u32..=12).prop_flat_map(|m| {
        prop::collection::vec((0i64..24, small_rational()), 0..4)
            .prop_map(move |terms| CycNum::from_terms(m, terms).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn field_axioms(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert_eq!((&b * &a).checked_div(&a).unwrap(), b.clone());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn embedding_preserves_arithmetic(a in cyc(), b in cyc(), k in 1u32..4) {
        let target = a.order() * b.order() * k;
        prop_assert_eq!(a.embed(target), a.clone());
        prop_assert_eq!(&a.embed(target) * &b.embed(target), &a * &b);
    }

    #[test]
    fn powers_of_roots(m in 1u32..=24, j in -30i64..30, k in -30i64..30) {
        let x = CycNum::root_of_unity(m, j).unwrap();
        let y = CycNum::root_of_unity(m, k).unwrap();
        prop_assert_eq!(&x * &y, CycNum::root_of_unity(m, j + k).unwrap());
        prop_assert_eq!(x.pow(k).unwrap(), CycNum::root_of_unity(m, j * k).unwrap());
    }

    /// q-binomial theorem: Π_{i<a} (1 + q^i t) = Σ_k q^{k(k-1)/2} [a, k] t^k.
    #[test]
    fn q_binomial_theorem(m in 1u32..=12, e in 0i64..12, a in 0u32..9) {
        let q = CycNum::root_of_unity(m, e).unwrap();
        let mut poly = vec![CycNum::one()];
        for i in 0..a {
            let qi = q.pow(i64::from(i)).unwrap();
            let mut next = vec![CycNum::zero(); poly.len() + 1];
            for (k, c) in poly.iter().enumerate() {
                next[k] += c;
                next[k + 1] += &(c * &qi);
            }
            poly = next;
        }
        for k in 0..=a {
            let scale = q.pow(i64::from(k * k.saturating_sub(1) / 2)).unwrap();
            prop_assert_eq!(&scale * &q_binomial(a, k, &q).unwrap(), poly[k as usize].clone());
        }
    }

    #[test]
    fn matrix_bicharacters_are_bimultiplicative(
        factors in prop::collection::vec(1u32..=6, 1..=2),
        entries in prop::collection::vec(-6i64..6, 4),
        g in prop::collection::vec(-10i64..10, 2),
        h in prop::collection::vec(-10i64..10, 2),
        k in prop::collection::vec(-10i64..10, 2),
    ) {
        let group = GradingGroup::new(factors.clone()).unwrap();
        let r = factors.len();
        let matrix: Vec<Vec<i64>> = (0..r).map(|i| entries[i * r..i * r + r].to_vec()).collect();
        let b = Bicharacter::from_matrix(group.clone(), matrix).unwrap();
        let (g, h, k) = (group.degree(&g[..r]).unwrap(), group.degree(&h[..r]).unwrap(), group.degree(&k[..r]).unwrap());
        let phase = |x: &_, y: &_| b.phase(x, y).unwrap();
        prop_assert_eq!(phase(&group.add(&g, &h), &k), &phase(&g, &k) * &phase(&h, &k));
        prop_assert_eq!(phase(&g, &group.add(&h, &k)), &phase(&g, &h) * &phase(&g, &k));
        prop_assert!(phase(&group.zero(), &g).is_one());
    }
}

fn examples() -> Vec<(&'static str, AlgebraSpec)> {
    vec![
        ("l2 n=3", matrix_type(3, &[0, 1])),
        ("l2 n=2", matrix_type(2, &[0, 1])),
        ("l3 n=3", matrix_type(3, &[0, 1, 2])),
        ("sl2 ansatz", build_ansatz(&sl2_params()).unwrap()),
        ("super ansatz", build_ansatz(&super_params()).unwrap()),
        ("heisenberg ansatz", build_ansatz(&heisenberg_super_params()).unwrap()),
    ]
}

fn rewrite(spec: &AlgebraSpec) -> RewriteSystem {
    let rels = generate_relations(spec, false).unwrap();
    RewriteSystem::build(&rels, spec.dim(), None).unwrap()
}

fn word(dim: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..dim, 0..=max_len)
}

fn poly(dim: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((word(dim, 4), -3i64..=3), 0..5)
        .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|(w, c)| (w, z(c)))))
}

fn cached() -> &'static [(&'static str, AlgebraSpec, RewriteSystem)] {
    static CACHE: OnceLock<Vec<(&'static str, AlgebraSpec, RewriteSystem)>> = OnceLock::new();
    CACHE.get_or_init(|| {
        examples()
            .into_iter()
            .map(|(name, spec)| {
                let rs = rewrite(&spec);
                (name, spec, rs)
            })
            .collect()
    })
}

fn example_polys() -> impl Strategy<Value = (usize, Vec<Poly>)> {
    (0..cached().len()).prop_flat_map(|i| (Just(i), prop::collection::vec(poly(cached()[i].1.dim()), 8)))
}

type WordPair = (Vec<usize>, Vec<usize>);

fn example_word_pairs() -> impl Strategy<Value = (usize, Vec<WordPair>)> {
    (0..cached().len()).prop_flat_map(|i| {
        let dim = cached()[i].1.dim();
        (Just(i), prop::collection::vec((word(dim, 3), word(dim, 3)), 4))
    })
}

#[test]
fn example_systems_are_locally_confluent_to_four() {
    for (name, _, rs) in cached() {
        let report = rs.check_local_confluence(4);
        assert!(report.confluent(), "{name}: {:?}", report.divergences.first());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_idempotent_and_graded((idx, polys) in example_polys()) {
        let (_, spec, rs) = &cached()[idx];
        for p in polys {
            let nf = rs.normal_form(&p);
            prop_assert_eq!(rs.normal_form(&nf), nf.clone());
            for w in nf.terms().keys() {
                prop_assert!(rs.is_normal(w));
            }
            // each word's normal form keeps its length and degree
            for w in p.terms().keys() {
                let n = rs.normal_form(&Poly::word(w.clone()));
                for v in n.terms().keys() {
                    prop_assert_eq!(v.len(), w.len());
                    prop_assert_eq!(spec.word_degree(v), spec.word_degree(w));
                }
            }
        }
    }

    #[test]
    fn coproduct_is_multiplicative((idx, pairs) in example_word_pairs()) {
        let (_, spec, rs) = &cached()[idx];
        for (u, v) in pairs {
            let du = delta_on_products(spec, rs, &Poly::word(u.clone()));
            let dv = delta_on_products(spec, rs, &Poly::word(v.clone()));
            let product = du.braided_mul(&dv, spec).normalize(rs);
            let uv = rs.normal_form(&Poly::word(u).mul(&Poly::word(v)));
            prop_assert_eq!(delta_on_products(spec, rs, &uv), product);
        }
    }

    #[test]
    fn anyspace_coproduct_is_an_algebra_map(
        n in 2u32..=7,
        a in prop::collection::vec((0u32..7, -3i64..=3), 0..4),
        b in prop::collection::vec((0u32..7, -3i64..=3), 0..4),
    ) {
        let s = AnySpace::new(n).unwrap();
        let mk = |terms: &[(u32, i64)]| {
            terms.iter().fold(ThetaPoly::zero(1), |acc, &(k, c)| acc.add(&s.monomial(vec![k], z(c))))
        };
        let (p, q) = (mk(&a), mk(&b));
        prop_assert_eq!(s.coproduct(&s.mul(&p, &q)), s.mul(&s.coproduct(&p), &s.coproduct(&q)));
        prop_assert_eq!(s.counit(&s.mul(&p, &q)), &s.counit(&p) * &s.counit(&q));
    }
}
