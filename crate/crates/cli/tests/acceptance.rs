//! One PASS/FAIL line per acceptance criterion. All comparisons are exact.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use anyonic::search::{self, SearchSpace};
use anyonic_core::anyspace::AnySpace;
use anyonic_core::constructions::*;
use anyonic_core::envelope::*;
use anyonic_core::lie_axioms::verify_all;
use anyonic_core::{q_binomial, AlgebraSpec, Bicharacter, CycNum, Rational};
use common::*;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use serde_json::Value;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn system(spec: &AlgebraSpec) -> RewriteSystem {
    let rels = generate_relations(spec, false).unwrap();
    RewriteSystem::build(&rels, spec.dim(), None).unwrap()
}

fn nf(rs: &RewriteSystem, w: &[usize]) -> Poly {
    rs.normal_form(&Poly::word(w.to_vec()))
}

fn matrix_sweep() -> Check {
    let start = Instant::now();
    let mut count = 0;
    for n in 1..=6u32 {
        for size in 1..=3u32 {
            for code in 0..n.pow(size) {
                let f: Vec<i64> = (0..size).map(|i| i64::from(code / n.pow(i) % n)).collect();
                let mut params = MatrixTypeParams::anyonic(n, &f).unwrap();
                params.verify = false;
                let spec = build_matrix_type(&params).unwrap();
                let report = verify_all(&spec);
                ensure(report.passed(), || format!("n={n} f={f:?} fails {:?}", report.failed_axioms()))?;
                count += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    println!("  {count} matrix algebras verified in {:.2?}", elapsed);
    Ok(())
}

fn l2_at_three() -> Check {
    // through the command line, then cross-checked on the library side
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance_l2.json");
    let make = Command::new(env!("CARGO_BIN_EXE_anyonic"))
        .args(["make-matrix", "--N", "2", "--n", "3", "--f", "0,1", "--names", "a,b,c,d", "-o"])
        .arg(&path)
        .status()
        .unwrap();
    ensure(make.success(), || "make-matrix failed".into())?;
    let out = Command::new(env!("CARGO_BIN_EXE_anyonic"))
        .args(["--json", "env"])
        .arg(&path)
        .output()
        .unwrap();
    ensure(out.status.success(), || "env failed".into())?;
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let mut zero: BTreeSet<(usize, usize)> = v["zero_products"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p[0].as_u64().unwrap() as usize, p[1].as_u64().unwrap() as usize))
        .collect();
    for i in v["nilpotents"].as_array().unwrap() {
        let i = i.as_u64().unwrap() as usize;
        zero.insert((i, i));
    }
    let (a, b, c, d) = (0, 1, 2, 3);
    let expected: BTreeSet<_> = [(b, b), (c, c), (b, d), (d, b), (c, d), (d, c)].into_iter().collect();
    ensure(zero == expected, || format!("zero products {zero:?}"))?;

    let rs = system(&matrix_type(3, &[0, 1]));
    for x in 0..4 {
        for y in 0..4 {
            let vanishes = nf(&rs, &[x, y]).is_zero();
            ensure(vanishes == expected.contains(&(x, y)), || format!("product ({x},{y})"))?;
        }
    }
    ensure(nf(&rs, &[c, b]) == Poly::monomial(vec![b, c], zeta(3, 1)), || "cb".into())?;
    ensure(nf(&rs, &[a, d]) == nf(&rs, &[d, a]), || "ad".into())
}

fn super_matrices() -> Check {
    let (a, b, c, d) = (0, 1, 2, 3);
    let rs = system(&matrix_type(2, &[0, 1]));
    for x in 0..4 {
        ensure(nf(&rs, &[a, x]) == nf(&rs, &[x, a]), || format!("a with {x}"))?;
        ensure(nf(&rs, &[d, x]) == nf(&rs, &[x, d]), || format!("d with {x}"))?;
    }
    ensure(nf(&rs, &[b, b]).is_zero() && nf(&rs, &[c, c]).is_zero(), || "squares".into())?;
    ensure(nf(&rs, &[b, c]) == nf(&rs, &[c, b]).scale(&z(-1)), || "bc = -cb".into())?;
    ensure(!nf(&rs, &[b, c]).is_zero(), || "bc vanishes".into())
}

fn l3() -> Check {
    let (a, bm, bp, cp, dp, em, cm, ep, dm) = (0, 1, 2, 3, 4, 5, 6, 7, 8);
    let rs = system(&matrix_type(3, &[0, 1, 2]));
    let (q, qi) = (zeta(3, 1), zeta(3, -1));
    for x in 0..9 {
        ensure(nf(&rs, &[a, x]) == nf(&rs, &[x, a]), || format!("a with {x}"))?;
    }
    for (b, c, other) in [(bp, cp, cm), (bm, cm, cp)] {
        ensure(nf(&rs, &[b, c]) == nf(&rs, &[c, b]).scale(&q), || format!("b{b} c{c}"))?;
        ensure(nf(&rs, &[b, other]) == nf(&rs, &[other, b]).scale(&qi), || format!("b{b} c{other}"))?;
        ensure(!nf(&rs, &[b, c]).is_zero(), || "bc vanishes".into())?;
    }
    ensure(nf(&rs, &[dp, dm]) == nf(&rs, &[dm, dp]), || "d's commute".into())?;
    ensure(!nf(&rs, &[dp, dp, dm]).is_zero(), || "d polynomial ring".into())?;
    for d in [dp, dm] {
        for e in [ep, em] {
            ensure(nf(&rs, &[d, e]).is_zero() && nf(&rs, &[e, d]).is_zero(), || format!("{d} {e}"))?;
        }
    }
    for x in [bm, bp, cm, cp] {
        for y in [dp, dm, ep, em] {
            ensure(nf(&rs, &[x, y]).is_zero() && nf(&rs, &[y, x]).is_zero(), || format!("{x} {y}"))?;
        }
    }
    Ok(())
}

fn determinant() -> Check {
    let (a, b, c, d) = (0, 1, 2, 3);
    let spec = matrix_type(3, &[0, 1]);
    let rs = system(&spec);
    let det = Poly::word(vec![a, d]).sub(&Poly::word(vec![c, b]));
    let nd = rs.normal_form(&det);
    ensure(
        delta_on_products(&spec, &rs, &det) == TensorSquarePoly::tensor(&nd, &nd),
        || "not grouplike".into(),
    )?;
    ensure(rs.is_central(&det), || "not central".into())?;
    ensure(poly_degree(&spec, &nd) == Some(spec.grading().group().zero()), || "not bosonic".into())?;
    let q = QuotientSystem::by_central_element(&rs, &det).map_err(|e| e.to_string())?;
    ensure(q.normal_form(&Poly::word(vec![b])).is_zero(), || "b survives".into())?;
    ensure(q.normal_form(&Poly::word(vec![c])).is_zero(), || "c survives".into())?;
    ensure(q.normal_form(&Poly::word(vec![a, d])) == Poly::one(), || "ad != 1".into())?;
    ensure(q.normal_form(&Poly::word(vec![d, a])) == Poly::one(), || "da != 1".into())
}

fn anyspace_sum() -> Check {
    for n in 2..=12u32 {
        let s = AnySpace::new(n).unwrap();
        let sum = s.theta(2, 0).add(&s.theta(2, 1));
        ensure(s.pow(&sum, n).is_zero(), || format!("n={n}"))?;
        for k in 0..n {
            let p = s.pow(&sum, k);
            for j in 0..=k {
                ensure(p.coeff(&[j, k - j]) == q_binomial(k, j, s.q()).unwrap(), || format!("n={n} k={k} j={j}"))?;
            }
        }
        for j in 1..n {
            ensure(q_binomial(n, j, s.q()).unwrap().is_zero(), || format!("[{n},{j}] != 0"))?;
        }
    }
    Ok(())
}

fn anyspace_laws() -> Check {
    for n in 1..=8u32 {
        let s = AnySpace::new(n).unwrap();
        let (t1, t2, t3) = (s.theta(3, 0), s.theta(3, 1), s.theta(3, 2));
        for k in 0..n {
            let m = s.monomial(vec![k], z(1));
            let delta = s.coproduct(&m);
            let left = s.substitute(&delta, &[t1.add(&t2), t3.clone()]);
            let right = s.substitute(&delta, &[t1.clone(), t2.add(&t3)]);
            ensure(left == right, || format!("coassociativity n={n} k={k}"))?;
            let eps = |p: &_| s.constant(1, s.counit(p));
            ensure(s.multiply_legs(&s.on_first_leg(&delta, eps)) == m, || format!("left counit n={n} k={k}"))?;
            ensure(s.multiply_legs(&s.on_second_leg(&delta, eps)) == m, || format!("right counit n={n} k={k}"))?;
            let unit = s.constant(1, s.counit(&m));
            let anti = |p: &_| s.antipode(p);
            ensure(s.multiply_legs(&s.on_first_leg(&delta, anti)) == unit, || format!("left antipode n={n} k={k}"))?;
            ensure(s.multiply_legs(&s.on_second_leg(&delta, anti)) == unit, || format!("right antipode n={n} k={k}"))?;
        }
    }
    Ok(())
}

fn ansatz_agreement() -> Check {
    let mut tested = 0;
    let mut failing = 0;
    for base in [sl2_params(), super_params(), heisenberg_super_params()] {
        let k = base.dim_g();
        let mut sets = vec![base.clone()];
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    for delta in [1, -1] {
                        let mut p = base.clone();
                        *p.brackets.entry((i, j, l)).or_default() += &z(delta);
                        sets.push(p);
                    }
                }
            }
        }
        for p in sets {
            let r = check_liesuper_reduction(&p).map_err(|e| e.to_string())?;
            ensure(r.agrees(), || format!("disagreement at {:?}", p.brackets))?;
            tested += 1;
            failing += usize::from(!r.verify_passes);
        }
    }
    ensure(failing > 0, || "no constructed failures".into())?;
    println!("  {tested} parameter sets agree ({failing} constructed failures)");
    Ok(())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn cyc() -> impl Strategy<Value = CycNum> {
    (1u32..=12).prop_flat_map(|m| {
        prop::collection::vec((0i64..24, small_rational()), 0..4)
            .prop_map(move |terms| CycNum::from_terms(m, terms).unwrap())
    })
}

fn cases(n: u32) -> Config {
    Config {
        failure_persistence: None,
        ..Config::with_cases(n)
    }
}

fn property_suites() -> Check {
    let mut runner = TestRunner::new(cases(10_000));
    runner
        .run(&(cyc(), cyc(), cyc()), |(a, b, c)| {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
            Ok(())
        })
        .map_err(|e| format!("field axioms: {e}"))?;

    let examples = [
        matrix_type(3, &[0, 1]),
        matrix_type(2, &[0, 1]),
        matrix_type(3, &[0, 1, 2]),
        build_ansatz(&sl2_params()).unwrap(),
        build_ansatz(&super_params()).unwrap(),
        build_ansatz(&heisenberg_super_params()).unwrap(),
    ];
    for (idx, spec) in examples.iter().enumerate() {
        let rs = system(spec);
        let conf = rs.check_local_confluence(4);
        ensure(conf.confluent(), || format!("example {idx} not confluent"))?;
        let dim = spec.dim();
        let word = prop::collection::vec(0..dim, 0..=3);
        let mut runner = TestRunner::new(cases(64));
        runner
            .run(&(word.clone(), word), |(u, v)| {
                let nu = rs.normal_form(&Poly::word(u.clone()));
                prop_assert_eq!(rs.normal_form(&nu), nu.clone());
                for w in nu.terms().keys() {
                    prop_assert_eq!(w.len(), u.len());
                    prop_assert_eq!(spec.word_degree(w), spec.word_degree(&u));
                }
                let du = delta_on_products(spec, &rs, &Poly::word(u.clone()));
                let dv = delta_on_products(spec, &rs, &Poly::word(v.clone()));
                let uv = rs.normal_form(&Poly::word(u).mul(&Poly::word(v)));
                prop_assert_eq!(delta_on_products(spec, &rs, &uv), du.braided_mul(&dv, spec).normalize(&rs));
                Ok(())
            })
            .map_err(|e| format!("example {idx}: {e}"))?;
    }
    Ok(())
}

fn desk_search() -> Check {
    let space = |n: u32, alphabet: Vec<CycNum>| SearchSpace {
        grading: Bicharacter::anyonic(n).unwrap(),
        dim: 1,
        degrees: None,
        alphabet,
        require_nonzero_delta: false,
        require_nonzero_degree: false,
        prune: true,
    };
    let found = search::run(&space(1, vec![z(0), z(1), z(-1)]), search::DEFAULT_CAP, true).map_err(|e| e.to_string())?;
    let target = one_dim();
    let contains = found.solutions.iter().any(|s| {
        s.spec.eps() == target.eps() && s.spec.d() == target.d() && s.spec.c() == target.c()
    });
    ensure(contains, || "one-dimensional case missing".into())?;

    let mut s = space(3, search::default_alphabet(3));
    s.require_nonzero_delta = true;
    s.require_nonzero_degree = true;
    let none = search::run(&s, search::DEFAULT_CAP, true).map_err(|e| e.to_string())?;
    ensure(none.solutions.is_empty(), || format!("{} solutions at n=3", none.solutions.len()))?;
    let mut unpruned = s;
    unpruned.prune = false;
    let none = search::run(&unpruned, search::DEFAULT_CAP, true).map_err(|e| e.to_string())?;
    ensure(none.solutions.is_empty(), || "unpruned search found solutions".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("matrix family verifies for N <= 3, n <= 6", matrix_sweep),
        ("L2 relations at n = 3", l2_at_three),
        ("super matrices at n = 2", super_matrices),
        ("L3 relations at n = 3", l3),
        ("ad - cb grouplike, central, quotient", determinant),
        ("(t + t')^n = 0 for n in 2..=12", anyspace_sum),
        ("anyspace coalgebra and antipode laws", anyspace_laws),
        ("ansatz reduction agrees with verifier", ansatz_agreement),
        ("property suites", property_suites),
        ("desk-scale search", desk_search),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS {}: {name}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {}: {name}: {e}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
