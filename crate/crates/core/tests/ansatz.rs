mod common;

use anyonic_core::constructions::*;
use anyonic_core::lie_axioms::verify_all;
use anyonic_core::Bicharacter;
use common::*;

/// The original brackets plus every single-entry perturbation by ±1.
fn perturbations(base: &AnsatzParams) -> Vec<AnsatzParams> {
    let k = base.dim_g();
    let mut out = vec![base.clone()];
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                for delta in [1, -1] {
                    let mut p = base.clone();
                    *p.brackets.entry((i, j, l)).or_default() += &z(delta);
                    out.push(p);
                }
            }
        }
    }
    out
}

#[test]
fn sl2_reduction_agrees_with_full_check() {
    let base = sl2_params();
    let report = check_liesuper_reduction(&base).unwrap();
    assert!(report.direct_holds() && report.verify_passes);
    assert!(report.warning.is_none());

    let mut failures = 0;
    for p in perturbations(&base) {
        let r = check_liesuper_reduction(&p).unwrap();
        assert!(r.agrees(), "{:?}", p.brackets);
        failures += usize::from(!r.direct_holds());
    }
    assert!(failures > 0);
}

#[test]
fn super_reduction_agrees_with_full_check() {
    for base in [super_params(), heisenberg_super_params()] {
        let report = check_liesuper_reduction(&base).unwrap();
        assert!(report.direct_holds() && report.verify_passes);
        let mut failures = 0;
        for p in perturbations(&base) {
            let r = check_liesuper_reduction(&p).unwrap();
            assert!(r.agrees(), "{:?}", p.brackets);
            failures += usize::from(!r.direct_holds());
        }
        assert!(failures > 0);
    }
}

#[test]
fn odd_generators_at_three_fail_first_condition() {
    let grading = Bicharacter::anyonic(3).unwrap();
    let g = grading.group().clone();
    let brackets = [((0, 1, 2), z(1))].into_iter().collect();
    let params = AnsatzParams::new(
        grading,
        vec!["u".into(), "v".into(), "w".into()],
        vec![g.degree(&[1]).unwrap(), g.degree(&[1]).unwrap(), g.degree(&[2]).unwrap()],
        brackets,
    )
    .unwrap();
    let r = check_liesuper_reduction(&params).unwrap();
    assert!(!r.first_holds());
    assert!(!r.verify_passes);
    assert!(r.agrees());
    assert!(r.warning.is_some());
}

#[test]
fn degree_violating_bracket_is_reported() {
    let mut params = super_params();
    // [h, h] = psi breaks the grading
    params.brackets.insert((0, 0, 1), z(1));
    let r = check_liesuper_reduction(&params).unwrap();
    assert_eq!(r.degree_failures, vec![(0, 0, 1)]);
    assert!(r.agrees());
}

#[test]
fn abelian_ansatz_passes_when_doubled_phase_is_trivial() {
    for (n, p) in [(1u32, 0i64), (2, 1), (4, 2), (6, 3)] {
        let grading = Bicharacter::anyonic(n).unwrap();
        let d = grading.group().degree(&[p]).unwrap();
        let params = AnsatzParams::new(grading, vec!["g".into()], vec![d], Default::default()).unwrap();
        let spec = build_ansatz(&params).unwrap();
        assert!(verify_all(&spec).passed(), "n={n} p={p}");
    }
}

#[test]
fn ansatz_rejects_out_of_range_brackets() {
    let mut params = sl2_params();
    params.brackets.insert((0, 0, 7), z(1));
    assert!(build_ansatz(&params).is_err());
    assert!(AnsatzParams::new(Bicharacter::anyonic(1).unwrap(), vec!["a".into()], vec![], Default::default()).is_err());
}
