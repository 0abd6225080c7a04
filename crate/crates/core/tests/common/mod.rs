#![allow(dead_code)]

use std::collections::BTreeMap;

use anyonic_core::constructions::{build_matrix_type, AnsatzParams, MatrixTypeParams};
use anyonic_core::{AlgebraSpec, BasisElement, Bicharacter, CycNum, GradingGroup};

pub fn z(k: i64) -> CycNum {
    CycNum::from_integer(k)
}

pub fn zeta(n: u32, k: i64) -> CycNum {
    CycNum::root_of_unity(n, k).unwrap()
}

pub fn matrix_type(n: u32, f: &[i64]) -> AlgebraSpec {
    build_matrix_type(&MatrixTypeParams::anyonic(n, f).unwrap()).unwrap()
}

/// `ε = 1`, `Δx = x ⊗ x`, `[x, x] = x`.
pub fn one_dim() -> AlgebraSpec {
    let g = GradingGroup::cyclic(1).unwrap();
    AlgebraSpec::new(
        Bicharacter::anyonic(1).unwrap(),
        vec![BasisElement {
            name: "x".into(),
            degree: g.zero(),
        }],
        [(0, z(1))],
        [((0, 0, 0), z(1))],
        [((0, 0, 0), z(1))],
    )
    .unwrap()
}

type M2 = [[i64; 2]; 2];

fn commutator(x: &M2, y: &M2) -> M2 {
    let mul = |a: &M2, b: &M2| {
        let mut out = [[0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        out
    };
    let (p, q) = (mul(x, y), mul(y, x));
    [[p[0][0] - q[0][0], p[0][1] - q[0][1]], [p[1][0] - q[1][0], p[1][1] - q[1][1]]]
}

/// Structure constants of sl2 in the basis (e, f, h), read off from 2×2
/// matrix commutators.
pub fn sl2_brackets() -> BTreeMap<(usize, usize, usize), CycNum> {
    let basis: [M2; 3] = [[[0, 1], [0, 0]], [[0, 0], [1, 0]], [[1, 0], [0, -1]]];
    let mut out = BTreeMap::new();
    for i in 0..3 {
        for j in 0..3 {
            let m = commutator(&basis[i], &basis[j]);
            assert_eq!(m[0][0], -m[1][1]);
            for (k, v) in [(0, m[0][1]), (1, m[1][0]), (2, m[0][0])] {
                if v != 0 {
                    out.insert((i, j, k), z(v));
                }
            }
        }
    }
    out
}

pub fn sl2_params() -> AnsatzParams {
    let grading = Bicharacter::anyonic(1).unwrap();
    let zero = grading.group().zero();
    AnsatzParams::new(
        grading,
        vec!["e".into(), "f".into(), "h".into()],
        vec![zero.clone(), zero.clone(), zero],
        sl2_brackets(),
    )
    .unwrap()
}

/// Even `h`, odd `ψ` with `[h, ψ] = ψ`, `[ψ, h] = -ψ` and `[ψ, ψ] = 0`.
pub fn super_params() -> AnsatzParams {
    let grading = Bicharacter::anyonic(2).unwrap();
    let g = grading.group().clone();
    let brackets = [((0, 1, 1), z(1)), ((1, 0, 1), z(-1))].into_iter().collect();
    AnsatzParams::new(
        grading,
        vec!["h".into(), "psi".into()],
        vec![g.zero(), g.degree(&[1]).unwrap()],
        brackets,
    )
    .unwrap()
}

/// Even central `z`, odd `ψ` with `[ψ, ψ] = z`.
pub fn heisenberg_super_params() -> AnsatzParams {
    let grading = Bicharacter::anyonic(2).unwrap();
    let g = grading.group().clone();
    let brackets = [((1, 1, 0), z(1))].into_iter().collect();
    AnsatzParams::new(
        grading,
        vec!["z".into(), "psi".into()],
        vec![g.zero(), g.degree(&[1]).unwrap()],
        brackets,
    )
    .unwrap()
}
