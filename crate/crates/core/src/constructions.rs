//! Two families of examples.
//!
//! **Matrix type** `L_{N,f}`: basis `x^m_ṁ` for `1 ≤ m, ṁ ≤ N`, with degrees
//! `p(x^m_ṁ) = f(m) - f(ṁ)` for a row grading `f`. The coproduct is matrix
//! comultiplication `Δx^m_ṁ = Σ_a x^m_a ⊗ x^a_ṁ`, the counit is the trace
//! pairing `ε(x^m_ṁ) = δ^m_ṁ`, and only diagonal elements act:
//!
//! ```text
//! [x^m_m, x^ν] = β(f(m), p(ν))^{-2} x^ν,   [x^m_ṁ, x^ν] = 0 for m ≠ ṁ
//! ```
//!
//! **Central-extension ansatz**: a Lie algebra `g` with brackets `c^{ij}_k`
//! plus a grouplike `x^0` of degree zero acting as the identity. The axioms
//! then reduce to a degree condition on the brackets, `β(p(i), p(j))² = 1`
//! for all pairs, and a braided Jacobi identity on `g` alone (see
//! [`check_liesuper_reduction`]).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{AlgebraSpec, BasisElement, SpecError, Triple};
use crate::cyclotomic::CycNum;
use crate::graded::{Bicharacter, Degree, GradingError};
use crate::lie_axioms::{verify_all, Axiom};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    Grading(GradingError),
    Spec(SpecError),
    EmptySize,
    /// Wrong number of row degrees, ansatz degrees, or names.
    Count { what: &'static str, expected: usize, found: usize },
    /// The built spec failed these axioms.
    NotVerified(Vec<Axiom>),
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::Grading(e) => write!(f, "{e}"),
            ConstructionError::Spec(e) => write!(f, "{e}"),
            ConstructionError::EmptySize => write!(f, "size must be at least 1"),
            ConstructionError::Count { what, expected, found } => {
                write!(f, "expected {expected} {what}, found {found}")
            }
            ConstructionError::NotVerified(axioms) => {
                write!(f, "constructed spec fails:")?;
                for a in axioms {
                    write!(f, " {a}")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ConstructionError {}

impl From<GradingError> for ConstructionError {
    fn from(e: GradingError) -> Self {
        ConstructionError::Grading(e)
    }
}

impl From<SpecError> for ConstructionError {
    fn from(e: SpecError) -> Self {
        ConstructionError::Spec(e)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatrixTypeParams {
    pub grading: Bicharacter,
    /// `f(m)` for each row; the matrix size is the length.
    pub row_degrees: Vec<Degree>,
    /// Basis names in row-major order; defaults to `x[m,ṁ]`, 1-based.
    pub names: Option<Vec<String>>,
    /// Run the axiom checks on the result. Off for batch runs.
    pub verify: bool,
}

impl MatrixTypeParams {
    pub fn new(grading: Bicharacter, row_degrees: Vec<Degree>) -> Self {
        MatrixTypeParams {
            grading,
            row_degrees,
            names: None,
            verify: true,
        }
    }

    /// `Z/n` with the anyonic braiding and integer row degrees.
    pub fn anyonic(n: u32, f: &[i64]) -> Result<Self, ConstructionError> {
        let grading = Bicharacter::anyonic(n)?;
        let row_degrees = f
            .iter()
            .map(|&k| grading.group().degree(&[k]))
            .collect::<Result<_, _>>()?;
        Ok(Self::new(grading, row_degrees))
    }

    pub fn size(&self) -> usize {
        self.row_degrees.len()
    }
}

/// Index of `x^m_ṁ` (0-based) in the row-major basis.
pub fn matrix_index(size: usize, m: usize, md: usize) -> usize {
    m * size + md
}

pub fn build_matrix_type(params: &MatrixTypeParams) -> Result<AlgebraSpec, ConstructionError> {
    let n = params.size();
    if n == 0 {
        return Err(ConstructionError::EmptySize);
    }
    let group = params.grading.group();
    for f in &params.row_degrees {
        group.check(f)?;
    }
    if let Some(names) = &params.names {
        if names.len() != n * n {
            return Err(ConstructionError::Count {
                what: "names",
                expected: n * n,
                found: names.len(),
            });
        }
    }
    let f = &params.row_degrees;
    let mut basis = Vec::with_capacity(n * n);
    for m in 0..n {
        for md in 0..n {
            let name = match &params.names {
                Some(names) => names[matrix_index(n, m, md)].clone(),
                None => format!("x[{},{}]", m + 1, md + 1),
            };
            basis.push(BasisElement {
                name,
                degree: group.sub(&f[m], &f[md]),
            });
        }
    }

    let eps = (0..n).map(|m| (matrix_index(n, m, m), CycNum::one()));
    let mut d = Vec::with_capacity(n * n * n);
    for m in 0..n {
        for md in 0..n {
            for a in 0..n {
                d.push((
                    (matrix_index(n, m, md), matrix_index(n, m, a), matrix_index(n, a, md)),
                    CycNum::one(),
                ));
            }
        }
    }
    let mut c = Vec::with_capacity(n * n * n);
    for m in 0..n {
        let minus_two_f = group.scale(-2, &f[m]);
        for (nu, b) in basis.iter().enumerate() {
            let phase = params.grading.phase(&minus_two_f, &b.degree)?;
            c.push(((matrix_index(n, m, m), nu, nu), phase));
        }
    }
    let spec = AlgebraSpec::new(params.grading.clone(), basis, eps, d, c)?;
    if params.verify {
        let report = verify_all(&spec);
        if !report.passed() {
            return Err(ConstructionError::NotVerified(report.failed_axioms()));
        }
    }
    Ok(spec)
}

/// A Lie algebra `g` to extend by a central grouplike.
#[derive(Debug, Clone, PartialEq)]
pub struct AnsatzParams {
    pub grading: Bicharacter,
    pub names: Vec<String>,
    pub degrees: Vec<Degree>,
    /// `c^{ij}_k` of `g`, indices 0-based within `g`.
    pub brackets: BTreeMap<Triple, CycNum>,
    /// Name of the adjoined grouplike, `x0` by default.
    pub unit_name: String,
}

impl AnsatzParams {
    pub fn new(
        grading: Bicharacter,
        names: Vec<String>,
        degrees: Vec<Degree>,
        brackets: BTreeMap<Triple, CycNum>,
    ) -> Result<Self, ConstructionError> {
        if names.len() != degrees.len() {
            return Err(ConstructionError::Count {
                what: "degrees",
                expected: names.len(),
                found: degrees.len(),
            });
        }
        Ok(AnsatzParams {
            grading,
            names,
            degrees,
            brackets,
            unit_name: "x0".to_string(),
        })
    }

    pub fn dim_g(&self) -> usize {
        self.names.len()
    }
}

/// Advisory note: the reduction is stated for gradings by `Z/1` or `Z/2`.
pub fn ansatz_warning(grading: &Bicharacter) -> Option<String> {
    let factors = grading.group().factors();
    let classical = factors.len() == 1 && factors[0] <= 2;
    (!classical).then(|| {
        format!(
            "ansatz over a grading group of order {}: the first condition is restrictive outside Z/1 and Z/2",
            grading.group().order()
        )
    })
}

/// `x^0 ⊕ g` with `x^0` grouplike and acting as the identity; `g` primitive
/// with respect to `x^0`. Basis index 0 is `x^0`, index `i + 1` is `g_i`.
pub fn build_ansatz(params: &AnsatzParams) -> Result<AlgebraSpec, ConstructionError> {
    let k = params.dim_g();
    if params.degrees.len() != k {
        return Err(ConstructionError::Count {
            what: "degrees",
            expected: k,
            found: params.degrees.len(),
        });
    }
    let group = params.grading.group();
    let mut basis = Vec::with_capacity(k + 1);
    basis.push(BasisElement {
        name: params.unit_name.clone(),
        degree: group.zero(),
    });
    for (name, degree) in params.names.iter().zip(&params.degrees) {
        basis.push(BasisElement {
            name: name.clone(),
            degree: degree.clone(),
        });
    }
    let one = CycNum::one;
    let eps = [(0, one())];
    let mut d = Vec::with_capacity(2 * k + 1);
    d.push(((0, 0, 0), one()));
    for i in 1..=k {
        d.push(((i, 0, i), one()));
        d.push(((i, i, 0), one()));
    }
    let mut c = Vec::with_capacity(k + 1 + params.brackets.len());
    for i in 0..=k {
        c.push(((0, i, i), one()));
    }
    for (&(i, j, l), v) in &params.brackets {
        for idx in [i, j, l] {
            if idx >= k {
                return Err(SpecError::IndexOutOfRange {
                    tensor: "c",
                    index: idx,
                    dim: k,
                }
                .into());
            }
        }
        c.push(((i + 1, j + 1, l + 1), v.clone()));
    }
    Ok(AlgebraSpec::new(params.grading.clone(), basis, eps, d, c)?)
}

#[derive(Debug, Clone, PartialEq)]
pub struct JacobiWitness {
    /// `(i, j, k, l)` within `g`.
    pub indices: [usize; 4],
    pub lhs: CycNum,
    pub rhs: CycNum,
}

/// The ansatz conditions evaluated directly on `g`, next to the full check.
#[derive(Debug, Clone, PartialEq)]
pub struct LiesuperReport {
    /// Brackets `c^{ij}_k ≠ 0` with `p(k) ≠ p(i) + p(j)`.
    pub degree_failures: Vec<Triple>,
    /// Pairs with `β(p(i), p(j))² ≠ 1`.
    pub first_failures: Vec<(usize, usize)>,
    /// Failures of
    /// `c^{ij}_a c^{ka}_l = c^{ki}_a c^{aj}_l + β(p(k), p(i)) c^{kj}_a c^{ia}_l`.
    pub second_failures: Vec<JacobiWitness>,
    pub verify_passes: bool,
    pub warning: Option<String>,
}

impl LiesuperReport {
    pub fn first_holds(&self) -> bool {
        self.first_failures.is_empty()
    }

    pub fn second_holds(&self) -> bool {
        self.second_failures.is_empty()
    }

    pub fn direct_holds(&self) -> bool {
        self.degree_failures.is_empty() && self.first_holds() && self.second_holds()
    }

    /// The direct evaluation and the full axiom check agree.
    pub fn agrees(&self) -> bool {
        self.direct_holds() == self.verify_passes
    }
}

pub fn check_liesuper_reduction(params: &AnsatzParams) -> Result<LiesuperReport, ConstructionError> {
    let spec = build_ansatz(params)?;
    let k = params.dim_g();
    let group = params.grading.group();
    let p = &params.degrees;
    let beta = |g: &Degree, h: &Degree| params.grading.phase(g, h);

    let mut degree_failures = Vec::new();
    for (&(i, j, l), v) in &params.brackets {
        if !v.is_zero() && p[l] != group.add(&p[i], &p[j]) {
            degree_failures.push((i, j, l));
        }
    }

    let mut first_failures = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let b = beta(&p[i], &p[j])?;
            if !(&b * &b).is_one() {
                first_failures.push((i, j));
            }
        }
    }

    let c = |i: usize, j: usize, l: usize| params.brackets.get(&(i, j, l)).cloned().unwrap_or_default();
    let mut second_failures = Vec::new();
    for i in 0..k {
        for j in 0..k {
            for kk in 0..k {
                let ph = beta(&p[kk], &p[i])?;
                for l in 0..k {
                    let mut lhs = CycNum::zero();
                    let mut rhs = CycNum::zero();
                    for a in 0..k {
                        lhs += &(&c(i, j, a) * &c(kk, a, l));
                        rhs += &(&c(kk, i, a) * &c(a, j, l));
                        rhs += &(&(&c(kk, j, a) * &c(i, a, l)) * &ph);
                    }
                    if lhs != rhs {
                        second_failures.push(JacobiWitness {
                            indices: [i, j, kk, l],
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
    }

    Ok(LiesuperReport {
        degree_failures,
        first_failures,
        second_failures,
        verify_passes: verify_all(&spec).passed(),
        warning: ansatz_warning(&params.grading),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn matrix_type_shapes() {
        let params = MatrixTypeParams::anyonic(3, &[0, 1]).unwrap();
        let spec = build_matrix_type(&params).unwrap();
        assert_eq!(spec.dim(), 4);
        assert_eq!(spec.basis()[1].name, "x[1,2]");
        assert_eq!(spec.degree(1).coords(), &[2]);
        assert_eq!(spec.degree(2).coords(), &[1]);
        assert_eq!(spec.d().len(), 8);
        assert!(spec.eps_at(3).is_one());
        assert!(spec.eps_at(1).is_zero());
    }

    #[test]
    fn matrix_type_rejects_bad_input() {
        let mut params = MatrixTypeParams::anyonic(3, &[]).unwrap();
        assert_eq!(build_matrix_type(&params), Err(ConstructionError::EmptySize));
        params = MatrixTypeParams::anyonic(3, &[0, 1]).unwrap();
        params.names = Some(vec!["a".into()]);
        assert!(matches!(
            build_matrix_type(&params),
            Err(ConstructionError::Count { what: "names", .. })
        ));
    }

    #[test]
    fn abelian_ansatz_conditions() {
        // Z/4 with p = 2: 2·2·2 ≡ 0 mod 4
        let grading = Bicharacter::anyonic(4).unwrap();
        let d2 = grading.group().degree(&[2]).unwrap();
        let params = AnsatzParams::new(grading, vec!["g".into()], vec![d2], BTreeMap::new()).unwrap();
        let report = check_liesuper_reduction(&params).unwrap();
        assert!(report.direct_holds());
        assert!(report.agrees());
        assert!(report.warning.is_some());
    }
}
