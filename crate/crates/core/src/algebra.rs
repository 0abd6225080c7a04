//! Candidate anyonic Lie algebras given by structure constants.
//!
//! In a homogeneous basis `x^μ` of degrees `p(μ)`:
//!
//! ```text
//! ε(x^μ) = ε^μ,   Δx^μ = d^μ_{νρ} x^ν ⊗ x^ρ,   [x^μ, x^ν] = c^{μν}_ρ x^ρ
//! ```
//!
//! Storage is sparse; zero values are never kept.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclotomic::CycNum;
use crate::graded::{Bicharacter, Degree, GradingError};

/// Index triple `(upper, lower, lower)` for `d` and `(upper, upper, lower)` for `c`.
pub type Triple = (usize, usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecError {
    EmptyBasis,
    DuplicateName(String),
    Degree { basis: usize, source: GradingError },
    /// `tensor` is one of `eps`, `d`, `c`.
    IndexOutOfRange { tensor: &'static str, index: usize, dim: usize },
    DuplicateEntry { tensor: &'static str, indices: Vec<usize> },
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::EmptyBasis => write!(f, "basis must contain at least one element"),
            SpecError::DuplicateName(n) => write!(f, "basis name {n:?} used twice"),
            SpecError::Degree { basis, source } => {
                write!(f, "degree of basis element {basis}: {source}")
            }
            SpecError::IndexOutOfRange { tensor, index, dim } => {
                write!(f, "{tensor} index {index} out of range for dimension {dim}")
            }
            SpecError::DuplicateEntry { tensor, indices } => {
                write!(f, "{tensor} entry {indices:?} given twice")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SpecError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub name: String,
    pub degree: Degree,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraSpec {
    grading: Bicharacter,
    basis: Vec<BasisElement>,
    eps: BTreeMap<usize, CycNum>,
    d: BTreeMap<Triple, CycNum>,
    c: BTreeMap<Triple, CycNum>,
}

impl AlgebraSpec {
    /// Builds a spec, checking names, degrees and index ranges. Zero values
    /// are dropped; a repeated index is an error.
    pub fn new(
        grading: Bicharacter,
        basis: Vec<BasisElement>,
        eps: impl IntoIterator<Item = (usize, CycNum)>,
        d: impl IntoIterator<Item = (Triple, CycNum)>,
        c: impl IntoIterator<Item = (Triple, CycNum)>,
    ) -> Result<Self, SpecError> {
        if basis.is_empty() {
            return Err(SpecError::EmptyBasis);
        }
        let mut names = BTreeSet::new();
        for (i, b) in basis.iter().enumerate() {
            if !names.insert(b.name.as_str()) {
                return Err(SpecError::DuplicateName(b.name.clone()));
            }
            grading
                .group()
                .check(&b.degree)
                .map_err(|source| SpecError::Degree { basis: i, source })?;
        }
        let dim = basis.len();
        let check = |tensor: &'static str, index: usize| {
            if index < dim {
                Ok(())
            } else {
                Err(SpecError::IndexOutOfRange { tensor, index, dim })
            }
        };

        let mut eps_map = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for (mu, v) in eps {
            check("eps", mu)?;
            if !seen.insert(mu) {
                return Err(SpecError::DuplicateEntry {
                    tensor: "eps",
                    indices: vec![mu],
                });
            }
            if !v.is_zero() {
                eps_map.insert(mu, v);
            }
        }
        let triples = |tensor: &'static str,
                           entries: &mut dyn Iterator<Item = (Triple, CycNum)>|
         -> Result<BTreeMap<Triple, CycNum>, SpecError> {
            let mut map = BTreeMap::new();
            let mut seen = BTreeSet::new();
            for ((a, b, c), v) in entries {
                check(tensor, a)?;
                check(tensor, b)?;
                check(tensor, c)?;
                if !seen.insert((a, b, c)) {
                    return Err(SpecError::DuplicateEntry {
                        tensor,
                        indices: vec![a, b, c],
                    });
                }
                if !v.is_zero() {
                    map.insert((a, b, c), v);
                }
            }
            Ok(map)
        };
        let d_map = triples("d", &mut d.into_iter())?;
        let c_map = triples("c", &mut c.into_iter())?;
        Ok(AlgebraSpec {
            grading,
            basis,
            eps: eps_map,
            d: d_map,
            c: c_map,
        })
    }

    pub fn grading(&self) -> &Bicharacter {
        &self.grading
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn degree(&self, mu: usize) -> &Degree {
        &self.basis[mu].degree
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    pub fn eps(&self) -> &BTreeMap<usize, CycNum> {
        &self.eps
    }

    pub fn d(&self) -> &BTreeMap<Triple, CycNum> {
        &self.d
    }

    pub fn c(&self) -> &BTreeMap<Triple, CycNum> {
        &self.c
    }

    pub fn eps_at(&self, mu: usize) -> CycNum {
        self.eps.get(&mu).cloned().unwrap_or_default()
    }

    pub fn d_at(&self, t: Triple) -> CycNum {
        self.d.get(&t).cloned().unwrap_or_default()
    }

    pub fn c_at(&self, t: Triple) -> CycNum {
        self.c.get(&t).cloned().unwrap_or_default()
    }

    fn range(&self, tensor: &'static str, index: usize) -> Result<(), SpecError> {
        if index < self.dim() {
            Ok(())
        } else {
            Err(SpecError::IndexOutOfRange {
                tensor,
                index,
                dim: self.dim(),
            })
        }
    }

    /// Overwrites `ε^μ`; a zero value removes the entry.
    pub fn set_eps(&mut self, mu: usize, v: CycNum) -> Result<(), SpecError> {
        self.range("eps", mu)?;
        if v.is_zero() {
            self.eps.remove(&mu);
        } else {
            self.eps.insert(mu, v);
        }
        Ok(())
    }

    pub fn set_d(&mut self, t: Triple, v: CycNum) -> Result<(), SpecError> {
        for i in [t.0, t.1, t.2] {
            self.range("d", i)?;
        }
        if v.is_zero() {
            self.d.remove(&t);
        } else {
            self.d.insert(t, v);
        }
        Ok(())
    }

    pub fn set_c(&mut self, t: Triple, v: CycNum) -> Result<(), SpecError> {
        for i in [t.0, t.1, t.2] {
            self.range("c", i)?;
        }
        if v.is_zero() {
            self.c.remove(&t);
        } else {
            self.c.insert(t, v);
        }
        Ok(())
    }

    /// `d^μ_{νρ}` grouped by `μ`.
    pub(crate) fn d_rows(&self) -> Vec<Vec<(usize, usize, CycNum)>> {
        let mut rows = vec![Vec::new(); self.dim()];
        for (&(mu, nu, rho), v) in &self.d {
            rows[mu].push((nu, rho, v.clone()));
        }
        rows
    }

    /// `c^{μν}_ρ` grouped by `(μ, ν)`, flattened as `μ·dim + ν`.
    pub(crate) fn c_rows(&self) -> Vec<Vec<(usize, CycNum)>> {
        let dim = self.dim();
        let mut rows = vec![Vec::new(); dim * dim];
        for (&(mu, nu, rho), v) in &self.c {
            rows[mu * dim + nu].push((rho, v.clone()));
        }
        rows
    }

    /// `β(p(μ), p(ν))` for every ordered pair of basis indices.
    pub fn phase_table(&self) -> PhaseTable {
        let dim = self.dim();
        let mut values = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                values.push(
                    self.grading
                        .phase(self.degree(i), self.degree(j))
                        .expect("basis degrees checked on construction"),
                );
            }
        }
        PhaseTable { dim, values }
    }

    /// Degree of a word, the sum of its letters' degrees.
    pub fn word_degree(&self, word: &[usize]) -> Degree {
        let group = self.grading.group();
        word.iter()
            .fold(group.zero(), |acc, &mu| group.add(&acc, self.degree(mu)))
    }

    pub fn counit(&self, x: &Element) -> Result<CycNum, EvalError> {
        self.check_element(x)?;
        let mut acc = CycNum::zero();
        for (mu, a) in &x.coeffs {
            if let Some(e) = self.eps.get(mu) {
                acc += &(a * e);
            }
        }
        Ok(acc)
    }

    pub fn delta(&self, x: &Element) -> Result<Tensor2, EvalError> {
        self.check_element(x)?;
        let rows = self.d_rows();
        let mut out = Tensor2::new();
        for (&mu, a) in &x.coeffs {
            for (nu, rho, v) in &rows[mu] {
                accumulate(&mut out, (*nu, *rho), a * v);
            }
        }
        Ok(out)
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element, EvalError> {
        self.check_element(x)?;
        self.check_element(y)?;
        let rows = self.c_rows();
        let dim = self.dim();
        let mut out = BTreeMap::new();
        for (&mu, a) in &x.coeffs {
            for (&nu, b) in &y.coeffs {
                let ab = a * b;
                for (rho, v) in &rows[mu * dim + nu] {
                    accumulate(&mut out, *rho, &ab * v);
                }
            }
        }
        Ok(Element { coeffs: out })
    }

    fn check_element(&self, x: &Element) -> Result<(), EvalError> {
        match x.coeffs.keys().next_back() {
            Some(&i) if i >= self.dim() => Err(EvalError::DimensionMismatch {
                index: i,
                dim: self.dim(),
            }),
            _ => Ok(()),
        }
    }

    /// Common degree of the supported basis vectors.
    pub fn homogeneity(&self, x: &Element) -> Result<Homogeneity, EvalError> {
        self.check_element(x)?;
        let mut degrees = x.coeffs.keys().map(|&mu| self.degree(mu));
        let Some(first) = degrees.next() else {
            return Ok(Homogeneity::Zero);
        };
        if degrees.all(|d| d == first) {
            Ok(Homogeneity::Degree(first.clone()))
        } else {
            Ok(Homogeneity::Mixed)
        }
    }
}

/// Dense table of braiding phases between basis degrees.
#[derive(Debug, Clone)]
pub struct PhaseTable {
    dim: usize,
    values: Vec<CycNum>,
}

impl PhaseTable {
    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.values[i * self.dim + j]
    }
}

pub(crate) fn accumulate<K: Ord>(map: &mut BTreeMap<K, CycNum>, key: K, v: CycNum) {
    if v.is_zero() {
        return;
    }
    match map.entry(key) {
        alloc::collections::btree_map::Entry::Vacant(e) => {
            e.insert(v);
        }
        alloc::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &v;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    DimensionMismatch { index: usize, dim: usize },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::DimensionMismatch { index, dim } => {
                write!(f, "basis index {index} out of range for dimension {dim}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for EvalError {}

/// A vector of the algebra, sparse in the basis.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Element {
    coeffs: BTreeMap<usize, CycNum>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(mu: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(mu, CycNum::one());
        Element { coeffs }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, CycNum)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (mu, v) in terms {
            accumulate(&mut coeffs, mu, v);
        }
        Element { coeffs }
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, CycNum> {
        &self.coeffs
    }

    pub fn coeff(&self, mu: usize) -> CycNum {
        self.coeffs.get(&mu).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, s: &CycNum) -> Self {
        Element::from_terms(self.coeffs.iter().map(|(&mu, v)| (mu, v * s)))
    }

    pub fn add(&self, other: &Element) -> Self {
        Element::from_terms(
            self.coeffs
                .iter()
                .chain(other.coeffs.iter())
                .map(|(&mu, v)| (mu, v.clone())),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Degree(Degree),
    Mixed,
}

/// Rank-2 sparse tensor `Σ t_{νρ} x^ν ⊗ x^ρ`.
pub type Tensor2 = BTreeMap<(usize, usize), CycNum>;
