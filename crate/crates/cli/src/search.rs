//! Brute-force enumeration of small anyonic Lie algebras.
//!
//! Every assignment of alphabet values to the structure tensors is tried and
//! kept if it passes all axiom checks. Entries that would violate the degree
//! condition are fixed to zero up front (the grading check rejects any
//! candidate where they are nonzero, so the solution set is unchanged); both
//! counts are reported. Solutions are not reduced modulo basis rescaling or
//! permutation, so equivalent algebras appear more than once.

use anyonic_core::algebra::Triple;
use anyonic_core::lie_axioms::is_anyonic_lie_algebra;
use anyonic_core::{AlgebraSpec, BasisElement, Bicharacter, CycNum, Degree};
use rayon::prelude::*;
use thiserror::Error;

pub const DEFAULT_CAP: u128 = 10_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("dimension must be 1 or 2, got {0}")]
    Dimension(usize),
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("expected {expected} fixed degrees, got {found}")]
    DegreeCount { expected: usize, found: usize },
    #[error("{count} candidates exceed the cap of {cap}; fix degrees, shrink the alphabet or raise the cap")]
    CapExceeded { count: u128, cap: u128 },
}

#[derive(Debug, Clone)]
pub struct SearchSpace {
    pub grading: Bicharacter,
    pub dim: usize,
    /// Fixed basis degrees; all assignments are enumerated when absent.
    pub degrees: Option<Vec<Degree>>,
    pub alphabet: Vec<CycNum>,
    pub require_nonzero_delta: bool,
    /// Only assignments where every basis element has nonzero degree.
    pub require_nonzero_degree: bool,
    /// Fix grading-incompatible entries to zero.
    pub prune: bool,
}

/// `{0, 1, -1} ∪ {ζ_n^k}` without repeats.
pub fn default_alphabet(n: u32) -> Vec<CycNum> {
    let mut out = vec![CycNum::zero(), CycNum::one(), CycNum::from_integer(-1)];
    for k in 0..n {
        let z = CycNum::root_of_unity(n, i64::from(k)).expect("n >= 1");
        if !out.contains(&z) {
            out.push(z);
        }
    }
    out
}

/// Candidates sharing one degree assignment.
#[derive(Debug, Clone)]
pub struct Block {
    pub degrees: Vec<Degree>,
    eps: Vec<usize>,
    d: Vec<Triple>,
    c: Vec<Triple>,
}

impl Block {
    fn slots(&self) -> usize {
        self.eps.len() + self.d.len() + self.c.len()
    }

    pub fn count(&self, alphabet: usize) -> u128 {
        (alphabet as u128).saturating_pow(self.slots() as u32)
    }

    /// Decodes candidate `index` as mixed-radix digits over the slots,
    /// counit entries first, then coproduct, then bracket.
    pub fn candidate(&self, space: &SearchSpace, index: u64) -> AlgebraSpec {
        let base = space.alphabet.len() as u64;
        let mut rest = index;
        let mut digit = || {
            let v = space.alphabet[(rest % base) as usize].clone();
            rest /= base;
            v
        };
        let eps: Vec<_> = self.eps.iter().map(|&mu| (mu, digit())).collect();
        let d: Vec<_> = self.d.iter().map(|&t| (t, digit())).collect();
        let c: Vec<_> = self.c.iter().map(|&t| (t, digit())).collect();
        let basis = self
            .degrees
            .iter()
            .enumerate()
            .map(|(i, g)| BasisElement {
                name: format!("x{i}"),
                degree: g.clone(),
            })
            .collect();
        AlgebraSpec::new(space.grading.clone(), basis, eps, d, c).expect("indices in range")
    }
}

impl SearchSpace {
    fn check(&self) -> Result<(), SearchError> {
        if !(1..=2).contains(&self.dim) {
            return Err(SearchError::Dimension(self.dim));
        }
        if self.alphabet.is_empty() {
            return Err(SearchError::EmptyAlphabet);
        }
        if let Some(d) = &self.degrees {
            if d.len() != self.dim {
                return Err(SearchError::DegreeCount {
                    expected: self.dim,
                    found: d.len(),
                });
            }
        }
        Ok(())
    }

    pub fn degree_assignments(&self) -> Vec<Vec<Degree>> {
        let group = self.grading.group();
        let all: Vec<Vec<Degree>> = match &self.degrees {
            Some(d) => vec![d.clone()],
            None => {
                let elements = group.elements();
                let mut out: Vec<Vec<Degree>> = vec![Vec::new()];
                for _ in 0..self.dim {
                    out = out
                        .into_iter()
                        .flat_map(|prefix| {
                            elements.iter().map(move |g| {
                                let mut v = prefix.clone();
                                v.push(g.clone());
                                v
                            })
                        })
                        .collect();
                }
                out
            }
        };
        let zero = group.zero();
        all.into_iter()
            .filter(|a| !self.require_nonzero_degree || a.iter().all(|g| *g != zero))
            .collect()
    }

    fn block(&self, degrees: Vec<Degree>, prune: bool) -> Block {
        let group = self.grading.group();
        let n = self.dim;
        let zero = group.zero();
        let mut eps = Vec::new();
        let mut d = Vec::new();
        let mut c = Vec::new();
        for mu in 0..n {
            if !prune || degrees[mu] == zero {
                eps.push(mu);
            }
        }
        for a in 0..n {
            for b in 0..n {
                for e in 0..n {
                    if !prune || degrees[a] == group.add(&degrees[b], &degrees[e]) {
                        d.push((a, b, e));
                    }
                    if !prune || degrees[e] == group.add(&degrees[a], &degrees[b]) {
                        c.push((a, b, e));
                    }
                }
            }
        }
        Block { degrees, eps, d, c }
    }

    pub fn blocks(&self) -> Vec<Block> {
        self.degree_assignments()
            .into_iter()
            .map(|a| self.block(a, self.prune))
            .collect()
    }

    /// Candidates without grading pruning.
    pub fn raw_count(&self) -> u128 {
        self.degree_assignments()
            .into_iter()
            .map(|a| self.block(a, false).count(self.alphabet.len()))
            .fold(0u128, u128::saturating_add)
    }

    pub fn candidate_count(&self) -> u128 {
        self.blocks()
            .iter()
            .map(|b| b.count(self.alphabet.len()))
            .fold(0u128, u128::saturating_add)
    }
}

#[derive(Debug, Clone)]
pub struct Solution {
    pub block: usize,
    pub index: u64,
    pub spec: AlgebraSpec,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub raw_count: u128,
    pub candidates: u128,
    pub solutions: Vec<Solution>,
}

fn accept(space: &SearchSpace, spec: &AlgebraSpec) -> bool {
    (!space.require_nonzero_delta || !spec.d().is_empty()) && is_anyonic_lie_algebra(spec)
}

/// Runs the search. Output order is block order, then candidate index,
/// whether or not the work is spread over threads.
pub fn run(space: &SearchSpace, cap: u128, parallel: bool) -> Result<SearchOutcome, SearchError> {
    space.check()?;
    let candidates = space.candidate_count();
    if candidates > cap {
        return Err(SearchError::CapExceeded { count: candidates, cap });
    }
    let mut solutions = Vec::new();
    for (bi, block) in space.blocks().iter().enumerate() {
        let count = u64::try_from(block.count(space.alphabet.len())).expect("below cap");
        let test = |i: u64| {
            let spec = block.candidate(space, i);
            accept(space, &spec).then_some(Solution {
                block: bi,
                index: i,
                spec,
            })
        };
        if parallel {
            solutions.extend((0..count).into_par_iter().filter_map(test).collect::<Vec<_>>());
        } else {
            solutions.extend((0..count).filter_map(test));
        }
    }
    Ok(SearchOutcome {
        raw_count: space.raw_count(),
        candidates,
        solutions,
    })
}
