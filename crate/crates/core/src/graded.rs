//! Grading groups, degrees and braiding bicharacters.
//!
//! A grading group is `Z/n1 × … × Z/nk`. A bicharacter on it is given either
//! by an integer matrix `B`, in which case
//! `β(e_i, e_j) = ζ_{gcd(n_i, n_j)}^{B_ij}` and bimultiplicativity holds by
//! construction, or by a raw table of values that must be validated.
//! The anyonic braiding on `Z/n` is the matrix `[1]`: `β(a, b) = ζ_n^{ab}`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::cyclotomic::CycNum;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GradingError {
    EmptyGroup,
    ZeroFactor,
    ArityMismatch { expected: usize, found: usize },
    MatrixShape { expected: usize },
    /// A raw table is missing the value for this pair.
    MissingTableEntry { g: Degree, h: Degree },
}

impl fmt::Display for GradingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradingError::EmptyGroup => write!(f, "grading group needs at least one factor"),
            GradingError::ZeroFactor => write!(f, "grading group factors must be positive"),
            GradingError::ArityMismatch { expected, found } => write!(
                f,
                "degree has {found} coordinates but the group has {expected} factors"
            ),
            GradingError::MatrixShape { expected } => {
                write!(f, "bicharacter matrix must be {expected}x{expected}")
            }
            GradingError::MissingTableEntry { g, h } => {
                write!(f, "bicharacter table has no value for ({g}, {h})")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GradingError {}

/// A degree, stored reduced modulo the group factors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(Vec<u32>);

impl Degree {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingGroup {
    factors: Vec<u32>,
}

impl GradingGroup {
    pub fn new(factors: Vec<u32>) -> Result<Self, GradingError> {
        if factors.is_empty() {
            return Err(GradingError::EmptyGroup);
        }
        if factors.contains(&0) {
            return Err(GradingError::ZeroFactor);
        }
        Ok(GradingGroup { factors })
    }

    /// `Z/n`.
    pub fn cyclic(n: u32) -> Result<Self, GradingError> {
        Self::new(vec![n])
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// lcm of the factors.
    pub fn exponent(&self) -> u32 {
        self.factors.iter().fold(1, |acc, n| acc.lcm(n))
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().map(|&n| u64::from(n)).product()
    }

    /// Reduces arbitrary integer coordinates into a degree.
    pub fn degree(&self, coords: &[i64]) -> Result<Degree, GradingError> {
        if coords.len() != self.factors.len() {
            return Err(GradingError::ArityMismatch {
                expected: self.factors.len(),
                found: coords.len(),
            });
        }
        Ok(Degree(
            coords
                .iter()
                .zip(&self.factors)
                .map(|(&c, &n)| c.rem_euclid(i64::from(n)) as u32)
                .collect(),
        ))
    }

    pub fn check(&self, g: &Degree) -> Result<(), GradingError> {
        if g.0.len() != self.factors.len() {
            return Err(GradingError::ArityMismatch {
                expected: self.factors.len(),
                found: g.0.len(),
            });
        }
        Ok(())
    }

    pub fn zero(&self) -> Degree {
        Degree(vec![0; self.factors.len()])
    }

    pub fn add(&self, g: &Degree, h: &Degree) -> Degree {
        Degree(
            g.0.iter()
                .zip(&h.0)
                .zip(&self.factors)
                .map(|((&a, &b), &n)| ((u64::from(a) + u64::from(b)) % u64::from(n)) as u32)
                .collect(),
        )
    }

    pub fn neg(&self, g: &Degree) -> Degree {
        Degree(
            g.0.iter()
                .zip(&self.factors)
                .map(|(&a, &n)| (n - a) % n)
                .collect(),
        )
    }

    pub fn sub(&self, g: &Degree, h: &Degree) -> Degree {
        self.add(g, &self.neg(h))
    }

    /// `k·g` for an integer `k`.
    pub fn scale(&self, k: i64, g: &Degree) -> Degree {
        Degree(
            g.0.iter()
                .zip(&self.factors)
                .map(|(&a, &n)| (k * i64::from(a)).rem_euclid(i64::from(n)) as u32)
                .collect(),
        )
    }

    /// Standard generators `e_1, …, e_k`.
    pub fn generators(&self) -> Vec<Degree> {
        (0..self.rank())
            .map(|i| {
                let mut v = vec![0; self.rank()];
                v[i] = 1 % self.factors[i];
                Degree(v)
            })
            .collect()
    }

    /// Every element, in lexicographic order of coordinates.
    pub fn elements(&self) -> Vec<Degree> {
        let mut out = vec![self.zero()];
        for (i, &n) in self.factors.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * n as usize);
            for g in &out {
                for a in 0..n {
                    let mut h = g.clone();
                    h.0[i] = a;
                    next.push(h);
                }
            }
            out = next;
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
enum BicharacterKind {
    /// `β(e_i, e_j) = ζ_{gcd(n_i, n_j)}^{B_ij}`.
    Matrix(Vec<Vec<i64>>),
    /// Explicit values for every pair of group elements.
    Table(BTreeMap<(Degree, Degree), CycNum>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Bicharacter {
    group: GradingGroup,
    kind: BicharacterKind,
}

impl Bicharacter {
    pub fn from_matrix(group: GradingGroup, matrix: Vec<Vec<i64>>) -> Result<Self, GradingError> {
        let k = group.rank();
        if matrix.len() != k || matrix.iter().any(|row| row.len() != k) {
            return Err(GradingError::MatrixShape { expected: k });
        }
        Ok(Bicharacter {
            group,
            kind: BicharacterKind::Matrix(matrix),
        })
    }

    /// The anyonic braiding `β(a, b) = ζ_n^{ab}` on `Z/n`.
    pub fn anyonic(n: u32) -> Result<Self, GradingError> {
        Self::from_matrix(GradingGroup::cyclic(n)?, vec![vec![1]])
    }

    /// `β ≡ 1`.
    pub fn trivial(group: GradingGroup) -> Self {
        let k = group.rank();
        Bicharacter {
            group,
            kind: BicharacterKind::Matrix(vec![vec![0; k]; k]),
        }
    }

    /// Raw value table, one entry per ordered pair of group elements. Nothing
    /// is assumed about it; run [`Bicharacter::validate`] before use.
    pub fn from_table(
        group: GradingGroup,
        table: BTreeMap<(Degree, Degree), CycNum>,
    ) -> Result<Self, GradingError> {
        let elements = group.elements();
        for g in &elements {
            for h in &elements {
                if !table.contains_key(&(g.clone(), h.clone())) {
                    return Err(GradingError::MissingTableEntry {
                        g: g.clone(),
                        h: h.clone(),
                    });
                }
            }
        }
        Ok(Bicharacter {
            group,
            kind: BicharacterKind::Table(table),
        })
    }

    /// Tabulates a matrix bicharacter; used to build raw tables for testing.
    pub fn to_table(&self) -> BTreeMap<(Degree, Degree), CycNum> {
        let elements = self.group.elements();
        let mut out = BTreeMap::new();
        for g in &elements {
            for h in &elements {
                let v = self.phase(g, h).expect("elements of own group");
                out.insert((g.clone(), h.clone()), v);
            }
        }
        out
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    /// The defining matrix, when the bicharacter was given as one.
    pub fn matrix(&self) -> Option<&[Vec<i64>]> {
        match &self.kind {
            BicharacterKind::Matrix(m) => Some(m),
            BicharacterKind::Table(_) => None,
        }
    }

    /// True for the standard anyonic braiding on a cyclic group.
    pub fn is_anyonic(&self) -> bool {
        self.group.rank() == 1
            && match &self.kind {
                BicharacterKind::Matrix(m) => {
                    let n = i64::from(self.group.factors[0]);
                    m[0][0].rem_euclid(n) == 1 % n
                }
                BicharacterKind::Table(_) => false,
            }
    }

    /// Exponent `k` with `β(g, h) = ζ_E^k`, `E` the group exponent. Only
    /// available for matrix bicharacters.
    pub fn phase_exponent(&self, g: &Degree, h: &Degree) -> Option<u32> {
        let BicharacterKind::Matrix(m) = &self.kind else {
            return None;
        };
        let e = u64::from(self.group.exponent());
        let f = &self.group.factors;
        let mut acc: u64 = 0;
        for i in 0..f.len() {
            for j in 0..f.len() {
                let b = m[i][j].rem_euclid(e as i64) as u64;
                if b == 0 || g.0[i] == 0 || h.0[j] == 0 {
                    continue;
                }
                let scale = e / u64::from(f[i].gcd(&f[j]));
                let term = (u64::from(g.0[i]) * u64::from(h.0[j])) % e;
                acc = (acc + term * b % e * scale) % e;
            }
        }
        Some(acc as u32)
    }

    /// `β(g, h)`.
    pub fn phase(&self, g: &Degree, h: &Degree) -> Result<CycNum, GradingError> {
        self.group.check(g)?;
        self.group.check(h)?;
        match &self.kind {
            BicharacterKind::Matrix(_) => {
                let k = self.phase_exponent(g, h).expect("matrix bicharacter");
                Ok(CycNum::root_of_unity(self.group.exponent(), i64::from(k))
                    .expect("group exponent is positive"))
            }
            BicharacterKind::Table(t) => Ok(t
                .get(&(g.clone(), h.clone()))
                .cloned()
                .expect("table covers the whole group")),
        }
    }

    /// `β(g,h)β(h,g) = 1` on all pairs of standard generators.
    pub fn is_skew(&self) -> bool {
        let gens = self.group.generators();
        gens.iter().all(|g| {
            gens.iter().all(|h| {
                let a = self.phase(g, h).expect("own generators");
                let b = self.phase(h, g).expect("own generators");
                (&a * &b).is_one()
            })
        })
    }

    /// Checks normalization and bimultiplicativity. For a matrix both hold by
    /// construction and the check is a re-confirmation; for a raw table it is
    /// the only guarantee.
    pub fn validate(&self) -> BicharacterReport {
        let elements = self.group.elements();
        let gens = self.group.generators();
        let zero = self.group.zero();
        let phase = |g: &Degree, h: &Degree| self.phase(g, h).expect("own elements");
        for g in &elements {
            for (a, b) in [(&zero, g), (g, &zero)] {
                let v = phase(a, b);
                if !v.is_one() {
                    return BicharacterReport::Fail(BicharacterWitness {
                        law: BicharacterLaw::Normalization,
                        g: a.clone(),
                        h: b.clone(),
                        generator: zero.clone(),
                        lhs: v,
                        rhs: CycNum::one(),
                    });
                }
            }
        }
        for g in &elements {
            for h in &elements {
                for e in &gens {
                    let lhs = phase(&self.group.add(g, e), h);
                    let rhs = &phase(g, h) * &phase(e, h);
                    if lhs != rhs {
                        return BicharacterReport::Fail(BicharacterWitness {
                            law: BicharacterLaw::LeftMultiplicative,
                            g: g.clone(),
                            h: h.clone(),
                            generator: e.clone(),
                            lhs,
                            rhs,
                        });
                    }
                    let lhs = phase(g, &self.group.add(h, e));
                    let rhs = &phase(g, h) * &phase(g, e);
                    if lhs != rhs {
                        return BicharacterReport::Fail(BicharacterWitness {
                            law: BicharacterLaw::RightMultiplicative,
                            g: g.clone(),
                            h: h.clone(),
                            generator: e.clone(),
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
        BicharacterReport::Pass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BicharacterLaw {
    Normalization,
    /// `β(g+e, h) = β(g, h) β(e, h)`
    LeftMultiplicative,
    /// `β(g, h+e) = β(g, h) β(g, e)`
    RightMultiplicative,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BicharacterWitness {
    pub law: BicharacterLaw,
    pub g: Degree,
    pub h: Degree,
    /// The generator `e` used in the multiplicativity test (zero for
    /// normalization failures).
    pub generator: Degree,
    pub lhs: CycNum,
    pub rhs: CycNum,
}

#[derive(Debug, Clone, PartialEq)]
pub enum BicharacterReport {
    Pass,
    Fail(BicharacterWitness),
}

impl BicharacterReport {
    pub fn passed(&self) -> bool {
        matches!(self, BicharacterReport::Pass)
    }
}

/// Group, degree assignment target and braiding, bundled.
pub type GradingContext = Bicharacter;
