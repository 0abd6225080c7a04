//! The enveloping algebra `U(L)` of an anyonic Lie algebra.
//!
//! `U(L)` is generated by the basis of `L` subject to one quadratic relation
//! per ordered pair of generators,
//!
//! ```text
//! x^μ x^ν = Σ β(p(β), p(ν)) d^μ_{αβ} c^{αν}_γ x^γ x^β
//! ```
//!
//! The relations are oriented into a rewrite system over a degree-compatible
//! monomial order and closed in degree two: every linear consequence of the
//! relations among quadratic words is found, which is where vanishing
//! products (`x^μ x^ν = 0`) and nilpotent generators come from. Normal forms
//! are computed by leftmost rewriting; uniqueness up to a chosen word length
//! is checked separately by [`RewriteSystem::check_local_confluence`].
//!
//! The coproduct extends to words as a braided algebra map into
//! `U(L) ⊗ U(L)` with `(u ⊗ v)(w ⊗ z) = β(|v|, |w|) uw ⊗ vz`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::algebra::{accumulate, AlgebraSpec};
use crate::cyclotomic::CycNum;
use crate::lie_axioms::{verify_all, Axiom};

pub type Word = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnvelopeError {
    /// The spec failed these axioms and no override was given.
    Unverified { failed: Vec<Axiom> },
    /// The relation for this ordered pair has a term that is neither the
    /// swapped pair nor strictly below it.
    UnsupportedShape { pair: (usize, usize) },
    /// The generator order is not a permutation of `0..dim`.
    BadOrder,
    /// A rule's right side is not strictly below its left side.
    NotDescending { lhs: (usize, usize) },
    IndexOutOfRange { index: usize, dim: usize },
    /// The element used for a quotient normalizes to a constant other than 1,
    /// or the quotient collapses every generator.
    DegenerateQuotient,
}

impl fmt::Display for EnvelopeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnvelopeError::Unverified { failed } => {
                write!(f, "spec fails axioms:")?;
                for a in failed {
                    write!(f, " {a}")?;
                }
                write!(f, " (override with force)")
            }
            EnvelopeError::UnsupportedShape { pair } => write!(
                f,
                "unsupported relation shape for pair ({}, {}): only quasi-commutation plus lower terms is handled",
                pair.0, pair.1
            ),
            EnvelopeError::BadOrder => write!(f, "generator order must be a permutation of the basis"),
            EnvelopeError::NotDescending { lhs } => {
                write!(f, "rule for ({}, {}) does not descend in the monomial order", lhs.0, lhs.1)
            }
            EnvelopeError::IndexOutOfRange { index, dim } => {
                write!(f, "generator {index} out of range for dimension {dim}")
            }
            EnvelopeError::DegenerateQuotient => write!(f, "quotient is degenerate"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for EnvelopeError {}

/// Noncommutative polynomial: words over generator indices with exact
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Poly {
    terms: BTreeMap<Word, CycNum>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Vec::new())
    }

    pub fn word(w: Word) -> Self {
        Self::monomial(w, CycNum::one())
    }

    pub fn monomial(w: Word, c: CycNum) -> Self {
        let mut p = Poly::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, CycNum)>) -> Self {
        let mut p = Poly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<Word, CycNum> {
        &self.terms
    }

    pub fn coeff(&self, w: &[usize]) -> CycNum {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: CycNum) {
        accumulate(&mut self.terms, w, c);
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&CycNum::from_integer(-1)))
    }

    pub fn scale(&self, s: &CycNum) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), c * s)))
    }

    /// Concatenation product in the free algebra.
    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, a * b);
            }
        }
        out
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }
}

/// One relation `x^μ x^ν = Σ coeff · x^γ x^β`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadRelation {
    pub lhs: (usize, usize),
    pub rhs: BTreeMap<(usize, usize), CycNum>,
}

impl QuadRelation {
    /// `lhs - rhs` as a polynomial (the relation reads `as_poly() = 0`).
    pub fn as_poly(&self) -> Poly {
        let mut p = Poly::word(vec![self.lhs.0, self.lhs.1]);
        for (&(g, b), c) in &self.rhs {
            p.add_term(vec![g, b], -c);
        }
        p
    }
}

/// Quadratic relations of `U(L)`, one per ordered pair in lexicographic
/// order. Refuses unverified specs unless `force` is set.
pub fn generate_relations(a: &AlgebraSpec, force: bool) -> Result<Vec<QuadRelation>, EnvelopeError> {
    if !force {
        let report = verify_all(a);
        if !report.passed() {
            return Err(EnvelopeError::Unverified {
                failed: report.failed_axioms(),
            });
        }
    }
    let dim = a.dim();
    let d_rows = a.d_rows();
    let c_rows = a.c_rows();
    let phase = a.phase_table();
    let mut out = Vec::with_capacity(dim * dim);
    for mu in 0..dim {
        for nu in 0..dim {
            let mut rhs = BTreeMap::new();
            for (alpha, beta, d) in &d_rows[mu] {
                let base = d * phase.get(*beta, nu);
                for (gamma, c) in &c_rows[alpha * dim + nu] {
                    accumulate(&mut rhs, (*gamma, *beta), &base * c);
                }
            }
            out.push(QuadRelation { lhs: (mu, nu), rhs });
        }
    }
    Ok(out)
}

/// Weighted degree-lexicographic order on words: compare length, then total
/// weight, then letters by their rank in the generator order. It is
/// compatible with concatenation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    rank: Vec<usize>,
    weight: Vec<u32>,
}

impl MonomialOrder {
    /// `order` lists generators from smallest to largest.
    pub fn new(order: &[usize], weight: Vec<u32>) -> Result<Self, EnvelopeError> {
        let dim = order.len();
        if weight.len() != dim {
            return Err(EnvelopeError::BadOrder);
        }
        let mut rank = vec![usize::MAX; dim];
        for (pos, &g) in order.iter().enumerate() {
            if g >= dim || rank[g] != usize::MAX {
                return Err(EnvelopeError::BadOrder);
            }
            rank[g] = pos;
        }
        Ok(MonomialOrder { rank, weight })
    }

    /// Basis order with unit weights.
    pub fn standard(dim: usize) -> Self {
        MonomialOrder {
            rank: (0..dim).collect(),
            weight: vec![1; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.rank.len()
    }

    /// Generators from smallest to largest.
    pub fn order(&self) -> Vec<usize> {
        let mut out = vec![0; self.rank.len()];
        for (g, &r) in self.rank.iter().enumerate() {
            out[r] = g;
        }
        out
    }

    pub fn weights(&self) -> &[u32] {
        &self.weight
    }

    pub fn cmp(&self, a: &[usize], b: &[usize]) -> Ordering {
        let wt = |w: &[usize]| w.iter().map(|&g| u64::from(self.weight[g])).sum::<u64>();
        a.len()
            .cmp(&b.len())
            .then_with(|| wt(a).cmp(&wt(b)))
            .then_with(|| {
                a.iter()
                    .map(|&g| self.rank[g])
                    .cmp(b.iter().map(|&g| self.rank[g]))
            })
    }
}

/// Oriented quadratic rules `x^μ x^ν → Σ smaller words`, closed in degree two.
#[derive(Debug, Clone, PartialEq)]
pub struct RewriteSystem {
    order: MonomialOrder,
    rules: BTreeMap<(usize, usize), Poly>,
}

/// Generators central in the presentation: every relation touching them is
/// plain commutation with coefficient 1.
fn presentation_central(rels: &[QuadRelation], dim: usize) -> Vec<bool> {
    let mut central = vec![true; dim];
    for r in rels {
        let (mu, nu) = r.lhs;
        let plain = r.rhs.len() == 1 && r.rhs.get(&(nu, mu)).is_some_and(CycNum::is_one);
        if !plain {
            central[mu] = false;
            central[nu] = false;
        }
    }
    central
}

/// Substitutes rule right sides for leading words. Rules are inter-reduced,
/// so one pass suffices.
fn reduce_quadratic(p: &Poly, rules: &BTreeMap<(usize, usize), Poly>) -> Poly {
    let mut out = Poly::zero();
    for (w, c) in &p.terms {
        match (w.len() == 2).then(|| rules.get(&(w[0], w[1]))).flatten() {
            Some(rhs) => {
                for (v, k) in &rhs.terms {
                    out.add_term(v.clone(), c * k);
                }
            }
            None => out.add_term(w.clone(), c.clone()),
        }
    }
    out
}

impl RewriteSystem {
    /// Orients the relations and closes them in degree two.
    ///
    /// `order` lists generators from smallest to largest (default: basis
    /// order). Generators that commute plainly with everything get weight 0
    /// so that lower terms such as `x^a x^0` sit below `x^i x^j`.
    pub fn build(rels: &[QuadRelation], dim: usize, order: Option<&[usize]>) -> Result<Self, EnvelopeError> {
        for r in rels {
            for i in [r.lhs.0, r.lhs.1]
                .into_iter()
                .chain(r.rhs.keys().flat_map(|&(a, b)| [a, b]))
            {
                if i >= dim {
                    return Err(EnvelopeError::IndexOutOfRange { index: i, dim });
                }
            }
        }
        let central = presentation_central(rels, dim);
        let weight = central.iter().map(|&c| u32::from(!c)).collect();
        let default: Vec<usize> = (0..dim).collect();
        let order = MonomialOrder::new(order.unwrap_or(&default), weight)?;

        for r in rels {
            let (mu, nu) = r.lhs;
            let forward = [mu, nu];
            let swapped = [nu, mu];
            for &(g, b) in r.rhs.keys() {
                let w = [g, b];
                if w == swapped {
                    continue;
                }
                let below_both = order.cmp(&w, &forward) == Ordering::Less
                    && order.cmp(&w, &swapped) == Ordering::Less;
                if !below_both {
                    return Err(EnvelopeError::UnsupportedShape { pair: r.lhs });
                }
            }
        }

        let mut rules: BTreeMap<(usize, usize), Poly> = BTreeMap::new();
        for r in rels {
            let p = reduce_quadratic(&r.as_poly(), &rules);
            let Some((lead, lead_coeff)) = p
                .terms
                .iter()
                .max_by(|x, y| order.cmp(x.0, y.0))
                .map(|(w, c)| (w.clone(), c.clone()))
            else {
                continue;
            };
            let inv = lead_coeff.inv().expect("stored coefficients are nonzero");
            let minus_inv = -&inv;
            let rhs = Poly::from_terms(
                p.terms
                    .iter()
                    .filter(|(w, _)| **w != lead)
                    .map(|(w, c)| (w.clone(), c * &minus_inv)),
            );
            let key = (lead[0], lead[1]);
            for existing in rules.values_mut() {
                if let Some(k) = existing.terms.remove(&lead) {
                    for (w, c) in &rhs.terms {
                        existing.add_term(w.clone(), &k * c);
                    }
                }
            }
            rules.insert(key, rhs);
        }
        Ok(RewriteSystem { order, rules })
    }

    /// Direct construction from oriented rules, without closure. Each right
    /// side must be strictly below its left side.
    pub fn from_rules(
        order: MonomialOrder,
        rules: BTreeMap<(usize, usize), Poly>,
    ) -> Result<Self, EnvelopeError> {
        for (&(a, b), rhs) in &rules {
            let lhs = [a, b];
            for w in rhs.terms.keys() {
                if order.cmp(w, &lhs) != Ordering::Less {
                    return Err(EnvelopeError::NotDescending { lhs: (a, b) });
                }
            }
        }
        Ok(RewriteSystem { order, rules })
    }

    pub fn dim(&self) -> usize {
        self.order.dim()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn rules(&self) -> &BTreeMap<(usize, usize), Poly> {
        &self.rules
    }

    pub fn rule(&self, lhs: (usize, usize)) -> Option<&Poly> {
        self.rules.get(&lhs)
    }

    /// Ordered pairs of distinct generators whose product vanishes, including
    /// pairs whose vanishing follows from a rule for the swapped pair.
    pub fn zero_pairs(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for a in 0..self.dim() {
            for b in 0..self.dim() {
                if a != b && self.normal_form(&Poly::word(vec![a, b])).is_zero() {
                    out.insert((a, b));
                }
            }
        }
        out
    }

    /// Generators with `(x^μ)² = 0`.
    pub fn nilpotents(&self) -> BTreeSet<usize> {
        (0..self.dim())
            .filter(|&a| self.normal_form(&Poly::word(vec![a, a])).is_zero())
            .collect()
    }

    fn first_redex(&self, w: &[usize]) -> Option<usize> {
        (0..w.len().saturating_sub(1)).find(|&i| self.rules.contains_key(&(w[i], w[i + 1])))
    }

    /// All positions where a rule applies.
    pub fn redexes(&self, w: &[usize]) -> Vec<usize> {
        (0..w.len().saturating_sub(1))
            .filter(|&i| self.rules.contains_key(&(w[i], w[i + 1])))
            .collect()
    }

    /// One rewrite step at position `pos`, if a rule applies there.
    pub fn rewrite_at(&self, w: &[usize], pos: usize) -> Option<Poly> {
        let rhs = self.rules.get(&(*w.get(pos)?, *w.get(pos + 1)?))?;
        let mut out = Poly::zero();
        for (v, c) in &rhs.terms {
            let mut nw = Vec::with_capacity(w.len());
            nw.extend_from_slice(&w[..pos]);
            nw.extend_from_slice(v);
            nw.extend_from_slice(&w[pos + 2..]);
            out.add_term(nw, c.clone());
        }
        Some(out)
    }

    /// Rewrites the leftmost redex until no rule applies.
    pub fn normal_form(&self, p: &Poly) -> Poly {
        let mut pending = p.terms.clone();
        let mut done = Poly::zero();
        while let Some((w, c)) = pending.pop_first() {
            match self.first_redex(&w) {
                None => done.add_term(w, c),
                Some(pos) => {
                    let step = self.rewrite_at(&w, pos).expect("redex exists");
                    for (v, k) in step.terms {
                        accumulate(&mut pending, v, &c * &k);
                    }
                }
            }
        }
        done
    }

    pub fn is_normal(&self, w: &[usize]) -> bool {
        self.first_redex(w).is_none()
    }

    /// For every word of length at most `degree_cap`, reduces along each
    /// one-step rewrite and checks that all choices reach the same normal
    /// form.
    pub fn check_local_confluence(&self, degree_cap: usize) -> ConfluenceReport {
        let dim = self.dim();
        let mut report = ConfluenceReport {
            degree_cap,
            words_checked: 0,
            divergences: Vec::new(),
            divergence_count: 0,
        };
        let mut word = Vec::new();
        for len in 1..=degree_cap {
            word.clear();
            word.resize(len, 0);
            loop {
                report.words_checked += 1;
                let positions = self.redexes(&word);
                if positions.len() > 1 {
                    let first = positions[0];
                    let reference =
                        self.normal_form(&self.rewrite_at(&word, first).expect("redex exists"));
                    for &pos in &positions[1..] {
                        let other =
                            self.normal_form(&self.rewrite_at(&word, pos).expect("redex exists"));
                        if other != reference {
                            report.divergence_count += 1;
                            if report.divergences.len() < 16 {
                                report.divergences.push(Divergence {
                                    word: word.clone(),
                                    positions: (first, pos),
                                    first: reference.clone(),
                                    second: other,
                                });
                            }
                        }
                    }
                }
                // next word in lexicographic order
                let mut i = len;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    word[i] += 1;
                    if word[i] < dim {
                        break;
                    }
                    word[i] = 0;
                    if i == 0 {
                        i = usize::MAX;
                        break;
                    }
                }
                if i == usize::MAX || dim == 0 {
                    break;
                }
            }
        }
        report
    }

    /// `nf(p·g - g·p)` for each generator; central iff all vanish.
    pub fn centrality(&self, p: &Poly) -> CentralityReport {
        let mut witnesses = Vec::new();
        for g in 0..self.dim() {
            let gp = Poly::word(vec![g]);
            let comm = self.normal_form(&p.mul(&gp).sub(&gp.mul(p)));
            if !comm.is_zero() {
                witnesses.push((g, comm));
            }
        }
        CentralityReport { witnesses }
    }

    pub fn is_central(&self, p: &Poly) -> bool {
        self.centrality(p).is_central()
    }
}

/// Relations to rewrite system with the given generator order.
pub fn build_rewrite_system(
    rels: &[QuadRelation],
    dim: usize,
    order: Option<&[usize]>,
) -> Result<RewriteSystem, EnvelopeError> {
    RewriteSystem::build(rels, dim, order)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Divergence {
    pub word: Word,
    pub positions: (usize, usize),
    pub first: Poly,
    pub second: Poly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConfluenceReport {
    pub degree_cap: usize,
    pub words_checked: usize,
    /// First few divergences, in lexicographic word order.
    pub divergences: Vec<Divergence>,
    pub divergence_count: usize,
}

impl ConfluenceReport {
    pub fn confluent(&self) -> bool {
        self.divergence_count == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CentralityReport {
    /// Generators `g` with `nf(p·g - g·p) ≠ 0`, with that normal form.
    pub witnesses: Vec<(usize, Poly)>,
}

impl CentralityReport {
    pub fn is_central(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Element of `U(L) ⊗ U(L)`: pairs of words with coefficients.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TensorSquarePoly {
    terms: BTreeMap<(Word, Word), CycNum>,
}

impl TensorSquarePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `1 ⊗ 1`.
    pub fn one() -> Self {
        let mut t = Self::zero();
        t.add_term(Vec::new(), Vec::new(), CycNum::one());
        t
    }

    pub fn add_term(&mut self, u: Word, v: Word, c: CycNum) {
        accumulate(&mut self.terms, (u, v), c);
    }

    pub fn terms(&self) -> &BTreeMap<(Word, Word), CycNum> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `p ⊗ q`.
    pub fn tensor(p: &Poly, q: &Poly) -> Self {
        let mut t = Self::zero();
        for (u, a) in p.terms() {
            for (v, b) in q.terms() {
                t.add_term(u.clone(), v.clone(), a * b);
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((u, v), c) in &other.terms {
            out.add_term(u.clone(), v.clone(), c.clone());
        }
        out
    }

    /// Product in the braided tensor square:
    /// `(u ⊗ v)(w ⊗ z) = β(|v|, |w|) uw ⊗ vz`.
    pub fn braided_mul(&self, other: &Self, a: &AlgebraSpec) -> Self {
        let mut out = Self::zero();
        let bichar = a.grading();
        for ((u, v), c1) in &self.terms {
            let dv = a.word_degree(v);
            for ((w, z), c2) in &other.terms {
                let phase = bichar
                    .phase(&dv, &a.word_degree(w))
                    .expect("degrees from the spec's own group");
                let mut uw = u.clone();
                uw.extend_from_slice(w);
                let mut vz = v.clone();
                vz.extend_from_slice(z);
                out.add_term(uw, vz, &(c1 * c2) * &phase);
            }
        }
        out
    }

    /// Normal form in each tensor leg.
    pub fn normalize(&self, rs: &RewriteSystem) -> Self {
        let mut out = Self::zero();
        for ((u, v), c) in &self.terms {
            let nu = rs.normal_form(&Poly::word(u.clone()));
            if nu.is_zero() {
                continue;
            }
            let nv = rs.normal_form(&Poly::word(v.clone()));
            for (u2, a) in nu.terms() {
                for (v2, b) in nv.terms() {
                    out.add_term(u2.clone(), v2.clone(), &(c * a) * b);
                }
            }
        }
        out
    }
}

/// Coproduct of a single generator, `Σ d^μ_{νρ} x^ν ⊗ x^ρ`.
pub fn delta_generator(a: &AlgebraSpec, mu: usize) -> TensorSquarePoly {
    let mut t = TensorSquarePoly::zero();
    for (&(m, nu, rho), v) in a.d().range((mu, 0, 0)..=(mu, usize::MAX, usize::MAX)) {
        debug_assert_eq!(m, mu);
        t.add_term(vec![nu], vec![rho], v.clone());
    }
    t
}

/// Extends `Δ` to words as a braided algebra map and normalizes both legs.
/// The input is not normalized first, so comparing `Δ(p)` with `Δ(nf(p))`
/// tests that `Δ` respects the relations.
pub fn delta_on_products(a: &AlgebraSpec, rs: &RewriteSystem, p: &Poly) -> TensorSquarePoly {
    let gens: Vec<TensorSquarePoly> = (0..a.dim()).map(|mu| delta_generator(a, mu)).collect();
    let mut out = TensorSquarePoly::zero();
    for (w, c) in p.terms() {
        let mut acc = TensorSquarePoly::one();
        for &g in w {
            acc = acc.braided_mul(&gens[g], a).normalize(rs);
            if acc.is_zero() {
                break;
            }
        }
        for ((u, v), k) in acc.terms {
            out.add_term(u, v, c * &k);
        }
    }
    out
}

/// Counit extended multiplicatively to words.
pub fn counit_poly(a: &AlgebraSpec, p: &Poly) -> CycNum {
    let mut acc = CycNum::zero();
    for (w, c) in p.terms() {
        let mut term = c.clone();
        for &g in w {
            term = &term * &a.eps_at(g);
            if term.is_zero() {
                break;
            }
        }
        acc += &term;
    }
    acc
}

/// Total degree of every word of `p`, if they agree.
pub fn poly_degree(a: &AlgebraSpec, p: &Poly) -> Option<crate::graded::Degree> {
    let mut degrees = p.terms().keys().map(|w| a.word_degree(w));
    let first = degrees.next()?;
    degrees.all(|d| d == first).then_some(first)
}

/// Quotient of `U(L)` by `D = 1` for a central element `D`.
///
/// Experimental. The closure is a mechanization of the usual by-hand
/// argument: a generator `g` with `nf(g·D) = λ g` or `nf(D·g) = λ g`,
/// `λ ≠ 1`, must vanish once `D = 1`; killed generators are removed and the
/// test repeats until stable. The leading word of the surviving normal form
/// of `D` is then replaced by `1` minus the lower terms. Uniqueness of normal
/// forms in the quotient is not guaranteed.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientSystem {
    base: RewriteSystem,
    killed: BTreeSet<usize>,
    lead: Word,
    replacement: Poly,
}

impl QuotientSystem {
    pub fn by_central_element(rs: &RewriteSystem, d: &Poly) -> Result<Self, EnvelopeError> {
        let mut q = QuotientSystem {
            base: rs.clone(),
            killed: BTreeSet::new(),
            lead: Vec::new(),
            replacement: Poly::one(),
        };
        loop {
            let dn = q.normal_form(d);
            let mut changed = false;
            for g in 0..rs.dim() {
                if q.killed.contains(&g) {
                    continue;
                }
                let gp = Poly::word(vec![g]);
                let vanishes = [gp.mul(&dn), dn.mul(&gp)].iter().any(|prod| {
                    let r = q.normal_form(prod);
                    let other_words = r.terms().keys().any(|w| w.as_slice() != [g]);
                    !other_words && !r.coeff(&[g]).is_one()
                });
                if vanishes {
                    q.killed.insert(g);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
            if q.killed.len() == rs.dim() {
                return Err(EnvelopeError::DegenerateQuotient);
            }
        }
        let dn = q.normal_form(d);
        let Some((lead, c)) = dn
            .terms()
            .iter()
            .max_by(|x, y| rs.order().cmp(x.0, y.0))
            .map(|(w, c)| (w.clone(), c.clone()))
        else {
            return Err(EnvelopeError::DegenerateQuotient);
        };
        if lead.is_empty() {
            // D is a constant; D = 1 is then either empty or contradictory
            return if c.is_one() {
                Ok(q)
            } else {
                Err(EnvelopeError::DegenerateQuotient)
            };
        }
        let inv = c.inv().expect("nonzero coefficient");
        let mut replacement = Poly::one().scale(&inv);
        for (w, k) in dn.terms() {
            if *w != lead {
                replacement.add_term(w.clone(), -(k * &inv));
            }
        }
        q.lead = lead;
        q.replacement = replacement;
        Ok(q)
    }

    pub fn killed(&self) -> &BTreeSet<usize> {
        &self.killed
    }

    /// The substitution `lead → replacement`; `lead` is empty when there is
    /// no substitution.
    pub fn substitution(&self) -> (&Word, &Poly) {
        (&self.lead, &self.replacement)
    }

    fn find_lead(&self, w: &[usize]) -> Option<usize> {
        let k = self.lead.len();
        if k == 0 || w.len() < k {
            return None;
        }
        (0..=w.len() - k).find(|&i| w[i..i + k] == self.lead[..])
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        let mut current = p.clone();
        loop {
            let reduced = self.base.normal_form(&current);
            let mut next = Poly::zero();
            let mut substituted = false;
            for (w, c) in reduced.terms() {
                if w.iter().any(|g| self.killed.contains(g)) {
                    continue;
                }
                match self.find_lead(w) {
                    Some(i) => {
                        substituted = true;
                        for (v, k) in self.replacement.terms() {
                            let mut nw = w[..i].to_vec();
                            nw.extend_from_slice(v);
                            nw.extend_from_slice(&w[i + self.lead.len()..]);
                            next.add_term(nw, c * k);
                        }
                    }
                    None => next.add_term(w.clone(), c.clone()),
                }
            }
            if !substituted {
                return next;
            }
            current = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(dim: usize) -> MonomialOrder {
        MonomialOrder::standard(dim)
    }

    #[test]
    fn monomial_order_basics() {
        let o = MonomialOrder::new(&[2, 0, 1], vec![1, 1, 0]).unwrap();
        assert_eq!(o.order(), vec![2, 0, 1]);
        // length first
        assert_eq!(o.cmp(&[1, 1, 1], &[0, 0]), Ordering::Greater);
        // weight next: generator 2 has weight 0
        assert_eq!(o.cmp(&[0, 2], &[2, 2]), Ordering::Greater);
        assert_eq!(o.cmp(&[2, 0], &[0, 2]), Ordering::Less);
        // rank last
        assert_eq!(o.cmp(&[1, 0], &[0, 1]), Ordering::Greater);
        assert_eq!(MonomialOrder::new(&[0, 0, 1], vec![1; 3]), Err(EnvelopeError::BadOrder));
        assert_eq!(MonomialOrder::new(&[0, 3, 1], vec![1; 3]), Err(EnvelopeError::BadOrder));
    }

    #[test]
    fn closure_finds_zero_products() {
        // x1 x0 = 2 x0 x1 and x0 x1 = x1 x0 force x0 x1 = x1 x0 = 0
        let z = CycNum::from_integer;
        let rels = vec![
            QuadRelation {
                lhs: (1, 0),
                rhs: [((0, 1), z(2))].into_iter().collect(),
            },
            QuadRelation {
                lhs: (0, 1),
                rhs: [((1, 0), z(1))].into_iter().collect(),
            },
            QuadRelation {
                lhs: (0, 0),
                rhs: [((0, 0), z(-1))].into_iter().collect(),
            },
        ];
        let rs = RewriteSystem::build(&rels, 2, None).unwrap();
        assert_eq!(rs.zero_pairs(), [(0, 1), (1, 0)].into_iter().collect());
        assert_eq!(rs.nilpotents(), [0].into_iter().collect());
    }

    #[test]
    fn unsupported_shape_is_rejected() {
        let z = CycNum::from_integer;
        // x1 x0 = x1 x1 is not quasi-commutation plus lower terms
        let rels = vec![QuadRelation {
            lhs: (1, 0),
            rhs: [((1, 1), z(1))].into_iter().collect(),
        }];
        assert_eq!(
            RewriteSystem::build(&rels, 2, None),
            Err(EnvelopeError::UnsupportedShape { pair: (1, 0) })
        );
        let rels = vec![QuadRelation {
            lhs: (1, 5),
            rhs: BTreeMap::new(),
        }];
        assert_eq!(
            RewriteSystem::build(&rels, 2, None),
            Err(EnvelopeError::IndexOutOfRange { index: 5, dim: 2 })
        );
    }

    #[test]
    fn from_rules_checks_orientation() {
        let mut rules = BTreeMap::new();
        rules.insert((0, 1), Poly::word(vec![1, 0]));
        assert_eq!(
            RewriteSystem::from_rules(order(2), rules),
            Err(EnvelopeError::NotDescending { lhs: (0, 1) })
        );
    }

    #[test]
    fn normal_form_of_quasi_commuting_pair() {
        let mut rules = BTreeMap::new();
        rules.insert((1, 0), Poly::monomial(vec![0, 1], CycNum::from_integer(-1)));
        let rs = RewriteSystem::from_rules(order(2), rules).unwrap();
        let nf = rs.normal_form(&Poly::word(vec![1, 1, 0]));
        assert_eq!(nf, Poly::word(vec![0, 1, 1]));
        assert!(rs.is_normal(&[0, 1, 1]));
        assert!(rs.check_local_confluence(4).confluent());
    }

    #[test]
    fn quotient_by_constant() {
        let rs = RewriteSystem::from_rules(order(1), BTreeMap::new()).unwrap();
        let q = QuotientSystem::by_central_element(&rs, &Poly::one()).unwrap();
        assert!(q.killed().is_empty());
        assert_eq!(
            QuotientSystem::by_central_element(&rs, &Poly::one().scale(&CycNum::from_integer(2))),
            Err(EnvelopeError::DegenerateQuotient)
        );
    }

    #[test]
    fn poly_arithmetic() {
        let a = Poly::word(vec![0]);
        let b = Poly::word(vec![1]);
        let ab = a.mul(&b);
        assert_eq!(ab, Poly::word(vec![0, 1]));
        assert!(ab.sub(&ab).is_zero());
        assert_eq!(Poly::one().mul(&a), a);
        assert_eq!(a.add(&b).len(), 2);
    }
}
