//! The braided line: `C[θ]/(θ^n)` with `θ` of degree 1 under the anyonic
//! braiding of `Z/n`, `q = ζ_n`.
//!
//! Polynomials in several copies `θ_1, …, θ_r` live in the braided tensor
//! power, where `θ_j θ_i = q θ_i θ_j` for `i < j`. Monomials are stored
//! normally ordered as exponent tuples, so
//!
//! ```text
//! θ^e · θ^e' = q^{Σ_{i>j} e_i e'_j} θ^{e+e'}
//! ```
//!
//! and any exponent reaching `n` vanishes. The Hopf structure is
//! `Δθ = θ_1 + θ_2`, `ε(θ) = 0`, `S(θ) = -θ`, extended as braided algebra maps.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::accumulate;
use crate::cyclotomic::{q_integer, CycError, CycNum};

/// Polynomial in `vars` braided copies of `θ`. Zero terms are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaPoly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, CycNum>,
}

impl ThetaPoly {
    pub fn zero(vars: usize) -> Self {
        ThetaPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, CycNum> {
        &self.terms
    }

    pub fn coeff(&self, exps: &[u32]) -> CycNum {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &ThetaPoly) -> ThetaPoly {
        assert_eq!(self.vars, other.vars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            accumulate(&mut out.terms, e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ThetaPoly) -> ThetaPoly {
        self.add(&other.scale(&CycNum::from_integer(-1)))
    }

    pub fn scale(&self, s: &CycNum) -> ThetaPoly {
        let mut out = ThetaPoly::zero(self.vars);
        for (e, c) in &self.terms {
            accumulate(&mut out.terms, e.clone(), c * s);
        }
        out
    }

    /// Highest total degree present.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnySpaceError {
    ZeroOrder,
    Cyclotomic(CycError),
}

impl fmt::Display for AnySpaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnySpaceError::ZeroOrder => write!(f, "n must be at least 1"),
            AnySpaceError::Cyclotomic(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for AnySpaceError {}

/// The braided line of order `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct AnySpace {
    n: u32,
    q: CycNum,
}

impl AnySpace {
    pub fn new(n: u32) -> Result<Self, AnySpaceError> {
        if n == 0 {
            return Err(AnySpaceError::ZeroOrder);
        }
        let q = CycNum::root_of_unity(n, 1).map_err(AnySpaceError::Cyclotomic)?;
        Ok(AnySpace { n, q })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> &CycNum {
        &self.q
    }

    fn q_pow(&self, k: u64) -> CycNum {
        CycNum::root_of_unity(self.n, (k % u64::from(self.n)) as i64).expect("n >= 1")
    }

    /// `c · θ_1^{e_1} ⋯ θ_r^{e_r}`, zero if any exponent reaches `n`.
    pub fn monomial(&self, exps: Vec<u32>, c: CycNum) -> ThetaPoly {
        let mut p = ThetaPoly::zero(exps.len());
        if exps.iter().all(|&e| e < self.n) {
            accumulate(&mut p.terms, exps, c);
        }
        p
    }

    pub fn constant(&self, vars: usize, c: CycNum) -> ThetaPoly {
        self.monomial(vec![0; vars], c)
    }

    /// `θ_i` among `vars` copies, 0-based.
    pub fn theta(&self, vars: usize, i: usize) -> ThetaPoly {
        assert!(i < vars, "variable {i} out of range for {vars}");
        let mut e = vec![0; vars];
        e[i] = 1;
        self.monomial(e, CycNum::one())
    }

    pub fn mul(&self, a: &ThetaPoly, b: &ThetaPoly) -> ThetaPoly {
        assert_eq!(a.vars, b.vars, "variable count mismatch");
        let mut out = ThetaPoly::zero(a.vars);
        for (e, c1) in &a.terms {
            for (f, c2) in &b.terms {
                let sum: Vec<u32> = e.iter().zip(f).map(|(x, y)| x + y).collect();
                if sum.iter().any(|&s| s >= self.n) {
                    continue;
                }
                let mut k: u64 = 0;
                for i in 0..e.len() {
                    for j in 0..i {
                        k += u64::from(e[i]) * u64::from(f[j]);
                    }
                }
                accumulate(&mut out.terms, sum, &(c1 * c2) * &self.q_pow(k));
            }
        }
        out
    }

    pub fn pow(&self, a: &ThetaPoly, k: u32) -> ThetaPoly {
        let mut acc = self.constant(a.vars, CycNum::one());
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Algebra map sending `θ_i` to `images[i]`. Valid when the images obey
    /// the same braiding relations, as for the coproduct legs.
    pub fn substitute(&self, p: &ThetaPoly, images: &[ThetaPoly]) -> ThetaPoly {
        assert_eq!(images.len(), p.vars, "one image per variable");
        let target = images.first().map_or(0, ThetaPoly::vars);
        let mut out = ThetaPoly::zero(target);
        for (e, c) in &p.terms {
            let mut term = self.constant(target, c.clone());
            for (img, &k) in images.iter().zip(e) {
                term = self.mul(&term, &self.pow(img, k));
            }
            out = out.add(&term);
        }
        out
    }

    /// `Δ`, from one variable to two: `θ^k ↦ (θ_1 + θ_2)^k`.
    pub fn coproduct(&self, p: &ThetaPoly) -> ThetaPoly {
        assert_eq!(p.vars, 1, "coproduct takes a one-variable polynomial");
        let sum = self.theta(2, 0).add(&self.theta(2, 1));
        self.substitute(p, &[sum])
    }

    /// `ε`: the constant term.
    pub fn counit(&self, p: &ThetaPoly) -> CycNum {
        p.coeff(&vec![0; p.vars])
    }

    /// `S(θ^k) = (-1)^k q^{k(k-1)/2} θ^k`.
    pub fn antipode(&self, p: &ThetaPoly) -> ThetaPoly {
        assert_eq!(p.vars, 1, "antipode takes a one-variable polynomial");
        let mut out = ThetaPoly::zero(1);
        for (e, c) in &p.terms {
            let k = u64::from(e[0]);
            let mut s = self.q_pow(k * k.saturating_sub(1) / 2);
            if k % 2 == 1 {
                s = -s;
            }
            accumulate(&mut out.terms, e.clone(), c * &s);
        }
        out
    }

    /// `S` from braided anti-multiplicativity, `S(θ^k) = q^{k-1} S(θ^{k-1}) S(θ)`.
    pub fn antipode_recursive(&self, p: &ThetaPoly) -> ThetaPoly {
        assert_eq!(p.vars, 1, "antipode takes a one-variable polynomial");
        let mut out = ThetaPoly::zero(1);
        for (e, c) in &p.terms {
            let mut s = CycNum::one();
            for j in 1..=u64::from(e[0]) {
                s = -(&s * &self.q_pow(j - 1));
            }
            accumulate(&mut out.terms, e.clone(), c * &s);
        }
        out
    }

    /// Braided derivative `∂θ^k = [k]_q θ^{k-1}`.
    pub fn derivative(&self, p: &ThetaPoly) -> ThetaPoly {
        assert_eq!(p.vars, 1, "derivative takes a one-variable polynomial");
        let mut out = ThetaPoly::zero(1);
        for (e, c) in &p.terms {
            if e[0] > 0 {
                accumulate(&mut out.terms, vec![e[0] - 1], c * &q_integer(e[0], &self.q));
            }
        }
        out
    }

    /// `∂f = (f(qθ) - f(θ)) / ((q - 1) θ)`; needs `q ≠ 1`.
    pub fn derivative_difference(&self, p: &ThetaPoly) -> Result<ThetaPoly, AnySpaceError> {
        assert_eq!(p.vars, 1, "derivative takes a one-variable polynomial");
        let denom = &self.q - &CycNum::one();
        let mut out = ThetaPoly::zero(1);
        for (e, c) in &p.terms {
            if e[0] == 0 {
                continue;
            }
            let num = &self.q_pow(u64::from(e[0])) - &CycNum::one();
            let ratio = num.checked_div(&denom).map_err(AnySpaceError::Cyclotomic)?;
            accumulate(&mut out.terms, vec![e[0] - 1], c * &ratio);
        }
        Ok(out)
    }

    /// Coefficient of the top power `θ^{n-1}`.
    pub fn integral(&self, p: &ThetaPoly) -> CycNum {
        assert_eq!(p.vars, 1, "integral takes a one-variable polynomial");
        p.coeff(&[self.n - 1])
    }

    /// Multiplies the legs of a two-variable polynomial: `θ_1^a θ_2^b ↦ θ^{a+b}`.
    pub fn multiply_legs(&self, p: &ThetaPoly) -> ThetaPoly {
        assert_eq!(p.vars, 2, "expects two legs");
        let mut out = ThetaPoly::zero(1);
        for (e, c) in &p.terms {
            let s = e[0] + e[1];
            if s < self.n {
                accumulate(&mut out.terms, vec![s], c.clone());
            }
        }
        out
    }

    /// Applies a one-variable linear map to the first leg.
    pub fn on_first_leg(&self, p: &ThetaPoly, f: impl Fn(&ThetaPoly) -> ThetaPoly) -> ThetaPoly {
        assert_eq!(p.vars, 2, "expects two legs");
        let mut out = ThetaPoly::zero(2);
        for (e, c) in &p.terms {
            let image = f(&self.monomial(vec![e[0]], c.clone()));
            for (g, k) in &image.terms {
                accumulate(&mut out.terms, vec![g[0], e[1]], k.clone());
            }
        }
        out
    }

    /// Applies a one-variable linear map to the second leg.
    pub fn on_second_leg(&self, p: &ThetaPoly, f: impl Fn(&ThetaPoly) -> ThetaPoly) -> ThetaPoly {
        assert_eq!(p.vars, 2, "expects two legs");
        let mut out = ThetaPoly::zero(2);
        for (e, c) in &p.terms {
            let image = f(&self.monomial(vec![e[1]], c.clone()));
            for (g, k) in &image.terms {
                accumulate(&mut out.terms, vec![e[0], g[0]], k.clone());
            }
        }
        out
    }
}

impl fmt::Display for ThetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let is_const = e.iter().all(|&x| x == 0);
            let coeff_one = c.is_one();
            if !coeff_one || is_const {
                if c.terms().count() > 1 {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "{c}")?;
                }
            }
            let mut first = coeff_one;
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if self.vars == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t{}", i + 1)?;
                }
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}
