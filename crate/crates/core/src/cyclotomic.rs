//! Exact arithmetic in cyclotomic fields `Q(ζ_m)`.
//!
//! An element is stored as rational coordinates in the power basis
//! `1, ζ, …, ζ^(φ(m)-1)` after reduction modulo the `m`-th cyclotomic
//! polynomial `Φ_m`. Reduced forms are canonical, so equality at a fixed
//! order is coordinate-wise. Values of different orders meet in `Q(ζ_L)` with
//! `L = lcm` of the two orders, via `ζ_m = ζ_L^(L/m)`.
//!
//! Elements keep their declared order: no attempt is made to detect that a
//! value lies in a smaller subfield.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary precision rational used for every coordinate.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycError {
    /// `m = 0` is not a valid cyclotomic order.
    ZeroOrder,
    DivisionByZero,
    /// `q_binomial(a, k, _)` requires `k <= a`.
    BinomialRange { top: u32, bottom: u32 },
}

impl fmt::Display for CycError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycError::ZeroOrder => write!(f, "cyclotomic order must be at least 1"),
            CycError::DivisionByZero => write!(f, "division by zero in cyclotomic field"),
            CycError::BinomialRange { top, bottom } => {
                write!(f, "q-binomial [{top} choose {bottom}] needs bottom <= top")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CycError {}

/// Precomputed data for one order `m`.
#[derive(Debug)]
struct FieldTable {
    phi: usize,
    /// Coefficients of `Φ_m`, lowest degree first; monic.
    cyclotomic: Vec<i64>,
    /// `powers[j]` is `x^j mod Φ_m` for `0 <= j < m`.
    powers: Vec<Vec<i64>>,
}

impl FieldTable {
    fn build(order: u32) -> Self {
        let cyclotomic = cyclotomic_polynomial_uncached(order);
        let phi = cyclotomic.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut current = vec![0i64; phi];
        current[0] = 1;
        for _ in 0..order {
            powers.push(current.clone());
            // multiply by x, then fold the overflow coefficient back in
            let top = current[phi - 1];
            for i in (1..phi).rev() {
                current[i] = current[i - 1];
            }
            current[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    current[i] -= top * cyclotomic[i];
                }
            }
        }
        FieldTable {
            phi,
            cyclotomic,
            powers,
        }
    }
}

#[cfg(feature = "std")]
fn table(order: u32) -> Arc<FieldTable> {
    use std::collections::BTreeMap;
    use std::sync::{OnceLock, RwLock};

    static CACHE: OnceLock<RwLock<BTreeMap<u32, Arc<FieldTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(BTreeMap::new()));
    if let Some(t) = cache.read().expect("cyclotomic cache poisoned").get(&order) {
        return Arc::clone(t);
    }
    let built = Arc::new(FieldTable::build(order));
    let mut guard = cache.write().expect("cyclotomic cache poisoned");
    Arc::clone(guard.entry(order).or_insert(built))
}

#[cfg(not(feature = "std"))]
fn table(order: u32) -> Arc<FieldTable> {
    Arc::new(FieldTable::build(order))
}

fn divisors(m: u32) -> impl Iterator<Item = u32> {
    (1..=m).filter(move |d| m.is_multiple_of(*d))
}

/// Exact quotient of `num` by the monic polynomial `den` (both lowest degree
/// first). The remainder is asserted to vanish.
fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return vec![0];
    }
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let lead = rem[i + dd];
        quot[i] = lead;
        if lead != 0 {
            for (j, &c) in den.iter().enumerate() {
                rem[i + j] -= lead * c;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

fn cyclotomic_polynomial_uncached(m: u32) -> Vec<i64> {
    // x^m - 1 divided by Φ_d for every proper divisor d of m
    let mut poly = vec![0i64; m as usize + 1];
    poly[0] = -1;
    poly[m as usize] = 1;
    for d in divisors(m).filter(|&d| d < m) {
        let phi_d = cyclotomic_poly_ref(d);
        poly = exact_div_monic(&poly, &phi_d);
    }
    poly
}

#[cfg(feature = "std")]
fn cyclotomic_poly_ref(m: u32) -> Vec<i64> {
    table(m).cyclotomic.clone()
}

#[cfg(not(feature = "std"))]
fn cyclotomic_poly_ref(m: u32) -> Vec<i64> {
    cyclotomic_polynomial_uncached(m)
}

/// Coefficients of the `m`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(m: u32) -> Result<Vec<i64>, CycError> {
    if m == 0 {
        return Err(CycError::ZeroOrder);
    }
    Ok(table(m).cyclotomic.clone())
}

/// Euler's totient, read off the degree of `Φ_m`.
pub fn totient(m: u32) -> Result<usize, CycError> {
    if m == 0 {
        return Err(CycError::ZeroOrder);
    }
    Ok(table(m).phi)
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

fn reduce_exponent(k: i64, m: u32) -> usize {
    k.rem_euclid(i64::from(m)) as usize
}

/// An exact element of `Q(ζ_order)`.
#[derive(Clone)]
pub struct CycNum {
    order: u32,
    coeffs: Vec<Rational>,
}

impl CycNum {
    pub fn zero() -> Self {
        CycNum {
            order: 1,
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        CycNum {
            order: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_integer(i: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(i)))
    }

    /// `ζ_m^(k mod m)` in reduced form.
    pub fn root_of_unity(m: u32, k: i64) -> Result<Self, CycError> {
        if m == 0 {
            return Err(CycError::ZeroOrder);
        }
        let t = table(m);
        let row = &t.powers[reduce_exponent(k, m)];
        Ok(CycNum {
            order: m,
            coeffs: row.iter().map(|&c| Rational::from_integer(c.into())).collect(),
        })
    }

    /// Builds `Σ r·ζ_m^k` from arbitrary integer exponents, reducing on the way.
    pub fn from_terms<I>(m: u32, terms: I) -> Result<Self, CycError>
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        if m == 0 {
            return Err(CycError::ZeroOrder);
        }
        let t = table(m);
        let mut coeffs = vec![Rational::zero(); t.phi];
        for (k, r) in terms {
            if r.is_zero() {
                continue;
            }
            for (slot, &c) in coeffs.iter_mut().zip(&t.powers[reduce_exponent(k, m)]) {
                if c != 0 {
                    *slot += &r * Rational::from_integer(c.into());
                }
            }
        }
        Ok(CycNum { order: m, coeffs })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Power-basis coordinates, length `φ(order)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Nonzero `(exponent, coefficient)` pairs of the reduced form.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Re-expresses the value in `Q(ζ_target)`; `target` must be a multiple
    /// of the current order.
    pub fn embed(&self, target: u32) -> Self {
        assert!(
            target != 0 && target.is_multiple_of(self.order),
            "cannot embed order {} into {}",
            self.order,
            target
        );
        if target == self.order {
            return self.clone();
        }
        let step = (target / self.order) as i64;
        CycNum::from_terms(
            target,
            self.terms().map(|(k, r)| (k as i64 * step, r.clone())),
        )
        .expect("nonzero target order")
    }

    fn aligned(&self, other: &Self) -> (u32, Self, Self) {
        let l = lcm(self.order, other.order);
        (l, self.embed(l), other.embed(l))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    fn mul_same_order(a: &[Rational], b: &[Rational], order: u32) -> Vec<Rational> {
        let t = table(order);
        let phi = t.phi;
        let mut wide = vec![Rational::zero(); 2 * phi - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                wide[i + j] += x * y;
            }
        }
        let mut out: Vec<Rational> = wide.drain(..phi).collect();
        for (offset, w) in wide.into_iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            let row = &t.powers[(phi + offset) % order as usize];
            for (slot, &c) in out.iter_mut().zip(row) {
                if c != 0 {
                    *slot += &w * Rational::from_integer(c.into());
                }
            }
        }
        out
    }

    /// Multiplicative inverse by solving the linear system of multiplication
    /// by `self` over `Q`.
    pub fn inv(&self) -> Result<Self, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(CycNum {
                order: self.order,
                coeffs: {
                    let mut v = vec![Rational::zero(); self.coeffs.len()];
                    v[0] = r.recip();
                    v
                },
            });
        }
        let m = self.order;
        let phi = self.coeffs.len();
        // column j holds self·ζ^j
        let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::zero(); phi + 1]; phi];
        for j in 0..phi {
            let mut basis = vec![Rational::zero(); phi];
            basis[j] = Rational::one();
            let col = Self::mul_same_order(&self.coeffs, &basis, m);
            for (i, v) in col.into_iter().enumerate() {
                rows[i][j] = v;
            }
        }
        rows[0][phi] = Rational::one();
        for col in 0..phi {
            let pivot = (col..phi)
                .find(|&r| !rows[r][col].is_zero())
                .expect("multiplication by a nonzero field element is invertible");
            rows.swap(col, pivot);
            let p = rows[col][col].clone();
            for v in rows[col].iter_mut() {
                *v /= &p;
            }
            for r in 0..phi {
                if r != col && !rows[r][col].is_zero() {
                    let factor = rows[r][col].clone();
                    for c in col..=phi {
                        let delta = &factor * &rows[col][c];
                        rows[r][c] -= delta;
                    }
                }
            }
        }
        Ok(CycNum {
            order: m,
            coeffs: rows.into_iter().map(|mut r| r.pop().expect("augmented")).collect(),
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, CycError> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, e: i64) -> Result<Self, CycError> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = CycNum::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            self.coeffs == other.coeffs
        } else {
            let (_, a, b) = self.aligned(other);
            a.coeffs == b.coeffs
        }
    }
}

impl Eq for CycNum {}

impl Default for CycNum {
    fn default() -> Self {
        CycNum::zero()
    }
}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &'a CycNum) -> CycNum {
        if self.order == rhs.order {
            return CycNum {
                order: self.order,
                coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
            };
        }
        let (l, a, b) = self.aligned(rhs);
        CycNum {
            order: l,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &'a CycNum) -> CycNum {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &'a CycNum) -> CycNum {
        if let Some(r) = rhs.as_rational() {
            return self.scale(r).embed_to_lcm(rhs.order);
        }
        if let Some(r) = self.as_rational() {
            return rhs.scale(r).embed_to_lcm(self.order);
        }
        if self.order == rhs.order {
            return CycNum {
                order: self.order,
                coeffs: CycNum::mul_same_order(&self.coeffs, &rhs.coeffs, self.order),
            };
        }
        let (l, a, b) = self.aligned(rhs);
        CycNum {
            order: l,
            coeffs: CycNum::mul_same_order(&a.coeffs, &b.coeffs, l),
        }
    }
}

impl CycNum {
    fn embed_to_lcm(self, other_order: u32) -> CycNum {
        let l = lcm(self.order, other_order);
        if l == self.order {
            self
        } else {
            self.embed(l)
        }
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl Add for CycNum {
    type Output = CycNum;
    fn add(self, rhs: CycNum) -> CycNum {
        &self + &rhs
    }
}

impl Sub for CycNum {
    type Output = CycNum;
    fn sub(self, rhs: CycNum) -> CycNum {
        &self - &rhs
    }
}

impl Mul for CycNum {
    type Output = CycNum;
    fn mul(self, rhs: CycNum) -> CycNum {
        &self * &rhs
    }
}

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        if self.order == rhs.order {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a += b;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({self})")
    }
}

/// Human-readable form, e.g. `1 - 2/3*z3^1`. `zM^k` stands for `ζ_M^k`.
impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if k == 1 {
                    write!(f, "z{}", self.order)?;
                } else {
                    write!(f, "z{}^{}", self.order, k)?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The q-integer `[k]_q = 1 + q + … + q^(k-1)`; `[0]_q = 0`.
pub fn q_integer(k: u32, q: &CycNum) -> CycNum {
    let mut acc = CycNum::zero();
    let mut power = CycNum::one();
    for _ in 0..k {
        acc += &power;
        power = &power * q;
    }
    acc
}

/// Gaussian binomial `[a choose k]_q` from the Pascal recurrence
/// `[a,k] = [a-1,k-1] + q^k [a-1,k]`. Division free, so it is defined at
/// roots of unity.
pub fn q_binomial(a: u32, k: u32, q: &CycNum) -> Result<CycNum, CycError> {
    if k > a {
        return Err(CycError::BinomialRange { top: a, bottom: k });
    }
    let k = k as usize;
    let mut q_pows = Vec::with_capacity(k + 1);
    let mut p = CycNum::one();
    for _ in 0..=k {
        q_pows.push(p.clone());
        p = &p * q;
    }
    // row[j] = [i choose j]_q, only j <= k is needed
    let mut row = vec![CycNum::zero(); k + 1];
    row[0] = CycNum::one();
    for i in 1..=a as usize {
        for j in (1..=k.min(i)).rev() {
            let shifted = &q_pows[j] * &row[j];
            row[j] = &row[j - 1] + &shifted;
        }
    }
    Ok(row.swap_remove(k))
}
