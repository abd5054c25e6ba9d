//! Finite chain rings of two families.
//!
//! * `Unramified`: Galois rings GR(p^s, n) = `Z_{p^s}[x]/(g)` with g a monic
//!   basic irreducible of degree n; the maximal ideal is generated by
//!   theta = p. Elements are length-n coefficient vectors over Z_{p^s}.
//! * `EqualChar`: `F_{p^n}[u]/(u^s)` with theta = u. Elements are length s*n
//!   coefficient vectors over F_p, grouped by powers of u (u-major).
//!
//! Every element decomposes uniquely as a = sum_t gamma_t(a) theta^t with
//! Teichmuller digits gamma_t(a); the valuation and degree functions read off
//! the first and last nonzero digit. The degree of 0 is a distinct sentinel.

use crate::error::{Error, Result};
use crate::fp::{self, Field, ResidueField};
use crate::rng::Rng;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};
use std::collections::BTreeMap;

/// Default bound on ring/code sizes for enumeration-based operations.
pub const DEFAULT_ENUM_GUARD: u128 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Unramified,
    EqualChar,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Unramified => "unramified",
            Family::EqualChar => "equal-characteristic",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        match s {
            "unramified" => Ok(Family::Unramified),
            "equal-characteristic" | "equal-char" | "equalchar" => Ok(Family::EqualChar),
            other => Err(Error::Parse(format!("unknown ring family `{other}`"))),
        }
    }
}

/// Degree of the theta-adic expansion; deg(0) is minus infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Debug)]
pub struct RingInner {
    pub family: Family,
    pub p: u64,
    pub n: usize,
    pub s: usize,
    /// Unramified: monic basic irreducible of degree n over Z_{p^s}.
    /// Equal-characteristic: monic irreducible of degree n over F_p.
    pub modulus: Vec<u64>,
    /// Modulus for a single canonical coefficient: p^s or p.
    coeff_modulus: u64,
    /// Canonical coefficient count: n or s*n.
    coeff_len: usize,
    residue: Field,
    /// q = p^n, the residue field size.
    pub q: u64,
    // Raw coefficient vectors only: Elements hold an Arc back to this inner,
    // so caching them here would create a reference cycle.
    teich_cache: OnceLock<Vec<Vec<u64>>>,
    teich_by_residue: Mutex<BTreeMap<u64, Vec<u64>>>,
}

impl PartialEq for RingInner {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family
            && self.p == other.p
            && self.n == other.n
            && self.s == other.s
            && self.modulus == other.modulus
    }
}
impl Eq for RingInner {}

/// A finite chain ring; cheap to clone and share.
#[derive(Debug, Clone)]
pub struct Ring(Arc<RingInner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}
impl Eq for Ring {}

/// A chain ring element in canonical coefficient representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    ring: Ring,
    coeffs: Vec<u64>,
}

/// An element of the residue field F_q of some chain ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueElement {
    pub field: Field,
    pub coeffs: Vec<u64>,
}

impl ResidueElement {
    pub fn add(&self, other: &ResidueElement) -> ResidueElement {
        assert_eq!(self.field, other.field, "residue field mismatch");
        ResidueElement {
            field: self.field.clone(),
            coeffs: self.field.add(&self.coeffs, &other.coeffs),
        }
    }

    pub fn mul(&self, other: &ResidueElement) -> ResidueElement {
        assert_eq!(self.field, other.field, "residue field mismatch");
        ResidueElement {
            field: self.field.clone(),
            coeffs: self.field.mul(&self.coeffs, &other.coeffs),
        }
    }

    pub fn inv(&self) -> Result<ResidueElement> {
        Ok(ResidueElement {
            field: self.field.clone(),
            coeffs: self.field.inv(&self.coeffs)?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero(&self.coeffs)
    }

    pub fn value(&self) -> u64 {
        self.field.value(&self.coeffs)
    }
}

impl fmt::Display for ResidueElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.n == 1 {
            write!(f, "{}", self.coeffs[0])
        } else {
            let strs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
            write!(f, "{}", strs.join(","))
        }
    }
}

fn checked_pow_u128(base: u64, exp: u32) -> Option<u128> {
    (base as u128).checked_pow(exp)
}

impl Ring {
    /// Construct a finite chain ring. With no modulus, the canonical one is
    /// generated: the value-smallest monic irreducible of degree n over F_p,
    /// Hensel-lifted for the unramified family so that the ring generator is
    /// a Teichmuller element.
    pub fn make(family: Family, p: u64, n: usize, s: usize, modulus: Option<Vec<u64>>) -> Result<Ring> {
        if !fp::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n < 1 || s < 1 {
            return Err(Error::DegreeMismatch {
                detail: "require n >= 1 and s >= 1".into(),
            });
        }
        let coeff_modulus = match family {
            Family::Unramified => checked_pow_u128(p, s as u32)
                .filter(|&v| v < (1u128 << 63))
                .ok_or(Error::SizeGuardExceeded {
                    size: u128::MAX,
                    guard: 1 << 63,
                })? as u64,
            Family::EqualChar => p,
        };
        let q = checked_pow_u128(p, n as u32)
            .filter(|&v| v < (1u128 << 63))
            .ok_or(Error::SizeGuardExceeded {
                size: u128::MAX,
                guard: 1 << 63,
            })? as u64;

        let modulus = match modulus {
            Some(m) => {
                let deg = fp::fp_deg(&m).ok_or(Error::DegreeMismatch {
                    detail: "modulus must be nonzero".into(),
                })?;
                if deg != n {
                    return Err(Error::DegreeMismatch {
                        detail: format!("modulus degree {deg} != n = {n}"),
                    });
                }
                if m[n] != 1 {
                    return Err(Error::DegreeMismatch {
                        detail: "modulus must be monic".into(),
                    });
                }
                if m.iter().any(|&c| c >= coeff_modulus) {
                    return Err(Error::Parse(format!(
                        "modulus coefficients must be reduced below {coeff_modulus}"
                    )));
                }
                // Residue image must be irreducible over F_p.
                let mbar: Vec<u64> = m.iter().map(|&c| c % p).collect();
                if !fp::fp_is_irreducible(&mbar, p) {
                    return Err(Error::ReducibleModulus);
                }
                let mut m = m;
                m.truncate(n + 1);
                m
            }
            None => {
                let gbar = fp::fp_canonical_irreducible(p, n);
                match family {
                    Family::EqualChar => gbar,
                    Family::Unramified => hensel_lift_irreducible(p, s, &gbar)?,
                }
            }
        };

        let residue_modulus: Vec<u64> = modulus.iter().map(|&c| c % p).collect();
        let residue = ResidueField::new(p, residue_modulus)?;
        let coeff_len = match family {
            Family::Unramified => n,
            Family::EqualChar => n * s,
        };
        Ok(Ring(Arc::new(RingInner {
            family,
            p,
            n,
            s,
            modulus,
            coeff_modulus,
            coeff_len,
            residue,
            q,
            teich_cache: OnceLock::new(),
            teich_by_residue: Mutex::new(BTreeMap::new()),
        })))
    }

    pub fn family(&self) -> Family {
        self.0.family
    }
    pub fn p(&self) -> u64 {
        self.0.p
    }
    pub fn n(&self) -> usize {
        self.0.n
    }
    pub fn s(&self) -> usize {
        self.0.s
    }
    pub fn q(&self) -> u64 {
        self.0.q
    }
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }
    pub fn residue_field(&self) -> &Field {
        &self.0.residue
    }
    pub fn coeff_len(&self) -> usize {
        self.0.coeff_len
    }

    /// |R| = q^s.
    pub fn size(&self) -> u128 {
        (self.0.q as u128).pow(self.0.s as u32)
    }

    /// |R^x| = q^(s-1) (q - 1).
    pub fn unit_count(&self) -> u128 {
        (self.0.q as u128).pow(self.0.s as u32 - 1) * (self.0.q as u128 - 1)
    }

    pub fn zero(&self) -> Element {
        Element {
            ring: self.clone(),
            coeffs: vec![0; self.0.coeff_len],
        }
    }

    pub fn one(&self) -> Element {
        self.int(1)
    }

    /// Image of an integer under the canonical map Z -> R.
    pub fn int(&self, k: i128) -> Element {
        let m = self.0.coeff_modulus as i128;
        let v = ((k % m) + m) % m;
        let mut coeffs = vec![0; self.0.coeff_len];
        coeffs[0] = v as u64;
        Element {
            ring: self.clone(),
            coeffs,
        }
    }

    /// theta, the generator of the maximal ideal: p or u.
    pub fn theta(&self) -> Element {
        self.theta_pow(1)
    }

    /// theta^t for 0 <= t <= s (theta^s = 0).
    pub fn theta_pow(&self, t: usize) -> Element {
        assert!(t <= self.0.s, "theta power out of range");
        let mut coeffs = vec![0; self.0.coeff_len];
        if t < self.0.s {
            match self.0.family {
                Family::Unramified => {
                    coeffs[0] = self.0.p.pow(t as u32) % self.0.coeff_modulus;
                }
                Family::EqualChar => {
                    coeffs[t * self.0.n] = 1;
                }
            }
        }
        Element {
            ring: self.clone(),
            coeffs,
        }
    }

    /// Build an element from canonical coefficients (validated).
    pub fn element(&self, coeffs: Vec<u64>) -> Result<Element> {
        if coeffs.len() != self.0.coeff_len {
            return Err(Error::LengthMismatch {
                expected: self.0.coeff_len,
                got: coeffs.len(),
            });
        }
        if coeffs.iter().any(|&c| c >= self.0.coeff_modulus) {
            return Err(Error::Parse(format!(
                "coefficient out of range (modulus {})",
                self.0.coeff_modulus
            )));
        }
        Ok(Element {
            ring: self.clone(),
            coeffs,
        })
    }

    fn el(&self, coeffs: Vec<u64>) -> Element {
        debug_assert_eq!(coeffs.len(), self.0.coeff_len);
        Element {
            ring: self.clone(),
            coeffs,
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        assert_eq!(&a.ring, self, "ring mismatch");
        assert_eq!(&b.ring, self, "ring mismatch");
        let m = self.0.coeff_modulus;
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| {
                let t = x + y;
                if t >= m {
                    t - m
                } else {
                    t
                }
            })
            .collect();
        self.el(coeffs)
    }

    pub fn neg(&self, a: &Element) -> Element {
        assert_eq!(&a.ring, self, "ring mismatch");
        let m = self.0.coeff_modulus;
        let coeffs = a
            .coeffs
            .iter()
            .map(|&x| if x == 0 { 0 } else { m - x })
            .collect();
        self.el(coeffs)
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        assert_eq!(&a.ring, self, "ring mismatch");
        assert_eq!(&b.ring, self, "ring mismatch");
        match self.0.family {
            Family::Unramified => self.el(self.mul_unramified(&a.coeffs, &b.coeffs)),
            Family::EqualChar => self.el(self.mul_equalchar(&a.coeffs, &b.coeffs)),
        }
    }

    fn mul_unramified(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = self.0.n;
        let m = self.0.coeff_modulus as u128;
        let mut t = vec![0u64; 2 * n - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                let v = (x as u128 * y as u128 + t[i + j] as u128) % m;
                t[i + j] = v as u64;
            }
        }
        // reduce by the monic modulus
        let g = &self.0.modulus;
        for d in (n..2 * n - 1).rev() {
            let c = t[d];
            if c == 0 {
                continue;
            }
            t[d] = 0;
            for j in 0..n {
                if g[j] == 0 {
                    continue;
                }
                let sub = c as u128 * g[j] as u128 % m;
                let cur = t[d - n + j] as u128;
                t[d - n + j] = ((cur + m - sub) % m) as u64;
            }
        }
        t.truncate(n);
        t
    }

    fn mul_equalchar(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = self.0.n;
        let s = self.0.s;
        let f = &self.0.residue;
        let mut out = vec![0u64; n * s];
        for t1 in 0..s {
            let ab = &a[t1 * n..(t1 + 1) * n];
            if ab.iter().all(|&c| c == 0) {
                continue;
            }
            for t2 in 0..s - t1 {
                let bb = &b[t2 * n..(t2 + 1) * n];
                if bb.iter().all(|&c| c == 0) {
                    continue;
                }
                let prod = f.mul(ab, bb);
                let dst = (t1 + t2) * n;
                let slot = f.add(&out[dst..dst + n], &prod);
                out[dst..dst + n].copy_from_slice(&slot);
            }
        }
        out
    }

    pub fn pow(&self, a: &Element, mut e: u128) -> Element {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a unit, by residue inversion plus Newton lifting.
    pub fn inv(&self, a: &Element) -> Result<Element> {
        if self.valuation(a) != 0 {
            return Err(Error::NonUnit);
        }
        let rbar = self.residue_project(a);
        let x0 = self.lift_residue(&ResidueElement {
            field: rbar.field.clone(),
            coeffs: rbar.field.inv(&rbar.coeffs)?,
        });
        let mut x = x0;
        let two = self.int(2);
        for _ in 0..=self.0.s.ilog2() as usize + 1 {
            let ax = self.mul(a, &x);
            if ax == self.one() {
                return Ok(x);
            }
            x = self.mul(&x, &self.sub(&two, &ax));
        }
        if self.mul(a, &x) == self.one() {
            Ok(x)
        } else {
            Err(Error::Internal("inverse iteration failed to converge".into()))
        }
    }

    pub fn is_zero(&self, a: &Element) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_unit(&self, a: &Element) -> bool {
        self.valuation(a) == 0
    }

    /// Valuation: the first nonzero theta-adic digit; s for the zero element.
    pub fn valuation(&self, a: &Element) -> usize {
        assert_eq!(&a.ring, self, "ring mismatch");
        match self.0.family {
            Family::Unramified => {
                let mut min_v = self.0.s;
                for &c in &a.coeffs {
                    if c == 0 {
                        continue;
                    }
                    let mut v = 0usize;
                    let mut x = c;
                    while x % self.0.p == 0 {
                        x /= self.0.p;
                        v += 1;
                    }
                    min_v = min_v.min(v);
                    if min_v == 0 {
                        break;
                    }
                }
                min_v
            }
            Family::EqualChar => {
                let n = self.0.n;
                for t in 0..self.0.s {
                    if a.coeffs[t * n..(t + 1) * n].iter().any(|&c| c != 0) {
                        return t;
                    }
                }
                self.0.s
            }
        }
    }

    /// Degree: the last nonzero theta-adic digit; -infinity for zero.
    pub fn degree(&self, a: &Element) -> Degree {
        if self.is_zero(a) {
            return Degree::NegInfinity;
        }
        match self.0.family {
            Family::Unramified => {
                let digits = self.theta_adic(a);
                let last = digits
                    .iter()
                    .rposition(|d| !self.is_zero(d))
                    .expect("nonzero element has a nonzero digit");
                Degree::Finite(last)
            }
            Family::EqualChar => {
                let n = self.0.n;
                let last = (0..self.0.s)
                    .rev()
                    .find(|&t| a.coeffs[t * n..(t + 1) * n].iter().any(|&c| c != 0))
                    .expect("nonzero element has a nonzero block");
                Degree::Finite(last)
            }
        }
    }

    /// Canonical projection pi: R -> F_q.
    pub fn residue_project(&self, a: &Element) -> ResidueElement {
        assert_eq!(&a.ring, self, "ring mismatch");
        let coeffs = match self.0.family {
            Family::Unramified => a.coeffs.iter().map(|&c| c % self.0.p).collect(),
            Family::EqualChar => a.coeffs[..self.0.n].to_vec(),
        };
        ResidueElement {
            field: self.0.residue.clone(),
            coeffs,
        }
    }

    /// The coefficient-wise lift of a residue element (not Teichmuller).
    pub fn lift_residue(&self, r: &ResidueElement) -> Element {
        assert_eq!(r.field, self.0.residue, "residue field mismatch");
        match self.0.family {
            Family::Unramified => self.el(r.coeffs.clone()),
            Family::EqualChar => {
                let mut coeffs = vec![0; self.0.coeff_len];
                coeffs[..self.0.n].copy_from_slice(&r.coeffs);
                self.el(coeffs)
            }
        }
    }

    /// The Teichmuller lift: the unique b with b^q = b and pi(b) = r.
    pub fn teich_lift(&self, r: &ResidueElement) -> Element {
        let key = r.field.value(&r.coeffs);
        if let Some(c) = self.0.teich_by_residue.lock().unwrap().get(&key) {
            return self.el(c.clone());
        }
        let mut x = self.lift_residue(r);
        for _ in 0..self.0.s.saturating_sub(1) {
            x = self.pow(&x, self.0.q as u128);
        }
        debug_assert_eq!(self.pow(&x, self.0.q as u128), x);
        debug_assert_eq!(self.residue_project(&x).coeffs, r.coeffs);
        self.0
            .teich_by_residue
            .lock()
            .unwrap()
            .insert(key, x.coeffs.clone());
        x
    }

    /// The Teichmuller set Gamma(R), ordered by residue value. Size q.
    pub fn teichmuller_set(&self) -> Vec<Element> {
        let raw = self.0.teich_cache.get_or_init(|| {
            let field = &self.0.residue;
            field
                .elements()
                .map(|coeffs| {
                    self.teich_lift(&ResidueElement {
                        field: field.clone(),
                        coeffs,
                    })
                    .coeffs
                })
                .collect()
        });
        raw.iter().map(|c| self.el(c.clone())).collect()
    }

    pub fn is_teichmuller(&self, a: &Element) -> bool {
        self.pow(a, self.0.q as u128) == *a
    }

    /// Exact division by theta^t; requires valuation(a) >= t.
    pub fn exact_div_theta(&self, a: &Element, t: usize) -> Element {
        assert!(self.valuation(a) >= t, "exact_div_theta: valuation too small");
        if t == 0 {
            return a.clone();
        }
        match self.0.family {
            Family::Unramified => {
                let pt = self.0.p.pow(t as u32);
                self.el(a.coeffs.iter().map(|&c| c / pt).collect())
            }
            Family::EqualChar => {
                let n = self.0.n;
                let mut coeffs = vec![0; self.0.coeff_len];
                for dst in 0..self.0.s - t {
                    let src = dst + t;
                    coeffs[dst * n..(dst + 1) * n]
                        .copy_from_slice(&a.coeffs[src * n..(src + 1) * n]);
                }
                self.el(coeffs)
            }
        }
    }

    /// The theta-adic digits (gamma_0(a), ..., gamma_{s-1}(a)), each in Gamma(R).
    pub fn theta_adic(&self, a: &Element) -> Vec<Element> {
        assert_eq!(&a.ring, self, "ring mismatch");
        match self.0.family {
            Family::EqualChar => {
                // Blocks are already the digits (constants of F_q).
                let n = self.0.n;
                (0..self.0.s)
                    .map(|t| {
                        let mut coeffs = vec![0; self.0.coeff_len];
                        coeffs[..n].copy_from_slice(&a.coeffs[t * n..(t + 1) * n]);
                        self.el(coeffs)
                    })
                    .collect()
            }
            Family::Unramified => {
                let mut digits = Vec::with_capacity(self.0.s);
                let mut rem = a.clone();
                for _ in 0..self.0.s {
                    let d = self.teich_lift(&self.residue_project(&rem));
                    rem = self.exact_div_theta(&self.sub(&rem, &d), 1);
                    digits.push(d);
                }
                digits
            }
        }
    }

    /// Rebuild an element from theta-adic digits. Every digit must be in Gamma.
    pub fn from_theta_adic(&self, digits: &[Element]) -> Result<Element> {
        if digits.len() != self.0.s {
            return Err(Error::LengthMismatch {
                expected: self.0.s,
                got: digits.len(),
            });
        }
        let mut acc = self.zero();
        for (t, d) in digits.iter().enumerate() {
            if &d.ring != self {
                return Err(Error::RingMismatch);
            }
            if !self.is_teichmuller(d) {
                return Err(Error::NotTeichmuller);
            }
            acc = self.add(&acc, &self.mul(d, &self.theta_pow(t)));
        }
        Ok(acc)
    }

    /// sum_{t < v} gamma_t(a) theta^t: the canonical representative of
    /// a mod theta^v with degree < v.
    pub fn truncate_digits(&self, a: &Element, v: usize) -> Element {
        let digits = self.theta_adic(a);
        let mut acc = self.zero();
        for (t, d) in digits.iter().enumerate().take(v) {
            acc = self.add(&acc, &self.mul(d, &self.theta_pow(t)));
        }
        acc
    }

    /// Digit-wise e-th powering: a |-> sum gamma_t(a)^e theta^t.
    pub fn digit_power(&self, a: &Element, e: u64) -> Element {
        let digits = self.theta_adic(a);
        let powered: Vec<Element> = digits.iter().map(|d| self.pow(d, e as u128)).collect();
        let mut acc = self.zero();
        for (t, d) in powered.iter().enumerate() {
            acc = self.add(&acc, &self.mul(d, &self.theta_pow(t)));
        }
        acc
    }

    /// All ring elements, canonical odometer order, guarded.
    pub fn elements_guarded(&self, guard: u128) -> Result<Vec<Element>> {
        let size = self.size();
        if size > guard {
            return Err(Error::SizeGuardExceeded { size, guard });
        }
        let m = self.0.coeff_modulus;
        let len = self.0.coeff_len;
        let mut out = Vec::with_capacity(size as usize);
        let mut coeffs = vec![0u64; len];
        loop {
            out.push(self.el(coeffs.clone()));
            let mut i = 0;
            loop {
                if i == len {
                    return Ok(out);
                }
                coeffs[i] += 1;
                if coeffs[i] < m {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
        }
    }

    pub fn elements(&self) -> Result<Vec<Element>> {
        self.elements_guarded(DEFAULT_ENUM_GUARD)
    }

    pub fn random(&self, rng: &mut Rng) -> Element {
        let coeffs = (0..self.0.coeff_len)
            .map(|_| rng.below(self.0.coeff_modulus))
            .collect();
        self.el(coeffs)
    }

    pub fn random_unit(&self, rng: &mut Rng) -> Element {
        loop {
            let a = self.random(rng);
            if self.is_unit(&a) {
                return a;
            }
        }
    }

    /// Canonical total order key: coefficients, most significant first.
    pub fn value_key(&self, a: &Element) -> Vec<u64> {
        a.coeffs.iter().rev().copied().collect()
    }

    /// Parse the text form: a comma-separated canonical coefficient tuple
    /// (a bare integer for Z_{p^s}).
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        let coeffs: Vec<u64> = parts
            .iter()
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad coefficient `{t}`")))
            })
            .collect::<Result<_>>()?;
        if coeffs.len() == 1 && self.0.coeff_len > 1 {
            // Allow a bare integer as shorthand for the canonical image of Z.
            return Ok(self.int(coeffs[0] as i128));
        }
        self.element(coeffs)
    }

    /// Short human-readable ring name.
    pub fn name(&self) -> String {
        let p = self.0.p;
        let n = self.0.n;
        let s = self.0.s;
        match self.0.family {
            Family::Unramified => {
                if s == 1 {
                    format!("F{}", self.0.q)
                } else if n == 1 {
                    format!("Z{}", self.0.coeff_modulus)
                } else {
                    format!("GR({},{})", p.pow(s as u32), n)
                }
            }
            Family::EqualChar => {
                if s == 1 {
                    format!("F{}", self.0.q)
                } else {
                    format!("F{}[u]/u^{}", self.0.q, s)
                }
            }
        }
    }
}

impl Element {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.ring.add(self, other))
    }

    pub fn checked_mul(&self, other: &Element) -> Result<Element> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.ring.mul(self, other))
    }

    pub fn is_zero(&self) -> bool {
        self.ring.is_zero(self)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() == 1 {
            write!(f, "{}", self.coeffs[0])
        } else {
            let strs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
            write!(f, "{}", strs.join(","))
        }
    }
}

/// Hensel lift of a monic irreducible over F_p to the basic irreducible over
/// Z_{p^s} whose roots are Teichmuller elements (the unique monic divisor of
/// x^(p^deg) - x lifting the input).
pub fn hensel_lift_irreducible(p: u64, s: usize, gbar: &[u64]) -> Result<Vec<u64>> {
    let n = fp::fp_deg(gbar).ok_or(Error::ReducibleModulus)?;
    if s == 1 {
        return Ok(gbar.to_vec());
    }
    if n == 1 {
        // Root of x + c is -c; lift it to its Teichmuller representative.
        let zps = Ring::make(Family::Unramified, p, 1, s, Some(vec![0, 1]))?;
        let root = zps.int(-(gbar[0] as i128));
        let omega = {
            let mut x = root;
            for _ in 0..s - 1 {
                x = zps.pow(&x, p as u128);
            }
            x
        };
        let m = zps.0.coeff_modulus;
        return Ok(vec![(m - omega.coeffs[0]) % m, 1]);
    }
    // Work in the trivial lift T' = Z_{p^s}[x]/(gbar), find the Teichmuller
    // lift of the residue root, and multiply the p-power conjugates back out.
    let t = Ring::make(Family::Unramified, p, n, s, Some(gbar.to_vec()))?;
    let mut gen_coeffs = vec![0u64; n];
    gen_coeffs[1] = 1;
    let xbar = t.element(gen_coeffs)?;
    let mut omega = xbar;
    for _ in 0..s - 1 {
        omega = t.pow(&omega, t.q() as u128);
    }
    // conjugates under digit-wise p-powering
    let mut conj = Vec::with_capacity(n);
    let mut cur = omega;
    for _ in 0..n {
        conj.push(cur.clone());
        cur = t.digit_power(&cur, p);
    }
    // g(x) = prod (x - conj_j), coefficients in T'
    let mut poly = vec![t.one()]; // constant 1
    for c in &conj {
        // multiply by (x - c)
        let mut next = vec![t.zero(); poly.len() + 1];
        for (i, coeff) in poly.iter().enumerate() {
            next[i + 1] = t.add(&next[i + 1], coeff);
            next[i] = t.sub(&next[i], &t.mul(coeff, c));
        }
        poly = next;
    }
    // coefficients must lie in the prime subring
    let mut out = Vec::with_capacity(n + 1);
    for c in &poly {
        if c.coeffs[1..].iter().any(|&v| v != 0) {
            return Err(Error::Internal(
                "Hensel lift produced a non-rational coefficient".into(),
            ));
        }
        out.push(c.coeffs[0]);
    }
    // sanity: residue image is the input
    let back: Vec<u64> = out.iter().map(|&c| c % p).collect();
    if back != gbar {
        return Err(Error::Internal("Hensel lift does not reduce to input".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> Ring {
        Ring::make(Family::Unramified, 2, 1, 2, None).unwrap()
    }

    fn z8() -> Ring {
        Ring::make(Family::Unramified, 2, 1, 3, None).unwrap()
    }

    fn z9() -> Ring {
        Ring::make(Family::Unramified, 3, 1, 2, None).unwrap()
    }

    fn gr42() -> Ring {
        Ring::make(Family::Unramified, 2, 2, 2, None).unwrap()
    }

    fn f2u2() -> Ring {
        Ring::make(Family::EqualChar, 2, 1, 2, None).unwrap()
    }

    #[test]
    fn make_ring_validations() {
        assert_eq!(
            Ring::make(Family::Unramified, 4, 1, 2, None).unwrap_err(),
            Error::NotPrime(4)
        );
        // x^2 + 1 is reducible mod 2
        assert!(matches!(
            Ring::make(Family::Unramified, 2, 2, 2, Some(vec![1, 0, 1])),
            Err(Error::ReducibleModulus)
        ));
        assert!(matches!(
            Ring::make(Family::Unramified, 2, 2, 2, Some(vec![1, 1])),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn trivial_rings() {
        let z4 = z4();
        assert_eq!(z4.size(), 4);
        assert_eq!(z4.unit_count(), 2);
        assert_eq!(z4.name(), "Z4");
        let f2 = Ring::make(Family::Unramified, 2, 1, 1, None).unwrap();
        assert_eq!(f2.size(), 2);
        assert_eq!(f2.name(), "F2");
        let f2u2 = f2u2();
        assert_eq!(f2u2.size(), 4);
        assert_eq!(f2u2.theta().coeffs(), &[0, 1]);
        assert!(f2u2.mul(&f2u2.theta(), &f2u2.theta()).is_zero());
    }

    #[test]
    fn z4_arithmetic_examples() {
        let z4 = z4();
        let three = z4.int(3);
        assert_eq!(z4.add(&three, &three), z4.int(2));
        assert_eq!(z4.mul(&three, &three), z4.int(1));
        assert_eq!(z4.inv(&three).unwrap(), z4.int(3));
        assert_eq!(z4.inv(&z4.int(1)).unwrap(), z4.int(1));
        assert_eq!(z4.inv(&z4.int(2)), Err(Error::NonUnit));
    }

    #[test]
    fn ring_axioms_exhaustive_small() {
        for ring in [z4(), z9(), f2u2(), gr42()] {
            let all = ring.elements().unwrap();
            for a in &all {
                for b in &all {
                    assert_eq!(ring.add(a, b), ring.add(b, a));
                    assert_eq!(ring.mul(a, b), ring.mul(b, a));
                }
            }
            // spot-check associativity and distributivity on a slice
            for a in all.iter().take(6) {
                for b in all.iter().take(6) {
                    for c in all.iter().take(6) {
                        assert_eq!(
                            ring.mul(a, &ring.mul(b, c)),
                            ring.mul(&ring.mul(a, b), c)
                        );
                        assert_eq!(
                            ring.mul(a, &ring.add(b, c)),
                            ring.add(&ring.mul(a, b), &ring.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn teichmuller_sets_match_bruteforce() {
        // Independent oracle: solve b^q = b by exhaustion.
        for ring in [z4(), z9(), f2u2(), gr42()] {
            let q = ring.q() as u128;
            let mut expected: Vec<Element> = ring
                .elements()
                .unwrap()
                .into_iter()
                .filter(|b| ring.pow(b, q) == *b)
                .collect();
            expected.sort_by_key(|e| ring.residue_project(e).value());
            let got = ring.teichmuller_set();
            assert_eq!(got.len(), ring.q() as usize);
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn z4_teichmuller_is_01() {
        let z4 = z4();
        let g = z4.teichmuller_set();
        assert_eq!(g, vec![z4.int(0), z4.int(1)]);
    }

    #[test]
    fn gr42_teichmuller_group() {
        let gr = gr42();
        let g = gr.teichmuller_set().to_vec();
        assert_eq!(g.len(), 4);
        let nonzero: Vec<_> = g.iter().filter(|e| !e.is_zero()).collect();
        // the three nonzero elements form a cyclic group of order 3
        for e in &nonzero {
            assert_eq!(gr.pow(e, 3), gr.one());
        }
        assert!(nonzero.iter().any(|e| gr.pow(e, 1) != gr.one()));
    }

    #[test]
    fn theta_adic_examples() {
        let z4 = z4();
        let digits = z4.theta_adic(&z4.int(3));
        assert_eq!(digits, vec![z4.int(1), z4.int(1)]);
        let digits2 = z4.theta_adic(&z4.int(2));
        assert_eq!(digits2, vec![z4.int(0), z4.int(1)]);
        assert_eq!(z4.theta_adic(&z4.zero()), vec![z4.int(0), z4.int(0)]);
    }

    #[test]
    fn theta_adic_roundtrip_exhaustive() {
        for ring in [z4(), z8(), z9(), f2u2(), gr42()] {
            for a in ring.elements().unwrap() {
                let digits = ring.theta_adic(&a);
                assert!(digits.iter().all(|d| ring.is_teichmuller(d)));
                assert_eq!(ring.from_theta_adic(&digits).unwrap(), a);
            }
        }
    }

    #[test]
    fn from_theta_adic_rejects_bad_digits() {
        let z9 = z9();
        // 2 is not a Teichmuller element of Z9 (Gamma = {0, 1, 8})
        let digits = vec![z9.int(2), z9.int(0)];
        assert_eq!(z9.from_theta_adic(&digits), Err(Error::NotTeichmuller));
    }

    #[test]
    fn valuation_and_degree() {
        let z4 = z4();
        assert_eq!(z4.valuation(&z4.zero()), 2);
        assert_eq!(z4.degree(&z4.zero()), Degree::NegInfinity);
        assert_eq!(z4.valuation(&z4.int(2)), 1);
        assert_eq!(z4.degree(&z4.int(2)), Degree::Finite(1));
        assert_eq!(z4.valuation(&z4.int(3)), 0);
        assert_eq!(z4.degree(&z4.int(3)), Degree::Finite(1));
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }

    #[test]
    fn unit_criterion_exhaustive() {
        for ring in [z4(), z9(), f2u2(), gr42()] {
            for a in ring.elements().unwrap() {
                let unit = ring.is_unit(&a);
                assert_eq!(unit, ring.valuation(&a) == 0);
                assert_eq!(unit, !ring.residue_project(&a).is_zero());
                if unit {
                    let inv = ring.inv(&a).unwrap();
                    assert_eq!(ring.mul(&a, &inv), ring.one());
                } else {
                    assert_eq!(ring.inv(&a), Err(Error::NonUnit));
                }
            }
        }
    }

    #[test]
    fn ideal_chain_sizes() {
        for ring in [z4(), z8(), z9(), f2u2(), gr42()] {
            let all = ring.elements().unwrap();
            let q = ring.q() as u128;
            for t in 0..=ring.s() {
                let count = all.iter().filter(|a| ring.valuation(a) >= t).count() as u128;
                assert_eq!(count, q.pow((ring.s() - t) as u32));
            }
        }
    }

    #[test]
    fn theta_nilpotency() {
        for ring in [z4(), z8(), z9(), f2u2(), gr42()] {
            let s = ring.s();
            assert!(ring.theta_pow(s).is_zero());
            if s >= 1 {
                assert!(!ring.theta_pow(s - 1).is_zero());
            }
        }
    }

    #[test]
    fn residue_projection_is_homomorphism() {
        for ring in [z4(), z9(), f2u2(), gr42()] {
            let all = ring.elements().unwrap();
            for a in all.iter().take(16) {
                for b in all.iter().take(16) {
                    let pa = ring.residue_project(a);
                    let pb = ring.residue_project(b);
                    assert_eq!(
                        ring.residue_project(&ring.add(a, b)).coeffs,
                        pa.add(&pb).coeffs
                    );
                    assert_eq!(
                        ring.residue_project(&ring.mul(a, b)).coeffs,
                        pa.mul(&pb).coeffs
                    );
                }
            }
        }
    }

    #[test]
    fn hensel_modulus_of_gr43_divides_x7_minus_1() {
        // Canonical modulus of GR(4,3): residue x^3+x+1, and it must divide
        // x^7 - 1 over Z4 exactly.
        let g = hensel_lift_irreducible(2, 2, &[1, 1, 0, 1]).unwrap();
        assert_eq!(g.iter().map(|c| c % 2).collect::<Vec<_>>(), vec![1, 1, 0, 1]);
        // long division of x^7 - 1 by g over Z4
        let m = 4u64;
        let mut rem = vec![0u64; 8];
        rem[0] = m - 1; // -1
        rem[7] = 1;
        for d in (3..=7).rev() {
            let c = rem[d];
            if c == 0 {
                continue;
            }
            rem[d] = 0;
            for j in 0..3 {
                let sub = c * g[j] % m;
                rem[d - 3 + j] = (rem[d - 3 + j] + m - sub) % m;
            }
        }
        assert!(rem.iter().all(|&c| c == 0), "remainder {rem:?}");
    }

    #[test]
    fn gr43_modulus_fixed_value() {
        // The canonical basic irreducible cubic over Z4 is x^3+2x^2+x+3.
        let r = Ring::make(Family::Unramified, 2, 3, 2, None).unwrap();
        assert_eq!(r.modulus(), &[3, 1, 2, 1]);
    }

    #[test]
    fn text_roundtrip() {
        for ring in [z4(), gr42(), f2u2()] {
            for a in ring.elements().unwrap() {
                let s = a.to_string();
                assert_eq!(ring.parse_element(&s).unwrap(), a);
            }
        }
    }

    #[test]
    fn digit_power_is_additive_frobenius_for_p() {
        // digit-wise p-powering is a ring automorphism of GR(4,2)
        let gr = gr42();
        let all = gr.elements().unwrap();
        for a in &all {
            for b in &all {
                let fa = gr.digit_power(a, 2);
                let fb = gr.digit_power(b, 2);
                assert_eq!(gr.digit_power(&gr.add(a, b), 2), gr.add(&fa, &fb));
                assert_eq!(gr.digit_power(&gr.mul(a, b), 2), gr.mul(&fa, &fb));
            }
        }
    }
}
