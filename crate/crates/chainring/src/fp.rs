//! Prime field and residue field arithmetic.
//!
//! A residue field F_q with q = p^n is represented as `F_p[x]/(f)` for a monic
//! irreducible f of degree n. Elements are coefficient vectors of length n
//! with entries reduced mod p, constant term first. The canonical order on
//! field elements is the base-p integer value of the coefficient vector,
//! most significant coefficient first.

use crate::error::{Error, Result};
use std::sync::Arc;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map_or(false, |sq| sq <= n) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization by trial division, as (prime, exponent) pairs.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.checked_mul(d).map_or(false, |sq| sq <= n) {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// Multiplicative order of q modulo ell (ell >= 1, gcd(q, ell) = 1).
pub fn mult_order(q: u64, ell: u64) -> Result<u64> {
    if ell == 0 || gcd_u64(q % ell.max(1), ell) != 1 && ell > 1 {
        return Err(Error::NotCoprime { a: ell, b: q });
    }
    if ell == 1 {
        return Ok(1);
    }
    let mut t = 1u64;
    let mut acc = q % ell;
    while acc != 1 {
        acc = acc * q % ell;
        t += 1;
        if t > ell {
            return Err(Error::Internal("order loop exceeded modulus".into()));
        }
    }
    Ok(t)
}

// ---------------------------------------------------------------------------
// Polynomials over F_p: dense coefficient vectors, constant term first.
// ---------------------------------------------------------------------------

pub fn fp_trim(c: &mut Vec<u64>) {
    while c.last() == Some(&0) {
        c.pop();
    }
}

pub fn fp_deg(c: &[u64]) -> Option<usize> {
    c.iter().rposition(|&x| x != 0)
}

pub fn fp_add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + y) % p;
    }
    fp_trim(&mut out);
    out
}

pub fn fp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    fp_trim(&mut out);
    out
}

pub fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let t = (x as u128 * y as u128 + out[i + j] as u128) % p as u128;
            out[i + j] = t as u64;
        }
    }
    fp_trim(&mut out);
    out
}

pub fn fp_inv_scalar(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    assert!(a % p != 0, "zero has no inverse mod p");
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// (quotient, remainder) of a / b over F_p. b must be nonzero.
pub fn fp_div_rem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = fp_deg(b).expect("division by zero polynomial");
    let lead_inv = fp_inv_scalar(b[db], p);
    let mut rem: Vec<u64> = a.to_vec();
    fp_trim(&mut rem);
    let mut quot = vec![0u64; rem.len().saturating_sub(db)];
    while let Some(dr) = fp_deg(&rem) {
        if dr < db {
            break;
        }
        let c = (rem[dr] as u128 * lead_inv as u128 % p as u128) as u64;
        let shift = dr - db;
        quot[shift] = c;
        for (j, &bj) in b.iter().enumerate().take(db + 1) {
            let t = (c as u128 * bj as u128) % p as u128;
            rem[shift + j] = ((rem[shift + j] as u128 + p as u128 - t) % p as u128) as u64;
        }
    }
    fp_trim(&mut quot);
    fp_trim(&mut rem);
    (quot, rem)
}

pub fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    fp_trim(&mut x);
    fp_trim(&mut y);
    while !y.is_empty() {
        let (_, r) = fp_div_rem(&x, &y, p);
        x = y;
        y = r;
    }
    // make monic
    if let Some(d) = fp_deg(&x) {
        let inv = fp_inv_scalar(x[d], p);
        for c in x.iter_mut() {
            *c = (*c as u128 * inv as u128 % p as u128) as u64;
        }
    }
    x
}

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
pub fn fp_ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    fp_trim(&mut r0);
    fp_trim(&mut r1);
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = fp_div_rem(&r0, &r1, p);
        let s = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    if let Some(d) = fp_deg(&r0) {
        let inv = fp_inv_scalar(r0[d], p);
        let scale = |v: &[u64]| -> Vec<u64> {
            v.iter()
                .map(|&c| (c as u128 * inv as u128 % p as u128) as u64)
                .collect()
        };
        return (scale(&r0), scale(&s0), scale(&t0));
    }
    (r0, s0, t0)
}

/// x^e mod f over F_p, by square and multiply. f must have degree >= 1.
pub fn fp_x_pow_mod(e: u128, f: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut base = vec![0u64, 1]; // x
    let (_, r) = fp_div_rem(&base, f, p);
    base = r;
    let mut exp = e;
    while exp > 0 {
        if exp & 1 == 1 {
            let t = fp_mul(&result, &base, p);
            result = fp_div_rem(&t, f, p).1;
        }
        let t = fp_mul(&base, &base, p);
        base = fp_div_rem(&t, f, p).1;
        exp >>= 1;
    }
    result
}

/// Irreducibility of a monic polynomial of degree n >= 1 over F_p.
///
/// f is irreducible iff x^(p^n) = x mod f and gcd(x^(p^(n/r)) - x, f) = 1
/// for every prime r dividing n.
pub fn fp_is_irreducible(f: &[u64], p: u64) -> bool {
    let n = match fp_deg(f) {
        Some(n) if n >= 1 => n,
        _ => return false,
    };
    let x = fp_div_rem(&[0, 1], f, p).1;
    let pn = (p as u128).checked_pow(n as u32);
    let pn = match pn {
        Some(v) => v,
        None => return false, // outside supported sizes
    };
    let xq = fp_x_pow_mod(pn, f, p);
    if fp_sub(&xq, &x, p) != Vec::<u64>::new() {
        return false;
    }
    for (r, _) in factor_u64(n as u64) {
        let e = (p as u128).pow((n as u64 / r) as u32);
        let xr = fp_x_pow_mod(e, f, p);
        let diff = fp_sub(&xr, &x, p);
        let g = fp_gcd(&diff, f, p);
        if fp_deg(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// The canonical monic irreducible of degree n over F_p: smallest coefficient
/// vector when read as a base-p integer, most significant coefficient first.
pub fn fp_canonical_irreducible(p: u64, n: usize) -> Vec<u64> {
    assert!(n >= 1);
    if n == 1 {
        // x is irreducible and has the smallest value.
        return vec![0, 1];
    }
    let total = (p as u128).checked_pow(n as u32).expect("degree too large");
    let mut k = 0u128;
    while k < total {
        // digits of k, base p, little endian -> coefficients c_0..c_{n-1}
        let mut f = Vec::with_capacity(n + 1);
        let mut v = k;
        for _ in 0..n {
            f.push((v % p as u128) as u64);
            v /= p as u128;
        }
        f.push(1); // monic
        if fp_is_irreducible(&f, p) {
            return f;
        }
        k += 1;
    }
    unreachable!("an irreducible of every degree exists over F_p");
}

// ---------------------------------------------------------------------------
// Residue fields F_q = F_p[x]/(f)
// ---------------------------------------------------------------------------

#[derive(Debug, PartialEq, Eq)]
pub struct ResidueField {
    pub p: u64,
    pub n: usize,
    /// Monic irreducible of degree n over F_p, constant term first.
    pub modulus: Vec<u64>,
    /// q = p^n
    pub q: u64,
}

pub type Field = Arc<ResidueField>;

impl ResidueField {
    pub fn new(p: u64, modulus: Vec<u64>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let n = fp_deg(&modulus).ok_or(Error::ReducibleModulus)?;
        if n < 1 || modulus[n] != 1 {
            return Err(Error::DegreeMismatch {
                detail: "field modulus must be monic of degree >= 1".into(),
            });
        }
        if !fp_is_irreducible(&modulus, p) {
            return Err(Error::ReducibleModulus);
        }
        let q = (p as u128)
            .checked_pow(n as u32)
            .filter(|&v| v <= u64::MAX as u128)
            .ok_or(Error::SizeGuardExceeded {
                size: u128::MAX,
                guard: u64::MAX as u128,
            })? as u64;
        Ok(Arc::new(ResidueField { p, n, modulus, q }))
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.n]
    }

    pub fn one(&self) -> Vec<u64> {
        let mut v = vec![0; self.n];
        v[0] = 1;
        v
    }

    pub fn is_zero(&self, a: &[u64]) -> bool {
        a.iter().all(|&c| c == 0)
    }

    fn fit(&self, a: Vec<u64>) -> Vec<u64> {
        let mut v = a;
        v.resize(self.n, 0);
        v
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.fit(fp_add(a, b, self.p))
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.fit(fp_sub(a, b, self.p))
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        self.fit(fp_sub(&[], a, self.p))
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let t = fp_mul(a, b, self.p);
        self.fit(fp_div_rem(&t, &self.modulus, self.p).1)
    }

    pub fn inv(&self, a: &[u64]) -> Result<Vec<u64>> {
        if self.is_zero(a) {
            return Err(Error::NonUnit);
        }
        let (g, u, _) = fp_ext_gcd(a, &self.modulus, self.p);
        if fp_deg(&g) != Some(0) {
            return Err(Error::Internal("non-invertible residue element".into()));
        }
        Ok(self.fit(fp_div_rem(&u, &self.modulus, self.p).1))
    }

    pub fn pow(&self, a: &[u64], mut e: u128) -> Vec<u64> {
        let mut acc = self.one();
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Base-p integer value of the coefficient vector; the canonical order.
    pub fn value(&self, a: &[u64]) -> u64 {
        let mut v = 0u64;
        for &c in a.iter().rev() {
            v = v * self.p + c;
        }
        v
    }

    /// Element with the given canonical value.
    pub fn from_value(&self, mut v: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    /// All field elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        (0..self.q).map(move |v| self.from_value(v))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: &[u64]) -> u64 {
        assert!(!self.is_zero(a));
        let group = self.q - 1;
        let mut ord = group;
        for (r, _) in factor_u64(group) {
            while ord % r == 0 && self.pow(a, (ord / r) as u128) == self.one() {
                ord /= r;
            }
        }
        ord
    }

    /// Smallest multiplicative generator of F_q^* in canonical order.
    pub fn generator(&self) -> Vec<u64> {
        let group = self.q - 1;
        if group == 1 {
            return self.one();
        }
        for v in 1..self.q {
            let a = self.from_value(v);
            if self.order(&a) == group {
                return a;
            }
        }
        unreachable!("F_q^* is cyclic");
    }

    /// Evaluate a polynomial with F_q coefficients at an F_q point.
    pub fn eval_poly(&self, poly: &[Vec<u64>], at: &[u64]) -> Vec<u64> {
        let mut acc = self.zero();
        for c in poly.iter().rev() {
            acc = self.mul(&acc, at);
            acc = self.add(&acc, c);
        }
        acc
    }

    /// Lift an F_p polynomial to F_q coefficients (constants).
    pub fn lift_fp_poly(&self, poly: &[u64]) -> Vec<Vec<u64>> {
        poly.iter().map(|&c| self.fit(vec![c % self.p])).collect()
    }
}

// ---------------------------------------------------------------------------
// Polynomials with F_q coefficients (for residue-level cyclic computations)
// ---------------------------------------------------------------------------

pub fn fq_trim(f: &ResidueField, c: &mut Vec<Vec<u64>>) {
    while c.last().map_or(false, |x| f.is_zero(x)) {
        c.pop();
    }
}

pub fn fq_deg(f: &ResidueField, c: &[Vec<u64>]) -> Option<usize> {
    c.iter().rposition(|x| !f.is_zero(x))
}

pub fn fq_add(f: &ResidueField, a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let mut out = vec![f.zero(); a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).cloned().unwrap_or_else(|| f.zero());
        let y = b.get(i).cloned().unwrap_or_else(|| f.zero());
        *o = f.add(&x, &y);
    }
    fq_trim(f, &mut out);
    out
}

pub fn fq_sub(f: &ResidueField, a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let mut out = vec![f.zero(); a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).cloned().unwrap_or_else(|| f.zero());
        let y = b.get(i).cloned().unwrap_or_else(|| f.zero());
        *o = f.sub(&x, &y);
    }
    fq_trim(f, &mut out);
    out
}

pub fn fq_mul(f: &ResidueField, a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = f.mul(x, y);
            out[i + j] = f.add(&out[i + j], &t);
        }
    }
    fq_trim(f, &mut out);
    out
}

pub fn fq_div_rem(
    f: &ResidueField,
    a: &[Vec<u64>],
    b: &[Vec<u64>],
) -> Result<(Vec<Vec<u64>>, Vec<Vec<u64>>)> {
    let db = fq_deg(f, b).ok_or_else(|| Error::Internal("division by zero poly".into()))?;
    let lead_inv = f.inv(&b[db])?;
    let mut rem: Vec<Vec<u64>> = a.to_vec();
    fq_trim(f, &mut rem);
    let mut quot = vec![f.zero(); rem.len().saturating_sub(db)];
    while let Some(dr) = fq_deg(f, &rem) {
        if dr < db {
            break;
        }
        let c = f.mul(&rem[dr], &lead_inv);
        let shift = dr - db;
        quot[shift] = c.clone();
        for (j, bj) in b.iter().enumerate().take(db + 1) {
            let t = f.mul(&c, bj);
            rem[shift + j] = f.sub(&rem[shift + j], &t);
        }
    }
    fq_trim(f, &mut quot);
    fq_trim(f, &mut rem);
    Ok((quot, rem))
}

/// x^e mod f over F_q.
pub fn fq_x_pow_mod(field: &ResidueField, e: u128, f: &[Vec<u64>]) -> Result<Vec<Vec<u64>>> {
    let x = vec![field.zero(), field.one()];
    let mut result = vec![field.one()];
    let mut base = fq_div_rem(field, &x, f)?.1;
    let mut exp = e;
    while exp > 0 {
        if exp & 1 == 1 {
            let t = fq_mul(field, &result, &base);
            result = fq_div_rem(field, &t, f)?.1;
        }
        let t = fq_mul(field, &base, &base);
        base = fq_div_rem(field, &t, f)?.1;
        exp >>= 1;
    }
    Ok(result)
}

pub fn fq_gcd(field: &ResidueField, a: &[Vec<u64>], b: &[Vec<u64>]) -> Result<Vec<Vec<u64>>> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    fq_trim(field, &mut x);
    fq_trim(field, &mut y);
    while !y.is_empty() {
        let (_, r) = fq_div_rem(field, &x, &y)?;
        x = y;
        y = r;
    }
    if let Some(d) = fq_deg(field, &x) {
        let inv = field.inv(&x[d])?;
        for c in x.iter_mut() {
            *c = field.mul(c, &inv);
        }
    }
    Ok(x)
}

/// Irreducibility of a monic polynomial over F_q.
pub fn fq_is_irreducible(field: &ResidueField, f: &[Vec<u64>]) -> Result<bool> {
    let n = match fq_deg(field, f) {
        Some(n) if n >= 1 => n,
        _ => return Ok(false),
    };
    let x = fq_div_rem(field, &[field.zero(), field.one()], f)?.1;
    let qn = (field.q as u128)
        .checked_pow(n as u32)
        .ok_or(Error::SizeGuardExceeded {
            size: u128::MAX,
            guard: u128::MAX,
        })?;
    let xq = fq_x_pow_mod(field, qn, f)?;
    if !fq_sub(field, &xq, &x).is_empty() {
        return Ok(false);
    }
    for (r, _) in factor_u64(n as u64) {
        let e = (field.q as u128).pow((n as u64 / r) as u32);
        let xr = fq_x_pow_mod(field, e, f)?;
        let diff = fq_sub(field, &xr, &x);
        let g = fq_gcd(field, &diff, f)?;
        if fq_deg(field, &g) != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Extended gcd over `F_q[x]`: (g, u, v) monic g with u*a + v*b = g.
pub fn fq_ext_gcd(
    f: &ResidueField,
    a: &[Vec<u64>],
    b: &[Vec<u64>],
) -> Result<(Vec<Vec<u64>>, Vec<Vec<u64>>, Vec<Vec<u64>>)> {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    fq_trim(f, &mut r0);
    fq_trim(f, &mut r1);
    let (mut s0, mut s1) = (vec![f.one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![f.one()]);
    while !r1.is_empty() {
        let (q, r) = fq_div_rem(f, &r0, &r1)?;
        let s = fq_sub(f, &s0, &fq_mul(f, &q, &s1));
        let t = fq_sub(f, &t0, &fq_mul(f, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    if let Some(d) = fq_deg(f, &r0) {
        let inv = f.inv(&r0[d])?;
        let scale = |v: &[Vec<u64>]| -> Vec<Vec<u64>> { v.iter().map(|c| f.mul(c, &inv)).collect() };
        return Ok((scale(&r0), scale(&s0), scale(&t0)));
    }
    Ok((r0, s0, t0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(13));
        assert!(!is_prime(1));
        assert!(!is_prime(4));
        assert!(!is_prime(91));
    }

    #[test]
    fn factoring() {
        assert_eq!(factor_u64(1), vec![]);
        assert_eq!(factor_u64(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factor_u64(7), vec![(7, 1)]);
        assert_eq!(factor_u64(728), vec![(2, 3), (7, 1), (13, 1)]);
    }

    #[test]
    fn orders() {
        assert_eq!(mult_order(2, 7).unwrap(), 3);
        assert_eq!(mult_order(3, 13).unwrap(), 3);
        assert_eq!(mult_order(2, 1).unwrap(), 1);
        assert!(mult_order(2, 6).is_err());
    }

    #[test]
    fn canonical_irreducibles() {
        // Degree 1 over any prime: x.
        assert_eq!(fp_canonical_irreducible(2, 1), vec![0, 1]);
        // The binary cubics: x^3+x+1 comes before x^3+x^2+1 in value order.
        assert_eq!(fp_canonical_irreducible(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(fp_canonical_irreducible(2, 2), vec![1, 1, 1]);
        // Over F_3 the smallest irreducible quadratic is x^2+1.
        assert_eq!(fp_canonical_irreducible(3, 2), vec![1, 0, 1]);
    }

    #[test]
    fn irreducibility() {
        assert!(fp_is_irreducible(&[1, 1, 1], 2)); // x^2+x+1
        assert!(!fp_is_irreducible(&[1, 0, 1], 2)); // x^2+1 = (x+1)^2
        assert!(fp_is_irreducible(&[1, 1, 0, 1], 2)); // x^3+x+1
        assert!(fp_is_irreducible(&[1, 0, 1, 1], 2)); // x^3+x^2+1
        assert!(!fp_is_irreducible(&[0, 1, 1], 2)); // x(x+1)
    }

    #[test]
    fn f4_arithmetic() {
        let f4 = ResidueField::new(2, vec![1, 1, 1]).unwrap();
        let w = f4.from_value(2); // x
        let w2 = f4.mul(&w, &w);
        assert_eq!(w2, f4.from_value(3)); // x^2 = x+1
        assert_eq!(f4.mul(&w, &w2), f4.one()); // x^3 = 1
        assert_eq!(f4.order(&w), 3);
        assert_eq!(f4.generator(), f4.from_value(2));
    }

    #[test]
    fn f8_generator_is_x() {
        let f8 = ResidueField::new(2, vec![1, 1, 0, 1]).unwrap();
        assert_eq!(f8.generator(), f8.from_value(2));
        assert_eq!(f8.order(&f8.from_value(2)), 7);
    }

    #[test]
    fn field_inverse() {
        let f9 = ResidueField::new(3, vec![1, 0, 1]).unwrap();
        for v in 1..9 {
            let a = f9.from_value(v);
            let inv = f9.inv(&a).unwrap();
            assert_eq!(f9.mul(&a, &inv), f9.one());
        }
        assert_eq!(f9.inv(&f9.zero()), Err(Error::NonUnit));
    }

    #[test]
    fn fq_poly_bezout() {
        // Over F_2: gcd(x+1, x^2+x+1) = 1 with Bezout witnesses.
        let f2 = ResidueField::new(2, vec![0, 1]).unwrap();
        let a = f2.lift_fp_poly(&[1, 1]);
        let b = f2.lift_fp_poly(&[1, 1, 1]);
        let (g, u, v) = fq_ext_gcd(&f2, &a, &b).unwrap();
        assert_eq!(fq_deg(&f2, &g), Some(0));
        let lhs = fq_add(&f2, &fq_mul(&f2, &u, &a), &fq_mul(&f2, &v, &b));
        assert_eq!(lhs, g);
    }
}
