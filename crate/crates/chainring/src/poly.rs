//! Dense polynomials with chain ring coefficients, constant term first.

use crate::error::{Error, Result};
use crate::ring::{Element, Ring};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPoly {
    ring: Ring,
    coeffs: Vec<Element>,
}

impl RingPoly {
    pub fn new(ring: &Ring, coeffs: Vec<Element>) -> RingPoly {
        let mut p = RingPoly {
            ring: ring.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    pub fn zero(ring: &Ring) -> RingPoly {
        RingPoly {
            ring: ring.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> RingPoly {
        RingPoly {
            ring: ring.clone(),
            coeffs: vec![ring.one()],
        }
    }

    /// x^k
    pub fn x_pow(ring: &Ring, k: usize) -> RingPoly {
        let mut coeffs = vec![ring.zero(); k + 1];
        coeffs[k] = ring.one();
        RingPoly {
            ring: ring.clone(),
            coeffs,
        }
    }

    /// x - a
    pub fn x_minus(ring: &Ring, a: &Element) -> RingPoly {
        RingPoly {
            ring: ring.clone(),
            coeffs: vec![ring.neg(a), ring.one()],
        }
    }

    /// x^ell - 1
    pub fn x_pow_minus_one(ring: &Ring, ell: usize) -> RingPoly {
        let mut coeffs = vec![ring.zero(); ell + 1];
        coeffs[0] = ring.int(-1);
        coeffs[ell] = ring.one();
        RingPoly {
            ring: ring.clone(),
            coeffs,
        }
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Element {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| *c == self.ring.one())
    }

    pub fn add(&self, other: &RingPoly) -> RingPoly {
        let r = &self.ring;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| r.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        RingPoly::new(r, coeffs)
    }

    pub fn sub(&self, other: &RingPoly) -> RingPoly {
        let r = &self.ring;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| r.sub(&self.coeff(i), &other.coeff(i)))
            .collect();
        RingPoly::new(r, coeffs)
    }

    pub fn scale(&self, c: &Element) -> RingPoly {
        let r = &self.ring;
        RingPoly::new(r, self.coeffs.iter().map(|x| r.mul(x, c)).collect())
    }

    pub fn mul(&self, other: &RingPoly) -> RingPoly {
        let r = &self.ring;
        if self.is_zero() || other.is_zero() {
            return RingPoly::zero(r);
        }
        let mut coeffs = vec![r.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = r.add(&coeffs[i + j], &r.mul(a, b));
            }
        }
        RingPoly::new(r, coeffs)
    }

    /// Product reduced mod x^ell - 1 (indices wrap).
    pub fn mul_mod_cyclic(&self, other: &RingPoly, ell: usize) -> RingPoly {
        let r = &self.ring;
        let mut coeffs = vec![r.zero(); ell];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let k = (i + j) % ell;
                coeffs[k] = r.add(&coeffs[k], &r.mul(a, b));
            }
        }
        RingPoly::new(r, coeffs)
    }

    /// Division with remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &RingPoly) -> Result<(RingPoly, RingPoly)> {
        if !divisor.is_monic() {
            return Err(Error::Internal("division requires a monic divisor".into()));
        }
        let r = &self.ring;
        let db = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![r.zero(); rem.len().saturating_sub(db)];
        while rem.len() > db {
            let c = rem.last().unwrap().clone();
            let shift = rem.len() - 1 - db;
            if !c.is_zero() {
                quot[shift] = c.clone();
                for j in 0..=db {
                    let t = r.mul(&c, &divisor.coeffs[j]);
                    rem[shift + j] = r.sub(&rem[shift + j], &t);
                }
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
        }
        let mut rem_poly = RingPoly {
            ring: r.clone(),
            coeffs: rem,
        };
        rem_poly.trim();
        Ok((RingPoly::new(r, quot), rem_poly))
    }

    pub fn eval(&self, at: &Element) -> Element {
        let r = &self.ring;
        let mut acc = r.zero();
        for c in self.coeffs.iter().rev() {
            acc = r.add(&r.mul(&acc, at), c);
        }
        acc
    }

    /// Coefficient-wise map (e.g. a ring automorphism).
    pub fn map_coeffs(&self, f: impl Fn(&Element) -> Element) -> RingPoly {
        RingPoly::new(&self.ring, self.coeffs.iter().map(f).collect())
    }

    /// Residue image as an F_q polynomial (coefficient vectors).
    pub fn residue_image(&self) -> Vec<Vec<u64>> {
        self.coeffs
            .iter()
            .map(|c| self.ring.residue_project(c).coeffs)
            .collect()
    }

    /// Coefficient vector padded/truncated to a fixed width.
    pub fn to_vector(&self, width: usize) -> Vec<Element> {
        (0..width).map(|i| self.coeff(i)).collect()
    }

    pub fn from_vector(ring: &Ring, v: &[Element]) -> RingPoly {
        RingPoly::new(ring, v.to_vec())
    }
}

impl fmt::Display for RingPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let wrapped = if cs.contains(',') {
                format!("({cs})")
            } else {
                cs
            };
            match i {
                0 => parts.push(wrapped),
                1 => parts.push(format!("{wrapped}*x")),
                _ => parts.push(format!("{wrapped}*x^{i}")),
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Family;

    fn z4() -> Ring {
        Ring::make(Family::Unramified, 2, 1, 2, None).unwrap()
    }

    #[test]
    fn mul_and_divide() {
        let r = z4();
        let a = RingPoly::new(&r, vec![r.int(1), r.int(1)]); // 1 + x
        let b = RingPoly::new(&r, vec![r.int(3), r.int(1)]); // 3 + x
        let prod = a.mul(&b);
        // (1+x)(3+x) = 3 + 4x + x^2 = 3 + x^2 over Z4
        assert_eq!(prod, RingPoly::new(&r, vec![r.int(3), r.int(0), r.int(1)]));
        let (q, rem) = prod.div_rem_monic(&a).unwrap();
        assert_eq!(q, b);
        assert!(rem.is_zero());
    }

    #[test]
    fn cyclic_reduction() {
        let r = z4();
        let x3 = RingPoly::x_pow(&r, 3);
        let x2 = RingPoly::x_pow(&r, 2);
        // x^3 * x^2 = x^5 = x^2 mod x^3 - 1
        assert_eq!(x3.mul_mod_cyclic(&x2, 3), x2);
    }

    #[test]
    fn eval_horner() {
        let r = z4();
        let p = RingPoly::new(&r, vec![r.int(1), r.int(2), r.int(1)]); // 1+2x+x^2
        assert_eq!(p.eval(&r.int(3)), r.int(0)); // 1+6+9 = 16 = 0
    }

    #[test]
    fn x_pow_minus_one_division() {
        let r = z4();
        let f = RingPoly::x_pow_minus_one(&r, 7);
        let d = RingPoly::new(&r, vec![r.int(3), r.int(1)]); // x - 1 = x + 3
        let (q, rem) = f.div_rem_monic(&d).unwrap();
        assert!(rem.is_zero());
        // q = 1 + x + ... + x^6
        assert_eq!(q, RingPoly::new(&r, vec![r.int(1); 7]));
    }
}
