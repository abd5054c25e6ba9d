//! Brute-force reference implementations.
//!
//! Everything here enumerates; nothing here shares code with the fast paths
//! it is used to check. The verification suites and unit tests compare the
//! structured algorithms (row standard form, parity-check construction,
//! Galois operators, defining-set calculus) against these set-level
//! computations at desk scale.

use crate::error::{Error, Result};
use crate::ext::Tower;
use crate::linalg::Mat;
use crate::ring::{Element, Ring, DEFAULT_ENUM_GUARD};
use std::collections::BTreeSet;

/// Canonical set key of a vector: the coefficient matrix.
pub fn word_key(word: &[Element]) -> Vec<Vec<u64>> {
    word.iter().map(|e| e.coeffs().to_vec()).collect()
}

/// All vectors in R^len, odometer order. Guarded by |R|^len.
pub fn all_vectors(ring: &Ring, len: usize, guard: u128) -> Result<Vec<Vec<Element>>> {
    let total = ring
        .size()
        .checked_pow(len as u32)
        .ok_or(Error::SizeGuardExceeded {
            size: u128::MAX,
            guard,
        })?;
    if total > guard {
        return Err(Error::SizeGuardExceeded { size: total, guard });
    }
    let elems = ring.elements_guarded(guard)?;
    let mut out = Vec::with_capacity(total as usize);
    let mut idx = vec![0usize; len];
    loop {
        out.push(idx.iter().map(|&i| elems[i].clone()).collect());
        let mut c = 0;
        loop {
            if c == len {
                return Ok(out);
            }
            idx[c] += 1;
            if idx[c] < elems.len() {
                break;
            }
            idx[c] = 0;
            c += 1;
        }
    }
}

/// The full row span of a matrix as a set, by enumerating every coefficient
/// combination of the rows (independent of any canonical form).
pub fn span_set(m: &Mat) -> BTreeSet<Vec<Vec<u64>>> {
    span_set_guarded(m, DEFAULT_ENUM_GUARD).expect("span enumeration within guard")
}

pub fn span_set_guarded(m: &Mat, guard: u128) -> Result<BTreeSet<Vec<Vec<u64>>>> {
    let ring = m.ring();
    let k = m.nrows();
    let total = ring
        .size()
        .checked_pow(k as u32)
        .ok_or(Error::SizeGuardExceeded {
            size: u128::MAX,
            guard,
        })?;
    if total > guard {
        return Err(Error::SizeGuardExceeded { size: total, guard });
    }
    let elems = ring.elements_guarded(guard)?;
    let mut out = BTreeSet::new();
    if k == 0 {
        out.insert(word_key(&vec![ring.zero(); m.ncols()]));
        return Ok(out);
    }
    let mut idx = vec![0usize; k];
    loop {
        let mut word = vec![ring.zero(); m.ncols()];
        for (r, &i) in idx.iter().enumerate() {
            let c = &elems[i];
            for (j, w) in word.iter_mut().enumerate() {
                *w = ring.add(w, &ring.mul(c, m.at(r, j)));
            }
        }
        out.insert(word_key(&word));
        let mut c = 0;
        loop {
            if c == k {
                return Ok(out);
            }
            idx[c] += 1;
            if idx[c] < elems.len() {
                break;
            }
            idx[c] = 0;
            c += 1;
        }
    }
}

/// The Euclidean dual of the row span, by enumerating all vectors of the
/// ambient space and keeping those orthogonal to every row.
pub fn dual_set(g: &Mat) -> BTreeSet<Vec<Vec<u64>>> {
    dual_set_guarded(g, DEFAULT_ENUM_GUARD).expect("dual enumeration within guard")
}

pub fn dual_set_guarded(g: &Mat, guard: u128) -> Result<BTreeSet<Vec<Vec<u64>>>> {
    let ring = g.ring();
    let mut out = BTreeSet::new();
    for v in all_vectors(ring, g.ncols(), guard)? {
        let mut ok = true;
        for i in 0..g.nrows() {
            let mut acc = ring.zero();
            for (j, vj) in v.iter().enumerate() {
                acc = ring.add(&acc, &ring.mul(g.at(i, j), vj));
            }
            if !acc.is_zero() {
                ok = false;
                break;
            }
        }
        if ok {
            out.insert(word_key(&v));
        }
    }
    Ok(out)
}

/// Restriction set: codewords of the span whose coordinates all lie in the
/// embedded base ring, re-expressed over the base ring.
pub fn restriction_set(tower: &Tower, g: &Mat, guard: u128) -> Result<BTreeSet<Vec<Vec<u64>>>> {
    let mut out = BTreeSet::new();
    for word in span_set_guarded(g, guard)? {
        let elems: Vec<Element> = word
            .iter()
            .map(|c| tower.top().element(c.clone()).expect("valid coeffs"))
            .collect();
        let mut base_word = Vec::with_capacity(elems.len());
        let mut ok = true;
        for e in &elems {
            match tower.unembed(e) {
                Ok(b) => base_word.push(b),
                Err(_) => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            out.insert(word_key(&base_word));
        }
    }
    Ok(out)
}

/// Trace set: the coordinatewise trace image of the span, over the base ring.
pub fn trace_set(tower: &Tower, g: &Mat, guard: u128) -> Result<BTreeSet<Vec<Vec<u64>>>> {
    let mut out = BTreeSet::new();
    for word in span_set_guarded(g, guard)? {
        let traced: Vec<Element> = word
            .iter()
            .map(|c| {
                let e = tower.top().element(c.clone()).expect("valid coeffs");
                tower.trace(&e)
            })
            .collect();
        out.insert(word_key(&traced));
    }
    Ok(out)
}

/// Exact minimum Hamming weight of the nonzero span elements by enumeration.
pub fn min_weight_set(g: &Mat, guard: u128) -> Result<Option<usize>> {
    let span = span_set_guarded(g, guard)?;
    let zero_key: Vec<Vec<u64>> = (0..g.ncols())
        .map(|_| g.ring().zero().coeffs().to_vec())
        .collect();
    Ok(span
        .iter()
        .filter(|w| **w != zero_key)
        .map(|w| {
            w.iter()
                .filter(|c| c.iter().any(|&x| x != 0))
                .count()
        })
        .min())
}
