//! Matrices over a finite chain ring and the row standard form.
//!
//! The row standard form (RSF) is the Hermite-style canonical generator
//! matrix of the row module: pivots are exact powers theta^v placed at the
//! leftmost column of least valuation, pivot valuations increase weakly down
//! the matrix (pivot columns increase within a valuation class), entries
//! below a pivot are zero and entries above a pivot have theta-adic degree
//! below the pivot valuation. Row-equivalent matrices share one RSF, which
//! makes RSF equality a decision procedure for row-module equality.

use crate::error::{Error, Result};
use crate::ring::{Degree, Element, Ring};
use crate::rng::Rng;
use std::fmt;

/// A dense matrix over a chain ring, row major. `cols >= 1`; `rows` may be 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Element>,
}

impl Mat {
    pub fn new(ring: &Ring, rows: usize, cols: usize, entries: Vec<Element>) -> Result<Mat> {
        if cols == 0 {
            return Err(Error::DegreeMismatch {
                detail: "matrix must have at least one column".into(),
            });
        }
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        if entries.iter().any(|e| e.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Mat {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Element>>) -> Result<Mat> {
        let cols = rows.first().map(|r| r.len()).unwrap_or(1);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::LengthMismatch {
                expected: cols,
                got: rows.iter().map(|r| r.len()).find(|&l| l != cols).unwrap_or(0),
            });
        }
        let k = rows.len();
        Mat::new(ring, k, cols, rows.into_iter().flatten().collect())
    }

    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> Mat {
        Mat {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Mat {
        let mut m = Mat::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }
    pub fn nrows(&self) -> usize {
        self.rows
    }
    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Element {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Element) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Element] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<Element>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Stack vertically (same ring, same column count).
    pub fn stack(&self, other: &Mat) -> Result<Mat> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Mat::new(&self.ring, self.rows + other.rows, self.cols, entries)
    }

    pub fn map(&self, f: impl Fn(&Element) -> Element) -> Mat {
        Mat {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let r = &self.ring;
        let mut out = Mat::zero(r, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = r.zero();
                for t in 0..self.cols {
                    acc = r.add(&acc, &r.mul(self.at(i, t), other.at(t, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j).clone());
            }
        }
        out
    }

    /// Reorder columns: output column j is input column `perm[j]`.
    pub fn permute_cols(&self, perm: &[usize]) -> Mat {
        assert_eq!(perm.len(), self.cols);
        let mut out = Mat::zero(&self.ring, self.rows, self.cols);
        for i in 0..self.rows {
            for (j, &src) in perm.iter().enumerate() {
                out.set(i, j, self.at(i, src).clone());
            }
        }
        out
    }

    /// Inverse of `permute_cols` with the same permutation.
    pub fn unpermute_cols(&self, perm: &[usize]) -> Mat {
        assert_eq!(perm.len(), self.cols);
        let mut out = Mat::zero(&self.ring, self.rows, self.cols);
        for i in 0..self.rows {
            for (j, &dst) in perm.iter().enumerate() {
                out.set(i, dst, self.at(i, j).clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Pivot and valuation data
// ---------------------------------------------------------------------------

/// (valuation, pivot column) of a row: the minimum entry valuation and the
/// leftmost column attaining it. The zero row reports (s, 0) by convention.
pub fn row_pivot(ring: &Ring, row: &[Element]) -> (usize, usize) {
    let s = ring.s();
    let mut best_v = s;
    let mut best_c = 0;
    for (c, e) in row.iter().enumerate() {
        let v = ring.valuation(e);
        if v < best_v {
            best_v = v;
            best_c = c;
        }
    }
    (best_v, best_c)
}

/// The valuation function and pivot function of a matrix, row by row.
pub fn pivot_data(m: &Mat) -> Vec<(usize, usize)> {
    (0..m.nrows()).map(|i| row_pivot(m.ring(), m.row(i))).collect()
}

// ---------------------------------------------------------------------------
// Row standard form
// ---------------------------------------------------------------------------

/// First violated row-standard-form condition, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RsfViolation {
    /// A zero row is present (every RSF row carries a pivot theta^v, v < s).
    ZeroRow { row: usize },
    /// Rows are not sorted by strictly increasing (valuation, pivot column).
    NotOrdered { row: usize },
    /// The pivot entry is not exactly theta^v.
    PivotNotThetaPower { row: usize, col: usize },
    /// An entry has valuation below its row's pivot valuation.
    EntryBelowRowValuation { row: usize, col: usize },
    /// An entry above a pivot has theta-adic degree >= the pivot valuation.
    AboveNotReduced { row: usize, col: usize },
    /// An entry below a pivot is nonzero.
    BelowNotZero { row: usize, col: usize },
}

impl fmt::Display for RsfViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RsfViolation::ZeroRow { row } => write!(f, "row {row} is zero"),
            RsfViolation::NotOrdered { row } => write!(
                f,
                "row {row} breaks the increasing (valuation, pivot-column) order"
            ),
            RsfViolation::PivotNotThetaPower { row, col } => {
                write!(f, "pivot of row {row} at column {col} is not theta^v")
            }
            RsfViolation::EntryBelowRowValuation { row, col } => write!(
                f,
                "entry ({row},{col}) has valuation below the row pivot valuation"
            ),
            RsfViolation::AboveNotReduced { row, col } => write!(
                f,
                "entry ({row},{col}) above a pivot is not degree-reduced"
            ),
            RsfViolation::BelowNotZero { row, col } => {
                write!(f, "entry ({row},{col}) below a pivot is nonzero")
            }
        }
    }
}

/// Check the row-standard-form conditions; `None` means the matrix is in RSF.
/// The empty matrix (zero code) is in RSF by convention.
pub fn rsf_violation(m: &Mat) -> Option<RsfViolation> {
    let ring = m.ring();
    let s = ring.s();
    let pivots = pivot_data(m);
    // condition 1: increasing keys, no zero rows
    for i in 0..m.nrows() {
        let (v, c) = pivots[i];
        if v == s {
            return Some(RsfViolation::ZeroRow { row: i });
        }
        if i > 0 && pivots[i - 1] >= (v, c) {
            return Some(RsfViolation::NotOrdered { row: i });
        }
    }
    // condition 2: exact theta-power pivots, rows inside (theta^v S)^l
    for i in 0..m.nrows() {
        let (v, c) = pivots[i];
        if *m.at(i, c) != ring.theta_pow(v) {
            return Some(RsfViolation::PivotNotThetaPower { row: i, col: c });
        }
        for j in 0..m.ncols() {
            if ring.valuation(m.at(i, j)) < v {
                return Some(RsfViolation::EntryBelowRowValuation { row: i, col: j });
            }
        }
    }
    // condition 3: above-reduced, below-zero at every pivot column
    for i in 0..m.nrows() {
        let (v, c) = pivots[i];
        for t in 0..m.nrows() {
            if t == i {
                continue;
            }
            if t < i {
                if m.ring().degree(m.at(t, c)) >= Degree::Finite(v) {
                    return Some(RsfViolation::AboveNotReduced { row: t, col: c });
                }
            } else if !m.at(t, c).is_zero() {
                return Some(RsfViolation::BelowNotZero { row: t, col: c });
            }
        }
    }
    None
}

pub fn is_rsf(m: &Mat) -> bool {
    rsf_violation(m).is_none()
}

/// Elementary row operations, recorded in execution order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowOp {
    Swap(usize, usize),
    /// row <- unit * row
    Scale { row: usize, unit: Element },
    /// dst <- dst + coeff * src
    AddMul { dst: usize, src: usize, coeff: Element },
    /// trailing zero rows removed at the end
    DropZeroRows(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotInfo {
    pub row: usize,
    pub col: usize,
    pub valuation: usize,
}

/// Result of row standard form computation.
#[derive(Debug, Clone)]
pub struct RsfReport {
    /// The canonical matrix, zero rows removed.
    pub rsf: Mat,
    /// Elementary operations that transform the input into `rsf` followed by
    /// zero rows.
    pub transform: Vec<RowOp>,
    pub pivots: Vec<PivotInfo>,
}

/// Compute the unique row standard form of the row module of `m`.
pub fn row_standard_form(m: &Mat) -> RsfReport {
    let ring = m.ring().clone();
    let s = ring.s();
    let k = m.nrows();
    let cols = m.ncols();
    let mut rows = m.rows_vec();
    let mut ops = Vec::new();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut done = 0usize;

    loop {
        // select the unprocessed row with minimal (valuation, pivot column)
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, row) in rows.iter().enumerate().skip(done) {
            let (v, c) = row_pivot(&ring, row);
            if v == s {
                continue;
            }
            if best.map_or(true, |(bv, bc, _)| (v, c) < (bv, bc)) {
                best = Some((v, c, i));
            }
        }
        let Some((v, c, idx)) = best else { break };
        if idx != done {
            rows.swap(done, idx);
            ops.push(RowOp::Swap(done, idx));
        }
        // scale so the pivot becomes exactly theta^v
        let unit = ring.exact_div_theta(&rows[done][c], v);
        if unit != ring.one() {
            let uinv = ring.inv(&unit).expect("pivot cofactor is a unit");
            for e in rows[done].iter_mut() {
                *e = ring.mul(e, &uinv);
            }
            ops.push(RowOp::Scale {
                row: done,
                unit: uinv,
            });
        }
        debug_assert_eq!(rows[done][c], ring.theta_pow(v));
        // eliminate below the pivot
        for i in done + 1..k {
            let e = rows[i][c].clone();
            if e.is_zero() {
                continue;
            }
            let f = ring.exact_div_theta(&e, v);
            let coeff = ring.neg(&f);
            for j in 0..cols {
                let t = ring.mul(&f, &rows[done][j]);
                rows[i][j] = ring.sub(&rows[i][j], &t);
            }
            debug_assert!(rows[i][c].is_zero());
            ops.push(RowOp::AddMul {
                dst: i,
                src: done,
                coeff,
            });
        }
        pivots.push((v, c));
        done += 1;
    }

    // reduce entries above each pivot to degree < pivot valuation
    for i in 1..done {
        let (v, c) = pivots[i];
        for t in 0..i {
            let e = rows[t][c].clone();
            let keep = ring.truncate_digits(&e, v);
            let diff = ring.sub(&e, &keep);
            if diff.is_zero() {
                continue;
            }
            let f = ring.exact_div_theta(&diff, v);
            let coeff = ring.neg(&f);
            for j in 0..cols {
                let sub = ring.mul(&f, &rows[i][j]);
                rows[t][j] = ring.sub(&rows[t][j], &sub);
            }
            ops.push(RowOp::AddMul {
                dst: t,
                src: i,
                coeff,
            });
        }
    }

    if done < k {
        ops.push(RowOp::DropZeroRows(k - done));
    }
    rows.truncate(done);
    let rsf = Mat::new(&ring, done, cols, rows.into_iter().flatten().collect())
        .expect("rows share a width");
    debug_assert!(is_rsf(&rsf), "constructed matrix must satisfy RSF");
    let pivots = pivots
        .into_iter()
        .enumerate()
        .map(|(row, (valuation, col))| PivotInfo {
            row,
            col,
            valuation,
        })
        .collect();
    RsfReport {
        rsf,
        transform: ops,
        pivots,
    }
}

/// Replay a transform record against the original matrix (test support for
/// the RsfReport contract).
pub fn replay_transform(input: &Mat, ops: &[RowOp]) -> Mat {
    let ring = input.ring().clone();
    let cols = input.ncols();
    let mut rows = input.rows_vec();
    for op in ops {
        match op {
            RowOp::Swap(a, b) => rows.swap(*a, *b),
            RowOp::Scale { row, unit } => {
                for e in rows[*row].iter_mut() {
                    *e = ring.mul(e, unit);
                }
            }
            RowOp::AddMul { dst, src, coeff } => {
                let srcrow = rows[*src].clone();
                for (e, sv) in rows[*dst].iter_mut().zip(&srcrow) {
                    *e = ring.add(e, &ring.mul(coeff, sv));
                }
            }
            RowOp::DropZeroRows(n) => {
                for row in rows.iter().skip(rows.len() - n) {
                    assert!(row.iter().all(|e| e.is_zero()));
                }
                let keep = rows.len() - n;
                rows.truncate(keep);
            }
        }
    }
    let k = rows.len();
    Mat::new(&ring, k, cols, rows.into_iter().flatten().collect()).expect("rows share a width")
}

// ---------------------------------------------------------------------------
// Inverse
// ---------------------------------------------------------------------------

/// Inverse of a square matrix whose determinant is a unit.
pub fn mat_inverse(m: &Mat) -> Result<Mat> {
    if m.nrows() != m.ncols() {
        return Err(Error::DegreeMismatch {
            detail: "inverse requires a square matrix".into(),
        });
    }
    let ring = m.ring().clone();
    let n = m.nrows();
    let mut a = m.clone();
    let mut inv = Mat::identity(&ring, n);
    for col in 0..n {
        // find a unit pivot at or below the diagonal
        let pivot_row = (col..n)
            .find(|&i| ring.is_unit(a.at(i, col)))
            .ok_or(Error::NonUnitDeterminant)?;
        if pivot_row != col {
            for j in 0..n {
                let tmp = a.at(pivot_row, j).clone();
                a.set(pivot_row, j, a.at(col, j).clone());
                a.set(col, j, tmp);
                let tmp = inv.at(pivot_row, j).clone();
                inv.set(pivot_row, j, inv.at(col, j).clone());
                inv.set(col, j, tmp);
            }
        }
        let pinv = ring.inv(a.at(col, col))?;
        for j in 0..n {
            a.set(col, j, ring.mul(a.at(col, j), &pinv));
            inv.set(col, j, ring.mul(inv.at(col, j), &pinv));
        }
        for i in 0..n {
            if i == col || a.at(i, col).is_zero() {
                continue;
            }
            let f = a.at(i, col).clone();
            for j in 0..n {
                let t = ring.mul(&f, a.at(col, j));
                a.set(i, j, ring.sub(a.at(i, j), &t));
                let t = ring.mul(&f, inv.at(col, j));
                inv.set(i, j, ring.sub(inv.at(i, j), &t));
            }
        }
    }
    Ok(inv)
}

// ---------------------------------------------------------------------------
// Parity check construction (kernel dual)
// ---------------------------------------------------------------------------

/// Generator matrix of the Euclidean dual of the row module of `g`, which
/// must be in row standard form. Column-permutes to block standard form,
/// back-substitutes the standard parity rows, permutes back and
/// re-canonicalizes. Cardinality duality |row(G)|*|row(H)| = |S|^l is checked
/// by type arithmetic, and exhaustively when |S|^l <= 2^16.
pub fn kernel_dual(g: &Mat) -> Result<Mat> {
    if !is_rsf(g) {
        return Err(Error::NotRsfInput);
    }
    let ring = g.ring().clone();
    let s = ring.s();
    let k = g.nrows();
    let ell = g.ncols();
    let pivots = pivot_data(g);
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let vals: Vec<usize> = pivots.iter().map(|&(v, _)| v).collect();
    let mut perm: Vec<usize> = pivot_cols.clone();
    perm.extend((0..ell).filter(|c| !pivot_cols.contains(c)));
    let gp = g.permute_cols(&perm);
    // gp = [T | D] with T upper triangular, diag theta^{v_i}

    let mut dual_rows: Vec<Vec<Element>> = Vec::new();

    // one unit-pivot dual row per non-pivot column
    for cfree in k..ell {
        let mut x = vec![ring.zero(); ell];
        x[cfree] = ring.one();
        for i in (0..k).rev() {
            // theta^{v_i} x_i = -(D[i][cfree] + sum_{j>i} T[i][j] x_j)
            let mut rhs = ring.neg(gp.at(i, cfree));
            for j in i + 1..k {
                rhs = ring.sub(&rhs, &ring.mul(gp.at(i, j), &x[j]));
            }
            debug_assert!(ring.valuation(&rhs) >= vals[i]);
            x[i] = ring.exact_div_theta(&rhs, vals[i]);
        }
        dual_rows.push(x);
    }

    // one torsion dual row per pivot of positive valuation
    for i in 0..k {
        if vals[i] == 0 {
            continue;
        }
        let mut x = vec![ring.zero(); ell];
        x[i] = ring.theta_pow(s - vals[i]);
        for t in (0..i).rev() {
            let mut rhs = ring.zero();
            for j in t + 1..=i {
                rhs = ring.sub(&rhs, &ring.mul(gp.at(t, j), &x[j]));
            }
            debug_assert!(ring.valuation(&rhs) >= vals[t]);
            x[t] = ring.exact_div_theta(&rhs, vals[t]);
        }
        dual_rows.push(x);
    }

    let nh = dual_rows.len();
    let hp = Mat::new(&ring, nh, ell, dual_rows.into_iter().flatten().collect())
        .expect("dual rows share the ambient width");
    let h = hp.unpermute_cols(&perm);
    // orthogonality self-check
    if h.nrows() > 0 {
        let prod = g.mul(&h.transpose())?;
        if !prod.is_zero() {
            return Err(Error::Internal("parity construction not orthogonal".into()));
        }
    }
    let h = row_standard_form(&h).rsf;

    // cardinality duality check by type arithmetic
    let qm = ring.q() as u128;
    let log_g: u32 = vals.iter().map(|&v| (s - v) as u32).sum();
    let log_h: u32 = pivot_data(&h).iter().map(|&(v, _)| (s - v) as u32).sum();
    if log_g + log_h != (s * ell) as u32 {
        return Err(Error::Internal(format!(
            "cardinality duality violated: {log_g} + {log_h} != {}",
            s * ell
        )));
    }
    // exhaustive validation at desk scale
    if let Some(total) = qm.checked_pow((s * ell) as u32) {
        if total <= 1 << 16 {
            let ng = span_count(g);
            let nh = span_count(&h);
            if ng * nh != total {
                return Err(Error::Internal(
                    "exhaustive cardinality duality check failed".into(),
                ));
            }
        }
    }
    Ok(h)
}

/// Number of elements in the row span of an RSF matrix (via its type).
fn span_count(m: &Mat) -> u128 {
    let ring = m.ring();
    let q = ring.q() as u128;
    let s = ring.s();
    pivot_data(m)
        .iter()
        .map(|&(v, _)| q.pow((s - v) as u32))
        .product()
}

/// Membership of a vector in the row module of an RSF matrix, by greedy
/// pivot reduction.
pub fn rsf_contains(m: &Mat, word: &[Element]) -> bool {
    let ring = m.ring();
    debug_assert!(is_rsf(m));
    if word.len() != m.ncols() {
        return false;
    }
    let mut rem: Vec<Element> = word.to_vec();
    for (i, &(v, c)) in pivot_data(m).iter().enumerate() {
        let e = &rem[c];
        if e.is_zero() {
            continue;
        }
        if ring.valuation(e) < v {
            return false;
        }
        let f = ring.exact_div_theta(e, v);
        for j in 0..m.ncols() {
            let t = ring.mul(&f, m.at(i, j));
            rem[j] = ring.sub(&rem[j], &t);
        }
    }
    rem.iter().all(|e| e.is_zero())
}

/// A random invertible k x k matrix: a product of random elementary
/// operations applied to the identity.
pub fn random_invertible(ring: &Ring, k: usize, rng: &mut Rng) -> Mat {
    let mut m = Mat::identity(ring, k);
    if k == 0 {
        return m;
    }
    for _ in 0..2 * k + 2 {
        match rng.below(3) {
            0 => {
                let i = rng.below(k as u64) as usize;
                let u = ring.random_unit(rng);
                for j in 0..k {
                    m.set(i, j, ring.mul(m.at(i, j), &u));
                }
            }
            1 => {
                let i = rng.below(k as u64) as usize;
                let j = rng.below(k as u64) as usize;
                if i != j {
                    for c in 0..k {
                        let tmp = m.at(i, c).clone();
                        m.set(i, c, m.at(j, c).clone());
                        m.set(j, c, tmp);
                    }
                }
            }
            _ => {
                let i = rng.below(k as u64) as usize;
                let j = rng.below(k as u64) as usize;
                if i != j {
                    let f = ring.random(rng);
                    for c in 0..k {
                        let t = ring.mul(&f, m.at(j, c));
                        m.set(i, c, ring.add(m.at(i, c), &t));
                    }
                }
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::ring::Family;

    fn z4() -> Ring {
        Ring::make(Family::Unramified, 2, 1, 2, None).unwrap()
    }

    fn z9() -> Ring {
        Ring::make(Family::Unramified, 3, 1, 2, None).unwrap()
    }

    fn mat(ring: &Ring, rows: &[&[i128]]) -> Mat {
        Mat::from_rows(
            ring,
            rows.iter()
                .map(|r| r.iter().map(|&v| ring.int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn pivot_examples() {
        let z4 = z4();
        let m = mat(&z4, &[&[2, 2]]);
        assert_eq!(pivot_data(&m), vec![(1, 0)]);
        let m = mat(&z4, &[&[0, 0]]);
        assert_eq!(pivot_data(&m), vec![(2, 0)]);
        let m = mat(&z4, &[&[0, 1, 2]]);
        assert_eq!(pivot_data(&m), vec![(0, 1)]);
    }

    #[test]
    fn is_rsf_examples() {
        let z4 = z4();
        assert!(is_rsf(&Mat::identity(&z4, 2)));
        assert!(is_rsf(&mat(&z4, &[&[1, 1], &[0, 2]])));
        // valuation function decreasing
        let bad = mat(&z4, &[&[2, 0], &[1, 0]]);
        assert_eq!(
            rsf_violation(&bad),
            Some(RsfViolation::NotOrdered { row: 1 })
        );
        // zero rows are not RSF rows
        assert!(matches!(
            rsf_violation(&mat(&z4, &[&[1, 0], &[0, 0]])),
            Some(RsfViolation::ZeroRow { row: 1 })
        ));
        // pivot must be an exact theta power
        assert!(matches!(
            rsf_violation(&mat(&z4, &[&[3, 1]])),
            Some(RsfViolation::PivotNotThetaPower { .. })
        ));
    }

    #[test]
    fn rsf_drops_dependent_rows() {
        let z4 = z4();
        let m = mat(&z4, &[&[2, 2], &[1, 1]]);
        let report = row_standard_form(&m);
        assert_eq!(report.rsf, mat(&z4, &[&[1, 1]]));
        // oracle: both row spans enumerate to the same 4-element set
        let span_in = oracle::span_set(&m);
        let span_out = oracle::span_set(&report.rsf);
        assert_eq!(span_in.len(), 4);
        assert_eq!(span_in, span_out);
    }

    #[test]
    fn rsf_fixed_points() {
        let z4 = z4();
        let id = Mat::identity(&z4, 3);
        assert_eq!(row_standard_form(&id).rsf, id);
        let m = mat(&z4, &[&[1, 1], &[0, 2]]);
        assert_eq!(row_standard_form(&m).rsf, m);
    }

    #[test]
    fn rsf_idempotent_and_span_preserving() {
        let z4 = z4();
        let z9 = z9();
        let mut rng = Rng::new(42);
        for ring in [z4, z9] {
            for _ in 0..200 {
                let k = rng.range(1, 3) as usize;
                let c = rng.range(1, 4) as usize;
                let rows = (0..k)
                    .map(|_| (0..c).map(|_| ring.random(&mut rng)).collect())
                    .collect();
                let m = Mat::from_rows(&ring, rows).unwrap();
                let r1 = row_standard_form(&m).rsf;
                let r2 = row_standard_form(&r1).rsf;
                assert_eq!(r1, r2, "idempotence");
                assert_eq!(oracle::span_set(&m), oracle::span_set(&r1), "span");
            }
        }
    }

    #[test]
    fn rsf_unique_per_span_exhaustive_2x2_z4() {
        // all 256 2x2 matrices over Z4: row-span determines the RSF
        use std::collections::BTreeMap;
        let z4 = z4();
        let all = z4.elements().unwrap();
        let mut by_span: BTreeMap<Vec<Vec<Vec<u64>>>, Mat> = BTreeMap::new();
        for a in &all {
            for b in &all {
                for c in &all {
                    for d in &all {
                        let m = Mat::from_rows(
                            &z4,
                            vec![
                                vec![a.clone(), b.clone()],
                                vec![c.clone(), d.clone()],
                            ],
                        )
                        .unwrap();
                        let span: Vec<Vec<Vec<u64>>> = oracle::span_set(&m)
                            .into_iter()
                            .collect();
                        let rsf = row_standard_form(&m).rsf;
                        if let Some(prev) = by_span.get(&span) {
                            assert_eq!(prev, &rsf, "same span must give same RSF");
                        } else {
                            by_span.insert(span, rsf);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rsf_invariant_under_row_transforms() {
        let z4 = z4();
        let mut rng = Rng::new(7);
        for _ in 0..100 {
            let k = rng.range(1, 3) as usize;
            let c = rng.range(1, 4) as usize;
            let rows = (0..k)
                .map(|_| (0..c).map(|_| z4.random(&mut rng)).collect())
                .collect();
            let m = Mat::from_rows(&z4, rows).unwrap();
            let p = random_invertible(&z4, k, &mut rng);
            let pm = p.mul(&m).unwrap();
            assert_eq!(row_standard_form(&pm).rsf, row_standard_form(&m).rsf);
        }
    }

    #[test]
    fn transform_record_replays() {
        let z4 = z4();
        let mut rng = Rng::new(11);
        for _ in 0..50 {
            let rows = (0..3)
                .map(|_| (0..4).map(|_| z4.random(&mut rng)).collect())
                .collect();
            let m = Mat::from_rows(&z4, rows).unwrap();
            let report = row_standard_form(&m);
            let replayed = replay_transform(&m, &report.transform);
            assert_eq!(replayed, report.rsf);
        }
    }

    #[test]
    fn mat_inverse_examples() {
        let z4 = z4();
        let id = Mat::identity(&z4, 2);
        assert_eq!(mat_inverse(&id).unwrap(), id);
        let m = mat(&z4, &[&[1, 1], &[0, 1]]);
        let inv = mat_inverse(&m).unwrap();
        assert_eq!(inv, mat(&z4, &[&[1, 3], &[0, 1]]));
        assert_eq!(m.mul(&inv).unwrap(), id);
        assert_eq!(inv.mul(&m).unwrap(), id);
        let sing = mat(&z4, &[&[2, 0], &[0, 1]]);
        assert_eq!(mat_inverse(&sing), Err(Error::NonUnitDeterminant));
    }

    #[test]
    fn kernel_dual_examples() {
        let z4 = z4();
        // full space -> zero dual
        let full = Mat::identity(&z4, 2);
        let h = kernel_dual(&full).unwrap();
        assert_eq!(h.nrows(), 0);
        // span{(1,1)} -> span{(1,3)}
        let g = mat(&z4, &[&[1, 1]]);
        let h = kernel_dual(&g).unwrap();
        assert_eq!(h, mat(&z4, &[&[1, 3]]));
        // mixed type example
        let g = mat(&z4, &[&[1, 1], &[0, 2]]);
        let h = kernel_dual(&g).unwrap();
        assert_eq!(h, mat(&z4, &[&[2, 2]]));
    }

    #[test]
    fn kernel_dual_matches_bruteforce() {
        let z4 = z4();
        let z9 = z9();
        let mut rng = Rng::new(5);
        for ring in [z4, z9] {
            for _ in 0..60 {
                let k = rng.range(1, 3) as usize;
                let c = rng.range(1, 3) as usize;
                let rows = (0..k)
                    .map(|_| (0..c).map(|_| ring.random(&mut rng)).collect())
                    .collect();
                let g = row_standard_form(&Mat::from_rows(&ring, rows).unwrap()).rsf;
                let h = kernel_dual(&g).unwrap();
                let expected = oracle::dual_set(&g);
                let got = oracle::span_set(&h);
                assert_eq!(got, expected);
            }
        }
    }

    #[test]
    fn contains_agrees_with_enumeration() {
        let z4 = z4();
        let g = row_standard_form(&mat(&z4, &[&[1, 1]])).rsf;
        assert!(rsf_contains(&g, &[z4.int(3), z4.int(3)]));
        assert!(!rsf_contains(&g, &[z4.int(1), z4.int(2)]));
        assert!(rsf_contains(&g, &[z4.zero(), z4.zero()]));
        let mut rng = Rng::new(3);
        for _ in 0..40 {
            let rows = (0..2)
                .map(|_| (0..2).map(|_| z4.random(&mut rng)).collect())
                .collect();
            let g = row_standard_form(&Mat::from_rows(&z4, rows).unwrap()).rsf;
            let span = oracle::span_set(&g);
            for w in z4.elements().unwrap() {
                for w2 in z4.elements().unwrap() {
                    let word = vec![w.clone(), w2.clone()];
                    let key = oracle::word_key(&word);
                    assert_eq!(rsf_contains(&g, &word), span.contains(&key));
                }
            }
        }
    }

    #[test]
    fn rsf_commutes_with_automorphism() {
        // entrywise digit-power Frobenius on GR(4,2) commutes with RSF
        let gr = Ring::make(Family::Unramified, 2, 2, 2, None).unwrap();
        let mut rng = Rng::new(9);
        for _ in 0..60 {
            let rows = (0..2)
                .map(|_| (0..3).map(|_| gr.random(&mut rng)).collect())
                .collect();
            let m = Mat::from_rows(&gr, rows).unwrap();
            let fm = m.map(|e| gr.digit_power(e, 2));
            let lhs = row_standard_form(&fm).rsf;
            let rhs = row_standard_form(&m).rsf.map(|e| gr.digit_power(e, 2));
            assert_eq!(lhs, rhs);
        }
    }
}
