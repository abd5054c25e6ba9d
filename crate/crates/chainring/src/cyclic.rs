//! Cyclic codes of length coprime to the residue characteristic.
//!
//! For gcd(ell, q) = 1 the splitting ring of x^ell - 1 is the unramified
//! extension S|R of degree m = ord_ell(q). The q-cyclotomic cosets modulo
//! ell index both the lifted factorization x^ell - 1 = prod Lambda_a over R
//! (computed as sigma-invariant coset products of (x - xi^j) over S) and the
//! orthogonal idempotents e_a of `R[x]/(x^ell - 1)`. Evaluation codes B_t(A)
//! with Vandermonde generator rows realize every Galois-invariant cyclic
//! code over S; their restrictions realize every cyclic code over R.

use crate::code::Code;
use crate::error::{Error, Result};
use crate::ext::Tower;
use crate::fp;
use crate::linalg::Mat;
use crate::poly::RingPoly;
use crate::ring::{Element, Ring, DEFAULT_ENUM_GUARD};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

// ---------------------------------------------------------------------------
// Cyclotomic cosets
// ---------------------------------------------------------------------------

/// The q-cyclotomic cosets modulo ell: orbits of multiplication by q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    pub ell: u64,
    pub q: u64,
    /// Sorted representatives (the smallest member of each orbit).
    pub reps: Vec<u64>,
    /// rep -> orbit in generation order (a, aq, aq^2, ...).
    pub cosets: BTreeMap<u64, Vec<u64>>,
}

impl CosetTable {
    pub fn size_of(&self, rep: u64) -> Result<usize> {
        self.cosets
            .get(&rep)
            .map(|c| c.len())
            .ok_or(Error::UnknownRepresentative { a: rep })
    }

    /// Representative of the coset containing a.
    pub fn rep_of(&self, a: u64) -> u64 {
        let a = a % self.ell;
        let mut smallest = a;
        let mut x = a;
        loop {
            x = x * self.q % self.ell;
            if x == a {
                return smallest;
            }
            smallest = smallest.min(x);
        }
    }
}

pub fn cyclotomic_cosets(ell: u64, q: u64) -> Result<CosetTable> {
    if ell == 0 {
        return Err(Error::Parse("ell must be >= 1".into()));
    }
    if fp::gcd_u64(ell, q % ell.max(1)) != 1 && ell > 1 {
        return Err(Error::NotCoprime { a: ell, b: q });
    }
    let mut seen = vec![false; ell as usize];
    let mut reps = Vec::new();
    let mut cosets = BTreeMap::new();
    for a in 0..ell {
        if seen[a as usize] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut x = a;
        loop {
            orbit.push(x);
            seen[x as usize] = true;
            x = x * q % ell;
            if x == a {
                break;
            }
        }
        reps.push(a);
        cosets.insert(a, orbit);
    }
    Ok(CosetTable {
        ell,
        q,
        reps,
        cosets,
    })
}

// ---------------------------------------------------------------------------
// Defining sets
// ---------------------------------------------------------------------------

/// A subset of {0, ..., ell-1} used as the exponent set of an evaluation
/// code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningSet {
    pub ell: u64,
    pub members: BTreeSet<u64>,
}

impl DefiningSet {
    pub fn new(ell: u64, members: impl IntoIterator<Item = u64>) -> Result<DefiningSet> {
        let members: BTreeSet<u64> = members.into_iter().collect();
        if members.iter().any(|&a| a >= ell) {
            return Err(Error::Parse(format!(
                "defining set member out of range 0..{ell}"
            )));
        }
        Ok(DefiningSet { ell, members })
    }

    pub fn empty(ell: u64) -> DefiningSet {
        DefiningSet {
            ell,
            members: BTreeSet::new(),
        }
    }

    pub fn all(ell: u64) -> DefiningSet {
        DefiningSet {
            ell,
            members: (0..ell).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: u64) -> bool {
        self.members.contains(&a)
    }

    /// uA = {ua mod ell}.
    pub fn multiples(&self, u: u64) -> DefiningSet {
        DefiningSet {
            ell: self.ell,
            members: self.members.iter().map(|a| a * u % self.ell).collect(),
        }
    }

    /// -A = {(ell - a) mod ell}.
    pub fn opposite(&self) -> DefiningSet {
        DefiningSet {
            ell: self.ell,
            members: self
                .members
                .iter()
                .map(|&a| (self.ell - a) % self.ell)
                .collect(),
        }
    }

    pub fn complement(&self) -> DefiningSet {
        DefiningSet {
            ell: self.ell,
            members: (0..self.ell).filter(|a| !self.members.contains(a)).collect(),
        }
    }

    pub fn union(&self, other: &DefiningSet) -> DefiningSet {
        DefiningSet {
            ell: self.ell,
            members: self.members.union(&other.members).copied().collect(),
        }
    }

    pub fn is_q_invariant(&self, q: u64) -> bool {
        self.multiples(q) == *self
    }

    /// The smallest q-invariant superset: the union of the cosets meeting A.
    pub fn q_closure(&self, table: &CosetTable) -> DefiningSet {
        let mut members = BTreeSet::new();
        for &a in &self.members {
            let rep = table.rep_of(a);
            members.extend(table.cosets[&rep].iter().copied());
        }
        DefiningSet {
            ell: self.ell,
            members,
        }
    }

    /// Every (w, u, v) with gcd(w, ell) = 1 presenting this set as the
    /// interval {wu, w(u+1), ..., w(u+v-1)} of length v = |A|.
    pub fn interval_presentations(&self) -> Vec<(u64, u64, u64)> {
        let ell = self.ell;
        let v = self.members.len() as u64;
        let mut out = Vec::new();
        if v == 0 {
            return out;
        }
        for w in (1..ell).filter(|&w| fp::gcd_u64(w, ell) == 1) {
            for u in 0..ell {
                let set: BTreeSet<u64> = (0..v).map(|i| w * ((u + i) % ell) % ell).collect();
                if set == self.members {
                    out.push((w, u, v));
                }
            }
        }
        out
    }

    pub fn is_interval(&self) -> bool {
        !self.interval_presentations().is_empty()
    }

    /// The longest interval contained in A, as (w, u, v); v = 0 when A is
    /// empty.
    pub fn longest_contained_interval(&self) -> (u64, u64, u64) {
        let ell = self.ell;
        let mut best = (1, 0, 0);
        for w in (1..ell.max(2)).filter(|&w| fp::gcd_u64(w, ell) == 1) {
            for u in 0..ell {
                let mut v = 0u64;
                while v < ell && self.members.contains(&(w * ((u + v) % ell) % ell)) {
                    v += 1;
                }
                if v > best.2 {
                    best = (w, u, v);
                }
            }
        }
        best
    }
}

impl fmt::Display for DefiningSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|a| a.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// The full set-calculus record for one defining set.
#[derive(Debug, Clone)]
pub struct SetCalculus {
    pub q_closure: DefiningSet,
    pub opposite: DefiningSet,
    pub complement: DefiningSet,
    pub is_q_invariant: bool,
    pub interval_presentations: Vec<(u64, u64, u64)>,
}

pub fn set_calculus(a: &DefiningSet, table: &CosetTable) -> SetCalculus {
    SetCalculus {
        q_closure: a.q_closure(table),
        opposite: a.opposite(),
        complement: a.complement(),
        is_q_invariant: a.is_q_invariant(table.q),
        interval_presentations: a.interval_presentations(),
    }
}

// ---------------------------------------------------------------------------
// Multi-indices
// ---------------------------------------------------------------------------

/// A map from coset representatives to scale exponents in {0, ..., s}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiIndex {
    pub exps: BTreeMap<u64, usize>,
}

impl MultiIndex {
    pub fn new(table: &CosetTable, s: usize, exps: BTreeMap<u64, usize>) -> Result<MultiIndex> {
        for &rep in &table.reps {
            match exps.get(&rep) {
                Some(&t) if t <= s => {}
                Some(_) => {
                    return Err(Error::Parse(format!(
                        "multi-index exponent out of range 0..={s}"
                    )))
                }
                None => return Err(Error::UnknownRepresentative { a: rep }),
            }
        }
        if exps.len() != table.reps.len() {
            let bad = exps
                .keys()
                .find(|a| !table.reps.contains(a))
                .copied()
                .unwrap_or(0);
            return Err(Error::UnknownRepresentative { a: bad });
        }
        Ok(MultiIndex { exps })
    }

    pub fn constant(table: &CosetTable, t: usize) -> MultiIndex {
        MultiIndex {
            exps: table.reps.iter().map(|&a| (a, t)).collect(),
        }
    }

    /// All (s+1)^u multi-indices, odometer order over sorted representatives.
    pub fn all(table: &CosetTable, s: usize) -> Vec<MultiIndex> {
        let u = table.reps.len();
        let mut out = Vec::new();
        let mut idx = vec![0usize; u];
        loop {
            out.push(MultiIndex {
                exps: table
                    .reps
                    .iter()
                    .zip(&idx)
                    .map(|(&a, &t)| (a, t))
                    .collect(),
            });
            let mut c = 0;
            loop {
                if c == u {
                    return out;
                }
                idx[c] += 1;
                if idx[c] <= s {
                    break;
                }
                idx[c] = 0;
                c += 1;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Cyclic context
// ---------------------------------------------------------------------------

/// Everything attached to (R, ell): the splitting tower, a primitive root,
/// the lifted factorization of x^ell - 1 and its idempotents.
#[derive(Debug, Clone)]
pub struct CyclicContext {
    ring: Ring,
    ell: u64,
    table: CosetTable,
    tower: Tower,
    base_tower: Tower,
    xi: Element,
    xi_pows: Vec<Element>,
    factors: BTreeMap<u64, RingPoly>,
    idempotents: BTreeMap<u64, RingPoly>,
}

impl CyclicContext {
    pub fn new(ring: &Ring, ell: u64) -> Result<CyclicContext> {
        Self::new_guarded(ring, ell, DEFAULT_ENUM_GUARD)
    }

    pub fn new_guarded(ring: &Ring, ell: u64, guard: u128) -> Result<CyclicContext> {
        let q = ring.q();
        let table = cyclotomic_cosets(ell, q)?;
        let m = fp::mult_order(q, ell)? as usize;
        // the splitting ring scan is bounded by its residue size
        let top_residue = (q as u128).checked_pow(m as u32).ok_or(
            Error::SizeGuardExceeded {
                size: u128::MAX,
                guard,
            },
        )?;
        if top_residue > guard {
            return Err(Error::SizeGuardExceeded {
                size: top_residue,
                guard,
            });
        }
        let tower = Tower::extend(ring, m)?;
        let base_tower = Tower::extend(ring, 1)?;
        let xi = tower.primitive_root(ell)?;
        let top = tower.top().clone();
        let mut xi_pows = Vec::with_capacity(ell as usize);
        let mut acc = top.one();
        for _ in 0..ell {
            xi_pows.push(acc.clone());
            acc = top.mul(&acc, &xi);
        }

        // Lambda_a = prod_{j in Z_a} (x - xi^j), coefficients pulled back to R
        let mut factors = BTreeMap::new();
        for (&rep, orbit) in &table.cosets {
            let mut prod = RingPoly::one(&top);
            for &j in orbit {
                prod = prod.mul(&RingPoly::x_minus(&top, &xi_pows[j as usize]));
            }
            let coeffs: Result<Vec<Element>> =
                prod.coeffs().iter().map(|c| tower.unembed(c)).collect();
            let coeffs = coeffs.map_err(|_| {
                Error::Internal("coset product has coefficients outside the base ring".into())
            })?;
            factors.insert(rep, RingPoly::new(ring, coeffs));
        }
        // the product of the lifted factors must be exactly x^ell - 1
        let mut prod = RingPoly::one(ring);
        for f in factors.values() {
            prod = prod.mul(f);
        }
        if prod != RingPoly::x_pow_minus_one(ring, ell as usize) {
            return Err(Error::Internal(
                "lifted factor product is not x^ell - 1".into(),
            ));
        }
        // residue images must be irreducible of the coset size
        let field = ring.residue_field();
        for (&rep, f) in &factors {
            let image = f.residue_image();
            if fp::fq_deg(field, &image) != Some(table.cosets[&rep].len()) {
                return Err(Error::Internal("residue factor has wrong degree".into()));
            }
            if !fp::fq_is_irreducible(field, &image)? {
                return Err(Error::Internal("residue factor is not irreducible".into()));
            }
        }

        // idempotents: Bezout over F_q, then Newton-lift e -> 3e^2 - 2e^3
        let xl_minus_1: Vec<Vec<u64>> = {
            let mut v = vec![field.zero(); ell as usize + 1];
            v[0] = field.neg(&field.one());
            v[ell as usize] = field.one();
            v
        };
        let mut idempotents = BTreeMap::new();
        for &rep in &table.reps {
            let lam = factors[&rep].residue_image();
            let (lam_hat, rem) = fp::fq_div_rem(field, &xl_minus_1, &lam)?;
            if !rem.is_empty() {
                return Err(Error::Internal("factor does not divide x^ell - 1".into()));
            }
            let (g, _, v) = fp::fq_ext_gcd(field, &lam, &lam_hat)?;
            if fp::fq_deg(field, &g) != Some(0) {
                return Err(Error::Internal("factor and cofactor are not coprime".into()));
            }
            let prod = fp::fq_mul(field, &v, &lam_hat);
            let ebar = fp::fq_div_rem(field, &prod, &xl_minus_1)?.1;
            // trivial lift, then quadratic idempotent refinement
            let mut e = RingPoly::new(
                ring,
                ebar.iter()
                    .map(|c| {
                        ring.lift_residue(&crate::ring::ResidueElement {
                            field: field.clone(),
                            coeffs: c.clone(),
                        })
                    })
                    .collect(),
            );
            let three = RingPoly::one(ring).scale(&ring.int(3));
            let two = RingPoly::one(ring).scale(&ring.int(2));
            let mut converged = false;
            for _ in 0..ring.s() + 3 {
                let e2 = e.mul_mod_cyclic(&e, ell as usize);
                if e2 == e {
                    converged = true;
                    break;
                }
                let e3 = e2.mul_mod_cyclic(&e, ell as usize);
                let t1 = three.mul_mod_cyclic(&e2, ell as usize);
                let t2 = two.mul_mod_cyclic(&e3, ell as usize);
                e = t1.sub(&t2);
            }
            if !converged {
                return Err(Error::Internal("idempotent lift did not converge".into()));
            }
            idempotents.insert(rep, e);
        }
        // idempotent axioms
        let mut total = RingPoly::zero(ring);
        for (&a, ea) in &idempotents {
            total = total.add(ea);
            for (&b, eb) in &idempotents {
                if a != b && !ea.mul_mod_cyclic(eb, ell as usize).is_zero() {
                    return Err(Error::Internal("idempotents are not orthogonal".into()));
                }
            }
        }
        if total != RingPoly::one(ring) {
            return Err(Error::Internal("idempotents do not sum to 1".into()));
        }

        Ok(CyclicContext {
            ring: ring.clone(),
            ell,
            table,
            tower,
            base_tower,
            xi,
            xi_pows,
            factors,
            idempotents,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }
    pub fn ell(&self) -> u64 {
        self.ell
    }
    pub fn table(&self) -> &CosetTable {
        &self.table
    }
    pub fn tower(&self) -> &Tower {
        &self.tower
    }
    /// The trivial tower used for codes over R.
    pub fn base_tower(&self) -> &Tower {
        &self.base_tower
    }
    pub fn xi(&self) -> &Element {
        &self.xi
    }
    pub fn factor(&self, rep: u64) -> Result<&RingPoly> {
        self.factors
            .get(&rep)
            .ok_or(Error::UnknownRepresentative { a: rep })
    }
    pub fn idempotent(&self, rep: u64) -> Result<&RingPoly> {
        self.idempotents
            .get(&rep)
            .ok_or(Error::UnknownRepresentative { a: rep })
    }
    pub fn factors(&self) -> &BTreeMap<u64, RingPoly> {
        &self.factors
    }
    pub fn idempotents(&self) -> &BTreeMap<u64, RingPoly> {
        &self.idempotents
    }

    /// The minimal cyclic code C_a generated by the idempotent e_a.
    pub fn minimal_code(&self, rep: u64) -> Result<Code> {
        let e = self.idempotent(rep)?;
        self.cyclic_code_from_poly(e)
    }

    /// The cyclic code over R generated by a polynomial (all shifts).
    pub fn cyclic_code_from_poly(&self, g: &RingPoly) -> Result<Code> {
        let ell = self.ell as usize;
        let mut rows = Vec::with_capacity(ell);
        let mut cur = g.clone();
        for _ in 0..ell {
            rows.push(cur.to_vector(ell));
            cur = cur.mul_mod_cyclic(&RingPoly::x_pow(&self.ring, 1), ell);
        }
        Code::from_generators(&self.base_tower, rows)
    }

    /// The chain C_a > theta C_a > ... > theta^s C_a = 0.
    pub fn subcode_chain(&self, rep: u64) -> Result<Vec<Code>> {
        let c = self.minimal_code(rep)?;
        let mut out = Vec::with_capacity(self.ring.s() + 1);
        for t in 0..=self.ring.s() {
            let theta_t = self.ring.theta_pow(t);
            let scaled = c.rsf().map(|e| self.ring.mul(e, &theta_t));
            out.push(Code::from_matrix(&self.base_tower, &scaled));
        }
        Ok(out)
    }

    /// The direct sum (+)_a theta^{t_a} C_a.
    pub fn code_from_multiindex(&self, mi: &MultiIndex) -> Result<Code> {
        let ell = self.ell as usize;
        let mut stacked: Option<Mat> = None;
        for (&rep, &t) in &mi.exps {
            let c = self.minimal_code(rep)?;
            let theta_t = self.ring.theta_pow(t);
            let scaled = c.rsf().map(|e| self.ring.mul(e, &theta_t));
            stacked = Some(match stacked {
                None => scaled,
                Some(acc) => acc.stack(&scaled)?,
            });
        }
        let m = stacked.unwrap_or_else(|| Mat::zero(&self.ring, 0, ell));
        Ok(Code::from_matrix(&self.base_tower, &m))
    }

    /// The Vandermonde generator matrix W_A with rows (xi^{j a})_j, a in A.
    pub fn eval_matrix(&self, a_set: &DefiningSet) -> Mat {
        let top = self.tower.top();
        let ell = self.ell as usize;
        let rows: Vec<Vec<Element>> = a_set
            .members
            .iter()
            .map(|&a| {
                (0..self.ell)
                    .map(|j| self.xi_pows[(j * a % self.ell) as usize].clone())
                    .collect()
            })
            .collect();
        let k = rows.len();
        Mat::new(top, k, ell, rows.into_iter().flatten().collect())
            .expect("eval rows share the length")
    }

    /// The evaluation code B_t(A) = theta^t B(A) over S.
    pub fn eval_code(&self, a_set: &DefiningSet, t: usize) -> Result<Code> {
        if a_set.ell != self.ell {
            return Err(Error::LengthMismatch {
                expected: self.ell as usize,
                got: a_set.ell as usize,
            });
        }
        if t > self.ring.s() {
            return Err(Error::Parse(format!("t out of range 0..={}", self.ring.s())));
        }
        let top = self.tower.top();
        let theta_t = top.theta_pow(t);
        let w = self.eval_matrix(a_set).map(|e| top.mul(e, &theta_t));
        let code = Code::from_matrix(&self.tower, &w);
        if t < self.ring.s() && code.rank() != a_set.len() {
            return Err(Error::Internal(
                "evaluation code rank differs from the defining set size".into(),
            ));
        }
        Ok(code)
    }

    /// The generator polynomial prod_{a in complement(A)} (x - xi^{-a}),
    /// verified to generate the same ideal as the evaluation code.
    pub fn generator_polynomial(&self, a_set: &DefiningSet) -> Result<RingPoly> {
        if a_set.is_empty() {
            return Err(Error::EmptyDefiningSet);
        }
        let top = self.tower.top().clone();
        let mut g = RingPoly::one(&top);
        for &a in &a_set.complement().members {
            let inv_exp = ((self.ell - a) % self.ell) as usize;
            g = g.mul(&RingPoly::x_minus(&top, &self.xi_pows[inv_exp]));
        }
        if g.degree() != Some(self.ell as usize - a_set.len()) {
            return Err(Error::Internal("generator polynomial degree mismatch".into()));
        }
        // ideal equality against the evaluation code
        let ell = self.ell as usize;
        let mut rows = Vec::with_capacity(ell);
        let mut cur = g.clone();
        for _ in 0..ell {
            rows.push(cur.to_vector(ell));
            cur = cur.mul_mod_cyclic(&RingPoly::x_pow(&top, 1), ell);
        }
        let ideal = Code::from_generators(&self.tower, rows)?;
        if ideal != self.eval_code(a_set, 0)? {
            return Err(Error::Internal(
                "generator polynomial ideal differs from the evaluation code".into(),
            ));
        }
        Ok(g)
    }

    /// Invariance record: Galois invariance of B_t(A) against q-invariance
    /// of A, plus the closure identity closure(B_t(A)) = B_t(q-closure(A)).
    pub fn invariance_and_closure(
        &self,
        a_set: &DefiningSet,
        t: usize,
    ) -> Result<InvarianceReport> {
        let code = self.eval_code(a_set, t)?;
        let galois_invariant = code.is_galois_invariant();
        let q_invariant = a_set.is_q_invariant(self.table.q);
        // at t = s the code is zero and invariant regardless of A
        let equivalence_asserted = t < self.ring.s();
        if equivalence_asserted && galois_invariant != q_invariant {
            return Err(Error::Internal(
                "Galois invariance does not match q-invariance".into(),
            ));
        }
        let closure = code.closure();
        let closure_eval = self.eval_code(&a_set.q_closure(&self.table), t)?;
        if closure != closure_eval {
            return Err(Error::Internal(
                "closure differs from the q-closure evaluation code".into(),
            ));
        }
        Ok(InvarianceReport {
            galois_invariant,
            q_invariant,
            equivalence_asserted,
            closure,
        })
    }

    /// The restriction pipelines for a q-invariant defining set:
    ///
    /// 1. the R-dual of the trace code of B_{s-t}(A);
    /// 2. the restriction of the S-dual of B_{s-t}(A);
    /// 3. the restriction of B_0(-complement(A)) + B_t(-A).
    ///
    /// All three are computed and must agree; the canonical result is
    /// returned.
    pub fn restricted_code(&self, a_set: &DefiningSet, t: usize) -> Result<RestrictionReport> {
        if !a_set.is_q_invariant(self.table.q) {
            return Err(Error::NotQInvariant);
        }
        let s = self.ring.s();
        if t > s {
            return Err(Error::Parse(format!("t out of range 0..={s}")));
        }
        let b = self.eval_code(a_set, s - t)?;
        let via_trace = b
            .trace_code()
            .dual(crate::code::DualForm::Euclidean)?;
        let via_dual_res = b.dual(crate::code::DualForm::Euclidean)?.restriction();
        let via_eval = {
            let free_part = self.eval_code(&a_set.complement().opposite(), 0)?;
            let torsion_part = self.eval_code(&a_set.opposite(), t)?;
            free_part.sum(&torsion_part)?.restriction()
        };
        if via_trace != via_dual_res || via_trace != via_eval {
            return Err(Error::Internal(
                "restriction pipelines disagree on a q-invariant set".into(),
            ));
        }
        // rank: full when the torsion part survives, l - |A| at t = s... the
        // A-components carry theta^t, so they vanish only at t = s.
        let expected_rank = if t < s {
            self.ell as usize
        } else {
            self.ell as usize - a_set.len()
        };
        if via_trace.rank() != expected_rank {
            return Err(Error::Internal(format!(
                "restricted code rank {} differs from expected {expected_rank}",
                via_trace.rank()
            )));
        }
        Ok(RestrictionReport {
            code: via_trace.clone(),
            via_trace_dual: via_trace,
            via_dual_restriction: via_dual_res,
            via_eval_restriction: via_eval,
        })
    }

    /// The three literal pipeline values
    /// (Tr(B_{s-t}(A))-dual, Res(B_t(A)-dual), Res(B_{s-t}(-complement(A))))
    /// without any agreement assertion; kept for the acceptance suite, which
    /// documents that this chain is inconsistent as stated.
    pub fn restricted_code_literal(
        &self,
        a_set: &DefiningSet,
        t: usize,
    ) -> Result<(Code, Code, Code)> {
        if !a_set.is_q_invariant(self.table.q) {
            return Err(Error::NotQInvariant);
        }
        let s = self.ring.s();
        let p1 = self
            .eval_code(a_set, s - t)?
            .trace_code()
            .dual(crate::code::DualForm::Euclidean)?;
        let p2 = self
            .eval_code(a_set, t)?
            .dual(crate::code::DualForm::Euclidean)?
            .restriction();
        let p3 = self
            .eval_code(&a_set.complement().opposite(), s - t)?
            .restriction();
        Ok((p1, p2, p3))
    }

    /// Res(B_{s-t}(-complement(A))): the restriction the BCH bound controls.
    pub fn bch_restriction(&self, a_set: &DefiningSet, t: usize) -> Result<Code> {
        let s = self.ring.s();
        if t > s {
            return Err(Error::Parse(format!("t out of range 0..={s}")));
        }
        Ok(self
            .eval_code(&a_set.complement().opposite(), s - t)?
            .restriction())
    }

    /// BCH bound check: the exact minimum weight of the restriction against
    /// the designed distance v + 1 for the longest interval contained in A.
    pub fn bch_check(&self, a_set: &DefiningSet, t: usize) -> Result<BchReport> {
        self.bch_check_guarded(a_set, t, 1 << 22)
    }

    pub fn bch_check_guarded(
        &self,
        a_set: &DefiningSet,
        t: usize,
        guard: u128,
    ) -> Result<BchReport> {
        let (w, u, v) = a_set.longest_contained_interval();
        let code = self.bch_restriction(a_set, t)?;
        let exact = if code.is_zero() {
            None
        } else {
            Some(code.min_weight_guarded(guard)?)
        };
        let designed = v as usize + 1;
        let holds = exact.map_or(true, |d| d >= designed);
        Ok(BchReport {
            interval: (w, u, v),
            is_interval: a_set.is_interval(),
            is_q_invariant: a_set.is_q_invariant(self.table.q),
            designed_distance: designed,
            exact_distance: exact,
            holds,
            code,
        })
    }

    /// The stacked generator matrix of B(t-underline)-dual: per coset, the
    /// rows theta^{s - t_a} W_{-Z_a}. Checked against the direct sum of
    /// evaluation codes and against the kernel dual of B(t-underline).
    pub fn multiindex_dual(&self, mi: &MultiIndex) -> Result<MultiindexDualReport> {
        let s = self.ring.s();
        let top = self.tower.top().clone();
        let ell = self.ell as usize;
        let mut stacked: Option<Mat> = None;
        let mut sum_code = Code::zero(&self.tower, ell);
        let mut primal = Code::zero(&self.tower, ell);
        for (&rep, &t_a) in &mi.exps {
            let z_a = DefiningSet::new(self.ell, self.table.cosets[&rep].iter().copied())?;
            let minus_z = z_a.opposite();
            let theta_pow = top.theta_pow(s - t_a);
            let w = self.eval_matrix(&minus_z).map(|e| top.mul(e, &theta_pow));
            stacked = Some(match stacked {
                None => w,
                Some(acc) => acc.stack(&w)?,
            });
            sum_code = sum_code.sum(&self.eval_code(&minus_z, s - t_a)?)?;
            primal = primal.sum(&self.eval_code(&z_a, t_a)?)?;
        }
        let stacked = stacked.unwrap_or_else(|| Mat::zero(&top, 0, ell));
        let stacked_code = Code::from_matrix(&self.tower, &stacked);
        if stacked_code != sum_code {
            return Err(Error::Internal(
                "stacked matrix does not span the coset sum".into(),
            ));
        }
        // independent check: it really is the Euclidean dual of B(t)
        let dual = primal.dual(crate::code::DualForm::Euclidean)?;
        if dual != stacked_code {
            return Err(Error::Internal(
                "stacked matrix does not span the dual of B(t)".into(),
            ));
        }
        let restriction = stacked_code.restriction();
        // rank: sum of coset sizes over the nonzero components
        let expected: usize = mi
            .exps
            .iter()
            .filter(|(_, &t_a)| t_a >= 1)
            .map(|(&rep, _)| self.table.cosets[&rep].len())
            .sum();
        if restriction.rank() != expected {
            return Err(Error::Internal(format!(
                "multiindex restriction rank {} differs from expected {expected}",
                restriction.rank()
            )));
        }
        Ok(MultiindexDualReport {
            stacked,
            dual_code: stacked_code,
            primal_code: primal,
            restriction,
        })
    }
}

/// Shift-closure test: a code is cyclic iff the cyclic shift of every RSF
/// row stays inside the code.
pub fn is_cyclic(code: &Code) -> bool {
    let ell = code.length();
    (0..code.rsf().nrows()).all(|i| {
        let row = code.rsf().row(i);
        let mut shifted = Vec::with_capacity(ell);
        shifted.push(row[ell - 1].clone());
        shifted.extend_from_slice(&row[..ell - 1]);
        code.contains(&shifted)
    })
}

#[derive(Debug, Clone)]
pub struct InvarianceReport {
    pub galois_invariant: bool,
    pub q_invariant: bool,
    /// false only in the degenerate t = s case, where the zero code is
    /// invariant for every A.
    pub equivalence_asserted: bool,
    pub closure: Code,
}

#[derive(Debug, Clone)]
pub struct RestrictionReport {
    pub code: Code,
    pub via_trace_dual: Code,
    pub via_dual_restriction: Code,
    pub via_eval_restriction: Code,
}

#[derive(Debug, Clone)]
pub struct BchReport {
    /// Longest interval contained in the defining set, as (w, u, v).
    pub interval: (u64, u64, u64),
    /// Whether the set itself is an interval.
    pub is_interval: bool,
    pub is_q_invariant: bool,
    pub designed_distance: usize,
    /// None for the zero code (the bound holds vacuously).
    pub exact_distance: Option<usize>,
    pub holds: bool,
    pub code: Code,
}

#[derive(Debug, Clone)]
pub struct MultiindexDualReport {
    pub stacked: Mat,
    pub dual_code: Code,
    pub primal_code: Code,
    pub restriction: Code,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DualForm;
    use crate::oracle;
    use crate::ring::Family;

    fn z4() -> Ring {
        Ring::make(Family::Unramified, 2, 1, 2, None).unwrap()
    }

    fn ctx_z4_7() -> CyclicContext {
        CyclicContext::new(&z4(), 7).unwrap()
    }

    #[test]
    fn coset_examples() {
        let t = cyclotomic_cosets(7, 2).unwrap();
        assert_eq!(t.reps, vec![0, 1, 3]);
        assert_eq!(t.cosets[&0], vec![0]);
        assert_eq!(t.cosets[&1], vec![1, 2, 4]);
        assert_eq!(t.cosets[&3], vec![3, 6, 5]);
        // q = 1 mod ell: singletons
        let t = cyclotomic_cosets(3, 4).unwrap();
        assert_eq!(t.reps, vec![0, 1, 2]);
        assert!(t.cosets.values().all(|c| c.len() == 1));
        // not coprime
        assert!(matches!(
            cyclotomic_cosets(6, 2),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn coset_sizes_partition() {
        for (ell, q) in [(7u64, 2u64), (13, 3), (15, 2), (9, 2)] {
            let t = cyclotomic_cosets(ell, q).unwrap();
            let total: usize = t.cosets.values().map(|c| c.len()).sum();
            assert_eq!(total, ell as usize);
            for (rep, orbit) in &t.cosets {
                assert_eq!(*rep, *orbit.iter().min().unwrap());
                // z_a = least t with a q^t = a
                let mut x = *rep;
                for _ in 0..orbit.len() {
                    x = x * q % ell;
                }
                assert_eq!(x, *rep);
            }
        }
    }

    #[test]
    fn context_z4_ell7() {
        let ctx = ctx_z4_7();
        assert_eq!(ctx.tower().m(), 3);
        let mut degs: Vec<usize> = ctx
            .factors()
            .values()
            .map(|f| f.degree().unwrap())
            .collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 3, 3]);
        // residue images are the F2 factors of x^7 + 1
        let images: BTreeSet<Vec<u64>> = ctx
            .factors()
            .values()
            .map(|f| f.residue_image().iter().map(|c| c[0]).collect())
            .collect();
        let expected: BTreeSet<Vec<u64>> = [
            vec![1, 1],          // x + 1
            vec![1, 1, 0, 1],    // x^3 + x + 1
            vec![1, 0, 1, 1],    // x^3 + x^2 + 1
        ]
        .into_iter()
        .collect();
        assert_eq!(images, expected);
    }

    #[test]
    fn context_trivial_ell1() {
        let ctx = CyclicContext::new(&z4(), 1).unwrap();
        assert_eq!(ctx.tower().m(), 1);
        let f = ctx.factor(0).unwrap();
        // x - 1
        assert_eq!(f.coeffs()[0], ctx.ring().int(3));
        assert!(f.is_monic());
        assert_eq!(ctx.idempotent(0).unwrap(), &RingPoly::one(ctx.ring()));
    }

    #[test]
    fn context_equalchar() {
        let f2u2 = Ring::make(Family::EqualChar, 2, 1, 2, None).unwrap();
        let ctx = CyclicContext::new(&f2u2, 7).unwrap();
        assert_eq!(ctx.table().reps, vec![0, 1, 3]);
        // the construction itself asserts the factorization and idempotent
        // axioms; spot-check one factor degree
        assert_eq!(ctx.factor(1).unwrap().degree(), Some(3));
    }

    #[test]
    fn minimal_codes_z4_ell7() {
        let ctx = ctx_z4_7();
        // C_0 is the repetition line
        let c0 = ctx.minimal_code(0).unwrap();
        assert_eq!(c0.rank(), 1);
        let all_ones: Vec<Element> = (0..7).map(|_| ctx.ring().one()).collect();
        assert!(c0.contains(&all_ones));
        // C_1 is free of rank 3 with 4^3 codewords
        let c1 = ctx.minimal_code(1).unwrap();
        assert_eq!(c1.rank(), 3);
        assert_eq!(c1.cardinality(), 64);
        assert_eq!(c1.code_type(), &[3, 0]);
        // chain: C_a > theta C_a > 0, strictly
        let chain = ctx.subcode_chain(1).unwrap();
        assert_eq!(chain.len(), 3);
        assert!(chain[2].is_zero());
        assert!(chain[1].is_subcode_of(&chain[0]));
        assert!(chain[2].is_subcode_of(&chain[1]));
        assert!(chain[0].cardinality() > chain[1].cardinality());
        assert!(chain[1].cardinality() > 1);
        assert!(matches!(
            ctx.minimal_code(2),
            Err(Error::UnknownRepresentative { a: 2 })
        ));
    }

    #[test]
    fn multiindex_extremes() {
        let ctx = ctx_z4_7();
        let zero = ctx
            .code_from_multiindex(&MultiIndex::constant(ctx.table(), 2))
            .unwrap();
        assert!(zero.is_zero());
        let full = ctx
            .code_from_multiindex(&MultiIndex::constant(ctx.table(), 0))
            .unwrap();
        assert_eq!(full.rank(), 7);
        assert_eq!(full.code_type(), &[7, 0]);
    }

    #[test]
    fn multiindex_bijection_distinct() {
        let ctx = ctx_z4_7();
        let all = MultiIndex::all(ctx.table(), 2);
        assert_eq!(all.len(), 27);
        let mut seen = BTreeSet::new();
        for mi in &all {
            let code = ctx.code_from_multiindex(mi).unwrap();
            assert!(is_cyclic(&code));
            let key = format!("{}", code.rsf());
            assert!(seen.insert(key), "multi-index map must be injective");
        }
    }

    #[test]
    fn eval_code_examples() {
        let ctx = ctx_z4_7();
        // A = {0}: repetition code over S
        let a0 = DefiningSet::new(7, [0]).unwrap();
        let b = ctx.eval_code(&a0, 0).unwrap();
        assert_eq!(b.rank(), 1);
        let ones: Vec<Element> = (0..7).map(|_| ctx.tower().top().one()).collect();
        assert!(b.contains(&ones));
        // A = everything: (S theta^t)^ell
        for t in 0..=2 {
            let b = ctx.eval_code(&DefiningSet::all(7), t).unwrap();
            let theta_t = ctx.tower().top().theta_pow(t);
            let expected = Code::from_matrix(
                ctx.tower(),
                &Mat::identity(ctx.tower().top(), 7).map(|e| ctx.tower().top().mul(e, &theta_t)),
            );
            assert_eq!(b, expected);
        }
        // every evaluation code is cyclic
        let a = DefiningSet::new(7, [1, 2, 4]).unwrap();
        let b = ctx.eval_code(&a, 0).unwrap();
        assert_eq!(b.rank(), 3);
        assert!(is_cyclic(&b));
    }

    #[test]
    fn genpoly_examples() {
        let ctx = ctx_z4_7();
        let top = ctx.tower().top().clone();
        // A = all -> g = 1
        let g = ctx.generator_polynomial(&DefiningSet::all(7)).unwrap();
        assert_eq!(g, RingPoly::one(&top));
        // A = {0} -> g = 1 + x + ... + x^6
        let g = ctx
            .generator_polynomial(&DefiningSet::new(7, [0]).unwrap())
            .unwrap();
        assert_eq!(g, RingPoly::new(&top, vec![top.one(); 7]));
        // A = {1,2,4}: degree 4, ideal equality is asserted in the call
        let g = ctx
            .generator_polynomial(&DefiningSet::new(7, [1, 2, 4]).unwrap())
            .unwrap();
        assert_eq!(g.degree(), Some(4));
        assert!(matches!(
            ctx.generator_polynomial(&DefiningSet::empty(7)),
            Err(Error::EmptyDefiningSet)
        ));
    }

    #[test]
    fn set_calculus_examples() {
        let table = cyclotomic_cosets(7, 2).unwrap();
        let a1 = DefiningSet::new(7, [1]).unwrap();
        assert_eq!(
            a1.q_closure(&table),
            DefiningSet::new(7, [1, 2, 4]).unwrap()
        );
        let a0 = DefiningSet::new(7, [0]).unwrap();
        assert_eq!(a0.opposite(), a0);
        let inv = DefiningSet::new(7, [1, 2, 4]).unwrap();
        assert!(inv.is_q_invariant(2));
        assert_eq!(inv.q_closure(&table), inv);
        // {0,2,4,6} is an interval with w = 2, u = 0, v = 4
        let iv = DefiningSet::new(7, [0, 2, 4, 6]).unwrap();
        let reps = iv.interval_presentations();
        assert!(reps.contains(&(2, 0, 4)));
        assert!(iv.is_interval());
        // longest interval inside {1,2,4} is {1,2} (or {2,4} scaled): v = 2
        let a = DefiningSet::new(7, [1, 2, 4]).unwrap();
        assert_eq!(a.longest_contained_interval().2, 2);
    }

    #[test]
    fn invariance_examples() {
        let ctx = ctx_z4_7();
        let r0 = ctx
            .invariance_and_closure(&DefiningSet::new(7, [0]).unwrap(), 0)
            .unwrap();
        assert!(r0.galois_invariant && r0.q_invariant);
        let r1 = ctx
            .invariance_and_closure(&DefiningSet::new(7, [1]).unwrap(), 0)
            .unwrap();
        assert!(!r1.galois_invariant && !r1.q_invariant);
        assert_eq!(
            r1.closure,
            ctx.eval_code(&DefiningSet::new(7, [1, 2, 4]).unwrap(), 0)
                .unwrap()
        );
        let r124 = ctx
            .invariance_and_closure(&DefiningSet::new(7, [1, 2, 4]).unwrap(), 0)
            .unwrap();
        assert!(r124.galois_invariant);
        assert_eq!(
            r124.closure,
            ctx.eval_code(&DefiningSet::new(7, [1, 2, 4]).unwrap(), 0)
                .unwrap()
        );
    }

    #[test]
    fn restriction_pipelines_agree() {
        let ctx = ctx_z4_7();
        for members in [vec![], vec![0], vec![1, 2, 4], vec![0, 1, 2, 4]] {
            let a = DefiningSet::new(7, members).unwrap();
            for t in 0..=2 {
                let report = ctx.restricted_code(&a, t).unwrap();
                assert_eq!(report.via_trace_dual, report.via_dual_restriction);
                assert_eq!(report.via_trace_dual, report.via_eval_restriction);
            }
        }
        assert!(matches!(
            ctx.restricted_code(&DefiningSet::new(7, [1]).unwrap(), 1),
            Err(Error::NotQInvariant)
        ));
    }

    #[test]
    fn eval_dual_two_term_formula() {
        // B_t(A)-dual = B_0(-complement(A)) + B_{s-t}(-A), checked against
        // the brute-force dual at ell = 3 over Z4 (splitting ring GR(4,2)):
        // the single-eval-code shortcut theta^{s-t} B(-complement(A)) fails
        // already at t = 0, which is why the restriction pipelines use the
        // two-term form.
        let ctx = CyclicContext::new(&z4(), 3).unwrap();
        let a = DefiningSet::new(3, [0]).unwrap();
        for t in 0..=2usize {
            let b = ctx.eval_code(&a, t).unwrap();
            let dual = b.dual(DualForm::Euclidean).unwrap();
            let two_term = ctx
                .eval_code(&a.complement().opposite(), 0)
                .unwrap()
                .sum(&ctx.eval_code(&a.opposite(), 2 - t).unwrap())
                .unwrap();
            assert_eq!(dual, two_term, "two-term dual at t = {t}");
            let brute = oracle::dual_set_guarded(b.rsf(), 1 << 16).unwrap();
            assert_eq!(oracle::span_set(dual.rsf()), brute);
            // the one-term shortcut differs at t = 0 (it collapses to zero)
            if t == 0 {
                let one_term = ctx
                    .eval_code(&a.complement().opposite(), 2 - t)
                    .unwrap();
                assert_ne!(dual, one_term);
            }
        }
    }

    #[test]
    fn bch_examples() {
        let ctx = ctx_z4_7();
        // A = {1,2,4} contains the interval {1,2}: designed distance 3
        let a = DefiningSet::new(7, [1, 2, 4]).unwrap();
        let report = ctx.bch_check(&a, 1).unwrap();
        assert_eq!(report.designed_distance, 3);
        assert!(report.holds);
        assert!(report.exact_distance.unwrap() >= 3);
        // the full interval of length 7 leaves only the zero code
        let report = ctx.bch_check(&DefiningSet::all(7), 1).unwrap();
        assert!(report.exact_distance.is_none());
        assert!(report.holds);
    }

    #[test]
    fn orthogonality_lemma_sampled() {
        // B(A) perp B(B) iff A and -B are disjoint
        let ctx = ctx_z4_7();
        let sets = [
            DefiningSet::new(7, [0]).unwrap(),
            DefiningSet::new(7, [1, 2]).unwrap(),
            DefiningSet::new(7, [3, 5, 6]).unwrap(),
            DefiningSet::new(7, [0, 1, 4]).unwrap(),
        ];
        let top = ctx.tower().top().clone();
        for a in &sets {
            for b in &sets {
                let wa = ctx.eval_matrix(a);
                let wb = ctx.eval_matrix(b);
                let prod = wa.mul(&wb.transpose()).unwrap();
                let orthogonal = prod.is_zero();
                let disjoint = a
                    .members
                    .intersection(&b.opposite().members)
                    .next()
                    .is_none();
                assert_eq!(orthogonal, disjoint, "A = {a}, B = {b}");
            }
        }
        let _ = top;
    }

    #[test]
    fn monotone_embedding() {
        let ctx = ctx_z4_7();
        let small = DefiningSet::new(7, [1, 2]).unwrap();
        let big = DefiningSet::new(7, [1, 2, 5]).unwrap();
        let bs = ctx.eval_code(&small, 0).unwrap();
        let bb = ctx.eval_code(&big, 0).unwrap();
        assert!(bs.is_subcode_of(&bb));
        let other = DefiningSet::new(7, [0, 3]).unwrap();
        let bo = ctx.eval_code(&other, 0).unwrap();
        assert!(!bs.is_subcode_of(&bo));
    }

    #[test]
    fn multiindex_dual_theorem() {
        let ctx = ctx_z4_7();
        // a mixed multi-index: t_0 = 1, t_1 = 0, t_3 = 2
        let mi = MultiIndex::new(
            ctx.table(),
            2,
            [(0u64, 1usize), (1, 0), (3, 2)].into_iter().collect(),
        )
        .unwrap();
        let report = ctx.multiindex_dual(&mi).unwrap();
        // rank of the restriction: z_0 + z_1 = 1 + 3 (cosets with t_a >= 1)
        assert_eq!(report.restriction.rank(), 4);
        // the restriction realizes the multi-index s - t_a on the R side
        let mirrored = MultiIndex::new(
            ctx.table(),
            2,
            [(0u64, 1usize), (1, 2), (3, 0)].into_iter().collect(),
        )
        .unwrap();
        assert_eq!(
            report.restriction,
            ctx.code_from_multiindex(&mirrored).unwrap()
        );
    }

    #[test]
    fn is_cyclic_examples() {
        let ctx = ctx_z4_7();
        let rep = ctx.minimal_code(0).unwrap();
        assert!(is_cyclic(&rep));
        let t = ctx.base_tower();
        let not_cyclic = Code::from_generators(
            t,
            vec![vec![ctx.ring().one(), ctx.ring().zero()]],
        )
        .unwrap();
        assert!(!is_cyclic(&not_cyclic));
    }

    #[test]
    fn z9_and_z8_contexts() {
        let z9 = Ring::make(Family::Unramified, 3, 1, 2, None).unwrap();
        let ctx = CyclicContext::new(&z9, 2).unwrap();
        assert_eq!(ctx.tower().m(), 1);
        // x^2 - 1 = (x - 1)(x - 8) over Z9
        assert_eq!(ctx.factor(0).unwrap().coeffs()[0], z9.int(-1));
        assert_eq!(ctx.factor(1).unwrap().coeffs()[0], z9.int(-8));
        let z8 = Ring::make(Family::Unramified, 2, 1, 3, None).unwrap();
        let ctx8 = CyclicContext::new(&z8, 7).unwrap();
        assert_eq!(ctx8.tower().m(), 3);
        let mut degs: Vec<usize> = ctx8
            .factors()
            .values()
            .map(|f| f.degree().unwrap())
            .collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 3, 3]);
    }
}
