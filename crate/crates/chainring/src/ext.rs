//! Unramified Galois extensions S|R of finite chain rings.
//!
//! S is the chain ring of the same family, characteristic and nilpotency
//! index as R with residue degree n*m. The base embeds through a root w of
//! its modulus inside S; the Frobenius generator sigma raises every
//! Teichmuller digit to the q-th power (q the base residue size) and fixes
//! exactly the embedded copy of R. The free basis is alpha = {1, y, ...,
//! y^(m-1)} for the canonical generator y of S, and the trace-dual basis
//! comes from inverting the Gram matrix (Tr(alpha_i alpha_j)).

use crate::error::{Error, Result};
use crate::fp;
use crate::linalg::{mat_inverse, Mat};
use crate::ring::{Element, Family, ResidueElement, Ring, DEFAULT_ENUM_GUARD};
use std::fmt;
use std::sync::Arc;

/// A divisor subgroup <sigma^d> of the Galois group, of order m/d.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Subgroup {
    pub d: usize,
    pub m: usize,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.m / self.d
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<sigma^{}> (order {})", self.d, self.order())
    }
}

/// A fixed subring Fix_S(<sigma^d>): an intermediate ring of S|R listed by
/// its elements, with a free base-ring basis extracted by enumeration.
#[derive(Debug, Clone)]
pub struct FixedSubring {
    pub d: usize,
    pub elements: Vec<Element>,
    pub basis: Vec<Element>,
}

#[derive(Debug)]
struct TowerInner {
    base: Ring,
    top: Ring,
    m: usize,
    /// images in S of the canonical coefficient basis of R
    embed_images: Vec<Element>,
    /// embedded image of the base ring generator
    w: Element,
    alpha: Vec<Element>,
    alpha_dual: Vec<Element>,
}

/// The extension S|R with its Frobenius, trace and bases. Cheap to clone.
#[derive(Debug, Clone)]
pub struct Tower(Arc<TowerInner>);

impl PartialEq for Tower {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.base == other.0.base && self.0.top == other.0.top && self.0.m == other.0.m)
    }
}
impl Eq for Tower {}

impl Tower {
    /// Construct the unramified degree-m extension of `base`.
    pub fn extend(base: &Ring, m: usize) -> Result<Tower> {
        if m == 0 {
            return Err(Error::DegreeMismatch {
                detail: "extension degree must be >= 1".into(),
            });
        }
        if m == 1 {
            // S = R with the identity embedding and trivial Galois group.
            let images: Vec<Element> = canonical_basis(base);
            let w = generator_element(base);
            return Ok(Tower(Arc::new(TowerInner {
                base: base.clone(),
                top: base.clone(),
                m,
                embed_images: images,
                w,
                alpha: vec![base.one()],
                alpha_dual: vec![base.one()],
            })));
        }
        // the embedding root search scans the top residue field
        let top_residue = (base.q() as u128).checked_pow(m as u32);
        match top_residue {
            Some(size) if size <= DEFAULT_ENUM_GUARD => {}
            _ => {
                return Err(Error::SizeGuardExceeded {
                    size: top_residue.unwrap_or(u128::MAX),
                    guard: DEFAULT_ENUM_GUARD,
                })
            }
        }
        let top = Ring::make(base.family(), base.p(), base.n() * m, base.s(), None)?;

        // Deterministic embedding root: the value-smallest root of the base
        // residue modulus inside the top residue field, Newton-lifted.
        let field = top.residue_field();
        let gbar: Vec<u64> = base.modulus().iter().map(|&c| c % base.p()).collect();
        let gbar_q = field.lift_fp_poly(&gbar);
        let mut root_bar = None;
        for cand in field.elements() {
            if field.is_zero(&field.eval_poly(&gbar_q, &cand)) {
                root_bar = Some(cand);
                break;
            }
        }
        let root_bar = root_bar.ok_or_else(|| {
            Error::Internal("base modulus has no root in the extension residue field".into())
        })?;
        let w0 = top.teich_lift(&ResidueElement {
            field: field.clone(),
            coeffs: root_bar,
        });
        let w = newton_root(&top, base.modulus(), w0)?;

        // embed images of the canonical base coefficients
        let embed_images = match base.family() {
            Family::Unramified => {
                let mut imgs = Vec::with_capacity(base.n());
                let mut acc = top.one();
                for _ in 0..base.n() {
                    imgs.push(acc.clone());
                    acc = top.mul(&acc, &w);
                }
                imgs
            }
            Family::EqualChar => {
                let mut imgs = Vec::with_capacity(base.coeff_len());
                for t in 0..base.s() {
                    let theta_t = top.theta_pow(t);
                    let mut acc = top.one();
                    for _ in 0..base.n() {
                        imgs.push(top.mul(&theta_t, &acc));
                        acc = top.mul(&acc, &w);
                    }
                }
                imgs
            }
        };

        // alpha = powers of the canonical top generator
        let y = generator_element(&top);
        let mut alpha = Vec::with_capacity(m);
        let mut acc = top.one();
        for _ in 0..m {
            alpha.push(acc.clone());
            acc = top.mul(&acc, &y);
        }

        let mut tower = Tower(Arc::new(TowerInner {
            base: base.clone(),
            top: top.clone(),
            m,
            embed_images,
            w,
            alpha: alpha.clone(),
            alpha_dual: Vec::new(),
        }));
        let dual = tower.compute_dual_basis()?;
        // rebuild with the dual basis attached
        tower = Tower(Arc::new(TowerInner {
            base: base.clone(),
            top,
            m,
            embed_images: tower.0.embed_images.clone(),
            w: tower.0.w.clone(),
            alpha,
            alpha_dual: dual,
        }));
        Ok(tower)
    }

    pub fn base(&self) -> &Ring {
        &self.0.base
    }
    pub fn top(&self) -> &Ring {
        &self.0.top
    }
    pub fn m(&self) -> usize {
        self.0.m
    }
    pub fn basis(&self) -> &[Element] {
        &self.0.alpha
    }
    pub fn dual_basis(&self) -> &[Element] {
        &self.0.alpha_dual
    }

    /// Is this the trivial tower S = R?
    pub fn is_trivial(&self) -> bool {
        self.0.m == 1
    }

    /// The Frobenius generator sigma: q-th power on Teichmuller digits.
    pub fn frobenius(&self, a: &Element) -> Element {
        self.frobenius_pow(a, 1)
    }

    /// sigma^j.
    pub fn frobenius_pow(&self, a: &Element, j: usize) -> Element {
        assert_eq!(a.ring(), self.top(), "ring mismatch");
        let j = j % self.0.m;
        if j == 0 {
            return a.clone();
        }
        let q = self.0.base.q();
        let mut e: u64 = 1;
        for _ in 0..j {
            e = e.checked_mul(q).expect("q^j fits in u64 for valid towers");
        }
        self.top().digit_power(a, e)
    }

    /// Embed a base element into S.
    pub fn embed(&self, a: &Element) -> Element {
        assert_eq!(a.ring(), self.base(), "ring mismatch");
        if self.is_trivial() {
            return a.clone();
        }
        let top = self.top();
        let mut acc = top.zero();
        for (k, &c) in a.coeffs().iter().enumerate() {
            if c == 0 {
                continue;
            }
            let scaled = top.mul(&self.0.embed_images[k], &top.int(c as i128));
            acc = top.add(&acc, &scaled);
        }
        acc
    }

    /// Express an element of the embedded base ring in base coordinates;
    /// errors if the element is outside the image.
    pub fn unembed(&self, a: &Element) -> Result<Element> {
        assert_eq!(a.ring(), self.top(), "ring mismatch");
        if self.is_trivial() {
            return Ok(a.clone());
        }
        let coords = solve_scalar_system(
            self.top(),
            &self.0.embed_images,
            a,
            self.0.base.p(),
        )?;
        let out = self.0.base.element(coords)?;
        // confirm (the solver checks residuals, this is a cheap belt)
        debug_assert_eq!(self.embed(&out), *a);
        Ok(out)
    }

    pub fn in_base_image(&self, a: &Element) -> bool {
        self.unembed(a).is_ok()
    }

    /// Trace Tr = sum of all sigma^j, landing in the base ring.
    pub fn trace(&self, a: &Element) -> Element {
        let t = self.trace_in_top(a);
        self.unembed(&t)
            .expect("trace lands in the embedded base ring")
    }

    /// The sum of conjugates before pulling back to base coordinates.
    pub fn trace_in_top(&self, a: &Element) -> Element {
        let top = self.top();
        let mut acc = a.clone();
        let mut conj = a.clone();
        for _ in 1..self.0.m {
            conj = self.frobenius(&conj);
            acc = top.add(&acc, &conj);
        }
        acc
    }

    /// Gram matrix (Tr(alpha_i alpha_j)) over the base ring.
    pub fn gram_matrix(&self) -> Mat {
        let m = self.0.m;
        let rows: Vec<Vec<Element>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        self.trace(&self.top().mul(&self.0.alpha[i], &self.0.alpha[j]))
                    })
                    .collect()
            })
            .collect();
        Mat::from_rows(self.base(), rows).expect("square gram matrix")
    }

    fn compute_dual_basis(&self) -> Result<Vec<Element>> {
        if self.is_trivial() {
            return Ok(vec![self.base().one()]);
        }
        let gram = self.gram_matrix();
        let inv = mat_inverse(&gram)
            .map_err(|_| Error::Internal("singular Gram matrix".into()))?;
        let top = self.top();
        let mut dual = Vec::with_capacity(self.0.m);
        for i in 0..self.0.m {
            let mut acc = top.zero();
            for j in 0..self.0.m {
                let c = self.embed(inv.at(i, j));
                acc = top.add(&acc, &top.mul(&c, &self.0.alpha[j]));
            }
            dual.push(acc);
        }
        Ok(dual)
    }

    /// Teichmuller lift into S (delegates to the top ring).
    pub fn teichmuller_lift(&self, r: &ResidueElement) -> Element {
        self.top().teich_lift(r)
    }

    /// Deterministic primitive ell-th root of unity in Gamma(S)*.
    pub fn primitive_root(&self, ell: u64) -> Result<Element> {
        let q = self.0.base.q();
        if ell == 0 || fp::gcd_u64(ell, q) != 1 {
            return Err(Error::NotCoprime { a: ell, b: q });
        }
        let group = (self.top().q() - 1) as u128;
        if ell as u128 == 0 || group % ell as u128 != 0 {
            return Err(Error::OrderUnavailable { ell, group });
        }
        let field = self.top().residue_field();
        let g = field.generator();
        let power = field.pow(&g, group / ell as u128);
        let xi = self.top().teich_lift(&ResidueElement {
            field: field.clone(),
            coeffs: power,
        });
        // order must be exactly ell
        if self.top().pow(&xi, ell as u128) != self.top().one() {
            return Err(Error::Internal("primitive root has wrong order".into()));
        }
        for (r, _) in fp::factor_u64(ell) {
            if self.top().pow(&xi, (ell / r) as u128) == self.top().one() {
                return Err(Error::Internal("primitive root has smaller order".into()));
            }
        }
        Ok(xi)
    }

    /// The divisor subgroup <sigma^d>.
    pub fn subgroup(&self, d: usize) -> Result<Subgroup> {
        if d == 0 || self.0.m % d != 0 {
            return Err(Error::InvalidSubgroup { d, m: self.0.m });
        }
        Ok(Subgroup { d, m: self.0.m })
    }

    /// Fix_S(<sigma^d>), enumerated at desk scale.
    pub fn fixed_ring(&self, h: &Subgroup) -> Result<FixedSubring> {
        self.fixed_ring_guarded(h, DEFAULT_ENUM_GUARD)
    }

    pub fn fixed_ring_guarded(&self, h: &Subgroup, guard: u128) -> Result<FixedSubring> {
        if h.m != self.0.m || self.0.m % h.d != 0 {
            return Err(Error::InvalidSubgroup { d: h.d, m: self.0.m });
        }
        let top = self.top();
        let elements: Vec<Element> = top
            .elements_guarded(guard)?
            .into_iter()
            .filter(|a| self.frobenius_pow(a, h.d) == *a)
            .collect();
        // The fixed ring is free of rank d over the base: a basis is a set of
        // d units whose residues are independent over the embedded residue
        // field. Greedy in canonical order.
        let base_elems = self.base().elements_guarded(guard)?;
        let field = top.residue_field();
        let scalar_residues: std::collections::BTreeSet<Vec<u64>> = base_elems
            .iter()
            .map(|b| top.residue_project(&self.embed(b)).coeffs)
            .collect();
        let mut basis: Vec<Element> = Vec::new();
        let mut res_span: std::collections::BTreeSet<Vec<u64>> =
            [field.zero()].into_iter().collect();
        for cand in &elements {
            if basis.len() == h.d {
                break;
            }
            if top.valuation(cand) != 0 {
                continue;
            }
            let r = top.residue_project(cand).coeffs;
            if res_span.contains(&r) {
                continue;
            }
            let mut grown = std::collections::BTreeSet::new();
            for old in &res_span {
                for s in &scalar_residues {
                    grown.insert(field.add(old, &field.mul(s, &r)));
                }
            }
            res_span = grown;
            basis.push(cand.clone());
        }
        // validate: the base-span of the basis is exactly the fixed set
        let mut span: std::collections::BTreeSet<Vec<u64>> =
            [top.zero().coeffs().to_vec()].into_iter().collect();
        for b in &basis {
            let mut grown = std::collections::BTreeSet::new();
            for old in &span {
                let old_el = top.element(old.clone()).expect("span coeffs valid");
                for r in &base_elems {
                    let add = top.mul(&self.embed(r), b);
                    grown.insert(top.add(&old_el, &add).coeffs().to_vec());
                }
            }
            span = grown;
        }
        if span.len() != elements.len()
            || !elements.iter().all(|e| span.contains(e.coeffs()))
        {
            return Err(Error::Internal(
                "fixed subring basis does not span the fixed set".into(),
            ));
        }
        Ok(FixedSubring {
            d: h.d,
            elements,
            basis,
        })
    }

    /// Stab_G(T): the largest subgroup fixing every element of T pointwise.
    pub fn stabilizer_of(&self, t: &FixedSubring) -> Subgroup {
        let m = self.0.m;
        let mut divisors: Vec<usize> = (1..=m).filter(|d| m % d == 0).collect();
        divisors.sort_unstable();
        for d in divisors {
            if t.elements.iter().all(|a| self.frobenius_pow(a, d) == *a) {
                return Subgroup { d, m };
            }
        }
        Subgroup { d: m, m }
    }

    /// Express an element of S in alpha-coordinates over the base ring.
    pub fn alpha_coordinates(&self, a: &Element) -> Result<Vec<Element>> {
        assert_eq!(a.ring(), self.top(), "ring mismatch");
        if self.is_trivial() {
            return Ok(vec![a.clone()]);
        }
        // columns: alpha_i * embed_image_k
        let top = self.top();
        let mut columns = Vec::with_capacity(self.0.m * self.0.embed_images.len());
        for alpha_i in &self.0.alpha {
            for img in &self.0.embed_images {
                columns.push(top.mul(alpha_i, img));
            }
        }
        let coords = solve_scalar_system(top, &columns, a, self.0.base.p())?;
        let lb = self.0.embed_images.len();
        (0..self.0.m)
            .map(|i| self.base().element(coords[i * lb..(i + 1) * lb].to_vec()))
            .collect()
    }

    /// Rebuild an element from alpha-coordinates.
    pub fn from_alpha_coordinates(&self, coords: &[Element]) -> Result<Element> {
        if coords.len() != self.0.m {
            return Err(Error::LengthMismatch {
                expected: self.0.m,
                got: coords.len(),
            });
        }
        let top = self.top();
        let mut acc = top.zero();
        for (i, c) in coords.iter().enumerate() {
            if c.ring() != self.base() {
                return Err(Error::RingMismatch);
            }
            acc = top.add(&acc, &top.mul(&self.embed(c), &self.0.alpha[i]));
        }
        Ok(acc)
    }
}

/// The canonical coefficient basis of a ring, as elements.
fn canonical_basis(ring: &Ring) -> Vec<Element> {
    (0..ring.coeff_len())
        .map(|k| {
            let mut coeffs = vec![0u64; ring.coeff_len()];
            coeffs[k] = 1;
            ring.element(coeffs).expect("basis vector valid")
        })
        .collect()
}

/// The canonical ring generator as an element (x-bar, or 1 when n = 1).
fn generator_element(ring: &Ring) -> Element {
    let mut coeffs = vec![0u64; ring.coeff_len()];
    if ring.n() >= 2 {
        coeffs[1] = 1;
    } else {
        coeffs[0] = 1;
    }
    ring.element(coeffs).expect("generator valid")
}

/// Newton-lift `start` to an exact root of the integer-coefficient monic
/// polynomial `modulus` (the base modulus, viewed in `ring`).
fn newton_root(ring: &Ring, modulus: &[u64], start: Element) -> Result<Element> {
    let eval = |x: &Element| -> Element {
        let mut acc = ring.zero();
        for &c in modulus.iter().rev() {
            acc = ring.add(&ring.mul(&acc, x), &ring.int(c as i128));
        }
        acc
    };
    let eval_deriv = |x: &Element| -> Element {
        let mut acc = ring.zero();
        for (i, &c) in modulus.iter().enumerate().skip(1).rev() {
            acc = ring.mul(&acc, x);
            acc = ring.add(&acc, &ring.mul(&ring.int(i as i128), &ring.int(c as i128)));
        }
        acc
    };
    let mut x = start;
    for _ in 0..=ring.s().ilog2() as usize + 2 {
        let fx = eval(&x);
        if fx.is_zero() {
            return Ok(x);
        }
        let dfx = eval_deriv(&x);
        let step = ring.mul(&fx, &ring.inv(&dfx)?);
        x = ring.sub(&x, &step);
    }
    if eval(&x).is_zero() {
        Ok(x)
    } else {
        Err(Error::Internal("Newton root lifting did not converge".into()))
    }
}

/// Solve sum_k c_k columns[k] = target for scalars c_k mod the coefficient
/// modulus, by Gaussian elimination with unit pivots. Errors with
/// RingMismatch when the target is outside the column span.
fn solve_scalar_system(
    ring: &Ring,
    columns: &[Element],
    target: &Element,
    p: u64,
) -> Result<Vec<u64>> {
    let rows = ring.coeff_len();
    let ncols = columns.len();
    let modulus = scalar_modulus(ring);
    // augmented matrix [E | v]
    let mut a = vec![vec![0u64; ncols + 1]; rows];
    for (k, col) in columns.iter().enumerate() {
        for (i, &c) in col.coeffs().iter().enumerate() {
            a[i][k] = c;
        }
    }
    for (i, &c) in target.coeffs().iter().enumerate() {
        a[i][ncols] = c;
    }
    let inv_mod = |x: u64| -> u64 {
        // inverse of a unit mod p^e by lifting the mod-p inverse
        let mut inv = fp::fp_inv_scalar(x % p, p);
        loop {
            let prod = mul_mod(x, inv, modulus);
            if prod == 1 {
                return inv;
            }
            // inv <- inv * (2 - x*inv)
            let two_minus = (2 + modulus - prod) % modulus;
            inv = mul_mod(inv, two_minus, modulus);
        }
    };
    let mut pivot_rows = vec![usize::MAX; ncols];
    let mut done = 0usize;
    for col in 0..ncols {
        let Some(pr) = (done..rows).find(|&i| a[i][col] % p != 0) else {
            continue;
        };
        a.swap(done, pr);
        let inv = inv_mod(a[done][col]);
        for x in a[done].iter_mut() {
            *x = mul_mod(*x, inv, modulus);
        }
        for i in 0..rows {
            if i == done || a[i][col] == 0 {
                continue;
            }
            let f = a[i][col];
            for j in 0..=ncols {
                let t = mul_mod(f, a[done][j], modulus);
                a[i][j] = (a[i][j] + modulus - t) % modulus;
            }
        }
        pivot_rows[col] = done;
        done += 1;
    }
    // back out the solution: columns without a unit pivot get coefficient 0;
    // then verify the residual is zero.
    let mut coords = vec![0u64; ncols];
    for (col, &prow) in pivot_rows.iter().enumerate() {
        if prow != usize::MAX {
            coords[col] = a[prow][ncols];
        }
    }
    // verify
    let mut acc = ring.zero();
    for (k, col) in columns.iter().enumerate() {
        if coords[k] == 0 {
            continue;
        }
        acc = ring.add(&acc, &ring.mul(col, &ring.int(coords[k] as i128)));
    }
    if acc != *target {
        return Err(Error::RingMismatch);
    }
    Ok(coords)
}

fn scalar_modulus(ring: &Ring) -> u64 {
    match ring.family() {
        Family::Unramified => ring.p().pow(ring.s() as u32),
        Family::EqualChar => ring.p(),
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;

    fn z4() -> Ring {
        Ring::make(Family::Unramified, 2, 1, 2, None).unwrap()
    }

    fn f2u2() -> Ring {
        Ring::make(Family::EqualChar, 2, 1, 2, None).unwrap()
    }

    fn gr43_tower() -> Tower {
        Tower::extend(&z4(), 3).unwrap()
    }

    #[test]
    fn extend_z4_cubic() {
        let t = gr43_tower();
        assert_eq!(t.top().n(), 3);
        assert_eq!(t.top().modulus(), &[3, 1, 2, 1]);
        // residue image is x^3 + x + 1
        let rbar: Vec<u64> = t.top().modulus().iter().map(|c| c % 2).collect();
        assert_eq!(rbar, vec![1, 1, 0, 1]);
        assert_eq!(t.m(), 3);
    }

    #[test]
    fn extend_trivial() {
        let z4 = z4();
        let t = Tower::extend(&z4, 1).unwrap();
        assert_eq!(t.top(), &z4);
        assert!(t.is_trivial());
        let a = z4.int(3);
        assert_eq!(t.frobenius(&a), a);
        assert_eq!(t.trace(&a), a);
    }

    #[test]
    fn extend_equalchar() {
        let t = Tower::extend(&f2u2(), 3).unwrap();
        assert_eq!(t.top().family(), Family::EqualChar);
        assert_eq!(t.top().n(), 3);
        assert_eq!(t.top().s(), 2);
        assert_eq!(t.top().size(), 64); // F8[u]/u^2
        // Frobenius acts coefficientwise: check it is an automorphism fixing
        // the embedded base.
        for a in t.base().elements().unwrap() {
            let e = t.embed(&a);
            assert_eq!(t.frobenius(&e), e);
        }
    }

    #[test]
    fn frobenius_is_automorphism() {
        let t = gr43_tower();
        let mut rng = Rng::new(17);
        let top = t.top().clone();
        for _ in 0..50 {
            let a = top.random(&mut rng);
            let b = top.random(&mut rng);
            assert_eq!(
                t.frobenius(&top.add(&a, &b)),
                top.add(&t.frobenius(&a), &t.frobenius(&b))
            );
            assert_eq!(
                t.frobenius(&top.mul(&a, &b)),
                top.mul(&t.frobenius(&a), &t.frobenius(&b))
            );
            assert_eq!(t.frobenius_pow(&a, t.m()), a, "sigma^m = id");
        }
    }

    #[test]
    fn frobenius_automorphism_exhaustive_small() {
        // exhaustive on towers with |S| <= 256
        for t in [
            Tower::extend(&z4(), 2).unwrap(),
            Tower::extend(&f2u2(), 2).unwrap(),
        ] {
            let top = t.top().clone();
            let all = top.elements().unwrap();
            assert!(top.size() <= 256);
            for a in &all {
                for b in &all {
                    assert_eq!(
                        t.frobenius(&top.add(a, b)),
                        top.add(&t.frobenius(a), &t.frobenius(b))
                    );
                    assert_eq!(
                        t.frobenius(&top.mul(a, b)),
                        top.mul(&t.frobenius(a), &t.frobenius(b))
                    );
                }
                assert_eq!(t.frobenius_pow(a, t.m()), *a);
                assert_eq!(t.trace(&t.frobenius(a)), t.trace(a));
            }
        }
    }

    #[test]
    fn frobenius_fixes_embedded_base() {
        let t = gr43_tower();
        for a in t.base().elements().unwrap() {
            let e = t.embed(&a);
            assert_eq!(t.frobenius(&e), e);
            assert_eq!(t.unembed(&e).unwrap(), a);
        }
    }

    #[test]
    fn fixed_ring_of_full_group_is_base() {
        let t = Tower::extend(&z4(), 2).unwrap();
        let fix = t.fixed_ring(&t.subgroup(1).unwrap()).unwrap();
        let mut expected: Vec<Element> = t
            .base()
            .elements()
            .unwrap()
            .iter()
            .map(|a| t.embed(a))
            .collect();
        expected.sort_by_key(|e| t.top().value_key(e));
        let mut got = fix.elements.clone();
        got.sort_by_key(|e| t.top().value_key(e));
        assert_eq!(got, expected);
    }

    #[test]
    fn frobenius_on_primitive_root() {
        let t = gr43_tower();
        let xi = t.primitive_root(7).unwrap();
        assert_eq!(t.top().pow(&xi, 7), t.top().one());
        assert_ne!(xi, t.top().one());
        assert!(t.top().is_teichmuller(&xi));
        // sigma(xi) = xi^2 (q = 2), still of order 7
        assert_eq!(t.frobenius(&xi), t.top().pow(&xi, 2));
        assert_eq!(t.top().pow(&t.frobenius(&xi), 7), t.top().one());
    }

    #[test]
    fn primitive_root_errors() {
        let t = gr43_tower();
        assert_eq!(t.primitive_root(1).unwrap(), t.top().one());
        assert!(matches!(
            t.primitive_root(5),
            Err(Error::OrderUnavailable { .. })
        ));
        assert!(matches!(
            t.primitive_root(14),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn trace_examples() {
        let t = gr43_tower();
        // Tr(1) = m * 1 = 3 in Z4
        assert_eq!(t.trace(&t.top().one()), t.base().int(3));
        // R-linearity: Tr(theta * a) = theta * Tr(a)
        let mut rng = Rng::new(23);
        for _ in 0..30 {
            let a = t.top().random(&mut rng);
            let lhs = t.trace(&t.top().mul(&t.top().theta(), &a));
            let rhs = t.base().mul(&t.base().theta(), &t.trace(&a));
            assert_eq!(lhs, rhs);
        }
        // G-invariance Tr(sigma(a)) = Tr(a)
        for _ in 0..30 {
            let a = t.top().random(&mut rng);
            assert_eq!(t.trace(&t.frobenius(&a)), t.trace(&a));
        }
    }

    #[test]
    fn trace_surjectivity_witness() {
        let t = gr43_tower();
        // some Teichmuller lift has unit trace; rescale to get trace 1
        let witness = t
            .top()
            .teichmuller_set()
            .into_iter()
            .find(|g| t.base().is_unit(&t.trace(g)))
            .expect("trace is surjective");
        let tr = t.trace(&witness);
        let scaled = t
            .top()
            .mul(&t.embed(&t.base().inv(&tr).unwrap()), &witness);
        assert_eq!(t.trace(&scaled), t.base().one());
    }

    #[test]
    fn gram_and_dual_basis() {
        // m = 1: M = (1), alpha* = {1}
        let t1 = Tower::extend(&z4(), 1).unwrap();
        assert_eq!(t1.dual_basis(), &[t1.base().one()]);

        // GR(4,3)|Z4: biorthogonality on all 9 pairs
        let t = gr43_tower();
        for (i, ai) in t.basis().iter().enumerate() {
            for (j, aj) in t.dual_basis().iter().enumerate() {
                let tr = t.trace(&t.top().mul(ai, aj));
                let expect = if i == j {
                    t.base().one()
                } else {
                    t.base().zero()
                };
                assert_eq!(tr, expect, "Tr(alpha_{i} alpha*_{j})");
            }
        }

        // same property for the equal-characteristic tower F8[u]/u^2 | F2[u]/u^2
        let te = Tower::extend(&f2u2(), 3).unwrap();
        for (i, ai) in te.basis().iter().enumerate() {
            for (j, aj) in te.dual_basis().iter().enumerate() {
                let tr = te.trace(&te.top().mul(ai, aj));
                let expect = if i == j {
                    te.base().one()
                } else {
                    te.base().zero()
                };
                assert_eq!(tr, expect);
            }
        }
    }

    #[test]
    fn galois_extension_definition_witness() {
        // sum_t sigma^i(alpha_t) sigma^j(alpha*_t) = delta_ij
        for t in [gr43_tower(), Tower::extend(&f2u2(), 2).unwrap()] {
            let top = t.top().clone();
            for i in 0..t.m() {
                for j in 0..t.m() {
                    let mut acc = top.zero();
                    for (a, ad) in t.basis().iter().zip(t.dual_basis()) {
                        let term = top.mul(&t.frobenius_pow(a, i), &t.frobenius_pow(ad, j));
                        acc = top.add(&acc, &term);
                    }
                    let expect = if i == j { top.one() } else { top.zero() };
                    assert_eq!(acc, expect);
                }
            }
        }
    }

    #[test]
    fn teichmuller_lift_examples() {
        let t = gr43_tower();
        let field = t.top().residue_field().clone();
        let zero = ResidueElement {
            field: field.clone(),
            coeffs: field.zero(),
        };
        let one = ResidueElement {
            field: field.clone(),
            coeffs: field.one(),
        };
        assert!(t.teichmuller_lift(&zero).is_zero());
        assert_eq!(t.teichmuller_lift(&one), t.top().one());
        // the 7 nonzero lifts all satisfy w^7 = 1
        for coeffs in field.elements().skip(1) {
            let w = t.teichmuller_lift(&ResidueElement {
                field: field.clone(),
                coeffs,
            });
            assert_eq!(t.top().pow(&w, 7), t.top().one());
        }
    }

    #[test]
    fn fixed_ring_lattice_gr44() {
        let t = Tower::extend(&z4(), 4).unwrap();
        // H = {id} -> S
        let hid = t.subgroup(4).unwrap();
        let fix_id = t.fixed_ring(&hid).unwrap();
        assert_eq!(fix_id.elements.len() as u128, t.top().size());
        // H = <sigma^2> -> GR(4,2): 16 elements, base-rank 2
        let h2 = t.subgroup(2).unwrap();
        let fix2 = t.fixed_ring(&h2).unwrap();
        assert_eq!(fix2.elements.len(), 16);
        assert_eq!(fix2.basis.len(), 2);
        // H = G -> base: 4 elements
        let hg = t.subgroup(1).unwrap();
        let fixg = t.fixed_ring(&hg).unwrap();
        assert_eq!(fixg.elements.len(), 4);
        // Galois correspondence round trips
        assert_eq!(t.stabilizer_of(&fix2).d, 2);
        assert_eq!(t.stabilizer_of(&fixg).d, 1);
        assert_eq!(t.stabilizer_of(&fix_id).d, 4);
        assert!(matches!(
            t.subgroup(3),
            Err(Error::InvalidSubgroup { d: 3, m: 4 })
        ));
    }

    #[test]
    fn automorphism_group_is_generated_by_frobenius() {
        // Enumerate every base-fixing ring automorphism of small towers:
        // such a map is determined by the image of the canonical generator,
        // which must be a root of the top modulus. The count must be m and
        // every map must be a Frobenius power.
        for t in [
            Tower::extend(&z4(), 2).unwrap(),
            Tower::extend(&f2u2(), 3).unwrap(),
        ] {
            let top = t.top().clone();
            let all = top.elements().unwrap();
            // candidate generator images: roots of the top modulus
            let roots: Vec<Element> = all
                .iter()
                .filter(|r| {
                    let mut acc = top.zero();
                    for &c in top.modulus().iter().rev() {
                        acc = top.add(&top.mul(&acc, r), &top.int(c as i128));
                    }
                    acc.is_zero()
                })
                .cloned()
                .collect();
            assert_eq!(roots.len(), t.m(), "one root per Galois conjugate");
            for r in &roots {
                // the induced map on canonical coordinates x^i u^t -> r^i u^t
                let apply = |a: &Element| -> Element {
                    let n = top.n();
                    let mut acc = top.zero();
                    for (k, &c) in a.coeffs().iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        let (block, i) = (k / n, k % n);
                        let mut term = top.int(c as i128);
                        term = top.mul(&term, &top.pow(r, i as u128));
                        term = top.mul(&term, &top.theta_pow(block));
                        acc = top.add(&acc, &term);
                    }
                    acc
                };
                // it is an automorphism fixing the embedded base...
                for a in all.iter().take(24) {
                    for b in all.iter().take(24) {
                        assert_eq!(apply(&top.add(a, b)), top.add(&apply(a), &apply(b)));
                        assert_eq!(apply(&top.mul(a, b)), top.mul(&apply(a), &apply(b)));
                    }
                }
                for c in t.base().elements().unwrap() {
                    assert_eq!(apply(&t.embed(&c)), t.embed(&c));
                }
                // ...and coincides with some sigma^j
                let j = (0..t.m())
                    .find(|&j| all.iter().all(|a| apply(a) == t.frobenius_pow(a, j)));
                assert!(j.is_some(), "root-induced map must be a Frobenius power");
            }
        }
    }

    #[test]
    fn alpha_coordinate_roundtrip() {
        let t = gr43_tower();
        let mut rng = Rng::new(31);
        for _ in 0..40 {
            let a = t.top().random(&mut rng);
            let coords = t.alpha_coordinates(&a).unwrap();
            assert_eq!(coords.len(), t.m());
            assert_eq!(t.from_alpha_coordinates(&coords).unwrap(), a);
        }
    }
}
