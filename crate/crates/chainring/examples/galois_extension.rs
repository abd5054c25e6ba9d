//! Galois extensions: Frobenius, trace, dual bases, fixed subrings.
//!
//! Run with: cargo run --example galois_extension

use chainring::ext::Tower;
use chainring::fixtures;
use chainring::Result;

fn main() -> Result<()> {
    // GR(4,3) | Z4: the splitting tower of x^7 - 1 over Z4.
    let t = fixtures::tower("gr43")?;
    println!("tower: {} over {}, m = {}", t.top().name(), t.base().name(), t.m());
    let mods: Vec<String> = t.top().modulus().iter().map(|c| c.to_string()).collect();
    println!("top modulus: [{}]  (a basic irreducible dividing x^7 - 1)", mods.join(", "));

    // Frobenius fixes the embedded base pointwise and acts as the q-power
    // map on Teichmuller elements.
    let xi = t.primitive_root(7)?;
    println!("\nprimitive 7th root xi = {}", xi);
    println!("sigma(xi) = {} = xi^2", t.frobenius(&xi));
    assert_eq!(t.frobenius(&xi), t.top().pow(&xi, 2));
    for a in t.base().elements()? {
        assert_eq!(t.frobenius(&t.embed(&a)), t.embed(&a));
    }
    println!("sigma fixes every embedded base element");

    // Trace: R-linear and surjective; Tr(1) = m.
    println!("\nTr(1) = {}", t.trace(&t.top().one()));
    println!("Tr(xi) = {}", t.trace(&xi));

    // The trace-dual basis: Tr(alpha_i alpha*_j) = delta_ij.
    println!("\nbasis / trace-dual basis:");
    for (a, ad) in t.basis().iter().zip(t.dual_basis()) {
        println!("  alpha = {a}    alpha* = {ad}");
    }
    for (i, a) in t.basis().iter().enumerate() {
        for (j, ad) in t.dual_basis().iter().enumerate() {
            let tr = t.trace(&t.top().mul(a, ad));
            let expect = if i == j { t.base().one() } else { t.base().zero() };
            assert_eq!(tr, expect);
        }
    }
    println!("biorthogonality Tr(alpha_i alpha*_j) = delta_ij verified");

    // The subring lattice of GR(4,4) | Z4 via fixed rings.
    let t4 = Tower::extend(&fixtures::ring("z4")?, 4)?;
    println!("\nsubring lattice of {} over Z4:", t4.top().name());
    for d in [1usize, 2, 4] {
        let h = t4.subgroup(d)?;
        let fix = t4.fixed_ring(&h)?;
        println!(
            "  Fix(<sigma^{d}>): {} elements, free base-rank {}",
            fix.elements.len(),
            fix.basis.len()
        );
        // Galois correspondence round trip
        assert_eq!(t4.stabilizer_of(&fix).d, d);
    }
    println!("stabilizer(fixed_ring(H)) = H for every divisor subgroup");
    Ok(())
}
