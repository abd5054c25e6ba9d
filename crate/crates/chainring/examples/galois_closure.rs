//! Galois closure and interior, invariance criteria, and the Delsarte
//! identity linking trace and restriction through duality.
//!
//! Run with: cargo run --example galois_closure

use chainring::code::{Code, DualForm};
use chainring::fixtures;
use chainring::Result;

fn main() -> Result<()> {
    let t = fixtures::tower("gr43")?;
    let top = t.top().clone();
    let xi = t.primitive_root(7)?;

    // B = span{(1, xi)} is not Galois invariant: xi moves under sigma.
    let b = Code::from_generators(&t, vec![vec![top.one(), xi.clone()]])?;
    println!("B = span{{(1, xi)}} over {}", top.name());
    println!("Galois invariant: {}", b.is_galois_invariant());

    // closure = join of the conjugates = Ext(Tr(B));
    // interior = meet of the conjugates = Ext(Res(B)).
    let closure = b.closure();
    let interior = b.interior();
    println!("\nclosure (rank {}):\n{}", closure.rank(), closure.rsf());
    println!("interior (rank {}):\n{}", interior.rank(), interior.rsf());
    assert_eq!(closure, b.trace_code().extend_to(&t)?);
    assert_eq!(interior, b.restriction().extend_to(&t)?);
    println!("closure = Ext(Tr(B)) and interior = Ext(Res(B)) verified");

    // Closure and interior swap under duality.
    let lhs = b.dual(DualForm::Euclidean)?.interior();
    let rhs = b.closure().dual(DualForm::Euclidean)?;
    assert_eq!(lhs, rhs);
    println!("interior(B-dual) = closure(B)-dual verified");

    // The invariance tri-equivalence: RSF over the base ring, sigma-fixed,
    // trace = restriction.
    for code in [&b, &closure] {
        let i1 = code.is_galois_invariant();
        let i2 = code.conjugate(1) == *code;
        let i3 = code.trace_code() == code.restriction();
        assert!(i1 == i2 && i2 == i3);
        println!("tri-equivalence holds (invariant = {i1})");
    }

    // Delsarte: Tr(dual(B)) = dual(Res(B)), by independent pipelines.
    let report = b.delsarte_check()?;
    println!("\nDelsarte identity: equal = {}", report.equal);
    println!("Tr(B-dual):\n{}", report.lhs.rsf());

    // The subcode Galois correspondence on a degree-4 tower.
    let t4 = chainring::ext::Tower::extend(&fixtures::ring("z4")?, 4)?;
    let xi5 = t4.primitive_root(5)?;
    let b4 = Code::from_generators(&t4, vec![vec![t4.top().one(), xi5]])?;
    let h = t4.subgroup(2)?;
    let fix = b4.fix_subcode(&h)?;
    println!(
        "\nFix_B(<sigma^2>) over {}: rank {} (= B meet sigma^2(B))",
        t4.top().name(),
        fix.rank()
    );
    assert_eq!(fix, b4.intersect(&b4.conjugate(2))?);
    Ok(())
}
