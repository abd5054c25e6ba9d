//! Cyclotomic cosets, the lifted factorization of x^ell - 1, idempotents,
//! minimal cyclic codes and the multi-index parametrization.
//!
//! Run with: cargo run --example cyclic_factorization

use chainring::cyclic::{cyclotomic_cosets, is_cyclic, CyclicContext, MultiIndex};
use chainring::fixtures;
use chainring::poly::RingPoly;
use chainring::Result;
use std::collections::BTreeSet;

fn main() -> Result<()> {
    // 2-cyclotomic cosets mod 7 index the factorization.
    let table = cyclotomic_cosets(7, 2)?;
    print!("cosets of 2 mod 7:");
    for rep in &table.reps {
        let mut c = table.cosets[rep].clone();
        c.sort_unstable();
        print!(" {c:?}");
    }
    println!();

    // x^7 - 1 over Z4 factors into basic irreducibles along the cosets.
    let z4 = fixtures::ring("z4")?;
    let ctx = CyclicContext::new(&z4, 7)?;
    println!("\nsplitting ring: {} (m = {})", ctx.tower().top().name(), ctx.tower().m());
    let mut product = RingPoly::one(&z4);
    for (rep, f) in ctx.factors() {
        println!("Lambda_{rep} = {f}");
        product = product.mul(f);
    }
    assert_eq!(product, RingPoly::x_pow_minus_one(&z4, 7));
    println!("product of the factors = x^7 - 1 (exact)");

    // Orthogonal idempotents summing to 1.
    let mut total = RingPoly::zero(&z4);
    for (rep, e) in ctx.idempotents() {
        println!("e_{rep} = {e}");
        total = total.add(e);
    }
    assert_eq!(total, RingPoly::one(&z4));
    println!("idempotents sum to 1; pairwise products vanish");

    // Minimal cyclic codes and their theta-chains.
    let c0 = ctx.minimal_code(0)?;
    println!("\nC_0 (repetition line): rank {}, |C_0| = {}", c0.rank(), c0.cardinality());
    let c1 = ctx.minimal_code(1)?;
    println!("C_1: rank {}, |C_1| = {}", c1.rank(), c1.cardinality());
    let chain = ctx.subcode_chain(1)?;
    let sizes: Vec<String> = chain.iter().map(|c| c.cardinality().to_string()).collect();
    println!("theta-chain of C_1 cardinalities: {}", sizes.join(" > "));

    // Every cyclic code of length 7 over Z4 comes from exactly one
    // multi-index.
    let all = MultiIndex::all(ctx.table(), z4.s());
    let mut seen = BTreeSet::new();
    for mi in &all {
        let code = ctx.code_from_multiindex(mi)?;
        assert!(is_cyclic(&code));
        seen.insert(format!("{}", code.rsf()));
    }
    println!(
        "\n{} multi-indices -> {} pairwise distinct cyclic codes",
        all.len(),
        seen.len()
    );
    Ok(())
}
