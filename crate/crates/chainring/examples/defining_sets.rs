//! Evaluation codes and the defining-set calculus: q-closure, opposites,
//! generator polynomials, invariance and the restriction pipelines.
//!
//! Run with: cargo run --example defining_sets

use chainring::cyclic::{CyclicContext, DefiningSet};
use chainring::fixtures;
use chainring::io;
use chainring::Result;

fn main() -> Result<()> {
    let z4 = fixtures::ring("z4")?;
    let ctx = CyclicContext::new(&z4, 7)?;

    // B(A) is spanned by the Vandermonde rows (xi^{ja}) for a in A.
    let a = DefiningSet::new(7, [1, 2, 4])?;
    let b = ctx.eval_code(&a, 0)?;
    println!("B({a}): free rank {} over {}", b.rank(), ctx.tower().top().name());
    println!("generator polynomial: {}", ctx.generator_polynomial(&a)?);

    // Set calculus.
    let a1 = DefiningSet::new(7, [1])?;
    println!("\nq-closure of {a1} = {}", a1.q_closure(ctx.table()));
    println!("opposite of {a} = {}", a.opposite());
    println!("{a} q-invariant: {}", a.is_q_invariant(2));
    let interval = DefiningSet::new(7, [0, 2, 4, 6])?;
    println!(
        "{interval} interval presentations: {:?}",
        interval.interval_presentations()
    );

    // Galois invariance of B_t(A) matches q-invariance of A; the closure of
    // B(A) is the evaluation code of the q-closure.
    let report = ctx.invariance_and_closure(&a1, 0)?;
    println!(
        "\nB({a1}): invariant = {}, q-invariant = {}",
        report.galois_invariant, report.q_invariant
    );
    println!(
        "closure(B({a1})) = B({}) with rank {}",
        a1.q_closure(ctx.table()),
        report.closure.rank()
    );

    // Restriction pipelines for a q-invariant defining set: the R-dual of
    // the trace code, the restriction of the S-dual, and the two-term
    // evaluation form all agree.
    for t in 0..=2 {
        let rep = ctx.restricted_code(&a, t)?;
        println!(
            "restricted code at t = {t}: type {} (three pipelines agree)",
            io::type_string(&rep.code)
        );
    }
    Ok(())
}
