//! The BCH bound: designed distances from intervals against exact minimum
//! weights computed by full enumeration.
//!
//! Run with: cargo run --example bch_bound

use chainring::cyclic::{CyclicContext, DefiningSet};
use chainring::fixtures;
use chainring::Result;

fn main() -> Result<()> {
    let z4 = fixtures::ring("z4")?;
    let ctx = CyclicContext::new(&z4, 7)?;

    println!("restrictions of cyclic codes of length 7 over Z4:\n");
    for (members, t) in [
        (vec![1u64, 2], 1usize),
        (vec![1, 2, 4], 1),
        (vec![1, 2, 3], 1),
        (vec![0, 1, 2, 3], 1),
        (vec![1, 2, 4], 0),
    ] {
        let a = DefiningSet::new(7, members)?;
        let report = ctx.bch_check(&a, t)?;
        let exact = report
            .exact_distance
            .map(|d| d.to_string())
            .unwrap_or_else(|| "(zero code)".into());
        println!(
            "A = {a}, t = {t}: longest interval v = {}, designed d >= {}, exact d = {exact}, holds = {}",
            report.interval.2, report.designed_distance, report.holds
        );
    }

    // The repetition code has full distance.
    let rep = ctx.minimal_code(0)?;
    println!("\nrepetition code: exact minimum weight = {}", rep.min_weight()?);

    // An interval of length ell leaves only the zero code: the bound
    // d >= ell + 1 holds vacuously.
    let all = DefiningSet::all(7);
    let report = ctx.bch_check(&all, 1)?;
    println!(
        "interval of length 7: designed d >= {}, code is zero = {}",
        report.designed_distance,
        report.exact_distance.is_none()
    );
    Ok(())
}
