//! Level sets and rank bounds for restriction and trace codes.
//!
//! Run with: cargo run --example rank_bounds

use chainring::code::Code;
use chainring::fixtures;
use chainring::Result;

fn main() -> Result<()> {
    let t = fixtures::tower("gr43")?;
    let top = t.top().clone();
    let xi = t.primitive_root(7)?;

    let b = Code::from_generators(&t, vec![vec![top.one(), xi.clone(), top.zero()]])?;
    let rep = b.bounds_report()?;
    println!("B = span{{(1, xi, 0)}} over {}", top.name());
    println!("level set: {:?}  (least sigma-period per RSF row)", rep.level_set);
    println!(
        "ranks: code {}, interior {}, closure {}, restriction {}, trace {}",
        rep.rank_code, rep.rank_interior, rep.rank_closure, rep.rank_restriction, rep.rank_trace
    );
    println!("\nasserted bounds:");
    for i in &rep.chain {
        println!("  {}: {} <= {}", i.name, i.lhs, i.rhs);
    }
    println!("\nunasserted bound variants (evaluated as data; can fail):");
    for i in &rep.literal_bounds {
        println!(
            "  {}: {} <= {} ({})",
            i.name,
            i.lhs,
            i.rhs,
            if i.holds { "holds" } else { "fails" }
        );
    }

    // A Galois-invariant code collapses every chain.
    let base_t = fixtures::tower("z4")?;
    let z4 = base_t.top().clone();
    let c = Code::from_generators(
        &base_t,
        vec![
            vec![z4.int(1), z4.int(1), z4.int(0)],
            vec![z4.int(0), z4.int(2), z4.int(1)],
        ],
    )?;
    let inv = c.extend_to(&t)?;
    let rep2 = inv.bounds_report()?;
    println!("\ninvariant extension code: level set {:?}", rep2.level_set);
    println!(
        "rank(Res) = rank(B) = rank(Tr) = {} (collapsed chain)",
        rep2.rank_code
    );
    assert_eq!(rep2.rank_restriction, rep2.rank_code);
    assert_eq!(rep2.rank_trace, rep2.rank_code);
    Ok(())
}
