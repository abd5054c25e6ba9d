//! Code duality: involution, cardinality pairing, type duality, Hermitian
//! forms.
//!
//! Run with: cargo run --example dual_codes

use chainring::code::{Code, DualForm};
use chainring::fixtures;
use chainring::io;
use chainring::Result;

fn main() -> Result<()> {
    let t = fixtures::tower("z4")?;
    let z4 = t.top().clone();

    let b = Code::from_matrix(&t, &io::parse_matrix_text(&z4, "1 1;0 2")?);
    println!("B:\n{}type {}", b.rsf(), io::type_string(&b));
    let d = b.dual(DualForm::Euclidean)?;
    println!("\nB-dual:\n{}type {}", d.rsf(), io::type_string(&d));

    // involution and cardinality pairing
    assert_eq!(d.dual(DualForm::Euclidean)?, b);
    println!(
        "\n|B| * |B-dual| = {} * {} = {} = |S|^l",
        b.cardinality(),
        d.cardinality(),
        b.cardinality() * d.cardinality()
    );

    // type duality: (l; l - sum k_i, k_{s-1}, ..., k_1)
    println!(
        "type duality: {:?} -> {:?}",
        b.code_type(),
        d.code_type()
    );

    // Hermitian duality needs an even extension degree.
    let gr42 = fixtures::tower("gr42")?;
    let xi = gr42.primitive_root(3)?;
    let c = Code::from_generators(&gr42, vec![vec![gr42.top().one(), xi]])?;
    let eh = c.dual(DualForm::Hermitian)?;
    let ee = c.dual(DualForm::Euclidean)?;
    println!("\nover {} (m = 2):", gr42.top().name());
    println!("Hermitian dual:\n{}", eh.rsf());
    println!("Euclidean dual:\n{}", ee.rsf());
    assert_eq!(eh.dual(DualForm::Hermitian)?, c, "Hermitian involution");
    println!("both forms are involutions");

    let gr43 = fixtures::tower("gr43")?;
    let full = Code::full(&gr43, 2);
    println!(
        "\nHermitian over m = 3 -> {:?}",
        full.dual(DualForm::Hermitian).unwrap_err()
    );
    Ok(())
}
