//! The row standard form: a unique canonical generator matrix per code.
//!
//! Run with: cargo run --example row_standard_form

use chainring::fixtures;
use chainring::io;
use chainring::linalg::{self, random_invertible};
use chainring::rng::Rng;
use chainring::Result;

fn main() -> Result<()> {
    let z4 = fixtures::ring("z4")?;

    // A dependent pair of rows collapses to one canonical row.
    let m = io::parse_matrix_text(&z4, "2 2;1 1")?;
    let report = linalg::row_standard_form(&m);
    println!("input:\n{m}row standard form:\n{}", report.rsf);
    for p in &report.pivots {
        println!("pivot: row {} col {} valuation {}", p.row, p.col, p.valuation);
    }
    println!("transform record: {} elementary operations", report.transform.len());

    // The RSF conditions can be checked (and violated) explicitly.
    let good = io::parse_matrix_text(&z4, "1 1;0 2")?;
    println!("\nis_rsf([[1,1],[0,2]]) = {}", linalg::is_rsf(&good));
    let bad = io::parse_matrix_text(&z4, "2 0;1 0")?;
    println!(
        "is_rsf([[2,0],[1,0]]) = {} ({})",
        linalg::is_rsf(&bad),
        linalg::rsf_violation(&bad).unwrap()
    );

    // Uniqueness: row-equivalent matrices share one RSF.
    let mut rng = Rng::new(2024);
    let a = io::parse_matrix_text(&z4, "1 2 3;0 2 2")?;
    let canonical = linalg::row_standard_form(&a).rsf;
    for _ in 0..5 {
        let p = random_invertible(&z4, 2, &mut rng);
        let pa = p.mul(&a)?;
        assert_eq!(linalg::row_standard_form(&pa).rsf, canonical);
    }
    println!("\nfive random row transforms of the same module give one RSF:\n{canonical}");

    // Inverses over the chain ring.
    let u = io::parse_matrix_text(&z4, "1 1;0 1")?;
    println!("inverse of [[1,1],[0,1]]:\n{}", linalg::mat_inverse(&u)?);
    let singular = io::parse_matrix_text(&z4, "2 0;0 1")?;
    println!("inverse of [[2,0],[0,1]] -> {:?}", linalg::mat_inverse(&singular).unwrap_err());

    // The structured parity-check construction.
    let g = linalg::row_standard_form(&io::parse_matrix_text(&z4, "1 1")?).rsf;
    let h = linalg::kernel_dual(&g)?;
    println!("\ndual of span{{(1,1)}}:\n{h}");
    Ok(())
}
