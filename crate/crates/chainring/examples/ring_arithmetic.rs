//! Chain ring construction and element arithmetic.
//!
//! Builds rings from both families, shows Teichmuller sets, theta-adic
//! digits, valuations and degrees, and the residue projection.
//!
//! Run with: cargo run --example ring_arithmetic

use chainring::ring::{Family, Ring};
use chainring::Result;

fn main() -> Result<()> {
    // Z4: the smallest chain ring that is not a field.
    let z4 = Ring::make(Family::Unramified, 2, 1, 2, None)?;
    println!("{}: size {}, units {}", z4.name(), z4.size(), z4.unit_count());
    let three = z4.int(3);
    println!("3 + 3 = {}", z4.add(&three, &three));
    println!("3 * 3 = {}", z4.mul(&three, &three));
    println!("inv(3) = {}", z4.inv(&three)?);
    println!("inv(2) -> {:?}", z4.inv(&z4.int(2)).unwrap_err());

    // Teichmuller digits: 3 = 1 + 1*theta over Z4.
    let digits = z4.theta_adic(&three);
    println!(
        "theta-adic digits of 3: ({})",
        digits.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ")
    );
    println!("valuation(2) = {}, degree(2) = {}", z4.valuation(&z4.int(2)), z4.degree(&z4.int(2)));
    println!("valuation(0) = {}, degree(0) = {}", z4.valuation(&z4.zero()), z4.degree(&z4.zero()));

    // The Galois ring GR(4,2): Teichmuller set of size 4.
    let gr42 = Ring::make(Family::Unramified, 2, 2, 2, None)?;
    let gamma: Vec<String> = gr42.teichmuller_set().iter().map(|e| e.to_string()).collect();
    println!("\n{}: Gamma = {{{}}}", gr42.name(), gamma.join(", "));
    for b in gr42.teichmuller_set() {
        assert_eq!(gr42.pow(&b, gr42.q() as u128), b, "b^q = b on Gamma");
    }
    println!("every b in Gamma satisfies b^q = b  (q = {})", gr42.q());

    // The equal-characteristic family: F2[u]/(u^2), theta = u.
    let f2u2 = Ring::make(Family::EqualChar, 2, 1, 2, None)?;
    let u = f2u2.theta();
    println!("\n{}: u * u = {} (theta^s = 0)", f2u2.name(), f2u2.mul(&u, &u));
    let e = f2u2.parse_element("1,1")?; // 1 + u
    println!("residue of 1+u: {}", f2u2.residue_project(&e));

    // Round trip through the theta-adic coordinates, for every element.
    for ring in [&z4, &gr42, &f2u2] {
        for a in ring.elements()? {
            let digits = ring.theta_adic(&a);
            assert_eq!(ring.from_theta_adic(&digits)?, a);
        }
    }
    println!("\ntheta-adic round trip verified on every element of all three rings");
    Ok(())
}
