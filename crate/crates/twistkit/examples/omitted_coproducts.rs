//! Two twisted coproducts have no closed form: Δ_F~(H) and Δ_F'(H), whose
//! conjugation series do not telescope. The engine still computes them
//! exactly at any truncation order; this example prints them order by
//! order so the growth of the series is visible.
//!
//!     cargo run --release -p twistkit --example omitted_coproducts

use twistkit::twist::{Carrier, CarrierSide, TwistFamily, TwistParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = TwistParams::from_ints(2, 3, 5);
    for (side, family) in [
        (CarrierSide::L, TwistFamily::FTilde),
        (CarrierSide::LPrime, TwistFamily::FPrime),
    ] {
        println!("Δ[{family}](H):");
        for order in 0..=4 {
            let carrier = Carrier::new(side, params.clone(), order)?;
            let h = carrier.generator("H")?;
            let twisted = carrier.twisted_coproduct(family, &h)?;
            println!("  N={order}: {} terms", twisted.num_terms());
            if order <= 2 {
                println!("       {}", twisted.render());
            }
        }
    }
    Ok(())
}
