//! Pushes the classical r-matrix of the extended twist `F` through the
//! light-cone embedding into the (1+3) Poincaré algebra, compares it with
//! the expanded wedge form `(J_3 + P_+)∧(J_- + iK_-) + 2i·K_3∧(P_t - P_3)`,
//! and verifies the classical Yang–Baxter equation in all ten dimensions.
//!
//!     cargo run --release -p twistkit --example poincare_rmatrix

use twistkit::cli::poincare_lightcone_r;
use twistkit::liealg::{build_embedding, EmbeddingFamily};
use twistkit::rmat::{cybe_residual, extract_classical_r, pushforward, universal_r};
use twistkit::twist::{Carrier, CarrierSide, TwistFamily, TwistParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let recipe = build_embedding(EmbeddingFamily::Poincare, 3, &[], &[], false)?;
    println!("embedding {} with γ={}, δ={}, μ={}", recipe.name, recipe.gamma, recipe.delta, recipe.mu);
    for index in 0..recipe.source.dim() {
        println!(
            "  {} ↦ {}",
            recipe.source.symbol(index),
            recipe.images[index].render(&recipe.target)
        );
    }

    let carrier = Carrier::new(
        CarrierSide::L,
        TwistParams::new(recipe.gamma.clone(), recipe.delta.clone(), recipe.mu.clone()),
        4,
    )?;
    let abstract_r =
        extract_classical_r(&universal_r(carrier.bundle(TwistFamily::F)?)?)?;
    println!("\nabstract r = {}", abstract_r.render());

    let pushed = pushforward(&abstract_r, &recipe)?;
    println!("pushforward = {}", pushed.render());

    let expected = poincare_lightcone_r(&recipe)?;
    assert_eq!(pushed, expected, "light-cone wedge expansion must agree");
    println!("matches the expanded light-cone wedge form exactly");

    let report = cybe_residual(&pushed);
    assert!(report.passed());
    println!("classical Yang–Baxter residual in poincare: 0");
    Ok(())
}
