//! Builds the carrier subalgebra inside isu(n), iso(n), the Schrödinger
//! algebra and the Poincaré algebra, and verifies all ten bracket
//! relations by direct structure-constant computation. Also demonstrates
//! the two misprinted recipes kept behind the `verbatim` flag: the
//! Schrödinger `H` (printed identical to `J`) and the isu index pairing
//! `(k, n-k)`, which degenerates for even n.
//!
//!     cargo run --release -p twistkit --example embeddings

use twistkit::liealg::{build_embedding, dualize_recipe, embedding_check, EmbeddingFamily};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (EmbeddingFamily::Poincare, vec![3]),
        (EmbeddingFamily::Isu, vec![4, 5, 6]),
        (EmbeddingFamily::Iso, vec![4, 5]),
        (EmbeddingFamily::Schrodinger, vec![2, 3]),
    ];
    for (family, ns) in cases {
        for n in ns {
            let recipe = build_embedding(family, n, &[], &[], false)?;
            let checks = embedding_check(&recipe);
            let failed = checks.iter().filter(|c| !c.passed).count();
            println!(
                "{:<22} γ={:<4} δ={:<2} μ={:<3} {} / {} relations hold",
                recipe.name,
                recipe.gamma.to_string(),
                recipe.delta.to_string(),
                recipe.mu.to_string(),
                checks.len() - failed,
                checks.len()
            );
            assert_eq!(failed, 0);
            // the A ↔ B exchange gives the primed carrier inside the same algebra
            let dual = dualize_recipe(&recipe)?;
            assert!(embedding_check(&dual).iter().all(|c| c.passed));
        }
    }

    println!("\nmisprinted recipes, reproduced verbatim:");
    let verbatim = build_embedding(EmbeddingFamily::Schrodinger, 2, &[], &[], true)?;
    for check in embedding_check(&verbatim) {
        if !check.passed {
            println!("  schrodinger(2) {:<8} residual {}", check.relation, check.residual);
        }
    }
    let verbatim_isu = build_embedding(EmbeddingFamily::Isu, 4, &[], &[], true)?;
    let failing = embedding_check(&verbatim_isu)
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.relation.clone())
        .collect::<Vec<_>>()
        .join(", ");
    println!("  isu(4) with the degenerate (k, n-k) pairing fails: {failing}");
    Ok(())
}
