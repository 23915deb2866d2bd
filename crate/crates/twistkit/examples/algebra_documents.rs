//! JSON interchange: algebra definitions and embedding recipes serialize
//! to exact, diff-friendly documents (coefficients as canonical scalar
//! strings) and load back for verification — the same formats the
//! `twistkit export` and `verify --algebra-file/--embedding-file` commands
//! speak.
//!
//!     cargo run --release -p twistkit --example algebra_documents

use twistkit::liealg::{
    algebra_from_json, algebra_to_json, build_concrete, build_embedding, embedding_check,
    recipe_from_json, recipe_to_json, ConcreteFamily, EmbeddingFamily,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let algebra = build_concrete(ConcreteFamily::Schrodinger, 2)?;
    let doc = algebra_to_json(&algebra);
    let text = serde_json::to_string_pretty(&doc)?;
    println!("algebra document ({} bytes):", text.len());
    for line in text.lines().take(12) {
        println!("  {line}");
    }
    println!("  …");
    let parsed = algebra_from_json(&serde_json::from_str(&text)?)?;
    assert_eq!(parsed.dim(), algebra.dim());
    assert!(parsed.jacobi_check().passed());
    println!("round-trip ok; jacobi passes on the reloaded algebra\n");

    let recipe = build_embedding(EmbeddingFamily::Iso, 4, &[], &[], false)?;
    let doc = recipe_to_json(&recipe);
    let text = serde_json::to_string(&doc)?;
    let reloaded = recipe_from_json(&serde_json::from_str(&text)?)?;
    assert!(embedding_check(&reloaded).iter().all(|c| c.passed));
    println!(
        "embedding document for {} round-trips ({} bytes) and still passes all relations",
        recipe.name,
        text.len()
    );
    Ok(())
}
