//! Golden-file regression for the canonical coproduct-table renderings at
//! N = 4, parameters γ=2, δ=3, μ=5 (the CLI defaults). The files include
//! the two series that have no closed form (Δ_F~(H) and Δ_F'(H)), so any
//! refactor of the rewriting engine, the series code or the renderer that
//! changes a single coefficient shows up as a diff.

use std::path::Path;
use twistkit::twist::{Carrier, TwistFamily, TwistParams};

fn rendered_table(family: TwistFamily) -> String {
    let carrier =
        Carrier::for_family(family, TwistParams::from_ints(2, 3, 5), 4).expect("carrier");
    let mut out = String::new();
    for generator in carrier.algebra().generators() {
        let x = carrier.generator(&generator.symbol).unwrap();
        let twisted = carrier.twisted_coproduct(family, &x).unwrap();
        out.push_str(&format!(
            "Δ[{family}]({}) = {}\n",
            generator.symbol,
            twisted.render()
        ));
    }
    out
}

#[test]
fn coproduct_tables_match_golden_files() {
    let cases = [
        (TwistFamily::FP, "fp"),
        (TwistFamily::FPPrime, "fpprime"),
        (TwistFamily::F, "f"),
        (TwistFamily::FTilde, "ftilde"),
        (TwistFamily::FPrime, "fprime"),
        (TwistFamily::FTildePrime, "ftildeprime"),
    ];
    for (family, stem) in cases {
        let path = Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("tests/golden")
            .join(format!("coproducts_{stem}.txt"));
        let golden = std::fs::read_to_string(&path).expect("golden file present");
        assert_eq!(
            rendered_table(family),
            golden,
            "golden mismatch for {family} ({})",
            path.display()
        );
    }
}
