//! Compares the computed twisted coproducts of every generator against the
//! reference closed forms, and prints the typo ledger: entries where the
//! reference form is misprinted, together with the engine-verified
//! correction.
//!
//!     cargo run --release -p twistkit --example coproduct_tables

use twistkit::twist::{
    coproduct_table_check, Carrier, CarrierSide, EntryStatus, TwistFamily, TwistParams,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // generic parameters: special values like δ = 1 can mask a misprint
    let params = TwistParams::from_ints(2, 3, 5);
    let l = Carrier::new(CarrierSide::L, params.clone(), 4)?;
    let lp = Carrier::new(CarrierSide::LPrime, params, 4)?;

    for (carrier, family) in [
        (&l, TwistFamily::FP),
        (&lp, TwistFamily::FPPrime),
        (&l, TwistFamily::F),
        (&l, TwistFamily::FTilde),
        (&lp, TwistFamily::FPrime),
        (&lp, TwistFamily::FTildePrime),
    ] {
        let report = coproduct_table_check(carrier, family)?;
        println!("table Δ[{family}]:");
        for entry in &report.entries {
            println!("  {:<2} {}", entry.generator, entry.status.as_str());
            if entry.status == EntryStatus::ComputedOnly {
                println!("       series: {}", truncate(&entry.computed, 120));
            }
        }
        for ledger in report.ledger_entries() {
            println!("  ledger entry for {}:", ledger.generator);
            println!("    {}", ledger.note);
            for reading in &ledger.readings {
                println!("    reading {:<45} matched: {}", reading.label, reading.matched);
            }
        }
        assert!(report.passed(false));
    }
    Ok(())
}

fn truncate(text: &str, limit: usize) -> String {
    if text.chars().count() <= limit {
        text.to_string()
    } else {
        let cut: String = text.chars().take(limit).collect();
        format!("{cut} …")
    }
}
