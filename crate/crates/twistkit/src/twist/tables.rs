//! Reference tables for the twisted coproducts of every family, compared
//! entry by entry against the engine-computed series.
//!
//! Each entry is annotated: `Verbatim` entries must match exactly;
//! `Corrected` entries carry the engine-verified closed form together with
//! the misprinted variant(s) of the reference form, whose (mis)match is
//! recorded in a typo ledger instead of failing the run; `ComputedOnly`
//! entries have no closed form at all (the series is emitted for the
//! record). The computed series is always the ground truth here: the
//! coproducts are conjugations by a twist that has already passed the
//! cocycle and counit checks.

use super::{Carrier, TwistFamily, TwistParams};
#[cfg(test)]
use super::CarrierSide;
use crate::hopf::TensorElement;
use crate::scalars::GaussianRational;
use crate::uea::UeaElement;
use crate::{Error, Result};

type Build = fn(&Carrier) -> Result<TensorElement>;

enum EntryKind {
    Verbatim(Build),
    Corrected {
        corrected: Build,
        note: &'static str,
        variants: &'static [(&'static str, Build)],
    },
    ComputedOnly,
}

struct TableEntry {
    generator: &'static str,
    kind: EntryKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EntryStatus {
    Match,
    RecordedMismatch,
    Fail,
    ComputedOnly,
}

impl EntryStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            EntryStatus::Match => "match",
            EntryStatus::RecordedMismatch => "recorded-mismatch",
            EntryStatus::Fail => "fail",
            EntryStatus::ComputedOnly => "computed-only",
        }
    }
}

/// One reference-form reading and whether it matched the computed series.
#[derive(Debug, Clone)]
pub struct ReadingResult {
    pub label: String,
    pub matched: bool,
}

/// A recorded discrepancy between a reference closed form and the computed
/// series.
#[derive(Debug, Clone)]
pub struct TypoLedgerEntry {
    pub family: String,
    pub generator: String,
    pub note: String,
    pub readings: Vec<ReadingResult>,
    /// Rendering of the engine-verified form.
    pub corrected: String,
}

#[derive(Debug, Clone)]
pub struct TableEntryResult {
    pub generator: String,
    pub status: EntryStatus,
    pub computed: String,
    pub expected: Option<String>,
    pub ledger: Option<TypoLedgerEntry>,
}

#[derive(Debug, Clone)]
pub struct CoproductTableReport {
    pub family: TwistFamily,
    pub params: TwistParams,
    pub entries: Vec<TableEntryResult>,
}

impl CoproductTableReport {
    /// Pass/fail, with `strict` promoting recorded mismatches to failures.
    pub fn passed(&self, strict: bool) -> bool {
        self.entries.iter().all(|e| match e.status {
            EntryStatus::Match | EntryStatus::ComputedOnly => true,
            EntryStatus::RecordedMismatch => !strict,
            EntryStatus::Fail => false,
        })
    }

    pub fn ledger_entries(&self) -> impl Iterator<Item = &TypoLedgerEntry> {
        self.entries.iter().filter_map(|e| e.ledger.as_ref())
    }
}

/// Compares the computed twisted coproducts of every generator against the
/// reference table of `family`.
pub fn coproduct_table_check(
    carrier: &Carrier,
    family: TwistFamily,
) -> Result<CoproductTableReport> {
    let table = table_for(family).ok_or(Error::FamilyMismatch {
        family: family.to_string(),
        algebra: carrier.algebra().name().to_string(),
    })?;
    let mut entries = Vec::new();
    for entry in table {
        let x = carrier.generator(entry.generator)?;
        let computed = carrier.twisted_coproduct(family, &x)?;
        let result = match &entry.kind {
            EntryKind::Verbatim(build) => {
                let expected = build(carrier)?;
                let matched = computed == expected;
                TableEntryResult {
                    generator: entry.generator.to_string(),
                    status: if matched {
                        EntryStatus::Match
                    } else {
                        EntryStatus::Fail
                    },
                    computed: computed.render(),
                    expected: Some(expected.render()),
                    ledger: None,
                }
            }
            EntryKind::Corrected {
                corrected,
                note,
                variants,
            } => {
                let expected = corrected(carrier)?;
                let corrected_matches = computed == expected;
                let mut readings = Vec::new();
                for (label, build) in variants.iter() {
                    let variant = build(carrier)?;
                    readings.push(ReadingResult {
                        label: label.to_string(),
                        matched: computed == variant,
                    });
                }
                let any_mismatch = readings.iter().any(|r| !r.matched);
                let status = if !corrected_matches {
                    EntryStatus::Fail
                } else if any_mismatch {
                    EntryStatus::RecordedMismatch
                } else {
                    EntryStatus::Match
                };
                TableEntryResult {
                    generator: entry.generator.to_string(),
                    status,
                    computed: computed.render(),
                    expected: Some(expected.render()),
                    ledger: Some(TypoLedgerEntry {
                        family: family.to_string(),
                        generator: entry.generator.to_string(),
                        note: note.to_string(),
                        readings,
                        corrected: expected.render(),
                    }),
                }
            }
            EntryKind::ComputedOnly => TableEntryResult {
                generator: entry.generator.to_string(),
                status: EntryStatus::ComputedOnly,
                computed: computed.render(),
                expected: None,
                ledger: None,
            },
        };
        entries.push(result);
    }
    Ok(CoproductTableReport {
        family,
        params: carrier.params().clone(),
        entries,
    })
}

fn table_for(family: TwistFamily) -> Option<&'static [TableEntry]> {
    match family {
        TwistFamily::FP => Some(TABLE_FP),
        TwistFamily::FPPrime => Some(TABLE_FP_PRIME),
        TwistFamily::F => Some(TABLE_F),
        TwistFamily::FTilde => Some(TABLE_F_TILDE),
        TwistFamily::FPrime => Some(TABLE_F_PRIME),
        TwistFamily::FTildePrime => Some(TABLE_F_TILDE_PRIME),
        _ => None,
    }
}

// --- small expression helpers -------------------------------------------

fn g(c: &Carrier, symbol: &str) -> Result<UeaElement> {
    c.generator(symbol)
}

fn one(c: &Carrier) -> UeaElement {
    c.unit_element()
}

fn neg(x: TensorElement) -> TensorElement {
    x.scaled(&-GaussianRational::one())
}

fn gamma(c: &Carrier) -> GaussianRational {
    c.params().gamma.clone()
}

fn delta(c: &Carrier) -> GaussianRational {
    c.params().delta.clone()
}

/// `x ⊗ 1 + 1 ⊗ x`
fn primitive(c: &Carrier, symbol: &str) -> Result<TensorElement> {
    let x = g(c, symbol)?;
    let unit = one(c);
    c.pair(&x, &unit)?.add(&c.pair(&unit, &x)?)
}

/// `E ⊗ e^{δσ} + 1 ⊗ E`, shared by every family.
fn delta_of_e(c: &Carrier) -> Result<TensorElement> {
    c.pair(&g(c, "E")?, &c.exp_sigma(1)?)?
        .add(&c.pair(&one(c), &g(c, "E")?)?)
}

// --- Δ_P on L (peripheric twist) ----------------------------------------

static TABLE_FP: &[TableEntry] = &[
    TableEntry {
        generator: "J",
        kind: EntryKind::Verbatim(|c| primitive(c, "J")),
    },
    TableEntry {
        generator: "H",
        // H⊗e^{-δσ} + 1⊗H - δ·A⊗Be^{-2δσ}
        kind: EntryKind::Verbatim(|c| {
            let t1 = c.pair(&g(c, "H")?, &c.exp_sigma(-1)?)?;
            let t2 = c.pair(&one(c), &g(c, "H")?)?;
            let b_exp = g(c, "B")?.mul(&c.exp_sigma(-2)?)?;
            let t3 = c.pair(&g(c, "A")?, &b_exp)?.scaled(&delta(c));
            t1.add(&t2)?.add(&neg(t3))
        }),
    },
    TableEntry {
        generator: "E",
        kind: EntryKind::Verbatim(delta_of_e),
    },
    TableEntry {
        generator: "A",
        // A⊗e^{-δσ} + 1⊗A
        kind: EntryKind::Verbatim(|c| {
            c.pair(&g(c, "A")?, &c.exp_sigma(-1)?)?
                .add(&c.pair(&one(c), &g(c, "A")?)?)
        }),
    },
    TableEntry {
        generator: "B",
        // B⊗e^{δσ} + e^{δσ}⊗B
        kind: EntryKind::Verbatim(|c| {
            c.pair(&g(c, "B")?, &c.exp_sigma(1)?)?
                .add(&c.pair(&c.exp_sigma(1)?, &g(c, "B")?)?)
        }),
    },
];

// --- Δ_P' on L' -----------------------------------------------------------

static TABLE_FP_PRIME: &[TableEntry] = &[
    TableEntry {
        generator: "J",
        kind: EntryKind::Verbatim(|c| primitive(c, "J")),
    },
    TableEntry {
        generator: "H",
        // H⊗e^{-δσ} + 1⊗H - δ·A⊗Be^{-δσ}
        kind: EntryKind::Verbatim(|c| {
            let t1 = c.pair(&g(c, "H")?, &c.exp_sigma(-1)?)?;
            let t2 = c.pair(&one(c), &g(c, "H")?)?;
            let b_exp = g(c, "B")?.mul(&c.exp_sigma(-1)?)?;
            let t3 = c.pair(&g(c, "A")?, &b_exp)?.scaled(&delta(c));
            t1.add(&t2)?.add(&neg(t3))
        }),
    },
    TableEntry {
        generator: "E",
        kind: EntryKind::Verbatim(delta_of_e),
    },
    TableEntry {
        generator: "A",
        kind: EntryKind::Verbatim(|c| primitive(c, "A")),
    },
    TableEntry {
        generator: "B",
        // B⊗1 + e^{δσ}⊗B
        kind: EntryKind::Verbatim(|c| {
            c.pair(&g(c, "B")?, &one(c))?
                .add(&c.pair(&c.exp_sigma(1)?, &g(c, "B")?)?)
        }),
    },
];

// --- Δ_F on L --------------------------------------------------------------

static TABLE_F: &[TableEntry] = &[
    TableEntry {
        generator: "J",
        // J⊗e^{-μρ} + 1⊗J
        kind: EntryKind::Verbatim(|c| {
            c.pair(&g(c, "J")?, &c.exp_rho(-1)?)?
                .add(&c.pair(&one(c), &g(c, "J")?)?)
        }),
    },
    TableEntry {
        generator: "H",
        kind: EntryKind::Corrected {
            // H⊗e^{-δσ} + 1⊗H - δ·J⊗Be^{-2δσ-μρ} - δ·A⊗Be^{-2δσ-μρ}
            corrected: |c| {
                let t1 = c.pair(&g(c, "H")?, &c.exp_sigma(-1)?)?;
                let t2 = c.pair(&one(c), &g(c, "H")?)?;
                let tail = g(c, "B")?.mul(&c.exp_sigma(-2)?)?.mul(&c.exp_rho(-1)?)?;
                let t3 = c.pair(&g(c, "J")?, &tail)?.scaled(&delta(c));
                let t4 = c.pair(&g(c, "A")?, &tail)?.scaled(&delta(c));
                t1.add(&t2)?.add(&neg(t3))?.add(&neg(t4))
            },
            note: "the J-leg factor is printed as e^{-μρ}{(δ-1)Be^{-δσ} + Be^{-2δσ}}, \
                   which agrees with the computed series only at δ = 1; the verified \
                   factor is δ·Be^{-2δσ-μρ}",
            variants: &[(
                "(δ-1)Be^{-δσ} + Be^{-2δσ} reading",
                |c| {
                    let t1 = c.pair(&g(c, "H")?, &c.exp_sigma(-1)?)?;
                    let t2 = c.pair(&one(c), &g(c, "H")?)?;
                    // e^{-μρ}·((δ-1)·Be^{-δσ} + Be^{-2δσ})
                    let inner = g(c, "B")?
                        .mul(&c.exp_sigma(-1)?)?
                        .scaled(&(delta(c) - GaussianRational::one()))
                        .add(&g(c, "B")?.mul(&c.exp_sigma(-2)?)?)?;
                    let t3 = c.pair(&g(c, "J")?, &c.exp_rho(-1)?.mul(&inner)?)?;
                    let tail = g(c, "B")?.mul(&c.exp_sigma(-2)?)?.mul(&c.exp_rho(-1)?)?;
                    let t4 = c.pair(&g(c, "A")?, &tail)?.scaled(&delta(c));
                    t1.add(&t2)?.add(&neg(t3))?.add(&neg(t4))
                },
            )],
        },
    },
    TableEntry {
        generator: "E",
        kind: EntryKind::Verbatim(delta_of_e),
    },
    TableEntry {
        generator: "A",
        // A⊗e^{-δσ-μρ} + 1⊗A - γ·J⊗Ee^{-δσ-μρ}
        kind: EntryKind::Verbatim(|c| {
            let decay = c.exp_sigma(-1)?.mul(&c.exp_rho(-1)?)?;
            let t1 = c.pair(&g(c, "A")?, &decay)?;
            let t2 = c.pair(&one(c), &g(c, "A")?)?;
            let t3 = c
                .pair(&g(c, "J")?, &g(c, "E")?.mul(&decay)?)?
                .scaled(&gamma(c));
            t1.add(&t2)?.add(&neg(t3))
        }),
    },
    TableEntry {
        generator: "B",
        // B⊗e^{δσ+μρ} + e^{δσ}⊗B
        kind: EntryKind::Verbatim(|c| {
            let grow = c.exp_sigma(1)?.mul(&c.exp_rho(1)?)?;
            c.pair(&g(c, "B")?, &grow)?
                .add(&c.pair(&c.exp_sigma(1)?, &g(c, "B")?)?)
        }),
    },
];

// --- Δ_F~ on L --------------------------------------------------------------

static TABLE_F_TILDE: &[TableEntry] = &[
    TableEntry {
        generator: "J",
        // J⊗1 + e^{-μρ}⊗J
        kind: EntryKind::Verbatim(|c| {
            c.pair(&g(c, "J")?, &one(c))?
                .add(&c.pair(&c.exp_rho(-1)?, &g(c, "J")?)?)
        }),
    },
    TableEntry {
        // no closed form for Δ_F~(H); the series is emitted for the record
        generator: "H",
        kind: EntryKind::ComputedOnly,
    },
    TableEntry {
        generator: "E",
        kind: EntryKind::Verbatim(delta_of_e),
    },
    TableEntry {
        generator: "A",
        kind: EntryKind::Corrected {
            // A⊗e^{-δσ} + e^{-μρ}⊗A - γ·Ee^{-δσ-μρ}⊗Je^{-δσ}
            corrected: |c| {
                let t1 = c.pair(&g(c, "A")?, &c.exp_sigma(-1)?)?;
                let t2 = c.pair(&c.exp_rho(-1)?, &g(c, "A")?)?;
                let left = g(c, "E")?.mul(&c.exp_sigma(-1)?)?.mul(&c.exp_rho(-1)?)?;
                let right = g(c, "J")?.mul(&c.exp_sigma(-1)?)?;
                let t3 = c.pair(&left, &right)?.scaled(&gamma(c));
                t1.add(&t2)?.add(&neg(t3))
            },
            note: "the final factor is printed as e^{-σμ}; neither the e^{-μρ} nor the \
                   e^{-μσ} reading reproduces the computed series for generic parameters \
                   (they coincide with it only when μ = δ); the verified factor is e^{-δσ}",
            variants: &[
                ("e^{-μρ} reading", |c| {
                    let t1 = c.pair(&g(c, "A")?, &c.exp_sigma(-1)?)?;
                    let t2 = c.pair(&c.exp_rho(-1)?, &g(c, "A")?)?;
                    let left = g(c, "E")?.mul(&c.exp_sigma(-1)?)?.mul(&c.exp_rho(-1)?)?;
                    let right = g(c, "J")?.mul(&c.exp_rho(-1)?)?;
                    let t3 = c.pair(&left, &right)?.scaled(&gamma(c));
                    t1.add(&t2)?.add(&neg(t3))
                }),
                ("e^{-μσ} reading", |c| {
                    let t1 = c.pair(&g(c, "A")?, &c.exp_sigma(-1)?)?;
                    let t2 = c.pair(&c.exp_rho(-1)?, &g(c, "A")?)?;
                    let left = g(c, "E")?.mul(&c.exp_sigma(-1)?)?.mul(&c.exp_rho(-1)?)?;
                    // e^{-μσ}
                    let mu_sigma = c.exp_of(
                        &-c.params().mu.clone(),
                        &c.primitives().sigma.clone(),
                    )?;
                    let right = g(c, "J")?.mul(&mu_sigma)?;
                    let t3 = c.pair(&left, &right)?.scaled(&gamma(c));
                    t1.add(&t2)?.add(&neg(t3))
                }),
            ],
        },
    },
    TableEntry {
        generator: "B",
        // B⊗e^{δσ} + e^{δσ+μρ}⊗B
        kind: EntryKind::Verbatim(|c| {
            let grow = c.exp_sigma(1)?.mul(&c.exp_rho(1)?)?;
            c.pair(&g(c, "B")?, &c.exp_sigma(1)?)?
                .add(&c.pair(&grow, &g(c, "B")?)?)
        }),
    },
];

// --- Δ_F' on L' -------------------------------------------------------------

static TABLE_F_PRIME: &[TableEntry] = &[
    TableEntry {
        generator: "J",
        // J⊗e^{-μρ'} + 1⊗J
        kind: EntryKind::Verbatim(|c| {
            c.pair(&g(c, "J")?, &c.exp_rho_prime(-1)?)?
                .add(&c.pair(&one(c), &g(c, "J")?)?)
        }),
    },
    TableEntry {
        // no closed form for Δ_F'(H)
        generator: "H",
        kind: EntryKind::ComputedOnly,
    },
    TableEntry {
        generator: "E",
        kind: EntryKind::Verbatim(delta_of_e),
    },
    TableEntry {
        generator: "A",
        // A⊗e^{μρ'} + 1⊗A
        kind: EntryKind::Verbatim(|c| {
            c.pair(&g(c, "A")?, &c.exp_rho_prime(1)?)?
                .add(&c.pair(&one(c), &g(c, "A")?)?)
        }),
    },
    TableEntry {
        generator: "B",
        // B⊗e^{-μρ'} + e^{δσ}⊗B + γ·Je^{δσ}⊗Ee^{-μρ'}
        kind: EntryKind::Verbatim(|c| {
            let t1 = c.pair(&g(c, "B")?, &c.exp_rho_prime(-1)?)?;
            let t2 = c.pair(&c.exp_sigma(1)?, &g(c, "B")?)?;
            let left = g(c, "J")?.mul(&c.exp_sigma(1)?)?;
            let right = g(c, "E")?.mul(&c.exp_rho_prime(-1)?)?;
            let t3 = c.pair(&left, &right)?.scaled(&gamma(c));
            t1.add(&t2)?.add(&t3)
        }),
    },
];

// --- Δ_F~' on L' -------------------------------------------------------------

static TABLE_F_TILDE_PRIME: &[TableEntry] = &[
    TableEntry {
        generator: "J",
        // J⊗1 + e^{-μρ'}⊗J
        kind: EntryKind::Verbatim(|c| {
            c.pair(&g(c, "J")?, &one(c))?
                .add(&c.pair(&c.exp_rho_prime(-1)?, &g(c, "J")?)?)
        }),
    },
    TableEntry {
        generator: "H",
        // H⊗e^{-δσ} + 1⊗H + (δ/μ)(e^{-μρ'}-1)⊗Je^{-δσ} - δ·Ae^{-μρ'}⊗Be^{-δσ}
        kind: EntryKind::Verbatim(|c| {
            let t1 = c.pair(&g(c, "H")?, &c.exp_sigma(-1)?)?;
            let t2 = c.pair(&one(c), &g(c, "H")?)?;
            let ratio = delta(c).checked_div(&c.params().mu)?;
            let shifted = c.exp_rho_prime(-1)?.add_scalar(&-GaussianRational::one());
            let t3 = c
                .pair(&shifted, &g(c, "J")?.mul(&c.exp_sigma(-1)?)?)?
                .scaled(&ratio);
            let left = g(c, "A")?.mul(&c.exp_rho_prime(-1)?)?;
            let t4 = c
                .pair(&left, &g(c, "B")?.mul(&c.exp_sigma(-1)?)?)?
                .scaled(&delta(c));
            t1.add(&t2)?.add(&t3)?.add(&neg(t4))
        }),
    },
    TableEntry {
        generator: "E",
        kind: EntryKind::Verbatim(delta_of_e),
    },
    TableEntry {
        generator: "A",
        // A⊗1 + e^{μρ'}⊗A
        kind: EntryKind::Verbatim(|c| {
            c.pair(&g(c, "A")?, &one(c))?
                .add(&c.pair(&c.exp_rho_prime(1)?, &g(c, "A")?)?)
        }),
    },
    TableEntry {
        generator: "B",
        // B⊗1 + e^{δσ-μρ'}⊗B + γ·Ee^{-μρ'}⊗J
        kind: EntryKind::Verbatim(|c| {
            let t1 = c.pair(&g(c, "B")?, &one(c))?;
            let mixed = c.exp_sigma(1)?.mul(&c.exp_rho_prime(-1)?)?;
            let t2 = c.pair(&mixed, &g(c, "B")?)?;
            let left = g(c, "E")?.mul(&c.exp_rho_prime(-1)?)?;
            let t3 = c.pair(&left, &g(c, "J")?)?.scaled(&gamma(c));
            t1.add(&t2)?.add(&t3)
        }),
    },
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::GaussianRational as G;

    fn carrier(side: CarrierSide, gamma: i64, delta: i64, mu: i64) -> Carrier {
        Carrier::new(side, TwistParams::from_ints(gamma, delta, mu), 4).unwrap()
    }

    #[test]
    fn peripheric_tables_match_exactly() {
        let l = carrier(CarrierSide::L, 2, 3, 5);
        let report = coproduct_table_check(&l, TwistFamily::FP).unwrap();
        for entry in &report.entries {
            assert_eq!(entry.status, EntryStatus::Match, "Δ_P({})", entry.generator);
        }
        let lp = carrier(CarrierSide::LPrime, 2, 3, 5);
        let report = coproduct_table_check(&lp, TwistFamily::FPPrime).unwrap();
        for entry in &report.entries {
            assert_eq!(entry.status, EntryStatus::Match, "Δ_P'({})", entry.generator);
        }
    }

    #[test]
    fn extended_tables_match_with_expected_ledger() {
        let l = carrier(CarrierSide::L, 2, 3, 5);
        let report_f = coproduct_table_check(&l, TwistFamily::F).unwrap();
        assert!(report_f.passed(false));
        assert!(!report_f.passed(true), "strict mode must flag the H entry");
        let ledger: Vec<&TypoLedgerEntry> = report_f.ledger_entries().collect();
        assert_eq!(ledger.len(), 1);
        assert_eq!(ledger[0].generator, "H");
        assert!(!ledger[0].readings[0].matched);

        let report_ft = coproduct_table_check(&l, TwistFamily::FTilde).unwrap();
        assert!(report_ft.passed(false));
        let ledger: Vec<&TypoLedgerEntry> = report_ft.ledger_entries().collect();
        assert_eq!(ledger.len(), 1);
        assert_eq!(ledger[0].generator, "A");
        // neither misprint reading matches at generic parameters
        assert!(ledger[0].readings.iter().all(|r| !r.matched));
        // Δ_F~(H) has no closed form: computed-only
        assert!(report_ft
            .entries
            .iter()
            .any(|e| e.generator == "H" && e.status == EntryStatus::ComputedOnly));

        let lp = carrier(CarrierSide::LPrime, 2, 3, 5);
        for family in [TwistFamily::FPrime, TwistFamily::FTildePrime] {
            let report = coproduct_table_check(&lp, family).unwrap();
            assert!(report.passed(true), "{family} should have no mismatches");
        }
    }

    #[test]
    fn corrected_h_entry_coincides_with_verbatim_at_delta_one() {
        // at δ = 1 the misprinted Δ_F(H) factor collapses to the correct one
        let l = carrier(CarrierSide::L, 2, 1, 5);
        let report = coproduct_table_check(&l, TwistFamily::F).unwrap();
        let h = report
            .entries
            .iter()
            .find(|e| e.generator == "H")
            .unwrap();
        assert_eq!(h.status, EntryStatus::Match);
        assert!(h.ledger.as_ref().unwrap().readings[0].matched);
    }

    #[test]
    fn ftilde_a_variants_coincide_when_mu_equals_delta() {
        let params = TwistParams::new(G::from_int(2), G::i(), G::i());
        let l = Carrier::new(CarrierSide::L, params, 4).unwrap();
        let report = coproduct_table_check(&l, TwistFamily::FTilde).unwrap();
        let a = report.entries.iter().find(|e| e.generator == "A").unwrap();
        let ledger = a.ledger.as_ref().unwrap();
        let msigma = ledger
            .readings
            .iter()
            .find(|r| r.label.contains("e^{-μσ}"))
            .unwrap();
        assert!(msigma.matched, "e^{{-μσ}} = e^{{-δσ}} when μ = δ");
    }

    #[test]
    fn spot_check_single_coproducts() {
        let l = carrier(CarrierSide::L, 1, 1, 3);
        // Δ_P(E) = E⊗e^{δσ} + 1⊗E
        let e = l.generator("E").unwrap();
        let computed = l.twisted_coproduct(TwistFamily::FP, &e).unwrap();
        assert_eq!(computed, delta_of_e(&l).unwrap());
        // Δ_F(J) = J⊗e^{-μρ} + 1⊗J
        let j = l.generator("J").unwrap();
        let computed = l.twisted_coproduct(TwistFamily::F, &j).unwrap();
        let expected = l
            .pair(&j, &l.exp_rho(-1).unwrap())
            .unwrap()
            .add(&l.pair(&l.unit_element(), &j).unwrap())
            .unwrap();
        assert_eq!(computed, expected);
        // Δ_P'(A) = A⊗1 + 1⊗A
        let lp = carrier(CarrierSide::LPrime, 1, 1, 3);
        let a = lp.generator("A").unwrap();
        let computed = lp.twisted_coproduct(TwistFamily::FPPrime, &a).unwrap();
        assert_eq!(computed, primitive(&lp, "A").unwrap());
    }
}
