//! Construction of the six twist families and verification of the
//! Hopf-algebra identities they satisfy.
//!
//! A [`Carrier`] bundles one abstract algebra (`L` or `L'`) at fixed
//! parameters and truncation order together with the primitive series
//! `σ = ln(1+γE)/δ` (and `ρ` or `ρ'`) and all twist factors living on that
//! side. Factors are exponentials of arguments with positive z-degree, so
//! every series terminates at the truncation order and all results are
//! exact rationals.

pub mod tables;

pub use tables::{
    coproduct_table_check, CoproductTableReport, EntryStatus, TableEntryResult, TypoLedgerEntry,
};

use crate::hopf::{apply_delta, coproduct, DeltaSlot, Placement, TensorElement};
use crate::liealg::{build_abstract, AbstractFamily, LieAlgebraDef};
use crate::scalars::GaussianRational;
use crate::uea::{series_apply, SeriesFn, UeaElement};
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// Which 5-generator carrier a twist lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CarrierSide {
    L,
    LPrime,
}

impl CarrierSide {
    pub fn family(self) -> AbstractFamily {
        match self {
            CarrierSide::L => AbstractFamily::L,
            CarrierSide::LPrime => AbstractFamily::LPrime,
        }
    }
}

impl fmt::Display for CarrierSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CarrierSide::L => write!(f, "L"),
            CarrierSide::LPrime => write!(f, "L'"),
        }
    }
}

/// The twist families and their individual factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TwistFamily {
    PhiJ,
    PhiP,
    PhiPPrime,
    Phi,
    Phi21,
    PhiPrime,
    PhiPrime21,
    FP,
    FPPrime,
    F,
    FTilde,
    FPrime,
    FTildePrime,
}

impl TwistFamily {
    /// The six full twists.
    pub const MAIN: [TwistFamily; 6] = [
        TwistFamily::FP,
        TwistFamily::FPPrime,
        TwistFamily::F,
        TwistFamily::FTilde,
        TwistFamily::FPrime,
        TwistFamily::FTildePrime,
    ];

    pub fn side(self) -> CarrierSide {
        match self {
            TwistFamily::PhiJ => CarrierSide::L, // exists on both; default carrier
            TwistFamily::PhiP
            | TwistFamily::Phi
            | TwistFamily::Phi21
            | TwistFamily::FP
            | TwistFamily::F
            | TwistFamily::FTilde => CarrierSide::L,
            TwistFamily::PhiPPrime
            | TwistFamily::PhiPrime
            | TwistFamily::PhiPrime21
            | TwistFamily::FPPrime
            | TwistFamily::FPrime
            | TwistFamily::FTildePrime => CarrierSide::LPrime,
        }
    }
}

impl fmt::Display for TwistFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TwistFamily::PhiJ => "Φ_j",
            TwistFamily::PhiP => "Φ_P",
            TwistFamily::PhiPPrime => "Φ_P'",
            TwistFamily::Phi => "Φ",
            TwistFamily::Phi21 => "Φ_21",
            TwistFamily::PhiPrime => "Φ'",
            TwistFamily::PhiPrime21 => "Φ'_21",
            TwistFamily::FP => "F_P",
            TwistFamily::FPPrime => "F_P'",
            TwistFamily::F => "F",
            TwistFamily::FTilde => "F~",
            TwistFamily::FPrime => "F'",
            TwistFamily::FTildePrime => "F~'",
        };
        write!(f, "{s}")
    }
}

impl FromStr for TwistFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "phij" | "phi_j" => Ok(TwistFamily::PhiJ),
            "phip" | "phi_p" => Ok(TwistFamily::PhiP),
            "phipprime" | "phi_p'" => Ok(TwistFamily::PhiPPrime),
            "phi" => Ok(TwistFamily::Phi),
            "phi21" | "phi_21" => Ok(TwistFamily::Phi21),
            "phiprime" | "phi'" => Ok(TwistFamily::PhiPrime),
            "phiprime21" | "phi'_21" => Ok(TwistFamily::PhiPrime21),
            "fp" | "f_p" => Ok(TwistFamily::FP),
            "fpprime" | "fp'" | "f_p'" => Ok(TwistFamily::FPPrime),
            "f" => Ok(TwistFamily::F),
            "ftilde" | "f~" => Ok(TwistFamily::FTilde),
            "fprime" | "f'" => Ok(TwistFamily::FPrime),
            "ftildeprime" | "f~'" => Ok(TwistFamily::FTildePrime),
            _ => Err(Error::Config(format!("unknown twist family {s:?}"))),
        }
    }
}

/// Parameter triple of a carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistParams {
    pub gamma: GaussianRational,
    pub delta: GaussianRational,
    pub mu: GaussianRational,
}

impl TwistParams {
    pub fn new(gamma: GaussianRational, delta: GaussianRational, mu: GaussianRational) -> Self {
        Self { gamma, delta, mu }
    }

    pub fn from_ints(gamma: i64, delta: i64, mu: i64) -> Self {
        Self::new(
            GaussianRational::from_int(gamma),
            GaussianRational::from_int(delta),
            GaussianRational::from_int(mu),
        )
    }
}

impl fmt::Display for TwistParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "γ={},δ={},μ={}", self.gamma, self.delta, self.mu)
    }
}

/// The primitive series of one carrier: `σ`, the Borel partner
/// `w = B·e^{-δσ}` (on `L`), `ρ` or `ρ'`, and the named exponentials the
/// coproduct tables use.
#[derive(Debug, Clone)]
pub struct PrimitiveSeries {
    pub sigma: UeaElement,
    /// `B·e^{-δσ}`, the second primitive of the `L`-side peripheric twist.
    pub w: Option<UeaElement>,
    pub rho: Option<UeaElement>,
    pub rho_prime: Option<UeaElement>,
    pub exp_cache: BTreeMap<String, UeaElement>,
}

/// One twist with its factor decomposition and inverse.
#[derive(Debug, Clone)]
pub struct TwistBundle {
    pub family: TwistFamily,
    pub params: TwistParams,
    /// Factors listed left to right; `element` is their product.
    pub factors: Vec<(String, TensorElement)>,
    pub element: TensorElement,
    pub inverse: TensorElement,
}

/// One carrier algebra with all twist bundles living on it.
pub struct Carrier {
    side: CarrierSide,
    algebra: Arc<LieAlgebraDef>,
    params: TwistParams,
    order: u32,
    primitives: PrimitiveSeries,
    bundles: BTreeMap<TwistFamily, TwistBundle>,
}

/// `exp` of a tensor whose terms all have total degree ≥ 1.
pub fn tensor_exp(argument: &TensorElement) -> Result<TensorElement> {
    let order = argument.order();
    if argument
        .terms()
        .any(|(m, _)| m.iter().map(|p| p.degree(argument.algebra())).sum::<u32>() == 0)
    {
        return Err(Error::SeriesDomain {
            reason: "tensor exponent has a degree-0 term".into(),
        });
    }
    let mut out = TensorElement::unit(argument.algebra().clone(), argument.legs(), order);
    let mut power = out.clone();
    let mut factorial = GaussianRational::one();
    for k in 1..=order as i64 {
        power = power.tmul(argument)?;
        factorial = factorial * GaussianRational::from_int(k);
        out = out.add(&power.scaled(&factorial.inv()?))?;
    }
    Ok(out)
}

/// Order-by-order Neumann inversion of `1 + (positive-degree part)`.
pub fn tensor_inverse(element: &TensorElement) -> Result<TensorElement> {
    let algebra = element.algebra().clone();
    let order = element.order();
    let unit = TensorElement::unit(algebra, element.legs(), order);
    let x = element.sub(&unit)?;
    if x.degree_component(0).num_terms() != 0 {
        return Err(Error::SeriesDomain {
            reason: "element is not unit + higher-degree terms".into(),
        });
    }
    let mut out = unit.clone();
    let mut power = unit;
    let minus_one = -GaussianRational::one();
    for _ in 1..=order {
        power = power.tmul(&x)?.scaled(&minus_one);
        out = out.add(&power)?;
    }
    Ok(out)
}

impl Carrier {
    /// Builds the carrier algebra, its primitive series, and every twist
    /// bundle on that side.
    pub fn new(side: CarrierSide, params: TwistParams, order: u32) -> Result<Self> {
        let algebra = build_abstract(
            side.family(),
            &params.gamma,
            &params.delta,
            Some(&params.mu),
        )?;
        let placeholder = PrimitiveSeries {
            sigma: UeaElement::zero(algebra.clone(), order),
            w: None,
            rho: None,
            rho_prime: None,
            exp_cache: BTreeMap::new(),
        };
        let mut carrier = Self {
            side,
            algebra,
            params,
            order,
            primitives: placeholder,
            bundles: BTreeMap::new(),
        };
        carrier.primitives = carrier.build_primitives()?;
        carrier.build_bundles()?;
        Ok(carrier)
    }

    /// Convenience: the carrier a given family lives on.
    pub fn for_family(family: TwistFamily, params: TwistParams, order: u32) -> Result<Self> {
        Self::new(family.side(), params, order)
    }

    pub fn side(&self) -> CarrierSide {
        self.side
    }

    pub fn algebra(&self) -> &Arc<LieAlgebraDef> {
        &self.algebra
    }

    pub fn params(&self) -> &TwistParams {
        &self.params
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn primitives(&self) -> &PrimitiveSeries {
        &self.primitives
    }

    pub fn bundle(&self, family: TwistFamily) -> Result<&TwistBundle> {
        self.bundles.get(&family).ok_or(Error::FamilyMismatch {
            family: family.to_string(),
            algebra: self.algebra.name().to_string(),
        })
    }

    pub fn bundles(&self) -> impl Iterator<Item = &TwistBundle> {
        self.bundles.values()
    }

    /// The six-family list restricted to this side.
    pub fn main_families(&self) -> Vec<TwistFamily> {
        TwistFamily::MAIN
            .into_iter()
            .filter(|f| f.side() == self.side)
            .collect()
    }

    pub fn unit_element(&self) -> UeaElement {
        UeaElement::unit(self.algebra.clone(), self.order)
    }

    pub fn generator(&self, symbol: &str) -> Result<UeaElement> {
        Ok(UeaElement::generator(
            self.algebra.clone(),
            self.order,
            self.algebra.index_of(symbol)?,
        ))
    }

    pub fn tensor_unit(&self, legs: usize) -> TensorElement {
        TensorElement::unit(self.algebra.clone(), legs, self.order)
    }

    pub fn pair(&self, a: &UeaElement, b: &UeaElement) -> Result<TensorElement> {
        TensorElement::of_pair(a, b)
    }

    /// `exp(scale · x)` as a terminating series.
    pub fn exp_of(&self, scale: &GaussianRational, x: &UeaElement) -> Result<UeaElement> {
        series_apply(SeriesFn::Exp, &x.scaled(scale))
    }

    /// `e^{n·δσ}`.
    pub fn exp_sigma(&self, n: i64) -> Result<UeaElement> {
        let scale = &self.params.delta * GaussianRational::from_int(n);
        self.exp_of(&scale, &self.primitives.sigma)
    }

    /// `e^{n·μρ}` (L side only).
    pub fn exp_rho(&self, n: i64) -> Result<UeaElement> {
        let rho = self.primitives.rho.as_ref().ok_or(Error::FamilyMismatch {
            family: "ρ".into(),
            algebra: self.algebra.name().to_string(),
        })?;
        let scale = &self.params.mu * GaussianRational::from_int(n);
        self.exp_of(&scale, rho)
    }

    /// `e^{n·μρ'}` (L' side only).
    pub fn exp_rho_prime(&self, n: i64) -> Result<UeaElement> {
        let rho_prime = self
            .primitives
            .rho_prime
            .as_ref()
            .ok_or(Error::FamilyMismatch {
                family: "ρ'".into(),
                algebra: self.algebra.name().to_string(),
            })?;
        let scale = &self.params.mu * GaussianRational::from_int(n);
        self.exp_of(&scale, rho_prime)
    }

    fn build_primitives(&self) -> Result<PrimitiveSeries> {
        let gamma_e = self.generator("E")?.scaled(&self.params.gamma);
        // σ = ln(1 + γE)/δ
        let sigma =
            series_apply(SeriesFn::Log1p, &gamma_e)?.scaled(&self.params.delta.inv()?);
        let mut exp_cache = BTreeMap::new();
        let exp_sigma_of = |n: i64| -> Result<UeaElement> {
            let scale = &self.params.delta * GaussianRational::from_int(n);
            series_apply(SeriesFn::Exp, &sigma.scaled(&scale))
        };
        exp_cache.insert("e^{δσ}".to_string(), exp_sigma_of(1)?);
        exp_cache.insert("e^{-δσ}".to_string(), exp_sigma_of(-1)?);
        exp_cache.insert("e^{-2δσ}".to_string(), exp_sigma_of(-2)?);

        let mut series = PrimitiveSeries {
            sigma,
            w: None,
            rho: None,
            rho_prime: None,
            exp_cache,
        };
        match self.side {
            CarrierSide::L => {
                let w = self
                    .generator("B")?
                    .mul(&series.exp_cache["e^{-δσ}"])?;
                // ρ = ln(1 + μw)/μ
                let rho = series_apply(SeriesFn::Log1p, &w.scaled(&self.params.mu))?
                    .scaled(&self.params.mu.inv()?);
                let exp_rho_of = |n: i64| -> Result<UeaElement> {
                    let scale = &self.params.mu * GaussianRational::from_int(n);
                    series_apply(SeriesFn::Exp, &rho.scaled(&scale))
                };
                series
                    .exp_cache
                    .insert("e^{μρ}".to_string(), exp_rho_of(1)?);
                series
                    .exp_cache
                    .insert("e^{-μρ}".to_string(), exp_rho_of(-1)?);
                series.w = Some(w);
                series.rho = Some(rho);
            }
            CarrierSide::LPrime => {
                // ρ' = ln(1 + μA)/μ
                let mu_a = self.generator("A")?.scaled(&self.params.mu);
                let rho_prime =
                    series_apply(SeriesFn::Log1p, &mu_a)?.scaled(&self.params.mu.inv()?);
                let exp_of = |n: i64| -> Result<UeaElement> {
                    let scale = &self.params.mu * GaussianRational::from_int(n);
                    series_apply(SeriesFn::Exp, &rho_prime.scaled(&scale))
                };
                series
                    .exp_cache
                    .insert("e^{μρ'}".to_string(), exp_of(1)?);
                series
                    .exp_cache
                    .insert("e^{-μρ'}".to_string(), exp_of(-1)?);
                series.rho_prime = Some(rho_prime);
            }
        }
        Ok(series)
    }

    fn build_bundles(&mut self) -> Result<()> {
        let phi_j = tensor_exp(&self.pair(&self.generator("H")?, &self.primitives.sigma)?)?;
        match self.side {
            CarrierSide::L => {
                let w = self.primitives.w.clone().expect("w on L side");
                let rho = self.primitives.rho.clone().expect("rho on L side");
                let phi_p = tensor_exp(&self.pair(&self.generator("A")?, &w)?)?;
                let phi = tensor_exp(&self.pair(&self.generator("J")?, &rho)?)?;
                let phi21 = phi.flip21()?;
                let fp = phi_p.tmul(&phi_j)?;
                let f = phi.tmul(&fp)?;
                let ftilde = phi21.tmul(&fp)?;
                self.insert_bundle(TwistFamily::PhiJ, vec![("Φ_j", phi_j.clone())])?;
                self.insert_bundle(TwistFamily::PhiP, vec![("Φ_P", phi_p.clone())])?;
                self.insert_bundle(TwistFamily::Phi, vec![("Φ", phi.clone())])?;
                self.insert_bundle(TwistFamily::Phi21, vec![("Φ_21", phi21.clone())])?;
                self.insert_bundle(
                    TwistFamily::FP,
                    vec![("Φ_P", phi_p.clone()), ("Φ_j", phi_j.clone())],
                )?;
                self.insert_bundle(
                    TwistFamily::F,
                    vec![("Φ", phi), ("Φ_P", phi_p.clone()), ("Φ_j", phi_j.clone())],
                )?;
                self.insert_bundle(
                    TwistFamily::FTilde,
                    vec![("Φ_21", phi21), ("Φ_P", phi_p), ("Φ_j", phi_j)],
                )?;
                debug_assert_eq!(self.bundle(TwistFamily::F)?.element, f);
                debug_assert_eq!(self.bundle(TwistFamily::FTilde)?.element, ftilde);
                debug_assert_eq!(self.bundle(TwistFamily::FP)?.element, fp);
            }
            CarrierSide::LPrime => {
                let rho_prime = self.primitives.rho_prime.clone().expect("rho' on L' side");
                let phi_pp =
                    tensor_exp(&self.pair(&self.generator("A")?, &self.generator("B")?)?)?;
                let phi_prime = tensor_exp(&self.pair(&self.generator("J")?, &rho_prime)?)?;
                let phi_prime21 = phi_prime.flip21()?;
                self.insert_bundle(TwistFamily::PhiJ, vec![("Φ_j", phi_j.clone())])?;
                self.insert_bundle(TwistFamily::PhiPPrime, vec![("Φ_P'", phi_pp.clone())])?;
                self.insert_bundle(TwistFamily::PhiPrime, vec![("Φ'", phi_prime.clone())])?;
                self.insert_bundle(TwistFamily::PhiPrime21, vec![("Φ'_21", phi_prime21.clone())])?;
                self.insert_bundle(
                    TwistFamily::FPPrime,
                    vec![("Φ_P'", phi_pp.clone()), ("Φ_j", phi_j.clone())],
                )?;
                self.insert_bundle(
                    TwistFamily::FPrime,
                    vec![
                        ("Φ'", phi_prime),
                        ("Φ_P'", phi_pp.clone()),
                        ("Φ_j", phi_j.clone()),
                    ],
                )?;
                self.insert_bundle(
                    TwistFamily::FTildePrime,
                    vec![("Φ'_21", phi_prime21), ("Φ_P'", phi_pp), ("Φ_j", phi_j)],
                )?;
            }
        }
        Ok(())
    }

    fn insert_bundle(
        &mut self,
        family: TwistFamily,
        factors: Vec<(&str, TensorElement)>,
    ) -> Result<()> {
        let mut element = self.tensor_unit(2);
        for (_, factor) in &factors {
            element = element.tmul(factor)?;
        }
        let inverse = tensor_inverse(&element)?;
        // element · inverse = inverse · element = 1⊗1 must hold exactly
        let unit = self.tensor_unit(2);
        assert_eq!(
            element.tmul(&inverse)?,
            unit,
            "{family}: element · inverse ≠ 1⊗1"
        );
        assert_eq!(
            inverse.tmul(&element)?,
            unit,
            "{family}: inverse · element ≠ 1⊗1"
        );
        self.bundles.insert(
            family,
            TwistBundle {
                family,
                params: self.params.clone(),
                factors: factors
                    .into_iter()
                    .map(|(label, factor)| (label.to_string(), factor))
                    .collect(),
                element,
                inverse,
            },
        );
        Ok(())
    }

    /// `Δ_F(x) = F · Δ(x) · F^{-1}`.
    pub fn twisted_coproduct(&self, family: TwistFamily, x: &UeaElement) -> Result<TensorElement> {
        let bundle = self.bundle(family)?;
        let delta = coproduct(x)?;
        bundle.element.tmul(&delta)?.tmul(&bundle.inverse)
    }

    /// `(Δ_?⊗id)` (slot = First) or `(id⊗Δ_?)` (slot = Second) applied to a
    /// 2-leg element, with the coproduct optionally twisted by `family`.
    pub fn apply_delta_twisted(
        &self,
        x: &TensorElement,
        slot: DeltaSlot,
        family: Option<TwistFamily>,
    ) -> Result<TensorElement> {
        let base = apply_delta(x, slot)?;
        match family {
            None => Ok(base),
            Some(family) => {
                let bundle = self.bundle(family)?;
                let placement = match slot {
                    DeltaSlot::First => Placement::Legs12,
                    DeltaSlot::Second => Placement::Legs23,
                };
                let twist_3 = bundle.element.leg_embed(placement)?;
                let inverse_3 = bundle.inverse.leg_embed(placement)?;
                twist_3.tmul(&base)?.tmul(&inverse_3)
            }
        }
    }

    /// Counit conditions `(ε⊗id)F = (id⊗ε)F = 1`.
    pub fn counit_check(&self, family: TwistFamily) -> Result<CounitReport> {
        let bundle = self.bundle(family)?;
        let unit = self.unit_element();
        let left = bundle.element.counit_on_leg(0)?;
        let right = bundle.element.counit_on_leg(1)?;
        Ok(CounitReport {
            family,
            left_ok: left == unit,
            right_ok: right == unit,
        })
    }

    /// The cocycle equation `F_12 (Δ⊗id)(F) = F_23 (id⊗Δ)(F)`.
    pub fn cocycle_check(&self, family: TwistFamily) -> Result<CocycleReport> {
        let bundle = self.bundle(family)?;
        let lhs = bundle
            .element
            .leg_embed(Placement::Legs12)?
            .tmul(&apply_delta(&bundle.element, DeltaSlot::First)?)?;
        let rhs = bundle
            .element
            .leg_embed(Placement::Legs23)?
            .tmul(&apply_delta(&bundle.element, DeltaSlot::Second)?)?;
        let residual = lhs.sub(&rhs)?;
        Ok(CocycleReport {
            family,
            params: self.params.clone(),
            order: self.order,
            side_terms: (lhs.num_terms(), rhs.num_terms()),
            per_degree: lhs.degree_profile(),
            residual_terms: residual.num_terms(),
            residual,
        })
    }

    /// Twisted coassociativity `(Δ_F⊗id)Δ_F(x) = (id⊗Δ_F)Δ_F(x)`.
    pub fn coassociativity_check(&self, family: TwistFamily, x: &UeaElement) -> Result<bool> {
        let twisted = self.twisted_coproduct(family, x)?;
        let left = self.apply_delta_twisted(&twisted, DeltaSlot::First, Some(family))?;
        let right = self.apply_delta_twisted(&twisted, DeltaSlot::Second, Some(family))?;
        Ok(left == right)
    }

    /// `Δ_F([x, y]) = [Δ_F(x), Δ_F(y)]` (tensor-level commutator).
    pub fn homomorphism_transport_check(
        &self,
        family: TwistFamily,
        x: &UeaElement,
        y: &UeaElement,
    ) -> Result<bool> {
        let lhs = self.twisted_coproduct(family, &x.commutator(y)?)?;
        let dx = self.twisted_coproduct(family, x)?;
        let dy = self.twisted_coproduct(family, y)?;
        let rhs = dx.tmul(&dy)?.sub(&dy.tmul(&dx)?)?;
        Ok(lhs == rhs)
    }

    /// Is `x` primitive under `Δ_F`, i.e. `Δ_F(x) = x⊗1 + 1⊗x`?
    pub fn is_primitive(&self, family: TwistFamily, x: &UeaElement) -> Result<bool> {
        let twisted = self.twisted_coproduct(family, x)?;
        let unit = self.unit_element();
        let expected = self.pair(x, &unit)?.add(&self.pair(&unit, x)?)?;
        Ok(twisted == expected)
    }

    /// Degree-0 behaviour: at truncation order 0 every twist collapses to
    /// `1⊗1` and the twisted coproducts of the generators reduce to the
    /// undeformed ones.
    pub fn classical_limit_check(&self, family: TwistFamily) -> Result<ClassicalLimitReport> {
        let zero_order = Carrier::new(self.side, self.params.clone(), 0)?;
        let collapsed = zero_order.bundle(family)?.element.clone();
        let element_is_unit = collapsed == zero_order.tensor_unit(2);
        let mut generators = Vec::new();
        for index in 0..self.algebra.dim() {
            let symbol = self.algebra.symbol(index).to_string();
            let x = UeaElement::generator(self.algebra.clone(), self.order, index);
            let twisted = self.twisted_coproduct(family, &x)?.degree_component(0);
            let undeformed = coproduct(&x)?.degree_component(0);
            let vacuous = twisted.is_zero() && undeformed.is_zero();
            generators.push(ClassicalLimitEntry {
                generator: symbol,
                matches: twisted == undeformed,
                vacuous,
            });
        }
        Ok(ClassicalLimitReport {
            family,
            element_is_unit,
            generators,
        })
    }
}

#[derive(Debug, Clone)]
pub struct CounitReport {
    pub family: TwistFamily,
    pub left_ok: bool,
    pub right_ok: bool,
}

impl CounitReport {
    pub fn passed(&self) -> bool {
        self.left_ok && self.right_ok
    }
}

#[derive(Debug, Clone)]
pub struct CocycleReport {
    pub family: TwistFamily,
    pub params: TwistParams,
    pub order: u32,
    /// Term counts of the two sides before subtraction.
    pub side_terms: (usize, usize),
    /// Term counts per total degree on the left side.
    pub per_degree: Vec<(u32, usize)>,
    pub residual_terms: usize,
    pub residual: TensorElement,
}

impl CocycleReport {
    pub fn passed(&self) -> bool {
        self.residual_terms == 0
    }
}

#[derive(Debug, Clone)]
pub struct ClassicalLimitEntry {
    pub generator: String,
    pub matches: bool,
    pub vacuous: bool,
}

#[derive(Debug, Clone)]
pub struct ClassicalLimitReport {
    pub family: TwistFamily,
    pub element_is_unit: bool,
    pub generators: Vec<ClassicalLimitEntry>,
}

impl ClassicalLimitReport {
    pub fn passed(&self) -> bool {
        self.element_is_unit && self.generators.iter().all(|g| g.matches)
    }
}

/// The factorization identities satisfied by the twists and their factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorizationCheck {
    /// `(Δ⊗id)(F_P) = (F_P)_13 (F_P)_23` and `(id⊗Δ_{F_P})(F_P) = (F_P)_12 (F_P)_13`.
    FacFp,
    /// The same pair for `F_{P'}`.
    FacFpPrime,
    /// `(Δ_{P'}⊗id)(Φ_{P'}) = (Φ_{P'})_13 (Φ_{P'})_23` and
    /// `(id⊗Δ_j)(Φ_{P'}) = (Φ_{P'})_12 (Φ_{P'})_13`.
    Fac2,
    /// `(Δ_P⊗id)(Φ) = Φ_13 Φ_23` and `(id⊗Δ_F)(Φ) = Φ_12 Φ_13`.
    Fact1F,
    /// `(Δ_{P'}⊗id)(Φ') = Φ'_13 Φ'_23` and `(id⊗Δ_{F'})(Φ') = Φ'_12 Φ'_13`.
    Fact1FPrime,
    /// `(Δ_{F̃}⊗id)(Φ_21) = (Φ_21)_13 (Φ_21)_23` and
    /// `(id⊗Δ_P)(Φ_21) = (Φ_21)_12 (Φ_21)_13`.
    Fact2FTilde,
    /// The primed counterpart of `Fact2FTilde`.
    Fact2FTildePrime,
}

impl FactorizationCheck {
    pub const ALL: [FactorizationCheck; 7] = [
        FactorizationCheck::FacFp,
        FactorizationCheck::FacFpPrime,
        FactorizationCheck::Fac2,
        FactorizationCheck::Fact1F,
        FactorizationCheck::Fact1FPrime,
        FactorizationCheck::Fact2FTilde,
        FactorizationCheck::Fact2FTildePrime,
    ];

    pub fn side(self) -> CarrierSide {
        match self {
            FactorizationCheck::FacFp
            | FactorizationCheck::Fact1F
            | FactorizationCheck::Fact2FTilde => CarrierSide::L,
            _ => CarrierSide::LPrime,
        }
    }

    /// (subject, left-coproduct twist, right-coproduct twist)
    fn assignment(self) -> (TwistFamily, Option<TwistFamily>, Option<TwistFamily>) {
        match self {
            FactorizationCheck::FacFp => (TwistFamily::FP, None, Some(TwistFamily::FP)),
            FactorizationCheck::FacFpPrime => {
                (TwistFamily::FPPrime, None, Some(TwistFamily::FPPrime))
            }
            FactorizationCheck::Fac2 => (
                TwistFamily::PhiPPrime,
                Some(TwistFamily::FPPrime),
                Some(TwistFamily::PhiJ),
            ),
            FactorizationCheck::Fact1F => (
                TwistFamily::Phi,
                Some(TwistFamily::FP),
                Some(TwistFamily::F),
            ),
            FactorizationCheck::Fact1FPrime => (
                TwistFamily::PhiPrime,
                Some(TwistFamily::FPPrime),
                Some(TwistFamily::FPrime),
            ),
            FactorizationCheck::Fact2FTilde => (
                TwistFamily::Phi21,
                Some(TwistFamily::FTilde),
                Some(TwistFamily::FP),
            ),
            FactorizationCheck::Fact2FTildePrime => (
                TwistFamily::PhiPrime21,
                Some(TwistFamily::FTildePrime),
                Some(TwistFamily::FPPrime),
            ),
        }
    }
}

impl fmt::Display for FactorizationCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FactorizationCheck::FacFp => "fac[F_P]",
            FactorizationCheck::FacFpPrime => "fac[F_P']",
            FactorizationCheck::Fac2 => "fac2[Φ_P']",
            FactorizationCheck::Fact1F => "fact1[(P, F, Φ)]",
            FactorizationCheck::Fact1FPrime => "fact1[(P', F', Φ')]",
            FactorizationCheck::Fact2FTilde => "fact2[(P, F~, Φ_21)]",
            FactorizationCheck::Fact2FTildePrime => "fact2[(P', F~', Φ'_21)]",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone)]
pub struct FactorizationReport {
    pub check: FactorizationCheck,
    /// `(Δ_α⊗id)(Ψ) - Ψ_13 Ψ_23`
    pub left_residual_terms: usize,
    /// `(id⊗Δ_f)(Ψ) - Ψ_12 Ψ_13`
    pub right_residual_terms: usize,
}

impl FactorizationReport {
    pub fn passed(&self) -> bool {
        self.left_residual_terms == 0 && self.right_residual_terms == 0
    }
}

/// Runs one factorization identity on the matching carrier.
pub fn factorization_check(
    carrier: &Carrier,
    check: FactorizationCheck,
) -> Result<FactorizationReport> {
    if carrier.side() != check.side() {
        return Err(Error::FamilyMismatch {
            family: check.to_string(),
            algebra: carrier.algebra().name().to_string(),
        });
    }
    let (subject, left_twist, right_twist) = check.assignment();
    let psi = &carrier.bundle(subject)?.element;
    // (Δ_α ⊗ id)(Ψ) = Ψ_13 Ψ_23
    let lhs = carrier.apply_delta_twisted(psi, DeltaSlot::First, left_twist)?;
    let rhs = psi
        .leg_embed(Placement::Legs13)?
        .tmul(&psi.leg_embed(Placement::Legs23)?)?;
    let left_residual = lhs.sub(&rhs)?;
    // (id ⊗ Δ_f)(Ψ) = Ψ_12 Ψ_13
    let lhs2 = carrier.apply_delta_twisted(psi, DeltaSlot::Second, right_twist)?;
    let rhs2 = psi
        .leg_embed(Placement::Legs12)?
        .tmul(&psi.leg_embed(Placement::Legs13)?)?;
    let right_residual = lhs2.sub(&rhs2)?;
    Ok(FactorizationReport {
        check,
        left_residual_terms: left_residual.num_terms(),
        right_residual_terms: right_residual.num_terms(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::GaussianRational as G;

    fn params_111i() -> TwistParams {
        TwistParams::new(G::one(), G::one(), G::i())
    }

    fn generic_params() -> TwistParams {
        TwistParams::from_ints(2, 3, 5)
    }

    #[test]
    fn core_values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<crate::scalars::GaussianRational>();
        assert_send_sync::<crate::liealg::LieAlgebraDef>();
        assert_send_sync::<crate::uea::UeaElement>();
        assert_send_sync::<crate::hopf::TensorElement>();
        assert_send_sync::<crate::rmat::ClassicalR>();
        assert_send_sync::<Carrier>();
        assert_send_sync::<TwistBundle>();
    }

    #[test]
    fn sigma_is_the_mercator_series() {
        let carrier = Carrier::new(CarrierSide::L, params_111i(), 3).unwrap();
        assert_eq!(
            carrier.primitives().sigma.render(),
            "E + -1/2 · E^2 + 1/3 · E^3"
        );
    }

    #[test]
    fn exp_delta_sigma_is_one_plus_gamma_e() {
        for params in [params_111i(), generic_params(), TwistParams::new(G::from_parts(1, 2, -1, 3), G::from_parts(0, 1, 2, 1), G::from_int(-2))] {
            let carrier = Carrier::new(CarrierSide::L, params.clone(), 4).unwrap();
            let expected = carrier
                .generator("E")
                .unwrap()
                .scaled(&params.gamma)
                .add_scalar(&G::one());
            assert_eq!(carrier.exp_sigma(1).unwrap(), expected);
            // and e^{-δσ} agrees with the binomial route (1+γE)^{-1}
            let inv = crate::uea::series_apply(
                SeriesFn::Pow1p(-1),
                &carrier.generator("E").unwrap().scaled(&params.gamma),
            )
            .unwrap();
            assert_eq!(carrier.exp_sigma(-1).unwrap(), inv);
        }
    }

    #[test]
    fn exp_mu_rho_is_one_plus_mu_w() {
        let carrier = Carrier::new(CarrierSide::L, generic_params(), 4).unwrap();
        let w = carrier.primitives().w.clone().unwrap();
        let expected = w.scaled(&carrier.params().mu).add_scalar(&G::one());
        assert_eq!(carrier.exp_rho(1).unwrap(), expected);
    }

    #[test]
    fn exp_mu_rho_prime_is_one_plus_mu_a() {
        let carrier = Carrier::new(CarrierSide::LPrime, generic_params(), 4).unwrap();
        let expected = carrier
            .generator("A")
            .unwrap()
            .scaled(&carrier.params().mu)
            .add_scalar(&G::one());
        assert_eq!(carrier.exp_rho_prime(1).unwrap(), expected);
    }

    #[test]
    fn rho_prime_mercator_in_a() {
        // μ = 1: ρ' = A - A²/2 + ...
        let params = TwistParams::from_ints(1, 1, 1);
        let carrier = Carrier::new(CarrierSide::LPrime, params, 2).unwrap();
        assert_eq!(
            carrier.primitives().rho_prime.as_ref().unwrap().render(),
            "A + -1/2 · A^2"
        );
    }

    #[test]
    fn jordanian_factor_matches_hand_expansion_at_order_2() {
        // Φ_j = e^{H⊗σ} = 1⊗1 + H⊗E - ½H⊗E² + ½H²⊗E² for γ = δ = 1, N = 2
        let carrier = Carrier::new(CarrierSide::L, params_111i(), 2).unwrap();
        let phi_j = &carrier.bundle(TwistFamily::PhiJ).unwrap().element;
        assert_eq!(
            phi_j.render(),
            "(1 | 1) + (H | E) + -1/2 · (H | E^2) + 1/2 · (H^2 | E^2)"
        );
    }

    #[test]
    fn counit_conditions_hold_for_all_families() {
        for side in [CarrierSide::L, CarrierSide::LPrime] {
            let carrier = Carrier::new(side, generic_params(), 4).unwrap();
            for family in carrier.main_families() {
                assert!(carrier.counit_check(family).unwrap().passed(), "{family}");
            }
        }
    }

    #[test]
    fn cocycle_holds_for_fp_on_l() {
        let carrier = Carrier::new(CarrierSide::L, params_111i(), 4).unwrap();
        let report = carrier.cocycle_check(TwistFamily::FP).unwrap();
        assert!(report.passed(), "residual: {}", report.residual.render());
    }

    #[test]
    fn cocycle_holds_for_all_six_families_generic_params() {
        for side in [CarrierSide::L, CarrierSide::LPrime] {
            let carrier = Carrier::new(side, generic_params(), 4).unwrap();
            for family in carrier.main_families() {
                let report = carrier.cocycle_check(family).unwrap();
                assert!(report.passed(), "{family}: {} residual terms", report.residual_terms);
            }
        }
    }

    #[test]
    fn corrupted_factor_breaks_the_cocycle() {
        // Replace Φ_P = exp(A⊗Be^{-δσ}) with exp(A⊗B): the cocycle must fail.
        let carrier = Carrier::new(CarrierSide::L, params_111i(), 4).unwrap();
        let bad_phi_p = tensor_exp(
            &carrier
                .pair(
                    &carrier.generator("A").unwrap(),
                    &carrier.generator("B").unwrap(),
                )
                .unwrap(),
        )
        .unwrap();
        let phi_j = carrier.bundle(TwistFamily::PhiJ).unwrap().element.clone();
        let bad_fp = bad_phi_p.tmul(&phi_j).unwrap();
        let lhs = bad_fp
            .leg_embed(Placement::Legs12)
            .unwrap()
            .tmul(&apply_delta(&bad_fp, DeltaSlot::First).unwrap())
            .unwrap();
        let rhs = bad_fp
            .leg_embed(Placement::Legs23)
            .unwrap()
            .tmul(&apply_delta(&bad_fp, DeltaSlot::Second).unwrap())
            .unwrap();
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn factorizations_hold_at_order_4() {
        let l = Carrier::new(CarrierSide::L, generic_params(), 4).unwrap();
        let lp = Carrier::new(CarrierSide::LPrime, generic_params(), 4).unwrap();
        for check in FactorizationCheck::ALL {
            let carrier = match check.side() {
                CarrierSide::L => &l,
                CarrierSide::LPrime => &lp,
            };
            let report = factorization_check(carrier, check).unwrap();
            assert!(
                report.passed(),
                "{check}: residuals {} / {}",
                report.left_residual_terms,
                report.right_residual_terms
            );
        }
    }

    #[test]
    fn classical_limit_reproduces_undeformed_structure() {
        let carrier = Carrier::new(CarrierSide::L, generic_params(), 3).unwrap();
        for family in carrier.main_families() {
            let report = carrier.classical_limit_check(family).unwrap();
            assert!(report.passed(), "{family}");
            // E and B have positive degree: their degree-0 checks are vacuous
            let vacuous: Vec<&str> = report
                .generators
                .iter()
                .filter(|g| g.vacuous)
                .map(|g| g.generator.as_str())
                .collect();
            assert_eq!(vacuous, ["E", "B"]);
        }
    }

    #[test]
    fn primitivity_catalogue() {
        let l = Carrier::new(CarrierSide::L, generic_params(), 4).unwrap();
        let lp = Carrier::new(CarrierSide::LPrime, generic_params(), 4).unwrap();
        let sigma_l = l.primitives().sigma.clone();
        let w = l.primitives().w.clone().unwrap();
        let rho = l.primitives().rho.clone().unwrap();
        let j_l = l.generator("J").unwrap();

        // σ and Be^{-δσ} are primitive under Δ_P; J is primitive too.
        assert!(l.is_primitive(TwistFamily::FP, &sigma_l).unwrap());
        assert!(l.is_primitive(TwistFamily::FP, &w).unwrap());
        assert!(l.is_primitive(TwistFamily::FP, &j_l).unwrap());
        // ρ is NOT primitive under Δ_P but is under Δ_F and Δ_F~.
        assert!(!l.is_primitive(TwistFamily::FP, &rho).unwrap());
        assert!(l.is_primitive(TwistFamily::F, &rho).unwrap());
        assert!(l.is_primitive(TwistFamily::FTilde, &rho).unwrap());
        // σ stays primitive under the extensions.
        assert!(l.is_primitive(TwistFamily::F, &sigma_l).unwrap());
        assert!(l.is_primitive(TwistFamily::FTilde, &sigma_l).unwrap());

        let sigma_lp = lp.primitives().sigma.clone();
        let rho_prime = lp.primitives().rho_prime.clone().unwrap();
        let a = lp.generator("A").unwrap();
        let j_lp = lp.generator("J").unwrap();
        // σ and A primitive under Δ_P'; J primitive.
        assert!(lp.is_primitive(TwistFamily::FPPrime, &sigma_lp).unwrap());
        assert!(lp.is_primitive(TwistFamily::FPPrime, &a).unwrap());
        assert!(lp.is_primitive(TwistFamily::FPPrime, &j_lp).unwrap());
        // ρ' primitive under Δ_F' and Δ_F~'.
        assert!(lp.is_primitive(TwistFamily::FPrime, &rho_prime).unwrap());
        assert!(lp.is_primitive(TwistFamily::FTildePrime, &rho_prime).unwrap());
        assert!(lp.is_primitive(TwistFamily::FPrime, &sigma_lp).unwrap());
        assert!(lp.is_primitive(TwistFamily::FTildePrime, &sigma_lp).unwrap());
    }

    #[test]
    fn twisted_coassociativity_on_generators() {
        let carrier = Carrier::new(CarrierSide::L, params_111i(), 3).unwrap();
        for family in carrier.main_families() {
            for symbol in ["J", "H", "E", "A", "B"] {
                let x = carrier.generator(symbol).unwrap();
                assert!(
                    carrier.coassociativity_check(family, &x).unwrap(),
                    "{family} on {symbol}"
                );
            }
        }
    }

    #[test]
    fn homomorphism_transport_on_generator_pairs() {
        let carrier = Carrier::new(CarrierSide::L, generic_params(), 3).unwrap();
        for family in [TwistFamily::F, TwistFamily::FTilde] {
            for x in ["J", "H", "E", "A", "B"] {
                for y in ["J", "H", "E", "A", "B"] {
                    let gx = carrier.generator(x).unwrap();
                    let gy = carrier.generator(y).unwrap();
                    assert!(
                        carrier.homomorphism_transport_check(family, &gx, &gy).unwrap(),
                        "{family}: [{x}, {y}]"
                    );
                }
            }
        }
    }
}
