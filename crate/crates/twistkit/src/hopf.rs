//! Tensor powers of the enveloping algebra (2 and 3 legs) with the
//! undeformed Hopf structure.
//!
//! Terms are keyed by tuples of PBW monomials and truncated by *total*
//! z-degree across legs: the deformation degree is global, so a term like
//! `A ⊗ B·e^{-δσ}` mixes degrees between legs and only their sum matters.

use crate::liealg::LieAlgebraDef;
use crate::scalars::GaussianRational;
use crate::uea::{add_term as add_uea_term, Multiplier, PbwMonomial, TermMap, UeaElement};
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::sync::Arc;

/// A tensor monomial: one PBW monomial per leg.
pub type TensorMono = Vec<PbwMonomial>;

type TensorTerms = BTreeMap<TensorMono, GaussianRational>;

/// An element of `U^{⊗legs}`, truncated at total z-degree ≤ order.
#[derive(Debug, Clone)]
pub struct TensorElement {
    algebra: Arc<LieAlgebraDef>,
    legs: usize,
    order: u32,
    terms: TensorTerms,
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.legs == other.legs
            && self.order == other.order
            && self.terms == other.terms
            && (Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra)
    }
}

impl Eq for TensorElement {}

fn tensor_add_term(
    terms: &mut TensorTerms,
    monomial: TensorMono,
    coefficient: &GaussianRational,
) {
    if coefficient.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(monomial) {
        Entry::Occupied(mut occupied) => {
            *occupied.get_mut() += coefficient;
            if occupied.get().is_zero() {
                occupied.remove();
            }
        }
        Entry::Vacant(vacant) => {
            vacant.insert(coefficient.clone());
        }
    }
}

impl TensorElement {
    pub fn zero(algebra: Arc<LieAlgebraDef>, legs: usize, order: u32) -> Self {
        assert!(legs == 2 || legs == 3, "tensor legs must be 2 or 3");
        Self {
            algebra,
            legs,
            order,
            terms: TensorTerms::new(),
        }
    }

    /// `1 ⊗ 1 (⊗ 1)`.
    pub fn unit(algebra: Arc<LieAlgebraDef>, legs: usize, order: u32) -> Self {
        let mut out = Self::zero(algebra, legs, order);
        out.terms
            .insert(vec![PbwMonomial::unit(); legs], GaussianRational::one());
        out
    }

    /// The outer product `a ⊗ b` of two single-leg elements.
    pub fn of_pair(a: &UeaElement, b: &UeaElement) -> Result<Self> {
        compatible_uea(a, b)?;
        let algebra = a.algebra().clone();
        let order = a.order();
        let mut out = Self::zero(algebra.clone(), 2, order);
        for (m1, c1) in a.terms() {
            let d1 = m1.degree(&algebra);
            for (m2, c2) in b.terms() {
                if d1 + m2.degree(&algebra) > order {
                    continue;
                }
                tensor_add_term(&mut out.terms, vec![m1.clone(), m2.clone()], &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn algebra(&self) -> &Arc<LieAlgebraDef> {
        &self.algebra
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorMono, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, monomial: &TensorMono) -> GaussianRational {
        self.terms
            .get(monomial)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    fn total_degree(&self, monomial: &TensorMono) -> u32 {
        monomial.iter().map(|m| m.degree(&self.algebra)).sum()
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.legs != other.legs {
            return Err(Error::LegMismatch {
                left: self.legs,
                right: other.legs,
            });
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        if !(Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra) {
            return Err(Error::AlgebraMismatch {
                left: self.algebra.name().to_string(),
                right: other.algebra.name().to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (monomial, coefficient) in &other.terms {
            tensor_add_term(&mut out.terms, monomial.clone(), coefficient);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scaled(&-GaussianRational::one()))
    }

    pub fn scaled(&self, scale: &GaussianRational) -> Self {
        let mut out = Self::zero(self.algebra.clone(), self.legs, self.order);
        if scale.is_zero() {
            return out;
        }
        for (monomial, coefficient) in &self.terms {
            out.terms.insert(monomial.clone(), scale * coefficient);
        }
        out
    }

    /// Leg-wise product with total-degree truncation.
    pub fn tmul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let order = self.order;
        let mut multiplier = Multiplier::new(&self.algebra, order);
        let mut out = Self::zero(self.algebra.clone(), self.legs, order);

        // Bucket the right factor by total degree so pairs over budget are
        // never enumerated.
        let mut right_by_degree: Vec<Vec<(&TensorMono, &GaussianRational)>> =
            vec![Vec::new(); (order + 1) as usize];
        for (monomial, coefficient) in &other.terms {
            let degree = other.total_degree(monomial);
            if degree <= order {
                right_by_degree[degree as usize].push((monomial, coefficient));
            }
        }

        for (m1, c1) in &self.terms {
            let d1 = self.total_degree(m1);
            if d1 > order {
                continue;
            }
            for bucket in right_by_degree[..=(order - d1) as usize].iter() {
                for &(m2, c2) in bucket {
                    let scale = c1 * c2;
                    let leg_products: Vec<Arc<TermMap>> = (0..self.legs)
                        .map(|leg| multiplier.monomials(&m1[leg], &m2[leg]))
                        .collect();
                    self.accumulate_cross(&mut out.terms, &leg_products, &scale);
                }
            }
        }
        Ok(out)
    }

    /// Distributes `scale · (p_0 ⊗ p_1 (⊗ p_2))` over all combinations,
    /// filtering by total degree.
    fn accumulate_cross(
        &self,
        out: &mut TensorTerms,
        leg_products: &[Arc<TermMap>],
        scale: &GaussianRational,
    ) {
        let order = self.order;
        match leg_products {
            [first, second] => {
                for (m1, c1) in first.iter() {
                    let d1 = m1.degree(&self.algebra);
                    if d1 > order {
                        continue;
                    }
                    for (m2, c2) in second.iter() {
                        if d1 + m2.degree(&self.algebra) > order {
                            continue;
                        }
                        let coefficient = &(scale * c1) * c2;
                        tensor_add_term(out, vec![m1.clone(), m2.clone()], &coefficient);
                    }
                }
            }
            [first, second, third] => {
                for (m1, c1) in first.iter() {
                    let d1 = m1.degree(&self.algebra);
                    if d1 > order {
                        continue;
                    }
                    let s1 = scale * c1;
                    for (m2, c2) in second.iter() {
                        let d2 = d1 + m2.degree(&self.algebra);
                        if d2 > order {
                            continue;
                        }
                        let s2 = &s1 * c2;
                        for (m3, c3) in third.iter() {
                            if d2 + m3.degree(&self.algebra) > order {
                                continue;
                            }
                            tensor_add_term(
                                out,
                                vec![m1.clone(), m2.clone(), m3.clone()],
                                &(&s2 * c3),
                            );
                        }
                    }
                }
            }
            _ => unreachable!("legs validated at construction"),
        }
    }

    /// Swaps the two legs of a 2-leg element.
    pub fn flip21(&self) -> Result<Self> {
        if self.legs != 2 {
            return Err(Error::LegMismatch {
                left: self.legs,
                right: 2,
            });
        }
        let mut out = Self::zero(self.algebra.clone(), 2, self.order);
        for (monomial, coefficient) in &self.terms {
            out.terms
                .insert(vec![monomial[1].clone(), monomial[0].clone()], coefficient.clone());
        }
        Ok(out)
    }

    /// Embeds a 2-leg element into 3 legs, inserting the unit in the unused
    /// slot.
    pub fn leg_embed(&self, placement: Placement) -> Result<Self> {
        if self.legs != 2 {
            return Err(Error::LegMismatch {
                left: self.legs,
                right: 2,
            });
        }
        let mut out = Self::zero(self.algebra.clone(), 3, self.order);
        for (monomial, coefficient) in &self.terms {
            let (a, b) = (monomial[0].clone(), monomial[1].clone());
            let triple = match placement {
                Placement::Legs12 => vec![a, b, PbwMonomial::unit()],
                Placement::Legs13 => vec![a, PbwMonomial::unit(), b],
                Placement::Legs23 => vec![PbwMonomial::unit(), a, b],
            };
            out.terms.insert(triple, coefficient.clone());
        }
        Ok(out)
    }

    /// Applies `ε` to one leg of a 2-leg element, producing a single-leg
    /// element: only terms with the unit monomial in the evaluated leg
    /// survive.
    pub fn counit_on_leg(&self, leg: usize) -> Result<UeaElement> {
        if self.legs != 2 {
            return Err(Error::LegMismatch {
                left: self.legs,
                right: 2,
            });
        }
        assert!(leg < 2);
        let mut terms = TermMap::new();
        for (monomial, coefficient) in &self.terms {
            if monomial[leg].is_unit() {
                add_uea_term(&mut terms, monomial[1 - leg].clone(), coefficient);
            }
        }
        Ok(UeaElement::from_terms(
            self.algebra.clone(),
            self.order,
            terms,
        ))
    }

    /// Restricts to the terms of one total degree.
    pub fn degree_component(&self, degree: u32) -> Self {
        let mut out = Self::zero(self.algebra.clone(), self.legs, self.order);
        for (monomial, coefficient) in &self.terms {
            if self.total_degree(monomial) == degree {
                out.terms.insert(monomial.clone(), coefficient.clone());
            }
        }
        out
    }

    /// Term counts per total degree, for reports.
    pub fn degree_profile(&self) -> Vec<(u32, usize)> {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for monomial in self.terms.keys() {
            *counts.entry(self.total_degree(monomial)).or_default() += 1;
        }
        counts.into_iter().collect()
    }

    /// Canonical rendering `coef · (m1 | m2 | m3)`, terms sorted.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(monomial, coefficient)| {
                let legs = monomial
                    .iter()
                    .map(|m| m.render(&self.algebra))
                    .collect::<Vec<_>>()
                    .join(" | ");
                if coefficient.is_one() {
                    format!("({legs})")
                } else {
                    format!("{coefficient} · ({legs})")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn compatible_uea(a: &UeaElement, b: &UeaElement) -> Result<()> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    if !(Arc::ptr_eq(a.algebra(), b.algebra()) || a.algebra() == b.algebra()) {
        return Err(Error::AlgebraMismatch {
            left: a.algebra().name().to_string(),
            right: b.algebra().name().to_string(),
        });
    }
    Ok(())
}

/// Placement of a 2-leg element inside 3 legs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Placement {
    Legs12,
    Legs13,
    Legs23,
}

/// Which factor of a 2-leg element a coproduct is applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaSlot {
    First,
    Second,
}

/// The undeformed coproduct: the algebra-map extension of
/// `Δ(g) = g ⊗ 1 + 1 ⊗ g`.
pub fn coproduct(x: &UeaElement) -> Result<TensorElement> {
    let algebra = x.algebra().clone();
    let order = x.order();
    let mut out = TensorElement::zero(algebra.clone(), 2, order);
    for (monomial, coefficient) in x.terms() {
        let delta = coproduct_monomial(&algebra, order, monomial)?;
        out = out.add(&delta.scaled(coefficient))?;
    }
    Ok(out)
}

fn coproduct_monomial(
    algebra: &Arc<LieAlgebraDef>,
    order: u32,
    monomial: &PbwMonomial,
) -> Result<TensorElement> {
    let mut out = TensorElement::unit(algebra.clone(), 2, order);
    for &(generator, power) in monomial.exponents() {
        // Δ(g)^p expands binomially: g⊗1 and 1⊗g commute.
        let mut factor = TensorElement::zero(algebra.clone(), 2, order);
        let mut binomial = GaussianRational::one();
        for j in 0..=power {
            let left = PbwMonomial::power(generator as usize, j);
            let right = PbwMonomial::power(generator as usize, power - j);
            if left.degree(algebra) + right.degree(algebra) <= order {
                tensor_add_term(&mut factor.terms, vec![left, right], &binomial);
            }
            // C(p, j+1) = C(p, j)·(p-j)/(j+1)
            binomial = binomial
                * GaussianRational::from_int((power - j) as i64)
                    .checked_div(&GaussianRational::from_int((j + 1) as i64))
                    .unwrap();
        }
        out = out.tmul(&factor)?;
    }
    Ok(out)
}

/// The counit: the coefficient of the empty monomial (ε kills every
/// generator and fixes 1).
pub fn counit(x: &UeaElement) -> GaussianRational {
    x.constant_term()
}

/// `(Δ ⊗ id)` or `(id ⊗ Δ)` on a 2-leg element, producing 3 legs.
pub fn apply_delta(x: &TensorElement, slot: DeltaSlot) -> Result<TensorElement> {
    let algebra = x.algebra().clone();
    let order = x.order();
    let mut out = TensorElement::zero(algebra.clone(), 3, order);
    for (monomial, coefficient) in x.terms() {
        let (expanded_leg, passive_leg) = match slot {
            DeltaSlot::First => (&monomial[0], &monomial[1]),
            DeltaSlot::Second => (&monomial[1], &monomial[0]),
        };
        let passive_degree = passive_leg.degree(&algebra);
        if passive_degree > order {
            continue;
        }
        let delta = coproduct_monomial(&algebra, order, expanded_leg)?;
        for (pair, c) in delta.terms() {
            let triple = match slot {
                DeltaSlot::First => vec![pair[0].clone(), pair[1].clone(), passive_leg.clone()],
                DeltaSlot::Second => vec![passive_leg.clone(), pair[0].clone(), pair[1].clone()],
            };
            let degree: u32 = triple.iter().map(|m| m.degree(&algebra)).sum();
            if degree <= order {
                tensor_add_term(&mut out.terms, triple, &(coefficient * c));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{build_abstract, AbstractFamily};
    use crate::scalars::GaussianRational as G;
    use crate::uea::normal_order;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn algebra_l() -> Arc<LieAlgebraDef> {
        build_abstract(AbstractFamily::L, &G::from_int(2), &G::from_int(3), Some(&G::i()))
            .unwrap()
    }

    fn gen(algebra: &Arc<LieAlgebraDef>, order: u32, symbol: &str) -> UeaElement {
        UeaElement::generator(algebra.clone(), order, algebra.index_of(symbol).unwrap())
    }

    fn random_element(algebra: &Arc<LieAlgebraDef>, order: u32, rng: &mut StdRng) -> UeaElement {
        let mut out = UeaElement::zero(algebra.clone(), order);
        for _ in 0..rng.gen_range(1..=3) {
            let length = rng.gen_range(0..=3);
            let word: Vec<usize> = (0..length)
                .map(|_| rng.gen_range(0..algebra.dim()))
                .collect();
            let coefficient = G::from_parts(rng.gen_range(-2..=2), 1, rng.gen_range(-2..=2), 1);
            out = out
                .add(&normal_order(algebra, &word, order).scaled(&coefficient))
                .unwrap();
        }
        out
    }

    #[test]
    fn generators_are_primitive() {
        let algebra = algebra_l();
        let e = gen(&algebra, 4, "E");
        let delta = coproduct(&e).unwrap();
        let expected = TensorElement::of_pair(&e, &UeaElement::unit(algebra.clone(), 4))
            .unwrap()
            .add(&TensorElement::of_pair(&UeaElement::unit(algebra, 4), &e).unwrap())
            .unwrap();
        assert_eq!(delta, expected);
    }

    #[test]
    fn coproduct_of_square_is_binomial() {
        let algebra = algebra_l();
        let e = gen(&algebra, 4, "E");
        let e2 = e.mul(&e).unwrap();
        let delta = coproduct(&e2).unwrap();
        // E²⊗1 + 2E⊗E + 1⊗E²
        let unit = UeaElement::unit(algebra.clone(), 4);
        let expected = TensorElement::of_pair(&e2, &unit)
            .unwrap()
            .add(&TensorElement::of_pair(&e, &e).unwrap().scaled(&G::from_int(2)))
            .unwrap()
            .add(&TensorElement::of_pair(&unit, &e2).unwrap())
            .unwrap();
        assert_eq!(delta, expected);
    }

    #[test]
    fn coproduct_is_an_algebra_map_on_random_pairs() {
        let algebra = algebra_l();
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..40 {
            let x = random_element(&algebra, 4, &mut rng);
            let y = random_element(&algebra, 4, &mut rng);
            let lhs = coproduct(&x.mul(&y).unwrap()).unwrap();
            let rhs = coproduct(&x).unwrap().tmul(&coproduct(&y).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn counit_axioms() {
        let algebra = algebra_l();
        let mut rng = StdRng::seed_from_u64(29);
        let e = gen(&algebra, 4, "E");
        assert_eq!(counit(&e.scaled(&G::from_int(2)).add_scalar(&G::one())), G::one());
        let h = gen(&algebra, 4, "H");
        assert_eq!(counit(&h.mul(&e).unwrap()), G::zero());
        for _ in 0..40 {
            let x = random_element(&algebra, 4, &mut rng);
            let delta = coproduct(&x).unwrap();
            // (ε⊗id)Δ(x) = x = (id⊗ε)Δ(x)
            assert_eq!(delta.counit_on_leg(0).unwrap(), x);
            assert_eq!(delta.counit_on_leg(1).unwrap(), x);
        }
    }

    #[test]
    fn coassociativity_on_random_elements() {
        let algebra = algebra_l();
        let mut rng = StdRng::seed_from_u64(31);
        for _ in 0..25 {
            let x = random_element(&algebra, 4, &mut rng);
            let delta = coproduct(&x).unwrap();
            let left = apply_delta(&delta, DeltaSlot::First).unwrap();
            let right = apply_delta(&delta, DeltaSlot::Second).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn flip_is_an_involution_and_algebra_map() {
        let algebra = algebra_l();
        let mut rng = StdRng::seed_from_u64(37);
        for _ in 0..25 {
            let a = TensorElement::of_pair(
                &random_element(&algebra, 4, &mut rng),
                &random_element(&algebra, 4, &mut rng),
            )
            .unwrap();
            let b = TensorElement::of_pair(
                &random_element(&algebra, 4, &mut rng),
                &random_element(&algebra, 4, &mut rng),
            )
            .unwrap();
            assert_eq!(a.flip21().unwrap().flip21().unwrap(), a);
            assert_eq!(
                a.tmul(&b).unwrap().flip21().unwrap(),
                a.flip21().unwrap().tmul(&b.flip21().unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn flip_fixes_coproducts_of_primitives() {
        let algebra = algebra_l();
        let e = gen(&algebra, 4, "E");
        let delta = coproduct(&e).unwrap();
        assert_eq!(delta.flip21().unwrap(), delta);
    }

    #[test]
    fn leg_embed_examples() {
        let algebra = algebra_l();
        let a = gen(&algebra, 4, "A");
        let b = gen(&algebra, 4, "B");
        let ab = TensorElement::of_pair(&a, &b).unwrap();
        let embedded = ab.leg_embed(Placement::Legs13).unwrap();
        let mono = vec![
            PbwMonomial::generator(algebra.index_of("A").unwrap()),
            PbwMonomial::unit(),
            PbwMonomial::generator(algebra.index_of("B").unwrap()),
        ];
        assert_eq!(embedded.coefficient(&mono), G::one());
        assert_eq!(embedded.num_terms(), 1);

        let unit2 = TensorElement::unit(algebra.clone(), 2, 4);
        let unit3 = TensorElement::unit(algebra, 3, 4);
        assert_eq!(unit2.leg_embed(Placement::Legs12).unwrap(), unit3);
        assert_eq!(unit2.leg_embed(Placement::Legs23).unwrap(), unit3);
    }

    #[test]
    fn tmul_unit_and_square_of_commuting_tensor() {
        let algebra = algebra_l();
        let a = gen(&algebra, 4, "A");
        let b = gen(&algebra, 4, "B");
        let ab = TensorElement::of_pair(&a, &b).unwrap();
        let unit = TensorElement::unit(algebra.clone(), 2, 4);
        assert_eq!(unit.tmul(&ab).unwrap(), ab);
        // (A⊗B)(A⊗B) = A²⊗B² : A and B each commute with themselves
        let squared = ab.tmul(&ab).unwrap();
        let a2 = a.mul(&a).unwrap();
        let b2 = b.mul(&b).unwrap();
        assert_eq!(squared, TensorElement::of_pair(&a2, &b2).unwrap());
    }

    #[test]
    fn tmul_is_associative_on_random_triples() {
        let algebra = algebra_l();
        let mut rng = StdRng::seed_from_u64(41);
        for _ in 0..25 {
            let make = |rng: &mut StdRng| {
                TensorElement::of_pair(
                    &random_element(&algebra, 4, rng),
                    &random_element(&algebra, 4, rng),
                )
                .unwrap()
            };
            let a = make(&mut rng);
            let b = make(&mut rng);
            let c = make(&mut rng);
            assert_eq!(
                a.tmul(&b).unwrap().tmul(&c).unwrap(),
                a.tmul(&b.tmul(&c).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn apply_delta_on_primitive_leg() {
        let algebra = algebra_l();
        let e = gen(&algebra, 4, "E");
        let unit = UeaElement::unit(algebra.clone(), 4);
        let e_tensor_one = TensorElement::of_pair(&e, &unit).unwrap();
        let result = apply_delta(&e_tensor_one, DeltaSlot::First).unwrap();
        // (Δ⊗id)(E⊗1) = E⊗1⊗1 + 1⊗E⊗1
        let e_index = algebra.index_of("E").unwrap();
        let m1 = vec![
            PbwMonomial::generator(e_index),
            PbwMonomial::unit(),
            PbwMonomial::unit(),
        ];
        let m2 = vec![
            PbwMonomial::unit(),
            PbwMonomial::generator(e_index),
            PbwMonomial::unit(),
        ];
        assert_eq!(result.coefficient(&m1), G::one());
        assert_eq!(result.coefficient(&m2), G::one());
        assert_eq!(result.num_terms(), 2);
    }

    #[test]
    fn renders_are_canonical() {
        let algebra = algebra_l();
        let a = gen(&algebra, 4, "A");
        let b = gen(&algebra, 4, "B");
        let ab = TensorElement::of_pair(&a, &b).unwrap().scaled(&G::ratio(3, 2));
        assert_eq!(ab.render(), "3/2 · (A | B)");
        assert_eq!(
            TensorElement::zero(algebra, 2, 4).render(),
            "0"
        );
    }
}
