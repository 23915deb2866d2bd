//! Truncated universal enveloping algebras over a graded Lie algebra.
//!
//! Elements are sparse maps from PBW monomials (generator powers in
//! declaration order) to Gaussian-rational coefficients, truncated to total
//! z-degree ≤ N. Because every bracket of the underlying algebra is
//! homogeneous, rewriting a word into the PBW basis never changes its
//! degree, so dropping words of degree > N at the door loses nothing that
//! could resurface at degree ≤ N: truncation is exact.

use crate::liealg::LieAlgebraDef;
use crate::scalars::GaussianRational;
use crate::{Error, Result};
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

/// A normal-ordered monomial: strictly increasing generator indices with
/// positive powers. The empty monomial is the unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PbwMonomial(Vec<(u32, u32)>);

impl PbwMonomial {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn generator(index: usize) -> Self {
        Self(vec![(index as u32, 1)])
    }

    /// `g^p`; the unit when `p = 0`.
    pub fn power(index: usize, power: u32) -> Self {
        if power == 0 {
            Self::unit()
        } else {
            Self(vec![(index as u32, power)])
        }
    }

    /// Builds from an ascending word; panics if the word is not sorted.
    fn from_sorted_word(word: &[u32]) -> Self {
        let mut exponents: Vec<(u32, u32)> = Vec::new();
        for &g in word {
            match exponents.last_mut() {
                Some((last, power)) if *last == g => *power += 1,
                Some((last, _)) => {
                    assert!(*last < g, "word not sorted");
                    exponents.push((g, 1));
                }
                None => exponents.push((g, 1)),
            }
        }
        Self(exponents)
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn degree(&self, algebra: &LieAlgebraDef) -> u32 {
        self.0
            .iter()
            .map(|&(g, p)| algebra.zdegree(g as usize) * p)
            .sum()
    }

    /// Total word length (sum of powers).
    pub fn len(&self) -> u32 {
        self.0.iter().map(|&(_, p)| p).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn push_word(&self, out: &mut Vec<u32>) {
        for &(g, p) in &self.0 {
            for _ in 0..p {
                out.push(g);
            }
        }
    }

    pub fn render(&self, algebra: &LieAlgebraDef) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&(g, p)| {
                let symbol = algebra.symbol(g as usize);
                if p == 1 {
                    symbol.to_string()
                } else {
                    format!("{symbol}^{p}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub(crate) type TermMap = BTreeMap<PbwMonomial, GaussianRational>;

/// An element of the truncated enveloping algebra.
#[derive(Debug, Clone)]
pub struct UeaElement {
    algebra: Arc<LieAlgebraDef>,
    order: u32,
    terms: TermMap,
}

impl PartialEq for UeaElement {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.terms == other.terms
            && (Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra)
    }
}

impl Eq for UeaElement {}

pub(crate) fn add_term(terms: &mut TermMap, monomial: PbwMonomial, coefficient: &GaussianRational) {
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

pub(crate) fn prune_zeros(terms: &mut TermMap) {
    terms.retain(|_, c| !c.is_zero());
}

impl UeaElement {
    pub fn zero(algebra: Arc<LieAlgebraDef>, order: u32) -> Self {
        Self {
            algebra,
            order,
            terms: TermMap::new(),
        }
    }

    pub fn unit(algebra: Arc<LieAlgebraDef>, order: u32) -> Self {
        let mut element = Self::zero(algebra, order);
        element
            .terms
            .insert(PbwMonomial::unit(), GaussianRational::one());
        element
    }

    pub fn scalar(algebra: Arc<LieAlgebraDef>, order: u32, value: &GaussianRational) -> Self {
        let mut element = Self::zero(algebra, order);
        if !value.is_zero() {
            element.terms.insert(PbwMonomial::unit(), value.clone());
        }
        element
    }

    /// A single generator as an element (dropped entirely if its degree
    /// already exceeds the truncation order).
    pub fn generator(algebra: Arc<LieAlgebraDef>, order: u32, index: usize) -> Self {
        let mut element = Self::zero(algebra.clone(), order);
        if algebra.zdegree(index) <= order {
            element
                .terms
                .insert(PbwMonomial::generator(index), GaussianRational::one());
        }
        element
    }

    pub fn from_terms(
        algebra: Arc<LieAlgebraDef>,
        order: u32,
        terms: impl IntoIterator<Item = (PbwMonomial, GaussianRational)>,
    ) -> Self {
        let mut out = Self::zero(algebra.clone(), order);
        for (monomial, coefficient) in terms {
            if monomial.degree(&algebra) <= order {
                add_term(&mut out.terms, monomial, &coefficient);
            }
        }
        prune_zeros(&mut out.terms);
        out
    }

    pub fn algebra(&self) -> &Arc<LieAlgebraDef> {
        &self.algebra
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, monomial: &PbwMonomial) -> GaussianRational {
        self.terms
            .get(monomial)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    /// Coefficient of the empty monomial.
    pub fn constant_term(&self) -> GaussianRational {
        self.coefficient(&PbwMonomial::unit())
    }

    /// Smallest z-degree among stored terms, or None for the zero element.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.degree(&self.algebra))
            .min()
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if !(Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra) {
            return Err(Error::AlgebraMismatch {
                left: self.algebra.name().to_string(),
                right: other.algebra.name().to_string(),
            });
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (monomial, coefficient) in &other.terms {
            add_term(&mut out.terms, monomial.clone(), coefficient);
        }
        prune_zeros(&mut out.terms);
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scaled(&-GaussianRational::one()))
    }

    pub fn scaled(&self, scale: &GaussianRational) -> Self {
        let mut out = Self::zero(self.algebra.clone(), self.order);
        if scale.is_zero() {
            return out;
        }
        for (monomial, coefficient) in &self.terms {
            out.terms.insert(monomial.clone(), scale * coefficient);
        }
        out
    }

    /// Adds `scale · scalar·1` to the element.
    pub fn add_scalar(&self, value: &GaussianRational) -> Self {
        let mut out = self.clone();
        add_term(&mut out.terms, PbwMonomial::unit(), value);
        prune_zeros(&mut out.terms);
        out
    }

    /// Product, exact at the shared truncation order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut multiplier = Multiplier::new(&self.algebra, self.order);
        let mut out = Self::zero(self.algebra.clone(), self.order);
        for (m1, c1) in &self.terms {
            let d1 = m1.degree(&self.algebra);
            if d1 > self.order {
                continue;
            }
            for (m2, c2) in &other.terms {
                if d1 + m2.degree(&self.algebra) > self.order {
                    continue;
                }
                let product = multiplier.monomials(m1, m2);
                let scale = c1 * c2;
                for (monomial, coefficient) in product.iter() {
                    add_term(&mut out.terms, monomial.clone(), &(&scale * coefficient));
                }
            }
        }
        prune_zeros(&mut out.terms);
        Ok(out)
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Integer power by repeated multiplication.
    pub fn pow(&self, exponent: u32) -> Result<Self> {
        let mut out = Self::unit(self.algebra.clone(), self.order);
        for _ in 0..exponent {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Canonical rendering: terms in monomial order, `coef · monomial`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(monomial, coefficient)| {
                let m = monomial.render(&self.algebra);
                if coefficient.is_one() {
                    m
                } else {
                    format!("{coefficient} · {m}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Normal orders an arbitrary word of generator indices, truncating at
/// z-degree ≤ `order`.
///
/// The rewrite `x_b x_a → x_a x_b + [x_b, x_a]` (for `b` after `a` in the
/// PBW order) terminates: a swap strictly reduces the inversion count at
/// fixed length, and a bracket substitution strictly reduces the length.
/// Grading homogeneity means every intermediate word keeps the degree of
/// the input, so the degree test happens once, up front.
pub fn normal_order(
    algebra: &Arc<LieAlgebraDef>,
    word: &[usize],
    order: u32,
) -> UeaElement {
    let word: Vec<u32> = word.iter().map(|&g| g as u32).collect();
    let terms = normal_order_word(algebra, &word, order);
    UeaElement {
        algebra: algebra.clone(),
        order,
        terms,
    }
}

fn word_degree(algebra: &LieAlgebraDef, word: &[u32]) -> u32 {
    word.iter().map(|&g| algebra.zdegree(g as usize)).sum()
}

fn normal_order_word(algebra: &LieAlgebraDef, word: &[u32], order: u32) -> TermMap {
    let mut out = TermMap::new();
    let input_degree = word_degree(algebra, word);
    if input_degree > order {
        return out;
    }
    let mut stack: Vec<(GaussianRational, Vec<u32>)> =
        vec![(GaussianRational::one(), word.to_vec())];
    while let Some((coefficient, w)) = stack.pop() {
        // grading homogeneity: rewrites never change the degree
        debug_assert_eq!(word_degree(algebra, &w), input_degree);
        match w.windows(2).position(|pair| pair[0] > pair[1]) {
            None => add_term(&mut out, PbwMonomial::from_sorted_word(&w), &coefficient),
            Some(i) => {
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                // [x_b, x_a] with b = w[i] > a = w[i+1]
                let bracket = algebra.bracket_generators(w[i] as usize, w[i + 1] as usize);
                for (generator, scale) in bracket.iter() {
                    let mut shorter = Vec::with_capacity(w.len() - 1);
                    shorter.extend_from_slice(&w[..i]);
                    shorter.push(generator as u32);
                    shorter.extend_from_slice(&w[i + 2..]);
                    stack.push((&coefficient * scale, shorter));
                }
                stack.push((coefficient, swapped));
            }
        }
    }
    prune_zeros(&mut out);
    out
}

/// Memoizing monomial-pair multiplier. The cache is a pure function table
/// (monomial pair → PBW expansion), so sharing or rebuilding it never
/// changes results.
pub(crate) struct Multiplier<'a> {
    algebra: &'a Arc<LieAlgebraDef>,
    order: u32,
    cache: HashMap<(PbwMonomial, PbwMonomial), Arc<TermMap>>,
}

impl<'a> Multiplier<'a> {
    pub(crate) fn new(algebra: &'a Arc<LieAlgebraDef>, order: u32) -> Self {
        Self {
            algebra,
            order,
            cache: HashMap::new(),
        }
    }

    pub(crate) fn monomials(&mut self, left: &PbwMonomial, right: &PbwMonomial) -> Arc<TermMap> {
        if let Some(hit) = self.cache.get(&(left.clone(), right.clone())) {
            return hit.clone();
        }
        let mut word = Vec::with_capacity((left.len() + right.len()) as usize);
        left.push_word(&mut word);
        right.push_word(&mut word);
        let product = Arc::new(normal_order_word(self.algebra, &word, self.order));
        self.cache
            .insert((left.clone(), right.clone()), product.clone());
        product
    }
}

/// The truncated series the twist construction needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesFn {
    /// `exp(x)`
    Exp,
    /// `ln(1 + x)`
    Log1p,
    /// `(1 + x)^{-1}`
    Inv1p,
    /// `(1 + x)^k` for any integer `k`
    Pow1p(i64),
}

/// Applies a Maclaurin series to an element with no constant term and all
/// terms of z-degree ≥ 1, so that the series terminates at the truncation
/// order.
pub fn series_apply(function: SeriesFn, x: &UeaElement) -> Result<UeaElement> {
    if !x.constant_term().is_zero() {
        return Err(Error::SeriesDomain {
            reason: "argument has a nonzero constant term".into(),
        });
    }
    if let Some(0) = x.min_degree() {
        return Err(Error::SeriesDomain {
            reason: "argument has a z-degree-0 term".into(),
        });
    }
    let order = x.order();
    let mut out = UeaElement::zero(x.algebra().clone(), order);
    let mut power = UeaElement::unit(x.algebra().clone(), order);
    for k in 0..=order as i64 {
        let coefficient = series_coefficient(function, k);
        if !coefficient.is_zero() {
            out = out.add(&power.scaled(&coefficient))?;
        }
        if k < order as i64 {
            power = power.mul(x)?;
        }
    }
    Ok(out)
}

fn series_coefficient(function: SeriesFn, k: i64) -> GaussianRational {
    match function {
        SeriesFn::Exp => {
            let mut factorial = GaussianRational::one();
            for j in 1..=k {
                factorial = factorial * GaussianRational::from_int(j);
            }
            GaussianRational::one().checked_div(&factorial).unwrap()
        }
        SeriesFn::Log1p => {
            if k == 0 {
                GaussianRational::zero()
            } else {
                // (-1)^{k+1} / k
                let sign = if k % 2 == 1 { 1 } else { -1 };
                GaussianRational::ratio(sign, k)
            }
        }
        SeriesFn::Inv1p => GaussianRational::from_int(if k % 2 == 0 { 1 } else { -1 }),
        SeriesFn::Pow1p(exponent) => {
            // Binomial coefficient C(exponent, k) for integer exponent.
            let mut numerator = GaussianRational::one();
            for j in 0..k {
                numerator = numerator * GaussianRational::from_int(exponent - j);
            }
            let mut factorial = GaussianRational::one();
            for j in 1..=k {
                factorial = factorial * GaussianRational::from_int(j);
            }
            numerator.checked_div(&factorial).unwrap()
        }
    }
}
