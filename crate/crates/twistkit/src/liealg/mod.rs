//! Lie algebras given by structure constants, with a generator grading.
//!
//! A [`LieAlgebraDef`] stores, for each generator pair `i < j`, the bracket
//! `[x_i, x_j]` as a linear combination of generators; antisymmetry is
//! implicit. Each generator carries a `zdegree` (the deformation-parameter
//! grading) and construction rejects any bracket that is not homogeneous,
//! which is exactly what makes degree truncation in the enveloping algebra
//! sound.

mod builders;
mod embedding;
mod json;

pub use builders::{build_abstract, build_concrete, AbstractFamily, ConcreteFamily};
pub use embedding::{
    build_embedding, dualize_recipe, embedding_check, EmbeddingFamily, EmbeddingRecipe,
    RelationCheck,
};
pub use json::{algebra_from_json, algebra_to_json, recipe_from_json, recipe_to_json};

use crate::scalars::GaussianRational;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// One generator: display symbol plus its grading degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub symbol: String,
    pub zdegree: u32,
}

/// A linear combination of generators with Gaussian-rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is semantic
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinComb(BTreeMap<usize, GaussianRational>);

impl LinComb {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(index: usize) -> Self {
        Self::term(GaussianRational::one(), index)
    }

    pub fn term(coefficient: GaussianRational, index: usize) -> Self {
        let mut map = BTreeMap::new();
        if !coefficient.is_zero() {
            map.insert(index, coefficient);
        }
        Self(map)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &GaussianRational)> {
        self.0.iter().map(|(k, v)| (*k, v))
    }

    pub fn coefficient(&self, index: usize) -> GaussianRational {
        self.0.get(&index).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn add_term(&mut self, coefficient: &GaussianRational, index: usize) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.0.entry(index).or_insert_with(GaussianRational::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.0.remove(&index);
        }
    }

    pub fn add_scaled(&mut self, scale: &GaussianRational, other: &Self) {
        for (index, coefficient) in other.iter() {
            self.add_term(&(scale * coefficient), index);
        }
    }

    pub fn scaled(&self, scale: &GaussianRational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(scale, self);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&-GaussianRational::one(), other);
        out
    }

    /// Renders against an algebra's generator symbols, e.g. `2i·P_t + P_3`.
    pub fn render(&self, algebra: &LieAlgebraDef) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (index, coefficient) in self.iter() {
            let symbol = &algebra.generators[index].symbol;
            if coefficient.is_one() {
                parts.push(symbol.clone());
            } else {
                parts.push(format!("{coefficient}·{symbol}"));
            }
        }
        parts.join(" + ")
    }
}

impl FromIterator<(usize, GaussianRational)> for LinComb {
    fn from_iter<T: IntoIterator<Item = (usize, GaussianRational)>>(iter: T) -> Self {
        let mut out = Self::zero();
        for (index, coefficient) in iter {
            out.add_term(&coefficient, index);
        }
        out
    }
}

/// How an algebra was built; twist construction requires an abstract carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraKind {
    Abstract(AbstractFamily),
    Concrete(ConcreteFamily),
    Custom,
}

/// A finite-dimensional Lie algebra over ℚ(i), defined by structure
/// constants on an ordered generator list. The generator order fixes the
/// PBW basis used by the enveloping-algebra layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebraDef {
    name: String,
    generators: Vec<Generator>,
    // Only i < j stored; [x_j, x_i] = -[x_i, x_j] and [x_i, x_i] = 0.
    brackets: BTreeMap<(usize, usize), LinComb>,
    kind: AlgebraKind,
}

impl LieAlgebraDef {
    /// Builds an algebra, validating the grading invariant: every term of
    /// `[x_i, x_j]` must have degree `zdegree(x_i) + zdegree(x_j)`.
    pub fn new(
        name: impl Into<String>,
        generators: Vec<Generator>,
        brackets: BTreeMap<(usize, usize), LinComb>,
        kind: AlgebraKind,
    ) -> Result<Arc<Self>> {
        let name = name.into();
        for (&(i, j), rhs) in &brackets {
            assert!(i < j && j < generators.len(), "bracket key out of range");
            let expected = generators[i].zdegree + generators[j].zdegree;
            for (k, _) in rhs.iter() {
                let got = generators[k].zdegree;
                if got != expected {
                    return Err(Error::GradingViolation {
                        algebra: name,
                        lhs: generators[i].symbol.clone(),
                        rhs: generators[j].symbol.clone(),
                        term: generators[k].symbol.clone(),
                        got,
                        expected,
                    });
                }
            }
        }
        Ok(Arc::new(Self {
            name,
            generators,
            brackets,
            kind,
        }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.kind
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn symbol(&self, index: usize) -> &str {
        &self.generators[index].symbol
    }

    pub fn zdegree(&self, index: usize) -> u32 {
        self.generators[index].zdegree
    }

    pub fn index_of(&self, symbol: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g.symbol == symbol)
            .ok_or_else(|| Error::UnknownGenerator {
                algebra: self.name.clone(),
                symbol: symbol.to_string(),
            })
    }

    /// `[x_i, x_j]` for arbitrary index order.
    pub fn bracket_generators(&self, i: usize, j: usize) -> LinComb {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self
                .brackets
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(LinComb::zero),
            std::cmp::Ordering::Equal => LinComb::zero(),
            std::cmp::Ordering::Greater => self
                .brackets
                .get(&(j, i))
                .map(|c| c.scaled(&-GaussianRational::one()))
                .unwrap_or_else(LinComb::zero),
        }
    }

    /// Bilinear extension of the bracket to linear combinations.
    pub fn bracket(&self, x: &LinComb, y: &LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let scale = a * b;
                out.add_scaled(&scale, &self.bracket_generators(i, j));
            }
        }
        out
    }

    pub fn stored_brackets(&self) -> impl Iterator<Item = (&(usize, usize), &LinComb)> {
        self.brackets.iter()
    }

    /// Checks the Jacobi identity over every generator triple `i < j < k`.
    pub fn jacobi_check(&self) -> JacobiReport {
        let mut violations = Vec::new();
        let n = self.dim();
        for i in 0..n {
            let xi = LinComb::generator(i);
            for j in (i + 1)..n {
                let xj = LinComb::generator(j);
                let bij = self.bracket_generators(i, j);
                for k in (j + 1)..n {
                    let xk = LinComb::generator(k);
                    let bjk = self.bracket_generators(j, k);
                    let bki = self.bracket_generators(k, i);
                    let mut residual = self.bracket(&bij, &xk);
                    let t2 = self.bracket(&bjk, &xi);
                    let t3 = self.bracket(&bki, &xj);
                    residual.add_scaled(&GaussianRational::one(), &t2);
                    residual.add_scaled(&GaussianRational::one(), &t3);
                    if !residual.is_zero() {
                        violations.push(JacobiViolation {
                            triple: (i, j, k),
                            residual,
                        });
                    }
                }
            }
        }
        JacobiReport {
            algebra: self.name.clone(),
            triples_checked: n * (n.saturating_sub(1)) * (n.saturating_sub(2)) / 6,
            violations,
        }
    }
}

/// A failed Jacobi triple with its residual.
#[derive(Debug, Clone)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: LinComb,
}

/// Result of [`LieAlgebraDef::jacobi_check`]; empty violations means pass.
#[derive(Debug, Clone)]
pub struct JacobiReport {
    pub algebra: String,
    pub triples_checked: usize,
    pub violations: Vec<JacobiViolation>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for JacobiReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(
                f,
                "jacobi {}: pass ({} triples)",
                self.algebra, self.triples_checked
            )
        } else {
            write!(
                f,
                "jacobi {}: FAIL ({} violating triples)",
                self.algebra,
                self.violations.len()
            )
        }
    }
}
