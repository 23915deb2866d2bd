//! Universal R-matrices, classical r-matrix extraction, the Yang–Baxter
//! equations, and pushforward of r-matrices along embeddings.

use crate::hopf::{Placement, TensorElement};
use crate::liealg::{embedding_check, EmbeddingRecipe, LieAlgebraDef};
use crate::scalars::GaussianRational;
use crate::twist::TwistBundle;
use crate::uea::PbwMonomial;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::sync::Arc;

/// A classical r-matrix in wedge form: `Σ c_{ij} x_i ∧ x_j` with
/// `x ∧ y = x⊗y - y⊗x` and keys strictly `i < j` (antisymmetry is
/// structural).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalR {
    algebra: Arc<LieAlgebraDef>,
    terms: BTreeMap<(usize, usize), GaussianRational>,
}

impl ClassicalR {
    pub fn zero(algebra: Arc<LieAlgebraDef>) -> Self {
        Self {
            algebra,
            terms: BTreeMap::new(),
        }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebraDef> {
        &self.algebra
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &GaussianRational)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coefficient · x_i ∧ x_j` for arbitrary index order.
    pub fn add_wedge(&mut self, i: usize, j: usize, coefficient: &GaussianRational) {
        if coefficient.is_zero() || i == j {
            return;
        }
        let (key, value) = if i < j {
            ((i, j), coefficient.clone())
        } else {
            ((j, i), -coefficient)
        };
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Occupied(mut occupied) => {
                *occupied.get_mut() += &value;
                if occupied.get().is_zero() {
                    occupied.remove();
                }
            }
            Entry::Vacant(vacant) => {
                vacant.insert(value);
            }
        }
    }

    /// Builds from symbol pairs, e.g. `[("H", "E", γ/δ)]`.
    pub fn from_wedges(
        algebra: Arc<LieAlgebraDef>,
        wedges: &[(&str, &str, GaussianRational)],
    ) -> Result<Self> {
        let mut out = Self::zero(algebra.clone());
        for (left, right, coefficient) in wedges {
            let i = algebra.index_of(left)?;
            let j = algebra.index_of(right)?;
            out.add_wedge(i, j, coefficient);
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((i, j), coefficient) in other.terms() {
            out.add_wedge(i, j, coefficient);
        }
        out
    }

    pub fn scaled(&self, scale: &GaussianRational) -> Self {
        let mut out = Self::zero(self.algebra.clone());
        for ((i, j), coefficient) in self.terms() {
            out.add_wedge(i, j, &(scale * coefficient));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scaled(&-GaussianRational::one()))
    }

    /// The expansion `Σ c·(x_i⊗x_j) - c·(x_j⊗x_i)` as a flat tensor list.
    fn expanded(&self) -> Vec<(usize, usize, GaussianRational)> {
        let mut out = Vec::with_capacity(self.terms.len() * 2);
        for ((i, j), coefficient) in self.terms() {
            out.push((i, j, coefficient.clone()));
            out.push((j, i, -coefficient));
        }
        out
    }

    /// Canonical rendering, e.g. `J∧B + A∧B + 2/3·H∧E`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(&(i, j), coefficient)| {
                let wedge = format!(
                    "{}∧{}",
                    self.algebra.symbol(i),
                    self.algebra.symbol(j)
                );
                if coefficient.is_one() {
                    wedge
                } else {
                    format!("{coefficient}·{wedge}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// JSON rendering: `[{"pair": [sym1, sym2], "coef": gr-string}]`,
    /// sorted by generator indices.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(&(i, j), coefficient)| {
                    serde_json::json!({
                        "pair": [self.algebra.symbol(i), self.algebra.symbol(j)],
                        "coef": coefficient.to_string(),
                    })
                })
                .collect(),
        )
    }
}

/// The universal R-matrix `R = F_21 F^{-1}` of a twist bundle.
pub fn universal_r(bundle: &TwistBundle) -> Result<TensorElement> {
    bundle.element.flip21()?.tmul(&bundle.inverse)
}

/// Extracts the classical r-matrix from a universal R-matrix.
///
/// `r` is normalized by `R = 1⊗1 - r + O(degree 2)`: the degree-1 part of
/// `R_21` (equivalently of `R^{-1}`, the two being equal for twist
/// R-matrices). With the wedge convention `x∧y = x⊗y - y⊗x` this is the
/// normalization under which the Jordanian twist yields `+(γ/δ)·H∧E`.
pub fn extract_classical_r(r_matrix: &TensorElement) -> Result<ClassicalR> {
    if r_matrix.legs() != 2 {
        return Err(Error::LegMismatch {
            left: r_matrix.legs(),
            right: 2,
        });
    }
    let algebra = r_matrix.algebra().clone();
    let unit = TensorElement::unit(algebra.clone(), 2, r_matrix.order());
    if r_matrix.degree_component(0) != unit.degree_component(0) {
        return Err(Error::NotClassical {
            reason: "degree-0 part is not 1⊗1".into(),
        });
    }
    let degree_one = r_matrix.degree_component(1);
    // collect as generator⊗generator coefficients
    let mut tensor: BTreeMap<(usize, usize), GaussianRational> = BTreeMap::new();
    for (monomial, coefficient) in degree_one.terms() {
        let single = |m: &PbwMonomial| -> Option<usize> {
            match m.exponents() {
                [(g, 1)] => Some(*g as usize),
                _ => None,
            }
        };
        match (single(&monomial[0]), single(&monomial[1])) {
            (Some(i), Some(j)) => {
                tensor.insert((i, j), coefficient.clone());
            }
            _ => {
                return Err(Error::NotClassical {
                    reason: format!(
                        "degree-1 term is not generator⊗generator: {}",
                        degree_one.render()
                    ),
                })
            }
        }
    }
    // antisymmetry of the degree-1 part
    for (&(i, j), coefficient) in &tensor {
        let transposed = tensor
            .get(&(j, i))
            .cloned()
            .unwrap_or_else(GaussianRational::zero);
        if !(coefficient + &transposed).is_zero() {
            return Err(Error::NotClassical {
                reason: format!(
                    "degree-1 part not antisymmetric at ({}, {})",
                    r_matrix.algebra().symbol(i),
                    r_matrix.algebra().symbol(j)
                ),
            });
        }
    }
    let mut out = ClassicalR::zero(algebra);
    for (&(i, j), coefficient) in &tensor {
        if i < j {
            // R = 1 - r + ... : flip the sign of the leading deviation
            out.add_wedge(i, j, &-coefficient);
        }
    }
    Ok(out)
}

/// Residual of the classical Yang–Baxter equation:
/// `[[r, r]] = [r_12, r_13] + [r_12, r_23] + [r_13, r_23]` computed in
/// `g⊗g⊗g` from structure constants alone (exact, no truncation).
pub fn cybe_residual(r: &ClassicalR) -> CybeReport {
    let algebra = r.algebra.clone();
    let expanded = r.expanded();
    let mut residual: BTreeMap<(usize, usize, usize), GaussianRational> = BTreeMap::new();
    let mut add = |key: (usize, usize, usize), value: GaussianRational| {
        if value.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match residual.entry(key) {
            Entry::Occupied(mut occupied) => {
                *occupied.get_mut() += &value;
                if occupied.get().is_zero() {
                    occupied.remove();
                }
            }
            Entry::Vacant(vacant) => {
                vacant.insert(value);
            }
        }
    };
    for (a1, b1, c1) in &expanded {
        for (a2, b2, c2) in &expanded {
            let scale = c1 * c2;
            // [r_12, r_13] = [a1, a2] ⊗ b1 ⊗ b2
            for (k, coefficient) in algebra.bracket_generators(*a1, *a2).iter() {
                add((k, *b1, *b2), &scale * coefficient);
            }
            // [r_12, r_23] = a1 ⊗ [b1, a2] ⊗ b2
            for (k, coefficient) in algebra.bracket_generators(*b1, *a2).iter() {
                add((*a1, k, *b2), &scale * coefficient);
            }
            // [r_13, r_23] = a1 ⊗ a2 ⊗ [b1, b2]
            for (k, coefficient) in algebra.bracket_generators(*b1, *b2).iter() {
                add((*a1, *a2, k), &scale * coefficient);
            }
        }
    }
    CybeReport { algebra, residual }
}

/// Residual tensor of a CYBE check; empty means the equation holds.
#[derive(Debug, Clone)]
pub struct CybeReport {
    algebra: Arc<LieAlgebraDef>,
    residual: BTreeMap<(usize, usize, usize), GaussianRational>,
}

impl CybeReport {
    pub fn passed(&self) -> bool {
        self.residual.is_empty()
    }

    pub fn residual_terms(&self) -> usize {
        self.residual.len()
    }

    pub fn render(&self) -> String {
        if self.residual.is_empty() {
            return "0".to_string();
        }
        self.residual
            .iter()
            .map(|(&(i, j, k), coefficient)| {
                format!(
                    "{coefficient}·({} | {} | {})",
                    self.algebra.symbol(i),
                    self.algebra.symbol(j),
                    self.algebra.symbol(k)
                )
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Pushes a classical r-matrix forward along an embedding recipe
/// (which must pass `embedding_check`), re-canonicalizing the wedges in
/// the target basis.
pub fn pushforward(r: &ClassicalR, recipe: &EmbeddingRecipe) -> Result<ClassicalR> {
    if !(Arc::ptr_eq(&r.algebra, &recipe.source) || r.algebra == recipe.source) {
        return Err(Error::AlgebraMismatch {
            left: r.algebra.name().to_string(),
            right: recipe.source.name().to_string(),
        });
    }
    if embedding_check(recipe).iter().any(|c| !c.passed) {
        return Err(Error::EmbeddingFails {
            name: recipe.name.clone(),
        });
    }
    let mut out = ClassicalR::zero(recipe.target.clone());
    for ((i, j), coefficient) in r.terms() {
        for (p, u) in recipe.images[i].iter() {
            for (q, v) in recipe.images[j].iter() {
                out.add_wedge(p, q, &(&(coefficient * u) * v));
            }
        }
    }
    Ok(out)
}

/// Quantum Yang–Baxter residual `R_12 R_13 R_23 - R_23 R_13 R_12` at the
/// bundle's truncation order.
pub fn qybe_residual(r_matrix: &TensorElement) -> Result<TensorElement> {
    let r12 = r_matrix.leg_embed(Placement::Legs12)?;
    let r13 = r_matrix.leg_embed(Placement::Legs13)?;
    let r23 = r_matrix.leg_embed(Placement::Legs23)?;
    let lhs = r12.tmul(&r13)?.tmul(&r23)?;
    let rhs = r23.tmul(&r13)?.tmul(&r12)?;
    lhs.sub(&rhs)
}
