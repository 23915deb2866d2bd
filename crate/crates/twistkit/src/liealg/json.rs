//! JSON interchange documents for algebra definitions and embedding recipes.
//!
//! Coefficients travel as canonical Gaussian-rational strings (`"2i"`,
//! `"-1+3/2i"`, ...), so documents are exact and diff-friendly.

use super::{AlgebraKind, EmbeddingRecipe, Generator, LieAlgebraDef, LinComb};
use crate::scalars::GaussianRational;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub name: String,
    pub generators: Vec<GeneratorDoc>,
    pub brackets: Vec<BracketDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GeneratorDoc {
    pub symbol: String,
    pub zdegree: u32,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BracketDoc {
    pub lhs: [String; 2],
    pub rhs: Vec<TermDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TermDoc {
    pub coef: String,
    pub gen: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EmbeddingDoc {
    pub name: String,
    pub source: AlgebraDoc,
    pub target: AlgebraDoc,
    pub images: Vec<ImageDoc>,
    pub params: ParamsDoc,
    #[serde(default)]
    pub alpha: Vec<String>,
    #[serde(default)]
    pub beta: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ImageDoc {
    pub gen: String,
    pub value: Vec<TermDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ParamsDoc {
    pub gamma: String,
    pub delta: String,
    pub mu: String,
}

fn lincomb_to_terms(algebra: &LieAlgebraDef, combination: &LinComb) -> Vec<TermDoc> {
    combination
        .iter()
        .map(|(index, coefficient)| TermDoc {
            coef: coefficient.to_string(),
            gen: algebra.symbol(index).to_string(),
        })
        .collect()
}

fn terms_to_lincomb(algebra: &LieAlgebraDef, terms: &[TermDoc]) -> Result<LinComb> {
    let mut out = LinComb::zero();
    for term in terms {
        let coefficient = GaussianRational::parse(&term.coef)?;
        out.add_term(&coefficient, algebra.index_of(&term.gen)?);
    }
    Ok(out)
}

pub fn algebra_to_json(algebra: &LieAlgebraDef) -> AlgebraDoc {
    AlgebraDoc {
        name: algebra.name().to_string(),
        generators: algebra
            .generators()
            .iter()
            .map(|g| GeneratorDoc {
                symbol: g.symbol.clone(),
                zdegree: g.zdegree,
            })
            .collect(),
        brackets: algebra
            .stored_brackets()
            .map(|(&(i, j), rhs)| BracketDoc {
                lhs: [algebra.symbol(i).to_string(), algebra.symbol(j).to_string()],
                rhs: lincomb_to_terms(algebra, rhs),
            })
            .collect(),
    }
}

pub fn algebra_from_json(doc: &AlgebraDoc) -> Result<Arc<LieAlgebraDef>> {
    let generators: Vec<Generator> = doc
        .generators
        .iter()
        .map(|g| Generator {
            symbol: g.symbol.clone(),
            zdegree: g.zdegree,
        })
        .collect();
    let index_of = |symbol: &str| -> Result<usize> {
        generators
            .iter()
            .position(|g| g.symbol == symbol)
            .ok_or_else(|| Error::UnknownGenerator {
                algebra: doc.name.clone(),
                symbol: symbol.to_string(),
            })
    };
    let mut brackets = BTreeMap::new();
    for bracket in &doc.brackets {
        let i = index_of(&bracket.lhs[0])?;
        let j = index_of(&bracket.lhs[1])?;
        if i >= j {
            return Err(Error::Config(format!(
                "bracket [{}, {}] must list generators in declaration order",
                bracket.lhs[0], bracket.lhs[1]
            )));
        }
        let mut rhs = LinComb::zero();
        for term in &bracket.rhs {
            rhs.add_term(&GaussianRational::parse(&term.coef)?, index_of(&term.gen)?);
        }
        if !rhs.is_zero() {
            brackets.insert((i, j), rhs);
        }
    }
    LieAlgebraDef::new(doc.name.clone(), generators, brackets, AlgebraKind::Custom)
}

pub fn recipe_to_json(recipe: &EmbeddingRecipe) -> EmbeddingDoc {
    EmbeddingDoc {
        name: recipe.name.clone(),
        source: algebra_to_json(&recipe.source),
        target: algebra_to_json(&recipe.target),
        images: recipe
            .images
            .iter()
            .enumerate()
            .map(|(index, value)| ImageDoc {
                gen: recipe.source.symbol(index).to_string(),
                value: lincomb_to_terms(&recipe.target, value),
            })
            .collect(),
        params: ParamsDoc {
            gamma: recipe.gamma.to_string(),
            delta: recipe.delta.to_string(),
            mu: recipe.mu.to_string(),
        },
        alpha: recipe.alpha.iter().map(|a| a.to_string()).collect(),
        beta: recipe.beta.iter().map(|b| b.to_string()).collect(),
    }
}

pub fn recipe_from_json(doc: &EmbeddingDoc) -> Result<EmbeddingRecipe> {
    let source = algebra_from_json(&doc.source)?;
    let target = algebra_from_json(&doc.target)?;
    let mut images = vec![LinComb::zero(); source.dim()];
    for image in &doc.images {
        images[source.index_of(&image.gen)?] = terms_to_lincomb(&target, &image.value)?;
    }
    let parse_list = |items: &[String]| -> Result<Vec<GaussianRational>> {
        items.iter().map(|s| GaussianRational::parse(s)).collect()
    };
    Ok(EmbeddingRecipe {
        name: doc.name.clone(),
        source,
        target,
        images,
        gamma: GaussianRational::parse(&doc.params.gamma)?,
        delta: GaussianRational::parse(&doc.params.delta)?,
        mu: GaussianRational::parse(&doc.params.mu)?,
        alpha: parse_list(&doc.alpha)?,
        beta: parse_list(&doc.beta)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{build_concrete, build_embedding, embedding_check, ConcreteFamily, EmbeddingFamily};

    #[test]
    fn algebra_document_round_trips() {
        let algebra = build_concrete(ConcreteFamily::Poincare, 3).unwrap();
        let doc = algebra_to_json(&algebra);
        let text = serde_json::to_string_pretty(&doc).unwrap();
        let parsed: AlgebraDoc = serde_json::from_str(&text).unwrap();
        let rebuilt = algebra_from_json(&parsed).unwrap();
        assert_eq!(rebuilt.dim(), algebra.dim());
        for (key, rhs) in algebra.stored_brackets() {
            assert_eq!(rebuilt.bracket_generators(key.0, key.1), *rhs);
        }
        assert!(rebuilt.jacobi_check().passed());
    }

    #[test]
    fn embedding_document_round_trips_and_still_passes() {
        let recipe = build_embedding(EmbeddingFamily::Schrodinger, 2, &[], &[], false).unwrap();
        let doc = recipe_to_json(&recipe);
        let text = serde_json::to_string(&doc).unwrap();
        let parsed: EmbeddingDoc = serde_json::from_str(&text).unwrap();
        let rebuilt = recipe_from_json(&parsed).unwrap();
        assert!(embedding_check(&rebuilt).iter().all(|c| c.passed));
        assert_eq!(rebuilt.gamma, recipe.gamma);
    }

    #[test]
    fn unknown_generator_rejected() {
        let algebra = build_concrete(ConcreteFamily::Poincare, 3).unwrap();
        let mut doc = algebra_to_json(&algebra);
        doc.brackets[0].rhs[0].gen = "nope".into();
        assert!(matches!(
            algebra_from_json(&doc),
            Err(Error::UnknownGenerator { .. })
        ));
    }
}
