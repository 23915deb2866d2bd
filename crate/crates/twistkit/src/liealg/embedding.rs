//! Carrier-subalgebra embeddings into the concrete algebras, and their
//! verification by direct structure-constant computation.

use super::builders::{build_abstract, build_concrete, AbstractFamily, ConcreteFamily};
use super::{AlgebraKind, LieAlgebraDef, LinComb};
use crate::scalars::GaussianRational;
use crate::{Error, Result};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// Which concrete algebra an embedding targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbeddingFamily {
    Isu,
    Iso,
    Schrodinger,
    Poincare,
}

impl EmbeddingFamily {
    pub fn concrete(self) -> ConcreteFamily {
        match self {
            EmbeddingFamily::Isu => ConcreteFamily::Isu,
            EmbeddingFamily::Iso => ConcreteFamily::Iso,
            EmbeddingFamily::Schrodinger => ConcreteFamily::Schrodinger,
            EmbeddingFamily::Poincare => ConcreteFamily::Poincare,
        }
    }
}

impl fmt::Display for EmbeddingFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.concrete())
    }
}

impl FromStr for EmbeddingFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match ConcreteFamily::from_str(s)? {
            ConcreteFamily::Isu => EmbeddingFamily::Isu,
            ConcreteFamily::Iso => EmbeddingFamily::Iso,
            ConcreteFamily::Schrodinger => EmbeddingFamily::Schrodinger,
            ConcreteFamily::Poincare => EmbeddingFamily::Poincare,
        })
    }
}

/// An embedding of an abstract carrier into a target algebra: every carrier
/// generator is sent to a linear combination of target generators.
#[derive(Debug, Clone)]
pub struct EmbeddingRecipe {
    pub name: String,
    pub source: Arc<LieAlgebraDef>,
    pub target: Arc<LieAlgebraDef>,
    /// Indexed by source generator index.
    pub images: Vec<LinComb>,
    pub gamma: GaussianRational,
    pub delta: GaussianRational,
    pub mu: GaussianRational,
    pub alpha: Vec<GaussianRational>,
    pub beta: Vec<GaussianRational>,
}

impl EmbeddingRecipe {
    /// The identity recipe of an algebra onto itself (useful as a sanity
    /// anchor: it trivially preserves every bracket).
    pub fn identity(
        algebra: Arc<LieAlgebraDef>,
        gamma: GaussianRational,
        delta: GaussianRational,
        mu: GaussianRational,
    ) -> Self {
        let images = (0..algebra.dim()).map(LinComb::generator).collect();
        Self {
            name: format!("identity[{}]", algebra.name()),
            source: algebra.clone(),
            target: algebra,
            images,
            gamma,
            delta,
            mu,
            alpha: Vec::new(),
            beta: Vec::new(),
        }
    }

    pub fn image_of(&self, combination: &LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (index, coefficient) in combination.iter() {
            out.add_scaled(coefficient, &self.images[index]);
        }
        out
    }
}

/// One source bracket relation checked in the target.
#[derive(Debug, Clone)]
pub struct RelationCheck {
    /// e.g. `[H, E]`.
    pub relation: String,
    pub passed: bool,
    /// `[images(x), images(y)] - images([x, y])` rendered in the target.
    pub residual: String,
}

/// Verifies bracket preservation for every source generator pair.
pub fn embedding_check(recipe: &EmbeddingRecipe) -> Vec<RelationCheck> {
    let mut out = Vec::new();
    let n = recipe.source.dim();
    for i in 0..n {
        for j in (i + 1)..n {
            let lhs = recipe
                .target
                .bracket(&recipe.images[i], &recipe.images[j]);
            let rhs = recipe.image_of(&recipe.source.bracket_generators(i, j));
            let residual = lhs.sub(&rhs);
            out.push(RelationCheck {
                relation: format!(
                    "[{}, {}]",
                    recipe.source.symbol(i),
                    recipe.source.symbol(j)
                ),
                passed: residual.is_zero(),
                residual: residual.render(&recipe.target),
            });
        }
    }
    out
}

/// The `L ↔ L'` dualization applied to a recipe: the dual carrier's `A` maps
/// to the old `B`-image and its `B` to the negated old `A`-image; `J, H, E`
/// are untouched. Applying it twice negates the images of `A` and `B`.
pub fn dualize_recipe(recipe: &EmbeddingRecipe) -> Result<EmbeddingRecipe> {
    let source_family = match recipe.source.kind() {
        AlgebraKind::Abstract(family) => *family,
        _ => {
            return Err(Error::Config(
                "dualize expects a recipe sourced from an abstract carrier".into(),
            ))
        }
    };
    let dual_family = match source_family {
        AbstractFamily::Lc => AbstractFamily::LcPrime,
        AbstractFamily::LcPrime => AbstractFamily::Lc,
        AbstractFamily::L => AbstractFamily::LPrime,
        AbstractFamily::LPrime => AbstractFamily::L,
    };
    let mu = if dual_family.has_j() {
        Some(&recipe.mu)
    } else {
        None
    };
    let dual_source = build_abstract(dual_family, &recipe.gamma, &recipe.delta, mu)?;
    let mut images = Vec::with_capacity(dual_source.dim());
    for index in 0..dual_source.dim() {
        let symbol = dual_source.symbol(index);
        let image = match symbol {
            "A" => recipe.images[recipe.source.index_of("B")?].clone(),
            "B" => recipe.images[recipe.source.index_of("A")?]
                .scaled(&-GaussianRational::one()),
            _ => recipe.images[recipe.source.index_of(symbol)?].clone(),
        };
        images.push(image);
    }
    Ok(EmbeddingRecipe {
        name: format!("dual[{}]", recipe.name),
        source: dual_source,
        target: recipe.target.clone(),
        images,
        gamma: recipe.gamma.clone(),
        delta: recipe.delta.clone(),
        mu: recipe.mu.clone(),
        alpha: recipe.alpha.clone(),
        beta: recipe.beta.clone(),
    })
}

/// Builds the `L`-carrier embedding into one of the concrete algebras.
///
/// `alpha`/`beta` are the free coefficient lists where the family has them
/// (one entry per index pair for `isu`/`iso`, one per odd block for the
/// Schrödinger algebra); pass empty lists to get all-ones defaults. With
/// `verbatim` set, two known misprints are reproduced instead of the
/// corrected forms: the Schrödinger `H` (which the published closed form
/// lists as identical to `J`) and the `isu` index pairing `(k, n-k)` (which
/// degenerates at `k = n/2` for even `n`; the corrected pairing is
/// `(k, n+1-k)`, mirroring the `iso` recipe).
pub fn build_embedding(
    family: EmbeddingFamily,
    n: usize,
    alpha: &[GaussianRational],
    beta: &[GaussianRational],
    verbatim: bool,
) -> Result<EmbeddingRecipe> {
    match family {
        EmbeddingFamily::Poincare => build_poincare_embedding(),
        EmbeddingFamily::Isu => build_isu_embedding(n, alpha, beta, verbatim),
        EmbeddingFamily::Iso => build_iso_embedding(n, alpha, beta),
        EmbeddingFamily::Schrodinger => build_schrodinger_embedding(n, alpha, verbatim),
    }
}

fn default_coefficients(count: usize, given: &[GaussianRational]) -> Result<Vec<GaussianRational>> {
    if given.is_empty() {
        return Ok(vec![GaussianRational::one(); count]);
    }
    if given.len() != count {
        return Err(Error::Config(format!(
            "expected {count} coefficients, got {}",
            given.len()
        )));
    }
    Ok(given.to_vec())
}

fn carrier_l(
    gamma: &GaussianRational,
    delta: &GaussianRational,
    mu: &GaussianRational,
) -> Result<Arc<LieAlgebraDef>> {
    build_abstract(AbstractFamily::L, gamma, delta, Some(mu))
}

struct ImageSet {
    images: Vec<LinComb>,
}

impl ImageSet {
    fn new(source: &LieAlgebraDef) -> Self {
        Self {
            images: vec![LinComb::zero(); source.dim()],
        }
    }

    fn set(&mut self, source: &LieAlgebraDef, symbol: &str, value: LinComb) {
        let index = source.index_of(symbol).expect("carrier symbol");
        self.images[index] = value;
    }
}

fn gen(target: &LieAlgebraDef, symbol: &str) -> LinComb {
    LinComb::generator(target.index_of(symbol).expect("target symbol"))
}

fn build_poincare_embedding() -> Result<EmbeddingRecipe> {
    let target = build_concrete(ConcreteFamily::Poincare, 3)?;
    let gamma = GaussianRational::ratio_i(2, 1);
    let delta = GaussianRational::one();
    let mu = GaussianRational::i();
    let source = carrier_l(&gamma, &delta, &mu)?;
    let i = GaussianRational::i();
    let mut set = ImageSet::new(&source);
    set.set(&source, "J", gen(&target, "J_3"));
    set.set(&source, "H", gen(&target, "K_3"));
    // E = P_t - P_3
    let mut e = gen(&target, "P_t");
    e.add_scaled(&-GaussianRational::one(), &gen(&target, "P_3"));
    set.set(&source, "E", e);
    // A = P_1 + iP_2
    let mut a = gen(&target, "P_1");
    a.add_scaled(&i, &gen(&target, "P_2"));
    set.set(&source, "A", a);
    // B = J_1 - iJ_2 + iK_1 + K_2
    let mut b = gen(&target, "J_1");
    b.add_scaled(&-i.clone(), &gen(&target, "J_2"));
    b.add_scaled(&i, &gen(&target, "K_1"));
    b.add_scaled(&GaussianRational::one(), &gen(&target, "K_2"));
    set.set(&source, "B", b);
    Ok(EmbeddingRecipe {
        name: "L -> poincare".into(),
        source,
        target,
        images: set.images,
        gamma,
        delta,
        mu,
        alpha: Vec::new(),
        beta: Vec::new(),
    })
}

/// Index pairs `(k, partner)` for the isu/iso sums: `k = 2 .. ⌊n/2⌋`.
fn sum_pairs(n: usize, verbatim_isu: bool) -> Vec<(usize, usize)> {
    (2..=n / 2)
        .map(|k| (k, if verbatim_isu { n - k } else { n + 1 - k }))
        .collect()
}

fn build_isu_embedding(
    n: usize,
    alpha: &[GaussianRational],
    beta: &[GaussianRational],
    verbatim: bool,
) -> Result<EmbeddingRecipe> {
    if n < 4 {
        return Err(Error::DimensionTooSmall {
            family: "isu embedding",
            n,
            min: 4,
        });
    }
    let pairs = sum_pairs(n, verbatim);
    let alpha = default_coefficients(pairs.len(), alpha)?;
    let beta = default_coefficients(pairs.len(), beta)?;
    // γ = -2 Σ α_k β_k
    let mut gamma = GaussianRational::zero();
    for (a, b) in alpha.iter().zip(&beta) {
        gamma += &(a * b);
    }
    gamma = gamma * GaussianRational::from_int(-2);
    if gamma.is_zero() {
        return Err(Error::ZeroParameter { name: "γ" });
    }
    let delta = GaussianRational::one();
    let mu = GaussianRational::i();
    let source = carrier_l(&gamma, &delta, &mu)?;
    let target = build_concrete(ConcreteFamily::Isu, n)?;
    let i = GaussianRational::i();
    let one = GaussianRational::one();

    let u = |a: usize, b: usize| gen(&target, &format!("U^{a}_{b}"));
    let p_up = |a: usize| gen(&target, &format!("P^{a}"));
    let p_dn = |a: usize| gen(&target, &format!("P_{a}"));

    let mut set = ImageSet::new(&source);
    let mut jv = LinComb::zero();
    let mut av = LinComb::zero();
    let mut bv = LinComb::zero();
    for (index, &(k, l)) in pairs.iter().enumerate() {
        // J = Σ (U^k_l - U^l_k)
        jv.add_scaled(&one, &u(k, l));
        jv.add_scaled(&-one.clone(), &u(l, k));
        // A = Σ α_k {P^k - P_k - i(P^l - P_l)}
        let ak = &alpha[index];
        av.add_scaled(ak, &p_up(k));
        av.add_scaled(&-ak.clone(), &p_dn(k));
        av.add_scaled(&-(ak * &i), &p_up(l));
        av.add_scaled(&(ak * &i), &p_dn(l));
        // B = Σ β_k {U^1_k + U^k_n + i(U^1_l + U^l_n)}
        let bk = &beta[index];
        bv.add_scaled(bk, &u(1, k));
        bv.add_scaled(bk, &u(k, n));
        bv.add_scaled(&(bk * &i), &u(1, l));
        bv.add_scaled(&(bk * &i), &u(l, n));
    }
    set.set(&source, "J", jv);
    // H = U^1_1 - U^n_n
    let mut hv = u(1, 1);
    hv.add_scaled(&-one.clone(), &u(n, n));
    set.set(&source, "H", hv);
    // E = P^1 + P_n
    let mut ev = p_up(1);
    ev.add_scaled(&one, &p_dn(n));
    set.set(&source, "E", ev);
    set.set(&source, "A", av);
    set.set(&source, "B", bv);

    Ok(EmbeddingRecipe {
        name: format!("L -> isu({n}){}", if verbatim { " [verbatim]" } else { "" }),
        source,
        target,
        images: set.images,
        gamma,
        delta,
        mu,
        alpha,
        beta,
    })
}

fn build_iso_embedding(
    n: usize,
    alpha: &[GaussianRational],
    beta: &[GaussianRational],
) -> Result<EmbeddingRecipe> {
    if n < 4 {
        return Err(Error::DimensionTooSmall {
            family: "iso embedding",
            n,
            min: 4,
        });
    }
    let pairs = sum_pairs(n, false);
    let alpha = default_coefficients(pairs.len(), alpha)?;
    let beta = default_coefficients(pairs.len(), beta)?;
    let mut gamma = GaussianRational::zero();
    for (a, b) in alpha.iter().zip(&beta) {
        gamma += &(a * b);
    }
    gamma = gamma * GaussianRational::from_int(-2);
    if gamma.is_zero() {
        return Err(Error::ZeroParameter { name: "γ" });
    }
    let delta = GaussianRational::i();
    let mu = GaussianRational::i();
    let source = carrier_l(&gamma, &delta, &mu)?;
    let target = build_concrete(ConcreteFamily::Iso, n)?;
    let i = GaussianRational::i();
    let one = GaussianRational::one();

    // Y_ab stored for a < b only; flip the sign otherwise.
    let y = |a: usize, b: usize| -> LinComb {
        if a < b {
            gen(&target, &format!("Y_{a}{b}"))
        } else {
            gen(&target, &format!("Y_{b}{a}")).scaled(&-GaussianRational::one())
        }
    };
    let p = |a: usize| gen(&target, &format!("P_{a}"));

    let mut set = ImageSet::new(&source);
    let mut jv = LinComb::zero();
    let mut av = LinComb::zero();
    let mut bv = LinComb::zero();
    for (index, &(k, l)) in pairs.iter().enumerate() {
        jv.add_scaled(&one, &y(k, l));
        // A = Σ α_k (P_k - iP_l)
        let ak = &alpha[index];
        av.add_scaled(ak, &p(k));
        av.add_scaled(&-(ak * &i), &p(l));
        // B = Σ β_k (Y_1k - iY_kn + iY_1l + Y_ln)
        let bk = &beta[index];
        bv.add_scaled(bk, &y(1, k));
        bv.add_scaled(&-(bk * &i), &y(k, n));
        bv.add_scaled(&(bk * &i), &y(1, l));
        bv.add_scaled(bk, &y(l, n));
    }
    set.set(&source, "J", jv);
    set.set(&source, "H", y(1, n));
    // E = P_1 + iP_n
    let mut ev = p(1);
    ev.add_scaled(&i, &p(n));
    set.set(&source, "E", ev);
    set.set(&source, "A", av);
    set.set(&source, "B", bv);

    Ok(EmbeddingRecipe {
        name: format!("L -> iso({n})"),
        source,
        target,
        images: set.images,
        gamma,
        delta,
        mu,
        alpha,
        beta,
    })
}

/// Odd indices `k` with both `k` and `k+1` in range: `1, 3, ...` up to
/// `n-1` for even `n`, `n-2` for odd `n`.
fn odd_blocks(n: usize) -> Vec<usize> {
    (1..n).step_by(2).collect()
}

fn build_schrodinger_embedding(
    n: usize,
    alpha: &[GaussianRational],
    verbatim: bool,
) -> Result<EmbeddingRecipe> {
    if n < 2 {
        return Err(Error::DimensionTooSmall {
            family: "schrodinger embedding",
            n,
            min: 2,
        });
    }
    let blocks = odd_blocks(n);
    let alpha = default_coefficients(blocks.len(), alpha)?;
    if alpha.iter().any(|a| a.is_zero()) {
        return Err(Error::ZeroParameter { name: "α" });
    }
    let gamma = -GaussianRational::one();
    let delta = GaussianRational::from_int(2);
    let mu = GaussianRational::from_int(-2);
    let source = carrier_l(&gamma, &delta, &mu)?;
    let target = build_concrete(ConcreteFamily::Schrodinger, n)?;
    let i = GaussianRational::i();
    let one = GaussianRational::one();

    let p = |a: usize| gen(&target, &format!("P_{a}"));
    let g = |a: usize| gen(&target, &format!("G_{a}"));

    // J = i Σ J_{k,k+1} + D; the corrected H flips the sign of D, the
    // verbatim closed form lists H identical to J.
    let mut rotation_sum = LinComb::zero();
    for &k in &blocks {
        rotation_sum.add_scaled(&i, &gen(&target, &format!("J_{}{}", k, k + 1)));
    }
    let d = gen(&target, "D");
    let mut jv = rotation_sum.clone();
    jv.add_scaled(&one, &d);
    let d_sign = if verbatim { one.clone() } else { -one.clone() };
    let mut hv = rotation_sum;
    hv.add_scaled(&d_sign, &d);

    let mut av = LinComb::zero();
    let mut ev = LinComb::zero();
    for (index, &k) in blocks.iter().enumerate() {
        let ak = &alpha[index];
        av.add_scaled(ak, &g(k));
        av.add_scaled(&(ak * &i), &g(k + 1));
        ev.add_scaled(ak, &p(k));
        ev.add_scaled(&(ak * &i), &p(k + 1));
    }

    let mut set = ImageSet::new(&source);
    set.set(&source, "J", jv);
    set.set(&source, "H", hv);
    set.set(&source, "E", ev);
    set.set(&source, "A", av);
    set.set(&source, "B", gen(&target, "P_t"));

    Ok(EmbeddingRecipe {
        name: format!(
            "L -> schrodinger({n}){}",
            if verbatim { " [verbatim]" } else { "" }
        ),
        source,
        target,
        images: set.images,
        gamma,
        delta,
        mu,
        alpha,
        beta: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::GaussianRational as G;

    fn assert_all_pass(recipe: &EmbeddingRecipe) {
        let checks = embedding_check(recipe);
        assert_eq!(checks.len(), 10, "{}", recipe.name);
        for check in checks {
            assert!(
                check.passed,
                "{}: {} residual {}",
                recipe.name, check.relation, check.residual
            );
        }
    }

    #[test]
    fn poincare_recipe_passes_all_ten_relations() {
        let recipe = build_embedding(EmbeddingFamily::Poincare, 3, &[], &[], false).unwrap();
        assert_all_pass(&recipe);
        assert_eq!(recipe.gamma, G::ratio_i(2, 1));
        // [A-image, B-image] = 2i(P_t - P_3)
        let a = recipe.source.index_of("A").unwrap();
        let b = recipe.source.index_of("B").unwrap();
        let bracket = recipe
            .target
            .bracket(&recipe.images[a], &recipe.images[b]);
        let mut expected = LinComb::generator(recipe.target.index_of("P_t").unwrap());
        expected.add_term(&-G::one(), recipe.target.index_of("P_3").unwrap());
        assert_eq!(bracket, expected.scaled(&G::ratio_i(2, 1)));
    }

    #[test]
    fn isu_recipes_pass_for_n_4_to_6() {
        for n in 4..=6 {
            let recipe = build_embedding(EmbeddingFamily::Isu, n, &[], &[], false).unwrap();
            assert_all_pass(&recipe);
        }
    }

    #[test]
    fn isu_gamma_from_coefficient_constraint() {
        let recipe =
            build_embedding(EmbeddingFamily::Isu, 4, &[G::one()], &[G::one()], false).unwrap();
        assert_eq!(recipe.gamma, G::from_int(-2));
    }

    #[test]
    fn isu_verbatim_pairing_fails_for_even_n_passes_for_odd() {
        let even = build_embedding(EmbeddingFamily::Isu, 4, &[], &[], true).unwrap();
        assert!(embedding_check(&even).iter().any(|c| !c.passed));
        let odd = build_embedding(EmbeddingFamily::Isu, 5, &[], &[], true).unwrap();
        assert_all_pass(&odd);
    }

    #[test]
    fn iso_recipes_pass_for_n_4_and_5() {
        for n in 4..=5 {
            let recipe = build_embedding(EmbeddingFamily::Iso, n, &[], &[], false).unwrap();
            assert_all_pass(&recipe);
            assert_eq!(recipe.delta, G::i());
            assert_eq!(recipe.mu, G::i());
        }
    }

    #[test]
    fn schrodinger_recipes_pass_for_n_2_and_3() {
        for n in 2..=3 {
            let recipe =
                build_embedding(EmbeddingFamily::Schrodinger, n, &[], &[], false).unwrap();
            assert_all_pass(&recipe);
            assert_eq!(recipe.gamma, -G::one());
            assert_eq!(recipe.delta, G::from_int(2));
            assert_eq!(recipe.mu, G::from_int(-2));
        }
    }

    #[test]
    fn schrodinger_verbatim_fails_exactly_the_h_relations() {
        let recipe = build_embedding(EmbeddingFamily::Schrodinger, 2, &[], &[], true).unwrap();
        let checks = embedding_check(&recipe);
        let failing: Vec<&str> = checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.relation.as_str())
            .collect();
        assert_eq!(failing, ["[H, E]", "[H, A]", "[H, B]"]);
    }

    #[test]
    fn identity_recipe_passes() {
        let algebra = build_abstract(
            AbstractFamily::L,
            &G::from_int(3),
            &G::from_int(2),
            Some(&G::i()),
        )
        .unwrap();
        let recipe =
            EmbeddingRecipe::identity(algebra, G::from_int(3), G::from_int(2), G::i());
        assert_all_pass(&recipe);
    }

    #[test]
    fn dualized_recipes_still_pass() {
        for family in [
            EmbeddingFamily::Poincare,
            EmbeddingFamily::Isu,
            EmbeddingFamily::Iso,
            EmbeddingFamily::Schrodinger,
        ] {
            let n = match family {
                EmbeddingFamily::Schrodinger => 2,
                EmbeddingFamily::Poincare => 3,
                _ => 4,
            };
            let recipe = build_embedding(family, n, &[], &[], false).unwrap();
            let dual = dualize_recipe(&recipe).unwrap();
            assert_all_pass(&dual);
        }
    }

    #[test]
    fn dualize_is_an_involution_up_to_sign() {
        let recipe = build_embedding(EmbeddingFamily::Poincare, 3, &[], &[], false).unwrap();
        let twice = dualize_recipe(&dualize_recipe(&recipe).unwrap()).unwrap();
        for symbol in ["J", "H", "E"] {
            let i0 = recipe.source.index_of(symbol).unwrap();
            let i2 = twice.source.index_of(symbol).unwrap();
            assert_eq!(recipe.images[i0], twice.images[i2], "{symbol}");
        }
        for symbol in ["A", "B"] {
            let i0 = recipe.source.index_of(symbol).unwrap();
            let i2 = twice.source.index_of(symbol).unwrap();
            assert_eq!(
                recipe.images[i0].scaled(&-G::one()),
                twice.images[i2],
                "{symbol}"
            );
        }
    }

    #[test]
    fn zero_gamma_rejected() {
        let err = build_embedding(
            EmbeddingFamily::Isu,
            4,
            &[G::one()],
            &[G::zero()],
            false,
        );
        assert!(matches!(err, Err(Error::ZeroParameter { name: "γ" })));
    }

    #[test]
    fn n_below_family_minimum_rejected() {
        assert!(build_embedding(EmbeddingFamily::Isu, 3, &[], &[], false).is_err());
        assert!(build_embedding(EmbeddingFamily::Schrodinger, 1, &[], &[], false).is_err());
    }
}
