//! Builders for the carrier algebras and the inhomogeneous target algebras.

use super::{AlgebraKind, Generator, LieAlgebraDef, LinComb};
use crate::scalars::GaussianRational;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// The four abstract carrier algebras.
///
/// `Lc` and `LcPrime` are the 4-dimensional peripheric carriers; `L` and
/// `LPrime` extend them by the extra generator `J`. Generator order is
/// `(J,) H, E, A, B`, which is also the PBW normal order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AbstractFamily {
    Lc,
    LcPrime,
    L,
    LPrime,
}

impl AbstractFamily {
    pub fn has_j(self) -> bool {
        matches!(self, AbstractFamily::L | AbstractFamily::LPrime)
    }

    /// True for the `L'`-side carriers (where `A` carries the grading).
    pub fn is_primed(self) -> bool {
        matches!(self, AbstractFamily::LcPrime | AbstractFamily::LPrime)
    }
}

impl fmt::Display for AbstractFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AbstractFamily::Lc => "Lc",
            AbstractFamily::LcPrime => "Lc'",
            AbstractFamily::L => "L",
            AbstractFamily::LPrime => "L'",
        };
        write!(f, "{s}")
    }
}

impl FromStr for AbstractFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lc" => Ok(AbstractFamily::Lc),
            "lc'" | "lcprime" | "lcd" => Ok(AbstractFamily::LcPrime),
            "l" => Ok(AbstractFamily::L),
            "l'" | "lprime" => Ok(AbstractFamily::LPrime),
            _ => Err(Error::Config(format!("unknown abstract family {s:?}"))),
        }
    }
}

/// The concrete inhomogeneous Lie algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ConcreteFamily {
    Isu,
    Iso,
    Schrodinger,
    Poincare,
}

impl fmt::Display for ConcreteFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConcreteFamily::Isu => "isu",
            ConcreteFamily::Iso => "iso",
            ConcreteFamily::Schrodinger => "schrodinger",
            ConcreteFamily::Poincare => "poincare",
        };
        write!(f, "{s}")
    }
}

impl FromStr for ConcreteFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "isu" => Ok(ConcreteFamily::Isu),
            "iso" => Ok(ConcreteFamily::Iso),
            "schrodinger" | "schroedinger" => Ok(ConcreteFamily::Schrodinger),
            "poincare" => Ok(ConcreteFamily::Poincare),
            _ => Err(Error::Config(format!("unknown concrete family {s:?}"))),
        }
    }
}

fn require_nonzero(value: &GaussianRational, name: &'static str) -> Result<()> {
    if value.is_zero() {
        Err(Error::ZeroParameter { name })
    } else {
        Ok(())
    }
}

/// Builds one of the abstract carriers with parameters `γ, δ` (and `μ` when
/// the family contains `J`).
///
/// Gradings realize the deformation-parameter substitution: `E, B` carry
/// degree 1 on the `L` side, `E, A` on the `L'` side; everything else is
/// degree 0.
pub fn build_abstract(
    family: AbstractFamily,
    gamma: &GaussianRational,
    delta: &GaussianRational,
    mu: Option<&GaussianRational>,
) -> Result<Arc<LieAlgebraDef>> {
    require_nonzero(gamma, "γ")?;
    require_nonzero(delta, "δ")?;
    let mu = if family.has_j() {
        let mu = mu.ok_or(Error::ZeroParameter { name: "μ" })?;
        require_nonzero(mu, "μ")?;
        Some(mu)
    } else {
        None
    };

    let primed = family.is_primed();
    let degree = |symbol: &str| -> u32 {
        match (symbol, primed) {
            ("E", _) => 1,
            ("B", false) | ("A", true) => 1,
            _ => 0,
        }
    };
    let mut symbols: Vec<&str> = Vec::new();
    if family.has_j() {
        symbols.push("J");
    }
    symbols.extend(["H", "E", "A", "B"]);
    let generators: Vec<Generator> = symbols
        .iter()
        .map(|s| Generator {
            symbol: s.to_string(),
            zdegree: degree(s),
        })
        .collect();

    let index = |symbol: &str| symbols.iter().position(|s| *s == symbol).unwrap();
    let mut brackets: BTreeMap<(usize, usize), LinComb> = BTreeMap::new();
    let mut set = |a: &str, b: &str, rhs: LinComb| {
        let (i, j) = (index(a), index(b));
        // All builder relations are listed with i < j in declaration order.
        assert!(i < j);
        if !rhs.is_zero() {
            brackets.insert((i, j), rhs);
        }
    };

    set("H", "E", LinComb::term(delta.clone(), index("E")));
    set("A", "B", LinComb::term(gamma.clone(), index("E")));
    if primed {
        set("H", "A", LinComb::term(delta.clone(), index("A")));
    } else {
        set("H", "B", LinComb::term(delta.clone(), index("B")));
    }
    if let Some(mu) = mu {
        if primed {
            set("J", "A", LinComb::term(mu.clone(), index("A")));
            set("J", "B", LinComb::term(-mu, index("B")));
        } else {
            set("J", "A", LinComb::term(-mu, index("A")));
            set("J", "B", LinComb::term(mu.clone(), index("B")));
        }
    }

    let mut name = format!("{family}(γ={gamma},δ={delta}");
    if let Some(mu) = mu {
        name.push_str(&format!(",μ={mu}"));
    }
    name.push(')');
    LieAlgebraDef::new(name, generators, brackets, AlgebraKind::Abstract(family))
}

/// Builds one of the concrete inhomogeneous algebras.
///
/// Dimensions: `isu(n)` keeps all `n²` generators `U^a_b` plus the `2n`
/// translations `P^a`, `P_a` (no tracelessness is imposed; only the bracket
/// relations matter here), `iso(n)` has `n(n-1)/2 + n` generators,
/// the centrally extended Schrödinger algebra `n(n+3)/2 + 4`, and the
/// (1+3) Poincaré algebra 10. Concrete algebras carry zdegree 0 throughout:
/// they are used only at the Lie level, never for truncated series.
pub fn build_concrete(family: ConcreteFamily, n: usize) -> Result<Arc<LieAlgebraDef>> {
    match family {
        ConcreteFamily::Isu => build_isu(n),
        ConcreteFamily::Iso => build_iso(n),
        ConcreteFamily::Schrodinger => build_schrodinger(n),
        ConcreteFamily::Poincare => build_poincare(),
    }
}

struct Table {
    generators: Vec<Generator>,
    brackets: BTreeMap<(usize, usize), LinComb>,
}

impl Table {
    fn new() -> Self {
        Self {
            generators: Vec::new(),
            brackets: BTreeMap::new(),
        }
    }

    fn generator(&mut self, symbol: String) -> usize {
        self.generators.push(Generator { symbol, zdegree: 0 });
        self.generators.len() - 1
    }

    /// Records `[x_i, x_j] += c·x_k`, flipping the sign as needed so only
    /// `i < j` is stored.
    fn add(&mut self, i: usize, j: usize, c: GaussianRational, k: usize) {
        if c.is_zero() || i == j {
            return;
        }
        let (key, coefficient) = if i < j { ((i, j), c) } else { ((j, i), -c) };
        let entry = self.brackets.entry(key).or_insert_with(LinComb::zero);
        entry.add_term(&coefficient, k);
        if entry.is_zero() {
            self.brackets.remove(&key);
        }
    }

    fn finish(self, name: String, kind: AlgebraKind) -> Result<Arc<LieAlgebraDef>> {
        LieAlgebraDef::new(name, self.generators, self.brackets, kind)
    }
}

fn one() -> GaussianRational {
    GaussianRational::one()
}

/// `isu(n)`: generators `U^a_b` with gl-style relations, plus commuting
/// translations `P^a` (upper) and `P_a` (lower).
#[allow(clippy::needless_range_loop)]
fn build_isu(n: usize) -> Result<Arc<LieAlgebraDef>> {
    if n < 2 {
        return Err(Error::DimensionTooSmall {
            family: "isu",
            n,
            min: 2,
        });
    }
    let mut t = Table::new();
    let mut u = vec![vec![0usize; n]; n];
    for a in 0..n {
        for b in 0..n {
            u[a][b] = t.generator(format!("U^{}_{}", a + 1, b + 1));
        }
    }
    let p_up: Vec<usize> = (0..n).map(|a| t.generator(format!("P^{}", a + 1))).collect();
    let p_dn: Vec<usize> = (0..n).map(|a| t.generator(format!("P_{}", a + 1))).collect();

    // [U^a_b, U^c_d] = U^a_d δ_b^c - U^c_b δ_d^a
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if (a, b) >= (c, d) {
                        continue;
                    }
                    if b == c {
                        t.add(u[a][b], u[c][d], one(), u[a][d]);
                    }
                    if d == a {
                        t.add(u[a][b], u[c][d], -one(), u[c][b]);
                    }
                }
            }
        }
    }
    // [U^a_b, P^c] = P^a δ_b^c ; [U^a_b, P_c] = -P_b δ^a_c
    for a in 0..n {
        for b in 0..n {
            t.add(u[a][b], p_up[b], one(), p_up[a]);
            t.add(u[a][b], p_dn[a], -one(), p_dn[b]);
        }
    }
    t.finish(format!("isu({n})"), AlgebraKind::Concrete(ConcreteFamily::Isu))
}

/// `iso(n)`: rotations `Y_ab = -Y_ba` (stored for `a < b`) and translations.
fn build_iso(n: usize) -> Result<Arc<LieAlgebraDef>> {
    if n < 2 {
        return Err(Error::DimensionTooSmall {
            family: "iso",
            n,
            min: 2,
        });
    }
    let mut t = Table::new();
    // y(a, b) with sign: Y_ab for a < b, -Y_ba for a > b.
    let mut y_index = BTreeMap::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let idx = t.generator(format!("Y_{}{}", a + 1, b + 1));
            y_index.insert((a, b), idx);
        }
    }
    let p: Vec<usize> = (0..n).map(|a| t.generator(format!("P_{}", a + 1))).collect();
    let y = |a: usize, b: usize| -> Option<(GaussianRational, usize)> {
        use std::cmp::Ordering::*;
        match a.cmp(&b) {
            Less => Some((one(), y_index[&(a, b)])),
            Equal => None,
            Greater => Some((-one(), y_index[&(b, a)])),
        }
    };

    // [Y_ab, Y_cd] = Y_ad δ_bc + Y_bc δ_ad - Y_ac δ_bd - Y_bd δ_ac
    let pairs: Vec<(usize, usize)> = y_index.keys().copied().collect();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for &(c, d) in &pairs[i + 1..] {
            let lhs = y_index[&(a, b)];
            let rhs = y_index[&(c, d)];
            let mut push = |delta: bool, term: Option<(GaussianRational, usize)>, sign: i64| {
                if delta {
                    if let Some((coefficient, index)) = term {
                        t.add(lhs, rhs, coefficient * GaussianRational::from_int(sign), index);
                    }
                }
            };
            push(b == c, y(a, d), 1);
            push(a == d, y(b, c), 1);
            push(b == d, y(a, c), -1);
            push(a == c, y(b, d), -1);
        }
    }
    // [Y_ab, P_c] = P_a δ_bc - P_b δ_ac
    for &(a, b) in &pairs {
        t.add(y_index[&(a, b)], p[b], one(), p[a]);
        t.add(y_index[&(a, b)], p[a], -one(), p[b]);
    }
    t.finish(format!("iso({n})"), AlgebraKind::Concrete(ConcreteFamily::Iso))
}

/// The centrally extended Schrödinger algebra in (1+n) spacetime.
fn build_schrodinger(n: usize) -> Result<Arc<LieAlgebraDef>> {
    if n < 1 {
        return Err(Error::DimensionTooSmall {
            family: "schrodinger",
            n,
            min: 1,
        });
    }
    let mut t = Table::new();
    let pt = t.generator("P_t".into());
    let p: Vec<usize> = (0..n).map(|a| t.generator(format!("P_{}", a + 1))).collect();
    let g: Vec<usize> = (0..n).map(|a| t.generator(format!("G_{}", a + 1))).collect();
    let mut j_index = BTreeMap::new();
    for a in 0..n {
        for b in (a + 1)..n {
            j_index.insert((a, b), t.generator(format!("J_{}{}", a + 1, b + 1)));
        }
    }
    let k = t.generator("K".into());
    let d = t.generator("D".into());
    let m = t.generator("M".into());
    let j = |a: usize, b: usize| -> Option<(GaussianRational, usize)> {
        use std::cmp::Ordering::*;
        match a.cmp(&b) {
            Less => Some((one(), j_index[&(a, b)])),
            Equal => None,
            Greater => Some((-one(), j_index[&(b, a)])),
        }
    };

    t.add(pt, d, GaussianRational::from_int(2), pt); // [P_t, D] = 2P_t
    t.add(pt, k, one(), d); // [P_t, K] = D
    t.add(d, k, GaussianRational::from_int(2), k); // [D, K] = 2K
    for a in 0..n {
        t.add(pt, g[a], one(), p[a]); // [P_t, G_a] = P_a
        t.add(p[a], d, one(), p[a]); // [P_a, D] = P_a
        t.add(p[a], k, one(), g[a]); // [P_a, K] = G_a
        t.add(d, g[a], one(), g[a]); // [D, G_a] = G_a
        t.add(p[a], g[a], one(), m); // [P_a, G_b] = δ_ab M
    }
    // [P_a, J_bc] = δ_ac P_b - δ_ab P_c, same pattern for G.
    for a in 0..n {
        for (&(b, c), &jbc) in &j_index {
            if a == c {
                t.add(p[a], jbc, one(), p[b]);
                t.add(g[a], jbc, one(), g[b]);
            }
            if a == b {
                t.add(p[a], jbc, -one(), p[c]);
                t.add(g[a], jbc, -one(), g[c]);
            }
        }
    }
    // [J_ab, J_cd] = δ_ac J_bd + δ_bd J_ac - δ_ad J_bc - δ_bc J_ad
    let pairs: Vec<(usize, usize)> = j_index.keys().copied().collect();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for &(c, d) in &pairs[i + 1..] {
            let lhs = j_index[&(a, b)];
            let rhs = j_index[&(c, d)];
            let mut push = |delta: bool, term: Option<(GaussianRational, usize)>, sign: i64| {
                if delta {
                    if let Some((coefficient, index)) = term {
                        t.add(lhs, rhs, coefficient * GaussianRational::from_int(sign), index);
                    }
                }
            };
            push(a == c, j(b, d), 1);
            push(b == d, j(a, c), 1);
            push(a == d, j(b, c), -1);
            push(b == c, j(a, d), -1);
        }
    }
    t.finish(
        format!("schrodinger({n})"),
        AlgebraKind::Concrete(ConcreteFamily::Schrodinger),
    )
}

/// The (1+3) Poincaré algebra: `P_t`, space translations, rotations, boosts.
fn build_poincare() -> Result<Arc<LieAlgebraDef>> {
    let mut t = Table::new();
    let pt = t.generator("P_t".into());
    let p: Vec<usize> = (0..3).map(|a| t.generator(format!("P_{}", a + 1))).collect();
    let j: Vec<usize> = (0..3).map(|a| t.generator(format!("J_{}", a + 1))).collect();
    let k: Vec<usize> = (0..3).map(|a| t.generator(format!("K_{}", a + 1))).collect();

    let epsilon = |a: usize, b: usize, c: usize| -> i64 {
        match (a, b, c) {
            (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
            (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
            _ => 0,
        }
    };
    for a in 0..3 {
        t.add(pt, k[a], one(), p[a]); // [P_t, K_a] = P_a
        t.add(p[a], k[a], one(), pt); // [P_a, K_b] = δ_ab P_t
        for b in 0..3 {
            for c in 0..3 {
                let e = epsilon(a, b, c);
                if e != 0 {
                    let coefficient = GaussianRational::from_int(e);
                    // mixed-family pairs are keyed uniquely, so the full
                    // (a, b) range is correct for them
                    t.add(j[a], p[b], coefficient.clone(), p[c]);
                    t.add(j[a], k[b], coefficient.clone(), k[c]);
                    // same-family pairs would be visited twice
                    if a < b {
                        t.add(j[a], j[b], coefficient.clone(), j[c]);
                        t.add(k[a], k[b], -coefficient, j[c]);
                    }
                }
            }
        }
    }
    t.finish("poincare".into(), AlgebraKind::Concrete(ConcreteFamily::Poincare))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::GaussianRational as G;

    #[test]
    fn l_bracket_table() {
        let alg = build_abstract(AbstractFamily::L, &G::one(), &G::one(), Some(&G::i())).unwrap();
        let (j, h, e, a, b) = (0, 1, 2, 3, 4);
        assert_eq!(alg.symbol(j), "J");
        // [A, B] = γE with γ = 1
        assert_eq!(alg.bracket_generators(a, b), LinComb::generator(e));
        // [J, B] = μB with μ = i
        assert_eq!(alg.bracket_generators(j, b), LinComb::term(G::i(), b));
        // [J, A] = -μA
        assert_eq!(alg.bracket_generators(j, a), LinComb::term(-G::i(), a));
        // [H, E] = δE
        assert_eq!(alg.bracket_generators(h, e), LinComb::generator(e));
        assert_eq!(alg.zdegree(e), 1);
        assert_eq!(alg.zdegree(b), 1);
        assert_eq!(alg.zdegree(a), 0);
    }

    #[test]
    fn lc_has_no_j_and_h_a_commute() {
        let alg =
            build_abstract(AbstractFamily::Lc, &G::ratio_i(2, 1), &G::one(), None).unwrap();
        assert_eq!(alg.dim(), 4);
        let h = alg.index_of("H").unwrap();
        let a = alg.index_of("A").unwrap();
        assert!(alg.bracket_generators(h, a).is_zero());
    }

    #[test]
    fn lprime_grading_swaps_a_and_b() {
        let alg =
            build_abstract(AbstractFamily::LPrime, &G::one(), &G::one(), Some(&G::i())).unwrap();
        assert_eq!(alg.zdegree(alg.index_of("A").unwrap()), 1);
        assert_eq!(alg.zdegree(alg.index_of("B").unwrap()), 0);
        let h = alg.index_of("H").unwrap();
        let a = alg.index_of("A").unwrap();
        assert_eq!(alg.bracket_generators(h, a), LinComb::generator(a));
    }

    #[test]
    fn zero_parameters_rejected() {
        assert!(build_abstract(AbstractFamily::Lc, &G::zero(), &G::one(), None).is_err());
        assert!(build_abstract(AbstractFamily::L, &G::one(), &G::one(), Some(&G::zero())).is_err());
        assert!(build_abstract(AbstractFamily::L, &G::one(), &G::one(), None).is_err());
    }

    #[test]
    fn poincare_table_spot_checks() {
        let alg = build_poincare().unwrap();
        assert_eq!(alg.dim(), 10);
        let p1 = alg.index_of("P_1").unwrap();
        let k1 = alg.index_of("K_1").unwrap();
        let pt = alg.index_of("P_t").unwrap();
        // [P_1, K_1] = P_t
        assert_eq!(alg.bracket_generators(p1, k1), LinComb::generator(pt));
        let j1 = alg.index_of("J_1").unwrap();
        let j2 = alg.index_of("J_2").unwrap();
        let j3 = alg.index_of("J_3").unwrap();
        assert_eq!(alg.bracket_generators(j1, j2), LinComb::generator(j3));
        let k2 = alg.index_of("K_2").unwrap();
        // [K_1, K_2] = -J_3
        assert_eq!(
            alg.bracket_generators(k1, k2),
            LinComb::term(-G::one(), j3)
        );
        assert!(alg.jacobi_check().passed());
    }

    #[test]
    fn schrodinger_table_spot_checks() {
        let alg = build_schrodinger(2).unwrap();
        assert_eq!(alg.dim(), 2 * (2 + 3) / 2 + 4); // n(n+3)/2 + 4 = 9
        let p1 = alg.index_of("P_1").unwrap();
        let g1 = alg.index_of("G_1").unwrap();
        let m = alg.index_of("M").unwrap();
        assert_eq!(alg.bracket_generators(p1, g1), LinComb::generator(m));
        let g2 = alg.index_of("G_2").unwrap();
        assert!(alg.bracket_generators(p1, g2).is_zero());
        assert!(alg.jacobi_check().passed());
    }

    #[test]
    fn iso_table_spot_checks() {
        let alg = build_iso(4).unwrap();
        assert_eq!(alg.dim(), 4 * 3 / 2 + 4);
        let y12 = alg.index_of("Y_12").unwrap();
        let p2 = alg.index_of("P_2").unwrap();
        let p1 = alg.index_of("P_1").unwrap();
        // [Y_12, P_2] = P_1
        assert_eq!(alg.bracket_generators(y12, p2), LinComb::generator(p1));
        assert!(alg.jacobi_check().passed());
    }

    #[test]
    fn isu_table_spot_checks() {
        let alg = build_isu(4).unwrap();
        // all U^a_b plus 2n translations
        assert_eq!(alg.dim(), 16 + 8);
        let u12 = alg.index_of("U^1_2").unwrap();
        let pu2 = alg.index_of("P^2").unwrap();
        let pu1 = alg.index_of("P^1").unwrap();
        // [U^1_2, P^2] = P^1
        assert_eq!(alg.bracket_generators(u12, pu2), LinComb::generator(pu1));
        let pd1 = alg.index_of("P_1").unwrap();
        let pd2 = alg.index_of("P_2").unwrap();
        // [U^1_2, P_1] = -P_2
        assert_eq!(
            alg.bracket_generators(u12, pd1),
            LinComb::term(-G::one(), pd2)
        );
        assert!(alg.jacobi_check().passed());
    }

    #[test]
    fn jacobi_passes_for_all_builders_small_n() {
        for n in 2..=5 {
            assert!(build_isu(n).unwrap().jacobi_check().passed(), "isu({n})");
            assert!(build_iso(n).unwrap().jacobi_check().passed(), "iso({n})");
            assert!(
                build_schrodinger(n).unwrap().jacobi_check().passed(),
                "schrodinger({n})"
            );
        }
    }

    #[test]
    fn n_below_minimum_rejected() {
        assert!(build_isu(1).is_err());
        assert!(build_iso(1).is_err());
        assert!(build_schrodinger(0).is_err());
    }
}
