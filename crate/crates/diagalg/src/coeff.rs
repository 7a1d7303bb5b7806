//! Exact symbolic coefficient ring shared by all three diagram algebras.
//!
//! Coefficients are multivariate polynomials with integer coefficients over
//! the parameter indeterminates: the loop parameter `β`, the symplectic blob
//! parameter `κ`, the label-algebra families `α^a_b`, `δ^a_b`, `γ^a_b`, the
//! ghost-algebra parameters `α_1..α_3`, `δ_1..δ_3`, `γ_12`, `γ_3`, and the
//! symplectic blob parameters `α_1`, `α_2`, `δ_1`, `δ_2`. Every product of
//! basis diagrams has a monomial coefficient, so integer polynomials suffice
//! for all computations and relation checks, with no numeric tolerance.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// A boundary-endpoint label: a short token from the configured label set X.
pub type Label = String;

/// A parameter indeterminate.
///
/// The derived `Ord` gives the canonical serialization order:
/// `Beta < Kappa < AlphaUp < DeltaDown < Gamma <` ghost params `<` sb params,
/// with label pairs compared lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParamId {
    /// Loop parameter β (all three algebras).
    Beta,
    /// Symplectic blob parameter κ.
    Kappa,
    /// Label-algebra top arc parameter α^a_b.
    AlphaUp(Label, Label),
    /// Label-algebra bottom arc parameter δ^a_b.
    DeltaDown(Label, Label),
    /// Label-algebra top-to-bottom arc parameter γ^a_b.
    Gamma(Label, Label),
    /// Ghost-algebra top arc parameter α_k, k in 1..=3.
    GhostAlpha(u8),
    /// Ghost-algebra bottom arc parameter δ_k, k in 1..=3.
    GhostDelta(u8),
    /// Ghost-algebra opposite-parity top-to-bottom parameter γ_12.
    GhostGamma12,
    /// Ghost-algebra same-parity top-to-bottom parameter γ_3.
    GhostGamma3,
    /// Symplectic blob top parameter α_k, k in 1..=2.
    SbAlpha(u8),
    /// Symplectic blob bottom parameter δ_k, k in 1..=2.
    SbDelta(u8),
}

impl fmt::Display for ParamId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamId::Beta => write!(f, "b"),
            ParamId::Kappa => write!(f, "k"),
            ParamId::AlphaUp(a, b) => write!(f, "aup[{a},{b}]"),
            ParamId::DeltaDown(a, b) => write!(f, "ddo[{a},{b}]"),
            ParamId::Gamma(a, b) => write!(f, "g[{a},{b}]"),
            ParamId::GhostAlpha(k) => write!(f, "ga{k}"),
            ParamId::GhostDelta(k) => write!(f, "gd{k}"),
            ParamId::GhostGamma12 => write!(f, "gg12"),
            ParamId::GhostGamma3 => write!(f, "gg3"),
            ParamId::SbAlpha(k) => write!(f, "sa{k}"),
            ParamId::SbDelta(k) => write!(f, "sd{k}"),
        }
    }
}

/// A monomial in the parameter indeterminates: a finite map from `ParamId`
/// to a positive exponent. The empty map is the multiplicative identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exponents: BTreeMap<ParamId, u32>,
}

impl Monomial {
    /// The identity monomial (1).
    pub fn one() -> Self {
        Monomial::default()
    }

    /// The monomial consisting of a single indeterminate.
    pub fn param(p: ParamId) -> Self {
        let mut exponents = BTreeMap::new();
        exponents.insert(p, 1);
        Monomial { exponents }
    }

    /// Builds a monomial from (parameter, exponent) pairs; zero exponents
    /// are dropped and repeated parameters accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (ParamId, u32)>>(pairs: I) -> Self {
        let mut m = Monomial::one();
        for (p, e) in pairs {
            if e > 0 {
                *m.exponents.entry(p).or_insert(0) += e;
            }
        }
        m
    }

    /// True for the identity monomial.
    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Iterates over (parameter, exponent) factors in canonical order.
    pub fn factors(&self) -> impl Iterator<Item = (&ParamId, u32)> {
        self.exponents.iter().map(|(p, &e)| (p, e))
    }

    /// Multiplies in place by a single indeterminate.
    pub fn mul_param(&mut self, p: ParamId) {
        *self.exponents.entry(p).or_insert(0) += 1;
    }

    /// Exponent-wise sum; the identity monomial is neutral.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (p, e) in &other.exponents {
            *exponents.entry(p.clone()).or_insert(0) += e;
        }
        Monomial { exponents }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (p, e) in &self.exponents {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Error raised by [`Polynomial::specialize`] when a parameter appearing in
/// the polynomial has no image under the substitution map.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("no image provided for parameter {0}")]
pub struct UnmappedParameter(pub ParamId);

/// An exact multivariate polynomial: a finite map from monomials to nonzero
/// integer coefficients. The empty map is the additive zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, i64>,
}

impl Polynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Polynomial::from_monomial(Monomial::one())
    }

    /// The polynomial consisting of a single monomial with coefficient 1.
    pub fn from_monomial(m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, 1);
        Polynomial { terms }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms }
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates over (monomial, coefficient) terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    /// Exact sum; zero-coefficient terms are pruned.
    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert(0);
            *entry += c;
            if *entry == 0 {
                terms.remove(m);
            }
        }
        Polynomial { terms }
    }

    /// Exact product; zero-coefficient terms are pruned.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut terms: BTreeMap<Monomial, i64> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let entry = terms.entry(m.clone()).or_insert(0);
                *entry += c1 * c2;
                if *entry == 0 {
                    terms.remove(&m);
                }
            }
        }
        Polynomial { terms }
    }

    /// Multiplies by a monomial.
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m1, &c)| (m1.mul(m), c))
            .collect();
        Polynomial { terms }
    }

    /// Substitutes each indeterminate by its image monomial. The map must
    /// cover every parameter appearing in the polynomial; the substitution
    /// is a ring homomorphism.
    pub fn specialize(
        &self,
        map: &BTreeMap<ParamId, Monomial>,
    ) -> Result<Polynomial, UnmappedParameter> {
        let mut out = Polynomial::zero();
        for (mono, c) in &self.terms {
            let mut image = Monomial::one();
            for (p, e) in mono.factors() {
                let target = map
                    .get(p)
                    .ok_or_else(|| UnmappedParameter(p.clone()))?;
                for _ in 0..e {
                    image = image.mul(target);
                }
            }
            let term = {
                let mut t = Polynomial::from_monomial(image);
                t.terms.values_mut().for_each(|v| *v *= c);
                t
            };
            out = out.add(&term);
        }
        Ok(out)
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Polynomial::from_monomial(m)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if first {
                if *c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if *c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.unsigned_abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aup(a: &str, b: &str) -> ParamId {
        ParamId::AlphaUp(a.into(), b.into())
    }

    #[test]
    fn mono_mul_identity_and_exponents() {
        let one = Monomial::one();
        let b = Monomial::param(ParamId::Beta);
        assert_eq!(one.mul(&b), b);
        let b2 = Monomial::from_pairs([(ParamId::Beta, 2)]);
        assert_eq!(b.mul(&b2), Monomial::from_pairs([(ParamId::Beta, 3)]));
        let m1 = Monomial::param(aup("a", "b"));
        let m2 = Monomial::from_pairs([
            (ParamId::Gamma("c".into(), "d".into()), 1),
            (ParamId::Beta, 1),
        ]);
        let prod = m1.mul(&m2);
        assert_eq!(
            prod,
            Monomial::from_pairs([
                (aup("a", "b"), 1),
                (ParamId::Gamma("c".into(), "d".into()), 1),
                (ParamId::Beta, 1),
            ])
        );
    }

    #[test]
    fn poly_arith_basics() {
        let p = Polynomial::from_monomial(Monomial::param(ParamId::Beta));
        assert_eq!(p.add(&Polynomial::zero()), p);
        assert_eq!(p.mul(&Polynomial::one()), p);
        let neg = Polynomial::zero().add(&p).mul(&Polynomial::constant(-1));
        assert!(p.add(&neg).is_zero());
    }

    #[test]
    fn display_canonical_order() {
        let m = Monomial::from_pairs([
            (ParamId::Gamma("0".into(), "1".into()), 1),
            (ParamId::Beta, 2),
            (aup("1", "0"), 1),
        ]);
        assert_eq!(m.to_string(), "b^2*aup[1,0]*g[0,1]");
    }

    #[test]
    fn specialize_ghost_map_examples() {
        let mut map = BTreeMap::new();
        map.insert(aup("1", "0"), Monomial::param(ParamId::GhostAlpha(1)));
        map.insert(
            ParamId::Gamma("1".into(), "1".into()),
            Monomial::param(ParamId::GhostGamma3),
        );
        let p = Polynomial::from_monomial(Monomial::param(aup("1", "0")));
        assert_eq!(
            p.specialize(&map).unwrap(),
            Polynomial::from_monomial(Monomial::param(ParamId::GhostAlpha(1)))
        );
        let q = Polynomial::from_monomial(Monomial::param(ParamId::Gamma(
            "1".into(),
            "1".into(),
        )));
        assert_eq!(
            q.specialize(&map).unwrap(),
            Polynomial::from_monomial(Monomial::param(ParamId::GhostGamma3))
        );
        assert_eq!(
            Polynomial::zero().specialize(&map).unwrap(),
            Polynomial::zero()
        );
        let r = Polynomial::from_monomial(Monomial::param(ParamId::Beta));
        assert_eq!(
            r.specialize(&map).unwrap_err(),
            UnmappedParameter(ParamId::Beta)
        );
    }
}
