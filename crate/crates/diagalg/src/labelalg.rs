//! The label algebra L_n(X): concatenation product with loop and boundary-arc
//! parameter extraction, linear combinations over the coefficient ring,
//! generator diagrams, and the closed-form dimension.
//!
//! Concatenation glues the right nodes of the first diagram to the left nodes
//! of the second, traces every string, and replaces each closed loop by β and
//! each boundary arc by the parameter determined by the kinds and labels of
//! its two removed endpoints: top-to-top gives `α^a_b` (a the left label in
//! the merged top order), bottom-to-bottom gives `δ^a_b`, and top-to-bottom
//! gives `γ^a_b` (a the top label).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;

use crate::coeff::{Label, Monomial, ParamId, Polynomial};
use crate::diagram::{Diagram, Endpoint, LabelSet};
use crate::{Error, Result};

/// Which diagram an endpoint belongs to during concatenation tracing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Pt {
    One(Endpoint),
    Two(Endpoint),
}

/// The kind of a boundary arc removed during concatenation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcKind {
    /// Both endpoints on the merged top boundary (parameter α).
    TopTop,
    /// Both endpoints on the merged bottom boundary (parameter δ).
    BottomBottom,
    /// One top and one bottom endpoint (parameter γ).
    TopBottom,
}

/// One boundary arc removed during concatenation: its kind, the two labels
/// in parameter order (left/right for α and δ, top/bottom for γ) and the
/// 0-based positions of the removed endpoints in the merged boundary order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    /// Arc kind.
    pub kind: ArcKind,
    /// First parameter label (left endpoint for α/δ, top endpoint for γ).
    pub a: Label,
    /// Second parameter label (right endpoint for α/δ, bottom endpoint for γ).
    pub b: Label,
    /// Merged boundary positions of the two endpoints, in the same order.
    pub positions: (u32, u32),
}

impl Arc {
    /// The parameter contributed by this arc.
    pub fn param(&self) -> ParamId {
        match self.kind {
            ArcKind::TopTop => ParamId::AlphaUp(self.a.clone(), self.b.clone()),
            ArcKind::BottomBottom => ParamId::DeltaDown(self.a.clone(), self.b.clone()),
            ArcKind::TopBottom => ParamId::Gamma(self.a.clone(), self.b.clone()),
        }
    }
}

/// Full record of the loops and arcs removed by one concatenation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcatTrace {
    /// Number of closed loops (each contributes β).
    pub loops: u32,
    /// The removed boundary arcs, in tracing order.
    pub arcs: Vec<Arc>,
}

/// Concatenates two basis diagrams: returns the coefficient monomial, the
/// resulting basis diagram, and the trace of removed loops and arcs.
pub fn concat(d1: &Diagram, d2: &Diagram) -> Result<(Monomial, Diagram, ConcatTrace)> {
    if d1.n() != d2.n() {
        return Err(Error::SizeMismatch(d1.n(), d2.n()));
    }
    if d1.label_set() != d2.label_set() {
        return Err(Error::LabelSetMismatch);
    }
    let n = d1.n();
    let t1 = d1.t();
    let b1 = d1.b();

    let partner = |p: Pt| -> Pt {
        match p {
            Pt::One(e) => Pt::One(d1.partner(e).expect("valid diagram")),
            Pt::Two(e) => Pt::Two(d2.partner(e).expect("valid diagram")),
        }
    };
    let is_external = |p: Pt| -> bool {
        match p {
            Pt::One(Endpoint::L(_)) | Pt::Two(Endpoint::R(_)) => true,
            Pt::One(Endpoint::R(_)) | Pt::Two(Endpoint::L(_)) => false,
            Pt::One(_) | Pt::Two(_) => true,
        }
    };
    let hop = |p: Pt| -> Pt {
        match p {
            Pt::One(Endpoint::R(i)) => Pt::Two(Endpoint::L(i)),
            Pt::Two(Endpoint::L(i)) => Pt::One(Endpoint::R(i)),
            _ => unreachable!("hop is only applied to identified nodes"),
        }
    };

    // Externals in a fixed deterministic order.
    let mut externals: Vec<Pt> = Vec::new();
    for i in 1..=n {
        externals.push(Pt::One(Endpoint::L(i)));
    }
    for k in 1..=t1 {
        externals.push(Pt::One(Endpoint::T(k)));
    }
    for k in 1..=b1 {
        externals.push(Pt::One(Endpoint::B(k)));
    }
    for i in 1..=n {
        externals.push(Pt::Two(Endpoint::R(i)));
    }
    for k in 1..=d2.t() {
        externals.push(Pt::Two(Endpoint::T(k)));
    }
    for k in 1..=d2.b() {
        externals.push(Pt::Two(Endpoint::B(k)));
    }

    let mut visited: BTreeSet<Pt> = BTreeSet::new();
    let mut strings: Vec<(Pt, Pt)> = Vec::new();
    for &start in &externals {
        if visited.contains(&start) {
            continue;
        }
        visited.insert(start);
        let mut cur = start;
        let end = loop {
            let p = partner(cur);
            if is_external(p) {
                break p;
            }
            visited.insert(p);
            let q = hop(p);
            visited.insert(q);
            cur = q;
        };
        visited.insert(end);
        strings.push((start, end));
    }

    // Any unvisited identified node lies on a closed loop.
    let mut loops = 0u32;
    for i in 1..=n {
        let seed = Pt::One(Endpoint::R(i));
        if visited.contains(&seed) {
            continue;
        }
        loops += 1;
        let mut cur = hop(seed);
        visited.insert(seed);
        visited.insert(cur);
        loop {
            let p = partner(cur);
            if visited.contains(&p) {
                break;
            }
            visited.insert(p);
            let q = hop(p);
            visited.insert(q);
            cur = q;
        }
    }

    // Merged boundary bookkeeping: d1's points then d2's, 0-based.
    let top_pos = |p: Pt| -> Option<u32> {
        match p {
            Pt::One(Endpoint::T(k)) => Some(k - 1),
            Pt::Two(Endpoint::T(k)) => Some(t1 + k - 1),
            _ => None,
        }
    };
    let bottom_pos = |p: Pt| -> Option<u32> {
        match p {
            Pt::One(Endpoint::B(k)) => Some(k - 1),
            Pt::Two(Endpoint::B(k)) => Some(b1 + k - 1),
            _ => None,
        }
    };
    let top_label = |pos: u32| -> Label {
        if pos < t1 {
            d1.top_labels()[pos as usize].clone()
        } else {
            d2.top_labels()[(pos - t1) as usize].clone()
        }
    };
    let bottom_label = |pos: u32| -> Label {
        if pos < b1 {
            d1.bottom_labels()[pos as usize].clone()
        } else {
            d2.bottom_labels()[(pos - b1) as usize].clone()
        }
    };

    let mut arcs: Vec<Arc> = Vec::new();
    let mut survivors: Vec<(Pt, Pt)> = Vec::new();
    for &(p, q) in &strings {
        match (top_pos(p), bottom_pos(p), top_pos(q), bottom_pos(q)) {
            (Some(tp), _, Some(tq), _) => {
                let (l, r) = if tp < tq { (tp, tq) } else { (tq, tp) };
                arcs.push(Arc {
                    kind: ArcKind::TopTop,
                    a: top_label(l),
                    b: top_label(r),
                    positions: (l, r),
                });
            }
            (_, Some(bp), _, Some(bq)) => {
                let (l, r) = if bp < bq { (bp, bq) } else { (bq, bp) };
                arcs.push(Arc {
                    kind: ArcKind::BottomBottom,
                    a: bottom_label(l),
                    b: bottom_label(r),
                    positions: (l, r),
                });
            }
            (Some(tp), _, _, Some(bq)) => {
                arcs.push(Arc {
                    kind: ArcKind::TopBottom,
                    a: top_label(tp),
                    b: bottom_label(bq),
                    positions: (tp, bq),
                });
            }
            (_, Some(bp), Some(tq), _) => {
                arcs.push(Arc {
                    kind: ArcKind::TopBottom,
                    a: top_label(tq),
                    b: bottom_label(bp),
                    positions: (tq, bp),
                });
            }
            _ => survivors.push((p, q)),
        }
    }

    // Re-index surviving boundary points in merged order.
    let mut surviving_top: Vec<u32> = Vec::new();
    let mut surviving_bottom: Vec<u32> = Vec::new();
    for &(p, q) in &survivors {
        for e in [p, q] {
            if let Some(tp) = top_pos(e) {
                surviving_top.push(tp);
            }
            if let Some(bp) = bottom_pos(e) {
                surviving_bottom.push(bp);
            }
        }
    }
    surviving_top.sort_unstable();
    surviving_bottom.sort_unstable();

    let map_endpoint = |p: Pt| -> Endpoint {
        match p {
            Pt::One(Endpoint::L(i)) => Endpoint::L(i),
            Pt::Two(Endpoint::R(i)) => Endpoint::R(i),
            other => {
                if let Some(tp) = top_pos(other) {
                    let idx = surviving_top.binary_search(&tp).unwrap() as u32;
                    Endpoint::T(idx + 1)
                } else {
                    let bp = bottom_pos(other).unwrap();
                    let idx = surviving_bottom.binary_search(&bp).unwrap() as u32;
                    Endpoint::B(idx + 1)
                }
            }
        }
    };

    let pairs: Vec<(Endpoint, Endpoint)> = survivors
        .iter()
        .map(|&(p, q)| (map_endpoint(p), map_endpoint(q)))
        .collect();
    let top_labels: Vec<Label> = surviving_top.iter().map(|&p| top_label(p)).collect();
    let bottom_labels: Vec<Label> =
        surviving_bottom.iter().map(|&p| bottom_label(p)).collect();
    let result = Diagram::new(n, d1.label_set().clone(), top_labels, bottom_labels, pairs)?;

    let mut coeff = Monomial::from_pairs([(ParamId::Beta, loops)]);
    for arc in &arcs {
        coeff.mul_param(arc.param());
    }
    Ok((coeff, result, ConcatTrace { loops, arcs }))
}

/// A finite linear combination of basis diagrams with polynomial
/// coefficients; all diagrams share the same n and X.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCombination {
    n: u32,
    x: LabelSet,
    terms: BTreeMap<Diagram, Polynomial>,
}

impl LinearCombination {
    /// The zero element of L_n(X).
    pub fn zero(n: u32, x: LabelSet) -> Self {
        LinearCombination {
            n,
            x,
            terms: BTreeMap::new(),
        }
    }

    /// A single basis diagram with coefficient 1.
    pub fn from_diagram(d: Diagram) -> Self {
        LinearCombination::from_term(Polynomial::one(), d)
    }

    /// A single basis diagram with the given coefficient.
    pub fn from_term(p: Polynomial, d: Diagram) -> Self {
        let mut lc = LinearCombination::zero(d.n(), d.label_set().clone());
        lc.add_term(p, d);
        lc
    }

    /// n of the ambient algebra.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The ambient label set X.
    pub fn label_set(&self) -> &LabelSet {
        &self.x
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates over (diagram, coefficient) terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &Polynomial)> {
        self.terms.iter()
    }

    /// If the combination is a single monomial multiple of one diagram,
    /// returns that monomial and diagram.
    pub fn as_monomial_term(&self) -> Option<(Monomial, &Diagram)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (d, p) = self.terms.iter().next().unwrap();
        let mut it = p.terms();
        let (m, c) = it.next()?;
        if it.next().is_some() || c != 1 {
            return None;
        }
        Some((m.clone(), d))
    }

    /// Adds `p * d` in place.
    pub fn add_term(&mut self, p: Polynomial, d: Diagram) {
        debug_assert_eq!(d.n(), self.n);
        debug_assert_eq!(d.label_set(), &self.x);
        if p.is_zero() {
            return;
        }
        let entry = self.terms.entry(d).or_insert_with(Polynomial::zero);
        *entry = entry.add(&p);
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    /// Exact sum.
    pub fn add(&self, other: &LinearCombination) -> Result<LinearCombination> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (d, p) in other.terms() {
            out.add_term(p.clone(), d.clone());
        }
        Ok(out)
    }

    /// Multiplies every coefficient by `p`.
    pub fn scale(&self, p: &Polynomial) -> LinearCombination {
        let mut out = LinearCombination::zero(self.n, self.x.clone());
        for (d, q) in self.terms() {
            out.add_term(q.mul(p), d.clone());
        }
        out
    }

    fn check_compatible(&self, other: &LinearCombination) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        if self.x != other.x {
            return Err(Error::LabelSetMismatch);
        }
        Ok(())
    }
}

/// Bilinear extension of [`concat`] to linear combinations.
pub fn multiply(u: &LinearCombination, v: &LinearCombination) -> Result<LinearCombination> {
    if u.n != v.n {
        return Err(Error::SizeMismatch(u.n, v.n));
    }
    if u.x != v.x {
        return Err(Error::LabelSetMismatch);
    }
    let mut out = LinearCombination::zero(u.n, u.x.clone());
    for (da, pa) in u.terms() {
        for (db, pb) in v.terms() {
            let (m, d, _) = concat(da, db)?;
            let coeff = pa.mul(pb).mul_monomial(&m);
            out.add_term(coeff, d);
        }
    }
    Ok(out)
}

impl fmt::Display for LinearCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, p) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{p} * {d}")?;
        }
        Ok(())
    }
}

/// Identifier of a generator diagram of L_n(X).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorId {
    /// The identity diagram.
    Id,
    /// The Temperley–Lieb generator ẽ_i, 1 ≤ i ≤ n-1.
    E(u32),
    /// The top generator f̃↑(a, b).
    FUp(Label, Label),
    /// The bottom generator f̃↓(a, b).
    FDown(Label, Label),
    /// The odd top generator w̃↑(a, b).
    WUp(Label, Label),
    /// The odd bottom generator w̃↓(a, b).
    WDown(Label, Label),
}

/// Builds the exact generator diagram for `g` at the given n over X.
pub fn generator_diagram(g: &GeneratorId, n: u32, x: &LabelSet) -> Result<Diagram> {
    let check = |l: &Label| -> Result<()> {
        if x.contains(l) {
            Ok(())
        } else {
            Err(Error::InvalidDiagram(format!("label '{l}' is not in X")))
        }
    };
    match g {
        GeneratorId::Id => Ok(Diagram::identity(n, x.clone())),
        GeneratorId::E(i) => {
            let i = *i;
            if i < 1 || i >= n {
                return Err(Error::IndexOutOfRange(format!(
                    "E({i}) requires 1 <= i <= n-1 = {}",
                    n.saturating_sub(1)
                )));
            }
            let mut pairs = vec![
                (Endpoint::L(i), Endpoint::L(i + 1)),
                (Endpoint::R(i), Endpoint::R(i + 1)),
            ];
            for m in (1..=n).filter(|&m| m != i && m != i + 1) {
                pairs.push((Endpoint::L(m), Endpoint::R(m)));
            }
            Diagram::new(n, x.clone(), vec![], vec![], pairs)
        }
        GeneratorId::FUp(a, b) => {
            check(a)?;
            check(b)?;
            let mut pairs = vec![
                (Endpoint::L(1), Endpoint::T(1)),
                (Endpoint::R(1), Endpoint::T(2)),
            ];
            for m in 2..=n {
                pairs.push((Endpoint::L(m), Endpoint::R(m)));
            }
            Diagram::new(n, x.clone(), vec![a.clone(), b.clone()], vec![], pairs)
        }
        GeneratorId::FDown(a, b) => {
            check(a)?;
            check(b)?;
            let mut pairs = vec![
                (Endpoint::L(n), Endpoint::B(1)),
                (Endpoint::R(n), Endpoint::B(2)),
            ];
            for m in 1..n {
                pairs.push((Endpoint::L(m), Endpoint::R(m)));
            }
            Diagram::new(n, x.clone(), vec![], vec![a.clone(), b.clone()], pairs)
        }
        GeneratorId::WUp(a, b) => {
            check(a)?;
            check(b)?;
            let mut pairs = vec![
                (Endpoint::L(1), Endpoint::T(1)),
                (Endpoint::R(n), Endpoint::B(1)),
            ];
            for m in 2..=n {
                pairs.push((Endpoint::L(m), Endpoint::R(m - 1)));
            }
            Diagram::new(n, x.clone(), vec![a.clone()], vec![b.clone()], pairs)
        }
        GeneratorId::WDown(a, b) => {
            check(a)?;
            check(b)?;
            let mut pairs = vec![
                (Endpoint::L(n), Endpoint::B(1)),
                (Endpoint::R(1), Endpoint::T(1)),
            ];
            for m in 1..n {
                pairs.push((Endpoint::L(m), Endpoint::R(m + 1)));
            }
            Diagram::new(n, x.clone(), vec![a.clone()], vec![b.clone()], pairs)
        }
    }
}

/// The odd diagram family w̃^a_b(j), 0 ≤ j ≤ n: j = 0 gives w̃↑, j = n gives
/// w̃↓, and 1 ≤ j ≤ n-1 gives the diagram with a left simple link at j.
pub fn w_diagram(a: &Label, b: &Label, j: u32, n: u32, x: &LabelSet) -> Result<Diagram> {
    if j > n {
        return Err(Error::IndexOutOfRange(format!(
            "w_diagram requires 0 <= j <= n = {n}, got {j}"
        )));
    }
    if j == 0 {
        return generator_diagram(&GeneratorId::WUp(a.clone(), b.clone()), n, x);
    }
    if j == n {
        return generator_diagram(&GeneratorId::WDown(a.clone(), b.clone()), n, x);
    }
    let mut pairs = vec![
        (Endpoint::L(j), Endpoint::L(j + 1)),
        (Endpoint::R(1), Endpoint::T(1)),
        (Endpoint::R(n), Endpoint::B(1)),
    ];
    for i in 1..j {
        pairs.push((Endpoint::L(i), Endpoint::R(i + 1)));
    }
    for i in j + 2..=n {
        pairs.push((Endpoint::L(i), Endpoint::R(i - 1)));
    }
    Diagram::new(n, x.clone(), vec![a.clone()], vec![b.clone()], pairs)
}

/// dim L_n(X), evaluated exactly:
/// Σ_{d=0}^n ( Σ_{j=0}^{⌊(n-d)/2⌋} |X|^{n-2j-d} (n-2j-d+1) (C(n,j) - C(n,j-1)) )².
pub fn dimension(n: u32, xsize: u32) -> BigUint {
    let binom = |n: u32, k: u32| -> BigUint {
        let mut v = BigUint::from(1u32);
        for i in 0..k {
            v = v * BigUint::from(n - i) / BigUint::from(i + 1);
        }
        v
    };
    let mut total = BigUint::from(0u32);
    for d in 0..=n {
        let mut inner = BigUint::from(0u32);
        for j in 0..=((n - d) / 2) {
            let m = n - 2 * j - d;
            let ballot = binom(n, j)
                - if j == 0 {
                    BigUint::from(0u32)
                } else {
                    binom(n, j - 1)
                };
            inner += BigUint::from(xsize).pow(m) * BigUint::from(m + 1) * ballot;
        }
        total += &inner * &inner;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::enumerate_all;

    fn xset(labels: &[&str]) -> LabelSet {
        LabelSet::new(labels.iter().copied()).unwrap()
    }

    #[test]
    fn identity_is_unit() {
        let x = xset(&["0", "1"]);
        let id = Diagram::identity(2, x.clone());
        for d in enumerate_all(2, &x) {
            let (m, r, trace) = concat(&id, &d).unwrap();
            assert!(m.is_one());
            assert_eq!(r, d);
            assert_eq!(trace.loops, 0);
            assert!(trace.arcs.is_empty());
            let (m, r, _) = concat(&d, &id).unwrap();
            assert!(m.is_one());
            assert_eq!(r, d);
        }
    }

    #[test]
    fn e1_squared_is_beta_e1() {
        let x = xset(&["a"]);
        let e1 = generator_diagram(&GeneratorId::E(1), 2, &x).unwrap();
        let (m, r, trace) = concat(&e1, &e1).unwrap();
        assert_eq!(m, Monomial::param(ParamId::Beta));
        assert_eq!(r, e1);
        assert_eq!(trace.loops, 1);
    }

    #[test]
    fn fup_fup_gives_alpha() {
        let x = xset(&["a", "b", "c", "d"]);
        // f̃↑(c,a) f̃↑(b,d) = α^a_b f̃↑(c,d)
        let l = generator_diagram(&GeneratorId::FUp("c".into(), "a".into()), 2, &x).unwrap();
        let r = generator_diagram(&GeneratorId::FUp("b".into(), "d".into()), 2, &x).unwrap();
        let (m, d, trace) = concat(&l, &r).unwrap();
        assert_eq!(
            m,
            Monomial::param(ParamId::AlphaUp("a".into(), "b".into()))
        );
        assert_eq!(
            d,
            generator_diagram(&GeneratorId::FUp("c".into(), "d".into()), 2, &x).unwrap()
        );
        assert_eq!(trace.arcs.len(), 1);
        assert_eq!(trace.arcs[0].kind, ArcKind::TopTop);
        assert_eq!(trace.arcs[0].positions, (1, 2));
    }

    #[test]
    fn gamma_orientation_top_label_first() {
        let x = xset(&["a", "b", "c", "d"]);
        // At n = 1: f̃↑(c,a) f̃↓(b,d) = γ^a_b w̃↑(c,d).
        let l = generator_diagram(&GeneratorId::FUp("c".into(), "a".into()), 1, &x).unwrap();
        let r = generator_diagram(&GeneratorId::FDown("b".into(), "d".into()), 1, &x).unwrap();
        let (m, d, _) = concat(&l, &r).unwrap();
        assert_eq!(m, Monomial::param(ParamId::Gamma("a".into(), "b".into())));
        assert_eq!(
            d,
            generator_diagram(&GeneratorId::WUp("c".into(), "d".into()), 1, &x).unwrap()
        );
    }

    #[test]
    fn worked_example_one() {
        // First multiplication display at n = 8.
        let x = xset(&["0", "1"]);
        let d1 = Diagram::new(
            8,
            x.clone(),
            vec!["0".into(), "1".into()],
            vec![],
            vec![
                (Endpoint::L(1), Endpoint::L(2)),
                (Endpoint::L(3), Endpoint::L(8)),
                (Endpoint::L(4), Endpoint::L(5)),
                (Endpoint::L(6), Endpoint::L(7)),
                (Endpoint::R(1), Endpoint::R(2)),
                (Endpoint::R(3), Endpoint::T(2)),
                (Endpoint::R(8), Endpoint::T(1)),
                (Endpoint::R(4), Endpoint::R(5)),
                (Endpoint::R(6), Endpoint::R(7)),
            ],
        )
        .unwrap();
        let d2 = Diagram::new(
            8,
            x.clone(),
            vec!["1".into(), "0".into(), "1".into(), "0".into()],
            vec!["1".into(), "1".into()],
            vec![
                (Endpoint::L(1), Endpoint::T(1)),
                (Endpoint::L(2), Endpoint::T(2)),
                (Endpoint::L(3), Endpoint::B(2)),
                (Endpoint::L(4), Endpoint::L(7)),
                (Endpoint::L(5), Endpoint::L(6)),
                (Endpoint::L(8), Endpoint::B(1)),
                (Endpoint::R(1), Endpoint::T(4)),
                (Endpoint::R(2), Endpoint::T(3)),
                (Endpoint::R(3), Endpoint::R(6)),
                (Endpoint::R(4), Endpoint::R(5)),
                (Endpoint::R(7), Endpoint::R(8)),
            ],
        )
        .unwrap();
        let (m, d, _) = concat(&d1, &d2).unwrap();
        let expected = Monomial::from_pairs([
            (ParamId::Beta, 1),
            (ParamId::AlphaUp("1".into(), "0".into()), 1),
            (ParamId::Gamma("0".into(), "1".into()), 1),
            (ParamId::Gamma("1".into(), "1".into()), 1),
        ]);
        assert_eq!(m, expected);
        let product = Diagram::new(
            8,
            x,
            vec!["1".into(), "0".into()],
            vec![],
            vec![
                (Endpoint::L(1), Endpoint::L(2)),
                (Endpoint::L(3), Endpoint::L(8)),
                (Endpoint::L(4), Endpoint::L(5)),
                (Endpoint::L(6), Endpoint::L(7)),
                (Endpoint::R(2), Endpoint::T(1)),
                (Endpoint::R(1), Endpoint::T(2)),
                (Endpoint::R(3), Endpoint::R(6)),
                (Endpoint::R(4), Endpoint::R(5)),
                (Endpoint::R(7), Endpoint::R(8)),
            ],
        )
        .unwrap();
        assert_eq!(d, product);
    }

    #[test]
    fn multiply_is_bilinear_and_collects() {
        let x = xset(&["a"]);
        let e1 = generator_diagram(&GeneratorId::E(1), 2, &x).unwrap();
        let u = LinearCombination::from_diagram(e1.clone());
        let prod = multiply(&u, &u).unwrap();
        let expected = LinearCombination::from_term(
            Polynomial::from_monomial(Monomial::param(ParamId::Beta)),
            e1,
        );
        assert_eq!(prod, expected);
    }

    #[test]
    fn w_diagram_family() {
        let x = xset(&["a", "b"]);
        let a = "a".to_string();
        let b = "b".to_string();
        assert_eq!(
            w_diagram(&a, &b, 0, 2, &x).unwrap(),
            generator_diagram(&GeneratorId::WUp(a.clone(), b.clone()), 2, &x).unwrap()
        );
        assert_eq!(
            w_diagram(&a, &b, 2, 2, &x).unwrap(),
            generator_diagram(&GeneratorId::WDown(a.clone(), b.clone()), 2, &x).unwrap()
        );
        // j = 1 at n = 2 equals ẽ_1 · w̃↑ with coefficient 1.
        let e1 = generator_diagram(&GeneratorId::E(1), 2, &x).unwrap();
        let wup = generator_diagram(&GeneratorId::WUp(a.clone(), b.clone()), 2, &x).unwrap();
        let (m, d, _) = concat(&e1, &wup).unwrap();
        assert!(m.is_one());
        assert_eq!(d, w_diagram(&a, &b, 1, 2, &x).unwrap());
    }

    #[test]
    fn dimension_matches_enumeration_spots() {
        assert_eq!(dimension(1, 1), BigUint::from(5u32));
        assert_eq!(dimension(1, 2), BigUint::from(17u32));
        assert_eq!(dimension(2, 1), BigUint::from(21u32));
        for (n, xs) in [(1u32, 1usize), (1, 2), (2, 1), (2, 2), (3, 1)] {
            let labels: Vec<String> = (0..xs).map(|i| i.to_string()).collect();
            let x = LabelSet::new(labels).unwrap();
            let count = enumerate_all(n, &x).count();
            assert_eq!(dimension(n, xs as u32), BigUint::from(count));
        }
    }

    #[test]
    fn associativity_sample() {
        let x = xset(&["0", "1"]);
        let all: Vec<Diagram> = enumerate_all(2, &x).collect();
        // A small deterministic sample; the full random corpus lives in the
        // acceptance suite.
        for (i, j, k) in [(0, 1, 2), (5, 10, 20), (3, 50, 7), (33, 33, 33)] {
            let a = LinearCombination::from_diagram(all[i % all.len()].clone());
            let b = LinearCombination::from_diagram(all[j % all.len()].clone());
            let c = LinearCombination::from_diagram(all[k % all.len()].clone());
            let left = multiply(&multiply(&a, &b).unwrap(), &c).unwrap();
            let right = multiply(&a, &multiply(&b, &c).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }
}
