//! Normal-form machinery: reduction of words to at most one odd generator,
//! WT-form computation, the label-reduced predicate, canonical even words,
//! left descent sets, and a brute-force even-reduced oracle.
//!
//! The pair reduction follows a deterministic case table driven by the
//! defining relations: a segment w̃ · mid · w̃' with two odd ends is rewritten
//! until the trailing odd generator is eliminated (or the whole suffix
//! collapses). Words ending in w̃↓ are handled through the vertical-flip
//! automorphism, which swaps f↑ ↔ f↓, sends e_i to e_{n-i}, w̃↑(a,b) to
//! w̃↓(b,a), and exchanges the α and δ parameter families while transposing
//! γ. Every public rewrite checks itself against φ.

use std::collections::BTreeMap;

use crate::coeff::{Label, Monomial, ParamId};
use crate::decompose::{decompose_even, decompose_odd, vflip_generator};
use crate::diagram::{Diagram, Endpoint, LabelSet, Parity};
use crate::labelalg::{self, GeneratorId};
use crate::presentation::{phi_full, special_words, Generator, SpecialWord, Word};
use crate::{Error, Result};

/// The odd part of a WT form: either absent or the data of w̃(j) = w(a,b,j).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WPart {
    Identity,
    W { a: Label, b: Label, j: u32 },
}

impl WPart {
    /// The word realizing this odd part.
    pub fn word(&self, n: u32, x: &LabelSet) -> Result<Word> {
        match self {
            WPart::Identity => Ok(Vec::new()),
            WPart::W { a, b, j } => {
                special_words(&SpecialWord::W(a.clone(), b.clone(), *j), n, x)
            }
        }
    }
}

impl std::fmt::Display for WPart {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WPart::Identity => write!(f, "ID"),
            WPart::W { a, b, j } => write!(f, "W({a},{b},{j})"),
        }
    }
}

/// Canonical form scalar · W · T with T a canonical even word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WTForm {
    pub scalar: Monomial,
    pub w: WPart,
    pub t: Word,
}

impl WTForm {
    /// The concatenated word W · T (without the scalar).
    pub fn word(&self, n: u32, x: &LabelSet) -> Result<Word> {
        let mut w = self.w.word(n, x)?;
        w.extend(self.t.iter().cloned());
        Ok(w)
    }
}

impl std::fmt::Display for WTForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} | {} | {}",
            self.scalar,
            self.w,
            crate::presentation::word_to_string(&self.t)
        )
    }
}

/// True iff the φ concatenation trace of `w` contains no boundary arcs.
pub fn is_label_reduced(w: &[Generator], n: u32, x: &LabelSet) -> Result<bool> {
    Ok(phi_full(w, n, x)?.arcs == 0)
}

/// The image of a parameter monomial under the vertical-flip automorphism.
fn vflip_monomial(m: &Monomial) -> Monomial {
    Monomial::from_pairs(m.factors().map(|(p, e)| {
        let q = match p {
            ParamId::Beta => ParamId::Beta,
            ParamId::AlphaUp(a, b) => ParamId::DeltaDown(a.clone(), b.clone()),
            ParamId::DeltaDown(a, b) => ParamId::AlphaUp(a.clone(), b.clone()),
            ParamId::Gamma(a, b) => ParamId::Gamma(b.clone(), a.clone()),
            other => other.clone(),
        };
        (q, e)
    }))
}

/// Rewrites the segment `prefix · mid · suffix` (two odd ends, even middle)
/// into a scalar multiple of a word with at most one odd generator and no
/// more label generators.
pub fn reduce_odd_pair(
    prefix: &Generator,
    mid: &[Generator],
    suffix: &Generator,
    n: u32,
) -> Result<(Monomial, Word)> {
    if !prefix.is_odd() || !suffix.is_odd() || mid.iter().any(Generator::is_odd) {
        return Err(Error::InvalidDiagram(
            "reduce_odd_pair expects odd ends and an even middle".into(),
        ));
    }
    match suffix {
        Generator::WUp(c, d) => reduce_up(prefix, mid.to_vec(), c.clone(), d.clone(), n),
        Generator::WDown(c, d) => {
            // Conjugate through the vertical flip so the suffix becomes w̃↑.
            let fp = vflip_generator(prefix, n);
            let fmid: Vec<Generator> =
                mid.iter().map(|g| vflip_generator(g, n)).collect();
            let (m, w) = reduce_up(&fp, fmid, d.clone(), c.clone(), n)?;
            Ok((
                vflip_monomial(&m),
                w.iter().map(|g| vflip_generator(g, n)).collect(),
            ))
        }
        _ => unreachable!("suffix is odd"),
    }
}

/// Core case table for a segment ending in w̃↑(c,d).
fn reduce_up(
    w1: &Generator,
    mut mid: Vec<Generator>,
    mut c: Label,
    mut d: Label,
    n: u32,
) -> Result<(Monomial, Word)> {
    let (a, b, w1_is_down) = match w1 {
        Generator::WUp(a, b) => (a.clone(), b.clone(), false),
        Generator::WDown(a, b) => (a.clone(), b.clone(), true),
        _ => unreachable!("prefix is odd"),
    };
    let mut scalar = Monomial::one();
    // Suffix of already-settled even generators, in word order.
    let mut settled: Word = Vec::new();

    loop {
        let k = mid.len();
        // Length of the maximal staircase e_m … e_1 at the end of mid.
        let mut m = 0usize;
        while m < k && mid[k - 1 - m] == Generator::E((m + 1) as u32) {
            m += 1;
        }

        if m == k {
            // The whole middle is a staircase: apply the base reductions.
            let mut out: Word = Vec::new();
            if !w1_is_down {
                if (k as u32) + 1 < n {
                    // w̃↑ · e_k…e_1 · w̃↑ = e_{k+1}…e_2 · f↑ e_1…e_{n-1} f↓
                    out.extend((2..=k as u32 + 1).rev().map(Generator::E));
                    out.push(Generator::FUp(a, c));
                    out.extend((1..n).map(Generator::E));
                    out.push(Generator::FDown(b, d));
                } else {
                    // k = n-1 (or n = 1): the e-chain collapses entirely.
                    out.push(Generator::FUp(a, c));
                    out.push(Generator::FDown(b, d));
                }
            } else if k == 0 {
                // w̃↓(a,b) · w̃↑(c,d) = α^a_c · f↓(b,d)
                scalar.mul_param(ParamId::AlphaUp(a, c));
                out.push(Generator::FDown(b, d));
            } else {
                // w̃↓ · e_k…e_1 · w̃↑ = e_{k-1}…e_1 · f↑(a,c) f↓(b,d)
                out.extend((1..k as u32).rev().map(Generator::E));
                out.push(Generator::FUp(a, c));
                out.push(Generator::FDown(b, d));
            }
            out.extend(settled);
            return Ok((scalar, out));
        }

        // The generator immediately before the staircase.
        let s = mid[k - 1 - m].clone();
        match s {
            Generator::FDown(e, f) if m as u32 + 1 == n => {
                // f↓ meets the full staircase: e_{n-1}…e_1 w̃↑(c,d) is
                // e_{n-1} w̃↓(c,d), and f↓(e,f) e_{n-1} w̃↓(c,d) becomes
                // w̃↓(c,e) f↓(f,d); recurse on the shorter segment.
                let inner = mid[..k - 1 - m].to_vec();
                let (sc, mut out) = reduce_odd_pair(
                    w1,
                    &inner,
                    &Generator::WDown(c.clone(), e.clone()),
                    n,
                )?;
                out.push(Generator::FDown(f, d));
                out.extend(settled);
                return Ok((scalar.mul(&sc), out));
            }
            Generator::FDown(e, f) if n == 1 => {
                // f↓(e,f) w̃↑(c,d) = γ^c_f f↓(e,d): the trailing odd
                // generator is absorbed outright.
                scalar.mul_param(ParamId::Gamma(c, f));
                let mut out = vec![w1.clone()];
                out.extend(mid[..k - 1].iter().cloned());
                out.push(Generator::FDown(e, d));
                out.extend(settled);
                return Ok((scalar, out));
            }
            Generator::FDown(e, f) => {
                // m < n-1: f↓ slides through the staircase, then
                // f↓(e,f) w̃↑(c,d) = w̃↑(c,e) e_{n-1} f↓(f,d).
                mid.remove(k - 1 - m);
                settled.insert(0, Generator::FDown(f, d));
                settled.insert(0, Generator::E(n - 1));
                d = e;
            }
            Generator::FUp(e, f) => {
                if m == 0 {
                    // f↑(e,f) w̃↑(c,d) = α^f_c w̃↑(e,d)
                    scalar.mul_param(ParamId::AlphaUp(f, c));
                    mid.pop();
                    c = e;
                } else {
                    // f↑ slides to e_1, merges with w̃↑ via
                    // f↑(e,f) e_1 w̃↑(c,d) = w̃↑(e,d) f↑(f,c), and the rest
                    // of the staircase passes to the right of w̃↑.
                    let mut tail: Word =
                        (1..m as u32).rev().map(Generator::E).collect();
                    tail.push(Generator::FUp(f, c));
                    tail.extend(settled);
                    settled = tail;
                    mid.truncate(k - 1 - m);
                    c = e;
                }
            }
            Generator::E(j) => {
                let j = j as usize;
                if m == 0 || j >= m + 2 {
                    // e_j commutes with the staircase and crosses w̃↑ as
                    // e_{j-1}.
                    mid.remove(k - 1 - m);
                    settled.insert(0, Generator::E(j as u32 - 1));
                } else if j == m {
                    // e_m absorbs into the staircase head: factor β.
                    scalar.mul_param(ParamId::Beta);
                    mid.remove(k - 1 - m);
                } else if j + 1 <= m {
                    // j ≤ m-1: e_j e_m…e_1 shortens to e_j…e_1 while
                    // e_{m-1}…e_{j+1} crosses w̃↑.
                    let mut tail: Word = (j as u32 + 1..m as u32)
                        .rev()
                        .map(Generator::E)
                        .collect();
                    tail.extend(settled);
                    settled = tail;
                    mid.truncate(k - 1 - m);
                    mid.extend((1..=j as u32).rev().map(Generator::E));
                } else {
                    unreachable!("e_{{m+1}} would extend the maximal staircase");
                }
            }
            _ => unreachable!("middle is even"),
        }
    }
}

/// Computes the WT form of a word: φ(w) = scalar · φ(W · T) with T the
/// canonical even word of the underlying diagram.
pub fn to_wt_form(word: &[Generator], n: u32, x: &LabelSet) -> Result<WTForm> {
    let target = phi_full(word, n, x)?;
    let mut w: Word = word.to_vec();
    let mut acc = Monomial::one();
    loop {
        let odd: Vec<usize> = w
            .iter()
            .enumerate()
            .filter(|(_, g)| g.is_odd())
            .map(|(i, _)| i)
            .collect();
        if odd.len() < 2 {
            break;
        }
        let (i, j) = (odd[0], odd[1]);
        let (m, repl) = reduce_odd_pair(&w[i], &w[i + 1..j], &w[j], n)?;
        acc = acc.mul(&m);
        let mut next = w[..i].to_vec();
        next.extend(repl);
        next.extend(w[j + 1..].iter().cloned());
        w = next;
        let check = phi_full(&w, n, x)?;
        assert!(
            target.diagram == check.diagram && target.scalar == acc.mul(&check.scalar),
            "odd-pair reduction failed to preserve φ"
        );
    }

    let r = phi_full(&w, n, x)?;
    let scalar = acc.mul(&r.scalar);
    let (wpart, t) = match r.diagram.parity() {
        Parity::Even => (WPart::Identity, decompose_even(&r.diagram)?),
        Parity::Odd => {
            let (j, a, b, rem) = decompose_odd(&r.diagram)?;
            (WPart::W { a, b, j }, decompose_even(&rem)?)
        }
    };
    let form = WTForm { scalar, w: wpart, t };
    let check = phi_full(&form.word(n, x)?, n, x)?;
    assert!(
        check.scalar.is_one() && check.arcs == 0 && check.diagram == r.diagram,
        "WT form failed its φ certification"
    );
    Ok(form)
}

/// Returns the canonical even word for an even word's diagram, with the
/// scalar relating them.
pub fn even_canonical(w: &[Generator], n: u32, x: &LabelSet) -> Result<(Monomial, Word)> {
    if w.iter().any(Generator::is_odd) {
        return Err(Error::NotEven);
    }
    let r = phi_full(w, n, x)?;
    if r.arcs > 0 {
        return Err(Error::NotLabelReduced);
    }
    Ok((r.scalar, decompose_even(&r.diagram)?))
}

/// The left descent set of an even-reduced word, read off its diagram.
pub fn left_descent_set(
    t: &[Generator],
    n: u32,
    x: &LabelSet,
) -> Result<Vec<Generator>> {
    let r = phi_full(t, n, x)?;
    if r.diagram.parity() != Parity::Even {
        return Err(Error::NotEvenDiagram);
    }
    if !r.scalar.is_one() {
        return Err(Error::NotEvenReduced);
    }
    let d = &r.diagram;
    let mut set: Vec<Generator> = Vec::new();
    if d.contains_pair(Endpoint::L(1), Endpoint::T(1)) {
        set.push(Generator::FUp(
            d.top_labels()[0].clone(),
            d.top_labels()[1].clone(),
        ));
    }
    if d.contains_pair(Endpoint::L(n), Endpoint::B(1)) {
        set.push(Generator::FDown(
            d.bottom_labels()[0].clone(),
            d.bottom_labels()[1].clone(),
        ));
    }
    for i in 1..n {
        if d.contains_pair(Endpoint::L(i), Endpoint::L(i + 1)) {
            set.push(Generator::E(i));
        }
    }
    set.sort();
    Ok(set)
}

/// What the brute-force oracle records for each even diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleEntry {
    /// Minimal length of a coefficient-1 even word for this diagram.
    pub min_len: usize,
    /// All coefficient-1 even words of that minimal length.
    pub witnesses: Vec<Word>,
}

impl OracleEntry {
    /// The distinct leading generators across all minimal witnesses.
    pub fn leading_generators(&self) -> Vec<Generator> {
        let mut leads: Vec<Generator> = self
            .witnesses
            .iter()
            .filter_map(|w| w.first().cloned())
            .collect();
        leads.sort();
        leads.dedup();
        leads
    }
}

/// Brute-force even-reduced oracle: BFS over products of even generator
/// diagrams by word length. Extensions are pruned to coefficient-1
/// products, which is sound because every prefix of a coefficient-1 word
/// has coefficient 1.
pub fn even_reduced_oracle(
    n: u32,
    x: &LabelSet,
    max_len: usize,
) -> Result<BTreeMap<Diagram, OracleEntry>> {
    let mut gens: Vec<(Generator, Diagram)> = Vec::new();
    for i in 1..n {
        gens.push((
            Generator::E(i),
            labelalg::generator_diagram(&GeneratorId::E(i), n, x)?,
        ));
    }
    for a in x.labels() {
        for b in x.labels() {
            gens.push((
                Generator::FUp(a.clone(), b.clone()),
                labelalg::generator_diagram(
                    &GeneratorId::FUp(a.clone(), b.clone()),
                    n,
                    x,
                )?,
            ));
            gens.push((
                Generator::FDown(a.clone(), b.clone()),
                labelalg::generator_diagram(
                    &GeneratorId::FDown(a.clone(), b.clone()),
                    n,
                    x,
                )?,
            ));
        }
    }

    let identity = Diagram::identity(n, x.clone());
    let mut out: BTreeMap<Diagram, OracleEntry> = BTreeMap::new();
    out.insert(
        identity.clone(),
        OracleEntry { min_len: 0, witnesses: vec![Vec::new()] },
    );
    let mut frontier: Vec<(Diagram, Word)> = vec![(identity, Vec::new())];

    for len in 1..=max_len {
        let mut next: Vec<(Diagram, Word)> = Vec::new();
        for (d, w) in &frontier {
            for (g, gd) in &gens {
                let (m, nd, _) = labelalg::concat(d, gd)?;
                if !m.is_one() {
                    continue;
                }
                let mut nw = w.clone();
                nw.push(g.clone());
                match out.get_mut(&nd) {
                    None => {
                        out.insert(
                            nd.clone(),
                            OracleEntry { min_len: len, witnesses: vec![nw.clone()] },
                        );
                        next.push((nd, nw));
                    }
                    Some(entry) if entry.min_len == len => {
                        if !entry.witnesses.contains(&nw) {
                            entry.witnesses.push(nw.clone());
                            next.push((nd, nw));
                        }
                    }
                    Some(_) => {}
                }
            }
        }
        frontier = next;
    }
    Ok(out)
}
