//! The algebraic presentation A_n(X): words in the abstract generators, the
//! full relation catalogue, and the evaluation homomorphism φ into L_n(X).
//!
//! The generators are `e_i` (1 ≤ i ≤ n-1) and the label generators
//! `f↑(a,b)`, `f↓(a,b)`, `w↑(a,b)`, `w↓(a,b)` with labels in X; the identity
//! is the empty word. φ maps a word to the product of the corresponding
//! generator diagrams; the image is always a monomial multiple of a single
//! basis diagram.

use std::fmt;

use crate::coeff::{Label, Monomial, ParamId};
use crate::diagram::{Cursor, Diagram, LabelSet};
use crate::labelalg::{self, GeneratorId};
use crate::{Error, Result};

/// An abstract generator of A_n(X).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// e_i, 1 ≤ i ≤ n-1.
    E(u32),
    /// f↑(a, b).
    FUp(Label, Label),
    /// f↓(a, b).
    FDown(Label, Label),
    /// w↑(a, b).
    WUp(Label, Label),
    /// w↓(a, b).
    WDown(Label, Label),
}

impl Generator {
    /// The corresponding generator diagram.
    pub fn diagram(&self, n: u32, x: &LabelSet) -> Result<Diagram> {
        let id = match self {
            Generator::E(i) => GeneratorId::E(*i),
            Generator::FUp(a, b) => GeneratorId::FUp(a.clone(), b.clone()),
            Generator::FDown(a, b) => GeneratorId::FDown(a.clone(), b.clone()),
            Generator::WUp(a, b) => GeneratorId::WUp(a.clone(), b.clone()),
            Generator::WDown(a, b) => GeneratorId::WDown(a.clone(), b.clone()),
        };
        labelalg::generator_diagram(&id, n, x)
    }

    /// True for f↑, f↓, w↑, w↓ (the label generators).
    pub fn is_label_generator(&self) -> bool {
        !matches!(self, Generator::E(_))
    }

    /// True for w↑ and w↓ (the odd generators).
    pub fn is_odd(&self) -> bool {
        matches!(self, Generator::WUp(..) | Generator::WDown(..))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::E(i) => write!(f, "E{i}"),
            Generator::FUp(a, b) => write!(f, "FUP[{a},{b}]"),
            Generator::FDown(a, b) => write!(f, "FDN[{a},{b}]"),
            Generator::WUp(a, b) => write!(f, "WUP[{a},{b}]"),
            Generator::WDown(a, b) => write!(f, "WDN[{a},{b}]"),
        }
    }
}

/// A word in the generators; the empty word is the identity.
pub type Word = Vec<Generator>;

/// Formats a word in the canonical grammar: generators joined by `.`,
/// with `ID` for the empty word.
pub fn word_to_string(w: &Word) -> String {
    if w.is_empty() {
        "ID".to_string()
    } else {
        w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(".")
    }
}

/// Parses the canonical word grammar, e.g. `E1.WUP[a,b].E2.FDN[c,d]`.
pub fn parse_word(input: &str) -> Result<Word> {
    if input == "ID" {
        return Ok(Vec::new());
    }
    let mut c = Cursor::new(input);
    let mut word = Vec::new();
    loop {
        word.push(parse_generator(&mut c)?);
        if !c.eat(".") {
            break;
        }
    }
    c.end()?;
    Ok(word)
}

fn parse_generator(c: &mut Cursor) -> Result<Generator> {
    if c.eat("E") {
        return Ok(Generator::E(c.integer()?));
    }
    let make: fn(Label, Label) -> Generator = if c.eat("FUP") {
        Generator::FUp
    } else if c.eat("FDN") {
        Generator::FDown
    } else if c.eat("WUP") {
        Generator::WUp
    } else if c.eat("WDN") {
        Generator::WDown
    } else {
        return Err(c.err("expected a generator (E, FUP, FDN, WUP, WDN)"));
    };
    c.expect("[")?;
    let a = c.label()?;
    c.expect(",")?;
    let b = c.label()?;
    c.expect("]")?;
    Ok(make(a, b))
}

/// Number of label generators (non-e_i) in a word.
pub fn count_label_generators(w: &Word) -> usize {
    w.iter().filter(|g| g.is_label_generator()).count()
}

/// The full φ-evaluation of a word: accumulated scalar, image diagram, and
/// the total loop and boundary-arc counts of the fold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiResult {
    /// The accumulated coefficient monomial.
    pub scalar: Monomial,
    /// The image basis diagram.
    pub diagram: Diagram,
    /// Total number of loops removed across the fold.
    pub loops: u32,
    /// Total number of boundary arcs removed across the fold.
    pub arcs: u32,
}

/// Evaluates φ by left-to-right folding; the image of a word is always a
/// monomial multiple of a single basis diagram.
pub fn phi_full(w: &[Generator], n: u32, x: &LabelSet) -> Result<PhiResult> {
    let mut scalar = Monomial::one();
    let mut diagram = Diagram::identity(n, x.clone());
    let mut loops = 0u32;
    let mut arcs = 0u32;
    for g in w {
        let (m, d, trace) = labelalg::concat(&diagram, &g.diagram(n, x)?)?;
        scalar = scalar.mul(&m);
        loops += trace.loops;
        arcs += trace.arcs.len() as u32;
        diagram = d;
    }
    Ok(PhiResult {
        scalar,
        diagram,
        loops,
        arcs,
    })
}

/// φ as a linear combination (a single monomial term).
pub fn phi(w: &[Generator], n: u32, x: &LabelSet) -> Result<labelalg::LinearCombination> {
    let r = phi_full(w, n, x)?;
    Ok(labelalg::LinearCombination::from_term(
        crate::coeff::Polynomial::from_monomial(r.scalar),
        r.diagram,
    ))
}

/// The distinguished products of e_i generators, and the odd word family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecialWord {
    /// O = ∏_{k=1}^{(n-1)/2} e_{2k-1} (n odd).
    O,
    /// E = ∏_{k=1}^{(n-1)/2} e_{2k} (n odd).
    Ev,
    /// Θ = ∏_{k=1}^{n/2} e_{2k-1} (n even).
    Theta,
    /// Ω = ∏_{k=1}^{n/2-1} e_{2k} (n even).
    Omega,
    /// w(j) = e_j e_{j-1} … e_1 w↑(a,b) for 1 ≤ j ≤ n-1, with
    /// w(0) = w↑(a,b) and w(n) = w↓(a,b).
    W(Label, Label, u32),
}

/// Builds the exact generator sequence for a special word at the given n.
pub fn special_words(kind: &SpecialWord, n: u32, x: &LabelSet) -> Result<Word> {
    match kind {
        SpecialWord::O => {
            if n % 2 == 0 {
                return Err(Error::ParityMismatch);
            }
            Ok((1..n).step_by(2).map(Generator::E).collect())
        }
        SpecialWord::Ev => {
            if n % 2 == 0 {
                return Err(Error::ParityMismatch);
            }
            Ok((2..n).step_by(2).map(Generator::E).collect())
        }
        SpecialWord::Theta => {
            if n % 2 == 1 {
                return Err(Error::ParityMismatch);
            }
            Ok((1..n).step_by(2).map(Generator::E).collect())
        }
        SpecialWord::Omega => {
            if n % 2 == 1 {
                return Err(Error::ParityMismatch);
            }
            Ok((2..n).step_by(2).map(Generator::E).collect())
        }
        SpecialWord::W(a, b, j) => {
            let j = *j;
            if j > n {
                return Err(Error::IndexOutOfRange(format!(
                    "W(a,b,j) requires 0 <= j <= n = {n}, got {j}"
                )));
            }
            if !x.contains(a) || !x.contains(b) {
                return Err(Error::InvalidDiagram("label not in X".into()));
            }
            if j == n {
                return Ok(vec![Generator::WDown(a.clone(), b.clone())]);
            }
            let mut w: Word = (1..=j).rev().map(Generator::E).collect();
            w.push(Generator::WUp(a.clone(), b.clone()));
            Ok(w)
        }
    }
}

/// One instantiated defining or derived relation: lhs = rhsScalar · rhs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    /// Catalogue identifier, e.g. "L16" or "A7".
    pub id: String,
    /// Left-hand word.
    pub lhs: Word,
    /// Scalar on the right-hand side.
    pub rhs_scalar: Monomial,
    /// Right-hand word.
    pub rhs: Word,
}

impl Relation {
    fn plain(id: &str, lhs: Word, rhs: Word) -> Relation {
        Relation {
            id: id.to_string(),
            lhs,
            rhs_scalar: Monomial::one(),
            rhs,
        }
    }

    fn scaled(id: &str, lhs: Word, p: ParamId, rhs: Word) -> Relation {
        Relation {
            id: id.to_string(),
            lhs,
            rhs_scalar: Monomial::param(p),
            rhs,
        }
    }
}

fn e(i: u32) -> Generator {
    Generator::E(i)
}
fn fup(a: &Label, b: &Label) -> Generator {
    Generator::FUp(a.clone(), b.clone())
}
fn fdo(a: &Label, b: &Label) -> Generator {
    Generator::FDown(a.clone(), b.clone())
}
fn wup(a: &Label, b: &Label) -> Generator {
    Generator::WUp(a.clone(), b.clone())
}
fn wdo(a: &Label, b: &Label) -> Generator {
    Generator::WDown(a.clone(), b.clone())
}

fn alpha(a: &Label, b: &Label) -> ParamId {
    ParamId::AlphaUp(a.clone(), b.clone())
}
fn delta(a: &Label, b: &Label) -> ParamId {
    ParamId::DeltaDown(a.clone(), b.clone())
}
fn gamma(a: &Label, b: &Label) -> ParamId {
    ParamId::Gamma(a.clone(), b.clone())
}

/// Runs `f` over every tuple of `k` labels from X.
fn for_label_tuples(k: usize, x: &LabelSet, mut f: impl FnMut(&[Label])) {
    let labels = x.labels();
    let mut idx = vec![0usize; k];
    loop {
        let tuple: Vec<Label> = idx.iter().map(|&i| labels[i].clone()).collect();
        f(&tuple);
        let mut pos = k;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < labels.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Instantiates every applicable relation L1–L38 and Appendix A1–A22 for
/// the given n, over every admissible index and label tuple.
pub fn relation_catalogue(n: u32, x: &LabelSet) -> Vec<Relation> {
    let mut out = Vec::new();
    let odd = n % 2 == 1;
    let asc: Vec<Generator> = (1..n).map(e).collect(); // e_1 … e_{n-1}
    let desc: Vec<Generator> = (1..n).rev().map(e).collect(); // e_{n-1} … e_1
    let big_o: Word = if odd {
        special_words(&SpecialWord::O, n, x).unwrap()
    } else {
        Vec::new()
    };
    let big_e: Word = if odd {
        special_words(&SpecialWord::Ev, n, x).unwrap()
    } else {
        Vec::new()
    };
    let theta: Word = if !odd {
        special_words(&SpecialWord::Theta, n, x).unwrap()
    } else {
        Vec::new()
    };
    let omega: Word = if !odd {
        special_words(&SpecialWord::Omega, n, x).unwrap()
    } else {
        Vec::new()
    };
    let cat = |parts: &[&[Generator]]| -> Word { parts.concat() };

    // L1: e_i e_j = e_j e_i, |i-j| >= 2.
    for i in 1..n {
        for j in i + 2..n {
            out.push(Relation::plain("L1", vec![e(i), e(j)], vec![e(j), e(i)]));
        }
    }
    // L5: e_i e_j e_i = e_i, |i-j| = 1.
    for i in 1..n {
        for j in [i.wrapping_sub(1), i + 1] {
            if j >= 1 && j < n && i.abs_diff(j) == 1 {
                out.push(Relation::plain("L5", vec![e(i), e(j), e(i)], vec![e(i)]));
            }
        }
    }
    // L19: e_j^2 = β e_j.
    for j in 1..n {
        out.push(Relation::scaled(
            "L19",
            vec![e(j), e(j)],
            ParamId::Beta,
            vec![e(j)],
        ));
    }
    for_label_tuples(2, x, |t| {
        let (a, b) = (&t[0], &t[1]);
        // L2, L3: label generators commute with distant e_j.
        for j in 2..n {
            out.push(Relation::plain(
                "L2",
                vec![fup(a, b), e(j)],
                vec![e(j), fup(a, b)],
            ));
        }
        for j in 1..n.saturating_sub(1) {
            out.push(Relation::plain(
                "L3",
                vec![fdo(a, b), e(j)],
                vec![e(j), fdo(a, b)],
            ));
        }
        // L6, L7: e_j slides past w↑ / w↓.
        for j in 2..n {
            out.push(Relation::plain(
                "L6",
                vec![e(j), wup(a, b)],
                vec![wup(a, b), e(j - 1)],
            ));
        }
        for j in 1..n.saturating_sub(1) {
            out.push(Relation::plain(
                "L7",
                vec![e(j), wdo(a, b)],
                vec![wdo(a, b), e(j + 1)],
            ));
        }
        if n >= 2 {
            // L12–L15: w↑/w↓ migration along the staircase.
            out.push(Relation::plain(
                "L12",
                vec![e(1), wup(a, b)],
                cat(&[&[e(1)], &asc[1..], &[wdo(a, b)]]),
            ));
            out.push(Relation::plain(
                "L13",
                vec![wup(a, b), e(n - 1)],
                cat(&[&[wdo(a, b)], &asc]),
            ));
            out.push(Relation::plain(
                "L14",
                vec![e(n - 1), wdo(a, b)],
                cat(&[&desc, &[wup(a, b)]]),
            ));
            out.push(Relation::plain(
                "L15",
                vec![wdo(a, b), e(1)],
                cat(&[&[wup(a, b)], &desc]),
            ));
            // L21, L26: sandwiched f↑ / f↓.
            out.push(Relation::scaled(
                "L21",
                vec![e(1), fup(a, b), e(1)],
                alpha(a, b),
                vec![e(1)],
            ));
            out.push(Relation::scaled(
                "L26",
                vec![e(n - 1), fdo(a, b), e(n - 1)],
                delta(a, b),
                vec![e(n - 1)],
            ));
        }
        if !odd {
            // L34: Θ w↑ Θ = γ^a_b Θ.
            out.push(Relation::scaled(
                "L34",
                cat(&[&theta, &[wup(a, b)], &theta]),
                gamma(a, b),
                theta.clone(),
            ));
            // A14, A15: Θ absorbs the w parity.
            out.push(Relation::plain(
                "A14",
                cat(&[&theta, &[wup(a, b)]]),
                cat(&[&theta, &[wdo(a, b)]]),
            ));
            out.push(Relation::plain(
                "A15",
                cat(&[&[wup(a, b)], &theta]),
                cat(&[&[wdo(a, b)], &theta]),
            ));
            // A17, A18.
            out.push(Relation::plain(
                "A17",
                cat(&[&[e(1), wup(a, b)], &omega]),
                cat(&[&theta, &[wup(a, b)]]),
            ));
            out.push(Relation::plain(
                "A18",
                cat(&[&[e(n - 1), wdo(a, b)], &omega]),
                cat(&[&theta, &[wdo(a, b)]]),
            ));
        }
        if odd {
            // A2–A5: O and E slide past the label generators.
            out.push(Relation::plain(
                "A2",
                cat(&[&[fup(a, b)], &big_e]),
                cat(&[&big_e, &[fup(a, b)]]),
            ));
            out.push(Relation::plain(
                "A3",
                cat(&[&[fdo(a, b)], &big_o]),
                cat(&[&big_o, &[fdo(a, b)]]),
            ));
            out.push(Relation::plain(
                "A4",
                cat(&[&[wup(a, b)], &big_o]),
                cat(&[&big_e, &[wup(a, b)]]),
            ));
            out.push(Relation::plain(
                "A5",
                cat(&[&[wdo(a, b)], &big_e]),
                cat(&[&big_o, &[wdo(a, b)]]),
            ));
            if n > 1 {
                out.push(Relation::plain(
                    "A6",
                    cat(&[&[e(1), wup(a, b)], &big_e]),
                    cat(&[&[wdo(a, b)], &big_e]),
                ));
                out.push(Relation::plain(
                    "A7",
                    cat(&[&[e(n - 1), wdo(a, b)], &big_o]),
                    cat(&[&[wup(a, b)], &big_o]),
                ));
                out.push(Relation::plain(
                    "A8",
                    cat(&[&big_e, &[wdo(a, b), e(1)]]),
                    cat(&[&[wup(a, b)], &big_o]),
                ));
                out.push(Relation::plain(
                    "A9",
                    cat(&[&big_o, &[wup(a, b), e(n - 1)]]),
                    cat(&[&[wdo(a, b)], &big_e]),
                ));
            }
        }
    });
    for_label_tuples(4, x, |t| {
        let (a, b, c, d) = (&t[0], &t[1], &t[2], &t[3]);
        if n >= 2 {
            out.push(Relation::plain(
                "L4",
                vec![fup(a, b), fdo(c, d)],
                vec![fdo(c, d), fup(a, b)],
            ));
            out.push(Relation::plain(
                "L8",
                vec![fdo(a, b), wup(c, d)],
                vec![wup(c, a), e(n - 1), fdo(b, d)],
            ));
            out.push(Relation::plain(
                "L9",
                vec![fup(a, b), wdo(c, d)],
                vec![wdo(a, d), e(1), fup(b, c)],
            ));
            out.push(Relation::plain(
                "L10",
                vec![wup(a, b), fup(c, d)],
                vec![fup(a, c), e(1), wup(d, b)],
            ));
            out.push(Relation::plain(
                "L11",
                vec![wdo(a, b), fdo(c, d)],
                vec![fdo(b, c), e(n - 1), wdo(a, d)],
            ));
            out.push(Relation::plain(
                "L18",
                vec![wdo(a, b), e(1), wup(c, d)],
                vec![fup(a, c), fdo(b, d)],
            ));
            out.push(Relation::plain(
                "A1",
                vec![wup(a, b), e(n - 1), wdo(c, d)],
                vec![fup(a, c), fdo(b, d)],
            ));
        }
        // L16, L17 hold for all n (middle chain empty at n = 1).
        out.push(Relation::plain(
            "L16",
            vec![wup(a, b), wup(c, d)],
            cat(&[&[fup(a, c)], &asc, &[fdo(b, d)]]),
        ));
        out.push(Relation::plain(
            "L17",
            vec![wdo(a, b), wdo(c, d)],
            cat(&[&[fdo(b, d)], &desc, &[fup(a, c)]]),
        ));
        // L20–L29 parameter relations (all n).
        out.push(Relation::scaled(
            "L20",
            vec![fup(c, a), fup(b, d)],
            alpha(a, b),
            vec![fup(c, d)],
        ));
        out.push(Relation::scaled(
            "L22",
            vec![fup(c, a), wup(b, d)],
            alpha(a, b),
            vec![wup(c, d)],
        ));
        out.push(Relation::scaled(
            "L23",
            vec![wdo(a, d), fup(b, c)],
            alpha(a, b),
            vec![wdo(c, d)],
        ));
        out.push(Relation::scaled(
            "L24",
            vec![wdo(a, c), wup(b, d)],
            alpha(a, b),
            vec![fdo(c, d)],
        ));
        out.push(Relation::scaled(
            "L25",
            vec![fdo(c, a), fdo(b, d)],
            delta(a, b),
            vec![fdo(c, d)],
        ));
        out.push(Relation::scaled(
            "L27",
            vec![fdo(c, a), wdo(d, b)],
            delta(a, b),
            vec![wdo(d, c)],
        ));
        out.push(Relation::scaled(
            "L28",
            vec![wup(c, a), fdo(b, d)],
            delta(a, b),
            vec![wup(c, d)],
        ));
        out.push(Relation::scaled(
            "L29",
            vec![wup(c, a), wdo(d, b)],
            delta(a, b),
            vec![fup(c, d)],
        ));
        if odd {
            out.push(Relation::scaled(
                "L30",
                cat(&[&[wup(c, b)], &big_o, &[wup(a, d)], &big_o]),
                gamma(a, b),
                cat(&[&[wup(c, d)], &big_o]),
            ));
            out.push(Relation::scaled(
                "L31",
                cat(&[&[fup(c, a)], &big_e, &[wdo(d, b)], &big_e]),
                gamma(a, b),
                cat(&[&[fup(c, d)], &big_e]),
            ));
            out.push(Relation::scaled(
                "L32",
                cat(&[&[wdo(a, d)], &big_e, &[wdo(c, b)], &big_e]),
                gamma(a, b),
                cat(&[&[wdo(c, d)], &big_e]),
            ));
            out.push(Relation::scaled(
                "L33",
                cat(&[&[fdo(c, b)], &big_o, &[wup(a, d)], &big_o]),
                gamma(a, b),
                cat(&[&[fdo(c, d)], &big_o]),
            ));
            out.push(Relation::scaled(
                "A10",
                cat(&[&[fup(c, a)], &big_e, &[fdo(b, d)], &big_o]),
                gamma(a, b),
                cat(&[&[wup(c, d)], &big_o]),
            ));
            out.push(Relation::scaled(
                "A11",
                cat(&[&[fdo(d, b)], &big_o, &[fup(a, c)], &big_e]),
                gamma(a, b),
                cat(&[&[wdo(c, d)], &big_e]),
            ));
            out.push(Relation::scaled(
                "A12",
                cat(&[&[wup(c, b)], &big_o, &[fup(a, d)], &big_e]),
                gamma(a, b),
                cat(&[&[fup(c, d)], &big_e]),
            ));
            out.push(Relation::scaled(
                "A13",
                cat(&[&[wdo(a, c)], &big_e, &[fdo(b, d)], &big_o]),
                gamma(a, b),
                cat(&[&[fdo(c, d)], &big_o]),
            ));
        } else {
            out.push(Relation::plain(
                "A16",
                cat(&[&[wup(a, b)], &theta, &[wup(c, d)]]),
                cat(&[&[fup(a, c), fdo(b, d)], &omega]),
            ));
        }
        if n == 1 {
            out.push(Relation::scaled(
                "L35",
                vec![fup(c, a), fdo(b, d)],
                gamma(a, b),
                vec![wup(c, d)],
            ));
            out.push(Relation::scaled(
                "L36",
                vec![fdo(d, b), fup(a, c)],
                gamma(a, b),
                vec![wdo(c, d)],
            ));
            out.push(Relation::scaled(
                "L37",
                vec![wup(c, b), fup(a, d)],
                gamma(a, b),
                vec![fup(c, d)],
            ));
            out.push(Relation::scaled(
                "L38",
                vec![wdo(a, c), fdo(b, d)],
                gamma(a, b),
                vec![fdo(c, d)],
            ));
            out.push(Relation::scaled(
                "A19",
                vec![fup(c, a), wdo(d, b)],
                gamma(a, b),
                vec![fup(c, d)],
            ));
            out.push(Relation::scaled(
                "A20",
                vec![fdo(c, b), wup(a, d)],
                gamma(a, b),
                vec![fdo(c, d)],
            ));
            out.push(Relation::scaled(
                "A21",
                vec![wup(c, b), wup(a, d)],
                gamma(a, b),
                vec![wup(c, d)],
            ));
            out.push(Relation::scaled(
                "A22",
                vec![wdo(a, d), wdo(c, b)],
                gamma(a, b),
                vec![wdo(c, d)],
            ));
        }
    });
    out
}

/// The result of checking the full relation catalogue under φ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    /// Number of relation instances checked.
    pub total: usize,
    /// Human-readable descriptions of failing instances (must be empty).
    pub failures: Vec<String>,
}

impl RelationReport {
    /// True if every instance passed.
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks one relation instance under φ.
pub fn verify_relation(r: &Relation, n: u32, x: &LabelSet) -> Result<bool> {
    let lhs = phi_full(&r.lhs, n, x)?;
    let rhs = phi_full(&r.rhs, n, x)?;
    Ok(lhs.diagram == rhs.diagram && lhs.scalar == rhs.scalar.mul(&r.rhs_scalar))
}

/// Verifies every catalogued relation at (n, X) under φ.
pub fn verify_relations(n: u32, x: &LabelSet) -> Result<RelationReport> {
    let catalogue = relation_catalogue(n, x);
    let mut failures = Vec::new();
    for r in &catalogue {
        if !verify_relation(r, n, x)? {
            failures.push(format!(
                "{}: {} != {} * {}",
                r.id,
                word_to_string(&r.lhs),
                r.rhs_scalar,
                word_to_string(&r.rhs)
            ));
        }
    }
    Ok(RelationReport {
        total: catalogue.len(),
        failures,
    })
}
