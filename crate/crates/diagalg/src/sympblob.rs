//! The symplectic blob algebra S_n: Temperley–Lieb matchings whose strings
//! carry ordered sequences of top and bottom blobs, with multiplication by
//! concatenation followed by the diagrammatic simplification rules.
//!
//! A basis diagram must be *deformable*: drawable in the rectangle so that
//! every top blob touches the top edge, every bottom blob the bottom edge,
//! and no strings intersect. Deformability is decided by a bounded search
//! over the orderings of the boundary touch points, with all resulting
//! chords required to be pairwise non-crossing in the cyclic layout
//! L1..Ln, bottom touches (left to right), Rn..R1, top touches (right to
//! left).

use std::collections::HashMap;

use itertools::Itertools;

use crate::coeff::{Monomial, ParamId};
use crate::diagram::{Cursor, Endpoint};
use crate::presentation::Generator;
use crate::{Error, Result};

/// A boundary blob decorating a string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Blob {
    Top,
    Bottom,
}

impl std::fmt::Display for Blob {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Blob::Top => write!(f, "t"),
            Blob::Bottom => write!(f, "b"),
        }
    }
}

/// A decorated string: endpoints in canonical order with the blob sequence
/// read from the lower-ordered endpoint.
pub type BlobString = (Endpoint, Endpoint, Vec<Blob>);

/// A basis diagram of the symplectic blob algebra S_n.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlobDiagram {
    n: u32,
    strings: Vec<BlobString>,
}

/// Cyclic position of a node in the blob layout (no boundary nodes).
fn node_pos(e: Endpoint, n: u32) -> u32 {
    match e {
        Endpoint::L(i) => i,
        Endpoint::R(i) => 2 * n + 1 - i,
        _ => unreachable!("blob diagrams have no boundary nodes"),
    }
}

fn chords_cross(a: (u32, u32), b: (u32, u32)) -> bool {
    let (a1, a2) = (a.0.min(a.1), a.0.max(a.1));
    let (b1, b2) = (b.0.min(b.1), b.0.max(b.1));
    (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2)
}

/// Pairwise non-crossing check for the bare matching.
fn planar(n: u32, strings: &[BlobString]) -> bool {
    let chords: Vec<(u32, u32)> = strings
        .iter()
        .map(|(u, v, _)| (node_pos(*u, n), node_pos(*v, n)))
        .collect();
    for i in 0..chords.len() {
        for j in i + 1..chords.len() {
            if chords_cross(chords[i], chords[j]) {
                return false;
            }
        }
    }
    true
}

/// Decides whether every blob can touch its boundary in some planar
/// drawing, by trying all orderings of the touch points along each edge.
fn deformable(n: u32, strings: &[BlobString]) -> bool {
    // Collect blob instances per string, in traversal order from the lower
    // endpoint.
    let tops: usize = strings
        .iter()
        .map(|(_, _, d)| d.iter().filter(|b| **b == Blob::Top).count())
        .sum();
    let bottoms: usize = strings
        .iter()
        .map(|(_, _, d)| d.iter().filter(|b| **b == Blob::Bottom).count())
        .sum();
    if tops + bottoms == 0 {
        return planar(n, strings);
    }
    let t = tops as u32;
    let b = bottoms as u32;
    // Cycle positions: L_i -> i; bottom slot k -> n+k; R_i -> n+b+(n+1-i);
    // top slot k -> 2n+b+k (slot 1 is rightmost).
    let lpos = |e: Endpoint| match e {
        Endpoint::L(i) => i,
        Endpoint::R(i) => n + b + (n + 1 - i),
        _ => unreachable!(),
    };
    for tperm in (1..=t).permutations(tops) {
        'bperm: for bperm in (1..=b).permutations(bottoms) {
            let mut ti = 0usize;
            let mut bi = 0usize;
            let mut chords: Vec<(u32, u32)> = Vec::new();
            for (u, v, dec) in strings {
                let mut prev = lpos(*u);
                for blob in dec {
                    let slot = match blob {
                        Blob::Top => {
                            ti += 1;
                            2 * n + b + tperm[ti - 1]
                        }
                        Blob::Bottom => {
                            bi += 1;
                            n + bperm[bi - 1]
                        }
                    };
                    chords.push((prev, slot));
                    prev = slot;
                }
                chords.push((prev, lpos(*v)));
            }
            for i in 0..chords.len() {
                for j in i + 1..chords.len() {
                    if chords_cross(chords[i], chords[j]) {
                        continue 'bperm;
                    }
                }
            }
            return true;
        }
    }
    false
}

fn canonicalize(strings: &mut Vec<BlobString>) {
    for (u, v, dec) in strings.iter_mut() {
        if u > v {
            std::mem::swap(u, v);
            dec.reverse();
        }
    }
    strings.sort();
}

impl BlobDiagram {
    /// Builds and validates a basis diagram.
    pub fn new(n: u32, mut strings: Vec<BlobString>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDiagram("n must be positive".into()));
        }
        canonicalize(&mut strings);
        let mut seen = vec![false; 2 * n as usize];
        for (u, v, _) in &strings {
            for e in [u, v] {
                let ok = matches!(e, Endpoint::L(i) | Endpoint::R(i) if *i >= 1 && *i <= n);
                if !ok {
                    return Err(Error::InvalidDiagram(format!(
                        "endpoint {e} out of range for a blob diagram"
                    )));
                }
                let idx = (node_pos(*e, n) - 1) as usize;
                if seen[idx] {
                    return Err(Error::InvalidDiagram(format!(
                        "endpoint {e} used twice"
                    )));
                }
                seen[idx] = true;
            }
        }
        if strings.len() != n as usize || seen.iter().any(|s| !s) {
            return Err(Error::InvalidDiagram(
                "strings do not form a perfect matching".into(),
            ));
        }
        if !planar(n, &strings) {
            return Err(Error::InvalidDiagram("strings cross".into()));
        }
        let d = BlobDiagram { n, strings };
        if d.find_basis_violation().is_some() {
            return Err(Error::InvalidDiagram(
                "decorations are not in basis form".into(),
            ));
        }
        if !deformable(n, &d.strings) {
            return Err(Error::InvalidDecoration(
                "no planar drawing lets every blob touch its boundary".into(),
            ));
        }
        Ok(d)
    }

    /// The identity diagram: undecorated throughlines.
    pub fn identity(n: u32) -> Self {
        BlobDiagram {
            n,
            strings: (1..=n)
                .map(|i| (Endpoint::L(i), Endpoint::R(i), Vec::new()))
                .collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn strings(&self) -> &[BlobString] {
        &self.strings
    }

    /// Total number of blobs across all strings.
    pub fn blob_count(&self) -> usize {
        self.strings.iter().map(|(_, _, d)| d.len()).sum()
    }

    /// Returns a description of any decoration pattern that a Table rule
    /// would still simplify, if one exists.
    fn find_basis_violation(&self) -> Option<String> {
        for (u, v, dec) in &self.strings {
            if dec.windows(2).any(|w| w[0] == w[1]) {
                return Some(format!("adjacent equal blobs on ({u},{v})"));
            }
            if self.n % 2 == 1 && dec.len() >= 3 {
                return Some(format!("alternating triple on ({u},{v})"));
            }
        }
        if self.n % 2 == 0
            && find_two_string_redex(self.n, &self.strings).is_some()
        {
            return Some("removable doubly-decorated string pair".into());
        }
        None
    }

    /// Parses the grammar `S(n=..;pairs=(..);dec=i:[t,b],..)`.
    pub fn parse(input: &str) -> Result<Self> {
        let mut c = Cursor::new(input);
        c.expect("S(n=")?;
        let n = c.integer()?;
        c.expect(";pairs=")?;
        let mut pairs: Vec<(Endpoint, Endpoint)> = Vec::new();
        loop {
            c.expect("(")?;
            let u = c.endpoint()?;
            c.expect(",")?;
            let v = c.endpoint()?;
            c.expect(")")?;
            pairs.push((u, v));
            if !c.eat(",") {
                break;
            }
        }
        let mut decs: HashMap<usize, Vec<Blob>> = HashMap::new();
        if c.eat(";dec=") {
            loop {
                let idx = c.integer()? as usize;
                c.expect(":[")?;
                let mut seq = Vec::new();
                loop {
                    if c.eat("t") {
                        seq.push(Blob::Top);
                    } else if c.eat("b") {
                        seq.push(Blob::Bottom);
                    } else {
                        return Err(c.err("expected blob 't' or 'b'"));
                    }
                    if !c.eat(",") {
                        break;
                    }
                }
                c.expect("]")?;
                if idx == 0 || idx > pairs.len() {
                    return Err(c.err(format!("string index {idx} out of range")));
                }
                if decs.insert(idx, seq).is_some() {
                    return Err(c.err(format!("duplicate decoration for string {idx}")));
                }
                if !c.eat(",") {
                    break;
                }
            }
        }
        c.expect(")")?;
        c.end()?;
        let strings = pairs
            .into_iter()
            .enumerate()
            .map(|(i, (u, v))| {
                (u, v, decs.remove(&(i + 1)).unwrap_or_default())
            })
            .collect();
        BlobDiagram::new(n, strings)
    }
}

impl std::fmt::Display for BlobDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "S(n={};pairs=", self.n)?;
        for (i, (u, v, _)) in self.strings.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({u},{v})")?;
        }
        let decorated: Vec<(usize, &Vec<Blob>)> = self
            .strings
            .iter()
            .enumerate()
            .filter(|(_, (_, _, d))| !d.is_empty())
            .map(|(i, (_, _, d))| (i + 1, d))
            .collect();
        if !decorated.is_empty() {
            write!(f, ";dec=")?;
            for (k, (i, d)) in decorated.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{i}:[{}]", d.iter().map(|b| b.to_string()).join(","))?;
            }
        }
        write!(f, ")")
    }
}

/// Identifiers for the S_n generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SbGeneratorId {
    E(u32),
    F0,
    FN,
}

/// The exact generator diagrams of S_n.
pub fn sb_generator(g: &SbGeneratorId, n: u32) -> Result<BlobDiagram> {
    let mut d = BlobDiagram::identity(n);
    match g {
        SbGeneratorId::E(i) => {
            if *i < 1 || *i >= n {
                return Err(Error::IndexOutOfRange(format!(
                    "e_{i} undefined for n = {n}"
                )));
            }
            let mut strings: Vec<BlobString> = (1..=n)
                .filter(|m| *m != *i && *m != *i + 1)
                .map(|m| (Endpoint::L(m), Endpoint::R(m), Vec::new()))
                .collect();
            strings.push((Endpoint::L(*i), Endpoint::L(*i + 1), Vec::new()));
            strings.push((Endpoint::R(*i), Endpoint::R(*i + 1), Vec::new()));
            d = BlobDiagram::new(n, strings)?;
        }
        SbGeneratorId::F0 => d.strings[0].2 = vec![Blob::Top],
        SbGeneratorId::FN => d.strings[n as usize - 1].2 = vec![Blob::Bottom],
    }
    Ok(d)
}

/// The blob sequence of a string read from the given endpoint.
fn oriented(s: &BlobString, from_lower: bool) -> Vec<Blob> {
    if from_lower {
        s.2.clone()
    } else {
        s.2.iter().rev().copied().collect()
    }
}

/// Locates the n-even two-strings redex: two strings, each carrying a
/// consecutive top/bottom blob pair, whose merged form is again a valid
/// planar, deformable configuration. Returns the new string list.
fn find_two_string_redex(n: u32, strings: &[BlobString]) -> Option<Vec<BlobString>> {
    // All (string index, from_lower, split position) with Top immediately
    // followed by Bottom in that traversal direction.
    let splits = |s: &BlobString| -> Vec<(bool, usize)> {
        let mut out = Vec::new();
        for from_lower in [true, false] {
            let seq = oriented(s, from_lower);
            for p in 0..seq.len().saturating_sub(1) {
                if seq[p] == Blob::Top && seq[p + 1] == Blob::Bottom {
                    out.push((from_lower, p));
                }
            }
        }
        out
    };
    for i in 0..strings.len() {
        for j in i + 1..strings.len() {
            for &(fl1, p1) in &splits(&strings[i]) {
                for &(fl2, p2) in &splits(&strings[j]) {
                    let s1 = &strings[i];
                    let s2 = &strings[j];
                    let seq1 = oriented(s1, fl1);
                    let seq2 = oriented(s2, fl2);
                    let (w1, w1b) = if fl1 { (s1.0, s1.1) } else { (s1.1, s1.0) };
                    let (w2, w2b) = if fl2 { (s2.0, s2.1) } else { (s2.1, s2.0) };
                    // Top halves join through a single top blob; bottom
                    // halves through a single bottom blob.
                    let mut tdec: Vec<Blob> = seq1[..p1].to_vec();
                    tdec.push(Blob::Top);
                    tdec.extend(seq2[..p2].iter().rev());
                    let mut bdec: Vec<Blob> =
                        seq1[p1 + 2..].iter().rev().copied().collect();
                    bdec.push(Blob::Bottom);
                    bdec.extend(seq2[p2 + 2..].iter().copied());
                    let mut cand: Vec<BlobString> = strings
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| *k != i && *k != j)
                        .map(|(_, s)| s.clone())
                        .collect();
                    cand.push((w1, w2, tdec));
                    cand.push((w1b, w2b, bdec));
                    canonicalize(&mut cand);
                    if planar(n, &cand) && deformable(n, &cand) {
                        return Some(cand);
                    }
                }
            }
        }
    }
    None
}

/// Multiplies two blob diagrams: concatenation, then the Table rules to a
/// fixpoint (loop removals, then adjacent-equal pairs, then the κ rules).
pub fn sb_multiply(
    d1: &BlobDiagram,
    d2: &BlobDiagram,
) -> Result<(Monomial, BlobDiagram)> {
    if d1.n != d2.n {
        return Err(Error::SizeMismatch(d1.n, d2.n));
    }
    let n = d1.n;

    // Per-side segment maps: endpoint -> (other endpoint, blobs from here).
    let side_map = |d: &BlobDiagram| -> HashMap<Endpoint, (Endpoint, Vec<Blob>)> {
        let mut m = HashMap::new();
        for s in &d.strings {
            m.insert(s.0, (s.1, oriented(s, true)));
            m.insert(s.1, (s.0, oriented(s, false)));
        }
        m
    };
    let maps = [side_map(d1), side_map(d2)];
    // Internal interface hop: (side 0, R_i) <-> (side 1, L_i).
    let hop = |(side, e): (usize, Endpoint)| -> Option<(usize, Endpoint)> {
        match (side, e) {
            (0, Endpoint::R(i)) => Some((1, Endpoint::L(i))),
            (1, Endpoint::L(i)) => Some((0, Endpoint::R(i))),
            _ => None,
        }
    };

    let mut visited: HashMap<(usize, Endpoint), bool> = HashMap::new();
    let mut strings: Vec<BlobString> = Vec::new();
    let mut loops: Vec<Vec<Blob>> = Vec::new();

    // Trace open strings from each external node.
    let mut externals: Vec<(usize, Endpoint)> = (1..=n)
        .map(|i| (0usize, Endpoint::L(i)))
        .collect();
    externals.extend((1..=n).map(|i| (1usize, Endpoint::R(i))));
    for start in externals {
        if visited.contains_key(&start) {
            continue;
        }
        let mut dec: Vec<Blob> = Vec::new();
        let mut cur = start;
        let end = loop {
            visited.insert(cur, true);
            let (partner, seg) = maps[cur.0][&cur.1].clone();
            dec.extend(seg);
            let pnode = (cur.0, partner);
            visited.insert(pnode, true);
            match hop(pnode) {
                Some(next) if next != start => {
                    cur = next;
                }
                Some(_) => unreachable!("open string cannot close on an external"),
                None => break pnode,
            }
        };
        strings.push((end_endpoint(start), end_endpoint(end), dec));
    }
    // Remaining internal nodes form loops.
    for i in 1..=n {
        let start = (0usize, Endpoint::R(i));
        if visited.contains_key(&start) {
            continue;
        }
        let mut dec: Vec<Blob> = Vec::new();
        let mut cur = hop(start).expect("interface node");
        loop {
            visited.insert(cur, true);
            let (partner, seg) = maps[cur.0][&cur.1].clone();
            dec.extend(seg);
            let pnode = (cur.0, partner);
            visited.insert(pnode, true);
            let next = hop(pnode).expect("loop stays internal");
            if next == hop(start).unwrap() {
                break;
            }
            cur = next;
        }
        loops.push(dec);
    }
    canonicalize(&mut strings);

    // Table rules to a fixpoint.
    let mut scalar = Monomial::one();
    'rules: loop {
        // Loop removals.
        if let Some(i) = loops.iter().position(|l| l.len() <= 1) {
            match loops[i].first() {
                None => scalar.mul_param(ParamId::Beta),
                Some(Blob::Top) => scalar.mul_param(ParamId::SbAlpha(1)),
                Some(Blob::Bottom) => scalar.mul_param(ParamId::SbDelta(1)),
            }
            loops.remove(i);
            continue 'rules;
        }
        // Adjacent equal blobs on strings.
        for s in strings.iter_mut() {
            if let Some(p) = s.2.windows(2).position(|w| w[0] == w[1]) {
                scalar.mul_param(match s.2[p] {
                    Blob::Top => ParamId::SbAlpha(2),
                    Blob::Bottom => ParamId::SbDelta(2),
                });
                s.2.remove(p);
                continue 'rules;
            }
        }
        // Adjacent equal blobs on loops, cyclically.
        for l in loops.iter_mut() {
            let len = l.len();
            if let Some(p) = (0..len).find(|p| l[*p] == l[(*p + 1) % len]) {
                scalar.mul_param(match l[p] {
                    Blob::Top => ParamId::SbAlpha(2),
                    Blob::Bottom => ParamId::SbDelta(2),
                });
                l.remove(p);
                continue 'rules;
            }
        }
        if n % 2 == 1 {
            // Alternating triples collapse to their outer blob.
            for s in strings.iter_mut() {
                if s.2.len() >= 3 {
                    scalar.mul_param(ParamId::Kappa);
                    let keep = s.2[0];
                    s.2.splice(0..3, [keep]);
                    continue 'rules;
                }
            }
            for l in loops.iter_mut() {
                if l.len() >= 3 {
                    scalar.mul_param(ParamId::Kappa);
                    let keep = l[0];
                    l.splice(0..3, [keep]);
                    continue 'rules;
                }
            }
        } else {
            // Alternating loops of length 2m vanish with κ^m.
            if let Some(i) = loops.iter().position(|l| !l.is_empty()) {
                debug_assert!(loops[i].len() % 2 == 0, "loop survived adjacent rules");
                for _ in 0..loops[i].len() / 2 {
                    scalar.mul_param(ParamId::Kappa);
                }
                loops.remove(i);
                continue 'rules;
            }
            // Two doubly-decorated strings merge with κ.
            if let Some(merged) = find_two_string_redex(n, &strings) {
                scalar.mul_param(ParamId::Kappa);
                strings = merged;
                continue 'rules;
            }
        }
        break;
    }
    if !loops.is_empty() {
        return Err(Error::InvalidDecoration(format!(
            "irreducible decorated loop {:?} at n = {n}",
            loops[0]
        )));
    }
    Ok((scalar, BlobDiagram::new(n, strings)?))
}

fn end_endpoint((side, e): (usize, Endpoint)) -> Endpoint {
    match (side, e) {
        (0, Endpoint::L(i)) => Endpoint::L(i),
        (1, Endpoint::R(i)) => Endpoint::R(i),
        _ => unreachable!("externals are side-0 lefts and side-1 rights"),
    }
}

/// Evaluates a word of generator identifiers by folding sb_multiply.
pub fn sb_evaluate(word: &[SbGeneratorId], n: u32) -> Result<(Monomial, BlobDiagram)> {
    let mut acc = (Monomial::one(), BlobDiagram::identity(n));
    for g in word {
        let gd = sb_generator(g, n)?;
        let (m, d) = sb_multiply(&acc.1, &gd)?;
        acc = (acc.0.mul(&m), d);
    }
    Ok(acc)
}

/// The word I from the S_n presentation.
pub fn sb_i_word(n: u32) -> Vec<SbGeneratorId> {
    let mut w = Vec::new();
    if n % 2 == 1 {
        w.push(SbGeneratorId::FN);
    }
    w.extend((1..n).step_by(2).map(SbGeneratorId::E));
    w
}

/// The word J from the S_n presentation.
pub fn sb_j_word(n: u32) -> Vec<SbGeneratorId> {
    let mut w = vec![SbGeneratorId::F0];
    if n % 2 == 0 {
        w.push(SbGeneratorId::FN);
    }
    w.extend((2..n - 1 + n % 2).step_by(2).map(SbGeneratorId::E));
    w
}

/// Outcome of checking the S_n defining relations.
#[derive(Clone, Debug)]
pub struct SbRelationReport {
    pub total: usize,
    pub failures: Vec<String>,
}

impl SbRelationReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verifies S1–S12 diagrammatically at size n.
pub fn sb_verify_relations(n: u32) -> Result<SbRelationReport> {
    use SbGeneratorId::{E, F0, FN};
    let mut rels: Vec<(String, Vec<SbGeneratorId>, Monomial, Vec<SbGeneratorId>)> =
        Vec::new();
    let one = Monomial::one;
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) >= 2 {
                rels.push((format!("S1[{i},{j}]"), vec![E(i), E(j)], one(), vec![E(j), E(i)]));
            }
            if i.abs_diff(j) == 1 {
                rels.push((format!("S2[{i},{j}]"), vec![E(i), E(j), E(i)], one(), vec![E(i)]));
            }
        }
        rels.push((
            format!("S3[{i}]"),
            vec![E(i), E(i)],
            Monomial::param(ParamId::Beta),
            vec![E(i)],
        ));
    }
    for j in 2..n {
        rels.push((format!("S4[{j}]"), vec![F0, E(j)], one(), vec![E(j), F0]));
    }
    if n >= 2 {
        rels.push((
            "S5".into(),
            vec![E(1), F0, E(1)],
            Monomial::param(ParamId::SbAlpha(1)),
            vec![E(1)],
        ));
    }
    rels.push((
        "S6".into(),
        vec![F0, F0],
        Monomial::param(ParamId::SbAlpha(2)),
        vec![F0],
    ));
    for j in 1..n.saturating_sub(1) {
        rels.push((format!("S7[{j}]"), vec![FN, E(j)], one(), vec![E(j), FN]));
    }
    if n >= 2 {
        rels.push((
            "S8".into(),
            vec![E(n - 1), FN, E(n - 1)],
            Monomial::param(ParamId::SbDelta(1)),
            vec![E(n - 1)],
        ));
    }
    rels.push((
        "S9".into(),
        vec![FN, FN],
        Monomial::param(ParamId::SbDelta(2)),
        vec![FN],
    ));
    if n >= 2 {
        rels.push(("S10".into(), vec![F0, FN], one(), vec![FN, F0]));
    }
    let (i_word, j_word) = (sb_i_word(n), sb_j_word(n));
    let mut iji = i_word.clone();
    iji.extend(&j_word);
    iji.extend(&i_word);
    rels.push(("S11".into(), iji, Monomial::param(ParamId::Kappa), i_word.clone()));
    let mut jij = j_word.clone();
    jij.extend(&i_word);
    jij.extend(&j_word);
    rels.push(("S12".into(), jij, Monomial::param(ParamId::Kappa), j_word));

    let mut report = SbRelationReport { total: rels.len(), failures: Vec::new() };
    for (id, lhs, rhs_scalar, rhs) in rels {
        let (ml, dl) = sb_evaluate(&lhs, n)?;
        let (mr, dr) = sb_evaluate(&rhs, n)?;
        if dl != dr || ml != rhs_scalar.mul(&mr) {
            report.failures.push(id);
        }
    }
    Ok(report)
}

/// Result of checking an even-reduced word's σ-image in S_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaReport {
    /// Coefficient of the σ-image product (must be 1).
    pub coefficient: Monomial,
    /// Blob count of the σ-image diagram.
    pub blob_count: usize,
    /// Boundary-link count of the φ-image diagram.
    pub boundary_links: u32,
}

impl SigmaReport {
    pub fn passed(&self) -> bool {
        self.coefficient.is_one()
            && 2 * self.blob_count == self.boundary_links as usize
    }
}

/// Maps an even-reduced word through σ (e_i ↦ e_i, f↑ ↦ f_0, f↓ ↦ f_n) and
/// checks that its S_n product is a reduced monomial whose blob count
/// matches the φ-image's boundary links.
pub fn sigma_check(
    t: &[Generator],
    n: u32,
    x: &crate::diagram::LabelSet,
) -> Result<SigmaReport> {
    let r = crate::presentation::phi_full(t, n, x)?;
    if t.iter().any(Generator::is_odd) || !r.scalar.is_one() {
        return Err(Error::NotEvenReduced);
    }
    let image: Vec<SbGeneratorId> = t
        .iter()
        .map(|g| match g {
            Generator::E(i) => SbGeneratorId::E(*i),
            Generator::FUp(_, _) => SbGeneratorId::F0,
            Generator::FDown(_, _) => SbGeneratorId::FN,
            _ => unreachable!("word is even"),
        })
        .collect();
    let (m, d) = sb_evaluate(&image, n)?;
    Ok(SigmaReport {
        coefficient: m,
        blob_count: d.blob_count(),
        boundary_links: r.diagram.boundary_links(),
    })
}
