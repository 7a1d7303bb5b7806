//! Core representation of L_n(X) basis diagrams.
//!
//! A basis diagram is a non-crossing perfect matching on the `2n + t + b`
//! endpoints of a rectangle: `n` nodes on each of the left and right sides,
//! `t` labelled points on the top boundary and `b` on the bottom. No string
//! may join two boundary points (boundary arcs exist only transiently during
//! concatenation). Non-crossing is decided combinatorially in the cyclic
//! boundary order `L1..Ln, B1..Bb, Rn..R1, Tt..T1`.

use std::fmt;

use itertools::Itertools;

use crate::coeff::Label;
use crate::{Error, Result};

/// The ordered finite label set X.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelSet {
    labels: Vec<Label>,
}

impl LabelSet {
    /// Builds a label set; must be non-empty with no duplicates, and every
    /// label must match `[A-Za-z0-9_]+`.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<Label>,
    {
        let labels: Vec<Label> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::InvalidDiagram("label set is empty".into()));
        }
        for l in &labels {
            check_label(l)?;
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::InvalidDiagram(format!(
                    "duplicate label '{l}' in label set"
                )));
            }
        }
        Ok(LabelSet { labels })
    }

    /// True if `l` belongs to X.
    pub fn contains(&self, l: &str) -> bool {
        self.labels.iter().any(|x| x == l)
    }

    /// The labels in their declared order.
    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// |X|.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false (the set is non-empty by construction).
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

fn check_label(l: &str) -> Result<()> {
    if l.is_empty() || !l.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(Error::InvalidDiagram(format!(
            "label '{l}' is not of the form [A-Za-z0-9_]+"
        )));
    }
    Ok(())
}

/// A string endpoint: a node on the left or right side, or a labelled point
/// on the top or bottom boundary. All indices are 1-based; top and bottom
/// points are numbered left to right.
///
/// The total order is `L1 < … < Ln < B1 < … < Bb < Rn < … < R1 < Tt < … < T1`,
/// i.e. the cyclic boundary order starting at the top-left corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Endpoint {
    /// Left node `L_i`.
    L(u32),
    /// Right node `R_i`.
    R(u32),
    /// Top boundary point `T_k`.
    T(u32),
    /// Bottom boundary point `B_k`.
    B(u32),
}

impl Endpoint {
    fn sort_key(self) -> (u8, i64) {
        match self {
            Endpoint::L(i) => (0, i as i64),
            Endpoint::B(k) => (1, k as i64),
            Endpoint::R(i) => (2, -(i as i64)),
            Endpoint::T(k) => (3, -(k as i64)),
        }
    }

    /// Position in the cyclic boundary order `L1..Ln, B1..Bb, Rn..R1, Tt..T1`
    /// for a diagram with the given side size and boundary counts.
    pub fn cyclic_position(self, n: u32, t: u32, b: u32) -> u32 {
        match self {
            Endpoint::L(i) => i - 1,
            Endpoint::B(k) => n + k - 1,
            Endpoint::R(i) => n + b + (n - i),
            Endpoint::T(k) => 2 * n + b + (t - k),
        }
    }

    /// True for top or bottom boundary points.
    pub fn is_boundary(self) -> bool {
        matches!(self, Endpoint::T(_) | Endpoint::B(_))
    }
}

impl PartialOrd for Endpoint {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Endpoint {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::L(i) => write!(f, "L{i}"),
            Endpoint::R(i) => write!(f, "R{i}"),
            Endpoint::T(k) => write!(f, "T{k}"),
            Endpoint::B(k) => write!(f, "B{k}"),
        }
    }
}

/// Side of the rectangle, for structural queries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// The left side (nodes `L_i`).
    Left,
    /// The right side (nodes `R_i`).
    Right,
}

/// Parity of a diagram: even iff the number of top boundary links is even
/// (equivalently, iff the number of bottom boundary links is even).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    /// Even diagram.
    Even,
    /// Odd diagram.
    Odd,
}

/// An L_n(X) basis diagram in canonical form: pairs are stored as
/// `(min, max)` under the endpoint order and sorted lexicographically, so
/// equality and hashing are structural.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    n: u32,
    x: LabelSet,
    top_labels: Vec<Label>,
    bottom_labels: Vec<Label>,
    pairs: Vec<(Endpoint, Endpoint)>,
}

impl Diagram {
    /// Builds and validates a diagram. Pairs are canonicalized.
    pub fn new(
        n: u32,
        x: LabelSet,
        top_labels: Vec<Label>,
        bottom_labels: Vec<Label>,
        pairs: Vec<(Endpoint, Endpoint)>,
    ) -> Result<Self> {
        let mut pairs: Vec<(Endpoint, Endpoint)> = pairs
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        pairs.sort();
        let d = Diagram {
            n,
            x,
            top_labels,
            bottom_labels,
            pairs,
        };
        d.validate()?;
        Ok(d)
    }

    /// The identity diagram: n throughlines, no boundary points.
    pub fn identity(n: u32, x: LabelSet) -> Diagram {
        let pairs = (1..=n).map(|i| (Endpoint::L(i), Endpoint::R(i))).collect();
        Diagram::new(n, x, Vec::new(), Vec::new(), pairs)
            .expect("identity diagram is always valid")
    }

    /// Checks all structural invariants, reporting the first violation.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        if n == 0 {
            return Err(Error::InvalidDiagram("n must be at least 1".into()));
        }
        let t = self.top_labels.len() as u32;
        let b = self.bottom_labels.len() as u32;
        for l in self.top_labels.iter().chain(&self.bottom_labels) {
            check_label(l)?;
            if !self.x.contains(l) {
                return Err(Error::InvalidDiagram(format!(
                    "boundary label '{l}' is not in X"
                )));
            }
        }
        // Perfect matching: every endpoint in range, each seen exactly once.
        let total = (2 * n + t + b) as usize;
        let mut seen = vec![false; total];
        for &(a, e) in &self.pairs {
            for p in [a, e] {
                let ok = match p {
                    Endpoint::L(i) | Endpoint::R(i) => i >= 1 && i <= n,
                    Endpoint::T(k) => k >= 1 && k <= t,
                    Endpoint::B(k) => k >= 1 && k <= b,
                };
                if !ok {
                    return Err(Error::InvalidDiagram(format!(
                        "endpoint {p} out of range for n={n}, t={t}, b={b}"
                    )));
                }
                let pos = p.cyclic_position(n, t, b) as usize;
                if seen[pos] {
                    return Err(Error::InvalidDiagram(format!(
                        "endpoint {p} appears in more than one pair"
                    )));
                }
                seen[pos] = true;
            }
            if a.is_boundary() && e.is_boundary() {
                return Err(Error::InvalidDiagram(format!(
                    "boundary arc ({a},{e}) is not allowed in a basis diagram"
                )));
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::InvalidDiagram(
                "pairs do not cover every endpoint".into(),
            ));
        }
        // Non-crossing in the cyclic boundary order.
        let chords: Vec<(u32, u32)> = self
            .pairs
            .iter()
            .map(|&(a, e)| {
                let (p, q) = (a.cyclic_position(n, t, b), e.cyclic_position(n, t, b));
                if p < q {
                    (p, q)
                } else {
                    (q, p)
                }
            })
            .collect();
        for (i, &(a, b1)) in chords.iter().enumerate() {
            for &(c, d) in &chords[i + 1..] {
                if (a < c && c < b1 && b1 < d) || (c < a && a < d && d < b1) {
                    return Err(Error::InvalidDiagram(format!(
                        "crossing strings {}–{} and {}–{}",
                        self.pairs[i].0, self.pairs[i].1,
                        self.pairs[chords.iter().position(|&x| x == (c, d)).unwrap()].0,
                        self.pairs[chords.iter().position(|&x| x == (c, d)).unwrap()].1,
                    )));
                }
            }
        }
        Ok(())
    }

    /// Node count per side.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The label set X.
    pub fn label_set(&self) -> &LabelSet {
        &self.x
    }

    /// Labels of the top boundary points, left to right.
    pub fn top_labels(&self) -> &[Label] {
        &self.top_labels
    }

    /// Labels of the bottom boundary points, left to right.
    pub fn bottom_labels(&self) -> &[Label] {
        &self.bottom_labels
    }

    /// Number of top boundary links.
    pub fn t(&self) -> u32 {
        self.top_labels.len() as u32
    }

    /// Number of bottom boundary links.
    pub fn b(&self) -> u32 {
        self.bottom_labels.len() as u32
    }

    /// Total number of boundary links.
    pub fn boundary_links(&self) -> u32 {
        self.t() + self.b()
    }

    /// The canonicalized pair list.
    pub fn pairs(&self) -> &[(Endpoint, Endpoint)] {
        &self.pairs
    }

    /// The partner of `e`, if `e` is an endpoint of this diagram.
    pub fn partner(&self, e: Endpoint) -> Option<Endpoint> {
        for &(a, b) in &self.pairs {
            if a == e {
                return Some(b);
            }
            if b == e {
                return Some(a);
            }
        }
        None
    }

    /// True if the unordered pair {a, b} is a string of this diagram.
    pub fn contains_pair(&self, a: Endpoint, b: Endpoint) -> bool {
        self.partner(a) == Some(b)
    }

    /// Parity: even iff the number of top boundary links is even.
    pub fn parity(&self) -> Parity {
        if self.t() % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// True if nodes k and k+1 on the given side are joined by a link.
    pub fn has_simple_link(&self, side: Side, k: u32) -> bool {
        match side {
            Side::Left => self.contains_pair(Endpoint::L(k), Endpoint::L(k + 1)),
            Side::Right => self.contains_pair(Endpoint::R(k), Endpoint::R(k + 1)),
        }
    }

    /// True if node i on the given side carries a top boundary link.
    pub fn has_top_boundary_link_at(&self, side: Side, i: u32) -> bool {
        let node = match side {
            Side::Left => Endpoint::L(i),
            Side::Right => Endpoint::R(i),
        };
        matches!(self.partner(node), Some(Endpoint::T(_)))
    }

    /// True if node i on the given side carries a bottom boundary link.
    pub fn has_bottom_boundary_link_at(&self, side: Side, i: u32) -> bool {
        let node = match side {
            Side::Left => Endpoint::L(i),
            Side::Right => Endpoint::R(i),
        };
        matches!(self.partner(node), Some(Endpoint::B(_)))
    }

    /// The smallest k such that (L_k, L_{k+1}) is a link, if any.
    pub fn topmost_left_simple_link(&self) -> Option<u32> {
        (1..self.n).find(|&k| self.has_simple_link(Side::Left, k))
    }

    /// The node side, node index and label of the boundary link attached to
    /// the leftmost top point T_1, if t > 0.
    pub fn leftmost_top_boundary_link(&self) -> Option<(Side, u32, Label)> {
        self.boundary_link_info(Endpoint::T(1), &self.top_labels)
    }

    /// The node side, node index and label of the boundary link attached to
    /// the leftmost bottom point B_1, if b > 0.
    pub fn leftmost_bottom_boundary_link(&self) -> Option<(Side, u32, Label)> {
        self.boundary_link_info(Endpoint::B(1), &self.bottom_labels)
    }

    fn boundary_link_info(
        &self,
        point: Endpoint,
        labels: &[Label],
    ) -> Option<(Side, u32, Label)> {
        let label = labels.first()?.clone();
        match self.partner(point) {
            Some(Endpoint::L(i)) => Some((Side::Left, i, label)),
            Some(Endpoint::R(i)) => Some((Side::Right, i, label)),
            _ => None,
        }
    }

    /// Parses the canonical grammar
    /// `D(n=..;X=..;top=..;bottom=..;pairs=(E,E);(E,E);...)`.
    pub fn parse(input: &str) -> Result<Diagram> {
        let mut c = Cursor::new(input);
        c.expect("D(")?;
        c.expect("n=")?;
        let n = c.integer()?;
        c.expect(";X=")?;
        let xs = c.label_list()?;
        c.expect(";top=")?;
        let top = c.label_list()?;
        c.expect(";bottom=")?;
        let bottom = c.label_list()?;
        c.expect(";pairs=")?;
        let mut pairs = Vec::new();
        loop {
            c.expect("(")?;
            let a = c.endpoint()?;
            c.expect(",")?;
            let b = c.endpoint()?;
            c.expect(")")?;
            pairs.push((a, b));
            if !c.eat(";") {
                break;
            }
        }
        c.expect(")")?;
        c.end()?;
        let x = LabelSet::new(xs)?;
        Diagram::new(n, x, top, bottom, pairs)
    }

    /// Renders the diagram in the requested format. The first line of the
    /// ascii form is the canonical grammar, so it round-trips via `parse`.
    pub fn render(&self, format: RenderFormat) -> String {
        match format {
            RenderFormat::Ascii => self.render_ascii(),
            RenderFormat::Tikz => self.render_tikz(),
        }
    }

    fn render_ascii(&self) -> String {
        let mut out = format!("{self}\n");
        if !self.top_labels.is_empty() {
            out.push_str(&format!("top labels:    {}\n", self.top_labels.join(" ")));
        }
        if !self.bottom_labels.is_empty() {
            out.push_str(&format!(
                "bottom labels: {}\n",
                self.bottom_labels.join(" ")
            ));
        }
        for &(a, b) in &self.pairs {
            let line = match (a, b) {
                (Endpoint::L(_), Endpoint::R(_)) => format!("|{a}------{b}|"),
                _ => format!("|{a}~~{b}|"),
            };
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    fn render_tikz(&self) -> String {
        let n = self.n;
        let t = self.t();
        let b = self.b();
        let width = 4.0;
        let coord = |e: Endpoint| -> (f64, f64) {
            match e {
                Endpoint::L(i) => (0.0, -(i as f64)),
                Endpoint::R(i) => (width, -(i as f64)),
                Endpoint::T(k) => (width * k as f64 / (t as f64 + 1.0), 0.0),
                Endpoint::B(k) => (width * k as f64 / (b as f64 + 1.0), -(n as f64) - 1.0),
            }
        };
        let mut out = String::from("\\begin{tikzpicture}\n");
        out.push_str(&format!(
            "\\draw[dotted] (0,0) rectangle ({width},{});\n",
            -(n as f64) - 1.0
        ));
        for &(a, e) in &self.pairs {
            let (x1, y1) = coord(a);
            let (x2, y2) = coord(e);
            out.push_str(&format!(
                "\\draw ({x1},{y1}) .. controls ({:.2},{:.2}) and ({:.2},{:.2}) .. ({x2},{y2});\n",
                x1 + (x2 - x1) * 0.25,
                y1 + (y2 - y1) * 0.25,
                x1 + (x2 - x1) * 0.75,
                y1 + (y2 - y1) * 0.75,
            ));
        }
        for (k, l) in self.top_labels.iter().enumerate() {
            let (x, y) = coord(Endpoint::T(k as u32 + 1));
            out.push_str(&format!("\\node[above] at ({x},{y}) {{{l}}};\n"));
        }
        for (k, l) in self.bottom_labels.iter().enumerate() {
            let (x, y) = coord(Endpoint::B(k as u32 + 1));
            out.push_str(&format!("\\node[below] at ({x},{y}) {{{l}}};\n"));
        }
        out.push_str("\\end{tikzpicture}\n");
        out
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "D(n={};X={};top={};bottom={};pairs=",
            self.n,
            self.x.labels().join(","),
            self.top_labels.join(","),
            self.bottom_labels.join(","),
        )?;
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "({a},{b})")?;
        }
        write!(f, ")")
    }
}

/// Output format for [`Diagram::render`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    /// Plain-text rendering; first line is the canonical grammar.
    Ascii,
    /// TikZ drawing source.
    Tikz,
}

pub(crate) struct Cursor<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(input: &'a str) -> Self {
        Cursor { input, pos: 0 }
    }

    pub(crate) fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    pub(crate) fn advance(&mut self, k: usize) {
        self.pos += k;
    }

    pub(crate) fn rest(&self) -> &'a str {
        &self.input[self.pos..]
    }

    pub(crate) fn expect(&mut self, s: &str) -> Result<()> {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            Ok(())
        } else {
            Err(self.err(format!("expected '{s}'")))
        }
    }

    pub(crate) fn eat(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn integer(&mut self) -> Result<u32> {
        let digits: String = self.rest().chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return Err(self.err("expected an integer"));
        }
        self.pos += digits.len();
        digits
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }

    pub(crate) fn label(&mut self) -> Result<Label> {
        let word: String = self
            .rest()
            .chars()
            .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
            .collect();
        if word.is_empty() {
            return Err(self.err("expected a label"));
        }
        self.pos += word.len();
        Ok(word)
    }

    pub(crate) fn label_list(&mut self) -> Result<Vec<Label>> {
        let mut out = Vec::new();
        if self.rest().starts_with(';') || self.rest().starts_with(')') {
            return Ok(out);
        }
        out.push(self.label()?);
        while self.eat(",") {
            out.push(self.label()?);
        }
        Ok(out)
    }

    pub(crate) fn endpoint(&mut self) -> Result<Endpoint> {
        let kind = self
            .rest()
            .chars()
            .next()
            .ok_or_else(|| self.err("expected an endpoint"))?;
        self.pos += kind.len_utf8();
        let idx = self.integer()?;
        match kind {
            'L' => Ok(Endpoint::L(idx)),
            'R' => Ok(Endpoint::R(idx)),
            'T' => Ok(Endpoint::T(idx)),
            'B' => Ok(Endpoint::B(idx)),
            _ => Err(self.err("endpoint must start with L, R, T or B")),
        }
    }

    pub(crate) fn end(&self) -> Result<()> {
        if self.pos == self.input.len() {
            Ok(())
        } else {
            Err(self.err("trailing input"))
        }
    }
}

/// Enumerates every valid diagram for the given n and X exactly once, in a
/// deterministic order: by (t, b), then by matching, then by label tuple.
pub fn enumerate_all(n: u32, x: &LabelSet) -> impl Iterator<Item = Diagram> + '_ {
    (0..=2 * n).flat_map(move |t| {
        (0..=(2 * n - t))
            .filter(move |b| (t + b) % 2 == 0)
            .flat_map(move |b| shape_diagrams(n, x, t, b))
    })
}

/// All diagrams with exactly t top and b bottom points.
fn shape_diagrams(n: u32, x: &LabelSet, t: u32, b: u32) -> Vec<Diagram> {
    let m = (2 * n + t + b) as usize;
    let endpoints: Vec<Endpoint> = {
        let mut v = vec![Endpoint::L(1); m];
        for i in 1..=n {
            v[Endpoint::L(i).cyclic_position(n, t, b) as usize] = Endpoint::L(i);
            v[Endpoint::R(i).cyclic_position(n, t, b) as usize] = Endpoint::R(i);
        }
        for k in 1..=t {
            v[Endpoint::T(k).cyclic_position(n, t, b) as usize] = Endpoint::T(k);
        }
        for k in 1..=b {
            v[Endpoint::B(k).cyclic_position(n, t, b) as usize] = Endpoint::B(k);
        }
        v
    };
    let positions: Vec<usize> = (0..m).collect();
    let matchings = noncrossing_matchings(&positions, &endpoints);

    let mut out = Vec::new();
    for matching in matchings {
        let pairs: Vec<(Endpoint, Endpoint)> = matching
            .iter()
            .map(|&(p, q)| (endpoints[p], endpoints[q]))
            .collect();
        let slots = (t + b) as usize;
        if slots == 0 {
            out.push(
                Diagram::new(n, x.clone(), Vec::new(), Vec::new(), pairs)
                    .expect("generated matching is valid"),
            );
            continue;
        }
        for tuple in (0..slots)
            .map(|_| x.labels().iter())
            .multi_cartesian_product()
        {
            let top = tuple[..t as usize].iter().map(|l| (*l).clone()).collect();
            let bottom = tuple[t as usize..].iter().map(|l| (*l).clone()).collect();
            out.push(
                Diagram::new(n, x.clone(), top, bottom, pairs.clone())
                    .expect("generated matching is valid"),
            );
        }
    }
    out
}

/// Enumerates non-crossing perfect matchings of `points` (positions in
/// cyclic order), skipping any pair of two boundary points. Interleaving is
/// invariant under the cut, so linear nesting on the cut sequence is exact.
fn noncrossing_matchings(
    points: &[usize],
    endpoints: &[Endpoint],
) -> Vec<Vec<(usize, usize)>> {
    if points.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let first = points[0];
    for j in (1..points.len()).step_by(2) {
        let cand = points[j];
        if endpoints[first].is_boundary() && endpoints[cand].is_boundary() {
            continue;
        }
        let inside = noncrossing_matchings(&points[1..j], endpoints);
        let outside = noncrossing_matchings(&points[j + 1..], endpoints);
        for im in &inside {
            for om in &outside {
                let mut m = Vec::with_capacity(1 + im.len() + om.len());
                m.push((first, cand));
                m.extend_from_slice(im);
                m.extend_from_slice(om);
                out.push(m);
            }
        }
    }
    out
}
