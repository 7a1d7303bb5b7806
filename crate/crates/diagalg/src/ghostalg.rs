//! The ghost algebra Gh_n: unlabelled diagrams whose boundary domains carry
//! mod-2 ghost counts, with parity-based multiplication parameters, and the
//! isomorphism onto the label algebra L_n({0,1}).
//!
//! On each boundary the string endpoints and ghosts are numbered left to
//! right; a removed boundary arc contributes the parameter determined by the
//! parities of its two endpoint numbers (`α1`: odd–even top, `α2`: even–odd
//! top, `α3`: same-parity top; `δ1`/`δ2`/`δ3` bottom analogues; `γ12`:
//! opposite-parity top-to-bottom, `γ3`: same parity), leaving a ghost at each
//! removed endpoint. Ghost counts are reduced mod 2 per domain.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{Label, Monomial, ParamId};
use crate::diagram::{Cursor, Diagram, Endpoint, LabelSet};
use crate::labelalg::{self, ArcKind};
use crate::{Error, Result};

fn x01() -> LabelSet {
    LabelSet::new(["0", "1"]).expect("{0,1} is a valid label set")
}

/// A ghost-algebra basis diagram in canonical (mod-2) form.
///
/// `top_ghosts` has length t+1: one bit per domain — before the first top
/// endpoint, between consecutive endpoints, and after the last. Likewise
/// `bottom_ghosts` with length b+1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GhostDiagram {
    n: u32,
    pairs: Vec<(Endpoint, Endpoint)>,
    top_ghosts: Vec<u8>,
    bottom_ghosts: Vec<u8>,
}

impl GhostDiagram {
    /// Builds and validates a ghost diagram.
    pub fn new(
        n: u32,
        pairs: Vec<(Endpoint, Endpoint)>,
        top_ghosts: Vec<u8>,
        bottom_ghosts: Vec<u8>,
    ) -> Result<Self> {
        let mut pairs: Vec<(Endpoint, Endpoint)> = pairs
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        pairs.sort();
        let g = GhostDiagram {
            n,
            pairs,
            top_ghosts,
            bottom_ghosts,
        };
        g.validate()?;
        Ok(g)
    }

    /// The identity ghost diagram.
    pub fn identity(n: u32) -> GhostDiagram {
        let pairs = (1..=n).map(|i| (Endpoint::L(i), Endpoint::R(i))).collect();
        GhostDiagram::new(n, pairs, vec![0], vec![0])
            .expect("identity ghost diagram is always valid")
    }

    /// Checks the matching invariants and the ghost parity invariant: on
    /// each boundary, (#endpoints + total ghosts) is even.
    pub fn validate(&self) -> Result<()> {
        let t = self
            .pairs
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .filter(|e| matches!(e, Endpoint::T(_)))
            .count() as u32;
        let b = self
            .pairs
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .filter(|e| matches!(e, Endpoint::B(_)))
            .count() as u32;
        if self.top_ghosts.len() != (t + 1) as usize
            || self.bottom_ghosts.len() != (b + 1) as usize
        {
            return Err(Error::InvalidDiagram(format!(
                "ghost domain counts must be t+1 = {} and b+1 = {}",
                t + 1,
                b + 1
            )));
        }
        if self
            .top_ghosts
            .iter()
            .chain(&self.bottom_ghosts)
            .any(|&g| g > 1)
        {
            return Err(Error::InvalidDiagram(
                "ghost counts must be stored mod 2".into(),
            ));
        }
        let top_sum: u32 = self.top_ghosts.iter().map(|&g| g as u32).sum();
        let bottom_sum: u32 = self.bottom_ghosts.iter().map(|&g| g as u32).sum();
        if (t + top_sum) % 2 != 0 || (b + bottom_sum) % 2 != 0 {
            return Err(Error::ParityMismatch);
        }
        // Matching invariants are exactly those of the label diagram image.
        self.to_label().map(|_| ())
    }

    /// Node count per side.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The canonicalized pair list.
    pub fn pairs(&self) -> &[(Endpoint, Endpoint)] {
        &self.pairs
    }

    /// Ghost bits per top domain.
    pub fn top_ghosts(&self) -> &[u8] {
        &self.top_ghosts
    }

    /// Ghost bits per bottom domain.
    pub fn bottom_ghosts(&self) -> &[u8] {
        &self.bottom_ghosts
    }

    /// The label-diagram image under the ghost/label isomorphism: endpoints
    /// and ghosts are numbered left to right on each boundary, ghosts are
    /// discarded, and each endpoint is labelled 1 if its number is odd and 0
    /// if even.
    pub fn to_label(&self) -> Result<Diagram> {
        let t = self.top_ghosts.len() - 1;
        let b = self.bottom_ghosts.len() - 1;
        let labels = |ghosts: &[u8], count: usize| -> Vec<Label> {
            let mut out = Vec::with_capacity(count);
            let mut num = 0u32;
            for k in 0..count {
                num += ghosts[k] as u32;
                num += 1;
                out.push(if num % 2 == 1 { "1".into() } else { "0".into() });
            }
            out
        };
        Diagram::new(
            self.n,
            x01(),
            labels(&self.top_ghosts, t),
            labels(&self.bottom_ghosts, b),
            self.pairs.clone(),
        )
    }

    /// The inverse of [`GhostDiagram::to_label`]: recovers the canonical
    /// ghost placement from a label diagram over X = {0,1}, inserting a
    /// ghost wherever the running number parity disagrees with a label and
    /// padding the final domain to even total count.
    pub fn from_label(d: &Diagram) -> Result<GhostDiagram> {
        let ghosts = |labels: &[Label]| -> Result<Vec<u8>> {
            let mut out = Vec::with_capacity(labels.len() + 1);
            let mut num = 0u32;
            for l in labels {
                let want_odd = match l.as_str() {
                    "1" => true,
                    "0" => false,
                    other => {
                        return Err(Error::InvalidDiagram(format!(
                            "label '{other}' is not in {{0,1}}"
                        )))
                    }
                };
                // Place a ghost if the next number would have the wrong parity.
                if ((num + 1) % 2 == 1) != want_odd {
                    out.push(1);
                    num += 1;
                } else {
                    out.push(0);
                }
                num += 1;
            }
            out.push((num % 2) as u8);
            Ok(out)
        };
        GhostDiagram::new(
            d.n(),
            d.pairs().to_vec(),
            ghosts(d.top_labels())?,
            ghosts(d.bottom_labels())?,
        )
    }

    /// Parses the canonical grammar
    /// `G(n=..;topGhosts=<bits>;bottomGhosts=<bits>;pairs=(E,E);...)`.
    pub fn parse(input: &str) -> Result<GhostDiagram> {
        let mut c = Cursor::new(input);
        c.expect("G(")?;
        c.expect("n=")?;
        let n = c.integer()?;
        c.expect(";topGhosts=")?;
        let top = c.bits()?;
        c.expect(";bottomGhosts=")?;
        let bottom = c.bits()?;
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
        GhostDiagram::new(n, pairs, top, bottom)
    }
}

impl fmt::Display for GhostDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G(n={};topGhosts=", self.n)?;
        for g in &self.top_ghosts {
            write!(f, "{g}")?;
        }
        write!(f, ";bottomGhosts=")?;
        for g in &self.bottom_ghosts {
            write!(f, "{g}")?;
        }
        write!(f, ";pairs=")?;
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "({a},{b})")?;
        }
        write!(f, ")")
    }
}

/// Concatenates two ghost diagrams, returning the coefficient monomial and
/// the canonical result.
pub fn ghost_concat(g1: &GhostDiagram, g2: &GhostDiagram) -> Result<(Monomial, GhostDiagram)> {
    if g1.n != g2.n {
        return Err(Error::SizeMismatch(g1.n, g2.n));
    }
    // The underlying matching computation is shared with the label algebra;
    // parameters and ghost bookkeeping below are parity-based and
    // independent of the label-algebra parameter assignment.
    let d1 = g1.to_label()?;
    let d2 = g2.to_label()?;
    let (_, result, trace) = labelalg::concat(&d1, &d2)?;

    // Numbering with ghosts: walk each merged boundary (g1's domains and
    // endpoints, then g2's) and record each endpoint's number.
    // `endpoint_number[i]` is the number of merged endpoint i (0-based
    // endpoint position, as used in the concat trace).
    let numbering = |gh1: &[u8], gh2: &[u8]| -> Vec<u32> {
        let mut numbers = Vec::new();
        let mut num = 0u32;
        for ghosts in [gh1, gh2] {
            for (k, &g) in ghosts.iter().enumerate() {
                num += g as u32;
                if k + 1 < ghosts.len() {
                    num += 1;
                    numbers.push(num);
                }
            }
        }
        numbers
    };
    let top_numbers = numbering(&g1.top_ghosts, &g2.top_ghosts);
    let bottom_numbers = numbering(&g1.bottom_ghosts, &g2.bottom_ghosts);

    let mut coeff = Monomial::from_pairs([(ParamId::Beta, trace.loops)]);
    let mut removed_top: Vec<u32> = Vec::new();
    let mut removed_bottom: Vec<u32> = Vec::new();
    for arc in &trace.arcs {
        let (p, q) = arc.positions;
        let param = match arc.kind {
            ArcKind::TopTop => {
                removed_top.extend([p, q]);
                let (lp, rp) = (top_numbers[p as usize] % 2, top_numbers[q as usize] % 2);
                match (lp, rp) {
                    (1, 0) => ParamId::GhostAlpha(1),
                    (0, 1) => ParamId::GhostAlpha(2),
                    _ => ParamId::GhostAlpha(3),
                }
            }
            ArcKind::BottomBottom => {
                removed_bottom.extend([p, q]);
                let (lp, rp) = (
                    bottom_numbers[p as usize] % 2,
                    bottom_numbers[q as usize] % 2,
                );
                match (lp, rp) {
                    (1, 0) => ParamId::GhostDelta(1),
                    (0, 1) => ParamId::GhostDelta(2),
                    _ => ParamId::GhostDelta(3),
                }
            }
            ArcKind::TopBottom => {
                removed_top.push(p);
                removed_bottom.push(q);
                if top_numbers[p as usize] % 2 != bottom_numbers[q as usize] % 2 {
                    ParamId::GhostGamma12
                } else {
                    ParamId::GhostGamma3
                }
            }
        };
        coeff.mul_param(param);
    }

    // Rebuild per-domain ghosts: removed endpoints become ghosts in place,
    // all removals applied simultaneously, counts reduced mod 2.
    let rebuild = |gh1: &[u8], gh2: &[u8], removed: &[u32]| -> Vec<u8> {
        let mut out = Vec::new();
        let mut cur = 0u32;
        let mut pos = 0u32;
        for ghosts in [gh1, gh2] {
            for (k, &g) in ghosts.iter().enumerate() {
                cur += g as u32;
                if k + 1 < ghosts.len() {
                    if removed.contains(&pos) {
                        cur += 1;
                    } else {
                        out.push((cur % 2) as u8);
                        cur = 0;
                    }
                    pos += 1;
                }
            }
        }
        out.push((cur % 2) as u8);
        out
    };
    let top_ghosts = rebuild(&g1.top_ghosts, &g2.top_ghosts, &removed_top);
    let bottom_ghosts = rebuild(&g1.bottom_ghosts, &g2.bottom_ghosts, &removed_bottom);

    let g = GhostDiagram::new(g1.n, result.pairs().to_vec(), top_ghosts, bottom_ghosts)?;
    Ok((coeff, g))
}

/// The parameter identification of the ghost/label isomorphism: each label
/// parameter over X = {0,1} is sent to the ghost parameter determined by its
/// label parities, and β to β.
pub fn ghost_param_map() -> BTreeMap<ParamId, Monomial> {
    let mut map = BTreeMap::new();
    map.insert(ParamId::Beta, Monomial::param(ParamId::Beta));
    let bits = ["0", "1"];
    for a in bits {
        for b in bits {
            let alpha = match (a, b) {
                ("1", "0") => ParamId::GhostAlpha(1),
                ("0", "1") => ParamId::GhostAlpha(2),
                _ => ParamId::GhostAlpha(3),
            };
            let delta = match (a, b) {
                ("1", "0") => ParamId::GhostDelta(1),
                ("0", "1") => ParamId::GhostDelta(2),
                _ => ParamId::GhostDelta(3),
            };
            let gamma = if a != b {
                ParamId::GhostGamma12
            } else {
                ParamId::GhostGamma3
            };
            map.insert(
                ParamId::AlphaUp(a.into(), b.into()),
                Monomial::param(alpha),
            );
            map.insert(
                ParamId::DeltaDown(a.into(), b.into()),
                Monomial::param(delta),
            );
            map.insert(ParamId::Gamma(a.into(), b.into()), Monomial::param(gamma));
        }
    }
    map
}

impl Cursor<'_> {
    pub(crate) fn bits(&mut self) -> Result<Vec<u8>> {
        let digits: String = self
            .rest()
            .chars()
            .take_while(|c| *c == '0' || *c == '1')
            .collect();
        if digits.is_empty() {
            return Err(self.err("expected a bit string"));
        }
        self.advance(digits.len());
        Ok(digits.bytes().map(|b| b - b'0').collect())
    }
}
