//! Constructive inverse of φ on basis diagrams: every diagram becomes a word
//! whose generator concatenation reproduces it with coefficient 1, with no
//! loops or boundary arcs in the trace.
//!
//! Even diagrams are peeled two top links at a time through a middle factor
//! `f↑(a,b) e_2 e_4 … e_{2k}` (with a vertical-flip mirror for bottom links),
//! down to boundary-free Temperley–Lieb diagrams; odd diagrams split off a
//! single odd factor w̃(j) and an even remainder. TL factorization itself is
//! a memoized breadth-first search from the identity over loop-free right
//! multiplication by the e_i, which yields minimal-length words
//! deterministically.

use std::collections::{HashMap, VecDeque};
use std::sync::{Mutex, OnceLock};

use crate::coeff::Label;
use crate::diagram::{Diagram, Endpoint, LabelSet, Parity};
use crate::labelalg::{self, GeneratorId};
use crate::presentation::{special_words, Generator, SpecialWord, Word};
use crate::{Error, Result};

type PairKey = Vec<(Endpoint, Endpoint)>;

static TL_CACHE: OnceLock<Mutex<HashMap<u32, HashMap<PairKey, Word>>>> = OnceLock::new();

fn tl_table(n: u32) -> HashMap<PairKey, Word> {
    let x = LabelSet::new(["0"]).expect("valid label set");
    let gens: Vec<(u32, Diagram)> = (1..n)
        .map(|i| {
            (
                i,
                labelalg::generator_diagram(&GeneratorId::E(i), n, &x)
                    .expect("valid e_i"),
            )
        })
        .collect();
    let id = Diagram::identity(n, x);
    let mut map: HashMap<PairKey, Word> = HashMap::new();
    map.insert(id.pairs().to_vec(), Vec::new());
    let mut queue = VecDeque::from([id]);
    while let Some(d) = queue.pop_front() {
        let base = map[d.pairs()].clone();
        for (i, g) in &gens {
            let (_, nd, trace) = labelalg::concat(&d, g).expect("same n and X");
            if trace.loops > 0 || map.contains_key(nd.pairs()) {
                continue;
            }
            let mut w = base.clone();
            w.push(Generator::E(*i));
            map.insert(nd.pairs().to_vec(), w);
            queue.push_back(nd);
        }
    }
    map
}

/// Factorizes a boundary-free diagram as a loop-free product of e_i's.
pub fn decompose_tl(d: &Diagram) -> Result<Word> {
    if d.boundary_links() > 0 {
        return Err(Error::HasBoundaryLinks);
    }
    let cache = TL_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut cache = cache.lock().expect("TL cache lock");
    let table = cache.entry(d.n()).or_insert_with(|| tl_table(d.n()));
    Ok(table
        .get(d.pairs())
        .expect("every TL diagram is a loop-free product of e_i's")
        .clone())
}

/// Vertical flip: top and bottom boundaries swap, node i becomes node
/// n+1-i on the same side. This is an algebra automorphism of L_n(X).
fn vflip(d: &Diagram) -> Diagram {
    let n = d.n();
    let map = |e: Endpoint| -> Endpoint {
        match e {
            Endpoint::L(i) => Endpoint::L(n + 1 - i),
            Endpoint::R(i) => Endpoint::R(n + 1 - i),
            Endpoint::T(k) => Endpoint::B(k),
            Endpoint::B(k) => Endpoint::T(k),
        }
    };
    let pairs = d.pairs().iter().map(|&(a, b)| (map(a), map(b))).collect();
    Diagram::new(
        n,
        d.label_set().clone(),
        d.bottom_labels().to_vec(),
        d.top_labels().to_vec(),
        pairs,
    )
    .expect("vertical flip preserves validity")
}

/// The image of a generator under the vertical-flip automorphism.
pub(crate) fn vflip_generator(g: &Generator, n: u32) -> Generator {
    match g {
        Generator::E(i) => Generator::E(n - i),
        Generator::FUp(a, b) => Generator::FDown(a.clone(), b.clone()),
        Generator::FDown(a, b) => Generator::FUp(a.clone(), b.clone()),
        Generator::WUp(a, b) => Generator::WDown(b.clone(), a.clone()),
        Generator::WDown(a, b) => Generator::WUp(b.clone(), a.clone()),
    }
}

/// Factorizes an even diagram as a word of even generators with
/// φ-coefficient exactly 1.
pub fn decompose_even(d: &Diagram) -> Result<Word> {
    if d.parity() != Parity::Even {
        return Err(Error::NotEven);
    }
    if d.t() >= 2 {
        return decompose_even_top(d);
    }
    if d.b() >= 2 {
        // Mirror through the vertical-flip automorphism.
        let flipped = vflip(d);
        let word = decompose_even_top(&flipped)?;
        return Ok(word.iter().map(|g| vflip_generator(g, d.n())).collect());
    }
    decompose_tl(d)
}

/// Peels the two leftmost top links of an even diagram with t >= 2.
fn decompose_even_top(d: &Diagram) -> Result<Word> {
    let n = d.n();
    let x = d.label_set().clone();
    let a = d.top_labels()[0].clone();
    let b = d.top_labels()[1].clone();
    let p1 = d.partner(Endpoint::T(1)).expect("valid diagram");
    let p2 = d.partner(Endpoint::T(2)).expect("valid diagram");

    // Helpers over d's pair list.
    let touches = |e: Endpoint, lo: u32, hi: u32, left: bool| -> bool {
        match (e, left) {
            (Endpoint::L(i), true) | (Endpoint::R(i), false) => i >= lo && i <= hi,
            _ => false,
        }
    };
    let is_top = |e: Endpoint| matches!(e, Endpoint::T(_));
    let shift_tops = |e: Endpoint| -> Endpoint {
        match e {
            Endpoint::T(k) => Endpoint::T(k - 2),
            other => other,
        }
    };
    let left_cups = |hi: u32| -> Vec<(Endpoint, Endpoint)> {
        (1..hi)
            .step_by(2)
            .map(|i| (Endpoint::L(i), Endpoint::L(i + 1)))
            .collect()
    };
    let right_cups = |hi: u32| -> Vec<(Endpoint, Endpoint)> {
        (1..hi)
            .step_by(2)
            .map(|i| (Endpoint::R(i), Endpoint::R(i + 1)))
            .collect()
    };
    let mid = |k: u32| -> Word {
        let mut w = vec![Generator::FUp(a.clone(), b.clone())];
        w.extend((1..=k).map(|i| Generator::E(2 * i)));
        w
    };
    let tl = |pairs: Vec<(Endpoint, Endpoint)>| -> Result<Diagram> {
        Diagram::new(n, x.clone(), vec![], vec![], pairs)
    };

    let (dleft, middle, dright) = match (p1, p2) {
        (Endpoint::L(p), Endpoint::L(q)) => {
            debug_assert!(p < q && p % 2 == 1 && q % 2 == 0);
            let k = (q - 2) / 2;
            // Left factor: boundary-free.
            let mut lp: Vec<(Endpoint, Endpoint)> = d
                .pairs()
                .iter()
                .copied()
                .filter(|&(u, v)| {
                    (touches(u, 1, p - 1, true) && touches(v, 1, p - 1, true))
                        || (touches(u, p + 1, q - 1, true) && touches(v, p + 1, q - 1, true))
                })
                .collect();
            lp.push((Endpoint::L(p), Endpoint::R(q - 1)));
            lp.push((Endpoint::L(q), Endpoint::R(q)));
            lp.extend((q + 1..=n).map(|m| (Endpoint::L(m), Endpoint::R(m))));
            lp.extend(right_cups(q - 1));
            let dleft = tl(lp)?;
            // Right factor: d with everything touching L_1..L_q replaced by
            // left cups; tops shifted down by two.
            let mut rp: Vec<(Endpoint, Endpoint)> = d
                .pairs()
                .iter()
                .copied()
                .filter(|&(u, v)| {
                    !touches(u, 1, q, true)
                        && !touches(v, 1, q, true)
                        && u != Endpoint::T(1)
                        && u != Endpoint::T(2)
                        && v != Endpoint::T(1)
                        && v != Endpoint::T(2)
                })
                .map(|(u, v)| (shift_tops(u), shift_tops(v)))
                .collect();
            rp.extend(left_cups(q));
            let dright = Diagram::new(
                n,
                x.clone(),
                d.top_labels()[2..].to_vec(),
                d.bottom_labels().to_vec(),
                rp,
            )?;
            (dleft, mid(k), dright)
        }
        (Endpoint::L(p), Endpoint::R(r)) if p <= r => {
            debug_assert!(p % 2 == 1 && r % 2 == 1);
            let k = (r - 1) / 2;
            // Left factor: no tops, carries all of d's bottoms.
            let mut lp: Vec<(Endpoint, Endpoint)> = d
                .pairs()
                .iter()
                .copied()
                .filter(|&(u, v)| {
                    !is_top(u)
                        && !is_top(v)
                        && !touches(u, 1, r, false)
                        && !touches(v, 1, r, false)
                        && u != Endpoint::L(p)
                        && v != Endpoint::L(p)
                })
                .collect();
            lp.push((Endpoint::L(p), Endpoint::R(r)));
            lp.extend(right_cups(r - 1));
            let dleft = Diagram::new(
                n,
                x.clone(),
                vec![],
                d.bottom_labels().to_vec(),
                lp,
            )?;
            // Right factor: no bottoms; rights 1..r-1 keep their pairs to
            // the remaining tops.
            let mut rp: Vec<(Endpoint, Endpoint)> = d
                .pairs()
                .iter()
                .copied()
                .filter(|&(u, v)| {
                    let keep = |e: Endpoint| {
                        touches(e, 1, r - 1, false)
                            || matches!(e, Endpoint::T(k) if k >= 3)
                    };
                    keep(u) && keep(v)
                })
                .map(|(u, v)| (shift_tops(u), shift_tops(v)))
                .collect();
            rp.extend(left_cups(r - 1));
            rp.extend((r..=n).map(|m| (Endpoint::L(m), Endpoint::R(m))));
            let dright =
                Diagram::new(n, x.clone(), d.top_labels()[2..].to_vec(), vec![], rp)?;
            (dleft, mid(k), dright)
        }
        (Endpoint::L(p), Endpoint::R(r)) => {
            // p > r.
            debug_assert!(p % 2 == 1 && r % 2 == 1);
            let k = (p - 1) / 2;
            // Left factor: boundary-free.
            let mut lp: Vec<(Endpoint, Endpoint)> = d
                .pairs()
                .iter()
                .copied()
                .filter(|&(u, v)| {
                    touches(u, 1, p - 1, true) && touches(v, 1, p - 1, true)
                })
                .collect();
            lp.extend((p..=n).map(|m| (Endpoint::L(m), Endpoint::R(m))));
            lp.extend(right_cups(p - 1));
            let dleft = tl(lp)?;
            // Right factor: left region becomes cups, the two top links
            // merge into (L_p, R_r), everything else is kept.
            let mut rp: Vec<(Endpoint, Endpoint)> = d
                .pairs()
                .iter()
                .copied()
                .filter(|&(u, v)| {
                    !(touches(u, 1, p - 1, true) && touches(v, 1, p - 1, true))
                        && u != Endpoint::T(1)
                        && u != Endpoint::T(2)
                        && v != Endpoint::T(1)
                        && v != Endpoint::T(2)
                })
                .map(|(u, v)| (shift_tops(u), shift_tops(v)))
                .collect();
            rp.extend(left_cups(p - 1));
            rp.push((Endpoint::L(p), Endpoint::R(r)));
            let dright = Diagram::new(
                n,
                x.clone(),
                d.top_labels()[2..].to_vec(),
                d.bottom_labels().to_vec(),
                rp,
            )?;
            (dleft, mid(k), dright)
        }
        (Endpoint::R(q), Endpoint::R(p)) => {
            debug_assert!(p < q && p % 2 == 1 && q % 2 == 0);
            let k = (q - 2) / 2;
            // Left factor: no tops; everything not touching R_1..R_q is
            // kept, R_1..R_q become cups.
            let mut lp: Vec<(Endpoint, Endpoint)> = d
                .pairs()
                .iter()
                .copied()
                .filter(|&(u, v)| {
                    !is_top(u)
                        && !is_top(v)
                        && !touches(u, 1, q, false)
                        && !touches(v, 1, q, false)
                })
                .collect();
            lp.extend(right_cups(q));
            let dleft = Diagram::new(
                n,
                x.clone(),
                vec![],
                d.bottom_labels().to_vec(),
                lp,
            )?;
            // Right factor: no bottoms.
            let mut rp: Vec<(Endpoint, Endpoint)> = d
                .pairs()
                .iter()
                .copied()
                .filter(|&(u, v)| {
                    let keep = |e: Endpoint| {
                        touches(e, 1, p - 1, false)
                            || touches(e, p + 1, q - 1, false)
                            || matches!(e, Endpoint::T(k) if k >= 3)
                    };
                    keep(u) && keep(v)
                })
                .map(|(u, v)| (shift_tops(u), shift_tops(v)))
                .collect();
            rp.extend(left_cups(q - 2));
            rp.push((Endpoint::L(q - 1), Endpoint::R(p)));
            rp.push((Endpoint::L(q), Endpoint::R(q)));
            rp.extend((q + 1..=n).map(|m| (Endpoint::L(m), Endpoint::R(m))));
            let dright =
                Diagram::new(n, x.clone(), d.top_labels()[2..].to_vec(), vec![], rp)?;
            (dleft, mid(k), dright)
        }
        _ => {
            return Err(Error::InvalidDiagram(
                "T1 attached to the right while T2 is attached to the left \
                 is impossible in a planar diagram"
                    .into(),
            ))
        }
    };

    let mut word = decompose_even(&dleft)?;
    word.extend(middle);
    word.extend(decompose_even(&dright)?);
    Ok(word)
}

/// Splits an odd diagram into its unique odd factor index j with labels
/// (a, b) and the even remainder T̃ with w̃(j) · T̃ = d (coefficient 1).
pub fn decompose_odd(d: &Diagram) -> Result<(u32, Label, Label, Diagram)> {
    if d.parity() != Parity::Odd {
        return Err(Error::NotOdd);
    }
    let n = d.n();
    let a = d.top_labels()[0].clone();
    let b = d.bottom_labels()[0].clone();

    // Select j by the uniqueness rule: j = 0 for a top boundary link at 1
    // on the left; otherwise the topmost left simple link; otherwise j = n.
    let j = if d.contains_pair(Endpoint::L(1), Endpoint::T(1)) {
        0
    } else if let Some(i) = d.topmost_left_simple_link() {
        i
    } else {
        n
    };

    // Anchor pullback: interface node m of T̃ corresponds to the d-endpoint
    // reached through w̃(j)'s right side.
    // anchor[m-1] = Some(L_x) or None for the top/bottom boundary link.
    let mut anchor: Vec<Option<Endpoint>> = vec![None; n as usize];
    let consumed: (Endpoint, Endpoint);
    if j == 0 {
        for m in 1..n {
            anchor[(m - 1) as usize] = Some(Endpoint::L(m + 1));
        }
        consumed = (Endpoint::L(1), Endpoint::T(1));
    } else if j == n {
        for m in 2..=n {
            anchor[(m - 1) as usize] = Some(Endpoint::L(m - 1));
        }
        consumed = (Endpoint::L(n), Endpoint::B(1));
    } else {
        for m in 2..=j {
            anchor[(m - 1) as usize] = Some(Endpoint::L(m - 1));
        }
        for m in j + 1..=n - 1 {
            anchor[(m - 1) as usize] = Some(Endpoint::L(m + 1));
        }
        consumed = (Endpoint::L(j), Endpoint::L(j + 1));
    }
    if d.partner(consumed.0) != Some(consumed.1) {
        return Err(Error::InvalidDiagram(format!(
            "odd diagram lacks the expected pair ({},{}) for j = {j}",
            consumed.0, consumed.1
        )));
    }

    let pullback = |e: Endpoint| -> Endpoint {
        match e {
            Endpoint::R(i) => Endpoint::R(i),
            Endpoint::T(k) if k >= 2 => Endpoint::T(k - 1),
            Endpoint::B(k) if k >= 2 => Endpoint::B(k - 1),
            Endpoint::T(_) => Endpoint::L(1), // d's T1 pulls back to node 1
            Endpoint::B(_) => Endpoint::L(n), // d's B1 pulls back to node n
            Endpoint::L(_) => {
                let m = anchor
                    .iter()
                    .position(|&x| x == Some(e))
                    .expect("every left node of d is anchored");
                Endpoint::L(m as u32 + 1)
            }
        }
    };
    let pairs: Vec<(Endpoint, Endpoint)> = d
        .pairs()
        .iter()
        .copied()
        .filter(|&(u, v)| (u, v) != consumed && (v, u) != consumed)
        .map(|(u, v)| (pullback(u), pullback(v)))
        .collect();
    let remainder = Diagram::new(
        n,
        d.label_set().clone(),
        d.top_labels()[1..].to_vec(),
        d.bottom_labels()[1..].to_vec(),
        pairs,
    )?;

    let w = labelalg::w_diagram(&a, &b, j, n, d.label_set())?;
    let (m, check, _) = labelalg::concat(&w, &remainder)?;
    if !m.is_one() || &check != d {
        return Err(Error::InvalidDiagram(
            "odd factor pullback failed to reproduce the diagram".into(),
        ));
    }
    Ok((j, a, b, remainder))
}

/// Factorizes any basis diagram: φ(decompose(d)) = 1 · d.
pub fn decompose(d: &Diagram) -> Result<Word> {
    match d.parity() {
        Parity::Even => decompose_even(d),
        Parity::Odd => {
            let (j, a, b, remainder) = decompose_odd(d)?;
            let mut word = special_words(&SpecialWord::W(a, b, j), d.n(), d.label_set())?;
            word.extend(decompose_even(&remainder)?);
            Ok(word)
        }
    }
}
