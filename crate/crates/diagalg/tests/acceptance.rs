//! End-to-end acceptance suite: each test prints a single pass/fail line
//! for one acceptance criterion and panics with details on failure.

use std::collections::BTreeMap;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use diagalg::coeff::{Monomial, ParamId, Polynomial};
use diagalg::decompose::decompose;
use diagalg::diagram::{enumerate_all, Diagram, Endpoint, LabelSet, Parity};
use diagalg::ghostalg::{ghost_concat, ghost_param_map, GhostDiagram};
use diagalg::labelalg::{concat, dimension, generator_diagram, GeneratorId};
use diagalg::presentation::{
    count_label_generators, phi_full, relation_catalogue, verify_relation, verify_relations,
    Generator, Relation, Word,
};
use diagalg::rewrite::{even_reduced_oracle, left_descent_set, to_wt_form, WPart};
use diagalg::sympblob::{
    sb_generator, sb_multiply, sb_verify_relations, Blob, BlobDiagram, SbGeneratorId,
};

fn xset(labels: &[&str]) -> LabelSet {
    LabelSet::new(labels.iter().copied()).unwrap()
}

/// Runs one criterion, printing exactly one pass/fail line.
fn criterion(name: &str, f: impl FnOnce() -> Result<(), String>) {
    match f() {
        Ok(()) => println!("acceptance: {name} ... PASS"),
        Err(msg) => {
            println!("acceptance: {name} ... FAIL");
            panic!("{name}: {msg}");
        }
    }
}

#[test]
fn criterion_1_dimension_matches_enumeration() {
    criterion("dimension formula vs basis enumeration", || {
        let spot = [(1u32, 1u32, 5u64), (1, 2, 17), (2, 1, 21)];
        for (n, xsize, want) in spot {
            let got = dimension(n, xsize);
            if got != want.into() {
                return Err(format!("dim({n},{xsize}) = {got}, want {want}"));
            }
        }
        let alphabet = ["a", "b", "c"];
        for n in 1u32..=4 {
            for xsize in 1usize..=3 {
                let x = xset(&alphabet[..xsize]);
                let count = enumerate_all(n, &x).count();
                let dim = dimension(n, xsize as u32);
                if dim != count.into() {
                    return Err(format!(
                        "n={n}, |X|={xsize}: dimension {dim} but {count} diagrams enumerated"
                    ));
                }
            }
        }
        Ok(())
    });
}

/// The first displayed n = 8 product pair over X = {0, 1}.
fn label_example_one() -> (Diagram, Diagram, Monomial, Diagram) {
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
    let coeff = Monomial::from_pairs([
        (ParamId::Beta, 1),
        (ParamId::AlphaUp("1".into(), "0".into()), 1),
        (ParamId::Gamma("0".into(), "1".into()), 1),
        (ParamId::Gamma("1".into(), "1".into()), 1),
    ]);
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
    (d1, d2, coeff, product)
}

/// The first displayed n = 8 ghost product pair.
fn ghost_example_one() -> (GhostDiagram, GhostDiagram, Monomial, GhostDiagram) {
    let g1 = GhostDiagram::new(
        8,
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
        vec![1, 0, 1],
        vec![0],
    )
    .unwrap();
    let g2 = GhostDiagram::new(
        8,
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
        vec![0, 0, 0, 0, 0],
        vec![0, 1, 1],
    )
    .unwrap();
    let coeff = Monomial::from_pairs([
        (ParamId::Beta, 1),
        (ParamId::GhostAlpha(1), 1),
        (ParamId::GhostGamma12, 1),
        (ParamId::GhostGamma3, 1),
    ]);
    let product = GhostDiagram::new(
        8,
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
        vec![0, 0, 0],
        vec![0],
    )
    .unwrap();
    (g1, g2, coeff, product)
}

/// The second displayed n = 8 ghost product pair.
fn ghost_example_two() -> (GhostDiagram, GhostDiagram, Monomial, GhostDiagram) {
    let g1 = GhostDiagram::new(
        8,
        vec![
            (Endpoint::L(1), Endpoint::L(2)),
            (Endpoint::L(3), Endpoint::T(1)),
            (Endpoint::L(4), Endpoint::R(3)),
            (Endpoint::L(5), Endpoint::L(6)),
            (Endpoint::L(7), Endpoint::L(8)),
            (Endpoint::R(1), Endpoint::T(3)),
            (Endpoint::R(2), Endpoint::T(2)),
            (Endpoint::R(4), Endpoint::R(5)),
            (Endpoint::R(6), Endpoint::B(1)),
            (Endpoint::R(7), Endpoint::B(2)),
            (Endpoint::R(8), Endpoint::B(3)),
        ],
        vec![1, 0, 0, 0],
        vec![1, 0, 0, 0],
    )
    .unwrap();
    let g2 = GhostDiagram::new(
        8,
        vec![
            (Endpoint::L(1), Endpoint::T(1)),
            (Endpoint::L(2), Endpoint::T(2)),
            (Endpoint::L(3), Endpoint::R(1)),
            (Endpoint::L(4), Endpoint::R(2)),
            (Endpoint::L(5), Endpoint::R(7)),
            (Endpoint::L(6), Endpoint::B(3)),
            (Endpoint::L(7), Endpoint::B(2)),
            (Endpoint::L(8), Endpoint::B(1)),
            (Endpoint::R(3), Endpoint::R(4)),
            (Endpoint::R(5), Endpoint::R(6)),
            (Endpoint::R(8), Endpoint::B(4)),
        ],
        vec![0, 1, 1],
        vec![0, 0, 1, 0, 1],
    )
    .unwrap();
    let coeff = Monomial::from_pairs([
        (ParamId::GhostAlpha(2), 1),
        (ParamId::GhostAlpha(3), 1),
        (ParamId::GhostDelta(1), 1),
        (ParamId::GhostDelta(2), 1),
        (ParamId::GhostDelta(3), 1),
    ]);
    let product = GhostDiagram::new(
        8,
        vec![
            (Endpoint::L(1), Endpoint::L(2)),
            (Endpoint::L(3), Endpoint::T(1)),
            (Endpoint::L(4), Endpoint::R(1)),
            (Endpoint::L(5), Endpoint::L(6)),
            (Endpoint::L(7), Endpoint::L(8)),
            (Endpoint::R(2), Endpoint::R(7)),
            (Endpoint::R(3), Endpoint::R(4)),
            (Endpoint::R(5), Endpoint::R(6)),
            (Endpoint::R(8), Endpoint::B(1)),
        ],
        vec![1, 0],
        vec![0, 1],
    )
    .unwrap();
    (g1, g2, coeff, product)
}

#[test]
fn criterion_2_worked_examples() {
    criterion("worked multiplication examples reproduce exactly", || {
        // Label algebra, first example.
        let (d1, d2, coeff, product) = label_example_one();
        let (m, d, _) = concat(&d1, &d2).map_err(|e| e.to_string())?;
        if m != coeff || d != product {
            return Err(format!("label example 1: got {m} * {d}"));
        }

        // Ghost algebra, both examples.
        for (k, (g1, g2, coeff, product)) in
            [ghost_example_one(), ghost_example_two()].into_iter().enumerate()
        {
            let (m, g) = ghost_concat(&g1, &g2).map_err(|e| e.to_string())?;
            if m != coeff || g != product {
                return Err(format!("ghost example {}: got {m} * {g}", k + 1));
            }
        }

        // Label algebra, second example: the image of the second ghost pair
        // under the ghost/label isomorphism, with the stated coefficient.
        let (g1, g2, _, gprod) = ghost_example_two();
        let d1 = g1.to_label().map_err(|e| e.to_string())?;
        let d2 = g2.to_label().map_err(|e| e.to_string())?;
        let (m, d, _) = concat(&d1, &d2).map_err(|e| e.to_string())?;
        let coeff = Monomial::from_pairs([
            (ParamId::AlphaUp("1".into(), "1".into()), 1),
            (ParamId::AlphaUp("0".into(), "1".into()), 1),
            (ParamId::DeltaDown("0".into(), "0".into()), 1),
            (ParamId::DeltaDown("1".into(), "0".into()), 1),
            (ParamId::DeltaDown("0".into(), "1".into()), 1),
        ]);
        if m != coeff || d != gprod.to_label().map_err(|e| e.to_string())? {
            return Err(format!("label example 2: got {m} * {d}"));
        }

        // Symplectic blob algebra: the six-string n = 6 product.
        let b1 = BlobDiagram::new(
            6,
            vec![
                (Endpoint::L(1), Endpoint::R(3), vec![Blob::Top]),
                (Endpoint::L(2), Endpoint::L(3), vec![]),
                (Endpoint::L(4), Endpoint::R(4), vec![Blob::Bottom]),
                (Endpoint::L(5), Endpoint::L(6), vec![]),
                (Endpoint::R(1), Endpoint::R(2), vec![Blob::Top]),
                (Endpoint::R(5), Endpoint::R(6), vec![Blob::Bottom]),
            ],
        )
        .unwrap();
        let b2 = BlobDiagram::new(
            6,
            vec![
                (Endpoint::L(1), Endpoint::L(2), vec![]),
                (Endpoint::L(3), Endpoint::L(4), vec![Blob::Top]),
                (Endpoint::L(5), Endpoint::R(5), vec![Blob::Top]),
                (Endpoint::L(6), Endpoint::R(6), vec![Blob::Bottom]),
                (Endpoint::R(1), Endpoint::R(2), vec![Blob::Top]),
                (Endpoint::R(3), Endpoint::R(4), vec![]),
            ],
        )
        .unwrap();
        let (m, p) = sb_multiply(&b1, &b2).map_err(|e| e.to_string())?;
        let coeff = Monomial::from_pairs([
            (ParamId::Kappa, 1),
            (ParamId::SbAlpha(1), 1),
            (ParamId::SbAlpha(2), 1),
            (ParamId::SbDelta(2), 1),
        ]);
        let expect = BlobDiagram::new(
            6,
            vec![
                (Endpoint::L(1), Endpoint::R(5), vec![Blob::Top]),
                (Endpoint::L(2), Endpoint::L(3), vec![]),
                (Endpoint::L(4), Endpoint::R(6), vec![Blob::Bottom]),
                (Endpoint::L(5), Endpoint::L(6), vec![]),
                (Endpoint::R(1), Endpoint::R(2), vec![Blob::Top]),
                (Endpoint::R(3), Endpoint::R(4), vec![]),
            ],
        )
        .unwrap();
        if m != coeff || p != expect {
            return Err(format!("blob example 1: got {m} * {p}"));
        }

        // Symplectic blob algebra: the n-even decorated-loop product.
        let (m, p) = sb_multiply(&sb_loop_left(), &sb_loop_right()).map_err(|e| e.to_string())?;
        let coeff = Monomial::from_pairs([(ParamId::Kappa, 1), (ParamId::SbAlpha(2), 1)]);
        let expect = BlobDiagram::new(
            2,
            vec![
                (Endpoint::L(1), Endpoint::L(2), vec![]),
                (Endpoint::R(1), Endpoint::R(2), vec![]),
            ],
        )
        .unwrap();
        if m != coeff || p != expect {
            return Err(format!("blob example 2: got {m} * {p}"));
        }
        Ok(())
    });
}

/// Left factor of the n = 2 decorated-loop product.
fn sb_loop_left() -> BlobDiagram {
    BlobDiagram::new(
        2,
        vec![
            (Endpoint::L(1), Endpoint::L(2), vec![]),
            (Endpoint::R(1), Endpoint::R(2), vec![Blob::Top, Blob::Bottom]),
        ],
    )
    .unwrap()
}

/// Right factor of the n = 2 decorated-loop product.
fn sb_loop_right() -> BlobDiagram {
    BlobDiagram::new(
        2,
        vec![
            (Endpoint::L(1), Endpoint::L(2), vec![Blob::Top]),
            (Endpoint::R(1), Endpoint::R(2), vec![]),
        ],
    )
    .unwrap()
}

/// Checks (d1 d2) d3 == d1 (d2 d3) for label basis diagrams.
fn label_assoc(d1: &Diagram, d2: &Diagram, d3: &Diagram) -> Result<(), String> {
    let (m12, p12, _) = concat(d1, d2).map_err(|e| e.to_string())?;
    let (ml, pl, _) = concat(&p12, d3).map_err(|e| e.to_string())?;
    let (m23, p23, _) = concat(d2, d3).map_err(|e| e.to_string())?;
    let (mr, pr, _) = concat(d1, &p23).map_err(|e| e.to_string())?;
    if m12.mul(&ml) != m23.mul(&mr) || pl != pr {
        return Err(format!("label associativity fails on {d1}, {d2}, {d3}"));
    }
    Ok(())
}

/// Checks (g1 g2) g3 == g1 (g2 g3) for ghost basis diagrams.
fn ghost_assoc(g1: &GhostDiagram, g2: &GhostDiagram, g3: &GhostDiagram) -> Result<(), String> {
    let (m12, p12) = ghost_concat(g1, g2).map_err(|e| e.to_string())?;
    let (ml, pl) = ghost_concat(&p12, g3).map_err(|e| e.to_string())?;
    let (m23, p23) = ghost_concat(g2, g3).map_err(|e| e.to_string())?;
    let (mr, pr) = ghost_concat(g1, &p23).map_err(|e| e.to_string())?;
    if m12.mul(&ml) != m23.mul(&mr) || pl != pr {
        return Err(format!("ghost associativity fails on {g1}, {g2}, {g3}"));
    }
    Ok(())
}

/// Checks (b1 b2) b3 == b1 (b2 b3) for blob basis diagrams.
fn sb_assoc(b1: &BlobDiagram, b2: &BlobDiagram, b3: &BlobDiagram) -> Result<(), String> {
    let (m12, p12) = sb_multiply(b1, b2).map_err(|e| e.to_string())?;
    let (ml, pl) = sb_multiply(&p12, b3).map_err(|e| e.to_string())?;
    let (m23, p23) = sb_multiply(b2, b3).map_err(|e| e.to_string())?;
    let (mr, pr) = sb_multiply(b1, &p23).map_err(|e| e.to_string())?;
    if m12.mul(&ml) != m23.mul(&mr) || pl != pr {
        return Err(format!("blob associativity fails on {b1}, {b2}, {b3}"));
    }
    Ok(())
}

/// A pool of blob diagrams reachable from short generator words.
fn sb_pool(n: u32, rng: &mut ChaCha8Rng, size: usize) -> Vec<BlobDiagram> {
    let mut gens = vec![SbGeneratorId::F0, SbGeneratorId::FN];
    gens.extend((1..n).map(SbGeneratorId::E));
    let mut pool = vec![BlobDiagram::identity(n)];
    while pool.len() < size {
        let len = rng.gen_range(1..=6);
        let word: Vec<SbGeneratorId> =
            (0..len).map(|_| gens.choose(rng).unwrap().clone()).collect();
        let (_, d) = diagalg::sympblob::sb_evaluate(&word, n).unwrap();
        pool.push(d);
    }
    pool
}

#[test]
fn criterion_3_associativity() {
    criterion("associativity on random and fixed triples", || {
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        let x = xset(&["a", "b"]);
        // Label and ghost algebras: 200 random triples at each n <= 3.
        for n in 1u32..=3 {
            let basis: Vec<Diagram> = enumerate_all(n, &x).collect();
            let x01 = xset(&["0", "1"]);
            let basis01: Vec<Diagram> = enumerate_all(n, &x01).collect();
            for _ in 0..200 {
                let pick =
                    |rng: &mut ChaCha8Rng| basis.choose(rng).unwrap().clone();
                label_assoc(&pick(&mut rng), &pick(&mut rng), &pick(&mut rng))?;
                let gpick = |rng: &mut ChaCha8Rng| {
                    GhostDiagram::from_label(basis01.choose(rng).unwrap()).unwrap()
                };
                ghost_assoc(&gpick(&mut rng), &gpick(&mut rng), &gpick(&mut rng))?;
            }
        }
        // Blob algebra: 300 random triples at each n in {2, 3}.
        for n in 2u32..=3 {
            let pool = sb_pool(n, &mut rng, 40);
            for _ in 0..300 {
                let pick = |rng: &mut ChaCha8Rng| pool.choose(rng).unwrap().clone();
                sb_assoc(&pick(&mut rng), &pick(&mut rng), &pick(&mut rng))?;
            }
        }
        // Fixed n = 4 corpora: all triples over a small generator corpus.
        let a = "a".to_string();
        let b = "b".to_string();
        let corpus: Vec<Diagram> = [
            GeneratorId::Id,
            GeneratorId::E(1),
            GeneratorId::E(2),
            GeneratorId::E(3),
            GeneratorId::FUp(a.clone(), b.clone()),
            GeneratorId::FDown(b.clone(), a.clone()),
            GeneratorId::WUp(a.clone(), a.clone()),
            GeneratorId::WDown(b.clone(), b.clone()),
        ]
        .iter()
        .map(|g| generator_diagram(g, 4, &x).unwrap())
        .collect();
        for d1 in &corpus {
            for d2 in &corpus {
                for d3 in &corpus {
                    label_assoc(d1, d2, d3)?;
                }
            }
        }
        let zero = "0".to_string();
        let one = "1".to_string();
        let x01 = xset(&["0", "1"]);
        let gcorpus: Vec<GhostDiagram> = [
            GeneratorId::Id,
            GeneratorId::E(1),
            GeneratorId::E(3),
            GeneratorId::FUp(one.clone(), zero.clone()),
            GeneratorId::FDown(zero.clone(), one.clone()),
            GeneratorId::WUp(one.clone(), one.clone()),
            GeneratorId::WDown(zero.clone(), zero.clone()),
        ]
        .iter()
        .map(|g| GhostDiagram::from_label(&generator_diagram(g, 4, &x01).unwrap()).unwrap())
        .collect();
        for g1 in &gcorpus {
            for g2 in &gcorpus {
                for g3 in &gcorpus {
                    ghost_assoc(g1, g2, g3)?;
                }
            }
        }
        let scorpus: Vec<BlobDiagram> = [
            SbGeneratorId::E(1),
            SbGeneratorId::E(2),
            SbGeneratorId::E(3),
            SbGeneratorId::F0,
            SbGeneratorId::FN,
        ]
        .iter()
        .map(|g| sb_generator(g, 4).unwrap())
        .chain([BlobDiagram::identity(4)])
        .collect();
        for b1 in &scorpus {
            for b2 in &scorpus {
                for b3 in &scorpus {
                    sb_assoc(b1, b2, b3)?;
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_4_presentation_relations() {
    criterion("presentation relations hold under the realisation map", || {
        let x = xset(&["0", "1"]);
        for n in 1u32..=4 {
            let report = verify_relations(n, &x).map_err(|e| e.to_string())?;
            if !report.all_passed() {
                return Err(format!(
                    "label relations fail at n={n}: {:?}",
                    report.failures
                ));
            }
            if report.total == 0 {
                return Err(format!("empty relation catalogue at n={n}"));
            }
        }
        for n in 2u32..=5 {
            let report = sb_verify_relations(n).map_err(|e| e.to_string())?;
            if !report.all_passed() {
                return Err(format!(
                    "blob relations fail at n={n}: {:?}",
                    report.failures
                ));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_5_ghost_label_isomorphism() {
    criterion("ghost and label multiplication agree through the isomorphism", || {
        let x = xset(&["0", "1"]);
        let map = ghost_param_map();
        let mut rng = ChaCha8Rng::seed_from_u64(202);
        for n in 1u32..=4 {
            let basis: Vec<Diagram> = enumerate_all(n, &x).collect();
            for _ in 0..200 {
                let d1 = basis.choose(&mut rng).unwrap();
                let d2 = basis.choose(&mut rng).unwrap();
                let g1 = GhostDiagram::from_label(d1).map_err(|e| e.to_string())?;
                let g2 = GhostDiagram::from_label(d2).map_err(|e| e.to_string())?;
                let (gm, gp) = ghost_concat(&g1, &g2).map_err(|e| e.to_string())?;
                let (lm, lp, _) = concat(d1, d2).map_err(|e| e.to_string())?;
                let specialized = Polynomial::from_monomial(lm)
                    .specialize(&map)
                    .map_err(|e| e.to_string())?;
                if specialized != Polynomial::from_monomial(gm)
                    || gp.to_label().map_err(|e| e.to_string())? != lp
                {
                    return Err(format!("dual-path mismatch for {d1} * {d2}"));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_6_decomposition_round_trip() {
    criterion("every basis diagram decomposes to a clean word", || {
        for n in 1u32..=3 {
            for labels in [&["a"][..], &["a", "b"][..]] {
                let x = xset(labels);
                for d in enumerate_all(n, &x) {
                    let w = decompose(&d).map_err(|e| e.to_string())?;
                    let r = phi_full(&w, n, &x).map_err(|e| e.to_string())?;
                    if !r.scalar.is_one() || r.loops != 0 || r.arcs != 0 || r.diagram != d {
                        return Err(format!("decompose({d}) does not evaluate cleanly"));
                    }
                    let expected = (d.boundary_links() / 2) as usize;
                    if count_label_generators(&w) != expected {
                        return Err(format!(
                            "decompose({d}) uses {} label generators, want {expected}",
                            count_label_generators(&w)
                        ));
                    }
                }
            }
        }
        Ok(())
    });
}

/// Samples a random generator word of the given maximum length.
fn random_word(n: u32, labels: &[&str], max_len: usize, rng: &mut ChaCha8Rng) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let a = labels.choose(rng).unwrap().to_string();
            let b = labels.choose(rng).unwrap().to_string();
            match rng.gen_range(0..5) {
                0 if n > 1 => Generator::E(rng.gen_range(1..n)),
                1 => Generator::FUp(a, b),
                2 => Generator::FDown(a, b),
                3 => Generator::WUp(a, b),
                _ => Generator::WDown(a, b),
            }
        })
        .collect()
}

#[test]
fn criterion_7_wt_canonical_forms() {
    criterion("WT forms are exact, parity-correct and unique", || {
        let mut rng = ChaCha8Rng::seed_from_u64(303);
        let mut seen: BTreeMap<(u32, Vec<String>, Diagram), (WPart, Word)> = BTreeMap::new();
        for _ in 0..1000 {
            let n = rng.gen_range(1..=3u32);
            let labels: &[&str] = if rng.gen_bool(0.5) { &["a"] } else { &["a", "b"] };
            let x = xset(labels);
            let word = random_word(n, labels, 10, &mut rng);
            let wt = to_wt_form(&word, n, &x).map_err(|e| e.to_string())?;
            // Exactness: the word and scalar · W · T have the same image.
            let original = phi_full(&word, n, &x).map_err(|e| e.to_string())?;
            let canonical = wt.word(n, &x).map_err(|e| e.to_string())?;
            let image = phi_full(&canonical, n, &x).map_err(|e| e.to_string())?;
            if !image.scalar.is_one() || image.arcs != 0 {
                return Err(format!("W·T image not a bare diagram for {word:?}"));
            }
            if original.diagram != image.diagram
                || original.scalar != wt.scalar
            {
                return Err(format!("WT form of {word:?} is not φ-equal to the word"));
            }
            // Parity: the W part is trivial exactly for even images.
            let is_even = original.diagram.parity() == Parity::Even;
            if is_even != matches!(wt.w, WPart::Identity) {
                return Err(format!("parity mismatch for {word:?}"));
            }
            // Uniqueness: equal image diagrams yield identical (W, T) parts.
            let key = (
                n,
                labels.iter().map(|s| s.to_string()).collect(),
                image.diagram.clone(),
            );
            match seen.get(&key) {
                None => {
                    seen.insert(key, (wt.w.clone(), wt.t.clone()));
                }
                Some((w, t)) if *w == wt.w && *t == wt.t => {}
                Some(_) => {
                    return Err(format!("two distinct WT forms share a diagram: {word:?}"));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_8_left_descent_sets() {
    criterion("left descent sets match the search oracle and exclusions", || {
        for n in 1u32..=3 {
            for labels in [&["a"][..], &["a", "b"][..]] {
                let x = xset(labels);
                let oracle =
                    even_reduced_oracle(n, &x, 6).map_err(|e| e.to_string())?;
                for (d, entry) in &oracle {
                    if entry.min_len == 0 {
                        continue;
                    }
                    let witness = &entry.witnesses[0];
                    let mut expect = entry.leading_generators();
                    expect.sort();
                    let got = left_descent_set(witness, n, &x).map_err(|e| e.to_string())?;
                    if got != expect {
                        return Err(format!(
                            "descent set mismatch for {d}: {got:?} vs {expect:?}"
                        ));
                    }
                }
            }
        }
        // Exclusion constraints on the T part of random WT forms.
        let mut rng = ChaCha8Rng::seed_from_u64(404);
        for _ in 0..300 {
            let n = rng.gen_range(1..=3u32);
            let labels: &[&str] = if rng.gen_bool(0.5) { &["a"] } else { &["a", "b"] };
            let x = xset(labels);
            let word = random_word(n, labels, 8, &mut rng);
            let wt = to_wt_form(&word, n, &x).map_err(|e| e.to_string())?;
            let WPart::W { j, .. } = wt.w else { continue };
            let descents = left_descent_set(&wt.t, n, &x).map_err(|e| e.to_string())?;
            for g in &descents {
                let violation = match g {
                    Generator::FDown(_, _) => j <= n - 1,
                    Generator::FUp(_, _) => j >= 1,
                    Generator::E(i) => *i < j,
                    _ => false,
                };
                if violation {
                    return Err(format!(
                        "excluded descent {g:?} in T part of {word:?} (j = {j})"
                    ));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_9_negative_controls() {
    criterion("deliberately broken inputs are rejected", || {
        // A mutated relation (β replaced by β²) must fail verification,
        // while the genuine relation passes.
        let x = xset(&["a", "b"]);
        let genuine = relation_catalogue(2, &x)
            .into_iter()
            .find(|r| r.id == "L19")
            .ok_or("relation L19 missing from catalogue")?;
        if !verify_relation(&genuine, 2, &x).map_err(|e| e.to_string())? {
            return Err("genuine L19 fails".into());
        }
        let mutated = Relation {
            id: "L19-mutated".into(),
            lhs: genuine.lhs.clone(),
            rhs_scalar: genuine.rhs_scalar.mul(&Monomial::param(ParamId::Beta)),
            rhs: genuine.rhs.clone(),
        };
        if verify_relation(&mutated, 2, &x).map_err(|e| e.to_string())? {
            return Err("mutated L19 passes verification".into());
        }
        // Misapplying the odd-n loop rule at even n would give κ·α1; the
        // correct even-n reduction gives κ·α2.
        let (m, _) = sb_multiply(&sb_loop_left(), &sb_loop_right()).map_err(|e| e.to_string())?;
        let correct = Monomial::from_pairs([(ParamId::Kappa, 1), (ParamId::SbAlpha(2), 1)]);
        let wrong = Monomial::from_pairs([(ParamId::Kappa, 1), (ParamId::SbAlpha(1), 1)]);
        if m != correct {
            return Err(format!("even-n loop product gives {m}"));
        }
        if m == wrong {
            return Err("even-n loop product matches the odd-n rule".into());
        }
        Ok(())
    });
}

#[test]
fn wt_parity_sanity() {
    // A single odd generator is its own W part with an empty T part.
    let x = xset(&["a"]);
    let wt = to_wt_form(&[Generator::WUp("a".into(), "a".into())], 2, &x).unwrap();
    assert!(matches!(wt.w, WPart::W { j: 0, .. }));
    assert!(wt.t.is_empty());
    assert_eq!(wt.scalar, Monomial::one());
    // The parity of a diagram is read off its top boundary count.
    let d = Diagram::identity(2, x);
    assert_eq!(d.parity(), Parity::Even);
}
