//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! 1. Exact reproduction of the two-generator Leibniz example: completion
//!    output and basis listing, byte for byte, in under a second.
//! 2. Free Leibniz dimensions d^n for d in 1..=3, degrees 1..=5, with the
//!    zero-ideal oracle confirming independence.
//! 3. Fifty randomized instances where the certified engine and the
//!    linear-algebra oracle must agree on every monomial up to degree 4.
//! 4. Replication of anticommutativity and the Jacobi law against the
//!    defining tri-Lie identities, both directions closing to zero in the
//!    encoded picture.
//! 5. The four commutation families of the tri-commutator envelope form a
//!    Gröbner–Shirshov basis for every valid corpus table; injected
//!    single-product corruptions are detected.
//! 6. PBW counts from three independent routes agree per degree.
//! 7. The perp-envelope relations verify and reduced-monomial counts do
//!    not depend on the multiplication table.
//! 8. Engine invariants on randomized inputs: the averaging law, dot
//!    erasure idempotence, normal-form ideal differences, determinism.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::prelude::*;
use trigsb::envelopes::{self, MultTable, TableKind, TableOp};
use trigsb::gsb::{self, Flavor};
use trigsb::lie_poly::LiePoly;
use trigsb::oracle;
use trigsb::replication::{self, Mode, TriOp, TriPoly, TriTerm};
use trigsb::symbols::{Alphabet, Gen};
use trigsb::words::Word;
use trigsb::{rat, Rat, TermMap};
use trigsb_cli::commands::{run, Command, Flags};
use trigsb_cli::parse_problem;

const LEIBNIZ: &str = "variety lie\nmode di\ngens x > y\nrels (x -| y) + (y -| x) + y;\n";

fn xy() -> Alphabet {
    Alphabet::double(["x", "y"]).unwrap()
}

fn sub(a: &TermMap, b: &TermMap) -> TermMap {
    use num_traits::Zero;
    let mut out = a.clone();
    for (w, c) in b {
        let entry = out.entry(w.clone()).or_insert_with(Rat::zero);
        *entry -= c;
        if entry.is_zero() {
            out.remove(w);
        }
    }
    out
}

fn random_term(rng: &mut StdRng, max_deg: usize, mode: Mode) -> TriTerm {
    if max_deg <= 1 || rng.random_range(0..4) == 0 {
        return TriTerm::Leaf(Gen::base(rng.random_range(0..2)));
    }
    let ld = rng.random_range(1..max_deg);
    let ops: &[TriOp] = match mode {
        Mode::Di => &[TriOp::Vdash, TriOp::Dashv],
        Mode::Tri => &[TriOp::Vdash, TriOp::Dashv, TriOp::Perp],
    };
    TriTerm::node(
        ops[rng.random_range(0..ops.len())],
        random_term(rng, ld, mode),
        random_term(rng, max_deg - ld, mode),
    )
}

fn random_relations(rng: &mut StdRng, mode: Mode) -> Vec<TriPoly> {
    loop {
        let rels: Vec<TriPoly> = (0..rng.random_range(1..=2))
            .map(|_| {
                let mut p = TriPoly::zero();
                for _ in 0..rng.random_range(1..=2) {
                    let c = [-2i64, -1, 1, 2][rng.random_range(0..4)];
                    p.add_term(rat(c), random_term(rng, 2, mode));
                }
                p
            })
            .filter(|p| !p.is_zero())
            .collect();
        if !rels.is_empty() {
            return rels;
        }
    }
}

// ---------------------------------------------------------------- corpus

fn e(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![rat(0); n];
    v[i] = rat(1);
    v
}

fn scaled(n: usize, i: usize, c: i64) -> Vec<Rat> {
    let mut v = vec![rat(0); n];
    v[i] = rat(c);
    v
}

fn abelian_lie(n: usize) -> MultTable {
    MultTable::new((1..=n).map(|i| format!("e{i}")))
}

fn nonabelian_lie2() -> MultTable {
    let mut t = MultTable::new(["x", "y"]);
    t.set(TableOp::Bracket, 0, 1, e(2, 1)).unwrap();
    t.set(TableOp::Bracket, 1, 0, scaled(2, 1, -1)).unwrap();
    t
}

fn zero_tri(n: usize) -> MultTable {
    MultTable::new((1..=n).map(|i| format!("e{i}")))
}

fn all_equal_bracket_tri() -> MultTable {
    let base = nonabelian_lie2();
    let mut t = MultTable::new(base.labels().to_vec());
    for i in 0..2 {
        for j in 0..2 {
            let v = base.get(TableOp::Bracket, i, j);
            for op in [TableOp::Vdash, TableOp::Dashv, TableOp::Perp] {
                t.set(op, i, j, v.clone()).unwrap();
            }
        }
    }
    t
}

fn degenerate_tri2() -> MultTable {
    let mut t = MultTable::new(["e1", "e2"]);
    t.set(TableOp::Vdash, 0, 0, e(2, 1)).unwrap();
    t.set(TableOp::Dashv, 0, 0, scaled(2, 1, -1)).unwrap();
    t
}

fn degenerate_tri3() -> MultTable {
    let mut t = MultTable::new(["e1", "e2", "e3"]);
    let mut v = vec![rat(0); 3];
    v[1] = rat(1);
    v[2] = rat(1);
    t.set(TableOp::Vdash, 0, 0, v.clone()).unwrap();
    t.set(TableOp::Dashv, 0, 0, v.iter().map(|c| -c).collect())
        .unwrap();
    t
}

fn tri_corpus() -> Vec<MultTable> {
    vec![
        zero_tri(1),
        zero_tri(2),
        zero_tri(3),
        all_equal_bracket_tri(),
        degenerate_tri2(),
        degenerate_tri3(),
    ]
}

// -------------------------------------------------------------- criteria

#[test]
fn criterion_1_worked_example_exact() {
    let start = Instant::now();
    let problem = parse_problem(LEIBNIZ).unwrap();
    let complete = run(&problem, &Command::Complete, &Flags::default());
    assert_eq!(complete.exit, 0);
    assert_eq!(
        complete.report,
        "gens: x > y\n\
         flavor: lie\n\
         mode: di\n\
         certified degree: 6 (complete)\n\
         relations (2):\n\
         y\n\
         [y. x] + y.\n\
         parked (0):\n"
    );
    let basis = run(
        &problem,
        &Command::Basis,
        &Flags {
            max_deg: Some(5),
            ..Flags::default()
        },
    );
    assert_eq!(basis.exit, 0);
    assert_eq!(
        basis.report,
        "basis up to degree 5 (6 monomials, certified 5):\n\
         y.\n\
         x.\n\
         [x. x]\n\
         [[x. x] x]\n\
         [[[x. x] x] x]\n\
         [[[[x. x] x] x] x]\n"
    );
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("criterion 1 (worked example, exact output): PASS ({elapsed:?})");
}

#[test]
fn criterion_2_free_leibniz_dimensions() {
    let start = Instant::now();
    for d in 1..=3usize {
        let alphabet = Alphabet::double((1..=d).map(|i| format!("g{i}"))).unwrap();
        let basis = replication::free_basis(
            &[],
            Flavor::Lie,
            Mode::Di,
            &alphabet,
            5,
            gsb::DEFAULT_STEP_BOUND,
        )
        .unwrap();
        let mut counts = vec![0usize; 5];
        for w in &basis {
            counts[w.len() - 1] += 1;
        }
        for n in 1..=5usize {
            assert_eq!(counts[n - 1], d.pow(n as u32), "d={d} n={n}");
        }
        // the oracle's free dimensions agree
        assert_eq!(
            oracle::free_dimension(Mode::Di, Flavor::Lie, d, 5),
            counts
        );
        // independence: the monomials are pairwise distinct basis words and
        // none lies in the zero ideal
        let distinct: BTreeSet<&Word> = basis.iter().collect();
        assert_eq!(distinct.len(), basis.len());
        for w in &basis {
            let probe = TermMap::from([(w.clone(), rat(1))]);
            assert!(!oracle::member_span(&[], &probe, Flavor::Lie, &alphabet, 5).unwrap());
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "took {elapsed:?}");
    println!("criterion 2 (free Leibniz dimensions d^n): PASS ({elapsed:?})");
}

#[test]
fn criterion_3_engine_agrees_with_oracle() {
    let start = Instant::now();
    let alphabet = xy();
    let mut rng = StdRng::seed_from_u64(2024);
    let letters = alphabet.gens_desc();
    let monomials: Vec<Word> = oracle::monomial_basis(&letters, Flavor::Lie, 4);
    let mut disagreements = 0usize;
    for instance in 0..50 {
        let mode = if instance % 2 == 0 { Mode::Di } else { Mode::Tri };
        let rels = random_relations(&mut rng, mode);
        let state = replication::completed_state(
            &rels,
            Flavor::Lie,
            mode,
            &alphabet,
            4,
            gsb::DEFAULT_STEP_BOUND,
        )
        .unwrap();
        assert!(
            state.is_complete() && state.complete_up_to() >= 4,
            "instance {instance} not certified"
        );
        let rels_enc: Vec<TermMap> = rels
            .iter()
            .flat_map(|r| {
                let e = replication::encode(r, Flavor::Lie);
                let f = replication::phi(&e, Flavor::Lie);
                [e, f]
            })
            .filter(|t| !t.is_empty())
            .collect();
        let span = oracle::ideal_span(&rels_enc, Flavor::Lie, &alphabet, 4);
        for w in &monomials {
            let keep = match mode {
                Mode::Di => w.dotted_degree() == 1,
                Mode::Tri => w.dotted_degree() >= 1,
            };
            if !keep {
                continue;
            }
            let probe = TermMap::from([(w.clone(), rat(1))]);
            let by_engine = state.normal_form(&probe).is_empty();
            let by_oracle = span.contains(&probe).unwrap();
            if by_engine != by_oracle {
                disagreements += 1;
                eprintln!(
                    "instance {instance} mode {mode:?} disagrees on {:?}",
                    w.letters()
                );
            }
        }
    }
    assert_eq!(disagreements, 0);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 300.0, "took {elapsed:?}");
    println!("criterion 3 (50 randomized membership instances, engine vs oracle): PASS ({elapsed:?})");
}

#[test]
fn criterion_4_replication_closures() {
    let start = Instant::now();
    // every replicate of anticommutativity and the Jacobi law encodes to
    // zero: the encoded operations satisfy the replicated identities
    let mut replicates = Vec::new();
    for (identity, nvars) in [
        (replication::anticommutativity(), 2usize),
        (replication::jacobi(), 3usize),
    ] {
        for mask in 1usize..(1 << nvars) {
            let h: BTreeSet<usize> = (1..=nvars).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            let p = replication::replicate(&identity, &h, Mode::Tri).unwrap();
            assert!(
                replication::encode(&p, Flavor::Lie).is_empty(),
                "replicate H={h:?} does not close"
            );
            replicates.push(p);
        }
    }
    // and conversely every defining tri-Lie identity encodes to zero
    for (k, p) in replication::tri_lie_skew_identities()
        .into_iter()
        .chain(replication::tri_lie_identities())
        .enumerate()
    {
        assert!(
            replication::encode(&p, Flavor::Lie).is_empty(),
            "identity {k} does not close"
        );
    }
    // the degree-two replicates are exactly the skew-symmetry laws
    let skew = replication::tri_lie_skew_identities();
    let h2: BTreeSet<usize> = [2].into_iter().collect();
    let h12: BTreeSet<usize> = [1, 2].into_iter().collect();
    assert_eq!(
        replication::replicate(&replication::anticommutativity(), &h2, Mode::Tri).unwrap(),
        skew[0]
    );
    assert_eq!(
        replication::replicate(&replication::anticommutativity(), &h12, Mode::Tri).unwrap(),
        skew[1]
    );
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!("criterion 4 (replication closures): PASS ({elapsed:?})");
}

#[test]
fn criterion_5_commutation_families_are_gsb() {
    let start = Instant::now();
    for table in tri_corpus() {
        let report = envelopes::validate_table(&table, TableKind::TriLie);
        assert!(report.ok, "{:?}: {:?}", table.labels(), report.violation);
        let p = envelopes::present_minus(&table).unwrap();
        assert!(
            envelopes::verify_minus_gsb(&p, 4).unwrap(),
            "table {:?}",
            table.labels()
        );
    }
    // corruption of one perp product (and its skew partner): the mixed law
    // breaks and a composition fails
    let mut corrupted = all_equal_bracket_tri();
    corrupted.set(TableOp::Perp, 0, 1, e(2, 0)).unwrap();
    corrupted.set(TableOp::Perp, 1, 0, scaled(2, 0, -1)).unwrap();
    assert!(!envelopes::validate_table(&corrupted, TableKind::TriLie).ok);
    let p = envelopes::present_minus(&corrupted).unwrap();
    assert!(!envelopes::verify_minus_gsb(&p, 4).unwrap());
    // corruption of one left product without its partner: the skew shape
    // is rejected before any completion runs
    let mut skewless = all_equal_bracket_tri();
    skewless.set(TableOp::Dashv, 0, 1, e(2, 0)).unwrap();
    assert!(envelopes::present_minus(&skewless).is_err());
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 120.0, "took {elapsed:?}");
    println!("criterion 5 (commutation families verify; corruptions detected): PASS ({elapsed:?})");
}

#[test]
fn criterion_6_pbw_counts_three_routes() {
    let start = Instant::now();
    for table in tri_corpus() {
        let p = envelopes::present_minus(&table).unwrap();
        let split = p.split.as_ref().unwrap();
        let pbw = envelopes::pbw_basis_minus(&p, 4).unwrap();
        let state = envelopes::complete_presentation(&p, 4, gsb::DEFAULT_STEP_BOUND)
            .unwrap()
            .expect("corpus tables are positive-dimensional");
        let reduced = state
            .enumerate_reduced(4, |w| w.dotted_degree() >= 1)
            .unwrap();
        let mut reduced_counts = vec![0usize; 4];
        for w in &reduced {
            reduced_counts[w.len() - 1] += 1;
        }
        for d in 1..=4usize {
            let combinatorial = envelopes::pbw_count(split.x1.len(), table.dim(), d);
            assert_eq!(
                pbw.counts[d - 1] as u128,
                combinatorial,
                "table {:?} degree {d}: pbw vs combinatorial",
                table.labels()
            );
            assert_eq!(
                reduced_counts[d - 1] as u128, combinatorial,
                "table {:?} degree {d}: reduced words vs combinatorial",
                table.labels()
            );
        }
        assert_eq!(pbw.monomials, reduced);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!("criterion 6 (PBW counts, three routes): PASS ({elapsed:?})");
}

#[test]
fn criterion_7_perp_envelope_pbw_pair() {
    let start = Instant::now();
    let mut all_counts = Vec::new();
    for table in [abelian_lie(2), nonabelian_lie2()] {
        let p = envelopes::present_perp(&table).unwrap();
        assert!(envelopes::verify_perp_gsb(&p, 4).unwrap());
        let state = envelopes::complete_presentation(&p, 4, gsb::DEFAULT_STEP_BOUND)
            .unwrap()
            .unwrap();
        let reduced = state
            .enumerate_reduced(3, |w| w.dotted_degree() >= 1)
            .unwrap();
        let mut counts = vec![0usize; 3];
        for w in &reduced {
            counts[w.len() - 1] += 1;
        }
        all_counts.push(counts);
    }
    assert_eq!(
        all_counts[0], all_counts[1],
        "reduced-monomial counts depend on the table"
    );
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!("criterion 7 (perp envelope PBW pair): PASS ({elapsed:?})");
}

#[test]
fn criterion_8_engine_invariants_randomized() {
    let start = Instant::now();
    let alphabet = xy();
    let mut rng = StdRng::seed_from_u64(4096);

    // averaging law and idempotence on 100 random pairs
    for _ in 0..100 {
        let f = replication::encode(
            &TriPoly::term(rat(1), random_term(&mut rng, 3, Mode::Tri)),
            Flavor::Lie,
        );
        let g = replication::encode(
            &TriPoly::term(rat(1), random_term(&mut rng, 3, Mode::Tri)),
            Flavor::Lie,
        );
        let (pf, pg) = (
            LiePoly::from_terms(replication::phi(&f, Flavor::Lie)).unwrap(),
            LiePoly::from_terms(replication::phi(&g, Flavor::Lie)).unwrap(),
        );
        let (f, g) = (
            LiePoly::from_terms(f).unwrap(),
            LiePoly::from_terms(g).unwrap(),
        );
        let lhs = replication::phi(pf.bracket(&g).terms(), Flavor::Lie);
        let mid = replication::phi(f.bracket(&pg).terms(), Flavor::Lie);
        let rhs = pf.bracket(&pg).into_terms();
        assert_eq!(lhs, mid);
        assert_eq!(mid, rhs);
        let once = replication::phi(f.terms(), Flavor::Lie);
        assert_eq!(replication::phi(&once, Flavor::Lie), once);
    }

    // normal-form differences lie in the ideal span, on 100 random inputs
    let letters = alphabet.gens_desc();
    let v_monomials: Vec<Word> = oracle::monomial_basis(&letters, Flavor::Lie, 3)
        .into_iter()
        .filter(|w| w.dotted_degree() >= 1)
        .collect();
    for k in 0..100 {
        let mode = if k % 2 == 0 { Mode::Di } else { Mode::Tri };
        let rels = random_relations(&mut rng, mode);
        let state = replication::completed_state(
            &rels,
            Flavor::Lie,
            mode,
            &alphabet,
            3,
            gsb::DEFAULT_STEP_BOUND,
        )
        .unwrap();
        let rels_enc: Vec<TermMap> = rels
            .iter()
            .flat_map(|r| {
                let e = replication::encode(r, Flavor::Lie);
                let fe = replication::phi(&e, Flavor::Lie);
                [e, fe]
            })
            .filter(|t| !t.is_empty())
            .collect();
        let span = oracle::ideal_span(&rels_enc, Flavor::Lie, &alphabet, 3);
        let mut f = TermMap::new();
        for _ in 0..rng.random_range(1..=2) {
            let w = v_monomials[rng.random_range(0..v_monomials.len())].clone();
            f.insert(w, rat([-2i64, -1, 1, 2][rng.random_range(0..4)]));
        }
        let r = state.normal_form(&f);
        let diff = sub(&f, &r);
        assert!(span.contains(&diff).unwrap(), "instance {k}");
    }

    // determinism: identical inputs, byte-identical states
    for k in 0..100 {
        let mode = if k % 2 == 0 { Mode::Di } else { Mode::Tri };
        let rels = random_relations(&mut rng, mode);
        let s1 = replication::completed_state(
            &rels,
            Flavor::Lie,
            mode,
            &alphabet,
            3,
            gsb::DEFAULT_STEP_BOUND,
        )
        .unwrap();
        let s2 = replication::completed_state(
            &rels,
            Flavor::Lie,
            mode,
            &alphabet,
            3,
            gsb::DEFAULT_STEP_BOUND,
        )
        .unwrap();
        assert_eq!(s1.to_cache_string(), s2.to_cache_string());
    }

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 120.0, "took {elapsed:?}");
    println!("criterion 8 (randomized engine invariants): PASS ({elapsed:?})");
}
