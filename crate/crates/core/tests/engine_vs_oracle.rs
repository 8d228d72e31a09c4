//! Integration cross-check in the associative variety: the replicated
//! membership pipeline against the linear-algebra oracle on randomized
//! instances. The Lie-variety counterpart runs in the acceptance suite.

use rand::prelude::*;
use trigsb::gsb::{self, Flavor};
use trigsb::oracle;
use trigsb::replication::{self, Mode, TriOp, TriPoly, TriTerm};
use trigsb::symbols::{Alphabet, Gen};
use trigsb::words::Word;
use trigsb::{rat, TermMap};

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

#[test]
fn assoc_pipeline_agrees_with_oracle() {
    let alphabet = Alphabet::double(["x", "y"]).unwrap();
    let mut rng = StdRng::seed_from_u64(31337);
    let letters = alphabet.gens_desc();
    let monomials: Vec<Word> = oracle::monomial_basis(&letters, Flavor::Assoc, 3);
    for instance in 0..20 {
        let mode = if instance % 2 == 0 { Mode::Di } else { Mode::Tri };
        let rels: Vec<TriPoly> = loop {
            let rels: Vec<TriPoly> = (0..rng.random_range(1..=2))
                .map(|_| {
                    let mut p = TriPoly::zero();
                    for _ in 0..rng.random_range(1..=2) {
                        let c = [-2i64, -1, 1, 2][rng.random_range(0..4)];
                        p.add_term(rat(c), random_term(&mut rng, 2, mode));
                    }
                    p
                })
                .filter(|p| !p.is_zero())
                .collect();
            if !rels.is_empty() {
                break rels;
            }
        };
        let state = replication::completed_state(
            &rels,
            Flavor::Assoc,
            mode,
            &alphabet,
            3,
            gsb::DEFAULT_STEP_BOUND,
        )
        .unwrap();
        assert!(state.is_complete(), "instance {instance} not certified");
        let rels_enc: Vec<TermMap> = rels
            .iter()
            .flat_map(|r| {
                let e = replication::encode(r, Flavor::Assoc);
                let f = replication::phi(&e, Flavor::Assoc);
                [e, f]
            })
            .filter(|t| !t.is_empty())
            .collect();
        let span = oracle::ideal_span(&rels_enc, Flavor::Assoc, &alphabet, 3);
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
            assert_eq!(
                by_engine,
                by_oracle,
                "instance {instance} mode {mode:?} word {:?}",
                w.letters()
            );
        }
    }
}

#[test]
fn perp_rejected_in_di_pipeline() {
    let alphabet = Alphabet::double(["x", "y"]).unwrap();
    let rel = TriPoly::term(
        rat(1),
        TriTerm::node(
            TriOp::Perp,
            TriTerm::Leaf(Gen::base(0)),
            TriTerm::Leaf(Gen::base(1)),
        ),
    );
    let err = replication::completed_state(
        &[rel],
        Flavor::Lie,
        Mode::Di,
        &alphabet,
        3,
        gsb::DEFAULT_STEP_BOUND,
    )
    .unwrap_err();
    assert!(matches!(err, gsb::GsbError::InvalidInput(_)));
}
