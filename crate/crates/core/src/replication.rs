//! Di- and tri-algebra terms, the replication rule for identities, the
//! encoding into the doubled alphabet, and the ideal-membership pipeline.
//!
//! The free tri-algebra on `X` is modeled inside the free algebra `F` on
//! `X ∪ Ẋ`: a leaf `x` encodes as `ẋ`, and with `φ` the dot-erasing
//! endomorphism the operations become `f |- g = φ(f)g`, `f -| g = fφ(g)`,
//! `f <> g = fg`. Membership of `f` in the ideal generated by relations `S`
//! of the free di/tri-algebra reduces to membership of the encodings in the
//! ideal of `F` generated by `enc(S) ∪ φ(enc(S))`.

use crate::gsb::{self, CompletionMode, Flavor, GsbError, GsbState};
use crate::lie_poly::{BracketTree, LieCtx, LiePoly};
use crate::poly::{self, TermMap};
use crate::symbols::{Alphabet, Gen};
use crate::words::Word;
use crate::Rat;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// The two replicated products of di-algebras plus the third of
/// tri-algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TriOp {
    /// `|-` : the left factor is collapsed by `φ`.
    Vdash,
    /// `-|` : the right factor is collapsed by `φ`.
    Dashv,
    /// `<>` : plain product; tri mode only.
    Perp,
}

/// A term over the di/tri operations with base-letter leaves.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TriTerm {
    Leaf(Gen),
    Node(TriOp, Box<TriTerm>, Box<TriTerm>),
}

impl TriTerm {
    pub fn leaf(g: Gen) -> TriTerm {
        TriTerm::Leaf(g)
    }

    pub fn node(op: TriOp, l: TriTerm, r: TriTerm) -> TriTerm {
        TriTerm::Node(op, Box::new(l), Box::new(r))
    }

    pub fn degree(&self) -> usize {
        match self {
            TriTerm::Leaf(_) => 1,
            TriTerm::Node(_, l, r) => l.degree() + r.degree(),
        }
    }

    pub fn uses_perp(&self) -> bool {
        match self {
            TriTerm::Leaf(_) => false,
            TriTerm::Node(op, l, r) => *op == TriOp::Perp || l.uses_perp() || r.uses_perp(),
        }
    }
}

/// A linear combination of di/tri terms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TriPoly {
    terms: BTreeMap<TriTerm, Rat>,
}

impl TriPoly {
    pub fn zero() -> TriPoly {
        TriPoly::default()
    }

    pub fn term(c: Rat, t: TriTerm) -> TriPoly {
        let mut p = TriPoly::zero();
        p.add_term(c, t);
        p
    }

    pub fn add_term(&mut self, c: Rat, t: TriTerm) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(c.clone(), t.clone());
        }
        out
    }

    pub fn sub(&self, other: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(-c.clone(), t.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<TriTerm, Rat> {
        &self.terms
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(TriTerm::degree).max().unwrap_or(0)
    }

    pub fn uses_perp(&self) -> bool {
        self.terms.keys().any(TriTerm::uses_perp)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Di,
    Tri,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Di => "di",
            Mode::Tri => "tri",
        }
    }

    fn completion(self) -> CompletionMode {
        match self {
            Mode::Di => CompletionMode::Di,
            Mode::Tri => CompletionMode::Full,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReplicationError {
    NotPolylinear(String),
    BadEmphasis(String),
    PerpInDiMode,
}

impl fmt::Display for ReplicationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReplicationError::NotPolylinear(m) => write!(f, "not a polylinear identity: {m}"),
            ReplicationError::BadEmphasis(m) => write!(f, "bad emphasis set: {m}"),
            ReplicationError::PerpInDiMode => {
                write!(f, "di mode admits only emphasis sets of size one")
            }
        }
    }
}

impl std::error::Error for ReplicationError {}

/// A polylinear identity of the base variety: a combination of bracket
/// trees whose leaves are the distinct variables `x_1 .. x_n`, written as
/// base letters of a variable alphabet.
pub type MagmaPoly = Vec<(Rat, BracketTree)>;

/// Relabel every monomial of a polylinear identity by emphasizing the
/// variables with indices in `emphasis` (1-based): a node whose children
/// contain emphasized leaves in positions `S` becomes the operation for
/// `S`, and `S = {}` falls back to the first position.
pub fn replicate(
    identity: &MagmaPoly,
    emphasis: &BTreeSet<usize>,
    mode: Mode,
) -> Result<TriPoly, ReplicationError> {
    if emphasis.is_empty() {
        return Err(ReplicationError::BadEmphasis("empty emphasis set".into()));
    }
    if mode == Mode::Di && emphasis.len() != 1 {
        return Err(ReplicationError::PerpInDiMode);
    }
    // polylinearity: every monomial carries the same variable set, each
    // exactly once
    let mut vars: Option<BTreeSet<usize>> = None;
    for (_, t) in identity {
        let mut leaves = Vec::new();
        t.frontier()
            .letters()
            .iter()
            .for_each(|g| leaves.push(g.index()));
        let set: BTreeSet<usize> = leaves.iter().copied().collect();
        if set.len() != leaves.len() {
            return Err(ReplicationError::NotPolylinear(
                "repeated variable in a monomial".into(),
            ));
        }
        match &vars {
            None => vars = Some(set),
            Some(v) if *v == set => {}
            Some(_) => {
                return Err(ReplicationError::NotPolylinear(
                    "monomials use different variable sets".into(),
                ))
            }
        }
    }
    let vars = vars.ok_or_else(|| ReplicationError::NotPolylinear("empty identity".into()))?;
    for h in emphasis {
        if !vars.contains(&(h - 1)) {
            return Err(ReplicationError::BadEmphasis(format!(
                "index {h} does not occur"
            )));
        }
    }
    let mut out = TriPoly::zero();
    for (c, t) in identity {
        out.add_term(c.clone(), replicate_tree(t, emphasis)?);
    }
    Ok(out)
}

fn replicate_tree(t: &BracketTree, emphasis: &BTreeSet<usize>) -> Result<TriTerm, ReplicationError> {
    match t {
        BracketTree::Leaf(g) => Ok(TriTerm::Leaf(*g)),
        BracketTree::Node(l, r) => {
            let lhit = subtree_emphasized(l, emphasis);
            let rhit = subtree_emphasized(r, emphasis);
            let op = match (lhit, rhit) {
                (true, true) => TriOp::Perp,
                (true, false) => TriOp::Dashv,
                (false, true) => TriOp::Vdash,
                (false, false) => TriOp::Dashv, // empty set falls back to position 1
            };
            Ok(TriTerm::node(
                op,
                replicate_tree(l, emphasis)?,
                replicate_tree(r, emphasis)?,
            ))
        }
    }
}

fn subtree_emphasized(t: &BracketTree, emphasis: &BTreeSet<usize>) -> bool {
    t.frontier()
        .letters()
        .iter()
        .any(|g| emphasis.contains(&(g.index() + 1)))
}

/// Dot-erasing endomorphism on term stores; idempotent.
pub fn phi(f: &TermMap, flavor: Flavor) -> TermMap {
    match flavor {
        Flavor::Lie => LiePoly::from_terms(f.clone())
            .expect("Lie stores hold LS keys")
            .erase_dots()
            .into_terms(),
        Flavor::Assoc => {
            let mut out = TermMap::new();
            for (w, c) in f {
                poly::add_term(&mut out, w.map_letters(Gen::erase_dot), c.clone());
            }
            out
        }
    }
}

/// Encode a di/tri term into the doubled alphabet: leaves gain dots,
/// `|-` collapses its left factor, `-|` its right, `<>` neither.
pub fn encode_term(t: &TriTerm, flavor: Flavor, ctx: &mut LieCtx) -> TermMap {
    match t {
        TriTerm::Leaf(g) => poly::single(Word::single(Gen::dotted(g.index()))),
        TriTerm::Node(op, l, r) => {
            let mut lt = encode_term(l, flavor, ctx);
            let mut rt = encode_term(r, flavor, ctx);
            match op {
                TriOp::Vdash => lt = phi(&lt, flavor),
                TriOp::Dashv => rt = phi(&rt, flavor),
                TriOp::Perp => {}
            }
            product(&lt, &rt, flavor, ctx)
        }
    }
}

fn product(f: &TermMap, g: &TermMap, flavor: Flavor, ctx: &mut LieCtx) -> TermMap {
    match flavor {
        Flavor::Lie => crate::lie_poly::bracket_terms(f, g, ctx),
        Flavor::Assoc => {
            let mut out = TermMap::new();
            for (u, cu) in f {
                for (v, cv) in g {
                    poly::add_term(&mut out, u.concat(v), cu * cv);
                }
            }
            out
        }
    }
}

/// Encode a combination of di/tri terms.
pub fn encode(p: &TriPoly, flavor: Flavor) -> TermMap {
    let mut ctx = LieCtx::new();
    let mut out = TermMap::new();
    for (t, c) in p.terms() {
        poly::add_scaled(&mut out, &encode_term(t, flavor, &mut ctx), c);
    }
    debug_assert!(
        in_v(&out, Mode::Tri),
        "encodings have positive dotted degree"
    );
    out
}

/// Membership of a polynomial in the model of the free di/tri-algebra:
/// every monomial has dotted degree exactly one (di) or at least one (tri).
pub fn in_v(f: &TermMap, mode: Mode) -> bool {
    f.keys().all(|w| match mode {
        Mode::Di => w.dotted_degree() == 1,
        Mode::Tri => w.dotted_degree() >= 1,
    })
}

/// Completion budgets for the membership pipeline.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    /// Completion degree; defaults to the target's leading degree plus the
    /// largest relation degree.
    pub degree: Option<usize>,
    pub steps: usize,
}

impl Default for Bounds {
    fn default() -> Bounds {
        Bounds {
            degree: None,
            steps: gsb::DEFAULT_STEP_BOUND,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Member,
    NonMember,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct MemberReport {
    pub outcome: Membership,
    pub normal_form: TermMap,
    pub state: GsbState,
}

/// Encode the relation set and complete `enc(S) ∪ φ(enc(S))`.
pub fn completed_state(
    relations: &[TriPoly],
    flavor: Flavor,
    mode: Mode,
    alphabet: &Alphabet,
    degree_bound: usize,
    step_bound: usize,
) -> Result<GsbState, GsbError> {
    let mut encoded: Vec<TermMap> = Vec::new();
    for r in relations {
        if mode == Mode::Di && r.uses_perp() {
            return Err(GsbError::InvalidInput(
                "di-mode relations cannot use the `<>` operation".into(),
            ));
        }
        // identity instances encode to zero and impose nothing
        let e = encode(r, flavor);
        if e.is_empty() {
            continue;
        }
        let fe = phi(&e, flavor);
        if !encoded.contains(&e) {
            encoded.push(e);
        }
        if !fe.is_empty() && !encoded.contains(&fe) {
            encoded.push(fe);
        }
    }
    gsb::complete(
        &encoded,
        flavor,
        mode.completion(),
        alphabet.clone(),
        degree_bound,
        step_bound,
    )
}

/// Membership verdict for a target already encoded over the state's
/// alphabet. A zero normal form always means membership; a nonzero one is
/// decisive only when the state is certified at the target's degree.
pub fn decide_with_state(state: &GsbState, enc_target: &TermMap) -> (Membership, TermMap) {
    let normal_form = state.normal_form(enc_target);
    let needed = poly::leading(enc_target).map(|(w, _)| w.len()).unwrap_or(0);
    let outcome = if normal_form.is_empty() {
        Membership::Member
    } else if state.is_complete() && state.complete_up_to() >= needed {
        Membership::NonMember
    } else {
        Membership::Inconclusive
    };
    (outcome, normal_form)
}

/// Decide whether `target` lies in the ideal generated by `relations`
/// inside the free di/tri-algebra on the alphabet.
pub fn member(
    relations: &[TriPoly],
    target: &TriPoly,
    flavor: Flavor,
    mode: Mode,
    alphabet: &Alphabet,
    bounds: Bounds,
) -> Result<MemberReport, GsbError> {
    let enc_target = encode(target, flavor);
    let needed = poly::leading(&enc_target).map(|(w, _)| w.len()).unwrap_or(0);
    let max_rel = relations.iter().map(TriPoly::max_degree).max().unwrap_or(0);
    let degree_bound = bounds.degree.unwrap_or(needed + max_rel);
    let state = completed_state(relations, flavor, mode, alphabet, degree_bound, bounds.steps)?;
    let (outcome, normal_form) = decide_with_state(&state, &enc_target);
    Ok(MemberReport {
        outcome,
        normal_form,
        state,
    })
}

/// Linear basis of the quotient of the free di/tri-algebra by the ideal
/// generated by `relations`, up to the given degree.
pub fn free_basis(
    relations: &[TriPoly],
    flavor: Flavor,
    mode: Mode,
    alphabet: &Alphabet,
    max_deg: usize,
    step_bound: usize,
) -> Result<Vec<Word>, GsbError> {
    let state = completed_state(relations, flavor, mode, alphabet, max_deg, step_bound)?;
    state.enumerate_reduced(max_deg, |w| match mode {
        Mode::Di => w.dotted_degree() == 1,
        Mode::Tri => w.dotted_degree() >= 1,
    })
}

// ----------------------------------------------------- identity catalogs

/// A variable alphabet `x1 > x2 > ... > xn` for stating identities.
pub fn identity_vars(n: usize) -> Alphabet {
    Alphabet::double((1..=n).map(|i| format!("x{i}"))).expect("fresh names")
}

/// Anticommutativity `[x1 x2] + [x2 x1]` as a polylinear identity.
pub fn anticommutativity() -> MagmaPoly {
    let x1 = BracketTree::leaf(Gen::base(0));
    let x2 = BracketTree::leaf(Gen::base(1));
    vec![
        (Rat::one(), BracketTree::node(x1.clone(), x2.clone())),
        (Rat::one(), BracketTree::node(x2, x1)),
    ]
}

/// The Jacobi identity `[[x1 x2] x3] + [[x2 x3] x1] + [[x3 x1] x2]`.
pub fn jacobi() -> MagmaPoly {
    let x = |i: usize| BracketTree::leaf(Gen::base(i));
    let pair = |i: usize, j: usize| BracketTree::node(x(i), x(j));
    vec![
        (Rat::one(), BracketTree::node(pair(0, 1), x(2))),
        (Rat::one(), BracketTree::node(pair(1, 2), x(0))),
        (Rat::one(), BracketTree::node(pair(2, 0), x(1))),
    ]
}

/// Associativity `[[x1 x2] x3] - [x1 [x2 x3]]`.
pub fn associativity() -> MagmaPoly {
    let x = |i: usize| BracketTree::leaf(Gen::base(i));
    vec![
        (
            Rat::one(),
            BracketTree::node(BracketTree::node(x(0), x(1)), x(2)),
        ),
        (
            -Rat::one(),
            BracketTree::node(x(0), BracketTree::node(x(1), x(2))),
        ),
    ]
}

/// Commutativity `[x1 x2] - [x2 x1]`.
pub fn commutativity() -> MagmaPoly {
    let x = |i: usize| BracketTree::leaf(Gen::base(i));
    vec![
        (Rat::one(), BracketTree::node(x(0), x(1))),
        (-Rat::one(), BracketTree::node(x(1), x(0))),
    ]
}

/// The replicated-language identities stating that the inner operation of a
/// non-emphasized argument is immaterial:
/// `(x1 ∘S x2) |- x3` and `x1 -| (x2 ∘S x3)` do not depend on `∘S`.
pub fn slot_independence_identities() -> Vec<TriPoly> {
    let x = |i: usize| TriTerm::Leaf(Gen::base(i));
    let ops = [TriOp::Vdash, TriOp::Dashv, TriOp::Perp];
    let mut out = Vec::new();
    for k in 0..ops.len() {
        for l in k + 1..ops.len() {
            // inner product feeds the collapsed left slot of |-
            let a = TriTerm::node(TriOp::Vdash, TriTerm::node(ops[k], x(0), x(1)), x(2));
            let b = TriTerm::node(TriOp::Vdash, TriTerm::node(ops[l], x(0), x(1)), x(2));
            let mut p = TriPoly::term(Rat::one(), a);
            p.add_term(-Rat::one(), b);
            out.push(p);
            // inner product feeds the collapsed right slot of -|
            let a = TriTerm::node(TriOp::Dashv, x(0), TriTerm::node(ops[k], x(1), x(2)));
            let b = TriTerm::node(TriOp::Dashv, x(0), TriTerm::node(ops[l], x(1), x(2)));
            let mut p = TriPoly::term(Rat::one(), a);
            p.add_term(-Rat::one(), b);
            out.push(p);
        }
    }
    out
}

/// The replicated skew-symmetry pair: `(x1 |- x2) + (x2 -| x1)` and
/// `(x1 <> x2) + (x2 <> x1)`.
pub fn tri_lie_skew_identities() -> Vec<TriPoly> {
    let x = |i: usize| TriTerm::Leaf(Gen::base(i));
    let mut s1 = TriPoly::term(Rat::one(), TriTerm::node(TriOp::Vdash, x(0), x(1)));
    s1.add_term(Rat::one(), TriTerm::node(TriOp::Dashv, x(1), x(0)));
    let mut s2 = TriPoly::term(Rat::one(), TriTerm::node(TriOp::Perp, x(0), x(1)));
    s2.add_term(Rat::one(), TriTerm::node(TriOp::Perp, x(1), x(0)));
    vec![s1, s2]
}

/// The five defining identities of Lie tri-algebras in terms of `|-` and
/// `<>` (skew-symmetry is stated separately):
/// two exchange laws, the left Leibniz law, the mixed law, and the Jacobi
/// law for `<>`.
pub fn tri_lie_identities() -> Vec<TriPoly> {
    let x = |i: usize| TriTerm::Leaf(Gen::base(i));
    let n = TriTerm::node;
    let one = Rat::one;
    let mut out = Vec::new();

    // [[x1|-x2]|-x3] + [[x2|-x1]|-x3]
    let mut p = TriPoly::term(one(), n(TriOp::Vdash, n(TriOp::Vdash, x(0), x(1)), x(2)));
    p.add_term(one(), n(TriOp::Vdash, n(TriOp::Vdash, x(1), x(0)), x(2)));
    out.push(p);

    // [[x1<>x2]|-x3] - [[x1|-x2]|-x3]
    let mut p = TriPoly::term(one(), n(TriOp::Vdash, n(TriOp::Perp, x(0), x(1)), x(2)));
    p.add_term(-one(), n(TriOp::Vdash, n(TriOp::Vdash, x(0), x(1)), x(2)));
    out.push(p);

    // [[x1|-x2]|-x3] - [x1|-[x2|-x3]] + [x2|-[x1|-x3]]
    let mut p = TriPoly::term(one(), n(TriOp::Vdash, n(TriOp::Vdash, x(0), x(1)), x(2)));
    p.add_term(-one(), n(TriOp::Vdash, x(0), n(TriOp::Vdash, x(1), x(2))));
    p.add_term(one(), n(TriOp::Vdash, x(1), n(TriOp::Vdash, x(0), x(2))));
    out.push(p);

    // [[x1|-x2]<>x3] - [x1|-[x2<>x3]] - [[x1|-x3]<>x2]
    let mut p = TriPoly::term(one(), n(TriOp::Perp, n(TriOp::Vdash, x(0), x(1)), x(2)));
    p.add_term(-one(), n(TriOp::Vdash, x(0), n(TriOp::Perp, x(1), x(2))));
    p.add_term(-one(), n(TriOp::Perp, n(TriOp::Vdash, x(0), x(2)), x(1)));
    out.push(p);

    // [[x1<>x2]<>x3] + [[x2<>x3]<>x1] + [[x3<>x1]<>x2]
    let mut p = TriPoly::term(one(), n(TriOp::Perp, n(TriOp::Perp, x(0), x(1)), x(2)));
    p.add_term(one(), n(TriOp::Perp, n(TriOp::Perp, x(1), x(2)), x(0)));
    p.add_term(one(), n(TriOp::Perp, n(TriOp::Perp, x(2), x(0)), x(1)));
    out.push(p);

    out
}

/// Random term over two base letters, for randomized checks.
#[cfg(test)]
pub(crate) fn random_tri_term(rng: &mut impl rand::Rng, max_deg: usize, mode: Mode) -> TriTerm {
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
        random_tri_term(rng, ld, mode),
        random_tri_term(rng, max_deg - ld, mode),
    )
}
