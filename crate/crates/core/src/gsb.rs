//! Normal forms, compositions and degree-bounded completion, generic over
//! the Lie and associative flavors.
//!
//! A state holds a self-reduced set of monic relations. Completion
//! repeatedly enumerates composition witnesses up to the degree bound in
//! (degree, word, pair) order, reduces each composition to normal form, and
//! adds the nonzero ones; a run finishes when a full pass over the final
//! relation set leaves every composition trivial, which certifies the state
//! up to the bound. With a degree-compatible order, eliminations never
//! increase degree, so a state certified to degree `d` decides membership
//! for elements with leading degree at most `d`.

use crate::lie_poly::{self, LieCtx};
use crate::lyndon;
use crate::poly::{self, TermMap};
use crate::symbols::Alphabet;
use crate::text;
use crate::words::{self, Word};
use num_traits::One;
use std::fmt;
use std::path::Path;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Lie,
    Assoc,
}

impl Flavor {
    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Lie => "lie",
            Flavor::Assoc => "assoc",
        }
    }
}

/// Completion policy. `Di` parks any new relation whose leading word has two
/// or more dotted letters: those can never act on monomials that are linear
/// in the dotted letters, so they are kept out of the active set and out of
/// the triviality obligations, and retained for audit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompletionMode {
    Full,
    Di,
}

impl CompletionMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CompletionMode::Full => "full",
            CompletionMode::Di => "di",
        }
    }
}

pub const DEFAULT_STEP_BOUND: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GsbError {
    ZeroRelation,
    Uncertified { needed: usize, certified: usize },
    InvalidInput(String),
    Cache(String),
}

impl fmt::Display for GsbError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GsbError::ZeroRelation => write!(f, "zero polynomial among the input relations"),
            GsbError::Uncertified { needed, certified } => write!(
                f,
                "state certified only to degree {certified}, degree {needed} required"
            ),
            GsbError::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            GsbError::Cache(msg) => write!(f, "cache: {msg}"),
        }
    }
}

impl std::error::Error for GsbError {}

/// A monic nonzero relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    terms: TermMap,
}

impl Relation {
    fn monic(terms: TermMap) -> Result<Relation, GsbError> {
        let terms = poly::monic(&terms).map_err(|_| GsbError::ZeroRelation)?;
        Ok(Relation { terms })
    }

    pub fn terms(&self) -> &TermMap {
        &self.terms
    }

    pub fn leading(&self) -> &Word {
        poly::leading(&self.terms).expect("relations are nonzero").0
    }
}

/// Replace the occurrence of a relation's leading word inside `w` by the
/// relation: the result is monic with leading word exactly `w`.
fn eliminate(w: &Word, at: usize, rel: &Relation, flavor: Flavor, ctx: &mut LieCtx) -> TermMap {
    match flavor {
        Flavor::Assoc => {
            let lead_len = rel.leading().len();
            let prefix = &w.letters()[..at];
            let suffix = &w.letters()[at + lead_len..];
            let mut out = TermMap::new();
            for (t, c) in rel.terms() {
                let mut letters = Vec::with_capacity(prefix.len() + t.len() + suffix.len());
                letters.extend_from_slice(prefix);
                letters.extend_from_slice(t.letters());
                letters.extend_from_slice(suffix);
                poly::add_term(&mut out, Word::new(letters), c.clone());
            }
            out
        }
        Flavor::Lie => {
            let scheme = lyndon::special_bracketing(w, at, rel.leading())
                .expect("caller located the occurrence in an LS word");
            let out = lie_poly::substitute_terms(&scheme, rel.terms(), ctx);
            let (lw, lc) = poly::leading(&out).expect("substitution of a monic relation");
            assert!(
                lw == w && lc.is_one(),
                "internal invariant violated: special bracketing substitution \
                 does not reproduce the enclosing word"
            );
            out
        }
    }
}

fn find_reducer(w: &Word, rels: &[Relation], skip: Option<usize>) -> Option<(usize, usize)> {
    for (i, rel) in rels.iter().enumerate() {
        if skip == Some(i) {
            continue;
        }
        if let Some(&at) = words::find_occurrences(w, rel.leading()).first() {
            return Some((i, at));
        }
    }
    None
}

fn normal_form_impl(
    f: &TermMap,
    rels: &[Relation],
    skip: Option<usize>,
    flavor: Flavor,
    ctx: &mut LieCtx,
) -> TermMap {
    let mut rest = f.clone();
    let mut out = TermMap::new();
    while let Some((w, c)) = poly::leading(&rest) {
        let (w, c) = (w.clone(), c.clone());
        match find_reducer(&w, rels, skip) {
            Some((i, at)) => {
                let h = eliminate(&w, at, &rels[i], flavor, ctx);
                poly::add_scaled(&mut rest, &h, &-c);
            }
            None => {
                rest.remove(&w);
                poly::add_term(&mut out, w, c);
            }
        }
    }
    out
}

/// Reduce `f` modulo a relation list: the result differs from `f` by an
/// element of the generated ideal and no monomial of it contains the leading
/// word of any relation.
pub fn normal_form(f: &TermMap, rels: &[Relation], flavor: Flavor) -> TermMap {
    normal_form_impl(f, rels, None, flavor, &mut LieCtx::new())
}

/// One composition witness between two relations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Witness {
    degree: usize,
    word: Word,
    i: usize,
    j: usize,
    overlap: usize,
}

fn intersection_witnesses(rels: &[Relation], bound: usize) -> Vec<Witness> {
    let mut out = Vec::new();
    for (i, f) in rels.iter().enumerate() {
        for (j, g) in rels.iter().enumerate() {
            for l in words::overlaps(f.leading(), g.leading()) {
                let word = words::overlap_witness(f.leading(), g.leading(), l);
                if word.len() <= bound {
                    out.push(Witness {
                        degree: word.len(),
                        word,
                        i,
                        j,
                        overlap: l,
                    });
                }
            }
        }
    }
    out.sort();
    out
}

fn intersection_value(
    rels: &[Relation],
    wit: &Witness,
    flavor: Flavor,
    ctx: &mut LieCtx,
) -> TermMap {
    let f = &rels[wit.i];
    let g = &rels[wit.j];
    let a = eliminate(&wit.word, 0, f, flavor, ctx);
    let b = eliminate(&wit.word, f.leading().len() - wit.overlap, g, flavor, ctx);
    poly::sub(&a, &b)
}

/// All compositions of a pair of monic polynomials: inclusions of `g`'s
/// leading word in `f`'s, and intersections in both orientations. Each entry
/// carries its witness word.
pub fn compositions(
    f: &TermMap,
    g: &TermMap,
    flavor: Flavor,
) -> Result<Vec<(Word, TermMap)>, GsbError> {
    let rf = Relation::monic(f.clone())?;
    let rg = Relation::monic(g.clone())?;
    let mut ctx = LieCtx::new();
    let mut out = Vec::new();
    let same = rf.terms() == rg.terms();
    for at in words::find_occurrences(rf.leading(), rg.leading()) {
        if same && at == 0 && rf.leading().len() == rg.leading().len() {
            continue;
        }
        let h = eliminate(rf.leading(), at, &rg, flavor, &mut ctx);
        let c = poly::sub(rf.terms(), &h);
        out.push((rf.leading().clone(), c));
    }
    for (a, b) in [(&rf, &rg), (&rg, &rf)] {
        for l in words::overlaps(a.leading(), b.leading()) {
            let w = words::overlap_witness(a.leading(), b.leading(), l);
            let left = eliminate(&w, 0, a, flavor, &mut ctx);
            let right = eliminate(&w, a.leading().len() - l, b, flavor, &mut ctx);
            out.push((w, poly::sub(&left, &right)));
        }
    }
    Ok(out)
}

fn inter_reduce(rels: &mut Vec<Relation>, flavor: Flavor, ctx: &mut LieCtx) {
    rels.sort_by(|a, b| a.leading().cmp(b.leading()).then_with(|| a.terms.cmp(&b.terms)));
    loop {
        let mut changed = false;
        for i in 0..rels.len() {
            let r = normal_form_impl(&rels[i].terms, rels, Some(i), flavor, ctx);
            if r == rels[i].terms {
                continue;
            }
            changed = true;
            if r.is_empty() {
                rels.remove(i);
            } else {
                rels[i] = Relation::monic(r).expect("nonzero normal form");
                rels.sort_by(|a, b| a.leading().cmp(b.leading()).then_with(|| a.terms.cmp(&b.terms)));
            }
            break;
        }
        if !changed {
            return;
        }
    }
}

/// Completion state: a self-reduced monic relation set plus certification
/// metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GsbState {
    flavor: Flavor,
    mode: CompletionMode,
    alphabet: Alphabet,
    relations: Vec<Relation>,
    parked: Vec<TermMap>,
    degree_bound: usize,
    step_bound: usize,
    steps: usize,
    additions: usize,
    complete_up_to: usize,
    complete: bool,
}

impl GsbState {
    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn mode(&self) -> CompletionMode {
        self.mode
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn parked(&self) -> &[TermMap] {
        &self.parked
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn complete_up_to(&self) -> usize {
        self.complete_up_to
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn additions(&self) -> usize {
        self.additions
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn normal_form(&self, f: &TermMap) -> TermMap {
        normal_form(f, &self.relations, self.flavor)
    }

    /// Triviality of a composition: its normal form vanishes. Sufficient
    /// because every elimination step uses a strictly smaller witness.
    pub fn is_trivial(&self, c: &TermMap) -> bool {
        self.normal_form(c).is_empty()
    }

    /// All basis monomials of degree `<= max_deg` that avoid every leading
    /// word and pass the filter, ascending deg-lex. Requires certification
    /// at `max_deg`.
    pub fn enumerate_reduced(
        &self,
        max_deg: usize,
        filter: impl Fn(&Word) -> bool,
    ) -> Result<Vec<Word>, GsbError> {
        if !self.complete || self.complete_up_to < max_deg {
            return Err(GsbError::Uncertified {
                needed: max_deg,
                certified: self.complete_up_to,
            });
        }
        let letters = self.alphabet.gens_desc();
        let candidates = match self.flavor {
            Flavor::Lie => lyndon::enumerate_ls_words(&letters, max_deg),
            Flavor::Assoc => words::enumerate_words(&letters, max_deg),
        };
        Ok(candidates
            .into_iter()
            .filter(|w| {
                self.relations
                    .iter()
                    .all(|r| words::find_occurrences(w, r.leading()).is_empty())
                    && filter(w)
            })
            .collect())
    }
}

/// Degree-bounded completion of a relation set. Deterministic: identical
/// inputs produce identical states.
pub fn complete(
    init: &[TermMap],
    flavor: Flavor,
    mode: CompletionMode,
    alphabet: Alphabet,
    degree_bound: usize,
    step_bound: usize,
) -> Result<GsbState, GsbError> {
    let mut ctx = LieCtx::new();
    let mut relations = Vec::new();
    for terms in init {
        let rel = Relation::monic(terms.clone())?;
        relations.push(rel);
    }
    inter_reduce(&mut relations, flavor, &mut ctx);

    let mut state = GsbState {
        flavor,
        mode,
        alphabet,
        relations,
        parked: Vec::new(),
        degree_bound,
        step_bound,
        steps: 0,
        additions: 0,
        complete_up_to: 0,
        complete: false,
    };

    'rounds: loop {
        let wits = intersection_witnesses(&state.relations, degree_bound);
        for wit in &wits {
            state.steps += 1;
            if state.steps > step_bound {
                // witnesses are degree-sorted and this round saw no
                // additions, so everything strictly below is certified
                state.complete = false;
                state.complete_up_to = wit.degree.saturating_sub(1);
                return Ok(state);
            }
            let c = intersection_value(&state.relations, wit, flavor, &mut ctx);
            let r = normal_form_impl(&c, &state.relations, None, flavor, &mut ctx);
            if r.is_empty() {
                continue;
            }
            let rel = Relation::monic(r).expect("nonzero");
            if mode == CompletionMode::Di && rel.leading().dotted_degree() >= 2 {
                if !state.parked.contains(&rel.terms) {
                    state.parked.push(rel.terms.clone());
                }
                continue;
            }
            state.relations.push(rel);
            state.additions += 1;
            inter_reduce(&mut state.relations, flavor, &mut ctx);
            continue 'rounds;
        }
        // a full pass over the final set found only trivial compositions
        state.complete = true;
        state.complete_up_to = degree_bound;
        return Ok(state);
    }
}

// --------------------------------------------------------------- cache IO

fn fnv1a64(data: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in data.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

impl GsbState {
    /// Canonical cache text: header, one polynomial per line, checksum.
    pub fn to_cache_string(&self) -> String {
        let mut body = String::new();
        body.push_str("trigsb gsb cache v1\n");
        body.push_str(&format!(
            "gens {}\n",
            self.alphabet.base_names().join(" > ")
        ));
        body.push_str(&format!("flavor {}\n", self.flavor.as_str()));
        body.push_str(&format!("mode {}\n", self.mode.as_str()));
        body.push_str(&format!("degree-bound {}\n", self.degree_bound));
        body.push_str(&format!("step-bound {}\n", self.step_bound));
        body.push_str(&format!("steps {}\n", self.steps));
        body.push_str(&format!("additions {}\n", self.additions));
        body.push_str(&format!("complete-up-to {}\n", self.complete_up_to));
        body.push_str(&format!("complete {}\n", self.complete));
        body.push_str(&format!("relations {}\n", self.relations.len()));
        for r in &self.relations {
            body.push_str(&text::poly_string(&self.alphabet, self.flavor, &r.terms));
            body.push('\n');
        }
        body.push_str(&format!("parked {}\n", self.parked.len()));
        for p in &self.parked {
            body.push_str(&text::poly_string(&self.alphabet, self.flavor, p));
            body.push('\n');
        }
        format!("{body}checksum {:016x}\n", fnv1a64(&body))
    }

    pub fn save(&self, path: &Path) -> Result<(), GsbError> {
        std::fs::write(path, self.to_cache_string())
            .map_err(|e| GsbError::Cache(format!("write {}: {e}", path.display())))
    }

    pub fn from_cache_string(input: &str) -> Result<GsbState, GsbError> {
        let err = |msg: &str| GsbError::Cache(msg.to_string());
        let body_end = input
            .rfind("checksum ")
            .ok_or_else(|| err("missing checksum line"))?;
        let (body, sumline) = input.split_at(body_end);
        let sum = sumline
            .trim()
            .strip_prefix("checksum ")
            .ok_or_else(|| err("malformed checksum line"))?;
        if format!("{:016x}", fnv1a64(body)) != sum {
            return Err(err("checksum mismatch"));
        }
        fn next_field(
            lines: &mut std::str::Lines<'_>,
            prefix: &str,
        ) -> Result<String, GsbError> {
            let line = lines
                .next()
                .ok_or_else(|| GsbError::Cache("truncated cache".into()))?;
            line.strip_prefix(prefix)
                .map(|s| s.trim().to_string())
                .ok_or_else(|| GsbError::Cache(format!("expected `{prefix}` line")))
        }
        let mut lines = body.lines();
        if lines.next() != Some("trigsb gsb cache v1") {
            return Err(err("unrecognized cache header"));
        }
        let names: Vec<String> = next_field(&mut lines, "gens ")?
            .split('>')
            .map(|s| s.trim().to_string())
            .collect();
        let alphabet = Alphabet::double(names).map_err(|e| GsbError::Cache(e.to_string()))?;
        let flavor = match next_field(&mut lines, "flavor ")?.as_str() {
            "lie" => Flavor::Lie,
            "assoc" => Flavor::Assoc,
            other => return Err(GsbError::Cache(format!("unknown flavor `{other}`"))),
        };
        let mode = match next_field(&mut lines, "mode ")?.as_str() {
            "full" => CompletionMode::Full,
            "di" => CompletionMode::Di,
            other => return Err(GsbError::Cache(format!("unknown mode `{other}`"))),
        };
        let parse_num =
            |s: String| -> Result<usize, GsbError> { s.parse().map_err(|_| err("malformed number")) };
        let degree_bound = parse_num(next_field(&mut lines, "degree-bound ")?)?;
        let step_bound = parse_num(next_field(&mut lines, "step-bound ")?)?;
        let steps = parse_num(next_field(&mut lines, "steps ")?)?;
        let additions = parse_num(next_field(&mut lines, "additions ")?)?;
        let complete_up_to = parse_num(next_field(&mut lines, "complete-up-to ")?)?;
        let complete = match next_field(&mut lines, "complete ")?.as_str() {
            "true" => true,
            "false" => false,
            _ => return Err(err("malformed completeness flag")),
        };
        let nrel = parse_num(next_field(&mut lines, "relations ")?)?;
        let mut relations = Vec::with_capacity(nrel);
        for _ in 0..nrel {
            let line = lines.next().ok_or_else(|| err("truncated relation list"))?;
            let terms = text::parse_canonical_poly(&alphabet, flavor, line)
                .map_err(|e| GsbError::Cache(e.to_string()))?;
            let rel = Relation::monic(terms.clone()).map_err(|_| err("zero relation in cache"))?;
            if rel.terms != terms {
                return Err(err("non-monic relation in cache"));
            }
            relations.push(rel);
        }
        let npark = parse_num(next_field(&mut lines, "parked ")?)?;
        let mut parked = Vec::with_capacity(npark);
        for _ in 0..npark {
            let line = lines.next().ok_or_else(|| err("truncated parked list"))?;
            let terms = text::parse_canonical_poly(&alphabet, flavor, line)
                .map_err(|e| GsbError::Cache(e.to_string()))?;
            parked.push(terms);
        }
        Ok(GsbState {
            flavor,
            mode,
            alphabet,
            relations,
            parked,
            degree_bound,
            step_bound,
            steps,
            additions,
            complete_up_to,
            complete,
        })
    }

    pub fn load(path: &Path) -> Result<GsbState, GsbError> {
        let input = std::fs::read_to_string(path)
            .map_err(|e| GsbError::Cache(format!("read {}: {e}", path.display())))?;
        GsbState::from_cache_string(&input)
    }
}
