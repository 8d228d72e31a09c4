//! Finite-dimensional multiplication tables, envelope presentations for the
//! forgetful and tri-commutator functors, Gröbner–Shirshov verification of
//! the presented relation families, and PBW-style basis enumeration.

use crate::gsb::{self, Flavor, GsbError, GsbState};
use crate::lie_poly::BilinearTable;
use crate::oracle;
use crate::poly::{self, TermMap};
use crate::replication::{self, TriPoly, TriTerm};
use crate::symbols::{Alphabet, Gen};
use crate::words::Word;
use crate::Rat;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TableOp {
    Bracket,
    Vdash,
    Dashv,
    Perp,
}

impl TableOp {
    pub fn as_str(self) -> &'static str {
        match self {
            TableOp::Bracket => "bracket",
            TableOp::Vdash => "vdash",
            TableOp::Dashv => "dashv",
            TableOp::Perp => "perp",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Lie,
    TriLie,
    TriCom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnvError {
    Shape(String),
    InvalidTable(String),
    Unverified { degree: usize },
    Gsb(GsbError),
}

impl fmt::Display for EnvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnvError::Shape(m) => write!(f, "malformed table: {m}"),
            EnvError::InvalidTable(m) => write!(f, "invalid table: {m}"),
            EnvError::Unverified { degree } => {
                write!(f, "presentation not verified to degree {degree}")
            }
            EnvError::Gsb(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for EnvError {}

impl From<GsbError> for EnvError {
    fn from(e: GsbError) -> EnvError {
        EnvError::Gsb(e)
    }
}

/// A finite-dimensional algebra: ordered basis labels and structure
/// vectors per operation. Unset products are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultTable {
    labels: Vec<String>,
    dim: usize,
    ops: BTreeMap<TableOp, Vec<Vec<Vec<Rat>>>>,
}

impl MultTable {
    /// Basis labels in descending order.
    pub fn new<I, S>(labels: I) -> MultTable
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let dim = labels.len();
        MultTable {
            labels,
            dim,
            ops: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn set(&mut self, op: TableOp, i: usize, j: usize, value: Vec<Rat>) -> Result<(), EnvError> {
        if i >= self.dim || j >= self.dim || value.len() != self.dim {
            return Err(EnvError::Shape(format!(
                "entry ({i},{j}) out of range for dimension {}",
                self.dim
            )));
        }
        let table = self.ops.entry(op).or_insert_with(|| {
            vec![vec![vec![Rat::zero(); self.dim]; self.dim]; self.dim.max(1)]
        });
        table[i][j] = value;
        Ok(())
    }

    pub fn get(&self, op: TableOp, i: usize, j: usize) -> Vec<Rat> {
        self.ops
            .get(&op)
            .map(|t| t[i][j].clone())
            .unwrap_or_else(|| vec![Rat::zero(); self.dim])
    }

    pub fn has_op(&self, op: TableOp) -> bool {
        self.ops.contains_key(&op)
    }

    pub fn bilinear(&self, op: TableOp) -> BilinearTable {
        let prod: Vec<Vec<Vec<Rat>>> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(op, i, j)).collect())
            .collect();
        BilinearTable::new(self.dim, prod).expect("square table")
    }

    fn apply(&self, op: TableOp, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                for (o, c) in out.iter_mut().zip(self.get(op, i, j)) {
                    *o += c * ai * bj;
                }
            }
        }
        out
    }

    fn tri_apply(&self, op: replication::TriOp, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let op = match op {
            replication::TriOp::Vdash => TableOp::Vdash,
            replication::TriOp::Dashv => TableOp::Dashv,
            replication::TriOp::Perp => TableOp::Perp,
        };
        self.apply(op, a, b)
    }

    /// Evaluate a di/tri term whose leaves are variable indices.
    pub fn eval_tri_term(&self, t: &TriTerm, assign: &[Vec<Rat>]) -> Result<Vec<Rat>, EnvError> {
        match t {
            TriTerm::Leaf(g) => assign
                .get(g.index())
                .cloned()
                .ok_or_else(|| EnvError::Shape(format!("unassigned variable {}", g.index() + 1))),
            TriTerm::Node(op, l, r) => {
                let lv = self.eval_tri_term(l, assign)?;
                let rv = self.eval_tri_term(r, assign)?;
                Ok(self.tri_apply(*op, &lv, &rv))
            }
        }
    }

    pub fn eval_tri_poly(&self, p: &TriPoly, assign: &[Vec<Rat>]) -> Result<Vec<Rat>, EnvError> {
        let mut out = vec![Rat::zero(); self.dim];
        for (t, c) in p.terms() {
            let v = self.eval_tri_term(t, assign)?;
            for (o, x) in out.iter_mut().zip(v) {
                *o += x * c;
            }
        }
        Ok(out)
    }

    fn basis_vec(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        v[i] = Rat::one();
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub violation: Option<String>,
}

impl ValidationReport {
    fn valid() -> ValidationReport {
        ValidationReport {
            ok: true,
            violation: None,
        }
    }

    fn fail(msg: String) -> ValidationReport {
        ValidationReport {
            ok: false,
            violation: Some(msg),
        }
    }
}

fn arity(p: &TriPoly) -> usize {
    p.terms()
        .keys()
        .map(|t| {
            fn max_var(t: &TriTerm) -> usize {
                match t {
                    TriTerm::Leaf(g) => g.index() + 1,
                    TriTerm::Node(_, l, r) => max_var(l).max(max_var(r)),
                }
            }
            max_var(t)
        })
        .max()
        .unwrap_or(0)
}

fn check_identities(table: &MultTable, identities: &[(String, TriPoly)]) -> ValidationReport {
    let n = table.dim;
    for (name, id) in identities {
        let k = arity(id);
        for idx in 0..n.pow(k as u32) {
            let mut tuple = Vec::with_capacity(k);
            let mut rem = idx;
            for _ in 0..k {
                tuple.push(rem % n);
                rem /= n;
            }
            let assign: Vec<Vec<Rat>> = tuple.iter().map(|&i| table.basis_vec(i)).collect();
            match table.eval_tri_poly(id, &assign) {
                Ok(v) if v.iter().all(Rat::is_zero) => {}
                Ok(_) => {
                    return ValidationReport::fail(format!(
                        "{name} fails at basis tuple {:?}",
                        tuple.iter().map(|i| i + 1).collect::<Vec<_>>()
                    ))
                }
                Err(e) => return ValidationReport::fail(e.to_string()),
            }
        }
    }
    ValidationReport::valid()
}

/// Check the defining identities of the requested kind on every basis
/// tuple; reports the first violation.
pub fn validate_table(table: &MultTable, kind: TableKind) -> ValidationReport {
    if table.dim == 0 {
        return ValidationReport::valid();
    }
    match kind {
        TableKind::Lie => {
            let n = table.dim;
            for i in 0..n {
                for j in 0..n {
                    let lhs = table.get(TableOp::Bracket, i, j);
                    let rhs = table.get(TableOp::Bracket, j, i);
                    let sum: Vec<Rat> = lhs.iter().zip(&rhs).map(|(a, b)| a + b).collect();
                    if sum.iter().any(|c| !c.is_zero()) {
                        return ValidationReport::fail(format!(
                            "anticommutativity fails at pair ({}, {})",
                            i + 1,
                            j + 1
                        ));
                    }
                }
            }
            let b = |x: &[Rat], y: &[Rat]| table.apply(TableOp::Bracket, x, y);
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let (ei, ej, ek) =
                            (table.basis_vec(i), table.basis_vec(j), table.basis_vec(k));
                        let mut total = b(&b(&ei, &ej), &ek);
                        for (t, v) in total.iter_mut().zip(b(&b(&ej, &ek), &ei)) {
                            *t += v;
                        }
                        for (t, v) in total.iter_mut().zip(b(&b(&ek, &ei), &ej)) {
                            *t += v;
                        }
                        if total.iter().any(|c| !c.is_zero()) {
                            return ValidationReport::fail(format!(
                                "Jacobi fails at basis triple ({}, {}, {})",
                                i + 1,
                                j + 1,
                                k + 1
                            ));
                        }
                    }
                }
            }
            ValidationReport::valid()
        }
        TableKind::TriLie => {
            let mut ids: Vec<(String, TriPoly)> = Vec::new();
            for (k, p) in replication::tri_lie_skew_identities().into_iter().enumerate() {
                ids.push((format!("skew-symmetry {}", k + 1), p));
            }
            for (k, p) in replication::tri_lie_identities().into_iter().enumerate() {
                ids.push((format!("tri-Lie identity {}", k + 1), p));
            }
            check_identities(table, &ids)
        }
        TableKind::TriCom => {
            let mut ids: Vec<(String, TriPoly)> = Vec::new();
            for mask in 1usize..8 {
                let h: std::collections::BTreeSet<usize> =
                    (1..=3).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let p = replication::replicate(
                    &replication::associativity(),
                    &h,
                    replication::Mode::Tri,
                )
                .expect("polylinear");
                ids.push((format!("associativity replicate {h:?}"), p));
            }
            for mask in 1usize..4 {
                let h: std::collections::BTreeSet<usize> =
                    (1..=2).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let p = replication::replicate(
                    &replication::commutativity(),
                    &h,
                    replication::Mode::Tri,
                )
                .expect("polylinear");
                ids.push((format!("commutativity replicate {h:?}"), p));
            }
            for (k, p) in replication::slot_independence_identities()
                .into_iter()
                .enumerate()
            {
                ids.push((format!("slot independence {}", k + 1), p));
            }
            check_identities(table, &ids)
        }
    }
}

/// Adapted-basis data for the tri-commutator envelope.
#[derive(Clone, Debug)]
pub struct BasisSplit {
    /// Labels of the complement part, descending.
    pub x1: Vec<String>,
    /// Labels of the degenerate part with their vectors in the original
    /// coordinates.
    pub x0: Vec<(String, Vec<Rat>)>,
    /// The table rewritten in the adapted basis `X1 ∪ X0`.
    pub adapted: MultTable,
}

/// An envelope presentation: relations over the doubled alphabet.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub flavor: Flavor,
    /// `None` only for zero-dimensional input.
    pub alphabet: Option<Alphabet>,
    pub relations: Vec<TermMap>,
    pub split: Option<BasisSplit>,
}

fn antisymmetric(table: &MultTable, op: TableOp) -> Option<(usize, usize)> {
    for i in 0..table.dim {
        for j in 0..table.dim {
            let lhs = table.get(op, i, j);
            let rhs = table.get(op, j, i);
            if lhs.iter().zip(&rhs).any(|(a, b)| !(a + b).is_zero()) {
                return Some((i, j));
            }
        }
    }
    None
}

fn linear_form(coeffs: &[Rat], dotted: bool) -> TermMap {
    let mut out = TermMap::new();
    for (k, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            let g = if dotted { Gen::dotted(k) } else { Gen::base(k) };
            poly::add_term(&mut out, Word::single(g), c.clone());
        }
    }
    out
}

/// Present the universal Lie tri-algebra envelope of a Lie algebra: one
/// doubled relation family `[ẋẏ] - μ̇(x,y)` and its dot-erased image
/// `[xy] - μ(x,y)`, over pairs `x > y`.
pub fn present_perp(table: &MultTable) -> Result<Presentation, EnvError> {
    if let Some((i, j)) = antisymmetric(table, TableOp::Bracket) {
        return Err(EnvError::InvalidTable(format!(
            "bracket not antisymmetric at pair ({}, {})",
            i + 1,
            j + 1
        )));
    }
    if table.dim == 0 {
        return Ok(Presentation {
            flavor: Flavor::Lie,
            alphabet: None,
            relations: Vec::new(),
            split: None,
        });
    }
    let alphabet =
        Alphabet::double(table.labels.clone()).map_err(|e| EnvError::Shape(e.to_string()))?;
    let mut relations = Vec::new();
    for dotted in [true, false] {
        for i in 0..table.dim {
            for j in i + 1..table.dim {
                let (gi, gj) = if dotted {
                    (Gen::dotted(i), Gen::dotted(j))
                } else {
                    (Gen::base(i), Gen::base(j))
                };
                let mut rel = poly::single(Word::new(vec![gi, gj]));
                let mu = table.get(TableOp::Bracket, i, j);
                poly::add_scaled(&mut rel, &linear_form(&mu, dotted), &-Rat::one());
                relations.push(rel);
            }
        }
    }
    Ok(Presentation {
        flavor: Flavor::Lie,
        alphabet: Some(alphabet),
        relations,
        split: None,
    })
}

/// Complete a presentation's relations up to a degree bound.
pub fn complete_presentation(
    p: &Presentation,
    degree_bound: usize,
    step_bound: usize,
) -> Result<Option<GsbState>, EnvError> {
    let Some(alphabet) = &p.alphabet else {
        return Ok(None);
    };
    let state = gsb::complete(
        &p.relations,
        p.flavor,
        gsb::CompletionMode::Full,
        alphabet.clone(),
        degree_bound,
        step_bound,
    )?;
    Ok(Some(state))
}

/// Whether the presented relations are already a Gröbner–Shirshov basis up
/// to the bound: completion certifies without adding anything.
pub fn verify_perp_gsb(p: &Presentation, degree_bound: usize) -> Result<bool, EnvError> {
    match complete_presentation(p, degree_bound, gsb::DEFAULT_STEP_BOUND)? {
        None => Ok(true),
        Some(state) => Ok(state.is_complete() && state.additions() == 0),
    }
}

pub fn verify_minus_gsb(p: &Presentation, degree_bound: usize) -> Result<bool, EnvError> {
    verify_perp_gsb(p, degree_bound)
}

fn uniquify(name: String, taken: &mut Vec<String>) -> String {
    let mut name = name;
    while taken.contains(&name) {
        name.push('_');
    }
    taken.push(name.clone());
    name
}

/// Present the universal associative tri-algebra envelope of a Lie
/// tri-algebra: compute the degenerate subspace, adapt the basis, and emit
/// the four commutation families over the doubled adapted alphabet.
pub fn present_minus(table: &MultTable) -> Result<Presentation, EnvError> {
    // the two skew laws make the displayed relation families exhaustive
    for i in 0..table.dim {
        for j in 0..table.dim {
            let lhs = table.get(TableOp::Dashv, i, j);
            let rhs = table.get(TableOp::Vdash, j, i);
            if lhs.iter().zip(&rhs).any(|(a, b)| !(a + b).is_zero()) {
                return Err(EnvError::InvalidTable(format!(
                    "left/right products not skew at pair ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    if let Some((i, j)) = antisymmetric(table, TableOp::Perp) {
        return Err(EnvError::InvalidTable(format!(
            "perp product not antisymmetric at pair ({}, {})",
            i + 1,
            j + 1
        )));
    }
    if table.dim == 0 {
        return Ok(Presentation {
            flavor: Flavor::Assoc,
            alphabet: None,
            relations: Vec::new(),
            split: Some(BasisSplit {
                x1: Vec::new(),
                x0: Vec::new(),
                adapted: table.clone(),
            }),
        });
    }
    let n = table.dim;

    // degenerate subspace: spans of a|-b + b|-a and a|-b - a<>b
    let mut gens: Vec<Vec<Rat>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let vd = table.get(TableOp::Vdash, i, j);
            let dv = table.get(TableOp::Vdash, j, i);
            gens.push(vd.iter().zip(&dv).map(|(a, b)| a + b).collect());
            let pp = table.get(TableOp::Perp, i, j);
            gens.push(vd.iter().zip(&pp).map(|(a, b)| a - b).collect());
        }
    }
    oracle::rref(&mut gens);
    let x0_rows = gens;
    let pivot_of = |row: &Vec<Rat>| row.iter().position(|c| !c.is_zero()).expect("nonzero row");
    let pivots: Vec<usize> = x0_rows.iter().map(pivot_of).collect();

    // adapted basis: original vectors off the pivots, then the pivot rows
    let x1_indices: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
    let mut adapted_vectors: Vec<Vec<Rat>> = x1_indices
        .iter()
        .map(|&i| {
            let mut v = vec![Rat::zero(); n];
            v[i] = Rat::one();
            v
        })
        .collect();
    adapted_vectors.extend(x0_rows.iter().cloned());

    let mut taken: Vec<String> = Vec::new();
    let x1_labels: Vec<String> = x1_indices
        .iter()
        .map(|&i| uniquify(table.labels[i].clone(), &mut taken))
        .collect();
    let x0_labels: Vec<String> = pivots
        .iter()
        .map(|&p| uniquify(format!("{}_0", table.labels[p]), &mut taken))
        .collect();
    let adapted_labels: Vec<String> =
        x1_labels.iter().chain(x0_labels.iter()).cloned().collect();

    // change of basis: solve P c = v with P columns the adapted vectors
    let inv = {
        let mut rows: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rat> = adapted_vectors.iter().map(|b| b[i].clone()).collect();
                let mut unit = vec![Rat::zero(); n];
                unit[i] = Rat::one();
                row.extend(unit);
                row
            })
            .collect();
        oracle::rref(&mut rows);
        if rows.len() != n || (0..n).any(|i| rows[i][i] != Rat::one()) {
            return Err(EnvError::Shape("adapted vectors do not form a basis".into()));
        }
        let inv: Vec<Vec<Rat>> = rows.into_iter().map(|r| r[n..].to_vec()).collect();
        inv
    };
    let to_adapted = |v: &[Rat]| -> Vec<Rat> {
        (0..n)
            .map(|i| {
                let mut acc = Rat::zero();
                for (j, c) in v.iter().enumerate() {
                    acc += &inv[i][j] * c;
                }
                acc
            })
            .collect()
    };

    let mut adapted = MultTable::new(adapted_labels.clone());
    for op in [TableOp::Vdash, TableOp::Dashv, TableOp::Perp] {
        for i in 0..n {
            for j in 0..n {
                let prod = table.apply(op, &adapted_vectors[i], &adapted_vectors[j]);
                adapted.set(op, i, j, to_adapted(&prod))?;
            }
        }
    }

    let alphabet =
        Alphabet::double(adapted_labels).map_err(|e| EnvError::Shape(e.to_string()))?;
    let x1_count = x1_labels.len();
    let mut relations: Vec<TermMap> = Vec::new();
    // degenerate letters vanish
    for k in x1_count..n {
        relations.push(poly::single(Word::single(Gen::base(k))));
    }
    // base commutation on the complement
    for i in 0..x1_count {
        for j in i + 1..x1_count {
            let mut rel = poly::single(Word::new(vec![Gen::base(i), Gen::base(j)]));
            poly::add_term(&mut rel, Word::new(vec![Gen::base(j), Gen::base(i)]), -Rat::one());
            let mu = adapted.get(TableOp::Dashv, i, j);
            poly::add_scaled(&mut rel, &linear_form(&mu, false), &-Rat::one());
            relations.push(rel);
        }
    }
    // mixed commutation: dotted against the complement
    for i in 0..n {
        for j in 0..x1_count {
            let mut rel = poly::single(Word::new(vec![Gen::dotted(i), Gen::base(j)]));
            poly::add_term(
                &mut rel,
                Word::new(vec![Gen::base(j), Gen::dotted(i)]),
                -Rat::one(),
            );
            let mu = adapted.get(TableOp::Dashv, i, j);
            poly::add_scaled(&mut rel, &linear_form(&mu, true), &-Rat::one());
            relations.push(rel);
        }
    }
    // dotted commutation
    for i in 0..n {
        for j in i + 1..n {
            let mut rel = poly::single(Word::new(vec![Gen::dotted(i), Gen::dotted(j)]));
            poly::add_term(
                &mut rel,
                Word::new(vec![Gen::dotted(j), Gen::dotted(i)]),
                -Rat::one(),
            );
            let mu = adapted.get(TableOp::Perp, i, j);
            poly::add_scaled(&mut rel, &linear_form(&mu, true), &-Rat::one());
            relations.push(rel);
        }
    }
    let x0 = x0_labels
        .into_iter()
        .zip(x0_rows.iter().cloned())
        .collect();
    Ok(Presentation {
        flavor: Flavor::Assoc,
        alphabet: Some(alphabet),
        relations,
        split: Some(BasisSplit {
            x1: x1_labels,
            x0,
            adapted,
        }),
    })
}

/// PBW-style monomials of the tri-commutator envelope: a nondecreasing
/// block over the complement letters followed by a nonempty nondecreasing
/// dotted block, enumerated per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwBasis {
    pub monomials: Vec<Word>,
    /// Entry `d-1` counts monomials of degree `d`.
    pub counts: Vec<usize>,
}

fn nondecreasing_words(letters: &[Gen], len: usize) -> Vec<Vec<Gen>> {
    // letters ascending; produces all weakly increasing sequences
    let mut out = Vec::new();
    if len == 0 {
        out.push(Vec::new());
        return out;
    }
    fn rec(letters: &[Gen], start: usize, len: usize, acc: &mut Vec<Gen>, out: &mut Vec<Vec<Gen>>) {
        if len == 0 {
            out.push(acc.clone());
            return;
        }
        for (k, &g) in letters.iter().enumerate().skip(start) {
            acc.push(g);
            rec(letters, k, len - 1, acc, out);
            acc.pop();
        }
    }
    rec(letters, 0, len, &mut Vec::new(), &mut out);
    out
}

/// Enumerate the PBW monomials after verifying the presented relations up
/// to `max_deg`.
pub fn pbw_basis_minus(p: &Presentation, max_deg: usize) -> Result<PbwBasis, EnvError> {
    let split = p
        .split
        .as_ref()
        .ok_or_else(|| EnvError::Shape("presentation carries no basis split".into()))?;
    if !verify_minus_gsb(p, max_deg)? {
        return Err(EnvError::Unverified { degree: max_deg });
    }
    let n = split.adapted.dim();
    let x1_count = split.x1.len();
    // ascending letter order
    let undotted: Vec<Gen> = (0..x1_count).rev().map(Gen::base).collect();
    let dotted: Vec<Gen> = (0..n).rev().map(Gen::dotted).collect();
    let mut monomials = Vec::new();
    let mut counts = vec![0usize; max_deg];
    for total in 1..=max_deg {
        let mut at_degree = Vec::new();
        for m in 1..=total {
            let k = total - m;
            for head in nondecreasing_words(&undotted, k) {
                for tail in nondecreasing_words(&dotted, m) {
                    let mut letters = head.clone();
                    letters.extend_from_slice(&tail);
                    at_degree.push(Word::new(letters));
                }
            }
        }
        at_degree.sort();
        counts[total - 1] = at_degree.len();
        monomials.extend(at_degree);
    }
    Ok(PbwBasis { monomials, counts })
}

fn multiset_count(kinds: u128, size: u128) -> u128 {
    // C(kinds + size - 1, size)
    if size == 0 {
        return 1;
    }
    if kinds == 0 {
        return 0;
    }
    let (n, k) = (kinds + size - 1, size);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Dimension of the degree-`n` component of the envelope predicted from the
/// split alone: multisets over the complement letters times nonempty
/// multisets over all letters.
pub fn pbw_count(x1_dim: usize, x_dim: usize, degree: usize) -> u128 {
    let mut total = 0u128;
    for m in 1..=degree {
        let k = degree - m;
        total += multiset_count(x1_dim as u128, k as u128) * multiset_count(x_dim as u128, m as u128);
    }
    total
}

/// Two-dimensional commutative tri-algebra sample: idempotent diagonal
/// perp, the first idempotent acting as a one-sided unit.
pub fn sample_tri_com_table() -> MultTable {
    let mut t = MultTable::new(["e1", "e2"]);
    let e = |i: usize| {
        let mut v = vec![Rat::zero(); 2];
        v[i] = Rat::one();
        v
    };
    t.set(TableOp::Perp, 0, 0, e(0)).unwrap();
    t.set(TableOp::Perp, 1, 1, e(1)).unwrap();
    t.set(TableOp::Vdash, 0, 0, e(0)).unwrap();
    t.set(TableOp::Dashv, 0, 0, e(0)).unwrap();
    t.set(TableOp::Vdash, 0, 1, e(1)).unwrap();
    t.set(TableOp::Dashv, 1, 0, e(1)).unwrap();
    t
}
