//! Brute-force cross checks: degree-truncated ideal spans by dense exact
//! linear algebra, membership decisions against those spans, and dimension
//! counts of free di- and tri-algebras.
//!
//! Nothing here is shared with the completion engine beyond the polynomial
//! arithmetic; the span is grown by literal products with letters until the
//! rank stabilizes, so answers are independent of the rewriting machinery
//! they are used to check.

use crate::gsb::Flavor;
use crate::lie_poly::{self, LieCtx};
use crate::lyndon;
use crate::poly::{self, TermMap};
use crate::replication::{self, Mode, TriPoly};
use crate::symbols::{Alphabet, Gen};
use crate::words::{self, Word};
use crate::Rat;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    DegreeOverflow { degree: usize, max_deg: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::DegreeOverflow { degree, max_deg } => write!(
                f,
                "polynomial of degree {degree} exceeds the oracle bound {max_deg}"
            ),
        }
    }
}

impl std::error::Error for OracleError {}

/// Monomial basis of the free algebra of the given flavor up to a degree,
/// ascending deg-lex.
pub fn monomial_basis(letters: &[Gen], flavor: Flavor, max_deg: usize) -> Vec<Word> {
    match flavor {
        Flavor::Lie => lyndon::enumerate_ls_words(letters, max_deg),
        Flavor::Assoc => words::enumerate_words(letters, max_deg),
    }
}

fn poly_max_degree(f: &TermMap) -> usize {
    f.keys().map(Word::len).max().unwrap_or(0)
}

/// Row space of ideal elements over the monomial basis, kept in reduced
/// echelon form.
#[derive(Clone, Debug)]
pub struct GradedSpan {
    flavor: Flavor,
    max_deg: usize,
    basis: Vec<Word>,
    index: BTreeMap<Word, usize>,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl GradedSpan {
    fn empty(letters: &[Gen], flavor: Flavor, max_deg: usize) -> GradedSpan {
        let basis = monomial_basis(letters, flavor, max_deg);
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        GradedSpan {
            flavor,
            max_deg,
            basis,
            index,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn max_deg(&self) -> usize {
        self.max_deg
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    fn vector(&self, f: &TermMap) -> Result<Vec<Rat>, OracleError> {
        let mut v = vec![Rat::zero(); self.basis.len()];
        for (w, c) in f {
            match self.index.get(w) {
                Some(&i) => v[i] = c.clone(),
                None => {
                    return Err(OracleError::DegreeOverflow {
                        degree: w.len(),
                        max_deg: self.max_deg,
                    })
                }
            }
        }
        Ok(v)
    }

    fn reduce(&self, v: &mut [Rat]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x -= r * &c;
            }
        }
    }

    /// Insert a vector; returns whether the rank grew. Pivots sit at the
    /// deg-lex greatest monomial of each row, so a row never carries a
    /// monomial of higher degree than its pivot and the degree-bounded
    /// product closure loses nothing to cancellation.
    fn insert(&mut self, mut v: Vec<Rat>) -> bool {
        self.reduce(&mut v);
        let Some(p) = v.iter().rposition(|c| !c.is_zero()) else {
            return false;
        };
        let inv = Rat::one() / v[p].clone();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        // back-eliminate the new pivot from existing rows
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, n) in row.iter_mut().zip(&v) {
                *x -= n * &c;
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Whether the polynomial lies in the row space.
    pub fn contains(&self, f: &TermMap) -> Result<bool, OracleError> {
        let mut v = self.vector(f)?;
        self.reduce(&mut v);
        Ok(v.iter().all(Rat::is_zero))
    }

    fn row_polys(&self) -> Vec<TermMap> {
        self.rows
            .iter()
            .map(|row| {
                let mut t = TermMap::new();
                for (i, c) in row.iter().enumerate() {
                    if !c.is_zero() {
                        poly::add_term(&mut t, self.basis[i].clone(), c.clone());
                    }
                }
                t
            })
            .collect()
    }
}

fn product(f: &TermMap, g: &TermMap, flavor: Flavor, ctx: &mut LieCtx) -> TermMap {
    match flavor {
        Flavor::Lie => lie_poly::bracket_terms(f, g, ctx),
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

/// Span of the ideal generated by the given polynomials, truncated at
/// `max_deg`: the row space is grown by products with single letters on
/// both sides until the rank stabilizes. Generators with a monomial above
/// the bound are not representable and are skipped.
pub fn ideal_span(
    rels: &[TermMap],
    flavor: Flavor,
    alphabet: &Alphabet,
    max_deg: usize,
) -> GradedSpan {
    let letters = alphabet.gens_desc();
    let mut span = GradedSpan::empty(&letters, flavor, max_deg);
    let mut ctx = LieCtx::new();
    for r in rels {
        if r.is_empty() || poly_max_degree(r) > max_deg {
            continue;
        }
        let v = span.vector(r).expect("degree checked");
        span.insert(v);
    }
    loop {
        let mut grew = false;
        let current = span.row_polys();
        for e in &current {
            if poly_max_degree(e) + 1 > max_deg {
                continue;
            }
            for &l in &letters {
                let letter = poly::single(Word::single(l));
                for p in [
                    product(&letter, e, flavor, &mut ctx),
                    product(e, &letter, flavor, &mut ctx),
                ] {
                    if p.is_empty() {
                        continue;
                    }
                    let v = span.vector(&p).expect("products stay within the bound");
                    if span.insert(v) {
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            return span;
        }
    }
}

/// Membership of an encoded polynomial in the span of encoded relations.
pub fn member_span(
    rels_enc: &[TermMap],
    f_enc: &TermMap,
    flavor: Flavor,
    alphabet: &Alphabet,
    max_deg: usize,
) -> Result<bool, OracleError> {
    if poly_max_degree(f_enc) > max_deg {
        return Err(OracleError::DegreeOverflow {
            degree: poly_max_degree(f_enc),
            max_deg,
        });
    }
    let span = ideal_span(rels_enc, flavor, alphabet, max_deg);
    span.contains(f_enc)
}

/// Membership decision for di/tri relations: encodes the relation set, adds
/// its dot-erased image, and tests the encoded target against the span.
pub fn member_oracle(
    relations: &[TriPoly],
    target: &TriPoly,
    flavor: Flavor,
    mode: Mode,
    alphabet: &Alphabet,
    max_deg: usize,
) -> Result<bool, OracleError> {
    let _ = mode; // the encoded relation set is the same for di and tri
    let mut rels_enc = Vec::new();
    for r in relations {
        let e = replication::encode(r, flavor);
        let fe = replication::phi(&e, flavor);
        if !e.is_empty() && !rels_enc.contains(&e) {
            rels_enc.push(e);
        }
        if !fe.is_empty() && !rels_enc.contains(&fe) {
            rels_enc.push(fe);
        }
    }
    let f_enc = replication::encode(target, flavor);
    member_span(&rels_enc, &f_enc, flavor, alphabet, max_deg)
}

/// Per-degree dimensions of the free di/tri-algebra on `num_gens`
/// generators: entry `d-1` counts basis monomials of degree `d`.
pub fn free_dimension(mode: Mode, flavor: Flavor, num_gens: usize, max_deg: usize) -> Vec<usize> {
    let alphabet =
        Alphabet::double((1..=num_gens).map(|i| format!("g{i}"))).expect("fresh names");
    let letters = alphabet.gens_desc();
    let monomials = monomial_basis(&letters, flavor, max_deg);
    let mut counts = vec![0usize; max_deg];
    for w in &monomials {
        let dd = w.dotted_degree();
        let keep = match mode {
            Mode::Di => dd == 1,
            Mode::Tri => dd >= 1,
        };
        if keep {
            counts[w.len() - 1] += 1;
        }
    }
    counts
}

/// Rows spanning the intersection of a row space with the coordinate
/// subspace of the flagged positions: eliminate on the complement first,
/// then keep the rows supported inside it.
pub fn intersect_coordinate_subspace(rows: &[Vec<Rat>], keep: &[bool]) -> Vec<Vec<Rat>> {
    let n = keep.len();
    let perm: Vec<usize> = (0..n)
        .filter(|&i| !keep[i])
        .chain((0..n).filter(|&i| keep[i]))
        .collect();
    let mut permuted: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| perm.iter().map(|&i| r[i].clone()).collect())
        .collect();
    rref(&mut permuted);
    let outside = keep.iter().filter(|&&k| !k).count();
    let mut out = Vec::new();
    for row in &permuted {
        if row.iter().take(outside).all(Rat::is_zero) && !row.iter().all(Rat::is_zero) {
            let mut orig = vec![Rat::zero(); n];
            for (j, &i) in perm.iter().enumerate() {
                orig[i] = row[j].clone();
            }
            out.push(orig);
        }
    }
    out
}

/// In-place reduced row echelon form.
pub fn rref(rows: &mut Vec<Vec<Rat>>) {
    if rows.is_empty() {
        return;
    }
    let n = rows[0].len();
    let mut rank = 0usize;
    for col in 0..n {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = Rat::one() / rows[rank][col].clone();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows.len() {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let c = rows[r][col].clone();
            for j in 0..n {
                let sub = &rows[rank][j] * &c;
                rows[r][j] -= sub;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.retain(|r| r.iter().any(|c| !c.is_zero()));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use crate::replication::{TriOp, TriTerm};
    use rand::prelude::*;

    fn xy() -> Alphabet {
        Alphabet::double(["x", "y"]).unwrap()
    }

    fn single(letters: &[Gen]) -> TermMap {
        poly::single(Word::new(letters.to_vec()))
    }

    #[test]
    fn span_of_single_generator() {
        let a = xy();
        let rels = vec![single(&[Gen::base(1)])];
        let span = ideal_span(&rels, Flavor::Lie, &a, 2);
        // brackets of y with every letter land in the span
        for probe in [
            single(&[Gen::base(1)]),
            single(&[Gen::dotted(0), Gen::base(1)]),
            single(&[Gen::dotted(1), Gen::base(1)]),
            single(&[Gen::base(0), Gen::base(1)]),
        ] {
            assert!(span.contains(&probe).unwrap());
        }
        assert!(!span.contains(&single(&[Gen::dotted(1)])).unwrap());
        assert!(!span.contains(&single(&[Gen::base(0)])).unwrap());
    }

    #[test]
    fn empty_span_and_degree_overflow() {
        let a = xy();
        let span = ideal_span(&[], Flavor::Lie, &a, 3);
        assert_eq!(span.rank(), 0);
        assert!(!span.contains(&single(&[Gen::base(0)])).unwrap());
        let deep = single(&[Gen::base(0), Gen::base(0), Gen::base(1), Gen::base(1)]);
        assert!(span.contains(&deep).is_err());
    }

    #[test]
    fn assoc_span_of_generator_fills_positive_degrees() {
        let a = Alphabet::double(["x"]).unwrap();
        let rels = vec![single(&[Gen::base(0)])];
        let span = ideal_span(&rels, Flavor::Assoc, &a, 3);
        let x = Gen::base(0);
        for w in [vec![x], vec![x, x], vec![x, x, x]] {
            assert!(span.contains(&single(&w)).unwrap());
        }
    }

    #[test]
    fn oracle_member_examples() {
        let a = xy();
        let (x, y) = (TriTerm::Leaf(Gen::base(0)), TriTerm::Leaf(Gen::base(1)));
        let mut rel = TriPoly::term(rat(1), TriTerm::node(TriOp::Dashv, x.clone(), y.clone()));
        rel.add_term(rat(1), TriTerm::node(TriOp::Dashv, y.clone(), x.clone()));
        rel.add_term(rat(1), y.clone());
        let rels = vec![rel.clone()];

        // generators of the relation set are members
        assert!(member_oracle(&rels, &rel, Flavor::Lie, Mode::Di, &a, 4).unwrap());
        // the undotted image of the relation lies in the doubled ideal
        let e = replication::encode(&rel, Flavor::Lie);
        let rels_enc = vec![e.clone(), replication::phi(&e, Flavor::Lie)];
        assert!(member_span(&rels_enc, &single(&[Gen::base(1)]), Flavor::Lie, &a, 4).unwrap());
        // but the generator y of the free Leibniz algebra encodes to the
        // reduced word ẏ, which stays out
        assert!(!member_oracle(
            &rels,
            &TriPoly::term(rat(1), y.clone()),
            Flavor::Lie,
            Mode::Di,
            &a,
            4
        )
        .unwrap());
        // ẋ is not in the span either
        assert!(!member_oracle(
            &rels,
            &TriPoly::term(rat(1), x.clone()),
            Flavor::Lie,
            Mode::Di,
            &a,
            4
        )
        .unwrap());
    }

    #[test]
    fn free_dimension_examples() {
        assert_eq!(free_dimension(Mode::Di, Flavor::Lie, 2, 2), vec![2, 4]);
        assert_eq!(free_dimension(Mode::Di, Flavor::Lie, 3, 1), vec![3]);
        assert_eq!(free_dimension(Mode::Tri, Flavor::Lie, 1, 1), vec![1]);
        // free Leibniz dimensions are d^n
        for d in 1..=2usize {
            let counts = free_dimension(Mode::Di, Flavor::Lie, d, 4);
            for (i, count) in counts.iter().enumerate() {
                assert_eq!(*count, d.pow(i as u32 + 1), "d={d} n={}", i + 1);
            }
        }
    }

    #[test]
    fn pipeline_and_oracle_agree_on_fixed_instance() {
        let a = xy();
        let (x, y) = (TriTerm::Leaf(Gen::base(0)), TriTerm::Leaf(Gen::base(1)));
        let mut rel = TriPoly::term(rat(1), TriTerm::node(TriOp::Dashv, x.clone(), y.clone()));
        rel.add_term(rat(1), TriTerm::node(TriOp::Dashv, y.clone(), x.clone()));
        rel.add_term(rat(1), y.clone());
        let rels = vec![rel];
        let rels_enc: Vec<TermMap> = {
            let e = replication::encode(&rels[0], Flavor::Lie);
            let f = replication::phi(&e, Flavor::Lie);
            vec![e, f]
        };
        let span = ideal_span(&rels_enc, Flavor::Lie, &a, 3);
        let state = replication::completed_state(
            &rels,
            Flavor::Lie,
            Mode::Di,
            &a,
            3,
            crate::gsb::DEFAULT_STEP_BOUND,
        )
        .unwrap();
        assert!(state.is_complete());
        let letters = a.gens_desc();
        for w in lyndon::enumerate_ls_words(&letters, 3) {
            if w.dotted_degree() != 1 {
                continue;
            }
            let probe = poly::single(w.clone());
            let by_oracle = span.contains(&probe).unwrap();
            let by_engine = state.normal_form(&probe).is_empty();
            assert_eq!(by_engine, by_oracle, "word {:?}", w.letters());
        }
    }

    /// The six replicated product shapes generate, inside the doubled
    /// ideal, exactly its intersection with the encoded subspace.
    #[test]
    fn replicated_ideal_matches_intersection() {
        let a = xy();
        let mut rng = StdRng::seed_from_u64(5);
        let max_deg = 3;
        for _ in 0..3 {
            let nrels = rng.random_range(1..=2);
            let rels: Vec<TriPoly> = (0..nrels)
                .map(|_| {
                    let mut p = TriPoly::zero();
                    for _ in 0..rng.random_range(1..=2) {
                        let t =
                            crate::replication::random_tri_term(&mut rng, 2, Mode::Tri);
                        p.add_term(rat(rng.random_range(-2..=2)), t);
                    }
                    p
                })
                .filter(|p| !p.is_zero())
                .collect();
            if rels.is_empty() {
                continue;
            }
            let rels_enc: Vec<TermMap> = rels
                .iter()
                .flat_map(|r| {
                    let e = replication::encode(r, Flavor::Lie);
                    let f = replication::phi(&e, Flavor::Lie);
                    [e, f]
                })
                .filter(|t| !t.is_empty())
                .collect();
            let span = ideal_span(&rels_enc, Flavor::Lie, &a, max_deg);

            // closure of the encoded relations under the six replicated
            // product shapes
            let letters = a.gens_desc();
            let mut jspan = GradedSpan::empty(&letters, Flavor::Lie, max_deg);
            for r in &rels {
                let e = replication::encode(r, Flavor::Lie);
                if !e.is_empty() && poly_max_degree(&e) <= max_deg {
                    let v = jspan.vector(&e).unwrap();
                    jspan.insert(v);
                }
            }
            let vmons: Vec<TermMap> = monomial_basis(&letters, Flavor::Lie, max_deg)
                .into_iter()
                .filter(|w| w.dotted_degree() >= 1)
                .map(poly::single)
                .collect();
            let mut ctx = LieCtx::new();
            loop {
                let mut grew = false;
                let current = jspan.row_polys();
                for j in &current {
                    for u in &vmons {
                        if poly_max_degree(j) + poly_max_degree(u) > max_deg {
                            continue;
                        }
                        let pu = replication::phi(u, Flavor::Lie);
                        let pj = replication::phi(j, Flavor::Lie);
                        let products = [
                            product(&pu, j, Flavor::Lie, &mut ctx), // V |- J
                            product(j, &pu, Flavor::Lie, &mut ctx), // J -| V
                            product(u, &pj, Flavor::Lie, &mut ctx), // V -| J
                            product(&pj, u, Flavor::Lie, &mut ctx), // J |- V
                            product(j, u, Flavor::Lie, &mut ctx),   // J <> V
                            product(u, j, Flavor::Lie, &mut ctx),   // V <> J
                        ];
                        for p in products {
                            if p.is_empty() {
                                continue;
                            }
                            let v = jspan.vector(&p).unwrap();
                            if jspan.insert(v) {
                                grew = true;
                            }
                        }
                    }
                }
                if !grew {
                    break;
                }
            }

            let keep: Vec<bool> = span
                .basis()
                .iter()
                .map(|w| w.dotted_degree() >= 1)
                .collect();
            let mut inter = intersect_coordinate_subspace(span.rows(), &keep);
            rref(&mut inter);
            let mut jrows = jspan.rows.clone();
            rref(&mut jrows);
            assert_eq!(inter, jrows);
        }
    }
}
