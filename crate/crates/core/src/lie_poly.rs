//! Lie polynomials with exact rational coefficients in the non-associative
//! Lyndon–Shirshov basis.
//!
//! Arbitrary bracketed expressions are rewritten into the basis bottom-up:
//! a product of two basis words is either already standard, or it is
//! reoriented by anticommutativity, or the left factor is split at its
//! standard factorization and the Jacobi identity is applied. The rewriting
//! is cross-checked elsewhere against the associative expansion.

use crate::lyndon::{self, NlsWord, Scheme};
use crate::poly::{self, TermMap, ZeroPoly};
use crate::symbols::Gen;
use crate::words::{cmp_lex_prime, Word};
use crate::Rat;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};

/// Bracketed expression over generators, with no LS constraint on the shape.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BracketTree {
    Leaf(Gen),
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn leaf(g: Gen) -> BracketTree {
        BracketTree::Leaf(g)
    }

    pub fn node(l: BracketTree, r: BracketTree) -> BracketTree {
        BracketTree::Node(Box::new(l), Box::new(r))
    }

    pub fn degree(&self) -> usize {
        match self {
            BracketTree::Leaf(_) => 1,
            BracketTree::Node(l, r) => l.degree() + r.degree(),
        }
    }

    pub fn frontier(&self) -> Word {
        let mut letters = Vec::new();
        self.collect_leaves(&mut letters);
        Word::new(letters)
    }

    fn collect_leaves(&self, out: &mut Vec<Gen>) {
        match self {
            BracketTree::Leaf(g) => out.push(*g),
            BracketTree::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn map_leaves(&self, f: &impl Fn(Gen) -> Gen) -> BracketTree {
        match self {
            BracketTree::Leaf(g) => BracketTree::Leaf(f(*g)),
            BracketTree::Node(l, r) => BracketTree::node(l.map_leaves(f), r.map_leaves(f)),
        }
    }
}

/// The standard bracketing of an NLS word as a tree.
pub fn tree_of(w: &NlsWord) -> BracketTree {
    match w.split() {
        None => BracketTree::Leaf(w.word().letters()[0]),
        Some((l, r)) => BracketTree::node(tree_of(&l), tree_of(&r)),
    }
}

/// Memo for basis rewriting, reusable across calls.
#[derive(Default)]
pub struct LieCtx {
    memo: HashMap<(Word, Word), TermMap>,
    in_progress: HashSet<(Word, Word)>,
}

impl LieCtx {
    pub fn new() -> LieCtx {
        LieCtx::default()
    }
}

/// `Some(pq)` when the concatenation of the LS words `p` and `q` is an LS
/// word whose standard factorization splits exactly between them.
fn standard_pair(p: &Word, q: &Word) -> Option<Word> {
    let w = p.concat(q);
    if lyndon::is_ls_word(&w) {
        let (l, _) = lyndon::std_split(&w).expect("concatenation has length >= 2");
        if l.len() == p.len() {
            return Some(w);
        }
    }
    None
}

/// Bracket of two basis words, as a basis combination.
fn nls_mul(p: &Word, q: &Word, ctx: &mut LieCtx) -> TermMap {
    if p == q {
        return TermMap::new();
    }
    let key = (p.clone(), q.clone());
    if let Some(hit) = ctx.memo.get(&key) {
        return hit.clone();
    }
    let res = match cmp_lex_prime(p.letters(), q.letters()) {
        Ordering::Less => poly::neg(&nls_mul(q, p, ctx)),
        Ordering::Equal => unreachable!("distinct words compare unequal"),
        Ordering::Greater => {
            assert!(
                ctx.in_progress.insert(key.clone()),
                "internal invariant violated: cyclic LS rewriting"
            );
            let res = if let Some(w) = standard_pair(p, q) {
                poly::single(w)
            } else {
                let (p1, p2) = lyndon::std_split(p).unwrap_or_else(|| {
                    panic!("internal invariant violated: non-standard letter pair")
                });
                // [[p1 p2] q] = [[p1 q] p2] + [p1 [p2 q]]
                let left = nls_mul(&p1, q, ctx);
                let mut acc = bracket_terms(&left, &poly::single(p2.clone()), ctx);
                let right = nls_mul(&p2, q, ctx);
                poly::add_scaled(
                    &mut acc,
                    &bracket_terms(&poly::single(p1), &right, ctx),
                    &Rat::one(),
                );
                acc
            };
            ctx.in_progress.remove(&key);
            res
        }
    };
    ctx.memo.insert(key, res.clone());
    res
}

/// Bilinear bracket on term stores with LS-word keys.
pub(crate) fn bracket_terms(f: &TermMap, g: &TermMap, ctx: &mut LieCtx) -> TermMap {
    let mut acc = TermMap::new();
    for (wf, cf) in f {
        for (wg, cg) in g {
            let prod = nls_mul(wf, wg, ctx);
            poly::add_scaled(&mut acc, &prod, &(cf * cg));
        }
    }
    acc
}

pub(crate) fn tree_terms(t: &BracketTree, ctx: &mut LieCtx) -> TermMap {
    match t {
        BracketTree::Leaf(g) => poly::single(Word::single(*g)),
        BracketTree::Node(l, r) => {
            let lt = tree_terms(l, ctx);
            let rt = tree_terms(r, ctx);
            bracket_terms(&lt, &rt, ctx)
        }
    }
}

/// Substitute a polynomial for the hole of a bracketing scheme.
pub(crate) fn substitute_terms(s: &Scheme, g: &TermMap, ctx: &mut LieCtx) -> TermMap {
    match s {
        Scheme::Star => g.clone(),
        Scheme::Leaf(x) => poly::single(Word::single(*x)),
        Scheme::Node(l, r) => {
            let lt = substitute_terms(l, g, ctx);
            let rt = substitute_terms(r, g, ctx);
            bracket_terms(&lt, &rt, ctx)
        }
    }
}

/// A Lie polynomial: a finite combination of NLS basis words.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct LiePoly {
    terms: TermMap,
}

impl LiePoly {
    pub fn zero() -> LiePoly {
        LiePoly::default()
    }

    pub fn gen(g: Gen) -> LiePoly {
        LiePoly {
            terms: poly::single(Word::single(g)),
        }
    }

    pub fn nls(w: NlsWord) -> LiePoly {
        LiePoly {
            terms: poly::single(w.into_word()),
        }
    }

    /// Wrap a term store, checking every key is an LS word.
    pub fn from_terms(terms: TermMap) -> Result<LiePoly, lyndon::LyndonError> {
        for w in terms.keys() {
            lyndon::standard_bracketing(w)?;
        }
        Ok(LiePoly { terms })
    }

    pub fn terms(&self) -> &TermMap {
        &self.terms
    }

    pub fn into_terms(self) -> TermMap {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &LiePoly) -> LiePoly {
        let mut terms = self.terms.clone();
        poly::add_scaled(&mut terms, &other.terms, &Rat::one());
        LiePoly { terms }
    }

    pub fn sub(&self, other: &LiePoly) -> LiePoly {
        LiePoly {
            terms: poly::sub(&self.terms, &other.terms),
        }
    }

    pub fn neg(&self) -> LiePoly {
        LiePoly {
            terms: poly::neg(&self.terms),
        }
    }

    pub fn scale(&self, c: &Rat) -> LiePoly {
        LiePoly {
            terms: poly::scale(&self.terms, c),
        }
    }

    /// Leading NLS word and coefficient under deg-lex on frontiers.
    pub fn leading(&self) -> Option<(&Word, &Rat)> {
        poly::leading(&self.terms)
    }

    pub fn monic(&self) -> Result<LiePoly, ZeroPoly> {
        Ok(LiePoly {
            terms: poly::monic(&self.terms)?,
        })
    }

    /// Rewrite a bracketed expression into the basis.
    pub fn from_tree(t: &BracketTree) -> LiePoly {
        Self::from_tree_in(t, &mut LieCtx::new())
    }

    pub fn from_tree_in(t: &BracketTree, ctx: &mut LieCtx) -> LiePoly {
        LiePoly {
            terms: tree_terms(t, ctx),
        }
    }

    pub fn bracket(&self, other: &LiePoly) -> LiePoly {
        self.bracket_in(other, &mut LieCtx::new())
    }

    pub fn bracket_in(&self, other: &LiePoly, ctx: &mut LieCtx) -> LiePoly {
        LiePoly {
            terms: bracket_terms(&self.terms, &other.terms, ctx),
        }
    }

    /// Erase every dot and renormalize to the basis.
    pub fn erase_dots(&self) -> LiePoly {
        let mut ctx = LieCtx::new();
        let mut acc = TermMap::new();
        for (w, c) in &self.terms {
            let nls = NlsWord::new(w.clone()).expect("stored keys are LS words");
            let tree = tree_of(&nls).map_leaves(&|g| g.erase_dot());
            poly::add_scaled(&mut acc, &tree_terms(&tree, &mut ctx), c);
        }
        LiePoly { terms: acc }
    }

    /// Image under the homomorphism sending each generator to a vector of a
    /// finite-dimensional algebra with the given bilinear product.
    pub fn evaluate(
        &self,
        assign: &BTreeMap<Gen, Vec<Rat>>,
        table: &BilinearTable,
    ) -> Result<Vec<Rat>, EvalError> {
        for v in assign.values() {
            if v.len() != table.dim {
                return Err(EvalError::DimensionMismatch);
            }
        }
        let mut acc = vec![Rat::zero(); table.dim];
        for (w, c) in &self.terms {
            let nls = NlsWord::new(w.clone()).expect("stored keys are LS words");
            let v = eval_word(&nls, assign, table)?;
            for (a, b) in acc.iter_mut().zip(v) {
                *a += b * c;
            }
        }
        Ok(acc)
    }
}

fn eval_word(
    w: &NlsWord,
    assign: &BTreeMap<Gen, Vec<Rat>>,
    table: &BilinearTable,
) -> Result<Vec<Rat>, EvalError> {
    match w.split() {
        None => {
            let g = w.word().letters()[0];
            assign.get(&g).cloned().ok_or(EvalError::Unassigned)
        }
        Some((l, r)) => {
            let lv = eval_word(&l, assign, table)?;
            let rv = eval_word(&r, assign, table)?;
            Ok(table.apply(&lv, &rv))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalError {
    DimensionMismatch,
    Unassigned,
}

impl std::fmt::Display for EvalError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EvalError::DimensionMismatch => write!(f, "vector dimension mismatch"),
            EvalError::Unassigned => write!(f, "generator without an assigned vector"),
        }
    }
}

impl std::error::Error for EvalError {}

/// A bilinear product on k^n given by structure vectors `prod[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearTable {
    dim: usize,
    prod: Vec<Vec<Vec<Rat>>>,
}

impl BilinearTable {
    pub fn new(dim: usize, prod: Vec<Vec<Vec<Rat>>>) -> Result<BilinearTable, EvalError> {
        if prod.len() != dim
            || prod
                .iter()
                .any(|row| row.len() != dim || row.iter().any(|v| v.len() != dim))
        {
            return Err(EvalError::DimensionMismatch);
        }
        Ok(BilinearTable { dim, prod })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &[Rat] {
        &self.prod[i][j]
    }

    pub fn apply(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                for (o, p) in out.iter_mut().zip(&self.prod[i][j]) {
                    *o += p * ai * bj;
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc_poly::AssocPoly;
    use crate::rat;
    use proptest::prelude::*;

    fn a() -> Gen {
        Gen::base(0)
    }

    fn b() -> Gen {
        Gen::base(1)
    }

    fn word(s: &str) -> Word {
        Word::new(
            s.chars()
                .map(|c| match c {
                    'a' => a(),
                    'b' => b(),
                    _ => unreachable!(),
                })
                .collect(),
        )
    }

    fn leaf(g: Gen) -> BracketTree {
        BracketTree::leaf(g)
    }

    #[test]
    fn basis_elements_pass_through() {
        // [a,[a,b]] is already the standard bracketing of aab
        let t = BracketTree::node(leaf(a()), BracketTree::node(leaf(a()), leaf(b())));
        let p = LiePoly::from_tree(&t);
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.leading().unwrap(), (&word("aab"), &rat(1)));
    }

    #[test]
    fn anticommutativity_rewrites() {
        // [[b,a],a] = [a,[a,b]]
        let t = BracketTree::node(BracketTree::node(leaf(b()), leaf(a())), leaf(a()));
        let p = LiePoly::from_tree(&t);
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.leading().unwrap(), (&word("aab"), &rat(1)));
    }

    #[test]
    fn alternation_vanishes() {
        let t = BracketTree::node(leaf(a()), leaf(a()));
        assert!(LiePoly::from_tree(&t).is_zero());
        let f = LiePoly::gen(a()).bracket(&LiePoly::gen(b()));
        assert!(f.bracket(&f).is_zero());
    }

    #[test]
    fn bracket_examples() {
        let pa = LiePoly::gen(a());
        let pb = LiePoly::gen(b());
        let ab = pa.bracket(&pb);
        assert_eq!(ab.leading().unwrap(), (&word("ab"), &rat(1)));
        let ba = pb.bracket(&pa);
        assert_eq!(ba, ab.neg());
        // [[ab] a] = -[a[ab]]
        let left = ab.bracket(&pa);
        assert_eq!(left.leading().unwrap(), (&word("aab"), &rat(-1)));
        assert_eq!(left.terms().len(), 1);
    }

    #[test]
    fn leading_and_monic() {
        let pa = LiePoly::gen(a());
        let pb = LiePoly::gen(b());
        let f = pa.bracket(&pb).scale(&rat(2)).add(&pb.scale(&rat(3)));
        assert_eq!(f.leading().unwrap(), (&word("ab"), &rat(2)));
        let m = f.monic().unwrap();
        assert_eq!(m.leading().unwrap().1, &rat(1));
        assert_eq!(m.terms()[&word("b")], crate::frac(3, 2));
        assert!(LiePoly::zero().monic().is_err());
        let five_a = pa.scale(&rat(5));
        assert_eq!(five_a.leading().unwrap(), (&word("a"), &rat(5)));
    }

    #[test]
    fn doubled_alphabet_leading() {
        // [ẋy] + [ẏx] + ẏ has leading [ẋy]
        let (xd, yd, x, y) = (Gen::dotted(0), Gen::dotted(1), Gen::base(0), Gen::base(1));
        let f = LiePoly::gen(xd)
            .bracket(&LiePoly::gen(y))
            .add(&LiePoly::gen(yd).bracket(&LiePoly::gen(x)))
            .add(&LiePoly::gen(yd));
        let lead = f.leading().unwrap().0;
        assert_eq!(lead, &Word::new(vec![xd, y]));
        let _ = lead;
    }

    #[test]
    fn erase_dots_renormalizes() {
        // [ẋ[ẏx]] erases to [x[yx]] = -[x[xy]]
        let (xd, yd, x) = (Gen::dotted(0), Gen::dotted(1), Gen::base(0));
        let inner = LiePoly::gen(yd).bracket(&LiePoly::gen(x));
        let f = LiePoly::gen(xd).bracket(&inner);
        let erased = f.erase_dots();
        let expected = {
            let x = LiePoly::gen(Gen::base(0));
            let y = LiePoly::gen(Gen::base(1));
            x.bracket(&x.bracket(&y)).neg()
        };
        assert_eq!(erased, expected);
        // idempotent
        assert_eq!(erased.erase_dots(), erased);
    }

    #[test]
    fn evaluate_in_table() {
        // bracket table on k^2 with [e1 e2] = e2
        let z = Rat::zero;
        let e2 = || vec![z(), rat(1)];
        let zero = || vec![z(), z()];
        let prod = vec![
            vec![zero(), e2()],
            vec![vec![z(), rat(-1)], zero()],
        ];
        let table = BilinearTable::new(2, prod).unwrap();
        let mut assign = BTreeMap::new();
        assign.insert(a(), vec![rat(1), z()]);
        assign.insert(b(), vec![z(), rat(1)]);
        let f = LiePoly::gen(a()).bracket(&LiePoly::gen(b()));
        assert_eq!(f.evaluate(&assign, &table).unwrap(), vec![rat(0), rat(1)]);
        assert_eq!(
            LiePoly::zero().evaluate(&assign, &table).unwrap(),
            vec![rat(0), rat(0)]
        );
        // Jacobi combination evaluates to zero in any Lie table
        let (pa, pb) = (LiePoly::gen(a()), LiePoly::gen(b()));
        let pc = pa.bracket(&pb);
        let jac = pa
            .bracket(&pb)
            .bracket(&pc)
            .add(&pb.bracket(&pc).bracket(&pa))
            .add(&pc.bracket(&pa).bracket(&pb));
        assert_eq!(jac.evaluate(&assign, &table).unwrap(), vec![rat(0), rat(0)]);
    }

    fn arb_tree(max_depth: u32) -> impl Strategy<Value = BracketTree> {
        let leaf = (0..2usize).prop_map(|i| BracketTree::leaf(Gen::base(i)));
        leaf.prop_recursive(max_depth, 16, 2, |inner| {
            (inner.clone(), inner).prop_map(|(l, r)| BracketTree::node(l, r))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        /// The basis rewriting agrees with the associative expansion.
        #[test]
        fn rewriting_matches_associative_expansion(t in arb_tree(3)) {
            let via_basis = AssocPoly::expand_lie(&LiePoly::from_tree(&t));
            let direct = AssocPoly::expand_tree(&t);
            prop_assert_eq!(via_basis, direct);
        }

        #[test]
        fn jacobi_identity(x in arb_tree(2), y in arb_tree(2), z in arb_tree(2)) {
            let (f, g, h) = (
                LiePoly::from_tree(&x),
                LiePoly::from_tree(&y),
                LiePoly::from_tree(&z),
            );
            let total = f
                .bracket(&g)
                .bracket(&h)
                .add(&g.bracket(&h).bracket(&f))
                .add(&h.bracket(&f).bracket(&g));
            prop_assert!(total.is_zero());
        }

        #[test]
        fn rewriting_is_linear(s in arb_tree(2), t in arb_tree(2)) {
            let sum = LiePoly::from_tree(&s).add(&LiePoly::from_tree(&t));
            let both = AssocPoly::expand_tree(&s).add(&AssocPoly::expand_tree(&t));
            prop_assert_eq!(AssocPoly::expand_lie(&sum), both);
        }
    }

    #[test]
    fn monic_leading_coefficient_is_one() {
        let f = LiePoly::gen(a())
            .bracket(&LiePoly::gen(b()))
            .scale(&rat(-7))
            .add(&LiePoly::gen(b()));
        assert_eq!(f.monic().unwrap().leading().unwrap().1, &rat(1));
    }

    /// Rewriting a standard bracketing returns the basis word itself.
    #[test]
    fn rewriting_is_idempotent_on_basis_words() {
        use crate::lyndon;
        let letters = [a(), b()];
        for w in lyndon::enumerate_ls_words(&letters, 5) {
            let nls = lyndon::standard_bracketing(&w).unwrap();
            let p = LiePoly::from_tree(&tree_of(&nls));
            assert_eq!(p, LiePoly::nls(nls), "word {:?}", w.letters());
        }
    }
}
