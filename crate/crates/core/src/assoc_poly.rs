//! Associative polynomials over plain words, and the bracket-erasing
//! expansion of Lie polynomials.

use crate::lie_poly::{BracketTree, LiePoly};
use crate::lyndon::NlsWord;
use crate::poly::{self, TermMap, ZeroPoly};
use crate::symbols::Gen;
use crate::words::Word;
use crate::Rat;
use num_traits::One;
use std::collections::HashMap;

/// An associative polynomial: words mapped to nonzero rational coefficients.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct AssocPoly {
    terms: TermMap,
}

impl AssocPoly {
    pub fn zero() -> AssocPoly {
        AssocPoly::default()
    }

    pub fn gen(g: Gen) -> AssocPoly {
        AssocPoly {
            terms: poly::single(Word::single(g)),
        }
    }

    pub fn word(w: Word) -> AssocPoly {
        AssocPoly {
            terms: poly::single(w),
        }
    }

    pub fn from_terms(terms: TermMap) -> AssocPoly {
        AssocPoly { terms }
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

    pub fn add(&self, other: &AssocPoly) -> AssocPoly {
        let mut terms = self.terms.clone();
        poly::add_scaled(&mut terms, &other.terms, &Rat::one());
        AssocPoly { terms }
    }

    pub fn sub(&self, other: &AssocPoly) -> AssocPoly {
        AssocPoly {
            terms: poly::sub(&self.terms, &other.terms),
        }
    }

    pub fn neg(&self) -> AssocPoly {
        AssocPoly {
            terms: poly::neg(&self.terms),
        }
    }

    pub fn scale(&self, c: &Rat) -> AssocPoly {
        AssocPoly {
            terms: poly::scale(&self.terms, c),
        }
    }

    /// Concatenation product, extended bilinearly.
    pub fn multiply(&self, other: &AssocPoly) -> AssocPoly {
        let mut acc = TermMap::new();
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                poly::add_term(&mut acc, u.concat(v), cu * cv);
            }
        }
        AssocPoly { terms: acc }
    }

    pub fn leading(&self) -> Option<(&Word, &Rat)> {
        poly::leading(&self.terms)
    }

    pub fn monic(&self) -> Result<AssocPoly, ZeroPoly> {
        Ok(AssocPoly {
            terms: poly::monic(&self.terms)?,
        })
    }

    /// Erase dots letterwise.
    pub fn erase_dots(&self) -> AssocPoly {
        let mut acc = TermMap::new();
        for (w, c) in &self.terms {
            poly::add_term(&mut acc, w.map_letters(Gen::erase_dot), c.clone());
        }
        AssocPoly { terms: acc }
    }

    /// Expand brackets via `[p, q] -> pq - qp`.
    pub fn expand_lie(f: &LiePoly) -> AssocPoly {
        let mut memo = HashMap::new();
        let mut acc = TermMap::new();
        for (w, c) in f.terms() {
            let nls = NlsWord::new(w.clone()).expect("Lie keys are LS words");
            poly::add_scaled(&mut acc, &expand_nls(&nls, &mut memo), c);
        }
        AssocPoly { terms: acc }
    }

    /// Expand an arbitrary bracketed expression, without going through the
    /// LS basis. Independent route used to cross-check the basis rewriting.
    pub fn expand_tree(t: &BracketTree) -> AssocPoly {
        match t {
            BracketTree::Leaf(g) => AssocPoly::gen(*g),
            BracketTree::Node(l, r) => {
                let a = AssocPoly::expand_tree(l);
                let b = AssocPoly::expand_tree(r);
                a.multiply(&b).sub(&b.multiply(&a))
            }
        }
    }
}

fn expand_nls(w: &NlsWord, memo: &mut HashMap<Word, TermMap>) -> TermMap {
    if let Some(hit) = memo.get(w.word()) {
        return hit.clone();
    }
    let res = match w.split() {
        None => poly::single(w.word().clone()),
        Some((l, r)) => {
            let a = expand_nls(&l, memo);
            let b = expand_nls(&r, memo);
            let mut acc = TermMap::new();
            for (u, cu) in &a {
                for (v, cv) in &b {
                    poly::add_term(&mut acc, u.concat(v), cu * cv);
                    poly::add_term(&mut acc, v.concat(u), -(cu * cv));
                }
            }
            acc
        }
    };
    memo.insert(w.word().clone(), res.clone());
    res
}
