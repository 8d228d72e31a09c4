//! Shared arithmetic kernel for the Lie and associative polynomial stores.
//!
//! Both flavors keep their terms as a `BTreeMap` from deg-lex ordered words
//! to nonzero rationals, so leading-term access, linear combination and
//! monic normalization are written once.

use crate::words::Word;
use crate::Rat;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Term store: deg-lex ordered words mapped to nonzero rational coefficients.
pub type TermMap = BTreeMap<Word, Rat>;

/// Leading term: the deg-lex greatest word.
pub fn leading(terms: &TermMap) -> Option<(&Word, &Rat)> {
    terms.iter().next_back()
}

pub fn add_scaled(dst: &mut TermMap, src: &TermMap, c: &Rat) {
    if c.is_zero() {
        return;
    }
    for (w, coeff) in src {
        add_term(dst, w.clone(), coeff * c);
    }
}

pub fn add_term(dst: &mut TermMap, w: Word, c: Rat) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match dst.entry(w) {
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

pub fn scale(terms: &TermMap, c: &Rat) -> TermMap {
    if c.is_zero() {
        return TermMap::new();
    }
    terms.iter().map(|(w, v)| (w.clone(), v * c)).collect()
}

pub fn neg(terms: &TermMap) -> TermMap {
    terms.iter().map(|(w, v)| (w.clone(), -v)).collect()
}

pub fn sub(a: &TermMap, b: &TermMap) -> TermMap {
    let mut out = a.clone();
    add_scaled(&mut out, b, &-Rat::one());
    out
}

pub fn single(w: Word) -> TermMap {
    let mut m = TermMap::new();
    m.insert(w, Rat::one());
    m
}

/// Attempted on the zero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZeroPoly;

impl std::fmt::Display for ZeroPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "operation undefined on the zero polynomial")
    }
}

impl std::error::Error for ZeroPoly {}

/// Divide by the leading coefficient.
pub fn monic(terms: &TermMap) -> Result<TermMap, ZeroPoly> {
    let (_, lc) = leading(terms).ok_or(ZeroPoly)?;
    let inv = Rat::one() / lc.clone();
    Ok(scale(terms, &inv))
}
