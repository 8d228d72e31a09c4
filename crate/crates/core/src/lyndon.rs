//! Lyndon–Shirshov words: recognition, standard bracketing, special
//! bracketing around a subword, and enumeration.
//!
//! Convention: an associative word is Lyndon–Shirshov when it is strictly
//! greater than every rotation coming from a proper split. The standard
//! bracketing splits at the longest proper LS suffix. Non-associative LS
//! words (LS words carrying their standard bracketing) form a linear basis
//! of the free Lie algebra, so a word determines its tree and we store only
//! the word.

use crate::symbols::Gen;
use crate::words::{cmp_lex_prime, Word};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LyndonError {
    NotLsWord(String),
    BadOccurrence(String),
}

impl fmt::Display for LyndonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LyndonError::NotLsWord(msg) => write!(f, "not a Lyndon-Shirshov word: {msg}"),
            LyndonError::BadOccurrence(msg) => write!(f, "bad subword occurrence: {msg}"),
        }
    }
}

impl std::error::Error for LyndonError {}

/// A word strictly greater than all rotations from proper splits.
pub fn is_ls_word(u: &Word) -> bool {
    let n = u.len();
    for k in 1..n {
        if u.cmp(&u.rotation(k)) != Ordering::Greater {
            return false;
        }
    }
    true
}

/// Standard factorization: split off the longest proper LS suffix.
/// `None` for single letters. Both parts are again LS words.
pub fn std_split(u: &Word) -> Option<(Word, Word)> {
    if u.len() < 2 {
        return None;
    }
    debug_assert!(is_ls_word(u));
    for k in 1..u.len() {
        let suffix = u.slice(k..u.len());
        if is_ls_word(&suffix) {
            let prefix = u.slice(0..k);
            debug_assert!(is_ls_word(&prefix));
            return Some((prefix, suffix));
        }
    }
    unreachable!("every LS word of length >= 2 has an LS proper suffix");
}

/// An associative LS word standing for its standard bracketing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NlsWord(Word);

impl NlsWord {
    pub fn new(word: Word) -> Result<NlsWord, LyndonError> {
        if is_ls_word(&word) {
            Ok(NlsWord(word))
        } else {
            Err(LyndonError::NotLsWord(format!("{:?}", word.letters())))
        }
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Standard factorization as NLS words; `None` on letters.
    pub fn split(&self) -> Option<(NlsWord, NlsWord)> {
        std_split(&self.0).map(|(l, r)| (NlsWord(l), NlsWord(r)))
    }
}

/// The standard bracketing of an LS word.
pub fn standard_bracketing(u: &Word) -> Result<NlsWord, LyndonError> {
    NlsWord::new(u.clone())
}

/// All associative LS words of degree `<= max_deg` over the given letters,
/// in ascending deg-lex order.
pub fn enumerate_ls_words(letters: &[Gen], max_deg: usize) -> Vec<Word> {
    let mut asc: Vec<Gen> = letters.to_vec();
    asc.sort();
    let k = asc.len();
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    for d in 1..=max_deg {
        // count in base k, least significant digit last, so words come out
        // in ascending lex order within the degree
        let mut digits = vec![0usize; d];
        loop {
            let w = Word::new(digits.iter().map(|&i| asc[i]).collect());
            if is_ls_word(&w) {
                out.push(w);
            }
            let mut pos = d;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < k {
                    break;
                }
                digits[pos] = 0;
            }
            if digits.iter().all(|&x| x == 0) {
                break;
            }
        }
    }
    out
}

/// Bracketing scheme with a hole: the special bracketing `{u ⋆ u'}` of a
/// word around a marked LS subword.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scheme {
    Star,
    Leaf(Gen),
    Node(Box<Scheme>, Box<Scheme>),
}

impl Scheme {
    fn node(l: Scheme, r: Scheme) -> Scheme {
        Scheme::Node(Box::new(l), Box::new(r))
    }
}

fn scheme_of_std(w: &Word) -> Scheme {
    match std_split(w) {
        None => Scheme::Leaf(w.letters()[0]),
        Some((l, r)) => Scheme::node(scheme_of_std(&l), scheme_of_std(&r)),
    }
}

/// Factor a word into LS words by greedily taking the longest LS prefix.
/// Consecutive factors are nondecreasing in the prefix-greater lex order.
pub fn ls_factorize(w: &Word) -> Vec<Word> {
    let letters = w.letters();
    let mut out = Vec::new();
    let mut start = 0;
    while start < letters.len() {
        let mut best = start + 1;
        for end in (start + 1..=letters.len()).rev() {
            if is_ls_word(&Word::new(letters[start..end].to_vec())) {
                best = end;
                break;
            }
        }
        out.push(Word::new(letters[start..best].to_vec()));
        start = best;
    }
    debug_assert!(out
        .windows(2)
        .all(|p| cmp_lex_prime(p[0].letters(), p[1].letters()) != Ordering::Greater));
    out
}

fn build_scheme(w: &Word, at: usize, vlen: usize) -> Scheme {
    if at == 0 && vlen == w.len() {
        return Scheme::Star;
    }
    let (l, r) = std_split(w).expect("occurrence is proper, so the word is composite");
    if at + vlen <= l.len() {
        return Scheme::node(build_scheme(&l, at, vlen), scheme_of_std(&r));
    }
    if at >= l.len() {
        return Scheme::node(scheme_of_std(&l), build_scheme(&r, at - l.len(), vlen));
    }
    // The occurrence straddles the standard split. The enclosing subtree of
    // the standard bracketing then starts exactly at the occurrence, which
    // pins the occurrence to position 0 of the current subword.
    assert_eq!(
        at, 0,
        "internal invariant violated: straddling LS occurrence not at subtree start"
    );
    let tail = w.slice(vlen..w.len());
    let mut acc = Scheme::Star;
    for factor in ls_factorize(&tail) {
        acc = Scheme::node(acc, scheme_of_std(&factor));
    }
    acc
}

/// The bracketing of `w` around the occurrence of the LS subword `v` at
/// position `at`, such that substituting any monic polynomial with leading
/// word `v` for the hole produces a polynomial with leading word `w` and
/// leading coefficient 1. Callers re-check that property on every
/// substitution and abort on mismatch.
pub fn special_bracketing(w: &Word, at: usize, v: &Word) -> Result<Scheme, LyndonError> {
    if !is_ls_word(w) {
        return Err(LyndonError::NotLsWord(format!("{:?}", w.letters())));
    }
    if !is_ls_word(v) {
        return Err(LyndonError::NotLsWord(format!("{:?}", v.letters())));
    }
    if at + v.len() > w.len() || w.letters()[at..at + v.len()] != *v.letters() {
        return Err(LyndonError::BadOccurrence(format!(
            "no occurrence at position {at}"
        )));
    }
    Ok(build_scheme(w, at, v.len()))
}
