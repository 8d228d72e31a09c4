//! Associative words with the deg-lex order and subword search.

use crate::symbols::Gen;
use std::cmp::Ordering;
use std::ops::Range;

/// Nonempty associative word over a doubled alphabet.
///
/// `Ord` is deg-lex: shorter words come first, equal lengths compare
/// letterwise by the alphabet order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word(Vec<Gen>);

impl Word {
    pub fn new(letters: Vec<Gen>) -> Word {
        assert!(!letters.is_empty(), "words are nonempty");
        Word(letters)
    }

    pub fn single(g: Gen) -> Word {
        Word(vec![g])
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of dotted letters.
    pub fn dotted_degree(&self) -> usize {
        self.0.iter().filter(|g| g.is_dotted()).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Subword at `range`; panics if the range is empty or out of bounds.
    pub fn slice(&self, range: Range<usize>) -> Word {
        Word::new(self.0[range].to_vec())
    }

    /// The rotation starting at position `k`.
    pub fn rotation(&self, k: usize) -> Word {
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    pub fn map_letters(&self, f: impl Fn(Gen) -> Gen) -> Word {
        Word(self.0.iter().map(|&g| f(g)).collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The deg-lex comparison, exposed by name.
pub fn compare_deglex(u: &Word, v: &Word) -> Ordering {
    u.cmp(v)
}

/// Lexicographic order in which a proper prefix is *greater* than its
/// extensions. This is the order under which two Lyndon–Shirshov words
/// concatenate to a Lyndon–Shirshov word exactly when the left one is
/// greater.
pub fn cmp_lex_prime(a: &[Gen], b: &[Gen]) -> Ordering {
    let n = a.len().min(b.len());
    for i in 0..n {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    // prefix above extension
    b.len().cmp(&a.len())
}

/// Start positions of every occurrence of `v` inside `w`, leftmost first.
/// Position `p` splits `w` as `w[..p] · v · w[p + |v|..]`.
pub fn find_occurrences(w: &Word, v: &Word) -> Vec<usize> {
    let (w, v) = (w.letters(), v.letters());
    if v.len() > w.len() {
        return Vec::new();
    }
    (0..=w.len() - v.len())
        .filter(|&p| &w[p..p + v.len()] == v)
        .collect()
}

/// Proper overlaps of a suffix of `v1` with a prefix of `v2`: the returned
/// lengths `l` satisfy `1 <= l < min(|v1|, |v2|)` and
/// `v1[|v1|-l..] == v2[..l]`. Full containment is excluded; it is an
/// occurrence, not an overlap.
pub fn overlaps(v1: &Word, v2: &Word) -> Vec<usize> {
    let (a, b) = (v1.letters(), v2.letters());
    (1..a.len().min(b.len()))
        .filter(|&l| a[a.len() - l..] == b[..l])
        .collect()
}

/// The overlap witness `u u' u''` for overlap length `l`: `v1` extended by
/// the tail of `v2`.
pub fn overlap_witness(v1: &Word, v2: &Word, l: usize) -> Word {
    v1.concat(&v2.slice(l..v2.len()))
}

/// All words of degree `<= max_deg` over the given letters, ascending
/// deg-lex.
pub fn enumerate_words(letters: &[Gen], max_deg: usize) -> Vec<Word> {
    let mut asc: Vec<Gen> = letters.to_vec();
    asc.sort();
    let k = asc.len();
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    for d in 1..=max_deg {
        let mut digits = vec![0usize; d];
        loop {
            out.push(Word::new(digits.iter().map(|&i| asc[i]).collect()));
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::Alphabet;
    use proptest::prelude::*;

    fn ab() -> (Gen, Gen) {
        // a > b
        (Gen::base(0), Gen::base(1))
    }

    fn word(s: &str) -> Word {
        let (a, b) = ab();
        Word::new(
            s.chars()
                .map(|c| match c {
                    'a' => a,
                    'b' => b,
                    _ => unreachable!(),
                })
                .collect(),
        )
    }

    #[test]
    fn deglex_examples() {
        // length first
        assert!(word("b") < word("aa"));
        // then letterwise
        assert!(word("ab") > word("ba"));
        assert!(word("aab") > word("aba"));
    }

    #[test]
    fn occurrences_examples() {
        let hits = find_occurrences(&word("aba"), &word("a"));
        assert_eq!(hits, vec![0, 2]);
        assert_eq!(find_occurrences(&word("aa"), &word("aa")), vec![0]);
        assert_eq!(find_occurrences(&word("ab"), &word("ba")), Vec::<usize>::new());
    }

    #[test]
    fn occurrences_reconstitute() {
        let w = word("aabab");
        let v = word("ab");
        for p in find_occurrences(&w, &v) {
            let mut rebuilt = Vec::new();
            rebuilt.extend_from_slice(&w.letters()[..p]);
            rebuilt.extend_from_slice(v.letters());
            rebuilt.extend_from_slice(&w.letters()[p + v.len()..]);
            assert_eq!(rebuilt, w.letters());
        }
        assert_eq!(find_occurrences(&w, &v).len(), 2);
    }

    #[test]
    fn overlap_examples() {
        assert_eq!(overlaps(&word("ab"), &word("ba")), vec![1]);
        assert_eq!(overlap_witness(&word("ab"), &word("ba"), 1), word("aba"));
        assert_eq!(overlaps(&word("aab"), &word("ba")), vec![1]);
        assert_eq!(overlap_witness(&word("aab"), &word("ba"), 1), word("aaba"));
        assert!(overlaps(&word("ab"), &word("ab")).is_empty());
        // disjoint letters over a bigger alphabet
        let abc = Alphabet::double(["a", "b", "c", "d"]).unwrap();
        let _ = abc;
        let w1 = Word::new(vec![Gen::base(0), Gen::base(1)]);
        let w2 = Word::new(vec![Gen::base(2), Gen::base(3)]);
        assert!(overlaps(&w1, &w2).is_empty());
    }

    #[test]
    fn overlap_witness_shorter_than_sum() {
        let (v1, v2) = (word("aab"), word("ba"));
        for l in overlaps(&v1, &v2) {
            assert!(overlap_witness(&v1, &v2, l).len() < v1.len() + v2.len());
        }
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        proptest::collection::vec(0..2u16, 1..6).prop_map(|ls| {
            Word::new(ls.into_iter().map(|i| Gen::base(i as usize)).collect())
        })
    }

    proptest! {
        #[test]
        fn deglex_compatible_with_concatenation(u in arb_word(), v in arb_word(), w in arb_word()) {
            if u < v {
                prop_assert!(w.concat(&u) < w.concat(&v));
                prop_assert!(u.concat(&w) < v.concat(&w));
            }
        }

        #[test]
        fn occurrences_complete(w in arb_word(), v in arb_word()) {
            let hits = find_occurrences(&w, &v);
            if v.len() <= w.len() {
                for p in 0..=w.len() - v.len() {
                    let here = &w.letters()[p..p + v.len()] == v.letters();
                    prop_assert_eq!(here, hits.contains(&p));
                }
            } else {
                prop_assert!(hits.is_empty());
            }
        }
    }
}
