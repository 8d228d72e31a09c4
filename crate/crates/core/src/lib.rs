//! Gröbner–Shirshov bases over a doubled alphabet.
//!
//! The crate computes in free Lie and free associative algebras on an
//! alphabet `X ∪ Ẋ` (each base letter together with a dotted copy). Relations
//! written in the di- or tri-algebra operations `|-`, `-|`, `<>` are encoded
//! as ordinary polynomials over the doubled alphabet, the encoded set plus
//! its dot-erased image is completed to a degree-bounded Gröbner–Shirshov
//! basis, and ideal membership, normal forms and linear bases of the quotient
//! are read off from reduced words. The same engine drives presentations of
//! universal envelopes of Lie algebras and Lie tri-algebras.
//!
//! Modules:
//! - [`symbols`], [`words`]: alphabets, deg-lex ordered words, subword search.
//! - [`lyndon`]: Lyndon–Shirshov words, standard and special bracketing.
//! - [`lie_poly`], [`assoc_poly`]: exact-rational polynomials in the
//!   non-associative LS basis and over plain words.
//! - [`gsb`]: normal forms, compositions, degree-bounded completion.
//! - [`replication`]: di/tri terms, the encoding into the doubled alphabet,
//!   and the membership pipeline.
//! - [`envelopes`]: multiplication tables, envelope presentations, PBW bases.
//! - [`oracle`]: brute-force linear-algebra cross checks.
//! - [`text`]: canonical printing and parsing shared with the CLI.

pub mod assoc_poly;
pub mod envelopes;
pub mod gsb;
pub mod lie_poly;
pub mod lyndon;
mod poly;
pub mod oracle;
pub mod replication;
pub mod symbols;
pub mod text;
pub mod words;

pub use poly::TermMap;

/// Exact rational scalar used throughout.
pub type Rat = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(num_bigint::BigInt::from(n))
}

/// Fraction `p/q` in lowest terms. Panics on `q == 0`.
pub fn frac(p: i64, q: i64) -> Rat {
    Rat::new(num_bigint::BigInt::from(p), num_bigint::BigInt::from(q))
}
