//! Ordered alphabets and their dotted copies.
//!
//! A problem declares a base alphabet `X` in descending order. Every
//! computation runs over the doubled alphabet `X ∪ Ẋ`: each base letter gets
//! a dotted copy, every dotted letter is greater than every base letter, and
//! dotting preserves the base order.

use std::cmp::{Ordering, Reverse};
use std::fmt;

/// One letter of a doubled alphabet: a position in the declared base order
/// plus a dotted flag.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Gen {
    dotted: bool,
    idx: u16,
}

impl Gen {
    pub fn base(idx: usize) -> Gen {
        Gen {
            dotted: false,
            idx: idx as u16,
        }
    }

    pub fn dotted(idx: usize) -> Gen {
        Gen {
            dotted: true,
            idx: idx as u16,
        }
    }

    pub fn is_dotted(self) -> bool {
        self.dotted
    }

    /// Position in the declared base order; index 0 is the greatest base letter.
    pub fn index(self) -> usize {
        self.idx as usize
    }

    /// Remove the dot. Identity on base letters.
    pub fn erase_dot(self) -> Gen {
        Gen {
            dotted: false,
            idx: self.idx,
        }
    }
}

impl Ord for Gen {
    fn cmp(&self, other: &Self) -> Ordering {
        // The dotted block sits above the base block; inside a block a
        // smaller index is a greater letter.
        (self.dotted, Reverse(self.idx)).cmp(&(other.dotted, Reverse(other.idx)))
    }
}

impl PartialOrd for Gen {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymbolError {
    EmptyAlphabet,
    DuplicateName(String),
    InvalidName(String),
    UnknownGenerator(String),
}

impl fmt::Display for SymbolError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolError::EmptyAlphabet => write!(f, "alphabet must contain at least one generator"),
            SymbolError::DuplicateName(n) => write!(f, "duplicate generator name `{n}`"),
            SymbolError::InvalidName(n) => write!(f, "invalid generator name `{n}`"),
            SymbolError::UnknownGenerator(n) => write!(f, "unknown generator `{n}`"),
        }
    }
}

impl std::error::Error for SymbolError {}

/// A base alphabet together with its dotted copy.
///
/// Base names are stored in descending order, so `names[0]` is the greatest
/// base letter. The doubled order is `ẋ₀ > ẋ₁ > … > x₀ > x₁ > …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    /// Build the doubled alphabet from base names listed in descending order.
    pub fn double<I, S>(names: I) -> Result<Alphabet, SymbolError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(SymbolError::EmptyAlphabet);
        }
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(SymbolError::InvalidName(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(SymbolError::DuplicateName(n.clone()));
            }
        }
        Ok(Alphabet { names })
    }

    pub fn base_len(&self) -> usize {
        self.names.len()
    }

    pub fn base_names(&self) -> &[String] {
        &self.names
    }

    /// All letters of the doubled alphabet in descending order.
    pub fn gens_desc(&self) -> Vec<Gen> {
        let n = self.names.len();
        (0..n).map(Gen::dotted).chain((0..n).map(Gen::base)).collect()
    }

    /// Base letters in descending order.
    pub fn base_desc(&self) -> Vec<Gen> {
        (0..self.names.len()).map(Gen::base).collect()
    }

    /// Dotted letters in descending order.
    pub fn dotted_desc(&self) -> Vec<Gen> {
        (0..self.names.len()).map(Gen::dotted).collect()
    }

    pub fn name_of(&self, g: Gen) -> &str {
        &self.names[g.index()]
    }

    /// Canonical text of a letter: base `x`, dotted `x.`.
    pub fn display_gen(&self, g: Gen) -> String {
        if g.is_dotted() {
            format!("{}.", self.name_of(g))
        } else {
            self.name_of(g).to_string()
        }
    }

    /// Resolve a name; a trailing dot selects the dotted copy.
    pub fn lookup(&self, token: &str) -> Result<Gen, SymbolError> {
        let (name, dotted) = match token.strip_suffix('.') {
            Some(base) => (base, true),
            None => (token, false),
        };
        let idx = self
            .names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| SymbolError::UnknownGenerator(token.to_string()))?;
        Ok(if dotted { Gen::dotted(idx) } else { Gen::base(idx) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn doubled_order_two_letters() {
        let a = Alphabet::double(["x", "y"]).unwrap();
        let gens = a.gens_desc();
        // ẋ > ẏ > x > y
        assert_eq!(
            gens,
            vec![Gen::dotted(0), Gen::dotted(1), Gen::base(0), Gen::base(1)]
        );
        for w in gens.windows(2) {
            assert!(w[0] > w[1]);
        }
    }

    #[test]
    fn doubled_order_singleton() {
        let a = Alphabet::double(["x"]).unwrap();
        assert!(Gen::dotted(0) > Gen::base(0));
        assert_eq!(a.gens_desc().len(), 2);
    }

    #[test]
    fn doubled_order_three_letters() {
        let a = Alphabet::double(["a", "b", "c"]).unwrap();
        let gens = a.gens_desc();
        assert_eq!(gens.len(), 6);
        // ȧ > ḃ > ċ > a > b > c
        for w in gens.windows(2) {
            assert!(w[0] > w[1]);
        }
        assert_eq!(a.display_gen(gens[0]), "a.");
        assert_eq!(a.display_gen(gens[5]), "c");
    }

    #[test]
    fn dotting_preserves_base_order() {
        // x > y implies ẋ > ẏ, and ẏ > x.
        assert!(Gen::base(0) > Gen::base(1));
        assert!(Gen::dotted(0) > Gen::dotted(1));
        assert!(Gen::dotted(1) > Gen::base(0));
    }

    #[test]
    fn duplicate_name_rejected() {
        assert_eq!(
            Alphabet::double(["x", "x"]),
            Err(SymbolError::DuplicateName("x".into()))
        );
        assert_eq!(Alphabet::double(Vec::<String>::new()), Err(SymbolError::EmptyAlphabet));
        assert!(Alphabet::double(["x.y"]).is_err());
    }

    #[test]
    fn erase_dot_idempotent_and_order_preserving() {
        let g = Gen::dotted(1);
        assert_eq!(g.erase_dot(), Gen::base(1));
        assert_eq!(g.erase_dot().erase_dot(), Gen::base(1));
        assert!(Gen::dotted(0).erase_dot() > Gen::dotted(1).erase_dot());
    }

    #[test]
    fn lookup_roundtrip() {
        let a = Alphabet::double(["x", "y"]).unwrap();
        assert_eq!(a.lookup("y").unwrap(), Gen::base(1));
        assert_eq!(a.lookup("x.").unwrap(), Gen::dotted(0));
        assert!(a.lookup("z").is_err());
    }
}
