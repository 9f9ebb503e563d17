//! Chains over the alphabet `[n] = {1, ..., n}`.
//!
//! A chain is a sequence of distinct world indices taken up to reordering,
//! so the canonical representative is the symbol set. Symbols are stored in
//! a `u16` bitmask (bit `i - 1` for symbol `i`), which bounds the alphabet at
//! [`MAX_WORLDS`].

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use thiserror::Error;

/// Largest supported alphabet size.
pub const MAX_WORLDS: u8 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("symbol {0} occurs more than once in the chain")]
    DuplicateSymbol(u32),
    #[error("symbol {symbol} is outside the alphabet [1, {n}]")]
    OutOfAlphabet { symbol: u32, n: u8 },
    #[error("chains over different alphabets ({left} and {right})")]
    AlphabetMismatch { left: u8, right: u8 },
    #[error("alphabet size {0} is outside the supported range 1..={MAX_WORLDS}")]
    BoundExceeded(u32),
}

/// A chain over `[n]`, i.e. a subset of `{1, ..., n}` together with `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    n: u8,
    bits: u16,
}

fn check_alphabet(n: u32) -> Result<u8, ChainError> {
    if n == 0 || n > MAX_WORLDS as u32 {
        Err(ChainError::BoundExceeded(n))
    } else {
        Ok(n as u8)
    }
}

fn full_mask(n: u8) -> u16 {
    if n >= 16 {
        u16::MAX
    } else {
        (1u16 << n) - 1
    }
}

impl Chain {
    /// Canonical class representative of a raw symbol sequence.
    pub fn canonical(raw: &[u32], n: u32) -> Result<Chain, ChainError> {
        let n = check_alphabet(n)?;
        let mut bits = 0u16;
        for &s in raw {
            if s == 0 || s > n as u32 {
                return Err(ChainError::OutOfAlphabet { symbol: s, n });
            }
            let bit = 1u16 << (s - 1);
            if bits & bit != 0 {
                return Err(ChainError::DuplicateSymbol(s));
            }
            bits |= bit;
        }
        Ok(Chain { n, bits })
    }

    /// The empty chain ε.
    pub fn empty(n: u8) -> Chain {
        debug_assert!((1..=MAX_WORLDS).contains(&n));
        Chain { n, bits: 0 }
    }

    /// The chain `(n)` holding every symbol of the alphabet.
    pub fn full(n: u8) -> Chain {
        debug_assert!((1..=MAX_WORLDS).contains(&n));
        Chain {
            n,
            bits: full_mask(n),
        }
    }

    /// The one-symbol chain `{i}`.
    pub fn singleton(i: u8, n: u8) -> Chain {
        debug_assert!(i >= 1 && i <= n);
        Chain {
            n,
            bits: 1 << (i - 1),
        }
    }

    /// Builds a chain from a raw mask; bits above `n` are dropped.
    pub fn from_mask(mask: u16, n: u8) -> Chain {
        Chain {
            n,
            bits: mask & full_mask(n),
        }
    }

    pub fn alphabet(&self) -> u8 {
        self.n
    }

    pub fn mask(&self) -> u16 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == full_mask(self.n)
    }

    pub fn contains(&self, symbol: u8) -> bool {
        symbol >= 1 && symbol <= self.n && self.bits & (1 << (symbol - 1)) != 0
    }

    /// Symbols in ascending order.
    pub fn symbols(&self) -> impl Iterator<Item = u8> + '_ {
        (1..=self.n).filter(move |&s| self.contains(s))
    }

    fn same_alphabet(&self, other: &Chain) -> Result<(), ChainError> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(ChainError::AlphabetMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    /// Concatenation `a · b`: symbols of either chain, each once.
    pub fn concat(&self, other: &Chain) -> Result<Chain, ChainError> {
        self.same_alphabet(other)?;
        Ok(Chain {
            n: self.n,
            bits: self.bits | other.bits,
        })
    }

    /// Coconcatenation `a ⊗ b`: symbols occurring in exactly one chain.
    pub fn coconcat(&self, other: &Chain) -> Result<Chain, ChainError> {
        self.same_alphabet(other)?;
        Ok(Chain {
            n: self.n,
            bits: self.bits ^ other.bits,
        })
    }

    /// The chain of symbols common to both.
    pub fn common(&self, other: &Chain) -> Result<Chain, ChainError> {
        self.same_alphabet(other)?;
        Ok(Chain {
            n: self.n,
            bits: self.bits & other.bits,
        })
    }

    /// The complementary chain `c'`.
    pub fn complement(&self) -> Chain {
        Chain {
            n: self.n,
            bits: !self.bits & full_mask(self.n),
        }
    }

    /// Whether `self` is a subchain of `other`.
    pub fn is_subchain(&self, other: &Chain) -> Result<bool, ChainError> {
        self.same_alphabet(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    /// The same symbols read over a different alphabet size.
    pub fn realphabet(&self, n: u8) -> Result<Chain, ChainError> {
        let n = check_alphabet(n as u32)?;
        if let Some(s) = self.symbols().find(|&s| s > n) {
            return Err(ChainError::OutOfAlphabet { symbol: s as u32, n });
        }
        Ok(Chain { n, bits: self.bits })
    }

    /// Order used for enumeration: by length, then lexicographic on the
    /// ascending symbol lists.
    pub fn enumeration_cmp(&self, other: &Chain) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.symbols().cmp(other.symbols()))
    }
}

/// All `2^n` chains over `[n]`, ordered by length then lexicographically.
pub fn enumerate_chains(n: u32) -> Result<Vec<Chain>, ChainError> {
    let n = check_alphabet(n)?;
    let mut out: Vec<Chain> = (0..=full_mask(n) as u32)
        .map(|bits| Chain {
            n,
            bits: bits as u16,
        })
        .collect();
    out.sort_by(Chain::enumeration_cmp);
    Ok(out)
}

/// Nonempty chains whose length is at most `max_len`, in enumeration order.
pub fn chains_with_len(n: u8, min_len: usize, max_len: usize) -> Vec<Chain> {
    enumerate_chains(n as u32)
        .map(|all| {
            all.into_iter()
                .filter(|c| c.len() >= min_len && c.len() <= max_len)
                .collect()
        })
        .unwrap_or_default()
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.symbols().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn ch(raw: &[u32], n: u32) -> Chain {
        Chain::canonical(raw, n).unwrap()
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(ch(&[2, 1], 3), ch(&[1, 2], 3));
        assert!(ch(&[], 3).is_empty());
        assert_eq!(
            Chain::canonical(&[1, 1], 3),
            Err(ChainError::DuplicateSymbol(1))
        );
        assert_eq!(
            Chain::canonical(&[4], 3),
            Err(ChainError::OutOfAlphabet { symbol: 4, n: 3 })
        );
        assert_eq!(Chain::canonical(&[0], 3).unwrap_err(), ChainError::OutOfAlphabet { symbol: 0, n: 3 });
        assert_eq!(Chain::canonical(&[], 0), Err(ChainError::BoundExceeded(0)));
        assert_eq!(Chain::canonical(&[], 17), Err(ChainError::BoundExceeded(17)));
    }

    #[test]
    fn concat_examples() {
        assert_eq!(ch(&[1, 2], 3).concat(&ch(&[2, 3], 3)), Ok(ch(&[1, 2, 3], 3)));
        assert_eq!(ch(&[1, 2], 3).concat(&Chain::empty(3)), Ok(ch(&[1, 2], 3)));
        assert_eq!(ch(&[1], 3).concat(&ch(&[2, 3], 3)), Ok(Chain::full(3)));
        assert_eq!(
            ch(&[1], 3).concat(&ch(&[1], 2)),
            Err(ChainError::AlphabetMismatch { left: 3, right: 2 })
        );
    }

    #[test]
    fn coconcat_examples() {
        assert_eq!(
            ch(&[1, 2, 3], 6).coconcat(&ch(&[1, 2, 4, 5, 6], 6)),
            Ok(ch(&[3, 4, 5, 6], 6))
        );
        let c = ch(&[1, 3], 3);
        assert_eq!(c.coconcat(&c), Ok(Chain::empty(3)));
        assert_eq!(Chain::full(3).coconcat(&ch(&[1], 3)), Ok(ch(&[2, 3], 3)));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(ch(&[1], 3).complement(), ch(&[2, 3], 3));
        assert_eq!(Chain::empty(4).complement(), Chain::full(4));
        assert_eq!(Chain::full(4).complement(), Chain::empty(4));
        assert_eq!(Chain::full(16).complement(), Chain::empty(16));
    }

    #[test]
    fn subchain_examples() {
        assert_eq!(ch(&[2], 3).is_subchain(&ch(&[1, 2, 3], 3)), Ok(true));
        assert_eq!(Chain::empty(3).is_subchain(&ch(&[2], 3)), Ok(true));
        assert_eq!(ch(&[1, 2], 3).is_subchain(&ch(&[1], 3)), Ok(false));
    }

    #[test]
    fn enumeration() {
        let three: Vec<_> = enumerate_chains(3)
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(
            three,
            vec!["{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"]
        );
        assert_eq!(enumerate_chains(1).unwrap(), vec![Chain::empty(1), Chain::full(1)]);
        assert_eq!(enumerate_chains(2).unwrap().len(), 4);
        assert_eq!(enumerate_chains(16).unwrap().len(), 1 << 16);
        assert_eq!(enumerate_chains(17), Err(ChainError::BoundExceeded(17)));
    }

    #[test]
    fn display() {
        assert_eq!(ch(&[3, 1], 3).to_string(), "{1,3}");
        assert_eq!(Chain::empty(2).to_string(), "{}");
    }

    #[test]
    fn realphabet() {
        assert_eq!(ch(&[1, 2], 2).realphabet(3), Ok(ch(&[1, 2], 3)));
        assert!(ch(&[3], 3).realphabet(2).is_err());
    }
}
