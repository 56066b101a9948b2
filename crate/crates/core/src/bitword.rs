//! Fixed-length binary words, the vertices of the hypercube `Q_n`.
//!
//! A word of length `n` stores coordinate `i` (1-based, leftmost in text
//! form) at bit position `n - i` of a `u64`. The numeric value of the bits
//! therefore equals the text read as a binary number, so ascending numeric
//! order and lexicographic text order coincide.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_LEN: usize = 64;

/// Mask with the low `len` bits set.
#[inline]
pub fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    // Field order makes the derived `Ord` compare length first, then value.
    len: u8,
    bits: u64,
}

impl Word {
    /// Builds a word from raw bits. Length 0 is permitted and denotes the
    /// single vertex of `K_1 = Q_0`.
    pub fn from_bits(bits: u64, len: usize) -> Result<Self> {
        if len > MAX_LEN {
            return Err(Error::WordTooLong(len));
        }
        if bits & !low_mask(len) != 0 {
            return Err(Error::BitsOutOfRange { bits, len });
        }
        Ok(Word { len: len as u8, bits })
    }

    pub(crate) fn from_bits_unchecked(bits: u64, len: usize) -> Self {
        debug_assert!(len <= MAX_LEN && bits & !low_mask(len) == 0);
        Word { len: len as u8, bits }
    }

    pub fn zeros(len: usize) -> Result<Self> {
        Self::from_bits(0, len)
    }

    pub fn ones(len: usize) -> Result<Self> {
        if len > MAX_LEN {
            return Err(Error::WordTooLong(len));
        }
        Ok(Word { len: len as u8, bits: low_mask(len) })
    }

    /// Word with a single 1 at coordinate `i` (1-based).
    pub fn unit(len: usize, i: usize) -> Result<Self> {
        if i == 0 || i > len {
            return Err(Error::InvalidParameter {
                family: "unit word".into(),
                reason: format!("coordinate {i} outside 1..={len}"),
            });
        }
        Self::from_bits(1u64 << (len - i), len)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Value of coordinate `i` (1-based).
    pub fn coord(&self, i: usize) -> bool {
        assert!(i >= 1 && i <= self.len(), "coordinate {i} out of range");
        (self.bits >> (self.len() - i)) & 1 == 1
    }

    /// Number of 1s.
    #[inline]
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    fn same_len(&self, other: &Word) -> Result<()> {
        if self.len != other.len {
            Err(Error::LengthMismatch { left: self.len(), right: other.len() })
        } else {
            Ok(())
        }
    }

    /// Coordinatewise order: `u_i <= v_i` for every `i`.
    pub fn leq(&self, other: &Word) -> Result<bool> {
        self.same_len(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    /// Coordinatewise AND, the greatest lower bound.
    pub fn meet(&self, other: &Word) -> Result<Word> {
        self.same_len(other)?;
        Ok(Word { len: self.len, bits: self.bits & other.bits })
    }

    /// Coordinatewise OR, the least upper bound.
    pub fn join(&self, other: &Word) -> Result<Word> {
        self.same_len(other)?;
        Ok(Word { len: self.len, bits: self.bits | other.bits })
    }

    pub fn xor(&self, other: &Word) -> Result<Word> {
        self.same_len(other)?;
        Ok(Word { len: self.len, bits: self.bits ^ other.bits })
    }

    /// Hamming distance, the geodesic distance in `Q_n`.
    pub fn hamming(&self, other: &Word) -> Result<u32> {
        self.same_len(other)?;
        Ok((self.bits ^ other.bits).count_ones())
    }

    /// Concatenation `self · other`; `self` supplies the leading coordinates.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        let len = self.len() + other.len();
        if len > MAX_LEN {
            return Err(Error::WordTooLong(len));
        }
        let high = if other.len() == 64 { 0 } else { self.bits << other.len() };
        Ok(Word { len: len as u8, bits: high | other.bits })
    }

    /// All words `s` with `s <= self`, in no particular order.
    pub fn subwords(&self) -> Subsets {
        Subsets::new(self.bits)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (1..=self.len())
            .map(|i| if self.coord(i) { '1' } else { '0' })
            .collect();
        f.pad(&s)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::EmptyWord);
        }
        let len = text.chars().count();
        if len > MAX_LEN {
            return Err(Error::WordTooLong(len));
        }
        let mut bits = 0u64;
        for (pos, ch) in text.chars().enumerate() {
            bits = match ch {
                '0' => bits << 1,
                '1' => (bits << 1) | 1,
                _ => return Err(Error::BadChar { ch, pos: pos + 1 }),
            };
        }
        Ok(Word { len: len as u8, bits })
    }
}

/// Iterates over every submask of a bit mask, including 0 and the mask itself.
#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Subsets {
    pub fn new(mask: u64) -> Self {
        Subsets { mask, next: Some(mask) }
    }
}

impl Iterator for Subsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        self.next = if cur == 0 { None } else { Some((cur - 1) & self.mask) };
        Some(cur)
    }
}
