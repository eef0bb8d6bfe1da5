use std::fmt;

use super::{and_parity, or_shifted, words_for, WORD_BITS};
use crate::error::{Error, Result};

/// A vector over GF(2), packed 64 bits per word.
///
/// Padding bits past `len` are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Vector {
    len: usize,
    words: Vec<u64>,
}

impl Gf2Vector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Parse a string of '0'/'1' characters.
    pub fn from_bitstring(s: &str) -> Result<Self> {
        let mut v = Self::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                other => {
                    return Err(Error::Parse(format!(
                        "invalid bit character {other:?} at position {i}"
                    )))
                }
            }
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "bit index {i} out of range (len={})",
            self.len
        );
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "bit index {i} out of range (len={})",
            self.len
        );
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// In-place XOR with another vector of the same length.
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "xor_assign on different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Bitwise AND, as a new vector.
    pub fn and(&self, other: &Self) -> Result<Self> {
        if self.len != other.len {
            return Err(Error::VectorLength {
                expected: self.len,
                got: other.len,
            });
        }
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        Ok(Self {
            len: self.len,
            words,
        })
    }

    /// Dot product over GF(2) (parity of the AND).
    pub fn dot(&self, other: &Self) -> Result<bool> {
        if self.len != other.len {
            return Err(Error::VectorLength {
                expected: self.len,
                got: other.len,
            });
        }
        Ok(and_parity(&self.words, &other.words))
    }

    /// Concatenation `self ++ other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.len + other.len);
        or_shifted(&mut out.words, &self.words, self.len, 0);
        or_shifted(&mut out.words, &other.words, other.len, self.len);
        out
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn from_words(len: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(len));
        Self { len, words }
    }

    pub fn to_bitstring(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Display for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bitstring())
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Vector({})", self.to_bitstring())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_weight() {
        let v = Gf2Vector::from_bitstring("0110100101").unwrap();
        assert_eq!(v.len(), 10);
        assert_eq!(v.weight(), 5);
        assert_eq!(v.to_bitstring(), "0110100101");
    }

    #[test]
    fn dot_is_parity_of_and() {
        let a = Gf2Vector::from_bitstring("1101").unwrap();
        let b = Gf2Vector::from_bitstring("1011").unwrap();
        // AND = 1001, weight 2 -> parity 0
        assert!(!a.dot(&b).unwrap());
        let c = Gf2Vector::from_bitstring("0111").unwrap();
        // AND(a, c) = 0101, weight 2 -> parity 0; AND(b, c) = 0011 -> parity 0
        assert!(!a.dot(&c).unwrap());
        assert!(a.dot(&Gf2Vector::from_bitstring("1000").unwrap()).unwrap());
    }

    #[test]
    fn concat_crosses_word_boundaries() {
        let a = Gf2Vector::from_bitstring(&"10".repeat(40)).unwrap(); // 80 bits
        let b = Gf2Vector::from_bitstring("111").unwrap();
        let c = a.concat(&b);
        assert_eq!(c.len(), 83);
        assert_eq!(c.to_bitstring(), format!("{}111", "10".repeat(40)));
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let a = Gf2Vector::zeros(3);
        let b = Gf2Vector::zeros(4);
        assert!(matches!(a.dot(&b), Err(Error::VectorLength { .. })));
    }
}
