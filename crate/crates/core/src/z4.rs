//! Words over Z4 and Z2, the Lee and Hamming metrics, and the Gray map.
//!
//! A [`Z4Word`] keeps its coordinates as two bit planes: bit `i` of `lo` is
//! `c_i mod 2` and bit `i` of `hi` is `c_i div 2`. Every ring operation then
//! reduces to a handful of machine-word bit operations:
//!
//! * `a + b`: `lo = a.lo ^ b.lo`, `hi = a.hi ^ b.hi ^ (a.lo & b.lo)`
//! * `-a`: `lo` unchanged, `hi ^= lo`
//! * Gray map: `beta = hi`, `gamma = lo ^ hi`
//!
//! The Gray image of a word of length `n` has length `2n` and is laid out as
//! the beta half followed by the gamma half, so quaternary coordinate `i`
//! lands on binary coordinates `i` and `i + n`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

/// Longest supported quaternary word.
pub const MAX_QUATERNARY_LEN: usize = 64;
/// Longest supported binary word (the Gray image of the longest quaternary word).
pub const MAX_BINARY_LEN: usize = 2 * MAX_QUATERNARY_LEN;

/// Lee weights of the scalars 0, 1, 2, 3.
pub const LEE_WEIGHT: [u32; 4] = [0, 1, 2, 1];

#[inline]
pub(crate) fn mask64(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

#[inline]
pub(crate) fn mask128(len: usize) -> u128 {
    if len >= 128 {
        u128::MAX
    } else {
        (1u128 << len) - 1
    }
}

fn check_len(len: usize, max: usize) -> Result<()> {
    if len == 0 || len > max {
        return Err(Error::LengthOutOfRange { len, max });
    }
    Ok(())
}

/// A word of length `1..=64` over Z4.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Z4Word {
    len: u8,
    lo: u64,
    hi: u64,
}

impl Z4Word {
    pub fn zero(len: usize) -> Result<Self> {
        check_len(len, MAX_QUATERNARY_LEN)?;
        Ok(Self {
            len: len as u8,
            lo: 0,
            hi: 0,
        })
    }

    /// The word `(c, c, ..., c)`.
    pub fn constant(len: usize, c: u8) -> Result<Self> {
        let mut w = Self::zero(len)?;
        let m = mask64(len);
        if c & 1 == 1 {
            w.lo = m;
        }
        if c & 2 == 2 {
            w.hi = m;
        }
        Ok(w)
    }

    /// Builds a word from digit values; every digit is reduced modulo 4.
    pub fn from_digits(digits: &[u8]) -> Result<Self> {
        let mut w = Self::zero(digits.len())?;
        for (i, &d) in digits.iter().enumerate() {
            w.set(i, d);
        }
        Ok(w)
    }

    /// Builds a word from its bit planes. Bits at or above `len` are cleared.
    pub fn from_planes(len: usize, lo: u64, hi: u64) -> Result<Self> {
        check_len(len, MAX_QUATERNARY_LEN)?;
        let m = mask64(len);
        Ok(Self {
            len: len as u8,
            lo: lo & m,
            hi: hi & m,
        })
    }

    /// The word `2z` for a binary vector `z` given as a bitmask.
    pub fn doubled_from_mask(len: usize, z: u64) -> Result<Self> {
        Self::from_planes(len, 0, z)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Parity plane: bit `i` is `c_i mod 2`.
    #[inline]
    pub fn lo(&self) -> u64 {
        self.lo
    }

    /// High plane: bit `i` is `c_i div 2`.
    #[inline]
    pub fn hi(&self) -> u64 {
        self.hi
    }

    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        assert!(i < self.len(), "coordinate {i} out of range");
        (((self.lo >> i) & 1) | (((self.hi >> i) & 1) << 1)) as u8
    }

    #[inline]
    pub fn set(&mut self, i: usize, c: u8) {
        assert!(i < self.len(), "coordinate {i} out of range");
        let bit = 1u64 << i;
        self.lo = (self.lo & !bit) | (u64::from(c & 1) << i);
        self.hi = (self.hi & !bit) | (u64::from((c >> 1) & 1) << i);
    }

    pub fn digits(&self) -> Vec<u8> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.lo == 0 && self.hi == 0
    }

    /// Coordinatewise parity `c mod 2` as a bitmask.
    #[inline]
    pub fn odd_mask(&self) -> u64 {
        self.lo
    }

    /// True when every coordinate lies in `{0, 2}`.
    #[inline]
    pub fn is_order_two(&self) -> bool {
        self.lo == 0
    }

    #[inline]
    fn assert_same_len(&self, other: &Self) {
        assert_eq!(self.len, other.len, "Z4 word length mismatch");
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        same_len(self.len(), other.len())?;
        Ok(*self + *other)
    }

    /// `c * self` for a scalar `c` (taken modulo 4).
    #[inline]
    pub fn scale(&self, c: u8) -> Self {
        match c & 3 {
            0 => Self {
                len: self.len,
                lo: 0,
                hi: 0,
            },
            1 => *self,
            2 => self.double(),
            _ => -*self,
        }
    }

    /// `2 * self`: the parity plane moves into the high plane.
    #[inline]
    pub fn double(&self) -> Self {
        Self {
            len: self.len,
            lo: 0,
            hi: self.lo,
        }
    }

    /// Z4 inner product `sum a_i b_i mod 4`.
    pub fn dot(&self, other: &Self) -> u8 {
        self.assert_same_len(other);
        // a_i b_i mod 4 = lo_a lo_b + 2 (lo_a hi_b + hi_a lo_b) mod 4
        let odd = (self.lo & other.lo).count_ones();
        let cross = ((self.lo & other.hi) ^ (self.hi & other.lo)).count_ones();
        ((odd + 2 * cross) % 4) as u8
    }

    /// Coordinatewise product `(a_i b_i mod 4)_i`.
    pub fn hadamard_product(&self, other: &Self) -> Self {
        self.assert_same_len(other);
        Self {
            len: self.len,
            lo: self.lo & other.lo,
            hi: (self.lo & other.hi) ^ (self.hi & other.lo),
        }
    }

    pub fn lee_weight(&self) -> u32 {
        self.lo.count_ones() + 2 * (self.hi & !self.lo).count_ones()
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        let len = self.len() + other.len();
        check_len(len, MAX_QUATERNARY_LEN)?;
        let s = self.len();
        Ok(Self {
            len: len as u8,
            lo: self.lo | (other.lo << s),
            hi: self.hi | (other.hi << s),
        })
    }

    /// Coordinates `start..start + len`.
    pub fn slice(&self, start: usize, len: usize) -> Result<Self> {
        if start + len > self.len() {
            return Err(Error::LengthMismatch {
                left: start + len,
                right: self.len(),
            });
        }
        Self::from_planes(len, self.lo >> start, self.hi >> start)
    }
}

impl Add for Z4Word {
    type Output = Self;

    #[inline]
    fn add(self, other: Self) -> Self {
        self.assert_same_len(&other);
        Self {
            len: self.len,
            lo: self.lo ^ other.lo,
            hi: self.hi ^ other.hi ^ (self.lo & other.lo),
        }
    }
}

impl Neg for Z4Word {
    type Output = Self;

    #[inline]
    fn neg(self) -> Self {
        Self {
            len: self.len,
            lo: self.lo,
            hi: self.hi ^ self.lo,
        }
    }
}

impl Sub for Z4Word {
    type Output = Self;

    #[inline]
    fn sub(self, other: Self) -> Self {
        self + (-other)
    }
}

impl fmt::Display for Z4Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            write!(f, "{}", self.get(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Z4Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4Word({self})")
    }
}

impl std::str::FromStr for Z4Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .chars()
            .map(|ch| match ch {
                '0'..='3' => Ok(ch as u8 - b'0'),
                _ => Err(Error::InvalidDigit {
                    alphabet: "Z4",
                    digit: ch,
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::from_digits(&digits)
    }
}

/// A word of length `1..=128` over Z2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    len: u8,
    bits: u128,
}

impl BinaryWord {
    pub fn zero(len: usize) -> Result<Self> {
        check_len(len, MAX_BINARY_LEN)?;
        Ok(Self {
            len: len as u8,
            bits: 0,
        })
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        let mut w = Self::zero(bits.len())?;
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                w.bits |= 1u128 << i;
            }
        }
        Ok(w)
    }

    /// Bit `i` of `mask` is coordinate `i`; bits at or above `len` are cleared.
    pub fn from_mask(len: usize, mask: u128) -> Result<Self> {
        check_len(len, MAX_BINARY_LEN)?;
        Ok(Self {
            len: len as u8,
            bits: mask & mask128(len),
        })
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
    pub fn mask(&self) -> u128 {
        self.bits
    }

    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        assert!(i < self.len(), "coordinate {i} out of range");
        ((self.bits >> i) & 1) as u8
    }

    pub fn bits(&self) -> Vec<u8> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }

    #[inline]
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn complement(&self) -> Self {
        Self {
            len: self.len,
            bits: !self.bits & mask128(self.len()),
        }
    }

    pub fn checked_xor(&self, other: &Self) -> Result<Self> {
        same_len(self.len(), other.len())?;
        Ok(*self ^ *other)
    }
}

impl std::ops::BitXor for BinaryWord {
    type Output = Self;

    #[inline]
    fn bitxor(self, other: Self) -> Self {
        assert_eq!(self.len, other.len, "binary word length mismatch");
        Self {
            len: self.len,
            bits: self.bits ^ other.bits,
        }
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            write!(f, "{}", self.get(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

impl std::str::FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|ch| match ch {
                '0' | '1' => Ok(ch as u8 - b'0'),
                _ => Err(Error::InvalidDigit {
                    alphabet: "binary",
                    digit: ch,
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::from_bits(&bits)
    }
}

fn same_len(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::LengthMismatch { left, right });
    }
    Ok(())
}

pub fn lee_weight(w: &Z4Word) -> u32 {
    w.lee_weight()
}

pub fn lee_distance(a: &Z4Word, b: &Z4Word) -> Result<u32> {
    same_len(a.len(), b.len())?;
    Ok((*b - *a).lee_weight())
}

pub fn hamming_weight(x: &BinaryWord) -> u32 {
    x.weight()
}

pub fn hamming_distance(x: &BinaryWord, y: &BinaryWord) -> Result<u32> {
    same_len(x.len(), y.len())?;
    Ok((*x ^ *y).weight())
}

pub fn negate(w: &Z4Word) -> Z4Word {
    -*w
}

/// The Gray map `0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10`, beta half first.
#[inline]
pub fn gray_map(w: &Z4Word) -> BinaryWord {
    let n = w.len();
    let beta = w.hi as u128;
    let gamma = (w.lo ^ w.hi) as u128;
    BinaryWord {
        len: (2 * n) as u8,
        bits: beta | (gamma << n),
    }
}

/// Gray image of a word given by its planes, without constructing a [`Z4Word`].
#[inline]
pub(crate) fn gray_bits(n: usize, lo: u64, hi: u64) -> u128 {
    (hi as u128) | (((lo ^ hi) as u128) << n)
}

pub fn gray_inverse(x: &BinaryWord) -> Result<Z4Word> {
    let len = x.len();
    if !len.is_multiple_of(2) {
        return Err(Error::OddLength(len));
    }
    let n = len / 2;
    let m = mask64(n);
    let beta = (x.bits as u64) & m;
    let gamma = ((x.bits >> n) as u64) & m;
    Z4Word::from_planes(n, beta ^ gamma, beta)
}
