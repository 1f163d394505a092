//! The Hadamard family `H^{r1,r2}` and the extended perfect family
//! `C^{r1,r2}`, in quaternary form and as Gray images.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::matrix::{
    build_a, null_space, orthogonal_complement, standard_form, CodeType, QuaternaryMatrix, Span,
    SpanIter, MAX_K,
};
use crate::z4::{gray_inverse, gray_map, BinaryWord, Z4Word};

/// Most codewords any enumeration will walk (`2^26`, enough for `k = 5`).
pub const ENUMERATION_CAP: u128 = 1 << 26;
/// Most codewords held in memory as an explicit set.
pub const EXPLICIT_CAP: u128 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Hadamard,
    Perfect,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Hadamard => "H",
            Family::Perfect => "C",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" | "h" => Ok(Family::Hadamard),
            "C" | "c" => Ok(Family::Perfect),
            _ => Err(Error::Unsupported(format!("unknown family {s:?}, expected H or C"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alphabet {
    Quaternary,
    Binary,
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Alphabet::Quaternary => "quaternary",
            Alphabet::Binary => "binary",
        })
    }
}

impl FromStr for Alphabet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quaternary" => Ok(Alphabet::Quaternary),
            "binary" => Ok(Alphabet::Binary),
            _ => Err(Error::Unsupported(format!(
                "unknown alphabet {s:?}, expected quaternary or binary"
            ))),
        }
    }
}

/// The pair `(r1, r2)`; quaternary length `n = 2^{2 r1 + r2}`, binary length
/// `N = 2^k` with `k = 2 r1 + r2 + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyParams {
    pub r1: u32,
    pub r2: u32,
}

impl FamilyParams {
    pub fn new(r1: u32, r2: u32) -> Result<Self> {
        let k = 2 * r1 + r2 + 1;
        if k > MAX_K {
            return Err(Error::ParamsOutOfRange {
                r1,
                r2,
                k,
                max_k: MAX_K,
            });
        }
        Ok(Self { r1, r2 })
    }

    pub fn k(&self) -> u32 {
        2 * self.r1 + self.r2 + 1
    }

    /// Quaternary length.
    pub fn n(&self) -> usize {
        1 << (2 * self.r1 + self.r2)
    }

    /// Binary length.
    pub fn big_n(&self) -> usize {
        2 * self.n()
    }

    /// Number of order-4 generators of the Hadamard code, `r1 + 1`.
    pub fn r0(&self) -> u32 {
        self.r1 + 1
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r1, self.r2)
    }
}

/// All `(r1, r2)` with `2 r1 + r2 + 1 = k`, by ascending `r1`.
pub fn family_params_table(k: u32) -> Vec<FamilyParams> {
    if k == 0 {
        return Vec::new();
    }
    (0..=(k - 1) / 2)
        .map(|r1| FamilyParams {
            r1,
            r2: k - 1 - 2 * r1,
        })
        .collect()
}

/// An additive subgroup of `Z4^n`.
///
/// The generator matrix always has independent rows, so enumerating its span
/// visits every codeword exactly once. The check matrix is derived on first
/// use when the code was built from generators.
#[derive(Clone, Debug)]
pub struct QuaternaryCode {
    generator: QuaternaryMatrix,
    check: OnceLock<QuaternaryMatrix>,
    code_type: CodeType,
    label: Option<(Family, FamilyParams)>,
}

impl QuaternaryCode {
    /// The code spanned by the rows of `g` (dependent rows are reduced away).
    pub fn from_generator(g: QuaternaryMatrix) -> Self {
        let sf = standard_form(g.n(), g.rows());
        let code_type = sf.code_type();
        let generator = if code_type == g.declared_type() {
            g
        } else {
            sf.generators()
        };
        Self {
            generator,
            check: OnceLock::new(),
            code_type,
            label: None,
        }
    }

    /// The code `{c : A c^T = 0}`.
    pub fn from_check(a: QuaternaryMatrix) -> Result<Self> {
        let generator = match null_space(&a) {
            Ok(g) => g,
            Err(Error::DependentRows { .. }) => orthogonal_complement(&a),
            Err(e) => return Err(e),
        };
        let code_type = generator.declared_type();
        let check = OnceLock::new();
        let _ = check.set(a);
        Ok(Self {
            generator,
            check,
            code_type,
            label: None,
        })
    }

    /// The zero code `{0}` of length `n`.
    pub fn zero(n: usize) -> Result<Self> {
        Ok(Self::from_generator(QuaternaryMatrix::empty(n)?))
    }

    pub fn with_label(mut self, family: Family, params: FamilyParams) -> Self {
        self.label = Some((family, params));
        self
    }

    pub fn label(&self) -> Option<(Family, FamilyParams)> {
        self.label
    }

    pub fn n(&self) -> usize {
        self.generator.n()
    }

    pub fn generator(&self) -> &QuaternaryMatrix {
        &self.generator
    }

    pub fn check(&self) -> &QuaternaryMatrix {
        self.check
            .get_or_init(|| orthogonal_complement(&self.generator))
    }

    pub fn has_explicit_check(&self) -> bool {
        self.check.get().is_some()
    }

    pub fn code_type(&self) -> CodeType {
        self.code_type
    }

    pub fn cardinality(&self) -> u128 {
        self.code_type.cardinality()
    }

    pub fn log2_cardinality(&self) -> u32 {
        self.code_type.log2_cardinality()
    }

    pub fn span(&self) -> Span {
        self.generator.span()
    }

    /// Every codeword once, in lexicographic order of the coefficients.
    pub fn codewords(&self) -> SpanIter {
        self.span().iter()
    }

    /// Membership through the syndrome `A w^T`.
    pub fn contains(&self, w: &Z4Word) -> Result<bool> {
        Ok(self.check().syndrome(w)?.iter().all(|&s| s == 0))
    }

    /// Fails with [`Error::TooLarge`] above `cap` codewords.
    pub fn ensure_enumerable(&self, cap: u128) -> Result<()> {
        let size = self.cardinality();
        if self.log2_cardinality() >= 127 || size > cap {
            return Err(Error::TooLarge {
                what: "codeword enumeration",
                size: if self.log2_cardinality() >= 127 {
                    u128::MAX
                } else {
                    size
                },
                cap,
            });
        }
        Ok(())
    }

    /// All codewords as a set; refuses codes above [`EXPLICIT_CAP`].
    pub fn to_set(&self) -> Result<HashSet<Z4Word>> {
        self.ensure_enumerable(EXPLICIT_CAP)?;
        Ok(self.codewords().collect())
    }

    /// Same codewords (compared through spans, not generators).
    pub fn same_set(&self, other: &QuaternaryCode) -> Result<bool> {
        if self.n() != other.n() || self.code_type != other.code_type {
            return Ok(false);
        }
        for g in other.generator.rows() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for QuaternaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.label {
            Some((fam, p)) => write!(f, "{fam}^{{{},{}}}", p.r1, p.r2),
            None => write!(f, "code(n={}, type {})", self.n(), self.code_type),
        }
    }
}

/// `H^{r1,r2}`: the span of `A^{r1,r2}`.
pub fn hadamard_code(p: FamilyParams) -> Result<QuaternaryCode> {
    let p = FamilyParams::new(p.r1, p.r2)?;
    let a = build_a(p.r1, p.r2)?;
    Ok(QuaternaryCode::from_generator(a).with_label(Family::Hadamard, p))
}

/// `C^{r1,r2}`: the words with zero syndrome under `A^{r1,r2}`.
pub fn perfect_code(p: FamilyParams) -> Result<QuaternaryCode> {
    let p = FamilyParams::new(p.r1, p.r2)?;
    let a = build_a(p.r1, p.r2)?;
    Ok(QuaternaryCode::from_check(a)?.with_label(Family::Perfect, p))
}

pub fn family_code(family: Family, p: FamilyParams) -> Result<QuaternaryCode> {
    match family {
        Family::Hadamard => hadamard_code(p),
        Family::Perfect => perfect_code(p),
    }
}

/// Hash set keyed directly by the packed bits.
#[derive(Clone, Debug)]
pub struct WordSet {
    words: Vec<BinaryWord>,
    keys: HashSet<u128>,
}

impl WordSet {
    fn new(len: usize, mut words: Vec<BinaryWord>) -> Result<Self> {
        if let Some(w) = words.iter().find(|w| w.len() != len) {
            return Err(Error::LengthMismatch {
                left: w.len(),
                right: len,
            });
        }
        words.sort_unstable();
        words.dedup();
        let keys = words.iter().map(|w| w.mask()).collect();
        Ok(Self { words, keys })
    }
}

/// A binary code of length `N`: an explicit word set, the Gray image of a
/// quaternary code, or both.
#[derive(Clone, Debug)]
pub struct BinaryCode {
    len: usize,
    explicit: Option<WordSet>,
    source: Option<QuaternaryCode>,
}

impl BinaryCode {
    /// An explicit code; duplicates are dropped.
    pub fn from_words(len: usize, words: Vec<BinaryWord>) -> Result<Self> {
        BinaryWord::zero(len)?;
        Ok(Self {
            len,
            explicit: Some(WordSet::new(len, words)?),
            source: None,
        })
    }

    /// `phi(C)` without materializing any word.
    pub fn lazy_image(c: &QuaternaryCode) -> Self {
        Self {
            len: 2 * c.n(),
            explicit: None,
            source: Some(c.clone()),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.cardinality() == 0
    }

    pub fn cardinality(&self) -> u128 {
        match (&self.explicit, &self.source) {
            (Some(set), _) => set.words.len() as u128,
            (None, Some(src)) => src.cardinality(),
            (None, None) => 0,
        }
    }

    pub fn is_explicit(&self) -> bool {
        self.explicit.is_some()
    }

    /// Sorted words, when materialized.
    pub fn words(&self) -> Option<&[BinaryWord]> {
        self.explicit.as_ref().map(|s| s.words.as_slice())
    }

    /// The quaternary code this is the Gray image of, if known.
    pub fn source(&self) -> Option<&QuaternaryCode> {
        self.source.as_ref()
    }

    pub fn contains(&self, x: &BinaryWord) -> Result<bool> {
        if x.len() != self.len {
            return Err(Error::LengthMismatch {
                left: x.len(),
                right: self.len,
            });
        }
        match (&self.explicit, &self.source) {
            (Some(set), _) => Ok(set.keys.contains(&x.mask())),
            (None, Some(src)) => src.contains(&gray_inverse(x)?),
            (None, None) => Ok(false),
        }
    }

    /// Enumerates the words (explicit order, or Gray images in span order).
    pub fn iter(&self) -> Box<dyn Iterator<Item = BinaryWord> + '_> {
        match (&self.explicit, &self.source) {
            (Some(set), _) => Box::new(set.words.iter().copied()),
            (None, Some(src)) => Box::new(src.codewords().map(|c| gray_map(&c))),
            (None, None) => Box::new(std::iter::empty()),
        }
    }

    /// Fails with [`Error::TooLarge`] above `cap` words.
    pub fn ensure_enumerable(&self, cap: u128) -> Result<()> {
        match (&self.explicit, &self.source) {
            (None, Some(src)) => src.ensure_enumerable(cap),
            _ if self.cardinality() > cap => Err(Error::TooLarge {
                what: "binary code enumeration",
                size: self.cardinality(),
                cap,
            }),
            _ => Ok(()),
        }
    }

    /// A copy with an explicit word set, if at most `cap` words.
    pub fn materialize(&self, cap: u128) -> Result<Self> {
        if self.explicit.is_some() {
            return Ok(self.clone());
        }
        self.ensure_enumerable(cap.min(EXPLICIT_CAP))?;
        let words = self.iter().collect();
        Ok(Self {
            len: self.len,
            explicit: Some(WordSet::new(self.len, words)?),
            source: self.source.clone(),
        })
    }

    /// Set equality.
    pub fn same_set(&self, other: &BinaryCode) -> Result<bool> {
        if self.len != other.len || self.cardinality() != other.cardinality() {
            return Ok(false);
        }
        // with equal finite sizes, inclusion one way is enough
        let (small, big) = if self.is_explicit() {
            (self, other)
        } else {
            (other, self)
        };
        small.ensure_enumerable(ENUMERATION_CAP)?;
        for w in small.iter() {
            if !big.contains(&w)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `phi(C)`: explicit when `|C| <= 2^16`, otherwise a lazy descriptor.
pub fn binary_image(c: &QuaternaryCode) -> Result<BinaryCode> {
    let lazy = BinaryCode::lazy_image(c);
    if c.log2_cardinality() <= 16 {
        lazy.materialize(1 << 16)
    } else {
        Ok(lazy)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::is_orthogonal;

    fn p(r1: u32, r2: u32) -> FamilyParams {
        FamilyParams::new(r1, r2).unwrap()
    }

    #[test]
    fn params_derived_quantities() {
        let q = p(1, 2);
        assert_eq!((q.k(), q.n(), q.big_n(), q.r0()), (5, 16, 32, 2));
        assert!(FamilyParams::new(3, 1).is_err());
        assert!(FamilyParams::new(0, 7).is_err());
    }

    #[test]
    fn params_table() {
        assert_eq!(family_params_table(4), vec![p(0, 3), p(1, 1)]);
        assert_eq!(family_params_table(5), vec![p(0, 4), p(1, 2), p(2, 0)]);
        assert_eq!(family_params_table(1), vec![p(0, 0)]);
    }

    #[test]
    fn hadamard_examples() {
        let h00 = hadamard_code(p(0, 0)).unwrap();
        let words: Vec<String> = h00.codewords().map(|w| w.to_string()).collect();
        assert_eq!(words, ["0", "1", "2", "3"]);

        let h10 = hadamard_code(p(1, 0)).unwrap();
        assert_eq!((h10.n(), h10.cardinality()), (4, 16));
        let min = h10.codewords().filter(|w| !w.is_zero()).map(|w| w.lee_weight()).min();
        assert_eq!(min, Some(4));

        let h02 = hadamard_code(p(0, 2)).unwrap();
        assert_eq!(h02.to_set().unwrap().len(), 16);
        assert_eq!(h02.n(), 4);
        assert_eq!(h02.code_type(), CodeType { k1: 1, k2: 2 });
    }

    #[test]
    fn perfect_examples() {
        let c02 = perfect_code(p(0, 2)).unwrap();
        assert_eq!((c02.n(), c02.cardinality()), (4, 16));
        let img = binary_image(&c02).unwrap();
        assert_eq!((img.len(), img.cardinality()), (8, 16));

        let c11 = perfect_code(p(1, 1)).unwrap();
        assert_eq!(c11.to_set().unwrap().len(), 2048);

        let c00 = perfect_code(p(0, 0)).unwrap();
        assert_eq!(c00.cardinality(), 1);
        assert_eq!(c00.codewords().collect::<Vec<_>>(), vec![Z4Word::zero(1).unwrap()]);
    }

    #[test]
    fn binary_image_examples() {
        let h11 = binary_image(&hadamard_code(p(1, 1)).unwrap()).unwrap();
        assert_eq!((h11.cardinality(), h11.len()), (32, 16));
        assert!(h11.is_explicit());

        let zero = binary_image(&QuaternaryCode::zero(3).unwrap()).unwrap();
        assert_eq!(zero.words().unwrap(), &[BinaryWord::zero(6).unwrap()]);

        let c03 = binary_image(&perfect_code(p(0, 3)).unwrap()).unwrap();
        assert_eq!((c03.cardinality(), c03.len()), (1 << 11, 16));

        let big = binary_image(&perfect_code(p(1, 2)).unwrap()).unwrap();
        assert!(!big.is_explicit());
        assert_eq!(big.cardinality(), 1 << 26);
    }

    #[test]
    fn contains_examples() {
        let c10 = perfect_code(p(1, 0)).unwrap();
        assert!(c10.contains(&Z4Word::zero(4).unwrap()).unwrap());
        let h00 = hadamard_code(p(0, 0)).unwrap();
        assert!(h00.contains(&Z4Word::from_digits(&[2]).unwrap()).unwrap());
        let c02 = perfect_code(p(0, 2)).unwrap();
        let x = Z4Word::from_digits(&[1, 0, 0, 0]).unwrap();
        assert_eq!(c02.check().syndrome(&x).unwrap(), vec![1, 0, 0]);
        assert!(!c02.contains(&x).unwrap());
        assert!(c02.contains(&Z4Word::zero(3).unwrap()).is_err());
    }

    #[test]
    fn contains_agrees_with_enumeration_for_generator_codes() {
        let h = hadamard_code(p(1, 0)).unwrap();
        let set = h.to_set().unwrap();
        for x in 0..256u32 {
            let d: Vec<u8> = (0..4).map(|i| ((x >> (2 * i)) & 3) as u8).collect();
            let w = Z4Word::from_digits(&d).unwrap();
            assert_eq!(h.contains(&w).unwrap(), set.contains(&w));
        }
    }

    #[test]
    fn families_are_mutually_dual() {
        for k in 1..=MAX_K {
            for q in family_params_table(k) {
                let h = hadamard_code(q).unwrap();
                let c = perfect_code(q).unwrap();
                assert!(is_orthogonal(h.generator(), c.generator()).unwrap());
                assert_eq!(
                    h.log2_cardinality() + c.log2_cardinality(),
                    2 * q.n() as u32
                );
            }
        }
    }

    #[test]
    fn additive_closure_small() {
        let c = perfect_code(p(0, 2)).unwrap();
        let words: Vec<Z4Word> = c.codewords().collect();
        for a in &words {
            for b in &words {
                assert!(c.contains(&(*a + *b)).unwrap());
            }
        }
    }

    #[test]
    fn binary_code_same_set() {
        let a = binary_image(&hadamard_code(p(0, 1)).unwrap()).unwrap();
        let words: Vec<BinaryWord> = a.iter().collect();
        let b = BinaryCode::from_words(4, words.iter().rev().copied().collect()).unwrap();
        assert!(a.same_set(&b).unwrap());
        let c = BinaryCode::from_words(4, words[..4].to_vec()).unwrap();
        assert!(!a.same_set(&c).unwrap());
    }
}
