//! Invariants that separate codes up to equivalence: kernel, rank, minimum
//! distance, linearity, weight distribution, and the even/odd projections.
//!
//! All family codes are additive, so `d(a, b) = wt(b - a)` and the minimum
//! distance equals the minimum nonzero weight. The Gray map carries this over
//! to the binary images since it is an isometry.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::family::{binary_image, BinaryCode, QuaternaryCode, ENUMERATION_CAP};
use crate::matrix::Span;
use crate::z4::{gray_bits, gray_map, mask128, BinaryWord, Z4Word, MAX_BINARY_LEN};

/// Largest code whose kernel is computed (quadratic in the code size).
pub const KERNEL_CAP: u128 = 1 << 16;
/// Largest code for the pairwise minimum distance scan.
pub const PAIRWISE_CAP: usize = 1 << 12;
/// Largest half-length scanned when projecting a code that is not materialized.
pub const PROJECTION_SCAN_CAP: usize = 26;

/// Splits the coefficient range of a span for parallel walks.
fn chunks(span: &Span) -> Vec<(u128, u128)> {
    let total = span.len().unwrap_or(u128::MAX);
    let parts: u128 = if total < 1 << 14 { 1 } else { 256 };
    let step = total.div_ceil(parts);
    (0..parts)
        .map(|i| (i * step, ((i + 1) * step).min(total)))
        .filter(|(s, e)| s < e)
        .collect()
}

/// Incremental Gaussian elimination over GF(2) on words of up to 128 bits,
/// one slot per leading bit.
#[derive(Clone)]
pub struct Gf2Basis {
    slots: [u128; MAX_BINARY_LEN],
    rank: u32,
}

impl Default for Gf2Basis {
    fn default() -> Self {
        Self::new()
    }
}

impl Gf2Basis {
    pub fn new() -> Self {
        Self {
            slots: [0; MAX_BINARY_LEN],
            rank: 0,
        }
    }

    /// Adds `v`; returns whether the span grew.
    #[inline]
    pub fn insert(&mut self, mut v: u128) -> bool {
        while v != 0 {
            let top = 127 - v.leading_zeros() as usize;
            let b = self.slots[top];
            if b == 0 {
                self.slots[top] = v;
                self.rank += 1;
                return true;
            }
            v ^= b;
        }
        false
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn vectors(&self) -> impl Iterator<Item = u128> + '_ {
        self.slots.iter().rev().copied().filter(|&v| v != 0)
    }

    /// Merges in descending pivot order.
    pub fn merge(&mut self, other: &Gf2Basis) {
        for v in other.vectors() {
            self.insert(v);
        }
    }
}

impl fmt::Debug for Gf2Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Basis(rank={})", self.rank)
    }
}

/// Checks, over all 16 pairs of scalars, that
/// `gray(a + b) = gray(a) ^ gray(b) ^ gray(2 (a mod 2)(b mod 2))`.
///
/// The sum is formed with integer arithmetic so the check does not lean on
/// the bit-plane adder.
pub fn verify_addition_identity() -> bool {
    (0..4u8).all(|a| {
        (0..4u8).all(|b| {
            let scalar = |c: u8| Z4Word::from_digits(&[c]).expect("length 1");
            let lhs = gray_map(&scalar((a + b) % 4));
            let carry = scalar(2 * ((a & 1) & (b & 1)));
            let rhs = gray_map(&scalar(a)) ^ gray_map(&scalar(b)) ^ gray_map(&carry);
            lhs == rhs
        })
    })
}

/// [`verify_addition_identity`], evaluated once per process.
pub fn addition_identity_gate() -> bool {
    static GATE: OnceLock<bool> = OnceLock::new();
    *GATE.get_or_init(verify_addition_identity)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RankStrategy {
    /// Reduce every codeword into a basis.
    Enumeration,
    /// Span of the Gray images of the generators together with the
    /// correction words from the addition identity.
    GeneratorSpan,
}

impl fmt::Display for RankStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RankStrategy::Enumeration => "enumeration",
            RankStrategy::GeneratorSpan => "generator_span",
        })
    }
}

impl FromStr for RankStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "enumeration" => Ok(RankStrategy::Enumeration),
            "generator_span" | "generator-span" => Ok(RankStrategy::GeneratorSpan),
            _ => Err(Error::Unsupported(format!("unknown rank strategy {s:?}"))),
        }
    }
}

/// Dimension of the GF(2) span of a binary code.
pub fn rank(code: &BinaryCode, strategy: RankStrategy) -> Result<u32> {
    match strategy {
        RankStrategy::Enumeration => rank_by_enumeration(code),
        RankStrategy::GeneratorSpan => {
            let src = code.source().ok_or(Error::StrategyInapplicable(
                "generator_span needs the quaternary preimage",
            ))?;
            rank_by_generator_span(src)
        }
    }
}

fn rank_by_enumeration(code: &BinaryCode) -> Result<u32> {
    code.ensure_enumerable(ENUMERATION_CAP)?;
    if let Some(words) = code.words() {
        let mut basis = Gf2Basis::new();
        for w in words {
            basis.insert(w.mask());
        }
        return Ok(basis.rank());
    }
    let src = code.source().expect("binary code without words has a source");
    let span = src.span();
    let n = span.n();
    let parts: Vec<Gf2Basis> = chunks(&span)
        .into_par_iter()
        .map(|(s, e)| {
            let mut basis = Gf2Basis::new();
            for c in span.iter_range(s, e) {
                basis.insert(gray_bits(n, c.lo(), c.hi()));
            }
            basis
        })
        .collect();
    let mut basis = Gf2Basis::new();
    for p in &parts {
        basis.merge(p);
    }
    Ok(basis.rank())
}

/// Basis vectors spanning `<phi(C)>`: `phi(g)` and `phi(2g)` for every
/// order-4 generator, `phi(2g)` for every order-2 generator, and
/// `phi(2 (g_i mod 2)(g_j mod 2))` for every pair of order-4 generators.
///
/// Writing a codeword as a sum of generator multiples and expanding with the
/// addition identity only ever produces these terms, and each of them is a
/// sum of Gray images of codewords, so the span is exact.
pub fn generator_span_basis(code: &QuaternaryCode) -> Result<Gf2Basis> {
    if !addition_identity_gate() {
        return Err(Error::StrategyInapplicable(
            "Gray addition identity failed its exhaustive check",
        ));
    }
    let g = code.generator();
    let n = g.n();
    let mut basis = Gf2Basis::new();
    let order4 = g.block1();
    for u in order4 {
        basis.insert(gray_map(u).mask());
        basis.insert(gray_map(&u.double()).mask());
    }
    for v in g.block2() {
        basis.insert(gray_map(v).mask());
    }
    for (i, u) in order4.iter().enumerate() {
        for w in &order4[i + 1..] {
            let both = u.odd_mask() & w.odd_mask();
            basis.insert(gray_map(&Z4Word::doubled_from_mask(n, both)?).mask());
        }
    }
    Ok(basis)
}

fn rank_by_generator_span(code: &QuaternaryCode) -> Result<u32> {
    Ok(generator_span_basis(code)?.rank())
}

/// `{x : x ^ H = H}` for a code containing the zero word. Since `0 in H`,
/// the kernel lies inside `H`, so only codewords are tested.
pub fn kernel(code: &BinaryCode) -> Result<BinaryCode> {
    let explicit = code.materialize(KERNEL_CAP)?;
    let zero = BinaryWord::zero(code.len())?;
    if !explicit.contains(&zero)? {
        return Err(Error::ZeroWordAbsent);
    }
    let words = explicit.words().expect("materialized");
    let keys: HashSet<u128> = words.iter().map(|w| w.mask()).collect();
    let ker: Vec<BinaryWord> = words
        .par_iter()
        .filter(|x| words.iter().all(|h| keys.contains(&(x.mask() ^ h.mask()))))
        .copied()
        .collect();
    BinaryCode::from_words(code.len(), ker)
}

pub fn kernel_size(code: &BinaryCode) -> Result<u128> {
    Ok(kernel(code)?.cardinality())
}

/// Closed under XOR. A code containing zero is linear exactly when it fills
/// its own span, that is when `|C| = 2^rank`.
pub fn is_linear(code: &BinaryCode) -> Result<bool> {
    let card = code.cardinality();
    if !card.is_power_of_two() || !code.contains(&BinaryWord::zero(code.len())?)? {
        return Ok(false);
    }
    let strategy = if code.source().is_some() {
        RankStrategy::GeneratorSpan
    } else {
        RankStrategy::Enumeration
    };
    Ok(1u128 << rank(code, strategy)? == card)
}

/// Minimum Lee distance of an additive code (minimum nonzero Lee weight);
/// `None` for the zero code.
pub fn min_lee_distance(code: &QuaternaryCode) -> Result<Option<u32>> {
    code.ensure_enumerable(ENUMERATION_CAP)?;
    let span = code.span();
    let best = chunks(&span)
        .into_par_iter()
        .filter_map(|(s, e)| {
            span.iter_range(s, e)
                .filter(|c| !c.is_zero())
                .map(|c| c.lee_weight())
                .min()
        })
        .min();
    Ok(best)
}

/// Minimum Hamming distance; for Gray images of additive codes this is the
/// minimum nonzero weight, otherwise a pairwise scan.
pub fn min_hamming_distance(code: &BinaryCode) -> Result<Option<u32>> {
    if let Some(src) = code.source() {
        return min_lee_distance(src);
    }
    let words = code.words().unwrap_or(&[]);
    if words.len() > PAIRWISE_CAP {
        return Err(Error::TooLarge {
            what: "pairwise distance scan",
            size: words.len() as u128,
            cap: PAIRWISE_CAP as u128,
        });
    }
    Ok(min_distance_pairwise(words))
}

/// Minimum over all pairs of distinct words; quadratic.
pub fn min_distance_pairwise(words: &[BinaryWord]) -> Option<u32> {
    let mut best = None;
    for (i, a) in words.iter().enumerate() {
        for b in &words[i + 1..] {
            if a == b {
                continue;
            }
            let d = (*a ^ *b).weight();
            best = Some(best.map_or(d, |m: u32| m.min(d)));
        }
    }
    best
}

/// Minimum Lee distance over all pairs of distinct words; quadratic.
pub fn min_lee_distance_pairwise(words: &[Z4Word]) -> Option<u32> {
    let mut best = None;
    for (i, a) in words.iter().enumerate() {
        for b in &words[i + 1..] {
            if a == b {
                continue;
            }
            let d = (*b - *a).lee_weight();
            best = Some(best.map_or(d, |m: u32| m.min(d)));
        }
    }
    best
}

/// Histogram of Lee weights.
pub fn lee_weight_distribution(code: &QuaternaryCode) -> Result<BTreeMap<u32, u128>> {
    code.ensure_enumerable(ENUMERATION_CAP)?;
    let span = code.span();
    let width = 2 * span.n() + 1;
    let hist = chunks(&span)
        .into_par_iter()
        .map(|(s, e)| {
            let mut h = vec![0u128; width];
            for c in span.iter_range(s, e) {
                h[c.lee_weight() as usize] += 1;
            }
            h
        })
        .reduce(
            || vec![0u128; width],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(sparse(hist))
}

/// Histogram of Hamming weights.
pub fn hamming_weight_distribution(code: &BinaryCode) -> Result<BTreeMap<u32, u128>> {
    if let (None, Some(src)) = (code.words(), code.source()) {
        return lee_weight_distribution(src);
    }
    code.ensure_enumerable(ENUMERATION_CAP)?;
    let mut hist = vec![0u128; code.len() + 1];
    for w in code.iter() {
        hist[w.weight() as usize] += 1;
    }
    Ok(sparse(hist))
}

fn sparse(hist: Vec<u128>) -> BTreeMap<u32, u128> {
    hist.into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .map(|(w, c)| (w as u32, c))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

impl FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            _ => Err(Error::Unsupported(format!("unknown side {s:?}, expected even or odd"))),
        }
    }
}

fn parity_mask(len: usize, parity: Parity) -> u128 {
    let even = 0x5555_5555_5555_5555_5555_5555_5555_5555u128;
    let m = match parity {
        Parity::Even => even,
        Parity::Odd => even << 1,
    };
    m & mask128(len)
}

/// Bits at positions of the given parity, packed down to half length.
fn gather(x: u128, half: usize, parity: Parity) -> u128 {
    let shift = usize::from(parity == Parity::Odd);
    (0..half).fold(0, |acc, j| acc | (((x >> (2 * j + shift)) & 1) << j))
}

fn scatter(y: u128, half: usize, parity: Parity) -> u128 {
    let shift = usize::from(parity == Parity::Odd);
    (0..half).fold(0, |acc, j| acc | (((y >> j) & 1) << (2 * j + shift)))
}

/// `{y : y interleaved with zeros at the other parity lies in C}`.
pub fn project(code: &BinaryCode, parity: Parity) -> Result<BinaryCode> {
    let len = code.len();
    if !len.is_multiple_of(2) {
        return Err(Error::OddLength(len));
    }
    let half = len / 2;
    let other = parity_mask(len, if parity == Parity::Even { Parity::Odd } else { Parity::Even });
    let words: Vec<BinaryWord> = if let Some(words) = code.words() {
        words
            .iter()
            .filter(|w| w.mask() & other == 0)
            .map(|w| BinaryWord::from_mask(half, gather(w.mask(), half, parity)))
            .collect::<Result<_>>()?
    } else {
        if half > PROJECTION_SCAN_CAP {
            return Err(Error::TooLarge {
                what: "projection scan",
                size: 1u128 << half,
                cap: 1u128 << PROJECTION_SCAN_CAP,
            });
        }
        let hits: Result<Vec<Option<u128>>> = (0..1u128 << half)
            .into_par_iter()
            .map(|y| {
                let x = BinaryWord::from_mask(len, scatter(y, half, parity))?;
                Ok(code.contains(&x)?.then_some(y))
            })
            .collect();
        hits?
            .into_iter()
            .flatten()
            .map(|y| BinaryWord::from_mask(half, y))
            .collect::<Result<_>>()?
    };
    BinaryCode::from_words(half, words)
}

pub fn even_projection(code: &BinaryCode) -> Result<BinaryCode> {
    project(code, Parity::Even)
}

pub fn odd_projection(code: &BinaryCode) -> Result<BinaryCode> {
    project(code, Parity::Odd)
}

/// Which invariants to compute.
#[derive(Clone, Copy, Debug)]
pub struct InvariantOptions {
    pub min_distance: bool,
    pub kernel: bool,
    pub rank: Option<RankStrategy>,
    pub weight_distribution: bool,
}

impl InvariantOptions {
    /// Everything that stays cheap for the given code.
    pub fn all_feasible(code: &QuaternaryCode) -> Self {
        let enumerable = code.ensure_enumerable(ENUMERATION_CAP).is_ok();
        Self {
            min_distance: enumerable,
            kernel: code.cardinality() <= KERNEL_CAP && code.log2_cardinality() < 127,
            rank: Some(RankStrategy::GeneratorSpan),
            weight_distribution: enumerable,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub length: usize,
    pub cardinality: u128,
    pub min_distance: Option<u32>,
    pub kernel_size: Option<u128>,
    pub rank: Option<u32>,
    pub linear: bool,
    pub weight_distribution: Option<BTreeMap<u32, u128>>,
}

impl InvariantReport {
    /// `key=value` pairs, skipping invariants that were not computed.
    pub fn to_pairs(&self) -> Vec<(&'static str, String)> {
        let mut out = vec![
            ("length", self.length.to_string()),
            ("cardinality", self.cardinality.to_string()),
        ];
        if let Some(d) = self.min_distance {
            out.push(("min_distance", d.to_string()));
        }
        if let Some(k) = self.kernel_size {
            out.push(("kernel_size", k.to_string()));
        }
        if let Some(r) = self.rank {
            out.push(("rank", r.to_string()));
        }
        out.push(("linear", self.linear.to_string()));
        if let Some(wd) = &self.weight_distribution {
            out.push(("weight_distribution", format_distribution(wd)));
        }
        out
    }

    pub fn to_kv_lines(&self) -> String {
        self.to_pairs()
            .into_iter()
            .map(|(k, v)| format!("{k}={v}\n"))
            .collect()
    }
}

/// `w:count` pairs joined by commas.
pub fn format_distribution(wd: &BTreeMap<u32, u128>) -> String {
    wd.iter()
        .map(|(w, c)| format!("{w}:{c}"))
        .collect::<Vec<_>>()
        .join(",")
}

/// Invariants of the Gray image of `code` (binary length `2n`).
pub fn invariant_report(code: &QuaternaryCode, opts: InvariantOptions) -> Result<InvariantReport> {
    let image = binary_image(code)?;
    let min_distance = if opts.min_distance {
        min_lee_distance(code)?
    } else {
        None
    };
    let kernel_size = if opts.kernel {
        Some(kernel_size(&image)?)
    } else {
        None
    };
    let rank = match opts.rank {
        Some(s) => Some(rank(&image, s)?),
        None => None,
    };
    let linear = match (kernel_size, rank) {
        (Some(k), _) => k == code.cardinality(),
        (None, Some(r)) => r == code.log2_cardinality(),
        (None, None) => is_linear(&image)?,
    };
    let weight_distribution = if opts.weight_distribution {
        Some(lee_weight_distribution(code)?)
    } else {
        None
    };
    Ok(InvariantReport {
        length: image.len(),
        cardinality: code.cardinality(),
        min_distance,
        kernel_size,
        rank,
        linear,
        weight_distribution,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{hadamard_code, perfect_code, FamilyParams};

    fn p(r1: u32, r2: u32) -> FamilyParams {
        FamilyParams::new(r1, r2).unwrap()
    }

    fn hbin(r1: u32, r2: u32) -> BinaryCode {
        binary_image(&hadamard_code(p(r1, r2)).unwrap()).unwrap()
    }

    fn cbin(r1: u32, r2: u32) -> BinaryCode {
        binary_image(&perfect_code(p(r1, r2)).unwrap()).unwrap()
    }

    fn zero_code(len: usize) -> BinaryCode {
        BinaryCode::from_words(len, vec![BinaryWord::zero(len).unwrap()]).unwrap()
    }

    /// Kernel straight from the definition, over all of E^N.
    fn kernel_oracle(code: &BinaryCode) -> usize {
        let words: HashSet<u128> = code.iter().map(|w| w.mask()).collect();
        (0..1u128 << code.len())
            .filter(|x| words.iter().all(|h| words.contains(&(x ^ h))))
            .count()
    }

    #[test]
    fn identity_gate_passes() {
        assert!(verify_addition_identity());
        assert!(addition_identity_gate());
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_size(&hbin(2, 0)).unwrap(), 16);
        let linear = hbin(0, 3);
        let ker = kernel(&linear).unwrap();
        assert!(ker.same_set(&linear).unwrap());
        let z = zero_code(4);
        assert!(kernel(&z).unwrap().same_set(&z).unwrap());
    }

    #[test]
    fn kernel_matches_definition_on_small_codes() {
        for (r1, r2) in [(0, 0), (0, 1), (1, 0), (0, 2)] {
            let h = hbin(r1, r2);
            assert_eq!(kernel_size(&h).unwrap() as usize, kernel_oracle(&h));
        }
        // a nonlinear toy code
        let words = ["0000", "1100", "1010", "0111"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let toy = BinaryCode::from_words(4, words).unwrap();
        assert_eq!(kernel_size(&toy).unwrap() as usize, kernel_oracle(&toy));
    }

    #[test]
    fn kernel_requires_zero() {
        let words = vec!["01".parse().unwrap(), "10".parse().unwrap()];
        let c = BinaryCode::from_words(2, words).unwrap();
        assert!(matches!(kernel(&c), Err(Error::ZeroWordAbsent)));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&cbin(1, 1), RankStrategy::Enumeration).unwrap(), 13);
        assert_eq!(rank(&cbin(0, 3), RankStrategy::Enumeration).unwrap(), 11);
        assert_eq!(rank(&zero_code(8), RankStrategy::Enumeration).unwrap(), 0);
        assert!(matches!(
            rank(&zero_code(8), RankStrategy::GeneratorSpan),
            Err(Error::StrategyInapplicable(_))
        ));
    }

    #[test]
    fn rank_strategies_agree_up_to_k4() {
        for k in 1..=4 {
            for q in crate::family::family_params_table(k) {
                for code in [cbin(q.r1, q.r2), hbin(q.r1, q.r2)] {
                    assert_eq!(
                        rank(&code, RankStrategy::Enumeration).unwrap(),
                        rank(&code, RankStrategy::GeneratorSpan).unwrap(),
                        "{q}"
                    );
                }
            }
        }
    }

    #[test]
    fn min_distance_examples() {
        assert_eq!(min_lee_distance(&hadamard_code(p(1, 1)).unwrap()).unwrap(), Some(8));
        assert_eq!(min_lee_distance(&perfect_code(p(1, 1)).unwrap()).unwrap(), Some(4));
        assert_eq!(min_hamming_distance(&hbin(1, 0)).unwrap(), Some(4));
        assert_eq!(min_lee_distance(&perfect_code(p(0, 0)).unwrap()).unwrap(), None);
    }

    #[test]
    fn min_distance_matches_pairwise_scan() {
        for k in 1..=3 {
            for q in crate::family::family_params_table(k) {
                for code in [hadamard_code(q).unwrap(), perfect_code(q).unwrap()] {
                    let words: Vec<Z4Word> = code.codewords().collect();
                    let image: Vec<BinaryWord> = words.iter().map(gray_map).collect();
                    let fast = min_lee_distance(&code).unwrap();
                    assert_eq!(fast, min_lee_distance_pairwise(&words));
                    assert_eq!(fast, min_distance_pairwise(&image));
                }
            }
        }
    }

    #[test]
    fn pairwise_distances_follow_weight_distribution() {
        // additive code: each weight class appears |C| times among ordered pairs
        for q in [p(0, 2), p(1, 0), p(0, 1)] {
            let code = perfect_code(q).unwrap();
            let words: Vec<Z4Word> = code.codewords().collect();
            let mut pairs = BTreeMap::new();
            for a in &words {
                for b in &words {
                    *pairs.entry((*b - *a).lee_weight()).or_insert(0u128) += 1;
                }
            }
            let wd = lee_weight_distribution(&code).unwrap();
            let scaled: BTreeMap<u32, u128> =
                wd.iter().map(|(&w, &c)| (w, c * words.len() as u128)).collect();
            assert_eq!(pairs, scaled);
        }
    }

    #[test]
    fn linearity_examples() {
        assert!(is_linear(&hbin(0, 3)).unwrap());
        assert!(!is_linear(&hbin(2, 0)).unwrap());
        assert!(is_linear(&zero_code(2)).unwrap());
    }

    #[test]
    fn linearity_agrees_with_kernel() {
        for k in 1..=5 {
            for q in crate::family::family_params_table(k) {
                let h = hbin(q.r1, q.r2);
                assert_eq!(
                    is_linear(&h).unwrap(),
                    kernel_size(&h).unwrap() == h.cardinality()
                );
            }
        }
    }

    #[test]
    fn weight_distribution_examples() {
        let h00 = hadamard_code(p(0, 0)).unwrap();
        assert_eq!(
            lee_weight_distribution(&h00).unwrap(),
            BTreeMap::from([(0, 1), (1, 2), (2, 1)])
        );
        assert_eq!(
            hamming_weight_distribution(&zero_code(3)).unwrap(),
            BTreeMap::from([(0, 1)])
        );
        assert_eq!(
            hamming_weight_distribution(&hbin(1, 0)).unwrap(),
            BTreeMap::from([(0, 1), (4, 14), (8, 1)])
        );
    }

    #[test]
    fn projection_examples() {
        let c11 = cbin(1, 1);
        assert!(even_projection(&c11).unwrap().same_set(&cbin(1, 0)).unwrap());
        assert!(odd_projection(&c11).unwrap().same_set(&cbin(1, 0)).unwrap());
        let c10 = cbin(1, 0);
        assert!(even_projection(&c10).unwrap().same_set(&cbin(0, 1)).unwrap());
        let z = even_projection(&zero_code(8)).unwrap();
        assert!(z.same_set(&zero_code(4)).unwrap());
        assert!(matches!(
            even_projection(&zero_code(3)),
            Err(Error::OddLength(3))
        ));
    }

    #[test]
    fn projection_scan_matches_filter() {
        let code = perfect_code(p(1, 1)).unwrap();
        let explicit = binary_image(&code).unwrap();
        let lazy = BinaryCode::lazy_image(&code);
        assert!(!lazy.is_explicit());
        for parity in [Parity::Even, Parity::Odd] {
            let a = project(&explicit, parity).unwrap();
            let b = project(&lazy, parity).unwrap();
            assert!(a.same_set(&b).unwrap());
        }
    }

    #[test]
    fn gather_scatter_inverse() {
        for y in [0u128, 1, 0b1011, 0xffff] {
            for parity in [Parity::Even, Parity::Odd] {
                assert_eq!(gather(scatter(y, 16, parity), 16, parity), y);
            }
        }
    }

    #[test]
    fn report_serialization() {
        let code = hadamard_code(p(1, 0)).unwrap();
        let r = invariant_report(&code, InvariantOptions::all_feasible(&code)).unwrap();
        assert_eq!(
            r.to_kv_lines(),
            "length=8\ncardinality=16\nmin_distance=4\nkernel_size=16\nrank=4\nlinear=true\nweight_distribution=0:1,4:14,8:1\n"
        );
    }

    #[test]
    fn basis_merge_is_order_independent_in_rank() {
        let mut a = Gf2Basis::new();
        let mut b = Gf2Basis::new();
        for v in [3u128, 5, 6] {
            a.insert(v);
        }
        for v in [9u128, 5] {
            b.insert(v);
        }
        let mut ab = a.clone();
        ab.merge(&b);
        let mut ba = b.clone();
        ba.merge(&a);
        assert_eq!(ab.rank(), 3);
        assert_eq!(ba.rank(), 3);
    }
}
