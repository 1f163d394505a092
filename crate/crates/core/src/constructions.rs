//! Recurrent constructions of the Hadamard family: the Plotkin-style doubling
//! `{(a, a + b) : b in R'}` and the quadrupling
//! `{(a, a + b, a + 2b, a + 3b) : b in R''}`.
//!
//! Both act on generator matrices, so a construction never materializes the
//! codewords of its input.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::family::{binary_image, hadamard_code, FamilyParams, QuaternaryCode};
use crate::invariants::{kernel_size, lee_weight_distribution, min_lee_distance, rank, RankStrategy};
use crate::matrix::QuaternaryMatrix;
use crate::z4::Z4Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepetitionOrder {
    /// `{0...0, 2...2}`
    Two,
    /// `{0...0, 1...1, 2...2, 3...3}`
    Four,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RepetitionCode {
    pub n: usize,
    pub order: RepetitionOrder,
}

impl RepetitionCode {
    pub fn new(n: usize, order: RepetitionOrder) -> Self {
        Self { n, order }
    }

    pub fn code(&self) -> Result<QuaternaryCode> {
        let g = match self.order {
            RepetitionOrder::Two => {
                QuaternaryMatrix::new(self.n, vec![], vec![Z4Word::constant(self.n, 2)?])?
            }
            RepetitionOrder::Four => {
                QuaternaryMatrix::new(self.n, vec![Z4Word::constant(self.n, 1)?], vec![])?
            }
        };
        Ok(QuaternaryCode::from_generator(g))
    }

    pub fn cardinality(&self) -> u128 {
        match self.order {
            RepetitionOrder::Two => 2,
            RepetitionOrder::Four => 4,
        }
    }

    pub fn min_lee_distance(&self) -> u32 {
        match self.order {
            RepetitionOrder::Two => 2 * self.n as u32,
            RepetitionOrder::Four => self.n as u32,
        }
    }
}

fn repeat(g: &Z4Word, times: usize) -> Result<Z4Word> {
    let mut out = *g;
    for _ in 1..times {
        out = out.concat(g)?;
    }
    Ok(out)
}

/// `{(a, a + b) : a in H, b in {0...0, 2...2}}`, of length `2n`.
///
/// Generators: `(g, g)` for every generator `g` of `H`, plus `(0...0, 2...2)`.
pub fn plotkin_double(h: &QuaternaryCode) -> Result<QuaternaryCode> {
    let n = h.n();
    let g = h.generator();
    let block1 = g
        .block1()
        .iter()
        .map(|r| repeat(r, 2))
        .collect::<Result<Vec<_>>>()?;
    let zero = Z4Word::zero(n)?;
    let mut block2 = vec![zero.concat(&Z4Word::constant(n, 2)?)?];
    for r in g.block2() {
        block2.push(repeat(r, 2)?);
    }
    Ok(QuaternaryCode::from_generator(QuaternaryMatrix::new(
        2 * n,
        block1,
        block2,
    )?))
}

/// `{(a, a + b, a + 2b, a + 3b) : a in H, b in R''}`, of length `4n`.
///
/// Generators: `(g, g, g, g)` for every generator `g` of `H`, plus
/// `(0...0, 1...1, 2...2, 3...3)`.
pub fn quadruple(h: &QuaternaryCode) -> Result<QuaternaryCode> {
    let n = h.n();
    let g = h.generator();
    let step = Z4Word::zero(n)?
        .concat(&Z4Word::constant(n, 1)?)?
        .concat(&Z4Word::constant(n, 2)?)?
        .concat(&Z4Word::constant(n, 3)?)?;
    let mut block1 = g
        .block1()
        .iter()
        .map(|r| repeat(r, 4))
        .collect::<Result<Vec<_>>>()?;
    // keep the new row right below the first one, as in A^{r1+1,r2}
    let at = block1.len().min(1);
    block1.insert(at, step);
    let block2 = g
        .block2()
        .iter()
        .map(|r| repeat(r, 4))
        .collect::<Result<Vec<_>>>()?;
    Ok(QuaternaryCode::from_generator(QuaternaryMatrix::new(
        4 * n,
        block1,
        block2,
    )?))
}

/// Starts from `H^{0,0} = {0,1,2,3}`, quadruples `r1` times, then doubles
/// `r2` times.
pub fn recurrent_build(p: FamilyParams) -> Result<QuaternaryCode> {
    let p = FamilyParams::new(p.r1, p.r2)?;
    let mut code = hadamard_code(FamilyParams::new(0, 0)?)?;
    for _ in 0..p.r1 {
        code = quadruple(&code)?;
    }
    for _ in 0..p.r2 {
        code = plotkin_double(&code)?;
    }
    Ok(code)
}

/// Equivalence invariants of one quaternary code and its Gray image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSummary {
    pub length: usize,
    pub cardinality: u128,
    pub min_lee_distance: Option<u32>,
    pub kernel_size: u128,
    pub rank: u32,
    pub lee_weight_distribution: BTreeMap<u32, u128>,
}

impl InvariantSummary {
    pub fn of(code: &QuaternaryCode) -> Result<Self> {
        let image = binary_image(code)?;
        Ok(Self {
            length: code.n(),
            cardinality: code.cardinality(),
            min_lee_distance: min_lee_distance(code)?,
            kernel_size: kernel_size(&image)?,
            rank: rank(&image, RankStrategy::GeneratorSpan)?,
            lee_weight_distribution: lee_weight_distribution(code)?,
        })
    }
}

/// Side-by-side invariants. A mismatch proves the codes inequivalent; a
/// full match is only evidence of equivalence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantMatch {
    pub left: InvariantSummary,
    pub right: InvariantSummary,
    pub mismatches: Vec<&'static str>,
}

impl InvariantMatch {
    pub fn all_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for InvariantMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (l, r) = (&self.left, &self.right);
        writeln!(f, "length={}/{}", l.length, r.length)?;
        writeln!(f, "cardinality={}/{}", l.cardinality, r.cardinality)?;
        let d = |x: Option<u32>| x.map_or("none".to_string(), |v| v.to_string());
        writeln!(
            f,
            "min_distance={}/{}",
            d(l.min_lee_distance),
            d(r.min_lee_distance)
        )?;
        writeln!(f, "kernel_size={}/{}", l.kernel_size, r.kernel_size)?;
        writeln!(f, "rank={}/{}", l.rank, r.rank)?;
        writeln!(
            f,
            "weight_distribution_equal={}",
            l.lee_weight_distribution == r.lee_weight_distribution
        )?;
        write!(f, "all_match={}", self.all_match())
    }
}

pub fn equivalence_invariant_match(
    c1: &QuaternaryCode,
    c2: &QuaternaryCode,
) -> Result<InvariantMatch> {
    let left = InvariantSummary::of(c1)?;
    let right = InvariantSummary::of(c2)?;
    let mut mismatches = Vec::new();
    if left.length != right.length {
        mismatches.push("length");
    }
    if left.cardinality != right.cardinality {
        mismatches.push("cardinality");
    }
    if left.min_lee_distance != right.min_lee_distance {
        mismatches.push("min_distance");
    }
    if left.kernel_size != right.kernel_size {
        mismatches.push("kernel_size");
    }
    if left.rank != right.rank {
        mismatches.push("rank");
    }
    if left.lee_weight_distribution != right.lee_weight_distribution {
        mismatches.push("weight_distribution");
    }
    Ok(InvariantMatch {
        left,
        right,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::perfect_code;
    use std::collections::HashSet;

    fn p(r1: u32, r2: u32) -> FamilyParams {
        FamilyParams::new(r1, r2).unwrap()
    }

    fn h(r1: u32, r2: u32) -> QuaternaryCode {
        hadamard_code(p(r1, r2)).unwrap()
    }

    #[test]
    fn repetition_codes() {
        for n in [1, 3, 8] {
            for order in [RepetitionOrder::Two, RepetitionOrder::Four] {
                let r = RepetitionCode::new(n, order);
                let c = r.code().unwrap();
                assert_eq!(c.cardinality(), r.cardinality());
                assert_eq!(min_lee_distance(&c).unwrap(), Some(r.min_lee_distance()));
            }
        }
    }

    #[test]
    fn doubling_examples() {
        assert!(plotkin_double(&h(0, 0)).unwrap().same_set(&h(0, 1)).unwrap());

        let z = plotkin_double(&QuaternaryCode::zero(3).unwrap()).unwrap();
        let words: HashSet<String> = z.codewords().map(|w| w.to_string()).collect();
        assert_eq!(words, HashSet::from(["000000".into(), "000222".into()]));

        let m = equivalence_invariant_match(&plotkin_double(&h(2, 0)).unwrap(), &h(2, 1)).unwrap();
        assert!(m.all_match(), "{m}");
        assert_eq!(m.left.kernel_size, 32);
    }

    #[test]
    fn quadrupling_examples() {
        assert!(quadruple(&h(0, 0)).unwrap().same_set(&h(1, 0)).unwrap());

        let z = quadruple(&QuaternaryCode::zero(1).unwrap()).unwrap();
        let words: HashSet<String> = z.codewords().map(|w| w.to_string()).collect();
        assert_eq!(
            words,
            HashSet::from(["0000".into(), "0123".into(), "0202".into(), "0321".into()])
        );

        let q = quadruple(&h(1, 0)).unwrap();
        let words: Vec<Z4Word> = q.codewords().collect();
        assert_eq!(words.iter().collect::<HashSet<_>>().len(), 64);
        let brute = words
            .iter()
            .filter(|w| !w.is_zero())
            .map(|w| w.lee_weight())
            .min();
        assert_eq!(brute, Some(16));
    }

    #[test]
    fn quadrupling_reproduces_the_next_family_member() {
        for (r1, r2) in [(0, 0), (0, 1), (1, 0), (1, 1), (0, 2), (2, 0)] {
            assert!(quadruple(&h(r1, r2)).unwrap().same_set(&h(r1 + 1, r2)).unwrap());
        }
    }

    #[test]
    fn recurrent_examples() {
        assert!(recurrent_build(p(0, 2)).unwrap().same_set(&h(0, 2)).unwrap());
        let words: Vec<String> = recurrent_build(p(0, 0))
            .unwrap()
            .codewords()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(words, ["0", "1", "2", "3"]);
        let m = equivalence_invariant_match(&recurrent_build(p(2, 0)).unwrap(), &h(2, 0)).unwrap();
        assert!(m.all_match());
        assert_eq!(m.left.kernel_size, 16);
    }

    #[test]
    fn mixed_recurrence_is_a_permutation_not_the_same_set() {
        // doubling after quadrupling puts the {0,2} row above the Z4 rows
        let built = recurrent_build(p(1, 1)).unwrap();
        assert!(!built.same_set(&h(1, 1)).unwrap());
        assert!(equivalence_invariant_match(&built, &h(1, 1)).unwrap().all_match());
    }

    #[test]
    fn invariant_match_examples() {
        let m = equivalence_invariant_match(&h(2, 0), &h(1, 2)).unwrap();
        assert_eq!((m.left.kernel_size, m.right.kernel_size), (16, 64));
        assert!(!m.all_match());
        assert!(m.mismatches.contains(&"kernel_size"));

        let m = equivalence_invariant_match(&h(1, 1), &h(1, 1)).unwrap();
        assert!(m.all_match());

        let c03 = perfect_code(p(0, 3)).unwrap();
        let c11 = perfect_code(p(1, 1)).unwrap();
        let m = equivalence_invariant_match(&c03, &c11).unwrap();
        assert_eq!((m.left.rank, m.right.rank), (11, 13));
        assert!(!m.all_match());
    }
}
