//! Equivalence classes of the family codes at binary length `N = 2^k`.
//!
//! Hadamard codes are separated by kernel size: `H^{0,r2}` and `H^{1,r2}`
//! are linear and merge into one class, each `r1 >= 2` is its own class.
//! Extended perfect codes are separated by rank, which is distinct for every
//! `(r1, r2)` once `k >= 4`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::family::{
    binary_image, family_params_table, hadamard_code, perfect_code, Family, FamilyParams,
};
use crate::invariants::{kernel_size, lee_weight_distribution, rank, RankStrategy};
use crate::matrix::MAX_K;

/// `floor((k - 1) / 2)`.
pub fn expected_hadamard_classes(k: u32) -> usize {
    (k.saturating_sub(1) / 2) as usize
}

/// `floor((k + 1) / 2)`.
pub fn expected_perfect_classes(k: u32) -> usize {
    k.div_ceil(2) as usize
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Representative {
    pub params: FamilyParams,
    /// Kernel size (Hadamard) or rank (perfect) of the binary image.
    pub invariant: u128,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRow {
    pub k: u32,
    pub family: Family,
    pub representatives: Vec<Representative>,
    /// Parameter groups, one per class, in ascending `r1`.
    pub classes: Vec<Vec<FamilyParams>>,
    /// Separating invariant differs between every two classes.
    pub injective: bool,
    /// Separating invariant agrees inside every class; for the merged linear
    /// Hadamard class this also covers `rank = log2 |H|` and equal weight
    /// distributions.
    pub constant_within_classes: bool,
}

impl ClassificationRow {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn expected_count(&self) -> usize {
        match self.family {
            Family::Hadamard => expected_hadamard_classes(self.k),
            Family::Perfect => expected_perfect_classes(self.k),
        }
    }

    pub fn invariant_name(&self) -> &'static str {
        match self.family {
            Family::Hadamard => "kernel_size",
            Family::Perfect => "rank",
        }
    }

    pub fn is_consistent(&self) -> bool {
        self.injective && self.constant_within_classes && self.class_count() == self.expected_count()
    }
}

impl fmt::Display for ClassificationRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "family={} k={} N={} classes={} expected={} invariant={}",
            self.family,
            self.k,
            1u64 << self.k,
            self.class_count(),
            self.expected_count(),
            self.invariant_name()
        )?;
        for (ci, class) in self.classes.iter().enumerate() {
            for p in class {
                let inv = self
                    .representatives
                    .iter()
                    .find(|r| r.params == *p)
                    .map_or(0, |r| r.invariant);
                writeln!(
                    f,
                    "class={ci} r1={} r2={} {}={inv}",
                    p.r1,
                    p.r2,
                    self.invariant_name()
                )?;
            }
        }
        Ok(())
    }
}

fn check_k(k: u32, min: u32) -> Result<()> {
    if !(min..=MAX_K).contains(&k) {
        return Err(Error::Unsupported(format!(
            "k={k} outside supported range {min}..={MAX_K}"
        )));
    }
    Ok(())
}

fn injective(values: &[u128]) -> bool {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

pub fn classify_hadamard(k: u32) -> Result<ClassificationRow> {
    check_k(k, 3)?;
    let mut representatives = Vec::new();
    let mut linear_class = Vec::new();
    let mut classes = Vec::new();
    let mut linear_ok = true;
    let mut linear_distribution = None;
    for p in family_params_table(k) {
        let code = hadamard_code(p)?;
        let image = binary_image(&code)?;
        let ker = kernel_size(&image)?;
        representatives.push(Representative {
            params: p,
            invariant: ker,
        });
        if p.r1 <= 1 {
            // linear: kernel = code, span = code, and all share one weight profile
            let r = rank(&image, RankStrategy::GeneratorSpan)?;
            linear_ok &= ker == code.cardinality() && r == code.log2_cardinality();
            let wd = lee_weight_distribution(&code)?;
            match &linear_distribution {
                None => linear_distribution = Some(wd),
                Some(prev) => linear_ok &= *prev == wd,
            }
            linear_class.push(p);
        } else {
            classes.push(vec![p]);
        }
    }
    if !linear_class.is_empty() {
        classes.insert(0, linear_class);
    }

    let by_params: BTreeMap<FamilyParams, u128> = representatives
        .iter()
        .map(|r| (r.params, r.invariant))
        .collect();
    let class_values: Vec<Vec<u128>> = classes
        .iter()
        .map(|c| c.iter().map(|p| by_params[p]).collect())
        .collect();
    let constant = class_values.iter().all(|v| v.windows(2).all(|w| w[0] == w[1]));
    let heads: Vec<u128> = class_values.iter().map(|v| v[0]).collect();

    Ok(ClassificationRow {
        k,
        family: Family::Hadamard,
        representatives,
        classes,
        injective: injective(&heads),
        constant_within_classes: constant && linear_ok,
    })
}

/// Ranks come from the generator-span path, which is gated on the
/// exhaustive check of the Gray addition identity.
pub fn classify_perfect(k: u32) -> Result<ClassificationRow> {
    check_k(k, 4)?;
    let mut representatives = Vec::new();
    for p in family_params_table(k) {
        let code = perfect_code(p)?;
        let image = crate::family::BinaryCode::lazy_image(&code);
        let r = rank(&image, RankStrategy::GeneratorSpan)?;
        representatives.push(Representative {
            params: p,
            invariant: u128::from(r),
        });
    }
    let values: Vec<u128> = representatives.iter().map(|r| r.invariant).collect();
    // one class per distinct rank
    let mut grouped: BTreeMap<u128, Vec<FamilyParams>> = BTreeMap::new();
    for r in &representatives {
        grouped.entry(r.invariant).or_default().push(r.params);
    }
    let mut classes: Vec<Vec<FamilyParams>> = grouped.into_values().collect();
    classes.sort_by_key(|c| c[0]);
    Ok(ClassificationRow {
        k,
        family: Family::Perfect,
        representatives,
        classes,
        injective: injective(&values),
        constant_within_classes: true,
    })
}

pub fn classify(family: Family, k: u32) -> Result<ClassificationRow> {
    match family {
        Family::Hadamard => classify_hadamard(k),
        Family::Perfect => classify_perfect(k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(r1: u32, r2: u32) -> FamilyParams {
        FamilyParams::new(r1, r2).unwrap()
    }

    #[test]
    fn expected_counts() {
        let h: Vec<usize> = (3..=7).map(expected_hadamard_classes).collect();
        assert_eq!(h, [1, 1, 2, 2, 3]);
        let c: Vec<usize> = (4..=7).map(expected_perfect_classes).collect();
        assert_eq!(c, [2, 3, 3, 4]);
    }

    #[test]
    fn hadamard_k5() {
        let row = classify_hadamard(5).unwrap();
        assert_eq!(row.class_count(), 2);
        assert_eq!(row.classes, vec![vec![p(0, 4), p(1, 2)], vec![p(2, 0)]]);
        let inv: Vec<u128> = row.representatives.iter().map(|r| r.invariant).collect();
        assert_eq!(inv, [64, 64, 16]);
        assert!(row.is_consistent());
    }

    #[test]
    fn hadamard_k3() {
        let row = classify_hadamard(3).unwrap();
        assert_eq!(row.class_count(), 1);
        assert!(row.is_consistent());
    }

    #[test]
    fn hadamard_k7_kernels() {
        let row = classify_hadamard(7).unwrap();
        assert_eq!(row.class_count(), 3);
        let inv: Vec<u128> = row.representatives.iter().map(|r| r.invariant).collect();
        // (0,6), (1,4) linear with 2N = 256 words; (2,2) -> 2^6; (3,0) -> 2^5
        assert_eq!(inv, [256, 256, 64, 32]);
        assert!(row.is_consistent());
    }

    #[test]
    fn perfect_k4_k5_k6() {
        let row = classify_perfect(4).unwrap();
        let inv: Vec<u128> = row.representatives.iter().map(|r| r.invariant).collect();
        assert_eq!(inv, [11, 13]);
        assert_eq!(row.class_count(), 2);

        let row = classify_perfect(5).unwrap();
        let inv: Vec<u128> = row.representatives.iter().map(|r| r.invariant).collect();
        assert_eq!(inv, [27, 28, 29]);
        assert!(row.is_consistent());

        assert_eq!(classify_perfect(6).unwrap().class_count(), 3);
    }

    #[test]
    fn out_of_range() {
        assert!(classify_hadamard(2).is_err());
        assert!(classify_hadamard(8).is_err());
        assert!(classify_perfect(3).is_err());
    }
}
