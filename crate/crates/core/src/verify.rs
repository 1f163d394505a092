//! End-to-end verification of the family claims, one named check per line.
//!
//! The report is deterministic: checks run in a fixed order and no timing
//! or randomness leaks into the output (the isometry sampler is seeded).

use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{classify_hadamard, classify_perfect};
use crate::constructions::{equivalence_invariant_match, plotkin_double, quadruple, recurrent_build};
use crate::error::{Error, Result};
use crate::family::{
    binary_image, family_params_table, hadamard_code, perfect_code, BinaryCode, FamilyParams,
};
use crate::invariants::{
    addition_identity_gate, even_projection, kernel_size, min_distance_pairwise,
    min_lee_distance, odd_projection, rank, RankStrategy,
};
use crate::matrix::{build_a, MAX_K};
use crate::z4::{gray_map, hamming_distance, lee_distance, BinaryWord, Z4Word};

/// Isometry sample size per length.
pub const ISOMETRY_PAIRS: usize = 10_000;
pub const ISOMETRY_LENGTHS: [usize; 7] = [1, 2, 4, 8, 16, 32, 64];
const SEED: u64 = 0x5a4c_494e_4541_5231;

/// An expected `A^{r1,r2}`, one digit string per row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFixture {
    pub r1: u32,
    pub r2: u32,
    pub rows: Vec<String>,
}

impl MatrixFixture {
    pub fn new(r1: u32, r2: u32, rows: &[&str]) -> Self {
        Self {
            r1,
            r2,
            rows: rows.iter().map(|s| s.to_string()).collect(),
        }
    }
}

/// The seven displayed matrices, from `A^{0,0}` up to `A^{2,0}`.
pub fn reference_matrices() -> Vec<MatrixFixture> {
    vec![
        MatrixFixture::new(0, 0, &["1"]),
        MatrixFixture::new(0, 1, &["11", "02"]),
        MatrixFixture::new(1, 0, &["1111", "0123"]),
        MatrixFixture::new(0, 2, &["1111", "0022", "0202"]),
        MatrixFixture::new(1, 1, &["11111111", "00112233", "02020202"]),
        MatrixFixture::new(0, 3, &["11111111", "00002222", "00220022", "02020202"]),
        MatrixFixture::new(
            2,
            0,
            &["1111111111111111", "0000111122223333", "0123012301230123"],
        ),
    ]
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_k: u32,
    /// Enables the `2^26`-codeword enumerations at `k = 5`.
    pub include_slow: bool,
    pub matrices: Vec<MatrixFixture>,
}

impl VerifyConfig {
    pub fn new(max_k: u32, include_slow: bool) -> Self {
        Self {
            max_k,
            include_slow,
            matrices: reference_matrices(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Recorded observation, not a claim.
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    /// Acceptance group, `1..=12`.
    pub group: u8,
    pub name: String,
    pub status: Status,
    pub computed: String,
    pub expected: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub max_k: u32,
    pub include_slow: bool,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    fn record(&mut self, group: u8, name: impl Into<String>, computed: impl fmt::Display, expected: impl fmt::Display, ok: bool) {
        self.checks.push(CheckResult {
            group,
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            computed: computed.to_string(),
            expected: expected.to_string(),
        });
    }

    fn eq<T: PartialEq + fmt::Display>(&mut self, group: u8, name: impl Into<String>, computed: T, expected: T) {
        let ok = computed == expected;
        self.record(group, name, computed, expected, ok);
    }

    fn info(&mut self, group: u8, name: impl Into<String>, computed: impl fmt::Display, note: impl fmt::Display) {
        self.checks.push(CheckResult {
            group,
            name: name.into(),
            status: Status::Info,
            computed: computed.to_string(),
            expected: note.to_string(),
        });
    }

    /// An error inside a check is a failure of that check.
    fn error(&mut self, group: u8, name: impl Into<String>, err: &Error) {
        self.record(group, name, format!("error({err})"), "no error", false);
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn group_passed(&self, group: u8) -> bool {
        self.checks
            .iter()
            .filter(|c| c.group == group)
            .all(|c| c.status != Status::Fail)
    }

    pub fn group_len(&self, group: u8) -> usize {
        self.checks.iter().filter(|c| c.group == group).count()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{}\n# verify max_k={} slow={}\n",
            crate::io::FORMAT_HEADER,
            self.max_k,
            self.include_slow
        );
        for c in &self.checks {
            out.push_str(&format!(
                "check={} group={} status={} computed={} expected={}\n",
                c.name, c.group, c.status, c.computed, c.expected
            ));
        }
        let fails = self.failures().count();
        let infos = self.checks.iter().filter(|c| c.status == Status::Info).count();
        out.push_str(&format!(
            "summary checks={} passed={} failed={} info={}\n",
            self.checks.len(),
            self.checks.len() - fails - infos,
            fails,
            infos
        ));
        out
    }
}

fn params_up_to(max_k: u32) -> impl Iterator<Item = FamilyParams> {
    (1..=max_k.min(MAX_K)).flat_map(family_params_table)
}

fn tag(fam: &str, p: FamilyParams) -> String {
    format!("{fam}({},{})", p.r1, p.r2)
}

fn min_nonzero_weight(code: &BinaryCode) -> Option<u32> {
    code.iter().filter(|w| !w.is_zero()).map(|w| w.weight()).min()
}

pub fn verify_suite(config: &VerifyConfig) -> Result<VerifyReport> {
    if !(3..=MAX_K).contains(&config.max_k) {
        return Err(Error::Unsupported(format!(
            "max_k={} outside supported range 3..={MAX_K}",
            config.max_k
        )));
    }
    let mut r = VerifyReport {
        max_k: config.max_k,
        include_slow: config.include_slow,
        checks: Vec::new(),
    };
    let max_k = config.max_k;

    // identity gate runs before anything uses the fast rank path
    let gate = addition_identity_gate();
    r.record(12, "gray.addition_identity", gate, true, gate);

    check_matrices(&mut r, config);
    check_isometry(&mut r);
    check_hadamard_params(&mut r, max_k);
    check_perfect_params(&mut r, max_k, config.include_slow);
    check_kernels(&mut r, max_k);
    check_ranks(&mut r, max_k, config.include_slow);
    check_rank_bound(&mut r, max_k, config.include_slow);
    check_projections(&mut r, max_k);
    check_constructions(&mut r, max_k);
    check_classification(&mut r, max_k);
    check_duality(&mut r, max_k);

    r.checks.sort_by_key(|c| c.group);
    Ok(r)
}

fn check_matrices(r: &mut VerifyReport, config: &VerifyConfig) {
    for fx in &config.matrices {
        if 2 * fx.r1 + fx.r2 + 1 > config.max_k {
            continue;
        }
        let name = format!("matrix.A({},{})", fx.r1, fx.r2);
        match build_a(fx.r1, fx.r2) {
            Ok(a) => {
                let got: Vec<String> = a.rows().map(|w| w.to_string()).collect();
                r.eq(1, name, got.join("/"), fx.rows.join("/"));
            }
            Err(e) => r.error(1, name, &e),
        }
    }
}

fn check_isometry(r: &mut VerifyReport) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for len in ISOMETRY_LENGTHS {
        let mut mismatches = 0usize;
        for _ in 0..ISOMETRY_PAIRS {
            let a: Vec<u8> = (0..len).map(|_| rng.gen_range(0..4)).collect();
            let b: Vec<u8> = (0..len).map(|_| rng.gen_range(0..4)).collect();
            let (a, b) = (
                Z4Word::from_digits(&a).expect("len in range"),
                Z4Word::from_digits(&b).expect("len in range"),
            );
            let dl = lee_distance(&a, &b).expect("same length");
            let dh = hamming_distance(&gray_map(&a), &gray_map(&b)).expect("same length");
            if dl != dh {
                mismatches += 1;
            }
        }
        r.eq(2, format!("gray.isometry.len={len}"), mismatches, 0);
    }
}

fn check_hadamard_params(r: &mut VerifyReport, max_k: u32) {
    for p in params_up_to(max_k) {
        let name = format!("hadamard.params.{}", tag("H", p));
        let res = hadamard_code(p).and_then(|c| binary_image(&c));
        match res {
            Ok(img) => {
                let big_n = p.big_n();
                let computed = format!(
                    "({},{},{})",
                    img.len(),
                    img.cardinality(),
                    min_nonzero_weight(&img).unwrap_or(0)
                );
                let expected = format!("({},{},{})", big_n, 2 * big_n, big_n / 2);
                r.eq(3, name, computed, expected);
            }
            Err(e) => r.error(3, name, &e),
        }
    }
}

fn check_perfect_params(r: &mut VerifyReport, max_k: u32, slow: bool) {
    for p in params_up_to(max_k) {
        let k = p.k();
        if k > 5 || (k == 5 && !slow) {
            continue;
        }
        let name = format!("perfect.params.{}", tag("C", p));
        let big_n = p.big_n() as u32;
        let expected_card = 1u128 << (big_n - k - 1);
        let expected_d = if k == 1 { "none".to_string() } else { "4".to_string() };
        let res = perfect_code(p).and_then(|c| {
            if k <= 4 {
                // full enumeration, distinct words counted, pairwise oracle
                let img = binary_image(&c)?;
                let words: Vec<BinaryWord> = img.iter().collect();
                let distinct = words.iter().collect::<HashSet<_>>().len() as u128;
                let d = min_distance_pairwise(&words);
                let fast = min_nonzero_weight(&img);
                Ok((img.len() as u32, distinct, d, fast == d))
            } else {
                let d = min_lee_distance(&c)?;
                Ok((2 * c.n() as u32, c.cardinality(), d, true))
            }
        });
        match res {
            Ok((len, card, d, agree)) => {
                let d = d.map_or("none".to_string(), |v| v.to_string());
                let computed = format!("({len},{card},{d})");
                let expected = format!("({big_n},{expected_card},{expected_d})");
                let ok = computed == expected && agree;
                r.record(4, name, computed, expected, ok);
            }
            Err(e) => r.error(4, name, &e),
        }
    }
}

fn check_kernels(r: &mut VerifyReport, max_k: u32) {
    let nonlinear = [(2, 0), (2, 1), (2, 2), (3, 0), (3, 1)];
    for p in params_up_to(max_k) {
        let expected = if p.r1 <= 1 {
            2 * p.big_n() as u128
        } else if nonlinear.contains(&(p.r1, p.r2)) {
            1u128 << (p.r1 + p.r2 + 2)
        } else {
            continue;
        };
        let name = format!("kernel.{}", tag("H", p));
        match hadamard_code(p).and_then(|c| kernel_size(&binary_image(&c)?)) {
            Ok(k) => r.eq(5, name, k, expected),
            Err(e) => r.error(5, name, &e),
        }
    }
}

fn rank_of(p: FamilyParams, strategy: RankStrategy) -> Result<u32> {
    let c = perfect_code(p)?;
    rank(&BinaryCode::lazy_image(&c), strategy)
}

fn check_ranks(r: &mut VerifyReport, max_k: u32, slow: bool) {
    let values = [((1, 1), 13u32), ((0, 3), 11), ((0, 4), 27), ((1, 2), 28), ((2, 0), 29)];
    for ((r1, r2), want) in values {
        let p = FamilyParams { r1, r2 };
        if p.k() > max_k {
            continue;
        }
        let enumerate = p.k() <= 4 || slow;
        let mut strategies = vec![RankStrategy::GeneratorSpan];
        if enumerate {
            strategies.insert(0, RankStrategy::Enumeration);
        }
        let mut got = Vec::new();
        for s in strategies {
            let name = format!("rank.{}.{s}", tag("C", p));
            match rank_of(p, s) {
                Ok(v) => {
                    got.push(v);
                    r.eq(6, name, v, want);
                }
                Err(e) => r.error(6, name, &e),
            }
        }
        if got.len() == 2 {
            r.record(
                6,
                format!("rank.{}.strategies_agree", tag("C", p)),
                got[0] == got[1],
                true,
                got[0] == got[1],
            );
        }
    }
    // the fast path against the enumeration oracle on every small member
    for p in params_up_to(max_k.min(4)) {
        for (fam, code) in [("C", perfect_code(p)), ("H", hadamard_code(p))] {
            let name = format!("rank.{}.strategies_agree", tag(fam, p));
            let res = code.and_then(|c| {
                let img = BinaryCode::lazy_image(&c);
                Ok((
                    rank(&img, RankStrategy::Enumeration)?,
                    rank(&img, RankStrategy::GeneratorSpan)?,
                ))
            });
            match res {
                Ok((a, b)) => r.record(6, name, format!("{a}/{b}"), "equal", a == b),
                Err(e) => r.error(6, name, &e),
            }
        }
    }
}

fn check_rank_bound(r: &mut VerifyReport, max_k: u32, slow: bool) {
    for p in params_up_to(max_k) {
        let k = p.k();
        let strategy = if k <= 4 || (k == 5 && slow) {
            RankStrategy::Enumeration
        } else {
            RankStrategy::GeneratorSpan
        };
        let bound = p.big_n() as i64 - i64::from(p.r1) - i64::from(p.r2) - 1;
        let name = format!("rank_bound.{}.{strategy}", tag("C", p));
        match rank_of(p, strategy) {
            Ok(v) => {
                r.record(7, name, v, format!("<={bound}"), i64::from(v) <= bound);
                let claimed = (p.r1 >= 1 && 2 * p.r1 + p.r2 >= 3) || (p.r1 == 0 && p.r2 >= 4);
                let tight = i64::from(v) == bound;
                let fname = format!("rank_formula.{}", tag("C", p));
                if claimed {
                    r.record(7, fname, v, bound, tight);
                } else {
                    r.info(7, fname, format!("tight={tight}"), "outside the claimed range");
                }
            }
            Err(e) => r.error(7, name, &e),
        }
    }
}

fn check_projections(r: &mut VerifyReport, max_k: u32) {
    for p in params_up_to(max_k.min(5)) {
        let lower = if p.r2 > 0 {
            FamilyParams { r1: p.r1, r2: p.r2 - 1 }
        } else if p.r1 > 0 {
            FamilyParams { r1: p.r1 - 1, r2: 1 }
        } else {
            continue;
        };
        let res = (|| {
            let code = binary_image(&perfect_code(p)?)?;
            let target = binary_image(&perfect_code(lower)?)?;
            let even = even_projection(&code)?.same_set(&target)?;
            let odd = odd_projection(&code)?.same_set(&target)?;
            Ok::<_, Error>((even, odd))
        })();
        let base = format!("projection.{}", tag("C", p));
        match res {
            Ok((even, odd)) => {
                r.record(8, format!("{base}.even"), even, format!("= {}", tag("C", lower)), even);
                r.record(8, format!("{base}.odd"), odd, format!("= {}", tag("C", lower)), odd);
            }
            Err(e) => r.error(8, base, &e),
        }
    }
}

fn check_constructions(r: &mut VerifyReport, max_k: u32) {
    // exact equality of the doubling on the linear branch
    for r2 in 0..=5u32 {
        if r2 + 2 > max_k {
            continue;
        }
        let name = format!("construct.double.H(0,{r2})=H(0,{})", r2 + 1);
        let res = (|| {
            let doubled = plotkin_double(&hadamard_code(FamilyParams::new(0, r2)?)?)?;
            doubled.same_set(&hadamard_code(FamilyParams::new(0, r2 + 1)?)?)
        })();
        match res {
            Ok(eq) => r.record(9, name, eq, true, eq),
            Err(e) => r.error(9, name, &e),
        }
    }
    // parameter laws
    for p in params_up_to(max_k.saturating_sub(1).min(6)) {
        let name = format!("construct.double.params.{}", tag("H", p));
        let res = hadamard_code(p).and_then(|h| {
            let d = plotkin_double(&h)?;
            Ok((d.n(), d.cardinality(), min_lee_distance(&d)?.unwrap_or(0)))
        });
        let n = 2 * p.n();
        match res {
            Ok(got) => r.eq(9, name, format!("{got:?}"), format!("{:?}", (n, 4 * n as u128, n as u32))),
            Err(e) => r.error(9, name, &e),
        }
    }
    for p in params_up_to(max_k.saturating_sub(2).min(5)) {
        let name = format!("construct.quadruple.params.{}", tag("H", p));
        let res = hadamard_code(p).and_then(|h| {
            let q = quadruple(&h)?;
            Ok((q.n(), q.cardinality(), min_lee_distance(&q)?.unwrap_or(0)))
        });
        let n = 4 * p.n();
        match res {
            Ok(got) => r.eq(9, name, format!("{got:?}"), format!("{:?}", (n, 4 * n as u128, n as u32))),
            Err(e) => r.error(9, name, &e),
        }
    }
    // recurrent build against the direct construction
    for p in params_up_to(max_k) {
        let name = format!("construct.recurrent.{}", tag("H", p));
        let res = (|| {
            let built = recurrent_build(p)?;
            let direct = hadamard_code(p)?;
            let m = equivalence_invariant_match(&built, &direct)?;
            let same = built.same_set(&direct)?;
            Ok::<_, Error>((m, same))
        })();
        match res {
            Ok((m, same)) => {
                let ok = m.all_match();
                let computed = if ok {
                    "all_match".to_string()
                } else {
                    format!("mismatch:{}", m.mismatches.join(","))
                };
                r.record(9, name.clone(), computed, "all_match", ok);
                r.info(9, format!("{name}.set_equal"), same, "exact equality not claimed");
            }
            Err(e) => r.error(9, name, &e),
        }
    }
}

fn check_classification(r: &mut VerifyReport, max_k: u32) {
    for k in 3..=max_k {
        let name = format!("classify.H.k={k}");
        match classify_hadamard(k) {
            Ok(row) => {
                let ok = row.is_consistent();
                r.record(10, name, row.class_count(), row.expected_count(), ok);
            }
            Err(e) => r.error(10, name, &e),
        }
    }
    for k in 4..=max_k {
        let name = format!("classify.C.k={k}");
        match classify_perfect(k) {
            Ok(row) => {
                let ok = row.is_consistent();
                r.record(10, name, row.class_count(), row.expected_count(), ok);
            }
            Err(e) => r.error(10, name, &e),
        }
    }
}

fn check_duality(r: &mut VerifyReport, max_k: u32) {
    for p in params_up_to(max_k) {
        let name = format!("duality.{}", tag("A", p));
        let res = (|| {
            let a = build_a(p.r1, p.r2)?;
            let c = perfect_code(p)?;
            let h = hadamard_code(p)?;
            let mut orthogonal = true;
            for g in c.generator().rows() {
                orthogonal &= a.syndrome(g)?.iter().all(|&s| s == 0);
            }
            let sizes = h.log2_cardinality() + c.log2_cardinality() == 2 * p.n() as u32;
            Ok::<_, Error>((orthogonal, sizes))
        })();
        match res {
            Ok((o, s)) => r.record(
                11,
                name,
                format!("orthogonal={o},|H||C|=4^n:{s}"),
                "orthogonal=true,|H||C|=4^n:true",
                o && s,
            ),
            Err(e) => r.error(11, name, &e),
        }
    }
}
