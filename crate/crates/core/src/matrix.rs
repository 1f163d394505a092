//! Two-block quaternary matrices `[G1; 2 G2]`, their spans and duals, and the
//! lexicographic matrices `A^{r1,r2}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::z4::{Z4Word, MAX_QUATERNARY_LEN};

/// Largest supported `k = 2 r1 + r2 + 1` (binary length `2^k`).
pub const MAX_K: u32 = 7;

/// Group type `4^{k1} 2^{k2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CodeType {
    pub k1: usize,
    pub k2: usize,
}

impl CodeType {
    /// `log2` of the group order, `2 k1 + k2`.
    pub fn log2_cardinality(&self) -> u32 {
        (2 * self.k1 + self.k2) as u32
    }

    /// Group order, saturating at `u128::MAX`.
    pub fn cardinality(&self) -> u128 {
        1u128
            .checked_shl(self.log2_cardinality())
            .unwrap_or(u128::MAX)
    }
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "4^{}2^{}", self.k1, self.k2)
    }
}

/// A matrix `[G1; 2 G2]`: `block1` rows are arbitrary Z4 words, `block2` rows
/// are stored in doubled form and have every entry in `{0, 2}`.
#[derive(Clone, PartialEq, Eq)]
pub struct QuaternaryMatrix {
    n: usize,
    block1: Vec<Z4Word>,
    block2: Vec<Z4Word>,
}

impl QuaternaryMatrix {
    pub fn new(n: usize, block1: Vec<Z4Word>, block2: Vec<Z4Word>) -> Result<Self> {
        if n == 0 || n > MAX_QUATERNARY_LEN {
            return Err(Error::LengthOutOfRange {
                len: n,
                max: MAX_QUATERNARY_LEN,
            });
        }
        for row in block1.iter().chain(&block2) {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    left: row.len(),
                    right: n,
                });
            }
        }
        if let Some(row) = block2.iter().find(|r| !r.is_order_two()) {
            return Err(Error::Unsupported(format!(
                "block2 row {row} has entries outside {{0,2}}"
            )));
        }
        Ok(Self { n, block1, block2 })
    }

    /// Builds from digit rows; `block2` rows are given as binary digits and doubled.
    pub fn from_digit_rows(n: usize, block1: &[Vec<u8>], block2: &[Vec<u8>]) -> Result<Self> {
        let b1 = block1
            .iter()
            .map(|r| Z4Word::from_digits(r))
            .collect::<Result<Vec<_>>>()?;
        let b2 = block2
            .iter()
            .map(|r| {
                if let Some(&d) = r.iter().find(|&&d| d > 1) {
                    return Err(Error::InvalidDigit {
                        alphabet: "binary",
                        digit: char::from(b'0' + d.min(9)),
                    });
                }
                Z4Word::from_digits(r).map(|w| w.double())
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, b1, b2)
    }

    /// Matrix with no rows.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, Vec::new(), Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn block1(&self) -> &[Z4Word] {
        &self.block1
    }

    /// Rows of `2 G2` (entries in `{0, 2}`).
    pub fn block2(&self) -> &[Z4Word] {
        &self.block2
    }

    /// Rows of `G2` as binary masks.
    pub fn block2_binary(&self) -> Vec<u64> {
        self.block2.iter().map(|r| r.hi()).collect()
    }

    /// All rows, `block1` first, `block2` in doubled form.
    pub fn rows(&self) -> impl Iterator<Item = &Z4Word> + '_ {
        self.block1.iter().chain(self.block2.iter())
    }

    pub fn row_count(&self) -> usize {
        self.block1.len() + self.block2.len()
    }

    /// Declared type `4^{|block1|} 2^{|block2|}` (not reduced).
    pub fn declared_type(&self) -> CodeType {
        CodeType {
            k1: self.block1.len(),
            k2: self.block2.len(),
        }
    }

    /// Entry `(row, col)` with rows indexed as in [`Self::rows`].
    pub fn entry(&self, row: usize, col: usize) -> u8 {
        if row < self.block1.len() {
            self.block1[row].get(col)
        } else {
            self.block2[row - self.block1.len()].get(col)
        }
    }

    /// Syndrome `M w^T` over Z4.
    pub fn syndrome(&self, w: &Z4Word) -> Result<Vec<u8>> {
        if w.len() != self.n {
            return Err(Error::LengthMismatch {
                left: w.len(),
                right: self.n,
            });
        }
        Ok(self.rows().map(|r| r.dot(w)).collect())
    }

    pub fn span(&self) -> Span {
        Span::new(self.n, self.block1.clone(), self.block2.clone())
    }

    /// Text form: `# z4matrix n=<n> k1=<k1> k2=<k2>` then one digit row per line.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "# z4matrix n={} k1={} k2={}\n",
            self.n,
            self.block1.len(),
            self.block2.len()
        );
        for row in self.rows() {
            out.push_str(&row.to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let mut header = None;
        for (lineno, line) in lines.by_ref() {
            if let Some(rest) = line.strip_prefix("# z4matrix") {
                header = Some((lineno, rest.to_owned()));
                break;
            }
            if !line.starts_with('#') {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "missing z4matrix header".into(),
                });
            }
        }
        let (hline, rest) = header.ok_or(Error::Parse {
            line: 0,
            msg: "missing z4matrix header".into(),
        })?;
        let fields = crate::io::parse_fields(hline, &rest)?;
        let n: usize = crate::io::field(hline, &fields, "n")?;
        let k1: usize = crate::io::field(hline, &fields, "k1")?;
        let k2: usize = crate::io::field(hline, &fields, "k2")?;

        let mut block1 = Vec::with_capacity(k1);
        let mut block2 = Vec::with_capacity(k2);
        for (lineno, line) in lines {
            if line.starts_with('#') {
                continue;
            }
            let row: Z4Word = line.parse().map_err(|e: Error| Error::Parse {
                line: lineno,
                msg: e.to_string(),
            })?;
            if row.len() != n {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("row has {} entries, expected {n}", row.len()),
                });
            }
            if block1.len() < k1 {
                block1.push(row);
            } else if block2.len() < k2 {
                if !row.is_order_two() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "block2 row must use digits 0 and 2".into(),
                    });
                }
                block2.push(row);
            } else {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("more than k1+k2={} rows", k1 + k2),
                });
            }
        }
        if block1.len() != k1 || block2.len() != k2 {
            return Err(Error::Parse {
                line: hline,
                msg: format!(
                    "header declares {} rows, found {}",
                    k1 + k2,
                    block1.len() + block2.len()
                ),
            });
        }
        Self::new(n, block1, block2)
    }
}

impl fmt::Debug for QuaternaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuaternaryMatrix")
            .field("n", &self.n)
            .field("block1", &self.block1)
            .field("block2", &self.block2)
            .finish()
    }
}

/// The matrix `A^{r1,r2}`: columns are the words `(1, v, u)` with
/// `v in Z4^{r1}`, `u in {0,2}^{r2}`, in lexicographic order with the row
/// right below the all-ones row most significant.
///
/// `block1` holds the all-ones row and the `r1` rows over Z4, `block2` the
/// `r2` rows over `{0, 2}`.
#[allow(clippy::needless_range_loop)]
pub fn build_a(r1: u32, r2: u32) -> Result<QuaternaryMatrix> {
    let k = 2 * r1 + r2 + 1;
    if k > MAX_K {
        return Err(Error::ParamsOutOfRange {
            r1,
            r2,
            k,
            max_k: MAX_K,
        });
    }
    let (r1, r2) = (r1 as usize, r2 as usize);
    let n = 1usize << (2 * r1 + r2);
    let rows = 1 + r1 + r2;
    let mut digits = vec![vec![0u8; n]; rows];
    for j in 0..n {
        digits[0][j] = 1;
        let mut x = j;
        for row in (1..rows).rev() {
            if row > r1 {
                digits[row][j] = 2 * (x & 1) as u8;
                x >>= 1;
            } else {
                digits[row][j] = (x & 3) as u8;
                x >>= 2;
            }
        }
    }
    let block1 = digits[..=r1]
        .iter()
        .map(|r| Z4Word::from_digits(r))
        .collect::<Result<Vec<_>>>()?;
    let block2 = digits[r1 + 1..]
        .iter()
        .map(|r| Z4Word::from_digits(r))
        .collect::<Result<Vec<_>>>()?;
    QuaternaryMatrix::new(n, block1, block2)
}

/// Reduced generators of the group spanned by some rows, after a column
/// permutation: `[[I, A, B], [0, 2I, 2C]]` with `A`, `C` binary.
#[derive(Clone, Debug)]
pub(crate) struct StandardForm {
    n: usize,
    /// `perm[p]` is the original column sitting at permuted position `p`.
    perm: Vec<usize>,
    k1: usize,
    k2: usize,
    /// Reduced rows in permuted coordinates.
    rows: Vec<Vec<u8>>,
}

impl StandardForm {
    pub(crate) fn code_type(&self) -> CodeType {
        CodeType {
            k1: self.k1,
            k2: self.k2,
        }
    }

    fn unpermute(&self, row: &[u8]) -> Z4Word {
        let mut out = vec![0u8; self.n];
        for (p, &v) in row.iter().enumerate() {
            out[self.perm[p]] = v;
        }
        Z4Word::from_digits(&out).expect("length already validated")
    }

    /// Reduced generators in original coordinates.
    pub(crate) fn generators(&self) -> QuaternaryMatrix {
        let b1 = self.rows[..self.k1]
            .iter()
            .map(|r| self.unpermute(r))
            .collect();
        let b2 = self.rows[self.k1..]
            .iter()
            .map(|r| self.unpermute(r))
            .collect();
        QuaternaryMatrix::new(self.n, b1, b2).expect("reduced rows are well formed")
    }

    /// Generator matrix of the orthogonal group `{c : g c^T = 0 for all g}`.
    pub(crate) fn dual(&self) -> QuaternaryMatrix {
        let (k1, k2, n) = (self.k1, self.k2, self.n);
        let free = n - k1 - k2;
        let a = |i: usize, j: usize| self.rows[i][k1 + j];
        let b = |i: usize, t: usize| self.rows[i][k1 + k2 + t];
        let c = |j: usize, t: usize| self.rows[k1 + j][k1 + k2 + t] / 2;

        let mut block1 = Vec::with_capacity(free);
        for t in 0..free {
            let mut row = vec![0u8; n];
            for (i, slot) in row.iter_mut().enumerate().take(k1) {
                let ac: u32 = (0..k2).map(|j| u32::from(c(j, t) * a(i, j))).sum();
                *slot = ((8 - u32::from(b(i, t)) - ac % 4) % 4) as u8;
            }
            for j in 0..k2 {
                row[k1 + j] = c(j, t);
            }
            row[k1 + k2 + t] = 1;
            block1.push(self.unpermute(&row));
        }
        let mut block2 = Vec::with_capacity(k2);
        for j in 0..k2 {
            let mut row = vec![0u8; n];
            for (i, slot) in row.iter_mut().enumerate().take(k1) {
                *slot = 2 * a(i, j);
            }
            row[k1 + j] = 2;
            block2.push(self.unpermute(&row));
        }
        QuaternaryMatrix::new(n, block1, block2).expect("dual rows are well formed")
    }
}

fn sub_scaled(row: &mut [u8], pivot: &[u8], factor: u8) {
    for (x, &p) in row.iter_mut().zip(pivot) {
        *x = (*x + 4 * 4 - factor * p) % 4;
    }
}

/// Two-phase elimination over Z4: pivot on units first, then on entries
/// equal to 2 among the remaining (all-even) rows.
pub(crate) fn standard_form<'a>(
    n: usize,
    rows: impl IntoIterator<Item = &'a Z4Word>,
) -> StandardForm {
    let mut m: Vec<Vec<u8>> = rows.into_iter().map(|r| r.digits()).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut r = 0usize;

    fn find(m: &[Vec<u8>], r: usize, n: usize, pred: impl Fn(u8) -> bool) -> Option<(usize, usize)> {
        (r..m.len()).find_map(|i| (r..n).find(|&j| pred(m[i][j])).map(|j| (i, j)))
    }

    fn bring_to(m: &mut [Vec<u8>], perm: &mut [usize], r: usize, i: usize, j: usize) {
        m.swap(r, i);
        if j != r {
            perm.swap(r, j);
            for row in m.iter_mut() {
                row.swap(r, j);
            }
        }
    }

    while let Some((i, j)) = find(&m, r, n, |x| x & 1 == 1) {
        bring_to(&mut m, &mut perm, r, i, j);
        if m[r][r] == 3 {
            for x in m[r].iter_mut() {
                *x = (4 - *x) % 4;
            }
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[r] != 0 {
                let f = row[r];
                sub_scaled(row, &pivot, f);
            }
        }
        r += 1;
    }
    let k1 = r;

    while let Some((i, j)) = find(&m, r, n, |x| x == 2) {
        bring_to(&mut m, &mut perm, r, i, j);
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[r] >= 2 {
                sub_scaled(row, &pivot, 1);
            }
        }
        r += 1;
    }
    let k2 = r - k1;
    m.truncate(r);

    StandardForm {
        n,
        perm,
        k1,
        k2,
        rows: m,
    }
}

/// Generator matrix of `{c : A c^T = 0 (mod 4)}`.
///
/// Fails with [`Error::DependentRows`] when the rows of `a` do not reduce to
/// type `4^{|block1|} 2^{|block2|}`.
pub fn null_space(a: &QuaternaryMatrix) -> Result<QuaternaryMatrix> {
    let sf = standard_form(a.n(), a.rows());
    let declared = a.declared_type();
    if sf.code_type() != declared {
        return Err(Error::DependentRows {
            expected_k1: declared.k1,
            expected_k2: declared.k2,
            k1: sf.k1,
            k2: sf.k2,
        });
    }
    Ok(sf.dual())
}

/// Generator matrix of the orthogonal group of `span(a)`, whatever the rows.
pub(crate) fn orthogonal_complement(a: &QuaternaryMatrix) -> QuaternaryMatrix {
    standard_form(a.n(), a.rows()).dual()
}

pub fn is_orthogonal(g: &QuaternaryMatrix, a: &QuaternaryMatrix) -> Result<bool> {
    if g.n() != a.n() {
        return Err(Error::LengthMismatch {
            left: g.n(),
            right: a.n(),
        });
    }
    Ok(a.rows().all(|ar| g.rows().all(|gr| ar.dot(gr) == 0)))
}

/// Type of the group generated by the rows of `g`.
pub fn code_type(g: &QuaternaryMatrix) -> CodeType {
    standard_form(g.n(), g.rows()).code_type()
}

/// Independent generators of `span(g)`, in the reduced form.
pub fn reduce_generators(g: &QuaternaryMatrix) -> QuaternaryMatrix {
    standard_form(g.n(), g.rows()).generators()
}

pub fn span_enumerate(g: &QuaternaryMatrix) -> SpanIter {
    g.span().iter()
}

/// The multiset `{v1 G1 + 2 v2 G2}` indexed in lexicographic order of `(v1, v2)`.
#[derive(Clone, Debug)]
pub struct Span {
    n: usize,
    gens: Vec<Z4Word>,
    radix: Vec<u8>,
}

impl Span {
    pub fn new(n: usize, block1: Vec<Z4Word>, block2: Vec<Z4Word>) -> Self {
        let radix = std::iter::repeat_n(4u8, block1.len())
            .chain(std::iter::repeat_n(2u8, block2.len()))
            .collect();
        let mut gens = block1;
        gens.extend(block2);
        Self { n, gens, radix }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of coefficient vectors, `4^{k1} 2^{k2}`; `None` past `u128`.
    pub fn len(&self) -> Option<u128> {
        let bits: u32 = self.radix.iter().map(|&r| if r == 4 { 2 } else { 1 }).sum();
        if bits >= 128 {
            None
        } else {
            Some(1u128 << bits)
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> SpanIter {
        self.iter_range(0, self.len().unwrap_or(u128::MAX))
    }

    /// Words with coefficient index in `start..end`.
    pub fn iter_range(&self, start: u128, end: u128) -> SpanIter {
        let mut digits = vec![0u8; self.gens.len()];
        let mut x = start;
        let mut current = Z4Word::zero(self.n).expect("valid length");
        for i in (0..self.gens.len()).rev() {
            let r = u128::from(self.radix[i]);
            digits[i] = (x % r) as u8;
            x /= r;
            current = current + self.gens[i].scale(digits[i]);
        }
        SpanIter {
            gens: self.gens.clone(),
            radix: self.radix.clone(),
            digits,
            current,
            remaining: end.saturating_sub(start),
        }
    }
}

/// Odometer over the coefficient vectors; each step adds one generator per
/// digit that moved (a wrapping digit adds its generator once more, which
/// returns it to zero since `4 g = 0` and `2 (2 g) = 0`).
#[derive(Clone, Debug)]
pub struct SpanIter {
    gens: Vec<Z4Word>,
    radix: Vec<u8>,
    digits: Vec<u8>,
    current: Z4Word,
    remaining: u128,
}

impl Iterator for SpanIter {
    type Item = Z4Word;

    #[inline]
    fn next(&mut self) -> Option<Z4Word> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let out = self.current;
        for i in (0..self.gens.len()).rev() {
            self.current = self.current + self.gens[i];
            self.digits[i] += 1;
            if self.digits[i] == self.radix[i] {
                self.digits[i] = 0;
            } else {
                break;
            }
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, usize::try_from(self.remaining).ok())
    }
}
