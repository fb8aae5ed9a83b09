//! Partitions, semistandard Young tableaux and Gelfand-Tsetlin patterns.

use std::fmt;
use std::str::FromStr;

use num::{BigUint, One};
use serde::{Deserialize, Serialize};

use crate::error::{GtError, Result};

/// A weakly decreasing sequence of non-negative integers with trailing zeros removed.
///
/// Rows beyond the last nonzero part read as zero, so a partition can stand in for
/// any of the zero-padded `λ^{(k)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(GtError::Parse(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part in the given 1-based row; zero past the end (and for row 0).
    pub fn part(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        inner.rows() <= self.rows() && (1..=inner.rows()).all(|r| inner.part(r) <= self.part(r))
    }

    /// The parts padded with zeros to length `len`.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        (1..=len).map(|r| self.part(r)).collect()
    }

    /// All partitions of `size`, in reverse lexicographic order.
    pub fn all_of_size(size: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = GtError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| GtError::Parse(format!("bad part {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// `true` iff `outer / inner` is a horizontal strip: `inner ⊆ outer` and no two
/// cells of the skew diagram share a column.
pub fn is_horizontal_strip(inner: &Partition, outer: &Partition) -> bool {
    outer.contains(inner) && (1..=outer.rows()).all(|r| outer.part(r + 1) <= inner.part(r))
}

/// A semistandard Young tableau with entries in `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ssyt {
    rows: Vec<Vec<usize>>,
    n: usize,
}

impl Ssyt {
    pub fn new(rows: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let t = Self { rows, n };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>, n: usize) -> Self {
        debug_assert!(Self::new(rows.clone(), n).is_ok());
        Self { rows, n }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(GtError::InvalidTableau(msg));
        for (r, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return bad(format!("row {} is empty", r + 1));
            }
            if r > 0 && row.len() > self.rows[r - 1].len() {
                return bad("row lengths must weakly decrease".into());
            }
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > self.n {
                    return bad(format!("entry {v} outside 1..={}", self.n));
                }
                if c > 0 && row[c - 1] > v {
                    return bad(format!("row {} does not weakly increase", r + 1));
                }
                if r > 0 && self.rows[r - 1][c] >= v {
                    return bad(format!("column {} does not strictly increase", c + 1));
                }
            }
        }
        Ok(())
    }

    /// Parses the `"1,1;2"` form.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Self::new(Vec::new(), n);
        }
        let rows = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|v| {
                        v.trim()
                            .parse::<usize>()
                            .map_err(|e| GtError::Parse(format!("bad entry {v:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows, n)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Row by 1-based index.
    pub fn row(&self, row: usize) -> &[usize] {
        &self.rows[row - 1]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> Partition {
        Partition {
            parts: self.rows.iter().map(Vec::len).collect(),
        }
    }

    /// The row-reading word.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// The tableau whose row `i` is filled with `i`; the lattice maximum.
    pub fn highest(shape: &Partition, n: usize) -> Result<Self> {
        check_fits(shape, n)?;
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| vec![i + 1; len])
            .collect();
        Ok(Self::from_rows_unchecked(rows, n))
    }

    /// The lattice minimum: a column of height `h` holds `n − h + 1, …, n`.
    pub fn lowest(shape: &Partition, n: usize) -> Result<Self> {
        check_fits(shape, n)?;
        let parts = shape.parts();
        let rows = parts
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                (0..len)
                    .map(|c| {
                        let h = parts.iter().take_while(|&&l| l > c).count();
                        n - h + i + 1
                    })
                    .collect()
            })
            .collect();
        Ok(Self::from_rows_unchecked(rows, n))
    }

    /// 0-based column of the leftmost `value` in the 1-based `row`.
    pub fn leftmost(&self, row: usize, value: usize) -> Option<usize> {
        self.rows.get(row.wrapping_sub(1))?.iter().position(|&v| v == value)
    }

    /// 0-based column of the rightmost `value` in the 1-based `row`.
    pub fn rightmost(&self, row: usize, value: usize) -> Option<usize> {
        self.rows.get(row.wrapping_sub(1))?.iter().rposition(|&v| v == value)
    }

    /// Copy with the entry at (1-based row, 0-based column) replaced; not revalidated.
    pub(crate) fn with_entry(&self, row: usize, col: usize, value: usize) -> Self {
        let mut rows = self.rows.clone();
        rows[row - 1][col] = value;
        Self { rows, n: self.n }
    }

    #[cfg(test)]
    pub(crate) fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }
}

impl fmt::Display for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&rows.join(";"))
    }
}

fn check_fits(shape: &Partition, n: usize) -> Result<()> {
    if shape.rows() > n {
        Err(GtError::NoFillings {
            rows: shape.rows(),
            n,
        })
    } else {
        Ok(())
    }
}

/// All SSYT of the given shape with entries in `1..=n`, in lexicographic order of
/// their row-reading words.
pub fn enumerate_ssyt(shape: &Partition, n: usize) -> Result<Vec<Ssyt>> {
    check_fits(shape, n)?;
    let parts = shape.parts();
    let col_height: Vec<usize> = (0..shape.part(1))
        .map(|c| parts.iter().take_while(|&&len| len > c).count())
        .collect();
    let cells: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();

    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        col_height: &[usize],
        n: usize,
        grid: &mut Vec<Vec<usize>>,
        out: &mut Vec<Ssyt>,
    ) {
        if idx == cells.len() {
            out.push(Ssyt::from_rows_unchecked(grid.clone(), n));
            return;
        }
        let (r, c) = cells[idx];
        let mut lo = r + 1;
        if c > 0 {
            lo = lo.max(grid[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        // room for the strictly increasing cells still below in this column
        let hi = n - (col_height[c] - 1 - r);
        for v in lo..=hi {
            grid[r][c] = v;
            fill(idx + 1, cells, col_height, n, grid, out);
        }
    }

    let mut grid: Vec<Vec<usize>> = parts.iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::new();
    fill(0, &cells, &col_height, n, &mut grid, &mut out);
    Ok(out)
}

/// Number of entries equal to each value `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ContentVector {
    pub mu: Vec<usize>,
}

impl ContentVector {
    /// Count of entries equal to the 1-based value `k`; zero outside `1..=n`.
    pub fn get(&self, k: usize) -> usize {
        if k == 0 {
            return 0;
        }
        self.mu.get(k - 1).copied().unwrap_or(0)
    }
}

pub fn content(t: &Ssyt) -> ContentVector {
    let mut mu = vec![0; t.n()];
    for &v in t.rows().iter().flatten() {
        mu[v - 1] += 1;
    }
    ContentVector { mu }
}

/// `∏_{i<j} (λ_i − λ_j + j − i) / (j − i)`; zero when the shape has more than `n` rows.
pub fn weyl_dimension(shape: &Partition, n: usize) -> BigUint {
    if shape.rows() > n {
        return BigUint::from(0u32);
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=n {
        for j in (i + 1)..=n {
            num *= BigUint::from(shape.part(i) - shape.part(j) + j - i);
            den *= BigUint::from(j - i);
        }
    }
    num / den
}

/// A Gelfand-Tsetlin pattern stored as the chain `λ^{(1)} ⊆ … ⊆ λ^{(n)}`; row
/// `k` has exactly `k` entries `λ_{k1} ≥ … ≥ λ_{kk}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GtPattern {
    rows: Vec<Vec<usize>>,
}

impl GtPattern {
    /// Validates the triangular shape and interlacing.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        for (idx, row) in rows.iter().enumerate() {
            if row.len() != idx + 1 {
                return Err(GtError::NotAPattern(format!(
                    "row {} has {} entries, expected {}",
                    idx + 1,
                    row.len(),
                    idx + 1
                )));
            }
        }
        for k in 2..=rows.len() {
            let (upper, lower) = (&rows[k - 1], &rows[k - 2]);
            for i in 0..k - 1 {
                if !(upper[i] >= lower[i] && lower[i] >= upper[i + 1]) {
                    return Err(GtError::NotAPattern(format!(
                        "interlacing fails between rows {} and {k} at position {}",
                        k - 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// `λ_{ki}` with 1-based `k` and `i`; zero for `k = 0` or `i > k`.
    pub fn entry(&self, k: usize, i: usize) -> usize {
        if k == 0 || i == 0 || i > k {
            return 0;
        }
        self.rows[k - 1][i - 1]
    }

    /// `l_{ki} = λ_{ki} − i + 1`.
    pub fn l(&self, k: usize, i: usize) -> i64 {
        self.entry(k, i) as i64 - i as i64 + 1
    }

    /// `λ^{(k)}` as a partition; `λ^{(0)}` is empty.
    pub fn level(&self, k: usize) -> Partition {
        if k == 0 {
            return Partition::empty();
        }
        Partition::new(self.rows[k - 1].clone()).expect("pattern rows are weakly decreasing")
    }

    pub fn top(&self) -> Partition {
        self.level(self.n())
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }
}

impl fmt::Display for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .rev()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&rows.join(" | "))
    }
}

/// `λ^{(k)}` is the shape occupied by entries `≤ k`.
pub fn ssyt_to_gt(t: &Ssyt) -> GtPattern {
    let n = t.n();
    let rows = (1..=n)
        .map(|k| {
            (1..=k)
                .map(|i| {
                    t.rows()
                        .get(i - 1)
                        .map_or(0, |row| row.iter().take_while(|&&v| v <= k).count())
                })
                .collect()
        })
        .collect();
    GtPattern { rows }
}

/// Inverse of [`ssyt_to_gt`]: fills `λ^{(k)} / λ^{(k−1)}` with `k`.
pub fn gt_to_ssyt(p: &GtPattern) -> Result<Ssyt> {
    let p = GtPattern::new(p.rows.clone())?;
    let n = p.n();
    let top = p.top();
    let rows = (1..=top.rows())
        .map(|i| {
            let mut row = Vec::with_capacity(top.part(i));
            for k in i..=n {
                let added = p.entry(k, i) - p.entry(k - 1, i);
                row.extend(std::iter::repeat_n(k, added));
            }
            row
        })
        .collect();
    Ssyt::new(rows, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Every filling of the shape with values in `1..=n`, filtered for validity.
    fn brute_force(shape: &Partition, n: usize) -> Vec<Ssyt> {
        let cells = shape.size();
        let mut out = Vec::new();
        let total = n.pow(cells as u32);
        for code in 0..total {
            let mut c = code;
            let mut word = Vec::with_capacity(cells);
            for _ in 0..cells {
                word.push(c % n + 1);
                c /= n;
            }
            word.reverse();
            let mut it = word.into_iter();
            let rows: Vec<Vec<usize>> = shape
                .parts()
                .iter()
                .map(|&len| it.by_ref().take(len).collect())
                .collect();
            if let Ok(t) = Ssyt::new(rows, n) {
                out.push(t);
            }
        }
        out
    }

    #[test]
    fn partition_normalizes_and_parses() {
        let p = Partition::new(vec![2, 1, 0, 0]).unwrap();
        assert_eq!(p.parts(), &[2, 1]);
        assert_eq!(p.part(5), 0);
        assert_eq!(part("2,1,0"), p);
        assert_eq!(p.to_string(), "2,1");
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(part("").is_empty());
        assert_eq!(Partition::all_of_size(4).len(), 5);
        assert_eq!(Partition::all_of_size(6).len(), 11);
        assert_eq!(Partition::all_of_size(0), vec![Partition::empty()]);
    }

    #[test]
    fn two_column_cells_in_three_values() {
        let ts = enumerate_ssyt(&part("1,1"), 3).unwrap();
        let strs: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
        assert_eq!(strs, ["1;2", "1;3", "2;3"]);
        assert_eq!(ts, brute_force(&part("1,1"), 3));
    }

    #[test]
    fn single_cell() {
        let ts = enumerate_ssyt(&part("1"), 2).unwrap();
        let strs: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
        assert_eq!(strs, ["1", "2"]);
    }

    #[test]
    fn adjoint_shape_has_eight_fillings() {
        let ts = enumerate_ssyt(&part("2,1"), 3).unwrap();
        assert_eq!(ts.len(), 8);
        assert_eq!(ts, brute_force(&part("2,1"), 3));
        assert_eq!(weyl_dimension(&part("2,1"), 3), BigUint::from(8u32));
    }

    #[test]
    fn too_many_rows_is_an_error_not_empty() {
        let err = enumerate_ssyt(&part("1,1,1"), 2).unwrap_err();
        assert!(matches!(err, GtError::NoFillings { rows: 3, n: 2 }));
        assert!(err.to_string().contains("no fillings exist"));
    }

    #[test]
    fn empty_shape_has_one_filling() {
        let ts = enumerate_ssyt(&Partition::empty(), 3).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].to_string(), "");
        assert_eq!(weyl_dimension(&Partition::empty(), 3), BigUint::from(1u32));
    }

    #[test]
    fn enumeration_matches_brute_force_and_weyl() {
        for size in 0..=4 {
            for shape in Partition::all_of_size(size) {
                for n in shape.rows().max(1)..=4 {
                    let ts = enumerate_ssyt(&shape, n).unwrap();
                    assert_eq!(ts, brute_force(&shape, n), "{shape} n={n}");
                    assert_eq!(weyl_dimension(&shape, n), BigUint::from(ts.len()));
                }
            }
        }
    }

    #[test]
    fn enumeration_order_is_lexicographic_without_duplicates() {
        let ts = enumerate_ssyt(&part("3,2,1"), 4).unwrap();
        for w in ts.windows(2) {
            assert!(w[0].reading_word() < w[1].reading_word());
        }
    }

    #[test]
    fn weyl_examples() {
        assert_eq!(weyl_dimension(&part("1"), 2), BigUint::from(2u32));
        assert_eq!(weyl_dimension(&part("2"), 2), BigUint::from(3u32));
        assert_eq!(weyl_dimension(&part("1,1,1"), 2), BigUint::from(0u32));
    }

    #[test]
    fn pattern_of_single_cells() {
        let one = Ssyt::parse("1", 2).unwrap();
        let p = ssyt_to_gt(&one);
        assert_eq!((p.entry(2, 1), p.entry(2, 2), p.entry(1, 1)), (1, 0, 1));
        let two = Ssyt::parse("2", 2).unwrap();
        let p = ssyt_to_gt(&two);
        assert_eq!((p.entry(2, 1), p.entry(2, 2), p.entry(1, 1)), (1, 0, 0));
        assert_eq!(gt_to_ssyt(&p).unwrap(), two);
        assert_eq!(p.l(2, 2), -1);
    }

    #[test]
    fn gt_round_trip_and_strips() {
        for t in enumerate_ssyt(&part("2,1"), 3).unwrap() {
            let p = ssyt_to_gt(&t);
            assert_eq!(gt_to_ssyt(&p).unwrap(), t);
            assert_eq!(p.top(), part("2,1"));
            for k in 1..=3 {
                assert!(is_horizontal_strip(&p.level(k - 1), &p.level(k)));
            }
        }
    }

    #[test]
    fn interlacing_violation_rejected() {
        let err = GtPattern::new(vec![vec![2], vec![1, 0]]).unwrap_err();
        assert!(matches!(err, GtError::NotAPattern(_)));
        assert!(GtPattern::new(vec![vec![0], vec![1, 1]]).is_err());
        assert!(GtPattern::new(vec![vec![1], vec![1]]).is_err());
    }

    #[test]
    fn horizontal_strip_examples() {
        assert!(is_horizontal_strip(&part("1"), &part("2,1")));
        assert!(!is_horizontal_strip(&part("1"), &part("2,2")));
        assert!(is_horizontal_strip(&part("3,1"), &part("3,1")));
        assert!(!is_horizontal_strip(&part("2"), &part("1,1")));
        assert!(is_horizontal_strip(&Partition::empty(), &part("3")));
    }

    #[test]
    fn content_examples() {
        let t = Ssyt::parse("1,1;2", 3).unwrap();
        assert_eq!(content(&t).mu, vec![2, 1, 0]);
        let hi = Ssyt::highest(&part("3,2,2"), 4).unwrap();
        assert_eq!(content(&hi).mu, vec![3, 2, 2, 0]);
        let contents: Vec<_> = enumerate_ssyt(&part("1"), 2)
            .unwrap()
            .iter()
            .map(|t| content(t).mu)
            .collect();
        assert_eq!(contents, vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn tableau_text_form() {
        let t = Ssyt::parse("1,1;2", 3).unwrap();
        assert_eq!(t.to_string(), "1,1;2");
        assert!(Ssyt::parse("1,1;1", 3).is_err());
        assert!(Ssyt::parse("2,1", 3).is_err());
        assert!(Ssyt::parse("1,4", 3).is_err());
        assert!(Ssyt::parse("1;2,2", 3).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn shape_and_n() -> impl Strategy<Value = (Partition, usize)> {
            (0usize..=6)
                .prop_flat_map(|size| {
                    let shapes = Partition::all_of_size(size);
                    (proptest::sample::select(shapes), 1usize..=5)
                })
                .prop_filter("fits", |(s, n)| s.rows() <= *n)
        }

        proptest! {
            #[test]
            fn count_matches_weyl((shape, n) in shape_and_n()) {
                let ts = enumerate_ssyt(&shape, n).unwrap();
                prop_assert_eq!(BigUint::from(ts.len()), weyl_dimension(&shape, n));
                for t in &ts {
                    prop_assert!(t.is_valid());
                    prop_assert_eq!(t.shape(), shape.clone());
                    let p = ssyt_to_gt(t);
                    for k in 1..=n {
                        prop_assert!(is_horizontal_strip(&p.level(k - 1), &p.level(k)));
                    }
                    prop_assert_eq!(&gt_to_ssyt(&p).unwrap(), t);
                }
            }
        }
    }
}
