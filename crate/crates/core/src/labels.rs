//! Rim corner data, the combinatorial edge labels `(c, d)`, their products, and
//! the classical Gelfand-Tsetlin coefficients used as an independent oracle.

use num::{Signed, Zero};

use crate::error::{GtError, Result};
use crate::lattice::GtLattice;
use crate::rational::{frac, int, one, Rational};
use crate::tableaux::{ssyt_to_gt, GtPattern};

/// Corner data of the outer rim of `λ^{(k)}` together with the strip lengths of
/// `λ^{(k+1)} / λ^{(k)}` and `λ^{(k)} / λ^{(k−1)}` read at those corners.
///
/// There are `p` inner corners and `p − 1` outer corners. Rim cells are numbered
/// from the northeast, so `a[0] = 1` and `a[i] < a_prime[i] < a[i + 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RimData {
    pub k: usize,
    pub p: usize,
    /// 1-based rows of the inner corners; `r[0] = 1`.
    pub r: Vec<usize>,
    pub a: Vec<i64>,
    pub a_prime: Vec<i64>,
    /// `b[i]`: cells of `λ^{(k+1)} / λ^{(k)}` in row `r[i]`.
    pub b: Vec<i64>,
    /// `b_prime[i]`: cells of `λ^{(k)} / λ^{(k−1)}` in row `r[i + 1] − 1`.
    pub b_prime: Vec<i64>,
}

impl RimData {
    /// Inner-corner index whose row is `row`.
    pub fn inner_index(&self, row: usize) -> Option<usize> {
        self.r.iter().position(|&r| r == row)
    }

    /// Outer-corner index `i` with `r[i + 1] − 1 = row`.
    pub fn outer_index(&self, row: usize) -> Option<usize> {
        self.r.iter().skip(1).position(|&r| r - 1 == row)
    }

    /// `true` when the last inner corner sits in row `k + 1`, i.e. `λ^{(k)}` has
    /// `k` nonzero rows.
    pub fn last_corner_below_pattern(&self) -> bool {
        self.r.last() == Some(&(self.k + 1))
    }
}

/// Corner data from the closed forms `a_i = λ_1 − λ_{r_i} + r_i` and
/// `a'_i = λ_1 − λ_{r_{i+1}−1} + r_{i+1}`. Extends to `λ^{(k)} = ∅`, where the rim
/// walk has no cells to number.
pub fn rim_data(pattern: &GtPattern, k: usize) -> Result<RimData> {
    let n = pattern.n();
    if k == 0 || k >= n {
        return Err(GtError::InvalidColor {
            color: k,
            max: n.saturating_sub(1),
        });
    }
    let lam = pattern.level(k);
    let outer = pattern.level(k + 1);
    let below = pattern.level(k - 1);
    let part = |row: usize| lam.part(row) as i64;

    let r: Vec<usize> = (1..=lam.rows() + 1)
        .filter(|&row| row == 1 || lam.part(row - 1) > lam.part(row))
        .collect();
    let p = r.len();
    let a = r.iter().map(|&ri| part(1) - part(ri) + ri as i64).collect();
    let a_prime = r[1..]
        .iter()
        .map(|&next| part(1) - part(next - 1) + next as i64)
        .collect();
    let b = r
        .iter()
        .map(|&ri| outer.part(ri) as i64 - lam.part(ri) as i64)
        .collect();
    let b_prime = r[1..]
        .iter()
        .map(|&next| lam.part(next - 1) as i64 - below.part(next - 1) as i64)
        .collect();
    Ok(RimData {
        k,
        p,
        r,
        a,
        a_prime,
        b,
        b_prime,
    })
}

/// `c = b_i ∏_{j<i} (1 + b_j/(a_i − a_j)) ∏_{j>i} (1 − b_j/(a_j − a_i))` for the
/// inner corner `i` (0-based). Zero exactly when `b_i = 0`.
pub fn coeff_c(rim: &RimData, i: usize) -> Rational {
    let (a, b) = (&rim.a, &rim.b);
    let mut c = int(b[i]);
    for j in 0..rim.p {
        if j < i {
            c *= one() + frac(b[j], a[i] - a[j]);
        } else if j > i {
            c *= one() - frac(b[j], a[j] - a[i]);
        }
    }
    c
}

/// `d = b'_i ∏_{j<i} (1 − b'_j/(a'_i − a'_j)) ∏_{j>i} (1 + b'_j/(a'_j − a'_i))` for
/// the outer corner `i` (0-based).
pub fn coeff_d(rim: &RimData, i: usize) -> Rational {
    let (a, b) = (&rim.a_prime, &rim.b_prime);
    let mut d = int(b[i]);
    for j in 0..rim.p - 1 {
        if j < i {
            d *= one() - frac(b[j], a[i] - a[j]);
        } else if j > i {
            d *= one() + frac(b[j], a[j] - a[i]);
        }
    }
    d
}

/// Closed product for the upward edge that changes the `k + 1` in row `r_i`,
/// evaluated at the lower endpoint's rim data.
pub fn edge_product(rim: &RimData, i: usize) -> Rational {
    let mut pi = int(rim.b[i]);
    for j in 0..rim.p {
        if j != i {
            pi *= one() - frac(rim.b[j], rim.a[j] - rim.a[i]);
        }
    }
    for j in 0..rim.p - 1 {
        pi *= one() + frac(rim.b_prime[j], rim.a_prime[j] - rim.a[i]);
    }
    pi
}

/// Closed product for the downward edge that changes the `k` in row
/// `r_{i+1} − 1`, evaluated at the upper endpoint's rim data.
pub fn edge_product_down(rim: &RimData, i: usize) -> Rational {
    let mut pi = int(rim.b_prime[i]);
    for j in 0..rim.p - 1 {
        if j != i {
            pi *= one() + frac(rim.b_prime[j], rim.a_prime[j] - rim.a_prime[i]);
        }
    }
    for j in 0..rim.p {
        pi *= one() - frac(rim.b[j], rim.a[j] - rim.a_prime[i]);
    }
    pi
}

/// Classical coefficient of `ξ_{Λ+δ_{ki}}` in `E_{k,k+1} ξ_Λ`, leading minus sign
/// included. `i` is a 1-based row in `1..=k`.
pub fn classical_c(pattern: &GtPattern, k: usize, i: usize) -> Rational {
    let lki = pattern.l(k, i);
    let mut num = int(-1);
    for j in 1..=k + 1 {
        num *= int(lki - pattern.l(k + 1, j));
    }
    num / classical_denominator(pattern, k, i)
}

/// Classical coefficient of `ξ_{Λ−δ_{ki}}` in `E_{k+1,k} ξ_Λ`.
pub fn classical_d(pattern: &GtPattern, k: usize, i: usize) -> Rational {
    let lki = pattern.l(k, i);
    let mut num = one();
    for j in 1..k {
        num *= int(lki - pattern.l(k - 1, j));
    }
    num / classical_denominator(pattern, k, i)
}

// ∏_{j≠i} (l_{ki} − l_{kj}); only the j = i factor vanishes
fn classical_denominator(pattern: &GtPattern, k: usize, i: usize) -> Rational {
    let lki = pattern.l(k, i);
    (1..=k)
        .filter(|&j| j != i)
        .map(|j| int(lki - pattern.l(k, j)))
        .fold(one(), |acc, f| acc * f)
}

/// Eigenvalue of `E_{kk}` on `ξ_Λ`: `Σ_i λ_{ki} − Σ_i λ_{k−1,i}`.
pub fn classical_diag(pattern: &GtPattern, k: usize) -> i64 {
    pattern.level(k).size() as i64 - pattern.level(k - 1).size() as i64
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabel {
    /// Coefficient of `v_to` in `X_k v_from`.
    pub c: Rational,
    /// Coefficient of `v_from` in `Y_k v_to`.
    pub d: Rational,
    pub pi: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelSide {
    C,
    D,
}

/// Labels indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeling {
    pub labels: Vec<EdgeLabel>,
}

impl EdgeLabeling {
    pub fn get(&self, edge: usize) -> &EdgeLabel {
        &self.labels[edge]
    }

    pub fn c(&self, edge: usize) -> &Rational {
        &self.labels[edge].c
    }

    pub fn d(&self, edge: usize) -> &Rational {
        &self.labels[edge].d
    }

    pub fn pi(&self, edge: usize) -> &Rational {
        &self.labels[edge].pi
    }

    /// Copy with one label shifted by `delta`; the product is recomputed.
    pub fn perturbed(&self, edge: usize, side: LabelSide, delta: &Rational) -> Self {
        let mut out = self.clone();
        let l = &mut out.labels[edge];
        match side {
            LabelSide::C => l.c += delta,
            LabelSide::D => l.d += delta,
        }
        l.pi = &l.c * &l.d;
        out
    }
}

/// Patterns of every vertex, by vertex id.
pub(crate) fn vertex_patterns(lattice: &GtLattice) -> Vec<GtPattern> {
    lattice.vertices().iter().map(ssyt_to_gt).collect()
}

/// Labels every edge: `c` from the lower endpoint, `d` from the upper one.
pub fn label_all(lattice: &GtLattice) -> Result<EdgeLabeling> {
    let patterns = vertex_patterns(lattice);
    let mut labels = Vec::with_capacity(lattice.edges().len());
    for (id, e) in lattice.edges().iter().enumerate() {
        let lower = rim_data(&patterns[e.from], e.color)?;
        let upper = rim_data(&patterns[e.to], e.color)?;
        let c = lower
            .inner_index(e.row)
            .map(|i| coeff_c(&lower, i))
            .unwrap_or_else(Rational::zero);
        let d = upper
            .outer_index(e.row)
            .map(|i| coeff_d(&upper, i))
            .unwrap_or_else(Rational::zero);
        if !c.is_positive() || !d.is_positive() {
            return Err(GtError::ZeroLabel { edge: id });
        }
        let pi = &c * &d;
        labels.push(EdgeLabel { c, d, pi });
    }
    Ok(EdgeLabeling { labels })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeComparison {
    pub edge: usize,
    pub combinatorial: Rational,
    pub classical: Rational,
    pub equal: bool,
    /// The last inner corner of `λ^{(k)}` lies in row `k + 1` at either endpoint,
    /// where individual labels differ from the classical coefficients.
    pub exceptional: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductComparison {
    pub entries: Vec<EdgeComparison>,
}

impl ProductComparison {
    pub fn all_equal(&self) -> bool {
        self.entries.iter().all(|e| e.equal)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &EdgeComparison> {
        self.entries.iter().filter(|e| !e.equal)
    }

    pub fn exceptional_count(&self) -> usize {
        self.entries.iter().filter(|e| e.exceptional).count()
    }
}

/// Compares each edge product with `classical_c · classical_d` across its endpoints.
pub fn compare_products(lattice: &GtLattice, labeling: &EdgeLabeling) -> Result<ProductComparison> {
    let patterns = vertex_patterns(lattice);
    let mut entries = Vec::with_capacity(lattice.edges().len());
    for (id, e) in lattice.edges().iter().enumerate() {
        let (lower, upper) = (&patterns[e.from], &patterns[e.to]);
        let classical = classical_c(lower, e.color, e.row) * classical_d(upper, e.color, e.row);
        let combinatorial = labeling.pi(id).clone();
        let exceptional = rim_data(lower, e.color)?.last_corner_below_pattern()
            || rim_data(upper, e.color)?.last_corner_below_pattern();
        entries.push(EdgeComparison {
            edge: id,
            equal: combinatorial == classical,
            combinatorial,
            classical,
            exceptional,
        });
    }
    Ok(ProductComparison { entries })
}
