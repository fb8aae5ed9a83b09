//! Representation matrices of the Chevalley generators over exact rationals.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};

use crate::labels::EdgeLabeling;
use crate::lattice::GtLattice;
use crate::rational::{int, Rational};
use crate::tableaux::content;
use crate::verify::{ConditionReport, Violation};

/// Square matrix with only its nonzero entries stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    dim: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn diagonal<I: IntoIterator<Item = Rational>>(values: I) -> Self {
        let mut m = Self::zeros(0);
        for (i, v) in values.into_iter().enumerate() {
            m.dim = i + 1;
            m.set(i, i, v);
        }
        m
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::diagonal((0..dim).map(|_| Rational::one()));
        m.dim = dim;
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Entries sorted by `(row, col)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.entries.get(&(row, col)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        assert!(row < self.dim && col < self.dim, "index out of range");
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    fn accumulate(&mut self, row: usize, col: usize, value: Rational) {
        use std::collections::btree_map::Entry;
        match self.entries.entry((row, col)) {
            Entry::Vacant(slot) => {
                if !value.is_zero() {
                    slot.insert(value);
                }
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += value;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn trace(&self) -> Rational {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.accumulate(r, c, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zeros(self.dim);
        if !s.is_zero() {
            for (&k, v) in &self.entries {
                out.entries.insert(k, v * s);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = Self::zeros(self.dim);
        for (&(i, k), a) in &self.entries {
            for (&(_, j), b) in other.entries.range((k, 0)..(k + 1, 0)) {
                out.accumulate(i, j, a * b);
            }
        }
        out
    }

    /// `[A, B] = AB − BA`.
    pub fn bracket(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (&(r, c), a) in &self.entries {
            if !v[c].is_zero() {
                out[r] += a * &v[c];
            }
        }
        out
    }
}

impl fmt::Display for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Cartan matrix of type `A_{n−1}`, 0-indexed.
pub fn cartan_matrix(n: usize) -> Vec<Vec<i64>> {
    let r = n.saturating_sub(1);
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

/// `X_k`: entry `(t, s) = c_{t,s}` for each color-`k` edge `s → t`.
pub fn matrix_x(lattice: &GtLattice, labeling: &EdgeLabeling, k: usize) -> SparseMatrix {
    let mut m = SparseMatrix::zeros(lattice.len());
    for (id, e) in lattice.edges().iter().enumerate().filter(|(_, e)| e.color == k) {
        m.set(e.to, e.from, labeling.c(id).clone());
    }
    m
}

/// `Y_k`: entry `(s, t) = d_{s,t}` for each color-`k` edge `s → t`.
pub fn matrix_y(lattice: &GtLattice, labeling: &EdgeLabeling, k: usize) -> SparseMatrix {
    let mut m = SparseMatrix::zeros(lattice.len());
    for (id, e) in lattice.edges().iter().enumerate().filter(|(_, e)| e.color == k) {
        m.set(e.from, e.to, labeling.d(id).clone());
    }
    m
}

/// `H_k = diag(m_k)`.
pub fn matrix_h(lattice: &GtLattice, k: usize) -> SparseMatrix {
    let mut m = SparseMatrix::diagonal((0..lattice.len()).map(|v| int(lattice.m_value(v, k))));
    m.dim = lattice.len();
    m
}

/// `E_{kk}` on the basis: `diag(μ_k)`, for `k` in `1..=n`.
pub fn matrix_ekk_diag(lattice: &GtLattice, k: usize) -> SparseMatrix {
    let mut m = SparseMatrix::diagonal(
        lattice
            .vertices()
            .iter()
            .map(|t| int(content(t).get(k) as i64)),
    );
    m.dim = lattice.len();
    m
}

fn compare(violations: &mut Vec<Violation>, relation: &str, actual: &SparseMatrix, expected: &SparseMatrix) {
    let diff = actual.sub(expected);
    // a handful of coordinates is enough to locate the failure
    for (r, c, _) in diff.entries().take(4) {
        violations.push(Violation {
            location: format!("{relation} at ({r}, {c})"),
            expected: expected.get(r, c).to_string(),
            actual: actual.get(r, c).to_string(),
        });
    }
}

/// The defining relations of `sl_n` in the Chevalley basis, checked exactly.
pub fn check_sl_relations(lattice: &GtLattice, labeling: &EdgeLabeling) -> ConditionReport {
    let r = lattice.colors();
    let a = cartan_matrix(lattice.n());
    let xs: Vec<SparseMatrix> = (1..=r).map(|k| matrix_x(lattice, labeling, k)).collect();
    let ys: Vec<SparseMatrix> = (1..=r).map(|k| matrix_y(lattice, labeling, k)).collect();
    let hs: Vec<SparseMatrix> = (1..=r).map(|k| matrix_h(lattice, k)).collect();
    let zero = SparseMatrix::zeros(lattice.len());
    let mut violations = Vec::new();
    let mut checked = 0;
    for i in 0..r {
        for j in 0..r {
            let (ci, cj) = (i + 1, j + 1);
            checked += 4;
            compare(&mut violations, &format!("[H_{ci}, H_{cj}]"), &hs[i].bracket(&hs[j]), &zero);
            let expected = if i == j { hs[i].clone() } else { zero.clone() };
            compare(&mut violations, &format!("[X_{ci}, Y_{cj}]"), &xs[i].bracket(&ys[j]), &expected);
            let aji = int(a[j][i]);
            compare(&mut violations, &format!("[H_{ci}, X_{cj}]"), &hs[i].bracket(&xs[j]), &xs[j].scale(&aji));
            compare(&mut violations, &format!("[H_{ci}, Y_{cj}]"), &hs[i].bracket(&ys[j]), &ys[j].scale(&-aji));
            if i != j {
                checked += 2;
                // (ad X_i)^{1 − a_ij}(X_j) with explicit nested brackets
                let (serre_x, serre_y) = if a[i][j] == -1 {
                    (
                        xs[i].bracket(&xs[i].bracket(&xs[j])),
                        ys[i].bracket(&ys[i].bracket(&ys[j])),
                    )
                } else {
                    (xs[i].bracket(&xs[j]), ys[i].bracket(&ys[j]))
                };
                compare(&mut violations, &format!("Serre X_{ci}, X_{cj}"), &serre_x, &zero);
                compare(&mut violations, &format!("Serre Y_{ci}, Y_{cj}"), &serre_y, &zero);
            }
        }
    }
    ConditionReport {
        condition: "sl-relations".into(),
        pass: violations.is_empty(),
        violations,
        checked,
    }
}

/// Incremental row echelon form over the integers. Incoming rational vectors are
/// cleared of denominators and reduced by cross-multiplication, so no fractions
/// appear during elimination.
#[derive(Debug, Clone, Default)]
pub struct FractionFreeEchelon {
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl FractionFreeEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let lcm = v
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let mut w: Vec<BigInt> = v
            .iter()
            .map(|x| x.numer() * (&lcm / x.denom()))
            .collect();
        for (pivot, row) in &self.rows {
            if w[*pivot].is_zero() {
                continue;
            }
            let (p, q) = (&row[*pivot], w[*pivot].clone());
            for (wi, ri) in w.iter_mut().zip(row) {
                *wi = &*wi * p - &q * ri;
            }
            normalize(&mut w);
        }
        match w.iter().position(|x| !x.is_zero()) {
            Some(pivot) => {
                self.rows.push((pivot, w));
                true
            }
            None => false,
        }
    }
}

fn normalize(w: &mut [BigInt]) {
    let g = w.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in w.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Rank of a set of rational row vectors by fraction-free elimination.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut ech = FractionFreeEchelon::new();
    rows.iter().filter(|r| ech.insert(r)).count()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighestWeightReport {
    /// `X_k v_max = 0` for every `k`.
    pub annihilated: bool,
    /// Eigenvalues of `H_k` on `v_max`.
    pub h_eigenvalues: Vec<i64>,
    /// `λ_k − λ_{k+1}`.
    pub expected_weight: Vec<i64>,
    /// Dimension of the span of all `Y`-words applied to `v_max`.
    pub generated_dim: usize,
    pub dim: usize,
}

impl HighestWeightReport {
    pub fn pass(&self) -> bool {
        self.annihilated && self.h_eigenvalues == self.expected_weight && self.generated_dim == self.dim
    }
}

/// Checks that the lattice maximum is a highest weight vector of weight `λ`
/// and generates the whole space under the lowering operators.
pub fn highest_weight_check(lattice: &GtLattice, labeling: &EdgeLabeling) -> HighestWeightReport {
    let dim = lattice.len();
    let r = lattice.colors();
    let top = lattice.maximum();
    let mut v = vec![Rational::zero(); dim];
    v[top] = Rational::one();

    let xs: Vec<SparseMatrix> = (1..=r).map(|k| matrix_x(lattice, labeling, k)).collect();
    let ys: Vec<SparseMatrix> = (1..=r).map(|k| matrix_y(lattice, labeling, k)).collect();
    let annihilated = xs.iter().all(|x| x.apply(&v).iter().all(Zero::is_zero));
    let h_eigenvalues: Vec<i64> = (1..=r).map(|k| lattice.m_value(top, k)).collect();
    let shape = lattice.shape();
    let expected_weight = (1..=r)
        .map(|k| shape.part(k) as i64 - shape.part(k + 1) as i64)
        .collect();

    let mut echelon = FractionFreeEchelon::new();
    echelon.insert(&v);
    let mut queue = VecDeque::from([v]);
    while let Some(w) = queue.pop_front() {
        for y in &ys {
            let next = y.apply(&w);
            if next.iter().any(|x| !x.is_zero()) && echelon.insert(&next) {
                queue.push_back(next);
            }
        }
    }
    HighestWeightReport {
        annihilated,
        h_eigenvalues,
        expected_weight,
        generated_dim: echelon.rank(),
        dim,
    }
}

/// Vector sign helper for tests and callers inspecting labels.
pub fn all_nonnegative(m: &SparseMatrix) -> bool {
    m.entries().all(|(_, _, v)| !v.is_negative())
}
