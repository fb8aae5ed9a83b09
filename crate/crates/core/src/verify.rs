//! Structure, crossing and diamond conditions on a labeled lattice, and the
//! rational function identity behind the crossing condition.

use std::collections::BTreeSet;

use num::Zero;
use rand::Rng;
use serde::Serialize;

use crate::error::{GtError, Result};
use crate::labels::EdgeLabeling;
use crate::lattice::{GtLattice, WeightVector};
use crate::rational::{frac, one, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub location: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub condition: String,
    pub pass: bool,
    pub violations: Vec<Violation>,
    /// Number of individual relations evaluated.
    #[serde(skip)]
    pub checked: usize,
}

impl ConditionReport {
    fn new(condition: &str, checked: usize, violations: Vec<Violation>) -> Self {
        Self {
            condition: condition.to_owned(),
            pass: violations.is_empty(),
            violations,
            checked,
        }
    }
}

/// Every edge `s → t` of color `k` satisfies `wt(s) + α_k = wt(t)`, both in the
/// fundamental-weight coordinates `m_i` read off the component ranks and in the
/// `ε` coordinates given by the tableau content.
pub fn check_structure(lattice: &GtLattice) -> ConditionReport {
    let mut violations = Vec::new();
    let colors = lattice.colors();
    for (id, e) in lattice.edges().iter().enumerate() {
        let ms = lattice.m_vector(e.from);
        let mt = lattice.m_vector(e.to);
        // α_k in fundamental weights is column k of the Cartan matrix
        let expected: Vec<i64> = (1..=colors)
            .map(|i| {
                ms[i - 1]
                    + match i.abs_diff(e.color) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    }
            })
            .collect();
        if expected != mt {
            violations.push(Violation {
                location: format!("edge {id} ({} -> {}, color {})", e.from, e.to, e.color),
                expected: format!("m = {expected:?}"),
                actual: format!("m = {mt:?}"),
            });
        }
        let wt = lattice
            .weight(e.from)
            .add(&WeightVector::simple_root(lattice.n(), e.color));
        let actual = lattice.weight(e.to);
        if wt != actual {
            violations.push(Violation {
                location: format!("edge {id} ({} -> {}, color {})", e.from, e.to, e.color),
                expected: format!("mu = {:?}", wt.epsilon),
                actual: format!("mu = {:?}", actual.epsilon),
            });
        }
    }
    ConditionReport::new("structure", lattice.edges().len(), violations)
}

/// `Σ_{r → s} π − Σ_{s → t} π = m_k(s)` for every vertex `s` and color `k`.
pub fn check_crossing(lattice: &GtLattice, labeling: &EdgeLabeling) -> ConditionReport {
    let mut violations = Vec::new();
    let mut checked = 0;
    for v in 0..lattice.len() {
        for k in 1..=lattice.colors() {
            checked += 1;
            let incoming: Rational = lattice
                .in_edges_colored(v, k)
                .map(|e| labeling.pi(e).clone())
                .sum();
            let outgoing: Rational = lattice
                .out_edges_colored(v, k)
                .map(|e| labeling.pi(e).clone())
                .sum();
            let lhs = incoming - outgoing;
            let m = Rational::from_integer(lattice.m_value(v, k).into());
            if lhs != m {
                violations.push(Violation {
                    location: format!("vertex {v} ({}), color {k}", lattice.vertex(v)),
                    expected: m.to_string(),
                    actual: lhs.to_string(),
                });
            }
        }
    }
    ConditionReport::new("crossing", checked, violations)
}

/// How diamond instances `(s, t, i, j)` are enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DiamondMode {
    /// Only pairs sharing an upper or a lower cover.
    #[default]
    SharedCovers,
    /// Every same-rank pair and color pair; also confirms the fast enumeration
    /// misses nothing with a nonempty side.
    Exhaustive,
}

/// One relation instance: `s`, `t`, and colors `(i, j)`.
type DiamondKey = (usize, usize, usize, usize);

// Σ_{u: s -j-> u, t -i-> u} c_{u,s} d_{t,u} together with the number of terms
fn diamond_lhs(l: &GtLattice, lab: &EdgeLabeling, (s, t, i, j): DiamondKey) -> (Rational, usize) {
    let mut sum = Rational::zero();
    let mut terms = 0;
    for e1 in l.out_edges_colored(s, j) {
        let u = l.edge(e1).to;
        if let Some(e2) = l.edge_between(t, u).filter(|&e| l.edge(e).color == i) {
            sum += lab.c(e1) * lab.d(e2);
            terms += 1;
        }
    }
    (sum, terms)
}

// Σ_{r: r -i-> s, r -j-> t} d_{r,s} c_{t,r}
fn diamond_rhs(l: &GtLattice, lab: &EdgeLabeling, (s, t, i, j): DiamondKey) -> (Rational, usize) {
    let mut sum = Rational::zero();
    let mut terms = 0;
    for e1 in l.in_edges_colored(s, i) {
        let r = l.edge(e1).from;
        if let Some(e2) = l.edge_between(r, t).filter(|&e| l.edge(e).color == j) {
            sum += lab.d(e1) * lab.c(e2);
            terms += 1;
        }
    }
    (sum, terms)
}

fn shared_cover_candidates(l: &GtLattice) -> BTreeSet<DiamondKey> {
    let mut out = BTreeSet::new();
    for v in 0..l.len() {
        // v as the common upper cover u: s -j-> u, t -i-> u
        let lower = l.in_edges(v);
        for &a in lower {
            for &b in lower {
                if a != b {
                    let (ea, eb) = (l.edge(a), l.edge(b));
                    out.insert((ea.from, eb.from, eb.color, ea.color));
                }
            }
        }
        // v as the common lower cover r: r -i-> s, r -j-> t
        let upper = l.out_edges(v);
        for &a in upper {
            for &b in upper {
                if a != b {
                    let (ea, eb) = (l.edge(a), l.edge(b));
                    out.insert((ea.to, eb.to, ea.color, eb.color));
                }
            }
        }
    }
    out
}

/// For every pair `s ≠ t` of the same rank and colors `(i, j)`:
/// `Σ_u c_{u,s} d_{t,u} = Σ_r d_{r,s} c_{t,r}`.
///
/// The `s = t`, `i = j` instance of the bracket `[X_i, Y_i]` carries the `m_i`
/// term and is the crossing condition, checked by [`check_crossing`]; for
/// `s = t`, `i ≠ j` both sides are empty sums.
pub fn check_diamond(lattice: &GtLattice, labeling: &EdgeLabeling, mode: DiamondMode) -> ConditionReport {
    let candidates = shared_cover_candidates(lattice);
    let mut violations = Vec::new();
    let evaluate = |key: DiamondKey, violations: &mut Vec<Violation>| {
        let (lhs, _) = diamond_lhs(lattice, labeling, key);
        let (rhs, _) = diamond_rhs(lattice, labeling, key);
        if lhs != rhs {
            let (s, t, i, j) = key;
            violations.push(Violation {
                location: format!("pair ({s}, {t}), colors ({i}, {j})"),
                expected: rhs.to_string(),
                actual: lhs.to_string(),
            });
        }
    };
    let checked = match mode {
        DiamondMode::SharedCovers => {
            for &key in &candidates {
                evaluate(key, &mut violations);
            }
            candidates.len()
        }
        DiamondMode::Exhaustive => {
            let mut by_rank: Vec<Vec<usize>> = Vec::new();
            for v in 0..lattice.len() {
                let r = lattice.rank(v);
                if by_rank.len() <= r {
                    by_rank.resize(r + 1, Vec::new());
                }
                by_rank[r].push(v);
            }
            let colors = lattice.colors();
            let mut checked = 0;
            for level in &by_rank {
                for &s in level {
                    for &t in level {
                        if s == t {
                            continue;
                        }
                        for i in 1..=colors {
                            for j in 1..=colors {
                                let key = (s, t, i, j);
                                checked += 1;
                                evaluate(key, &mut violations);
                                if !candidates.contains(&key) {
                                    let (_, lt) = diamond_lhs(lattice, labeling, key);
                                    let (_, rt) = diamond_rhs(lattice, labeling, key);
                                    if lt + rt > 0 {
                                        violations.push(Violation {
                                            location: format!(
                                                "pair ({s}, {t}), colors ({i}, {j}) missed by enumeration"
                                            ),
                                            expected: "empty sums".into(),
                                            actual: format!("{lt} + {rt} terms"),
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
            checked
        }
    };
    ConditionReport::new("diamond", checked, violations)
}

/// Reduced diamond relations on every square `r → s, r → t, s → u, t → u`:
/// when `u` and `r` are the only common covers, each of the two factor-wise
/// equations `c_{u,s} d_{t,u} = d_{r,s} c_{t,r}` and `c_{u,t} d_{s,u} = d_{r,t} c_{s,r}`
/// holds, and always `π_{s,u} π_{t,u} = π_{r,s} π_{r,t}`.
pub fn check_diamond_products(lattice: &GtLattice, labeling: &EdgeLabeling) -> ConditionReport {
    let l = lattice;
    let mut violations = Vec::new();
    let mut checked = 0;
    for r in 0..l.len() {
        let ups = l.out_edges(r);
        for (x, &ers) in ups.iter().enumerate() {
            for &ert in &ups[x + 1..] {
                let (s, t) = (l.edge(ers).to, l.edge(ert).to);
                let s_up: BTreeSet<usize> = l.out_edges(s).iter().map(|&e| l.edge(e).to).collect();
                let common: Vec<usize> = l
                    .out_edges(t)
                    .iter()
                    .map(|&e| l.edge(e).to)
                    .filter(|u| s_up.contains(u))
                    .collect();
                let s_down: BTreeSet<usize> =
                    l.in_edges(s).iter().map(|&e| l.edge(e).from).collect();
                let lower_count = l
                    .in_edges(t)
                    .iter()
                    .filter(|&&e| s_down.contains(&l.edge(e).from))
                    .count();
                for &u in &common {
                    let esu = l.edge_between(s, u).expect("cover");
                    let etu = l.edge_between(t, u).expect("cover");
                    checked += 1;
                    let top = labeling.pi(esu) * labeling.pi(etu);
                    let bottom = labeling.pi(ers) * labeling.pi(ert);
                    if top != bottom {
                        violations.push(Violation {
                            location: format!("square {r} -> ({s}, {t}) -> {u}: edge products"),
                            expected: bottom.to_string(),
                            actual: top.to_string(),
                        });
                    }
                    if common.len() == 1 && lower_count == 1 {
                        let first = (labeling.c(esu) * labeling.d(etu), labeling.d(ers) * labeling.c(ert));
                        let second = (labeling.c(etu) * labeling.d(esu), labeling.d(ert) * labeling.c(ers));
                        for (name, (lhs, rhs)) in [("first", first), ("second", second)] {
                            if lhs != rhs {
                                violations.push(Violation {
                                    location: format!("square {r} -> ({s}, {t}) -> {u}: {name} reduced form"),
                                    expected: rhs.to_string(),
                                    actual: lhs.to_string(),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    ConditionReport::new("diamond-products", checked, violations)
}

/// Conjunction of the structure, crossing and diamond reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationSummary {
    pub pass: bool,
    pub reports: Vec<ConditionReport>,
}

pub fn verify_all(lattice: &GtLattice, labeling: &EdgeLabeling, mode: DiamondMode) -> VerificationSummary {
    let reports = vec![
        check_structure(lattice),
        check_crossing(lattice, labeling),
        check_diamond(lattice, labeling, mode),
    ];
    VerificationSummary {
        pass: reports.iter().all(|r| r.pass),
        reports,
    }
}

/// Points `x_1 … x_N` (pairwise distinct) with weights `y_1 … y_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityInstance {
    x: Vec<Rational>,
    y: Vec<Rational>,
}

impl IdentityInstance {
    pub fn new(x: Vec<Rational>, y: Vec<Rational>) -> Result<Self> {
        if x.len() != y.len() {
            return Err(GtError::Parse(format!(
                "{} abscissae but {} weights",
                x.len(),
                y.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for xi in &x {
            if !seen.insert(xi) {
                return Err(GtError::DuplicateAbscissa(xi.to_string()));
            }
        }
        Ok(Self { x, y })
    }

    pub fn x(&self) -> &[Rational] {
        &self.x
    }

    pub fn y(&self) -> &[Rational] {
        &self.y
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Random instance with `1 ≤ N ≤ max_len`; numerators in `-20..=20`,
    /// denominators in `1..=10`, distinct `x` by rejection.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> Self {
        let len = rng.random_range(1..=max_len.max(1));
        let draw = |rng: &mut R| frac(rng.random_range(-20..=20), rng.random_range(1..=10));
        let mut x: Vec<Rational> = Vec::with_capacity(len);
        while x.len() < len {
            let candidate = draw(rng);
            if !x.contains(&candidate) {
                x.push(candidate);
            }
        }
        let y = (0..len).map(|_| draw(rng)).collect();
        Self { x, y }
    }

    /// The same instance with `x` and `y` permuted together.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self {
            x: perm.iter().map(|&p| self.x[p].clone()).collect(),
            y: perm.iter().map(|&p| self.y[p].clone()).collect(),
        }
    }
}

/// `Σ_i y_i ∏_{j≠i} (1 + y_j / (x_j − x_i))`.
pub fn identity_lhs(inst: &IdentityInstance) -> Rational {
    let (x, y) = (&inst.x, &inst.y);
    let mut total = Rational::zero();
    for i in 0..x.len() {
        let mut term = y[i].clone();
        for j in 0..x.len() {
            if j != i {
                term *= one() + &y[j] / (&x[j] - &x[i]);
            }
        }
        total += term;
    }
    total
}

/// Whether the left side equals `Σ_i y_i` exactly.
pub fn check_identity(inst: &IdentityInstance) -> bool {
    identity_lhs(inst) == inst.y.iter().sum::<Rational>()
}
