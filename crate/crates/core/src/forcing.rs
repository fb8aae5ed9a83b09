//! Recovering every edge product from the lattice and its vertex weights alone.
//!
//! Vertices are visited from the minimum upward. When a vertex `S` is reached
//! for color `k`, all of its incoming `k`-edges are known and its outgoing
//! `k`-edges are not. Each outgoing edge except the one acting on the lowest row
//! closes a diamond whose other three products are known, and the last one is
//! then fixed by the crossing relation at `S`.

use std::collections::BTreeSet;

use num::{Signed, Zero};
use serde::Serialize;

use crate::error::{GtError, Result};
use crate::labels::EdgeLabeling;
use crate::lattice::GtLattice;
use crate::rational::{int, Rational};
use crate::verify::{ConditionReport, Violation};

/// How an edge product was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "forced_by", rename_all = "lowercase")]
pub enum ForcedBy {
    /// Crossing relation at `vertex`, using the listed incident edges.
    Crossing { vertex: usize, witnesses: Vec<usize> },
    /// Product relation around a diamond; `witnesses[2]` is the edge divided by.
    Diamond { witnesses: [usize; 3] },
}

impl ForcedBy {
    pub fn witnesses(&self) -> &[usize] {
        match self {
            ForcedBy::Crossing { witnesses, .. } => witnesses,
            ForcedBy::Diamond { witnesses } => witnesses,
        }
    }
}

/// Partially determined edge products with provenance. Entries are write-once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductAssignment {
    products: Vec<Option<Rational>>,
    provenance: Vec<Option<ForcedBy>>,
}

impl ProductAssignment {
    pub fn empty(edges: usize) -> Self {
        Self {
            products: vec![None; edges],
            provenance: vec![None; edges],
        }
    }

    pub fn len(&self) -> usize {
        self.products.len()
    }

    pub fn is_empty(&self) -> bool {
        self.products.is_empty()
    }

    pub fn get(&self, edge: usize) -> Option<&Rational> {
        self.products[edge].as_ref()
    }

    pub fn provenance(&self, edge: usize) -> Option<&ForcedBy> {
        self.provenance[edge].as_ref()
    }

    pub fn assigned(&self) -> usize {
        self.products.iter().filter(|p| p.is_some()).count()
    }

    pub fn is_total(&self) -> bool {
        self.products.iter().all(Option::is_some)
    }

    pub fn all_positive(&self) -> bool {
        self.products.iter().flatten().all(Signed::is_positive)
    }

    /// Products in edge order; `None` if the assignment is not total.
    pub fn products(&self) -> Option<Vec<Rational>> {
        self.products.iter().cloned().collect()
    }

    pub fn set(&mut self, edge: usize, value: Rational, by: ForcedBy) -> Result<()> {
        if self.products[edge].is_some() {
            return Err(GtError::Overwrite { edge });
        }
        self.products[edge] = Some(value);
        self.provenance[edge] = Some(by);
        Ok(())
    }

    /// True when every edge's witnesses were determined before it, so the
    /// derivation is acyclic.
    pub fn provenance_is_acyclic(&self, order: &[usize]) -> bool {
        let mut seen = vec![false; self.len()];
        for &e in order {
            let Some(by) = &self.provenance[e] else {
                return false;
            };
            if by.witnesses().iter().any(|&w| !seen[w]) {
                return false;
            }
            seen[e] = true;
        }
        true
    }
}

/// Vertex visiting strategy within one color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ForcingOrder {
    /// Global sweep by rank, ties broken by ascending vertex id.
    #[default]
    RankSweep,
    /// Global sweep by rank, ties broken by descending vertex id.
    RankSweepReversedTies,
    /// Each component processed from its own minimum, deferring a component
    /// whenever a diamond partner is not yet known.
    PerComponent,
}

/// Edge ids in the order they were determined, for acyclicity checks and traces.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Log(Vec<usize>);

fn record(asg: &mut ProductAssignment, log: &mut Log, edge: usize, value: Rational, by: ForcedBy) -> Result<()> {
    asg.set(edge, value, by)?;
    log.0.push(edge);
    Ok(())
}

/// Color 1: each component is a chain, so crossing alone walks it upward.
pub fn force_color_one(lattice: &GtLattice) -> Result<ProductAssignment> {
    let mut asg = ProductAssignment::empty(lattice.edges().len());
    if lattice.colors() == 0 {
        return Ok(asg);
    }
    for v in 0..lattice.len() {
        if lattice.in_edges_colored(v, 1).count() > 1 || lattice.out_edges_colored(v, 1).count() > 1 {
            return Err(GtError::NotAChain { color: 1, vertex: v });
        }
    }
    let mut log = Log::default();
    for s in lattice.by_increasing_rank() {
        force_at(lattice, &mut asg, &mut log, s, 1)?;
    }
    Ok(asg)
}

/// Forces the outgoing `k`-edges of `s`. Returns `Ok(false)` when a diamond
/// partner is missing and `defer` is set, leaving the assignment untouched.
fn try_force_at(
    lattice: &GtLattice,
    asg: &mut ProductAssignment,
    log: &mut Log,
    s: usize,
    k: usize,
    defer: bool,
) -> Result<bool> {
    let mut out: Vec<usize> = lattice.out_edges_colored(s, k).collect();
    if out.is_empty() {
        return Ok(true);
    }
    out.sort_by_key(|&e| lattice.edge(e).row);
    let underdetermined = |detail: String| GtError::Underdetermined { vertex: s, color: k, detail };

    let incoming: Vec<usize> = lattice.in_edges_colored(s, k).collect();
    for &e in &incoming {
        if asg.get(e).is_none() {
            if defer {
                return Ok(false);
            }
            return Err(underdetermined(format!("incoming edge {e} unknown")));
        }
    }

    let t_s = lattice.vertex(s);
    let mut planned = Vec::with_capacity(out.len());
    for pair in out.windows(2) {
        let (edge, next) = (pair[0], pair[1]);
        let row_j = lattice.edge(edge).row;
        let row_next = lattice.edge(next).row;
        let r = lattice.edge(edge).to;
        let col = t_s
            .leftmost(row_next, k + 1)
            .ok_or_else(|| underdetermined(format!("no {} in row {row_next}", k + 1)))?;
        let i = t_s.row(row_next - 1)[col];
        let right = t_s.rightmost(row_next - 1, i).expect("entry exists");
        let u_tab = t_s.with_entry(row_next - 1, right, i + 1);
        let u = lattice
            .vertex_id(&u_tab)
            .ok_or_else(|| underdetermined(format!("diamond bottom {u_tab} is not a vertex")))?;
        let us = lattice
            .edge_between(u, s)
            .ok_or_else(|| underdetermined(format!("no edge {u} -> {s}")))?;
        let u_col = lattice.vertex(u).leftmost(row_j, k + 1).expect("row keeps its k+1");
        let t_tab = lattice.vertex(u).with_entry(row_j, u_col, k);
        let t = lattice
            .vertex_id(&t_tab)
            .ok_or_else(|| underdetermined(format!("diamond side {t_tab} is not a vertex")))?;
        let ut = lattice
            .edge_between(u, t)
            .ok_or_else(|| underdetermined(format!("no edge {u} -> {t}")))?;
        let tr = lattice
            .edge_between(t, r)
            .ok_or_else(|| underdetermined(format!("no edge {t} -> {r}")))?;
        debug_assert_eq!(lattice.edge(us).color, i);
        debug_assert_eq!(lattice.edge(ut).color, k);
        debug_assert_eq!(lattice.edge(tr).color, i);
        let known = [us, ut, tr].map(|e| asg.get(e).cloned());
        let [Some(p_us), Some(p_ut), Some(p_tr)] = known else {
            if defer {
                return Ok(false);
            }
            return Err(underdetermined(format!(
                "diamond partners of edge {edge} unknown: {us}, {ut}, {tr}"
            )));
        };
        if p_tr.is_zero() {
            return Err(underdetermined(format!("edge {tr} has product 0")));
        }
        planned.push((edge, p_us * p_ut / p_tr, ForcedBy::Diamond { witnesses: [us, ut, tr] }));
    }

    let last = *out.last().expect("nonempty");
    let sum_in: Rational = incoming.iter().map(|&e| asg.get(e).cloned().unwrap()).sum();
    let sum_other: Rational = planned.iter().map(|(_, p, _)| p.clone()).sum();
    let value = sum_in - sum_other - int(lattice.m_value(s, k));
    let mut witnesses: Vec<usize> = incoming;
    witnesses.extend(planned.iter().map(|(e, _, _)| *e));
    planned.push((last, value, ForcedBy::Crossing { vertex: s, witnesses }));

    for (edge, value, by) in planned {
        record(asg, log, edge, value, by)?;
    }
    Ok(true)
}

fn force_at(lattice: &GtLattice, asg: &mut ProductAssignment, log: &mut Log, s: usize, k: usize) -> Result<()> {
    try_force_at(lattice, asg, log, s, k, false).map(|_| ())
}

fn check_prior_colors(lattice: &GtLattice, asg: &ProductAssignment, k: usize) -> Result<()> {
    if k < 2 || k > lattice.colors() {
        return Err(GtError::InvalidColor { color: k, max: lattice.colors() });
    }
    for (id, e) in lattice.edges().iter().enumerate() {
        if e.color < k && asg.get(id).is_none() {
            return Err(GtError::Underdetermined {
                vertex: e.from,
                color: k,
                detail: format!("edge {id} of color {} is not yet known", e.color),
            });
        }
    }
    Ok(())
}

/// Forces every edge of color `k >= 2`, given all lower colors.
pub fn force_color_k(lattice: &GtLattice, asg: &mut ProductAssignment, k: usize, order: ForcingOrder) -> Result<()> {
    let mut log = Log::default();
    force_color_k_logged(lattice, asg, &mut log, k, order)
}

fn force_color_k_logged(
    lattice: &GtLattice,
    asg: &mut ProductAssignment,
    log: &mut Log,
    k: usize,
    order: ForcingOrder,
) -> Result<()> {
    check_prior_colors(lattice, asg, k)?;
    match order {
        ForcingOrder::RankSweep | ForcingOrder::RankSweepReversedTies => {
            let mut vertices: Vec<usize> = (0..lattice.len()).collect();
            if order == ForcingOrder::RankSweep {
                vertices.sort_by_key(|&v| (lattice.rank(v), v));
            } else {
                vertices.sort_by_key(|&v| (lattice.rank(v), std::cmp::Reverse(v)));
            }
            for s in vertices {
                force_at(lattice, asg, log, s, k)?;
            }
        }
        ForcingOrder::PerComponent => {
            // each component is a queue of its members from the bottom up
            let mut queues: Vec<Vec<usize>> = lattice
                .component_info(k)?
                .iter()
                .map(|c| {
                    let mut m = c.members.clone();
                    m.sort_by_key(|&v| std::cmp::Reverse((lattice.rank(v), v)));
                    m
                })
                .collect();
            let mut remaining: BTreeSet<usize> = (0..queues.len()).filter(|&c| !queues[c].is_empty()).collect();
            while !remaining.is_empty() {
                let mut progress = false;
                for c in remaining.clone() {
                    while let Some(&s) = queues[c].last() {
                        if !try_force_at(lattice, asg, log, s, k, true)? {
                            break;
                        }
                        queues[c].pop();
                        progress = true;
                    }
                    if queues[c].is_empty() {
                        remaining.remove(&c);
                    }
                }
                if !progress {
                    let c = *remaining.first().expect("nonempty");
                    let s = *queues[c].last().expect("nonempty");
                    return force_at(lattice, asg, log, s, k).and(Err(GtError::Underdetermined {
                        vertex: s,
                        color: k,
                        detail: "no component can make progress".into(),
                    }));
                }
            }
        }
    }
    Ok(())
}

/// All edge products, colors in increasing order, with the rank sweep.
pub fn force_all(lattice: &GtLattice) -> Result<ProductAssignment> {
    force_all_with(lattice, ForcingOrder::RankSweep)
}

pub fn force_all_with(lattice: &GtLattice, order: ForcingOrder) -> Result<ProductAssignment> {
    force_all_logged(lattice, order).map(|(asg, _)| asg)
}

/// Like [`force_all_with`], also returning edge ids in the order they were set.
pub fn force_all_ordered(lattice: &GtLattice, order: ForcingOrder) -> Result<(ProductAssignment, Vec<usize>)> {
    force_all_logged(lattice, order).map(|(asg, log)| (asg, log.0))
}

fn force_all_logged(lattice: &GtLattice, order: ForcingOrder) -> Result<(ProductAssignment, Log)> {
    let mut log = Log::default();
    let mut asg = ProductAssignment::empty(lattice.edges().len());
    if lattice.colors() == 0 {
        return Ok((asg, log));
    }
    for v in 0..lattice.len() {
        if lattice.in_edges_colored(v, 1).count() > 1 || lattice.out_edges_colored(v, 1).count() > 1 {
            return Err(GtError::NotAChain { color: 1, vertex: v });
        }
    }
    for s in lattice.by_increasing_rank() {
        force_at(lattice, &mut asg, &mut log, s, 1)?;
    }
    for k in 2..=lattice.colors() {
        force_color_k_logged(lattice, &mut asg, &mut log, k, order)?;
    }
    Ok((asg, log))
}

fn describe(lattice: &GtLattice, asg: &ProductAssignment, edge: usize) -> String {
    let e = lattice.edge(edge);
    let how = match asg.provenance(edge) {
        None => "undetermined".to_owned(),
        Some(ForcedBy::Crossing { vertex, witnesses }) => {
            format!("crossing at vertex {vertex} using {witnesses:?}")
        }
        Some(ForcedBy::Diamond { witnesses }) => {
            let [a, b, c] = witnesses;
            let show = |w: &usize| asg.get(*w).map_or("?".into(), |p| p.to_string());
            format!(
                "diamond: pi({a}) * pi({b}) / pi({c}) = {} * {} / {}",
                show(a),
                show(b),
                show(c)
            )
        }
    };
    format!("edge {edge} ({} -> {}, color {}) by {how}", e.from, e.to, e.color)
}

/// Exact edge-by-edge comparison of forced and formula products.
pub fn compare_forced_vs_formula(
    lattice: &GtLattice,
    labeling: &EdgeLabeling,
    asg: &ProductAssignment,
) -> ConditionReport {
    let mut violations = Vec::new();
    for edge in 0..lattice.edges().len() {
        let formula = labeling.pi(edge);
        match asg.get(edge) {
            Some(p) if p == formula => {}
            other => violations.push(Violation {
                location: describe(lattice, asg, edge),
                expected: formula.to_string(),
                actual: other.map_or("undetermined".into(), ToString::to_string),
            }),
        }
    }
    ConditionReport {
        condition: "forcing".into(),
        pass: violations.is_empty(),
        violations,
        checked: lattice.edges().len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labels::label_all;
    use crate::lattice::build_lattice;
    use crate::tableaux::Ssyt;

    fn lat(shape: &str, n: usize) -> GtLattice {
        build_lattice(&shape.parse().unwrap(), n).unwrap()
    }

    #[test]
    fn chain_of_length_two() {
        let l = lat("2", 2);
        let asg = force_color_one(&l).unwrap();
        assert_eq!(asg.products().unwrap(), vec![int(2), int(2)]);
        let bottom = l.minimum();
        let e = l.out_edges(bottom)[0];
        assert_eq!(asg.provenance(e), Some(&ForcedBy::Crossing { vertex: bottom, witnesses: vec![] }));
    }

    #[test]
    fn single_edge_and_singletons() {
        let l = lat("1", 2);
        assert_eq!(force_all(&l).unwrap().products().unwrap(), vec![int(1)]);
        // (1,1) with n = 2 is one vertex and no edges
        let l = lat("1,1", 2);
        assert!(force_all(&l).unwrap().is_empty());
        assert_eq!(l.m_value(0, 1), 0);
    }

    #[test]
    fn fundamental_representations_have_unit_products() {
        for (shape, n) in [("1,1", 3), ("1", 5), ("1,1", 4), ("1,1,1", 4)] {
            let l = lat(shape, n);
            let asg = force_all(&l).unwrap();
            assert!(asg.products().unwrap().iter().all(|p| *p == int(1)), "{shape} n={n}");
        }
    }

    #[test]
    fn diamonds_are_used() {
        let l = lat("2,1", 3);
        let asg = force_all(&l).unwrap();
        assert!(asg.is_total() && asg.all_positive());
        let diamonds = (0..asg.len())
            .filter(|&e| matches!(asg.provenance(e), Some(ForcedBy::Diamond { .. })))
            .count();
        assert!(diamonds > 0);
        let lab = label_all(&l).unwrap();
        let rep = compare_forced_vs_formula(&l, &lab, &asg);
        assert!(rep.pass, "{:?}", rep.violations);
    }

    #[test]
    fn lowest_row_edge_is_the_crossing_one() {
        let l = lat("3,2,1", 4);
        let asg = force_all(&l).unwrap();
        for v in 0..l.len() {
            for k in 1..4 {
                let out: Vec<usize> = l.out_edges_colored(v, k).collect();
                let Some(&low) = out.iter().max_by_key(|&&e| l.edge(e).row) else {
                    continue;
                };
                for e in out {
                    let crossing = matches!(asg.provenance(e), Some(ForcedBy::Crossing { .. }));
                    assert_eq!(crossing, e == low);
                }
            }
        }
    }

    #[test]
    fn agrees_with_formula_and_across_orders() {
        for (shape, n) in [("2", 3), ("2,1", 3), ("2,2", 3), ("3,1", 3), ("2,1", 4), ("2,2", 4), ("3,1", 4), ("3,2,1", 4)] {
            let l = lat(shape, n);
            let lab = label_all(&l).unwrap();
            let (asg, order) = force_all_ordered(&l, ForcingOrder::RankSweep).unwrap();
            assert!(compare_forced_vs_formula(&l, &lab, &asg).pass, "{shape} n={n}");
            assert!(asg.provenance_is_acyclic(&order));
            assert_eq!(order.len(), l.edges().len());
            for mode in [ForcingOrder::RankSweepReversedTies, ForcingOrder::PerComponent] {
                let (other, order) = force_all_ordered(&l, mode).unwrap();
                assert_eq!(other.products(), asg.products(), "{shape} n={n} {mode:?}");
                assert!(other.provenance_is_acyclic(&order));
            }
        }
    }

    #[test]
    fn requires_lower_colors() {
        let l = lat("2,1", 3);
        let mut asg = ProductAssignment::empty(l.edges().len());
        assert!(matches!(
            force_color_k(&l, &mut asg, 2, ForcingOrder::RankSweep),
            Err(GtError::Underdetermined { .. })
        ));
        assert!(matches!(
            force_color_k(&l, &mut asg, 1, ForcingOrder::RankSweep),
            Err(GtError::InvalidColor { .. })
        ));
        let mut asg = force_color_one(&l).unwrap();
        force_color_k(&l, &mut asg, 2, ForcingOrder::RankSweep).unwrap();
        assert_eq!(asg, force_all(&l).unwrap());
    }

    #[test]
    fn no_overwrite() {
        let l = lat("2", 2);
        let mut asg = force_color_one(&l).unwrap();
        let by = ForcedBy::Crossing { vertex: 0, witnesses: vec![] };
        assert_eq!(asg.set(0, int(5), by), Err(GtError::Overwrite { edge: 0 }));
    }

    #[test]
    fn mismatch_carries_trace() {
        let l = lat("2,1", 3);
        let lab = label_all(&l).unwrap();
        let asg = force_all(&l).unwrap();
        let bad = lab.perturbed(0, crate::labels::LabelSide::C, &int(1));
        let rep = compare_forced_vs_formula(&l, &bad, &asg);
        assert!(!rep.pass);
        assert!(rep.violations[0].location.contains("by "));
    }

    #[test]
    fn non_chain_is_rejected() {
        // recolor a color-2 edge to 1 so some vertex gets two color-1 neighbours
        let l = lat("2,1", 3);
        let top = l.maximum();
        assert_eq!(l.vertex(top), &Ssyt::parse("1,1;2", 3).unwrap());
        let bad = (0..l.edges().len())
            .map(|e| l.with_recolored_edge(e, 1))
            .find(|b| (0..b.len()).any(|v| b.in_edges_colored(v, 1).count() > 1 || b.out_edges_colored(v, 1).count() > 1))
            .unwrap();
        assert!(matches!(force_color_one(&bad), Err(GtError::NotAChain { color: 1, .. })));
    }
}
