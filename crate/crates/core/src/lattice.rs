//! The Gelfand-Tsetlin lattice as an edge-colored ranked poset.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{GtError, Result};
use crate::tableaux::{content, enumerate_ssyt, ContentVector, Partition, Ssyt};

/// Covering `from ⋖ to`: `to` is `from` with the leftmost `color + 1` of `row`
/// changed into `color`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub color: usize,
    /// 1-based row of the changed entry.
    pub row: usize,
}

/// One connected component of the color-`k` subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentInfo {
    pub color: usize,
    /// Member vertex ids, sorted.
    pub members: Vec<usize>,
    /// Rank length `l` of the component.
    pub l: usize,
    /// `ρ` of each member, parallel to `members`.
    pub rho: Vec<usize>,
}

impl ComponentInfo {
    pub fn rho_of(&self, v: usize) -> Option<usize> {
        self.members.binary_search(&v).ok().map(|i| self.rho[i])
    }
}

/// Vertex weight in `ε` coordinates (the content `μ`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVector {
    pub epsilon: Vec<i64>,
}

impl WeightVector {
    /// Coordinates in the fundamental weights: `m_k = μ_k − μ_{k+1}`.
    pub fn m_coords(&self) -> Vec<i64> {
        self.epsilon.windows(2).map(|w| w[0] - w[1]).collect()
    }

    /// `ε_k − ε_{k+1}`.
    pub fn simple_root(n: usize, k: usize) -> Self {
        let mut epsilon = vec![0; n];
        epsilon[k - 1] = 1;
        epsilon[k] = -1;
        Self { epsilon }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            epsilon: self
                .epsilon
                .iter()
                .zip(&other.epsilon)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl From<&ContentVector> for WeightVector {
    fn from(c: &ContentVector) -> Self {
        Self {
            epsilon: c.mu.iter().map(|&m| m as i64).collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GtLattice {
    shape: Partition,
    n: usize,
    vertices: Vec<Ssyt>,
    index: HashMap<Ssyt, usize>,
    edges: Vec<Edge>,
    edge_index: HashMap<(usize, usize), usize>,
    out_edges: Vec<Vec<usize>>,
    in_edges: Vec<Vec<usize>>,
    rank: Vec<usize>,
    /// `components[k - 1]` lists the color-`k` components.
    components: Vec<Vec<ComponentInfo>>,
    /// `component_of[k - 1][v]` indexes into `components[k - 1]`.
    component_of: Vec<Vec<usize>>,
}

pub fn build_lattice(shape: &Partition, n: usize) -> Result<GtLattice> {
    let vertices = enumerate_ssyt(shape, n)?;
    let index: HashMap<Ssyt, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();
    let mut edges = Vec::new();
    for (s, t) in vertices.iter().enumerate() {
        for k in 1..n {
            for row in decrementable_rows(t, k) {
                let col = t.leftmost(row, k + 1).expect("row holds k+1");
                let up = t.with_entry(row, col, k);
                let to = index[&up];
                edges.push(Edge {
                    from: s,
                    to,
                    color: k,
                    row,
                });
            }
        }
    }
    // rank(T) = Σ (n − entry), shifted so the minimum has rank 0
    let raw: Vec<usize> = vertices
        .iter()
        .map(|t| t.reading_word().iter().map(|&v| n - v).sum())
        .collect();
    let base = raw.iter().copied().min().unwrap_or(0);
    let rank = raw.into_iter().map(|r| r - base).collect();
    Ok(GtLattice::assemble(shape.clone(), n, vertices, index, edges, rank))
}

/// Rows whose leftmost `k + 1` may be replaced by `k`, ascending.
pub fn decrementable_rows(t: &Ssyt, k: usize) -> Vec<usize> {
    (1..=t.rows().len())
        .filter(|&row| match t.leftmost(row, k + 1) {
            Some(col) => row == 1 || t.row(row - 1)[col] != k,
            None => false,
        })
        .collect()
}

/// Rows whose rightmost `k` may be replaced by `k + 1`, ascending.
pub fn incrementable_rows(t: &Ssyt, k: usize) -> Vec<usize> {
    if k >= t.n() {
        return Vec::new();
    }
    let h = t.rows().len();
    (1..=h)
        .filter(|&row| match t.rightmost(row, k) {
            Some(col) => row == h || t.row(row + 1).get(col) != Some(&(k + 1)),
            None => false,
        })
        .collect()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl GtLattice {
    fn assemble(
        shape: Partition,
        n: usize,
        vertices: Vec<Ssyt>,
        index: HashMap<Ssyt, usize>,
        edges: Vec<Edge>,
        rank: Vec<usize>,
    ) -> Self {
        let nv = vertices.len();
        let mut out_edges = vec![Vec::new(); nv];
        let mut in_edges = vec![Vec::new(); nv];
        let mut edge_index = HashMap::with_capacity(edges.len());
        for (id, e) in edges.iter().enumerate() {
            out_edges[e.from].push(id);
            in_edges[e.to].push(id);
            edge_index.insert((e.from, e.to), id);
        }
        let mut components = Vec::new();
        let mut component_of = Vec::new();
        for k in 1..n {
            let mut uf = UnionFind::new(nv);
            for e in edges.iter().filter(|e| e.color == k) {
                uf.union(e.from, e.to);
            }
            let mut by_root: HashMap<usize, usize> = HashMap::new();
            let mut comps: Vec<ComponentInfo> = Vec::new();
            let mut of = vec![0; nv];
            for (v, slot) in of.iter_mut().enumerate() {
                let root = uf.find(v);
                let ci = *by_root.entry(root).or_insert_with(|| {
                    comps.push(ComponentInfo {
                        color: k,
                        members: Vec::new(),
                        l: 0,
                        rho: Vec::new(),
                    });
                    comps.len() - 1
                });
                comps[ci].members.push(v);
                *slot = ci;
            }
            for c in &mut comps {
                let lo = c.members.iter().map(|&v| rank[v]).min().unwrap_or(0);
                let hi = c.members.iter().map(|&v| rank[v]).max().unwrap_or(0);
                c.l = hi - lo;
                c.rho = c.members.iter().map(|&v| rank[v] - lo).collect();
            }
            components.push(comps);
            component_of.push(of);
        }
        Self {
            shape,
            n,
            vertices,
            index,
            edges,
            edge_index,
            out_edges,
            in_edges,
            rank,
            components,
            component_of,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Highest color, `n − 1`.
    pub fn colors(&self) -> usize {
        self.n.saturating_sub(1)
    }

    pub fn vertices(&self) -> &[Ssyt] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &Ssyt {
        &self.vertices[v]
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_id(&self, t: &Ssyt) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &Edge {
        &self.edges[id]
    }

    pub fn edge_between(&self, from: usize, to: usize) -> Option<usize> {
        self.edge_index.get(&(from, to)).copied()
    }

    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_edges[v]
    }

    pub fn out_edges_colored(&self, v: usize, k: usize) -> impl Iterator<Item = usize> + '_ {
        self.out_edges[v]
            .iter()
            .copied()
            .filter(move |&e| self.edges[e].color == k)
    }

    pub fn in_edges_colored(&self, v: usize, k: usize) -> impl Iterator<Item = usize> + '_ {
        self.in_edges[v]
            .iter()
            .copied()
            .filter(move |&e| self.edges[e].color == k)
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    /// The vertex whose row `i` is filled with `i`.
    pub fn maximum(&self) -> usize {
        0
    }

    pub fn minimum(&self) -> usize {
        self.vertices.len() - 1
    }

    fn check_color(&self, k: usize) -> Result<()> {
        if k == 0 || k >= self.n {
            Err(GtError::InvalidColor {
                color: k,
                max: self.colors(),
            })
        } else {
            Ok(())
        }
    }

    /// The color-`k` components.
    pub fn component_info(&self, k: usize) -> Result<&[ComponentInfo]> {
        self.check_color(k)?;
        Ok(&self.components[k - 1])
    }

    pub fn component_of(&self, v: usize, k: usize) -> &ComponentInfo {
        &self.components[k - 1][self.component_of[k - 1][v]]
    }

    /// `m_k(v) = 2ρ_k(v) − l_k(v)`.
    pub fn m_value(&self, v: usize, k: usize) -> i64 {
        let c = self.component_of(v, k);
        let rho = c.rho_of(v).expect("vertex belongs to its component");
        2 * rho as i64 - c.l as i64
    }

    /// `(m_1(v), …, m_{n−1}(v))` from the component ranks.
    pub fn m_vector(&self, v: usize) -> Vec<i64> {
        (1..self.n).map(|k| self.m_value(v, k)).collect()
    }

    /// Weight in `ε` coordinates, read off the content of the tableau.
    pub fn weight(&self, v: usize) -> WeightVector {
        WeightVector::from(&content(&self.vertices[v]))
    }

    /// Copy with one edge recolored, for fault-injection tests of the checks.
    pub fn with_recolored_edge(&self, edge: usize, color: usize) -> Self {
        let mut edges = self.edges.clone();
        edges[edge].color = color;
        Self::assemble(
            self.shape.clone(),
            self.n,
            self.vertices.clone(),
            self.index.clone(),
            edges,
            self.rank.clone(),
        )
    }

    /// Vertex ids in increasing rank, ties broken by id.
    pub fn by_increasing_rank(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&v| (self.rank[v], v));
        order
    }
}
