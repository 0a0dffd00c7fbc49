//! Hypergraph data model, validation, spanning-subhypergraph components and
//! the pairwise structural statistics (`r`, `E_{r-1}(e)`, gamma, rho).
//!
//! Vertices are the dense ids `0..n`. The position of an edge in the input
//! list is its identity everywhere else in the crate: edge sets are bitmasks
//! over positions and the default edge ordering follows input order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex ids are packed into `u128` masks.
pub const MAX_VERTICES: usize = 128;
/// Edge sets are packed into `u64` masks.
pub const MAX_EDGES: usize = 64;

pub type VertexMask = u128;

/// A set of edge positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EdgeSet(pub u64);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        EdgeSet(indices.into_iter().fold(0u64, |acc, i| acc | (1u64 << i)))
    }

    /// All `m` edges.
    pub fn full(m: usize) -> Self {
        if m >= 64 {
            EdgeSet(u64::MAX)
        } else {
            EdgeSet((1u64 << m) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        EdgeSet(1u64 << i)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_subset_of(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn with(self, i: usize) -> Self {
        EdgeSet(self.0 | 1u64 << i)
    }

    pub fn without(self, i: usize) -> Self {
        EdgeSet(self.0 & !(1u64 << i))
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of `0..m` in ascending bitmask order.
    pub fn all(m: usize) -> impl Iterator<Item = EdgeSet> {
        debug_assert!(m < 64);
        (0..1u64 << m).map(EdgeSet)
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (j, i) in self.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "e{i}")?;
        }
        write!(f, "}}")
    }
}

/// Wire format: `{"n": <int>, "edges": [[<int>, ...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphJson {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

/// A validated hypergraph: every edge has at least two vertices in `0..n`,
/// and no edge is contained in (or equal to) another.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HypergraphJson", into = "HypergraphJson")]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    masks: Vec<VertexMask>,
}

/// Checks the standing assumptions on raw input without building anything.
/// Edges may be given unsorted; the reported indices are input positions.
pub fn validate(n: usize, edges: &[Vec<usize>]) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "vertex count",
            value: n,
            max: MAX_VERTICES,
        });
    }
    if edges.len() > MAX_EDGES {
        return Err(Error::TooLarge {
            what: "edge count",
            value: edges.len(),
            max: MAX_EDGES,
        });
    }
    let mut masks = Vec::with_capacity(edges.len());
    for (i, e) in edges.iter().enumerate() {
        let mut mask: VertexMask = 0;
        for &v in e {
            if v >= n {
                return Err(Error::VertexOutOfRange { edge: i, vertex: v, n });
            }
            if mask >> v & 1 == 1 {
                return Err(Error::RepeatedVertex { edge: i, vertex: v });
            }
            mask |= 1 << v;
        }
        if e.len() < 2 {
            return Err(Error::EdgeTooSmall {
                edge: i,
                size: e.len(),
            });
        }
        masks.push(mask);
    }
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            let (a, b) = (masks[i], masks[j]);
            if a == b {
                return Err(Error::DuplicateEdge {
                    first: i,
                    second: j,
                });
            }
            if a & !b == 0 {
                return Err(Error::ContainedEdge { inner: i, outer: j });
            }
            if b & !a == 0 {
                return Err(Error::ContainedEdge { inner: j, outer: i });
            }
        }
    }
    Ok(())
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        validate(n, &edges)?;
        let edges: Vec<Vec<usize>> = edges
            .into_iter()
            .map(|mut e| {
                e.sort_unstable();
                e
            })
            .collect();
        let masks = edges
            .iter()
            .map(|e| e.iter().fold(0, |acc, &v| acc | (1 as VertexMask) << v))
            .collect();
        Ok(Hypergraph { n, edges, masks })
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        Hypergraph::new(n, Vec::new())
    }

    /// The complete `r`-uniform hypergraph on `n` vertices, edges in
    /// lexicographic order.
    pub fn complete_uniform(n: usize, r: usize) -> Result<Self> {
        let mut edges = Vec::new();
        let mut combo: Vec<usize> = (0..r).collect();
        if r == 0 || r > n {
            return Hypergraph::new(n, edges);
        }
        loop {
            edges.push(combo.clone());
            let mut i = r;
            while i > 0 && combo[i - 1] == n - r + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            combo[i - 1] += 1;
            for j in i..r {
                combo[j] = combo[j - 1] + 1;
            }
        }
        Hypergraph::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    pub fn edge_mask(&self, i: usize) -> VertexMask {
        self.masks[i]
    }

    pub fn edge_masks(&self) -> &[VertexMask] {
        &self.masks
    }

    pub fn check_edge(&self, e: usize) -> Result<()> {
        if e >= self.m() {
            return Err(Error::EdgeIndexOutOfRange { edge: e, m: self.m() });
        }
        Ok(())
    }

    /// Common edge size, or `None` when sizes differ or there are no edges.
    pub fn uniformity(&self) -> Option<usize> {
        let r = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == r).then_some(r)
    }

    pub fn require_uniform(&self) -> Result<usize> {
        self.uniformity().ok_or(Error::NonUniform)
    }

    /// Union of the vertex sets of the edges in `a`.
    pub fn vertices_of(&self, a: EdgeSet) -> VertexMask {
        a.iter().fold(0, |acc, i| acc | self.masks[i])
    }

    /// Vertex masks of the components of `H<a>` that contain at least one
    /// edge. Isolated vertices are not listed.
    pub fn edge_components(&self, a: EdgeSet) -> Vec<VertexMask> {
        let mut groups: Vec<VertexMask> = Vec::new();
        for i in a.iter() {
            let mut merged = self.masks[i];
            groups.retain(|&g| {
                if g & merged != 0 {
                    merged |= g;
                    false
                } else {
                    true
                }
            });
            groups.push(merged);
        }
        groups
    }

    /// `c(a)`: components of the spanning subhypergraph with edge set `a`,
    /// isolated vertices included.
    pub fn component_count(&self, a: EdgeSet) -> usize {
        let groups = self.edge_components(a);
        let covered: u32 = groups.iter().map(|g| g.count_ones()).sum();
        groups.len() + self.n - covered as usize
    }

    pub fn components(&self, a: EdgeSet) -> Components {
        let mut label = vec![usize::MAX; self.n];
        let groups = self.edge_components(a);
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n {
            if label[v] != usize::MAX {
                continue;
            }
            let block: Vec<usize> = match groups.iter().find(|&&g| g >> v & 1 == 1) {
                Some(&g) => (v..self.n).filter(|&u| g >> u & 1 == 1).collect(),
                None => vec![v],
            };
            for &u in &block {
                label[u] = blocks.len();
            }
            blocks.push(block);
        }
        Components { label, blocks }
    }

    pub fn struct_stats(&self) -> StructStats {
        let m = self.m();
        let r = self.uniformity();
        let mut rho: Option<usize> = None;
        for i in 0..m {
            for j in 0..m {
                if i != j {
                    let d = (self.masks[i] & !self.masks[j]).count_ones() as usize;
                    rho = Some(rho.map_or(d, |x| x.min(d)));
                }
            }
        }
        let per_edge_ew = r.map(|r| {
            (0..m)
                .map(|i| {
                    EdgeSet::from_indices((0..m).filter(|&j| {
                        j != i && (self.masks[i] & self.masks[j]).count_ones() as usize == r - 1
                    }))
                })
                .collect::<Vec<_>>()
        });
        let gamma = per_edge_ew
            .as_ref()
            .map(|sets| sets.iter().map(|s| s.len()).max().unwrap_or(0));
        StructStats {
            m,
            r,
            gamma,
            rho,
            per_edge_ew,
        }
    }
}

impl TryFrom<HypergraphJson> for Hypergraph {
    type Error = Error;

    fn try_from(raw: HypergraphJson) -> Result<Self> {
        Hypergraph::new(raw.n, raw.edges)
    }
}

impl From<Hypergraph> for HypergraphJson {
    fn from(h: Hypergraph) -> Self {
        HypergraphJson {
            n: h.n,
            edges: h.edges,
        }
    }
}

/// Vertex partition of a spanning subhypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    /// Component index of every vertex.
    pub label: Vec<usize>,
    /// Blocks ordered by smallest vertex, each sorted.
    pub blocks: Vec<Vec<usize>>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.blocks.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructStats {
    pub m: usize,
    /// Common edge size; `None` when non-uniform.
    pub r: Option<usize>,
    pub gamma: Option<usize>,
    pub rho: Option<usize>,
    /// `E_{r-1}(e)` for each edge; uniform hypergraphs only.
    pub per_edge_ew: Option<Vec<EdgeSet>>,
}

impl StructStats {
    pub fn gamma(&self) -> Result<usize> {
        self.gamma.ok_or(Error::GammaUndefined)
    }

    pub fn rho(&self) -> Result<usize> {
        self.rho.ok_or(Error::RhoUndefined)
    }

    pub fn ew(&self, e: usize) -> Result<EdgeSet> {
        self.per_edge_ew
            .as_ref()
            .map(|sets| sets[e])
            .ok_or(Error::GammaUndefined)
    }
}
