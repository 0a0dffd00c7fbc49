//! List assignments, `P(H,L)` by enumeration and by the reduced expansion,
//! the list-color function `P_l(H,k)` by exhaustive search, and empirical
//! colouring thresholds.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::chromatic::{chromatic_polynomial_ie, count_list_maps, ColoringCount, IntPolynomial};
use crate::deltacycles::{Eta, NbFamily};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeSet, Hypergraph, VertexMask};

/// A `k`-assignment: one sorted list of exactly `k` distinct colours per
/// vertex. Colours are arbitrary non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "AssignmentJson", into = "AssignmentJson")]
pub struct Assignment {
    k: usize,
    lists: Vec<Vec<u32>>,
}

/// Wire format: `{"k": <int>, "lists": [[<int>, ...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignmentJson {
    pub k: usize,
    pub lists: Vec<Vec<u32>>,
}

impl Assignment {
    pub fn new(k: usize, lists: Vec<Vec<u32>>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidAssignment("k must be at least 1".into()));
        }
        let mut out = Vec::with_capacity(lists.len());
        for (v, mut list) in lists.into_iter().enumerate() {
            list.sort_unstable();
            let len = list.len();
            list.dedup();
            if list.len() != len {
                return Err(Error::InvalidAssignment(format!(
                    "list of vertex {v} repeats a colour"
                )));
            }
            if len != k {
                return Err(Error::InvalidAssignment(format!(
                    "list of vertex {v} has {len} colours, expected {k}"
                )));
            }
            out.push(list);
        }
        Ok(Assignment { k, lists: out })
    }

    /// Every vertex gets `{1, ..., k}`.
    pub fn constant(n: usize, k: usize) -> Self {
        Assignment {
            k,
            lists: vec![(1..=k as u32).collect(); n],
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lists(&self) -> &[Vec<u32>] {
        &self.lists
    }

    pub fn list(&self, v: usize) -> &[u32] {
        &self.lists[v]
    }

    pub fn check_for(&self, h: &Hypergraph) -> Result<()> {
        if self.lists.len() != h.n() {
            return Err(Error::InvalidAssignment(format!(
                "{} lists for {} vertices",
                self.lists.len(),
                h.n()
            )));
        }
        Ok(())
    }

    /// Applies a colour map; the map must be injective on the colours used.
    pub fn recolored(&self, f: impl Fn(u32) -> u32) -> Result<Self> {
        Assignment::new(
            self.k,
            self.lists
                .iter()
                .map(|l| l.iter().map(|&c| f(c)).collect())
                .collect(),
        )
    }

    /// `|intersection of L(v) over v in mask|`; `k` for a single vertex.
    pub fn common_colours(&self, mask: VertexMask) -> usize {
        let mut verts = (0..self.lists.len()).filter(|&v| mask >> v & 1 == 1);
        let Some(first) = verts.next() else {
            return 0;
        };
        let mut common: Vec<u32> = self.lists[first].clone();
        for v in verts {
            let other = &self.lists[v];
            common.retain(|c| other.binary_search(c).is_ok());
            if common.is_empty() {
                break;
            }
        }
        common.len()
    }
}

impl TryFrom<AssignmentJson> for Assignment {
    type Error = Error;

    fn try_from(raw: AssignmentJson) -> Result<Self> {
        Assignment::new(raw.k, raw.lists)
    }
}

impl From<Assignment> for AssignmentJson {
    fn from(a: Assignment) -> Self {
        AssignmentJson {
            k: a.k,
            lists: a.lists,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaProfile {
    /// `alpha(e,L) = k - |common colours on e|`.
    pub per_edge: Vec<usize>,
    pub total: usize,
}

pub fn alpha_profile(h: &Hypergraph, l: &Assignment) -> Result<AlphaProfile> {
    l.check_for(h)?;
    let per_edge: Vec<usize> = h
        .edge_masks()
        .iter()
        .map(|&e| l.k() - l.common_colours(e))
        .collect();
    let total = per_edge.iter().sum();
    Ok(AlphaProfile { per_edge, total })
}

/// `beta(A,L)`: product over the components of `H<A>` of the number of
/// colours common to the whole component.
pub fn beta(h: &Hypergraph, l: &Assignment, a: EdgeSet) -> BigInt {
    let groups = h.edge_components(a);
    let covered: u32 = groups.iter().map(|g| g.count_ones()).sum();
    let isolated = h.n() - covered as usize;
    let mut value = num_traits::pow(BigInt::from(l.k()), isolated);
    for g in groups {
        value *= l.common_colours(g);
    }
    value
}

/// Number of `L`-colourings, by enumerating the product of the lists.
pub fn count_l_colorings(h: &Hypergraph, l: &Assignment, budget: &Budget) -> Result<ColoringCount> {
    l.check_for(h)?;
    budget.check_colorings(l.k() as u64, h.n())?;
    Ok(count_list_maps(h, l.lists()).into())
}

/// `P(H,L)` as the signed sum of `beta(A,L)` over edge sets containing no
/// broken delta-cycle.
pub fn count_l_colorings_nbc(
    h: &Hypergraph,
    l: &Assignment,
    eta: &Eta,
    budget: &Budget,
) -> Result<ColoringCount> {
    l.check_for(h)?;
    let nb = NbFamily::compute(h, eta, budget)?;
    count_l_colorings_from_family(h, l, &nb)
}

pub fn count_l_colorings_from_family(
    h: &Hypergraph,
    l: &Assignment,
    nb: &NbFamily,
) -> Result<ColoringCount> {
    l.check_for(h)?;
    let mut total = BigInt::zero();
    for &a in nb.members() {
        let b = beta(h, l, a);
        if a.len() % 2 == 0 {
            total += b;
        } else {
            total -= b;
        }
    }
    match total.to_biguint() {
        Some(count) => Ok(ColoringCount(count)),
        None => Err(Error::NegativeExpansion(total.to_string())),
    }
}

/// Minimum of `P(H,L)` over all `k`-assignments with a minimising witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListColorMin {
    pub k: usize,
    pub value: ColoringCount,
    pub witness: Assignment,
    /// Search-tree nodes visited.
    pub nodes: u64,
    /// Number of candidate shared colour classes.
    pub classes: usize,
}

/// Exact `P_l(H,k)`.
///
/// For a colour `c` let `S_c` be the set of vertices whose list contains `c`.
/// If a vertex of `S_c` lies in no edge contained in `S_c`, giving that vertex
/// a fresh private colour instead of `c` does not change the number of
/// `L`-colourings. Repeating this, every colour is either private to one
/// vertex or has `S_c` equal to a union of edges. An assignment is then a
/// multiset of such unions in which every vertex lies in at most `k` members,
/// padded with private colours, and the search enumerates those multisets.
pub fn plmin_exact(h: &Hypergraph, k: usize, budget: &Budget) -> Result<ListColorMin> {
    if k == 0 {
        return Err(Error::PreconditionViolated("k must be at least 1".into()));
    }
    budget.check_subsets(h.m())?;
    // counts are accumulated in i128 and bounded by k^n
    budget.check_colorings(k as u64, h.n())?;
    let search = ClassSearch::new(h, k);
    search.run(budget)
}

struct ClassSearch<'a> {
    h: &'a Hypergraph,
    k: usize,
    classes: Vec<VertexMask>,
    /// Per edge subset: sign, number of isolated vertices, and the indices
    /// (into `groups`) of its non-trivial components.
    terms: Vec<(bool, usize, Vec<usize>)>,
    /// For each distinct component mask, the classes containing it.
    group_supersets: Vec<Vec<usize>>,
}

impl<'a> ClassSearch<'a> {
    fn new(h: &'a Hypergraph, k: usize) -> Self {
        let mut classes: Vec<VertexMask> = EdgeSet::all(h.m())
            .filter(|a| !a.is_empty())
            .map(|a| h.vertices_of(a))
            .collect();
        classes.sort_unstable();
        classes.dedup();

        let mut group_index: HashMap<VertexMask, usize> = HashMap::new();
        let mut groups: Vec<VertexMask> = Vec::new();
        let mut terms = Vec::with_capacity(1 << h.m());
        for a in EdgeSet::all(h.m()) {
            let comps = h.edge_components(a);
            let covered: u32 = comps.iter().map(|g| g.count_ones()).sum();
            let ids = comps
                .into_iter()
                .map(|g| {
                    *group_index.entry(g).or_insert_with(|| {
                        groups.push(g);
                        groups.len() - 1
                    })
                })
                .collect();
            terms.push((a.len() % 2 == 0, h.n() - covered as usize, ids));
        }
        let group_supersets = groups
            .iter()
            .map(|&g| {
                (0..classes.len())
                    .filter(|&s| g & !classes[s] == 0)
                    .collect()
            })
            .collect();
        ClassSearch {
            h,
            k,
            classes,
            terms,
            group_supersets,
        }
    }

    fn count(&self, mult: &[usize]) -> i128 {
        let k = self.k as i128;
        let mut total: i128 = 0;
        for (even, isolated, ids) in &self.terms {
            let mut term = k.pow(*isolated as u32);
            for &g in ids {
                let shared: usize = self.group_supersets[g].iter().map(|&s| mult[s]).sum();
                term *= shared as i128;
                if term == 0 {
                    break;
                }
            }
            if *even {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    fn run(&self, budget: &Budget) -> Result<ListColorMin> {
        let mut state = SearchState {
            mult: vec![0; self.classes.len()],
            load: vec![0; self.h.n()],
            nodes: 0,
            best: None,
        };
        self.descend(0, &mut state, budget)?;
        let (value, mult) = state.best.expect("the empty multiset is always visited");
        Ok(ListColorMin {
            k: self.k,
            value: ColoringCount(BigUint::try_from(value).expect("counts are non-negative")),
            witness: self.witness(&mult),
            nodes: state.nodes,
            classes: self.classes.len(),
        })
    }

    fn descend(&self, j: usize, st: &mut SearchState, budget: &Budget) -> Result<()> {
        st.nodes += 1;
        if st.nodes > budget.search_nodes {
            return Err(Error::budget(
                "list-assignment search nodes",
                format!(">{}", budget.search_nodes),
                budget.search_nodes,
            ));
        }
        if j == self.classes.len() {
            let value = self.count(&st.mult);
            if st.best.as_ref().is_none_or(|(b, _)| value < *b) {
                st.best = Some((value, st.mult.clone()));
            }
            return Ok(());
        }
        let class = self.classes[j];
        let verts: Vec<usize> = (0..self.h.n()).filter(|&v| class >> v & 1 == 1).collect();
        let room = verts.iter().map(|&v| self.k - st.load[v]).min().unwrap_or(0);
        for t in 0..=room {
            st.mult[j] = t;
            for &v in &verts {
                st.load[v] += t;
            }
            let res = self.descend(j + 1, st, budget);
            for &v in &verts {
                st.load[v] -= t;
            }
            res?;
        }
        st.mult[j] = 0;
        Ok(())
    }

    fn witness(&self, mult: &[usize]) -> Assignment {
        let n = self.h.n();
        let mut lists: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut next: u32 = 1;
        for (j, &t) in mult.iter().enumerate() {
            for _ in 0..t {
                for (v, list) in lists.iter_mut().enumerate() {
                    if self.classes[j] >> v & 1 == 1 {
                        list.push(next);
                    }
                }
                next += 1;
            }
        }
        for list in lists.iter_mut() {
            while list.len() < self.k {
                list.push(next);
                next += 1;
            }
        }
        Assignment::new(self.k, lists).expect("loads never exceed k")
    }
}

struct SearchState {
    mult: Vec<usize>,
    load: Vec<usize>,
    nodes: u64,
    best: Option<(i128, Vec<usize>)>,
}

/// Smallest `q` with `P(H,q) > 0`.
pub fn chi(h: &Hypergraph, budget: &Budget) -> Result<u64> {
    let p = chromatic_polynomial_ie(h, budget)?;
    Ok(chi_from_polynomial(&p, h.n()))
}

fn chi_from_polynomial(p: &IntPolynomial, n: usize) -> u64 {
    (1..=n.max(1) as u64)
        .find(|&q| p.eval_at(q).is_positive())
        .unwrap_or(n.max(1) as u64)
}

/// Smallest `q` such that every `q`-assignment admits an `L`-colouring,
/// i.e. `P_l(H,q) > 0`.
pub fn chi_list(h: &Hypergraph, budget: &Budget) -> Result<u64> {
    let start = chi(h, budget)?;
    // greedy colouring succeeds once q exceeds the maximum degree, so q = m + 1 always works
    let cap = h.m() as u64 + 1;
    for q in start..=cap.max(start) {
        if !plmin_exact(h, q as usize, budget)?.value.0.is_zero() {
            return Ok(q);
        }
    }
    Ok(cap.max(start))
}

/// `P(H,k)` and `P_l(H,k)` at one `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdRow {
    pub k: u64,
    pub chromatic: BigInt,
    pub list_min: ColoringCount,
}

impl ThresholdRow {
    pub fn equal(&self) -> bool {
        self.list_min.to_bigint() == self.chromatic
    }
}

/// Colouring thresholds observed over `1..=kmax`. The `tau` values are
/// bounded-range observations: equality above `kmax` is not checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmpiricalThresholds {
    pub kmax: u64,
    pub chi: u64,
    pub chi_list: u64,
    pub rows: Vec<ThresholdRow>,
    /// Smallest `q <= kmax` with `P_l = P` on `q..=kmax`; `None` if they
    /// differ at `kmax`.
    pub tau_prime: Option<u64>,
    /// Smallest `q <= kmax` with `P_l = P > 0` on `q..=kmax`.
    pub tau: Option<u64>,
}

impl EmpiricalThresholds {
    /// `tau = max(tau', chi)` on the observed values.
    pub fn identity_holds(&self) -> bool {
        match self.tau_prime {
            Some(tp) if self.chi <= self.kmax => self.tau == Some(tp.max(self.chi)),
            _ => self.tau.is_none(),
        }
    }
}

/// Smallest `q <= kmax` with `P_l(H,k) = P(H,k)` for every `q <= k <= kmax`.
pub fn tau_prime_empirical(h: &Hypergraph, kmax: u64, budget: &Budget) -> Result<Option<u64>> {
    let p = chromatic_polynomial_ie(h, budget)?;
    let rows = threshold_rows(h, &p, kmax, budget)?;
    Ok(suffix_start(&rows, |r| r.equal()))
}

pub fn thresholds(h: &Hypergraph, kmax: u64, budget: &Budget) -> Result<EmpiricalThresholds> {
    if kmax == 0 {
        return Err(Error::PreconditionViolated("kmax must be at least 1".into()));
    }
    let p = chromatic_polynomial_ie(h, budget)?;
    let rows = threshold_rows(h, &p, kmax, budget)?;
    let tau_prime = suffix_start(&rows, |r| r.equal());
    let tau = suffix_start(&rows, |r| r.equal() && r.chromatic.is_positive());
    Ok(EmpiricalThresholds {
        kmax,
        chi: chi_from_polynomial(&p, h.n()),
        chi_list: chi_list(h, budget)?,
        rows,
        tau_prime,
        tau,
    })
}

fn threshold_rows(
    h: &Hypergraph,
    p: &IntPolynomial,
    kmax: u64,
    budget: &Budget,
) -> Result<Vec<ThresholdRow>> {
    (1..=kmax)
        .map(|k| {
            Ok(ThresholdRow {
                k,
                chromatic: p.eval_at(k),
                list_min: plmin_exact(h, k as usize, budget)?.value,
            })
        })
        .collect()
}

fn suffix_start(rows: &[ThresholdRow], pred: impl Fn(&ThresholdRow) -> bool) -> Option<u64> {
    let mut start = None;
    for row in rows.iter().rev() {
        if !pred(row) {
            break;
        }
        start = Some(row.k);
    }
    start
}

impl ListColorMin {
    pub fn equals_chromatic(&self, p: &IntPolynomial) -> bool {
        self.value.to_bigint() == p.eval_at(self.k as u64)
    }
}
