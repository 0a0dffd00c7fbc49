//! Delta-cycles, broken delta-cycles under an edge ordering, the family of
//! edge sets containing no broken delta-cycle, and the reduced expansion of
//! the chromatic polynomial over that family.
//!
//! A delta-cycle is an inclusion-minimal edge set `C` in which every edge is
//! covered by the vertices of the remaining edges of `C`. Removing the edge
//! of lowest rank under the ordering gives a broken delta-cycle.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::budget::Budget;
use crate::chromatic::{signed_component_sum, IntPolynomial};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::hypergraph::{EdgeSet, Hypergraph};
use crate::report::{CertificateReport, Check, Subject};

/// A bijection from edges to ranks `0..m`; `rank(e) + 1` is the 1-based
/// position of edge `e` in the ordering.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Eta {
    ranks: Vec<usize>,
}

impl Eta {
    pub fn identity(m: usize) -> Self {
        Eta {
            ranks: (0..m).collect(),
        }
    }

    pub fn reversed(m: usize) -> Self {
        Eta {
            ranks: (0..m).rev().collect(),
        }
    }

    pub fn from_ranks(ranks: Vec<usize>) -> Result<Self> {
        let m = ranks.len();
        let mut seen = vec![false; m];
        for &r in &ranks {
            if r >= m || seen[r] {
                return Err(Error::InvalidEta(format!(
                    "{ranks:?} is not a permutation of 0..{m}"
                )));
            }
            seen[r] = true;
        }
        Ok(Eta { ranks })
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn rank(&self, edge: usize) -> usize {
        self.ranks[edge]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn check_for(&self, h: &Hypergraph) -> Result<()> {
        if self.len() != h.m() {
            return Err(Error::InvalidEta(format!(
                "ordering has {} entries, hypergraph has {} edges",
                self.len(),
                h.m()
            )));
        }
        Ok(())
    }

    /// Edge of `set` with the smallest rank.
    pub fn min_edge(&self, set: EdgeSet) -> Option<usize> {
        set.iter().min_by_key(|&e| self.ranks[e])
    }

    /// All `m!` orderings, lexicographic in the rank vector.
    pub fn all(m: usize) -> Vec<Eta> {
        let mut out = Vec::new();
        let mut ranks: Vec<usize> = (0..m).collect();
        loop {
            out.push(Eta {
                ranks: ranks.clone(),
            });
            // next permutation
            let Some(i) = (1..m).rev().find(|&i| ranks[i - 1] < ranks[i]) else {
                break;
            };
            let j = (i..m).rev().find(|&j| ranks[j] > ranks[i - 1]).unwrap();
            ranks.swap(i - 1, j);
            ranks[i..].reverse();
        }
        out
    }
}

impl FromStr for Eta {
    type Err = Error;

    /// Comma-separated ranks, e.g. `"2,0,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Eta::from_ranks(Vec::new());
        }
        let ranks = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidEta(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Eta::from_ranks(ranks)
    }
}

impl fmt::Display for Eta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ranks.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DeltaCycle(pub EdgeSet);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BrokenDeltaCycle(pub EdgeSet);

/// Every edge of `a` lies inside the vertex set of the other edges of `a`.
pub fn has_covering_property(h: &Hypergraph, a: EdgeSet) -> bool {
    !a.is_empty()
        && a.iter().all(|e| {
            let rest = h.vertices_of(a.without(e));
            h.edge_mask(e) & !rest == 0
        })
}

/// All delta-cycles in ascending bitmask order.
pub fn enumerate_delta_cycles(h: &Hypergraph, budget: &Budget) -> Result<Vec<DeltaCycle>> {
    budget.check_subsets(h.m())?;
    let mut covering: Vec<EdgeSet> = EdgeSet::all(h.m())
        .filter(|&a| has_covering_property(h, a))
        .collect();
    covering.sort_by_key(|a| (a.len(), a.0));
    let mut minimal: Vec<EdgeSet> = Vec::new();
    for a in covering {
        if !minimal.iter().any(|c| c.is_subset_of(a)) {
            minimal.push(a);
        }
    }
    minimal.sort();
    Ok(minimal.into_iter().map(DeltaCycle).collect())
}

/// Broken delta-cycles, deduplicated, ascending bitmask order.
pub fn broken_delta_cycles(cycles: &[DeltaCycle], eta: &Eta) -> Vec<BrokenDeltaCycle> {
    let mut out: Vec<EdgeSet> = cycles
        .iter()
        .filter_map(|c| eta.min_edge(c.0).map(|e| c.0.without(e)))
        .collect();
    out.sort();
    out.dedup();
    out.into_iter().map(BrokenDeltaCycle).collect()
}

/// Edge sets containing no broken delta-cycle, ascending bitmask order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NbFamily {
    m: usize,
    cycles: Vec<DeltaCycle>,
    broken: Vec<BrokenDeltaCycle>,
    members: Vec<EdgeSet>,
}

impl NbFamily {
    pub fn compute(h: &Hypergraph, eta: &Eta, budget: &Budget) -> Result<Self> {
        eta.check_for(h)?;
        let cycles = enumerate_delta_cycles(h, budget)?;
        Ok(NbFamily::from_cycles(h.m(), cycles, eta))
    }

    /// Reuses a delta-cycle list computed once for several orderings.
    pub fn from_cycles(m: usize, cycles: Vec<DeltaCycle>, eta: &Eta) -> Self {
        let broken = broken_delta_cycles(&cycles, eta);
        let members = EdgeSet::all(m)
            .filter(|&a| !broken.iter().any(|b| b.0.is_subset_of(a)))
            .collect();
        NbFamily {
            m,
            cycles,
            broken,
            members,
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn delta_cycles(&self) -> &[DeltaCycle] {
        &self.cycles
    }

    pub fn broken(&self) -> &[BrokenDeltaCycle] {
        &self.broken
    }

    pub fn members(&self) -> &[EdgeSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: EdgeSet) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    /// `NB(H,e)`.
    pub fn containing(&self, e: usize) -> impl Iterator<Item = EdgeSet> + '_ {
        self.members.iter().copied().filter(move |a| a.contains(e))
    }

    /// `NB_i(H,e)`.
    pub fn containing_of_size(&self, e: usize, i: usize) -> impl Iterator<Item = EdgeSet> + '_ {
        self.containing(e).filter(move |a| a.len() == i)
    }

    /// `NB*_2(H,e)`: pairs `{e,e'}` in the family with `e'` in `ew`, where
    /// `ew` is `E_{r-1}(e)`.
    pub fn star_pairs(&self, e: usize, ew: EdgeSet) -> impl Iterator<Item = EdgeSet> + '_ {
        self.containing_of_size(e, 2)
            .filter(move |a| a.without(e).is_subset_of(ew))
    }

    pub fn is_downward_closed(&self) -> bool {
        self.members
            .iter()
            .all(|&a| a.iter().all(|e| self.contains(a.without(e))))
    }

    /// Broken delta-cycles with fewer than two edges. None are expected for
    /// antichain hypergraphs; any hit is returned rather than panicking.
    pub fn short_broken_cycles(&self) -> Vec<BrokenDeltaCycle> {
        self.broken.iter().copied().filter(|b| b.0.len() < 2).collect()
    }
}

/// The signed sum of `k^c(A)` over the family.
///
/// This is `P(H,k)` on every uniform hypergraph tried. With mixed edge sizes
/// a delta-cycle can lose connectivity when its first edge is removed, and
/// then the sum may differ from `P(H,k)`; compare with
/// [`chromatic_polynomial_ie`](crate::chromatic::chromatic_polynomial_ie)
/// when the input is not uniform.
pub fn chromatic_polynomial_nbc(h: &Hypergraph, eta: &Eta, budget: &Budget) -> Result<IntPolynomial> {
    let nb = NbFamily::compute(h, eta, budget)?;
    Ok(chromatic_polynomial_from_family(h, &nb))
}

pub fn chromatic_polynomial_from_family(h: &Hypergraph, nb: &NbFamily) -> IntPolynomial {
    signed_component_sum(h, nb.members().iter().copied())
}

/// Checks `c(A) <= n - r - |A| + 2` for every family member with `|A| >= 2`.
pub fn check_wanghyc(h: &Hypergraph, eta: &Eta, budget: &Budget) -> Result<CertificateReport> {
    let nb = NbFamily::compute(h, eta, budget)?;
    check_wanghyc_family(h, &nb)
}

pub fn check_wanghyc_family(h: &Hypergraph, nb: &NbFamily) -> Result<CertificateReport> {
    let mut report = CertificateReport::new("wanghyc");
    if h.m() == 0 {
        return Ok(report);
    }
    let r = h.require_uniform()? as i64;
    if r < 3 {
        report.warn(format!("r = {r}: the component bound is stated for r >= 3"));
    }
    let n = h.n() as i64;
    let mut min_slack: Option<i64> = None;
    let mut checked = 0u64;
    for &a in nb.members().iter().filter(|a| a.len() >= 2) {
        let c = h.component_count(a) as i64;
        let bound = n - r - a.len() as i64 + 2;
        let slack = bound - c;
        min_slack = Some(min_slack.map_or(slack, |s| s.min(slack)));
        checked += 1;
        report.push(
            Check::new(Subject::EdgeSet { edges: a.to_vec() }, c <= bound)
                .with_values(Rational::integer(c), Rational::integer(bound)),
        );
    }
    report.note_value("sets_checked", Rational::integer(checked));
    if let Some(s) = min_slack {
        report.note_value("min_slack", Rational::integer(BigInt::from(s)));
    }
    Ok(report)
}
