//! Certificates built on the per-edge factor: non-negativity (any `k`),
//! the small-`m` lemma, the `m >= 5` margin of `1/50`, and the sampled
//! list-colouring gap.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::factor::{pp15_from_table, FactorTable};
use crate::budget::Budget;
use crate::chromatic::count_proper_colorings;
use crate::deltacycles::{chromatic_polynomial_from_family, Eta, NbFamily};
use crate::error::{Error, Result};
use crate::exact::{pow_k, Rational};
use crate::hypergraph::Hypergraph;
use crate::listcolor::{
    alpha_profile, count_l_colorings, count_l_colorings_from_family, Assignment,
};
use crate::random::{rng, sample_assignments};
use crate::report::{CertificateReport, Check, Subject};

/// Default number of sampled assignments for [`certify_th41`].
pub const DEFAULT_SAMPLES: usize = 200;

fn require_k(k: u64) -> Result<()> {
    if k == 0 {
        return Err(Error::PreconditionViolated("k must be at least 1".into()));
    }
    Ok(())
}

fn int(v: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn fifty_th() -> BigRational {
    BigRational::new(1.into(), 50.into())
}

/// `F(H,e,k) >= 0` for every edge. A pass means `P(H,L) >= P(H,k)` for
/// every `k`-assignment `L`.
pub fn certify_cor31(h: &Hypergraph, eta: &Eta, k: u64, budget: &Budget) -> Result<CertificateReport> {
    require_k(k)?;
    let table = FactorTable::compute(h, eta, budget)?;
    Ok(cor31_from_table(&table, k))
}

pub fn cor31_from_table(table: &FactorTable, k: u64) -> CertificateReport {
    let mut report = CertificateReport::new("cor31");
    for e in 0..table.m() {
        let f = table.value(e, k);
        report.push(
            Check::new(Subject::Edge { edge: e }, !f.is_negative())
                .with_values(f.into(), Rational::zero()),
        );
    }
    report
}

/// For `m <= 4`: at each edge with `|E_{r-1}(e)| <= 1` and `k >= 2`, or
/// `|E_{r-1}(e)| >= 2` and `k >= m - 1`, checks `F(H,e,k) >= 0`. Edges
/// where neither case applies are reported outside the hypothesis.
pub fn certify_len0(h: &Hypergraph, eta: &Eta, k: u64, budget: &Budget) -> Result<CertificateReport> {
    require_k(k)?;
    if h.m() > 4 {
        return Err(Error::WrongRegime(format!(
            "the small-size lemma needs m <= 4, got m = {}",
            h.m()
        )));
    }
    let table = FactorTable::compute(h, eta, budget)?;
    let m = h.m() as u64;
    let mut report = CertificateReport::new("len0");
    for e in 0..table.m() {
        let a = table.ew_len(e);
        let in_hyp = (a <= 1 && k >= 2) || (a >= 2 && k + 1 >= m);
        let f = table.value(e, k);
        let check = Check::new(Subject::Edge { edge: e }, !f.is_negative())
            .with_values(f.into(), Rational::zero())
            .with_note(format!("|E_(r-1)(e)| = {a}"));
        report.push(if in_hyp { check } else { check.outside_hypothesis() });
    }
    Ok(report)
}

fn prn1_regime(h: &Hypergraph) -> Result<usize> {
    if h.m() < 5 {
        return Err(Error::WrongRegime(format!(
            "the 1/50 margin needs m >= 5, got m = {}",
            h.m()
        )));
    }
    let r = h.require_uniform()?;
    if r < 3 {
        return Err(Error::WrongRegime(format!(
            "the 1/50 margin needs r >= 3, got r = {r}"
        )));
    }
    Ok(r)
}

/// For `m >= 5`, `r >= 3`: at each edge with `|E_{r-1}(e)| <= 0.8(m-1)`
/// and `k >= 0.6(m-1) + 0.5|E_{r-1}(e)|`, checks `F(H,e,k) > 1/50`
/// exactly. Other edges are reported outside the hypothesis.
pub fn certify_prn1(h: &Hypergraph, eta: &Eta, k: u64, budget: &Budget) -> Result<CertificateReport> {
    require_k(k)?;
    prn1_regime(h)?;
    let table = FactorTable::compute(h, eta, budget)?;
    Ok(prn1_from_table(h, &table, k))
}

pub fn prn1_from_table(h: &Hypergraph, table: &FactorTable, k: u64) -> CertificateReport {
    let m1 = h.m() as u64 - 1;
    let mut report = CertificateReport::new("prn1");
    let mut outside = 0usize;
    for e in 0..table.m() {
        let a = table.ew_len(e) as u64;
        let in_hyp = 5 * a <= 4 * m1 && 10 * k >= 6 * m1 + 5 * a;
        let f = table.value(e, k);
        let check = Check::new(Subject::Edge { edge: e }, f > fifty_th())
            .with_values(f.into(), fifty_th().into())
            .with_note(format!("|E_(r-1)(e)| = {a}"));
        if in_hyp {
            report.push(check);
        } else {
            outside += 1;
            report.push(check.outside_hypothesis());
        }
    }
    report.note_value("edges_outside_hypothesis", Rational::integer(outside));
    report
}

/// The `i`-th paired tail of `F(H,e,k)` against its lower bound:
/// `sum_{A in NB_{2i-1}(e)} k^x/(2i-1) - sum_{A in NB_{2i}(e)} k^x
/// >= -((m-2i) |NB_{2i}(e)| / (m-2i+1)) k^(1-2i)`, `x = c(A) - 1 - (n-r)`.
pub fn check_le35(
    h: &Hypergraph,
    eta: &Eta,
    e: usize,
    k: u64,
    i: usize,
    budget: &Budget,
) -> Result<CertificateReport> {
    require_k(k)?;
    h.check_edge(e)?;
    let m = h.m();
    if i < 2 || 2 * i > m {
        return Err(Error::WrongRegime(format!(
            "needs 2 <= i <= m/2, got i = {i}, m = {m}"
        )));
    }
    let r = h.require_uniform()?;
    let nb = NbFamily::compute(h, eta, budget)?;
    let shift = 1 + h.n() as i64 - r as i64;
    let term = |a| pow_k(k, h.component_count(a) as i64 - shift);
    let odd = nb
        .containing_of_size(e, 2 * i - 1)
        .fold(BigRational::zero(), |acc, a| acc + term(a))
        / int(2 * i - 1);
    let even_sets: Vec<_> = nb.containing_of_size(e, 2 * i).collect();
    let even = even_sets
        .iter()
        .fold(BigRational::zero(), |acc, &a| acc + term(a));
    let lhs = odd - even;
    let rhs = -(int(m - 2 * i) * int(even_sets.len()) / int(m - 2 * i + 1))
        * pow_k(k, 1 - 2 * i as i64);
    let mut report = CertificateReport::new("le35");
    report.push(
        Check::new(Subject::Edge { edge: e }, lhs >= rhs)
            .with_values(lhs.into(), rhs.into())
            .with_note(format!("i = {i}")),
    );
    Ok(report)
}

/// `P(H,k)` by enumeration when `k^n` fits the colouring budget, otherwise
/// from the family expansion.
pub fn exact_chromatic(h: &Hypergraph, nb: &NbFamily, k: u64, budget: &Budget) -> Result<BigInt> {
    if budget.check_colorings(k, h.n()).is_ok() {
        Ok(count_proper_colorings(h, k, budget)?.to_bigint())
    } else {
        Ok(chromatic_polynomial_from_family(h, nb).eval_at(k))
    }
}

/// `P(H,L)` under the same rule as [`exact_chromatic`], with the method used.
pub fn exact_list_count(
    h: &Hypergraph,
    nb: &NbFamily,
    l: &Assignment,
    budget: &Budget,
) -> Result<(BigInt, &'static str)> {
    if budget.check_colorings(l.k() as u64, h.n()).is_ok() {
        Ok((count_l_colorings(h, l, budget)?.to_bigint(), "enumeration"))
    } else {
        Ok((count_l_colorings_from_family(h, l, nb)?.to_bigint(), "expansion"))
    }
}

/// `P(H,L) - P(H,k)` exactly, with the method used for `P(H,L)`.
pub fn exact_difference(
    h: &Hypergraph,
    nb: &NbFamily,
    l: &Assignment,
    budget: &Budget,
) -> Result<(BigInt, &'static str)> {
    let pk = exact_chromatic(h, nb, l.k() as u64, budget)?;
    let (pl, method) = exact_list_count(h, nb, l, budget)?;
    Ok((pl - pk, method))
}

/// Compares the factor bound `k^(n-r) sum alpha(e,L) F(H,e,k)` with the
/// exact difference `P(H,L) - P(H,k)`.
pub fn verify_pp15(h: &Hypergraph, eta: &Eta, l: &Assignment, budget: &Budget) -> Result<CertificateReport> {
    let table = FactorTable::compute(h, eta, budget)?;
    let bound = pp15_from_table(h, &table, l)?;
    let (diff, method) = exact_difference(h, &table.nb, l, budget)?;
    let diff = BigRational::from_integer(diff);
    let mut report = CertificateReport::new("pp15");
    report.push(
        Check::new(
            Subject::Assignment {
                lists: l.lists().to_vec(),
            },
            diff >= bound,
        )
        .with_values(diff.into(), bound.into())
        .with_note(method),
    );
    Ok(report)
}

/// Checks `P(H,L) - P(H,k) >= k^(n-r) alpha(H,L) / 50` with exact counts,
/// for `L` if given, otherwise for `samples` seeded assignments (the
/// constant one, near-constant perturbations and random lists from a
/// palette of `2k`).
///
/// Per assignment it also checks that the factor bound lies between the
/// two sides: it never exceeds the difference, and when every edge has
/// `F > 1/50` it is at least the right-hand side. The per-edge margin
/// report is folded in.
pub fn certify_th41(
    h: &Hypergraph,
    eta: &Eta,
    k: u64,
    l: Option<&Assignment>,
    samples: usize,
    seed: u64,
    budget: &Budget,
) -> Result<CertificateReport> {
    require_k(k)?;
    let r = prn1_regime(h)?;
    let stats = h.struct_stats();
    let gamma = stats.gamma()? as u64;
    let m1 = h.m() as u64 - 1;
    if 5 * gamma > 4 * m1 {
        return Err(Error::WrongRegime(format!(
            "needs gamma <= 0.8(m-1), got gamma = {gamma}, m = {}",
            h.m()
        )));
    }
    if 10 * k < 6 * m1 + 5 * gamma {
        return Err(Error::WrongRegime(format!(
            "needs k >= 0.6(m-1) + 0.5 gamma = {}, got k = {k}",
            Rational::new(6 * m1 + 5 * gamma, 10)
        )));
    }
    let assignments = match l {
        Some(l) => {
            if l.k() as u64 != k {
                return Err(Error::InvalidAssignment(format!(
                    "list size {} does not match k = {k}",
                    l.k()
                )));
            }
            l.check_for(h)?;
            vec![l.clone()]
        }
        None => sample_assignments(&mut rng(seed), h.n(), k as usize, samples),
    };

    let table = FactorTable::compute(h, eta, budget)?;
    let margin = prn1_from_table(h, &table, k);
    let margin_holds = margin.passed;
    let scale = pow_k(k, h.n() as i64 - r as i64);
    let pk = exact_chromatic(h, &table.nb, k, budget)?;
    let mut report = CertificateReport::new("th41");
    let mut min_gap: Option<BigRational> = None;
    for l in &assignments {
        let alpha = alpha_profile(h, l)?.total;
        let rhs = &scale * int(alpha) * fifty_th();
        let (pl, method) = exact_list_count(h, &table.nb, l, budget)?;
        let diff = BigRational::from_integer(pl - &pk);
        let bound = pp15_from_table(h, &table, l)?;
        let subject = Subject::Assignment {
            lists: l.lists().to_vec(),
        };
        let gap = &diff - &rhs;
        if min_gap.as_ref().is_none_or(|g| gap < *g) {
            min_gap = Some(gap);
        }
        report.push(
            Check::new(subject.clone(), diff >= rhs)
                .with_values(diff.clone().into(), rhs.clone().into())
                .with_note(format!("difference vs alpha/50 ({method})")),
        );
        report.push(
            Check::new(subject.clone(), bound <= diff)
                .with_values(bound.clone().into(), diff.into())
                .with_note("factor bound vs difference"),
        );
        if margin_holds {
            report.push(
                Check::new(subject, bound >= rhs)
                    .with_values(bound.into(), rhs.into())
                    .with_note("factor bound vs alpha/50"),
            );
        }
    }
    report.note_value("assignments", Rational::integer(assignments.len()));
    if let Some(g) = min_gap {
        report.note_value("min_gap", g.into());
    }
    report.absorb(margin);
    Ok(report)
}
