//! Two-sided bounds on `beta(A,L) - k^c(A)` and the product inequality
//! behind the upper side.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{pow_k, Rational};
use crate::hypergraph::{EdgeSet, Hypergraph};
use crate::listcolor::{alpha_profile, beta, Assignment};
use crate::report::{CertificateReport, Check, Subject};

struct SandwichTerms {
    diff: BigRational,
    /// `k^(c(A)-1) * sum_{e in A} alpha(e,L)`
    scaled_alpha: BigRational,
}

fn terms(h: &Hypergraph, l: &Assignment, a: EdgeSet) -> Result<SandwichTerms> {
    let alpha = alpha_profile(h, l)?;
    let k = l.k() as u64;
    let c = h.component_count(a) as i64;
    let beta = BigRational::from_integer(beta(h, l, a));
    let diff = beta - pow_k(k, c);
    let sum: usize = a.iter().map(|e| alpha.per_edge[e]).sum();
    let scaled_alpha = pow_k(k, c - 1) * BigRational::from_integer(BigInt::from(sum));
    Ok(SandwichTerms { diff, scaled_alpha })
}

/// `beta(A,L) - k^c(A) >= -k^(c(A)-1) * sum_{e in A} alpha(e,L)`.
pub fn check_pro31(h: &Hypergraph, l: &Assignment, a: EdgeSet) -> Result<CertificateReport> {
    let t = terms(h, l, a)?;
    let bound = -t.scaled_alpha;
    let mut report = CertificateReport::new("pro31");
    report.push(
        Check::new(Subject::EdgeSet { edges: a.to_vec() }, t.diff >= bound)
            .with_values(t.diff.into(), bound.into()),
    );
    Ok(report)
}

/// `beta(A,L) - k^c(A) <= -(k^(c(A)-1) / |A|) * sum_{e in A} alpha(e,L)`
/// for non-empty `A`.
pub fn check_pro32(h: &Hypergraph, l: &Assignment, a: EdgeSet) -> Result<CertificateReport> {
    if a.is_empty() {
        return Err(Error::PreconditionViolated(
            "the upper bound needs a non-empty edge set".into(),
        ));
    }
    let t = terms(h, l, a)?;
    let bound = -t.scaled_alpha / BigRational::from_integer(BigInt::from(a.len()));
    let mut report = CertificateReport::new("pro32");
    report.push(
        Check::new(Subject::EdgeSet { edges: a.to_vec() }, t.diff <= bound)
            .with_values(t.diff.into(), bound.into()),
    );
    Ok(report)
}

/// Both bounds for every edge set (the upper one for non-empty sets only).
pub fn check_sandwich_all(h: &Hypergraph, l: &Assignment) -> Result<CertificateReport> {
    let mut report = CertificateReport::new("pro31+pro32");
    for a in EdgeSet::all(h.m()) {
        report.absorb(check_pro31(h, l, a)?);
        if !a.is_empty() {
            report.absorb(check_pro32(h, l, a)?);
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lem14Verdict {
    /// `prod (x - d_i)`
    pub product: Rational,
    /// `x^s - x^(s-1) * sum q_i d_i / sum q_i`
    pub bound: Rational,
    pub holds: bool,
}

/// `prod (x - d_i) <= x^s - (x^(s-1) / sum q_i) * sum q_i d_i` for
/// non-negative `d`, positive `q` and `x >= max d`.
pub fn check_lem14(d: &[BigRational], q: &[BigRational], x: &BigRational) -> Result<Lem14Verdict> {
    if d.is_empty() || d.len() != q.len() {
        return Err(Error::PreconditionViolated(format!(
            "need 1 <= |d| = |q|, got |d| = {}, |q| = {}",
            d.len(),
            q.len()
        )));
    }
    if d.iter().any(Signed::is_negative) {
        return Err(Error::PreconditionViolated("d must be non-negative".into()));
    }
    if q.iter().any(|v| !v.is_positive()) {
        return Err(Error::PreconditionViolated("q must be positive".into()));
    }
    if d.iter().any(|di| di > x) {
        return Err(Error::PreconditionViolated("x must be at least max d".into()));
    }
    let s = d.len();
    let product = d
        .iter()
        .fold(BigRational::from_integer(1.into()), |acc, di| acc * (x - di));
    let q_sum = q.iter().fold(BigRational::zero(), |acc, v| acc + v);
    let weighted = d
        .iter()
        .zip(q)
        .fold(BigRational::zero(), |acc, (di, qi)| acc + di * qi);
    let bound = num_traits::pow(x.clone(), s) - num_traits::pow(x.clone(), s - 1) * weighted / q_sum;
    Ok(Lem14Verdict {
        holds: product <= bound,
        product: product.into(),
        bound: bound.into(),
    })
}
