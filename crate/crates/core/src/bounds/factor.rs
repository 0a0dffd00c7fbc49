//! The per-edge factor `F(H,e,k)` whose positivity controls
//! `P(H,L) - P(H,k)`, and the lower bound `k^(n-r) * sum alpha(e,L) F(H,e,k)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::deltacycles::{Eta, NbFamily};
use crate::error::{Error, Result};
use crate::exact::{pow_k, LaurentRational};
use crate::hypergraph::{EdgeSet, Hypergraph, StructStats};
use crate::listcolor::{alpha_profile, beta, Assignment};

/// Everything needed to evaluate `F(H,e,k)` for every edge of a uniform
/// hypergraph under one edge ordering. The factors are Laurent polynomials
/// in `k`, so they are built once and evaluated at any `k`.
#[derive(Debug, Clone)]
pub struct FactorTable {
    pub r: usize,
    pub stats: StructStats,
    pub nb: NbFamily,
    factors: Vec<LaurentRational>,
}

impl FactorTable {
    pub fn compute(h: &Hypergraph, eta: &Eta, budget: &Budget) -> Result<Self> {
        let nb = NbFamily::compute(h, eta, budget)?;
        FactorTable::from_family(h, nb)
    }

    pub fn from_family(h: &Hypergraph, nb: NbFamily) -> Result<Self> {
        let stats = h.struct_stats();
        let r = match h.uniformity() {
            Some(r) => r,
            None if h.m() == 0 => 0,
            None => return Err(Error::NonUniform),
        };
        let factors = (0..h.m())
            .map(|e| edge_factor(h, &nb, &stats, r, e))
            .collect::<Result<Vec<_>>>()?;
        Ok(FactorTable {
            r,
            stats,
            nb,
            factors,
        })
    }

    pub fn m(&self) -> usize {
        self.factors.len()
    }

    pub fn laurent(&self, e: usize) -> &LaurentRational {
        &self.factors[e]
    }

    pub fn value(&self, e: usize, k: u64) -> BigRational {
        self.factors[e].eval(k)
    }

    /// `|E_{r-1}(e)|`.
    pub fn ew_len(&self, e: usize) -> usize {
        self.stats.ew(e).map(EdgeSet::len).unwrap_or(0)
    }
}

/// `1 - |NB*_2|/k - |NB_2 \ NB*_2|/k^2 + sum_{|A| odd >= 3} k^x/|A|
/// - sum_{|A| even >= 4} k^x`, with `x = c(A) - 1 - (n - r)` and `A`
/// ranging over family members containing `e`.
fn edge_factor(
    h: &Hypergraph,
    nb: &NbFamily,
    stats: &StructStats,
    r: usize,
    e: usize,
) -> Result<LaurentRational> {
    let ew = stats.ew(e)?;
    let star = nb.star_pairs(e, ew).count();
    let pairs = nb.containing_of_size(e, 2).count();
    let mut f = LaurentRational::constant(BigRational::one());
    f.add_term(-1, -BigRational::from_integer(BigInt::from(star)));
    f.add_term(-2, -BigRational::from_integer(BigInt::from(pairs - star)));
    let shift = 1 + h.n() as i64 - r as i64;
    for a in nb.containing(e).filter(|a| a.len() >= 3) {
        let exp = h.component_count(a) as i64 - shift;
        let size = a.len() as i64;
        let coeff = if size % 2 == 1 {
            BigRational::new(BigInt::one(), BigInt::from(size))
        } else {
            -BigRational::one()
        };
        f.add_term(exp, coeff);
    }
    Ok(f)
}

/// Exact `F(H,e,k)` together with its Laurent form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeFactor {
    pub edge: usize,
    pub k: u64,
    pub value: BigRational,
    pub laurent: LaurentRational,
}

pub fn f_eta(h: &Hypergraph, eta: &Eta, e: usize, k: u64, budget: &Budget) -> Result<EdgeFactor> {
    h.check_edge(e)?;
    if k == 0 {
        return Err(Error::PreconditionViolated("k must be at least 1".into()));
    }
    let table = FactorTable::compute(h, eta, budget)?;
    Ok(EdgeFactor {
        edge: e,
        k,
        value: table.value(e, k),
        laurent: table.laurent(e).clone(),
    })
}

/// `k^(n-r) * sum_e alpha(e,L) F(H,e,k)` with `k` the list size of `L`.
pub fn pp15_lower_bound(
    h: &Hypergraph,
    eta: &Eta,
    l: &Assignment,
    budget: &Budget,
) -> Result<BigRational> {
    let table = FactorTable::compute(h, eta, budget)?;
    pp15_from_table(h, &table, l)
}

pub fn pp15_from_table(h: &Hypergraph, table: &FactorTable, l: &Assignment) -> Result<BigRational> {
    let alpha = alpha_profile(h, l)?;
    let k = l.k() as u64;
    let sum = alpha
        .per_edge
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(e, &a)| BigRational::from_integer(BigInt::from(a)) * table.value(e, k))
        .fold(BigRational::zero(), |acc, x| acc + x);
    Ok(pow_k(k, h.n() as i64 - table.r as i64) * sum)
}

/// `sum_{A in NB} (-1)^|A| (beta(A,L) - k^c(A))`, which equals
/// `P(H,L) - P(H,k)`.
pub fn difference_expansion(h: &Hypergraph, nb: &NbFamily, l: &Assignment) -> Result<BigInt> {
    l.check_for(h)?;
    let k = BigInt::from(l.k());
    let mut total = BigInt::zero();
    for &a in nb.members() {
        let term = beta(h, l, a) - num_traits::pow(k.clone(), h.component_count(a));
        if a.len() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn single_edge_factor_is_one() {
        let g = h(5, &[&[0, 2, 4]]);
        for k in 1..5 {
            let f = f_eta(&g, &Eta::identity(1), 0, k, &Budget::default()).unwrap();
            assert_eq!(f.value, q(1, 1));
        }
    }

    #[test]
    fn two_edge_factors() {
        let b = Budget::default();
        let g = h(4, &[&[0, 1, 2], &[0, 1, 3]]);
        assert_eq!(f_eta(&g, &Eta::identity(2), 0, 2, &b).unwrap().value, q(1, 2));
        assert_eq!(f_eta(&g, &Eta::identity(2), 1, 2, &b).unwrap().value, q(1, 2));
        let g = h(5, &[&[0, 1, 2], &[2, 3, 4]]);
        let f = f_eta(&g, &Eta::identity(2), 0, 2, &b).unwrap();
        assert_eq!(f.value, q(3, 4));
        assert_eq!(f.laurent.coeff(-2), q(-1, 1));
    }

    #[test]
    fn factor_needs_uniform() {
        let g = h(4, &[&[0, 1], &[1, 2, 3]]);
        assert_eq!(
            f_eta(&g, &Eta::identity(2), 0, 2, &Budget::default()).unwrap_err(),
            Error::NonUniform
        );
        let g = h(3, &[&[0, 1, 2]]);
        assert!(f_eta(&g, &Eta::identity(1), 1, 2, &Budget::default()).is_err());
    }

    #[test]
    fn pp15_example() {
        let b = Budget::default();
        let g = h(4, &[&[0, 1, 2], &[0, 1, 3]]);
        let l = Assignment::new(2, vec![vec![1, 2], vec![1, 2], vec![1, 3], vec![1, 4]]).unwrap();
        assert_eq!(pp15_lower_bound(&g, &Eta::identity(2), &l, &b).unwrap(), q(2, 1));
        let c = Assignment::constant(4, 2);
        assert_eq!(pp15_lower_bound(&g, &Eta::identity(2), &c, &b).unwrap(), q(0, 1));
        let nb = NbFamily::compute(&g, &Eta::identity(2), &b).unwrap();
        assert_eq!(difference_expansion(&g, &nb, &l).unwrap(), BigInt::from(3));
        assert_eq!(difference_expansion(&g, &nb, &c).unwrap(), BigInt::from(0));
    }
}
