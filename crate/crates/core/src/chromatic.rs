//! Chromatic polynomials by exhaustive colouring and by inclusion-exclusion
//! over edge subsets.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeSet, Hypergraph};

/// Integer polynomial in one variable `k`, coefficients indexed by power.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "PolynomialJson", into = "PolynomialJson")]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Horner evaluation.
    pub fn eval(&self, k: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * k + c)
    }

    pub fn eval_at(&self, k: u64) -> BigInt {
        self.eval(&BigInt::from(k))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (p, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "k")?,
                (1, false) => write!(f, "{mag}k")?,
                (_, true) => write!(f, "k^{p}")?,
                (_, false) => write!(f, "{mag}k^{p}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Wire format: `{"coeffs": ["<decimal>", ...]}`, index = power of `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub coeffs: Vec<String>,
}

impl TryFrom<PolynomialJson> for IntPolynomial {
    type Error = String;

    fn try_from(raw: PolynomialJson) -> std::result::Result<Self, String> {
        raw.coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(|e| format!("bad coefficient {s:?}: {e}")))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(IntPolynomial::new)
    }
}

impl From<IntPolynomial> for PolynomialJson {
    fn from(p: IntPolynomial) -> Self {
        PolynomialJson {
            coeffs: p.coeffs.iter().map(ToString::to_string).collect(),
        }
    }
}

/// An exact number of colourings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ColoringCount(pub BigUint);

impl ColoringCount {
    pub fn to_bigint(&self) -> BigInt {
        BigInt::from(self.0.clone())
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
}

impl From<u64> for ColoringCount {
    fn from(v: u64) -> Self {
        ColoringCount(BigUint::from(v))
    }
}

impl fmt::Display for ColoringCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Counts maps `v -> lists[v]` under which no edge is monochromatic, by
/// depth-first enumeration in vertex order. An edge is checked when its
/// largest vertex is coloured.
pub(crate) fn count_list_maps(h: &Hypergraph, lists: &[Vec<u32>]) -> u64 {
    let n = h.n();
    let mut closing: Vec<Vec<&[usize]>> = vec![Vec::new(); n];
    for e in h.edges() {
        closing[*e.last().expect("edges are non-empty")].push(e);
    }
    let mut colour = vec![0u32; n];
    fn go(v: usize, lists: &[Vec<u32>], closing: &[Vec<&[usize]>], colour: &mut [u32]) -> u64 {
        if v == lists.len() {
            return 1;
        }
        let mut total = 0;
        for &c in &lists[v] {
            colour[v] = c;
            let mono = closing[v]
                .iter()
                .any(|e| e.iter().all(|&u| colour[u] == c));
            if !mono {
                total += go(v + 1, lists, closing, colour);
            }
        }
        total
    }
    go(0, lists, &closing, &mut colour)
}

/// Number of proper `k`-colourings, by enumerating all `k^n` maps.
pub fn count_proper_colorings(h: &Hypergraph, k: u64, budget: &Budget) -> Result<ColoringCount> {
    if k == 0 {
        return Err(Error::PreconditionViolated("k must be at least 1".into()));
    }
    budget.check_colorings(k, h.n())?;
    let palette: Vec<u32> = (0..k as u32).collect();
    let lists = vec![palette; h.n()];
    Ok(count_list_maps(h, &lists).into())
}

/// `P(H,k) = sum over all A of (-1)^|A| k^c(A)`, ascending bitmask order.
pub fn chromatic_polynomial_ie(h: &Hypergraph, budget: &Budget) -> Result<IntPolynomial> {
    budget.check_subsets(h.m())?;
    Ok(signed_component_sum(h, EdgeSet::all(h.m())))
}

/// `sum (-1)^|A| k^c(A)` over the given edge sets.
pub(crate) fn signed_component_sum<I>(h: &Hypergraph, sets: I) -> IntPolynomial
where
    I: IntoIterator<Item = EdgeSet>,
{
    let mut acc = vec![0i64; h.n() + 1];
    for a in sets {
        let c = h.component_count(a);
        if a.len() % 2 == 0 {
            acc[c] += 1;
        } else {
            acc[c] -= 1;
        }
    }
    IntPolynomial::new(acc.into_iter().map(BigInt::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn brute_force_examples() {
        let b = Budget::default();
        let two = h(4, &[&[0, 1, 2], &[0, 1, 3]]);
        assert_eq!(count_proper_colorings(&two, 2, &b).unwrap(), 10.into());
        assert_eq!(16 - 2 * 4 + 2, 10);
        let path = h(5, &[&[0, 1, 2], &[2, 3, 4]]);
        assert_eq!(count_proper_colorings(&path, 2, &b).unwrap(), 18.into());
        assert_eq!(count_proper_colorings(&path, 1, &b).unwrap(), 0.into());
    }

    #[test]
    fn brute_force_budget() {
        let b = Budget {
            colorings: 100,
            ..Budget::default()
        };
        let g = Hypergraph::edgeless(7).unwrap();
        assert!(matches!(
            count_proper_colorings(&g, 2, &b),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn ie_examples() {
        let b = Budget::default();
        let two = h(4, &[&[0, 1, 2], &[0, 1, 3]]);
        assert_eq!(
            chromatic_polynomial_ie(&two, &b).unwrap(),
            IntPolynomial::from_i64(&[0, 1, -2, 0, 1])
        );
        let three = h(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3]]);
        assert_eq!(
            chromatic_polynomial_ie(&three, &b).unwrap(),
            IntPolynomial::from_i64(&[0, 2, -3, 0, 1])
        );
        let empty = Hypergraph::edgeless(3).unwrap();
        assert_eq!(
            chromatic_polynomial_ie(&empty, &b).unwrap(),
            IntPolynomial::from_i64(&[0, 0, 0, 1])
        );
    }

    #[test]
    fn eval_examples() {
        let p = IntPolynomial::from_i64(&[0, 1, -2, 0, 1]);
        assert_eq!(p.eval_at(2), BigInt::from(10));
        assert_eq!(p.eval_at(0), BigInt::from(0));
        let q = IntPolynomial::from_i64(&[0, 1, 0, -2, 0, 1]);
        assert_eq!(q.eval_at(2), BigInt::from(18));
        assert_eq!(IntPolynomial::from_i64(&[7, 3]).eval_at(0), BigInt::from(7));
    }

    #[test]
    fn display_and_json() {
        let p = IntPolynomial::from_i64(&[0, 1, -2, 0, 1]);
        assert_eq!(p.to_string(), "k^4 - 2k^2 + k");
        assert_eq!(IntPolynomial::default().to_string(), "0");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"coeffs":["0","1","-2","0","1"]}"#);
        let back: IntPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
