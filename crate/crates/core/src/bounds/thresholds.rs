use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::exact::Rational;
use crate::hypergraph::Hypergraph;

/// One upper bound on `tau'(H)` and whether its hypotheses hold for `H`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundValue {
    pub value: f64,
    /// Present when the formula is rational.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<Rational>,
    pub valid: bool,
    pub condition: &'static str,
}

/// The known upper bounds on `tau'(H)`. Formulas that cannot be evaluated
/// (gamma undefined for non-uniform input, rho undefined for `m < 2`,
/// `log(m-1)` not positive) are `None`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThresholdBounds {
    pub m: usize,
    pub r: Option<usize>,
    pub gamma: Option<usize>,
    pub rho: Option<usize>,
    /// `0.6(m-1) + 0.5 gamma`
    pub th4_1: Option<BoundValue>,
    /// `m - 1`
    pub ssize: BoundValue,
    /// `1.1346(m-1)`
    pub wanghy: BoundValue,
    /// `2.4(m-1) / (rho ln(m-1))`
    pub th4_0_ln: Option<BoundValue>,
    /// `2.4(m-1) / (rho log2(m-1))`
    pub th4_0_log2: Option<BoundValue>,
}

fn ratio(num: i64, den: i64) -> Rational {
    Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

pub fn threshold_bounds(h: &Hypergraph) -> ThresholdBounds {
    let stats = h.struct_stats();
    let m = h.m();
    let m1 = m as i64 - 1;
    let r3 = stats.r.is_some_and(|r| r >= 3);

    let th4_1 = stats.gamma.map(|g| {
        let exact = ratio(18 * m1 + 15 * g as i64, 30);
        BoundValue {
            value: exact.to_f64(),
            exact: Some(exact),
            // gamma <= 0.8(m-1)  <=>  5 gamma <= 4(m-1)
            valid: r3 && m >= 5 && 5 * g as i64 <= 4 * m1,
            condition: "r-uniform, r >= 3, m >= 5, gamma <= 0.8(m-1)",
        }
    });
    let ssize = BoundValue {
        value: m1 as f64,
        exact: Some(ratio(m1, 1)),
        valid: stats.r.is_some() && (1..=4).contains(&m),
        condition: "uniform, 1 <= m <= 4",
    };
    let wanghy = {
        let exact = ratio(11346 * m1, 10000);
        BoundValue {
            value: exact.to_f64(),
            exact: Some(exact),
            valid: r3,
            condition: "r-uniform, r >= 3",
        }
    };
    let th4_0 = |log: fn(f64) -> f64| {
        let rho = stats.rho?;
        if m1 < 2 {
            return None;
        }
        let valid = r3 && rho >= 2 && 2 * m1 >= (rho as i64).pow(3);
        Some(BoundValue {
            value: 2.4 * m1 as f64 / (rho as f64 * log(m1 as f64)),
            exact: None,
            valid,
            condition: "r-uniform, r >= 3, rho >= 2, m >= rho^3/2 + 1",
        })
    };
    ThresholdBounds {
        m,
        r: stats.r,
        gamma: stats.gamma,
        rho: stats.rho,
        th4_1,
        ssize,
        wanghy,
        th4_0_ln: th4_0(f64::ln),
        th4_0_log2: th4_0(f64::log2),
    }
}
