//! The real-valued envelope `f(a,x,w)` that bounds `F(H,e,k)` from below
//! with `x = (m-1)/k`, `w = 1/(m-1)` and `a = |E_{r-1}(e)|/(m-1)`, and the
//! finite counting bound it is derived from.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::pow_k;

/// `f(a,x,w) = 1 - a x - (1-a) w x^2 + x - w x - sinh(x - w x)`.
///
/// Evaluated in `f64` using `sinh` directly, which keeps the relative error
/// near machine precision for the arguments used here (`x <= 2`).
pub fn f_axw(a: f64, x: f64, w: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::DomainError(format!("a = {a} outside [0, 1]")));
    }
    if !(x >= 0.0 && x.is_finite()) {
        return Err(Error::DomainError(format!("x = {x} must be finite and >= 0")));
    }
    if !(0.0..=0.25).contains(&w) {
        return Err(Error::DomainError(format!("w = {w} outside [0, 1/4]")));
    }
    let y = x - w * x;
    Ok(1.0 - a * x - (1.0 - a) * w * x * x + y - y.sinh())
}

/// `q(a) = 0.6 + 0.5 a`; `k >= q(a)(m-1)` is the degree threshold.
pub fn q_of(a: f64) -> f64 {
    0.6 + 0.5 * a
}

/// `d/da f(a, 1/q(a), 0) = (e^(2/(a+1.2)) + e^(-2/(a+1.2)) - 4.4) / (a+1.2)^2`.
pub fn edge_curve_slope(a: f64) -> f64 {
    let t = 2.0 / (a + 1.2);
    (t.exp() + (-t).exp() - 4.4) / ((a + 1.2) * (a + 1.2))
}

/// `f(a, 1/q(a), 0)` in closed form: `(3.2 - a)/(1.2 + a) - sinh(2/(a + 1.2))`.
pub fn edge_curve(a: f64) -> f64 {
    (3.2 - a) / (1.2 + a) - (2.0 / (a + 1.2)).sinh()
}

/// Bisects the sign change of [`edge_curve_slope`] inside `[lo, hi]`.
/// Returns `None` when the endpoints do not straddle a root.
pub fn slope_root(lo: f64, hi: f64) -> Option<f64> {
    let (mut lo, mut hi) = (lo, hi);
    let (flo, fhi) = (edge_curve_slope(lo), edge_curve_slope(hi));
    if flo.signum() == fhi.signum() {
        return None;
    }
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if edge_curve_slope(mid).signum() == flo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// `w_(s) = w (w-1) ... (w-s+1)` on integers.
fn falling(w: i64, s: usize) -> BigInt {
    (0..s as i64).fold(BigInt::one(), |acc, j| acc * BigInt::from(w - j))
}

fn factorial(s: usize) -> BigInt {
    (1..=s as i64).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// `1 - a(m-1)/k - (1-a)(m-1)/k^2
///  - sum_{2 <= i <= m/2} (m-2i) (m-1)_(2i-1) / ((m-2i+1) (2i-1)!) k^(1-2i)`.
///
/// A lower bound on `F(H,e,k)` for every edge `e` of an `r`-uniform
/// hypergraph with `m` edges when `a = |E_{r-1}(e)|/(m-1)` and `k >= 1`.
pub fn counting_lower_bound(m: usize, a: &BigRational, k: u64) -> Result<BigRational> {
    if m < 2 {
        return Err(Error::DomainError("needs m >= 2".into()));
    }
    if k == 0 {
        return Err(Error::DomainError("needs k >= 1".into()));
    }
    let m1 = BigRational::from_integer(BigInt::from(m - 1));
    let mut value = BigRational::one() - a * &m1 * pow_k(k, -1)
        - (BigRational::one() - a) * &m1 * pow_k(k, -2);
    for i in 2..=m / 2 {
        let num = BigInt::from(m - 2 * i) * falling(m as i64 - 1, 2 * i - 1);
        let den = BigInt::from(m - 2 * i + 1) * factorial(2 * i - 1);
        let coeff = BigRational::new(num, den);
        if !coeff.is_zero() {
            value -= coeff * pow_k(k, 1 - 2 * i as i64);
        }
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domain_checks() {
        assert!(f_axw(-0.1, 1.0, 0.0).is_err());
        assert!(f_axw(0.5, -1.0, 0.0).is_err());
        assert!(f_axw(0.5, 1.0, 0.3).is_err());
        assert!(f_axw(0.5, f64::NAN, 0.1).is_err());
    }

    #[test]
    fn f_at_zero_is_one() {
        for &a in &[0.0, 0.3, 1.0] {
            for &w in &[0.0, 0.1, 0.25] {
                assert_eq!(f_axw(a, 0.0, w).unwrap(), 1.0);
            }
        }
    }

    #[test]
    fn closed_form_agrees() {
        for i in 0..=80 {
            let a = i as f64 / 100.0;
            let direct = f_axw(a, 1.0 / q_of(a), 0.0).unwrap();
            assert!((direct - edge_curve(a)).abs() < 1e-13);
        }
    }

    #[test]
    fn slope_matches_finite_difference() {
        let h = 1e-6;
        for &a in &[0.0, 0.2, 0.5, 0.8] {
            let fd = (edge_curve(a + h) - edge_curve(a - h)) / (2.0 * h);
            assert!((fd - edge_curve_slope(a)).abs() < 1e-7, "a = {a}");
        }
    }

    #[test]
    fn slope_root_bracket() {
        let root = slope_root(0.2, 0.21).unwrap();
        assert!(root > 0.2 && root < 0.21);
        assert!(slope_root(0.3, 0.8).is_none());
    }

    #[test]
    fn counting_bound_coefficients() {
        // m = 5: only i = 2, coefficient (1)(4*3*2)/((2)(3!)) = 2
        let zero = BigRational::zero();
        let b = counting_lower_bound(5, &zero, 1).unwrap();
        assert_eq!(b, BigRational::from_integer((1 - 4 - 2).into()));
        // m = 6: i = 2 gives (2)(5*4*3)/((3)(3!)) = 20/3, i = 3 vanishes
        let b = counting_lower_bound(6, &zero, 1).unwrap();
        assert_eq!(b, BigRational::new((3 - 15 - 20).into(), 3.into()));
        assert!(counting_lower_bound(1, &zero, 1).is_err());
    }
}
