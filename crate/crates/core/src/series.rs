//! Truncated power series `Σ_{n≤N} c_n t^n + O(t^{N+1})`.
//!
//! Binary operations never claim more precision than the less precise
//! operand. Division cancels a common power of `t` first, so quotients such
//! as `f(t) / (t g(t))` lose exactly that many orders.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::scalar::{factorial, Coefficient, Ring, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("leading coefficient of the divisor (at t^{valuation}) is not a nonzero rational constant")]
    LeadingCoefficientNotInvertible { valuation: usize },
    #[error("divisor vanishes through its truncation order")]
    ZeroDivisor,
    #[error("numerator valuation {numerator} is below divisor valuation {denominator}")]
    ValuationMismatch { numerator: usize, denominator: usize },
    #[error("inner series has a nonzero constant term")]
    NonzeroInnerConstant,
    #[error("coefficient {requested} requested from a series truncated at order {order}")]
    OrderExceeded { requested: usize, order: usize },
}

#[derive(Clone, PartialEq, Eq)]
pub struct Series<R> {
    coeffs: Vec<R>,
}

impl<R: Coefficient> Series<R> {
    /// Series with coefficients `c_0..c_N`; the truncation order is `N`.
    ///
    /// Panics on an empty vector.
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series stores at least c_0");
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * t^deg` (zero if `deg > order`).
    pub fn monomial(c: R, deg: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if deg <= order {
            s.coeffs[deg] = c;
        }
        s
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Self::monomial(R::one(), 1, order)
    }

    pub fn from_fn<F: FnMut(usize) -> R>(order: usize, f: F) -> Self {
        Series {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// Series written in exponential form `Σ a_n t^n / n!`.
    pub fn from_egf<F: FnMut(usize) -> R>(order: usize, mut a: F) -> Self {
        Self::from_fn(order, |n| a(n).scale(&inv_factorial::<R::Scalar>(n)))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `t^n`; panics past the truncation order.
    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    /// Index of the first nonzero coefficient, `None` if all vanish.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Forget everything above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        Series {
            coeffs: self.coeffs[..=keep].to_vec(),
        }
    }

    pub fn map<F: FnMut(&R) -> R>(&self, f: F) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn mul_coeff(&self, c: &R) -> Self {
        self.map(|a| a.mul_ref(c))
    }

    pub fn scale(&self, s: &R::Scalar) -> Self {
        self.map(|a| a.scale(s))
    }

    /// `n! * c_n`, the member of a family `Σ P_n t^n / n!`.
    pub fn egf_coeff(&self, n: usize) -> Result<R, SeriesError> {
        let c = self.coeffs.get(n).ok_or(SeriesError::OrderExceeded {
            requested: n,
            order: self.order(),
        })?;
        Ok(c.scale(&int_scalar(factorial(n))))
    }

    /// All egf coefficients `0..=order`.
    pub fn egf_coeffs(&self) -> Vec<R> {
        (0..=self.order())
            .map(|n| self.egf_coeff(n).expect("in range"))
            .collect()
    }

    /// The substitution `t -> c t`.
    pub fn scale_t(&self, c: &R::Scalar) -> Self {
        let mut pow = R::Scalar::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.scale(&pow));
            pow = pow.mul_ref(c);
        }
        Series { coeffs }
    }

    /// Multiply by `t^k`, keeping the truncation order.
    pub fn shift_up(&self, k: usize) -> Self {
        Self::from_fn(self.order(), |n| {
            if n >= k {
                self.coeffs[n - k].clone()
            } else {
                R::zero()
            }
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / den`.
    ///
    /// A common factor `t^v` (v the divisor's valuation) is cancelled first,
    /// so the result has order `min(order) - v`. The divisor's leading
    /// coefficient must be a nonzero base-field constant.
    pub fn try_div(&self, den: &Self) -> Result<Self, SeriesError> {
        let v = den.valuation().ok_or(SeriesError::ZeroDivisor)?;
        if let Some(nv) = self.valuation() {
            if nv < v {
                return Err(SeriesError::ValuationMismatch {
                    numerator: nv,
                    denominator: v,
                });
            }
        }
        let lead = den.coeffs[v]
            .as_scalar()
            .ok_or(SeriesError::LeadingCoefficientNotInvertible { valuation: v })?;
        let inv = lead.recip();
        let order = self.order().min(den.order()) - v;
        let num = &self.coeffs[v..];
        let den = &den.coeffs[v..];
        let mut q: Vec<R> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = num[n].clone();
            for i in 0..n {
                let d = &den[n - i];
                if d.is_zero() || q[i].is_zero() {
                    continue;
                }
                acc = acc.sub_ref(&q[i].mul_ref(d));
            }
            q.push(acc.scale(&inv));
        }
        Ok(Series { coeffs: q })
    }

    /// `self(inner)` for an inner series without constant term.
    pub fn try_compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroInnerConstant);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] = acc.coeffs[0].add_ref(c);
        }
        Ok(acc)
    }
}

fn int_scalar<S: Scalar>(n: BigInt) -> S {
    // factorials stay far below i64::MAX for the orders used here
    S::from_int(i64::try_from(n).expect("factorial fits in i64"))
}

fn inv_factorial<S: Scalar>(n: usize) -> S {
    int_scalar::<S>(factorial(n)).recip()
}

impl<'a, R: Coefficient> Add<&'a Series<R>> for &'a Series<R> {
    type Output = Series<R>;
    fn add(self, rhs: &'a Series<R>) -> Series<R> {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |n| self.coeffs[n].add_ref(&rhs.coeffs[n]))
    }
}

impl<'a, R: Coefficient> Sub<&'a Series<R>> for &'a Series<R> {
    type Output = Series<R>;
    fn sub(self, rhs: &'a Series<R>) -> Series<R> {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |n| self.coeffs[n].sub_ref(&rhs.coeffs[n]))
    }
}

impl<'a, R: Coefficient> Mul<&'a Series<R>> for &'a Series<R> {
    type Output = Series<R>;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &'a Series<R>) -> Series<R> {
        let order = self.order().min(rhs.order());
        let out = R::convolve(&self.coeffs[..=order], &rhs.coeffs[..=order], order + 1);
        Series { coeffs: out }
    }
}

impl<R: Coefficient> Neg for &Series<R> {
    type Output = Series<R>;
    fn neg(self) -> Series<R> {
        self.map(Ring::neg_ref)
    }
}

impl<R: Coefficient> std::fmt::Debug for Series<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Series(order={}) ", self.order())?;
        f.debug_list().entries(&self.coeffs).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::rational::{frac, int, Rational};

    type S = Series<Rational>;

    fn s(cs: &[i64]) -> S {
        S::new(cs.iter().map(|&c| int(c)).collect())
    }

    fn exp(order: usize, sign: i64) -> S {
        S::from_egf(order, |n| int(sign.pow(n as u32)))
    }

    #[test]
    fn add_cancels_and_takes_min_order() {
        assert_eq!(&s(&[1, 1]) + &s(&[1, -1]), s(&[2, 0]));
        let a = s(&[3, 4, 5]);
        assert_eq!((&a + &S::zero(2)), a);
        assert_eq!((&a + &S::zero(1)).order(), 1);
    }

    #[test]
    fn mixed_coefficient_ring_addition() {
        // x t + λ t = (x + λ) t in Q[λ][x]
        type L = Poly<Rational>;
        type X = Poly<L>;
        let x = X::var();
        let lam = X::constant(L::var());
        let a = Series::monomial(x.clone(), 1, 3);
        let b = Series::monomial(lam.clone(), 1, 3);
        assert_eq!(&a + &b, Series::monomial(&x + &lam, 1, 3));
    }

    #[test]
    fn product_basics() {
        assert_eq!(&s(&[1, 1, 0]) * &s(&[1, -1, 0]), s(&[1, 0, -1]));
        let a = s(&[2, -3, 7]);
        assert_eq!(&a * &S::one(2), a);
    }

    #[test]
    fn exp_times_exp_minus_is_one() {
        // direct convolution: Σ_{i+j=n} (-1)^j / (i! j!) = (1-1)^n / n!
        let n = 12;
        let prod = &exp(n, 1) * &exp(n, -1);
        for k in 0..=n {
            let direct: Rational = (0..=k)
                .map(|j| int((-1i64).pow(j as u32)) / Rational::from_integer(factorial(j) * factorial(k - j)))
                .sum();
            assert_eq!(prod.coeff(k), &direct);
        }
        assert_eq!(prod, S::one(n));
    }

    #[test]
    fn division_with_common_t_factor() {
        // 2t / (t (2 + t)) = 1 - t/2 + t^2/4 - ...
        let num = s(&[0, 2, 0, 0, 0, 0]);
        let den = s(&[0, 2, 1, 0, 0, 0]);
        let q = num.try_div(&den).unwrap();
        assert_eq!(q.order(), 4);
        for n in 0..=4 {
            assert_eq!(q.coeff(n), &frac(-1, 2).pow_int(n as i64));
        }
        // remultiply against the t-cancelled divisor
        assert_eq!(&q * &s(&[2, 1, 0, 0, 0]), s(&[2, 0, 0, 0, 0]));
    }

    #[test]
    fn division_identities() {
        let a = s(&[1, 2, 3, 4]);
        assert_eq!(a.try_div(&S::one(3)).unwrap(), a);
        let geo = S::one(6).try_div(&s(&[1, -1, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!(geo, s(&[1; 7]));
    }

    #[test]
    fn division_errors() {
        type L = Poly<Rational>;
        let lam = Series::constant(L::var(), 3);
        assert_eq!(
            Series::one(3).try_div(&lam),
            Err(SeriesError::LeadingCoefficientNotInvertible { valuation: 0 })
        );
        assert_eq!(
            s(&[1, 0, 0]).try_div(&s(&[0, 1, 0])),
            Err(SeriesError::ValuationMismatch {
                numerator: 0,
                denominator: 1
            })
        );
        assert_eq!(s(&[1, 0]).try_div(&S::zero(1)), Err(SeriesError::ZeroDivisor));
    }

    #[test]
    fn composition_examples() {
        let n = 8;
        // Σ u^m at u = t
        let geo = S::new(vec![int(1); n + 1]);
        assert_eq!(geo.try_compose(&S::t(n)).unwrap(), geo);
        // u^2 at 2t
        let sq = S::monomial(int(1), 2, n);
        assert_eq!(
            sq.try_compose(&S::monomial(int(2), 1, n)).unwrap(),
            S::monomial(int(4), 2, n)
        );
        // log(1+u) at e^t - 1
        let log1p = S::from_fn(n, |k| {
            if k == 0 {
                int(0)
            } else {
                frac((-1i64).pow(k as u32 - 1), k as i64)
            }
        });
        let em1 = &exp(n, 1) - &S::one(n);
        assert_eq!(log1p.try_compose(&em1).unwrap(), S::t(n));
        assert_eq!(log1p.try_compose(&exp(n, 1)), Err(SeriesError::NonzeroInnerConstant));
    }

    #[test]
    fn rescaling_t() {
        let e = exp(6, 1);
        assert_eq!(e.scale_t(&int(-2)), S::from_egf(6, |n| int((-2i64).pow(n as u32))));
        assert_eq!(e.scale_t(&int(1)), e);
        assert_eq!(
            S::monomial(int(1), 2, 4).scale_t(&frac(1, 2)),
            S::monomial(frac(1, 4), 2, 4)
        );
    }

    #[test]
    fn egf_extraction() {
        assert_eq!(exp(6, 1).egf_coeff(5).unwrap(), int(1));
        assert_eq!(S::one(0).egf_coeff(0).unwrap(), int(1));
        assert_eq!(S::monomial(int(2), 1, 3).egf_coeff(1).unwrap(), int(2));
        assert_eq!(
            S::one(2).egf_coeff(3),
            Err(SeriesError::OrderExceeded { requested: 3, order: 2 })
        );
    }
}
