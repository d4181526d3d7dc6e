//! Coefficient traits shared by the polynomial and series kernels.
//!
//! The kernel is written once over [`Coefficient`]. A coefficient is either a
//! [`Scalar`] field element (exact rationals, or `f64`/`f32` for quick numeric
//! experiments) or a polynomial whose coefficients are themselves
//! coefficients, so `Poly<Poly<Rational>>` is the ring Q[λ][x].

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Zero};

/// Commutative ring with by-reference arithmetic.
pub trait Ring: Clone + PartialEq + Debug + Zero + One + Send + Sync + 'static {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl<T> Ring for T
where
    T: Clone + PartialEq + Debug + Zero + One + Send + Sync + 'static,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T> + Neg<Output = T>,
{
    #[inline]
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    #[inline]
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    #[inline]
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    #[inline]
    fn neg_ref(&self) -> Self {
        -self
    }
}

/// A ring element that knows its embedded base field.
pub trait Coefficient: Ring {
    type Scalar: Scalar;

    fn from_scalar(s: Self::Scalar) -> Self;

    /// The value as a base-field constant, if it is one.
    fn as_scalar(&self) -> Option<Self::Scalar>;

    /// Multiply every base-field entry by `s`.
    fn scale(&self, s: &Self::Scalar) -> Self;

    /// The first `len` coefficients of the product of two dense coefficient
    /// lists (zero-padded when the product is shorter).
    fn convolve(a: &[Self], b: &[Self], len: usize) -> Vec<Self> {
        let mut out = vec![Self::zero(); len];
        for (i, x) in a.iter().enumerate().take(len) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(len - i) {
                if !y.is_zero() {
                    out[i + j] = out[i + j].add_ref(&x.mul_ref(y));
                }
            }
        }
        out
    }
}

/// A field usable as the bottom layer of the coefficient tower.
pub trait Scalar: Coefficient<Scalar = Self> + Div<Output = Self> + FromPrimitive {
    fn from_int(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("integer fits the scalar type")
    }

    fn recip(&self) -> Self {
        Self::one() / self.clone()
    }

    /// `self^e` for any integer exponent; `0^e` with `e < 0` panics.
    fn pow_int(&self, e: i64) -> Self {
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul_ref(self);
        }
        if e < 0 {
            assert!(!self.is_zero(), "zero raised to a negative power");
            acc.recip()
        } else {
            acc
        }
    }
}

macro_rules! impl_scalar {
    ($($t:ty),*) => {$(
        impl Coefficient for $t {
            type Scalar = Self;
            #[inline]
            fn from_scalar(s: Self) -> Self {
                s
            }
            #[inline]
            fn as_scalar(&self) -> Option<Self> {
                Some(self.clone())
            }
            #[inline]
            fn scale(&self, s: &Self) -> Self {
                self.mul_ref(s)
            }
        }
        impl Scalar for $t {}
    )*};
}

impl_scalar!(f64, f32);

impl Coefficient for BigRational {
    type Scalar = Self;
    #[inline]
    fn from_scalar(s: Self) -> Self {
        s
    }
    #[inline]
    fn as_scalar(&self) -> Option<Self> {
        Some(self.clone())
    }
    #[inline]
    fn scale(&self, s: &Self) -> Self {
        self * s
    }

    // Clear denominators and convolve integers, so each output coefficient
    // is reduced once instead of once per partial sum.
    fn convolve(a: &[Self], b: &[Self], len: usize) -> Vec<Self> {
        fn integral(v: &[BigRational], len: usize) -> (Vec<(usize, BigInt)>, BigInt) {
            let d = v.iter().fold(BigInt::one(), |d, c| d.lcm(c.denom()));
            let ints = v
                .iter()
                .take(len)
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.numer() * (&d / c.denom())))
                .collect();
            (ints, d)
        }
        let (ai, da) = integral(a, len);
        let (bi, db) = integral(b, len);
        let mut out = vec![BigInt::zero(); len];
        for (i, x) in &ai {
            for (j, y) in &bi {
                if i + j >= len {
                    break;
                }
                out[i + j] += x * y;
            }
        }
        let den = da * db;
        out.into_iter().map(|c| BigRational::new(c, den.clone())).collect()
    }
}

impl Scalar for BigRational {}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}
