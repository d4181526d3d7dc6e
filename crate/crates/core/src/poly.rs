//! Dense univariate polynomials over a [`Coefficient`] ring.
//!
//! Coefficients are stored lowest degree first with trailing zeros stripped,
//! so two polynomials are equal exactly when their coefficient vectors are.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::scalar::{Coefficient, Ring, Scalar};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Coefficient> Poly<R> {
    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * var^deg`
    pub fn monomial(c: R, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); deg];
        coeffs.push(c);
        Poly { coeffs }
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::monomial(R::one(), 1)
    }

    /// Build `Σ c_i var^i` from base-field values.
    pub fn from_scalars<I: IntoIterator<Item = R::Scalar>>(it: I) -> Self {
        Self::from_coeffs(it.into_iter().map(R::from_scalar).collect())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `var^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn map_coeffs<F: FnMut(&R) -> R>(&self, f: F) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Multiply by a ring element of the coefficient ring.
    pub fn mul_coeff(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        self.map_coeffs(|a| a.mul_ref(c))
    }

    pub fn eval(&self, at: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.mul_ref(at).add_ref(c))
    }

    /// `self(inner)`, by Horner's scheme.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// Formal derivative with respect to the indeterminate.
    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&R::Scalar::from_int(i as i64)))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl<R: Coefficient> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Coefficient> One for Poly<R> {
    fn one() -> Self {
        Poly { coeffs: vec![R::one()] }
    }
}

impl<R: Coefficient> Coefficient for Poly<R> {
    type Scalar = R::Scalar;

    fn from_scalar(s: Self::Scalar) -> Self {
        Self::constant(R::from_scalar(s))
    }

    fn as_scalar(&self) -> Option<Self::Scalar> {
        match self.coeffs.as_slice() {
            [] => Some(Self::Scalar::zero()),
            [c] => c.as_scalar(),
            _ => None,
        }
    }

    fn scale(&self, s: &Self::Scalar) -> Self {
        self.map_coeffs(|c| c.scale(s))
    }

    // Kronecker packing: lay the inner coefficients out with a stride wide
    // enough that no two products collide, convolve one level down, then
    // cut the flat result back into polynomials.
    fn convolve(a: &[Self], b: &[Self], len: usize) -> Vec<Self> {
        let width = |v: &[Self]| v.iter().take(len).map(|p| p.coeffs.len()).max().unwrap_or(0);
        let (wa, wb) = (width(a), width(b));
        if wa == 0 || wb == 0 {
            return vec![Poly::zero(); len];
        }
        let stride = wa + wb - 1;
        let pack = |v: &[Self]| {
            let mut flat = vec![R::zero(); v.len().min(len) * stride];
            for (i, p) in v.iter().take(len).enumerate() {
                for (j, c) in p.coeffs.iter().enumerate() {
                    flat[i * stride + j] = c.clone();
                }
            }
            flat
        };
        let flat = R::convolve(&pack(a), &pack(b), len * stride);
        flat.chunks(stride).map(|c| Poly::from_coeffs(c.to_vec())).collect()
    }
}

impl<'a, R: Coefficient> Add<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &'a Poly<R>) -> Poly<R> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.add_ref(s);
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<'a, R: Coefficient> Sub<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &'a Poly<R>) -> Poly<R> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg_ref(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }
}

impl<'a, R: Coefficient> Mul<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &'a Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let len = self.coeffs.len() + rhs.coeffs.len() - 1;
        Poly::from_coeffs(R::convolve(&self.coeffs, &rhs.coeffs, len))
    }
}

impl<R: Coefficient> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly {
            coeffs: self.coeffs.iter().map(Ring::neg_ref).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<R: Coefficient> $tr<Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: Poly<R>) -> Poly<R> {
                (&self).$m(&rhs)
            }
        }
        impl<'a, R: Coefficient> $tr<&'a Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: &'a Poly<R>) -> Poly<R> {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<R: Coefficient> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        -&self
    }
}

impl<R: Coefficient> AddAssign<&Poly<R>> for Poly<R> {
    fn add_assign(&mut self, rhs: &Poly<R>) {
        *self = &*self + rhs;
    }
}

impl<R: Coefficient> SubAssign<&Poly<R>> for Poly<R> {
    fn sub_assign(&mut self, rhs: &Poly<R>) {
        *self = &*self - rhs;
    }
}

impl<R: Coefficient> std::iter::Sum for Poly<R> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| &acc + &p)
    }
}

impl<R: Coefficient> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int, Rational};

    type P = Poly<Rational>;

    fn p(cs: &[i64]) -> P {
        P::from_coeffs(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert_eq!(p(&[0, 0]), P::zero());
        assert_eq!(P::zero().degree(), None);
        assert_eq!(&p(&[1, 1]) - &p(&[0, 1]), P::one());
        assert_eq!(&p(&[0, 3]) + &p(&[0, -3]), P::zero());
    }

    #[test]
    fn multiply_and_evaluate() {
        let q = &p(&[-1, 1]) * &p(&[1, 1]);
        assert_eq!(q, p(&[-1, 0, 1]));
        assert_eq!(q.eval(&int(3)), int(8));
    }

    #[test]
    fn composition_shifts_and_scales() {
        // (x^2 - x) at x/2  ->  x^2/4 - x/2
        let half_x = P::monomial(frac(1, 2), 1);
        let q = p(&[0, -1, 1]).compose(&half_x);
        assert_eq!(q, P::from_coeffs(vec![int(0), frac(-1, 2), frac(1, 4)]));
        // x^2 at x+1
        assert_eq!(p(&[0, 0, 1]).compose(&p(&[1, 1])), p(&[1, 2, 1]));
    }

    #[test]
    fn derivative_of_cubic() {
        assert_eq!(p(&[5, 2, -3, 4]).derivative(), p(&[2, -6, 12]));
        assert_eq!(p(&[7]).derivative(), P::zero());
    }

    #[test]
    fn nested_ring_scalar_detection() {
        let inner: Poly<P> = Poly::constant(p(&[2]));
        assert_eq!(inner.as_scalar(), Some(int(2)));
        let lam: Poly<P> = Poly::constant(p(&[0, 1]));
        assert_eq!(lam.as_scalar(), None);
        assert_eq!(Poly::<P>::var().as_scalar(), None);
    }

    #[test]
    fn generic_over_floats() {
        let q: Poly<f64> = Poly::from_coeffs(vec![1.0, 0.5]);
        assert_eq!((&q * &q).coeffs(), &[1.0, 1.0, 0.25]);
    }
}
