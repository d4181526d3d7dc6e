//! Finite-sum right-hand sides, evaluated term by term with the printed index
//! ranges and signs. Named variants differ from the printed form at a single
//! site.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::tables::Tables;
use crate::error::{Error, Result};
use crate::rational::{frac, int};
use crate::scalar::{binomial, factorial, Coefficient, Scalar};
use crate::sequences::polylog::inv_power;
use crate::xlambda::{lambda, lambda_scaled_pochhammer, lift, rat, specialize, substitute_affine, unit_falling_deg};
use crate::{LambdaPoly, Rational, XLambdaPoly};

/// One evaluable finite sum. The `*Lhs` forms are the printed left-hand sides
/// of the two identities that equate a pair of sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    Lemma21,
    Thm22,
    Cor23,
    Thm24,
    Cor25,
    Thm26,
    Thm27,
    /// `transposed` reads the inner Stirling number as `S_2(l, m)`.
    Thm28 {
        transposed: bool,
    },
    /// `rescaled` evaluates `β_n` at `x/2 + 1` and `x/2`.
    Thm29 {
        rescaled: bool,
    },
    Thm31,
    Thm32 {
        transposed: bool,
    },
    Thm33,
    Thm34Lhs,
    Thm34Rhs,
    /// Printed left side times λ, so the `m = n` term (which carries `1/λ`)
    /// becomes a polynomial.
    Thm35LhsScaled,
    /// Printed left side with the `m = n` term left out.
    Thm35LhsWithoutTop,
    Thm35Rhs,
    /// Printed right side times λ, to pair with [`ClosedForm::Thm35LhsScaled`].
    Thm35RhsScaled,
    /// `sign_m` uses `(-1)^m` in place of `(-1)^l`.
    Thm36 {
        sign_m: bool,
    },
}

fn q(b: BigInt) -> Rational {
    Rational::from_integer(b)
}

fn binom(n: usize, k: usize) -> Rational {
    q(binomial(n, k))
}

fn fact(n: usize) -> Rational {
    q(factorial(n))
}

fn sign(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

fn two_pow(e: i64) -> Rational {
    int(2).pow_int(e)
}

fn at_x0(p: &XLambdaPoly) -> XLambdaPoly {
    specialize(p, None, Some(&int(0)))
}

/// `λ^{m-1} (1)_{m,1/λ}` for `m ≥ 1`.
fn pochhammer(m: usize) -> LambdaPoly {
    lambda_scaled_pochhammer(m).expect("m >= 1")
}

fn need_n_at_least(n: usize, min: usize, what: &'static str) -> Result<()> {
    if n < min {
        return Err(Error::IndexOutOfRange { what, n, k: 0 });
    }
    Ok(())
}

impl ClosedForm {
    /// Parse an identity id, optionally followed by `/variant`.
    pub fn parse(id: &str) -> Result<Self> {
        use ClosedForm::*;
        let form = match id {
            "L2.1" => Lemma21,
            "T2.2" => Thm22,
            "C2.3" => Cor23,
            "T2.4" => Thm24,
            "C2.5" => Cor25,
            "T2.6" => Thm26,
            "T2.7" => Thm27,
            "T2.8" => Thm28 { transposed: false },
            "T2.8/transposed" => Thm28 { transposed: true },
            "T2.9" => Thm29 { rescaled: false },
            "T2.9/rescaled" => Thm29 { rescaled: true },
            "T3.1" => Thm31,
            "T3.2" => Thm32 { transposed: false },
            "T3.2/transposed" => Thm32 { transposed: true },
            "T3.3" => Thm33,
            "T3.4" => Thm34Rhs,
            "T3.5" => Thm35Rhs,
            "T3.6" => Thm36 { sign_m: false },
            "T3.6/sign" => Thm36 { sign_m: true },
            other => return Err(Error::UnknownIdentity(other.to_string())),
        };
        Ok(form)
    }

    pub fn evaluate(self, t: &Tables, n: usize, k: i64) -> Result<XLambdaPoly> {
        use ClosedForm::*;
        t.check_n(n)?;
        let kt = t.k(k)?;
        let mut acc = XLambdaPoly::zero();
        match self {
            Lemma21 => {
                need_n_at_least(n, 1, "polylog closed form (needs n >= 1)")?;
                acc = rat(super::lemma21_coeff_with(&t.s2, n, k)?);
            }
            Thm22 | Cor23 => {
                for l in 0..=n {
                    let b = &t.bernoulli[n - l];
                    let b = if self == Thm22 {
                        substitute_affine(b, &frac(1, 2), &int(0))
                    } else {
                        at_x0(b)
                    };
                    let mut inner = Rational::zero();
                    for m in 0..=l {
                        for j in 1..=m + 1 {
                            inner += binom(n, l)
                                * binom(l, m)
                                * two_pow((m + n - l) as i64)
                                * sign(m + 1 + j)
                                * fact(j)
                                * inv_power(j, k)
                                / int(((l - m + 1) * (m + 1)) as i64)
                                * t.s2_value(m + 1, j)?;
                        }
                    }
                    acc += &b.scale(&inner);
                }
            }
            Thm24 | Cor25 => {
                for m in 0..=n {
                    let e = &t.euler[n - m];
                    let e = if self == Thm24 { e.clone() } else { at_x0(e) };
                    let mut inner = Rational::zero();
                    for l in 1..=m + 1 {
                        inner += binom(n, m) * two_pow(m as i64) * sign(m + 1 + l) * fact(l) * inv_power(l, k)
                            / int((m + 1) as i64)
                            * t.s2_value(m + 1, l)?;
                    }
                    acc += &e.scale(&inner);
                }
            }
            Thm26 => {
                for l in 0..=n {
                    let c = at_x0(&kt.poly_euler[n - l]).scale(&binom(n, l));
                    acc += &(&c * &XLambdaPoly::monomial(LambdaPoly::one(), l));
                }
            }
            Thm27 => {
                if n > 0 {
                    acc = kt.poly_euler[n - 1].scale(&int(n as i64));
                }
            }
            Thm28 { transposed } => {
                for l in 0..=n {
                    let e = at_x0(&kt.poly_euler[n - l]);
                    for m in 0..=l {
                        let s = if transposed {
                            t.s2_value(l, m)?
                        } else {
                            t.s2_value(m, l)?
                        };
                        let term = &t.falling[m] * &e;
                        acc += &term.scale(&(binom(n, l) * s));
                    }
                }
            }
            Thm29 { rescaled } => {
                let b = &kt.poly_bernoulli[n];
                let (hi, lo) = if rescaled {
                    (
                        substitute_affine(b, &frac(1, 2), &int(1)),
                        substitute_affine(b, &frac(1, 2), &int(0)),
                    )
                } else {
                    (substitute_affine(b, &int(1), &int(2)), b.clone())
                };
                acc = (&hi - &lo).scale(&two_pow(n as i64));
            }
            Thm31 => {
                for l in 0..=n {
                    let term = &t.falling_deg[l] * &at_x0(&kt.deg_poly_euler[n - l]);
                    acc += &term.scale(&binom(n, l));
                }
            }
            Thm32 { transposed } => {
                for l in 0..=n {
                    let e = at_x0(&kt.deg_poly_euler[n - l]);
                    for m in 0..=l {
                        let s = if transposed {
                            t.s2_deg.get(l, m)?
                        } else {
                            t.s2_deg.get(m, l)?
                        };
                        let term = &(&t.falling[m] * &e) * &lift(s);
                        acc += &term.scale(&binom(n, l));
                    }
                }
            }
            Thm33 => {
                need_n_at_least(n, 1, "T3.3 (needs n >= 1)")?;
                let mut sum = LambdaPoly::zero();
                for l in 1..=n {
                    let c = sign(n - 1) * inv_power(l, k - 1);
                    sum += &(&pochhammer(l) * &t.s2_deg.get(n, l)?).scale(&c);
                }
                acc = lift(sum.scale(&(two_pow(n as i64) / int(n as i64))));
            }
            Thm34Lhs => {
                let mut sum = LambdaPoly::zero();
                for i in 1..=n {
                    for m in 0..=n - i {
                        let c = binom(n, i) * two_pow(n as i64) * sign(m + n + 1);
                        let e = kt.deg_poly_euler[m].coeff(0);
                        sum += &(&(&unit_falling_deg(i) * &t.s2_deg.get(n - i, m)?) * &e).scale(&c);
                    }
                }
                acc = lift(sum);
            }
            Thm34Rhs => {
                let mut sum = LambdaPoly::zero();
                for m in 1..=n {
                    for l in 0..=n - m {
                        let c = binom(n, m) * two_pow(n as i64 - m as i64 - 1) * sign(l + n + 1) * inv_power(m, k - 1);
                        let e = t.deg_euler[l].coeff(0);
                        sum += &(&(&pochhammer(m) * &t.s2_deg.get(n - m, l)?) * &e).scale(&c);
                    }
                }
                acc = lift(sum);
            }
            Thm35LhsScaled | Thm35LhsWithoutTop => {
                let top = if self == Thm35LhsScaled { n } else { n.saturating_sub(1) };
                let mut sum = LambdaPoly::zero();
                if self == Thm35LhsScaled || n >= 1 {
                    for m in 0..=top {
                        let j = n - m;
                        let weight = match (self, j) {
                            (Thm35LhsScaled, 0) => LambdaPoly::one(),
                            (Thm35LhsScaled, _) => &lambda() * &pochhammer(j),
                            _ => pochhammer(j),
                        };
                        for l in 0..=m {
                            let c = binom(n, m) * sign(l + 1) * two_pow(-(l as i64) - 1);
                            let e = kt.deg_poly_euler[l].coeff(0);
                            sum += &(&(&weight * &t.s1_deg.get(m, l)?) * &e).scale(&c);
                        }
                    }
                }
                acc = lift(sum);
            }
            Thm35Rhs | Thm35RhsScaled => {
                let mut sum = LambdaPoly::zero();
                for m in 1..=n {
                    for l in 0..=n - m {
                        let c = binom(n, m) * sign(l + 1) * two_pow(-(l as i64) - 1) * inv_power(m, k - 1);
                        let e = t.deg_euler[l].coeff(0);
                        sum += &(&(&pochhammer(m) * &t.s1_deg.get(n - m, l)?) * &e).scale(&c);
                    }
                }
                if self == Thm35RhsScaled {
                    sum = &sum * &lambda();
                }
                acc = lift(sum);
            }
            Thm36 { sign_m } => {
                let mut sum = LambdaPoly::zero();
                for l in 0..=n {
                    let e = t.deg_euler[n - l].coeff(0);
                    for m in 0..=l {
                        let s = if sign_m { sign(m) } else { sign(l) };
                        let c = binom(n, l) * binom(l, m) * s * two_pow(l as i64) / int((m + 1) as i64);
                        let beta = kt.deg_poly_bernoulli[l - m].coeff(0);
                        sum += &(&(&unit_falling_deg(m + 1) * &beta) * &e).scale(&c);
                    }
                }
                acc = lift(sum);
            }
        }
        Ok(acc)
    }
}

/// Evaluate the right-hand side registered under `id` (optionally
/// `id/variant`) at `(n, k)`.
pub fn closed_form_rhs(tables: &Tables, id: &str, n: usize, k: i64) -> Result<XLambdaPoly> {
    ClosedForm::parse(id)?.evaluate(tables, n, k)
}
