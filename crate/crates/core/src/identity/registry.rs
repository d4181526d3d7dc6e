//! The built-in identities. Left sides come from generating-function tables,
//! right sides from [`ClosedForm`] sums, except for the reductions and
//! series oracles, which compare two tables.

use num_traits::Zero;

use super::{Domain, IdentitySpec, KMode, MustPass, VariantClass};
use crate::error::Result;
use crate::poly_euler::{ClosedForm, Tables};
use crate::rational::int;
use crate::scalar::Coefficient;
use crate::xlambda::{at_lambda_zero, lambda, lift, rat, specialize, substitute_affine};
use crate::XLambdaPoly;

fn at_x(p: &XLambdaPoly, v: i64) -> XLambdaPoly {
    specialize(p, None, Some(&int(v)))
}

/// Row `n` of a Stirling table as `Σ_j S(n, j) x^j`.
fn row_poly(rows: &crate::sequences::stirling::StirlingTable, n: usize) -> XLambdaPoly {
    XLambdaPoly::from_coeffs(rows.row(n).expect("row within table").to_vec())
}

fn poly_euler(t: &Tables, n: usize, k: i64) -> Result<XLambdaPoly> {
    Ok(t.k(k)?.poly_euler[n].clone())
}

fn poly_euler_number(t: &Tables, n: usize, k: i64) -> Result<XLambdaPoly> {
    Ok(at_x(&t.k(k)?.poly_euler[n], 0))
}

fn deg_poly_euler(t: &Tables, n: usize, k: i64) -> Result<XLambdaPoly> {
    Ok(t.k(k)?.deg_poly_euler[n].clone())
}

fn deg_poly_euler_number(t: &Tables, n: usize, k: i64) -> Result<XLambdaPoly> {
    Ok(at_x(&t.k(k)?.deg_poly_euler[n], 0))
}

macro_rules! form {
    ($f:expr) => {
        |t: &Tables, n: usize, k: i64| $f.evaluate(t, n, k)
    };
}

struct Builder(Vec<IdentitySpec>);

impl Builder {
    #[allow(clippy::too_many_arguments)]
    fn add(
        &mut self,
        id: &'static str,
        variant: &'static str,
        class: VariantClass,
        description: &'static str,
        domain: Domain,
        n_min: usize,
        k_mode: KMode,
        must_pass: MustPass,
        lhs: super::Side,
        rhs: super::Side,
    ) {
        self.0.push(IdentitySpec {
            id,
            variant,
            class,
            description,
            domain,
            n_min,
            k_mode,
            must_pass,
            lhs,
            rhs,
        });
    }

    fn printed(
        &mut self,
        id: &'static str,
        description: &'static str,
        domain: Domain,
        n_min: usize,
        lhs: super::Side,
        rhs: super::Side,
    ) {
        self.add(
            id,
            "as-printed",
            VariantClass::Printed,
            description,
            domain,
            n_min,
            KMode::Each,
            MustPass::No,
            lhs,
            rhs,
        );
    }

    #[allow(clippy::too_many_arguments)]
    fn variant(
        &mut self,
        id: &'static str,
        variant: &'static str,
        description: &'static str,
        domain: Domain,
        n_min: usize,
        lhs: super::Side,
        rhs: super::Side,
    ) {
        self.add(
            id,
            variant,
            VariantClass::Variant,
            description,
            domain,
            n_min,
            KMode::Each,
            MustPass::No,
            lhs,
            rhs,
        );
    }

    fn oracle(
        &mut self,
        id: &'static str,
        variant: &'static str,
        description: &'static str,
        n_min: usize,
        lhs: super::Side,
        rhs: super::Side,
    ) {
        self.add(
            id,
            variant,
            VariantClass::Oracle,
            description,
            Domain::Degenerate,
            n_min,
            KMode::Each,
            MustPass::No,
            lhs,
            rhs,
        );
    }

    fn must(&mut self) {
        self.0.last_mut().expect("nonempty").must_pass = MustPass::Yes;
    }
}

/// All registered identities: the fifteen numbered results, their variants
/// and series oracles, and the reduction checks.
pub fn register_builtin() -> Vec<IdentitySpec> {
    use ClosedForm::*;
    use Domain::{Classical, Degenerate};
    let mut b = Builder(Vec::new());

    b.printed(
        "L2.1",
        "egf coefficients of Li_k(1 - e^{-2t}) by composition vs the Stirling closed form",
        Classical,
        1,
        |t, n, k| Ok(rat(t.k(k)?.polylog_coeffs[n].clone())),
        form!(Lemma21),
    );
    b.must();
    b.printed(
        "T2.2",
        "E_n^(k)(x) as a triple sum over B_{n-l}(x/2)",
        Classical,
        0,
        poly_euler,
        form!(Thm22),
    );
    b.printed("C2.3", "T2.2 at x = 0", Classical, 0, poly_euler_number, form!(Cor23));
    b.printed(
        "T2.4",
        "E_n^(k)(x) as a double sum over E_{n-m}(x)",
        Classical,
        0,
        poly_euler,
        form!(Thm24),
    );
    b.printed("C2.5", "T2.4 at x = 0", Classical, 0, poly_euler_number, form!(Cor25));
    b.printed(
        "T2.6",
        "binomial expansion in x",
        Classical,
        0,
        poly_euler,
        form!(Thm26),
    );
    b.must();
    b.printed(
        "T2.7",
        "d/dx E_n^(k)(x) = n E_{n-1}^(k)(x)",
        Classical,
        0,
        |t, n, k| Ok(t.k(k)?.poly_euler[n].derivative()),
        form!(Thm27),
    );
    b.must();
    b.printed(
        "T2.8",
        "expansion over (x)_m S_2(m, l)",
        Classical,
        0,
        poly_euler,
        form!(Thm28 { transposed: false }),
    );
    b.variant(
        "T2.8",
        "transposed",
        "inner Stirling number read as S_2(l, m)",
        Classical,
        0,
        poly_euler,
        form!(Thm28 { transposed: true }),
    );
    let t29_lhs: super::Side = |t, n, k| {
        let e = &t.k(k)?.poly_euler[n - 1];
        Ok((&substitute_affine(e, &int(1), &int(1)) + e).scale(&int(n as i64)))
    };
    b.printed(
        "T2.9",
        "n E_{n-1}(x+1) + n E_{n-1}(x) = 2^n (beta_n(x+2) - beta_n(x))",
        Classical,
        1,
        t29_lhs,
        form!(Thm29 { rescaled: false }),
    );
    b.variant(
        "T2.9",
        "rescaled",
        "beta_n evaluated at x/2 + 1 and x/2",
        Classical,
        1,
        t29_lhs,
        form!(Thm29 { rescaled: true }),
    );

    b.add(
        "R-k1-classical",
        "euler",
        VariantClass::Reduction,
        "E_n^(1)(x) = E_n(x)",
        Classical,
        0,
        KMode::Only(1),
        MustPass::Yes,
        poly_euler,
        |t, n, _| Ok(t.euler[n].clone()),
    );
    b.add(
        "R-k1-classical",
        "polylog",
        VariantClass::Reduction,
        "Li_1(1 - e^{-2t}) = 2t",
        Classical,
        0,
        KMode::Only(1),
        MustPass::Yes,
        |t, n, k| Ok(rat(t.k(k)?.polylog_coeffs[n].clone())),
        |_, n, _| Ok(if n == 1 { rat(int(2)) } else { XLambdaPoly::zero() }),
    );

    b.printed(
        "T3.1",
        "degenerate binomial convolution with (x)_{l,λ}",
        Degenerate,
        0,
        deg_poly_euler,
        form!(Thm31),
    );
    b.must();
    b.printed(
        "T3.2",
        "expansion over (x)_m S_{2,λ}(m, l)",
        Degenerate,
        0,
        deg_poly_euler,
        form!(Thm32 { transposed: false }),
    );
    b.variant(
        "T3.2",
        "transposed",
        "inner Stirling number read as S_{2,λ}(l, m)",
        Degenerate,
        0,
        deg_poly_euler,
        form!(Thm32 { transposed: true }),
    );
    b.printed(
        "T3.3",
        "E_{n-1,λ}(1) + E_{n-1,λ} as a sum over S_{2,λ}(n, l)",
        Degenerate,
        1,
        |t, n, k| {
            let e = &t.k(k)?.deg_poly_euler[n - 1];
            Ok(&at_x(e, 1) + &at_x(e, 0))
        },
        form!(Thm33),
    );
    b.0.last_mut().expect("nonempty").must_pass = MustPass::UpTo(1);

    b.printed(
        "T3.4",
        "two double sums over S_{2,λ}",
        Degenerate,
        1,
        form!(Thm34Lhs),
        form!(Thm34Rhs),
    );
    b.oracle(
        "T3.4",
        "oracle-lhs-expansion",
        "printed left sum vs egf of u G(u), u = 1 - e_λ(-2t)",
        1,
        form!(Thm34Lhs),
        |t, n, k| Ok(lift(t.k(k)?.substitution.u_times_g[n].clone())),
    );
    b.oracle(
        "T3.4",
        "oracle-rhs-expansion",
        "egf of l_k(t) / (e_λ(u) + 1) vs printed right sum",
        1,
        |t, n, k| Ok(lift(t.k(k)?.substitution.polylog_over_euler_u[n].clone())),
        form!(Thm34Rhs),
    );
    b.oracle(
        "T3.4",
        "oracle-substitution",
        "u G(u) = l_k(t) / (e_λ(u) + 1) as series",
        0,
        |t, n, k| Ok(lift(t.k(k)?.substitution.u_times_g[n].clone())),
        |t, n, k| Ok(lift(t.k(k)?.substitution.polylog_over_euler_u[n].clone())),
    );

    b.printed(
        "T3.5",
        "two double sums over S_{1,λ}, both sides multiplied by λ",
        Degenerate,
        1,
        form!(Thm35LhsScaled),
        form!(Thm35RhsScaled),
    );
    b.variant(
        "T3.5",
        "drop-top-term",
        "left sum without its m = n term",
        Degenerate,
        1,
        form!(Thm35LhsWithoutTop),
        form!(Thm35Rhs),
    );
    b.oracle(
        "T3.5",
        "oracle-lhs-expansion",
        "λ times printed left sum vs λ times egf of s G(s), s = -log_λ(1+t)/2",
        1,
        form!(Thm35LhsScaled),
        |t, n, k| Ok(lift(&t.k(k)?.substitution.s_times_g[n] * &lambda())),
    );
    b.oracle(
        "T3.5",
        "oracle-rhs-expansion",
        "egf of l_k(-t) / (e_λ(s) + 1) vs printed right sum",
        1,
        |t, n, k| Ok(lift(t.k(k)?.substitution.polylog_over_euler_s[n].clone())),
        form!(Thm35Rhs),
    );
    b.oracle(
        "T3.5",
        "oracle-substitution",
        "s G(s) = l_k(-t) / (e_λ(s) + 1) as series",
        0,
        |t, n, k| Ok(lift(t.k(k)?.substitution.s_times_g[n].clone())),
        |t, n, k| Ok(lift(t.k(k)?.substitution.polylog_over_euler_s[n].clone())),
    );

    b.printed(
        "T3.6",
        "E_{n,λ}^(k) via degenerate poly-Bernoulli numbers",
        Degenerate,
        0,
        deg_poly_euler_number,
        form!(Thm36 { sign_m: false }),
    );
    b.variant(
        "T3.6",
        "sign-m",
        "sign (-1)^m in place of (-1)^l",
        Degenerate,
        0,
        deg_poly_euler_number,
        form!(Thm36 { sign_m: true }),
    );

    b.add(
        "R-k1-degenerate",
        "euler",
        VariantClass::Reduction,
        "E_{n,λ}^(1)(x) = E_{n,λ}(x)",
        Degenerate,
        0,
        KMode::Only(1),
        MustPass::Yes,
        deg_poly_euler,
        |t, n, _| Ok(t.deg_euler[n].clone()),
    );
    b.add(
        "R-k1-degenerate",
        "polylog",
        VariantClass::Reduction,
        "l_{1,λ}(1 - e_λ(-2t)) = 2t",
        Degenerate,
        0,
        KMode::Only(1),
        MustPass::Yes,
        |t, n, k| Ok(lift(t.k(k)?.deg_polylog_coeffs[n].clone())),
        |_, n, _| Ok(if n == 1 { rat(int(2)) } else { XLambdaPoly::zero() }),
    );

    let lambda0 = |b: &mut Builder, variant, description, k_mode, lhs: super::Side, rhs: super::Side| {
        b.add(
            "R-λ0",
            variant,
            VariantClass::Reduction,
            description,
            Degenerate,
            0,
            k_mode,
            MustPass::Yes,
            lhs,
            rhs,
        );
    };
    lambda0(
        &mut b,
        "stirling-first",
        "S_{1,λ}(n, l) at λ = 0 vs S_1(n, l), row n as Σ_l S(n, l) x^l",
        KMode::Free,
        |t, n, _| Ok(at_lambda_zero(&row_poly(&t.s1_deg, n))),
        |t, n, _| Ok(row_poly(&t.s1, n)),
    );
    lambda0(
        &mut b,
        "stirling-second",
        "S_{2,λ}(n, l) at λ = 0 vs S_2(n, l), row n as Σ_l S(n, l) x^l",
        KMode::Free,
        |t, n, _| Ok(at_lambda_zero(&row_poly(&t.s2_deg, n))),
        |t, n, _| Ok(row_poly(&t.s2, n)),
    );
    lambda0(
        &mut b,
        "euler",
        "E_{n,λ}(x) at λ = 0 vs E_n(x)",
        KMode::Free,
        |t, n, _| Ok(at_lambda_zero(&t.deg_euler[n])),
        |t, n, _| Ok(t.euler[n].clone()),
    );
    lambda0(
        &mut b,
        "bernoulli",
        "B_{n,λ}(x) at λ = 0 vs B_n(x)",
        KMode::Free,
        |t, n, _| Ok(at_lambda_zero(&t.deg_bernoulli[n])),
        |t, n, _| Ok(t.bernoulli[n].clone()),
    );
    lambda0(
        &mut b,
        "poly-bernoulli",
        "beta_{n,λ}^(k)(x) at λ = 0 vs Li_k(1 - e^{-t}) / (1 - e^{-t}) e^{-xt}",
        KMode::Each,
        |t, n, k| Ok(at_lambda_zero(&t.k(k)?.deg_poly_bernoulli[n])),
        |t, n, k| Ok(t.k(k)?.deg_poly_bernoulli_limit[n].clone()),
    );
    lambda0(
        &mut b,
        "poly-euler",
        "E_{n,λ}^(k)(x) at λ = 0 vs E_n^(k)(x)",
        KMode::Each,
        |t, n, k| Ok(at_lambda_zero(&t.k(k)?.deg_poly_euler[n])),
        poly_euler,
    );

    let pb_lhs: super::Side = |t, n, k| Ok(at_x(&t.k(k)?.poly_bernoulli[n], 0));
    let pb = |b: &mut Builder, variant, class, description, rhs: super::Side| {
        b.add(
            "PB-k1",
            variant,
            class,
            description,
            Classical,
            0,
            KMode::Only(1),
            MustPass::No,
            pb_lhs,
            rhs,
        );
    };
    pb(
        &mut b,
        "as-printed",
        VariantClass::Printed,
        "beta_n^(1) = -B_n",
        |t, n, _| Ok(-&at_x(&t.bernoulli[n], 0)),
    );
    pb(
        &mut b,
        "alternating",
        VariantClass::Variant,
        "beta_n^(1) = (-1)^n B_n",
        |t, n, _| {
            let b = at_x(&t.bernoulli[n], 0);
            Ok(if n % 2 == 0 { b } else { -&b })
        },
    );
    pb(&mut b, "plain", VariantClass::Variant, "beta_n^(1) = B_n", |t, n, _| {
        Ok(at_x(&t.bernoulli[n], 0))
    });

    b.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn registry_is_complete_and_duplicate_free() {
        let specs = register_builtin();
        let keys: BTreeSet<String> = specs.iter().map(IdentitySpec::key).collect();
        assert_eq!(keys.len(), specs.len());
        let numbered: BTreeSet<&str> = specs
            .iter()
            .map(|s| s.id)
            .filter(|id| id.starts_with(['L', 'T', 'C']))
            .collect();
        assert_eq!(numbered.len(), 15);
        assert!(specs.iter().any(|s| s.id == "T2.7"));
        assert!(!specs.iter().any(|s| s.id == "X9.9"));
        for id in numbered {
            assert!(specs.iter().any(|s| s.id == id && s.variant == "as-printed"), "{id}");
        }
    }
}
