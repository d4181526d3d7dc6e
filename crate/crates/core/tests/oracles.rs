//! Background families against independent constructions: brute-force
//! counting, direct expansion, and classical recurrences.

#![allow(clippy::needless_range_loop)]

use num_traits::{One, Zero};
use polyeuler_core::rational::{frac, int};
use polyeuler_core::scalar::{binomial, Coefficient};
use polyeuler_core::sequences::exp_log::{falling_factorial, falling_factorial_deg};
use polyeuler_core::sequences::families::{classical_family_table, degenerate_family_table, Family};
use polyeuler_core::sequences::stirling::{stirling, StirlingKind, StirlingTable};
use polyeuler_core::xlambda::{constant_value, lift, specialize, substitute_affine, unit_falling_deg, x};
use polyeuler_core::{LambdaPoly, Rational, XLambdaPoly};

/// Number of set partitions of `{0..n}` into exactly `k` blocks, by
/// enumerating restricted growth strings.
fn count_partitions(n: usize, k: usize) -> u64 {
    fn go(i: usize, n: usize, k: usize, used: usize) -> u64 {
        if i == n {
            return u64::from(used == k);
        }
        let mut total = 0;
        for b in 0..=used.min(k.saturating_sub(1)) {
            total += go(i + 1, n, k, used.max(b + 1));
        }
        total
    }
    if n == 0 {
        return u64::from(k == 0);
    }
    go(0, n, k, 0)
}

/// Coefficients of x(x-1)...(x-n+1) by repeated integer multiplication.
fn falling_expansion(n: usize) -> Vec<i64> {
    let mut p = vec![1i64];
    for j in 0..n as i64 {
        let mut next = vec![0i64; p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= j * c;
        }
        p = next;
    }
    p
}

fn rat_of(p: &LambdaPoly) -> Rational {
    constant_value(&lift(p.clone())).expect("λ-free entry")
}

#[test]
fn second_kind_matches_partition_count() {
    let t = StirlingTable::build(StirlingKind::Second, false, 8);
    for n in 0..=8 {
        for k in 0..=n {
            assert_eq!(
                rat_of(&t.get(n, k).unwrap()),
                int(count_partitions(n, k) as i64),
                "S_2({n},{k})"
            );
        }
    }
    assert_eq!(rat_of(&stirling(StirlingKind::Second, false, 3, 2).unwrap()), int(3));
}

#[test]
fn first_kind_matches_falling_factorial_expansion() {
    let t = StirlingTable::build(StirlingKind::First, false, 9);
    for n in 0..=9 {
        let direct = falling_expansion(n);
        for k in 0..=n {
            assert_eq!(rat_of(&t.get(n, k).unwrap()), int(direct[k]), "S_1({n},{k})");
        }
    }
    assert_eq!(rat_of(&stirling(StirlingKind::First, false, 3, 1).unwrap()), int(2));
}

#[test]
fn degenerate_tables_are_mutually_inverse() {
    let n_max = 10;
    let s1 = StirlingTable::build(StirlingKind::First, true, n_max);
    let s2 = StirlingTable::build(StirlingKind::Second, true, n_max);
    for n in 0..=n_max {
        for m in 0..=n_max {
            let mut acc = LambdaPoly::zero();
            for l in 0..=n_max {
                acc += &(&s1.get(n, l).unwrap() * &s2.get(l, m).unwrap());
            }
            let expected = if n == m { LambdaPoly::one() } else { LambdaPoly::zero() };
            assert_eq!(acc, expected, "({n},{m})");
        }
    }
}

#[test]
fn degenerate_falling_factorial_in_falling_basis() {
    // (x)_{n,λ} = Σ_l S_{2,λ}(n, l) (x)_l  and  (x)_n = Σ_l S_{1,λ}(n, l) (x)_{l,λ}
    let n_max = 10;
    let s1 = StirlingTable::build(StirlingKind::First, true, n_max);
    let s2 = StirlingTable::build(StirlingKind::Second, true, n_max);
    for n in 0..=n_max {
        let mut via_s2 = XLambdaPoly::zero();
        let mut via_s1 = XLambdaPoly::zero();
        for l in 0..=n {
            via_s2 += &(&lift(s2.get(n, l).unwrap()) * &falling_factorial(l));
            via_s1 += &(&lift(s1.get(n, l).unwrap()) * &falling_factorial_deg(l));
        }
        assert_eq!(via_s2, falling_factorial_deg(n), "n = {n}");
        assert_eq!(via_s1, falling_factorial(n), "n = {n}");
    }
}

#[test]
fn classical_stirling_bases() {
    // x^n = Σ S_2(n, l) (x)_l
    let s2 = StirlingTable::build(StirlingKind::Second, false, 10);
    for n in 0..=10 {
        let mut acc = XLambdaPoly::zero();
        for l in 0..=n {
            acc += &(&lift(s2.get(n, l).unwrap()) * &falling_factorial(l));
        }
        assert_eq!(acc, XLambdaPoly::monomial(LambdaPoly::one(), n));
    }
}

#[test]
fn bernoulli_numbers() {
    let b = classical_family_table(Family::Bernoulli, 10);
    let expected = [
        int(1),
        frac(-1, 2),
        frac(1, 6),
        int(0),
        frac(-1, 30),
        int(0),
        frac(1, 42),
        int(0),
        frac(-1, 30),
        int(0),
        frac(5, 66),
    ];
    for (n, e) in expected.iter().enumerate() {
        assert_eq!(
            constant_value(&specialize(&b[n], None, Some(&int(0)))).unwrap(),
            *e,
            "B_{n}"
        );
    }
}

#[test]
fn shift_relations_of_bernoulli_and_euler() {
    let b = classical_family_table(Family::Bernoulli, 12);
    let e = classical_family_table(Family::Euler, 12);
    for n in 0..=12 {
        let xn = XLambdaPoly::monomial(LambdaPoly::one(), n);
        // E_n(x + 1) + E_n(x) = 2 x^n
        assert_eq!(&substitute_affine(&e[n], &int(1), &int(1)) + &e[n], xn.scale(&int(2)));
        // B_n(x + 1) - B_n(x) = n x^{n-1}
        if n > 0 {
            let d = &substitute_affine(&b[n], &int(1), &int(1)) - &b[n];
            assert_eq!(d, XLambdaPoly::monomial(LambdaPoly::one(), n - 1).scale(&int(n as i64)));
        }
    }
    assert_eq!(e[1], &x() - &XLambdaPoly::from_scalars([frac(1, 2)]));
    assert_eq!(e[2], &(&x() * &x()) - &x());
}

#[test]
fn degenerate_euler_recurrence() {
    // (e_λ(t) + 1) Σ E_{n,λ}(x) t^n/n! = 2 e_λ^x(t), coefficientwise
    let e = degenerate_family_table(Family::Euler, 10);
    for n in 0..=10 {
        let mut lhs = e[n].clone();
        for l in 0..=n {
            let c = Rational::from_integer(binomial(n, l));
            lhs += &(&lift(unit_falling_deg(n - l)) * &e[l]).scale(&c);
        }
        assert_eq!(lhs, falling_factorial_deg(n).scale(&int(2)), "n = {n}");
    }
}

#[test]
fn degenerate_bernoulli_recurrence() {
    // Σ_l C(n, l) (1)_{n-l,λ} B_{l,λ}(x) - B_{n,λ}(x) = n (x)_{n-1,λ}
    let b = degenerate_family_table(Family::Bernoulli, 10);
    for n in 1..=10 {
        let mut lhs = -&b[n];
        for l in 0..=n {
            let c = Rational::from_integer(binomial(n, l));
            lhs += &(&lift(unit_falling_deg(n - l)) * &b[l]).scale(&c);
        }
        assert_eq!(lhs, falling_factorial_deg(n - 1).scale(&int(n as i64)), "n = {n}");
    }
}
