//! Generating functions for skeleta, bicoloured graphs, tangles and
//! (3+1)-free posets. Everything is exact.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use super::truncated::{rat, Rational, Series1, Series2};
use crate::error::{Error, Result};

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, i| acc * i)
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Skeleton generating function `S(c, t)` truncated at `c^nc`, `t^nt`.
///
/// Fixed-point iteration of `S = 1 + c/(1+c) S^2 + t S^3` from `S = 1`. Each
/// round fixes one more total degree, so `nc + nt + 1` rounds cover the
/// whole rectangle.
pub fn skeleton_series(nc: usize, nt: usize) -> Series2 {
    let c = Series1::x(nc).over_one_plus().expect("1 + c is invertible");
    let c_term = Series2::from_x(&c, nc, nt);
    let t = Series2::y(nc, nt);
    let one = Series2::one(nc, nt);
    let mut s = one.clone();
    for _ in 0..nc + nt + 1 {
        let sq = &s * &s;
        let cube = &sq * &s;
        s = &(&one + &(&c_term * &sq)) + &(&t * &cube);
    }
    s
}

/// Solves `P = 1 + C/(1+C) P^2 + T P^3` modulo `x^{order+1}`.
///
/// This is `S(C(x), T(x))` for the skeleton series `S`.
pub fn solve_counting_series(c: &Series1, t: &Series1, order: usize) -> Result<Series1> {
    if !c.coeff(0).is_zero() {
        return Err(Error::Valuation("clone series"));
    }
    if !t.coeff(0).is_zero() {
        return Err(Error::Valuation("tangle series"));
    }
    assert!(c.order() >= order && t.order() >= order, "inputs truncated below requested order");
    let c = c.truncate(order);
    let t = t.truncate(order);
    let u = c.over_one_plus()?;
    let one = Series1::one(order);
    let mut p = one.clone();
    for _ in 0..=order {
        let sq = &p * &p;
        let cube = &sq * &p;
        p = &(&one + &(&u * &sq)) + &(&t * &cube);
    }
    Ok(p)
}

/// `b_lbl(n) = sum_i C(n, i) 2^{i(n-i)}` for `n = 0..=order`.
pub fn b_lbl_counts(order: usize) -> Vec<BigUint> {
    (0..=order)
        .map(|n| (0..=n).map(|i| binomial(n, i) << (i * (n - i))).sum())
        .collect()
}

/// Integer partitions of `n` in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `z_lambda = prod_i i^{m_i} m_i!`.
pub fn centralizer_size(lambda: &[usize]) -> BigUint {
    let mut z = BigUint::one();
    let mut k = 0;
    while k < lambda.len() {
        let part = lambda[k];
        let mult = lambda[k..].iter().take_while(|&&x| x == part).count();
        z *= BigUint::from(part).pow(mult as u32) * factorial(mult);
        k += mult;
    }
    z
}

struct CycleType {
    parts: Vec<usize>,
    /// `|S_k| / z_lambda`: permutations with this cycle type.
    class_size: BigUint,
}

fn cycle_types(k: usize) -> Vec<CycleType> {
    let fact = factorial(k);
    partitions(k)
        .into_iter()
        .map(|parts| {
            let class_size = &fact / centralizer_size(&parts);
            CycleType { parts, class_size }
        })
        .collect()
}

/// Unlabelled bicoloured graphs with `k` tops and `m` bottoms.
///
/// Burnside over `S_k x S_m` acting on the `k m` edge slots, summed by cycle
/// type: a `p`-cycle of tops and a `q`-cycle of bottoms split their `p q`
/// slots into `gcd(p, q)` orbits.
fn b_unl_cell(tops: &[CycleType], bottoms: &[CycleType], k: usize, m: usize) -> BigUint {
    let mut total = BigUint::zero();
    for lam in tops {
        for mu in bottoms {
            let orbits: usize = lam
                .parts
                .iter()
                .map(|&p| mu.parts.iter().map(|&q| p.gcd(&q)).sum::<usize>())
                .sum();
            total += (&lam.class_size * &mu.class_size) << orbits;
        }
    }
    let denom = factorial(k) * factorial(m);
    let (q, r) = total.div_rem(&denom);
    assert!(r.is_zero(), "Burnside sum not divisible by group order");
    q
}

/// Table `b[k][m]` of unlabelled bicoloured graph counts for `k <= nx`,
/// `m <= ny`, restricted to `k + m <= max_total`.
fn b_unl_table(nx: usize, ny: usize, max_total: usize) -> Vec<Vec<BigUint>> {
    let per_size: Vec<Vec<CycleType>> = (0..=nx.max(ny)).map(cycle_types).collect();
    let cells: Vec<(usize, usize)> = (0..=nx)
        .flat_map(|k| (0..=ny).map(move |m| (k, m)))
        .filter(|&(k, m)| k + m <= max_total)
        .collect();
    let values: Vec<BigUint> = cells
        .par_iter()
        .map(|&(k, m)| b_unl_cell(&per_size[k], &per_size[m], k, m))
        .collect();
    let mut table = vec![vec![BigUint::zero(); ny + 1]; nx + 1];
    for ((k, m), v) in cells.into_iter().zip(values) {
        table[k][m] = v;
    }
    table
}

/// Unlabelled bicoloured graphs on `n` vertices, `n = 0..=order`.
pub fn b_unl_counts(order: usize) -> Vec<BigUint> {
    let table = b_unl_table(order, order, order);
    (0..=order)
        .map(|n| (0..=n).map(|k| table[k][n - k].clone()).sum())
        .collect()
}

/// Ordinary generating function `B_unl(x, y)`, `x` marking tops.
pub fn b_unl_bivariate(nx: usize, ny: usize) -> Series2 {
    let table = b_unl_table(nx, ny, nx + ny);
    Series2::from_fn(nx, ny, |i, j| Rational::from_integer(BigInt::from(table[i][j].clone())))
}

/// Exponential generating function `B_lbl(x, y) = sum 2^{ij} x^i y^j / (i! j!)`.
pub fn b_lbl_bivariate(nx: usize, ny: usize) -> Series2 {
    Series2::from_fn(nx, ny, |i, j| {
        Rational::new(
            BigInt::from(BigUint::one() << (i * j)),
            BigInt::from(factorial(i) * factorial(j)),
        )
    })
}

/// `T_unl(x, y) = 1 - x - y - B_unl(x, y)^{-1}`.
pub fn tangle_series_unl(nx: usize, ny: usize) -> Series2 {
    let inv = b_unl_bivariate(nx, ny).reciprocal().expect("constant term 1");
    let lin = &(&Series2::one(nx, ny) - &Series2::x(nx, ny)) - &Series2::y(nx, ny);
    &lin - &inv
}

/// `T_lbl(x, y) = e^{-x} + e^{-y} - 1 - B_lbl(x, y)^{-1}`.
pub fn tangle_series_lbl(nx: usize, ny: usize) -> Series2 {
    let inv = b_lbl_bivariate(nx, ny).reciprocal().expect("constant term 1");
    let ex = Series2::from_x(&Series1::exp_scaled(-1, nx), nx, ny);
    let ey = Series2::from_y(&Series1::exp_scaled(-1, ny), nx, ny);
    &(&(&ex + &ey) - &Series2::one(nx, ny)) - &inv
}

/// `T_unl(x, x) = 1 - 2x - B_unl(x)^{-1}`.
pub fn tangle_diagonal_unl(order: usize) -> Series1 {
    let b = integers_to_series(&b_unl_counts(order));
    let inv = b.reciprocal().expect("constant term 1");
    &Series1::from_integers(&[1, -2], order) - &inv
}

/// `T_lbl(x, x) = 2 e^{-x} - 1 - B_lbl(x)^{-1}` as an exponential series.
pub fn tangle_diagonal_lbl(order: usize) -> Series1 {
    let b = Series1::from_coeffs(
        b_lbl_counts(order)
            .into_iter()
            .enumerate()
            .map(|(n, v)| Rational::new(BigInt::from(v), BigInt::from(factorial(n))))
            .collect(),
        order,
    );
    let inv = b.reciprocal().expect("constant term 1");
    let two_exp = Series1::exp_scaled(-1, order).scale(&rat(2));
    &(&two_exp - &Series1::one(order)) - &inv
}

fn integers_to_series(values: &[BigUint]) -> Series1 {
    Series1::from_coeffs(
        values.iter().map(|v| Rational::from_integer(BigInt::from(v.clone()))).collect(),
        values.len() - 1,
    )
}

fn check_tangle_valuation(t: &Series1) {
    // The smallest tangle, the (2+2), has four vertices.
    if let Some(v) = t.valuation() {
        assert!(v >= 4, "tangle series has a term below x^4");
    }
}

/// Unlabelled (3+1)-free posets on `n` vertices, `n = 0..=order`.
pub fn p_unl_counts(order: usize) -> Vec<BigUint> {
    let t = tangle_diagonal_unl(order);
    check_tangle_valuation(&t);
    let c = Series1::x_over_one_minus_x(order);
    let p = solve_counting_series(&c, &t, order).expect("valuations checked");
    p.coeffs()
        .iter()
        .map(|r| {
            assert!(r.is_integer(), "ordinary generating function has a fractional coefficient");
            r.to_integer().to_biguint().expect("counts are nonnegative")
        })
        .collect()
}

/// Labelled (3+1)-free posets on `n` vertices, `n = 0..=order`.
pub fn p_lbl_counts(order: usize) -> Result<Vec<BigUint>> {
    let t = tangle_diagonal_lbl(order);
    check_tangle_valuation(&t);
    let c = &Series1::exp_scaled(1, order) - &Series1::one(order);
    let p = solve_counting_series(&c, &t, order)?;
    egf_to_counts(&p)
}

/// `n! [x^n] f` for every coefficient, failing on non-integers.
pub fn egf_to_counts(f: &Series1) -> Result<Vec<BigUint>> {
    f.coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| {
            let scaled = c * Rational::from_integer(BigInt::from(factorial(n)));
            if !scaled.is_integer() || scaled < Rational::zero() {
                return Err(Error::Integrality { index: n, value: scaled.to_string() });
            }
            Ok(scaled.to_integer().to_biguint().unwrap())
        })
        .collect()
}

/// Ratios that tend to 1: poset counts against bicoloured graph counts, and
/// labelled against symmetrised unlabelled bicoloured counts.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticRow {
    pub n: usize,
    pub unl_ratio: Rational,
    pub lbl_ratio: Rational,
    pub sym_ratio: Rational,
}

/// Default upper index for [`asymptotic_report`].
pub const ASYMPTOTIC_DEFAULT_ORDER: usize = 22;

pub fn asymptotic_report(order: usize) -> Result<Vec<AsymptoticRow>> {
    let p_unl = p_unl_counts(order);
    let p_lbl = p_lbl_counts(order)?;
    let b_unl = b_unl_counts(order);
    let b_lbl = b_lbl_counts(order);
    let r = |a: &BigUint, b: &BigUint| Rational::new(BigInt::from(a.clone()), BigInt::from(b.clone()));
    Ok((0..=order)
        .map(|n| AsymptoticRow {
            n,
            unl_ratio: r(&p_unl[n], &b_unl[n]),
            lbl_ratio: r(&p_lbl[n], &b_lbl[n]),
            sym_ratio: r(&(factorial(n) * &b_unl[n]), &b_lbl[n]),
        })
        .collect())
}

/// Decimal rendering of a nonnegative rational with `digits` fractional
/// digits, truncated toward zero.
pub fn to_decimal(r: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (r * Rational::from_integer(scale)).to_integer();
    let neg = scaled < BigInt::zero();
    let s = scaled.magnitude().to_string();
    let s = format!("{s:0>width$}", width = digits + 1);
    let (int, frac) = s.split_at(s.len() - digits);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// `|r - 1|`.
pub fn distance_from_one(r: &Rational) -> Rational {
    let d = r - Rational::one();
    if d < Rational::zero() {
        -d
    } else {
        d
    }
}

/// Lossy conversion for display only.
pub fn approx_f64(r: &Rational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}
