//! Truncated power series with exact rational coefficients.
//!
//! Binary operations truncate to the smaller operand order; no operation ever
//! extends the order.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `sum_{k=0}^{order} coeffs[k] x^k + O(x^{order+1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series1 {
    coeffs: Vec<Rational>,
}

impl Series1 {
    pub fn zero(order: usize) -> Self {
        Series1 { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// Pads or truncates `coeffs` to length `order + 1`.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Series1 { coeffs }
    }

    pub fn from_integers(values: &[i64], order: usize) -> Self {
        Self::from_coeffs(values.iter().map(|&v| rat(v)).collect(), order)
    }

    /// `e^{scale x}`.
    pub fn exp_scaled(scale: i64, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = Rational::one();
        for k in 0..=order {
            if k > 0 {
                term = term * rat(scale) / rat(k as i64);
            }
            coeffs.push(term.clone());
        }
        Series1 { coeffs }
    }

    /// `x / (1 - x)`.
    pub fn x_over_one_minus_x(order: usize) -> Self {
        let mut s = Self::zero(order);
        for c in s.coeffs.iter_mut().skip(1) {
            *c = Rational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series1 { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series1 { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = a0.recip();
        let n = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(Series1 { coeffs: out })
    }

    /// `self(inner(x))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Series1) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionOrder);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        // Horner: a_0 + inner (a_1 + inner (a_2 + ...)).
        let mut acc = Series1::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &(&acc * &inner) + &Series1::constant(c.clone(), order);
        }
        Ok(acc)
    }

    /// `c / (1 + c)`, the substitution for a sequence of clone letters.
    pub fn over_one_plus(&self) -> Result<Self> {
        let denom = &Series1::one(self.order()) + self;
        Ok(self * &denom.reciprocal()?)
    }
}

impl Add for &Series1 {
    type Output = Series1;
    fn add(self, rhs: &Series1) -> Series1 {
        let order = self.order().min(rhs.order());
        Series1 { coeffs: (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect() }
    }
}

impl Sub for &Series1 {
    type Output = Series1;
    fn sub(self, rhs: &Series1) -> Series1 {
        let order = self.order().min(rhs.order());
        Series1 { coeffs: (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect() }
    }
}

impl Neg for &Series1 {
    type Output = Series1;
    fn neg(self) -> Series1 {
        Series1 { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Series1 {
    type Output = Series1;
    fn mul(self, rhs: &Series1) -> Series1 {
        let order = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series1 { coeffs: out }
    }
}

/// `sum_{i<=nx, j<=ny} coeffs[i][j] x^i y^j`, truncated in each variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series2 {
    coeffs: Vec<Vec<Rational>>,
}

impl Series2 {
    pub fn zero(nx: usize, ny: usize) -> Self {
        Series2 { coeffs: vec![vec![Rational::zero(); ny + 1]; nx + 1] }
    }

    pub fn one(nx: usize, ny: usize) -> Self {
        let mut s = Self::zero(nx, ny);
        s.coeffs[0][0] = Rational::one();
        s
    }

    /// The series `x` (first variable).
    pub fn x(nx: usize, ny: usize) -> Self {
        let mut s = Self::zero(nx, ny);
        if nx >= 1 {
            s.coeffs[1][0] = Rational::one();
        }
        s
    }

    /// The series `y` (second variable).
    pub fn y(nx: usize, ny: usize) -> Self {
        let mut s = Self::zero(nx, ny);
        if ny >= 1 {
            s.coeffs[0][1] = Rational::one();
        }
        s
    }

    /// Embeds a series in the first variable.
    pub fn from_x(s: &Series1, nx: usize, ny: usize) -> Self {
        let mut out = Self::zero(nx, ny);
        for i in 0..=nx.min(s.order()) {
            out.coeffs[i][0] = s.coeff(i).clone();
        }
        out
    }

    /// Embeds a series in the second variable.
    pub fn from_y(s: &Series1, nx: usize, ny: usize) -> Self {
        let mut out = Self::zero(nx, ny);
        for j in 0..=ny.min(s.order()) {
            out.coeffs[0][j] = s.coeff(j).clone();
        }
        out
    }

    pub fn from_fn(nx: usize, ny: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        Series2 { coeffs: (0..=nx).map(|i| (0..=ny).map(|j| f(i, j)).collect()).collect() }
    }

    pub fn orders(&self) -> (usize, usize) {
        (self.coeffs.len() - 1, self.coeffs[0].len() - 1)
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Rational {
        &self.coeffs[i][j]
    }

    pub fn truncate(&self, nx: usize, ny: usize) -> Self {
        let (ox, oy) = self.orders();
        let (nx, ny) = (nx.min(ox), ny.min(oy));
        Series2 { coeffs: self.coeffs[..=nx].iter().map(|row| row[..=ny].to_vec()).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series2 {
            coeffs: self.coeffs.iter().map(|row| row.iter().map(|a| a * c).collect()).collect(),
        }
    }

    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0][0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = a0.recip();
        let (nx, ny) = self.orders();
        let mut out = Self::zero(nx, ny);
        for i in 0..=nx {
            for j in 0..=ny {
                if i == 0 && j == 0 {
                    out.coeffs[0][0] = inv0.clone();
                    continue;
                }
                let mut acc = Rational::zero();
                for a in 0..=i {
                    for b in 0..=j {
                        if (a, b) == (0, 0) || self.coeffs[a][b].is_zero() {
                            continue;
                        }
                        acc += &self.coeffs[a][b] * &out.coeffs[i - a][j - b];
                    }
                }
                out.coeffs[i][j] = -acc * &inv0;
            }
        }
        Ok(out)
    }

    /// `f(x, x)` up to total degree `order`; needs `order <= min(nx, ny)`.
    pub fn diagonal(&self, order: usize) -> Series1 {
        let (nx, ny) = self.orders();
        assert!(order <= nx && order <= ny, "diagonal order exceeds truncation");
        let mut out = Series1::zero(order);
        for i in 0..=order {
            for j in 0..=order - i {
                out.coeffs[i + j] += &self.coeffs[i][j];
            }
        }
        out
    }

    /// `self(c(x), t(x))`: both substituted series need zero constant term.
    pub fn substitute(&self, c: &Series1, t: &Series1) -> Result<Series1> {
        if !c.coeff(0).is_zero() || !t.coeff(0).is_zero() {
            return Err(Error::CompositionOrder);
        }
        let order = c.order().min(t.order());
        let (nx, ny) = self.orders();
        // Exact only when the truncation covers every contributing term.
        assert!(order <= nx && order <= ny, "substitution order exceeds truncation");
        let mut out = Series1::zero(order);
        let mut c_pow = Series1::one(order);
        for i in 0..=order {
            let mut term = c_pow.clone();
            for j in 0..=order - i {
                let coeff = &self.coeffs[i][j];
                if !coeff.is_zero() {
                    out = &out + &term.scale(coeff);
                }
                term = &term * t;
            }
            c_pow = &c_pow * c;
        }
        Ok(out)
    }
}

impl Add for &Series2 {
    type Output = Series2;
    fn add(self, rhs: &Series2) -> Series2 {
        let (ax, ay) = self.orders();
        let (bx, by) = rhs.orders();
        Series2::from_fn(ax.min(bx), ay.min(by), |i, j| &self.coeffs[i][j] + &rhs.coeffs[i][j])
    }
}

impl Sub for &Series2 {
    type Output = Series2;
    fn sub(self, rhs: &Series2) -> Series2 {
        let (ax, ay) = self.orders();
        let (bx, by) = rhs.orders();
        Series2::from_fn(ax.min(bx), ay.min(by), |i, j| &self.coeffs[i][j] - &rhs.coeffs[i][j])
    }
}

impl Mul for &Series2 {
    type Output = Series2;
    fn mul(self, rhs: &Series2) -> Series2 {
        let (ax, ay) = self.orders();
        let (bx, by) = rhs.orders();
        let (nx, ny) = (ax.min(bx), ay.min(by));
        let mut out = Series2::zero(nx, ny);
        for i in 0..=nx {
            for j in 0..=ny {
                let a = &self.coeffs[i][j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..=nx - i {
                    for l in 0..=ny - j {
                        let b = &rhs.coeffs[k][l];
                        if !b.is_zero() {
                            out.coeffs[i + k][j + l] += a * b;
                        }
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_reciprocal() {
        let one_minus_x = Series1::from_integers(&[1, -1], 6);
        assert_eq!(one_minus_x.reciprocal().unwrap(), Series1::from_integers(&[1; 7], 6));
        assert_eq!(Series1::zero(3).reciprocal(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn truncated_product() {
        let a = Series1::from_integers(&[1, 1], 2);
        let b = Series1::from_integers(&[1, -1], 2);
        assert_eq!(&a * &b, Series1::from_integers(&[1, 0, -1], 2));
        // Order never grows.
        let c = Series1::from_integers(&[1, 1, 1, 1], 3);
        assert_eq!((&a * &c).order(), 2);
    }

    #[test]
    fn inverse_of_bicoloured_prefix() {
        let b = Series1::from_integers(&[1, 2, 4, 8, 17], 4);
        assert_eq!(b.reciprocal().unwrap(), Series1::from_integers(&[1, -2, 0, 0, -1], 4));
    }

    #[test]
    fn composition() {
        // 1/(1-u) with u = x/(1+x) gives 1 + x.
        let geom = Series1::from_integers(&[1; 6], 5);
        let inner = Series1::x(5).over_one_plus().unwrap();
        assert_eq!(geom.compose(&inner).unwrap(), Series1::from_integers(&[1, 1], 5));
        assert_eq!(geom.compose(&Series1::one(5)), Err(Error::CompositionOrder));
    }

    #[test]
    fn exponential() {
        let e = Series1::exp_scaled(1, 4);
        let em = Series1::exp_scaled(-1, 4);
        assert_eq!(&e * &em, Series1::one(4));
        assert_eq!(e.coeff(3), &(rat(1) / rat(6)));
    }

    #[test]
    fn bivariate_basics() {
        let one_minus = &Series2::one(3, 3) - &(&Series2::x(3, 3) + &Series2::y(3, 3));
        let inv = one_minus.reciprocal().unwrap();
        // 1/(1-x-y) has binomial coefficients.
        assert_eq!(inv.coeff(2, 1), &rat(3));
        assert_eq!(inv.coeff(2, 2), &rat(6));
        assert_eq!(inv.diagonal(3), Series1::from_integers(&[1, 2, 4, 8], 3));
        let c = Series1::x(3);
        let t = Series1::zero(3);
        assert_eq!(inv.substitute(&c, &t).unwrap(), Series1::from_integers(&[1, 1, 1, 1], 3));
    }
}
