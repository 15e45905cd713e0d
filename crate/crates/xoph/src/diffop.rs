//! Differential operators in `x` with polynomial or rational coefficients.
//!
//! An operator is stored in normal form `sum_j c_j(x) D^j` with every
//! multiplication operator to the left of the derivative powers, as a dense
//! coefficient vector indexed by derivative order. Composition rewrites
//! `D o c(x) = c(x) D + c'(x)` and iterates.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::{XPoly, X};
use crate::rat::Rat;
use crate::ratfun::{RatFun, XRatFun};

/// Coefficient ring for a differential operator: closed under the arithmetic
/// needed by Leibniz-normal-form composition.
pub trait OpCoeff: Clone + PartialEq + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, s: &Rat) -> Self;
    fn derivative(&self) -> Self;
}

impl OpCoeff for XPoly {
    fn zero() -> Self {
        XPoly::zero()
    }
    fn one() -> Self {
        XPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, s: &Rat) -> Self {
        self.scale(s)
    }
    fn derivative(&self) -> Self {
        self.derivative()
    }
}

impl OpCoeff for XRatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn one() -> Self {
        RatFun::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, s: &Rat) -> Self {
        self.scale(s)
    }
    fn derivative(&self) -> Self {
        self.derivative()
    }
}

/// `sum_j coeffs[j] * D^j`; the top coefficient is nonzero unless the
/// operator is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct DiffOp<C: OpCoeff> {
    coeffs: Vec<C>,
}

/// Operator with polynomial coefficients.
pub type PolyDiffOp = DiffOp<XPoly>;
/// Operator with rational-function coefficients.
pub type RatDiffOp = DiffOp<XRatFun>;

impl<C: OpCoeff> DiffOp<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(OpCoeff::is_zero) {
            coeffs.pop();
        }
        DiffOp { coeffs }
    }

    pub fn zero() -> Self {
        DiffOp::new(Vec::new())
    }

    pub fn identity() -> Self {
        DiffOp::new(vec![C::one()])
    }

    /// The multiplication operator `y -> c * y`.
    pub fn mul_by(c: C) -> Self {
        DiffOp::new(vec![c])
    }

    /// The bare derivative `D`.
    pub fn d() -> Self {
        DiffOp::new(vec![C::zero(), C::one()])
    }

    /// `c * D^j`.
    pub fn term(c: C, j: usize) -> Self {
        let mut coeffs = vec![C::zero(); j + 1];
        coeffs[j] = c;
        DiffOp::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Order of the operator; zero for the zero operator.
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of `D^j`, zero beyond the order.
    pub fn coeff(&self, j: usize) -> C {
        self.coeffs.get(j).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn scale(&self, s: &Rat) -> Self {
        DiffOp::new(self.coeffs.iter().map(|c| c.scale(s)).collect())
    }

    /// Left-composition with the bare derivative: `D o self`.
    fn d_compose(&self) -> Self {
        let mut out = vec![C::zero(); self.coeffs.len() + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            out[j + 1] = out[j + 1].add(c);
            out[j] = out[j].add(&c.derivative());
        }
        DiffOp::new(out)
    }

    /// Operator composition `self o rhs` in normal form.
    pub fn compose(&self, rhs: &Self) -> Self {
        let mut acc = DiffOp::zero();
        // powers[j] = D^j o rhs
        let mut power = rhs.clone();
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                power = power.d_compose();
            }
            if c.is_zero() {
                continue;
            }
            let scaled = DiffOp::new(power.coeffs.iter().map(|p| c.mul(p)).collect());
            acc = &acc + &scaled;
        }
        acc
    }
}

impl PolyDiffOp {
    /// Applies the operator to a polynomial: `sum_j c_j(x) p^(j)(x)`.
    pub fn apply(&self, p: &XPoly) -> XPoly {
        let mut acc = XPoly::zero();
        let mut dp = p.clone();
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                dp = dp.derivative();
            }
            acc = &acc + &(c * &dp);
        }
        acc
    }
}

impl RatDiffOp {
    /// Applies the operator to a polynomial; the result is a reduced rational
    /// function that the caller may cast back down.
    pub fn apply(&self, p: &XPoly) -> XRatFun {
        let mut acc = XRatFun::zero();
        let mut dp = p.clone();
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                dp = dp.derivative();
            }
            acc = &acc + &c.mul(&RatFun::from(dp.clone()));
        }
        acc
    }

    /// Checked cast into the polynomial ring; fails with
    /// [`Error::DenominatorNotCleared`] if any coefficient kept a
    /// denominator.
    pub fn into_polynomial(self) -> Result<PolyDiffOp> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            match c.as_polynomial() {
                Some(p) => coeffs.push(p.clone()),
                None => return Err(Error::DenominatorNotCleared),
            }
        }
        Ok(DiffOp::new(coeffs))
    }
}

impl From<PolyDiffOp> for RatDiffOp {
    fn from(op: PolyDiffOp) -> Self {
        DiffOp::new(op.coeffs.iter().cloned().map(RatFun::from).collect())
    }
}

impl<C: OpCoeff> Add for &DiffOp<C> {
    type Output = DiffOp<C>;
    fn add(self, rhs: Self) -> DiffOp<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DiffOp::new((0..n).map(|j| self.coeff(j).add(&rhs.coeff(j))).collect())
    }
}

impl<C: OpCoeff> Sub for &DiffOp<C> {
    type Output = DiffOp<C>;
    fn sub(self, rhs: Self) -> DiffOp<C> {
        self + &(-rhs)
    }
}

impl<C: OpCoeff> Neg for &DiffOp<C> {
    type Output = DiffOp<C>;
    fn neg(self) -> DiffOp<C> {
        DiffOp::new(self.coeffs.iter().map(OpCoeff::neg).collect())
    }
}

impl<C: OpCoeff> Mul for &DiffOp<C> {
    type Output = DiffOp<C>;
    fn mul(self, rhs: Self) -> DiffOp<C> {
        self.compose(rhs)
    }
}

impl<C: OpCoeff> fmt::Display for DiffOp<C> {
    /// Terms in descending derivative order, `D` for the derivative.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c}) D")?,
                _ => write!(f, "({c}) D^{j}")?,
            }
        }
        Ok(())
    }
}

impl<C: OpCoeff> fmt::Debug for DiffOp<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Marker re-export so callers can name the variable of the coefficients.
pub type VarX = X;
