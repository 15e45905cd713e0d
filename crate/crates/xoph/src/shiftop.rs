//! Difference operators in the sequence index `n`.
//!
//! A shift operator is a finite Laurent-style sum `sum_k a_k(n) S^k` where
//! `S` is the unit forward shift, `S(g)(n) = g(n+1)`, and every coefficient
//! is a rational function of `n` written to the left of the shift power.
//! Composition follows `S^j o a(n) = a(n+j) S^j`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::{NPoly, XPoly};
use crate::rat::Rat;
use crate::ratfun::NRatFun;

/// Map from shift offset to coefficient; zero coefficients are never stored,
/// so equality of term maps is equality of operators.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ShiftOp {
    terms: BTreeMap<i64, NRatFun>,
}

impl ShiftOp {
    pub fn zero() -> Self {
        ShiftOp::default()
    }

    pub fn identity() -> Self {
        ShiftOp::shift(0)
    }

    /// The pure shift `S^k`.
    pub fn shift(k: i64) -> Self {
        ShiftOp::term(k, NRatFun::one())
    }

    /// A single term `a(n) S^k`.
    pub fn term(k: i64, a: NRatFun) -> Self {
        let mut op = ShiftOp::zero();
        op.insert(k, a);
        op
    }

    /// The multiplication operator by a polynomial in `n`.
    pub fn mul_by(p: NPoly) -> Self {
        ShiftOp::term(0, NRatFun::from(p))
    }

    pub fn constant(c: Rat) -> Self {
        ShiftOp::term(0, NRatFun::constant(c))
    }

    fn insert(&mut self, k: i64, a: NRatFun) {
        if a.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(a);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &a;
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Offsets with nonzero coefficient, ascending.
    pub fn offsets(&self) -> Vec<i64> {
        self.terms.keys().copied().collect()
    }

    /// Coefficient of `S^k`, zero if absent.
    pub fn coeff(&self, k: i64) -> NRatFun {
        self.terms.get(&k).cloned().unwrap_or_else(NRatFun::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &NRatFun)> {
        self.terms.iter().map(|(k, a)| (*k, a))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return ShiftOp::zero();
        }
        ShiftOp {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (*k, a.scale(s)))
                .collect(),
        }
    }

    /// Composition `self o rhs` using `a(n)S^j o b(n)S^k = a(n) b(n+j) S^(j+k)`.
    pub fn compose(&self, rhs: &Self) -> Self {
        let mut out = ShiftOp::zero();
        for (&j, a) in &self.terms {
            for (&k, b) in &rhs.terms {
                out.insert(j + k, a * &b.shift_arg(j));
            }
        }
        out
    }

    /// Conjugation `S^(-m) o self o S^m`: offsets are unchanged and every
    /// coefficient `a(n)` becomes `a(n-m)`.
    pub fn conjugated(&self, m: i64) -> Self {
        ShiftOp::shift(-m).compose(&self.compose(&ShiftOp::shift(m)))
    }

    /// Applies the operator to an indexed family of polynomials at index
    /// `at`: `sum_k a_k(at) * family(at + k)`. The family decides which
    /// indices are vacuous (and returns zero there); a pole in a coefficient
    /// is an error, never skipped.
    pub fn apply<F>(&self, family: F, at: i64) -> Result<XPoly>
    where
        F: Fn(i64) -> XPoly,
    {
        let mut acc = XPoly::zero();
        for (&k, a) in &self.terms {
            let c = a
                .eval_int(at)
                .ok_or(Error::PoleAtIndex { offset: k, at })?;
            if c.is_zero() {
                continue;
            }
            acc = &acc + &family(at + k).scale(&c);
        }
        Ok(acc)
    }
}

impl Add for &ShiftOp {
    type Output = ShiftOp;
    fn add(self, rhs: Self) -> ShiftOp {
        let mut out = self.clone();
        for (&k, a) in &rhs.terms {
            out.insert(k, a.clone());
        }
        out
    }
}

impl Sub for &ShiftOp {
    type Output = ShiftOp;
    fn sub(self, rhs: Self) -> ShiftOp {
        self + &(-rhs)
    }
}

impl Neg for &ShiftOp {
    type Output = ShiftOp;
    fn neg(self) -> ShiftOp {
        ShiftOp {
            terms: self.terms.iter().map(|(k, a)| (*k, -a)).collect(),
        }
    }
}

impl Mul for &ShiftOp {
    type Output = ShiftOp;
    fn mul(self, rhs: Self) -> ShiftOp {
        self.compose(rhs)
    }
}

impl fmt::Display for ShiftOp {
    /// Terms in descending offset, `Θ` for the unit shift.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, a) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({a})")?,
                1 => write!(f, "({a}) Θ")?,
                _ => write!(f, "({a}) Θ^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ShiftOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
