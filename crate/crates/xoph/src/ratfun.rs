//! Rational functions in one variable, kept in reduced canonical form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::poly::{Poly, Variable, N, X};
use crate::rat::Rat;

/// Quotient of two polynomials with `gcd(num, den) = 1` and a monic
/// denominator, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun<V: Variable> {
    num: Poly<V>,
    den: Poly<V>,
}

pub type XRatFun = RatFun<X>;
pub type NRatFun = RatFun<N>;

impl<V: Variable> RatFun<V> {
    /// Builds `num/den` in canonical form; panics on a zero denominator.
    pub fn new(num: Poly<V>, den: Poly<V>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFun {
                num,
                den: Poly::one(),
            };
        }
        if den.is_one() {
            return RatFun { num, den };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let lead = den.leading_coeff().recip();
        RatFun {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn zero() -> Self {
        RatFun::from(Poly::zero())
    }

    pub fn one() -> Self {
        RatFun::from(Poly::one())
    }

    pub fn constant(c: Rat) -> Self {
        RatFun::from(Poly::constant(c))
    }

    /// `1/p`.
    pub fn inverse_of(p: Poly<V>) -> Self {
        RatFun::new(Poly::one(), p)
    }

    pub fn num(&self) -> &Poly<V> {
        &self.num
    }

    pub fn den(&self) -> &Poly<V> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The underlying polynomial when the denominator is trivial.
    pub fn as_polynomial(&self) -> Option<&Poly<V>> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return RatFun::zero();
        }
        RatFun {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of the zero rational function");
        RatFun::new(self.den.clone(), self.num.clone())
    }

    /// Quotient rule derivative (for `x`-coefficients of operators).
    pub fn derivative(&self) -> Self {
        if self.is_polynomial() {
            return RatFun::from(self.num.derivative());
        }
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RatFun::new(n, &self.den * &self.den)
    }

    /// Argument translation (for `n`-coefficients under shift commutation).
    pub fn shift_arg(&self, offset: i64) -> Self {
        // coprimality and the monic denominator survive translation
        RatFun {
            num: self.num.shift_arg(offset),
            den: self.den.shift_arg(offset),
        }
    }

    /// Exact value at an integer point, or `None` on a pole.
    pub fn eval_int(&self, at: i64) -> Option<Rat> {
        let d = self.den.eval_int(at);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_int(at) / d)
    }
}

impl<V: Variable> From<Poly<V>> for RatFun<V> {
    fn from(p: Poly<V>) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }
}

impl<V: Variable> Add for &RatFun<V> {
    type Output = RatFun<V>;
    fn add(self, rhs: Self) -> RatFun<V> {
        RatFun::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<V: Variable> Sub for &RatFun<V> {
    type Output = RatFun<V>;
    fn sub(self, rhs: Self) -> RatFun<V> {
        RatFun::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<V: Variable> Mul for &RatFun<V> {
    type Output = RatFun<V>;
    fn mul(self, rhs: Self) -> RatFun<V> {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics when dividing by the zero rational function.
impl<V: Variable> Div for &RatFun<V> {
    type Output = RatFun<V>;
    fn div(self, rhs: Self) -> RatFun<V> {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFun::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl<V: Variable> Neg for &RatFun<V> {
    type Output = RatFun<V>;
    fn neg(self) -> RatFun<V> {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<V: Variable> fmt::Display for RatFun<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<V: Variable> fmt::Debug for RatFun<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
