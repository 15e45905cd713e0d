//! Dense univariate polynomials over the exact rationals.
//!
//! The two variables in play never mix: polynomials in `x` carry the
//! spatial data (Hermite polynomials, Wronskians, stabilizer elements),
//! polynomials in `n` carry recurrence coefficients. The variable is a
//! zero-sized type parameter, so adding an `x`-polynomial to an
//! `n`-polynomial is a compile error rather than a runtime check.

use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{rat, Rat};

/// Marker for the variable a polynomial is written in.
pub trait Variable:
    Copy + Clone + fmt::Debug + Default + PartialEq + Eq + std::hash::Hash + 'static
{
    const SYMBOL: &'static str;
}

/// The continuous variable.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct X;

/// The discrete (sequence-index) variable.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct N;

impl Variable for X {
    const SYMBOL: &'static str = "x";
}
impl Variable for N {
    const SYMBOL: &'static str = "n";
}

/// Dense coefficient vector indexed by exponent; the leading coefficient is
/// nonzero unless the polynomial is zero (empty vector).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<V: Variable> {
    coeffs: Vec<Rat>,
    var: PhantomData<V>,
}

pub type XPoly = Poly<X>;
pub type NPoly = Poly<N>;

impl<V: Variable> Poly<V> {
    /// Builds from low-to-high coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly {
            coeffs,
            var: PhantomData,
        }
    }

    pub fn zero() -> Self {
        Poly::new(Vec::new())
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The variable itself as a degree-1 polynomial.
    pub fn var() -> Self {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    /// `c * v^e`.
    pub fn monomial(c: Rat, e: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); e + 1];
        coeffs[e] = c;
        Poly::new(coeffs)
    }

    /// Convenience constructor from small integer coefficients, low-to-high.
    pub fn from_ints(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| rat(c)).collect())
    }

    /// `v + c` for integer `c`.
    pub fn linear(c: i64) -> Self {
        Poly::from_ints(&[c, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `v^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn eval(&self, at: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    pub fn eval_int(&self, at: i64) -> Rat {
        self.eval(&rat(at))
    }

    /// Derivative with respect to the variable.
    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// Antiderivative vanishing at 0: `p(v) -> integral of p from 0 to v`.
    pub fn integrate0(&self) -> Self {
        let mut coeffs = vec![Rat::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c / rat(i as i64 + 1)),
        );
        Poly::new(coeffs)
    }

    /// Argument translation `p(v) -> p(v + offset)`.
    pub fn shift_arg(&self, offset: i64) -> Self {
        let step = Poly::linear(offset);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &step) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.degree().unwrap();
        let sd = match self.degree() {
            Some(sd) if sd >= dd => sd,
            _ => return (Poly::zero(), self.clone()),
        };
        let lead = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); sd - dd + 1];
        for i in (dd..=sd).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / &lead;
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = &rem[i - dd + j] - &(&q * b);
            }
            quot[i - dd] = q;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact division: `self = divisor * result`, or [`Error::NotDivisible`].
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scaled to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = self.leading_coeff().recip();
        self.scale(&inv)
    }

    /// The positive scalar `s` such that `s * p` has coprime integer
    /// coefficients; 1 for the zero polynomial.
    pub fn primitive_scale(&self) -> Rat {
        if self.is_zero() {
            return Rat::one();
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in &self.coeffs {
            let scaled = c * Rat::from_integer(den_lcm.clone());
            num_gcd = num_gcd.gcd(&scaled.to_integer());
        }
        Rat::new(den_lcm, num_gcd)
    }
}

impl<V: Variable> Add for &Poly<V> {
    type Output = Poly<V>;
    fn add(self, rhs: Self) -> Poly<V> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<V: Variable> Sub for &Poly<V> {
    type Output = Poly<V>;
    fn sub(self, rhs: Self) -> Poly<V> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<V: Variable> Neg for &Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<V: Variable> Mul for &Poly<V> {
    type Output = Poly<V>;
    fn mul(self, rhs: Self) -> Poly<V> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(out)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl<V: Variable> $trait for Poly<V> {
            type Output = Poly<V>;
            fn $method(self, rhs: Self) -> Poly<V> {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<V: Variable> Neg for Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        -&self
    }
}

/// Rising factorial as a polynomial in `n`:
/// `pochhammer(s, m) = (n+s)(n+s+1)...(n+s+m-1)`, with the empty product 1.
pub fn pochhammer(shift: i64, count: u32) -> NPoly {
    let mut p = NPoly::one();
    for i in 0..count {
        p = &p * &NPoly::linear(shift + i as i64);
    }
    p
}

impl<V: Variable> fmt::Display for Poly<V> {
    /// Terms in descending degree, e.g. `8x^2 + 4` or `2x^3 + 3x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let var_part = match e {
                0 => String::new(),
                1 => V::SYMBOL.to_string(),
                _ => format!("{}^{}", V::SYMBOL, e),
            };
            if e == 0 {
                write!(f, "{}", crate::rat::fmt_rat(&a))?;
            } else if a.is_one() {
                write!(f, "{var_part}")?;
            } else if a.is_integer() {
                write!(f, "{}{var_part}", a.numer())?;
            } else {
                write!(f, "({}){var_part}", crate::rat::fmt_rat(&a))?;
            }
        }
        Ok(())
    }
}

impl<V: Variable> fmt::Debug for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
