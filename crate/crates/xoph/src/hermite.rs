//! Hermite polynomials, partitions, Wronskians, and the exceptional family.
//!
//! A partition `lambda` selects the seed set `K = {lambda_i + i - 1}`. The
//! Wronskian of the seed Hermite polynomials `h(k_1),...,h(k_l)` produces
//! `eta`, an order-`l` raising operator `A` (Wronskian cofactor expansion),
//! a lowering operator `B` (product of first-order rational factors), and
//! the exceptional family `hhat(n,x) = A(h(n+l-N,x))`, which skips exactly
//! `N` degrees.

use std::fmt;

use num_traits::One;

use crate::diffop::{DiffOp, PolyDiffOp, RatDiffOp};
use crate::error::{Error, Result};
use crate::poly::{Poly, XPoly};
use crate::rat::{rat, Rat};
use crate::ratfun::{RatFun, XRatFun};

/// Physicists' Hermite polynomial of degree `k`.
pub fn hermite(k: u32) -> XPoly {
    let mut prev = XPoly::one();
    if k == 0 {
        return prev;
    }
    let two_x = XPoly::from_ints(&[0, 2]);
    let mut cur = two_x.clone();
    for m in 1..k {
        let next = &(&two_x * &cur) - &prev.scale(&rat(2 * m as i64));
        prev = cur;
        cur = next;
    }
    cur
}

/// The classical family over all integers: `h(n)` for `n >= 0`, zero below.
pub fn classical(n: i64) -> XPoly {
    if n < 0 {
        XPoly::zero()
    } else {
        hermite(n as u32)
    }
}

/// Determinant by expansion along the first column.
fn det(rows: &[Vec<XPoly>]) -> XPoly {
    let m = rows.len();
    if m == 0 {
        return XPoly::one();
    }
    fn go(rows: &[Vec<XPoly>], active: &mut Vec<usize>, col: usize) -> XPoly {
        if active.len() == 1 {
            return rows[active[0]][col].clone();
        }
        let mut acc = XPoly::zero();
        for i in 0..active.len() {
            let r = active.remove(i);
            if !rows[r][col].is_zero() {
                let minor = go(rows, active, col + 1);
                let term = &rows[r][col] * &minor;
                acc = if i % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            active.insert(i, r);
        }
        acc
    }
    let mut active: Vec<usize> = (0..m).collect();
    go(rows, &mut active, 0)
}

/// Wronskian determinant: row `i` holds the `i`-th derivatives.
/// The empty Wronskian is 1 and a singleton is the function itself.
pub fn wronskian(ps: &[XPoly]) -> XPoly {
    let m = ps.len();
    let mut rows: Vec<Vec<XPoly>> = vec![ps.to_vec()];
    for i in 1..m {
        let prev = &rows[i - 1];
        rows.push(prev.iter().map(Poly::derivative).collect());
    }
    det(&rows)
}

/// Non-decreasing sequence of positive integers with the derived data
/// `K = {lambda_i + i - 1}`, `N = sum(lambda_i)`, `l = len`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be non-decreasing, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts `l`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total weight `N`.
    pub fn weight(&self) -> i64 {
        self.parts.iter().map(|&p| p as i64).sum()
    }

    /// Seed indices `k_i = lambda_i + i - 1`, strictly increasing.
    pub fn k_values(&self) -> Vec<i64> {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p as i64 + i as i64)
            .collect()
    }

    /// Index offset `l - N` between the exceptional degree and the
    /// underlying classical index.
    pub fn index_shift(&self) -> i64 {
        self.len() as i64 - self.weight()
    }

    /// First `j` parts.
    pub fn truncated(&self, j: usize) -> Partition {
        Partition {
            parts: self.parts[..j].to_vec(),
        }
    }

    /// Even length with equal parts in consecutive pairs. Even partitions
    /// are the ones whose exceptional family is a genuine orthogonal system;
    /// recorded as metadata only.
    pub fn is_even(&self) -> bool {
        self.len() % 2 == 0 && self.parts.chunks(2).all(|c| c[0] == c[1])
    }

    pub fn degrees(&self) -> DegreeSet {
        DegreeSet {
            min: self.weight() - self.len() as i64,
            shift: self.index_shift(),
            k: self.k_values(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The permitted degrees `{ n >= N-l : n+l-N not in K }`; exactly `N`
/// nonnegative integers are missing.
#[derive(Clone, PartialEq, Eq)]
pub struct DegreeSet {
    min: i64,
    shift: i64,
    k: Vec<i64>,
}

impl DegreeSet {
    pub fn contains(&self, n: i64) -> bool {
        n >= self.min && self.k.binary_search(&(n + self.shift)).is_err()
    }

    /// The missing degrees `{0,...,N-l-1}` followed by `{k_i + N - l}`.
    pub fn missing(&self) -> Vec<i64> {
        (0..self.min)
            .chain(self.k.iter().map(|&ki| ki - self.shift))
            .collect()
    }

    /// Permitted degrees up to and including `n_max`.
    pub fn up_to(&self, n_max: i64) -> Vec<i64> {
        (0..=n_max).filter(|&n| self.contains(n)).collect()
    }
}

/// Wronskian of the first `j` seed Hermite polynomials;
/// `eta_truncated(lam, 0) = 1`.
pub fn eta_truncated(lam: &Partition, j: usize) -> XPoly {
    let seeds: Vec<XPoly> = lam.k_values()[..j]
        .iter()
        .map(|&k| hermite(k as u32))
        .collect();
    wronskian(&seeds)
}

/// The full seed Wronskian; degree `N`.
pub fn eta(lam: &Partition) -> XPoly {
    eta_truncated(lam, lam.len())
}

/// Raising operator of order `l` defined by the bordered Wronskian
/// `A(y) = Wr{h(k_1),...,h(k_l),y}`, expanded in cofactors along the
/// `y` column. The leading coefficient is `eta`.
pub fn op_a(lam: &Partition) -> PolyDiffOp {
    let l = lam.len();
    if l == 0 {
        return PolyDiffOp::identity();
    }
    let mut rows: Vec<Vec<XPoly>> =
        vec![lam.k_values().iter().map(|&k| hermite(k as u32)).collect()];
    for i in 1..=l {
        let prev = &rows[i - 1];
        rows.push(prev.iter().map(Poly::derivative).collect());
    }
    let mut coeffs = Vec::with_capacity(l + 1);
    for i in 0..=l {
        let minor_rows: Vec<Vec<XPoly>> = (0..=l).filter(|&r| r != i).map(|r| rows[r].clone()).collect();
        let minor = det(&minor_rows);
        coeffs.push(if (i + l) % 2 == 0 { minor } else { -&minor });
    }
    DiffOp::new(coeffs)
}

/// First-order factor `A_j = (eta_j/eta_{j-1}) (D - eta_j'/eta_j)`, 1-indexed.
pub fn op_a_factor(lam: &Partition, j: usize) -> RatDiffOp {
    assert!(j >= 1 && j <= lam.len());
    let prev = eta_truncated(lam, j - 1);
    let cur = eta_truncated(lam, j);
    DiffOp::new(vec![
        -&RatFun::new(cur.derivative(), prev.clone()),
        RatFun::new(cur, prev),
    ])
}

/// The raising operator rebuilt as the product `A_l o ... o A_1` of its
/// first-order factors; all denominators must cancel.
pub fn op_a_factored(lam: &Partition) -> Result<PolyDiffOp> {
    let mut acc = RatDiffOp::identity();
    for j in 1..=lam.len() {
        acc = op_a_factor(lam, j).compose(&acc);
    }
    acc.into_polynomial()
}

/// First-order factor
/// `B_j = (eta_{j-1}/eta_j) (D - (2x + eta_{j-1}'/eta_{j-1}))`, 1-indexed.
pub fn op_b_factor(lam: &Partition, j: usize) -> RatDiffOp {
    assert!(j >= 1 && j <= lam.len());
    let prev = eta_truncated(lam, j - 1);
    let cur = eta_truncated(lam, j);
    let two_x_prev = &prev * &XPoly::from_ints(&[0, 2]);
    DiffOp::new(vec![
        -&RatFun::new(&two_x_prev + &prev.derivative(), cur.clone()),
        RatFun::new(prev, cur),
    ])
}

/// Lowering operator of order `l` as the product `B_1 o B_2 o ... o B_l`;
/// leading coefficient `1/eta`.
pub fn op_b(lam: &Partition) -> RatDiffOp {
    let mut acc = RatDiffOp::identity();
    for j in (1..=lam.len()).rev() {
        acc = op_b_factor(lam, j).compose(&acc);
    }
    acc
}

/// Second-order eigenoperator attached to the truncation `lambda^(j)`:
/// `T_j(y) = y'' - 2(x + e'/e) y' + (e''/e + 2x e'/e) y` with
/// `e = eta_j`. `j = 0` is the classical operator, `j = l` the exceptional
/// one.
pub fn op_t(lam: &Partition, j: usize) -> RatDiffOp {
    let e = eta_truncated(lam, j);
    let x = XPoly::var();
    let de = e.derivative();
    let c1 = -&RatFun::new(&(&x * &e) + &de, e.clone()).scale(&rat(2));
    let c0 = RatFun::new(
        &de.derivative() + &(&x.scale(&rat(2)) * &de),
        e,
    );
    DiffOp::new(vec![c0, c1, XRatFun::one()])
}

/// The exceptional eigenoperator `T_l` for the full partition.
pub fn op_t_hat(lam: &Partition) -> RatDiffOp {
    op_t(lam, lam.len())
}

/// Classical Hermite operator `y'' - 2x y'` with polynomial coefficients.
pub fn classical_t() -> PolyDiffOp {
    DiffOp::new(vec![
        XPoly::zero(),
        XPoly::from_ints(&[0, -2]),
        XPoly::one(),
    ])
}

/// The exceptional Hermite family for a fixed partition, with the raising
/// operator precomputed so that repeated evaluation stays cheap.
#[derive(Clone)]
pub struct ExceptionalFamily {
    partition: Partition,
    a: PolyDiffOp,
    degrees: DegreeSet,
}

impl ExceptionalFamily {
    pub fn new(lam: &Partition) -> Self {
        ExceptionalFamily {
            partition: lam.clone(),
            a: op_a(lam),
            degrees: lam.degrees(),
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn degrees(&self) -> &DegreeSet {
        &self.degrees
    }

    /// `hhat(n,x) = A(h(n+l-N,x))`: a degree-`n` polynomial on the permitted
    /// degrees, the zero polynomial everywhere else (negative underlying
    /// index or repeated Wronskian row).
    pub fn eval(&self, n: i64) -> XPoly {
        if !self.degrees.contains(n) {
            return XPoly::zero();
        }
        let m = n + self.partition.index_shift();
        self.a.apply(&hermite(m as u32))
    }
}

/// One-off evaluation of the exceptional polynomial of degree `n`.
pub fn exceptional_hermite(lam: &Partition, n: i64) -> XPoly {
    ExceptionalFamily::new(lam).eval(n)
}

/// Total degree of the product of seed Hermite degrees minus the staircase:
/// a quick internal sanity check that `eta` has degree `N`.
#[allow(dead_code)]
fn eta_expected_degree(lam: &Partition) -> i64 {
    lam.weight()
}
