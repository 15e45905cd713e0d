//! The bispectral anti-isomorphism, the stabilizer ring, and the recurrence
//! operator for exceptional Hermite families.
//!
//! The map [`flat`] sends a polynomial-coefficient differential operator in
//! `x` to a difference operator in `n` acting identically on the classical
//! Hermite family, reversing composition order. Conjugating `B o f o A`
//! through it and dividing by the eigenvalue polynomial yields a difference
//! operator with `hhat(n,x)` as eigenfunction and eigenvalue `f(x)` — an
//! explicit recurrence relation of order `2 deg f` for the exceptional
//! family.

use std::collections::HashMap;
use std::fmt;

use crate::diffop::{PolyDiffOp, RatDiffOp};
use crate::error::{Error, Result};
use crate::hermite::{eta, op_a, op_b, ExceptionalFamily, Partition};
use crate::poly::{pochhammer, NPoly, XPoly};
use crate::rat::{binom, frac, pow2, rat, Rat};
use crate::ratfun::{NRatFun, RatFun};
use crate::shiftop::ShiftOp;

/// Degree-raising operator `(1/2) S + n S^-1`; realizes multiplication by
/// `x` on the classical Hermite family.
pub fn delta() -> ShiftOp {
    &ShiftOp::term(1, NRatFun::constant(frac(1, 2)))
        + &ShiftOp::term(-1, NRatFun::from(NPoly::var()))
}

/// Degree-lowering operator `2n S^-1`; realizes `d/dx` on the classical
/// Hermite family.
pub fn gamma() -> ShiftOp {
    ShiftOp::term(-1, NRatFun::from(NPoly::var().scale(&rat(2))))
}

/// Evaluates a coefficient polynomial at the raising operator by Horner's
/// scheme in the shift-operator ring.
fn eval_at_delta(c: &XPoly, d: &ShiftOp) -> ShiftOp {
    let mut acc = ShiftOp::zero();
    for coeff in c.coeffs().iter().rev() {
        acc = &acc.compose(d) + &ShiftOp::constant(coeff.clone());
    }
    acc
}

/// The bispectral anti-isomorphism on monomials `x^i D^j -> Γ^j Δ^i`,
/// extended linearly: `sum_j c_j(x) D^j` maps to `sum_j Γ^j o c_j(Δ)`.
///
/// It reverses composition (`flat(Q o R) = flat(R) o flat(Q)`) and an
/// operator and its image act identically on the classical Hermite family.
pub fn flat(q: &PolyDiffOp) -> ShiftOp {
    let d = delta();
    let g = gamma();
    let mut gamma_pow = ShiftOp::identity();
    let mut acc = ShiftOp::zero();
    for j in 0..=q.order() {
        if j > 0 {
            gamma_pow = gamma_pow.compose(&g);
        }
        let c = q.coeff(j);
        if c.is_zero() {
            continue;
        }
        acc = &acc + &gamma_pow.compose(&eval_at_delta(&c, &d));
    }
    acc
}

/// Eigenvalue polynomial of `B o A` on the classical family:
/// `pi(n) = prod_i (-2n + 2 k_i)`, with the empty product 1.
pub fn pi(lam: &Partition) -> NPoly {
    let mut p = NPoly::one();
    for k in lam.k_values() {
        p = &p * &NPoly::from_ints(&[2 * k, -2]);
    }
    p
}

/// Sufficient stabilizer test: `f` stabilizes the exceptional family
/// whenever `eta` divides `f'`. (Also necessary when `eta` has only simple
/// roots.)
pub fn is_stabilizer(lam: &Partition, f: &XPoly) -> bool {
    f.derivative().div_exact(&eta(lam)).is_ok()
}

/// The minimal-degree stabilizer `int_0^x eta(s) ds`, degree `N+1`,
/// no rescaling.
pub fn minimal_stabilizer(lam: &Partition) -> XPoly {
    eta(lam).integrate0()
}

/// Rescales to coprime integer coefficients (positive scale factor).
pub fn integer_normalized(f: &XPoly) -> XPoly {
    f.scale(&f.primitive_scale())
}

/// Composes `B o (f *) o A` in the rational ring and casts down to the
/// polynomial ring, which must succeed for any stabilizer `f`.
pub fn bfa(lam: &Partition, f: &XPoly) -> Result<PolyDiffOp> {
    let a = RatDiffOp::from(op_a(lam));
    let mul_f = RatDiffOp::mul_by(RatFun::from(f.clone()));
    op_b(lam).compose(&mul_f).compose(&a).into_polynomial()
}

/// A difference operator carrying the relation
/// `f(x) * hhat(n,x) = sum_k a_k(n) * hhat(n+k,x)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Recurrence {
    partition: Partition,
    f: XPoly,
    op: ShiftOp,
}

impl Recurrence {
    /// Assembles a recurrence from parts, re-checking the offset bound.
    pub fn from_parts(partition: Partition, f: XPoly, op: ShiftOp) -> Result<Self> {
        let bound = f.degree().unwrap_or(0) as i64;
        if op.offsets().iter().any(|&k| k.abs() > bound) {
            return Err(Error::Parse(format!(
                "offset outside [-{bound}, {bound}] for the given f"
            )));
        }
        Ok(Recurrence { partition, f, op })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// The eigenvalue polynomial `f(x)`.
    pub fn f(&self) -> &XPoly {
        &self.f
    }

    /// The difference operator itself.
    pub fn op(&self) -> &ShiftOp {
        &self.op
    }
}

impl fmt::Debug for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Recurrence {{ partition: {}, f: {}, op: {} }}",
            self.partition, self.f, self.op
        )
    }
}

/// Builds the recurrence operator
/// `S^(l-N) o flat(B o f o A) o (1/pi(n)) o S^(N-l)`
/// for a stabilizer polynomial `f`.
pub fn recurrence(lam: &Partition, f: &XPoly) -> Result<Recurrence> {
    if !is_stabilizer(lam, f) {
        return Err(Error::NotAStabilizer);
    }
    let p = bfa(lam, f)?;
    let s = flat(&p);
    let inv_pi = ShiftOp::term(0, NRatFun::new(NPoly::one(), pi(lam)));
    let op = s.compose(&inv_pi).conjugated(lam.weight() - lam.len() as i64);

    // support is confined to [-deg f, deg f] with offsets of one parity
    let bound = f.degree().unwrap_or(0) as i64;
    debug_assert!(op.offsets().iter().all(|&k| k.abs() <= bound));
    Ok(Recurrence {
        partition: lam.clone(),
        f: f.clone(),
        op,
    })
}

/// Closed form of the one-step relation for `lambda = (k)` with
/// `f = h(k+1)`:
///
/// `h(k+1,x) hhat(n,x) = (n-2k+1) sum_{j=0}^{k+1} 2^j C(k+1,j)
///     (n+3-k-j)_(j-1) hhat(n+k+1-2j, x)`,
///
/// where the rising factorial extends to `(X)_(-1) = 1/(X-1)`.
pub fn one_step_recurrence(k: u32) -> Recurrence {
    assert!(k >= 1, "one-step families need k >= 1");
    let lam = Partition::new(vec![k]).expect("single positive part");
    let f = crate::hermite::hermite(k + 1);
    let lead = NRatFun::from(NPoly::linear(1 - 2 * k as i64));
    let mut op = ShiftOp::zero();
    for j in 0..=(k + 1) {
        let offset = (k + 1) as i64 - 2 * j as i64;
        let scalar = pow2(j) * binom(k + 1, j);
        let poch = if j == 0 {
            // (X)_(-1) = 1/(X-1) with X = n+3-k
            NRatFun::new(NPoly::one(), NPoly::linear(2 - k as i64))
        } else {
            NRatFun::from(pochhammer(3 - k as i64 - j as i64, j - 1))
        };
        op = &op + &ShiftOp::term(offset, (&lead * &poch).scale(&scalar));
    }
    Recurrence {
        partition: lam,
        f,
        op,
    }
}

/// Linearization of the Hermite polynomial evaluated at the raising
/// operator: `h(k, Δ) = sum_j 2^j C(k,j) (n-j+1)_j S^(k-2j)`.
pub fn hermite_in_delta(k: u32) -> ShiftOp {
    let mut op = ShiftOp::zero();
    for j in 0..=k {
        let scalar = pow2(j) * binom(k, j);
        let coeff = pochhammer(1 - j as i64, j).scale(&scalar);
        op = &op + &ShiftOp::term(k as i64 - 2 * j as i64, NRatFun::from(coeff));
    }
    op
}

/// One failed comparison: the relation evaluated at `n` produced `got`
/// instead of `f * hhat(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub n: i64,
    pub expected: XPoly,
    pub got: XPoly,
}

/// A coefficient denominator vanished at a checked index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleIncident {
    pub offset: i64,
    pub at: i64,
}

/// Outcome of checking a recurrence on every permitted degree up to a bound.
/// Failures and pole incidents are data, not errors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checked: Vec<i64>,
    pub failures: Vec<Mismatch>,
    pub poles: Vec<PoleIncident>,
}

impl VerificationReport {
    /// True when every checked index matched exactly and no coefficient had
    /// a pole.
    pub fn verified(&self) -> bool {
        self.failures.is_empty() && self.poles.is_empty()
    }
}

/// Checks `sum_k a_k(n) hhat(n+k) = f * hhat(n)` exactly for every permitted
/// degree `n <= n_max`. Comparison is exact polynomial identity; indices
/// where a coefficient has a pole are recorded and not compared.
pub fn verify_recurrence(rec: &Recurrence, n_max: i64) -> VerificationReport {
    let fam = ExceptionalFamily::new(rec.partition());
    let mut cache: HashMap<i64, XPoly> = HashMap::new();
    let mut hhat = |n: i64, cache: &mut HashMap<i64, XPoly>| -> XPoly {
        cache.entry(n).or_insert_with(|| fam.eval(n)).clone()
    };

    let mut report = VerificationReport::default();
    for n in rec.partition().degrees().up_to(n_max) {
        report.checked.push(n);
        let mut sum = XPoly::zero();
        let mut clean = true;
        for (k, a) in rec.op().terms() {
            match a.eval_int(n) {
                None => {
                    report.poles.push(PoleIncident { offset: k, at: n });
                    clean = false;
                }
                Some(c) => {
                    if !c.is_zero() {
                        sum = &sum + &hhat(n + k, &mut cache).scale(&c);
                    }
                }
            }
        }
        if !clean {
            continue;
        }
        let expected = rec.f() * &hhat(n, &mut cache);
        if sum != expected {
            report.failures.push(Mismatch {
                n,
                expected,
                got: sum,
            });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffop::DiffOp;
    use crate::hermite::{classical, classical_t, hermite};
    use crate::poly::Poly;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn p11() -> Partition {
        Partition::new(vec![1, 1]).unwrap()
    }

    fn f_mtd() -> XPoly {
        // x(3 + 2x^2)
        XPoly::from_ints(&[0, 3, 0, 2])
    }

    #[test]
    fn flat_of_x_is_delta() {
        assert_eq!(flat(&PolyDiffOp::mul_by(XPoly::var())), delta());
        assert_eq!(flat(&PolyDiffOp::d()), gamma());
    }

    #[test]
    fn flat_reverses_composition() {
        // flat(D o x) = flat(x D + 1) = delta o gamma = (n+1) + 2n(n-1) S^-2
        let dox = PolyDiffOp::d().compose(&PolyDiffOp::mul_by(XPoly::var()));
        let image = flat(&dox);
        assert_eq!(image, delta().compose(&gamma()));
        let expected = &ShiftOp::mul_by(NPoly::linear(1))
            + &ShiftOp::term(-2, NRatFun::from(NPoly::from_ints(&[0, -2, 2])));
        assert_eq!(image, expected);
    }

    #[test]
    fn flat_of_classical_operator_is_constant() {
        // flat(T) = -2n, matching T h(n) = -2n h(n)
        let image = flat(&classical_t());
        assert_eq!(image, ShiftOp::mul_by(NPoly::from_ints(&[0, -2])));
    }

    fn random_op(rng: &mut StdRng) -> PolyDiffOp {
        let order = rng.gen_range(0..=2usize);
        DiffOp::new(
            (0..=order)
                .map(|_| {
                    XPoly::new(
                        (0..=rng.gen_range(0..=3usize))
                            .map(|_| rat(rng.gen_range(-4..=4)))
                            .collect(),
                    )
                })
                .collect(),
        )
    }

    #[test]
    fn flat_is_an_anti_homomorphism() {
        let mut rng = StdRng::seed_from_u64(30);
        for _ in 0..30 {
            let q = random_op(&mut rng);
            let r = random_op(&mut rng);
            assert_eq!(flat(&q.compose(&r)), flat(&r).compose(&flat(&q)));
        }
    }

    #[test]
    fn flat_acts_like_the_operator_on_the_classical_family() {
        let mut rng = StdRng::seed_from_u64(31);
        for _ in 0..12 {
            let q = random_op(&mut rng);
            let image = flat(&q);
            for n in 0..=15 {
                let direct = q.apply(&classical(n));
                let via_shift = image.apply(classical, n).unwrap();
                assert_eq!(direct, via_shift);
            }
        }
    }

    #[test]
    fn pi_values() {
        assert!(pi(&Partition::empty()).is_one());
        // 4(n-1)(n-2)
        assert_eq!(pi(&p11()), NPoly::from_ints(&[8, -12, 4]));
        // 16(n-1)(n-2)(n-4)(n-5) for lambda=(1,1,2,2)
        let lam = Partition::new(vec![1, 1, 2, 2]).unwrap();
        let expected = (&pochhammer(-2, 2) * &pochhammer(-5, 2)).scale(&rat(16));
        assert_eq!(pi(&lam), expected);
    }

    #[test]
    fn stabilizer_tests() {
        // x is not a stabilizer for (1,1): f' = 1
        assert!(!is_stabilizer(&p11(), &XPoly::var()));
        // x(3+2x^2) is
        assert!(is_stabilizer(&p11(), &f_mtd()));
        // everything stabilizes the empty partition
        assert!(is_stabilizer(&Partition::empty(), &XPoly::from_ints(&[5, 1, 7])));
        // constants always stabilize
        assert!(is_stabilizer(&p11(), &XPoly::constant(rat(3))));
    }

    #[test]
    fn minimal_stabilizer_values() {
        assert_eq!(minimal_stabilizer(&Partition::empty()), XPoly::var());
        // (2,2): 24x + (32/5)x^5
        let f = minimal_stabilizer(&Partition::new(vec![2, 2]).unwrap());
        assert_eq!(
            f,
            XPoly::new(vec![rat(0), rat(24), rat(0), rat(0), rat(0), frac(32, 5)])
        );
        // (1,1): 4x + (8/3)x^3 = (4/3) x(3+2x^2)
        let f = minimal_stabilizer(&p11());
        assert_eq!(f, f_mtd().scale(&frac(4, 3)));
        assert_eq!(integer_normalized(&f), f_mtd());
        // the minimal stabilizer is always a stabilizer of degree N+1
        for parts in [vec![1], vec![3], vec![1, 2], vec![1, 1, 2, 2]] {
            let lam = Partition::new(parts).unwrap();
            let f = minimal_stabilizer(&lam);
            assert!(is_stabilizer(&lam, &f));
            assert_eq!(f.degree(), Some(lam.weight() as usize + 1));
        }
    }

    #[test]
    fn bfa_trivial_and_one_step() {
        // empty partition: B o f o A is multiplication by f
        let f = XPoly::var();
        assert_eq!(
            bfa(&Partition::empty(), &f).unwrap(),
            PolyDiffOp::mul_by(f)
        );
        // one-step k=1 with f = h(2): h(2)y'' - h(3)y' + 2(h(2) - 4h(0))y
        let lam = Partition::new(vec![1]).unwrap();
        let got = bfa(&lam, &hermite(2)).unwrap();
        let expected = DiffOp::new(vec![
            &hermite(2).scale(&rat(2)) - &XPoly::from_ints(&[8]),
            -&hermite(3),
            hermite(2),
        ]);
        assert_eq!(got, expected);
    }

    #[test]
    fn bfa_rejects_non_stabilizers_via_denominators() {
        // f = x fails to clear denominators for (1,1)
        assert_eq!(
            bfa(&p11(), &XPoly::var()),
            Err(Error::DenominatorNotCleared)
        );
    }

    #[test]
    fn bfa_four_term_example() {
        // B o f o A for lambda=(1,1), f = x(3+2x^2):
        // x(3+2x^2) y'''' + (6-8x^4) y''' - x(6+8x^2-8x^4) y''
        //   + x^2(24-16x^2) y' - x(24-16x^2) y
        let got = bfa(&p11(), &f_mtd()).unwrap();
        let expected = DiffOp::new(vec![
            XPoly::from_ints(&[0, -24, 0, 16]),
            XPoly::from_ints(&[0, 0, 24, 0, -16]),
            XPoly::from_ints(&[0, -6, 0, -8, 0, 8]),
            XPoly::from_ints(&[6, 0, 0, 0, -8]),
            f_mtd(),
        ]);
        assert_eq!(got, expected);
    }

    #[test]
    fn recurrence_classical_three_term() {
        // empty partition, f = x: the relation x h(n) = (1/2)h(n+1) + n h(n-1)
        let rec = recurrence(&Partition::empty(), &XPoly::var()).unwrap();
        assert_eq!(rec.op(), &delta());
        let report = verify_recurrence(&rec, 10);
        assert!(report.verified());
        assert_eq!(report.checked.len(), 11);
    }

    #[test]
    fn recurrence_rejects_non_stabilizer() {
        assert_eq!(
            recurrence(&p11(), &XPoly::var()),
            Err(Error::NotAStabilizer)
        );
    }

    #[test]
    fn four_term_relation_coefficients() {
        // scaled by 4, the (1,1) relation has the four known coefficients
        let rec = recurrence(&p11(), &f_mtd()).unwrap();
        let op4 = rec.op().scale(&rat(4));
        assert_eq!(op4.offsets(), vec![-3, -1, 1, 3]);
        assert_eq!(
            op4.coeff(3),
            NRatFun::new(pochhammer(-2, 2), pochhammer(1, 2))
        );
        assert_eq!(op4.coeff(1), NRatFun::from(pochhammer(-2, 1).scale(&rat(6))));
        assert_eq!(op4.coeff(-1), NRatFun::from(pochhammer(-1, 2).scale(&rat(12))));
        assert_eq!(op4.coeff(-3), NRatFun::from(pochhammer(-2, 3).scale(&rat(8))));
    }

    #[test]
    fn flat_bfa_four_term_example() {
        let image = flat(&bfa(&p11(), &f_mtd()).unwrap());
        assert_eq!(image.offsets(), vec![-3, -1, 1, 3]);
        assert_eq!(image.coeff(3), NRatFun::from(pochhammer(-2, 2)));
        assert_eq!(image.coeff(1), NRatFun::from(pochhammer(-2, 3).scale(&rat(6))));
        assert_eq!(
            image.coeff(-1),
            NRatFun::from(pochhammer(-3, 4).scale(&rat(12)))
        );
        assert_eq!(
            image.coeff(-3),
            NRatFun::from((&pochhammer(-5, 2) * &pochhammer(-2, 3)).scale(&rat(8)))
        );
    }

    #[test]
    fn hermite_in_delta_matches_direct_evaluation() {
        let d = delta();
        for k in 0..=8u32 {
            let closed = hermite_in_delta(k);
            let direct = super::eval_at_delta(&hermite(k), &d);
            assert_eq!(closed, direct, "k = {k}");
        }
        // spot checks
        assert_eq!(hermite_in_delta(0), ShiftOp::identity());
        assert_eq!(hermite_in_delta(1), delta().scale(&rat(2)));
        let k2 = &(&ShiftOp::shift(2) + &ShiftOp::mul_by(NPoly::from_ints(&[0, 4])))
            + &ShiftOp::term(-2, NRatFun::from(NPoly::from_ints(&[0, -4, 4])));
        assert_eq!(hermite_in_delta(2), k2);
    }

    #[test]
    fn one_step_closed_form_matches_pipeline() {
        for k in 1..=6u32 {
            let closed = one_step_recurrence(k);
            let piped = recurrence(closed.partition(), closed.f()).unwrap();
            assert_eq!(closed, piped, "k = {k}");
        }
        // k=1 coefficient at the top offset is (n-1)/(n+1)
        let rec = one_step_recurrence(1);
        assert_eq!(
            rec.op().coeff(2),
            NRatFun::new(NPoly::linear(-1), NPoly::linear(1))
        );
    }

    #[test]
    fn eigenvalue_equations() {
        // (B o A) h(n) = pi(n) h(n) and (A o B) hhat(n) = pi(n-N+l) hhat(n)
        for parts in [vec![1], vec![1, 1], vec![2, 2], vec![1, 2]] {
            let lam = Partition::new(parts).unwrap();
            let ba = op_b(&lam).compose(&RatDiffOp::from(op_a(&lam)));
            let ab = RatDiffOp::from(op_a(&lam)).compose(&op_b(&lam));
            let p = pi(&lam);
            let fam = ExceptionalFamily::new(&lam);
            for n in 0..=20 {
                let h = classical(n);
                let lhs = ba.apply(&h);
                assert_eq!(lhs.as_polynomial(), Some(&h.scale(&p.eval_int(n))));
                if fam.degrees().contains(n) {
                    let hh = fam.eval(n);
                    let lhs = ab.apply(&hh);
                    let eig = p.eval_int(n - lam.weight() + lam.len() as i64);
                    assert_eq!(lhs.as_polynomial(), Some(&hh.scale(&eig)));
                }
            }
        }
    }

    #[test]
    fn product_factorisations() {
        // B o A = (T + 2k_1) o ... o (T + 2k_l)
        for parts in [vec![1], vec![1, 1], vec![2, 2], vec![1, 2]] {
            let lam = Partition::new(parts).unwrap();
            let ba = op_b(&lam).compose(&RatDiffOp::from(op_a(&lam)));
            let mut prod = RatDiffOp::identity();
            for k in lam.k_values() {
                let factor = &RatDiffOp::from(classical_t())
                    + &RatDiffOp::mul_by(RatFun::constant(rat(2 * k)));
                prod = prod.compose(&factor);
            }
            assert_eq!(ba, prod);

            // A o B = (T_hat - 2l + 2k_1) o ... o (T_hat - 2l + 2k_l)
            let ab = RatDiffOp::from(op_a(&lam)).compose(&op_b(&lam));
            let that = crate::hermite::op_t_hat(&lam);
            let mut prod = RatDiffOp::identity();
            for k in lam.k_values() {
                let shift = 2 * k - 2 * lam.len() as i64;
                let factor = &that + &RatDiffOp::mul_by(RatFun::constant(rat(shift)));
                prod = prod.compose(&factor);
            }
            assert_eq!(ab, prod);
            // cross-check by action on monomials
            for m in 0..=(2 * lam.len() + 2) {
                let xm = XPoly::monomial(Rat::one(), m);
                assert_eq!(ab.apply(&xm), prod.apply(&xm));
            }
        }
    }

    #[test]
    fn flat_of_product_factorisation_acts_as_pi() {
        for parts in [vec![1], vec![1, 1]] {
            let lam = Partition::new(parts).unwrap();
            let ba = op_b(&lam)
                .compose(&RatDiffOp::from(op_a(&lam)))
                .into_polynomial()
                .unwrap();
            let image = flat(&ba);
            // same image as flat of the (T + 2k_i) product
            let mut prod = PolyDiffOp::identity();
            for k in lam.k_values() {
                let factor = &classical_t() + &PolyDiffOp::mul_by(XPoly::constant(rat(2 * k)));
                prod = prod.compose(&factor);
            }
            assert_eq!(image, flat(&prod));
            // and it acts on the classical family as multiplication by pi(n)
            let p = pi(&lam);
            for n in 0..=20 {
                let got = image.apply(classical, n).unwrap();
                assert_eq!(got, classical(n).scale(&p.eval_int(n)));
            }
        }
    }

    #[test]
    fn verify_multi_step_relations() {
        // lambda=(1,1) with the cleared stabilizer
        let rec = recurrence(&p11(), &f_mtd()).unwrap();
        let report = verify_recurrence(&rec, 20);
        assert!(report.verified(), "failures: {:?}", report.failures);

        // 4-step lambda=(1,1,2,2) with the known degree-7 stabilizer
        let lam = Partition::new(vec![1, 1, 2, 2]).unwrap();
        let f = XPoly::from_ints(&[0, 105, 0, 70, 0, 84, 0, 24]);
        assert!(is_stabilizer(&lam, &f));
        let rec = recurrence(&lam, &f).unwrap();
        let report = verify_recurrence(&rec, 20);
        assert!(report.verified(), "failures at {:?}", report.failures.iter().map(|m| m.n).collect::<Vec<_>>());
    }

    #[test]
    fn verify_detects_corruption() {
        let rec = recurrence(&p11(), &f_mtd()).unwrap();
        let mut bad_op = rec.op().clone();
        bad_op = &bad_op + &ShiftOp::term(1, NRatFun::constant(rat(1)));
        let bad = Recurrence::from_parts(p11(), f_mtd(), bad_op).unwrap();
        let report = verify_recurrence(&bad, 12);
        assert!(!report.verified());
        assert!(!report.failures.is_empty());
    }

    #[test]
    fn recurrence_offsets_stay_in_band_with_single_parity() {
        for parts in [vec![], vec![1], vec![2], vec![1, 1], vec![2, 2], vec![1, 2]] {
            let lam = Partition::new(parts).unwrap();
            let f = minimal_stabilizer(&lam);
            let rec = recurrence(&lam, &f).unwrap();
            let d = f.degree().unwrap() as i64;
            for k in rec.op().offsets() {
                assert!(k.abs() <= d);
                assert_eq!((k - d).rem_euclid(2), 0, "offset parity for {lam:?}");
            }
        }
    }

    #[test]
    fn no_poles_on_permitted_degrees() {
        // conjectural but tested: coefficient denominators stay nonzero on
        // the permitted degrees up to 30
        for parts in [vec![], vec![1], vec![2], vec![1, 1], vec![2, 2], vec![1, 2], vec![1, 1, 2, 2]] {
            let lam = Partition::new(parts).unwrap();
            let rec = recurrence(&lam, &minimal_stabilizer(&lam)).unwrap();
            let report = verify_recurrence(&rec, 30);
            assert!(report.poles.is_empty(), "poles for {lam:?}: {:?}", report.poles);
        }
    }
}
