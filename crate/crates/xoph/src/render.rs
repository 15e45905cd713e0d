//! Text and LaTeX rendering with best-effort Pochhammer factoring.
//!
//! Recurrence coefficients are rational functions of `n` whose numerators
//! and denominators factor almost entirely into runs of consecutive integer
//! roots; such a run `(n-r)(n-r+1)...` prints as a rising factorial
//! `(n-r')_m`. Factoring is display-only and never feeds back into the
//! exact objects.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

use crate::bispectral::Recurrence;
use crate::diffop::{OpCoeff, PolyDiffOp, RatDiffOp};
use crate::poly::{NPoly, Poly, Variable, XPoly};
use crate::rat::{fmt_rat, latex_rat, rat, Rat};
use crate::ratfun::NRatFun;
use crate::shiftop::ShiftOp;

/// One rising-factorial block `((n - top)_len)^power`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Run {
    top: i64,
    len: u32,
    power: u32,
}

/// `poly = scalar * prod(runs) * residual`, with the residual primitive over
/// the integers, positive leading coefficient, and no integer roots.
#[derive(Clone, Debug)]
struct Factored {
    scalar: Rat,
    runs: Vec<Run>,
    residual: Option<NPoly>,
}

/// Candidate window for integer roots; factoring is best-effort, so roots
/// beyond the window simply stay inside the residual.
fn root_bound(p: &NPoly) -> i64 {
    let lead = p.leading_coeff();
    let mut max: Rat = Rat::zero();
    for c in p.coeffs() {
        let q = (c / &lead).abs();
        if q > max {
            max = q;
        }
    }
    let b = (max.to_integer() + BigInt::from(2)).to_i64().unwrap_or(512);
    b.min(512)
}

fn factor_poly(p: &NPoly) -> Factored {
    if p.is_zero() {
        return Factored {
            scalar: Rat::zero(),
            runs: Vec::new(),
            residual: None,
        };
    }
    let mut q = p.clone();
    let mut roots: BTreeMap<i64, u32> = BTreeMap::new();
    let bound = root_bound(p);
    for r in -bound..=bound {
        while q.degree().unwrap_or(0) > 0 && q.eval_int(r).is_zero() {
            q = q.div_exact(&NPoly::linear(-r)).expect("root divides");
            *roots.entry(r).or_insert(0) += 1;
        }
    }

    // group remaining multiplicities into maximal consecutive chains
    let mut raw_runs: Vec<(i64, u32)> = Vec::new(); // (top root, length)
    while roots.values().any(|&m| m > 0) {
        let keys: Vec<i64> = roots
            .iter()
            .filter(|(_, &m)| m > 0)
            .map(|(&r, _)| r)
            .collect();
        let mut i = 0;
        while i < keys.len() {
            let start = keys[i];
            let mut end = start;
            while i + 1 < keys.len() && keys[i + 1] == end + 1 {
                i += 1;
                end = keys[i];
            }
            for r in start..=end {
                *roots.get_mut(&r).unwrap() -= 1;
            }
            raw_runs.push((end, (end - start + 1) as u32));
            i += 1;
        }
        roots.retain(|_, m| *m > 0);
    }
    raw_runs.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1)));
    let mut runs: Vec<Run> = Vec::new();
    for (top, len) in raw_runs {
        if let Some(last) = runs.last_mut() {
            if last.top == top && last.len == len {
                last.power += 1;
                continue;
            }
        }
        runs.push(Run { top, len, power: 1 });
    }

    let s = q.primitive_scale();
    let mut residual = q.scale(&s);
    let mut scalar = s.recip();
    if residual.leading_coeff().is_negative() {
        residual = -&residual;
        scalar = -scalar;
    }
    let residual = (!residual.is_one()).then_some(residual);
    Factored {
        scalar,
        runs,
        residual,
    }
}

fn run_text(run: &Run) -> String {
    let base = match run.top.signum() {
        0 => "(n)".to_string(),
        1 => format!("(n-{})", run.top),
        _ => format!("(n+{})", -run.top),
    };
    let mut s = base;
    if run.len > 1 {
        s.push_str(&format!("_{}", run.len));
    }
    if run.power > 1 {
        s.push_str(&format!("^{}", run.power));
    }
    s
}

fn run_latex(run: &Run) -> String {
    let base = match run.top.signum() {
        0 => "(n)".to_string(),
        1 => format!("(n-{})", run.top),
        _ => format!("(n+{})", -run.top),
    };
    let mut s = base;
    if run.len > 1 {
        s.push_str(&format!("_{{{}}}", run.len));
    }
    if run.power > 1 {
        s.push_str(&format!("^{{{}}}", run.power));
    }
    s
}

/// Factored pieces without the scalar, text form.
fn pieces_text(f: &Factored) -> String {
    let mut s = String::new();
    for run in &f.runs {
        s.push_str(&run_text(run));
    }
    if let Some(r) = &f.residual {
        s.push_str(&format!("({r})"));
    }
    s
}

fn pieces_latex(f: &Factored) -> String {
    let mut s = String::new();
    for run in &f.runs {
        s.push_str(&run_latex(run));
    }
    if let Some(r) = &f.residual {
        s.push_str(&format!("({})", poly_latex(r)));
    }
    s
}

fn piece_count(f: &Factored) -> usize {
    f.runs.len() + usize::from(f.residual.is_some())
}

/// Scalar prefix for text: omitted when 1 and something follows, integer
/// bare, fraction parenthesized.
fn scalar_text(s: &Rat, has_pieces: bool) -> String {
    if s.is_one() && has_pieces {
        String::new()
    } else if s.is_integer() {
        s.numer().to_string()
    } else if has_pieces {
        format!("({})", fmt_rat(s))
    } else {
        fmt_rat(s)
    }
}

/// Factored text form of a polynomial in `n`, e.g. `12(n-1)_2` or
/// `(7/4)(n-7)_2(9n^2 - 57n + 80)`.
pub fn npoly_factored_text(p: &NPoly) -> String {
    let f = factor_poly(p);
    let pieces = pieces_text(&f);
    format!("{}{}", scalar_text(&f.scalar, !pieces.is_empty()), pieces)
}

/// Factored text form of a rational function in `n`; the sign is kept on
/// the numerator and the (monic) denominator renders bare.
pub fn nratfun_factored_text(q: &NRatFun) -> String {
    let num = npoly_factored_text(q.num());
    if q.is_polynomial() {
        return num;
    }
    let df = factor_poly(q.den());
    let den_pieces = pieces_text(&df);
    // monic denominator: scalar is 1, pieces carry everything
    let den = if piece_count(&df) == 1 && df.scalar.is_one() {
        den_pieces
    } else {
        format!("({})", scalar_text(&df.scalar, !den_pieces.is_empty()) + &den_pieces)
    };
    format!("{num}/{den}")
}

/// Factored LaTeX form of a rational function in `n`.
pub fn nratfun_factored_latex(q: &NRatFun) -> String {
    let nf = factor_poly(q.num());
    let num_pieces = pieces_latex(&nf);
    let scalar = if nf.scalar.is_one() && !num_pieces.is_empty() {
        String::new()
    } else {
        latex_rat(&nf.scalar)
    };
    if q.is_polynomial() {
        return format!("{scalar}{num_pieces}");
    }
    let df = factor_poly(q.den());
    format!(
        "{scalar}\\frac{{{}}}{{{}}}",
        if num_pieces.is_empty() {
            "1".to_string()
        } else {
            num_pieces
        },
        pieces_latex(&df)
    )
}

/// LaTeX form of a polynomial, descending degree.
pub fn poly_latex<V: Variable>(p: &Poly<V>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (e, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if first {
            if c.is_negative() {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let a = c.abs();
        let var_part = match e {
            0 => String::new(),
            1 => V::SYMBOL.to_string(),
            _ => format!("{}^{{{}}}", V::SYMBOL, e),
        };
        if e == 0 {
            out.push_str(&latex_rat(&a));
        } else if a.is_one() {
            out.push_str(&var_part);
        } else {
            out.push_str(&format!("{}{var_part}", latex_rat(&a)));
        }
    }
    out
}

fn index_text(k: i64) -> String {
    match k.signum() {
        0 => "n".to_string(),
        1 => format!("n+{k}"),
        _ => format!("n-{}", -k),
    }
}

/// The relation `f(x) hhat(n,x) = sum_k a_k(n) hhat(n+k,x)` in plain text,
/// terms in descending offset.
pub fn relation_text(rec: &Recurrence) -> String {
    let mut out = format!("({}) hhat(n,x) =", rec.f());
    let mut first = true;
    for (k, a) in rec.op().terms().collect::<Vec<_>>().into_iter().rev() {
        let f = factor_poly(a.num());
        let neg = f.scalar.is_negative();
        let coeff = nratfun_factored_text(&if neg { -a } else { a.clone() });
        out.push_str("\n  ");
        out.push_str(if first {
            if neg {
                "  - "
            } else {
                "    "
            }
        } else if neg {
            "  - "
        } else {
            "  + "
        });
        first = false;
        if coeff == "1" {
            out.push_str(&format!("hhat({},x)", index_text(k)));
        } else {
            out.push_str(&format!("{coeff} hhat({},x)", index_text(k)));
        }
    }
    out
}

/// The same relation as LaTeX.
pub fn relation_latex(rec: &Recurrence) -> String {
    let mut out = format!(
        "\\left({}\\right)\\,\\hat{{h}}(n,x) =",
        poly_latex(rec.f())
    );
    let mut first = true;
    for (k, a) in rec.op().terms().collect::<Vec<_>>().into_iter().rev() {
        let f = factor_poly(a.num());
        let neg = f.scalar.is_negative();
        let coeff = nratfun_factored_latex(&if neg { -a } else { a.clone() });
        out.push_str(if first {
            if neg {
                " -"
            } else {
                ""
            }
        } else if neg {
            " -"
        } else {
            " +"
        });
        first = false;
        if coeff == "1" {
            out.push_str(&format!(" \\hat{{h}}({},x)", index_text(k)));
        } else {
            out.push_str(&format!(" {coeff}\\,\\hat{{h}}({},x)", index_text(k)));
        }
    }
    out
}

/// Shift operator with factored coefficients, descending offsets.
pub fn shiftop_factored_text(op: &ShiftOp) -> String {
    if op.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (k, a) in op.terms().collect::<Vec<_>>().into_iter().rev() {
        let f = factor_poly(a.num());
        let neg = f.scalar.is_negative();
        let coeff = nratfun_factored_text(&if neg { -a } else { a.clone() });
        if first {
            if neg {
                out.push_str("-");
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        first = false;
        let shift_part = match k {
            0 => String::new(),
            1 => " Θ".to_string(),
            _ => format!(" Θ^{k}"),
        };
        out.push_str(&format!("{coeff}{shift_part}"));
    }
    out
}

/// Shift operator as LaTeX.
pub fn shiftop_latex(op: &ShiftOp) -> String {
    if op.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (k, a) in op.terms().collect::<Vec<_>>().into_iter().rev() {
        let f = factor_poly(a.num());
        let neg = f.scalar.is_negative();
        let coeff = nratfun_factored_latex(&if neg { -a } else { a.clone() });
        if first {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        first = false;
        let shift_part = match k {
            0 => String::new(),
            1 => "\\,\\Theta".to_string(),
            _ => format!("\\,\\Theta^{{{k}}}"),
        };
        out.push_str(&format!("{coeff}{shift_part}"));
    }
    out
}

/// Polynomial-coefficient differential operator as LaTeX, `\partial` powers
/// descending.
pub fn polydiffop_latex(op: &PolyDiffOp) -> String {
    diffop_latex_impl(op.coeffs().iter().map(|c| poly_latex(c)).collect())
}

/// Rational-coefficient differential operator as LaTeX.
pub fn ratdiffop_latex(op: &RatDiffOp) -> String {
    diffop_latex_impl(
        op.coeffs()
            .iter()
            .map(|c| {
                if c.is_polynomial() {
                    poly_latex(c.num())
                } else {
                    format!("\\frac{{{}}}{{{}}}", poly_latex(c.num()), poly_latex(c.den()))
                }
            })
            .collect(),
    )
}

fn diffop_latex_impl(coeffs: Vec<String>) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (j, c) in coeffs.iter().enumerate().rev() {
        if c == "0" {
            continue;
        }
        let d = match j {
            0 => String::new(),
            1 => "\\,\\partial".to_string(),
            _ => format!("\\,\\partial^{{{j}}}"),
        };
        parts.push(format!("\\left({c}\\right){d}"));
    }
    parts.join(" + ")
}

/// Summary of a verification run, one line per outcome class.
pub fn report_text(rep: &crate::bispectral::VerificationReport) -> String {
    let mut out = format!(
        "checked {} permitted degrees; {} mismatch(es); {} pole incident(s)\n",
        rep.checked.len(),
        rep.failures.len(),
        rep.poles.len()
    );
    if let Some(m) = rep.failures.first() {
        out.push_str(&format!(
            "first failure at n = {}\n  expected: {}\n  got:      {}\n",
            m.n, m.expected, m.got
        ));
    }
    for p in &rep.poles {
        out.push_str(&format!("pole at offset {} for n = {}\n", p.offset, p.at));
    }
    out.push_str(if rep.verified() {
        "verified: yes"
    } else {
        "verified: no"
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::pochhammer;

    #[test]
    fn factoring_detects_runs() {
        // (n-2)_2 / (n+1)_2
        let q = NRatFun::new(pochhammer(-2, 2), pochhammer(1, 2));
        assert_eq!(nratfun_factored_text(&q), "(n-2)_2/(n+1)_2");
        // 12(n-1)_2
        let p = pochhammer(-1, 2).scale(&rat(12));
        assert_eq!(npoly_factored_text(&p), "12(n-1)_2");
        // 16(n-2)^2(n-4)
        let sq = &NPoly::linear(-2) * &NPoly::linear(-2);
        let p = (&sq * &NPoly::linear(-4)).scale(&rat(16));
        assert_eq!(npoly_factored_text(&p), "16(n-2)^2(n-4)");
        // (1/5)(n-5)_2/(n)_2
        let q = NRatFun::new(
            pochhammer(-5, 2).scale(&crate::rat::frac(1, 5)),
            pochhammer(0, 2),
        );
        assert_eq!(nratfun_factored_text(&q), "(1/5)(n-5)_2/(n)_2");
    }

    #[test]
    fn factoring_keeps_irreducible_residuals() {
        // (7/4)(n-7)_2(9n^2 - 57n + 80)
        let p = (&pochhammer(-7, 2) * &NPoly::from_ints(&[80, -57, 9]))
            .scale(&crate::rat::frac(7, 4));
        assert_eq!(
            npoly_factored_text(&p),
            "(7/4)(n-7)_2(9n^2 - 57n + 80)"
        );
    }

    #[test]
    fn factoring_multi_piece_denominator() {
        let q = NRatFun::new(
            (&pochhammer(-7, 2) * &pochhammer(-4, 2)).scale(&crate::rat::frac(3, 16)),
            &pochhammer(0, 2) * &pochhammer(3, 2),
        );
        assert_eq!(
            nratfun_factored_text(&q),
            "(3/16)(n-7)_2(n-4)_2/((n)_2(n+3)_2)"
        );
        assert_eq!(
            nratfun_factored_latex(&q),
            "\\frac{3}{16}\\frac{(n-7)_{2}(n-4)_{2}}{(n)_{2}(n+3)_{2}}"
        );
    }

    #[test]
    fn zero_and_constants() {
        assert_eq!(npoly_factored_text(&NPoly::zero()), "0");
        assert_eq!(npoly_factored_text(&NPoly::constant(rat(6))), "6");
        assert_eq!(
            npoly_factored_text(&NPoly::constant(crate::rat::frac(-3, 2))),
            "-3/2"
        );
    }

    #[test]
    fn poly_latex_form() {
        let p = XPoly::from_ints(&[0, -12, 0, 8]);
        assert_eq!(poly_latex(&p), "8x^{3} - 12x");
        let q = crate::poly::NPoly::from_ints(&[80, -57, 9]);
        assert_eq!(poly_latex(&q), "9n^{2} - 57n + 80");
    }
}
