//! Stable JSON forms for generated recurrences and verification reports.
//!
//! Schema for a recurrence:
//!
//! ```json
//! {
//!   "partition": [1, 1],
//!   "f": { "coeffs": [["0","1"], ["3","1"], ["0","1"], ["2","1"]] },
//!   "terms": [
//!     { "offset": 3, "num": [...], "den": [...] },
//!     ...
//!   ]
//! }
//! ```
//!
//! Every rational is a `[numerator, denominator]` pair of decimal strings so
//! that arbitrarily large integers survive any downstream JSON parser.
//! Polynomial coefficient lists run low-to-high degree; terms are listed in
//! descending offset. Parsing re-canonicalizes every rational function, so a
//! structurally valid file always yields a well-formed (if possibly wrong)
//! recurrence.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bispectral::{Recurrence, VerificationReport};
use crate::error::{Error, Result};
use crate::hermite::Partition;
use crate::poly::{NPoly, Poly, Variable, XPoly};
use crate::rat::Rat;
use crate::ratfun::{NRatFun, RatFun};
use crate::shiftop::ShiftOp;

#[derive(Serialize, Deserialize)]
pub struct RecurrenceJson {
    pub partition: Vec<u32>,
    pub f: PolyJson,
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
pub struct PolyJson {
    pub coeffs: Vec<(String, String)>,
}

#[derive(Serialize, Deserialize)]
pub struct TermJson {
    pub offset: i64,
    pub num: Vec<(String, String)>,
    pub den: Vec<(String, String)>,
}

fn rat_pair(r: &Rat) -> (String, String) {
    (r.numer().to_string(), r.denom().to_string())
}

fn poly_pairs<V: Variable>(p: &Poly<V>) -> Vec<(String, String)> {
    p.coeffs().iter().map(rat_pair).collect()
}

fn rat_from_pair(pair: &(String, String)) -> Result<Rat> {
    let num = BigInt::from_str(&pair.0)
        .map_err(|_| Error::Parse(format!("bad integer {:?}", pair.0)))?;
    let den = BigInt::from_str(&pair.1)
        .map_err(|_| Error::Parse(format!("bad integer {:?}", pair.1)))?;
    if den.is_zero() {
        return Err(Error::Parse("zero denominator in coefficient".into()));
    }
    Ok(Rat::new(num, den))
}

fn poly_from_pairs<V: Variable>(pairs: &[(String, String)]) -> Result<Poly<V>> {
    Ok(Poly::new(
        pairs.iter().map(rat_from_pair).collect::<Result<Vec<_>>>()?,
    ))
}

impl RecurrenceJson {
    pub fn from_recurrence(rec: &Recurrence) -> Self {
        let mut terms: Vec<TermJson> = rec
            .op()
            .terms()
            .map(|(k, a)| TermJson {
                offset: k,
                num: poly_pairs(a.num()),
                den: poly_pairs(a.den()),
            })
            .collect();
        terms.reverse(); // descending offset
        RecurrenceJson {
            partition: rec.partition().parts().to_vec(),
            f: PolyJson {
                coeffs: poly_pairs(rec.f()),
            },
            terms,
        }
    }

    pub fn into_recurrence(&self) -> Result<Recurrence> {
        let partition = Partition::new(self.partition.clone())?;
        let f: XPoly = poly_from_pairs(&self.f.coeffs)?;
        let mut op = ShiftOp::zero();
        for t in &self.terms {
            let num: NPoly = poly_from_pairs(&t.num)?;
            let den: NPoly = poly_from_pairs(&t.den)?;
            if den.is_zero() {
                return Err(Error::Parse(format!(
                    "zero denominator polynomial at offset {}",
                    t.offset
                )));
            }
            let coeff: NRatFun = RatFun::new(num, den);
            op = &op + &ShiftOp::term(t.offset, coeff);
        }
        Recurrence::from_parts(partition, f, op)
    }
}

/// Serializes a recurrence to the documented JSON schema (pretty-printed,
/// deterministic).
pub fn recurrence_to_json(rec: &Recurrence) -> String {
    serde_json::to_string_pretty(&RecurrenceJson::from_recurrence(rec))
        .expect("serialization cannot fail")
}

/// Parses a recurrence back from its JSON form.
pub fn recurrence_from_json(s: &str) -> Result<Recurrence> {
    let raw: RecurrenceJson =
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    raw.into_recurrence()
}

#[derive(Serialize)]
pub struct ReportJson {
    pub verified: bool,
    pub checked: Vec<i64>,
    pub failures: Vec<FailureJson>,
    pub poles: Vec<PoleJson>,
}

#[derive(Serialize)]
pub struct FailureJson {
    pub n: i64,
    pub expected: Vec<(String, String)>,
    pub got: Vec<(String, String)>,
}

#[derive(Serialize)]
pub struct PoleJson {
    pub offset: i64,
    pub n: i64,
}

pub fn report_to_json(rep: &VerificationReport) -> String {
    let out = ReportJson {
        verified: rep.verified(),
        checked: rep.checked.clone(),
        failures: rep
            .failures
            .iter()
            .map(|m| FailureJson {
                n: m.n,
                expected: poly_pairs(&m.expected),
                got: poly_pairs(&m.got),
            })
            .collect(),
        poles: rep
            .poles
            .iter()
            .map(|p| PoleJson {
                offset: p.offset,
                n: p.at,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&out).expect("serialization cannot fail")
}

#[derive(Serialize)]
struct PolyOnlyJson {
    coeffs: Vec<(String, String)>,
}

/// `{"coeffs": [...]}` for a bare polynomial.
pub fn poly_to_json<V: Variable>(p: &Poly<V>) -> String {
    serde_json::to_string_pretty(&PolyOnlyJson {
        coeffs: poly_pairs(p),
    })
    .expect("serialization cannot fail")
}

#[derive(Serialize)]
struct RatFunJson {
    num: Vec<(String, String)>,
    den: Vec<(String, String)>,
}

#[derive(Serialize)]
struct DiffOpJson {
    order: usize,
    coeffs: Vec<RatFunJson>,
}

/// Differential operator with polynomial coefficients, low order first.
pub fn polydiffop_to_json(op: &crate::diffop::PolyDiffOp) -> String {
    let coeffs = op
        .coeffs()
        .iter()
        .map(|c| RatFunJson {
            num: poly_pairs(c),
            den: poly_pairs(&XPoly::one()),
        })
        .collect();
    serde_json::to_string_pretty(&DiffOpJson {
        order: op.order(),
        coeffs,
    })
    .expect("serialization cannot fail")
}

/// Differential operator with rational coefficients, low order first.
pub fn ratdiffop_to_json(op: &crate::diffop::RatDiffOp) -> String {
    let coeffs = op
        .coeffs()
        .iter()
        .map(|c| RatFunJson {
            num: poly_pairs(c.num()),
            den: poly_pairs(c.den()),
        })
        .collect();
    serde_json::to_string_pretty(&DiffOpJson {
        order: op.order(),
        coeffs,
    })
    .expect("serialization cannot fail")
}

#[derive(Serialize)]
struct ShiftOpJson {
    terms: Vec<TermJson>,
}

/// Shift operator as a list of terms in descending offset.
pub fn shiftop_to_json(op: &ShiftOp) -> String {
    let mut terms: Vec<TermJson> = op
        .terms()
        .map(|(k, a)| TermJson {
            offset: k,
            num: poly_pairs(a.num()),
            den: poly_pairs(a.den()),
        })
        .collect();
    terms.reverse();
    serde_json::to_string_pretty(&ShiftOpJson { terms }).expect("serialization cannot fail")
}
