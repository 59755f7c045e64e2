//! Canonical JSON renderings of the public value types. JSON is the
//! machine format; the text renderers elsewhere are derived from the same
//! data. Keys are exponent tuples joined by commas, so output is
//! byte-deterministic.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::comparison::{TriangleReport, CompleteIntersection};
use crate::divisor::{DivisorClassResult, RecursionReport, SncConfig};
use crate::fgl::{SupportDecomposition, TruncSeries};
use crate::lazard::LazardRing;
use crate::proj::{BMClass, ChowClass, KClass};
use crate::algebra::SparsePoly;

fn bigint_value(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

fn exponent_key(m: &crate::algebra::Monomial, nvars: usize) -> String {
    (0..nvars)
        .map(|v| m.exp(v as u32).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// `{"c1,...,cs": coeff, ...}` over the polynomial's own variables.
pub fn poly_json(poly: &SparsePoly) -> Value {
    let nvars = poly.ring().nvars();
    let mut map = Map::new();
    for (m, c) in poly.terms() {
        map.insert(exponent_key(m, nvars), bigint_value(c));
    }
    Value::Object(map)
}

pub fn kclass_json(class: &KClass) -> Value {
    json!({
        "space": {"dims": class.space().dims()},
        "poly": poly_json(class.poly()),
    })
}

pub fn chow_json(class: &ChowClass) -> Value {
    json!({
        "space": {"dims": class.space().dims()},
        "poly": poly_json(class.poly()),
    })
}

/// `{"space":{"dims":[...]},"beta_terms":[{"exp":k,"poly":{...}},...]}`.
pub fn bm_json(class: &BMClass) -> Value {
    let terms: Vec<Value> = class
        .terms()
        .map(|(&exp, poly)| json!({"exp": exp, "poly": poly_json(poly)}))
        .collect();
    json!({
        "space": {"dims": class.space().dims()},
        "beta_terms": terms,
    })
}

/// Series terms as `{"e1,...,er": "coefficient"}` with the coefficient in
/// its canonical text rendering.
pub fn series_json(series: &TruncSeries) -> Value {
    let mut terms = Map::new();
    for (m, c) in series.terms() {
        terms.insert(exponent_key(m, series.nvars()), json!(c.to_string()));
    }
    json!({
        "vars": series.nvars(),
        "trunc": series.trunc(),
        "terms": Value::Object(terms),
    })
}

pub fn decomposition_json(d: &SupportDecomposition) -> Value {
    let parts: Vec<Value> = d
        .parts()
        .map(|(support, g)| {
            json!({
                // 1-based indices to match the usual subset notation
                "subset": support.iter().map(|&v| v + 1).collect::<Vec<u32>>(),
                "series": series_json(g),
                "display": g.to_string(),
            })
        })
        .collect();
    json!({"parts": parts})
}

/// Per-degree export `{degree, monomials, rank, torsion}`.
pub fn lazard_json(l: &LazardRing) -> Value {
    let degrees: Vec<Value> = l
        .degrees()
        .iter()
        .map(|d| {
            json!({
                "degree": d.degree,
                "monomials": d.monomials.iter()
                    .map(|m| l.ring().format_monomial(m))
                    .collect::<Vec<_>>(),
                "rank": d.rank,
                "torsion": d.torsion.iter().map(bigint_value).collect::<Vec<_>>(),
                "basis": d.basis.iter()
                    .map(|m| l.ring().format_monomial(m))
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({"trunc": l.trunc(), "degrees": degrees})
}

pub fn divisor_report_json(
    config: &SncConfig,
    result: &DivisorClassResult,
    recursion: Option<&RecursionReport>,
) -> Value {
    let contributions: Vec<Value> = result
        .contributions
        .iter()
        .map(|(subset, bm)| {
            json!({
                "subset": subset.iter().map(|&i| i + 1).collect::<Vec<usize>>(),
                "class": bm_json(bm),
                "display": bm.to_string(),
            })
        })
        .collect();
    let mut out = json!({
        "config": {
            "dims": config.ambient().dims(),
            "components": config.components(),
        },
        "contributions": contributions,
        "total": bm_json(&result.total),
        "total_display": result.total.to_string(),
        "expected": bm_json(&result.expected),
        "expected_display": result.expected.to_string(),
        "verified": result.verified,
    });
    if let Some(rec) = recursion {
        out["recursion"] = json!({
            "lhs": bm_json(&rec.lhs),
            "lhs_display": rec.lhs.to_string(),
            "rhs": bm_json(&rec.rhs),
            "rhs_display": rec.rhs.to_string(),
            "verified": rec.verified,
        });
    }
    out
}

pub fn triangle_report_json(x: &CompleteIntersection, report: &TriangleReport) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "identity": c.identity,
                "lhs": c.lhs,
                "rhs": c.rhs,
                "pass": c.pass,
            })
        })
        .collect();
    json!({
        "ambient": {"dims": x.ambient().dims()},
        "degrees": x.degrees(),
        "dim": x.dim(),
        "ck": {
            "level": report.triple.ck.level(),
            "value": kclass_json(report.triple.ck.value()),
            "display": report.triple.ck.value().to_string(),
        },
        "g": bm_json(&report.triple.g),
        "ch": chow_json(&report.triple.ch),
        "checks": checks,
        "verified": report.verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proj::{class_of_linear_stratum, MultiProj};

    #[test]
    fn poly_keys_are_exponent_tuples() {
        let p = MultiProj::new(vec![1, 1]).unwrap();
        let c = class_of_linear_stratum(&p, &[1, 1]).unwrap();
        assert_eq!(poly_json(c.poly()), serde_json::json!({"1,1": 1}));
    }

    #[test]
    fn bm_schema() {
        let p = MultiProj::new(vec![2]).unwrap();
        let bm = BMClass::fundamental(&p);
        assert_eq!(
            bm_json(&bm),
            serde_json::json!({
                "space": {"dims": [2]},
                "beta_terms": [{"exp": 2, "poly": {"0": 1}}],
            })
        );
    }
}
