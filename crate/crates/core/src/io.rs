//! JSON encoding of the library's input and output types.
//!
//! Conventions, applied uniformly:
//! * rationals are strings `"p/q"`, with the `/q` omitted when q = 1;
//! * polynomials are arrays of rational strings, ascending degree;
//! * rational functions are objects `{"num": [...], "den": [...]}`;
//! * objects serialize with sorted keys, so equal values give equal bytes.
//!
//! Input records:
//! * a genus-2 curve is `{"genus2": ["f0", ..., "f6"]}` (seven strings);
//! * base-change parameters are `{"hparams": {"a": .., "b": .., "c": ..}}`;
//! * a split-Jacobian record adds to the curve record two elliptic curves
//!   and a list of named degree-3 covers with their short-model codomains.
//!
//! Every parse failure is reported as [`CoreError::Parse`]; mathematical
//! rejection of well-formed input (a non-squarefree sextic, say) keeps its
//! own error class.

use serde_json::{json, Map, Value};

use crate::constructions::{CoverMap, EllipticCurveQ, HParams};
use crate::ellsurf::{FiberConfiguration, Place, WeierstrassSurface};
use crate::error::{CoreError, Result};
use crate::exactcore::rational::{parse_rat, rat_str, Rat};
use crate::exactcore::{RationalFunction, UniPoly};
use crate::genus2::{DisjointnessRoute, Genus2Curve, PicardCertificate};

/// Renders with sorted keys, two-space indentation, and a final newline;
/// the byte-level canonical form used for every emitted document.
pub fn to_pretty_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializing a finite Value cannot fail");
    s.push('\n');
    s
}

pub fn parse_document(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| CoreError::parse(format!("invalid JSON: {e}")))
}

pub fn rat_to_json(r: &Rat) -> Value {
    Value::String(rat_str(r))
}

pub fn rat_from_json(v: &Value) -> Result<Rat> {
    let s = v
        .as_str()
        .ok_or_else(|| CoreError::parse(format!("expected a rational string, found {v}")))?;
    parse_rat(s)
}

/// `["c0", "c1", ...]`, ascending degree; the zero polynomial is `[]`.
pub fn poly_to_json(p: &UniPoly) -> Value {
    Value::Array(p.coeffs().iter().map(rat_to_json).collect())
}

pub fn poly_from_json(v: &Value) -> Result<UniPoly> {
    let arr = v
        .as_array()
        .ok_or_else(|| CoreError::parse(format!("expected a coefficient array, found {v}")))?;
    let coeffs = arr.iter().map(rat_from_json).collect::<Result<Vec<_>>>()?;
    Ok(UniPoly::new(coeffs))
}

pub fn ratfun_to_json(f: &RationalFunction) -> Value {
    json!({ "num": poly_to_json(f.num()), "den": poly_to_json(f.den()) })
}

pub fn ratfun_from_json(v: &Value) -> Result<RationalFunction> {
    let num = poly_from_json(field(v, "num")?)?;
    let den = poly_from_json(field(v, "den")?)?;
    RationalFunction::new(num, den)
}

/// `{"weierstrass": {"a1": ..., "a2": ..., "a3": ..., "a4": ..., "a6": ...}}`.
pub fn surface_to_json(s: &WeierstrassSurface) -> Value {
    json!({ "weierstrass": {
        "a1": ratfun_to_json(&s.a1),
        "a2": ratfun_to_json(&s.a2),
        "a3": ratfun_to_json(&s.a3),
        "a4": ratfun_to_json(&s.a4),
        "a6": ratfun_to_json(&s.a6),
    }})
}

pub fn surface_from_json(v: &Value) -> Result<WeierstrassSurface> {
    let w = field(v, "weierstrass")?;
    Ok(WeierstrassSurface::new(
        ratfun_from_json(field(w, "a1")?)?,
        ratfun_from_json(field(w, "a2")?)?,
        ratfun_from_json(field(w, "a3")?)?,
        ratfun_from_json(field(w, "a4")?)?,
        ratfun_from_json(field(w, "a6")?)?,
    ))
}

fn place_to_json(p: &Place) -> Value {
    match p {
        Place::Rational(r) => json!({ "t": rat_str(r) }),
        Place::Infinity => json!({ "t": "oo" }),
        Place::Cluster(q) => json!({ "roots_of": poly_to_json(q) }),
    }
}

/// One entry per place, in the classifier's deterministic order; each
/// carries the Kodaira type name, the degree of the place, and the
/// per-point component and Euler numbers.
pub fn fibers_to_json(cfg: &FiberConfiguration) -> Value {
    Value::Array(
        cfg.fibers
            .iter()
            .map(|f| {
                json!({
                    "place": place_to_json(&f.place),
                    "type": f.kodaira.name(),
                    "degree": f.place.degree(),
                    "components": f.kodaira.components(),
                    "euler": f.kodaira.euler(),
                })
            })
            .collect(),
    )
}

/// `{"genus2": ["f0", ..., "f6"]}` — always seven coefficient strings.
pub fn curve_to_json(c: &Genus2Curve) -> Value {
    let coeffs: Vec<Value> = (0..=6).map(|k| Value::String(rat_str(&c.f().coeff(k)))).collect();
    json!({ "genus2": coeffs })
}

pub fn curve_from_json(v: &Value) -> Result<Genus2Curve> {
    let arr = field(v, "genus2")?
        .as_array()
        .ok_or_else(|| CoreError::parse("\"genus2\" must be an array"))?;
    if arr.len() != 7 {
        return Err(CoreError::parse(format!(
            "\"genus2\" must list exactly 7 coefficients f0..f6, found {}",
            arr.len()
        )));
    }
    let coeffs = arr.iter().map(rat_from_json).collect::<Result<Vec<_>>>()?;
    Genus2Curve::new(UniPoly::new(coeffs))
}

pub fn curve_from_str(text: &str) -> Result<Genus2Curve> {
    curve_from_json(&parse_document(text)?)
}

/// `{"hparams": {"a": "-1", "b": "1/7", "c": "-6/7"}}`.
pub fn hparams_to_json(p: &HParams) -> Value {
    json!({ "hparams": {
        "a": rat_str(&p.a), "b": rat_str(&p.b), "c": rat_str(&p.c),
    }})
}

pub fn hparams_from_json(v: &Value) -> Result<HParams> {
    let h = field(v, "hparams")?;
    HParams::new(
        rat_from_json(field(h, "a")?)?,
        rat_from_json(field(h, "b")?)?,
        rat_from_json(field(h, "c")?)?,
    )
}

pub fn hparams_from_str(text: &str) -> Result<HParams> {
    hparams_from_json(&parse_document(text)?)
}

/// A degree-3 cover bundled with the short-model curve it lands on.
#[derive(Clone, Debug)]
pub struct NamedCover {
    pub name: String,
    pub map: CoverMap,
    pub codomain: EllipticCurveQ,
}

/// The split-Jacobian input record: the genus-2 curve, the two elliptic
/// curves its Jacobian splits into up to isogeny, and the covers.
#[derive(Clone, Debug)]
pub struct SplitRecord {
    pub curve: Genus2Curve,
    pub e1: EllipticCurveQ,
    pub e2: EllipticCurveQ,
    pub covers: Vec<NamedCover>,
}

pub fn elliptic_curve_to_json(e: &EllipticCurveQ) -> Value {
    json!({
        "a1": rat_str(&e.a1), "a2": rat_str(&e.a2), "a3": rat_str(&e.a3),
        "a4": rat_str(&e.a4), "a6": rat_str(&e.a6),
    })
}

pub fn elliptic_curve_from_json(v: &Value) -> Result<EllipticCurveQ> {
    EllipticCurveQ::new(
        rat_from_json(field(v, "a1")?)?,
        rat_from_json(field(v, "a2")?)?,
        rat_from_json(field(v, "a3")?)?,
        rat_from_json(field(v, "a4")?)?,
        rat_from_json(field(v, "a6")?)?,
    )
}

fn named_cover_from_json(v: &Value) -> Result<NamedCover> {
    let name = field(v, "name")?
        .as_str()
        .ok_or_else(|| CoreError::parse("cover \"name\" must be a string"))?
        .to_owned();
    let codomain = field(v, "codomain")?;
    let codomain = EllipticCurveQ::from_short(
        rat_from_json(field(codomain, "a4")?)?,
        rat_from_json(field(codomain, "a6")?)?,
    )?;
    let map = CoverMap::new(
        poly_from_json(field(v, "x_num")?)?,
        poly_from_json(field(v, "x_den")?)?,
        poly_from_json(field(v, "y_num")?)?,
        poly_from_json(field(v, "y_den")?)?,
    )?;
    Ok(NamedCover { name, map, codomain })
}

pub fn split_record_from_json(v: &Value) -> Result<SplitRecord> {
    let curve = curve_from_json(v)?;
    let curves = field(v, "elliptic_curves")?;
    let e1 = elliptic_curve_from_json(field(curves, "e1")?)?;
    let e2 = elliptic_curve_from_json(field(curves, "e2")?)?;
    let covers = field(v, "covers")?
        .as_array()
        .ok_or_else(|| CoreError::parse("\"covers\" must be an array"))?
        .iter()
        .map(named_cover_from_json)
        .collect::<Result<Vec<_>>>()?;
    Ok(SplitRecord { curve, e1, e2, covers })
}

pub fn split_record_from_str(text: &str) -> Result<SplitRecord> {
    split_record_from_json(&parse_document(text)?)
}

/// Self-contained certificate document: every witness required to
/// re-verify the conclusion by hand is embedded.
pub fn certificate_to_json(cert: &PicardCertificate) -> Value {
    let evidence: Vec<Value> = cert
        .evidence
        .iter()
        .map(|e| {
            json!({
                "p": e.p,
                "n1": e.n1,
                "n2": e.n2,
                "weil": {
                    "a1": e.weil.a1,
                    "a2": e.weil.a2,
                    "charpoly": poly_to_json(&e.weil.charpoly()),
                },
                "galois": e.galois.name(),
                "real_quadratic": poly_to_json(&e.real_quadratic),
                "real_kernel": e.real_kernel.to_string(),
            })
        })
        .collect();
    let disjointness = match &cert.disjointness {
        None => Value::Null,
        Some((p, q, route)) => {
            let route = match route {
                DisjointnessRoute::ResultantIrreducible { modulus } => {
                    json!({ "resultant_irreducible": { "modulus": modulus } })
                }
                DisjointnessRoute::DistinctRealSubfields { kernels, pattern_prime } => {
                    json!({ "distinct_real_subfields": {
                        "kernels": [kernels.0.to_string(), kernels.1.to_string()],
                        "pattern_prime": pattern_prime,
                    }})
                }
            };
            json!({ "primes": [p, q], "route": route })
        }
    };
    json!({
        "curve": curve_to_json(&cert.curve),
        "primes_used": cert.evidence.iter().map(|e| e.p).collect::<Vec<_>>(),
        "evidence": evidence,
        "simplicity_witness": cert.simplicity_witness,
        "disjointness": disjointness,
        "conclusion": match cert.conclusion {
            Some(r) => json!(r),
            None => json!("inconclusive"),
        },
        "notes": cert.notes,
    })
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.as_object()
        .and_then(|m: &Map<String, Value>| m.get(key))
        .ok_or_else(|| CoreError::parse(format!("missing field \"{key}\"")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{verify_cover, CoverReport};
    use crate::exactcore::rational::{rat, rat_frac};

    #[test]
    fn rational_and_polynomial_round_trip() {
        for s in ["0", "-3", "22/7", "-1813/120"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(rat_from_json(&rat_to_json(&r)).unwrap(), r);
            assert_eq!(rat_to_json(&r), Value::String(s.to_owned()));
        }
        let p = UniPoly::new(vec![rat_frac(-1, 2), rat(0), rat(3)]);
        assert_eq!(poly_from_json(&poly_to_json(&p)).unwrap(), p);
        assert_eq!(poly_to_json(&UniPoly::zero()), json!([]));
        assert!(rat_from_json(&json!(1.5)).is_err());
        assert!(poly_from_json(&json!(["1", "x"])).is_err());
    }

    #[test]
    fn curve_record_round_trip_and_validation() {
        let c = Genus2Curve::new(UniPoly::from_ints(&[1, 0, 0, 0, 0, 1])).unwrap();
        let v = curve_to_json(&c);
        assert_eq!(
            v,
            json!({ "genus2": ["1", "0", "0", "0", "0", "1", "0"] })
        );
        assert_eq!(curve_from_json(&v).unwrap().f(), c.f());

        // malformed documents are Parse errors
        for bad in [
            "{",
            "{\"genus2\": 3}",
            "{\"genus2\": [\"1\", \"0\"]}",
            "{\"sextic\": [\"1\",\"0\",\"0\",\"0\",\"0\",\"1\",\"0\"]}",
        ] {
            match curve_from_str(bad) {
                Err(CoreError::Parse(_)) => {}
                other => panic!("expected parse error for {bad}, got {other:?}"),
            }
        }
        // well-formed but non-squarefree input is a Math error
        let sq = "{\"genus2\": [\"0\", \"0\", \"0\", \"0\", \"0\", \"0\", \"1\"]}";
        match curve_from_str(sq) {
            Err(CoreError::Math(_)) => {}
            other => panic!("expected math error, got {other:?}"),
        }
    }

    #[test]
    fn surface_round_trip_is_exact() {
        let ic = [rat(3), rat_frac(-7, 2), rat(11), rat(5)];
        let s = crate::constructions::g_surface(&ic, 3).unwrap();
        let v = surface_to_json(&s);
        assert_eq!(surface_from_json(&v).unwrap(), s);
    }

    #[test]
    fn fiber_serialization_uses_inline_type_names() {
        let ic = [rat(3), rat_frac(-7, 2), rat(11), rat(5)];
        let s = crate::constructions::g_surface(&ic, 1).unwrap();
        let cfg = crate::ellsurf::classify_fibers(&s).unwrap();
        let v = fibers_to_json(&cfg);
        let names: Vec<&str> = v
            .as_array()
            .unwrap()
            .iter()
            .map(|f| f["type"].as_str().unwrap())
            .collect();
        assert!(names.contains(&"II*"));
        assert!(names.contains(&"III*"));
        assert!(names.contains(&"I1"));
        // the infinite place renders as {"t": "oo"}
        assert!(v
            .as_array()
            .unwrap()
            .iter()
            .any(|f| f["place"] == json!({ "t": "oo" })));
    }

    #[test]
    fn hparams_record_round_trip() {
        let p = HParams::new(rat(-1), rat_frac(1, 7), rat_frac(-6, 7)).unwrap();
        let v = hparams_to_json(&p);
        let q = hparams_from_json(&v).unwrap();
        assert_eq!((q.a, q.b, q.c), (p.a, p.b, p.c));
        // degenerate parameters are rejected by HParams::new, not the parser
        assert!(hparams_from_str("{\"hparams\": {\"a\": \"0\", \"b\": \"1/7\", \"c\": \"-6/7\"}}").is_err());
    }

    #[test]
    fn shipped_data_files_parse_and_verify() {
        let qm = curve_from_str(include_str!("../../../data/qm_curve.json")).unwrap();
        assert_eq!(qm.degree(), 6);
        // the expansion of (x² + 7/2)(83/30·x⁴ + 14x³ − 1519/30·x² + 49x − 1813/120)
        let quadratic = UniPoly::new(vec![rat_frac(7, 2), rat(0), rat(1)]);
        let quartic = UniPoly::new(vec![
            rat_frac(-1813, 120),
            rat(49),
            rat_frac(-1519, 30),
            rat(14),
            rat_frac(83, 30),
        ]);
        assert_eq!(*qm.f(), &quadratic * &quartic);

        let split = split_record_from_str(include_str!("../../../data/split_curve.json")).unwrap();
        assert_eq!(split.curve.degree(), 6);
        assert_eq!(split.covers.len(), 2);
        for cover in &split.covers {
            assert_eq!(
                verify_cover(&split.curve, &cover.codomain, &cover.map),
                CoverReport::Verified { degree: 3 },
                "cover {} failed",
                cover.name
            );
        }

        let h = hparams_from_str(include_str!("../../../data/example43.json")).unwrap();
        assert_eq!((h.a, h.b, h.c), (rat(-1), rat_frac(1, 7), rat_frac(-6, 7)));
    }

    #[test]
    fn certificate_document_embeds_all_witnesses() {
        let h = HParams::new(rat(-1), rat_frac(1, 7), rat_frac(-6, 7)).unwrap();
        let c = crate::constructions::genus2_from_hparams(&h).unwrap();
        let cert = crate::genus2::certify_picard_one(&c, &[37, 41]).unwrap();
        let v = certificate_to_json(&cert);
        assert_eq!(v["conclusion"], json!(1));
        assert_eq!(v["simplicity_witness"], json!(37));
        assert_eq!(v["evidence"][0]["weil"]["charpoly"], json!(["1369", "-148", "46", "-4", "1"]));
        assert_eq!(v["evidence"][1]["weil"]["charpoly"], json!(["1681", "164", "6", "4", "1"]));
        let route = &v["disjointness"]["route"]["distinct_real_subfields"];
        assert_eq!(route["kernels"], json!(["2", "5"]));
        // byte-identical rendering on repeated runs
        assert_eq!(to_pretty_string(&v), to_pretty_string(&certificate_to_json(&cert)));
    }
}
