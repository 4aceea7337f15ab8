//! The `invariants`, `construct`, and `certify` pipelines.
//!
//! A "curve file" is either a raw coefficient record
//! `{"genus2": [c0..c6]}` or a parameter record `{"hparams": {a, b, c}}`,
//! which stands for the quintic y² = x(x−1)(x−a)(x−b)(x−c). Unreadable or
//! malformed files are parse errors (exit 2); well-formed but
//! mathematically inadmissible input (a non-squarefree sextic, a base
//! change past the K3 bound) is a math error (exit 1).

use std::path::Path;

use g2k3::constructions::{
    g_surface, genus2_from_hparams, h_surface, kummer_fibration13, shioda_inose_surface, HParams,
    IgusaClebsch,
};
use g2k3::ellsurf::{classify_fibers, FiberConfiguration, WeierstrassSurface};
use g2k3::error::Result;
use g2k3::exactcore::rational::{parse_rat, rat_str};
use g2k3::genus2::{certify_picard_one, Genus2Curve, PicardCertificate};
use g2k3::io;
use g2k3::CoreError;
use serde_json::{json, Map, Value};

use crate::report::{fiber_line, rank_formula};
use crate::Kind;

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CoreError::parse(format!("cannot read {}: {e}", path.display())))
}

/// Loads a genus-2 curve from either record form.
pub fn load_curve(path: &Path) -> Result<Genus2Curve> {
    let doc = io::parse_document(&read_file(path)?)?;
    if doc.get("genus2").is_some() {
        io::curve_from_json(&doc)
    } else if doc.get("hparams").is_some() {
        genus2_from_hparams(&io::hparams_from_json(&doc)?)
    } else {
        Err(CoreError::parse(
            "curve file must contain a \"genus2\" or \"hparams\" record",
        ))
    }
}

pub fn invariants(curve: &Path) -> Result<(String, Value)> {
    let c = load_curve(curve)?;
    let ic = c.igusa_clebsch();
    let human = format!(
        "curve: {}\nI2  = {}\nI4  = {}\nI6  = {}\nI10 = {}",
        c.equation(),
        rat_str(&ic[0]),
        rat_str(&ic[1]),
        rat_str(&ic[2]),
        rat_str(&ic[3]),
    );
    let doc = json!({
        "command": "invariants",
        "curve": io::curve_to_json(&c),
        "igusa_clebsch": ic.iter().map(io::rat_to_json).collect::<Vec<_>>(),
    });
    Ok((human, doc))
}

/// Input echo for the construct report: the curve record or the (a, b, c)
/// parameters, whichever the construction consumed.
enum ConstructInput {
    Curve(Genus2Curve, IgusaClebsch),
    Params(HParams),
}

pub fn construct(
    kind: Kind,
    curve: Option<&Path>,
    abc: Option<&[String]>,
    n: Option<u32>,
    rho: Option<u32>,
) -> Result<(String, Value)> {
    // The exponent bound is checked before any file is touched, so an
    // out-of-range n fails as a math error even without a curve.
    let (label, input, surface) = match kind {
        Kind::G => {
            let n = require_n(n, "g")?;
            if !(1..=4).contains(&n) {
                return Err(CoreError::math(format!(
                    "base change exponent n = {n}: the G-family is a K3 only for n ≤ 4 (n ≥ 1)"
                )));
            }
            let (c, ic) = curve_input(kind, curve, abc)?;
            let s = g_surface(&ic, n)?;
            (format!("G^({n})"), ConstructInput::Curve(c, ic), s)
        }
        Kind::H => {
            let n = require_n(n, "h")?;
            if !(1..=3).contains(&n) {
                return Err(CoreError::math(format!(
                    "base change exponent n = {n}: the H-family is a K3 only for n ≤ 3 (n ≥ 1)"
                )));
            }
            let p = hparams_input(curve, abc)?;
            let s = h_surface(&p, n)?;
            (format!("H^({n})"), ConstructInput::Params(p), s)
        }
        Kind::Eq1 => {
            reject_n(n, "eq1")?;
            let (c, ic) = curve_input(kind, curve, abc)?;
            let s = shioda_inose_surface(&ic)?;
            ("Shioda-Inose".to_string(), ConstructInput::Curve(c, ic), s)
        }
        Kind::Fib13 => {
            reject_n(n, "fib13")?;
            let (c, ic) = curve_input(kind, curve, abc)?;
            let s = kummer_fibration13(&ic)?;
            ("Kummer fibration".to_string(), ConstructInput::Curve(c, ic), s)
        }
    };
    let cfg = classify_fibers(&surface)?;
    render_construct(kind, &label, n, &input, &surface, &cfg, rho)
}

fn require_n(n: Option<u32>, kind: &str) -> Result<u32> {
    n.ok_or_else(|| CoreError::parse(format!("construct {kind} requires --n")))
}

fn reject_n(n: Option<u32>, kind: &str) -> Result<()> {
    match n {
        Some(_) => Err(CoreError::parse(format!("--n does not apply to {kind}"))),
        None => Ok(()),
    }
}

fn curve_input(
    kind: Kind,
    curve: Option<&Path>,
    abc: Option<&[String]>,
) -> Result<(Genus2Curve, IgusaClebsch)> {
    if abc.is_some() && kind != Kind::H {
        return Err(CoreError::parse("--abc applies only to construct h"));
    }
    let path = curve.ok_or_else(|| CoreError::parse("this construction requires --curve"))?;
    let c = load_curve(path)?;
    let ic = c.igusa_clebsch();
    Ok((c, ic))
}

/// h takes (a, b, c) from `--abc` or from an "hparams" curve file.
fn hparams_input(curve: Option<&Path>, abc: Option<&[String]>) -> Result<HParams> {
    match (abc, curve) {
        (Some(v), _) => {
            // clap enforces exactly three values
            let a = parse_rat(&v[0])?;
            let b = parse_rat(&v[1])?;
            let c = parse_rat(&v[2])?;
            HParams::new(a, b, c)
        }
        (None, Some(path)) => io::hparams_from_json(&io::parse_document(&read_file(path)?)?),
        (None, None) => Err(CoreError::parse("construct h requires --abc A B C")),
    }
}

fn render_construct(
    kind: Kind,
    label: &str,
    n: Option<u32>,
    input: &ConstructInput,
    surface: &WeierstrassSurface,
    cfg: &FiberConfiguration,
    rho: Option<u32>,
) -> Result<(String, Value)> {
    let kind_name = match kind {
        Kind::G => "g",
        Kind::H => "h",
        Kind::Eq1 => "eq1",
        Kind::Fib13 => "fib13",
    };
    let mut doc = Map::new();
    doc.insert("command".into(), json!("construct"));
    doc.insert("kind".into(), json!(kind_name));
    doc.insert("construction".into(), json!(label));
    if let Some(n) = n {
        doc.insert("n".into(), json!(n));
    }

    let mut human = format!("construction: {label}\n");
    match input {
        ConstructInput::Curve(c, ic) => {
            doc.insert("curve".into(), io::curve_to_json(c));
            doc.insert(
                "igusa_clebsch".into(),
                Value::Array(ic.iter().map(io::rat_to_json).collect()),
            );
            human += &format!(
                "curve: {}\nigusa_clebsch: [{}]\n",
                c.equation(),
                ic.iter().map(rat_str).collect::<Vec<_>>().join(", "),
            );
        }
        ConstructInput::Params(p) => {
            doc.insert("hparams".into(), io::hparams_to_json(p)["hparams"].clone());
            human += &format!(
                "parameters: (a, b, c) = ({}, {}, {})\n",
                rat_str(&p.a),
                rat_str(&p.b),
                rat_str(&p.c),
            );
        }
    }

    doc.insert("surface".into(), io::surface_to_json(surface));
    doc.insert("fibers".into(), io::fibers_to_json(cfg));
    doc.insert("euler_total".into(), json!(cfg.euler_total()));
    doc.insert("is_k3".into(), json!(cfg.is_k3()));
    doc.insert("fibral_rank".into(), json!(cfg.fibral_rank()));

    human += &format!("surface: {}\nfibers:\n", surface.equation());
    for f in &cfg.fibers {
        human += &format!("  {}\n", fiber_line(f));
    }
    human += &format!(
        "euler_total: {}{}\nfibral rank: {}\n",
        cfg.euler_total(),
        if cfg.is_k3() { " (K3)" } else { " (not a K3)" },
        cfg.fibral_rank(),
    );

    if cfg.is_k3() {
        let formula = rank_formula(cfg);
        let mut by_rho = Map::new();
        for r in 1..=4u32 {
            by_rho.insert(r.to_string(), json!(cfg.mordell_weil_rank(16 + r)?));
        }
        doc.insert("rank_formula".into(), json!(formula));
        doc.insert("rank_for_rho".into(), Value::Object(by_rho));
        let evals: Vec<String> = (1..=4)
            .map(|r| Ok(format!("ρ={r}: {}", cfg.mordell_weil_rank(16 + r)?)))
            .collect::<Result<_>>()?;
        human += &format!(
            "MW rank over the algebraic closure (ρ_NS = 16 + ρ): {formula}  [{}]\n",
            evals.join(", "),
        );
        if let Some(r) = rho {
            let rank = cfg.mordell_weil_rank(16 + r)?;
            doc.insert("rho".into(), json!(r));
            doc.insert("rho_source".into(), json!("--rho flag"));
            doc.insert("rank".into(), json!(rank));
            human += &format!("rank: {rank} (given ρ = {r})\n");
        }
    } else if rho.is_some() {
        return Err(CoreError::math(
            "the surface is not a K3 (euler ≠ 24); the rank formula with ρ_NS = 16 + ρ does not apply",
        ));
    }

    human.pop();
    Ok((human, Value::Object(doc)))
}

pub fn certify(curve: &Path, primes: &[u64]) -> Result<(String, Value, bool)> {
    let c = load_curve(curve)?;
    let cert = certify_picard_one(&c, primes)?;
    let doc = json!({
        "command": "certify",
        "primes_requested": primes,
        "certificate": io::certificate_to_json(&cert),
    });
    Ok((render_certificate(&cert), doc, cert.certified()))
}

fn render_certificate(cert: &PicardCertificate) -> String {
    let mut s = format!("curve: {}\n", cert.curve.equation());
    for e in &cert.evidence {
        s += &format!(
            "p = {}: #C(F_p) = {}, #C(F_p²) = {}, charpoly = {}, galois = {}, real subfield {} (kernel {})\n",
            e.p,
            e.n1,
            e.n2,
            e.weil.charpoly().to_string_var("x"),
            e.galois,
            e.real_quadratic.to_string_var("x"),
            e.real_kernel,
        );
    }
    match cert.simplicity_witness {
        Some(p) => s += &format!("simplicity: Galois group D4 at p = {p}\n"),
        None => s += "simplicity: not established\n",
    }
    match &cert.disjointness {
        Some((p, q, route)) => {
            s += &format!("disjointness of the p = {p} and p = {q} Frobenius fields: ");
            s += &match route {
                g2k3::genus2::DisjointnessRoute::ResultantIrreducible { modulus } => {
                    format!("composite resultant irreducible mod {modulus}\n")
                }
                g2k3::genus2::DisjointnessRoute::DistinctRealSubfields { kernels, pattern_prime } => {
                    let extra = match pattern_prime {
                        Some(ell) => format!("; factorization patterns differ mod {ell}"),
                        None => String::new(),
                    };
                    format!(
                        "distinct real quadratic subfields ℚ(√{}) and ℚ(√{}){extra}\n",
                        kernels.0, kernels.1,
                    )
                }
            };
        }
        None => s += "disjointness: not established\n",
    }
    for note in &cert.notes {
        s += &format!("note: {note}\n");
    }
    match cert.conclusion {
        Some(r) => s += &format!("conclusion: ρ(J(C)) = {r}"),
        None => s += "conclusion: inconclusive",
    }
    s
}
