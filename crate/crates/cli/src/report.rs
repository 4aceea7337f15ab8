//! Report emission and shared rendering helpers.
//!
//! Reports are deterministic: the JSON document uses sorted keys and
//! canonical rational strings, stdout carries only input-determined text,
//! and wall-clock timing is printed to stderr alone.

use std::path::Path;
use std::time::Instant;

use g2k3::ellsurf::{Fiber, FiberConfiguration, Place};
use g2k3::error::Result;
use g2k3::exactcore::rational::rat_str;
use g2k3::io;
use g2k3::CoreError;
use serde_json::Value;

/// Prints the human-readable report to stdout, optionally writes the
/// canonical JSON document, and reports elapsed time on stderr.
pub fn emit(human: &str, doc: &Value, json_path: Option<&Path>, started: Instant) -> Result<()> {
    if let Some(path) = json_path {
        std::fs::write(path, io::to_pretty_string(doc))
            .map_err(|e| CoreError::parse(format!("cannot write {}: {e}", path.display())))?;
    }
    println!("{human}");
    eprintln!("elapsed: {} ms", started.elapsed().as_millis());
    Ok(())
}

/// One line per fiber; cluster places are abbreviated to their degree
/// (the full polynomial is in the JSON document).
pub fn fiber_line(f: &Fiber) -> String {
    match &f.place {
        Place::Rational(a) => format!("{} at t = {}", f.kodaira, rat_str(a)),
        Place::Infinity => format!("{} at t = oo", f.kodaira),
        Place::Cluster(_) => {
            let d = f.place.degree();
            format!("{} x {} over a degree-{} cluster", d, f.kodaira, d)
        }
    }
}

/// Compact one-line form "II* + III* + 5 x I1; euler 24", grouping
/// geometric fiber counts by type in first-seen order.
pub fn brief(cfg: &FiberConfiguration) -> String {
    let mut order: Vec<(String, u32)> = vec![];
    for f in &cfg.fibers {
        let name = f.kodaira.name();
        match order.iter_mut().find(|(n, _)| *n == name) {
            Some((_, k)) => *k += f.place.degree(),
            None => order.push((name, f.place.degree())),
        }
    }
    let body: Vec<String> = order
        .iter()
        .map(|(n, k)| if *k == 1 { n.clone() } else { format!("{k} x {n}") })
        .collect();
    format!("{}; euler {}", body.join(" + "), cfg.euler_total())
}

/// "k+ρ" with ρ_NS = 16 + ρ: the Shioda–Tate rank as a function of the
/// Picard number of the Jacobian.
pub fn rank_formula(cfg: &FiberConfiguration) -> String {
    let k = 14i64 - i64::from(cfg.fibral_rank());
    match k {
        0 => "ρ".to_string(),
        k if k > 0 => format!("{k}+ρ"),
        k => format!("ρ-{}", -k),
    }
}
