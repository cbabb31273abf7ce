//! Text rendering of results. JSON output uses the serde forms directly.

use std::fmt::Write;

use hurwitz_core::alexander::{AlexanderResult, CheckReport};
use hurwitz_core::covering::BettiReport;
use hurwitz_core::laurent::CyclotomicFactorization;

/// `Phi_1^2 Phi_3`, or `1` for no factors.
pub fn factor_list(f: &CyclotomicFactorization) -> String {
    if f.factors.is_empty() {
        return "1".into();
    }
    f.factors
        .iter()
        .map(|&(d, m)| if m == 1 { format!("Phi_{d}") } else { format!("Phi_{d}^{m}") })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn checks(report: &CheckReport) -> String {
    let mut out = String::new();
    for (name, c) in &report.checks {
        let _ = writeln!(out, "  {name:<24} {} {}", if c.pass { "PASS" } else { "FAIL" }, c.detail);
    }
    out
}

pub fn alexander(r: &AlexanderResult) -> String {
    let mut out = String::new();
    if let Some(l) = &r.label {
        let _ = writeln!(out, "label: {l}");
    }
    let degree = r.hurwitz_degree.map_or("none".to_string(), |d| d.to_string());
    let _ =
        writeln!(out, "generators: {}  components: {}  hurwitz degree: {degree}", r.generators, r.components);
    let _ = writeln!(out, "Delta = {}", r.canonical);
    let _ = writeln!(out, "characteristic view: {}", r.characteristic_view());
    match &r.factorization {
        Some(f) => {
            let _ = writeln!(out, "factors: {}", factor_list(f));
            if let Some(res) = &f.residual {
                let _ = writeln!(out, "residual: {res}");
            }
        }
        None => {
            let _ = writeln!(out, "factors: none (Delta = 0)");
        }
    }
    let verdict = if r.checks.all_pass() { "all pass" } else { "FAILURES" };
    let _ = writeln!(out, "checks: {verdict}");
    out.push_str(&checks(&r.checks));
    out
}

pub fn betti(label: Option<&str>, r: &BettiReport) -> String {
    let mut out = String::new();
    if let Some(l) = label {
        let _ = writeln!(out, "label: {l}");
    }
    let _ = writeln!(out, "n = {}", r.n);
    let _ = writeln!(out, "b1 = {}", r.b1);
    let _ = writeln!(out, "r_n = {}", r.r_n);
    let _ = writeln!(out, "affine_h1_dim = {}", r.affine_h1_dim);
    let _ = writeln!(out, "components = {}", r.components);
    out
}
