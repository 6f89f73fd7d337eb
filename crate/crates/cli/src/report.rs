//! Report serialization: human-readable text and a stable JSON document
//! (keys: claim_id, status, certificate, elapsed_ms, note).

use serde_json::{json, Value};
use std::fmt::Write;

use sympow_core::{Certificate, ClaimResult, VerificationReport};

pub fn render_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "dual Hesse containment pipeline");
    let _ = writeln!(out, "-------------------------------");
    if report.claims.is_empty() {
        let _ = writeln!(out, "warning: empty report, nothing was checked");
        let _ = writeln!(out, "OVERALL: VERIFIED (vacuous)");
        return out;
    }
    for claim in &report.claims {
        let _ = writeln!(
            out,
            "[{}] {:<20} {}  ({} ms)",
            claim.status,
            claim.claim_id,
            claim.note,
            claim.elapsed.as_millis()
        );
        if let Some(cert) = &claim.certificate {
            for line in certificate_text(cert) {
                let _ = writeln!(out, "    {line}");
            }
        }
    }
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "OVERALL: {}",
        if report.overall { "VERIFIED" } else { "REFUTED" }
    );
    out
}

fn certificate_text(cert: &Certificate) -> Vec<String> {
    match cert {
        Certificate::Scalar(c) => vec![format!("certificate (scalar): {c}")],
        Certificate::Poly(p) => vec![format!("certificate (polynomial): {p}")],
        Certificate::PolyList(ps) => {
            let mut lines = vec![format!("certificate ({} basis elements):", ps.len())];
            lines.extend(ps.iter().map(|p| format!("  {p}")));
            lines
        }
        Certificate::Dimension { t, dim } => {
            vec![format!("certificate (dimension): t={t} dim={dim}")]
        }
        Certificate::Counts(entries) => entries
            .iter()
            .map(|(k, v)| format!("certificate (count): {k}={v}"))
            .collect(),
        Certificate::GradedTable(rows) => rows
            .iter()
            .map(|r| {
                format!(
                    "t={}: dim I^2 = {}, dim (I^2 + I^(3)) = {}, dim I^(3) = {}, dim I^(2) = {}, members {}",
                    r.t,
                    r.dim_square,
                    r.dim_join,
                    r.dim_symbolic_cube,
                    r.dim_symbolic_square,
                    if r.members_ok { "ok" } else { "FAIL" }
                )
            })
            .collect(),
        Certificate::Incidence {
            points,
            lines,
            per_point,
            per_line,
        } => vec![
            format!("certificate (incidence): {points} points, {lines} lines"),
            format!("  lines through each point: {per_point:?}"),
            format!("  points on each line: {per_line:?}"),
        ],
    }
}

pub fn render_json(report: &VerificationReport) -> String {
    let claims: Vec<Value> = report.claims.iter().map(claim_json).collect();
    let doc = json!({
        "overall": report.overall,
        "claims": claims,
    });
    serde_json::to_string_pretty(&doc).expect("report serializes")
}

fn claim_json(claim: &ClaimResult) -> Value {
    json!({
        "claim_id": claim.claim_id,
        "status": claim.status.to_string(),
        "certificate": claim.certificate.as_ref().map(certificate_json),
        "elapsed_ms": claim.elapsed.as_millis() as u64,
        "note": claim.note,
    })
}

fn certificate_json(cert: &Certificate) -> Value {
    match cert {
        Certificate::Scalar(c) => json!({"kind": "scalar", "value": c.to_string()}),
        Certificate::Poly(p) => json!({"kind": "poly", "poly": p.to_string()}),
        Certificate::PolyList(ps) => json!({
            "kind": "poly_list",
            "polys": ps.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        }),
        Certificate::Dimension { t, dim } => json!({"kind": "dimension", "t": t, "dim": dim}),
        Certificate::Counts(entries) => json!({
            "kind": "counts",
            "entries": entries
                .iter()
                .map(|(k, v)| json!({"name": k, "value": v}))
                .collect::<Vec<_>>(),
        }),
        Certificate::GradedTable(rows) => json!({
            "kind": "graded_table",
            "rows": rows
                .iter()
                .map(|r| json!({
                    "t": r.t,
                    "dim_square": r.dim_square,
                    "dim_join": r.dim_join,
                    "dim_symbolic_cube": r.dim_symbolic_cube,
                    "dim_symbolic_square": r.dim_symbolic_square,
                    "members_ok": r.members_ok,
                }))
                .collect::<Vec<_>>(),
        }),
        Certificate::Incidence {
            points,
            lines,
            per_point,
            per_line,
        } => json!({
            "kind": "incidence",
            "points": points,
            "lines": lines,
            "per_point": per_point,
            "per_line": per_line,
        }),
    }
}
