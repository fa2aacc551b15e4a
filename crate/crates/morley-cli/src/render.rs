//! Deterministic text and JSON rendering of duality reports.
//! Identical input and flags must produce byte-identical output, so
//! every piece of formatting here is fixed-width or canonically
//! ordered — no hash maps, no locale, no timestamps.

use serde::{Deserialize, Serialize};

use morley_core::{CertificateStatus, DualityReport, Field, Matrix, NuRow, Verdict};

use crate::input::InputFile;

/// Machine-readable mirror of a duality report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub input: InputEcho,
    pub delta: i64,
    pub certificate: CertificateDoc,
    pub hilbert: Vec<usize>,
    pub table: Vec<TableRowDoc>,
    pub verdict: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputEcho {
    pub modulus: u64,
    pub weights: Vec<i64>,
    pub vars: Vec<String>,
    pub polys: Vec<String>,
    pub degrees: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub certified: bool,
    pub s0: Option<i64>,
    #[serde(rename = "searchBound")]
    pub search_bound: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableRowDoc {
    pub nu: i64,
    #[serde(rename = "dimB_dual")]
    pub dim_b_dual: usize,
    #[serde(rename = "dimH")]
    pub dim_h: usize,
    #[serde(rename = "dimTorsion")]
    pub dim_torsion: Option<usize>,
    #[serde(rename = "rankOmega")]
    pub rank_omega: Option<usize>,
    #[serde(rename = "pairingRank")]
    pub pairing_rank: Option<usize>,
    pub verdict: String,
}

/// Top-level JSON verdict token.
pub fn verdict_token(v: Verdict) -> &'static str {
    match v {
        Verdict::Verified => "verified",
        Verdict::NotCertified => "not certified",
        Verdict::Mismatch => "mismatch",
    }
}

fn row_verdict(r: &NuRow, report_verdict: Verdict) -> String {
    if report_verdict == Verdict::NotCertified {
        "n/a".into()
    } else if r.ok {
        "ok".into()
    } else {
        "fail".into()
    }
}

/// Build the JSON document for a report produced from `file`.
pub fn report_document(r: &DualityReport, file: &InputFile) -> ReportDocument {
    ReportDocument {
        version: env!("CARGO_PKG_VERSION").to_string(),
        input: InputEcho {
            modulus: file.modulus,
            weights: file.weights.clone(),
            vars: file.vars.clone(),
            polys: file.polys.clone(),
            degrees: r.degrees.clone(),
        },
        delta: r.delta,
        certificate: CertificateDoc {
            certified: r.certificate.is_certified(),
            s0: match r.certificate {
                CertificateStatus::Certified { s0 } => Some(s0),
                CertificateStatus::NotCertified { .. } => None,
            },
            search_bound: r.search_bound,
        },
        hilbert: r.hilbert.clone(),
        table: r
            .rows
            .iter()
            .map(|row| TableRowDoc {
                nu: row.nu,
                dim_b_dual: row.dim_b_dual,
                dim_h: row.dim_h,
                dim_torsion: row.dim_torsion,
                rank_omega: row.rank_omega,
                pairing_rank: row.pairing_rank,
                verdict: row_verdict(row, r.verdict),
            })
            .collect(),
        verdict: verdict_token(r.verdict).to_string(),
    }
}

pub fn to_json(doc: &ReportDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report serializes");
    s.push('\n');
    s
}

fn flag(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn opt_flag(o: Option<bool>) -> &'static str {
    match o {
        Some(b) => flag(b),
        None => "skipped",
    }
}

fn opt_dim(o: Option<usize>) -> String {
    match o {
        Some(v) => v.to_string(),
        None => "-".into(),
    }
}

fn certificate_text(r: &DualityReport) -> String {
    match r.certificate {
        CertificateStatus::Certified { s0 } => format!(
            "established (B = 0 from degree {s0} on; search bound {})",
            r.search_bound
        ),
        CertificateStatus::NotCertified { .. } => format!(
            "not established (searched up to degree {})",
            r.search_bound
        ),
    }
}

/// The full text report for `check`.
pub fn text_report(r: &DualityReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("system over {}\n", r.field_name));
    out.push_str(&format!("  weights = {:?}\n", r.weights));
    out.push_str(&format!(
        "  vars = [{}]\n",
        r.var_names
            .iter()
            .map(|v| format!("\"{v}\""))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    for (i, (f, d)) in r.polys.iter().zip(&r.degrees).enumerate() {
        out.push_str(&format!("  f{} = {f} (degree {d})\n", i + 1));
    }
    out.push_str(&format!("  delta = {}\n", r.delta));
    out.push_str(&format!("certificate: {}\n", certificate_text(r)));
    out.push_str(&format!(
        "hilbert B, degrees 0..={}: {:?}\n",
        r.window_hi, r.hilbert
    ));
    out.push('\n');
    out.push_str("Delta:\n");
    for line in &r.delta_lines {
        out.push_str(&format!("  {line}\n"));
    }
    out.push_str("Lambda:\n");
    for line in &r.lambda_lines {
        out.push_str(&format!("  {line}\n"));
    }
    out.push('\n');
    out.push_str(&format!(
        "checks: (Xj-Yj)·Delta exact {} | forward = reverse {} | top component = Lambda {} | 1* -> Lambda {} | fixpoint torsion {}\n",
        flag(r.dp_ok.iter().all(|&b| b)),
        flag(r.wiebe_ok),
        flag(r.nabla_top_is_lambda),
        opt_flag(r.unit_maps_to_lambda),
        opt_flag(r.fixpoint_agrees),
    ));
    out.push('\n');
    out.push_str(&format!(
        "{:>4} | {:>16} | {:>5} | {:>11} | {:>10} | {:>12} | status\n",
        "nu", "dim B*(delta-nu)", "dim H", "dim torsion", "rank omega", "pairing rank"
    ));
    for row in &r.rows {
        let status = if r.verdict == Verdict::NotCertified {
            "n/a"
        } else if row.ok {
            "ok"
        } else {
            "FAIL"
        };
        out.push_str(&format!(
            "{:>4} | {:>16} | {:>5} | {:>11} | {:>10} | {:>12} | {status}\n",
            row.nu,
            row.dim_b_dual,
            row.dim_h,
            opt_dim(row.dim_torsion),
            opt_dim(row.rank_omega),
            opt_dim(row.pairing_rank),
        ));
    }
    if !r.failures.is_empty() {
        out.push('\n');
        out.push_str("failures:\n");
        for f in &r.failures {
            out.push_str(&format!("  - {f}\n"));
        }
    }
    out.push('\n');
    out.push_str(&format!("verdict: {}\n", r.verdict.as_str()));
    out
}

/// One `[a, b, c]` line per matrix row.
pub fn matrix_lines<K: Field>(m: &Matrix<K>) -> Vec<String> {
    (0..m.rows())
        .map(|i| {
            let entries: Vec<String> = (0..m.cols()).map(|j| m[(i, j)].to_string()).collect();
            format!("[{}]", entries.join(", "))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let doc = ReportDocument {
            version: "0.1.0".into(),
            input: InputEcho {
                modulus: 0,
                weights: vec![1],
                vars: vec!["x".into()],
                polys: vec!["x^2".into()],
                degrees: vec![2],
            },
            delta: 1,
            certificate: CertificateDoc {
                certified: true,
                s0: Some(2),
                search_bound: 3,
            },
            hilbert: vec![1, 1, 0],
            table: vec![TableRowDoc {
                nu: 0,
                dim_b_dual: 1,
                dim_h: 1,
                dim_torsion: Some(1),
                rank_omega: Some(1),
                pairing_rank: None,
                verdict: "ok".into(),
            }],
            verdict: "verified".into(),
        };
        let text = to_json(&doc);
        let back: ReportDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        // Pinned key spellings.
        for key in [
            "\"version\"", "\"input\"", "\"delta\"", "\"certificate\"", "\"hilbert\"",
            "\"table\"", "\"verdict\"", "\"nu\"", "\"dimB_dual\"", "\"dimH\"",
            "\"dimTorsion\"", "\"rankOmega\"", "\"pairingRank\"", "\"searchBound\"",
        ] {
            assert!(text.contains(key), "missing {key}");
        }
    }

    #[test]
    fn matrix_rendering() {
        use morley_core::rat;
        let m = morley_core::RatMatrix::from_rows(vec![
            vec![rat(1), rat(0)],
            vec![rat(-2), rat(3)],
        ]);
        assert_eq!(matrix_lines(&m), vec!["[1, 0]", "[-2, 3]"]);
    }
}
