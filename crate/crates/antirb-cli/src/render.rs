//! The report document and its JSON/text renderers.
//!
//! Bodies are byte-stable: struct field order is fixed, all lists are in
//! canonical order, scalars are exact strings, and nothing time-dependent
//! is included.

use antirb::lie::Element;
use antirb::op::{Status, VerificationReport, Violation};
use antirb::sl2::{BridgeReport, ClosedFormCheck, FamilySampleReport, GridHit};
use antirb::witt::{AdjudicationReport, CandidateVerdict, FamilyVerdict};
use serde::{Deserialize, Serialize};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermDoc {
    pub basis: String,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ViolationDoc {
    pub inputs: Vec<String>,
    pub residual: Vec<TermDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct IndexValueDoc {
    pub index: i64,
    pub value: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CandidateDoc {
    pub degree: i64,
    pub window: i64,
    pub normalization: String,
    pub stable: bool,
    pub values: Vec<IndexValueDoc>,
    pub tags: Vec<String>,
    pub unclassified_wrt_paper: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ParamDoc {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FamilyVerdictDoc {
    pub family: String,
    pub params: Vec<ParamDoc>,
    pub status: String,
    pub checked: u64,
    pub skipped: u64,
    pub violation_count: u64,
    /// At most the first three violations, in canonical order.
    pub first_violations: Vec<ViolationDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GridHitDoc {
    pub entries: Vec<Vec<i64>>,
    pub matches: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GridDoc {
    pub range: i64,
    pub candidates: u64,
    pub hit_count: u64,
    pub hits: Vec<GridHitDoc>,
    /// Hits matching no pattern, verbatim; expected-empty is a finding.
    pub unmatched: Vec<Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct BridgeDoc {
    pub samples: u64,
    pub seed: u64,
    pub derivation_failures: u64,
    pub inverse_antirb_failures: u64,
    pub closed_form_disagreements: u64,
    pub closed_form_skipped_a_prime_zero: u64,
    pub f9_match_failures: u64,
    pub det_formula_disagreements: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FamilySamplesDoc {
    pub family: String,
    pub strong_listed: bool,
    pub samples: u64,
    pub relation_failures: Vec<u64>,
    pub antirb_failures: Vec<u64>,
    pub strong_violations: Vec<u64>,
}

/// The machine-readable report every subcommand emits.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReportDocument {
    pub tool_version: String,
    pub command: String,
    /// "pass" | "fail" | "adjudicated"
    pub status: String,
    pub checked: u64,
    pub skipped: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notice: Option<String>,
    pub violations: Vec<ViolationDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidates: Option<Vec<CandidateDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub families: Option<Vec<FamilyVerdictDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family_samples: Option<Vec<FamilySamplesDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bridge: Option<BridgeDoc>,
}

impl ReportDocument {
    pub fn new(command: String, status: &str) -> Self {
        ReportDocument {
            tool_version: TOOL_VERSION.to_string(),
            command,
            status: status.to_string(),
            checked: 0,
            skipped: 0,
            notice: None,
            violations: Vec::new(),
            candidates: None,
            families: None,
            family_samples: None,
            grid: None,
            bridge: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut body = serde_json::to_string_pretty(self).expect("report serializes");
        body.push('\n');
        body
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let line = |out: &mut String, text: String| {
            out.push_str(&text);
            out.push('\n');
        };
        line(&mut out, format!("antirb {} report", self.tool_version));
        line(&mut out, format!("command: {}", self.command));
        line(&mut out, format!("status: {}", self.status));
        line(
            &mut out,
            format!("checked: {}  skipped: {}", self.checked, self.skipped),
        );
        if let Some(notice) = &self.notice {
            line(&mut out, format!("notice: {notice}"));
        }
        if self.violations.is_empty() {
            line(&mut out, "violations: none".to_string());
        } else {
            line(&mut out, format!("violations: {}", self.violations.len()));
            for v in &self.violations {
                let residual = v
                    .residual
                    .iter()
                    .map(|t| format!("({})*{}", t.coeff, t.basis))
                    .collect::<Vec<_>>()
                    .join(" + ");
                line(&mut out, format!("  at ({}): {residual}", v.inputs.join(", ")));
            }
        }
        if let Some(candidates) = &self.candidates {
            line(&mut out, format!("candidates: {}", candidates.len()));
            for c in candidates {
                let values = c
                    .values
                    .iter()
                    .map(|iv| format!("f({}) = {}", iv.index, iv.value))
                    .collect::<Vec<_>>()
                    .join(", ");
                line(
                    &mut out,
                    format!(
                        "  [{}] {} (stable: {}, tags: [{}], unclassified_wrt_paper: {})",
                        c.normalization,
                        if values.is_empty() { "f = 0".to_string() } else { values },
                        c.stable,
                        c.tags.join(", "),
                        c.unclassified_wrt_paper
                    ),
                );
            }
        }
        if let Some(families) = &self.families {
            line(&mut out, format!("families: {}", families.len()));
            for f in families {
                let params = f
                    .params
                    .iter()
                    .map(|p| format!("{}={}", p.name, p.value))
                    .collect::<Vec<_>>()
                    .join(", ");
                line(
                    &mut out,
                    format!(
                        "  {} ({params}): {} ({} checked, {} skipped, {} violations)",
                        f.family, f.status, f.checked, f.skipped, f.violation_count
                    ),
                );
            }
        }
        if let Some(samples) = &self.family_samples {
            line(&mut out, format!("family_samples: {}", samples.len()));
            for s in samples {
                line(
                    &mut out,
                    format!(
                        "  {} (strong-listed: {}): {} samples, relation failures {:?}, anti-RB failures {:?}, strong violations {:?}",
                        s.family,
                        s.strong_listed,
                        s.samples,
                        s.relation_failures,
                        s.antirb_failures,
                        s.strong_violations
                    ),
                );
            }
        }
        if let Some(grid) = &self.grid {
            line(
                &mut out,
                format!(
                    "grid: range {}, {} candidates, {} hits, {} unmatched",
                    grid.range, grid.candidates, grid.hit_count, grid.unmatched.len()
                ),
            );
            for hit in &grid.hits {
                line(
                    &mut out,
                    format!("  {:?} matches [{}]", hit.entries, hit.matches.join(", ")),
                );
            }
        }
        if let Some(bridge) = &self.bridge {
            line(
                &mut out,
                format!(
                    "bridge: {} samples (seed {}): derivation failures {}, inverse anti-RB failures {}, closed-form disagreements {}, closed-form skipped (a'=0) {}, F9 match failures {}, det formula disagreements {}",
                    bridge.samples,
                    bridge.seed,
                    bridge.derivation_failures,
                    bridge.inverse_antirb_failures,
                    bridge.closed_form_disagreements,
                    bridge.closed_form_skipped_a_prime_zero,
                    bridge.f9_match_failures,
                    bridge.det_formula_disagreements
                ),
            );
        }
        out
    }
}

pub fn element_terms(element: &Element) -> Vec<TermDoc> {
    element
        .terms()
        .map(|(idx, coeff)| TermDoc {
            basis: idx.to_string(),
            coeff: coeff.to_string(),
        })
        .collect()
}

pub fn violation_doc(violation: &Violation) -> ViolationDoc {
    ViolationDoc {
        inputs: violation.inputs.iter().map(|i| i.to_string()).collect(),
        residual: element_terms(&violation.residual),
    }
}

pub fn status_str(status: Status) -> &'static str {
    match status {
        Status::Pass => "pass",
        Status::Fail => "fail",
    }
}

pub fn family_verdict_doc(verdict: &FamilyVerdict) -> FamilyVerdictDoc {
    FamilyVerdictDoc {
        family: verdict.family.clone(),
        params: verdict
            .params
            .iter()
            .map(|(name, value)| ParamDoc {
                name: name.clone(),
                value: value.clone(),
            })
            .collect(),
        status: status_str(verdict.report.status).to_string(),
        checked: verdict.report.checked,
        skipped: verdict.report.skipped,
        violation_count: verdict.report.violations.len() as u64,
        first_violations: verdict
            .report
            .violations
            .iter()
            .take(3)
            .map(violation_doc)
            .collect(),
    }
}

pub fn candidate_doc(verdict: &CandidateVerdict) -> CandidateDoc {
    CandidateDoc {
        degree: verdict.candidate.k,
        window: verdict.candidate.window,
        normalization: verdict.candidate.normalization.to_string(),
        stable: verdict.candidate.stable,
        values: verdict
            .candidate
            .values
            .iter()
            .map(|(index, value)| IndexValueDoc {
                index: *index,
                value: value.to_string(),
            })
            .collect(),
        tags: verdict.tags.iter().map(|t| t.to_string()).collect(),
        unclassified_wrt_paper: verdict.unclassified_wrt_paper,
    }
}

pub fn adjudication_docs(
    report: &AdjudicationReport,
) -> (Vec<FamilyVerdictDoc>, Vec<CandidateDoc>) {
    (
        report.families.iter().map(family_verdict_doc).collect(),
        report.candidates.iter().map(candidate_doc).collect(),
    )
}

pub fn grid_doc(range: i64, hits: &[GridHit]) -> GridDoc {
    let side = (2 * range + 1) as u64;
    let to_rows = |entries: &[[i64; 3]; 3]| entries.iter().map(|r| r.to_vec()).collect();
    GridDoc {
        range,
        candidates: side.pow(9),
        hit_count: hits.len() as u64,
        hits: hits
            .iter()
            .map(|h| GridHitDoc {
                entries: to_rows(&h.entries),
                matches: h.matches.iter().map(|t| t.to_string()).collect(),
            })
            .collect(),
        unmatched: hits
            .iter()
            .filter(|h| h.matches.is_empty())
            .map(|h| to_rows(&h.entries))
            .collect(),
    }
}

pub fn family_samples_doc(report: &FamilySampleReport) -> FamilySamplesDoc {
    FamilySamplesDoc {
        family: report.tag.to_string(),
        strong_listed: report.tag.is_strong_listed(),
        samples: report.samples as u64,
        relation_failures: report.relation_failures.iter().map(|i| *i as u64).collect(),
        antirb_failures: report.antirb_failures.iter().map(|i| *i as u64).collect(),
        strong_violations: report.strong_violations.iter().map(|i| *i as u64).collect(),
    }
}

pub fn bridge_doc(samples: u64, seed: u64, reports: &[BridgeReport]) -> BridgeDoc {
    let count = |pred: &dyn Fn(&BridgeReport) -> bool| {
        reports.iter().filter(|r| pred(r)).count() as u64
    };
    BridgeDoc {
        samples,
        seed,
        derivation_failures: count(&|r| !r.derivation_pass),
        inverse_antirb_failures: count(&|r| !r.inverse_antirb_pass),
        closed_form_disagreements: count(&|r| r.closed_form == ClosedFormCheck::Disagrees),
        closed_form_skipped_a_prime_zero: count(&|r| {
            r.closed_form == ClosedFormCheck::SkippedAPrimeZero
        }),
        f9_match_failures: count(&|r| !r.inverse_matches_f9),
        det_formula_disagreements: count(&|r| !r.det_formula_agrees),
    }
}

/// Windowed checks on the infinite-dimensional algebras are statements
/// about the window only; the notice records that and any skips.
pub fn window_notice(report: &VerificationReport, window: i64) -> String {
    if report.skipped == 0 {
        format!(
            "results are window-consistent: all basis pairs with generator indices in [-{window}, {window}] were checked; this is not a proof over all integer indices"
        )
    } else {
        format!(
            "results are window-consistent: {} evaluation(s) were skipped where table coefficients are unknown; pass/fail reflects checked pairs only",
            report.skipped
        )
    }
}
