//! The operator document: JSON in, exact operator out.
//!
//! Unknown fields are rejected; scalars obey the exact grammar; a table's
//! value keys must lie inside its declared domain.

use antirb::op::{CoefficientSource, OperatorSpec};
use antirb::scalar::Scalar;
use antirb::sl2::Matrix3;
use antirb::witt::{build_vir_family, build_witt_family, VirFamily, WittFamily};
use antirb::AlgebraKind;
use serde::Deserialize;
use std::collections::BTreeMap;

#[derive(Debug)]
pub enum DocError {
    Json(String),
    Invalid(String),
}

impl std::fmt::Display for DocError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DocError::Json(msg) => write!(f, "malformed JSON: {msg}"),
            DocError::Invalid(msg) => write!(f, "invalid operator document: {msg}"),
        }
    }
}

impl std::error::Error for DocError {}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorDocument {
    pub algebra: String,
    pub operator: OperatorBody,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorBody {
    pub kind: String,
    #[serde(default)]
    pub degree: Option<i64>,
    #[serde(default)]
    pub f: Option<TableDoc>,
    #[serde(default)]
    pub family: Option<FamilyDoc>,
    #[serde(default)]
    pub theta: Option<String>,
    #[serde(default)]
    pub mu: Option<String>,
    #[serde(default)]
    pub nu: Option<String>,
    #[serde(default)]
    pub rows: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDoc {
    pub domain: [i64; 2],
    pub values: BTreeMap<String, String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDoc {
    pub name: String,
    #[serde(default)]
    pub params: BTreeMap<String, String>,
}

fn invalid(msg: impl Into<String>) -> DocError {
    DocError::Invalid(msg.into())
}

fn parse_scalar(text: &str, what: &str) -> Result<Scalar, DocError> {
    Scalar::parse(text).map_err(|e| invalid(format!("{what}: {e} (in {text:?})")))
}

struct FamilyParams<'a> {
    name: &'a str,
    params: &'a BTreeMap<String, String>,
}

impl<'a> FamilyParams<'a> {
    fn scalar(&self, key: &str) -> Result<Scalar, DocError> {
        let text = self.params.get(key).ok_or_else(|| {
            invalid(format!("family {:?} needs parameter {key:?}", self.name))
        })?;
        parse_scalar(text, &format!("family parameter {key}"))
    }

    fn scalar_or_zero(&self, key: &str) -> Result<Scalar, DocError> {
        match self.params.get(key) {
            None => Ok(Scalar::zero()),
            Some(text) => parse_scalar(text, &format!("family parameter {key}")),
        }
    }

    fn integer(&self, key: &str) -> Result<i64, DocError> {
        let text = self.params.get(key).ok_or_else(|| {
            invalid(format!("family {:?} needs parameter {key:?}", self.name))
        })?;
        text.parse().map_err(|_| {
            invalid(format!("family parameter {key} must be an integer, got {text:?}"))
        })
    }

    fn check_known(&self, known: &[&str]) -> Result<(), DocError> {
        for key in self.params.keys() {
            if !known.contains(&key.as_str()) {
                return Err(invalid(format!(
                    "family {:?} does not take parameter {key:?}",
                    self.name
                )));
            }
        }
        Ok(())
    }
}

fn even_half(degree: i64, what: &str) -> Result<i64, DocError> {
    if degree % 2 != 0 {
        return Err(invalid(format!("{what} needs an even degree, got {degree}")));
    }
    Ok(degree / 2)
}

fn build_family(
    algebra: AlgebraKind,
    degree: i64,
    doc: &FamilyDoc,
) -> Result<OperatorSpec, DocError> {
    let p = FamilyParams {
        name: &doc.name,
        params: &doc.params,
    };
    let build_witt = |family: &WittFamily| {
        build_witt_family(family).map_err(|e| invalid(e.to_string()))
    };
    let build_vir = |family: &VirFamily| {
        build_vir_family(family).map_err(|e| invalid(e.to_string()))
    };
    match (algebra, doc.name.as_str()) {
        (AlgebraKind::Witt, "witt_i") => {
            p.check_known(&["alpha"])?;
            build_witt(&WittFamily::I { k: degree, alpha: p.scalar("alpha")? })
        }
        (AlgebraKind::Witt, "witt_ii") => {
            p.check_known(&["beta"])?;
            build_witt(&WittFamily::II {
                half_degree: even_half(degree, "witt_ii")?,
                beta: p.scalar("beta")?,
            })
        }
        (AlgebraKind::Witt, "witt_iii_thm") => {
            p.check_known(&["l", "gamma"])?;
            build_witt(&WittFamily::IiiThm {
                k: degree,
                l: p.integer("l")?,
                gamma: p.scalar("gamma")?,
            })
        }
        (AlgebraKind::Witt, "witt_iii_prop4") => {
            p.check_known(&["l", "gamma"])?;
            build_witt(&WittFamily::IiiProp4 {
                k: degree,
                l: p.integer("l")?,
                gamma: p.scalar("gamma")?,
            })
        }
        (AlgebraKind::Witt, "witt_deg0") => {
            p.check_known(&["alpha"])?;
            if degree != 0 {
                return Err(invalid("witt_deg0 requires degree 0"));
            }
            build_witt(&WittFamily::Deg0 { alpha: p.scalar("alpha")? })
        }
        (AlgebraKind::Witt, "witt_support_origin") => {
            p.check_known(&["alpha"])?;
            build_witt(&WittFamily::SupportOrigin { k: degree, alpha: p.scalar("alpha")? })
        }
        (AlgebraKind::Witt, "witt_support_minus_k") => {
            p.check_known(&["alpha"])?;
            build_witt(&WittFamily::SupportMinusK { k: degree, alpha: p.scalar("alpha")? })
        }
        (AlgebraKind::Virasoro, "vir_deg0") => {
            p.check_known(&["alpha", "theta", "mu", "nu"])?;
            if degree != 0 {
                return Err(invalid("vir_deg0 requires degree 0"));
            }
            build_vir(&VirFamily::Deg0 {
                alpha: p.scalar_or_zero("alpha")?,
                theta: p.scalar_or_zero("theta")?,
                mu: p.scalar_or_zero("mu")?,
                nu: p.scalar_or_zero("nu")?,
            })
        }
        (AlgebraKind::Virasoro, "vir_i") => {
            p.check_known(&["theta"])?;
            build_vir(&VirFamily::I { k: degree, theta: p.scalar("theta")? })
        }
        (AlgebraKind::Virasoro, "vir_ii") => {
            p.check_known(&["alpha"])?;
            build_vir(&VirFamily::II { k: degree, alpha: p.scalar("alpha")? })
        }
        (AlgebraKind::Virasoro, "vir_iii") => {
            p.check_known(&["beta", "vartheta"])?;
            build_vir(&VirFamily::III {
                half_degree: even_half(degree, "vir_iii")?,
                beta: p.scalar("beta")?,
                vartheta: p.scalar_or_zero("vartheta")?,
            })
        }
        (AlgebraKind::Virasoro, "vir_iv_printed") => {
            p.check_known(&["mu"])?;
            build_vir(&VirFamily::IvPrinted { k: degree, mu: p.scalar("mu")? })
        }
        (AlgebraKind::Virasoro, "vir_iv_signflip") => {
            p.check_known(&["mu"])?;
            build_vir(&VirFamily::IvSignflip { k: degree, mu: p.scalar("mu")? })
        }
        (_, name) => Err(invalid(format!(
            "unknown family {name:?} for algebra {algebra}"
        ))),
    }
}

fn convert(doc: &OperatorDocument) -> Result<OperatorSpec, DocError> {
    let algebra = match doc.algebra.as_str() {
        "witt" => AlgebraKind::Witt,
        "virasoro" => AlgebraKind::Virasoro,
        "sl2" => AlgebraKind::Sl2,
        other => return Err(invalid(format!("unknown algebra {other:?}"))),
    };
    let body = &doc.operator;
    match body.kind.as_str() {
        "homogeneous" => {
            if algebra == AlgebraKind::Sl2 {
                return Err(invalid("homogeneous operators act on witt or virasoro"));
            }
            if body.rows.is_some() {
                return Err(invalid("homogeneous operators do not take rows"));
            }
            let degree = body
                .degree
                .ok_or_else(|| invalid("homogeneous operators need a degree"))?;
            let central = |field: &Option<String>, name: &str| -> Result<Scalar, DocError> {
                match field {
                    None => Ok(Scalar::zero()),
                    Some(text) => {
                        if algebra == AlgebraKind::Witt {
                            return Err(invalid(format!(
                                "{name} is only meaningful on the virasoro algebra"
                            )));
                        }
                        parse_scalar(text, name)
                    }
                }
            };
            match (&body.f, &body.family) {
                (Some(_), Some(_)) => {
                    Err(invalid("give either a coefficient table or a family, not both"))
                }
                (None, None) => {
                    Err(invalid("homogeneous operators need a coefficient table or a family"))
                }
                (Some(table), None) => {
                    let [lo, hi] = table.domain;
                    if lo > hi {
                        return Err(invalid(format!("empty table domain [{lo}, {hi}]")));
                    }
                    let mut values = Vec::new();
                    for (key, text) in &table.values {
                        let index: i64 = key.parse().map_err(|_| {
                            invalid(format!("table key must be an integer, got {key:?}"))
                        })?;
                        if !(lo..=hi).contains(&index) {
                            return Err(invalid(format!(
                                "table key {index} outside domain [{lo}, {hi}]"
                            )));
                        }
                        values.push((index, parse_scalar(text, "table value")?));
                    }
                    let coeffs = CoefficientSource::table(lo, hi, values);
                    Ok(match algebra {
                        AlgebraKind::Witt => {
                            // reject stray central parameters before building
                            central(&body.theta, "theta")?;
                            central(&body.mu, "mu")?;
                            central(&body.nu, "nu")?;
                            OperatorSpec::homogeneous_witt(degree, coeffs)
                        }
                        AlgebraKind::Virasoro => OperatorSpec::homogeneous_virasoro(
                            degree,
                            coeffs,
                            central(&body.theta, "theta")?,
                            central(&body.mu, "mu")?,
                            central(&body.nu, "nu")?,
                        ),
                        AlgebraKind::Sl2 => unreachable!(),
                    })
                }
                (None, Some(family)) => {
                    if body.theta.is_some() || body.mu.is_some() || body.nu.is_some() {
                        return Err(invalid(
                            "family operators carry their central parameters in params",
                        ));
                    }
                    build_family(algebra, degree, family)
                }
            }
        }
        "matrix" => {
            if algebra != AlgebraKind::Sl2 {
                return Err(invalid("matrix operators act on sl2"));
            }
            if body.degree.is_some()
                || body.f.is_some()
                || body.family.is_some()
                || body.theta.is_some()
                || body.mu.is_some()
                || body.nu.is_some()
            {
                return Err(invalid("matrix operators take only rows"));
            }
            let rows = body
                .rows
                .as_ref()
                .ok_or_else(|| invalid("matrix operators need rows"))?;
            if rows.len() != 3 || rows.iter().any(|r| r.len() != 3) {
                return Err(invalid("rows must be a 3x3 array of scalar strings"));
            }
            let mut entries: [[Scalar; 3]; 3] = Default::default();
            for (i, row) in rows.iter().enumerate() {
                for (j, text) in row.iter().enumerate() {
                    entries[i][j] = parse_scalar(text, "matrix entry")?;
                }
            }
            Ok(OperatorSpec::matrix(Matrix3::new(entries)))
        }
        other => Err(invalid(format!("unknown operator kind {other:?}"))),
    }
}

/// Parse a JSON operator document into an exact operator.
pub fn parse_operator_document(text: &str) -> Result<OperatorSpec, DocError> {
    let doc: OperatorDocument =
        serde_json::from_str(text).map_err(|e| DocError::Json(e.to_string()))?;
    convert(&doc)
}
