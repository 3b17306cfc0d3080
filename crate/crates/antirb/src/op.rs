//! Operator representations and residual-based identity verification.
//!
//! An operator is either homogeneous of some degree on the Witt or Virasoro
//! algebra (a coefficient function plus central parameters) or a 3x3 matrix
//! on sl2 in the row-as-image convention `R(e_i) = sum_j rows[i][j] e_j`.
//!
//! Verification evaluates exact residual elements over a window of basis
//! generators. A coefficient table that does not cover a required index
//! makes the evaluation `Unknown`; such pairs are counted as skipped and
//! never influence pass/fail status.

use crate::lie::{basis_list, AlgebraKind, BasisIndex, Element};
use crate::scalar::Scalar;
use crate::sl2::Matrix3;
use crate::witt::FamilyCoeffs;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OpError {
    #[error("algebra mismatch: operator on {expected}, argument in {found}")]
    AlgebraMismatch {
        expected: AlgebraKind,
        found: AlgebraKind,
    },
    #[error("operation requires a homogeneous operator")]
    NotHomogeneous,
    #[error("central parameters are only meaningful on the Virasoro algebra")]
    CentralParamsOnWitt,
}

/// Coefficient function `f` for a homogeneous operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoefficientSource {
    /// Values known exactly on `[lo, hi]`; indices absent from the map are
    /// zero there. Lookups outside `[lo, hi]` are unknown, not zero.
    Table {
        lo: i64,
        hi: i64,
        values: BTreeMap<i64, Scalar>,
    },
    /// Closed form from the family catalog; defined on all of Z.
    Family(FamilyCoeffs),
}

impl CoefficientSource {
    pub fn table<I>(lo: i64, hi: i64, values: I) -> Self
    where
        I: IntoIterator<Item = (i64, Scalar)>,
    {
        let values = values
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .collect::<BTreeMap<_, _>>();
        assert!(
            values.keys().all(|m| (lo..=hi).contains(m)),
            "table value outside declared domain"
        );
        CoefficientSource::Table { lo, hi, values }
    }

    /// `Some(f(m))` when known, `None` when outside a table domain.
    pub fn eval(&self, m: i64) -> Option<Scalar> {
        match self {
            CoefficientSource::Table { lo, hi, values } => {
                if (*lo..=*hi).contains(&m) {
                    Some(values.get(&m).cloned().unwrap_or_else(Scalar::zero))
                } else {
                    None
                }
            }
            CoefficientSource::Family(fam) => Some(fam.eval(m)),
        }
    }
}

/// Homogeneous operator of a fixed degree on Witt or Virasoro.
///
/// On basis generators: `R(L_m) = f(m+k) L_{m+k} + theta delta_{m+k,0} C`
/// and `R(C) = mu L_k + nu delta_{k,0} C` (central parts Virasoro-only).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousOp {
    pub algebra: AlgebraKind,
    pub degree: i64,
    pub coeffs: CoefficientSource,
    pub theta: Scalar,
    pub mu: Scalar,
    pub nu: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OperatorSpec {
    Homogeneous(HomogeneousOp),
    Matrix3(Matrix3),
}

impl OperatorSpec {
    pub fn homogeneous_witt(degree: i64, coeffs: CoefficientSource) -> Self {
        OperatorSpec::Homogeneous(HomogeneousOp {
            algebra: AlgebraKind::Witt,
            degree,
            coeffs,
            theta: Scalar::zero(),
            mu: Scalar::zero(),
            nu: Scalar::zero(),
        })
    }

    pub fn homogeneous_virasoro(
        degree: i64,
        coeffs: CoefficientSource,
        theta: Scalar,
        mu: Scalar,
        nu: Scalar,
    ) -> Self {
        OperatorSpec::Homogeneous(HomogeneousOp {
            algebra: AlgebraKind::Virasoro,
            degree,
            coeffs,
            theta,
            mu,
            nu,
        })
    }

    pub fn matrix(m: Matrix3) -> Self {
        OperatorSpec::Matrix3(m)
    }

    pub fn algebra(&self) -> AlgebraKind {
        match self {
            OperatorSpec::Homogeneous(h) => h.algebra,
            OperatorSpec::Matrix3(_) => AlgebraKind::Sl2,
        }
    }

    fn apply_basis(&self, index: BasisIndex) -> Result<Option<Element>, OpError> {
        if index.algebra() != self.algebra() {
            return Err(OpError::AlgebraMismatch {
                expected: self.algebra(),
                found: index.algebra(),
            });
        }
        match self {
            OperatorSpec::Matrix3(m) => {
                let BasisIndex::Sl2Gen(i) = index else {
                    unreachable!()
                };
                Ok(Some(m.row_image(usize::from(i) - 1)))
            }
            OperatorSpec::Homogeneous(h) => match index {
                BasisIndex::WittGen(m) | BasisIndex::VirGen(m) => {
                    let target = m + h.degree;
                    let Some(coeff) = h.coeffs.eval(target) else {
                        return Ok(None);
                    };
                    let gen = match h.algebra {
                        AlgebraKind::Witt => BasisIndex::WittGen(target),
                        AlgebraKind::Virasoro => BasisIndex::VirGen(target),
                        AlgebraKind::Sl2 => unreachable!(),
                    };
                    let mut out = Element::basis(gen).scale(&coeff);
                    if h.algebra == AlgebraKind::Virasoro && target == 0 {
                        out = out
                            .add(&Element::basis(BasisIndex::VirCentral).scale(&h.theta))
                            .expect("same algebra");
                    }
                    Ok(Some(out))
                }
                BasisIndex::VirCentral => {
                    let mut out =
                        Element::basis(BasisIndex::VirGen(h.degree)).scale(&h.mu);
                    if h.degree == 0 {
                        out = out
                            .add(&Element::basis(BasisIndex::VirCentral).scale(&h.nu))
                            .expect("same algebra");
                    }
                    Ok(Some(out))
                }
                BasisIndex::Sl2Gen(_) => unreachable!(),
            },
        }
    }

    /// Linear extension of the operator. `Ok(None)` means some required
    /// table coefficient is unknown.
    pub fn apply(&self, x: &Element) -> Result<Option<Element>, OpError> {
        if x.algebra() != self.algebra() {
            return Err(OpError::AlgebraMismatch {
                expected: self.algebra(),
                found: x.algebra(),
            });
        }
        let mut out = Element::zero(self.algebra());
        for (idx, coeff) in x.terms() {
            match self.apply_basis(*idx)? {
                None => return Ok(None),
                Some(image) => {
                    out = out.add(&image.scale(coeff)).expect("same algebra");
                }
            }
        }
        Ok(Some(out))
    }
}

/// Which identity to verify.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentityKind {
    /// `[R(x),R(y)] + R([R(x),y] + [x,R(y)]) = 0`
    AntiRb,
    /// `[R(x),R(y)] = delta R([R(x),y] + [x,R(y)])`
    DeltaRb(Scalar),
    /// `[[R(x),R(y)],z] + [[R(y),R(z)],x] + [[R(z),R(x)],y] = 0`
    Strong,
    /// `R([x,y]) = delta ([R(x),y] + [x,R(y)])`
    DeltaDerivation(Scalar),
}

/// One identity violation: the basis inputs and the exact nonzero residual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub inputs: Vec<BasisIndex>,
    pub residual: Element,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of a windowed identity check.
///
/// `status` is `Pass` exactly when `violations` is empty; skipped
/// evaluations (unknown table coefficients) never influence it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub status: Status,
    pub checked: u64,
    pub skipped: u64,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Accumulates residuals into a canonical report.
pub(crate) struct ReportBuilder {
    checked: u64,
    skipped: u64,
    violations: Vec<Violation>,
}

impl ReportBuilder {
    pub(crate) fn new() -> Self {
        ReportBuilder {
            checked: 0,
            skipped: 0,
            violations: Vec::new(),
        }
    }

    pub(crate) fn record(&mut self, inputs: Vec<BasisIndex>, residual: Element) {
        self.checked += 1;
        if !residual.is_zero() {
            self.violations.push(Violation { inputs, residual });
        }
    }

    pub(crate) fn record_skip(&mut self) {
        self.skipped += 1;
    }

    pub(crate) fn finish(mut self) -> VerificationReport {
        self.violations.sort_by(|a, b| a.inputs.cmp(&b.inputs));
        VerificationReport {
            status: if self.violations.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            },
            checked: self.checked,
            skipped: self.skipped,
            violations: self.violations,
        }
    }
}

fn bracket(x: &Element, y: &Element) -> Element {
    x.bracket(y).expect("same algebra by construction")
}

fn add(x: &Element, y: &Element) -> Element {
    x.add(y).expect("same algebra by construction")
}

/// Residual of the delta-twisted Rota-Baxter identity at a basis pair:
/// `[R(x),R(y)] - delta R([R(x),y] + [x,R(y)])`, or `None` when a required
/// table coefficient is unknown.
pub fn delta_rb_residual(
    op: &OperatorSpec,
    x: BasisIndex,
    y: BasisIndex,
    delta: &Scalar,
) -> Result<Option<Element>, OpError> {
    let ex = Element::basis(x);
    let ey = Element::basis(y);
    let Some(rx) = op.apply(&ex)? else {
        return Ok(None);
    };
    let Some(ry) = op.apply(&ey)? else {
        return Ok(None);
    };
    let lhs = bracket(&rx, &ry);
    let inner = add(&bracket(&rx, &ey), &bracket(&ex, &ry));
    let Some(r_inner) = op.apply(&inner)? else {
        return Ok(None);
    };
    Ok(Some(
        lhs.sub(&r_inner.scale(delta)).expect("same algebra"),
    ))
}

fn derivation_residual(
    op: &OperatorSpec,
    x: BasisIndex,
    y: BasisIndex,
    delta: &Scalar,
) -> Result<Option<Element>, OpError> {
    let ex = Element::basis(x);
    let ey = Element::basis(y);
    let Some(dxy) = op.apply(&bracket(&ex, &ey))? else {
        return Ok(None);
    };
    let Some(dx) = op.apply(&ex)? else {
        return Ok(None);
    };
    let Some(dy) = op.apply(&ey)? else {
        return Ok(None);
    };
    let rhs = add(&bracket(&dx, &ey), &bracket(&ex, &dy));
    Ok(Some(dxy.sub(&rhs.scale(delta)).expect("same algebra")))
}

fn strong_residual(
    op: &OperatorSpec,
    x: BasisIndex,
    y: BasisIndex,
    z: BasisIndex,
) -> Result<Option<Element>, OpError> {
    let ex = Element::basis(x);
    let ey = Element::basis(y);
    let ez = Element::basis(z);
    let (Some(rx), Some(ry), Some(rz)) =
        (op.apply(&ex)?, op.apply(&ey)?, op.apply(&ez)?)
    else {
        return Ok(None);
    };
    let t1 = bracket(&bracket(&rx, &ry), &ez);
    let t2 = bracket(&bracket(&ry, &rz), &ex);
    let t3 = bracket(&bracket(&rz, &rx), &ey);
    Ok(Some(add(&add(&t1, &t2), &t3)))
}

/// Check one identity over every unordered basis pair (triple for
/// [`IdentityKind::Strong`]) with generator indices in `[-window, window]`.
///
/// Pair iteration relies on the residuals being antisymmetric in `(x, y)`,
/// which [`residual_antisymmetry_check`] validates independently.
pub fn verify_identity(
    op: &OperatorSpec,
    window: i64,
    kind: &IdentityKind,
) -> Result<VerificationReport, OpError> {
    let basis = basis_list(op.algebra(), window);
    let mut report = ReportBuilder::new();
    match kind {
        IdentityKind::AntiRb => {
            return verify_identity(op, window, &IdentityKind::DeltaRb(-&Scalar::one()))
        }
        IdentityKind::DeltaRb(delta) => {
            for (i, &x) in basis.iter().enumerate() {
                for &y in &basis[i..] {
                    match delta_rb_residual(op, x, y, delta)? {
                        None => report.record_skip(),
                        Some(residual) => report.record(vec![x, y], residual),
                    }
                }
            }
        }
        IdentityKind::DeltaDerivation(delta) => {
            for (i, &x) in basis.iter().enumerate() {
                for &y in &basis[i..] {
                    match derivation_residual(op, x, y, delta)? {
                        None => report.record_skip(),
                        Some(residual) => report.record(vec![x, y], residual),
                    }
                }
            }
        }
        IdentityKind::Strong => {
            for (i, &x) in basis.iter().enumerate() {
                for (j, &y) in basis.iter().enumerate().skip(i) {
                    for &z in &basis[j..] {
                        match strong_residual(op, x, y, z)? {
                            None => report.record_skip(),
                            Some(residual) => report.record(vec![x, y, z], residual),
                        }
                    }
                }
            }
        }
    }
    Ok(report.finish())
}

/// Self-test of the verifier: the pair residual must be antisymmetric in
/// `(x, y)` for every operator and every delta.
pub fn residual_antisymmetry_check(
    op: &OperatorSpec,
    window: i64,
    delta: &Scalar,
) -> Result<VerificationReport, OpError> {
    let basis = basis_list(op.algebra(), window);
    let mut report = ReportBuilder::new();
    for (i, &x) in basis.iter().enumerate() {
        for &y in &basis[i..] {
            let (rxy, ryx) = (
                delta_rb_residual(op, x, y, delta)?,
                delta_rb_residual(op, y, x, delta)?,
            );
            match (rxy, ryx) {
                (Some(rxy), Some(ryx)) => {
                    report.record(vec![x, y], add(&rxy, &ryx));
                }
                _ => report.record_skip(),
            }
        }
    }
    Ok(report.finish())
}

/// True when `elem` lies in the degree-`n` graded component: the span of
/// `L_n`, enlarged by `C` at degree zero for the Virasoro algebra.
pub fn element_in_component(algebra: AlgebraKind, n: i64, elem: &Element) -> bool {
    elem.support().iter().all(|idx| match idx {
        BasisIndex::WittGen(m) | BasisIndex::VirGen(m) => *m == n,
        BasisIndex::VirCentral => algebra == AlgebraKind::Virasoro && n == 0,
        BasisIndex::Sl2Gen(_) => false,
    })
}

/// True iff every in-window basis image lands in the graded component the
/// operator's degree dictates. Unknown images cannot witness a violation
/// and are ignored.
pub fn is_graded(op: &OperatorSpec, window: i64) -> Result<bool, OpError> {
    let OperatorSpec::Homogeneous(h) = op else {
        return Err(OpError::NotHomogeneous);
    };
    for idx in basis_list(h.algebra, window) {
        let target = match idx {
            BasisIndex::WittGen(m) | BasisIndex::VirGen(m) => m + h.degree,
            BasisIndex::VirCentral => h.degree,
            BasisIndex::Sl2Gen(_) => unreachable!(),
        };
        if let Some(image) = op.apply_basis(idx)? {
            if !element_in_component(h.algebra, target, &image) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
