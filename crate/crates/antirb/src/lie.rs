//! Structure-constant engines for the three Lie algebras.
//!
//! Basis brackets:
//!
//! - Witt: `[L_m, L_n] = (m - n) L_{m+n}`
//! - Virasoro: the Witt bracket plus the central term
//!   `(m^3 - m)/12 * delta_{m+n,0} * C`, with `C` central
//! - sl2: `[e1,e2] = e3`, `[e1,e3] = 2 e1`, `[e2,e3] = -2 e2`
//!
//! Elements are finitely supported linear combinations; the bracket extends
//! bilinearly with no truncation.

use crate::op::{ReportBuilder, VerificationReport};
use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Witt,
    Virasoro,
    Sl2,
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraKind::Witt => write!(f, "witt"),
            AlgebraKind::Virasoro => write!(f, "virasoro"),
            AlgebraKind::Sl2 => write!(f, "sl2"),
        }
    }
}

/// A basis generator of one of the three algebras.
///
/// The ordering is the canonical report order: generators by index, the
/// central generator after all `L_n`, and `e_i` by `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisIndex {
    WittGen(i64),
    VirGen(i64),
    VirCentral,
    /// `i` ranges over 1..=3.
    Sl2Gen(u8),
}

impl BasisIndex {
    pub fn algebra(&self) -> AlgebraKind {
        match self {
            BasisIndex::WittGen(_) => AlgebraKind::Witt,
            BasisIndex::VirGen(_) | BasisIndex::VirCentral => AlgebraKind::Virasoro,
            BasisIndex::Sl2Gen(_) => AlgebraKind::Sl2,
        }
    }

    fn sort_key(&self) -> (u8, i64) {
        match self {
            BasisIndex::WittGen(n) => (0, *n),
            BasisIndex::VirGen(n) => (1, *n),
            BasisIndex::VirCentral => (2, 0),
            BasisIndex::Sl2Gen(i) => (3, i64::from(*i)),
        }
    }
}

impl Ord for BasisIndex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for BasisIndex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisIndex::WittGen(n) | BasisIndex::VirGen(n) => write!(f, "L({n})"),
            BasisIndex::VirCentral => write!(f, "C"),
            BasisIndex::Sl2Gen(i) => write!(f, "e({i})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("algebra mismatch: expected {expected}, found {found}")]
    AlgebraMismatch {
        expected: AlgebraKind,
        found: AlgebraKind,
    },
}

/// Finitely supported linear combination of basis generators.
///
/// Canonical sparse form: zero coefficients are never stored, so equality is
/// map equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    algebra: AlgebraKind,
    terms: BTreeMap<BasisIndex, Scalar>,
}

impl Element {
    pub fn zero(algebra: AlgebraKind) -> Self {
        Element {
            algebra,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(index: BasisIndex) -> Self {
        let mut terms = BTreeMap::new();
        let algebra = index.algebra();
        terms.insert(index, Scalar::one());
        Element { algebra, terms }
    }

    pub fn from_terms<I>(algebra: AlgebraKind, terms: I) -> Result<Self, LieError>
    where
        I: IntoIterator<Item = (BasisIndex, Scalar)>,
    {
        let mut out = Element::zero(algebra);
        for (idx, coeff) in terms {
            if idx.algebra() != algebra {
                return Err(LieError::AlgebraMismatch {
                    expected: algebra,
                    found: idx.algebra(),
                });
            }
            out.add_term(idx, coeff);
        }
        Ok(out)
    }

    pub fn algebra(&self) -> AlgebraKind {
        self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, index: &BasisIndex) -> Scalar {
        self.terms.get(index).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisIndex, &Scalar)> {
        self.terms.iter()
    }

    /// Support in canonical index order.
    pub fn support(&self) -> Vec<BasisIndex> {
        self.terms.keys().copied().collect()
    }

    fn add_term(&mut self, index: BasisIndex, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element, LieError> {
        if self.algebra != other.algebra {
            return Err(LieError::AlgebraMismatch {
                expected: self.algebra,
                found: other.algebra,
            });
        }
        let mut out = self.clone();
        for (idx, coeff) in &other.terms {
            out.add_term(*idx, coeff.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Element) -> Result<Element, LieError> {
        self.add(&other.scale(&-&Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero(self.algebra);
        }
        let terms = self
            .terms
            .iter()
            .map(|(idx, coeff)| (*idx, c * coeff))
            .collect();
        Element {
            algebra: self.algebra,
            terms,
        }
    }

    /// Bilinear extension of the basis brackets.
    pub fn bracket(&self, other: &Element) -> Result<Element, LieError> {
        if self.algebra != other.algebra {
            return Err(LieError::AlgebraMismatch {
                expected: self.algebra,
                found: other.algebra,
            });
        }
        let mut out = Element::zero(self.algebra);
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                let coeff = cx * cy;
                for (idx, c) in basis_bracket(*x, *y).terms {
                    out.add_term(idx, &coeff * &c);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (pos, (idx, coeff)) in self.terms.iter().enumerate() {
            if pos > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({coeff})*{idx}")?;
        }
        Ok(())
    }
}

/// Bracket of two basis generators of the same algebra.
pub fn basis_bracket(x: BasisIndex, y: BasisIndex) -> Element {
    use BasisIndex::*;
    match (x, y) {
        (WittGen(m), WittGen(n)) => {
            Element::zero(AlgebraKind::Witt)
                .add(&Element::basis(WittGen(m + n)).scale(&Scalar::from_int(m - n)))
                .expect("same algebra")
        }
        (VirGen(m), VirGen(n)) => {
            let mut out = Element::basis(VirGen(m + n)).scale(&Scalar::from_int(m - n));
            if m + n == 0 {
                // central cocycle (m^3 - m)/12 in exact arithmetic
                let mm = BigInt::from(m);
                let cocycle = BigRational::new(&mm * &mm * &mm - &mm, BigInt::from(12));
                out = out
                    .add(&Element::basis(VirCentral).scale(&Scalar::new(
                        cocycle,
                        BigRational::new(BigInt::from(0), BigInt::from(1)),
                    )))
                    .expect("same algebra");
            }
            out
        }
        (VirCentral, VirGen(_)) | (VirGen(_), VirCentral) | (VirCentral, VirCentral) => {
            Element::zero(AlgebraKind::Virasoro)
        }
        (Sl2Gen(i), Sl2Gen(j)) => sl2_basis_bracket(i, j),
        _ => panic!("basis_bracket on mixed algebras"),
    }
}

fn sl2_basis_bracket(i: u8, j: u8) -> Element {
    use BasisIndex::Sl2Gen;
    let signed = |idx: u8, c: i64| Element::basis(Sl2Gen(idx)).scale(&Scalar::from_int(c));
    match (i, j) {
        (1, 2) => signed(3, 1),
        (2, 1) => signed(3, -1),
        (1, 3) => signed(1, 2),
        (3, 1) => signed(1, -2),
        (2, 3) => signed(2, -2),
        (3, 2) => signed(2, 2),
        _ => Element::zero(AlgebraKind::Sl2),
    }
}

/// All basis generators with indices in `[-window, window]`; `C` included
/// for the Virasoro algebra, the fixed `e1..e3` for sl2.
pub fn basis_list(algebra: AlgebraKind, window: i64) -> Vec<BasisIndex> {
    match algebra {
        AlgebraKind::Witt => (-window..=window).map(BasisIndex::WittGen).collect(),
        AlgebraKind::Virasoro => {
            let mut out: Vec<_> = (-window..=window).map(BasisIndex::VirGen).collect();
            out.push(BasisIndex::VirCentral);
            out
        }
        AlgebraKind::Sl2 => (1..=3).map(BasisIndex::Sl2Gen).collect(),
    }
}

/// Evaluate the Jacobi identity on every ordered basis triple in the window
/// and report nonzero residuals.
pub fn check_jacobi(algebra: AlgebraKind, window: i64) -> VerificationReport {
    let basis = basis_list(algebra, window);
    let mut report = ReportBuilder::new();
    for &x in &basis {
        for &y in &basis {
            for &z in &basis {
                let ex = Element::basis(x);
                let ey = Element::basis(y);
                let ez = Element::basis(z);
                let residual = jacobi_residual(&ex, &ey, &ez);
                report.record(vec![x, y, z], residual);
            }
        }
    }
    report.finish()
}

fn jacobi_residual(x: &Element, y: &Element, z: &Element) -> Element {
    let t1 = x.bracket(y).unwrap().bracket(z).unwrap();
    let t2 = y.bracket(z).unwrap().bracket(x).unwrap();
    let t3 = z.bracket(x).unwrap().bracket(y).unwrap();
    t1.add(&t2).unwrap().add(&t3).unwrap()
}
