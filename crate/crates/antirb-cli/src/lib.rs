//! Document schema and report rendering for the `antirb` command line.
//!
//! Operators come in as UTF-8 JSON documents with every scalar written in
//! the exact text grammar (never JSON numbers); reports go out the same
//! way. Report bodies are byte-stable for fixed inputs: canonical field
//! order, canonical violation order, and no timestamps.

pub mod doc;
pub mod render;

pub use doc::{parse_operator_document, DocError, OperatorDocument};
pub use render::{
    BridgeDoc, CandidateDoc, FamilySamplesDoc, FamilyVerdictDoc, GridDoc, GridHitDoc,
    IndexValueDoc, ParamDoc, ReportDocument, TermDoc, ViolationDoc,
};
