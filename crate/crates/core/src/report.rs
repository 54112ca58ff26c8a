//! Serializable report shared by the command-line front end.
//!
//! Every report carries the same top-level keys; sections a command did not
//! compute are empty. Spans are 1-based and inclusive.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::bounds::{PartitionPart, TheoremReport};
use crate::domain::{BoundaryBudget, CanonicalDecomposition, Domain, LemmaReport, PGroup, TandemDomain};
use crate::lyndon::LyndonFactorization;
use crate::lz::LzFactorization;
use crate::text::{Span, Text};

pub(crate) fn serialize_text<S: Serializer>(t: &Text, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&t.to_string())
}

#[derive(Debug, Clone, Serialize)]
pub struct RunEntry {
    pub index: usize,
    pub span: Span,
    pub factor: Span,
    pub exponent: usize,
    pub factor_text: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PhraseEntry {
    pub index: usize,
    pub span: Span,
    pub text: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct BudgetEntry {
    pub run: usize,
    pub order: usize,
    pub budget: BoundaryBudget,
    /// Phrase starts actually found in the root's extended domain.
    pub boundaries: usize,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Verdict {
    Theorem(TheoremReport),
    Lemmas(LemmaReport),
    Flag(bool),
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub input_len: usize,
    pub input: String,
    pub m: usize,
    pub z: usize,
    pub runs: Vec<RunEntry>,
    pub phrases: Vec<PhraseEntry>,
    pub domains: Vec<Domain>,
    pub tandems: Vec<TandemDomain>,
    pub groups: Vec<PGroup>,
    pub canonical: Option<CanonicalDecomposition>,
    pub partition: Vec<PartitionPart>,
    pub budget: Vec<BudgetEntry>,
    pub verdicts: BTreeMap<String, Verdict>,
}

impl AnalysisReport {
    pub fn new(text: &Text, lf: &LyndonFactorization, lz: &LzFactorization) -> Self {
        let runs = lf
            .runs()
            .iter()
            .enumerate()
            .map(|(i, r)| RunEntry {
                index: i + 1,
                span: r.span,
                factor: r.factor,
                exponent: r.exponent,
                factor_text: Text::from(text.slice(r.factor)).to_string(),
            })
            .collect();
        let phrases = lz
            .phrases()
            .iter()
            .enumerate()
            .map(|(i, &p)| PhraseEntry {
                index: i + 1,
                span: p,
                text: Text::from(text.slice(p)).to_string(),
            })
            .collect();
        AnalysisReport {
            input_len: text.len(),
            input: text.to_string(),
            m: lf.m(),
            z: lz.z(),
            runs,
            phrases,
            domains: Vec::new(),
            tandems: Vec::new(),
            groups: Vec::new(),
            canonical: None,
            partition: Vec::new(),
            budget: Vec::new(),
            verdicts: BTreeMap::new(),
        }
    }
}
