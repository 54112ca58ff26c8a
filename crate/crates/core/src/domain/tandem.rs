use serde::Serialize;

use super::{Domain, DomainTable};
use crate::error::Result;
use crate::lyndon::LyndonFactorization;
use crate::text::Span;

/// A pair `dom_{d+1}(F_i)`, `dom_d(F_{i+1})` sharing one extended domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TandemDomain {
    pub i: usize,
    pub d: usize,
    /// `dom_{d+1}(F_i)`, possibly empty.
    pub inner: Domain,
    /// `dom_d(F_{i+1})`.
    pub outer: Domain,
    /// The occurrence of `x F_{i+1} ... F_{i+d}` closing the leftmost
    /// occurrence of `F_i ... F_{i+d}`, where `F_i = F_{i+1} ... F_{i+d} x`.
    pub associated: Span,
}

impl TandemDomain {
    pub fn extended(&self) -> Span {
        self.outer.extended()
    }
}

/// Associated span of `F_i ... F_last` read as `F_{split} ... F_last x F_{i+1} ... F_last`:
/// everything after the leading copy of `F_split ... F_last`.
pub(crate) fn trailing_span(lf: &LyndonFactorization, occurrence: Span, split: usize, last: usize) -> Span {
    let lead = lf.runs_span(split, last).len();
    Span::with_len(occurrence.start() + lead, occurrence.len().saturating_sub(lead))
}

pub(crate) fn tandems_in(lf: &LyndonFactorization, table: &DomainTable) -> Vec<TandemDomain> {
    let m = lf.m();
    let mut out = Vec::new();
    for i in 1..m {
        for d in 1..=m - i {
            let inner = *table.get(i, d + 1).expect("i + d <= m");
            let outer = *table.get(i + 1, d).expect("i + d <= m");
            if inner.extended() != outer.extended() {
                continue;
            }
            out.push(TandemDomain {
                i,
                d,
                inner,
                outer,
                associated: trailing_span(lf, inner.associated, i + 1, i + d),
            });
        }
    }
    out
}

/// All tandem domains, ascending by `i`, then `d`. Empty inner domains are included.
pub fn find_tandem_domains(lf: &LyndonFactorization) -> Result<Vec<TandemDomain>> {
    Ok(tandems_in(lf, &DomainTable::build(lf)?))
}
