use serde::Serialize;

use super::{compute_domain, Domain, DomainTable};
use crate::error::{Error, Result};
use crate::lyndon::LyndonFactorization;
use crate::text::Span;

/// One element of a canonical decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CanonicalPart {
    /// Domains anchored at the root's anchor run, left to right. A single
    /// domain or a p-group.
    Cluster { members: Vec<Domain> },
    /// A domain anchored strictly right of the root's anchor.
    Loose { domain: Domain },
}

/// The canonical subdomains of a non-empty root domain, as a left-to-right
/// sequence of clusters and loose subdomains.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalDecomposition {
    pub root: Domain,
    pub parts: Vec<CanonicalPart>,
}

impl CanonicalDecomposition {
    pub fn clusters(&self) -> impl Iterator<Item = &[Domain]> {
        self.parts.iter().filter_map(|p| match p {
            CanonicalPart::Cluster { members } => Some(members.as_slice()),
            CanonicalPart::Loose { .. } => None,
        })
    }

    pub fn loose(&self) -> impl Iterator<Item = &Domain> {
        self.parts.iter().filter_map(|p| match p {
            CanonicalPart::Loose { domain } => Some(domain),
            CanonicalPart::Cluster { .. } => None,
        })
    }

    /// Cluster sizes `l_1, ..., l_p`, left to right.
    pub fn cluster_sizes(&self) -> Vec<usize> {
        self.clusters().map(<[Domain]>::len).collect()
    }

    /// Number of loose subdomains.
    pub fn t(&self) -> usize {
        self.loose().count()
    }

    /// Size of the leftmost cluster, the one holding a domain of `F_j`.
    pub fn leftmost_cluster_size(&self) -> usize {
        match self.parts.first() {
            Some(CanonicalPart::Cluster { members }) => members.len(),
            _ => 0,
        }
    }

    /// `F_j ... F_{j+l-1}` followed by the extended domain of every loose
    /// subdomain, left to right. Concatenated, these should give the root's
    /// extended domain. Without loose subdomains the single cluster covers it alone.
    pub fn extdom_tiling(&self, lf: &LyndonFactorization) -> Vec<Span> {
        if self.t() == 0 {
            return vec![self.root.extended()];
        }
        let j = self.root.j;
        let mut out = vec![lf.runs_span(j, j + self.leftmost_cluster_size() - 1)];
        out.extend(self.loose().map(Domain::extended));
        out
    }
}

fn decompose(root: &Domain, mut lookup: impl FnMut(usize, usize) -> Result<Domain>) -> Result<CanonicalDecomposition> {
    if root.is_empty() {
        return Err(Error::EmptyDomain);
    }
    let j = root.j;
    let mut parts = Vec::new();
    let mut cluster = vec![*root];
    let mut delta = root.d;
    let mut t = root.i - 1;
    while t >= j {
        let dom = lookup(t, delta + 1)?;
        if dom.j == j {
            cluster.push(dom);
            delta += 1;
            t -= 1;
            continue;
        }
        if dom.j < j || dom.j > t {
            return Err(Error::DecompositionInvariant(format!(
                "dom_{}(F_{}) anchored at F_{} outside F_{}..F_{}",
                dom.d, dom.i, dom.j, j, t
            )));
        }
        if !cluster.is_empty() {
            cluster.reverse();
            parts.push(CanonicalPart::Cluster {
                members: std::mem::take(&mut cluster),
            });
        }
        parts.push(CanonicalPart::Loose { domain: dom });
        delta = 0;
        t = dom.j - 1;
    }
    if !cluster.is_empty() {
        cluster.reverse();
        parts.push(CanonicalPart::Cluster { members: cluster });
    }
    parts.reverse();
    Ok(CanonicalDecomposition { root: *root, parts })
}

/// Right-to-left greedy scan over `F_{i-1}, ..., F_j`: extend the current
/// cluster while `dom_{δ+1}(F_t)` is anchored at `F_j`, otherwise record a
/// loose subdomain and jump past it.
pub fn canonical_decomposition(lf: &LyndonFactorization, dom: &Domain) -> Result<CanonicalDecomposition> {
    decompose(dom, |i, d| compute_domain(lf, i, d))
}

impl DomainTable {
    pub fn canonical_decomposition(&self, dom: &Domain) -> Result<CanonicalDecomposition> {
        decompose(dom, |i, d| {
            self.get(i, d).copied().ok_or(Error::OrderExceedsFactorization {
                run: i,
                order: d,
                needed: i + d - 1,
                m: self.m(),
            })
        })
    }
}
