//! Empirical check of every structural statement about domains, tandems,
//! groups and canonical decompositions against the LZ parse of one string.
//!
//! All of these statements hold for every string, so any failure recorded
//! here points at a defect in this crate rather than at the statements.

use std::cmp::Ordering;

use serde::Serialize;

use super::groups::groups_in;
use super::tandem::tandems_in;
use super::{boundary_budget, CanonicalPart, Domain, DomainTable, PGroup, TandemDomain};
use crate::lyndon::{lyndon_factorize, LyndonFactorization};
use crate::lz::{lz_factorize, LzFactorization};
use crate::text::{lex_compare, Text};

pub const FACTOR_EXCEEDS_LATER_RUN: &str = "factor-exceeds-later-run";
pub const LEFTMOST_OCCURRENCE_ANCHORED: &str = "leftmost-occurrence-anchored";
pub const PATTERN_PREFIX_OF_INNER_FACTORS: &str = "pattern-prefix-of-inner-factors";
pub const HIGHER_ORDER_IS_SUFFIX: &str = "higher-order-domain-is-suffix";
pub const INNER_DOMAIN_IS_SUBSTRING: &str = "inner-domain-is-substring";
pub const DOMAIN_LAMINARITY: &str = "domain-laminarity";
pub const DOMAIN_ASSOCIATED_BOUNDARY: &str = "domain-associated-boundary";
pub const TANDEM_STRUCTURE: &str = "tandem-structure";
pub const TANDEM_ASSOCIATED_BOUNDARY: &str = "tandem-associated-boundary";
pub const DISJOINT_TANDEMS_SEPARATE: &str = "disjoint-tandems-separate";
pub const GROUP_TANDEMS_SEPARATE: &str = "group-tandems-separate";
pub const GROUP_CONCATENATION: &str = "group-concatenation";
pub const GROUP_BOUNDARIES: &str = "group-boundaries";
pub const DISJOINT_GROUPS_SEPARATE: &str = "disjoint-groups-separate";
pub const DOMAIN_VS_TANDEM_SEPARATE: &str = "domain-vs-tandem-separate";
pub const CANONICAL_STRUCTURE: &str = "canonical-structure";
pub const BOUNDARY_BUDGET: &str = "boundary-budget";
pub const EXTENDED_DOMAIN_BOUNDARIES: &str = "extended-domain-boundaries";

const CHECK_NAMES: [&str; 18] = [
    FACTOR_EXCEEDS_LATER_RUN,
    LEFTMOST_OCCURRENCE_ANCHORED,
    PATTERN_PREFIX_OF_INNER_FACTORS,
    HIGHER_ORDER_IS_SUFFIX,
    INNER_DOMAIN_IS_SUBSTRING,
    DOMAIN_LAMINARITY,
    DOMAIN_ASSOCIATED_BOUNDARY,
    TANDEM_STRUCTURE,
    TANDEM_ASSOCIATED_BOUNDARY,
    DISJOINT_TANDEMS_SEPARATE,
    GROUP_TANDEMS_SEPARATE,
    GROUP_CONCATENATION,
    GROUP_BOUNDARIES,
    DISJOINT_GROUPS_SEPARATE,
    DOMAIN_VS_TANDEM_SEPARATE,
    CANONICAL_STRUCTURE,
    BOUNDARY_BUDGET,
    EXTENDED_DOMAIN_BOUNDARIES,
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub instances: usize,
    pub failures: usize,
    pub first_counterexample: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub input_len: usize,
    pub m: usize,
    pub z: usize,
    pub checks: Vec<CheckOutcome>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().map(|c| c.failures).sum()
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Adds `other`'s counts into `self`, keeping the first counterexample seen.
    pub fn absorb(&mut self, other: &LemmaReport) {
        for (mine, theirs) in self.checks.iter_mut().zip(&other.checks) {
            debug_assert_eq!(mine.name, theirs.name);
            mine.instances += theirs.instances;
            mine.failures += theirs.failures;
            if mine.first_counterexample.is_none() {
                mine.first_counterexample.clone_from(&theirs.first_counterexample);
            }
        }
    }

    /// A report with every check present and zero instances.
    pub fn empty() -> Self {
        LemmaReport {
            input_len: 0,
            m: 0,
            z: 0,
            checks: CHECK_NAMES
                .iter()
                .map(|&name| CheckOutcome {
                    name,
                    instances: 0,
                    failures: 0,
                    first_counterexample: None,
                })
                .collect(),
        }
    }
}

struct Recorder {
    report: LemmaReport,
    context: String,
}

impl Recorder {
    fn record(&mut self, name: &'static str, ok: bool, witness: impl FnOnce() -> String) {
        let check = self
            .report
            .checks
            .iter_mut()
            .find(|c| c.name == name)
            .expect("registered check");
        check.instances += 1;
        if !ok {
            check.failures += 1;
            if check.first_counterexample.is_none() {
                check.first_counterexample = Some(format!("{}: {}", self.context, witness()));
            }
        }
    }
}

fn describe(dom: &Domain) -> String {
    format!("dom_{}(F_{}) = F_{}..F_{}", dom.d, dom.i, dom.j, dom.i - 1)
}

fn is_subdomain(sub: &Domain, root: &Domain) -> bool {
    (sub.i == root.i && sub.d == root.d)
        || (root.j <= sub.i && sub.i < root.i && sub.ext_end_run() <= root.ext_end_run())
}

/// Runs every structural check over all domains, tandem domains, groups and
/// canonical decompositions of `s`.
pub fn verify_lemmas(s: &Text) -> LemmaReport {
    let lf = lyndon_factorize(s);
    let lz = lz_factorize(s);
    let mut rec = Recorder {
        report: LemmaReport {
            input_len: s.len(),
            m: lf.m(),
            z: lz.z(),
            ..LemmaReport::empty()
        },
        context: s.to_string(),
    };

    check_factor_order(&lf, &mut rec);
    let table = match DomainTable::build(&lf) {
        Ok(table) => table,
        Err(e) => {
            rec.record(LEFTMOST_OCCURRENCE_ANCHORED, false, || e.to_string());
            return rec.report;
        }
    };
    check_domains(&lf, &lz, &table, &mut rec);
    let tandems = tandems_in(&lf, &table);
    check_tandems(&lf, &lz, &tandems, &mut rec);
    check_groups(&lf, &lz, &table, &mut rec);
    check_domain_vs_tandem(&table, &tandems, &mut rec);
    check_canonical(&lf, &lz, &table, &mut rec);
    rec.report
}

fn check_factor_order(lf: &LyndonFactorization, rec: &mut Recorder) {
    for i in 1..=lf.m() {
        for j in 1..i {
            let ok = lex_compare(lf.factor_bytes(j), lf.run_bytes(i)) == Ordering::Greater;
            rec.record(FACTOR_EXCEEDS_LATER_RUN, ok, || format!("f_{j} vs F_{i}"));
        }
    }
}

fn check_domains(lf: &LyndonFactorization, lz: &LzFactorization, table: &DomainTable, rec: &mut Recorder) {
    let m = lf.m();
    for dom in table.iter() {
        let pattern = lf.runs_bytes(dom.i, dom.i + dom.d - 1);
        let anchored = if dom.is_empty() {
            dom.associated.start() == lf.run(dom.i).span.start()
        } else {
            dom.associated.start() == lf.run(dom.j).span.start() && lf.factor_bytes(dom.j).starts_with(pattern)
        };
        rec.record(LEFTMOST_OCCURRENCE_ANCHORED, anchored, || describe(dom));

        for t in dom.j + 1..dom.i {
            let ok = lf.factor_bytes(t).starts_with(pattern);
            rec.record(PATTERN_PREFIX_OF_INNER_FACTORS, ok, || {
                format!("{} vs f_{t}", describe(dom))
            });
        }

        for d2 in dom.d + 1..=m - dom.i + 1 {
            let other = table.get(dom.i, d2).expect("in range");
            let ok = other.span.end() == dom.span.end() && other.span.start() >= dom.span.start();
            rec.record(HIGHER_ORDER_IS_SUFFIX, ok, || {
                format!("{} vs {}", describe(dom), describe(other))
            });
        }

        for k in dom.j..dom.i {
            for d2 in 1..=m - k + 1 {
                let other = table.get(k, d2).expect("in range");
                let ok = dom.span.contains_span(other.span);
                rec.record(INNER_DOMAIN_IS_SUBSTRING, ok, || {
                    format!("{} vs {}", describe(dom), describe(other))
                });
            }
        }

        rec.record(
            DOMAIN_ASSOCIATED_BOUNDARY,
            lz.count_boundaries(dom.associated) >= 1,
            || format!("{} associated {}", describe(dom), dom.associated),
        );

        let have = lz.count_boundaries(dom.extended());
        let need = dom.size().div_ceil(2) + 1;
        rec.record(EXTENDED_DOMAIN_BOUNDARIES, have >= need, || {
            format!("{} extended {} has {have} < {need}", describe(dom), dom.extended())
        });
    }

    let mut spans: Vec<_> = table.iter().filter(|d| !d.is_empty()).map(|d| d.span).collect();
    spans.sort();
    spans.dedup();
    for (a, x) in spans.iter().enumerate() {
        for y in &spans[a + 1..] {
            let ok = !x.overlaps(*y) || x.contains_span(*y) || y.contains_span(*x);
            rec.record(DOMAIN_LAMINARITY, ok, || format!("{x} crosses {y}"));
        }
    }
}

fn check_tandems(lf: &LyndonFactorization, lz: &LzFactorization, tandems: &[TandemDomain], rec: &mut Recorder) {
    for td in tandems {
        let head = lf.runs_bytes(td.i + 1, td.i + td.d);
        let ok = lf.run_bytes(td.i).starts_with(head)
            && td.associated.len() == lf.run(td.i).span.len()
            && td.inner.extended().contains_span(td.associated);
        rec.record(TANDEM_STRUCTURE, ok, || format!("tandem ({}, {})", td.i, td.d));
        rec.record(
            TANDEM_ASSOCIATED_BOUNDARY,
            lz.count_boundaries(td.associated) >= 1,
            || format!("tandem ({}, {}) associated {}", td.i, td.d, td.associated),
        );
    }
    for (a, x) in tandems.iter().enumerate() {
        for y in &tandems[a + 1..] {
            if x.i + 1 < y.i || y.i + 1 < x.i {
                rec.record(DISJOINT_TANDEMS_SEPARATE, !x.associated.overlaps(y.associated), || {
                    format!("tandems ({}, {}) and ({}, {})", x.i, x.d, y.i, y.d)
                });
            }
        }
    }
}

fn check_groups(lf: &LyndonFactorization, lz: &LzFactorization, table: &DomainTable, rec: &mut Recorder) {
    let mut all: Vec<PGroup> = Vec::new();
    for group in groups_in(lf, table) {
        all.extend(group.subgroups(lf, table));
    }
    for g in &all {
        let label = || format!("{}-group at F_{} base order {}", g.p, g.i, g.d);
        let tandem_spans: Vec<_> = g
            .tandem_keys()
            .map(|(i, d)| {
                let inner = table.get(i, d + 1).expect("in range");
                super::tandem::trailing_span(lf, inner.associated, i + 1, i + d)
            })
            .collect();
        for (a, x) in tandem_spans.iter().enumerate() {
            for y in &tandem_spans[a + 1..] {
                rec.record(GROUP_TANDEMS_SEPARATE, !x.overlaps(*y), || {
                    format!("{}: {x} vs {y}", label())
                });
            }
        }
        let joined = tandem_spans
            .iter()
            .rev()
            .skip(1)
            .try_fold(*tandem_spans.last().expect("p >= 2"), |acc, s| acc.join(*s));
        rec.record(GROUP_CONCATENATION, joined == Some(g.associated), || {
            format!("{}: {:?} vs {}", label(), tandem_spans, g.associated)
        });
        rec.record(GROUP_BOUNDARIES, lz.count_boundaries(g.associated) + 1 >= g.p, || {
            format!("{}: associated {}", label(), g.associated)
        });
    }
    for (a, x) in all.iter().enumerate() {
        for y in &all[a + 1..] {
            if x.last_run() < y.i || y.last_run() < x.i {
                rec.record(DISJOINT_GROUPS_SEPARATE, !x.associated.overlaps(y.associated), || {
                    format!("groups at F_{} (p={}) and F_{} (p={})", x.i, x.p, y.i, y.p)
                });
            }
        }
    }
}

fn check_domain_vs_tandem(table: &DomainTable, tandems: &[TandemDomain], rec: &mut Recorder) {
    for dom in table.iter() {
        for td in tandems {
            if is_subdomain(&td.inner, dom) && is_subdomain(&td.outer, dom) {
                rec.record(
                    DOMAIN_VS_TANDEM_SEPARATE,
                    !td.associated.overlaps(dom.associated),
                    || format!("{} vs tandem ({}, {})", describe(dom), td.i, td.d),
                );
            }
        }
    }
}

fn check_canonical(lf: &LyndonFactorization, lz: &LzFactorization, table: &DomainTable, rec: &mut Recorder) {
    for root in table.iter().filter(|d| !d.is_empty()) {
        let cd = match table.canonical_decomposition(root) {
            Ok(cd) => cd,
            Err(e) => {
                rec.record(CANONICAL_STRUCTURE, false, || format!("{}: {e}", describe(root)));
                continue;
            }
        };
        let tiling = cd.extdom_tiling(lf);
        let tiles = tiling.iter().skip(1).try_fold(tiling[0], |acc, s| acc.join(*s)) == Some(root.extended());
        let contained = cd.parts.iter().all(|p| match p {
            CanonicalPart::Cluster { members } => members
                .iter()
                .all(|d| root.extended().contains_span(d.extended()) && d.j == root.j && is_subdomain(d, root)),
            CanonicalPart::Loose { domain } => {
                root.extended().contains_span(domain.extended()) && domain.j > root.j && is_subdomain(domain, root)
            }
        });
        let no_adjacent_clusters = cd
            .parts
            .windows(2)
            .all(|w| !matches!(w, [CanonicalPart::Cluster { .. }, CanonicalPart::Cluster { .. }]));
        let closes_at_anchor = matches!(
            cd.parts.first(),
            Some(CanonicalPart::Cluster { members }) if members[0].i == root.j
        );
        let root_last = matches!(
            cd.parts.last(),
            Some(CanonicalPart::Cluster { members }) if members.last() == Some(root)
        );
        rec.record(
            CANONICAL_STRUCTURE,
            tiles && contained && no_adjacent_clusters && closes_at_anchor && root_last,
            || {
                format!(
                    "{}: tiles={tiles} contained={contained} alternating={no_adjacent_clusters} anchored={closes_at_anchor} root_last={root_last}",
                    describe(root)
                )
            },
        );

        match boundary_budget(&cd) {
            Ok(budget) => {
                let have = lz.count_boundaries(root.extended());
                rec.record(BOUNDARY_BUDGET, have >= budget.total, || {
                    format!("{}: {have} boundaries < budget {}", describe(root), budget.total)
                });
            }
            Err(e) => rec.record(BOUNDARY_BUDGET, false, || format!("{}: {e}", describe(root))),
        }
    }
}
