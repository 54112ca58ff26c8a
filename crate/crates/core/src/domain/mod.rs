//! Domains of Lyndon runs and the structures built on them.
//!
//! For a run `F_i` and an order `d`, the leftmost occurrence of
//! `F_i ... F_{i+d-1}` either is the trivial one or starts exactly at some
//! earlier run `F_j`. The runs `F_j ... F_{i-1}` form the d-domain of `F_i`.
//! Tandem domains, p-groups and canonical subdomain decompositions are all
//! phrased in terms of these anchors.

mod budget;
mod canonical;
mod groups;
mod tandem;
mod verify;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lyndon::LyndonFactorization;
use crate::text::{leftmost_occurrence_from, Span};

pub use budget::{boundary_budget, BoundaryBudget};
pub use canonical::{canonical_decomposition, CanonicalDecomposition, CanonicalPart};
pub use groups::{find_p_groups, PGroup};
pub use tandem::{find_tandem_domains, TandemDomain};
pub use verify::{verify_lemmas, CheckOutcome, LemmaReport};

/// `dom_d(F_i) = F_j ... F_{i-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Domain {
    /// Run index, 1-based.
    pub i: usize,
    /// Order.
    pub d: usize,
    /// Anchor run; `j == i` for an empty domain.
    pub j: usize,
    /// `F_j ... F_{i-1}`, or an empty span anchored at the start of `F_i`.
    pub span: Span,
    /// Leftmost occurrence of `F_i ... F_{i+d-1}`.
    pub associated: Span,
}

impl Domain {
    /// `i - j`.
    pub fn size(&self) -> usize {
        self.i - self.j
    }

    pub fn is_empty(&self) -> bool {
        self.j == self.i
    }

    /// Span of `dom_d(F_i) F_i ... F_{i+d-1}`.
    pub fn extended(&self) -> Span {
        Span::new(self.span.start(), self.span.end() + self.associated.len())
    }

    /// Index one past the last run covered by the extended domain.
    pub(crate) fn ext_end_run(&self) -> usize {
        self.i + self.d
    }
}

/// Extended d-domain `dom_d(F_i) F_i ... F_{i+d-1}`.
pub fn extended_domain(dom: &Domain) -> Span {
    dom.extended()
}

fn check_order(lf: &LyndonFactorization, i: usize, d: usize) -> Result<()> {
    if i == 0 || d == 0 || i + d - 1 > lf.m() {
        return Err(Error::OrderExceedsFactorization {
            run: i,
            order: d,
            needed: i + d.max(1) - 1,
            m: lf.m(),
        });
    }
    Ok(())
}

fn locate(lf: &LyndonFactorization, i: usize, d: usize, search_from: usize) -> Result<Domain> {
    let pattern = lf.runs_bytes(i, i + d - 1);
    let trivial = lf.run(i).span.start();
    let pos = leftmost_occurrence_from(lf.text().as_bytes(), pattern, search_from)?
        .expect("the trivial occurrence always exists");
    let associated = Span::with_len(pos, pattern.len());
    if pos == trivial {
        return Ok(Domain {
            i,
            d,
            j: i,
            span: Span::empty(trivial),
            associated,
        });
    }
    let j = lf
        .run_starting_at(pos)
        .filter(|&j| j < i)
        .ok_or(Error::UnanchoredOccurrence {
            run: i,
            last: i + d - 1,
            position: pos,
        })?;
    Ok(Domain {
        i,
        d,
        j,
        span: lf.runs_span(j, i - 1),
        associated,
    })
}

/// `dom_d(F_i)`, found by a leftmost-occurrence scan over the whole text.
pub fn compute_domain(lf: &LyndonFactorization, i: usize, d: usize) -> Result<Domain> {
    check_order(lf, i, d)?;
    locate(lf, i, d, 1)
}

/// Every domain of the factorization, keyed by `(i, d)`.
#[derive(Debug, Clone)]
pub struct DomainTable {
    m: usize,
    // rows[i - 1][d - 1]
    rows: Vec<Vec<Domain>>,
}

impl DomainTable {
    pub fn build(lf: &LyndonFactorization) -> Result<Self> {
        let m = lf.m();
        let mut rows = Vec::with_capacity(m);
        for i in 1..=m {
            let mut row = Vec::with_capacity(m - i + 1);
            // a longer pattern cannot occur earlier than its own prefix
            let mut from = 1;
            for d in 1..=m - i + 1 {
                let dom = locate(lf, i, d, from)?;
                from = dom.associated.start();
                row.push(dom);
            }
            rows.push(row);
        }
        Ok(DomainTable { m, rows })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `dom_d(F_i)`; `None` when `i + d - 1 > m`.
    pub fn get(&self, i: usize, d: usize) -> Option<&Domain> {
        if i == 0 || d == 0 {
            return None;
        }
        self.rows.get(i - 1)?.get(d - 1)
    }

    /// All domains, ascending by `i`, then `d`.
    pub fn iter(&self) -> impl Iterator<Item = &Domain> {
        self.rows.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }
}

/// Every `dom_d(F_i)` with `i + d - 1 <= m`, ordered by `i`, then `d`.
pub fn all_domains(lf: &LyndonFactorization) -> Result<Vec<Domain>> {
    Ok(DomainTable::build(lf)?.iter().copied().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lyndon::lyndon_factorize;
    use crate::text::Text;

    const SAMPLE: &str = "abbabbababbababbbababbaba";

    fn sample() -> LyndonFactorization {
        lyndon_factorize(&Text::from(SAMPLE))
    }

    #[test]
    fn sample_domains() {
        let lf = sample();
        let d = compute_domain(&lf, 4, 2).unwrap();
        assert_eq!((d.j, d.span, d.associated), (2, Span::new(7, 22), Span::new(7, 9)));
        assert_eq!(extended_domain(&d), Span::new(7, 25));

        let d = compute_domain(&lf, 2, 1).unwrap();
        assert!(d.is_empty());
        assert_eq!(d.associated, Span::new(7, 17));
        assert_eq!(extended_domain(&d), Span::new(7, 17));

        let d = compute_domain(&lf, 2, 2).unwrap();
        assert!(d.is_empty());
        assert_eq!(d.associated, Span::new(7, 22));

        let d = compute_domain(&lf, 3, 3).unwrap();
        assert_eq!((d.j, d.span), (2, Span::new(7, 17)));
        assert_eq!(extended_domain(&d), Span::new(7, 25));
        assert_eq!(d.size(), 1);
    }

    #[test]
    fn order_out_of_range() {
        let lf = sample();
        assert!(matches!(
            compute_domain(&lf, 4, 3),
            Err(Error::OrderExceedsFactorization { .. })
        ));
        assert!(compute_domain(&lf, 1, 0).is_err());
        assert!(compute_domain(&lf, 5, 1).is_ok());
    }

    #[test]
    fn sample_non_empty_domains() {
        let lf = sample();
        let mut non_empty: Vec<(usize, usize, usize)> = all_domains(&lf)
            .unwrap()
            .into_iter()
            .filter(|d| !d.is_empty())
            .map(|d| (d.i, d.d, d.j))
            .collect();
        non_empty.sort();
        assert_eq!(
            non_empty,
            vec![(3, 1, 2), (3, 2, 2), (3, 3, 2), (4, 1, 1), (4, 2, 2), (5, 1, 1)]
        );
    }

    #[test]
    fn single_run() {
        let lf = lyndon_factorize(&Text::from("ab"));
        let all = all_domains(&lf).unwrap();
        assert_eq!(all.len(), 1);
        assert!(all[0].is_empty());
        assert!(all_domains(&lyndon_factorize(&Text::default())).unwrap().is_empty());
    }

    #[test]
    fn table_matches_direct_computation() {
        let lf = lyndon_factorize(&Text::from("babaababaabaaababaaabaabaaaba"));
        let table = DomainTable::build(&lf).unwrap();
        assert_eq!(table.len(), lf.m() * (lf.m() + 1) / 2);
        for dom in table.iter() {
            assert_eq!(*dom, compute_domain(&lf, dom.i, dom.d).unwrap());
        }
    }
}
