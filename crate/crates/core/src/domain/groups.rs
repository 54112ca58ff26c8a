use serde::Serialize;

use super::tandem::trailing_span;
use super::{Domain, DomainTable};
use crate::error::Result;
use crate::lyndon::LyndonFactorization;
use crate::text::Span;

/// `dom_{d+p-1}(F_i), dom_{d+p-2}(F_{i+1}), ..., dom_d(F_{i+p-1})` with one
/// shared extended domain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PGroup {
    pub i: usize,
    pub p: usize,
    pub d: usize,
    /// Left to right: `members[t] = dom_{d+p-1-t}(F_{i+t})`.
    pub members: Vec<Domain>,
    /// `x F_{i+1} ... F_{i+p+d-2}` inside the leftmost occurrence of `F_i ... F_{i+p+d-2}`.
    pub associated: Span,
}

impl PGroup {
    pub(crate) fn from_table(lf: &LyndonFactorization, table: &DomainTable, i: usize, p: usize, d: usize) -> Self {
        let members: Vec<Domain> = (0..p)
            .map(|t| *table.get(i + t, d + p - 1 - t).expect("group within factorization"))
            .collect();
        let last = i + p + d - 2;
        let associated = trailing_span(lf, members[0].associated, i + p - 1, last);
        PGroup {
            i,
            p,
            d,
            members,
            associated,
        }
    }

    pub fn extended(&self) -> Span {
        self.members[0].extended()
    }

    /// Index of the last run of the group, `i + p - 1`.
    pub fn last_run(&self) -> usize {
        self.i + self.p - 1
    }

    /// `(i, d)` of each tandem domain in the group, left to right.
    pub fn tandem_keys(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.p - 1).map(move |t| (self.i + t, self.d + self.p - 2 - t))
    }

    /// Every contiguous sub-group with at least two members.
    pub fn subgroups(&self, lf: &LyndonFactorization, table: &DomainTable) -> Vec<PGroup> {
        let mut out = Vec::new();
        for a in 0..self.p {
            for b in a + 2..=self.p {
                // members a..b: first run i+a, base order d + (p - b)
                out.push(PGroup::from_table(lf, table, self.i + a, b - a, self.d + self.p - b));
            }
        }
        out
    }
}

/// Consecutive domains `(i, e)` and `(i + 1, e - 1)` form a tandem.
fn linked(table: &DomainTable, i: usize, e: usize) -> bool {
    e >= 2
        && i < table.m()
        && matches!(
            (table.get(i, e), table.get(i + 1, e - 1)),
            (Some(a), Some(b)) if a.extended() == b.extended()
        )
}

pub(crate) fn groups_in(lf: &LyndonFactorization, table: &DomainTable) -> Vec<PGroup> {
    let m = lf.m();
    let mut out = Vec::new();
    for i in 1..=m {
        for e in 2..=m - i + 1 {
            if !linked(table, i, e) || (i > 1 && linked(table, i - 1, e + 1)) {
                continue;
            }
            let mut p = 2;
            while linked(table, i + p - 1, e + 1 - p) {
                p += 1;
            }
            out.push(PGroup::from_table(lf, table, i, p, e + 1 - p));
        }
    }
    out
}

/// Every p-group that cannot be extended on either side, ascending by first run.
pub fn find_p_groups(lf: &LyndonFactorization) -> Result<Vec<PGroup>> {
    Ok(groups_in(lf, &DomainTable::build(lf)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lyndon::lyndon_factorize;
    use crate::text::Text;

    #[test]
    fn single_run_has_none() {
        let lf = lyndon_factorize(&Text::from("aab"));
        assert!(find_p_groups(&lf).unwrap().is_empty());
    }

    #[test]
    fn sample_group() {
        let lf = lyndon_factorize(&Text::from("abbabbababbababbbababbaba"));
        let groups = find_p_groups(&lf).unwrap();
        // dom_4(F_2) = ε, dom_3(F_3) = F_2, dom_2(F_4) = F_2 F_3
        let g = groups.iter().find(|g| g.i == 2 && g.p == 3).expect("3-group at F_2");
        assert_eq!((g.p, g.d), (3, 2));
        assert!(g.members[0].is_empty());
        assert_eq!(g.extended(), Span::new(7, 25));
        for g in &groups {
            let ext = g.extended();
            assert!(g.members.iter().all(|m| m.extended() == ext));
        }
    }

    // runs u v w x y with w x y a prefix of u and v, so dom_3(w) = u v,
    // dom_2(x) = u v w, dom_1(y) = u v w x
    const THREE_GROUP: &str = "abacabadabacabaccabacaba";
    // runs u v w x y with v w x y a prefix of u: dom_5(u) = ε, dom_4(v) = u, ...
    const EMPTY_LEFTMOST: &str = "abacabadabacabaeabacabadabacaba";

    #[test]
    fn three_group_with_anchored_members() {
        let lf = lyndon_factorize(&Text::from(THREE_GROUP));
        assert_eq!(lf.m(), 5);
        let groups = find_p_groups(&lf).unwrap();
        assert!(groups.iter().all(|g| g.p <= 3));
        let g = groups.iter().find(|g| g.p == 3).expect("3-group");
        assert_eq!((g.i, g.d), (3, 1));
        let shape: Vec<(usize, usize, usize)> = g.members.iter().map(|m| (m.i, m.d, m.j)).collect();
        assert_eq!(shape, vec![(3, 3, 1), (4, 2, 1), (5, 1, 1)]);
    }

    #[test]
    fn four_group_with_empty_leftmost_domain() {
        let lf = lyndon_factorize(&Text::from(EMPTY_LEFTMOST));
        assert_eq!(lf.m(), 5);
        let table = DomainTable::build(&lf).unwrap();
        let groups = groups_in(&lf, &table);
        // dom_1(y) is anchored at u as well, so the maximal group has five members
        let g = groups.iter().max_by_key(|g| g.p).expect("group at u");
        assert_eq!(g.i, 1);
        assert_eq!((g.p, g.d), (5, 1));
        let four = g
            .subgroups(&lf, &table)
            .into_iter()
            .find(|s| s.i == 1 && s.p == 4)
            .expect("4-group");
        assert_eq!(four.d, 2);
        let shape: Vec<(usize, usize, usize)> = four.members.iter().map(|m| (m.i, m.d, m.j)).collect();
        assert_eq!(shape, vec![(1, 5, 1), (2, 4, 1), (3, 3, 1), (4, 2, 1)]);
        assert!(four.members[0].is_empty());
    }
}
