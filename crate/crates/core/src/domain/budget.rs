use serde::Serialize;

use super::CanonicalDecomposition;
use crate::error::{Error, Result};

/// Phrase-boundary accounting for one extended domain.
///
/// With `t >= 1` loose subdomains of sizes `k_h` and orders `d_h`, the
/// extended domain of a size-`k` root holds at least
/// `1 + Σ(⌈k_h/2⌉ + 1) + S` boundaries, where `S` counts those contributed by
/// clusters. With `t = 0` the root's decomposition is one `(k+1)`-group and
/// `S = k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryBudget {
    pub k: usize,
    /// Size of the leftmost cluster.
    pub ell: usize,
    pub d: usize,
    pub d_h: Vec<usize>,
    pub k_h: Vec<usize>,
    pub t: usize,
    /// Boundaries contributed by clusters, `Σ (l_h - 1)`.
    pub s: usize,
    /// `Σ (⌈k_h/2⌉ + 1)`.
    pub loose_total: usize,
    /// `1 + loose_total + s`.
    pub total: usize,
    /// `⌈k/2⌉ + 1`.
    pub lower_bound: usize,
}

fn inconsistent(msg: String) -> Error {
    Error::BudgetInconsistency(msg)
}

/// Fills the budget from a decomposition and checks the size and cluster
/// identities against the direct counts.
pub fn boundary_budget(cd: &CanonicalDecomposition) -> Result<BoundaryBudget> {
    let k = cd.root.size();
    let d = cd.root.d;
    let ell = cd.leftmost_cluster_size();
    let d_h: Vec<usize> = cd.loose().map(|l| l.d).collect();
    let k_h: Vec<usize> = cd.loose().map(|l| l.size()).collect();
    let t = d_h.len();
    let s: usize = cd.cluster_sizes().iter().map(|l| l - 1).sum();
    let loose_total: usize = k_h.iter().map(|&kh| kh.div_ceil(2) + 1).sum();
    let lower_bound = k.div_ceil(2) + 1;

    if ell == 0 {
        return Err(inconsistent("decomposition does not start with a cluster".into()));
    }
    if t == 0 {
        if ell != k + 1 || s != k {
            return Err(inconsistent(format!(
                "single cluster of size {ell} for a root of size {k}"
            )));
        }
    } else {
        let (k, d, ell) = (k as i64, d as i64, ell as i64);
        let sum_d: i64 = d_h.iter().map(|&x| x as i64).sum();
        let sum_k: i64 = k_h.iter().map(|&x| x as i64).sum();
        let expected_k = k - ell - sum_d + d;
        if sum_k != expected_k {
            return Err(inconsistent(format!(
                "Σk_h = {sum_k}, size identity gives {expected_k}"
            )));
        }
        let big: i64 = d_h[..t - 1].iter().filter(|&&x| x > 1).count() as i64;
        let expected_s = ell - 1 + sum_d - t as i64 - d - big;
        if s as i64 != expected_s {
            return Err(inconsistent(format!(
                "S = {s} from clusters, identity gives {expected_s}"
            )));
        }
    }
    let total = 1 + loose_total + s;
    if total < lower_bound {
        return Err(inconsistent(format!("total {total} below ⌈k/2⌉ + 1 = {lower_bound}")));
    }
    Ok(BoundaryBudget {
        k,
        ell,
        d,
        d_h,
        k_h,
        t,
        s,
        loose_total,
        total,
        lower_bound,
    })
}
