//! Index sets and k-strict partitions for even and odd symplectic Grassmannians.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Jump sequence `p_1 < ... < p_m` in `[1, N]` of a Schubert cell of `IG(m, N)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexSet {
    pub n_ambient: usize,
    pub p: Vec<usize>,
}

/// Weakly decreasing parts; in the odd case the last part may be `-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KStrictPartition {
    pub k: i64,
    pub parts: Vec<i64>,
}

/// `n` with `N = 2n` or `N = 2n + 1`.
fn half(n_ambient: usize) -> usize {
    n_ambient / 2
}

pub fn parity_of(n_ambient: usize) -> Parity {
    if n_ambient.is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Forbidden pair sum: `N + 1` for `N = 2n`, `2n + 3` for `N = 2n + 1`.
pub fn forbidden_sum(n_ambient: usize) -> usize {
    match parity_of(n_ambient) {
        Parity::Even => n_ambient + 1,
        Parity::Odd => n_ambient + 2,
    }
}

fn check_params(m: usize, n_ambient: usize) -> Result<()> {
    let n = half(n_ambient);
    let max_m = match parity_of(n_ambient) {
        Parity::Even => n,
        Parity::Odd => n + 1,
    };
    if m == 0 || n_ambient < 2 || m > max_m {
        return Err(Error::InvalidParameters(format!("IG({m}, {n_ambient}) needs 1 <= m <= {max_m}")));
    }
    Ok(())
}

impl IndexSet {
    pub fn new(n_ambient: usize, p: Vec<usize>) -> Result<Self> {
        check_params(p.len(), n_ambient)?;
        let s = forbidden_sum(n_ambient);
        let increasing = p.windows(2).all(|w| w[0] < w[1]);
        let in_range = p.iter().all(|&x| (1..=n_ambient).contains(&x));
        let isotropic = p.iter().all(|&a| p.iter().all(|&b| a + b != s));
        if !(increasing && in_range && isotropic) {
            return Err(Error::InvalidInput(format!("{p:?} is not an index set for N = {n_ambient}")));
        }
        Ok(IndexSet { n_ambient, p })
    }

    pub fn m(&self) -> usize {
        self.p.len()
    }

    pub fn parity(&self) -> Parity {
        parity_of(self.n_ambient)
    }
}

/// All index sets of `IG(m, N)` in lexicographic order. The parity of `N`
/// selects the forbidden sum.
pub fn enumerate_index_sets(m: usize, n_ambient: usize) -> Result<Vec<IndexSet>> {
    check_params(m, n_ambient)?;
    let s = forbidden_sum(n_ambient);
    let mut out = vec![];
    let mut cur = vec![];
    fn rec(start: usize, m: usize, n: usize, s: usize, cur: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
        if cur.len() == m {
            out.push(IndexSet { n_ambient: n, p: cur.clone() });
            return;
        }
        for x in start..=n {
            if 2 * x == s || cur.iter().any(|&a| a + x == s) {
                continue;
            }
            cur.push(x);
            rec(x + 1, m, n, s, cur, out);
            cur.pop();
        }
    }
    rec(1, m, n_ambient, s, &mut cur, &mut out);
    Ok(out)
}

/// Brute-force count of index sets by filtering all m-subsets.
pub fn count_index_sets_brute_force(m: usize, n_ambient: usize) -> usize {
    let s = forbidden_sum(n_ambient);
    let mut count = 0;
    for mask in 0u64..(1u64 << n_ambient) {
        if mask.count_ones() as usize != m {
            continue;
        }
        let p: Vec<usize> = (0..n_ambient).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect();
        if p.iter().all(|&a| p.iter().all(|&b| a + b != s)) {
            count += 1;
        }
    }
    count
}

impl KStrictPartition {
    pub fn is_k_strict(&self) -> bool {
        let p = &self.parts;
        p.windows(2).all(|w| w[0] >= w[1] && !(w[0] > self.k && w[0] == w[1]))
    }

    /// Whether `self` is a partition indexing a Schubert class of `IG(m, N)`.
    pub fn is_valid_for(&self, n_ambient: usize) -> bool {
        let m = self.parts.len();
        if check_params(m, n_ambient).is_err() || !self.is_k_strict() {
            return false;
        }
        let n = half(n_ambient) as i64;
        let m = m as i64;
        if self.k != n - m {
            return false;
        }
        let (first, last) = (self.parts[0], self.parts[self.parts.len() - 1]);
        match parity_of(n_ambient) {
            Parity::Even => last >= 0 && first <= 2 * n - m,
            Parity::Odd => last >= -1 && first <= 2 * n + 1 - m && (last != -1 || first == 2 * n + 1 - m),
        }
    }

    /// Staircase containment `lambda_i >= d + 1 - i` for `1 <= i <= d`.
    pub fn contains_staircase(&self, d: usize) -> bool {
        (1..=d).all(|i| self.parts.get(i - 1).is_some_and(|&l| l >= (d + 1 - i) as i64))
    }
}

/// Index set to k-strict partition (`k = n - m`).
pub fn index_to_partition(p: &IndexSet) -> KStrictPartition {
    let n = half(p.n_ambient) as i64;
    let m = p.m() as i64;
    let q: Vec<i64> = p.p.iter().map(|&x| x as i64).collect();
    let (base, bound) = match p.parity() {
        Parity::Even => (2 * n + 1 - m, 2 * n + 1),
        Parity::Odd => (2 * n + 2 - m, 2 * n + 3),
    };
    let parts = (0..q.len())
        .map(|j| base - q[j] + (0..j).filter(|&i| q[i] + q[j] > bound).count() as i64)
        .collect();
    KStrictPartition { k: n - m, parts }
}

/// Inverse of [`index_to_partition`].
pub fn partition_to_index(lambda: &KStrictPartition, n_ambient: usize) -> Result<IndexSet> {
    if !lambda.is_valid_for(n_ambient) {
        return Err(Error::InvalidInput(format!("{:?} does not index a class of IG({}, {n_ambient})", lambda.parts, lambda.parts.len())));
    }
    let n = half(n_ambient) as i64;
    let m = lambda.parts.len() as i64;
    let base = match parity_of(n_ambient) {
        Parity::Even => 2 * n + 1 - m,
        Parity::Odd => 2 * n + 2 - m,
    };
    let l = &lambda.parts;
    let p: Vec<usize> = (0..l.len())
        .map(|j| {
            let c = (0..j).filter(|&i| l[i] + l[j] <= 2 * (n - m) + (j - i) as i64).count() as i64;
            (base - l[j] + c) as usize
        })
        .collect();
    IndexSet::new(n_ambient, p)
}

/// All partitions indexing Schubert classes of `IG(m, N)`, in decreasing lexicographic order.
pub fn enumerate_partitions(m: usize, n_ambient: usize) -> Result<Vec<KStrictPartition>> {
    check_params(m, n_ambient)?;
    let n = half(n_ambient) as i64;
    let mi = m as i64;
    let (lo, hi) = match parity_of(n_ambient) {
        Parity::Even => (0, 2 * n - mi),
        Parity::Odd => (-1, 2 * n + 1 - mi),
    };
    let mut out = vec![];
    let mut cur = vec![];
    fn rec(m: usize, lo: i64, top: i64, k: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for v in (lo..=top).rev() {
            if cur.last().is_some_and(|&l| l > k && l == v) {
                continue;
            }
            cur.push(v);
            rec(m, lo, v, k, cur, out);
            cur.pop();
        }
    }
    rec(m, lo, hi, n - mi, &mut cur, &mut out);
    Ok(out
        .into_iter()
        .map(|parts| KStrictPartition { k: n - mi, parts })
        .filter(|l| l.is_valid_for(n_ambient))
        .collect())
}
