use serde::{Deserialize, Serialize};

use super::pow2;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

/// Conjectured range of facet counts over connected graphs on `n` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundPair {
    pub n: usize,
    pub parity: Parity,
    pub lower: u128,
    pub upper: u128,
}

impl BoundPair {
    pub fn contains(&self, count: u128) -> bool {
        self.lower <= count && count <= self.upper
    }
}

fn pow6(k: usize) -> Result<u128> {
    6u128.checked_pow(k as u32).ok_or(Error::Overflow)
}

/// Odd `n`: `3·2^{(n-1)/2} - 2 <= N <= 6^{(n-1)/2}`.
/// Even `n`: `2^{n/2+1} - 2 <= N <= 14·6^{n/2-2}`.
pub fn conjecture_bounds(n: usize) -> Result<BoundPair> {
    if n < 3 {
        return Err(Error::BoundsDomain(n));
    }
    let parity = Parity::of(n);
    let (lower, upper) = match parity {
        Parity::Odd => {
            let h = (n - 1) / 2;
            let lower = pow2(h)?.checked_mul(3).ok_or(Error::Overflow)? - 2;
            (lower, pow6(h)?)
        }
        Parity::Even => {
            let lower = pow2(n / 2 + 1)? - 2;
            let upper = pow6(n / 2 - 2)?.checked_mul(14).ok_or(Error::Overflow)?;
            (lower, upper)
        }
    };
    Ok(BoundPair {
        n,
        parity,
        lower,
        upper,
    })
}

/// Upper bound for the facet count of a join `G1 + G2` in terms of the
/// suspensions `Ĝ1`, `Ĝ2` (`nhat*`), the orders (`n*`) and the component
/// counts (`m*`):
/// `nhat1 + nhat2 + 2^m1 + 2^m2 - 2 + 4(2^{n1-1} - 1)(2^{n2-1} - 1)`.
pub fn join_upper_bound(
    nhat1: u128,
    nhat2: u128,
    n1: usize,
    n2: usize,
    m1: usize,
    m2: usize,
) -> Result<u128> {
    if n1 == 0 || n2 == 0 || m1 == 0 || m2 == 0 {
        return Err(Error::EmptyPart);
    }
    let cross = (pow2(n1 - 1)? - 1)
        .checked_mul(pow2(n2 - 1)? - 1)
        .and_then(|p| p.checked_mul(4))
        .ok_or(Error::Overflow)?;
    [nhat2, pow2(m1)?, pow2(m2)?, cross]
        .into_iter()
        .try_fold(nhat1, |acc, x| acc.checked_add(x))
        .map(|s| s - 2)
        .ok_or(Error::Overflow)
}

/// Exact join count against both the suspension-based upper bound and, for
/// `n >= 3`, the conjectured range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinCheck {
    pub count: u128,
    pub join_bound: u128,
    pub bounds: Option<BoundPair>,
    pub holds: bool,
}

pub fn join_bound_check<F>(g1: &Graph, g2: &Graph, mut counter: F) -> Result<JoinCheck>
where
    F: FnMut(&Graph) -> Result<u128>,
{
    let joined = g1.join(g2)?;
    let count = counter(&joined)?;
    let nhat1 = counter(&g1.suspension()?)?;
    let nhat2 = counter(&g2.suspension()?)?;
    let join_bound = join_upper_bound(
        nhat1,
        nhat2,
        g1.n(),
        g2.n(),
        g1.component_count(),
        g2.component_count(),
    )?;
    let bounds = if joined.n() >= 3 {
        Some(conjecture_bounds(joined.n())?)
    } else {
        None
    };
    let holds = count <= join_bound && bounds.is_none_or(|b| b.contains(count));
    Ok(JoinCheck {
        count,
        join_bound,
        bounds,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facets::count_facets;

    #[test]
    fn bounds_at_small_n() {
        let b = conjecture_bounds(5).unwrap();
        assert_eq!((b.lower, b.upper, b.parity), (10, 36, Parity::Odd));
        let b = conjecture_bounds(6).unwrap();
        assert_eq!((b.lower, b.upper, b.parity), (14, 84, Parity::Even));
        let b = conjecture_bounds(3).unwrap();
        assert_eq!((b.lower, b.upper), (4, 6));
        let b = conjecture_bounds(4).unwrap();
        assert_eq!((b.lower, b.upper), (6, 14));
        assert_eq!(conjecture_bounds(2), Err(Error::BoundsDomain(2)));
        assert!(conjecture_bounds(200).is_err());
    }

    #[test]
    fn join_bound_examples() {
        assert_eq!(join_upper_bound(4, 4, 2, 2, 2, 2).unwrap(), 18);
        assert_eq!(join_upper_bound(6, 4, 2, 2, 1, 2).unwrap(), 18);
        // a single-vertex side kills the cross term
        assert_eq!(
            join_upper_bound(14, 2, 3, 1, 1, 1).unwrap(),
            14 + 2 + 2 + 2 - 2
        );
        assert_eq!(join_upper_bound(1, 1, 0, 1, 1, 1), Err(Error::EmptyPart));
    }

    #[test]
    fn join_checks() {
        let c = join_bound_check(&Graph::empty(2), &Graph::empty(2), count_facets).unwrap();
        assert_eq!((c.count, c.join_bound), (6, 18));
        assert!(c.holds);
        let c = join_bound_check(&Graph::complete(2), &Graph::empty(2), count_facets).unwrap();
        assert_eq!((c.count, c.join_bound), (12, 18));
        assert!(c.holds);
        let c = join_bound_check(&Graph::empty(1), &Graph::empty(1), count_facets).unwrap();
        assert_eq!(c.bounds, None);
        assert!(c.holds);
    }
}
