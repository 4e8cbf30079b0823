use super::pow2;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `N(P_{K_{l,m}}) = 2^l + 2^m - 2`.
pub fn n_complete_bipartite(l: usize, m: usize) -> Result<u128> {
    if l == 0 || m == 0 {
        return Err(Error::EmptyPart);
    }
    pow2(l)?
        .checked_add(pow2(m)?)
        .map(|s| s - 2)
        .ok_or(Error::Overflow)
}

/// `N(P_{K_{l_1..l_s}}) = 2^{Σ l_i} - Σ (2^{l_i} - 2) - 2` for `s >= 3`.
pub fn n_complete_multipartite(parts: &[usize]) -> Result<u128> {
    if parts.len() < 3 {
        return Err(Error::TooFewParts(parts.len()));
    }
    if parts.contains(&0) {
        return Err(Error::EmptyPart);
    }
    let total = parts
        .iter()
        .try_fold(0usize, |a, &l| a.checked_add(l))
        .ok_or(Error::Overflow)?;
    let mut value = pow2(total)? - 2;
    for &l in parts {
        // 2^l - 2 <= 2^total - 2 - (other terms) since total > l
        value -= pow2(l)? - 2;
    }
    Ok(value)
}

/// Facet count of a 1-sum, the product of the summands' counts.
pub fn n_one_sum(a: u128, b: u128) -> Result<u128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// Part sizes (ascending) if `g` is complete multipartite with at least two
/// parts.
pub fn complete_multipartite_parts(g: &Graph) -> Option<Vec<usize>> {
    let comp = g.complement();
    let classes = comp.components();
    if classes.len() < 2 {
        return None;
    }
    for c in &classes {
        if c.iter()
            .any(|v| !g.neighbors(v).intersection(*c).is_empty())
        {
            return None;
        }
    }
    let mut sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    Some(sizes)
}

/// Closed-form count: split a connected graph into blocks and multiply the
/// complete-multipartite formula of each block.
pub fn formula_count(g: &Graph) -> Result<u128> {
    crate::facets::require_connected(g)?;
    let mut total: u128 = 1;
    for block in g.blocks() {
        let b = g.induced(block)?;
        let parts = complete_multipartite_parts(&b).ok_or_else(|| {
            Error::NoClosedForm(format!("block {block} is not complete multipartite"))
        })?;
        let count = if parts.len() == 2 {
            n_complete_bipartite(parts[0], parts[1])?
        } else {
            n_complete_multipartite(&parts)?
        };
        total = n_one_sum(total, count)?;
    }
    Ok(total)
}
