use serde::{Deserialize, Serialize};

use super::pow2;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `N[v] = V`: `N(Ĝ) = N(\hat{G-v}) + N(\hat{G/v}) + 2`.
    Equality,
    /// Otherwise `N(\hat{G-v}) + N(\hat{G/v}) <= N(Ĝ)
    /// <= N(\hat{G-v}) + 2 N(\hat{G-N[v]}) + N(\hat{G/v})`.
    Inequality,
}

/// Counts of the suspensions appearing in the vertex recursion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecursionCheck {
    pub branch: Branch,
    pub whole: u128,
    pub minus_vertex: u128,
    pub contracted: u128,
    pub minus_closed_neighborhood: Option<u128>,
    pub holds: bool,
}

/// Checks the suspension recursion at vertex `v` of `g` (`g` has at least
/// two vertices), counting each suspension with `counter`.
pub fn suspension_recursion_check<F>(g: &Graph, v: usize, mut counter: F) -> Result<RecursionCheck>
where
    F: FnMut(&Graph) -> Result<u128>,
{
    if g.n() < 2 {
        return Err(Error::TooSmall);
    }
    if v >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    let whole = counter(&g.suspension()?)?;
    let minus_vertex = counter(&g.delete_vertex(v)?.suspension()?)?;
    let contracted = counter(&g.contract_vertex(v)?.suspension()?)?;
    let low = minus_vertex
        .checked_add(contracted)
        .ok_or(Error::Overflow)?;
    if g.closed_neighborhood(v) == g.vertices() {
        return Ok(RecursionCheck {
            branch: Branch::Equality,
            whole,
            minus_vertex,
            contracted,
            minus_closed_neighborhood: None,
            holds: low.checked_add(2) == Some(whole),
        });
    }
    let rest = counter(&g.delete_closed_neighborhood(v)?.suspension()?)?;
    let high = rest
        .checked_mul(2)
        .and_then(|r| r.checked_add(low))
        .ok_or(Error::Overflow)?;
    Ok(RecursionCheck {
        branch: Branch::Inequality,
        whole,
        minus_vertex,
        contracted,
        minus_closed_neighborhood: Some(rest),
        holds: low <= whole && whole <= high,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleSuspensionCheck {
    /// Vertex count of the single suspension.
    pub n: usize,
    pub single: u128,
    pub double: u128,
    pub holds: bool,
}

/// `N(\hat{\hat G}) = N(Ĝ) + 2^n` where `Ĝ` has `n` vertices; `g` needs at
/// least two vertices.
pub fn double_suspension_check<F>(g: &Graph, mut counter: F) -> Result<DoubleSuspensionCheck>
where
    F: FnMut(&Graph) -> Result<u128>,
{
    if g.n() < 2 {
        return Err(Error::TooSmall);
    }
    let once = g.suspension()?;
    let single = counter(&once)?;
    let double = counter(&once.suspension()?)?;
    let n = once.n();
    let holds = single.checked_add(pow2(n)?) == Some(double);
    Ok(DoubleSuspensionCheck {
        n,
        single,
        double,
        holds,
    })
}
