//! Closed forms, conjectured bounds, recursion identities and the extremal
//! families that attain the bounds.

mod bounds;
mod closed;
mod extremal;
mod recursion;

pub use bounds::{
    conjecture_bounds, join_bound_check, join_upper_bound, BoundPair, JoinCheck, Parity,
};
pub use closed::{
    complete_multipartite_parts, formula_count, n_complete_bipartite, n_complete_multipartite,
    n_one_sum,
};
pub use extremal::{
    classify_extremal, is_balanced_complete_bipartite, is_k4_plus_triangles,
    is_one_sum_of_triangles, is_star, ExtremalClass,
};
pub use recursion::{
    double_suspension_check, suspension_recursion_check, Branch, DoubleSuspensionCheck,
    RecursionCheck,
};

use crate::error::{Error, Result};

pub(crate) fn pow2(k: usize) -> Result<u128> {
    if k >= 128 {
        return Err(Error::Overflow);
    }
    Ok(1u128 << k)
}
