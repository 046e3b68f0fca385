use alloc::vec::Vec;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::error::Result;
use crate::lattice::{complemented_subidentities, lattice_view};

/// The relation-algebraic candidate `x ↦ 1 ∧ x⊤`.
///
/// Only computes the map; it is not installed as the algebra's domain.
pub fn dom_via_top(s: &FiniteAlgebra) -> Result<Vec<Elem>> {
    let lv = lattice_view(s)?;
    Ok(s.elements().map(|x| lv.inf(s.one(), s.mul(x, lv.top()))).collect())
}

/// `x ↦ Inf { p | p complemented subidentity, x ≤ p⊤ }`.
pub fn dom_via_inf(s: &FiniteAlgebra) -> Result<Vec<Elem>> {
    let lv = lattice_view(s)?;
    let tests = complemented_subidentities(s);
    Ok(s.elements()
        .map(|x| lv.inf_of(tests.iter().filter(|&p| lv.leq(x, s.mul(p, lv.top())))))
        .collect())
}
