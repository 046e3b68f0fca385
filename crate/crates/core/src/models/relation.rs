use alloc::format;
use alloc::vec::Vec;

use super::powerset::{expand, AtomSystem};
use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};

/// Binary relations over `{a, b, c}`-style universes of size `universe`.
///
/// Element indices are bitmasks over the cells `(i, j) ↦ bit i·m + j`, so the
/// empty relation is index 0 and the identity is `Σ 1 << (i·m + i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RelModel {
    pub universe: usize,
}

impl RelModel {
    pub fn expand(&self) -> Result<FiniteAlgebra> {
        let m = self.universe;
        if !(1..=3).contains(&m) {
            return Err(Error::UniverseSize(m));
        }
        let point = |i: usize| (b'a' + i as u8) as char;
        let k = m * m;
        let names = (0..k).map(|c| format!("({},{})", point(c / m), point(c % m))).collect();
        let mut compose = Vec::with_capacity(k * k);
        for c in 0..k {
            for d in 0..k {
                let (i, j) = (c / m, c % m);
                let (j2, l) = (d / m, d % m);
                compose.push((j == j2).then_some(i * m + l));
            }
        }
        let source_unit = (0..k).map(|c| (c / m) * m + c / m).collect();
        let units = (0..m).fold(0u32, |acc, i| acc | 1 << (i * m + i));
        let sys = AtomSystem { names, compose, source_unit, units };
        Ok(expand(&format!("rel{m}"), &sys))
    }
}

/// The full relation algebra over an `m`-element set, `1 ≤ m ≤ 3`.
pub fn rel_algebra(m: usize) -> Result<FiniteAlgebra> {
    RelModel { universe: m }.expand()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Elem;
    use crate::lattice::subidentities;

    fn cell(m: usize, i: usize, j: usize) -> Elem {
        1 << (i * m + j)
    }

    #[test]
    fn rel2_domain_of_single_pair() {
        let s = rel_algebra(2).unwrap();
        let r = s.find("{(a,a)}").unwrap();
        assert_eq!(r, cell(2, 0, 0));
        assert_eq!(s.dom().unwrap()[r as usize], r);
        assert_eq!(s.elem_name(s.adom().unwrap()[r as usize]), "{(b,b)}");
        assert_eq!(s.size(), 16);
    }

    #[test]
    fn rel1_is_boolean_semiring() {
        let s = rel_algebra(1).unwrap();
        assert_eq!(s.size(), 2);
        assert_eq!((s.zero(), s.one()), (0, 1));
        assert_eq!(s.add_table(), &[0, 1, 1, 1]);
        assert_eq!(s.mul_table(), &[0, 0, 0, 1]);
    }

    #[test]
    fn out_of_range_universe() {
        assert_eq!(rel_algebra(0), Err(Error::UniverseSize(0)));
        assert_eq!(rel_algebra(4), Err(Error::UniverseSize(4)));
    }

    #[test]
    fn rel2_subidentities_are_identity_subsets() {
        // oracle: enumerate all 16 relations as pair sets and keep those inside the diagonal
        let s = rel_algebra(2).unwrap();
        let expected: Vec<Elem> = (0u16..16)
            .filter(|&r| (0..4).all(|c| r >> c & 1 == 0 || c / 2 == c % 2))
            .collect();
        assert_eq!(expected.len(), 4);
        assert_eq!(subidentities(&s).to_vec(), expected);
    }

    #[test]
    fn composition_matches_matrix_product() {
        let m = 2;
        let s = rel_algebra(m).unwrap();
        for r in s.elements() {
            for q in s.elements() {
                let mut prod = 0;
                for i in 0..m {
                    for k in 0..m {
                        let hit = (0..m).any(|j| r & cell(m, i, j) != 0 && q & cell(m, j, k) != 0);
                        if hit {
                            prod |= cell(m, i, k);
                        }
                    }
                }
                assert_eq!(s.mul(r, q), prod);
            }
        }
    }
}
