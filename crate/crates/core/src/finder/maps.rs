use alloc::vec::Vec;

use itertools::Itertools;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::lattice::{boolean_failure, complemented_subidentities, subidentities};
use crate::laws::{holds, CheckOptions, TestDomain, ANTIDOMAIN, DOMAIN_SEMIRING, PREDOMAIN};
use crate::subset::Subset;

/// Which axioms the enumerated maps must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    /// Predomain into the complemented subidentities (test-dioid, dom-range, predomain-1/2).
    Predomain,
    /// `d1`–`d5`.
    DomainSemiring,
    /// `a1`–`a3`, as `adom` tables.
    Antidomain,
}

/// Calls `f` for every map `S → S` drawing `x`'s image from `ranges[x]`,
/// in lexicographic order of the value vector.
pub(crate) fn for_each_map(ranges: &[Vec<Elem>], mut f: impl FnMut(Vec<Elem>)) {
    if ranges.is_empty() {
        return;
    }
    for m in ranges.iter().map(|r| r.iter().copied()).multi_cartesian_product() {
        f(m);
    }
}

/// Every map on `s` satisfying the chosen axiom set, in lexicographic order.
///
/// Candidates are pruned with consequences of the axioms: `d(0) = 0`,
/// `d(1) = 1` and range in `S₁` (in the complemented subidentities for
/// predomain), and range in `S₁` for antidomain.
pub fn enumerate_domain_maps(s: &FiniteAlgebra, kind: MapKind) -> Vec<Vec<Elem>> {
    let s1 = subidentities(s);
    let opts = CheckOptions { test_domain: Some(TestDomain::Complemented), ..CheckOptions::default() };
    let ranges: Vec<Vec<Elem>> = match kind {
        MapKind::Predomain => {
            let b = complemented_subidentities(s);
            if boolean_failure(s, &b).is_err() {
                return Vec::new();
            }
            pinned(s, &b)
        }
        MapKind::DomainSemiring => pinned(s, &s1),
        MapKind::Antidomain => s.elements().map(|_| s1.to_vec()).collect(),
    };
    let mut out = Vec::new();
    for_each_map(&ranges, |m| {
        let ok = match kind {
            MapKind::Predomain => {
                let t = s.clone().with_dom(m.clone()).unwrap();
                holds(&t, PREDOMAIN, &opts)
            }
            MapKind::DomainSemiring => {
                let t = s.clone().with_dom(m.clone()).unwrap();
                holds(&t, DOMAIN_SEMIRING, &opts)
            }
            MapKind::Antidomain => {
                let t = s.clone().with_adom(m.clone()).unwrap();
                holds(&t, ANTIDOMAIN, &opts)
            }
        };
        if ok {
            out.push(m);
        }
    });
    out
}

/// Ranges within `target`, with `0 ↦ 0` and `1 ↦ 1` fixed.
fn pinned(s: &FiniteAlgebra, target: &Subset) -> Vec<Vec<Elem>> {
    s.elements()
        .map(|x| {
            if x == s.zero() {
                alloc::vec![s.zero()]
            } else if x == s.one() {
                alloc::vec![s.one()]
            } else {
                target.to_vec()
            }
        })
        .collect()
}
