//! Order-theoretic structure derived from the additive table: the lattice
//! view, subidentities, fixpoints and boolean subalgebras.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::subset::Subset;

/// The join-semilattice `(S, +, 0)` seen as a complete lattice.
///
/// A finite join-semilattice with bottom always has a top (the join of all
/// elements), so `inf` is total: `inf(x, y)` is the join of the common lower
/// bounds of `x` and `y`.
#[derive(Clone, Debug)]
pub struct LatticeView {
    n: usize,
    leq: Vec<bool>,
    sup: Vec<Elem>,
    inf: Vec<Elem>,
    top: Elem,
    bottom: Elem,
}

impl LatticeView {
    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x as usize * self.n + y as usize]
    }

    #[inline]
    pub fn sup(&self, x: Elem, y: Elem) -> Elem {
        self.sup[x as usize * self.n + y as usize]
    }

    #[inline]
    pub fn inf(&self, x: Elem, y: Elem) -> Elem {
        self.inf[x as usize * self.n + y as usize]
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `Sup X`; the empty sup is the bottom.
    pub fn sup_of(&self, xs: impl IntoIterator<Item = Elem>) -> Elem {
        xs.into_iter().fold(self.bottom, |acc, x| self.sup(acc, x))
    }

    /// `Inf X`; the empty inf is the top.
    pub fn inf_of(&self, xs: impl IntoIterator<Item = Elem>) -> Elem {
        xs.into_iter().fold(self.top, |acc, x| self.inf(acc, x))
    }
}

/// Checks that `add` is associative, commutative, idempotent with unit zero
/// and returns the first failure in index order.
pub fn semilattice_failure(s: &FiniteAlgebra) -> Option<(&'static str, [Elem; 3])> {
    let z = s.zero();
    for x in s.elements() {
        if s.add(x, x) != x {
            return Some(("add-idem", [x, x, x]));
        }
        if s.add(z, x) != x || s.add(x, z) != x {
            return Some(("add-unit", [x, z, z]));
        }
        for y in s.elements() {
            if s.add(x, y) != s.add(y, x) {
                return Some(("add-comm", [x, y, y]));
            }
        }
    }
    for x in s.elements() {
        for y in s.elements() {
            let xy = s.add(x, y);
            for z in s.elements() {
                if s.add(xy, z) != s.add(x, s.add(y, z)) {
                    return Some(("add-assoc", [x, y, z]));
                }
            }
        }
    }
    None
}

/// Derives order, top and infima from `add`.
pub fn lattice_view(s: &FiniteAlgebra) -> Result<LatticeView> {
    if let Some((law, witness)) = semilattice_failure(s) {
        return Err(Error::NotSemilattice { law, witness });
    }
    Ok(lattice_view_unchecked(s))
}

pub(crate) fn lattice_view_unchecked(s: &FiniteAlgebra) -> LatticeView {
    let n = s.size();
    let mut leq = vec![false; n * n];
    let mut down: Vec<Subset> = Vec::with_capacity(n);
    for y in s.elements() {
        let mut d = Subset::empty(n);
        for x in s.elements() {
            if s.leq(x, y) {
                leq[x as usize * n + y as usize] = true;
                d.insert(x);
            }
        }
        down.push(d);
    }
    let down_size: Vec<usize> = down.iter().map(Subset::len).collect();
    let top = s.elements().fold(s.zero(), |acc, x| s.add(acc, x));
    let mut inf = vec![0 as Elem; n * n];
    for x in 0..n {
        for y in x..n {
            // the meet is the common lower bound with the largest down-set
            let common = down[x].intersection(&down[y]);
            let m = common.iter().max_by_key(|&z| down_size[z as usize]).unwrap_or(s.zero());
            inf[x * n + y] = m;
            inf[y * n + x] = m;
        }
    }
    LatticeView { n, leq, sup: s.add_table().to_vec(), inf, top, bottom: s.zero() }
}

/// `S₁`: all `x` with `x ≤ 1`.
pub fn subidentities(s: &FiniteAlgebra) -> Subset {
    Subset::from_predicate(s.size(), |x| s.leq(x, s.one()))
}

/// `{x | f(x) = x}`.
pub fn fixpoints(s: &FiniteAlgebra, f: &[Elem]) -> Subset {
    Subset::from_predicate(s.size(), |x| f[x as usize] == x)
}

/// `f(S)`.
pub fn image(s: &FiniteAlgebra, f: &[Elem]) -> Subset {
    Subset::from_elems(s.size(), f.iter().copied())
}

/// Why a subset of `S₁` fails to be a boolean subalgebra bounded by 0 and 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoolFailure {
    MissingZero,
    MissingOne,
    NotClosedAdd(Elem, Elem),
    NotClosedMul(Elem, Elem),
    /// `pq` is not the greatest lower bound of `p` and `q` within the subset.
    NotMeet(Elem, Elem),
    /// `p + qr ≠ (p + q)(p + r)`.
    NotDistributive(Elem, Elem, Elem),
    Uncomplemented(Elem),
}

impl BoolFailure {
    pub fn elems(&self) -> Vec<Elem> {
        match *self {
            BoolFailure::MissingZero | BoolFailure::MissingOne => Vec::new(),
            BoolFailure::NotClosedAdd(p, q) | BoolFailure::NotClosedMul(p, q) | BoolFailure::NotMeet(p, q) => {
                vec![p, q]
            }
            BoolFailure::NotDistributive(p, q, r) => vec![p, q, r],
            BoolFailure::Uncomplemented(p) => vec![p],
        }
    }

    pub fn reason(&self) -> &'static str {
        match self {
            BoolFailure::MissingZero => "0 missing",
            BoolFailure::MissingOne => "1 missing",
            BoolFailure::NotClosedAdd(..) => "not closed under +",
            BoolFailure::NotClosedMul(..) => "not closed under ·",
            BoolFailure::NotMeet(..) => "· is not the meet",
            BoolFailure::NotDistributive(..) => "not distributive",
            BoolFailure::Uncomplemented(..) => "uncomplemented",
        }
    }
}

/// Decides whether `b ⊆ S₁` is a boolean algebra bounded by 0 and 1 with
/// `+` as sup and `·` as inf. A `b` not contained in `S₁` is an error.
pub fn is_boolean_subalgebra(s: &FiniteAlgebra, b: &Subset) -> Result<Result<(), BoolFailure>> {
    let s1 = subidentities(s);
    if let Some(x) = b.first_outside(&s1) {
        return Err(Error::NotSubidentities(x));
    }
    Ok(boolean_failure(s, b))
}

pub(crate) fn boolean_failure(s: &FiniteAlgebra, b: &Subset) -> Result<(), BoolFailure> {
    if !b.contains(s.zero()) {
        return Err(BoolFailure::MissingZero);
    }
    if !b.contains(s.one()) {
        return Err(BoolFailure::MissingOne);
    }
    let elems = b.to_vec();
    for &p in &elems {
        for &q in &elems {
            if !b.contains(s.add(p, q)) {
                return Err(BoolFailure::NotClosedAdd(p, q));
            }
        }
    }
    for &p in &elems {
        for &q in &elems {
            if !b.contains(s.mul(p, q)) {
                return Err(BoolFailure::NotClosedMul(p, q));
            }
        }
    }
    for &p in &elems {
        for &q in &elems {
            let m = s.mul(p, q);
            let is_lower = s.leq(m, p) && s.leq(m, q);
            let greatest = elems.iter().all(|&r| !(s.leq(r, p) && s.leq(r, q)) || s.leq(r, m));
            if !is_lower || !greatest {
                return Err(BoolFailure::NotMeet(p, q));
            }
        }
    }
    for &p in &elems {
        for &q in &elems {
            for &r in &elems {
                if s.add(p, s.mul(q, r)) != s.mul(s.add(p, q), s.add(p, r)) {
                    return Err(BoolFailure::NotDistributive(p, q, r));
                }
            }
        }
    }
    for &p in &elems {
        let complemented = elems
            .iter()
            .any(|&q| s.add(p, q) == s.one() && s.mul(p, q) == s.zero() && s.mul(q, p) == s.zero());
        if !complemented {
            return Err(BoolFailure::Uncomplemented(p));
        }
    }
    Ok(())
}

/// Subidentities `p` having some `q ∈ S₁` with `p + q = 1` and `qp = 0`.
pub fn complemented_subidentities(s: &FiniteAlgebra) -> Subset {
    let s1 = subidentities(s);
    Subset::from_predicate(s.size(), |p| {
        s1.contains(p) && s1.iter().any(|q| s.add(p, q) == s.one() && s.mul(q, p) == s.zero())
    })
}

/// A complement of `p` inside `b`, if one exists.
pub fn complement_in(s: &FiniteAlgebra, b: &Subset, p: Elem) -> Option<Elem> {
    b.iter()
        .find(|&q| s.add(p, q) == s.one() && s.mul(p, q) == s.zero() && s.mul(q, p) == s.zero())
}

/// Every boolean subalgebra of `S₁` bounded by 0 and 1, in increasing
/// bitmask order of the subidentities strictly between 0 and 1.
pub fn boolean_subalgebras(s: &FiniteAlgebra) -> Result<Vec<Subset>> {
    let s1 = subidentities(s);
    let inner: Vec<Elem> = s1.iter().filter(|&x| x != s.zero() && x != s.one()).collect();
    if inner.len() > 16 {
        return Err(Error::TooManySubidentities(s1.len()));
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << inner.len()) {
        let mut b = Subset::from_elems(s.size(), [s.zero(), s.one()]);
        for (i, &x) in inner.iter().enumerate() {
            if mask >> i & 1 == 1 {
                b.insert(x);
            }
        }
        if boolean_failure(s, &b).is_ok() {
            out.push(b);
        }
    }
    Ok(out)
}

/// The largest boolean subalgebra of `S₁` bounded by 0 and 1.
///
/// Every such subalgebra lies inside the complemented subidentities, so that
/// set is returned when it is itself boolean; otherwise the boolean
/// subalgebras are enumerated and the unique largest is taken.
pub fn max_boolean_subalgebra(s: &FiniteAlgebra) -> Result<Subset> {
    let c = complemented_subidentities(s);
    if boolean_failure(s, &c).is_ok() {
        return Ok(c);
    }
    let all = boolean_subalgebras(s)?;
    Ok(all.into_iter().max_by_key(Subset::len).unwrap_or_else(|| Subset::from_elems(s.size(), [s.zero()])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::builtin;

    #[test]
    fn chain3_order() {
        let s = builtin("chain3-id").unwrap();
        let lv = lattice_view(&s).unwrap();
        let (z, a, o) = (0, 1, 2);
        assert!(lv.leq(z, a) && lv.leq(a, o) && !lv.leq(o, a));
        assert_eq!(lv.top(), o);
        for x in s.elements() {
            for y in s.elements() {
                assert_eq!(lv.inf(x, y), s.mul(x, y));
            }
        }
    }

    #[test]
    fn nonlocal4_diamond() {
        let s = builtin("nonlocal4").unwrap();
        let lv = lattice_view(&s).unwrap();
        let (z, a, o, t) = (0, 1, 2, 3);
        assert!(lv.leq(z, a) && lv.leq(z, o) && lv.leq(a, t) && lv.leq(o, t));
        assert!(!lv.leq(a, o) && !lv.leq(o, a));
        assert_eq!(lv.top(), t);
        assert_eq!(lv.inf(a, o), z);
        assert_eq!(subidentities(&s).to_vec(), vec![z, o]);
        assert_eq!(complemented_subidentities(&s).to_vec(), vec![z, o]);
    }

    #[test]
    fn trivial_algebra() {
        let s = crate::models::trivial_algebra();
        let lv = lattice_view(&s).unwrap();
        assert!(lv.leq(0, 0));
        assert_eq!(lv.top(), 0);
        assert_eq!(subidentities(&s).to_vec(), vec![0]);
        assert_eq!(is_boolean_subalgebra(&s, &Subset::full(1)).unwrap(), Ok(()));
    }

    #[test]
    fn chain3_subidentities_and_booleans() {
        let s = builtin("chain3-id").unwrap();
        assert_eq!(subidentities(&s).to_vec(), vec![0, 1, 2]);
        assert_eq!(
            is_boolean_subalgebra(&s, &Subset::full(3)).unwrap(),
            Err(BoolFailure::Uncomplemented(1))
        );
        assert_eq!(is_boolean_subalgebra(&s, &Subset::from_elems(3, [0, 2])).unwrap(), Ok(()));
        assert_eq!(complemented_subidentities(&s).to_vec(), vec![0, 2]);
        assert_eq!(max_boolean_subalgebra(&s).unwrap().to_vec(), vec![0, 2]);
        assert_eq!(boolean_subalgebras(&s).unwrap(), vec![Subset::from_elems(3, [0, 2])]);
    }

    #[test]
    fn subset_outside_s1_is_error() {
        let s = builtin("nonlocal4").unwrap();
        let b = Subset::from_elems(4, [0, 1, 2]);
        assert_eq!(is_boolean_subalgebra(&s, &b), Err(Error::NotSubidentities(1)));
    }

    #[test]
    fn fixpoints_and_image() {
        let s = builtin("chain3-d01").unwrap();
        let d = s.dom().unwrap();
        assert_eq!(fixpoints(&s, d).to_vec(), vec![0, 2]);
        assert_eq!(image(&s, d).to_vec(), vec![0, 2]);
        let id = builtin("chain3-id").unwrap();
        assert_eq!(fixpoints(&id, id.dom().unwrap()).to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn rejects_non_semilattice() {
        let mut raw = builtin("chain3-id").unwrap().to_raw();
        raw.add[1][2] = 1;
        let s = FiniteAlgebra::try_from(raw).unwrap();
        assert!(matches!(lattice_view(&s), Err(Error::NotSemilattice { .. })));
    }
}
