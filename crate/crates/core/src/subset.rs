use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::Elem;

/// A set of carrier elements, stored as a bitmask.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subset {
    n: usize,
    words: Vec<u64>,
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        Subset { n, words: vec![0; n.div_ceil(64)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Subset::empty(n);
        for x in 0..n {
            s.insert(x as Elem);
        }
        s
    }

    pub fn from_elems<I: IntoIterator<Item = Elem>>(n: usize, elems: I) -> Self {
        let mut s = Subset::empty(n);
        for x in elems {
            s.insert(x);
        }
        s
    }

    pub fn from_predicate(n: usize, mut pred: impl FnMut(Elem) -> bool) -> Self {
        let mut s = Subset::empty(n);
        for x in 0..n as Elem {
            if pred(x) {
                s.insert(x);
            }
        }
        s
    }

    /// Size of the carrier this subset lives in.
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        let x = x as usize;
        x < self.n && self.words[x / 64] >> (x % 64) & 1 == 1
    }

    /// Panics if `x` lies outside the carrier.
    #[inline]
    pub fn insert(&mut self, x: Elem) {
        let x = x as usize;
        assert!(x < self.n, "element {x} outside carrier of size {}", self.n);
        self.words[x / 64] |= 1 << (x % 64);
    }

    #[inline]
    pub fn remove(&mut self, x: Elem) {
        let x = x as usize;
        if x < self.n {
            self.words[x / 64] &= !(1 << (x % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        Subset {
            n: self.n,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn union(&self, other: &Subset) -> Subset {
        Subset {
            n: self.n,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    /// First element of `self` not in `other`.
    pub fn first_outside(&self, other: &Subset) -> Option<Elem> {
        self.iter().find(|&x| !other.contains(x))
    }

    /// Elements in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some((i * 64 + b) as Elem)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = Subset::empty(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(64) && !s.contains(65) && !s.contains(500));
        s.remove(64);
        assert_eq!(s.to_vec(), vec![0, 129]);
        let t = Subset::from_elems(130, [0, 5]);
        assert_eq!(s.intersection(&t).to_vec(), vec![0]);
        assert_eq!(s.union(&t).to_vec(), vec![0, 5, 129]);
        assert!(!t.is_subset(&s));
        assert_eq!(t.first_outside(&s), Some(5));
        assert!(Subset::empty(0).is_empty());
        assert_eq!(Subset::full(3).len(), 3);
    }
}
