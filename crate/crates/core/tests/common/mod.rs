//! Direct evaluation of laws on raw tables, sharing no code with the crate's
//! evaluator.
#![allow(dead_code)]

use std::ops::ControlFlow;

use domsr_core::finder::enumerate_dioids;
use domsr_core::{Elem, FiniteAlgebra};

pub struct Naive {
    pub n: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    pub zero: usize,
    pub one: usize,
}

impl Naive {
    pub fn new(s: &FiniteAlgebra) -> Naive {
        let conv = |t: &[Elem]| t.iter().map(|&v| v as usize).collect();
        Naive {
            n: s.size(),
            add: conv(s.add_table()),
            mul: conv(s.mul_table()),
            zero: s.zero() as usize,
            one: s.one() as usize,
        }
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.n + y]
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.n + y]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.add(x, y) == y
    }

    pub fn top(&self) -> usize {
        (0..self.n).fold(self.zero, |t, x| self.add(t, x))
    }

    /// Greatest lower bound by brute force.
    pub fn meet(&self, x: usize, y: usize) -> usize {
        let lower: Vec<usize> = (0..self.n).filter(|&z| self.leq(z, x) && self.leq(z, y)).collect();
        *lower.iter().find(|&&z| lower.iter().all(|&w| self.leq(w, z))).expect("meet exists")
    }

    pub fn s1(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.leq(x, self.one)).collect()
    }

    pub fn complemented(&self) -> Vec<usize> {
        let s1 = self.s1();
        s1.iter()
            .copied()
            .filter(|&p| s1.iter().any(|&q| self.add(p, q) == self.one && self.mul(q, p) == self.zero))
            .collect()
    }

    /// `b` with `+` as join and `·` as meet is a complemented distributive lattice bounded by 0 and 1.
    pub fn is_boolean(&self, b: &[usize]) -> bool {
        if !b.contains(&self.zero) || !b.contains(&self.one) {
            return false;
        }
        for &p in b {
            for &q in b {
                let pq = self.mul(p, q);
                if !b.contains(&self.add(p, q)) || !b.contains(&pq) {
                    return false;
                }
                if !(self.leq(pq, p) && self.leq(pq, q)) {
                    return false;
                }
                if b.iter().any(|&r| self.leq(r, p) && self.leq(r, q) && !self.leq(r, pq)) {
                    return false;
                }
                for &r in b {
                    if self.add(p, self.mul(q, r)) != self.mul(self.add(p, q), self.add(p, r)) {
                        return false;
                    }
                }
            }
            if !b.iter().any(|&q| self.add(p, q) == self.one && self.mul(p, q) == self.zero) {
                return false;
            }
        }
        true
    }

    pub fn full(&self) -> bool {
        self.is_boolean(&self.s1())
    }

    fn all2(&self, f: impl Fn(usize, usize) -> bool) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| f(x, y)))
    }

    pub fn d1(&self, d: &[usize]) -> bool {
        (0..self.n).all(|x| self.leq(x, self.mul(d[x], x)))
    }

    pub fn d2(&self, d: &[usize]) -> bool {
        self.all2(|x, y| d[self.mul(x, d[y])] == d[self.mul(x, y)])
    }

    pub fn d3(&self, d: &[usize]) -> bool {
        (0..self.n).all(|x| self.leq(d[x], self.one))
    }

    pub fn d4(&self, d: &[usize]) -> bool {
        d[self.zero] == self.zero
    }

    pub fn d5(&self, d: &[usize]) -> bool {
        self.all2(|x, y| d[self.add(x, y)] == self.add(d[x], d[y]))
    }

    pub fn domain_semiring(&self, d: &[usize]) -> bool {
        self.d1(d) && self.d2(d) && self.d3(d) && self.d4(d) && self.d5(d)
    }

    pub fn locality(&self, d: &[usize]) -> bool {
        self.all2(|x, y| self.leq(d[self.mul(x, d[y])], d[self.mul(x, y)]))
    }

    pub fn weak_locality(&self, d: &[usize]) -> bool {
        self.all2(|x, y| self.leq(d[self.mul(x, y)], d[self.mul(x, d[y])]))
    }

    pub fn predomain(&self, d: &[usize], b: &[usize]) -> bool {
        self.is_boolean(b)
            && (0..self.n).all(|x| b.contains(&d[x]) && self.leq(x, self.mul(d[x], x)))
            && (0..self.n).all(|x| b.iter().all(|&p| self.leq(d[self.mul(p, x)], p)))
    }

    pub fn lla(&self, d: &[usize], b: &[usize]) -> bool {
        (0..self.n).all(|x| b.iter().all(|&p| self.leq(d[x], p) == self.leq(x, self.mul(p, x))))
    }

    pub fn antidomain(&self, ad: &[usize]) -> bool {
        (0..self.n).all(|x| self.mul(ad[x], x) == self.zero && self.add(ad[x], ad[ad[x]]) == self.one)
            && self.all2(|x, y| self.leq(ad[self.mul(x, y)], ad[self.mul(x, ad[ad[y]])]))
    }

    pub fn fixpoints(&self, d: &[usize]) -> Vec<usize> {
        (0..self.n).filter(|&x| d[x] == x).collect()
    }
}

pub fn dioids(n: usize) -> Vec<FiniteAlgebra> {
    let mut out = Vec::new();
    enumerate_dioids(n, false, |s| {
        out.push(s);
        ControlFlow::Continue(())
    })
    .unwrap();
    out
}

/// All maps `{0..n} → {0..n}` in lexicographic order of their value vectors.
pub fn all_maps(n: usize) -> Vec<Vec<Elem>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|m: Vec<Elem>| {
                (0..n as Elem).map(move |v| {
                    let mut m = m.clone();
                    m.push(v);
                    m
                })
            })
            .collect();
    }
    out
}

pub fn usize_map(m: &[Elem]) -> Vec<usize> {
    m.iter().map(|&v| v as usize).collect()
}
