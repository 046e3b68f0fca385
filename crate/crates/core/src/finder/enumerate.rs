use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use itertools::Itertools;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::error::{Error, Result};

/// Largest carrier the enumerators accept.
pub const MAX_SIZE: usize = 6;

const UNSET: Elem = Elem::MAX;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumStats {
    pub orders: u64,
    /// Search nodes visited while filling multiplication tables.
    pub nodes: u64,
    /// Nodes abandoned because a law became violated.
    pub pruned: u64,
    pub dioids: u64,
    pub iso_rejected: u64,
}

fn check_size(n: usize) -> Result<()> {
    if (1..=MAX_SIZE).contains(&n) {
        Ok(())
    } else {
        Err(Error::SizeOutOfRange(n))
    }
}

/// All join-semilattice orders on `{0..n}` with bottom 0, as addition tables.
///
/// The relation among `1..n` is chosen pair by pair (`i < j` in index
/// order, options incomparable / below / above) in lexicographic order;
/// candidates that are not partial orders or lack joins are dropped.
pub fn semilattice_orders(n: usize) -> Result<Vec<Vec<Elem>>> {
    check_size(n)?;
    let pairs: Vec<(usize, usize)> = (1..n).tuple_combinations().collect();
    let mut out = Vec::new();
    let mut choice = vec![0u8; pairs.len()];
    loop {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x] = true; // 0 ≤ x
            leq[x * n + x] = true;
        }
        for (&(i, j), &c) in pairs.iter().zip(&choice) {
            match c {
                1 => leq[i * n + j] = true,
                2 => leq[j * n + i] = true,
                _ => {}
            }
        }
        let transitive = (0..n).all(|x| {
            (0..n).all(|y| !leq[x * n + y] || (0..n).all(|z| !leq[y * n + z] || leq[x * n + z]))
        });
        if transitive {
            if let Some(add) = joins(n, &leq) {
                out.push(add);
            }
        }
        // next choice vector, last position fastest
        let mut pos = pairs.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            if choice[pos] < 2 {
                choice[pos] += 1;
                break;
            }
            choice[pos] = 0;
        }
    }
}

fn joins(n: usize, leq: &[bool]) -> Option<Vec<Elem>> {
    let mut add = vec![0 as Elem; n * n];
    for x in 0..n {
        for y in 0..n {
            let upper: Vec<usize> = (0..n).filter(|&u| leq[x * n + u] && leq[y * n + u]).collect();
            let least = upper.iter().copied().find(|&u| upper.iter().all(|&v| leq[u * n + v]))?;
            add[x * n + y] = least as Elem;
        }
    }
    Some(add)
}

struct MulSearch<'a> {
    n: usize,
    add: &'a [Elem],
    mul: Vec<Elem>,
    stats: &'a mut EnumStats,
}

impl MulSearch<'_> {
    #[inline]
    fn m(&self, x: Elem, y: Elem) -> Elem {
        if x == UNSET || y == UNSET {
            UNSET
        } else {
            self.mul[x as usize * self.n + y as usize]
        }
    }

    #[inline]
    fn a(&self, x: Elem, y: Elem) -> Elem {
        if x == UNSET || y == UNSET {
            UNSET
        } else {
            self.add[x as usize * self.n + y as usize]
        }
    }

    /// Associativity and both distributive laws at `(x, y, z)`, where defined.
    fn triple_ok(&self, x: Elem, y: Elem, z: Elem) -> bool {
        let agree = |l: Elem, r: Elem| l == UNSET || r == UNSET || l == r;
        agree(self.m(self.m(x, y), z), self.m(x, self.m(y, z)))
            && agree(self.m(x, self.a(y, z)), self.a(self.m(x, y), self.m(x, z)))
            && agree(self.m(self.a(x, y), z), self.a(self.m(x, z), self.m(y, z)))
    }

    /// Every constraint instance touching cell `(a, b)` lies in `(a,·,·)` or `(·,·,b)`.
    fn cell_ok(&self, a: Elem, b: Elem) -> bool {
        let n = self.n as Elem;
        (0..n).all(|t| (0..n).all(|u| self.triple_ok(a, t, u) && self.triple_ok(t, u, b)))
    }
}

/// All multiplication tables making `(add, mul, 0, 1)` a dioid, with rows
/// and columns of 0 and 1 fixed; cells filled row-major with backtracking.
pub fn mul_completions(
    n: usize,
    add: &[Elem],
    stats: &mut EnumStats,
    f: &mut dyn FnMut(Vec<Elem>) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if n == 1 {
        stats.dioids += 1;
        return f(vec![0]);
    }
    let mut mul = vec![UNSET; n * n];
    for x in 0..n {
        mul[x] = 0;
        mul[x * n] = 0;
        mul[n + x] = x as Elem;
        mul[x * n + 1] = x as Elem;
    }
    mul[n] = 0;
    mul[1] = 0;
    let cells: Vec<(Elem, Elem)> = (2..n as Elem).flat_map(|x| (2..n as Elem).map(move |y| (x, y))).collect();
    let mut search = MulSearch { n, add, mul, stats };
    // the fixed rows may already clash with distributivity
    let fixed_ok = (0..n as Elem).all(|x| (0..n as Elem).all(|y| (0..n as Elem).all(|z| search.triple_ok(x, y, z))));
    if !fixed_ok {
        search.stats.pruned += 1;
        return ControlFlow::Continue(());
    }
    fill(&mut search, &cells, 0, f)
}

fn fill(
    s: &mut MulSearch<'_>,
    cells: &[(Elem, Elem)],
    k: usize,
    f: &mut dyn FnMut(Vec<Elem>) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if k == cells.len() {
        s.stats.dioids += 1;
        return f(s.mul.clone());
    }
    let (a, b) = cells[k];
    let idx = a as usize * s.n + b as usize;
    for v in 0..s.n as Elem {
        s.stats.nodes += 1;
        s.mul[idx] = v;
        if s.cell_ok(a, b) {
            fill(s, cells, k + 1, f)?;
        } else {
            s.stats.pruned += 1;
        }
    }
    s.mul[idx] = UNSET;
    ControlFlow::Continue(())
}

/// Whether `(add, mul)` is lexicographically minimal among its relabelings
/// by permutations of `{2..n}`.
pub fn is_canonical(n: usize, add: &[Elem], mul: &[Elem]) -> bool {
    if n <= 3 {
        return true;
    }
    let key: Vec<Elem> = add.iter().chain(mul).copied().collect();
    (2..n as Elem).permutations(n - 2).all(|tail| {
        let mut perm: Vec<Elem> = vec![0, 1];
        perm.extend(tail);
        // relabeled table entry at (i, j) is perm[t[inv i][inv j]]
        let mut inv = vec![0 as Elem; n];
        for (x, &p) in perm.iter().enumerate() {
            inv[p as usize] = x as Elem;
        }
        let relabeled = add.len();
        let mut cand = Vec::with_capacity(2 * relabeled);
        for t in [add, mul] {
            for i in 0..n {
                for j in 0..n {
                    cand.push(perm[t[inv[i] as usize * n + inv[j] as usize] as usize]);
                }
            }
        }
        cand >= key
    })
}

/// Streams every dioid on `{0..n}` with zero 0 and one 1 (the trivial
/// algebra for `n = 1`), order by order. With `iso_reject`, only the
/// canonical representative of each isomorphism class is produced.
pub fn enumerate_dioids(
    n: usize,
    iso_reject: bool,
    mut callback: impl FnMut(FiniteAlgebra) -> ControlFlow<()>,
) -> Result<EnumStats> {
    let mut stats = EnumStats::default();
    for (oi, add) in semilattice_orders(n)?.into_iter().enumerate() {
        stats.orders += 1;
        let mut k = 0;
        let mut iso_rejected = 0;
        let flow = mul_completions(n, &add, &mut stats, &mut |mul| {
            if iso_reject && !is_canonical(n, &add, &mul) {
                iso_rejected += 1;
                return ControlFlow::Continue(());
            }
            k += 1;
            callback(dioid_from_tables(n, format!("d{n}-o{oi}-m{k}"), add.clone(), mul))
        });
        stats.iso_rejected += iso_rejected;
        if flow.is_break() {
            break;
        }
    }
    Ok(stats)
}

pub(crate) fn dioid_from_tables(n: usize, name: alloc::string::String, add: Vec<Elem>, mul: Vec<Elem>) -> FiniteAlgebra {
    let names = match n {
        1 => vec!["0".to_string()],
        _ => {
            let mut v = vec!["0".to_string(), "1".to_string()];
            v.extend((2..n).map(|i| ((b'a' + (i - 2) as u8) as char).to_string()));
            v
        }
    };
    let one = if n == 1 { 0 } else { 1 };
    FiniteAlgebra::from_tables(name, names, add, mul, 0, one)
}
