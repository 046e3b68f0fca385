use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Elem, FiniteAlgebra};

/// A finite set of atoms with a partial composition (a small category seen
/// as its set of arrows), the identity atoms, and the identity at the source
/// of each atom. Its powerset is a boolean quantale with domain.
pub(crate) struct AtomSystem {
    pub names: Vec<String>,
    /// `compose[a * k + b]`, defined when the target of `a` meets the source of `b`.
    pub compose: Vec<Option<usize>>,
    pub source_unit: Vec<usize>,
    pub units: u32,
}

pub(crate) const MAX_ATOMS: usize = 12;

/// Expands atoms into the powerset algebra: elements are bitmasks, `+` is
/// union, `·` the lifted composition, `dom`/`adom` via sources.
pub(crate) fn expand(name: &str, sys: &AtomSystem) -> FiniteAlgebra {
    let k = sys.names.len();
    assert!(k <= MAX_ATOMS);
    let n = 1usize << k;

    // row[a][Q] = { a;q | q ∈ Q }
    let mut row = vec![0u32; k * n];
    for a in 0..k {
        for q in 1..n {
            let low = q.trailing_zeros() as usize;
            let bit = sys.compose[a * k + low].map_or(0, |c| 1u32 << c);
            row[a * n + q] = row[a * n + (q & (q - 1))] | bit;
        }
    }

    let mut add = vec![0 as Elem; n * n];
    let mut mul = vec![0 as Elem; n * n];
    for p in 0..n {
        for q in 0..n {
            add[p * n + q] = (p | q) as Elem;
            let mut acc = 0u32;
            let mut rest = p;
            while rest != 0 {
                let a = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                acc |= row[a * n + q];
            }
            mul[p * n + q] = acc as Elem;
        }
    }

    let dom: Vec<Elem> = (0..n)
        .map(|p| {
            (0..k)
                .filter(|&a| p >> a & 1 == 1)
                .fold(0u32, |acc, a| acc | 1 << sys.source_unit[a]) as Elem
        })
        .collect();
    let adom: Vec<Elem> = dom.iter().map(|&d| (sys.units & !(d as u32)) as Elem).collect();

    let names = (0..n).map(|p| set_name(&sys.names, p)).collect();
    FiniteAlgebra::from_tables(name, names, add, mul, 0, sys.units as Elem)
        .with_dom(dom)
        .and_then(|s| s.with_adom(adom))
        .expect("powerset tables are in range")
}

fn set_name(atoms: &[String], mask: usize) -> String {
    let mut s = String::from("{");
    let mut first = true;
    for (i, a) in atoms.iter().enumerate() {
        if mask >> i & 1 == 1 {
            if !first {
                s.push(',');
            }
            s.push_str(a);
            first = false;
        }
    }
    s.push('}');
    s
}
