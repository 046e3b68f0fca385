use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::path::{path_algebra, Dag};
use super::relation::rel_algebra;
use crate::algebra::{Elem, FiniteAlgebra};
use crate::error::{Error, Result};

pub const BUILTINS: [&str; 6] = ["chain3-id", "chain3-d01", "nonlocal4", "weakdom4", "rel2", "pathdag3"];

fn tables(n: usize, add: impl Fn(Elem, Elem) -> Elem, mul: impl Fn(Elem, Elem) -> Elem) -> (Vec<Elem>, Vec<Elem>) {
    let cells = || (0..n as Elem).flat_map(|x| (0..n as Elem).map(move |y| (x, y)));
    (cells().map(|(x, y)| add(x, y)).collect(), cells().map(|(x, y)| mul(x, y)).collect())
}

fn names(ns: &[&str]) -> Vec<String> {
    ns.iter().map(|s| s.to_string()).collect()
}

/// The chain `0 < a < 1` with meet as multiplication.
fn chain3(name: &str) -> FiniteAlgebra {
    let (add, mul) = tables(3, Elem::max, Elem::min);
    FiniteAlgebra::from_tables(name, names(&["0", "a", "1"]), add, mul, 0, 2)
}

/// Diamond `{bottom, a, 1, ⊤}` with `a` and `1` incomparable; `aa` is the
/// only free product besides those forced by `a⊤ = ⊤a = a`, `⊤⊤ = ⊤`.
fn diamond(name: &str, bottom: &str, aa: Elem) -> FiniteAlgebra {
    const B: Elem = 0;
    const A: Elem = 1;
    const ONE: Elem = 2;
    const TOP: Elem = 3;
    let join = |x: Elem, y: Elem| match (x, y) {
        (B, y) => y,
        (x, B) => x,
        (x, y) if x == y => x,
        _ => TOP,
    };
    let mul = |x: Elem, y: Elem| match (x, y) {
        (B, _) | (_, B) => B,
        (ONE, y) => y,
        (x, ONE) => x,
        (A, A) => aa,
        (TOP, TOP) => TOP,
        _ => A,
    };
    let (add, mul) = tables(4, join, mul);
    FiniteAlgebra::from_tables(name, names(&[bottom, "a", "1", "⊤"]), add, mul, B, ONE)
}

/// The one-element algebra (`0 = 1`).
pub fn trivial_algebra() -> FiniteAlgebra {
    FiniteAlgebra::from_tables("trivial", names(&["0"]), alloc::vec![0], alloc::vec![0], 0, 0)
        .with_dom(alloc::vec![0])
        .and_then(|s| s.with_adom(alloc::vec![0]))
        .unwrap()
}

/// Named example structures.
///
/// * `chain3-id`: chain `0 < a < 1`, meet as product, `dom = id`.
/// * `chain3-d01`: same dioid, `dom: 0↦0, a↦1, 1↦1` and `adom: 0↦1, a↦0, 1↦0`.
/// * `nonlocal4`: diamond `{0,a,1,⊤}`, `aa = 0`, `dom` sends all nonzero elements to 1.
/// * `weakdom4`: diamond `{⊥,a,1,⊤}`, `aa = a`, no domain table.
/// * `rel2`: relations over a two-element set.
/// * `pathdag3`: path sets over `u →e1 v →e2 w`.
pub fn builtin(name: &str) -> Result<FiniteAlgebra> {
    let s = match name {
        "chain3-id" => chain3(name).with_dom(alloc::vec![0, 1, 2])?,
        "chain3-d01" => chain3(name).with_dom(alloc::vec![0, 2, 2])?.with_adom(alloc::vec![2, 0, 0])?,
        "nonlocal4" => diamond(name, "0", 0).with_dom(alloc::vec![0, 2, 2, 2])?,
        "weakdom4" => diamond(name, "⊥", 1),
        "rel2" => rel_algebra(2)?.renamed(name),
        "pathdag3" => path_algebra(&pathdag3_graph())?.renamed(name),
        _ => return Err(Error::UnknownBuiltin(name.to_string())),
    };
    Ok(s)
}

pub(crate) fn pathdag3_graph() -> Dag {
    Dag::new("pathdag3", &["u", "v", "w"], &[("e1", "u", "v"), ("e2", "v", "w")]).unwrap()
}
