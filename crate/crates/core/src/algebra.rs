//! Operation-table representation of finite algebras.
//!
//! Elements are dense indices `0..n`; every table is a flat row-major array.
//! A [`FiniteAlgebra`] is only obtainable through validation, so its tables
//! are always total and closed. Whether it is actually a dioid is a question
//! for [`crate::laws`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::subset::Subset;

/// Index of a carrier element.
pub type Elem = u16;

/// Largest carrier accepted by validation.
pub const MAX_CARRIER: usize = 1 << 13;

/// Unchecked input for [`FiniteAlgebra`]; indices are plain `usize` so that
/// malformed entries survive until [`validate`] can report them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawAlgebra {
    pub name: String,
    pub names: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
    pub dom: Option<Vec<usize>>,
    pub adom: Option<Vec<usize>>,
    pub testset: Option<Vec<usize>>,
    pub compl: Option<Vec<(usize, usize)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Issue {
    #[error("empty carrier")]
    EmptyCarrier,
    #[error("carrier of {0} elements exceeds the supported maximum")]
    TooLarge(usize),
    #[error("{expected} elements declared but {found} display names given")]
    NameCount { expected: usize, found: usize },
    #[error("non-square table `{table}`")]
    NonSquareTable { table: &'static str },
    #[error("out-of-range index {value} in `{table}` at ({row}, {col})")]
    OutOfRange { table: &'static str, row: usize, col: usize, value: usize },
    #[error("out-of-range index {value} for `{what}`")]
    ConstantOutOfRange { what: &'static str, value: usize },
    #[error("`{table}` has {found} entries, expected {expected}")]
    VectorLength { table: &'static str, expected: usize, found: usize },
    #[error("out-of-range index {value} in `{table}` at position {pos}")]
    VectorOutOfRange { table: &'static str, pos: usize, value: usize },
    #[error("complement given but no test set designated")]
    ComplWithoutTestset,
    #[error("compl defined outside testset at element {0}")]
    ComplOutsideTestset(usize),
    #[error("compl assigns element {0} twice")]
    ComplDuplicate(usize),
    #[error("compl is not an involution at element {0}")]
    ComplNotInvolution(usize),
}

/// All malformed entries found in a [`RawAlgebra`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Error)]
#[error("invalid algebra: {}", self.issues.iter().map(|i| format!("{i}")).collect::<Vec<_>>().join("; "))]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

/// Collects every well-formedness problem of `raw`.
pub fn validate(raw: &RawAlgebra) -> ValidationReport {
    let mut issues = Vec::new();
    let n = raw.add.len();
    if n == 0 {
        issues.push(Issue::EmptyCarrier);
        return ValidationReport { issues };
    }
    if n > MAX_CARRIER {
        issues.push(Issue::TooLarge(n));
        return ValidationReport { issues };
    }
    if raw.names.len() != n {
        issues.push(Issue::NameCount { expected: n, found: raw.names.len() });
    }
    for (table, rows) in [("add", &raw.add), ("mul", &raw.mul)] {
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            issues.push(Issue::NonSquareTable { table });
            continue;
        }
        for (row, r) in rows.iter().enumerate() {
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    issues.push(Issue::OutOfRange { table, row, col, value });
                }
            }
        }
    }
    for (what, value) in [("zero", raw.zero), ("one", raw.one)] {
        if value >= n {
            issues.push(Issue::ConstantOutOfRange { what, value });
        }
    }
    for (table, v) in [("dom", &raw.dom), ("adom", &raw.adom)] {
        if let Some(v) = v {
            if v.len() != n {
                issues.push(Issue::VectorLength { table, expected: n, found: v.len() });
            }
            for (pos, &value) in v.iter().enumerate() {
                if value >= n {
                    issues.push(Issue::VectorOutOfRange { table, pos, value });
                }
            }
        }
    }
    if let Some(t) = &raw.testset {
        for (pos, &value) in t.iter().enumerate() {
            if value >= n {
                issues.push(Issue::VectorOutOfRange { table: "tests", pos, value });
            }
        }
    }
    if let Some(pairs) = &raw.compl {
        match &raw.testset {
            None => issues.push(Issue::ComplWithoutTestset),
            Some(tests) => {
                let mut map: Vec<Option<usize>> = alloc::vec![None; n];
                for &(p, q) in pairs {
                    for x in [p, q] {
                        if !tests.contains(&x) {
                            issues.push(Issue::ComplOutsideTestset(x));
                        }
                    }
                    if p < n {
                        if map[p].is_some() {
                            issues.push(Issue::ComplDuplicate(p));
                        }
                        map[p] = Some(q);
                    }
                }
                for &(p, q) in pairs {
                    if p < n && q < n && map[q] != Some(p) {
                        issues.push(Issue::ComplNotInvolution(p));
                    }
                }
            }
        }
    }
    ValidationReport { issues }
}

/// A validated finite algebra with binary `add`/`mul`, constants, and the
/// optional unary tables used by the domain axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    name: String,
    names: Vec<String>,
    n: usize,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    zero: Elem,
    one: Elem,
    dom: Option<Vec<Elem>>,
    adom: Option<Vec<Elem>>,
    testset: Option<Subset>,
    compl: Option<Vec<Option<Elem>>>,
}

impl TryFrom<RawAlgebra> for FiniteAlgebra {
    type Error = ValidationReport;

    fn try_from(raw: RawAlgebra) -> Result<Self, Self::Error> {
        let report = validate(&raw);
        if !report.is_valid() {
            return Err(report);
        }
        let n = raw.add.len();
        let flat = |t: &[Vec<usize>]| t.iter().flatten().map(|&v| v as Elem).collect::<Vec<_>>();
        let vector = |v: &Option<Vec<usize>>| v.as_ref().map(|v| v.iter().map(|&x| x as Elem).collect());
        let compl = raw.compl.as_ref().map(|pairs| {
            let mut map = alloc::vec![None; n];
            for &(p, q) in pairs {
                map[p] = Some(q as Elem);
            }
            map
        });
        Ok(FiniteAlgebra {
            name: raw.name,
            names: raw.names,
            n,
            add: flat(&raw.add),
            mul: flat(&raw.mul),
            zero: raw.zero as Elem,
            one: raw.one as Elem,
            dom: vector(&raw.dom),
            adom: vector(&raw.adom),
            testset: raw.testset.map(|t| Subset::from_elems(n, t.into_iter().map(|x| x as Elem))),
            compl,
        })
    }
}

impl FiniteAlgebra {
    /// Builds directly from flat tables. Panics on malformed input; meant
    /// for constructors whose tables are correct by construction.
    pub(crate) fn from_tables(
        name: impl Into<String>,
        names: Vec<String>,
        add: Vec<Elem>,
        mul: Vec<Elem>,
        zero: Elem,
        one: Elem,
    ) -> Self {
        let n = names.len();
        assert!(n > 0 && add.len() == n * n && mul.len() == n * n);
        assert!(add.iter().chain(&mul).all(|&v| (v as usize) < n));
        FiniteAlgebra {
            name: name.into(),
            names,
            n,
            add,
            mul,
            zero,
            one,
            dom: None,
            adom: None,
            testset: None,
            compl: None,
        }
    }

    pub fn to_raw(&self) -> RawAlgebra {
        let rows = |t: &[Elem]| t.chunks(self.n).map(|r| r.iter().map(|&v| v as usize).collect()).collect();
        let vector = |v: &Option<Vec<Elem>>| v.as_ref().map(|v| v.iter().map(|&x| x as usize).collect());
        RawAlgebra {
            name: self.name.clone(),
            names: self.names.clone(),
            add: rows(&self.add),
            mul: rows(&self.mul),
            zero: self.zero as usize,
            one: self.one as usize,
            dom: vector(&self.dom),
            adom: vector(&self.adom),
            testset: self.testset.as_ref().map(|t| t.iter().map(usize::from).collect()),
            compl: self.compl.as_ref().map(|m| {
                m.iter()
                    .enumerate()
                    .filter_map(|(p, q)| q.map(|q| (p, q as usize)))
                    .collect()
            }),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        0..self.n as Elem
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elem_name(&self, x: Elem) -> &str {
        &self.names[x as usize]
    }

    pub fn find(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|s| s == name).map(|i| i as Elem)
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.add[x as usize * self.n + y as usize]
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul[x as usize * self.n + y as usize]
    }

    /// `x ≤ y` in the additive order, i.e. `x + y = y`.
    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.add(x, y) == y
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn add_table(&self) -> &[Elem] {
        &self.add
    }

    pub fn mul_table(&self) -> &[Elem] {
        &self.mul
    }

    pub fn dom(&self) -> Option<&[Elem]> {
        self.dom.as_deref()
    }

    pub fn adom(&self) -> Option<&[Elem]> {
        self.adom.as_deref()
    }

    pub fn testset(&self) -> Option<&Subset> {
        self.testset.as_ref()
    }

    pub fn compl(&self) -> Option<&[Option<Elem>]> {
        self.compl.as_deref()
    }

    pub fn is_degenerate(&self) -> bool {
        self.zero == self.one
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Installs (or replaces) the domain table.
    pub fn with_dom(mut self, dom: Vec<Elem>) -> Result<Self, ValidationReport> {
        check_vector("dom", self.n, &dom)?;
        self.dom = Some(dom);
        Ok(self)
    }

    pub fn with_adom(mut self, adom: Vec<Elem>) -> Result<Self, ValidationReport> {
        check_vector("adom", self.n, &adom)?;
        self.adom = Some(adom);
        Ok(self)
    }

    pub fn without_dom(mut self) -> Self {
        self.dom = None;
        self
    }

    pub fn without_adom(mut self) -> Self {
        self.adom = None;
        self
    }

    /// Designates a test algebra; any previous complement table is dropped.
    pub fn with_testset(mut self, tests: Subset) -> Self {
        assert_eq!(tests.universe(), self.n);
        self.testset = Some(tests);
        self.compl = None;
        self
    }

    pub fn without_testset(mut self) -> Self {
        self.testset = None;
        self.compl = None;
        self
    }

    /// Relabels elements: element `x` of `self` becomes `perm[x]`.
    pub fn permuted(&self, perm: &[Elem]) -> FiniteAlgebra {
        let n = self.n;
        assert_eq!(perm.len(), n);
        let mut names = alloc::vec![String::new(); n];
        let mut add = alloc::vec![0; n * n];
        let mut mul = alloc::vec![0; n * n];
        for x in 0..n {
            names[perm[x] as usize] = self.names[x].clone();
            for y in 0..n {
                let (px, py) = (perm[x] as usize, perm[y] as usize);
                add[px * n + py] = perm[self.add[x * n + y] as usize];
                mul[px * n + py] = perm[self.mul[x * n + y] as usize];
            }
        }
        let map_vec = |v: &Option<Vec<Elem>>| {
            v.as_ref().map(|v| {
                let mut out = alloc::vec![0; n];
                for x in 0..n {
                    out[perm[x] as usize] = perm[v[x] as usize];
                }
                out
            })
        };
        FiniteAlgebra {
            name: self.name.clone(),
            names,
            n,
            add,
            mul,
            zero: perm[self.zero as usize],
            one: perm[self.one as usize],
            dom: map_vec(&self.dom),
            adom: map_vec(&self.adom),
            testset: self.testset.as_ref().map(|t| Subset::from_elems(n, t.iter().map(|x| perm[x as usize]))),
            compl: self.compl.as_ref().map(|c| {
                let mut out = alloc::vec![None; n];
                for x in 0..n {
                    out[perm[x] as usize] = c[x].map(|q| perm[q as usize]);
                }
                out
            }),
        }
    }
}

fn check_vector(table: &'static str, n: usize, v: &[Elem]) -> Result<(), ValidationReport> {
    let mut issues = Vec::new();
    if v.len() != n {
        issues.push(Issue::VectorLength { table, expected: n, found: v.len() });
    }
    for (pos, &value) in v.iter().enumerate() {
        if value as usize >= n {
            issues.push(Issue::VectorOutOfRange { table, pos, value: value as usize });
        }
    }
    if issues.is_empty() {
        Ok(())
    } else {
        Err(ValidationReport { issues })
    }
}
