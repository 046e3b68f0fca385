//! Executable encodings of the domain, antidomain and test-dioid axioms and
//! their derived statements, checked exhaustively on finite algebras.
//!
//! Every failure carries the lexicographically smallest failing assignment
//! (in index order of the quantified variables), so reports are stable.

mod catalogue;
mod eval;
mod suites;

use alloc::string::String;
use alloc::vec::Vec;

pub use catalogue::{
    parse_laws, Arity, LawId, UnknownLaw, ANTIDOMAIN, DERIVED, DIOID, DOMAIN_SEMIRING, GROUPS, PREDOMAIN,
    QUANTALE, TDD,
};
pub use eval::{check, holds, Checker};
pub use suites::{coincidence_check, derived_suite, quantale_suite, CoincidenceReport, Finding, QuantaleReport};

use crate::algebra::Elem;
use crate::subset::Subset;

/// Ternary laws on carriers above this size are sampled unless exhaustive
/// checking is requested.
pub const EXHAUSTIVE_TERNARY_LIMIT: usize = 64;
/// Default number of sampled ternary assignments.
pub const DEFAULT_SAMPLES: u64 = 100_000;
/// Subset-quantified quantale laws enumerate all subsets up to this size.
pub const SUBSET_LIMIT: usize = 12;
/// Hard ceiling for subset enumeration, even when forced.
pub const SUBSET_HARD_LIMIT: usize = 20;

/// Where `p` ranges in test-quantified laws (`lla`, `d-adj`, `predomain-2`, …).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TestDomain {
    /// The algebra's designated test set.
    Designated,
    /// Subidentities complemented within `S₁`.
    Complemented,
    /// All of `S₁`.
    Subidentities,
    /// The fixpoints of `dom`.
    DomainAlgebra,
}

impl TestDomain {
    pub fn describe(self) -> &'static str {
        match self {
            TestDomain::Designated => "designated tests",
            TestDomain::Complemented => "complemented subidentities",
            TestDomain::Subidentities => "S1",
            TestDomain::DomainAlgebra => "S_d",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    /// Overrides the default test domain (designated tests, else complemented subidentities).
    pub test_domain: Option<TestDomain>,
    /// Disables sampling of ternary laws and forces subset enumeration (up to [`SUBSET_HARD_LIMIT`]).
    pub exhaustive: bool,
    pub seed: u64,
    pub samples: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { test_domain: None, exhaustive: false, seed: 0, samples: DEFAULT_SAMPLES }
    }
}

/// How ternary laws were covered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coverage {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

/// How subset-quantified laws were covered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubsetCoverage {
    AllSubsets,
    /// Binary and nullary instances only; equivalent on finite lattices for
    /// sup-preservation and used as the fallback for large carriers.
    BinaryReduction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Elem(Elem),
    Bool(bool),
    Set(Subset),
}

/// A concrete failing assignment plus the evaluated terms that disagree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witness {
    pub vars: Vec<(&'static str, Value)>,
    pub values: Vec<(&'static str, Value)>,
    pub note: Option<&'static str>,
}

impl Witness {
    pub fn new() -> Self {
        Witness::default()
    }

    pub fn var(mut self, name: &'static str, x: Elem) -> Self {
        self.vars.push((name, Value::Elem(x)));
        self
    }

    pub fn set_var(mut self, name: &'static str, x: Subset) -> Self {
        self.vars.push((name, Value::Set(x)));
        self
    }

    pub fn val(mut self, term: &'static str, x: Elem) -> Self {
        self.values.push((term, Value::Elem(x)));
        self
    }

    pub fn truth(mut self, term: &'static str, b: bool) -> Self {
        self.values.push((term, Value::Bool(b)));
        self
    }

    pub fn note(mut self, note: &'static str) -> Self {
        self.note = Some(note);
        self
    }

    /// The element bound to a variable, if it is an element.
    pub fn elem(&self, name: &str) -> Option<Elem> {
        self.vars.iter().chain(&self.values).find_map(|(n, v)| match v {
            Value::Elem(x) if *n == name => Some(*x),
            _ => None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LawStatus {
    Pass,
    Fail(Witness),
    /// A required table or structure is missing.
    NotApplicable(&'static str),
    /// A derived law failed on a certified structure: an implementation bug.
    Bug(Witness),
}

impl LawStatus {
    pub fn passed(&self) -> bool {
        matches!(self, LawStatus::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            LawStatus::Fail(w) | LawStatus::Bug(w) => Some(w),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawEntry {
    pub law: LawId,
    pub status: LawStatus,
}

/// Class memberships implied by the evaluated laws; `None` when some
/// constituent law was not evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub is_dioid: Option<bool>,
    pub is_test_dioid: Option<bool>,
    pub is_tdd: Option<bool>,
    pub is_domain_semiring: Option<bool>,
    pub is_antidomain_semiring: Option<bool>,
    pub is_full: Option<bool>,
    pub is_boolean_quantale: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub algebra: String,
    pub entries: Vec<LawEntry>,
    /// The range of `p` used by test-quantified laws, when any was evaluated.
    pub test_domain: Option<(TestDomain, Subset)>,
    pub subidentities: Subset,
    pub ternary: Coverage,
    pub subsets: Option<SubsetCoverage>,
    pub summary: Summary,
}

impl LawReport {
    pub fn status(&self, law: LawId) -> Option<&LawStatus> {
        self.entries.iter().find(|e| e.law == law).map(|e| &e.status)
    }

    pub fn passed(&self, law: LawId) -> bool {
        self.status(law).is_some_and(LawStatus::passed)
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.status.passed())
    }

    pub fn has_bug(&self) -> bool {
        self.entries.iter().any(|e| matches!(e.status, LawStatus::Bug(_)))
    }

    pub(crate) fn summarize(&mut self) {
        let all = |laws: &[&[LawId]]| -> Option<bool> {
            let mut complete = true;
            for &group in laws {
                for &l in group {
                    match self.status(l) {
                        Some(LawStatus::Pass) => {}
                        Some(LawStatus::Fail(_)) | Some(LawStatus::Bug(_)) => return Some(false),
                        _ => complete = false,
                    }
                }
            }
            complete.then_some(true)
        };
        use LawId::*;
        self.summary = Summary {
            is_dioid: all(&[DIOID]),
            is_test_dioid: all(&[DIOID, &[TestDioid]]),
            is_tdd: all(&[DIOID, TDD]),
            is_domain_semiring: all(&[DIOID, DOMAIN_SEMIRING]),
            is_antidomain_semiring: all(&[DIOID, ANTIDOMAIN]),
            is_full: all(&[DIOID, &[Full]]),
            is_boolean_quantale: all(&[DIOID, &[BooleanMonoid]]),
        };
    }
}
