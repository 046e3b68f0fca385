use alloc::string::String;
use alloc::vec::Vec;

/// Every individually checkable law. Declaration order is catalogue order,
/// which is also the order of entries in a [`super::LawReport`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LawId {
    AddAssoc,
    AddComm,
    AddIdem,
    AddUnit,
    MulAssoc,
    MulUnit,
    MulZero,
    DistribLeft,
    DistribRight,
    TestDioid,
    TestsMeet,
    GaloisAux1,
    GaloisAux2,
    DomRange,
    Predomain1,
    Predomain2,
    Locality,
    WeakLocality,
    Lla,
    DAdj,
    D1,
    D2,
    D3,
    D4,
    D5,
    A1,
    A2,
    A3,
    Full,
    DomBoolean,
    BooleanMonoid,
    QuantaleDSup,
    QuantaleDInf,
    QuantaleDInfMul,
    EmptyInfBoundary,
    MeetOneFix,
    MeetOneFixSd,
    DStrong,
    DOne,
    DMonotone,
    DTestMul,
    DTop,
    DIdem,
    DFixImage,
    LlaSd,
    DAdjSd,
    SdLattice,
}

/// How a law is quantified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arity {
    /// Over the carrier, with the given number of variables.
    Elements(u8),
    /// One variable `x` over the carrier and `p` over the test domain.
    ElementAndTest,
    /// Over subsets of the carrier (with a binary fallback).
    Subsets,
    /// A statement about a derived subset.
    Structural,
}

use LawId::*;

impl LawId {
    pub const ALL: [LawId; 47] = [
        AddAssoc, AddComm, AddIdem, AddUnit, MulAssoc, MulUnit, MulZero, DistribLeft, DistribRight,
        TestDioid, TestsMeet, GaloisAux1, GaloisAux2, DomRange, Predomain1, Predomain2, Locality,
        WeakLocality, Lla, DAdj, D1, D2, D3, D4, D5, A1, A2, A3, Full, DomBoolean, BooleanMonoid,
        QuantaleDSup, QuantaleDInf, QuantaleDInfMul, EmptyInfBoundary, MeetOneFix, MeetOneFixSd,
        DStrong, DOne, DMonotone, DTestMul, DTop, DIdem, DFixImage, LlaSd, DAdjSd, SdLattice,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AddAssoc => "add-assoc",
            AddComm => "add-comm",
            AddIdem => "add-idem",
            AddUnit => "add-unit",
            MulAssoc => "mul-assoc",
            MulUnit => "mul-unit",
            MulZero => "mul-zero",
            DistribLeft => "distrib-left",
            DistribRight => "distrib-right",
            TestDioid => "test-dioid",
            TestsMeet => "tests-meet",
            GaloisAux1 => "galois-aux-1",
            GaloisAux2 => "galois-aux-2",
            DomRange => "dom-range",
            Predomain1 => "predomain-1",
            Predomain2 => "predomain-2",
            Locality => "locality",
            WeakLocality => "weak-locality",
            Lla => "lla",
            DAdj => "d-adj",
            D1 => "d1",
            D2 => "d2",
            D3 => "d3",
            D4 => "d4",
            D5 => "d5",
            A1 => "a1",
            A2 => "a2",
            A3 => "a3",
            Full => "full",
            DomBoolean => "dom-boolean",
            BooleanMonoid => "boolean-monoid",
            QuantaleDSup => "quantale-d-sup",
            QuantaleDInf => "quantale-d-inf",
            QuantaleDInfMul => "quantale-d-inf-mul",
            EmptyInfBoundary => "empty-inf-boundary",
            MeetOneFix => "meet-one-fix",
            MeetOneFixSd => "meet-one-fix-sd",
            DStrong => "d-strong",
            DOne => "d-one",
            DMonotone => "d-monotone",
            DTestMul => "d-test-mul",
            DTop => "d-top",
            DIdem => "d-idem",
            DFixImage => "d-fix-image",
            LlaSd => "lla-sd",
            DAdjSd => "d-adj-sd",
            SdLattice => "sd-lattice",
        }
    }

    pub fn from_name(name: &str) -> Option<LawId> {
        LawId::ALL.into_iter().find(|l| l.name() == name)
    }

    /// The law as a formula, with its quantifiers.
    pub fn statement(self) -> &'static str {
        match self {
            AddAssoc => "∀x,y,z. (x+y)+z = x+(y+z)",
            AddComm => "∀x,y. x+y = y+x",
            AddIdem => "∀x. x+x = x",
            AddUnit => "∀x. 0+x = x = x+0",
            MulAssoc => "∀x,y,z. (xy)z = x(yz)",
            MulUnit => "∀x. 1x = x = x1",
            MulZero => "∀x. 0x = 0 = x0",
            DistribLeft => "∀x,y,z. x(y+z) = xy+xz",
            DistribRight => "∀x,y,z. (x+y)z = xz+yz",
            TestDioid => "B is a boolean subalgebra of S₁ bounded by 0,1, closed under ·",
            TestsMeet => "∀p,q∈B. pq = p∧q",
            GaloisAux1 => "∀x, p∈B. x ≤ px ⇔ p'x = 0",
            GaloisAux2 => "∀x, p∈B. x ≤ px ⇔ x ≤ p⊤",
            DomRange => "∀x. d(x) ∈ B",
            Predomain1 => "∀x. x ≤ d(x)x",
            Predomain2 => "∀x, p∈B. d(px) ≤ p",
            Locality => "∀x,y. d(x·d(y)) ≤ d(xy)",
            WeakLocality => "∀x,y. d(xy) ≤ d(x·d(y))",
            Lla => "∀x, p∈B. d(x) ≤ p ⇔ x ≤ px",
            DAdj => "∀x, p∈B. d(x) ≤ p ⇔ x ≤ p⊤",
            D1 => "∀x. x ≤ d(x)x",
            D2 => "∀x,y. d(x·d(y)) = d(xy)",
            D3 => "∀x. d(x) ≤ 1",
            D4 => "d(0) = 0",
            D5 => "∀x,y. d(x+y) = d(x)+d(y)",
            A1 => "∀x. ad(x)x = 0",
            A2 => "∀x. ad(x) + ad(ad(x)) = 1",
            A3 => "∀x,y. ad(xy) ≤ ad(x·ad(ad(y)))",
            Full => "S₁ is a boolean algebra bounded by 0,1 with + as sup and · as inf",
            DomBoolean => "S_d is a boolean subalgebra of S₁",
            BooleanMonoid => "(S,+,∧,0,⊤) is a boolean algebra",
            QuantaleDSup => "∀X⊆S. d(Sup X) = Sup d(X)",
            QuantaleDInf => "∀X⊆S. d(Inf X) ≤ Inf d(X)",
            QuantaleDInfMul => "∀x, ∅≠Y⊆S. d(x)·Inf Y = Inf d(x)Y",
            EmptyInfBoundary => "∀x. d(x)⊤ = ⊤ (the Y=∅ instance of quantale-d-inf-mul)",
            MeetOneFix => "∀x. d(x∧1) = x∧1",
            MeetOneFixSd => "meet-one-fix ⇒ S₁ ⊆ S_d",
            DStrong => "∀x. d(x)x = x",
            DOne => "d(1) = 1",
            DMonotone => "∀x,y. x ≤ y ⇒ d(x) ≤ d(y)",
            DTestMul => "∀x, p∈S_d. d(px) = p·d(x)",
            DTop => "d(⊤) = 1",
            DIdem => "∀x. d(d(x)) = d(x)",
            DFixImage => "S_d = d(S)",
            LlaSd => "∀x, p∈S_d. d(x) ≤ p ⇔ x ≤ px",
            DAdjSd => "∀x, p∈S_d. d(x) ≤ p ⇔ x ≤ p⊤",
            SdLattice => "S_d is a subsemiring and a bounded distributive lattice under +, ·",
        }
    }

    pub fn arity(self) -> Arity {
        match self {
            AddAssoc | MulAssoc | DistribLeft | DistribRight => Arity::Elements(3),
            AddComm | Locality | WeakLocality | D2 | D5 | A3 | DMonotone => Arity::Elements(2),
            AddIdem | AddUnit | MulUnit | MulZero | DomRange | Predomain1 | D1 | D3 | A1 | A2
            | EmptyInfBoundary | MeetOneFix | DStrong | DIdem => Arity::Elements(1),
            D4 | DOne | DTop => Arity::Elements(0),
            TestsMeet | GaloisAux1 | GaloisAux2 | Predomain2 | Lla | DAdj | DTestMul | LlaSd | DAdjSd => {
                Arity::ElementAndTest
            }
            QuantaleDSup | QuantaleDInf | QuantaleDInfMul => Arity::Subsets,
            TestDioid | Full | DomBoolean | BooleanMonoid | MeetOneFixSd | DFixImage | SdLattice => {
                Arity::Structural
            }
        }
    }

    pub fn needs_dom(self) -> bool {
        matches!(
            self,
            DomRange
                | Predomain1
                | Predomain2
                | Locality
                | WeakLocality
                | Lla
                | DAdj
                | D1
                | D2
                | D3
                | D4
                | D5
                | DomBoolean
                | QuantaleDSup
                | QuantaleDInf
                | QuantaleDInfMul
                | EmptyInfBoundary
                | MeetOneFix
                | MeetOneFixSd
        ) || self.is_derived()
    }

    pub fn needs_adom(self) -> bool {
        matches!(self, A1 | A2 | A3)
    }

    /// Quantifies `p` over the test domain.
    pub fn uses_tests(self) -> bool {
        matches!(self, TestDioid | TestsMeet | GaloisAux1 | GaloisAux2 | DomRange | Predomain2 | Lla | DAdj)
    }

    /// Theorems of domain semirings, evaluated by [`super::derived_suite`].
    pub fn is_derived(self) -> bool {
        matches!(self, DStrong | DOne | DMonotone | DTestMul | DTop | DIdem | DFixImage | LlaSd | DAdjSd | SdLattice)
    }
}

impl core::fmt::Display for LawId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

pub const DIOID: &[LawId] = &[AddAssoc, AddComm, AddIdem, AddUnit, MulAssoc, MulUnit, MulZero, DistribLeft, DistribRight];
pub const PREDOMAIN: &[LawId] = &[TestDioid, DomRange, Predomain1, Predomain2];
pub const TDD: &[LawId] = &[TestDioid, DomRange, Predomain1, Predomain2, Locality];
pub const DOMAIN_SEMIRING: &[LawId] = &[D1, D2, D3, D4, D5];
pub const ANTIDOMAIN: &[LawId] = &[A1, A2, A3];
pub const QUANTALE: &[LawId] = &[QuantaleDSup, QuantaleDInf, QuantaleDInfMul, EmptyInfBoundary, MeetOneFix, MeetOneFixSd];
pub const DERIVED: &[LawId] = &[DStrong, DOne, DMonotone, DTestMul, DTop, DIdem, DFixImage, WeakLocality, LlaSd, DAdjSd, SdLattice];

/// Named law groups accepted wherever law lists are parsed.
pub const GROUPS: &[(&str, &[LawId])] = &[
    ("dioid", DIOID),
    ("predomain", PREDOMAIN),
    ("tdd", TDD),
    ("domain-semiring", DOMAIN_SEMIRING),
    ("antidomain", ANTIDOMAIN),
    ("quantale", QUANTALE),
    ("derived", DERIVED),
];

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown law `{0}`")]
pub struct UnknownLaw(pub String);

/// Parses a comma-separated list of law and group names into a sorted,
/// duplicate-free list.
pub fn parse_laws(list: &str) -> Result<Vec<LawId>, UnknownLaw> {
    let mut out = Vec::new();
    for token in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if let Some((_, laws)) = GROUPS.iter().find(|(g, _)| *g == token) {
            out.extend_from_slice(laws);
        } else if let Some(l) = LawId::from_name(token) {
            out.push(l);
        } else {
            return Err(UnknownLaw(token.into()));
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}
