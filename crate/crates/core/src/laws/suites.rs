use alloc::string::String;
use alloc::vec::Vec;

use super::{
    check, CheckOptions, Checker, LawId, LawReport, LawStatus, TestDomain, Witness, ANTIDOMAIN, DERIVED, DIOID,
    DOMAIN_SEMIRING, QUANTALE, TDD,
};
use crate::algebra::{Elem, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::lattice::{complement_in, fixpoints, image, max_boolean_subalgebra};
use crate::subset::Subset;

fn concat(groups: &[&[LawId]]) -> Vec<LawId> {
    groups.iter().flat_map(|g| g.iter().copied()).collect()
}

fn promote_bugs(report: &mut LawReport, theorems: &[LawId]) {
    for e in &mut report.entries {
        if theorems.contains(&e.law) {
            if let LawStatus::Fail(w) = &e.status {
                e.status = LawStatus::Bug(w.clone());
            }
        }
    }
}

/// Theorems of domain semirings. On an algebra certified by the dioid and
/// `d1`–`d5` entries (included in the report), any failure is reported as
/// [`LawStatus::Bug`].
pub fn derived_suite(s: &FiniteAlgebra, opts: &CheckOptions) -> LawReport {
    let mut report = check(s, &concat(&[DIOID, DOMAIN_SEMIRING, DERIVED]), opts);
    if report.summary.is_domain_semiring == Some(true) {
        promote_bugs(&mut report, DERIVED);
    }
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Finding {
    /// Full algebra where the test-dioid-with-domain and domain-semiring verdicts differ.
    CoincidenceMismatch { tdd: bool, domain_semiring: bool },
    /// Test dioid with domain whose test algebra differs from the domain algebra.
    TestsNotDomainAlgebra { element: Elem },
    /// Domain algebra differs from the image of `dom`.
    ImageNotDomainAlgebra { element: Elem },
    /// An element of the largest boolean subalgebra of `S₁` outside `S_d`.
    MaxBooleanNotContained { element: Elem },
    /// `ad := (_)' ∘ dom` violates an antidomain axiom although `S_d` is boolean.
    DerivedAntidomainFails(LawId, Witness),
    /// `adom` satisfies a1–a3 but `(S, S_{ad∘ad}, ad∘ad)` is not a test dioid with domain.
    AntidomainNotTdd(LawId, Witness),
}

/// Cross-check of the two domain axiomatisations on one algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoincidenceReport {
    pub algebra: String,
    /// `dom` was obtained as `ad ∘ ad` because no `dom` table was present.
    pub dom_from_adom: bool,
    pub is_dioid: bool,
    pub subidentities: Subset,
    pub full: Result<(), Witness>,
    /// Test algebra `B`: the complemented subidentities.
    pub tests: Subset,
    pub domain_algebra: Subset,
    pub image: Subset,
    pub tdd: Result<(), (LawId, Witness)>,
    pub domain_semiring: Result<(), (LawId, Witness)>,
    pub domain_algebra_boolean: Result<(), Witness>,
    pub max_boolean: Subset,
    /// a1–a3 for `ad := (_)' ∘ dom`, evaluated when `S_d` is boolean.
    pub derived_antidomain: Option<Result<(), (LawId, Witness)>>,
    /// tdd for `(S, S_{ad∘ad}, ad∘ad)`, evaluated when the given `adom` satisfies a1–a3.
    pub antidomain_tdd: Option<Result<(), (LawId, Witness)>>,
    pub findings: Vec<Finding>,
}

impl CoincidenceReport {
    pub fn is_full(&self) -> bool {
        self.full.is_ok()
    }

    pub fn ok(&self) -> bool {
        self.findings.is_empty()
    }
}

fn first_failure(report: &LawReport) -> Result<(), (LawId, Witness)> {
    for e in &report.entries {
        match &e.status {
            LawStatus::Pass => {}
            LawStatus::Fail(w) | LawStatus::Bug(w) => return Err((e.law, w.clone())),
            LawStatus::NotApplicable(why) => return Err((e.law, Witness::new().note(why))),
        }
    }
    Ok(())
}

/// Evaluates fullness, both domain axiomatisations and the antidomain
/// connection, and records every disagreement with the coincidence results
/// as a [`Finding`].
pub fn coincidence_check(s: &FiniteAlgebra, opts: &CheckOptions) -> Result<CoincidenceReport> {
    let (s, dom_from_adom) = match (s.dom(), s.adom()) {
        (Some(_), _) => (s.clone(), false),
        (None, Some(ad)) => {
            let dom = ad.iter().map(|&a| ad[a as usize]).collect();
            (s.clone().with_dom(dom)?, true)
        }
        (None, None) => return Err(Error::MissingTable("dom")),
    };
    let opts = CheckOptions { test_domain: Some(TestDomain::Complemented), ..opts.clone() };
    let checker = Checker::new(&s, &opts);
    let dom = s.dom().unwrap();

    let dioid = checker.report(DIOID);
    let is_dioid = dioid.all_pass();
    let full_status = checker.evaluate(LawId::Full);
    let full = match full_status {
        LawStatus::Pass => Ok(()),
        other => Err(other.witness().cloned().unwrap_or_default()),
    };
    let tdd = first_failure(&checker.report(&concat(&[DIOID, TDD])));
    let domain_semiring = first_failure(&checker.report(&concat(&[DIOID, DOMAIN_SEMIRING])));
    let domain_algebra = fixpoints(&s, dom);
    let img = image(&s, dom);
    let domain_algebra_boolean = match checker.evaluate(LawId::DomBoolean) {
        LawStatus::Pass => Ok(()),
        other => Err(other.witness().cloned().unwrap_or_default()),
    };
    let (_, tests) = checker.tests();
    let tests = tests.clone();
    let max_boolean = max_boolean_subalgebra(&s)?;

    let mut findings = Vec::new();
    if is_dioid && full.is_ok() && tdd.is_ok() != domain_semiring.is_ok() {
        findings.push(Finding::CoincidenceMismatch { tdd: tdd.is_ok(), domain_semiring: domain_semiring.is_ok() });
    }
    if tdd.is_ok() {
        if let Some(e) = s.elements().find(|&x| tests.contains(x) != domain_algebra.contains(x)) {
            findings.push(Finding::TestsNotDomainAlgebra { element: e });
        }
        if let Some(e) = s.elements().find(|&x| img.contains(x) != domain_algebra.contains(x)) {
            findings.push(Finding::ImageNotDomainAlgebra { element: e });
        }
    }
    let mut derived_antidomain = None;
    if domain_semiring.is_ok() {
        if let Some(e) = max_boolean.first_outside(&domain_algebra) {
            findings.push(Finding::MaxBooleanNotContained { element: e });
        }
        if domain_algebra_boolean.is_ok() {
            let ad: Vec<Elem> = dom
                .iter()
                .map(|&dx| complement_in(&s, &domain_algebra, dx).expect("boolean domain algebra is complemented"))
                .collect();
            let with_ad = s.clone().with_adom(ad)?;
            let verdict = first_failure(&check(&with_ad, ANTIDOMAIN, &opts));
            if let Err((law, w)) = &verdict {
                findings.push(Finding::DerivedAntidomainFails(*law, w.clone()));
            }
            derived_antidomain = Some(verdict);
        }
    }
    let mut antidomain_tdd = None;
    if let Some(ad) = s.adom() {
        if is_dioid && check(&s, ANTIDOMAIN, &opts).all_pass() {
            let dd: Vec<Elem> = ad.iter().map(|&a| ad[a as usize]).collect();
            let b = fixpoints(&s, &dd);
            let derived = s.clone().with_dom(dd)?.with_testset(b);
            let designated = CheckOptions { test_domain: Some(TestDomain::Designated), ..opts.clone() };
            let verdict = first_failure(&check(&derived, TDD, &designated));
            if let Err((law, w)) = &verdict {
                findings.push(Finding::AntidomainNotTdd(*law, w.clone()));
            }
            antidomain_tdd = Some(verdict);
        }
    }

    Ok(CoincidenceReport {
        algebra: s.name().into(),
        dom_from_adom,
        is_dioid,
        subidentities: checker.subidentities().clone(),
        full,
        tests,
        domain_algebra,
        image: img,
        tdd,
        domain_semiring,
        domain_algebra_boolean,
        max_boolean,
        derived_antidomain,
        antidomain_tdd,
        findings,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantaleReport {
    pub report: LawReport,
    /// Certified domain quantale (dioid and d1–d5 hold).
    pub certified: bool,
    /// Every `x` with `d(x)⊤ ≠ ⊤`, paired with `d(x)⊤`.
    pub boundary: Vec<(Elem, Elem)>,
    pub top: Option<Elem>,
    pub domain_algebra_is_s1: bool,
}

impl QuantaleReport {
    /// No lemma property failed on a certified domain quantale. The empty-Y
    /// boundary and meet-one-fix are probes and never count.
    pub fn ok(&self) -> bool {
        !self.report.has_bug()
    }
}

/// Sup/inf interaction of `dom` on the finite quantale `S`, the empty-Y
/// boundary probe, and the meet-one-fix implication.
pub fn quantale_suite(s: &FiniteAlgebra, opts: &CheckOptions) -> QuantaleReport {
    let checker = Checker::new(s, opts);
    let mut report = checker.report(&concat(&[DIOID, DOMAIN_SEMIRING, QUANTALE]));
    let certified = report.summary.is_domain_semiring == Some(true);
    if certified {
        promote_bugs(
            &mut report,
            &[LawId::QuantaleDSup, LawId::QuantaleDInf, LawId::QuantaleDInfMul, LawId::MeetOneFixSd],
        );
    }
    let top = checker.lattice().map(|lv| lv.top());
    let boundary = match (s.dom(), top) {
        (Some(d), Some(top)) => s
            .elements()
            .map(|x| (x, s.mul(d[x as usize], top)))
            .filter(|&(_, v)| v != top)
            .collect(),
        _ => Vec::new(),
    };
    let domain_algebra_is_s1 = checker.domain_algebra().is_some_and(|sd| sd == checker.subidentities());
    QuantaleReport { report, certified, boundary, top, domain_algebra_is_s1 }
}
