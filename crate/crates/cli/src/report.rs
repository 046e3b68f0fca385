//! Plain-text rendering of law reports and suite results.

use std::fmt::Write;

use domsr_core::laws::{
    CoincidenceReport, Coverage, Finding, LawId, LawReport, LawStatus, QuantaleReport, SubsetCoverage, Value, Witness,
};
use domsr_core::lattice::complemented_subidentities;
use domsr_core::{FiniteAlgebra, Subset};

pub fn set(s: &FiniteAlgebra, xs: &Subset) -> String {
    let names: Vec<&str> = xs.iter().map(|x| s.elem_name(x)).collect();
    format!("{{{}}}", names.join(","))
}

fn value(s: &FiniteAlgebra, v: &Value) -> String {
    match v {
        Value::Elem(x) => s.elem_name(*x).to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Set(xs) => set(s, xs),
    }
}

/// `x=a y=a; d(x·d(y))=1 d(xy)=0 (note)`.
pub fn witness(s: &FiniteAlgebra, w: &Witness) -> String {
    let part = |vs: &[(&str, Value)]| vs.iter().map(|(n, v)| format!("{n}={}", value(s, v))).collect::<Vec<_>>().join(" ");
    let mut out = part(&w.vars);
    if !w.values.is_empty() {
        if !out.is_empty() {
            out.push_str("; ");
        }
        out.push_str(&part(&w.values));
    }
    if let Some(note) = w.note {
        if !out.is_empty() {
            out.push(' ');
        }
        write!(out, "({note})").unwrap();
    }
    out
}

fn status_line(s: &FiniteAlgebra, law: LawId, st: &LawStatus) -> String {
    match st {
        LawStatus::Pass => format!("PASS  {law}"),
        LawStatus::Fail(w) => format!("FAIL  {law}  {}", witness(s, w)),
        LawStatus::NotApplicable(why) => format!("N/A   {law}  ({why})"),
        LawStatus::Bug(w) => format!("BUG   {law}  {}", witness(s, w)),
    }
}

fn relation_to(s: &FiniteAlgebra, xs: &Subset, s1: &Subset) -> &'static str {
    if xs.len() == s.size() {
        " (= S)"
    } else if xs == s1 {
        " (= S1)"
    } else {
        ""
    }
}

fn verdict(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    }
}

fn header(out: &mut String, s: &FiniteAlgebra, s1: &Subset) {
    writeln!(out, "algebra {} ({} elements)", s.name(), s.size()).unwrap();
    writeln!(out, "S1 = {}", set(s, s1)).unwrap();
    writeln!(out, "complemented subidentities = {}", set(s, &complemented_subidentities(s))).unwrap();
    if let Some(d) = s.dom() {
        let fix = domsr_core::fixpoints(s, d);
        let img = domsr_core::image(s, d);
        writeln!(out, "S_d = {}{}; d(S) = {}", set(s, &fix), relation_to(s, &fix, s1), set(s, &img)).unwrap();
    }
}

pub fn law_report(s: &FiniteAlgebra, r: &LawReport) -> String {
    let mut out = String::new();
    header(&mut out, s, &r.subidentities);
    if let Some((domain, tests)) = &r.test_domain {
        let rel = if tests == &r.subidentities { " (= S1)" } else { "" };
        writeln!(out, "p ranges over {} = {}{rel}", domain.describe(), set(s, tests)).unwrap();
    }
    if r.entries.iter().any(|e| e.law.arity() == domsr_core::laws::Arity::Elements(3)) {
        match r.ternary {
            Coverage::Exhaustive => writeln!(out, "ternary laws: exhaustive").unwrap(),
            Coverage::Sampled { samples, seed } => {
                writeln!(out, "ternary laws: {samples} samples, seed {seed}").unwrap()
            }
        }
    }
    match r.subsets {
        Some(SubsetCoverage::AllSubsets) => writeln!(out, "subset laws: all subsets").unwrap(),
        Some(SubsetCoverage::BinaryReduction) => writeln!(out, "subset laws: binary reduction").unwrap(),
        None => {}
    }
    for e in &r.entries {
        writeln!(out, "{}", status_line(s, e.law, &e.status)).unwrap();
    }
    let m = &r.summary;
    writeln!(
        out,
        "summary: dioid {}, test dioid {}, tdd {}, domain semiring {}, antidomain semiring {}, full {}, boolean quantale {}",
        verdict(m.is_dioid),
        verdict(m.is_test_dioid),
        verdict(m.is_tdd),
        verdict(m.is_domain_semiring),
        verdict(m.is_antidomain_semiring),
        verdict(m.is_full),
        verdict(m.is_boolean_quantale),
    )
    .unwrap();
    out
}

fn outcome(s: &FiniteAlgebra, r: &Result<(), (LawId, Witness)>) -> String {
    match r {
        Ok(()) => "yes".into(),
        Err((law, w)) => format!("no: {law} fails at {}", witness(s, w)),
    }
}

fn plain(s: &FiniteAlgebra, r: &Result<(), Witness>) -> String {
    match r {
        Ok(()) => "yes".into(),
        Err(w) => format!("no: {}", witness(s, w)),
    }
}

pub fn coincidence_report(s: &FiniteAlgebra, r: &CoincidenceReport) -> String {
    let mut out = String::new();
    writeln!(out, "coincidence {} ({} elements)", r.algebra, s.size()).unwrap();
    if r.dom_from_adom {
        writeln!(out, "dom := adom ∘ adom").unwrap();
    }
    writeln!(out, "dioid: {}", if r.is_dioid { "yes" } else { "no" }).unwrap();
    writeln!(out, "S1 = {}", set(s, &r.subidentities)).unwrap();
    writeln!(out, "full: {}", plain(s, &r.full)).unwrap();
    writeln!(out, "B (complemented subidentities) = {}", set(s, &r.tests)).unwrap();
    writeln!(out, "S_d = {}; d(S) = {}", set(s, &r.domain_algebra), set(s, &r.image)).unwrap();
    if r.tests == r.domain_algebra {
        let rel = if r.tests == r.subidentities { "=" } else { "⊂" };
        writeln!(out, "B = S_d = {} {rel} S1", set(s, &r.tests)).unwrap();
    } else {
        writeln!(out, "B ≠ S_d").unwrap();
    }
    writeln!(out, "tdd (S, B, d): {}", outcome(s, &r.tdd)).unwrap();
    writeln!(out, "domain semiring: {}", outcome(s, &r.domain_semiring)).unwrap();
    writeln!(out, "S_d boolean: {}", plain(s, &r.domain_algebra_boolean)).unwrap();
    writeln!(out, "largest boolean subalgebra of S1 = {}", set(s, &r.max_boolean)).unwrap();
    let optional = |v: &Option<Result<(), (LawId, Witness)>>| match v {
        Some(r) => outcome(s, r),
        None => "not evaluated".into(),
    };
    writeln!(out, "ad := complement ∘ d satisfies a1-a3: {}", optional(&r.derived_antidomain)).unwrap();
    writeln!(out, "given adom yields tdd: {}", optional(&r.antidomain_tdd)).unwrap();
    if r.findings.is_empty() {
        writeln!(out, "findings: none").unwrap();
    }
    for f in &r.findings {
        let line = match f {
            Finding::CoincidenceMismatch { tdd, domain_semiring } => {
                format!("full dioid with tdd={tdd} but domain semiring={domain_semiring}")
            }
            Finding::TestsNotDomainAlgebra { element } => {
                format!("B and S_d differ at {}", s.elem_name(*element))
            }
            Finding::ImageNotDomainAlgebra { element } => {
                format!("d(S) and S_d differ at {}", s.elem_name(*element))
            }
            Finding::MaxBooleanNotContained { element } => {
                format!("{} lies in the largest boolean subalgebra but not in S_d", s.elem_name(*element))
            }
            Finding::DerivedAntidomainFails(law, w) => format!("derived ad fails {law}: {}", witness(s, w)),
            Finding::AntidomainNotTdd(law, w) => format!("adom-induced domain fails {law}: {}", witness(s, w)),
        };
        writeln!(out, "FINDING  {line}").unwrap();
    }
    out
}

pub fn quantale_report(s: &FiniteAlgebra, q: &QuantaleReport) -> String {
    let mut out = law_report(s, &q.report);
    writeln!(out, "certified domain quantale: {}", if q.certified { "yes" } else { "no" }).unwrap();
    if let Some(top) = q.top {
        if q.boundary.is_empty() {
            writeln!(out, "d(x)·⊤ = ⊤ for every x").unwrap();
        }
        for &(x, v) in &q.boundary {
            writeln!(out, "boundary: x={} d(x)·⊤={} ≠ ⊤={}", s.elem_name(x), s.elem_name(v), s.elem_name(top)).unwrap();
        }
    }
    writeln!(out, "S_d = S1: {}", if q.domain_algebra_is_s1 { "yes" } else { "no" }).unwrap();
    out
}
