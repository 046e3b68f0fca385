//! Acceptance suite: one line per criterion, then a single assertion.
//!
//! Run with `cargo test -p domsr --test acceptance -- --nocapture` to see
//! the report.

use std::collections::BTreeSet;
use std::ops::ControlFlow;
use std::process::Command;
use std::time::{Duration, Instant};

use domsr::render_algebra;
use domsr_core::finder::enumerate_dioids;
use domsr_core::lattice::{boolean_subalgebras, subidentities};
use domsr_core::laws::{
    check, holds, quantale_suite, Checker, TestDomain, ANTIDOMAIN, DIOID, DOMAIN_SEMIRING, PREDOMAIN, TDD,
};
use domsr_core::models::{builtin, dom_via_inf, dom_via_top, path_algebra, rel_algebra, Dag, PathModel};
use domsr_core::{fixpoints, CheckOptions, Elem, FiniteAlgebra, LawId, LawStatus, RawAlgebra};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn domsr(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_domsr")).args(args).output().expect("spawn domsr");
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap_or(-1))
}

fn has_line(out: &str, line: &str) -> Result<(), String> {
    ensure(out.lines().any(|l| l == line), format!("missing line `{line}` in:\n{out}"))
}

fn uvw() -> Dag {
    Dag::new("uvw", &["u", "v", "w"], &[("e1", "u", "v"), ("e2", "v", "w")]).unwrap()
}

fn chain3_id() -> Outcome {
    let s = builtin("chain3-id").map_err(|e| e.to_string())?;
    ensure(s.dom() == Some(&[0, 1, 2][..]), "dom is not the identity")?;
    let (out, _) = domsr(&["check", "--builtin", "chain3-id"]);
    for d in ["d1", "d2", "d3", "d4", "d5"] {
        has_line(&out, &format!("PASS  {d}"))?;
    }
    has_line(&out, "S_d = {0,a,1} (= S); d(S) = {0,a,1}")?;
    has_line(&out, "FAIL  full  p=a (uncomplemented)")?;
    Ok("d1-d5 pass, S_d = S, S1 not boolean at a".into())
}

fn chain3_d01() -> Outcome {
    let (out, _) = domsr(&["check", "--builtin", "chain3-d01"]);
    for d in ["d1", "d2", "d3", "d4", "d5", "a1", "a2", "a3", "dom-boolean"] {
        has_line(&out, &format!("PASS  {d}"))?;
    }
    has_line(&out, "S_d = {0,1}; d(S) = {0,1}")?;
    let (out, code) = domsr(&["check", "--builtin", "chain3-d01", "--suite", "coincidence"]);
    ensure(code == 0, format!("coincidence exit {code}"))?;
    has_line(&out, "tdd (S, B, d): yes")?;
    has_line(&out, "B = S_d = {0,1} ⊂ S1")?;
    has_line(&out, "findings: none")?;
    Ok("d1-d5, a1-a3, tdd with B = S_d = {0,1} ⊂ S1".into())
}

fn locality() -> Outcome {
    let (out, code) = domsr(&["check", "--builtin", "nonlocal4", "--laws", "lla,locality"]);
    ensure(code == 1, format!("exit {code}"))?;
    has_line(&out, "p ranges over complemented subidentities = {0,1} (= S1)")?;
    has_line(&out, "PASS  lla")?;
    has_line(&out, "FAIL  locality  x=a y=a; d(x·d(y))=1 d(xy)=0")?;
    Ok("lla PASS over S1 = {0,1}; locality FAIL at x=a, y=a".into())
}

fn too_weak() -> Outcome {
    let s = builtin("weakdom4").map_err(|e| e.to_string())?;
    let d = dom_via_top(&s).map_err(|e| e.to_string())?;
    let a = s.find("a").unwrap();
    ensure(s.elem_name(d[a as usize]) == "⊥", "d(a) is not ⊥")?;
    let (out, code) = domsr(&["check", "--builtin", "weakdom4", "--dom-formula", "top", "--laws", "d1"]);
    ensure(code == 1, format!("exit {code}"))?;
    ensure(out.lines().any(|l| l.starts_with("FAIL  d1  x=a;")), format!("no d1 failure at x=a:\n{out}"))?;
    Ok("1∧x⊤ gives d(a)=⊥, d1 fails at x=a".into())
}

fn too_restrictive() -> Outcome {
    let pm = PathModel::new(uvw()).map_err(|e| e.to_string())?;
    let s = path_algebra(&uvw()).map_err(|e| e.to_string())?;
    let p = pm.set(&["u.e1.v"]).ok_or("no path u.e1.v")?;
    let f = dom_via_top(&s).map_err(|e| e.to_string())?[p as usize];
    let d = s.dom().unwrap()[p as usize];
    ensure(s.elem_name(f) == "{}", format!("formula gives {}", s.elem_name(f)))?;
    ensure(s.elem_name(d) == "{u}", format!("dom gives {}", s.elem_name(d)))?;
    Ok(format!("P={}: formula {} vs dom {}", s.elem_name(p), s.elem_name(f), s.elem_name(d)))
}

fn empty_boundary() -> Outcome {
    let s = rel_algebra(2).map_err(|e| e.to_string())?;
    let r = s.find("{(a,a)}").ok_or("no {(a,a)}")?;
    let q = quantale_suite(&s, &CheckOptions::default());
    let top = q.top.ok_or("no top")?;
    let v = s.mul(s.dom().unwrap()[r as usize], top);
    ensure(s.elem_name(v) == "{(a,a),(a,b)}", format!("d(R)⊤ = {}", s.elem_name(v)))?;
    ensure(v != top && q.boundary.contains(&(r, v)), "boundary not reported")?;
    Ok(format!("d(R)·⊤ = {} ≠ ⊤", s.elem_name(v)))
}

fn coincidence_search() -> Outcome {
    let mut total = 0;
    for (sat, vio) in [("full,tdd", "domain-semiring"), ("full,domain-semiring", "tdd")] {
        let (out, code) = domsr(&["search", "--satisfy", sat, "--violate", vio, "--max-size", "4"]);
        ensure(code == 2, format!("{sat} / {vio}: exit {code}"))?;
        has_line(&out, "EXHAUSTED: none")?;
        total += 1;
    }
    Ok(format!("{total} queries exhausted up to size 4"))
}

/// The dioid laws with zero 0 and one 1, evaluated directly on tables.
fn naive_dioid(n: usize, add: &[Elem], mul: &[Elem]) -> bool {
    let a = |x: usize, y: usize| add[x * n + y] as usize;
    let m = |x: usize, y: usize| mul[x * n + y] as usize;
    let one = if n == 1 { 0 } else { 1 };
    for x in 0..n {
        if a(x, x) != x || a(0, x) != x || m(one, x) != x || m(x, one) != x || m(0, x) != 0 || m(x, 0) != 0 {
            return false;
        }
        for y in 0..n {
            if a(x, y) != a(y, x) {
                return false;
            }
            for z in 0..n {
                if a(a(x, y), z) != a(x, a(y, z))
                    || m(m(x, y), z) != m(x, m(y, z))
                    || m(x, a(y, z)) != a(m(x, y), m(x, z))
                    || m(a(x, y), z) != a(m(x, z), m(y, z))
                {
                    return false;
                }
            }
        }
    }
    true
}

fn all_tables(n: usize) -> impl Iterator<Item = Vec<Elem>> {
    let cells = n * n;
    (0..(n as u64).pow(cells as u32)).map(move |mut k| {
        (0..cells)
            .map(|_| {
                let v = (k % n as u64) as Elem;
                k /= n as u64;
                v
            })
            .collect()
    })
}

fn canonical(n: usize, add: Vec<Elem>, mul: Vec<Elem>) -> String {
    let table = |t: &[Elem]| t.chunks(n).map(|r| r.iter().map(|&v| v as usize).collect()).collect();
    let names = (0..n).map(|i| format!("e{i}")).collect();
    let raw = RawAlgebra {
        name: "m".into(),
        names,
        add: table(&add),
        mul: table(&mul),
        zero: 0,
        one: if n == 1 { 0 } else { 1 },
        ..RawAlgebra::default()
    };
    render_algebra(&FiniteAlgebra::try_from(raw).unwrap())
}

fn oracle() -> Outcome {
    let mut counts = Vec::new();
    for n in 1..=3 {
        let additive: Vec<Vec<Elem>> = all_tables(n)
            .filter(|add| {
                (0..n).all(|x| add[x * n + x] as usize == x && add[x] as usize == x)
                    && (0..n).all(|x| (0..n).all(|y| add[x * n + y] == add[y * n + x]))
                    && (0..n).all(|x| {
                        (0..n).all(|y| {
                            (0..n).all(|z| {
                                let a = |p: usize, q: usize| add[p * n + q] as usize;
                                a(a(x, y), z) == a(x, a(y, z))
                            })
                        })
                    })
            })
            .collect();
        let mut naive = BTreeSet::new();
        for add in &additive {
            for mul in all_tables(n) {
                if naive_dioid(n, add, &mul) {
                    naive.insert(canonical(n, add.clone(), mul));
                }
            }
        }
        let mut pruned = BTreeSet::new();
        enumerate_dioids(n, false, |s| {
            pruned.insert(canonical(n, s.add_table().to_vec(), s.mul_table().to_vec()));
            ControlFlow::Continue(())
        })
        .map_err(|e| e.to_string())?;
        ensure(naive == pruned, format!("n={n}: naive {} vs enumerated {}", naive.len(), pruned.len()))?;
        counts.push(naive.len());
    }
    Ok(format!("model sets equal, sizes {counts:?}"))
}

fn first_failure(s: &FiniteAlgebra, laws: &[LawId], opts: &CheckOptions) -> Result<(), String> {
    let r = check(s, laws, opts);
    match r.entries.iter().find(|e| !e.status.passed()) {
        None => Ok(()),
        Some(e) => Err(format!("{}: {} {:?}", s.name(), e.law, e.status)),
    }
}

fn concrete_models() -> Outcome {
    let laws: Vec<LawId> = [DIOID, DOMAIN_SEMIRING, ANTIDOMAIN, &[LawId::Lla, LawId::Locality, LawId::Full]].concat();
    let exhaustive = CheckOptions { exhaustive: true, ..CheckOptions::default() };
    let small = [rel_algebra(2).map_err(|e| e.to_string())?, path_algebra(&uvw()).map_err(|e| e.to_string())?];
    for s in &small {
        first_failure(s, &laws, &exhaustive)?;
    }
    let rel3 = rel_algebra(3).map_err(|e| e.to_string())?;
    let opts = CheckOptions::default();
    ensure(opts.samples >= 100_000, "too few samples")?;
    let checker = Checker::new(&rel3, &opts);
    ensure(
        matches!(checker.coverage(), domsr_core::laws::Coverage::Sampled { samples, .. } if samples >= 100_000),
        "rel3 ternary laws not sampled",
    )?;
    let r = checker.report(&laws);
    if let Some(e) = r.entries.iter().find(|e| !e.status.passed()) {
        return Err(format!("rel3: {} {:?}", e.law, e.status));
    }
    Ok("rel2, path(u→v→w) exhaustive; rel3 binary exhaustive, ternary on 100000 samples".into())
}

fn all_maps(n: usize) -> impl Iterator<Item = Vec<Elem>> {
    (0..(n as u64).pow(n as u32)).map(move |mut k| {
        (0..n)
            .map(|_| {
                let v = (k % n as u64) as Elem;
                k /= n as u64;
                v
            })
            .collect()
    })
}

fn implications() -> Outcome {
    use LawId::*;
    let opts = CheckOptions::default();
    let designated = CheckOptions { test_domain: Some(TestDomain::Designated), ..opts.clone() };
    let mut violations: Vec<String> = Vec::new();
    let mut pairs = 0u64;
    // how often each premise held, so vacuous passes show up in the report
    let [mut predomain, mut full_lla, mut ds, mut meet_fix, mut antidomain] = [0u64; 5];
    for n in 1..=4 {
        let mut dioids = Vec::new();
        enumerate_dioids(n, false, |s| {
            dioids.push(s);
            ControlFlow::Continue(())
        })
        .map_err(|e| e.to_string())?;
        for s in &dioids {
            let s1 = subidentities(s);
            let boolean = boolean_subalgebras(s).map_err(|e| e.to_string())?;
            for d in all_maps(n) {
                pairs += 1;
                let sd = s.clone().with_dom(d.clone()).unwrap();
                let c = Checker::new(&sd, &opts);
                let pass = |l: LawId| c.evaluate(l).passed();
                let all = |ls: &[LawId]| ls.iter().all(|&l| pass(l));
                let fix = fixpoints(&sd, &d);
                let mut fail = |what: &str| violations.push(format!("{what}: {} dom {:?}", s.name(), d));
                let full = pass(Full);
                // predomain over every boolean subalgebra chosen as test algebra
                for b in &boolean {
                    let tb = sd.clone().with_testset(b.clone());
                    if holds(&tb, PREDOMAIN, &designated) {
                        predomain += 1;
                        if !holds(&tb, &[WeakLocality], &designated) {
                            fail("predomain without weak locality");
                        }
                    }
                }
                if full && pass(Lla) != all(PREDOMAIN) {
                    fail("lla and predomain disagree on a full dioid");
                }
                full_lla += u64::from(full && pass(Lla));
                if full && pass(Lla) && fix != s1 {
                    fail("lla with S_d ≠ S1 on a full dioid");
                }
                if full && all(TDD) != all(DOMAIN_SEMIRING) {
                    fail("tdd and domain semiring disagree on a full dioid");
                }
                if all(DOMAIN_SEMIRING) {
                    ds += 1;
                    meet_fix += u64::from(pass(MeetOneFix));
                    if boolean.iter().any(|b| !b.is_subset(&fix)) {
                        fail("boolean subalgebra outside S_d");
                    }
                    if pass(MeetOneFix) && fix != s1 {
                        fail("meet-one-fix with S_d ≠ S1");
                    }
                }
            }
            for ad in all_maps(n) {
                pairs += 1;
                let sa = s.clone().with_adom(ad.clone()).unwrap();
                if !holds(&sa, ANTIDOMAIN, &opts) {
                    continue;
                }
                antidomain += 1;
                let dd: Vec<Elem> = ad.iter().map(|&a| ad[a as usize]).collect();
                let b = fixpoints(s, &dd);
                let t = s.clone().with_dom(dd).unwrap().with_testset(b);
                if !holds(&t, TDD, &designated) {
                    violations.push(format!("a1-a3 without tdd: {} adom {:?}", s.name(), ad));
                }
            }
        }
    }
    ensure(violations.is_empty(), format!("{} violations, first: {}", violations.len(), violations.join("\n")))?;
    Ok(format!(
        "{pairs} (dioid, map) pairs, zero violations; premises held: predomain {predomain}, full+lla {full_lla}, \
         domain semiring {ds}, meet-one-fix {meet_fix}, a1-a3 {antidomain}"
    ))
}

fn quantale() -> Outcome {
    use LawId::*;
    let mut notes = Vec::new();
    let mut algebras = Vec::new();
    for name in domsr_core::models::BUILTINS {
        let mut s = builtin(name).map_err(|e| e.to_string())?;
        if s.dom().is_none() {
            let d = dom_via_inf(&s).map_err(|e| e.to_string())?;
            s = s.with_dom(d).unwrap();
            notes.push(format!("{name} with the inf-formula domain"));
        }
        algebras.push(s);
    }
    algebras.push(rel_algebra(2).map_err(|e| e.to_string())?);
    let opts = CheckOptions { exhaustive: true, ..CheckOptions::default() };
    for s in &algebras {
        let q = quantale_suite(s, &opts);
        for law in [QuantaleDSup, QuantaleDInf, QuantaleDInfMul] {
            ensure(
                q.report.status(law) == Some(&LawStatus::Pass),
                format!("{}: {law} {:?}", s.name(), q.report.status(law)),
            )?;
        }
        let checker = Checker::new(s, &opts);
        if checker.subset_coverage() != domsr_core::laws::SubsetCoverage::AllSubsets {
            notes.push(format!("{} ({} elements) via the binary reduction", s.name(), s.size()));
        }
    }
    Ok(format!("properties (1)-(3) pass on {} algebras; {}", algebras.len(), notes.join("; ")))
}

#[test]
fn acceptance() {
    let criteria = [
        Criterion { id: 1, name: "chain3-id", limit: Duration::from_secs(1), run: chain3_id },
        Criterion { id: 2, name: "chain3-d01", limit: Duration::from_secs(1), run: chain3_d01 },
        Criterion { id: 3, name: "nonlocal4", limit: Duration::from_secs(1), run: locality },
        Criterion { id: 4, name: "too weak", limit: Duration::from_secs(1), run: too_weak },
        Criterion { id: 5, name: "too restrictive", limit: Duration::from_secs(1), run: too_restrictive },
        Criterion { id: 6, name: "empty-Y boundary", limit: Duration::from_secs(1), run: empty_boundary },
        Criterion { id: 7, name: "coincidence search", limit: Duration::from_secs(300), run: coincidence_search },
        Criterion { id: 8, name: "oracle equivalence", limit: Duration::from_secs(60), run: oracle },
        Criterion { id: 9, name: "concrete models", limit: Duration::from_secs(120), run: concrete_models },
        Criterion { id: 10, name: "implication suites", limit: Duration::from_secs(600), run: implications },
        Criterion { id: 11, name: "quantale domain", limit: Duration::from_secs(30), run: quantale },
    ];
    let mut failed = Vec::new();
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let took = start.elapsed();
        let (verdict, detail) = match result {
            Ok(_) if took > c.limit => ("FAIL", format!("over the {:?} limit", c.limit)),
            Ok(d) => ("PASS", d),
            Err(e) => ("FAIL", e),
        };
        println!("{verdict} criterion {:>2} {:<20} {:>8.3}s  {detail}", c.id, c.name, took.as_secs_f64());
        if verdict == "FAIL" {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
