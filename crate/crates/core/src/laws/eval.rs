use alloc::vec::Vec;
use core::cell::OnceCell;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    CheckOptions, Coverage, LawEntry, LawId, LawReport, LawStatus, Summary, SubsetCoverage, TestDomain, Witness,
    EXHAUSTIVE_TERNARY_LIMIT, SUBSET_HARD_LIMIT, SUBSET_LIMIT,
};
use crate::algebra::{Elem, FiniteAlgebra};
use crate::lattice::{
    boolean_failure, complement_in, complemented_subidentities, fixpoints, image, lattice_view_unchecked,
    semilattice_failure, subidentities, BoolFailure, LatticeView,
};
use crate::subset::Subset;

const NOT_SEMILATTICE: &str = "additive reduct is not a semilattice";

/// Evaluation context for one algebra: caches the order, subidentities,
/// test domain and domain algebra shared by many laws.
pub struct Checker<'a> {
    s: &'a FiniteAlgebra,
    opts: CheckOptions,
    lattice: OnceCell<Option<LatticeView>>,
    s1: Subset,
    test_domain: TestDomain,
    tests: Subset,
    compl: Option<Vec<Option<Elem>>>,
    dom_algebra: Option<Subset>,
}

type Outcome = Result<Option<Witness>, &'static str>;

impl<'a> Checker<'a> {
    pub fn new(s: &'a FiniteAlgebra, opts: &CheckOptions) -> Self {
        let s1 = subidentities(s);
        let dom_algebra = s.dom().map(|d| fixpoints(s, d));
        let requested = opts.test_domain.unwrap_or(if s.testset().is_some() {
            TestDomain::Designated
        } else {
            TestDomain::Complemented
        });
        let (test_domain, tests) = match (requested, s.testset(), &dom_algebra) {
            (TestDomain::Designated, Some(t), _) => (TestDomain::Designated, t.clone()),
            (TestDomain::Subidentities, _, _) => (TestDomain::Subidentities, s1.clone()),
            (TestDomain::DomainAlgebra, _, Some(sd)) => (TestDomain::DomainAlgebra, sd.clone()),
            _ => (TestDomain::Complemented, complemented_subidentities(s)),
        };
        let compl = match (test_domain, s.compl()) {
            (TestDomain::Designated, Some(c)) => Some(c.to_vec()),
            _ => {
                let mut c = alloc::vec![None; s.size()];
                let mut ok = true;
                for p in tests.iter() {
                    c[p as usize] = complement_in(s, &tests, p);
                    ok &= c[p as usize].is_some();
                }
                ok.then_some(c)
            }
        };
        Checker {
            s,
            opts: opts.clone(),
            lattice: OnceCell::new(),
            s1,
            test_domain,
            tests,
            compl,
            dom_algebra,
        }
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        self.s
    }

    pub fn lattice(&self) -> Option<&LatticeView> {
        self.lattice
            .get_or_init(|| semilattice_failure(self.s).is_none().then(|| lattice_view_unchecked(self.s)))
            .as_ref()
    }

    pub fn subidentities(&self) -> &Subset {
        &self.s1
    }

    pub fn tests(&self) -> (TestDomain, &Subset) {
        (self.test_domain, &self.tests)
    }

    pub fn domain_algebra(&self) -> Option<&Subset> {
        self.dom_algebra.as_ref()
    }

    pub fn coverage(&self) -> Coverage {
        if self.opts.exhaustive || self.s.size() <= EXHAUSTIVE_TERNARY_LIMIT {
            Coverage::Exhaustive
        } else {
            Coverage::Sampled { samples: self.opts.samples, seed: self.opts.seed }
        }
    }

    pub fn subset_coverage(&self) -> SubsetCoverage {
        let n = self.s.size();
        if n <= SUBSET_LIMIT || (self.opts.exhaustive && n <= SUBSET_HARD_LIMIT) {
            SubsetCoverage::AllSubsets
        } else {
            SubsetCoverage::BinaryReduction
        }
    }

    pub fn evaluate(&self, law: LawId) -> LawStatus {
        if law.needs_dom() && self.s.dom().is_none() {
            return LawStatus::NotApplicable("no dom table");
        }
        if law.needs_adom() && self.s.adom().is_none() {
            return LawStatus::NotApplicable("no adom table");
        }
        match self.outcome(law) {
            Ok(None) => LawStatus::Pass,
            Ok(Some(w)) => LawStatus::Fail(w),
            Err(why) => LawStatus::NotApplicable(why),
        }
    }

    /// Evaluates `laws` (in catalogue order) into a report.
    pub fn report(&self, laws: &[LawId]) -> LawReport {
        let mut laws = laws.to_vec();
        laws.sort();
        laws.dedup();
        let entries: Vec<LawEntry> = laws.iter().map(|&law| LawEntry { law, status: self.evaluate(law) }).collect();
        let uses_tests = laws.iter().any(|l| l.uses_tests());
        let uses_subsets = laws.iter().any(|l| matches!(l.arity(), super::Arity::Subsets));
        let mut report = LawReport {
            algebra: self.s.name().into(),
            entries,
            test_domain: uses_tests.then(|| (self.test_domain, self.tests.clone())),
            subidentities: self.s1.clone(),
            ternary: self.coverage(),
            subsets: uses_subsets.then(|| self.subset_coverage()),
            summary: Summary::default(),
        };
        report.summarize();
        report
    }

    fn d(&self) -> &[Elem] {
        self.s.dom().unwrap()
    }

    fn ad(&self) -> &[Elem] {
        self.s.adom().unwrap()
    }

    fn lv(&self) -> Result<&LatticeView, &'static str> {
        self.lattice().ok_or(NOT_SEMILATTICE)
    }

    fn forall1(&self, f: impl Fn(Elem) -> Option<Witness>) -> Option<Witness> {
        self.s.elements().find_map(f)
    }

    fn forall2(&self, f: impl Fn(Elem, Elem) -> Option<Witness>) -> Option<Witness> {
        self.s.elements().find_map(|x| self.s.elements().find_map(|y| f(x, y)))
    }

    fn forall_in(&self, set: &Subset, f: impl Fn(Elem, Elem) -> Option<Witness>) -> Option<Witness> {
        self.s.elements().find_map(|x| set.iter().find_map(|p| f(x, p)))
    }

    fn forall3(&self, law: LawId, f: impl Fn(Elem, Elem, Elem) -> Option<Witness>) -> Option<Witness> {
        let n = self.s.size();
        match self.coverage() {
            Coverage::Exhaustive => self
                .s
                .elements()
                .find_map(|x| self.s.elements().find_map(|y| self.s.elements().find_map(|z| f(x, y, z)))),
            Coverage::Sampled { samples, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((law as u64) << 32));
                (0..samples).find_map(|_| {
                    let x = rng.random_range(0..n) as Elem;
                    let y = rng.random_range(0..n) as Elem;
                    let z = rng.random_range(0..n) as Elem;
                    f(x, y, z)
                })
            }
        }
    }

    fn outcome(&self, law: LawId) -> Outcome {
        use LawId::*;
        let s = self.s;
        let (zero, one) = (s.zero(), s.one());
        let leq = |x, y| s.leq(x, y);
        let eq2 = |lhs: &'static str, l: Elem, rhs: &'static str, r: Elem| {
            (l != r).then(|| Witness::new().val(lhs, l).val(rhs, r))
        };
        let le2 = |lhs: &'static str, l: Elem, rhs: &'static str, r: Elem| {
            (!leq(l, r)).then(|| Witness::new().val(lhs, l).val(rhs, r))
        };
        let iff = |lhs: &'static str, l: bool, rhs: &'static str, r: bool| {
            (l != r).then(|| Witness::new().truth(lhs, l).truth(rhs, r))
        };
        let with_x = |w: Option<Witness>, x| w.map(|w| prepend(w, &[("x", x)]));
        let with_xy = |w: Option<Witness>, x, y| w.map(|w| prepend(w, &[("x", x), ("y", y)]));
        let with_xyz = |w: Option<Witness>, x, y, z| w.map(|w| prepend(w, &[("x", x), ("y", y), ("z", z)]));
        let with_xp = |w: Option<Witness>, x, p| w.map(|w| prepend(w, &[("x", x), ("p", p)]));

        Ok(match law {
            AddAssoc => self.forall3(law, |x, y, z| {
                with_xyz(eq2("(x+y)+z", s.add(s.add(x, y), z), "x+(y+z)", s.add(x, s.add(y, z))), x, y, z)
            }),
            AddComm => self.forall2(|x, y| with_xy(eq2("x+y", s.add(x, y), "y+x", s.add(y, x)), x, y)),
            AddIdem => self.forall1(|x| with_x(eq2("x+x", s.add(x, x), "x", x), x)),
            AddUnit => self.forall1(|x| {
                with_x(eq2("0+x", s.add(zero, x), "x", x).or_else(|| eq2("x+0", s.add(x, zero), "x", x)), x)
            }),
            MulAssoc => self.forall3(law, |x, y, z| {
                with_xyz(eq2("(xy)z", s.mul(s.mul(x, y), z), "x(yz)", s.mul(x, s.mul(y, z))), x, y, z)
            }),
            MulUnit => self.forall1(|x| {
                with_x(eq2("1x", s.mul(one, x), "x", x).or_else(|| eq2("x1", s.mul(x, one), "x", x)), x)
            }),
            MulZero => self.forall1(|x| {
                with_x(eq2("0x", s.mul(zero, x), "0", zero).or_else(|| eq2("x0", s.mul(x, zero), "0", zero)), x)
            }),
            DistribLeft => self.forall3(law, |x, y, z| {
                let rhs = s.add(s.mul(x, y), s.mul(x, z));
                with_xyz(eq2("x(y+z)", s.mul(x, s.add(y, z)), "xy+xz", rhs), x, y, z)
            }),
            DistribRight => self.forall3(law, |x, y, z| {
                let rhs = s.add(s.mul(x, z), s.mul(y, z));
                with_xyz(eq2("(x+y)z", s.mul(s.add(x, y), z), "xz+yz", rhs), x, y, z)
            }),
            TestDioid => self.boolean_witness(&self.tests),
            TestsMeet => {
                let lv = self.lv()?;
                let tests = &self.tests;
                tests.iter().find_map(|p| {
                    tests.iter().find_map(|q| {
                        eq2("pq", s.mul(p, q), "p∧q", lv.inf(p, q)).map(|w| prepend(w, &[("p", p), ("q", q)]))
                    })
                })
            }
            GaloisAux1 => {
                let compl = self.compl.as_ref().ok_or("tests are not complemented")?;
                self.forall_in(&self.tests, |x, p| {
                    let pc = compl[p as usize].expect("complement on tests");
                    with_xp(iff("x ≤ px", leq(x, s.mul(p, x)), "p'x = 0", s.mul(pc, x) == zero), x, p)
                })
            }
            GaloisAux2 => {
                let top = self.lv()?.top();
                self.forall_in(&self.tests, |x, p| {
                    with_xp(iff("x ≤ px", leq(x, s.mul(p, x)), "x ≤ p⊤", leq(x, s.mul(p, top))), x, p)
                })
            }
            DomRange => {
                let d = self.d();
                self.forall1(|x| {
                    (!self.tests.contains(d[x as usize]))
                        .then(|| Witness::new().var("x", x).val("d(x)", d[x as usize]).note("d(x) not a test"))
                })
            }
            Predomain1 | D1 => {
                let d = self.d();
                self.forall1(|x| with_x(le2("x", x, "d(x)x", s.mul(d[x as usize], x)), x))
            }
            Predomain2 => {
                let d = self.d();
                self.forall_in(&self.tests, |x, p| with_xp(le2("d(px)", d[s.mul(p, x) as usize], "p", p), x, p))
            }
            Locality | WeakLocality | D2 => {
                let d = self.d();
                self.forall2(|x, y| {
                    let local = d[s.mul(x, d[y as usize]) as usize];
                    let plain = d[s.mul(x, y) as usize];
                    let w = match law {
                        Locality => le2("d(x·d(y))", local, "d(xy)", plain),
                        WeakLocality => le2("d(xy)", plain, "d(x·d(y))", local),
                        _ => eq2("d(x·d(y))", local, "d(xy)", plain),
                    };
                    with_xy(w, x, y)
                })
            }
            Lla | LlaSd => {
                let d = self.d();
                let range = if law == Lla { &self.tests } else { self.dom_algebra.as_ref().unwrap() };
                self.forall_in(range, |x, p| {
                    with_xp(iff("d(x) ≤ p", leq(d[x as usize], p), "x ≤ px", leq(x, s.mul(p, x))), x, p)
                })
            }
            DAdj | DAdjSd => {
                let d = self.d();
                let top = self.lv()?.top();
                let range = if law == DAdj { &self.tests } else { self.dom_algebra.as_ref().unwrap() };
                self.forall_in(range, |x, p| {
                    with_xp(iff("d(x) ≤ p", leq(d[x as usize], p), "x ≤ p⊤", leq(x, s.mul(p, top))), x, p)
                })
            }
            D3 => {
                let d = self.d();
                self.forall1(|x| with_x(le2("d(x)", d[x as usize], "1", one), x))
            }
            D4 => {
                let d = self.d();
                eq2("d(0)", d[zero as usize], "0", zero)
            }
            D5 => {
                let d = self.d();
                self.forall2(|x, y| {
                    let lhs = d[s.add(x, y) as usize];
                    with_xy(eq2("d(x+y)", lhs, "d(x)+d(y)", s.add(d[x as usize], d[y as usize])), x, y)
                })
            }
            A1 => {
                let ad = self.ad();
                self.forall1(|x| with_x(eq2("ad(x)x", s.mul(ad[x as usize], x), "0", zero), x))
            }
            A2 => {
                let ad = self.ad();
                self.forall1(|x| {
                    let a = ad[x as usize];
                    with_x(eq2("ad(x)+ad(ad(x))", s.add(a, ad[a as usize]), "1", one), x)
                })
            }
            A3 => {
                let ad = self.ad();
                self.forall2(|x, y| {
                    let lhs = ad[s.mul(x, y) as usize];
                    let dy = ad[ad[y as usize] as usize];
                    with_xy(le2("ad(xy)", lhs, "ad(x·ad(ad(y)))", ad[s.mul(x, dy) as usize]), x, y)
                })
            }
            Full => self.boolean_witness(&self.s1),
            DomBoolean => self.boolean_witness(self.dom_algebra.as_ref().unwrap()),
            BooleanMonoid => {
                let lv = self.lv()?;
                let top = lv.top();
                self.forall3(law, |x, y, z| {
                    let lhs = lv.inf(x, s.add(y, z));
                    let rhs = s.add(lv.inf(x, y), lv.inf(x, z));
                    with_xyz(eq2("x∧(y+z)", lhs, "(x∧y)+(x∧z)", rhs), x, y, z)
                })
                .or_else(|| {
                    self.forall1(|x| {
                        let complemented = s.elements().any(|y| s.add(x, y) == top && lv.inf(x, y) == zero);
                        (!complemented).then(|| Witness::new().var("x", x).note("no boolean complement"))
                    })
                })
            }
            QuantaleDSup => self.quantale_sup()?,
            QuantaleDInf => self.quantale_inf()?,
            QuantaleDInfMul => self.quantale_inf_mul(law)?,
            EmptyInfBoundary => {
                let d = self.d();
                let top = self.lv()?.top();
                self.forall1(|x| with_x(eq2("d(x)⊤", s.mul(d[x as usize], top), "⊤", top), x))
            }
            MeetOneFix => {
                let d = self.d();
                let lv = self.lv()?;
                self.forall1(|x| {
                    let m = lv.inf(x, one);
                    with_x(eq2("d(x∧1)", d[m as usize], "x∧1", m), x)
                })
            }
            MeetOneFixSd => {
                if !self.outcome(MeetOneFix)?.is_none() {
                    None
                } else {
                    let sd = self.dom_algebra.as_ref().unwrap();
                    self.s1.first_outside(sd).map(|p| {
                        Witness::new().var("p", p).val("d(p)", self.d()[p as usize]).note("p ∈ S₁ but d(p) ≠ p")
                    })
                }
            }
            DStrong => {
                let d = self.d();
                self.forall1(|x| with_x(eq2("d(x)x", s.mul(d[x as usize], x), "x", x), x))
            }
            DOne => eq2("d(1)", self.d()[one as usize], "1", one),
            DMonotone => {
                let d = self.d();
                self.forall2(|x, y| {
                    if !leq(x, y) {
                        return None;
                    }
                    with_xy(le2("d(x)", d[x as usize], "d(y)", d[y as usize]), x, y)
                })
            }
            DTestMul => {
                let d = self.d();
                let sd = self.dom_algebra.as_ref().unwrap();
                self.forall_in(sd, |x, p| {
                    let lhs = d[s.mul(p, x) as usize];
                    with_xp(eq2("d(px)", lhs, "p·d(x)", s.mul(p, d[x as usize])), x, p)
                })
            }
            DTop => {
                let top = self.lv()?.top();
                eq2("d(⊤)", self.d()[top as usize], "1", one)
            }
            DIdem => {
                let d = self.d();
                self.forall1(|x| {
                    let dx = d[x as usize];
                    with_x(eq2("d(d(x))", d[dx as usize], "d(x)", dx), x)
                })
            }
            DFixImage => {
                let sd = self.dom_algebra.as_ref().unwrap();
                let img = image(s, self.d());
                img.first_outside(sd)
                    .map(|y| Witness::new().var("y", y).note("in d(S) but not a fixpoint"))
                    .or_else(|| sd.first_outside(&img).map(|y| Witness::new().var("y", y).note("fixpoint not in d(S)")))
            }
            SdLattice => {
                let sd = self.dom_algebra.as_ref().unwrap();
                if let Some(p) = sd.first_outside(&self.s1) {
                    Some(Witness::new().var("p", p).note("not a subidentity"))
                } else {
                    // boolean_failure checks the lattice conditions before complements
                    match boolean_failure(s, sd) {
                        Ok(()) | Err(BoolFailure::Uncomplemented(_)) => None,
                        Err(f) => Some(bool_witness(f)),
                    }
                }
            }
        })
    }

    fn boolean_witness(&self, set: &Subset) -> Option<Witness> {
        if let Some(p) = set.first_outside(&self.s1) {
            return Some(Witness::new().var("p", p).note("not a subidentity"));
        }
        boolean_failure(self.s, set).err().map(bool_witness)
    }

    fn subset_masks(&self) -> impl Iterator<Item = (u32, Subset)> + '_ {
        let n = self.s.size();
        (0u32..1 << n).map(move |m| (m, Subset::from_predicate(n, |x| m >> x & 1 == 1)))
    }

    fn quantale_sup(&self) -> Outcome {
        let s = self.s;
        let lv = self.lv()?;
        let d = self.d();
        Ok(match self.subset_coverage() {
            SubsetCoverage::AllSubsets => self.subset_masks().find_map(|(_, xs)| {
                let lhs = d[lv.sup_of(xs.iter()) as usize];
                let rhs = lv.sup_of(xs.iter().map(|x| d[x as usize]));
                (lhs != rhs).then(|| Witness::new().set_var("X", xs).val("d(Sup X)", lhs).val("Sup d(X)", rhs))
            }),
            SubsetCoverage::BinaryReduction => (d[s.zero() as usize] != s.zero())
                .then(|| Witness::new().val("d(0)", d[s.zero() as usize]).note("empty X"))
                .or_else(|| {
                    self.forall2(|x, y| {
                        let lhs = d[s.add(x, y) as usize];
                        let rhs = s.add(d[x as usize], d[y as usize]);
                        (lhs != rhs).then(|| {
                            Witness::new().var("x", x).var("y", y).val("d(x+y)", lhs).val("d(x)+d(y)", rhs)
                        })
                    })
                }),
        })
    }

    fn quantale_inf(&self) -> Outcome {
        let s = self.s;
        let lv = self.lv()?;
        let d = self.d();
        Ok(match self.subset_coverage() {
            SubsetCoverage::AllSubsets => self.subset_masks().find_map(|(_, xs)| {
                let lhs = d[lv.inf_of(xs.iter()) as usize];
                let rhs = lv.inf_of(xs.iter().map(|x| d[x as usize]));
                (!s.leq(lhs, rhs)).then(|| Witness::new().set_var("X", xs).val("d(Inf X)", lhs).val("Inf d(X)", rhs))
            }),
            SubsetCoverage::BinaryReduction => self.forall2(|x, y| {
                let lhs = d[lv.inf(x, y) as usize];
                let rhs = lv.inf(d[x as usize], d[y as usize]);
                (!s.leq(lhs, rhs))
                    .then(|| Witness::new().var("x", x).var("y", y).val("d(x∧y)", lhs).val("d(x)∧d(y)", rhs))
            }),
        })
    }

    fn quantale_inf_mul(&self, law: LawId) -> Outcome {
        let s = self.s;
        let lv = self.lv()?;
        let d = self.d();
        Ok(match self.subset_coverage() {
            SubsetCoverage::AllSubsets => {
                let n = s.size();
                // Inf Y for every mask, built incrementally from the lowest bit
                let mut inf_y = alloc::vec![lv.top(); 1 << n];
                for m in 1usize..1 << n {
                    let low = m.trailing_zeros() as Elem;
                    inf_y[m] = lv.inf(inf_y[m & (m - 1)], low);
                }
                s.elements().find_map(|x| {
                    let dx = d[x as usize];
                    let mut inf_dy = alloc::vec![lv.top(); 1 << n];
                    (1usize..1 << n).find_map(|m| {
                        let low = m.trailing_zeros() as Elem;
                        inf_dy[m] = lv.inf(inf_dy[m & (m - 1)], s.mul(dx, low));
                        let lhs = s.mul(dx, inf_y[m]);
                        (lhs != inf_dy[m]).then(|| {
                            let ys = Subset::from_predicate(n, |y| m >> y & 1 == 1);
                            Witness::new().var("x", x).set_var("Y", ys).val("d(x)·Inf Y", lhs).val("Inf d(x)Y", inf_dy[m])
                        })
                    })
                })
            }
            SubsetCoverage::BinaryReduction => self.forall3(law, |x, y, z| {
                let dx = d[x as usize];
                let lhs = s.mul(dx, lv.inf(y, z));
                let rhs = lv.inf(s.mul(dx, y), s.mul(dx, z));
                (lhs != rhs).then(|| {
                    Witness::new().var("x", x).var("y", y).var("z", z).val("d(x)(y∧z)", lhs).val("d(x)y∧d(x)z", rhs)
                })
            }),
        })
    }
}

fn prepend(mut w: Witness, vars: &[(&'static str, Elem)]) -> Witness {
    let mut v: Vec<_> = vars.iter().map(|&(n, x)| (n, super::Value::Elem(x))).collect();
    v.append(&mut w.vars);
    w.vars = v;
    w
}

fn bool_witness(f: BoolFailure) -> Witness {
    const NAMES: [&str; 3] = ["p", "q", "r"];
    let mut w = Witness::new().note(f.reason());
    for (i, x) in f.elems().into_iter().enumerate() {
        w = w.var(NAMES[i], x);
    }
    w
}

/// Evaluates `laws` on `s` exhaustively (subject to sampling options).
pub fn check(s: &FiniteAlgebra, laws: &[LawId], opts: &CheckOptions) -> LawReport {
    Checker::new(s, opts).report(laws)
}

/// True iff every law in `laws` passes; stops at the first failure.
pub fn holds(s: &FiniteAlgebra, laws: &[LawId], opts: &CheckOptions) -> bool {
    let c = Checker::new(s, opts);
    laws.iter().all(|&l| c.evaluate(l).passed())
}
