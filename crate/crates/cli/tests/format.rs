use std::ops::ControlFlow;

use domsr::{parse_algebra_file, parse_graph_file, render_algebra, render_graph};
use domsr_core::finder::enumerate_dioids;
use domsr_core::lattice::complemented_subidentities;
use domsr_core::models::{builtin, rel_algebra, Dag, BUILTINS};
use domsr_core::FiniteAlgebra;
use proptest::prelude::*;

fn size4() -> Vec<FiniteAlgebra> {
    let mut out = Vec::new();
    enumerate_dioids(4, false, |s| {
        out.push(s);
        ControlFlow::Continue(())
    })
    .unwrap();
    out
}

#[test]
fn builtins_and_rel_round_trip() {
    for name in BUILTINS {
        let s = builtin(name).unwrap();
        assert_eq!(parse_algebra_file(&render_algebra(&s)).unwrap(), s, "{name}");
    }
    let s = rel_algebra(3).unwrap();
    assert_eq!(parse_algebra_file(&render_algebra(&s)).unwrap(), s);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn random_algebras_round_trip(
        i in 0usize..39,
        dom in proptest::option::of(proptest::collection::vec(0u16..4, 4)),
        adom in proptest::option::of(proptest::collection::vec(0u16..4, 4)),
        tests in any::<bool>(),
    ) {
        let mut s = size4()[i].clone();
        if let Some(d) = dom {
            s = s.with_dom(d).unwrap();
        }
        if let Some(d) = adom {
            s = s.with_adom(d).unwrap();
        }
        if tests {
            let b = complemented_subidentities(&s);
            s = s.with_testset(b);
        }
        let text = render_algebra(&s);
        let back = parse_algebra_file(&text).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(render_algebra(&back), text);
    }

    #[test]
    fn graphs_round_trip(k in 1usize..6, bits in proptest::collection::vec(any::<bool>(), 15)) {
        let verts: Vec<String> = (0..k).map(|i| format!("v{i}")).collect();
        let mut edges = Vec::new();
        let mut b = bits.iter();
        for i in 0..k {
            for j in i + 1..k {
                if *b.next().unwrap() {
                    edges.push((format!("e{i}{j}"), verts[i].clone(), verts[j].clone()));
                }
            }
        }
        let vs: Vec<&str> = verts.iter().map(String::as_str).collect();
        let es: Vec<(&str, &str, &str)> = edges.iter().map(|(e, s, t)| (e.as_str(), s.as_str(), t.as_str())).collect();
        let g = Dag::new("g", &vs, &es).unwrap();
        prop_assert_eq!(parse_graph_file(&render_graph(&g)).unwrap(), g);
    }
}

#[test]
fn designated_tests_with_complements_round_trip() {
    let s = builtin("chain3-d01").unwrap();
    let text = render_algebra(&s).replace("end\n", "tests 0 1\ncompl 0:1 1:0\nend\n");
    let parsed = parse_algebra_file(&text).unwrap();
    assert_eq!(render_algebra(&parsed), text);
    assert_eq!(parsed.compl().unwrap()[0], Some(parsed.one()));
}
