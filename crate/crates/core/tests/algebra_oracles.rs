use lftop_core::corpus;
use lftop_core::residuated::{
    check_co_gl_monoid, check_gl_monoid, classify, co_implication, residuum,
};
use lftop_core::{Algebra, Elem, Limits, Powerset, Tensor, TensorKind};
use proptest::prelude::*;
use std::sync::Arc;

fn instances() -> Vec<(&'static str, Arc<Algebra>)> {
    vec![
        ("boolean", corpus::boolean()),
        ("godel-3", corpus::godel(3)),
        ("lukasiewicz-3", corpus::lukasiewicz(3)),
        ("godel-4", corpus::godel(4)),
        ("lukasiewicz-4", corpus::lukasiewicz(4)),
        ("diamond-meet", corpus::diamond_meet()),
    ]
}

#[test]
fn residuum_is_the_brute_force_sup() {
    for (name, alg) in instances() {
        let l = alg.lattice();
        for a in alg.elements() {
            for b in alg.elements() {
                let sup = l.join_set(alg.elements().filter(|&g| alg.leq(alg.mul(a, g), b)));
                assert_eq!(alg.imp(a, b), sup, "{name}");
                let inf = l.meet_set(alg.elements().filter(|&g| alg.leq(a, alg.join(b, g))));
                assert_eq!(alg.coimp(a, b), inf, "{name}");
                for g in alg.elements() {
                    assert_eq!(
                        alg.leq(alg.mul(a, g), b),
                        alg.leq(g, alg.imp(a, b)),
                        "{name}"
                    );
                    assert_eq!(
                        alg.leq(alg.coimp(a, b), g),
                        alg.leq(a, alg.join(b, g)),
                        "{name}"
                    );
                }
            }
        }
    }
}

#[test]
fn classification_by_definition() {
    for (name, alg) in instances() {
        let c = alg.classification();
        let mv = alg.elements().all(|a| alg.neg(alg.neg(a)) == a);
        let heyting = alg
            .elements()
            .all(|a| alg.elements().all(|b| alg.mul(a, b) == alg.meet(a, b)));
        assert_eq!((c.heyting, c.mv), (heyting, mv), "{name}");
    }
}

#[test]
fn graded_carrier_is_a_gl_monoid() {
    let limits = Limits::default();
    for (alg, m) in [
        (corpus::boolean(), 1),
        (corpus::boolean(), 2),
        (corpus::godel(3), 1),
        (corpus::lukasiewicz(3), 1),
        (corpus::diamond_meet(), 1),
    ] {
        let p = Powerset::new(alg, m, &limits).unwrap();
        let report = p.check_graded_gl(&limits).unwrap();
        assert!(report.passed(), "{report}");
    }
}

#[test]
fn graded_tensor_and_residuum_closed_forms() {
    let limits = Limits::default();
    let p = Powerset::new(corpus::lukasiewicz(3), 1, &limits).unwrap();
    let alg = p.algebra();
    for a in 0..p.cells() {
        for b in 0..p.cells() {
            let (ga, gb) = (p.graded(a), p.graded(b));
            let t = p.graded(p.cell_tensor(a, b));
            assert_eq!(t.set, p.tensor(ga.set, gb.set));
            assert_eq!(t.grade, alg.join(ga.grade, gb.grade));
            let i = p.graded(p.cell_impl(a, b));
            assert_eq!(i.set, p.implies(ga.set, gb.set));
            assert_eq!(i.grade, alg.coimp(gb.grade, ga.grade));
        }
    }
}

/// Every single-cell change of a table, as (a, b, new value).
fn mutations(t: &Tensor) -> Vec<Tensor> {
    let l = t.base();
    let mut out = Vec::new();
    for a in l.elements() {
        for b in l.elements() {
            for v in l.elements().filter(|&v| v != t.apply(a, b)) {
                out.push(t.with_cell(a, b, v));
            }
        }
    }
    out
}

#[test]
fn single_cell_mutations() {
    let limits = Limits::default();
    let mut uncaught = Vec::new();
    let mut total = 0;
    for (name, alg) in instances() {
        for m in mutations(alg.tensor()) {
            total += 1;
            if check_gl_monoid(&m, &limits).unwrap().passed() {
                uncaught.push(format!("{name} ⊗"));
            }
        }
        for m in mutations(alg.cotensor()) {
            total += 1;
            if check_co_gl_monoid(&m, &limits).unwrap().passed() {
                uncaught.push(format!("{name} ⊕"));
            }
        }
    }
    assert!(total >= 100);
    // Gödel and Łukasiewicz on three elements differ in the single cell
    // ½⊗½, and the three-element join and its bounded sum differ in ½⊕½.
    assert!(uncaught.contains(&"godel-3 ⊗".to_string()));
    assert!(uncaught.contains(&"lukasiewicz-3 ⊗".to_string()));
    assert!(uncaught.contains(&"godel-3 ⊕".to_string()));
}

#[test]
fn godel_and_lukasiewicz_are_one_cell_apart() {
    let g = corpus::godel(3);
    let half = Elem::new(1);
    let moved = g.tensor().with_cell(half, half, Elem::new(0));
    assert_eq!(moved.table(), corpus::lukasiewicz(3).tensor().table());
}

fn commutative_table(n: usize, raw: &[usize]) -> Vec<Elem> {
    let mut t = vec![Elem::new(0); n * n];
    let mut k = 0;
    for a in 0..n {
        for b in a..n {
            t[a * n + b] = Elem::new(raw[k] % n);
            t[b * n + a] = Elem::new(raw[k] % n);
            k += 1;
        }
    }
    t
}

proptest! {
    #[test]
    fn gl_tables_are_residuated(raw in proptest::collection::vec(0usize..4, 10)) {
        let limits = Limits::default();
        let l = corpus::chain(4);
        let t = Tensor::from_table(l.clone(), TensorKind::Tensor, commutative_table(4, &raw)).unwrap();
        if check_gl_monoid(&t, &limits).unwrap().passed() {
            let r = residuum(&t).unwrap();
            for a in l.elements() {
                for b in l.elements() {
                    for g in l.elements() {
                        prop_assert_eq!(l.leq(t.apply(a, g), b), l.leq(g, r.apply(a, b)));
                    }
                }
            }
            let c = classify(&t, &r);
            prop_assert_eq!(c.heyting, t.is_meet());
            let alg = Algebra::with_join_cotensor(t, &limits).unwrap();
            prop_assert!(co_implication(alg.cotensor()).is_ok());
        }
    }
}
