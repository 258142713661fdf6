//! Standard small lattices and GL-monoids.

use crate::lattice::{build_lattice, Elem, Lattice};
use crate::limits::Limits;
use crate::powerset::Powerset;
use crate::residuated::{Algebra, Tensor, TensorKind};
use crate::topology::{generate_topology, Topology};
use std::sync::Arc;

/// The chain `0 < 1/(n-1) < … < 1`.
pub fn chain(n: usize) -> Arc<Lattice> {
    let pairs: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    let labels = (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            i if i == n - 1 => "1".to_string(),
            i => format!("{i}/{}", n - 1),
        })
        .collect();
    let l = build_lattice(n, &pairs)
        .and_then(|l| l.with_labels(labels))
        .expect("chains are lattices");
    Arc::new(l)
}

/// `{⊥, a, b, ⊤}` with `a`, `b` incomparable.
pub fn diamond() -> Arc<Lattice> {
    labelled(4, &[(0, 1), (0, 2), (1, 3), (2, 3)], &["bot", "a", "b", "top"])
}

/// The non-modular pentagon `N5`: `⊥ < a < b < ⊤`, `⊥ < c < ⊤`.
pub fn pentagon() -> Arc<Lattice> {
    labelled(
        5,
        &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
        &["bot", "a", "b", "c", "top"],
    )
}

/// The non-distributive diamond `M3`.
pub fn m3() -> Arc<Lattice> {
    labelled(
        5,
        &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        &["bot", "a", "b", "c", "top"],
    )
}

fn labelled(n: usize, pairs: &[(usize, usize)], labels: &[&str]) -> Arc<Lattice> {
    let l = build_lattice(n, pairs)
        .and_then(|l| l.with_labels(labels.iter().map(|s| s.to_string()).collect()))
        .expect("corpus lattice");
    Arc::new(l)
}

/// Łukasiewicz t-norm on the `n`-chain: `a ⊗ b = max(0, a + b − (n−1))`.
pub fn lukasiewicz_tensor(n: usize) -> Tensor {
    Tensor::from_fn(chain(n), TensorKind::Tensor, move |a, b| {
        Elem::new((a.index() + b.index()).saturating_sub(n - 1))
    })
}

fn algebra(tensor: Tensor) -> Arc<Algebra> {
    Arc::new(Algebra::with_join_cotensor(tensor, &Limits::default()).expect("corpus GL-monoid"))
}

/// Two-element Boolean algebra with `⊗ = ∧`.
pub fn boolean() -> Arc<Algebra> {
    godel(2)
}

/// Gödel chain: `⊗ = min`.
pub fn godel(n: usize) -> Arc<Algebra> {
    algebra(Tensor::meet(chain(n)))
}

/// Łukasiewicz chain.
pub fn lukasiewicz(n: usize) -> Arc<Algebra> {
    algebra(lukasiewicz_tensor(n))
}

/// Diamond with `⊗ = ∧` (the four-element Boolean algebra).
pub fn diamond_meet() -> Arc<Algebra> {
    algebra(Tensor::meet(diamond()))
}

/// Named topologies on a ground: discrete, indiscrete, and every distinct
/// topology generated by a single fuzzy set at a single non-⊥ grade.
pub fn topologies(ps: &Powerset) -> Vec<(String, Topology)> {
    let alg = ps.algebra();
    let mut out = vec![
        ("discrete".to_string(), Topology::discrete(ps)),
        ("indiscrete".to_string(), Topology::indiscrete(ps)),
    ];
    for f in ps.sets().filter(|&f| f != ps.zero() && f != ps.one()) {
        for a in alg.elements().filter(|&a| a != alg.bot()) {
            let mut seed = vec![alg.bot(); ps.size()];
            seed[f] = a;
            let t = generate_topology(ps, &seed).expect("seed has powerset shape");
            if out.iter().all(|(_, u)| *u != t) {
                out.push((format!("generated by {}@{}", ps.render(f), alg.label(a)), t));
            }
        }
    }
    out
}
