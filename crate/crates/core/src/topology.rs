//! L-fuzzy topologies, continuity, interior operators and neighborhood
//! systems, all as tables over the enumerated fuzzy powerset.

use crate::error::{KernelError, Result};
use crate::lattice::{subset_fold, Elem};
use crate::limits::Limits;
use crate::powerset::{PointMap, Powerset};
use crate::report::AxiomReport;
use std::sync::Arc;

/// A grade map `τ: L^X → L`, indexed by fuzzy-set index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Topology {
    table: Vec<Elem>,
}

impl Topology {
    pub fn from_table(ps: &Powerset, table: Vec<Elem>) -> Result<Self> {
        if table.len() != ps.size() {
            return Err(KernelError::TableShape {
                expected: ps.size(),
                found: table.len(),
            });
        }
        Ok(Topology { table })
    }

    /// `τ ≡ ⊤`.
    pub fn discrete(ps: &Powerset) -> Self {
        Topology {
            table: vec![ps.algebra().top(); ps.size()],
        }
    }

    /// `⊤` on `0_X` and `1_X`, `⊥` elsewhere.
    pub fn indiscrete(ps: &Powerset) -> Self {
        let alg = ps.algebra();
        let mut table = vec![alg.bot(); ps.size()];
        table[ps.zero()] = alg.top();
        table[ps.one()] = alg.top();
        Topology { table }
    }

    #[inline]
    pub fn grade(&self, f: usize) -> Elem {
        self.table[f]
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }
}

fn same_algebra(a: &Powerset, b: &Powerset) -> Result<()> {
    if Arc::ptr_eq(a.algebra(), b.algebra()) || a.lattice() == b.lattice() {
        Ok(())
    } else {
        Err(KernelError::Mismatch)
    }
}

/// Axioms o1, o2, o3 (o3 over every subset of `L^X`, the empty subset
/// yielding o1').
pub fn check_topology(ps: &Powerset, t: &Topology, limits: &Limits) -> Result<AxiomReport> {
    limits.check_subsets("topology subset sweep", ps.size())?;
    let alg = ps.algebra();
    let mut report = AxiomReport::new("L-fuzzy topology");
    let top = alg.top();

    let g1 = t.grade(ps.one());
    report.record(
        "o1",
        (g1 != top).then(|| format!("τ(1_X)={}", alg.label(g1))),
    );
    let g0 = t.grade(ps.zero());
    report.record(
        "o1'",
        (g0 != top).then(|| format!("τ(0_X)={}", alg.label(g0))),
    );

    let o2 = ps.sets().flat_map(|f| ps.sets().map(move |g| (f, g))).find(|&(f, g)| {
        !alg.leq(alg.mul(t.grade(f), t.grade(g)), t.grade(ps.tensor(f, g)))
    });
    report.record(
        "o2",
        o2.map(|(f, g)| {
            format!(
                "f={}, g={}: τ(f)⊗τ(g)={} ≰ τ(f⊗g)={}",
                ps.render(f),
                ps.render(g),
                alg.label(alg.mul(t.grade(f), t.grade(g))),
                alg.label(t.grade(ps.tensor(f, g)))
            )
        }),
    );

    let sweep = subset_fold(ps.size(), (ps.zero(), top), |(j, m), i| {
        (ps.join(j, i), alg.meet(m, t.grade(i)))
    });
    let o3 = sweep
        .iter()
        .enumerate()
        .find(|(_, &(j, m))| !alg.leq(m, t.grade(j)));
    report.record(
        "o3",
        o3.map(|(mask, &(j, m))| {
            let members: Vec<String> = ps
                .sets()
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| ps.render(i))
                .collect();
            format!(
                "family {{{}}}: ⋀τ={} ≰ τ(⋁)={}",
                members.join(" "),
                alg.label(m),
                alg.label(t.grade(j))
            )
        }),
    );
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TopologyOrder {
    Less,
    Greater,
    Equal,
    Incomparable,
}

/// Pointwise comparison of two grade maps over the same powerset.
pub fn order_topologies(ps: &Powerset, a: &Topology, b: &Topology) -> TopologyOrder {
    let alg = ps.algebra();
    let le = ps.sets().all(|f| alg.leq(a.grade(f), b.grade(f)));
    let ge = ps.sets().all(|f| alg.leq(b.grade(f), a.grade(f)));
    match (le, ge) {
        (true, true) => TopologyOrder::Equal,
        (true, false) => TopologyOrder::Less,
        (false, true) => TopologyOrder::Greater,
        (false, false) => TopologyOrder::Incomparable,
    }
}

/// Least topology above the grade map `seed`, by monotone fixpoint of the
/// pairwise closure rules with `τ(0_X) = τ(1_X) = ⊤` forced.
pub fn generate_topology(ps: &Powerset, seed: &[Elem]) -> Result<Topology> {
    if seed.len() != ps.size() {
        return Err(KernelError::TableShape {
            expected: ps.size(),
            found: seed.len(),
        });
    }
    let alg = ps.algebra();
    let mut t = seed.to_vec();
    t[ps.one()] = alg.top();
    t[ps.zero()] = alg.top();
    let n = ps.size();
    let mut changed = true;
    while changed {
        changed = false;
        for f in 0..n {
            for g in f..n {
                let (a, b) = (t[f], t[g]);
                let prod = ps.tensor(f, g);
                let v = alg.join(t[prod], alg.mul(a, b));
                if v != t[prod] {
                    t[prod] = v;
                    changed = true;
                }
                let sum = ps.join(f, g);
                let v = alg.join(t[sum], alg.meet(a, b));
                if v != t[sum] {
                    t[sum] = v;
                    changed = true;
                }
            }
        }
    }
    Ok(Topology { table: t })
}

/// Every topology on the ground, by raw sweep over all grade tables with
/// `τ(0_X) = τ(1_X) = ⊤`, each decided by [`check_topology`].
pub fn enumerate_topologies(ps: &Powerset, limits: &Limits) -> Result<Vec<Topology>> {
    let alg = ps.algebra();
    let n = alg.size();
    let free: Vec<usize> = ps
        .sets()
        .filter(|&f| f != ps.zero() && f != ps.one())
        .collect();
    limits.check_candidates("topology candidates", n, free.len())?;
    limits.check_subsets("topology subset sweep", ps.size())?;
    let mut table = vec![alg.top(); ps.size()];
    let mut digits = vec![0usize; free.len()];
    let mut out = Vec::new();
    loop {
        for (slot, &d) in free.iter().zip(&digits) {
            table[*slot] = Elem::new(d);
        }
        // Cheap necessary conditions first; the subset sweep decides.
        let pairwise_ok = ps.sets().all(|f| {
            ps.sets().all(|g| {
                alg.leq(alg.mul(table[f], table[g]), table[ps.tensor(f, g)])
                    && alg.leq(alg.meet(table[f], table[g]), table[ps.join(f, g)])
            })
        });
        if pairwise_ok {
            let t = Topology {
                table: table.clone(),
            };
            if check_topology(ps, &t, limits)?.passed() {
                out.push(t);
            }
        }
        // odometer
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(out);
            }
            digits[i] += 1;
            if digits[i] < n {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Minimum of the enumerated topologies lying above `seed`, found by brute
/// force. `None` if the pointwise meet of those topologies is not itself one
/// of them.
pub fn brute_force_least_above(
    ps: &Powerset,
    seed: &[Elem],
    limits: &Limits,
) -> Result<Option<Topology>> {
    let alg = ps.algebra();
    let above: Vec<Topology> = enumerate_topologies(ps, limits)?
        .into_iter()
        .filter(|t| ps.sets().all(|f| alg.leq(seed[f], t.grade(f))))
        .collect();
    let meet: Vec<Elem> = ps
        .sets()
        .map(|f| alg.lattice().meet_set(above.iter().map(|t| t.grade(f))))
        .collect();
    Ok(above.into_iter().find(|t| t.table == meet))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Continuity {
    pub continuous: bool,
    /// A fuzzy set `g` on the codomain with `η(g) ≰ τ(g∘φ)`.
    pub witness: Option<usize>,
}

/// `φ` is continuous iff `η(g) ≤ τ(g∘φ)` for every `g ∈ L^Y`.
pub fn is_continuous(
    phi: &PointMap,
    x: &Powerset,
    tau: &Topology,
    y: &Powerset,
    eta: &Topology,
) -> Result<Continuity> {
    check_map_shape(phi, x, y)?;
    let alg = x.algebra();
    let witness = y
        .sets()
        .find(|&g| !alg.leq(eta.grade(g), tau.grade(x.pullback(y, phi, g))));
    Ok(Continuity {
        continuous: witness.is_none(),
        witness,
    })
}

pub(crate) fn check_map_shape(phi: &PointMap, x: &Powerset, y: &Powerset) -> Result<()> {
    same_algebra(x, y)?;
    if phi.domain() != x.points() || phi.codomain() != y.points() {
        return Err(KernelError::Mismatch);
    }
    Ok(())
}

/// An interior operator `I: L^X × L → L^X`, stored as a fuzzy-set index per
/// graded cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InteriorOp {
    table: Vec<usize>,
}

impl InteriorOp {
    pub fn from_table(ps: &Powerset, table: Vec<usize>) -> Result<Self> {
        if table.len() != ps.cells() {
            return Err(KernelError::TableShape {
                expected: ps.cells(),
                found: table.len(),
            });
        }
        Ok(InteriorOp { table })
    }

    #[inline]
    pub fn apply(&self, cell: usize) -> usize {
        self.table[cell]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }
}

/// `I(f,α) = ⋁{u | u ≤ f, α ≤ τ(u)}`.
pub fn interior_from_topology(ps: &Powerset, t: &Topology) -> InteriorOp {
    let alg = ps.algebra();
    let table = (0..ps.cells())
        .map(|cell| {
            let g = ps.graded(cell);
            ps.join_all(
                ps.sets()
                    .filter(|&u| ps.leq(u, g.set) && alg.leq(g.grade, t.grade(u))),
            )
        })
        .collect();
    InteriorOp { table }
}

/// Interior axioms I0–I6. I4 re-applies the operator at the same grade.
pub fn check_interior(ps: &Powerset, i: &InteriorOp, limits: &Limits) -> Result<AxiomReport> {
    let alg = ps.algebra();
    limits.check_subsets("grade subset sweep", alg.size())?;
    let cells = ps.cells();
    let mut report = AxiomReport::new("L-fuzzy interior operator");
    let rc = |c: usize| ps.render_cell(c);
    let rs = |f: usize| ps.render(f);

    report.record(
        "I0",
        alg.elements()
            .map(|a| ps.cell_of(ps.one(), a))
            .find(|&c| i.apply(c) != ps.one())
            .map(|c| format!("I{}={}", rc(c), rs(i.apply(c)))),
    );
    let pairs = || (0..cells).flat_map(move |a| (0..cells).map(move |b| (a, b)));
    report.record(
        "I1",
        pairs()
            .find(|&(a, b)| ps.cell_leq(a, b) && !ps.leq(i.apply(a), i.apply(b)))
            .map(|(a, b)| format!("{} ≼ {} but I={} ≰ I={}", rc(a), rc(b), rs(i.apply(a)), rs(i.apply(b)))),
    );
    report.record(
        "I2",
        pairs()
            .find(|&(a, b)| {
                !ps.leq(
                    ps.tensor(i.apply(a), i.apply(b)),
                    i.apply(ps.cell_tensor(a, b)),
                )
            })
            .map(|(a, b)| {
                format!(
                    "a={}, b={}: I(a)⊗I(b)={} ≰ I(a⊠b)={}",
                    rc(a),
                    rc(b),
                    rs(ps.tensor(i.apply(a), i.apply(b))),
                    rs(i.apply(ps.cell_tensor(a, b)))
                )
            }),
    );
    report.record(
        "I3",
        (0..cells)
            .find(|&c| !ps.leq(i.apply(c), ps.graded(c).set))
            .map(|c| format!("I{}={}", rc(c), rs(i.apply(c)))),
    );
    report.record(
        "I4",
        (0..cells)
            .find(|&c| {
                let inner = i.apply(c);
                let again = i.apply(ps.cell_of(inner, ps.graded(c).grade));
                !ps.leq(inner, again)
            })
            .map(|c| format!("at {}", rc(c))),
    );
    report.record(
        "I5",
        ps.sets()
            .find(|&f| i.apply(ps.cell_of(f, alg.bot())) != f)
            .map(|f| format!("I({}, ⊥)={}", rs(f), rs(i.apply(ps.cell_of(f, alg.bot()))))),
    );
    let n = alg.size();
    let i6 = ps.sets().find_map(|f| {
        (1u64..(1 << n)).find_map(|mask| {
            let members: Vec<Elem> = alg.elements().filter(|e| mask >> e.index() & 1 == 1).collect();
            let first = i.apply(ps.cell_of(f, members[0]));
            let constant = members.iter().all(|&a| i.apply(ps.cell_of(f, a)) == first);
            let sup = alg.lattice().join_set(members.iter().copied());
            (constant && i.apply(ps.cell_of(f, sup)) != first).then(|| {
                format!(
                    "f={}, K={}: I constant {} on K but I(f,⋁K)={}",
                    rs(f),
                    alg.lattice().render_set(mask),
                    rs(first),
                    rs(i.apply(ps.cell_of(f, sup)))
                )
            })
        })
    });
    report.record("I6", i6);
    Ok(report)
}

/// Per-point tables `N_p: L^X × L → L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NbhdSystem {
    cells: usize,
    values: Vec<Elem>,
}

impl NbhdSystem {
    pub fn from_tables(ps: &Powerset, tables: Vec<Vec<Elem>>) -> Result<Self> {
        if tables.len() != ps.points() || tables.iter().any(|t| t.len() != ps.cells()) {
            return Err(KernelError::TableShape {
                expected: ps.points() * ps.cells(),
                found: tables.iter().map(Vec::len).sum(),
            });
        }
        Ok(NbhdSystem {
            cells: ps.cells(),
            values: tables.concat(),
        })
    }

    #[inline]
    pub fn value(&self, point: usize, cell: usize) -> Elem {
        self.values[point * self.cells + cell]
    }

    pub fn table(&self, point: usize) -> &[Elem] {
        &self.values[point * self.cells..(point + 1) * self.cells]
    }

    pub fn points(&self) -> usize {
        self.values.len() / self.cells
    }
}

/// `N_p(f,α) = I(f,α)(p)`.
pub fn nbhd_from_interior(ps: &Powerset, i: &InteriorOp) -> NbhdSystem {
    let cells = ps.cells();
    let values = (0..ps.points())
        .flat_map(|p| (0..cells).map(move |c| ps.value(i.apply(c), p)))
        .collect();
    NbhdSystem { cells, values }
}

/// Neighborhood axioms N0–N4 at every point; N4 sweeps every candidate `(g,β)`.
pub fn check_nbhd(ps: &Powerset, n: &NbhdSystem) -> Result<AxiomReport> {
    let alg = ps.algebra();
    let cells = ps.cells();
    let points = ps.points();
    let mut report = AxiomReport::new("L-fuzzy neighborhood system");
    let rc = |c: usize| ps.render_cell(c);
    let label = |e: Elem| alg.label(e).to_string();
    let at_points = |test: &dyn Fn(usize) -> Option<String>| {
        (0..points).find_map(|p| test(p).map(|w| format!("p={p}: {w}")))
    };

    report.record(
        "N0",
        at_points(&|p| {
            alg.elements()
                .map(|a| ps.cell_of(ps.one(), a))
                .find(|&c| n.value(p, c) != alg.top())
                .map(|c| format!("N{}={}", rc(c), label(n.value(p, c))))
        }),
    );
    report.record(
        "N1",
        at_points(&|p| {
            (0..cells)
                .flat_map(|a| (0..cells).map(move |b| (a, b)))
                .find(|&(a, b)| ps.cell_leq(a, b) && !alg.leq(n.value(p, a), n.value(p, b)))
                .map(|(a, b)| format!("{} ≼ {} but {} ≰ {}", rc(a), rc(b), label(n.value(p, a)), label(n.value(p, b))))
        }),
    );
    report.record(
        "N2",
        at_points(&|p| {
            (0..cells)
                .flat_map(|a| (0..cells).map(move |b| (a, b)))
                .find(|&(a, b)| {
                    !alg.leq(
                        alg.mul(n.value(p, a), n.value(p, b)),
                        n.value(p, ps.cell_tensor(a, b)),
                    )
                })
                .map(|(a, b)| {
                    format!(
                        "a={}, b={}: N(a)⊗N(b)={} ≰ N(a⊠b)={}",
                        rc(a),
                        rc(b),
                        label(alg.mul(n.value(p, a), n.value(p, b))),
                        label(n.value(p, ps.cell_tensor(a, b)))
                    )
                })
        }),
    );
    report.record(
        "N3",
        at_points(&|p| {
            (0..cells)
                .find(|&c| !alg.leq(n.value(p, c), ps.value(ps.graded(c).set, p)))
                .map(|c| format!("N{}={}", rc(c), label(n.value(p, c))))
        }),
    );

    // Candidates (g,β) for N4 depend on (f,α) only, not on p.
    let candidates: Vec<Vec<usize>> = (0..cells)
        .map(|c| {
            (0..cells)
                .filter(|&d| {
                    let g = ps.graded(d).set;
                    ps.cell_leq(c, d) && (0..points).all(|q| alg.leq(ps.value(g, q), n.value(q, c)))
                })
                .collect()
        })
        .collect();
    report.record(
        "N4",
        at_points(&|p| {
            (0..cells).find_map(|c| {
                let sup = alg
                    .lattice()
                    .join_set(candidates[c].iter().map(|&d| n.value(p, d)));
                (!alg.leq(n.value(p, c), sup)).then(|| {
                    format!(
                        "N{}={} ≰ {} (sup over {} candidates)",
                        rc(c),
                        label(n.value(p, c)),
                        label(sup),
                        candidates[c].len()
                    )
                })
            })
        }),
    );
    Ok(report)
}

/// `N_{φ(p)}(g,β) ≤ N_p(g∘φ, β)` for every point and every `(g,β)`, for a
/// continuous surjection `φ`.
pub fn check_continuity_nbhd(
    phi: &PointMap,
    x: &Powerset,
    tau: &Topology,
    y: &Powerset,
    eta: &Topology,
) -> Result<AxiomReport> {
    let cont = is_continuous(phi, x, tau, y, eta)?;
    if !cont.continuous {
        return Err(KernelError::PreconditionViolated(
            "map is not continuous".into(),
        ));
    }
    if let Some(q) = phi.missed_point() {
        return Err(KernelError::PreconditionViolated(format!(
            "map is not surjective (point {q} missed)"
        )));
    }
    let nx = nbhd_from_interior(x, &interior_from_topology(x, tau));
    let ny = nbhd_from_interior(y, &interior_from_topology(y, eta));
    Ok(continuity_nbhd_report(phi, x, &nx, y, &ny))
}

pub(crate) fn continuity_nbhd_report(
    phi: &PointMap,
    x: &Powerset,
    nx: &NbhdSystem,
    y: &Powerset,
    ny: &NbhdSystem,
) -> AxiomReport {
    let alg = x.algebra();
    let mut report = AxiomReport::new("neighborhoods under a continuous surjection");
    let witness = (0..x.points()).find_map(|p| {
        (0..y.cells()).find_map(|c| {
            let gb = y.graded(c);
            let pulled = x.cell_of(x.pullback(y, phi, gb.set), gb.grade);
            let lhs = ny.value(phi.apply(p), c);
            let rhs = nx.value(p, pulled);
            (!alg.leq(lhs, rhs)).then(|| {
                format!(
                    "p={p}, (g,β)={}: N_φ(p)={} ≰ N_p(g∘φ,β)={}",
                    y.render_cell(c),
                    alg.label(lhs),
                    alg.label(rhs)
                )
            })
        })
    });
    report.record("N_φ(p) ≤ φ→(N_p)", witness);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn ps(alg: Arc<crate::Algebra>, m: usize) -> Powerset {
        Powerset::new(alg, m, &Limits::default()).unwrap()
    }

    fn e(i: usize) -> Elem {
        Elem::new(i)
    }

    #[test]
    fn discrete_and_indiscrete_are_topologies() {
        let limits = Limits::default();
        for (alg, m) in [(corpus::boolean(), 2), (corpus::godel(3), 2), (corpus::lukasiewicz(3), 2)] {
            let p = ps(alg, m);
            assert!(check_topology(&p, &Topology::discrete(&p), &limits).unwrap().passed());
            assert!(check_topology(&p, &Topology::indiscrete(&p), &limits).unwrap().passed());
        }
    }

    #[test]
    fn missing_top_fails_o1() {
        let p = ps(corpus::boolean(), 1);
        let mut table = Topology::discrete(&p).table().to_vec();
        table[p.one()] = e(0);
        let t = Topology::from_table(&p, table).unwrap();
        let report = check_topology(&p, &t, &Limits::default()).unwrap();
        assert!(report.is_fail("o1"));
    }

    #[test]
    fn ordering() {
        let p = ps(corpus::boolean(), 2);
        let d = Topology::discrete(&p);
        let i = Topology::indiscrete(&p);
        assert_eq!(order_topologies(&p, &i, &d), TopologyOrder::Less);
        assert_eq!(order_topologies(&p, &d, &d), TopologyOrder::Equal);
        // open {a} versus open {b}
        let a = p.index_of(&crate::FuzzySet(vec![e(1), e(0)]));
        let b = p.index_of(&crate::FuzzySet(vec![e(0), e(1)]));
        let mut ta = i.table().to_vec();
        ta[a] = e(1);
        let mut tb = i.table().to_vec();
        tb[b] = e(1);
        let (ta, tb) = (
            Topology::from_table(&p, ta).unwrap(),
            Topology::from_table(&p, tb).unwrap(),
        );
        assert_eq!(order_topologies(&p, &ta, &tb), TopologyOrder::Incomparable);
    }

    #[test]
    fn generation_from_bottom_is_indiscrete() {
        let p = ps(corpus::godel(3), 2);
        let seed = vec![e(0); p.size()];
        assert_eq!(generate_topology(&p, &seed).unwrap(), Topology::indiscrete(&p));
        let d = Topology::discrete(&p);
        assert_eq!(generate_topology(&p, d.table()).unwrap(), d);
    }

    #[test]
    fn continuity_examples() {
        let x = ps(corpus::boolean(), 1);
        let d = Topology::discrete(&x);
        let i = Topology::indiscrete(&x);
        let id = PointMap::identity(1);
        assert!(is_continuous(&id, &x, &d, &x, &d).unwrap().continuous);
        // With one point every topology on a two-element L is discrete.
        assert!(is_continuous(&id, &x, &i, &x, &d).unwrap().continuous);

        let x3 = ps(corpus::godel(3), 1);
        let d3 = Topology::discrete(&x3);
        let i3 = Topology::indiscrete(&x3);
        let c = is_continuous(&id, &x3, &i3, &x3, &d3).unwrap();
        assert!(!c.continuous);
        assert_eq!(c.witness, Some(x3.constant(e(1))));
        assert!(is_continuous(&id, &x3, &d3, &x3, &i3).unwrap().continuous);
    }

    #[test]
    fn interior_examples() {
        let p = ps(corpus::godel(3), 2);
        let alg = p.algebra().clone();
        let d = interior_from_topology(&p, &Topology::discrete(&p));
        for c in 0..p.cells() {
            assert_eq!(d.apply(c), p.graded(c).set);
        }
        let i = interior_from_topology(&p, &Topology::indiscrete(&p));
        for f in p.sets() {
            assert_eq!(i.apply(p.cell_of(f, alg.bot())), f);
            let expect = if f == p.one() { p.one() } else { p.zero() };
            assert_eq!(i.apply(p.cell_of(f, alg.top())), expect);
        }
    }

    #[test]
    fn discrete_interior_and_nbhd_pass() {
        let limits = Limits::default();
        for (alg, m) in [(corpus::boolean(), 2), (corpus::godel(3), 2), (corpus::lukasiewicz(3), 2)] {
            let p = ps(alg, m);
            let i = interior_from_topology(&p, &Topology::discrete(&p));
            assert!(check_interior(&p, &i, &limits).unwrap().passed());
            let n = nbhd_from_interior(&p, &i);
            let report = check_nbhd(&p, &n).unwrap();
            assert!(report.passed(), "{report}");
            for pt in 0..m {
                for c in 0..p.cells() {
                    assert_eq!(n.value(pt, c), p.value(p.graded(c).set, pt));
                }
            }
        }
    }

    #[test]
    fn indiscrete_single_point_boolean_passes() {
        // On |L|=2, |X|=1 the indiscrete topology is the discrete one.
        let p = ps(corpus::boolean(), 1);
        let i = interior_from_topology(&p, &Topology::indiscrete(&p));
        assert!(check_interior(&p, &i, &Limits::default()).unwrap().passed());
        assert!(check_nbhd(&p, &nbhd_from_interior(&p, &i)).unwrap().passed());
    }

    #[test]
    fn indiscrete_two_points_fails_only_i2() {
        // I(1_X,⊤) ⊗ I({a},⊥) = {a} but I({a}, ⊤∨⊥) = 0_X.
        let p = ps(corpus::boolean(), 2);
        let i = interior_from_topology(&p, &Topology::indiscrete(&p));
        let report = check_interior(&p, &i, &Limits::default()).unwrap();
        let failed: Vec<&str> = report.failures().map(|c| c.axiom.as_str()).collect();
        assert_eq!(failed, vec!["I2"]);
        let n = check_nbhd(&p, &nbhd_from_interior(&p, &i)).unwrap();
        let failed: Vec<&str> = n.failures().map(|c| c.axiom.as_str()).collect();
        assert_eq!(failed, vec!["N2"]);
    }

    #[test]
    fn mutations_are_caught() {
        let p = ps(corpus::boolean(), 2);
        let i = interior_from_topology(&p, &Topology::discrete(&p));
        let mut table = i.table().to_vec();
        let cell = p.cell_of(p.zero(), e(0));
        table[cell] = p.one();
        let broken = InteriorOp::from_table(&p, table).unwrap();
        assert!(check_interior(&p, &broken, &Limits::default()).unwrap().is_fail("I3"));

        let n = nbhd_from_interior(&p, &i);
        let mut tables: Vec<Vec<Elem>> = (0..2).map(|q| n.table(q).to_vec()).collect();
        tables[0][cell] = e(1);
        let broken = NbhdSystem::from_tables(&p, tables).unwrap();
        assert!(check_nbhd(&p, &broken).unwrap().is_fail("N3"));
    }

    #[test]
    fn continuity_nbhd_collapse() {
        let x = ps(corpus::boolean(), 2);
        let y = ps(corpus::boolean(), 1);
        let collapse = PointMap::new(vec![0, 0], 1).unwrap();
        let report = check_continuity_nbhd(
            &collapse,
            &x,
            &Topology::discrete(&x),
            &y,
            &Topology::discrete(&y),
        )
        .unwrap();
        assert!(report.passed());

        let id = PointMap::identity(1);
        let g3 = ps(corpus::godel(3), 1);
        let err = check_continuity_nbhd(
            &id,
            &g3,
            &Topology::indiscrete(&g3),
            &g3,
            &Topology::discrete(&g3),
        );
        assert!(matches!(err, Err(KernelError::PreconditionViolated(_))));
    }
}
