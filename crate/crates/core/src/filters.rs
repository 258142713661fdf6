//! L-fuzzy filters: axioms, enumeration, saturation, ultrafilters and the
//! image/preimage constructions.

use crate::error::{KernelError, Result};
use crate::lattice::Elem;
use crate::limits::Limits;
use crate::powerset::{PointMap, Powerset};
use crate::report::AxiomReport;
use crate::topology::check_map_shape;
use serde::Serialize;

/// A total map `F: L^X × L → L`, indexed by graded cell.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FilterTable {
    table: Vec<Elem>,
}

impl FilterTable {
    pub fn from_table(ps: &Powerset, table: Vec<Elem>) -> Result<Self> {
        if table.len() != ps.cells() {
            return Err(KernelError::TableShape {
                expected: ps.cells(),
                found: table.len(),
            });
        }
        Ok(FilterTable { table })
    }

    pub fn constant(ps: &Powerset, e: Elem) -> Self {
        FilterTable {
            table: vec![e; ps.cells()],
        }
    }

    #[inline]
    pub fn value(&self, cell: usize) -> Elem {
        self.table[cell]
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    pub fn into_table(self) -> Vec<Elem> {
        self.table
    }

    /// Pointwise order.
    pub fn leq(&self, ps: &Powerset, other: &FilterTable) -> bool {
        let alg = ps.algebra();
        self.table
            .iter()
            .zip(&other.table)
            .all(|(&a, &b)| alg.leq(a, b))
    }

    /// Pointwise join.
    pub fn join(&self, ps: &Powerset, other: &FilterTable) -> FilterTable {
        let alg = ps.algebra();
        FilterTable {
            table: self
                .table
                .iter()
                .zip(&other.table)
                .map(|(&a, &b)| alg.join(a, b))
                .collect(),
        }
    }

    /// One `set:[v,…]` entry per fuzzy set, values listed by grade.
    pub fn render(&self, ps: &Powerset) -> String {
        let alg = ps.algebra();
        let mut parts = Vec::new();
        for f in ps.sets() {
            let row: Vec<&str> = alg
                .elements()
                .map(|a| alg.label(self.value(ps.cell_of(f, a))))
                .collect();
            parts.push(format!("{}:[{}]", ps.render(f), row.join(",")));
        }
        parts.join(" ")
    }
}

/// Per-axiom verdicts for FF0–FF3.
pub fn check_filter(ps: &Powerset, f: &FilterTable) -> AxiomReport {
    let alg = ps.algebra();
    let cells = ps.cells();
    let mut report = AxiomReport::new("L-fuzzy filter");
    let rc = |c: usize| ps.render_cell(c);
    let label = |e: Elem| alg.label(e).to_string();

    report.record(
        "FF0",
        alg.elements()
            .map(|a| ps.cell_of(ps.one(), a))
            .find(|&c| f.value(c) != alg.top())
            .map(|c| format!("F{}={}", rc(c), label(f.value(c)))),
    );
    let pairs = || (0..cells).flat_map(move |a| (0..cells).map(move |b| (a, b)));
    report.record(
        "FF1",
        pairs()
            .find(|&(a, b)| ps.cell_leq(a, b) && !alg.leq(f.value(a), f.value(b)))
            .map(|(a, b)| {
                format!(
                    "{} ≼ {} but {} ≰ {}",
                    rc(a),
                    rc(b),
                    label(f.value(a)),
                    label(f.value(b))
                )
            }),
    );
    report.record(
        "FF2",
        pairs()
            .find(|&(a, b)| !alg.leq(alg.mul(f.value(a), f.value(b)), f.value(ps.cell_tensor(a, b))))
            .map(|(a, b)| {
                format!(
                    "a={}, b={}: F(a)⊗F(b)={} ≰ F(a⊠b)={}",
                    rc(a),
                    rc(b),
                    label(alg.mul(f.value(a), f.value(b))),
                    label(f.value(ps.cell_tensor(a, b)))
                )
            }),
    );
    report.record(
        "FF3",
        alg.elements()
            .map(|a| ps.cell_of(ps.zero(), a))
            .find(|&c| f.value(c) != alg.bot())
            .map(|c| format!("F{}={}", rc(c), label(f.value(c)))),
    );
    report
}

fn require_filter(ps: &Powerset, f: &FilterTable) -> Result<()> {
    let report = check_filter(ps, f);
    let failed = report.failures().next().map(|c| c.axiom.clone());
    match failed {
        None => Ok(()),
        Some(axiom) => Err(KernelError::PreconditionViolated(format!(
            "table is not a filter: {axiom} fails"
        ))),
    }
}

/// `F(f,α) ≤ (F[(f,α)⇒(0_X,ρ)])→⊥` for every cell and every `ρ ≤ α`.
pub fn check_ff3_prime(ps: &Powerset, f: &FilterTable) -> AxiomReport {
    let alg = ps.algebra();
    let mut report = AxiomReport::new("FF3'");
    let witness = (0..ps.cells()).find_map(|c| {
        let alpha = ps.graded(c).grade;
        alg.elements()
            .filter(|&rho| alg.leq(rho, alpha))
            .find(|&rho| {
                let imp = ps.cell_impl(c, ps.cell_of(ps.zero(), rho));
                !alg.leq(f.value(c), alg.neg(f.value(imp)))
            })
            .map(|rho| format!("at {} with ρ={}", ps.render_cell(c), alg.label(rho)))
    });
    report.record("FF3'", witness);
    report
}

/// Cells listed in a linear extension of `≼`.
fn linear_extension(ps: &Powerset) -> Vec<usize> {
    let lat = ps.lattice();
    // Height of each element: length of the longest chain down to ⊥.
    let mut height = vec![0usize; lat.size()];
    let mut order: Vec<Elem> = lat.elements().collect();
    order.sort_by_key(|&e| lat.elements().filter(|&d| lat.leq(d, e)).count());
    for &e in &order {
        height[e.index()] = order
            .iter()
            .filter(|&&d| d != e && lat.leq(d, e))
            .map(|d| height[d.index()] + 1)
            .max()
            .unwrap_or(0);
    }
    let top_h = height[lat.top().index()];
    let key = |c: usize| {
        let g = ps.graded(c);
        let set_h: usize = ps.values(g.set).iter().map(|e| height[e.index()]).sum();
        (set_h + top_h - height[g.grade.index()], c)
    };
    let mut cells: Vec<usize> = (0..ps.cells()).collect();
    cells.sort_by_key(|&c| key(c));
    cells
}

/// Every filter on the ground, in canonical (lexicographic table) order.
///
/// Backtracks over cells in a linear extension of `≼`. Since `a⊠b ≼ a` and
/// `a⊠b ≼ b`, every FF2 instance is decided as soon as the later of `a, b`
/// is assigned, and FF1 turns into a lower bound from assigned predecessors.
pub fn enumerate_filters(ps: &Powerset, limits: &Limits) -> Result<Vec<FilterTable>> {
    let alg = ps.algebra();
    let order = linear_extension(ps);
    let cells = ps.cells();
    let mut pos = vec![0usize; cells];
    for (i, &c) in order.iter().enumerate() {
        pos[c] = i;
    }
    // Predecessors of each cell (strictly earlier in the extension).
    let preds: Vec<Vec<usize>> = (0..cells)
        .map(|c| {
            (0..cells)
                .filter(|&d| d != c && ps.cell_leq(d, c))
                .collect()
        })
        .collect();
    let pinned = |c: usize| {
        let g = ps.graded(c);
        if g.set == ps.one() {
            Some(alg.top())
        } else if g.set == ps.zero() {
            Some(alg.bot())
        } else {
            None
        }
    };

    struct Search<'a> {
        ps: &'a Powerset,
        order: &'a [usize],
        pos: &'a [usize],
        preds: &'a [Vec<usize>],
        pinned: &'a dyn Fn(usize) -> Option<Elem>,
        table: Vec<Elem>,
        out: Vec<FilterTable>,
        cap: usize,
    }

    impl Search<'_> {
        fn consistent(&self, i: usize) -> bool {
            let ps = self.ps;
            let alg = ps.algebra();
            let c = self.order[i];
            let v = self.table[c];
            if !self.preds[c].iter().all(|&d| alg.leq(self.table[d], v)) {
                return false;
            }
            self.order[..=i].iter().all(|&a| {
                let t = ps.cell_tensor(c, a);
                debug_assert!(self.pos[t] <= i);
                alg.leq(alg.mul(v, self.table[a]), self.table[t])
            })
        }

        fn run(&mut self, i: usize) -> Result<()> {
            if i == self.order.len() {
                if self.out.len() >= self.cap {
                    return Err(KernelError::size_limit(
                        "filters",
                        self.out.len() as u128 + 1,
                        self.cap as u128,
                    ));
                }
                self.out.push(FilterTable {
                    table: self.table.clone(),
                });
                return Ok(());
            }
            let c = self.order[i];
            let choices: Vec<Elem> = match (self.pinned)(c) {
                Some(e) => vec![e],
                None => self.ps.algebra().elements().collect(),
            };
            for v in choices {
                self.table[c] = v;
                if self.consistent(i) {
                    self.run(i + 1)?;
                }
            }
            Ok(())
        }
    }

    let mut search = Search {
        ps,
        order: &order,
        pos: &pos,
        preds: &preds,
        pinned: &pinned,
        table: vec![alg.bot(); cells],
        out: Vec::new(),
        cap: limits.max_filters,
    };
    search.run(0)?;
    let mut out = search.out;
    out.sort();
    Ok(out)
}

/// Pointwise join of a `≼`-chain of filters.
pub fn sup_of_chain(ps: &Powerset, chain: &[FilterTable]) -> Result<FilterTable> {
    let first = chain.first().ok_or_else(|| {
        KernelError::PreconditionViolated("empty chain".into())
    })?;
    for (i, a) in chain.iter().enumerate() {
        if a.table.len() != ps.cells() {
            return Err(KernelError::TableShape {
                expected: ps.cells(),
                found: a.table.len(),
            });
        }
        for (j, b) in chain.iter().enumerate().skip(i + 1) {
            if !a.leq(ps, b) && !b.leq(ps, a) {
                return Err(KernelError::NotAChain(i, j));
            }
        }
    }
    Ok(chain[1..]
        .iter()
        .fold(first.clone(), |acc, f| acc.join(ps, f)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Saturation {
    Filter { filter: FilterTable },
    /// The least closed table above the seed assigns a non-⊥ value to
    /// `(0_X, grade)`.
    NoFilterAbove { grade: Elem, closure: FilterTable },
}

impl Saturation {
    pub fn filter(self) -> Option<FilterTable> {
        match self {
            Saturation::Filter { filter } => Some(filter),
            Saturation::NoFilterAbove { .. } => None,
        }
    }

    pub fn is_filter(&self) -> bool {
        matches!(self, Saturation::Filter { .. })
    }
}

/// Least table above `seed` with `G(1_X,·)=⊤` that is closed under upward
/// transport along `≼` and the FF2 rule. A filter if FF3 survives.
pub fn saturate(ps: &Powerset, seed: &FilterTable) -> Result<Saturation> {
    if seed.table.len() != ps.cells() {
        return Err(KernelError::TableShape {
            expected: ps.cells(),
            found: seed.table.len(),
        });
    }
    let alg = ps.algebra();
    let cells = ps.cells();
    let mut g = seed.table.clone();
    for a in alg.elements() {
        g[ps.cell_of(ps.one(), a)] = alg.top();
    }
    let ups: Vec<Vec<usize>> = (0..cells)
        .map(|c| (0..cells).filter(|&d| d != c && ps.cell_leq(c, d)).collect())
        .collect();
    let mut changed = true;
    while changed {
        changed = false;
        for a in 0..cells {
            for &d in &ups[a] {
                let v = alg.join(g[d], g[a]);
                if v != g[d] {
                    g[d] = v;
                    changed = true;
                }
            }
            for b in a..cells {
                let t = ps.cell_tensor(a, b);
                let v = alg.join(g[t], alg.mul(g[a], g[b]));
                if v != g[t] {
                    g[t] = v;
                    changed = true;
                }
            }
        }
    }
    let closure = FilterTable { table: g };
    let bad = alg
        .elements()
        .find(|&a| closure.value(ps.cell_of(ps.zero(), a)) != alg.bot());
    Ok(match bad {
        None => Saturation::Filter { filter: closure },
        Some(grade) => Saturation::NoFilterAbove { grade, closure },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UltraMode {
    /// No strictly larger filter exists.
    Maximality,
    /// `U(f,α) = (U[(f,α)⇒(0_X,ρ)])→⊥` for every cell and every `ρ ≤ α`.
    Characterization,
}

/// How a maximality verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MaximalityMethod {
    Enumeration,
    SaturationProbe,
    Identity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UltraVerdict {
    pub ultrafilter: bool,
    pub witness: Option<String>,
    pub method: MaximalityMethod,
}

/// Decide whether a filter is an ultrafilter.
///
/// Maximality uses the full filter list when it fits under the caps and
/// otherwise exact saturation probes: for each cell and each value not
/// already below `U` there, saturate `U` raised at that cell. A strictly
/// larger filter exists iff some probe yields a filter.
pub fn is_ultrafilter(
    ps: &Powerset,
    u: &FilterTable,
    mode: UltraMode,
    limits: &Limits,
) -> Result<UltraVerdict> {
    require_filter(ps, u)?;
    match mode {
        UltraMode::Characterization => Ok(characterization(ps, u)),
        UltraMode::Maximality => match enumerate_filters(ps, limits) {
            Ok(all) => Ok(maximal_in(ps, u, &all)),
            Err(KernelError::SizeLimit { .. }) => maximal_by_probes(ps, u),
            Err(e) => Err(e),
        },
    }
}

/// Maximality against a precomputed filter list.
pub fn maximal_in(ps: &Powerset, u: &FilterTable, all: &[FilterTable]) -> UltraVerdict {
    let above = all.iter().find(|f| *f != u && u.leq(ps, f));
    UltraVerdict {
        ultrafilter: above.is_none(),
        witness: above.map(|f| format!("strictly larger filter {}", f.render(ps))),
        method: MaximalityMethod::Enumeration,
    }
}

/// Exact maximality by saturation probes.
pub fn maximal_by_probes(ps: &Powerset, u: &FilterTable) -> Result<UltraVerdict> {
    let alg = ps.algebra();
    for c in 0..ps.cells() {
        for v in alg.elements().filter(|&v| !alg.leq(v, u.value(c))) {
            let mut seed = u.clone();
            seed.table[c] = alg.join(u.value(c), v);
            if let Saturation::Filter { filter } = saturate(ps, &seed)? {
                return Ok(UltraVerdict {
                    ultrafilter: false,
                    witness: Some(format!(
                        "raising {} to {} extends to {}",
                        ps.render_cell(c),
                        alg.label(seed.table[c]),
                        filter.render(ps)
                    )),
                    method: MaximalityMethod::SaturationProbe,
                });
            }
        }
    }
    Ok(UltraVerdict {
        ultrafilter: true,
        witness: None,
        method: MaximalityMethod::SaturationProbe,
    })
}

fn characterization(ps: &Powerset, u: &FilterTable) -> UltraVerdict {
    let alg = ps.algebra();
    let witness = (0..ps.cells()).find_map(|c| {
        let alpha = ps.graded(c).grade;
        alg.elements()
            .filter(|&rho| alg.leq(rho, alpha))
            .find_map(|rho| {
                let imp = ps.cell_impl(c, ps.cell_of(ps.zero(), rho));
                let rhs = alg.neg(u.value(imp));
                (rhs != u.value(c)).then(|| {
                    format!(
                        "at {} with ρ={}: U={} but (U[⇒(0_X,ρ)])→⊥={}",
                        ps.render_cell(c),
                        alg.label(rho),
                        alg.label(u.value(c)),
                        alg.label(rhs)
                    )
                })
            })
    });
    UltraVerdict {
        ultrafilter: witness.is_none(),
        witness,
        method: MaximalityMethod::Identity,
    }
}

/// `Û(f,α) = U(f,α) ∨ (U[(g,β)⇒(f,α)] ⊗ G)` with
/// `G = (U[(g,β)⇒(0_X,ρ)])→⊥`.
pub fn hat_extension(ps: &Powerset, u: &FilterTable, g: usize, beta: Elem, rho: Elem) -> FilterTable {
    let alg = ps.algebra();
    let gb = ps.cell_of(g, beta);
    let big_g = alg.neg(u.value(ps.cell_impl(gb, ps.cell_of(ps.zero(), rho))));
    FilterTable {
        table: (0..ps.cells())
            .map(|c| alg.join(u.value(c), alg.mul(u.value(ps.cell_impl(gb, c)), big_g)))
            .collect(),
    }
}

/// [`hat_extension`] for every `ρ ≤ β`.
pub fn hat_extensions(
    ps: &Powerset,
    u: &FilterTable,
    g: usize,
    beta: Elem,
) -> Vec<(Elem, FilterTable)> {
    let alg = ps.algebra();
    alg.elements()
        .filter(|&rho| alg.leq(rho, beta))
        .map(|rho| (rho, hat_extension(ps, u, g, beta, rho)))
        .collect()
}

/// `φ→(F)(g,β) = F(g∘φ, β)` on the codomain.
pub fn image_filter(phi: &PointMap, x: &Powerset, f: &FilterTable, y: &Powerset) -> Result<FilterTable> {
    check_map_shape(phi, x, y)?;
    let table = (0..y.cells())
        .map(|c| {
            let gb = y.graded(c);
            f.value(x.cell_of(x.pullback(y, phi, gb.set), gb.grade))
        })
        .collect();
    Ok(FilterTable { table })
}

/// `φ←(F)(f,α) = ⋁{F(g,β) | (g∘φ,β) ≼ (f,α)}` on the domain of a surjection.
pub fn preimage_filter(phi: &PointMap, x: &Powerset, f: &FilterTable, y: &Powerset) -> Result<FilterTable> {
    check_map_shape(phi, x, y)?;
    phi.require_surjective()?;
    let alg = x.algebra();
    let pulled: Vec<usize> = (0..y.cells())
        .map(|c| {
            let gb = y.graded(c);
            x.cell_of(x.pullback(y, phi, gb.set), gb.grade)
        })
        .collect();
    let table = (0..x.cells())
        .map(|target| {
            alg.lattice().join_set(
                (0..y.cells())
                    .filter(|&c| x.cell_leq(pulled[c], target))
                    .map(|c| f.value(c)),
            )
        })
        .collect();
    Ok(FilterTable { table })
}
