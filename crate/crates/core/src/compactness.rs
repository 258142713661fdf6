//! Convergence, adherence, the compactness oracle, finite products and the
//! Tychonoff harness.

use crate::error::{KernelError, Result};
use crate::filters::{
    check_filter, enumerate_filters, image_filter, maximal_by_probes, maximal_in,
    preimage_filter, saturate, FilterTable, Saturation,
};
use crate::lattice::Elem;
use crate::limits::Limits;
use crate::powerset::{PointMap, Powerset};
use crate::report::AxiomReport;
use crate::topology::{
    check_interior, check_nbhd, check_topology, continuity_nbhd_report, generate_topology,
    interior_from_topology, is_continuous, nbhd_from_interior, InteriorOp, NbhdSystem, Topology,
};
use serde::Serialize;
use std::sync::Arc;
use std::time::{Duration, Instant};

/// A ground with a topology and its derived interior operator and
/// neighborhood system. Only the topology axioms are enforced; the
/// derived structures carry their reports.
#[derive(Clone, Debug)]
pub struct Space {
    ps: Arc<Powerset>,
    topology: Topology,
    interior: InteriorOp,
    nbhd: NbhdSystem,
    interior_report: AxiomReport,
    nbhd_report: AxiomReport,
}

impl Space {
    pub fn new(ps: Arc<Powerset>, topology: Topology, limits: &Limits) -> Result<Self> {
        let report = check_topology(&ps, &topology, limits)?;
        if let Some(c) = report.failures().next() {
            return Err(KernelError::InvalidStructure(format!(
                "not a topology: {} fails",
                c.axiom
            )));
        }
        let interior = interior_from_topology(&ps, &topology);
        let nbhd = nbhd_from_interior(&ps, &interior);
        let interior_report = check_interior(&ps, &interior, limits)?;
        let nbhd_report = check_nbhd(&ps, &nbhd)?;
        Ok(Space {
            ps,
            topology,
            interior,
            nbhd,
            interior_report,
            nbhd_report,
        })
    }

    pub fn powerset(&self) -> &Arc<Powerset> {
        &self.ps
    }

    pub fn topology(&self) -> &Topology {
        &self.topology
    }

    pub fn interior(&self) -> &InteriorOp {
        &self.interior
    }

    pub fn nbhd(&self) -> &NbhdSystem {
        &self.nbhd
    }

    pub fn interior_report(&self) -> &AxiomReport {
        &self.interior_report
    }

    pub fn nbhd_report(&self) -> &AxiomReport {
        &self.nbhd_report
    }

    pub fn points(&self) -> usize {
        self.ps.points()
    }

    /// `N_p` as a table over graded cells.
    pub fn nbhd_table(&self, p: usize) -> FilterTable {
        FilterTable::from_table(&self.ps, self.nbhd.table(p).to_vec())
            .expect("neighborhood tables have one entry per cell")
    }
}

/// `U` converges to `p` iff `N_p ≤ U` pointwise.
pub fn converges(s: &Space, u: &FilterTable, p: usize) -> bool {
    let alg = s.ps.algebra();
    (0..s.ps.cells()).all(|c| alg.leq(s.nbhd.value(p, c), u.value(c)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Adherence {
    pub adherent: bool,
    /// The least filter above both `F` and `N_p`, when one exists.
    pub certificate: Option<FilterTable>,
}

/// `p` is adherent to `F` iff some filter dominates both `F` and `N_p`;
/// decided by saturating their pointwise join.
pub fn is_adherent(s: &Space, f: &FilterTable, p: usize) -> Result<Adherence> {
    let seed = f.join(&s.ps, &s.nbhd_table(p));
    Ok(match saturate(&s.ps, &seed)? {
        Saturation::Filter { filter } => Adherence {
            adherent: true,
            certificate: Some(filter),
        },
        Saturation::NoFilterAbove { .. } => Adherence {
            adherent: false,
            certificate: None,
        },
    })
}

fn first_adherent(s: &Space, f: &FilterTable) -> Result<Option<(usize, FilterTable)>> {
    for p in 0..s.points() {
        if let Some(g) = is_adherent(s, f, p)?.certificate {
            return Ok(Some((p, g)));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompactnessVerdict {
    pub compact: bool,
    /// A filter without adherent point.
    pub witness: Option<FilterTable>,
    pub filters: usize,
    pub ultrafilters: usize,
    /// Verdict from ultrafilters alone.
    pub ultrafilter_path: bool,
}

impl CompactnessVerdict {
    pub fn paths_agree(&self) -> bool {
        self.compact == self.ultrafilter_path
    }
}

/// Full sweep over every filter, plus the ultrafilter-only verdict.
pub fn is_compact(s: &Space, limits: &Limits) -> Result<CompactnessVerdict> {
    let all = enumerate_filters(&s.ps, limits)?;
    let mut witness = None;
    let mut ultra_ok = true;
    let mut ultrafilters = 0;
    for f in &all {
        let adherent = first_adherent(s, f)?.is_some();
        if !adherent && witness.is_none() {
            witness = Some(f.clone());
        }
        if maximal_in(&s.ps, f, &all).ultrafilter {
            ultrafilters += 1;
            ultra_ok &= adherent;
        }
    }
    Ok(CompactnessVerdict {
        compact: witness.is_none(),
        witness,
        filters: all.len(),
        ultrafilters,
        ultrafilter_path: ultra_ok,
    })
}

/// Compactness of the image of a compact space under a continuous
/// surjection, with the transport argument replayed filter by filter.
pub fn image_compactness_check(
    phi: &PointMap,
    sx: &Space,
    sy: &Space,
    limits: &Limits,
) -> Result<AxiomReport> {
    let (x, y) = (sx.powerset().as_ref(), sy.powerset().as_ref());
    let cont = is_continuous(phi, x, sx.topology(), y, sy.topology())?;
    if !cont.continuous {
        return Err(KernelError::PreconditionViolated(
            "map is not continuous".into(),
        ));
    }
    phi.require_surjective()
        .map_err(|e| KernelError::PreconditionViolated(e.to_string()))?;
    if !is_compact(sx, limits)?.compact {
        return Err(KernelError::PreconditionViolated(
            "domain is not compact".into(),
        ));
    }
    let alg = x.algebra();
    let below = |a: &FilterTable, b: &FilterTable| {
        (0..y.cells()).find(|&c| !alg.leq(a.value(c), b.value(c)))
    };

    let mut round_trip = None;
    let mut dominated = None;
    let mut nbhd_pushed = None;
    let mut nbhd_in_g = None;
    let mut no_point = None;
    for f in enumerate_filters(y, limits)? {
        let pre = preimage_filter(phi, x, &f, y)?;
        let back = image_filter(phi, x, &pre, y)?;
        if back != f && round_trip.is_none() {
            round_trip = Some(format!("F={}", f.render(y)));
        }
        let Some((p, g)) = first_adherent(sx, &pre)? else {
            no_point.get_or_insert_with(|| format!("φ←(F) has no adherent point, F={}", f.render(y)));
            continue;
        };
        let img_g = image_filter(phi, x, &g, y)?;
        let img_np = image_filter(phi, x, &sx.nbhd_table(p), y)?;
        if let Some(c) = below(&f, &img_g) {
            dominated.get_or_insert_with(|| format!("F={} at {}", f.render(y), y.render_cell(c)));
        }
        if let Some(c) = below(&sy.nbhd_table(phi.apply(p)), &img_np) {
            nbhd_pushed.get_or_insert_with(|| format!("p={p} at {}", y.render_cell(c)));
        }
        if let Some(c) = below(&img_np, &img_g) {
            nbhd_in_g.get_or_insert_with(|| format!("p={p} at {}", y.render_cell(c)));
        }
    }
    let verdict = is_compact(sy, limits)?;
    let mut report = AxiomReport::new("image of a compact space");
    report.record(
        "codomain compact",
        verdict.witness.map(|w| format!("filter without adherent point {}", w.render(y))),
    );
    report.record("F = φ→(φ←(F))", round_trip);
    report.record("φ←(F) has an adherent point", no_point);
    report.record("F ≤ φ→(G)", dominated);
    report.record("N_φ(p) ≤ φ→(N_p)", nbhd_pushed);
    report.record("φ→(N_p) ≤ φ→(G)", nbhd_in_g);
    Ok(report)
}

/// A finite product of spaces over one algebra, carrying the least topology
/// making every projection continuous.
#[derive(Clone, Debug)]
pub struct ProductSpace {
    factors: Vec<Space>,
    space: Space,
    projections: Vec<PointMap>,
}

pub const MAX_FACTORS: usize = 3;

impl ProductSpace {
    pub fn factors(&self) -> &[Space] {
        &self.factors
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn projections(&self) -> &[PointMap] {
        &self.projections
    }

    /// Coordinates of a product point, factor 0 most significant.
    pub fn coords(&self, p: usize) -> Vec<usize> {
        self.projections.iter().map(|pi| pi.apply(p)).collect()
    }
}

pub fn build_product(factors: &[Space], limits: &Limits) -> Result<ProductSpace> {
    if factors.is_empty() || factors.len() > MAX_FACTORS {
        return Err(KernelError::PreconditionViolated(format!(
            "products take 1 to {MAX_FACTORS} factors, got {}",
            factors.len()
        )));
    }
    let alg = factors[0].powerset().algebra().clone();
    if factors
        .iter()
        .any(|s| !Arc::ptr_eq(s.powerset().algebra(), &alg) && s.powerset().lattice() != alg.lattice())
    {
        return Err(KernelError::Mismatch);
    }
    let radices: Vec<usize> = factors.iter().map(Space::points).collect();
    let points = radices.iter().try_fold(1usize, |acc, &m| acc.checked_mul(m));
    let points = points.ok_or_else(|| KernelError::size_limit("product ground", u128::MAX, 0))?;
    let ps = Arc::new(Powerset::new(alg.clone(), points, limits)?);

    let projections: Vec<PointMap> = (0..factors.len())
        .map(|lambda| {
            let stride: usize = radices[lambda + 1..].iter().product();
            let image = (0..points).map(|p| (p / stride) % radices[lambda]).collect();
            PointMap::new(image, radices[lambda]).expect("coordinates are in range")
        })
        .collect();

    let mut seed = vec![alg.bot(); ps.size()];
    for (s, pi) in factors.iter().zip(&projections) {
        let fp = s.powerset();
        for h in fp.sets() {
            let idx = ps.pullback(fp, pi, h);
            seed[idx] = alg.join(seed[idx], s.topology().grade(h));
        }
    }
    let topology = generate_topology(&ps, &seed)?;
    let space = Space::new(ps, topology, limits)?;
    Ok(ProductSpace {
        factors: factors.to_vec(),
        space,
        projections,
    })
}

/// Tuples `h = (h_λ)` of factor fuzzy sets, each with its product
/// `⊗_λ (h_λ∘π_λ)` and grade `⊗_λ τ_λ(h_λ)`.
struct GammaTuples {
    tuples: Vec<Vec<usize>>,
    product: Vec<usize>,
    grade: Vec<Elem>,
}

fn gamma_tuples(p: &ProductSpace, limits: &Limits) -> Result<GammaTuples> {
    let ps = p.space.powerset();
    let alg = ps.algebra();
    let sizes: Vec<usize> = p.factors.iter().map(|s| s.powerset().size()).collect();
    let count: u128 = sizes.iter().map(|&s| s as u128).product();
    if count > limits.max_candidates as u128 {
        return Err(KernelError::size_limit("Γ tuples", count, limits.max_candidates as u128));
    }
    let mut tuples = vec![Vec::new()];
    for &n in &sizes {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |h| {
                    let mut t = t.clone();
                    t.push(h);
                    t
                })
            })
            .collect();
    }
    let product = tuples
        .iter()
        .map(|t| {
            t.iter()
                .zip(&p.factors)
                .zip(&p.projections)
                .fold(ps.one(), |acc, ((&h, s), pi)| {
                    ps.tensor(acc, ps.pullback(s.powerset(), pi, h))
                })
        })
        .collect();
    let grade = tuples
        .iter()
        .map(|t| {
            t.iter()
                .zip(&p.factors)
                .fold(alg.top(), |acc, (&h, s)| alg.mul(acc, s.topology().grade(h)))
        })
        .collect();
    Ok(GammaTuples {
        tuples,
        product,
        grade,
    })
}

/// `N_p(f,α) = ⋁{⊗_λ N_{p_λ}(h_λ,α) | h ∈ Γ_f, α ≤ ⊗_λ τ_λ(h_λ)}` at every
/// point and cell of the product.
pub fn product_nbhd_system(p: &ProductSpace, limits: &Limits) -> Result<NbhdSystem> {
    let ps = p.space.powerset();
    let alg = ps.algebra();
    let gamma = gamma_tuples(p, limits)?;
    let coords: Vec<Vec<usize>> = (0..ps.points()).map(|q| p.coords(q)).collect();
    let tables = coords
        .iter()
        .map(|pc| {
            (0..ps.cells())
                .map(|c| {
                    let cell = ps.graded(c);
                    let alpha = cell.grade;
                    alg.lattice().join_set(
                        (0..gamma.tuples.len())
                            .filter(|&i| {
                                ps.leq(gamma.product[i], cell.set) && alg.leq(alpha, gamma.grade[i])
                            })
                            .map(|i| {
                                gamma.tuples[i]
                                    .iter()
                                    .zip(&p.factors)
                                    .zip(pc)
                                    .fold(alg.top(), |acc, ((&h, s), &q)| {
                                        let fc = s.powerset().cell_of(h, alpha);
                                        alg.mul(acc, s.nbhd().value(q, fc))
                                    })
                            }),
                    )
                })
                .collect()
        })
        .collect();
    NbhdSystem::from_tables(ps, tables)
}

/// Single value of the Γ_f neighborhood formula.
pub fn product_nbhd(
    p: &ProductSpace,
    point: usize,
    f: usize,
    alpha: Elem,
    limits: &Limits,
) -> Result<Elem> {
    let ps = p.space.powerset();
    Ok(product_nbhd_system(p, limits)?.value(point, ps.cell_of(f, alpha)))
}

/// `U → p` iff every `π_λ→(U) → p_λ`, at every product point, with the
/// product side read from the Γ_f neighborhoods and from the generated
/// topology.
pub fn product_convergence_check(
    p: &ProductSpace,
    u: &FilterTable,
    limits: &Limits,
) -> Result<AxiomReport> {
    let ps = p.space.powerset();
    let alg = ps.algebra();
    if let Some(c) = check_filter(ps, u).failures().next() {
        return Err(KernelError::PreconditionViolated(format!(
            "table is not a filter: {} fails",
            c.axiom
        )));
    }
    if !maximal_by_probes(ps, u)?.ultrafilter {
        return Err(KernelError::PreconditionViolated(
            "filter is not an ultrafilter".into(),
        ));
    }
    let gamma_nbhd = product_nbhd_system(p, limits)?;
    let images: Vec<FilterTable> = p
        .factors
        .iter()
        .zip(&p.projections)
        .map(|(s, pi)| image_filter(pi, ps, u, s.powerset()))
        .collect::<Result<_>>()?;

    let mut via_gamma = None;
    let mut via_topology = None;
    for q in 0..ps.points() {
        let factorwise = p
            .factors
            .iter()
            .zip(&images)
            .zip(p.coords(q))
            .all(|((s, img), qc)| converges(s, img, qc));
        let gamma_side = (0..ps.cells()).all(|c| alg.leq(gamma_nbhd.value(q, c), u.value(c)));
        let topo_side = converges(&p.space, u, q);
        if gamma_side != factorwise {
            via_gamma.get_or_insert_with(|| {
                format!("p={q}: product side {gamma_side}, factors {factorwise}")
            });
        }
        if topo_side != factorwise {
            via_topology.get_or_insert_with(|| {
                format!("p={q}: product side {topo_side}, factors {factorwise}")
            });
        }
    }
    let mut report = AxiomReport::new("ultrafilter convergence in the product");
    report.record("equivalence (Γ_f neighborhoods)", via_gamma);
    report.record("equivalence (product topology neighborhoods)", via_topology);
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct TychonoffReport {
    pub factors_compact: Vec<bool>,
    pub product_compact: bool,
    pub holds: bool,
    #[serde(skip)]
    pub factor_times: Vec<Duration>,
    #[serde(skip)]
    pub product_time: Duration,
}

/// All factors compact iff the product is.
pub fn tychonoff_check(factors: &[Space], limits: &Limits) -> Result<TychonoffReport> {
    let mut factors_compact = Vec::new();
    let mut factor_times = Vec::new();
    for s in factors {
        let start = Instant::now();
        factors_compact.push(is_compact(s, limits)?.compact);
        factor_times.push(start.elapsed());
    }
    let start = Instant::now();
    let product = build_product(factors, limits)?;
    let product_compact = is_compact(product.space(), limits)?.compact;
    let product_time = start.elapsed();
    let all = factors_compact.iter().all(|&b| b);
    Ok(TychonoffReport {
        holds: all == product_compact,
        factors_compact,
        product_compact,
        factor_times,
        product_time,
    })
}

/// Neighborhoods under a continuous surjection between two spaces.
pub fn space_continuity_report(phi: &PointMap, sx: &Space, sy: &Space) -> Result<AxiomReport> {
    let (x, y) = (sx.powerset().as_ref(), sy.powerset().as_ref());
    let cont = is_continuous(phi, x, sx.topology(), y, sy.topology())?;
    if !cont.continuous {
        return Err(KernelError::PreconditionViolated(
            "map is not continuous".into(),
        ));
    }
    phi.require_surjective()
        .map_err(|e| KernelError::PreconditionViolated(e.to_string()))?;
    Ok(continuity_nbhd_report(phi, x, sx.nbhd(), y, sy.nbhd()))
}
