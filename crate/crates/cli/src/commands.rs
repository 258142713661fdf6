//! Dispatch from a command to kernel operations.

use crate::model::Model;
use crate::report::{Report, Section};
use crate::spec::SpaceSpec;
use lftop_core::compactness::{
    build_product, image_compactness_check, is_compact, product_convergence_check,
    product_nbhd_system, space_continuity_report, tychonoff_check, Space,
};
use lftop_core::filters::{
    check_ff3_prime, check_filter, enumerate_filters, is_ultrafilter, maximal_by_probes,
    maximal_in, saturate, Saturation, UltraMode,
};
use lftop_core::residuated::{check_co_gl_monoid, check_cqm, check_gl_monoid, Residuum};
use lftop_core::topology::{
    check_interior, check_nbhd, check_topology, interior_from_topology, is_continuous,
    nbhd_from_interior,
};
use lftop_core::{Algebra, KernelError, Limits, Result};
use std::sync::Arc;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Lattice,
    GlMonoid,
    CoGlMonoid,
    Cqm,
    Topology,
    Interior,
    Nbhd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FilterAction {
    Enumerate,
    Check,
    Ultrafilters,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    Validate(Target),
    Residuum,
    Coimpl,
    Classify,
    Filters(FilterAction),
    Saturate,
    Compact,
    Product,
    Tychonoff,
    Continuity,
}

impl Action {
    pub fn name(self) -> &'static str {
        match self {
            Action::Validate(Target::Lattice) => "validate lattice",
            Action::Validate(Target::GlMonoid) => "validate glmonoid",
            Action::Validate(Target::CoGlMonoid) => "validate co-glmonoid",
            Action::Validate(Target::Cqm) => "validate cqm",
            Action::Validate(Target::Topology) => "validate topology",
            Action::Validate(Target::Interior) => "validate interior",
            Action::Validate(Target::Nbhd) => "validate nbhd",
            Action::Residuum => "residuum",
            Action::Coimpl => "coimpl",
            Action::Classify => "classify",
            Action::Filters(FilterAction::Enumerate) => "filters enumerate",
            Action::Filters(FilterAction::Check) => "filters check",
            Action::Filters(FilterAction::Ultrafilters) => "filters ultrafilters",
            Action::Saturate => "saturate",
            Action::Compact => "compact",
            Action::Product => "product",
            Action::Tychonoff => "tychonoff",
            Action::Continuity => "continuity",
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub spaces: Vec<String>,
    pub maps: Vec<String>,
    pub filters: Vec<String>,
    pub limits: Limits,
}

pub fn run_command(model: &Model, action: Action, opts: &Options) -> Result<Report> {
    let limits = &opts.limits;
    let sections = match action {
        Action::Validate(Target::Lattice) => {
            let mut s = Section::from_report(
                "lattice",
                model.lattice.check_infinite_distributivity(limits)?,
            );
            s.fact("elements", model.lattice.labels().join(" "));
            s.fact("chain", model.lattice.is_chain());
            vec![s]
        }
        Action::Validate(Target::GlMonoid) => {
            vec![Section::from_report("tensor: GL-monoid", check_gl_monoid(&model.tensor, limits)?)]
        }
        Action::Validate(Target::CoGlMonoid) => vec![Section::from_report(
            "cotensor: co-GL-monoid",
            check_co_gl_monoid(&model.cotensor, limits)?,
        )],
        Action::Validate(Target::Cqm) => {
            vec![Section::from_report("tensor: cqm-lattice", check_cqm(&model.tensor)?)]
        }
        Action::Validate(target @ (Target::Topology | Target::Interior | Target::Nbhd)) => {
            let alg = model.algebra(limits)?;
            let mut out = Vec::new();
            for spec in selected_spaces(model, opts)? {
                let ps = model.powerset(&alg, spec, limits)?;
                let t = model.topology(&ps, spec)?;
                let subject = format!("space {}", spec.name);
                let report = match target {
                    Target::Topology => check_topology(&ps, &t, limits)?,
                    Target::Interior => check_interior(&ps, &interior_from_topology(&ps, &t), limits)?,
                    _ => check_nbhd(&ps, &nbhd_from_interior(&ps, &interior_from_topology(&ps, &t)))?,
                };
                out.push(Section::from_report(format!("{subject}: {}", report.subject), report));
            }
            out
        }
        Action::Residuum => {
            let alg = model.algebra(limits)?;
            vec![operation_table("residuum α→β", &alg, alg.residuum())]
        }
        Action::Coimpl => {
            let alg = model.algebra(limits)?;
            vec![operation_table("co-implication α▷β", &alg, alg.co_implication())]
        }
        Action::Classify => {
            let alg = model.algebra(limits)?;
            let c = alg.classification();
            let mut s = Section::new("classification");
            s.fact("heyting", c.heyting);
            s.fact("mv", c.mv);
            s.fact("tags", c.tags().join(" "));
            s.fact("cotensor is join", alg.is_standard_cotensor());
            vec![s]
        }
        Action::Filters(FilterAction::Enumerate) => {
            let alg = model.algebra(limits)?;
            let mut out = Vec::new();
            for spec in selected_spaces(model, opts)? {
                let ps = model.powerset(&alg, spec, limits)?;
                let all = enumerate_filters(&ps, limits)?;
                let mut s = Section::new(format!("space {}: filters", spec.name));
                s.fact("count", all.len());
                for (i, f) in all.iter().enumerate() {
                    s.fact(format!("filter {i}"), f.render(&ps));
                }
                s.check(
                    "every listed table passes FF0–FF3",
                    all.iter()
                        .position(|f| !check_filter(&ps, f).passed())
                        .map(|i| format!("filter {i}")),
                );
                out.push(s);
            }
            out
        }
        Action::Filters(FilterAction::Check) => {
            let alg = model.algebra(limits)?;
            let mut out = Vec::new();
            for spec in selected_filters(model, opts)? {
                let space = model.space_spec(&spec.space)?;
                let ps = model.powerset(&alg, space, limits)?;
                let f = model.filter_table(&ps, spec)?;
                let mut s = Section::from_report(
                    format!("filter {} on space {}", spec.name, space.name),
                    check_filter(&ps, &f),
                );
                s.absorb("", check_ff3_prime(&ps, &f));
                out.push(s);
            }
            out
        }
        Action::Filters(FilterAction::Ultrafilters) => {
            let alg = model.algebra(limits)?;
            if opts.filters.is_empty() {
                let mut out = Vec::new();
                for spec in selected_spaces(model, opts)? {
                    out.push(ultrafilter_census(model, &alg, spec, limits)?);
                }
                out
            } else {
                let mut out = Vec::new();
                for spec in selected_filters(model, opts)? {
                    let space = model.space_spec(&spec.space)?;
                    let ps = model.powerset(&alg, space, limits)?;
                    let f = model.filter_table(&ps, spec)?;
                    let max = is_ultrafilter(&ps, &f, UltraMode::Maximality, limits)?;
                    let ch = is_ultrafilter(&ps, &f, UltraMode::Characterization, limits)?;
                    let mut s = Section::new(format!("filter {} on space {}", spec.name, space.name));
                    s.fact("maximal", max.ultrafilter);
                    s.fact("maximality method", format!("{:?}", max.method).to_lowercase());
                    if let Some(w) = &max.witness {
                        s.fact("maximality witness", w);
                    }
                    s.fact("characterization", ch.ultrafilter);
                    if let Some(w) = &ch.witness {
                        s.fact("characterization witness", w);
                    }
                    s.check(
                        "maximality ⟺ characterization",
                        (max.ultrafilter != ch.ultrafilter).then(|| {
                            format!("maximal={} characterization={}", max.ultrafilter, ch.ultrafilter)
                        }),
                    );
                    out.push(s);
                }
                out
            }
        }
        Action::Saturate => {
            let alg = model.algebra(limits)?;
            let mut out = Vec::new();
            for spec in selected_filters(model, opts)? {
                let space = model.space_spec(&spec.space)?;
                let ps = model.powerset(&alg, space, limits)?;
                let seed = model.filter_table(&ps, spec)?;
                let mut s = Section::new(format!("saturation of {} on space {}", spec.name, space.name));
                match saturate(&ps, &seed)? {
                    Saturation::Filter { filter } => {
                        s.fact("result", "filter");
                        s.fact("filter", filter.render(&ps));
                    }
                    Saturation::NoFilterAbove { grade, closure } => {
                        s.fact("result", format!("no filter above (FF3 fails at grade {})", alg.label(grade)));
                        s.fact("closure", closure.render(&ps));
                    }
                }
                out.push(s);
            }
            out
        }
        Action::Compact => {
            let alg = model.algebra(limits)?;
            let mut out = Vec::new();
            for spec in selected_spaces(model, opts)? {
                let space = model.space(&alg, spec, limits)?;
                let start = Instant::now();
                let v = is_compact(&space, limits)?;
                let mut s = Section::new(format!("space {}: compactness", spec.name));
                s.fact("filters", v.filters);
                s.fact("ultrafilters", v.ultrafilters);
                s.check(
                    "compact",
                    v.witness
                        .as_ref()
                        .map(|w| format!("filter without adherent point {}", w.render(space.powerset()))),
                );
                s.check(
                    "ultrafilter path agrees with full sweep",
                    (!v.paths_agree()).then(|| format!("ultrafilter path says {}", v.ultrafilter_path)),
                );
                s.time("compactness", start.elapsed());
                out.push(s);
            }
            out
        }
        Action::Product => {
            let alg = model.algebra(limits)?;
            let factors = factor_spaces(model, &alg, opts)?;
            let names: Vec<String> = selected_spaces(model, opts)?.iter().map(|s| s.name.clone()).collect();
            let product = build_product(&factors, limits)?;
            let space = product.space();
            let ps = space.powerset();
            let mut s = Section::new(format!("product {}", names.join(" × ")));
            s.fact("points", ps.points());
            s.absorb("", check_topology(ps, space.topology(), limits)?);
            for ((f, pi), name) in factors.iter().zip(product.projections()).zip(&names) {
                let c = is_continuous(pi, ps, space.topology(), f.powerset(), f.topology())?;
                s.check(
                    format!("projection to {name} continuous"),
                    c.witness.map(|g| format!("g={}", f.powerset().render(g))),
                );
            }
            let gamma = product_nbhd_system(&product, limits)?;
            s.fact("Γ_f neighborhoods equal those of the product topology", &gamma == space.nbhd());
            s.absorb("Γ_f ", check_nbhd(ps, &gamma)?);
            let all = enumerate_filters(ps, limits)?;
            let mut bad = None;
            let mut ultra = 0;
            for u in all.iter().filter(|u| maximal_in(ps, u, &all).ultrafilter) {
                ultra += 1;
                let r = product_convergence_check(&product, u, limits)?;
                let first = r.failures().next().map(|c| c.axiom.clone());
                if let Some(axiom) = first {
                    bad.get_or_insert_with(|| format!("{axiom} for {}", u.render(ps)));
                }
            }
            s.fact("ultrafilters", ultra);
            s.check("ultrafilter convergence ⟺ factorwise convergence", bad);
            vec![s]
        }
        Action::Tychonoff => {
            let alg = model.algebra(limits)?;
            let factors = factor_spaces(model, &alg, opts)?;
            let names: Vec<String> = selected_spaces(model, opts)?.iter().map(|s| s.name.clone()).collect();
            let r = tychonoff_check(&factors, limits)?;
            let mut s = Section::new(format!("Tychonoff for {}", names.join(" × ")));
            for ((name, c), d) in names.iter().zip(&r.factors_compact).zip(&r.factor_times) {
                s.fact(format!("{name} compact"), c);
                s.time(name.as_str(), *d);
            }
            s.fact("product compact", r.product_compact);
            s.time("product", r.product_time);
            s.check(
                "all factors compact ⟺ product compact",
                (!r.holds).then(|| format!("factors {:?}, product {}", r.factors_compact, r.product_compact)),
            );
            vec![s]
        }
        Action::Continuity => {
            let alg = model.algebra(limits)?;
            let names: Vec<String> = if opts.maps.is_empty() {
                model.doc.maps.iter().map(|m| m.name.clone()).collect()
            } else {
                opts.maps.clone()
            };
            if names.is_empty() {
                return Err(KernelError::PreconditionViolated("the spec declares no maps".into()));
            }
            let mut out = Vec::new();
            for name in names {
                let spec = model.map_spec(&name)?;
                let phi = model.point_map(spec)?;
                let sx = model.space(&alg, model.space_spec(&spec.from)?, limits)?;
                let sy = model.space(&alg, model.space_spec(&spec.to)?, limits)?;
                let mut s = Section::new(format!("map {name}: {} → {}", spec.from, spec.to));
                let c = is_continuous(&phi, sx.powerset(), sx.topology(), sy.powerset(), sy.topology())?;
                s.check(
                    "continuous",
                    c.witness.map(|g| format!("g={}", sy.powerset().render(g))),
                );
                s.fact("surjective", phi.is_surjective());
                if c.continuous && phi.is_surjective() {
                    if is_compact(&sx, limits)?.compact {
                        // includes the neighborhood transport check
                        s.absorb("", image_compactness_check(&phi, &sx, &sy, limits)?);
                    } else {
                        s.absorb("", space_continuity_report(&phi, &sx, &sy)?);
                        s.skip("image compactness", "domain is not compact");
                    }
                } else {
                    s.skip("neighborhood transport", "needs a continuous surjection");
                }
                out.push(s);
            }
            out
        }
    };
    Ok(Report::new(action.name(), sections))
}

fn operation_table(subject: &str, alg: &Algebra, r: &Residuum) -> Section {
    let mut s = Section::new(subject);
    let labels: Vec<&str> = alg.elements().map(|e| alg.label(e)).collect();
    s.fact("columns β", labels.join(" "));
    for a in alg.elements() {
        let row: Vec<&str> = alg.elements().map(|b| alg.label(r.apply(a, b))).collect();
        s.fact(format!("α={}", alg.label(a)), row.join(" "));
    }
    s
}

fn selected_spaces<'a>(model: &'a Model, opts: &Options) -> Result<Vec<&'a SpaceSpec>> {
    if opts.spaces.is_empty() {
        if model.doc.spaces.is_empty() {
            return Err(KernelError::PreconditionViolated("the spec declares no spaces".into()));
        }
        Ok(model.doc.spaces.iter().collect())
    } else {
        opts.spaces.iter().map(|n| model.space_spec(n)).collect()
    }
}

fn selected_filters<'a>(model: &'a Model, opts: &Options) -> Result<Vec<&'a crate::spec::FilterSpec>> {
    if opts.filters.is_empty() {
        if model.doc.filters.is_empty() {
            return Err(KernelError::PreconditionViolated("the spec declares no filters".into()));
        }
        Ok(model.doc.filters.iter().collect())
    } else {
        opts.filters.iter().map(|n| model.filter_spec(n)).collect()
    }
}

fn factor_spaces(model: &Model, alg: &Arc<Algebra>, opts: &Options) -> Result<Vec<Space>> {
    selected_spaces(model, opts)?
        .into_iter()
        .map(|spec| model.space(alg, spec, &opts.limits))
        .collect()
}

fn ultrafilter_census(
    model: &Model,
    alg: &Arc<Algebra>,
    spec: &SpaceSpec,
    limits: &Limits,
) -> Result<Section> {
    let ps = model.powerset(alg, spec, limits)?;
    let all = enumerate_filters(&ps, limits)?;
    let mut s = Section::new(format!("space {}: ultrafilters", spec.name));
    let mut disagree = None;
    let mut probe_disagree = None;
    let mut ultra = Vec::new();
    for (i, f) in all.iter().enumerate() {
        let max = maximal_in(&ps, f, &all).ultrafilter;
        let ch = is_ultrafilter(&ps, f, UltraMode::Characterization, limits)?.ultrafilter;
        let probe = maximal_by_probes(&ps, f)?.ultrafilter;
        if max != ch {
            disagree.get_or_insert_with(|| format!("filter {i}: maximal={max} characterization={ch}"));
        }
        if max != probe {
            probe_disagree.get_or_insert_with(|| format!("filter {i}"));
        }
        if max {
            ultra.push((i, f.render(&ps)));
        }
    }
    s.fact("filters", all.len());
    s.fact("ultrafilters", ultra.len());
    for (i, r) in ultra {
        s.fact(format!("ultrafilter (filter {i})"), r);
    }
    s.check("maximality ⟺ characterization", disagree);
    s.check("saturation probes agree with enumeration", probe_disagree);
    Ok(s)
}
