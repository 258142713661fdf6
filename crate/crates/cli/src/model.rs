//! Kernel structures built from a parsed document.

use crate::spec::{FilterSpec, MapSpec, SpaceSpec, SpecDocument, TableSpec, TopologyKind};
use lftop_core::compactness::Space;
use lftop_core::filters::FilterTable;
use lftop_core::topology::{generate_topology, Topology};
use lftop_core::{
    build_lattice, Algebra, Elem, FuzzySet, KernelError, Lattice, Limits, PointMap, Powerset,
    Result, Tensor, TensorKind,
};
use std::sync::Arc;

pub struct Model {
    pub doc: SpecDocument,
    pub lattice: Arc<Lattice>,
    pub tensor: Tensor,
    pub cotensor: Tensor,
}

impl Model {
    pub fn new(doc: SpecDocument) -> Result<Self> {
        let index = |name: &str| {
            doc.elements
                .iter()
                .position(|e| e == name)
                .expect("parser resolved every element")
        };
        let pairs: Vec<(usize, usize)> = doc.covers.iter().map(|(a, b)| (index(a), index(b))).collect();
        let lattice = Arc::new(
            build_lattice(doc.elements.len(), &pairs)?.with_labels(doc.elements.clone())?,
        );
        let table = |spec: &TableSpec, kind: TensorKind| -> Result<Tensor> {
            match spec {
                TableSpec::Preset(p) if p == "meet" => Ok(Tensor::meet(lattice.clone())),
                TableSpec::Preset(_) => Ok(Tensor::join(lattice.clone())),
                TableSpec::Rows(rows) => {
                    let n = lattice.size();
                    let mut t = vec![Elem::new(0); n * n];
                    for (a, b, c) in rows {
                        t[index(a) * n + index(b)] = Elem::new(index(c));
                    }
                    Tensor::from_table(lattice.clone(), kind, t)
                }
            }
        };
        let tensor = table(&doc.tensor, TensorKind::Tensor)?;
        let cotensor = match &doc.cotensor {
            Some(spec) => table(spec, TensorKind::Cotensor)?,
            None => Tensor::join(lattice.clone()),
        };
        Ok(Model {
            doc,
            lattice,
            tensor,
            cotensor,
        })
    }

    fn elem(&self, name: &str) -> Elem {
        self.lattice.find(name).expect("parser resolved every element")
    }

    /// The validated algebra; fails when either monoid axiom battery fails.
    pub fn algebra(&self, limits: &Limits) -> Result<Arc<Algebra>> {
        Algebra::new(self.tensor.clone(), self.cotensor.clone(), limits).map(Arc::new)
    }

    fn fuzzy_set(&self, ps: &Powerset, tuple: &[String]) -> usize {
        ps.index_of(&FuzzySet(tuple.iter().map(|v| self.elem(v)).collect()))
    }

    pub fn powerset(&self, alg: &Arc<Algebra>, space: &SpaceSpec, limits: &Limits) -> Result<Arc<Powerset>> {
        Powerset::new(alg.clone(), space.points, limits).map(Arc::new)
    }

    /// Grade table as written: explicit rows over `default` (or `⊥`).
    pub fn topology(&self, ps: &Powerset, space: &SpaceSpec) -> Result<Topology> {
        let alg = ps.algebra();
        match space.topology {
            TopologyKind::Discrete => Ok(Topology::discrete(ps)),
            TopologyKind::Indiscrete => Ok(Topology::indiscrete(ps)),
            TopologyKind::Table | TopologyKind::Generated => {
                let fill = space.default.as_deref().map_or(alg.bot(), |d| self.elem(d));
                let mut table = vec![fill; ps.size()];
                for (tuple, v) in &space.rows {
                    table[self.fuzzy_set(ps, tuple)] = self.elem(v);
                }
                if space.topology == TopologyKind::Generated {
                    generate_topology(ps, &table)
                } else {
                    Topology::from_table(ps, table)
                }
            }
        }
    }

    pub fn space(&self, alg: &Arc<Algebra>, spec: &SpaceSpec, limits: &Limits) -> Result<Space> {
        let ps = self.powerset(alg, spec, limits)?;
        let t = self.topology(&ps, spec)?;
        Space::new(ps, t, limits)
    }

    pub fn point_map(&self, spec: &MapSpec) -> Result<PointMap> {
        let from = self.doc.space(&spec.from).expect("parser resolved spaces");
        let to = self.doc.space(&spec.to).expect("parser resolved spaces");
        let mut image = vec![0; from.points];
        for &(i, j) in &spec.rows {
            image[i] = j;
        }
        PointMap::new(image, to.points)
    }

    pub fn filter_table(&self, ps: &Powerset, spec: &FilterSpec) -> Result<FilterTable> {
        let alg = ps.algebra();
        let fill = spec.default.as_deref().map_or(alg.bot(), |d| self.elem(d));
        let mut table = vec![fill; ps.cells()];
        for (tuple, g, v) in &spec.rows {
            table[ps.cell_of(self.fuzzy_set(ps, tuple), self.elem(g))] = self.elem(v);
        }
        FilterTable::from_table(ps, table)
    }

    pub fn space_spec(&self, name: &str) -> Result<&SpaceSpec> {
        self.doc
            .space(name)
            .ok_or_else(|| KernelError::PreconditionViolated(format!("no space named `{name}`")))
    }

    pub fn map_spec(&self, name: &str) -> Result<&MapSpec> {
        self.doc
            .map(name)
            .ok_or_else(|| KernelError::PreconditionViolated(format!("no map named `{name}`")))
    }

    pub fn filter_spec(&self, name: &str) -> Result<&FilterSpec> {
        self.doc
            .filter(name)
            .ok_or_else(|| KernelError::PreconditionViolated(format!("no filter named `{name}`")))
    }
}
