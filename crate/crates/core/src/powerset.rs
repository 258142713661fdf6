//! The fuzzy powerset `L^X` and the graded carrier `L^X × L`.
//!
//! Fuzzy sets are addressed by their index in the canonical lexicographic
//! enumeration (point 0 is the most significant digit). A graded set
//! `(f, α)` is addressed by the flat cell index `f * |L| + α`, so every
//! table over `L^X × L` is a plain vector.

use crate::error::{KernelError, Result};
use crate::lattice::{build_lattice, Elem, Lattice};
use crate::limits::{checked_pow, Limits};
use crate::report::AxiomReport;
use crate::residuated::{check_gl_monoid, residuum, Algebra, Tensor, TensorKind};
use std::sync::Arc;

/// An element of `L^X`: one lattice value per point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FuzzySet(pub Vec<Elem>);

/// A pair `(f, α)` of a fuzzy-set index and a grade.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GradedSet {
    pub set: usize,
    pub grade: Elem,
}

/// A map between finite grounds, `X = 0..image.len()` into `Y = 0..codomain`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointMap {
    image: Vec<usize>,
    codomain: usize,
}

impl PointMap {
    pub fn new(image: Vec<usize>, codomain: usize) -> Result<Self> {
        if let Some(&bad) = image.iter().find(|&&q| q >= codomain) {
            return Err(KernelError::OutOfRange {
                index: bad,
                size: codomain,
            });
        }
        Ok(PointMap { image, codomain })
    }

    pub fn identity(points: usize) -> Self {
        PointMap {
            image: (0..points).collect(),
            codomain: points,
        }
    }

    /// Every map from a `domain`-point ground into a `codomain`-point ground.
    pub fn all(domain: usize, codomain: usize) -> Vec<PointMap> {
        let total = checked_pow(codomain, domain) as usize;
        (0..total)
            .map(|mut code| {
                let mut image = vec![0; domain];
                for slot in image.iter_mut().rev() {
                    *slot = code % codomain;
                    code /= codomain;
                }
                PointMap { image, codomain }
            })
            .collect()
    }

    #[inline]
    pub fn apply(&self, p: usize) -> usize {
        self.image[p]
    }

    pub fn domain(&self) -> usize {
        self.image.len()
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// First codomain point without a preimage, if any.
    pub fn missed_point(&self) -> Option<usize> {
        (0..self.codomain).find(|q| !self.image.contains(q))
    }

    pub fn is_surjective(&self) -> bool {
        self.missed_point().is_none()
    }

    pub fn require_surjective(&self) -> Result<()> {
        match self.missed_point() {
            Some(q) => Err(KernelError::NotSurjective(q)),
            None => Ok(()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Powerset {
    alg: Arc<Algebra>,
    points: usize,
    size: usize,
    values: Vec<Elem>,
}

impl Powerset {
    pub fn new(alg: Arc<Algebra>, points: usize, limits: &Limits) -> Result<Self> {
        if points == 0 {
            return Err(KernelError::PreconditionViolated(
                "ground set must have at least one point".into(),
            ));
        }
        let n = alg.size();
        let size = checked_pow(n, points);
        if size > limits.max_powerset as u128 {
            return Err(KernelError::size_limit(
                "fuzzy powerset",
                size,
                limits.max_powerset as u128,
            ));
        }
        let size = size as usize;
        let mut values = Vec::with_capacity(size * points);
        for idx in 0..size {
            let mut digits = vec![Elem::new(0); points];
            let mut rest = idx;
            for slot in digits.iter_mut().rev() {
                *slot = Elem::new(rest % n);
                rest /= n;
            }
            values.extend(digits);
        }
        Ok(Powerset {
            alg,
            points,
            size,
            values,
        })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        self.alg.lattice()
    }

    pub fn points(&self) -> usize {
        self.points
    }

    /// `|L^X|`.
    pub fn size(&self) -> usize {
        self.size
    }

    /// All fuzzy sets in canonical order; position equals index.
    pub fn enumerate(&self) -> Vec<FuzzySet> {
        (0..self.size).map(|i| self.set(i)).collect()
    }

    pub fn sets(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    #[inline]
    pub fn values(&self, idx: usize) -> &[Elem] {
        &self.values[idx * self.points..(idx + 1) * self.points]
    }

    #[inline]
    pub fn value(&self, idx: usize, point: usize) -> Elem {
        self.values[idx * self.points + point]
    }

    pub fn set(&self, idx: usize) -> FuzzySet {
        FuzzySet(self.values(idx).to_vec())
    }

    pub fn index_of(&self, f: &FuzzySet) -> usize {
        self.index_of_values(f.0.iter().copied())
    }

    #[inline]
    fn index_of_values(&self, values: impl Iterator<Item = Elem>) -> usize {
        let n = self.alg.size();
        values.fold(0, |acc, v| acc * n + v.index())
    }

    /// `1_X`.
    pub fn one(&self) -> usize {
        self.constant(self.alg.top())
    }

    /// `0_X`.
    pub fn zero(&self) -> usize {
        self.constant(self.alg.bot())
    }

    pub fn constant(&self, e: Elem) -> usize {
        self.index_of_values(std::iter::repeat_n(e, self.points))
    }

    #[inline]
    fn pointwise(&self, f: usize, g: usize, op: impl Fn(Elem, Elem) -> Elem) -> usize {
        let (a, b) = (self.values(f), self.values(g));
        self.index_of_values(a.iter().zip(b).map(|(&x, &y)| op(x, y)))
    }

    #[inline]
    pub fn tensor(&self, f: usize, g: usize) -> usize {
        self.pointwise(f, g, |x, y| self.alg.mul(x, y))
    }

    #[inline]
    pub fn join(&self, f: usize, g: usize) -> usize {
        self.pointwise(f, g, |x, y| self.alg.join(x, y))
    }

    #[inline]
    pub fn meet(&self, f: usize, g: usize) -> usize {
        self.pointwise(f, g, |x, y| self.alg.meet(x, y))
    }

    /// Pointwise residuum `f → g`.
    #[inline]
    pub fn implies(&self, f: usize, g: usize) -> usize {
        self.pointwise(f, g, |x, y| self.alg.imp(x, y))
    }

    #[inline]
    pub fn leq(&self, f: usize, g: usize) -> bool {
        self.values(f)
            .iter()
            .zip(self.values(g))
            .all(|(&x, &y)| self.alg.leq(x, y))
    }

    pub fn join_all(&self, sets: impl IntoIterator<Item = usize>) -> usize {
        sets.into_iter().fold(self.zero(), |acc, f| self.join(acc, f))
    }

    pub fn meet_all(&self, sets: impl IntoIterator<Item = usize>) -> usize {
        sets.into_iter().fold(self.one(), |acc, f| self.meet(acc, f))
    }

    /// Index in `self` of `g ∘ φ`, where `g` lives in `codomain`.
    pub fn pullback(&self, codomain: &Powerset, phi: &PointMap, g: usize) -> usize {
        debug_assert_eq!(phi.domain(), self.points);
        self.index_of_values((0..self.points).map(|p| codomain.value(g, phi.apply(p))))
    }

    pub fn render(&self, idx: usize) -> String {
        let parts: Vec<&str> = self
            .values(idx)
            .iter()
            .map(|&v| self.alg.label(v))
            .collect();
        format!("({})", parts.join(","))
    }

    // ---- the graded carrier L^X × L ----

    /// `|L^X| · |L|`.
    pub fn cells(&self) -> usize {
        self.size * self.alg.size()
    }

    #[inline]
    pub fn cell(&self, g: GradedSet) -> usize {
        g.set * self.alg.size() + g.grade.index()
    }

    #[inline]
    pub fn cell_of(&self, set: usize, grade: Elem) -> usize {
        set * self.alg.size() + grade.index()
    }

    #[inline]
    pub fn graded(&self, cell: usize) -> GradedSet {
        let n = self.alg.size();
        GradedSet {
            set: cell / n,
            grade: Elem::new(cell % n),
        }
    }

    /// `(f,α) ≼ (g,β)` iff `f ≤ g` and `β ≤ α`.
    #[inline]
    pub fn graded_leq(&self, a: GradedSet, b: GradedSet) -> bool {
        self.leq(a.set, b.set) && self.alg.leq(b.grade, a.grade)
    }

    /// `(f,α) ⊠ (g,β) = (f⊗g, α∨β)`.
    #[inline]
    pub fn graded_tensor(&self, a: GradedSet, b: GradedSet) -> GradedSet {
        GradedSet {
            set: self.tensor(a.set, b.set),
            grade: self.alg.join(a.grade, b.grade),
        }
    }

    /// `(f,α) ⇒ (g,β) = (f→g, β▷α)`.
    #[inline]
    pub fn graded_impl(&self, a: GradedSet, b: GradedSet) -> GradedSet {
        GradedSet {
            set: self.implies(a.set, b.set),
            grade: self.alg.coimp(b.grade, a.grade),
        }
    }

    #[inline]
    pub fn cell_leq(&self, a: usize, b: usize) -> bool {
        self.graded_leq(self.graded(a), self.graded(b))
    }

    #[inline]
    pub fn cell_tensor(&self, a: usize, b: usize) -> usize {
        self.cell(self.graded_tensor(self.graded(a), self.graded(b)))
    }

    #[inline]
    pub fn cell_impl(&self, a: usize, b: usize) -> usize {
        self.cell(self.graded_impl(self.graded(a), self.graded(b)))
    }

    pub fn render_cell(&self, cell: usize) -> String {
        let g = self.graded(cell);
        format!("({}, {})", self.render(g.set), self.alg.label(g.grade))
    }

    /// The order `≼` on `L^X × L` materialized as a [`Lattice`].
    pub fn graded_lattice(&self) -> Result<Lattice> {
        let cells = self.cells();
        let mut pairs = Vec::new();
        for a in 0..cells {
            for b in 0..cells {
                if a != b && self.cell_leq(a, b) {
                    pairs.push((a, b));
                }
            }
        }
        build_lattice(cells, &pairs)
    }

    /// Runs the GL-monoid battery on `(L^X × L, ≼, ⊠)` together with the
    /// componentwise meet/join identities, the residuation closed form and
    /// the two inequalities satisfied by `⇒`.
    pub fn check_graded_gl(&self, limits: &Limits) -> Result<AxiomReport> {
        let cells = self.cells();
        limits.check_subsets("graded carrier subset sweep", cells)?;
        let glat = Arc::new(self.graded_lattice()?);
        let mut report = AxiomReport::new(format!(
            "graded GL-monoid on L^X×L (|L|={}, |X|={})",
            self.alg.size(),
            self.points
        ));

        // Componentwise meets and joins over every subset.
        let order_joins = crate::lattice::subset_fold(cells, glat.bot(), |acc, i| {
            glat.join(acc, Elem::new(i))
        });
        let order_meets = crate::lattice::subset_fold(cells, glat.top(), |acc, i| {
            glat.meet(acc, Elem::new(i))
        });
        let comp_joins = crate::lattice::subset_fold(
            cells,
            GradedSet {
                set: self.zero(),
                grade: self.alg.top(),
            },
            |acc, i| {
                let g = self.graded(i);
                GradedSet {
                    set: self.join(acc.set, g.set),
                    grade: self.alg.meet(acc.grade, g.grade),
                }
            },
        );
        let comp_meets = crate::lattice::subset_fold(
            cells,
            GradedSet {
                set: self.one(),
                grade: self.alg.bot(),
            },
            |acc, i| {
                let g = self.graded(i);
                GradedSet {
                    set: self.meet(acc.set, g.set),
                    grade: self.alg.join(acc.grade, g.grade),
                }
            },
        );
        let mismatch = |order: &[Elem], comp: &[GradedSet]| {
            order
                .iter()
                .zip(comp)
                .position(|(&o, &c)| o.index() != self.cell(c))
                .map(|mask| format!("subset mask {mask:#b}"))
        };
        report.record(
            "(i) meets are (⋀f, ⋁α)",
            mismatch(&order_meets, &comp_meets),
        );
        report.record(
            "(ii) joins are (⋁f, ⋀α)",
            mismatch(&order_joins, &comp_joins),
        );
        let top = self.cell_of(self.one(), self.alg.bot());
        let bot = self.cell_of(self.zero(), self.alg.top());
        report.record(
            "(iii) top is (1_X, ⊥)",
            (glat.top().index() != top).then(|| self.render_cell(glat.top().index())),
        );
        report.record(
            "(iv) bottom is (0_X, ⊤)",
            (glat.bot().index() != bot).then(|| self.render_cell(glat.bot().index())),
        );

        let boxed = Tensor::from_fn(glat.clone(), TensorKind::Tensor, |a, b| {
            Elem::new(self.cell_tensor(a.index(), b.index()))
        });
        report.absorb("⊠ ", check_gl_monoid(&boxed, limits)?);

        let sup_form = residuum(&boxed);
        let closed_vs_sup = match &sup_form {
            Err(e) => Some(format!("sup-form residuum unavailable: {e}")),
            Ok(r) => (0..cells)
                .flat_map(|a| (0..cells).map(move |b| (a, b)))
                .find(|&(a, b)| r.apply(Elem::new(a), Elem::new(b)).index() != self.cell_impl(a, b))
                .map(|(a, b)| {
                    format!(
                        "{} ⇒ {}: closed form {} vs sup form {}",
                        self.render_cell(a),
                        self.render_cell(b),
                        self.render_cell(self.cell_impl(a, b)),
                        self.render_cell(r.apply(Elem::new(a), Elem::new(b)).index())
                    )
                }),
        };
        report.record("⇒ closed form equals sup form", closed_vs_sup);

        let triples = || {
            (0..cells).flat_map(move |a| {
                (0..cells).flat_map(move |b| (0..cells).map(move |c| (a, b, c)))
            })
        };
        let render3 = |(a, b, c): (usize, usize, usize)| {
            format!(
                "a={}, b={}, c={}",
                self.render_cell(a),
                self.render_cell(b),
                self.render_cell(c)
            )
        };
        report.record(
            "adjunction a⊠b ≼ c ⟺ a ≼ b⇒c",
            triples()
                .find(|&(a, b, c)| {
                    self.cell_leq(self.cell_tensor(a, b), c) != self.cell_leq(a, self.cell_impl(b, c))
                })
                .map(render3),
        );
        report.record(
            "a⊠(b⇒c) ≼ b⇒(a⊠c)",
            triples()
                .find(|&(a, b, c)| {
                    !self.cell_leq(
                        self.cell_tensor(a, self.cell_impl(b, c)),
                        self.cell_impl(b, self.cell_tensor(a, c)),
                    )
                })
                .map(render3),
        );
        let bullet2 = "(b⇒a)⊠(b⇒c) ≼ b⇒(a⊠c)";
        if self.alg.tensor().is_idempotent() {
            report.record(
                bullet2,
                triples()
                    .find(|&(a, b, c)| {
                        !self.cell_leq(
                            self.cell_tensor(self.cell_impl(b, a), self.cell_impl(b, c)),
                            self.cell_impl(b, self.cell_tensor(a, c)),
                        )
                    })
                    .map(render3),
            );
        } else {
            report.skip(bullet2, "⊗ is not idempotent");
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn ps(alg: Arc<Algebra>, m: usize) -> Powerset {
        Powerset::new(alg, m, &Limits::default()).unwrap()
    }

    fn e(i: usize) -> Elem {
        Elem::new(i)
    }

    #[test]
    fn enumeration_counts() {
        let one = ps(corpus::boolean(), 1);
        assert_eq!(
            one.enumerate(),
            vec![FuzzySet(vec![e(0)]), FuzzySet(vec![e(1)])]
        );
        assert_eq!(ps(corpus::boolean(), 2).size(), 4);
        assert_eq!(ps(corpus::godel(3), 2).enumerate().len(), 9);
    }

    #[test]
    fn index_round_trip() {
        let p = ps(corpus::godel(3), 3);
        for (i, f) in p.enumerate().iter().enumerate() {
            assert_eq!(p.index_of(f), i);
        }
        assert_eq!(p.set(p.one()), FuzzySet(vec![e(2); 3]));
        assert_eq!(p.set(p.zero()), FuzzySet(vec![e(0); 3]));
    }

    #[test]
    fn powerset_cap() {
        let limits = Limits {
            max_powerset: 8,
            ..Limits::default()
        };
        assert!(matches!(
            Powerset::new(corpus::godel(3), 2, &limits),
            Err(KernelError::SizeLimit { .. })
        ));
    }

    #[test]
    fn pointwise_units() {
        let p = ps(corpus::lukasiewicz(3), 2);
        for f in p.sets() {
            assert_eq!(p.tensor(f, p.one()), f);
            assert_eq!(p.tensor(f, p.zero()), p.zero());
        }
        let q = ps(corpus::lukasiewicz(3), 1);
        let half = q.constant(e(1));
        assert_eq!(q.tensor(half, half), q.zero());
    }

    #[test]
    fn graded_order_extremes() {
        let p = ps(corpus::godel(3), 2);
        let bottom = GradedSet { set: p.zero(), grade: e(2) };
        let top = GradedSet { set: p.one(), grade: e(0) };
        for cell in 0..p.cells() {
            let g = p.graded(cell);
            assert!(p.graded_leq(bottom, g));
            assert!(p.graded_leq(g, top));
        }
        let b = ps(corpus::boolean(), 1);
        let low = GradedSet { set: b.zero(), grade: e(0) };
        let high = GradedSet { set: b.one(), grade: e(1) };
        assert!(!b.graded_leq(low, high) && !b.graded_leq(high, low));
    }

    #[test]
    fn graded_tensor_values() {
        let p = ps(corpus::godel(3), 2);
        let unit = GradedSet { set: p.one(), grade: e(0) };
        let zero = GradedSet { set: p.zero(), grade: e(2) };
        for cell in 0..p.cells() {
            let g = p.graded(cell);
            assert_eq!(p.graded_tensor(g, unit), g);
            assert_eq!(p.graded_tensor(g, zero), zero);
        }
        let q = ps(corpus::godel(3), 1);
        let a = GradedSet { set: q.constant(e(1)), grade: e(0) };
        let b = GradedSet { set: q.one(), grade: e(1) };
        assert_eq!(q.graded_tensor(a, b), GradedSet { set: q.constant(e(1)), grade: e(1) });
    }

    #[test]
    fn graded_impl_values() {
        let b = ps(corpus::boolean(), 1);
        let full = GradedSet { set: b.one(), grade: e(1) };
        assert_eq!(b.graded_impl(full, full), GradedSet { set: b.one(), grade: e(0) });

        let p = ps(corpus::lukasiewicz(3), 2);
        let bottom = GradedSet { set: p.zero(), grade: p.algebra().top() };
        for cell in 0..p.cells() {
            assert_eq!(
                p.graded_impl(bottom, p.graded(cell)),
                GradedSet { set: p.one(), grade: e(0) }
            );
        }

        let q = ps(corpus::lukasiewicz(3), 1);
        let a = GradedSet { set: q.constant(e(1)), grade: e(0) };
        let c = GradedSet { set: q.zero(), grade: e(1) };
        assert_eq!(q.graded_impl(a, c), GradedSet { set: q.constant(e(1)), grade: e(1) });
    }

    #[test]
    fn graded_gl_small_instances() {
        let limits = Limits::default();
        for (alg, m) in [
            (corpus::boolean(), 1),
            (corpus::boolean(), 2),
            (corpus::lukasiewicz(3), 1),
            (corpus::godel(3), 1),
        ] {
            let report = ps(alg, m).check_graded_gl(&limits).unwrap();
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn point_maps() {
        let maps = PointMap::all(2, 2);
        assert_eq!(maps.len(), 4);
        assert_eq!(maps.iter().filter(|m| m.is_surjective()).count(), 2);
        let collapse = PointMap::new(vec![0, 0], 1).unwrap();
        assert!(collapse.is_surjective());
        let constant = PointMap::new(vec![1, 1], 2).unwrap();
        assert_eq!(constant.require_surjective(), Err(KernelError::NotSurjective(0)));
        assert!(PointMap::new(vec![3], 2).is_err());
    }

    #[test]
    fn pullback_composes() {
        let x = ps(corpus::godel(3), 2);
        let y = ps(corpus::godel(3), 1);
        let collapse = PointMap::new(vec![0, 0], 1).unwrap();
        let half = y.constant(e(1));
        assert_eq!(x.pullback(&y, &collapse, half), x.constant(e(1)));
        assert_eq!(x.pullback(&y, &collapse, y.one()), x.one());
    }
}
