//! Monoidal structure on a finite lattice.
//!
//! A [`Tensor`] is either a candidate `⊗` (validated against the cqm and
//! GL-monoid axioms) or a candidate `⊕` (validated against the co-GL axioms).
//! Residuum and co-implication tables are computed directly from their
//! sup/inf formulas and then checked against the adjunction they must satisfy.

use crate::error::{KernelError, Result};
use crate::lattice::{subset_fold, Elem, Lattice};
use crate::limits::Limits;
use crate::report::AxiomReport;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TensorKind {
    /// A multiplication `⊗` with unit `⊤`.
    Tensor,
    /// A co-multiplication `⊕` with unit `⊥`.
    Cotensor,
}

impl TensorKind {
    fn name(self) -> &'static str {
        match self {
            TensorKind::Tensor => "tensor",
            TensorKind::Cotensor => "cotensor",
        }
    }
}

/// A total binary operation table on a lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    base: Arc<Lattice>,
    table: Vec<Elem>,
    kind: TensorKind,
}

impl Tensor {
    pub fn from_fn(
        base: Arc<Lattice>,
        kind: TensorKind,
        op: impl Fn(Elem, Elem) -> Elem,
    ) -> Self {
        let table = base
            .elements()
            .flat_map(|a| base.elements().map(move |b| (a, b)))
            .map(|(a, b)| op(a, b))
            .collect();
        Tensor { base, table, kind }
    }

    /// Row-major table: entry `a * n + b` holds `a ⊗ b`.
    pub fn from_table(base: Arc<Lattice>, kind: TensorKind, table: Vec<Elem>) -> Result<Self> {
        let n = base.size();
        if table.len() != n * n {
            return Err(KernelError::TableShape {
                expected: n * n,
                found: table.len(),
            });
        }
        if let Some(bad) = table.iter().find(|e| e.index() >= n) {
            return Err(KernelError::OutOfRange {
                index: bad.index(),
                size: n,
            });
        }
        Ok(Tensor { base, table, kind })
    }

    /// `⊗ = ∧`, the Heyting case.
    pub fn meet(base: Arc<Lattice>) -> Self {
        let b = base.clone();
        Tensor::from_fn(base, TensorKind::Tensor, move |x, y| b.meet(x, y))
    }

    /// `⊕ = ∨`, the default cotensor.
    pub fn join(base: Arc<Lattice>) -> Self {
        let b = base.clone();
        Tensor::from_fn(base, TensorKind::Cotensor, move |x, y| b.join(x, y))
    }

    pub fn base(&self) -> &Arc<Lattice> {
        &self.base
    }

    pub fn kind(&self) -> TensorKind {
        self.kind
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, a: Elem, b: Elem) -> Elem {
        self.table[a.index() * self.base.size() + b.index()]
    }

    /// Copy of this table with the single cell `(a, b)` overwritten.
    pub fn with_cell(&self, a: Elem, b: Elem, value: Elem) -> Tensor {
        let mut out = self.clone();
        let n = self.base.size();
        out.table[a.index() * n + b.index()] = value;
        out
    }

    /// True when the table coincides with the lattice join.
    pub fn is_join(&self) -> bool {
        self.table_matches(|a, b| self.base.join(a, b))
    }

    /// True when the table coincides with the lattice meet.
    pub fn is_meet(&self) -> bool {
        self.table_matches(|a, b| self.base.meet(a, b))
    }

    fn table_matches(&self, op: impl Fn(Elem, Elem) -> Elem) -> bool {
        let l = &self.base;
        l.elements()
            .all(|a| l.elements().all(|b| self.apply(a, b) == op(a, b)))
    }

    pub fn is_idempotent(&self) -> bool {
        self.base.elements().all(|a| self.apply(a, a) == a)
    }

    fn expect_kind(&self, expected: TensorKind) -> Result<()> {
        if self.kind != expected {
            return Err(KernelError::WrongKind {
                expected: expected.name(),
                found: self.kind.name(),
            });
        }
        Ok(())
    }

    fn render(&self, e: Elem) -> &str {
        self.base.label(e)
    }
}

/// A derived implication table (`→` for a tensor, `▷` for a cotensor).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residuum {
    base: Arc<Lattice>,
    table: Vec<Elem>,
}

impl Residuum {
    #[inline]
    pub fn apply(&self, a: Elem, b: Elem) -> Elem {
        self.table[a.index() * self.base.size() + b.index()]
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    pub fn base(&self) -> &Arc<Lattice> {
        &self.base
    }
}

fn triples(l: &Lattice) -> impl Iterator<Item = (Elem, Elem, Elem)> + '_ {
    l.elements().flat_map(move |a| {
        l.elements()
            .flat_map(move |b| l.elements().map(move |c| (a, b, c)))
    })
}

fn pairs(l: &Lattice) -> impl Iterator<Item = (Elem, Elem)> + '_ {
    l.elements()
        .flat_map(move |a| l.elements().map(move |b| (a, b)))
}

fn isotone_witness(t: &Tensor) -> Option<String> {
    let l = t.base();
    triples(l).find_map(|(a, b, c)| {
        if !l.leq(a, b) {
            return None;
        }
        if !l.leq(t.apply(a, c), t.apply(b, c)) {
            return Some(format!(
                "{}≤{} but {}·{}={} ≰ {}·{}={}",
                t.render(a),
                t.render(b),
                t.render(a),
                t.render(c),
                t.render(t.apply(a, c)),
                t.render(b),
                t.render(c),
                t.render(t.apply(b, c))
            ));
        }
        if !l.leq(t.apply(c, a), t.apply(c, b)) {
            return Some(format!(
                "{}≤{} but {}·{}={} ≰ {}·{}={}",
                t.render(a),
                t.render(b),
                t.render(c),
                t.render(a),
                t.render(t.apply(c, a)),
                t.render(c),
                t.render(b),
                t.render(t.apply(c, b))
            ));
        }
        None
    })
}

fn commutative_witness(t: &Tensor) -> Option<String> {
    pairs(t.base()).find_map(|(a, b)| {
        (t.apply(a, b) != t.apply(b, a)).then(|| {
            format!(
                "{}·{}={} but {}·{}={}",
                t.render(a),
                t.render(b),
                t.render(t.apply(a, b)),
                t.render(b),
                t.render(a),
                t.render(t.apply(b, a))
            )
        })
    })
}

fn associative_witness(t: &Tensor) -> Option<String> {
    triples(t.base()).find_map(|(a, b, c)| {
        let left = t.apply(a, t.apply(b, c));
        let right = t.apply(t.apply(a, b), c);
        (left != right).then(|| {
            format!(
                "a={}, b={}, c={}: a·(b·c)={} but (a·b)·c={}",
                t.render(a),
                t.render(b),
                t.render(c),
                t.render(left),
                t.render(right)
            )
        })
    })
}

fn unit_witness(t: &Tensor, unit: Elem) -> Option<String> {
    t.base().elements().find_map(|a| {
        (t.apply(a, unit) != a).then(|| {
            format!(
                "{}·{}={}",
                t.render(a),
                t.render(unit),
                t.render(t.apply(a, unit))
            )
        })
    })
}

fn absorbing_witness(t: &Tensor, zero: Elem) -> Option<String> {
    t.base().elements().find_map(|a| {
        (t.apply(a, zero) != zero).then(|| {
            format!(
                "{}·{}={}",
                t.render(a),
                t.render(zero),
                t.render(t.apply(a, zero))
            )
        })
    })
}

/// `α·(⨆S) = ⨆(α·s)` over every subset `S`, where `⨆` is join or meet.
fn distributive_witness(
    t: &Tensor,
    limits: &Limits,
    empty: Elem,
    combine: impl Fn(Elem, Elem) -> Elem,
) -> Result<Option<String>> {
    let l = t.base();
    let n = l.size();
    limits.check_subsets("distributivity subset sweep", n)?;
    let folded = subset_fold(n, empty, |acc, i| combine(acc, Elem::new(i)));
    for a in l.elements() {
        let images = subset_fold(n, empty, |acc, i| combine(acc, t.apply(a, Elem::new(i))));
        for (mask, (&s, &rhs)) in folded.iter().zip(&images).enumerate() {
            let lhs = t.apply(a, s);
            if lhs != rhs {
                return Ok(Some(format!(
                    "α={}, S={}: α·(S)={} but (α·s over S)={}",
                    t.render(a),
                    l.render_set(mask as u64),
                    t.render(lhs),
                    t.render(rhs)
                )));
            }
        }
    }
    Ok(None)
}

/// Some `γ` with `a = b ⊗ γ`, found by exhaustive search.
pub fn divide(t: &Tensor, a: Elem, b: Elem) -> Option<Elem> {
    t.base().elements().find(|&g| t.apply(b, g) == a)
}

/// Some `γ` with `a ⊕ γ = b`, found by exhaustive search.
pub fn co_divide(t: &Tensor, a: Elem, b: Elem) -> Option<Elem> {
    t.base().elements().find(|&g| t.apply(a, g) == b)
}

/// Every comparable pair `a ≤ b` with its division witness (if any).
pub fn division_witnesses(t: &Tensor) -> Vec<(Elem, Elem, Option<Elem>)> {
    let l = t.base();
    pairs(l)
        .filter(|&(a, b)| l.leq(a, b))
        .map(|(a, b)| match t.kind() {
            TensorKind::Tensor => (a, b, divide(t, a, b)),
            TensorKind::Cotensor => (a, b, co_divide(t, a, b)),
        })
        .collect()
}

fn division_failure(t: &Tensor) -> Option<String> {
    division_witnesses(t)
        .into_iter()
        .find(|(_, _, g)| g.is_none())
        .map(|(a, b, _)| match t.kind() {
            TensorKind::Tensor => format!(
                "{}≤{} but no γ with {}={}·γ",
                t.render(a),
                t.render(b),
                t.render(a),
                t.render(b)
            ),
            TensorKind::Cotensor => format!(
                "{}≤{} but no γ with {}⊕γ={}",
                t.render(a),
                t.render(b),
                t.render(a),
                t.render(b)
            ),
        })
}

/// Complete quasi-monoidal lattice axioms: isotone, `⊤⊗⊤ = ⊤`.
pub fn check_cqm(t: &Tensor) -> Result<AxiomReport> {
    t.expect_kind(TensorKind::Tensor)?;
    let mut report = AxiomReport::new("cqm-lattice");
    report.record("isotone", isotone_witness(t));
    let top = t.base().top();
    let tt = t.apply(top, top);
    report.record(
        "top idempotent",
        (tt != top).then(|| format!("⊤⊗⊤={}", t.render(tt))),
    );
    Ok(report)
}

/// The seven GL-monoid axioms, each decided by exhaustive sweep.
pub fn check_gl_monoid(t: &Tensor, limits: &Limits) -> Result<AxiomReport> {
    t.expect_kind(TensorKind::Tensor)?;
    let l = t.base().clone();
    let mut report = AxiomReport::new("GL-monoid");
    report.record("isotone", isotone_witness(t));
    report.record("commutative", commutative_witness(t));
    report.record("associative", associative_witness(t));
    report.record("integral", unit_witness(t, l.top()));
    report.record("zero", absorbing_witness(t, l.bot()));
    let lj = l.clone();
    report.record(
        "join-distributive",
        distributive_witness(t, limits, l.bot(), move |a, b| lj.join(a, b))?,
    );
    report.record("divisible", division_failure(t));
    Ok(report)
}

/// The seven co-GL-monoid axioms.
pub fn check_co_gl_monoid(t: &Tensor, limits: &Limits) -> Result<AxiomReport> {
    t.expect_kind(TensorKind::Cotensor)?;
    let l = t.base().clone();
    let mut report = AxiomReport::new("co-GL-monoid");
    report.record("isotone", isotone_witness(t));
    report.record("commutative", commutative_witness(t));
    report.record("associative", associative_witness(t));
    report.record("co-integral", unit_witness(t, l.bot()));
    report.record("co-zero", absorbing_witness(t, l.top()));
    let lm = l.clone();
    report.record(
        "meet-distributive",
        distributive_witness(t, limits, l.top(), move |a, b| lm.meet(a, b))?,
    );
    report.record("co-divisible", division_failure(t));
    Ok(report)
}

/// `α → β = ⋁{λ | α ⊗ λ ≤ β}`, verified against the adjunction
/// `α ⊗ β ≤ γ ⟺ α ≤ β → γ`.
pub fn residuum(t: &Tensor) -> Result<Residuum> {
    t.expect_kind(TensorKind::Tensor)?;
    let l = t.base().clone();
    let table: Vec<Elem> = pairs(&l)
        .map(|(a, b)| l.join_set(l.elements().filter(|&lam| l.leq(t.apply(a, lam), b))))
        .collect();
    let r = Residuum { base: l, table };
    let l = &r.base;
    if let Some((a, b, c)) =
        triples(l).find(|&(a, b, c)| l.leq(t.apply(a, b), c) != l.leq(a, r.apply(b, c)))
    {
        return Err(KernelError::AdjunctionFailure(a.index(), b.index(), c.index()));
    }
    Ok(r)
}

/// `α ▷ β = ⋀{λ | α ≤ β ⊕ λ}`, verified against `α ▷ β ≤ γ ⟺ α ≤ β ⊕ γ`.
pub fn co_implication(t: &Tensor) -> Result<Residuum> {
    t.expect_kind(TensorKind::Cotensor)?;
    let l = t.base().clone();
    let table: Vec<Elem> = pairs(&l)
        .map(|(a, b)| l.meet_set(l.elements().filter(|&lam| l.leq(a, t.apply(b, lam)))))
        .collect();
    let r = Residuum { base: l, table };
    let l = &r.base;
    if let Some((a, b, c)) =
        triples(l).find(|&(a, b, c)| l.leq(r.apply(a, b), c) != l.leq(a, t.apply(b, c)))
    {
        return Err(KernelError::AdjunctionFailure(a.index(), b.index(), c.index()));
    }
    Ok(r)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Classification {
    pub heyting: bool,
    pub mv: bool,
}

impl Classification {
    pub fn tags(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.heyting {
            out.push("Heyting");
        }
        if self.mv {
            out.push("MV");
        }
        if out.is_empty() {
            out.push("neither");
        }
        out
    }
}

/// Heyting iff `⊗ = ∧`; MV iff `(α→⊥)→⊥ = α` for every `α`.
pub fn classify(t: &Tensor, r: &Residuum) -> Classification {
    let l = t.base();
    let bot = l.bot();
    Classification {
        heyting: t.is_meet(),
        mv: l
            .elements()
            .all(|a| r.apply(r.apply(a, bot), bot) == a),
    }
}

/// A validated GL-monoid `(L, ≤, ⊗)` paired with a co-GL-monoid `(L, ≤, ⊕)`
/// and their derived implication tables. Every downstream construction reads
/// its lattice operations from here.
#[derive(Clone, Debug)]
pub struct Algebra {
    lattice: Arc<Lattice>,
    tensor: Tensor,
    cotensor: Tensor,
    residuum: Residuum,
    coimpl: Residuum,
}

impl Algebra {
    pub fn new(tensor: Tensor, cotensor: Tensor, limits: &Limits) -> Result<Self> {
        if tensor.base() != cotensor.base() {
            return Err(KernelError::Mismatch);
        }
        let gl = check_gl_monoid(&tensor, limits)?;
        if let Some(bad) = gl.failures().next() {
            return Err(KernelError::InvalidStructure(format!(
                "tensor is not a GL-monoid ({})",
                bad.axiom
            )));
        }
        let cogl = check_co_gl_monoid(&cotensor, limits)?;
        if let Some(bad) = cogl.failures().next() {
            return Err(KernelError::InvalidStructure(format!(
                "cotensor is not a co-GL-monoid ({})",
                bad.axiom
            )));
        }
        let residuum = residuum(&tensor)?;
        let coimpl = co_implication(&cotensor)?;
        Ok(Algebra {
            lattice: tensor.base().clone(),
            tensor,
            cotensor,
            residuum,
            coimpl,
        })
    }

    /// Pairs `tensor` with the default cotensor `⊕ = ∨`.
    pub fn with_join_cotensor(tensor: Tensor, limits: &Limits) -> Result<Self> {
        let cotensor = Tensor::join(tensor.base().clone());
        Algebra::new(tensor, cotensor, limits)
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn tensor(&self) -> &Tensor {
        &self.tensor
    }

    pub fn cotensor(&self) -> &Tensor {
        &self.cotensor
    }

    pub fn residuum(&self) -> &Residuum {
        &self.residuum
    }

    pub fn co_implication(&self) -> &Residuum {
        &self.coimpl
    }

    /// False when the cotensor is something other than `∨`.
    pub fn is_standard_cotensor(&self) -> bool {
        self.cotensor.is_join()
    }

    pub fn classification(&self) -> Classification {
        classify(&self.tensor, &self.residuum)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    #[inline]
    pub fn top(&self) -> Elem {
        self.lattice.top()
    }

    #[inline]
    pub fn bot(&self) -> Elem {
        self.lattice.bot()
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.lattice.leq(a, b)
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.lattice.join(a, b)
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.lattice.meet(a, b)
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.tensor.apply(a, b)
    }

    #[inline]
    pub fn imp(&self, a: Elem, b: Elem) -> Elem {
        self.residuum.apply(a, b)
    }

    #[inline]
    pub fn coimp(&self, a: Elem, b: Elem) -> Elem {
        self.coimpl.apply(a, b)
    }

    /// `α → ⊥`.
    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.residuum.apply(a, self.lattice.bot())
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.size()).map(Elem::new)
    }

    pub fn label(&self, e: Elem) -> &str {
        self.lattice.label(e)
    }
}
