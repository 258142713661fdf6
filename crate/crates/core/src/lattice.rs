//! Finite complete lattices stored as dense tables.
//!
//! A carrier of size `n` is the index range `0..n`. The order, binary joins
//! and binary meets are materialized at construction time so every later
//! sweep is a table lookup.

use crate::error::{KernelError, Result};
use crate::limits::Limits;
use crate::report::AxiomReport;
use serde::Serialize;
use std::fmt;

/// Largest carrier a [`Lattice`] can hold.
pub const MAX_CARRIER: usize = u8::MAX as usize;

/// Index of an element in a lattice carrier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Elem(u8);

impl Elem {
    /// Panics if `index` does not fit a carrier of [`MAX_CARRIER`] elements.
    pub fn new(index: usize) -> Self {
        assert!(index < MAX_CARRIER, "element index {index} too large");
        Elem(index as u8)
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    n: usize,
    leq: Vec<bool>,
    join: Vec<Elem>,
    meet: Vec<Elem>,
    top: Elem,
    bot: Elem,
    labels: Vec<String>,
}

/// Builds the lattice whose order is the reflexive-transitive closure of
/// `leq_pairs` on `0..n`.
pub fn build_lattice(n: usize, leq_pairs: &[(usize, usize)]) -> Result<Lattice> {
    if n < 2 {
        return Err(KernelError::Degenerate(n));
    }
    if n > MAX_CARRIER {
        return Err(KernelError::size_limit(
            "lattice carrier",
            n as u128,
            MAX_CARRIER as u128,
        ));
    }
    let mut leq = vec![false; n * n];
    for i in 0..n {
        leq[i * n + i] = true;
    }
    for &(a, b) in leq_pairs {
        for index in [a, b] {
            if index >= n {
                return Err(KernelError::OutOfRange { index, size: n });
            }
        }
        leq[a * n + b] = true;
    }
    // Warshall
    for k in 0..n {
        for i in 0..n {
            if leq[i * n + k] {
                for j in 0..n {
                    if leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
    }
    for a in 0..n {
        for b in (a + 1)..n {
            if leq[a * n + b] && leq[b * n + a] {
                return Err(KernelError::NotAPartialOrder(a, b));
            }
        }
    }

    let least = |candidates: &[usize], below: &dyn Fn(usize, usize) -> bool| {
        candidates
            .iter()
            .copied()
            .find(|&c| candidates.iter().all(|&d| below(c, d)))
    };
    let le = |a: usize, b: usize| leq[a * n + b];
    let ge = |a: usize, b: usize| leq[b * n + a];

    let mut join = vec![Elem(0); n * n];
    let mut meet = vec![Elem(0); n * n];
    for a in 0..n {
        for b in a..n {
            let uppers: Vec<usize> = (0..n).filter(|&c| le(a, c) && le(b, c)).collect();
            let lub = least(&uppers, &le).ok_or(KernelError::NotALattice(a, b, "join"))?;
            let lowers: Vec<usize> = (0..n).filter(|&c| le(c, a) && le(c, b)).collect();
            let glb = least(&lowers, &ge).ok_or(KernelError::NotALattice(a, b, "meet"))?;
            join[a * n + b] = Elem::new(lub);
            join[b * n + a] = Elem::new(lub);
            meet[a * n + b] = Elem::new(glb);
            meet[b * n + a] = Elem::new(glb);
        }
    }
    let top = (1..n).fold(Elem(0), |acc, i| join[acc.index() * n + i]);
    let bot = (1..n).fold(Elem(0), |acc, i| meet[acc.index() * n + i]);
    Ok(Lattice {
        n,
        leq,
        join,
        meet,
        top,
        bot,
        labels: (0..n).map(|i| i.to_string()).collect(),
    })
}

impl Lattice {
    /// Replaces the default numeric labels used when rendering elements.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(KernelError::TableShape {
                expected: self.n,
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.n).map(Elem::new)
    }

    #[inline]
    pub fn top(&self) -> Elem {
        self.top
    }

    #[inline]
    pub fn bot(&self) -> Elem {
        self.bot
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a.index() * self.n + b.index()]
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a.index() * self.n + b.index()]
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a.index() * self.n + b.index()]
    }

    /// Least upper bound of `s`; the empty join is `bot`.
    pub fn join_set<I: IntoIterator<Item = Elem>>(&self, s: I) -> Elem {
        s.into_iter().fold(self.bot, |acc, e| self.join(acc, e))
    }

    /// Greatest lower bound of `s`; the empty meet is `top`.
    pub fn meet_set<I: IntoIterator<Item = Elem>>(&self, s: I) -> Elem {
        s.into_iter().fold(self.top, |acc, e| self.meet(acc, e))
    }

    pub fn label(&self, e: Elem) -> &str {
        &self.labels[e.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Looks an element up by label.
    pub fn find(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label).map(Elem::new)
    }

    pub fn is_chain(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    /// Pairs `(a, b)` with `a < b` and nothing strictly between them.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let direct = self
                    .elements()
                    .all(|c| c == a || c == b || !(self.leq(a, c) && self.leq(c, b)));
                if direct {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub(crate) fn render_set(&self, mask: u64) -> String {
        let names: Vec<&str> = (0..self.n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| self.labels[i].as_str())
            .collect();
        format!("{{{}}}", names.join(","))
    }

    /// Checks `(⋁A) ∧ α = ⋁{a ∧ α | a ∈ A}` and `(⋀A) ∨ α = ⋀{a ∨ α | a ∈ A}`
    /// for every subset `A` of the carrier and every `α`.
    pub fn check_infinite_distributivity(&self, limits: &Limits) -> Result<AxiomReport> {
        limits.check_subsets("distributivity subset sweep", self.n)?;
        let mut report = AxiomReport::new("infinite distributivity");
        let joins = subset_fold(self.n, self.bot, |acc, i| self.join(acc, Elem::new(i)));
        let meets = subset_fold(self.n, self.top, |acc, i| self.meet(acc, Elem::new(i)));

        let mut witness = None;
        'outer: for alpha in self.elements() {
            let rhs = subset_fold(self.n, self.bot, |acc, i| {
                self.join(acc, self.meet(Elem::new(i), alpha))
            });
            for (mask, (&j, &r)) in joins.iter().zip(&rhs).enumerate() {
                let lhs = self.meet(j, alpha);
                if lhs != r {
                    witness = Some(format!(
                        "A={}, α={}, (⋁A)∧α={}, ⋁_{{a∈A}}(a∧α)={}",
                        self.render_set(mask as u64),
                        self.label(alpha),
                        self.label(lhs),
                        self.label(r)
                    ));
                    break 'outer;
                }
            }
        }
        report.record("join distributes over meet", witness);

        let mut witness = None;
        'outer: for alpha in self.elements() {
            let rhs = subset_fold(self.n, self.top, |acc, i| {
                self.meet(acc, self.join(Elem::new(i), alpha))
            });
            for (mask, (&m, &r)) in meets.iter().zip(&rhs).enumerate() {
                let lhs = self.join(m, alpha);
                if lhs != r {
                    witness = Some(format!(
                        "A={}, α={}, (⋀A)∨α={}, ⋀_{{a∈A}}(a∨α)={}",
                        self.render_set(mask as u64),
                        self.label(alpha),
                        self.label(lhs),
                        self.label(r)
                    ));
                    break 'outer;
                }
            }
        }
        report.record("meet distributes over join", witness);
        Ok(report)
    }
}

/// Folds `step` over the members of every subset of `0..n`, indexed by
/// bitmask. Each entry extends the entry for the mask without its lowest bit.
pub(crate) fn subset_fold<T: Copy>(n: usize, init: T, step: impl Fn(T, usize) -> T) -> Vec<T> {
    let total = 1usize << n;
    let mut out = Vec::with_capacity(total);
    out.push(init);
    for mask in 1..total {
        let low = mask.trailing_zeros() as usize;
        let prev = out[mask & (mask - 1)];
        out.push(step(prev, low));
    }
    out
}
