//! Labeling enumeration over framing classes and the enhanced counting
//! invariants.
//!
//! For a rack of rank `N` and a diagram of `c` components, every invariant
//! here sums over the `N^c` framing classes `w ∈ (Z_N)^c`, realizes each
//! class by appending kinks, enumerates the rack labelings of the framed
//! diagram, and folds a per-labeling signature into a polynomial. Labeling
//! enumeration is backtracking with forward constraint propagation in
//! semi-arc order; exhaustive filters are kept alongside as oracles.

use std::collections::BTreeMap;
use std::fmt;

use crate::bead::{DynamicalCocycle, TwoCocycle, XModuleStructure};
use crate::diagram::{LabelConstraint, LinkDiagram};
use crate::error::{Error, Result};
use crate::linalg::presentation_matrix;
use crate::rack::{KinkPermutation, RackTable};

/// A finite multiset of integer exponents: `Σ mult · u^exp`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InvariantPolynomial {
    terms: BTreeMap<i64, u64>,
}

impl InvariantPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, exponent: i64, multiplicity: u64) {
        if multiplicity > 0 {
            *self.terms.entry(exponent).or_insert(0) += multiplicity;
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.terms.iter().map(|(&e, &m)| (e, m))
    }

    /// Sum of multiplicities (the value at `u = 1`).
    pub fn total_multiplicity(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Canonical serialization: terms by ascending exponent, exponent-0 terms as
/// bare integers, multiplicity-1 powers without the coefficient.
impl fmt::Display for InvariantPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &m) in &self.terms {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if e == 0 {
                write!(f, "{m}")?;
            } else if m == 1 {
                write!(f, "u^{e}")?;
            } else {
                write!(f, "{m}u^{e}")?;
            }
        }
        Ok(())
    }
}

/// Per-framing-class labeling counts: `Σ count · q_1^{w_1}…q_c^{w_c}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WrithePolynomial {
    terms: BTreeMap<Vec<u32>, u64>,
}

impl WrithePolynomial {
    pub fn add_term(&mut self, w: Vec<u32>, count: u64) {
        if count > 0 {
            *self.terms.entry(w).or_insert(0) += count;
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, u64)> + '_ {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.terms.values().sum()
    }
}

impl fmt::Display for WrithePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, &count) in &self.terms {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if w.iter().all(|&x| x == 0) {
                write!(f, "{count}")?;
                continue;
            }
            if count != 1 {
                write!(f, "{count}")?;
            }
            for (i, &e) in w.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "q{}", i + 1)?,
                    _ => write!(f, "q{}^{e}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

/// All framing vectors in `(Z_rank)^components`, lexicographic.
pub fn framing_classes(components: usize, rank: usize) -> Vec<Vec<u32>> {
    let total = rank.pow(components as u32);
    (0..total)
        .map(|mut i| {
            let mut w = vec![0u32; components];
            for slot in (0..components).rev() {
                w[slot] = (i % rank) as u32;
                i /= rank;
            }
            w
        })
        .collect()
}

/// The value algebra a labeling solver runs over: rack elements for
/// X-labelings, beads over a fixed X-labeling for bead labelings.
trait ConstraintOps {
    fn size(&self) -> usize;
    fn prod(&self, input_arc: usize, over_arc: usize, a: usize, b: usize) -> usize;
    fn prod_inv(&self, input_arc: usize, over_arc: usize, out: usize, b: usize) -> Option<usize>;
    fn kink(&self, input_arc: usize, a: usize) -> usize;
    fn kink_inv(&self, input_arc: usize, out: usize) -> Option<usize>;
}

struct RackOps<'a> {
    rack: &'a RackTable,
    kink: KinkPermutation,
}

impl<'a> RackOps<'a> {
    fn new(rack: &'a RackTable) -> Self {
        RackOps { rack, kink: rack.kink_map() }
    }
}

impl ConstraintOps for RackOps<'_> {
    fn size(&self) -> usize {
        self.rack.n()
    }

    fn prod(&self, _i: usize, _o: usize, a: usize, b: usize) -> usize {
        self.rack.op(a, b)
    }

    fn prod_inv(&self, _i: usize, _o: usize, out: usize, b: usize) -> Option<usize> {
        (1..=self.rack.n()).find(|&a| self.rack.op(a, b) == out)
    }

    fn kink(&self, _i: usize, a: usize) -> usize {
        self.kink.apply(a)
    }

    fn kink_inv(&self, _i: usize, out: usize) -> Option<usize> {
        self.kink.perm.iter().position(|&y| y == out).map(|p| p + 1)
    }
}

struct BeadOps<'a> {
    alpha: &'a DynamicalCocycle,
    labels: &'a [usize],
}

impl ConstraintOps for BeadOps<'_> {
    fn size(&self) -> usize {
        self.alpha.bead_count()
    }

    fn prod(&self, input_arc: usize, over_arc: usize, a: usize, b: usize) -> usize {
        self.alpha.op(self.labels[input_arc - 1], self.labels[over_arc - 1], a, b)
    }

    fn prod_inv(&self, input_arc: usize, over_arc: usize, out: usize, b: usize) -> Option<usize> {
        let (x, y) = (self.labels[input_arc - 1], self.labels[over_arc - 1]);
        (1..=self.alpha.bead_count()).find(|&a| self.alpha.op(x, y, a, b) == out)
    }

    fn kink(&self, input_arc: usize, a: usize) -> usize {
        self.alpha.rho(self.labels[input_arc - 1], a)
    }

    fn kink_inv(&self, input_arc: usize, out: usize) -> Option<usize> {
        let x = self.labels[input_arc - 1];
        (1..=self.alpha.bead_count()).find(|&a| self.alpha.rho(x, a) == out)
    }
}

struct Solver<'a, O: ConstraintOps> {
    constraints: &'a [LabelConstraint],
    by_arc: Vec<Vec<usize>>,
    ops: &'a O,
    assignment: Vec<usize>,
    results: Vec<Vec<usize>>,
}

impl<'a, O: ConstraintOps> Solver<'a, O> {
    fn new(n_arcs: usize, constraints: &'a [LabelConstraint], ops: &'a O) -> Self {
        let mut by_arc = vec![Vec::new(); n_arcs + 1];
        for (i, c) in constraints.iter().enumerate() {
            let arcs: &[usize] = match c {
                LabelConstraint::Equal { from, to } => &[*from, *to],
                LabelConstraint::Product { input, over, out } => &[*input, *over, *out],
                LabelConstraint::KinkStep { input, out } => &[*input, *out],
            };
            for &a in arcs {
                if !by_arc[a].contains(&i) {
                    by_arc[a].push(i);
                }
            }
        }
        Solver { constraints, by_arc, ops, assignment: vec![0; n_arcs + 1], results: Vec::new() }
    }

    fn run(mut self) -> Vec<Vec<usize>> {
        self.extend();
        self.results
    }

    fn extend(&mut self) {
        let Some(arc) = (1..self.assignment.len()).find(|&a| self.assignment[a] == 0) else {
            self.results.push(self.assignment[1..].to_vec());
            return;
        };
        for v in 1..=self.ops.size() {
            let mut trail = Vec::new();
            if self.assign(arc, v, &mut trail) {
                self.extend();
            }
            for &a in &trail {
                self.assignment[a] = 0;
            }
        }
    }

    fn assign(&mut self, arc: usize, v: usize, trail: &mut Vec<usize>) -> bool {
        if self.assignment[arc] != 0 {
            return self.assignment[arc] == v;
        }
        self.assignment[arc] = v;
        trail.push(arc);
        for idx in 0..self.by_arc[arc].len() {
            let ci = self.by_arc[arc][idx];
            if !self.apply(ci, trail) {
                return false;
            }
        }
        true
    }

    fn apply(&mut self, ci: usize, trail: &mut Vec<usize>) -> bool {
        match self.constraints[ci] {
            LabelConstraint::Equal { from, to } => {
                match (self.assignment[from], self.assignment[to]) {
                    (0, 0) => true,
                    (v, 0) => self.assign(to, v, trail),
                    (0, v) => self.assign(from, v, trail),
                    (v, w) => v == w,
                }
            }
            LabelConstraint::Product { input, over, out } => {
                let (i, o) = (self.assignment[input], self.assignment[over]);
                if i != 0 && o != 0 {
                    let derived = self.ops.prod(input, over, i, o);
                    self.assign(out, derived, trail)
                } else if o != 0 && self.assignment[out] != 0 {
                    match self.ops.prod_inv(input, over, self.assignment[out], o) {
                        Some(derived) => self.assign(input, derived, trail),
                        None => false,
                    }
                } else {
                    true
                }
            }
            LabelConstraint::KinkStep { input, out } => {
                match (self.assignment[input], self.assignment[out]) {
                    (0, 0) => true,
                    (v, 0) => {
                        let d = self.ops.kink(input, v);
                        self.assign(out, d, trail)
                    }
                    (0, v) => match self.ops.kink_inv(input, v) {
                        Some(d) => self.assign(input, d, trail),
                        None => false,
                    },
                    (v, w) => self.ops.kink(input, v) == w,
                }
            }
        }
    }
}

fn satisfies<O: ConstraintOps>(
    assignment: &[usize],
    constraints: &[LabelConstraint],
    ops: &O,
) -> bool {
    let val = |arc: usize| assignment[arc - 1];
    constraints.iter().all(|c| match *c {
        LabelConstraint::Equal { from, to } => val(from) == val(to),
        LabelConstraint::Product { input, over, out } => {
            ops.prod(input, over, val(input), val(over)) == val(out)
        }
        LabelConstraint::KinkStep { input, out } => ops.kink(input, val(input)) == val(out),
    })
}

fn all_assignments(n_arcs: usize, size: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (size as u128).pow(n_arcs as u32);
    assert!(total <= 1 << 40, "brute-force space too large");
    (0..total).map(move |mut i| {
        let mut v = vec![1usize; n_arcs];
        for slot in (0..n_arcs).rev() {
            v[slot] = (i % size as u128) as usize + 1;
            i /= size as u128;
        }
        v
    })
}

/// All rack labelings of a framed diagram, in lexicographic semi-arc order.
pub fn enumerate_labelings(diagram: &LinkDiagram, rack: &RackTable) -> Vec<Vec<usize>> {
    let constraints = diagram.label_constraints();
    let ops = RackOps::new(rack);
    let mut out = Solver::new(diagram.n_arcs(), &constraints, &ops).run();
    out.sort();
    out
}

/// Exhaustive-filter oracle for [`enumerate_labelings`].
pub fn enumerate_labelings_brute(diagram: &LinkDiagram, rack: &RackTable) -> Vec<Vec<usize>> {
    let constraints = diagram.label_constraints();
    let ops = RackOps::new(rack);
    all_assignments(diagram.n_arcs(), rack.n())
        .filter(|a| satisfies(a, &constraints, &ops))
        .collect()
}

/// All bead labelings of an X-labeled framed diagram.
pub fn bead_labelings(
    diagram: &LinkDiagram,
    labels: &[usize],
    alpha: &DynamicalCocycle,
) -> Vec<Vec<usize>> {
    let constraints = diagram.label_constraints();
    let ops = BeadOps { alpha, labels };
    let mut out = Solver::new(diagram.n_arcs(), &constraints, &ops).run();
    out.sort();
    out
}

/// Number of bead labelings over a fixed X-labeling.
pub fn bead_count(diagram: &LinkDiagram, labels: &[usize], alpha: &DynamicalCocycle) -> u64 {
    bead_labelings(diagram, labels, alpha).len() as u64
}

/// Exhaustive-filter oracle for [`bead_count`].
pub fn bead_count_brute(
    diagram: &LinkDiagram,
    labels: &[usize],
    alpha: &DynamicalCocycle,
) -> u64 {
    let constraints = diagram.label_constraints();
    let ops = BeadOps { alpha, labels };
    all_assignments(diagram.n_arcs(), alpha.bead_count())
        .filter(|a| satisfies(a, &constraints, &ops))
        .count() as u64
}

fn require_valid_rack(rack: &RackTable) -> Result<()> {
    let report = rack.verify();
    if !report.is_valid() {
        return Err(Error::Precondition(format!(
            "rack fails verification ({} violations)",
            report.violations.len()
        )));
    }
    Ok(())
}

/// Runs `fold` over every (framing class, labeling) pair of the link.
fn fold_labelings<T>(
    diagram: &LinkDiagram,
    rack: &RackTable,
    mut fold: impl FnMut(&[u32], &LinkDiagram, &Vec<usize>) -> Result<T>,
) -> Result<Vec<T>> {
    let rank = rack.rank();
    let mut out = Vec::new();
    for w in framing_classes(diagram.component_count(), rank) {
        let framed = diagram.with_framing(&w, rank)?;
        for labeling in enumerate_labelings(&framed, rack) {
            out.push(fold(&w, &framed, &labeling)?);
        }
    }
    Ok(out)
}

/// The integral rack counting invariant: total labelings over all `N^c`
/// framing classes.
pub fn counting_invariant(diagram: &LinkDiagram, rack: &RackTable) -> Result<u64> {
    require_valid_rack(rack)?;
    Ok(fold_labelings(diagram, rack, |_, _, _| Ok(()))?.len() as u64)
}

/// Image enhancement: per labeling, `u^(size of the subrack generated by the
/// used labels)`.
pub fn image_invariant(diagram: &LinkDiagram, rack: &RackTable) -> Result<InvariantPolynomial> {
    require_valid_rack(rack)?;
    let mut poly = InvariantPolynomial::new();
    fold_labelings(diagram, rack, |_, _, labeling| {
        let mut used: Vec<usize> = labeling.clone();
        used.sort_unstable();
        used.dedup();
        let image = rack.subrack_closure(&used)?;
        poly.add_term(image.len() as i64, 1);
        Ok(())
    })?;
    Ok(poly)
}

/// Writhe enhancement: labeling counts tagged by their framing class.
pub fn writhe_invariant(diagram: &LinkDiagram, rack: &RackTable) -> Result<WrithePolynomial> {
    require_valid_rack(rack)?;
    let mut poly = WrithePolynomial::default();
    fold_labelings(diagram, rack, |w, _, _| {
        poly.add_term(w.to_vec(), 1);
        Ok(())
    })?;
    Ok(poly)
}

/// Boltzmann weight of a labeling: the signed sum of `φ` over crossings,
/// plus `φ(x, x)` for each kink node with incoming label `x`.
fn boltzmann_weight(diagram: &LinkDiagram, labels: &[usize], phi: &TwoCocycle) -> i64 {
    let label = |arc: usize| labels[arc - 1];
    let mut bw = 0i64;
    for c in diagram.crossings() {
        let y = label(c.over_in);
        if c.sign > 0 {
            bw += phi.get(label(c.under_in), y);
        } else {
            bw -= phi.get(label(c.under_out), y);
        }
    }
    for k in diagram.kinks() {
        let x = label(k.arc_in);
        bw += phi.get(x, x);
    }
    bw
}

/// 2-cocycle enhancement: per labeling, `u^(Boltzmann weight)`.
pub fn cocycle_invariant(
    diagram: &LinkDiagram,
    rack: &RackTable,
    phi: &TwoCocycle,
) -> Result<InvariantPolynomial> {
    require_valid_rack(rack)?;
    let report = phi.verify_reduced(rack)?;
    if !report.is_valid() {
        return Err(Error::Precondition(format!(
            "2-cocycle fails verification ({} violations)",
            report.violations.len()
        )));
    }
    let mut poly = InvariantPolynomial::new();
    fold_labelings(diagram, rack, |_, framed, labeling| {
        poly.add_term(boltzmann_weight(framed, labeling, phi), 1);
        Ok(())
    })?;
    Ok(poly)
}

/// Module enhancement: per labeling, `u^(kernel count of the presentation
/// matrix)`.
pub fn module_invariant(
    diagram: &LinkDiagram,
    rack: &RackTable,
    module: &XModuleStructure,
) -> Result<InvariantPolynomial> {
    require_valid_rack(rack)?;
    let report = module.verify(rack)?;
    if !report.is_valid() {
        return Err(Error::Precondition(format!(
            "module structure fails verification ({} violations)",
            report.violations.len()
        )));
    }
    let mut poly = InvariantPolynomial::new();
    fold_labelings(diagram, rack, |_, framed, labeling| {
        let a = presentation_matrix(framed, labeling, module)?;
        let count = i64::try_from(a.count_kernel())
            .map_err(|_| Error::Precondition("kernel count exceeds i64".into()))?;
        poly.add_term(count, 1);
        Ok(())
    })?;
    Ok(poly)
}

/// Dynamical cocycle enhancement: per labeling, `u^(bead labeling count)`.
pub fn dynamical_invariant(
    diagram: &LinkDiagram,
    rack: &RackTable,
    alpha: &DynamicalCocycle,
) -> Result<InvariantPolynomial> {
    require_valid_rack(rack)?;
    let report = alpha.verify(rack)?;
    if !report.is_valid() {
        return Err(Error::Precondition(format!(
            "cocycle fails verification ({} violations)",
            report.violations.len()
        )));
    }
    let reduced = alpha.verify_n_reduced(rack)?;
    if !reduced.is_valid() {
        return Err(Error::Precondition(format!(
            "cocycle is not reduced ({} violations)",
            reduced.violations.len()
        )));
    }
    let mut poly = InvariantPolynomial::new();
    fold_labelings(diagram, rack, |_, framed, labeling| {
        poly.add_term(bead_count(framed, labeling, alpha) as i64, 1);
        Ok(())
    })?;
    Ok(poly)
}
