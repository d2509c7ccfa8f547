//! Labeling builders for union, join, cartesian product,
//! corona and complement, plus identical biarithmetic labelings of bipartite
//! graphs.
//!
//! Every builder works in three steps:
//!
//! 1. derive a *shape* (deterministic index, cardinality) for each vertex of
//!    the operated graph from the operand labels;
//! 2. check the adjacency condition on every edge of the operated graph,
//!    reporting the first failing pair (or, with `pad`, lengthening the
//!    smaller-index label just enough);
//! 3. choose first terms with the [`OffsetSchedule`], then classify the result
//!    and only hand it out if it reaches the promised class.
//!
//! Because the arithmetic classes depend on shapes alone, step 3 only has to
//! restore injectivity, and translations never touch a deterministic index.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{corona_copy_name, io, Bipartiteness, Graph};
use crate::labeling::{
    classify, index_multiplier, verify_iasi, LabelError, Labeling, TargetClass, Violation,
};
use crate::numeric::{ap_of, make_ap, NumericError, SetLabel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error("identical biarithmetic labelings need k >= 2, got {0}")]
    MultiplierTooSmall(u64),
    #[error("base index must be at least 1")]
    ZeroBaseIndex,
}

/// First-term placement: try the operand layout with block offsets
/// `0`, then `t, 2t, 4t, ...` (`cap` doublings) where `t` is one more than the
/// largest operand element; if every rung still collides, relabel all first
/// terms as `t * s_i` for a Sidon sequence `s`, which separates the minima of
/// all vertex labels and all edge labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OffsetSchedule {
    pub cap: u32,
}

impl Default for OffsetSchedule {
    fn default() -> Self {
        OffsetSchedule { cap: 20 }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ConstructParams {
    /// Lengthen labels that break a cardinality bound instead of failing.
    pub pad: bool,
    pub schedule: OffsetSchedule,
}

/// Extra knobs for [`label_identical_biarithmetic`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BiarithmeticParams {
    /// Cardinality of labels on the smaller-index side; raised to `k` if lower.
    pub base_len: usize,
    /// Cardinality of labels on the `k * base_d` side.
    pub scaled_len: usize,
    pub schedule: OffsetSchedule,
}

impl Default for BiarithmeticParams {
    fn default() -> Self {
        BiarithmeticParams {
            base_len: 2,
            scaled_len: 2,
            schedule: OffsetSchedule::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Repair {
    /// Every label of `block` shifted by `offset`.
    Translate { block: String, offset: u64 },
    /// All first terms replaced by `scale * sidon[i]`.
    Relabel { scale: u64 },
    /// Label of `vertex` lengthened from `from` to `to` elements.
    Pad {
        vertex: String,
        from: usize,
        to: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "kebab-case")]
pub enum FailedHypothesis {
    OperandNotArithmetic {
        operand: String,
        violations: Vec<Violation>,
    },
    /// A pair of vertices adjacent in the result breaks the adjacency condition.
    AdjacencyCondition {
        violation: Violation,
    },
    /// Complement labels are fixed, so colliding edge labels cannot be repaired.
    LabelCollision {
        violation: Violation,
    },
    NotBipartite {
        cycle: Vec<String>,
    },
    NoEdges,
    VerificationFailed {
        class: TargetClass,
        violations: Vec<Violation>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionOutcome {
    Ok {
        graph: Graph,
        labeling: Labeling,
        class: TargetClass,
        repairs: Vec<Repair>,
    },
    Failed {
        graph: Graph,
        hypothesis: FailedHypothesis,
        repairs: Vec<Repair>,
    },
}

impl ConstructionOutcome {
    pub fn is_ok(&self) -> bool {
        matches!(self, ConstructionOutcome::Ok { .. })
    }

    pub fn graph(&self) -> &Graph {
        match self {
            ConstructionOutcome::Ok { graph, .. } | ConstructionOutcome::Failed { graph, .. } => {
                graph
            }
        }
    }

    pub fn labeling(&self) -> Option<&Labeling> {
        match self {
            ConstructionOutcome::Ok { labeling, .. } => Some(labeling),
            ConstructionOutcome::Failed { .. } => None,
        }
    }

    pub fn class(&self) -> Option<TargetClass> {
        match self {
            ConstructionOutcome::Ok { class, .. } => Some(*class),
            ConstructionOutcome::Failed { .. } => None,
        }
    }

    pub fn failed_hypothesis(&self) -> Option<&FailedHypothesis> {
        match self {
            ConstructionOutcome::Failed { hypothesis, .. } => Some(hypothesis),
            ConstructionOutcome::Ok { .. } => None,
        }
    }

    pub fn repairs(&self) -> &[Repair] {
        match self {
            ConstructionOutcome::Ok { repairs, .. }
            | ConstructionOutcome::Failed { repairs, .. } => repairs,
        }
    }
}

impl Serialize for ConstructionOutcome {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(6))?;
        let ok = self.is_ok();
        m.serialize_entry("status", if ok { "ok" } else { "failed" })?;
        m.serialize_entry("class", &self.class())?;
        m.serialize_entry("graph", &io::to_json_value(self.graph()))?;
        m.serialize_entry("labeling", &self.labeling())?;
        m.serialize_entry("failed_hypothesis", &self.failed_hypothesis())?;
        m.serialize_entry("repairs", self.repairs())?;
        m.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Shape {
    index: Option<u64>,
    len: usize,
}

/// A labeling under construction: shapes plus the default layout of first terms.
struct Plan {
    graph: Graph,
    shapes: Vec<Shape>,
    base_first: Vec<u64>,
    /// Translation block of each vertex; block `b` is shifted by `b * scale`.
    block: Vec<u64>,
    block_names: Vec<String>,
    repairs: Vec<Repair>,
}

impl Plan {
    fn new(graph: Graph) -> Self {
        Plan {
            graph,
            shapes: Vec::new(),
            base_first: Vec::new(),
            block: Vec::new(),
            block_names: vec![String::new()],
            repairs: Vec::new(),
        }
    }

    fn push(&mut self, label: &SetLabel, block: u64) {
        let ap = ap_of(label).expect("operand labels are APs");
        self.shapes.push(Shape {
            index: ap.diff,
            len: ap.len,
        });
        self.base_first.push(ap.first);
        self.block.push(block);
    }

    fn label(&self, i: usize, first: u64) -> Result<SetLabel, NumericError> {
        let Shape { index, len } = self.shapes[i];
        match index {
            Some(d) => make_ap(first, d, len),
            // A singleton can only reach a plan on an isolated vertex.
            None => make_ap(first, 1, len),
        }
    }

    fn layout(&self, firsts: &[u64]) -> Result<Labeling, NumericError> {
        (0..self.shapes.len())
            .map(|i| Ok((self.graph.name(i).to_string(), self.label(i, firsts[i])?)))
            .collect()
    }

    fn block_layout(&self, scale: u64) -> Result<Labeling, NumericError> {
        let firsts = self
            .base_first
            .iter()
            .zip(&self.block)
            .map(|(&a, &b)| {
                b.checked_mul(scale)
                    .and_then(|o| a.checked_add(o))
                    .ok_or(NumericError::Overflow)
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.layout(&firsts)
    }

    fn max_element(&self) -> Result<u64, NumericError> {
        let mut max = 0;
        for (i, &a) in self.base_first.iter().enumerate() {
            max = max.max(self.label(i, a)?.largest());
        }
        Ok(max)
    }

    /// Checks the adjacency condition on every edge, lengthening base labels
    /// when `pad` is set.
    fn check_edges(&mut self, pad: bool) -> Option<FailedHypothesis> {
        let edges: Vec<_> = self.graph.edge_indices().collect();
        for (a, b) in edges {
            let shape = |i: usize| (self.graph.name(i), self.shapes[i].index, self.shapes[i].len);
            match index_multiplier(shape(a), shape(b)) {
                Ok(_) => {}
                Err(Violation::CardinalityBound {
                    base,
                    k,
                    cardinality,
                    ..
                }) if pad => {
                    let i = self.graph.index_of(&base).expect("base is a vertex");
                    self.shapes[i].len = k as usize;
                    self.repairs.push(Repair::Pad {
                        vertex: base,
                        from: cardinality,
                        to: k as usize,
                    });
                }
                Err(violation) => return Some(FailedHypothesis::AdjacencyCondition { violation }),
            }
        }
        None
    }

    fn promised_class(&self) -> TargetClass {
        let mut indices = self.shapes.iter().filter_map(|s| s.index);
        match indices.next() {
            Some(d) if indices.all(|e| e == d) => TargetClass::Isoarithmetic,
            _ => TargetClass::Arithmetic,
        }
    }

    fn fail(self, hypothesis: FailedHypothesis) -> ConstructionOutcome {
        ConstructionOutcome::Failed {
            graph: self.graph,
            hypothesis,
            repairs: self.repairs,
        }
    }

    /// Runs the offset schedule and the final classification.
    fn place(
        mut self,
        class: TargetClass,
        schedule: OffsetSchedule,
    ) -> Result<ConstructionOutcome, ConstructError> {
        let t = self
            .max_element()?
            .checked_add(1)
            .ok_or(NumericError::Overflow)?;
        let blocks = self.block.iter().copied().max().unwrap_or(0);
        let mut scales = vec![0u64];
        if blocks > 0 {
            for j in 0..=schedule.cap {
                match t.checked_shl(j).filter(|s| s >> j == t) {
                    Some(s) => scales.push(s),
                    None => break,
                }
            }
        }
        let mut placed = None;
        for scale in scales {
            let labeling = self.block_layout(scale)?;
            if verify_iasi(&self.graph, &labeling)?.holds {
                for b in 1..=blocks {
                    if scale > 0 {
                        self.repairs.push(Repair::Translate {
                            block: self.block_names[b as usize].clone(),
                            offset: b * scale,
                        });
                    }
                }
                placed = Some(labeling);
                break;
            }
        }
        let labeling = match placed {
            Some(l) => l,
            None => {
                let firsts = sidon_firsts(self.shapes.len(), t)?;
                self.repairs.push(Repair::Relabel { scale: t });
                self.layout(&firsts)?
            }
        };
        self.finish(labeling, class)
    }

    fn finish(
        self,
        labeling: Labeling,
        class: TargetClass,
    ) -> Result<ConstructionOutcome, ConstructError> {
        let report = classify(&self.graph, &labeling)?;
        if report.satisfies(class) {
            Ok(ConstructionOutcome::Ok {
                graph: self.graph,
                labeling,
                class,
                repairs: self.repairs,
            })
        } else {
            Ok(self.fail(FailedHypothesis::VerificationFailed {
                class,
                violations: report.violations,
            }))
        }
    }
}

/// Greedy Sidon sequence starting at 0 (the Mian-Chowla sequence shifted down
/// by one): all sums `s_i + s_j` with `i <= j` are distinct.
pub fn sidon_sequence(n: usize) -> Vec<u64> {
    let mut seq: Vec<u64> = Vec::with_capacity(n);
    let mut sums = std::collections::HashSet::new();
    let mut candidate = 0u64;
    while seq.len() < n {
        let fresh: Vec<u64> = seq
            .iter()
            .map(|&s| s + candidate)
            .chain([2 * candidate])
            .collect();
        if fresh.iter().all(|x| !sums.contains(x)) {
            sums.extend(fresh);
            seq.push(candidate);
        }
        candidate += 1;
    }
    seq
}

fn sidon_firsts(n: usize, scale: u64) -> Result<Vec<u64>, NumericError> {
    sidon_sequence(n)
        .into_iter()
        .map(|s| s.checked_mul(scale).ok_or(NumericError::Overflow))
        .collect()
}

fn require_arithmetic(
    operand: &str,
    g: &Graph,
    f: &Labeling,
) -> Result<Option<FailedHypothesis>, ConstructError> {
    let report = classify(g, f)?;
    if report.is_arithmetic {
        Ok(None)
    } else {
        Ok(Some(FailedHypothesis::OperandNotArithmetic {
            operand: operand.to_string(),
            violations: report.violations,
        }))
    }
}

macro_rules! bail_on {
    ($plan:expr, $check:expr) => {
        if let Some(h) = $check {
            return Ok($plan.fail(h));
        }
    };
}

/// Labeling of `G1 ∪ G2`: `f1` as is, `f2` translated by the smallest `t >= 0`
/// that restores injectivity.
pub fn label_union(
    g1: &Graph,
    f1: &Labeling,
    g2: &Graph,
    f2: &Labeling,
) -> Result<ConstructionOutcome, ConstructError> {
    let mut plan = Plan::new(g1.disjoint_union(g2));
    bail_on!(plan, require_arithmetic("first", g1, f1)?);
    bail_on!(plan, require_arithmetic("second", g2, f2)?);
    for (g, f, b) in [(g1, f1, 0), (g2, f2, 1)] {
        for label in f.labels_for(g)? {
            plan.push(label, b);
        }
    }
    // Past the largest first-operand element every collision is gone.
    let limit = f1.restrict(g1).max_element() + 1;
    for t in 0..=limit {
        let labeling = plan.block_layout(t)?;
        if verify_iasi(&plan.graph, &labeling)?.holds {
            if t > 0 {
                plan.repairs.push(Repair::Translate {
                    block: "B".into(),
                    offset: t,
                });
            }
            let class = plan.promised_class();
            return plan.finish(labeling, class);
        }
    }
    unreachable!("translation past the first operand's range always separates the labels")
}

/// Labeling of `G1 + G2`; every cross pair must satisfy the adjacency condition.
pub fn label_join(
    g1: &Graph,
    f1: &Labeling,
    g2: &Graph,
    f2: &Labeling,
    params: ConstructParams,
) -> Result<ConstructionOutcome, ConstructError> {
    let mut plan = Plan::new(g1.join(g2));
    bail_on!(plan, require_arithmetic("first", g1, f1)?);
    bail_on!(plan, require_arithmetic("second", g2, f2)?);
    for (g, f, b) in [(g1, f1, 0), (g2, f2, 1)] {
        for label in f.labels_for(g)? {
            plan.push(label, b);
        }
    }
    plan.block_names.push("B".into());
    bail_on!(plan, plan.check_edges(params.pad));
    let class = plan.promised_class();
    plan.place(class, params.schedule)
}

/// Labeling of `G1 × G2`: vertex `(u_i, v_j)` gets an AP with index
/// `d_i * d'_j` and `|f1(u_i)|` elements; copy `j` of `G1` is translated by
/// `j * scale`.
pub fn label_product(
    g1: &Graph,
    f1: &Labeling,
    g2: &Graph,
    f2: &Labeling,
    params: ConstructParams,
) -> Result<ConstructionOutcome, ConstructError> {
    let mut plan = Plan::new(g1.cartesian_product(g2));
    bail_on!(plan, require_arithmetic("first", g1, f1)?);
    bail_on!(plan, require_arithmetic("second", g2, f2)?);
    let l1: Vec<_> = f1
        .labels_for(g1)?
        .into_iter()
        .map(|l| ap_of(l).unwrap())
        .collect();
    let l2: Vec<_> = f2
        .labels_for(g2)?
        .into_iter()
        .map(|l| ap_of(l).unwrap())
        .collect();
    for ap1 in &l1 {
        for (j, ap2) in l2.iter().enumerate() {
            let index = match (ap1.diff, ap2.diff) {
                (Some(a), Some(b)) => Some(a.checked_mul(b).ok_or(NumericError::Overflow)?),
                _ => None,
            };
            plan.shapes.push(Shape {
                index,
                len: ap1.len,
            });
            plan.base_first.push(ap1.first);
            plan.block.push(j as u64);
        }
    }
    plan.block_names = g2.vertices().iter().map(|v| format!("copy {v}")).collect();
    bail_on!(plan, plan.check_edges(params.pad));
    let class = plan.promised_class();
    plan.place(class, params.schedule)
}

/// Labeling of `G1 ∘ G2`: `G1` keeps `f1`, the first copy of `G2` keeps `f2`,
/// copy `r` is `f2` translated by `(r - 1) * scale`.
pub fn label_corona(
    g1: &Graph,
    f1: &Labeling,
    g2: &Graph,
    f2: &Labeling,
    params: ConstructParams,
) -> Result<ConstructionOutcome, ConstructError> {
    let mut plan = Plan::new(g1.corona(g2));
    bail_on!(plan, require_arithmetic("first", g1, f1)?);
    bail_on!(plan, require_arithmetic("second", g2, f2)?);
    for label in f1.labels_for(g1)? {
        plan.push(label, 0);
    }
    let labels2 = f2.labels_for(g2)?;
    for r in 0..g1.vertex_count() {
        for label in &labels2 {
            plan.push(label, r as u64);
        }
        if r > 0 {
            plan.block_names
                .push(format!("copy {}", corona_copy_name(r + 1, "*")));
        }
    }
    bail_on!(plan, plan.check_edges(params.pad));
    let class = plan.promised_class();
    plan.place(class, params.schedule)
}

/// Labeling of the complement with the vertex labels unchanged.
pub fn label_complement(g: &Graph, f: &Labeling) -> Result<ConstructionOutcome, ConstructError> {
    let mut plan = Plan::new(g.complement());
    bail_on!(plan, require_arithmetic("first", g, f)?);
    for label in f.labels_for(g)? {
        plan.push(label, 0);
    }
    bail_on!(plan, plan.check_edges(false));
    let labeling = f.restrict(g);
    let verdict = verify_iasi(&plan.graph, &labeling)?;
    if let Some(violation) = verdict.violations.into_iter().next() {
        return Ok(plan.fail(FailedHypothesis::LabelCollision { violation }));
    }
    let class = plan.promised_class();
    plan.finish(labeling, class)
}

/// Identical biarithmetic labeling with multiplier `k`: one side of a
/// bipartition gets index `base_d`, the other `k * base_d`.
pub fn label_identical_biarithmetic(
    g: &Graph,
    k: u64,
    base_d: u64,
    params: BiarithmeticParams,
) -> Result<ConstructionOutcome, ConstructError> {
    if k < 2 {
        return Err(ConstructError::MultiplierTooSmall(k));
    }
    if base_d == 0 {
        return Err(ConstructError::ZeroBaseIndex);
    }
    let mut plan = Plan::new(g.clone());
    let left = match g.is_bipartite() {
        Bipartiteness::OddCycle { cycle } => {
            return Ok(plan.fail(FailedHypothesis::NotBipartite { cycle }))
        }
        Bipartiteness::Bipartite { left, .. } => left,
    };
    if g.edge_count() == 0 {
        return Ok(plan.fail(FailedHypothesis::NoEdges));
    }
    let scaled = base_d.checked_mul(k).ok_or(NumericError::Overflow)?;
    let base_len = params.base_len.max(k as usize);
    let scaled_len = params.scaled_len.max(2);
    for v in g.vertices() {
        let shape = if left.contains(v) {
            Shape {
                index: Some(base_d),
                len: base_len,
            }
        } else {
            Shape {
                index: Some(scaled),
                len: scaled_len,
            }
        };
        plan.shapes.push(shape);
        plan.base_first.push(0);
        plan.block.push(0);
    }
    let t = plan
        .max_element()?
        .checked_add(1)
        .ok_or(NumericError::Overflow)?;
    plan.repairs.push(Repair::Relabel { scale: t });
    let labeling = plan.layout(&sidon_firsts(g.vertex_count(), t)?)?;
    plan.finish(labeling, TargetClass::IdenticalBiarithmetic(k))
}
