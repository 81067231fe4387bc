//! The sign-reversing involution on rooted special rim-hook tableaux.
//!
//! A rooted tableau marks one cell, the root. While the root is shared by
//! two hooks the tableau is *overlapping*; one of the two hooks is active.
//! Each step classifies where the root sits in the active hook and rewrites
//! the tableau with one of five rules:
//!
//! | class      | rule | effect                                              |
//! |------------|------|-----------------------------------------------------|
//! | `CI`, `CE` | CO   | reflect the root across its two hook neighbours     |
//! | `SI`       | SI   | slide the singleton to the other end of the column-1 run |
//! | `HH`, `HV` | HE   | move the root from the head to just below the tail  |
//! | `TV`       | TV   | move the root from the tail onto the head           |
//! | `TH`       | TH   | swap the tails of the two hooks meeting at the root |
//!
//! Iterating from a non-overlapping tableau until the result is again
//! non-overlapping gives [`iota`], which flips the sign and preserves the
//! diagram away from the roots. [`outer_involution`] lifts it to pairs of a
//! special rim-hook tableau and a standard Young tableau of the same shape.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, partition_count, Cell, Partition};
use crate::render::Canvas;
use crate::tableaux::{
    enumerate_srht, standard_tableaux, RimHook, SemistandardTableau, SpecialRimHookTableau,
};

/// Position of the root within the active hook.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum HookClass {
    /// External corner.
    CE,
    /// Internal corner.
    CI,
    /// Head, reached from the left.
    HH,
    /// Head, reached from below.
    HV,
    /// Tail of a hook of size at least two, next cell above.
    TV,
    /// Tail of a hook of size at least two, next cell to the right.
    TH,
    /// Hook of size one.
    SI,
}

impl HookClass {
    /// The rewrite rule applied to a hook of this class.
    pub fn rule(self) -> Rule {
        match self {
            HookClass::CE | HookClass::CI => Rule::CO,
            HookClass::HH | HookClass::HV => Rule::HE,
            HookClass::TV => Rule::TV,
            HookClass::TH => Rule::TH,
            HookClass::SI => Rule::SI,
        }
    }

    /// Sign of an intermediate tableau relative to the starting one, when
    /// its active hook has this class. `SI` carries no constraint.
    pub fn relative_sign(self) -> Option<i32> {
        match self {
            HookClass::CE | HookClass::HH | HookClass::TV => Some(1),
            HookClass::CI | HookClass::HV | HookClass::TH => Some(-1),
            HookClass::SI => None,
        }
    }
}

impl fmt::Display for HookClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The five rewrite rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    CO,
    SI,
    HE,
    TV,
    TH,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A special rim-hook tableau with a marked root, possibly overlapping.
///
/// Hooks are kept sorted so that structurally equal tableaux compare equal;
/// `active` indexes into the sorted list. `shape` is the Ferrers diagram of
/// the union of all hooks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRooted", into = "RawRooted")]
pub struct RootedTableau {
    shape: Partition,
    hooks: Vec<RimHook>,
    root: Cell,
    active: usize,
}

#[derive(Serialize, Deserialize)]
struct RawRooted {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    shape: Option<Partition>,
    hooks: Vec<RimHook>,
    root: Cell,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    active: Option<usize>,
}

impl TryFrom<RawRooted> for RootedTableau {
    type Error = Error;

    fn try_from(raw: RawRooted) -> Result<Self> {
        let active = match raw.active {
            Some(a) => a,
            None => raw
                .hooks
                .iter()
                .position(|h| h.contains(raw.root))
                .ok_or_else(|| Error::InvalidTableau(format!("no hook contains root {}", raw.root)))?,
        };
        let t = RootedTableau::new(raw.hooks, raw.root, active)?;
        if let Some(shape) = raw.shape {
            if shape != t.shape {
                return Err(Error::ShapeMismatch {
                    left: shape,
                    right: t.shape,
                });
            }
        }
        Ok(t)
    }
}

impl From<RootedTableau> for RawRooted {
    fn from(t: RootedTableau) -> Self {
        RawRooted {
            shape: Some(t.shape),
            hooks: t.hooks,
            root: t.root,
            active: Some(t.active),
        }
    }
}

impl RootedTableau {
    /// Validates the overlap structure and normalises hook order.
    pub fn new(mut hooks: Vec<RimHook>, root: Cell, active: usize) -> Result<Self> {
        let bad = |msg: String| Error::InvalidTableau(msg);
        if active >= hooks.len() {
            return Err(bad(format!("active index {active} out of range")));
        }
        if let Some(h) = hooks.iter().find(|h| !h.is_special()) {
            return Err(bad(format!("hook with tail {} misses the first column", h.tail())));
        }
        let holders: Vec<usize> = (0..hooks.len()).filter(|&i| hooks[i].contains(root)).collect();
        match holders.len() {
            1 | 2 if holders.contains(&active) => {}
            0 => return Err(bad(format!("no hook contains root {root}"))),
            1 | 2 => return Err(bad("the active hook does not contain the root".into())),
            k => return Err(bad(format!("{k} hooks share the root"))),
        }
        let mut multiplicity: BTreeMap<Cell, usize> = BTreeMap::new();
        for h in &hooks {
            for &c in h.cells() {
                *multiplicity.entry(c).or_insert(0) += 1;
            }
        }
        for (&c, &m) in &multiplicity {
            if m > 1 && c != root {
                return Err(bad(format!("hooks overlap at {c}, which is not the root")));
            }
        }
        for &i in &holders {
            if !hooks[i].is_permissible(root) {
                return Err(Error::NotPermissible { root });
            }
        }
        let shape = Partition::from_cells(multiplicity.keys())
            .ok_or_else(|| bad("the hooks do not cover a Ferrers diagram".into()))?;
        let active_hook = hooks[active].clone();
        hooks.sort();
        if hooks.windows(2).any(|w| w[0] == w[1]) {
            return Err(bad("duplicate hooks".into()));
        }
        let active = hooks.iter().position(|h| *h == active_hook).expect("present");
        Ok(RootedTableau {
            shape,
            hooks,
            root,
            active,
        })
    }

    /// Roots a special rim-hook tableau at one of its cells.
    pub fn from_srht(tableau: &SpecialRimHookTableau, root: Cell) -> Result<Self> {
        let active = tableau
            .hooks()
            .iter()
            .position(|h| h.contains(root))
            .ok_or_else(|| Error::InvalidTableau(format!("root {root} lies outside the tableau")))?;
        RootedTableau::new(tableau.hooks().to_vec(), root, active)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn hooks(&self) -> &[RimHook] {
        &self.hooks
    }

    pub fn root(&self) -> Cell {
        self.root
    }

    pub fn active(&self) -> usize {
        self.active
    }

    pub fn active_hook(&self) -> &RimHook {
        &self.hooks[self.active]
    }

    /// Index of the non-active hook containing the root.
    pub fn other_hook(&self) -> Option<usize> {
        (0..self.hooks.len()).find(|&i| i != self.active && self.hooks[i].contains(self.root))
    }

    pub fn is_overlapping(&self) -> bool {
        self.other_hook().is_some()
    }

    /// Product of `(-1)^{vertical edges}` over hooks; a shared root counts
    /// toward each hook containing it.
    pub fn sign(&self) -> i32 {
        self.hooks.iter().map(RimHook::sign).product()
    }

    pub fn hook_type(&self) -> Partition {
        Partition::from_sizes(self.hooks.iter().map(RimHook::len))
    }

    /// Cells of the diagram other than the root.
    pub fn cells_without_root(&self) -> BTreeSet<Cell> {
        let mut cells = self.shape.cell_set();
        cells.remove(&self.root);
        cells
    }

    /// Forgets the root of a non-overlapping tableau.
    pub fn to_srht(&self) -> Result<SpecialRimHookTableau> {
        if self.is_overlapping() {
            return Err(Error::InvalidTableau("overlapping tableau has no underlying tableau".into()));
        }
        SpecialRimHookTableau::new(self.shape.clone(), self.hooks.clone())
    }

    /// For a `TH` tableau, the cell of the bigger hook at which it is cut.
    pub fn th_cut_cell(&self) -> Option<Cell> {
        if classify(self).ok()? != HookClass::TH {
            return None;
        }
        let other = &self.hooks[self.other_hook()?];
        let active = self.active_hook();
        let (big, small) = if active.len() > other.len() {
            (active, other)
        } else {
            (other, active)
        };
        big.cells().get(small.len()).copied()
    }

    /// ASCII drawing: root `#`, active hook `O`, other nodes `*`, and the
    /// `TH` cut cell `v`.
    pub fn render(&self) -> String {
        let mut canvas = Canvas::new();
        canvas.put(self.root, "#");
        if let Some(v) = self.th_cut_cell() {
            canvas.put(v, "v");
        }
        canvas.hook(self.active_hook(), "O");
        for (i, h) in self.hooks.iter().enumerate() {
            if i != self.active {
                canvas.hook(h, "*");
            }
        }
        canvas.render()
    }
}

/// Classifies the active hook by the position of the root.
pub fn classify(tableau: &RootedTableau) -> Result<HookClass> {
    let hook = tableau.active_hook();
    let r = tableau.root;
    if !hook.is_permissible(r) {
        return Err(Error::NotPermissible { root: r });
    }
    let cells = hook.cells();
    if cells.len() == 1 {
        return Ok(HookClass::SI);
    }
    if r == hook.head() {
        let pred = cells[cells.len() - 2];
        return Ok(if pred.row == r.row { HookClass::HH } else { HookClass::HV });
    }
    if r == hook.tail() {
        return Ok(if cells[1].col == r.col { HookClass::TV } else { HookClass::TH });
    }
    if hook.is_internal_corner(r) {
        Ok(HookClass::CI)
    } else {
        Ok(HookClass::CE)
    }
}

fn broken(msg: impl Into<String>) -> Error {
    Error::Involution(msg.into())
}

/// Finishes a rule that moved the root of hook `modified` to `new_root`:
/// activity passes to the hook newly overlapped, if any.
fn settle(hooks: Vec<RimHook>, modified: usize, new_root: Cell) -> Result<RootedTableau> {
    let overlapped = (0..hooks.len()).find(|&i| i != modified && hooks[i].contains(new_root));
    RootedTableau::new(hooks, new_root, overlapped.unwrap_or(modified))
}

/// Applies the rule selected by [`classify`] once.
pub fn apply_rule(tableau: &RootedTableau) -> Result<RootedTableau> {
    let class = classify(tableau)?;
    let r = tableau.root;
    let a = tableau.active;
    let mut hooks = tableau.hooks.clone();
    match class {
        HookClass::CI | HookClass::CE => {
            let target = if class == HookClass::CI {
                Cell::new(r.row + 1, r.col + 1)
            } else {
                Cell::new(r.row - 1, r.col - 1)
            };
            let pos = hooks[a].position(r).expect("root in active hook");
            hooks[a].cells_mut()[pos] = target;
            settle(hooks, a, target).map_err(|e| broken(format!("CO from {r}: {e}")))
        }
        HookClass::HH | HookClass::HV => {
            let cells = hooks[a].cells_mut();
            cells.pop();
            let target = cells[0].down();
            cells.insert(0, target);
            settle(hooks, a, target).map_err(|e| broken(format!("HE from {r}: {e}")))
        }
        HookClass::TV => {
            hooks[a].cells_mut().remove(0);
            let head = hooks[a].head();
            let mut outcomes = Vec::new();
            for target in [head.up(), Some(head.right())].into_iter().flatten() {
                let mut candidate = hooks.clone();
                candidate[a].cells_mut().push(target);
                if let Ok(t) = settle(candidate, a, target) {
                    if !t.is_overlapping() || apply_rule(&t).is_ok() {
                        outcomes.push(t);
                    }
                }
            }
            match outcomes.len() {
                1 => Ok(outcomes.pop().unwrap()),
                k => Err(broken(format!("TV from {r}: {k} admissible attachments at {head}"))),
            }
        }
        HookClass::TH => {
            let b = tableau
                .other_hook()
                .ok_or_else(|| broken(format!("TH at {r} without a second hook")))?;
            if hooks[b].tail() != r {
                return Err(broken(format!("TH at {r}: root is not the tail of the other hook")));
            }
            let (big, small) = match hooks[a].len().cmp(&hooks[b].len()) {
                std::cmp::Ordering::Greater => (a, b),
                std::cmp::Ordering::Less => (b, a),
                std::cmp::Ordering::Equal => {
                    return Err(broken(format!("TH at {r}: hooks of equal size")))
                }
            };
            let s = hooks[small].len();
            let portion = hooks[big].cells_mut().split_off(s);
            let mut grown = hooks[small].cells().to_vec();
            grown.extend(portion);
            hooks[small] = RimHook::new(grown).map_err(|e| broken(format!("TH at {r}: {e}")))?;
            RootedTableau::new(hooks, r, b).map_err(|e| broken(format!("TH at {r}: {e}")))
        }
        HookClass::SI => {
            let b = tableau
                .other_hook()
                .ok_or_else(|| broken(format!("SI at {r} without a second hook")))?;
            let run = hooks[b].first_column_len();
            let bottom = hooks[b].cells()[0];
            let top = hooks[b].cells()[run - 1];
            let target = if r == bottom {
                top
            } else if r == top {
                bottom
            } else {
                return Err(broken(format!("SI at {r}: not an end of the first-column run")));
            };
            hooks[a] = RimHook::new(vec![target]).expect("single cell");
            RootedTableau::new(hooks, target, b).map_err(|e| broken(format!("SI at {r}: {e}")))
        }
    }
}

/// One tableau of a trace together with the class of its active hook.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawStep", into = "RawStep")]
pub struct TraceStep {
    pub tableau: RootedTableau,
    pub class: HookClass,
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    shape: Partition,
    hooks: Vec<RimHook>,
}

#[derive(Serialize, Deserialize)]
struct RawStep {
    class: HookClass,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rule: Option<Rule>,
    tableau: RawTableau,
    root: Cell,
    active: usize,
}

impl TryFrom<RawStep> for TraceStep {
    type Error = Error;

    fn try_from(raw: RawStep) -> Result<Self> {
        let tableau = RootedTableau::try_from(RawRooted {
            shape: Some(raw.tableau.shape),
            hooks: raw.tableau.hooks,
            root: raw.root,
            active: Some(raw.active),
        })?;
        Ok(TraceStep {
            tableau,
            class: raw.class,
        })
    }
}

impl From<TraceStep> for RawStep {
    fn from(step: TraceStep) -> Self {
        let t = step.tableau;
        RawStep {
            class: step.class,
            rule: None,
            tableau: RawTableau {
                shape: t.shape,
                hooks: t.hooks,
            },
            root: t.root,
            active: t.active,
        }
    }
}

/// The sequence of tableaux visited by [`iota`], starting and ending with a
/// non-overlapping tableau.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Trace {
    pub steps: Vec<TraceStep>,
}

impl Trace {
    pub fn initial(&self) -> &RootedTableau {
        &self.steps[0].tableau
    }

    pub fn last(&self) -> &RootedTableau {
        &self.steps[self.steps.len() - 1].tableau
    }

    /// Number of rule applications.
    pub fn len(&self) -> usize {
        self.steps.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The rules applied, in order.
    pub fn rules(&self) -> Vec<Rule> {
        self.steps[..self.len()].iter().map(|s| s.class.rule()).collect()
    }

    pub fn classes(&self) -> Vec<HookClass> {
        self.steps.iter().map(|s| s.class).collect()
    }

    /// Frames separated by rule arrows.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, step) in self.steps.iter().enumerate() {
            out.push_str(&format!("S{i} [{}]\n", step.class));
            out.push_str(&step.tableau.render());
            if i < self.len() {
                out.push_str(&format!("  --{}-->\n", step.class.rule()));
            }
        }
        out
    }

    /// JSON array with each step's rule name included.
    pub fn to_json(&self) -> serde_json::Value {
        let steps = self
            .steps
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let mut raw = RawStep::from(s.clone());
                if i < self.len() {
                    raw.rule = Some(s.class.rule());
                }
                serde_json::to_value(raw).expect("serialisable")
            })
            .collect();
        serde_json::Value::Array(steps)
    }
}

/// Safety bound on the number of steps of one run of [`iota`].
pub fn step_budget(n: usize) -> usize {
    4 * n.max(1) * partition_count(n)
}

/// Runs the rules from a non-overlapping tableau rooted at a corner of its
/// shape, inside a hook of size at least two, until the tableau is again
/// non-overlapping.
///
/// Every intermediate tableau is checked to cover the original diagram
/// minus the original root and to keep the original type.
pub fn iota(start: &RootedTableau) -> Result<(RootedTableau, Trace)> {
    if start.is_overlapping() {
        return Err(broken("iota starts from a non-overlapping tableau"));
    }
    if !start.shape.is_corner(start.root) {
        return Err(broken(format!("root {} is not a corner of {}", start.root, start.shape)));
    }
    if start.active_hook().len() < 2 {
        return Err(broken("root lies in a hook of size one"));
    }
    let region = start.cells_without_root();
    let hook_type = start.hook_type();
    let budget = step_budget(start.shape.n());
    let mut steps = Vec::new();
    let mut current = start.clone();
    loop {
        let class = classify(&current)?;
        steps.push(TraceStep {
            tableau: current.clone(),
            class,
        });
        if steps.len() > budget {
            return Err(Error::StepBudgetExceeded { budget });
        }
        let next = apply_rule(&current)?;
        if next.hook_type() != hook_type {
            return Err(broken(format!("type changed from {hook_type} to {}", next.hook_type())));
        }
        if next.is_overlapping() {
            if next.shape.cell_set() != region {
                return Err(broken("overlapping tableau left the original region"));
            }
            current = next;
            continue;
        }
        if next.cells_without_root() != region {
            return Err(broken("final tableau violates shape stability"));
        }
        let class = classify(&next)?;
        steps.push(TraceStep {
            tableau: next.clone(),
            class,
        });
        return Ok((next, Trace { steps }));
    }
}

/// Checks the sign pattern along a trace: for every tableau before the last,
/// its sign equals `initial_sign` for classes `CE`, `HH`, `TV` and
/// `-initial_sign` for `CI`, `HV`, `TH`.
pub fn check_sign_lemma(trace: &Trace, initial_sign: i32) -> bool {
    trace.steps[..trace.len()].iter().all(|step| {
        step.class
            .relative_sign()
            .is_none_or(|rel| step.tableau.sign() == rel * initial_sign)
    })
}

/// Result of applying the involution on pairs.
#[derive(Debug, Clone)]
pub struct PairImage {
    pub tableau: SpecialRimHookTableau,
    pub standard: SemistandardTableau,
    /// Trace of the core involution on the reduced pair.
    pub trace: Trace,
    /// Number of trailing singleton cells removed before rooting.
    pub stripped: usize,
}

fn entries(t: &SemistandardTableau) -> BTreeMap<Cell, usize> {
    let mut map = BTreeMap::new();
    for (i, row) in t.rows().iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            map.insert(Cell::new(i + 1, j + 1), v);
        }
    }
    map
}

fn rows_from(entries: &BTreeMap<Cell, usize>) -> Vec<Vec<usize>> {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for (c, &v) in entries {
        if rows.len() < c.row {
            rows.resize_with(c.row, Vec::new);
        }
        rows[c.row - 1].push(v);
    }
    rows
}

/// The involution `(S, T) -> (S', T')` on pairs of a special rim-hook
/// tableau and a standard Young tableau of the same shape, for types other
/// than `(1^n)`.
pub fn outer_involution_traced(
    tableau: &SpecialRimHookTableau,
    standard: &SemistandardTableau,
) -> Result<PairImage> {
    let shape = tableau.shape().clone();
    if standard.shape() != shape {
        return Err(Error::ShapeMismatch {
            left: shape,
            right: standard.shape(),
        });
    }
    if !standard.is_standard() {
        return Err(Error::InvalidTableau("the second tableau must be standard".into()));
    }
    let n = shape.n();
    if tableau.hook_type() == Partition::column(n) {
        return Err(Error::AllSingletonType(tableau.hook_type()));
    }

    let mut hooks = tableau.hooks().to_vec();
    let mut filling = entries(standard);
    let mut largest = n;
    loop {
        let cell = filling
            .iter()
            .find_map(|(&c, &v)| (v == largest).then_some(c))
            .expect("standard filling");
        let pos = hooks.iter().position(|h| h.contains(cell)).expect("covered");
        if hooks[pos].len() > 1 {
            break;
        }
        hooks.remove(pos);
        filling.remove(&cell);
        largest -= 1;
    }
    let stripped = n - largest;

    let root = filling
        .iter()
        .find_map(|(&c, &v)| (v == largest).then_some(c))
        .expect("standard filling");
    let active = hooks.iter().position(|h| h.contains(root)).expect("covered");
    let start = RootedTableau::new(hooks, root, active)?;
    let (end, trace) = iota(&start)?;

    filling.remove(&root);
    filling.insert(end.root, largest);
    let mut hooks = end.hooks.clone();
    let mut depth = end.shape.len();
    for value in largest + 1..=n {
        depth += 1;
        let cell = Cell::new(depth, 1);
        hooks.push(RimHook::new(vec![cell]).expect("single cell"));
        filling.insert(cell, value);
    }
    let cells: Vec<Cell> = filling.keys().copied().collect();
    let new_shape = Partition::from_cells(&cells)
        .ok_or_else(|| broken("image does not fill a Ferrers diagram"))?;
    let image = SpecialRimHookTableau::new(new_shape, hooks)?;
    let standard = SemistandardTableau::new(rows_from(&filling))
        .map_err(|e| broken(format!("image filling is not standard: {e}")))?;
    Ok(PairImage {
        tableau: image,
        standard,
        trace,
        stripped,
    })
}

/// [`outer_involution_traced`] without the trace.
pub fn outer_involution(
    tableau: &SpecialRimHookTableau,
    standard: &SemistandardTableau,
) -> Result<(SpecialRimHookTableau, SemistandardTableau)> {
    let image = outer_involution_traced(tableau, standard)?;
    Ok((image.tableau, image.standard))
}

/// Every pair `(S, T)` with `S` of type `hook_type` and `T` standard of the
/// same shape, shapes in reverse-lexicographic order.
pub fn standard_pairs(hook_type: &Partition) -> Vec<(SpecialRimHookTableau, SemistandardTableau)> {
    let mut out = Vec::new();
    for shape in enumerate_partitions(hook_type.n()) {
        let tableaux = enumerate_srht(&shape, hook_type);
        if tableaux.is_empty() {
            continue;
        }
        let standard = standard_tableaux(&shape);
        for s in &tableaux {
            for t in &standard {
                out.push((s.clone(), t.clone()));
            }
        }
    }
    out
}

/// Outcome of running the pair involution over every pair of one type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeCensus {
    pub hook_type: Partition,
    pub pairs: usize,
    pub two_cycles: usize,
    pub fixed_points: usize,
    /// `Σ ε(S)` over all pairs.
    pub signed_sum: i64,
    /// Longest trace, in rule applications.
    pub longest_trace: usize,
    /// Pairs on which an involution property failed, with a description.
    pub failures: Vec<String>,
}

/// Runs the involution over all pairs of the given type and checks that it
/// is a fixed-point-free, sign-reversing involution whose traces obey the
/// sign pattern. Type `(1^n)` is the single fixed pair.
pub fn type_census(hook_type: &Partition) -> TypeCensus {
    let pairs = standard_pairs(hook_type);
    let signed_sum = pairs.iter().map(|(s, _)| i64::from(s.sign())).sum();
    let mut census = TypeCensus {
        hook_type: hook_type.clone(),
        pairs: pairs.len(),
        two_cycles: 0,
        fixed_points: 0,
        signed_sum,
        longest_trace: 0,
        failures: Vec::new(),
    };
    if *hook_type == Partition::column(hook_type.n()) {
        census.fixed_points = pairs.len();
        return census;
    }
    for (s, t) in &pairs {
        let label = || format!("S={} T={:?}", serde_json::to_string(s).unwrap(), t.rows());
        let forward = match outer_involution_traced(s, t) {
            Ok(image) => image,
            Err(e) => {
                census.failures.push(format!("{}: {e}", label()));
                continue;
            }
        };
        census.longest_trace = census.longest_trace.max(forward.trace.len());
        if !check_sign_lemma(&forward.trace, forward.trace.initial().sign()) {
            census.failures.push(format!("{}: sign pattern fails along the trace", label()));
        }
        if forward.tableau.sign() != -s.sign() {
            census.failures.push(format!("{}: sign not reversed", label()));
        }
        if forward.tableau == *s && forward.standard == *t {
            census.failures.push(format!("{}: fixed point", label()));
        }
        match outer_involution(&forward.tableau, &forward.standard) {
            Ok((s2, t2)) if s2 == *s && t2 == *t => census.two_cycles += 1,
            Ok(_) => census.failures.push(format!("{}: not an involution", label())),
            Err(e) => census.failures.push(format!("{}: inverse failed: {e}", label())),
        }
    }
    census.two_cycles /= 2;
    census
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hook(cells: &[(usize, usize)]) -> RimHook {
        RimHook::new(cells.iter().map(|&(r, c)| Cell::new(r, c)).collect()).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn classification_covers_all_positions() {
        let h = vec![hook(&[(3, 1), (2, 1), (2, 2), (1, 2), (1, 3)]), hook(&[(1, 1)])];
        let class_at = |r: (usize, usize)| {
            classify(&RootedTableau::new(h.clone(), Cell::new(r.0, r.1), 0).unwrap()).unwrap()
        };
        assert_eq!(class_at((3, 1)), HookClass::TV);
        assert_eq!(class_at((2, 1)), HookClass::CI);
        assert_eq!(class_at((2, 2)), HookClass::CE);
        assert_eq!(class_at((1, 3)), HookClass::HH);
        let vertical = vec![hook(&[(2, 1), (2, 2), (1, 2)]), hook(&[(1, 1)])];
        let t = RootedTableau::new(vertical, Cell::new(1, 2), 0).unwrap();
        assert_eq!(classify(&t).unwrap(), HookClass::HV);
        let horizontal = vec![hook(&[(1, 1), (1, 2)]), hook(&[(2, 1)])];
        let t = RootedTableau::new(horizontal, Cell::new(1, 1), 0).unwrap();
        assert_eq!(classify(&t).unwrap(), HookClass::TH);
    }

    #[test]
    fn rejects_non_permissible_root() {
        let h = vec![hook(&[(1, 1), (1, 2), (1, 3)])];
        assert!(matches!(
            RootedTableau::new(h, Cell::new(1, 2), 0),
            Err(Error::NotPermissible { .. })
        ));
    }

    #[test]
    fn opening_pair_example() {
        let s = SpecialRimHookTableau::new(
            p(&[2, 2, 1, 1]),
            vec![hook(&[(1, 1), (1, 2)]), hook(&[(4, 1), (3, 1), (2, 1), (2, 2)])],
        )
        .unwrap();
        let t = SemistandardTableau::new(vec![vec![1, 3], vec![2, 5], vec![4], vec![6]]).unwrap();
        let (s2, t2) = outer_involution(&s, &t).unwrap();
        assert_eq!(s2.shape(), &p(&[2, 2, 2]));
        assert_eq!(
            s2.hooks(),
            &[hook(&[(2, 1), (1, 1)]), hook(&[(3, 1), (3, 2), (2, 2), (1, 2)])]
        );
        assert_eq!(t2.rows(), &[vec![1, 3], vec![2, 5], vec![4, 6]]);
        assert_eq!(s2.sign(), -s.sign());
        assert_eq!(outer_involution(&s2, &t2).unwrap(), (s, t));
    }

    #[test]
    fn th_swaps_hook_sizes() {
        // Tails of a 2-hook and a 5-hook meet at the root (3,1).
        let small = hook(&[(3, 1), (2, 1)]);
        let big = hook(&[(3, 1), (3, 2), (2, 2), (1, 2), (1, 3)]);
        let t = RootedTableau::new(vec![hook(&[(1, 1)]), small, big.clone()], Cell::new(3, 1), 2).unwrap();
        assert_eq!(t.shape(), &p(&[3, 2, 2]));
        assert_eq!(t.hooks()[t.active()], big);
        assert_eq!(classify(&t).unwrap(), HookClass::TH);
        assert_eq!(t.th_cut_cell(), Some(Cell::new(2, 2)));

        let next = apply_rule(&t).unwrap();
        let grown = hook(&[(3, 1), (2, 1), (2, 2), (1, 2), (1, 3)]);
        assert_eq!(next.hooks()[next.active()], grown);
        assert!(next.hooks().contains(&hook(&[(3, 1), (3, 2)])));
        assert_eq!(next.hook_type(), t.hook_type());
        assert_eq!(next.root(), t.root());
        assert_eq!(classify(&next).unwrap(), HookClass::TV);
    }
}
