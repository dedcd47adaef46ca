//! The recoloring schemata tried when reinserting a vertex.
//!
//! S0–S2 are coded directly. S3–S5 are move templates over the roles of the
//! extension context: `u`, unique representatives `A(k)` of color slots, the
//! repeat pair `X`, `Y`, an outside vertex `Z` of the repeat color, and a
//! neighbor of some `A(k)`. A template's assignments take effect together;
//! the executor binds roles and color slots by backtracking and prunes a
//! binding as soon as a recolored vertex would clash with a neighbor that
//! no later move can still recolor.

use super::context::ExtensionContext;
use super::kempe::{chain, swap_members};
use super::trace::{Move, MoveTrace};
use crate::coloring::{Color, Coloring};
use crate::graph::{Graph, Vertex};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchemaId {
    /// Initial coloring of the residual graph after peeling.
    Base,
    S0,
    S1,
    S2,
    S3,
    S4,
    S5,
    /// Bounded breadth-first search over swaps and single recolorings.
    F,
    /// Exact recoloring of everything colored so far.
    Z,
    /// No extension within budget; `u` took a fresh color.
    Overflow,
}

impl SchemaId {
    pub const ALL: [SchemaId; 10] = [
        SchemaId::Base,
        SchemaId::S0,
        SchemaId::S1,
        SchemaId::S2,
        SchemaId::S3,
        SchemaId::S4,
        SchemaId::S5,
        SchemaId::F,
        SchemaId::Z,
        SchemaId::Overflow,
    ];

    /// The catalog tried before the fallbacks, in order.
    pub const CATALOG: [SchemaId; 6] =
        [SchemaId::S0, SchemaId::S1, SchemaId::S2, SchemaId::S3, SchemaId::S4, SchemaId::S5];

    pub fn name(self) -> &'static str {
        match self {
            SchemaId::Base => "BASE",
            SchemaId::S0 => "S0",
            SchemaId::S1 => "S1",
            SchemaId::S2 => "S2",
            SchemaId::S3 => "S3",
            SchemaId::S4 => "S4",
            SchemaId::S5 => "S5",
            SchemaId::F => "F",
            SchemaId::Z => "Z",
            SchemaId::Overflow => "OVERFLOW",
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for SchemaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SchemaId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        SchemaId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown schema {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("schema {schema} produced an invalid coloring: {detail}")]
    Unsound { schema: SchemaId, detail: String },
}

/// Planned moves, without `schema`/`commit` framing.
pub(crate) type Plan = Vec<Move>;

/// Runs one catalog schema. `None` means its pattern does not occur.
pub fn apply_schema(
    g: &Graph,
    c: &Coloring,
    ctx: &ExtensionContext,
    schema: SchemaId,
) -> Result<Option<(Coloring, MoveTrace)>, EngineError> {
    let plan = match schema {
        SchemaId::S0 => s0(ctx),
        SchemaId::S1 => s1(g, c, ctx),
        SchemaId::S2 => s2(g, c, ctx),
        SchemaId::S3 => run_templates(g, c, ctx, S3),
        SchemaId::S4 => run_templates(g, c, ctx, S4),
        SchemaId::S5 => run_templates(g, c, ctx, S5),
        _ => None,
    };
    plan.map(|p| execute(g, c, ctx.u, ctx.budget, schema, p)).transpose()
}

/// Applies `plan` inside a `schema … commit` frame and checks the result.
pub(crate) fn execute(
    g: &Graph,
    c: &Coloring,
    u: Vertex,
    budget: usize,
    schema: SchemaId,
    plan: Plan,
) -> Result<(Coloring, MoveTrace), EngineError> {
    let mut out = c.clone();
    let mut trace = MoveTrace::new();
    trace.record(Move::SchemaStart(schema), &out);
    for m in plan {
        match m {
            Move::Assign { v, color } => out.set(v, color),
            Move::Swap { i, j, anchor } => {
                let members = chain(g, &out, anchor, i, j);
                swap_members(&mut out, &members, i, j);
            }
            _ => unreachable!("plans hold only assignments and swaps"),
        }
        trace.record(m, &out);
    }
    trace.record(Move::Commit, &out);
    check_extension(g, c, &out, u, budget).map_err(|detail| EngineError::Unsound { schema, detail })?;
    Ok((out, trace))
}

/// `after` colors `u` within budget, keeps everyone else's colored status,
/// introduces no color above budget and is proper on colored vertices.
pub(crate) fn check_extension(
    g: &Graph,
    before: &Coloring,
    after: &Coloring,
    u: Vertex,
    budget: usize,
) -> Result<(), String> {
    let cu = after.raw(u) as usize;
    if cu == 0 || cu > budget {
        return Err(format!("target {u} got color {cu} with budget {budget}"));
    }
    for v in g.vertices() {
        let (b, a) = (before.raw(v), after.raw(v));
        if v != u && (b == 0) != (a == 0) {
            return Err(format!("vertex {v} changed colored status"));
        }
        if a as usize > budget && a != b {
            return Err(format!("vertex {v} moved to color {a} above budget {budget}"));
        }
    }
    match g.edges().find(|&(v, w)| after.raw(v) != 0 && after.raw(v) == after.raw(w)) {
        Some((v, w)) => Err(format!("edge {v}-{w} both colored {}", after.raw(v))),
        None => Ok(()),
    }
}

fn s0(ctx: &ExtensionContext) -> Option<Plan> {
    let &m = ctx.palette.missing.first()?;
    Some(vec![Move::Assign { v: ctx.u, color: m }])
}

/// A unique representative `A_i` whose closed neighborhood misses some `r`:
/// `A_i := r`, `u := i`.
fn s1(g: &Graph, c: &Coloring, ctx: &ExtensionContext) -> Option<Plan> {
    let t = ctx.budget as Color;
    for i in ctx.unique_colors() {
        let a = ctx.rep(i).expect("unique colors have a representative");
        if let Some(r) = (1..=t).find(|&r| r != i && c.fits(g, a, r)) {
            return Some(vec![Move::Assign { v: a, color: r }, Move::Assign { v: ctx.u, color: i }]);
        }
    }
    None
}

/// Swaps a Kempe component that frees a color at `u`: the `(r, s)` component
/// of a unique `A_r` avoiding `A_s`, or for the repeat color `ρ` either the
/// `(r, ρ)` component of `A_r` avoiding both `X`, `Y`, or the components of
/// `X` and `Y` when both avoid `A_r`.
fn s2(g: &Graph, c: &Coloring, ctx: &ExtensionContext) -> Option<Plan> {
    let u = ctx.u;
    let uniques: Vec<Color> = ctx.unique_colors().collect();
    for &r in &uniques {
        let ar = ctx.rep(r).expect("representative");
        for &s in &uniques {
            if s == r {
                continue;
            }
            let a_s = ctx.rep(s).expect("representative");
            if !chain(g, c, ar, r, s).contains(a_s) {
                return Some(vec![Move::Swap { i: r, j: s, anchor: ar }, Move::Assign { v: u, color: r }]);
            }
        }
        if let Some(p) = ctx.repeat {
            let rho = p.color;
            let kr = chain(g, c, ar, r, rho);
            if !kr.contains(p.x) && !kr.contains(p.y) {
                return Some(vec![Move::Swap { i: r, j: rho, anchor: ar }, Move::Assign { v: u, color: r }]);
            }
            let kx = chain(g, c, p.x, r, rho);
            let ky = chain(g, c, p.y, r, rho);
            if !kx.contains(ar) && !ky.contains(ar) {
                let mut plan = vec![Move::Swap { i: r, j: rho, anchor: p.x }];
                if !kx.contains(p.y) {
                    plan.push(Move::Swap { i: r, j: rho, anchor: p.y });
                }
                plan.push(Move::Assign { v: u, color: rho });
                return Some(plan);
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    U,
    /// Unique representative of the color bound to a slot.
    A(u8),
    X,
    Y,
    /// Repeat-colored vertex outside the closed neighborhood of `u`.
    Z,
    /// Neighbor of `A(of)` colored by slot `color`.
    Nb {
        of: u8,
        color: u8,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Paint {
    Slot(u8),
    Repeat,
    Any,
}

type Template = &'static [(Role, Paint)];

use Paint::{Any, Repeat, Slot};
use Role::{Nb, A, U, X, Y, Z};

const SLOTS: usize = 4;

/// Recolorings along a short path `A_r – B – C – A_s` between two unique
/// representatives.
const S3: &[Template] = &[
    // B := t, A_r := s, u := r
    &[(A(0), Slot(1)), (Nb { of: 0, color: 1 }, Any), (U, Slot(0))],
    // A_j := r, A_r := j, A_s := j, u := s
    &[(A(2), Slot(0)), (A(0), Slot(2)), (A(1), Slot(2)), (U, Slot(1))],
];

/// Repeat-pair recolorings; slots 0, 1, 2 stand for colors 1, 2, 3.
const S4: &[Template] = &[
    // X := t, A_1 := ρ, u := 1
    &[(X, Any), (A(0), Repeat), (U, Slot(0))],
    // A_3 := ρ, X := 3, A_2 := 3, u := 2
    &[(A(2), Repeat), (X, Slot(2)), (A(1), Slot(2)), (U, Slot(1))],
    // A_3 := 1, A_1 := ρ, X := 3, A_2 := 3, u := 2
    &[(A(2), Slot(0)), (A(0), Repeat), (X, Slot(2)), (A(1), Slot(2)), (U, Slot(1))],
];

/// Repeat-pair recolorings with and without an outside vertex `Z`; slot 3 is
/// `r` (or 4 in the last rows).
const S5: &[Template] = &[
    // A_3 := 2, X := 3, A_2 := 3, A_1 := ρ, u := 1
    &[(A(2), Slot(1)), (X, Slot(2)), (A(1), Slot(2)), (A(0), Repeat), (U, Slot(0))],
    // X := r, A_1 := ρ, Z := 1, u := 1
    &[(X, Slot(3)), (A(0), Repeat), (Z, Slot(0)), (U, Slot(0))],
    // X := r, Y := i, u := ρ
    &[(X, Slot(3)), (Y, Any), (U, Repeat)],
    // X := r, A_s := 1, A_1 := s, Y := s, u := ρ
    &[(X, Slot(3)), (A(1), Slot(0)), (A(0), Slot(1)), (Y, Slot(1)), (U, Repeat)],
    // X := r, Z := t, A_1 := ρ, u := 1
    &[(X, Slot(3)), (Z, Any), (A(0), Repeat), (U, Slot(0))],
    // X := r, Z := 3, A_3 := ρ, u := 3
    &[(X, Slot(3)), (Z, Slot(2)), (A(2), Repeat), (U, Slot(2))],
    // A_3 := 2, A_2 := 3, X := 3, A_1 := ρ, Z := 1, u := 1
    &[(A(2), Slot(1)), (A(1), Slot(2)), (X, Slot(2)), (A(0), Repeat), (Z, Slot(0)), (U, Slot(0))],
    // Z := t, A_3 := 2, A_2 := 3, X := 3, A_1 := ρ, u := 1
    &[(Z, Any), (A(2), Slot(1)), (A(1), Slot(2)), (X, Slot(2)), (A(0), Repeat), (U, Slot(0))],
    // X := 3, A_3 := 2, A_2 := 3, A_4 := ρ, Z := 4, u := 4
    &[(X, Slot(2)), (A(2), Slot(1)), (A(1), Slot(2)), (A(3), Repeat), (Z, Slot(3)), (U, Slot(3))],
    // A_1 := 2, A_2 := 3, A_3 := 1, X := 3, Y := 2, u := ρ
    &[(A(0), Slot(1)), (A(1), Slot(2)), (A(2), Slot(0)), (X, Slot(2)), (Y, Slot(1)), (U, Repeat)],
    // A_3 := 1, A_1 := 3, Y := 3, A_4 := 2, A_2 := 4, X := 4, u := ρ
    &[
        (A(2), Slot(0)),
        (A(0), Slot(2)),
        (Y, Slot(2)),
        (A(3), Slot(1)),
        (A(1), Slot(3)),
        (X, Slot(3)),
        (U, Repeat),
    ],
];

fn run_templates(g: &Graph, c: &Coloring, ctx: &ExtensionContext, templates: &[Template]) -> Option<Plan> {
    for &template in templates {
        let uses_pair = template.iter().any(|(r, p)| matches!(r, X | Y | Z) || *p == Repeat);
        if uses_pair && ctx.repeat.is_none() {
            continue;
        }
        let flips: &[bool] =
            if template.iter().any(|(r, _)| matches!(r, X | Y)) { &[false, true] } else { &[false] };
        for &flip in flips {
            let mut b = Binder { g, c, ctx, template, flip, slots: [None; SLOTS], moved: Vec::new() };
            if b.search(0) {
                return Some(b.moved.into_iter().map(|(v, color)| Move::Assign { v, color }).collect());
            }
        }
    }
    None
}

struct Binder<'a> {
    g: &'a Graph,
    c: &'a Coloring,
    ctx: &'a ExtensionContext,
    template: Template,
    /// Exchange the roles of `X` and `Y`.
    flip: bool,
    slots: [Option<Color>; SLOTS],
    moved: Vec<(Vertex, Color)>,
}

impl Binder<'_> {
    fn rho(&self) -> Option<Color> {
        self.ctx.repeat.map(|p| p.color)
    }

    fn pair(&self) -> Option<(Vertex, Vertex)> {
        self.ctx.repeat.map(|p| if self.flip { (p.y, p.x) } else { (p.x, p.y) })
    }

    fn slot_free(&self, k: Color) -> bool {
        Some(k) != self.rho() && !self.slots.contains(&Some(k))
    }

    fn new_color(&self, v: Vertex) -> Option<Color> {
        self.moved.iter().find(|m| m.0 == v).map(|m| m.1)
    }

    /// Whether `role` could still end up bound to `w`.
    fn may_become(&self, role: Role, w: Vertex) -> bool {
        let ctx = self.ctx;
        match role {
            U => w == ctx.u,
            A(k) => {
                let cw = self.c.raw(w);
                let is_rep = ctx.is_unique(cw) && ctx.rep(cw) == Some(w);
                match self.slots[k as usize] {
                    Some(col) => is_rep && col == cw,
                    None => is_rep && self.slot_free(cw),
                }
            }
            X => self.pair().is_some_and(|(x, _)| x == w),
            Y => self.pair().is_some_and(|(_, y)| y == w),
            Z => ctx.outside.contains(&w),
            Nb { .. } => true,
        }
    }

    /// Candidate vertices for `role`, each with the slot binding it implies.
    fn vertices(&self, role: Role) -> Vec<(Vertex, Option<(usize, Color)>)> {
        let ctx = self.ctx;
        match role {
            U => vec![(ctx.u, None)],
            A(k) => match self.slots[k as usize] {
                Some(col) if ctx.is_unique(col) => vec![(ctx.rep(col).expect("rep"), None)],
                Some(_) => Vec::new(),
                None => ctx
                    .unique_colors()
                    .filter(|&col| self.slot_free(col))
                    .map(|col| (ctx.rep(col).expect("rep"), Some((k as usize, col))))
                    .collect(),
            },
            X => self.pair().map(|(x, _)| vec![(x, None)]).unwrap_or_default(),
            Y => self.pair().map(|(_, y)| vec![(y, None)]).unwrap_or_default(),
            Z => ctx.outside.iter().map(|&z| (z, None)).collect(),
            Nb { of, color } => {
                let Some(owner) = self.slots[of as usize].and_then(|col| ctx.rep(col)) else {
                    return Vec::new();
                };
                let want = self.slots[color as usize];
                self.g
                    .neighbors(owner)
                    .iter()
                    .filter(|&&w| w != ctx.u && self.c.is_colored(w))
                    .filter_map(|&w| {
                        let cw = self.c.raw(w);
                        match want {
                            Some(col) => (col == cw).then_some((w, None)),
                            None => self.slot_free(cw).then_some((w, Some((color as usize, cw)))),
                        }
                    })
                    .collect()
            }
        }
    }

    fn colors(&self, paint: Paint) -> Vec<(Color, Option<(usize, Color)>)> {
        let t = self.ctx.budget as Color;
        match paint {
            Slot(k) => match self.slots[k as usize] {
                Some(col) => vec![(col, None)],
                None => (1..=t)
                    .filter(|&col| self.slot_free(col))
                    .map(|col| (col, Some((k as usize, col))))
                    .collect(),
            },
            Repeat => self.rho().map(|r| vec![(r, None)]).unwrap_or_default(),
            Any => (1..=t).map(|col| (col, None)).collect(),
        }
    }

    /// No neighbor of `v` ends up colored `col`, as far as can be told now.
    fn admissible(&self, step: usize, v: Vertex, col: Color) -> bool {
        self.g.neighbors(v).iter().all(|&w| match self.new_color(w) {
            Some(nc) => nc != col,
            None if self.c.raw(w) != col => true,
            None => self.template[step + 1..].iter().any(|&(r, _)| self.may_become(r, w)),
        })
    }

    /// Every recolored vertex avoids the final colors of all its neighbors.
    fn settled(&self) -> bool {
        self.moved.iter().all(|&(v, col)| {
            self.g.neighbors(v).iter().all(|&w| self.new_color(w).unwrap_or_else(|| self.c.raw(w)) != col)
        })
    }

    fn search(&mut self, step: usize) -> bool {
        if step == self.template.len() {
            return self.settled();
        }
        let (role, paint) = self.template[step];
        for (v, vbind) in self.vertices(role) {
            if self.new_color(v).is_some() {
                continue;
            }
            if let Some((k, col)) = vbind {
                self.slots[k] = Some(col);
            }
            for (col, cbind) in self.colors(paint) {
                if col == self.c.raw(v) {
                    continue;
                }
                if let Some((k, sc)) = cbind {
                    self.slots[k] = Some(sc);
                }
                if self.admissible(step, v, col) {
                    self.moved.push((v, col));
                    if self.search(step + 1) {
                        return true;
                    }
                    self.moved.pop();
                }
                if let Some((k, _)) = cbind {
                    self.slots[k] = None;
                }
            }
            if let Some((k, _)) = vbind {
                self.slots[k] = None;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in SchemaId::ALL {
            assert_eq!(id.name().parse::<SchemaId>(), Ok(id));
        }
        assert_eq!("s3".parse::<SchemaId>(), Ok(SchemaId::S3));
    }

    #[test]
    fn templates_are_well_formed() {
        for t in S3.iter().chain(S4).chain(S5) {
            assert_eq!(t.last().map(|m| m.0), Some(U), "u moves last");
            let roles: Vec<Role> = t.iter().map(|m| m.0).collect();
            for (i, r) in roles.iter().enumerate() {
                assert!(!roles[i + 1..].contains(r), "role repeated in {t:?}");
                if let Nb { of, .. } = r {
                    assert!(roles[..i].contains(&A(*of)), "owner bound first in {t:?}");
                }
            }
        }
    }
}
