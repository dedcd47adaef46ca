//! Replayable record of the moves that produced a coloring.
//!
//! Text form, one move per line:
//!
//! ```text
//! schema S2
//! swap 3 7 4
//! assign 0 3
//! commit
//! ```
//!
//! `swap i j anchor` exchanges colors `i` and `j` on the Kempe component of
//! `anchor` as it stands when the line is replayed. Properness is checked at
//! every `commit`; `abort` restores the coloring from the matching `schema`
//! line. Blank lines and `#` comments are ignored.

use super::kempe::{chain, swap_members};
use super::schema::SchemaId;
use crate::coloring::{verify_coloring, Color, Coloring, Violation};
use crate::graph::{Graph, Vertex};
use std::fmt;
use std::hash::{DefaultHasher, Hash, Hasher};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    SchemaStart(SchemaId),
    Assign { v: Vertex, color: Color },
    Swap { i: Color, j: Color, anchor: Vertex },
    Commit,
    Abort,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::SchemaStart(id) => write!(f, "schema {id}"),
            Move::Assign { v, color } => write!(f, "assign {v} {color}"),
            Move::Swap { i, j, anchor } => write!(f, "swap {i} {j} {anchor}"),
            Move::Commit => f.write_str("commit"),
            Move::Abort => f.write_str("abort"),
        }
    }
}

/// A move list, optionally with the coloring hash after each move.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MoveTrace {
    pub moves: Vec<Move>,
    /// Empty for parsed traces, else one hash per move.
    pub hashes: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("move {position}: vertex {vertex} out of range")]
    VertexOutOfRange { position: usize, vertex: Vertex },
    #[error("move {position}: color 0 is not assignable")]
    ZeroColor { position: usize },
    #[error("move {position}: swap anchor {anchor} is not colored {i} or {j}")]
    OffChain { position: usize, anchor: Vertex, i: Color, j: Color },
    #[error("move {position}: commit with improper coloring ({violation})")]
    Improper { position: usize, violation: Violation },
    #[error("move {position}: {what} outside a schema")]
    Unbalanced { position: usize, what: &'static str },
    #[error("move {position}: coloring hash differs from the recorded one")]
    HashMismatch { position: usize },
}

pub(crate) fn coloring_hash(c: &Coloring) -> u64 {
    let mut h = DefaultHasher::new();
    c.as_raw().hash(&mut h);
    h.finish()
}

impl MoveTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Appends `m`, recording the hash of `after`, the coloring it produced.
    pub(crate) fn record(&mut self, m: Move, after: &Coloring) {
        self.moves.push(m);
        self.hashes.push(coloring_hash(after));
    }

    pub fn extend(&mut self, other: MoveTrace) {
        if self.hashes.len() == self.moves.len() && other.hashes.len() == other.moves.len() {
            self.hashes.extend(other.hashes);
        } else {
            self.hashes.clear();
        }
        self.moves.extend(other.moves);
    }

    /// Schemas that reached `commit`, in order.
    pub fn committed_schemas(&self) -> Vec<SchemaId> {
        let mut out = Vec::new();
        let mut open = None;
        for m in &self.moves {
            match *m {
                Move::SchemaStart(id) => open = Some(id),
                Move::Commit => out.extend(open.take()),
                Move::Abort => open = None,
                _ => {}
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for m in &self.moves {
            s.push_str(&m.to_string());
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<MoveTrace, TraceParseError> {
        let mut moves = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |message: String| TraceParseError::Malformed { line: idx + 1, message };
            let mut parts = line.split_whitespace();
            let word = parts.next().expect("nonempty line");
            let args: Vec<&str> = parts.collect();
            let nums = || -> Result<Vec<usize>, TraceParseError> {
                args.iter()
                    .map(|a| a.parse::<usize>().map_err(|_| bad(format!("bad number {a:?}"))))
                    .collect()
            };
            let arity = |k: usize| {
                if args.len() == k {
                    Ok(())
                } else {
                    Err(bad(format!("{word} takes {k} arguments, got {}", args.len())))
                }
            };
            let m = match word {
                "schema" => {
                    arity(1)?;
                    Move::SchemaStart(args[0].parse().map_err(bad)?)
                }
                "assign" => {
                    arity(2)?;
                    let n = nums()?;
                    Move::Assign { v: n[0], color: n[1] as Color }
                }
                "swap" => {
                    arity(3)?;
                    let n = nums()?;
                    Move::Swap { i: n[0] as Color, j: n[1] as Color, anchor: n[2] }
                }
                "commit" => {
                    arity(0)?;
                    Move::Commit
                }
                "abort" => {
                    arity(0)?;
                    Move::Abort
                }
                other => return Err(bad(format!("unknown move {other:?}"))),
            };
            moves.push(m);
        }
        Ok(MoveTrace { moves, hashes: Vec::new() })
    }
}

/// Re-executes `trace` from `initial`, checking properness at each commit
/// and, when recorded, the coloring hash after each move.
pub fn replay(g: &Graph, initial: &Coloring, trace: &MoveTrace) -> Result<Coloring, ReplayError> {
    let n = g.order();
    let check_hashes = trace.hashes.len() == trace.moves.len();
    let mut c = initial.clone();
    let mut snapshot: Option<Coloring> = None;
    for (position, m) in trace.moves.iter().enumerate() {
        match *m {
            Move::SchemaStart(_) => snapshot = Some(c.clone()),
            Move::Assign { v, color } => {
                if v >= n {
                    return Err(ReplayError::VertexOutOfRange { position, vertex: v });
                }
                if color == 0 {
                    return Err(ReplayError::ZeroColor { position });
                }
                c.set(v, color);
            }
            Move::Swap { i, j, anchor } => {
                if anchor >= n {
                    return Err(ReplayError::VertexOutOfRange { position, vertex: anchor });
                }
                let ca = c.raw(anchor);
                if i == 0 || j == 0 || i == j || (ca != i && ca != j) {
                    return Err(ReplayError::OffChain { position, anchor, i, j });
                }
                let members = chain(g, &c, anchor, i, j);
                swap_members(&mut c, &members, i, j);
            }
            Move::Commit => {
                if snapshot.take().is_none() {
                    return Err(ReplayError::Unbalanced { position, what: "commit" });
                }
                if let Some(violation) = first_conflict(g, &c) {
                    return Err(ReplayError::Improper { position, violation });
                }
            }
            Move::Abort => match snapshot.take() {
                Some(s) => c = s,
                None => return Err(ReplayError::Unbalanced { position, what: "abort" }),
            },
        }
        if check_hashes && coloring_hash(&c) != trace.hashes[position] {
            return Err(ReplayError::HashMismatch { position });
        }
    }
    Ok(c)
}

fn first_conflict(g: &Graph, c: &Coloring) -> Option<Violation> {
    verify_coloring(g, c, usize::MAX).into_iter().find(|v| matches!(v, Violation::Conflict { .. }))
}
