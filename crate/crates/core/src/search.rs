//! Exact maximum configuration-free subsets of small grids.
//!
//! Forbidden tuples are hyperedges on the `n^2` grid points; the optimum is a
//! maximum independent set, found by branch and bound over 256-bit sets.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::detectors::witnesses;
use crate::error::{Error, Result};
use crate::grid::{ConfigClass, GridSpec, Point, PointSet, Witness};

/// Largest side for classes of four points.
pub const ARITY4_LIMIT: u32 = 8;
/// Largest side for classes of three points.
pub const ARITY3_LIMIT: u32 = 12;
pub const DEFAULT_BUDGET: u64 = 50_000_000;

fn guard(n: u32, class: ConfigClass) -> Result<GridSpec> {
    let limit = if class.arity() == 3 { ARITY3_LIMIT } else { ARITY4_LIMIT };
    if n > limit {
        return Err(Error::GuardExceeded {
            what: format!("exact search for {class}"),
            size: n as usize,
            limit: limit as usize,
        });
    }
    GridSpec::new(n)
}

/// Every forbidden tuple in `[1, n]^2`, sorted by point list.
pub fn enumerate_forbidden(n: u32, class: ConfigClass) -> Result<Vec<Witness>> {
    let grid = guard(n, class)?;
    let mut all = witnesses(&grid.full(), class);
    all.sort_by(|a, b| a.points.cmp(&b.points));
    Ok(all)
}

/// One of the eight symmetries of the square grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GridSymmetry {
    #[default]
    Identity,
    Rot90,
    Rot180,
    Rot270,
    FlipX,
    FlipY,
    Transpose,
    AntiTranspose,
}

impl GridSymmetry {
    pub const ALL: [GridSymmetry; 8] = [
        GridSymmetry::Identity,
        GridSymmetry::Rot90,
        GridSymmetry::Rot180,
        GridSymmetry::Rot270,
        GridSymmetry::FlipX,
        GridSymmetry::FlipY,
        GridSymmetry::Transpose,
        GridSymmetry::AntiTranspose,
    ];

    /// Whether the symmetry maps configurations of `class` to configurations
    /// of `class`. Corners only come in the orientations with both legs
    /// pointing the same way, so quarter turns and axis flips break them.
    pub fn preserves(self, class: ConfigClass) -> bool {
        class != ConfigClass::Corner
            || matches!(
                self,
                GridSymmetry::Identity | GridSymmetry::Rot180 | GridSymmetry::Transpose | GridSymmetry::AntiTranspose
            )
    }

    /// Image of `p` inside `[1, n]^2`.
    pub fn apply(self, p: Point, n: u32) -> Point {
        let m = n as i64 + 1;
        let (x, y) = (p.x, p.y);
        match self {
            GridSymmetry::Identity => Point::new(x, y),
            GridSymmetry::Rot90 => Point::new(m - y, x),
            GridSymmetry::Rot180 => Point::new(m - x, m - y),
            GridSymmetry::Rot270 => Point::new(y, m - x),
            GridSymmetry::FlipX => Point::new(m - x, y),
            GridSymmetry::FlipY => Point::new(x, m - y),
            GridSymmetry::Transpose => Point::new(y, x),
            GridSymmetry::AntiTranspose => Point::new(m - y, m - x),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Node limit.
    pub budget: u64,
    /// Relabels the grid before ordering, which changes the exploration order
    /// but not the optimum.
    pub relabel: GridSymmetry,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            relabel: GridSymmetry::Identity,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchResult {
    pub n: u32,
    pub class: ConfigClass,
    pub optimum: usize,
    pub witness: PointSet,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

type Bits = [u64; 4];

fn bit(i: usize) -> Bits {
    let mut b = [0; 4];
    b[i / 64] |= 1 << (i % 64);
    b
}

fn count(b: &Bits) -> usize {
    b.iter().map(|w| w.count_ones() as usize).sum()
}

fn has(b: &Bits, i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

fn first(b: &Bits) -> Option<usize> {
    b.iter().enumerate().find(|(_, w)| **w != 0).map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
}

struct Solver {
    /// `edges[v]`: the tuples through `v`, as bit sets over search positions.
    edges: Vec<Vec<Bits>>,
    best: Bits,
    best_len: usize,
    nodes: u64,
    budget: u64,
}

impl Solver {
    /// `candidates` are undecided positions that can still be added; a
    /// position's index is its rank in the branching order.
    fn run(&mut self, chosen: Bits, chosen_len: usize, candidates: Bits) -> Result<(), ()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        if chosen_len > self.best_len {
            self.best = chosen;
            self.best_len = chosen_len;
        }
        if chosen_len + count(&candidates) <= self.best_len {
            return Ok(());
        }
        let Some(v) = first(&candidates) else { return Ok(()) };
        let mut rest = candidates;
        rest[v / 64] &= !(1 << (v % 64));

        let mut with = chosen;
        with[v / 64] |= 1 << (v % 64);
        let mut allowed = rest;
        for e in &self.edges[v] {
            let open: Bits = std::array::from_fn(|k| e[k] & !with[k]);
            if count(&open) == 1 {
                let w = first(&open).expect("one open point");
                allowed[w / 64] &= !(1 << (w % 64));
            }
        }
        self.run(with, chosen_len + 1, allowed)?;
        self.run(chosen, chosen_len, rest)
    }
}

/// Maximum subset of `[1, n]^2` free of `class`, certified by exhaustive
/// branch and bound.
pub fn max_free_subset_exact(n: u32, class: ConfigClass, opts: SearchOptions) -> Result<SearchResult> {
    let start = Instant::now();
    let grid = guard(n, class)?;
    let points = grid.full();
    let tuples = enumerate_forbidden(n, class)?;

    let mut degree = vec![0usize; points.len()];
    let index = |p: Point| points.index_of(p).expect("grid point");
    for t in &tuples {
        for &p in &t.points {
            degree[index(p)] += 1;
        }
    }
    // branching order: high degree first, then by relabelled position
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(degree[i]), opts.relabel.apply(points.points()[i], n)));
    let mut rank = vec![0usize; points.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }

    let mut edges = vec![Vec::new(); points.len()];
    for t in &tuples {
        let mut e = [0u64; 4];
        for &p in &t.points {
            let b = bit(rank[index(p)]);
            for k in 0..4 {
                e[k] |= b[k];
            }
        }
        for &p in &t.points {
            edges[rank[index(p)]].push(e);
        }
    }
    let mut all = [0u64; 4];
    for r in 0..points.len() {
        all[r / 64] |= 1 << (r % 64);
    }
    let mut solver = Solver {
        edges,
        best: [0; 4],
        best_len: 0,
        nodes: 0,
        budget: opts.budget,
    };
    if solver.run([0; 4], 0, all).is_err() {
        return Err(Error::BudgetExhausted {
            budget: opts.budget,
            best_found: solver.best_len,
        });
    }
    let witness = PointSet::new((0..points.len()).filter(|&r| has(&solver.best, r)).map(|r| points.points()[order[r]]))
        .with_bound(grid)?;
    Ok(SearchResult {
        n,
        class,
        optimum: solver.best_len,
        witness,
        nodes_explored: solver.nodes,
        elapsed: start.elapsed(),
    })
}

/// One row of an extremal table; rows whose search ran out of budget keep
/// the best size found and are marked uncertified.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableRow {
    pub n: u32,
    pub class: ConfigClass,
    pub size: Option<usize>,
    pub certified: bool,
    pub nodes_explored: Option<u64>,
    pub elapsed: Duration,
    pub error: Option<String>,
}

pub fn extremal_table(class: ConfigClass, ns: impl IntoIterator<Item = u32>, budget: u64) -> Vec<TableRow> {
    ns.into_iter()
        .map(|n| {
            let start = Instant::now();
            let opts = SearchOptions {
                budget,
                ..SearchOptions::default()
            };
            match max_free_subset_exact(n, class, opts) {
                Ok(r) => TableRow {
                    n,
                    class,
                    size: Some(r.optimum),
                    certified: true,
                    nodes_explored: Some(r.nodes_explored),
                    elapsed: r.elapsed,
                    error: None,
                },
                Err(e) => TableRow {
                    n,
                    class,
                    size: match e {
                        Error::BudgetExhausted { best_found, .. } => Some(best_found),
                        _ => None,
                    },
                    certified: false,
                    nodes_explored: None,
                    elapsed: start.elapsed(),
                    error: Some(e.to_string()),
                },
            }
        })
        .collect()
}
