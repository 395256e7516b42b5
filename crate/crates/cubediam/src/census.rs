//! Breadth-first census of a metric's move graph: exact new-state counts per
//! depth, and the true diameter when the space is fully enumerable.
//!
//! Two engines produce identical level counts:
//!
//! * `Compact` (2x2x2 only): level-synchronous sweep over visited/frontier
//!   bitsets indexed by [`crate::codec::CompactIndex`], stepping through a
//!   precomputed move table. Optionally parallel; the counts are
//!   bit-identical regardless of the worker count because frontiers merge
//!   through idempotent bit-ors.
//! * `Hashed`: generic deduplicating search over packed sticker keys, used
//!   for the square-turn subgroup and all shallow censuses.

use crate::codec::{self, CompactIndex};
use crate::cube::{FaceletCube, Metric, MetricName};
use crate::error::Error;
use crate::orders;
use num_traits::ToPrimitive;
use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CensusEngine {
    Compact,
    Hashed,
}

#[derive(Debug, Clone)]
pub struct CensusOptions {
    /// Refuse enumerations whose state space exceeds this many states.
    pub budget: u64,
    /// Worker threads for the compact engine's frontier expansion.
    pub threads: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            budget: 100_000_000,
            threads: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct LevelCount {
    pub t: u32,
    pub new_states: u64,
}

/// Per-depth census result. `levels[t].new_states` counts the states first
/// reached at depth `t`; `levels[0]` is always `(0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CensusReport {
    pub metric: MetricName,
    pub n: u8,
    pub levels: Vec<LevelCount>,
    pub complete: bool,
    pub diameter: Option<u32>,
    pub total: u64,
}

impl CensusReport {
    pub fn new_states(&self, t: usize) -> Option<u64> {
        self.levels.get(t).map(|l| l.new_states)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,new_states\n");
        for level in &self.levels {
            out.push_str(&format!("{},{}\n", level.t, level.new_states));
        }
        out
    }
}

/// Exhaustive census. Requires the whole state space to fit the budget;
/// the compact engine additionally requires `n = 2`.
pub fn full_census(
    metric: &Metric,
    engine: CensusEngine,
    opts: &CensusOptions,
) -> Result<CensusReport, Error> {
    let order = orders::census_order(metric.size(), metric.name())?;
    let states = order.exact.to_u64();
    if states.is_none() || states.unwrap() > opts.budget {
        return Err(Error::BudgetExceeded {
            states: order.approx(),
            budget: opts.budget,
        });
    }
    let expected = states.unwrap();

    let (levels, complete) = match engine {
        CensusEngine::Compact => {
            if metric.size() != 2 {
                return Err(Error::SizeMismatch {
                    expected: 2,
                    got: metric.size(),
                });
            }
            (compact_bfs(metric, None, opts.threads.max(1))?, true)
        }
        CensusEngine::Hashed => hashed_bfs(metric, None, opts.budget)?,
    };
    debug_assert!(complete);

    let total: u64 = levels.iter().map(|l| l.new_states).sum();
    if total != expected {
        return Err(Error::InvalidInput(format!(
            "census of {} n={} found {total} states, expected {expected}",
            metric.name(),
            metric.size()
        )));
    }
    Ok(CensusReport {
        metric: metric.name(),
        n: metric.size(),
        diameter: Some(levels.len() as u32 - 1),
        complete: true,
        total,
        levels,
    })
}

/// Exact counts up to `max_depth` only. The result is flagged complete if
/// the frontier happens to empty before the depth limit.
pub fn shallow_census(
    metric: &Metric,
    max_depth: u32,
    opts: &CensusOptions,
) -> Result<CensusReport, Error> {
    let (levels, complete) = hashed_bfs(metric, Some(max_depth), opts.budget)?;
    let total: u64 = levels.iter().map(|l| l.new_states).sum();
    Ok(CensusReport {
        metric: metric.name(),
        n: metric.size(),
        diameter: complete.then(|| levels.len() as u32 - 1),
        complete,
        total,
        levels,
    })
}

/// Exact-level growth ratio `new_states(k) / new_states(k-1)`.
pub fn branching_ratio(report: &CensusReport, k: usize) -> Result<f64, Error> {
    if k < 2 {
        return Err(Error::InvalidInput(format!(
            "branching ratio needs depth >= 2, got {k}"
        )));
    }
    if k >= report.levels.len() {
        return Err(Error::LevelUnavailable { level: k });
    }
    Ok(report.levels[k].new_states as f64 / report.levels[k - 1].new_states as f64)
}

fn popcount(words: &[u64]) -> u64 {
    words.iter().map(|w| w.count_ones() as u64).sum()
}

fn compact_bfs(
    metric: &Metric,
    max_depth: Option<u32>,
    threads: usize,
) -> Result<Vec<LevelCount>, Error> {
    let table = codec::build_move_table(metric)?;
    let words = (codec::STATE_COUNT as usize).div_ceil(64);

    let mut visited = vec![0u64; words];
    let mut frontier = vec![0u64; words];
    visited[0] |= 1;
    frontier[0] |= 1;

    let mut levels = vec![LevelCount {
        t: 0,
        new_states: 1,
    }];
    let mut depth = 0u32;
    while max_depth.is_none_or(|d| depth < d) {
        let next: Vec<AtomicU64> = (0..words).map(|_| AtomicU64::new(0)).collect();
        let expand = |range: std::ops::Range<usize>| {
            for w in range {
                let mut bits = frontier[w];
                while bits != 0 {
                    let bit = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let index = CompactIndex((w * 64 + bit) as u32);
                    for g in 0..table.generator_count() {
                        let to = table.step(g, index).0 as usize;
                        next[to / 64].fetch_or(1 << (to % 64), Ordering::Relaxed);
                    }
                }
            }
        };
        if threads <= 1 {
            expand(0..words);
        } else {
            let chunk = words.div_ceil(threads);
            std::thread::scope(|scope| {
                for t in 0..threads {
                    let lo = t * chunk;
                    let hi = ((t + 1) * chunk).min(words);
                    let expand = &expand;
                    scope.spawn(move || expand(lo..hi));
                }
            });
        }

        let mut new_frontier = vec![0u64; words];
        for w in 0..words {
            new_frontier[w] = next[w].load(Ordering::Relaxed) & !visited[w];
            visited[w] |= new_frontier[w];
        }
        let count = popcount(&new_frontier);
        if count == 0 {
            break;
        }
        depth += 1;
        levels.push(LevelCount {
            t: depth,
            new_states: count,
        });
        frontier = new_frontier;
    }
    Ok(levels)
}

fn hashed_bfs(
    metric: &Metric,
    max_depth: Option<u32>,
    budget: u64,
) -> Result<(Vec<LevelCount>, bool), Error> {
    match metric.size() {
        2 => hashed_bfs_keyed::<12>(metric, max_depth, budget),
        3 => hashed_bfs_keyed::<27>(metric, max_depth, budget),
        4 => hashed_bfs_keyed::<48>(metric, max_depth, budget),
        5 => hashed_bfs_keyed::<75>(metric, max_depth, budget),
        n => Err(Error::UnsupportedSize(n)),
    }
}

fn packed_key<const K: usize>(cube: &FaceletCube) -> [u8; K] {
    let mut key = [0u8; K];
    for (i, &c) in cube.stickers().iter().enumerate() {
        key[i / 2] |= c << (4 * (i % 2));
    }
    key
}

fn hashed_bfs_keyed<const K: usize>(
    metric: &Metric,
    max_depth: Option<u32>,
    budget: u64,
) -> Result<(Vec<LevelCount>, bool), Error> {
    let solved = FaceletCube::solved(metric.size())?;
    let mut seen: HashSet<[u8; K]> = HashSet::new();
    seen.insert(packed_key(&solved));
    let mut frontier = vec![solved];
    let mut levels = vec![LevelCount {
        t: 0,
        new_states: 1,
    }];

    let mut depth = 0u32;
    while !frontier.is_empty() && max_depth.is_none_or(|d| depth < d) {
        let mut next = Vec::new();
        for state in &frontier {
            for g in metric.generators() {
                let moved = state.apply_unchecked(g);
                if seen.insert(packed_key(&moved)) {
                    next.push(moved);
                }
            }
        }
        if seen.len() as u64 > budget {
            return Err(Error::BudgetExceeded {
                states: seen.len() as f64,
                budget,
            });
        }
        if next.is_empty() {
            return Ok((levels, true));
        }
        depth += 1;
        levels.push(LevelCount {
            t: depth,
            new_states: next.len() as u64,
        });
        frontier = next;
    }
    Ok((levels, frontier.is_empty()))
}
