//! Perfect-rank codec for 2x2x2 states and the per-metric move tables built
//! on top of it.
//!
//! With the front-up-left corner anchored, a 2x2x2 state is a permutation of
//! the seven movable corner blocks plus a twist for each, the last twist
//! fixed by the others. The codec packs this into an integer below
//! `7! * 3^6 = 3,674,160`:
//!
//! ```text
//! index = lehmer_rank(permutation) * 729 + base-3(first six twists, MSB first)
//! ```
//!
//! Movable corners are numbered in lexicographic order of their home
//! coordinates `(x, y, z)` with `-1 < +1` and the anchor at `(-1, +1, +1)`
//! skipped. Twist 0 means the block's up/down-face color sits on the up or
//! down face; each clockwise rotation of the block (seen from outside) adds
//! one.

use crate::cube::{sticker_index, sticker_position, FaceletCube, Generator, Metric};
use crate::error::Error;

pub const MOVABLE_CORNERS: usize = 7;
/// `7! * 3^6`, the number of distinct anchored 2x2x2 states.
pub const STATE_COUNT: u32 = 3_674_160;

const ORI_BASE: u32 = 729; // 3^6

/// Corner directions in frozen order; index 3 is the anchor.
const CORNER_DIRS: [[i32; 3]; 8] = [
    [-1, -1, -1],
    [-1, -1, 1],
    [-1, 1, -1],
    [-1, 1, 1],
    [1, -1, -1],
    [1, -1, 1],
    [1, 1, -1],
    [1, 1, 1],
];
const ANCHOR: usize = 3;

/// Sticker indices of one corner slot in clockwise order seen from outside,
/// starting with the sticker on the up/down face.
fn slot_stickers(dir: [i32; 3]) -> [usize; 3] {
    let [dx, dy, dz] = dir;
    let normals = if dx * dy * dz == 1 {
        [[0, dy, 0], [dx, 0, 0], [0, 0, dz]]
    } else {
        [[0, dy, 0], [0, 0, dz], [dx, 0, 0]]
    };
    normals.map(|nv| {
        let (face, row, col) = sticker_position(2, dir, nv);
        sticker_index(2, face, row, col)
    })
}

fn movable_slots() -> [[usize; 3]; MOVABLE_CORNERS] {
    let mut out = [[0; 3]; MOVABLE_CORNERS];
    let mut m = 0;
    for (i, &dir) in CORNER_DIRS.iter().enumerate() {
        if i != ANCHOR {
            out[m] = slot_stickers(dir);
            m += 1;
        }
    }
    out
}

/// Position and twist of the seven movable corner blocks. `permutation[i]`
/// names the block sitting in movable slot `i`; `orientation[i]` is its
/// twist there.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CornerState {
    pub permutation: [u8; MOVABLE_CORNERS],
    pub orientation: [u8; MOVABLE_CORNERS],
}

impl CornerState {
    pub const SOLVED: CornerState = CornerState {
        permutation: [0, 1, 2, 3, 4, 5, 6],
        orientation: [0; MOVABLE_CORNERS],
    };

    pub fn is_valid(&self) -> bool {
        let mut seen = [false; MOVABLE_CORNERS];
        for &p in &self.permutation {
            if p as usize >= MOVABLE_CORNERS || seen[p as usize] {
                return false;
            }
            seen[p as usize] = true;
        }
        let twist_sum: u8 = self.orientation.iter().sum();
        self.orientation.iter().all(|&o| o < 3) && twist_sum % 3 == 0
    }
}

/// Rank of a 2x2x2 state in `[0, STATE_COUNT)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompactIndex(pub u32);

fn lehmer_rank(perm: &[u8; MOVABLE_CORNERS]) -> u32 {
    let mut rank = 0u32;
    for i in 0..MOVABLE_CORNERS {
        let smaller = perm[i + 1..].iter().filter(|&&x| x < perm[i]).count() as u32;
        rank = rank * (MOVABLE_CORNERS - i) as u32 + smaller;
    }
    rank
}

fn lehmer_unrank(mut rank: u32) -> [u8; MOVABLE_CORNERS] {
    let mut digits = [0u32; MOVABLE_CORNERS];
    for i in (0..MOVABLE_CORNERS).rev() {
        let base = (MOVABLE_CORNERS - i) as u32;
        digits[i] = rank % base;
        rank /= base;
    }
    let mut pool: Vec<u8> = (0..MOVABLE_CORNERS as u8).collect();
    digits.map(|d| pool.remove(d as usize))
}

pub fn encode(state: &CornerState) -> Result<CompactIndex, Error> {
    if !state.is_valid() {
        return Err(Error::InvalidCornerState(
            "permutation not a bijection, or twist sum not divisible by 3".into(),
        ));
    }
    let mut ori = 0u32;
    for &o in &state.orientation[..MOVABLE_CORNERS - 1] {
        ori = ori * 3 + o as u32;
    }
    Ok(CompactIndex(
        lehmer_rank(&state.permutation) * ORI_BASE + ori,
    ))
}

pub fn decode(index: CompactIndex) -> Result<CornerState, Error> {
    if index.0 >= STATE_COUNT {
        return Err(Error::IndexOutOfRange {
            value: index.0 as u64,
            max: STATE_COUNT as u64,
        });
    }
    let permutation = lehmer_unrank(index.0 / ORI_BASE);
    let mut orientation = [0u8; MOVABLE_CORNERS];
    let mut ori = index.0 % ORI_BASE;
    for i in (0..MOVABLE_CORNERS - 1).rev() {
        orientation[i] = (ori % 3) as u8;
        ori /= 3;
    }
    let sum: u8 = orientation.iter().sum();
    orientation[MOVABLE_CORNERS - 1] = (3 - sum % 3) % 3;
    Ok(CornerState {
        permutation,
        orientation,
    })
}

/// Home colors of each movable block in clockwise order starting from its
/// up/down-face color.
fn home_cycles() -> [[u8; 3]; MOVABLE_CORNERS] {
    let solved = FaceletCube::solved(2).expect("n=2 is supported");
    movable_slots().map(|slot| slot.map(|i| solved.stickers()[i]))
}

pub fn corners_from_facelets(cube: &FaceletCube) -> Result<CornerState, Error> {
    if cube.size() != 2 {
        return Err(Error::SizeMismatch {
            expected: 2,
            got: cube.size(),
        });
    }
    let solved = FaceletCube::solved(2).expect("n=2 is supported");
    for &i in &slot_stickers(CORNER_DIRS[ANCHOR]) {
        if cube.stickers()[i] != solved.stickers()[i] {
            return Err(Error::InvalidCornerState(
                "anchor block is not in its home position".into(),
            ));
        }
    }

    let cycles = home_cycles();
    let slots = movable_slots();
    let mut state = CornerState::SOLVED;
    for (i, slot) in slots.iter().enumerate() {
        let colors = slot.map(|s| cube.stickers()[s]);
        let mut sorted = colors;
        sorted.sort_unstable();
        let block = cycles
            .iter()
            .position(|cycle| {
                let mut home = *cycle;
                home.sort_unstable();
                home == sorted
            })
            .ok_or_else(|| {
                Error::InvalidCornerState(format!("no corner block has colors {colors:?}"))
            })?;
        let reference = cycles[block][0]; // the block's up/down color
        let twist = colors
            .iter()
            .position(|&c| c == reference)
            .expect("reference color is in the block's triple");
        state.permutation[i] = block as u8;
        state.orientation[i] = twist as u8;
    }
    if !state.is_valid() {
        return Err(Error::InvalidCornerState(
            "coloring is not a reachable corner arrangement".into(),
        ));
    }
    Ok(state)
}

pub fn corners_to_facelets(state: &CornerState) -> FaceletCube {
    let solved = FaceletCube::solved(2).expect("n=2 is supported");
    let mut stickers = solved.stickers().to_vec();
    let cycles = home_cycles();
    for (i, slot) in movable_slots().iter().enumerate() {
        let cycle = cycles[state.permutation[i] as usize];
        let twist = state.orientation[i] as usize;
        for (j, &color) in cycle.iter().enumerate() {
            stickers[slot[(twist + j) % 3]] = color;
        }
    }
    FaceletCube::from_stickers(2, stickers)
}

/// Action of one generator on corner states: slot `i` receives the block
/// from slot `source[i]`, twisted by `twist[i]`.
#[derive(Debug, Clone, Copy)]
pub struct CornerMove {
    source: [u8; MOVABLE_CORNERS],
    twist: [u8; MOVABLE_CORNERS],
}

impl CornerMove {
    pub fn of(generator: &Generator) -> Result<CornerMove, Error> {
        let solved = FaceletCube::solved(2)?;
        let moved = corners_from_facelets(&solved.apply(generator)?)?;
        Ok(CornerMove {
            source: moved.permutation,
            twist: moved.orientation,
        })
    }

    pub fn apply(&self, state: &CornerState) -> CornerState {
        let mut out = CornerState::SOLVED;
        for i in 0..MOVABLE_CORNERS {
            let s = self.source[i] as usize;
            out.permutation[i] = state.permutation[s];
            out.orientation[i] = (state.orientation[s] + self.twist[i]) % 3;
        }
        out
    }
}

/// Full `CompactIndex -> CompactIndex` mapping for every generator of a
/// 2x2x2 metric.
///
/// Built from two factor tables (permutation ranks and twist coordinates
/// transform independently), then expanded to one flat column per generator
/// so a census step is a single lookup.
pub struct MoveTable {
    names: Vec<String>,
    columns: Vec<Vec<u32>>,
}

pub fn build_move_table(metric: &Metric) -> Result<MoveTable, Error> {
    if metric.size() != 2 {
        return Err(Error::SizeMismatch {
            expected: 2,
            got: metric.size(),
        });
    }
    const PERMS: u32 = 5040; // 7!
    let mut names = Vec::new();
    let mut columns = Vec::new();
    for generator in metric.generators() {
        let mv = CornerMove::of(generator)?;

        let mut perm_map = vec![0u16; PERMS as usize];
        for p in 0..PERMS {
            let arr = lehmer_unrank(p);
            let mut new_arr = [0u8; MOVABLE_CORNERS];
            for i in 0..MOVABLE_CORNERS {
                new_arr[i] = arr[mv.source[i] as usize];
            }
            perm_map[p as usize] = lehmer_rank(&new_arr) as u16;
        }

        let mut ori_map = vec![0u16; ORI_BASE as usize];
        for o in 0..ORI_BASE {
            let mut digits = [0u8; MOVABLE_CORNERS];
            let mut v = o;
            for i in (0..MOVABLE_CORNERS - 1).rev() {
                digits[i] = (v % 3) as u8;
                v /= 3;
            }
            let sum: u8 = digits.iter().sum();
            digits[MOVABLE_CORNERS - 1] = (3 - sum % 3) % 3;
            let mut coord = 0u16;
            for i in 0..MOVABLE_CORNERS - 1 {
                coord = coord * 3 + ((digits[mv.source[i] as usize] + mv.twist[i]) % 3) as u16;
            }
            ori_map[o as usize] = coord;
        }

        let mut column = vec![0u32; STATE_COUNT as usize];
        for index in 0..STATE_COUNT {
            let p = perm_map[(index / ORI_BASE) as usize] as u32;
            let o = ori_map[(index % ORI_BASE) as usize] as u32;
            column[index as usize] = p * ORI_BASE + o;
        }
        names.push(generator.name().to_string());
        columns.push(column);
    }
    Ok(MoveTable { names, columns })
}

impl MoveTable {
    pub fn generator_count(&self) -> usize {
        self.columns.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn step(&self, generator: usize, index: CompactIndex) -> CompactIndex {
        CompactIndex(self.columns[generator][index.0 as usize])
    }

    pub fn column(&self, generator: usize) -> &[u32] {
        &self.columns[generator]
    }

    /// Flat little-endian dump of all columns, for debugging.
    pub fn write_raw<W: std::io::Write>(&self, mut w: W) -> std::io::Result<()> {
        for column in &self.columns {
            for &v in column {
                w.write_all(&v.to_le_bytes())?;
            }
        }
        Ok(())
    }
}

/// Parity of the slot permutation; used by the census parity checks (each
/// quarter turn is a 4-cycle on corner slots, an odd permutation).
pub fn permutation_parity(state: &CornerState) -> u8 {
    let mut seen = [false; MOVABLE_CORNERS];
    let mut transpositions = 0;
    for start in 0..MOVABLE_CORNERS {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = state.permutation[i] as usize;
            len += 1;
        }
        transpositions += len - 1;
    }
    (transpositions % 2) as u8
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::MetricName;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn random_state(rng: &mut impl Rng) -> CornerState {
        let mut state = CornerState::SOLVED;
        state.permutation.shuffle(rng);
        let mut sum = 0u8;
        for i in 0..MOVABLE_CORNERS - 1 {
            state.orientation[i] = rng.gen_range(0..3);
            sum += state.orientation[i];
        }
        state.orientation[MOVABLE_CORNERS - 1] = (3 - sum % 3) % 3;
        state
    }

    #[test]
    fn solved_encodes_to_zero() {
        assert_eq!(encode(&CornerState::SOLVED).unwrap(), CompactIndex(0));
        assert_eq!(decode(CompactIndex(0)).unwrap(), CornerState::SOLVED);
    }

    #[test]
    fn max_index_is_reversed_permutation_with_max_twists() {
        let state = CornerState {
            permutation: [6, 5, 4, 3, 2, 1, 0],
            orientation: [2, 2, 2, 2, 2, 2, 0],
        };
        assert_eq!(encode(&state).unwrap(), CompactIndex(STATE_COUNT - 1));
        assert!(decode(CompactIndex(STATE_COUNT)).is_err());
    }

    #[test]
    fn encode_rejects_bad_twist_sum() {
        let mut state = CornerState::SOLVED;
        state.orientation[0] = 1;
        assert!(encode(&state).is_err());
    }

    #[test]
    fn random_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..10_000 {
            let state = random_state(&mut rng);
            assert_eq!(decode(encode(&state).unwrap()).unwrap(), state);
        }
        for _ in 0..10_000 {
            let index = CompactIndex(rng.gen_range(0..STATE_COUNT));
            let state = decode(index).unwrap();
            assert_eq!(state.orientation.iter().sum::<u8>() % 3, 0);
            assert_eq!(encode(&state).unwrap(), index);
        }
    }

    #[test]
    fn facelet_conversion_round_trips() {
        assert_eq!(
            corners_from_facelets(&FaceletCube::solved(2).unwrap()).unwrap(),
            CornerState::SOLVED
        );
        let metric = Metric::new(MetricName::BiQuarter, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut cube = FaceletCube::solved(2).unwrap();
        for _ in 0..1000 {
            let g = &metric.generators()[rng.gen_range(0..metric.k())];
            cube = cube.apply(g).unwrap();
            let state = corners_from_facelets(&cube).unwrap();
            assert_eq!(corners_to_facelets(&state), cube);
        }
    }

    #[test]
    fn facelet_and_corner_moves_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for name in [
            MetricName::Half,
            MetricName::Quarter,
            MetricName::SemiQuarter,
            MetricName::BiQuarter,
        ] {
            let metric = Metric::new(name, 2).unwrap();
            for g in metric.generators() {
                let mv = CornerMove::of(g).unwrap();
                for _ in 0..200 {
                    let state = random_state(&mut rng);
                    let via_facelets =
                        corners_from_facelets(&corners_to_facelets(&state).apply(g).unwrap())
                            .unwrap();
                    assert_eq!(mv.apply(&state), via_facelets, "generator {}", g.name());
                }
            }
        }
    }

    #[test]
    fn move_table_basics() {
        let metric = Metric::new(MetricName::Half, 2).unwrap();
        let table = build_move_table(&metric).unwrap();
        assert_eq!(table.generator_count(), 9);

        let r = table
            .generator_names()
            .iter()
            .position(|n| n == "R")
            .unwrap();
        let r2 = table
            .generator_names()
            .iter()
            .position(|n| n == "R2")
            .unwrap();
        let r_inv = table
            .generator_names()
            .iter()
            .position(|n| n == "R'")
            .unwrap();

        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let i = CompactIndex(rng.gen_range(0..STATE_COUNT));
            let mut j = i;
            for _ in 0..4 {
                j = table.step(r, j);
            }
            assert_eq!(j, i);
            assert_eq!(table.step(r, table.step(r, i)), table.step(r2, i));
            assert_eq!(table.step(r_inv, table.step(r, i)), i);
        }

        // distinct images of the solved index under all nine generators
        let images: std::collections::HashSet<u32> = (0..table.generator_count())
            .map(|g| table.step(g, CompactIndex(0)).0)
            .collect();
        assert_eq!(images.len(), 9);
    }

    #[test]
    fn move_table_column_is_a_permutation() {
        let metric = Metric::new(MetricName::Quarter, 2).unwrap();
        let table = build_move_table(&metric).unwrap();
        let mut hit = vec![false; STATE_COUNT as usize];
        for &v in table.column(0) {
            assert!(!hit[v as usize], "collision at {v}");
            hit[v as usize] = true;
        }
        assert!(hit.iter().all(|&h| h));
    }

    #[test]
    fn raw_dump_layout() {
        let metric = Metric::new(MetricName::SemiQuarter, 2).unwrap();
        let table = build_move_table(&metric).unwrap();
        let mut buffer = Vec::new();
        table.write_raw(&mut buffer).unwrap();
        assert_eq!(buffer.len(), 3 * STATE_COUNT as usize * 4);
        let first = u32::from_le_bytes(buffer[0..4].try_into().unwrap());
        assert_eq!(first, table.step(0, CompactIndex(0)).0);
    }

    #[test]
    fn quarter_turns_are_odd_permutations() {
        let metric = Metric::new(MetricName::Quarter, 2).unwrap();
        let solved = FaceletCube::solved(2).unwrap();
        for g in metric.generators() {
            let state = corners_from_facelets(&solved.apply(g).unwrap()).unwrap();
            assert_eq!(permutation_parity(&state), 1, "generator {}", g.name());
        }
    }

    #[test]
    fn corners_reject_wrong_size_and_bad_coloring() {
        assert!(corners_from_facelets(&FaceletCube::solved(3).unwrap()).is_err());
        let mut stickers = FaceletCube::solved(2).unwrap().stickers().to_vec();
        stickers[0] = 1; // repaint one sticker
        let broken = FaceletCube::from_stickers(2, stickers);
        assert!(corners_from_facelets(&broken).is_err());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn every_index_round_trips(index in 0u32..STATE_COUNT) {
                let state = decode(CompactIndex(index)).unwrap();
                prop_assert!(state.is_valid());
                prop_assert_eq!(encode(&state).unwrap(), CompactIndex(index));
                prop_assert_eq!(
                    corners_from_facelets(&corners_to_facelets(&state)).unwrap(),
                    state
                );
            }
        }
    }
}
