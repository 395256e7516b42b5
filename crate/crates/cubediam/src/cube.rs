//! Sticker-level cube model: states, layer turns, generators and metrics.
//!
//! The sticker layout is frozen so that state keys are reproducible across
//! runs and implementations:
//!
//! * Faces are indexed `R=0, L=1, U=2, D=3, F=4, B=5` and a sticker at
//!   `(face, row, col)` lives at flat index `face * n^2 + row * n + col`.
//! * Rows run top to bottom and columns left to right as each face is viewed
//!   from outside the cube, with `U` viewed with `B` at the top and `D`
//!   viewed with `F` at the top (the usual unfolded-cross layout).
//! * Colors are labelled by home face, so the solved cube has sticker value
//!   `f` everywhere on face `f`.
//!
//! Internally the model works in doubled integer coordinates: cubie centers
//! sit at odd coordinates in `[-(n-1), n-1]` and sticker centers push the
//! normal coordinate out to `+-n`. A quarter turn is then an exact integer
//! rotation, which keeps the whole model free of case-by-case cycle tables.

use crate::error::Error;
use std::fmt;

pub const MIN_SIZE: u8 = 2;
pub const MAX_SIZE: u8 = 5;

/// Face labels in Singmaster notation. The discriminant is the face index
/// used in the sticker layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Face {
    R = 0,
    L = 1,
    U = 2,
    D = 3,
    F = 4,
    B = 5,
}

pub const FACES: [Face; 6] = [Face::R, Face::L, Face::U, Face::D, Face::F, Face::B];

impl Face {
    pub fn letter(self) -> char {
        match self {
            Face::R => 'R',
            Face::L => 'L',
            Face::U => 'U',
            Face::D => 'D',
            Face::F => 'F',
            Face::B => 'B',
        }
    }

    pub fn from_letter(c: char) -> Option<Face> {
        Some(match c {
            'R' => Face::R,
            'L' => Face::L,
            'U' => Face::U,
            'D' => Face::D,
            'F' => Face::F,
            'B' => Face::B,
            _ => return None,
        })
    }

    pub fn axis(self) -> Axis {
        match self {
            Face::R | Face::L => Axis::X,
            Face::U | Face::D => Axis::Y,
            Face::F | Face::B => Axis::Z,
        }
    }

    /// +1 for the face on the positive side of its axis, -1 otherwise.
    pub fn sign(self) -> i32 {
        match self {
            Face::R | Face::U | Face::F => 1,
            Face::L | Face::D | Face::B => -1,
        }
    }

    fn normal(self) -> [i32; 3] {
        let mut v = [0; 3];
        v[self.axis() as usize] = self.sign();
        v
    }

    fn from_normal(v: [i32; 3]) -> Face {
        match v {
            [1, 0, 0] => Face::R,
            [-1, 0, 0] => Face::L,
            [0, 1, 0] => Face::U,
            [0, -1, 0] => Face::D,
            [0, 0, 1] => Face::F,
            [0, 0, -1] => Face::B,
            _ => unreachable!("not a unit normal: {v:?}"),
        }
    }
}

/// The three rotation axes; `X` points toward `R`, `Y` toward `U`, `Z`
/// toward `F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X = 0,
    Y = 1,
    Z = 2,
}

/// One clockwise quarter turn about `+axis`, as seen looking down the axis
/// from the positive side.
fn rotate(p: [i32; 3], axis: Axis) -> [i32; 3] {
    let [x, y, z] = p;
    match axis {
        Axis::X => [x, z, -y],
        Axis::Y => [-z, y, x],
        Axis::Z => [y, -x, z],
    }
}

/// Rotation of a single layer: `quarter_twists` clockwise quarter turns as
/// seen from the positive face of `axis`, applied to the slab of cubies
/// whose `axis` coordinate equals `layer`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LayerTurn {
    pub axis: Axis,
    /// Layer index in `[0, n)`, counted from the negative side of the axis.
    pub layer: u8,
    /// In `{1, 2, 3}`; 3 is the inverse quarter turn.
    pub quarter_twists: u8,
}

fn doubled(n: u8, i: u8) -> i32 {
    2 * i as i32 + 1 - n as i32
}

/// Center of the cubie carrying sticker `(face, row, col)` plus the sticker's
/// outward normal, in doubled coordinates.
fn sticker_geometry(n: u8, face: Face, row: u8, col: u8) -> ([i32; 3], [i32; 3]) {
    let m = n as i32 - 1;
    let d = |i: u8| doubled(n, i);
    let rd = |i: u8| m - 2 * i as i32;
    let c = match face {
        Face::F => [d(col), rd(row), m],
        Face::B => [rd(col), rd(row), -m],
        Face::R => [m, rd(row), rd(col)],
        Face::L => [-m, rd(row), d(col)],
        Face::U => [d(col), m, d(row)],
        Face::D => [d(col), -m, rd(row)],
    };
    (c, face.normal())
}

pub(crate) fn sticker_position(n: u8, c: [i32; 3], normal: [i32; 3]) -> (Face, u8, u8) {
    let face = Face::from_normal(normal);
    let ni = n as i32;
    let inv = |v: i32| ((v - 1 + ni) / 2) as u8;
    let rinv = |v: i32| ((ni - 1 - v) / 2) as u8;
    let [x, y, z] = c;
    match face {
        Face::F => (face, rinv(y), inv(x)),
        Face::B => (face, rinv(y), rinv(x)),
        Face::R => (face, rinv(y), rinv(z)),
        Face::L => (face, rinv(y), inv(z)),
        Face::U => (face, inv(z), inv(x)),
        Face::D => (face, rinv(z), inv(x)),
    }
}

pub fn sticker_index(n: u8, face: Face, row: u8, col: u8) -> usize {
    let nn = n as usize * n as usize;
    face as usize * nn + row as usize * n as usize + col as usize
}

/// Sticker permutation of one layer turn: `new[perm[i]] = old[i]`.
fn turn_permutation(n: u8, turn: LayerTurn) -> Vec<u16> {
    let count = 6 * n as usize * n as usize;
    let coord = doubled(n, turn.layer);
    let mut perm: Vec<u16> = (0..count as u16).collect();
    for face in FACES {
        for row in 0..n {
            for col in 0..n {
                let (mut c, mut normal) = sticker_geometry(n, face, row, col);
                if c[turn.axis as usize] != coord {
                    continue;
                }
                for _ in 0..turn.quarter_twists % 4 {
                    c = rotate(c, turn.axis);
                    normal = rotate(normal, turn.axis);
                }
                let (f2, r2, c2) = sticker_position(n, c, normal);
                perm[sticker_index(n, face, row, col)] = sticker_index(n, f2, r2, c2) as u16;
            }
        }
    }
    perm
}

/// Sticker-level state of an `n x n x n` cube. Values are immutable; `apply`
/// returns a new state.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FaceletCube {
    n: u8,
    stickers: Vec<u8>,
}

impl FaceletCube {
    pub fn solved(n: u8) -> Result<FaceletCube, Error> {
        if !(MIN_SIZE..=MAX_SIZE).contains(&n) {
            return Err(Error::UnsupportedSize(n));
        }
        let nn = n as usize * n as usize;
        let stickers = (0..6u8).flat_map(|f| std::iter::repeat_n(f, nn)).collect();
        Ok(FaceletCube { n, stickers })
    }

    pub(crate) fn from_stickers(n: u8, stickers: Vec<u8>) -> FaceletCube {
        debug_assert_eq!(stickers.len(), 6 * n as usize * n as usize);
        FaceletCube { n, stickers }
    }

    pub fn size(&self) -> u8 {
        self.n
    }

    pub fn stickers(&self) -> &[u8] {
        &self.stickers
    }

    pub fn sticker(&self, face: Face, row: u8, col: u8) -> u8 {
        self.stickers[sticker_index(self.n, face, row, col)]
    }

    pub fn is_solved(&self) -> bool {
        let nn = self.n as usize * self.n as usize;
        self.stickers
            .chunks_exact(nn)
            .enumerate()
            .all(|(f, chunk)| chunk.iter().all(|&c| c == f as u8))
    }

    pub fn color_counts(&self) -> [usize; 6] {
        let mut counts = [0; 6];
        for &c in &self.stickers {
            counts[c as usize] += 1;
        }
        counts
    }

    pub fn apply(&self, g: &Generator) -> Result<FaceletCube, Error> {
        if g.n != self.n {
            return Err(Error::SizeMismatch {
                expected: g.n,
                got: self.n,
            });
        }
        let mut out = vec![0u8; self.stickers.len()];
        for (i, &v) in self.stickers.iter().enumerate() {
            out[g.perm[i] as usize] = v;
        }
        Ok(FaceletCube {
            n: self.n,
            stickers: out,
        })
    }

    pub(crate) fn apply_unchecked(&self, g: &Generator) -> FaceletCube {
        debug_assert_eq!(g.n, self.n);
        let mut out = vec![0u8; self.stickers.len()];
        for (i, &v) in self.stickers.iter().enumerate() {
            out[g.perm[i] as usize] = v;
        }
        FaceletCube {
            n: self.n,
            stickers: out,
        }
    }

    /// Canonical byte key: sticker colors in layout order, packed two per
    /// byte. Equal states give equal keys and distinct states distinct ones.
    pub fn state_key(&self) -> Vec<u8> {
        let mut key = vec![0u8; self.stickers.len().div_ceil(2)];
        for (i, &c) in self.stickers.iter().enumerate() {
            key[i / 2] |= c << (4 * (i % 2));
        }
        key
    }
}

/// A named move of a metric: one layer turn, or two applied in sequence for
/// the compound bi-quarter moves. The sticker permutation is precomputed.
#[derive(Debug, Clone)]
pub struct Generator {
    name: String,
    turns: Vec<LayerTurn>,
    n: u8,
    perm: Vec<u16>,
}

impl Generator {
    pub fn new(name: impl Into<String>, n: u8, turns: Vec<LayerTurn>) -> Result<Generator, Error> {
        if !(MIN_SIZE..=MAX_SIZE).contains(&n) {
            return Err(Error::UnsupportedSize(n));
        }
        assert!(
            (1..=2).contains(&turns.len()),
            "a generator is one layer turn or a compound of two"
        );
        for t in &turns {
            assert!(t.layer < n && t.quarter_twists % 4 != 0);
        }
        let mut perm = turn_permutation(n, turns[0]);
        for t in &turns[1..] {
            let next = turn_permutation(n, *t);
            // apply `perm` then `next`
            perm = perm.iter().map(|&i| next[i as usize]).collect();
        }
        Ok(Generator {
            name: name.into(),
            turns,
            n,
            perm,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn turns(&self) -> &[LayerTurn] {
        &self.turns
    }

    pub fn size(&self) -> u8 {
        self.n
    }

    /// Precomputed sticker permutation of this move: applying the generator
    /// sends the sticker at flat index `i` to index `perm[i]`.
    pub fn sticker_permutation(&self) -> &[u16] {
        &self.perm
    }

    /// Builds the face-relative turn `face_i^k`: `i` is the 1-based layer
    /// counted from `face`, `k` the clockwise quarter twists as seen from
    /// that face (so `k = 3` is the inverse).
    pub fn face_turn(
        n: u8,
        face: Face,
        layer_from_face: u8,
        clockwise_quarters: u8,
    ) -> Result<Generator, Error> {
        let turn = face_layer_turn(n, face, layer_from_face, clockwise_quarters)?;
        Generator::new(
            turn_name(face, layer_from_face, clockwise_quarters),
            n,
            vec![turn],
        )
    }
}

fn face_layer_turn(
    n: u8,
    face: Face,
    layer_from_face: u8,
    clockwise_quarters: u8,
) -> Result<LayerTurn, Error> {
    if layer_from_face == 0 || layer_from_face > n || !(1..=3).contains(&clockwise_quarters) {
        return Err(Error::ParseGenerator(format!(
            "invalid layer turn {}_{layer_from_face}^{clockwise_quarters} for n={n}",
            face.letter()
        )));
    }
    let layer = if face.sign() > 0 {
        n - layer_from_face
    } else {
        layer_from_face - 1
    };
    let quarter_twists = if face.sign() > 0 {
        clockwise_quarters
    } else {
        4 - clockwise_quarters
    };
    Ok(LayerTurn {
        axis: face.axis(),
        layer,
        quarter_twists,
    })
}

fn turn_name(face: Face, layer_from_face: u8, clockwise_quarters: u8) -> String {
    let mut s = String::new();
    s.push(face.letter());
    if layer_from_face > 1 {
        s.push('_');
        s.push_str(&layer_from_face.to_string());
    }
    match clockwise_quarters {
        1 => {}
        2 => s.push('2'),
        3 => s.push('\''),
        _ => unreachable!(),
    }
    s
}

/// Parses one or two concatenated turn tokens in the extended Singmaster
/// grammar: `FACE ('_' LAYER)? ("'" | "2")?`, e.g. `R`, `R'`, `R2`, `R_2`,
/// `R_3'`, `RD`, `B'R'`.
pub fn parse_generator(name: &str, n: u8) -> Result<Generator, Error> {
    let tokens = tokenize_turns(name)
        .ok_or_else(|| Error::ParseGenerator(format!("cannot parse generator name {name:?}")))?;
    let mut turns = Vec::new();
    for (face, layer, quarters) in &tokens {
        turns.push(face_layer_turn(n, *face, *layer, *quarters)?);
    }
    Generator::new(name, n, turns)
}

fn tokenize_turns(name: &str) -> Option<Vec<(Face, u8, u8)>> {
    let chars: Vec<char> = name.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let face = Face::from_letter(chars[i])?;
        i += 1;
        let mut layer = 1u8;
        if i < chars.len() && chars[i] == '_' {
            layer = chars.get(i + 1)?.to_digit(10)? as u8;
            i += 2;
        }
        let mut quarters = 1u8;
        if i < chars.len() && (chars[i] == '\'' || chars[i] == '2') {
            quarters = if chars[i] == '\'' { 3 } else { 2 };
            i += 1;
        }
        out.push((face, layer, quarters));
    }
    if out.is_empty() || out.len() > 2 {
        return None;
    }
    Some(out)
}

/// The move sets studied here, each defining one graph over cube states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MetricName {
    Half,
    Quarter,
    SemiQuarter,
    BiQuarter,
    Square,
}

impl MetricName {
    pub const ALL: [MetricName; 5] = [
        MetricName::Half,
        MetricName::Quarter,
        MetricName::SemiQuarter,
        MetricName::BiQuarter,
        MetricName::Square,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MetricName::Half => "half",
            MetricName::Quarter => "quarter",
            MetricName::SemiQuarter => "semi-quarter",
            MetricName::BiQuarter => "bi-quarter",
            MetricName::Square => "square",
        }
    }
}

impl fmt::Display for MetricName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for MetricName {
    type Err = Error;

    fn from_str(s: &str) -> Result<MetricName, Error> {
        Ok(match s {
            "half" => MetricName::Half,
            "quarter" => MetricName::Quarter,
            "semi-quarter" => MetricName::SemiQuarter,
            "bi-quarter" => MetricName::BiQuarter,
            "square" => MetricName::Square,
            _ => return Err(Error::ParseGenerator(format!("unknown metric {s:?}"))),
        })
    }
}

/// A metric: the generator set whose moves all count cost 1.
#[derive(Debug, Clone)]
pub struct Metric {
    name: MetricName,
    n: u8,
    generators: Vec<Generator>,
}

impl Metric {
    /// Builds the generator list for `(name, n)`.
    ///
    /// The orientation anchor is realized by restricting which layers may
    /// turn: for even `n` the front-up-left corner block never moves (only
    /// the `R`-, `D`- and `B`-side layers turn), and for odd `n` the central
    /// slice of each axis never turns.
    pub fn new(name: MetricName, n: u8) -> Result<Metric, Error> {
        if !(MIN_SIZE..=MAX_SIZE).contains(&n) {
            return Err(Error::UnsupportedSize(n));
        }
        let defined = match name {
            MetricName::Half | MetricName::Quarter => true,
            MetricName::SemiQuarter | MetricName::BiQuarter => n == 2,
            MetricName::Square => n == 3,
        };
        if !defined {
            return Err(Error::UndefinedMetric { name, n });
        }

        let (faces, layers): (&[Face], std::ops::RangeInclusive<u8>) = if n % 2 == 0 {
            (&[Face::R, Face::D, Face::B], 1..=(n - 1))
        } else {
            (&FACES, 1..=(n / 2))
        };

        let quarters: &[u8] = match name {
            MetricName::Half | MetricName::BiQuarter => &[1, 2, 3],
            MetricName::Quarter => &[1, 3],
            MetricName::SemiQuarter => &[1],
            MetricName::Square => &[2],
        };

        let mut generators = Vec::new();
        for &face in faces {
            for layer in layers.clone() {
                for &k in quarters {
                    generators.push(Generator::face_turn(n, face, layer, k)?);
                }
            }
        }
        if name == MetricName::BiQuarter {
            for (a, b) in [(Face::R, Face::D), (Face::D, Face::B), (Face::B, Face::R)] {
                for k in [1u8, 3] {
                    let name = format!("{}{}", turn_name(a, 1, k), turn_name(b, 1, k));
                    let turns = vec![face_layer_turn(n, a, 1, k)?, face_layer_turn(n, b, 1, k)?];
                    generators.push(Generator::new(name, n, turns)?);
                }
            }
        }
        Ok(Metric {
            name,
            n,
            generators,
        })
    }

    pub fn name(&self) -> MetricName {
        self.name
    }

    pub fn size(&self) -> u8 {
        self.n
    }

    pub fn k(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<&Generator> {
        self.generators.iter().find(|g| g.name() == name)
    }
}
