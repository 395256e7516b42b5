//! Reference values for the regression presets: every cell of the published
//! per-step tables I through XI, the summary table XII, and the completion
//! probabilities and unseen counts quoted alongside them.
//!
//! Each table binds the inputs its numbers were produced with. All tables
//! use the two-decimal branching ratio. Tables V and VI carry one and two
//! extra seed rows: their source chains demonstrably fed the printed S(4)
//! (and S(5)) values into the growth step rather than the occupancy-law
//! values, so reproducing their cells requires seeding through those rows
//! (witness: printed C(5) = r * printed S(4) in both).

use cubediam::cube::MetricName;

/// One golden cell. `Seed` cells must match exactly; estimated cells are
/// compared within 0.5% of the configuration count, whether the source
/// printed them as absolute counts or in units of N.
#[derive(Debug, Clone, Copy)]
pub enum Cell {
    Seed(u64),
    Abs(f64),
    Scaled(f64),
}

#[derive(Debug, Clone, Copy)]
pub struct Row {
    pub t: u32,
    pub s: Cell,
    pub c: Cell,
    pub tcum: Cell,
}

pub struct TableSpec {
    pub id: &'static str,
    pub title: &'static str,
    pub n: u8,
    pub metric: MetricName,
    /// Seed levels the table's own chain used.
    pub seeds: &'static [u64],
    /// Branching ratio as printed (two decimals), measured from the shallow
    /// exact levels.
    pub r: f64,
    pub expected_diameter: u32,
    pub rows: &'static [Row],
    /// Quoted completion probabilities `(t, Pr)`.
    pub completion: &'static [(u32, f64)],
    /// Quoted expected unseen counts `(t, count)`.
    pub unseen: &'static [(u32, f64)],
}

/// Tolerance for estimated cells, in units of the configuration count.
pub const CELL_TOLERANCE_OVER_N: f64 = 0.005;
/// Tolerances for the quoted probabilities (absolute) and unseen counts
/// (relative).
pub const PROBABILITY_TOLERANCE: f64 = 0.005;
pub const UNSEEN_RELATIVE_TOLERANCE: f64 = 0.10;

const fn sd(v: u64) -> Cell {
    Cell::Seed(v)
}
const fn ab(v: f64) -> Cell {
    Cell::Abs(v)
}
const fn sc(v: f64) -> Cell {
    Cell::Scaled(v)
}
const fn row(t: u32, s: Cell, c: Cell, tcum: Cell) -> Row {
    Row { t, s, c, tcum }
}

pub const TABLE_I: TableSpec = TableSpec {
    id: "I",
    title: "2x2x2 half-turn",
    n: 2,
    metric: MetricName::Half,
    seeds: &[1, 9, 54, 321],
    r: 5.94,
    expected_diameter: 12,
    rows: &[
        row(0, sd(1), sd(1), ab(1.0)),
        row(1, sd(9), sd(9), ab(10.0)),
        row(2, sd(54), sd(54), ab(64.0)),
        row(3, sd(321), sd(321), ab(385.0)),
        row(4, sc(0.001), sc(0.001), sc(0.001)),
        row(5, sc(0.003), sc(0.003), sc(0.004)),
        row(6, sc(0.018), sc(0.018), sc(0.022)),
        row(7, sc(0.102), sc(0.108), sc(0.130)),
        row(8, sc(0.454), sc(0.606), sc(0.735)),
        row(9, sc(0.933), sc(2.699), sc(3.435)),
        row(10, sc(0.996), sc(5.540), sc(8.975)),
        row(11, sc(0.997), sc(5.917), sc(14.892)),
        row(12, sc(0.997), sc(5.924), sc(20.816)),
    ],
    completion: &[(11, 0.286), (12, 0.997)],
    unseen: &[(11, 1.3), (12, 0.003)],
};

/// The quoted chain for this table is internally inconsistent from t = 9 on
/// (its own printed C(9)/S(8) is 4.55 against r = 4.44), so the later
/// cumulative cells sit up to 0.107 N away from any faithful evaluation of
/// the growth/occupancy recurrence. Kept verbatim; the comparison reports
/// the deviations honestly.
pub const TABLE_II: TableSpec = TableSpec {
    id: "II",
    title: "2x2x2 quarter-turn",
    n: 2,
    metric: MetricName::Quarter,
    seeds: &[1, 6, 27, 120],
    r: 4.44,
    expected_diameter: 14,
    rows: &[
        row(0, sd(1), sd(1), ab(1.0)),
        row(1, sd(6), sd(6), ab(7.0)),
        row(2, sd(27), sd(27), ab(34.0)),
        row(3, sd(120), sd(120), ab(154.0)),
        row(4, ab(533.0), ab(533.0), ab(687.0)),
        row(5, sc(0.001), sc(0.001), sc(0.001)),
        row(6, sc(0.003), sc(0.003), sc(0.004)),
        row(7, sc(0.013), sc(0.013), sc(0.016)),
        row(8, sc(0.055), sc(0.056), sc(0.073)),
        row(9, sc(0.221), sc(0.250), sc(0.323)),
        row(10, sc(0.626), sc(0.983), sc(1.306)),
        row(11, sc(0.938), sc(2.778), sc(4.084)),
        row(12, sc(0.984), sc(4.164), sc(8.248)),
        row(13, sc(0.987), sc(4.371), sc(12.619)),
        row(14, sc(0.988), sc(4.384), sc(17.003)),
        row(15, sc(0.988), sc(4.385), sc(21.388)),
    ],
    completion: &[(13, 5e-6), (14, 0.859), (15, 0.998)],
    unseen: &[(13, 12.0), (14, 0.15), (15, 0.002)],
};

pub const TABLE_III: TableSpec = TableSpec {
    id: "III",
    title: "2x2x2 semi-quarter-turn",
    n: 2,
    metric: MetricName::SemiQuarter,
    seeds: &[1, 3, 9, 27, 78, 216],
    r: 2.77,
    expected_diameter: 21,
    rows: &[
        row(0, sd(1), sd(1), ab(1.0)),
        row(1, sd(3), sd(3), ab(4.0)),
        row(2, sd(9), sd(9), ab(13.0)),
        row(3, sd(27), sd(27), ab(40.0)),
        row(4, sd(78), sd(78), ab(118.0)),
        row(5, sd(216), sd(216), ab(334.0)),
        row(6, ab(583.0), ab(583.0), ab(917.0)),
        row(7, ab(1546.0), ab(1546.0), ab(2463.0)),
        row(8, sc(0.001), sc(0.001), sc(0.002)),
        row(9, sc(0.003), sc(0.003), sc(0.005)),
        row(10, sc(0.010), sc(0.010), sc(0.015)),
        row(11, sc(0.026), sc(0.026), sc(0.041)),
        row(12, sc(0.070), sc(0.072), sc(0.113)),
        row(13, sc(0.175), sc(0.193), sc(0.306)),
        row(14, sc(0.384), sc(0.485), sc(0.791)),
        row(15, sc(0.655), sc(1.065), sc(1.856)),
        row(16, sc(0.837), sc(1.815), sc(3.671)),
        row(17, sc(0.902), sc(2.319), sc(5.990)),
        row(18, sc(0.918), sc(2.498), sc(8.488)),
        row(19, sc(0.921), sc(2.542), sc(11.030)),
        row(20, sc(0.922), sc(2.552), sc(13.582)),
        row(21, sc(0.922), sc(2.554), sc(16.136)),
        row(22, sc(0.922), sc(2.555), sc(18.691)),
    ],
    completion: &[(20, 0.0097), (21, 0.697), (22, 0.972)],
    unseen: &[(20, 4.6), (21, 0.36), (22, 0.03)],
};

pub const TABLE_IV: TableSpec = TableSpec {
    id: "IV",
    title: "2x2x2 bi-quarter-turn",
    n: 2,
    metric: MetricName::BiQuarter,
    seeds: &[1, 15, 144, 1324],
    r: 9.19,
    expected_diameter: 9,
    rows: &[
        row(0, sd(1), sd(1), ab(1.0)),
        row(1, sd(15), sd(15), ab(16.0)),
        row(2, sd(144), sd(144), ab(160.0)),
        row(3, sd(1324), sd(1324), ab(1484.0)),
        row(4, sc(0.003), sc(0.003), sc(0.004)),
        row(5, sc(0.030), sc(0.030), sc(0.034)),
        row(6, sc(0.240), sc(0.275), sc(0.309)),
        row(7, sc(0.890), sc(2.210), sc(2.519)),
        row(8, sc(1.000), sc(8.182), sc(10.700)),
        row(9, sc(1.000), sc(9.187), sc(19.888)),
        row(10, sc(1.000), sc(9.189), sc(29.077)),
        row(11, sc(1.000), sc(9.189), sc(38.266)),
    ],
    completion: &[(9, 0.992), (10, 0.999999)],
    unseen: &[(9, 0.008)],
};

pub const TABLE_V: TableSpec = TableSpec {
    id: "V",
    title: "3x3x3 half-turn",
    n: 3,
    metric: MetricName::Half,
    // The source chain grew from its externally counted S(4) = 43217 (its
    // printed C(5) is r * 43217), so that row is a seed here.
    seeds: &[1, 18, 243, 3240, 43217],
    r: 13.33,
    expected_diameter: 22,
    rows: &[
        row(0, sd(1), sd(1), ab(1.0)),
        row(1, sd(18), sd(18), ab(19.0)),
        row(2, sd(243), sd(243), ab(262.0)),
        row(3, sd(3240), sd(3240), ab(3502.0)),
        row(4, sd(43217), ab(43189.0), ab(46691.0)),
        row(5, ab(576232.0), ab(576088.0), ab(622780.0)),
        row(6, ab(7683099.0), ab(7681178.0), ab(8303957.0)),
        row(7, ab(102415704.0), ab(102415704.0), ab(110719662.0)),
        row(8, ab(1365200187.0), ab(1365201339.0), ab(1475921001.0)),
        row(9, ab(1.820e10), ab(1.820e10), ab(1.967e10)),
        row(10, ab(2.426e11), ab(2.426e11), ab(2.623e11)),
        row(11, ab(3.234e12), ab(3.234e12), ab(3.496e12)),
        row(12, ab(4.310e13), ab(4.310e13), ab(4.660e13)),
        row(13, ab(5.746e14), ab(5.746e14), ab(6.212e14)),
        row(14, sc(0.0002), sc(0.0002), sc(0.0002)),
        row(15, sc(0.0024), sc(0.0024), sc(0.0026)),
        row(16, sc(0.0309), sc(0.0314), sc(0.0340)),
        row(17, sc(0.3379), sc(0.4124), sc(0.4464)),
        row(18, sc(0.9889), sc(4.5046), sc(4.9510)),
        row(19, sc(1.0000), sc(13.1826), sc(18.1336)),
        row(20, sc(1.0000), sc(13.3300), sc(31.4635)),
        row(21, sc(1.0000), sc(13.3300), sc(44.7935)),
        row(22, sc(1.0000), sc(13.3300), sc(58.1235)),
    ],
    completion: &[(21, 0.218), (22, 0.999998)],
    unseen: &[(21, 1.5), (22, 2e-6)],
};

pub const TABLE_VI: TableSpec = TableSpec {
    id: "VI",
    title: "3x3x3 quarter-turn",
    n: 3,
    metric: MetricName::Quarter,
    // Grown from the externally counted S(4) and S(5) rows, like table V.
    seeds: &[1, 12, 114, 1068, 9604, 91237],
    r: 9.37,
    expected_diameter: 26,
    rows: &[
        row(0, sd(1), sd(1), ab(1.0)),
        row(1, sd(12), sd(12), ab(13.0)),
        row(2, sd(114), sd(114), ab(127.0)),
        row(3, sd(1068), sd(1068), ab(1195.0)),
        row(4, sd(9604), ab(10007.0), ab(11202.0)),
        row(5, sd(91237), ab(89988.0), ab(101190.0)),
        row(6, ab(854745.0), ab(854889.0), ab(956079.0)),
        row(7, ab(8009630.0), ab(8008958.0), ab(8965037.0)),
        row(8, ab(75049468.0), ab(75050236.0), ab(84015273.0)),
        row(9, ab(703214807.0), ab(703213511.0), ab(787228784.0)),
        row(10, ab(6589121400.0), ab(6589122744.0), ab(7376351528.0)),
        row(11, ab(6.174e10), ab(6.174e10), ab(6.912e10)),
        row(12, ab(5.785e11), ab(5.785e11), ab(6.476e11)),
        row(13, ab(5.421e12), ab(5.421e12), ab(6.068e12)),
        row(14, ab(5.079e13), ab(5.079e13), ab(5.686e13)),
        row(15, ab(4.759e14), ab(4.759e14), ab(5.328e14)),
        row(16, sc(0.0001), sc(0.0001), sc(0.0001)),
        row(17, sc(0.0010), sc(0.0010), sc(0.0011)),
        row(18, sc(0.0090), sc(0.0090), sc(0.0101)),
        row(19, sc(0.0809), sc(0.0844), sc(0.0945)),
        row(20, sc(0.5315), sc(0.7583), sc(0.8528)),
        row(21, sc(0.9931), sc(4.9804), sc(5.8332)),
        row(22, sc(0.9999), sc(9.3056), sc(15.1388)),
        row(23, sc(0.9999), sc(9.3691), sc(24.5079)),
        row(24, sc(0.9999), sc(9.3692), sc(33.8771)),
        row(25, sc(0.9999), sc(9.3692), sc(43.2463)),
        row(26, sc(0.9999), sc(9.3692), sc(52.6155)),
    ],
    completion: &[(25, 8e-4), (26, 0.9994)],
    unseen: &[(25, 7.2), (26, 6e-4)],
};

pub const TABLE_VII: TableSpec = TableSpec {
    id: "VII",
    title: "3x3x3 square-turn",
    n: 3,
    metric: MetricName::Square,
    seeds: &[1, 6, 27, 120],
    r: 4.44,
    expected_diameter: 13,
    rows: &[
        row(0, sd(1), sd(1), ab(1.0)),
        row(1, sd(6), sd(6), ab(7.0)),
        row(2, sd(27), sd(27), ab(34.0)),
        row(3, sd(120), sd(120), ab(154.0)),
        row(4, sc(0.0008), sc(0.0008), sc(0.0010)),
        row(5, sc(0.0036), sc(0.0036), sc(0.0046)),
        row(6, sc(0.0157), sc(0.0158), sc(0.0204)),
        row(7, sc(0.0672), sc(0.0696), sc(0.0900)),
        row(8, sc(0.2580), sc(0.2984), sc(0.3884)),
        row(9, sc(0.6820), sc(1.1456), sc(1.5340)),
        row(10, sc(0.9516), sc(3.0279), sc(4.5618)),
        row(11, sc(0.9854), sc(4.2250), sc(8.7869)),
        row(12, sc(0.9874), sc(4.3751), sc(13.1619)),
        row(13, sc(0.9875), sc(4.3841), sc(17.5460)),
        row(14, sc(0.9875), sc(4.3846), sc(21.9307)),
        row(15, sc(0.9875), sc(4.3846), sc(26.3153)),
    ],
    completion: &[(12, 0.279), (13, 0.984)],
    unseen: &[(12, 1.3), (13, 0.016)],
};

pub const TABLE_VIII: TableSpec = TableSpec {
    id: "VIII",
    title: "4x4x4 half-turn",
    n: 4,
    metric: MetricName::Half,
    seeds: &[1, 27, 567, 11721],
    r: 20.67,
    expected_diameter: 41,
    rows: &[
        row(0, sd(1), sd(1), ab(1.0)),
        row(1, sd(27), sd(27), ab(28.0)),
        row(2, sd(567), sd(567), ab(595.0)),
        row(3, sd(11721), sd(11721), ab(12316.0)),
        row(4, ab(242273.0), ab(242273.0), ab(254589.0)),
        row(5, ab(5007784.0), ab(5007784.0), ab(5262373.0)),
        row(6, ab(103510903.0), ab(103510903.0), ab(108773276.0)),
        row(7, ab(2139570358.0), ab(2139570358.0), ab(2248343634.0)),
        row(8, ab(44224919298.0), ab(44224919298.0), ab(46473262932.0)),
        row(32, sc(0.0002), sc(0.0002), sc(0.0002)),
        row(33, sc(0.0046), sc(0.0046), sc(0.0048)),
        row(34, sc(0.0899), sc(0.0942), sc(0.0990)),
        row(35, sc(0.8442), sc(1.8590), sc(1.9581)),
        row(36, sc(1.0000), sc(17.4491), sc(19.4072)),
        row(37, sc(1.0000), sc(20.6700), sc(40.0772)),
        row(38, sc(1.0000), sc(20.6700), sc(60.7472)),
        row(39, sc(1.0000), sc(20.6700), sc(81.4172)),
        row(40, sc(1.0000), sc(20.6700), sc(102.0872)),
        row(41, sc(1.0000), sc(20.6700), sc(122.7572)),
    ],
    completion: &[(40, 1e-15), (41, 1.0)],
    unseen: &[(40, 34.0), (41, 4e-8)],
};

pub const TABLE_IX: TableSpec = TableSpec {
    id: "IX",
    title: "4x4x4 quarter-turn",
    n: 4,
    metric: MetricName::Quarter,
    seeds: &[1, 18, 261, 3732],
    r: 14.30,
    expected_diameter: 48,
    rows: &[
        row(0, sd(1), sd(1), ab(1.0)),
        row(1, sd(18), sd(18), ab(19.0)),
        row(2, sd(261), sd(261), ab(280.0)),
        row(3, sd(3732), sd(3732), ab(4012.0)),
        row(4, ab(53368.0), ab(53368.0), ab(57380.0)),
        row(5, ab(763157.0), ab(763157.0), ab(820536.0)),
        row(6, ab(10913141.0), ab(10913141.0), ab(11733677.0)),
        row(7, ab(156057909.0), ab(156057909.0), ab(167791586.0)),
        row(8, ab(2231628106.0), ab(2231628106.0), ab(2399419692.0)),
        row(9, ab(31912281912.0), ab(31912281912.0), ab(34311701604.0)),
        row(36, sc(0.0001), sc(0.0001), sc(0.0001)),
        row(37, sc(0.0010), sc(0.0010), sc(0.0010)),
        row(38, sc(0.0137), sc(0.0138), sc(0.0148)),
        row(39, sc(0.1777), sc(0.1957), sc(0.2105)),
        row(40, sc(0.9213), sc(2.5417), sc(2.7522)),
        row(41, sc(1.0000), sc(13.1741), sc(15.9264)),
        row(42, sc(1.0000), sc(14.3000), sc(30.2264)),
        row(43, sc(1.0000), sc(14.3000), sc(44.5263)),
        row(44, sc(1.0000), sc(14.3000), sc(58.8263)),
        row(45, sc(1.0000), sc(14.3000), sc(73.1263)),
        row(46, sc(1.0000), sc(14.3000), sc(87.4263)),
        row(47, sc(1.0000), sc(14.3000), sc(101.7263)),
        row(48, sc(1.0000), sc(14.3000), sc(116.0263)),
    ],
    completion: &[(47, 5e-22), (48, 0.99997)],
    unseen: &[(47, 49.0), (48, 3e-5)],
};

pub const TABLE_X: TableSpec = TableSpec {
    id: "X",
    title: "5x5x5 half-turn",
    n: 5,
    metric: MetricName::Half,
    seeds: &[1, 36, 1026, 28812],
    r: 28.08,
    expected_diameter: 58,
    rows: &[
        row(0, sd(1), sd(1), ab(1.0)),
        row(1, sd(36), sd(36), ab(37.0)),
        row(2, sd(1026), sd(1026), ab(1063.0)),
        row(3, sd(28812), sd(28812), ab(29875.0)),
        row(4, ab(809041.0), ab(809041.0), ab(838916.0)),
        row(5, ab(22717870.0), ab(22717870.0), ab(23556786.0)),
        row(6, ab(637917794.0), ab(637917794.0), ab(661474580.0)),
        row(7, ab(17912731656.0), ab(17912731656.0), ab(18574206236.0)),
        row(49, sc(0.0004), sc(0.0004), sc(0.0004)),
        row(50, sc(0.0120), sc(0.0121), sc(0.0125)),
        row(51, sc(0.2864), sc(0.3374), sc(0.3499)),
        row(52, sc(0.9997), sc(8.0413), sc(8.3912)),
        row(53, sc(1.0000), sc(28.0710), sc(36.4621)),
        row(54, sc(1.0000), sc(28.0800), sc(64.5421)),
        row(55, sc(1.0000), sc(28.0800), sc(92.6221)),
        row(56, sc(1.0000), sc(28.0800), sc(120.7021)),
        row(57, sc(1.0000), sc(28.0800), sc(148.7821)),
        row(58, sc(1.0000), sc(28.0800), sc(176.8621)),
    ],
    completion: &[(57, 0.0), (58, 0.996)],
    unseen: &[(57, 7e9), (58, 0.004)],
};

pub const TABLE_XI: TableSpec = TableSpec {
    id: "XI",
    title: "5x5x5 quarter-turn",
    n: 5,
    metric: MetricName::Quarter,
    seeds: &[1, 24, 468, 9000],
    r: 19.23,
    expected_diameter: 68,
    rows: &[
        row(0, sd(1), sd(1), ab(1.0)),
        row(1, sd(24), sd(24), ab(25.0)),
        row(2, sd(468), sd(468), ab(493.0)),
        row(3, sd(9000), sd(9000), ab(9493.0)),
        row(4, ab(173070.0), ab(173070.0), ab(182563.0)),
        row(5, ab(3328136.0), ab(3328136.0), ab(3510699.0)),
        row(6, ab(64000057.0), ab(64000057.0), ab(67510756.0)),
        row(7, ab(1230721100.0), ab(1230721100.0), ab(1298231856.0)),
        row(8, ab(23666766753.0), ab(23666766753.0), ab(24964998610.0)),
        row(
            9,
            ab(455111924665.0),
            ab(455111924665.0),
            ab(480076923275.0),
        ),
        row(55, sc(0.0002), sc(0.0002), sc(0.0002)),
        row(56, sc(0.0036), sc(0.0036), sc(0.0038)),
        row(57, sc(0.0663), sc(0.0686), sc(0.0724)),
        row(58, sc(0.7207), sc(1.2755), sc(1.3479)),
        row(59, sc(1.0000), sc(13.8593), sc(15.2072)),
        row(60, sc(1.0000), sc(19.2300), sc(34.4371)),
        row(61, sc(1.0000), sc(19.2300), sc(53.6671)),
        row(62, sc(1.0000), sc(19.2300), sc(72.8971)),
        row(63, sc(1.0000), sc(19.2300), sc(92.1271)),
        row(64, sc(1.0000), sc(19.2300), sc(111.3571)),
        row(65, sc(1.0000), sc(19.2300), sc(130.5871)),
        row(66, sc(1.0000), sc(19.2300), sc(149.8171)),
        row(67, sc(1.0000), sc(19.2300), sc(169.0471)),
        row(68, sc(1.0000), sc(19.2300), sc(188.2771)),
    ],
    completion: &[(67, 2e-5), (68, 1.0)],
    unseen: &[(67, 11.0), (68, 5e-8)],
};

pub const STEP_TABLES: [&TableSpec; 11] = [
    &TABLE_I,
    &TABLE_II,
    &TABLE_III,
    &TABLE_IV,
    &TABLE_V,
    &TABLE_VI,
    &TABLE_VII,
    &TABLE_VIII,
    &TABLE_IX,
    &TABLE_X,
    &TABLE_XI,
];

pub fn step_table(id: &str) -> Option<&'static TableSpec> {
    STEP_TABLES.iter().find(|t| t.id == id).copied()
}

/// One row of the summary table (XII): branching ratio as printed, the known
/// diameter where one exists, the recurrence prediction, and the closed
/// form. The 3x3x3 half/quarter diameters are literature values; the
/// enumerable ones are reproduced by the census commands.
pub struct SummaryRow {
    pub n: u8,
    pub metric: MetricName,
    pub r: f64,
    pub actual: Option<u32>,
    pub predicted: u32,
    pub closed_form: f64,
}

pub const SUMMARY_ID: &str = "XII";
pub const CLOSED_FORM_TOLERANCE: f64 = 0.1;

pub const SUMMARY: [SummaryRow; 11] = [
    SummaryRow {
        n: 2,
        metric: MetricName::Half,
        r: 5.94,
        actual: Some(11),
        predicted: 12,
        closed_form: 11.0,
    },
    SummaryRow {
        n: 2,
        metric: MetricName::Quarter,
        r: 4.44,
        actual: Some(14),
        predicted: 14,
        closed_form: 13.5,
    },
    SummaryRow {
        n: 2,
        metric: MetricName::SemiQuarter,
        r: 2.77,
        actual: Some(19),
        predicted: 21,
        closed_form: 20.3,
    },
    SummaryRow {
        n: 2,
        metric: MetricName::BiQuarter,
        r: 9.19,
        actual: Some(10),
        predicted: 9,
        closed_form: 8.5,
    },
    SummaryRow {
        n: 3,
        metric: MetricName::Half,
        r: 13.33,
        actual: Some(20),
        predicted: 22,
        closed_form: 20.8,
    },
    SummaryRow {
        n: 3,
        metric: MetricName::Quarter,
        r: 9.37,
        actual: Some(26),
        predicted: 26,
        closed_form: 25.0,
    },
    SummaryRow {
        n: 3,
        metric: MetricName::Square,
        r: 4.44,
        actual: Some(15),
        predicted: 13,
        closed_form: 12.0,
    },
    SummaryRow {
        n: 4,
        metric: MetricName::Half,
        r: 20.67,
        actual: None,
        predicted: 41,
        closed_form: 40.0,
    },
    SummaryRow {
        n: 4,
        metric: MetricName::Quarter,
        r: 14.30,
        actual: None,
        predicted: 48,
        closed_form: 47.1,
    },
    SummaryRow {
        n: 5,
        metric: MetricName::Half,
        r: 28.08,
        actual: None,
        predicted: 58,
        closed_form: 57.5,
    },
    SummaryRow {
        n: 5,
        metric: MetricName::Quarter,
        r: 19.23,
        actual: None,
        predicted: 68,
        closed_form: 66.9,
    },
];

/// Figure bindings: per-step new-configuration series, actual (when the
/// space is enumerable) against predicted. Figures 6 and 7 take their
/// actual series from an external file if one is supplied.
pub struct FigureSpec {
    pub id: u32,
    pub table: &'static TableSpec,
    /// Whether the actual series is enumerable here.
    pub census_actual: bool,
}

pub const FIGURES: [FigureSpec; 7] = [
    FigureSpec {
        id: 1,
        table: &TABLE_I,
        census_actual: true,
    },
    FigureSpec {
        id: 2,
        table: &TABLE_II,
        census_actual: true,
    },
    FigureSpec {
        id: 3,
        table: &TABLE_III,
        census_actual: true,
    },
    FigureSpec {
        id: 4,
        table: &TABLE_IV,
        census_actual: true,
    },
    FigureSpec {
        id: 5,
        table: &TABLE_VII,
        census_actual: true,
    },
    FigureSpec {
        id: 6,
        table: &TABLE_V,
        census_actual: false,
    },
    FigureSpec {
        id: 7,
        table: &TABLE_VI,
        census_actual: false,
    },
];

pub fn figure(id: u32) -> Option<&'static FigureSpec> {
    FIGURES.iter().find(|f| f.id == id)
}
