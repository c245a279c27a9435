//! Published values from the original experiments, used as comparison
//! targets. `NaN` marks cells printed as undefined.

use super::null_study::NullGraph;
use super::stress::StressAxis;

/// One published stress-table cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PublishedCell {
    pub vertices: usize,
    /// Edge count, or total weight for weighted rows.
    pub edges: f64,
    pub k: f64,
    pub k_intra: f64,
    pub k_inter: f64,
    pub phi: f64,
    pub q: f64,
}

const NAN: f64 = f64::NAN;

type Column = (usize, f64, f64, f64, f64, f64, f64);

const fn cell(c: Column) -> PublishedCell {
    PublishedCell {
        vertices: c.0,
        edges: c.1,
        k: c.2,
        k_intra: c.3,
        k_inter: c.4,
        phi: c.5,
        q: c.6,
    }
}

// (N, |E|, K, K_intra, K_inter, Phi, Q) per step 0, .25, .5, .75, 1
const TABLE2_UNWEIGHTED: [Column; 5] = [
    (10_048, 0.0, 0.0, 0.0, 0.0, NAN, NAN),
    (9_725, 77_043.0, 0.0016, 0.2640, 0.0, 0.0, 0.9908),
    (10_374, 173_221.0, 0.0032, 0.4995, 0.0, 0.0, 0.9911),
    (9_490, 224_723.0, 0.0050, 0.7523, 0.0, 0.0, 0.9906),
    (9_700, 313_955.0, 0.0067, 0.9900, 0.0, 0.0, 0.9907),
];
const TABLE2_WEIGHTED: [Column; 5] = [
    (10_048, 0.0, 0.0, 0.0, 0.0, NAN, NAN),
    (9_725, 19_261.0, 0.0004, 0.0660, 0.0, 0.0, 0.9908),
    (10_374, 86_611.0, 0.0016, 0.2497, 0.0, 0.0, 0.9911),
    (9_490, 168_542.0, 0.0037, 0.5642, 0.0, 0.0, 0.9906),
    (9_700, 313_955.0, 0.0067, 0.9900, 0.0, 0.0, 0.9907),
];
const TABLE3_UNWEIGHTED: [Column; 5] = [
    (10_048, 0.0, 0.0, 0.0, 0.0, NAN, NAN),
    (10_048, 12_210_800.0, 0.2419, 0.0, 0.2366, 1.0, -0.0067),
    (10_048, 24_864_800.0, 0.4926, 0.0, 0.4907, 1.0, -0.0067),
    (10_048, 37_291_600.0, 0.7388, 0.0, 0.7336, 1.0, -0.0067),
    (10_048, 50_142_500.0, 0.9934, 0.0, 1.0, 1.0, -0.0067),
];
const TABLE3_WEIGHTED: [Column; 5] = [
    (10_048, 0.0, 0.0, 0.0, 0.0, NAN, NAN),
    (10_048, 3_052_700.0, 0.0605, 0.0, 0.0592, 1.0, -0.0067),
    (10_048, 12_432_400.0, 0.2463, 0.0, 0.2454, 1.0, -0.0067),
    (10_048, 27_968_700.0, 0.5541, 0.0, 0.5502, 1.0, -0.0067),
    (10_048, 50_142_500.0, 0.9934, 0.0, 1.0, 1.0, -0.0067),
];
const TABLE4_UNWEIGHTED: [Column; 5] = [
    (10_048, 50_142_500.0, 0.9934, 0.0, 1.0, 1.0, -0.0067),
    (9_725, 47_052_100.0, 0.9951, 0.2640, 1.0, 0.9974, -0.0050),
    (10_374, 53_631_600.0, 0.9968, 0.4995, 1.0, 0.9952, -0.0033),
    (9_490, 44_950_500.0, 0.9983, 0.7523, 1.0, 0.9922, -0.0018),
    (9_700, 47_040_200.0, 1.0, 0.9900, 1.0, 0.9899, -0.0001),
];
const TABLE4_WEIGHTED: [Column; 5] = [
    (10_048, 50_142_500.0, 0.9934, 0.0, 1.0, 1.0, -0.0067),
    (9_725, 46_994_300.0, 0.9939, 0.0660, 1.0, 0.9994, -0.0062),
    (10_374, 53_545_000.0, 0.9952, 0.2497, 1.0, 0.9976, -0.0049),
    (9_490, 44_894_300.0, 0.9971, 0.5642, 1.0, 0.9941, -0.0030),
    (9_700, 47_040_200.0, 1.0, 0.9900, 1.0, 0.9899, -0.0001),
];
const TABLE5_UNWEIGHTED: [Column; 5] = [
    (9_700, 313_955.0, 0.0067, 0.9900, 0.0, 0.0, 0.9907),
    (9_700, 11_612_400.0, 0.2469, 0.9900, 0.2294, 0.9595, 0.0202),
    (9_700, 23_403_200.0, 0.4975, 0.9900, 0.4842, 0.9798, 0.0066),
    (9_700, 34_964_100.0, 0.7433, 0.9900, 0.7271, 0.9864, 0.0022),
    (9_700, 47_040_200.0, 1.0, 0.9900, 1.0, 0.9899, -0.0001),
];
const TABLE5_WEIGHTED: [Column; 5] = [
    (9_700, 313_955.0, 0.0067, 0.9900, 0.0, 0.0, 0.9907),
    (9_700, 3_138_570.0, 0.0667, 0.9900, 0.0574, 0.8556, 0.0930),
    (9_700, 11_858_600.0, 0.2521, 0.9900, 0.2421, 0.9603, 0.0196),
    (9_700, 26_301_500.0, 0.5591, 0.9900, 0.5453, 0.9820, 0.0051),
    (9_700, 47_040_200.0, 1.0, 0.9900, 1.0, 0.9899, -0.0001),
];

/// The published cell for `axis` at `step`, if `step` is one of the
/// printed grid points (0, .25, .5, .75, 1).
pub fn published_cell(axis: StressAxis, weighted: bool, step: f64) -> Option<PublishedCell> {
    let column = [0.0, 0.25, 0.5, 0.75, 1.0].iter().position(|&s| s == step)?;
    let table = match (axis, weighted) {
        (StressAxis::IntraVariesInter0, false) => &TABLE2_UNWEIGHTED,
        (StressAxis::IntraVariesInter0, true) => &TABLE2_WEIGHTED,
        (StressAxis::InterVariesIntra0, false) => &TABLE3_UNWEIGHTED,
        (StressAxis::InterVariesIntra0, true) => &TABLE3_WEIGHTED,
        (StressAxis::IntraVariesInter100, false) => &TABLE4_UNWEIGHTED,
        (StressAxis::IntraVariesInter100, true) => &TABLE4_WEIGHTED,
        (StressAxis::InterVariesIntra100, false) => &TABLE5_UNWEIGHTED,
        (StressAxis::InterVariesIntra100, true) => &TABLE5_WEIGHTED,
    };
    Some(cell(table[column]))
}

/// One published row of the null-distribution study.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PublishedNull {
    pub graph: NullGraph,
    pub runs: usize,
    pub clusters: usize,
    pub mean: f64,
    pub std: f64,
}

const fn null_row(graph: NullGraph, runs: usize, clusters: usize, mean: f64, std: f64) -> PublishedNull {
    PublishedNull {
        graph,
        runs,
        clusters,
        mean,
        std,
    }
}

pub const PUBLISHED_NULL: [PublishedNull; 12] = [
    null_row(NullGraph::ErdosRenyi, 35, 12, -0.0005, 0.0023),
    null_row(NullGraph::ErdosRenyi, 100, 12, -0.0001, 0.0026),
    null_row(NullGraph::ErdosRenyi, 1000, 12, 0.0000, 0.0025),
    null_row(NullGraph::ErdosRenyi, 35, 24, 0.0010, 0.0030),
    null_row(NullGraph::ErdosRenyi, 100, 24, 0.0001, 0.0035),
    null_row(NullGraph::ErdosRenyi, 1000, 24, 0.0001, 0.0034),
    null_row(NullGraph::Caveman, 35, 12, -0.0002, 0.0016),
    null_row(NullGraph::Caveman, 100, 12, 0.0001, 0.0015),
    null_row(NullGraph::Caveman, 1000, 12, 0.0000, 0.0015),
    null_row(NullGraph::Caveman, 35, 24, -0.0004, 0.0024),
    null_row(NullGraph::Caveman, 100, 24, 0.0001, 0.0023),
    null_row(NullGraph::Caveman, 1000, 24, -0.0001, 0.0022),
];

pub fn published_null(graph: NullGraph, clusters: usize, runs: usize) -> Option<PublishedNull> {
    PUBLISHED_NULL
        .iter()
        .copied()
        .find(|r| r.graph == graph && r.clusters == clusters && r.runs == runs)
}
