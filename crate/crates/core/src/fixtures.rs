//! Small hand-built graphs shared by unit tests.

use crate::graph::{Clustering, Graph};

/// Two clusters on 7 vertices: a triangle `{0,1,2}` and a 4-set `{3,4,5,6}`
/// missing the edge (4,6), joined by the single edge (2,3). Nine edges.
pub fn two_cluster_example() -> Graph {
    Graph::from_pairs(
        7,
        [
            (0, 1),
            (0, 2),
            (1, 2),
            (3, 4),
            (3, 5),
            (3, 6),
            (4, 5),
            (5, 6),
            (2, 3),
        ],
    )
    .unwrap()
}

pub fn two_cluster_labels() -> Clustering {
    Clustering::new(vec![0, 0, 0, 1, 1, 1, 1], 2).unwrap()
}
