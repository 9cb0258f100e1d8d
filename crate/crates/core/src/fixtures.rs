//! Shared test fixtures: the small algebras and diagrams used by worked
//! examples across the unit tests.

use crate::bead::{DynamicalCocycle, XModuleStructure};
use crate::diagram::{DiagramFormat, LinkDiagram};
use crate::rack::RackTable;

pub(crate) fn two_element_rack() -> RackTable {
    RackTable::from_rows(&[vec![2, 2], vec![1, 1]]).unwrap()
}

/// The 6×6 block cocycle on beads {1,2,3} over the 2-element rack.
pub(crate) fn six_block_cocycle() -> DynamicalCocycle {
    DynamicalCocycle::from_block_rows(
        2,
        3,
        &[
            vec![3, 1, 2, 2, 1, 3],
            vec![1, 2, 3, 3, 2, 1],
            vec![2, 3, 1, 1, 3, 2],
            vec![2, 1, 3, 3, 1, 2],
            vec![3, 2, 1, 1, 2, 3],
            vec![1, 3, 2, 2, 3, 1],
        ],
    )
    .unwrap()
}

/// The 9×9 block cocycle on beads {1,2,3} over the dihedral quandle of
/// order 3.
pub(crate) fn nine_block_cocycle() -> DynamicalCocycle {
    DynamicalCocycle::from_block_rows(
        3,
        3,
        &[
            vec![1, 3, 2, 3, 2, 1, 1, 3, 2],
            vec![3, 2, 1, 2, 1, 3, 3, 2, 1],
            vec![2, 1, 3, 1, 3, 2, 2, 1, 3],
            vec![3, 2, 1, 1, 3, 2, 2, 1, 3],
            vec![2, 1, 3, 3, 2, 1, 1, 3, 2],
            vec![1, 3, 2, 2, 1, 3, 3, 2, 1],
            vec![1, 3, 2, 2, 1, 3, 1, 3, 2],
            vec![3, 2, 1, 1, 3, 2, 3, 2, 1],
            vec![2, 1, 3, 3, 2, 1, 2, 1, 3],
        ],
    )
    .unwrap()
}

/// The X-module structure [T|S] = [[1,1|1,2],[1,1|2,1]] over Z_3.
pub(crate) fn example_module() -> XModuleStructure {
    XModuleStructure::new(2, 3, vec![1, 1, 1, 1], vec![1, 2, 2, 1]).unwrap()
}

/// The positive Hopf link in the corpus arc numbering.
pub(crate) fn hopf_positive() -> LinkDiagram {
    LinkDiagram::parse("C + 2 3 1 4\nC + 4 1 3 2\nK 1 2\nK 3 4\n", DiagramFormat::Native).unwrap()
}

pub(crate) fn unknot() -> LinkDiagram {
    LinkDiagram::parse("K 1\n", DiagramFormat::Native).unwrap()
}

pub(crate) fn trefoil_pd() -> LinkDiagram {
    LinkDiagram::parse("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", DiagramFormat::Pd).unwrap()
}
