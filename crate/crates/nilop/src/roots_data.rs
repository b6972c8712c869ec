//! The printed root table, transcribed verbatim from the typeset source.
//! One hundred twenty rows; every derived column is recomputed by the
//! crate and diffed against this data. Generated by tools/parse_root_table.py.

use crate::roots::{LineType, PrintedRow};
use crate::triangle::Slope;

#[rustfmt::skip]
pub const PRINTED_ROWS: [PrintedRow; 120] = [
    PrintedRow { index: 1, e8: [0, 0, 0, 0, 0, 0, 1, 0], xi: [0, 0, 0, 0, 0, 1, 0, 0], uwb: (0, 1, 0), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 2, e8: [0, 0, 0, 0, 0, 1, 0, 0], xi: [0, 0, 0, 0, 1, 0, 0, 0], uwb: (0, 1, 0), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 3, e8: [0, 0, 0, 0, 1, 0, 0, 0], xi: [0, 0, 0, 1, 0, 0, 0, 0], uwb: (0, 1, 0), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 4, e8: [0, 0, 0, 1, 0, 0, 0, 0], xi: [0, 0, 1, 0, 0, 0, 0, 1], uwb: (1, 0, 1), phi: Slope::Finite(1, 2), line_type: LineType::HalfLineLong, radii: Some((2, 3)) },
    PrintedRow { index: 5, e8: [0, 0, 1, 0, 0, 0, 0, 0], xi: [0, 0, 0, 0, 0, 0, 0, -1], uwb: (-1, 1, 0), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 6, e8: [0, 1, 0, 0, 0, 0, 0, 0], xi: [0, 1, 0, 0, 0, 0, 0, 0], uwb: (0, 1, 0), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 7, e8: [1, 0, 0, 0, 0, 0, 0, 0], xi: [1, 0, 0, 0, 0, 0, 0, 0], uwb: (1, 0, 0), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 8, e8: [0, 0, 0, 0, 0, 0, 0, 1], xi: [0, 0, 0, 0, 0, 0, 1, 1], uwb: (2, -2, 0), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 9, e8: [0, 0, 0, 0, 0, 1, 1, 0], xi: [0, 0, 0, 0, 1, 1, 0, 0], uwb: (0, 2, 0), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 10, e8: [0, 0, 0, 0, 1, 1, 0, 0], xi: [0, 0, 0, 1, 1, 0, 0, 0], uwb: (0, 2, 0), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 11, e8: [0, 0, 0, 1, 1, 0, 0, 0], xi: [0, 0, 1, 1, 0, 0, 0, 1], uwb: (1, 1, 1), phi: Slope::Finite(1, 1), line_type: LineType::DiagonalLong, radii: Some((1, 2)) },
    PrintedRow { index: 12, e8: [0, 0, 1, 1, 0, 0, 0, 0], xi: [0, 0, 1, 0, 0, 0, 0, 0], uwb: (0, 1, 1), phi: Slope::Finite(2, 1), line_type: LineType::HalfLineLong, radii: Some((2, 3)) },
    PrintedRow { index: 13, e8: [0, 1, 1, 0, 0, 0, 0, 0], xi: [0, 1, 0, 0, 0, 0, 0, -1], uwb: (-1, 2, 0), phi: Slope::Finite(-1, 2), line_type: LineType::DiagonalLong, radii: Some((1, 2)) },
    PrintedRow { index: 14, e8: [0, 0, 1, 0, 0, 0, 0, 1], xi: [0, 0, 0, 0, 0, 0, 1, 0], uwb: (1, -1, 0), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 15, e8: [1, 1, 0, 0, 0, 0, 0, 0], xi: [1, 1, 0, 0, 0, 0, 0, 0], uwb: (1, 1, 0), phi: Slope::Finite(1, 1), line_type: LineType::DiagonalShort, radii: Some((2, 1)) },
    PrintedRow { index: 16, e8: [0, 0, 0, 0, 1, 1, 1, 0], xi: [0, 0, 0, 1, 1, 1, 0, 0], uwb: (0, 3, 0), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((3, 3)) },
    PrintedRow { index: 17, e8: [0, 0, 0, 1, 1, 1, 0, 0], xi: [0, 0, 1, 1, 1, 0, 0, 1], uwb: (1, 2, 1), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 18, e8: [0, 0, 1, 1, 1, 0, 0, 0], xi: [0, 0, 1, 1, 0, 0, 0, 0], uwb: (0, 2, 1), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 19, e8: [0, 1, 1, 1, 0, 0, 0, 0], xi: [0, 1, 1, 0, 0, 0, 0, 0], uwb: (0, 2, 1), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 20, e8: [1, 1, 1, 0, 0, 0, 0, 0], xi: [1, 1, 0, 0, 0, 0, 0, -1], uwb: (0, 2, 0), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 21, e8: [0, 0, 1, 1, 0, 0, 0, 1], xi: [0, 0, 1, 0, 0, 0, 1, 1], uwb: (2, -1, 1), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((3, 3)) },
    PrintedRow { index: 22, e8: [0, 1, 1, 0, 0, 0, 0, 1], xi: [0, 1, 0, 0, 0, 0, 1, 0], uwb: (1, 0, 0), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 23, e8: [0, 1, 1, 1, 0, 0, 0, 1], xi: [0, 1, 1, 0, 0, 0, 1, 1], uwb: (2, 0, 1), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 24, e8: [0, 0, 0, 1, 1, 1, 1, 0], xi: [0, 0, 1, 1, 1, 1, 0, 1], uwb: (1, 3, 1), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 25, e8: [0, 0, 1, 1, 1, 1, 0, 0], xi: [0, 0, 1, 1, 1, 0, 0, 0], uwb: (0, 3, 1), phi: Slope::Finite(-2, 1), line_type: LineType::DiagonalShort, radii: Some((2, 1)) },
    PrintedRow { index: 26, e8: [0, 1, 1, 1, 1, 0, 0, 0], xi: [0, 1, 1, 1, 0, 0, 0, 0], uwb: (0, 3, 1), phi: Slope::Finite(-2, 1), line_type: LineType::DiagonalShort, radii: Some((2, 1)) },
    PrintedRow { index: 27, e8: [0, 0, 1, 1, 1, 0, 0, 1], xi: [0, 0, 1, 1, 0, 0, 1, 1], uwb: (2, 0, 1), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 28, e8: [1, 1, 1, 1, 0, 0, 0, 0], xi: [1, 1, 1, 0, 0, 0, 0, 0], uwb: (1, 2, 1), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 29, e8: [1, 1, 1, 0, 0, 0, 0, 1], xi: [1, 1, 0, 0, 0, 0, 1, 0], uwb: (2, 0, 0), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 30, e8: [0, 1, 1, 1, 1, 0, 0, 1], xi: [0, 1, 1, 1, 0, 0, 1, 1], uwb: (2, 1, 1), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 31, e8: [0, 0, 1, 1, 1, 1, 1, 0], xi: [0, 0, 1, 1, 1, 1, 0, 0], uwb: (0, 4, 1), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 32, e8: [0, 1, 1, 1, 1, 1, 0, 0], xi: [0, 1, 1, 1, 1, 0, 0, 0], uwb: (0, 4, 1), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 33, e8: [0, 0, 1, 1, 1, 1, 0, 1], xi: [0, 0, 1, 1, 1, 0, 1, 1], uwb: (2, 1, 1), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 34, e8: [0, 1, 2, 1, 0, 0, 0, 1], xi: [0, 1, 1, 0, 0, 0, 1, 0], uwb: (1, 1, 1), phi: Slope::Finite(1, 1), line_type: LineType::DiagonalLong, radii: Some((1, 2)) },
    PrintedRow { index: 35, e8: [1, 1, 1, 1, 1, 0, 0, 0], xi: [1, 1, 1, 1, 0, 0, 0, 0], uwb: (1, 3, 1), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 36, e8: [1, 1, 1, 1, 0, 0, 0, 1], xi: [1, 1, 1, 0, 0, 0, 1, 1], uwb: (3, 0, 1), phi: Slope::Finite(-1, 2), line_type: LineType::DiagonalShort, radii: Some((2, 1)) },
    PrintedRow { index: 37, e8: [1, 1, 1, 1, 1, 0, 0, 1], xi: [1, 1, 1, 1, 0, 0, 1, 1], uwb: (3, 1, 1), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 38, e8: [0, 1, 1, 1, 1, 1, 1, 0], xi: [0, 1, 1, 1, 1, 1, 0, 0], uwb: (0, 5, 1), phi: Slope::Finite(-2, 3), line_type: LineType::HalfLineLong, radii: Some((2, 3)) },
    PrintedRow { index: 39, e8: [0, 0, 1, 1, 1, 1, 1, 1], xi: [0, 0, 1, 1, 1, 1, 1, 1], uwb: (2, 2, 1), phi: Slope::Central, line_type: LineType::Central, radii: None },
    PrintedRow { index: 40, e8: [1, 1, 1, 1, 1, 1, 0, 0], xi: [1, 1, 1, 1, 1, 0, 0, 0], uwb: (1, 4, 1), phi: Slope::Finite(-1, 2), line_type: LineType::DiagonalLong, radii: Some((1, 2)) },
    PrintedRow { index: 41, e8: [0, 1, 1, 1, 1, 1, 0, 1], xi: [0, 1, 1, 1, 1, 0, 1, 1], uwb: (2, 2, 1), phi: Slope::Central, line_type: LineType::Central, radii: None },
    PrintedRow { index: 42, e8: [0, 1, 2, 1, 1, 0, 0, 1], xi: [0, 1, 1, 1, 0, 0, 1, 0], uwb: (1, 2, 1), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 43, e8: [1, 1, 2, 1, 0, 0, 0, 1], xi: [1, 1, 1, 0, 0, 0, 1, 0], uwb: (2, 1, 1), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 44, e8: [1, 1, 1, 1, 1, 1, 0, 1], xi: [1, 1, 1, 1, 1, 0, 1, 1], uwb: (3, 2, 1), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 45, e8: [1, 1, 1, 1, 1, 1, 1, 0], xi: [1, 1, 1, 1, 1, 1, 0, 0], uwb: (1, 5, 1), phi: Slope::Finite(-1, 3), line_type: LineType::HalfLineLong, radii: Some((2, 3)) },
    PrintedRow { index: 46, e8: [1, 1, 2, 1, 1, 0, 0, 1], xi: [1, 1, 1, 1, 0, 0, 1, 0], uwb: (2, 2, 1), phi: Slope::Central, line_type: LineType::Central, radii: None },
    PrintedRow { index: 47, e8: [0, 1, 2, 2, 1, 0, 0, 1], xi: [0, 1, 2, 1, 0, 0, 1, 1], uwb: (2, 2, 2), phi: Slope::Finite(1, 1), line_type: LineType::DiagonalLong, radii: Some((2, 4)) },
    PrintedRow { index: 48, e8: [0, 1, 1, 1, 1, 1, 1, 1], xi: [0, 1, 1, 1, 1, 1, 1, 1], uwb: (2, 3, 1), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 49, e8: [0, 1, 2, 1, 1, 1, 0, 1], xi: [0, 1, 1, 1, 1, 0, 1, 0], uwb: (1, 3, 1), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 50, e8: [1, 2, 2, 1, 0, 0, 0, 1], xi: [1, 2, 1, 0, 0, 0, 1, 0], uwb: (2, 2, 1), phi: Slope::Central, line_type: LineType::Central, radii: None },
    PrintedRow { index: 51, e8: [0, 1, 2, 1, 1, 1, 1, 1], xi: [0, 1, 1, 1, 1, 1, 1, 0], uwb: (1, 4, 1), phi: Slope::Finite(-1, 2), line_type: LineType::DiagonalLong, radii: Some((1, 2)) },
    PrintedRow { index: 52, e8: [0, 1, 2, 2, 1, 1, 0, 1], xi: [0, 1, 2, 1, 1, 0, 1, 1], uwb: (2, 3, 2), phi: Slope::Finite(2, 1), line_type: LineType::HalfLineLong, radii: Some((2, 3)) },
    PrintedRow { index: 53, e8: [1, 1, 1, 1, 1, 1, 1, 1], xi: [1, 1, 1, 1, 1, 1, 1, 1], uwb: (3, 3, 1), phi: Slope::Finite(1, 1), line_type: LineType::DiagonalShort, radii: Some((2, 1)) },
    PrintedRow { index: 54, e8: [1, 1, 2, 1, 1, 1, 0, 1], xi: [1, 1, 1, 1, 1, 0, 1, 0], uwb: (2, 3, 1), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 55, e8: [1, 2, 2, 1, 1, 0, 0, 1], xi: [1, 2, 1, 1, 0, 0, 1, 0], uwb: (2, 3, 1), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 56, e8: [1, 1, 2, 2, 1, 0, 0, 1], xi: [1, 1, 2, 1, 0, 0, 1, 1], uwb: (3, 2, 2), phi: Slope::Finite(1, 2), line_type: LineType::HalfLineLong, radii: Some((2, 3)) },
    PrintedRow { index: 57, e8: [0, 1, 2, 2, 1, 1, 1, 1], xi: [0, 1, 2, 1, 1, 1, 1, 1], uwb: (2, 4, 2), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 58, e8: [0, 1, 2, 2, 2, 1, 0, 1], xi: [0, 1, 2, 2, 1, 0, 1, 1], uwb: (2, 4, 2), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 59, e8: [1, 2, 2, 2, 1, 0, 0, 1], xi: [1, 2, 2, 1, 0, 0, 1, 1], uwb: (3, 3, 2), phi: Slope::Finite(1, 1), line_type: LineType::DiagonalLong, radii: Some((1, 2)) },
    PrintedRow { index: 60, e8: [1, 1, 2, 2, 1, 1, 0, 1], xi: [1, 1, 2, 1, 1, 0, 1, 1], uwb: (3, 3, 2), phi: Slope::Finite(1, 1), line_type: LineType::DiagonalLong, radii: Some((1, 2)) },
    PrintedRow { index: 61, e8: [1, 1, 2, 1, 1, 1, 1, 1], xi: [1, 1, 1, 1, 1, 1, 1, 0], uwb: (2, 4, 1), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 62, e8: [1, 2, 2, 1, 1, 1, 0, 1], xi: [1, 2, 1, 1, 1, 0, 1, 0], uwb: (2, 4, 1), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 63, e8: [1, 2, 2, 1, 1, 1, 1, 1], xi: [1, 2, 1, 1, 1, 1, 1, 0], uwb: (2, 5, 1), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((3, 3)) },
    PrintedRow { index: 64, e8: [0, 1, 2, 2, 2, 1, 1, 1], xi: [0, 1, 2, 2, 1, 1, 1, 1], uwb: (2, 5, 2), phi: Slope::Finite(-2, 1), line_type: LineType::DiagonalShort, radii: Some((2, 1)) },
    PrintedRow { index: 65, e8: [1, 1, 2, 2, 1, 1, 1, 1], xi: [1, 1, 2, 1, 1, 1, 1, 1], uwb: (3, 4, 2), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 66, e8: [1, 2, 2, 2, 1, 1, 0, 1], xi: [1, 2, 2, 1, 1, 0, 1, 1], uwb: (3, 4, 2), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 67, e8: [1, 1, 2, 2, 2, 1, 0, 1], xi: [1, 1, 2, 2, 1, 0, 1, 1], uwb: (3, 4, 2), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 68, e8: [1, 2, 3, 2, 1, 0, 0, 1], xi: [1, 2, 2, 1, 0, 0, 1, 0], uwb: (2, 4, 2), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 69, e8: [0, 1, 2, 2, 2, 2, 1, 1], xi: [0, 1, 2, 2, 2, 1, 1, 1], uwb: (2, 6, 2), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 70, e8: [1, 2, 3, 2, 1, 1, 0, 1], xi: [1, 2, 2, 1, 1, 0, 1, 0], uwb: (2, 5, 2), phi: Slope::Finite(-2, 1), line_type: LineType::DiagonalShort, radii: Some((2, 1)) },
    PrintedRow { index: 71, e8: [1, 1, 2, 2, 2, 1, 1, 1], xi: [1, 1, 2, 2, 1, 1, 1, 1], uwb: (3, 5, 2), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 72, e8: [1, 2, 2, 2, 2, 1, 0, 1], xi: [1, 2, 2, 2, 1, 0, 1, 1], uwb: (3, 5, 2), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 73, e8: [1, 2, 2, 2, 1, 1, 1, 1], xi: [1, 2, 2, 1, 1, 1, 1, 1], uwb: (3, 5, 2), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 74, e8: [1, 2, 3, 2, 1, 0, 0, 2], xi: [1, 2, 2, 1, 0, 0, 2, 1], uwb: (4, 2, 2), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 75, e8: [1, 2, 2, 2, 2, 1, 1, 1], xi: [1, 2, 2, 2, 1, 1, 1, 1], uwb: (3, 6, 2), phi: Slope::Finite(-1, 2), line_type: LineType::DiagonalLong, radii: Some((1, 2)) },
    PrintedRow { index: 76, e8: [1, 2, 3, 2, 1, 1, 1, 1], xi: [1, 2, 2, 1, 1, 1, 1, 0], uwb: (2, 6, 2), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 77, e8: [1, 1, 2, 2, 2, 2, 1, 1], xi: [1, 1, 2, 2, 2, 1, 1, 1], uwb: (3, 6, 2), phi: Slope::Finite(-1, 2), line_type: LineType::DiagonalLong, radii: Some((1, 2)) },
    PrintedRow { index: 78, e8: [1, 2, 3, 2, 2, 1, 0, 1], xi: [1, 2, 2, 2, 1, 0, 1, 0], uwb: (2, 6, 2), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 79, e8: [1, 2, 3, 2, 1, 1, 0, 2], xi: [1, 2, 2, 1, 1, 0, 2, 1], uwb: (4, 3, 2), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 80, e8: [1, 2, 3, 3, 2, 1, 0, 1], xi: [1, 2, 3, 2, 1, 0, 1, 1], uwb: (3, 6, 3), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((3, 3)) },
    PrintedRow { index: 81, e8: [1, 2, 2, 2, 2, 2, 1, 1], xi: [1, 2, 2, 2, 2, 1, 1, 1], uwb: (3, 7, 2), phi: Slope::Finite(-1, 3), line_type: LineType::HalfLineLong, radii: Some((2, 3)) },
    PrintedRow { index: 82, e8: [1, 2, 3, 2, 2, 1, 0, 2], xi: [1, 2, 2, 2, 1, 0, 2, 1], uwb: (4, 4, 2), phi: Slope::Central, line_type: LineType::Central, radii: None },
    PrintedRow { index: 83, e8: [1, 2, 3, 2, 2, 1, 1, 1], xi: [1, 2, 2, 2, 1, 1, 1, 0], uwb: (2, 7, 2), phi: Slope::Finite(-2, 3), line_type: LineType::HalfLineLong, radii: Some((2, 3)) },
    PrintedRow { index: 84, e8: [1, 2, 3, 2, 1, 1, 1, 2], xi: [1, 2, 2, 1, 1, 1, 2, 1], uwb: (4, 4, 2), phi: Slope::Central, line_type: LineType::Central, radii: None },
    PrintedRow { index: 85, e8: [1, 2, 3, 3, 2, 1, 0, 2], xi: [1, 2, 3, 2, 1, 0, 2, 2], uwb: (5, 4, 3), phi: Slope::Finite(1, 2), line_type: LineType::HalfLineLong, radii: Some((2, 3)) },
    PrintedRow { index: 86, e8: [1, 2, 3, 3, 2, 1, 1, 1], xi: [1, 2, 3, 2, 1, 1, 1, 1], uwb: (3, 7, 3), phi: Slope::Finite(-3, 1), line_type: LineType::HalfLineShort, radii: Some((3, 2)) },
    PrintedRow { index: 87, e8: [1, 2, 3, 2, 2, 2, 1, 1], xi: [1, 2, 2, 2, 2, 1, 1, 0], uwb: (2, 8, 2), phi: Slope::Finite(-1, 2), line_type: LineType::DiagonalLong, radii: Some((2, 4)) },
    PrintedRow { index: 88, e8: [1, 2, 3, 2, 2, 1, 1, 2], xi: [1, 2, 2, 2, 1, 1, 2, 1], uwb: (4, 5, 2), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 89, e8: [1, 2, 3, 3, 2, 2, 1, 1], xi: [1, 2, 3, 2, 2, 1, 1, 1], uwb: (3, 8, 3), phi: Slope::Finite(-3, 2), line_type: LineType::HalfLineShort, radii: Some((3, 2)) },
    PrintedRow { index: 90, e8: [1, 2, 3, 3, 2, 1, 1, 2], xi: [1, 2, 3, 2, 1, 1, 2, 2], uwb: (5, 5, 3), phi: Slope::Finite(1, 1), line_type: LineType::DiagonalLong, radii: Some((1, 2)) },
    PrintedRow { index: 91, e8: [1, 2, 3, 2, 2, 2, 1, 2], xi: [1, 2, 2, 2, 2, 1, 2, 1], uwb: (4, 6, 2), phi: Slope::Finite(0, 1), line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 92, e8: [1, 2, 4, 3, 2, 1, 0, 2], xi: [1, 2, 3, 2, 1, 0, 2, 1], uwb: (4, 5, 3), phi: Slope::Finite(2, 1), line_type: LineType::HalfLineLong, radii: Some((2, 3)) },
    PrintedRow { index: 93, e8: [1, 2, 3, 3, 3, 2, 1, 1], xi: [1, 2, 3, 3, 2, 1, 1, 1], uwb: (3, 9, 3), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((3, 3)) },
    PrintedRow { index: 94, e8: [1, 2, 4, 3, 2, 1, 1, 2], xi: [1, 2, 3, 2, 1, 1, 2, 1], uwb: (4, 6, 3), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 95, e8: [1, 2, 3, 3, 2, 2, 1, 2], xi: [1, 2, 3, 2, 2, 1, 2, 2], uwb: (5, 6, 3), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 96, e8: [1, 3, 4, 3, 2, 1, 0, 2], xi: [1, 3, 3, 2, 1, 0, 2, 1], uwb: (4, 6, 3), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 97, e8: [1, 2, 3, 3, 3, 2, 1, 2], xi: [1, 2, 3, 3, 2, 1, 2, 2], uwb: (5, 7, 3), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 98, e8: [1, 2, 4, 3, 2, 2, 1, 2], xi: [1, 2, 3, 2, 2, 1, 2, 1], uwb: (4, 7, 3), phi: Slope::Finite(-2, 1), line_type: LineType::DiagonalShort, radii: Some((2, 1)) },
    PrintedRow { index: 99, e8: [1, 3, 4, 3, 2, 1, 1, 2], xi: [1, 3, 3, 2, 1, 1, 2, 1], uwb: (4, 7, 3), phi: Slope::Finite(-2, 1), line_type: LineType::DiagonalShort, radii: Some((2, 1)) },
    PrintedRow { index: 100, e8: [2, 3, 4, 3, 2, 1, 0, 2], xi: [2, 3, 3, 2, 1, 0, 2, 1], uwb: (5, 6, 3), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 101, e8: [1, 3, 4, 3, 2, 2, 1, 2], xi: [1, 3, 3, 2, 2, 1, 2, 1], uwb: (4, 8, 3), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 102, e8: [1, 2, 4, 3, 3, 2, 1, 2], xi: [1, 2, 3, 3, 2, 1, 2, 1], uwb: (4, 8, 3), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 103, e8: [2, 3, 4, 3, 2, 1, 1, 2], xi: [2, 3, 3, 2, 1, 1, 2, 1], uwb: (5, 7, 3), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 104, e8: [1, 2, 4, 4, 3, 2, 1, 2], xi: [1, 2, 4, 3, 2, 1, 2, 2], uwb: (5, 8, 4), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((3, 3)) },
    PrintedRow { index: 105, e8: [1, 3, 4, 3, 3, 2, 1, 2], xi: [1, 3, 3, 3, 2, 1, 2, 1], uwb: (4, 9, 3), phi: Slope::Finite(-2, 3), line_type: LineType::HalfLineLong, radii: Some((2, 3)) },
    PrintedRow { index: 106, e8: [2, 3, 4, 3, 2, 2, 1, 2], xi: [2, 3, 3, 2, 2, 1, 2, 1], uwb: (5, 8, 3), phi: Slope::Finite(-1, 2), line_type: LineType::DiagonalLong, radii: Some((1, 2)) },
    PrintedRow { index: 107, e8: [2, 3, 4, 3, 3, 2, 1, 2], xi: [2, 3, 3, 3, 2, 1, 2, 1], uwb: (5, 9, 3), phi: Slope::Finite(-1, 3), line_type: LineType::HalfLineLong, radii: Some((2, 3)) },
    PrintedRow { index: 108, e8: [1, 3, 4, 4, 3, 2, 1, 2], xi: [1, 3, 4, 3, 2, 1, 2, 2], uwb: (5, 9, 4), phi: Slope::Finite(-3, 1), line_type: LineType::HalfLineShort, radii: Some((3, 2)) },
    PrintedRow { index: 109, e8: [2, 3, 4, 4, 3, 2, 1, 2], xi: [2, 3, 4, 3, 2, 1, 2, 2], uwb: (6, 9, 4), phi: Slope::Finite(-2, 1), line_type: LineType::DiagonalShort, radii: Some((2, 1)) },
    PrintedRow { index: 110, e8: [1, 3, 5, 4, 3, 2, 1, 2], xi: [1, 3, 4, 3, 2, 1, 2, 1], uwb: (4, 10, 4), phi: Slope::Finite(-2, 1), line_type: LineType::DiagonalShort, radii: Some((4, 2)) },
    PrintedRow { index: 111, e8: [1, 3, 5, 4, 3, 2, 1, 3], xi: [1, 3, 4, 3, 2, 1, 3, 2], uwb: (6, 8, 4), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 112, e8: [2, 3, 5, 4, 3, 2, 1, 2], xi: [2, 3, 4, 3, 2, 1, 2, 1], uwb: (5, 10, 4), phi: Slope::Finite(-3, 2), line_type: LineType::HalfLineShort, radii: Some((3, 2)) },
    PrintedRow { index: 113, e8: [2, 4, 5, 4, 3, 2, 1, 2], xi: [2, 4, 4, 3, 2, 1, 2, 1], uwb: (5, 11, 4), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((3, 3)) },
    PrintedRow { index: 114, e8: [2, 3, 5, 4, 3, 2, 1, 3], xi: [2, 3, 4, 3, 2, 1, 3, 2], uwb: (7, 8, 4), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 115, e8: [2, 4, 5, 4, 3, 2, 1, 3], xi: [2, 4, 4, 3, 2, 1, 3, 2], uwb: (7, 9, 4), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((1, 1)) },
    PrintedRow { index: 116, e8: [2, 4, 6, 4, 3, 2, 1, 3], xi: [2, 4, 4, 3, 2, 1, 3, 1], uwb: (6, 10, 4), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((2, 2)) },
    PrintedRow { index: 117, e8: [2, 4, 6, 5, 3, 2, 1, 3], xi: [2, 4, 5, 3, 2, 1, 3, 2], uwb: (7, 10, 5), phi: Slope::Infinity, line_type: LineType::Parallel, radii: Some((3, 3)) },
    PrintedRow { index: 118, e8: [2, 4, 6, 5, 4, 2, 1, 3], xi: [2, 4, 5, 4, 2, 1, 3, 2], uwb: (7, 11, 5), phi: Slope::Finite(-3, 1), line_type: LineType::HalfLineShort, radii: Some((3, 2)) },
    PrintedRow { index: 119, e8: [2, 4, 6, 5, 4, 3, 1, 3], xi: [2, 4, 5, 4, 3, 1, 3, 2], uwb: (7, 12, 5), phi: Slope::Finite(-3, 2), line_type: LineType::HalfLineShort, radii: Some((3, 2)) },
    PrintedRow { index: 120, e8: [2, 4, 6, 5, 4, 3, 2, 3], xi: [2, 4, 5, 4, 3, 2, 3, 2], uwb: (7, 13, 5), phi: Slope::Finite(-1, 1), line_type: LineType::Parallel, radii: Some((3, 3)) },
];
