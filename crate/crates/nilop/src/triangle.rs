//! Geometry of the reference triangle: the rotation and reflection, central
//! lines and their slopes, boundary distance, and the classification of
//! central half-lines as short or long.

use crate::rat::Rat;
use serde::Serialize;

/// A point of the triangle: level and colevel, both non-negative with sum at
/// most the bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrPoint {
    pub p: Rat,
    pub r: Rat,
    pub n: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TriangleError {
    OutsideTriangle,
}

impl std::fmt::Display for TriangleError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "point lies outside the triangle")
    }
}

impl std::error::Error for TriangleError {}

/// Slope of a central line: the ratio `(3p - n) : (3r - n)`, reduced, or
/// infinite when the denominator vanishes; the center itself has no slope.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Slope {
    Finite(i64, i64),
    Infinity,
    Central,
}

impl Slope {
    pub fn finite(num: i128, den: i128) -> Slope {
        assert!(den != 0);
        let r = Rat::new(num, den);
        Slope::Finite(r.num() as i64, r.den() as i64)
    }
}

impl std::fmt::Display for Slope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Slope::Finite(a, 1) => write!(f, "{}", a),
            Slope::Finite(a, b) => write!(f, "{}/{}", a, b),
            Slope::Infinity => write!(f, "inf"),
            Slope::Central => write!(f, "central"),
        }
    }
}

/// Whether a point sits on the short or the long half of its central line;
/// lines through the center parallel to a boundary have equal halves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HalfLine {
    Short,
    Long,
    Balanced,
    Central,
}

/// Type of the central line through a point, following the triangle's
/// symmetry classes: parallel to a boundary, diagonal, or one of the six
/// remaining slopes supporting the category at n = 6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CentralLineClass {
    Parallel,
    Diagonal,
    Other,
    Central,
}

#[derive(Clone, Debug, Serialize)]
pub struct PrGeometry {
    pub rho: (Rat, Rat),
    pub reflect: (Rat, Rat),
    pub phi: Slope,
    pub d: Rat,
    pub line_class: CentralLineClass,
    pub half: HalfLine,
}

impl PrPoint {
    pub fn new(p: Rat, r: Rat, n: u32) -> Result<PrPoint, TriangleError> {
        let zero = Rat::zero();
        let bound = Rat::int(n as i128);
        if p < zero || r < zero || p + r > bound {
            return Err(TriangleError::OutsideTriangle);
        }
        Ok(PrPoint { p, r, n })
    }

    pub fn from_ints(p: i128, r: i128, n: u32) -> PrPoint {
        PrPoint::new(Rat::int(p), Rat::int(r), n).expect("inside the triangle")
    }

    /// Rotation by 120 degrees about the center: `(p, r) -> (r, n - p - r)`.
    pub fn rho(&self) -> PrPoint {
        PrPoint {
            p: self.r,
            r: Rat::int(self.n as i128) - self.p - self.r,
            n: self.n,
        }
    }

    /// The reflection `(p, r) -> (r, p)` induced by the duality.
    pub fn reflect(&self) -> PrPoint {
        PrPoint {
            p: self.r,
            r: self.p,
            n: self.n,
        }
    }

    /// Boundary distance `min(p, r, n - p - r)`.
    pub fn boundary_distance(&self) -> Rat {
        let third = Rat::int(self.n as i128) - self.p - self.r;
        self.p.min(self.r).min(third)
    }

    pub fn is_central(&self) -> bool {
        let c = Rat::new(self.n as i128, 3);
        self.p == c && self.r == c
    }

    /// Slope of the central line through the point.
    pub fn slope(&self) -> Slope {
        let n = Rat::int(self.n as i128);
        let num = Rat::int(3) * self.p - n;
        let den = Rat::int(3) * self.r - n;
        if num.is_zero() && den.is_zero() {
            Slope::Central
        } else if den.is_zero() {
            Slope::Infinity
        } else {
            let q = num / den;
            Slope::Finite(q.num() as i64, q.den() as i64)
        }
    }

    /// Classifies the half-line from the center through this point by
    /// comparing the distances from the center to the two boundary exits of
    /// its central line.
    pub fn half_line(&self) -> HalfLine {
        if self.is_central() {
            return HalfLine::Central;
        }
        let n = Rat::int(self.n as i128);
        let c = Rat::new(self.n as i128, 3);
        let dp = self.p - c;
        let dr = self.r - c;
        // Walk from the center in direction (dp, dr): the exit parameter is
        // the least positive s with (c + s dp, c + s dr) on the boundary.
        let exit = |dp: Rat, dr: Rat| -> Rat {
            let mut best: Option<Rat> = None;
            // p = 0: s = -c / dp
            if !dp.is_zero() {
                let s = -c / dp;
                if s > Rat::zero() {
                    best = Some(best.map_or(s, |b: Rat| b.min(s)));
                }
            }
            if !dr.is_zero() {
                let s = -c / dr;
                if s > Rat::zero() {
                    best = Some(best.map_or(s, |b: Rat| b.min(s)));
                }
            }
            // p + r = n: s (dp + dr) = n - 2c = c
            let sum = dp + dr;
            if !sum.is_zero() {
                let s = (n - c - c) / sum;
                if s > Rat::zero() {
                    best = Some(best.map_or(s, |b: Rat| b.min(s)));
                }
            }
            best.expect("direction must exit the triangle")
        };
        let fwd = exit(dp, dr);
        let bwd = exit(-dp, -dr);
        match fwd.cmp(&bwd) {
            std::cmp::Ordering::Less => HalfLine::Short,
            std::cmp::Ordering::Greater => HalfLine::Long,
            std::cmp::Ordering::Equal => HalfLine::Balanced,
        }
    }

    /// Classifies the slope as parallel / diagonal / other.
    pub fn line_class(&self) -> CentralLineClass {
        match self.slope() {
            Slope::Central => CentralLineClass::Central,
            Slope::Infinity => CentralLineClass::Parallel,
            Slope::Finite(a, b) => {
                let q = (a, b);
                if q == (0, 1) || q == (-1, 1) {
                    CentralLineClass::Parallel
                } else if q == (1, 1) || q == (-2, 1) || q == (-1, 2) {
                    CentralLineClass::Diagonal
                } else {
                    CentralLineClass::Other
                }
            }
        }
    }

    pub fn geometry(&self) -> PrGeometry {
        let rho = self.rho();
        let refl = self.reflect();
        PrGeometry {
            rho: (rho.p, rho.r),
            reflect: (refl.p, refl.r),
            phi: self.slope(),
            d: self.boundary_distance(),
            line_class: self.line_class(),
            half: self.half_line(),
        }
    }
}

/// The twelve slopes whose central lines carry every indecomposable for
/// n = 6.
pub fn phi_set_s6() -> Vec<Slope> {
    vec![
        Slope::finite(0, 1),
        Slope::finite(1, 2),
        Slope::finite(1, 1),
        Slope::finite(2, 1),
        Slope::Infinity,
        Slope::finite(-3, 1),
        Slope::finite(-2, 1),
        Slope::finite(-3, 2),
        Slope::finite(-1, 1),
        Slope::finite(-2, 3),
        Slope::finite(-1, 2),
        Slope::finite(-1, 3),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(p: (i128, i128), r: (i128, i128), n: u32) -> PrPoint {
        PrPoint::new(Rat::new(p.0, p.1), Rat::new(r.0, r.1), n).unwrap()
    }

    #[test]
    fn rotation_and_reflection_group() {
        // rho^3 = id, reflect^2 = id, and together they generate six maps.
        let grid: Vec<PrPoint> = (0..=6)
            .flat_map(|a| (0..=(6 - a)).map(move |b| PrPoint::from_ints(a, b, 6)))
            .collect();
        for q in &grid {
            assert_eq!(q.rho().rho().rho(), *q);
            assert_eq!(q.reflect().reflect(), *q);
            assert_eq!(q.rho().boundary_distance(), q.boundary_distance());
            assert_eq!(q.reflect().boundary_distance(), q.boundary_distance());
        }
        use std::collections::HashSet;
        let q = pt((1, 2), (3, 2), 6);
        let mut orbit = HashSet::new();
        let mut frontier = vec![q];
        while let Some(x) = frontier.pop() {
            if orbit.insert((x.p, x.r)) {
                frontier.push(x.rho());
                frontier.push(x.reflect());
            }
        }
        assert_eq!(orbit.len(), 6);
    }

    #[test]
    fn worked_rotation() {
        let q = PrPoint::from_ints(0, 1, 6);
        let r = q.rho();
        assert_eq!((r.p, r.r), (Rat::int(1), Rat::int(5)));
    }

    #[test]
    fn simple_object_slope() {
        // the simple pair sits at (0, 1); its central line has slope
        // n / (n - 3), so 2 for n = 6.
        let q = PrPoint::from_ints(0, 1, 6);
        assert_eq!(q.slope(), Slope::finite(2, 1));
        assert!(phi_set_s6().contains(&q.slope()));
        for n in [7u32, 8, 9] {
            let q = PrPoint::from_ints(0, 1, n);
            assert_eq!(q.slope(), Slope::finite(n as i128, n as i128 - 3));
        }
    }

    #[test]
    fn half_line_classification() {
        // the diagonal p = r: points below the center are on the long half
        let long = pt((1, 1), (1, 1), 6);
        assert_eq!(long.half_line(), HalfLine::Long);
        let short = pt((5, 2), (5, 2), 6);
        assert_eq!(short.half_line(), HalfLine::Short);
        // lines parallel to the boundary have balanced halves
        let q = pt((2, 1), (1, 1), 6);
        assert_eq!(q.slope(), Slope::finite(0, 1));
        assert_eq!(q.half_line(), HalfLine::Balanced);
        // center
        assert_eq!(pt((2, 1), (2, 1), 6).half_line(), HalfLine::Central);
    }

    #[test]
    fn boundary_distance_range() {
        let q = pt((5, 4), (2, 1), 6);
        assert_eq!(q.boundary_distance(), Rat::new(5, 4));
        assert!(PrPoint::new(Rat::int(-1), Rat::int(0), 6).is_err());
        assert!(PrPoint::new(Rat::int(4), Rat::int(3), 6).is_err());
    }
}
