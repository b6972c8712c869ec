//! A small gallery of named objects used across tests, the acceptance suite
//! and the command line: fixed points of the translation, extremal
//! witnesses, and the width-3 objects sitting on the short central
//! half-lines of the triangle for n = 6.

use crate::pair::SubspacePair;
use crate::partition::Partition;

/// The extended picket `E_u^w = ([u],[u+w-1,1],[w])`, `u, w >= 2`:
/// global `[u+w-1, 1]`, subspace generated by `T^(w-1) x_1 + x_2`.
pub fn extended_picket(n: u32, p: u32, u: u32, w: u32) -> SubspacePair {
    assert!(u >= 2 && w >= 2 && u + w - 1 <= n);
    let lambda = Partition::new(vec![u + w - 1, 1]);
    let dim = lambda.size() as usize;
    let mut g = vec![0u32; dim];
    g[(w - 1) as usize] = 1;
    g[dim - 1] = 1;
    SubspacePair::new(n, p, lambda, &[g])
}

/// The width-3 object with global `[n, n-2, 2]` and subspace `[n-2, 2]`
/// generated by `T^2 v_1 + T v_2 + v_3` and `T^(n-4) v_2 + T v_3`.
/// For n > 6 it is a fixed point of the translation and is not gradable.
pub fn tau_fixed_point(n: u32, p: u32) -> SubspacePair {
    assert!(n >= 7, "the fixed-point pattern needs n >= 7");
    let lambda = Partition::new(vec![n, n - 2, 2]);
    let dim = lambda.size() as usize;
    let off2 = n as usize;
    let off3 = (2 * n - 2) as usize;
    let mut u1 = vec![0u32; dim];
    u1[2] = 1;
    u1[off2 + 1] = 1;
    u1[off3] = 1;
    let mut u2 = vec![0u32; dim];
    u2[off2 + (n - 4) as usize] = 1;
    u2[off3 + 1] = 1;
    SubspacePair::new(n, p, lambda, &[u1, u2])
}

/// The width-4 object `([3,1],[6,4,3,1])` in S(6) with `u = b = 4`, the
/// extremal witness for `u - 2b = -4`.
pub fn extremal_tetrapicket(p: u32) -> SubspacePair {
    let lambda = Partition::new(vec![6, 4, 3, 1]);
    // offsets: 0, 6, 10, 13
    let mut u1 = vec![0u32; 14];
    u1[3] = 1; // T^3 x1
    u1[6 + 2] = 1; // T^2 x2
    u1[10 + 1] = 1; // T x3
    u1[13] = 1; // x4
    let mut u2 = vec![0u32; 14];
    u2[10 + 2] = 1; // T^2 x3
    SubspacePair::new(6, p, lambda, &[u1, u2])
}

/// The object with partition data `([4,2],[6,4,1,1],[4,2])` that admits two
/// different filtrations by extended pickets.
pub fn two_nice_filtrations_object(p: u32) -> SubspacePair {
    let lambda = Partition::new(vec![6, 4, 1, 1]);
    // offsets: 0, 6, 10, 11
    let mut u1 = vec![0u32; 12];
    u1[2] = 1; // T^2 x1
    u1[6 + 1] = 1; // T x2
    u1[10] = 1; // x3
    let mut u2 = vec![0u32; 12];
    u2[6 + 2] = 1; // T^2 x2
    u2[11] = 1; // x4
    SubspacePair::new(6, p, lambda, &[u1, u2])
}

/// The six width-3 objects of S(6) that live on the short central
/// half-lines not reached by pickets, with their uwb vectors.
pub fn small_width3_objects(p: u32) -> Vec<(SubspacePair, (u32, u32, u32))> {
    let mut out = Vec::new();
    // global [6,3,1]: offsets 0, 6, 9
    {
        let lambda = Partition::new(vec![6, 3, 1]);
        let mut g = vec![0u32; 10];
        g[3] = 1;
        g[6 + 1] = 1;
        g[9] = 1;
        out.push((SubspacePair::new(6, p, lambda, &[g]), (3, 7, 3)));
    }
    // global [6,4,1]: offsets 0, 6, 10
    {
        let lambda = Partition::new(vec![6, 4, 1]);
        let mut g = vec![0u32; 11];
        g[3] = 1;
        g[6 + 2] = 1;
        g[10] = 1;
        out.push((SubspacePair::new(6, p, lambda, &[g]), (3, 8, 3)));
    }
    // global [6,6,3]: offsets 0, 6, 12
    {
        let lambda = Partition::new(vec![6, 6, 3]);
        let mut g1 = vec![0u32; 15];
        g1[4] = 1;
        g1[12 + 2] = 1;
        let mut g2 = vec![0u32; 15];
        g2[6 + 1] = 1;
        g2[12] = 1;
        out.push((
            SubspacePair::new(6, p, lambda.clone(), &[g1, g2]),
            (7, 8, 3),
        ));
        let mut h1 = vec![0u32; 15];
        h1[3] = 1;
        h1[12 + 1] = 1;
        let mut h2 = vec![0u32; 15];
        h2[6 + 1] = 1;
        h2[12] = 1;
        out.push((SubspacePair::new(6, p, lambda, &[h1, h2]), (8, 7, 3)));
    }
    // global [6,4,1]: offsets 0, 6, 10
    {
        let lambda = Partition::new(vec![6, 4, 1]);
        let mut g1 = vec![0u32; 11];
        g1[1] = 1;
        g1[6] = 1;
        let mut g2 = vec![0u32; 11];
        g2[6 + 1] = 1;
        g2[10] = 1;
        out.push((SubspacePair::new(6, p, lambda, &[g1, g2]), (8, 3, 3)));
    }
    // global [6,3,1]: offsets 0, 6, 9
    {
        let lambda = Partition::new(vec![6, 3, 1]);
        let mut g1 = vec![0u32; 10];
        g1[1] = 1;
        g1[6] = 1;
        let mut g2 = vec![0u32; 10];
        g2[6 + 1] = 1;
        g2[9] = 1;
        out.push((SubspacePair::new(6, p, lambda, &[g1, g2]), (7, 3, 3)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homs::is_indecomposable;
    use crate::partition;

    #[test]
    fn extended_pickets_have_the_right_data() {
        for (u, w) in [(2, 2), (2, 3), (3, 2), (3, 4), (4, 3)] {
            let e = extended_picket(6, 2, u, w);
            let tri = e.partition_triple();
            assert_eq!(tri.u_part, Partition::new(vec![u]));
            assert_eq!(tri.v_part, Partition::new(vec![u + w - 1, 1]));
            assert_eq!(tri.w_part, Partition::new(vec![w]));
            assert!(is_indecomposable(&e).unwrap());
        }
    }

    #[test]
    fn fixed_point_data() {
        for n in [7, 8] {
            let x = tau_fixed_point(n, 2);
            let tri = x.partition_triple();
            assert_eq!(tri.u_part, Partition::new(vec![n - 2, 2]));
            assert_eq!(tri.v_part, Partition::new(vec![n, n - 2, 2]));
            assert_eq!(tri.w_part, Partition::new(vec![n - 2, 2]));
            assert!(is_indecomposable(&x).unwrap());
        }
    }

    #[test]
    fn extremal_tetrapicket_data() {
        let x = extremal_tetrapicket(2);
        let tri = x.partition_triple();
        assert_eq!(tri.u_part, partition![3, 1]);
        let inv = x.invariants().unwrap();
        assert_eq!(inv.uwb.0, 4);
        assert_eq!(inv.uwb.2, 4);
        assert_eq!(inv.uwb.0 as i64 - 2 * inv.uwb.2 as i64, -4);
        assert!(is_indecomposable(&x).unwrap());
    }

    #[test]
    fn nice_filtrations_object_data() {
        let x = two_nice_filtrations_object(2);
        let tri = x.partition_triple();
        assert_eq!(tri.u_part, partition![4, 2]);
        assert_eq!(tri.v_part, partition![6, 4, 1, 1]);
        assert_eq!(tri.w_part, partition![4, 2]);
        assert!(is_indecomposable(&x).unwrap());
    }

    #[test]
    fn width3_objects_are_certified() {
        for (x, uwb) in small_width3_objects(2) {
            assert_eq!(x.invariants().unwrap().uwb, uwb);
            assert!(is_indecomposable(&x).unwrap(), "uwb {:?}", uwb);
        }
    }
}
