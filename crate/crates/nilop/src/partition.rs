//! Partitions of non-negative integers, written with weakly decreasing parts.
//!
//! A partition bounded by `n` is the isomorphism class of a module over
//! `k[T]/(T^n)`: the parts are the Jordan block sizes.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition; parts must be weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Partition {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing: {:?}",
            parts
        );
        assert!(parts.iter().all(|&x| x > 0), "parts must be positive");
        Partition { parts }
    }

    /// Sorts the given multiset of parts, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts: the dimension of the module.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Largest part, 0 for the empty partition.
    pub fn height(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Number of parts: dim ker T, the width.
    pub fn width(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Multiplicity of `m` among the parts. For `m = n` this is the invariant
    /// `c_n` of the module, the dimension of `T^(n-1) V`.
    pub fn multiplicity(&self, m: u32) -> u32 {
        self.parts.iter().filter(|&&x| x == m).count() as u32
    }

    pub fn conjugate(&self) -> Partition {
        let h = self.height() as usize;
        let mut conj = Vec::with_capacity(h);
        for j in 1..=h {
            conj.push(self.parts.iter().filter(|&&x| x as usize >= j).count() as u32);
        }
        Partition { parts: conj }
    }

    /// Durfee rank: number of diagonal boxes of the Young diagram.
    pub fn durfee_rank(&self) -> u32 {
        let mut r = 0;
        for (i, &x) in self.parts.iter().enumerate() {
            if x as usize >= i + 1 {
                r += 1;
            }
        }
        r
    }

    /// Largest part plus number of parts minus one (0 for the empty partition).
    pub fn perimeter(&self) -> u32 {
        if self.is_empty() {
            0
        } else {
            self.height() + self.width() - 1
        }
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// Jordan type from the rank sequence of the operator powers:
    /// `ranks[m]` is rank of `T^m`, with `ranks[0]` the space dimension.
    /// The multiplicity of part `m` is `r_{m-1} - 2 r_m + r_{m+1}`.
    pub fn from_rank_sequence(ranks: &[usize]) -> Partition {
        let r = |m: usize| -> i64 {
            if m < ranks.len() {
                ranks[m] as i64
            } else {
                0
            }
        };
        let mut parts = Vec::new();
        for m in (1..ranks.len() + 1).rev() {
            let mult = r(m - 1) - 2 * r(m) + r(m + 1);
            assert!(mult >= 0, "invalid rank sequence {:?}", ranks);
            for _ in 0..mult {
                parts.push(m as u32);
            }
        }
        Partition { parts }
    }

    /// All partitions of `size` with parts at most `max_part`.
    pub fn all(size: u32, max_part: u32) -> Vec<Partition> {
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            let top = rem.min(max);
            for next in (1..=top).rev() {
                cur.push(next);
                rec(rem - next, next, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, max_part, &mut Vec::new(), &mut out);
        out
    }

    /// Parts strictly decrease by at least 2 between neighbours.
    pub fn is_strongly_decreasing(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1] + 2)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[macro_export]
macro_rules! partition {
    ($($x:expr),*) => {
        $crate::partition::Partition::new(vec![$($x as u32),*])
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let p = partition![6, 4, 2];
        assert_eq!(p.size(), 12);
        assert_eq!(p.height(), 6);
        assert_eq!(p.width(), 3);
        assert_eq!(p.conjugate(), partition![3, 3, 2, 2, 1, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
        assert_eq!(p.durfee_rank(), 2);
        assert_eq!(partition![5, 5, 4, 3, 1].durfee_rank(), 3);
        assert_eq!(p.perimeter(), 8);
    }

    #[test]
    fn rank_sequence_roundtrip() {
        // [3,1]: ranks of T^m are 4,2,1,0.
        assert_eq!(
            Partition::from_rank_sequence(&[4, 2, 1, 0]),
            partition![3, 1]
        );
        assert_eq!(Partition::from_rank_sequence(&[3, 0]), partition![1, 1, 1]);
        assert_eq!(Partition::from_rank_sequence(&[0]), Partition::empty());
    }

    #[test]
    fn enumeration() {
        assert_eq!(Partition::all(4, 4).len(), 5);
        assert_eq!(Partition::all(4, 2).len(), 3);
        assert_eq!(Partition::all(0, 5), vec![Partition::empty()]);
        assert_eq!(Partition::all(6, 3).len(), 7);
    }

    #[test]
    fn strongly_decreasing() {
        assert!(partition![7, 4, 2].is_strongly_decreasing());
        assert!(!partition![7, 6, 2].is_strongly_decreasing());
        assert!(partition![3, 1].is_strongly_decreasing());
    }
}
