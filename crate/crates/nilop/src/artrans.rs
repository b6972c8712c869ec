//! Duality, syzygies, the translation functor at partition level and at
//! object level, and the plus-construction on the principal component.
//!
//! The object-level translate is computed as a minimal monomorphism applied
//! to the double syzygy of the cokernel map of the inclusion: the base ring
//! `k[T]/(T^n)` is symmetric, so its module translate is the double syzygy.

use crate::matrix::Matrix;
use crate::pair::{jordan_chains, PartitionTriple, SubspacePair};
use crate::partition::Partition;

/// A map between direct sums of cyclic modules, written as a matrix of
/// polynomials in `T`. The entry from a source summand `[a]` to a target
/// summand `[b]` must be divisible by `T^(b-a)` when `b > a`.
#[derive(Clone, Debug)]
pub struct LambdaMap {
    pub n: u32,
    pub p: u32,
    pub source: Vec<u32>,
    pub target: Vec<u32>,
    /// `entries[j][i]` maps source summand `i` into target summand `j`;
    /// index `t` of the polynomial is the coefficient of `T^t`.
    pub entries: Vec<Vec<Vec<u32>>>,
}

impl LambdaMap {
    pub fn new(
        n: u32,
        p: u32,
        source: Vec<u32>,
        target: Vec<u32>,
        mut entries: Vec<Vec<Vec<u32>>>,
    ) -> LambdaMap {
        // Normalize: reduce mod p, truncate mod T^b, trim trailing zeros.
        for (j, row) in entries.iter_mut().enumerate() {
            let b = target[j] as usize;
            for q in row.iter_mut() {
                q.truncate(b);
                for c in q.iter_mut() {
                    *c %= p;
                }
                while q.last() == Some(&0) {
                    q.pop();
                }
            }
        }
        let m = LambdaMap {
            n,
            p,
            source,
            target,
            entries,
        };
        m.validate();
        m
    }

    pub fn validate(&self) {
        assert_eq!(self.entries.len(), self.target.len());
        for (j, row) in self.entries.iter().enumerate() {
            assert_eq!(row.len(), self.source.len());
            for (i, q) in row.iter().enumerate() {
                let a = self.source[i];
                let b = self.target[j];
                let low = b.saturating_sub(a) as usize;
                for (t, &c) in q.iter().enumerate() {
                    if c % self.p != 0 {
                        assert!(
                            t >= low,
                            "entry ({j},{i}) not divisible by T^{low} for [{a}] -> [{b}]"
                        );
                        assert!(t < b as usize, "entry ({j},{i}) not reduced mod T^{b}");
                    }
                }
            }
        }
    }

    pub fn source_dim(&self) -> usize {
        self.source.iter().sum::<u32>() as usize
    }

    pub fn target_dim(&self) -> usize {
        self.target.iter().sum::<u32>() as usize
    }

    fn offsets(parts: &[u32]) -> Vec<usize> {
        let mut off = vec![0usize];
        for &x in parts {
            off.push(off.last().unwrap() + x as usize);
        }
        off
    }

    /// The scalar matrix on box bases: row `(i, s)` is the image of `T^s x_i`.
    pub fn eval_matrix(&self) -> Matrix {
        let so = Self::offsets(&self.source);
        let to = Self::offsets(&self.target);
        let mut m = Matrix::zero(self.source_dim(), self.target_dim(), self.p);
        for (j, row) in self.entries.iter().enumerate() {
            let b = self.target[j] as usize;
            for (i, q) in row.iter().enumerate() {
                let a = self.source[i] as usize;
                for s in 0..a {
                    for (t, &c) in q.iter().enumerate() {
                        if c != 0 && s + t < b {
                            let cur = m.get(so[i] + s, to[j] + s + t);
                            m.set(so[i] + s, to[j] + s + t, (cur + c) % self.p);
                        }
                    }
                }
            }
        }
        m
    }

    /// Composition `other . self` for `self: A -> B`, `other: B -> C`.
    pub fn compose(&self, other: &LambdaMap) -> LambdaMap {
        assert_eq!(self.target, other.source);
        let mut entries = Vec::with_capacity(other.target.len());
        for k in 0..other.target.len() {
            let ck = other.target[k] as usize;
            let mut row = Vec::with_capacity(self.source.len());
            for i in 0..self.source.len() {
                let mut q = vec![0u32; ck];
                for j in 0..self.target.len() {
                    let f = &other.entries[k][j];
                    let g = &self.entries[j][i];
                    for (t1, &c1) in f.iter().enumerate() {
                        if c1 == 0 {
                            continue;
                        }
                        for (t2, &c2) in g.iter().enumerate() {
                            if c2 == 0 {
                                continue;
                            }
                            if t1 + t2 < ck {
                                q[t1 + t2] = ((q[t1 + t2] as u64 + c1 as u64 * c2 as u64)
                                    % self.p as u64)
                                    as u32;
                            }
                        }
                    }
                }
                row.push(q);
            }
            entries.push(row);
        }
        LambdaMap::new(
            self.n,
            self.p,
            self.source.clone(),
            other.target.clone(),
            entries,
        )
    }
}

/// Presents a pair as the inclusion of its subspace, with the subspace
/// decomposed into cyclic summands chosen greedily by descending height.
pub fn inclusion_map(x: &SubspacePair) -> LambdaMap {
    let p = x.prime();
    let ub = x.u_basis();
    // T acting on U in U-coordinates.
    let mut shifted = Matrix::zero(0, ub.cols(), p);
    for i in 0..ub.rows() {
        shifted.push_row(&x.shift(ub.row(i)));
    }
    let (chains, gens_ambient): (Vec<u32>, Vec<Vec<u32>>) = if ub.rows() == 0 {
        (Vec::new(), Vec::new())
    } else {
        let t_local = ub.solve_rows(&shifted).expect("U not invariant");
        let ch = jordan_chains(&t_local);
        let mut ch_sorted: Vec<&Vec<Vec<u32>>> = ch.iter().collect();
        ch_sorted.sort_by(|a, b| b.len().cmp(&a.len()));
        let lens = ch_sorted.iter().map(|c| c.len() as u32).collect();
        let gens = ch_sorted
            .iter()
            .map(|c| {
                Matrix::from_rows(&[c[0].clone()], ub.rows(), p)
                    .mul(&ub)
                    .row_vec(0)
            })
            .collect();
        (lens, gens)
    };
    let target: Vec<u32> = x.lambda().parts().to_vec();
    let to = LambdaMap::offsets(&target);
    let mut entries = vec![vec![Vec::new(); chains.len()]; target.len()];
    for (i, g) in gens_ambient.iter().enumerate() {
        for (j, &b) in target.iter().enumerate() {
            let q: Vec<u32> = (0..b as usize).map(|t| g[to[j] + t]).collect();
            entries[j][i] = q;
        }
    }
    LambdaMap::new(x.bound(), p, chains, target, entries)
}

/// The cokernel epimorphism `V -> V/U` of a pair, as a map between the
/// chosen cyclic decompositions.
pub fn cokernel_map(x: &SubspacePair) -> LambdaMap {
    let p = x.prime();
    let (w_pair, _, projection) = x.quotient_full(&x.u_basis());
    let source: Vec<u32> = x.lambda().parts().to_vec();
    let target: Vec<u32> = w_pair.lambda().parts().to_vec();
    let so = LambdaMap::offsets(&source);
    let to = LambdaMap::offsets(&target);
    let mut entries = vec![vec![Vec::new(); source.len()]; target.len()];
    for (i, &a) in source.iter().enumerate() {
        let _ = a;
        let img = projection.row_vec(so[i]);
        for (j, &b) in target.iter().enumerate() {
            let q: Vec<u32> = (0..b as usize).map(|t| img[to[j] + t]).collect();
            entries[j][i] = q;
        }
    }
    LambdaMap::new(x.bound(), p, source, target, entries)
}

/// Syzygy of a map: lift through the minimal projective covers and restrict.
/// Cyclic summands of length `n` are projective and disappear.
pub fn stable_omega_map(h: &LambdaMap) -> LambdaMap {
    let n = h.n;
    let keep_src: Vec<usize> = (0..h.source.len()).filter(|&i| h.source[i] < n).collect();
    let keep_tgt: Vec<usize> = (0..h.target.len()).filter(|&j| h.target[j] < n).collect();
    let source: Vec<u32> = keep_src.iter().map(|&i| n - h.source[i]).collect();
    let target: Vec<u32> = keep_tgt.iter().map(|&j| n - h.target[j]).collect();
    let mut entries = vec![vec![Vec::new(); source.len()]; target.len()];
    for (jj, &j) in keep_tgt.iter().enumerate() {
        for (ii, &i) in keep_src.iter().enumerate() {
            let a = h.source[i] as i64;
            let b = h.target[j] as i64;
            let q = &h.entries[j][i];
            let newlen = (n - h.target[j]) as usize;
            let mut r = vec![0u32; newlen];
            // r(T) = T^(a-b) q(T), reduced mod T^(n-b).
            for (t, &c) in q.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let shifted = t as i64 + a - b;
                assert!(shifted >= 0, "entry not divisible as required");
                if (shifted as usize) < newlen {
                    r[shifted as usize] = (r[shifted as usize] + c) % h.p;
                }
            }
            entries[jj][ii] = r;
        }
    }
    LambdaMap::new(n, h.p, source, target, entries)
}

/// Builds a pair from block lengths (in any order) and subspace generator
/// rows in the corresponding box coordinates, sorting the blocks.
fn pair_from_blocks(n: u32, p: u32, lengths: &[u32], u_rows: &[Vec<u32>]) -> SubspacePair {
    SubspacePair::from_block_gens(n, p, lengths, u_rows)
}

/// Minimal monomorphism replacement: completes `h: A -> B` to an injective
/// map `A -> B + [n]^t` with `t = dim(soc A  ker h)`, extending an injection
/// of that intersection into the socles of the added free summands.
pub fn mimo(h: &LambdaMap) -> SubspacePair {
    let n = h.n;
    let p = h.p;
    let eval = h.eval_matrix();
    let da = h.source_dim();
    let so = LambdaMap::offsets(&h.source);
    // Socle rows of the source, one per cyclic summand.
    let mut socmat = Matrix::zero(0, da, p);
    for (i, &a) in h.source.iter().enumerate() {
        let mut v = vec![0u32; da];
        v[so[i] + a as usize - 1] = 1;
        socmat.push_row(&v);
    }
    // Coefficient vectors gamma with (gamma . socmat) . eval = 0.
    let gamma = if h.source.is_empty() {
        Matrix::zero(0, 0, p)
    } else {
        socmat.mul(&eval).left_nullspace().row_basis()
    };
    let t = gamma.rows();
    // Extension coefficients: C with C . gamma^T = identity.
    let g_matrix: Option<Matrix> = if t > 0 {
        let gt = gamma.transpose();
        let c = gt
            .solve_rows(&Matrix::identity(t, p))
            .expect("socle kernel basis is independent");
        // g(x_i) = sum_k C[k][i] T^(n - a_i) yhat_k.
        let mut g = Matrix::zero(da, t * n as usize, p);
        for (i, &a) in h.source.iter().enumerate() {
            for s in 0..a as usize {
                for k in 0..t {
                    let pos = k * n as usize + (n - a) as usize + s;
                    g.set(so[i] + s, pos, c.get(k, i));
                }
            }
        }
        Some(g)
    } else {
        None
    };
    let combined = match &g_matrix {
        Some(g) => eval.hstack(g),
        None => eval,
    };
    let mut lengths: Vec<u32> = h.target.clone();
    for _ in 0..t {
        lengths.push(n);
    }
    let gens: Vec<Vec<u32>> = (0..h.source.len())
        .map(|i| combined.row_vec(so[i]))
        .collect();
    let result = pair_from_blocks(n, p, &lengths, &gens);
    debug_assert_eq!(
        result.dim_u() as usize,
        da,
        "completed map is not injective"
    );
    result
}

/// The duality `D(U,V) = ((V/U)*, V*)`, realized as the annihilator of `U`
/// inside the dual space with per-block reversed coordinates.
pub fn dual(x: &SubspacePair) -> SubspacePair {
    let p = x.prime();
    let d = x.dim_v() as usize;
    let ub = x.u_basis();
    let ann = if ub.rows() == 0 {
        Matrix::identity(d, p)
    } else {
        ub.transpose().left_nullspace()
    };
    let off = x.offsets();
    let parts = x.lambda().parts();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for r in 0..ann.rows() {
        let z = ann.row(r);
        let mut v = vec![0u32; d];
        for (i, &part) in parts.iter().enumerate() {
            let part = part as usize;
            for j in 0..part {
                v[off[i] + j] = z[off[i] + part - 1 - j];
            }
        }
        rows.push(v);
    }
    SubspacePair::new(x.bound(), p, x.lambda().clone(), &rows)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TriError {
    Inconsistent(String),
    NotRealizable(String),
}

impl std::fmt::Display for TriError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TriError::Inconsistent(s) => write!(f, "inconsistent triple: {}", s),
            TriError::NotRealizable(s) => write!(f, "triple not realizable: {}", s),
        }
    }
}

impl std::error::Error for TriError {}

/// Translation at partition level: for a reduced object with data
/// `([U],[V],[W])` the translate has subspace `[V]` minus its height-`n`
/// parts, global `[W] + [n]^(width U - c_n)`, and factor the syzygy of `[U]`.
/// The two projective pickets map to the zero triple.
pub fn tau_partitions(tri: &PartitionTriple, n: u32) -> Result<PartitionTriple, TriError> {
    let u = &tri.u_part;
    let v = &tri.v_part;
    let w = &tri.w_part;
    if u.size() + w.size() != v.size() {
        return Err(TriError::Inconsistent("sizes do not add up".into()));
    }
    if v.height() > n {
        return Err(TriError::Inconsistent(format!(
            "height {} exceeds n = {}",
            v.height(),
            n
        )));
    }
    if u.height() > v.height()
        || u.width() > v.width()
        || w.height() > v.height()
        || w.width() > v.width()
    {
        return Err(TriError::NotRealizable(
            "subspace or factor exceeds the global shape".into(),
        ));
    }
    // Projective pickets.
    let proj_full = *v == Partition::new(vec![n]) && *u == *v;
    let proj_void = *v == Partition::new(vec![n]) && u.is_empty();
    if proj_full || proj_void {
        return Ok(PartitionTriple::new(
            Partition::empty(),
            Partition::empty(),
            Partition::empty(),
        ));
    }
    let c_n = v.multiplicity(n);
    let b_u = u.width();
    if b_u < c_n {
        return Err(TriError::NotRealizable(format!(
            "width of the subspace ({}) is below the number of height-n parts ({})",
            b_u, c_n
        )));
    }
    if u.height() == n {
        return Err(TriError::NotRealizable(
            "subspace with a height-n part means a projective summand; reduce first".into(),
        ));
    }
    let v_prime = Partition::from_unsorted(v.parts().iter().copied().filter(|&m| m < n).collect());
    let mut global_parts: Vec<u32> = w.parts().to_vec();
    for _ in 0..(b_u - c_n) {
        global_parts.push(n);
    }
    let new_v = Partition::from_unsorted(global_parts);
    let new_w = crate::pair::syzygy(u, n);
    Ok(PartitionTriple::new(v_prime, new_v, new_w))
}

/// Object-level translate: `Mimo` of the double syzygy of the cokernel map.
/// Projective picket summands contribute nothing; the translate of a
/// projective pair is the zero pair.
pub fn tau(x: &SubspacePair) -> SubspacePair {
    if x.is_zero() {
        return SubspacePair::zero(x.bound(), x.prime());
    }
    let cok = cokernel_map(x);
    let om2 = stable_omega_map(&stable_omega_map(&cok));
    mimo(&om2)
}

/// Partition-level plus-construction on the principal component: the global
/// space grows by `[n, n-2, 2]`, the subspace and the factor by `[n-2, 2]`.
/// Membership of the input in the principal component is the caller's
/// responsibility.
pub fn plus_pn(x: &SubspacePair) -> SubspacePair {
    let n = x.bound();
    let p = x.prime();
    assert!(n >= 5, "plus-construction needs n >= 5");
    // Partition-level realization of the growth: three pickets whose data
    // adds ([n-2,2], [n,n-2,2], [n-2,2]) to (U, V, W).
    let add = SubspacePair::picket(n, p, 2, n)
        .direct_sum(&SubspacePair::picket(n, p, n - 2, n - 2))
        .and_then(|a| a.direct_sum(&SubspacePair::picket(n, p, 0, 2)))
        .expect("same context");
    x.direct_sum(&add).expect("same context")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homs::is_isomorphic;
    use crate::pair::random_pair;
    use crate::partition;

    fn e22(n: u32, p: u32) -> SubspacePair {
        SubspacePair::new(n, p, partition![3, 1], &[vec![0, 1, 0, 1]])
    }

    fn tri(u: Partition, v: Partition, w: Partition) -> PartitionTriple {
        PartitionTriple::new(u, v, w)
    }

    #[test]
    fn dual_swaps_u_and_w() {
        for m in 1..=4 {
            let x = SubspacePair::picket(4, 2, 0, m);
            let d = dual(&x);
            let t = d.partition_triple();
            assert_eq!(t.u_part, Partition::new(vec![m]));
            assert_eq!(t.w_part, Partition::empty());
        }
        let x = e22(3, 2);
        let d = dual(&x);
        assert!(is_isomorphic(&x, &d).unwrap());
        for seed in 0..30u64 {
            let x = random_pair(5, 3, &partition![5, 3, 1], 2, seed);
            let t = x.partition_triple();
            let td = dual(&x).partition_triple();
            assert_eq!(td.u_part, t.w_part);
            assert_eq!(td.w_part, t.u_part);
            assert_eq!(td.v_part, t.v_part);
            // Involution up to isomorphism.
            assert!(is_isomorphic(&dual(&dual(&x)), &x).unwrap());
        }
    }

    #[test]
    fn tau_partitions_worked_examples() {
        // B(1,0,1,1,1) in S(5): ([2],[4,2],[3,1]) translates to
        // ([4,2],[5,3,1],[3]).
        let t = tau_partitions(&tri(partition![2], partition![4, 2], partition![3, 1]), 5).unwrap();
        assert_eq!(t.u_part, partition![4, 2]);
        assert_eq!(t.v_part, partition![5, 3, 1]);
        assert_eq!(t.w_part, partition![3]);
        // B(1,0,1,0,3) in S(5): ([2],[5,1],[4]) translates to ([1],[4],[3]).
        let t = tau_partitions(&tri(partition![2], partition![5, 1], partition![4]), 5).unwrap();
        assert_eq!(t.u_part, partition![1]);
        assert_eq!(t.v_part, partition![4]);
        assert_eq!(t.w_part, partition![3]);
    }

    #[test]
    fn tau_partitions_pickets() {
        // Reduced picket written as E-triple (a0\a1\a2) has
        // par ([a1],[a1+a2],[a2]); applying the translate twice rotates.
        let n = 6;
        for a0 in 0..=n {
            for a1 in 0..=n - a0 {
                let a2 = n - a0 - a1;
                if (a1, a2) == (0, 0) {
                    continue;
                }
                // reduced pickets: at most one zero among a0,a1,a2
                let zeros = [a0, a1, a2].iter().filter(|&&x| x == 0).count();
                if zeros >= 2 {
                    continue;
                }
                let u = Partition::from_unsorted(vec![a1]);
                let v = Partition::from_unsorted(vec![a1 + a2]);
                let w = Partition::from_unsorted(vec![a2]);
                let start = tri(u, v, w);
                let t2 = tau_partitions(&tau_partitions(&start, n).unwrap(), n).unwrap();
                // Rotation: a0\a1\a2 -> a1\a2\a0.
                assert_eq!(t2.u_part, Partition::from_unsorted(vec![a2]));
                assert_eq!(t2.v_part, Partition::from_unsorted(vec![a2 + a0]));
                assert_eq!(t2.w_part, Partition::from_unsorted(vec![a0]));
            }
        }
        // Projective pickets map to zero.
        let z = tau_partitions(&tri(partition![6], partition![6], Partition::empty()), 6).unwrap();
        assert!(z.v_part.is_empty());
    }

    #[test]
    fn tau_object_level_on_pickets() {
        // tau(0,[t]) = ([t],[t]) for t < n.
        for t in 1..6 {
            let x = SubspacePair::picket(6, 2, 0, t);
            let tx = tau(&x);
            let tri = tx.partition_triple();
            assert_eq!(tri.u_part, Partition::new(vec![t]));
            assert_eq!(tri.v_part, Partition::new(vec![t]));
        }
        // tau of projective pickets is zero.
        assert!(tau(&SubspacePair::picket(6, 2, 0, 6)).is_zero());
        assert!(tau(&SubspacePair::picket(6, 2, 6, 6)).is_zero());
        // tau([t],[t]) = ([t],[n]).
        for t in 1..6 {
            let x = SubspacePair::picket(6, 2, t, t);
            let tri = tau(&x).partition_triple();
            assert_eq!(tri.u_part, Partition::new(vec![t]));
            assert_eq!(tri.v_part, Partition::new(vec![6]));
        }
    }

    #[test]
    fn tau_matches_partition_level_on_random_reduced_pairs() {
        let mut done = 0;
        for seed in 0..60u64 {
            let lambdas = [partition![4, 2], partition![3, 3, 1], partition![4, 3, 2]];
            let lambda = lambdas[(seed % 3) as usize].clone();
            let x = random_pair(4, 2, &lambda, 2, seed);
            let tri = x.partition_triple();
            // Skip non-reduced draws: a height-n part of U or a height-n
            // part of W signals a projective picket summand.
            if tri.u_part.height() == 4 || tri.w_part.height() == 4 {
                continue;
            }
            let expected = tau_partitions(&tri, 4).unwrap();
            assert_eq!(tau(&x).partition_triple(), expected, "seed {seed}");
            done += 1;
        }
        assert!(done > 30);
    }

    #[test]
    fn single_translate_applies_syzygy_after_double_rotation() {
        // E(tau X) = Omega rho^2 E(X) for reduced pairs: the hidden triple
        // of the translate is the syzygy of the doubly rotated one.
        let n = 4u32;
        let syz = |p: &Partition| crate::pair::syzygy(p, n);
        let mut checked = 0;
        for seed in 0..40u64 {
            let lambdas = [partition![4, 2], partition![3, 2, 1], partition![3, 3]];
            let lambda = lambdas[(seed % 3) as usize].clone();
            let x = random_pair(n, 2, &lambda, 2, seed);
            let tri = x.partition_triple();
            if tri.u_part.multiplicity(n) > 0 || tri.w_part.multiplicity(n) > 0 {
                continue;
            }
            let e = x.e_triple();
            let expected = {
                let r2 = e.rotate().rotate();
                crate::pair::ETriple {
                    e0: syz(&r2.e0),
                    e1: syz(&r2.e1),
                    e2: syz(&r2.e2),
                }
            };
            assert_eq!(tau(&x).e_triple(), expected, "seed {seed}");
            checked += 1;
        }
        assert!(checked > 20);
    }

    #[test]
    fn tau_sixth_power_fixes_e22() {
        let mut x = e22(3, 2);
        let start = x.clone();
        for _ in 0..6 {
            x = tau(&x);
        }
        assert!(is_isomorphic(&x, &start).unwrap());
    }

    #[test]
    fn mimo_of_zero_map_gives_picket() {
        // h = 0 : [m] -> 0 gives the picket ([m],[n]).
        let h = LambdaMap::new(6, 2, vec![3], vec![], vec![]);
        let m = mimo(&h);
        let tri = m.partition_triple();
        assert_eq!(tri.u_part, partition![3]);
        assert_eq!(tri.v_part, partition![6]);
    }

    #[test]
    fn mimo_injective_input_is_unchanged() {
        let x = e22(3, 2);
        let inc = inclusion_map(&x);
        let m = mimo(&inc);
        assert!(is_isomorphic(&m, &x).unwrap());
    }

    #[test]
    fn mimo_of_printed_matrix_recovers_fixed_point() {
        // [T mu; eps T] on [n-2, 2] for n = 7: the minimal monomorphism has
        // partition data ([5,2],[7,5,2],[5,2]).
        let n = 7u32;
        let h = LambdaMap::new(
            n,
            2,
            vec![n - 2, 2],
            vec![n - 2, 2],
            vec![
                vec![vec![0, 1], vec![0, 0, 0, 1]], // T on [5], mu: [2] -> [5] is T^3
                vec![vec![1], vec![0, 1]],          // eps: [5] -> [2] is 1, T on [2]
            ],
        );
        let m = mimo(&h);
        let tri = m.partition_triple();
        assert_eq!(tri.u_part, partition![5, 2]);
        assert_eq!(tri.v_part, partition![7, 5, 2]);
        assert_eq!(tri.w_part, partition![5, 2]);
        // Minimality: one free summand was added for the 1-dimensional
        // socle kernel.
        assert_eq!(m.lambda().multiplicity(n), 1);
    }

    #[test]
    fn omega_identity_and_length() {
        // Omega of the identity of [m] is the identity of [n-m].
        let n = 6u32;
        let id3 = LambdaMap::new(n, 3, vec![3], vec![3], vec![vec![vec![1]]]);
        let om = stable_omega_map(&id3);
        assert_eq!(om.source, vec![3]);
        assert_eq!(om.target, vec![3]);
        assert_eq!(om.entries[0][0], vec![1]);
        // |Omega M| = n * bM - |M| on random modules: check via lengths.
        for parts in [vec![5, 2], vec![4, 4, 1], vec![6, 3]] {
            let src: u32 = parts.iter().sum();
            let b = parts.len() as u32;
            let omega_len: u32 = parts.iter().map(|&m| n - m).sum();
            assert_eq!(omega_len, n * b - src);
        }
    }

    #[test]
    fn double_omega_of_cokernel_matches_printed_matrix() {
        // The epi [n, n-2, 2] -> [n-2, 2] of the homogeneous-tube object:
        // its double syzygy is [T mu; eps T].
        let n = 7u32;
        let p = 2u32;
        let x = crate::gallery::tau_fixed_point(n, p);
        let cok = cokernel_map(&x);
        let om2 = stable_omega_map(&stable_omega_map(&cok));
        assert_eq!(om2.source, vec![n - 2, 2]);
        assert_eq!(om2.target.iter().sum::<u32>(), n); // [5,2] again
        let tx = mimo(&om2);
        assert!(is_isomorphic(&tx, &x).unwrap());
    }

    #[test]
    fn plus_construction_arithmetic() {
        let s = SubspacePair::picket(6, 2, 0, 1);
        let plus = plus_pn(&s);
        let inv = plus.invariants().unwrap();
        assert_eq!(inv.uwb, (6, 7, 4));
        // d grows on non-central inputs.
        let d0 = s.invariants().unwrap().d;
        assert!(inv.d > d0);
    }
}
