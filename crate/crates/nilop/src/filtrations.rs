//! Telescope filtrations, splitting off 0-pickets, and filtrations whose
//! factors are pickets of height at least two and extended pickets.

use crate::homs::{decompose_tracked, Undecided, DEFAULT_BUDGET};
use crate::matrix::Matrix;
use crate::pair::{PartitionTriple, SubspacePair};
use crate::partition::Partition;

/// One step of a filtration: the isomorphism data of the factor.
#[derive(Clone, Debug)]
pub struct FiltrationStep {
    pub index: usize,
    pub factor: PartitionTriple,
    pub g_split: bool,
}

/// The telescope filtration along the stored block order: the t-th subobject
/// is the span of the t largest blocks intersected with the subspace. Every
/// step is globally split and the t-th factor has global space `[lambda_t]`.
pub fn telescope(x: &SubspacePair) -> Vec<FiltrationStep> {
    assert!(!x.is_zero());
    let p = x.prime();
    let d = x.dim_v() as usize;
    let off = x.offsets();
    let ub = x.u_basis();
    let mut steps = Vec::new();
    let mut prev_udim = 0usize;
    for (t, &part) in x.lambda().parts().iter().enumerate() {
        // V_t = span of blocks 0..=t.
        let cut = off[t + 1];
        let mut vt = Matrix::zero(0, d, p);
        for j in 0..cut {
            let mut e = vec![0u32; d];
            e[j] = 1;
            vt.push_row(&e);
        }
        let inter = ub.row_space_intersection(&vt);
        let s = inter.rows() - prev_udim;
        prev_udim = inter.rows();
        let u_part = if s == 0 {
            Partition::empty()
        } else {
            Partition::new(vec![s as u32])
        };
        let w = part - s as u32;
        let w_part = if w == 0 {
            Partition::empty()
        } else {
            Partition::new(vec![w])
        };
        steps.push(FiltrationStep {
            index: t + 1,
            factor: PartitionTriple::new(u_part, Partition::new(vec![part]), w_part),
            g_split: true,
        });
    }
    steps
}

/// Splits off every 0-picket summand: returns the core (no 0-picket
/// summands) and the heights of the removed 0-pickets.
pub fn split_zero_pickets(x: &SubspacePair) -> Result<(SubspacePair, Vec<u32>), Undecided> {
    let leaves = decompose_tracked(x, DEFAULT_BUDGET)?;
    let mut core = SubspacePair::zero(x.bound(), x.prime());
    let mut zeros = Vec::new();
    for (leaf, _) in leaves {
        if leaf.dim_u() == 0 && leaf.lambda().width() == 1 {
            zeros.push(leaf.lambda().height());
        } else {
            core = core.direct_sum(&leaf).expect("same context");
        }
    }
    zeros.sort_unstable_by(|a, b| b.cmp(a));
    Ok((core, zeros))
}

#[derive(Debug)]
pub enum FiltrationError {
    Budget(Undecided),
    SearchBudget { needed: f64, budget: u64 },
}

impl std::fmt::Display for FiltrationError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FiltrationError::Budget(u) => write!(f, "{}", u),
            FiltrationError::SearchBudget { needed, budget } => write!(
                f,
                "special-subobject search needs {:.0} candidates, budget is {}",
                needed, budget
            ),
        }
    }
}

impl std::error::Error for FiltrationError {}

impl From<Undecided> for FiltrationError {
    fn from(u: Undecided) -> FiltrationError {
        FiltrationError::Budget(u)
    }
}

/// Result of the decomposition into a nicely filtered part and a part of
/// height at most one.
pub struct NiceDecomposition {
    /// The summand carrying the filtration.
    pub x_prime: SubspacePair,
    /// Factors of the filtration of `x_prime`, bottom-up: pickets of height
    /// at least 2 and extended pickets, with weakly decreasing heights.
    pub factors: Vec<PartitionTriple>,
    /// The summand of height at most one.
    pub x_second: SubspacePair,
}

/// Exhaustive search for a special generator: a vector of maximal `T`-height
/// whose cyclic span meets the subspace in the largest possible dimension.
/// Ties are broken by the lexicographically smallest coordinate vector.
/// The scan is over all of `V` up to scalar, hence costs `p^|V|`.
fn special_generator(x: &SubspacePair, budget: u64) -> Result<Vec<u32>, FiltrationError> {
    let p = x.prime();
    let d = x.dim_v() as usize;
    let h = x.lambda().height();
    let total = (p as f64).powi(d as i32);
    if total > budget as f64 {
        return Err(FiltrationError::SearchBudget {
            needed: total,
            budget,
        });
    }
    let ub = x.u_basis();
    let mut best: Option<(usize, Vec<u32>)> = None;
    let mut v = vec![0u32; d];
    loop {
        // increment
        let mut done = true;
        for slot in v.iter_mut() {
            *slot += 1;
            if *slot < p {
                done = false;
                break;
            }
            *slot = 0;
        }
        if done {
            break;
        }
        // canonical representative: first nonzero coordinate equals 1
        match v.iter().find(|&&c| c != 0) {
            Some(&first) if first == 1 => {}
            _ => continue,
        }
        // height check: T^(h-1) v != 0
        let mut w = v.clone();
        for _ in 0..h - 1 {
            w = x.shift(&w);
        }
        if w.iter().all(|&c| c == 0) {
            continue;
        }
        // span of the cyclic module generated by v
        let mut span = Matrix::zero(0, d, p);
        let mut cur = v.clone();
        while cur.iter().any(|&c| c != 0) {
            span.push_row(&cur);
            cur = x.shift(&cur);
        }
        let s = ub.row_space_intersection(&span).rows();
        let better = match &best {
            None => true,
            Some((bs, bv)) => s > *bs || (s == *bs && v < *bv),
        };
        if better {
            best = Some((s, v.clone()));
        }
    }
    Ok(best
        .expect("nonzero object has a generator of full height")
        .1)
}

/// The filtration construction behind the height-ordered factor theorem:
/// returns the factor list plus row bases (in the coordinates of `q`) of the
/// nicely filtered summand and of the height-at-most-one complement.
fn nice_split(
    q: &SubspacePair,
    budget: u64,
) -> Result<(Vec<PartitionTriple>, Matrix, Matrix), FiltrationError> {
    let p = q.prime();
    let d = q.dim_v() as usize;
    if q.is_zero() || q.lambda().height() <= 1 {
        return Ok((Vec::new(), Matrix::zero(0, d, p), Matrix::identity(d, p)));
    }
    let tall = q.lambda().parts().iter().filter(|&&x| x >= 2).count();
    if tall == 1 {
        // Global shape [h, 1, ..., 1]: split off the unique summand of
        // height h; it is a picket or an extended picket.
        let pieces = decompose_tracked(q, budget).map_err(FiltrationError::Budget)?;
        let mut a_rows = Matrix::zero(0, d, p);
        let mut rest_rows = Matrix::zero(0, d, p);
        let mut a_par = None;
        for (leaf, rows) in pieces {
            if leaf.lambda().height() >= 2 {
                assert!(
                    a_par.is_none(),
                    "two summands of height >= 2 in shape [h,1...]"
                );
                let width = leaf.lambda().width();
                assert!(
                    width == 1 || (width == 2 && leaf.lambda().part(1) == 1),
                    "tall summand is neither a picket nor an extended picket: {:?}",
                    leaf.lambda()
                );
                a_par = Some(leaf.partition_triple());
                a_rows = rows;
            } else {
                for i in 0..rows.rows() {
                    rest_rows.push_row(rows.row(i));
                }
            }
        }
        let a_par = a_par.expect("height >= 2 but no tall summand");
        return Ok((vec![a_par], a_rows, rest_rows));
    }
    // Build the first tall-1 steps of the special filtration.
    let mut chain_rows = Matrix::zero(0, d, p);
    for _ in 0..tall - 1 {
        let (y, section) = q.quotient(&chain_rows);
        let v = special_generator(&y, budget)?;
        // Lift the cyclic span of v into ambient coordinates.
        let mut cur = v;
        while cur.iter().any(|&c| c != 0) {
            let amb = Matrix::from_rows(&[cur.clone()], y.dim_v() as usize, p)
                .mul(&section)
                .row_vec(0);
            chain_rows.push_row(&amb);
            cur = y.shift(&cur);
        }
        chain_rows = chain_rows.row_basis();
    }
    // Quotient with exactly one tall special factor left.
    let (y, section) = q.quotient(&chain_rows);
    let pieces = decompose_tracked(&y, budget).map_err(FiltrationError::Budget)?;
    let mut w_rows = chain_rows.clone();
    let mut z_rows = chain_rows.clone();
    let mut a_par = None;
    for (leaf, rows) in pieces {
        let lift = rows.mul(&section);
        if leaf.lambda().height() >= 2 {
            assert!(a_par.is_none(), "quotient kept more than one tall summand");
            let width = leaf.lambda().width();
            assert!(
                width == 1 || (width == 2 && leaf.lambda().part(1) == 1),
                "tall factor is neither a picket nor an extended picket: {:?}",
                leaf.lambda()
            );
            a_par = Some(leaf.partition_triple());
            for i in 0..lift.rows() {
                w_rows.push_row(lift.row(i));
            }
        } else {
            for i in 0..lift.rows() {
                z_rows.push_row(lift.row(i));
            }
        }
    }
    let a_par = a_par.expect("no tall factor in the quotient");
    let (z_pair, z_basis) = q.subobject(&z_rows);
    let (z_factors, zp_rows, zpp_rows) = nice_split(&z_pair, budget)?;
    let mut xp_rows = zp_rows.mul(&z_basis);
    for i in 0..w_rows.rows() {
        xp_rows.push_row(w_rows.row(i));
    }
    let xpp_rows = zpp_rows.mul(&z_basis);
    let mut factors = z_factors;
    factors.push(a_par);
    Ok((factors, xp_rows.row_basis(), xpp_rows.row_basis()))
}

/// Decomposes `X = X' + X''` with `X''` of height at most one and `X'`
/// carrying a globally split filtration whose factors are pickets of height
/// at least two and extended pickets, heights weakly decreasing.
pub fn nice_decomposition(
    x: &SubspacePair,
    budget: u64,
) -> Result<NiceDecomposition, FiltrationError> {
    let (factors, xp_rows, xpp_rows) = nice_split(x, budget)?;
    let (x_prime, _) = x.subobject(&xp_rows);
    let (x_second, _) = x.subobject(&xpp_rows);
    assert!(x_second.lambda().height() <= 1);
    assert_eq!(x_prime.dim_v() + x_second.dim_v(), x.dim_v());
    // Heights weakly decreasing and at least 2.
    let heights: Vec<u32> = factors.iter().map(|f| f.v_part.height()).collect();
    assert!(heights.windows(2).all(|w| w[0] >= w[1]));
    assert!(heights.iter().all(|&h| h >= 2));
    Ok(NiceDecomposition {
        x_prime,
        factors,
        x_second,
    })
}

/// True if the triple is an extended picket `([u],[u+w-1,1],[w])`.
pub fn is_extended_picket_triple(t: &PartitionTriple) -> bool {
    t.v_part.width() == 2
        && t.v_part.part(1) == 1
        && t.u_part.width() == 1
        && t.w_part.width() == 1
        && t.u_part.height() >= 2
        && t.w_part.height() >= 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair::random_pair;
    use crate::partition;
    use crate::rat::Rat;

    fn e22(n: u32, p: u32) -> SubspacePair {
        SubspacePair::new(n, p, partition![3, 1], &[vec![0, 1, 0, 1]])
    }

    /// Independent oracle: subspace dimensions of telescope factors via
    /// direct intersection dimension counts over F_2 element enumeration.
    fn oracle_factor_subspace_dims(x: &SubspacePair) -> Vec<usize> {
        let d = x.dim_v() as usize;
        assert!(x.prime() == 2 && d <= 14);
        let ub = x.u_basis();
        let off = x.offsets();
        let mut dims = Vec::new();
        let mut prev = 0usize;
        for t in 0..x.lambda().width() as usize {
            let cut = off[t + 1];
            // count elements of U supported on the first `cut` coordinates
            let k = ub.rows();
            let mut count = 0usize;
            for mask in 0..(1u32 << k) {
                let mut v = vec![0u32; d];
                for i in 0..k {
                    if mask >> i & 1 == 1 {
                        for (j, &c) in ub.row(i).iter().enumerate() {
                            v[j] ^= c;
                        }
                    }
                }
                if v[cut..].iter().all(|&c| c == 0) {
                    count += 1;
                }
            }
            let dim = (count as f64).log2().round() as usize;
            dims.push(dim - prev);
            prev = dim;
        }
        dims
    }

    #[test]
    fn telescope_of_e22_matches_oracle() {
        let x = e22(3, 2);
        let steps = telescope(&x);
        assert_eq!(steps.len(), 2);
        let dims: Vec<usize> = steps
            .iter()
            .map(|s| s.factor.u_part.size() as usize)
            .collect();
        assert_eq!(dims, oracle_factor_subspace_dims(&x));
        // With the generator T x_1 + x_2, the subspace meets the leading
        // block in T^2 x_1 only, so the factors are ([1],[3]), ([1],[1]).
        assert_eq!(steps[0].factor.u_part, partition![1]);
        assert_eq!(steps[1].factor.u_part, partition![1]);
    }

    #[test]
    fn telescope_of_picket_is_itself() {
        let x = SubspacePair::picket(5, 3, 2, 4);
        let steps = telescope(&x);
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].factor, x.partition_triple());
    }

    #[test]
    fn telescope_counts_and_level_bounds_on_random_pairs() {
        let mut checked_lemma = 0;
        for seed in 0..200u64 {
            let lambdas = [partition![4, 2, 1], partition![3, 3, 2], partition![4, 4]];
            let lambda = lambdas[(seed % 3) as usize].clone();
            let x = random_pair(4, 2, &lambda, 2, seed);
            let steps = telescope(&x);
            assert_eq!(steps.len(), x.lambda().width() as usize);
            let total_u: u32 = steps
                .iter()
                .map(|s| s.factor.u_part.size())
                .collect::<Vec<_>>()
                .iter()
                .sum();
            assert_eq!(total_u, x.dim_u());
            // factor heights weakly decreasing
            let ms: Vec<u32> = steps.iter().map(|s| s.factor.v_part.height()).collect();
            assert!(ms.windows(2).all(|w| w[0] >= w[1]));
            // level of X between min and max factor level
            let inv = x.invariants().unwrap();
            let levels: Vec<Rat> = steps
                .iter()
                .map(|s| {
                    Rat::new(
                        s.factor.u_part.size() as i128,
                        s.factor.v_part.size() as i128,
                    )
                })
                .collect();
            let lo = levels.iter().copied().min().unwrap();
            let hi = levels.iter().copied().max().unwrap();
            let px_scaled = inv.pr.0 / Rat::int(1);
            // compare p = u/b against factor levels u_i/1 -- the factor
            // width is 1, so its level is its subspace size.
            let flo = steps.iter().map(|s| s.factor.u_part.size()).min().unwrap();
            let fhi = steps.iter().map(|s| s.factor.u_part.size()).max().unwrap();
            assert!(Rat::int(flo as i128) <= px_scaled && px_scaled <= Rat::int(fhi as i128));
            let _ = (lo, hi);
            // no factor is a 0-picket implies level at least 1
            if steps.iter().all(|s| !s.factor.u_part.is_empty()) {
                assert!(inv.pr.0 >= Rat::int(1));
                checked_lemma += 1;
            }
        }
        assert!(checked_lemma > 10);
    }

    #[test]
    fn zero_picket_split() {
        let x = SubspacePair::picket(3, 2, 0, 2)
            .direct_sum(&SubspacePair::picket(3, 2, 1, 2))
            .unwrap();
        let (core, zeros) = split_zero_pickets(&x).unwrap();
        assert_eq!(zeros, vec![2]);
        assert_eq!(
            core.partition_triple(),
            SubspacePair::picket(3, 2, 1, 2).partition_triple()
        );
        // Telescope factors of a core never contain a 0-picket: scan the
        // full S(3) list.
        let list = crate::homs::enumerate_indecomposables(3, 4, 2, DEFAULT_BUDGET).unwrap();
        for x in &list {
            if x.dim_u() == 0 {
                continue; // 0-pickets themselves
            }
            let (core, _) = split_zero_pickets(x).unwrap();
            for s in telescope(&core) {
                assert!(!s.factor.u_part.is_empty() || s.factor.v_part.is_empty());
            }
        }
    }

    #[test]
    fn nice_decomposition_of_special_object() {
        let x = crate::gallery::two_nice_filtrations_object(2);
        let nd = nice_decomposition(&x, 1 << 22).unwrap();
        assert!(nd.x_second.is_zero());
        assert_eq!(nd.factors.len(), 2);
        for f in &nd.factors {
            assert!(is_extended_picket_triple(f), "factor {:?}", f);
        }
        // One of the two printed factor sets: {E_3^4, E_3^2} or {E_2^3, E_4^3}.
        let mut set: Vec<(u32, u32)> = nd
            .factors
            .iter()
            .map(|f| (f.u_part.height(), f.w_part.height()))
            .collect();
        set.sort_unstable();
        let option_a = vec![(3, 2), (3, 4)];
        let option_b = vec![(2, 3), (4, 3)];
        assert!(
            set == option_a || set == option_b,
            "unexpected factor set {:?}",
            set
        );
        // Extended picket mean: q = (u+w)/2.
        for f in &nd.factors {
            let q = Rat::new(f.v_part.size() as i128, f.v_part.width() as i128);
            let expect = Rat::new((f.u_part.size() + f.w_part.size()) as i128, 2);
            assert_eq!(q, expect);
        }
    }

    #[test]
    fn nice_decomposition_splits_height_one() {
        let x = e22(3, 2)
            .direct_sum(&SubspacePair::picket(3, 2, 1, 1))
            .unwrap()
            .direct_sum(&SubspacePair::picket(3, 2, 0, 1))
            .unwrap();
        let nd = nice_decomposition(&x, 1 << 22).unwrap();
        assert_eq!(nd.x_second.dim_v(), 2);
        assert_eq!(nd.factors.len(), 1);
        assert!(is_extended_picket_triple(&nd.factors[0]));
    }

    #[test]
    fn theorem_nine_ordering_on_small_enumeration() {
        let list = crate::homs::enumerate_indecomposables(3, 4, 2, DEFAULT_BUDGET).unwrap();
        for x in list {
            if x.lambda().height() <= 1 || (x.dim_u() == 0 && x.lambda().width() == 1) {
                continue;
            }
            let nd = nice_decomposition(&x, 1 << 22).unwrap();
            assert!(nd.x_second.is_zero(), "{:?}", x);
            let hs: Vec<u32> = nd.factors.iter().map(|f| f.v_part.height()).collect();
            assert!(hs.windows(2).all(|w| w[0] >= w[1]));
            assert!(hs.iter().all(|&h| h >= 2));
        }
    }
}
