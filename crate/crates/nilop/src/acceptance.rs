//! The acceptance suite: one function per criterion, each returning a short
//! report on success and a diagnostic on failure. The integration test and
//! the command line both drive this module, so the gate is pinned in code.

use crate::artrans::{tau, tau_partitions};
use crate::comb::{
    count, make_bipicket, make_cyclic_sub, partition_to_subset, subset_to_partition, t_height_map,
    t_height_sequence_direct, BipicketCode, CountKind, PicketCode, SubsetCode,
};
use crate::filtrations::{nice_decomposition, telescope};
use crate::gallery;
use crate::graded;
use crate::homs::{enumerate_indecomposables, is_indecomposable, is_isomorphic, DEFAULT_BUDGET};
use crate::pair::{random_pair, PartitionTriple, SubspacePair};
use crate::partition::Partition;
use crate::rat::Rat;
use crate::roots;
use crate::triangle::{phi_set_s6, PrPoint, Slope};

pub type Outcome = Result<String, String>;

pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    pub run: fn() -> Outcome,
}

fn fail(msg: String) -> Outcome {
    Err(msg)
}

/// The indecomposable objects over S(6) used by the scans: every picket and
/// bipicket, the six width-3 objects on the short half-lines, the extremal
/// width-4 object, the object with two filtrations by extended pickets, the
/// one-parameter family with its self-extensions, the level-one width-4
/// family member, and the push-downs of the width-6 quadruple.
pub fn s6_corpus(p: u32) -> Vec<(String, SubspacePair)> {
    let mut out: Vec<(String, SubspacePair)> = Vec::new();
    for code in PicketCode::all(6) {
        out.push((
            format!("picket {}\\{}\\{}", code.a0, code.a1, code.a2),
            code.realize(6, p),
        ));
    }
    for code in BipicketCode::all(6) {
        out.push((format!("bipicket {:?}", code.c), make_bipicket(&code, 6, p)));
    }
    for (x, uwb) in gallery::small_width3_objects(p) {
        out.push((format!("width3 {:?}", uwb), x));
    }
    out.push(("extremal width4".into(), gallery::extremal_tetrapicket(p)));
    out.push((
        "two-filtration object".into(),
        gallery::two_nice_filtrations_object(p),
    ));
    let params: Vec<[u32; 2]> = projective_line_sample(p, 6);
    for c in &params {
        out.push((
            format!("family c=({}:{})", c[0], c[1]),
            graded::family("standard_s6", c, p).unwrap(),
        ));
    }
    for ell in [2u32, 3] {
        out.push((
            format!("self-extension ell={}", ell),
            graded::jordan_extension_standard(&[1, 2 % p], ell, p).unwrap(),
        ));
    }
    out.push((
        "width4 level-one".into(),
        graded::family("s6_width4_y", &[1], p).unwrap(),
    ));
    for (name, g, _) in graded::width6_quadruple(p) {
        out.push((format!("width6 {}", name), g.push_down().with_bound(6)));
    }
    out
}

/// Up to `k` points of the projective line over `F_p`, canonical
/// representatives first.
pub fn projective_line_sample(p: u32, k: usize) -> Vec<[u32; 2]> {
    let mut out = vec![[1u32, 0u32], [0, 1]];
    for c in 1..p {
        out.push([1, c]);
    }
    out.truncate(k);
    out
}

// -------------------------------------------------------------------------

pub fn criterion_01_s3_classification() -> Outcome {
    let list = enumerate_indecomposables(3, 4, 2, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    if list.len() != 10 {
        return fail(format!("expected 10 classes, found {}", list.len()));
    }
    let pickets = list.iter().filter(|x| x.lambda().width() == 1).count();
    let bips: Vec<&SubspacePair> = list.iter().filter(|x| x.lambda().width() == 2).collect();
    if pickets != 9 || bips.len() != 1 {
        return fail(format!(
            "expected 9 pickets and 1 bipicket, got {} and {}",
            pickets,
            bips.len()
        ));
    }
    let tri = bips[0].partition_triple();
    let expect = PartitionTriple::new(
        Partition::new(vec![2]),
        Partition::new(vec![3, 1]),
        Partition::new(vec![2]),
    );
    if tri != expect {
        return fail(format!("bipicket has data {:?}", tri));
    }
    Ok("10 classes: 9 pickets + the width-2 object ([2],[3,1],[2])".into())
}

fn s4_enumeration() -> Result<Vec<SubspacePair>, String> {
    enumerate_indecomposables(4, 6, 2, DEFAULT_BUDGET).map_err(|e| e.to_string())
}

pub fn criterion_02_theorem_one_scan() -> Outcome {
    let mut checked = 0;
    for (n, vmax) in [(3u32, 4u32), (4, 6)] {
        let list =
            enumerate_indecomposables(n, vmax, 2, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        for x in &list {
            let (u, w, b) = x.uwb();
            if u < b {
                let is_zero_picket = u == 0 && b == 1;
                if !is_zero_picket {
                    return fail(format!("u < b violated by non-0-picket {:?}", x));
                }
            }
            if w < b {
                let tri = x.partition_triple();
                let is_full_picket = b == 1 && tri.u_part == tri.v_part;
                if !is_full_picket {
                    return fail(format!("w < b violated by non-full-picket {:?}", x));
                }
            }
            checked += 1;
        }
    }
    Ok(format!("no exceptions among {} classes", checked))
}

pub fn criterion_03_theorem_two() -> Outcome {
    let mut report = String::new();
    for (n, vmax) in [(3u32, 4u32), (4, 6)] {
        let list =
            enumerate_indecomposables(n, vmax, 2, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        let special: Vec<&SubspacePair> = list
            .iter()
            .filter(|x| {
                let (u, w, b) = x.uwb();
                u == b && w == b
            })
            .collect();
        if special.len() != 2 {
            return fail(format!(
                "expected 2 classes with u = b = w in S({}), got {}",
                n,
                special.len()
            ));
        }
        let mut tris: Vec<String> = special
            .iter()
            .map(|x| format!("{:?}", x.partition_triple()))
            .collect();
        tris.sort();
        if tris != vec!["([1],[2],[1])", "([2],[3,1],[2])"] {
            return fail(format!("wrong pair in S({}): {:?}", n, tris));
        }
        report.push_str(&format!("S({}): ([1],[2]) and the bipicket; ", n));
    }
    Ok(report)
}

/// The reduced members of the small enumerations plus family members, used
/// by the rotation checks.
fn reduced_corpus() -> Result<Vec<(String, SubspacePair)>, String> {
    let mut out = Vec::new();
    for (n, vmax) in [(3u32, 4u32), (4, 6)] {
        let list =
            enumerate_indecomposables(n, vmax, 2, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        for (i, x) in list.into_iter().enumerate() {
            let tri = x.partition_triple();
            if tri.u_part.multiplicity(n) > 0 || tri.w_part.multiplicity(n) > 0 {
                continue; // projective picket
            }
            out.push((format!("S({}) class {}", n, i), x));
        }
    }
    for c in projective_line_sample(5, 6) {
        out.push((
            format!("family c=({}:{})", c[0], c[1]),
            graded::family("standard_s6", &c, 5).unwrap(),
        ));
    }
    for (x, uwb) in gallery::small_width3_objects(2) {
        out.push((format!("width3 {:?}", uwb), x));
    }
    out.push(("extremal width4".into(), gallery::extremal_tetrapicket(2)));
    out.push((
        "two-filtration object".into(),
        gallery::two_nice_filtrations_object(2),
    ));
    out.push((
        "width4 level-one".into(),
        graded::family("s6_width4_y", &[1], 2).unwrap(),
    ));
    Ok(out)
}

pub fn criterion_04_tau_square_rotation() -> Outcome {
    let corpus = reduced_corpus()?;
    let mut checked = 0;
    for (name, x) in &corpus {
        let e = x.e_triple();
        let t2 = tau(&tau(x));
        let e2 = t2.e_triple();
        if e2 != e.rotate() {
            return fail(format!(
                "{}: E(tau^2) = {:?} but rho E = {:?}",
                name,
                e2,
                e.rotate()
            ));
        }
        if t2.lambda().width() != x.lambda().width() {
            return fail(format!("{}: width changed under tau^2", name));
        }
        checked += 1;
    }
    Ok(format!("rotation verified on {} reduced objects", checked))
}

pub fn criterion_05_tau_sixth_identity() -> Outcome {
    let corpus = reduced_corpus()?;
    let mut checked = 0;
    for (name, x) in &corpus {
        let mut y = x.clone();
        for _ in 0..6 {
            y = tau(&y);
        }
        match is_isomorphic(&y, x) {
            Ok(true) => checked += 1,
            Ok(false) => return fail(format!("{}: tau^6 not isomorphic to the object", name)),
            Err(e) => return fail(format!("{}: undecided ({})", name, e)),
        }
    }
    Ok(format!("tau^6 fixes all {} reduced objects", checked))
}

pub fn criterion_06_worked_tau5_examples() -> Outcome {
    let t = tau_partitions(
        &PartitionTriple::new(
            Partition::new(vec![2]),
            Partition::new(vec![4, 2]),
            Partition::new(vec![3, 1]),
        ),
        5,
    )
    .map_err(|e| e.to_string())?;
    if t.u_part != Partition::new(vec![4, 2]) || t.v_part != Partition::new(vec![5, 3, 1]) {
        return fail(format!("first example gave {:?}", t));
    }
    let t = tau_partitions(
        &PartitionTriple::new(
            Partition::new(vec![2]),
            Partition::new(vec![5, 1]),
            Partition::new(vec![4]),
        ),
        5,
    )
    .map_err(|e| e.to_string())?;
    if t.u_part != Partition::new(vec![1]) || t.v_part != Partition::new(vec![4]) {
        return fail(format!("second example gave {:?}", t));
    }
    Ok("both translates match: ([4,2],[5,3,1],[3]) and ([1],[4],[3])".into())
}

pub fn criterion_07_fixed_points() -> Outcome {
    for n in [7u32, 8] {
        let x = gallery::tau_fixed_point(n, 2);
        let tx = tau(&x);
        match is_isomorphic(&tx, &x) {
            Ok(true) => {}
            Ok(false) => return fail(format!("n = {}: translate not isomorphic", n)),
            Err(e) => return fail(format!("n = {}: undecided ({})", n, e)),
        }
    }
    Ok("the width-3 object is a fixed point for n = 7 and n = 8".into())
}

pub fn criterion_08_width_identities() -> Outcome {
    let mut pool: Vec<SubspacePair> = Vec::new();
    // 500 random pairs across several shapes.
    let shapes = [
        (4u32, Partition::new(vec![4, 2]), 2u32),
        (4, Partition::new(vec![3, 2, 1]), 2),
        (4, Partition::new(vec![4, 4, 1]), 3),
        (5, Partition::new(vec![5, 3, 1]), 2),
        (5, Partition::new(vec![4, 2, 2]), 1),
    ];
    for seed in 0..500u64 {
        let (n, lambda, udim) = &shapes[(seed % 5) as usize];
        let x = random_pair(*n, if seed % 2 == 0 { 2 } else { 3 }, lambda, *udim, seed);
        pool.push(x);
    }
    for x in s4_enumeration()? {
        pool.push(x);
    }
    let mut checked = 0;
    for x in &pool {
        if x.is_zero() {
            continue;
        }
        let n = x.bound();
        let tri = x.partition_triple();
        let (bu, bw) = (tri.u_part.width(), tri.w_part.width());
        let b = x.lambda().width();
        let cn = x.lambda().multiplicity(n);
        let b_omega = crate::pair::syzygy(x.lambda(), n).width();
        let tx = tau(x);
        let btx = tx.lambda().width();
        // translate width bound, with equality exactly below full height
        if btx > bu + bw {
            return fail(format!("b(tau X) > bU + bW on {:?}", x));
        }
        if (btx == bu + bw) != (x.lambda().height() < n) {
            return fail(format!("width equality/height criterion fails on {:?}", x));
        }
        if btx != bu + bw - cn {
            return fail(format!("b(tau X) = bU + bW - c_n fails on {:?}", x));
        }
        if b + btx != b_omega + bu + bw {
            return fail(format!(
                "b X + b tau X = b Omega V + bU + bW fails on {:?}",
                x
            ));
        }
        let reduced = tri.u_part.multiplicity(n) == 0 && tri.w_part.multiplicity(n) == 0;
        if reduced {
            let cntx = tx.lambda().multiplicity(n);
            if bu != cn + cntx {
                return fail(format!("bU = c_n X + c_n tau X fails on {:?}", x));
            }
            let t2 = tau(&tx);
            if t2.lambda().multiplicity(n) != b - bu {
                return fail(format!("c_n tau^2 X = b X - bU fails on {:?}", x));
            }
            if b != cn + cntx + t2.lambda().multiplicity(n) {
                return fail(format!("b = c_n + c_n tau + c_n tau^2 fails on {:?}", x));
            }
            // level/colevel averages over the rotation orbit
            if !x.is_zero() && !tx.is_zero() {
                let t4 = tau(&tau(&t2));
                let levels: Vec<(Rat, Rat)> = [x, &t2, &t4]
                    .iter()
                    .map(|y| y.invariants().unwrap().pr)
                    .collect();
                let psum = levels.iter().fold(Rat::zero(), |a, b| a + b.0);
                let rsum = levels.iter().fold(Rat::zero(), |a, b| a + b.1);
                if psum != Rat::int(n as i128) || rsum != Rat::int(n as i128) {
                    return fail(format!("orbit averages fail on {:?}", x));
                }
            }
        }
        // half/double bound for indecomposables
        if x.lambda().width() <= 2 && !tx.is_zero() {
            if let Ok(true) = is_indecomposable(x) {
                if 2 * btx < b || btx > 2 * b {
                    return fail(format!("width bound fails on {:?}", x));
                }
            }
        }
        checked += 1;
    }
    Ok(format!(
        "all width and height-count identities hold on {} objects",
        checked
    ))
}

pub fn criterion_09_counting() -> Outcome {
    for n in 1..=8u64 {
        let picket_count = PicketCode::all(n as u32).len() as u64;
        if count(CountKind::Pickets, &[n]) != Some(picket_count) {
            return fail(format!("picket count differs at n = {}", n));
        }
        let bip_count = BipicketCode::all(n as u32).len() as u64;
        if count(CountKind::Bipickets, &[n]) != Some(bip_count) {
            return fail(format!("bipicket count differs at n = {}", n));
        }
        if count(CountKind::BipicketsHeightN, &[n])
            != Some(
                BipicketCode::all(n as u32)
                    .iter()
                    .filter(|c| c.sum() == n as u32)
                    .count() as u64,
            )
        {
            return fail(format!("height-n bipicket count differs at n = {}", n));
        }
        let subsets = SubsetCode::all(n as u32);
        if count(CountKind::CyclicTotal, &[n]) != Some(subsets.len() as u64) {
            return fail(format!("total cyclic count differs at n = {}", n));
        }
        let by_height = subsets
            .iter()
            .filter(|e| *e.elems().last().unwrap() == n as u32)
            .count() as u64;
        if count(CountKind::CyclicByHeight, &[n]) != Some(by_height) {
            return fail(format!("height-n cyclic count differs at n = {}", n));
        }
        for b in 1..=n.div_ceil(2) {
            let expect = subsets
                .iter()
                .filter(|e| {
                    *e.elems().last().unwrap() == n as u32 && e.cardinality() as u64 == 2 * b
                })
                .count() as u64;
            if count(CountKind::CyclicHw, &[n, b]) != Some(expect) {
                return fail(format!(
                    "radical cyclic count differs at n = {}, b = {}",
                    n, b
                ));
            }
        }
        for u in 1..=n {
            let expect = subsets
                .iter()
                .filter(|e| {
                    *e.elems().last().unwrap() == n as u32
                        && e.e_seq()[e.width() as usize - 1] as u64 == u
                })
                .count() as u64;
            if count(CountKind::CyclicUHeight, &[n, u]) != Some(expect) {
                return fail(format!(
                    "subspace-length count differs at n = {}, u = {}",
                    n, u
                ));
            }
            for b in 1..=u {
                let expect = subsets
                    .iter()
                    .filter(|e| {
                        *e.elems().last().unwrap() == n as u32
                            && e.e_seq()[e.width() as usize - 1] as u64 == u
                            && e.width() as u64 == b
                    })
                    .count() as u64;
                if count(CountKind::CyclicUb, &[n, u, b]) != Some(expect) {
                    return fail(format!(
                        "u-b count differs at n = {}, u = {}, b = {}",
                        n, u, b
                    ));
                }
            }
        }
        let sd = crate::comb::strongly_decreasing_partitions(n as u32).len() as u64;
        if count(CountKind::FibonacciP1, &[n]) != Some(sd) {
            return fail(format!("level-one count differs at n = {}", n));
        }
    }
    Ok("all closed counts match exhaustive code enumeration for n <= 8".into())
}

pub fn criterion_10_bijections() -> Outcome {
    let mut heights = std::collections::HashSet::new();
    for e in SubsetCode::all(8) {
        let lam = subset_to_partition(&e);
        if partition_to_subset(&lam) != e {
            return fail(format!("partition round trip fails on {:?}", e));
        }
        let h = t_height_map(&e);
        let m = make_cyclic_sub(&e, 8, 2);
        if t_height_sequence_direct(&m) != h {
            return fail(format!("height sequence mismatch on {:?}", e));
        }
        if !heights.insert(h) {
            return fail(format!("height map collision at {:?}", e));
        }
    }
    if heights.len() != 255 {
        return fail(format!("height map not onto: {}", heights.len()));
    }
    // printed worked examples
    let e = SubsetCode::new(vec![2, 3, 5, 6, 8, 9]);
    if subset_to_partition(&e) != Partition::new(vec![5, 5, 4, 3, 1]) {
        return fail("printed partition example mismatch".into());
    }
    if t_height_map(&e) != vec![1, 2, 5, 7, 8] {
        return fail("printed height-sequence example mismatch".into());
    }
    Ok("both maps are mutually inverse over {1..8}; printed examples match".into())
}

pub fn criterion_11_families() -> Outcome {
    let cases: Vec<(&str, Vec<u32>, (u32, u32, u32))> = vec![
        ("standard_s6", vec![1, 2], (6, 6, 3)),
        ("s9_p1", vec![1, 1], (6, 24, 6)),
        ("s7_6_10_4", vec![1, 1], (6, 10, 4)),
        ("s7_s3_714", vec![1, 1], (7, 14, 5)),
        ("s8_6_17_5", vec![1, 1], (6, 17, 5)),
        ("s6_width4_y", vec![1], (4, 10, 4)),
    ];
    for (name, c, uwb) in &cases {
        let x = graded::family(name, c, 5).map_err(|e| e.to_string())?;
        let inv = x.invariants().map_err(|e| e.to_string())?;
        if inv.uwb != *uwb {
            return fail(format!("{}: uwb {:?}, expected {:?}", name, inv.uwb, uwb));
        }
        match is_indecomposable(&x) {
            Ok(true) => {}
            Ok(false) => return fail(format!("{}: base member decomposes", name)),
            Err(e) => return fail(format!("{}: undecided ({})", name, e)),
        }
    }
    // Six sampled parameters pairwise non-isomorphic, for the genuine
    // one-parameter families. The width-4 level-one object is a single
    // isomorphism class: every nonzero scalar gives the same object and the
    // zero scalar splits, which is checked instead.
    for (name, c0, _) in &cases {
        if *name == "s6_width4_y" {
            continue;
        }
        let arity = c0.len();
        let params: Vec<Vec<u32>> = projective_line_sample(5, 6)
            .iter()
            .map(|c| c[..arity.max(2)].to_vec())
            .collect();
        let members: Vec<SubspacePair> = params
            .iter()
            .map(|c| graded::family(name, c, 5).unwrap())
            .collect();
        for i in 0..members.len() {
            for j in 0..i {
                match is_isomorphic(&members[i], &members[j]) {
                    Ok(false) => {}
                    Ok(true) => {
                        return fail(format!(
                            "{}: parameters {:?} and {:?} give isomorphic members",
                            name, params[i], params[j]
                        ))
                    }
                    Err(e) => return fail(format!("{}: undecided ({})", name, e)),
                }
            }
        }
    }
    // Width-4 level-one object: all nonzero scalars agree, zero splits off
    // the two cyclic-subspace summands.
    let base = graded::family("s6_width4_y", &[1], 5).unwrap();
    for c in 2..5u32 {
        match is_isomorphic(&base, &graded::family("s6_width4_y", &[c], 5).unwrap()) {
            Ok(true) => {}
            Ok(false) => return fail(format!("width-4 object differs at scalar {}", c)),
            Err(e) => return fail(format!("width-4 object undecided ({})", e)),
        }
    }
    let degenerate = graded::family("s6_width4_y", &[5], 5); // scalar 0 mod 5
    if degenerate.is_ok() {
        return fail("zero scalar must be rejected as a parameter".into());
    }
    let split = {
        // rebuild the zero-scalar object directly: it decomposes
        let lens = [3u32, 6, 4, 1];
        let mut u1 = vec![0u32; 14];
        u1[2] = 1;
        let mut u2 = vec![0u32; 14];
        u2[3 + 3] = 1;
        u2[9 + 2] = 1;
        u2[13] = 1;
        SubspacePair::from_block_gens(6, 5, &lens, &[u1, u2])
    };
    match is_indecomposable(&split) {
        Ok(false) => {}
        Ok(true) => return fail("zero-scalar object should decompose".into()),
        Err(e) => return fail(format!("zero-scalar object undecided ({})", e)),
    }
    Ok("families: printed uwb, certified; parameters distinct, width-4 object unique".into())
}

pub fn criterion_12_kronecker_pair() -> Outcome {
    let (x, y) = graded::kronecker_pair_graded(5);
    if graded::graded_hom_dim(&x, &x) != 1 || graded::graded_hom_dim(&y, &y) != 1 {
        return fail("endomorphism rings are not scalars".into());
    }
    if graded::graded_hom_dim(&x, &y) != 0 || graded::graded_hom_dim(&y, &x) != 0 {
        return fail("the pair is not orthogonal".into());
    }
    let e = graded::euler_form(&x.dim_vector(), &y.dim_vector());
    if e != -2 {
        return fail(format!("bilinear form gives {}", e));
    }
    let ext = graded::graded_hom_dim(&x, &y) as i64 - e;
    if ext != 2 {
        return fail(format!("extension dimension {}", ext));
    }
    Ok("orthogonal pair with scalar ends, form -2, extension space of dimension 2".into())
}

pub fn criterion_13_jordan_extensions() -> Outcome {
    for ell in 1..=3u32 {
        for c in projective_line_sample(5, 3) {
            let x = graded::jordan_extension_standard(&c, ell, 5).map_err(|e| e.to_string())?;
            let inv = x.invariants().map_err(|e| e.to_string())?;
            if inv.uwb != (6 * ell, 6 * ell, 3 * ell) {
                return fail(format!("ell = {}, c = {:?}: uwb {:?}", ell, c, inv.uwb));
            }
        }
        let x = graded::jordan_extension_standard(&[1, 2], ell, 5).unwrap();
        match is_indecomposable(&x) {
            Ok(true) => {}
            Ok(false) => return fail(format!("ell = {}: extension decomposes", ell)),
            Err(e) => return fail(format!("ell = {}: undecided ({})", ell, e)),
        }
    }
    Ok("self-extensions have uwb = ell * (6,6,3) and certify for ell <= 3".into())
}

pub fn criterion_14_s6_inequalities() -> Outcome {
    let corpus = s6_corpus(5);
    let mut extremal_seen = false;
    for (name, x) in &corpus {
        let (u, w, b) = x.uwb();
        let v = u + w;
        let (u, w, b, v) = (u as i64, w as i64, b as i64, v as i64);
        if (u - 2 * b).abs() > 4 || (v - 4 * b).abs() > 4 || (w - 2 * b).abs() > 4 {
            return fail(format!(
                "{}: inequality violated with uwb ({},{},{})",
                name, u, w, b
            ));
        }
        if u - 2 * b == -4 {
            extremal_seen = true;
        }
    }
    let x = gallery::extremal_tetrapicket(5);
    let (u, _, b) = x.uwb();
    if u as i64 - 2 * b as i64 != -4 {
        return fail("extremal witness does not reach -4".into());
    }
    if !extremal_seen {
        return fail("no corpus object attains the bound".into());
    }
    Ok(format!(
        "bounds hold on {} objects; the witness attains u - 2b = -4",
        corpus.len()
    ))
}

pub fn criterion_15_root_table() -> Outcome {
    let (records, diffs) = roots::table_with_diffs();
    if records.len() != 120 {
        return fail(format!("{} rows", records.len()));
    }
    if !diffs.is_empty() {
        return fail(format!("{} diffs, first: {:?}", diffs.len(), diffs[0]));
    }
    let r47 = &records[46];
    if r47.phi != Slope::finite(1, 1) || (r47.r_delta, r47.r_nabla) != (2, 4) {
        return fail(format!("row 47 spot values wrong: {:?}", r47));
    }
    Ok("all 120 rows recomputed with an empty diff; row 47 spot values match".into())
}

pub fn criterion_16_phi_support() -> Outcome {
    let phis = phi_set_s6();
    let corpus = s6_corpus(5);
    let mut non_central = 0;
    for (name, x) in &corpus {
        let inv = x.invariants().map_err(|e| e.to_string())?;
        let pt = PrPoint::new(inv.pr.0, inv.pr.1, 6).map_err(|e| e.to_string())?;
        match pt.slope() {
            Slope::Central => continue,
            s => {
                if !phis.contains(&s) {
                    return fail(format!("{} lies on slope {} outside the twelve", name, s));
                }
                non_central += 1;
            }
        }
    }
    Ok(format!(
        "{} non-central objects, all on the twelve central lines",
        non_central
    ))
}

pub fn criterion_17_filtrations() -> Outcome {
    // telescope ordering and bounds on 500 random pairs
    for seed in 0..500u64 {
        let shapes = [
            Partition::new(vec![4, 2, 1]),
            Partition::new(vec![3, 3, 2]),
            Partition::new(vec![5, 2, 2, 1]),
        ];
        let lambda = &shapes[(seed % 3) as usize];
        let x = random_pair(5, 2, lambda, 2, seed);
        let steps = telescope(&x);
        if steps.len() != x.lambda().width() as usize {
            return fail(format!("telescope length wrong at seed {}", seed));
        }
        let heights: Vec<u32> = steps.iter().map(|s| s.factor.v_part.height()).collect();
        if !heights.windows(2).all(|w| w[0] >= w[1]) {
            return fail(format!("factor heights out of order at seed {}", seed));
        }
        let total_u: u32 = steps.iter().map(|s| s.factor.u_part.size()).sum();
        if total_u != x.dim_u() {
            return fail(format!("subspace lengths do not add up at seed {}", seed));
        }
        if !x.is_zero() {
            let inv = x.invariants().unwrap();
            let levels: Vec<Rat> = steps
                .iter()
                .map(|s| Rat::new(s.factor.u_part.size() as i128, 1))
                .collect();
            let lo = levels.iter().copied().min().unwrap();
            let hi = levels.iter().copied().max().unwrap();
            if inv.pr.0 < lo || inv.pr.0 > hi {
                return fail(format!("level outside factor range at seed {}", seed));
            }
        }
    }
    // the two printed factor sets
    let x = gallery::two_nice_filtrations_object(2);
    let nd = nice_decomposition(&x, 1 << 22).map_err(|e| e.to_string())?;
    let mut set: Vec<(u32, u32)> = nd
        .factors
        .iter()
        .map(|f| (f.u_part.height(), f.w_part.height()))
        .collect();
    set.sort_unstable();
    if set != vec![(3, 2), (3, 4)] && set != vec![(2, 3), (4, 3)] {
        return fail(format!("factor set {:?} is neither printed option", set));
    }
    // height-ordered filtration over the F_2 corpus, skipping objects with
    // height-one or void-picket summands and those beyond the search budget
    let mut scanned = 0;
    for (name, x) in s6_corpus(2) {
        if x.lambda().height() <= 1 {
            continue;
        }
        if (x.prime() as f64).powi(x.dim_v() as i32) > (1u64 << 22) as f64 {
            continue; // documented search budget
        }
        let leaves = crate::homs::decompose(&x).map_err(|e| e.to_string())?;
        let skip = leaves
            .iter()
            .any(|l| l.lambda().height() <= 1 || (l.dim_u() == 0 && l.lambda().width() == 1));
        if skip {
            continue;
        }
        let nd = nice_decomposition(&x, 1 << 22).map_err(|e| e.to_string())?;
        if !nd.x_second.is_zero() {
            return fail(format!("{}: unexpected height-one part", name));
        }
        let hs: Vec<u32> = nd.factors.iter().map(|f| f.v_part.height()).collect();
        if !(hs.windows(2).all(|w| w[0] >= w[1]) && hs.iter().all(|&h| h >= 2)) {
            return fail(format!("{}: factor heights {:?}", name, hs));
        }
        scanned += 1;
    }
    Ok(format!(
        "telescopes ordered on 500 random pairs; printed factor sets reproduced; ordering on {} corpus objects",
        scanned
    ))
}

pub fn criterion_18_svg_goldens() -> Outcome {
    // byte-identity is asserted against the reviewed files by the
    // integration test; here we re-render and compare the two figures with
    // the embedded copies.
    let t3 = standard_figure(3);
    let t6 = standard_figure(6);
    let g3 = include_str!("../tests/golden/triangle3.svg");
    let g6 = include_str!("../tests/golden/triangle6.svg");
    if t3 != g3 {
        return fail("triangle figure for n = 3 differs from the golden file".into());
    }
    if t6 != g6 {
        return fail("triangle figure for n = 6 differs from the golden file".into());
    }
    Ok("both figures byte-identical to the reviewed golden files".into())
}

/// The two reviewed figures: the full classification for n = 3, and the
/// twelve lines plus hexagon and the small standard triangles for n = 6.
pub fn standard_figure(n: u32) -> String {
    let overlay = if n == 3 {
        let mut points = Vec::new();
        for code in PicketCode::all(3) {
            let x = code.realize(3, 2);
            let inv = x.invariants().unwrap();
            points.push(crate::svg::OverlayPoint {
                p: inv.pr.0,
                r: inv.pr.1,
                label: Some(format!("{}\\{}\\{}", code.a0, code.a1, code.a2)),
            });
        }
        points.push(crate::svg::OverlayPoint {
            p: Rat::int(1),
            r: Rat::int(1),
            label: Some("width 2".into()),
        });
        crate::svg::Overlay {
            points,
            lines: vec![],
            triangles: vec![],
            hexagons: vec![],
        }
    } else {
        let lines = phi_set_s6()
            .iter()
            .map(|s| crate::svg::OverlayLine { phi: s.to_string() })
            .collect();
        crate::svg::Overlay {
            points: vec![crate::svg::OverlayPoint {
                p: Rat::new(5, 4),
                r: Rat::int(2),
                label: Some("5/4|2".into()),
            }],
            lines,
            triangles: vec![
                crate::svg::OverlayTriangle {
                    d: Rat::int(0),
                    costandard: false,
                },
                crate::svg::OverlayTriangle {
                    d: Rat::int(1),
                    costandard: false,
                },
                crate::svg::OverlayTriangle {
                    d: Rat::new(5, 4),
                    costandard: false,
                },
            ],
            hexagons: vec![crate::svg::OverlayPoint {
                p: Rat::int(1),
                r: Rat::int(2),
                label: None,
            }],
        }
    };
    crate::svg::render(n, &overlay).expect("figure points lie inside")
}

/// Supplementary check resolving the open question on the n = 5 count: the
/// enumeration is complete for |V| <= 8, which covers every picket and
/// bipicket; the remaining classes have larger global spaces, so the run
/// checks the exact partial count 41 = 20 + 21.
pub fn supplementary_s5_partial_count() -> Outcome {
    let list = match enumerate_indecomposables(5, 8, 2, DEFAULT_BUDGET) {
        Ok(l) => l,
        Err(e) => return fail(format!("enumeration over budget: {}", e)),
    };
    let pickets = count(CountKind::Pickets, &[5]).unwrap();
    let bips = count(CountKind::Bipickets, &[5]).unwrap();
    if (pickets, bips) != (20, 21) {
        return fail(format!("formula counts ({}, {})", pickets, bips));
    }
    if list.len() as u64 != pickets + bips {
        return fail(format!(
            "partial enumeration found {} classes, formulas give {}",
            list.len(),
            pickets + bips
        ));
    }
    Ok(format!(
        "partial count at |V| <= 8 is exactly {} = {} pickets + {} bipickets (lower bound for the full 50)",
        list.len(),
        pickets,
        bips
    ))
}

pub fn all_criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            name: "classification for n = 3",
            run: criterion_01_s3_classification,
        },
        Criterion {
            id: 2,
            name: "subspace/factor width bounds scan",
            run: criterion_02_theorem_one_scan,
        },
        Criterion {
            id: 3,
            name: "the two objects with u = b = w",
            run: criterion_03_theorem_two,
        },
        Criterion {
            id: 4,
            name: "squared translate rotates the hidden factors",
            run: criterion_04_tau_square_rotation,
        },
        Criterion {
            id: 5,
            name: "sixth power of the translate is the identity",
            run: criterion_05_tau_sixth_identity,
        },
        Criterion {
            id: 6,
            name: "worked translate examples for n = 5",
            run: criterion_06_worked_tau5_examples,
        },
        Criterion {
            id: 7,
            name: "fixed points for n = 7 and 8",
            run: criterion_07_fixed_points,
        },
        Criterion {
            id: 8,
            name: "width and height-multiplicity identities",
            run: criterion_08_width_identities,
        },
        Criterion {
            id: 9,
            name: "closed counts equal code enumeration",
            run: criterion_09_counting,
        },
        Criterion {
            id: 10,
            name: "subset bijections",
            run: criterion_10_bijections,
        },
        Criterion {
            id: 11,
            name: "named families",
            run: criterion_11_families,
        },
        Criterion {
            id: 12,
            name: "orthogonal pair axioms",
            run: criterion_12_kronecker_pair,
        },
        Criterion {
            id: 13,
            name: "self-extension arithmetic",
            run: criterion_13_jordan_extensions,
        },
        Criterion {
            id: 14,
            name: "width inequalities for n = 6",
            run: criterion_14_s6_inequalities,
        },
        Criterion {
            id: 15,
            name: "root table recomputation",
            run: criterion_15_root_table,
        },
        Criterion {
            id: 16,
            name: "twelve-line support",
            run: criterion_16_phi_support,
        },
        Criterion {
            id: 17,
            name: "filtration shapes",
            run: criterion_17_filtrations,
        },
        Criterion {
            id: 18,
            name: "figure goldens",
            run: criterion_18_svg_goldens,
        },
    ]
}

/// One additional supplementary check (not part of the numbered gate).
pub fn supplementary() -> Vec<(String, fn() -> Outcome)> {
    vec![(
        "partial count for n = 5".to_string(),
        supplementary_s5_partial_count,
    )]
}

/// Runs everything and renders a pass/fail matrix.
pub fn run_all() -> (String, bool) {
    let mut out = String::new();
    let mut ok = true;
    for c in all_criteria() {
        let start = std::time::Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        match result {
            Ok(detail) => {
                out.push_str(&format!(
                    "PASS {:>2}  {:<46} {:>7.2}s  {}\n",
                    c.id,
                    c.name,
                    elapsed.as_secs_f64(),
                    detail
                ));
            }
            Err(msg) => {
                ok = false;
                out.push_str(&format!(
                    "FAIL {:>2}  {:<46} {:>7.2}s  {}\n",
                    c.id,
                    c.name,
                    elapsed.as_secs_f64(),
                    msg
                ));
            }
        }
    }
    for (name, run) in supplementary() {
        let start = std::time::Instant::now();
        match run() {
            Ok(detail) => out.push_str(&format!(
                "PASS  s  {:<46} {:>7.2}s  {}\n",
                name,
                start.elapsed().as_secs_f64(),
                detail
            )),
            Err(msg) => {
                ok = false;
                out.push_str(&format!(
                    "FAIL  s  {:<46} {:>7.2}s  {}\n",
                    name,
                    start.elapsed().as_secs_f64(),
                    msg
                ));
            }
        }
    }
    (out, ok)
}
