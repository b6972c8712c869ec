//! Graded pairs over the doubled ladder quiver, the push-down constructor,
//! the homological bilinear form, a solver for graded morphism spaces, and
//! the explicit one-parameter families.
//!
//! A graded pair is stored in block form: the global space is a direct sum
//! of interval modules (a top degree and a length each), and the subspace is
//! generated by homogeneous vectors. The box `(b, k)` of block `b` has
//! degree `top_b - k`. All of the named constructions arrive in this
//! shape; the generic per-degree matrix presentation is derived from it when
//! a linear solver is needed.

use crate::matrix::Matrix;
use crate::pair::SubspacePair;

#[derive(Clone, Debug)]
pub struct GradedPair {
    n: u32,
    p: u32,
    /// `(top degree, length)` per block.
    blocks: Vec<(i32, u32)>,
    /// Homogeneous generators of the subspace: box coordinates.
    gens: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GradedError {
    NotHomogeneous,
    ShapeViolation(String),
    NonGorenstein,
}

impl std::fmt::Display for GradedError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GradedError::NotHomogeneous => write!(f, "generator is not homogeneous"),
            GradedError::ShapeViolation(s) => write!(f, "shape violation: {}", s),
            GradedError::NonGorenstein => {
                write!(f, "subspace meets the socle at the removed degree")
            }
        }
    }
}

impl std::error::Error for GradedError {}

/// Dimension vectors over a degree range, for the bilinear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimVector {
    pub lo: i32,
    /// bottom-row dimensions, index 0 at degree `lo`
    pub v: Vec<i64>,
    /// top-row dimensions
    pub u: Vec<i64>,
}

impl GradedPair {
    pub fn new(
        n: u32,
        p: u32,
        blocks: Vec<(i32, u32)>,
        gens: Vec<Vec<u32>>,
    ) -> Result<GradedPair, GradedError> {
        let dim: usize = blocks.iter().map(|&(_, l)| l as usize).sum();
        for &(_, l) in &blocks {
            if l == 0 || l > n {
                return Err(GradedError::ShapeViolation(format!(
                    "block length {} outside 1..={}",
                    l, n
                )));
            }
        }
        let gp = GradedPair { n, p, blocks, gens };
        for g in &gp.gens {
            if g.len() != dim {
                return Err(GradedError::ShapeViolation("generator length".into()));
            }
            if gp.degree_of(g).is_none() {
                return Err(GradedError::NotHomogeneous);
            }
        }
        Ok(gp)
    }

    pub fn blocks(&self) -> &[(i32, u32)] {
        &self.blocks
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn bound(&self) -> u32 {
        self.n
    }

    fn offsets(&self) -> Vec<usize> {
        let mut off = vec![0usize];
        for &(_, l) in &self.blocks {
            off.push(off.last().unwrap() + l as usize);
        }
        off
    }

    fn dim(&self) -> usize {
        *self.offsets().last().unwrap()
    }

    /// Degree of each box coordinate.
    fn coordinate_degrees(&self) -> Vec<i32> {
        let mut out = Vec::with_capacity(self.dim());
        for &(top, l) in &self.blocks {
            for k in 0..l as i32 {
                out.push(top - k);
            }
        }
        out
    }

    /// The common degree of a homogeneous vector; `None` if mixed, a default
    /// for zero vectors.
    fn degree_of(&self, v: &[u32]) -> Option<i32> {
        let degs = self.coordinate_degrees();
        let mut found: Option<i32> = None;
        for (j, &c) in v.iter().enumerate() {
            if c % self.p != 0 {
                match found {
                    None => found = Some(degs[j]),
                    Some(d) if d == degs[j] => {}
                    _ => return None,
                }
            }
        }
        Some(found.unwrap_or(i32::MIN))
    }

    pub fn lo(&self) -> i32 {
        self.blocks
            .iter()
            .map(|&(t, l)| t - l as i32 + 1)
            .min()
            .unwrap_or(0)
    }

    pub fn hi(&self) -> i32 {
        self.blocks.iter().map(|&(t, _)| t).max().unwrap_or(0)
    }

    /// Applies the degree-lowering operator to box coordinates.
    fn shift(&self, v: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; v.len()];
        let off = self.offsets();
        for (b, &(_, l)) in self.blocks.iter().enumerate() {
            for k in 0..l as usize - 1 {
                out[off[b] + k + 1] = v[off[b] + k];
            }
        }
        out
    }

    /// Per-degree bases of the subspace: closure of the generators.
    fn u_rows_by_degree(&self) -> std::collections::BTreeMap<i32, Matrix> {
        let mut rows: std::collections::BTreeMap<i32, Matrix> = Default::default();
        for g in &self.gens {
            let mut v = g.clone();
            let mut d = match self.degree_of(&v) {
                Some(d) if d != i32::MIN => d,
                _ => continue,
            };
            while v.iter().any(|&c| c % self.p != 0) {
                rows.entry(d)
                    .or_insert_with(|| Matrix::zero(0, self.dim(), self.p))
                    .push_row(&v);
                v = self.shift(&v);
                d -= 1;
            }
        }
        rows.into_iter().map(|(d, m)| (d, m.row_basis())).collect()
    }

    /// The plain pair underneath: forget the grading.
    pub fn push_down(&self) -> SubspacePair {
        let lens: Vec<u32> = self.blocks.iter().map(|&(_, l)| l).collect();
        SubspacePair::from_block_gens(self.n, self.p, &lens, &self.gens)
    }

    /// Dimension vectors of both rows.
    pub fn dim_vector(&self) -> DimVector {
        let lo = self.lo();
        let hi = self.hi();
        let len = (hi - lo + 1).max(0) as usize;
        let mut v = vec![0i64; len];
        for &(top, l) in &self.blocks {
            for k in 0..l as i32 {
                v[(top - k - lo) as usize] += 1;
            }
        }
        let mut u = vec![0i64; len];
        for (d, m) in self.u_rows_by_degree() {
            u[(d - lo) as usize] = m.rows() as i64;
        }
        DimVector { lo, v, u }
    }

    /// Deletes the vector spaces at the given degree in both rows and
    /// composes the structure maps across the gap.
    pub fn g_delete(&self, z: i32) -> GradedPair {
        let mut new_blocks: Vec<(i32, u32)> = Vec::new();
        // coordinate map: old index -> Option<new index>
        let off = self.offsets();
        let mut keep: Vec<Option<usize>> = vec![None; self.dim()];
        let mut new_pos = 0usize;
        for (b, &(top, l)) in self.blocks.iter().enumerate() {
            let bot = top - l as i32 + 1;
            let spans = bot <= z && z <= top;
            let new_top = if top > z { top - 1 } else { top };
            let new_len = if spans { l - 1 } else { l };
            if new_len == 0 {
                continue;
            }
            new_blocks.push((new_top, new_len));
            for k in 0..l as usize {
                let deg = top - k as i32;
                if deg == z && spans {
                    continue;
                }
                let new_k = if spans && deg < z { k - 1 } else { k };
                keep[off[b] + k] = Some(new_pos + new_k);
            }
            new_pos += new_len as usize;
        }
        let new_dim = new_pos;
        let mut new_gens: Vec<Vec<u32>> = Vec::new();
        for (d, m) in self.u_rows_by_degree() {
            if d == z {
                continue;
            }
            for i in 0..m.rows() {
                let mut v = vec![0u32; new_dim];
                for (j, &c) in m.row(i).iter().enumerate() {
                    if c != 0 {
                        if let Some(nj) = keep[j] {
                            v[nj] = c;
                        }
                    }
                }
                new_gens.push(v);
            }
        }
        GradedPair::new(self.n, self.p, new_blocks, new_gens).expect("deletion keeps shape")
    }

    /// Quotient by the socle part at the given degree. Fails when the
    /// subspace meets that socle: the quotient pair would not embed.
    pub fn h_quotient(&self, z: i32) -> Result<GradedPair, GradedError> {
        let off = self.offsets();
        let mut new_blocks: Vec<(i32, u32)> = Vec::new();
        let mut keep: Vec<Option<usize>> = vec![None; self.dim()];
        let mut new_pos = 0usize;
        let old_u: usize = self.u_rows_by_degree().values().map(|m| m.rows()).sum();
        for (b, &(top, l)) in self.blocks.iter().enumerate() {
            let bot = top - l as i32 + 1;
            let chop = bot == z;
            let new_len = if chop { l - 1 } else { l };
            if new_len == 0 {
                continue;
            }
            new_blocks.push((top, new_len));
            for k in 0..new_len as usize {
                keep[off[b] + k] = Some(new_pos + k);
            }
            new_pos += new_len as usize;
        }
        let new_dim = new_pos;
        let mut new_gens = Vec::new();
        for (_, m) in self.u_rows_by_degree() {
            for i in 0..m.rows() {
                let mut v = vec![0u32; new_dim];
                for (j, &c) in m.row(i).iter().enumerate() {
                    if c != 0 {
                        if let Some(nj) = keep[j] {
                            v[nj] = c;
                        }
                    }
                }
                new_gens.push(v);
            }
        }
        let out = GradedPair::new(self.n, self.p, new_blocks, new_gens)?;
        let new_u: usize = out.u_rows_by_degree().values().map(|m| m.rows()).sum();
        if new_u != old_u {
            return Err(GradedError::NonGorenstein);
        }
        Ok(out)
    }

    fn check_solid(&self, s: i32, t: i32, strict: bool) -> Result<(), GradedError> {
        for &(top, l) in &self.blocks {
            let bot = top - l as i32 + 1;
            let ok = if strict {
                bot < s && top > t
            } else {
                bot <= s && top >= t
            };
            if !ok {
                return Err(GradedError::ShapeViolation(format!(
                    "block [{}..{}] does not straddle [{}..{}]",
                    bot, top, s, t
                )));
            }
        }
        let dims = self.dim_vector();
        for (i, (&vd, &ud)) in dims.v.iter().zip(&dims.u).enumerate() {
            let d = dims.lo + i as i32;
            if d < s && vd != ud {
                return Err(GradedError::ShapeViolation(format!(
                    "subspace not full below the window at degree {}",
                    d
                )));
            }
            if d > t && ud != 0 {
                return Err(GradedError::ShapeViolation(format!(
                    "subspace does not vanish above the window at degree {}",
                    d
                )));
            }
        }
        Ok(())
    }

    /// For a strongly solid pair: passes to `(U/soc V, TV/soc V)`.
    /// Every block shrinks by a box at each end.
    pub fn solid_down(&self, s: i32, t: i32) -> Result<GradedPair, GradedError> {
        self.check_solid(s, t, true)?;
        let off = self.offsets();
        let mut new_blocks = Vec::new();
        for &(top, l) in &self.blocks {
            if l < 2 {
                return Err(GradedError::ShapeViolation(
                    "block too short to shrink".into(),
                ));
            }
            new_blocks.push((top - 1, l - 2));
        }
        let new_off: Vec<usize> = {
            let mut o = vec![0usize];
            for &(_, l) in &new_blocks {
                o.push(o.last().unwrap() + l as usize);
            }
            o
        };
        let new_dim = *new_off.last().unwrap();
        let mut new_gens = Vec::new();
        for (d, m) in self.u_rows_by_degree() {
            if d < s {
                continue; // regenerated as full rows below the window
            }
            for i in 0..m.rows() {
                let mut v = vec![0u32; new_dim];
                for (b, &(_, l)) in self.blocks.iter().enumerate() {
                    for k in 0..l as usize {
                        let c = m.row(i)[off[b] + k];
                        if c == 0 {
                            continue;
                        }
                        if k == 0 {
                            return Err(GradedError::ShapeViolation(
                                "subspace not inside the radical".into(),
                            ));
                        }
                        if k - 1 < (l - 2) as usize {
                            v[new_off[b] + k - 1] = c;
                        } // k = l-1 is the removed socle box
                    }
                }
                new_gens.push(v);
            }
        }
        // fill the part below the window
        for (b, &(top, l)) in new_blocks.iter().enumerate() {
            // the box at degree s-1, if the block reaches it
            let k = top - (s - 1);
            if k >= 0 && (k as u32) < l {
                let mut v = vec![0u32; new_dim];
                v[new_off[b] + k as usize] = 1;
                new_gens.push(v);
            }
            let _ = top;
        }
        GradedPair::new(self.n, self.p, new_blocks, new_gens)
    }

    /// Inverse construction: every block grows by a box at each end, the
    /// subspace keeps its window part and becomes full below it.
    pub fn solid_up(&self, s: i32, t: i32) -> Result<GradedPair, GradedError> {
        self.check_solid(s, t, false)?;
        let off = self.offsets();
        let mut new_blocks = Vec::new();
        for &(top, l) in &self.blocks {
            new_blocks.push((top + 1, l + 2));
        }
        let new_off: Vec<usize> = {
            let mut o = vec![0usize];
            for &(_, l) in &new_blocks {
                o.push(o.last().unwrap() + l as usize);
            }
            o
        };
        let new_dim = *new_off.last().unwrap();
        let mut new_gens = Vec::new();
        for (d, m) in self.u_rows_by_degree() {
            if d < s {
                continue;
            }
            for i in 0..m.rows() {
                let mut v = vec![0u32; new_dim];
                for (b, &(_, l)) in self.blocks.iter().enumerate() {
                    for k in 0..l as usize {
                        let c = m.row(i)[off[b] + k];
                        if c != 0 {
                            v[new_off[b] + k + 1] = c;
                        }
                    }
                }
                new_gens.push(v);
            }
        }
        for (b, &(top, l)) in new_blocks.iter().enumerate() {
            let k = top - (s - 1);
            if k >= 0 && (k as u32) < l {
                let mut v = vec![0u32; new_dim];
                v[new_off[b] + k as usize] = 1;
                new_gens.push(v);
            }
        }
        GradedPair::new(self.n + 2, self.p, new_blocks, new_gens)
    }
}

/// The homological bilinear form of the commutative ladder algebra over the
/// degree window `[lo, hi]` shared by both vectors (they are zero-padded to
/// a common range).
pub fn euler_form(x: &DimVector, y: &DimVector) -> i64 {
    let lo = x.lo.min(y.lo);
    let hi = (x.lo + x.v.len() as i32 - 1).max(y.lo + y.v.len() as i32 - 1);
    let get = |d: &DimVector, row: char, deg: i32| -> i64 {
        let idx = deg - d.lo;
        if idx < 0 || idx as usize >= d.v.len() {
            0
        } else if row == 'v' {
            d.v[idx as usize]
        } else {
            d.u[idx as usize]
        }
    };
    let mut total = 0i64;
    for deg in lo..=hi {
        // vertex terms
        total += get(x, 'v', deg) * get(y, 'v', deg);
        total += get(x, 'u', deg) * get(y, 'u', deg);
        // arrows within rows (degree deg -> deg-1), for deg > lo
        if deg > lo {
            total -= get(x, 'v', deg) * get(y, 'v', deg - 1);
            total -= get(x, 'u', deg) * get(y, 'u', deg - 1);
        }
        // vertical arrows
        total -= get(x, 'u', deg) * get(y, 'v', deg);
        // relation term
        if deg > lo {
            total += get(x, 'u', deg) * get(y, 'v', deg - 1);
        }
    }
    total
}

/// Exact dimension of the space of degree-zero morphisms commuting with all
/// structure maps. Solved as one linear system over the per-degree matrix
/// presentation.
pub fn graded_hom_dim(a: &GradedPair, b: &GradedPair) -> usize {
    let p = a.prime();
    assert_eq!(p, b.prime());
    let lo = a.lo().min(b.lo());
    let hi = a.hi().max(b.hi());
    let len = (hi - lo + 1) as usize;
    // per-degree bases: for V-rows, coordinates of each degree; for U-rows,
    // the per-degree bases of the closure.
    struct Rep {
        v_dims: Vec<usize>,
        u_dims: Vec<usize>,
        // alpha[k]: degree lo+k+1 -> lo+k
        alpha_v: Vec<Matrix>,
        alpha_u: Vec<Matrix>,
        beta: Vec<Matrix>,
    }
    fn rep_of(gp: &GradedPair, lo: i32, len: usize) -> Rep {
        let p = gp.prime();
        let degs = gp.coordinate_degrees();
        let dim = gp.dim();
        // V coordinates per degree
        let mut v_idx: Vec<Vec<usize>> = vec![Vec::new(); len];
        for (j, &d) in degs.iter().enumerate() {
            v_idx[(d - lo) as usize].push(j);
        }
        let u_rows = gp.u_rows_by_degree();
        let u_bases: Vec<Matrix> = (0..len)
            .map(|k| {
                u_rows
                    .get(&(lo + k as i32))
                    .cloned()
                    .unwrap_or_else(|| Matrix::zero(0, dim, p))
            })
            .collect();
        let v_dims: Vec<usize> = v_idx.iter().map(|v| v.len()).collect();
        let u_dims: Vec<usize> = u_bases.iter().map(|m| m.rows()).collect();
        let mut alpha_v = Vec::new();
        let mut alpha_u = Vec::new();
        let mut beta = Vec::new();
        for k in 0..len {
            // beta[k]: U_(lo+k) -> V_(lo+k): coordinates of basis rows
            let mut bm = Matrix::zero(0, v_dims[k], p);
            for i in 0..u_bases[k].rows() {
                let row = u_bases[k].row(i);
                let v: Vec<u32> = v_idx[k].iter().map(|&j| row[j]).collect();
                bm.push_row(&v);
            }
            beta.push(bm);
            if k + 1 < len {
                // alpha_v[k]: V_(lo+k+1) -> V_(lo+k)
                let mut am = Matrix::zero(0, v_dims[k], p);
                for &j in &v_idx[k + 1] {
                    let mut e = vec![0u32; dim];
                    e[j] = 1;
                    let s = gp.shift(&e);
                    am.push_row(&v_idx[k].iter().map(|&jj| s[jj]).collect::<Vec<_>>());
                }
                alpha_v.push(am);
                // alpha_u[k]: U_(lo+k+1) -> U_(lo+k): solve in the basis
                let mut um = Matrix::zero(0, u_dims[k].max(0), p);
                if u_dims[k + 1] > 0 {
                    let mut shifted = Matrix::zero(0, dim, p);
                    for i in 0..u_bases[k + 1].rows() {
                        shifted.push_row(&gp.shift(u_bases[k + 1].row(i)));
                    }
                    um = if u_dims[k] > 0 {
                        u_bases[k]
                            .solve_rows(&shifted)
                            .expect("closure is closed under the shift")
                    } else {
                        assert!(shifted.is_zero());
                        Matrix::zero(u_dims[k + 1], 0, p)
                    };
                }
                alpha_u.push(um);
            }
        }
        Rep {
            v_dims,
            u_dims,
            alpha_v,
            alpha_u,
            beta,
        }
    }
    let ra = rep_of(a, lo, len);
    let rb = rep_of(b, lo, len);
    // unknowns: f_k (ra.v x rb.v), g_k (ra.u x rb.u)
    let mut f_off = Vec::new();
    let mut g_off = Vec::new();
    let mut total = 0usize;
    for k in 0..len {
        f_off.push(total);
        total += ra.v_dims[k] * rb.v_dims[k];
    }
    for k in 0..len {
        g_off.push(total);
        total += ra.u_dims[k] * rb.u_dims[k];
    }
    if total == 0 {
        return 0;
    }
    let p32 = p;
    let mut eqs: Vec<Vec<u32>> = Vec::new();
    let mut add_commute = |left: &Matrix,  // map A_(k+1) -> A_k on the a side
                           right: &Matrix, // map B_(k+1) -> B_k on the b side
                           hi_off: usize,
                           hi_rows: usize,
                           hi_cols: usize,
                           lo_off: usize,
                           lo_cols: usize| {
        // unknown blocks F_hi (hi_rows x hi_cols at hi_off) and
        // F_lo (left.cols x lo_cols at lo_off):
        // constraint: left * F_lo = F_hi * right
        for i in 0..hi_rows {
            for j in 0..lo_cols {
                let mut eq = vec![0u32; total];
                // (left . F_lo)[i][j] = sum_m left[i][m] F_lo[m][j]
                for m in 0..left.cols() {
                    let c = left.get(i, m);
                    if c != 0 {
                        eq[lo_off + m * lo_cols + j] = (eq[lo_off + m * lo_cols + j] + c) % p32;
                    }
                }
                // minus (F_hi . right)[i][j] = sum_m F_hi[i][m] right[m][j]
                for m in 0..hi_cols {
                    let c = right.get(m, j);
                    if c != 0 {
                        let idx = hi_off + i * hi_cols + m;
                        eq[idx] = (eq[idx] + p32 - c) % p32;
                    }
                }
                if eq.iter().any(|&c| c != 0) {
                    eqs.push(eq);
                }
            }
        }
    };
    for k in 0..len - 1 {
        // V-row: alpha_a[k] . f_k = f_(k+1) . alpha_b[k]
        add_commute(
            &ra.alpha_v[k],
            &rb.alpha_v[k],
            f_off[k + 1],
            ra.v_dims[k + 1],
            rb.v_dims[k + 1],
            f_off[k],
            rb.v_dims[k],
        );
        // U-row
        add_commute(
            &ra.alpha_u[k],
            &rb.alpha_u[k],
            g_off[k + 1],
            ra.u_dims[k + 1],
            rb.u_dims[k + 1],
            g_off[k],
            rb.u_dims[k],
        );
    }
    // verticals: beta_a[k] . f_k = g_k . beta_b[k]
    for k in 0..len {
        add_commute(
            &ra.beta[k],
            &rb.beta[k],
            g_off[k],
            ra.u_dims[k],
            rb.u_dims[k],
            f_off[k],
            rb.v_dims[k],
        );
    }
    if eqs.is_empty() {
        return total;
    }
    let mut system = Matrix::zero(0, total, p);
    for eq in eqs {
        system.push_row(&eq);
    }
    total - system.rank()
}

// ---------------------------------------------------------------------------
// Named constructions.
// ---------------------------------------------------------------------------

/// The graded pair of the standard-family member: global `[6,4,2]` with tops
/// `(6,5,4)`, subspace generated in degrees 4 and 3.
pub fn standard_graded(c0: u32, c1: u32, p: u32) -> GradedPair {
    // boxes: block 0 = [6] top 6, block 1 = [4] top 5, block 2 = [2] top 4
    let blocks = vec![(6, 6), (5, 4), (4, 2)];
    let mut u1 = vec![0u32; 12];
    u1[2] = 1; // T^2 v1, degree 4
    u1[6 + 1] = c0 % p; // c0 T v2, degree 4
    u1[10] = c1 % p; // c1 v3, degree 4
    let mut u2 = vec![0u32; 12];
    u2[6 + 2] = 1; // T^2 v2, degree 3
    u2[10 + 1] = 1; // T v3, degree 3
    GradedPair::new(6, p, blocks, vec![u1, u2]).expect("valid block data")
}

/// The orthogonal pair generating the standard family: the picket `([4],[6])`
/// and the bipicket `([2],[4,2],[3,1])`, both graded.
pub fn kronecker_pair_graded(p: u32) -> (GradedPair, GradedPair) {
    let x = GradedPair::new(
        6,
        p,
        vec![(6, 6)],
        vec![{
            let mut g = vec![0u32; 6];
            g[2] = 1; // T^2 x, degree 4
            g
        }],
    )
    .unwrap();
    let y = GradedPair::new(
        6,
        p,
        vec![(5, 4), (4, 2)],
        vec![{
            let mut g = vec![0u32; 6];
            g[2] = 1; // T^2 y1, degree 3
            g[4 + 1] = 1; // T y2, degree 3
            g
        }],
    )
    .unwrap();
    (x, y)
}

/// The four pairwise orthogonal width-6 modules with scalar endomorphisms,
/// with their uwb-vectors `(5,1,1), (2,2,2), (3,6,2), (2,3,1)`.
pub fn width6_quadruple(p: u32) -> Vec<(&'static str, GradedPair, (u32, u32, u32))> {
    // A: [6] top 6, subspace T v (degree 5)
    let a = GradedPair::new(
        6,
        p,
        vec![(6, 6)],
        vec![{
            let mut g = vec![0u32; 6];
            g[1] = 1;
            g
        }],
    )
    .unwrap();
    // B: [3,1] tops (5,4): subspace T y1 + y2 (degree 4)
    let b = GradedPair::new(
        6,
        p,
        vec![(5, 3), (4, 1)],
        vec![{
            let mut g = vec![0u32; 4];
            g[1] = 1;
            g[3] = 1;
            g
        }],
    )
    .unwrap();
    // B': [6,3] tops (7,5): subspace T^3 y1 + T y2 (degree 4)
    let bp = GradedPair::new(
        6,
        p,
        vec![(7, 6), (5, 3)],
        vec![{
            let mut g = vec![0u32; 9];
            g[3] = 1;
            g[6 + 1] = 1;
            g
        }],
    )
    .unwrap();
    // C: [5] top 6, subspace T^3 x (degree 3)
    let c = GradedPair::new(
        6,
        p,
        vec![(6, 5)],
        vec![{
            let mut g = vec![0u32; 5];
            g[3] = 1;
            g
        }],
    )
    .unwrap();
    vec![
        ("A", a, (5, 1, 1)),
        ("B", b, (2, 2, 2)),
        ("B'", bp, (3, 6, 2)),
        ("C", c, (2, 3, 1)),
    ]
}

/// The interpolation family for n = 7 with uwb `(8,8,4)`: global `[7,5,3,1]`
/// with a two-generator subspace carrying the projective parameter.
pub fn s7_d_graded(c0: u32, c1: u32, p: u32) -> GradedPair {
    let blocks = vec![(7, 7), (6, 5), (5, 3), (4, 1)];
    let mut u1 = vec![0u32; 16];
    u1[2] = 1; // T^2 x1, degree 5
    u1[7 + 1] = c0 % p; // c0 T x2
    u1[12] = c1 % p; // c1 x3
    let mut u2 = vec![0u32; 16];
    u2[7 + 2] = 1; // T^2 x2, degree 4
    u2[12 + 1] = 1; // T x3
    u2[15] = 1; // x4
    GradedPair::new(7, p, blocks, vec![u1, u2]).expect("valid block data")
}

/// The trapezoid family for n = 7 with uwb `(9,7,4)`: same global space,
/// one extra subspace generator.
pub fn s7_e_graded(c0: u32, c1: u32, p: u32) -> GradedPair {
    let base = s7_d_graded(c0, c1, p);
    let mut u3 = vec![0u32; 16];
    u3[12 + 2] = 1; // T^2 x3, degree 3
    let mut gens = base.gens.clone();
    gens.push(u3);
    GradedPair::new(7, p, base.blocks.clone(), gens).expect("valid block data")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    UnknownFamily(String),
    BadParameter(String),
}

impl std::fmt::Display for FamilyError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilyError::UnknownFamily(s) => write!(f, "unknown family: {}", s),
            FamilyError::BadParameter(s) => write!(f, "bad parameter: {}", s),
        }
    }
}

impl std::error::Error for FamilyError {}

/// Checks that `c` is a valid tuple of projective coordinates mod p.
fn check_projective(c: &[u32], arity: usize, p: u32) -> Result<(), FamilyError> {
    if c.len() != arity {
        return Err(FamilyError::BadParameter(format!(
            "expected {} homogeneous coordinates, got {}",
            arity,
            c.len()
        )));
    }
    if c.iter().all(|&x| x % p == 0) {
        return Err(FamilyError::BadParameter(
            "projective coordinates must not all vanish".into(),
        ));
    }
    Ok(())
}

/// Builds the named parameter families. `c` holds homogeneous coordinates of
/// the parameter (length 2, or 3 for the plane family, or 1 for the scalar
/// family).
pub fn family(name: &str, c: &[u32], p: u32) -> Result<SubspacePair, FamilyError> {
    match name {
        // S(6): global [6,4,2], uwb (6,6,3)
        "standard_s6" => {
            check_projective(c, 2, p)?;
            Ok(standard_graded(c[0], c[1], p).push_down())
        }
        // S(9), level 1: global [9,7,6,4,3,1], uwb (6,24,6)
        "s9_p1" => {
            check_projective(c, 2, p)?;
            let lens = [6u32, 3, 9, 7, 4, 1];
            let off = offsets(&lens);
            let dim = 30usize;
            let mut u1 = vec![0u32; dim];
            u1[off[0] + 4] = 1; // T^4 x0
            u1[off[1] + 2] = 1; // T^2 x1
            let mut u2 = vec![0u32; dim];
            u2[off[0] + 3] = c[0] % p;
            u2[off[1] + 1] = c[1] % p;
            u2[off[2] + 5] = 1;
            u2[off[3] + 4] = 1;
            u2[off[4] + 2] = 1;
            u2[off[5]] = 1;
            Ok(SubspacePair::from_block_gens(9, p, &lens, &[u1, u2]))
        }
        // S(12), plane family at level 1: global [12,10,9,7,6,4,3,1]
        "s12_p2" => {
            check_projective(c, 3, p)?;
            let lens = [9u32, 6, 3, 12, 10, 7, 4, 1];
            let off = offsets(&lens);
            let dim = 52usize;
            let mut u1 = vec![0u32; dim];
            u1[off[0] + 6] = 1;
            u1[off[1] + 4] = 1;
            u1[off[2] + 2] = 1;
            let mut u2 = vec![0u32; dim];
            u2[off[0] + 5] = c[0] % p;
            u2[off[1] + 3] = c[1] % p;
            u2[off[2] + 1] = c[2] % p;
            u2[off[3] + 7] = 1;
            u2[off[4] + 6] = 1;
            u2[off[5] + 4] = 1;
            u2[off[6] + 2] = 1;
            u2[off[7]] = 1;
            Ok(SubspacePair::from_block_gens(12, p, &lens, &[u1, u2]))
        }
        // S(7): uwb (8,8,4)
        "s7_d" => {
            check_projective(c, 2, p)?;
            Ok(s7_d_graded(c[0], c[1], p).push_down())
        }
        // S(7): uwb (9,7,4)
        "s7_e" => {
            check_projective(c, 2, p)?;
            Ok(s7_e_graded(c[0], c[1], p).push_down())
        }
        // S(7): uwb (6,10,4), global [7,5,3,1]
        "s7_6_10_4" => {
            check_projective(c, 2, p)?;
            let lens = [7u32, 1, 5, 3];
            let off = offsets(&lens);
            let dim = 16usize;
            let mut u1 = vec![0u32; dim];
            u1[off[0] + 3] = 1; // T^3 x1, degree 4
            u1[off[1]] = 1; // x2
            u1[off[2] + 2] = c[0] % p;
            u1[off[3] + 1] = c[1] % p;
            let mut u2 = vec![0u32; dim];
            u2[off[2] + 3] = 1; // T^3 x3, degree 3
            u2[off[3] + 2] = 1; // T^2 x4
            Ok(SubspacePair::from_block_gens(7, p, &lens, &[u1, u2]))
        }
        // S(7), subspace height 3: uwb (7,14,5), global [7,6,4,3,1]
        "s7_s3_714" => {
            check_projective(c, 2, p)?;
            let lens = [7u32, 4, 1, 6, 3];
            let off = offsets(&lens);
            let dim = 21usize;
            let mut u1 = vec![0u32; dim];
            u1[off[3] + 3] = 1; // T^3 x4, degree 3
            u1[off[4] + 1] = 1; // T x5
            let mut u2 = vec![0u32; dim];
            u2[off[4] + 1] = 1; // T x5, degree 3
            u2[off[0] + 4] = 1; // T^4 x1
            u2[off[1] + 2] = 1; // T^2 x2
            u2[off[2]] = 1; // x3
            let mut u3 = vec![0u32; dim];
            u3[off[4] + 2] = c[0] % p; // c0 T^2 x5, degree 2
            u3[off[1] + 3] = c[1] % p; // c1 T^3 x2
            Ok(SubspacePair::from_block_gens(7, p, &lens, &[u1, u2, u3]))
        }
        // S(8): uwb (6,17,5), global [8,6,5,3,1]
        "s8_6_17_5" => {
            check_projective(c, 2, p)?;
            let lens = [8u32, 6, 1, 5, 3];
            let off = offsets(&lens);
            let dim = 23usize;
            let mut u1 = vec![0u32; dim];
            u1[off[0] + 4] = 1; // T^4 x1, degree 4
            u1[off[1] + 3] = 1; // T^3 x2
            u1[off[2]] = 1; // x3
            u1[off[3] + 2] = c[0] % p; // c0 T^2 x4
            u1[off[4] + 1] = c[1] % p; // c1 T x5
            let mut u2 = vec![0u32; dim];
            u2[off[3] + 3] = 1; // T^3 x4, degree 3
            u2[off[4] + 2] = 1; // T^2 x5
            Ok(SubspacePair::from_block_gens(8, p, &lens, &[u1, u2]))
        }
        // S(6), width 4, level 1: global [6,4,3,1], scalar parameter
        "s6_width4_y" => {
            check_projective(c, 1, p)?;
            let lens = [3u32, 6, 4, 1];
            let off = offsets(&lens);
            let dim = 14usize;
            let mut u1 = vec![0u32; dim];
            u1[off[0] + 2] = 1; // T^2 x0
            let mut u2 = vec![0u32; dim];
            u2[off[0] + 1] = c[0] % p; // c T x0
            u2[off[1] + 3] = 1; // T^3 x1
            u2[off[2] + 2] = 1; // T^2 x2
            u2[off[3]] = 1; // x3
            Ok(SubspacePair::from_block_gens(6, p, &lens, &[u1, u2]))
        }
        // S(6k), gradable homogeneous family: global [6k,4k,2k]
        "gradable_homogeneous" => {
            check_projective(c, 2, p)?;
            Err(FamilyError::BadParameter(
                "this family needs the number of steps; pass --ell".into(),
            ))
        }
        other => Err(FamilyError::UnknownFamily(other.into())),
    }
}

/// The gradable homogeneous family in S(6k): global `[6k,4k,2k]` with
/// subspace generated by `T^2k v1 + c0 T^k v2 + c1 v3` and `T^2k v2 + T^k v3`.
pub fn gradable_homogeneous_family(
    ell: u32,
    c: &[u32],
    p: u32,
) -> Result<SubspacePair, FamilyError> {
    check_projective(c, 2, p)?;
    if ell == 0 {
        return Err(FamilyError::BadParameter("ell must be positive".into()));
    }
    let n = 6 * ell;
    let lens = [6 * ell, 4 * ell, 2 * ell];
    let off = offsets(&lens);
    let dim = (12 * ell) as usize;
    let mut u1 = vec![0u32; dim];
    u1[off[0] + 2 * ell as usize] = 1;
    u1[off[1] + ell as usize] = c[0] % p;
    u1[off[2]] = c[1] % p;
    let mut u2 = vec![0u32; dim];
    u2[off[1] + 2 * ell as usize] = 1;
    u2[off[2] + ell as usize] = 1;
    Ok(SubspacePair::from_block_gens(n, p, &lens, &[u1, u2]))
}

fn offsets(lens: &[u32]) -> Vec<usize> {
    let mut off = vec![0usize];
    for &l in lens {
        off.push(off.last().unwrap() + l as usize);
    }
    off
}

/// The self-extension of the standard family along the regular Kronecker
/// module of quasi-length `ell` at `c`: the global space is `ell` copies of
/// `[6,4,2]`; consecutive copies are linked through the Jordan block.
pub fn jordan_extension_standard(c: &[u32], ell: u32, p: u32) -> Result<SubspacePair, FamilyError> {
    check_projective(c, 2, p)?;
    if ell == 0 {
        return Err(FamilyError::BadParameter("ell must be positive".into()));
    }
    let l = ell as usize;
    // Kronecker maps on k^l for R_c[l]: zeta and eta with one the identity
    // and the other the Jordan block at the parameter.
    let (zeta, eta) = kronecker_regular_matrices(c, ell, p)?;
    let mut lens = Vec::new();
    for _ in 0..l {
        lens.extend_from_slice(&[6u32, 4, 2]);
    }
    let off = offsets(&lens);
    let dim = 12 * l;
    let block = |copy: usize, which: usize| -> usize { off[copy * 3 + which] };
    let mut gens = Vec::new();
    for t in 0..l {
        // u1^t = T^2 v1^t + sum_s zeta[s][t] T v2^s + sum_s eta[s][t] v3^s
        let mut u1 = vec![0u32; dim];
        u1[block(t, 0) + 2] = 1;
        for s in 0..l {
            u1[block(s, 1) + 1] = (u1[block(s, 1) + 1] + zeta.get(s, t)) % p;
            u1[block(s, 2)] = (u1[block(s, 2)] + eta.get(s, t)) % p;
        }
        // u2^t = T^2 v2^t + T v3^t
        let mut u2 = vec![0u32; dim];
        u2[block(t, 1) + 2] = 1;
        u2[block(t, 2) + 1] = 1;
        gens.push(u1);
        gens.push(u2);
    }
    Ok(SubspacePair::from_block_gens(6, p, &lens, &gens))
}

/// Matrices of the regular Kronecker module `R_c[l]`: for `c = (c0 : c1)`
/// with `c0` invertible, `(identity, (c1/c0) + nilpotent Jordan block)`;
/// for `c = (0 : 1)`, `(nilpotent Jordan block, identity)`.
fn kronecker_regular_matrices(
    c: &[u32],
    ell: u32,
    p: u32,
) -> Result<(Matrix, Matrix), FamilyError> {
    check_projective(c, 2, p)?;
    let l = ell as usize;
    let id = Matrix::identity(l, p);
    let mut jordan = Matrix::zero(l, l, p);
    for s in 0..l - 1 {
        jordan.set(s, s + 1, 1);
    }
    if c[0] % p != 0 {
        let inv = crate::fp::Fp::new(c[0] as i64, p).inv();
        let scalar = crate::fp::Fp::new(c[1] as i64, p).mul(inv);
        let mut eta = jordan;
        for s in 0..l {
            eta.set(s, s, scalar.val());
        }
        Ok((id, eta))
    } else {
        Ok((jordan, id))
    }
}

/// Interpolation in S(7): a filtration with `d1` factors of uwb `(8,7,3)`,
/// `d2` of `(8,8,4)` and `d3` of `(7,8,3)`, built from the self-extension of
/// the interpolation family by passing to a subquotient along copies of the
/// length-one block.
pub fn interpolate_s7(
    d1: u32,
    d2: u32,
    d3: u32,
    c: &[u32],
    p: u32,
) -> Result<SubspacePair, FamilyError> {
    check_projective(c, 2, p)?;
    let ell = d1 + d2 + d3;
    if ell == 0 {
        return Err(FamilyError::BadParameter("need at least one factor".into()));
    }
    let l = ell as usize;
    let (zeta, eta) = kronecker_regular_matrices(c, ell, p)?;
    let mut lens = Vec::new();
    for _ in 0..l {
        lens.extend_from_slice(&[7u32, 5, 3, 1]);
    }
    let off = offsets(&lens);
    let dim = 16 * l;
    let block = |copy: usize, which: usize| -> usize { off[copy * 4 + which] };
    let mut gens = Vec::new();
    for t in 0..l {
        let mut u1 = vec![0u32; dim];
        u1[block(t, 0) + 2] = 1;
        for s in 0..l {
            u1[block(s, 1) + 1] = (u1[block(s, 1) + 1] + zeta.get(s, t)) % p;
            u1[block(s, 2)] = (u1[block(s, 2)] + eta.get(s, t)) % p;
        }
        let mut u2 = vec![0u32; dim];
        u2[block(t, 1) + 2] = 1;
        u2[block(t, 2) + 1] = 1;
        u2[block(t, 3)] = 1;
        gens.push(u1);
        gens.push(u2);
    }
    let big = SubspacePair::from_block_gens(7, p, &lens, &gens);
    // V'' = all blocks except the length-one blocks of copies beyond d1+d2;
    // V' = the length-one blocks of the first d1 copies.
    let amb = big.dim_v() as usize;
    // After sorting, blocks are [7 x l][5 x l][3 x l][1 x l]; copy order is
    // preserved among equal lengths.
    let mut keep_rows = Matrix::zero(0, amb, p);
    let sorted_off = big.offsets();
    let blocks_per_len = l;
    for (bi, &part) in big.lambda().parts().iter().enumerate() {
        let copy = bi % blocks_per_len;
        let keep = part > 1 || copy < (d1 + d2) as usize;
        if keep {
            for k in 0..part as usize {
                let mut e = vec![0u32; amb];
                e[sorted_off[bi] + k] = 1;
                keep_rows.push_row(&e);
            }
        }
    }
    let (sub, sub_basis) = big.subobject(&keep_rows);
    // rows of V' in sub coordinates
    let mut vprime = Matrix::zero(0, sub.dim_v() as usize, p);
    for (bi, &part) in big.lambda().parts().iter().enumerate() {
        let copy = bi % blocks_per_len;
        if part == 1 && copy < d1 as usize {
            let mut e = vec![0u32; amb];
            e[sorted_off[bi]] = 1;
            let coords = sub_basis
                .solve_rows(&Matrix::from_rows(&[e], amb, p))
                .expect("kept block");
            vprime.push_row(coords.row(0));
        }
    }
    let (out, _) = sub.quotient(&vprime);
    Ok(out)
}
