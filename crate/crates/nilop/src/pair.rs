//! Invariant subspace pairs `X = (U, V)`: a nilpotent operator `T` with
//! `T^n = 0` on `V`, together with a `T`-invariant subspace `U`.
//!
//! The global space `V` is stored by its Jordan type `lambda` together with a
//! fixed box basis: coordinate `(i, j)` is `T^j x_i` where `x_i` generates the
//! `i`-th Jordan block and `0 <= j < lambda_i`. Blocks are ordered by
//! descending part, powers ascend within a block. The subspace is stored by a
//! list of generating row vectors; the module it generates is automatically
//! `T`-invariant, so no invariance check is ever needed.

use crate::matrix::Matrix;
use crate::partition::Partition;
use crate::rat::Rat;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubspacePair {
    n: u32,
    p: u32,
    lambda: Partition,
    gens: Matrix,
}

/// The isomorphism data `([U], [V], [V/U])` of a pair.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionTriple {
    pub u_part: Partition,
    pub v_part: Partition,
    pub w_part: Partition,
}

impl PartitionTriple {
    pub fn new(u_part: Partition, v_part: Partition, w_part: Partition) -> PartitionTriple {
        assert_eq!(
            u_part.size() + w_part.size(),
            v_part.size(),
            "inconsistent triple sizes"
        );
        PartitionTriple {
            u_part,
            v_part,
            w_part,
        }
    }
}

impl fmt::Debug for PartitionTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?},{:?})", self.u_part, self.v_part, self.w_part)
    }
}

/// The triple `([Omega V], [U], [W])`: the hidden filtration factors of the
/// projective cover of the global space.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ETriple {
    pub e0: Partition,
    pub e1: Partition,
    pub e2: Partition,
}

impl ETriple {
    /// Cyclic rotation `(E0\E1\E2) -> (E1\E2\E0)`.
    pub fn rotate(&self) -> ETriple {
        ETriple {
            e0: self.e1.clone(),
            e1: self.e2.clone(),
            e2: self.e0.clone(),
        }
    }

    pub fn total(&self) -> u32 {
        self.e0.size() + self.e1.size() + self.e2.size()
    }

    /// Width `|E| / n`; the triple must have total size divisible by `n`.
    pub fn width(&self, n: u32) -> u32 {
        assert_eq!(self.total() % n, 0, "triple size not divisible by n");
        self.total() / n
    }
}

/// All numeric invariants of a nonzero pair.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub uwb: (u32, u32, u32),
    pub pr: (Rat, Rat),
    pub q: Rat,
    pub d: Rat,
    pub m: u32,
    pub omega: u32,
    pub b: u32,
    pub c_n: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairError {
    BadJson(String),
    MissingKey(&'static str),
    NonPrime(u32),
    HeightExceedsBound { height: u32, n: u32 },
    PartsNotSorted,
    WrongVectorLength { expected: usize, got: usize },
    EntryOutOfRange(u32),
    ZeroObject,
    MismatchedContext,
}

impl fmt::Display for PairError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairError::BadJson(e) => write!(f, "malformed json: {}", e),
            PairError::MissingKey(k) => write!(f, "missing key: {}", k),
            PairError::NonPrime(p) => write!(f, "{} is not a prime", p),
            PairError::HeightExceedsBound { height, n } => {
                write!(f, "partition height {} exceeds bound n = {}", height, n)
            }
            PairError::PartsNotSorted => write!(f, "lambda must be weakly decreasing and positive"),
            PairError::WrongVectorLength { expected, got } => {
                write!(f, "generator has length {}, expected {}", got, expected)
            }
            PairError::EntryOutOfRange(v) => write!(f, "entry {} not reduced mod p", v),
            PairError::ZeroObject => write!(f, "invariants of the zero object are undefined"),
            PairError::MismatchedContext => {
                write!(f, "pairs live in different S(n) or over different primes")
            }
        }
    }
}

impl std::error::Error for PairError {}

/// JSON document shape for a pair.
#[derive(Serialize, Deserialize)]
struct PairDoc {
    n: u32,
    p: u32,
    lambda: Vec<u32>,
    gens: Vec<Vec<u32>>,
}

impl SubspacePair {
    /// Builds a pair from the Jordan type of `V` and generator rows of `U`.
    pub fn new(n: u32, p: u32, lambda: Partition, gen_rows: &[Vec<u32>]) -> SubspacePair {
        assert!(crate::fp::is_prime(p), "p = {} is not prime", p);
        assert!(lambda.height() <= n, "height exceeds n");
        let dim = lambda.size() as usize;
        let gens = Matrix::from_rows(gen_rows, dim, p);
        SubspacePair { n, p, lambda, gens }
    }

    pub fn zero(n: u32, p: u32) -> SubspacePair {
        SubspacePair::new(n, p, Partition::empty(), &[])
    }

    /// The picket `([t],[m])`.
    pub fn picket(n: u32, p: u32, t: u32, m: u32) -> SubspacePair {
        assert!(t <= m && m >= 1 && m <= n);
        let lambda = Partition::new(vec![m]);
        if t == 0 {
            SubspacePair::new(n, p, lambda, &[])
        } else {
            let mut g = vec![0u32; m as usize];
            g[(m - t) as usize] = 1;
            SubspacePair::new(n, p, lambda, &[g])
        }
    }

    pub fn bound(&self) -> u32 {
        self.n
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn dim_v(&self) -> u32 {
        self.lambda.size()
    }

    pub fn gen_rows(&self) -> &Matrix {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.lambda.is_empty()
    }

    pub fn same_context(&self, other: &SubspacePair) -> bool {
        self.n == other.n && self.p == other.p
    }

    /// Offsets of the blocks in box coordinates.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.lambda.parts().len() + 1);
        let mut acc = 0usize;
        for &part in self.lambda.parts() {
            off.push(acc);
            acc += part as usize;
        }
        off.push(acc);
        off
    }

    /// Applies `T` to a row vector in box coordinates.
    pub fn shift(&self, v: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; v.len()];
        let mut off = 0usize;
        for &part in self.lambda.parts() {
            let part = part as usize;
            for j in 0..part - 1 {
                out[off + j + 1] = v[off + j];
            }
            off += part;
        }
        out
    }

    /// The matrix of `T` acting on row vectors.
    pub fn t_matrix(&self) -> Matrix {
        let d = self.dim_v() as usize;
        let mut m = Matrix::zero(d, d, self.p);
        let mut off = 0usize;
        for &part in self.lambda.parts() {
            let part = part as usize;
            for j in 0..part - 1 {
                m.set(off + j, off + j + 1, 1);
            }
            off += part;
        }
        m
    }

    /// Canonical (RREF) basis of the module generated by the stored rows.
    pub fn u_basis(&self) -> Matrix {
        let d = self.dim_v() as usize;
        let mut all = Matrix::zero(0, d, self.p);
        for i in 0..self.gens.rows() {
            let mut v = self.gens.row_vec(i);
            while v.iter().any(|&x| x != 0) {
                all.push_row(&v);
                v = self.shift(&v);
            }
        }
        all.row_basis()
    }

    pub fn dim_u(&self) -> u32 {
        self.u_basis().rows() as u32
    }

    /// Canonical form: same pair with generators replaced by the RREF basis.
    pub fn canonical(&self) -> SubspacePair {
        let ub = self.u_basis();
        let rows: Vec<Vec<u32>> = (0..ub.rows()).map(|i| ub.row_vec(i)).collect();
        SubspacePair::new(self.n, self.p, self.lambda.clone(), &rows)
    }

    /// Jordan type of `T` restricted to the row space of `basis` (which must
    /// be `T`-invariant).
    fn jordan_type_on(&self, basis: &Matrix) -> Partition {
        let mut ranks = vec![basis.rows()];
        let mut cur = basis.clone();
        while cur.rows() > 0 {
            let mut next = Matrix::zero(0, cur.cols(), self.p);
            for i in 0..cur.rows() {
                next.push_row(&self.shift(cur.row(i)));
            }
            let nb = next.row_basis();
            ranks.push(nb.rows());
            cur = nb;
        }
        Partition::from_rank_sequence(&ranks)
    }

    /// Jordan type of the operator induced on `V / rowspace(basis)`.
    fn jordan_type_quotient(&self, basis: &Matrix) -> Partition {
        let d = self.dim_v() as usize;
        let k = basis.rows();
        let mut ranks = vec![d - k];
        let mut power = Matrix::identity(d, self.p);
        let t = self.t_matrix();
        loop {
            power = power.mul(&t);
            if power.is_zero() {
                ranks.push(0);
                break;
            }
            // rank of T^m on V/U = rank [T^m; U-basis] - dim U
            let stacked = power.vstack(basis);
            let r = stacked.rank() - k;
            ranks.push(r);
            if r == 0 {
                break;
            }
        }
        Partition::from_rank_sequence(&ranks)
    }

    /// The partition triple `([U], [V], [V/U])`.
    pub fn partition_triple(&self) -> PartitionTriple {
        let ub = self.u_basis();
        let u_part = self.jordan_type_on(&ub);
        let w_part = self.jordan_type_quotient(&ub);
        PartitionTriple::new(u_part, self.lambda.clone(), w_part)
    }

    /// The hidden filtration triple `([Omega V], [U], [W])`.
    pub fn e_triple(&self) -> ETriple {
        let tri = self.partition_triple();
        ETriple {
            e0: syzygy(&self.lambda, self.n),
            e1: tri.u_part,
            e2: tri.w_part,
        }
    }

    /// All numeric invariants; fails on the zero object.
    pub fn invariants(&self) -> Result<InvariantReport, PairError> {
        if self.is_zero() {
            return Err(PairError::ZeroObject);
        }
        let tri = self.partition_triple();
        let u = tri.u_part.size();
        let v = self.lambda.size();
        let w = v - u;
        let b = self.lambda.width();
        let omega = self.n * b - v;
        let c_n = self.lambda.multiplicity(self.n);
        let p_level = Rat::new(u as i128, b as i128);
        let r_colevel = Rat::new(w as i128, b as i128);
        let q = p_level + r_colevel;
        let m = omega.min(u).min(w);
        let d = Rat::new(m as i128, b as i128);
        debug_assert_eq!(omega + u + w, self.n * b);
        Ok(InvariantReport {
            uwb: (u, w, b),
            pr: (p_level, r_colevel),
            q,
            d,
            m,
            omega,
            b,
            c_n,
        })
    }

    pub fn uwb(&self) -> (u32, u32, u32) {
        let u = self.dim_u();
        (u, self.lambda.size() - u, self.lambda.width())
    }

    /// Direct sum; blocks of `other` are re-embedded after sorting all parts.
    pub fn direct_sum(&self, other: &SubspacePair) -> Result<SubspacePair, PairError> {
        if !self.same_context(other) {
            return Err(PairError::MismatchedContext);
        }
        // Tag parts with provenance, sort stably by descending size.
        let mut tagged: Vec<(u32, usize, usize)> = Vec::new(); // (part, which, block)
        for (i, &x) in self.lambda.parts().iter().enumerate() {
            tagged.push((x, 0, i));
        }
        for (i, &x) in other.lambda.parts().iter().enumerate() {
            tagged.push((x, 1, i));
        }
        tagged.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
        let lambda = Partition::new(tagged.iter().map(|t| t.0).collect());
        // Coordinate maps old -> new.
        let off_self = self.offsets();
        let off_other = other.offsets();
        let mut new_off = 0usize;
        let mut map_self = vec![0usize; self.dim_v() as usize];
        let mut map_other = vec![0usize; other.dim_v() as usize];
        for &(part, which, block) in &tagged {
            let src = if which == 0 {
                off_self[block]
            } else {
                off_other[block]
            };
            for j in 0..part as usize {
                if which == 0 {
                    map_self[src + j] = new_off + j;
                } else {
                    map_other[src + j] = new_off + j;
                }
            }
            new_off += part as usize;
        }
        let dim = new_off;
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for i in 0..self.gens.rows() {
            let mut v = vec![0u32; dim];
            for (k, &c) in self.gens.row(i).iter().enumerate() {
                v[map_self[k]] = c;
            }
            rows.push(v);
        }
        for i in 0..other.gens.rows() {
            let mut v = vec![0u32; dim];
            for (k, &c) in other.gens.row(i).iter().enumerate() {
                v[map_other[k]] = c;
            }
            rows.push(v);
        }
        Ok(SubspacePair::new(self.n, self.p, lambda, &rows))
    }

    /// The same pair regarded inside a different ambient category; the new
    /// bound must dominate the height.
    pub fn with_bound(&self, n: u32) -> SubspacePair {
        assert!(self.lambda.height() <= n);
        SubspacePair {
            n,
            p: self.p,
            lambda: self.lambda.clone(),
            gens: self.gens.clone(),
        }
    }

    /// Builds a pair from block lengths in any order plus generator rows in
    /// the corresponding box coordinates; blocks are sorted into a partition
    /// and the coordinates permuted along.
    pub fn from_block_gens(n: u32, p: u32, lengths: &[u32], gen_rows: &[Vec<u32>]) -> SubspacePair {
        let mut order: Vec<usize> = (0..lengths.len()).collect();
        order.sort_by(|&a, &b| lengths[b].cmp(&lengths[a]).then(a.cmp(&b)));
        let lambda = Partition::from_unsorted(lengths.to_vec());
        let mut old_off = vec![0usize];
        for &l in lengths {
            old_off.push(old_off.last().unwrap() + l as usize);
        }
        let dim = *old_off.last().unwrap();
        let mut map = vec![0usize; dim];
        let mut acc = 0usize;
        for &blk in &order {
            for t in 0..lengths[blk] as usize {
                map[old_off[blk] + t] = acc + t;
            }
            acc += lengths[blk] as usize;
        }
        let rows: Vec<Vec<u32>> = gen_rows
            .iter()
            .map(|r| {
                let mut v = vec![0u32; dim];
                for (k, &c) in r.iter().enumerate() {
                    v[map[k]] = c;
                }
                v
            })
            .collect();
        SubspacePair::new(n, p, lambda, &rows)
    }

    /// Rebuilds a pair from a nilpotent operator matrix and subspace rows,
    /// choosing a fresh Jordan box basis. Returns the pair together with the
    /// basis matrix whose rows are the box vectors in the given coordinates.
    pub fn from_operator(
        n: u32,
        p: u32,
        t_mat: &Matrix,
        u_rows: &Matrix,
    ) -> (SubspacePair, Matrix) {
        let d = t_mat.rows();
        assert_eq!(d, t_mat.cols());
        let chains = jordan_chains(t_mat);
        let mut lambda_parts: Vec<u32> = chains.iter().map(|c| c.len() as u32).collect();
        lambda_parts.sort_unstable_by(|a, b| b.cmp(a));
        let lambda = Partition::from_unsorted(lambda_parts);
        assert!(
            lambda.height() <= n,
            "operator is not nilpotent of index <= n"
        );
        let mut sorted: Vec<&Vec<Vec<u32>>> = chains.iter().collect();
        sorted.sort_by(|a, b| b.len().cmp(&a.len()));
        let mut basis = Matrix::zero(0, d, p);
        for chain in sorted {
            for v in chain {
                basis.push_row(v);
            }
        }
        // Close the subspace rows under T, then express in the new basis.
        let mut closure = Matrix::zero(0, d, p);
        for i in 0..u_rows.rows() {
            let mut v = u_rows.row_vec(i);
            while v.iter().any(|&x| x != 0) {
                closure.push_row(&v);
                let m = Matrix::from_rows(&[v], d, p);
                v = m.mul(t_mat).row_vec(0);
            }
        }
        let ub = closure.row_basis();
        let coords = basis
            .solve_rows(&ub)
            .expect("subspace rows not inside the space");
        let rows: Vec<Vec<u32>> = (0..coords.rows()).map(|i| coords.row_vec(i)).collect();
        (SubspacePair::new(n, p, lambda, &rows), basis)
    }

    /// The admissible subobject `(U ∩ K, K)` on a `T`-invariant subspace `K`.
    /// Returns the pair and the matrix mapping its box coordinates to rows of
    /// the ambient space.
    pub fn subobject(&self, k_rows: &Matrix) -> (SubspacePair, Matrix) {
        let kb = k_rows.row_basis();
        let m = kb.rows();
        // Operator of T restricted to K, in K-coordinates.
        let mut shifted = Matrix::zero(0, kb.cols(), self.p);
        for i in 0..m {
            shifted.push_row(&self.shift(kb.row(i)));
        }
        let t_local = kb
            .solve_rows(&shifted)
            .expect("subspace is not T-invariant");
        let u_int = self.u_basis().row_space_intersection(&kb);
        let u_local = kb.solve_rows(&u_int).expect("intersection outside K");
        let (pair, basis_local) = SubspacePair::from_operator(self.n, self.p, &t_local, &u_local);
        (pair, basis_local.mul(&kb))
    }

    /// The quotient pair `X / K` for a `T`-invariant subspace `K`, with the
    /// subspace `(U + K)/K`. Returns the pair, plus a section matrix mapping
    /// its box coordinates back to ambient rows (a choice of representatives).
    pub fn quotient(&self, k_rows: &Matrix) -> (SubspacePair, Matrix) {
        let (pair, section, _) = self.quotient_full(k_rows);
        (pair, section)
    }

    /// Like `quotient`, also returning the projection matrix sending ambient
    /// rows to box coordinates of the quotient.
    pub fn quotient_full(&self, k_rows: &Matrix) -> (SubspacePair, Matrix, Matrix) {
        let d = self.dim_v() as usize;
        let mut kb = k_rows.row_basis();
        let pivots = kb.rref_in_place();
        let mut is_pivot = vec![false; d];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..d).filter(|&j| !is_pivot[j]).collect();
        let qd = free.len();
        let project = |v: &[u32]| -> Vec<u32> {
            let red = kb.reduce_against(&pivots, v);
            free.iter().map(|&j| red[j]).collect()
        };
        // Induced operator on the quotient in free coordinates.
        let mut t_local = Matrix::zero(0, qd, self.p);
        for &j in &free {
            let mut e = vec![0u32; d];
            e[j] = 1;
            t_local.push_row(&project(&self.shift(&e)));
        }
        let ub = self.u_basis();
        let mut u_local = Matrix::zero(0, qd, self.p);
        for i in 0..ub.rows() {
            u_local.push_row(&project(ub.row(i)));
        }
        let (pair, basis_local) = SubspacePair::from_operator(self.n, self.p, &t_local, &u_local);
        // Section: free coordinates are genuine ambient coordinates.
        let mut section = Matrix::zero(0, d, self.p);
        for i in 0..basis_local.rows() {
            let mut amb = vec![0u32; d];
            for (k, &j) in free.iter().enumerate() {
                amb[j] = basis_local.get(i, k);
            }
            section.push_row(&amb);
        }
        // Projection: ambient row -> free coordinates -> quotient box coords.
        let mut free_images = Matrix::zero(0, qd, self.p);
        for j in 0..d {
            let mut e = vec![0u32; d];
            e[j] = 1;
            free_images.push_row(&project(&e));
        }
        let projection = if qd == 0 {
            Matrix::zero(d, 0, self.p)
        } else {
            let coords = basis_local
                .solve_rows(&free_images)
                .expect("projection must land in the quotient");
            coords
        };
        (pair, section, projection)
    }

    /// Serializes to the canonical JSON document.
    pub fn to_json(&self) -> String {
        let ub = self.u_basis();
        let doc = PairDoc {
            n: self.n,
            p: self.p,
            lambda: self.lambda.parts().to_vec(),
            gens: (0..ub.rows()).map(|i| ub.row_vec(i)).collect(),
        };
        serde_json::to_string(&doc).expect("serialization cannot fail")
    }

    /// Parses the JSON pair format, with distinct diagnostics per defect.
    pub fn from_json(text: &str) -> Result<SubspacePair, PairError> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| PairError::BadJson(e.to_string()))?;
        let obj = value
            .as_object()
            .ok_or_else(|| PairError::BadJson("expected object".into()))?;
        for key in ["n", "p", "lambda", "gens"] {
            if !obj.contains_key(key) {
                return Err(PairError::MissingKey(match key {
                    "n" => "n",
                    "p" => "p",
                    "lambda" => "lambda",
                    _ => "gens",
                }));
            }
        }
        let doc: PairDoc =
            serde_json::from_value(value).map_err(|e| PairError::BadJson(e.to_string()))?;
        if !crate::fp::is_prime(doc.p) {
            return Err(PairError::NonPrime(doc.p));
        }
        if !(doc.lambda.windows(2).all(|w| w[0] >= w[1]) && doc.lambda.iter().all(|&x| x > 0)) {
            return Err(PairError::PartsNotSorted);
        }
        let lambda = Partition::new(doc.lambda);
        if lambda.height() > doc.n {
            return Err(PairError::HeightExceedsBound {
                height: lambda.height(),
                n: doc.n,
            });
        }
        let dim = lambda.size() as usize;
        for g in &doc.gens {
            if g.len() != dim {
                return Err(PairError::WrongVectorLength {
                    expected: dim,
                    got: g.len(),
                });
            }
            for &e in g {
                if e >= doc.p {
                    return Err(PairError::EntryOutOfRange(e));
                }
            }
        }
        Ok(SubspacePair::new(doc.n, doc.p, lambda, &doc.gens))
    }
}

impl fmt::Debug for SubspacePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Pair(n={}, p={}, V={:?}, gens=",
            self.n, self.p, self.lambda
        )?;
        for i in 0..self.gens.rows() {
            write!(f, "{:?}", self.gens.row(i))?;
        }
        write!(f, ")")
    }
}

/// Syzygy partition: `Omega [m] = [n - m]`, parts equal to `n` vanish.
pub fn syzygy(lambda: &Partition, n: u32) -> Partition {
    Partition::from_unsorted(lambda.parts().iter().map(|&m| n - m).collect())
}

/// Jordan chain decomposition of a nilpotent operator given by its matrix
/// acting on row vectors. Each chain lists `t, tS, tS^2, ...` top first.
pub fn jordan_chains(op: &Matrix) -> Vec<Vec<Vec<u32>>> {
    let d = op.rows();
    let p = op.modulus();
    if d == 0 {
        return Vec::new();
    }
    // Kernel filtration.
    let mut kernels: Vec<Matrix> = vec![Matrix::zero(0, d, p)];
    let mut power = op.clone();
    loop {
        let k = power.left_nullspace().row_basis();
        let full = k.rows() == d;
        kernels.push(k);
        if full {
            break;
        }
        power = power.mul(op);
        assert!(kernels.len() <= d + 1, "operator is not nilpotent");
    }
    let h = kernels.len() - 1;
    let mut chains: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut carry = Matrix::zero(0, d, p);
    for j in (1..=h).rev() {
        let kj = &kernels[j];
        let kjm1 = &kernels[j - 1];
        let mut cur = kjm1.vstack(&carry).row_basis();
        let mut tops: Vec<Vec<u32>> = Vec::new();
        for i in 0..kj.rows() {
            let v = kj.row_vec(i);
            if !cur.row_span_contains(&v) {
                cur.push_row(&v);
                cur = cur.row_basis();
                tops.push(v);
            }
        }
        for t in &tops {
            let mut chain = Vec::with_capacity(j);
            let mut v = t.clone();
            for _ in 0..j {
                chain.push(v.clone());
                let m = Matrix::from_rows(&[v], d, p);
                v = m.mul(op).row_vec(0);
            }
            debug_assert!(v.iter().all(|&x| x == 0));
            chains.push(chain);
        }
        // Push every live chain one step down for the next level.
        let mut new_carry = Matrix::zero(0, d, p);
        for i in 0..carry.rows() {
            let m = Matrix::from_rows(&[carry.row_vec(i)], d, p);
            new_carry.push_row(&m.mul(op).row_vec(0));
        }
        for t in &tops {
            let m = Matrix::from_rows(&[t.clone()], d, p);
            new_carry.push_row(&m.mul(op).row_vec(0));
        }
        carry = new_carry;
    }
    let total: usize = chains.iter().map(|c| c.len()).sum();
    assert_eq!(total, d, "chain decomposition incomplete");
    chains
}

/// Deterministic pseudo-random generator (splitmix64).
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: u32) -> u32 {
        (self.next_u64() % bound as u64) as u32
    }
}

/// A pair with `u_dim` random generator vectors; deterministic in `seed`.
pub fn random_pair(n: u32, p: u32, lambda: &Partition, u_dim: u32, seed: u64) -> SubspacePair {
    assert!(u_dim <= lambda.size());
    let mut rng = Rng::new(seed);
    let dim = lambda.size() as usize;
    let rows: Vec<Vec<u32>> = (0..u_dim)
        .map(|_| (0..dim).map(|_| rng.below(p)).collect())
        .collect();
    SubspacePair::new(n, p, lambda.clone(), &rows)
}
