//! Brute-force checks that do not go through the closed formulas.
//!
//! The basis of `V = V⁺ ⊕ V⁻` is `e₁..e_p` (indices `0..p`) followed by
//! `f₁..f_q` (indices `p..n`). Matrices act on column vectors, so the entry
//! at `(i, j)` is the coefficient of basis vector `i` in the image of basis
//! vector `j`. All arithmetic is over `BigRational`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::orbits::{PairContext, Sign, SignedYoungDiagram};
use crate::strata::DualStratumLabel;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| !a[r * cols + col].is_zero()) else {
                continue;
            };
            for j in 0..cols {
                a.swap(pivot * cols + j, rank * cols + j);
            }
            let inv = a[rank * cols + col].recip();
            for j in col..cols {
                a[rank * cols + j] = &a[rank * cols + j] * &inv;
            }
            for r in 0..rows {
                if r == rank || a[r * cols + col].is_zero() {
                    continue;
                }
                let factor = a[r * cols + col].clone();
                for j in col..cols {
                    let v = &a[r * cols + j] - &factor * &a[rank * cols + j];
                    a[r * cols + j] = v;
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// A matrix in `g₁` together with the splitting of the basis into `V⁺`, `V⁻`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRepresentative {
    pub ctx: PairContext,
    pub entries: RationalMatrix,
}

impl MatrixRepresentative {
    pub fn n(&self) -> usize {
        self.ctx.n() as usize
    }

    pub fn plus_indices(&self) -> std::ops::Range<usize> {
        0..self.ctx.p() as usize
    }

    pub fn minus_indices(&self) -> std::ops::Range<usize> {
        self.ctx.p() as usize..self.n()
    }

    fn is_plus(&self, i: usize) -> bool {
        i < self.ctx.p() as usize
    }

    /// Maps `V⁺ → V⁻` and `V⁻ → V⁺` only.
    pub fn is_in_g1(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| {
            (0..n).all(|j| self.is_plus(i) != self.is_plus(j) || self.entries.get(i, j).is_zero())
        })
    }

    /// Jordan type of a nilpotent matrix from the ranks of its powers.
    /// `None` if the matrix is not nilpotent.
    pub fn jordan_type(&self) -> Option<Partition> {
        let n = self.n();
        let mut ranks = vec![n];
        let mut power = RationalMatrix::identity(n);
        for _ in 0..n {
            power = power.mul(&self.entries);
            ranks.push(power.rank());
        }
        if *ranks.last().unwrap() != 0 {
            return None;
        }
        // blocks of size ≥ k: ranks[k-1] - ranks[k]
        let at_least: Vec<usize> = (1..=n).map(|k| ranks[k - 1] - ranks[k]).collect();
        let mut parts = Vec::new();
        for k in 1..=n {
            let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
            parts.extend(std::iter::repeat_n(k as u32, exactly));
        }
        Some(Partition::from_unsorted(parts))
    }
}

struct BasisAllocator {
    next_plus: usize,
    next_minus: usize,
    p: usize,
    n: usize,
}

impl BasisAllocator {
    fn new(ctx: PairContext) -> Self {
        Self {
            next_plus: 0,
            next_minus: ctx.p() as usize,
            p: ctx.p() as usize,
            n: ctx.n() as usize,
        }
    }

    fn take(&mut self, sign: Sign) -> usize {
        match sign {
            Sign::Plus => {
                let i = self.next_plus;
                assert!(i < self.p, "V⁺ exhausted");
                self.next_plus += 1;
                i
            }
            Sign::Minus => {
                let i = self.next_minus;
                assert!(i < self.n, "V⁻ exhausted");
                self.next_minus += 1;
                i
            }
        }
    }

    /// One Jordan chain `v₁ → v₂ → ⋯ → v_L → 0` with alternating signs.
    fn chain(&mut self, x: &mut RationalMatrix, length: u32, start: Sign) {
        let mut sign = start;
        let mut prev: Option<usize> = None;
        for _ in 0..length {
            let v = self.take(sign);
            if let Some(u) = prev {
                x.set(v, u, BigRational::one());
            }
            prev = Some(v);
            sign = sign.flip();
        }
    }
}

/// The standard nilpotent representative `x_λ ∈ g₁` of `O_λ`.
pub fn representative(
    lambda: &SignedYoungDiagram,
    ctx: PairContext,
) -> Result<MatrixRepresentative> {
    ctx.check_signature(lambda)?;
    let n = ctx.n() as usize;
    let mut x = RationalMatrix::zeros(n, n);
    let mut alloc = BasisAllocator::new(ctx);
    for (length, sign) in lambda.rows() {
        alloc.chain(&mut x, length, sign);
    }
    Ok(MatrixRepresentative { ctx, entries: x })
}

/// Basis of `k = s(gl_p ⊕ gl_q)`: off-diagonal elementary matrices inside
/// each block and the diagonal differences `E₀₀ − E_ii`.
fn k_basis(ctx: PairContext) -> Vec<RationalMatrix> {
    let (p, n) = (ctx.p() as usize, ctx.n() as usize);
    let same_side = |i: usize, j: usize| (i < p) == (j < p);
    let mut basis = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && same_side(i, j) {
                let mut e = RationalMatrix::zeros(n, n);
                e.set(i, j, BigRational::one());
                basis.push(e);
            }
        }
    }
    for i in 1..n {
        let mut h = RationalMatrix::zeros(n, n);
        h.set(0, 0, BigRational::one());
        h.set(i, i, int(-1));
        basis.push(h);
    }
    basis
}

/// `dim {y ∈ k : [y, x] = 0}`, as `dim k` minus the rank of `y ↦ [y, x]`.
pub fn centralizer_dim_in_k(x: &MatrixRepresentative) -> u64 {
    let basis = k_basis(x.ctx);
    debug_assert_eq!(basis.len() as u64, x.ctx.dim_k());
    let n = x.n();
    let mut map = RationalMatrix::zeros(n * n, basis.len());
    for (col, y) in basis.iter().enumerate() {
        let bracket = y.mul(&x.entries).sub(&x.entries.mul(y));
        for i in 0..n {
            for j in 0..n {
                let v = bracket.get(i, j);
                if !v.is_zero() {
                    map.set(i * n + j, col, v.clone());
                }
            }
        }
    }
    basis.len() as u64 - map.rank() as u64
}

/// `dim K·x = dim k − dim z_k(x)`.
pub fn orbit_dimension_by_centralizer(x: &MatrixRepresentative) -> u64 {
    x.ctx.dim_k() - centralizer_dim_in_k(x)
}

/// `a + e` for the stratum `label`, with `a` the semisimple element whose
/// eigenvalues on the `j`-th `m_+ m_-` block are `±a_j`.
///
/// On block `j`, with basis `e_1..e_m ∈ V⁺`, `f_1..f_m ∈ V⁻`:
/// `x e_i = f_{m−i} + a_j f_{m−i+1}` and `x f_i = a_j e_{m−i+1} + e_{m−i+2}`,
/// where `f_0 = e_{m+1} = 0`. The rows of `μ` follow as plain Jordan chains.
pub fn stratum_point(
    label: &DualStratumLabel,
    ctx: PairContext,
    a: &[BigRational],
) -> Result<MatrixRepresentative> {
    label.validate(ctx)?;
    assert_eq!(a.len(), label.l() as usize);
    let n = ctx.n() as usize;
    let m = label.m() as usize;
    let mut x = RationalMatrix::zeros(n, n);
    let mut alloc = BasisAllocator::new(ctx);
    for aj in a {
        let e: Vec<usize> = (0..m).map(|_| alloc.take(Sign::Plus)).collect();
        let f: Vec<usize> = (0..m).map(|_| alloc.take(Sign::Minus)).collect();
        // 1-based helpers
        for i in 1..=m {
            if i < m {
                x.set(f[m - i - 1], e[i - 1], BigRational::one());
            }
            x.set(f[m - i], e[i - 1], aj.clone());
            x.set(e[m - i], f[i - 1], aj.clone());
            if i >= 2 {
                x.set(e[m - i + 1], f[i - 1], BigRational::one());
            }
        }
    }
    if let Some(mu) = label.mu() {
        for (length, sign) in mu.rows() {
            alloc.chain(&mut x, length, sign);
        }
    }
    Ok(MatrixRepresentative { ctx, entries: x })
}

/// Draws `l` rationals with distinct absolute values, odd numerators.
fn draw_regular(l: usize, rng: &mut StdRng) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = Vec::with_capacity(l);
    while out.len() < l {
        let num = 2 * rng.random_range(0..50i64) + 1;
        let den = rng.random_range(1..=9i64);
        let v = BigRational::new(BigInt::from(num), BigInt::from(den));
        if out.iter().all(|w| *w != v) {
            out.push(v);
        }
    }
    out
}

/// Dimension of the stratum `Ǒ`: `dim K·(a + e) + l` at a random regular `a`.
///
/// Two independent draws are made; if they disagree the sample was not
/// generic and `Error::NonGenericSample` is returned.
pub fn stratum_dim(label: &DualStratumLabel, ctx: PairContext) -> Result<u64> {
    stratum_dim_seeded(label, ctx, 0x5eed)
}

pub fn stratum_dim_seeded(label: &DualStratumLabel, ctx: PairContext, seed: u64) -> Result<u64> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut sample = || -> Result<u64> {
        let a = draw_regular(label.l() as usize, &mut rng);
        let x = stratum_point(label, ctx, &a)?;
        Ok(orbit_dimension_by_centralizer(&x) + label.l() as u64)
    };
    let first = sample()?;
    let second = sample()?;
    if first != second {
        return Err(Error::NonGenericSample { first, second });
    }
    Ok(first)
}

/// Number of signed Young diagrams of signature `(p, q)`, counted by a
/// memoized recursion over row lengths (longest first), choosing how many
/// rows of each length start with `+` and with `-`.
pub fn count_orbits_independent(ctx: PairContext) -> u64 {
    fn count(length: u32, p: u32, q: u32, memo: &mut HashMap<(u32, u32, u32), u64>) -> u64 {
        if p == 0 && q == 0 {
            return 1;
        }
        if length == 0 {
            return 0;
        }
        if let Some(&v) = memo.get(&(length, p, q)) {
            return v;
        }
        let up = length.div_ceil(2);
        let down = length / 2;
        let mut total = 0;
        let mut plus_rows = 0;
        // plus rows use (up, down) boxes, minus rows (down, up)
        while plus_rows * up <= p && plus_rows * down <= q {
            let (p1, q1) = (p - plus_rows * up, q - plus_rows * down);
            let mut minus_rows = 0;
            while minus_rows * down <= p1 && minus_rows * up <= q1 {
                total += count(
                    length - 1,
                    p1 - minus_rows * down,
                    q1 - minus_rows * up,
                    memo,
                );
                minus_rows += 1;
            }
            plus_rows += 1;
        }
        memo.insert((length, p, q), total);
        total
    }
    count(ctx.n(), ctx.p(), ctx.q(), &mut HashMap::new())
}
