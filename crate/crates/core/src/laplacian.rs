//! Adjacency, Laplacian and normalized-Laplacian matrices, the mirror block
//! decomposition of `𝓛(Q_n)`, and the phase-shifted tridiagonal families.
//!
//! Every matrix with `1/√(d_i d_j)` entries is carried as a [`DegreeScaled`]
//! pair: a rational kernel `K` and positive weights `d`. The real matrix is
//! `D^{-1/2} K D^{-1/2}`; its rational similarity image is `D^{-1} K`. Exact
//! determinants and characteristic polynomials are taken on the image.

use crate::error::{Error, Result};
use crate::exact_algebra::{int, to_f64, BigRational};
use crate::graph_gen::{build_moebius_octagonal, SimpleGraph};
use crate::oracles::eigenvalues_symmetric;
use num_traits::{One, Zero};
use std::fmt::Write as _;
use std::str::FromStr;

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Fills the upper triangle from `f(i, j)` (`i <= j`) and mirrors it.
    pub fn from_upper(order: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        assert!(order >= 1, "matrix order must be positive");
        let mut data = vec![0.0; order * order];
        for i in 0..order {
            for j in i..order {
                let v = f(i, j);
                data[i * order + j] = v;
                data[j * order + i] = v;
            }
        }
        Self { order, data }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_upper(order, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        Self::from_upper(self.order, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        Self::from_upper(self.order, |i, j| self.get(i, j) - other.get(i, j))
    }

    /// Top-left `k × k` block.
    pub fn leading(&self, k: usize) -> Self {
        assert!(k >= 1 && k <= self.order);
        Self::from_upper(k, |i, j| self.get(i, j))
    }

    /// Block with rows `r0..r0+k` and columns `c0..c0+k`; must itself be symmetric.
    fn block(&self, r0: usize, c0: usize, k: usize) -> Self {
        Self::from_upper(k, |i, j| {
            let v = self.get(r0 + i, c0 + j);
            debug_assert!((v - self.get(r0 + j, c0 + i)).abs() < 1e-15);
            v
        })
    }

    pub fn mat_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }

    /// Plain product; symmetric only when the factors commute, so returned row-major.
    pub fn mul_dense(&self, other: &Self) -> Vec<f64> {
        let n = self.order;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a != 0.0 {
                    for j in 0..n {
                        out[i * n + j] += a * other.get(k, j);
                    }
                }
            }
        }
        out
    }

    /// `i,j,value` rows for every nonzero entry, 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,value\n");
        for i in 0..self.order {
            for j in 0..self.order {
                let v = self.get(i, j);
                if v != 0.0 {
                    let _ = writeln!(out, "{i},{j},{}", format_sig17(v));
                }
            }
        }
        out
    }
}

/// Decimal rendering of `v` with 17 significant digits.
pub fn format_sig17(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let exponent = v.abs().log10().floor() as i32;
    let decimals = (16 - exponent).max(0) as usize;
    format!("{v:.decimals$}")
}

/// Dense square matrix over ℚ, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    order: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(order: usize) -> Self {
        assert!(order >= 1, "matrix order must be positive");
        Self {
            order,
            data: vec![BigRational::zero(); order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| if i == j { int(1) } else { int(0) })
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            for j in 0..order {
                m.data[i * order + j] = f(i, j);
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.order + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> BigRational {
        (0..self.order).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn row_sums(&self) -> Vec<BigRational> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j).clone()).sum())
            .collect()
    }

    /// Principal submatrix on the given (sorted, distinct) indices.
    pub fn principal(&self, keep: &[usize]) -> Self {
        Self::from_fn(keep.len(), |i, j| self.get(keep[i], keep[j]).clone())
    }

    /// Principal submatrix with the listed indices removed.
    pub fn delete(&self, removed: &[usize]) -> Self {
        let keep: Vec<_> = (0..self.order).filter(|i| !removed.contains(i)).collect();
        self.principal(&keep)
    }

    pub fn leading(&self, k: usize) -> Self {
        self.principal(&(0..k).collect::<Vec<_>>())
    }

    /// Square block with rows `r0..r0+k` and columns `c0..c0+k`.
    pub fn block(&self, r0: usize, c0: usize, k: usize) -> Self {
        Self::from_fn(k, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(to_f64).collect()
    }
}

/// A symmetric matrix `D^{-1/2} K D^{-1/2}` kept as kernel `K` and weights `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeScaled {
    pub kernel: RatMatrix,
    pub weights: Vec<u64>,
}

impl DegreeScaled {
    pub fn new(kernel: RatMatrix, weights: Vec<u64>) -> Result<Self> {
        if kernel.order() != weights.len() {
            return Err(Error::InvalidInput("kernel/weight size mismatch".into()));
        }
        if !kernel.is_symmetric() {
            return Err(Error::InvalidInput("kernel must be symmetric".into()));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidInput("weights must be positive".into()));
        }
        Ok(Self { kernel, weights })
    }

    pub fn order(&self) -> usize {
        self.weights.len()
    }

    /// The real symmetric matrix.
    pub fn numeric(&self) -> SymMatrix {
        SymMatrix::from_upper(self.order(), |i, j| {
            to_f64(self.kernel.get(i, j)) / ((self.weights[i] * self.weights[j]) as f64).sqrt()
        })
    }

    /// `D^{-1} K`, similar to [`Self::numeric`] via `D^{1/2}`.
    pub fn similarity_image(&self) -> RatMatrix {
        RatMatrix::from_fn(self.order(), |i, j| {
            self.kernel.get(i, j) / BigRational::from_integer(self.weights[i].into())
        })
    }
}

pub fn adjacency_matrix(g: &SimpleGraph) -> RatMatrix {
    let mut m = RatMatrix::zeros(g.vertex_count());
    for &(a, b) in g.edges() {
        m.set(a, b, int(1));
        m.set(b, a, int(1));
    }
    m
}

/// `L = D − A`.
pub fn combinatorial_laplacian(g: &SimpleGraph) -> RatMatrix {
    let mut m = adjacency_matrix(g);
    for i in 0..g.vertex_count() {
        for j in 0..g.vertex_count() {
            let v = if i == j {
                int(g.degrees()[i] as i64)
            } else {
                -m.get(i, j).clone()
            };
            m.set(i, j, v);
        }
    }
    m
}

fn check_no_isolated(g: &SimpleGraph) -> Result<()> {
    match g.degrees().iter().position(|&d| d == 0) {
        Some(v) => Err(Error::InvalidInput(format!("vertex {v} is isolated"))),
        None => Ok(()),
    }
}

/// `𝓛 = D^{-1/2} L D^{-1/2}` in kernel form.
pub fn normalized_laplacian_scaled(g: &SimpleGraph) -> Result<DegreeScaled> {
    check_no_isolated(g)?;
    DegreeScaled::new(
        combinatorial_laplacian(g),
        g.degrees().iter().map(|&d| d as u64).collect(),
    )
}

/// `𝓛 = I − D^{-1/2} A D^{-1/2}`.
pub fn normalized_laplacian(g: &SimpleGraph) -> Result<SymMatrix> {
    Ok(normalized_laplacian_scaled(g)?.numeric())
}

/// `I − D^{-1} A`, the rational similarity image of `𝓛`.
pub fn rational_walk_laplacian(g: &SimpleGraph) -> Result<RatMatrix> {
    Ok(normalized_laplacian_scaled(g)?.similarity_image())
}

/// The four `3n × 3n` blocks of `𝓛(Q_n)` under the `u ↔ v` mirror.
#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub n: usize,
    pub l_v1v1: SymMatrix,
    pub l_v1v2: SymMatrix,
    pub l_a: SymMatrix,
    pub l_s: SymMatrix,
    a_scaled: DegreeScaled,
    s_scaled: DegreeScaled,
}

impl BlockDecomposition {
    /// `𝓛_A = 𝓛_{V1V1} + 𝓛_{V1V2}` in kernel form.
    pub fn a_scaled(&self) -> &DegreeScaled {
        &self.a_scaled
    }

    /// `𝓛_S = 𝓛_{V1V1} − 𝓛_{V1V2}` in kernel form.
    pub fn s_scaled(&self) -> &DegreeScaled {
        &self.s_scaled
    }

    pub fn a_image(&self) -> RatMatrix {
        self.a_scaled.similarity_image()
    }

    pub fn s_image(&self) -> RatMatrix {
        self.s_scaled.similarity_image()
    }
}

pub fn block_decompose(n: usize) -> Result<BlockDecomposition> {
    let q = build_moebius_octagonal(n)?;
    let full = normalized_laplacian_scaled(&q)?;
    let half = 3 * n;
    let numeric = full.numeric();
    let l_v1v1 = numeric.block(0, 0, half);
    let l_v1v2 = numeric.block(0, half, half);
    let k11 = full.kernel.block(0, 0, half);
    let k12 = full.kernel.block(0, half, half);
    let weights = full.weights[..half].to_vec();
    let combine = |sign: i64| {
        RatMatrix::from_fn(half, |i, j| {
            k11.get(i, j) + k12.get(i, j) * BigRational::from_integer(sign.into())
        })
    };
    let a_scaled = DegreeScaled::new(combine(1), weights.clone())?;
    let s_scaled = DegreeScaled::new(combine(-1), weights)?;
    Ok(BlockDecomposition {
        n,
        l_a: l_v1v1.add(&l_v1v2),
        l_s: l_v1v1.sub(&l_v1v2),
        l_v1v1,
        l_v1v2,
        a_scaled,
        s_scaled,
    })
}

/// The orthogonal involution `U = (1/√2)[[I, I], [I, −I]]` on `(V1, V2)`.
pub fn mirror_transform(n: usize) -> SymMatrix {
    let half = 3 * n;
    let r = std::f64::consts::FRAC_1_SQRT_2;
    SymMatrix::from_upper(2 * half, |i, j| {
        if i == j {
            if i < half {
                r
            } else {
                -r
            }
        } else if j == i + half {
            r
        } else {
            0.0
        }
    })
}

/// Largest entrywise deviation of `U 𝓛 Uᵀ` from `diag(𝓛_A, 𝓛_S)`.
pub fn block_diagonalization_residual(n: usize) -> Result<f64> {
    let q = build_moebius_octagonal(n)?;
    let l = normalized_laplacian(&q)?;
    let blocks = block_decompose(n)?;
    let u = mirror_transform(n);
    let order = 6 * n;
    let half = 3 * n;
    let ul = u.mul_dense(&l);
    let mut worst = 0.0f64;
    for i in 0..order {
        for j in 0..order {
            // U is symmetric, so Uᵀ = U
            let v: f64 = (0..order).map(|k| ul[i * order + k] * u.get(k, j)).sum();
            let target = match (i < half, j < half) {
                (true, true) => blocks.l_a.get(i, j),
                (false, false) => blocks.l_s.get(i - half, j - half),
                _ => 0.0,
            };
            worst = worst.max((v - target).abs());
        }
    }
    Ok(worst)
}

/// Outcome of comparing `eig(𝓛(Q_n))` with `eig(𝓛_A) ∪ eig(𝓛_S)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionCheck {
    pub pass: bool,
    pub max_deviation: f64,
    pub full: Vec<f64>,
    pub merged: Vec<f64>,
}

pub fn decomposition_check(n: usize, tol: f64) -> Result<DecompositionCheck> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    let q = build_moebius_octagonal(n)?;
    let eig_tol = (tol * 1e-3).max(1e-14);
    let full = eigenvalues_symmetric(&normalized_laplacian(&q)?, eig_tol)?;
    let blocks = block_decompose(n)?;
    let mut merged = eigenvalues_symmetric(&blocks.l_a, eig_tol)?;
    merged.extend(eigenvalues_symmetric(&blocks.l_s, eig_tol)?);
    merged.sort_by(f64::total_cmp);
    let max_deviation = full
        .iter()
        .zip(&merged)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    Ok(DecompositionCheck {
        pass: full.len() == merged.len() && max_deviation <= tol,
        max_deviation,
        full,
        merged,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    S,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "S" | "s" => Ok(Family::S),
            other => Err(Error::Usage(format!("unknown family {other:?}"))),
        }
    }
}

/// Tridiagonal window onto the periodic chain, kernel form.
///
/// Chain positions `≡ 1 (mod 3)` carry degree 3, the rest degree 2. Phase
/// 0/1/2 starts at position residue 1/2/0. Diagonal kernel is 2, except 4 at
/// degree-3 positions for family S; off-diagonal kernel is −1.
pub fn phase_tridiagonal_scaled(family: Family, phase: u8, m: usize) -> Result<DegreeScaled> {
    let start = match (family, phase) {
        (_, 0) => 1,
        (_, 1) => 2,
        (Family::A, 2) => 0,
        _ => {
            return Err(Error::Usage(format!(
                "phase {phase} is not defined for family {family:?}"
            )))
        }
    };
    if m == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    let is_hub = |k: usize| (start + k) % 3 == 1;
    let kernel = RatMatrix::from_fn(m, |i, j| {
        if i == j {
            if family == Family::S && is_hub(i) {
                int(4)
            } else {
                int(2)
            }
        } else if i.abs_diff(j) == 1 {
            -BigRational::one()
        } else {
            BigRational::zero()
        }
    });
    let weights = (0..m).map(|k| if is_hub(k) { 3 } else { 2 }).collect();
    DegreeScaled::new(kernel, weights)
}

pub fn phase_tridiagonal(family: Family, phase: u8, m: usize) -> Result<SymMatrix> {
    Ok(phase_tridiagonal_scaled(family, phase, m)?.numeric())
}
