//! Sample tables and the ordinary trigonometric interpolant of each row.

use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::scalar::Real;

/// Function and derivative samples at the nodes of a grid.
///
/// Row `m` holds the `m`-th derivative at nodes `j = 1..=N`. `p = 0` is
/// allowed and reduces to plain trigonometric interpolation.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteSamples<T> {
    grid: GridSpec,
    p: usize,
    rows: Vec<Vec<T>>,
}

impl<T: Real> HermiteSamples<T> {
    pub fn new(grid: GridSpec, p: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        if rows.len() != p + 1 {
            return Err(Error::LengthMismatch {
                what: "sample rows (p + 1)".into(),
                expected: p + 1,
                found: rows.len(),
            });
        }
        for (m, row) in rows.iter().enumerate() {
            if row.len() != grid.node_count() {
                return Err(Error::LengthMismatch {
                    what: format!("sample row {m}"),
                    expected: grid.node_count(),
                    found: row.len(),
                });
            }
        }
        Ok(HermiteSamples { grid, p, rows })
    }

    /// Samples `f` at the grid nodes; `f(t, m)` returns the `m`-th derivative.
    pub fn from_fn(grid: GridSpec, p: usize, f: impl Fn(T, usize) -> T) -> Self {
        let nodes = grid.nodes::<T>();
        let rows = (0..=p)
            .map(|m| nodes.iter().map(|&t| f(t, m)).collect())
            .collect();
        HermiteSamples { grid, p, rows }
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    /// Highest derivative order.
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn row(&self, m: usize) -> &[T] {
        &self.rows[m]
    }
}

/// Coefficients of `A0/2 + Σ_k (A_k cos kt + B_k sin kt)`, `k = 1..=n`,
/// interpolating one sample row.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierLayer<T> {
    pub order: usize,
    pub a0: T,
    pub a: Vec<T>,
    pub b: Vec<T>,
}

impl<T: Real> FourierLayer<T> {
    pub fn zero(order: usize, n: usize) -> Self {
        FourierLayer {
            order,
            a0: T::zero(),
            a: vec![T::zero(); n],
            b: vec![T::zero(); n],
        }
    }

    /// Cosine coefficient `A_k` for `k = 1..=n`.
    pub fn cos(&self, k: usize) -> T {
        self.a[k - 1]
    }

    /// Sine coefficient `B_k` for `k = 1..=n`.
    pub fn sin(&self, k: usize) -> T {
        self.b[k - 1]
    }

    pub fn evaluate(&self, t: T) -> T {
        let mut acc = self.a0 / T::lit(2.0);
        for (i, (&a, &b)) in self.a.iter().zip(&self.b).enumerate() {
            let x = T::of(i + 1) * t;
            acc = acc + a * x.cos() + b * x.sin();
        }
        acc
    }
}

/// Discrete Fourier coefficients of `row` on `grid` by direct summation.
pub fn trig_interp_coeffs<T: Real>(row: &[T], grid: &GridSpec) -> Result<FourierLayer<T>> {
    let nn = grid.node_count();
    if row.len() != nn {
        return Err(Error::LengthMismatch {
            what: "sample row".into(),
            expected: nn,
            found: row.len(),
        });
    }
    let scale = T::lit(2.0) / T::of(nn);
    let a0 = row.iter().fold(T::zero(), |acc, &v| acc + v) * scale;
    let mut a = Vec::with_capacity(grid.n());
    let mut b = Vec::with_capacity(grid.n());
    for k in 1..=grid.n() {
        let (mut sc, mut ss) = (T::zero(), T::zero());
        for (j0, &v) in row.iter().enumerate() {
            let (s, c) = grid.phase::<T>(k, j0).sin_cos();
            sc = sc + v * c;
            ss = ss + v * s;
        }
        a.push(sc * scale);
        b.push(ss * scale);
    }
    Ok(FourierLayer { order: 0, a0, a, b })
}

/// Fourier layers of every row, with `order` set to the row index.
pub fn fourier_layers<T: Real>(rows: &[Vec<T>], grid: &GridSpec) -> Result<Vec<FourierLayer<T>>> {
    rows.iter()
        .enumerate()
        .map(|(m, row)| {
            let mut layer = trig_interp_coeffs(row, grid)?;
            layer.order = m;
            Ok(layer)
        })
        .collect()
}

/// Grid means of each row and the derivative rows with their means removed.
#[derive(Debug, Clone, PartialEq)]
pub struct MeanReport<T> {
    /// `μ_m = (1/N) Σ_j row_m[j]` for `m = 0..=p`.
    pub means: Vec<T>,
    /// Row 0 verbatim; rows `m ≥ 1` with `μ_m` subtracted.
    pub centered_rows: Vec<Vec<T>>,
}

pub fn center_rows<T: Real>(samples: &HermiteSamples<T>) -> MeanReport<T> {
    let nn = T::of(samples.grid().node_count());
    let mut means = Vec::with_capacity(samples.p() + 1);
    let mut centered_rows = Vec::with_capacity(samples.p() + 1);
    for (m, row) in samples.rows().iter().enumerate() {
        let mean = row.iter().fold(T::zero(), |acc, &v| acc + v) / nn;
        means.push(mean);
        if m == 0 {
            centered_rows.push(row.clone());
        } else {
            centered_rows.push(row.iter().map(|&v| v - mean).collect());
        }
    }
    MeanReport {
        means,
        centered_rows,
    }
}
