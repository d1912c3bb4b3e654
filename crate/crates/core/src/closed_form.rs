//! Explicit solutions of the harmonic systems for `p = 1` and `p = 2`.
//!
//! These bypass the linear solver entirely and serve both as fast paths and
//! as an independent check on the generic assembly. Notation: `A_{m,k}`,
//! `B_{m,k}` are the cosine/sine coefficients of the order-`m` layer.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::grid::{GridFamily, GridSpec};
use crate::hermite::{BuildMode, HermiteTrigPoly};
use crate::scalar::Real;
use crate::spectral::FourierLayer;

fn check_layers<T: Real>(layers: &[FourierLayer<T>], p: usize, grid: &GridSpec) -> Result<()> {
    if layers.len() != p + 1 {
        return Err(Error::LayerCount {
            expected: p + 1,
            found: layers.len(),
        });
    }
    for layer in layers {
        if layer.a.len() != grid.n() || layer.b.len() != grid.n() {
            return Err(Error::LengthMismatch {
                what: format!("Fourier layer {}", layer.order),
                expected: grid.n(),
                found: layer.a.len().min(layer.b.len()),
            });
        }
    }
    Ok(())
}

fn assemble<T: Real>(
    grid: &GridSpec,
    p: usize,
    layers: &[FourierLayer<T>],
    cos_coeffs: BTreeMap<usize, T>,
    sin_coeffs: BTreeMap<usize, T>,
) -> HermiteTrigPoly<T> {
    HermiteTrigPoly {
        grid: *grid,
        p,
        mode: BuildMode::StrictCentered,
        const_term: layers[0].a0 / T::lit(2.0),
        cos_coeffs,
        sin_coeffs,
        mean_terms: vec![T::zero(); p + 1],
    }
}

/// Function plus first derivative. Frequencies `k` and `N − k`.
pub fn closed_form_p1<T: Real>(
    layers: &[FourierLayer<T>],
    grid: &GridSpec,
) -> Result<HermiteTrigPoly<T>> {
    check_layers(layers, 1, grid)?;
    let nn = grid.node_count();
    let big_n = T::of(nn);
    let mut cos = BTreeMap::new();
    let mut sin = BTreeMap::new();
    for k in 1..=grid.n() {
        let kk = T::of(k);
        let (a0, b0) = (layers[0].cos(k), layers[0].sin(k));
        let (a1, b1) = (layers[1].cos(k), layers[1].sin(k));
        let a_k = ((big_n - kk) * a0 - b1) / big_n;
        let b_k = ((big_n - kk) * b0 + a1) / big_n;
        let (a_alias, b_alias) = match grid.family() {
            GridFamily::Origin => ((kk * a0 + b1) / big_n, (a1 - kk * b0) / big_n),
            GridFamily::Staggered => (-(kk * a0 + b1) / big_n, (kk * b0 - a1) / big_n),
        };
        cos.insert(k, a_k);
        cos.insert(nn - k, a_alias);
        sin.insert(k, b_k);
        sin.insert(nn - k, b_alias);
    }
    Ok(assemble(grid, 1, layers, cos, sin))
}

/// Function plus first and second derivatives. Frequencies `k`, `N − k`
/// and `N + k`.
pub fn closed_form_p2<T: Real>(
    layers: &[FourierLayer<T>],
    grid: &GridSpec,
) -> Result<HermiteTrigPoly<T>> {
    check_layers(layers, 2, grid)?;
    let nn = grid.node_count();
    let big_n = T::of(nn);
    let n2 = big_n * big_n;
    let two = T::lit(2.0);
    let mut cos = BTreeMap::new();
    let mut sin = BTreeMap::new();
    for k in 1..=grid.n() {
        let kk = T::of(k);
        let (a0, b0) = (layers[0].cos(k), layers[0].sin(k));
        let (a1, b1) = (layers[1].cos(k), layers[1].sin(k));
        let (a2, b2) = (layers[2].cos(k), layers[2].sin(k));
        let base = n2 - kk * kk;
        let kn_plus = kk * big_n + kk * kk;
        let kn_minus = kk * big_n - kk * kk;
        let n_plus_2k = big_n + two * kk;
        let n_minus_2k = big_n - two * kk;

        let a_k = (a0 * base - two * kk * b1 + a2) / n2;
        let b_k = (b0 * base + two * kk * a1 + b2) / n2;
        let half = two * n2;
        let (a_minus, b_minus, a_plus, b_plus) = match grid.family() {
            GridFamily::Origin => (
                (a0 * kn_plus + b1 * n_plus_2k - a2) / half,
                (-b0 * kn_plus + a1 * n_plus_2k + b2) / half,
                (-a0 * kn_minus - b1 * n_minus_2k - a2) / half,
                (-b0 * kn_minus + a1 * n_minus_2k - b2) / half,
            ),
            GridFamily::Staggered => (
                (-a0 * kn_plus - b1 * n_plus_2k + a2) / half,
                (b0 * kn_plus - a1 * n_plus_2k - b2) / half,
                (a0 * kn_minus + b1 * n_minus_2k + a2) / half,
                (b0 * kn_minus - a1 * n_minus_2k + b2) / half,
            ),
        };
        cos.insert(k, a_k);
        cos.insert(nn - k, a_minus);
        cos.insert(nn + k, a_plus);
        sin.insert(k, b_k);
        sin.insert(nn - k, b_minus);
        sin.insert(nn + k, b_plus);
    }
    Ok(assemble(grid, 2, layers, cos, sin))
}
