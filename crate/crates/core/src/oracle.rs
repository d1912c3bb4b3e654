//! Reference construction by dense collocation.
//!
//! Every interpolation condition `T^(m)(t_j) = f_j^(m)` becomes one row of a
//! square system in the unknowns `{c} ∪ {a_ω, b_ω} ∪ {μ_1..μ_p}`. Nothing
//! here relies on the alias sign rules or the per-harmonic decoupling; the
//! trigonometric values are computed from the nodes directly.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hermite::{check_centered, hermite_frequencies, BuildMode, HermiteTrigPoly, MAX_ORDER};
use crate::linalg::Lu;
use crate::scalar::Real;
use crate::spectral::{center_rows, HermiteSamples};

/// Solves the full collocation system for the same ansatz as
/// [`crate::build_hermite`].
///
/// In strict mode the solved mean unknowns are discarded (they vanish for
/// centered data up to rounding).
pub fn collocation_solve<T: Real>(
    samples: &HermiteSamples<T>,
    mode: BuildMode,
) -> Result<HermiteTrigPoly<T>> {
    let p = samples.p();
    if p > MAX_ORDER {
        return Err(Error::OrderTooHigh(p));
    }
    if mode == BuildMode::StrictCentered {
        check_centered(samples, &center_rows(samples).means)?;
    }
    let grid = samples.grid();
    let freqs = hermite_frequencies(&grid, p)?;
    let nodes = grid.nodes::<T>();
    let nf = freqs.len();
    // Column layout: [c, a_ω..., b_ω..., μ_1..μ_p].
    let dim = 1 + 2 * nf + p;
    assert_eq!(dim, grid.node_count() * (p + 1));

    let omega_max = T::of(freqs.last().copied().unwrap_or(1));
    let half_pi = T::FRAC_PI_2();
    let mut matrix = Vec::with_capacity(dim);
    let mut rhs = Vec::with_capacity(dim);
    for m in 0..=p {
        let scale = omega_max.powi(m as i32).recip();
        let shift = T::of(m) * half_pi;
        for (j0, &t) in nodes.iter().enumerate() {
            let mut row = vec![T::zero(); dim];
            if m == 0 {
                row[0] = T::one();
            } else {
                row[2 * nf + m] = scale;
            }
            for (c, &omega) in freqs.iter().enumerate() {
                let w = T::of(omega);
                let amp = w.powi(m as i32) * scale;
                row[1 + c] = amp * (w * t + shift).cos();
                row[1 + nf + c] = amp * (w * t + shift).sin();
            }
            matrix.push(row);
            rhs.push(samples.row(m)[j0] * scale);
        }
    }

    let lu = Lu::factor(&matrix).ok_or(Error::SingularCollocation(dim))?;
    let x = lu.solve(&rhs);

    let cos_coeffs: BTreeMap<usize, T> = freqs
        .iter()
        .zip(&x[1..=nf])
        .map(|(&w, &v)| (w, v))
        .collect();
    let sin_coeffs: BTreeMap<usize, T> = freqs
        .iter()
        .zip(&x[1 + nf..=2 * nf])
        .map(|(&w, &v)| (w, v))
        .collect();
    let mut mean_terms = vec![T::zero(); p + 1];
    if mode == BuildMode::PaperHTerms {
        mean_terms[1..].copy_from_slice(&x[1 + 2 * nf..]);
    }
    HermiteTrigPoly::from_parts(grid, p, mode, x[0], cos_coeffs, sin_coeffs, mean_terms)
}
