//! Per-harmonic construction of the Hermite trigonometric polynomial.
//!
//! For odd `p = 2q − 1` the frequencies attached to base harmonic `k` are
//! `{k} ∪ {iN − k, iN + k : i = 1..q−1} ∪ {qN − k}`; for even `p = 2q` they
//! are `{k} ∪ {iN − k, iN + k : i = 1..q}`. Each set has `p + 1` members,
//! and at the grid nodes all of them reduce to `cos kt` / `sin kt` up to the
//! signs in [`crate::alias`]. Differentiating `m` times and matching the
//! `cos kt` and `sin kt` coefficients of the order-`m` sample interpolant
//! gives one `(p + 1) × (p + 1)` system for the cosine coefficients and one
//! for the sine coefficients of every `k`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alias::{alias_sign, Branch, FrequencyTag};
use crate::error::{Error, Result};
use crate::grid::{GridFamily, GridSpec};
use crate::linalg::{mat_vec, max_abs, norm1, Lu};
use crate::scalar::Real;
use crate::spectral::{center_rows, fourier_layers, FourierLayer, HermiteSamples};

/// Highest supported derivative order.
pub const MAX_ORDER: usize = 8;

/// How derivative rows with a nonzero grid mean are handled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BuildMode {
    /// Derivative rows must already have zero mean on the grid. The result
    /// is a genuine trigonometric polynomial whose order-`m` evaluation is
    /// its literal `m`-th derivative.
    #[serde(rename = "strict")]
    StrictCentered,
    /// Derivative rows are centered internally and each mean `μ_m` is kept
    /// as a constant added only when evaluating order `m`.
    #[serde(rename = "paper")]
    PaperHTerms,
}

impl fmt::Display for BuildMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BuildMode::StrictCentered => "strict",
            BuildMode::PaperHTerms => "paper",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoefficientFamily {
    Cosine,
    Sine,
}

impl fmt::Display for CoefficientFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoefficientFamily::Cosine => "cosine",
            CoefficientFamily::Sine => "sine",
        })
    }
}

/// The ascending frequency set `{k, iN ± k, ...}` of size `p + 1`.
pub fn frequency_set(p: usize, node_count: usize, k: usize) -> Result<Vec<FrequencyTag>> {
    let grid = GridSpec::from_node_count(GridFamily::Origin, node_count)?;
    let mut tags = vec![FrequencyTag::derive(&grid, k, 0, Branch::Base)?];
    let q = p.div_ceil(2);
    let full_blocks = if p.is_multiple_of(2) {
        q
    } else {
        q.saturating_sub(1)
    };
    for i in 1..=full_blocks {
        tags.push(FrequencyTag::derive(&grid, k, i, Branch::Minus)?);
        tags.push(FrequencyTag::derive(&grid, k, i, Branch::Plus)?);
    }
    if p % 2 == 1 {
        tags.push(FrequencyTag::derive(&grid, k, q, Branch::Minus)?);
    }
    debug_assert_eq!(tags.len(), p + 1);
    Ok(tags)
}

/// One `(p + 1) × (p + 1)` system for base harmonic `k`; row `m` is the
/// order-`m` matching condition and columns follow `columns`.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicSystem<T> {
    pub base_k: usize,
    pub family: CoefficientFamily,
    pub matrix: Vec<Vec<T>>,
    pub rhs: Vec<T>,
    pub columns: Vec<FrequencyTag>,
}

/// Assembles the system for `(k, family)` from the Fourier layers of the
/// (centered) sample rows.
///
/// With alias signs `σc`, `σs` of column frequency `ω`, the row-`m` entry is
///
/// * cosine family: `(−1)^(m/2) ω^m σc` for even `m`, `−(−1)^((m−1)/2) ω^m σs` for odd `m`;
/// * sine family: `(−1)^(m/2) ω^m σs` for even `m`, `(−1)^((m−1)/2) ω^m σc` for odd `m`.
///
/// The right-hand side is `A_{m,k}` for (cosine, even `m`) and (sine, odd
/// `m`), and `B_{m,k}` otherwise.
pub fn assemble_system<T: Real>(
    grid: &GridSpec,
    p: usize,
    k: usize,
    family: CoefficientFamily,
    layers: &[FourierLayer<T>],
) -> Result<HarmonicSystem<T>> {
    if layers.len() != p + 1 {
        return Err(Error::LayerCount {
            expected: p + 1,
            found: layers.len(),
        });
    }
    let columns = frequency_set(p, grid.node_count(), k)?;
    let signs = columns
        .iter()
        .map(|tag| alias_sign(grid.family(), tag.block_i(), tag.branch()))
        .collect::<Result<Vec<_>>>()?;
    let mut matrix = Vec::with_capacity(p + 1);
    let mut rhs = Vec::with_capacity(p + 1);
    for (m, layer) in layers.iter().enumerate() {
        let even = m % 2 == 0;
        let parity: i32 = if (m / 2) % 2 == 0 { 1 } else { -1 };
        let row = columns
            .iter()
            .zip(&signs)
            .map(|(tag, sign)| {
                let (alias, lead) = match (family, even) {
                    (CoefficientFamily::Cosine, true) => (sign.cos, parity),
                    (CoefficientFamily::Cosine, false) => (sign.sin, -parity),
                    (CoefficientFamily::Sine, true) => (sign.sin, parity),
                    (CoefficientFamily::Sine, false) => (sign.cos, parity),
                };
                let s = T::from_i32(lead * alias as i32).unwrap();
                s * T::of(tag.omega()).powi(m as i32)
            })
            .collect();
        matrix.push(row);
        let use_cos = matches!(
            (family, even),
            (CoefficientFamily::Cosine, true) | (CoefficientFamily::Sine, false)
        );
        rhs.push(if use_cos { layer.cos(k) } else { layer.sin(k) });
    }
    Ok(HarmonicSystem {
        base_k: k,
        family,
        matrix,
        rhs,
        columns,
    })
}

/// Solution of one harmonic system with its 1-norm condition estimate
/// (taken on the row-equilibrated matrix).
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicSolution<T> {
    pub coeffs: Vec<T>,
    pub condition: T,
}

impl<T: Real> HarmonicSystem<T> {
    /// Row `m` divided by `ω_max^m`, with the right-hand side to match.
    fn equilibrated(&self) -> (Vec<Vec<T>>, Vec<T>) {
        let omega_max = T::of(
            self.columns
                .iter()
                .map(FrequencyTag::omega)
                .max()
                .unwrap_or(1),
        );
        let mut matrix = self.matrix.clone();
        let mut rhs = self.rhs.clone();
        for (m, (row, r)) in matrix.iter_mut().zip(rhs.iter_mut()).enumerate() {
            let scale = omega_max.powi(m as i32).recip();
            row.iter_mut().for_each(|v| *v = *v * scale);
            *r = *r * scale;
        }
        (matrix, rhs)
    }

    pub fn solve_detailed(&self) -> Result<HarmonicSolution<T>> {
        let (k, family) = (self.base_k, self.family);
        let (matrix, rhs) = self.equilibrated();
        let lu = Lu::factor(&matrix).ok_or(Error::SingularSystem { k, family })?;
        let condition = norm1(&matrix) * lu.inverse_norm1();
        let limit = (T::epsilon() * T::lit(1e3)).recip();
        if !condition.is_finite() || condition > limit {
            return Err(Error::IllConditioned {
                k,
                family,
                condition: condition.to_f64().unwrap_or(f64::INFINITY),
            });
        }
        let coeffs = lu.solve(&rhs);
        let residual = max_abs(
            &mat_vec(&matrix, &coeffs)
                .iter()
                .zip(&rhs)
                .map(|(&a, &b)| a - b)
                .collect::<Vec<_>>(),
        );
        if residual.is_nan() || residual > T::scaled_tol(1e-9) * (T::one() + max_abs(&rhs)) {
            return Err(Error::InaccurateSolve {
                k,
                family,
                residual: residual.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(HarmonicSolution { coeffs, condition })
    }
}

/// Solves one harmonic system; coefficients are returned in column order.
pub fn solve_harmonic<T: Real>(system: &HarmonicSystem<T>) -> Result<Vec<T>> {
    system.solve_detailed().map(|s| s.coeffs)
}

/// A Hermite trigonometric polynomial
/// `c + Σ_ω (a_ω cos ωt + b_ω sin ωt)` plus the per-order constants
/// `mean_terms[m]` that are added only when evaluating derivative order `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteTrigPoly<T> {
    pub(crate) grid: GridSpec,
    pub(crate) p: usize,
    pub(crate) mode: BuildMode,
    pub(crate) const_term: T,
    pub(crate) cos_coeffs: BTreeMap<usize, T>,
    pub(crate) sin_coeffs: BTreeMap<usize, T>,
    pub(crate) mean_terms: Vec<T>,
}

impl<T: Real> HermiteTrigPoly<T> {
    /// Assembles a polynomial from stored parts, checking that both
    /// coefficient maps cover exactly the Hermite frequency set of `(p, grid)`.
    pub fn from_parts(
        grid: GridSpec,
        p: usize,
        mode: BuildMode,
        const_term: T,
        cos_coeffs: BTreeMap<usize, T>,
        sin_coeffs: BTreeMap<usize, T>,
        mean_terms: Vec<T>,
    ) -> Result<Self> {
        if p > MAX_ORDER {
            return Err(Error::OrderTooHigh(p));
        }
        let expected: Vec<usize> = hermite_frequencies(&grid, p)?;
        for (name, map) in [("cosine", &cos_coeffs), ("sine", &sin_coeffs)] {
            if !map.keys().copied().eq(expected.iter().copied()) {
                return Err(Error::MalformedPolynomial(format!(
                    "{name} frequencies differ from the set for p = {p}, N = {}",
                    grid.node_count()
                )));
            }
        }
        if mean_terms.len() != p + 1 {
            return Err(Error::MalformedPolynomial(format!(
                "expected {} mean terms, found {}",
                p + 1,
                mean_terms.len()
            )));
        }
        if mean_terms[0] != T::zero() {
            return Err(Error::MalformedPolynomial(
                "mean term of order 0 must be zero".into(),
            ));
        }
        Ok(HermiteTrigPoly {
            grid,
            p,
            mode,
            const_term,
            cos_coeffs,
            sin_coeffs,
            mean_terms,
        })
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn mode(&self) -> BuildMode {
        self.mode
    }

    /// The constant `a_0 / 2 = A_{0,0} / 2`.
    pub fn const_term(&self) -> T {
        self.const_term
    }

    pub fn cos_coeffs(&self) -> &BTreeMap<usize, T> {
        &self.cos_coeffs
    }

    pub fn sin_coeffs(&self) -> &BTreeMap<usize, T> {
        &self.sin_coeffs
    }

    pub fn mean_terms(&self) -> &[T] {
        &self.mean_terms
    }

    pub fn cos_coeff(&self, omega: usize) -> T {
        self.cos_coeffs.get(&omega).copied().unwrap_or_else(T::zero)
    }

    pub fn sin_coeff(&self, omega: usize) -> T {
        self.sin_coeffs.get(&omega).copied().unwrap_or_else(T::zero)
    }

    /// Largest absolute difference over all stored coefficients.
    pub fn max_coeff_diff(&self, other: &Self) -> T {
        let mut diff = (self.const_term - other.const_term).abs();
        let keys = self.cos_coeffs.keys().chain(other.cos_coeffs.keys());
        for &w in keys {
            diff = diff.max((self.cos_coeff(w) - other.cos_coeff(w)).abs());
        }
        for &w in self.sin_coeffs.keys().chain(other.sin_coeffs.keys()) {
            diff = diff.max((self.sin_coeff(w) - other.sin_coeff(w)).abs());
        }
        for m in 0..self.mean_terms.len().max(other.mean_terms.len()) {
            let a = self.mean_terms.get(m).copied().unwrap_or_else(T::zero);
            let b = other.mean_terms.get(m).copied().unwrap_or_else(T::zero);
            diff = diff.max((a - b).abs());
        }
        diff
    }
}

/// All frequencies of the ansatz for `(p, grid)`, ascending.
pub fn hermite_frequencies(grid: &GridSpec, p: usize) -> Result<Vec<usize>> {
    let mut all = Vec::with_capacity(grid.n() * (p + 1));
    for k in 1..=grid.n() {
        all.extend(
            frequency_set(p, grid.node_count(), k)?
                .iter()
                .map(FrequencyTag::omega),
        );
    }
    all.sort_unstable();
    Ok(all)
}

/// Condition estimate of one solved harmonic system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmonicDiagnostic {
    pub k: usize,
    pub family: CoefficientFamily,
    pub condition: f64,
}

/// Solves every harmonic system from the Fourier layers of centered rows.
/// The result has zero mean terms and is tagged as strict.
pub fn build_from_layers<T: Real>(
    grid: &GridSpec,
    layers: &[FourierLayer<T>],
) -> Result<(HermiteTrigPoly<T>, Vec<HarmonicDiagnostic>)> {
    let p = layers.len().checked_sub(1).ok_or(Error::LayerCount {
        expected: 1,
        found: 0,
    })?;
    if p > MAX_ORDER {
        return Err(Error::OrderTooHigh(p));
    }
    let mut cos_coeffs = BTreeMap::new();
    let mut sin_coeffs = BTreeMap::new();
    let mut diagnostics = Vec::with_capacity(2 * grid.n());
    for k in 1..=grid.n() {
        for family in [CoefficientFamily::Cosine, CoefficientFamily::Sine] {
            let system = assemble_system(grid, p, k, family, layers)?;
            let solution = system.solve_detailed()?;
            let target = match family {
                CoefficientFamily::Cosine => &mut cos_coeffs,
                CoefficientFamily::Sine => &mut sin_coeffs,
            };
            for (tag, c) in system.columns.iter().zip(solution.coeffs) {
                target.insert(tag.omega(), c);
            }
            diagnostics.push(HarmonicDiagnostic {
                k,
                family,
                condition: solution.condition.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    let poly = HermiteTrigPoly {
        grid: *grid,
        p,
        mode: BuildMode::StrictCentered,
        const_term: layers[0].a0 / T::lit(2.0),
        cos_coeffs,
        sin_coeffs,
        mean_terms: vec![T::zero(); p + 1],
    };
    Ok((poly, diagnostics))
}

/// Checks that every derivative row has zero grid mean, relative to its size.
pub(crate) fn check_centered<T: Real>(samples: &HermiteSamples<T>, means: &[T]) -> Result<()> {
    for (m, &mean) in means.iter().enumerate().take(samples.p() + 1).skip(1) {
        let tolerance = T::scaled_tol(1e-10) * (T::one() + max_abs(samples.row(m)));
        if mean.is_nan() || mean.abs() > tolerance {
            return Err(Error::NotCentered {
                order: m,
                mean: mean.to_f64().unwrap_or(f64::NAN),
                tolerance: tolerance.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    Ok(())
}

/// Builds the polynomial and reports the condition estimate of every
/// harmonic system.
pub fn build_hermite_with_diagnostics<T: Real>(
    samples: &HermiteSamples<T>,
    mode: BuildMode,
) -> Result<(HermiteTrigPoly<T>, Vec<HarmonicDiagnostic>)> {
    if samples.p() > MAX_ORDER {
        return Err(Error::OrderTooHigh(samples.p()));
    }
    let report = center_rows(samples);
    if mode == BuildMode::StrictCentered {
        check_centered(samples, &report.means)?;
    }
    let grid = samples.grid();
    let layers = fourier_layers(&report.centered_rows, &grid)?;
    let (mut poly, diagnostics) = build_from_layers(&grid, &layers)?;
    poly.mode = mode;
    if mode == BuildMode::PaperHTerms {
        poly.mean_terms[1..].copy_from_slice(&report.means[1..]);
    }
    Ok((poly, diagnostics))
}

/// Builds the Hermite trigonometric polynomial interpolating `samples`.
pub fn build_hermite<T: Real>(
    samples: &HermiteSamples<T>,
    mode: BuildMode,
) -> Result<HermiteTrigPoly<T>> {
    build_hermite_with_diagnostics(samples, mode).map(|(poly, _)| poly)
}

#[cfg(test)]
mod tests {
    use approx::assert_abs_diff_eq;

    use super::*;
    use crate::grid::make_grid;

    fn omegas(p: usize, nn: usize, k: usize) -> Vec<usize> {
        frequency_set(p, nn, k)
            .unwrap()
            .iter()
            .map(FrequencyTag::omega)
            .collect()
    }

    #[test]
    fn frequency_set_examples() {
        assert_eq!(omegas(1, 3, 1), vec![1, 2]);
        assert_eq!(omegas(2, 5, 2), vec![2, 3, 7]);
        assert_eq!(omegas(3, 5, 1), vec![1, 4, 6, 9]);
        assert_eq!(omegas(0, 5, 2), vec![2]);
        assert_eq!(omegas(4, 7, 3), vec![3, 4, 10, 11, 17]);
        assert!(frequency_set(1, 5, 3).is_err());
        assert!(frequency_set(1, 5, 0).is_err());
        assert!(frequency_set(1, 4, 1).is_err());
    }

    #[test]
    fn frequency_sets_disjoint_and_bounded() {
        for p in 0..=MAX_ORDER {
            for n in 1..8 {
                let g = make_grid(0, n as i64).unwrap();
                let all = hermite_frequencies(&g, p).unwrap();
                assert_eq!(all.len(), n * (p + 1));
                assert!(all.windows(2).all(|w| w[0] < w[1]));
                let q = p.div_ceil(2);
                let bound = q * g.node_count() + n;
                assert!(all.iter().all(|&w| w > 0 && w <= bound));
            }
        }
    }

    fn layer(order: usize, a0: f64, a: &[f64], b: &[f64]) -> FourierLayer<f64> {
        FourierLayer {
            order,
            a0,
            a: a.to_vec(),
            b: b.to_vec(),
        }
    }

    #[test]
    fn assemble_p1_origin() {
        let g = make_grid(0, 1).unwrap();
        let layers = [
            layer(0, 0.0, &[0.3], &[0.7]),
            layer(1, 0.0, &[-1.1], &[2.2]),
        ];
        let cos = assemble_system(&g, 1, 1, CoefficientFamily::Cosine, &layers).unwrap();
        assert_eq!(cos.matrix, vec![vec![1.0, 1.0], vec![-1.0, 2.0]]);
        assert_eq!(cos.rhs, vec![0.3, 2.2]);
        let sin = assemble_system(&g, 1, 1, CoefficientFamily::Sine, &layers).unwrap();
        assert_eq!(sin.matrix, vec![vec![1.0, -1.0], vec![1.0, 2.0]]);
        assert_eq!(sin.rhs, vec![0.7, -1.1]);
    }

    #[test]
    fn assemble_p2_origin() {
        let g = make_grid(0, 1).unwrap();
        let layers = [
            layer(0, 0.0, &[1.0], &[0.0]),
            layer(1, 0.0, &[0.0], &[-1.0]),
            layer(2, 0.0, &[-1.0], &[0.0]),
        ];
        let cos = assemble_system(&g, 2, 1, CoefficientFamily::Cosine, &layers).unwrap();
        assert_eq!(
            cos.matrix,
            vec![
                vec![1.0, 1.0, 1.0],
                vec![-1.0, 2.0, -4.0],
                vec![-1.0, -4.0, -16.0]
            ]
        );
        assert_eq!(cos.rhs, vec![1.0, -1.0, -1.0]);
        let x = solve_harmonic(&cos).unwrap();
        assert_abs_diff_eq!(x[0], 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(x[1], 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(x[2], 0.0, epsilon = 1e-14);
    }

    fn system(matrix: Vec<Vec<f64>>, rhs: Vec<f64>, omegas: &[usize]) -> HarmonicSystem<f64> {
        // Tags only feed the equilibration scale here.
        let g = make_grid(0, 1).unwrap();
        let columns = omegas
            .iter()
            .map(|&w| {
                if w == 1 {
                    FrequencyTag::derive(&g, 1, 0, Branch::Base).unwrap()
                } else {
                    FrequencyTag::derive(&g, 1, 1, Branch::Minus).unwrap()
                }
            })
            .collect();
        HarmonicSystem {
            base_k: 1,
            family: CoefficientFamily::Cosine,
            matrix,
            rhs,
            columns,
        }
    }

    #[test]
    fn solve_examples() {
        let m = vec![vec![1.0, 1.0], vec![-1.0, 2.0]];
        let x = solve_harmonic(&system(m.clone(), vec![1.0, -1.0], &[1, 2])).unwrap();
        assert_abs_diff_eq!(x[0], 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(x[1], 0.0, epsilon = 1e-15);
        let x = solve_harmonic(&system(m, vec![1.0, 0.0], &[1, 2])).unwrap();
        assert_abs_diff_eq!(x[0], 2.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(x[1], 1.0 / 3.0, epsilon = 1e-15);
        let id = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
        let x = solve_harmonic(&system(id, vec![0.25, -4.0], &[1, 1])).unwrap();
        assert_eq!(x, vec![0.25, -4.0]);
    }

    #[test]
    fn singular_system_named() {
        let s = system(
            vec![vec![1.0, 1.0], vec![2.0, 2.0]],
            vec![1.0, 0.0],
            &[1, 2],
        );
        let err = solve_harmonic(&s).unwrap_err();
        assert_eq!(
            err,
            Error::SingularSystem {
                k: 1,
                family: CoefficientFamily::Cosine
            }
        );
        assert!(err.to_string().contains("k = 1 (cosine)"));
        let s = system(
            vec![vec![1.0, 1.0], vec![1.0, 1.0 + 1e-15]],
            vec![1.0, 0.0],
            &[1, 2],
        );
        assert!(matches!(
            solve_harmonic(&s),
            Err(Error::IllConditioned { k: 1, .. })
        ));
    }

    #[test]
    fn all_supported_orders_are_solvable() {
        for p in 0..=MAX_ORDER {
            for fam in 0..2 {
                for n in [1, 2, 3, 5, 10, 20] {
                    let g = make_grid(fam, n).unwrap();
                    let layers: Vec<_> = (0..=p)
                        .map(|m| FourierLayer::<f64>::zero(m, g.n()))
                        .collect();
                    let (_, diags) = build_from_layers(&g, &layers)
                        .unwrap_or_else(|e| panic!("p={p} I={fam} n={n}: {e}"));
                    assert_eq!(diags.len(), 2 * g.n());
                }
            }
        }
    }

    #[test]
    fn order_limit_enforced() {
        let g = make_grid(0, 2).unwrap();
        let s = HermiteSamples::new(g, 9, vec![vec![0.0; 5]; 10]).unwrap();
        assert_eq!(
            build_hermite(&s, BuildMode::PaperHTerms),
            Err(Error::OrderTooHigh(9))
        );
    }

    #[test]
    fn cos_t_p1() {
        let g = make_grid(0, 1).unwrap();
        let s = HermiteSamples::from_fn(g, 1, |t: f64, m| if m == 0 { t.cos() } else { -t.sin() });
        let poly = build_hermite(&s, BuildMode::StrictCentered).unwrap();
        assert_abs_diff_eq!(poly.cos_coeff(1), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(poly.cos_coeff(2), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(poly.sin_coeff(1), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(poly.sin_coeff(2), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(poly.const_term(), 0.0, epsilon = 1e-15);
        assert_eq!(poly.mean_terms(), &[0.0, 0.0]);
    }

    #[test]
    fn zero_samples_give_zero_polynomial() {
        let g = make_grid(1, 3).unwrap();
        let s = HermiteSamples::new(g, 3, vec![vec![0.0; 7]; 4]).unwrap();
        let poly = build_hermite(&s, BuildMode::StrictCentered).unwrap();
        assert_eq!(poly.const_term(), 0.0);
        assert!(poly
            .cos_coeffs()
            .values()
            .chain(poly.sin_coeffs().values())
            .all(|&c| c == 0.0));
        assert_eq!(poly.cos_coeffs().len(), 3 * 4);
    }

    #[test]
    fn strict_rejects_uncentered_rows() {
        let g = make_grid(0, 2).unwrap();
        let rows = vec![vec![1.0; 5], vec![0.5, 0.6, 0.4, 0.5, 0.5]];
        let s = HermiteSamples::new(g, 1, rows).unwrap();
        let err = build_hermite(&s, BuildMode::StrictCentered).unwrap_err();
        assert!(matches!(err, Error::NotCentered { order: 1, .. }), "{err}");
        let poly = build_hermite(&s, BuildMode::PaperHTerms).unwrap();
        assert_abs_diff_eq!(poly.mean_terms()[1], 0.5, epsilon = 1e-15);
        assert_eq!(poly.mean_terms()[0], 0.0);
    }

    #[test]
    fn p0_is_plain_interpolation() {
        let g = make_grid(1, 3).unwrap();
        let row = vec![0.3, -1.0, 2.0, 0.5, 0.0, 1.5, -0.7];
        let s = HermiteSamples::new(g, 0, vec![row.clone()]).unwrap();
        let poly = build_hermite(&s, BuildMode::StrictCentered).unwrap();
        let layer = crate::spectral::trig_interp_coeffs(&row, &g).unwrap();
        assert_eq!(poly.const_term(), layer.a0 / 2.0);
        for k in 1..=3 {
            assert_eq!(poly.cos_coeff(k), layer.cos(k));
            assert_eq!(poly.sin_coeff(k), layer.sin(k));
        }
    }

    #[test]
    fn f32_build_smoke() {
        let g = make_grid(0, 4).unwrap();
        let s = HermiteSamples::<f32>::from_fn(g, 2, |t, m| match m {
            0 => (2.0 * t).cos(),
            1 => -2.0 * (2.0 * t).sin(),
            _ => -4.0 * (2.0 * t).cos(),
        });
        let poly = build_hermite(&s, BuildMode::StrictCentered).unwrap();
        assert!((poly.cos_coeff(2) - 1.0).abs() < 1e-5);
        assert!(poly.sin_coeff(2).abs() < 1e-5);
    }
}
