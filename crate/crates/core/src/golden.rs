//! Worked examples frozen as executable checks.
//!
//! Each case records where its expected values come from, so a failure
//! points either at a published closed-form result, at an independent
//! computation (exact rational solve, direct summation, dense collocation)
//! or at a definition.

use std::f64::consts::PI;
use std::fmt;

use crate::alias::{alias_sign, verify_alias, Branch, FrequencyTag};
use crate::closed_form::{closed_form_p1, closed_form_p2};
use crate::error::Result;
use crate::grid::{make_grid, GridFamily, GridSpec};
use crate::hermite::{
    assemble_system, build_from_layers, build_hermite, frequency_set, solve_harmonic, BuildMode,
    CoefficientFamily,
};
use crate::oracle::collocation_solve;
use crate::spectral::{trig_interp_coeffs, FourierLayer, HermiteSamples};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// A closed-form coefficient formula from the method's derivation.
    PublishedFormula,
    /// Computed by an independent route (exact arithmetic, direct sums,
    /// dense collocation) and frozen.
    IndependentOracle,
    /// Follows directly from a definition.
    Definition,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::PublishedFormula => "published formula",
            Source::IndependentOracle => "independent oracle",
            Source::Definition => "definition",
        })
    }
}

#[derive(Clone)]
pub struct GoldenCase {
    pub id: &'static str,
    pub source: Source,
    pub expected: Vec<f64>,
    pub tolerance: f64,
    pub compute: fn() -> Result<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GoldenResult {
    pub id: &'static str,
    pub source: Source,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GoldenReport {
    pub results: Vec<GoldenResult>,
}

impl GoldenReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &GoldenResult> {
        self.results.iter().filter(|r| !r.passed)
    }

    pub fn render(&self) -> String {
        self.results
            .iter()
            .map(|r| {
                format!(
                    "{} {} [{}] {}\n",
                    if r.passed { "ok  " } else { "FAIL" },
                    r.id,
                    r.source,
                    r.detail
                )
            })
            .collect()
    }
}

pub fn run_cases(cases: &[GoldenCase]) -> GoldenReport {
    let results = cases
        .iter()
        .map(|case| {
            let (passed, detail) = match (case.compute)() {
                Err(e) => (false, format!("error: {e}")),
                Ok(actual) if actual.len() != case.expected.len() => (
                    false,
                    format!(
                        "expected {} values, got {}",
                        case.expected.len(),
                        actual.len()
                    ),
                ),
                Ok(actual) => {
                    let worst = actual
                        .iter()
                        .zip(&case.expected)
                        .map(|(a, e)| (a - e).abs())
                        .fold(0.0f64, f64::max);
                    (
                        worst <= case.tolerance,
                        format!("max deviation {worst:.2e} (tol {:.0e})", case.tolerance),
                    )
                }
            };
            GoldenResult {
                id: case.id,
                source: case.source,
                passed,
                detail,
            }
        })
        .collect();
    GoldenReport { results }
}

pub fn golden_suite() -> GoldenReport {
    run_cases(&golden_cases())
}

fn grid(family: i64, n: i64) -> GridSpec {
    make_grid(family, n).expect("valid grid")
}

fn cos_t_samples(family: i64, n: i64, p: usize) -> HermiteSamples<f64> {
    HermiteSamples::from_fn(grid(family, n), p, |t: f64, m| {
        (t + m as f64 * PI / 2.0).cos()
    })
}

/// Layers with the given `(A_m, B_m)` at harmonic `k` of a grid with half-width `n`.
fn layers_at(n: usize, k: usize, values: &[(f64, f64)]) -> Vec<FourierLayer<f64>> {
    values
        .iter()
        .enumerate()
        .map(|(m, &(a, b))| {
            let mut layer = FourierLayer::zero(m, n);
            layer.a[k - 1] = a;
            layer.b[k - 1] = b;
            layer
        })
        .collect()
}

const P2_LAYERS: [(f64, f64); 3] = [(0.5, -0.25), (0.75, 0.2), (-0.3, 0.1)];

fn omegas(tags: Vec<FrequencyTag>) -> Vec<f64> {
    tags.iter().map(|t| t.omega() as f64).collect()
}

fn signs(family: GridFamily, i: usize, branch: Branch) -> Result<Vec<f64>> {
    let s = alias_sign(family, i, branch)?;
    Ok(vec![s.cos as f64, s.sin as f64])
}

fn flatten(matrix: Vec<Vec<f64>>, rhs: Vec<f64>) -> Vec<f64> {
    matrix.into_iter().flatten().chain(rhs).collect()
}

/// The golden cases; see [`Source`] for provenance.
pub fn golden_cases() -> Vec<GoldenCase> {
    use Source::*;
    vec![
        GoldenCase {
            id: "make_grid.origin_n1",
            source: Definition,
            expected: vec![0.0, 2.0 * PI / 3.0, 4.0 * PI / 3.0],
            tolerance: 1e-15,
            compute: || Ok(grid(0, 1).nodes()),
        },
        GoldenCase {
            id: "nodes.staggered_n2",
            source: Definition,
            expected: vec![PI / 5.0, 3.0 * PI / 5.0, PI, 7.0 * PI / 5.0, 9.0 * PI / 5.0],
            tolerance: 1e-15,
            compute: || Ok(grid(1, 2).nodes()),
        },
        GoldenCase {
            id: "trig_interp_coeffs.cos_t_origin_n2",
            source: IndependentOracle,
            expected: vec![0.0, 1.0, 0.0, 0.0, 0.0],
            tolerance: 1e-14,
            compute: || {
                let g = grid(0, 2);
                let row: Vec<f64> = g.nodes::<f64>().iter().map(|t| t.cos()).collect();
                let l = trig_interp_coeffs(&row, &g)?;
                Ok(vec![l.a0, l.a[0], l.a[1], l.b[0], l.b[1]])
            },
        },
        GoldenCase {
            id: "trig_interp_coeffs.sin_2t_origin_n2",
            source: IndependentOracle,
            expected: vec![0.0, 0.0, 0.0, 0.0, 1.0],
            tolerance: 1e-14,
            compute: || {
                let g = grid(0, 2);
                let row: Vec<f64> = g.nodes::<f64>().iter().map(|t| (2.0 * t).sin()).collect();
                let l = trig_interp_coeffs(&row, &g)?;
                Ok(vec![l.a0, l.a[0], l.a[1], l.b[0], l.b[1]])
            },
        },
        GoldenCase {
            id: "alias_sign.origin_i1_minus",
            source: PublishedFormula,
            expected: vec![1.0, -1.0],
            tolerance: 0.0,
            compute: || signs(GridFamily::Origin, 1, Branch::Minus),
        },
        GoldenCase {
            id: "alias_sign.origin_i2_plus",
            source: IndependentOracle,
            expected: vec![1.0, 1.0],
            tolerance: 0.0,
            compute: || signs(GridFamily::Origin, 2, Branch::Plus),
        },
        GoldenCase {
            id: "alias_sign.staggered_i1_minus",
            source: IndependentOracle,
            expected: vec![-1.0, 1.0],
            tolerance: 0.0,
            compute: || signs(GridFamily::Staggered, 1, Branch::Minus),
        },
        GoldenCase {
            id: "verify_alias.origin_n2_k1_omega4",
            source: Definition,
            expected: vec![0.0],
            tolerance: 1e-12,
            compute: || {
                let g = grid(0, 2);
                Ok(vec![verify_alias(
                    &g,
                    1,
                    &FrequencyTag::new(&g, 4, 1, 1, Branch::Minus)?,
                )])
            },
        },
        GoldenCase {
            id: "verify_alias.staggered_n2_k2_omega7",
            source: Definition,
            expected: vec![0.0],
            tolerance: 1e-12,
            compute: || {
                let g = grid(1, 2);
                Ok(vec![verify_alias(
                    &g,
                    2,
                    &FrequencyTag::new(&g, 7, 2, 1, Branch::Plus)?,
                )])
            },
        },
        GoldenCase {
            id: "frequency_set.p1_N3_k1",
            source: PublishedFormula,
            expected: vec![1.0, 2.0],
            tolerance: 0.0,
            compute: || Ok(omegas(frequency_set(1, 3, 1)?)),
        },
        GoldenCase {
            id: "frequency_set.p2_N5_k2",
            source: PublishedFormula,
            expected: vec![2.0, 3.0, 7.0],
            tolerance: 0.0,
            compute: || Ok(omegas(frequency_set(2, 5, 2)?)),
        },
        GoldenCase {
            id: "frequency_set.p3_N5_k1",
            source: IndependentOracle,
            expected: vec![1.0, 4.0, 6.0, 9.0],
            tolerance: 0.0,
            compute: || Ok(omegas(frequency_set(3, 5, 1)?)),
        },
        GoldenCase {
            id: "assemble_system.p1_origin_cosine",
            source: PublishedFormula,
            expected: vec![1.0, 1.0, -1.0, 2.0, 0.3, 0.7],
            tolerance: 0.0,
            compute: || {
                let layers = layers_at(1, 1, &[(0.3, 0.1), (0.2, 0.7)]);
                let s = assemble_system(&grid(0, 1), 1, 1, CoefficientFamily::Cosine, &layers)?;
                Ok(flatten(s.matrix, s.rhs))
            },
        },
        GoldenCase {
            id: "assemble_system.p1_origin_sine",
            source: PublishedFormula,
            expected: vec![1.0, -1.0, 1.0, 2.0, 0.1, 0.2],
            tolerance: 0.0,
            compute: || {
                let layers = layers_at(1, 1, &[(0.3, 0.1), (0.2, 0.7)]);
                let s = assemble_system(&grid(0, 1), 1, 1, CoefficientFamily::Sine, &layers)?;
                Ok(flatten(s.matrix, s.rhs))
            },
        },
        GoldenCase {
            id: "assemble_system.p2_origin_cosine",
            source: IndependentOracle,
            expected: vec![
                1.0, 1.0, 1.0, -1.0, 2.0, -4.0, -1.0, -4.0, -16.0, 0.3, 0.7, 0.5,
            ],
            tolerance: 0.0,
            compute: || {
                let layers = layers_at(1, 1, &[(0.3, 0.1), (0.2, 0.7), (0.5, 0.9)]);
                let s = assemble_system(&grid(0, 1), 2, 1, CoefficientFamily::Cosine, &layers)?;
                Ok(flatten(s.matrix, s.rhs))
            },
        },
        GoldenCase {
            id: "solve_harmonic.cos_t_rhs",
            source: IndependentOracle,
            expected: vec![1.0, 0.0],
            tolerance: 1e-15,
            compute: || {
                let layers = layers_at(1, 1, &[(1.0, 0.0), (0.0, -1.0)]);
                solve_harmonic(&assemble_system(
                    &grid(0, 1),
                    1,
                    1,
                    CoefficientFamily::Cosine,
                    &layers,
                )?)
            },
        },
        GoldenCase {
            id: "solve_harmonic.unit_function_coefficient",
            source: PublishedFormula,
            expected: vec![2.0 / 3.0, 1.0 / 3.0],
            tolerance: 1e-15,
            compute: || {
                let layers = layers_at(1, 1, &[(1.0, 0.0), (0.0, 0.0)]);
                solve_harmonic(&assemble_system(
                    &grid(0, 1),
                    1,
                    1,
                    CoefficientFamily::Cosine,
                    &layers,
                )?)
            },
        },
        GoldenCase {
            id: "closed_form_p1.origin_N3_k1",
            source: PublishedFormula,
            expected: vec![2.0 / 3.0, 1.0 / 3.0, 0.0, 0.0],
            tolerance: 1e-15,
            compute: || {
                let p = closed_form_p1(&layers_at(1, 1, &[(1.0, 0.0), (0.0, 0.0)]), &grid(0, 1))?;
                Ok(vec![
                    p.cos_coeff(1),
                    p.cos_coeff(2),
                    p.sin_coeff(1),
                    p.sin_coeff(2),
                ])
            },
        },
        GoldenCase {
            id: "closed_form_p1.origin_N5_k2",
            source: PublishedFormula,
            expected: vec![0.26, 0.24, 0.0, 0.25],
            tolerance: 1e-15,
            compute: || {
                let l = layers_at(2, 2, &P2_LAYERS[..2]);
                let p = closed_form_p1(&l, &grid(0, 2))?;
                Ok(vec![
                    p.cos_coeff(2),
                    p.cos_coeff(3),
                    p.sin_coeff(2),
                    p.sin_coeff(3),
                ])
            },
        },
        GoldenCase {
            id: "closed_form_p1.staggered_N5_k2",
            source: PublishedFormula,
            expected: vec![0.26, -0.24, 0.0, -0.25],
            tolerance: 1e-15,
            compute: || {
                let l = layers_at(2, 2, &P2_LAYERS[..2]);
                let p = closed_form_p1(&l, &grid(1, 2))?;
                Ok(vec![
                    p.cos_coeff(2),
                    p.cos_coeff(3),
                    p.sin_coeff(2),
                    p.sin_coeff(3),
                ])
            },
        },
        GoldenCase {
            id: "closed_form_p2.origin_cos_t",
            source: IndependentOracle,
            expected: vec![1.0, 0.0, 0.0],
            tolerance: 1e-15,
            compute: || {
                let l = layers_at(1, 1, &[(1.0, 0.0), (0.0, -1.0), (-1.0, 0.0)]);
                let p = closed_form_p2(&l, &grid(0, 1))?;
                Ok(vec![p.cos_coeff(1), p.cos_coeff(2), p.cos_coeff(4)])
            },
        },
        GoldenCase {
            id: "closed_form_p2.origin_N5_k2_exact",
            source: IndependentOracle,
            // 47/125, 91/500, -29/500; -43/500, 207/1000, 43/1000
            expected: vec![0.376, 0.182, -0.058, -0.086, 0.207, 0.043],
            tolerance: 1e-15,
            compute: || {
                let p = closed_form_p2(&layers_at(2, 2, &P2_LAYERS), &grid(0, 2))?;
                Ok(vec![
                    p.cos_coeff(2),
                    p.cos_coeff(3),
                    p.cos_coeff(7),
                    p.sin_coeff(2),
                    p.sin_coeff(3),
                    p.sin_coeff(7),
                ])
            },
        },
        GoldenCase {
            id: "closed_form_p2.staggered_N5_k2_exact",
            source: IndependentOracle,
            expected: vec![0.376, -0.182, 0.058, -0.086, -0.207, -0.043],
            tolerance: 1e-15,
            compute: || {
                let p = closed_form_p2(&layers_at(2, 2, &P2_LAYERS), &grid(1, 2))?;
                Ok(vec![
                    p.cos_coeff(2),
                    p.cos_coeff(3),
                    p.cos_coeff(7),
                    p.sin_coeff(2),
                    p.sin_coeff(3),
                    p.sin_coeff(7),
                ])
            },
        },
        GoldenCase {
            id: "closed_form_p2.generic_agreement_staggered",
            source: IndependentOracle,
            expected: vec![0.0],
            tolerance: 1e-12,
            compute: || {
                let g = grid(1, 2);
                let l = layers_at(2, 2, &P2_LAYERS);
                let fast = closed_form_p2(&l, &g)?;
                Ok(vec![fast.max_coeff_diff(&build_from_layers(&g, &l)?.0)])
            },
        },
        GoldenCase {
            id: "build_hermite.cos_t_p1_origin_n1",
            source: IndependentOracle,
            expected: vec![0.0, 1.0, 0.0, 0.0, 0.0],
            tolerance: 1e-14,
            compute: || {
                let p = build_hermite(&cos_t_samples(0, 1, 1), BuildMode::StrictCentered)?;
                Ok(vec![
                    p.const_term(),
                    p.cos_coeff(1),
                    p.cos_coeff(2),
                    p.sin_coeff(1),
                    p.sin_coeff(2),
                ])
            },
        },
        GoldenCase {
            id: "build_hermite.mean_term_paper_mode",
            source: Definition,
            expected: vec![0.5, 0.5, 0.5],
            tolerance: 1e-15,
            compute: || {
                let g = grid(0, 2);
                let s = HermiteSamples::new(g, 1, vec![vec![0.0; 5], vec![0.5; 5]])?;
                let p = build_hermite(&s, BuildMode::PaperHTerms)?;
                Ok(vec![
                    p.mean_terms()[1],
                    p.evaluate(0.1, 1),
                    p.evaluate(4.0, 1),
                ])
            },
        },
        GoldenCase {
            id: "collocation_solve.cos_t_p1_origin_n1",
            source: IndependentOracle,
            expected: vec![0.0, 1.0, 0.0, 0.0, 0.0],
            tolerance: 1e-14,
            compute: || {
                let p = collocation_solve(&cos_t_samples(0, 1, 1), BuildMode::StrictCentered)?;
                Ok(vec![
                    p.const_term(),
                    p.cos_coeff(1),
                    p.cos_coeff(2),
                    p.sin_coeff(1),
                    p.sin_coeff(2),
                ])
            },
        },
        GoldenCase {
            id: "evaluate.cos_t",
            source: Definition,
            expected: vec![1.0, -1.0],
            tolerance: 1e-14,
            compute: || {
                let p = build_hermite(&cos_t_samples(1, 2, 2), BuildMode::StrictCentered)?;
                Ok(vec![p.evaluate(0.0, 0), p.evaluate(PI / 2.0, 1)])
            },
        },
    ]
}
