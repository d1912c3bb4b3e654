//! Hermite trigonometric interpolation on uniform periodic grids.
//!
//! Given samples of a 2π-periodic function and its derivatives up to order
//! `p` at the `N = 2n + 1` nodes of a uniform grid, this crate builds a
//! trigonometric polynomial that reproduces every sample. High frequencies
//! `iN ± k` coincide with the base harmonic `k` at the nodes (up to a sign),
//! so the full problem splits into `2n` independent systems of size `p + 1`,
//! one per base harmonic and per cosine/sine family. The right-hand sides of
//! these systems are the ordinary discrete Fourier coefficients of each
//! sample row.
//!
//! ```
//! use hermitrig::{make_grid, build_hermite, BuildMode, HermiteSamples};
//!
//! let grid = make_grid(0, 4).unwrap();
//! let t = grid.nodes::<f64>();
//! let rows = vec![
//!     t.iter().map(|t| t.sin().exp()).collect(),
//!     t.iter().map(|t| t.cos() * t.sin().exp()).collect(),
//! ];
//! let samples = HermiteSamples::new(grid, 1, rows).unwrap();
//! let poly = build_hermite(&samples, BuildMode::PaperHTerms).unwrap();
//! let value = poly.evaluate(0.3, 0);
//! assert!((value - 0.3f64.sin().exp()).abs() < 1e-6);
//! ```
//!
//! All numerical code is generic over [`Real`] (implemented for `f32` and
//! `f64`); the `*64` aliases below fix the scalar to `f64`.

pub mod alias;
pub mod cli;
pub mod closed_form;
pub mod error;
pub mod eval;
pub mod functions;
pub mod golden;
pub mod grid;
pub mod hermite;
pub mod io;
pub mod linalg;
pub mod oracle;
pub mod scalar;
pub mod spectral;

pub use alias::{alias_sign, verify_alias, AliasSign, Branch, FrequencyTag};
pub use closed_form::{closed_form_p1, closed_form_p2};
pub use error::{Error, Result};
pub use eval::{evaluate, evaluate_many};
pub use functions::BuiltinFunction;
pub use grid::{make_grid, GridFamily, GridSpec};
pub use hermite::{
    assemble_system, build_hermite, frequency_set, solve_harmonic, BuildMode, CoefficientFamily,
    HarmonicSystem, HermiteTrigPoly, MAX_ORDER,
};
pub use oracle::collocation_solve;
pub use scalar::Real;
pub use spectral::{center_rows, trig_interp_coeffs, FourierLayer, HermiteSamples, MeanReport};

pub type HermiteSamples64 = HermiteSamples<f64>;
pub type HermiteSamples32 = HermiteSamples<f32>;
pub type FourierLayer64 = FourierLayer<f64>;
pub type FourierLayer32 = FourierLayer<f32>;
pub type HermiteTrigPoly64 = HermiteTrigPoly<f64>;
pub type HermiteTrigPoly32 = HermiteTrigPoly<f32>;
pub type HarmonicSystem64 = HarmonicSystem<f64>;
pub type HarmonicSystem32 = HarmonicSystem<f32>;
pub type MeanReport64 = MeanReport<f64>;
