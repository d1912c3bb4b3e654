//! Point evaluation of a [`HermiteTrigPoly`] and its derivatives.

use crate::hermite::HermiteTrigPoly;
use crate::scalar::Real;
use crate::spectral::HermiteSamples;

/// `d^m/dt^m cos(x)` and `d^m/dt^m sin(x)` as functions of `x`, up to the
/// `ω^m` factor.
fn rotated<T: Real>(x: T, m: usize) -> (T, T) {
    let (s, c) = x.sin_cos();
    match m % 4 {
        0 => (c, s),
        1 => (-s, c),
        2 => (-c, -s),
        _ => (s, -c),
    }
}

impl<T: Real> HermiteTrigPoly<T> {
    /// Value of the order-`m` derivative at `t`.
    ///
    /// The constant term only enters at `m = 0`; `mean_terms[m]` is added for
    /// `1 ≤ m ≤ p` and nothing is added beyond `p`.
    pub fn evaluate(&self, t: T, m: usize) -> T {
        let tau = T::PI() + T::PI();
        let mut t = t % tau;
        if t < T::zero() {
            t = t + tau;
        }
        let power = m as i32;
        let mut acc = T::zero();
        for (&omega, &a) in &self.cos_coeffs {
            let w = T::of(omega);
            acc = acc + a * w.powi(power) * rotated(w * t, m).0;
        }
        for (&omega, &b) in &self.sin_coeffs {
            let w = T::of(omega);
            acc = acc + b * w.powi(power) * rotated(w * t, m).1;
        }
        if m == 0 {
            acc = acc + self.const_term;
        }
        if let Some(&mean) = self.mean_terms.get(m) {
            acc = acc + mean;
        }
        acc
    }

    pub fn evaluate_many(&self, ts: &[T], m: usize) -> Vec<T> {
        ts.iter().map(|&t| self.evaluate(t, m)).collect()
    }
}

impl<T: Real> HermiteTrigPoly<T> {
    /// For each order `m = 0..=p`, the largest `|T^(m)(t_j) − row_m[j]|`
    /// over the nodes of the sample grid.
    pub fn node_residuals(&self, samples: &HermiteSamples<T>) -> Vec<T> {
        let nodes = samples.grid().nodes::<T>();
        samples
            .rows()
            .iter()
            .enumerate()
            .map(|(m, row)| {
                nodes
                    .iter()
                    .zip(row)
                    .map(|(&t, &v)| (self.evaluate(t, m) - v).abs())
                    .fold(T::zero(), T::max)
            })
            .collect()
    }
}

pub fn evaluate<T: Real>(poly: &HermiteTrigPoly<T>, t: T, order: usize) -> T {
    poly.evaluate(t, order)
}

pub fn evaluate_many<T: Real>(poly: &HermiteTrigPoly<T>, ts: &[T], order: usize) -> Vec<T> {
    poly.evaluate_many(ts, order)
}
