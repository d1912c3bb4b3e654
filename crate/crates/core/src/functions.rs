//! Built-in periodic test functions with exact derivatives of any order.
//!
//! Derivatives are obtained by propagating truncated Taylor series
//! (`c_i = f^(i)(t) / i!`) through `exp`, `sin`, `cos` and reciprocals.

use std::fmt;
use std::str::FromStr;

use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BuiltinFunction {
    /// `exp(sin t)`
    ExpSin,
    /// `1 / (2 + cos t)`
    InvTwoPlusCos,
    /// `cos 3t + sin t`
    Cos3PlusSin,
}

impl BuiltinFunction {
    pub const ALL: [BuiltinFunction; 3] = [
        BuiltinFunction::ExpSin,
        BuiltinFunction::InvTwoPlusCos,
        BuiltinFunction::Cos3PlusSin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinFunction::ExpSin => "exp_sin",
            BuiltinFunction::InvTwoPlusCos => "inv_two_plus_cos",
            BuiltinFunction::Cos3PlusSin => "cos3_plus_sin",
        }
    }

    /// `[f(t), f'(t), ..., f^(order)(t)]`.
    pub fn derivatives<T: Real>(self, t: T, order: usize) -> Vec<T> {
        let len = order + 1;
        let series = match self {
            BuiltinFunction::ExpSin => series_exp(&series_sin(t, len)),
            BuiltinFunction::InvTwoPlusCos => {
                let mut c = series_cos(t, len);
                c[0] = c[0] + T::lit(2.0);
                series_recip(&c)
            }
            BuiltinFunction::Cos3PlusSin => {
                let c3 = series_cos(T::lit(3.0) * t, len);
                let s = series_sin(t, len);
                let mut pow3 = T::one();
                c3.iter()
                    .zip(&s)
                    .map(|(&a, &b)| {
                        let v = a * pow3 + b;
                        pow3 = pow3 * T::lit(3.0);
                        v
                    })
                    .collect()
            }
        };
        let mut factorial = T::one();
        series
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                if i > 0 {
                    factorial = factorial * T::of(i);
                }
                c * factorial
            })
            .collect()
    }

    pub fn value<T: Real>(self, t: T) -> T {
        self.derivatives(t, 0)[0]
    }
}

impl fmt::Display for BuiltinFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BuiltinFunction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Self::ALL.iter().map(|f| f.name()).collect();
                format!(
                    "unknown function '{s}' (expected one of: {})",
                    names.join(", ")
                )
            })
    }
}

/// Taylor coefficients of `sin(t + h)` in `h`.
fn series_sin<T: Real>(t: T, len: usize) -> Vec<T> {
    let (s, c) = t.sin_cos();
    let cycle = [s, c, -s, -c];
    inverse_factorial_scaled(len, |i| cycle[i % 4])
}

fn series_cos<T: Real>(t: T, len: usize) -> Vec<T> {
    let (s, c) = t.sin_cos();
    let cycle = [c, -s, -c, s];
    inverse_factorial_scaled(len, |i| cycle[i % 4])
}

fn inverse_factorial_scaled<T: Real>(len: usize, deriv: impl Fn(usize) -> T) -> Vec<T> {
    let mut inv_fact = T::one();
    (0..len)
        .map(|i| {
            if i > 0 {
                inv_fact = inv_fact / T::of(i);
            }
            deriv(i) * inv_fact
        })
        .collect()
}

fn series_exp<T: Real>(u: &[T]) -> Vec<T> {
    let mut e = Vec::with_capacity(u.len());
    e.push(u[0].exp());
    for i in 1..u.len() {
        let acc = (1..=i).fold(T::zero(), |acc, j| acc + T::of(j) * u[j] * e[i - j]);
        e.push(acc / T::of(i));
    }
    e
}

fn series_recip<T: Real>(u: &[T]) -> Vec<T> {
    let mut r = Vec::with_capacity(u.len());
    r.push(u[0].recip());
    for i in 1..u.len() {
        let acc = (1..=i).fold(T::zero(), |acc, j| acc + u[j] * r[i - j]);
        r.push(-acc / u[0]);
    }
    r
}
