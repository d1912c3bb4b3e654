//! The two uniform grid families on `[0, 2π)`.
//!
//! Both families have `N = 2n + 1` nodes with spacing `2π/N`. Using the
//! 1-based node index `j = 1..=N`:
//!
//! * family 0: `t_j = 2π(j − 1)/N`, so the first node sits at the origin;
//! * family 1: `t_j = π(2j − 1)/N`, the family 0 grid shifted by `π/N`.
//!
//! Internally nodes are addressed 0-based (`j0 = j − 1`).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GridFamily {
    /// Nodes `2π(j − 1)/N`, including the origin.
    Origin,
    /// Nodes `π(2j − 1)/N`, offset by half a spacing.
    Staggered,
}

impl GridFamily {
    pub fn index(self) -> u8 {
        match self {
            GridFamily::Origin => 0,
            GridFamily::Staggered => 1,
        }
    }

    pub fn from_index(index: i64) -> Result<Self> {
        match index {
            0 => Ok(GridFamily::Origin),
            1 => Ok(GridFamily::Staggered),
            other => Err(Error::InvalidFamily(other)),
        }
    }
}

/// A uniform grid with an odd number of nodes `N = 2n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridSpec {
    family: GridFamily,
    n: usize,
}

/// Builds a grid from the family index (0 or 1) and the half-width `n ≥ 1`.
pub fn make_grid(family: i64, n: i64) -> Result<GridSpec> {
    let family = GridFamily::from_index(family)?;
    if n < 1 {
        return Err(Error::InvalidHalfWidth(n));
    }
    Ok(GridSpec::new(family, n as usize))
}

impl GridSpec {
    /// # Panics
    /// If `n == 0`; use [`make_grid`] for checked construction.
    pub fn new(family: GridFamily, n: usize) -> Self {
        assert!(n >= 1, "grid half-width must be at least 1");
        GridSpec { family, n }
    }

    /// Builds a grid from a node count, which must be odd and at least 3.
    pub fn from_node_count(family: GridFamily, node_count: usize) -> Result<Self> {
        if node_count.is_multiple_of(2) {
            return Err(Error::EvenNodeCount(node_count));
        }
        if node_count < 3 {
            return Err(Error::InvalidHalfWidth(0));
        }
        Ok(GridSpec::new(family, node_count / 2))
    }

    pub fn family(&self) -> GridFamily {
        self.family
    }

    /// Half-width `n`; also the highest base harmonic.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of nodes `N = 2n + 1`.
    pub fn node_count(&self) -> usize {
        2 * self.n + 1
    }

    /// Node `t_{j0+1}`, computed from the closed formula.
    pub fn node<T: Real>(&self, j0: usize) -> T {
        let numer = match self.family {
            GridFamily::Origin => 2 * j0,
            GridFamily::Staggered => 2 * j0 + 1,
        };
        T::PI() * T::of(numer) / T::of(self.node_count())
    }

    pub fn nodes<T: Real>(&self) -> Vec<T> {
        (0..self.node_count()).map(|j0| self.node(j0)).collect()
    }

    /// The angle `k · t_{j0+1}` reduced modulo 2π using integer arithmetic.
    pub fn phase<T: Real>(&self, k: usize, j0: usize) -> T {
        let nn = self.node_count();
        let numer = match self.family {
            GridFamily::Origin => (2 * ((k % nn) * j0 % nn)) % (2 * nn),
            GridFamily::Staggered => (k % (2 * nn)) * (2 * j0 + 1) % (2 * nn),
        };
        T::PI() * T::of(numer) / T::of(nn)
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use approx::assert_abs_diff_eq;

    use super::*;

    fn assert_nodes(grid: GridSpec, expected: &[f64]) {
        let nodes = grid.nodes::<f64>();
        assert_eq!(nodes.len(), expected.len());
        for (a, b) in nodes.iter().zip(expected) {
            assert_abs_diff_eq!(*a, *b, epsilon = 1e-15);
        }
    }

    #[test]
    fn make_grid_small_cases() {
        let g = make_grid(0, 1).unwrap();
        assert_eq!(g.node_count(), 3);
        assert_nodes(g, &[0.0, 2.0 * PI / 3.0, 4.0 * PI / 3.0]);

        let g = make_grid(1, 1).unwrap();
        assert_eq!(g.node_count(), 3);
        assert_nodes(g, &[PI / 3.0, PI, 5.0 * PI / 3.0]);

        assert_eq!(make_grid(0, 0), Err(Error::InvalidHalfWidth(0)));
        assert_eq!(make_grid(2, 3), Err(Error::InvalidFamily(2)));
        assert_eq!(make_grid(-1, 3), Err(Error::InvalidFamily(-1)));
    }

    #[test]
    fn nodes_five_point_grids() {
        assert_nodes(
            make_grid(0, 2).unwrap(),
            &[
                0.0,
                2.0 * PI / 5.0,
                4.0 * PI / 5.0,
                6.0 * PI / 5.0,
                8.0 * PI / 5.0,
            ],
        );
        assert_nodes(
            make_grid(1, 2).unwrap(),
            &[PI / 5.0, 3.0 * PI / 5.0, PI, 7.0 * PI / 5.0, 9.0 * PI / 5.0],
        );
    }

    #[test]
    fn first_node_is_zero_only_for_origin_family() {
        for n in 1..20 {
            assert_eq!(make_grid(0, n).unwrap().node::<f64>(0), 0.0);
            assert!(make_grid(1, n).unwrap().node::<f64>(0) > 0.0);
        }
    }

    #[test]
    fn node_count_parity() {
        assert_eq!(
            GridSpec::from_node_count(GridFamily::Origin, 4),
            Err(Error::EvenNodeCount(4))
        );
        assert_eq!(
            GridSpec::from_node_count(GridFamily::Staggered, 7)
                .unwrap()
                .n(),
            3
        );
        let err = GridSpec::from_node_count(GridFamily::Origin, 4).unwrap_err();
        assert_eq!(err.to_string(), "N must be odd (N = 2n+1), got N = 4");
    }

    #[test]
    fn phase_matches_direct_product() {
        for family in [GridFamily::Origin, GridFamily::Staggered] {
            let g = GridSpec::new(family, 6);
            for k in 0..40 {
                for j0 in 0..g.node_count() {
                    let direct = k as f64 * g.node::<f64>(j0);
                    let reduced: f64 = g.phase(k, j0);
                    assert!((0.0..2.0 * PI).contains(&reduced));
                    assert_abs_diff_eq!(direct.cos(), reduced.cos(), epsilon = 1e-12);
                    assert_abs_diff_eq!(direct.sin(), reduced.sin(), epsilon = 1e-12);
                }
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn spacing_and_shift(n in 1usize..200) {
            let g0 = GridSpec::new(GridFamily::Origin, n).nodes::<f64>();
            let g1 = GridSpec::new(GridFamily::Staggered, n).nodes::<f64>();
            let nn = (2 * n + 1) as f64;
            let h = 2.0 * PI / nn;
            for w in g0.windows(2).chain(g1.windows(2)) {
                proptest::prop_assert!(w[1] > w[0]);
                proptest::prop_assert!((w[1] - w[0] - h).abs() < 1e-12);
            }
            for (a, b) in g0.iter().zip(&g1) {
                proptest::prop_assert!((b - a - PI / nn).abs() < 1e-12);
                proptest::prop_assert!(*b < 2.0 * PI && *a >= 0.0);
            }
        }
    }
}
