//! Sign rules by which the frequencies `iN ± k` collapse onto the base
//! harmonic `k` at the nodes of a grid with `N` points.
//!
//! On the origin grid `N t_j` is a multiple of 2π, so `cos(iN t_j) = 1` and
//! `sin(iN t_j) = 0`. On the staggered grid `N t_j` is an odd multiple of π,
//! giving `cos(iN t_j) = (−1)^i`. The angle addition formulas then yield
//!
//! | family | branch | cos sign | sin sign |
//! |--------|--------|----------|----------|
//! | origin | `iN+k` | +1 | +1 |
//! | origin | `iN−k` | +1 | −1 |
//! | staggered | `iN+k` | (−1)^i | (−1)^i |
//! | staggered | `iN−k` | (−1)^i | −(−1)^i |

use std::fmt;

use crate::error::{Error, Result};
use crate::grid::{GridFamily, GridSpec};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    /// `ω = k` (block 0).
    Base,
    /// `ω = iN − k`.
    Minus,
    /// `ω = iN + k`.
    Plus,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Base => "base",
            Branch::Minus => "minus",
            Branch::Plus => "plus",
        })
    }
}

/// Signs with `cos(ω t_j) = cos · cos(k t_j)` and `sin(ω t_j) = sin · sin(k t_j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AliasSign {
    pub cos: i8,
    pub sin: i8,
}

/// A frequency of the Hermite ansatz together with its decomposition
/// `ω = i·N ± k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrequencyTag {
    omega: usize,
    base_k: usize,
    block_i: usize,
    branch: Branch,
}

fn implied_omega(node_count: usize, k: usize, block: usize, branch: Branch) -> Option<usize> {
    match branch {
        Branch::Base => (block == 0).then_some(k),
        Branch::Plus => Some(block * node_count + k),
        Branch::Minus => (block * node_count).checked_sub(k),
    }
}

impl FrequencyTag {
    /// Checks `omega` against `(k, i, branch)` on `grid`.
    pub fn new(
        grid: &GridSpec,
        omega: usize,
        base_k: usize,
        block_i: usize,
        branch: Branch,
    ) -> Result<Self> {
        if base_k < 1 || base_k > grid.n() {
            return Err(Error::InvalidBaseHarmonic {
                k: base_k,
                n: grid.n(),
            });
        }
        if branch == Branch::Base && block_i != 0 {
            return Err(Error::BaseBranchBlock(block_i));
        }
        let valid_block = branch == Branch::Base || block_i >= 1;
        if !valid_block || implied_omega(grid.node_count(), base_k, block_i, branch) != Some(omega)
        {
            return Err(Error::FrequencyTagMismatch {
                omega,
                k: base_k,
                block: block_i,
                branch: match branch {
                    Branch::Base => "base",
                    Branch::Minus => "minus",
                    Branch::Plus => "plus",
                },
            });
        }
        Ok(FrequencyTag {
            omega,
            base_k,
            block_i,
            branch,
        })
    }

    /// Derives `ω` from `(k, i, branch)`.
    pub fn derive(grid: &GridSpec, base_k: usize, block_i: usize, branch: Branch) -> Result<Self> {
        let omega = match branch {
            Branch::Base => base_k,
            Branch::Plus => block_i * grid.node_count() + base_k,
            Branch::Minus => (block_i * grid.node_count()).saturating_sub(base_k),
        };
        Self::new(grid, omega, base_k, block_i, branch)
    }

    pub fn omega(&self) -> usize {
        self.omega
    }

    pub fn base_k(&self) -> usize {
        self.base_k
    }

    pub fn block_i(&self) -> usize {
        self.block_i
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }
}

/// Alias signs from the closed-form rule in the module docs.
pub fn alias_sign(family: GridFamily, block_i: usize, branch: Branch) -> Result<AliasSign> {
    if branch == Branch::Base {
        if block_i != 0 {
            return Err(Error::BaseBranchBlock(block_i));
        }
        return Ok(AliasSign { cos: 1, sin: 1 });
    }
    let block_sign: i8 = match family {
        GridFamily::Origin => 1,
        GridFamily::Staggered if block_i.is_multiple_of(2) => 1,
        GridFamily::Staggered => -1,
    };
    Ok(match branch {
        Branch::Plus => AliasSign {
            cos: block_sign,
            sin: block_sign,
        },
        _ => AliasSign {
            cos: block_sign,
            sin: -block_sign,
        },
    })
}

/// Largest deviation from the alias identities of `tag` over all nodes,
/// evaluated with ordinary trigonometric functions.
pub fn verify_alias<T: Real>(grid: &GridSpec, k: usize, tag: &FrequencyTag) -> T {
    assert!(k >= 1 && k <= grid.n(), "base harmonic outside 1..=n");
    let sign = alias_sign(grid.family(), tag.block_i(), tag.branch())
        .expect("FrequencyTag invariants guarantee a valid branch");
    let (sc, ss) = (T::from_i8(sign.cos).unwrap(), T::from_i8(sign.sin).unwrap());
    let omega = T::of(tag.omega());
    let kk = T::of(k);
    grid.nodes::<T>()
        .into_iter()
        .map(|t| {
            let dc = ((omega * t).cos() - sc * (kk * t).cos()).abs();
            let ds = ((omega * t).sin() - ss * (kk * t).sin()).abs();
            dc.max(ds)
        })
        .fold(T::zero(), T::max)
}
