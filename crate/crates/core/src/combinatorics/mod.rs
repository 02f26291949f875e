//! Non-intersecting lattice paths and the lozenge picture.
//!
//! Path `i` starts at `(λ+s+i-1, 0)` and ends at `(0, t+j-1)`, taking unit
//! steps up `(0,1)` or left `(-1,0)`. Counting tuples of vertex-disjoint paths
//! is done by exhaustive search and never touches a determinant.

mod minors;
mod paths;
mod svg;

use serde::Serialize;

use crate::error::{Error, Result};

pub use minors::{brute_force_count, sum_of_minors};
pub use paths::{enumerate_path_tuples, path_tuples, single_path_count};
pub use svg::render_region;

/// Geometry of one lozenge: shifts `s`, `t`, size `n` and `λ = μ - 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RegionSpec {
    pub s: i64,
    pub t: i64,
    pub n: usize,
    pub lambda: i64,
}

impl RegionSpec {
    pub fn new(s: i64, t: i64, n: usize, lambda: i64) -> Self {
        RegionSpec { s, t, n, lambda }
    }

    pub fn width(&self) -> i64 {
        self.lambda + self.n as i64 + self.s
    }

    pub fn height(&self) -> i64 {
        self.n as i64 + self.t
    }

    pub fn start(&self, i: usize) -> (i64, i64) {
        (self.lambda + self.s + i as i64 - 1, 0)
    }

    pub fn end(&self, j: usize) -> (i64, i64) {
        (0, self.t + j as i64 - 1)
    }

    pub(crate) fn check_domain(&self) -> Result<()> {
        if self.lambda + self.s < 0 {
            return Err(Error::Domain(format!(
                "lambda + s = {} is negative; no path model",
                self.lambda + self.s
            )));
        }
        Ok(())
    }
}

/// Limits on the exhaustive search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCaps {
    pub max_n: usize,
    pub max_area: i64,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps { max_n: 4, max_area: 60 }
    }
}

impl OracleCaps {
    pub(crate) fn check(&self, region: &RegionSpec) -> Result<()> {
        if region.n > self.max_n {
            return Err(Error::CapExceeded(format!("n = {} > {}", region.n, self.max_n)));
        }
        let area = region.width().max(0) * region.height().max(0);
        if area > self.max_area {
            return Err(Error::CapExceeded(format!("lozenge area {area} > {}", self.max_area)));
        }
        Ok(())
    }
}

/// Vertex sequences of vertex-disjoint paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathTuple {
    pub paths: Vec<Vec<(i64, i64)>>,
}

impl PathTuple {
    pub fn is_disjoint(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.paths.iter().flatten().all(|p| seen.insert(*p))
    }

    /// Every step of every path is `(0,1)` or `(-1,0)`.
    pub fn steps_valid(&self) -> bool {
        self.paths.iter().all(|p| {
            p.windows(2)
                .all(|w| matches!((w[1].0 - w[0].0, w[1].1 - w[0].1), (0, 1) | (-1, 0)))
        })
    }
}
