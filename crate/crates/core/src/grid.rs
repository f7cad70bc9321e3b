//! Uniform Cartesian grids and their decomposition into per-worker subdomains.
//!
//! Grids are endpoint-inclusive: `shape[d]` points span `bounds[d]` with
//! `shape[d] - 1` intervals. Decomposition splits dimension 0 only; the grid
//! type itself is dimension-generic.

use crate::error::{Error, Result};

/// Global uniform Cartesian domain.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    shape: Vec<usize>,
    bounds: Vec<(f64, f64)>,
    step_sizes: Vec<f64>,
}

impl Grid {
    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn bounds(&self) -> &[(f64, f64)] {
        &self.bounds
    }

    pub fn step_sizes(&self) -> &[f64] {
        &self.step_sizes
    }

    pub fn ndim(&self) -> usize {
        self.shape.len()
    }

    /// Coordinates along dimension `d`. The first entry is exactly `lo` and
    /// the last exactly `hi`; interior entries are `lo + i*h`.
    pub fn axis_coordinates(&self, d: usize) -> Result<Vec<f64>> {
        if d >= self.ndim() {
            return Err(Error::DimensionOutOfRange(d));
        }
        let n = self.shape[d];
        let (lo, hi) = self.bounds[d];
        let h = self.step_sizes[d];
        let mut axis = Vec::with_capacity(n);
        for i in 0..n - 1 {
            axis.push(lo + i as f64 * h);
        }
        axis.push(hi);
        Ok(axis)
    }
}

/// Build an endpoint-inclusive uniform grid.
pub fn make_uniform_grid(shape: &[usize], bounds: &[(f64, f64)]) -> Result<Grid> {
    if shape.is_empty() || shape.len() != bounds.len() {
        return Err(Error::InvalidGrid(format!(
            "shape has {} dimensions, bounds has {}",
            shape.len(),
            bounds.len()
        )));
    }
    for (d, (&n, &(lo, hi))) in shape.iter().zip(bounds.iter()).enumerate() {
        if n < 2 {
            return Err(Error::InvalidGrid(format!(
                "dimension {d}: need at least 2 points, got {n}"
            )));
        }
        if !(lo < hi) {
            return Err(Error::InvalidGrid(format!(
                "dimension {d}: empty interval [{lo}, {hi}]"
            )));
        }
    }
    let step_sizes = shape
        .iter()
        .zip(bounds.iter())
        .map(|(&n, &(lo, hi))| (hi - lo) / (n - 1) as f64)
        .collect();
    Ok(Grid {
        shape: shape.to_vec(),
        bounds: bounds.to_vec(),
        step_sizes,
    })
}

/// Which kind of edge a subdomain has on a given side of a dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    /// Shared with a neighbouring subdomain; ghost data is exchanged.
    Internal,
    /// A boundary of the full grid; no neighbour, no exchange.
    External,
}

/// Per-side ghost/strip bookkeeping for one dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeSpec {
    pub kind: EdgeKind,
    /// Ghost points stored on this side (0 for external edges).
    pub ghost_points: usize,
    /// Width of the owned strip sent to the neighbour on this side.
    pub boundary_points: usize,
}

impl EdgeSpec {
    fn external() -> Self {
        EdgeSpec {
            kind: EdgeKind::External,
            ghost_points: 0,
            boundary_points: 0,
        }
    }

    fn internal(ghost_points: usize) -> Self {
        EdgeSpec {
            kind: EdgeKind::Internal,
            ghost_points,
            boundary_points: ghost_points,
        }
    }
}

/// Boundary specification: `edges[d][side]` with side 0 = low, 1 = high.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundarySpec {
    pub edges: Vec<[EdgeSpec; 2]>,
}

pub const SIDE_LOW: usize = 0;
pub const SIDE_HIGH: usize = 1;

/// One worker's slice of the global grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Subdomain {
    pub rank: usize,
    /// Global start index of owned points, per dimension.
    pub offset: Vec<usize>,
    /// Owned point count, per dimension.
    pub extent: Vec<usize>,
    /// `neighbours[d][side]`: worker rank across that edge, None if external.
    pub neighbours: Vec<[Option<usize>; 2]>,
    pub spec: BoundarySpec,
}

impl Subdomain {
    pub fn ghost_points(&self, d: usize, side: usize) -> usize {
        self.spec.edges[d][side].ghost_points
    }

    /// Length of the local storage along dimension 0 (ghosts + owned).
    pub fn local_len(&self) -> usize {
        self.ghost_points(0, SIDE_LOW) + self.extent[0] + self.ghost_points(0, SIDE_HIGH)
    }

    /// Range of owned entries within the local storage along dimension 0.
    pub fn owned_range(&self) -> std::ops::Range<usize> {
        let lo = self.ghost_points(0, SIDE_LOW);
        lo..lo + self.extent[0]
    }

    /// Global index of the local entry `i` (which may address a ghost).
    pub fn global_index(&self, local: usize) -> isize {
        local as isize - self.ghost_points(0, SIDE_LOW) as isize + self.offset[0] as isize
    }

    /// Local index of a global index along dimension 0, if stored here.
    pub fn local_index(&self, global: usize) -> Option<usize> {
        let g = self.ghost_points(0, SIDE_LOW) as isize;
        let local = global as isize - self.offset[0] as isize + g;
        if local >= 0 && (local as usize) < self.local_len() {
            Some(local as usize)
        } else {
            None
        }
    }
}

/// Split `g` along dimension 0 into `workers` subdomains.
///
/// Extents differ by at most one; remainder points go to the lowest ranks.
/// With `periodic[0]`, rank 0 and rank `workers-1` become neighbours.
pub fn decompose(
    g: &Grid,
    workers: usize,
    ghost_points: usize,
    periodic: &[bool],
) -> Result<Vec<Subdomain>> {
    if workers == 0 {
        return Err(Error::InvalidDecomposition("zero workers".into()));
    }
    if periodic.len() != g.ndim() {
        return Err(Error::InvalidDecomposition(format!(
            "periodic flags: got {} entries for {} dimensions",
            periodic.len(),
            g.ndim()
        )));
    }
    let n = g.shape()[0];
    if workers > n {
        return Err(Error::InvalidDecomposition(format!(
            "more workers ({workers}) than points along dimension 0 ({n})"
        )));
    }

    let base = n / workers;
    let rem = n % workers;
    let mut subs = Vec::with_capacity(workers);
    let mut cursor = 0usize;
    for rank in 0..workers {
        let extent0 = base + usize::from(rank < rem);
        let left = if rank > 0 {
            Some(rank - 1)
        } else if periodic[0] && workers > 1 {
            Some(workers - 1)
        } else if periodic[0] {
            Some(0)
        } else {
            None
        };
        let right = if rank + 1 < workers {
            Some(rank + 1)
        } else if periodic[0] && workers > 1 {
            Some(0)
        } else if periodic[0] {
            Some(0)
        } else {
            None
        };

        let mut offset = vec![0; g.ndim()];
        let mut extent = g.shape().to_vec();
        offset[0] = cursor;
        extent[0] = extent0;

        let mut neighbours = vec![[None, None]; g.ndim()];
        neighbours[0] = [left, right];

        let mut edges = Vec::with_capacity(g.ndim());
        let edge_of = |nb: Option<usize>| {
            if nb.is_some() {
                EdgeSpec::internal(ghost_points)
            } else {
                EdgeSpec::external()
            }
        };
        edges.push([edge_of(left), edge_of(right)]);
        for d in 1..g.ndim() {
            // Dimensions beyond 0 are never split; their edges follow the
            // global periodicity but carry no ghosts in this version.
            let kind = if periodic[d] {
                EdgeSpec::internal(0)
            } else {
                EdgeSpec::external()
            };
            edges.push([kind, kind]);
        }

        subs.push(Subdomain {
            rank,
            offset,
            extent,
            neighbours,
            spec: BoundarySpec { edges },
        });
        cursor += extent0;
    }
    Ok(subs)
}

/// A worker's view of the problem: the global grid plus its own subdomain.
#[derive(Debug, Clone, PartialEq)]
pub struct Patch {
    pub grid: Grid,
    pub sub: Subdomain,
}

impl Patch {
    /// Single-worker patch covering the whole grid, no ghosts.
    pub fn whole(grid: Grid) -> Result<Patch> {
        let periodic = vec![false; grid.ndim()];
        let sub = decompose(&grid, 1, 0, &periodic)?.remove(0);
        Ok(Patch { grid, sub })
    }

    pub fn spacing(&self) -> f64 {
        self.grid.step_sizes()[0]
    }

    /// Coordinate of the local entry `i` along dimension 0.
    pub fn local_coordinate(&self, local: usize) -> f64 {
        let g = self.sub.global_index(local);
        let axis_n = self.grid.shape()[0] as isize;
        let (lo, hi) = self.grid.bounds()[0];
        if g == axis_n - 1 {
            hi
        } else {
            lo + g as f64 * self.grid.step_sizes()[0]
        }
    }

    /// Coordinates of all owned points along dimension 0.
    pub fn owned_coordinates(&self) -> Vec<f64> {
        self.sub.owned_range().map(|i| self.local_coordinate(i)).collect()
    }
}
