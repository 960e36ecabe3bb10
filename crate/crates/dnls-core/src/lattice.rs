//! Truncated `Z^d` lattice geometry, fields, the discrete Laplacian and
//! the functionals used by both variational problems.
//!
//! Conventions fixed here and relied on everywhere else:
//! * the Laplacian is `(Δu)(n) = Σ_{|j−n|=1} u_j − 2d·u_n`,
//! * the kinetic (Dirichlet) form counts every undirected edge once, so
//!   `dirichlet_form(u) == ⟨−Δu, u⟩` exactly, including the boundary
//!   edges to implicit zeros on zero-padded grids,
//! * `H = kinetic − V/(σ+1)` and `J = kinetic + ω·P`.

use ndarray::Array2;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Boundary convention of a truncated lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Boundary {
    /// Sites outside the box are held at zero (Dirichlet truncation).
    ZeroPad,
    /// Indices wrap around the box (used for Fourier-symbol tests).
    Periodic,
}

impl std::fmt::Display for Boundary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Boundary::ZeroPad => write!(f, "zero-padding"),
            Boundary::Periodic => write!(f, "periodic"),
        }
    }
}

impl std::str::FromStr for Boundary {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zero-padding" | "zero_pad" | "zeropad" | "dirichlet" => Ok(Boundary::ZeroPad),
            "periodic" => Ok(Boundary::Periodic),
            other => Err(Error::Parse(format!("unknown boundary `{other}`"))),
        }
    }
}

/// Truncated lattice `{n ∈ Z^d : |n_i| ≤ N}` with a boundary convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    dimension: usize,
    half_width: usize,
    boundary: Boundary,
}

impl Grid {
    /// New grid; `dimension` must be 1–3 and `half_width ≥ 1`.
    pub fn new(dimension: usize, half_width: usize, boundary: Boundary) -> Result<Self> {
        if !(1..=3).contains(&dimension) {
            return Err(Error::InvalidGrid(format!(
                "dimension must be 1, 2 or 3, got {dimension}"
            )));
        }
        if half_width == 0 {
            return Err(Error::InvalidGrid("half_width must be positive".into()));
        }
        // Dense desk scale: keep the site count assemblable as a matrix.
        let side = 2 * half_width + 1;
        let sites = side.pow(dimension as u32);
        if sites > 20_000 {
            return Err(Error::InvalidGrid(format!(
                "grid with {sites} sites exceeds the dense desk scale"
            )));
        }
        Ok(Grid {
            dimension,
            half_width,
            boundary,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn half_width(&self) -> usize {
        self.half_width
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    /// Sites per axis, `2N+1`.
    pub fn side(&self) -> usize {
        2 * self.half_width + 1
    }

    /// Total site count `(2N+1)^d`.
    pub fn site_count(&self) -> usize {
        self.side().pow(self.dimension as u32)
    }

    /// Row-major stride of axis `k` (axis 0 slowest).
    fn stride(&self, k: usize) -> usize {
        self.side().pow((self.dimension - 1 - k) as u32)
    }

    /// Flat row-major index of a multi-index with components in `[-N, N]`.
    pub fn flat_index(&self, coords: &[i64]) -> Result<usize> {
        if coords.len() != self.dimension {
            return Err(Error::InvalidArgument(format!(
                "expected {} coordinates, got {}",
                self.dimension,
                coords.len()
            )));
        }
        let n = self.half_width as i64;
        let mut flat = 0usize;
        for &c in coords {
            if c.abs() > n {
                return Err(Error::InvalidArgument(format!(
                    "coordinate {c} outside [-{n}, {n}]"
                )));
            }
            flat = flat * self.side() + (c + n) as usize;
        }
        Ok(flat)
    }

    /// Multi-index of a flat index; unused axes are zero.
    pub fn coords(&self, mut flat: usize) -> [i64; 3] {
        let side = self.side();
        let n = self.half_width as i64;
        let mut out = [0i64; 3];
        for k in (0..self.dimension).rev() {
            out[k] = (flat % side) as i64 - n;
            flat /= side;
        }
        out
    }

    /// Index of the origin site.
    pub fn origin(&self) -> usize {
        self.flat_index(&vec![0; self.dimension]).expect("origin")
    }
}

/// Real-valued lattice function on a [`Grid`], row-major storage.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Field<S: Scalar> {
    grid: Grid,
    values: Vec<S>,
}

impl<S: Scalar> Field<S> {
    /// Zero field.
    pub fn zeros(grid: Grid) -> Self {
        Field {
            grid,
            values: vec![S::zero(); grid.site_count()],
        }
    }

    /// Field from raw values; checks length and finiteness.
    pub fn from_values(grid: Grid, values: Vec<S>) -> Result<Self> {
        if values.len() != grid.site_count() {
            return Err(Error::InvalidField(format!(
                "expected {} values, got {}",
                grid.site_count(),
                values.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidField("non-finite value".into()));
        }
        Ok(Field { grid, values })
    }

    /// Kronecker delta at the given multi-index.
    pub fn basis(grid: Grid, coords: &[i64]) -> Result<Self> {
        let mut f = Field::zeros(grid);
        let idx = grid.flat_index(coords)?;
        f.values[idx] = S::one();
        Ok(f)
    }

    /// Kronecker delta at the origin, `e_0`.
    pub fn delta(grid: Grid) -> Self {
        let mut f = Field::zeros(grid);
        let idx = grid.origin();
        f.values[idx] = S::one();
        f
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [S] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<S> {
        self.values
    }

    /// Squared `l²` norm.
    pub fn l2_norm_sq(&self) -> S {
        self.values.iter().map(|&v| v * v).sum()
    }

    /// `l²` inner product with another field on the same grid.
    pub fn dot(&self, other: &Field<S>) -> S {
        debug_assert_eq!(self.grid, other.grid);
        self.values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| a * b)
            .sum()
    }

    /// Mass in the boundary layer `{|n|_∞ ≥ N−2}`, used by the box-size
    /// rule.
    pub fn boundary_layer_mass(&self) -> S {
        let n = self.grid.half_width as i64;
        let cut = n - 2;
        let mut acc = S::zero();
        for (i, &v) in self.values.iter().enumerate() {
            let c = self.grid.coords(i);
            let linf = (0..self.grid.dimension)
                .map(|k| c[k].abs())
                .max()
                .unwrap_or(0);
            if linf >= cut {
                acc += v * v;
            }
        }
        acc
    }

    /// Zero-pad into a larger grid with the same dimension and boundary.
    pub fn embed(&self, target: Grid) -> Result<Field<S>> {
        if target.dimension != self.grid.dimension || target.half_width < self.grid.half_width {
            return Err(Error::InvalidArgument(
                "embedding target must share the dimension and be at least as wide".into(),
            ));
        }
        let mut out = Field::zeros(target);
        for (i, &v) in self.values.iter().enumerate() {
            let c = self.grid.coords(i);
            let j = target.flat_index(&c[..self.grid.dimension])?;
            out.values[j] = v;
        }
        Ok(out)
    }
}

/// `(Δu)(n) = Σ_{|j−n|=1} u_j − 2d·u_n` into a preallocated buffer.
pub fn laplacian_into<S: Scalar>(grid: Grid, input: &[S], out: &mut [S]) {
    let d = grid.dimension();
    let side = grid.side();
    let two_d = S::real(2.0 * d as f64);
    for (o, &v) in out.iter_mut().zip(input.iter()) {
        *o = -two_d * v;
    }
    for k in 0..d {
        let stride = grid.stride(k);
        for (i, o) in out.iter_mut().enumerate() {
            let pos = (i / stride) % side;
            let up = if pos + 1 < side {
                Some(i + stride)
            } else if grid.boundary() == Boundary::Periodic {
                Some(i - (side - 1) * stride)
            } else {
                None
            };
            let down = if pos > 0 {
                Some(i - stride)
            } else if grid.boundary() == Boundary::Periodic {
                Some(i + (side - 1) * stride)
            } else {
                None
            };
            if let Some(j) = up {
                *o += input[j];
            }
            if let Some(j) = down {
                *o += input[j];
            }
        }
    }
}

/// Discrete Laplacian of a field; out-of-box neighbors contribute zero
/// (zero-padding) or wrap (periodic).
pub fn apply_laplacian<S: Scalar>(f: &Field<S>) -> Field<S> {
    let mut out = Field::zeros(f.grid());
    laplacian_into(f.grid(), f.values(), out.values_mut());
    out
}

/// Dirichlet form `⟨−Δu, u⟩ = Σ_edges |u_j − u_n|²`, one term per
/// undirected edge; on zero-padded grids the edges to the implicit zero
/// sites are included.
pub fn dirichlet_form<S: Scalar>(f: &Field<S>) -> S {
    let grid = f.grid();
    let side = grid.side();
    let vals = f.values();
    let mut acc = S::zero();
    for k in 0..grid.dimension() {
        let stride = grid.stride(k);
        for (i, &v) in vals.iter().enumerate() {
            let pos = (i / stride) % side;
            if pos + 1 < side {
                let dv = vals[i + stride] - v;
                acc += dv * dv;
            } else {
                match grid.boundary() {
                    Boundary::Periodic => {
                        let dv = vals[i - (side - 1) * stride] - v;
                        acc += dv * dv;
                    }
                    Boundary::ZeroPad => {
                        // Edge to the implicit zero site beyond +N.
                        acc += v * v;
                    }
                }
            }
            if pos == 0 && grid.boundary() == Boundary::ZeroPad {
                // Edge to the implicit zero site beyond -N.
                acc += v * v;
            }
        }
    }
    acc
}

/// The functionals of a field: mass `P`, potential sum `V`, the kinetic
/// (Dirichlet) form, the Hamiltonian `H` and the action `J`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FunctionalValues<S: Scalar> {
    /// `P = Σ u_n²`.
    pub mass: S,
    /// `V = Σ |u_n|^{2σ+2}`.
    pub potential: S,
    /// `⟨−Δu, u⟩`.
    pub kinetic: S,
    /// `H = kinetic − V/(σ+1)`.
    pub hamiltonian: S,
    /// `J = kinetic + ω·P`.
    pub action: S,
}

/// Evaluate all functionals of `f` at nonlinearity `σ > 0` and
/// frequency `ω` (only `J` depends on `ω`).
pub fn functionals<S: Scalar>(f: &Field<S>, sigma: S, omega: S) -> FunctionalValues<S> {
    debug_assert!(sigma > S::zero());
    let kinetic = dirichlet_form(f);
    let mut mass = S::zero();
    let mut potential = S::zero();
    let exponent = S::real(2.0) * sigma + S::real(2.0);
    for &v in f.values() {
        mass += v * v;
        // Powers of |u| so that non-integer σ is safe for any sign.
        potential += v.abs().powf(exponent);
    }
    FunctionalValues {
        mass,
        potential,
        kinetic,
        hamiltonian: kinetic - potential / (sigma + S::one()),
        action: kinetic + omega * mass,
    }
}

/// `l^p` norm, `p ≥ 1`; `p = ∞` is accepted as the max-norm.
pub fn norm_lp<S: Scalar>(f: &Field<S>, p: S) -> Result<S> {
    norm_lp_slice(f.values(), p)
}

/// `l^p` norm of a raw slice.
pub fn norm_lp_slice<S: Scalar>(values: &[S], p: S) -> Result<S> {
    if p.is_infinite() && p > S::zero() {
        return Ok(values
            .iter()
            .fold(S::zero(), |m, &v| if v.abs() > m { v.abs() } else { m }));
    }
    if p < S::one() || !p.is_finite() {
        return Err(Error::InvalidArgument(format!("l^p norm needs p ≥ 1, got {p}")));
    }
    let sum: S = values.iter().map(|&v| v.abs().powf(p)).sum();
    Ok(sum.powf(S::one() / p))
}

/// Dense matrix of `−Δ` on the grid (symmetric, positive semidefinite
/// for zero padding).
pub fn neg_laplacian_matrix(grid: Grid) -> Array2<f64> {
    let m = grid.site_count();
    let side = grid.side();
    let mut a = Array2::<f64>::zeros((m, m));
    let two_d = 2.0 * grid.dimension() as f64;
    for i in 0..m {
        a[[i, i]] = two_d;
        for k in 0..grid.dimension() {
            let stride = grid.stride(k);
            let pos = (i / stride) % side;
            let up = if pos + 1 < side {
                Some(i + stride)
            } else if grid.boundary() == Boundary::Periodic {
                Some(i - (side - 1) * stride)
            } else {
                None
            };
            let down = if pos > 0 {
                Some(i - stride)
            } else if grid.boundary() == Boundary::Periodic {
                Some(i + (side - 1) * stride)
            } else {
                None
            };
            if let Some(j) = up {
                a[[i, j]] -= 1.0;
            }
            if let Some(j) = down {
                a[[i, j]] -= 1.0;
            }
        }
    }
    a
}
