use std::f64::consts::PI;

use faer::Mat;
use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;
use serde::Serialize;

use crate::error::{Result, StabilityError};

/// Periodic collocation grid on `[-L, L)`.
///
/// `wavenumbers` are stored in FFT order: `0, 1, .., N/2-1, -N/2, .., -1`
/// times `pi / L`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Grid {
    pub n_points: usize,
    pub half_length: f64,
    pub nodes: Vec<f64>,
    pub wavenumbers: Vec<f64>,
    pub quad_weight: f64,
}

pub fn build_grid(n_points: usize, half_length: f64) -> Result<Grid> {
    Grid::new(n_points, half_length)
}

impl Grid {
    pub const MIN_POINTS: usize = 16;

    pub fn new(n_points: usize, half_length: f64) -> Result<Self> {
        if !n_points.is_multiple_of(2) || n_points < Self::MIN_POINTS {
            return Err(StabilityError::InvalidGrid(format!(
                "n_points must be even and >= {}, got {n_points}",
                Self::MIN_POINTS
            )));
        }
        if !(half_length > 0.0) || !half_length.is_finite() {
            return Err(StabilityError::InvalidGrid(format!(
                "half_length must be positive, got {half_length}"
            )));
        }
        let n = n_points as f64;
        let spacing = 2.0 * half_length / n;
        let nodes = (0..n_points)
            .map(|j| -half_length + spacing * j as f64)
            .collect();
        let wavenumbers = (0..n_points)
            .map(|k| {
                let signed = if k < n_points / 2 {
                    k as f64
                } else {
                    k as f64 - n
                };
                PI * signed / half_length
            })
            .collect();
        Ok(Grid {
            n_points,
            half_length,
            nodes,
            wavenumbers,
            quad_weight: spacing,
        })
    }

    pub fn len(&self) -> usize {
        self.n_points
    }

    pub fn is_empty(&self) -> bool {
        self.n_points == 0
    }

    /// Index of the Nyquist mode in FFT order.
    pub fn nyquist_index(&self) -> usize {
        self.n_points / 2
    }

    /// Largest resolved wavenumber magnitude.
    pub fn max_wavenumber(&self) -> f64 {
        PI * (self.n_points / 2) as f64 / self.half_length
    }

    /// Samples `f` at the nodes.
    pub fn sample(&self, f: impl Fn(f64) -> f64) -> Vec<f64> {
        self.nodes.iter().map(|&x| f(x)).collect()
    }

    /// Index of the node at `x = 0`.
    pub fn origin_index(&self) -> usize {
        self.n_points / 2
    }

    /// Index of the mirror node `-x_j`.
    pub fn mirror_index(&self, j: usize) -> usize {
        (self.n_points - j) % self.n_points
    }

    /// Applies the Fourier multiplier `symbol(xi)` to real samples and keeps
    /// the real part. The symbol is evaluated at every FFT wavenumber; pass
    /// `odd = true` to zero the Nyquist mode, which keeps odd multipliers real.
    pub fn apply_multiplier(
        &self,
        values: &[f64],
        odd: bool,
        symbol: impl Fn(f64) -> Complex64,
    ) -> Result<Vec<f64>> {
        self.check_len(values.len())?;
        let n = self.n_points;
        let mut planner = FftPlanner::<f64>::new();
        let forward = planner.plan_fft_forward(n);
        let inverse = planner.plan_fft_inverse(n);
        let mut buf: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        forward.process(&mut buf);
        for (k, c) in buf.iter_mut().enumerate() {
            if odd && k == self.nyquist_index() {
                *c = Complex64::new(0.0, 0.0);
            } else {
                *c *= symbol(self.wavenumbers[k]);
            }
        }
        inverse.process(&mut buf);
        let scale = 1.0 / n as f64;
        Ok(buf.iter().map(|c| c.re * scale).collect())
    }

    /// Spectral derivative of order 1 or 2 applied to samples.
    pub fn differentiate(&self, values: &[f64], order: u32) -> Result<Vec<f64>> {
        match order {
            1 => self.apply_multiplier(values, true, |xi| Complex64::new(0.0, xi)),
            2 => self.apply_multiplier(values, false, |xi| Complex64::new(-xi * xi, 0.0)),
            _ => Err(StabilityError::Domain(format!(
                "derivative order must be 1 or 2, got {order}"
            ))),
        }
    }

    /// Applies `(1 - b d_xx)^power` to samples.
    pub fn smooth(&self, values: &[f64], b: f64, power: f64) -> Result<Vec<f64>> {
        self.apply_multiplier(values, false, |xi| {
            Complex64::new((1.0 + b * xi * xi).powf(power), 0.0)
        })
    }

    /// Dense circulant matrix of a Fourier multiplier. Entry `(j, k)` is
    /// `c[(j - k) mod N]` with `c` the inverse transform of the symbol.
    pub fn circulant(&self, odd: bool, symbol: impl Fn(f64) -> Complex64) -> Mat<f64> {
        let n = self.n_points;
        let mut planner = FftPlanner::<f64>::new();
        let inverse = planner.plan_fft_inverse(n);
        let mut buf: Vec<Complex64> = (0..n)
            .map(|k| {
                if odd && k == self.nyquist_index() {
                    Complex64::new(0.0, 0.0)
                } else {
                    symbol(self.wavenumbers[k])
                }
            })
            .collect();
        inverse.process(&mut buf);
        let scale = 1.0 / n as f64;
        let column: Vec<f64> = buf.iter().map(|c| c.re * scale).collect();
        Mat::from_fn(n, n, |j, k| column[(j + n - k) % n])
    }

    /// Trapezoid quadrature of `u * v`, spectrally accurate for smooth
    /// decaying integrands.
    pub fn inner_product(&self, u: &[f64], v: &[f64]) -> Result<f64> {
        if u.len() != v.len() {
            return Err(StabilityError::LengthMismatch {
                left: u.len(),
                right: v.len(),
            });
        }
        Ok(self.quad_weight * u.iter().zip(v).map(|(a, b)| a * b).sum::<f64>())
    }

    pub fn norm_sq(&self, u: &[f64]) -> f64 {
        self.quad_weight * u.iter().map(|a| a * a).sum::<f64>()
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n_points {
            return Err(StabilityError::LengthMismatch {
                left: len,
                right: self.n_points,
            });
        }
        Ok(())
    }
}

pub fn inner_product(u: &[f64], v: &[f64], grid: &Grid) -> Result<f64> {
    grid.inner_product(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn rejects_odd_and_small_grids() {
        assert!(matches!(Grid::new(15, 1.0), Err(StabilityError::InvalidGrid(_))));
        assert!(matches!(Grid::new(8, 1.0), Err(StabilityError::InvalidGrid(_))));
        assert!(matches!(Grid::new(16, 0.0), Err(StabilityError::InvalidGrid(_))));
    }

    #[test]
    fn node_spacing_and_weight() {
        let g = Grid::new(16, PI).unwrap();
        assert_relative_eq!(g.nodes[1] - g.nodes[0], 2.0 * PI / 16.0, epsilon = 1e-15);
        assert_eq!(g.nodes[g.origin_index()], 0.0);
        let g = Grid::new(512, 40.0).unwrap();
        assert_eq!(g.quad_weight, 80.0 / 512.0);
        assert_relative_eq!(g.quad_weight * 512.0, 80.0);
    }

    #[test]
    fn wavenumbers_cover_symmetric_range() {
        let g = Grid::new(16, PI).unwrap();
        let mut ks: Vec<i64> = g.wavenumbers.iter().map(|&xi| (xi * g.half_length / PI).round() as i64).collect();
        ks.sort();
        assert_eq!(ks, (-8..8).collect::<Vec<_>>());
    }

    #[test]
    fn band_limited_derivative_is_exact() {
        let g = Grid::new(128, 10.0).unwrap();
        let k = PI / 10.0;
        let f = g.sample(|x| (k * x).sin());
        let df = g.differentiate(&f, 1).unwrap();
        let d2f = g.differentiate(&f, 2).unwrap();
        for (j, &x) in g.nodes.iter().enumerate() {
            assert!((df[j] - k * (k * x).cos()).abs() < 1e-10);
            assert!((d2f[j] + k * k * (k * x).sin()).abs() < 1e-10);
        }
    }

    #[test]
    fn circulant_matches_vector_application() {
        let g = Grid::new(32, 5.0).unwrap();
        let f = g.sample(|x| (-x * x).exp());
        let d = g.circulant(true, |xi| Complex64::new(0.0, xi));
        let by_fft = g.differentiate(&f, 1).unwrap();
        for j in 0..32 {
            let row: f64 = (0..32).map(|k| d[(j, k)] * f[k]).sum();
            assert!((row - by_fft[j]).abs() < 1e-12);
        }
    }

    #[test]
    fn parity_of_inner_product() {
        let g = Grid::new(256, 30.0).unwrap();
        let even = g.sample(|x| 1.0 / x.cosh().powi(2));
        let odd = g.sample(|x| x.tanh() / x.cosh());
        assert!(g.inner_product(&even, &odd).unwrap().abs() < 1e-12);
        assert!(matches!(
            g.inner_product(&even, &odd[..10]),
            Err(StabilityError::LengthMismatch { .. })
        ));
    }
}
