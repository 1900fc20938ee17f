//! Uniform grids with trapezoid weights.
//!
//! For smooth, rapidly decaying integrands the trapezoid rule on a uniform
//! grid converges geometrically in the step, which is all the oracles need.

use crate::error::{Error, Result};

/// Symmetric uniform grid on `[-half_width, half_width]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformGrid {
    half_width: f64,
    points: usize,
}

impl UniformGrid {
    pub fn new(half_width: f64, points: usize) -> Result<Self> {
        if points < 3 {
            return Err(Error::TooFewGridPoints {
                points,
                required: 3,
            });
        }
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(Error::GridTooNarrow {
                half_width,
                required: f64::MIN_POSITIVE,
            });
        }
        Ok(Self { half_width, points })
    }

    /// Grid whose step does not exceed `max_step`.
    pub fn with_max_step(half_width: f64, max_step: f64) -> Result<Self> {
        let intervals = (2.0 * half_width / max_step).ceil().max(2.0) as usize;
        Self::new(half_width, intervals + 1)
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn len(&self) -> usize {
        self.points
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn step(&self) -> f64 {
        2.0 * self.half_width / (self.points - 1) as f64
    }

    pub fn node(&self, i: usize) -> f64 {
        // symmetric about zero by construction
        let j = i as f64 - 0.5 * (self.points - 1) as f64;
        j * self.step()
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.points).map(|i| self.node(i)).collect()
    }

    pub fn weight(&self, i: usize) -> f64 {
        if i == 0 || i + 1 == self.points {
            0.5 * self.step()
        } else {
            self.step()
        }
    }

    pub fn weights(&self) -> Vec<f64> {
        (0..self.points).map(|i| self.weight(i)).collect()
    }

    /// Same span with the step halved.
    pub fn refined(&self) -> Self {
        Self {
            half_width: self.half_width,
            points: 2 * self.points - 1,
        }
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        (0..self.points)
            .map(|i| self.weight(i) * f(self.node(i)))
            .sum()
    }
}

/// Tensor product of two uniform grids.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneGrid {
    pub first: UniformGrid,
    pub second: UniformGrid,
}

impl PlaneGrid {
    pub fn new(first: UniformGrid, second: UniformGrid) -> Self {
        Self { first, second }
    }

    pub fn square(grid: UniformGrid) -> Self {
        Self::new(grid, grid)
    }

    pub fn refined(&self) -> Self {
        Self::new(self.first.refined(), self.second.refined())
    }

    pub fn integrate(&self, f: impl Fn(f64, f64) -> f64) -> f64 {
        let inner: Vec<(f64, f64)> = (0..self.second.len())
            .map(|j| (self.second.node(j), self.second.weight(j)))
            .collect();
        (0..self.first.len())
            .map(|i| {
                let a = self.first.node(i);
                let row: f64 = inner.iter().map(|&(b, wb)| wb * f(a, b)).sum();
                self.first.weight(i) * row
            })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn nodes_are_symmetric() {
        let g = UniformGrid::new(3.0, 7).unwrap();
        assert_eq!(g.nodes(), vec![-3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0]);
        assert_eq!(g.weights().iter().sum::<f64>(), 6.0);
        let r = g.refined();
        assert_eq!(r.len(), 13);
        assert_eq!(r.step(), 0.5);
    }

    #[test]
    fn max_step_is_respected() {
        let g = UniformGrid::with_max_step(10.0, 0.3).unwrap();
        assert!(g.step() <= 0.3);
    }

    #[test]
    fn gaussian_integral_is_spectrally_accurate() {
        let g = UniformGrid::new(10.0, 41).unwrap();
        assert_abs_diff_eq!(g.integrate(|x| (-x * x).exp()), PI.sqrt(), epsilon = 1e-14);
        let plane = PlaneGrid::square(g);
        assert_abs_diff_eq!(
            plane.integrate(|a, b| (-a * a - b * b).exp()),
            PI,
            epsilon = 1e-13
        );
    }

    #[test]
    fn rejects_degenerate_grids() {
        assert!(UniformGrid::new(1.0, 2).is_err());
        assert!(UniformGrid::new(0.0, 10).is_err());
    }
}
