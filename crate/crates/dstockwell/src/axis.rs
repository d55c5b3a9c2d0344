//! Uniform sampling axes.

use serde::{Deserialize, Serialize};

/// Uniformly spaced 1-D sample axis: `x_i = start + i * step`, `i = 0..count`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UniformAxis {
    pub start: f64,
    pub step: f64,
    pub count: usize,
}

impl UniformAxis {
    pub fn new(start: f64, step: f64, count: usize) -> Self {
        assert!(step > 0.0 && count >= 1, "degenerate axis");
        Self { start, step, count }
    }

    /// Axis spanning `[min, max]` inclusive with `count` samples (count >= 2).
    pub fn spanning(min: f64, max: f64, count: usize) -> Self {
        assert!(count >= 2 && max > min, "degenerate span");
        Self::new(min, (max - min) / (count - 1) as f64, count)
    }

    /// Symmetric axis `[-half, half]` with an odd sample count so 0 is a node.
    pub fn symmetric(half: f64, step: f64) -> Self {
        let n = (half / step).ceil() as usize;
        Self::new(-(n as f64) * step, step, 2 * n + 1)
    }

    #[inline]
    pub fn at(&self, i: usize) -> f64 {
        self.start + self.step * i as f64
    }

    #[inline]
    pub fn end(&self) -> f64 {
        self.at(self.count - 1)
    }

    /// Fractional index of `x` on the axis.
    #[inline]
    pub fn index_of(&self, x: f64) -> f64 {
        (x - self.start) / self.step
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.count).map(|i| self.at(i)).collect()
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.start - 1e-12 && x <= self.end() + 1e-12
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spanning_endpoints() {
        let ax = UniformAxis::spanning(-1.0, 1.0, 5);
        assert_eq!(ax.count, 5);
        assert!((ax.at(0) + 1.0).abs() < 1e-15);
        assert!((ax.end() - 1.0).abs() < 1e-15);
        assert!((ax.step - 0.5).abs() < 1e-15);
    }

    #[test]
    fn symmetric_has_zero_node() {
        let ax = UniformAxis::symmetric(3.0, 0.7);
        let mid = (ax.count - 1) / 2;
        assert!(ax.at(mid).abs() < 1e-15);
        assert!(ax.end() >= 3.0);
    }
}
