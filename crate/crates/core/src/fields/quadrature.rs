use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangleMode {
    /// Closed-form solid angle; only valid for the monopole curvature.
    ExactSolidAngle,
    /// Collapsed Gauss–Legendre product rule with this many points per direction.
    Numeric(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuadratureSpec {
    pub edge_rule_order: usize,
    pub triangle_mode: TriangleMode,
}

pub const DEFAULT_EDGE_ORDER: usize = 16;
pub const DEFAULT_NUMERIC_ORDER: usize = 5;

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            edge_rule_order: DEFAULT_EDGE_ORDER,
            triangle_mode: TriangleMode::ExactSolidAngle,
        }
    }
}

impl QuadratureSpec {
    pub fn new(edge_rule_order: usize, triangle_mode: TriangleMode) -> Result<Self> {
        let spec = Self {
            edge_rule_order,
            triangle_mode,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn numeric(order: usize) -> Self {
        Self {
            edge_rule_order: DEFAULT_EDGE_ORDER,
            triangle_mode: TriangleMode::Numeric(order),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.edge_rule_order == 0 || self.triangle_mode == TriangleMode::Numeric(0) {
            return Err(Error::Argument("quadrature orders must be at least 1".into()));
        }
        Ok(())
    }
}

/// Gauss–Legendre nodes and weights on [0, 1].
pub fn gauss_legendre<T: Real>(n: usize) -> (Vec<T>, Vec<T>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0f64; n];
    let mut weights = vec![0.0f64; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        // Newton iteration on P_n from the Chebyshev-like initial guess.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 1 { x } else { p1 };
            let pn_1 = if n == 1 { 1.0 } else { p0 };
            dp = nf * (x * pn - pn_1) / (x * x - 1.0);
            let dx = pn / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (
        nodes.iter().map(|&x| T::lit(0.5 * (x + 1.0))).collect(),
        weights.iter().map(|&w| T::lit(0.5 * w)).collect(),
    )
}
