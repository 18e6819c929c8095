use serde::{Deserialize, Serialize};

use crate::numeric::SummationPolicy;
use crate::quadrature::{ContourSpec, QuadPolicy};
use crate::Result;

/// Numerical settings threaded through every evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Policy {
    pub series: SummationPolicy,
    pub quad: QuadPolicy,
    pub contour: ContourSpec,
}

impl Policy {
    pub fn validate(&self) -> Result<()> {
        self.series.validate()?;
        self.quad.validate()?;
        self.contour.validate()
    }

    /// Tighter tolerances everywhere; used for oracle-grade evaluations.
    pub fn refined(&self) -> Self {
        Policy {
            series: SummationPolicy {
                rel_tol: (self.series.rel_tol * 0.1).max(1e-17),
                ..self.series
            },
            quad: self.quad.refined(),
            contour: self.contour,
        }
    }
}
