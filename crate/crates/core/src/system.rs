//! Bilinear quantum control systems over a symmetry algebra.

use crate::algebra::StructureAlgebra;
use crate::env::{EnvElement, Rewriter};
use crate::error::{CoreError, Result};
use serde::Serialize;

/// The set of states a controllability question is asked about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ManifoldTarget {
    /// The closure of the control-group orbit of the initial state.
    Orbit,
    /// The full unit sphere of the representation space.
    Sphere,
}

/// A free Hamiltonian plus control Hamiltonians over a named symmetry
/// algebra, all written as skew-Hermitian enveloping-algebra elements.
#[derive(Clone, Debug)]
pub struct ControlSystem {
    name: String,
    algebra: StructureAlgebra,
    h0: EnvElement,
    controls: Vec<EnvElement>,
    manifold: ManifoldTarget,
}

impl ControlSystem {
    /// Validates skewness (`H† = -H`, exactly) of the free and every control
    /// Hamiltonian. A system that fails is rejected, not repaired.
    pub fn new(
        name: impl Into<String>,
        algebra: StructureAlgebra,
        h0: EnvElement,
        controls: Vec<EnvElement>,
    ) -> Result<Self> {
        let name = name.into();
        if controls.is_empty() {
            return Err(CoreError::Argument(format!(
                "system '{name}' needs at least one control Hamiltonian"
            )));
        }
        let mut rw = Rewriter::new(&algebra);
        let labelled = std::iter::once(("H0".to_string(), &h0)).chain(
            controls
                .iter()
                .enumerate()
                .map(|(i, h)| (format!("H{}", i + 1), h)),
        );
        for (label, h) in labelled {
            if h.gen_count() != algebra.dim() {
                return Err(CoreError::Argument(format!(
                    "system '{name}': {label} is over a different algebra"
                )));
            }
            if !rw.is_skew(h)? {
                return Err(CoreError::Validation(format!(
                    "system '{name}': {label} is not skew under the involution"
                )));
            }
        }
        drop(rw);
        Ok(Self {
            name,
            algebra,
            h0,
            controls,
            manifold: ManifoldTarget::Orbit,
        })
    }

    pub fn with_manifold(mut self, manifold: ManifoldTarget) -> Self {
        self.manifold = manifold;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }

    pub fn h0(&self) -> &EnvElement {
        &self.h0
    }

    pub fn controls(&self) -> &[EnvElement] {
        &self.controls
    }

    pub fn manifold(&self) -> ManifoldTarget {
        self.manifold
    }
}
