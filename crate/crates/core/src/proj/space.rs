//! Multiprojective ambient spaces and their presented rings.

use std::sync::Arc;

use crate::algebra::{RingDescriptor, VarSpec};
use crate::error::{Error, Result};

/// A product of projective spaces `P^{d_1} x ... x P^{d_s}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiProj {
    dims: Vec<u32>,
}

impl MultiProj {
    pub fn new(dims: Vec<u32>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidConfig(
                "a multiprojective space needs at least one factor".into(),
            ));
        }
        Ok(MultiProj { dims })
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    pub fn factors(&self) -> usize {
        self.dims.len()
    }

    pub fn total_dim(&self) -> i64 {
        self.dims.iter().map(|&d| d as i64).sum()
    }

    /// `K_0` presented as `Z[x_1..x_s]/(x_i^{d_i+1})`, `x_i = 1 - [O_i(-1)]`,
    /// graded by codimension.
    pub fn k_ring(&self) -> Arc<RingDescriptor> {
        self.bounded_ring("x")
    }

    /// The Chow ring `Z[h_1..h_s]/(h_i^{d_i+1})`, graded by codimension.
    pub fn chow_ring(&self) -> Arc<RingDescriptor> {
        self.bounded_ring("h")
    }

    fn bounded_ring(&self, stem: &str) -> Arc<RingDescriptor> {
        let vars = self
            .dims
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let name = if self.dims.len() == 1 {
                    stem.to_string()
                } else {
                    format!("{stem}{}", i + 1)
                };
                VarSpec::nilpotent(name, 1, d)
            })
            .collect();
        RingDescriptor::new(vars)
    }

    pub fn product(&self, other: &MultiProj) -> MultiProj {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        MultiProj { dims }
    }

    /// True when `self` is a factorwise linear subspace of `other`.
    pub fn embeds_linearly_in(&self, other: &MultiProj) -> bool {
        self.factors() == other.factors()
            && self.dims.iter().zip(&other.dims).all(|(a, b)| a <= b)
    }
}

impl std::fmt::Display for MultiProj {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(|d| format!("P^{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}
