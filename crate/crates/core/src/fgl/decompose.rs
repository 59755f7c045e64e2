//! Support decomposition `S = Σ_I G_I · u_I` of a truncated series.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{Monomial, RingDescriptor, SparsePoly};
use crate::error::{Error, Result};

use super::series::TruncSeries;

/// The unique decomposition of a constant-free series as
/// `S = Σ_{I != ∅} G_I · u_I`, where `u_I = Π_{i∈I} u_i` and `G_I` involves
/// only the variables indexed by `I`: a monomial of `S` contributes to the
/// part indexed by its exact variable support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportDecomposition {
    ring: Arc<RingDescriptor>,
    nvars: usize,
    trunc: usize,
    parts: BTreeMap<Vec<u32>, TruncSeries>,
}

pub fn support_decompose(s: &TruncSeries) -> Result<SupportDecomposition> {
    if !s.constant_term().is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let mut grouped: BTreeMap<Vec<u32>, Vec<(Monomial, SparsePoly)>> = BTreeMap::new();
    for (m, c) in s.terms() {
        let support: Vec<u32> = m.support().collect();
        let u_i = Monomial::from_pairs(support.iter().map(|&v| (v, 1)));
        let reduced = m.try_div(&u_i).expect("support divides its monomial");
        grouped.entry(support).or_default().push((reduced, c.clone()));
    }
    let parts = grouped
        .into_iter()
        .map(|(support, terms)| {
            (
                support,
                TruncSeries::from_terms(s.ring(), s.nvars(), s.trunc(), terms),
            )
        })
        .collect();
    Ok(SupportDecomposition {
        ring: s.ring().clone(),
        nvars: s.nvars(),
        trunc: s.trunc(),
        parts,
    })
}

impl SupportDecomposition {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// `G_I` for a sorted index set, if present.
    pub fn part(&self, index_set: &[u32]) -> Option<&TruncSeries> {
        self.parts.get(index_set)
    }

    pub fn parts(&self) -> impl Iterator<Item = (&Vec<u32>, &TruncSeries)> {
        self.parts.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `Σ_I G_I · u_I`; reconstructs the decomposed series exactly.
    pub fn reconstruct(&self) -> TruncSeries {
        let mut acc = TruncSeries::zero(&self.ring, self.nvars, self.trunc);
        for (support, g) in &self.parts {
            let u_i = Monomial::from_pairs(support.iter().map(|&v| (v, 1)));
            acc = acc
                .add(&g.mul_monomial(&u_i))
                .expect("series are compatible");
        }
        acc
    }
}
