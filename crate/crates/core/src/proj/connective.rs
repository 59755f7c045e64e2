//! The dimension filtration modeling the geometric part of connective
//! K-theory, and the associated graded map to Chow classes.
//!
//! `F_n` is the span of the monomials `Π x_i^{c_i}` whose closed stratum has
//! dimension `Σ (d_i - c_i) <= n`: zero for `n < 0`, the whole ring for
//! `n >= d`.

use crate::algebra::{Monomial, SparsePoly};
use crate::error::{Error, Result};

use super::kclass::{monomial_dimension, KClass};
use super::space::MultiProj;

/// A level `n` together with a K-class lying in `F_n`; the model of a
/// degree-`n` connective class. The zero class is allowed at every level.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConnectiveClass {
    level: i64,
    value: KClass,
}

impl ConnectiveClass {
    /// Checks membership `value ∈ F_level` at construction.
    pub fn new(level: i64, value: KClass) -> Result<Self> {
        let in_level = value.is_zero()
            || (level >= 0
                && value
                    .poly()
                    .terms()
                    .all(|(m, _)| monomial_dimension(value.space(), m) <= level));
        if !in_level {
            return Err(Error::FiltrationViolation(level));
        }
        Ok(ConnectiveClass { level, value })
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn value(&self) -> &KClass {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// The level-raising inclusion `F_n ⊆ F_{n+1}`: the same class one level
    /// up. Injective at every level, and for `n >= d` an identity on values.
    pub fn beta_inclusion(&self) -> ConnectiveClass {
        ConnectiveClass {
            level: self.level + 1,
            value: self.value.clone(),
        }
    }
}

/// Monomial basis of `F_n`, in graded-lexicographic order; empty for `n < 0`.
pub fn connective_group(space: &MultiProj, n: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    if n < 0 {
        return out;
    }
    let mut exps = vec![0i32; space.factors()];
    loop {
        let m = Monomial::from_pairs(exps.iter().enumerate().map(|(i, &e)| (i as u32, e)));
        if monomial_dimension(space, &m) <= n {
            out.push(m);
        }
        // odometer over 0..=d_i
        let mut i = 0;
        loop {
            if i == exps.len() {
                out.sort();
                return out;
            }
            if exps[i] < space.dims()[i] as i32 {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// An element of the Chow ring, graded by codimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChowClass {
    space: MultiProj,
    poly: SparsePoly,
}

impl ChowClass {
    pub fn zero(space: &MultiProj) -> Self {
        ChowClass {
            poly: SparsePoly::zero(&space.chow_ring()),
            space: space.clone(),
        }
    }

    pub fn one(space: &MultiProj) -> Self {
        ChowClass {
            poly: SparsePoly::one(&space.chow_ring()),
            space: space.clone(),
        }
    }

    pub fn from_poly(space: &MultiProj, poly: SparsePoly) -> Self {
        debug_assert!(crate::algebra::same_ring(poly.ring(), &space.chow_ring()));
        ChowClass {
            space: space.clone(),
            poly,
        }
    }

    pub fn space(&self) -> &MultiProj {
        &self.space
    }

    pub fn poly(&self) -> &SparsePoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn add(&self, other: &ChowClass) -> Result<ChowClass> {
        if self.space != other.space {
            return Err(Error::IncompatibleSpaces(format!(
                "{} vs {}",
                self.space, other.space
            )));
        }
        Ok(ChowClass {
            space: self.space.clone(),
            poly: self.poly.add(&other.poly)?,
        })
    }

    pub fn mul(&self, other: &ChowClass) -> Result<ChowClass> {
        if self.space != other.space {
            return Err(Error::IncompatibleSpaces(format!(
                "{} vs {}",
                self.space, other.space
            )));
        }
        Ok(ChowClass {
            space: self.space.clone(),
            poly: self.poly.mul(&other.poly)?,
        })
    }

    pub fn mul_int(&self, c: impl Into<num_bigint::BigInt>) -> ChowClass {
        ChowClass {
            space: self.space.clone(),
            poly: self.poly.mul_int(&c.into()),
        }
    }
}

impl std::fmt::Display for ChowClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// The Chow ring of the space (spec'd alongside `gr_map`).
pub fn chow_ring(space: &MultiProj) -> std::sync::Arc<crate::algebra::RingDescriptor> {
    space.chow_ring()
}

/// Associated graded map at the class's level: a monomial of exact stratum
/// dimension `n` maps to the matching Chow monomial; lower-dimensional
/// monomials lie in `F_{n-1}` and map to zero.
pub fn gr_map(class: &ConnectiveClass) -> ChowClass {
    let space = class.value().space();
    let ring = space.chow_ring();
    let terms = class
        .value()
        .poly()
        .terms()
        .filter(|(m, _)| monomial_dimension(space, m) == class.level())
        .map(|(m, c)| (m.clone(), c.clone()));
    ChowClass::from_poly(space, SparsePoly::from_terms(&ring, terms))
}
