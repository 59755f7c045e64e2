//! The β-graded Borel-Moore realization: Laurent polynomials in β with
//! K-class coefficients. β carries homological degree +1 here.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::algebra::SparsePoly;
use crate::error::{Error, Result};

use super::kclass::{class_of_bundle, KClass, LineBundleSpec};
use super::space::MultiProj;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BMClass {
    space: MultiProj,
    // β exponent -> nonzero K-ring element
    terms: BTreeMap<i64, SparsePoly>,
}

impl BMClass {
    pub fn zero(space: &MultiProj) -> Self {
        BMClass {
            space: space.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `β^exp · κ`.
    pub fn from_k(exp: i64, class: &KClass) -> Self {
        let mut bm = Self::zero(class.space());
        bm.push(exp, class.poly().clone());
        bm
    }

    /// The fundamental class `β^d · 1` of the ambient space.
    pub fn fundamental(space: &MultiProj) -> Self {
        Self::from_k(space.total_dim(), &KClass::one(space))
    }

    pub fn space(&self) -> &MultiProj {
        &self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &SparsePoly)> {
        self.terms.iter()
    }

    pub fn k_part(&self, exp: i64) -> SparsePoly {
        self.terms
            .get(&exp)
            .cloned()
            .unwrap_or_else(|| SparsePoly::zero(&self.space.k_ring()))
    }

    fn push(&mut self, exp: i64, poly: SparsePoly) {
        if poly.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(poly);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&poly).expect("same ring");
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_space(&self, other: &BMClass) -> Result<()> {
        if self.space == other.space {
            Ok(())
        } else {
            Err(Error::IncompatibleSpaces(format!(
                "{} vs {}",
                self.space, other.space
            )))
        }
    }

    pub fn add(&self, other: &BMClass) -> Result<BMClass> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (&e, p) in &other.terms {
            out.push(e, p.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &BMClass) -> Result<BMClass> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> BMClass {
        BMClass {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(&e, p)| (e, p.neg())).collect(),
        }
    }

    /// Multiplication by `β^k` (degree shift).
    pub fn mul_beta(&self, k: i64) -> BMClass {
        BMClass {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(&e, p)| (e + k, p.clone())).collect(),
        }
    }

    /// Multiplication by a K-ring element.
    pub fn mul_k(&self, poly: &SparsePoly) -> BMClass {
        let mut out = Self::zero(&self.space);
        for (&e, p) in &self.terms {
            out.push(e, p.mul(poly).expect("same ring"));
        }
        out
    }

    pub fn mul_int(&self, c: impl Into<BigInt>) -> BMClass {
        let c = c.into();
        let mut out = Self::zero(&self.space);
        for (&e, p) in &self.terms {
            out.push(e, p.mul_int(&c));
        }
        out
    }

    /// Multiplication by a coefficient-ring element over `Z` or `Z[β]`: the
    /// coefficient's β power acts as the degree shift.
    pub fn scale_coeff(&self, coeff: &SparsePoly) -> Result<BMClass> {
        if coeff.ring().nvars() > 1 {
            return Err(Error::InvalidConfig(
                "coefficient ring must be Z or Z[β]".into(),
            ));
        }
        let mut out = Self::zero(&self.space);
        for (m, c) in coeff.terms() {
            let beta_pow = m.exp(0) as i64;
            for (&e, p) in &self.terms {
                out.push(e + beta_pow, p.mul_int(c));
            }
        }
        Ok(out)
    }
}

impl std::fmt::Display for BMClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, p) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "({p})")?,
                1 => write!(f, "β*({p})")?,
                _ => write!(f, "β^{e}*({p})")?,
            }
        }
        Ok(())
    }
}

/// The first Chern class operator `c̃₁(L)(α) = β⁻¹ (1 - [L⁻¹]) · α`.
pub fn chern_operator(space: &MultiProj, bundle: &LineBundleSpec, alpha: &BMClass) -> Result<BMClass> {
    if alpha.space() != space {
        return Err(Error::IncompatibleSpaces(format!(
            "class lives on {}, expected {}",
            alpha.space(),
            space
        )));
    }
    let dual = class_of_bundle(space, &bundle.dual())?;
    let multiplier = KClass::one(space).sub(&dual)?;
    Ok(alpha.mul_k(multiplier.poly()).mul_beta(-1))
}
