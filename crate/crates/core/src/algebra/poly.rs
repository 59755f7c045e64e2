//! Sparse multivariate polynomials over a presented ring, kept in normal
//! form: no zero coefficients, nilpotency bounds applied, degreewise linear
//! rewriting applied when the ring carries reduction data.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::monomial::Monomial;
use super::ring::{same_ring, RingDescriptor};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparsePoly {
    ring: Arc<RingDescriptor>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn zero(ring: &Arc<RingDescriptor>) -> Self {
        SparsePoly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<RingDescriptor>) -> Self {
        Self::constant(ring, BigInt::one())
    }

    pub fn constant(ring: &Arc<RingDescriptor>, c: impl Into<BigInt>) -> Self {
        Self::from_terms(ring, [(Monomial::one(), c.into())])
    }

    pub fn var(ring: &Arc<RingDescriptor>, index: u32) -> Self {
        assert!((index as usize) < ring.nvars(), "variable index out of range");
        Self::from_terms(ring, [(Monomial::var(index), BigInt::one())])
    }

    /// Monomial times a coefficient.
    pub fn term(ring: &Arc<RingDescriptor>, m: Monomial, c: impl Into<BigInt>) -> Self {
        Self::from_terms(ring, [(m, c.into())])
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(
        ring: &Arc<RingDescriptor>,
        terms: I,
    ) -> Self {
        let mut map: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            *map.entry(m).or_insert_with(BigInt::zero) += c;
        }
        let mut p = SparsePoly {
            ring: ring.clone(),
            terms: map,
        };
        p.reduce();
        p
    }

    pub fn ring(&self) -> &Arc<RingDescriptor> {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::one())
    }

    /// Normal form: drop dead monomials, apply degreewise rewriting, drop
    /// zero coefficients. Idempotent.
    fn reduce(&mut self) {
        self.terms.retain(|m, c| !c.is_zero() && self.ring.monomial_alive(m));
        if self.ring.rewrite_table().is_empty() {
            return;
        }
        // Group the remaining terms by grading degree and reduce each graded
        // piece that carries a rewrite table.
        let mut by_degree: BTreeMap<i64, Vec<(Monomial, BigInt)>> = BTreeMap::new();
        for (m, c) in std::mem::take(&mut self.terms) {
            let d = self.ring.monomial_degree(&m);
            by_degree.entry(d).or_default().push((m, c));
        }
        let mut out: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (d, terms) in by_degree {
            match self.ring.rewrite_table().get(&d) {
                None => {
                    for (m, c) in terms {
                        *out.entry(m).or_insert_with(BigInt::zero) += c;
                    }
                }
                Some(basis) => {
                    let mut v = vec![BigInt::zero(); basis.monomials.len()];
                    for (m, c) in terms {
                        let pos = basis
                            .monomials
                            .binary_search(&m)
                            .expect("rewrite table enumerates every monomial of its degree");
                        v[pos] += c;
                    }
                    basis.reduce(&mut v);
                    for (pos, c) in v.into_iter().enumerate() {
                        if !c.is_zero() {
                            out.insert(basis.monomials[pos].clone(), c);
                        }
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        self.terms = out;
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            *terms.entry(m.clone()).or_insert_with(BigInt::zero) += c;
        }
        let mut p = SparsePoly {
            ring: self.ring.clone(),
            terms,
        };
        p.reduce();
        Ok(p)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        SparsePoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                if !self.ring.monomial_alive(&m) {
                    continue;
                }
                *terms.entry(m).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        let mut p = SparsePoly {
            ring: self.ring.clone(),
            terms,
        };
        p.reduce();
        Ok(p)
    }

    pub fn mul_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        SparsePoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let mut p = SparsePoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        };
        p.reduce();
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Inverts a unit of the form `±1 + nilpotent` by the terminating
    /// geometric series. Errors when the constant term is not `±1` or when a
    /// non-nilpotent variable occurs.
    pub fn invert_unit(&self) -> Result<Self> {
        let c0 = self.constant_term();
        if !c0.abs().is_one() {
            return Err(Error::NonUnitConstant(c0.to_string()));
        }
        for (m, _) in self.terms() {
            for (v, _) in m.iter() {
                if self.ring.vars()[v as usize].bound.is_none() {
                    return Err(Error::NonNilpotentVariable(
                        self.ring.var_name(v).to_string(),
                    ));
                }
            }
        }
        // self = c0*(1 - n) with n nilpotent, so self^-1 = c0*(1 + n + n^2 + ...).
        let n = Self::one(&self.ring).sub(&self.mul_int(&c0))?;
        let mut acc = Self::one(&self.ring);
        let mut power = n.clone();
        while !power.is_zero() {
            acc = acc.add(&power)?;
            power = power.mul(&n)?;
        }
        Ok(acc.mul_int(&c0))
    }

    /// Set of grading degrees present; a homogeneous polynomial has at most
    /// one.
    pub fn degrees(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self
            .terms
            .keys()
            .map(|m| self.ring.monomial_degree(m))
            .collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    pub fn is_homogeneous_of_degree(&self, d: i64) -> bool {
        self.terms
            .keys()
            .all(|m| self.ring.monomial_degree(m) == d)
    }

    /// The sum of terms whose monomial total degree (unweighted) equals `d`.
    pub fn total_degree_part(&self, d: i64) -> Self {
        SparsePoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Reinterprets the terms in another ring (same variable indices) and
    /// renormalizes there.
    pub fn into_ring(&self, ring: &Arc<RingDescriptor>) -> Self {
        Self::from_terms(ring, self.terms.iter().map(|(m, c)| (m.clone(), c.clone())))
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| super::monomial::display_cmp(a, b));
        let mut first = true;
        for (m, c) in ordered {
            let negative = c.is_negative();
            let abs = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", self.ring.format_monomial(m))?;
            } else {
                write!(f, "{abs}*{}", self.ring.format_monomial(m))?;
            }
        }
        Ok(())
    }
}
