//! Truncated multivariate series with coefficients in a presented ring.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::algebra::{same_ring, Monomial, RingDescriptor, SparsePoly};
use crate::error::{Error, Result};

/// A series in variables `u_1..u_r`, truncated at a fixed total degree: all
/// arithmetic discards terms of higher degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    ring: Arc<RingDescriptor>,
    nvars: usize,
    trunc: usize,
    terms: BTreeMap<Monomial, SparsePoly>,
}

impl TruncSeries {
    pub fn zero(ring: &Arc<RingDescriptor>, nvars: usize, trunc: usize) -> Self {
        TruncSeries {
            ring: ring.clone(),
            nvars,
            trunc,
            terms: BTreeMap::new(),
        }
    }

    /// The series `u_index`.
    pub fn var(ring: &Arc<RingDescriptor>, nvars: usize, trunc: usize, index: usize) -> Self {
        assert!(index < nvars, "series variable out of range");
        let mut s = Self::zero(ring, nvars, trunc);
        if trunc >= 1 {
            s.terms
                .insert(Monomial::var(index as u32), SparsePoly::one(ring));
        }
        s
    }

    pub fn constant(ring: &Arc<RingDescriptor>, nvars: usize, trunc: usize, c: SparsePoly) -> Self {
        let mut s = Self::zero(ring, nvars, trunc);
        if !c.is_zero() {
            s.terms.insert(Monomial::one(), c);
        }
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, SparsePoly)>>(
        ring: &Arc<RingDescriptor>,
        nvars: usize,
        trunc: usize,
        terms: I,
    ) -> Self {
        let mut s = Self::zero(ring, nvars, trunc);
        for (m, c) in terms {
            s.push(m, c);
        }
        s
    }

    pub fn ring(&self) -> &Arc<RingDescriptor> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &SparsePoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> SparsePoly {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| SparsePoly::zero(&self.ring))
    }

    pub fn constant_term(&self) -> SparsePoly {
        self.coeff(&Monomial::one())
    }

    fn push(&mut self, m: Monomial, c: SparsePoly) {
        if c.is_zero() || m.total_degree() > self.trunc as i64 {
            return;
        }
        debug_assert!(m.iter().all(|(v, e)| (v as usize) < self.nvars && e > 0));
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c).expect("same ring");
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_compat(&self, other: &Self) -> Result<()> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.trunc != other.trunc {
            return Err(Error::TruncationMismatch(self.trunc, other.trunc));
        }
        assert_eq!(self.nvars, other.nvars, "series variable counts differ");
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.push(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            ring: self.ring.clone(),
            nvars: self.nvars,
            trunc: self.trunc,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compat(other)?;
        let mut out = Self::zero(&self.ring, self.nvars, self.trunc);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.total_degree() + mb.total_degree() > self.trunc as i64 {
                    continue;
                }
                out.push(ma.mul(mb), ca.mul(cb).expect("same ring"));
            }
        }
        Ok(out)
    }

    pub fn mul_scalar(&self, c: &SparsePoly) -> Self {
        let mut out = Self::zero(&self.ring, self.nvars, self.trunc);
        for (m, k) in &self.terms {
            out.push(m.clone(), k.mul(c).expect("same ring"));
        }
        out
    }

    pub fn mul_int(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(&self.ring, self.nvars, self.trunc);
        for (m, k) in &self.terms {
            out.push(m.clone(), k.mul_int(c));
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let mut out = Self::zero(&self.ring, self.nvars, self.trunc);
        for (k, c) in &self.terms {
            out.push(k.mul(m), c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(&self.ring, self.nvars, self.trunc, SparsePoly::one(&self.ring));
        for _ in 0..k {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Least total degree among the terms.
    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.total_degree()).min()
    }

    /// Sum of the terms of exactly the given total degree.
    pub fn degree_part(&self, d: i64) -> Self {
        TruncSeries {
            ring: self.ring.clone(),
            nvars: self.nvars,
            trunc: self.trunc,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Re-expresses the coefficients in another ring.
    pub fn map_coefficients<F: Fn(&SparsePoly) -> SparsePoly>(
        &self,
        ring: &Arc<RingDescriptor>,
        f: F,
    ) -> Self {
        let mut out = Self::zero(ring, self.nvars, self.trunc);
        for (m, c) in &self.terms {
            out.push(m.clone(), f(c));
        }
        out
    }

    fn var_display(&self, index: u32) -> String {
        if self.nvars == 1 {
            "u".to_string()
        } else {
            format!("u{}", index + 1)
        }
    }

    fn monomial_display(&self, m: &Monomial) -> String {
        m.iter()
            .map(|(v, e)| {
                let name = self.var_display(v);
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| crate::algebra::display_cmp(a, b));
        let mut first = true;
        for (m, c) in ordered {
            let single = c.num_terms() == 1;
            if single {
                let (cm, cc) = c.terms().next().unwrap();
                let negative = cc.is_negative();
                if first {
                    if negative {
                        write!(f, "-")?;
                    }
                } else if negative {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                let mut parts = Vec::new();
                let abs = cc.abs();
                if !abs.is_one() || (cm.is_one() && m.is_one()) {
                    parts.push(abs.to_string());
                }
                if !cm.is_one() {
                    parts.push(c.ring().format_monomial(cm));
                }
                if !m.is_one() {
                    parts.push(self.monomial_display(m));
                }
                write!(f, "{}", parts.join("*"))?;
            } else {
                if !first {
                    write!(f, " + ")?;
                }
                if m.is_one() {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "({c})*{}", self.monomial_display(m))?;
                }
            }
            first = false;
        }
        Ok(())
    }
}
