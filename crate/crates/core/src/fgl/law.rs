//! Formal group laws as truncated coefficient tables, with formal sums,
//! n-series, inverse series and multi-sums.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{same_ring, Monomial, RingDescriptor, SparsePoly};
use crate::error::{Error, Result};

use super::series::TruncSeries;

/// A commutative formal group law `F(u,v) = u + v + Σ a_ij u^i v^j`
/// over a presented coefficient ring, truncated at total degree `N`: the
/// table stores the coefficients with `i + j <= N + 1`.
///
/// Commutativity (`a_ij = a_ji`) and the unit law (`F(u,0) = u`, no `(i,0)`
/// terms) are structural; associativity is a property checked by
/// [`FormalGroupLaw::verify_associativity`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormalGroupLaw {
    ring: Arc<RingDescriptor>,
    trunc: usize,
    // keyed by (i, j) with i <= j; zero coefficients are not stored
    coeffs: BTreeMap<(u32, u32), SparsePoly>,
}

impl FormalGroupLaw {
    pub fn new<I: IntoIterator<Item = ((u32, u32), SparsePoly)>>(
        ring: &Arc<RingDescriptor>,
        trunc: usize,
        entries: I,
    ) -> Result<Self> {
        if trunc < 1 {
            return Err(Error::InvalidConfig(
                "truncation degree must be at least 1".into(),
            ));
        }
        let mut coeffs: BTreeMap<(u32, u32), SparsePoly> = BTreeMap::new();
        for ((i, j), c) in entries {
            if i < 1 || j < 1 {
                return Err(Error::InvalidConfig(format!(
                    "coefficient index ({i},{j}) out of range: need i,j >= 1"
                )));
            }
            if (i + j) as usize > trunc + 1 {
                return Err(Error::InvalidConfig(format!(
                    "coefficient ({i},{j}) lies beyond the truncation degree {trunc}"
                )));
            }
            if !same_ring(c.ring(), ring) {
                return Err(Error::RingMismatch);
            }
            let key = (i.min(j), i.max(j));
            match coeffs.get(&key) {
                None => {
                    if !c.is_zero() {
                        coeffs.insert(key, c);
                    }
                }
                Some(existing) => {
                    if *existing != c {
                        return Err(Error::AsymmetricCoefficient { i, j });
                    }
                }
            }
        }
        Ok(FormalGroupLaw {
            ring: ring.clone(),
            trunc,
            coeffs,
        })
    }

    /// The multiplicative law `u + v - β·uv` over `Z[β]`.
    pub fn multiplicative(trunc: usize) -> Result<Self> {
        let ring = RingDescriptor::beta_poly();
        let beta = SparsePoly::var(&ring, 0);
        Self::new(&ring, trunc, [((1, 1), beta.neg())])
    }

    /// The additive law `u + v` over `Z`.
    pub fn additive(trunc: usize) -> Result<Self> {
        let ring = RingDescriptor::integers();
        Self::new(&ring, trunc, [])
    }

    pub fn ring(&self) -> &Arc<RingDescriptor> {
        &self.ring
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// Coefficient of `u^i v^j`; symmetric in `(i, j)`.
    pub fn coeff(&self, i: u32, j: u32) -> SparsePoly {
        self.coeffs
            .get(&(i.min(j), i.max(j)))
            .cloned()
            .unwrap_or_else(|| SparsePoly::zero(&self.ring))
    }

    /// The stored entries with `i <= j`.
    pub fn entries(&self) -> impl Iterator<Item = (&(u32, u32), &SparsePoly)> {
        self.coeffs.iter()
    }

    /// `F(s, t)`, truncated at the series' truncation degree. Both series
    /// must have zero constant term, live in the law's coefficient ring and
    /// agree on truncation; the series truncation may exceed the law's by at
    /// most one (the table has coefficients up to `i + j = N + 1`).
    pub fn formal_sum(&self, s: &TruncSeries, t: &TruncSeries) -> Result<TruncSeries> {
        if !same_ring(s.ring(), &self.ring) || !same_ring(t.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        if s.trunc() != t.trunc() {
            return Err(Error::TruncationMismatch(s.trunc(), t.trunc()));
        }
        if s.trunc() > self.trunc + 1 {
            return Err(Error::TruncationTooSmall {
                have: self.trunc,
                need: s.trunc() - 1,
            });
        }
        if !s.constant_term().is_zero() || !t.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut acc = s.add(t)?;
        if self.coeffs.is_empty() {
            return Ok(acc);
        }
        // only the powers the table actually references
        let table_max = self.coeffs.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let max_pow = (s.trunc() as u32).min(table_max);
        let s_pows = powers(s, max_pow);
        let t_pows = powers(t, max_pow);
        for (&(i, j), c) in &self.coeffs {
            if i > max_pow || j > max_pow {
                continue;
            }
            let sij = s_pows[i as usize].mul(&t_pows[j as usize])?;
            let mut cross = sij;
            if i != j {
                cross = cross.add(&s_pows[j as usize].mul(&t_pows[i as usize])?)?;
            }
            acc = acc.add(&cross.mul_scalar(c))?;
        }
        Ok(acc)
    }

    /// The n-series `[n]_F u` in one variable at the law's truncation.
    /// `[0]u = 0`, `[n+1]u = F([n]u, u)`; negative `n` uses the formal
    /// inverse.
    pub fn n_series(&self, n: i64) -> TruncSeries {
        self.n_series_in(n, 0, 1, self.trunc)
    }

    /// The n-series placed on the variable `u_{var+1}` of an `nvars`-variable
    /// series space.
    pub fn n_series_in(&self, n: i64, var: usize, nvars: usize, trunc: usize) -> TruncSeries {
        let u = TruncSeries::var(&self.ring, nvars, trunc, var);
        if n == 0 {
            return TruncSeries::zero(&self.ring, nvars, trunc);
        }
        let step = if n > 0 {
            u.clone()
        } else {
            self.inverse_in(var, nvars, trunc)
        };
        let mut acc = step.clone();
        for _ in 1..n.unsigned_abs() {
            acc = self.formal_sum(&acc, &step).expect("series are compatible");
        }
        acc
    }

    /// The formal inverse `ι(u)` with `F(u, ι(u)) = 0` to truncation, solved
    /// degree by degree.
    pub fn formal_inverse(&self) -> TruncSeries {
        self.inverse_in(0, 1, self.trunc)
    }

    fn inverse_in(&self, var: usize, nvars: usize, trunc: usize) -> TruncSeries {
        let u = TruncSeries::var(&self.ring, nvars, trunc, var);
        let mut inv = u.neg();
        loop {
            let r = self.formal_sum(&u, &inv).expect("series are compatible");
            let Some(d) = r.min_degree() else { return inv };
            // knocking out the lowest degree strictly raises it
            inv = inv.sub(&r.degree_part(d)).expect("series are compatible");
        }
    }

    /// The multi-sum `[n_1]u_1 +_F ... +_F [n_r]u_r` in `r` variables.
    pub fn multi_sum(&self, multiplicities: &[i64]) -> Result<TruncSeries> {
        let r = multiplicities.len();
        if r == 0 {
            return Err(Error::InvalidConfig(
                "multi-sum needs at least one multiplicity".into(),
            ));
        }
        let mut acc = self.n_series_in(multiplicities[0], 0, r, self.trunc);
        for (i, &n) in multiplicities.iter().enumerate().skip(1) {
            let term = self.n_series_in(n, i, r, self.trunc);
            acc = self.formal_sum(&acc, &term)?;
        }
        Ok(acc)
    }

    /// Expands `F(F(u,v),w) - F(u,F(v,w))` up to total degree `N + 1` and
    /// reports every nonzero coefficient; an empty report means the law is
    /// associative to truncation.
    pub fn verify_associativity(&self) -> AssocReport {
        let trunc = self.trunc + 1;
        let u = TruncSeries::var(&self.ring, 3, trunc, 0);
        let v = TruncSeries::var(&self.ring, 3, trunc, 1);
        let w = TruncSeries::var(&self.ring, 3, trunc, 2);
        let fuv = self.formal_sum(&u, &v).expect("series are compatible");
        let fvw = self.formal_sum(&v, &w).expect("series are compatible");
        let lhs = self.formal_sum(&fuv, &w).expect("series are compatible");
        let rhs = self.formal_sum(&u, &fvw).expect("series are compatible");
        let diff = lhs.sub(&rhs).expect("series are compatible");
        AssocReport {
            trunc,
            failures: diff
                .terms()
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

fn powers(s: &TruncSeries, max: u32) -> Vec<TruncSeries> {
    let one = TruncSeries::constant(
        s.ring(),
        s.nvars(),
        s.trunc(),
        SparsePoly::one(s.ring()),
    );
    let mut pows = Vec::with_capacity(max as usize + 1);
    pows.push(one);
    for k in 1..=max as usize {
        let next = pows[k - 1].mul(s).expect("same ring");
        pows.push(next);
    }
    pows
}

/// Outcome of an associativity check: the nonzero coefficients of the
/// associator up to the reported truncation degree.
#[derive(Clone, Debug)]
pub struct AssocReport {
    pub trunc: usize,
    pub failures: Vec<(Monomial, SparsePoly)>,
}

impl AssocReport {
    pub fn is_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for AssocReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_pass() {
            write!(f, "associative up to total degree {}", self.trunc)
        } else {
            writeln!(
                f,
                "association fails in {} coefficient(s) up to total degree {}:",
                self.failures.len(),
                self.trunc
            )?;
            for (m, c) in &self.failures {
                writeln!(f, "  u^a v^b w^c = {:?}: {c}", m)?;
            }
            Ok(())
        }
    }
}
