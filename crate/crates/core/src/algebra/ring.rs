//! Ring presentations: graded variables, nilpotency bounds, Laurent
//! variables and normal-form reduction data.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::monomial::Monomial;

/// One generator of a presented ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarSpec {
    pub name: String,
    /// Grading weight of the variable.
    pub degree: i64,
    /// Largest allowed exponent; `x^(bound+1) = 0`.
    pub bound: Option<u32>,
    /// Laurent-inverted variables admit negative exponents.
    pub laurent: bool,
}

impl VarSpec {
    pub fn new(name: impl Into<String>, degree: i64) -> Self {
        VarSpec {
            name: name.into(),
            degree,
            bound: None,
            laurent: false,
        }
    }

    pub fn nilpotent(name: impl Into<String>, degree: i64, bound: u32) -> Self {
        VarSpec {
            name: name.into(),
            degree,
            bound: Some(bound),
            laurent: false,
        }
    }

    pub fn laurent(name: impl Into<String>, degree: i64) -> Self {
        VarSpec {
            name: name.into(),
            degree,
            laurent: true,
            bound: None,
        }
    }
}

/// Linear normal-form data for one graded piece: the full monomial list of
/// that degree together with an integer echelon (Hermite) basis of the
/// relation lattice, expressed in those coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EchelonBasis {
    pub monomials: Vec<Monomial>,
    /// Echelon rows over `monomials`; each row has a positive pivot and the
    /// entries above every pivot are reduced into `[0, pivot)`.
    pub rows: Vec<Vec<BigInt>>,
}

impl EchelonBasis {
    /// Canonical coset representative of a coordinate vector modulo the
    /// lattice spanned by `rows`.
    pub fn reduce(&self, v: &mut [BigInt]) {
        for row in &self.rows {
            let pivot_col = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
            let pivot = &row[pivot_col];
            if v[pivot_col].is_zero() {
                continue;
            }
            let q = v[pivot_col].div_floor(pivot);
            if q.is_zero() {
                continue;
            }
            for (vi, ri) in v.iter_mut().zip(row.iter()) {
                *vi -= &q * ri;
            }
        }
    }
}

/// A presented coefficient ring: graded variables with optional nilpotency
/// bounds and Laurent inversion, a list of homogeneous relations, and
/// (when the quotient is computed degreewise) linear reduction tables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingDescriptor {
    vars: Vec<VarSpec>,
    /// Homogeneous relation polynomials as raw term lists over `vars`.
    relations: Vec<Vec<(Monomial, BigInt)>>,
    /// Degreewise linear rewriting to normal form, keyed by grading degree.
    rewrite: BTreeMap<i64, EchelonBasis>,
    /// Monomials of degree strictly below this are truncated away.
    degree_floor: Option<i64>,
}

impl RingDescriptor {
    pub fn new(vars: Vec<VarSpec>) -> Arc<Self> {
        Arc::new(RingDescriptor {
            vars,
            relations: Vec::new(),
            rewrite: BTreeMap::new(),
            degree_floor: None,
        })
    }

    pub fn with_rewrite(
        vars: Vec<VarSpec>,
        relations: Vec<Vec<(Monomial, BigInt)>>,
        rewrite: BTreeMap<i64, EchelonBasis>,
        degree_floor: Option<i64>,
    ) -> Arc<Self> {
        Arc::new(RingDescriptor {
            vars,
            relations,
            rewrite,
            degree_floor,
        })
    }

    /// The ring of integers (no variables).
    pub fn integers() -> Arc<Self> {
        Self::new(Vec::new())
    }

    /// `Z[β]` with `deg β = -1`.
    pub fn beta_poly() -> Arc<Self> {
        Self::new(vec![VarSpec::new("β", -1)])
    }

    /// `Z[β, β⁻¹]` with `deg β = -1`.
    pub fn beta_laurent() -> Arc<Self> {
        Self::new(vec![VarSpec::laurent("β", -1)])
    }

    pub fn vars(&self) -> &[VarSpec] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_name(&self, index: u32) -> &str {
        &self.vars[index as usize].name
    }

    pub fn relations(&self) -> &[Vec<(Monomial, BigInt)>] {
        &self.relations
    }

    pub fn rewrite_table(&self) -> &BTreeMap<i64, EchelonBasis> {
        &self.rewrite
    }

    pub fn degree_floor(&self) -> Option<i64> {
        self.degree_floor
    }

    /// Grading degree of a monomial under the declared variable weights.
    pub fn monomial_degree(&self, m: &Monomial) -> i64 {
        m.iter()
            .map(|(v, e)| self.vars[v as usize].degree * e as i64)
            .sum()
    }

    /// True when the monomial survives the nilpotency bounds and the degree
    /// floor.
    pub fn monomial_alive(&self, m: &Monomial) -> bool {
        for (v, e) in m.iter() {
            let spec = &self.vars[v as usize];
            debug_assert!(e > 0 || spec.laurent, "negative exponent on non-Laurent variable");
            if let Some(bound) = spec.bound {
                if e > bound as i32 {
                    return false;
                }
            }
        }
        if let Some(floor) = self.degree_floor {
            if self.monomial_degree(m) < floor {
                return false;
            }
        }
        true
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        m.iter()
            .map(|(v, e)| {
                let name = self.var_name(v);
                if e == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Structural ring equality with a cheap pointer fast path.
pub fn same_ring(a: &Arc<RingDescriptor>, b: &Arc<RingDescriptor>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
