//! Combinatorial simple-normal-crossing divisors on multiprojective spaces
//! and exact evaluation of the divisor-class formula
//! `[D -> |D|] = Σ_I i_{I*} G_I(c̃₁(L_I))(1_{D_I})`.
//!
//! The identity verified is the pushed-forward one, `i_*[D -> |D|] =
//! i_*[O_D]`, inside the ambient Borel-Moore realization: the model carries
//! no intrinsic theory of the divisor's support. This exercises all the
//! formal-group-law and coefficient bookkeeping of the formula; injectivity
//! of `i_*` is not part of the claim. "Generic" SNC position enters only
//! through the stratum classes `Π_{i∈I}(1 - [O(-a^{(i)})])`.

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fgl::{support_decompose, FormalGroupLaw};
use crate::proj::{class_of_bundle, gr_map, BMClass, ConnectiveClass, KClass, LineBundleSpec, MultiProj};
use crate::proj::{chern_operator, ChowClass};
use crate::algebra::SparsePoly;

/// One component of an SNC divisor: a multidegree and a multiplicity.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SncComponent {
    pub multidegree: Vec<u32>,
    pub multiplicity: u32,
}

/// An effective SNC divisor `D = Σ n_i D_i` on a multiprojective space,
/// encoded combinatorially.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SncConfig {
    ambient: MultiProj,
    components: Vec<SncComponent>,
}

/// JSON form: `{"dims":[...],"components":[{"multidegree":[...],
/// "multiplicity":n},...]}`.
#[derive(Serialize, Deserialize)]
pub struct SncConfigFile {
    pub dims: Vec<u32>,
    pub components: Vec<SncComponent>,
}

impl SncConfig {
    pub fn new(ambient: MultiProj, components: Vec<SncComponent>) -> Result<Self> {
        for c in &components {
            if c.multiplicity < 1 {
                return Err(Error::InvalidConfig(
                    "component multiplicities must be at least 1".into(),
                ));
            }
            if c.multidegree.len() != ambient.factors() {
                return Err(Error::InvalidConfig(format!(
                    "multidegree length {} does not match {} factors",
                    c.multidegree.len(),
                    ambient.factors()
                )));
            }
            if c.multidegree.iter().all(|&a| a == 0) {
                return Err(Error::InvalidConfig(
                    "component multidegrees must be nonzero".into(),
                ));
            }
        }
        Ok(SncConfig {
            ambient,
            components,
        })
    }

    pub fn from_file(file: &SncConfigFile) -> Result<Self> {
        Self::new(MultiProj::new(file.dims.clone())?, file.components.clone())
    }

    pub fn to_file(&self) -> SncConfigFile {
        SncConfigFile {
            dims: self.ambient.dims().to_vec(),
            components: self.components.clone(),
        }
    }

    pub fn ambient(&self) -> &MultiProj {
        &self.ambient
    }

    pub fn components(&self) -> &[SncComponent] {
        &self.components
    }

    /// More components than the dimension only adds empty strata.
    pub fn has_empty_deep_strata(&self) -> bool {
        self.components.len() as i64 > self.ambient.total_dim()
    }

    /// Series truncation guaranteeing that no term is dropped before the
    /// ambient nilpotency bound kills it: `(Σ n_i)·max|a^{(i)}|₁ + 1`.
    pub fn required_trunc(&self) -> usize {
        let total_mult: u32 = self.components.iter().map(|c| c.multiplicity).sum();
        let max_norm: u32 = self
            .components
            .iter()
            .map(|c| c.multidegree.iter().sum::<u32>())
            .max()
            .unwrap_or(0);
        (total_mult * max_norm) as usize + 1
    }

    fn bundle(&self, i: usize) -> LineBundleSpec {
        LineBundleSpec::new(self.components[i].multidegree.iter().map(|&a| a as i64).collect())
    }

    /// `D` with the last component's multiplicity reduced by one (dropped
    /// entirely when it reaches zero).
    fn minus_last(&self) -> SncConfig {
        let mut components = self.components.clone();
        if let Some(last) = components.last_mut() {
            last.multiplicity -= 1;
            if last.multiplicity == 0 {
                components.pop();
            }
        }
        SncConfig {
            ambient: self.ambient.clone(),
            components,
        }
    }
}

/// `[O_D] = 1 - Π_i [O(-n_i · a^{(i)})]` in the ambient K-ring, from the
/// iterated structure-sheaf sequence of the effective divisor.
pub fn structure_sheaf_class(config: &SncConfig) -> KClass {
    let mut product = KClass::one(config.ambient());
    for (i, c) in config.components.iter().enumerate() {
        let twist = LineBundleSpec::new(
            config.bundle(i)
                .multidegree
                .iter()
                .map(|&a| -a * c.multiplicity as i64)
                .collect(),
        );
        let factor = class_of_bundle(config.ambient(), &twist).expect("valid bundle");
        product = product.mul(&factor).expect("same space");
    }
    KClass::one(config.ambient())
        .sub(&product)
        .expect("same space")
}

/// `[O_{D_I}] = Π_{i∈I} (1 - [O(-a^{(i)})])`, the class of the
/// complete-intersection stratum; zero when the stratum is empty.
pub fn stratum_class(config: &SncConfig, index_set: &[usize]) -> KClass {
    let mut product = KClass::one(config.ambient());
    for &i in index_set {
        let dual = class_of_bundle(config.ambient(), &config.bundle(i).dual()).expect("valid bundle");
        let factor = KClass::one(config.ambient()).sub(&dual).expect("same space");
        product = product.mul(&factor).expect("same space");
    }
    product
}

/// The evaluated divisor-class formula: per-subset contributions, their sum
/// and the expected class `β^{d-1}·[O_D]`.
#[derive(Clone, Debug)]
pub struct DivisorClassResult {
    /// Contribution of each nonempty subset with a nonzero `G_I`
    /// (component indices, zero-based).
    pub contributions: BTreeMap<Vec<usize>, BMClass>,
    pub total: BMClass,
    pub expected: BMClass,
    pub verified: bool,
}

/// Evaluates `Σ_I i_{I*} G_I(c̃₁(L_I))(1_{D_I})` in the ambient Borel-Moore
/// realization. The law must be the multiplicative one over `Z[β]` or the
/// additive one over `Z`, with truncation at least `required_trunc()`.
pub fn divisor_class(config: &SncConfig, law: &FormalGroupLaw) -> Result<DivisorClassResult> {
    if law.ring().nvars() > 1 {
        return Err(Error::InvalidConfig(
            "divisor evaluation expects a law over Z or Z[β]".into(),
        ));
    }
    let needed = config.required_trunc();
    if law.trunc() < needed {
        return Err(Error::TruncationTooSmall {
            have: law.trunc(),
            need: needed,
        });
    }
    let ambient = config.ambient();
    let d = ambient.total_dim();
    let r = config.components.len();

    let mut contributions: BTreeMap<Vec<usize>, BMClass> = BTreeMap::new();
    let mut total = BMClass::zero(ambient);

    if r > 0 {
        let multiplicities: Vec<i64> = config
            .components
            .iter()
            .map(|c| c.multiplicity as i64)
            .collect();
        let series = law.multi_sum(&multiplicities)?;
        let decomposition = support_decompose(&series)?;

        // cache the Chern multipliers 1 - [O(-a^{(i)})] per component
        let multipliers: Vec<SparsePoly> = (0..r)
            .map(|i| stratum_class(config, &[i]).poly().clone())
            .collect();

        for (support, g) in decomposition.parts() {
            let index_set: Vec<usize> = support.iter().map(|&v| v as usize).collect();
            let stratum = stratum_class(config, &index_set);
            let base = BMClass::from_k(d - index_set.len() as i64, &stratum);
            let mut contribution = BMClass::zero(ambient);
            for (mono, coeff) in g.terms() {
                // G_I monomial u^m acts as Π c̃₁^{m_i}: multiply the K-part
                // and lower the β degree by |m|
                let mut k_mult = SparsePoly::one(&ambient.k_ring());
                for (v, e) in mono.iter() {
                    k_mult = k_mult.mul(&multipliers[v as usize].pow(e as u32))?;
                }
                let acted = base.mul_k(&k_mult).mul_beta(-mono.total_degree());
                contribution = contribution.add(&acted.scale_coeff(coeff)?)?;
            }
            total = total.add(&contribution)?;
            contributions.insert(index_set, contribution);
        }
    }

    let expected = BMClass::from_k(d - 1, &structure_sheaf_class(config));
    let verified = total == expected;
    Ok(DivisorClassResult {
        contributions,
        total,
        expected,
        verified,
    })
}

/// Checks `[D -> |D|] = β^{d-1}·[O_D]` exactly, with the multiplicative law
/// at the automatic truncation.
pub fn verify_divclass(config: &SncConfig) -> Result<DivisorClassResult> {
    let law = FormalGroupLaw::multiplicative(config.required_trunc())?;
    divisor_class(config, &law)
}

/// Both sides of the peel-one-component recursion.
#[derive(Clone, Debug)]
pub struct RecursionReport {
    pub lhs: BMClass,
    pub rhs: BMClass,
    pub verified: bool,
}

/// Checks the recursion
/// `[D -> |D|] = [D' -> |D'|] + β^{d-1}·[O_{D_r}] - β·c̃₁(O(a^{(r)}))([D' -> |D'|])`
/// with `D' = D - D_r`; for multiplicity one the last component is dropped
/// entirely.
pub fn verify_recursion(config: &SncConfig) -> Result<RecursionReport> {
    let r = config.components.len();
    if r == 0 {
        return Err(Error::InvalidConfig(
            "recursion needs at least one component".into(),
        ));
    }
    let law = FormalGroupLaw::multiplicative(config.required_trunc())?;
    let full = divisor_class(config, &law)?;
    let peeled = divisor_class(&config.minus_last(), &law)?;

    let d = config.ambient().total_dim();
    let last = BMClass::from_k(d - 1, &stratum_class(config, &[r - 1]));
    let correction = chern_operator(config.ambient(), &config.bundle(r - 1), &peeled.total)?
        .mul_beta(1);
    let rhs = peeled.total.add(&last)?.sub(&correction)?;

    let verified = full.total == rhs;
    Ok(RecursionReport {
        lhs: full.total,
        rhs,
        verified,
    })
}

/// Additive-law shadow: the associated graded of `[O_D]` at level `d-1`
/// equals the divisor cycle `Σ_i n_i (Σ_j a^{(i)}_j h_j)` in the Chow ring.
pub fn chow_divisor_check(config: &SncConfig) -> Result<(bool, ChowClass, ChowClass)> {
    let ambient = config.ambient();
    let level = ambient.total_dim() - 1;
    let ssc = structure_sheaf_class(config);
    let lhs = gr_map(&ConnectiveClass::new(level, ssc)?);

    let ring = ambient.chow_ring();
    let mut rhs_poly = SparsePoly::zero(&ring);
    for c in &config.components {
        for (j, &a) in c.multidegree.iter().enumerate() {
            let hj = SparsePoly::var(&ring, j as u32);
            rhs_poly = rhs_poly.add(&hj.mul_int(&(a as i64 * c.multiplicity as i64).into()))?;
        }
    }
    let rhs = ChowClass::from_poly(ambient, rhs_poly);
    Ok((lhs == rhs, lhs, rhs))
}

/// Desk-scale random family (generator v1; seeds are stable):
/// `s <= 3`, `d_i <= 4`, `r <= 4`, `n_i <= 3`, multidegree entries `<= 2`.
pub fn sample_config<R: Rng>(rng: &mut R) -> SncConfig {
    let s = rng.random_range(1..=3usize);
    let dims: Vec<u32> = (0..s).map(|_| rng.random_range(1..=4)).collect();
    let ambient = MultiProj::new(dims).expect("nonempty");
    let r = rng.random_range(1..=4usize);
    let components = (0..r)
        .map(|_| loop {
            let multidegree: Vec<u32> = (0..s).map(|_| rng.random_range(0..=2)).collect();
            if multidegree.iter().any(|&a| a > 0) {
                return SncComponent {
                    multidegree,
                    multiplicity: rng.random_range(1..=3),
                };
            }
        })
        .collect();
    SncConfig::new(ambient, components).expect("family is valid by construction")
}
