//! Fundamental classes of complete intersections, the specializations
//! θ_× (keep the β power, forget the level cap) and θ₊ (associated graded),
//! and pullback compatibility checks along projections and linear
//! embeddings.

use crate::error::{Error, Result};
use crate::proj::{
    class_of_bundle, gr_map, pullback_linear, pullback_projection, BMClass, ChowClass,
    ConnectiveClass, KClass, LineBundleSpec, MultiProj,
};
use crate::algebra::SparsePoly;

/// A complete intersection of hypersurfaces of the given multidegrees in a
/// multiprojective space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompleteIntersection {
    ambient: MultiProj,
    degrees: Vec<Vec<u32>>,
}

impl CompleteIntersection {
    pub fn new(ambient: MultiProj, degrees: Vec<Vec<u32>>) -> Result<Self> {
        for b in &degrees {
            if b.len() != ambient.factors() {
                return Err(Error::InvalidConfig(format!(
                    "multidegree length {} does not match {} factors",
                    b.len(),
                    ambient.factors()
                )));
            }
            if b.iter().all(|&x| x == 0) {
                return Err(Error::InvalidConfig(
                    "hypersurface multidegrees must be nonzero".into(),
                ));
            }
        }
        if degrees.len() as i64 > ambient.total_dim() {
            return Err(Error::InvalidConfig(format!(
                "codimension {} exceeds the ambient dimension {}",
                degrees.len(),
                ambient.total_dim()
            )));
        }
        Ok(CompleteIntersection { ambient, degrees })
    }

    pub fn ambient(&self) -> &MultiProj {
        &self.ambient
    }

    pub fn degrees(&self) -> &[Vec<u32>] {
        &self.degrees
    }

    pub fn codim(&self) -> usize {
        self.degrees.len()
    }

    pub fn dim(&self) -> i64 {
        self.ambient.total_dim() - self.codim() as i64
    }

    /// `[O_X] = Π_j (1 - [O(-b^{(j)})])` in the ambient K-ring.
    pub fn k_class(&self) -> KClass {
        let mut product = KClass::one(&self.ambient);
        for b in &self.degrees {
            let dual = LineBundleSpec::new(b.iter().map(|&x| -(x as i64)).collect());
            let factor = KClass::one(&self.ambient)
                .sub(&class_of_bundle(&self.ambient, &dual).expect("valid bundle"))
                .expect("same space");
            product = product.mul(&factor).expect("same space");
        }
        product
    }
}

/// The three fundamental classes of one complete intersection.
#[derive(Clone, Debug)]
pub struct FundamentalClassTriple {
    pub ck: ConnectiveClass,
    pub g: BMClass,
    pub ch: ChowClass,
}

/// `[X]_CK`: the structure-sheaf class placed at level `dim X`. A complete
/// intersection of codimension `c` always lies in `F_{d-c}`.
pub fn fundamental_class_ck(x: &CompleteIntersection) -> ConnectiveClass {
    ConnectiveClass::new(x.dim(), x.k_class())
        .expect("a complete-intersection class lies in its dimension level")
}

/// θ_×: keep the β power given by the level and forget the level cap.
pub fn theta_times(t: &ConnectiveClass) -> BMClass {
    BMClass::from_k(t.level(), t.value())
}

/// θ₊: the associated graded class at the class's level.
pub fn theta_plus(t: &ConnectiveClass) -> ChowClass {
    gr_map(t)
}

pub fn fundamental_class_triple(x: &CompleteIntersection) -> FundamentalClassTriple {
    let ck = fundamental_class_ck(x);
    let g = theta_times(&ck);
    let ch = theta_plus(&ck);
    FundamentalClassTriple { ck, g, ch }
}

/// The Bezout-style cycle class `Π_j (Σ_i b^{(j)}_i h_i)`, computed in the
/// Chow ring with no K-theory input.
pub fn chow_oracle(x: &CompleteIntersection) -> ChowClass {
    let ring = x.ambient().chow_ring();
    let mut product = SparsePoly::one(&ring);
    for b in x.degrees() {
        let mut linear = SparsePoly::zero(&ring);
        for (i, &bi) in b.iter().enumerate() {
            linear = linear
                .add(&SparsePoly::var(&ring, i as u32).mul_int(&(bi as i64).into()))
                .expect("same ring");
        }
        product = product.mul(&linear).expect("same ring");
    }
    ChowClass::from_poly(x.ambient(), product)
}

/// One checked identity with both sides rendered.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub identity: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

/// Outcome of the fundamental-class triangle for one complete intersection.
#[derive(Clone, Debug)]
pub struct TriangleReport {
    pub triple: FundamentalClassTriple,
    pub checks: Vec<IdentityCheck>,
    pub verified: bool,
}

/// Checks `θ₊([X]_CK)` against the cycle-class oracle and `θ_×([X]_CK)`
/// against `β^{dim}·[O_X]`.
pub fn verify_fundamental_triangle(x: &CompleteIntersection) -> TriangleReport {
    let triple = fundamental_class_triple(x);
    let oracle = chow_oracle(x);
    let expected_g = BMClass::from_k(x.dim(), &x.k_class());

    let chow_check = IdentityCheck {
        identity: "theta_plus([X]_CK) = cycle class".into(),
        lhs: triple.ch.to_string(),
        rhs: oracle.to_string(),
        pass: triple.ch == oracle,
    };
    let g_check = IdentityCheck {
        identity: "theta_times([X]_CK) = beta^dim [O_X]".into(),
        lhs: triple.g.to_string(),
        rhs: expected_g.to_string(),
        pass: triple.g == expected_g,
    };
    let verified = chow_check.pass && g_check.pass;
    TriangleReport {
        triple,
        checks: vec![chow_check, g_check],
        verified,
    }
}

/// The two pullback shapes the model supports.
#[derive(Clone, Debug)]
pub enum LciPullback {
    /// Pull back along the projection `ambient x factor -> ambient`.
    Projection(MultiProj),
    /// Pull back along a factorwise linear embedding given by the subspace
    /// dimensions.
    LinearEmbedding(Vec<u32>),
}

/// Checks `f^*([X]_CK) = [Y]_CK` for `Y` the pulled-back complete
/// intersection. Linear embeddings must be transverse: the restricted class
/// has to be the nonzero CI class of the restricted multidegrees at the
/// expected level.
pub fn lci_pullback_check(kind: &LciPullback, x: &CompleteIntersection) -> Result<bool> {
    let ck = fundamental_class_ck(x);
    match kind {
        LciPullback::Projection(factor) => {
            let product = x.ambient().product(factor);
            let pulled = pullback_projection(x.ambient(), factor, ck.value())?;
            let level = ck.level() + factor.total_dim();
            let pulled_ck = ConnectiveClass::new(level, pulled)?;

            let extended: Vec<Vec<u32>> = x
                .degrees()
                .iter()
                .map(|b| {
                    let mut e = b.clone();
                    e.extend(std::iter::repeat_n(0, factor.factors()));
                    e
                })
                .collect();
            let y = CompleteIntersection::new(product, extended)?;
            Ok(pulled_ck == fundamental_class_ck(&y))
        }
        LciPullback::LinearEmbedding(sub_dims) => {
            let sub = MultiProj::new(sub_dims.clone())?;
            if !sub.embeds_linearly_in(x.ambient()) {
                return Err(Error::IncompatibleSpaces(format!(
                    "{} is not a linear subspace of {}",
                    sub,
                    x.ambient()
                )));
            }
            if x.codim() as i64 > sub.total_dim() {
                return Err(Error::NonTransverse);
            }
            let pulled = pullback_linear(&sub, ck.value())?;
            if x.codim() > 0 && pulled.is_zero() {
                return Err(Error::NonTransverse);
            }
            let y = CompleteIntersection::new(sub, x.degrees().to_vec())?;
            let level = y.dim();
            let pulled_ck = ConnectiveClass::new(level, pulled).map_err(|_| Error::NonTransverse)?;
            Ok(pulled_ck == fundamental_class_ck(&y))
        }
    }
}

/// Self-intersection formula on the model: for a class supported on the
/// hyperplane stratum `H` of the given factor, `i^* i_*` is multiplication
/// by `1 - [O(-1)]` on that factor. Errors when the class is not supported
/// on `H`.
pub fn tor_formula_check(space: &MultiProj, factor: usize, class: &KClass) -> Result<bool> {
    if factor >= space.factors() {
        return Err(Error::InvalidConfig(format!(
            "factor index {factor} out of range"
        )));
    }
    if space.dims()[factor] == 0 {
        return Err(Error::InvalidConfig(
            "the chosen factor is a point; it has no hyperplane".into(),
        ));
    }
    if class.space() != space {
        return Err(Error::IncompatibleSpaces(format!(
            "class lives on {}, expected {}",
            class.space(),
            space
        )));
    }
    if class.is_zero() {
        return Ok(true);
    }
    // supported on H: every monomial is divisible by x_factor
    if !class.poly().terms().all(|(m, _)| m.exp(factor as u32) >= 1) {
        return Err(Error::NotSupported);
    }
    let mut sub_dims = space.dims().to_vec();
    sub_dims[factor] -= 1;
    let h = MultiProj::new(sub_dims)?;

    let x_t = SparsePoly::var(&space.k_ring(), factor as u32);
    let lhs = KClass::from_poly(space, class.poly().mul(&x_t)?);
    let restricted = pullback_linear(&h, class)?;
    let rhs = crate::proj::pushforward_linear(space, &restricted)?;
    Ok(lhs == rhs)
}
