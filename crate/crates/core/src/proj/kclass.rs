//! Elements of the nilpotent K-ring and the maps between spaces.

use num_bigint::BigInt;

use crate::algebra::{Monomial, SparsePoly};
use crate::error::{Error, Result};

use super::space::MultiProj;

/// A line bundle `O(a_1, ..., a_s)` given by its multidegree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LineBundleSpec {
    pub multidegree: Vec<i64>,
}

impl LineBundleSpec {
    pub fn new(multidegree: Vec<i64>) -> Self {
        LineBundleSpec { multidegree }
    }

    /// `L ⊗ M` adds multidegrees.
    pub fn tensor(&self, other: &LineBundleSpec) -> LineBundleSpec {
        LineBundleSpec {
            multidegree: self
                .multidegree
                .iter()
                .zip(&other.multidegree)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn dual(&self) -> LineBundleSpec {
        LineBundleSpec {
            multidegree: self.multidegree.iter().map(|a| -a).collect(),
        }
    }
}

/// An element of `K_0` of a multiprojective space, in normal form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KClass {
    space: MultiProj,
    poly: SparsePoly,
}

impl KClass {
    pub fn zero(space: &MultiProj) -> Self {
        KClass {
            poly: SparsePoly::zero(&space.k_ring()),
            space: space.clone(),
        }
    }

    /// The class of the structure sheaf of the whole space.
    pub fn one(space: &MultiProj) -> Self {
        KClass {
            poly: SparsePoly::one(&space.k_ring()),
            space: space.clone(),
        }
    }

    pub fn from_poly(space: &MultiProj, poly: SparsePoly) -> Self {
        debug_assert!(crate::algebra::same_ring(poly.ring(), &space.k_ring()));
        KClass {
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

    fn check_space(&self, other: &KClass) -> Result<()> {
        if self.space == other.space {
            Ok(())
        } else {
            Err(Error::IncompatibleSpaces(format!(
                "{} vs {}",
                self.space, other.space
            )))
        }
    }

    pub fn add(&self, other: &KClass) -> Result<KClass> {
        self.check_space(other)?;
        Ok(KClass {
            space: self.space.clone(),
            poly: self.poly.add(&other.poly)?,
        })
    }

    pub fn sub(&self, other: &KClass) -> Result<KClass> {
        self.check_space(other)?;
        Ok(KClass {
            space: self.space.clone(),
            poly: self.poly.sub(&other.poly)?,
        })
    }

    pub fn neg(&self) -> KClass {
        KClass {
            space: self.space.clone(),
            poly: self.poly.neg(),
        }
    }

    pub fn mul(&self, other: &KClass) -> Result<KClass> {
        self.check_space(other)?;
        Ok(KClass {
            space: self.space.clone(),
            poly: self.poly.mul(&other.poly)?,
        })
    }

    pub fn mul_int(&self, c: impl Into<BigInt>) -> KClass {
        KClass {
            space: self.space.clone(),
            poly: self.poly.mul_int(&c.into()),
        }
    }
}

impl std::fmt::Display for KClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// `[O(a)] = Π_i (1 - x_i)^{-a_i}`, expanded through the nilpotency bounds.
pub fn class_of_bundle(space: &MultiProj, bundle: &LineBundleSpec) -> Result<KClass> {
    if bundle.multidegree.len() != space.factors() {
        return Err(Error::IncompatibleSpaces(format!(
            "multidegree length {} vs {} factors",
            bundle.multidegree.len(),
            space.factors()
        )));
    }
    let ring = space.k_ring();
    let mut acc = SparsePoly::one(&ring);
    for (i, &a) in bundle.multidegree.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let base = SparsePoly::one(&ring).sub(&SparsePoly::var(&ring, i as u32))?;
        let factor = if a < 0 {
            base.pow((-a) as u32)
        } else {
            base.pow(a as u32).invert_unit()?
        };
        acc = acc.mul(&factor)?;
    }
    Ok(KClass::from_poly(space, acc))
}

/// The class `Π_i x_i^{c_i}` of a product of linear subspaces of the given
/// codimensions.
pub fn class_of_linear_stratum(space: &MultiProj, codims: &[u32]) -> Result<KClass> {
    if codims.len() != space.factors() {
        return Err(Error::IncompatibleSpaces(format!(
            "codimension vector length {} vs {} factors",
            codims.len(),
            space.factors()
        )));
    }
    for (&c, &d) in codims.iter().zip(space.dims()) {
        if c > d {
            return Err(Error::CodimOutOfRange { got: c, dim: d });
        }
    }
    let ring = space.k_ring();
    let m = Monomial::from_pairs(codims.iter().enumerate().map(|(i, &c)| (i as u32, c as i32)));
    Ok(KClass::from_poly(space, SparsePoly::term(&ring, m, 1)))
}

/// Dimension of the closed stratum a monomial represents.
pub(crate) fn monomial_dimension(space: &MultiProj, m: &Monomial) -> i64 {
    space.total_dim() - m.total_degree()
}

/// Minimal `n` with `κ ∈ F_n`: the largest stratum dimension occurring in
/// `κ`. Undefined (an error) for the zero class.
pub fn filtration_level(class: &KClass) -> Result<i64> {
    if class.is_zero() {
        return Err(Error::ZeroClass);
    }
    Ok(class
        .poly
        .terms()
        .map(|(m, _)| monomial_dimension(class.space(), m))
        .max()
        .expect("nonzero class"))
}

/// Pullback along the projection `P x Q -> P`: the ring inclusion.
pub fn pullback_projection(p: &MultiProj, q: &MultiProj, class: &KClass) -> Result<KClass> {
    if class.space() != p {
        return Err(Error::IncompatibleSpaces(format!(
            "class lives on {}, expected {}",
            class.space(),
            p
        )));
    }
    let product = p.product(q);
    let poly = class.poly.into_ring(&product.k_ring());
    Ok(KClass::from_poly(&product, poly))
}

/// Pullback along a factorwise linear embedding `P' ⊆ P`: sends `x_i` to
/// `x_i` and re-reduces with the tighter nilpotency caps.
pub fn pullback_linear(sub: &MultiProj, class: &KClass) -> Result<KClass> {
    if !sub.embeds_linearly_in(class.space()) {
        return Err(Error::IncompatibleSpaces(format!(
            "{} is not a linear subspace of {}",
            sub,
            class.space()
        )));
    }
    let poly = class.poly.into_ring(&sub.k_ring());
    Ok(KClass::from_poly(sub, poly))
}

/// Pushforward along a factorwise linear embedding `P' ⊆ P`: includes the
/// class and multiplies by the class of the stratum.
pub fn pushforward_linear(ambient: &MultiProj, class: &KClass) -> Result<KClass> {
    if !class.space().embeds_linearly_in(ambient) {
        return Err(Error::IncompatibleSpaces(format!(
            "{} is not a linear subspace of {}",
            class.space(),
            ambient
        )));
    }
    let codims: Vec<u32> = ambient
        .dims()
        .iter()
        .zip(class.space().dims())
        .map(|(&d, &dsub)| d - dsub)
        .collect();
    let included = class.poly.into_ring(&ambient.k_ring());
    let stratum = class_of_linear_stratum(ambient, &codims)?;
    Ok(KClass::from_poly(
        ambient,
        included.mul(stratum.poly())?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(dims: &[u32]) -> MultiProj {
        MultiProj::new(dims.to_vec()).unwrap()
    }

    #[test]
    fn k_ring_shapes() {
        // P^2 has rank-3 K-ring, P^0 is Z, P^1 x P^1 is Z[x1,x2]/(x1^2,x2^2)
        let p2 = p(&[2]);
        let ring = p2.k_ring();
        assert_eq!(ring.nvars(), 1);
        let x = SparsePoly::var(&ring, 0);
        assert!(x.pow(3).is_zero());
        assert!(!x.pow(2).is_zero());

        let pt = p(&[0]);
        assert!(SparsePoly::var(&pt.k_ring(), 0).is_zero());

        let p11 = p(&[1, 1]);
        let r11 = p11.k_ring();
        assert!(SparsePoly::var(&r11, 0).pow(2).is_zero());
        assert!(SparsePoly::var(&r11, 1).pow(2).is_zero());
        assert!(!SparsePoly::var(&r11, 0)
            .mul(&SparsePoly::var(&r11, 1))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn bundle_classes() {
        let p2 = p(&[2]);
        // [O(-1)] = 1 - x
        let o_minus = class_of_bundle(&p2, &LineBundleSpec::new(vec![-1])).unwrap();
        assert_eq!(o_minus.to_string(), "1 - x");
        // [O(1)] = 1 + x + x^2
        let o1 = class_of_bundle(&p2, &LineBundleSpec::new(vec![1])).unwrap();
        assert_eq!(o1.to_string(), "1 + x + x^2");
        // [O(2)] on P^1 = 1 + 2x
        let p1 = p(&[1]);
        let o2 = class_of_bundle(&p1, &LineBundleSpec::new(vec![2])).unwrap();
        assert_eq!(o2.to_string(), "1 + 2*x");
    }

    #[test]
    fn strata_classes() {
        let p2 = p(&[2]);
        assert_eq!(class_of_linear_stratum(&p2, &[1]).unwrap().to_string(), "x");
        assert_eq!(
            class_of_linear_stratum(&p2, &[2]).unwrap().to_string(),
            "x^2"
        );
        assert!(class_of_linear_stratum(&p2, &[0]).unwrap().poly().is_one());
        assert!(matches!(
            class_of_linear_stratum(&p2, &[3]),
            Err(Error::CodimOutOfRange { .. })
        ));
    }

    #[test]
    fn filtration_levels() {
        let p2 = p(&[2]);
        let x = class_of_linear_stratum(&p2, &[1]).unwrap();
        let point = class_of_linear_stratum(&p2, &[2]).unwrap();
        assert_eq!(filtration_level(&point).unwrap(), 0);
        // 2x - x^2: the curve term dominates
        let conic = x.mul_int(2).sub(&point).unwrap();
        assert_eq!(filtration_level(&conic).unwrap(), 1);
        assert_eq!(filtration_level(&KClass::one(&p2)).unwrap(), 2);
        assert!(matches!(
            filtration_level(&KClass::zero(&p2)),
            Err(Error::ZeroClass)
        ));
    }

    #[test]
    fn linear_pullback_pushforward() {
        let p2 = p(&[2]);
        let p1 = p(&[1]);
        // x^2 restricts to 0 on P^1
        let point = class_of_linear_stratum(&p2, &[2]).unwrap();
        assert!(pullback_linear(&p1, &point).unwrap().is_zero());
        // pushforward of 1 from P^1 in P^2 is the hyperplane class
        let one = KClass::one(&p1);
        assert_eq!(pushforward_linear(&p2, &one).unwrap().to_string(), "x");
    }

    #[test]
    fn projection_formula() {
        // pushforward(pullback(κ)·λ) = κ·pushforward(λ)
        let p2 = p(&[2]);
        let p1 = p(&[1]);
        let ring2 = p2.k_ring();
        let ring1 = p1.k_ring();
        let x = SparsePoly::var(&ring2, 0);
        let y = SparsePoly::var(&ring1, 0);
        for kappa in [
            KClass::one(&p2),
            KClass::from_poly(&p2, x.mul_int(&BigInt::from(2)).add(&x.pow(2)).unwrap()),
        ] {
            for lambda in [
                KClass::one(&p1),
                KClass::from_poly(&p1, y.mul_int(&BigInt::from(3))),
            ] {
                let lhs = pushforward_linear(
                    &p2,
                    &pullback_linear(&p1, &kappa).unwrap().mul(&lambda).unwrap(),
                )
                .unwrap();
                let rhs = kappa
                    .mul(&pushforward_linear(&p2, &lambda).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn multiplication_by_x_drops_filtration_level() {
        // the Chern multiplier lands one level down: x_i strictly decreases
        // the maximal stratum dimension
        let space = p(&[2, 1]);
        let ring = space.k_ring();
        let classes = [
            KClass::one(&space),
            class_of_linear_stratum(&space, &[1, 0]).unwrap(),
            KClass::from_poly(
                &space,
                SparsePoly::var(&ring, 0)
                    .mul_int(&BigInt::from(2))
                    .add(&SparsePoly::var(&ring, 1))
                    .unwrap(),
            ),
        ];
        for kappa in classes {
            let n = filtration_level(&kappa).unwrap();
            for v in 0..space.factors() {
                let xk = kappa
                    .mul(&KClass::from_poly(
                        &space,
                        SparsePoly::var(&ring, v as u32),
                    ))
                    .unwrap();
                if !xk.is_zero() {
                    assert!(filtration_level(&xk).unwrap() < n);
                }
            }
        }
    }

    #[test]
    fn projection_pullback_is_ring_inclusion() {
        let p2 = p(&[2]);
        let p1 = p(&[1]);
        let conic = {
            let x = class_of_linear_stratum(&p2, &[1]).unwrap();
            x.mul_int(2).sub(&x.mul(&x).unwrap()).unwrap()
        };
        let pulled = pullback_projection(&p2, &p1, &conic).unwrap();
        assert_eq!(pulled.space(), &p(&[2, 1]));
        assert_eq!(filtration_level(&pulled).unwrap(), 2);
    }
}
