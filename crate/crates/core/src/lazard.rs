//! Degree-by-degree computation of the truncated universal coefficient ring
//! of commutative formal group laws, together with the universal law and
//! classifying ring maps into concrete coefficient rings.
//!
//! The ring is generated by the law coefficients `a_ij` (`i <= j`,
//! `i + j <= N + 1`) with grading `deg a_ij = 1 - i - j`. The relation ideal
//! is generated by the homogeneous coefficients of the associator
//! `F(F(u,v),w) - F(u,F(v,w))`; each graded piece is a finite integer
//! quotient computed by Smith normal form alone, and normal forms are
//! canonical coset representatives modulo a Hermite basis of the relation
//! lattice. Products truncate below degree `-N`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::algebra::{
    hermite_rows, quotient_basis, same_ring, EchelonBasis, Monomial, RingDescriptor, SparsePoly,
    VarSpec,
};
use crate::error::{Error, Result};
use crate::fgl::{FormalGroupLaw, TruncSeries};

/// Generator indices `(i, j)` with `i <= j`, `i + j <= N + 1`, ordered by
/// total weight then by `i`. The position in this list is the variable index
/// in the coefficient rings below.
pub fn generators(trunc: usize) -> Vec<(u32, u32)> {
    let mut gens = Vec::new();
    for s in 2..=(trunc as u32 + 1) {
        for i in 1..=s / 2 {
            gens.push((i, s - i));
        }
    }
    gens
}

fn generator_vars(trunc: usize) -> Vec<VarSpec> {
    generators(trunc)
        .into_iter()
        .map(|(i, j)| VarSpec::new(format!("a{i}{j}"), 1 - (i + j) as i64))
        .collect()
}

/// The free graded ring `Z[a_ij]` the universal law lives in.
pub fn free_coefficient_ring(trunc: usize) -> Arc<RingDescriptor> {
    RingDescriptor::new(generator_vars(trunc))
}

/// The universal formal group law over the free coefficient ring;
/// associativity is not yet imposed.
pub fn universal_fgl(trunc: usize) -> Result<FormalGroupLaw> {
    if trunc < 1 {
        return Err(Error::InvalidConfig(
            "truncation degree must be at least 1".into(),
        ));
    }
    let ring = free_coefficient_ring(trunc);
    let entries = generators(trunc)
        .into_iter()
        .enumerate()
        .map(|(v, (i, j))| ((i, j), SparsePoly::var(&ring, v as u32)));
    FormalGroupLaw::new(&ring, trunc, entries.collect::<Vec<_>>())
}

/// One graded piece of the truncated ring.
#[derive(Clone, Debug)]
pub struct DegreeData {
    /// Cohomological degree (`0, -1, ..., -N`).
    pub degree: i64,
    /// All monomials of this degree, in graded-lexicographic order.
    pub monomials: Vec<Monomial>,
    /// Free rank of the graded piece.
    pub rank: usize,
    /// Invariant factors greater than one.
    pub torsion: Vec<BigInt>,
    /// Representative monomials: the graded-lexicographically smallest
    /// monomials whose images are independent in the quotient.
    pub basis: Vec<Monomial>,
}

/// The universal coefficient ring truncated at degree `-N`, presented
/// degreewise as a quotient of the monomial span by the relation span.
#[derive(Clone, Debug)]
pub struct LazardRing {
    trunc: usize,
    free_ring: Arc<RingDescriptor>,
    ring: Arc<RingDescriptor>,
    degrees: Vec<DegreeData>,
    relations: Vec<(i64, SparsePoly)>,
}

/// Computes the truncated ring: for each degree `-n` with `1 <= n <= N`, the
/// quotient of the degree `-n` monomial span by the span of
/// (relation generator of degree `-m`) × (monomial of degree `-(n-m)`).
pub fn lazard_truncation(trunc: usize) -> Result<LazardRing> {
    let universal = universal_fgl(trunc)?;
    let free_ring = universal.ring().clone();

    // associator coefficients, grouped by grading degree
    let assoc = universal.verify_associativity();
    let mut relations: Vec<(i64, SparsePoly)> = Vec::new();
    for (_, coeff) in &assoc.failures {
        let ds = coeff.degrees();
        debug_assert_eq!(ds.len(), 1, "associator coefficients are homogeneous");
        relations.push((ds[0], coeff.clone()));
    }

    let weights: Vec<u32> = generators(trunc)
        .iter()
        .map(|&(i, j)| i + j - 1)
        .collect();
    let monomials_by_weight: Vec<Vec<Monomial>> = (0..=trunc)
        .map(|n| monomials_of_weight(&weights, n as u32))
        .collect();

    let mut degrees = vec![DegreeData {
        degree: 0,
        monomials: vec![Monomial::one()],
        rank: 1,
        torsion: Vec::new(),
        basis: vec![Monomial::one()],
    }];
    let mut rewrite: BTreeMap<i64, EchelonBasis> = BTreeMap::new();

    for n in 1..=trunc {
        let monomials = &monomials_by_weight[n];
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for (deg, rel) in &relations {
            let m = (-deg) as usize;
            if m > n {
                continue;
            }
            for mu in &monomials_by_weight[n - m] {
                let prod = rel.mul_monomial(mu);
                let mut row = vec![BigInt::from(0); monomials.len()];
                for (mono, c) in prod.terms() {
                    let pos = monomials
                        .binary_search(mono)
                        .expect("product stays in the enumerated degree");
                    row[pos] = c.clone();
                }
                rows.push(row);
            }
        }
        let q = quotient_basis(&rows, monomials.len());
        let basis = q
            .representatives
            .iter()
            .map(|&idx| monomials[idx].clone())
            .collect();
        let echelon = hermite_rows(rows, monomials.len());
        if !echelon.is_empty() {
            rewrite.insert(
                -(n as i64),
                EchelonBasis {
                    monomials: monomials.clone(),
                    rows: echelon,
                },
            );
        }
        degrees.push(DegreeData {
            degree: -(n as i64),
            monomials: monomials.clone(),
            rank: q.free_rank,
            torsion: q.torsion,
            basis,
        });
    }

    let raw_relations: Vec<Vec<(Monomial, BigInt)>> = relations
        .iter()
        .map(|(_, r)| r.terms().map(|(m, c)| (m.clone(), c.clone())).collect())
        .collect();
    let ring = RingDescriptor::with_rewrite(
        generator_vars(trunc),
        raw_relations,
        rewrite,
        Some(-(trunc as i64)),
    );

    Ok(LazardRing {
        trunc,
        free_ring,
        ring,
        degrees,
        relations,
    })
}

fn monomials_of_weight(weights: &[u32], target: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current: Vec<(u32, i32)> = Vec::new();
    fn rec(
        weights: &[u32],
        v: usize,
        remaining: u32,
        current: &mut Vec<(u32, i32)>,
        out: &mut Vec<Monomial>,
    ) {
        if remaining == 0 {
            out.push(Monomial::from_pairs(current.iter().copied()));
            return;
        }
        if v == weights.len() {
            return;
        }
        let w = weights[v];
        for e in 0..=remaining / w {
            if e > 0 {
                current.push((v as u32, e as i32));
            }
            rec(weights, v + 1, remaining - e * w, current, out);
            if e > 0 {
                current.pop();
            }
        }
    }
    rec(weights, 0, target, &mut current, &mut out);
    out.sort();
    out
}

impl LazardRing {
    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// The quotient ring with degreewise rewriting installed.
    pub fn ring(&self) -> &Arc<RingDescriptor> {
        &self.ring
    }

    pub fn free_ring(&self) -> &Arc<RingDescriptor> {
        &self.free_ring
    }

    /// Graded pieces for degrees `0, -1, ..., -N`.
    pub fn degrees(&self) -> &[DegreeData] {
        &self.degrees
    }

    pub fn degree_data(&self, n: usize) -> &DegreeData {
        &self.degrees[n]
    }

    /// Free ranks in degrees `0..-N`.
    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.rank).collect()
    }

    /// The homogeneous relation generators with their degrees.
    pub fn relations(&self) -> &[(i64, SparsePoly)] {
        &self.relations
    }

    /// Canonical normal form of an element (given over either the free or
    /// the quotient presentation).
    pub fn normal_form(&self, p: &SparsePoly) -> SparsePoly {
        p.into_ring(&self.ring)
    }

    /// A generator as a ring element.
    pub fn generator(&self, i: u32, j: u32) -> Option<SparsePoly> {
        let idx = generators(self.trunc)
            .iter()
            .position(|&(gi, gj)| (gi, gj) == (i.min(j), i.max(j)))?;
        Some(SparsePoly::var(&self.ring, idx as u32))
    }
}

/// A graded ring homomorphism out of the truncated universal ring, given by
/// the images of the generators. Every relation generator is checked to map
/// to zero at construction.
#[derive(Clone, Debug)]
pub struct RingMap {
    source: Arc<RingDescriptor>,
    target: Arc<RingDescriptor>,
    images: Vec<SparsePoly>,
}

impl RingMap {
    pub fn target(&self) -> &Arc<RingDescriptor> {
        &self.target
    }

    pub fn image(&self, var: u32) -> &SparsePoly {
        &self.images[var as usize]
    }

    /// Applies the map to an element in normal form over the source.
    pub fn apply(&self, x: &SparsePoly) -> Result<SparsePoly> {
        if !same_ring(x.ring(), &self.source) && x.ring().vars() != self.source.vars() {
            return Err(Error::RingMismatch);
        }
        let mut acc = SparsePoly::zero(&self.target);
        for (m, c) in x.terms() {
            let mut prod = SparsePoly::constant(&self.target, c.clone());
            for (v, e) in m.iter() {
                debug_assert!(e >= 0);
                prod = prod.mul(&self.images[v as usize].pow(e as u32))?;
            }
            acc = acc.add(&prod)?;
        }
        Ok(acc)
    }

    /// Applies the map coefficientwise to a series.
    pub fn apply_series(&self, s: &TruncSeries) -> Result<TruncSeries> {
        let mut terms = Vec::new();
        for (m, c) in s.terms() {
            terms.push((m.clone(), self.apply(c)?));
        }
        Ok(TruncSeries::from_terms(
            &self.target,
            s.nvars(),
            s.trunc(),
            terms,
        ))
    }

    /// Pushes a law over the source forward to a law over the target.
    pub fn apply_to_law(&self, f: &FormalGroupLaw, trunc: usize) -> Result<FormalGroupLaw> {
        let mut entries = Vec::new();
        for (&(i, j), c) in f.entries() {
            if (i + j) as usize <= trunc + 1 {
                entries.push(((i, j), self.apply(c)?));
            }
        }
        FormalGroupLaw::new(&self.target, trunc, entries)
    }
}

/// The classifying map of a formal group law: `a_ij` goes to the coefficient
/// of `u^i v^j` of `F`. Errors when a coefficient is not homogeneous of
/// degree `1 - i - j` in the target grading, or when some relation generator
/// does not map to zero (i.e. the target law is not associative).
pub fn classifying_map(f: &FormalGroupLaw, l: &LazardRing) -> Result<RingMap> {
    if f.trunc() < l.trunc() {
        return Err(Error::TruncationTooSmall {
            have: f.trunc(),
            need: l.trunc(),
        });
    }
    let mut images = Vec::new();
    for (i, j) in generators(l.trunc()) {
        let image = f.coeff(i, j);
        let expected = 1 - (i + j) as i64;
        if !image.is_zero() && !image.is_homogeneous_of_degree(expected) {
            return Err(Error::GradingMismatch { i, j, expected });
        }
        images.push(image);
    }
    let map = RingMap {
        source: l.ring().clone(),
        target: f.ring().clone(),
        images,
    };
    for (degree, rel) in l.relations() {
        if !map.apply(rel)?.is_zero() {
            return Err(Error::RelationNotKilled { degree: *degree });
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    /// Partition numbers by the independent Euler recurrence
    /// `p(n) = Σ_k (-1)^{k+1} (p(n - k(3k-1)/2) + p(n - k(3k+1)/2))`.
    fn partition_numbers(up_to: usize) -> Vec<i64> {
        let mut p = vec![0i64; up_to + 1];
        p[0] = 1;
        for n in 1..=up_to {
            let mut sum = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                let g2 = k * (3 * k + 1) / 2;
                if g1 as usize > n && g2 as usize > n {
                    break;
                }
                let sign = if k % 2 == 0 { -1 } else { 1 };
                if g1 as usize <= n {
                    sum += sign * p[n - g1 as usize];
                }
                if g2 as usize <= n {
                    sum += sign * p[n - g2 as usize];
                }
                k += 1;
            }
            p[n] = sum;
        }
        p
    }

    #[test]
    fn generator_enumeration() {
        assert_eq!(generators(2), vec![(1, 1), (1, 2)]);
        assert_eq!(generators(4), vec![(1, 1), (1, 2), (1, 3), (2, 2), (1, 4), (2, 3)]);
    }

    #[test]
    fn universal_law_shape() {
        // N = 2: F = u + v + a11*uv + a12*(u^2 v + u v^2)
        let f = universal_fgl(2).unwrap();
        let u = TruncSeries::var(f.ring(), 2, 2, 0);
        let v = TruncSeries::var(f.ring(), 2, 2, 1);
        let s = f.formal_sum(&u, &v).unwrap();
        assert_eq!(s.to_string(), "u1 + u2 + a11*u1*u2");
        // the full table at trunc 3 exposes the symmetric cubic terms
        let f3 = universal_fgl(3).unwrap();
        assert_eq!(f3.coeff(1, 2), f3.coeff(2, 1));
        assert_eq!(f3.coeff(1, 2), SparsePoly::var(f3.ring(), 1));
        // unit law
        let zero = TruncSeries::zero(f.ring(), 2, 2);
        assert_eq!(f.formal_sum(&u, &zero).unwrap(), u);
    }

    #[test]
    fn low_degree_ranks() {
        let l = lazard_truncation(3).unwrap();
        assert_eq!(l.ranks(), vec![1, 1, 2, 3]);
        for d in l.degrees() {
            assert!(d.torsion.is_empty(), "torsion in degree {}", d.degree);
        }
        // degree -1 is spanned by a11 with no relations
        assert_eq!(l.degree_data(1).basis, vec![Monomial::var(0)]);
    }

    #[test]
    fn ranks_match_partition_numbers() {
        let l = lazard_truncation(5).unwrap();
        let p = partition_numbers(5);
        for (n, d) in l.degrees().iter().enumerate() {
            assert_eq!(d.rank as i64, p[n], "rank mismatch in degree -{n}");
            assert!(d.torsion.is_empty());
        }
    }

    #[test]
    fn classifying_map_multiplicative() {
        let l = lazard_truncation(3).unwrap();
        let mult = FormalGroupLaw::multiplicative(3).unwrap();
        let phi = classifying_map(&mult, &l).unwrap();
        let beta = SparsePoly::var(mult.ring(), 0);
        assert_eq!(*phi.image(0), beta.neg());
        for v in 1..generators(3).len() {
            assert!(phi.image(v as u32).is_zero());
        }
        // a11 * a11 goes to beta^2
        let a11 = l.generator(1, 1).unwrap();
        let sq = a11.mul(&a11).unwrap();
        assert_eq!(phi.apply(&sq).unwrap(), beta.pow(2));
        // the universal law pushes forward to the multiplicative law
        let univ = universal_fgl(3).unwrap();
        assert_eq!(phi.apply_to_law(&univ, 3).unwrap(), mult);
        // and coefficientwise on series
        let s = univ.multi_sum(&[1, 1]).unwrap();
        assert_eq!(
            phi.apply_series(&s).unwrap(),
            mult.multi_sum(&[1, 1]).unwrap()
        );
    }

    #[test]
    fn classifying_map_additive_kills_generators() {
        let l = lazard_truncation(3).unwrap();
        let add = FormalGroupLaw::additive(3).unwrap();
        let phi = classifying_map(&add, &l).unwrap();
        let a11 = l.generator(1, 1).unwrap();
        let a12 = l.generator(1, 2).unwrap();
        assert!(phi.apply(&a11.mul(&a12).unwrap()).unwrap().is_zero());
        assert!(phi
            .apply(&SparsePoly::one(l.ring()))
            .unwrap()
            .is_one());
    }

    #[test]
    fn non_associative_law_rejected() {
        // a11 |-> β is fine gradingwise, but adding a nonzero a12 |-> 0 and
        // a13-coefficient β^2...: easier: a law with a22 only is commutative
        // and unital but not associative.
        let ring = RingDescriptor::beta_poly();
        let l = lazard_truncation(3).unwrap();
        let beta = SparsePoly::var(&ring, 0);
        let law = FormalGroupLaw::new(&ring, 3, [((2, 2), beta.pow(3))]).unwrap();
        assert!(!law.verify_associativity().is_pass());
        assert!(matches!(
            classifying_map(&law, &l),
            Err(Error::RelationNotKilled { .. })
        ));
    }

    #[test]
    fn grading_mismatch_rejected() {
        let ring = RingDescriptor::beta_poly();
        let l = lazard_truncation(2).unwrap();
        // a11 must have degree -1; the constant 1 does not
        let law = FormalGroupLaw::new(&ring, 2, [((1, 1), SparsePoly::one(&ring))]).unwrap();
        assert!(matches!(
            classifying_map(&law, &l),
            Err(Error::GradingMismatch { .. })
        ));
    }

    #[test]
    fn normal_form_idempotent_and_multiplicative() {
        let l = lazard_truncation(4).unwrap();
        let a11 = l.generator(1, 1).unwrap();
        let a12 = l.generator(1, 2).unwrap();
        let x = a11.mul(&a12).unwrap().add(&l.generator(1, 3).unwrap()).unwrap();
        let nf = l.normal_form(&x);
        assert_eq!(l.normal_form(&nf), nf);

        // the map is a ring homomorphism on normal forms
        let mult = FormalGroupLaw::multiplicative(4).unwrap();
        let phi = classifying_map(&mult, &l).unwrap();
        let y = a11.mul(&a11).unwrap();
        let prod = x.mul(&y).unwrap();
        assert_eq!(
            phi.apply(&prod).unwrap(),
            phi.apply(&x).unwrap().mul(&phi.apply(&y).unwrap()).unwrap()
        );
    }

    #[test]
    fn relations_reduce_to_zero() {
        let l = lazard_truncation(4).unwrap();
        for (_, rel) in l.relations() {
            assert!(l.normal_form(rel).is_zero());
        }
        // torsion-free in every degree means the first invariant factors are 1
        for d in l.degrees() {
            assert!(d.torsion.iter().all(|f| !f.is_one()));
        }
    }
}
