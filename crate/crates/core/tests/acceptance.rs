//! Acceptance suite: one test per criterion. Every check is an exact
//! (tolerance-zero) equality; each test prints a PASS line with its runtime
//! and enforces its runtime budget.
//!
//! Run with `cargo test -p okc-core --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use okc_core::algebra::{Monomial, SparsePoly};
use okc_core::comparison::{
    theta_plus, theta_times, verify_fundamental_triangle, CompleteIntersection,
};
use okc_core::divisor::{sample_config, verify_divclass, verify_recursion};
use okc_core::fgl::{support_decompose, FormalGroupLaw, TruncSeries};
use okc_core::lazard::{classifying_map, generators, lazard_truncation, universal_fgl};
use okc_core::proj::{
    chern_operator, connective_group, BMClass, ChowClass, ConnectiveClass, KClass,
    LineBundleSpec, MultiProj,
};

fn finish(name: &str, t0: Instant, budget_secs: u64) {
    let elapsed = t0.elapsed();
    println!("criterion {name}: PASS ({elapsed:.2?})");
    assert!(
        elapsed <= Duration::from_secs(budget_secs),
        "criterion {name} exceeded its {budget_secs}s budget: {elapsed:?}"
    );
}

/// Partition numbers by the Euler pentagonal recurrence (independent of the
/// Smith-normal-form pipeline under test).
fn partition_numbers(up_to: usize) -> Vec<usize> {
    let mut p = vec![0i64; up_to + 1];
    p[0] = 1;
    for n in 1..=up_to {
        let mut sum = 0i64;
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g1 > n && g2 > n {
                break;
            }
            let sign = if k % 2 == 0 { -1 } else { 1 };
            if g1 <= n {
                sum += sign * p[n - g1];
            }
            if g2 <= n {
                sum += sign * p[n - g2];
            }
            k += 1;
        }
        p[n] = sum;
    }
    p.into_iter().map(|x| x as usize).collect()
}

#[test]
fn criterion_1_lazard_ranks() {
    let t0 = Instant::now();
    let l = lazard_truncation(6).expect("valid truncation");
    assert_eq!(l.ranks(), vec![1, 1, 2, 3, 5, 7, 11]);
    assert_eq!(l.ranks(), partition_numbers(6));
    for d in l.degrees() {
        assert!(d.torsion.is_empty(), "torsion in degree {}", d.degree);
        assert_eq!(d.basis.len(), d.rank);
    }
    finish("1 (Lazard ranks 0..-6 = 1,1,2,3,5,7,11, no torsion)", t0, 60);
}

#[test]
fn criterion_2_multiplicative_law_derivation() {
    let t0 = Instant::now();
    let l = lazard_truncation(4).expect("valid truncation");
    let mult = FormalGroupLaw::multiplicative(4).expect("valid law");
    let phi = classifying_map(&mult, &l).expect("the multiplicative law is associative");

    // a11 -> -β, everything else -> 0
    let beta = SparsePoly::var(mult.ring(), 0);
    assert_eq!(*phi.image(0), beta.neg());
    for v in 1..generators(4).len() {
        assert!(phi.image(v as u32).is_zero());
    }

    // pushing the universal law forward reproduces u + v - βuv exactly
    let univ = universal_fgl(4).expect("valid truncation");
    let image_law = phi.apply_to_law(&univ, 4).expect("map applies");
    assert_eq!(image_law, mult);
    let u = TruncSeries::var(mult.ring(), 2, 4, 0);
    let v = TruncSeries::var(mult.ring(), 2, 4, 1);
    assert_eq!(
        image_law.formal_sum(&u, &v).unwrap().to_string(),
        "u1 + u2 - β*u1*u2"
    );
    assert!(mult.verify_associativity().is_pass());
    finish("2 (universal law + classifying map = u+v-βuv, associative)", t0, 1);
}

#[test]
fn criterion_3_divisor_class_suite() {
    let t0 = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let trials = 200;
    for trial in 0..trials {
        let config = sample_config(&mut rng);
        let result = verify_divclass(&config).expect("evaluation succeeds");
        assert!(
            result.verified,
            "divisor-class identity fails on trial {trial}: {config:?}"
        );
        let recursion = verify_recursion(&config).expect("evaluation succeeds");
        assert!(
            recursion.verified,
            "recursion fails on trial {trial}: {config:?}"
        );
    }
    finish("3 (200 seeded SNC configs: divisor class + recursion exact)", t0, 120);
}

#[test]
fn criterion_4_fundamental_class_triangle() {
    let t0 = Instant::now();

    // ambient spaces up to symmetry: 1 <= s <= 3 factors of positive
    // dimension, total dimension <= 6
    let mut ambients: Vec<Vec<u32>> = Vec::new();
    for d1 in 1..=6u32 {
        ambients.push(vec![d1]);
    }
    for d1 in 1..=5u32 {
        for d2 in d1..=6 - d1 {
            ambients.push(vec![d1, d2]);
        }
    }
    for d1 in 1..=4u32 {
        for d2 in d1..=5 {
            for d3 in d2..=6 {
                if d1 + d2 + d3 <= 6 {
                    ambients.push(vec![d1, d2, d3]);
                }
            }
        }
    }

    let mut cases = 0u64;
    const API_STRIDE: u64 = 101;

    for dims in &ambients {
        let ambient = MultiProj::new(dims.clone()).unwrap();
        let d = ambient.total_dim();
        let s = ambient.factors();
        let k_ring = ambient.k_ring();
        let chow_ring = ambient.chow_ring();

        // all nonzero multidegrees with entries <= 3
        let mut options: Vec<Vec<u32>> = Vec::new();
        let mut stack = vec![0u32; s];
        loop {
            if stack.iter().any(|&x| x > 0) {
                options.push(stack.clone());
            }
            let mut i = 0;
            loop {
                if i == s {
                    break;
                }
                if stack[i] < 3 {
                    stack[i] += 1;
                    break;
                }
                stack[i] = 0;
                i += 1;
            }
            if i == s {
                break;
            }
        }

        // cached hypersurface classes: K factor and Chow linear form
        let k_factors: Vec<SparsePoly> = options
            .iter()
            .map(|b| {
                let x = CompleteIntersection::new(ambient.clone(), vec![b.clone()]).unwrap();
                x.k_class().poly().clone()
            })
            .collect();
        let chow_factors: Vec<SparsePoly> = options
            .iter()
            .map(|b| {
                let mut linear = SparsePoly::zero(&chow_ring);
                for (i, &bi) in b.iter().enumerate() {
                    linear = linear
                        .add(&SparsePoly::var(&chow_ring, i as u32).mul_int(&BigInt::from(bi)))
                        .unwrap();
                }
                linear
            })
            .collect();

        let mut check = |indices: &[usize], k_prod: &SparsePoly, chow_prod: &SparsePoly| {
            let c = indices.len() as i64;
            let level = d - c;
            let value = KClass::from_poly(&ambient, k_prod.clone());
            let ck = ConnectiveClass::new(level, value).expect("CI class lies in its level");
            // θ₊ against the Bezout oracle, θ_× against β^dim [O_X]
            assert_eq!(
                theta_plus(&ck),
                ChowClass::from_poly(&ambient, chow_prod.clone()),
                "θ₊ mismatch for degrees {indices:?} on {ambient}"
            );
            assert_eq!(theta_times(&ck), BMClass::from_k(level, ck.value()));
            cases += 1;
            if cases.is_multiple_of(API_STRIDE) {
                // cross-check the uncached API path end to end
                let degrees = indices.iter().map(|&i| options[i].clone()).collect();
                let x = CompleteIntersection::new(ambient.clone(), degrees).unwrap();
                let report = verify_fundamental_triangle(&x);
                assert!(report.verified);
                assert_eq!(report.triple.ck, ck);
            }
        };

        let one_k = SparsePoly::one(&k_ring);
        let one_chow = SparsePoly::one(&chow_ring);
        check(&[], &one_k, &one_chow);
        for i in 0..options.len() {
            check(&[i], &k_factors[i], &chow_factors[i]);
            if d < 2 {
                continue;
            }
            for j in i..options.len() {
                let kij = k_factors[i].mul(&k_factors[j]).unwrap();
                let cij = chow_factors[i].mul(&chow_factors[j]).unwrap();
                check(&[i, j], &kij, &cij);
                if d < 3 {
                    continue;
                }
                for l in j..options.len() {
                    let kijl = kij.mul(&k_factors[l]).unwrap();
                    let cijl = cij.mul(&chow_factors[l]).unwrap();
                    check(&[i, j, l], &kijl, &cijl);
                }
            }
        }
    }

    assert!(cases >= 500, "only {cases} cases enumerated");
    finish(
        &format!("4 (fundamental-class triangle on {cases} complete intersections)"),
        t0,
        60,
    );
}

fn random_space(rng: &mut ChaCha8Rng) -> MultiProj {
    let s = rng.random_range(1..=3usize);
    MultiProj::new((0..s).map(|_| rng.random_range(0..=4u32)).collect()).unwrap()
}

fn random_bm(rng: &mut ChaCha8Rng, space: &MultiProj) -> BMClass {
    let ring = space.k_ring();
    let mut out = BMClass::zero(space);
    for _ in 0..rng.random_range(1..=3usize) {
        let exp = rng.random_range(-1..=space.total_dim() + 1);
        let terms: Vec<(Monomial, BigInt)> = (0..rng.random_range(1..=4usize))
            .map(|_| {
                let m = Monomial::from_pairs(space.dims().iter().enumerate().map(|(i, &d)| {
                    (i as u32, rng.random_range(0..=d as i32))
                }));
                (m, BigInt::from(rng.random_range(-3..=3i64)))
            })
            .collect();
        let poly = SparsePoly::from_terms(&ring, terms);
        out = out
            .add(&BMClass::from_k(exp, &KClass::from_poly(space, poly)))
            .unwrap();
    }
    out
}

fn random_bundle(rng: &mut ChaCha8Rng, space: &MultiProj) -> LineBundleSpec {
    LineBundleSpec::new(
        (0..space.factors())
            .map(|_| rng.random_range(-2..=2i64))
            .collect(),
    )
}

#[test]
fn criterion_5_operator_fgl() {
    let t0 = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for case in 0..1000 {
        let space = random_space(&mut rng);
        let alpha = random_bm(&mut rng, &space);
        let l = random_bundle(&mut rng, &space);
        let m = random_bundle(&mut rng, &space);

        // c̃₁(L⊗L') = c̃₁(L) + c̃₁(L') - β·c̃₁(L)∘c̃₁(L')
        let lhs = chern_operator(&space, &l.tensor(&m), &alpha).unwrap();
        let cl = chern_operator(&space, &l, &alpha).unwrap();
        let cm = chern_operator(&space, &m, &alpha).unwrap();
        let cross = chern_operator(&space, &l, &cm).unwrap().mul_beta(1);
        let rhs = cl.add(&cm).unwrap().sub(&cross).unwrap();
        assert_eq!(lhs, rhs, "operator FGL fails on case {case}");

        // operators commute
        let lm = chern_operator(&space, &m, &cl).unwrap();
        let ml = chern_operator(&space, &l, &cm).unwrap();
        assert_eq!(lm, ml, "operators fail to commute on case {case}");

        // (c̃₁)^{d+1} = 0
        let mut power = alpha;
        for _ in 0..=space.total_dim() {
            power = chern_operator(&space, &l, &power).unwrap();
        }
        assert!(power.is_zero(), "operator not nilpotent on case {case}");
    }
    finish("5 (operator FGL, commutation, nilpotency on 1000 cases)", t0, 30);
}

#[test]
fn criterion_6_connective_filtration() {
    let t0 = Instant::now();
    let mut spaces: Vec<Vec<u32>> = Vec::new();
    for d1 in 0..=4u32 {
        spaces.push(vec![d1]);
        for d2 in 0..=4u32 {
            spaces.push(vec![d1, d2]);
            for d3 in 0..=4u32 {
                spaces.push(vec![d1, d2, d3]);
            }
        }
    }
    for dims in spaces {
        let space = MultiProj::new(dims).unwrap();
        let d = space.total_dim();
        let full_rank: usize = space.dims().iter().map(|&di| di as usize + 1).product();

        // F_n = 0 for n < 0
        assert!(connective_group(&space, -1).is_empty());
        assert!(connective_group(&space, -5).is_empty());

        let mut previous = 0usize;
        for n in 0..=d + 2 {
            let basis = connective_group(&space, n);
            // F_n grows and stabilizes at the full ring from n = d on
            assert!(basis.len() >= previous);
            previous = basis.len();
            if n >= d {
                assert_eq!(basis.len(), full_rank);
                assert_eq!(basis, connective_group(&space, d));
            }
            // β-inclusion is injective: nonzero classes stay nonzero with
            // the same value
            if let Some(m) = basis.first() {
                let value = KClass::from_poly(
                    &space,
                    SparsePoly::term(&space.k_ring(), m.clone(), 1),
                );
                let c = ConnectiveClass::new(n, value.clone()).unwrap();
                let up = c.beta_inclusion();
                assert_eq!(up.level(), n + 1);
                assert_eq!(up.value(), &value);
                assert!(!up.is_zero());
            }
        }
        // F_0 is spanned by the single point monomial
        assert_eq!(connective_group(&space, 0).len(), 1);
    }

    // the point has rank 1 exactly in levels n >= 0
    let point = MultiProj::new(vec![0]).unwrap();
    for n in -3..=3i64 {
        let rank = connective_group(&point, n).len();
        assert_eq!(rank == 1, n >= 0);
        assert!(rank <= 1);
    }
    finish("6 (connective filtration structure, exhaustive dims <= (4,4,4))", t0, 10);
}

fn random_series(rng: &mut ChaCha8Rng, law: &FormalGroupLaw, nvars: usize) -> TruncSeries {
    let ring = law.ring();
    let trunc = law.trunc();
    let terms: Vec<(Monomial, SparsePoly)> = (0..rng.random_range(0..=4usize))
        .map(|_| {
            let var = rng.random_range(0..nvars) as u32;
            let deg = rng.random_range(1..=trunc.min(3)) as i32;
            let beta_pow = if ring.nvars() > 0 {
                rng.random_range(0..=2)
            } else {
                0
            };
            let coeff = SparsePoly::term(
                ring,
                Monomial::from_pairs([(0, beta_pow)]),
                rng.random_range(-3..=3i64),
            );
            (Monomial::from_pairs([(var, deg)]), coeff)
        })
        .collect();
    TruncSeries::from_terms(ring, nvars, trunc, terms)
}

/// Oracle for the multiplicative law: `β·[n]u = 1 - (1-βu)^n` by the
/// generalized binomial series.
fn mult_closed_form_beta_times(law: &FormalGroupLaw, n: i64) -> TruncSeries {
    let ring = law.ring();
    let trunc = law.trunc();
    let mut terms = Vec::new();
    let mut binom = BigInt::from(1);
    for k in 1..=trunc as i64 {
        binom = binom * BigInt::from(n - (k - 1)) / BigInt::from(k);
        let sign = if k % 2 == 0 { -1 } else { 1 };
        let coeff = SparsePoly::term(ring, Monomial::from_pairs([(0, k as i32)]), 1)
            .mul_int(&(&binom * BigInt::from(sign)));
        terms.push((Monomial::from_pairs([(0, k as i32)]), coeff));
    }
    TruncSeries::from_terms(ring, 1, trunc, terms)
}

#[test]
fn criterion_7_fgl_engine_properties() {
    let t0 = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let law = FormalGroupLaw::multiplicative(5).unwrap();

    // unit and commutativity on random series
    for _ in 0..200 {
        let s = random_series(&mut rng, &law, 2);
        let t = random_series(&mut rng, &law, 2);
        let zero = TruncSeries::zero(law.ring(), 2, law.trunc());
        assert_eq!(law.formal_sum(&s, &zero).unwrap(), s);
        assert_eq!(
            law.formal_sum(&s, &t).unwrap(),
            law.formal_sum(&t, &s).unwrap()
        );
    }

    // n-series homomorphism and the multiplicative closed form
    for m in -3..=3i64 {
        for n in -3..=3i64 {
            assert_eq!(
                law.n_series(m + n),
                law.formal_sum(&law.n_series(m), &law.n_series(n)).unwrap()
            );
        }
    }
    let beta = SparsePoly::var(law.ring(), 0);
    for n in -3..=5i64 {
        assert_eq!(
            law.n_series(n).mul_scalar(&beta),
            mult_closed_form_beta_times(&law, n)
        );
    }

    // support decomposition reconstructs multi-sums exactly, with the
    // single-index parts carrying the multiplicities as constant terms
    for _ in 0..100 {
        let r = rng.random_range(1..=3usize);
        let ns: Vec<i64> = (0..r)
            .map(|_| loop {
                let n = rng.random_range(-2..=3i64);
                if n != 0 {
                    break n;
                }
            })
            .collect();
        let s = law.multi_sum(&ns).unwrap();
        let d = support_decompose(&s).unwrap();
        assert_eq!(d.reconstruct(), s);
        for (support, g) in d.parts() {
            for (mono, _) in g.terms() {
                assert!(mono.support().all(|v| support.contains(&v)));
            }
            if support.len() == 1 {
                let j = support[0] as usize;
                assert_eq!(
                    g.constant_term(),
                    SparsePoly::constant(law.ring(), ns[j])
                );
            }
        }
    }
    finish("7 (FGL engine: unit, commutativity, [m+n], closed form, G_I)", t0, 10);
}
