//! Brute-force recomputation of every closed form the library trades in.
//!
//! The library computes graded partition counts by a memoized recursion,
//! multiplicities by the Freudenthal recursion, and tensor products by
//! peeling highest weights. Each test here recomputes the same quantity by
//! a route that shares no code with the implementation under test: plain
//! odometer enumeration over per-root multiplicities, and the alternating
//! Weyl-sum formulas evaluated term by term.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use semiinf::characters::{irr_character, tensor_decompose, weight_multiplicity, Character};
use semiinf::plucker::plucker_hom_character;
use semiinf::q_gradings::{chevalley_graded, delta0_shriek_fiber, q_kostant, sym_nminus_graded};
use semiinf::qpoly::QPolynomial;
use semiinf::root_datum::{RootDatum, RootVector, Weight};

fn datum(symbol: &str) -> RootDatum {
    RootDatum::from_symbol(symbol).expect("builtin symbol")
}

/// Enumerates every assignment of `0..=cap[i]` copies to root `i` by a
/// plain odometer and hands each assignment whose weighted sum equals
/// `target` to the visitor, together with its total number of parts.
fn each_combination(
    roots: &[&[i64]],
    caps: &[i64],
    target: &[i64],
    mut visit: impl FnMut(i64),
) {
    let mut counts = vec![0i64; roots.len()];
    loop {
        let mut sum = vec![0i64; target.len()];
        for (count, root) in counts.iter().zip(roots) {
            for (s, r) in sum.iter_mut().zip(*root) {
                *s += count * r;
            }
        }
        if sum == target {
            visit(counts.iter().sum());
        }
        let mut idx = 0;
        loop {
            if idx == counts.len() {
                return;
            }
            counts[idx] += 1;
            if counts[idx] <= caps[idx] {
                break;
            }
            counts[idx] = 0;
            idx += 1;
        }
    }
}

fn root_slices(datum: &RootDatum) -> Vec<&[i64]> {
    datum.positive_roots().iter().map(|r| r.coords()).collect()
}

/// Per-root copy caps: a root with coordinate `r_j > 0` fits at most
/// `target_j / r_j` times.
fn copy_caps(roots: &[&[i64]], target: &[i64]) -> Vec<i64> {
    roots
        .iter()
        .map(|root| {
            root.iter()
                .zip(target)
                .filter(|(r, _)| **r > 0)
                .map(|(r, t)| t / r)
                .min()
                .unwrap_or(0)
                .max(0)
        })
        .collect()
}

fn odometer_partition_poly(d: &RootDatum, beta: &RootVector) -> QPolynomial {
    let roots = root_slices(d);
    let caps = copy_caps(&roots, beta.coords());
    let mut out = QPolynomial::zero();
    each_combination(&roots, &caps, beta.coords(), |parts| {
        out.add_term(parts as usize, BigInt::one());
    });
    out
}

fn odometer_subset_poly(d: &RootDatum, beta: &RootVector) -> QPolynomial {
    let roots = root_slices(d);
    let caps = vec![1i64; roots.len()];
    let mut out = QPolynomial::zero();
    each_combination(&roots, &caps, beta.coords(), |parts| {
        out.add_term(parts as usize, BigInt::one());
    });
    out
}

fn odometer_partition_count(d: &RootDatum, beta: &RootVector) -> BigInt {
    if beta.coords().iter().any(|&c| c < 0) {
        return BigInt::zero();
    }
    odometer_partition_poly(d, beta).eval_at_one()
}

#[test]
fn graded_partition_recursion_matches_odometer_enumeration() {
    for (symbol, bound) in [("A1", 6), ("A2", 6), ("B2", 6), ("C2", 6), ("G2", 4)] {
        let d = datum(symbol);
        for beta in d.pos_cone_up_to_height(bound) {
            assert_eq!(
                q_kostant(&d, &beta),
                odometer_partition_poly(&d, &beta),
                "{symbol} {beta:?}"
            );
        }
    }
}

#[test]
fn multiset_enumeration_route_matches_odometer_enumeration() {
    for (symbol, bound) in [("A2", 5), ("C2", 5), ("G2", 4)] {
        let d = datum(symbol);
        for beta in d.pos_cone_up_to_height(bound) {
            let mu = d.root_to_weight(&beta).neg();
            assert_eq!(
                sym_nminus_graded(&d, &mu).unwrap(),
                odometer_partition_poly(&d, &beta),
                "{symbol} {beta:?}"
            );
        }
    }
}

#[test]
fn exterior_recursion_matches_odometer_enumeration() {
    for (symbol, bound) in [("A2", 6), ("B2", 6), ("C2", 6), ("G2", 5)] {
        let d = datum(symbol);
        for beta in d.pos_cone_up_to_height(bound) {
            let mu = d.root_to_weight(&beta).neg();
            assert_eq!(
                chevalley_graded(&d, &mu).unwrap(),
                odometer_subset_poly(&d, &beta),
                "{symbol} {beta:?}"
            );
        }
    }
}

#[test]
fn filtration_polynomial_matches_paired_odometer_enumeration() {
    // One odometer state per root: a multiset count plus a subset flag.
    // Each state whose combined sum hits -mu contributes
    // q^(parts + flags), which is exactly the convolution the library
    // computes splitting by splitting.
    for (symbol, bound) in [("A1", 5), ("A2", 4), ("C2", 4)] {
        let d = datum(symbol);
        for beta in d.pos_cone_up_to_height(bound) {
            let mu = d.root_to_weight(&beta).neg();
            let roots = root_slices(&d);
            let doubled: Vec<Vec<i64>> = roots
                .iter()
                .flat_map(|r| [r.to_vec(), r.to_vec()])
                .collect();
            let doubled_refs: Vec<&[i64]> = doubled.iter().map(|r| r.as_slice()).collect();
            let mut caps = Vec::new();
            for cap in copy_caps(&roots, beta.coords()) {
                caps.push(cap);
                caps.push(1.min(cap));
            }
            let mut expected = QPolynomial::zero();
            each_combination(&doubled_refs, &caps, beta.coords(), |parts| {
                expected.add_term(parts as usize, BigInt::one());
            });
            assert_eq!(
                delta0_shriek_fiber(&d, &mu).unwrap(),
                expected,
                "{symbol} {beta:?}"
            );
        }
    }
}

/// The alternating Weyl sum of raw partition counts at
/// `w(lam + rho) - (nu + rho)`, every term enumerated by odometer.
fn alternating_multiplicity(d: &RootDatum, lam: &Weight, nu: &Weight) -> BigInt {
    let rho = d.rho();
    let lam_rho = lam.add(&rho);
    let nu_rho = nu.add(&rho);
    let mut total = BigInt::zero();
    for w in d.weyl_group().unwrap().elements() {
        let arg = w.apply(&lam_rho).sub(&nu_rho);
        let Some(beta) = d.weight_to_root(&arg) else {
            continue;
        };
        total += odometer_partition_count(d, &beta) * w.sign();
    }
    total
}

#[test]
fn freudenthal_multiplicities_match_the_alternating_formula() {
    for (symbol, pairing_bound) in [("A1", 12), ("A2", 10), ("C2", 8)] {
        let d = datum(symbol);
        let rank = d.rank();
        let mut highs: Vec<Vec<i64>> = vec![vec![]];
        for _ in 0..rank {
            highs = highs
                .iter()
                .flat_map(|h| {
                    (0..=pairing_bound).map(move |c| {
                        let mut h = h.clone();
                        h.push(c);
                        h
                    })
                })
                .collect();
        }
        for coords in highs {
            let lam = Weight::new(coords);
            if d.pairing_2rho(&lam) > pairing_bound {
                continue;
            }
            let depth = d.pairing_2rho(&lam);
            for beta in d.pos_cone_up_to_height(depth) {
                let nu = lam.sub(&d.root_to_weight(&beta));
                let expected = alternating_multiplicity(&d, &lam, &nu);
                let got = BigInt::from(weight_multiplicity(&d, &lam, &nu).unwrap());
                assert_eq!(got, expected, "{symbol} lam {lam:?} nu {nu:?}");
            }
        }
    }
}

/// Extracts `[M : V(nu)]` from a bare weight-multiplicity map by the
/// alternating dot-orbit sum, without decomposing `M`.
fn extract_irreducible(d: &RootDatum, m: &Character, nu: &Weight) -> BigInt {
    let rho = d.rho();
    let nu_rho = nu.add(&rho);
    let mut total = BigInt::zero();
    for w in d.weyl_group().unwrap().elements() {
        let probe = w.apply(&nu_rho).sub(&rho);
        total += BigInt::from(m.multiplicity(&probe)) * w.sign();
    }
    total
}

/// Convolves two characters entry by entry, independently of
/// `Character::product`.
fn convolve(a: &Character, b: &Character) -> Character {
    let mut out = Character::new();
    for (wa, ma) in a.entries() {
        for (wb, mb) in b.entries() {
            out.add(wa.add(wb), ma * mb);
        }
    }
    out
}

#[test]
fn tensor_decomposition_matches_alternating_extraction() {
    let instances = [
        ("A1", vec![3], vec![2]),
        ("A1", vec![4], vec![4]),
        ("A2", vec![1, 1], vec![1, 1]),
        ("A2", vec![2, 1], vec![1, 0]),
        ("A2", vec![2, 0], vec![0, 2]),
        ("B2", vec![1, 1], vec![0, 1]),
        ("C2", vec![1, 1], vec![1, 0]),
        ("C2", vec![2, 0], vec![0, 1]),
        ("G2", vec![1, 0], vec![1, 0]),
    ];
    for (symbol, a, b) in instances {
        let d = datum(symbol);
        let (a, b) = (Weight::new(a), Weight::new(b));
        let product = convolve(
            &irr_character(&d, &a).unwrap(),
            &irr_character(&d, &b).unwrap(),
        );
        let decomposition = tensor_decompose(&d, &a, &b).unwrap();
        let mut accounted = BigUint::zero();
        for (nu, mult) in decomposition.entries() {
            assert_eq!(
                BigInt::from(mult.clone()),
                extract_irreducible(&d, &product, nu),
                "{symbol} {a:?} (x) {b:?} at {nu:?}"
            );
            accounted += mult * irr_character(&d, nu).unwrap().dimension();
        }
        // Nothing hides outside the support of the decomposition: the
        // extracted multiplicity of the full product is exhausted.
        assert_eq!(accounted, product.dimension(), "{symbol} {a:?} (x) {b:?}");
        // Spot-check a few dominant weights absent from the decomposition.
        for (w, _) in product.entries() {
            if d.is_dominant(w) && decomposition.multiplicity(w).is_zero() {
                assert!(
                    extract_irreducible(&d, &product, w).is_zero(),
                    "{symbol}: missed summand at {w:?}"
                );
            }
        }
    }
}

#[test]
fn hom_characters_match_direct_expansion() {
    // Rebuild the Hom character from the raw product character: for each
    // dominant nu appearing, extract [V(mu) (x) V(lam) : V(nu)] by the
    // alternating sum and place it in degree lam - nu.
    let instances = [
        ("A1", vec![1], vec![2]),
        ("A1", vec![2], vec![3]),
        ("A2", vec![1, 0], vec![1, 1]),
        ("A2", vec![1, 1], vec![2, 2]),
        ("C2", vec![0, 1], vec![2, 1]),
    ];
    for (symbol, mu, lam) in instances {
        let d = datum(symbol);
        let (mu, lam) = (Weight::new(mu), Weight::new(lam));
        let product = convolve(
            &irr_character(&d, &mu).unwrap(),
            &irr_character(&d, &lam).unwrap(),
        );
        let mut expected = Character::new();
        for (nu, _) in product.entries() {
            if !d.is_dominant(nu) {
                continue;
            }
            let mult = extract_irreducible(&d, &product, nu);
            let mult = BigUint::try_from(mult).expect("multiplicities are nonnegative");
            if !mult.is_zero() {
                expected.add(lam.sub(nu), mult);
            }
        }
        assert_eq!(
            plucker_hom_character(&d, &mu, &lam).unwrap(),
            expected,
            "{symbol} {mu:?} into twist {lam:?}"
        );
    }
}
