//! Graded partition counts and q-analogs of weight multiplicities.
//!
//! The central object is the graded partition function: for an element
//! `beta` of the positive root cone, `q_kostant(beta)` counts the multisets
//! of positive roots with sum `beta`, weighted by `q^(number of parts)`.
//! Everything else in this module is assembled from it or checked against
//! it:
//!
//! * [`lusztig_q_analog`] is the alternating Weyl-group sum over shifted
//!   partition values; at `q = 1` it recovers the weight multiplicity.
//! * [`sym_gmodb_graded`] and [`sym_nminus_graded`] are the graded
//!   dimensions of the symmetric algebra on the nilpotent radical, read off
//!   two ways: through the quotient of the Lie algebra by the opposite
//!   Borel at a negated weight, and through the weights of the radical
//!   itself. They are the same polynomial; the two routes are computed by
//!   genuinely different traversals so their equality is a real check.
//! * [`chevalley_graded`] is the graded dimension of the exterior algebra
//!   on the radical (distinct roots, graded by cardinality).
//! * [`delta0_shriek_fiber`] convolves the symmetric and exterior gradings
//!   over all splittings of a weight; for a nonzero weight every term
//!   carries at least one exterior factor, so the polynomial has positive
//!   minimal exponent.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::error::Error;
use crate::qpoly::QPolynomial;
use crate::root_datum::{RootDatum, RootVector, Weight};
use crate::Result;

/// Memo keyed by `(datum fingerprint, root index, residual)`.
type RecursionMemo = OnceLock<Mutex<HashMap<(u64, usize, Vec<i64>), Arc<QPolynomial>>>>;

/// Memo for the ordered-root partition recursion.
static PARTITION_MEMO: RecursionMemo = OnceLock::new();
/// Memo for the distinct-root (exterior) recursion.
static SUBSET_MEMO: RecursionMemo = OnceLock::new();

/// Graded count of multisets of positive roots summing to `beta`:
/// each multiset with `k` parts contributes `q^k`. Zero outside the
/// positive cone; `1` at zero.
pub fn q_kostant(datum: &RootDatum, beta: &RootVector) -> QPolynomial {
    assert_eq!(beta.rank(), datum.rank(), "rank mismatch");
    if !beta.is_nonneg() {
        return QPolynomial::zero();
    }
    partition_rec(datum, 0, beta.coords().to_vec())
}

fn partition_rec(datum: &RootDatum, idx: usize, residual: Vec<i64>) -> QPolynomial {
    if residual.iter().all(|&c| c == 0) {
        return QPolynomial::one();
    }
    let roots = datum.positive_roots();
    if idx == roots.len() {
        return QPolynomial::zero();
    }
    let key = (datum.fingerprint(), idx, residual.clone());
    {
        let memo = PARTITION_MEMO
            .get_or_init(|| Mutex::new(HashMap::new()))
            .lock()
            .expect("memo poisoned");
        if let Some(p) = memo.get(&key) {
            return (**p).clone();
        }
    }
    let root = roots[idx].coords().to_vec();
    let mut total = QPolynomial::zero();
    let mut current = residual.clone();
    let mut k = 0usize;
    loop {
        total = total.add(&partition_rec(datum, idx + 1, current.clone()).shift(k));
        k += 1;
        for (c, r) in current.iter_mut().zip(&root) {
            *c -= r;
        }
        if current.iter().any(|&c| c < 0) {
            break;
        }
    }
    let arc = Arc::new(total.clone());
    PARTITION_MEMO
        .get_or_init(|| Mutex::new(HashMap::new()))
        .lock()
        .expect("memo poisoned")
        .entry(key)
        .or_insert(arc);
    total
}

/// Graded count of sets of distinct positive roots summing to `beta`:
/// each `k`-subset contributes `q^k`.
fn subset_rec(datum: &RootDatum, idx: usize, residual: Vec<i64>) -> QPolynomial {
    if residual.iter().all(|&c| c == 0) {
        return QPolynomial::one();
    }
    let roots = datum.positive_roots();
    if idx == roots.len() {
        return QPolynomial::zero();
    }
    let key = (datum.fingerprint(), idx, residual.clone());
    {
        let memo = SUBSET_MEMO
            .get_or_init(|| Mutex::new(HashMap::new()))
            .lock()
            .expect("memo poisoned");
        if let Some(p) = memo.get(&key) {
            return (**p).clone();
        }
    }
    let root = roots[idx].coords();
    let mut total = subset_rec(datum, idx + 1, residual.clone());
    let taken: Vec<i64> = residual
        .iter()
        .zip(root)
        .map(|(c, r)| c - r)
        .collect();
    if taken.iter().all(|&c| c >= 0) {
        total = total.add(&subset_rec(datum, idx + 1, taken).shift(1));
    }
    let arc = Arc::new(total.clone());
    SUBSET_MEMO
        .get_or_init(|| Mutex::new(HashMap::new()))
        .lock()
        .expect("memo poisoned")
        .entry(key)
        .or_insert(arc);
    total
}

/// Rejects `mu` outside the negative root cone; returns `-mu` in root
/// coordinates on success.
pub(crate) fn require_neg_cone(datum: &RootDatum, mu: &Weight) -> Result<RootVector> {
    datum.check_rank(mu)?;
    datum
        .weight_to_root(&mu.neg())
        .filter(RootVector::is_nonneg)
        .ok_or_else(|| Error::NotInNegCone {
            coords: mu.coords().to_vec(),
        })
}

/// Lusztig q-analog of the multiplicity of `nu` in the irreducible with
/// highest weight `lam`: the alternating Weyl sum of graded partition
/// values at `w(lam + rho) - (nu + rho)`.
///
/// For dominant `nu` the coefficients are nonnegative; a negative
/// coefficient there is fatal. For non-dominant `nu` the signed polynomial
/// is returned as-is (its value at `q = 1` is still the multiplicity).
pub fn lusztig_q_analog(datum: &RootDatum, lam: &Weight, nu: &Weight) -> Result<QPolynomial> {
    datum.check_rank(lam)?;
    datum.check_rank(nu)?;
    if !datum.is_dominant(lam) {
        return Err(Error::NotDominant {
            coords: lam.coords().to_vec(),
        });
    }
    let rho = datum.rho();
    let lam_plus_rho = lam.add(&rho);
    let nu_plus_rho = nu.add(&rho);
    let group = datum.weyl_group()?;
    let mut total = QPolynomial::zero();
    for w in group.elements() {
        let arg = w.apply(&lam_plus_rho).sub(&nu_plus_rho);
        let Some(b) = datum.weight_to_root(&arg) else {
            continue;
        };
        if !b.is_nonneg() {
            continue;
        }
        let term = q_kostant(datum, &b);
        total = if w.sign() == 1 {
            total.add(&term)
        } else {
            total.sub(&term)
        };
    }
    if datum.is_dominant(nu) && !total.is_nonnegative() {
        return Err(Error::internal(format!(
            "q-analog at dominant weight {:?} has a negative coefficient: {total}",
            nu.coords()
        )));
    }
    Ok(total)
}

/// Graded dimension at weight `-mu` of the symmetric algebra on the
/// quotient of the Lie algebra by the opposite Borel, with the generator
/// in degree one: the partition recursion evaluated at `-mu`.
pub fn sym_gmodb_graded(datum: &RootDatum, mu: &Weight) -> Result<QPolynomial> {
    let minus_mu = require_neg_cone(datum, mu)?;
    Ok(q_kostant(datum, &minus_mu))
}

/// Graded dimension at weight `mu` of the symmetric algebra on the
/// nilpotent radical of the opposite Borel, computed by direct multiset
/// enumeration over the radical's weights (the negated positive roots).
///
/// Identical to [`sym_gmodb_graded`] as a polynomial; the enumeration here
/// shares no code with the memoized recursion, which is the point.
pub fn sym_nminus_graded(datum: &RootDatum, mu: &Weight) -> Result<QPolynomial> {
    let minus_mu = require_neg_cone(datum, mu)?;
    // Count multisets of negated positive roots summing to mu, i.e.
    // multisets of positive roots summing to -mu, by depth-first search
    // over the root list in order.
    let roots: Vec<&[i64]> = datum.positive_roots().iter().map(|r| r.coords()).collect();
    let mut out = QPolynomial::zero();
    let mut target = minus_mu.coords().to_vec();
    dfs_multisets(&roots, 0, &mut target, 0, &mut out);
    Ok(out)
}

fn dfs_multisets(
    roots: &[&[i64]],
    idx: usize,
    residual: &mut Vec<i64>,
    parts: usize,
    out: &mut QPolynomial,
) {
    if residual.iter().all(|&c| c == 0) {
        out.add_term(parts, BigInt::one());
        return;
    }
    if idx == roots.len() {
        return;
    }
    // Either skip this root or take one more copy and stay at the same
    // index; copies of a root are interchangeable, so this enumerates each
    // multiset exactly once.
    dfs_multisets(roots, idx + 1, residual, parts, out);
    let fits = residual.iter().zip(roots[idx]).all(|(c, r)| c >= r);
    if fits {
        for (c, r) in residual.iter_mut().zip(roots[idx]) {
            *c -= r;
        }
        dfs_multisets(roots, idx, residual, parts + 1, out);
        for (c, r) in residual.iter_mut().zip(roots[idx]) {
            *c += r;
        }
    }
}

/// Graded dimension at weight `mu` of the exterior algebra on the
/// nilpotent radical: sets of distinct positive roots summing to `-mu`,
/// graded by cardinality.
pub fn chevalley_graded(datum: &RootDatum, mu: &Weight) -> Result<QPolynomial> {
    let minus_mu = require_neg_cone(datum, mu)?;
    Ok(subset_rec(datum, 0, minus_mu.coords().to_vec()))
}

/// Ungraded partition count: the number of ways to write `-mu` as a sum of
/// positive roots. The weight-space dimension of the coordinate ring of
/// the unipotent radical at `mu`.
pub fn o_n_weight_dim(datum: &RootDatum, mu: &Weight) -> Result<BigUint> {
    let minus_mu = require_neg_cone(datum, mu)?;
    let value = q_kostant(datum, &minus_mu).eval_at_one();
    value
        .to_biguint()
        .ok_or_else(|| Error::internal("partition count must be nonnegative"))
}

/// The filtration polynomial of the !-restriction to the zero semi-infinite
/// orbit: the sum over splittings `mu = mu1 + mu2` (both in the negative
/// cone) of the symmetric grading at `mu1` times the exterior grading at
/// `mu2`.
///
/// At `mu = 0` this is `1`; for `mu != 0` every summand has a nonempty
/// exterior factor, so the minimal exponent is at least one.
pub fn delta0_shriek_fiber(datum: &RootDatum, mu: &Weight) -> Result<QPolynomial> {
    let minus_mu = require_neg_cone(datum, mu)?;
    let mut total = QPolynomial::zero();
    for part in splittings(&minus_mu) {
        let rest = RootVector::new(
            minus_mu
                .coords()
                .iter()
                .zip(part.coords())
                .map(|(t, p)| t - p)
                .collect(),
        );
        let sym = q_kostant(datum, &part);
        let ext = subset_rec(datum, 0, rest.coords().to_vec());
        total = total.add(&sym.mul(&ext));
    }
    Ok(total)
}

/// All vectors `0 <= v <= target` coordinatewise, in lexicographic order.
fn splittings(target: &RootVector) -> Vec<RootVector> {
    let mut out = Vec::new();
    let mut current = vec![0i64; target.rank()];
    fn rec(target: &[i64], current: &mut Vec<i64>, idx: usize, out: &mut Vec<RootVector>) {
        if idx == target.len() {
            out.push(RootVector::new(current.clone()));
            return;
        }
        for v in 0..=target[idx] {
            current[idx] = v;
            rec(target, current, idx + 1, out);
        }
        current[idx] = 0;
    }
    rec(target.coords(), &mut current, 0, &mut out);
    out
}
