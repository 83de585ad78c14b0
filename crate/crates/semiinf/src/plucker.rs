//! Character-level checks of the Plücker picture: the multi-graded
//! coordinate ring of the affine closure of the basic affine space, the
//! Hom-space colimit that recovers dual characters, and the convolution
//! bookkeeping for tensoring with a fixed representation.
//!
//! The coordinate ring in question is graded by dominant weights, one
//! irreducible summand each, placed in torus degree minus its highest
//! weight. Mapping a fixed irreducible into the summands twisted by a
//! growing dominant weight `lam` produces a chain of Hom characters, and
//! far enough along the chain the character freezes at the character of
//! the dual representation. The stabilization engine of
//! [`fibers`](crate::fibers) detects that plateau; the a-priori
//! sufficiency bound (`lam + kappa` dominant for every weight `kappa` of
//! the mapped representation) is recorded next to the observed threshold,
//! which may be smaller.

use num_bigint::BigUint;

use crate::characters::{
    irr_character, stable_tensor_check, tensor_decompose, Character, TensorCheck,
};
use crate::fibers::{stabilize, ChainPoint, ChainValue, LambdaChain, StabilizationReport};
use crate::root_datum::{RootDatum, Weight};
use crate::Result;

/// A torus character of a Hom space: finitely many weights with
/// nonnegative multiplicities. Structurally a [`Character`]; the alias
/// marks the places where the container is not Weyl-invariant.
pub type HomCharacter = Character;

/// One graded summand of the coordinate ring: the irreducible with
/// highest weight `lam`, in torus degree `t_twist = -lam`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedSummand {
    pub lam: Weight,
    pub g_character: Character,
    pub t_twist: Weight,
}

/// The summands whose highest weight has coordinate sum at most
/// `height_bound`, ordered by (coordinate sum, descending lexicographic
/// coordinates). The ring itself is infinite; callers only ever need an
/// initial segment.
pub fn gn_bar_summands(datum: &RootDatum, height_bound: i64) -> Result<Vec<BigradedSummand>> {
    let mut highest: Vec<Vec<i64>> = Vec::new();
    let mut current = vec![0i64; datum.rank()];
    enumerate_bounded(height_bound.max(-1), &mut current, 0, &mut highest);
    highest.sort_by(|a, b| {
        let (sa, sb) = (a.iter().sum::<i64>(), b.iter().sum::<i64>());
        sa.cmp(&sb).then_with(|| b.cmp(a))
    });
    highest
        .into_iter()
        .map(|coords| {
            let lam = Weight::new(coords);
            let g_character = (*irr_character(datum, &lam)?).clone();
            Ok(BigradedSummand {
                t_twist: lam.neg(),
                lam,
                g_character,
            })
        })
        .collect()
}

fn enumerate_bounded(budget: i64, current: &mut Vec<i64>, idx: usize, out: &mut Vec<Vec<i64>>) {
    if budget < 0 {
        return;
    }
    if idx == current.len() {
        out.push(current.clone());
        return;
    }
    for v in 0..=budget {
        current[idx] = v;
        enumerate_bounded(budget - v, current, idx + 1, out);
    }
    current[idx] = 0;
}

/// Torus character of the maps from the irreducible with highest weight
/// `mu` into the coordinate ring twisted by `lam`: the summand at `nu`
/// contributes the tensor multiplicity `[V(mu) (x) V(lam) : V(nu)]` in
/// degree `lam - nu`.
pub fn plucker_hom_character(
    datum: &RootDatum,
    mu: &Weight,
    lam: &Weight,
) -> Result<HomCharacter> {
    let decomposition = tensor_decompose(datum, mu, lam)?;
    let mut out = Character::new();
    for (nu, mult) in decomposition.entries() {
        out.add(lam.sub(nu), mult.clone());
    }
    Ok(out)
}

/// Outcome of [`verify_as_colim`]: the stabilization run, the closed-form
/// target (character of the dual irreducible), the a-priori sufficiency
/// bound, and whether the stable value hit the target.
///
/// The observed threshold may sit strictly below `apriori_threshold`; that
/// is a finding, not a failure: the bound is sufficient, not necessary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColimCheck {
    pub report: StabilizationReport<HomCharacter>,
    pub target: Character,
    pub apriori_threshold: Option<usize>,
    pub matches: bool,
}

/// Runs the Hom characters of `mu` along the chain and checks that they
/// stabilize to the character of the dual irreducible (highest weight
/// `-w0(mu)`, equivalently the `mu`-character with weights negated).
pub fn verify_as_colim(datum: &RootDatum, mu: &Weight, chain: &LambdaChain) -> Result<ColimCheck> {
    let dual = datum.dual_dominant(mu)?;
    let target = (*irr_character(datum, &dual)?).clone();
    let mu_char = irr_character(datum, mu)?;
    // Smallest k with lam_k + kappa dominant for every weight kappa of
    // V(mu): per coordinate, k steps of the generator must cover the most
    // negative coordinate appearing among the weights.
    let mut needed = 0usize;
    for (kappa, _) in mu_char.entries() {
        for (&c, &g) in kappa.coords().iter().zip(chain.generator().coords()) {
            if c < 0 {
                needed = needed.max((-c + g - 1) as usize / g as usize);
            }
        }
    }
    let apriori_threshold = (needed <= chain.k_max()).then_some(needed);
    let mut history = Vec::with_capacity(chain.k_max() + 1);
    for k in 0..=chain.k_max() {
        let lam = chain.point(k);
        let value = ChainValue::Value(plucker_hom_character(datum, mu, &lam)?);
        history.push(ChainPoint { k, lam, value });
    }
    let report = stabilize(mu.clone(), history, apriori_threshold)?;
    let matches = report.stable_value.as_ref() == Some(&target);
    Ok(ColimCheck {
        report,
        target,
        apriori_threshold,
        matches,
    })
}

/// Per-summand bookkeeping for tensoring the `lam`-indexed object with a
/// fixed representation: the summand reindexed to `lam + mu` must appear
/// with the multiplicity of the weight `mu`, and its cohomological shift
/// `<mu, 2 rho^vee>` must match the difference of the degrees recorded at
/// `lam + mu` and `lam`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeRow {
    pub mu: Weight,
    pub shift: i64,
    pub summand_highest: Weight,
    pub weight_multiplicity: BigUint,
    pub summand_multiplicity: BigUint,
    pub shift_additive: bool,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeCheck {
    pub tensor: TensorCheck,
    pub rows: Vec<HeckeRow>,
    pub pass: bool,
}

/// Convolution bookkeeping in the stable range: requires the deep tensor
/// identity for `(lam, v_highest)` and, for each `mu` in `mu_range`,
/// compares the reindexed summand multiplicity at `lam + mu` with the
/// weight multiplicity of `mu` and records the degree shift.
pub fn hecke_structure_check(
    datum: &RootDatum,
    mu_range: &[Weight],
    v_highest: &Weight,
    lam: &Weight,
) -> Result<HeckeCheck> {
    let tensor = stable_tensor_check(datum, lam, v_highest)?;
    let v_char = irr_character(datum, v_highest)?;
    let mut rows = Vec::with_capacity(mu_range.len());
    let mut pass = tensor.pass;
    for mu in mu_range {
        datum.check_rank(mu)?;
        let shift = datum.pairing_2rho(mu);
        let summand_highest = lam.add(mu);
        let shift_additive =
            datum.pairing_2rho(&summand_highest) - datum.pairing_2rho(lam) == shift;
        let weight_multiplicity = v_char.multiplicity(mu);
        let summand_multiplicity = tensor.actual.multiplicity(&summand_highest);
        let matches = shift_additive && weight_multiplicity == summand_multiplicity;
        pass &= matches;
        rows.push(HeckeRow {
            mu: mu.clone(),
            shift,
            summand_highest,
            weight_multiplicity,
            summand_multiplicity,
            shift_additive,
            matches,
        });
    }
    Ok(HeckeCheck { tensor, rows, pass })
}
