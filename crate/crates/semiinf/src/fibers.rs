//! Stalk and costalk gradings of the semi-infinite intersection cohomology
//! object, computed as limits of finite approximants.
//!
//! The object of interest lives on the closure of the open orbit of the
//! positive loop-unipotent group on the affine Grassmannian and is defined
//! as a filtered colimit of shifted spherical perverse sheaves indexed by
//! dominant weights. Its costalk (!-restriction) and stalk (*-restriction)
//! at the point of the `mu`-orbit are therefore limits of data attached to
//! a single irreducible representation at a time:
//!
//! * the costalk approximant at level `lam` is the Lusztig q-analog
//!   `m^lam_{lam+mu}(q)`, defined only when `lam + mu` is dominant;
//! * the stalk approximant is the plain weight multiplicity
//!   `dim V^lam(lam+mu)`, defined always.
//!
//! Both settle, far enough along any chain of dominant weights growing in
//! every fundamental coordinate, to closed forms: the graded and ungraded
//! partition counts of `-mu`. The engine here walks such a chain, records
//! every approximant (skipped points included), and detects the settling.
//!
//! Detection is backed by an exactness bound rather than by faith in a
//! finite window. Call `lam` deep for `mu` when every fundamental
//! coordinate of `lam` exceeds `height(-mu)`. Both approximants are
//! alternating sums of partition counts at `w(lam+rho) - (lam+mu+rho)`
//! over the Weyl group, and for `w != 1` the defect `(lam+rho) -
//! w(lam+rho)` is a nonzero sum of positive roots of height at least
//! `min_i <lam+rho, alpha_i^vee>`; past the deep point that height exceeds
//! `height(-mu)`, every non-identity term leaves the positive cone, and
//! the approximant equals its limit exactly. Three agreeing deep points
//! are still demanded when the chain provides them; when skips push the
//! first valid deep point within two steps of the end of the chain, the
//! report is marked [`StabilizationReport::truncated_window`] instead of
//! being declared unstable. A disagreement between two deep approximants
//! is not a detection failure but an arithmetic bug, and is reported as
//! [`Error::InternalInconsistency`].

use num_bigint::BigUint;
use num_traits::One;

use crate::characters::weight_multiplicity;
use crate::error::Error;
use crate::q_gradings::{delta0_shriek_fiber, o_n_weight_dim, require_neg_cone, sym_gmodb_graded};
use crate::qpoly::QPolynomial;
use crate::root_datum::{RootDatum, Weight};
use crate::Result;

/// A monotone, cofinal chain `k * generator`, `k = 0..=k_max`, in the
/// dominant cone ordered by "difference is a nonnegative sum of simple
/// roots".
///
/// Every fundamental coordinate of the generator must be positive: this
/// makes consecutive differences dominant, makes the chain cofinal (the
/// inverse Cartan matrix of an indecomposable finite type is entrywise
/// positive), and guarantees that the chain eventually gets deep for every
/// `mu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaChain {
    generator: Weight,
    k_max: usize,
}

pub const DEFAULT_CHAIN_MAX: usize = 12;

impl LambdaChain {
    pub fn new(datum: &RootDatum, generator: Weight, k_max: usize) -> Result<Self> {
        datum.check_rank(&generator)?;
        if generator.coords().iter().any(|&c| c < 1) {
            return Err(Error::BadChainGenerator {
                coords: generator.coords().to_vec(),
            });
        }
        Ok(LambdaChain { generator, k_max })
    }

    /// The all-ones generator with the default chain length.
    pub fn default_for(datum: &RootDatum) -> Self {
        LambdaChain {
            generator: Weight::new(vec![1; datum.rank()]),
            k_max: DEFAULT_CHAIN_MAX,
        }
    }

    pub fn generator(&self) -> &Weight {
        &self.generator
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    pub fn point(&self, k: usize) -> Weight {
        self.generator.scale(k as i64)
    }

    fn min_step(&self) -> i64 {
        *self.generator.coords().iter().min().expect("nonzero rank")
    }

    /// First index whose point is deep for a weight at the given height:
    /// every fundamental coordinate strictly exceeds `depth`. `None` when
    /// the chain ends before getting there.
    pub fn first_deep(&self, depth: i64) -> Option<usize> {
        let step = self.min_step();
        let k = if depth < 0 {
            0
        } else {
            (depth / step + 1) as usize
        };
        (k <= self.k_max).then_some(k)
    }
}

/// One recorded chain point: either an actual approximant or a marker for
/// a point whose approximant is undefined (`lam + mu` not dominant).
/// Skips are kept in the history so that thresholds are reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainValue<T> {
    Value(T),
    Skipped,
}

impl<T> ChainValue<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            ChainValue::Value(v) => Some(v),
            ChainValue::Skipped => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainPoint<T> {
    pub k: usize,
    pub lam: Weight,
    pub value: ChainValue<T>,
}

/// The full record of one stabilization run.
///
/// When `stable` holds, every non-skipped history entry at index at least
/// `threshold_index` equals `stable_value`; the threshold is the earliest
/// index with that property, so it may sit below the first deep point.
/// `truncated_window` marks a stable detection certified by fewer than
/// three valid chain points (see the module doc); an unstable run has
/// `stable_value = None` and simply reports the history, it is never
/// treated as a refutation of the limit identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizationReport<T> {
    pub mu: Weight,
    pub history: Vec<ChainPoint<T>>,
    pub stable_value: Option<T>,
    pub threshold_index: Option<usize>,
    pub stable: bool,
    pub truncated_window: bool,
}

impl<T> StabilizationReport<T> {
    pub fn valid_points(&self) -> impl Iterator<Item = (usize, &T)> {
        self.history
            .iter()
            .filter_map(|p| p.value.value().map(|v| (p.k, v)))
    }
}

/// Runs stabilization detection over a recorded history.
///
/// `first_deep` names the first index from which the approximants are
/// provably exact; the caller supplies it because the bound depends on
/// what is being approximated. Detection declares stability exactly when
/// some non-skipped point at or past `first_deep` exists; disagreement
/// among such points is an internal error, not instability.
pub fn stabilize<T: Clone + PartialEq>(
    mu: Weight,
    history: Vec<ChainPoint<T>>,
    first_deep: Option<usize>,
) -> Result<StabilizationReport<T>> {
    let mut stable_value = None;
    let mut threshold_index = None;
    let mut truncated_window = false;
    if let Some(deep) = first_deep {
        let deep_valid: Vec<(usize, &T)> = history
            .iter()
            .filter(|p| p.k >= deep)
            .filter_map(|p| p.value.value().map(|v| (p.k, v)))
            .collect();
        if let Some(&(k_star, v_star)) = deep_valid.first() {
            for &(k, v) in &deep_valid[1..] {
                if v != v_star {
                    return Err(Error::internal(format!(
                        "deep chain points disagree: k = {k_star} vs k = {k}"
                    )));
                }
            }
            truncated_window = deep_valid.len() < 3;
            let mut threshold = k_star;
            for p in history.iter().rev().filter(|p| p.k < k_star) {
                match p.value.value() {
                    Some(v) if v == v_star => threshold = p.k,
                    Some(_) => break,
                    None => continue,
                }
            }
            stable_value = Some(v_star.clone());
            threshold_index = Some(threshold);
        }
    }
    Ok(StabilizationReport {
        mu,
        history,
        stable: stable_value.is_some(),
        stable_value,
        threshold_index,
        truncated_window,
    })
}

/// Costalk approximant at level `lam`: the Lusztig q-analog of the
/// multiplicity of `lam + mu` in the irreducible with highest weight
/// `lam`. Defined only when `lam + mu` is dominant; equals `1` for
/// `mu = 0` at every level.
pub fn shriek_fiber_approximant(
    datum: &RootDatum,
    mu: &Weight,
    lam: &Weight,
) -> Result<QPolynomial> {
    datum.check_rank(mu)?;
    datum.check_rank(lam)?;
    let target = lam.add(mu);
    if !datum.is_dominant(&target) {
        return Err(Error::SkippedNotDominant {
            lam: lam.coords().to_vec(),
            mu: mu.coords().to_vec(),
        });
    }
    crate::q_gradings::lusztig_q_analog(datum, lam, &target)
}

/// Stalk approximant at level `lam`: the weight multiplicity of `lam + mu`
/// in the irreducible with highest weight `lam`. Always defined; the
/// grading is trivial here because the stalk cohomology sits in the single
/// degree `<mu, 2 rho^vee>`, so an integer is the honest container.
pub fn star_fiber_approximant(datum: &RootDatum, mu: &Weight, lam: &Weight) -> Result<BigUint> {
    datum.check_rank(mu)?;
    weight_multiplicity(datum, lam, &lam.add(mu))
}

fn run_chain<T, F>(chain: &LambdaChain, eval: F) -> Result<Vec<ChainPoint<T>>>
where
    F: Fn(&Weight) -> Result<Option<T>>,
{
    let mut history = Vec::with_capacity(chain.k_max() + 1);
    for k in 0..=chain.k_max() {
        let lam = chain.point(k);
        let value = match eval(&lam)? {
            Some(v) => ChainValue::Value(v),
            None => ChainValue::Skipped,
        };
        history.push(ChainPoint { k, lam, value });
    }
    Ok(history)
}

/// Costalk values along the chain, with stabilization detection. The
/// stable polynomial, when reached, is the graded partition count of
/// `-mu`.
pub fn shriek_fiber_stable(
    datum: &RootDatum,
    mu: &Weight,
    chain: &LambdaChain,
) -> Result<StabilizationReport<QPolynomial>> {
    let minus_mu = require_neg_cone(datum, mu)?;
    let history = run_chain(chain, |lam| {
        match shriek_fiber_approximant(datum, mu, lam) {
            Ok(p) => Ok(Some(p)),
            Err(Error::SkippedNotDominant { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    })?;
    stabilize(mu.clone(), history, chain.first_deep(minus_mu.height()))
}

/// Stalk multiplicities along the chain, with stabilization detection.
/// The stable integer, when reached, is the number of ways to write `-mu`
/// as a sum of positive roots.
pub fn star_fiber_stable(
    datum: &RootDatum,
    mu: &Weight,
    chain: &LambdaChain,
) -> Result<StabilizationReport<BigUint>> {
    let minus_mu = require_neg_cone(datum, mu)?;
    let history = run_chain(chain, |lam| {
        star_fiber_approximant(datum, mu, lam).map(Some)
    })?;
    stabilize(mu.clone(), history, chain.first_deep(minus_mu.height()))
}

/// Verdict attached to a [`FiberRow`] or a whole check.
///
/// `Pass` means every embedded identity was certified; `Report` means
/// nothing failed but some value could not be certified within the chain
/// (not stable, or stable on a truncated window); `Fail` means a certified
/// value contradicts its closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowStatus {
    Pass,
    Report,
    Fail,
}

impl RowStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RowStatus::Pass => "PASS",
            RowStatus::Report => "REPORT",
            RowStatus::Fail => "FAIL",
        }
    }
}

impl std::fmt::Display for RowStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One `mu`-row of the fiber table: both stabilization runs, their closed-
/// form targets, the filtration polynomial of the costalk of the zeroth
/// standard object, and the dimension bookkeeping of the `mu`-orbit
/// (`<mu, 2 rho^vee>`; the codimension of the stratum in the global
/// models, and on the affine Grassmannian itself, which is twice that).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberRow {
    pub mu: Weight,
    pub pairing_2rho: i64,
    pub codim_global_model: i64,
    pub codim_grassmannian: i64,
    pub shriek: StabilizationReport<QPolynomial>,
    pub star: StabilizationReport<BigUint>,
    pub target_shriek: QPolynomial,
    pub target_star_dim: BigUint,
    pub delta0: QPolynomial,
    pub status: RowStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberTable {
    pub fingerprint: u64,
    pub rows: Vec<FiberRow>,
}

impl FiberTable {
    pub fn status(&self) -> RowStatus {
        summarize(self.rows.iter().map(|r| r.status))
    }
}

/// Worst status in a collection: any `Fail` dominates, then any `Report`.
pub fn summarize(statuses: impl IntoIterator<Item = RowStatus>) -> RowStatus {
    let mut out = RowStatus::Pass;
    for s in statuses {
        match s {
            RowStatus::Fail => return RowStatus::Fail,
            RowStatus::Report => out = RowStatus::Report,
            RowStatus::Pass => {}
        }
    }
    out
}

fn row_status(row: &FiberRow) -> RowStatus {
    let mu_is_zero = row.mu.is_zero();
    let mut certified = true;
    match &row.shriek.stable_value {
        Some(v) if *v != row.target_shriek => return RowStatus::Fail,
        Some(_) => certified &= !row.shriek.truncated_window,
        None => certified = false,
    }
    match &row.star.stable_value {
        Some(v) if *v != row.target_star_dim => return RowStatus::Fail,
        Some(_) => certified &= !row.star.truncated_window,
        None => certified = false,
    }
    for (_, p) in row.shriek.valid_points() {
        let positive = p.min_exponent().is_some_and(|e| e >= 1);
        if mu_is_zero {
            if *p != QPolynomial::one() {
                return RowStatus::Fail;
            }
        } else if !positive {
            // Every per-level costalk polynomial off the open stratum must
            // vanish at q = 0: the positivity estimate, level by level.
            return RowStatus::Fail;
        }
    }
    if mu_is_zero {
        for (_, m) in row.star.valid_points() {
            if !m.is_one() {
                return RowStatus::Fail;
            }
        }
        if row.delta0 != QPolynomial::one() {
            return RowStatus::Fail;
        }
    } else if row.delta0.min_exponent().is_none_or(|e| e < 1) {
        return RowStatus::Fail;
    }
    if certified {
        RowStatus::Pass
    } else {
        RowStatus::Report
    }
}

/// Builds the per-`mu` fiber table over the negative cone up to the given
/// height, embedding every closed-form cross-check. Rows are ordered by
/// `(height(-mu), coordinates of -mu)`.
pub fn fiber_table(
    datum: &RootDatum,
    mu_height_bound: i64,
    chain: &LambdaChain,
) -> Result<FiberTable> {
    let mut rows = Vec::new();
    for beta in datum.pos_cone_up_to_height(mu_height_bound) {
        let mu = datum.root_to_weight(&beta).neg();
        let shriek = shriek_fiber_stable(datum, &mu, chain)?;
        let star = star_fiber_stable(datum, &mu, chain)?;
        let mut row = FiberRow {
            pairing_2rho: datum.pairing_2rho(&mu),
            codim_global_model: beta.height(),
            codim_grassmannian: 2 * beta.height(),
            target_shriek: sym_gmodb_graded(datum, &mu)?,
            target_star_dim: o_n_weight_dim(datum, &mu)?,
            delta0: delta0_shriek_fiber(datum, &mu)?,
            shriek,
            star,
            mu,
            status: RowStatus::Pass,
        };
        row.status = row_status(&row);
        rows.push(row);
    }
    Ok(FiberTable {
        fingerprint: datum.fingerprint(),
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeartEntry {
    pub mu: Weight,
    pub stable_dim: Option<BigUint>,
    pub coordinate_ring_dim: BigUint,
    pub matches: bool,
}

/// Outcome of [`heart_character_check`]: per-weight stalk dimensions
/// against the coordinate ring of the unipotent radical of the opposite
/// Borel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeartCheck {
    pub entries: Vec<HeartEntry>,
    pub pass: bool,
}

/// Character-level shadow of the description of the object as the regular
/// representation of the opposite Borel: for every `mu` in range, the
/// stable stalk dimension must equal the dimension of the weight-`mu`
/// space of functions on the unipotent radical, i.e. the partition count
/// of `-mu`. Runs on the default chain.
pub fn heart_character_check(datum: &RootDatum, mu_height_bound: i64) -> Result<HeartCheck> {
    let chain = LambdaChain::default_for(datum);
    let mut entries = Vec::new();
    let mut pass = true;
    for beta in datum.pos_cone_up_to_height(mu_height_bound) {
        let mu = datum.root_to_weight(&beta).neg();
        let report = star_fiber_stable(datum, &mu, &chain)?;
        let expected = o_n_weight_dim(datum, &mu)?;
        let matches = report.stable_value.as_ref() == Some(&expected);
        pass &= matches;
        entries.push(HeartEntry {
            mu,
            stable_dim: report.stable_value,
            coordinate_ring_dim: expected,
            matches,
        });
    }
    Ok(HeartCheck { entries, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn datum(symbol: &str) -> RootDatum {
        RootDatum::from_symbol(symbol).expect("builtin symbol")
    }

    fn weight(coords: &[i64]) -> Weight {
        Weight::new(coords.to_vec())
    }

    fn poly(pairs: &[(usize, i64)]) -> QPolynomial {
        QPolynomial::from_coeffs(pairs.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn chain_rejects_degenerate_generators() {
        let a2 = datum("A2");
        assert!(matches!(
            LambdaChain::new(&a2, weight(&[1, 0]), 12),
            Err(Error::BadChainGenerator { .. })
        ));
        assert!(matches!(
            LambdaChain::new(&a2, weight(&[1]), 12),
            Err(Error::RankMismatch { .. })
        ));
        assert!(LambdaChain::new(&a2, weight(&[2, 1]), 5).is_ok());
    }

    #[test]
    fn chain_points_and_depth() {
        let a2 = datum("A2");
        let chain = LambdaChain::new(&a2, weight(&[2, 1]), 10).unwrap();
        assert_eq!(chain.point(3), weight(&[6, 3]));
        // Deep needs min coordinate k*1 strictly above the height.
        assert_eq!(chain.first_deep(0), Some(1));
        assert_eq!(chain.first_deep(3), Some(4));
        assert_eq!(chain.first_deep(10), None);
        let default = LambdaChain::default_for(&a2);
        assert_eq!(default.k_max(), 12);
        assert_eq!(default.point(12), weight(&[12, 12]));
    }

    #[test]
    fn shriek_approximant_examples() {
        let a1 = datum("A1");
        let alpha = weight(&[2]);
        assert_eq!(
            shriek_fiber_approximant(&a1, &weight(&[0]), &weight(&[5])).unwrap(),
            QPolynomial::one()
        );
        assert_eq!(
            shriek_fiber_approximant(&a1, &alpha.neg(), &weight(&[2])).unwrap(),
            poly(&[(1, 1)])
        );
        assert!(matches!(
            shriek_fiber_approximant(&a1, &alpha.neg(), &weight(&[0])),
            Err(Error::SkippedNotDominant { .. })
        ));
    }

    #[test]
    fn star_approximant_examples() {
        let a1 = datum("A1");
        assert_eq!(
            star_fiber_approximant(&a1, &weight(&[-2]), &weight(&[2])).unwrap(),
            BigUint::from(1u32)
        );
        let a2 = datum("A2");
        let theta = weight(&[1, 1]);
        assert_eq!(
            star_fiber_approximant(&a2, &theta.neg(), &theta).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            star_fiber_approximant(&a2, &weight(&[0, 0]), &weight(&[3, 1])).unwrap(),
            BigUint::from(1u32)
        );
    }

    #[test]
    fn shriek_stabilizes_from_first_valid_point() {
        let a1 = datum("A1");
        let chain = LambdaChain::default_for(&a1);
        let report = shriek_fiber_stable(&a1, &weight(&[-2]), &chain).unwrap();
        assert!(report.stable);
        assert!(!report.truncated_window);
        assert_eq!(report.stable_value, Some(poly(&[(1, 1)])));
        // k = 0, 1 are skipped (lam + mu below the dominant cone), so the
        // first recorded value is at k = 2 and the threshold sits there.
        assert_eq!(report.threshold_index, Some(2));
        assert_eq!(report.history[0].value, ChainValue::Skipped);
        assert_eq!(report.history[1].value, ChainValue::Skipped);
        assert_eq!(report.valid_points().count(), 11);
    }

    #[test]
    fn star_threshold_can_sit_below_the_deep_point() {
        let a1 = datum("A1");
        let chain = LambdaChain::default_for(&a1);
        let report = star_fiber_stable(&a1, &weight(&[-2]), &chain).unwrap();
        assert!(report.stable);
        assert_eq!(report.stable_value, Some(BigUint::from(1u32)));
        // V^0 misses the weight -alpha but V^omega already hits it, one
        // step before the deep point at k = 2.
        assert_eq!(report.threshold_index, Some(1));
        assert_eq!(report.valid_points().count(), 13);
    }

    #[test]
    fn adjoint_weight_stabilizes_in_rank_two() {
        let a2 = datum("A2");
        let chain = LambdaChain::default_for(&a2);
        let mu = weight(&[-1, -1]);
        let shriek = shriek_fiber_stable(&a2, &mu, &chain).unwrap();
        assert_eq!(shriek.stable_value, Some(poly(&[(1, 1), (2, 1)])));
        let star = star_fiber_stable(&a2, &mu, &chain).unwrap();
        assert_eq!(star.stable_value, Some(BigUint::from(2u32)));
    }

    #[test]
    fn zero_weight_is_stable_from_the_start() {
        for symbol in ["A1", "A2", "C2"] {
            let d = datum(symbol);
            let chain = LambdaChain::default_for(&d);
            let mu = Weight::zero(d.rank());
            let shriek = shriek_fiber_stable(&d, &mu, &chain).unwrap();
            assert_eq!(shriek.stable_value, Some(QPolynomial::one()));
            assert_eq!(shriek.threshold_index, Some(0));
            for (_, p) in shriek.valid_points() {
                assert_eq!(*p, QPolynomial::one());
            }
            let star = star_fiber_stable(&d, &mu, &chain).unwrap();
            assert_eq!(star.stable_value, Some(BigUint::from(1u32)));
            assert_eq!(star.threshold_index, Some(0));
        }
    }

    #[test]
    fn fibers_require_the_negative_cone() {
        let a2 = datum("A2");
        let chain = LambdaChain::default_for(&a2);
        for mu in [weight(&[1, 0]), weight(&[-1, 0])] {
            assert!(matches!(
                shriek_fiber_stable(&a2, &mu, &chain),
                Err(Error::NotInNegCone { .. })
            ));
            assert!(matches!(
                star_fiber_stable(&a2, &mu, &chain),
                Err(Error::NotInNegCone { .. })
            ));
        }
    }

    #[test]
    fn late_validity_yields_a_truncated_window() {
        let a1 = datum("A1");
        let chain = LambdaChain::default_for(&a1);
        // -6 alpha: lam_k + mu dominant only at k = 12, a single-point
        // window past the deep index 7.
        let report = shriek_fiber_stable(&a1, &weight(&[-12]), &chain).unwrap();
        assert!(report.stable);
        assert!(report.truncated_window);
        assert_eq!(report.threshold_index, Some(12));
        assert_eq!(report.stable_value, Some(poly(&[(6, 1)])));
    }

    #[test]
    fn short_chain_reports_instead_of_failing() {
        let a1 = datum("A1");
        let chain = LambdaChain::new(&a1, weight(&[1]), 2).unwrap();
        // Height 4 needs depth 5; the chain tops out at 2.
        let report = shriek_fiber_stable(&a1, &weight(&[-8]), &chain).unwrap();
        assert!(!report.stable);
        assert_eq!(report.stable_value, None);
        assert_eq!(report.threshold_index, None);
    }

    #[test]
    fn table_rank_one() {
        let a1 = datum("A1");
        let chain = LambdaChain::default_for(&a1);
        let table = fiber_table(&a1, 2, &chain).unwrap();
        assert_eq!(table.rows.len(), 3);
        let shrieks: Vec<&QPolynomial> = table
            .rows
            .iter()
            .map(|r| r.shriek.stable_value.as_ref().unwrap())
            .collect();
        assert_eq!(*shrieks[0], QPolynomial::one());
        assert_eq!(*shrieks[1], poly(&[(1, 1)]));
        assert_eq!(*shrieks[2], poly(&[(2, 1)]));
        assert!(table.rows.iter().all(|r| r.status == RowStatus::Pass));
        assert_eq!(table.status(), RowStatus::Pass);
    }

    #[test]
    fn table_bookkeeping_constants() {
        let a2 = datum("A2");
        let chain = LambdaChain::default_for(&a2);
        let table = fiber_table(&a2, 2, &chain).unwrap();
        assert_eq!(table.rows.len(), 6);
        for row in &table.rows {
            assert_eq!(row.pairing_2rho, -row.codim_grassmannian);
            assert_eq!(row.codim_grassmannian, 2 * row.codim_global_model);
        }
        let theta_row = table
            .rows
            .iter()
            .find(|r| r.mu == weight(&[-1, -1]))
            .expect("adjoint row");
        assert_eq!(theta_row.target_star_dim, BigUint::from(2u32));
        assert_eq!(theta_row.codim_global_model, 2);
        assert_eq!(theta_row.status, RowStatus::Pass);
    }

    #[test]
    fn heart_check_examples() {
        let a1 = datum("A1");
        let check = heart_character_check(&a1, 3).unwrap();
        assert!(check.pass);
        assert_eq!(check.entries.len(), 4);
        assert!(check
            .entries
            .iter()
            .all(|e| e.coordinate_ring_dim == BigUint::from(1u32)));
        let a2 = datum("A2");
        let check = heart_character_check(&a2, 2).unwrap();
        assert!(check.pass);
        assert!(check
            .entries
            .iter()
            .any(|e| e.coordinate_ring_dim == BigUint::from(2u32)));
    }

    #[test]
    fn status_summary_prefers_worst() {
        use RowStatus::*;
        assert_eq!(summarize([Pass, Pass]), Pass);
        assert_eq!(summarize([Pass, Report, Pass]), Report);
        assert_eq!(summarize([Report, Fail, Pass]), Fail);
        assert_eq!(summarize([]), Pass);
    }
}
