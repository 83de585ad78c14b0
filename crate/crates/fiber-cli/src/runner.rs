//! Suite orchestration: build the datum, run the selected suites, and
//! assemble the deterministic report plus wall-clock timings.
//!
//! Failures inside a suite (a check that cannot run, an internal library
//! error) become FAIL entries in that suite rather than aborting the
//! process; only datum and chain construction abort, with exit code 2.
//! Items whose full-character cost would exceed a fixed budget are
//! reported as SKIP so that large types stay responsive by default.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use semiinf::characters::{irr_character, stable_tensor_check, weight_multiplicity, weyl_dimension};
use semiinf::fibers::{fiber_table, LambdaChain};
use semiinf::plucker::verify_as_colim;
use semiinf::q_gradings::{
    chevalley_graded, delta0_shriek_fiber, lusztig_q_analog, sym_gmodb_graded, sym_nminus_graded,
};
use semiinf::qpoly::QPolynomial;
use semiinf::root_datum::{CartanMatrix, RootDatum, Weight};

use crate::config::{CartanSource, RunConfig, SuiteKind};
use crate::document::{
    character_json, count_u64, poly_json, DatumSummary, EncodeError, EntryReport, ReportDocument,
    SuiteReport, TargetJson,
};

/// Largest Weyl group the selftest battery is willing to sum over.
const SELFTEST_WEYL_BUDGET: u64 = 2_000;
/// Largest single irreducible whose full character a suite will expand.
const CHAR_DIM_BUDGET: u64 = 50_000;
/// Largest product dimension for a character-level tensor check.
const TENSOR_PRODUCT_BUDGET: u64 = 60_000;
/// Tensor grid: highest weights with coordinate sum up to this bound
/// whose irreducible stays within [`TENSOR_DIM_BOUND`].
const TENSOR_SUM_BOUND: i64 = 3;
const TENSOR_DIM_BOUND: u64 = 27;
/// Hom-space grid: dominant weights with coordinate sum up to this bound
/// (further capped by `--mu-height`).
const PLUCKER_SUM_BOUND: i64 = 3;

#[derive(Debug)]
pub struct SuiteTiming {
    pub suite: &'static str,
    pub elapsed: Duration,
}

/// Errors that abort the run; both map to exit code 2.
#[derive(Debug)]
pub enum RunError {
    Construct(String),
    Encode(String),
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Construct(msg) | RunError::Encode(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for RunError {}

impl From<EncodeError> for RunError {
    fn from(err: EncodeError) -> Self {
        RunError::Encode(err.to_string())
    }
}

fn construct(err: semiinf::Error) -> RunError {
    RunError::Construct(err.to_string())
}

pub fn run(config: &RunConfig) -> Result<(ReportDocument, Vec<SuiteTiming>), RunError> {
    let datum = build_datum(&config.source)?;
    let chain = build_chain(&datum, config)?;
    let summary = DatumSummary {
        label: source_label(&config.source),
        rank: datum.rank(),
        positive_roots: datum.positive_roots().len(),
        weyl_order: datum.weyl_order().map_err(construct)?,
    };
    let mut suites = BTreeMap::new();
    let mut timings = Vec::new();
    for &kind in &config.suites {
        let start = Instant::now();
        let suite = match kind {
            SuiteKind::Fibers => fibers_suite(&datum, config, &chain)?,
            SuiteKind::Delta0 => delta0_suite(&datum, config)?,
            SuiteKind::Tensor => tensor_suite(&datum)?,
            SuiteKind::Plucker => plucker_suite(&datum, config, &chain)?,
            SuiteKind::Selftest => selftest_suite(&datum)?,
        };
        timings.push(SuiteTiming {
            suite: kind.name(),
            elapsed: start.elapsed(),
        });
        suites.insert(kind.name().to_string(), suite);
    }
    let document = ReportDocument {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        datum: summary,
        suites,
    };
    Ok((document, timings))
}

fn build_datum(source: &CartanSource) -> Result<RootDatum, RunError> {
    match source {
        CartanSource::Symbol(symbol) => RootDatum::from_symbol(symbol).map_err(construct),
        CartanSource::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                RunError::Construct(format!("cannot read Cartan file {}: {e}", path.display()))
            })?;
            let entries: Vec<Vec<i64>> = serde_json::from_str(&text).map_err(|e| {
                RunError::Construct(format!(
                    "malformed Cartan file {}: expected a JSON array of integer rows: {e}",
                    path.display()
                ))
            })?;
            let cartan = CartanMatrix::new(entries).map_err(construct)?;
            RootDatum::build(cartan).map_err(construct)
        }
    }
}

fn source_label(source: &CartanSource) -> String {
    match source {
        CartanSource::Symbol(symbol) => symbol.clone(),
        CartanSource::File(_) => "custom".to_string(),
    }
}

fn build_chain(datum: &RootDatum, config: &RunConfig) -> Result<LambdaChain, RunError> {
    let generator = match &config.chain_generator {
        Some(coords) => Weight::new(coords.clone()),
        None => Weight::new(vec![1; datum.rank()]),
    };
    LambdaChain::new(datum, generator, config.chain_max).map_err(construct)
}

/// FAIL beats REPORT beats PASS; a suite whose every entry was skipped is
/// itself SKIP.
fn suite_status(entries: &[EntryReport]) -> String {
    let mut status = "PASS";
    for entry in entries {
        match entry.status.as_str() {
            "FAIL" => return "FAIL".to_string(),
            "REPORT" => status = "REPORT",
            _ => {}
        }
    }
    if !entries.is_empty() && entries.iter().all(|e| e.status == "SKIP") {
        return "SKIP".to_string();
    }
    status.to_string()
}

fn finish(entries: Vec<EntryReport>) -> SuiteReport {
    SuiteReport {
        status: suite_status(&entries),
        entries,
    }
}

/// A library error inside a suite: recorded, not fatal.
fn error_entry(name: &str, err: &semiinf::Error) -> EntryReport {
    EntryReport {
        name: Some(name.to_string()),
        detail: Some(err.to_string()),
        status: "FAIL".to_string(),
        ..EntryReport::default()
    }
}

fn skip_entry(detail: String) -> EntryReport {
    EntryReport {
        detail: Some(detail),
        status: "SKIP".to_string(),
        ..EntryReport::default()
    }
}

fn coords_label(coords: &[i64]) -> String {
    coords
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn fibers_suite(
    datum: &RootDatum,
    config: &RunConfig,
    chain: &LambdaChain,
) -> Result<SuiteReport, RunError> {
    let table = match fiber_table(datum, config.mu_height_bound, chain) {
        Ok(table) => table,
        Err(err) => return Ok(finish(vec![error_entry("fibers", &err)])),
    };
    let mut entries = Vec::with_capacity(table.rows.len());
    for row in &table.rows {
        let mu_root = datum.weight_to_root(&row.mu).ok_or_else(|| {
            RunError::Encode("fiber index is not in the root lattice".to_string())
        })?;
        entries.push(EntryReport {
            mu: Some(mu_root.coords().to_vec()),
            shriek_stable: row
                .shriek
                .stable_value
                .as_ref()
                .map(poly_json)
                .transpose()?,
            shriek_threshold: row.shriek.threshold_index,
            star_stable: row.star.stable_value.as_ref().map(count_u64).transpose()?,
            star_threshold: row.star.threshold_index,
            truncated_window: Some(row.shriek.truncated_window || row.star.truncated_window),
            target: Some(TargetJson {
                shriek: poly_json(&row.target_shriek)?,
                star: count_u64(&row.target_star_dim)?,
            }),
            delta0: Some(poly_json(&row.delta0)?),
            pairing_2rho: Some(row.pairing_2rho),
            codim_global_model: Some(row.codim_global_model),
            codim_grassmannian: Some(row.codim_grassmannian),
            status: row.status.as_str().to_string(),
            ..EntryReport::default()
        });
    }
    Ok(finish(entries))
}

fn delta0_suite(datum: &RootDatum, config: &RunConfig) -> Result<SuiteReport, RunError> {
    let mut entries = Vec::new();
    for beta in datum.pos_cone_up_to_height(config.mu_height_bound) {
        let mu = datum.root_to_weight(&beta).neg();
        let mu_coords: Vec<i64> = beta.coords().iter().map(|&c| -c).collect();
        match delta0_shriek_fiber(datum, &mu) {
            Ok(poly) => {
                let pass = if beta.height() == 0 {
                    poly == QPolynomial::one()
                } else {
                    poly.min_exponent().is_some_and(|e| e >= 1)
                };
                entries.push(EntryReport {
                    mu: Some(mu_coords),
                    delta0: Some(poly_json(&poly)?),
                    min_exponent: poly.min_exponent(),
                    status: if pass { "PASS" } else { "FAIL" }.to_string(),
                    ..EntryReport::default()
                });
            }
            Err(err) => {
                entries.push(error_entry(&format!("delta0 mu={}", coords_label(&mu_coords)), &err))
            }
        }
    }
    Ok(finish(entries))
}

fn tensor_suite(datum: &RootDatum) -> Result<SuiteReport, RunError> {
    let rank = datum.rank();
    let ones = Weight::new(vec![1; rank]);
    let mut entries = Vec::new();
    for v in dominant_weights_by_sum(rank, TENSOR_SUM_BOUND) {
        let v_dim = match weyl_dimension(datum, &v) {
            Ok(dim) => dim,
            Err(err) => {
                entries.push(error_entry(&format!("tensor v={}", coords_label(v.coords())), &err));
                continue;
            }
        };
        let Some(v_dim) = v_dim.to_u64() else {
            continue;
        };
        if v_dim > TENSOR_DIM_BOUND {
            continue;
        }
        let v_char = match irr_character(datum, &v) {
            Ok(ch) => ch,
            Err(err) => {
                entries.push(error_entry(&format!("tensor v={}", coords_label(v.coords())), &err));
                continue;
            }
        };
        // Shallowest base point with every shifted weight dominant.
        let mut base = vec![0i64; rank];
        for (kappa, _) in v_char.entries() {
            for (i, &c) in kappa.coords().iter().enumerate() {
                base[i] = base[i].max(-c);
            }
        }
        let base = Weight::new(base);
        for step in 0..2i64 {
            let lam = base.add(&ones.scale(step));
            let lam_dim = match weyl_dimension(datum, &lam) {
                Ok(dim) => dim,
                Err(err) => {
                    entries.push(error_entry(
                        &format!("tensor lam={}", coords_label(lam.coords())),
                        &err,
                    ));
                    continue;
                }
            };
            let product_dim = lam_dim.clone() * v_dim;
            let within_budget = product_dim
                .to_u64()
                .is_some_and(|d| d <= TENSOR_PRODUCT_BUDGET);
            if !within_budget {
                entries.push(EntryReport {
                    v: Some(v.coords().to_vec()),
                    lam: Some(lam.coords().to_vec()),
                    detail: Some(format!(
                        "product dimension {product_dim} exceeds the character budget {TENSOR_PRODUCT_BUDGET}"
                    )),
                    ..skip_entry(String::new())
                });
                continue;
            }
            match stable_tensor_check(datum, &lam, &v) {
                Ok(check) => entries.push(EntryReport {
                    v: Some(v.coords().to_vec()),
                    lam: Some(lam.coords().to_vec()),
                    summands: Some(check.actual.summand_count()),
                    dimension: product_dim.to_u64(),
                    matches: Some(check.pass),
                    status: if check.pass { "PASS" } else { "FAIL" }.to_string(),
                    ..EntryReport::default()
                }),
                Err(err) => entries.push(error_entry(
                    &format!(
                        "tensor v={} lam={}",
                        coords_label(v.coords()),
                        coords_label(lam.coords())
                    ),
                    &err,
                )),
            }
        }
    }
    Ok(finish(entries))
}

fn plucker_suite(
    datum: &RootDatum,
    config: &RunConfig,
    chain: &LambdaChain,
) -> Result<SuiteReport, RunError> {
    let sum_bound = config.mu_height_bound.min(PLUCKER_SUM_BOUND);
    let endpoint = chain.point(chain.k_max());
    let endpoint_dim = weyl_dimension(datum, &endpoint).map_err(construct)?;
    let endpoint_small = endpoint_dim.to_u64().filter(|&d| d <= CHAR_DIM_BUDGET);
    let mut entries = Vec::new();
    for mu in dominant_weights_by_sum(datum.rank(), sum_bound) {
        if endpoint_small.is_none() {
            entries.push(EntryReport {
                mu: Some(mu.coords().to_vec()),
                detail: Some(format!(
                    "chain endpoint dimension {endpoint_dim} exceeds the character budget {CHAR_DIM_BUDGET}; lower --chain-max"
                )),
                ..skip_entry(String::new())
            });
            continue;
        }
        match verify_as_colim(datum, &mu, chain) {
            Ok(check) => {
                let observed = check.report.threshold_index;
                let within = match (observed, check.apriori_threshold) {
                    (Some(o), Some(a)) => Some(o <= a),
                    _ => None,
                };
                let status = if !check.report.stable {
                    "REPORT"
                } else if !check.matches || within == Some(false) {
                    "FAIL"
                } else {
                    "PASS"
                };
                entries.push(EntryReport {
                    mu: Some(mu.coords().to_vec()),
                    truncated_window: Some(check.report.truncated_window),
                    observed_threshold: observed,
                    apriori_threshold: check.apriori_threshold,
                    within_apriori: within,
                    character: Some(character_json(&check.target)?),
                    matches: Some(check.matches),
                    status: status.to_string(),
                    ..EntryReport::default()
                });
            }
            Err(err) => entries.push(error_entry(
                &format!("plucker mu={}", coords_label(mu.coords())),
                &err,
            )),
        }
    }
    Ok(finish(entries))
}

fn selftest_suite(datum: &RootDatum) -> Result<SuiteReport, RunError> {
    let rank = datum.rank();
    let ones = Weight::new(vec![1; rank]);
    let weyl_order = datum.weyl_order().map_err(construct)?;
    let mut entries = Vec::new();

    // Two independent routes to the graded partition function.
    {
        let mut failure = None;
        let mut checked = 0usize;
        for beta in datum.pos_cone_up_to_height(3) {
            let mu = datum.root_to_weight(&beta).neg();
            match (sym_nminus_graded(datum, &mu), sym_gmodb_graded(datum, &mu)) {
                (Ok(a), Ok(b)) if a == b => checked += 1,
                (Ok(a), Ok(b)) => {
                    failure = Some(format!(
                        "disagreement at -mu={}: {a} vs {b}",
                        coords_label(beta.coords())
                    ));
                    break;
                }
                (Err(err), _) | (_, Err(err)) => {
                    failure = Some(err.to_string());
                    break;
                }
            }
        }
        entries.push(named_check("partition-routes", failure, format!("{checked} lattice points")));
    }

    // The filtration polynomial of the open stratum is the unit.
    {
        let zero = Weight::new(vec![0; rank]);
        let failure = match delta0_shriek_fiber(datum, &zero) {
            Ok(poly) if poly == QPolynomial::one() => None,
            Ok(poly) => Some(format!("expected 1, got {poly}")),
            Err(err) => Some(err.to_string()),
        };
        entries.push(named_check("filtration-unit", failure, "mu = 0".to_string()));
    }

    // Exterior degree of a single simple direction is exactly one.
    {
        let mut failure = None;
        for i in 0..rank {
            let mu = datum.root_to_weight(&datum.simple_root(i)).neg();
            match chevalley_graded(datum, &mu) {
                Ok(poly) if poly == QPolynomial::monomial(1, BigInt::from(1)) => {}
                Ok(poly) => {
                    failure = Some(format!("direction {i}: expected q, got {poly}"));
                    break;
                }
                Err(err) => {
                    failure = Some(err.to_string());
                    break;
                }
            }
        }
        entries.push(named_check(
            "exterior-degrees",
            failure,
            format!("{rank} simple directions"),
        ));
    }

    // Degree pairing agrees with twice the height on the root lattice.
    {
        let mut failure = None;
        let mut checked = 0usize;
        for beta in datum.pos_cone_up_to_height(3) {
            let expected = -2 * beta.height();
            let actual = datum.pairing_2rho(&datum.root_to_weight(&beta).neg());
            if actual != expected {
                failure = Some(format!(
                    "-mu={}: pairing {actual}, twice height {expected}",
                    coords_label(beta.coords())
                ));
                break;
            }
            checked += 1;
        }
        entries.push(named_check("degree-pairing", failure, format!("{checked} lattice points")));
    }

    // Weyl-sum checks are gated by group order to keep selftest quick.
    if weyl_order <= SELFTEST_WEYL_BUDGET {
        entries.push({
            let mut failure = None;
            let mut checked = 0usize;
            for beta in datum.pos_cone_up_to_height(2) {
                let nu = ones.sub(&datum.root_to_weight(&beta));
                let graded = lusztig_q_analog(datum, &ones, &nu);
                let direct = weight_multiplicity(datum, &ones, &nu);
                match (graded, direct) {
                    (Ok(poly), Ok(mult)) if poly.eval_at_one() == BigInt::from(mult.clone()) => {
                        checked += 1;
                    }
                    (Ok(poly), Ok(mult)) => {
                        failure = Some(format!(
                            "beta={}: graded count {} vs direct {mult}",
                            coords_label(beta.coords()),
                            poly.eval_at_one()
                        ));
                        break;
                    }
                    (Err(err), _) | (_, Err(err)) => {
                        failure = Some(err.to_string());
                        break;
                    }
                }
            }
            named_check("q-analog-at-one", failure, format!("{checked} weights below rho"))
        });

        entries.push({
            let mut failure = None;
            for i in 0..rank {
                let mut coords = vec![0i64; rank];
                coords[i] = 1;
                let omega = Weight::new(coords);
                match datum
                    .dual_dominant(&omega)
                    .and_then(|dual| datum.dual_dominant(&dual))
                {
                    Ok(back) if back == omega => {}
                    Ok(back) => {
                        failure = Some(format!(
                            "fundamental {i}: double dual {}",
                            coords_label(back.coords())
                        ));
                        break;
                    }
                    Err(err) => {
                        failure = Some(err.to_string());
                        break;
                    }
                }
            }
            named_check("duality-involution", failure, format!("{rank} fundamental weights"))
        });

        // Height-2 strata can skip the first few chain points before
        // the shifted weight turns dominant (k = 6 for the doubled long
        // root of G2), so the short chain still needs some headroom to
        // certify a three-point stable window.
        entries.push(match LambdaChain::new(datum, ones.clone(), 9) {
            Ok(short_chain) => match fiber_table(datum, 2, &short_chain) {
                Ok(table) => {
                    let status = table.status();
                    EntryReport {
                        name: Some("fiber-closed-forms".to_string()),
                        detail: Some(format!("{} strata, height up to 2", table.rows.len())),
                        status: status.as_str().to_string(),
                        ..EntryReport::default()
                    }
                }
                Err(err) => error_entry("fiber-closed-forms", &err),
            },
            Err(err) => error_entry("fiber-closed-forms", &err),
        });
    } else {
        entries.push(weyl_skip("q-analog-at-one", weyl_order));
        entries.push(weyl_skip("duality-involution", weyl_order));
        entries.push(weyl_skip("fiber-closed-forms", weyl_order));
    }

    // Character-level checks are gated by irreducible dimension.
    {
        let mut omega = vec![0i64; rank];
        omega[0] = 1;
        let v = Weight::new(omega);
        entries.push(match tensor_selftest(datum, &v) {
            Ok(entry) => entry,
            Err(err) => error_entry("tensor-identity", &err),
        });
    }
    {
        let mut omega = vec![0i64; rank];
        omega[0] = 1;
        let mu = Weight::new(omega);
        entries.push(match colim_selftest(datum, &mu, &ones) {
            Ok(entry) => entry,
            Err(err) => error_entry("colimit-unit", &err),
        });
    }

    Ok(finish(entries))
}

fn tensor_selftest(datum: &RootDatum, v: &Weight) -> semiinf::Result<EntryReport> {
    let v_dim = weyl_dimension(datum, v)?;
    let v_char = irr_character(datum, v)?;
    // Shallowest base point with every shifted weight dominant.
    let mut base = vec![0i64; datum.rank()];
    for (kappa, _) in v_char.entries() {
        for (i, &c) in kappa.coords().iter().enumerate() {
            base[i] = base[i].max(-c);
        }
    }
    let lam = Weight::new(base);
    let product = weyl_dimension(datum, &lam)? * v_dim;
    if !product.to_u64().is_some_and(|d| d <= TENSOR_PRODUCT_BUDGET) {
        return Ok(EntryReport {
            name: Some("tensor-identity".to_string()),
            detail: Some(format!(
                "product dimension {product} exceeds the character budget {TENSOR_PRODUCT_BUDGET}"
            )),
            status: "SKIP".to_string(),
            ..EntryReport::default()
        });
    }
    let check = stable_tensor_check(datum, &lam, v)?;
    Ok(EntryReport {
        name: Some("tensor-identity".to_string()),
        v: Some(v.coords().to_vec()),
        lam: Some(lam.coords().to_vec()),
        matches: Some(check.pass),
        status: if check.pass { "PASS" } else { "FAIL" }.to_string(),
        ..EntryReport::default()
    })
}

fn colim_selftest(
    datum: &RootDatum,
    mu: &Weight,
    ones: &Weight,
) -> semiinf::Result<EntryReport> {
    // The stabilization threshold for a fundamental weight is at most 1
    // with the all-ones generator, so a short chain suffices.
    let chain = LambdaChain::new(datum, ones.clone(), 3)?;
    let endpoint_dim = weyl_dimension(datum, &chain.point(chain.k_max()))?;
    if !endpoint_dim
        .to_u64()
        .is_some_and(|d| d <= CHAR_DIM_BUDGET)
    {
        return Ok(EntryReport {
            name: Some("colimit-unit".to_string()),
            detail: Some(format!(
                "chain endpoint dimension {endpoint_dim} exceeds the character budget {CHAR_DIM_BUDGET}"
            )),
            status: "SKIP".to_string(),
            ..EntryReport::default()
        });
    }
    let check = verify_as_colim(datum, mu, &chain)?;
    Ok(EntryReport {
        name: Some("colimit-unit".to_string()),
        mu: Some(mu.coords().to_vec()),
        matches: Some(check.matches),
        status: if check.report.stable && check.matches {
            "PASS"
        } else if check.report.stable {
            "FAIL"
        } else {
            "REPORT"
        }
        .to_string(),
        ..EntryReport::default()
    })
}

fn named_check(name: &str, failure: Option<String>, pass_detail: String) -> EntryReport {
    match failure {
        None => EntryReport {
            name: Some(name.to_string()),
            detail: Some(pass_detail),
            status: "PASS".to_string(),
            ..EntryReport::default()
        },
        Some(detail) => EntryReport {
            name: Some(name.to_string()),
            detail: Some(detail),
            status: "FAIL".to_string(),
            ..EntryReport::default()
        },
    }
}

fn weyl_skip(name: &str, weyl_order: u64) -> EntryReport {
    EntryReport {
        name: Some(name.to_string()),
        detail: Some(format!(
            "Weyl group order {weyl_order} exceeds the selftest budget {SELFTEST_WEYL_BUDGET}"
        )),
        status: "SKIP".to_string(),
        ..EntryReport::default()
    }
}

/// All dominant weights with the given coordinate-sum bound, ordered by
/// (sum, coordinates).
fn dominant_weights_by_sum(rank: usize, bound: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut current = vec![0i64; rank];
    fill_weights(&mut current, 0, bound, &mut out);
    out.sort_by_key(|w: &Weight| (w.coords().iter().sum::<i64>(), w.coords().to_vec()));
    out
}

fn fill_weights(current: &mut Vec<i64>, index: usize, budget: i64, out: &mut Vec<Weight>) {
    if index == current.len() {
        out.push(Weight::new(current.clone()));
        return;
    }
    for value in 0..=budget {
        current[index] = value;
        fill_weights(current, index + 1, budget - value, out);
    }
    current[index] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Format;

    fn config(symbol: &str, suites: Vec<SuiteKind>) -> RunConfig {
        RunConfig {
            source: CartanSource::Symbol(symbol.to_string()),
            mu_height_bound: 2,
            chain_max: 12,
            chain_generator: None,
            suites,
            out: None,
            format: Format::Json,
        }
    }

    #[test]
    fn datum_only_run_has_summary_and_no_suites() {
        let (doc, timings) = run(&config("G2", Vec::new())).unwrap();
        assert!(doc.suites.is_empty());
        assert!(timings.is_empty());
        assert_eq!(doc.datum.label, "G2");
        assert_eq!(doc.datum.rank, 2);
        assert_eq!(doc.datum.positive_roots, 6);
        assert_eq!(doc.datum.weyl_order, 12);
        assert!(!doc.has_fail());
    }

    #[test]
    fn unknown_symbol_is_a_construction_error() {
        let err = run(&config("Z9", Vec::new())).unwrap_err();
        assert!(matches!(err, RunError::Construct(_)));
    }

    #[test]
    fn fiber_suite_reproduces_the_small_rank_one_column() {
        let (doc, _) = run(&config("A1", vec![SuiteKind::Fibers])).unwrap();
        let suite = &doc.suites["fibers"];
        assert_eq!(suite.status, "PASS");
        let stable: Vec<String> = suite
            .entries
            .iter()
            .map(|e| e.shriek_stable.as_ref().unwrap().to_string())
            .collect();
        assert_eq!(stable, vec!["1", "q", "q^2"]);
        assert_eq!(suite.entries[0].mu.as_deref(), Some(&[0][..]));
        assert_eq!(suite.entries[1].mu.as_deref(), Some(&[-1][..]));
        assert_eq!(suite.entries[2].mu.as_deref(), Some(&[-2][..]));
        for entry in &suite.entries {
            let target = entry.target.as_ref().unwrap();
            assert_eq!(entry.shriek_stable.as_ref(), Some(&target.shriek));
            assert_eq!(entry.star_stable, Some(target.star));
        }
    }

    #[test]
    fn delta0_suite_is_positive_off_the_open_stratum() {
        let (doc, _) = run(&config("A2", vec![SuiteKind::Delta0])).unwrap();
        let suite = &doc.suites["delta0"];
        assert_eq!(suite.status, "PASS");
        // Heights 0, 1, 1, 2, 2, 2.
        assert_eq!(suite.entries.len(), 6);
        assert_eq!(suite.entries[0].min_exponent, Some(0));
        for entry in &suite.entries[1..] {
            assert!(entry.min_exponent.unwrap() >= 1);
        }
    }

    #[test]
    fn selftest_passes_on_rank_two_types() {
        for symbol in ["A2", "B2", "C2", "G2"] {
            let (doc, _) = run(&config(symbol, vec![SuiteKind::Selftest])).unwrap();
            let suite = &doc.suites["selftest"];
            assert_eq!(suite.status, "PASS", "{symbol}: {:?}", suite.entries);
            assert!(suite.entries.iter().all(|e| e.status == "PASS"));
        }
    }

    #[test]
    fn selftest_skips_weyl_sums_on_huge_groups_instead_of_crawling() {
        let (doc, _) = run(&config("A6", vec![SuiteKind::Selftest])).unwrap();
        let suite = &doc.suites["selftest"];
        assert_ne!(suite.status, "FAIL");
        let skipped: Vec<&str> = suite
            .entries
            .iter()
            .filter(|e| e.status == "SKIP")
            .map(|e| e.name.as_deref().unwrap())
            .collect();
        assert!(skipped.contains(&"q-analog-at-one"));
    }

    #[test]
    fn tensor_and_plucker_suites_pass_on_rank_two() {
        let (doc, _) = run(&config(
            "C2",
            vec![SuiteKind::Tensor, SuiteKind::Plucker],
        ))
        .unwrap();
        assert_eq!(doc.suites["tensor"].status, "PASS");
        let plucker = &doc.suites["plucker"];
        assert_eq!(plucker.status, "PASS");
        for entry in &plucker.entries {
            assert_eq!(entry.matches, Some(true));
            assert_ne!(entry.within_apriori, Some(false));
        }
    }

    #[test]
    fn plucker_skips_when_the_endpoint_outgrows_the_budget() {
        let mut cfg = config("A3", vec![SuiteKind::Plucker]);
        cfg.mu_height_bound = 1;
        let (doc, _) = run(&cfg).unwrap();
        let suite = &doc.suites["plucker"];
        assert_eq!(suite.status, "SKIP");
        assert!(suite.entries.iter().all(|e| e.status == "SKIP"));

        cfg.chain_max = 4;
        let (doc, _) = run(&cfg).unwrap();
        assert_eq!(doc.suites["plucker"].status, "PASS");
    }

    #[test]
    fn dominant_weight_grid_is_sorted_and_complete() {
        let grid = dominant_weights_by_sum(2, 2);
        let coords: Vec<Vec<i64>> = grid.iter().map(|w| w.coords().to_vec()).collect();
        assert_eq!(
            coords,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![1, 0],
                vec![0, 2],
                vec![1, 1],
                vec![2, 0],
            ]
        );
    }
}
