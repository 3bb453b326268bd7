//! Structural analysis of a network: stoichiometric subspace,
//! deficiency, Cayley nullity, moduli codimension, and the cross-check
//! suites that verify the identities tying them together on instances.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::crn::{
    cayley_matrix, cayley_toric_ideal, find_positive_weights, homogeneity_check,
    kernel_soundness_check, moduli_ideal_from, partition_equivalence_check, special_fiber,
    toric_ideal, CayleyVariant, CrnError,
};
use crate::groebner::{dimension, ideal_equal, ideal_member, GroebnerError};
use crate::ideal::Ideal;
use crate::matrix::IntegerMatrix;
use crate::network::Network;
use crate::order::MonomialOrder;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    Crn(CrnError),
    Groebner(GroebnerError),
}

impl fmt::Display for AnalysisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalysisError::Crn(e) => e.fmt(f),
            AnalysisError::Groebner(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for AnalysisError {}

impl From<CrnError> for AnalysisError {
    fn from(e: CrnError) -> Self {
        AnalysisError::Crn(e)
    }
}

impl From<GroebnerError> for AnalysisError {
    fn from(e: GroebnerError) -> Self {
        AnalysisError::Groebner(e)
    }
}

/// Rank over the rationals of the span of the reaction vectors
/// v_to - v_from over all edges.
pub fn stoichiometric_dim(net: &Network) -> usize {
    let s = net.num_species();
    let rows: Vec<Vec<BigInt>> = net
        .edges()
        .iter()
        .map(|e| {
            let from = &net.vertices()[e.from];
            let to = &net.vertices()[e.to];
            (0..s)
                .map(|j| BigInt::from(to[j]) - BigInt::from(from[j]))
                .collect()
        })
        .collect();
    if rows.is_empty() {
        return 0;
    }
    IntegerMatrix::from_rows(&rows).rank()
}

/// n - l - dim S; reported as computed, without assuming nonnegativity.
pub fn deficiency(net: &Network) -> i64 {
    net.num_vertices() as i64 - net.num_components() as i64 - stoichiometric_dim(net) as i64
}

pub fn cayley_rank(net: &Network) -> usize {
    cayley_matrix(net, CayleyVariant::Standard).rank()
}

/// n - rank of the standard Cayley matrix.
pub fn cayley_nullity(net: &Network) -> usize {
    net.num_vertices() - cayley_rank(net)
}

/// n - dim of the moduli ideal inside K[K].
pub fn codim_moduli(net: &Network, as_partition: bool) -> Result<usize, AnalysisError> {
    let tg = toric_ideal(net, as_partition)?;
    let mg = moduli_ideal_from(&tg);
    let dim = dimension(&mg)?;
    Ok(net.num_vertices() - dim)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        }
    }
}

/// Serializable record of the structural analysis of one network.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub l: usize,
    pub s: usize,
    pub dim_s: usize,
    pub deficiency: i64,
    pub cayley_rank: usize,
    pub cayley_nullity: usize,
    pub codim_mg: Option<usize>,
    pub weakly_reversible: bool,
    pub homogeneous_case: bool,
    pub checks: Vec<CheckOutcome>,
}

impl AnalysisReport {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// The combinatorial-linear part of the report. Ideal-based fields are
/// filled only for weakly reversible networks; no checks are run.
pub fn analyze(net: &Network) -> AnalysisReport {
    let weakly_reversible = net.is_weakly_reversible();
    let codim_mg = if weakly_reversible {
        codim_moduli(net, false).ok()
    } else {
        None
    };
    AnalysisReport {
        n: net.num_vertices(),
        l: net.num_components(),
        s: net.num_species(),
        dim_s: stoichiometric_dim(net),
        deficiency: deficiency(net),
        cayley_rank: cayley_rank(net),
        cayley_nullity: cayley_nullity(net),
        codim_mg,
        weakly_reversible,
        homogeneous_case: find_positive_weights(net).is_some(),
        checks: Vec::new(),
    }
}

/// Runs every structural cross-check the toolkit knows on one network
/// and records pass/fail with diagnostics. Failures are recorded, never
/// thrown. Non-weakly-reversible networks get the single failing
/// `weak_reversibility` entry and no ideal checks.
pub fn consistency_suite(net: &Network) -> AnalysisReport {
    let mut report = analyze(net);
    if !report.weakly_reversible {
        report.checks.push(CheckOutcome::new(
            "weak_reversibility",
            false,
            "network is not weakly reversible; ideal checks skipped",
        ));
        return report;
    }

    let tg = toric_ideal(net, false).expect("weakly reversible");
    let mg = moduli_ideal_from(&tg);
    let order = MonomialOrder::Grevlex;
    let mut checks = Vec::new();

    match partition_equivalence_check(net) {
        Ok(pass) => checks.push(CheckOutcome::new(
            "partition_equivalence",
            pass,
            if pass {
                "per-component and direct saturation agree".to_string()
            } else {
                "per-component saturation differs from direct saturation".to_string()
            },
        )),
        Err(e) => checks.push(CheckOutcome::new("partition_equivalence", false, e.to_string())),
    }

    let kernel = kernel_soundness_check(net, &tg);
    checks.push(CheckOutcome::new(
        "kernel_soundness",
        kernel,
        if kernel {
            "basis maps to zero under the presentation; binomials are members".to_string()
        } else {
            "toric ideal is not sound against the presentation map".to_string()
        },
    ));

    let non_binomial: Vec<String> = tg
        .groebner_basis(&order)
        .iter()
        .chain(mg.groebner_basis(&order).iter())
        .filter(|g| !g.is_binomial())
        .map(ToString::to_string)
        .collect();
    checks.push(CheckOutcome::new(
        "binomiality",
        non_binomial.is_empty(),
        if non_binomial.is_empty() {
            "every basis element of the toric and moduli ideals is a binomial".to_string()
        } else {
            format!("non-binomial elements: {}", non_binomial.join(", "))
        },
    ));

    let delta = report.deficiency;
    let nullity = report.cayley_nullity as i64;
    checks.push(CheckOutcome::new(
        "deficiency_equals_cayley_nullity",
        delta == nullity,
        format!("deficiency {} vs nullity {}", delta, nullity),
    ));

    match dimension(&mg) {
        Ok(dim) => {
            let codim = (net.num_vertices() - dim) as i64;
            report.codim_mg = Some(net.num_vertices() - dim);
            checks.push(CheckOutcome::new(
                "deficiency_equals_codim_moduli",
                delta == codim,
                format!("deficiency {} vs codim {}", delta, codim),
            ));
        }
        Err(e) => checks.push(CheckOutcome::new(
            "deficiency_equals_codim_moduli",
            false,
            e.to_string(),
        )),
    }

    let standard = cayley_toric_ideal(net, CayleyVariant::Standard);
    let standard_ok = ideal_equal(&standard, &mg);
    checks.push(CheckOutcome::new(
        "standard_cayley_equals_moduli",
        standard_ok,
        if standard_ok {
            "toric ideal of the Cayley matrix equals the moduli ideal".to_string()
        } else {
            format!(
                "cayley gives [{}], moduli is [{}]",
                ideal_strings(&standard).join(", "),
                ideal_strings(&mg).join(", ")
            )
        },
    ));

    let modified = cayley_toric_ideal(net, CayleyVariant::Modified);
    let modified_ok = ideal_equal(&modified, &tg);
    checks.push(CheckOutcome::new(
        "modified_cayley_equals_toric",
        modified_ok,
        if modified_ok {
            "toric ideal of the modified Cayley matrix equals the toric ideal".to_string()
        } else {
            format!(
                "modified cayley gives [{}], toric ideal is [{}]",
                ideal_strings(&modified).join(", "),
                ideal_strings(&tg).join(", ")
            )
        },
    ));

    let moduli_inside = mg
        .groebner_basis(&order)
        .iter()
        .all(|g| ideal_member(&g.embed(tg.context(), &order).expect("K names exist"), &tg));
    checks.push(CheckOutcome::new(
        "moduli_contained_in_toric",
        moduli_inside,
        "every moduli basis element lies in the toric ideal",
    ));

    let fiber = special_fiber(net, &tg);
    match &fiber.weights {
        Some(w) => {
            let homog = homogeneity_check(net, &tg, &w.q);
            let agree = ideal_equal(&fiber.fiber_ideal, &mg);
            checks.push(CheckOutcome::new(
                "fiber_coherence",
                homog && agree,
                format!(
                    "weights {:?}: homogeneous = {}, fiber equals moduli = {}",
                    w.q, homog, agree
                ),
            ));
        }
        None => {
            // mixed degrees: the fiber still contains the image of the
            // moduli generators (they are species-free and survive x -> 0)
            let contained = mg.groebner_basis(&order).iter().all(|g| {
                let lifted = g
                    .embed(fiber.fiber_ideal.context(), &order)
                    .expect("same K names");
                ideal_member(&lifted, &fiber.fiber_ideal)
            });
            checks.push(CheckOutcome::new(
                "fiber_coherence",
                contained,
                "mixed degrees: fiber contains the moduli image",
            ));
        }
    }

    report.checks = checks;
    report
}

/// Outcome of re-deriving the invariants after one edge addition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum EdgeCheckResult {
    Unchanged,
    Changed(Vec<String>),
    CrossComponent,
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeInvariance {
    pub from: usize,
    pub to: usize,
    pub result: EdgeCheckResult,
}

impl EdgeInvariance {
    pub fn unchanged(&self) -> bool {
        matches!(self.result, EdgeCheckResult::Unchanged)
    }
}

/// Asserts that adding each proposed intra-component edge leaves the
/// toric ideal, moduli ideal, stoichiometric dimension, and deficiency
/// unchanged. Edges that cross components violate the hypothesis and are
/// reported as such rather than checked.
pub fn edge_invariance_suite(net: &Network, new_edges: &[(usize, usize)]) -> Vec<EdgeInvariance> {
    let component = net.component_of();
    let tg = toric_ideal(net, false).ok();
    let mg = tg.as_ref().map(moduli_ideal_from);
    let dim_s = stoichiometric_dim(net);
    let delta = deficiency(net);

    new_edges
        .iter()
        .map(|&(from, to)| {
            if from >= net.num_vertices() || to >= net.num_vertices() || from == to {
                return EdgeInvariance {
                    from,
                    to,
                    result: EdgeCheckResult::Invalid("bad edge endpoints".to_string()),
                };
            }
            if component[from] != component[to] {
                return EdgeInvariance {
                    from,
                    to,
                    result: EdgeCheckResult::CrossComponent,
                };
            }
            let bigger = match net.add_edge(from, to, None) {
                Ok(n) => n,
                Err(e) => {
                    return EdgeInvariance {
                        from,
                        to,
                        result: EdgeCheckResult::Invalid(e.to_string()),
                    }
                }
            };
            let mut changed = Vec::new();
            if let (Some(tg), Some(mg)) = (&tg, &mg) {
                match toric_ideal(&bigger, false) {
                    Ok(tg2) => {
                        if !ideal_equal(tg, &tg2) {
                            changed.push("toric_ideal".to_string());
                        }
                        let mg2 = moduli_ideal_from(&tg2);
                        if !ideal_equal(mg, &mg2) {
                            changed.push("moduli_ideal".to_string());
                        }
                    }
                    Err(_) => changed.push("toric_ideal".to_string()),
                }
            }
            if stoichiometric_dim(&bigger) != dim_s {
                changed.push("dim_s".to_string());
            }
            if deficiency(&bigger) != delta {
                changed.push("deficiency".to_string());
            }
            EdgeInvariance {
                from,
                to,
                result: if changed.is_empty() {
                    EdgeCheckResult::Unchanged
                } else {
                    EdgeCheckResult::Changed(changed)
                },
            }
        })
        .collect()
}

/// Every absent intra-component directed edge of the network, for
/// exhaustive invariance sweeps on small networks.
pub fn missing_intra_component_edges(net: &Network) -> Vec<(usize, usize)> {
    let present: std::collections::BTreeSet<(usize, usize)> =
        net.edges().iter().map(|e| (e.from, e.to)).collect();
    let mut out = Vec::new();
    for block in net.partition() {
        for &i in block {
            for &j in block {
                if i != j && !present.contains(&(i, j)) {
                    out.push((i, j));
                }
            }
        }
    }
    out
}

fn ideal_strings(i: &Ideal) -> Vec<String> {
    i.groebner_basis(&MonomialOrder::Grevlex)
        .iter()
        .map(ToString::to_string)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::parse_network;

    const EDELSTEIN: &str = "A <-> 2A k12, k21\nA + B <-> C k34, k43\nC <-> B k45, k54\n";
    const TRIANGLE: &str = "2A <-> A + B\nA + B <-> 2B\n2B <-> 2A\n";

    fn net(text: &str) -> Network {
        parse_network(text).unwrap()
    }

    #[test]
    fn stoichiometric_dims() {
        assert_eq!(stoichiometric_dim(&net(EDELSTEIN)), 2);
        assert_eq!(stoichiometric_dim(&net(TRIANGLE)), 1);
        assert_eq!(stoichiometric_dim(&net("A\nB\n")), 0);
    }

    #[test]
    fn deficiencies() {
        assert_eq!(deficiency(&net(EDELSTEIN)), 1);
        assert_eq!(deficiency(&net(TRIANGLE)), 1);
        assert_eq!(deficiency(&net("A <-> B\n")), 0);
    }

    #[test]
    fn cayley_nullities() {
        assert_eq!(cayley_nullity(&net(EDELSTEIN)), 1);
        assert_eq!(cayley_rank(&net(EDELSTEIN)), 4);
        assert_eq!(cayley_nullity(&net(TRIANGLE)), 1);
        assert_eq!(cayley_nullity(&net("A <-> B\n")), 0);
    }

    #[test]
    fn moduli_codimensions() {
        assert_eq!(codim_moduli(&net(EDELSTEIN), false).unwrap(), 1);
        assert_eq!(codim_moduli(&net(TRIANGLE), false).unwrap(), 1);
        assert_eq!(codim_moduli(&net("A\nB\n"), false).unwrap(), 0);
    }

    #[test]
    fn report_fields_for_edelstein() {
        let report = analyze(&net(EDELSTEIN));
        assert_eq!(report.n, 5);
        assert_eq!(report.l, 2);
        assert_eq!(report.s, 3);
        assert_eq!(report.dim_s, 2);
        assert_eq!(report.deficiency, 1);
        assert_eq!(report.cayley_nullity, 1);
        assert_eq!(report.codim_mg, Some(1));
        assert!(report.weakly_reversible);
        assert!(!report.homogeneous_case);
    }

    #[test]
    fn suite_passes_on_paper_networks() {
        for text in [TRIANGLE, EDELSTEIN] {
            let report = consistency_suite(&net(text));
            assert!(
                report.all_checks_pass(),
                "failures: {:?}",
                report
                    .checks
                    .iter()
                    .filter(|c| !c.pass)
                    .collect::<Vec<_>>()
            );
            assert_eq!(report.checks.len(), 9);
        }
    }

    #[test]
    fn suite_reports_non_weak_reversibility() {
        let report = consistency_suite(&net("A -> B\n"));
        assert!(!report.weakly_reversible);
        assert_eq!(report.checks.len(), 1);
        assert!(!report.all_checks_pass());
    }

    #[test]
    fn edelstein_extra_reaction_changes_nothing() {
        let net = net(EDELSTEIN);
        // A + B -> B is the edge from vertex 3 to vertex 5 (1-based)
        let results = edge_invariance_suite(&net, &[(2, 4)]);
        assert_eq!(results.len(), 1);
        assert!(results[0].unchanged());
    }

    #[test]
    fn duplicate_edge_changes_nothing() {
        let net = net(TRIANGLE);
        let results = edge_invariance_suite(&net, &[(0, 1)]);
        assert!(results[0].unchanged());
    }

    #[test]
    fn cross_component_edge_is_flagged_not_checked() {
        let net = net(EDELSTEIN);
        let results = edge_invariance_suite(&net, &[(0, 3)]);
        assert_eq!(results[0].result, EdgeCheckResult::CrossComponent);
    }

    #[test]
    fn exhaustive_missing_edges_on_edelstein() {
        let net = net(EDELSTEIN);
        let missing = missing_intra_component_edges(&net);
        // block {3,4,5} has 6 ordered pairs, 4 present; block {1,2} complete
        assert_eq!(missing.len(), 2);
        let results = edge_invariance_suite(&net, &missing);
        assert!(results.iter().all(EdgeInvariance::unchanged));
    }

    #[test]
    fn report_serializes_to_json() {
        let report = analyze(&net(TRIANGLE));
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["deficiency"], 1);
        assert_eq!(json["weakly_reversible"], true);
        assert_eq!(json["homogeneous_case"], true);
        assert_eq!(json["codim_mg"], 1);
    }
}
