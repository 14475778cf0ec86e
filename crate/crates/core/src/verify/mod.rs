//! Seeded corpora and executable checks of the structural theorems.
//!
//! Every check produces a [`CheckReport`]; a report passes when it has no
//! failures. [`run_suite`] generates a corpus from a [`CorpusConfig`], runs
//! every check over it and over the fixed golden instances, and merges the
//! reports by name.

mod checks;
mod corpus;
pub mod golden;

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::Serialize;

pub use checks::{
    check_bound, check_complex, check_cone_trick, check_field_independence, check_gral_inequalities_localization,
    check_gral_inequalities_polarization, check_highest_vs_graph, check_ideal, check_localization_consistency,
    check_polarization_hh_graph, check_polarization_theorem, check_structure, shifted_localization_violations,
    shifted_polarization_violations,
};
pub use corpus::{generate_corpus, random_complex, random_facets, random_ideal, Corpus, CorpusConfig};

/// Names of all checks, in report order.
pub const CHECK_NAMES: &[&str] = &[
    names::POLARIZATION_THEOREM,
    names::LOCALIZATION_CONSISTENCY,
    names::HIGHEST_VS_GRAPH,
    names::FIELD_INDEPENDENCE,
    names::BOUND,
    names::GRAL_LOCALIZATION,
    names::GRAL_POLARIZATION,
    names::CONE_TRICK,
    names::POLARIZATION_HH_GRAPH,
    names::D_SQUARED,
    names::COMMUTING_SQUARES,
    names::KOSZUL_VS_HOCHSTER,
    names::NON_SQUAREFREE_TOR,
    names::M_TABLE_PATHS,
    names::LINK_FUNCTOR_EXT,
    names::LINK_FUNCTOR_COMPLEX,
    names::GOLDEN_JUMPING_COMPLEX,
    names::GOLDEN_SPECIALIZATION_PAIR,
    names::GOLDEN_RP2,
];

pub mod names {
    pub const POLARIZATION_THEOREM: &str = "polarization_theorem";
    pub const LOCALIZATION_CONSISTENCY: &str = "localization_consistency";
    pub const HIGHEST_VS_GRAPH: &str = "highest_vs_graph";
    pub const FIELD_INDEPENDENCE: &str = "highest_field_independence";
    pub const BOUND: &str = "bound";
    pub const GRAL_LOCALIZATION: &str = "gral_inequalities_localization";
    pub const GRAL_POLARIZATION: &str = "gral_inequalities_polarization";
    pub const CONE_TRICK: &str = "cone_trick";
    pub const POLARIZATION_HH_GRAPH: &str = "polarization_hh_graph";
    pub const D_SQUARED: &str = "d_squared";
    pub const COMMUTING_SQUARES: &str = "commuting_squares";
    pub const KOSZUL_VS_HOCHSTER: &str = "koszul_vs_hochster";
    pub const NON_SQUAREFREE_TOR: &str = "non_squarefree_tor";
    pub const M_TABLE_PATHS: &str = "m_table_paths";
    pub const LINK_FUNCTOR_EXT: &str = "link_functor_ext";
    pub const LINK_FUNCTOR_COMPLEX: &str = "link_functor_complex";
    pub const GOLDEN_JUMPING_COMPLEX: &str = "golden_jumping_complex";
    pub const GOLDEN_SPECIALIZATION_PAIR: &str = "golden_specialization_pair";
    pub const GOLDEN_RP2: &str = "golden_rp2";
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub instances_run: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn new(name: &str) -> Self {
        CheckReport { name: name.to_string(), instances_run: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fail(&mut self, instance: impl ToString, expected: impl ToString, actual: impl ToString) {
        self.failures.push(Failure {
            instance: instance.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    /// Records an equality test.
    pub fn expect_eq<T: PartialEq + core::fmt::Debug>(
        &mut self,
        instance: impl FnOnce() -> String,
        expected: T,
        actual: T,
    ) {
        if expected != actual {
            self.fail(instance(), alloc::format!("{expected:?}"), alloc::format!("{actual:?}"));
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        debug_assert_eq!(self.name, other.name);
        self.instances_run += other.instances_run;
        self.failures.extend(other.failures);
    }
}

/// Collects reports by check name.
#[derive(Clone, Debug, Default)]
pub struct Reports {
    reports: Vec<CheckReport>,
}

impl Reports {
    pub fn new() -> Self {
        Reports::default()
    }

    pub fn get(&mut self, name: &str) -> &mut CheckReport {
        match self.reports.iter().position(|r| r.name == name) {
            Some(k) => &mut self.reports[k],
            None => {
                self.reports.push(CheckReport::new(name));
                self.reports.last_mut().expect("just pushed")
            }
        }
    }

    /// A copy of the named report; empty if the check never ran.
    pub fn report(&self, name: &str) -> CheckReport {
        self.reports.iter().find(|r| r.name == name).cloned().unwrap_or_else(|| CheckReport::new(name))
    }

    pub fn merge(&mut self, other: Reports) {
        for r in other.reports {
            let name = r.name.clone();
            self.get(&name).merge(r);
        }
    }

    /// Reports in [`CHECK_NAMES`] order; unknown names follow, and checks
    /// that never ran are dropped.
    pub fn into_sorted(mut self) -> Vec<CheckReport> {
        self.reports.retain(|r| r.instances_run > 0);
        self.reports.sort_by_key(|r| CHECK_NAMES.iter().position(|n| *n == r.name).unwrap_or(CHECK_NAMES.len()));
        self.reports
    }
}

/// Runs every check on the corpus described by `config` and on the golden
/// instances. An empty field list yields no reports.
pub fn run_suite(config: &CorpusConfig) -> Vec<CheckReport> {
    let mut reports = Reports::new();
    if config.fields.is_empty() {
        return Vec::new();
    }
    let corpus = generate_corpus(config);
    for delta in &corpus.complexes {
        reports.merge(check_complex(delta, &config.fields));
    }
    for ideal in &corpus.ideals {
        reports.merge(check_ideal(ideal, &config.fields));
    }
    reports.merge(golden::check_goldens(&config.fields));
    reports.into_sorted()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use alloc::vec;

    #[test]
    fn empty_fields_give_empty_reports() {
        let config = CorpusConfig { fields: vec![], ..CorpusConfig::default() };
        assert!(run_suite(&config).is_empty());
    }

    #[test]
    fn small_suite_passes_and_is_deterministic() {
        let config = CorpusConfig {
            seed: 7,
            complex_count: 6,
            max_vertices: 4,
            ideal_count: 3,
            max_vars: 3,
            max_exponent: 2,
            fields: vec![FieldSpec::RATIONALS, FieldSpec::new(2).unwrap()],
        };
        let a = run_suite(&config);
        for r in &a {
            assert!(r.passed(), "{r:?}");
        }
        assert_eq!(a, run_suite(&config));
        assert!(a.iter().any(|r| r.name == names::GOLDEN_RP2));
    }
}
