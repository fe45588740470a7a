use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sizes, seeds and counts for a verification run. Loaded from a flat TOML
/// file; every key is optional and falls back to [`CorpusSpec::default`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusSpec {
    pub seed: u64,
    /// Every connected graph up to this order joins the base corpus.
    pub exhaustive_max_n: usize,
    /// Seeded random connected graphs added to the base corpus.
    pub random_graphs: usize,
    pub random_orders: Vec<usize>,
    pub edge_probabilities: Vec<f64>,
    /// Oracle walks have at most `2n + walk_budget_extra` edges; results
    /// must already agree at `2n`.
    pub walk_budget_extra: usize,
    pub factor_min_order: usize,
    pub factor_max_order: usize,
    /// Applicable instances per product interval check.
    pub interval_instances: usize,
    /// Factor pairs per product invariant check.
    pub invariant_pairs: usize,
    pub gcorona_instances: usize,
    pub bound_pairs: usize,
    pub chain_max_n: usize,
    pub hull_instances: usize,
    pub hull_max_order: usize,
    /// Sampling gives up after `count * attempts_per_instance` draws.
    pub attempts_per_instance: usize,
    /// Largest product on which exact invariants are searched.
    pub max_product_order: usize,
    /// Record per-verdict runtimes. Off by default so that reports are
    /// byte-identical across runs.
    pub timing: bool,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            seed: 0x5eed,
            exhaustive_max_n: 6,
            random_graphs: 300,
            random_orders: vec![7, 8],
            edge_probabilities: vec![0.25, 0.4, 0.6],
            walk_budget_extra: 2,
            factor_min_order: 3,
            factor_max_order: 5,
            interval_instances: 200,
            invariant_pairs: 30,
            gcorona_instances: 12,
            bound_pairs: 20,
            chain_max_n: 5,
            hull_instances: 1000,
            hull_max_order: 8,
            attempts_per_instance: 50,
            max_product_order: 40,
            timing: false,
        }
    }
}

/// Largest graph handed to the walk oracle.
const ORACLE_MAX_ORDER: usize = 8;
/// Largest fiber used by the fixed product factors (the two-clique bridge
/// on 7 vertices).
const FIXED_FACTOR_ORDER: usize = 7;

impl CorpusSpec {
    pub fn from_toml(text: &str) -> Result<CorpusSpec> {
        let spec: CorpusSpec = toml::from_str(text).map_err(|e| Error::Spec(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn load(path: &Path) -> Result<CorpusSpec> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Spec(format!("{}: {e}", path.display())))?;
        CorpusSpec::from_toml(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("spec fields are plain values")
    }

    /// Rejects sizes the exact searches and the oracle cannot handle.
    pub fn validate(&self) -> Result<()> {
        let infeasible = |msg: String| Err(Error::Infeasible(msg));
        if self.exhaustive_max_n > 7 {
            return infeasible(format!(
                "exhaustive_max_n = {} exceeds 7 (oracle cross-checks on every graph)",
                self.exhaustive_max_n
            ));
        }
        if self.random_orders.is_empty() && self.random_graphs > 0 {
            return Err(Error::Spec("random_orders is empty".into()));
        }
        if let Some(&n) = self.random_orders.iter().find(|&&n| n == 0 || n > ORACLE_MAX_ORDER) {
            return infeasible(format!("random order {n} outside 1..={ORACLE_MAX_ORDER}"));
        }
        if self.edge_probabilities.is_empty() {
            return Err(Error::Spec("edge_probabilities is empty".into()));
        }
        if let Some(p) = self.edge_probabilities.iter().find(|p| !(**p > 0.0 && **p <= 1.0)) {
            return Err(Error::Spec(format!("edge probability {p} outside (0, 1]")));
        }
        if self.factor_min_order < 3 || self.factor_min_order > self.factor_max_order {
            return Err(Error::Spec(format!(
                "factor orders {}..={} must satisfy 3 <= min <= max",
                self.factor_min_order, self.factor_max_order
            )));
        }
        let lex = self.factor_max_order * self.factor_max_order.max(FIXED_FACTOR_ORDER);
        let corona = self.factor_max_order * (1 + self.factor_max_order.max(FIXED_FACTOR_ORDER));
        let worst = lex.max(corona);
        if worst > self.max_product_order {
            return infeasible(format!(
                "products of up to {worst} vertices exceed max_product_order = {}",
                self.max_product_order
            ));
        }
        if self.max_product_order > 64 {
            return infeasible(format!("max_product_order = {} exceeds 64", self.max_product_order));
        }
        if self.chain_max_n > 6 {
            return infeasible(format!("chain_max_n = {} exceeds 6 (all subsets of all graphs)", self.chain_max_n));
        }
        if self.hull_max_order < 2 || self.hull_max_order > 32 {
            return Err(Error::Spec(format!("hull_max_order = {} outside 2..=32", self.hull_max_order)));
        }
        if self.attempts_per_instance == 0 {
            return Err(Error::Spec("attempts_per_instance must be positive".into()));
        }
        Ok(())
    }
}
