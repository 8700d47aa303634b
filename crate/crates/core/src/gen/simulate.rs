//! Gillespie-style birth-hybridization simulation. Lineages split at total
//! rate proportional to their number and merge pairwise into reticulations
//! at a rate proportional to the number of pairs; a run stops when the
//! target leaf count is reached and is rejected unless the reticulation
//! count comes out exactly as requested.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::gen::GenError;
use crate::network::{clean_up, validate, PhyloNetwork, RawGraph};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HybridizationRate {
    Fixed(f64),
    /// Redrawn uniformly from the interval on every attempt.
    Interval(f64, f64),
}

#[derive(Debug, Clone)]
pub struct GenConfig {
    pub leaves: usize,
    pub reticulations: usize,
    pub speciation_rate: f64,
    pub hybridization: HybridizationRate,
    pub seed: u64,
    pub max_retries: usize,
}

impl GenConfig {
    pub fn new(leaves: usize, reticulations: usize, seed: u64) -> Self {
        GenConfig {
            leaves,
            reticulations,
            speciation_rate: 1.0,
            hybridization: HybridizationRate::Interval(0.0001, 0.4),
            seed,
            max_retries: 10_000,
        }
    }

    fn check(&self) -> Result<(), GenError> {
        if self.leaves < 2 {
            return Err(GenError::InvalidConfig("need at least 2 leaves".into()));
        }
        if self.speciation_rate <= 0.0 {
            return Err(GenError::InvalidConfig(
                "speciation rate must be positive".into(),
            ));
        }
        match self.hybridization {
            HybridizationRate::Fixed(v) if v < 0.0 => {
                return Err(GenError::InvalidConfig(
                    "hybridization rate must be nonnegative".into(),
                ))
            }
            HybridizationRate::Interval(lo, hi) if lo < 0.0 || lo > hi => {
                return Err(GenError::InvalidConfig(
                    "hybridization interval must be nonnegative with lo <= hi".into(),
                ))
            }
            _ => {}
        }
        Ok(())
    }
}

/// Draws networks until one matches the requested `(leaves, reticulations)`
/// exactly. Deterministic for a fixed seed. Returns the network and the
/// hybridization rate of the accepted attempt.
pub fn generate(config: &GenConfig) -> Result<(PhyloNetwork, f64), GenError> {
    config.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.max_retries {
        let nu = match config.hybridization {
            HybridizationRate::Fixed(v) => v,
            HybridizationRate::Interval(lo, hi) => {
                if lo == hi {
                    lo
                } else {
                    rng.random_range(lo..hi)
                }
            }
        };
        if let Some(net) = simulate_once(config, nu, &mut rng) {
            return Ok((net, nu));
        }
    }
    Err(GenError::RetriesExhausted {
        attempts: config.max_retries,
    })
}

fn simulate_once(config: &GenConfig, nu: f64, rng: &mut ChaCha8Rng) -> Option<PhyloNetwork> {
    let target_leaves = config.leaves;
    let target_retics = config.reticulations;
    let lambda = config.speciation_rate;

    let mut raw = RawGraph::new();
    let root = raw.add_vertex("rho");
    // Each open lineage hangs below an existing vertex.
    let mut lineages: Vec<usize> = vec![root];
    let mut retics = 0usize;

    while lineages.len() != target_leaves {
        let n = lineages.len() as f64;
        let spec_propensity = lambda * n;
        let hyb_propensity = nu * n * (n - 1.0) / 2.0;
        let speciate = hyb_propensity <= 0.0
            || rng.random::<f64>() < spec_propensity / (spec_propensity + hyb_propensity);
        if speciate {
            let i = rng.random_range(0..lineages.len());
            let t = raw.add_vertex("");
            raw.add_arc(lineages[i], t);
            lineages[i] = t;
            lineages.push(t);
        } else {
            if retics == target_retics {
                return None; // would overshoot; reject this attempt early
            }
            let i = rng.random_range(0..lineages.len());
            let mut j = rng.random_range(0..lineages.len() - 1);
            if j >= i {
                j += 1;
            }
            let h = raw.add_vertex("");
            raw.add_arc(lineages[i], h);
            raw.add_arc(lineages[j], h);
            let (lo, hi) = (i.min(j), i.max(j));
            lineages.swap_remove(hi);
            lineages.swap_remove(lo);
            lineages.push(h);
            retics += 1;
        }
    }

    for (k, &origin) in lineages.iter().enumerate() {
        let leaf = raw.add_vertex(format!("x{k}"));
        raw.add_arc(origin, leaf);
    }

    // Merges of sibling lineages leave parallel arcs; clean up before
    // validating and only then judge the counts.
    let net = validate(&clean_up(&raw)).ok()?;
    (net.leaf_count() == target_leaves && net.reticulation_count() == target_retics)
        .then_some(net)
}
