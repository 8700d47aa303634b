use orchardist_core::network::{clean_up, validate, PhyloNetwork, RawGraph};
use orchardist_core::solver::{solve_bnb, SolveOptions};
use orchardist_core::gen::{generate, GenConfig};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn simulate_generative(
    target_leaves: usize,
    target_retics: usize,
    lambda: f64,
    nu: f64,
    rng: &mut ChaCha8Rng,
) -> Option<PhyloNetwork> {
    let mut raw = RawGraph::new();
    let root = raw.add_vertex("rho");
    let mut lineages = vec![root];
    let mut retics = 0usize;
    while lineages.len() != target_leaves {
        let n = lineages.len() as f64;
        let spec = lambda * n;
        let hyb = nu * n * (n - 1.0) / 2.0;
        if hyb <= 0.0 || rng.random::<f64>() < spec / (spec + hyb) {
            let i = rng.random_range(0..lineages.len());
            let t = raw.add_vertex("");
            raw.add_arc(lineages[i], t);
            lineages[i] = t;
            lineages.push(t);
        } else {
            if retics == target_retics {
                return None;
            }
            let i = rng.random_range(0..lineages.len());
            let mut j = rng.random_range(0..lineages.len() - 1);
            if j >= i { j += 1; }
            let pa = raw.add_vertex("");
            let pb = raw.add_vertex("");
            let h = raw.add_vertex("");
            raw.add_arc(lineages[i], pa);
            raw.add_arc(lineages[j], pb);
            raw.add_arc(pa, h);
            raw.add_arc(pb, h);
            lineages[i] = pa;
            lineages[j] = pb;
            lineages.push(h);
            retics += 1;
        }
    }
    for (k, &origin) in lineages.iter().enumerate() {
        let leaf = raw.add_vertex(format!("x{k}"));
        raw.add_arc(origin, leaf);
    }
    let net = validate(&clean_up(&raw)).ok()?;
    (net.leaf_count() == target_leaves && net.reticulation_count() == target_retics).then_some(net)
}

fn batch_generative(leaves: usize, retics: usize, count: u64) -> Vec<usize> {
    (0..count)
        .map(|s| {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            loop {
                let nu = rng.random_range(0.0001..0.4);
                if let Some(net) = simulate_generative(leaves, retics, 1.0, nu, &mut rng) {
                    return solve_bnb(&net, &SolveOptions::default()).l_or;
                }
            }
        })
        .collect()
}

fn batch_merge(leaves: usize, retics: usize, count: u64) -> Vec<usize> {
    (0..count)
        .map(|s| {
            let (net, _) = generate(&GenConfig::new(leaves, retics, s)).expect("gen");
            solve_bnb(&net, &SolveOptions::default()).l_or
        })
        .collect()
}

fn summarize(tag: &str, values: &[usize]) {
    let mut v = values.to_vec();
    v.sort();
    let n = v.len();
    let nonzero = v.iter().filter(|&&x| x > 0).count();
    let q = |p: f64| v[((p * n as f64).ceil() as usize).max(1) - 1];
    println!(
        "{tag}: n={n} nonzero={nonzero} q5/q50/q95 = {}/{}/{} max={}",
        q(0.05), q(0.50), q(0.95), v[n - 1]
    );
}

#[test]
fn probe_generative_dense() {
    summarize("gen L=20 R=20", &batch_generative(20, 20, 100));
    summarize("gen L=20 R=50", &batch_generative(20, 50, 50));
    summarize("gen L=10 R=30", &batch_generative(10, 30, 50));
}

#[test]
fn probe_merge_larger_l() {
    summarize("mrg L=50  R=5", &batch_merge(50, 5, 100));
    summarize("mrg L=100 R=5", &batch_merge(100, 5, 50));
    summarize("mrg L=50  R=10", &batch_merge(50, 10, 100));
}
