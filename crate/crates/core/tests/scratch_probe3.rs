use orchardist_core::gen::{generate, GenConfig, HybridizationRate};
use orchardist_core::solver::{solve_bnb, SolveOptions};

fn batch(leaves: usize, retics: usize, seeds: std::ops::Range<u64>, hyb: Option<HybridizationRate>) -> Vec<usize> {
    seeds
        .map(|s| {
            let mut config = GenConfig::new(leaves, retics, s);
            if let Some(h) = hyb {
                config.hybridization = h;
            }
            let (net, _) = generate(&config).expect("gen");
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
fn probe_conventions() {
    summarize("L=20 R=5  resample", &batch(20, 5, 0..300, None));
    summarize("L=20 R=5  nu=0.05 ", &batch(20, 5, 0..300, Some(HybridizationRate::Fixed(0.05))));
    summarize("L=20 R=5  nu=0.15 ", &batch(20, 5, 0..300, Some(HybridizationRate::Fixed(0.15))));
    summarize("L=20 R=5  nu=0.40 ", &batch(20, 5, 0..300, Some(HybridizationRate::Fixed(0.40))));
    summarize("L=50 R=5  resample", &batch(50, 5, 0..200, None));
    summarize("L=20 R=10 resample", &batch(20, 10, 0..300, None));
    summarize("L=50 R=10 resample", &batch(50, 10, 0..100, None));
}
