use std::time::Instant;

use orchardist_core::classes::{is_orchard, l_tb, l_tc};
use orchardist_core::gen::{generate, GenConfig};
use orchardist_core::solver::{brute_force_oracle, solve_bnb, SolveOptions};

#[test]
fn probe_corpus_agreement() {
    let t0 = Instant::now();
    let mut mismatches = 0;
    let mut dist = [0usize; 16];
    for i in 0..200u64 {
        let leaves = 5 + (i % 16) as usize;
        let retics = (i % 9) as usize;
        let config = GenConfig::new(leaves, retics, 1000 + i);
        let (net, _nu) = match generate(&config) {
            Ok(x) => x,
            Err(e) => panic!("gen failure at i={i} (L={leaves}, R={retics}): {e}"),
        };
        let solved = solve_bnb(&net, &SolveOptions::default());
        let oracle = brute_force_oracle(&net, 16, 10).unwrap().unwrap();
        if solved.l_or != oracle.l_or {
            mismatches += 1;
            eprintln!("MISMATCH i={i}: bnb={} oracle={}", solved.l_or, oracle.l_or);
        }
        dist[solved.l_or.min(15)] += 1;
        // zero law
        assert_eq!(solved.l_or == 0, is_orchard(&net).0, "zero law i={i}");
        // sandwich
        assert!(l_tb(&net) <= solved.l_or && solved.l_or <= l_tc(&net), "sandwich i={i}");
    }
    println!("200 instances in {:?}; l_or distribution {:?}", t0.elapsed(), dist);
    assert_eq!(mismatches, 0);
}

#[test]
fn probe_table_quantiles() {
    let t0 = Instant::now();
    for retics in [5usize, 10] {
        let mut values = Vec::new();
        let mut times = Vec::new();
        for i in 0..50u64 {
            let config = GenConfig::new(20, retics, 7000 + 100 * retics as u64 + i);
            let (net, _nu) = generate(&config).expect("generation");
            let solved = solve_bnb(&net, &SolveOptions::default());
            assert!(solved.optimal);
            values.push(solved.l_or);
            times.push(solved.stats.wall.as_secs_f64());
        }
        values.sort();
        times.sort_by(f64::total_cmp);
        let q = |v: &Vec<usize>, p: f64| v[((p * 50.0).ceil() as usize).max(1) - 1];
        println!(
            "R={retics}: l_or quantiles 5/50/95 = {}/{}/{} ; median time {:.4}s ; max {:?}",
            q(&values, 0.05), q(&values, 0.50), q(&values, 0.95),
            times[24], values.last().unwrap()
        );
    }
    println!("total {:?}", t0.elapsed());
}
