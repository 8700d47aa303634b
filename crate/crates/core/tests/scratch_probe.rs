use std::time::Instant;

use orchardist_core::gen::{reduce_vertex_cover, tight_family, CubicGraph};
use orchardist_core::solver::{brute_force_oracle, solve_bnb, SolveOptions, DEFAULT_GUARD};

#[test]
fn probe_tight_family() {
    for k in 2..=5 {
        let net = tight_family(k);
        let t0 = Instant::now();
        let oracle = brute_force_oracle(&net, 16, DEFAULT_GUARD).unwrap().unwrap();
        let t1 = Instant::now();
        let solved = solve_bnb(&net, &SolveOptions::default());
        println!(
            "k={k}: oracle={} ({:?}), solve={} ({:?}, {} nodes)",
            oracle.l_or,
            t1 - t0,
            solved.l_or,
            solved.stats.wall,
            solved.stats.nodes
        );
        assert_eq!(oracle.l_or, k - 1);
        assert_eq!(solved.l_or, k - 1);
    }
}

#[test]
fn probe_k4() {
    let net = reduce_vertex_cover(&CubicGraph::k4()).unwrap();
    let solved = solve_bnb(&net, &SolveOptions::default());
    println!(
        "K4: l_or={} ({:?}, {} nodes), optimal={}",
        solved.l_or, solved.stats.wall, solved.stats.nodes, solved.optimal
    );
    assert_eq!(solved.l_or, 3);
}

#[test]
fn probe_prism() {
    let net = reduce_vertex_cover(&CubicGraph::prism()).unwrap();
    let solved = solve_bnb(&net, &SolveOptions::default());
    println!(
        "prism: l_or={} ({:?}, {} nodes), optimal={}",
        solved.l_or, solved.stats.wall, solved.stats.nodes, solved.optimal
    );
    assert_eq!(solved.l_or, 4);
}

#[test]
fn probe_k33() {
    let net = reduce_vertex_cover(&CubicGraph::k33()).unwrap();
    let solved = solve_bnb(&net, &SolveOptions::default());
    println!(
        "K33: l_or={} ({:?}, {} nodes), optimal={}",
        solved.l_or, solved.stats.wall, solved.stats.nodes, solved.optimal
    );
    assert_eq!(solved.l_or, 3);
}
