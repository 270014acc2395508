//! Scratch measurement of Louvain quality across seeds (not a real test).

use deptflow_core::community::{louvain, UGraph};
use deptflow_testkit as oracle;

#[test]
#[ignore]
fn measure_quality() {
    let mut checked = 0usize;
    let mut violations = Vec::new();
    let mut worst = 1.0f64;
    let mut seed = 0u64;
    while checked < 300 {
        let n = 4 + (seed as usize % 7);
        let g = oracle::gnp_digraph(n, 0.35, seed);
        seed += 1;
        let ug = UGraph::symmetrize(&g);
        if ug.total_weight() <= 0.0 {
            continue;
        }
        let (best_q, _) = oracle::best_modularity(&ug, 1.0);
        let p = louvain(&ug, seed, 1.0).unwrap();
        if best_q > 0.0 {
            let ratio = p.q / best_q;
            if ratio < worst {
                worst = ratio;
            }
            if p.q < 0.95 * best_q - 1e-12 {
                violations.push((seed - 1, ratio));
            }
        } else if p.q < best_q - 1e-12 {
            violations.push((seed - 1, -1.0));
        }
        checked += 1;
    }
    println!("checked {checked}, worst ratio {worst:.4}, violations: {violations:?}");
}
