//! Runs every acceptance criterion for a few seeds and prints the summary.

use ncqm::verify::{run_suite, Suite};

fn main() {
    let seeds: Vec<u64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    for seed in if seeds.is_empty() { vec![0] } else { seeds } {
        for r in run_suite(Suite::All, seed) {
            println!(
                "seed {seed} criterion {:>2} {:<22} {}",
                r.id,
                r.name,
                if r.pass { "PASS" } else { "FAIL" }
            );
            if !r.pass {
                println!("  {}", r.details);
            }
        }
    }
}
