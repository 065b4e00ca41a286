//! Exact solutions of the master equations behind the induced representations.

use ncqm::group::{ExtensionParams, GroupElement};
use ncqm::scalar::rat;
use ncqm::uir::{solve_master_2d, solve_master_4d};

fn main() {
    let p = ExtensionParams::new(rat(2, 1), rat(1, 3), rat(5, 2)).unwrap();
    let g = GroupElement::from_coords([1, 2, 3, 4, 5, 6, 7].map(|v| rat(v, 4)));
    let four = solve_master_4d(&g, &rat(1, 2), &rat(-3, 1), &p).unwrap();
    println!("4d section: {}", four.to_json());
    let two = solve_master_2d(&g, &rat(7, 5), &p).unwrap();
    println!("2d section: {}", two.to_json());
}
