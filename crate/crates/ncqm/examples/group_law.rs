//! Group law, inverse and the faithful 8×8 matrix form over exact rationals.

use ncqm::algebra::{bracket, exp, AlgebraElement};
use ncqm::group::{compose, inverse, to_matrix, ExtensionParams, GroupElement};
use ncqm::scalar::rat;

fn main() {
    let p = ExtensionParams::new(rat(1, 1), rat(1, 2), rat(2, 3)).unwrap();
    let g = GroupElement::from_coords([1, 0, 0, 1, 2, 0, -1].map(|v| rat(v, 1)));
    let h = GroupElement::from_coords([0, 1, 0, 0, 1, 3, 1].map(|v| rat(v, 2)));

    let gh = compose(&g, &h, &p);
    println!("g·h   = {}", gh.to_json());
    println!("g⁻¹   = {}", inverse(&g, &p).to_json());
    println!(
        "M(g·h) = M(g)M(h): {}",
        to_matrix(&gh, &p) == &to_matrix(&g, &p) * &to_matrix(&h, &p)
    );

    let x = AlgebraElement::new([0, 0, 0, 1, 0, 0, 0].map(|v| rat(v, 1)));
    let y = AlgebraElement::new([0, 0, 0, 0, 0, 1, 0].map(|v| rat(v, 1)));
    println!("[X4, X6] = {}", bracket(&x, &y, &p).to_json());
    println!("exp(X4) = {}", exp(&x, &p).to_json());
}
