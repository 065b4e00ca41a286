//! Complex Hermite polynomials: exact forms, orthonormality, and a deformed biorthogonal pair.

use ncqm::hermite::{
    deform_matrix_sym, deformed_hermite, dual_deformed_hermite, gauss_inner, gauss_inner_scaled, hermite_nk,
};

fn main() {
    for (n, k) in [(0, 0), (1, 0), (1, 1), (2, 1), (3, 2)] {
        println!("H({n},{k}) = {}", hermite_nk(n, k).pretty());
    }
    let a = hermite_nk(2, 1);
    println!("<H21, H21> = {:?}", gauss_inner_scaled(&a, &a).to_c64());
    println!("<H21, H12> = {:?}", gauss_inner_scaled(&a, &hermite_nk(1, 2)).to_c64());

    let g = deform_matrix_sym(0.75).unwrap();
    let h = deformed_hermite(&g, 1, 1).unwrap();
    println!("deformed H(1,1) = {}", h.pretty());
    for (n, k) in [(1, 1), (0, 2), (2, 0)] {
        let d = dual_deformed_hermite(&g, n, k).unwrap();
        println!("<dual({n},{k}), H(1,1)> = {:.3e}", gauss_inner(&d, &h));
    }
}
