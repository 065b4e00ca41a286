//! Evaluating unitary irreducible representations on a Gaussian and checking the group law.

use ncqm::group::{compose, ExtensionParams, GroupElement};
use ncqm::uir::{apply_uir, gaussian, sample_labels};

fn main() {
    let p = ExtensionParams::new(1.3, 0.7, 0.4).unwrap();
    let f = gaussian(vec![0.0, 0.0], 1.0, vec![0.5, -0.5]);
    let g1 = GroupElement::from_coords([0.3, -0.2, 0.1, 0.5, -0.4, 0.2, 0.7]);
    let g2 = GroupElement::from_coords([-0.1, 0.4, 0.6, -0.3, 0.2, 0.9, -0.5]);
    for label in sample_labels() {
        let x: Vec<f64> = [0.25, -0.5][..label.dimension()].to_vec();
        let prod = if label.is_anti() {
            compose(&g2, &g1, &p)
        } else {
            compose(&g1, &g2, &p)
        };
        let lhs = apply_uir(&label, &prod, &p, &f, &x).unwrap();
        let inner = |y: &[f64]| apply_uir(&label, &g2, &p, &f, y).unwrap();
        let rhs = apply_uir(&label, &g1, &p, &inner, &x).unwrap();
        println!(
            "{:<18} U(g1g2)f = {:.6}  |defect| = {:.1e}",
            label.name(),
            lhs,
            (lhs - rhs).norm()
        );
    }
}
