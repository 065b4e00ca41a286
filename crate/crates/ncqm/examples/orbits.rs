//! Coadjoint orbit classification, canonical representatives and moves to the origin.

use ncqm::coadjoint::{classify, coadjoint_action, det_w, orbit_representative, solve_to_origin, DualVector};
use ncqm::group::{ExtensionParams, GroupElement};
use ncqm::scalar::rat;

fn main() {
    let p = ExtensionParams::new(rat(1, 1), rat(2, 1), rat(3, 1)).unwrap();
    let points = [
        [0, 0, 0, 0, 1, 1, 2],
        [1, 2, 3, 4, 6, 1, 1],
        [1, 2, 3, 4, 1, 0, 2],
        [1, 2, 3, 4, 0, 0, 5],
        [1, 2, 3, 4, 0, 0, 0],
    ];
    for x in points {
        let f = DualVector::new(x.map(|v| rat(v, 1)));
        let c = classify(&f, &p);
        println!(
            "{x:?}: {} (dim {}), det_w = {}",
            c.family(),
            c.dimension(),
            det_w(&f, &p)
        );
        let rep = orbit_representative(&c, &p);
        println!("  representative {:?}", rep.encode());
        if let Some(g) = solve_to_origin(&f, &p) {
            println!("  K(g)F = {:?}", coadjoint_action(&g, &f, &p).encode());
        }
    }
    let g = GroupElement::from_coords([1, -1, 2, 3, 1, 0, 2].map(|v| rat(v, 3)));
    let f = DualVector::new([1, 2, 3, 4, 6, 1, 1].map(|v| rat(v, 1)));
    println!(
        "class preserved by the action: {}",
        classify(&coadjoint_action(&g, &f, &p), &p) == classify(&f, &p)
    );
}
