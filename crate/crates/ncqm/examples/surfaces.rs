//! Point clouds for the det_w = 0 surface, the coupled-boson plane and their intersection.

use ncqm::coadjoint::{points_to_csv, surface_sample, GridAxis, SurfaceKind};
use ncqm::group::ExtensionParams;
use ncqm::scalar::rat;

fn main() {
    let p = ExtensionParams::new(rat(1, 1), rat(1, 1), rat(1, 1)).unwrap();
    let rho = GridAxis {
        lo: rat(-2, 1),
        hi: rat(2, 1),
        n: 5,
    };
    let second = GridAxis {
        lo: rat(-1, 1),
        hi: rat(1, 1),
        n: 5,
    };
    for kind in [
        SurfaceKind::SRhoZeta,
        SurfaceKind::CoupledBoson,
        SurfaceKind::Intersection,
    ] {
        let pts = surface_sample(kind, (&rho, &second), &p, &rat(2, 1)).unwrap();
        println!("{kind:?}: {} points", pts.len());
        print!("{}", points_to_csv(&pts[..pts.len().min(4)]));
    }
}
