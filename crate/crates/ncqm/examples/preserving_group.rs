//! The matrix group preserving the commutation relations: the Landau to symmetric
//! map, random members and their symplectic images.

use ncqm::gauge::{
    form_error, induced_form, is_ncqm_preserving, landau_to_sym, random_preserving, to_sp4, transform_generators,
};
use ncqm::scalar::rat;
use ncqm::weyl::{gauge_generators, GaugeCase, GaugeParams};

fn main() {
    let gp = GaugeParams::new(rat(1, 1), rat(3, 4), rat(1, 1)).unwrap();
    let m = landau_to_sym(&gp).unwrap();
    println!(
        "Landau -> symmetric: {:?}",
        m.rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>()
    );
    println!("preserves: {}", is_ncqm_preserving(&m, &gp).unwrap());
    let landau = gauge_generators(&GaugeCase::Landau(gp.clone())).unwrap();
    let sym = gauge_generators(&GaugeCase::SymmetricGauge(gp.clone())).unwrap();
    println!(
        "maps Landau generators to symmetric ones: {}",
        transform_generators(&m, &landau).unwrap() == sym
    );

    let j = induced_form(&gp.to_f64()).unwrap();
    for seed in 0..3 {
        let r = random_preserving(&gp.to_f64(), seed).unwrap();
        println!(
            "seed {seed}: J-form error of the Sp(4) image {:.1e}",
            form_error(&to_sp4(&r, &gp.to_f64()).unwrap(), &j)
        );
    }
}
