//! Commutator tables of every gauge realization, compared with the tabulated values.

use ncqm::scalar::rat;
use ncqm::weyl::{commutator_table, expected_table, gauge_generators, CaseLabel, GaugeCase, GaugeParams};

fn main() {
    // ħ² − 𝓑ϑ = 1/4 keeps the symmetric gauge exact
    let gp = GaugeParams::new(rat(1, 1), rat(3, 4), rat(1, 1)).unwrap();
    for label in CaseLabel::ALL {
        let case = GaugeCase::build(label, gp.clone(), [1, 2, 3, 4].map(|v| rat(v, 1)));
        let gens = gauge_generators(&case).unwrap();
        let table = commutator_table(&gens).unwrap();
        let ok = table.scalars().is_some_and(|s| s == expected_table(&case));
        println!("{:<18} Q1 = {:<28} matches: {ok}", label.name(), gens.q1.pretty());
        println!("{:<18} {}", "", table.to_json());
    }
}
