//! Nondegeneracy of the canonical pairing, against the classical rank of
//! the Drinfeld map.

use std::sync::Arc;

use coend::classical::{drinfeld_double, drinfeld_map_rank};
use coend::fixtures::{coend_of, cyclic, super_r, trivial_r, vec_ambient};
use coend::internal::{factorizability_pairing, BraidedModules, InternalHopf};
use coend::linalg::Field;

fn main() {
    let q = Field::rationals();
    let c = coend_of(&vec_ambient(&q));
    let z2 = cyclic(&q, 2);
    let (double, rd) = drinfeld_double(&z2).unwrap();
    for (name, h, r) in [
        ("D(kZ2)", double, rd),
        ("kZ2, super", z2.clone(), super_r(&q)),
        ("kZ2, trivial", z2.clone(), trivial_r(&z2)),
    ] {
        let hopf = Arc::new(InternalHopf::from_classical(&c, &h).unwrap());
        let fz = factorizability_pairing(&BraidedModules::new(&hopf, r.clone()).unwrap()).unwrap();
        println!(
            "{name}: factorizable {} (pairing rank {} of {}, Drinfeld map rank {})",
            fz.nondegenerate,
            fz.rank,
            fz.dim,
            drinfeld_map_rank(&h, &r)
        );
    }
}
