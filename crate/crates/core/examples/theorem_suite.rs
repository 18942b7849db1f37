//! The correspondences between elements and structures on the module
//! category, run on complete sets found by search.

use std::sync::Arc;

use coend::fixtures::{coend_of, cyclic, cyclic_r, vec_ambient};
use coend::internal::{BraidedModules, InternalHopf};
use coend::linalg::{Field, Matrix};
use coend::search::{enumerate, Instance, Kind, SearchSpec, Strategy};
use coend::theorems::{sample_modules, theorem_suite};

fn found(kind: Kind, bm: &BraidedModules) -> Vec<Matrix> {
    let spec = SearchSpec {
        kind,
        instance: Instance::Coend { hopf: bm.hopf.clone(), braided: Some(bm.clone()) },
        strategy: Strategy::AffineThenEnumerate,
    };
    enumerate(&spec).unwrap().into_iter().map(|h| h.element).collect()
}

fn main() {
    let f7 = Field::prime(7).unwrap();
    let c = coend_of(&vec_ambient(&f7));
    let h = Arc::new(InternalHopf::from_classical(&c, &cyclic(&f7, 3)).unwrap());
    let bm = BraidedModules::new(&h, cyclic_r(&f7, 3, &f7.from_i64(2))).unwrap();

    let balanced = found(Kind::Balanced, &bm);
    let pivotal = found(Kind::Pivotal, &bm);
    let ribbon = found(Kind::Ribbon, &bm);
    println!("{} balanced, {} pivotal, {} ribbon", balanced.len(), pivotal.len(), ribbon.len());

    let rep = theorem_suite(&bm, &balanced, &pivotal, &sample_modules(&h), true).unwrap();
    println!("{rep}");
}
