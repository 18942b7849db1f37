//! Searching a finite field for every element of a kind: linear axioms are
//! solved first, the rest is scanned, and the brute-force oracle agrees.

use std::sync::Arc;

use coend::fixtures::{coend_of, exterior_line, svec_ambient};
use coend::internal::BraidedModules;
use coend::linalg::Field;
use coend::search::{enumerate, linearize, oracle_enumerate_all, Instance, Kind, SearchSpec, Strategy};

fn main() {
    let f5 = Field::prime(5).unwrap();
    let c = coend_of(&svec_ambient(&f5));
    let h = Arc::new(exterior_line(&c, true));

    let spec = SearchSpec {
        kind: Kind::RMatrix,
        instance: Instance::Coend { hopf: h.clone(), braided: None },
        strategy: Strategy::AffineThenEnumerate,
    };
    let sys = linearize(&spec).unwrap();
    println!(
        "R-matrices: {} parameters, {} free directions after {:?}; residual {:?}",
        sys.parameter_dim,
        sys.directions.len(),
        sys.linear_axioms,
        sys.residual_axioms
    );
    let rs = enumerate(&spec).unwrap();
    println!("{} R-matrices", rs.len());

    let bm = BraidedModules::new(&h, rs[0].element.clone()).unwrap();
    for kind in [Kind::Grouplike, Kind::Pivotal, Kind::Balanced, Kind::Ribbon] {
        let spec = SearchSpec {
            kind,
            instance: Instance::Coend { hopf: h.clone(), braided: Some(bm.clone()) },
            strategy: Strategy::AffineThenEnumerate,
        };
        let fast = enumerate(&spec).unwrap();
        let slow = oracle_enumerate_all(&spec).unwrap();
        let same = fast.iter().map(|x| &x.element).eq(slow.iter().map(|x| &x.element));
        println!("{kind}: {} found, oracle agrees: {same}", fast.len());
    }
}
