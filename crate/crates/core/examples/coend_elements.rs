//! Elements `C → H`: convolution, the antipode, and the predicates for
//! grouplike, pivotal, balanced and ribbon elements.

use std::sync::Arc;

use coend::fixtures::{coend_of, exterior_line, svec_ambient};
use coend::internal::BraidedModules;
use coend::linalg::{Field, Matrix};

fn main() {
    let f5 = Field::prime(5).unwrap();
    let c = coend_of(&svec_ambient(&f5));
    let h = Arc::new(exterior_line(&c, true));

    // 1 + θ⊗θ on the carrier, read off from the coend
    let r = {
        let mut r = Matrix::zeros(&f5, 4, 4);
        r.set(0, 0, f5.one());
        r.set(3, 0, f5.one());
        r
    };
    let bm = BraidedModules::new(&h, r).unwrap();
    println!("{}", bm.validate_r());

    let unit = h.conv_unit();
    let d = bm.drinfeld_element().unwrap();
    println!("Drinfeld element 𝔲 =\n{}", d.u);
    assert_eq!(h.conv(&d.u, &d.u_inv), unit);

    let report = h.element_report(&unit, Some(&bm)).unwrap();
    println!("the unit: consistent = {}", report.consistent());
    println!("{}", bm.ribbon_report(&unit).unwrap());
    println!("S(𝔲) =\n{}", h.antipode_elem(&d.u).unwrap());
}
