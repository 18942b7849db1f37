//! Writes the sample bundles used by the command line tool.
//!
//! ```text
//! cargo run --example write_bundles -- crates/core/bundles
//! ```

use std::path::PathBuf;
use std::sync::Arc;

use coend::bundle::Bundle;
use coend::classical::drinfeld_double;
use coend::fixtures::*;
use coend::internal::{BraidedModules, InternalHopf};
use coend::linalg::{Field, Matrix};
use coend::search::{enumerate, Instance, Kind, SearchSpec, Strategy};

fn classical_bundle(field: &Field, h: coend::classical::ClassicalHopf, r: Matrix) -> Bundle {
    let c = coend_of(&vec_ambient(field));
    let hopf = Arc::new(InternalHopf::from_classical(&c, &h).unwrap());
    let mut b = Bundle::new(&hopf);
    b.elements.insert("unit".into(), hopf.conv_unit());
    b.r_matrices.insert("R".into(), r.clone());
    let bm = BraidedModules::new(&hopf, r.clone()).unwrap();
    b.elements.insert("drinfeld_inverse".into(), bm.drinfeld_element().unwrap().u_inv);
    b.modules.push(("free".into(), hopf.free_regular()));
    b.classical = Some(h);
    b.classical_r = Some(r);
    b
}

fn first_hit(kind: Kind, bm: &BraidedModules) -> Matrix {
    let spec = SearchSpec {
        kind,
        instance: Instance::Coend { hopf: bm.hopf.clone(), braided: Some(bm.clone()) },
        strategy: Strategy::AffineThenEnumerate,
    };
    enumerate(&spec).unwrap().remove(0).element
}

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "bundles".into()));
    std::fs::create_dir_all(&dir).unwrap();
    let q = Field::rationals();
    let f5 = Field::prime(5).unwrap();
    let mut out: Vec<(&str, Bundle)> = Vec::new();

    // H = 1 over vector spaces
    let c = coend_of(&vec_ambient(&q));
    let one = Arc::new(InternalHopf::trivial(&c));
    let mut b = Bundle::new(&one);
    b.elements.insert("unit".into(), one.conv_unit());
    b.r_matrices.insert("trivial".into(), one.u.kron(&one.u).mul(&c.eps.kron(&c.eps)));
    out.push(("vec_trivial.json", b));

    // the exterior algebra on an odd generator, with a searched R-matrix
    let c = coend_of(&svec_ambient(&f5));
    let ext = Arc::new(exterior_line(&c, true));
    let spec = SearchSpec {
        kind: Kind::RMatrix,
        instance: Instance::Coend { hopf: ext.clone(), braided: None },
        strategy: Strategy::AffineThenEnumerate,
    };
    let r = enumerate(&spec).unwrap().pop().unwrap().element;
    let bm = BraidedModules::new(&ext, r.clone()).unwrap();
    let mut b = Bundle::new(&ext);
    b.r_matrices.insert("R".into(), r);
    b.elements.insert("unit".into(), ext.conv_unit());
    b.elements.insert("ribbon".into(), first_hit(Kind::Ribbon, &bm));
    b.elements.insert("pivotal".into(), first_hit(Kind::Pivotal, &bm));
    b.modules.push(("free".into(), ext.free_regular()));
    out.push(("svec_exterior.json", b));

    // H = C over super vector spaces with the canonical R-matrix
    let c = coend_of(&svec_ambient(&q));
    let hc = Arc::new(InternalHopf::from_coend(&c));
    let mut b = Bundle::new(&hc);
    b.r_matrices.insert("canonical".into(), c.u.mul(&c.eps).kron(&Matrix::identity(&q, c.dim())));
    b.elements.insert("unit".into(), hc.conv_unit());
    // found over F_5; the entries are 0 and ±1
    let m = |v: &[i64]| Matrix::from_i64(&q, 2, 2, v);
    b.elements.insert("identity".into(), m(&[1, 0, 0, 1]));
    b.elements.insert("identity_signed".into(), m(&[1, 0, 0, -1]));
    b.elements.insert("swap".into(), m(&[0, 1, 1, 0]));
    b.elements.insert("unit_signed".into(), m(&[1, 0, -1, 0]));
    out.push(("svec_coend.json", b));

    let (d, rd) = drinfeld_double(&cyclic(&q, 2)).unwrap();
    out.push(("double_z2.json", classical_bundle(&q, d, rd)));
    let z2 = cyclic(&q, 2);
    let r1 = trivial_r(&z2);
    out.push(("z2_triangular.json", classical_bundle(&q, z2, r1)));
    out.push(("sweedler_f5.json", classical_bundle(&f5, sweedler(&f5), sweedler_r(&f5, &f5.from_i64(1)))));
    let f7 = Field::prime(7).unwrap();
    out.push(("z3_f7.json", classical_bundle(&f7, cyclic(&f7, 3), cyclic_r(&f7, 3, &f7.from_i64(2)))));

    for (name, b) in out {
        let path = dir.join(name);
        std::fs::write(&path, b.to_json()).unwrap();
        println!("wrote {}", path.display());
    }
}
