//! Ordinary Hopf algebras: R-matrices, the Drinfeld element and the passage
//! between balanced and pivotal elements.

use coend::classical::{check_r, corollary_check, drinfeld_map_rank, drinfeld_u_classical, Candidate};
use coend::fixtures::{cyclic, cyclic_r, sweedler, sweedler_r};
use coend::linalg::Field;

fn main() {
    let q = Field::rationals();
    let h = sweedler(&q);
    let r = sweedler_r(&q, &q.from_i64(1));
    println!("{}", check_r(&h, &r));
    let d = drinfeld_u_classical(&h, &r).unwrap();
    println!("u = {:?}", d.u.to_strings());
    println!("u^-1 = {:?}", d.u_inv.to_strings());

    // the group-like g gives a pivotal element; u^-1 g is then balanced
    let g = h.basis(1);
    let rep = corollary_check(&h, &r, &Candidate::Pivotal(g)).unwrap();
    println!(
        "pivotal g: balanced image {}, p² = q {}, t⁻² = c {}, ribbon {}",
        rep.image_ok, rep.p_squared_eq_q, rep.t_minus2_eq_c, rep.ribbon
    );

    // over F_7 the cyclic group of order 3 has balanced elements that are not ribbon
    let f7 = Field::prime(7).unwrap();
    let z3 = cyclic(&f7, 3);
    let r3 = cyclic_r(&f7, 3, &f7.from_i64(2));
    for k in 0..3 {
        let rep = corollary_check(&z3, &r3, &Candidate::Pivotal(z3.basis(k))).unwrap();
        println!("g^{k}: ribbon {}, criteria agree {}", rep.ribbon, rep.consistent());
    }
    println!("Drinfeld map rank {} of {}", drinfeld_map_rank(&z3, &r3), z3.dim);
}
