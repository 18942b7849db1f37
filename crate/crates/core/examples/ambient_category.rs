//! Modules over a quasitriangular Hopf algebra as a braided rigid category:
//! duals, braidings, hexagons and the Drinfeld morphisms.

use coend::ambient::VObject;
use coend::category::{balancing_report, drinfeld, duality_report, hexagon_report, kappa_gamma, BraidedRigid};
use coend::fixtures::{klein_ambient, svec_ambient};
use coend::linalg::{Field, Matrix};

fn main() {
    let q = Field::rationals();

    // super vector spaces: the odd line braids with itself by -1
    let a = svec_ambient(&q);
    let cat = coend::ambient::ModA(a.clone());
    let odd = VObject::from_character(&a, &Matrix::from_i64(&q, 1, 2, &[1, -1])).unwrap();
    println!("σ on odd ⊗ odd:\n{}", cat.braid(&odd, &odd));
    let reg = cat.regular();
    println!("{}", duality_report(&cat, &reg));
    println!("{}", hexagon_report(&cat, &reg, &odd, &reg));

    // a non-symmetric example
    let k = klein_ambient(&q);
    let kc = coend::ambient::ModA(k.clone());
    let x = kc.regular();
    let d = drinfeld(&kc, &x);
    println!("μ on the regular module of the Klein group algebra:\n{}", d.mu);
    let kg = kappa_gamma(&kc, &x);
    println!("κ agrees with its alternative: {}", kg.kappa == kg.kappa_alt);
    println!("{}", balancing_report(&kc, &x, &x));
}
