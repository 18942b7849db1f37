//! The coend of a module category, its derived Hopf structure, and the
//! universal property through factorization.

use coend::coend::CoendData;
use coend::fixtures::{svec_ambient, sweedler_ambient};
use coend::linalg::{Field, Matrix};

fn main() {
    let q = Field::rationals();
    let c = CoendData::build(&svec_ambient(&q)).unwrap();
    println!("coend of super vector spaces: dimension {}", c.dim());
    println!("m =\n{}", c.m);
    println!("Δ =\n{}", c.delta);
    println!("S =\n{}", c.s);
    println!("ω =\n{}", c.omega);
    let rep = c.validate();
    println!("{} checks, passed: {}", rep.checks.len(), rep.passed());

    // any f: C → D is recovered from its component on the regular module
    let sw = CoendData::build(&sweedler_ambient(&q, &q.from_i64(1))).unwrap();
    let reg = sw.cat.regular();
    let f = Matrix::from_i64(&q, 2, sw.dim(), &[1, 0, 2, -1, 0, 3, 1, 1]);
    let component = sw.sigma1(&f, &reg);
    assert_eq!(sw.factorize1(&component).unwrap(), f);
    println!("Sweedler coend: dimension {}, factorize1 recovers f", sw.dim());
}
