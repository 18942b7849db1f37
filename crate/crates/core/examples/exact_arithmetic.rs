//! Exact scalars over Q, a prime field and an extension, and the matrix
//! routines everything else is built on.

use coend::linalg::{Field, Matrix};

fn main() {
    let q = Field::rationals();
    let third = q.parse("-1/3").unwrap();
    let x = q.mul(&third, &q.from_i64(6));
    println!("over {q}: (-1/3)·6 = {}", q.format(&x));

    let f7 = Field::prime(7).unwrap();
    let half = f7.inv(&f7.from_i64(2)).unwrap();
    println!("over {f7}: 1/2 = {}", f7.format(&half));

    // F_9 as F_3[i] / (i² + 1)
    let f3 = Field::prime(3).unwrap();
    let f9 = Field::extension(&f3, vec![f3.one(), f3.zero(), f3.one()], "i").unwrap();
    let i = f9.generator().unwrap();
    let z = f9.add(&f9.one(), &i);
    println!("over {f9}: (1+i)^-1 = {}, i^2 = {}", f9.format(&f9.inv(&z).unwrap()), f9.format(&f9.mul(&i, &i)));

    let m = Matrix::from_i64(&q, 3, 3, &[2, 1, 0, 1, 2, 1, 0, 1, 2]);
    let inv = m.inverse().unwrap();
    println!("M =\n{m}\nM^-1 =\n{inv}");
    assert!(m.mul(&inv).is_identity());

    let singular = Matrix::from_i64(&q, 2, 3, &[1, 2, 3, 2, 4, 6]);
    println!("rank {} with kernel of dimension {}", singular.rank(), singular.nullspace().len());

    let b = Matrix::from_i64(&q, 2, 1, &[1, 2]);
    let sol = singular.solve_affine(&b).unwrap().expect("consistent");
    println!("particular solution\n{}and {} kernel directions", sol.particular, sol.kernel.len());

    let k = Matrix::identity(&q, 2).kron(&Matrix::from_i64(&q, 1, 2, &[1, -1]));
    println!("I ⊗ (1 -1) =\n{k}");
}
