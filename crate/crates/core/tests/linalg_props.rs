//! Algebraic invariants of the exact scalars and matrices.

use coend::linalg::{Field, Matrix, Scalar};
use proptest::prelude::*;

fn fields() -> Vec<Field> {
    let f3 = Field::prime(3).unwrap();
    let i2_plus_1 = vec![f3.one(), f3.zero(), f3.one()];
    vec![Field::rationals(), Field::prime(7).unwrap(), Field::extension(&f3, i2_plus_1, "i").unwrap()]
}

/// `a + b·g` for the generator `g` of an extension, `a / b` over Q, `a + b` otherwise.
fn scalar(f: &Field, a: i64, b: i64) -> Scalar {
    if let Some(g) = f.generator() {
        return f.add(&f.from_i64(a), &f.mul(&f.from_i64(b), &g));
    }
    match f.characteristic() {
        0 if b != 0 => f.div(&f.from_i64(a), &f.from_i64(b)).unwrap(),
        _ => f.add(&f.from_i64(a), &f.from_i64(b)),
    }
}

fn matrix(f: &Field, rows: usize, cols: usize, vals: &[(i64, i64)]) -> Matrix {
    Matrix::from_fn(f, rows, cols, |i, j| {
        let (a, b) = vals[(i * cols + j) % vals.len()];
        scalar(f, a, b)
    })
}

fn pairs(n: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-4i64..=4, -3i64..=3), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(fi in 0usize..3, x in (-9i64..=9, -5i64..=5), y in (-9i64..=9, -5i64..=5), z in (-9i64..=9, -5i64..=5)) {
        let f = &fields()[fi];
        let (a, b, c) = (scalar(f, x.0, x.1), scalar(f, y.0, y.1), scalar(f, z.0, z.1));
        prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
        if !f.is_zero(&a) {
            prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
        } else {
            prop_assert!(f.inv(&a).is_err());
        }
        prop_assert!(f.check(&a).is_ok());
    }

    #[test]
    fn scalars_print_and_parse_back(fi in 0usize..3, x in (-50i64..=50, -20i64..=20)) {
        let f = &fields()[fi];
        let a = scalar(f, x.0, x.1);
        prop_assert_eq!(f.parse(&f.format(&a)).unwrap(), a);
    }

    #[test]
    fn products_associate_and_kron_mixes(fi in 0usize..3, v in pairs(24)) {
        let f = &fields()[fi];
        let a = matrix(f, 2, 3, &v[0..6]);
        let b = matrix(f, 3, 2, &v[6..12]);
        let c = matrix(f, 2, 2, &v[12..16]);
        let d = matrix(f, 2, 2, &v[16..20]);
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.kron(&c).mul(&b.kron(&d)), a.mul(&b).kron(&c.mul(&d)));
        prop_assert_eq!(a.mul(&b).transpose(), b.transpose().mul(&a.transpose()));
    }

    #[test]
    fn rank_nullity_and_kernels(fi in 0usize..3, rows in 1usize..5, cols in 1usize..6, v in pairs(30), zero_row in any::<bool>()) {
        let f = &fields()[fi];
        let mut m = matrix(f, rows, cols, &v);
        if zero_row {
            m = Matrix::vstack(&[&m, &Matrix::zeros(f, 1, cols)]);
        }
        let kernel = m.nullspace();
        prop_assert_eq!(m.rank() + kernel.len(), cols);
        for k in &kernel {
            prop_assert!(m.mul(k).is_zero());
        }
    }

    #[test]
    fn inverses_and_solves(fi in 0usize..3, n in 1usize..5, v in pairs(25), w in pairs(5)) {
        let f = &fields()[fi];
        let m = matrix(f, n, n, &v);
        let b = matrix(f, n, 1, &w);
        match m.inverse() {
            Ok(inv) => {
                prop_assert!(m.mul(&inv).is_identity());
                prop_assert!(inv.mul(&m).is_identity());
                prop_assert_eq!(m.solve(&b).unwrap().unwrap(), inv.mul(&b));
            }
            Err(_) => prop_assert!(m.rank() < n),
        }
        match m.solve_affine(&b).unwrap() {
            Some(sol) => {
                prop_assert_eq!(m.mul(&sol.particular), b.clone());
                prop_assert_eq!(sol.kernel.len(), n - m.rank());
                for k in &sol.kernel {
                    prop_assert_eq!(m.mul(&sol.particular.add(k)), b.clone());
                }
            }
            None => prop_assert!(Matrix::hstack(&[&m, &b]).rank() > m.rank()),
        }
    }
}
