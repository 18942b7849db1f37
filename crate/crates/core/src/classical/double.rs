use super::hopf::{ClassicalHopf, HopfError};
use crate::linalg::Matrix;

/// The Drinfeld double on `H* ⊗ H` (basis `e^f ⊗ e_a` at index `f n + a`)
/// together with its canonical R-matrix `Σ (ε ⊗ e_i) ⊗ (e^i ⊗ 1)`.
///
/// `H*` carries the product dual to `Δ` and the coproduct opposite to the
/// dual of `m`; the two halves commute past each other by
/// `(1⊗a)(f⊗1) = Σ f_1(S^{-1} a_3) f_3(a_1) f_2 ⊗ a_2`.
pub fn drinfeld_double(h: &ClassicalHopf) -> Result<(ClassicalHopf, Matrix), HopfError> {
    let n = h.dim;
    let fl = &h.field;
    let nd = n * n;
    let m3 = h.m.precompose_mid(1, &h.m, n); // n x n^3
    let d3 = h.delta.apply_mid(1, n, &h.delta); // n^3 x n

    // cross[a][k] : n x n matrix indexed (y, a2)
    let mut cross = vec![vec![Matrix::zeros(fl, n, n); n]; n];
    for a in 0..n {
        for idx in 0..n * n * n {
            let da = d3.get(idx, a);
            if fl.is_zero(da) {
                continue;
            }
            let (z, a2, a3) = (idx / (n * n), (idx / n) % n, idx % n);
            for x in 0..n {
                let si = h.s_inv.get(x, a3);
                if fl.is_zero(si) {
                    continue;
                }
                let coef = fl.mul(da, si);
                for (k, cross_ak) in cross[a].iter_mut().enumerate() {
                    for y in 0..n {
                        let mc = m3.get(k, (x * n + y) * n + z);
                        if !fl.is_zero(mc) {
                            cross_ak.add_at(y, a2, &fl.mul(&coef, mc));
                        }
                    }
                }
            }
        }
    }

    // product in H*: (e^i e^j)(e_k) = Δ[(i,j), k]
    let dual_mul = |i: usize, j: usize| Matrix::from_fn(fl, n, 1, |k, _| h.delta.get(i * n + j, k).clone());
    let dual_products: Vec<Vec<Matrix>> = (0..n).map(|i| (0..n).map(|j| dual_mul(i, j)).collect()).collect();
    let h_products: Vec<Vec<Matrix>> = (0..n).map(|i| (0..n).map(|j| h.m.col(i * n + j)).collect()).collect();

    let mut m = Matrix::zeros(fl, nd, nd * nd);
    for f in 0..n {
        for a in 0..n {
            for g in 0..n {
                let cr = &cross[a][g];
                for y in 0..n {
                    for a2 in 0..n {
                        let c = cr.get(y, a2);
                        if fl.is_zero(c) {
                            continue;
                        }
                        let fg = &dual_products[f][y];
                        for b in 0..n {
                            let ab = &h_products[a2][b];
                            let col = (f * n + a) * nd + g * n + b;
                            for p in 0..n {
                                let x = fg.get(p, 0);
                                if fl.is_zero(x) {
                                    continue;
                                }
                                let cx = fl.mul(c, x);
                                for q in 0..n {
                                    let z = ab.get(q, 0);
                                    if !fl.is_zero(z) {
                                        m.add_at(p * n + q, col, &fl.mul(&cx, z));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    let eps_dual = h.eps.transpose();
    let u = eps_dual.kron(&h.u);
    let eps = h.u.transpose().kron(&h.eps);

    // Δ(e^k ⊗ e_a) = Σ m[k,(i,j)] Δ[(p,q),a] (e^j ⊗ e_p) ⊗ (e^i ⊗ e_q)
    let mut delta = Matrix::zeros(fl, nd * nd, nd);
    for k in 0..n {
        for ij in 0..n * n {
            let c = h.m.get(k, ij);
            if fl.is_zero(c) {
                continue;
            }
            let (i, j) = (ij / n, ij % n);
            for a in 0..n {
                for pq in 0..n * n {
                    let d = h.delta.get(pq, a);
                    if fl.is_zero(d) {
                        continue;
                    }
                    let (p, q) = (pq / n, pq % n);
                    delta.add_at((j * n + p) * nd + i * n + q, k * n + a, &fl.mul(c, d));
                }
            }
        }
    }

    // S(f ⊗ a) = (ε ⊗ S a)(f∘S^{-1} ⊗ 1)
    let sinv_t = h.s_inv.transpose();
    let mut s = Matrix::zeros(fl, nd, nd);
    for f in 0..n {
        let fs = sinv_t.col(f);
        for a in 0..n {
            let sa = h.s.col(a);
            let mut acc = Matrix::zeros(fl, nd, 1);
            for b in 0..n {
                let cb = sa.get(b, 0);
                if fl.is_zero(cb) {
                    continue;
                }
                for g in 0..n {
                    let cg = fs.get(g, 0);
                    if fl.is_zero(cg) {
                        continue;
                    }
                    let coef = fl.mul(cb, cg);
                    let cr = &cross[b][g];
                    for y in 0..n {
                        for a2 in 0..n {
                            let c = cr.get(y, a2);
                            if !fl.is_zero(c) {
                                acc.add_at(y * n + a2, 0, &fl.mul(&coef, c));
                            }
                        }
                    }
                }
            }
            for r in 0..nd {
                s.set(r, f * n + a, acc.get(r, 0).clone());
            }
        }
    }

    let d = ClassicalHopf::new(m, u, delta, eps, s)?;
    let rep = d.validate();
    if !rep.passed() {
        let names: Vec<&str> = rep.failures().map(|c| c.id.as_str()).collect();
        return Err(HopfError::ConstructionFailure(format!("double fails {}", names.join(", "))));
    }
    // R = Σ_i (ε ⊗ e_i) ⊗ (e^i ⊗ 1)
    let mut r = Matrix::zeros(fl, nd * nd, 1);
    for i in 0..n {
        for f in 0..n {
            let ef = eps_dual.get(f, 0);
            if fl.is_zero(ef) {
                continue;
            }
            for b in 0..n {
                let ub = h.u.get(b, 0);
                if !fl.is_zero(ub) {
                    r.add_at((f * n + i) * nd + i * n + b, 0, &fl.mul(ef, ub));
                }
            }
        }
    }
    Ok((d, r))
}
