//! The base category: finite dimensional right modules over a
//! quasitriangular Hopf algebra `A`.

use std::sync::Arc;

use crate::category::{coev, ev, BraidedRigid};
use crate::classical::{check_r, ClassicalHopf};
use crate::linalg::{Field, Matrix};
use crate::report::{Report, Witness};

#[derive(Debug, thiserror::Error)]
pub enum CategoryError {
    #[error("objects live over different ambient algebras")]
    AmbientMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a module: {0}")]
    NotAModule(String),
    #[error("duality convention failure: {0}")]
    ConventionFailure(String),
    #[error("invalid ambient: {0}")]
    InvalidAmbient(String),
}

/// Ambient quasitriangular Hopf algebra `(A, R)`.
#[derive(Debug)]
pub struct AmbientHopf {
    pub hopf: ClassicalHopf,
    /// `R = R_i ⊗ R^i` as an `n^2 x 1` column.
    pub r: Matrix,
    /// `R^{-1} = (id ⊗ S^{-1}) R`
    pub r_inv: Matrix,
}

impl AmbientHopf {
    pub fn new(hopf: ClassicalHopf, r: Matrix) -> Result<Arc<AmbientHopf>, CategoryError> {
        let n = hopf.dim;
        if r.shape() != (n * n, 1) {
            return Err(CategoryError::DimensionMismatch(format!("R must be {}x1", n * n)));
        }
        let r_inv = hopf.s_inv.apply_mid(n, 1, &r);
        Ok(Arc::new(AmbientHopf { hopf, r, r_inv }))
    }

    /// Like [`AmbientHopf::new`] but refuses data failing any axiom.
    pub fn validated(hopf: ClassicalHopf, r: Matrix) -> Result<Arc<AmbientHopf>, CategoryError> {
        let a = AmbientHopf::new(hopf, r)?;
        let rep = a.validate();
        if !rep.passed() {
            let names: Vec<_> = rep.failures().map(|c| c.id.clone()).collect();
            return Err(CategoryError::InvalidAmbient(names.join(", ")));
        }
        Ok(a)
    }

    pub fn field(&self) -> &Field {
        &self.hopf.field
    }

    pub fn dim(&self) -> usize {
        self.hopf.dim
    }

    /// Hopf axioms, `(R1)`–`(R4)` and `R R^{-1} = 1`.
    pub fn validate(&self) -> Report {
        let mut rep = Report::new("ambient quasitriangular Hopf algebra");
        rep.extend("", self.hopf.validate());
        rep.extend("", check_r(&self.hopf, &self.r));
        rep.equal("R_inverse", &self.hopf.tensor_mul(&self.r, &self.r_inv), &self.hopf.tensor_one());
        rep
    }
}

/// A right `A`-module, stored as the action matrices `ρ_k = (-)·a_k`.
#[derive(Clone, Debug)]
pub struct VObject {
    ambient: Arc<AmbientHopf>,
    dim: usize,
    rho: Arc<Vec<Matrix>>,
}

impl PartialEq for VObject {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ambient, &other.ambient) && self.rho == other.rho
    }
}

impl VObject {
    /// From action matrices; module axioms are checked.
    pub fn new(ambient: &Arc<AmbientHopf>, rho: Vec<Matrix>) -> Result<VObject, CategoryError> {
        let obj = VObject::new_unchecked(ambient, rho)?;
        if let Some(id) = obj.module_defect() {
            return Err(CategoryError::NotAModule(id));
        }
        Ok(obj)
    }

    pub(crate) fn new_unchecked(ambient: &Arc<AmbientHopf>, rho: Vec<Matrix>) -> Result<VObject, CategoryError> {
        let n = ambient.dim();
        if rho.len() != n {
            return Err(CategoryError::DimensionMismatch(format!("{} action matrices for dim A = {n}", rho.len())));
        }
        let d = rho.first().map_or(0, |m| m.rows());
        if rho.iter().any(|m| m.shape() != (d, d)) {
            return Err(CategoryError::DimensionMismatch("action matrices must be square and equal".into()));
        }
        Ok(VObject { ambient: ambient.clone(), dim: d, rho: Arc::new(rho) })
    }

    /// From the action `r: X ⊗ A → X` as a `d x (d n)` matrix.
    pub fn from_action(ambient: &Arc<AmbientHopf>, action: &Matrix) -> Result<VObject, CategoryError> {
        let n = ambient.dim();
        let d = action.rows();
        if action.cols() != d * n {
            return Err(CategoryError::DimensionMismatch(format!("action must be {d}x{}", d * n)));
        }
        let rho = (0..n).map(|k| Matrix::from_fn(ambient.field(), d, d, |r, i| action.get(r, i * n + k).clone())).collect();
        VObject::new(ambient, rho)
    }

    pub fn action_matrix(&self) -> Matrix {
        let n = self.ambient.dim();
        Matrix::from_fn(self.ambient.field(), self.dim, self.dim * n, |r, c| self.rho[c % n].get(r, c / n).clone())
    }

    pub fn regular(ambient: &Arc<AmbientHopf>) -> VObject {
        let h = &ambient.hopf;
        let rho = (0..h.dim).map(|k| h.right_mult(&h.basis(k))).collect();
        VObject::new_unchecked(ambient, rho).unwrap()
    }

    /// The unit object `k` with `A` acting through `ε`.
    pub fn unit(ambient: &Arc<AmbientHopf>) -> VObject {
        let h = &ambient.hopf;
        let rho = (0..h.dim).map(|k| Matrix::from_fn(&h.field, 1, 1, |_, _| h.eps.get(0, k).clone())).collect();
        VObject::new_unchecked(ambient, rho).unwrap()
    }

    /// Direct sum of copies of one-dimensional modules given by characters.
    pub fn from_character(ambient: &Arc<AmbientHopf>, chi: &Matrix) -> Result<VObject, CategoryError> {
        let rho = (0..ambient.dim()).map(|k| Matrix::from_fn(ambient.field(), 1, 1, |_, _| chi.get(0, k).clone())).collect();
        VObject::new(ambient, rho)
    }

    pub fn direct_sum(&self, other: &VObject) -> VObject {
        let f = self.field().clone();
        let (a, b) = (self.dim, other.dim);
        let rho = self
            .rho
            .iter()
            .zip(other.rho.iter())
            .map(|(x, y)| {
                Matrix::from_fn(&f, a + b, a + b, |i, j| match (i < a, j < a) {
                    (true, true) => x.get(i, j).clone(),
                    (false, false) => y.get(i - a, j - a).clone(),
                    _ => f.zero(),
                })
            })
            .collect();
        VObject::new_unchecked(&self.ambient, rho).unwrap()
    }

    pub fn ambient(&self) -> &Arc<AmbientHopf> {
        &self.ambient
    }
    pub fn field(&self) -> &Field {
        self.ambient.field()
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn rho(&self) -> &[Matrix] {
        &self.rho
    }

    /// Action of an arbitrary element `a ∈ A` (an `n x 1` column).
    pub fn act(&self, a: &Matrix) -> Matrix {
        let f = self.field();
        let mut acc = Matrix::zeros(f, self.dim, self.dim);
        for (k, r) in self.rho.iter().enumerate() {
            let c = a.get(k, 0);
            if !f.is_zero(c) {
                acc = acc.add(&r.scale(c));
            }
        }
        acc
    }

    fn module_defect(&self) -> Option<String> {
        let h = &self.ambient.hopf;
        if self.act(&h.one()) != Matrix::identity(self.field(), self.dim) {
            return Some("unitality".into());
        }
        for i in 0..h.dim {
            for j in 0..h.dim {
                let prod = self.act(&h.m.col(i * h.dim + j));
                if prod != self.rho[j].mul(&self.rho[i]) {
                    return Some(format!("associativity at basis pair ({i}, {j})"));
                }
            }
        }
        None
    }

    pub fn same_ambient(&self, other: &VObject) -> Result<(), CategoryError> {
        if Arc::ptr_eq(&self.ambient, &other.ambient) {
            Ok(())
        } else {
            Err(CategoryError::AmbientMismatch)
        }
    }
}

/// The category of right `A`-modules.
#[derive(Clone, Debug)]
pub struct ModA(pub Arc<AmbientHopf>);

impl ModA {
    pub fn regular(&self) -> VObject {
        VObject::regular(&self.0)
    }

    pub fn tensor_obj(&self, x: &VObject, y: &VObject) -> Result<VObject, CategoryError> {
        x.same_ambient(y)?;
        Ok(self.tensor(x, y))
    }

    /// `f ⊗ g`, with `A`-linearity rechecked when `revalidate` is set.
    pub fn tensor_mor(
        &self,
        f: &Matrix,
        g: &Matrix,
        src: (&VObject, &VObject),
        tgt: (&VObject, &VObject),
        revalidate: bool,
    ) -> Result<Matrix, CategoryError> {
        let fg = f.kron(g);
        if revalidate {
            let s = self.tensor_obj(src.0, src.1)?;
            let t = self.tensor_obj(tgt.0, tgt.1)?;
            if let Some(w) = self.morphism_witness(&fg, &s, &t) {
                return Err(CategoryError::NotAModule(format!("tensor of morphisms is not A-linear at ({}, {})", w.row, w.col)));
            }
        }
        Ok(fg)
    }

    /// `∨X` with `ev^l: ∨X ⊗ X → 1` and `coev^l: 1 → X ⊗ ∨X`.
    pub fn left_dual_with_maps(&self, x: &VObject) -> Result<(VObject, Matrix, Matrix), CategoryError> {
        let d = self.left_dual(x);
        let e = ev(x.field(), x.dim());
        let c = coev(x.field(), x.dim());
        let one = self.unit();
        if self.morphism_witness(&e, &self.tensor(&d, x), &one).is_some()
            || self.morphism_witness(&c, &one, &self.tensor(x, &d)).is_some()
        {
            return Err(CategoryError::ConventionFailure("left evaluation or coevaluation is not A-linear".into()));
        }
        Ok((d, e, c))
    }

    /// `X∨` with `ev^r: X ⊗ X∨ → 1` and `coev^r: 1 → X∨ ⊗ X`.
    pub fn right_dual_with_maps(&self, x: &VObject) -> Result<(VObject, Matrix, Matrix), CategoryError> {
        let d = self.right_dual(x);
        let e = ev(x.field(), x.dim());
        let c = coev(x.field(), x.dim());
        let one = self.unit();
        if self.morphism_witness(&e, &self.tensor(x, &d), &one).is_some()
            || self.morphism_witness(&c, &one, &self.tensor(&d, x)).is_some()
        {
            return Err(CategoryError::ConventionFailure("right evaluation or coevaluation is not A-linear".into()));
        }
        Ok((d, e, c))
    }

    fn dual_with(&self, x: &VObject, antipode: &Matrix) -> VObject {
        let rho = (0..self.0.dim()).map(|k| x.act(&antipode.col(k)).transpose()).collect();
        VObject::new_unchecked(&self.0, rho).unwrap()
    }
}

impl BraidedRigid for ModA {
    type Obj = VObject;

    fn field(&self) -> &Field {
        self.0.field()
    }

    fn dim(&self, x: &VObject) -> usize {
        x.dim()
    }

    fn unit(&self) -> VObject {
        VObject::unit(&self.0)
    }

    fn tensor(&self, x: &VObject, y: &VObject) -> VObject {
        let h = &self.0.hopf;
        let f = &h.field;
        let n = h.dim;
        let rho = (0..n)
            .map(|k| {
                let mut acc = Matrix::zeros(f, x.dim() * y.dim(), x.dim() * y.dim());
                for pq in 0..n * n {
                    let c = h.delta.get(pq, k);
                    if !f.is_zero(c) {
                        acc = acc.add(&x.rho[pq / n].kron(&y.rho[pq % n]).scale(c));
                    }
                }
                acc
            })
            .collect();
        VObject::new_unchecked(&self.0, rho).unwrap()
    }

    /// `∨X`: `ξ·a = ξ((-)·S^{-1}(a))`.
    fn left_dual(&self, x: &VObject) -> VObject {
        self.dual_with(x, &self.0.hopf.s_inv)
    }

    /// `X∨`: `ξ·a = ξ((-)·S(a))`.
    fn right_dual(&self, x: &VObject) -> VObject {
        self.dual_with(x, &self.0.hopf.s)
    }

    /// `σ_{X,Y}(x ⊗ y) = Σ y·R_i ⊗ x·R^i`
    fn braid(&self, x: &VObject, y: &VObject) -> Matrix {
        braid_with(&self.0, &self.0.r, y, x).mul(&flip(self.field(), x.dim(), y.dim()))
    }

    /// `σ^{-1}_{X,Y}: Y ⊗ X → X ⊗ Y`, `y ⊗ x ↦ Σ x·R̄^i ⊗ y·R̄_i` with `R̄ = R^{-1}`.
    fn braid_inv(&self, x: &VObject, y: &VObject) -> Matrix {
        let flipped = self.0.hopf.flip(&self.0.r_inv);
        braid_with(&self.0, &flipped, x, y).mul(&flip(self.field(), y.dim(), x.dim()))
    }

    fn morphism_witness(&self, f: &Matrix, x: &VObject, y: &VObject) -> Option<Witness> {
        if f.shape() != (y.dim(), x.dim()) {
            return Witness::between(f, &Matrix::zeros(self.field(), y.dim(), x.dim()));
        }
        for k in 0..self.0.dim() {
            let w = Witness::between(&f.mul(&x.rho[k]), &y.rho[k].mul(f));
            if w.is_some() {
                return w;
            }
        }
        None
    }
}

/// `Σ r[p,q] ρ_P(a_p) ⊗ ρ_Q(a_q)` for an element `r ∈ A ⊗ A`.
fn braid_with(a: &AmbientHopf, r: &Matrix, p: &VObject, q: &VObject) -> Matrix {
    let n = a.dim();
    let f = a.field();
    let mut acc = Matrix::zeros(f, p.dim() * q.dim(), p.dim() * q.dim());
    for k in 0..n * n {
        let c = r.get(k, 0);
        if !f.is_zero(c) {
            acc = acc.add(&p.rho[k / n].kron(&q.rho[k % n]).scale(c));
        }
    }
    acc
}

/// Permutation `X ⊗ Y → Y ⊗ X` of the underlying spaces.
pub fn flip(field: &Field, dx: usize, dy: usize) -> Matrix {
    let mut m = Matrix::zeros(field, dx * dy, dx * dy);
    for i in 0..dx {
        for j in 0..dy {
            m.set(j * dx + i, i * dy + j, field.one());
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{balancing_report, drinfeld, duality_report, hexagon_report, kappa_gamma};
    use crate::fixtures::*;

    fn q() -> Field {
        Field::rationals()
    }

    fn odd_line(a: &Arc<AmbientHopf>) -> VObject {
        VObject::from_character(a, &Matrix::from_i64(a.field(), 1, 2, &[1, -1])).unwrap()
    }

    #[test]
    fn ambients_validate() {
        let f = q();
        for a in [vec_ambient(&f), svec_ambient(&f), sweedler_ambient(&f, &f.from_i64(3)), klein_ambient(&f)] {
            let rep = a.validate();
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn one_tensor_g_is_not_an_r_matrix() {
        let f = q();
        let h = cyclic(&f, 2);
        let r = Matrix::from_i64(&f, 4, 1, &[0, 1, 0, 0]);
        let rep = AmbientHopf::new(h, r).unwrap().validate();
        // (Δ⊗id)(1⊗g) = 1⊗1⊗g but R_i ⊗ R_j ⊗ R^i R^j = 1⊗1⊗g^2
        assert!(!rep.check("R3").unwrap().passed);
        assert!(rep.check("R2").unwrap().passed);
        assert!(!rep.passed());
    }

    #[test]
    fn svec_odd_line() {
        let f = q();
        let a = svec_ambient(&f);
        let cat = ModA(a.clone());
        let l = odd_line(&a);
        let ll = cat.tensor(&l, &l);
        assert_eq!(ll.rho()[1], Matrix::from_i64(&f, 1, 1, &[1]));
        assert_eq!(cat.braid(&l, &l), Matrix::from_i64(&f, 1, 1, &[-1]));
        let d = drinfeld(&cat, &l);
        assert_eq!(d.mu, Matrix::from_i64(&f, 1, 1, &[-1]));
        assert_eq!(kappa_gamma(&cat, &l).gamma, Matrix::identity(&f, 1));
    }

    #[test]
    fn categorical_identities() {
        let f = q();
        for a in [svec_ambient(&f), sweedler_ambient(&f, &f.from_i64(2)), klein_ambient(&f)] {
            let cat = ModA(a.clone());
            let reg = cat.regular();
            let one = cat.unit();
            let objs = [reg.clone(), one.clone(), cat.right_dual(&reg)];
            for x in &objs {
                let rep = duality_report(&cat, x);
                assert!(rep.passed(), "{rep}");
                let kg = kappa_gamma(&cat, x);
                assert_eq!(kg.gamma, kg.gamma_alt);
                assert_eq!(kg.kappa, kg.kappa_alt);
                let d = drinfeld(&cat, x);
                let xdd = cat.right_dual(&cat.right_dual(x));
                assert!(cat.morphism_witness(&d.mu, x, &xdd).is_none());
            }
            let rep = hexagon_report(&cat, &reg, &reg, &one);
            assert!(rep.passed(), "{rep}");
            let rep = hexagon_report(&cat, &reg, &cat.left_dual(&reg), &reg);
            assert!(rep.passed(), "{rep}");
            let rep = balancing_report(&cat, &reg, &reg);
            assert!(rep.passed(), "{rep}");
        }
    }
}
