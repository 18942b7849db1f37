//! Constructions valid in any braided rigid category whose objects are
//! finite dimensional spaces and whose duals sit on the dual space with the
//! canonical pairings.

use crate::linalg::{Field, Matrix};
use crate::report::{Report, Witness};

pub trait BraidedRigid {
    type Obj: Clone;

    fn field(&self) -> &Field;
    fn dim(&self, x: &Self::Obj) -> usize;
    fn unit(&self) -> Self::Obj;
    fn tensor(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Obj;
    fn left_dual(&self, x: &Self::Obj) -> Self::Obj;
    fn right_dual(&self, x: &Self::Obj) -> Self::Obj;
    /// `σ_{X,Y}: X ⊗ Y → Y ⊗ X`
    fn braid(&self, x: &Self::Obj, y: &Self::Obj) -> Matrix;
    /// `σ_{X,Y}^{-1}: Y ⊗ X → X ⊗ Y`
    fn braid_inv(&self, x: &Self::Obj, y: &Self::Obj) -> Matrix;
    /// `None` when `f: X → Y` is a morphism of the category.
    fn morphism_witness(&self, f: &Matrix, x: &Self::Obj, y: &Self::Obj) -> Option<Witness>;

    /// Reverse braiding `σ̄_{X,Y} = σ_{Y,X}^{-1}: X ⊗ Y → Y ⊗ X`.
    fn braid_rev(&self, x: &Self::Obj, y: &Self::Obj) -> Matrix {
        self.braid_inv(y, x)
    }
}

/// Canonical pairing `X∨ ⊗ X → 1` (or `X ⊗ X∨ → 1`): `1 x d^2`.
pub fn ev(field: &Field, d: usize) -> Matrix {
    coev(field, d).transpose()
}

/// Canonical copairing `1 → X ⊗ X∨`: `d^2 x 1`.
pub fn coev(field: &Field, d: usize) -> Matrix {
    let mut m = Matrix::zeros(field, d * d, 1);
    for i in 0..d {
        m.set(i * d + i, 0, field.one());
    }
    m
}

/// Evaluations and coevaluations are morphisms; the snake identities hold
/// for the canonical matrices, so this is where a wrong dual action shows.
pub fn duality_report<C: BraidedRigid>(cat: &C, x: &C::Obj) -> Report {
    let f = cat.field();
    let d = cat.dim(x);
    let mut rep = Report::new("duality");
    let one = cat.unit();
    let (l, r) = (cat.left_dual(x), cat.right_dual(x));
    let e = ev(f, d);
    let c = coev(f, d);
    rep.flag("ev_left_morphism", cat.morphism_witness(&e, &cat.tensor(&l, x), &one).is_none(), None);
    rep.flag("coev_left_morphism", cat.morphism_witness(&c, &one, &cat.tensor(x, &l)).is_none(), None);
    rep.flag("ev_right_morphism", cat.morphism_witness(&e, &cat.tensor(x, &r), &one).is_none(), None);
    rep.flag("coev_right_morphism", cat.morphism_witness(&c, &one, &cat.tensor(&r, x)).is_none(), None);
    // (id ⊗ ev)(coev ⊗ id) = id
    let id = Matrix::identity(f, d);
    let snake = e.apply_mid(d, 1, &c.kron(&id));
    rep.equal("snake_left", &snake, &id);
    let snake2 = e.apply_mid(1, d, &id.kron(&c));
    rep.equal("snake_right", &snake2, &id);
    rep
}

/// The Drinfeld morphisms of an object, all as `d x d` matrices under the
/// basis identification of double duals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Drinfeld {
    pub mu: Matrix,
    pub mu_bar: Matrix,
    pub mu_shriek: Matrix,
    pub mu_bar_shriek: Matrix,
}

/// `μ_X = (id ⊗ ev^r_X)(id ⊗ σ_{X∨,X})(coev^r_{X∨} ⊗ id): X → X∨∨`
pub fn drinfeld_mu_only<C: BraidedRigid>(cat: &C, x: &C::Obj) -> Matrix {
    let f = cat.field();
    let d = cat.dim(x);
    let xd = cat.right_dual(x);
    let start = coev(f, d).kron(&Matrix::identity(f, d));
    let braided = cat.braid(&xd, x).apply_mid(d, 1, &start);
    ev(f, d).apply_mid(d, 1, &braided)
}

pub fn drinfeld<C: BraidedRigid>(cat: &C, x: &C::Obj) -> Drinfeld {
    let mu = drinfeld_mu_only(cat, x);
    let mu_bar = mu.inverse().expect("Drinfeld morphism is invertible");
    let xd = cat.right_dual(x);
    let mu_dual = drinfeld_mu_only(cat, &xd);
    let mu_bar_dual = mu_dual.inverse().expect("Drinfeld morphism is invertible");
    Drinfeld { mu, mu_bar, mu_shriek: mu_dual.transpose(), mu_bar_shriek: mu_bar_dual.transpose() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaGamma {
    pub kappa: Matrix,
    pub gamma: Matrix,
    /// `γ` recomputed as `(μ μ^!)` at the double left dual.
    pub gamma_alt: Matrix,
    /// `κ` recomputed as `μ̄^!_{X∨∨} μ_X`.
    pub kappa_alt: Matrix,
}

/// `κ_X = μ_{X∨∨} μ̄^!_X` and `γ_X = (μ^! μ)_X`.
pub fn kappa_gamma<C: BraidedRigid>(cat: &C, x: &C::Obj) -> KappaGamma {
    let dx = drinfeld(cat, x);
    let xdd = cat.right_dual(&cat.right_dual(x));
    let ddx = drinfeld(cat, &xdd);
    let kappa = ddx.mu.mul(&dx.mu_bar_shriek);
    let kappa_alt = ddx.mu_bar_shriek.mul(&dx.mu);
    let gamma = dx.mu_shriek.mul(&dx.mu);
    let lldx = cat.left_dual(&cat.left_dual(x));
    let dl = drinfeld(cat, &lldx);
    KappaGamma { kappa, gamma, gamma_alt: dl.mu.mul(&dl.mu_shriek), kappa_alt }
}

/// Both hexagon identities for the triple `(X, Y, Z)`.
pub fn hexagons<C: BraidedRigid>(cat: &C, x: &C::Obj, y: &C::Obj, z: &C::Obj) -> Report {
    let (dx, dy, dz) = (cat.dim(x), cat.dim(y), cat.dim(z));
    let f = cat.field();
    let mut rep = Report::new("hexagons");
    let s_xy = cat.braid(x, y);
    let s_xz = cat.braid(x, z);
    let s_yz = cat.braid(y, z);
    let id = Matrix::identity(f, dx * dy * dz);
    let lhs = cat.braid(x, &cat.tensor(y, z));
    let rhs = s_xz.apply_mid(dy, 1, &s_xy.apply_mid(1, dz, &id));
    rep.equal("hexagon_1", &lhs, &rhs);
    let lhs2 = cat.braid(&cat.tensor(x, y), z);
    let rhs2 = s_xz.apply_mid(1, dy, &s_yz.apply_mid(dx, 1, &id));
    rep.equal("hexagon_2", &lhs2, &rhs2);
    rep
}

/// Hexagons plus both inverse laws.
pub fn hexagon_report<C: BraidedRigid>(cat: &C, x: &C::Obj, y: &C::Obj, z: &C::Obj) -> Report {
    let f = cat.field();
    let mut rep = hexagons(cat, x, y, z);
    let n = cat.dim(x) * cat.dim(y);
    let s_xy = cat.braid(x, y);
    let inv = cat.braid_inv(x, y);
    rep.equal("inverse", &s_xy.mul(&inv), &Matrix::identity(f, n));
    rep.equal("inverse_other_side", &inv.mul(&s_xy), &Matrix::identity(f, n));
    rep
}

/// `μ_{X⊗Y} = (μ_X ⊗ μ_Y) σ̄_{Y,X} σ̄_{X,Y}`
pub fn balancing_report<C: BraidedRigid>(cat: &C, x: &C::Obj, y: &C::Obj) -> Report {
    let mut rep = Report::new("Drinfeld balancing relation");
    let lhs = drinfeld_mu_only(cat, &cat.tensor(x, y));
    let mx = drinfeld_mu_only(cat, x);
    let my = drinfeld_mu_only(cat, y);
    let rhs = mx.kron(&my).mul(&cat.braid_rev(y, x)).mul(&cat.braid_rev(x, y));
    rep.equal("mu_tensor", &lhs, &rhs);
    rep
}
