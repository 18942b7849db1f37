//! The correspondence theorems as checks on concrete data: pivotal elements
//! versus pivotal structures, balanced elements versus twists, the bijection
//! `𝔱 ↦ 𝔱 ∗ 𝔲` and the two ribbon criteria.

use crate::elements::ElementError;
use crate::internal::{BraidedModules, HModule, InternalHopf};
use crate::linalg::Matrix;
use crate::report::Report;

fn sorted(mut v: Vec<Matrix>) -> Vec<Matrix> {
    v.sort_by(|a, b| a.data().cmp(b.data()));
    v.dedup();
    v
}

/// Trivial module, `F(A)`, its right dual and the regular `A`-module with
/// trivial `H`-action.
pub fn sample_modules(h: &InternalHopf) -> Vec<HModule> {
    let fa = h.free_regular();
    vec![h.trivial_module(), fa.clone(), h.hmod_right_dual(&fa), h.trivial_on(&h.cat().regular())]
}

/// Each pivotal element gives an `H`-linear monoidal `φ_M: M → M∨∨` on every
/// module, and factorizing `φ_{F(A)}` returns the element.
pub fn pivotal_correspondence(h: &InternalHopf, pivotal: &[Matrix], modules: &[HModule]) -> Report {
    let mut rep = Report::new("pivotal elements and pivotal structures");
    let fa = h.free_regular();
    for (i, p) in pivotal.iter().enumerate() {
        for (j, m) in modules.iter().enumerate() {
            let r = h.pivotal_structure_from_element(p, m);
            rep.flag(&format!("structure[{i}].module[{j}]"), r.is_ok(), r.err().map(|e| e.to_string()));
        }
        let back = h.pivotal_candidate(p, &fa).and_then(|phi| h.element_from_pivotal_structure(&phi));
        rep.flag(&format!("round_trip[{i}]"), back.as_ref().ok() == Some(p), None);
    }
    rep
}

/// Each balanced element gives a twist on every module, factorizing the
/// twist of `F(A)` returns it, and the twist is self-dual
/// (`θ_{M∨} = θ_M^*`) exactly when the element is ribbon.
pub fn ribbon_correspondence(bm: &BraidedModules, balanced: &[Matrix], modules: &[HModule]) -> Result<Report, ElementError> {
    let h = &bm.hopf;
    let mut rep = Report::new("balanced elements and twists");
    let fa = h.free_regular();
    for (i, t) in balanced.iter().enumerate() {
        let mut self_dual = true;
        for (j, m) in modules.iter().enumerate() {
            let r = bm.twist_from_element(t, m);
            rep.flag(&format!("twist[{i}].module[{j}]"), r.is_ok(), r.as_ref().err().map(|e| e.to_string()));
            if let Ok(theta) = r {
                self_dual &= h.apply_element(t, &h.hmod_right_dual(m))? == theta.transpose();
            }
        }
        let back = bm.element_from_twist(&h.apply_element(t, &fa)?);
        rep.flag(&format!("round_trip[{i}]"), back.as_ref().ok() == Some(t), None);
        let ribbon = bm.ribbon_report(t)?.passed();
        rep.flag(
            &format!("self_dual_iff_ribbon[{i}]"),
            self_dual == ribbon,
            Some(format!("self-dual {self_dual}, ribbon {ribbon}")),
        );
    }
    Ok(rep)
}

/// `𝔱 ↦ 𝔱 ∗ 𝔲` sends balanced elements to pivotal ones and `𝔭 ↦ 𝔭 ∗ 𝔲̄`
/// goes back. When both lists are complete the image must be exactly the
/// pivotal list.
pub fn balanced_pivotal_bijection(
    bm: &BraidedModules,
    balanced: &[Matrix],
    pivotal: &[Matrix],
    complete: bool,
) -> Result<Report, ElementError> {
    let h = &bm.hopf;
    let d = bm.drinfeld_element()?;
    let mut rep = Report::new("balanced to pivotal");
    if complete {
        let image = sorted(balanced.iter().map(|t| h.conv(t, &d.u)).collect());
        rep.flag(
            "image_is_pivotal_set",
            image == sorted(pivotal.to_vec()),
            Some(format!("{} balanced, {} pivotal", balanced.len(), pivotal.len())),
        );
        let back = sorted(pivotal.iter().map(|p| h.conv(p, &d.u_inv)).collect());
        rep.flag("inverse_image_is_balanced_set", back == sorted(balanced.to_vec()), None);
    }
    for (i, t) in balanced.iter().enumerate() {
        let p = h.conv(t, &d.u);
        rep.flag(&format!("pivotal_image[{i}]"), h.pivotal_report(&p).passed(), None);
        rep.flag(&format!("returns[{i}]"), h.conv(&p, &d.u_inv) == *t, None);
    }
    for (i, p) in pivotal.iter().enumerate() {
        rep.flag(&format!("balanced_preimage[{i}]"), bm.balanced_report(&h.conv(p, &d.u_inv))?.passed(), None);
    }
    Ok(rep)
}

/// For every balanced element: ribbon exactly when `𝔭² = 𝔮_μ`, exactly when
/// `𝔱⁻² = 𝔠_μ`.
pub fn ribbon_criteria(bm: &BraidedModules, balanced: &[Matrix]) -> Result<Report, ElementError> {
    let mut rep = Report::new("ribbon criteria");
    for (i, t) in balanced.iter().enumerate() {
        let b = bm.bal_piv_check(t)?;
        rep.flag(
            &format!("criteria[{i}]"),
            b.consistent(),
            Some(format!("ribbon {}, p^2 = q {}, t^-2 = c {}", b.ribbon, b.p_squared_eq_q, b.t_minus2_eq_c)),
        );
    }
    Ok(rep)
}

/// All four checks; `complete` says the lists hold every element of their kind.
pub fn theorem_suite(
    bm: &BraidedModules,
    balanced: &[Matrix],
    pivotal: &[Matrix],
    modules: &[HModule],
    complete: bool,
) -> Result<Report, ElementError> {
    let mut rep = Report::new("theorems");
    rep.extend("pivotal.", pivotal_correspondence(&bm.hopf, pivotal, modules));
    rep.extend("ribbon.", ribbon_correspondence(bm, balanced, modules)?);
    rep.extend("bijection.", balanced_pivotal_bijection(bm, balanced, pivotal, complete)?);
    rep.extend("criteria.", ribbon_criteria(bm, balanced)?);
    Ok(rep)
}
