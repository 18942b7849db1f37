//! Hopf algebras inside a braided category, their modules, tensor products
//! and duals.

use coend::fixtures::{coend_of, exterior_line, svec_ambient};
use coend::internal::InternalHopf;
use coend::linalg::Field;

fn main() {
    let q = Field::rationals();
    let c = coend_of(&svec_ambient(&q));

    let ext = exterior_line(&c, true);
    println!("exterior line on an odd generator: {}", ext.validate());

    // with an even generator the braided bialgebra axiom fails
    let even = exterior_line(&c, false);
    let rep = even.validate();
    println!("even generator passes: {}", rep.passed());
    for f in rep.failures() {
        println!("  fails {}", f.id);
    }

    let h = InternalHopf::from_coend(&c);
    let free = h.free_regular();
    let dual = h.hmod_right_dual(&free);
    let both = h.hmod_tensor(&free, &dual);
    println!(
        "coend as H: free module of dimension {}, its dual {}, tensor {}; all modules: {}",
        free.dim(),
        dual.dim(),
        both.dim(),
        [&free, &dual, &both].iter().all(|m| h.module_report(m).passed())
    );
}
