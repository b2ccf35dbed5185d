//! Build the double of a perm bialgebra, equip it with the canonical
//! tensor r = Σ e_i ⊗ e_i*, and verify the induced structure.
//!
//! Run with: cargo run --example double_construction

use permbialg::bialgebra::{classify, PermBialgebra, PermCoalgebra};
use permbialg::catalog;
use permbialg::double::{build_double, canonical_r, double_iso};
use permbialg::tensor::pybe_defect;

fn main() {
    let base = catalog::nilp2();
    let b = PermBialgebra::new(base, PermCoalgebra::zero(2)).unwrap();
    let double = build_double(&b).unwrap();

    println!(
        "double of (nilp2, trivial coproduct): dim {}, basis {:?}",
        double.total.dim(),
        double.total.labels()
    );
    println!("nonzero products:");
    for (i, j, k, c) in double.total.entries() {
        let ls = double.total.labels();
        println!("  {}·{} ∋ {c}·{}", ls[i], ls[j], ls[k]);
    }
    println!(
        "perm axioms on the double: {}",
        if double.total.perm_axiom_defects().is_empty() { "hold" } else { "FAIL" }
    );

    let r = canonical_r(2);
    println!(
        "canonical tensor r = e1⊗e1* + e2⊗e2*: Yang-Baxter defect {}",
        if pybe_defect(&double.total, &r).unwrap().is_zero() { "zero" } else { "nonzero" }
    );
    println!(
        "classification of (double, r): {}",
        classify(&double.total, &r).unwrap()
    );

    // The isomorphism φ: A ⊕ A* → A ⊕ A with φ(a) = (a,a),
    // φ(a*) = (T_r a*, T_{σ(r)} a*).
    let iso = double_iso(&double.total, &r).unwrap();
    println!(
        "φ onto the direct sum: invertible = {}, homomorphism defects = {}",
        iso.invertible,
        iso.hom_defects.len()
    );
    println!("φ matrix:\n{}", iso.phi);
}
