//! Classify 2-tensors as quasi-triangular, triangular, factorizable, or
//! not a coboundary solution at all.
//!
//! Run with: cargo run --example classification

use permbialg::bialgebra::classify;
use permbialg::catalog;
use permbialg::perm::PermAlgebra;
use permbialg::scalar::Scalar;
use permbialg::tensor::{pybe_defect, rad_invariance_defect, TwoTensor};

fn show(name: &str, alg: &PermAlgebra, r: &TwoTensor) {
    let class = classify(alg, r).unwrap();
    let yb = pybe_defect(alg, r).unwrap();
    let inv = rad_invariance_defect(alg, &r.sub(&r.twist())).unwrap();
    println!(
        "{name}: {class}  (Yang-Baxter defect {}, skew-part invariance defects {})",
        if yb.is_zero() { "zero" } else { "nonzero" },
        inv.len()
    );
}

fn main() {
    let lperm2 = catalog::lperm2();
    let nilp2 = catalog::nilp2();
    let zero2 = PermAlgebra::zero(2);

    show("lperm2, r = 0", &lperm2, &TwoTensor::zero(2));
    show("lperm2, r = e1⊗e1", &lperm2, &TwoTensor::basis(2, 0, 0));
    show("lperm2, r = e2⊗e1", &lperm2, &TwoTensor::basis(2, 1, 0));
    show(
        "lperm2, r = e1⊗e1 + e2⊗e2",
        &lperm2,
        &TwoTensor::from_entries(2, &[(0, 0, Scalar::one()), (1, 1, Scalar::one())]).unwrap(),
    );
    show("nilp2, r = e1⊗e2", &nilp2, &TwoTensor::basis(2, 0, 1));
    show(
        "zero(2), r = e1⊗e2 − e2⊗e1",
        &zero2,
        &TwoTensor::from_entries(2, &[(0, 1, Scalar::one()), (1, 0, Scalar::from(-1))]).unwrap(),
    );
    show(
        "zero(3), r = e1⊗e2 (degenerate skew part)",
        &PermAlgebra::zero(3),
        &TwoTensor::basis(3, 0, 1),
    );

    // Every catalog pair, for reference.
    println!("\ncatalog pairs:");
    for (name, alg, r) in catalog::tensor_pairs() {
        println!("  {name}: {}", classify(&alg, &r).unwrap());
    }
}
