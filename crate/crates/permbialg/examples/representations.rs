//! Representations of perm algebras: the regular and coadjoint
//! representations, duals, semidirect products, and A-perm algebras.
//!
//! Run with: cargo run --example representations

use permbialg::catalog;
use permbialg::representation::{diamond_from_skew, APermAlgebra, Representation};
use permbialg::scalar::Scalar;
use permbialg::tensor::TwoTensor;

fn main() {
    let alg = catalog::lperm2();

    let regular = Representation::regular(&alg);
    println!(
        "regular representation (A, L, R) of lperm2: defects = {}",
        regular.defects().len()
    );
    for i in 0..2 {
        println!("  L({}) =\n{}", alg.labels()[i], regular.l_basis(i));
    }

    let coadjoint = regular.dual().unwrap();
    println!(
        "coadjoint representation (A*, L*, ad*): defects = {}",
        coadjoint.defects().len()
    );

    let sd = coadjoint.semidirect_product();
    println!(
        "semidirect product A ⋉ A*: dim {}, perm axioms {}",
        sd.dim(),
        if sd.perm_axiom_defects().is_empty() { "hold" } else { "FAIL" }
    );

    // (A, L, R, ·_A) is an A-perm algebra.
    let aperm = APermAlgebra::new(regular.clone(), &alg.entries()).unwrap();
    println!(
        "(A, L, R, ·_A) as an A-perm algebra: defects clean = {}",
        aperm.defects().is_clean()
    );

    // The diamond construction from a skew invariant tensor.
    let skew = TwoTensor::from_entries(
        2,
        &[(0, 1, Scalar::from(2)), (1, 0, Scalar::from(-2))],
    )
    .unwrap();
    let diamond = diamond_from_skew(&alg, &skew).unwrap();
    println!(
        "diamond A-perm algebra from s = 2(e1⊗e2 − e2⊗e1): defects clean = {}",
        diamond.defects().is_clean()
    );
    println!("  products a*⋄b*:");
    let dual_alg = diamond.v_algebra();
    for (i, j, k, c) in dual_alg.entries() {
        let ls = dual_alg.labels();
        println!("    {}⋄{} ∋ {c}·{}", ls[i], ls[j], ls[k]);
    }

    // Swapping the actions of the regular representation breaks it.
    let swapped = Representation::new(
        alg.clone(),
        vec![alg.right_mult_basis(0), alg.right_mult_basis(1)],
        vec![alg.left_mult_basis(0), alg.left_mult_basis(1)],
    )
    .unwrap();
    println!(
        "swapped actions: representation defects = {}",
        swapped.defects().len()
    );
}
