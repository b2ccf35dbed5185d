//! Check the perm axioms on a few algebras and print the defects.
//!
//! Run with: cargo run --example axiom_defects

use permbialg::catalog;
use permbialg::perm::PermAlgebra;
use permbialg::scalar::Scalar;

fn report(name: &str, alg: &PermAlgebra) {
    let defects = alg.perm_axiom_defects();
    if defects.is_empty() {
        println!("{name}: perm (no axiom defects)");
        return;
    }
    println!("{name}: {} defective basis triples", defects.len());
    for d in defects {
        let labels = alg.labels();
        println!(
            "  at ({}, {}, {}): assoc defect {}, left-comm defect {}",
            labels[d.i], labels[d.j], labels[d.k], d.assoc, d.left_comm
        );
    }
}

fn main() {
    report("zero(3)", &PermAlgebra::zero(3));
    report("lperm2", &catalog::lperm2());
    report("nilp2", &catalog::nilp2());
    report("lperm2 ⊕ lperm2", &catalog::lperm2().direct_sum(&catalog::lperm2()));

    // An algebra with only e1·e2 = e1 breaks left-commutativity:
    // (e1·e2)·e2 = e1 but (e2·e1)·e2 = 0.
    report("broken2", &catalog::broken2());

    // Scaling the broken structure constant scales the defect.
    let half_broken = PermAlgebra::from_entries(
        2,
        None,
        &[(0, 1, 0, Scalar::ratio(1, 2))],
    )
    .unwrap();
    report("broken2 with coefficient 1/2", &half_broken);
}
