//! Exhaustively search small-integer matrices for Rota-Baxter operators of
//! weights 0, 1 and −1 on lperm2, and relate tensors to relative
//! Rota-Baxter operators of weight −1.
//!
//! Run with: cargo run --example rota_baxter_search

use permbialg::catalog;
use permbialg::representation::{diamond_from_skew, relative_rb_defect};
use permbialg::rotabaxter::search_rb_operators;
use permbialg::scalar::Scalar;
use permbialg::tensor::TwoTensor;

fn main() {
    let alg = catalog::lperm2();
    for weight in [Scalar::zero(), Scalar::one(), Scalar::from(-1)] {
        let found = search_rb_operators(&alg, &weight, 1);
        println!(
            "weight {weight}: {} Rota-Baxter operators with entries in [-1, 1]",
            found.len()
        );
        for p in found.iter().take(4) {
            let rows: Vec<String> = (0..2)
                .map(|i| format!("[{}, {}]", p[(i, 0)], p[(i, 1)]))
                .collect();
            println!("  {}", rows.join(" "));
        }
        if found.len() > 4 {
            println!("  … and {} more", found.len() - 4);
        }
    }

    // A quasi-triangular tensor makes T_r a relative Rota-Baxter operator
    // of weight −1 with respect to (A*, L*, ad*, ⋄_{r−σ(r)}).
    let r = TwoTensor::basis(2, 1, 0);
    let skew = r.sub(&r.twist());
    let diamond = diamond_from_skew(&alg, &skew).unwrap();
    let defects = relative_rb_defect(&diamond, &r.t_map(), &Scalar::from(-1)).unwrap();
    println!(
        "T_r for r = e2⊗e1 as a weight −1 relative Rota-Baxter operator: defects = {}",
        defects.len()
    );
}
