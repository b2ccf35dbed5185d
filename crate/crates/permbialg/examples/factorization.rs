//! Factor elements as x = x1 − x2 through a factorizable tensor, with the
//! pair (x1, x2) drawn from the image of T_r ⊕ T_{σ(r)}.
//!
//! Run with: cargo run --example factorization

use permbialg::bialgebra::factorize;
use permbialg::catalog;
use permbialg::matrix::Vector;
use permbialg::scalar::Scalar;

fn main() {
    // The double of (nilp2, trivial coproduct) with its canonical tensor.
    let entry = catalog::get("double-nilp2").unwrap();
    let (alg, r) = match entry.payload {
        catalog::CatalogPayload::AlgebraTensor { algebra, tensor } => (algebra, tensor),
        _ => unreachable!(),
    };
    println!("factorizing through the canonical tensor on the double of nilp2:");
    for b in 0..alg.dim() {
        let x = Vector::basis(alg.dim(), b);
        let (x1, x2) = factorize(&alg, &r, &x).unwrap();
        println!(
            "  {} = {} − {}",
            alg.labels()[b],
            x1,
            x2
        );
        assert_eq!(&x1 - &x2, x);
    }

    // A mixed rational element.
    let x = Vector::from_entries(vec![
        Scalar::one(),
        Scalar::ratio(-1, 2),
        Scalar::from(3),
        Scalar::ratio(2, 7),
    ]);
    let (x1, x2) = factorize(&alg, &r, &x).unwrap();
    println!("  {x} = {x1} − {x2}");
    assert_eq!(&x1 - &x2, x);

    // Factorization also works away from doubles: e2⊗e1 on lperm2.
    let alg = catalog::lperm2();
    let r = permbialg::tensor::TwoTensor::basis(2, 1, 0);
    println!("factorizing through r = e2⊗e1 on lperm2:");
    for b in 0..2 {
        let x = Vector::basis(2, b);
        let (x1, x2) = factorize(&alg, &r, &x).unwrap();
        println!("  {} = {} − {}", alg.labels()[b], x1, x2);
    }
}
