//! Write and read the JSON documents used by the command-line tool, and
//! show the exact-rational serialization round trip.
//!
//! Run with: cargo run --example file_formats

use permbialg::catalog;
use permbialg::io::{self, Document, Loaded};

fn main() {
    let alg = catalog::lperm2();
    let doc = io::algebra_to_doc(&alg);
    let text = String::from_utf8(io::to_bytes(&doc)).unwrap();
    println!("lperm2 as a perm document:\n{text}");

    // Round trip: parse, interpret, re-serialize; bytes are identical.
    let parsed: Document = serde_json::from_str(&text).unwrap();
    match io::interpret(&parsed).unwrap() {
        Loaded::Algebra(a) => assert_eq!(a, alg),
        _ => unreachable!(),
    }
    assert_eq!(io::to_bytes(&parsed), text.as_bytes());
    println!("round trip: byte-identical");

    // A quadratic Rota-Baxter document, weight and all scalars as strings.
    let (name, data) = catalog::quadratic_rb_instances().into_iter().next().unwrap();
    let doc = io::quadratic_rb_to_doc(&data);
    println!(
        "\n{name} as a quadratic-rb document:\n{}",
        String::from_utf8(io::to_bytes(&doc)).unwrap()
    );
}
