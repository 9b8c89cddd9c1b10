//! Canonical forms of sums and products of spaces, and the rank homomorphism.

use cantor::syntax::parse_space;

fn main() {
    for text in [
        "can(1, 2) (+) can(1, 3)",
        "can(1, 2) (+) can(w, 1)",
        "can(1, 2) x can(w, 3)",
        "(can(1,1) (+) can(0,2)) x can(2,1)",
        "can(3, 1) x empty",
    ] {
        let e = parse_space(text).unwrap();
        let c = e.canonicalize();
        println!("{text:<38} = {c}");
    }

    let x = parse_space("can(w, 2)").unwrap().canonicalize();
    let y = parse_space("can(3, 1)").unwrap().canonicalize();
    println!(
        "rank of x + y: {:?}",
        x.sum(&y).cb_star().map(ToString::to_string)
    );
    println!(
        "rank of x * y: {:?}",
        x.product(&y).cb_star().map(ToString::to_string)
    );
}
