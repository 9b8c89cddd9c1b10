//! Deciding equivalence and checking a generated finite correspondence.

use cantor::correspondence::{generate_witness, Witness};
use cantor::syntax::parse_space;

fn main() {
    let x = parse_space("D(can(2,1) x can(2,1))").unwrap().canonicalize();
    let y = parse_space("can(3, 2)").unwrap().canonicalize();
    println!("{x} ~ {y}: {}", x.equivalent(&y));

    let w = generate_witness(&x, &y).unwrap();
    print!("{}", w.to_json());
    println!("{}", w.check());

    let back = Witness::from_json(&w.to_json()).unwrap();
    println!("round trip passes: {}", back.check().passed());

    let z = parse_space("can(2, 1)").unwrap().canonicalize();
    if let Some(d) = x.stratum_difference(&z) {
        println!("{x} vs {z}: rank {} has {} vs {}", d.rank, d.left, d.right);
    }
}
