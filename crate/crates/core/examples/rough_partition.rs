//! Splitting a canonical space into clopen pieces of degree one.

use cantor::CanonicalSpace;

fn main() {
    let x = CanonicalSpace::new("w + 1".parse().unwrap(), 3).unwrap();
    println!("{x}, top point {}", x.top_point().unwrap());
    for piece in x.rough_partition().unwrap() {
        println!("  {piece} ~ {}", piece.canonical());
    }
}
