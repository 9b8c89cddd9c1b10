//! Running the randomized law suite, and watching it catch a broken product.

use cantor::laws::{run_laws, SpaceOps, Standard};
use cantor::random::Bounds;
use cantor::CanonicalSpace;

/// A product that adds degrees instead of multiplying them.
struct Broken;

impl SpaceOps for Broken {
    fn product(&self, x: &CanonicalSpace, y: &CanonicalSpace) -> CanonicalSpace {
        let p = Standard.product(x, y);
        match p.cb_star() {
            Some(rank) => CanonicalSpace::new(rank.clone(), x.degree() + y.degree()).unwrap(),
            None => p,
        }
    }
}

fn main() {
    let bounds = Bounds::default();
    println!("{}", run_laws(&Standard, 200, 7, &bounds));
    let report = run_laws(&Broken, 200, 7, &bounds);
    for v in report.violations() {
        println!("{}: {:?}", v.name, v.counterexample);
    }
}
