//! The derivative obeys the product rule up to equivalence, but not on the
//! nose: degrees can differ.

use cantor::CanonicalSpace;

fn main() {
    let x = CanonicalSpace::new(1u64.into(), 1).unwrap();
    let lhs = x.product(&x).derivative();
    let rhs = x.derivative().product(&x).sum(&x.product(&x.derivative()));
    println!("D(x * x)          = {lhs}");
    println!("Dx * x + x * Dx   = {rhs}");
    println!("equal: {}, equivalent: {}", lhs == rhs, lhs.equivalent(&rhs));

    let w = CanonicalSpace::new("w+2".parse().unwrap(), 3).unwrap();
    for k in [0u64, 1, 2, 3] {
        println!("D^{k} {w} = {}", w.iterated_derivative(&k.into()));
    }
    println!("D^w {w} = {}", w.iterated_derivative(&"w".parse().unwrap()));
}
