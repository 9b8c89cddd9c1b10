//! Counting, listing and indexing the points of one rank.

use num_bigint::BigUint;

use cantor::syntax::parse_space;
use cantor::Ordinal;

fn main() {
    let e = parse_space("can(1, 2) x can(2, 1)").unwrap();
    let top = e.canonicalize().cb_star().unwrap().clone();
    for beta in 0..=3u64 {
        let beta = Ordinal::from(beta);
        println!("rank {beta}: {} points", e.count_points_of_rank(&beta));
    }

    let beta = Ordinal::from(2);
    for i in 0..5u32 {
        let p = e.enumerate_points_of_rank(&beta, &BigUint::from(i)).unwrap();
        let back = e.index_of_point(&beta, &p).unwrap();
        println!(
            "  #{i}: {p} (index {back}, isolated: {})",
            e.is_isolated(&p).unwrap()
        );
    }
    println!("top rank {top} has {} points", e.count_points_of_rank(&top));
}
