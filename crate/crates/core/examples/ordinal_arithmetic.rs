//! Ordinal sums, natural sums and products in Cantor normal form.

use cantor::Ordinal;

fn main() {
    let a: Ordinal = "w + 1".parse().unwrap();
    let b: Ordinal = "w^2 + 3".parse().unwrap();

    println!("a = {a}, b = {b}");
    println!("a + b = {}", &a + &b);
    println!("b + a = {}", &b + &a);
    println!("a (+) b = {}", a.natural_sum(&b));
    println!("a * b = {}", &a * &b);

    // Left subtraction undoes addition on the left.
    let sum = &a + &b;
    println!("(a + b) - a = {}", a.left_subtract(&sum).unwrap());

    let limit: Ordinal = "w^w".parse().unwrap();
    println!("{limit} is a limit: {}", limit.is_limit());
    println!("successor of {limit}: {}", limit.successor());
}
