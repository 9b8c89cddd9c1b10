//! Parsing, pretty printing and error reporting.

use cantor::syntax::{format_space, parse_ordinal_expr, parse_space};

fn main() {
    let e = parse_space("D[w]( can(w^2,1) (+) can(1,3) )x can(0,2)").unwrap();
    println!("{}", format_space(&e));
    println!("= {}", e.canonicalize());

    println!("{}", parse_ordinal_expr("(w+1) (+) (w+1)").unwrap());

    match parse_space("can(1, 2) x (can(w,") {
        Ok(_) => unreachable!(),
        Err(err) => println!("{err}"),
    }
}
