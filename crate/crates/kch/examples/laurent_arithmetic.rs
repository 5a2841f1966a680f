//! Exact arithmetic in Z[l^(+-1), m^(+-1)]: parsing, gcd, division, resultants.

use kch::laurent::{LaurentPoly, UniPoly};

fn main() {
    let p: LaurentPoly = "(l - 1)*(m + 1)*(l - m^3)".parse().expect("valid");
    let q: LaurentPoly = "l^-1*m*(l - 1)*(1 - l*m^3)".parse().expect("valid");
    println!("p = {p}");
    println!("q = {q}");
    println!("gcd = {}", p.gcd(&q));
    println!("q normalized = {}", q.unit_normalize().expect("nonzero"));
    println!("p / (l - 1) = {}", p.exact_div(&"l - 1".parse().expect("valid")).expect("exact"));

    let parse = |s: &str| -> LaurentPoly { s.parse().expect("valid") };
    let f = UniPoly::new(vec![parse("-m^2 - m"), parse("-l"), parse("l")]);
    let g = UniPoly::new(vec![parse("-m - 1"), parse("-m"), parse("l")]);
    let r = f.resultant(&g).expect("nonzero");
    println!("res_x({f}, {g}) = {r}");
    println!("normalized: {}", r.unit_normalize().expect("nonzero"));
}
