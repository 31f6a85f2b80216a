//! Arithmetic in GF(2)<a, b>.

use freealg::Element;

fn main() {
    let x = Element::parse("ab + a + 1", 2).unwrap();
    let y = Element::parse("ba + b", 2).unwrap();
    println!("x + y = {}", &x + &y);
    println!("x y = {}", &x * &y);
    println!("x^3 = {}", x.power(3));
    println!(
        "deg(x y) = {:?}, leading monomial {:?}",
        (&x * &y).deg(),
        (&x * &y).leading_monomial().map(|w| w.to_string())
    );
}
