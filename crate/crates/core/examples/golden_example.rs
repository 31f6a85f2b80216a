//! u = abac + abacab and v = caba + bacaba are conjugated by w = abacaba.

use freealg::gf2::{kernel_bounded, LinearXEquation, OracleLimits};
use freealg::solver::{solve_conjugation, verify_family, VerifyOptions};
use freealg::{Element, MonomialEquation};

fn main() {
    let k = 3;
    let u = Element::parse("abac + abacab", k).unwrap();
    let v = Element::parse("caba + bacaba", k).unwrap();
    let w = Element::parse("abacaba", k).unwrap();
    println!("u w = {}", &u * &w);
    println!("w v = {}", &w * &v);

    let limits = OracleLimits::default();
    let eq = LinearXEquation::conjugation(&u, &v);
    for d in [6, 7, 13] {
        let kernel = kernel_bounded(&eq, d, &limits).unwrap();
        println!("kernel up to degree {d}: dimension {}", kernel.dimension());
    }

    let result = solve_conjugation(&u, &v, 13, &limits).unwrap();
    let family = result.family.expect("nonzero solutions");
    println!("family: {}", family.to_json());

    let report = verify_family(
        &MonomialEquation::conjugation(&u, &v).unwrap(),
        &family,
        &VerifyOptions::new(13),
    )
    .unwrap();
    for c in &report.checks {
        println!("{}: {:?} ({})", c.name, c.status, c.detail);
    }
}
