//! u1 x u2 = v1 x v2 with deg u1 > deg v1 reduces to s x = x t.

use freealg::gf2::OracleLimits;
use freealg::solver::{reduce_two_block, TwoBlockOutcome};
use freealg::Element;

fn main() {
    let k = 3;
    let e = |s: &str| Element::parse(s, k).unwrap();
    let (v1, s, u2, t) = (e("c"), e("ab"), e("c"), e("ba"));
    let (u1, v2) = (&v1 * &s, &t * &u2);
    println!("({u1}) x ({u2}) = ({v1}) x ({v2})");
    match reduce_two_block(&u1, &u2, &v1, &v2, 8, &OracleLimits::default()).unwrap() {
        TwoBlockOutcome::Reduced(r) => {
            println!("s = {}, t = {}, threshold {}", r.s, r.t, r.threshold);
            println!(
                "generators of s x = x t: {:?}",
                r.conjugation
                    .generators()
                    .iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>()
            );
            println!(
                "short solutions outside the family: {}",
                r.short_solutions.len()
            );
        }
        TwoBlockOutcome::NoLongSolutions {
            threshold,
            short_solutions,
            ..
        } => {
            println!(
                "no solutions above degree {threshold}; {} short ones",
                short_solutions.len()
            );
        }
    }
}
