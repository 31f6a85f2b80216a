//! A three-block equation reduced to s x = x t, with and without a known
//! solution.

use freealg::gf2::OracleLimits;
use freealg::solver::{forward_reduces, reduce_general};
use freealg::{Element, MonomialEquation};

fn main() {
    let eq = MonomialEquation::parse("bab+b;bab+b;bab", "bab;bab+b;bab+b", 2).unwrap();
    let limits = OracleLimits::default();
    println!("{eq}");
    let r = reduce_general(&eq, None, 3, &limits).unwrap();
    println!(
        "route {:?}: s = {}, t = {}, threshold {}",
        r.route, r.s, r.t, r.threshold
    );
    for d in r.decomposition.indices.iter().flatten() {
        println!("  index {}: {:?}", d.index, d.case);
    }
    println!(
        "symbolic check: {}",
        forward_reduces(&eq, &r.s, &r.t).unwrap()
    );

    let hint = Element::parse("ababa + a", 2).unwrap();
    let r = reduce_general(&eq, Some(&hint), 3, &limits).unwrap();
    println!(
        "with hint {hint}: agrees = {:?}, periodicity {:?}",
        r.hint_agrees, r.periodicity
    );
}
