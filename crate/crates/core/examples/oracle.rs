//! Bounded-degree oracles: linear algebra for one appearance of x,
//! exhaustive search otherwise.

use freealg::gf2::{
    exhaustive_solutions, kernel_bounded, solve_affine, LinearXEquation, OracleLimits,
};
use freealg::{Element, MonomialEquation};

fn main() {
    let e = |s: &str| Element::parse(s, 2).unwrap();
    let limits = OracleLimits::default();

    let ab = LinearXEquation::conjugation(&e("a"), &e("b"));
    println!(
        "a x + x b = 0: dimension {} up to degree 4",
        kernel_bounded(&ab, 4, &limits).unwrap().dimension()
    );

    let affine =
        LinearXEquation::new(vec![(e("ab"), e("1")), (e("1"), e("ba"))], e("aba + aab")).unwrap();
    let sol = solve_affine(&affine, 3, &limits).unwrap();
    println!(
        "ab x + x ba = aba + aab: particular {:?}",
        sol.particular.map(|p| p.to_string())
    );

    let eq = MonomialEquation::parse("bab+b;bab+b;bab", "bab;bab+b;bab+b", 2).unwrap();
    let sols = exhaustive_solutions(&eq, 3, &limits).unwrap();
    println!(
        "{eq}: {:?}",
        sols.iter().map(|x| x.to_string()).collect::<Vec<_>>()
    );
}
