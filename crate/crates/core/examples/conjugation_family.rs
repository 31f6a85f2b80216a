//! Solutions of u x = x v with a periodic top monomial: one generator per
//! residue class.

use freealg::gf2::OracleLimits;
use freealg::solver::solve_conjugation;
use freealg::Element;

fn main() {
    let limits = OracleLimits::default();
    for (u, v, d) in [
        ("abab", "abab", 8),
        ("ab", "ba", 7),
        ("ab", "aa", 12),
        ("abc", "aab", 5),
    ] {
        let (ue, ve) = (Element::parse(u, 3).unwrap(), Element::parse(v, 3).unwrap());
        let r = solve_conjugation(&ue, &ve, d, &limits).unwrap();
        println!(
            "{u} x = x {v}: {:?}, generators {:?}, classes {:?} mod {}, searched to {} of bound {}",
            r.status(),
            r.generators()
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>(),
            r.classes,
            r.period,
            r.search_degree,
            r.degree_bound
        );
    }
}
