//! The centralizer of u is the polynomial algebra in a single root.

use freealg::gf2::OracleLimits;
use freealg::solver::centralizer;
use freealg::Element;

fn main() {
    for (text, k, d) in [("a", 2, 4), ("abab + ab", 2, 8), ("abcabc + abc + 1", 3, 9)] {
        let u = Element::parse(text, k).unwrap();
        let r = centralizer(&u, d, &OracleLimits::default()).unwrap();
        let coeffs: Vec<u8> = r.polynomial.iter().map(|&b| b as u8).collect();
        println!(
            "u = {u}: root {}, u = p(root) with p = {coeffs:?}, dimension {} up to degree {d}",
            r.root, r.kernel_dimension
        );
    }
}
