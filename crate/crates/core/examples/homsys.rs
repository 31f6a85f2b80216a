//! Monomial solutions of a homogeneous system by position alignment.

use freealg::homsys::{
    align, brute_force_monomial_solutions, enumerate_monomial_solutions, Alignment, HomSystem,
};
use freealg::Element;

const SYSTEM: &str = "
# x and y commute past the coefficient c
var x
var y
coef c = ab
eq x c y = y c x
";

fn main() {
    let sys = HomSystem::parse(SYSTEM, None).unwrap();
    for profile in [vec![2, 2], vec![1, 3]] {
        match align(&sys, &profile).unwrap() {
            Alignment::Contradiction(c) => println!("{profile:?}: contradiction {c:?}"),
            Alignment::Partition(p) => {
                let sols = enumerate_monomial_solutions(&sys, &profile, 1 << 16).unwrap();
                let brute = brute_force_monomial_solutions(&sys, &profile, 1 << 16).unwrap();
                println!(
                    "{profile:?}: {} classes, {} free, {} solutions (brute force agrees: {})",
                    p.class_count(),
                    p.free_classes().len(),
                    sols.len(),
                    sols == brute
                );
                let values: Vec<Element> = p
                    .free_classes()
                    .iter()
                    .map(|_| Element::parse("aa + ab + bb", 2).unwrap())
                    .collect();
                println!(
                    "  homogeneous lift solves the system: {}",
                    sys.check_solution(&p.lift(&values)).unwrap()
                );
            }
        }
    }
}
