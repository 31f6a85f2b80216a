//! Acceptance criteria 1-8; prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use freealg::gf2::{exhaustive_solutions, kernel_bounded, LinearXEquation, OracleLimits, Span};
use freealg::homsys::{
    brute_force_monomial_solutions, enumerate_monomial_solutions, HomSystem, Symbol, Variable,
};
use freealg::solver::{
    centralizer, forward_reduces, reduce_general, reduce_two_block, right_divide,
    solve_conjugation, verify_family, CheckStatus, SolutionFamily, TwoBlockOutcome, VerifyOptions,
};
use freealg::words::is_square_free;
use freealg::{Element, MonomialEquation, Word};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(s: &str, k: usize) -> Element {
    Element::parse(s, k).unwrap()
}

fn limits() -> OracleLimits {
    OracleLimits::default()
}

fn random_word(rng: &mut ChaCha8Rng, k: usize, len: usize) -> Word {
    Word::from_letters(
        &(0..len)
            .map(|_| rng.gen_range(0..k as u8))
            .collect::<Vec<_>>(),
    )
}

/// `top` plus random terms of lower degree.
fn with_lower_terms(rng: &mut ChaCha8Rng, k: usize, top: Word, max_terms: usize) -> Element {
    let mut words = vec![top.clone()];
    for _ in 0..rng.gen_range(0..=max_terms) {
        let len = rng.gen_range(0..top.len().max(1));
        if len < top.len() {
            words.push(random_word(rng, k, len));
        }
    }
    Element::from_words(words, k).unwrap()
}

/// Every element of the span of `basis`.
fn all_combinations(basis: &[Element], k: usize) -> Vec<Element> {
    let mut out = vec![Element::zero(k)];
    for b in basis {
        let more: Vec<Element> = out.iter().map(|x| x + b).collect();
        out.extend(more);
    }
    out.sort();
    out
}

fn golden() -> Outcome {
    let k = 3;
    let (u, v, w) = (
        e("abac + abacab", k),
        e("caba + bacaba", k),
        e("abacaba", k),
    );
    ensure(&u * &w == &w * &v, || "u w != w v".into())?;
    let lin = LinearXEquation::conjugation(&u, &v);
    let k6 = kernel_bounded(&lin, 6, &limits()).map_err(|e| e.to_string())?;
    ensure(k6.dimension() == 0, || {
        format!("kernel at 6 has dimension {}", k6.dimension())
    })?;
    let k7 = kernel_bounded(&lin, 7, &limits()).map_err(|e| e.to_string())?;
    ensure(k7.basis == vec![w.clone()], || {
        format!("kernel at 7 is {:?}", k7.basis)
    })?;
    let r = solve_conjugation(&u, &v, 13, &limits()).map_err(|e| e.to_string())?;
    ensure(r.generators() == [w.clone()], || {
        format!("generators {:?}", r.generators())
    })?;
    ensure(r.kernel_dimension == 2, || {
        format!("kernel dimension {}", r.kernel_dimension)
    })?;
    let family = r.family.unwrap();
    let eq = MonomialEquation::conjugation(&u, &v).unwrap();
    let report = verify_family(&eq, &family, &VerifyOptions::new(13)).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("{:?}", report.first_failure()))?;
    let span13 = kernel_bounded(&lin, 13, &limits()).unwrap().span(k);
    ensure(
        span13.same_as(&Span::from_elements(k, [&w, &(&w * &v)])),
        || "kernel at 13 is not {w, w v}".into(),
    )?;
    Ok("u w = w v; kernel dims 0, 1, 2 at D = 6, 7, 13; family {w p(v)} verified".into())
}

fn centralizer_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..50 {
        let k = if i % 2 == 0 { 2 } else { 3 };
        let len = rng.gen_range(1..=4);
        let top = random_word(&mut rng, k, len);
        let u = with_lower_terms(&mut rng, k, top, 3);
        let d = 3 * len;
        let r = centralizer(&u, d, &limits()).map_err(|e| format!("{u}: {e}"))?;
        let kernel = kernel_bounded(&LinearXEquation::conjugation(&u, &u), d, &limits()).unwrap();
        let dr = r.root.deg().unwrap();
        let powers: Vec<Element> = (0..=d / dr).map(|j| r.root.power(j)).collect();
        ensure(
            Span::from_elements(k, &powers).same_as(&kernel.span(k)),
            || format!("u = {u}: kernel differs from powers of {}", r.root),
        )?;
        ensure(Element::poly_eval(&r.polynomial, &r.root) == u, || {
            format!("u = {u} is not p(root)")
        })?;
    }
    Ok(
        "50 random u over k in {2, 3}: kernel at D = 3 deg(u) equals the span of root powers"
            .into(),
    )
}

fn conjugate_pairs() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let k = 2;
    let mut done = 0;
    let mut attempts = 0;
    while done < 30 {
        attempts += 1;
        ensure(attempts < 10_000, || "too few divisible pairs".into())?;
        let lw = rng.gen_range(1..=3);
        let lv = rng.gen_range(1..=3);
        let (tw, tv) = (random_word(&mut rng, k, lw), random_word(&mut rng, k, lv));
        let w = with_lower_terms(&mut rng, k, tw, 2);
        let v = with_lower_terms(&mut rng, k, tv, 2);
        let wv = &w * &v;
        let Some(u) = right_divide(&wv, &w) else {
            continue;
        };
        if &u * &w != wv || u.is_scalar() {
            continue;
        }
        let r = solve_conjugation(&u, &v, 8, &limits()).map_err(|e| format!("{u} / {v}: {e}"))?;
        let lin = LinearXEquation::conjugation(&u, &v);
        for d in 0..=r.search_degree {
            let kernel = kernel_bounded(&lin, d, &limits()).unwrap().span(k);
            let fam = r
                .family
                .as_ref()
                .map_or(Span::new(k), |f| f.span_up_to(d).unwrap());
            ensure(fam.same_as(&kernel), || {
                format!("u = {u}, v = {v}: family differs from kernel at D = {d}")
            })?;
        }
        ensure(r.family.is_some(), || {
            format!("u = {u}, v = {v}: w = {w} not found")
        })?;
        done += 1;
    }
    Ok(format!(
        "30 pairs u w = w v (k = 2, {attempts} draws): family equals kernel at every D <= 8"
    ))
}

/// A square-free word with length drawn from `lens` over `k` letters.
fn square_free_word(rng: &mut ChaCha8Rng, k: usize, lens: std::ops::RangeInclusive<usize>) -> Word {
    let len = rng.gen_range(lens);
    loop {
        let w = random_word(rng, k, len);
        if is_square_free(&w) {
            return w;
        }
    }
}

fn two_block_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let k = 3;
    let mut done = 0;
    while done < 25 {
        // s = z y + c and t = y z + c share the solution x = z
        let z = square_free_word(&mut rng, k, 1..=2);
        let y = square_free_word(&mut rng, k, 0..=1);
        let c = if rng.gen_bool(0.5) {
            Element::one(k)
        } else {
            Element::zero(k)
        };
        let s = &Element::monomial(z.concat(&y), k).unwrap() + &c;
        let t = &Element::monomial(y.concat(&z), k).unwrap() + &c;
        let (tv, tu) = (
            square_free_word(&mut rng, k, 0..=1),
            square_free_word(&mut rng, k, 0..=1),
        );
        let v1 = with_lower_terms(&mut rng, k, tv, 1);
        let u2 = with_lower_terms(&mut rng, k, tu, 1);
        let (u1, v2) = (&v1 * &s, &t * &u2);
        let tops_ok = [&s, &t, &u1, &v2]
            .iter()
            .all(|x| is_square_free(x.leading_monomial().unwrap()));
        if !tops_ok {
            continue;
        }
        let eq = MonomialEquation::two_block(&u1, &u2, &v1, &v2).unwrap();
        let out =
            reduce_two_block(&u1, &u2, &v1, &v2, 6, &limits()).map_err(|e| format!("{eq}: {e}"))?;
        let TwoBlockOutcome::Reduced(r) = out else {
            return Err(format!("{eq}: no reduction"));
        };
        ensure(r.s == s && r.t == t, || {
            format!("{eq}: recovered ({}, {}) instead of ({s}, {t})", r.s, r.t)
        })?;
        let lin = eq.to_linear().unwrap();
        let conj = r
            .conjugation
            .family
            .as_ref()
            .ok_or(format!("{eq}: no family for s x = x t"))?;
        for d in 0..=6.min(r.conjugation.search_degree) {
            let kernel = kernel_bounded(&lin, d, &limits()).unwrap().span(k);
            let mut fam = conj.span_up_to(d).unwrap();
            for x in r
                .short_solutions
                .iter()
                .filter(|x| x.deg().is_some_and(|dx| dx <= d))
            {
                fam.insert(x);
            }
            ensure(fam.same_as(&kernel), || {
                format!("{eq}: family differs from kernel at D = {d}")
            })?;
        }
        done += 1;
    }
    Ok("25 instances u1 = v1 s, v2 = t u2 (k = 3): (s, t) recovered, kernel equals family span for D <= 6".into())
}

fn general_instances() -> Outcome {
    let k = 2;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let pairs = [
        ("ab", "ba"),
        ("ba", "ab"),
        ("ab + a", "ba + a"),
        ("ba + b", "ab + b"),
        ("ab + b", "ba + b"),
    ];
    let mus = ["1", "a", "b", "a + 1", "b + 1", "ab", "ba"];
    let pool = [
        "1", "a", "b", "a + 1", "b + 1", "ab", "ba", "ab + a", "ba + b", "aba", "bab", "bab + b",
        "aba + a", "bab + 1",
    ];
    let mut summary = Vec::new();
    let mut i = 0;
    while summary.len() < 10 {
        let n = if summary.len() < 5 { 3 } else { 5 };
        i += 1;
        let (s, t) = pairs[i % pairs.len()];
        let (s, t) = (e(s, k), e(t, k));
        // middle coefficients with t c = c s, so both appearances of x move
        let mids: Vec<Element> = pool
            .iter()
            .map(|c| e(c, k))
            .filter(|c| &(&t * c) == &(c * &s))
            .collect();
        let mu1 = e(mus.choose(&mut rng).unwrap(), k);
        let mun = e(mus.choose(&mut rng).unwrap(), k);
        let mut u = vec![&mu1 * &s.plus_one()];
        let mut v = vec![&mu1 * &s];
        for _ in 0..n - 2 {
            let c = mids.choose(&mut rng).unwrap().clone();
            u.push(c.clone());
            v.push(c);
        }
        u.push(&t * &mun);
        v.push(&t.plus_one() * &mun);
        let square_free = u
            .iter()
            .chain(&v)
            .all(|c| is_square_free(c.top_monomial().unwrap()));
        if !square_free {
            continue;
        }
        let eq = MonomialEquation::new(u, v).unwrap();
        let r = reduce_general(&eq, None, 3, &limits()).map_err(|e| format!("{eq}: {e}"))?;
        let same = (r.s == s && r.t == t) || (r.s == s.plus_one() && r.t == t.plus_one());
        ensure(same, || {
            format!("{eq}: recovered ({}, {}) instead of ({s}, {t})", r.s, r.t)
        })?;
        ensure(
            r.decomposition.all_classified() && r.decomposition.verify(&eq),
            || format!("{eq}: decomposition incomplete"),
        )?;
        ensure(forward_reduces(&eq, &s, &t).unwrap(), || {
            format!("{eq}: symbolic reduction does not cancel")
        })?;
        let lim = OracleLimits {
            candidate_cap: 1 << 15,
            ..limits()
        };
        let sols = exhaustive_solutions(&eq, 3, &lim).map_err(|e| e.to_string())?;
        let st = kernel_bounded(&LinearXEquation::conjugation(&s, &t), 3, &limits()).unwrap();
        let expected = all_combinations(&st.basis, k);
        ensure(sols == expected, || {
            format!(
                "{eq}: {} exhaustive solutions, {} of s x = x t",
                sols.len(),
                expected.len()
            )
        })?;
        summary.push(n);
    }
    Ok(format!(
        "{} three-block and {} five-block instances ({i} draws): (s, t) recovered, symbolic check cancels, exhaustive D = 3 matches",
        summary.iter().filter(|&&n| n == 3).count(),
        summary.iter().filter(|&&n| n == 5).count()
    ))
}

fn domain_property() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100_000 {
        let k = rng.gen_range(2..=3);
        let draw = |rng: &mut ChaCha8Rng| loop {
            let words: Vec<Word> = (0..rng.gen_range(1..=5))
                .map(|_| {
                    let len = rng.gen_range(0..=5);
                    random_word(rng, k, len)
                })
                .collect();
            let x = Element::from_words(words, k).unwrap();
            if !x.is_zero() {
                return x;
            }
        };
        let (a, b) = (draw(&mut rng), draw(&mut rng));
        let p = &a * &b;
        ensure(!p.is_zero(), || format!("({a}) ({b}) = 0"))?;
        let lm = a
            .leading_monomial()
            .unwrap()
            .concat(b.leading_monomial().unwrap());
        ensure(p.leading_monomial() == Some(&lm), || {
            format!("leading monomial of ({a}) ({b})")
        })?;
    }
    Ok("100000 random nonzero pairs: products nonzero, leading monomials multiply".into())
}

/// Random system whose equations balance under `profile`.
fn random_system(rng: &mut ChaCha8Rng, k: usize, profile: &[usize]) -> HomSystem {
    let m = profile.len();
    let variables = (0..m)
        .map(|i| Variable {
            name: format!("x{i}"),
            degree: Some(profile[i]),
        })
        .collect();
    let mut coefficients: Vec<(String, Element)> = Vec::new();
    let coef = |rng: &mut ChaCha8Rng, len: usize, coefficients: &mut Vec<(String, Element)>| {
        let w = random_word(rng, k, len);
        coefficients.push((
            format!("c{}", coefficients.len()),
            Element::monomial(w, k).unwrap(),
        ));
        Symbol::Coef(coefficients.len() - 1)
    };
    let mut equations = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let mut sides: [Vec<Symbol>; 2] = [Vec::new(), Vec::new()];
        let mut degs = [0usize; 2];
        for (side, deg) in sides.iter_mut().zip(degs.iter_mut()) {
            for _ in 0..rng.gen_range(1..=3) {
                if rng.gen_bool(0.7) {
                    let v = rng.gen_range(0..m);
                    side.push(Symbol::Var(v));
                    *deg += profile[v];
                } else {
                    let len = rng.gen_range(1..=2);
                    side.push(coef(rng, len, &mut coefficients));
                    *deg += len;
                }
            }
        }
        let (short, diff) = if degs[0] < degs[1] {
            (0, degs[1] - degs[0])
        } else {
            (1, degs[0] - degs[1])
        };
        if diff > 0 {
            let at = rng.gen_range(0..=sides[short].len());
            let sym = coef(rng, diff, &mut coefficients);
            sides[short].insert(at, sym);
        }
        let [l, r] = sides;
        equations.push((l, r));
    }
    HomSystem::new(k, variables, coefficients, equations).unwrap()
}

/// System with a planted solution: each equation segments one word `T`
/// twice, with variables placed at occurrences of their assigned words.
fn planted_system(rng: &mut ChaCha8Rng, k: usize, profile: &[usize]) -> HomSystem {
    let m = profile.len();
    let words: Vec<Word> = profile.iter().map(|&d| random_word(rng, k, d)).collect();
    let mut coefficients: Vec<(String, Element)> = Vec::new();
    let mut equations = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        // T = c0 X_{i1} c1 X_{i2} ... with one segmentation known
        let mut text: Vec<u8> = Vec::new();
        let mut spans: Vec<(usize, usize)> = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let len = rng.gen_range(0..=2);
            let gap = random_word(rng, k, len);
            text.extend_from_slice(gap.letters());
            let v = rng.gen_range(0..m);
            spans.push((text.len(), v));
            text.extend_from_slice(words[v].letters());
        }
        let len = rng.gen_range(0..=2);
        let gap = random_word(rng, k, len);
        text.extend_from_slice(gap.letters());
        let mut occurrences: Vec<(usize, usize)> = Vec::new();
        for (v, w) in words.iter().enumerate() {
            let w = w.letters();
            for (at, window) in text.windows(w.len()).enumerate() {
                if window == w {
                    occurrences.push((at, v));
                }
            }
        }
        let other: Vec<(usize, usize)> = {
            occurrences.shuffle(rng);
            let mut taken: Vec<(usize, usize)> = Vec::new();
            for &(at, v) in &occurrences {
                let end = at + words[v].len();
                if taken
                    .iter()
                    .all(|&(b, u)| end <= b || at >= b + words[u].len())
                {
                    taken.push((at, v));
                }
            }
            taken.sort();
            taken
        };
        let mut side = |placed: &[(usize, usize)]| {
            let mut out = Vec::new();
            let mut pos = 0;
            for &(at, v) in placed {
                if at > pos {
                    let w = Word::from_letters(&text[pos..at]);
                    coefficients.push((
                        format!("c{}", coefficients.len()),
                        Element::monomial(w, k).unwrap(),
                    ));
                    out.push(Symbol::Coef(coefficients.len() - 1));
                }
                out.push(Symbol::Var(v));
                pos = at + words[v].len();
            }
            if pos < text.len() {
                let w = Word::from_letters(&text[pos..]);
                coefficients.push((
                    format!("c{}", coefficients.len()),
                    Element::monomial(w, k).unwrap(),
                ));
                out.push(Symbol::Coef(coefficients.len() - 1));
            }
            out
        };
        let left = side(&spans);
        let right = side(&other);
        equations.push((left, right));
    }
    let variables = (0..m)
        .map(|i| Variable {
            name: format!("x{i}"),
            degree: Some(profile[i]),
        })
        .collect();
    HomSystem::new(k, variables, coefficients, equations).unwrap()
}

fn homsys_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cap = 1u128 << 16;
    let mut with_solutions = 0;
    for i in 0..20 {
        let (k, budget) = if i % 4 == 3 { (3, 10) } else { (2, 16) };
        let m = rng.gen_range(1..=3);
        let profile: Vec<usize> = loop {
            let p: Vec<usize> = (0..m).map(|_| rng.gen_range(1..=5)).collect();
            if p.iter().sum::<usize>() <= budget {
                break p;
            }
        };
        let planted = i % 2 == 0;
        let sys = if planted {
            planted_system(&mut rng, k, &profile)
        } else {
            random_system(&mut rng, k, &profile)
        };
        let fast = enumerate_monomial_solutions(&sys, &profile, cap).map_err(|e| e.to_string())?;
        let brute =
            brute_force_monomial_solutions(&sys, &profile, cap).map_err(|e| e.to_string())?;
        ensure(fast == brute, || {
            format!(
                "system {i}: {} aligned vs {} brute-force solutions",
                fast.len(),
                brute.len()
            )
        })?;
        for a in &fast {
            ensure(sys.check_monomial_solution(a).unwrap(), || {
                format!("system {i}: emitted non-solution")
            })?;
        }
        ensure(!planted || !fast.is_empty(), || {
            format!("system {i}: planted solution missed")
        })?;
        if !fast.is_empty() {
            with_solutions += 1;
        }
    }
    Ok(format!(
        "20 random systems ({with_solutions} with solutions): alignment equals brute force"
    ))
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn negative_controls() -> Outcome {
    let k3 = 3;
    let golden =
        MonomialEquation::conjugation(&e("abac + abacab", k3), &e("caba + bacaba", k3)).unwrap();
    let modulus = e("caba + bacaba", k3);
    let two_block = MonomialEquation::parse("cab;c", "c;bac", k3).unwrap();
    let three_block = MonomialEquation::parse("bab+b;bab+b;bab", "bab;bab+b;bab+b", 2).unwrap();
    let conj = |gens: &[&str]| SolutionFamily::Conjugation {
        generators: gens.iter().map(|g| e(g, k3)).collect(),
        modulus: modulus.clone(),
    };
    let red = |s: &str, t: &str, k: usize| SolutionFamily::Reduction {
        s: e(s, k),
        t: e(t, k),
        threshold: 1000,
        short_solutions: vec![],
    };
    let cases: Vec<(&str, &MonomialEquation, SolutionFamily, usize)> = vec![
        ("corrupted generator", &golden, conj(&["abacaba + a"]), 13),
        ("dropped generator", &golden, conj(&[]), 13),
        (
            "wrong modulus",
            &golden,
            SolutionFamily::Conjugation {
                generators: vec![e("abacaba", k3)],
                modulus: e("abac + abacab", k3),
            },
            13,
        ),
        ("two-block, t = s", &two_block, red("ab", "ab", k3), 5),
        (
            "two-block, swapped pair",
            &two_block,
            red("ba", "ab", k3),
            5,
        ),
        ("three-block, t = s", &three_block, red("ab", "ab", 2), 3),
    ];
    for (name, eq, family, d) in cases {
        let report =
            verify_family(eq, &family, &VerifyOptions::new(d)).map_err(|e| e.to_string())?;
        let fail = report.first_failure().ok_or(format!("{name}: accepted"))?;
        let w = fail
            .witness
            .clone()
            .ok_or(format!("{name}: {} failed without a witness", fail.name))?;
        let genuine = match fail.name {
            "membership" => !eq.is_solution(&w),
            "completeness" => {
                eq.is_solution(&w) && family.span_up_to(d).map_or(true, |s| !s.contains(&w))
            }
            _ => eq.is_solution(&w),
        };
        ensure(genuine, || {
            format!("{name}: witness {w} does not falsify the family")
        })?;
        ensure(fail.status == CheckStatus::Fail, || {
            format!("{name}: bad status")
        })?;

        // same verdict through the command line
        let file = tmp(&format!(
            "negative_{}.json",
            name.replace([' ', ',', '='], "_")
        ));
        std::fs::write(&file, family.to_json()).unwrap();
        let out = Command::new(env!("CARGO_BIN_EXE_freealg"))
            .args(["verify", "--u-coeffs"])
            .arg(
                eq.u()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(";"),
            )
            .arg("--v-coeffs")
            .arg(
                eq.v()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(";"),
            )
            .args([
                "--family",
                file.to_str().unwrap(),
                "--max-degree",
                &d.to_string(),
            ])
            .args(["--alphabet", &eq.alphabet().to_string()])
            .env_remove("FREEALG_COLUMN_CAP")
            .env_remove("FREEALG_CANDIDATE_CAP")
            .output()
            .unwrap();
        ensure(out.status.code() == Some(1), || {
            format!(
                "{name}: exit code {:?}: {}",
                out.status.code(),
                String::from_utf8_lossy(&out.stderr)
            )
        })?;
    }
    Ok(
        "6 corrupted families and wrong pairs rejected with a falsifying witness, exit code 1"
            .into(),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("golden example", golden),
        ("centralizer suite", centralizer_suite),
        ("conjugate pairs", conjugate_pairs),
        ("two-block round trip", two_block_round_trip),
        ("three- and five-block reductions", general_instances),
        ("domain property", domain_property),
        ("homsys equivalence", homsys_equivalence),
        ("negative controls", negative_controls),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {} {name}: PASS ({secs:.1}s) {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({secs:.1}s) {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
