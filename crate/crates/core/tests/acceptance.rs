//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Every comparison is exact (coefficientwise on integer polynomials or
//! entry-for-entry on census tables). Runtime bounds are wall-clock.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use daisy::census::{
    census_daisy_fast, census_oracle, closed_form_w, cube_polynomial, ClosedForm, CubeComplex,
};
use daisy::family::{fibonacci, hypercube, lucas, vertex_deleted};
use daisy::gf::{expand, SeriesFamily};
use daisy::poly::binomial;
use daisy::verify::{
    check_d_from_c, check_engine_equivalence, check_kleitman, check_partial_cube, check_product,
    check_tree_like, check_w_relations, daisy_matrix, non_isometric_path, q3_minus_reference,
    random_generators, CheckReport, Instance, Subject, SuiteConfig, Witness,
};
use daisy::{BiPoly, NamedFamily, UniPoly};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn first_failure(reports: &[CheckReport]) -> Option<String> {
    reports.iter().find(|r| !r.passed()).map(|r| r.to_string())
}

fn summarize(reports: Vec<CheckReport>, what: &str) -> Outcome {
    match first_failure(&reports) {
        Some(f) => Err(f),
        None => Ok(format!("{} {what} checks", reports.len())),
    }
}

fn one_x_y() -> BiPoly {
    &(&BiPoly::one() + &BiPoly::x()) + &BiPoly::y()
}

fn matrix() -> Vec<Subject> {
    daisy_matrix(&SuiteConfig::default()).expect("matrix builds")
}

/// 1. W and D of Q_3^- at 000, 100, 110 and C_{Q_3^-} = 7 + 9x + 3x^2, by
/// the oracle, in under one second.
fn q3_minus_reproduction() -> Outcome {
    let start = Instant::now();
    let g = vertex_deleted(3).map_err(|e| e.to_string())?;
    let mut matched = 0;
    for (label, u, w, d) in q3_minus_reference() {
        let census = census_oracle(g.vertices(), &u).map_err(|e| e.to_string())?;
        if census.weight_poly() != w {
            return Err(format!("W at {label}: got {}, expected {w}", census.weight_poly()));
        }
        if census.distance_poly() != d {
            return Err(format!("D at {label}: got {}, expected {d}", census.distance_poly()));
        }
        if census.cube_poly() != UniPoly::from_coeffs(&[7, 9, 3]) {
            return Err(format!("C from anchor {label}: got {}", census.cube_poly()));
        }
        matched += 2;
    }
    matched += 1;
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(1) {
        return Err(format!("took {elapsed:?}, limit 1 s"));
    }
    Ok(format!("{matched} polynomials exact in {elapsed:?}"))
}

/// 2. C_{Q_n} = (2+x)^n and D_{Q_n,u} = (1+x+y)^n at every anchor for
/// n = 1..10, fast path, n = 10 in under 30 s.
fn hypercube_closed_forms() -> Outcome {
    let mut n10 = Duration::ZERO;
    for n in 1..=10usize {
        let start = Instant::now();
        let q = hypercube(n).map_err(|e| e.to_string())?;
        let c = cube_polynomial(q.vertices());
        if c != UniPoly::from_coeffs(&[2, 1]).pow(n as u32) {
            return Err(format!("C_Q{n} = {c}"));
        }
        let expected = one_x_y().pow(n as u32);
        for u in q.vertices().iter() {
            let census = census_daisy_fast(&q, &u).map_err(|e| e.to_string())?;
            if census.cube_poly() != c {
                return Err(format!("C_Q{n} from anchor {u} = {}", census.cube_poly()));
            }
            if census.distance_poly() != expected {
                return Err(format!("D_Q{n},{u} = {}", census.distance_poly()));
            }
        }
        if n == 10 {
            n10 = start.elapsed();
        }
    }
    if n10 >= Duration::from_secs(30) {
        return Err(format!("n = 10 took {n10:?}, limit 30 s"));
    }
    Ok(format!("n = 1..10 exact, n = 10 in {n10:?}"))
}

/// 3. D_{G,0^n} = C_G(x+y-1) on the matrix.
fn d_from_c(m: &[Subject]) -> Outcome {
    summarize(m.par_iter().map(check_d_from_c).collect(), "D-from-C")
}

/// 4. D_{G,u}(x,-x) = 1 at every vertex of every matrix instance.
fn tree_like(m: &[Subject]) -> Outcome {
    let reports: Vec<CheckReport> = m.par_iter().map(check_tree_like).collect();
    let anchors: usize = m.iter().map(|s| s.cube.vertices().len()).sum();
    summarize(reports, "tree-like").map(|s| format!("{s}, {anchors} anchors"))
}

/// 5. D = W(x+y), C = W(x+1) on the matrix, and the oracle W matches the
/// binomial closed forms for Fibonacci and Lucas cubes, n <= 12.
fn w_relations(m: &[Subject]) -> Outcome {
    summarize(m.par_iter().map(check_w_relations).collect(), "W-relation")?;
    let mut typo_rejected = 0;
    for n in 1..=12usize {
        for (family, cube) in [
            (ClosedForm::Fibonacci, fibonacci(n).unwrap()),
            (ClosedForm::Lucas, lucas(n).unwrap()),
        ] {
            let w = census_oracle(cube.vertices(), &cube.zero()).unwrap().weight_poly();
            let closed = closed_form_w(family, n);
            if w != closed {
                return Err(format!("{family:?} n={n}: census W = {w}, closed form {closed}"));
            }
            if family == ClosedForm::Lucas {
                // The variant with C(n-k+1, k) in place of C(n-k-1, k).
                let n = n as i64;
                let variant: Vec<BigInt> = (0..=n / 2)
                    .map(|k| BigInt::from(2) * binomial(n - k, k) - binomial(n - k + 1, k))
                    .collect();
                if UniPoly::from_coeffs(&variant) != w {
                    typo_rejected += 1;
                }
            }
        }
    }
    Ok(format!(
        "{} instances; closed forms exact for n <= 12; C(n-k+1,k) variant disagrees with the census for {typo_rejected}/12 Lucas sizes",
        m.len()
    ))
}

/// 6. Printed f, g, h of {Q_n} and {Λ_n} against censuses for n <= 10, and
/// g = f(x+1, z), h = f(x+y, z) to z^10.
fn generating_functions() -> Outcome {
    for family in [SeriesFamily::Hypercube, SeriesFamily::Lucas] {
        for row in expand(family, 10) {
            if row.g != row.f.substitute_univariate_shift() || row.h != row.f.substitute_sum() {
                return Err(format!("{family} z^{}: substitution mismatch", row.n));
            }
            let cube = match (family, row.n) {
                (_, 0) => fibonacci(0).unwrap(),
                (SeriesFamily::Hypercube, n) => hypercube(n).unwrap(),
                (_, n) => lucas(n).unwrap(),
            };
            let census = census_oracle(cube.vertices(), &cube.zero()).unwrap();
            if census.weight_poly() != row.f || census.cube_poly() != row.g || census.distance_poly() != row.h {
                return Err(format!(
                    "{family} n={}: census (W={}, C={}, D={}) vs series (f={}, g={}, h={})",
                    row.n,
                    census.weight_poly(),
                    census.cube_poly(),
                    census.distance_poly(),
                    row.f,
                    row.g,
                    row.h
                ));
            }
        }
    }
    Ok("hypercube and lucas, z^0..z^10 exact".into())
}

/// 7. Fast path equals oracle entry-for-entry at every anchor.
fn engine_equivalence(m: &[Subject]) -> Outcome {
    let reports: Vec<CheckReport> = m.par_iter().map(check_engine_equivalence).collect();
    // Spot the wiring: one census computed both ways outside the check.
    let g = vertex_deleted(4).unwrap();
    let u = "0110".parse().unwrap();
    if CubeComplex::new(g.vertices()).census(&u).unwrap() != census_daisy_fast(&g, &u).unwrap() {
        return Err("Q_4^- at 0110 disagrees".into());
    }
    let anchors: usize = m.iter().map(|s| s.cube.vertices().len()).sum();
    summarize(reports, "engine").map(|s| format!("{s}, {anchors} anchors"))
}

/// 8. Partial cube on every daisy cube of the matrix with n <= 8; failure
/// with witness (000, 011) on the crafted non-isometric path.
fn partial_cube(m: &[Subject]) -> Outcome {
    let reports: Vec<CheckReport> = m
        .par_iter()
        .filter(|s| s.instance.n <= 8)
        .map(|s| check_partial_cube(s.instance.clone(), s.cube.vertices()))
        .collect();
    let passed = summarize(reports, "partial-cube")?;
    let bad = check_partial_cube(Instance::family("non-isometric path", 3), &non_isometric_path());
    let expected = Witness::VertexPair { u: "000".into(), v: "011".into(), graph_distance: Some(4), hamming: 2 };
    if bad.passed() || bad.witness.as_ref() != Some(&expected) {
        return Err(format!("negative control: {bad}"));
    }
    Ok(format!("{passed}; negative control fails with {}", expected))
}

/// 9. D_{G□H,(g,h)} = D_{G,g} D_{H,h} for factors {Q_1, Q_2, Γ_2, Γ_3, Λ_3}.
fn product_multiplicativity() -> Outcome {
    let factors: Vec<Subject> = [
        (NamedFamily::Hypercube, 1),
        (NamedFamily::Hypercube, 2),
        (NamedFamily::Fibonacci, 2),
        (NamedFamily::Fibonacci, 3),
        (NamedFamily::Lucas, 3),
    ]
    .into_iter()
    .map(|(f, n)| Subject::named(f, n).unwrap())
    .collect();
    let mut reports = Vec::new();
    for g in &factors {
        for h in &factors {
            for a in g.cube.vertices().iter() {
                for b in h.cube.vertices().iter() {
                    reports.push(check_product(g, h, &a, &b).map_err(|e| e.to_string())?);
                }
            }
        }
    }
    summarize(reports, "product")
}

/// 10. Kleitman's inequality on 1000 seeded random hereditary pairs, n = 8.
fn kleitman() -> Outcome {
    let cfg = SuiteConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut reports = Vec::new();
    for _ in 0..1000 {
        let x = random_generators(&mut rng, 8, cfg.random_max_generators);
        let y = random_generators(&mut rng, 8, cfg.random_max_generators);
        reports.push(check_kleitman(&x, &y, Some(cfg.seed)).map_err(|e| e.to_string())?);
    }
    summarize(reports, "kleitman")
}

fn main() -> ExitCode {
    let m = matrix();
    let named = m.iter().filter(|s| s.instance.generators.is_none()).count();
    println!(
        "matrix: {named} named instances (n <= 10) + {} seeded random daisy cubes (n <= 8)",
        m.len() - named
    );
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("1 Q_3^- reproduction", Box::new(q3_minus_reproduction)),
        ("2 hypercube closed forms", Box::new(hypercube_closed_forms)),
        ("3 D from C", Box::new(|| d_from_c(&m))),
        ("4 D(x,-x) = 1 at every vertex", Box::new(|| tree_like(&m))),
        ("5 W relations and closed forms", Box::new(|| w_relations(&m))),
        ("6 generating functions", Box::new(generating_functions)),
        ("7 oracle/fast equivalence", Box::new(|| engine_equivalence(&m))),
        ("8 partial cube", Box::new(|| partial_cube(&m))),
        ("9 product multiplicativity", Box::new(product_multiplicativity)),
        ("10 Kleitman inequality", Box::new(kleitman)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        match run() {
            Ok(msg) => println!("PASS  criterion {name}: {msg} [{:?}]", start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {name}: {msg} [{:?}]", start.elapsed());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
