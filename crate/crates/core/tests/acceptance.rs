//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the PASS/FAIL lines always show up in `cargo test` output.

use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::Rng;

use cantor::correspondence::{generate_witness, Witness};
use cantor::duality::check_pre_derivation_duality;
use cantor::random::{self, Bounds};
use cantor::syntax::{format_ordinal, format_space, parse_ordinal, parse_space};
use cantor::{CanonicalSpace, Cardinality, Ordinal, Point, SpaceExpr};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, u64, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn o(s: &str) -> Ordinal {
    s.parse().unwrap()
}

fn can(a: &str, d: u64) -> CanonicalSpace {
    CanonicalSpace::new(o(a), d).unwrap()
}

/// Ordinals below `w^4` as coefficient tuples, leading exponent first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Small([u64; 4]);

impl Small {
    fn random<R: Rng>(rng: &mut R) -> Small {
        let mut c = [0; 4];
        for x in &mut c {
            *x = if rng.gen_bool(0.4) {
                0
            } else {
                rng.gen_range(1..=9)
            };
        }
        Small(c)
    }

    // Terms of `self` below the leading exponent of `b` are absorbed.
    fn add(self, b: Small) -> Small {
        let Some(k) = b.0.iter().position(|&c| c > 0) else {
            return self;
        };
        let mut c = [0; 4];
        c[..k].copy_from_slice(&self.0[..k]);
        c[k] = self.0[k] + b.0[k];
        c[k + 1..].copy_from_slice(&b.0[k + 1..]);
        Small(c)
    }

    fn natural_sum(self, b: Small) -> Small {
        Small(std::array::from_fn(|i| self.0[i] + b.0[i]))
    }

    fn to_ordinal(self) -> Ordinal {
        let terms = (0..4)
            .filter(|&i| self.0[i] > 0)
            .map(|i| (Ordinal::from(3 - i as u64), self.0[i]))
            .collect();
        Ordinal::from_terms(terms).unwrap()
    }
}

/// Coefficient-wise merge by exponent, independent of the engine's sum.
fn merged(a: &Ordinal, b: &Ordinal) -> Ordinal {
    let mut by_exponent: BTreeMap<Ordinal, u64> = BTreeMap::new();
    for t in a.terms().iter().chain(b.terms()) {
        *by_exponent.entry(t.exponent().clone()).or_default() += t.coefficient();
    }
    Ordinal::from_terms(by_exponent.into_iter().rev().collect()).unwrap()
}

fn criterion_1() -> Outcome {
    let mut rng = random::seeded(1);
    for _ in 0..10_000 {
        let (a, b) = (Small::random(&mut rng), Small::random(&mut rng));
        let (x, y) = (a.to_ordinal(), b.to_ordinal());
        ensure!(&x + &y == a.add(b).to_ordinal(), "add disagrees on {x}, {y}");
        ensure!(
            x.natural_sum(&y) == a.natural_sum(b).to_ordinal(),
            "natural sum disagrees on {x}, {y}"
        );
    }
    let bounds = Bounds::default();
    for _ in 0..1_000 {
        let (a, b, c) = (
            random::ordinal(&mut rng, &bounds),
            random::ordinal(&mut rng, &bounds),
            random::ordinal(&mut rng, &bounds),
        );
        ensure!(
            &(&a + &b) + &c == &a + &(&b + &c),
            "add not associative on {a}, {b}, {c}"
        );
        ensure!(
            a.natural_sum(&b).natural_sum(&c) == a.natural_sum(&b.natural_sum(&c)),
            "natural sum not associative on {a}, {b}, {c}"
        );
        ensure!(
            a.natural_sum(&b) == b.natural_sum(&a),
            "natural sum not commutative on {a}, {b}"
        );
        ensure!(
            a.natural_sum(&b) >= &a + &b,
            "natural sum below ordinal sum on {a}, {b}"
        );
        let (lo, hi) = if a < b { (&a, &b) } else { (&b, &a) };
        if lo < hi {
            ensure!(
                lo.natural_sum(&c) < hi.natural_sum(&c),
                "not strictly monotone: {lo} < {hi}, {c}"
            );
            ensure!(
                c.natural_sum(lo) < c.natural_sum(hi),
                "not strictly monotone: {c}, {lo} < {hi}"
            );
        }
    }
    Ok("10000 pairs below w^4 agree with the tuple oracle; 1000 trials each of the laws".into())
}

fn criterion_2() -> Outcome {
    ensure!(
        o("w+1").natural_sum(&o("w+1")) == o("w*2+2"),
        "(w+1) (+) (w+1) is not w*2 + 2"
    );
    let mut rng = random::seeded(2);
    let bounds = Bounds::default();
    for _ in 0..1_000 {
        let (a, b) = (
            random::ordinal(&mut rng, &bounds),
            random::ordinal(&mut rng, &bounds),
        );
        ensure!(
            a.natural_sum(&b) == merged(&a, &b),
            "natural sum differs from merge on {a}, {b}"
        );
    }
    Ok("(w+1) (+) (w+1) = w*2 + 2; 1000 pairs match the coefficient merge".into())
}

fn criterion_3() -> Outcome {
    let mut rng = random::seeded(3);
    let bounds = Bounds::default();
    let one = CanonicalSpace::point();
    let empty = CanonicalSpace::Empty;
    for _ in 0..1_000 {
        let x = random::space_or_empty(&mut rng, &bounds);
        let y = random::space_or_empty(&mut rng, &bounds);
        let z = random::space_or_empty(&mut rng, &bounds);
        let eq = |a: &CanonicalSpace, b: &CanonicalSpace| a.equivalent(b);
        ensure!(
            eq(&x.sum(&y).sum(&z), &x.sum(&y.sum(&z))),
            "sum associativity: {x} {y} {z}"
        );
        ensure!(eq(&x.sum(&y), &y.sum(&x)), "sum commutativity: {x} {y}");
        ensure!(
            eq(&x.product(&y).product(&z), &x.product(&y.product(&z))),
            "product associativity: {x} {y} {z}"
        );
        ensure!(
            eq(&x.product(&y), &y.product(&x)),
            "product commutativity: {x} {y}"
        );
        ensure!(
            eq(&x.product(&y.sum(&z)), &x.product(&y).sum(&x.product(&z))),
            "distributivity: {x} {y} {z}"
        );
        ensure!(eq(&x.sum(&empty), &x), "additive identity: {x}");
        ensure!(eq(&x.product(&one), &x), "multiplicative identity: {x}");
        ensure!(x.product(&empty).is_empty(), "absorption: {x}");
        ensure!(
            x.product(&y).is_empty() == (x.is_empty() || y.is_empty()),
            "integrality: {x} {y}"
        );
    }
    Ok("1000 triples, no violations".into())
}

fn criterion_4() -> Outcome {
    let mut rng = random::seeded(4);
    let bounds = Bounds::default();
    for _ in 0..1_000 {
        let x = random::space(&mut rng, &bounds);
        let y = random::space(&mut rng, &bounds);
        let lhs = x.product(&y).derivative();
        let rhs = x.derivative().product(&y).sum(&x.product(&y.derivative()));
        ensure!(lhs.equivalent(&rhs), "Leibniz fails on {x}, {y}: {lhs} vs {rhs}");
    }
    let x = can("1", 1);
    let lhs = x.product(&x).derivative();
    let rhs = x.derivative().product(&x).sum(&x.product(&x.derivative()));
    ensure!(lhs == can("1", 1), "D(x*x) is {lhs}");
    ensure!(rhs == can("1", 2), "right side is {rhs}");
    ensure!(lhs.equivalent(&rhs), "sides not equivalent");
    Ok("1000 pairs; D(can(1,1) x can(1,1)) = can(1, 1) vs right side can(1, 2)".into())
}

fn criterion_5() -> Outcome {
    let mut rng = random::seeded(5);
    let bounds = Bounds::default();
    for _ in 0..1_000 {
        let x = random::space(&mut rng, &bounds);
        let y = random::space(&mut rng, &bounds);
        let (a, b) = (x.cb_star().unwrap(), y.cb_star().unwrap());
        ensure!(x.sum(&y).cb_star() == Some(a.max(b)), "sum rank on {x}, {y}");
        ensure!(
            x.product(&y).cb_star() == Some(&a.natural_sum(b)),
            "product rank on {x}, {y}"
        );
    }
    Ok("1000 pairs".into())
}

/// Sub-multisets of the terms of `beta` using exponents at most `cap`.
fn sub_multisets(beta: &Ordinal, cap: &Ordinal) -> Vec<Ordinal> {
    let mut out: Vec<Vec<(Ordinal, u64)>> = vec![Vec::new()];
    for t in beta.terms().iter().filter(|t| t.exponent() <= cap) {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=t.coefficient()).map(move |c| {
                    let mut p = prefix.clone();
                    if c > 0 {
                        p.push((t.exponent().clone(), c));
                    }
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(|t| Ordinal::from_terms(t).unwrap()).collect()
}

/// Coefficient-wise difference; `None` unless `small` is a sub-multiset.
fn multiset_difference(big: &Ordinal, small: &Ordinal) -> Option<Ordinal> {
    let mut terms = Vec::new();
    for t in big.terms() {
        let c = t.coefficient().checked_sub(small.coefficient_of(t.exponent()))?;
        if c > 0 {
            terms.push((t.exponent().clone(), c));
        }
    }
    Ordinal::from_terms(terms).ok()
}

fn criterion_6() -> Outcome {
    let mut rng = random::seeded(6);
    let bounds = Bounds::default();
    let small = Bounds {
        max_nesting: 1,
        max_coeff: 3,
        max_depth: 2,
        max_terms: 2,
    };
    let mut ranks_checked = 0;
    for _ in 0..500 {
        let e = random::expr(&mut rng, &bounds);
        let c = e.canonicalize();
        match c.cb_star() {
            Some(top) => {
                ensure!(
                    e.count_points_of_rank(top) == Cardinality::Finite(c.degree()),
                    "top stratum of {e} is not {}",
                    c.degree()
                );
                ensure!(
                    e.count_points_of_rank(&top.successor()).is_zero(),
                    "{e} has points above {top}"
                );
            }
            None => ensure!(
                e.count_points_of_rank(&Ordinal::zero()).is_zero(),
                "{e} should be empty"
            ),
        }

        // Product with a small factor: every split of a rank between the
        // factors is listed by brute force.
        let f = random::expr(&mut rng, &small);
        let Some(f_top) = f.canonicalize().cb_star().cloned() else {
            continue;
        };
        if c.is_empty() {
            continue;
        }
        let cap = f_top.leading_exponent().map_or(Ordinal::zero(), Clone::clone);
        let p = SpaceExpr::product(e.clone(), f.clone());
        for k in 0..20 {
            let beta = match k {
                0 => p.canonicalize().cb_star().unwrap().clone(),
                _ => match random::point(&mut rng, &p) {
                    Some(pt) if k % 2 == 0 => p.point_rank(&pt).unwrap(),
                    _ => random::ordinal_below(&mut rng, p.canonicalize().cb_star().unwrap()),
                },
            };
            let mut expected = Cardinality::ZERO;
            for delta in sub_multisets(&beta, &cap) {
                let gamma = multiset_difference(&beta, &delta).unwrap();
                ensure!(gamma.natural_sum(&delta) == beta, "bad split of {beta}");
                expected = expected + e.count_points_of_rank(&gamma) * f.count_points_of_rank(&delta);
            }
            let got = p.count_points_of_rank(&beta);
            ensure!(
                got == expected,
                "stratum {beta} of {p}: {got} vs brute force {expected}"
            );
            ranks_checked += 1;
        }
    }
    Ok(format!(
        "500 expressions; product formula at {ranks_checked} ranks"
    ))
}

fn criterion_7() -> Outcome {
    let mut rng = random::seeded(7);
    let bounds = Bounds::default();
    let mut sampled = 0;
    while sampled < 1_000 {
        let x = random::expr(&mut rng, &bounds);
        let y = random::expr(&mut rng, &bounds);
        let p = SpaceExpr::product(x.clone(), y.clone());
        let Some(pt) = random::point(&mut rng, &p) else {
            continue;
        };
        let Point::Pair(a, b) = &pt else {
            return Err(format!("{pt} is not a pair"));
        };
        let both = x.is_isolated(a).unwrap() && y.is_isolated(b).unwrap();
        ensure!(p.is_isolated(&pt).unwrap() == both, "isolation of {pt} in {p}");
        let limit = !p.point_rank(&pt).unwrap().is_zero();
        let either = !x.point_rank(a).unwrap().is_zero() || !y.point_rank(b).unwrap().is_zero();
        ensure!(limit == either, "derivative rule at {pt} in {p}");
        sampled += 1;
    }
    let universe = [0u8, 1, 2];
    let subsets: Vec<Vec<u8>> = (0..8u8)
        .map(|mask| {
            universe
                .iter()
                .copied()
                .filter(|i| mask & (1 << i) != 0)
                .collect()
        })
        .collect();
    let mut operators = 0;
    for sa in &subsets {
        for sb in &subsets {
            let fa =
                |s: &std::collections::BTreeSet<u8>| s.iter().filter(|x| sa.contains(x)).copied().collect();
            let fb =
                |t: &std::collections::BTreeSet<u8>| t.iter().filter(|x| sb.contains(x)).copied().collect();
            ensure!(
                check_pre_derivation_duality(&universe, &universe, fa, fb) == Ok(true),
                "duality fails for S0 = {sa:?}, T0 = {sb:?}"
            );
            operators += 1;
        }
    }
    Ok(format!(
        "1000 product points; {operators} operator pairs on 3-element universes"
    ))
}

fn criterion_8() -> Outcome {
    let alphas = ["1", "2", "w", "w+1", "w^w"];
    let mut cases = 0;
    for alpha in alphas {
        for m in 1..=5 {
            for n in 1..=5 {
                let (x, y) = (can(alpha, m), can(alpha, n));
                let w = generate_witness(&x, &y).map_err(|e| e.to_string())?;
                let report = w.check();
                ensure!(report.valid, "{x} -> {y}: {}", report.validity);
                ensure!(report.rank_preserving, "{x} -> {y} not rank preserving");
                ensure!(report.lemma1.holds(), "{x} -> {y}: {}", report.lemma1);
                cases += 1;
            }
        }
    }
    let Witness::Piecewise(c) = generate_witness(&can("1", 2), &can("1", 1)).unwrap() else {
        return Err("expected a piecewise witness".into());
    };
    let report = c.validate();
    ensure!(
        report.multiplicity == (2, 1),
        "multiplicity {:?}",
        report.multiplicity
    );
    ensure!(c.preimage(&o("w")).len() == 2, "w should have two preimages");
    for x in (0..60).map(Ordinal::from).chain([o("w"), o("w*2"), o("w+7")]) {
        ensure!(c.apply(&x).unwrap().len() == 1, "{x} should have one image");
    }
    let lemma = c.check_lemma1_conclusions().unwrap();
    ensure!(
        lemma.to_string() == "ranks 2 = 2; bounds 1/1 <= 2 <= 2*1",
        "{lemma}"
    );
    Ok(format!(
        "{cases} witnesses; can(1, 2) -> can(1, 1) is 2-to-1 with 1 <= 2 <= 2"
    ))
}

fn criterion_9() -> Outcome {
    let mut rng = random::seeded(9);
    let bounds = Bounds::default();
    let limits = [o("w"), o("w*2")];
    for i in 0..1_000 {
        let x = random::space_or_empty(&mut rng, &bounds);
        let mut beta = |j: usize| {
            if (i + j).is_multiple_of(4) {
                limits[(i / 4 + j) % 2].clone()
            } else {
                random::ordinal_nested(&mut rng, 2, &bounds)
            }
        };
        let (b1, b2) = (beta(0), beta(1));
        ensure!(
            x.iterated_derivative(&(&b1 + &b2)) == x.iterated_derivative(&b1).iterated_derivative(&b2),
            "{x} at {b1} then {b2}"
        );
        let mut step = x.clone();
        for k in 0..=10u64 {
            ensure!(
                step == x.iterated_derivative(&Ordinal::from(k)),
                "{x} after {k} derivatives"
            );
            step = step.derivative();
        }
    }
    Ok("1000 instances, limit steps w and w*2 included".into())
}

fn criterion_10() -> Outcome {
    let mut rng = random::seeded(10);
    let bounds = Bounds::default();
    for _ in 0..1_000 {
        let a = random::ordinal(&mut rng, &bounds);
        let text = format_ordinal(&a);
        ensure!(
            parse_ordinal(&text).as_ref() == Ok(&a),
            "ordinal round trip on {text}"
        );
        let e = random::expr(&mut rng, &bounds);
        let text = format_space(&e);
        ensure!(
            parse_space(&text).as_ref() == Ok(&e),
            "space round trip on {text}"
        );
    }
    let alphabet = b"w0123456789+*^()[],xDcanempty (+)\t\n\xce\xc9\xff";
    for _ in 0..10_000 {
        let len = rng.gen_range(0..24);
        let bytes: Vec<u8> = (0..len)
            .map(|_| {
                if rng.gen_bool(0.9) {
                    alphabet[rng.gen_range(0..alphabet.len())]
                } else {
                    rng.gen()
                }
            })
            .collect();
        let text = String::from_utf8_lossy(&bytes);
        for err in [parse_ordinal(&text).err(), parse_space(&text).err()]
            .into_iter()
            .flatten()
        {
            ensure!(
                err.span.start <= err.span.end && err.span.end <= text.len(),
                "span {:?} outside {text:?}",
                err.span
            );
        }
        if let Ok(e) = parse_space(&text) {
            ensure!(parse_space(&format_space(&e)) == Ok(e), "idempotence on {text:?}");
        }
    }
    Ok("1000 ordinals and 1000 expressions round trip; 10000 fuzzed inputs".into())
}

fn criterion_11() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_cantor");
    let laws = Command::new(bin)
        .args(["laws", "--trials", "1000", "--seed", "7"])
        .env_remove("CANTOR_SEED")
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(
        laws.status.code() == Some(0),
        "laws exited with {:?}: {}",
        laws.status.code(),
        String::from_utf8_lossy(&laws.stdout)
    );
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("witness.json");
    let equiv = Command::new(bin)
        .args(["equiv", "D(can(2,1) x can(2,1))", "can(3,1)", "--witness-out"])
        .arg(&path)
        .output()
        .map_err(|e| e.to_string())?;
    let stdout = String::from_utf8_lossy(&equiv.stdout);
    ensure!(
        equiv.status.code() == Some(0),
        "equiv exited with {:?}",
        equiv.status.code()
    );
    ensure!(stdout.starts_with("equivalent: yes"), "equiv said {stdout}");
    let check = Command::new(bin)
        .arg("check")
        .arg(&path)
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(
        check.status.code() == Some(0),
        "check exited with {:?}: {}",
        check.status.code(),
        String::from_utf8_lossy(&check.stdout)
    );
    Ok("laws exit 0; equiv answers yes; check validates the witness".into())
}

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "ordinal engine", 5, criterion_1),
        (2, "natural sum exactness", 1, criterion_2),
        (3, "semiring laws modulo equivalence", 5, criterion_3),
        (4, "derivation law", 2, criterion_4),
        (5, "rank homomorphism", 2, criterion_5),
        (6, "oracle and algebra agree", 30, criterion_6),
        (7, "point-level pre-derivation", 10, criterion_7),
        (8, "correspondence engine", 5, criterion_8),
        (9, "iterated derivatives", 5, criterion_9),
        (10, "parser", 10, criterion_10),
        (11, "command line", 60, criterion_11),
    ];
    panic::set_hook(Box::new(|_| {}));
    let total = Instant::now();
    let mut failed = 0;
    for (n, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > Duration::from_secs(limit) => {
                Err(format!("took {:.2}s, limit {limit}s", elapsed.as_secs_f64()))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!(
                "PASS criterion {n:>2} {name} ({:.2}s): {detail}",
                elapsed.as_secs_f64()
            ),
            Err(detail) => {
                failed += 1;
                println!(
                    "FAIL criterion {n:>2} {name} ({:.2}s): {detail}",
                    elapsed.as_secs_f64()
                )
            }
        }
    }
    let elapsed = total.elapsed();
    if elapsed > Duration::from_secs(60) {
        failed += 1;
        println!("FAIL total time {:.2}s exceeds 60s", elapsed.as_secs_f64());
    }
    println!(
        "{} of 11 criteria passed in {:.2}s",
        11 - failed.min(11),
        elapsed.as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
