//! Seeded property suite over the space algebra.
//!
//! Every law is checked against an implementation of [`SpaceOps`]. The
//! default one is the library itself; tests swap in deliberately broken
//! versions to see the suite catch them. Failing instances are shrunk
//! greedily before being reported.

use std::fmt;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cardinality::Cardinality;
use crate::correspondence::generate_witness;
use crate::expr::SpaceExpr;
use crate::ordinal::Ordinal;
use crate::random::{self, Bounds};
use crate::space::CanonicalSpace;

/// The closed-form operations under test.
pub trait SpaceOps {
    fn sum(&self, x: &CanonicalSpace, y: &CanonicalSpace) -> CanonicalSpace {
        x.sum(y)
    }

    fn product(&self, x: &CanonicalSpace, y: &CanonicalSpace) -> CanonicalSpace {
        x.product(y)
    }

    fn derivative(&self, x: &CanonicalSpace) -> CanonicalSpace {
        x.derivative()
    }

    fn iterated_derivative(&self, x: &CanonicalSpace, beta: &Ordinal) -> CanonicalSpace {
        x.iterated_derivative(beta)
    }

    fn equivalent(&self, x: &CanonicalSpace, y: &CanonicalSpace) -> bool {
        x.equivalent(y)
    }

    fn canonicalize(&self, e: &SpaceExpr) -> CanonicalSpace {
        match e {
            SpaceExpr::Canonical(s) => s.clone(),
            SpaceExpr::Union(l, r) => self.sum(&self.canonicalize(l), &self.canonicalize(r)),
            SpaceExpr::Product(l, r) => self.product(&self.canonicalize(l), &self.canonicalize(r)),
            SpaceExpr::Derivative(x) => self.derivative(&self.canonicalize(x)),
            SpaceExpr::IteratedDerivative(x, beta) => self.iterated_derivative(&self.canonicalize(x), beta),
        }
    }
}

/// The library's own rules.
pub struct Standard;

impl SpaceOps for Standard {}

/// An argument of a law instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Space(CanonicalSpace),
    Ordinal(Ordinal),
    Expr(SpaceExpr),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Space(s) => write!(f, "{s}"),
            Value::Ordinal(o) => write!(f, "{o}"),
            Value::Expr(e) => write!(f, "{e}"),
        }
    }
}

type Generate = fn(&mut ChaCha8Rng, &Bounds) -> Vec<Value>;
type Check = fn(&dyn SpaceOps, &[Value]) -> bool;

pub struct Law {
    pub name: &'static str,
    pub args: &'static [&'static str],
    generate: Generate,
    check: Check,
}

impl Law {
    pub fn holds(&self, ops: &dyn SpaceOps, values: &[Value]) -> bool {
        (self.check)(ops, values)
    }
}

fn space(v: &Value) -> &CanonicalSpace {
    match v {
        Value::Space(s) => s,
        _ => panic!("expected a space, got {v}"),
    }
}

fn ordinal(v: &Value) -> &Ordinal {
    match v {
        Value::Ordinal(o) => o,
        _ => panic!("expected an ordinal, got {v}"),
    }
}

fn expr(v: &Value) -> &SpaceExpr {
    match v {
        Value::Expr(e) => e,
        _ => panic!("expected an expression, got {v}"),
    }
}

fn spaces(n: usize) -> Generate {
    match n {
        1 => |rng, b| vec![Value::Space(random::space_or_empty(rng, b))],
        2 => |rng, b| {
            (0..2)
                .map(|_| Value::Space(random::space_or_empty(rng, b)))
                .collect()
        },
        _ => |rng, b| {
            (0..3)
                .map(|_| Value::Space(random::space_or_empty(rng, b)))
                .collect()
        },
    }
}

fn nonempty_pair(rng: &mut ChaCha8Rng, b: &Bounds) -> Vec<Value> {
    (0..2).map(|_| Value::Space(random::space(rng, b))).collect()
}

fn same_rank_pair(rng: &mut ChaCha8Rng, b: &Bounds) -> Vec<Value> {
    let alpha = random::ordinal(rng, b);
    let mut side = || {
        let d = rng.gen_range(1..=b.max_coeff.max(1));
        Value::Space(CanonicalSpace::new(alpha.clone(), d).expect("positive degree"))
    };
    vec![side(), side()]
}

fn space_and_two_ordinals(rng: &mut ChaCha8Rng, b: &Bounds) -> Vec<Value> {
    let x = random::space_or_empty(rng, b);
    let mut beta = || {
        let limits = [Ordinal::omega(), Ordinal::term(Ordinal::one(), 2)];
        if rng.gen_bool(0.2) {
            limits[rng.gen_range(0..2)].clone()
        } else {
            random::ordinal_nested(rng, b.max_nesting.min(2), b)
        }
    };
    vec![Value::Space(x), Value::Ordinal(beta()), Value::Ordinal(beta())]
}

fn expression(rng: &mut ChaCha8Rng, b: &Bounds) -> Vec<Value> {
    vec![Value::Expr(random::expr(rng, b))]
}

fn nothing(_: &mut ChaCha8Rng, _: &Bounds) -> Vec<Value> {
    Vec::new()
}

fn can(alpha: u64, d: u64) -> CanonicalSpace {
    CanonicalSpace::new(Ordinal::from(alpha), d).expect("positive degree")
}

/// The full suite, in report order.
pub fn all_laws() -> Vec<Law> {
    vec![
        Law {
            name: "sum associativity",
            args: &["x", "y", "z"],
            generate: spaces(3),
            check: |ops, v| {
                let (x, y, z) = (space(&v[0]), space(&v[1]), space(&v[2]));
                ops.equivalent(&ops.sum(&ops.sum(x, y), z), &ops.sum(x, &ops.sum(y, z)))
            },
        },
        Law {
            name: "sum commutativity",
            args: &["x", "y"],
            generate: spaces(2),
            check: |ops, v| {
                let (x, y) = (space(&v[0]), space(&v[1]));
                ops.equivalent(&ops.sum(x, y), &ops.sum(y, x))
            },
        },
        Law {
            name: "product associativity",
            args: &["x", "y", "z"],
            generate: spaces(3),
            check: |ops, v| {
                let (x, y, z) = (space(&v[0]), space(&v[1]), space(&v[2]));
                ops.equivalent(
                    &ops.product(&ops.product(x, y), z),
                    &ops.product(x, &ops.product(y, z)),
                )
            },
        },
        Law {
            name: "product commutativity",
            args: &["x", "y"],
            generate: spaces(2),
            check: |ops, v| {
                let (x, y) = (space(&v[0]), space(&v[1]));
                ops.equivalent(&ops.product(x, y), &ops.product(y, x))
            },
        },
        Law {
            name: "distributivity",
            args: &["x", "y", "z"],
            generate: spaces(3),
            check: |ops, v| {
                let (x, y, z) = (space(&v[0]), space(&v[1]), space(&v[2]));
                ops.equivalent(
                    &ops.product(x, &ops.sum(y, z)),
                    &ops.sum(&ops.product(x, y), &ops.product(x, z)),
                )
            },
        },
        Law {
            name: "additive identity",
            args: &["x"],
            generate: spaces(1),
            check: |ops, v| {
                let x = space(&v[0]);
                &ops.sum(&CanonicalSpace::Empty, x) == x && &ops.sum(x, &CanonicalSpace::Empty) == x
            },
        },
        Law {
            name: "multiplicative identity",
            args: &["x"],
            generate: spaces(1),
            check: |ops, v| {
                let x = space(&v[0]);
                ops.equivalent(&ops.product(&CanonicalSpace::point(), x), x)
            },
        },
        Law {
            name: "multiplicative absorption",
            args: &["x"],
            generate: spaces(1),
            check: |ops, v| ops.product(&CanonicalSpace::Empty, space(&v[0])).is_empty(),
        },
        Law {
            name: "integrality",
            args: &["x", "y"],
            generate: spaces(2),
            check: |ops, v| {
                let (x, y) = (space(&v[0]), space(&v[1]));
                ops.product(x, y).is_empty() == (x.is_empty() || y.is_empty())
            },
        },
        Law {
            name: "leibniz rule",
            args: &["x", "y"],
            generate: nonempty_pair,
            check: |ops, v| {
                let (x, y) = (space(&v[0]), space(&v[1]));
                if x.is_empty() || y.is_empty() {
                    return true;
                }
                let lhs = ops.derivative(&ops.product(x, y));
                let rhs = ops.sum(
                    &ops.product(&ops.derivative(x), y),
                    &ops.product(x, &ops.derivative(y)),
                );
                ops.equivalent(&lhs, &rhs)
            },
        },
        Law {
            name: "leibniz degree counterexample",
            args: &[],
            generate: nothing,
            check: |ops, _| {
                let x = can(1, 1);
                let lhs = ops.derivative(&ops.product(&x, &x));
                let dx = ops.derivative(&x);
                let rhs = ops.sum(&ops.product(&dx, &x), &ops.product(&x, &dx));
                lhs == can(1, 1) && rhs == can(1, 2) && ops.equivalent(&lhs, &rhs)
            },
        },
        Law {
            name: "derivative additivity",
            args: &["x", "y"],
            generate: spaces(2),
            check: |ops, v| {
                let (x, y) = (space(&v[0]), space(&v[1]));
                ops.derivative(&ops.sum(x, y)) == ops.sum(&ops.derivative(x), &ops.derivative(y))
            },
        },
        Law {
            name: "rank of a sum",
            args: &["x", "y"],
            generate: nonempty_pair,
            check: |ops, v| {
                let (x, y) = (space(&v[0]), space(&v[1]));
                match (x.cb_star(), y.cb_star()) {
                    (Some(a), Some(b)) => ops.sum(x, y).cb_star() == Some(a.max(b)),
                    _ => true,
                }
            },
        },
        Law {
            name: "rank of a product",
            args: &["x", "y"],
            generate: nonempty_pair,
            check: |ops, v| {
                let (x, y) = (space(&v[0]), space(&v[1]));
                match (x.cb_star(), y.cb_star()) {
                    (Some(a), Some(b)) => ops.product(x, y).cb_star() == Some(&a.natural_sum(b)),
                    _ => true,
                }
            },
        },
        Law {
            name: "degree multiplicativity",
            args: &["x", "y"],
            generate: nonempty_pair,
            check: |ops, v| {
                let (x, y) = (space(&v[0]), space(&v[1]));
                let p = ops.product(x, y);
                let e = SpaceExpr::product(SpaceExpr::Canonical(x.clone()), SpaceExpr::Canonical(y.clone()));
                match p.cb_star() {
                    Some(top) => e.count_points_of_rank(top) == Cardinality::Finite(p.degree()),
                    None => e.rank_ceiling().is_none(),
                }
            },
        },
        Law {
            name: "iterated derivative composition",
            args: &["x", "b1", "b2"],
            generate: space_and_two_ordinals,
            check: |ops, v| {
                let (x, b1, b2) = (space(&v[0]), ordinal(&v[1]), ordinal(&v[2]));
                ops.iterated_derivative(x, &(b1 + b2))
                    == ops.iterated_derivative(&ops.iterated_derivative(x, b1), b2)
            },
        },
        Law {
            name: "oracle agreement",
            args: &["e"],
            generate: expression,
            check: |ops, v| {
                let e = expr(&v[0]);
                let c = ops.canonicalize(e);
                match c.cb_star() {
                    None => e.count_points_of_rank(&Ordinal::zero()).is_zero(),
                    Some(top) => {
                        e.count_points_of_rank(top) == Cardinality::Finite(c.degree())
                            && e.count_points_of_rank(&top.successor()).is_zero()
                    }
                }
            },
        },
        Law {
            name: "witness validity",
            args: &["x", "y"],
            generate: same_rank_pair,
            check: |_, v| {
                let (x, y) = (space(&v[0]), space(&v[1]));
                match generate_witness(x, y) {
                    Ok(w) => w.check().passed(),
                    Err(_) => !x.equivalent(y),
                }
            },
        },
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawOutcome {
    pub name: &'static str,
    pub passed: u64,
    pub failed: u64,
    /// Smallest failing instance found, rendered as `name = value` pairs.
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub seed: u64,
    pub trials: u64,
    pub max_depth: usize,
    pub max_coeff: u64,
    pub max_nesting: usize,
    pub laws: Vec<LawOutcome>,
}

impl LawReport {
    pub fn all_passed(&self) -> bool {
        self.laws.iter().all(|l| l.failed == 0)
    }

    pub fn violations(&self) -> impl Iterator<Item = &LawOutcome> {
        self.laws.iter().filter(|l| l.failed > 0)
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "law suite: seed {}, {} trials, depth <= {}, coefficients <= {}, nesting <= {}",
            self.seed, self.trials, self.max_depth, self.max_coeff, self.max_nesting
        )?;
        let width = self.laws.iter().map(|l| l.name.len()).max().unwrap_or(0);
        for law in &self.laws {
            let status = if law.failed == 0 { "ok" } else { "FAILED" };
            writeln!(
                f,
                "  {:<width$}  {status:<6}  {} passed, {} failed",
                law.name, law.passed, law.failed
            )?;
            if let Some(ce) = &law.counterexample {
                writeln!(f, "    counterexample: {ce}")?;
            }
        }
        let failed = self.violations().count();
        if failed == 0 {
            write!(f, "all {} laws hold", self.laws.len())
        } else {
            write!(f, "{failed} of {} laws violated", self.laws.len())
        }
    }
}

/// Runs every law for `trials` instances. Law `i` draws from stream `i` of
/// the seeded generator, so reports do not depend on evaluation order.
pub fn run_laws(ops: &dyn SpaceOps, trials: u64, seed: u64, bounds: &Bounds) -> LawReport {
    let laws = all_laws();
    let outcomes = laws
        .iter()
        .enumerate()
        .map(|(i, law)| {
            let mut rng = random::seeded(seed);
            rng.set_stream(i as u64);
            let mut outcome = LawOutcome {
                name: law.name,
                passed: 0,
                failed: 0,
                counterexample: None,
            };
            for _ in 0..trials {
                let values = (law.generate)(&mut rng, bounds);
                if law.holds(ops, &values) {
                    outcome.passed += 1;
                } else {
                    outcome.failed += 1;
                    if outcome.counterexample.is_none() {
                        let small = shrink(law, ops, values);
                        outcome.counterexample = Some(render(law, &small));
                    }
                }
            }
            outcome
        })
        .collect();
    LawReport {
        seed,
        trials,
        max_depth: bounds.max_depth,
        max_coeff: bounds.max_coeff,
        max_nesting: bounds.max_nesting,
        laws: outcomes,
    }
}

fn render(law: &Law, values: &[Value]) -> String {
    if values.is_empty() {
        return "fixed instance".to_string();
    }
    law.args
        .iter()
        .zip(values)
        .map(|(name, v)| format!("{name} = {v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Greedy shrinking: replace one argument at a time by a strictly smaller
/// candidate that still fails, until no candidate does.
pub fn shrink(law: &Law, ops: &dyn SpaceOps, mut values: Vec<Value>) -> Vec<Value> {
    'outer: for _ in 0..10_000 {
        for i in 0..values.len() {
            for candidate in value_candidates(&values[i]) {
                if value_size(&candidate) >= value_size(&values[i]) {
                    continue;
                }
                let mut next = values.clone();
                next[i] = candidate;
                if !law.holds(ops, &next) {
                    values = next;
                    continue 'outer;
                }
            }
        }
        break;
    }
    values
}

fn ordinal_size(o: &Ordinal) -> u64 {
    o.terms()
        .iter()
        .map(|t| 1 + t.coefficient() + ordinal_size(t.exponent()))
        .sum()
}

fn space_size(s: &CanonicalSpace) -> u64 {
    match s.cb_star() {
        None => 0,
        Some(a) => 1 + s.degree() + ordinal_size(a),
    }
}

fn expr_size(e: &SpaceExpr) -> u64 {
    match e {
        SpaceExpr::Canonical(s) => 1 + space_size(s),
        SpaceExpr::Union(l, r) | SpaceExpr::Product(l, r) => 1 + expr_size(l) + expr_size(r),
        SpaceExpr::Derivative(x) => 1 + expr_size(x),
        SpaceExpr::IteratedDerivative(x, b) => 1 + expr_size(x) + ordinal_size(b),
    }
}

fn value_size(v: &Value) -> u64 {
    match v {
        Value::Space(s) => space_size(s),
        Value::Ordinal(o) => ordinal_size(o),
        Value::Expr(e) => expr_size(e),
    }
}

fn value_candidates(v: &Value) -> Vec<Value> {
    match v {
        Value::Space(s) => space_candidates(s).into_iter().map(Value::Space).collect(),
        Value::Ordinal(o) => ordinal_candidates(o).into_iter().map(Value::Ordinal).collect(),
        Value::Expr(e) => expr_candidates(e).into_iter().map(Value::Expr).collect(),
    }
}

fn ordinal_candidates(o: &Ordinal) -> Vec<Ordinal> {
    let mut out = vec![Ordinal::zero(), Ordinal::one()];
    let terms: Vec<(Ordinal, u64)> = o
        .terms()
        .iter()
        .map(|t| (t.exponent().clone(), t.coefficient()))
        .collect();
    for i in 0..terms.len() {
        let mut fewer = terms.clone();
        fewer.remove(i);
        out.extend(Ordinal::from_terms(fewer).ok());
        let (e, c) = terms[i].clone();
        for smaller in [1, c - 1] {
            if smaller >= 1 && smaller < c {
                let mut t = terms.clone();
                t[i].1 = smaller;
                out.extend(Ordinal::from_terms(t).ok());
            }
        }
        for e2 in ordinal_candidates_shallow(&e) {
            let mut t = terms.clone();
            t[i].0 = e2;
            out.extend(Ordinal::from_terms(t).ok());
        }
    }
    out
}

fn ordinal_candidates_shallow(o: &Ordinal) -> Vec<Ordinal> {
    let mut out = vec![Ordinal::zero(), Ordinal::one()];
    out.push(o.without_last_term());
    out.push(o.without_leading_term());
    out
}

fn space_candidates(s: &CanonicalSpace) -> Vec<CanonicalSpace> {
    let CanonicalSpace::Compact { cb_star, degree } = s else {
        return Vec::new();
    };
    let d = degree.get();
    let mut out = vec![CanonicalSpace::Empty];
    for d2 in [1, d - 1] {
        if d2 >= 1 && d2 < d {
            out.push(CanonicalSpace::new(cb_star.clone(), d2).expect("positive"));
        }
    }
    for a in ordinal_candidates(cb_star) {
        out.push(CanonicalSpace::new(a, d).expect("positive"));
    }
    out
}

fn expr_candidates(e: &SpaceExpr) -> Vec<SpaceExpr> {
    let mut out = Vec::new();
    match e {
        SpaceExpr::Canonical(s) => {
            out.extend(space_candidates(s).into_iter().map(SpaceExpr::Canonical));
        }
        SpaceExpr::Union(l, r) | SpaceExpr::Product(l, r) => {
            out.push((**l).clone());
            out.push((**r).clone());
            let rebuild = |a: SpaceExpr, b: SpaceExpr| match e {
                SpaceExpr::Union(..) => SpaceExpr::union(a, b),
                _ => SpaceExpr::product(a, b),
            };
            for l2 in expr_candidates(l) {
                out.push(rebuild(l2, (**r).clone()));
            }
            for r2 in expr_candidates(r) {
                out.push(rebuild((**l).clone(), r2));
            }
        }
        SpaceExpr::Derivative(x) => {
            out.push((**x).clone());
            out.extend(expr_candidates(x).into_iter().map(SpaceExpr::derivative));
        }
        SpaceExpr::IteratedDerivative(x, b) => {
            out.push((**x).clone());
            out.push(SpaceExpr::derivative((**x).clone()));
            for b2 in ordinal_candidates(b) {
                out.push(SpaceExpr::iterated((**x).clone(), b2));
            }
            for x2 in expr_candidates(x) {
                out.push(SpaceExpr::iterated(x2, b.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    struct AddedDegrees;

    impl SpaceOps for AddedDegrees {
        fn product(&self, x: &CanonicalSpace, y: &CanonicalSpace) -> CanonicalSpace {
            match (x, y) {
                (
                    CanonicalSpace::Compact {
                        cb_star: a,
                        degree: m,
                    },
                    CanonicalSpace::Compact {
                        cb_star: b,
                        degree: n,
                    },
                ) => CanonicalSpace::new(a.natural_sum(b), m.get() + n.get() - 1).expect("positive"),
                _ => CanonicalSpace::Empty,
            }
        }
    }

    #[test]
    fn standard_rules_pass() {
        let report = run_laws(&Standard, 200, 7, &Bounds::default());
        assert!(report.all_passed(), "{report}");
        assert!(report.to_string().starts_with("law suite: seed 7, 200 trials"));
    }

    #[test]
    fn degree_mutation_is_caught_and_shrunk() {
        let report = run_laws(&AddedDegrees, 200, 7, &Bounds::default());
        let names: Vec<&str> = report.violations().map(|l| l.name).collect();
        assert!(names.contains(&"degree multiplicativity"), "{report}");
        let law = report
            .laws
            .iter()
            .find(|l| l.name == "degree multiplicativity")
            .unwrap();
        assert_eq!(
            law.counterexample.as_deref(),
            Some("x = can(0, 2), y = can(0, 2)")
        );
    }

    #[test]
    fn zero_trials_is_vacuous() {
        let report = run_laws(&Standard, 0, 1, &Bounds::default());
        assert!(report.all_passed());
        assert!(report
            .laws
            .iter()
            .all(|l| l.passed == 0 && l.counterexample.is_none()));
    }

    #[test]
    fn deterministic() {
        let a = run_laws(&AddedDegrees, 50, 3, &Bounds::default());
        let b = run_laws(&AddedDegrees, 50, 3, &Bounds::default());
        assert_eq!(a, b);
    }
}
