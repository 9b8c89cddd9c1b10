use crate::expr::SpaceExpr;
use crate::ordinal::Ordinal;
use crate::space::CanonicalSpace;

/// Canonical rendering: leading term first, `w^E*n`, with `w^0*n` as `n`,
/// `w^1` as `w` and coefficient 1 omitted.
pub fn format_ordinal(o: &Ordinal) -> String {
    if o.is_zero() {
        return "0".to_string();
    }
    o.terms()
        .iter()
        .map(|t| {
            let e = t.exponent();
            let c = t.coefficient();
            if e.is_zero() {
                return c.to_string();
            }
            let base = if e == &Ordinal::one() {
                "w".to_string()
            } else {
                format!("w^{}", format_atom(e))
            };
            if c == 1 {
                base
            } else {
                format!("{base}*{c}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Renders an ordinal so that it parses as a single `Atom`.
fn format_atom(o: &Ordinal) -> String {
    if let Some(n) = o.as_finite() {
        return n.to_string();
    }
    match o.terms() {
        [t] if t.coefficient() == 1 => {
            if t.exponent() == &Ordinal::one() {
                "w".to_string()
            } else {
                format!("w^{}", format_atom(t.exponent()))
            }
        }
        _ => format!("({})", format_ordinal(o)),
    }
}

pub fn format_canonical(s: &CanonicalSpace) -> String {
    match s {
        CanonicalSpace::Empty => "empty".to_string(),
        CanonicalSpace::Compact { cb_star, degree } => {
            format!("can({}, {})", format_ordinal(cb_star), degree)
        }
    }
}

pub fn format_space(e: &SpaceExpr) -> String {
    render(e, 0)
}

// 0: union operand position, 1: product operand, 2: atom
fn render(e: &SpaceExpr, min_prec: u8) -> String {
    let (prec, text) = match e {
        SpaceExpr::Canonical(s) => (2, format_canonical(s)),
        SpaceExpr::Union(l, r) => (0, format!("{} (+) {}", render(l, 0), render(r, 1))),
        SpaceExpr::Product(l, r) => (1, format!("{} x {}", render(l, 1), render(r, 2))),
        SpaceExpr::Derivative(inner) => (2, format!("D({})", render(inner, 0))),
        SpaceExpr::IteratedDerivative(inner, beta) => {
            (2, format!("D[{}]({})", format_ordinal(beta), render(inner, 0)))
        }
    };
    if prec < min_prec {
        format!("({text})")
    } else {
        text
    }
}
