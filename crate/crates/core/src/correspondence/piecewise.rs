use std::collections::BTreeSet;
use std::fmt;

use crate::expr::SpaceExpr;
use crate::interval::Interval;
use crate::ordinal::Ordinal;
use crate::point::Point;
use crate::space::CanonicalSpace;

use super::CorrespondenceError;

/// One clopen piece: `src` is related to `dst` by translation,
/// `src.origin() + t ↦ dst.origin() + t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Piece {
    pub src: Interval,
    pub dst: Interval,
}

impl Piece {
    pub fn new(src: Interval, dst: Interval) -> Piece {
        Piece { src, dst }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewiseCorrespondence {
    pub source: CanonicalSpace,
    pub target: CanonicalSpace,
    pub pieces: Vec<Piece>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Source,
    Target,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Source => "source",
            Side::Target => "target",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    BadInterval {
        piece: usize,
        side: Side,
        interval: Interval,
        reason: String,
    },
    KindMismatch {
        piece: usize,
    },
    LengthMismatch {
        piece: usize,
        src_length: Ordinal,
        dst_length: Ordinal,
    },
    CoverageGap {
        side: Side,
        gap: Interval,
    },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::BadInterval {
                piece,
                side,
                interval,
                reason,
            } => write!(f, "bad interval in piece {piece} ({side}): {interval} {reason}"),
            Failure::KindMismatch { piece } => write!(
                f,
                "type mismatch in piece {piece}: both intervals must start at 0 or both be half-open"
            ),
            Failure::LengthMismatch {
                piece,
                src_length,
                dst_length,
            } => write!(
                f,
                "length mismatch in piece {piece}: left differences {src_length} and {dst_length}"
            ),
            Failure::CoverageGap { side, gap } => {
                write!(f, "coverage gap in {side}: {gap} is not covered")
            }
        }
    }
}

/// Outcome of [`PiecewiseCorrespondence::validate`].
///
/// `multiplicity` is `(n, m)`: every target point has at most `n` preimages
/// and every source point at most `m` images. Both are the largest number of
/// pieces overlapping at a point on the respective side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidityReport {
    pub failures: Vec<Failure>,
    pub multiplicity: (u64, u64),
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            let (n, m) = self.multiplicity;
            return write!(f, "valid, {n}-to-{m}");
        }
        let lines: Vec<String> = self.failures.iter().map(ToString::to_string).collect();
        write!(f, "invalid: {}", lines.join("; "))
    }
}

/// The instantiated conclusions for a continuous open `n`-to-`m`
/// correspondence from `X` to `Y`: `CB(X) = CB(Y)` and
/// `d(Y)/m ≤ d(X) ≤ n·d(Y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma1Report {
    pub source_rank: Ordinal,
    pub target_rank: Ordinal,
    pub source_degree: u64,
    pub target_degree: u64,
    pub n: u64,
    pub m: u64,
}

impl Lemma1Report {
    pub fn new(source: &CanonicalSpace, target: &CanonicalSpace, (n, m): (u64, u64)) -> Lemma1Report {
        Lemma1Report {
            source_rank: source.cb_rank(),
            target_rank: target.cb_rank(),
            source_degree: source.degree(),
            target_degree: target.degree(),
            n,
            m,
        }
    }

    pub fn ranks_equal(&self) -> bool {
        self.source_rank == self.target_rank
    }

    /// `d(Y)/m ≤ d(X)`, compared without division.
    pub fn lower_bound_holds(&self) -> bool {
        u128::from(self.target_degree) <= u128::from(self.m) * u128::from(self.source_degree)
    }

    pub fn upper_bound_holds(&self) -> bool {
        u128::from(self.source_degree) <= u128::from(self.n) * u128::from(self.target_degree)
    }

    pub fn holds(&self) -> bool {
        self.ranks_equal() && self.lower_bound_holds() && self.upper_bound_holds()
    }
}

impl fmt::Display for Lemma1Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.ranks_equal() { "=" } else { "!=" };
        write!(
            f,
            "ranks {} {rel} {}; bounds {}/{} <= {} <= {}*{}",
            self.source_rank,
            self.target_rank,
            self.target_degree,
            self.m,
            self.source_degree,
            self.n,
            self.target_degree
        )
    }
}

impl PiecewiseCorrespondence {
    pub fn new(source: CanonicalSpace, target: CanonicalSpace, pieces: Vec<Piece>) -> Self {
        PiecewiseCorrespondence {
            source,
            target,
            pieces,
        }
    }

    /// Single piece relating a space to itself.
    pub fn identity(space: &CanonicalSpace) -> Self {
        let pieces = space
            .top_point()
            .map(|top| {
                vec![Piece::new(
                    Interval::from_zero(top.clone()),
                    Interval::from_zero(top),
                )]
            })
            .unwrap_or_default();
        PiecewiseCorrespondence::new(space.clone(), space.clone(), pieces)
    }

    fn side(&self, side: Side) -> impl Iterator<Item = &Interval> {
        self.pieces.iter().map(move |p| match side {
            Side::Source => &p.src,
            Side::Target => &p.dst,
        })
    }

    /// Checks bounds, shapes, equal lengths and onto projections, and
    /// computes the multiplicity bounds.
    pub fn validate(&self) -> ValidityReport {
        let mut failures = Vec::new();
        let source_top = self.source.top_point();
        let target_top = self.target.top_point();
        for (i, piece) in self.pieces.iter().enumerate() {
            for (side, interval, top) in [
                (Side::Source, &piece.src, &source_top),
                (Side::Target, &piece.dst, &target_top),
            ] {
                if let Some(reason) = interval_problem(interval, top.as_ref()) {
                    failures.push(Failure::BadInterval {
                        piece: i,
                        side,
                        interval: interval.clone(),
                        reason,
                    });
                }
            }
            if piece.src.is_from_zero() != piece.dst.is_from_zero() {
                failures.push(Failure::KindMismatch { piece: i });
            } else if proper(&piece.src) && proper(&piece.dst) {
                let (src_length, dst_length) = (piece.src.length(), piece.dst.length());
                if src_length != dst_length {
                    failures.push(Failure::LengthMismatch {
                        piece: i,
                        src_length,
                        dst_length,
                    });
                }
            }
        }
        for (side, top) in [(Side::Source, &source_top), (Side::Target, &target_top)] {
            if let Some(top) = top {
                let intervals: Vec<&Interval> = self.side(side).filter(|iv| proper(iv)).collect();
                failures.extend(
                    coverage_gaps(&intervals, top)
                        .into_iter()
                        .map(|gap| Failure::CoverageGap { side, gap }),
                );
            }
        }
        let n = max_overlap(&self.side(Side::Target).collect::<Vec<_>>());
        let m = max_overlap(&self.side(Side::Source).collect::<Vec<_>>());
        ValidityReport {
            failures,
            multiplicity: (n.max(1), m.max(1)),
        }
    }

    fn require_valid(&self) -> Result<ValidityReport, CorrespondenceError> {
        let report = self.validate();
        if report.is_valid() {
            Ok(report)
        } else {
            Err(CorrespondenceError::Invalid(report))
        }
    }

    /// Image of the source point `x`.
    pub fn apply(&self, x: &Ordinal) -> Result<BTreeSet<Ordinal>, CorrespondenceError> {
        match self.source.top_point() {
            Some(top) if x <= &top => {}
            _ => return Err(CorrespondenceError::PointOutsideSource(x.clone())),
        }
        Ok(self
            .pieces
            .iter()
            .filter_map(|p| p.src.offset_of(x).map(|t| p.dst.at_offset(&t)))
            .collect())
    }

    /// Preimage of the target point `y`.
    pub fn preimage(&self, y: &Ordinal) -> BTreeSet<Ordinal> {
        self.pieces
            .iter()
            .filter_map(|p| p.dst.offset_of(y).map(|t| p.src.at_offset(&t)))
            .collect()
    }

    /// Checks that every related pair of points has equal rank.
    ///
    /// Per piece, `x = lo + t` and its image `lo' + t` both have the trailing
    /// exponent of `t` when `t > 0`, and a `[0, hi]` piece is the identity, so
    /// ranks agree whenever both spaces are infinite or the piece is finite.
    /// The argument is checked per piece and then exercised on sample offsets.
    pub fn check_rank_preserving(&self) -> Result<bool, CorrespondenceError> {
        self.require_valid()?;
        let source = SpaceExpr::Canonical(self.source.clone());
        let target = SpaceExpr::Canonical(self.target.clone());
        let source_discrete = self.source.cb_star().is_some_and(Ordinal::is_zero);
        let target_discrete = self.target.cb_star().is_some_and(Ordinal::is_zero);
        for piece in &self.pieces {
            let length = piece.src.length();
            if source_discrete != target_discrete && !length.is_finite() {
                return Ok(false);
            }
            for t in sample_offsets(&length, piece.src.is_from_zero()) {
                let x = Point::Ord(piece.src.at_offset(&t));
                let y = Point::Ord(piece.dst.at_offset(&t));
                let (rx, ry) = (source.point_rank(&x), target.point_rank(&y));
                match (rx, ry) {
                    (Ok(a), Ok(b)) if a == b => {}
                    _ => return Ok(false),
                }
            }
        }
        Ok(true)
    }

    pub fn check_lemma1_conclusions(&self) -> Result<Lemma1Report, CorrespondenceError> {
        let report = self.require_valid()?;
        Ok(Lemma1Report::new(&self.source, &self.target, report.multiplicity))
    }
}

fn proper(iv: &Interval) -> bool {
    iv.lo().is_none_or(|lo| lo < iv.hi())
}

fn interval_problem(iv: &Interval, top: Option<&Ordinal>) -> Option<String> {
    if !proper(iv) {
        return Some("is empty".to_string());
    }
    match top {
        None => Some("lies in the empty space".to_string()),
        Some(top) if iv.hi() > top => Some(format!("exceeds the top point {top}")),
        Some(_) => None,
    }
}

/// Maximal uncovered intervals of `[0, top]`.
fn coverage_gaps(intervals: &[&Interval], top: &Ordinal) -> Vec<Interval> {
    let mut gaps = Vec::new();
    let next_start_after = |reach: Option<&Ordinal>| -> Ordinal {
        intervals
            .iter()
            .filter_map(|iv| iv.lo())
            .filter(|lo| reach.is_none_or(|r| *lo > r))
            .min()
            .map_or_else(|| top.clone(), |lo| lo.min(top).clone())
    };
    let mut reach = intervals
        .iter()
        .filter(|iv| iv.is_from_zero())
        .map(|iv| iv.hi().clone())
        .max();
    if reach.is_none() {
        let end = next_start_after(None);
        gaps.push(Interval::from_zero(end.clone()));
        reach = Some(end);
    }
    let mut reach = reach.expect("set above");
    while &reach < top {
        let extended = intervals
            .iter()
            .filter(|iv| iv.lo().is_some_and(|lo| lo <= &reach) && iv.hi() > &reach)
            .map(|iv| iv.hi().clone())
            .max();
        reach = match extended {
            Some(hi) => hi,
            None => {
                let end = next_start_after(Some(&reach));
                gaps.push(Interval::HalfOpen {
                    lo: reach,
                    hi: end.clone(),
                });
                end
            }
        };
    }
    gaps
}

/// Largest number of intervals sharing a point. The maximum is attained at
/// the least element of some interval.
fn max_overlap(intervals: &[&Interval]) -> u64 {
    intervals
        .iter()
        .filter(|iv| proper(iv))
        .map(|iv| {
            let x = iv.first_point();
            intervals.iter().filter(|other| other.contains(&x)).count() as u64
        })
        .max()
        .unwrap_or(0)
}

/// Offsets exercising every rank that occurs in a piece of the given length.
fn sample_offsets(length: &Ordinal, from_zero: bool) -> Vec<Ordinal> {
    let mut out: BTreeSet<Ordinal> = BTreeSet::new();
    if from_zero {
        out.insert(Ordinal::zero());
    }
    for k in 1..=3u64 {
        out.insert(Ordinal::from(k));
    }
    let mut prefix = Ordinal::zero();
    for t in length.terms() {
        let unit = Ordinal::omega_pow(t.exponent().clone());
        out.insert(&prefix + &unit);
        out.insert(&(&prefix + &unit) + &Ordinal::one());
        prefix = &prefix + &Ordinal::term(t.exponent().clone(), t.coefficient());
        out.insert(prefix.clone());
        for e in t.exponent().terms() {
            out.insert(Ordinal::omega_pow(e.exponent().clone()));
        }
    }
    out.into_iter()
        .filter(|t| t <= length && (from_zero || !t.is_zero()))
        .collect()
}
