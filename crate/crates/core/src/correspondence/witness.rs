use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::interval::Interval;
use crate::ordinal::Ordinal;
use crate::space::CanonicalSpace;
use crate::syntax::{format_canonical, format_ordinal, parse_ordinal, parse_space, ParseError};

use super::block::{Block, BlockCorrespondence, BlockMode};
use super::piecewise::{Lemma1Report, Piece, PiecewiseCorrespondence};
use super::CorrespondenceError;

/// A finite rank-preserving correspondence witnessing `x ≃ y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Piecewise(PiecewiseCorrespondence),
    Blocks(BlockCorrespondence),
}

/// Builds a witness for two equivalent canonical spaces.
///
/// Discrete spaces get a single bipartite block. Otherwise the rough
/// partitions are paired: first piece with first piece, then the remaining
/// `max(a, b) − 1` slots cycle through the half-open pieces of each side,
/// falling back to `(0, ω^α]` on a side of degree 1.
pub fn generate_witness(x: &CanonicalSpace, y: &CanonicalSpace) -> Result<Witness, CorrespondenceError> {
    if !x.equivalent(y) {
        return Err(CorrespondenceError::NotEquivalent {
            x: x.clone(),
            y: y.clone(),
        });
    }
    let Some(alpha) = x.cb_star() else {
        return Ok(Witness::Piecewise(PiecewiseCorrespondence::identity(x)));
    };
    if alpha.is_zero() {
        let zero = Ordinal::zero();
        return Ok(Witness::Blocks(BlockCorrespondence::new(
            x.clone(),
            y.clone(),
            vec![Block::new(zero.clone(), zero, BlockMode::Bipartite)],
        )));
    }
    let xs = x.rough_partition().expect("nonempty");
    let ys = y.rough_partition().expect("nonempty");
    let fallback = Interval::HalfOpen {
        lo: Ordinal::zero(),
        hi: Ordinal::omega_pow(alpha.clone()),
    };
    let surplus = |pieces: &[Interval], k: usize| -> Interval {
        if pieces.len() == 1 {
            fallback.clone()
        } else {
            pieces[1 + (k - 1) % (pieces.len() - 1)].clone()
        }
    };
    let mut pieces = vec![Piece::new(xs[0].clone(), ys[0].clone())];
    for k in 1..xs.len().max(ys.len()) {
        pieces.push(Piece::new(surplus(&xs, k), surplus(&ys, k)));
    }
    Ok(Witness::Piecewise(PiecewiseCorrespondence::new(
        x.clone(),
        y.clone(),
        pieces,
    )))
}

/// Everything `check` reports about a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub kind: &'static str,
    pub valid: bool,
    pub validity: String,
    pub multiplicity: (u64, u64),
    pub rank_preserving: bool,
    pub lemma1: Lemma1Report,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.valid && self.rank_preserving && self.lemma1.holds()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, m) = self.multiplicity;
        writeln!(f, "kind: {}", self.kind)?;
        writeln!(f, "validity: {}", self.validity)?;
        writeln!(f, "multiplicity: {n}-to-{m}")?;
        writeln!(
            f,
            "rank preserving: {}",
            if self.rank_preserving { "yes" } else { "no" }
        )?;
        write!(
            f,
            "lemma: {} ({})",
            self.lemma1,
            if self.lemma1.holds() { "holds" } else { "fails" }
        )
    }
}

impl Witness {
    pub fn source(&self) -> &CanonicalSpace {
        match self {
            Witness::Piecewise(c) => &c.source,
            Witness::Blocks(c) => &c.source,
        }
    }

    pub fn target(&self) -> &CanonicalSpace {
        match self {
            Witness::Piecewise(c) => &c.target,
            Witness::Blocks(c) => &c.target,
        }
    }

    pub fn check(&self) -> CheckReport {
        match self {
            Witness::Piecewise(c) => {
                let report = c.validate();
                let rank_preserving = c.check_rank_preserving().unwrap_or(false);
                CheckReport {
                    kind: "piecewise",
                    valid: report.is_valid(),
                    validity: report.to_string(),
                    multiplicity: report.multiplicity,
                    rank_preserving,
                    lemma1: Lemma1Report::new(&c.source, &c.target, report.multiplicity),
                }
            }
            Witness::Blocks(c) => {
                let report = c.validate();
                CheckReport {
                    kind: "blocks",
                    valid: report.is_valid(),
                    validity: report.to_string(),
                    multiplicity: report.multiplicity,
                    rank_preserving: report.is_valid() && c.is_rank_preserving(),
                    lemma1: Lemma1Report::new(&c.source, &c.target, report.multiplicity),
                }
            }
        }
    }

    pub fn to_json(&self) -> String {
        let file = WitnessFile {
            source: format_canonical(self.source()),
            target: format_canonical(self.target()),
            pieces: match self {
                Witness::Piecewise(c) => c
                    .pieces
                    .iter()
                    .map(|p| PieceJson {
                        src: IntervalJson::from(&p.src),
                        dst: IntervalJson::from(&p.dst),
                    })
                    .collect(),
                Witness::Blocks(_) => vec![],
            },
            blocks: match self {
                Witness::Piecewise(_) => vec![],
                Witness::Blocks(c) => c
                    .blocks
                    .iter()
                    .map(|b| BlockJson {
                        src_rank: format_ordinal(&b.src_rank),
                        dst_rank: format_ordinal(&b.dst_rank),
                        mode: b.mode.name().to_string(),
                    })
                    .collect(),
            },
        };
        let mut text = serde_json::to_string_pretty(&file).expect("plain data serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Witness, WitnessError> {
        let file: WitnessFile = serde_json::from_str(text)?;
        let space = |field: &'static str, text: &str| {
            parse_space(text)
                .map(|e| e.canonicalize())
                .map_err(|error| WitnessError::Parse {
                    field,
                    error: Box::new(error),
                })
        };
        let source = space("source", &file.source)?;
        let target = space("target", &file.target)?;
        match (file.pieces.is_empty(), file.blocks.is_empty()) {
            (false, false) => Err(WitnessError::Schema(
                "a witness has either pieces or blocks, not both".into(),
            )),
            (true, true) if !(source.is_empty() && target.is_empty()) => {
                Err(WitnessError::Schema("pieces and blocks are both empty".into()))
            }
            (_, true) => {
                let pieces = file
                    .pieces
                    .iter()
                    .map(|p| Ok(Piece::new(p.src.to_interval("src")?, p.dst.to_interval("dst")?)))
                    .collect::<Result<Vec<_>, WitnessError>>()?;
                Ok(Witness::Piecewise(PiecewiseCorrespondence::new(
                    source, target, pieces,
                )))
            }
            (true, false) => {
                let blocks = file
                    .blocks
                    .iter()
                    .map(|b| {
                        let mode = BlockMode::from_name(&b.mode).ok_or_else(|| {
                            WitnessError::Schema(format!("unknown block mode {:?}", b.mode))
                        })?;
                        Ok(Block::new(
                            ord("src_rank", &b.src_rank)?,
                            ord("dst_rank", &b.dst_rank)?,
                            mode,
                        ))
                    })
                    .collect::<Result<Vec<_>, WitnessError>>()?;
                Ok(Witness::Blocks(BlockCorrespondence::new(source, target, blocks)))
            }
        }
    }

    pub fn read(path: &Path) -> Result<Witness, WitnessError> {
        let text = std::fs::read_to_string(path).map_err(|e| WitnessError::Io(e.to_string()))?;
        Witness::from_json(&text)
    }

    pub fn write(&self, path: &Path) -> Result<(), WitnessError> {
        std::fs::write(path, self.to_json()).map_err(|e| WitnessError::Io(e.to_string()))
    }
}

#[derive(Debug, Error)]
pub enum WitnessError {
    #[error("malformed witness JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field {field}: {error}")]
    Parse {
        field: &'static str,
        error: Box<ParseError>,
    },
    #[error("{0}")]
    Schema(String),
    #[error("{0}")]
    Io(String),
}

fn ord(field: &'static str, text: &str) -> Result<Ordinal, WitnessError> {
    parse_ordinal(text).map_err(|error| WitnessError::Parse {
        field,
        error: Box::new(error),
    })
}

#[derive(Serialize, Deserialize)]
struct WitnessFile {
    source: String,
    target: String,
    pieces: Vec<PieceJson>,
    blocks: Vec<BlockJson>,
}

#[derive(Serialize, Deserialize)]
struct PieceJson {
    src: IntervalJson,
    dst: IntervalJson,
}

#[derive(Serialize, Deserialize)]
struct IntervalJson {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lo: Option<String>,
    hi: String,
}

#[derive(Serialize, Deserialize)]
struct BlockJson {
    src_rank: String,
    dst_rank: String,
    mode: String,
}

impl From<&Interval> for IntervalJson {
    fn from(iv: &Interval) -> Self {
        IntervalJson {
            kind: if iv.is_from_zero() {
                "from_zero"
            } else {
                "half_open"
            }
            .to_string(),
            lo: iv.lo().map(format_ordinal),
            hi: format_ordinal(iv.hi()),
        }
    }
}

impl IntervalJson {
    fn to_interval(&self, field: &'static str) -> Result<Interval, WitnessError> {
        let hi = ord(field, &self.hi)?;
        match (self.kind.as_str(), &self.lo) {
            ("from_zero", None) => Ok(Interval::from_zero(hi)),
            ("from_zero", Some(_)) => Err(WitnessError::Schema(format!(
                "{field}: a from_zero interval has no lo"
            ))),
            ("half_open", Some(lo)) => Interval::half_open(ord(field, lo)?, hi)
                .map_err(|e| WitnessError::Schema(format!("{field}: {e}"))),
            ("half_open", None) => Err(WitnessError::Schema(format!(
                "{field}: a half_open interval needs lo"
            ))),
            (kind, _) => Err(WitnessError::Schema(format!(
                "{field}: unknown interval kind {kind:?}"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn can(a: &str, d: u64) -> CanonicalSpace {
        CanonicalSpace::new(a.parse().unwrap(), d).unwrap()
    }

    #[test]
    fn two_to_one_pieces() {
        let Witness::Piecewise(c) = generate_witness(&can("1", 2), &can("1", 1)).unwrap() else {
            panic!("expected pieces");
        };
        let iv = |s: &str| -> Interval {
            match s.split_once(',') {
                None => Interval::from_zero(s.parse().unwrap()),
                Some((lo, hi)) => Interval::half_open(lo.parse().unwrap(), hi.parse().unwrap()).unwrap(),
            }
        };
        assert_eq!(
            c.pieces,
            vec![Piece::new(iv("w"), iv("w")), Piece::new(iv("w,w*2"), iv("0,w"))]
        );
        assert_eq!(c.validate().multiplicity, (2, 1));
    }

    #[test]
    fn witness_bounds() {
        let w = generate_witness(&can("2", 3), &can("2", 5)).unwrap();
        let report = w.check();
        assert!(report.passed(), "{report}");
        let (n, m) = report.multiplicity;
        assert!(n <= 3 && m <= 5);
        let same = generate_witness(&can("w", 4), &can("w", 4)).unwrap().check();
        assert_eq!(same.multiplicity, (1, 1));
    }

    #[test]
    fn not_equivalent() {
        assert!(generate_witness(&can("1", 1), &can("2", 1)).is_err());
        assert!(generate_witness(&CanonicalSpace::Empty, &can("0", 1)).is_err());
    }

    #[test]
    fn json_round_trip() {
        for (x, y) in [
            (can("1", 2), can("1", 1)),
            (can("0", 2), can("0", 3)),
            (can("w^w", 2), can("w^w", 3)),
            (CanonicalSpace::Empty, CanonicalSpace::Empty),
        ] {
            let w = generate_witness(&x, &y).unwrap();
            let text = w.to_json();
            assert_eq!(Witness::from_json(&text).unwrap(), w, "{text}");
            assert!(w.check().passed());
        }
    }

    #[test]
    fn schema_errors() {
        let bad = [
            "{}",
            r#"{"source": "can(1,1)", "target": "can(1,1)", "pieces": [], "blocks": []}"#,
            r#"{"source": "can(1,", "target": "can(1,1)", "pieces": [], "blocks": []}"#,
            r#"{"source": "can(1,1)", "target": "can(1,1)", "pieces": [{"src": {"kind": "open", "hi": "w"}, "dst": {"kind": "from_zero", "hi": "w"}}], "blocks": []}"#,
            r#"{"source": "can(1,1)", "target": "can(1,1)", "pieces": [{"src": {"kind": "half_open", "lo": "w", "hi": "1"}, "dst": {"kind": "from_zero", "hi": "w"}}], "blocks": []}"#,
            r#"{"source": "can(0,1)", "target": "can(0,1)", "pieces": [], "blocks": [{"src_rank": "0", "dst_rank": "0", "mode": "all"}]}"#,
        ];
        for text in bad {
            assert!(Witness::from_json(text).is_err(), "{text}");
        }
    }
}
