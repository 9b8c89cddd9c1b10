use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use crate::cardinality::Cardinality;
use crate::expr::SpaceExpr;
use crate::ordinal::Ordinal;
use crate::point::Point;
use crate::space::CanonicalSpace;

use super::relation::FiniteRelation;

/// How a block relates the points of one rank stratum to another.
///
/// With strata indexed by `enumerate_points_of_rank`:
/// `Bipartite` relates every pair (both strata finite), `Bijection` relates
/// index `i` to index `i` (equal sizes), and `Modulo` relates `k mod a` to
/// `k mod b` for `k < max(a, b)` (both strata finite).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockMode {
    Bipartite,
    Bijection,
    Modulo,
}

impl BlockMode {
    pub fn name(self) -> &'static str {
        match self {
            BlockMode::Bipartite => "bipartite",
            BlockMode::Bijection => "bijection",
            BlockMode::Modulo => "modulo",
        }
    }

    pub fn from_name(name: &str) -> Option<BlockMode> {
        match name {
            "bipartite" => Some(BlockMode::Bipartite),
            "bijection" => Some(BlockMode::Bijection),
            "modulo" => Some(BlockMode::Modulo),
            _ => None,
        }
    }
}

impl fmt::Display for BlockMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Block {
    pub src_rank: Ordinal,
    pub dst_rank: Ordinal,
    pub mode: BlockMode,
}

impl Block {
    pub fn new(src_rank: Ordinal, dst_rank: Ordinal, mode: BlockMode) -> Block {
        Block {
            src_rank,
            dst_rank,
            mode,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockFailure {
    EmptyStratum {
        block: usize,
        side: &'static str,
        rank: Ordinal,
    },
    InfiniteBipartite {
        block: usize,
    },
    SizeMismatch {
        block: usize,
        src: Cardinality,
        dst: Cardinality,
    },
    InfiniteModulo {
        block: usize,
    },
    Uncovered {
        side: &'static str,
        rank: Ordinal,
    },
    InfinitelyManyStrata {
        side: &'static str,
    },
}

impl fmt::Display for BlockFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockFailure::EmptyStratum { block, side, rank } => {
                write!(f, "block {block}: {side} stratum of rank {rank} is empty")
            }
            BlockFailure::InfiniteBipartite { block } => {
                write!(f, "block {block}: bipartite mode needs finite strata")
            }
            BlockFailure::SizeMismatch { block, src, dst } => {
                write!(
                    f,
                    "block {block}: bijection between strata of sizes {src} and {dst}"
                )
            }
            BlockFailure::InfiniteModulo { block } => {
                write!(f, "block {block}: modulo mode needs finite strata")
            }
            BlockFailure::Uncovered { side, rank } => {
                write!(f, "coverage gap in {side}: stratum of rank {rank} is not covered")
            }
            BlockFailure::InfinitelyManyStrata { side } => {
                write!(f, "{side} has infinitely many strata, blocks cannot cover it")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockReport {
    pub failures: Vec<BlockFailure>,
    pub multiplicity: (u64, u64),
}

impl BlockReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for BlockReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            let (n, m) = self.multiplicity;
            return write!(f, "valid, {n}-to-{m}");
        }
        let lines: Vec<String> = self.failures.iter().map(ToString::to_string).collect();
        write!(f, "invalid: {}", lines.join("; "))
    }
}

/// A correspondence given stratum by stratum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCorrespondence {
    pub source: CanonicalSpace,
    pub target: CanonicalSpace,
    pub blocks: Vec<Block>,
}

impl BlockCorrespondence {
    pub fn new(source: CanonicalSpace, target: CanonicalSpace, blocks: Vec<Block>) -> Self {
        BlockCorrespondence {
            source,
            target,
            blocks,
        }
    }

    fn sizes(&self, block: &Block) -> (Cardinality, Cardinality) {
        (
            self.source.count_at(&block.src_rank),
            self.target.count_at(&block.dst_rank),
        )
    }

    pub fn validate(&self) -> BlockReport {
        let mut failures = Vec::new();
        for (i, block) in self.blocks.iter().enumerate() {
            let (a, b) = self.sizes(block);
            if a.is_zero() {
                failures.push(BlockFailure::EmptyStratum {
                    block: i,
                    side: "source",
                    rank: block.src_rank.clone(),
                });
            }
            if b.is_zero() {
                failures.push(BlockFailure::EmptyStratum {
                    block: i,
                    side: "target",
                    rank: block.dst_rank.clone(),
                });
            }
            if a.is_zero() || b.is_zero() {
                continue;
            }
            match block.mode {
                BlockMode::Bipartite if !(a.is_finite() && b.is_finite()) => {
                    failures.push(BlockFailure::InfiniteBipartite { block: i })
                }
                BlockMode::Bijection if a != b => failures.push(BlockFailure::SizeMismatch {
                    block: i,
                    src: a,
                    dst: b,
                }),
                BlockMode::Modulo if !(a.is_finite() && b.is_finite()) => {
                    failures.push(BlockFailure::InfiniteModulo { block: i })
                }
                _ => {}
            }
        }
        for (side, space, ranks) in [
            (
                "source",
                &self.source,
                self.blocks.iter().map(|b| &b.src_rank).collect::<Vec<_>>(),
            ),
            (
                "target",
                &self.target,
                self.blocks.iter().map(|b| &b.dst_rank).collect(),
            ),
        ] {
            let Some(top) = space.cb_star() else { continue };
            let Some(top) = top.as_finite() else {
                failures.push(BlockFailure::InfinitelyManyStrata { side });
                continue;
            };
            for r in 0..=top {
                let rank = Ordinal::from(r);
                if !ranks.contains(&&rank) {
                    failures.push(BlockFailure::Uncovered { side, rank });
                }
            }
        }
        BlockReport {
            failures,
            multiplicity: self.multiplicity(),
        }
    }

    /// `(n, m)` bounds: preimages per target point, images per source point.
    /// Contributions of blocks sharing a stratum add up.
    pub fn multiplicity(&self) -> (u64, u64) {
        let mut into_target: BTreeMap<&Ordinal, u64> = BTreeMap::new();
        let mut from_source: BTreeMap<&Ordinal, u64> = BTreeMap::new();
        for block in &self.blocks {
            let (a, b) = self.sizes(block);
            let (n, m) = match (block.mode, a.finite(), b.finite()) {
                (BlockMode::Bipartite, Some(a), Some(b)) => (a, b),
                (BlockMode::Modulo, Some(a), Some(b)) if a > 0 && b > 0 => {
                    let top = a.max(b);
                    (top.div_ceil(b), top.div_ceil(a))
                }
                _ => (1, 1),
            };
            *into_target.entry(&block.dst_rank).or_default() += n;
            *from_source.entry(&block.src_rank).or_default() += m;
        }
        (
            into_target.values().copied().max().unwrap_or(0).max(1),
            from_source.values().copied().max().unwrap_or(0).max(1),
        )
    }

    pub fn is_rank_preserving(&self) -> bool {
        self.blocks.iter().all(|b| b.src_rank == b.dst_rank)
    }

    /// The explicit relation on points, when every stratum involved is finite.
    pub fn materialize(&self) -> Option<FiniteRelation<Point, Point>> {
        let source = SpaceExpr::Canonical(self.source.clone());
        let target = SpaceExpr::Canonical(self.target.clone());
        let nth = |space: &SpaceExpr, rank: &Ordinal, i: u64| {
            space
                .enumerate_points_of_rank(rank, &BigUint::from(i))
                .expect("index below stratum size")
        };
        let mut pairs = Vec::new();
        for block in &self.blocks {
            let (a, b) = self.sizes(block);
            let (a, b) = (a.finite()?, b.finite()?);
            let mut relate = |i: u64, j: u64| {
                pairs.push((nth(&source, &block.src_rank, i), nth(&target, &block.dst_rank, j)))
            };
            match block.mode {
                BlockMode::Bipartite => (0..a).for_each(|i| (0..b).for_each(|j| relate(i, j))),
                BlockMode::Bijection => (0..a.min(b)).for_each(|i| relate(i, i)),
                BlockMode::Modulo => {
                    if a > 0 && b > 0 {
                        (0..a.max(b)).for_each(|k| relate(k % a, k % b))
                    }
                }
            }
        }
        Some(FiniteRelation::new(pairs))
    }
}
