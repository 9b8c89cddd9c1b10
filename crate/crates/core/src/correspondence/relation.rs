use std::collections::{BTreeMap, BTreeSet};

/// An explicit finite relation between two point sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRelation<A: Ord, B: Ord> {
    pairs: BTreeSet<(A, B)>,
}

impl<A: Ord + Clone, B: Ord + Clone> FiniteRelation<A, B> {
    pub fn new(pairs: impl IntoIterator<Item = (A, B)>) -> Self {
        FiniteRelation {
            pairs: pairs.into_iter().collect(),
        }
    }

    pub fn pairs(&self) -> &BTreeSet<(A, B)> {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn domain(&self) -> BTreeSet<A> {
        self.pairs.iter().map(|(a, _)| a.clone()).collect()
    }

    pub fn range(&self) -> BTreeSet<B> {
        self.pairs.iter().map(|(_, b)| b.clone()).collect()
    }

    /// Both projections are onto the given universes.
    pub fn is_correspondence(&self, left: &BTreeSet<A>, right: &BTreeSet<B>) -> bool {
        &self.domain() == left && &self.range() == right
    }

    /// `(n, m)`: largest fibre over a right point, largest image of a left point.
    pub fn multiplicity(&self) -> (u64, u64) {
        let mut images: BTreeMap<&A, u64> = BTreeMap::new();
        let mut preimages: BTreeMap<&B, u64> = BTreeMap::new();
        for (a, b) in &self.pairs {
            *images.entry(a).or_default() += 1;
            *preimages.entry(b).or_default() += 1;
        }
        (
            preimages.values().copied().max().unwrap_or(0),
            images.values().copied().max().unwrap_or(0),
        )
    }

    pub fn inverse(&self) -> FiniteRelation<B, A> {
        FiniteRelation::new(self.pairs.iter().map(|(a, b)| (b.clone(), a.clone())))
    }

    pub fn compose<C: Ord + Clone>(&self, next: &FiniteRelation<B, C>) -> FiniteRelation<A, C> {
        let mut by_middle: BTreeMap<&B, Vec<&C>> = BTreeMap::new();
        for (b, c) in &next.pairs {
            by_middle.entry(b).or_default().push(c);
        }
        FiniteRelation::new(self.pairs.iter().flat_map(|(a, b)| {
            by_middle
                .get(b)
                .into_iter()
                .flatten()
                .map(move |c| (a.clone(), (*c).clone()))
        }))
    }
}
