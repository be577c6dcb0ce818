//! The transversal matroid of a set family.
//!
//! A subset of the ground set is independent when its elements can be matched
//! to pairwise distinct blocks containing them, so every rank query is a
//! maximum bipartite matching between elements and blocks.

use std::collections::HashSet;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::family::{GroundSet, SetFamily};

const UNMATCHED: usize = usize::MAX;

/// A closed set of a matroid together with its rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flat {
    // Field order gives the derived `Ord` the (height, member) ordering.
    rank: usize,
    members: ElemSet,
}

impl Flat {
    pub(crate) fn new(members: ElemSet, rank: usize) -> Self {
        Flat { rank, members }
    }

    pub fn members(&self) -> ElemSet {
        self.members
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

#[derive(Debug, Clone)]
pub struct TransversalMatroid {
    family: SetFamily,
    /// `adjacency[e]` lists the blocks containing element `e`.
    adjacency: Vec<Vec<usize>>,
    ground_rank: usize,
}

impl TransversalMatroid {
    pub fn new(family: SetFamily) -> Self {
        let n = family.ground().len();
        let mut adjacency = vec![Vec::new(); n];
        for (b, block) in family.blocks().iter().enumerate() {
            for e in block.iter() {
                adjacency[e].push(b);
            }
        }
        let mut m = TransversalMatroid {
            family,
            adjacency,
            ground_rank: 0,
        };
        m.ground_rank = m.rank_of(m.ground().full());
        m
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn ground(&self) -> &GroundSet {
        self.family.ground()
    }

    pub fn ground_rank(&self) -> usize {
        self.ground_rank
    }

    pub fn is_independent(&self, x: ElemSet) -> Result<bool> {
        self.ground().check(x)?;
        Ok(x.len() <= self.family.blocks().len() && self.rank_of(x) == x.len())
    }

    pub fn rank(&self, x: ElemSet) -> Result<usize> {
        self.ground().check(x)?;
        Ok(self.rank_of(x))
    }

    pub fn closure(&self, x: ElemSet) -> Result<Flat> {
        self.ground().check(x)?;
        let (members, rank) = self.closure_with_rank(x);
        Ok(Flat::new(members, rank))
    }

    pub fn is_flat(&self, x: ElemSet) -> Result<bool> {
        self.ground().check(x)?;
        Ok(self.closure_of(x) == x)
    }

    /// All flats, ordered by rank and then by member list.
    ///
    /// Generated level by level from `cl(∅)`: the flats covering `F` are
    /// exactly the sets `cl(F ∪ {a})` for `a ∉ F`.
    pub fn flats(&self) -> Vec<Flat> {
        let full = self.ground().full();
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        let bottom = self.closure_of(ElemSet::EMPTY);
        seen.insert(bottom);
        let mut level = vec![bottom];
        let mut rank = 0;
        while !level.is_empty() {
            level.sort();
            let mut next = Vec::new();
            for &f in &level {
                for a in (full - f).iter() {
                    let g = self.closure_of(f.with(a));
                    if seen.insert(g) {
                        next.push(g);
                    }
                }
            }
            out.extend(level.iter().map(|&f| Flat::new(f, rank)));
            level = next;
            rank += 1;
        }
        out
    }

    /// Flats of rank `r(U) - 1`.
    pub fn hyperplanes(&self) -> Result<Vec<Flat>> {
        self.require_positive_rank()?;
        let target = self.ground_rank - 1;
        Ok(self
            .flats()
            .into_iter()
            .filter(|f| f.rank() == target)
            .collect())
    }

    /// Closure computed as the intersection of the hyperplanes containing `x`,
    /// or the whole ground set when `x` spans.
    pub fn closure_via_hyperplanes(&self, x: ElemSet) -> Result<Flat> {
        self.ground().check(x)?;
        let hyperplanes = self.hyperplanes()?;
        Ok(self.closure_from_hyperplanes(&hyperplanes, x))
    }

    pub(crate) fn closure_from_hyperplanes(&self, hyperplanes: &[Flat], x: ElemSet) -> Flat {
        let full = self.ground().full();
        let rank = self.rank_of(x);
        if rank == self.ground_rank {
            return Flat::new(full, rank);
        }
        let members = hyperplanes
            .iter()
            .map(Flat::members)
            .filter(|h| x.is_subset(*h))
            .fold(full, |acc, h| acc & h);
        Flat::new(members, rank)
    }

    pub(crate) fn require_positive_rank(&self) -> Result<()> {
        if self.ground_rank == 0 {
            Err(Error::Degenerate(
                "matroid has rank 0, so it has no hyperplanes".into(),
            ))
        } else {
            Ok(())
        }
    }

    pub(crate) fn rank_of(&self, x: ElemSet) -> usize {
        self.matching(x).1
    }

    pub(crate) fn closure_of(&self, x: ElemSet) -> ElemSet {
        self.closure_with_rank(x).0
    }

    fn closure_with_rank(&self, x: ElemSet) -> (ElemSet, usize) {
        // With a maximum matching of `x` fixed, `r(x + a) > r(x)` exactly when
        // an augmenting path starts at `a`.
        let (owner, rank) = self.matching(x);
        let m = owner.len();
        let mut closure = x;
        let mut scratch = owner.clone();
        let mut seen = vec![false; m];
        for a in (self.ground().full() - x).iter() {
            scratch.copy_from_slice(&owner);
            seen.fill(false);
            if !self.augment(a, &mut scratch, &mut seen) {
                closure.insert(a);
            }
        }
        (closure, rank)
    }

    /// Maximum matching of the elements of `x` into blocks. Returns the owner
    /// of each block and the matching size.
    fn matching(&self, x: ElemSet) -> (Vec<usize>, usize) {
        let m = self.family.blocks().len();
        let mut owner = vec![UNMATCHED; m];
        let mut seen = vec![false; m];
        let mut size = 0;
        for e in x.iter() {
            if size == m {
                break;
            }
            seen.fill(false);
            if self.augment(e, &mut owner, &mut seen) {
                size += 1;
            }
        }
        (owner, size)
    }

    fn augment(&self, e: usize, owner: &mut [usize], seen: &mut [bool]) -> bool {
        for &b in &self.adjacency[e] {
            if seen[b] {
                continue;
            }
            seen[b] = true;
            if owner[b] == UNMATCHED || self.augment(owner[b], owner, seen) {
                owner[b] = e;
                return true;
            }
        }
        false
    }
}
