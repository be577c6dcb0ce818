//! Dependence spaces on the power set of a ground set, and their reducts.
//!
//! A space is held intensionally through a key function: two subsets are
//! related exactly when their keys are equal. The containment-profile space
//! of the hyperplanes of a matroid coincides with the closure-equality space,
//! and its reducts are the minimal sets meeting every hyperplane complement.

use std::collections::HashMap;
use std::hash::Hash;

use crate::bitset::ElemSet;
use crate::error::{invalid, Error, Result};
use crate::family::GroundSet;
use crate::matroid::{Flat, TransversalMatroid};

/// Default ground-set limit for exhaustive power-set comparisons.
pub const DEFAULT_MAX_EXHAUSTIVE_ELEMS: usize = 12;

pub trait DependenceSpace {
    type Key: Eq + Hash + Clone;

    fn ground(&self) -> &GroundSet;

    fn key(&self, b: ElemSet) -> Result<Self::Key>;

    fn related(&self, a: ElemSet, b: ElemSet) -> Result<bool> {
        Ok(self.key(a)? == self.key(b)?)
    }
}

/// `B₁ ~ B₂` iff they lie in exactly the same members of a family.
#[derive(Debug, Clone)]
pub struct GammaSpace {
    ground: GroundSet,
    family: Vec<ElemSet>,
}

impl GammaSpace {
    pub fn family(&self) -> &[ElemSet] {
        &self.family
    }
}

pub fn gamma_space(ground: &GroundSet, family: &[ElemSet]) -> Result<GammaSpace> {
    for &t in family {
        ground.check(t)?;
    }
    Ok(GammaSpace {
        ground: ground.clone(),
        family: family.to_vec(),
    })
}

impl DependenceSpace for GammaSpace {
    /// Packed bitmask over family indices of the members containing `b`.
    type Key = Vec<u64>;

    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn key(&self, b: ElemSet) -> Result<Vec<u64>> {
        self.ground.check(b)?;
        let mut profile = vec![0u64; self.family.len().div_ceil(64)];
        for (k, t) in self.family.iter().enumerate() {
            if b.is_subset(*t) {
                profile[k / 64] |= 1 << (k % 64);
            }
        }
        Ok(profile)
    }
}

/// `B ~ C` iff `cl(B) = cl(C)`.
#[derive(Debug, Clone, Copy)]
pub struct ThetaSpace<'a> {
    matroid: &'a TransversalMatroid,
}

pub fn theta_space(matroid: &TransversalMatroid) -> ThetaSpace<'_> {
    ThetaSpace { matroid }
}

impl DependenceSpace for ThetaSpace<'_> {
    type Key = ElemSet;

    fn ground(&self) -> &GroundSet {
        self.matroid.ground()
    }

    fn key(&self, b: ElemSet) -> Result<ElemSet> {
        Ok(self.matroid.closure(b)?.members())
    }
}

/// Class labels of every subset (indexed by bitmask), numbered by first occurrence.
pub fn power_set_partition<S: DependenceSpace>(space: &S, max_elems: usize) -> Result<Vec<u32>> {
    let n = space.ground().len();
    if n > max_elems {
        return Err(Error::Capacity {
            what: "ground set size for exhaustive power-set comparison",
            actual: n,
            limit: max_elems,
        });
    }
    let mut labels = HashMap::new();
    ElemSet::power_set(n)
        .map(|b| {
            let key = space.key(b)?;
            let next = labels.len() as u32;
            Ok(*labels.entry(key).or_insert(next))
        })
        .collect()
}

/// Compare the hyperplane containment space with the closure space over the whole power set.
pub fn spaces_equal_on(matroid: &TransversalMatroid, max_elems: usize) -> Result<bool> {
    matroid.require_positive_rank()?;
    let hyperplanes: Vec<ElemSet> = matroid.hyperplanes()?.iter().map(Flat::members).collect();
    let gamma = gamma_space(matroid.ground(), &hyperplanes)?;
    let theta = theta_space(matroid);
    Ok(power_set_partition(&gamma, max_elems)? == power_set_partition(&theta, max_elems)?)
}

/// `{U - X : X ∈ family}`.
pub fn complements(ground: &GroundSet, family: &[ElemSet]) -> Vec<ElemSet> {
    let full = ground.full();
    family.iter().map(|&x| full - x).collect()
}

/// Reducts sorted by size, then member order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReductSet(Vec<ElemSet>);

impl ReductSet {
    pub fn as_slice(&self) -> &[ElemSet] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<ElemSet> {
        self.0
    }
}

pub(crate) fn sort_by_size_then_members(sets: &mut [ElemSet]) {
    sets.sort_by_key(|s| (s.len(), *s));
}

/// All inclusion-minimal subsets of the ground set meeting every member of `family`.
///
/// Depth-first include/exclude search over elements in descending order of
/// how many members they hit. A branch is cut when some unhit member has no
/// undecided element left, or when the element to include hits nothing new.
pub fn minimal_hitting_sets(ground: &GroundSet, family: &[ElemSet]) -> Result<Vec<ElemSet>> {
    for &d in family {
        ground.check(d)?;
        if d.is_empty() {
            return Err(Error::NoHittingSet);
        }
    }

    // Only the inclusion-minimal members constrain the answer.
    let mut members: Vec<ElemSet> = family.to_vec();
    members.sort();
    members.dedup();
    let members: Vec<ElemSet> = members
        .iter()
        .copied()
        .filter(|d| !members.iter().any(|e| e.is_proper_subset(*d)))
        .collect();

    let n = ground.len();
    let mut hits: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, d) in members.iter().enumerate() {
        for e in d.iter() {
            hits[e].push(k);
        }
    }
    let mut order: Vec<usize> = (0..n).filter(|&e| !hits[e].is_empty()).collect();
    order.sort_by_key(|&e| (std::cmp::Reverse(hits[e].len()), e));

    let mut position = vec![usize::MAX; n];
    for (p, &e) in order.iter().enumerate() {
        position[e] = p;
    }
    let last_position: Vec<usize> = members
        .iter()
        .map(|d| d.iter().map(|e| position[e]).max().unwrap_or(0))
        .collect();

    let mut search = HittingSearch {
        members: &members,
        hits: &hits,
        order: &order,
        last_position: &last_position,
        hit_count: vec![0; members.len()],
        unhit: members.len(),
        found: Vec::new(),
    };
    search.descend(0, ElemSet::EMPTY);
    let mut found = search.found;
    sort_by_size_then_members(&mut found);
    Ok(found)
}

struct HittingSearch<'a> {
    members: &'a [ElemSet],
    hits: &'a [Vec<usize>],
    order: &'a [usize],
    last_position: &'a [usize],
    hit_count: Vec<u32>,
    unhit: usize,
    found: Vec<ElemSet>,
}

impl HittingSearch<'_> {
    fn descend(&mut self, pos: usize, chosen: ElemSet) {
        if self.unhit == 0 {
            if self.is_minimal(chosen) {
                self.found.push(chosen);
            }
            return;
        }
        if pos == self.order.len() {
            return;
        }
        let stranded = self
            .hit_count
            .iter()
            .zip(self.last_position)
            .any(|(&c, &last)| c == 0 && last < pos);
        if stranded {
            return;
        }

        let e = self.order[pos];
        let hits = self.hits;
        if hits[e].iter().any(|&k| self.hit_count[k] == 0) {
            for &k in &hits[e] {
                if self.hit_count[k] == 0 {
                    self.unhit -= 1;
                }
                self.hit_count[k] += 1;
            }
            self.descend(pos + 1, chosen.with(e));
            for &k in &hits[e] {
                self.hit_count[k] -= 1;
                if self.hit_count[k] == 0 {
                    self.unhit += 1;
                }
            }
        }
        self.descend(pos + 1, chosen);
    }

    /// Every chosen element is the only one hitting some member.
    fn is_minimal(&self, chosen: ElemSet) -> bool {
        chosen.iter().all(|e| {
            self.members
                .iter()
                .any(|d| (*d & chosen) == ElemSet::singleton(e))
        })
    }
}

/// Reducts of the hyperplane containment space: minimal sets meeting every
/// hyperplane complement.
pub fn reducts_via_hyperplanes(matroid: &TransversalMatroid) -> Result<ReductSet> {
    let hyperplanes: Vec<ElemSet> = matroid.hyperplanes()?.iter().map(Flat::members).collect();
    let com = complements(matroid.ground(), &hyperplanes);
    if com.iter().any(|c| c.is_empty()) {
        return Err(invalid("a hyperplane equals the ground set"));
    }
    Ok(ReductSet(minimal_hitting_sets(matroid.ground(), &com)?))
}
