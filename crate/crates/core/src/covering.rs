//! Coverings and the structure their transversal matroids induce.
//!
//! For a covering, the closures of single elements partition the ground set
//! and are exactly the atoms of the lattice of flats. They can be read off the
//! covering directly: the residues `K_i - ⋃_{j≠i} K_j` together with the
//! singletons of the elements lying in two or more blocks.

use std::collections::BTreeSet;

use crate::bitset::ElemSet;
use crate::error::{invalid, Result};
use crate::family::{GroundSet, SetFamily};
use crate::lattice::GeometricLattice;
use crate::matroid::{Flat, TransversalMatroid};

pub fn is_covering(family: &SetFamily) -> bool {
    family.blocks().iter().all(|b| !b.is_empty()) && family.union() == family.ground().full()
}

/// The residues of a covering and the multiply covered remainder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbDecomposition {
    /// Distinct nonempty residues, sorted.
    pub a_sets: Vec<ElemSet>,
    pub b_set: ElemSet,
}

/// A set family whose blocks cover the ground set, with its matroid and
/// singleton closures precomputed.
#[derive(Debug, Clone)]
pub struct Covering {
    matroid: TransversalMatroid,
    singleton: Vec<ElemSet>,
}

impl Covering {
    pub fn new(family: SetFamily) -> Result<Self> {
        if !is_covering(&family) {
            let missing = family.ground().full() - family.union();
            return Err(invalid(format!(
                "blocks do not cover {}",
                family.ground().format_set(missing)
            )));
        }
        let matroid = TransversalMatroid::new(family);
        let singleton = (0..matroid.ground().len())
            .map(|e| matroid.closure_of(ElemSet::singleton(e)))
            .collect();
        Ok(Covering { matroid, singleton })
    }

    pub fn family(&self) -> &SetFamily {
        self.matroid.family()
    }

    pub fn ground(&self) -> &GroundSet {
        self.matroid.ground()
    }

    pub fn matroid(&self) -> &TransversalMatroid {
        &self.matroid
    }

    pub fn ab_decomposition(&self) -> AbDecomposition {
        let blocks = self.family().blocks();
        let residues: BTreeSet<ElemSet> = blocks
            .iter()
            .enumerate()
            .map(|(i, &k)| {
                let others = blocks
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .fold(ElemSet::EMPTY, |acc, (_, &b)| acc | b);
                k - others
            })
            .filter(|r| !r.is_empty())
            .collect();
        let covered = residues.iter().fold(ElemSet::EMPTY, |acc, &r| acc | r);
        AbDecomposition {
            a_sets: residues.into_iter().collect(),
            b_set: self.ground().full() - covered,
        }
    }

    /// Atoms of the lattice of flats, computed from the blocks alone.
    pub fn atoms_from_covering(&self) -> Vec<Flat> {
        let ab = self.ab_decomposition();
        let mut atoms: Vec<ElemSet> = ab
            .a_sets
            .into_iter()
            .chain(ab.b_set.iter().map(ElemSet::singleton))
            .collect();
        atoms.sort();
        atoms.into_iter().map(|a| Flat::new(a, 1)).collect()
    }

    /// `closure({x})` for every element `x`, indexed by element.
    pub fn singleton_closures(&self) -> &[ElemSet] {
        &self.singleton
    }

    /// Elements whose singleton closure lies inside `x`.
    pub fn lower_approx(&self, x: ElemSet) -> Result<ElemSet> {
        self.ground().check(x)?;
        Ok(self
            .singleton
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_subset(x))
            .map(|(e, _)| e)
            .collect())
    }

    /// Elements whose singleton closure meets `x`.
    pub fn upper_approx(&self, x: ElemSet) -> Result<ElemSet> {
        self.ground().check(x)?;
        Ok(self
            .singleton
            .iter()
            .enumerate()
            .filter(|(_, c)| c.intersects(x))
            .map(|(e, _)| e)
            .collect())
    }

    /// Whether the flat `x` is the union of the closures of its elements.
    pub fn flat_is_union_of_closures(&self, x: ElemSet) -> Result<bool> {
        if !self.matroid.is_flat(x)? {
            return Err(invalid(format!(
                "{} is not a flat",
                self.ground().format_set(x)
            )));
        }
        let union = x
            .iter()
            .fold(ElemSet::EMPTY, |acc, e| acc | self.singleton[e]);
        Ok(union == x)
    }
}

/// Truth values of the four statements that characterise coverings among
/// families of nonempty blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremReport {
    /// The blocks cover the ground set.
    pub is_covering: bool,
    /// `cl(∅) = ∅`.
    pub empty_closure_is_empty: bool,
    /// The singleton closures partition the ground set.
    pub singleton_closures_partition: bool,
    /// The singleton closures are exactly the atoms of the lattice of flats.
    pub singleton_closures_are_atoms: bool,
}

impl TheoremReport {
    pub fn as_array(&self) -> [bool; 4] {
        [
            self.is_covering,
            self.empty_closure_is_empty,
            self.singleton_closures_partition,
            self.singleton_closures_are_atoms,
        ]
    }

    /// All four statements agree.
    pub fn consistent(&self) -> bool {
        let v = self.as_array();
        v.iter().all(|&b| b == v[0])
    }
}

pub fn check_theorem_equivalences(family: &SetFamily) -> TheoremReport {
    let matroid = TransversalMatroid::new(family.clone());
    let full = family.ground().full();
    let closures: BTreeSet<ElemSet> = (0..family.ground().len())
        .map(|e| matroid.closure_of(ElemSet::singleton(e)))
        .collect();

    let union = closures.iter().fold(ElemSet::EMPTY, |acc, &c| acc | c);
    let disjoint = closures
        .iter()
        .enumerate()
        .all(|(i, a)| closures.iter().skip(i + 1).all(|b| !a.intersects(*b)));
    let partition = union == full && disjoint && closures.iter().all(|c| !c.is_empty());

    let lattice = GeometricLattice::build(&matroid);
    let atoms: BTreeSet<ElemSet> = lattice.atoms().iter().map(Flat::members).collect();

    TheoremReport {
        is_covering: is_covering(family),
        empty_closure_is_empty: matroid.closure_of(ElemSet::EMPTY).is_empty(),
        singleton_closures_partition: partition,
        singleton_closures_are_atoms: closures == atoms,
    }
}
