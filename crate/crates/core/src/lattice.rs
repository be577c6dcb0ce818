//! The geometric lattice of flats of a transversal matroid.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::bitset::ElemSet;
use crate::error::{invalid, Error, Result};
use crate::matroid::{Flat, TransversalMatroid};

/// All flats of a matroid ordered by inclusion.
///
/// Nodes are indexed in (height, member) order; covers are stored as node indices.
#[derive(Debug, Clone)]
pub struct GeometricLattice {
    matroid: TransversalMatroid,
    flats: Vec<Flat>,
    covers: Vec<Vec<usize>>,
    index: HashMap<ElemSet, usize>,
    bottom: usize,
    top: usize,
}

/// Outcome of [`GeometricLattice::verify_geometric`]. Counterexamples are node indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricReport {
    /// A flat that is not the join of the atoms below it.
    pub non_atomistic: Option<usize>,
    /// A pair with `h(x) + h(y) < h(x ∨ y) + h(x ∧ y)`.
    pub non_semimodular: Option<(usize, usize)>,
}

impl GeometricReport {
    pub fn passed(&self) -> bool {
        self.non_atomistic.is_none() && self.non_semimodular.is_none()
    }
}

impl GeometricLattice {
    pub fn build(matroid: &TransversalMatroid) -> Self {
        let flats = matroid.flats();
        let index: HashMap<ElemSet, usize> = flats
            .iter()
            .enumerate()
            .map(|(i, f)| (f.members(), i))
            .collect();

        // The lattice is graded by rank, so covers sit exactly one height apart.
        let mut level_start = vec![0];
        for (i, pair) in flats.windows(2).enumerate() {
            if pair[1].rank() != pair[0].rank() {
                level_start.push(i + 1);
            }
        }
        level_start.push(flats.len());

        let mut covers = vec![Vec::new(); flats.len()];
        for h in 0..level_start.len().saturating_sub(2) {
            let (lo, mid, hi) = (level_start[h], level_start[h + 1], level_start[h + 2]);
            for (x, cov) in covers.iter_mut().enumerate().take(mid).skip(lo) {
                let xm = flats[x].members();
                cov.extend((mid..hi).filter(|&y| xm.is_proper_subset(flats[y].members())));
            }
        }

        let bottom = 0;
        let top = index[&matroid.ground().full()];
        GeometricLattice {
            matroid: matroid.clone(),
            flats,
            covers,
            index,
            bottom,
            top,
        }
    }

    pub fn matroid(&self) -> &TransversalMatroid {
        &self.matroid
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn flat(&self, i: usize) -> Flat {
        self.flats[i]
    }

    pub fn height(&self, i: usize) -> usize {
        self.flats[i].rank()
    }

    /// Indices of the flats covering node `i`.
    pub fn covers(&self, i: usize) -> &[usize] {
        &self.covers[i]
    }

    pub fn cover_count(&self) -> usize {
        self.covers.iter().map(Vec::len).sum()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn index_of(&self, x: ElemSet) -> Option<usize> {
        self.index.get(&x).copied()
    }

    fn require_flat(&self, x: ElemSet) -> Result<usize> {
        self.index_of(x).ok_or_else(|| {
            invalid(format!(
                "{} is not a flat of this lattice",
                self.matroid.ground().format_set(x)
            ))
        })
    }

    pub fn meet(&self, x: ElemSet, y: ElemSet) -> Result<Flat> {
        self.require_flat(x)?;
        self.require_flat(y)?;
        Ok(self.flats[self.index[&(x & y)]])
    }

    pub fn join(&self, x: ElemSet, y: ElemSet) -> Result<Flat> {
        self.require_flat(x)?;
        self.require_flat(y)?;
        self.matroid.closure(x | y)
    }

    /// Flats of height one.
    pub fn atoms(&self) -> Vec<Flat> {
        self.flats
            .iter()
            .filter(|f| f.rank() == 1)
            .copied()
            .collect()
    }

    /// Flats covered by the top element.
    pub fn coatoms(&self) -> Result<Vec<Flat>> {
        if self.top == self.bottom {
            return Err(Error::Degenerate("lattice has a single element".into()));
        }
        Ok(self
            .covers
            .iter()
            .enumerate()
            .filter(|(_, cov)| cov.contains(&self.top))
            .map(|(i, _)| self.flats[i])
            .collect())
    }

    /// Exhaustive atomicity and semimodularity check. Quadratic in the number of flats.
    pub fn verify_geometric(&self) -> GeometricReport {
        let atoms: Vec<ElemSet> = self.atoms().iter().map(Flat::members).collect();
        let non_atomistic = self.flats.iter().position(|f| {
            let below = atoms
                .iter()
                .filter(|a| a.is_subset(f.members()))
                .fold(ElemSet::EMPTY, |acc, &a| acc | a);
            self.matroid
                .closure_of(below | self.flats[self.bottom].members())
                != f.members()
        });

        let mut non_semimodular = None;
        'outer: for (i, x) in self.flats.iter().enumerate() {
            for (j, y) in self.flats.iter().enumerate().skip(i + 1) {
                let join = self.matroid.closure_of(x.members() | y.members());
                let meet = x.members() & y.members();
                let (hj, hm) = match (self.index.get(&join), self.index.get(&meet)) {
                    (Some(&a), Some(&b)) => (self.height(a), self.height(b)),
                    _ => {
                        non_semimodular = Some((i, j));
                        break 'outer;
                    }
                };
                if x.rank() + y.rank() < hj + hm {
                    non_semimodular = Some((i, j));
                    break 'outer;
                }
            }
        }
        GeometricReport {
            non_atomistic,
            non_semimodular,
        }
    }

    /// Hasse diagram as a DOT digraph, bottom row first, one rank per height.
    pub fn export_dot(&self) -> String {
        let ground = self.matroid.ground();
        let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
        let max_height = self.flats.last().map_or(0, Flat::rank);
        for h in 0..=max_height {
            out.push_str("  { rank=same;");
            for (i, f) in self.flats.iter().enumerate().filter(|(_, f)| f.rank() == h) {
                let _ = write!(out, " n{i} [label=\"{}\"];", ground.format_set(f.members()));
            }
            out.push_str(" }\n");
        }
        for (i, cov) in self.covers.iter().enumerate() {
            for j in cov {
                let _ = writeln!(out, "  n{i} -> n{j};");
            }
        }
        out.push_str("}\n");
        out
    }
}
