//! Named ground sets and indexed set families over them.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::bitset::{ElemSet, MAX_ELEMENTS};
use crate::error::{invalid, Error, Result};

/// An ordered, duplicate-free list of element names.
///
/// Element `i` of every [`ElemSet`] over this ground set refers to `names()[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(invalid("ground set must contain at least one element"));
        }
        if names.len() > MAX_ELEMENTS {
            return Err(Error::Capacity {
                what: "ground set size",
                actual: names.len(),
                limit: MAX_ELEMENTS,
            });
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(invalid(format!("duplicate element `{name}` in ground set")));
            }
        }
        Ok(GroundSet { names, index })
    }

    /// Ground set `{1, .., n}` with decimal names.
    pub fn numbered(n: usize) -> Result<Self> {
        GroundSet::new((1..=n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn full(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| invalid(format!("element `{name}` is not in the ground set")))
    }

    /// Encode a list of element names.
    pub fn subset<I, S>(&self, names: I) -> Result<ElemSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        names
            .into_iter()
            .map(|n| self.index_of(n.as_ref()))
            .collect()
    }

    /// Reject sets that mention indices past the end of the ground set.
    pub fn check(&self, x: ElemSet) -> Result<()> {
        match (x - self.full()).first() {
            None => Ok(()),
            Some(i) => Err(invalid(format!(
                "element #{i} is not in the ground set of {} elements",
                self.len()
            ))),
        }
    }

    pub fn names_of(&self, x: ElemSet) -> Vec<&str> {
        x.iter().map(|i| self.name(i)).collect()
    }

    /// `{a,b}` style rendering; `∅` for the empty set.
    pub fn format_set(&self, x: ElemSet) -> String {
        if x.is_empty() {
            return "∅".to_string();
        }
        let mut out = String::from("{");
        for (k, i) in x.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}", self.name(i));
        }
        out.push('}');
        out
    }
}

/// An indexed family of nonempty subsets of a ground set. Blocks may overlap,
/// repeat, and leave elements uncovered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    ground: GroundSet,
    blocks: Vec<ElemSet>,
}

impl SetFamily {
    pub fn new(ground: GroundSet, blocks: Vec<ElemSet>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(invalid("a set family needs at least one block"));
        }
        for (k, &b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(invalid(format!("block #{k} is empty")));
            }
            ground.check(b)?;
        }
        Ok(SetFamily { ground, blocks })
    }

    pub fn from_names<U, B, S>(universe: U, blocks: impl IntoIterator<Item = B>) -> Result<Self>
    where
        U: IntoIterator<Item = S>,
        B: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let ground = GroundSet::new(universe.into_iter().map(|s| s.as_ref().to_string()))?;
        let blocks = blocks
            .into_iter()
            .map(|b| ground.subset(b))
            .collect::<Result<Vec<_>>>()?;
        SetFamily::new(ground, blocks)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn blocks(&self) -> &[ElemSet] {
        &self.blocks
    }

    pub fn union(&self) -> ElemSet {
        self.blocks.iter().fold(ElemSet::EMPTY, |acc, &b| acc | b)
    }
}
