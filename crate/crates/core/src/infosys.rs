//! Complete information systems and attribute reduction.
//!
//! Attribute subsets are [`ElemSet`]s over attribute indices. Value tokens are
//! compared as opaque strings.

use std::collections::HashMap;

use crate::bitset::{ElemSet, MAX_ELEMENTS};
use crate::dependence::sort_by_size_then_members;
use crate::error::{invalid, Error, Result};

/// Attribute limit for the pairwise condition check.
pub const DEFAULT_MAX_CONDITION_ATTRS: usize = 15;
/// Attribute limit for the exhaustive reduct scan.
pub const DEFAULT_MAX_BRUTE_ATTRS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InformationSystem {
    objects: Vec<String>,
    attributes: Vec<String>,
    attr_index: HashMap<String, usize>,
    /// `columns[a][x]` is the interned value of attribute `a` on object `x`.
    columns: Vec<Vec<u32>>,
    /// `tokens[a][v]` is the original token for interned value `v`.
    tokens: Vec<Vec<String>>,
}

/// A partition of the objects, stored as first-occurrence block labels so that
/// equal partitions compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AttributePartition {
    labels: Vec<u32>,
}

impl AttributePartition {
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Blocks of object indices, in order of their first object.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (x, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].push(x);
        }
        blocks
    }

    /// Every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &AttributePartition) -> bool {
        let mut image = HashMap::new();
        self.labels
            .iter()
            .zip(&coarser.labels)
            .all(|(a, b)| *image.entry(a).or_insert(b) == b)
    }
}

/// Attributes grouped by equality of their single-attribute partitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct R0Quotient {
    blocks: Vec<ElemSet>,
}

impl R0Quotient {
    /// Blocks ordered by their smallest attribute.
    pub fn blocks(&self) -> &[ElemSet] {
        &self.blocks
    }

    pub fn block_of(&self, attribute: usize) -> Option<ElemSet> {
        self.blocks.iter().copied().find(|b| b.contains(attribute))
    }

    /// Union of the blocks meeting `x`.
    pub fn saturate(&self, x: ElemSet) -> ElemSet {
        self.blocks
            .iter()
            .filter(|b| b.intersects(x))
            .fold(ElemSet::EMPTY, |acc, &b| acc | b)
    }
}

impl InformationSystem {
    /// `rows[i][j]` is the value of attribute `j` on object `i`.
    pub fn new(
        objects: Vec<String>,
        attributes: Vec<String>,
        rows: Vec<Vec<String>>,
    ) -> Result<Self> {
        if objects.is_empty() {
            return Err(invalid("an information system needs at least one object"));
        }
        if attributes.is_empty() {
            return Err(invalid(
                "an information system needs at least one attribute",
            ));
        }
        if attributes.len() > MAX_ELEMENTS {
            return Err(Error::Capacity {
                what: "attribute count",
                actual: attributes.len(),
                limit: MAX_ELEMENTS,
            });
        }
        let mut seen = HashMap::new();
        for o in &objects {
            if seen.insert(o.as_str(), ()).is_some() {
                return Err(invalid(format!("duplicate object `{o}`")));
            }
        }
        let mut attr_index = HashMap::new();
        for (j, a) in attributes.iter().enumerate() {
            if attr_index.insert(a.clone(), j).is_some() {
                return Err(invalid(format!("duplicate attribute `{a}`")));
            }
        }
        if rows.len() != objects.len() {
            return Err(invalid(format!(
                "{} objects but {} value rows",
                objects.len(),
                rows.len()
            )));
        }

        let mut columns = vec![Vec::with_capacity(objects.len()); attributes.len()];
        let mut tokens = vec![Vec::new(); attributes.len()];
        let mut interned: Vec<HashMap<String, u32>> = vec![HashMap::new(); attributes.len()];
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != attributes.len() {
                return Err(invalid(format!(
                    "object `{}` has {} values, expected {}",
                    objects[i],
                    row.len(),
                    attributes.len()
                )));
            }
            for (j, value) in row.into_iter().enumerate() {
                if value.is_empty() {
                    return Err(invalid(format!(
                        "missing value for object `{}`, attribute `{}`",
                        objects[i], attributes[j]
                    )));
                }
                let next = interned[j].len() as u32;
                let id = *interned[j].entry(value.clone()).or_insert_with(|| {
                    tokens[j].push(value);
                    next
                });
                columns[j].push(id);
            }
        }
        Ok(InformationSystem {
            objects,
            attributes,
            attr_index,
            columns,
            tokens,
        })
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn value(&self, object: usize, attribute: usize) -> &str {
        &self.tokens[attribute][self.columns[attribute][object] as usize]
    }

    pub fn all_attributes(&self) -> ElemSet {
        ElemSet::full(self.attributes.len())
    }

    pub fn attribute_set<I, S>(&self, names: I) -> Result<ElemSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        names
            .into_iter()
            .map(|n| {
                let n = n.as_ref();
                self.attr_index
                    .get(n)
                    .copied()
                    .ok_or_else(|| invalid(format!("unknown attribute `{n}`")))
            })
            .collect()
    }

    fn check_attributes(&self, b: ElemSet) -> Result<()> {
        match (b - self.all_attributes()).first() {
            None => Ok(()),
            Some(j) => Err(invalid(format!(
                "unknown attribute #{j}; the system has {} attributes",
                self.attributes.len()
            ))),
        }
    }

    /// Partition of the objects by agreement on every attribute of `b`.
    pub fn indiscernibility(&self, b: ElemSet) -> Result<AttributePartition> {
        self.check_attributes(b)?;
        Ok(self.partition_of(b))
    }

    fn partition_of(&self, b: ElemSet) -> AttributePartition {
        let mut labels = vec![0u32; self.objects.len()];
        let mut refined = HashMap::new();
        for a in b.iter() {
            refined.clear();
            for (x, label) in labels.iter_mut().enumerate() {
                let next = refined.len() as u32;
                *label = *refined.entry((*label, self.columns[a][x])).or_insert(next);
            }
        }
        AttributePartition { labels }
    }

    pub fn r0_quotient(&self) -> R0Quotient {
        let mut by_partition: HashMap<AttributePartition, usize> = HashMap::new();
        let mut blocks: Vec<ElemSet> = Vec::new();
        for a in 0..self.attributes.len() {
            let p = self.partition_of(ElemSet::singleton(a));
            match by_partition.get(&p) {
                Some(&k) => blocks[k].insert(a),
                None => {
                    by_partition.insert(p, blocks.len());
                    blocks.push(ElemSet::singleton(a));
                }
            }
        }
        R0Quotient { blocks }
    }

    /// Union of the R₀ blocks meeting `x`.
    pub fn r0_upper(&self, x: ElemSet) -> Result<ElemSet> {
        self.check_attributes(x)?;
        Ok(self.r0_quotient().saturate(x))
    }

    pub fn check_condition(&self) -> Result<bool> {
        self.check_condition_with_limit(DEFAULT_MAX_CONDITION_ATTRS)
    }

    /// Whether `R_X = R_Y` implies `R₀*(X) = R₀*(Y)` for all attribute subsets.
    ///
    /// Subsets are grouped by their partition; the implication holds iff each
    /// group shares one saturation.
    pub fn check_condition_with_limit(&self, max_attrs: usize) -> Result<bool> {
        self.guard(max_attrs, "attribute count for the condition check")?;
        let quotient = self.r0_quotient();
        let mut saturation_of: HashMap<AttributePartition, ElemSet> = HashMap::new();
        for x in ElemSet::power_set(self.attributes.len()) {
            let sat = quotient.saturate(x);
            let seen = *saturation_of.entry(self.partition_of(x)).or_insert(sat);
            if seen != sat {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn reducts_via_r0(&self) -> Result<Vec<ElemSet>> {
        self.reducts_via_r0_with_limit(DEFAULT_MAX_CONDITION_ATTRS)
    }

    /// Every choice of one attribute per R₀ block. Valid only when the
    /// condition holds.
    pub fn reducts_via_r0_with_limit(&self, max_attrs: usize) -> Result<Vec<ElemSet>> {
        if !self.check_condition_with_limit(max_attrs)? {
            return Err(Error::Precondition(
                "the condition R_X = R_Y => R0*(X) = R0*(Y) fails; use brute_force_reducts".into(),
            ));
        }
        let mut out = vec![ElemSet::EMPTY];
        for block in self.r0_quotient().blocks() {
            out = out
                .iter()
                .flat_map(|&partial| block.iter().map(move |a| partial.with(a)))
                .collect();
        }
        sort_by_size_then_members(&mut out);
        Ok(out)
    }

    pub fn brute_force_reducts(&self) -> Result<Vec<ElemSet>> {
        self.brute_force_reducts_with_limit(DEFAULT_MAX_BRUTE_ATTRS)
    }

    /// All minimal `B` with `R_B = R_A`, by scanning every attribute subset.
    pub fn brute_force_reducts_with_limit(&self, max_attrs: usize) -> Result<Vec<ElemSet>> {
        self.guard(max_attrs, "attribute count for the exhaustive reduct scan")?;
        // R_B ⊇ R_A always, so R_B = R_A iff B separates every pair A separates.
        let mut separating: Vec<ElemSet> = Vec::new();
        for i in 0..self.objects.len() {
            for j in i + 1..self.objects.len() {
                let d: ElemSet = (0..self.attributes.len())
                    .filter(|&a| self.columns[a][i] != self.columns[a][j])
                    .collect();
                if !d.is_empty() {
                    separating.push(d);
                }
            }
        }
        separating.sort();
        separating.dedup();
        let consistent = |b: ElemSet| separating.iter().all(|d| d.intersects(b));

        let mut out: Vec<ElemSet> = ElemSet::power_set(self.attributes.len())
            .filter(|&b| consistent(b) && b.iter().all(|a| !consistent(b.without(a))))
            .collect();
        sort_by_size_then_members(&mut out);
        Ok(out)
    }

    fn guard(&self, max_attrs: usize, what: &'static str) -> Result<()> {
        if self.attributes.len() > max_attrs {
            return Err(Error::Capacity {
                what,
                actual: self.attributes.len(),
                limit: max_attrs,
            });
        }
        Ok(())
    }

    pub fn format_attributes(&self, x: ElemSet) -> String {
        if x.is_empty() {
            return "∅".into();
        }
        let names: Vec<&str> = x.iter().map(|a| self.attributes[a].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn format_partition(&self, p: &AttributePartition) -> String {
        let blocks: Vec<String> = p
            .blocks()
            .iter()
            .map(|b| {
                let names: Vec<&str> = b.iter().map(|&x| self.objects[x].as_str()).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        format!("{{{}}}", blocks.join(", "))
    }
}
