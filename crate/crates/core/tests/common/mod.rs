//! Random instance generators and exhaustive oracles shared by the integration tests.
//!
//! The oracles work from the definitions only; none of them calls into the
//! matching, cover-generation, or hitting-set search they are checked against.

#![allow(dead_code)]

use latmat::{ElemSet, GroundSet, InformationSystem, SetFamily};
use rand::Rng;

pub fn family(universe: &[&str], blocks: &[&[&str]]) -> SetFamily {
    SetFamily::from_names(
        universe.iter().copied(),
        blocks.iter().map(|b| b.iter().copied()),
    )
    .unwrap()
}

pub fn uncovered_family() -> SetFamily {
    family(
        &["1", "2", "3", "4", "5"],
        &[&["1", "3"], &["2", "3"], &["3", "4"]],
    )
}

pub fn three_block_covering() -> SetFamily {
    family(
        &["1", "2", "3", "4", "5"],
        &[&["1", "3"], &["2", "3"], &["3", "4", "5"]],
    )
}

pub fn weather_table() -> InformationSystem {
    let rows = [
        ["sunny", "hot", "high"],
        ["rain", "mild", "normal"],
        ["rain", "cool", "normal"],
        ["rain", "hot", "normal"],
    ];
    InformationSystem::new(
        vec!["x1".into(), "x2".into(), "x3".into(), "x4".into()],
        vec!["a1".into(), "a2".into(), "a3".into()],
        rows.iter()
            .map(|r| r.iter().map(|s| s.to_string()).collect())
            .collect(),
    )
    .unwrap()
}

pub fn random_family(rng: &mut impl Rng, max_n: usize, max_m: usize) -> SetFamily {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=max_m);
    let blocks = (0..m).map(|_| random_nonempty(rng, n)).collect();
    SetFamily::new(GroundSet::numbered(n).unwrap(), blocks).unwrap()
}

pub fn random_covering(rng: &mut impl Rng, max_n: usize, max_m: usize) -> SetFamily {
    let f = random_family(rng, max_n, max_m);
    let n = f.ground().len();
    let mut blocks = f.blocks().to_vec();
    for e in (ElemSet::full(n) - f.union()).iter() {
        let k = rng.gen_range(0..blocks.len());
        blocks[k].insert(e);
    }
    SetFamily::new(f.ground().clone(), blocks).unwrap()
}

pub fn random_nonempty(rng: &mut impl Rng, n: usize) -> ElemSet {
    loop {
        let s = ElemSet::from_bits(rng.gen::<u64>()) & ElemSet::full(n);
        if !s.is_empty() {
            return s;
        }
    }
}

pub fn random_subset(rng: &mut impl Rng, n: usize) -> ElemSet {
    ElemSet::from_bits(rng.gen::<u64>()) & ElemSet::full(n)
}

pub fn random_system(
    rng: &mut impl Rng,
    max_objects: usize,
    max_attrs: usize,
    max_values: usize,
) -> InformationSystem {
    let objects = rng.gen_range(1..=max_objects);
    let attrs = rng.gen_range(1..=max_attrs);
    let values = rng.gen_range(1..=max_values);
    InformationSystem::new(
        (0..objects).map(|i| format!("x{i}")).collect(),
        (0..attrs).map(|j| format!("a{j}")).collect(),
        (0..objects)
            .map(|_| {
                (0..attrs)
                    .map(|_| rng.gen_range(0..values).to_string())
                    .collect()
            })
            .collect(),
    )
    .unwrap()
}

/// Whether the elements of `x` have a system of distinct representatives,
/// found by trying every injective assignment to blocks.
pub fn has_distinct_representatives(blocks: &[ElemSet], x: ElemSet) -> bool {
    fn assign(blocks: &[ElemSet], elems: &[usize], used: &mut Vec<bool>) -> bool {
        let Some((&e, rest)) = elems.split_first() else {
            return true;
        };
        for (b, block) in blocks.iter().enumerate() {
            if !used[b] && block.contains(e) {
                used[b] = true;
                if assign(blocks, rest, used) {
                    return true;
                }
                used[b] = false;
            }
        }
        false
    }
    let elems: Vec<usize> = x.iter().collect();
    assign(blocks, &elems, &mut vec![false; blocks.len()])
}

pub fn brute_rank(f: &SetFamily, x: ElemSet) -> usize {
    x.subsets()
        .filter(|&i| has_distinct_representatives(f.blocks(), i))
        .map(ElemSet::len)
        .max()
        .unwrap_or(0)
}

pub fn brute_closure(f: &SetFamily, x: ElemSet) -> ElemSet {
    let r = brute_rank(f, x);
    (0..f.ground().len())
        .filter(|&a| brute_rank(f, x.with(a)) == r)
        .collect()
}

/// Flats from closing every subset, sorted by (rank, members).
pub fn brute_flats(f: &SetFamily) -> Vec<(usize, ElemSet)> {
    let mut flats: Vec<(usize, ElemSet)> = ElemSet::power_set(f.ground().len())
        .filter(|&x| brute_closure(f, x) == x)
        .map(|x| (brute_rank(f, x), x))
        .collect();
    flats.sort();
    flats
}

/// Minimal spanning sets: closure equals the ground set, no proper subset does.
pub fn brute_minimal_spanning(f: &SetFamily) -> Vec<ElemSet> {
    let n = f.ground().len();
    let full = ElemSet::full(n);
    let spans = |x: ElemSet| brute_closure(f, x) == full;
    let mut out: Vec<ElemSet> = ElemSet::power_set(n)
        .filter(|&x| spans(x) && x.iter().all(|e| !spans(x.without(e))))
        .collect();
    out.sort_by_key(|s| (s.len(), *s));
    out
}

/// Minimal hitting sets by scanning the whole power set.
pub fn brute_hitting_sets(n: usize, family: &[ElemSet]) -> Vec<ElemSet> {
    let hits = |x: ElemSet| family.iter().all(|d| d.intersects(x));
    let all: Vec<ElemSet> = ElemSet::power_set(n).filter(|&x| hits(x)).collect();
    let mut out: Vec<ElemSet> = all
        .iter()
        .copied()
        .filter(|x| !all.iter().any(|y| y.is_proper_subset(*x)))
        .collect();
    out.sort_by_key(|s| (s.len(), *s));
    out
}

/// Object pairs related under `R_B`, compared attribute by attribute.
pub fn brute_relation(s: &InformationSystem, b: ElemSet) -> Vec<(usize, usize)> {
    let n = s.objects().len();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if b.iter().all(|a| s.value(i, a) == s.value(j, a)) {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// The condition checked over every pair of attribute subsets.
pub fn brute_condition(s: &InformationSystem) -> bool {
    let k = s.attributes().len();
    let rel: Vec<_> = ElemSet::power_set(k)
        .map(|x| brute_relation(s, x))
        .collect();
    let subsets: Vec<ElemSet> = ElemSet::power_set(k).collect();
    subsets.iter().enumerate().all(|(i, &x)| {
        subsets
            .iter()
            .enumerate()
            .all(|(j, &y)| rel[i] != rel[j] || s.r0_upper(x).unwrap() == s.r0_upper(y).unwrap())
    })
}
