//! Fixed-width bitmask sets over element indices `0..64`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

/// Largest ground set representable by an [`ElemSet`].
pub const MAX_ELEMENTS: usize = 64;

/// A subset of `{0, .., 63}` stored as a bitmask.
///
/// `Ord` compares the sorted member lists lexicographically, so `{0} < {0, 1} < {1}`.
/// This is the member order used for every sorted output in the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElemSet(u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElemSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(
            n <= MAX_ELEMENTS,
            "ElemSet holds at most {MAX_ELEMENTS} elements"
        );
        if n == MAX_ELEMENTS {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_ELEMENTS);
        ElemSet(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMENTS && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < MAX_ELEMENTS);
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        if i < MAX_ELEMENTS {
            self.0 &= !(1u64 << i);
        }
    }

    pub fn with(self, i: usize) -> Self {
        let mut s = self;
        s.insert(i);
        s
    }

    pub fn without(self, i: usize) -> Self {
        let mut s = self;
        s.remove(i);
        s
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: ElemSet) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn intersects(self, other: ElemSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// All subsets of `self`, starting with the empty set and ending with `self`.
    pub fn subsets(self) -> Subsets {
        Subsets {
            set: self.0,
            next: Some(0),
        }
    }

    /// The `2^n` subsets of `{0, .., n-1}` in increasing bitmask order.
    pub fn power_set(n: usize) -> Subsets {
        ElemSet::full(n).subsets()
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // Both lists agree below the lowest differing element `d`. The side
        // holding `d` is smaller unless the other side has nothing left.
        let d = diff.trailing_zeros();
        let above = if d == 63 { 0 } else { u64::MAX << (d + 1) };
        if self.0 >> d & 1 == 1 {
            if other.0 & above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 & above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for ElemSet {
    type Output = ElemSet;
    fn bitor(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for ElemSet {
    fn bitor_assign(&mut self, rhs: ElemSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for ElemSet {
    type Output = ElemSet;
    fn bitand(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for ElemSet {
    fn bitand_assign(&mut self, rhs: ElemSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for ElemSet {
    type Output = ElemSet;
    fn sub(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 & !rhs.0)
    }
}

/// Complement within the full 64-bit universe; mask with a ground set before use.
impl Not for ElemSet {
    type Output = ElemSet;
    fn not(self) -> ElemSet {
        ElemSet(!self.0)
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl IntoIterator for ElemSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Members in increasing order.
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Subset enumeration by the carry-ripple trick.
#[derive(Clone)]
pub struct Subsets {
    set: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElemSet;

    fn next(&mut self) -> Option<ElemSet> {
        let cur = self.next?;
        let succ = cur.wrapping_sub(self.set) & self.set;
        self.next = (succ != 0).then_some(succ);
        Some(ElemSet(cur))
    }
}
