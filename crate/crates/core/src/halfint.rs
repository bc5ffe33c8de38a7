//! Exact arithmetic in (1/2)Z, segments, and finite multisets of half-integers.
//!
//! Every coordinate of an infinitesimal character handled by this crate lies
//! in `Z^N + (N-1)/2`, so a value is stored as its doubled integer. Segments
//! `[a, a+n]` step by one and are treated as multiplicity-free multisets.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// An element of (1/2)Z, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    /// `num / 2`.
    pub const fn half(num: i64) -> Self {
        HalfInt { twice: num }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// The integer value, if this is an integer.
    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.twice / 2)
    }

    /// Whether `self` and `other` differ by an integer.
    pub const fn same_parity(self, other: HalfInt) -> bool {
        (self.twice - other.twice) % 2 == 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::from_int(n)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl Add<i64> for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: i64) -> HalfInt {
        HalfInt::from_twice(self.twice + 2 * rhs)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl Sub<i64> for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: i64) -> HalfInt {
        HalfInt::from_twice(self.twice - 2 * rhs)
    }
}

impl AddAssign<i64> for HalfInt {
    fn add_assign(&mut self, rhs: i64) {
        self.twice += 2 * rhs;
    }
}

impl SubAssign<i64> for HalfInt {
    fn sub_assign(&mut self, rhs: i64) {
        self.twice -= 2 * rhs;
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

/// The segment `[start, start + len - 1]`. A zero length gives the empty
/// segment, which has a single canonical representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "SegmentRepr", from = "SegmentRepr")]
pub struct Segment {
    start: HalfInt,
    len: usize,
}

#[derive(Serialize, Deserialize)]
struct SegmentRepr {
    start_twice: i64,
    len: usize,
}

impl From<Segment> for SegmentRepr {
    fn from(s: Segment) -> Self {
        SegmentRepr {
            start_twice: s.start.twice(),
            len: s.len,
        }
    }
}

impl From<SegmentRepr> for Segment {
    fn from(r: SegmentRepr) -> Self {
        Segment::new(HalfInt::from_twice(r.start_twice), r.len)
    }
}

impl Segment {
    pub const EMPTY: Segment = Segment {
        start: HalfInt::ZERO,
        len: 0,
    };

    pub fn new(start: HalfInt, len: usize) -> Self {
        if len == 0 {
            Segment::EMPTY
        } else {
            Segment { start, len }
        }
    }

    /// `[bottom, top]`; empty when `top < bottom`.
    pub fn from_bounds(bottom: HalfInt, top: HalfInt) -> Self {
        debug_assert!(bottom.same_parity(top), "segment bounds {bottom}, {top}");
        if top < bottom {
            Segment::EMPTY
        } else {
            Segment::new(bottom, ((top.twice() - bottom.twice()) / 2 + 1) as usize)
        }
    }

    pub fn start(&self) -> HalfInt {
        self.start
    }

    /// Largest member. For the empty segment this is `start - 1`.
    pub fn end(&self) -> HalfInt {
        self.start + (self.len as i64 - 1)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, x: HalfInt) -> bool {
        !self.is_empty() && self.start <= x && x <= self.end() && x.same_parity(self.start)
    }

    /// Sum of the two endpoints; equals `t` when the segment comes from a
    /// summand `chi_t (x) S_a`.
    pub fn endpoint_sum(&self) -> i64 {
        (self.start.twice() + self.end().twice()) / 2
    }

    /// Members in strictly decreasing order.
    pub fn values_desc(&self) -> impl Iterator<Item = HalfInt> + '_ {
        (0..self.len as i64).map(move |k| self.end() - k)
    }

    pub fn shifted(&self, by: i64) -> Segment {
        Segment::new(self.start + by, self.len)
    }

    pub fn intersect(&self, other: &Segment) -> Segment {
        if self.is_empty() || other.is_empty() || !self.start.same_parity(other.start) {
            return Segment::EMPTY;
        }
        Segment::from_bounds(self.start.max(other.start), self.end().min(other.end()))
    }

    pub fn is_subset_of(&self, other: &Segment) -> bool {
        self.is_empty()
            || (!other.is_empty()
                && self.start.same_parity(other.start)
                && other.start <= self.start
                && self.end() <= other.end())
    }

    pub fn to_multiset(&self) -> HalfIntMultiset {
        HalfIntMultiset::from_values(self.values_desc())
    }

    /// The canonical order on parameters: larger endpoint sum first, then
    /// longer first.
    pub fn canonical_cmp(&self, other: &Segment) -> Ordering {
        other
            .endpoint_sum()
            .cmp(&self.endpoint_sum())
            .then(other.len.cmp(&self.len))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "[]")
        } else if self.len == 1 {
            write!(f, "{{{}}}", self.start)
        } else {
            write!(f, "[{}, {}]", self.start, self.end())
        }
    }
}

/// Result of [`seg_compare`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentRelation {
    pub linked: bool,
    pub leq: bool,
    pub subset: bool,
}

/// Compare `s1 = [a, b]` with `s2 = [c, d]`: linked iff `c = b + 1` or
/// `a = d + 1`; `leq` iff `a <= c` and `b <= d`; `subset` iff `s1 ⊆ s2`.
pub fn seg_compare(s1: &Segment, s2: &Segment) -> SegmentRelation {
    let (a, b) = (s1.start(), s1.end());
    let (c, d) = (s2.start(), s2.end());
    SegmentRelation {
        linked: c == b + 1 || a == d + 1,
        leq: a <= c && b <= d,
        subset: c <= a && b <= d,
    }
}

/// A finite multiset of half-integers, kept with strictly decreasing values
/// and positive multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<MultisetEntry>", try_from = "Vec<MultisetEntry>")]
pub struct HalfIntMultiset {
    entries: Vec<(HalfInt, usize)>,
}

#[derive(Serialize, Deserialize)]
struct MultisetEntry {
    twice: i64,
    mult: usize,
}

impl From<HalfIntMultiset> for Vec<MultisetEntry> {
    fn from(m: HalfIntMultiset) -> Self {
        m.entries
            .into_iter()
            .map(|(v, mult)| MultisetEntry {
                twice: v.twice(),
                mult,
            })
            .collect()
    }
}

impl TryFrom<Vec<MultisetEntry>> for HalfIntMultiset {
    type Error = String;

    fn try_from(raw: Vec<MultisetEntry>) -> Result<Self, String> {
        if raw.iter().any(|e| e.mult == 0) {
            return Err("multiset multiplicities must be positive".into());
        }
        if raw.windows(2).any(|w| w[0].twice <= w[1].twice) {
            return Err("multiset values must be strictly decreasing".into());
        }
        Ok(HalfIntMultiset {
            entries: raw
                .into_iter()
                .map(|e| (HalfInt::from_twice(e.twice), e.mult))
                .collect(),
        })
    }
}

impl HalfIntMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_values<I: IntoIterator<Item = HalfInt>>(values: I) -> Self {
        let mut vals: Vec<HalfInt> = values.into_iter().collect();
        vals.sort_unstable_by(|a, b| b.cmp(a));
        let mut entries: Vec<(HalfInt, usize)> = Vec::new();
        for v in vals {
            match entries.last_mut() {
                Some((last, mult)) if *last == v => *mult += 1,
                _ => entries.push((v, 1)),
            }
        }
        HalfIntMultiset { entries }
    }

    pub fn from_segments<'a, I: IntoIterator<Item = &'a Segment>>(segments: I) -> Self {
        HalfIntMultiset::from_values(segments.into_iter().flat_map(|s| s.values_desc()))
    }

    /// `(value, multiplicity)` pairs, values strictly decreasing.
    pub fn entries(&self) -> &[(HalfInt, usize)] {
        &self.entries
    }

    /// Total size counting multiplicity.
    pub fn len(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn count(&self, x: HalfInt) -> usize {
        self.entries
            .binary_search_by(|(v, _)| x.cmp(v))
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    pub fn contains(&self, x: HalfInt) -> bool {
        self.count(x) > 0
    }

    pub fn max(&self) -> Option<HalfInt> {
        self.entries.first().map(|(v, _)| *v)
    }

    pub fn min(&self) -> Option<HalfInt> {
        self.entries.last().map(|(v, _)| *v)
    }

    /// All members with repetition, in weakly decreasing order.
    pub fn values_desc(&self) -> Vec<HalfInt> {
        self.entries
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
            .collect()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.entries.iter().all(|&(_, m)| m == 1)
    }

    fn merge(&self, other: &Self, f: impl Fn(usize, usize) -> usize) -> Self {
        let (mut i, mut j) = (0, 0);
        let mut entries = Vec::with_capacity(self.entries.len() + other.entries.len());
        while i < self.entries.len() || j < other.entries.len() {
            let (v, a, b) = match (self.entries.get(i), other.entries.get(j)) {
                (Some(&(x, a)), Some(&(y, b))) => match x.cmp(&y) {
                    Ordering::Greater => {
                        i += 1;
                        (x, a, 0)
                    }
                    Ordering::Less => {
                        j += 1;
                        (y, 0, b)
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (x, a, b)
                    }
                },
                (Some(&(x, a)), None) => {
                    i += 1;
                    (x, a, 0)
                }
                (None, Some(&(y, b))) => {
                    j += 1;
                    (y, 0, b)
                }
                (None, None) => unreachable!(),
            };
            let m = f(a, b);
            if m > 0 {
                entries.push((v, m));
            }
        }
        HalfIntMultiset { entries }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.merge(other, |a, b| a + b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.merge(other, usize::min)
    }

    /// Truncated difference `self ∖ other`.
    pub fn difference(&self, other: &Self) -> Self {
        self.merge(other, |a, b| a.saturating_sub(b))
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.entries.iter().all(|&(v, m)| other.count(v) >= m)
    }

    /// The segment with exactly these members, if there is one.
    pub fn as_segment(&self) -> Option<Segment> {
        if self.is_empty() {
            return Some(Segment::EMPTY);
        }
        let contiguous = self.is_multiplicity_free()
            && self
                .entries
                .windows(2)
                .all(|w| w[0].0.twice() - w[1].0.twice() == 2);
        contiguous.then(|| Segment::new(self.min().unwrap(), self.entries.len()))
    }

    /// Split a multiplicity-free multiset into its maximal runs, largest first.
    pub fn maximal_segments(&self) -> Option<Vec<Segment>> {
        if !self.is_multiplicity_free() {
            return None;
        }
        let mut out: Vec<Segment> = Vec::new();
        for &(v, _) in &self.entries {
            match out.last_mut() {
                Some(seg) if seg.start() == v + 1 => *seg = Segment::new(v, seg.len() + 1),
                _ => out.push(Segment::new(v, 1)),
            }
        }
        Some(out)
    }
}

impl FromIterator<HalfInt> for HalfIntMultiset {
    fn from_iter<I: IntoIterator<Item = HalfInt>>(iter: I) -> Self {
        HalfIntMultiset::from_values(iter)
    }
}

impl fmt::Display for HalfIntMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (v, m)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            if *m == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}:{m}")?;
            }
        }
        write!(f, "}}")
    }
}

/// Result of [`mset_algebra`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultisetAlgebra {
    pub union: HalfIntMultiset,
    pub intersection: HalfIntMultiset,
    pub difference: HalfIntMultiset,
    pub b_mult_free: bool,
}

pub fn mset_algebra(a: &HalfIntMultiset, b: &HalfIntMultiset) -> MultisetAlgebra {
    MultisetAlgebra {
        union: a.union(b),
        intersection: a.intersection(b),
        difference: a.difference(b),
        b_mult_free: b.is_multiplicity_free(),
    }
}

/// Every way of writing `m` as a multiset union of segments.
///
/// Parts within a partition follow the canonical parameter order (larger
/// endpoint sum first, then longer first); partitions are sorted by the
/// sequence of `(start, len)` of their parts.
pub fn partition_into_segments(m: &HalfIntMultiset) -> Vec<Vec<Segment>> {
    let mut counts: Vec<(HalfInt, usize)> = m.entries().to_vec();
    let mut out = Vec::new();
    let mut current = Vec::new();
    peel(&mut counts, None, &mut current, &mut out);

    for parts in &mut out {
        parts.sort_by(|a, b| a.canonical_cmp(b));
    }
    out.sort_by_key(|parts| {
        parts
            .iter()
            .map(|s| (s.start().twice(), s.len()))
            .collect::<Vec<_>>()
    });
    out
}

/// Repeatedly remove a segment topped at the largest remaining value.
/// Segments sharing a top are generated in weakly decreasing length so each
/// partition appears once.
fn peel(
    counts: &mut [(HalfInt, usize)],
    prev: Option<(HalfInt, usize)>,
    current: &mut Vec<Segment>,
    out: &mut Vec<Vec<Segment>>,
) {
    let Some(top_idx) = counts.iter().position(|&(_, c)| c > 0) else {
        out.push(current.clone());
        return;
    };
    let top = counts[top_idx].0;
    let max_len = match prev {
        Some((prev_top, prev_len)) if prev_top == top => prev_len,
        _ => usize::MAX,
    };

    // Longest available run going down from `top`.
    let mut run = 0;
    while top_idx + run < counts.len()
        && counts[top_idx + run].1 > 0
        && counts[top_idx + run].0 == top - run as i64
    {
        run += 1;
    }

    for len in 1..=run.min(max_len) {
        for c in &mut counts[top_idx..top_idx + len] {
            c.1 -= 1;
        }
        current.push(Segment::new(top - (len as i64 - 1), len));
        peel(counts, Some((top, len)), current, out);
        current.pop();
        for c in &mut counts[top_idx..top_idx + len] {
            c.1 += 1;
        }
    }
}
