//! Points and subsets of Z_p^3.
//!
//! A `GroupSet` is a flat indicator over all p^3 points, indexed by
//! `x1 + p*x2 + p^2*x3`; membership tests and exhaustive loops are O(1)
//! per point. All values are immutable once built and safe to share
//! across threads.

use serde::{Deserialize, Serialize};

use crate::bits::Bitset;
use crate::error::{Error, Result};
use crate::prime::Prime;

/// An element of Z_p^3 with each coordinate in [0, p).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupPoint {
    c: [u32; 3],
}

impl GroupPoint {
    /// Build from signed coordinates, reducing mod p.
    pub fn new(p: Prime, coords: [i64; 3]) -> Self {
        let m = p.value() as i64;
        GroupPoint {
            c: coords.map(|x| (x.rem_euclid(m)) as u32),
        }
    }

    pub fn zero() -> Self {
        GroupPoint { c: [0, 0, 0] }
    }

    pub fn coords(&self) -> [u32; 3] {
        self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c == [0, 0, 0]
    }

    pub fn index(&self, p: Prime) -> usize {
        let q = p.us();
        self.c[0] as usize + q * self.c[1] as usize + q * q * self.c[2] as usize
    }

    pub fn from_index(p: Prime, i: usize) -> Self {
        let q = p.us();
        debug_assert!(i < q * q * q);
        GroupPoint {
            c: [(i % q) as u32, (i / q % q) as u32, (i / (q * q)) as u32],
        }
    }

    pub fn add(&self, other: &GroupPoint, p: Prime) -> GroupPoint {
        let m = p.value();
        GroupPoint {
            c: [
                (self.c[0] + other.c[0]) % m,
                (self.c[1] + other.c[1]) % m,
                (self.c[2] + other.c[2]) % m,
            ],
        }
    }

    pub fn sub(&self, other: &GroupPoint, p: Prime) -> GroupPoint {
        let m = p.value();
        GroupPoint {
            c: [
                (self.c[0] + m - other.c[0]) % m,
                (self.c[1] + m - other.c[1]) % m,
                (self.c[2] + m - other.c[2]) % m,
            ],
        }
    }

    pub fn neg(&self, p: Prime) -> GroupPoint {
        GroupPoint::zero().sub(self, p)
    }

    pub fn scale(&self, lambda: u32, p: Prime) -> GroupPoint {
        let m = p.value();
        let l = lambda % m;
        GroupPoint {
            c: self.c.map(|x| x * l % m),
        }
    }

    /// <x, y> = x1*y1 + x2*y2 + x3*y3 mod p.
    pub fn dot(&self, other: &GroupPoint, p: Prime) -> u32 {
        let m = p.value() as u64;
        let s: u64 = (0..3).map(|i| self.c[i] as u64 * other.c[i] as u64).sum();
        (s % m) as u32
    }
}

impl std::fmt::Debug for GroupPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.c[0], self.c[1], self.c[2])
    }
}

/// A subset of Z_p^3, stored as a dense indicator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupSet {
    p: Prime,
    bits: Bitset,
}

#[derive(Serialize, Deserialize)]
struct GroupSetJson {
    p: u32,
    elements: Vec<[i64; 3]>,
}

impl GroupSet {
    pub fn empty(p: Prime) -> Self {
        GroupSet {
            p,
            bits: Bitset::new(p.group_order()),
        }
    }

    pub fn full(p: Prime) -> Self {
        GroupSet::empty(p).complement()
    }

    pub fn from_points(p: Prime, points: impl IntoIterator<Item = GroupPoint>) -> Self {
        let mut s = GroupSet::empty(p);
        for x in points {
            s.insert(x);
        }
        s
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn insert(&mut self, x: GroupPoint) {
        self.bits.set(x.index(self.p));
    }

    pub fn remove(&mut self, x: GroupPoint) {
        self.bits.clear(x.index(self.p));
    }

    pub fn contains(&self, x: &GroupPoint) -> bool {
        self.bits.get(x.index(self.p))
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.bits.get(i)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.p.group_order()
    }

    pub fn complement(&self) -> GroupSet {
        GroupSet {
            p: self.p,
            bits: self.bits.complement(),
        }
    }

    pub fn bits(&self) -> &Bitset {
        &self.bits
    }

    pub fn iter(&self) -> impl Iterator<Item = GroupPoint> + '_ {
        self.bits
            .iter_ones()
            .map(|i| GroupPoint::from_index(self.p, i))
    }

    pub fn translate(&self, g: &GroupPoint) -> GroupSet {
        GroupSet::from_points(self.p, self.iter().map(|x| x.add(g, self.p)))
    }

    /// {lambda * x : x in A}; lambda must be nonzero so this is a bijection.
    pub fn dilate(&self, lambda: u32) -> GroupSet {
        assert!(!lambda.is_multiple_of(self.p.value()), "dilation by zero");
        GroupSet::from_points(self.p, self.iter().map(|x| x.scale(lambda, self.p)))
    }

    /// True when A \ {0} is closed under scaling by every nonzero lambda,
    /// i.e. A is a union of punctured lines through the origin (plus
    /// possibly the origin itself).
    pub fn is_scaling_invariant(&self) -> bool {
        let p = self.p;
        self.iter()
            .filter(|x| !x.is_zero())
            .all(|x| (2..p.value()).all(|l| self.contains(&x.scale(l, p))))
    }

    pub fn to_json(&self) -> String {
        let elements = self
            .iter()
            .map(|x| x.coords().map(|c| c as i64))
            .collect::<Vec<_>>();
        serde_json::to_string_pretty(&GroupSetJson {
            p: self.p.value(),
            elements,
        })
        .expect("serialization cannot fail")
    }

    /// Parse `{"p": 3, "elements": [[0,0,0],[0,0,1], ...]}`; coordinates
    /// are reduced mod p on ingest and duplicates collapse.
    pub fn from_json(s: &str) -> Result<GroupSet> {
        let raw: GroupSetJson =
            serde_json::from_str(s).map_err(|e| Error::BadSet(e.to_string()))?;
        let p = Prime::new(raw.p)?;
        Ok(GroupSet::from_points(
            p,
            raw.elements.iter().map(|&c| GroupPoint::new(p, c)),
        ))
    }
}

impl std::fmt::Debug for GroupSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupSet(p={}, ", self.p)?;
        f.debug_set().entries(self.iter()).finish()?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Prime {
        Prime::new(3).unwrap()
    }

    #[test]
    fn point_arithmetic() {
        let p = p3();
        let a = GroupPoint::new(p, [1, 2, 0]);
        let b = GroupPoint::new(p, [2, 2, 1]);
        assert_eq!(a.add(&b, p), GroupPoint::new(p, [0, 1, 1]));
        assert_eq!(a.sub(&b, p), GroupPoint::new(p, [2, 0, 2]));
        assert_eq!(a.neg(p), GroupPoint::new(p, [2, 1, 0]));
        assert_eq!(a.dot(&b, p), (2 + 4) % 3);
        // reduction of negative input coordinates
        assert_eq!(
            GroupPoint::new(p, [-1, 4, -3]),
            GroupPoint::new(p, [2, 1, 0])
        );
    }

    #[test]
    fn index_round_trip() {
        let p = Prime::new(5).unwrap();
        for i in 0..p.group_order() {
            assert_eq!(GroupPoint::from_index(p, i).index(p), i);
        }
        // spec layout: x1 + p*x2 + p^2*x3
        assert_eq!(GroupPoint::new(p, [2, 1, 3]).index(p), 2 + 5 + 75);
    }

    #[test]
    fn set_basics() {
        let p = p3();
        let mut s = GroupSet::empty(p);
        assert!(s.is_empty());
        s.insert(GroupPoint::new(p, [0, 0, 1]));
        s.insert(GroupPoint::new(p, [0, 0, 1]));
        assert_eq!(s.len(), 1);
        let c = s.complement();
        assert_eq!(c.len(), 26);
        assert_eq!(c.complement(), s);
        assert!(GroupSet::full(p).is_full());
    }

    #[test]
    fn scaling_invariance() {
        let p = p3();
        // z-axis without origin is a punctured line
        let axis = GroupSet::from_points(p, [[0, 0, 1], [0, 0, 2]].map(|c| GroupPoint::new(p, c)));
        assert!(axis.is_scaling_invariant());
        let mut broken = axis.clone();
        broken.insert(GroupPoint::new(p, [1, 0, 0]));
        assert!(!broken.is_scaling_invariant());
    }

    #[test]
    fn json_round_trip() {
        let src = r#"{"p": 3, "elements": [[0,0,0],[0,0,1],[3,-1,4]]}"#;
        let s = GroupSet::from_json(src).unwrap();
        assert_eq!(s.len(), 3);
        assert!(s.contains(&GroupPoint::new(p3(), [0, 2, 1])));
        let back = GroupSet::from_json(&s.to_json()).unwrap();
        assert_eq!(back, s);
        assert!(GroupSet::from_json("{").is_err());
        assert!(GroupSet::from_json(r#"{"p": 4, "elements": []}"#).is_err());
    }
}
