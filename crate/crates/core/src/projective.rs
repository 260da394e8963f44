//! Incidence geometry of PG(2,p): canonical points, duality, blocking
//! sets, minimalization, and the exact size-bound checks.
//!
//! Projective points are kept in canonical form (first nonzero coordinate
//! scaled to 1) so that set membership is representative-independent. The
//! origin of Z_p^3 is *not* a projective point; where it matters it is
//! tracked as a separate adjoined tag `O` (see `ProjSet::contains_o`).

use serde::{Deserialize, Serialize};

use crate::bits::Bitset;
use crate::error::{Error, Result};
use crate::group::{GroupPoint, GroupSet};
use crate::prime::Prime;

/// A point of PG(2,p) in canonical homogeneous coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    c: [u32; 3],
}

impl ProjPoint {
    /// Canonicalize arbitrary homogeneous coordinates (reduced mod p,
    /// scaled so the first nonzero coordinate is 1). All-zero input is
    /// rejected: O is not a projective point.
    pub fn new(p: Prime, coords: [i64; 3]) -> Result<Self> {
        let m = p.value() as i64;
        let c = coords.map(|x| x.rem_euclid(m) as u32);
        Self::canonicalize(p, c)
    }

    pub fn from_group(p: Prime, x: &GroupPoint) -> Result<Self> {
        Self::canonicalize(p, x.coords())
    }

    fn canonicalize(p: Prime, c: [u32; 3]) -> Result<Self> {
        let lead = c
            .iter()
            .position(|&x| x != 0)
            .ok_or(Error::ZeroProjectivePoint)?;
        let inv = p.inverse(c[lead]);
        Ok(ProjPoint {
            c: c.map(|x| x * inv % p.value()),
        })
    }

    pub fn coords(&self) -> [u32; 3] {
        self.c
    }

    /// Position in the lexicographic enumeration of canonical points:
    /// [0:0:1], [0:1:*], then [1:*:*].
    pub fn index(&self, p: Prime) -> usize {
        let q = p.us();
        let [a, b, c] = self.c.map(|x| x as usize);
        match (a, b) {
            (0, 0) => 0,
            (0, _) => 1 + c,
            _ => 1 + q + b * q + c,
        }
    }

    pub fn from_index(p: Prime, i: usize) -> Self {
        let q = p.us();
        debug_assert!(i < p.plane_order());
        let c = if i == 0 {
            [0, 0, 1]
        } else if i < 1 + q {
            [0, 1, (i - 1) as u32]
        } else {
            let r = i - 1 - q;
            [1, (r / q) as u32, (r % q) as u32]
        };
        ProjPoint { c }
    }

    /// Representatives of the punctured line through this point.
    pub fn line_members(&self, p: Prime) -> impl Iterator<Item = GroupPoint> + '_ {
        let gp = GroupPoint::new(p, self.c.map(|x| x as i64));
        (1..p.value()).map(move |l| gp.scale(l, p))
    }

    pub fn dot(&self, other: &ProjPoint, p: Prime) -> u32 {
        let m = p.value() as u64;
        let s: u64 = (0..3).map(|i| self.c[i] as u64 * other.c[i] as u64).sum();
        (s % m) as u32
    }
}

impl std::fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}:{}:{}]", self.c[0], self.c[1], self.c[2])
    }
}

/// Deterministic enumeration of all p^2 + p + 1 points.
pub fn enumerate_points(p: Prime) -> Vec<ProjPoint> {
    (0..p.plane_order())
        .map(|i| ProjPoint::from_index(p, i))
        .collect()
}

/// A projective line, stored as its dual point D and interpreted as the
/// incidence set D^perp = {[y] != O : <D, y> = 0}.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ProjLine {
    p: Prime,
    dual: ProjPoint,
}

impl ProjLine {
    pub fn dual(&self) -> ProjPoint {
        self.dual
    }

    pub fn contains(&self, q: &ProjPoint) -> bool {
        self.dual.dot(q, self.p) == 0
    }

    pub fn points(&self) -> Vec<ProjPoint> {
        enumerate_points(self.p)
            .into_iter()
            .filter(|q| self.contains(q))
            .collect()
    }
}

/// The line P^perp dual to a point.
pub fn dual_line(p: Prime, point: &ProjPoint) -> ProjLine {
    ProjLine { p, dual: *point }
}

/// The unique line through two distinct points (dual = cross product).
pub fn line_through(p: Prime, a: &ProjPoint, b: &ProjPoint) -> Result<ProjLine> {
    if a == b {
        return Err(Error::InvalidParameter("line through equal points".into()));
    }
    let m = p.value() as i64;
    let u = a.coords().map(|x| x as i64);
    let v = b.coords().map(|x| x as i64);
    let cross = [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
    .map(|x| x.rem_euclid(m));
    Ok(ProjLine {
        p,
        dual: ProjPoint::new(p, cross)?,
    })
}

/// Incidence masks: entry d is the bitset of point indices lying on the
/// line dual to point index d.
pub(crate) fn line_masks(p: Prime) -> Vec<Bitset> {
    let pts = enumerate_points(p);
    pts.iter()
        .map(|d| {
            let mut mask = Bitset::new(pts.len());
            for (i, q) in pts.iter().enumerate() {
                if d.dot(q, p) == 0 {
                    mask.set(i);
                }
            }
            mask
        })
        .collect()
}

/// A subset of PG(2,p), with the adjoined origin tracked separately.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjSet {
    p: Prime,
    bits: Bitset,
    contains_o: bool,
}

#[derive(Serialize, Deserialize)]
struct ProjSetJson {
    p: u32,
    points: Vec<[i64; 3]>,
    #[serde(rename = "contains_O", default)]
    contains_o: bool,
}

impl ProjSet {
    pub fn empty(p: Prime) -> Self {
        ProjSet {
            p,
            bits: Bitset::new(p.plane_order()),
            contains_o: false,
        }
    }

    pub fn full(p: Prime) -> Self {
        let mut s = ProjSet::empty(p);
        s.bits = s.bits.complement();
        s
    }

    pub fn from_points(p: Prime, points: impl IntoIterator<Item = ProjPoint>) -> Self {
        let mut s = ProjSet::empty(p);
        for q in points {
            s.insert(q);
        }
        s
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn insert(&mut self, q: ProjPoint) {
        self.bits.set(q.index(self.p));
    }

    pub fn remove(&mut self, q: ProjPoint) {
        self.bits.clear(q.index(self.p));
    }

    pub fn contains(&self, q: &ProjPoint) -> bool {
        self.bits.get(q.index(self.p))
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.bits.get(i)
    }

    pub fn contains_o(&self) -> bool {
        self.contains_o
    }

    pub fn set_contains_o(&mut self, flag: bool) {
        self.contains_o = flag;
    }

    /// Number of projective points (O is not counted).
    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Complement within PG(2,p); the O flag is left untouched.
    pub fn complement(&self) -> ProjSet {
        ProjSet {
            p: self.p,
            bits: self.bits.complement(),
            contains_o: self.contains_o,
        }
    }

    pub fn bits(&self) -> &Bitset {
        &self.bits
    }

    pub fn iter(&self) -> impl Iterator<Item = ProjPoint> + '_ {
        self.bits
            .iter_ones()
            .map(|i| ProjPoint::from_index(self.p, i))
    }

    /// Lift back to Z_p^3 as a union of punctured lines (plus the origin
    /// when the O flag is set).
    pub fn lift(&self) -> GroupSet {
        let mut s = GroupSet::empty(self.p);
        for q in self.iter() {
            for x in q.line_members(self.p) {
                s.insert(x);
            }
        }
        if self.contains_o {
            s.insert(GroupPoint::zero());
        }
        s
    }

    pub fn to_json(&self) -> String {
        let points = self
            .iter()
            .map(|q| q.coords().map(|c| c as i64))
            .collect::<Vec<_>>();
        serde_json::to_string_pretty(&ProjSetJson {
            p: self.p.value(),
            points,
            contains_o: self.contains_o,
        })
        .expect("serialization cannot fail")
    }

    /// Parse `{"p": 3, "points": [[1,0,0],[0,1,2]], "contains_O": false}`;
    /// points are canonicalized on ingest and duplicates collapse.
    pub fn from_json(s: &str) -> Result<ProjSet> {
        let raw: ProjSetJson = serde_json::from_str(s).map_err(|e| Error::BadSet(e.to_string()))?;
        let p = Prime::new(raw.p)?;
        let mut set = ProjSet::empty(p);
        for &c in &raw.points {
            set.insert(ProjPoint::new(p, c)?);
        }
        set.contains_o = raw.contains_o;
        Ok(set)
    }
}

impl std::fmt::Debug for ProjSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ProjSet(p={}, O={}, ", self.p, self.contains_o)?;
        f.debug_set().entries(self.iter()).finish()?;
        write!(f, ")")
    }
}

/// Collapse a union of lines through the origin to its set of projective
/// points; the origin membership moves into the O flag.
pub fn projectivize(d: &GroupSet) -> Result<ProjSet> {
    if !d.is_scaling_invariant() {
        return Err(Error::NotBalanced);
    }
    let p = d.prime();
    let mut s = ProjSet::empty(p);
    for x in d.iter() {
        if x.is_zero() {
            s.contains_o = true;
        } else {
            s.insert(ProjPoint::from_group(p, &x).expect("nonzero point"));
        }
    }
    Ok(s)
}

fn check_blocking_masks(bits: &Bitset, masks: &[Bitset], t: usize) -> bool {
    masks.iter().all(|m| {
        let hits = bits.intersection_count(m);
        hits >= t && hits < m.count_ones()
    })
}

/// True iff every projective line meets S in at least t points and S
/// contains no full line. S must not carry the O tag.
pub fn is_blocking(s: &ProjSet, t: u32) -> Result<bool> {
    if t < 1 {
        return Err(Error::InvalidParameter("t must be >= 1".into()));
    }
    if s.contains_o() {
        return Err(Error::OriginNotAllowed);
    }
    Ok(check_blocking_masks(
        s.bits(),
        &line_masks(s.prime()),
        t as usize,
    ))
}

/// Greedily shrink a t-fold blocking set until no single point can be
/// removed: scan points in canonical order, restart after each removal.
pub fn minimalize(s: &ProjSet, t: u32) -> Result<ProjSet> {
    if !is_blocking(s, t)? {
        return Err(Error::NotBlocking { t });
    }
    let masks = line_masks(s.prime());
    let mut cur = s.clone();
    'outer: loop {
        for i in 0..cur.bits.len() {
            if !cur.bits.get(i) {
                continue;
            }
            cur.bits.clear(i);
            if check_blocking_masks(&cur.bits, &masks, t as usize) {
                continue 'outer;
            }
            cur.bits.set(i);
        }
        return Ok(cur);
    }
}

/// Minimum cardinality of a t-fold blocking set, by exhaustion over all
/// subsets. Only feasible for p <= 3 (2^13 subsets).
pub fn min_blocking_size_bruteforce(p: Prime, t: u32) -> Result<Option<u32>> {
    if t < 1 {
        return Err(Error::InvalidParameter("t must be >= 1".into()));
    }
    if p.value() > 3 {
        return Err(Error::TooLarge(format!(
            "brute force over 2^{} subsets",
            p.plane_order()
        )));
    }
    let n = p.plane_order();
    let masks: Vec<u16> = line_masks(p)
        .iter()
        .map(|m| m.iter_ones().fold(0u16, |acc, i| acc | 1 << i))
        .collect();
    let mut best: Option<u32> = None;
    for s in 0u16..(1 << n) {
        let size = s.count_ones();
        if best.is_some_and(|b| size >= b) {
            continue;
        }
        let ok = masks.iter().all(|&m| {
            let hit = s & m;
            hit != 0 && hit != m && hit.count_ones() >= t
        });
        if ok {
            best = Some(size);
        }
    }
    Ok(best)
}

/// Check the classical size bounds for a blocking set S (assumed 1-fold
/// blocking): 3(p+1)/2 <= |S| <= p^2 - p/2 - 1/2, and for minimal S
/// additionally |S| < p*sqrt(p) + 1, evaluated as (|S|-1)^2 < p^3 to
/// avoid floating point.
pub fn verify_size_bounds(s: &ProjSet, minimal: bool) -> bool {
    let p = s.prime().value() as i64;
    let n = s.len() as i64;
    let lower = 3 * (p + 1) <= 2 * n;
    let upper = 2 * n < 2 * p * p - p;
    let min_ok = !minimal || (n - 1) * (n - 1) < p * p * p;
    lower && upper && min_ok
}
