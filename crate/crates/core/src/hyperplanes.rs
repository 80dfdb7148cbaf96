//! Geometric hyperplanes of the hexagon.
//!
//! A point set is a hyperplane when every hexagon line meets it in one or
//! three points. Equivalently its complement meets every line in zero or two
//! points, so complements are exactly the nonzero vectors of the kernel of
//! the 63×63 line–point incidence matrix over GF(2). That kernel has
//! dimension 14, giving 2^14 − 1 hyperplanes.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::geometry::POINT_COUNT;
use crate::gf2::{BitMatrix, BitVec};
use crate::graph::Graph;
use crate::hexagon::{Hexagon, PointPermutation};
use crate::tables::{TypeRecord, TYPE_TABLE};
use crate::{Error, Result};

pub const FULL: u64 = (1 << POINT_COUNT) - 1;
pub const HYPERPLANE_COUNT: usize = (1 << 14) - 1;

/// A set of hexagon points as a 63-bit mask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PointSet(pub u64);

impl PointSet {
    pub fn full() -> Self {
        Self(FULL)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, p: usize) -> bool {
        self.0 >> p & 1 == 1
    }

    pub fn insert(&mut self, p: usize) {
        self.0 |= 1 << p;
    }

    pub fn complement(&self) -> Self {
        Self(!self.0 & FULL)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(&self, other: &Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self(self.0 & !other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            (m != 0).then(|| {
                let p = m.trailing_zeros() as usize;
                m &= m - 1;
                p
            })
        })
    }

    /// Sorted point labels.
    pub fn labels(&self, h: &Hexagon) -> Vec<String> {
        self.iter().map(|p| h.point(p).to_string()).collect()
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PointSet::default();
        for p in iter {
            s.insert(p);
        }
        s
    }
}

/// `(n; n0, n1, n2, n3)`: point count and how many points lie on exactly
/// `s` fully contained lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    pub n: usize,
    pub n0: usize,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
}

impl Signature {
    pub fn tuple(&self) -> (usize, usize, usize, usize, usize) {
        (self.n, self.n0, self.n1, self.n2, self.n3)
    }

    pub fn deep_points(&self) -> usize {
        self.n3
    }
}

impl From<(usize, usize, usize, usize, usize)> for Signature {
    fn from((n, n0, n1, n2, n3): (usize, usize, usize, usize, usize)) -> Self {
        Self { n, n0, n1, n2, n3 }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{},{},{},{})", self.n, self.n0, self.n1, self.n2, self.n3)
    }
}

/// Frohardt–Johnson type `V_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypeId(pub u8);

impl TypeId {
    pub fn record(&self) -> &'static TypeRecord {
        TYPE_TABLE
            .iter()
            .find(|r| r.id == self.0)
            .expect("type ids come from the catalog")
    }
}

impl fmt::Display for TypeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    pub points: PointSet,
    pub signature: Signature,
    pub full_lines: usize,
}

impl Hyperplane {
    /// `None` unless `points` is a proper hyperplane.
    pub fn new(points: PointSet, h: &Hexagon) -> Option<Self> {
        is_hyperplane(points, h).then(|| {
            let (signature, full_lines) = signature_of(points, h);
            Self {
                points,
                signature,
                full_lines,
            }
        })
    }

    pub fn deep_points(&self, h: &Hexagon) -> Vec<usize> {
        self.points
            .iter()
            .filter(|&p| {
                h.lines_through(p)
                    .iter()
                    .all(|&l| h.line_mask(l) & !self.points.0 == 0)
            })
            .collect()
    }
}

/// Every line meets `points` in 1 or 3 points, and `points` is not everything.
pub fn is_hyperplane(points: PointSet, h: &Hexagon) -> bool {
    points.0 != FULL
        && (0..h.lines().len()).all(|l| {
            let k = (h.line_mask(l) & points.0).count_ones();
            k == 1 || k == 3
        })
}

/// Signature and number of fully contained lines. Assumes a hyperplane.
pub fn signature_of(points: PointSet, h: &Hexagon) -> (Signature, usize) {
    let mut on_full = [0usize; POINT_COUNT];
    let mut full_lines = 0;
    for (l, line) in h.lines().iter().enumerate() {
        if h.line_mask(l) & !points.0 == 0 {
            full_lines += 1;
            for &p in line {
                on_full[p] += 1;
            }
        }
    }
    let mut buckets = [0usize; 4];
    for p in points.iter() {
        buckets[on_full[p]] += 1;
    }
    let sig = Signature {
        n: points.len(),
        n0: buckets[0],
        n1: buckets[1],
        n2: buckets[2],
        n3: buckets[3],
    };
    (sig, full_lines)
}

/// Line–point incidence matrix (rows are hexagon lines).
pub fn incidence_matrix(h: &Hexagon) -> BitMatrix {
    let mut m = BitMatrix::zeros(h.lines().len(), POINT_COUNT);
    for (l, line) in h.lines().iter().enumerate() {
        for &p in line {
            m.set(l, p, true);
        }
    }
    m
}

/// All proper hyperplanes, sorted by point mask.
pub fn enumerate_hyperplanes(h: &Hexagon) -> Result<Vec<Hyperplane>> {
    let kernel: Vec<u64> = incidence_matrix(h)
        .kernel()
        .iter()
        .map(|v: &BitVec| v.words()[0])
        .collect();
    if kernel.len() != 14 {
        return Err(Error::Nullity(kernel.len()));
    }
    let mut complements = Vec::with_capacity(HYPERPLANE_COUNT);
    let mut acc = 0u64;
    // Gray-code walk over the nonzero kernel vectors
    for i in 1u32..(1 << kernel.len()) {
        acc ^= kernel[i.trailing_zeros() as usize];
        complements.push(acc);
    }
    let mut masks: Vec<u64> = complements.into_iter().map(|c| !c & FULL).collect();
    masks.sort_unstable();
    Ok(masks
        .into_par_iter()
        .map(|m| {
            let points = PointSet(m);
            let (signature, full_lines) = signature_of(points, h);
            Hyperplane {
                points,
                signature,
                full_lines,
            }
        })
        .collect())
}

/// Type of a hyperplane from its signature; the one signature shared by two
/// types is resolved by the size of its automorphism orbit.
pub fn classify(signature: &Signature, orbit_size: Option<usize>) -> Result<TypeId> {
    let matches: Vec<&TypeRecord> = TYPE_TABLE
        .iter()
        .filter(|r| r.signature == signature.tuple())
        .collect();
    match matches.as_slice() {
        [] => Err(Error::UnknownSignature(signature.to_string())),
        [one] => Ok(TypeId(one.id)),
        several => {
            let size = orbit_size.ok_or_else(|| Error::AmbiguousSignature(signature.to_string()))?;
            several
                .iter()
                .find(|r| r.copies == size)
                .map(|r| TypeId(r.id))
                .ok_or_else(|| Error::UnknownSignature(format!("{signature} with orbit size {size}")))
        }
    }
}

/// Size of the orbit of `points` under all of `elements`.
pub fn orbit_size(points: PointSet, elements: &[PointPermutation]) -> usize {
    let mut images: Vec<u64> = elements.iter().map(|g| g.apply_mask(points.0)).collect();
    images.sort_unstable();
    images.dedup();
    images.len()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Orbit label (least member index) of each hyperplane under the group
/// generated by `generators`. `hyperplanes` must be sorted by mask.
pub fn orbits(generators: &[PointPermutation], hyperplanes: &[Hyperplane]) -> Vec<usize> {
    let masks: Vec<u64> = hyperplanes.iter().map(|hp| hp.points.0).collect();
    let mut parent: Vec<usize> = (0..masks.len()).collect();
    for g in generators {
        let images: Vec<usize> = masks
            .par_iter()
            .map(|&m| {
                masks
                    .binary_search(&g.apply_mask(m))
                    .expect("automorphisms permute hyperplanes")
            })
            .collect();
        for (i, j) in images.into_iter().enumerate() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..masks.len()).map(|i| find(&mut parent, i)).collect()
}

/// Induced collinearity graph on the points outside `points`, vertices in
/// increasing point order.
pub fn complement_point_graph(points: PointSet, h: &Hexagon) -> Graph {
    let outside: Vec<usize> = points.complement().iter().collect();
    h.collinearity_graph().induced(&outside)
}

/// Number of collinear pairs among the deep points.
pub fn deep_collinear_pairs(hp: &Hyperplane, h: &Hexagon) -> usize {
    let deep = hp.deep_points(h);
    let g = h.collinearity_graph();
    let mut pairs = 0;
    for (i, &a) in deep.iter().enumerate() {
        pairs += deep[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count();
    }
    pairs
}

/// The 16 383 hyperplanes with their orbits and types.
#[derive(Clone, Debug)]
pub struct HyperplaneCatalog {
    hyperplanes: Vec<Hyperplane>,
    orbit_of: Vec<usize>,
    orbit_sizes: BTreeMap<usize, usize>,
    types: Vec<TypeId>,
}

/// One census line: a catalog type against what the enumeration found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    #[serde(rename = "type")]
    pub type_id: String,
    pub n: usize,
    pub n0: usize,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub lines: usize,
    pub deep: usize,
    pub copies_expected: usize,
    pub copies_found: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl HyperplaneCatalog {
    pub fn build(h: &Hexagon, generators: &[PointPermutation]) -> Result<Self> {
        let hyperplanes = enumerate_hyperplanes(h)?;
        Self::from_hyperplanes(hyperplanes, generators)
    }

    pub fn from_hyperplanes(hyperplanes: Vec<Hyperplane>, generators: &[PointPermutation]) -> Result<Self> {
        let orbit_of = orbits(generators, &hyperplanes);
        let mut orbit_sizes = BTreeMap::new();
        for &o in &orbit_of {
            *orbit_sizes.entry(o).or_insert(0) += 1;
        }
        let types = hyperplanes
            .iter()
            .zip(&orbit_of)
            .map(|(hp, o)| classify(&hp.signature, Some(orbit_sizes[o])))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            hyperplanes,
            orbit_of,
            orbit_sizes,
            types,
        })
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn type_of(&self, i: usize) -> TypeId {
        self.types[i]
    }

    pub fn orbit_of(&self, i: usize) -> usize {
        self.orbit_of[i]
    }

    /// Orbit label → orbit size.
    pub fn orbit_sizes(&self) -> &BTreeMap<usize, usize> {
        &self.orbit_sizes
    }

    pub fn find(&self, points: PointSet) -> Option<usize> {
        self.hyperplanes.binary_search_by_key(&points.0, |hp| hp.points.0).ok()
    }

    pub fn type_counts(&self) -> HashMap<TypeId, usize> {
        let mut counts = HashMap::new();
        for t in &self.types {
            *counts.entry(*t).or_insert(0) += 1;
        }
        counts
    }

    /// One row per catalog type, in the printed table order.
    pub fn census(&self) -> Vec<CensusRow> {
        let counts = self.type_counts();
        TYPE_TABLE
            .iter()
            .map(|r| {
                let found = counts.get(&TypeId(r.id)).copied().unwrap_or(0);
                let (n, n0, n1, n2, n3) = r.signature;
                // line and deep counts must agree for every member, not just the catalog row
                let members_ok = self
                    .hyperplanes
                    .iter()
                    .zip(&self.types)
                    .filter(|(_, t)| t.0 == r.id)
                    .all(|(hp, _)| hp.full_lines == r.lines && hp.signature.n3 == r.deep);
                CensusRow {
                    type_id: format!("V{}", r.id),
                    n,
                    n0,
                    n1,
                    n2,
                    n3,
                    lines: r.lines,
                    deep: r.deep,
                    copies_expected: r.copies,
                    copies_found: found,
                    matches: found == r.copies && members_ok,
                }
            })
            .collect()
    }

    /// Indices of hyperplanes containing `points`.
    pub fn containing(&self, points: PointSet) -> Vec<usize> {
        self.hyperplanes
            .iter()
            .enumerate()
            .filter(|(_, hp)| points.is_subset(&hp.points))
            .map(|(i, _)| i)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    fn hex() -> &'static Hexagon {
        static H: OnceLock<Hexagon> = OnceLock::new();
        H.get_or_init(|| Hexagon::build().unwrap())
    }

    #[test]
    fn point_set_ops() {
        let s: PointSet = [0, 5, 62].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert_eq!(s.iter().collect::<Vec<_>>(), [0, 5, 62]);
        assert_eq!(s.complement().len(), 60);
        assert!(PointSet(1).is_subset(&s));
        assert!(!s.is_subset(&PointSet(1)));
    }

    #[test]
    fn enumeration_counts() {
        let h = hex();
        assert_eq!(incidence_matrix(h).rank(), 49);
        let all = enumerate_hyperplanes(h).unwrap();
        assert_eq!(all.len(), HYPERPLANE_COUNT);
        for hp in all.iter().step_by(7) {
            assert!(is_hyperplane(hp.points, h));
            let s = hp.signature;
            assert_eq!(s.n0 + s.n1 + s.n2 + s.n3, s.n);
            assert_eq!(3 * hp.full_lines, s.n1 + 2 * s.n2 + 3 * s.n3);
            for l in 0..h.lines().len() {
                let k = (h.line_mask(l) & hp.points.complement().0).count_ones();
                assert!(k == 0 || k == 2);
            }
        }
    }

    #[test]
    fn trivial_non_hyperplanes() {
        let h = hex();
        assert!(!is_hyperplane(PointSet(0), h));
        assert!(!is_hyperplane(PointSet::full(), h));
        assert!(Hyperplane::new(PointSet(1), h).is_none());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&(21, 21, 0, 0, 0).into(), None).unwrap(), TypeId(2));
        assert_eq!(classify(&(45, 0, 0, 27, 18).into(), None).unwrap(), TypeId(5));
        let shared: Signature = (31, 4, 12, 12, 3).into();
        assert_eq!(classify(&shared, Some(2016)).unwrap(), TypeId(25));
        assert_eq!(classify(&shared, Some(1512)).unwrap(), TypeId(24));
        assert!(matches!(classify(&shared, None), Err(Error::AmbiguousSignature(_))));
        assert!(matches!(
            classify(&(30, 0, 0, 0, 30).into(), None),
            Err(Error::UnknownSignature(_))
        ));
    }

    #[test]
    fn complement_sizes() {
        let h = hex();
        let all = enumerate_hyperplanes(h).unwrap();
        let v2 = all.iter().find(|hp| hp.signature.n == 21).unwrap();
        assert_eq!(complement_point_graph(v2.points, h).vertex_count(), 42);
        let v4 = all.iter().find(|hp| hp.signature.n == 49).unwrap();
        let g = complement_point_graph(v4.points, h);
        assert_eq!(g.vertex_count(), 14);
        assert_eq!(g.regular_degree(), Some(3));
        assert!(g.is_bipartite());
        assert_eq!(g.girth(), Some(6));
    }
}
