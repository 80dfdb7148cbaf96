//! The split Cayley hexagon of order two as 63 of the 315 lines of W(5,2).
//!
//! The copy used here is the unique generalized hexagon inside W(5,2) that is
//! invariant under the order-seven map σ read off the replica tables in
//! [`crate::tables`]. [`Hexagon::build`] finds it by a backtracking search
//! over σ-orbits of lines.

mod automorphism;
mod search;

use serde::{Deserialize, Serialize};

use crate::geometry::{LinearMap, SymplecticSpace, POINT_COUNT};
use crate::graph::Graph;
use crate::pauli::{product_sign, GfVector};
use crate::tables;
use crate::{Error, Result};

pub use automorphism::{automorphism_group, AutomorphismGroup, PointPermutation};
pub use search::{find_invariant_hexagons, line_orbits};

pub const LINE_COUNT: usize = 63;

fn label(s: &str) -> GfVector {
    s.parse().expect("table labels are valid Pauli strings")
}

/// Builds σ from its six basis images and checks it against both replica
/// tables.
pub fn sigma_from_table() -> Result<LinearMap> {
    let sigma = LinearMap::from_basis_images(&tables::SIGMA_BASIS_IMAGES.map(label))
        .map_err(|e| Error::SigmaTable(e.to_string()))?;
    verify_sigma_tables(&sigma)?;
    Ok(sigma)
}

/// Checks that `sigma` is symplectic of order 7 and maps every table entry
/// to its right-hand neighbour (and the last column back to the first).
/// Returns the number of row transitions checked.
pub fn verify_sigma_tables(sigma: &LinearMap) -> Result<usize> {
    if !sigma.is_symplectic() {
        return Err(Error::SigmaTable("map is not symplectic".into()));
    }
    if sigma.order() != 7 {
        return Err(Error::SigmaTable(format!("order {} instead of 7", sigma.order())));
    }
    let mut checked = 0;
    let rows = tables::REPLICAS_18_2_12_3
        .iter()
        .chain(tables::REPLICAS_2_4_14_2_4_3_6_4.iter());
    for row in rows {
        for k in 0..7 {
            let (from, to) = (label(row[k]), label(row[(k + 1) % 7]));
            let got = sigma.apply(&from);
            if got != to {
                return Err(Error::SigmaTable(format!("σ({from}) = {got}, table says {to}")));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// The 3-element contexts of both built-in configurations as W(5,2) line
/// indices, deduplicated and sorted.
pub fn seed_lines(space: &SymplecticSpace) -> Result<Vec<usize>> {
    let triples = tables::CONFIG_18_2_12_3
        .iter()
        .chain(tables::CONFIG_2_4_14_2_4_3_6_4.iter())
        .filter(|c| c.len() == 3);
    let mut out = Vec::new();
    for t in triples {
        let idx: Vec<usize> = t
            .iter()
            .map(|s| space.point_index(&label(s)).expect("nonzero label"))
            .collect();
        let line = space
            .line_index([idx[0], idx[1], idx[2]])
            .ok_or_else(|| Error::NotALine(t.join(",")))?;
        out.push(line);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct Hexagon {
    space: SymplecticSpace,
    sigma: LinearMap,
    hex_lines: Vec<usize>,
    lines: Vec<[usize; 3]>,
    point_lines: Vec<[usize; 3]>,
    solutions: usize,
}

/// Serialized form: point labels, lines as point-index triples, σ basis images.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HexagonJson {
    pub points: Vec<String>,
    pub lines: Vec<[usize; 3]>,
    pub sigma: Vec<String>,
}

impl Hexagon {
    /// The σ-invariant hexagon, with σ taken from the replica tables.
    pub fn build() -> Result<Self> {
        Self::build_from(SymplecticSpace::build(), sigma_from_table()?, &[])
    }

    /// Searches for σ-invariant hexagons containing the σ-closure of `seeds`
    /// (W(5,2) line indices) and keeps the lexicographically least one.
    pub fn build_from(space: SymplecticSpace, sigma: LinearMap, seeds: &[usize]) -> Result<Self> {
        let solutions = find_invariant_hexagons(&space, &sigma, seeds)?;
        let count = solutions.len();
        let first = solutions.into_iter().next().ok_or(Error::NoHexagon)?;
        let mut hex = Self::from_lines(space, sigma, first)?;
        hex.solutions = count;
        Ok(hex)
    }

    /// Assembles a hexagon from W(5,2) line indices. Only the incidence
    /// bookkeeping is checked here; see [`Hexagon::validate`].
    pub fn from_lines(space: SymplecticSpace, sigma: LinearMap, mut hex_lines: Vec<usize>) -> Result<Self> {
        hex_lines.sort_unstable();
        hex_lines.dedup();
        let lines: Vec<[usize; 3]> = hex_lines.iter().map(|&l| space.lines()[l]).collect();
        let mut through = vec![Vec::new(); POINT_COUNT];
        for (i, l) in lines.iter().enumerate() {
            for &p in l {
                through[p].push(i);
            }
        }
        if lines.len() != LINE_COUNT || through.iter().any(|t| t.len() != 3) {
            return Err(Error::InvalidConfiguration(
                "hexagon needs 63 lines with 3 through every point".into(),
            ));
        }
        let point_lines = through.into_iter().map(|t| [t[0], t[1], t[2]]).collect();
        Ok(Self {
            space,
            sigma,
            hex_lines,
            lines,
            point_lines,
            solutions: 1,
        })
    }

    pub fn from_json(json: &HexagonJson) -> Result<Self> {
        let space = SymplecticSpace::build();
        if json.points != space.labels() {
            return Err(Error::InvalidConfiguration("point labels out of order".into()));
        }
        let images: Vec<GfVector> = json
            .sigma
            .iter()
            .map(|s| s.parse())
            .collect::<Result<_>>()?;
        let images: [GfVector; 6] = images
            .try_into()
            .map_err(|_| Error::InvalidConfiguration("σ needs six basis images".into()))?;
        let sigma = LinearMap::from_basis_images(&images)?;
        let mut idx = Vec::with_capacity(json.lines.len());
        for l in &json.lines {
            let mut t = *l;
            t.sort_unstable();
            if t.iter().any(|&p| p >= POINT_COUNT) {
                return Err(Error::InvalidConfiguration(format!("bad line {l:?}")));
            }
            idx.push(space.line_index(t).ok_or_else(|| Error::NotALine(format!("{l:?}")))?);
        }
        Self::from_lines(space, sigma, idx)
    }

    pub fn to_json(&self) -> HexagonJson {
        HexagonJson {
            points: self.space.labels(),
            lines: self.lines.clone(),
            sigma: self.sigma.basis_images().iter().map(ToString::to_string).collect(),
        }
    }

    pub fn space(&self) -> &SymplecticSpace {
        &self.space
    }

    pub fn sigma(&self) -> &LinearMap {
        &self.sigma
    }

    /// W(5,2) indices of the hexagon lines, sorted.
    pub fn hex_lines(&self) -> &[usize] {
        &self.hex_lines
    }

    /// Hexagon lines as point triples, in the order of [`Hexagon::hex_lines`].
    pub fn lines(&self) -> &[[usize; 3]] {
        &self.lines
    }

    /// Hexagon-local indices of the three lines through `p`.
    pub fn lines_through(&self, p: usize) -> [usize; 3] {
        self.point_lines[p]
    }

    /// Number of σ-invariant hexagons the search found.
    pub fn solutions_found(&self) -> usize {
        self.solutions
    }

    pub fn point(&self, p: usize) -> GfVector {
        self.space.point(p)
    }

    pub fn point_index(&self, v: &GfVector) -> Option<usize> {
        self.space.point_index(v)
    }

    pub fn line_mask(&self, l: usize) -> u64 {
        self.lines[l].iter().fold(0, |m, &p| m | 1 << p)
    }

    pub fn contains_line(&self, w52_line: usize) -> bool {
        self.hex_lines.binary_search(&w52_line).is_ok()
    }

    /// Bipartite point–line graph: vertices `0..63` are points, `63..126` lines.
    pub fn incidence_graph(&self) -> Graph {
        let mut g = Graph::new(POINT_COUNT + LINE_COUNT);
        for (i, l) in self.lines.iter().enumerate() {
            for &p in l {
                g.add_edge(p, POINT_COUNT + i);
            }
        }
        g
    }

    /// Points adjacent when they share a hexagon line.
    pub fn collinearity_graph(&self) -> Graph {
        let mut g = Graph::new(POINT_COUNT);
        for l in &self.lines {
            g.add_edge(l[0], l[1]);
            g.add_edge(l[0], l[2]);
            g.add_edge(l[1], l[2]);
        }
        g
    }

    pub fn incidence_dot(&self) -> String {
        let mut labels = self.space.labels();
        labels.extend((0..LINE_COUNT).map(|i| format!("L{i}")));
        self.incidence_graph().to_dot("incidence", &labels, None)
    }

    pub fn collinearity_dot(&self) -> String {
        self.collinearity_graph().to_dot("collinearity", &self.space.labels(), None)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport {
            line_count: self.lines.len(),
            lines_in_w52: self.hex_lines.iter().all(|&l| l < self.space.lines().len()),
            points_per_line: true,
            lines_per_point: true,
            girth: None,
            diameter: None,
            connected: false,
            sigma_invariant: false,
            sigma_order: self.sigma.order(),
            line_products_real: true,
            failures: Vec::new(),
        };
        if r.line_count != LINE_COUNT {
            r.failures.push(format!("{} lines instead of 63", r.line_count));
        }
        if !r.lines_in_w52 {
            r.failures.push("a line is not a W(5,2) line".into());
        }
        r.points_per_line = self
            .lines
            .iter()
            .all(|l| l[0] != l[1] && l[1] != l[2] && l[0] != l[2]);
        if !r.points_per_line {
            r.failures.push("a line does not have 3 distinct points".into());
        }
        let mut degree = [0usize; POINT_COUNT];
        for l in &self.lines {
            for &p in l {
                degree[p] += 1;
            }
        }
        r.lines_per_point = degree.iter().all(|&d| d == 3);
        if !r.lines_per_point {
            r.failures.push("some point is not on exactly 3 lines".into());
        }
        let g = self.incidence_graph();
        r.girth = g.girth();
        if r.girth != Some(12) {
            r.failures.push(format!("incidence girth {:?}, expected 12", r.girth));
        }
        r.connected = g.is_connected();
        if !r.connected {
            r.failures.push("incidence graph is disconnected".into());
        }
        r.diameter = g.diameter();
        if r.diameter != Some(6) {
            r.failures.push(format!("incidence diameter {:?}, expected 6", r.diameter));
        }
        let perm = self.sigma.point_permutation();
        r.sigma_invariant = self.lines.iter().all(|l| {
            let mut img = l.map(|p| perm[p]);
            img.sort_unstable();
            self.space
                .line_index(img)
                .is_some_and(|i| self.contains_line(i))
        });
        if !r.sigma_invariant {
            r.failures.push("σ does not preserve the line set".into());
        }
        if r.sigma_order != 7 {
            r.failures.push(format!("σ has order {}", r.sigma_order));
        }
        r.line_products_real = self.lines.iter().all(|l| {
            let ops: Vec<_> = l.iter().map(|&p| self.space.point(p).lift()).collect();
            product_sign(&ops).is_ok_and(|u| u.as_sign().is_some())
        });
        if !r.line_products_real {
            r.failures.push("a line's product is not ±identity".into());
        }
        r
    }
}

/// Outcome of the generalized-hexagon axiom checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub line_count: usize,
    pub lines_in_w52: bool,
    pub points_per_line: bool,
    pub lines_per_point: bool,
    pub girth: Option<usize>,
    pub diameter: Option<usize>,
    pub connected: bool,
    pub sigma_invariant: bool,
    pub sigma_order: usize,
    pub line_products_real: bool,
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
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

    fn v(s: &str) -> GfVector {
        s.parse().unwrap()
    }

    #[test]
    fn sigma_examples() {
        let s = sigma_from_table().unwrap();
        assert_eq!(s.apply(&v("XII")), v("XIX"));
        assert_eq!(s.apply(&v("XIX")), v("IXX"));
        assert_eq!(s.apply(&v("YYX")), v("XIZ"));
        assert_eq!(verify_sigma_tables(&s).unwrap(), (18 + 16) * 7);
    }

    #[test]
    fn wrong_sigma_is_rejected() {
        assert!(verify_sigma_tables(&LinearMap::identity()).is_err());
        let s = sigma_from_table().unwrap();
        assert!(verify_sigma_tables(&s.pow(2)).is_err());
    }

    #[test]
    fn seed_lines_are_w52_lines() {
        let space = SymplecticSpace::build();
        let seeds = seed_lines(&space).unwrap();
        assert_eq!(seeds.len(), 13);
        let has = |a: &str, b: &str, c: &str| {
            let idx = [a, b, c].map(|s| space.point_index(&v(s)).unwrap());
            let mut t = idx;
            t.sort_unstable();
            seeds.contains(&space.line_index(t).unwrap())
        };
        assert!(has("IZI", "ZZI", "ZII"));
        assert!(has("IZZ", "XYY", "XXX"));
        for &l in &seeds {
            let s = space.lines()[l]
                .iter()
                .fold(0u8, |acc, &p| acc ^ space.point(p).code3());
            assert_eq!(s, 0);
        }
    }

    #[test]
    fn seed_lines_contain_a_triangle() {
        // {IZI,ZZI,ZII}, {ZII,ZIZ,IIZ}, {IIZ,IZZ,IZI} pairwise meet in three
        // distinct points, so no generalized hexagon can hold all seeds.
        let space = SymplecticSpace::build();
        let seeds = seed_lines(&space).unwrap();
        let sigma = sigma_from_table().unwrap();
        assert!(matches!(
            find_invariant_hexagons(&space, &sigma, &seeds),
            Err(Error::NoHexagon)
        ));
        let mut g = Graph::new(POINT_COUNT + seeds.len());
        for (i, &l) in seeds.iter().enumerate() {
            for &p in &space.lines()[l] {
                g.add_edge(p, POINT_COUNT + i);
            }
        }
        assert_eq!(g.girth(), Some(6));
    }

    #[test]
    fn built_hexagon_is_valid_and_unique() {
        let h = hex();
        let report = h.validate();
        assert!(report.is_valid(), "{:?}", report.failures);
        assert_eq!(report.girth, Some(12));
        assert_eq!(report.diameter, Some(6));
        assert_eq!(h.solutions_found(), 1);
        assert_eq!(h.lines().len(), 63);
    }

    #[test]
    fn sigma_orbits_are_free() {
        let h = hex();
        let perm = h.sigma().point_permutation();
        for p in 0..POINT_COUNT {
            let mut q = perm[p];
            let mut len = 1;
            while q != p {
                q = perm[q];
                len += 1;
            }
            assert_eq!(len, 7);
        }
        let orbits = line_orbits(h.space(), h.sigma());
        assert_eq!(orbits.len(), 45);
        let hex_orbits = orbits
            .iter()
            .filter(|o| o.iter().all(|&l| h.contains_line(l)))
            .count();
        assert_eq!(hex_orbits, 9);
    }

    #[test]
    fn collinearity_graph_shape() {
        let h = hex();
        let g = h.collinearity_graph();
        assert_eq!(g.regular_degree(), Some(6));
        assert_eq!(g.edge_count(), 189);
        assert_eq!(g.diameter(), Some(3));
    }

    #[test]
    fn json_round_trip() {
        let h = hex();
        let json = h.to_json();
        let back = Hexagon::from_json(&json).unwrap();
        assert_eq!(back.hex_lines(), h.hex_lines());
        assert_eq!(back.sigma(), h.sigma());
        let mut bad = json.clone();
        bad.lines[0] = [0, 1, 2];
        assert!(Hexagon::from_json(&bad).is_err());
    }

    #[test]
    fn broken_hexagon_fails_validation() {
        let h = hex();
        let mut lines = h.hex_lines().to_vec();
        // replace one line by another line through the same point
        let first = h.space().lines()[lines[0]][0];
        let other = *h
            .space()
            .lines_through(first)
            .iter()
            .find(|l| !h.contains_line(**l))
            .unwrap();
        lines[0] = other;
        if let Ok(bad) = Hexagon::from_lines(h.space().clone(), *h.sigma(), lines) {
            assert!(!bad.validate().is_valid());
        }
    }
}
