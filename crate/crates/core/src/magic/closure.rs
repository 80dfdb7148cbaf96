use std::collections::BTreeSet;
use std::fmt::Write;

use serde::Serialize;

use crate::hexagon::{Hexagon, PointPermutation};
use crate::hyperplanes::{classify, is_hyperplane, orbit_size, signature_of, HyperplaneCatalog, PointSet, Signature, TypeId};

/// Stage-by-stage completion of a point set along hexagon lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureTrace {
    /// `stages[0]` is the starting set; later stages hold the points added by
    /// each sweep.
    pub stages: Vec<PointSet>,
    pub final_set: PointSet,
    pub reached_hyperplane: bool,
    pub signature: Option<Signature>,
    pub full_lines: Option<usize>,
    /// Missing when the set is not a hyperplane, or when its signature is
    /// shared by two types and [`ClosureTrace::resolve_type`] has not run.
    pub type_id: Option<TypeId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureJson {
    pub stages: Vec<Vec<String>>,
    pub final_points: Vec<String>,
    pub point_count: usize,
    pub reached_hyperplane: bool,
    pub signature: Option<String>,
    pub full_lines: Option<usize>,
    pub deep_points: Option<Vec<String>>,
    #[serde(rename = "type")]
    pub type_id: Option<String>,
}

/// Fill colours per stage: start, then the three sweeps; later sweeps share
/// the last colour.
const STAGE_COLOURS: [&str; 4] = ["red", "blue", "yellow", "green"];

impl ClosureTrace {
    /// Assigns the type using the orbit size under `elements` when the
    /// signature alone is ambiguous.
    pub fn resolve_type(&mut self, elements: &[PointPermutation]) {
        if let (true, Some(sig), None) = (self.reached_hyperplane, self.signature, self.type_id) {
            self.type_id = classify(&sig, Some(orbit_size(self.final_set, elements))).ok();
        }
    }

    pub fn stage_of(&self, p: usize) -> Option<usize> {
        self.stages.iter().position(|s| s.contains(p))
    }

    pub fn to_json(&self, h: &Hexagon) -> ClosureJson {
        let deep = self
            .reached_hyperplane
            .then(|| crate::hyperplanes::Hyperplane::new(self.final_set, h))
            .flatten()
            .map(|hp| hp.deep_points(h).iter().map(|&p| h.point(p).to_string()).collect());
        ClosureJson {
            stages: self.stages.iter().map(|s| s.labels(h)).collect(),
            final_points: self.final_set.labels(h),
            point_count: self.final_set.len(),
            reached_hyperplane: self.reached_hyperplane,
            signature: self.signature.map(|s| s.to_string()),
            full_lines: self.full_lines,
            deep_points: deep,
            type_id: self.type_id.map(|t| t.to_string()),
        }
    }

    /// Collinearity graph with points coloured by closure stage.
    pub fn to_dot(&self, h: &Hexagon) -> String {
        let g = h.collinearity_graph();
        let mut out = String::from("graph closure {\n");
        for p in 0..g.vertex_count() {
            let colour = self
                .stage_of(p)
                .map_or("white", |s| STAGE_COLOURS[s.min(STAGE_COLOURS.len() - 1)]);
            writeln!(out, "  {p} [label=\"{}\", style=filled, fillcolor={colour}];", h.point(p)).unwrap();
        }
        for (l, line) in h.lines().iter().enumerate() {
            let inside = h.line_mask(l) & !self.final_set.0 == 0;
            let style = if inside { "bold" } else { "dotted" };
            for (i, &a) in line.iter().enumerate() {
                for &b in &line[i + 1..] {
                    writeln!(out, "  {a} -- {b} [style={style}];").unwrap();
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

fn third_points(present: u64, h: &Hexagon) -> u64 {
    let mut added = 0;
    for l in 0..h.lines().len() {
        let m = h.line_mask(l);
        if (m & present).count_ones() == 2 {
            added |= m & !present;
        }
    }
    added
}

/// Repeatedly adds the third point of every hexagon line that already holds
/// two marked points. Each sweep only looks at points marked before it, so
/// the stages mirror the successive rounds of completion.
pub fn closure(start: PointSet, h: &Hexagon) -> ClosureTrace {
    let mut stages = vec![start];
    let mut present = start.0;
    loop {
        let added = third_points(present, h);
        if added == 0 {
            break;
        }
        stages.push(PointSet(added));
        present |= added;
    }
    let final_set = PointSet(present);
    let reached = is_hyperplane(final_set, h);
    let (signature, full_lines) = if reached {
        let (s, f) = signature_of(final_set, h);
        (Some(s), Some(f))
    } else {
        (None, None)
    };
    ClosureTrace {
        stages,
        final_set,
        reached_hyperplane: reached,
        signature,
        full_lines,
        type_id: signature.and_then(|s| classify(&s, None).ok()),
    }
}

/// Same fixpoint as [`closure`], but updating in place while visiting lines
/// in `order` (hexagon-local indices), until nothing changes.
pub fn closure_in_order(start: PointSet, h: &Hexagon, order: &[usize]) -> PointSet {
    let mut present = start.0;
    loop {
        let before = present;
        for &l in order {
            let m = h.line_mask(l);
            if (m & present).count_ones() >= 2 {
                present |= m;
            }
        }
        if present == before {
            return PointSet(present);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Containment {
    /// Catalog indices of hyperplanes containing the set.
    pub hyperplanes: Vec<usize>,
    pub types: Vec<TypeId>,
    pub distinct_types: BTreeSet<TypeId>,
}

pub fn containing_hyperplanes(points: PointSet, catalog: &HyperplaneCatalog) -> Containment {
    let hyperplanes = catalog.containing(points);
    let types: Vec<TypeId> = hyperplanes.iter().map(|&i| catalog.type_of(i)).collect();
    Containment {
        distinct_types: types.iter().copied().collect(),
        hyperplanes,
        types,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magic::{builtin, BUILTIN_18_2_12_3, BUILTIN_2_4_14_2_4_3_6_4};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use std::sync::OnceLock;

    fn hex() -> &'static Hexagon {
        static H: OnceLock<Hexagon> = OnceLock::new();
        H.get_or_init(|| Hexagon::build().unwrap())
    }

    #[test]
    fn first_builtin_closes_to_v22() {
        let h = hex();
        let cfg = builtin(BUILTIN_18_2_12_3).unwrap();
        assert!(!is_hyperplane(cfg.support(), h));
        let t = closure(cfg.support(), h);
        assert!(t.reached_hyperplane);
        assert_eq!(t.final_set.len(), 37);
        assert_eq!(t.signature.unwrap().tuple(), (37, 0, 12, 15, 10));
        assert_eq!(t.type_id, Some(TypeId(22)));
        assert_eq!(t.full_lines, Some(24));
    }

    #[test]
    fn second_builtin_closes_to_v4() {
        let h = hex();
        let cfg = builtin(BUILTIN_2_4_14_2_4_3_6_4).unwrap();
        let t = closure(cfg.support(), h);
        assert!(t.reached_hyperplane);
        assert_eq!(t.final_set.len(), 49);
        assert_eq!(t.signature.unwrap().tuple(), (49, 0, 0, 21, 28));
        assert_eq!(t.type_id, Some(TypeId(4)));
    }

    #[test]
    fn stage_invariants() {
        let h = hex();
        for name in [BUILTIN_18_2_12_3, BUILTIN_2_4_14_2_4_3_6_4] {
            let t = closure(builtin(name).unwrap().support(), h);
            let mut seen = PointSet::default();
            for (i, s) in t.stages.iter().enumerate() {
                assert_eq!(seen.0 & s.0, 0, "stages overlap");
                if i > 0 {
                    for p in s.iter() {
                        let supported = h.lines_through(p).iter().any(|&l| {
                            (h.line_mask(l) & seen.0).count_ones() >= 2
                        });
                        assert!(supported, "{} added without support", h.point(p));
                    }
                }
                seen = seen.union(s);
            }
            assert_eq!(seen, t.final_set);
        }
    }

    #[test]
    fn single_point_is_fixed() {
        let h = hex();
        let t = closure(PointSet(1 << 17), h);
        assert_eq!(t.final_set, PointSet(1 << 17));
        assert_eq!(t.stages.len(), 1);
        assert!(!t.reached_hyperplane);
    }

    #[test]
    fn full_set_is_not_a_hyperplane() {
        let h = hex();
        let t = closure(PointSet::full(), h);
        assert!(!t.reached_hyperplane);
        assert_eq!(t.type_id, None);
    }

    #[test]
    fn sweep_order_does_not_matter() {
        let h = hex();
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let mut order: Vec<usize> = (0..h.lines().len()).collect();
        for name in [BUILTIN_18_2_12_3, BUILTIN_2_4_14_2_4_3_6_4] {
            let start = builtin(name).unwrap().support();
            let expected = closure(start, h).final_set;
            for _ in 0..100 {
                order.shuffle(&mut rng);
                assert_eq!(closure_in_order(start, h, &order), expected);
            }
        }
    }

    #[test]
    fn closure_is_monotone_and_idempotent() {
        let h = hex();
        let start = builtin(BUILTIN_18_2_12_3).unwrap().support();
        let once = closure(start, h).final_set;
        assert!(start.is_subset(&once));
        assert_eq!(closure(once, h).final_set, once);
        let smaller = PointSet(start.0 & (start.0 - 1));
        assert!(closure(smaller, h).final_set.is_subset(&once));
    }
}
