use std::collections::BTreeSet;
use std::fmt::Write;

use hexmagic::hexagon::{automorphism_group, seed_lines, sigma_from_table, HexagonJson, ValidationReport};
use hexmagic::hyperplanes::{CensusRow, HYPERPLANE_COUNT};
use hexmagic::magic::{
    builtin, closure, containing_hyperplanes, is_magic, parity_shortcut, pentagram_census,
    validate_configuration, ConfigFile, ConfigReport, Witness, BUILTIN_18_2_12_3, BUILTIN_2_4_14_2_4_3_6_4,
};
use hexmagic::{Configuration, Hexagon, PointPermutation, TypeId};
use serde::Serialize;

use crate::{cache, Failure, Format, Outcome};

const GROUP_ORDER: usize = 12_096;
const MAGIC_PENTAGRAMS: usize = 12_096;
const TYPE_COUNT: usize = 25;

fn pick(requested: Option<Format>, allowed: &[Format], command: &str) -> Result<Format, Failure> {
    let f = requested.unwrap_or(allowed[0]);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Failure::Invalid(format!(
            "{command} does not support --format {}",
            format!("{f:?}").to_lowercase()
        )))
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct SeedReport {
    total: usize,
    contained: usize,
}

#[derive(Serialize)]
struct BuildJson {
    #[serde(flatten)]
    hexagon: HexagonJson,
    invariant_hexagons: usize,
    seed_lines: SeedReport,
    validation: ValidationReport,
}

pub fn build(fmt: Option<Format>) -> Result<Outcome, Failure> {
    let fmt = pick(fmt, &[Format::Json, Format::Text, Format::Dot], "build")?;
    let h = Hexagon::build()?;
    let report = h.validate();
    let seeds = seed_lines(h.space())?;
    let seed_report = SeedReport {
        total: seeds.len(),
        contained: seeds.iter().filter(|&&l| h.contains_line(l)).count(),
    };
    let body = match fmt {
        Format::Dot => h.incidence_dot(),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "lines: {}", report.line_count).unwrap();
            writeln!(s, "3 points per line: {}", report.points_per_line).unwrap();
            writeln!(s, "3 lines per point: {}", report.lines_per_point).unwrap();
            writeln!(s, "incidence girth: {}", opt(report.girth)).unwrap();
            writeln!(s, "incidence diameter: {}", opt(report.diameter)).unwrap();
            writeln!(s, "connected: {}", report.connected).unwrap();
            writeln!(s, "sigma order: {}", report.sigma_order).unwrap();
            writeln!(s, "sigma-invariant: {}", report.sigma_invariant).unwrap();
            writeln!(s, "sigma-invariant hexagons: {}", h.solutions_found()).unwrap();
            writeln!(s, "seed lines contained: {}/{}", seed_report.contained, seed_report.total).unwrap();
            for f in &report.failures {
                writeln!(s, "FAIL {f}").unwrap();
            }
            writeln!(s, "valid: {}", report.is_valid()).unwrap();
            s
        }
        _ => json(&BuildJson {
            hexagon: h.to_json(),
            invariant_hexagons: h.solutions_found(),
            seed_lines: seed_report,
            validation: report.clone(),
        }),
    };
    Ok(Outcome {
        body,
        passed: report.is_valid(),
    })
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "none".into(), |x| x.to_string())
}

#[derive(Serialize)]
struct CensusJson {
    rows: Vec<CensusRow>,
    total_expected: usize,
    total_found: usize,
    orbits: usize,
    all_match: bool,
}

#[derive(Serialize)]
struct ListedHyperplane {
    index: usize,
    #[serde(rename = "type")]
    type_id: String,
    signature: String,
    lines: usize,
    points: String,
}

pub fn hyperplanes(fmt: Option<Format>, list: bool) -> Result<Outcome, Failure> {
    let fmt = pick(fmt, &[Format::Csv, Format::Json, Format::Text], "hyperplanes")?;
    let h = cache::hexagon()?;
    let g = automorphism_group(&h);
    let catalog = cache::catalog(&h, g.generators())?;
    let rows = catalog.census();
    let found: usize = rows.iter().map(|r| r.copies_found).sum();
    let orbits = catalog.orbit_sizes().len();
    let all_match =
        rows.iter().all(|r| r.matches) && found == HYPERPLANE_COUNT && orbits == TYPE_COUNT;

    let body = if list {
        let listed: Vec<ListedHyperplane> = catalog
            .hyperplanes()
            .iter()
            .enumerate()
            .map(|(i, hp)| ListedHyperplane {
                index: i,
                type_id: catalog.type_of(i).to_string(),
                signature: hp.signature.to_string(),
                lines: hp.full_lines,
                points: hp.points.labels(&h).join(" "),
            })
            .collect();
        match fmt {
            Format::Json => json(&listed),
            Format::Text => listed
                .iter()
                .map(|l| format!("{:>5} {:<4} {} {}\n", l.index, l.type_id, l.signature, l.points))
                .collect(),
            _ => csv_string(&listed, None)?,
        }
    } else {
        match fmt {
            Format::Json => json(&CensusJson {
                rows,
                total_expected: HYPERPLANE_COUNT,
                total_found: found,
                orbits,
                all_match,
            }),
            Format::Text => {
                let mut s = format!(
                    "{:<5} {:<20} {:>5} {:>5} {:>8} {:>6}\n",
                    "type", "signature", "lines", "deep", "expected", "found"
                );
                for r in &rows {
                    let sig = format!("({};{},{},{},{})", r.n, r.n0, r.n1, r.n2, r.n3);
                    writeln!(
                        s,
                        "{:<5} {:<20} {:>5} {:>5} {:>8} {:>6}{}",
                        r.type_id,
                        sig,
                        r.lines,
                        r.deep,
                        r.copies_expected,
                        r.copies_found,
                        if r.matches { "" } else { "  MISMATCH" }
                    )
                    .unwrap();
                }
                writeln!(s, "total {:>43} {:>6}", HYPERPLANE_COUNT, found).unwrap();
                writeln!(s, "orbits: {orbits}").unwrap();
                s
            }
            _ => {
                let total = [
                    "total".to_string(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    HYPERPLANE_COUNT.to_string(),
                    found.to_string(),
                    all_match.to_string(),
                ];
                csv_string(&rows, Some(&total))?
            }
        }
    };
    Ok(Outcome { body, passed: all_match })
}

fn csv_string<T: Serialize>(rows: &[T], trailer: Option<&[String]>) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Failure::Io(e.to_string());
    for r in rows {
        w.serialize(r).map_err(io)?;
    }
    if let Some(t) = trailer {
        w.write_record(t).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

#[derive(Serialize)]
struct PentagramJson {
    contexts: Vec<Vec<String>>,
    signs: Vec<i8>,
}

#[derive(Serialize)]
struct PentagramReport {
    contexts_searched: usize,
    geometric: usize,
    magic: usize,
    expected_magic: usize,
    all_revalidated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pentagrams: Option<Vec<PentagramJson>>,
}

pub fn pentagrams(fmt: Option<Format>, list: bool) -> Result<Outcome, Failure> {
    let fmt = pick(fmt, &[Format::Json, Format::Csv, Format::Text], "pentagrams")?;
    let space = hexmagic::SymplecticSpace::build();
    let census = pentagram_census(&space);
    let all_revalidated = census.pentagrams.iter().all(|p| p.validate(&space) && p.is_magic());
    let passed = census.magic == MAGIC_PENTAGRAMS && all_revalidated;
    let listed = || -> Vec<PentagramJson> {
        census
            .pentagrams
            .iter()
            .map(|p| PentagramJson {
                contexts: p.labels(&space),
                signs: p.signs.to_vec(),
            })
            .collect()
    };
    let body = match fmt {
        Format::Csv => {
            let mut s = String::new();
            if list {
                s.push_str("c1,c2,c3,c4,c5,negative\n");
                for p in &census.pentagrams {
                    let ctx: Vec<String> = p.labels(&space).iter().map(|c| c.join(" ")).collect();
                    writeln!(s, "{},{}", ctx.join(","), p.negative_count()).unwrap();
                }
            } else {
                s.push_str("geometric,magic,expected_magic,all_revalidated\n");
                writeln!(s, "{},{},{},{}", census.geometric, census.magic, MAGIC_PENTAGRAMS, all_revalidated).unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "four-point contexts: {}", space.contexts4().len()).unwrap();
            writeln!(s, "pentagrams: {}", census.geometric).unwrap();
            writeln!(s, "magic pentagrams: {} (expected {MAGIC_PENTAGRAMS})", census.magic).unwrap();
            writeln!(s, "all re-validated: {all_revalidated}").unwrap();
            if list {
                for p in listed() {
                    let ctx: Vec<String> = p.contexts.iter().map(|c| c.join(" ")).collect();
                    writeln!(s, "{}", ctx.join(" | ")).unwrap();
                }
            }
            s
        }
        _ => json(&PentagramReport {
            contexts_searched: space.contexts4().len(),
            geometric: census.geometric,
            magic: census.magic,
            expected_magic: MAGIC_PENTAGRAMS,
            all_revalidated,
            pentagrams: list.then(listed),
        }),
    };
    Ok(Outcome { body, passed })
}

#[derive(Serialize)]
struct AutReport {
    order: usize,
    expected_order: usize,
    sigma_in_group: bool,
    point_orbits: usize,
    line_orbits: usize,
    generators: Vec<Vec<u8>>,
}

fn cycles(g: &PointPermutation, h: &Hexagon) -> String {
    let mut seen = [false; 63];
    let mut out = String::new();
    for start in 0..63 {
        if seen[start] || g.apply(start) == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            cycle.push(h.point(p).to_string());
            p = g.apply(p);
        }
        write!(out, "({})", cycle.join(" ")).unwrap();
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

pub fn aut(fmt: Option<Format>) -> Result<Outcome, Failure> {
    let fmt = pick(fmt, &[Format::Json, Format::Text], "aut")?;
    let h = cache::hexagon()?;
    let g = automorphism_group(&h);
    let sigma = PointPermutation::from_slice(&h.sigma().point_permutation())
        .ok_or_else(|| Failure::Invalid("σ is not a point permutation".into()))?;
    let report = AutReport {
        order: g.order(),
        expected_order: GROUP_ORDER,
        sigma_in_group: g.contains(&sigma),
        point_orbits: g.point_orbits().len(),
        line_orbits: g.line_orbits(&h).len(),
        generators: g.generators().iter().map(|p| p.0.to_vec()).collect(),
    };
    let passed = report.order == GROUP_ORDER && report.sigma_in_group;
    let body = match fmt {
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "order: {} (expected {GROUP_ORDER})", report.order).unwrap();
            writeln!(s, "sigma in group: {}", report.sigma_in_group).unwrap();
            writeln!(s, "point orbits: {}", report.point_orbits).unwrap();
            writeln!(s, "line orbits: {}", report.line_orbits).unwrap();
            for (i, gen) in g.generators().iter().enumerate() {
                writeln!(s, "g{}: {}", i + 1, cycles(gen, &h)).unwrap();
            }
            s
        }
        _ => json(&report),
    };
    Ok(Outcome { body, passed })
}

#[derive(Serialize)]
struct ContextJson {
    observables: Vec<String>,
    sign: i8,
}

#[derive(Serialize)]
struct VerifyReport {
    name: String,
    structure: ConfigReport,
    contexts: Vec<ContextJson>,
    negative_contexts: Vec<usize>,
    magic: bool,
    witness: Witness,
    witness_verified: bool,
    parity_shortcut: Option<bool>,
}

fn context_json(cfg: &Configuration) -> Vec<ContextJson> {
    cfg.contexts()
        .iter()
        .map(|c| ContextJson {
            observables: c.labels(),
            sign: c.sign(),
        })
        .collect()
}

fn structure(cfg: &Configuration) -> ConfigReport {
    let contexts: Vec<_> = cfg.contexts().iter().map(|c| c.observables().to_vec()).collect();
    validate_configuration(cfg.name(), &contexts)
}

pub fn verify(fmt: Option<Format>, cfg: &Configuration) -> Result<Outcome, Failure> {
    let fmt = pick(fmt, &[Format::Json, Format::Text], "config verify")?;
    let verdict = is_magic(cfg);
    let report = VerifyReport {
        name: cfg.name().to_string(),
        structure: structure(cfg),
        contexts: context_json(cfg),
        negative_contexts: cfg.negative_contexts(),
        magic: verdict.magic,
        witness_verified: verdict.verify(cfg),
        witness: verdict.witness,
        parity_shortcut: parity_shortcut(cfg),
    };
    let passed = report.structure.valid && report.magic && report.witness_verified;
    let body = match fmt {
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "configuration: {}", report.name).unwrap();
            for v in &report.structure.violations {
                writeln!(s, "violation: {v}").unwrap();
            }
            for (i, c) in report.contexts.iter().enumerate() {
                writeln!(s, "{i:>3} {:+} {{{}}}", c.sign, c.observables.join(", ")).unwrap();
            }
            writeln!(s, "negative contexts: {:?}", report.negative_contexts).unwrap();
            writeln!(s, "magic: {}", report.magic).unwrap();
            match &report.witness {
                Witness::Certificate(c) => writeln!(s, "certificate (contexts summing to 0 = 1): {c:?}"),
                Witness::Assignment(a) => {
                    let vals: Vec<String> = a.iter().map(|(o, v)| format!("{o}={v:+}")).collect();
                    writeln!(s, "assignment: {}", vals.join(" "))
                }
            }
            .unwrap();
            writeln!(s, "witness verified: {}", report.witness_verified).unwrap();
            s
        }
        _ => json(&report),
    };
    Ok(Outcome { body, passed })
}

/// The hyperplane type each built-in is known to close to.
fn expected_closure(cfg: &Configuration) -> Option<TypeId> {
    let is = |name: &str| cfg.name() == name && builtin(name).is_ok_and(|b| b == *cfg);
    if is(BUILTIN_18_2_12_3) {
        Some(TypeId(22))
    } else if is(BUILTIN_2_4_14_2_4_3_6_4) {
        Some(TypeId(4))
    } else {
        None
    }
}

#[derive(Serialize)]
struct CloseReport {
    name: String,
    #[serde(flatten)]
    trace: hexmagic::magic::ClosureJson,
}

pub fn close(fmt: Option<Format>, cfg: &Configuration) -> Result<Outcome, Failure> {
    let fmt = pick(fmt, &[Format::Json, Format::Dot, Format::Text], "config close")?;
    let h = cache::hexagon()?;
    let mut trace = closure(cfg.support(), &h);
    if trace.reached_hyperplane && trace.type_id.is_none() {
        trace.resolve_type(automorphism_group(&h).elements());
    }
    let passed = trace.reached_hyperplane
        && expected_closure(cfg).is_none_or(|t| trace.type_id == Some(t));
    let body = match fmt {
        Format::Dot => trace.to_dot(&h),
        Format::Text => {
            let j = trace.to_json(&h);
            let mut s = String::new();
            writeln!(s, "configuration: {}", cfg.name()).unwrap();
            for (i, st) in j.stages.iter().enumerate() {
                writeln!(s, "stage {i} (+{}): {}", st.len(), st.join(" ")).unwrap();
            }
            writeln!(s, "points: {}", j.point_count).unwrap();
            writeln!(s, "hyperplane: {}", j.reached_hyperplane).unwrap();
            if let Some(sig) = &j.signature {
                writeln!(s, "signature: {sig}").unwrap();
            }
            if let Some(l) = j.full_lines {
                writeln!(s, "full lines: {l}").unwrap();
            }
            if let Some(d) = &j.deep_points {
                writeln!(s, "deep points ({}): {}", d.len(), d.join(" ")).unwrap();
            }
            if let Some(t) = &j.type_id {
                writeln!(s, "type: {t}").unwrap();
            }
            s
        }
        _ => json(&CloseReport {
            name: cfg.name().to_string(),
            trace: trace.to_json(&h),
        }),
    };
    Ok(Outcome { body, passed })
}

#[derive(Serialize)]
struct ContainedIn {
    index: usize,
    #[serde(rename = "type")]
    type_id: String,
    signature: String,
    points: usize,
}

#[derive(Serialize)]
struct ContainReport {
    name: String,
    points: Vec<String>,
    count: usize,
    distinct_types: Vec<String>,
    hyperplanes: Vec<ContainedIn>,
}

pub fn contain(fmt: Option<Format>, cfg: &Configuration) -> Result<Outcome, Failure> {
    let fmt = pick(fmt, &[Format::Json, Format::Text], "config contain")?;
    let h = cache::hexagon()?;
    let g = automorphism_group(&h);
    let catalog = cache::catalog(&h, g.generators())?;
    let support = cfg.support();
    let found = containing_hyperplanes(support, &catalog);
    let types: BTreeSet<u8> = found.distinct_types.iter().map(|t| t.0).collect();
    let report = ContainReport {
        name: cfg.name().to_string(),
        points: support.labels(&h),
        count: found.hyperplanes.len(),
        distinct_types: types.iter().map(|t| format!("V{t}")).collect(),
        hyperplanes: found
            .hyperplanes
            .iter()
            .zip(&found.types)
            .map(|(&i, t)| {
                let hp = &catalog.hyperplanes()[i];
                ContainedIn {
                    index: i,
                    type_id: t.to_string(),
                    signature: hp.signature.to_string(),
                    points: hp.points.len(),
                }
            })
            .collect(),
    };
    // each built-in sits in exactly one hyperplane
    let passed = expected_closure(cfg).is_none() || report.count == 1;
    let body = match fmt {
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "configuration: {} ({} points)", report.name, report.points.len()).unwrap();
            writeln!(s, "containing hyperplanes: {}", report.count).unwrap();
            writeln!(s, "distinct types: {}", report.distinct_types.join(" ")).unwrap();
            for c in &report.hyperplanes {
                writeln!(s, "{:>5} {:<4} {}", c.index, c.type_id, c.signature).unwrap();
            }
            s
        }
        _ => json(&report),
    };
    Ok(Outcome { body, passed })
}

#[derive(Serialize)]
struct ReplicaReport {
    source: String,
    k: usize,
    configuration: ConfigFile,
    magic: bool,
    witness_verified: bool,
    source_magic: bool,
}

pub fn replicate(fmt: Option<Format>, cfg: &Configuration, k: usize) -> Result<Outcome, Failure> {
    let fmt = pick(fmt, &[Format::Json, Format::Text], "config replicate")?;
    let sigma = sigma_from_table()?;
    let image = hexmagic::magic::replicate(cfg, &sigma, k)?;
    let verdict = is_magic(&image);
    let report = ReplicaReport {
        source: cfg.name().to_string(),
        k,
        configuration: image.to_file(),
        magic: verdict.magic,
        witness_verified: verdict.verify(&image),
        source_magic: is_magic(cfg).magic,
    };
    let passed = report.witness_verified && report.magic == report.source_magic;
    let body = match fmt {
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "configuration: {}", image.name()).unwrap();
            for c in context_json(&image) {
                writeln!(s, "{:+} {{{}}}", c.sign, c.observables.join(", ")).unwrap();
            }
            writeln!(s, "magic: {}", report.magic).unwrap();
            s
        }
        _ => json(&report),
    };
    Ok(Outcome { body, passed })
}
