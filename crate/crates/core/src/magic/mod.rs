//! Observable configurations: contexts of commuting three-qubit observables,
//! their signs, and Kochen–Specker ("magic") verification.
//!
//! A configuration is magic when no assignment of ±1 to its observables
//! reproduces every context's product sign. Writing each value as `(-1)^b`
//! turns this into a linear system over GF(2) with one equation per context,
//! `Σ b_p = [sign = −1]`, which [`is_magic`] solves by elimination.

mod closure;
mod pentagram;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::geometry::LinearMap;
use crate::gf2::{BitMatrix, BitVec, Solution};
use crate::hexagon::PointPermutation;
use crate::hyperplanes::PointSet;
use crate::pauli::{commute, product_sign, GfVector};
use crate::tables;
use crate::{Error, Result};

pub use closure::{closure, closure_in_order, containing_hyperplanes, ClosureJson, ClosureTrace, Containment};
pub use pentagram::{pentagram_census, Pentagram, PentagramCensus};

pub const BUILTIN_18_2_12_3: &str = "18_2-12_3";
pub const BUILTIN_2_4_14_2_4_3_6_4: &str = "2_4 14_2-4_3 6_4";

/// A set of pairwise commuting observables whose product is ±identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Context {
    observables: Vec<GfVector>,
    sign: i8,
}

impl Context {
    pub fn new(observables: Vec<GfVector>) -> Result<Self> {
        if observables.len() < 2 {
            return Err(Error::InvalidConfiguration("a context needs at least two observables".into()));
        }
        for (i, a) in observables.iter().enumerate() {
            if a.is_zero() {
                return Err(Error::InvalidConfiguration("identity is not an observable here".into()));
            }
            for b in &observables[i + 1..] {
                if a == b {
                    return Err(Error::InvalidConfiguration(format!("{a} repeated in a context")));
                }
                if !commute(a, b)? {
                    return Err(Error::NonCommuting(a.to_string(), b.to_string()));
                }
            }
        }
        let sign = context_sign(&observables)?;
        Ok(Self { observables, sign })
    }

    pub fn observables(&self) -> &[GfVector] {
        &self.observables
    }

    /// `+1` or `−1`.
    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn labels(&self) -> Vec<String> {
        self.observables.iter().map(ToString::to_string).collect()
    }
}

/// Product sign of commuting observables, each read literally (`Y = iXZ`).
pub fn context_sign(observables: &[GfVector]) -> Result<i8> {
    let lifts: Vec<_> = observables.iter().map(GfVector::lift).collect();
    let unit = product_sign(&lifts)?;
    unit.as_sign().ok_or_else(|| {
        Error::InvalidConfiguration(format!("product is {unit} times the identity"))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    name: String,
    contexts: Vec<Context>,
}

/// On-disk configuration: observables are unsigned Pauli strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigFile {
    pub name: String,
    pub contexts: Vec<Vec<String>>,
}

impl Configuration {
    pub fn new(name: impl Into<String>, contexts: Vec<Vec<GfVector>>) -> Result<Self> {
        if contexts.is_empty() {
            return Err(Error::InvalidConfiguration("no contexts".into()));
        }
        if let Some(v) = contexts.iter().flatten().find(|v| v.qubits() != 3) {
            return Err(Error::InvalidConfiguration(format!("{v} is not a three-qubit observable")));
        }
        let contexts = contexts.into_iter().map(Context::new).collect::<Result<Vec<_>>>()?;
        Ok(Self {
            name: name.into(),
            contexts,
        })
    }

    pub fn from_file(file: &ConfigFile) -> Result<Self> {
        Self::new(file.name.clone(), parse_contexts(&file.contexts)?)
    }

    pub fn to_file(&self) -> ConfigFile {
        ConfigFile {
            name: self.name.clone(),
            contexts: self.contexts.iter().map(Context::labels).collect(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn contexts(&self) -> &[Context] {
        &self.contexts
    }

    /// Distinct observables, sorted.
    pub fn points(&self) -> Vec<GfVector> {
        let set: BTreeSet<GfVector> = self.contexts.iter().flat_map(|c| c.observables.iter().copied()).collect();
        set.into_iter().collect()
    }

    /// Observables as hexagon point indices.
    pub fn support(&self) -> PointSet {
        self.points().iter().map(|v| v.code3() as usize - 1).collect()
    }

    pub fn negative_contexts(&self) -> Vec<usize> {
        (0..self.contexts.len()).filter(|&i| self.contexts[i].sign < 0).collect()
    }

    /// Number of contexts through each observable.
    pub fn incidences(&self) -> BTreeMap<GfVector, usize> {
        let mut m = BTreeMap::new();
        for o in self.contexts.iter().flat_map(|c| &c.observables) {
            *m.entry(*o).or_insert(0) += 1;
        }
        m
    }

    /// `contexts per point → number of points`.
    pub fn point_profile(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for c in self.incidences().values() {
            *m.entry(*c).or_insert(0) += 1;
        }
        m
    }

    /// `context size → number of contexts`.
    pub fn context_profile(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for c in &self.contexts {
            *m.entry(c.observables.len()).or_insert(0) += 1;
        }
        m
    }

    /// Image under a linear map, signs recomputed.
    pub fn map(&self, name: impl Into<String>, m: &LinearMap) -> Result<Self> {
        let contexts = self
            .contexts
            .iter()
            .map(|c| c.observables.iter().map(|v| m.apply(v)).collect())
            .collect();
        Self::new(name, contexts)
    }

    /// Image under a hexagon point permutation, signs recomputed.
    pub fn permute(&self, name: impl Into<String>, g: &PointPermutation) -> Result<Self> {
        let contexts = self
            .contexts
            .iter()
            .map(|c| {
                c.observables
                    .iter()
                    .map(|v| GfVector::from_code3(g.apply(v.code3() as usize - 1) as u8 + 1))
                    .collect()
            })
            .collect();
        Self::new(name, contexts)
    }
}

fn parse_contexts(raw: &[Vec<String>]) -> Result<Vec<Vec<GfVector>>> {
    raw.iter()
        .map(|c| c.iter().map(|s| s.parse::<GfVector>()).collect())
        .collect()
}

fn table_contexts(table: &[&[&str]]) -> Vec<Vec<GfVector>> {
    table
        .iter()
        .map(|c| c.iter().map(|s| s.parse().expect("valid label")).collect())
        .collect()
}

pub fn builtin_names() -> [&'static str; 2] {
    [BUILTIN_18_2_12_3, BUILTIN_2_4_14_2_4_3_6_4]
}

pub fn builtin(name: &str) -> Result<Configuration> {
    let table = match name {
        BUILTIN_18_2_12_3 => tables::CONFIG_18_2_12_3,
        BUILTIN_2_4_14_2_4_3_6_4 => tables::CONFIG_2_4_14_2_4_3_6_4,
        other => return Err(Error::UnknownBuiltin(other.to_string())),
    };
    Configuration::new(name, table_contexts(table))
}

fn replica_table(name: &str) -> Option<&'static [[&'static str; 7]]> {
    match name {
        BUILTIN_18_2_12_3 => Some(&tables::REPLICAS_18_2_12_3),
        BUILTIN_2_4_14_2_4_3_6_4 => Some(&tables::REPLICAS_2_4_14_2_4_3_6_4),
        _ => None,
    }
}

/// Applies `sigma^k` to every observable. For the built-ins each image is
/// checked against column `k` of the replica tables.
pub fn replicate(cfg: &Configuration, sigma: &LinearMap, k: usize) -> Result<Configuration> {
    if k > 6 {
        return Err(Error::ReplicaPower(k));
    }
    let power = sigma.pow(k);
    let is_builtin = builtin(cfg.name()).is_ok_and(|b| b == *cfg);
    if let (true, Some(table)) = (is_builtin, replica_table(cfg.name())) {
        for row in table {
            let from: GfVector = row[0].parse()?;
            let got = power.apply(&from);
            if got.to_string() != row[k] {
                return Err(Error::ReplicaMismatch(format!(
                    "σ^{k}({from}) = {got}, table column has {}",
                    row[k]
                )));
            }
        }
    }
    if k == 0 {
        return Ok(cfg.clone());
    }
    cfg.map(format!("{} σ^{k}", cfg.name()), &power)
}

/// How a configuration fails (or passes) its structural checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConfigReport {
    pub valid: bool,
    pub violations: Vec<String>,
    /// contexts per point → number of points
    pub point_profile: BTreeMap<usize, usize>,
    /// context size → number of contexts
    pub context_profile: BTreeMap<usize, usize>,
    /// Whether the profiles agree with the `a_b … - c_d …` symbol in the name.
    pub symbol_matches: Option<bool>,
}

type Profile = BTreeMap<usize, usize>;

/// Reads `"2_4 14_2-4_3 6_4"` as point profile `{4: 2, 2: 14}` and context
/// profile `{3: 4, 4: 6}`.
pub fn parse_symbol(name: &str) -> Option<(Profile, Profile)> {
    let (left, right) = name.split_once('-')?;
    let side = |s: &str| -> Option<Profile> {
        let mut m = BTreeMap::new();
        for tok in s.split_whitespace() {
            let (count, each) = tok.split_once('_')?;
            *m.entry(each.parse().ok()?).or_insert(0) += count.parse::<usize>().ok()?;
        }
        (!m.is_empty()).then_some(m)
    };
    Some((side(left)?, side(right)?))
}

/// Checks every context and reports the incidence profile.
pub fn validate_configuration(name: &str, contexts: &[Vec<GfVector>]) -> ConfigReport {
    let mut report = ConfigReport::default();
    for (i, c) in contexts.iter().enumerate() {
        if let Some(v) = c.iter().find(|v| v.qubits() != 3) {
            report.violations.push(format!("context {i}: {v} is not a three-qubit observable"));
            continue;
        }
        for (j, a) in c.iter().enumerate() {
            for b in &c[j + 1..] {
                if !commute(a, b).unwrap_or(false) {
                    report.violations.push(format!("context {i}: non-commuting pair {a}, {b}"));
                }
            }
        }
        if let Err(e) = Context::new(c.clone()) {
            if !matches!(e, Error::NonCommuting(..)) {
                report.violations.push(format!("context {i}: {e}"));
            }
        }
    }
    let mut incid: BTreeMap<GfVector, usize> = BTreeMap::new();
    for v in contexts.iter().flatten() {
        *incid.entry(*v).or_insert(0) += 1;
    }
    for c in incid.values() {
        *report.point_profile.entry(*c).or_insert(0) += 1;
    }
    for c in contexts {
        *report.context_profile.entry(c.len()).or_insert(0) += 1;
    }
    report.symbol_matches =
        parse_symbol(name).map(|(pts, ctx)| pts == report.point_profile && ctx == report.context_profile);
    if report.symbol_matches == Some(false) {
        report.violations.push(format!("incidence profile does not match the symbol {name:?}"));
    }
    report.valid = report.violations.is_empty();
    report
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// A consistent ±1 value per observable.
    Assignment(Vec<(String, i8)>),
    /// Contexts whose equations add up to `0 = 1`.
    Certificate(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MagicVerdict {
    pub magic: bool,
    pub witness: Witness,
}

impl MagicVerdict {
    /// Re-checks the witness against `cfg`.
    pub fn verify(&self, cfg: &Configuration) -> bool {
        match &self.witness {
            Witness::Certificate(ctxs) => {
                let mut parity: BTreeMap<GfVector, usize> = BTreeMap::new();
                let mut negatives = 0;
                for &i in ctxs {
                    let Some(c) = cfg.contexts.get(i) else { return false };
                    for o in &c.observables {
                        *parity.entry(*o).or_insert(0) += 1;
                    }
                    negatives += usize::from(c.sign < 0);
                }
                self.magic && parity.values().all(|c| c % 2 == 0) && negatives % 2 == 1
            }
            Witness::Assignment(values) => {
                let lookup: BTreeMap<&str, i8> = values.iter().map(|(k, v)| (k.as_str(), *v)).collect();
                !self.magic
                    && cfg.contexts.iter().all(|c| {
                        c.observables
                            .iter()
                            .map(|o| lookup.get(o.to_string().as_str()).copied().unwrap_or(0))
                            .product::<i8>()
                            == c.sign
                    })
            }
        }
    }
}

pub fn is_magic(cfg: &Configuration) -> MagicVerdict {
    let points = cfg.points();
    let index: BTreeMap<GfVector, usize> = points.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let rows: Vec<BitVec> = cfg
        .contexts
        .iter()
        .map(|c| {
            let mut r = BitVec::zeros(points.len());
            for o in &c.observables {
                r.flip(index[o]);
            }
            r
        })
        .collect();
    let mut rhs = BitVec::zeros(cfg.contexts.len());
    for i in cfg.negative_contexts() {
        rhs.set(i, true);
    }
    match BitMatrix::from_rows(points.len(), rows).solve(&rhs) {
        Solution::Inconsistent(cert) => MagicVerdict {
            magic: true,
            witness: Witness::Certificate(cert.ones().collect()),
        },
        Solution::Consistent(x) => MagicVerdict {
            magic: false,
            witness: Witness::Assignment(
                points
                    .iter()
                    .enumerate()
                    .map(|(i, p)| (p.to_string(), if x.get(i) { -1 } else { 1 }))
                    .collect(),
            ),
        },
    }
}

/// When every observable lies in an even number of contexts the configuration
/// is magic exactly when an odd number of contexts are negative; otherwise
/// `None`.
pub fn parity_shortcut(cfg: &Configuration) -> Option<bool> {
    cfg.incidences()
        .values()
        .all(|c| c % 2 == 0)
        .then(|| cfg.negative_contexts().len() % 2 == 1)
}
