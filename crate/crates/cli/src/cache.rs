//! Optional on-disk cache of the hexagon and the hyperplane list, keyed by
//! the directory in `HEXMAGIC_CACHE`. Anything unreadable or inconsistent is
//! rebuilt; failing to write the cache only produces a warning.

use std::fs;
use std::path::PathBuf;

use hexmagic::hexagon::HexagonJson;
use hexmagic::hyperplanes::HYPERPLANE_COUNT;
use hexmagic::{Hexagon, Hyperplane, HyperplaneCatalog, PointPermutation, PointSet};

use crate::Failure;

const HEXAGON_FILE: &str = "hexagon.json";
const HYPERPLANE_FILE: &str = "hyperplanes.json";

fn dir() -> Option<PathBuf> {
    std::env::var_os("HEXMAGIC_CACHE").map(PathBuf::from)
}

fn read<T: serde::de::DeserializeOwned>(name: &str) -> Option<T> {
    let text = fs::read_to_string(dir()?.join(name)).ok()?;
    serde_json::from_str(&text).ok()
}

fn store<T: serde::Serialize>(name: &str, value: &T) {
    let Some(dir) = dir() else { return };
    let result = fs::create_dir_all(&dir).and_then(|_| {
        let text = serde_json::to_string(value).expect("cache values serialize");
        fs::write(dir.join(name), text)
    });
    if let Err(e) = result {
        eprintln!("warning: cannot write cache in {}: {e}", dir.display());
    }
}

pub fn hexagon() -> Result<Hexagon, Failure> {
    if let Some(h) = read::<HexagonJson>(HEXAGON_FILE)
        .and_then(|j| Hexagon::from_json(&j).ok())
        .filter(|h| h.validate().is_valid())
    {
        return Ok(h);
    }
    let h = Hexagon::build()?;
    store(HEXAGON_FILE, &h.to_json());
    Ok(h)
}

pub fn catalog(h: &Hexagon, generators: &[PointPermutation]) -> Result<HyperplaneCatalog, Failure> {
    let cached = read::<Vec<u64>>(HYPERPLANE_FILE).and_then(|masks| {
        if masks.len() != HYPERPLANE_COUNT || !masks.windows(2).all(|w| w[0] < w[1]) {
            return None;
        }
        masks.into_iter().map(|m| Hyperplane::new(PointSet(m), h)).collect::<Option<Vec<_>>>()
    });
    if let Some(hyperplanes) = cached {
        return Ok(HyperplaneCatalog::from_hyperplanes(hyperplanes, generators)?);
    }
    let catalog = HyperplaneCatalog::build(h, generators)?;
    let masks: Vec<u64> = catalog.hyperplanes().iter().map(|hp| hp.points.0).collect();
    store(HYPERPLANE_FILE, &masks);
    Ok(catalog)
}
