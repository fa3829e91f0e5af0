//! On-disk fingerprint cache so censuses re-run cheaply. One JSON line per
//! graph, keyed by the full canonical bit-string (hex), which doubles as the
//! verification on hit; files are per vertex count and kind set.

use crate::canon::canonical_form;
use crate::charpoly::CharPoly;
use crate::ds::{census_row_from_classes, cospectral_classes_from_keys, CensusRow};
use crate::error::Result;
use crate::graph::Graph;
use crate::spectra::{fingerprint, MatrixKind, SpectralFingerprint};
use rayon::prelude::*;
use std::collections::HashMap;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

pub struct FingerprintCache {
    dir: PathBuf,
}

impl FingerprintCache {
    pub fn open(dir: &Path) -> Result<Self> {
        std::fs::create_dir_all(dir)?;
        Ok(FingerprintCache { dir: dir.to_path_buf() })
    }

    fn file_for(&self, n: usize, kinds: &[MatrixKind]) -> PathBuf {
        let tag: Vec<&str> = kinds.iter().map(|k| k.name()).collect();
        self.dir.join(format!("fp-n{n}-{}.jsonl", tag.join("_")))
    }

    pub fn load(&self, n: usize, kinds: &[MatrixKind]) -> Result<HashMap<String, SpectralFingerprint>> {
        let path = self.file_for(n, kinds);
        let mut map = HashMap::new();
        let Ok(file) = std::fs::File::open(&path) else {
            return Ok(map);
        };
        for line in std::io::BufReader::new(file).lines() {
            let line = line?;
            let Ok(value) = serde_json::from_str::<serde_json::Value>(&line) else {
                continue; // tolerate partial trailing lines from interrupted runs
            };
            let Some(canon) = value["canon"].as_str() else { continue };
            let Some(polys) = value["polys"].as_object() else { continue };
            let mut fp = SpectralFingerprint::new();
            let mut complete = true;
            for kind in kinds {
                let parsed = polys
                    .get(kind.name())
                    .and_then(|coeffs| coeffs.as_array())
                    .map(|coeffs| {
                        let strings: Vec<String> = coeffs
                            .iter()
                            .map(|c| c.as_str().unwrap_or_default().to_string())
                            .collect();
                        CharPoly::from_coeff_strings(&strings)
                    });
                match parsed {
                    Some(Ok(poly)) => {
                        fp.insert(*kind, poly);
                    }
                    _ => {
                        complete = false;
                        break;
                    }
                }
            }
            if complete {
                map.insert(canon.to_string(), fp);
            }
        }
        Ok(map)
    }

    pub fn append(
        &self,
        n: usize,
        kinds: &[MatrixKind],
        entries: &[(String, SpectralFingerprint)],
    ) -> Result<()> {
        if entries.is_empty() {
            return Ok(());
        }
        let path = self.file_for(n, kinds);
        let mut file = std::fs::OpenOptions::new().create(true).append(true).open(path)?;
        for (canon, fp) in entries {
            let mut polys = serde_json::Map::new();
            for (kind, poly) in fp {
                polys.insert(kind.name().into(), serde_json::json!(poly.coeff_strings()));
            }
            let line = serde_json::json!({ "canon": canon, "polys": polys });
            writeln!(file, "{line}")?;
        }
        Ok(())
    }
}

/// Census over pre-enumerated graphs with fingerprints served from the
/// cache where possible; misses are computed, appended, and merged. The
/// result is identical to the uncached census.
pub fn census_with_cache(
    n: usize,
    kinds: &[MatrixKind],
    graphs: &[Graph],
    cache: Option<&FingerprintCache>,
) -> Result<CensusRow> {
    let cached = match cache {
        Some(store) => store.load(n, kinds)?,
        None => HashMap::new(),
    };
    let keyed: Vec<(String, Option<SpectralFingerprint>)> = graphs
        .par_iter()
        .map(|g| {
            let canon = canonical_form(g).to_hex();
            match cached.get(&canon) {
                Some(fp) => (canon, Some(fp.clone())),
                None => (canon, None),
            }
        })
        .collect();
    let misses: Vec<usize> =
        keyed.iter().enumerate().filter(|(_, (_, fp))| fp.is_none()).map(|(i, _)| i).collect();
    // compute misses in checkpointed batches so an interrupted long census
    // resumes from the cache
    let mut computed: Vec<(usize, SpectralFingerprint)> = Vec::with_capacity(misses.len());
    for batch in misses.chunks(100_000) {
        let fresh: Vec<(usize, SpectralFingerprint)> =
            batch.par_iter().map(|&i| (i, fingerprint(&graphs[i], kinds))).collect();
        if let Some(store) = cache {
            let entries: Vec<(String, SpectralFingerprint)> =
                fresh.iter().map(|(i, fp)| (keyed[*i].0.clone(), fp.clone())).collect();
            store.append(n, kinds, &entries)?;
        }
        computed.extend(fresh);
    }
    let mut fps: Vec<Option<SpectralFingerprint>> =
        keyed.into_iter().map(|(_, fp)| fp).collect();
    for (i, fp) in computed {
        fps[i] = Some(fp);
    }
    let fps: Vec<SpectralFingerprint> = fps.into_iter().map(Option::unwrap).collect();
    let classes = cospectral_classes_from_keys(graphs, &fps);
    Ok(census_row_from_classes(n, kinds, &classes))
}
