//! A named knot table and fingerprint-based identification.
//!
//! Records are read from JSON lines, `{"name":"8_18","pd":[[...],...]}`,
//! optionally with an `"aliases"` list. Fingerprints are computed on first
//! use and can be persisted to a sidecar file keyed by the SHA-256 of the
//! table text.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::Path;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::diagram::{Diagram, DiagramError};
use crate::invariants::{fingerprint, Fingerprint};

const BUNDLED: &str = include_str!("../data/knots.jsonl");

#[derive(Debug, Error)]
pub enum TableError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("record {name}: {source}")]
    InvalidPd { name: String, source: DiagramError },
    #[error("duplicate record name {0}")]
    DuplicateName(String),
    #[error("cache file: {0}")]
    Cache(String),
}

#[derive(Debug, Clone)]
pub struct KnotRecord {
    pub name: String,
    pub aliases: Vec<String>,
    pub pd: Vec<[u32; 4]>,
    pub diagram: Diagram,
}

impl KnotRecord {
    pub fn crossing_number(&self) -> usize {
        self.pd.len()
    }
}

#[derive(Deserialize)]
struct RawRecord {
    name: String,
    pd: Vec<Vec<i64>>,
    #[serde(default)]
    aliases: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    table_hash: String,
    fingerprints: BTreeMap<String, String>,
}

/// Result of looking a diagram up in the table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identification {
    pub name: String,
    /// More than one record shares the fingerprint.
    pub collision: bool,
    /// All matching names, in table order.
    pub candidates: Vec<String>,
}

#[derive(Debug)]
pub struct Table {
    records: Vec<KnotRecord>,
    hash: String,
    fingerprints: OnceLock<Vec<Fingerprint>>,
    index: OnceLock<HashMap<Fingerprint, Vec<usize>>>,
}

impl Table {
    /// The table shipped with the crate: prime knots through 11 crossings.
    pub fn bundled() -> &'static Table {
        static T: OnceLock<Table> = OnceLock::new();
        T.get_or_init(|| Table::from_jsonl(BUNDLED).expect("bundled table is valid"))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, TableError> {
        Self::from_jsonl(&fs::read_to_string(path)?)
    }

    pub fn from_jsonl(text: &str) -> Result<Self, TableError> {
        let mut records = Vec::new();
        let mut names = HashMap::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let raw: RawRecord = serde_json::from_str(line).map_err(|e| TableError::Parse {
                line: i + 1,
                message: e.to_string(),
            })?;
            let mut pd = Vec::with_capacity(raw.pd.len());
            for (k, x) in raw.pd.iter().enumerate() {
                if x.len() != 4 || x.iter().any(|&v| v <= 0 || v > u32::MAX as i64) {
                    return Err(TableError::Parse {
                        line: i + 1,
                        message: format!("crossing {} is not a 4-tuple of positive labels", k + 1),
                    });
                }
                pd.push([x[0] as u32, x[1] as u32, x[2] as u32, x[3] as u32]);
            }
            let diagram = Diagram::from_pd(&pd).map_err(|source| TableError::InvalidPd {
                name: raw.name.clone(),
                source,
            })?;
            if names.insert(raw.name.clone(), records.len()).is_some() {
                return Err(TableError::DuplicateName(raw.name));
            }
            records.push(KnotRecord {
                name: raw.name,
                aliases: raw.aliases,
                pd,
                diagram,
            });
        }
        let hash = format!("{:x}", Sha256::digest(text.as_bytes()));
        Ok(Table {
            records,
            hash,
            fingerprints: OnceLock::new(),
            index: OnceLock::new(),
        })
    }

    pub fn records(&self) -> &[KnotRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// SHA-256 of the table text, hex encoded.
    pub fn content_hash(&self) -> &str {
        &self.hash
    }

    /// Looks a record up by name or alias.
    pub fn get(&self, name: &str) -> Option<&KnotRecord> {
        self.records
            .iter()
            .find(|r| r.name == name || r.aliases.iter().any(|a| a == name))
    }

    pub fn fingerprints(&self) -> &[Fingerprint] {
        self.fingerprints.get_or_init(|| {
            self.records
                .par_iter()
                .map(|r| fingerprint(&r.diagram))
                .collect()
        })
    }

    pub fn fingerprint_of(&self, name: &str) -> Option<&Fingerprint> {
        let i = self.records.iter().position(|r| r.name == name)?;
        Some(&self.fingerprints()[i])
    }

    fn index(&self) -> &HashMap<Fingerprint, Vec<usize>> {
        self.index.get_or_init(|| {
            let mut m: HashMap<Fingerprint, Vec<usize>> = HashMap::new();
            for (i, f) in self.fingerprints().iter().enumerate() {
                m.entry(f.clone()).or_default().push(i);
            }
            m
        })
    }

    /// Fills the fingerprint cache from `path` when its hash matches this
    /// table, otherwise computes and writes it. Must be called before any
    /// other fingerprint access to have an effect.
    pub fn use_cache(&self, path: impl AsRef<Path>) -> Result<(), TableError> {
        let path = path.as_ref();
        if let Ok(text) = fs::read_to_string(path) {
            if let Ok(cache) = serde_json::from_str::<CacheFile>(&text) {
                if cache.table_hash == self.hash {
                    let fps: Option<Vec<Fingerprint>> = self
                        .records
                        .iter()
                        .map(|r| {
                            cache
                                .fingerprints
                                .get(&r.name)
                                .and_then(|s| serde_json::from_str(s).ok())
                        })
                        .collect();
                    if let Some(fps) = fps {
                        let _ = self.fingerprints.set(fps);
                        return Ok(());
                    }
                }
            }
        }
        let fingerprints = self
            .records
            .iter()
            .zip(self.fingerprints())
            .map(|(r, f)| {
                (
                    r.name.clone(),
                    serde_json::to_string(f).expect("fingerprint serializes"),
                )
            })
            .collect();
        let cache = CacheFile {
            table_hash: self.hash.clone(),
            fingerprints,
        };
        let text =
            serde_json::to_string_pretty(&cache).map_err(|e| TableError::Cache(e.to_string()))?;
        fs::write(path, text)?;
        Ok(())
    }

    /// Names whose fingerprint equals `fp`, in table order.
    pub fn lookup(&self, fp: &Fingerprint) -> Vec<&KnotRecord> {
        self.index()
            .get(fp)
            .map(|v| v.iter().map(|&i| &self.records[i]).collect())
            .unwrap_or_default()
    }

    pub fn identify_fingerprint(&self, fp: &Fingerprint) -> Option<Identification> {
        let hits = self.lookup(fp);
        let first = hits.first()?;
        Some(Identification {
            name: first.name.clone(),
            collision: hits.len() > 1,
            candidates: hits.iter().map(|r| r.name.clone()).collect(),
        })
    }

    pub fn identify(&self, d: &Diagram) -> Option<Identification> {
        self.identify_fingerprint(&fingerprint(d))
    }

    /// Fingerprint classes shared by two or more names, each sorted in
    /// table order; classes ordered by their first member.
    pub fn fingerprint_collisions(&self) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<usize>> = self
            .index()
            .values()
            .filter(|v| v.len() > 1)
            .cloned()
            .collect();
        out.sort();
        out.into_iter()
            .map(|v| {
                v.into_iter()
                    .map(|i| self.records[i].name.clone())
                    .collect()
            })
            .collect()
    }

    /// The sub-table of records with at most `c` crossings.
    pub fn up_to(&self, c: usize) -> Table {
        let text: String = self
            .records
            .iter()
            .filter(|r| r.crossing_number() <= c)
            .map(|r| {
                let mut v = serde_json::json!({"name": r.name, "pd": r.pd});
                if !r.aliases.is_empty() {
                    v["aliases"] = serde_json::json!(r.aliases);
                }
                v.to_string() + "\n"
            })
            .collect();
        Table::from_jsonl(&text).expect("sub-table of a valid table is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_file_is_empty_table() {
        let t = Table::from_jsonl("").unwrap();
        assert!(t.is_empty());
        assert!(t.fingerprint_collisions().is_empty());
    }

    #[test]
    fn three_tuple_is_a_parse_error_with_line() {
        let text = "{\"name\":\"3_1\",\"pd\":[[1,5,2,4],[3,1,4,6],[5,3,6,2]]}\n{\"name\":\"x\",\"pd\":[[1,2,3]]}\n";
        match Table::from_jsonl(text) {
            Err(TableError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn duplicated_record_collides() {
        let text = "{\"name\":\"a\",\"pd\":[[1,5,2,4],[3,1,4,6],[5,3,6,2]]}\n{\"name\":\"b\",\"pd\":[[1,5,2,4],[3,1,4,6],[5,3,6,2]]}\n";
        let t = Table::from_jsonl(text).unwrap();
        assert_eq!(
            t.fingerprint_collisions(),
            vec![vec!["a".to_string(), "b".to_string()]]
        );
        let id = t.identify(&t.records()[0].diagram).unwrap();
        assert!(id.collision);
        assert_eq!(id.candidates.len(), 2);
    }

    #[test]
    fn invalid_pd_names_the_record() {
        let text = "{\"name\":\"bad\",\"pd\":[[1,2,3,4],[1,2,3,5]]}\n";
        assert!(
            matches!(Table::from_jsonl(text), Err(TableError::InvalidPd { name, .. }) if name == "bad")
        );
    }
}
