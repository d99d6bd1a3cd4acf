//! On-disk cache of built groups, one JSON file per canonical spec string.
//!
//! The cache only stores multiplication tables; every derived result is
//! recomputed. A missing, unreadable or mismatched file is a miss.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::spec::GroupSpec;
use super::{CliError, SCHEMA};
use crate::group::{AssociativityCheck, FiniteGroup, Generator};

/// Groups above this order are never written.
pub const MAX_CACHED_ORDER: usize = 512;

pub const CACHE_ENV: &str = "ENGEL_LAB_CACHE";

#[derive(Debug, Serialize, Deserialize)]
struct CachedGenerator {
    name: String,
    index: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct CachedGroup {
    schema: String,
    label: String,
    order: usize,
    generators: Vec<CachedGenerator>,
    table: Vec<u32>,
    elements: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct GroupCache {
    dir: Option<PathBuf>,
}

impl GroupCache {
    pub fn disabled() -> Self {
        Self { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Self { dir: Some(dir.into()) }
    }

    /// `$ENGEL_LAB_CACHE`, or `engel-lab` under the system temp directory.
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_ENV) {
            Some(dir) if !dir.is_empty() => Self::at(dir),
            _ => Self::at(std::env::temp_dir().join("engel-lab")),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn path_for(&self, spec: &GroupSpec) -> Option<PathBuf> {
        let name: String = spec
            .to_string()
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() || c == '(' || c == ')' { c } else { '_' })
            .collect();
        self.dir.as_ref().map(|d| d.join(format!("{name}.json")))
    }

    fn load(&self, spec: &GroupSpec) -> Option<FiniteGroup> {
        let text = fs::read_to_string(self.path_for(spec)?).ok()?;
        let cached: CachedGroup = serde_json::from_str(&text).ok()?;
        if cached.schema != SCHEMA || cached.order != spec.order() {
            return None;
        }
        let generators = cached.generators.into_iter().map(|g| Generator { name: g.name, index: g.index }).collect();
        FiniteGroup::from_table(cached.label, cached.table, generators, cached.elements, AssociativityCheck::Auto).ok()
    }

    fn store(&self, spec: &GroupSpec, group: &FiniteGroup) -> Result<(), CliError> {
        let Some(path) = self.path_for(spec) else { return Ok(()) };
        if group.order() > MAX_CACHED_ORDER {
            return Ok(());
        }
        let cached = CachedGroup {
            schema: SCHEMA.to_string(),
            label: group.label().to_string(),
            order: group.order(),
            generators: group.generators().iter().map(|g| CachedGenerator { name: g.name.clone(), index: g.index }).collect(),
            table: group.table().to_vec(),
            elements: group.element_names().to_vec(),
        };
        let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent).map_err(io)?;
        }
        // write-then-rename so concurrent readers never see a partial file
        let tmp = path.with_extension(format!("json.{}.tmp", std::process::id()));
        fs::write(&tmp, serde_json::to_vec(&cached).expect("cache entry serializes")).map_err(io)?;
        fs::rename(&tmp, &path).map_err(io)
    }

    /// Loads the group from the cache or builds and stores it. Cache write
    /// failures are ignored.
    pub fn get_or_build(&self, spec: &GroupSpec) -> Result<FiniteGroup, CliError> {
        if let Some(group) = self.load(spec) {
            return Ok(group);
        }
        let group = spec.build()?;
        let _ = self.store(spec, &group);
        Ok(group)
    }
}
