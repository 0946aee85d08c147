//! The built-in inclusions `H ≤ G` used by the verification suites, and the pair
//! file format for user corpora.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::{GroupSpec, PermGroup};

#[derive(Clone, Debug)]
pub struct CorpusPair {
    pub name: String,
    pub group: PermGroup,
    pub subgroup: PermGroup,
}

/// On-disk form: `{"name": .., "group": <group>, "subgroup": <group>}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    pub name: String,
    pub group: GroupSpec,
    pub subgroup: GroupSpec,
}

impl PairSpec {
    pub fn build(&self, cfg: &Config) -> Result<CorpusPair> {
        let group = self.group.build(cfg)?;
        let subgroup = self.subgroup.build(cfg)?;
        subgroup.ensure_subgroup_of(&group, &self.name)?;
        Ok(CorpusPair {
            name: self.name.clone(),
            group,
            subgroup,
        })
    }
}

impl CorpusPair {
    pub fn to_spec(&self) -> PairSpec {
        PairSpec {
            name: self.name.clone(),
            group: self.group.to_spec(),
            subgroup: self.subgroup.to_spec(),
        }
    }
}

fn build(degree: usize, gens: &[&str], cfg: &Config) -> Result<PermGroup> {
    let spec = GroupSpec {
        degree,
        generators: None,
        generators_cycles: Some(gens.iter().map(|s| s.to_string()).collect()),
    };
    spec.build(cfg)
}

/// Named small groups, for tests and the command line.
pub fn named_group(name: &str, cfg: &Config) -> Result<PermGroup> {
    match name {
        "S3" => build(3, &["(0 1)", "(0 1 2)"], cfg),
        "A3" => build(3, &["(0 1 2)"], cfg),
        "S4" => build(4, &["(0 1)", "(0 1 2 3)"], cfg),
        "A4" => build(4, &["(0 1 2)", "(0 1)(2 3)"], cfg),
        "D4" => build(4, &["(0 1 2 3)", "(0 2)"], cfg),
        "V4" => build(4, &["(0 1)(2 3)", "(0 2)(1 3)"], cfg),
        "Z2wrZ3" => build(6, &["(0 1)", "(2 3)", "(4 5)", "(0 2 4)(1 3 5)"], cfg),
        "Z2^3" => build(6, &["(0 1)", "(2 3)", "(4 5)"], cfg),
        other => Err(Error::Parse(format!("unknown group name {other:?}"))),
    }
}

/// The default corpus.
pub fn default_corpus(cfg: &Config) -> Result<Vec<CorpusPair>> {
    let pair = |name: &str, group: PermGroup, subgroup: PermGroup| CorpusPair {
        name: name.into(),
        group,
        subgroup,
    };
    Ok(vec![
        pair("S3>S2", named_group("S3", cfg)?, build(3, &["(0 1)"], cfg)?),
        pair("S3>A3", named_group("S3", cfg)?, named_group("A3", cfg)?),
        pair("S4>S3", named_group("S4", cfg)?, build(4, &["(0 1)", "(0 1 2)"], cfg)?),
        pair("S4>D4", named_group("S4", cfg)?, named_group("D4", cfg)?),
        pair("A4>V4", named_group("A4", cfg)?, named_group("V4", cfg)?),
        pair("Z2wrZ3>Z2^3", named_group("Z2wrZ3", cfg)?, named_group("Z2^3", cfg)?),
    ])
}

/// Reads every `*.json` pair file in `dir`, sorted by file name. Each entry is the
/// file name with either the pair or the reason it could not be used.
pub fn load_corpus_dir(dir: &Path, cfg: &Config) -> Result<Vec<(String, Result<CorpusPair>)>> {
    let mut files: Vec<_> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    Ok(files
        .into_iter()
        .map(|path| {
            let label = path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
            let loaded = std::fs::read_to_string(&path).map_err(Error::from).and_then(|text| {
                let spec: PairSpec = serde_json::from_str(&text)
                    .map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
                spec.build(cfg)
            });
            (label, loaded)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_orders_and_lagrange() {
        let cfg = Config::default();
        let expect = [(6, 2), (6, 3), (24, 6), (24, 8), (12, 4), (24, 8)];
        for (p, (g, h)) in default_corpus(&cfg).unwrap().iter().zip(expect) {
            assert_eq!((p.group.order(), p.subgroup.order()), (g, h), "{}", p.name);
            assert_eq!(p.group.order() % p.subgroup.order(), 0);
        }
    }

    #[test]
    fn pair_spec_round_trip() {
        let cfg = Config::default();
        let p = &default_corpus(&cfg).unwrap()[0];
        let text = serde_json::to_string(&p.to_spec()).unwrap();
        let back: PairSpec = serde_json::from_str(&text).unwrap();
        let q = back.build(&cfg).unwrap();
        assert_eq!(q.group, p.group);
        assert_eq!(q.subgroup, p.subgroup);
    }
}
