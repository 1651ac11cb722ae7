//! Input files: characteristic pairs, fans, face posets, base rings and
//! restriction tuples, all JSON. The kind of a torus manifold input is
//! detected from its keys.

use std::fs;
use std::path::Path;

use serde_json::Value;
use torman_core::charpair::{PairFile, PosetFile};
use torman_core::{BaseFile, CharacteristicPair, Fan, GeneralFacePoset, RestrictionTuple};

use crate::Failure;

pub enum Manifold {
    Pair(CharacteristicPair),
    Fan(Fan),
    Poset(PosetFile),
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn decode<T: serde::de::DeserializeOwned>(path: &Path, v: Value) -> Result<T, Failure> {
    serde_json::from_value(v).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

pub fn load_manifold(path: &Path) -> Result<Manifold, Failure> {
    let v = read_json(path)?;
    let has = |k: &str| v.get(k).is_some();
    if has("rays") {
        Ok(Manifold::Fan(decode(path, v)?))
    } else if has("faces") {
        Ok(Manifold::Poset(decode(path, v)?))
    } else if has("nerve_maximal") {
        let file: PairFile = decode(path, v)?;
        let pair = CharacteristicPair::from_file(&file).map_err(Failure::from)?;
        Ok(Manifold::Pair(pair))
    } else {
        Err(Failure::Parse(format!(
            "{}: expected a characteristic pair (\"nerve_maximal\"), a fan (\"rays\") or a face poset (\"faces\")",
            path.display()
        )))
    }
}

impl Manifold {
    /// The characteristic pair, validated. Posets are refused.
    pub fn pair(self, command: &str) -> Result<CharacteristicPair, Failure> {
        let pair = match self {
            Manifold::Pair(p) => p,
            Manifold::Fan(f) => {
                f.check().map_err(Failure::from)?;
                CharacteristicPair::from_fan(&f).map_err(Failure::from)?
            }
            Manifold::Poset(_) => {
                return Err(Failure::Validation(format!(
                    "{command} needs a homology polytope; use face-acyclic or emit-conjecture for a face poset"
                )))
            }
        };
        pair.ensure_valid().map_err(Failure::from)?;
        Ok(pair)
    }

    /// A face poset; pairs and fans are converted.
    pub fn poset(self) -> Result<GeneralFacePoset, Failure> {
        match self {
            Manifold::Poset(f) => GeneralFacePoset::from_file(&f).map_err(Failure::from),
            other => GeneralFacePoset::from_pair(&other.pair("face-acyclic")?).map_err(Failure::from),
        }
    }
}

pub fn load_base(path: &Path) -> Result<BaseFile, Failure> {
    decode(path, read_json(path)?)
}

pub fn load_tuple(path: &Path) -> Result<RestrictionTuple, Failure> {
    decode(path, read_json(path)?)
}
