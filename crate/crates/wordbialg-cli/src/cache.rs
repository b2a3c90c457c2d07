//! Result cache keyed by a content hash of `(relation, bounds)`.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;
use sha2::{Digest, Sha256};

/// Directory-backed JSON cache; a no-op without a directory.
#[derive(Clone, Debug, Default)]
pub struct Cache {
    dir: Option<PathBuf>,
}

/// Hex SHA-256 of the canonical (sorted-key) JSON text of `material`.
pub fn content_key(material: &Value) -> String {
    let text = serde_json::to_string(material).expect("JSON values serialize");
    hex::encode(Sha256::digest(text.as_bytes()))
}

impl Cache {
    pub fn new(dir: Option<&Path>) -> Self {
        Cache { dir: dir.map(Path::to_path_buf) }
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.json")))
    }

    /// The stored entry, if present and readable. The key material is stored
    /// alongside and must match.
    pub fn load(&self, material: &Value) -> Option<Value> {
        let path = self.path(&content_key(material))?;
        let v: Value = serde_json::from_str(&fs::read_to_string(path).ok()?).ok()?;
        (v.get("key") == Some(material)).then(|| v["data"].clone())
    }

    /// Writes through a temporary file so an interrupted run leaves the
    /// previous entry intact.
    pub fn store(&self, material: &Value, data: &Value) -> anyhow::Result<()> {
        let Some(path) = self.path(&content_key(material)) else {
            return Ok(());
        };
        fs::create_dir_all(path.parent().expect("cache files live in a directory"))?;
        let tmp = path.with_extension("json.tmp");
        let entry = serde_json::json!({ "key": material, "data": data });
        fs::write(&tmp, serde_json::to_string(&entry)?)?;
        fs::rename(tmp, path)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn round_trip() {
        let dir = std::env::temp_dir().join(format!("wordbialg-cache-test-{}", std::process::id()));
        let c = Cache::new(Some(&dir));
        let k = json!({"relation": "knuth", "max_len": 3});
        assert_eq!(c.load(&k), None);
        c.store(&k, &json!([1, 1, 2])).unwrap();
        assert_eq!(c.load(&k), Some(json!([1, 1, 2])));
        assert_eq!(c.load(&json!({"relation": "knuth", "max_len": 4})), None);
        fs::remove_dir_all(dir).unwrap();
        assert_eq!(Cache::default().load(&k), None);
    }

    #[test]
    fn keys_are_stable() {
        let a = content_key(&json!({"b": 1, "a": 2}));
        assert_eq!(a, content_key(&json!({"a": 2, "b": 1})));
        assert_eq!(a.len(), 64);
    }
}
