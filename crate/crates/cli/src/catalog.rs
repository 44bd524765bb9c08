//! Named graph and drawing files listed in a tab-separated manifest.
//!
//! `manifest.tsv` has the columns `name file vertices edges provenance`.
//! Lines starting with `#` are comments and the first data line may be the
//! header. Files are grouped by their first path component, so the
//! obstructions live under `obstructions/` and the drawings under
//! `drawings/`.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use projlink_core::embedding::Rp2Embedding;
use projlink_core::minors::ObstructionSet;
use projlink_core::{Error, Graph, Result};
use sha2::{Digest, Sha256};

pub const MANIFEST: &str = "manifest.tsv";
pub const OBSTRUCTIONS: &str = "obstructions";
pub const FAMILY: &str = "family";
pub const DRAWINGS: &str = "drawings";
pub const ARCHDEACON: &str = "archdeacon";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifestRow {
    pub name: String,
    pub file: String,
    pub vertices: usize,
    pub edges: usize,
    pub provenance: String,
}

impl ManifestRow {
    pub fn group(&self) -> &str {
        self.file.split_once('/').map_or("", |(g, _)| g)
    }
}

/// A loaded entry.
#[derive(Clone, Debug)]
pub enum Entry {
    Graph(Graph),
    Drawing(Rp2Embedding),
}

impl Entry {
    pub fn graph(&self) -> &Graph {
        match self {
            Entry::Graph(g) => g,
            Entry::Drawing(d) => d.graph(),
        }
    }
}

/// Directives written as `# key: value` comments inside a data file.
pub fn directives(text: &str) -> Vec<(String, String)> {
    text.lines()
        .filter_map(|l| l.trim().strip_prefix('#'))
        .filter_map(|l| l.split_once(':'))
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .filter(|(k, _)| !k.is_empty() && !k.contains(' '))
        .collect()
}

#[derive(Clone, Debug)]
pub struct Catalog {
    root: PathBuf,
    rows: Vec<ManifestRow>,
    entries: Vec<Entry>,
    texts: Vec<String>,
    index: HashMap<String, usize>,
    digest: String,
}

fn invalid(name: &str, msg: impl Into<String>) -> Error {
    Error::CatalogInvalid { name: name.to_string(), msg: msg.into() }
}

fn parse_manifest(text: &str) -> Result<Vec<ManifestRow>> {
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end();
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let f: Vec<&str> = line.split('\t').collect();
        if f.len() != 5 {
            return Err(Error::Parse { line: i + 1, msg: format!("expected 5 tab-separated fields, found {}", f.len()) });
        }
        if f[0] == "name" && rows.is_empty() {
            continue;
        }
        let num = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse { line: i + 1, msg: format!("not a count: {s:?}") })
        };
        rows.push(ManifestRow {
            name: f[0].to_string(),
            file: f[1].to_string(),
            vertices: num(f[2])?,
            edges: num(f[3])?,
            provenance: f[4].to_string(),
        });
    }
    Ok(rows)
}

impl Catalog {
    /// Reads the manifest and every file it lists. Each file must parse and
    /// match its expected vertex and edge counts.
    pub fn load(root: impl AsRef<Path>) -> Result<Catalog> {
        let root = root.as_ref().to_path_buf();
        let manifest_path = root.join(MANIFEST);
        let manifest = fs::read_to_string(&manifest_path)
            .map_err(|_| Error::CatalogMissing(manifest_path.display().to_string()))?;
        let rows = parse_manifest(&manifest)?;
        let mut hasher = Sha256::new();
        hasher.update(manifest.as_bytes());
        let mut entries = Vec::with_capacity(rows.len());
        let mut texts = Vec::with_capacity(rows.len());
        let mut index = HashMap::new();
        for (i, row) in rows.iter().enumerate() {
            if index.insert(row.name.clone(), i).is_some() {
                return Err(invalid(&row.name, "duplicate name"));
            }
            let path = root.join(&row.file);
            let text = fs::read_to_string(&path)
                .map_err(|e| invalid(&row.name, format!("{}: {e}", path.display())))?;
            hasher.update(row.file.as_bytes());
            hasher.update([0]);
            hasher.update(text.as_bytes());
            let entry = if row.file.ends_with(".emb") {
                Entry::Drawing(Rp2Embedding::parse_emb(&text).map_err(|e| invalid(&row.name, e.to_string()))?)
            } else {
                let g = Graph::parse_el(&text).map_err(|e| invalid(&row.name, e.to_string()))?;
                Entry::Graph(g.with_name(row.name.clone()))
            };
            let g = entry.graph();
            if (g.vertex_count(), g.edge_count()) != (row.vertices, row.edges) {
                return Err(invalid(
                    &row.name,
                    format!(
                        "expected {} vertices and {} edges, file has {} and {}",
                        row.vertices,
                        row.edges,
                        g.vertex_count(),
                        g.edge_count()
                    ),
                ));
            }
            entries.push(entry);
            texts.push(text);
        }
        let digest = hasher.finalize().iter().map(|b| format!("{b:02x}")).collect();
        Ok(Catalog { root, rows, entries, texts, index, digest })
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn rows(&self) -> &[ManifestRow] {
        &self.rows
    }

    /// SHA-256 over the manifest and every listed file, in hex.
    pub fn digest(&self) -> &str {
        &self.digest
    }

    fn position(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| Error::CatalogMissing(name.to_string()))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn row(&self, name: &str) -> Result<&ManifestRow> {
        Ok(&self.rows[self.position(name)?])
    }

    pub fn entry(&self, name: &str) -> Result<&Entry> {
        Ok(&self.entries[self.position(name)?])
    }

    pub fn graph(&self, name: &str) -> Result<Graph> {
        Ok(self.entry(name)?.graph().clone().with_name(name))
    }

    pub fn drawing(&self, name: &str) -> Result<Rp2Embedding> {
        match self.entry(name)? {
            Entry::Drawing(d) => Ok(d.clone()),
            Entry::Graph(_) => Err(invalid(name, "not a drawing")),
        }
    }

    pub fn directives(&self, name: &str) -> Result<Vec<(String, String)>> {
        Ok(directives(&self.texts[self.position(name)?]))
    }

    /// Vertices flagged with `# mark: v` lines.
    pub fn marks(&self, name: &str) -> Result<Vec<usize>> {
        self.directives(name)?
            .into_iter()
            .filter(|(k, _)| k == "mark")
            .map(|(_, v)| v.parse().map_err(|_| invalid(name, format!("bad mark {v:?}"))))
            .collect()
    }

    /// Rows whose file sits under `group/`, in manifest order.
    pub fn group(&self, group: &str) -> Vec<&ManifestRow> {
        self.rows.iter().filter(|r| r.group() == group).collect()
    }

    pub fn group_graphs(&self, group: &str) -> Vec<Graph> {
        self.group(group).iter().map(|r| self.entries[self.index[&r.name]].graph().clone().with_name(r.name.clone())).collect()
    }

    /// The forbidden minors of the projective plane.
    pub fn obstructions(&self) -> Result<ObstructionSet> {
        let rows = self.group(OBSTRUCTIONS);
        if rows.is_empty() {
            return Err(Error::CatalogMissing(OBSTRUCTIONS.into()));
        }
        let provenance = rows[0].provenance.clone();
        ObstructionSet::new(OBSTRUCTIONS, self.group_graphs(OBSTRUCTIONS), provenance)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_header_and_comments() {
        let rows = parse_manifest("# c\nname\tfile\tvertices\tedges\tprovenance\nk\tfamily/k.el\t3\t3\tx\n").unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].group(), "family");
        assert!(parse_manifest("a\tb\n").is_err());
    }

    #[test]
    fn directive_lines() {
        let d = directives("# c11\n# mark: 7\n11\n0 1\n");
        assert_eq!(d, vec![("mark".to_string(), "7".to_string())]);
    }
}
