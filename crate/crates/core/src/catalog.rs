//! Built-in marked graph diagrams for surface-links of ch-index at most 10,
//! plus the classical trefoil and (4,2)-torus link.
//!
//! Entries live in text files under `catalog/`, one per link, in the diagram
//! text format. Header comments carry the metadata:
//!
//! ```text
//! #@ name: 8_1
//! #@ kind: surface-link
//! #@ note: Spun trefoil ...
//! ```
//!
//! followed by one or more `diagram` stanzas. The first stanza is the
//! reference diagram; the rest are alternates for invariance checks. The
//! files are compiled in; setting `QUIVERLINK_CATALOG` to a directory makes
//! [`Catalog::load`] read `*.txt` from there instead.

use std::cmp::Ordering;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::diagram::{parse_diagrams, MarkedGraphDiagram};
use crate::error::{Error, Result};

/// Environment variable naming a directory that replaces the built-in files.
pub const CATALOG_ENV: &str = "QUIVERLINK_CATALOG";

const BUILTIN_FILES: &[(&str, &str)] = &[
    ("0_1.txt", include_str!("../catalog/0_1.txt")),
    ("2-2_1.txt", include_str!("../catalog/2-2_1.txt")),
    ("6-0.1_1.txt", include_str!("../catalog/6-0.1_1.txt")),
    ("8_1.txt", include_str!("../catalog/8_1.txt")),
    ("8-1.1_1.txt", include_str!("../catalog/8-1.1_1.txt")),
    ("9_1.txt", include_str!("../catalog/9_1.txt")),
    ("9-0.1_1.txt", include_str!("../catalog/9-0.1_1.txt")),
    ("10_1.txt", include_str!("../catalog/10_1.txt")),
    ("10_2.txt", include_str!("../catalog/10_2.txt")),
    ("10_3.txt", include_str!("../catalog/10_3.txt")),
    ("10-1_1.txt", include_str!("../catalog/10-1_1.txt")),
    ("10-0.1_1.txt", include_str!("../catalog/10-0.1_1.txt")),
    ("10-0.1_2.txt", include_str!("../catalog/10-0.1_2.txt")),
    ("10-1.1_1.txt", include_str!("../catalog/10-1.1_1.txt")),
    ("10-0.0.1_1.txt", include_str!("../catalog/10-0.0.1_1.txt")),
    ("3_1.txt", include_str!("../catalog/3_1.txt")),
    ("L4a1.txt", include_str!("../catalog/L4a1.txt")),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntryKind {
    SurfaceLink,
    Classical,
}

impl fmt::Display for EntryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EntryKind::SurfaceLink => "surface-link",
            EntryKind::Classical => "classical",
        })
    }
}

impl FromStr for EntryKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "surface-link" => Ok(EntryKind::SurfaceLink),
            "classical" => Ok(EntryKind::Classical),
            _ => Err(Error::Format(format!("unknown entry kind `{s}`; expected surface-link or classical"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: EntryKind,
    pub note: String,
    /// Reference diagram first, then alternates.
    pub diagrams: Vec<MarkedGraphDiagram>,
}

impl CatalogEntry {
    pub fn diagram(&self) -> &MarkedGraphDiagram {
        &self.diagrams[0]
    }

    /// The leading integer of a label such as `10^{0,1}_2`.
    pub fn label_ch_index(&self) -> Option<usize> {
        label_parts(&self.name).map(|p| p.ch)
    }

    /// Reads one entry file. `source` names the file in error messages.
    pub fn parse(text: &str, source: &str) -> Result<CatalogEntry> {
        let bad = |msg: String| Error::Format(format!("{source}: {msg}"));
        let mut name = None;
        let mut kind = None;
        let mut note: Vec<&str> = Vec::new();
        for line in text.lines() {
            let Some(meta) = line.trim_start().strip_prefix("#@") else { continue };
            let (key, value) = meta.split_once(':').ok_or_else(|| bad(format!("malformed header `{line}`")))?;
            let value = value.trim();
            match key.trim() {
                "name" => name = Some(value.to_string()),
                "kind" => kind = Some(value.parse::<EntryKind>().map_err(|e| bad(e.to_string()))?),
                "note" => note.push(value),
                other => return Err(bad(format!("unknown header key `{other}`"))),
            }
        }
        let name = name.ok_or_else(|| bad("missing `#@ name:` header".into()))?;
        let kind = kind.ok_or_else(|| bad("missing `#@ kind:` header".into()))?;
        let diagrams = parse_diagrams(text).map_err(|e| bad(e.to_string()))?;
        if diagrams.is_empty() {
            return Err(bad("no diagram stanzas".into()));
        }
        Ok(CatalogEntry { name, kind, note: note.join(" "), diagrams })
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// The compiled-in entries.
    pub fn builtin() -> Catalog {
        let entries = BUILTIN_FILES
            .iter()
            .map(|(file, text)| CatalogEntry::parse(text, file).expect("built-in catalog file"))
            .collect();
        Catalog::from_entries(entries).expect("built-in catalog")
    }

    /// Every `*.txt` file in `dir`.
    pub fn from_dir(dir: &Path) -> Result<Catalog> {
        let mut paths: Vec<_> = std::fs::read_dir(dir)?.map(|e| e.map(|e| e.path())).collect::<std::io::Result<_>>()?;
        paths.retain(|p| p.extension().is_some_and(|x| x == "txt"));
        paths.sort();
        let mut entries = Vec::with_capacity(paths.len());
        for p in paths {
            let text = std::fs::read_to_string(&p)?;
            entries.push(CatalogEntry::parse(&text, &p.display().to_string())?);
        }
        Catalog::from_entries(entries)
    }

    /// The directory in `QUIVERLINK_CATALOG` if set, the built-in files otherwise.
    pub fn load() -> Result<Catalog> {
        match std::env::var_os(CATALOG_ENV) {
            Some(dir) if !dir.is_empty() => Catalog::from_dir(Path::new(&dir)),
            _ => Ok(Catalog::builtin()),
        }
    }

    pub fn from_entries(mut entries: Vec<CatalogEntry>) -> Result<Catalog> {
        entries.sort_by(entry_order);
        for w in entries.windows(2) {
            if w[0].name == w[1].name {
                return Err(Error::Format(format!("catalog entry `{}` is defined twice", w[0].name)));
            }
        }
        Ok(Catalog { entries })
    }

    /// Surface-links in table order, then classical entries.
    pub fn names(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.name.clone()).collect()
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn surface_links(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(|e| e.kind == EntryKind::SurfaceLink)
    }

    /// Looks up an entry; braces in the label are optional, so `6^0,1_1`
    /// finds `6^{0,1}_1`.
    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        let key = strip_braces(name);
        self.entries
            .iter()
            .find(|e| e.name == name)
            .or_else(|| self.entries.iter().find(|e| strip_braces(&e.name) == key))
            .ok_or_else(|| Error::Lookup { name: name.to_string(), valid: self.names() })
    }

    /// The reference diagram of an entry, or a named alternate such as `8_1/r1`.
    pub fn diagram(&self, name: &str) -> Result<&MarkedGraphDiagram> {
        if let Ok(e) = self.get(name) {
            return Ok(e.diagram());
        }
        if let Some((entry, _)) = name.split_once('/') {
            if let Ok(e) = self.get(entry) {
                let key = strip_braces(name);
                if let Some(d) = e.diagrams.iter().find(|d| strip_braces(d.name()) == key) {
                    return Ok(d);
                }
            }
        }
        let mut valid = Vec::new();
        for e in &self.entries {
            valid.extend(e.diagrams.iter().map(|d| d.name().to_string()));
        }
        Err(Error::Lookup { name: name.to_string(), valid })
    }
}

/// Looks up an entry in [`Catalog::load`].
pub fn get(name: &str) -> Result<CatalogEntry> {
    Catalog::load()?.get(name).cloned()
}

/// Entry names of [`Catalog::load`].
pub fn list() -> Result<Vec<String>> {
    Ok(Catalog::load()?.names())
}

fn strip_braces(s: &str) -> String {
    s.chars().filter(|&c| c != '{' && c != '}').collect()
}

struct LabelParts {
    ch: usize,
    genera: Vec<usize>,
    index: usize,
}

/// Splits `10^{0,1}_2` into 10, [0, 1], 2. A missing superscript is one sphere.
fn label_parts(name: &str) -> Option<LabelParts> {
    let (head, index) = name.rsplit_once('_')?;
    let index = index.parse().ok()?;
    let (ch, genera) = match head.split_once('^') {
        None => (head.parse().ok()?, vec![0]),
        Some((ch, sup)) => {
            let sup = sup.trim_start_matches('{').trim_end_matches('}');
            let genera = sup.split(',').map(|g| g.trim().parse().ok()).collect::<Option<Vec<usize>>>()?;
            (ch.parse().ok()?, genera)
        }
    };
    Some(LabelParts { ch, genera, index })
}

fn entry_order(a: &CatalogEntry, b: &CatalogEntry) -> Ordering {
    let kind = |e: &CatalogEntry| e.kind == EntryKind::Classical;
    let key = |e: &CatalogEntry| label_parts(&e.name).map(|p| (p.ch, p.genera.len(), p.genera, p.index));
    kind(a)
        .cmp(&kind(b))
        .then_with(|| match (key(a), key(b)) {
            (Some(x), Some(y)) => x.cmp(&y),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => Ordering::Equal,
        })
        .then_with(|| a.name.cmp(&b.name))
}
