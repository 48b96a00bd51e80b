use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::PresentationError;

/// An off-diagonal Coxeter label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinite,
}

impl Label {
    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Label::Finite(_))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinite => f.write_str("inf"),
        }
    }
}

/// Flags describing which hypotheses a presentation satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub large: bool,
    pub extra_large: bool,
    pub satisfies_33m: bool,
    pub dihedral: bool,
    pub free: bool,
}

/// Standard Artin presentation given by a Coxeter matrix.
///
/// Generators are indexed from 0 internally; text formats use 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterPresentation {
    n: usize,
    labels: Vec<Label>,
    name: Option<String>,
}

impl CoxeterPresentation {
    /// Build from a full matrix. The diagonal must be `Finite(1)`.
    pub fn new(rows: Vec<Vec<Label>>) -> Result<Self, PresentationError> {
        let n = rows.len();
        if n == 0 {
            return Err(PresentationError::Empty);
        }
        let mut labels = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(PresentationError::RowLength { row: i + 1, len: row.len(), n });
            }
            labels.extend_from_slice(row);
        }
        for i in 0..n {
            if labels[i * n + i] != Label::Finite(1) {
                return Err(PresentationError::Diagonal { i: i + 1 });
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if labels[i * n + j] != labels[j * n + i] {
                    return Err(PresentationError::Asymmetric { i: i + 1, j: j + 1 });
                }
                if let Label::Finite(m) = labels[i * n + j] {
                    if m < 2 {
                        return Err(PresentationError::LabelTooSmall { i: i + 1, j: j + 1, value: m as i64 });
                    }
                }
            }
        }
        Ok(CoxeterPresentation { n, labels, name: None })
    }

    /// DA(m) on two generators.
    pub fn dihedral(m: Label) -> Result<Self, PresentationError> {
        Self::new(vec![vec![Label::Finite(1), m], vec![m, Label::Finite(1)]])
    }

    /// Three generators with labels m12, m13, m23.
    pub fn triangle(m12: Label, m13: Label, m23: Label) -> Result<Self, PresentationError> {
        let one = Label::Finite(1);
        Self::new(vec![vec![one, m12, m13], vec![m12, one, m23], vec![m13, m23, one]])
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self, i: usize, j: usize) -> Label {
        self.labels[i * self.n + j]
    }

    /// Finite labels as integers, `None` for infinity or the diagonal.
    pub fn finite_label(&self, i: usize, j: usize) -> Option<u32> {
        if i == j {
            return None;
        }
        self.label(i, j).finite()
    }

    /// Largest finite off-diagonal label, if any.
    pub fn max_finite_label(&self) -> Option<u32> {
        self.pairs().filter_map(|(i, j)| self.finite_label(i, j)).max()
    }

    /// All pairs i < j in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| (i + 1..self.n).map(move |j| (i, j)))
    }

    pub fn is_large(&self) -> bool {
        self.pairs().all(|(i, j)| match self.label(i, j) {
            Label::Finite(m) => m >= 3,
            Label::Infinite => true,
        })
    }

    pub fn is_extra_large(&self) -> bool {
        self.pairs().all(|(i, j)| match self.label(i, j) {
            Label::Finite(m) => m >= 4,
            Label::Infinite => true,
        })
    }

    /// Large, and no triangle with two edges labelled 3 and a finite third edge.
    pub fn satisfies_33m(&self) -> bool {
        if !self.is_large() {
            return false;
        }
        for i in 0..self.n {
            for j in 0..self.n {
                for k in j + 1..self.n {
                    if i == j || i == k {
                        continue;
                    }
                    if self.label(i, j) == Label::Finite(3)
                        && self.label(i, k) == Label::Finite(3)
                        && self.label(j, k).is_finite()
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn classify(&self) -> Classification {
        Classification {
            large: self.is_large(),
            extra_large: self.is_extra_large(),
            satisfies_33m: self.satisfies_33m(),
            dihedral: self.n == 2,
            free: self.pairs().all(|(i, j)| !self.label(i, j).is_finite()),
        }
    }

    /// Stable SHA-256 of the matrix; names do not contribute.
    pub fn hash_hex(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.canonical_text().as_bytes());
        hex::encode(h.finalize())
    }

    /// Short identifier: the name when present, else a hash prefix.
    pub fn id(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => self.hash_hex()[..12].to_string(),
        }
    }

    fn canonical_text(&self) -> String {
        let mut s = format!("n={}", self.n);
        for i in 0..self.n {
            s.push(';');
            let row: Vec<String> = (0..self.n).map(|j| self.label(i, j).to_string()).collect();
            s.push_str(&row.join(","));
        }
        s
    }

    /// Parse the presentation file format (TOML with `n` and `matrix`).
    pub fn from_toml_str(text: &str) -> Result<Self, PresentationError> {
        let file: PresentationFile =
            toml::from_str(text).map_err(|e| PresentationError::Format(e.message().to_string()))?;
        if file.n == 0 {
            return Err(PresentationError::Empty);
        }
        if file.matrix.len() != file.n {
            return Err(PresentationError::RowCount { rows: file.matrix.len(), n: file.n });
        }
        let rows = file
            .matrix
            .iter()
            .map(|row| row.iter().map(Entry::to_label).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let pres = Self::new(rows)?;
        Ok(match file.name {
            Some(name) => pres.with_name(name),
            None => pres,
        })
    }

    pub fn to_toml_string(&self) -> String {
        let mut s = String::new();
        if let Some(name) = &self.name {
            s.push_str(&format!("name = {name:?}\n"));
        }
        s.push_str(&format!("n = {}\nmatrix = [\n", self.n));
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| match self.label(i, j) {
                    Label::Finite(m) => m.to_string(),
                    Label::Infinite => "\"inf\"".to_string(),
                })
                .collect();
            s.push_str(&format!("  [{}],\n", row.join(", ")));
        }
        s.push_str("]\n");
        s
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationFile {
    name: Option<String>,
    n: usize,
    matrix: Vec<Vec<Entry>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn to_label(&self) -> Result<Label, PresentationError> {
        match self {
            Entry::Int(v) if *v >= 1 && *v <= u32::MAX as i64 => Ok(Label::Finite(*v as u32)),
            Entry::Int(v) => Err(PresentationError::BadLabel { text: v.to_string() }),
            Entry::Text(t) => match t.trim().to_ascii_lowercase().as_str() {
                "inf" | "infinity" | "∞" => Ok(Label::Infinite),
                other => {
                    other.parse::<u32>().map(Label::Finite).map_err(|_| PresentationError::BadLabel { text: t.clone() })
                }
            },
        }
    }
}
