use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::homology::{labels_from_basis, CycleBasis};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CgEdge {
    pub origin: usize,
    pub terminus: usize,
    pub label: Option<Vec<i64>>,
    pub line: usize,
}

/// Parsed `.cg` file before graph validation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrystalGraphFile {
    pub dim: Option<usize>,
    pub vertices: Vec<String>,
    pub edges: Vec<CgEdge>,
    /// `(index, chain)` pairs from `basis` lines, index counted from 1.
    pub basis: Vec<(usize, Vec<i64>, usize)>,
    pub vanish: Vec<(Vec<i64>, usize)>,
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn ints(line: usize, words: &[&str]) -> Result<Vec<i64>> {
    words
        .iter()
        .map(|w| w.parse::<i64>().map_err(|_| err(line, format!("expected integer, got '{}'", w))))
        .collect()
}

/// One directive per line: `dim d`, `vertex NAME`, `edge NAME NAME [n1 .. nd]`,
/// `basis i c1 .. cE`, `vanish c1 .. cE`; `#` starts a comment.
pub fn parse_cg(text: &str) -> Result<CrystalGraphFile> {
    let mut f = CrystalGraphFile::default();
    let mut names: HashMap<String, usize> = HashMap::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = content.split_whitespace().collect();
        let Some((&head, rest)) = words.split_first() else {
            continue;
        };
        match head {
            "dim" => {
                if rest.len() != 1 {
                    return Err(err(line, "dim takes one argument"));
                }
                if f.dim.is_some() {
                    return Err(err(line, "dim declared twice"));
                }
                if !f.edges.is_empty() {
                    return Err(err(line, "dim must precede edges"));
                }
                let d = ints(line, rest)?[0];
                if d < 1 {
                    return Err(err(line, "dim must be positive"));
                }
                f.dim = Some(d as usize);
            }
            "vertex" => {
                if rest.len() != 1 {
                    return Err(err(line, "vertex takes one name"));
                }
                let name = rest[0].to_string();
                if names.contains_key(&name) {
                    return Err(err(line, format!("duplicate vertex '{}'", name)));
                }
                names.insert(name.clone(), f.vertices.len());
                f.vertices.push(name);
            }
            "edge" => {
                if rest.len() < 2 {
                    return Err(err(line, "edge needs two vertex names"));
                }
                let lookup = |n: &str| names.get(n).copied().ok_or_else(|| err(line, format!("unknown vertex '{}'", n)));
                let origin = lookup(rest[0])?;
                let terminus = lookup(rest[1])?;
                let label = if rest.len() > 2 {
                    let l = ints(line, &rest[2..])?;
                    match f.dim {
                        None => return Err(err(line, "labels need a preceding dim")),
                        Some(d) if d != l.len() => {
                            return Err(err(line, format!("label has {} entries, dim is {}", l.len(), d)))
                        }
                        _ => Some(l),
                    }
                } else {
                    None
                };
                f.edges.push(CgEdge { origin, terminus, label, line });
            }
            "basis" => {
                if rest.is_empty() {
                    return Err(err(line, "basis needs an index"));
                }
                let idx = ints(line, &rest[..1])?[0];
                if idx < 1 {
                    return Err(err(line, "basis index counts from 1"));
                }
                f.basis.push((idx as usize, ints(line, &rest[1..])?, line));
            }
            "vanish" => f.vanish.push((ints(line, rest)?, line)),
            other => return Err(err(line, format!("unknown directive '{}'", other))),
        }
    }
    let e = f.edges.len();
    for (_, c, line) in &f.basis {
        if c.len() != e {
            return Err(err(*line, format!("chain has {} coefficients for {} edges", c.len(), e)));
        }
    }
    for (c, line) in &f.vanish {
        if c.len() != e {
            return Err(err(*line, format!("chain has {} coefficients for {} edges", c.len(), e)));
        }
    }
    Ok(f)
}

/// Validated graph with optional labels and basis override.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalInput {
    pub vertex_names: Vec<String>,
    pub graph: MultiGraph,
    /// Present when the file declares `dim`.
    pub labels: Option<(usize, Vec<Vec<i64>>)>,
    pub basis: Option<CycleBasis>,
}

impl CrystalGraphFile {
    pub fn into_input(self) -> Result<CrystalInput> {
        let graph = MultiGraph::new(self.vertices.len(), self.edges.iter().map(|e| (e.origin, e.terminus)).collect())?;
        let labels = self.dim.map(|d| {
            let l = self.edges.iter().map(|e| e.label.clone().unwrap_or_else(|| vec![0; d])).collect();
            (d, l)
        });
        let basis = if self.basis.is_empty() && self.vanish.is_empty() {
            None
        } else {
            let mut periods = self.basis.clone();
            periods.sort_by_key(|b| b.0);
            for (k, (idx, _, line)) in periods.iter().enumerate() {
                if *idx != k + 1 {
                    return Err(err(*line, format!("basis indices must run 1..{}", periods.len())));
                }
            }
            if labels.is_none() && !self.vanish.is_empty() {
                return Err(err(self.vanish[0].1, "vanish requires labelled edges"));
            }
            let mut alphas: Vec<Vec<i64>> = periods.into_iter().map(|b| b.1).collect();
            let period_count = alphas.len();
            alphas.extend(self.vanish.into_iter().map(|v| v.0));
            Some(CycleBasis { alphas, period_count })
        };
        Ok(CrystalInput { vertex_names: self.vertices, graph, labels, basis })
    }
}

impl CrystalInput {
    pub fn parse(text: &str) -> Result<Self> {
        parse_cg(text)?.into_input()
    }

    /// Labels and dimension, derived from the cycle basis when none are given.
    pub fn resolved_labels(&self) -> Result<(usize, Vec<Vec<i64>>)> {
        if let Some(l) = &self.labels {
            return Ok(l.clone());
        }
        let tree = self.graph.spanning_tree();
        let basis = match &self.basis {
            Some(b) => {
                crate::homology::check_basis(&self.graph, b)?;
                b.clone()
            }
            None => crate::homology::cycle_basis(&self.graph, &tree),
        };
        if basis.is_empty() {
            return Err(Error::NoPeriodicity);
        }
        Ok((basis.len(), labels_from_basis(&self.graph, &tree, &basis)?))
    }
}
