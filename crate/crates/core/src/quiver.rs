//! Bound quivers with length-2 monomial relations.
//!
//! Vertices and arrows are stored sorted by name, so index order is the
//! lexicographic order used by every canonical form downstream.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type VertexId = usize;
pub type ArrowId = usize;

#[derive(Debug, Error)]
pub enum QuiverError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{arrow}` refers to unknown vertex `{vertex}`")]
    ArrowEndpoint { arrow: String, vertex: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("relation ({0}, {1}) is not a composable pair")]
    NotComposable(String, String),
    #[error("duplicate relation ({0}, {1})")]
    DuplicateRelation(String, String),
    #[error("invalid algebra JSON: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// The algebra kQ/I. A relation `(a, b)` means the path `a` then `b` is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundQuiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    relations: BTreeSet<(ArrowId, ArrowId)>,
    out_arrows: Vec<Vec<ArrowId>>,
    in_arrows: Vec<Vec<ArrowId>>,
    vertex_index: HashMap<String, VertexId>,
    arrow_index: HashMap<String, ArrowId>,
}

/// On-disk JSON form of an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowFile>,
    #[serde(default)]
    pub relations: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowFile {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GentleCondition {
    G1,
    G2,
    G3,
    G4,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Witness {
    Vertex { condition: GentleCondition, vertex: String },
    Arrow { condition: GentleCondition, arrow: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GentleReport {
    pub gentle: bool,
    pub g1: bool,
    pub g2: bool,
    pub g3: bool,
    pub g4: bool,
    pub witness: Option<Witness>,
}

impl BoundQuiver {
    pub fn new<V, A, R>(vertices: V, arrows: A, relations: R) -> Result<Self, QuiverError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
        R: IntoIterator<Item = (String, String)>,
    {
        let mut names: Vec<String> = vertices.into_iter().map(Into::into).collect();
        names.sort();
        for pair in names.windows(2) {
            if pair[0] == pair[1] {
                return Err(QuiverError::DuplicateVertex(pair[0].clone()));
            }
        }
        let vertex_index: HashMap<String, VertexId> =
            names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();

        let mut raw: Vec<(String, String, String)> = arrows.into_iter().collect();
        raw.sort();
        let mut arrow_list = Vec::with_capacity(raw.len());
        let mut arrow_index = HashMap::new();
        for (name, s, t) in raw {
            let lookup = |v: &String| {
                vertex_index.get(v).copied().ok_or_else(|| QuiverError::ArrowEndpoint {
                    arrow: name.clone(),
                    vertex: v.clone(),
                })
            };
            let source = lookup(&s)?;
            let target = lookup(&t)?;
            if arrow_index.insert(name.clone(), arrow_list.len()).is_some() {
                return Err(QuiverError::DuplicateArrow(name));
            }
            arrow_list.push(Arrow { name, source, target });
        }

        let mut out_arrows = vec![Vec::new(); names.len()];
        let mut in_arrows = vec![Vec::new(); names.len()];
        for (i, a) in arrow_list.iter().enumerate() {
            out_arrows[a.source].push(i);
            in_arrows[a.target].push(i);
        }

        let mut rel = BTreeSet::new();
        for (x, y) in relations {
            let a = *arrow_index.get(&x).ok_or_else(|| QuiverError::UnknownArrow(x.clone()))?;
            let b = *arrow_index.get(&y).ok_or_else(|| QuiverError::UnknownArrow(y.clone()))?;
            if arrow_list[a].target != arrow_list[b].source {
                return Err(QuiverError::NotComposable(x, y));
            }
            if !rel.insert((a, b)) {
                return Err(QuiverError::DuplicateRelation(x, y));
            }
        }

        Ok(BoundQuiver {
            vertices: names,
            arrows: arrow_list,
            relations: rel,
            out_arrows,
            in_arrows,
            vertex_index,
            arrow_index,
        })
    }

    pub fn from_file(file: &AlgebraFile) -> Result<Self, QuiverError> {
        BoundQuiver::new(
            file.vertices.iter().cloned(),
            file.arrows
                .iter()
                .map(|a| (a.name.clone(), a.source.clone(), a.target.clone())),
            file.relations.iter().cloned(),
        )
    }

    pub fn from_json(text: &str) -> Result<Self, QuiverError> {
        let file: AlgebraFile = serde_json::from_str(text)?;
        BoundQuiver::from_file(&file)
    }

    pub fn to_file(&self) -> AlgebraFile {
        AlgebraFile {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowFile {
                    name: a.name.clone(),
                    source: self.vertices[a.source].clone(),
                    target: self.vertices[a.target].clone(),
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|&(a, b)| (self.arrows[a].name.clone(), self.arrows[b].name.clone()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("algebra serializes")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_name(&self, a: ArrowId) -> &str {
        &self.arrows[a].name
    }

    pub fn source(&self, a: ArrowId) -> VertexId {
        self.arrows[a].source
    }

    pub fn target(&self, a: ArrowId) -> VertexId {
        self.arrows[a].target
    }

    pub fn vertex_id(&self, name: &str) -> Result<VertexId, QuiverError> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| QuiverError::UnknownVertex(name.to_string()))
    }

    pub fn arrow_id(&self, name: &str) -> Result<ArrowId, QuiverError> {
        self.arrow_index
            .get(name)
            .copied()
            .ok_or_else(|| QuiverError::UnknownArrow(name.to_string()))
    }

    pub fn relations(&self) -> &BTreeSet<(ArrowId, ArrowId)> {
        &self.relations
    }

    pub fn is_relation(&self, a: ArrowId, b: ArrowId) -> bool {
        self.relations.contains(&(a, b))
    }

    pub fn out_arrows(&self, v: VertexId) -> &[ArrowId] {
        &self.out_arrows[v]
    }

    pub fn in_arrows(&self, v: VertexId) -> &[ArrowId] {
        &self.in_arrows[v]
    }

    pub fn indegree(&self, v: VertexId) -> usize {
        self.in_arrows[v].len()
    }

    pub fn outdegree(&self, v: VertexId) -> usize {
        self.out_arrows[v].len()
    }

    /// `(indegree, outdegree)` of the named vertex; loops count in both.
    pub fn degrees(&self, v: &str) -> Result<(usize, usize), QuiverError> {
        let v = self.vertex_id(v)?;
        Ok((self.indegree(v), self.outdegree(v)))
    }

    /// Arrows `b` with `ab` a nonzero path.
    pub fn successors(&self, a: ArrowId) -> impl Iterator<Item = ArrowId> + '_ {
        self.out_arrows[self.target(a)]
            .iter()
            .copied()
            .filter(move |&b| !self.is_relation(a, b))
    }

    /// Arrows `b` with `ba` a nonzero path.
    pub fn predecessors(&self, a: ArrowId) -> impl Iterator<Item = ArrowId> + '_ {
        self.in_arrows[self.source(a)]
            .iter()
            .copied()
            .filter(move |&b| !self.is_relation(b, a))
    }

    /// The unique nonzero continuation of `a` (gentle algebras have at most one).
    pub fn successor(&self, a: ArrowId) -> Option<ArrowId> {
        self.successors(a).next()
    }

    pub fn predecessor(&self, a: ArrowId) -> Option<ArrowId> {
        self.predecessors(a).next()
    }

    pub fn validate_gentle(&self) -> GentleReport {
        let mut witness = None;
        let g1 = match (0..self.vertex_count())
            .find(|&v| self.indegree(v) > 2 || self.outdegree(v) > 2)
        {
            Some(v) => {
                witness = Some(Witness::Vertex {
                    condition: GentleCondition::G1,
                    vertex: self.vertices[v].clone(),
                });
                false
            }
            None => true,
        };
        let arrow_witness = |pred: &dyn Fn(ArrowId) -> bool| (0..self.arrow_count()).find(|&a| pred(a));

        let g2_bad = arrow_witness(&|a| {
            self.successors(a).count() > 1 || self.predecessors(a).count() > 1
        });
        let g3_bad = arrow_witness(&|a| {
            let rel_succ = self.out_arrows[self.target(a)]
                .iter()
                .filter(|&&b| self.is_relation(a, b))
                .count();
            let rel_pred = self.in_arrows[self.source(a)]
                .iter()
                .filter(|&&b| self.is_relation(b, a))
                .count();
            rel_succ > 1 || rel_pred > 1
        });
        for (bad, condition) in [(g2_bad, GentleCondition::G2), (g3_bad, GentleCondition::G3)] {
            if let (Some(a), None) = (bad, &witness) {
                witness = Some(Witness::Arrow {
                    condition,
                    arrow: self.arrows[a].name.clone(),
                });
            }
        }
        let (g2, g3) = (g2_bad.is_none(), g3_bad.is_none());
        GentleReport {
            gentle: g1 && g2 && g3,
            g1,
            g2,
            g3,
            g4: true,
            witness,
        }
    }

    pub fn is_gentle(&self) -> bool {
        self.validate_gentle().gentle
    }

    /// True iff there is no oriented cycle avoiding the relations.
    pub fn is_finite_dimensional(&self) -> bool {
        self.relation_free_cycle().is_none()
    }

    /// Some closed path of arrows with no relation among consecutive
    /// arrows (including the wrap-around pair), if one exists.
    pub fn relation_free_cycle(&self) -> Option<Vec<ArrowId>> {
        // DFS on the graph of arrows, edge a -> b iff ab is a nonzero path.
        let n = self.arrow_count();
        let mut state = vec![0u8; n];
        let mut stack_path: Vec<ArrowId> = Vec::new();
        for start in 0..n {
            if state[start] != 0 {
                continue;
            }
            let mut stack: Vec<(ArrowId, Vec<ArrowId>, usize)> = Vec::new();
            state[start] = 1;
            stack_path.push(start);
            stack.push((start, self.successors(start).collect(), 0));
            while let Some((_, succ, idx)) = stack.last_mut() {
                if *idx < succ.len() {
                    let b = succ[*idx];
                    *idx += 1;
                    match state[b] {
                        0 => {
                            state[b] = 1;
                            stack_path.push(b);
                            let next: Vec<ArrowId> = self.successors(b).collect();
                            stack.push((b, next, 0));
                        }
                        1 => {
                            let pos = stack_path.iter().position(|&x| x == b).unwrap();
                            return Some(stack_path[pos..].to_vec());
                        }
                        _ => {}
                    }
                } else {
                    let (a, _, _) = stack.pop().unwrap();
                    state[a] = 2;
                    stack_path.pop();
                }
            }
        }
        None
    }

    /// Two relations `(a, b)`, `(b, c)` sharing the middle arrow.
    pub fn overlapping_relations(&self) -> Option<((ArrowId, ArrowId), (ArrowId, ArrowId))> {
        self.relations.iter().find_map(|&(a, b)| {
            self.relations
                .range((b, 0)..(b + 1, 0))
                .next()
                .map(|&second| ((a, b), second))
        })
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            let nbrs = self.out_arrows[v]
                .iter()
                .map(|&a| self.target(a))
                .chain(self.in_arrows[v].iter().map(|&a| self.source(a)));
            for w in nbrs {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

impl fmt::Display for BoundQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.vertices.join(" "))?;
        for a in &self.arrows {
            writeln!(
                f,
                "{}: {} -> {}",
                a.name, self.vertices[a.source], self.vertices[a.target]
            )?;
        }
        let rels: Vec<String> = self
            .relations
            .iter()
            .map(|&(a, b)| format!("{}{}", self.arrows[a].name, self.arrows[b].name))
            .collect();
        write!(f, "relations: {}", rels.join(" "))
    }
}
