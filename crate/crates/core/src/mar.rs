//! Almost rigid modules: rigidity tests, required summands, `M_proj` and
//! `M_inj`, completion and bounded enumeration of maximal almost rigid sets.

use std::collections::BTreeSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::homext::{has_overlap, has_overlap_between, overlap_extensions, OverlapExtensionDatum};
use crate::quiver::BoundQuiver;
use crate::string_modules::{injectives, projectives, radical_summands, socle_quotient_summands};
use crate::strings::{detect_bands, enumerate_strings, maximal_direct_strings, StringWord};

/// A basic module, as its set of canonical string words.
pub type ModuleSet = BTreeSet<StringWord>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MarError {
    #[error("input set is not almost rigid")]
    NotAlmostRigid(Box<OverlapExtensionDatum>),
    #[error("no completion with summands of length at most {0}")]
    BoundTooSmall(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MarCertificate {
    pub size_ok: bool,
    pub pairwise_ok: bool,
}

impl MarCertificate {
    pub fn is_mar(&self) -> bool {
        self.size_ok && self.pairwise_ok
    }
}

pub fn mar_size(q: &BoundQuiver) -> usize {
    q.vertex_count() + q.arrow_count()
}

/// Some overlap extension between members of `s`, if there is one.
pub fn rigidity_witness(q: &BoundQuiver, s: &ModuleSet) -> Option<OverlapExtensionDatum> {
    for m in s {
        for n in s {
            if let Some(d) = overlap_extensions(q, m, n).into_iter().next() {
                return Some(d);
            }
        }
    }
    None
}

pub fn is_almost_rigid(q: &BoundQuiver, s: &ModuleSet) -> bool {
    s.iter().all(|m| s.iter().all(|n| !has_overlap(q, m, n)))
}

pub fn certificate(q: &BoundQuiver, s: &ModuleSet) -> MarCertificate {
    MarCertificate { size_ok: s.len() == mar_size(q), pairwise_ok: is_almost_rigid(q, s) }
}

/// Summands of every maximal almost rigid module.
pub fn required_summands(q: &BoundQuiver) -> ModuleSet {
    let mut out: ModuleSet = (0..q.vertex_count())
        .filter(|&v| q.indegree(v) <= 1 && q.outdegree(v) <= 1)
        .map(StringWord::Trivial)
        .collect();
    out.extend(maximal_direct_strings(q));
    out
}

pub fn m_proj(q: &BoundQuiver) -> ModuleSet {
    let mut out = projectives(q);
    for v in 0..q.vertex_count() {
        out.extend(radical_summands(q, v));
    }
    out.extend(required_summands(q));
    out
}

pub fn m_inj(q: &BoundQuiver) -> ModuleSet {
    let mut out = injectives(q);
    for v in 0..q.vertex_count() {
        out.extend(socle_quotient_summands(q, v));
    }
    out.extend(required_summands(q));
    out
}

/// Strings of length at most `max_len` without overlap self-extensions,
/// ordered by length and then word.
pub fn candidate_pool(q: &BoundQuiver, max_len: usize) -> Vec<StringWord> {
    enumerate_strings(q, max_len)
        .into_iter()
        .filter(|w| !has_overlap(q, w, w))
        .collect()
}

/// Extends an almost rigid `s` to a maximal one by backtracking.
pub fn complete_to_mar(q: &BoundQuiver, s: &ModuleSet, max_len: usize) -> Result<ModuleSet, MarError> {
    let s: ModuleSet = s.iter().map(StringWord::canonical).collect();
    if let Some(d) = rigidity_witness(q, &s) {
        return Err(MarError::NotAlmostRigid(Box::new(d)));
    }
    let target = mar_size(q);
    if s.len() >= target {
        return Ok(s);
    }
    let pool: Vec<StringWord> = candidate_pool(q, max_len)
        .into_iter()
        .filter(|c| !s.contains(c) && s.iter().all(|m| !has_overlap_between(q, c, m)))
        .collect();
    let graph = Graph::new(q, &pool);
    let mut chosen = Vec::new();
    let all: Vec<usize> = (0..pool.len()).collect();
    if extend(&graph, &all, &mut chosen, target - s.len()) {
        let mut out = s;
        out.extend(chosen.into_iter().map(|i| pool[i].clone()));
        Ok(out)
    } else {
        Err(MarError::BoundTooSmall(max_len))
    }
}

fn extend(g: &Graph, candidates: &[usize], chosen: &mut Vec<usize>, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    if candidates.len() < need {
        return false;
    }
    for (k, &c) in candidates.iter().enumerate() {
        if candidates.len() - k < need {
            break;
        }
        let rest: Vec<usize> = candidates[k + 1..].iter().copied().filter(|&d| g.adjacent(c, d)).collect();
        chosen.push(c);
        if extend(g, &rest, chosen, need - 1) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Bits {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn has(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|x| x.count_ones() as usize).sum()
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &word)| {
            (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| k * 64 + b)
        })
    }
}

/// Compatibility graph: an edge when neither order has an overlap extension.
struct Graph {
    adj: Vec<Bits>,
}

impl Graph {
    fn new(q: &BoundQuiver, pool: &[StringWord]) -> Graph {
        let n = pool.len();
        let rows: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .map(|i| (0..n).filter(|&j| j != i && !has_overlap_between(q, &pool[i], &pool[j])).collect())
            .collect();
        let adj = rows
            .into_iter()
            .map(|r| {
                let mut b = Bits::empty(n);
                r.into_iter().for_each(|j| b.set(j));
                b
            })
            .collect();
        Graph { adj }
    }

    fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].has(j)
    }

    /// Bron-Kerbosch with pivoting; pushes every maximal clique.
    fn cliques(&self, r: &mut Vec<usize>, mut p: Bits, mut x: Bits, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .max_by_key(|&u| self.adj[u].and(&p).count())
            .expect("p or x is nonempty");
        let todo: Vec<usize> = p.iter().filter(|&v| !self.adj[pivot].has(v)).collect();
        for v in todo {
            r.push(v);
            self.cliques(r, p.and(&self.adj[v]), x.and(&self.adj[v]), out);
            r.pop();
            p.clear(v);
            x.set(v);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarEnumeration {
    /// Maximal almost rigid sets, sorted.
    pub mars: Vec<ModuleSet>,
    pub max_len: usize,
    pub pool_size: usize,
    /// The algebra has band modules, so the search can not be complete.
    pub has_bands: bool,
    /// Maximal compatible sets in the pool that are too small to be MAR
    /// (they would need longer summands).
    pub undersized: usize,
    /// Compatible sets larger than `|Q_0| + |Q_1|`; always zero.
    pub oversized: usize,
}

/// All MAR modules with summands of length at most `max_len`.
pub fn enumerate_mars(q: &BoundQuiver, max_len: usize) -> MarEnumeration {
    let pool = candidate_pool(q, max_len);
    let g = Graph::new(q, &pool);
    let n = pool.len();
    let found: Vec<Vec<Vec<usize>>> = (0..n)
        .into_par_iter()
        .map(|v| {
            let mut p = Bits::empty(n);
            let mut x = Bits::empty(n);
            for u in g.adj[v].iter() {
                if u > v {
                    p.set(u);
                } else {
                    x.set(u);
                }
            }
            let mut out = Vec::new();
            g.cliques(&mut vec![v], p, x, &mut out);
            out
        })
        .collect();
    let target = mar_size(q);
    let mut mars = Vec::new();
    let (mut undersized, mut oversized) = (0, 0);
    for clique in found.into_iter().flatten() {
        match clique.len().cmp(&target) {
            std::cmp::Ordering::Less => undersized += 1,
            std::cmp::Ordering::Greater => oversized += 1,
            std::cmp::Ordering::Equal => {
                mars.push(clique.into_iter().map(|i| pool[i].clone()).collect::<ModuleSet>());
            }
        }
    }
    mars.sort();
    MarEnumeration { mars, max_len, pool_size: n, has_bands: detect_bands(q).is_some(), undersized, oversized }
}
