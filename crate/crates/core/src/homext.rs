//! Hom and Ext¹ bases between string modules, composition of basis maps,
//! irreducible maps and the Auslander-Reiten quiver.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::quiver::{ArrowId, BoundQuiver};
use crate::string_modules::composition_text;
use crate::strings::{
    all_strings, downset_occurrences, incoming_left, incoming_right, step_left, step_right,
    IrreducibleStep, Letter, Placement, StepKind, StringError, StringWord,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomError {
    #[error("target of the first map is not the source of the second")]
    ComposabilityMismatch,
    #[error("composite is not a multiple of a basis map")]
    CompositionNotBasis,
    #[error(transparent)]
    Strings(#[from] StringError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum HomKind {
    Mono,
    Epi,
    TwoSided,
    Neither,
}

/// The graph map `M(source) ->> M(factor) >-> M(target)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomBasisElement {
    pub source: StringWord,
    pub target: StringWord,
    pub factor: StringWord,
    pub source_placement: Placement,
    pub target_placement: Placement,
    pub kind: HomKind,
}

impl HomBasisElement {
    /// Pairs `(source node, target node)` of the 0/1 map, sorted.
    pub fn node_map(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..=self.factor.len())
            .map(|k| (self.source_placement.host_node(k), self.target_placement.host_node(k)))
            .collect();
        out.sort();
        out
    }

    pub fn is_identity(&self) -> bool {
        self.kind == HomKind::TwoSided && self.node_map().iter().all(|(a, b)| a == b)
    }
}

fn sub_walk(q: &BoundQuiver, w: &StringWord, i: usize, j: usize) -> StringWord {
    StringWord::from_walk(w.nodes(q)[i], w.letters()[i..j].to_vec())
}

/// Quotient factors of `w`: intervals `[i, j]` of nodes closed under predecessors.
fn upset_intervals(w: &StringWord) -> Vec<(usize, usize)> {
    let l = w.letters();
    let n = l.len();
    let mut out = Vec::new();
    for i in 0..=n {
        if i > 0 && !l[i - 1].inverse {
            continue;
        }
        for j in i..=n {
            if j == n || !l[j].inverse {
                out.push((i, j));
            }
        }
    }
    out
}

/// Basis of `Hom(M(w), M(v))`.
pub fn hom_basis(q: &BoundQuiver, w: &StringWord, v: &StringWord) -> Vec<HomBasisElement> {
    let (w, v) = (w.canonical(), v.canonical());
    let mut out = Vec::new();
    for (i, j) in upset_intervals(&w) {
        let f = sub_walk(q, &w, i, j);
        let u = f.canonical();
        let sp = Placement { first: i, last: j, reversed: f != u };
        for tp in downset_occurrences(q, &v, &u) {
            let whole_source = i == 0 && j == w.len();
            let whole_target = tp.first == 0 && tp.last == v.len();
            let kind = match (whole_source, whole_target) {
                (true, true) => HomKind::TwoSided,
                (true, false) => HomKind::Mono,
                (false, true) => HomKind::Epi,
                (false, false) => HomKind::Neither,
            };
            out.push(HomBasisElement {
                source: w.clone(),
                target: v.clone(),
                factor: u.clone(),
                source_placement: sp,
                target_placement: tp,
                kind,
            });
        }
    }
    out.sort();
    out
}

pub fn hom_dim(q: &BoundQuiver, w: &StringWord, v: &StringWord) -> usize {
    hom_basis(q, w, v).len()
}

/// `h2` after `h1`; `Ok(None)` for the zero map.
pub fn compose(
    q: &BoundQuiver,
    h1: &HomBasisElement,
    h2: &HomBasisElement,
) -> Result<Option<HomBasisElement>, HomError> {
    if h1.target != h2.source {
        return Err(HomError::ComposabilityMismatch);
    }
    let second: BTreeMap<usize, usize> = h2.node_map().into_iter().collect();
    let composite: Vec<(usize, usize)> = h1
        .node_map()
        .into_iter()
        .filter_map(|(a, b)| second.get(&b).map(|&c| (a, c)))
        .collect();
    if composite.is_empty() {
        return Ok(None);
    }
    hom_basis(q, &h1.source, &h2.target)
        .into_iter()
        .find(|h| h.node_map() == composite)
        .map(Some)
        .ok_or(HomError::CompositionNotBasis)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowExtensionDatum {
    pub quotient: StringWord,
    pub sub: StringWord,
    pub arrow: ArrowId,
    pub middle: StringWord,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OverlapExtensionDatum {
    pub sub: StringWord,
    pub quotient: StringWord,
    pub overlap: StringWord,
    pub a: Option<ArrowId>,
    pub b: Option<ArrowId>,
    pub c: Option<ArrowId>,
    pub d: Option<ArrowId>,
    pub w_pre: Option<StringWord>,
    pub w_suff: Option<StringWord>,
    pub v_pre: Option<StringWord>,
    pub v_suff: Option<StringWord>,
    pub middles: (StringWord, StringWord),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Ext1Basis {
    pub arrow_exts: Vec<ArrowExtensionDatum>,
    pub overlap_exts: Vec<OverlapExtensionDatum>,
}

impl Ext1Basis {
    pub fn dim(&self) -> usize {
        self.arrow_exts.len() + self.overlap_exts.len()
    }
}

fn joins(q: &BoundQuiver, left: &[Letter], right: &[Letter]) -> bool {
    match (left.last(), right.first()) {
        (Some(&l), Some(&r)) => crate::strings::pair_ok(q, l, r),
        _ => true,
    }
}

/// Arrow extensions of `M(v)` by `M(w)`: middle term `v a w`.
pub fn arrow_extensions(q: &BoundQuiver, v: &StringWord, w: &StringWord) -> Vec<ArrowExtensionDatum> {
    let (v, w) = (v.canonical(), w.canonical());
    let mut out = BTreeSet::new();
    for vo in v.orientations() {
        for wo in w.orientations() {
            for &a in q.out_arrows(vo.end(q)) {
                if q.target(a) != wo.start(q) {
                    continue;
                }
                let arrow = [Letter::direct(a)];
                if !joins(q, vo.letters(), &arrow) || !joins(q, &arrow, wo.letters()) {
                    continue;
                }
                let letters: Vec<Letter> = vo
                    .letters()
                    .iter()
                    .chain(&arrow)
                    .chain(wo.letters())
                    .copied()
                    .collect();
                out.insert(ArrowExtensionDatum {
                    quotient: v.clone(),
                    sub: w.clone(),
                    arrow: a,
                    middle: StringWord::Word(letters).canonical(),
                });
            }
        }
    }
    out.into_iter().collect()
}

type OverlapKey = (StringWord, usize, usize, StringWord, usize, usize);

/// Walks every overlap factorization of `M(v)` by `M(w)` once, calling
/// `visit(w_or, i, j, v_or, k, l)` with `e = w_or[i..j] = v_or[k..l]`.
/// Stops early when `visit` returns `false`.
fn for_each_overlap(
    q: &BoundQuiver,
    v: &StringWord,
    w: &StringWord,
    mut visit: impl FnMut(&StringWord, usize, usize, &StringWord, usize, usize) -> bool,
) {
    let mut seen: BTreeSet<OverlapKey> = BTreeSet::new();
    for wo in w.orientations() {
        let wl = wo.letters();
        let wn = wo.nodes(q);
        for vo in v.orientations() {
            let vl = vo.letters();
            let vn = vo.nodes(q);
            for i in 0..=wl.len() {
                // a: letter before e in w must be inverse
                let a = if i == 0 {
                    None
                } else if wl[i - 1].inverse {
                    Some(wl[i - 1].arrow)
                } else {
                    continue;
                };
                for k in 0..=vl.len() {
                    if vn[k] != wn[i] {
                        continue;
                    }
                    // c: letter before e in v must be direct
                    let c = if k == 0 {
                        None
                    } else if !vl[k - 1].inverse {
                        Some(vl[k - 1].arrow)
                    } else {
                        continue;
                    };
                    if a.is_none() && c.is_none() {
                        continue;
                    }
                    let mut len = 0;
                    loop {
                        let (j, l) = (i + len, k + len);
                        let b = match wl.get(j) {
                            None => Some(None),
                            Some(x) if !x.inverse => Some(Some(x.arrow)),
                            _ => None,
                        };
                        let d = match vl.get(l) {
                            None => Some(None),
                            Some(x) if x.inverse => Some(Some(x.arrow)),
                            _ => None,
                        };
                        if let (Some(b), Some(d)) = (b, d) {
                            let trivial_ok = len > 0
                                || (d.zip(a).is_none_or(|(d, a)| !q.is_relation(d, a))
                                    && c.zip(b).is_none_or(|(c, b)| !q.is_relation(c, b)));
                            if (b.is_some() || d.is_some()) && trivial_ok {
                                let key = (wo.clone(), i, j, vo.clone(), k, l);
                                let inv = (
                                    wo.inverse(),
                                    wl.len() - j,
                                    wl.len() - i,
                                    vo.inverse(),
                                    vl.len() - l,
                                    vl.len() - k,
                                );
                                let canon = key.clone().min(inv);
                                if seen.insert(canon) && !visit(&wo, i, j, &vo, k, l) {
                                    return;
                                }
                            }
                        }
                        match (wl.get(j), vl.get(l)) {
                            (Some(x), Some(y)) if x == y => len += 1,
                            _ => break,
                        }
                    }
                }
            }
        }
    }
}

fn piece(q: &BoundQuiver, w: &StringWord, i: usize, j: usize) -> StringWord {
    sub_walk(q, w, i, j)
}

/// Overlap extensions of `M(v)` by `M(w)`.
pub fn overlap_extensions(q: &BoundQuiver, v: &StringWord, w: &StringWord) -> Vec<OverlapExtensionDatum> {
    let (v, w) = (v.canonical(), w.canonical());
    let mut out = Vec::new();
    for_each_overlap(q, &v, &w, |wo, i, j, vo, k, l| {
        let (wl, vl) = (wo.letters(), vo.letters());
        let arrow_at = |letters: &[Letter], idx: Option<usize>| idx.and_then(|x| letters.get(x)).map(|x| x.arrow);
        let a = arrow_at(wl, i.checked_sub(1));
        let b = arrow_at(wl, Some(j));
        let c = arrow_at(vl, k.checked_sub(1));
        let d = arrow_at(vl, Some(l));
        let wn = wo.nodes(q);
        let vn = vo.nodes(q);
        let e1: Vec<Letter> = wl[..j].iter().chain(&vl[l..]).copied().collect();
        let e2: Vec<Letter> = vl[..l].iter().chain(&wl[j..]).copied().collect();
        debug_assert!(crate::strings::make_string(q, &e1).is_ok() || e1.is_empty());
        debug_assert!(crate::strings::make_string(q, &e2).is_ok() || e2.is_empty());
        out.push(OverlapExtensionDatum {
            sub: w.clone(),
            quotient: v.clone(),
            overlap: piece(q, wo, i, j).canonical(),
            a,
            b,
            c,
            d,
            w_pre: a.map(|_| piece(q, wo, 0, i - 1)),
            w_suff: b.map(|_| piece(q, wo, j + 1, wl.len())),
            v_pre: c.map(|_| piece(q, vo, 0, k - 1)),
            v_suff: d.map(|_| piece(q, vo, l + 1, vl.len())),
            middles: (
                StringWord::from_walk(wn[0], e1).canonical(),
                StringWord::from_walk(vn[0], e2).canonical(),
            ),
        });
        true
    });
    out.sort();
    out
}

/// Basis of `Ext¹(M(v), M(w))`: extensions with `M(w)` as submodule.
pub fn ext1_basis(q: &BoundQuiver, v: &StringWord, w: &StringWord) -> Ext1Basis {
    Ext1Basis {
        arrow_exts: arrow_extensions(q, v, w),
        overlap_exts: overlap_extensions(q, v, w),
    }
}

/// Whether some overlap extension of `M(v)` by `M(w)` exists.
pub fn has_overlap(q: &BoundQuiver, v: &StringWord, w: &StringWord) -> bool {
    let mut found = false;
    for_each_overlap(q, v, w, |_, _, _, _, _, _| {
        found = true;
        false
    });
    found
}

/// Overlap extensions in either direction, including `m = n`.
pub fn has_overlap_between(q: &BoundQuiver, m: &StringWord, n: &StringWord) -> bool {
    has_overlap(q, m, n) || has_overlap(q, n, m)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Neighbors {
    pub outgoing: Vec<IrreducibleStep>,
    pub incoming: Vec<IrreducibleStep>,
}

/// Irreducible maps out of and into `M(w)`; `Zero` steps are dropped.
pub fn irreducible_neighbors(q: &BoundQuiver, w: &StringWord) -> Neighbors {
    let keep = |s: IrreducibleStep| (s.kind != StepKind::Zero).then_some(s);
    Neighbors {
        outgoing: [step_left(q, w), step_right(q, w)].into_iter().filter_map(keep).collect(),
        incoming: [incoming_left(q, w), incoming_right(q, w)]
            .into_iter()
            .filter_map(keep)
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArQuiver {
    pub nodes: Vec<StringWord>,
    /// `(from, to)` indices into `nodes`, sorted, with multiplicity.
    pub edges: Vec<(usize, usize)>,
}

pub fn ar_quiver(q: &BoundQuiver) -> Result<ArQuiver, HomError> {
    let nodes: Vec<StringWord> = all_strings(q)?.into_iter().collect();
    let index: BTreeMap<&StringWord, usize> = nodes.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut edges = Vec::new();
    for (i, w) in nodes.iter().enumerate() {
        for step in irreducible_neighbors(q, w).outgoing {
            let r = step.result.expect("nonzero step has a result");
            edges.push((i, index[&r]));
        }
    }
    edges.sort();
    Ok(ArQuiver { nodes, edges })
}

impl ArQuiver {
    pub fn to_dot(&self, q: &BoundQuiver) -> String {
        let mut s = String::from("digraph ar {\n  rankdir=LR;\n  node [shape=plaintext];\n");
        for (i, w) in self.nodes.iter().enumerate() {
            let label = composition_text(q, w).replace('/', "\\n");
            s.push_str(&format!("  n{i} [label=\"{label}\", tooltip=\"{}\"];\n", w.display(q)));
        }
        for (a, b) in &self.edges {
            s.push_str(&format!("  n{a} -> n{b};\n"));
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::strings::{enumerate_strings, parse_word};

    fn w(q: &BoundQuiver, s: &str) -> StringWord {
        parse_word(q, s).unwrap()
    }

    #[test]
    fn a2_homs() {
        let q = fixtures::a2();
        let h = hom_basis(&q, &w(&q, "a"), &w(&q, "@1"));
        assert_eq!(h.len(), 1);
        assert_eq!(h[0].kind, HomKind::Epi);
        assert_eq!(h[0].factor, w(&q, "@1"));
        assert!(hom_basis(&q, &w(&q, "a"), &w(&q, "@2")).is_empty());
        for x in enumerate_strings(&q, 3) {
            assert!(hom_basis(&q, &x, &x).iter().any(|h| h.is_identity()));
        }
    }

    #[test]
    fn compositions() {
        let q = fixtures::a2();
        let mono = hom_basis(&q, &w(&q, "@2"), &w(&q, "a")).remove(0);
        let epi = hom_basis(&q, &w(&q, "a"), &w(&q, "@1")).remove(0);
        assert_eq!(compose(&q, &mono, &epi), Ok(None));
        assert_eq!(compose(&q, &epi, &mono), Err(HomError::ComposabilityMismatch));

        let q = fixtures::ex1();
        let gd = w(&q, "gamma delta");
        let g = w(&q, "gamma");
        let bg = w(&q, "beta gamma");
        let h1 = hom_basis(&q, &gd, &g).into_iter().find(|h| h.factor == g).unwrap();
        let h2 = hom_basis(&q, &g, &bg).into_iter().find(|h| h.factor == g).unwrap();
        let c = compose(&q, &h1, &h2).unwrap().unwrap();
        assert_eq!(c.factor, g);
        let id = hom_basis(&q, &gd, &gd).into_iter().find(|h| h.is_identity()).unwrap();
        assert_eq!(compose(&q, &id, &h1), Ok(Some(h1.clone())));
    }

    #[test]
    fn kronecker_ext() {
        let q = fixtures::kronecker();
        let e = ext1_basis(&q, &StringWord::Trivial(0), &StringWord::Trivial(1));
        assert_eq!(e.arrow_exts.len(), 2);
        assert!(e.overlap_exts.is_empty());
    }

    #[test]
    fn vee_overlap() {
        let q = fixtures::vee();
        let x = StringWord::Trivial(q.vertex_id("x").unwrap());
        let ab = w(&q, "alpha ~beta");
        let e = ext1_basis(&q, &ab, &x);
        assert_eq!(e.overlap_exts.len(), 1);
        let o = &e.overlap_exts[0];
        assert_eq!(o.overlap, x);
        let middles: BTreeSet<StringWord> = [o.middles.0.clone(), o.middles.1.clone()].into();
        assert_eq!(middles, [w(&q, "alpha"), w(&q, "beta")].into());
        assert!(has_overlap_between(&q, &ab, &x));
        assert!(has_overlap_between(&q, &x, &ab));
    }

    #[test]
    fn trivial_self_ext() {
        let q = fixtures::quiver(&["1"], &[], &[]);
        let t = StringWord::Trivial(0);
        assert_eq!(ext1_basis(&q, &t, &t), Ext1Basis::default());
        for q in fixtures::corpus() {
            for v in 0..q.vertex_count() {
                let t = StringWord::Trivial(v);
                assert!(!has_overlap_between(&q, &t, &t));
            }
        }
    }

    #[test]
    fn middle_dimensions() {
        for q in fixtures::corpus() {
            let all: Vec<_> = enumerate_strings(&q, 4).into_iter().collect();
            for v in &all {
                for x in &all {
                    let e = ext1_basis(&q, v, x);
                    for a in &e.arrow_exts {
                        assert_eq!(a.middle.len() + 1, v.len() + x.len() + 2);
                    }
                    for o in &e.overlap_exts {
                        assert_eq!(o.middles.0.len() + o.middles.1.len(), v.len() + x.len());
                        assert!(!hom_basis(&q, x, v).is_empty());
                    }
                }
            }
        }
    }

    #[test]
    fn ar_quivers() {
        let q = fixtures::a2();
        let ar = ar_quiver(&q).unwrap();
        assert_eq!((ar.nodes.len(), ar.edges.len()), (3, 2));
        assert_eq!(ar_quiver(&fixtures::ex1()).unwrap().nodes.len(), 12);
        assert_eq!(ar_quiver(&fixtures::cyc3()).unwrap().nodes.len(), 6);
        assert!(matches!(ar_quiver(&fixtures::kronecker()), Err(HomError::Strings(StringError::HasBand(_)))));
        let n = irreducible_neighbors(&q, &StringWord::Trivial(1));
        assert_eq!(n.outgoing.len(), 1);
        assert_eq!(n.outgoing[0].result, Some(w(&q, "a")));
        assert!(n.incoming.is_empty());
        let k1 = fixtures::quiver(&["1"], &[], &[]);
        assert_eq!(irreducible_neighbors(&k1, &StringWord::Trivial(0)), Neighbors::default());
        let q = fixtures::ex1();
        let n = irreducible_neighbors(&q, &w(&q, "beta gamma delta"));
        assert_eq!(step_left(&q, &w(&q, "beta gamma delta")).kind, StepKind::Zero);
        assert!(n.outgoing.len() <= 1);
        assert!(ar_quiver(&q).unwrap().to_dot(&q).starts_with("digraph"));
    }
}
