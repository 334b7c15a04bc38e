//! Quiver with relations of `End_A T` for a basic string module `T`, the
//! tensor algebra obtained by adding one arrow per relation, and matching of
//! presentations.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::homext::{compose, hom_basis, HomBasisElement};
use crate::mar::ModuleSet;
use crate::quiver::{ArrowId, BoundQuiver, VertexId};
use crate::string_modules::composition_text;
use crate::strings::StringWord;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EndoError {
    #[error("endomorphism algebra is not a monomial quotient of its quiver: {0}")]
    PresentationNotMonomial(String),
    #[error("presentation is not gentle")]
    NotGentle,
    #[error("presentation has overlapping relations")]
    OverlappingRelations,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    pub quiver: BoundQuiver,
    /// Summand behind each vertex, indexed by vertex id.
    pub vertex_labels: Vec<StringWord>,
    pub infinite_dimensional: bool,
}

impl AlgebraPresentation {
    pub fn relation_set(&self) -> &BTreeSet<(ArrowId, ArrowId)> {
        self.quiver.relations()
    }

    pub fn vertex_of(&self, summand: &StringWord) -> Option<VertexId> {
        self.vertex_labels.iter().position(|w| w == summand)
    }
}

/// Presentation of `End_A T`. Vertex `i` is the `i`-th summand of the sorted
/// set; an arrow `i -> j` is an irreducible map `T_j -> T_i`.
pub fn endomorphism_presentation(q: &BoundQuiver, t: &ModuleSet) -> Result<AlgebraPresentation, EndoError> {
    let summands: Vec<StringWord> = t.iter().map(StringWord::canonical).collect();
    let m = summands.len();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
    // rad[i][j]: radical basis of Hom(T_i, T_j)
    let rad_flat: Vec<Vec<HomBasisElement>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            hom_basis(q, &summands[i], &summands[j])
                .into_iter()
                .filter(|h| !(i == j && h.is_identity()))
                .collect()
        })
        .collect();
    let rad = |i: usize, j: usize| &rad_flat[i * m + j];

    let mut composites: BTreeSet<HomBasisElement> = BTreeSet::new();
    for i in 0..m {
        for k in 0..m {
            for j in 0..m {
                for h1 in rad(i, k) {
                    for h2 in rad(k, j) {
                        let c = compose(q, h1, h2).map_err(|e| EndoError::PresentationNotMonomial(e.to_string()))?;
                        if let Some(c) = c {
                            composites.insert(c);
                        }
                    }
                }
            }
        }
    }

    // irreducible map T_i -> T_j gives arrow j -> i
    let mut arrow_maps: Vec<(VertexId, VertexId, HomBasisElement)> = Vec::new();
    for &(i, j) in &pairs {
        for h in rad(i, j) {
            if !composites.contains(h) {
                arrow_maps.push((j, i, h.clone()));
            }
        }
    }
    arrow_maps.sort_by(|x, y| (x.0, x.1).cmp(&(y.0, y.1)).then_with(|| x.2.cmp(&y.2)));

    let vname = |i: usize| (i + 1).to_string();
    let width = arrow_maps.len().to_string().len();
    let aname = |k: usize| format!("x{:0width$}", k + 1);
    let mut relations = Vec::new();
    for (k1, (_, t1, h1)) in arrow_maps.iter().enumerate() {
        for (k2, (s2, _, h2)) in arrow_maps.iter().enumerate() {
            if t1 != s2 {
                continue;
            }
            let c = compose(q, h2, h1).map_err(|e| EndoError::PresentationNotMonomial(e.to_string()))?;
            if c.is_none() {
                relations.push((aname(k1), aname(k2)));
            }
        }
    }
    let quiver = BoundQuiver::new(
        (0..m).map(vname),
        arrow_maps.iter().enumerate().map(|(k, (s, t, _))| (aname(k), vname(*s), vname(*t))),
        relations,
    )
    .expect("presentation quiver is well formed");

    // nonzero paths must biject with the radical basis
    let id_of = |pos: usize| quiver.vertex_id(&vname(pos)).unwrap();
    let arrow_of: Vec<ArrowId> = (0..arrow_maps.len()).map(|k| quiver.arrow_id(&aname(k)).unwrap()).collect();
    let mut map_of_arrow = vec![None; arrow_maps.len()];
    for (k, (_, _, h)) in arrow_maps.iter().enumerate() {
        map_of_arrow[arrow_of[k]] = Some(h.clone());
    }
    let total: usize = rad_flat.iter().map(Vec::len).sum();
    let mut hit: BTreeSet<HomBasisElement> = BTreeSet::new();
    let mut frontier: Vec<(ArrowId, HomBasisElement)> =
        (0..quiver.arrow_count()).map(|a| (a, map_of_arrow[a].clone().unwrap())).collect();
    let mut paths = 0;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (last, h) in frontier {
            paths += 1;
            if paths > total || !hit.insert(h.clone()) {
                return Err(EndoError::PresentationNotMonomial(
                    "two nonzero paths give the same basis map".into(),
                ));
            }
            for &b in quiver.out_arrows(quiver.target(last)) {
                if quiver.is_relation(last, b) {
                    continue;
                }
                let g = map_of_arrow[b].as_ref().unwrap();
                match compose(q, g, &h).map_err(|e| EndoError::PresentationNotMonomial(e.to_string()))? {
                    Some(c) => next.push((b, c)),
                    None => {
                        return Err(EndoError::PresentationNotMonomial(
                            "a nonzero path composes to zero".into(),
                        ))
                    }
                }
            }
        }
        frontier = next;
    }
    if hit.len() != total {
        return Err(EndoError::PresentationNotMonomial("radical not spanned by paths".into()));
    }
    if !quiver.is_gentle() {
        return Err(EndoError::NotGentle);
    }
    if quiver.overlapping_relations().is_some() {
        return Err(EndoError::OverlappingRelations);
    }
    let mut vertex_labels = vec![StringWord::Trivial(0); m];
    for (pos, w) in summands.iter().enumerate() {
        vertex_labels[id_of(pos)] = w.clone();
    }
    let infinite_dimensional = quiver.relation_free_cycle().is_some();
    Ok(AlgebraPresentation { quiver, vertex_labels, infinite_dimensional })
}

/// Adds `ε(r): t(r) -> s(r)` for each relation `r = αβ`, with the relations
/// `βε(r)` and `ε(r)α`.
pub fn tensor_algebra(p: &AlgebraPresentation) -> Result<AlgebraPresentation, EndoError> {
    let q = &p.quiver;
    if !q.is_gentle() {
        return Err(EndoError::PreconditionViolated("presentation is not gentle".into()));
    }
    if q.overlapping_relations().is_some() {
        return Err(EndoError::PreconditionViolated("overlapping relations".into()));
    }
    let mut taken: BTreeSet<String> = q.arrows().iter().map(|a| a.name.clone()).collect();
    let mut arrows: Vec<(String, String, String)> = q
        .arrows()
        .iter()
        .map(|a| (a.name.clone(), q.vertex_name(a.source).to_string(), q.vertex_name(a.target).to_string()))
        .collect();
    let mut relations: Vec<(String, String)> = q
        .relations()
        .iter()
        .map(|&(a, b)| (q.arrow_name(a).to_string(), q.arrow_name(b).to_string()))
        .collect();
    for &(a, b) in q.relations() {
        let mut name = format!("eps_{}_{}", q.arrow_name(a), q.arrow_name(b));
        while taken.contains(&name) {
            name.push('\'');
        }
        taken.insert(name.clone());
        arrows.push((name.clone(), q.vertex_name(q.target(b)).to_string(), q.vertex_name(q.source(a)).to_string()));
        relations.push((q.arrow_name(b).to_string(), name.clone()));
        relations.push((name, q.arrow_name(a).to_string()));
    }
    let quiver = BoundQuiver::new(q.vertex_names().iter().cloned(), arrows, relations)
        .map_err(|e| EndoError::PreconditionViolated(e.to_string()))?;
    let infinite_dimensional = quiver.relation_free_cycle().is_some();
    Ok(AlgebraPresentation { quiver, vertex_labels: p.vertex_labels.clone(), infinite_dimensional })
}

/// Whether the vertex bijection `map` (vertex of `p1` to vertex of `p2`)
/// extends to an isomorphism of bound quivers.
pub fn presentations_match(map: &[VertexId], p1: &AlgebraPresentation, p2: &AlgebraPresentation) -> bool {
    let (q1, q2) = (&p1.quiver, &p2.quiver);
    if map.len() != q1.vertex_count()
        || q1.vertex_count() != q2.vertex_count()
        || q1.arrow_count() != q2.arrow_count()
        || q1.relations().len() != q2.relations().len()
        || map.iter().collect::<BTreeSet<_>>().len() != map.len()
    {
        return false;
    }
    let mut image: Vec<Option<ArrowId>> = vec![None; q1.arrow_count()];
    let mut used = vec![false; q2.arrow_count()];
    assign(q1, q2, map, 0, &mut image, &mut used)
}

fn assign(
    q1: &BoundQuiver,
    q2: &BoundQuiver,
    map: &[VertexId],
    a: ArrowId,
    image: &mut Vec<Option<ArrowId>>,
    used: &mut Vec<bool>,
) -> bool {
    if a == q1.arrow_count() {
        return true;
    }
    let (s, t) = (map[q1.source(a)], map[q1.target(a)]);
    for b in 0..q2.arrow_count() {
        if used[b] || q2.source(b) != s || q2.target(b) != t {
            continue;
        }
        image[a] = Some(b);
        // relations among arrows assigned so far must correspond
        let consistent = (0..=a).all(|x| {
            let fx = image[x].unwrap();
            q1.is_relation(x, a) == q2.is_relation(fx, b) && q1.is_relation(a, x) == q2.is_relation(b, fx)
        });
        if consistent {
            used[b] = true;
            if assign(q1, q2, map, a + 1, image, used) {
                return true;
            }
            used[b] = false;
        }
        image[a] = None;
    }
    false
}

/// DOT picture of a presentation: solid arrows, relations as dashed arcs
/// from the start of the first arrow to the end of the second.
pub fn presentation_dot(base: &BoundQuiver, p: &AlgebraPresentation) -> String {
    let q = &p.quiver;
    let mut s = String::from("digraph endo {\n");
    for v in 0..q.vertex_count() {
        let label = composition_text(base, &p.vertex_labels[v]);
        s.push_str(&format!("  \"{}\" [label=\"{}: {}\"];\n", q.vertex_name(v), q.vertex_name(v), label));
    }
    for a in q.arrows() {
        s.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
            q.vertex_name(a.source),
            q.vertex_name(a.target),
            a.name
        ));
    }
    for &(a, b) in q.relations() {
        s.push_str(&format!(
            "  \"{}\" -> \"{}\" [style=dashed, arrowhead=none, constraint=false, label=\"{} {}\"];\n",
            q.vertex_name(q.source(a)),
            q.vertex_name(q.target(b)),
            q.arrow_name(a),
            q.arrow_name(b)
        ));
    }
    s.push_str("}\n");
    s
}

/// Arrows of `p` keyed by `(source label, target label)`, for comparisons
/// against pictures drawn with their own vertex names.
pub fn labelled_arrows(p: &AlgebraPresentation) -> BTreeMap<(StringWord, StringWord), usize> {
    let mut out = BTreeMap::new();
    for a in p.quiver.arrows() {
        *out.entry((p.vertex_labels[a.source].clone(), p.vertex_labels[a.target].clone())).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bar::bar_algebra;
    use crate::fixtures;
    use crate::mar::{enumerate_mars, m_proj};
    use crate::strings::parse_word;

    #[test]
    fn k1_is_a_point() {
        let q = fixtures::quiver(&["1"], &[], &[]);
        let p = endomorphism_presentation(&q, &[StringWord::Trivial(0)].into()).unwrap();
        assert_eq!((p.quiver.vertex_count(), p.quiver.arrow_count(), p.relation_set().len()), (1, 0, 0));
    }

    #[test]
    fn ex1_matches_the_picture() {
        let q = fixtures::ex1();
        let t = m_proj(&q);
        let p = endomorphism_presentation(&q, &t).unwrap();
        assert_eq!((p.quiver.vertex_count(), p.quiver.arrow_count(), p.relation_set().len()), (8, 8, 4));
        let drawn_order: Vec<StringWord> = [
            "@3",
            "alpha",
            "@4",
            "@1",
            "beta gamma delta",
            "~alpha delta",
            "delta",
            "gamma delta",
        ]
        .iter()
        .map(|s| parse_word(&q, s).unwrap())
        .collect();
        let v = |k: usize| p.vertex_of(&drawn_order[k - 1]).unwrap();
        let expected: BTreeMap<&str, (usize, usize)> = [
            ("a", (5, 8)),
            ("b", (8, 7)),
            ("c", (7, 6)),
            ("d", (6, 1)),
            ("e", (6, 4)),
            ("f", (4, 5)),
            ("g", (3, 8)),
            ("h", (2, 6)),
        ]
        .into();
        let find = |n: &str| {
            let (s, t) = expected[n];
            (0..p.quiver.arrow_count())
                .find(|&a| p.quiver.source(a) == v(s) && p.quiver.target(a) == v(t))
                .unwrap()
        };
        for (x, y) in [("f", "a"), ("g", "b"), ("c", "e"), ("h", "d")] {
            assert!(p.quiver.is_relation(find(x), find(y)), "{x}{y}");
        }
        let b = tensor_algebra(&p).unwrap();
        assert_eq!((b.quiver.arrow_count(), b.relation_set().len()), (12, 12));
        assert!(!b.infinite_dimensional);
    }

    #[test]
    fn cyc3_tensor_is_infinite() {
        let q = fixtures::cyc3();
        let e = enumerate_mars(&q, 1);
        let p = endomorphism_presentation(&q, &e.mars[0]).unwrap();
        assert_eq!((p.quiver.vertex_count(), p.quiver.arrow_count(), p.relation_set().len()), (6, 6, 3));
        let b = tensor_algebra(&p).unwrap();
        assert_eq!((b.quiver.vertex_count(), b.quiver.arrow_count(), b.relation_set().len()), (6, 9, 9));
        assert!(b.infinite_dimensional);
    }

    #[test]
    fn matching() {
        let q = fixtures::ex1();
        let t = m_proj(&q);
        let p1 = endomorphism_presentation(&q, &t).unwrap();
        let id: Vec<VertexId> = (0..p1.quiver.vertex_count()).collect();
        assert!(presentations_match(&id, &p1, &p1));
        let bar = bar_algebra(&q);
        let p2 = endomorphism_presentation(&bar.bar, &bar.g_set(&t)).unwrap();
        let map: Vec<VertexId> =
            p1.vertex_labels.iter().map(|w| p2.vertex_of(&bar.g_string(w)).unwrap()).collect();
        assert!(presentations_match(&map, &p1, &p2));
        let mut fewer = p1.clone();
        let rel = *fewer.quiver.relations().iter().next().unwrap();
        let names: Vec<(String, String)> = fewer
            .quiver
            .relations()
            .iter()
            .filter(|&&r| r != rel)
            .map(|&(a, b)| (fewer.quiver.arrow_name(a).to_string(), fewer.quiver.arrow_name(b).to_string()))
            .collect();
        let arrows: Vec<(String, String, String)> = fewer
            .quiver
            .arrows()
            .iter()
            .map(|a| {
                (a.name.clone(), fewer.quiver.vertex_name(a.source).into(), fewer.quiver.vertex_name(a.target).into())
            })
            .collect();
        fewer.quiver = BoundQuiver::new(fewer.quiver.vertex_names().to_vec(), arrows, names).unwrap();
        assert!(!presentations_match(&id, &p1, &fewer));
    }

    #[test]
    fn dot_markers() {
        let q = fixtures::ex1();
        let p = endomorphism_presentation(&q, &m_proj(&q)).unwrap();
        let dot = presentation_dot(&q, &p);
        assert_eq!(dot.matches("style=dashed").count(), 4);
        assert_eq!(dot.matches(" -> ").count(), 12);
    }
}
