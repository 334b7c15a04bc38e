//! String modules: coefficient quivers, tops and socles, projectives and
//! injectives, projective covers and syzygies.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::quiver::{ArrowId, BoundQuiver, VertexId};
use crate::strings::{left_maximal_to, right_maximal_from, Letter, StringWord};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DimVector(pub Vec<usize>);

impl DimVector {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Nodes `0..=len` labelled by vertices; an edge `(i, j)` means the arrow
/// maps basis vector `i` to basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientQuiver {
    pub labels: Vec<VertexId>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringModule {
    pub word: StringWord,
    pub positions: Vec<VertexId>,
    pub dim: DimVector,
}

pub fn realize(q: &BoundQuiver, w: &StringWord) -> StringModule {
    let positions = w.nodes(q);
    let mut dim = vec![0; q.vertex_count()];
    for &v in &positions {
        dim[v] += 1;
    }
    StringModule { word: w.clone(), positions, dim: DimVector(dim) }
}

pub fn dim_vector(q: &BoundQuiver, w: &StringWord) -> DimVector {
    realize(q, w).dim
}

pub fn coefficient_quiver(q: &BoundQuiver, w: &StringWord) -> CoefficientQuiver {
    let edges = w
        .letters()
        .iter()
        .enumerate()
        .map(|(k, l)| if l.inverse { (k + 1, k) } else { (k, k + 1) })
        .collect();
    CoefficientQuiver { labels: w.nodes(q), edges }
}

/// Node `k` has an incoming edge from its left neighbour.
fn fed_from_left(w: &StringWord, k: usize) -> bool {
    k > 0 && !w.letters()[k - 1].inverse
}

fn fed_from_right(w: &StringWord, k: usize) -> bool {
    w.letters().get(k).is_some_and(|l| l.inverse)
}

fn feeds_left(w: &StringWord, k: usize) -> bool {
    k > 0 && w.letters()[k - 1].inverse
}

fn feeds_right(w: &StringWord, k: usize) -> bool {
    w.letters().get(k).is_some_and(|l| !l.inverse)
}

/// Labels of the source nodes, in node order.
pub fn top(q: &BoundQuiver, w: &StringWord) -> Vec<VertexId> {
    let nodes = w.nodes(q);
    (0..nodes.len())
        .filter(|&k| !fed_from_left(w, k) && !fed_from_right(w, k))
        .map(|k| nodes[k])
        .collect()
}

/// Labels of the sink nodes, in node order.
pub fn socle(q: &BoundQuiver, w: &StringWord) -> Vec<VertexId> {
    let nodes = w.nodes(q);
    (0..nodes.len())
        .filter(|&k| !feeds_left(w, k) && !feeds_right(w, k))
        .map(|k| nodes[k])
        .collect()
}

pub fn simple(v: VertexId) -> StringWord {
    StringWord::Trivial(v)
}

fn arms_from(q: &BoundQuiver, v: VertexId) -> Vec<Vec<Letter>> {
    q.out_arrows(v).iter().map(|&a| right_maximal_from(q, a)).collect()
}

fn arms_to(q: &BoundQuiver, v: VertexId) -> Vec<Vec<Letter>> {
    q.in_arrows(v).iter().map(|&a| left_maximal_to(q, a)).collect()
}

fn inverse_letters(l: &[Letter]) -> Vec<Letter> {
    l.iter().rev().map(|x| x.inverted()).collect()
}

/// `P(v)` as the canonical string `u⁻¹u'` of the arms leaving `v`.
pub fn projective(q: &BoundQuiver, v: VertexId) -> StringWord {
    let arms = arms_from(q, v);
    let letters = match arms.as_slice() {
        [] => Vec::new(),
        [u] => u.clone(),
        [u, u2, ..] => inverse_letters(u).into_iter().chain(u2.iter().copied()).collect(),
    };
    StringWord::from_walk(v, letters).canonical()
}

/// `I(v)` as the canonical string `c c'⁻¹` of the arms arriving at `v`.
pub fn injective(q: &BoundQuiver, v: VertexId) -> StringWord {
    let arms = arms_to(q, v);
    let letters = match arms.as_slice() {
        [] => Vec::new(),
        [c] => c.clone(),
        [c, c2, ..] => c.iter().copied().chain(inverse_letters(c2)).collect(),
    };
    StringWord::from_walk(v, letters).canonical()
}

pub fn projectives(q: &BoundQuiver) -> BTreeSet<StringWord> {
    (0..q.vertex_count()).map(|v| projective(q, v)).collect()
}

pub fn injectives(q: &BoundQuiver) -> BTreeSet<StringWord> {
    (0..q.vertex_count()).map(|v| injective(q, v)).collect()
}

/// The arm of a projective continuing `a`, as a string starting at `t(a)`.
fn continuation_after(q: &BoundQuiver, a: ArrowId) -> StringWord {
    match q.successor(a) {
        Some(b) => StringWord::from_walk(q.target(a), right_maximal_from(q, b)),
        None => StringWord::Trivial(q.target(a)),
    }
}

/// The arm through `a` with the node `t(a)` removed; `None` if nothing is left.
fn continuation_beyond(q: &BoundQuiver, a: ArrowId) -> Option<StringWord> {
    q.successor(a).map(|b| {
        let arm = right_maximal_from(q, b);
        StringWord::from_walk(q.target(b), arm[1..].to_vec())
    })
}

fn radical_list(q: &BoundQuiver, v: VertexId) -> Vec<StringWord> {
    q.out_arrows(v)
        .iter()
        .map(|&a| continuation_after(q, a).canonical())
        .collect()
}

/// Indecomposable summands of `rad P(v)`.
pub fn radical_summands(q: &BoundQuiver, v: VertexId) -> BTreeSet<StringWord> {
    radical_list(q, v).into_iter().collect()
}

/// Indecomposable summands of `I(v)/S(v)`.
pub fn socle_quotient_summands(q: &BoundQuiver, v: VertexId) -> BTreeSet<StringWord> {
    q.in_arrows(v)
        .iter()
        .map(|&a| match q.predecessor(a) {
            Some(b) => StringWord::Word(left_maximal_to(q, b)).canonical(),
            None => StringWord::Trivial(q.source(a)),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveCover {
    /// Tops of the indecomposable projective summands of the cover.
    pub covers: Vec<VertexId>,
    /// Kernel summands, sorted, with multiplicity.
    pub kernel: Vec<StringWord>,
}

/// Kernel of the cover of an end node that is a source: the arm of the
/// projective leaving through the outgoing arrow not used by `w`.
fn unused_arm(q: &BoundQuiver, v: VertexId, used: Option<ArrowId>) -> Vec<StringWord> {
    q.out_arrows(v)
        .iter()
        .filter(|&&a| Some(a) != used)
        .map(|&a| continuation_after(q, a))
        .collect()
}

pub fn projective_cover(q: &BoundQuiver, w: &StringWord) -> ProjectiveCover {
    let covers = top(q, w);
    let mut kernel: Vec<StringWord> = Vec::new();
    match w {
        StringWord::Trivial(v) => kernel.extend(radical_list(q, *v)),
        StringWord::Word(l) => {
            let n = l.len();
            let nodes = w.nodes(q);
            // left end
            if l[0].inverse {
                kernel.extend(continuation_beyond(q, l[0].arrow));
            } else {
                kernel.extend(unused_arm(q, nodes[0], Some(l[0].arrow)));
            }
            // right end
            if !l[n - 1].inverse {
                kernel.extend(continuation_beyond(q, l[n - 1].arrow));
            } else {
                kernel.extend(unused_arm(q, nodes[n], Some(l[n - 1].arrow)));
            }
            // interior sinks: x arrives from the left, y from the right
            for k in 1..n {
                if !l[k - 1].inverse && l[k].inverse {
                    let (x, y) = (l[k - 1].arrow, l[k].arrow);
                    let cx = continuation_after(q, x);
                    let cy = continuation_after(q, y);
                    let letters: Vec<Letter> = inverse_letters(cx.letters())
                        .into_iter()
                        .chain(cy.letters().iter().copied())
                        .collect();
                    kernel.push(StringWord::from_walk(nodes[k], letters));
                }
            }
        }
    }
    let mut kernel: Vec<StringWord> = kernel.into_iter().map(|k| k.canonical()).collect();
    kernel.sort();
    ProjectiveCover { covers, kernel }
}

pub fn syzygy(q: &BoundQuiver, w: &StringWord) -> Vec<StringWord> {
    projective_cover(q, w).kernel
}

pub fn is_projective(q: &BoundQuiver, w: &StringWord) -> bool {
    let w = w.canonical();
    let t = top(q, &w);
    t.len() == 1 && projective(q, t[0]) == w
}

/// Whether the `n`-th syzygy of `M(w)` is projective (or zero).
pub fn proj_dimension_at_most(q: &BoundQuiver, w: &StringWord, n: usize) -> bool {
    let mut layer = vec![w.canonical()];
    for _ in 0..n {
        layer = layer
            .iter()
            .filter(|x| !is_projective(q, x))
            .flat_map(|x| syzygy(q, x))
            .collect();
    }
    layer.iter().all(|x| is_projective(q, x))
}

/// Projective dimension, if at most `limit`.
pub fn projective_dimension(q: &BoundQuiver, w: &StringWord, limit: usize) -> Option<usize> {
    (0..=limit).find(|&n| proj_dimension_at_most(q, w, n))
}

/// Radical layers: row `k` holds the labels of nodes whose longest incoming
/// path in the coefficient quiver has length `k`, in node order.
pub fn composition_series(q: &BoundQuiver, w: &StringWord) -> Vec<Vec<VertexId>> {
    let nodes = w.nodes(q);
    let n = nodes.len();
    let mut layer = vec![0usize; n];
    // Propagate along maximal runs in both directions; a path is monotone in
    // node index, so two sweeps suffice.
    for k in 1..n {
        if fed_from_left(w, k) {
            layer[k] = layer[k].max(layer[k - 1] + 1);
        }
    }
    for k in (0..n.saturating_sub(1)).rev() {
        if fed_from_right(w, k) {
            layer[k] = layer[k].max(layer[k + 1] + 1);
        }
    }
    let depth = layer.iter().copied().max().unwrap_or(0);
    (0..=depth)
        .map(|d| (0..n).filter(|&k| layer[k] == d).map(|k| nodes[k]).collect())
        .collect()
}

/// Stacked notation such as `2/(1 3)`.
pub fn composition_text(q: &BoundQuiver, w: &StringWord) -> String {
    composition_series(q, w)
        .iter()
        .map(|row| {
            let names: Vec<&str> = row.iter().map(|&v| q.vertex_name(v)).collect();
            if names.len() == 1 {
                names[0].to_string()
            } else {
                format!("({})", names.join(" "))
            }
        })
        .collect::<Vec<_>>()
        .join("/")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::strings::{enumerate_strings, parse_walk, parse_word};

    fn w(q: &BoundQuiver, s: &str) -> StringWord {
        parse_word(q, s).unwrap()
    }

    fn v(q: &BoundQuiver, s: &str) -> VertexId {
        q.vertex_id(s).unwrap()
    }

    fn show(q: &BoundQuiver, list: &[StringWord]) -> Vec<String> {
        list.iter().map(|x| x.display(q).to_string()).collect()
    }

    #[test]
    fn realize_examples() {
        let q = fixtures::triangle();
        let m = realize(&q, &parse_walk(&q, "alpha beta ~gamma alpha beta").unwrap());
        assert_eq!(m.dim, DimVector(vec![2, 2, 2]));
        assert_eq!(realize(&q, &StringWord::Trivial(1)).dim, DimVector(vec![0, 1, 0]));
        let q = fixtures::ex1();
        let m = realize(&q, &parse_walk(&q, "beta gamma delta").unwrap());
        assert_eq!(m.dim, DimVector(vec![1, 1, 1, 1]));
        let names: Vec<&str> = m.positions.iter().map(|&x| q.vertex_name(x)).collect();
        assert_eq!(names, ["1", "4", "2", "3"]);
    }

    #[test]
    fn tops_and_socles() {
        let q = fixtures::ex1();
        let x = w(&q, "~alpha delta");
        assert_eq!(top(&q, &x), vec![v(&q, "2")]);
        assert_eq!(socle(&q, &x), vec![v(&q, "1"), v(&q, "3")]);
        let y = w(&q, "beta gamma delta");
        assert_eq!((top(&q, &y), socle(&q, &y)), (vec![v(&q, "1")], vec![v(&q, "3")]));
        let t = StringWord::Trivial(2);
        assert_eq!((top(&q, &t), socle(&q, &t)), (vec![2], vec![2]));
    }

    #[test]
    fn projectives_and_injectives() {
        let q = fixtures::ex1();
        assert_eq!(projective(&q, v(&q, "2")), w(&q, "~alpha delta"));
        assert_eq!(projective(&q, v(&q, "1")), w(&q, "beta gamma delta"));
        assert_eq!(projective(&q, v(&q, "3")), StringWord::Trivial(v(&q, "3")));
        assert_eq!(injective(&q, v(&q, "4")), w(&q, "beta"));
        assert_eq!(injective(&q, v(&q, "3")), w(&q, "beta gamma delta"));
        let q = fixtures::a2();
        assert_eq!(projective(&q, 0), w(&q, "a"));
        assert_eq!(injective(&q, 1), w(&q, "a"));
        for q in fixtures::corpus() {
            if !q.is_finite_dimensional() {
                continue;
            }
            for x in 0..q.vertex_count() {
                assert_eq!(top(&q, &projective(&q, x)), vec![x]);
                assert_eq!(socle(&q, &injective(&q, x)), vec![x]);
            }
        }
    }

    #[test]
    fn radicals() {
        let q = fixtures::ex1();
        let r: Vec<StringWord> = radical_summands(&q, v(&q, "2")).into_iter().collect();
        assert_eq!(show(&q, &r), ["@1", "@3"]);
        let r: Vec<StringWord> = radical_summands(&q, v(&q, "1")).into_iter().collect();
        assert_eq!(r, vec![w(&q, "gamma delta")]);
        let q = fixtures::a2();
        let r: Vec<StringWord> = radical_summands(&q, 0).into_iter().collect();
        assert_eq!(r, vec![StringWord::Trivial(1)]);
    }

    #[test]
    fn covers() {
        let q = fixtures::a2();
        let c = projective_cover(&q, &StringWord::Trivial(0));
        assert_eq!(c, ProjectiveCover { covers: vec![0], kernel: vec![StringWord::Trivial(1)] });
        let q = fixtures::ex1();
        let c = projective_cover(&q, &StringWord::Trivial(v(&q, "2")));
        assert_eq!(show(&q, &c.kernel), ["@1", "@3"]);
        let c = projective_cover(&q, &StringWord::Trivial(v(&q, "4")));
        assert_eq!(c.covers, vec![v(&q, "4")]);
        assert_eq!(c.kernel, vec![w(&q, "delta")]);
        assert_eq!(show(&q, &syzygy(&q, &w(&q, "delta"))), ["@1"]);
        assert!(syzygy(&q, &w(&q, "beta gamma delta")).is_empty());
    }

    #[test]
    fn projective_dimension_ex1() {
        let q = fixtures::ex1();
        let s4 = StringWord::Trivial(v(&q, "4"));
        assert!(!proj_dimension_at_most(&q, &s4, 2));
        assert!(proj_dimension_at_most(&q, &s4, 3));
        assert_eq!(projective_dimension(&q, &s4, 10), Some(3));
        for p in projectives(&q) {
            assert!(proj_dimension_at_most(&q, &p, 0));
        }
    }

    #[test]
    fn dimension_bookkeeping() {
        let mut algebras = fixtures::corpus();
        algebras.extend((0..100).map(|s| crate::random_gentle(s, 6)));
        for q in algebras.iter().filter(|q| q.is_finite_dimensional()) {
            for x in enumerate_strings(q, 6) {
                let c = projective_cover(q, &x);
                let lhs: usize = c.covers.iter().map(|&t| dim_vector(q, &projective(q, t)).total()).sum();
                let rhs: usize = dim_vector(q, &x).total()
                    + c.kernel.iter().map(|k| dim_vector(q, k).total()).sum::<usize>();
                assert_eq!(lhs, rhs, "{}", x.display(q));
                let per_vertex = c
                    .covers
                    .iter()
                    .fold(DimVector(vec![0; q.vertex_count()]), |acc, &t| acc.add(&dim_vector(q, &projective(q, t))));
                let kernel_dims = c
                    .kernel
                    .iter()
                    .fold(dim_vector(q, &x), |acc, k| acc.add(&dim_vector(q, k)));
                assert_eq!(per_vertex, kernel_dims);
            }
        }
    }

    #[test]
    fn composition_text_examples() {
        let q = fixtures::ex1();
        assert_eq!(composition_text(&q, &w(&q, "~alpha delta")), "2/(1 3)");
        assert_eq!(composition_text(&q, &w(&q, "beta gamma delta")), "1/4/2/3");
        assert_eq!(composition_text(&q, &w(&q, "alpha")), "2/1");
        let q = fixtures::orpheus();
        assert_eq!(composition_text(&q, &w(&q, "~a2 ~b2 g1")), "3/(2 4)/1");
    }
}
