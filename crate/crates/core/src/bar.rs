//! The subdivided algebra `Ā` (each arrow split in two, relations moved to the
//! middle vertices) and the embedding `G` on string modules.

use std::collections::BTreeSet;

use crate::homext::ext1_basis;
use crate::mar::ModuleSet;
use crate::quiver::{ArrowId, BoundQuiver, VertexId};
use crate::string_modules::{proj_dimension_at_most, socle, top};
use crate::strings::{Letter, StringWord};

#[derive(Clone, Debug)]
pub struct BarAlgebra {
    pub base: BoundQuiver,
    pub bar: BoundQuiver,
    /// Bar vertex of each base vertex.
    pub vertex_map: Vec<VertexId>,
    /// Middle vertex `v_α` of each base arrow.
    pub vertex_of_arrow: Vec<VertexId>,
    /// `(α_a, α_b)` for each base arrow.
    pub split: Vec<(ArrowId, ArrowId)>,
}

fn fresh(name: String, taken: &BTreeSet<String>) -> String {
    let mut n = name;
    while taken.contains(&n) {
        n.push('\'');
    }
    n
}

pub fn bar_algebra(q: &BoundQuiver) -> BarAlgebra {
    let mut taken: BTreeSet<String> = q.vertex_names().iter().cloned().collect();
    let mut mids = Vec::new();
    for a in 0..q.arrow_count() {
        let m = fresh(format!("v_{}", q.arrow_name(a)), &taken);
        taken.insert(m.clone());
        mids.push(m);
    }
    let halves: Vec<(String, String)> = (0..q.arrow_count())
        .map(|a| (format!("{}_a", q.arrow_name(a)), format!("{}_b", q.arrow_name(a))))
        .collect();
    let vertices: Vec<String> = q.vertex_names().iter().cloned().chain(mids.iter().cloned()).collect();
    let mut arrows = Vec::new();
    for a in 0..q.arrow_count() {
        let s = q.vertex_name(q.source(a)).to_string();
        let t = q.vertex_name(q.target(a)).to_string();
        arrows.push((halves[a].0.clone(), s, mids[a].clone()));
        arrows.push((halves[a].1.clone(), mids[a].clone(), t));
    }
    let relations: Vec<(String, String)> =
        q.relations().iter().map(|&(x, y)| (halves[x].1.clone(), halves[y].0.clone())).collect();
    let bar = BoundQuiver::new(vertices, arrows, relations).expect("subdivided quiver is well formed");
    let vertex_map = (0..q.vertex_count()).map(|v| bar.vertex_id(q.vertex_name(v)).unwrap()).collect();
    let vertex_of_arrow = mids.iter().map(|m| bar.vertex_id(m).unwrap()).collect();
    let split = halves
        .iter()
        .map(|(x, y)| (bar.arrow_id(x).unwrap(), bar.arrow_id(y).unwrap()))
        .collect();
    BarAlgebra { base: q.clone(), bar, vertex_map, vertex_of_arrow, split }
}

impl BarAlgebra {
    /// `G(M(w))`: every letter `α` becomes `α_a α_b`.
    pub fn g_string(&self, w: &StringWord) -> StringWord {
        match w {
            StringWord::Trivial(v) => StringWord::Trivial(self.vertex_map[*v]),
            StringWord::Word(letters) => {
                let mut out = Vec::with_capacity(2 * letters.len());
                for l in letters {
                    let (a, b) = self.split[l.arrow];
                    if l.inverse {
                        out.extend([Letter::inv(b), Letter::inv(a)]);
                    } else {
                        out.extend([Letter::direct(a), Letter::direct(b)]);
                    }
                }
                StringWord::Word(out).canonical()
            }
        }
    }

    pub fn g_set(&self, s: &ModuleSet) -> ModuleSet {
        s.iter().map(|w| self.g_string(w)).collect()
    }

    fn is_base_vertex(&self, v: VertexId) -> bool {
        !self.vertex_of_arrow.contains(&v)
    }

    /// The base string `w` with `G(M(w)) = M(w̄)`, if `w̄` is in the image.
    pub fn g_preimage(&self, wbar: &StringWord) -> Option<StringWord> {
        let q = &self.bar;
        let ends = top(q, wbar).into_iter().chain(socle(q, wbar));
        if !ends.into_iter().all(|v| self.is_base_vertex(v)) {
            return None;
        }
        let base_of = |v: VertexId| self.vertex_map.iter().position(|&x| x == v);
        match wbar {
            StringWord::Trivial(v) => base_of(*v).map(StringWord::Trivial),
            StringWord::Word(letters) => {
                let mut out = Vec::new();
                for pair in letters.chunks(2) {
                    let [x, y] = pair else { return None };
                    let arrow = self.split.iter().position(|&(a, b)| {
                        (!x.inverse && !y.inverse && x.arrow == a && y.arrow == b)
                            || (x.inverse && y.inverse && x.arrow == b && y.arrow == a)
                    })?;
                    out.push(Letter { arrow, inverse: x.inverse });
                }
                let start = base_of(wbar.start(q))?;
                Some(StringWord::from_walk(start, out).canonical())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltingReport {
    pub pd_at_most_one: bool,
    pub ext_vanishes: bool,
    pub count_matches: bool,
    pub summands: usize,
    pub expected: usize,
    pub high_pd: Vec<StringWord>,
    /// Ordered pairs `(v, w)` with `Ext¹(M(v), M(w)) ≠ 0`.
    pub ext_pairs: Vec<(StringWord, StringWord)>,
}

impl TiltingReport {
    pub fn is_tilting(&self) -> bool {
        self.pd_at_most_one && self.ext_vanishes && self.count_matches
    }
}

/// Tilting conditions for the module `s` over `q`.
pub fn tilting_check(q: &BoundQuiver, s: &ModuleSet) -> TiltingReport {
    let high_pd: Vec<StringWord> = s.iter().filter(|w| !proj_dimension_at_most(q, w, 1)).cloned().collect();
    let mut ext_pairs = Vec::new();
    for v in s {
        for w in s {
            if ext1_basis(q, v, w).dim() > 0 {
                ext_pairs.push((v.clone(), w.clone()));
            }
        }
    }
    TiltingReport {
        pd_at_most_one: high_pd.is_empty(),
        ext_vanishes: ext_pairs.is_empty(),
        count_matches: s.len() == q.vertex_count(),
        summands: s.len(),
        expected: q.vertex_count(),
        high_pd,
        ext_pairs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::mar::m_proj;
    use crate::string_modules::{dim_vector, projectives};
    use crate::strings::{enumerate_strings, parse_word};

    #[test]
    fn shapes() {
        let q = fixtures::ex1();
        let b = bar_algebra(&q);
        assert_eq!((b.bar.vertex_count(), b.bar.arrow_count(), b.bar.relations().len()), (8, 8, 2));
        assert!(b.bar.is_gentle());
        assert!(b.bar.overlapping_relations().is_none());
        let rels: BTreeSet<(String, String)> = b
            .bar
            .relations()
            .iter()
            .map(|&(x, y)| (b.bar.arrow_name(x).to_string(), b.bar.arrow_name(y).to_string()))
            .collect();
        let expected: BTreeSet<(String, String)> = [("alpha_b", "beta_a"), ("gamma_b", "alpha_a")]
            .iter()
            .map(|(x, y)| (x.to_string(), y.to_string()))
            .collect();
        assert_eq!(rels, expected);
        let z = bar_algebra(&fixtures::zigzag3());
        assert_eq!((z.bar.vertex_count(), z.bar.arrow_count(), z.bar.relations().len()), (7, 8, 4));
        let a2 = bar_algebra(&fixtures::a2());
        assert_eq!(a2.bar.vertex_names(), &["1", "2", "v_a"]);
        assert!(a2.bar.relations().is_empty());
    }

    #[test]
    fn name_collision() {
        let q = fixtures::quiver(&["1", "v_a"], &[("a", "1", "v_a")], &[]);
        let b = bar_algebra(&q);
        assert_eq!(b.bar.vertex_name(b.vertex_of_arrow[0]), "v_a'");
    }

    #[test]
    fn g_on_strings() {
        let q = fixtures::ex1();
        let b = bar_algebra(&q);
        let w = parse_word(&q, "beta gamma delta").unwrap();
        let g = b.g_string(&w);
        assert_eq!(g, parse_word(&b.bar, "beta_a beta_b gamma_a gamma_b delta_a delta_b").unwrap());
        assert_eq!(dim_vector(&b.bar, &g).total(), 7);
        assert_eq!(b.g_string(&StringWord::Trivial(2)), StringWord::Trivial(b.vertex_map[2]));
        for w in enumerate_strings(&q, 4) {
            let g = b.g_string(&w);
            assert_eq!(dim_vector(&b.bar, &g).total(), 2 * dim_vector(&q, &w).total() - 1);
            assert_eq!(b.g_preimage(&g), Some(w));
        }
        let va = StringWord::Trivial(b.vertex_of_arrow[q.arrow_id("alpha").unwrap()]);
        assert_eq!(b.g_preimage(&va), None);
        assert_eq!(b.g_preimage(&parse_word(&b.bar, "alpha_a").unwrap()), None);
    }

    #[test]
    fn tilting() {
        let q = fixtures::ex1();
        let b = bar_algebra(&q);
        let r = tilting_check(&b.bar, &b.g_set(&m_proj(&q)));
        assert!(r.is_tilting(), "{r:?}");
        assert_eq!(r.summands, 8);
        assert!(tilting_check(&b.bar, &projectives(&b.bar)).is_tilting());
        let r = tilting_check(&q, &m_proj(&q));
        assert!(!r.count_matches);
    }
}
