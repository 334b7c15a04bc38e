//! Matrix representations of a bound quiver.

use crate::quiver::{ArrowId, BoundQuiver, VertexId};
use crate::strings::StringWord;

use super::field::{Field, Matrix};

/// A representation: one space per vertex, one matrix per arrow
/// (`dims[t] x dims[s]`, acting on column vectors).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRepresentation {
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix>,
}

/// A family of linear maps, one per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub blocks: Vec<Matrix>,
}

impl Morphism {
    pub fn flatten(&self) -> Vec<u64> {
        self.blocks.iter().flat_map(|b| b.entries().iter().copied()).collect()
    }

    /// `self` after `first`.
    pub fn after(&self, first: &Morphism, f: &Field) -> Morphism {
        Morphism {
            blocks: self
                .blocks
                .iter()
                .zip(&first.blocks)
                .map(|(g, h)| g.mul(h, f))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }
}

impl MatrixRepresentation {
    pub fn zero(q: &BoundQuiver) -> MatrixRepresentation {
        MatrixRepresentation {
            dims: vec![0; q.vertex_count()],
            maps: vec![Matrix::zeros(0, 0); q.arrow_count()],
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Checks every relation `(a, b)`: `M_b M_a = 0`.
    pub fn satisfies_relations(&self, q: &BoundQuiver, f: &Field) -> bool {
        q.relations()
            .iter()
            .all(|&(a, b)| self.maps[b].mul(&self.maps[a], f).is_zero())
    }

    pub fn identity(&self) -> Morphism {
        Morphism { blocks: self.dims.iter().map(|&d| Matrix::identity(d)).collect() }
    }

    /// Image of `v` in `M_{s(p)}` under the path `p`.
    pub fn apply_path(&self, path: &[ArrowId], v: &[u64], f: &Field) -> Vec<u64> {
        let mut cur = Matrix::from_columns(v.len(), &[v.to_vec()]);
        for &a in path {
            cur = self.maps[a].mul(&cur, f);
        }
        cur.column(0)
    }
}

pub fn direct_sum(q: &BoundQuiver, parts: &[MatrixRepresentation]) -> MatrixRepresentation {
    let dims: Vec<usize> = (0..q.vertex_count())
        .map(|v| parts.iter().map(|p| p.dims[v]).sum())
        .collect();
    let maps = (0..q.arrow_count())
        .map(|a| {
            let (s, t) = (q.source(a), q.target(a));
            let mut m = Matrix::zeros(dims[t], dims[s]);
            let (mut ro, mut co) = (0, 0);
            for p in parts {
                let pm = &p.maps[a];
                for r in 0..p.dims[t] {
                    for c in 0..p.dims[s] {
                        m.set(ro + r, co + c, pm.get(r, c));
                    }
                }
                ro += p.dims[t];
                co += p.dims[s];
            }
            m
        })
        .collect();
    MatrixRepresentation { dims, maps }
}

/// The string module of `w` with 0/1 matrices read off the letters.
pub fn matrix_rep(q: &BoundQuiver, w: &StringWord) -> MatrixRepresentation {
    let mut labels = vec![w.start(q)];
    labels.extend(w.letters().iter().map(|l| l.target(q)));
    let mut dims = vec![0; q.vertex_count()];
    let pos: Vec<usize> = labels
        .iter()
        .map(|&v| {
            dims[v] += 1;
            dims[v] - 1
        })
        .collect();
    let mut maps: Vec<Matrix> = (0..q.arrow_count())
        .map(|a| Matrix::zeros(dims[q.target(a)], dims[q.source(a)]))
        .collect();
    for (k, l) in w.letters().iter().enumerate() {
        let (from, to) = if l.inverse { (k + 1, k) } else { (k, k + 1) };
        maps[l.arrow].set(pos[to], pos[from], 1);
    }
    MatrixRepresentation { dims, maps }
}

/// Nonzero paths starting at `v`, shortest first.
pub fn paths_from(q: &BoundQuiver, v: VertexId) -> Vec<Vec<ArrowId>> {
    let mut out: Vec<Vec<ArrowId>> = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            let end = p.last().map_or(v, |&a| q.target(a));
            for &b in q.out_arrows(end) {
                if p.last().is_none_or(|&a| !q.is_relation(a, b)) {
                    let mut e = p.clone();
                    e.push(b);
                    next.push(e);
                }
            }
        }
        assert!(
            next.iter().all(|p| p.len() <= q.arrow_count()),
            "paths_from: algebra is infinite dimensional"
        );
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// The indecomposable projective at `v` together with the path labelling
/// its basis: `basis[x]` lists the paths from `v` to `x`.
pub struct ProjectiveRep {
    pub rep: MatrixRepresentation,
    pub basis: Vec<Vec<Vec<ArrowId>>>,
}

pub fn projective_rep(q: &BoundQuiver, v: VertexId) -> ProjectiveRep {
    let mut basis: Vec<Vec<Vec<ArrowId>>> = vec![Vec::new(); q.vertex_count()];
    for p in paths_from(q, v) {
        let end = p.last().map_or(v, |&a| q.target(a));
        basis[end].push(p);
    }
    let dims: Vec<usize> = basis.iter().map(Vec::len).collect();
    let maps = (0..q.arrow_count())
        .map(|a| {
            let (s, t) = (q.source(a), q.target(a));
            let mut m = Matrix::zeros(dims[t], dims[s]);
            for (c, p) in basis[s].iter().enumerate() {
                if p.last().is_none_or(|&l| !q.is_relation(l, a)) {
                    let mut e = p.clone();
                    e.push(a);
                    let r = basis[t].iter().position(|x| *x == e).expect("extended path is listed");
                    m.set(r, c, 1);
                }
            }
            m
        })
        .collect();
    ProjectiveRep { rep: MatrixRepresentation { dims, maps }, basis }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::strings::parse_word;

    #[test]
    fn triangle_example() {
        let q = fixtures::triangle();
        let w = crate::strings::parse_walk(&q, "alpha beta ~gamma alpha beta").unwrap();
        let m = matrix_rep(&q, &w);
        let f = Field::default();
        assert_eq!(m.dims, vec![2, 2, 2]);
        let alpha = &m.maps[q.arrow_id("alpha").unwrap()];
        assert_eq!(*alpha, Matrix::identity(2));
        let gamma = &m.maps[q.arrow_id("gamma").unwrap()];
        assert_eq!(gamma.entries().iter().filter(|&&x| x == 1).count(), 1);
        assert!(gamma.mul(gamma, &f).is_zero());
        assert!(m.satisfies_relations(&q, &f));
    }

    #[test]
    fn ex1_reps() {
        let q = fixtures::ex1();
        let m = matrix_rep(&q, &parse_word(&q, "~alpha delta").unwrap());
        assert_eq!(m.dims, vec![1, 1, 1, 0]);
        let t = matrix_rep(&q, &StringWord::Trivial(2));
        assert_eq!(t.dims, vec![0, 0, 1, 0]);
        assert!(t.maps.iter().all(Matrix::is_zero));
    }

    #[test]
    fn projectives_satisfy_relations() {
        let f = Field::default();
        for q in fixtures::corpus() {
            if !q.is_finite_dimensional() {
                continue;
            }
            for v in 0..q.vertex_count() {
                let p = projective_rep(&q, v);
                assert!(p.rep.satisfies_relations(&q, &f));
            }
        }
        let q = fixtures::ex1();
        assert_eq!(projective_rep(&q, 0).rep.dims, vec![1, 1, 1, 1]);
    }
}
