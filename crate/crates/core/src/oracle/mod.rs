//! Brute-force linear algebra over a prime field, used to cross-check the
//! string combinatorics.

pub mod crosscheck;
pub mod field;
pub mod rep;

use thiserror::Error;

use crate::quiver::{BoundQuiver, VertexId};

pub use crosscheck::{crosscheck, CrosscheckReport, Mismatch};
pub use field::{Field, Matrix, RowSpace, DEFAULT_PRIME};
pub use rep::{direct_sum, matrix_rep, projective_rep, MatrixRepresentation, Morphism};

pub const PRIME_ENV: &str = "GENTLE_MAR_PRIME";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("invalid prime `{0}`")]
    BadPrime(String),
    #[error("module is not in the ambient list")]
    AmbientIncomplete,
}

/// The field selected by `GENTLE_MAR_PRIME`, else the default.
pub fn field_from_env() -> Result<Field, OracleError> {
    match std::env::var(PRIME_ENV) {
        Ok(s) => {
            let p = s.trim().parse().map_err(|_| OracleError::BadPrime(s.clone()))?;
            Field::new(p)
        }
        Err(_) => Ok(Field::default()),
    }
}

/// Basis of `Hom(m, n)`: solutions of `N_a f_s = f_t M_a` for every arrow.
pub fn hom_space(
    f: &Field,
    q: &BoundQuiver,
    m: &MatrixRepresentation,
    n: &MatrixRepresentation,
) -> Vec<Morphism> {
    let nv = q.vertex_count();
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    }
    let vars = offset[nv];
    let var = |v: VertexId, r: usize, c: usize| offset[v] + r * m.dims[v] + c;
    let eq_count: usize = (0..q.arrow_count())
        .map(|a| n.dims[q.target(a)] * m.dims[q.source(a)])
        .sum();
    let mut sys = Matrix::zeros(eq_count, vars);
    let mut row = 0;
    for a in 0..q.arrow_count() {
        let (s, t) = (q.source(a), q.target(a));
        let (na, ma) = (&n.maps[a], &m.maps[a]);
        for i in 0..n.dims[t] {
            for j in 0..m.dims[s] {
                // (N_a f_s)[i][j] - (f_t M_a)[i][j]
                for k in 0..n.dims[s] {
                    let c = na.get(i, k);
                    if c != 0 {
                        let x = var(s, k, j);
                        sys.set(row, x, f.add(sys.get(row, x), c));
                    }
                }
                for k in 0..m.dims[t] {
                    let c = ma.get(k, j);
                    if c != 0 {
                        let x = var(t, i, k);
                        sys.set(row, x, f.sub(sys.get(row, x), c));
                    }
                }
                row += 1;
            }
        }
    }
    sys.nullspace(f)
        .into_iter()
        .map(|x| Morphism {
            blocks: (0..nv)
                .map(|v| {
                    let mut b = Matrix::zeros(n.dims[v], m.dims[v]);
                    for r in 0..n.dims[v] {
                        for c in 0..m.dims[v] {
                            b.set(r, c, x[var(v, r, c)]);
                        }
                    }
                    b
                })
                .collect(),
        })
        .collect()
}

pub fn hom_dim_numeric(f: &Field, q: &BoundQuiver, m: &MatrixRepresentation, n: &MatrixRepresentation) -> usize {
    hom_space(f, q, m, n).len()
}

/// A projective cover `P0 -> M` and its kernel.
pub struct ProjectiveCoverNumeric {
    /// Top multiplicity per vertex.
    pub top: Vec<usize>,
    /// One entry per summand of `P0`: its vertex and the paths spanning it.
    pub summands: Vec<(VertexId, rep::ProjectiveRep)>,
    pub p0: MatrixRepresentation,
    pub kernel: MatrixRepresentation,
    /// Columns spanning the kernel inside `P0`, per vertex.
    pub inclusion: Vec<Matrix>,
}

pub fn projective_cover_numeric(f: &Field, q: &BoundQuiver, m: &MatrixRepresentation) -> ProjectiveCoverNumeric {
    let nv = q.vertex_count();
    let mut generators: Vec<(VertexId, Vec<u64>)> = Vec::new();
    let mut top = vec![0; nv];
    for x in 0..nv {
        let d = m.dims[x];
        let mut space = RowSpace::new(*f);
        for &a in q.in_arrows(x) {
            let ma = &m.maps[a];
            for c in 0..ma.cols {
                space.insert(ma.column(c));
            }
        }
        for i in 0..d {
            let mut e = vec![0; d];
            e[i] = 1;
            if space.insert(e.clone()) {
                generators.push((x, e));
                top[x] += 1;
            }
        }
    }

    let summands: Vec<(VertexId, rep::ProjectiveRep)> =
        generators.iter().map(|(x, _)| (*x, projective_rep(q, *x))).collect();
    let p0 = direct_sum(q, &summands.iter().map(|(_, p)| p.rep.clone()).collect::<Vec<_>>());

    let mut inclusion = Vec::with_capacity(nv);
    for y in 0..nv {
        let mut cols = Vec::new();
        for ((_, g), (_, p)) in generators.iter().zip(&summands) {
            for path in &p.basis[y] {
                cols.push(m.apply_path(path, g, f));
            }
        }
        let pi = Matrix::from_columns(m.dims[y], &cols);
        assert_eq!(pi.rank(f), m.dims[y], "cover is not surjective");
        let ker = pi.nullspace(f);
        inclusion.push(Matrix::from_columns(p0.dims[y], &ker));
    }
    let kdims: Vec<usize> = inclusion.iter().map(|b| b.cols).collect();
    let kmaps = (0..q.arrow_count())
        .map(|a| {
            let (s, t) = (q.source(a), q.target(a));
            let image = p0.maps[a].mul(&inclusion[s], f);
            inclusion[t].solve(&image, f).expect("kernel is a subrepresentation")
        })
        .collect();
    ProjectiveCoverNumeric {
        top,
        summands,
        p0,
        kernel: MatrixRepresentation { dims: kdims, maps: kmaps },
        inclusion,
    }
}

/// `dim Ext^1(m, n)`: `Hom(K, n)` modulo maps extending to the cover.
pub fn ext1_dim_numeric(f: &Field, q: &BoundQuiver, m: &MatrixRepresentation, n: &MatrixRepresentation) -> usize {
    ext1_dim_with_cover(f, q, &projective_cover_numeric(f, q, m), n)
}

pub fn ext1_dim_with_cover(
    f: &Field,
    q: &BoundQuiver,
    cover: &ProjectiveCoverNumeric,
    n: &MatrixRepresentation,
) -> usize {
    let hom_kn = hom_dim_numeric(f, q, &cover.kernel, n);
    if hom_kn == 0 {
        return 0;
    }
    // Hom(P(x), N) = N_x: a vector e in N_x gives the map sending path p to N_p e.
    let nv = q.vertex_count();
    let mut restricted = RowSpace::new(*f);
    let mut copy_offset = vec![0; nv];
    for (x, p) in &cover.summands {
        for i in 0..n.dims[*x] {
            let mut e = vec![0; n.dims[*x]];
            e[i] = 1;
            let mut flat = Vec::new();
            for y in 0..nv {
                let mut phi = Matrix::zeros(n.dims[y], cover.p0.dims[y]);
                for (k, path) in p.basis[y].iter().enumerate() {
                    let img = n.apply_path(path, &e, f);
                    for (r, &val) in img.iter().enumerate() {
                        phi.set(r, copy_offset[y] + k, val);
                    }
                }
                flat.extend_from_slice(phi.mul(&cover.inclusion[y], f).entries());
            }
            restricted.insert(flat);
        }
        for y in 0..nv {
            copy_offset[y] += p.basis[y].len();
        }
    }
    hom_kn - restricted.dim()
}

/// The scalar `l` with `e - l` nilpotent, for `e` in a local endomorphism ring.
fn eigenvalue(f: &Field, e: &Morphism, dim: usize) -> u64 {
    let n = f.from_usize(dim);
    if n != 0 {
        let tr = e.blocks.iter().fold(0, |acc, b| f.add(acc, b.trace(f)));
        return f.mul(tr, f.inv(n));
    }
    (0..f.prime())
        .find(|&l| {
            e.blocks.iter().all(|b| {
                let shifted = b.scale_sub_identity(l, f);
                let mut pow = shifted.clone();
                for _ in 1..dim.max(1) {
                    pow = pow.mul(&shifted, f);
                }
                pow.is_zero()
            })
        })
        .expect("endomorphism ring is local")
}

/// Radical morphisms between two ambient indecomposables.
fn radical(f: &Field, q: &BoundQuiver, ambient: &[MatrixRepresentation], i: usize, j: usize) -> Vec<Morphism> {
    let basis = hom_space(f, q, &ambient[i], &ambient[j]);
    if i != j {
        return basis;
    }
    let dim = ambient[i].total_dim();
    let lambdas: Vec<u64> = basis.iter().map(|b| eigenvalue(f, b, dim)).collect();
    let Some(k) = lambdas.iter().position(|&l| l != 0) else {
        return basis;
    };
    // b - (l_b / l_k) b_k spans the kernel of the eigenvalue functional.
    let inv = f.inv(lambdas[k]);
    basis
        .iter()
        .enumerate()
        .filter(|&(idx, _)| idx != k)
        .map(|(idx, b)| {
            let c = f.mul(lambdas[idx], inv);
            Morphism {
                blocks: b
                    .blocks
                    .iter()
                    .zip(&basis[k].blocks)
                    .map(|(x, y)| {
                        let mut scaled = y.clone();
                        for r in 0..y.rows {
                            for col in 0..y.cols {
                                scaled.set(r, col, f.mul(c, y.get(r, col)));
                            }
                        }
                        x.sub(&scaled, f)
                    })
                    .collect(),
            }
        })
        .collect()
}

/// `dim rad(m, n) - dim rad^2(m, n)` computed inside the category spanned by
/// `ambient`, which must list every indecomposable exactly once.
pub fn irr_count(
    f: &Field,
    q: &BoundQuiver,
    m: &MatrixRepresentation,
    n: &MatrixRepresentation,
    ambient: &[MatrixRepresentation],
) -> Result<usize, OracleError> {
    let i = ambient.iter().position(|x| x == m).ok_or(OracleError::AmbientIncomplete)?;
    let j = ambient.iter().position(|x| x == n).ok_or(OracleError::AmbientIncomplete)?;
    let rad_mn = radical(f, q, ambient, i, j);
    let mut square = RowSpace::new(*f);
    for x in 0..ambient.len() {
        let first = radical(f, q, ambient, i, x);
        if first.is_empty() {
            continue;
        }
        let second = radical(f, q, ambient, x, j);
        for g in &second {
            for h in &first {
                square.insert(g.after(h, f).flatten());
            }
        }
    }
    Ok(rad_mn.len() - square.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::strings::{parse_word, StringWord};

    fn rep(q: &BoundQuiver, s: &str) -> MatrixRepresentation {
        matrix_rep(q, &parse_word(q, s).unwrap())
    }

    #[test]
    fn a2_homs() {
        let q = fixtures::a2();
        let f = Field::default();
        let (p1, s1, s2) = (rep(&q, "a"), rep(&q, "@1"), rep(&q, "@2"));
        assert_eq!(hom_dim_numeric(&f, &q, &p1, &s1), 1);
        assert_eq!(hom_dim_numeric(&f, &q, &p1, &s2), 0);
        assert_eq!(hom_dim_numeric(&f, &q, &s2, &p1), 1);
        assert_eq!(hom_dim_numeric(&f, &q, &p1, &p1), 1);
    }

    #[test]
    fn covers() {
        let f = Field::default();
        let q = fixtures::a2();
        let c = projective_cover_numeric(&f, &q, &rep(&q, "@1"));
        assert_eq!(c.p0, projective_rep(&q, 0).rep);
        assert_eq!(c.kernel.dims, vec![0, 1]);
        let q = fixtures::ex1();
        let c = projective_cover_numeric(&f, &q, &rep(&q, "@2"));
        assert_eq!(c.kernel.dims, vec![1, 0, 1, 0]);
        for v in 0..q.vertex_count() {
            let p = projective_rep(&q, v).rep;
            assert_eq!(projective_cover_numeric(&f, &q, &p).kernel.total_dim(), 0);
        }
    }

    #[test]
    fn ext_dims() {
        let f = Field::default();
        let q = fixtures::kronecker();
        assert_eq!(ext1_dim_numeric(&f, &q, &rep(&q, "@1"), &rep(&q, "@2")), 2);
        let q = fixtures::a2();
        assert_eq!(ext1_dim_numeric(&f, &q, &rep(&q, "@1"), &rep(&q, "@2")), 1);
        assert_eq!(ext1_dim_numeric(&f, &q, &rep(&q, "@2"), &rep(&q, "@1")), 0);
        assert_eq!(ext1_dim_numeric(&f, &q, &rep(&q, "a"), &rep(&q, "@2")), 0);
    }

    #[test]
    fn irreducible_counts_a2() {
        let f = Field::default();
        let q = fixtures::a2();
        let ambient: Vec<_> = ["@1", "@2", "a"].iter().map(|s| rep(&q, s)).collect();
        let (s1, s2, p1) = (&ambient[0], &ambient[1], &ambient[2]);
        assert_eq!(irr_count(&f, &q, s2, p1, &ambient), Ok(1));
        assert_eq!(irr_count(&f, &q, p1, s1, &ambient), Ok(1));
        assert_eq!(irr_count(&f, &q, s2, s1, &ambient), Ok(0));
        assert_eq!(irr_count(&f, &q, p1, p1, &ambient), Ok(0));
        let stranger = matrix_rep(&fixtures::a2(), &StringWord::Trivial(0));
        let partial = vec![ambient[1].clone()];
        assert_eq!(irr_count(&f, &q, &stranger, s2, &partial), Err(OracleError::AmbientIncomplete));
    }

    #[test]
    fn hom_from_projective_is_vertex_space() {
        let f = Field::default();
        let q = fixtures::ex1();
        let n = rep(&q, "beta gamma delta");
        for v in 0..q.vertex_count() {
            let p = projective_rep(&q, v).rep;
            assert_eq!(hom_dim_numeric(&f, &q, &p, &n), n.dims[v]);
        }
    }

    #[test]
    fn prime_independent() {
        let q = fixtures::ex1();
        let all: Vec<_> = crate::strings::enumerate_strings(&q, 10).into_iter().collect();
        let fields: Vec<Field> = [2, 101, 32003].iter().map(|&p| Field::new(p).unwrap()).collect();
        for a in &all {
            for b in &all {
                let dims: Vec<(usize, usize)> = fields
                    .iter()
                    .map(|f| {
                        let (ra, rb) = (matrix_rep(&q, a), matrix_rep(&q, b));
                        (hom_dim_numeric(f, &q, &ra, &rb), ext1_dim_numeric(f, &q, &ra, &rb))
                    })
                    .collect();
                assert!(dims.windows(2).all(|w| w[0] == w[1]));
            }
        }
    }
}
