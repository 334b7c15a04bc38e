//! Dense linear algebra over a prime field.

use super::OracleError;

pub const DEFAULT_PRIME: u64 = 101;

/// Arithmetic modulo a prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Field {
    p: u64,
}

impl Default for Field {
    fn default() -> Self {
        Field { p: DEFAULT_PRIME }
    }
}

impl Field {
    pub fn new(p: u64) -> Result<Field, OracleError> {
        let prime = (2..(1 << 31)).contains(&p) && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if prime {
            Ok(Field { p })
        } else {
            Err(OracleError::NotPrime(p))
        }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero");
        let mut base = a % self.p;
        let mut e = self.p - 2;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }

    pub fn from_usize(&self, n: usize) -> u64 {
        n as u64 % self.p
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_columns(rows: usize, cols: &[Vec<u64>]) -> Matrix {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[u64] {
        &self.data
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Matrix, f: &Field) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * out.cols + j;
                    out.data[idx] = (out.data[idx] + a * other.get(k, j)) % f.prime();
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix, f: &Field) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect(),
        }
    }

    pub fn scale_sub_identity(&self, lambda: u64, f: &Field) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let v = f.sub(m.get(i, i), lambda);
            m.set(i, i, v);
        }
        m
    }

    pub fn trace(&self, f: &Field) -> u64 {
        (0..self.rows.min(self.cols)).fold(0, |acc, i| f.add(acc, self.get(i, i)))
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self, f: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..self.cols {
                    self.data.swap(pr * self.cols + c, row * self.cols + c);
                }
            }
            let inv = f.inv(self.get(row, col));
            for c in 0..self.cols {
                let v = f.mul(self.get(row, c), inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row {
                    let factor = self.get(r, col);
                    if factor != 0 {
                        for c in 0..self.cols {
                            let v = f.sub(self.get(r, c), f.mul(factor, self.get(row, c)));
                            self.set(r, c, v);
                        }
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.clone().rref(f).len()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn nullspace(&self, f: &Field) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut x = vec![0; self.cols];
                x[fc] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    x[pc] = f.neg(m.get(r, fc));
                }
                x
            })
            .collect()
    }

    /// `X` with `self * X = rhs`, for `self` of full column rank.
    pub fn solve(&self, rhs: &Matrix, f: &Field) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            for c in 0..rhs.cols {
                aug.set(r, self.cols + c, rhs.get(r, c));
            }
        }
        let pivots = aug.rref(f);
        // A pivot in the right-hand block means no solution.
        let ok = pivots.len() == self.cols && pivots.iter().enumerate().all(|(i, &p)| p == i);
        if !ok {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for r in 0..self.cols {
            for c in 0..rhs.cols {
                x.set(r, c, aug.get(r, self.cols + c));
            }
        }
        Some(x)
    }
}

/// Incrementally maintained row space, for rank counting.
#[derive(Clone, Debug)]
pub struct RowSpace {
    field: Field,
    rows: Vec<(usize, Vec<u64>)>,
}

impl RowSpace {
    pub fn new(field: Field) -> RowSpace {
        RowSpace { field, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v`; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        let f = self.field;
        for (pivot, row) in &self.rows {
            let factor = v[*pivot];
            if factor != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => false,
            Some(p) => {
                let inv = f.inv(v[p]);
                for x in v.iter_mut() {
                    *x = f.mul(*x, inv);
                }
                for (_, row) in self.rows.iter_mut() {
                    let factor = row[p];
                    if factor != 0 {
                        for (x, &y) in row.iter_mut().zip(&v) {
                            *x = f.sub(*x, f.mul(factor, y));
                        }
                    }
                }
                self.rows.push((p, v));
                true
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_check() {
        assert!(Field::new(101).is_ok());
        assert!(Field::new(2).is_ok());
        assert!(Field::new(32003).is_ok());
        assert!(Field::new(100).is_err());
        assert!(Field::new(1).is_err());
    }

    #[test]
    fn inverses() {
        let f = Field::new(101).unwrap();
        for a in 1..101 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn rank_and_nullspace() {
        let f = Field::default();
        let m = Matrix::from_columns(2, &[vec![1, 2], vec![2, 4], vec![0, 1]]);
        assert_eq!(m.rank(&f), 2);
        let ns = m.nullspace(&f);
        assert_eq!(ns.len(), 1);
        let x = Matrix::from_columns(3, &ns);
        assert!(m.mul(&x, &f).is_zero());
    }

    #[test]
    fn solve_full_column_rank() {
        let f = Field::default();
        let a = Matrix::from_columns(3, &[vec![1, 0, 1], vec![0, 1, 1]]);
        let x = Matrix::from_columns(2, &[vec![3, 5]]);
        let b = a.mul(&x, &f);
        assert_eq!(a.solve(&b, &f), Some(x));
        let bad = Matrix::from_columns(3, &[vec![1, 0, 0]]);
        assert_eq!(a.solve(&bad, &f), None);
    }

    #[test]
    fn row_space() {
        let mut rs = RowSpace::new(Field::new(2).unwrap());
        assert!(rs.insert(vec![1, 1, 0]));
        assert!(rs.insert(vec![0, 1, 1]));
        assert!(!rs.insert(vec![1, 0, 1]));
        assert_eq!(rs.dim(), 2);
    }
}
