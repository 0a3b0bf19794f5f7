//! Dense matrices over Q(i).

use std::fmt;
use std::ops::{Index, IndexMut};

use super::poly::Poly;
use super::scalar::GaussRat;
use crate::error::{Error, Result};

/// Row-major dense matrix over the Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<GaussRat>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![GaussRat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = GaussRat::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussRat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Build from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<GaussRat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Build from small integers, convenient in tests.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| GaussRat::from_int(x)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    /// Build from column vectors.
    pub fn from_cols(cols: &[Vec<GaussRat>]) -> Result<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        if cols.iter().any(|col| col.len() != r) {
            return Err(Error::Shape("ragged columns".into()));
        }
        Ok(Mat::from_fn(r, c, |i, j| cols[j][i].clone()))
    }

    pub fn diag(entries: &[GaussRat]) -> Self {
        let mut m = Mat::zero(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[GaussRat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<GaussRat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[GaussRat] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussRat::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Entrywise complex conjugation.
    pub fn conj(&self) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(GaussRat::conj).collect(),
        }
    }

    pub fn trace(&self) -> GaussRat {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .sum()
    }

    pub fn scale(&self, c: &GaussRat) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert_eq!(
            (self.rows, self.cols),
            (o.rows, o.cols),
            "shape mismatch in add"
        );
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        assert_eq!(
            (self.rows, self.cols),
            (o.rows, o.cols),
            "shape mismatch in sub"
        );
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "shape mismatch in mul");
        let mut out = Mat::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[GaussRat]) -> Vec<GaussRat> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        (0..self.rows)
            .map(|i| super::scalar::dot(self.row(i), v))
            .collect()
    }

    /// `AB − BA`.
    pub fn commutator(&self, o: &Mat) -> Mat {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn pow(&self, e: u32) -> Mat {
        let mut acc = Mat::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `exp(M)` as a finite series; errors unless `M` is nilpotent.
    pub fn exp_nilpotent(&self) -> Result<Mat> {
        let n = self.rows;
        let mut acc = Mat::identity(n);
        let mut term = Mat::identity(n);
        for k in 1..=n {
            term = term.mul(self).scale(&GaussRat::frac(1, k as i64));
            if term.is_zero() {
                return Ok(acc);
            }
            acc = acc.add(&term);
        }
        // an n×n nilpotent matrix has Mⁿ = 0
        Err(Error::NotNilpotent)
    }

    /// Reduced row echelon form and the pivot columns.
    ///
    /// Pivots are chosen as the first nonzero entry in each column.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            for j in c..m.cols {
                if !m[(r, j)].is_zero() {
                    m[(r, j)] = &m[(r, j)] * &inv;
                }
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        let d = &f * &m[(r, j)];
                        m[(i, j)] -= &d;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<GaussRat>> {
        let (r, pivots) = self.rref();
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![GaussRat::zero(); self.cols];
            v[free] = GaussRat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&r[(row, free)];
            }
            out.push(v);
        }
        out
    }

    /// Solve `self · x = rhs`; free variables are set to zero.
    pub fn solve(&self, rhs: &[GaussRat]) -> Result<Vec<GaussRat>> {
        if rhs.len() != self.rows {
            return Err(Error::Shape(format!(
                "rhs has {} entries, matrix has {} rows",
                rhs.len(),
                self.rows
            )));
        }
        let aug = Mat::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                rhs[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(Error::Inconsistent);
        }
        let mut x = vec![GaussRat::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(row, self.cols)].clone();
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let aug = Mat::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                GaussRat::one()
            } else {
                GaussRat::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        Ok(Mat::from_fn(n, n, |i, j| r[(i, j + n)].clone()))
    }

    /// Characteristic polynomial `det(xI − M)` via reduction to Hessenberg form.
    pub fn char_poly(&self) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h[(i, m - 1)].is_zero()) else {
                continue;
            };
            if i != m {
                h.swap_rows(i, m);
                h.swap_cols(i, m);
            }
            let inv = h[(m, m - 1)].inv().expect("pivot is nonzero");
            for j in m + 1..n {
                if h[(j, m - 1)].is_zero() {
                    continue;
                }
                let u = &h[(j, m - 1)] * &inv;
                for k in 0..n {
                    if !h[(m, k)].is_zero() {
                        let d = &u * &h[(m, k)];
                        h[(j, k)] -= &d;
                    }
                }
                for k in 0..n {
                    if !h[(k, j)].is_zero() {
                        let d = &u * &h[(k, j)];
                        h[(k, m)] += &d;
                    }
                }
            }
        }
        // Recurrence on leading principal minors, 1-based indices as hh(a, b).
        let hh = |a: usize, b: usize| &h[(a - 1, b - 1)];
        let mut p: Vec<Poly> = vec![Poly::one()];
        for m in 1..=n {
            let mut pm = Poly::linear(-hh(m, m), GaussRat::one()).mul(&p[m - 1]);
            let mut t = GaussRat::one();
            for i in (1..m).rev() {
                t = &t * hh(i + 1, i);
                if t.is_zero() {
                    break;
                }
                let c = hh(i, m) * &t;
                if !c.is_zero() {
                    pm = pm.sub(&p[i - 1].scale(&c));
                }
            }
            p.push(pm);
        }
        Ok(p.pop().expect("n+1 polynomials"))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = GaussRat;
    fn index(&self, (i, j): (usize, usize)) -> &GaussRat {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussRat {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// True when the vectors are linearly independent.
pub fn independent(vectors: &[Vec<GaussRat>]) -> bool {
    if vectors.is_empty() {
        return true;
    }
    Mat::from_cols(vectors)
        .map(|m| m.rank() == vectors.len())
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(Mat::identity(3).kernel().is_empty());
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        assert_eq!(Mat::zero(2, 2).kernel().len(), 2);
    }

    #[test]
    fn kernel_of_rank_one_hermitian() {
        let m =
            Mat::from_rows(vec![vec![g(1), GaussRat::i()], vec![-GaussRat::i(), g(1)]]).unwrap();
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(GaussRat::is_zero));
        // proportional to (i, -1)
        let ratio = &k[0][0] / &GaussRat::i();
        assert_eq!(k[0][1], -ratio);
    }

    #[test]
    fn char_poly_of_diagonal() {
        let p = Mat::diag(&[g(1), g(2)]).char_poly().unwrap();
        let expect = Poly::linear(g(-1), g(1)).mul(&Poly::linear(g(-2), g(1)));
        assert_eq!(p, expect);
        assert_eq!(Mat::zero(2, 2).char_poly().unwrap(), Poly::monomial(2));
    }

    #[test]
    fn char_poly_of_companion() {
        // companion of x^2 - x - 1
        let c = Mat::from_ints(&[&[0, 1], &[1, 1]]);
        let p = c.char_poly().unwrap();
        assert_eq!(p, Poly::new(vec![g(-1), g(-1), g(1)]));
    }

    #[test]
    fn char_poly_rejects_non_square() {
        assert!(matches!(
            Mat::zero(2, 3).char_poly(),
            Err(Error::NonSquare { .. })
        ));
    }

    #[test]
    fn solve_basic() {
        assert_eq!(
            Mat::identity(2).solve(&[g(1), g(2)]).unwrap(),
            vec![g(1), g(2)]
        );
        assert_eq!(
            Mat::zero(2, 2).solve(&[g(0), g(0)]).unwrap(),
            vec![g(0), g(0)]
        );
        assert_eq!(
            Mat::zero(2, 2).solve(&[g(1), g(0)]),
            Err(Error::Inconsistent)
        );
    }

    #[test]
    fn inverse_round_trip() {
        let m = Mat::from_rows(vec![vec![g(2), GaussRat::i()], vec![g(1), g(3)]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(2));
    }
}
