use std::fmt;

use super::field::Field;
use super::lognorm::LogNorm;
use super::poly::Poly;

/// Dense matrix over F_q[T], row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

impl fmt::Debug for PolyMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(|p| p.to_string()).collect()).collect();
        write!(f, "PolyMat{rows:?}")
    }
}

impl PolyMat {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> PolyMat {
        PolyMat { field: field.clone(), rows, cols, data: vec![Poly::zero(field); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> PolyMat {
        let mut m = PolyMat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Poly::one(field));
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Poly>>) -> PolyMat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend(row);
        }
        PolyMat { field: field.clone(), rows: r, cols: c, data }
    }

    pub fn parse(field: &Field, rows: &[&[&str]]) -> crate::error::Result<PolyMat> {
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|s| Poly::parse(field, s)).collect())
            .collect::<crate::error::Result<Vec<Vec<Poly>>>>()?;
        Ok(PolyMat::from_rows(field, rows))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Poly) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Poly] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Row degree: max entry degree, `Bottom` for a zero row.
    pub fn row_degree(&self, i: usize) -> LogNorm {
        self.row(i).iter().map(Poly::lognorm).max().unwrap_or(LogNorm::Bottom)
    }

    pub fn max_degree(&self) -> LogNorm {
        self.data.iter().map(Poly::lognorm).max().unwrap_or(LogNorm::Bottom)
    }

    pub fn mul(&self, other: &PolyMat) -> PolyMat {
        assert_eq!(self.cols, other.rows);
        let mut out = PolyMat::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Poly::zero(&self.field);
                for k in 0..self.cols {
                    if !self.get(i, k).is_zero() && !other.get(k, j).is_zero() {
                        acc = &acc + &(self.get(i, k) * other.get(k, j));
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Poly]) -> Vec<Poly> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|j| {
                v.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .fold(Poly::zero(&self.field), |acc, (i, c)| &acc + &(c * self.get(i, j)))
            })
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Poly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Poly::one(&self.field);
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = Poly::one(&self.field);
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !m.get(r, k).is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        negate = !negate;
                    }
                    None => return Poly::zero(&self.field),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(m.get(i, j) * m.get(k, k)) - &(m.get(i, k) * m.get(k, j));
                    let v = num.exact_div(&prev).expect("Bareiss division is exact");
                    m.set(i, j, v);
                }
                m.set(i, k, Poly::zero(&self.field));
            }
            prev = m.get(k, k).clone();
        }
        let d = m.get(n - 1, n - 1).clone();
        if negate {
            -&d
        } else {
            d
        }
    }

    /// Minor with row `skip_r` and column `skip_c` deleted.
    pub fn minor(&self, skip_r: usize, skip_c: usize) -> PolyMat {
        let rows = (0..self.rows)
            .filter(|&i| i != skip_r)
            .map(|i| (0..self.cols).filter(|&j| j != skip_c).map(|j| self.get(i, j).clone()).collect())
            .collect();
        PolyMat::from_rows(&self.field, rows)
    }

    /// Largest degree among the cofactors, i.e. of the adjugate entries.
    pub fn adjugate_max_degree(&self) -> LogNorm {
        assert_eq!(self.rows, self.cols);
        if self.rows == 1 {
            return LogNorm::Finite(0);
        }
        let mut best = LogNorm::Bottom;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let cofactor = if self.rows == 3 {
                    let r: Vec<usize> = (0..3).filter(|&x| x != i).collect();
                    let c: Vec<usize> = (0..3).filter(|&x| x != j).collect();
                    &(self.get(r[0], c[0]) * self.get(r[1], c[1])) - &(self.get(r[0], c[1]) * self.get(r[1], c[0]))
                } else {
                    self.minor(i, j).det()
                };
                best = best.max(cofactor.lognorm());
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_matches_cofactor_expansion() {
        let f = Field::prime(3).unwrap();
        let m = PolyMat::parse(&f, &[&["T+1", "2", "T^2"], &["0", "T", "1"], &["2*T", "1", "T+2"]]).unwrap();
        let mut expansion = Poly::zero(&f);
        for j in 0..3 {
            let term = m.get(0, j) * &m.minor(0, j).det();
            expansion = if j % 2 == 0 { &expansion + &term } else { &expansion - &term };
        }
        assert_eq!(m.det(), expansion);
    }

    #[test]
    fn det_needs_pivoting() {
        let f = Field::prime(2).unwrap();
        let m = PolyMat::parse(&f, &[&["0", "1"], &["T", "0"]]).unwrap();
        assert_eq!(m.det(), Poly::parse(&f, "T").unwrap());
    }
}
