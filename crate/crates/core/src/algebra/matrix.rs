use super::field::{FqElem, Field};

/// Dense row-major matrix over F_q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FqMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FqElem>,
}

impl FqMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> FqMatrix {
        FqMatrix { field: field.clone(), rows, cols, data: vec![FqElem::ZERO; rows * cols] }
    }

    pub fn from_rows(field: &Field, rows: &[Vec<u32>]) -> FqMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = FqMatrix::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, field.elem(v).expect("entry out of range"));
            }
        }
        m
    }

    pub fn identity(field: &Field, n: usize) -> FqMatrix {
        let mut m = FqMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FqElem::ONE);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn field(&self) -> &Field {
        &self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FqElem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: FqElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul_vec(&self, v: &[FqElem]) -> Vec<FqElem> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.field.dot((0..self.cols).map(|j| (self.get(i, j), v[j]))))
            .collect()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, row * self.cols + j);
                }
            }
            let inv = f.inv(self.get(row, col)).expect("nonzero pivot");
            for j in col..self.cols {
                let v = f.mul(self.get(row, j), inv);
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor.is_zero() {
                    continue;
                }
                for j in col..self.cols {
                    let v = f.sub(self.get(r, j), f.mul(factor, self.get(row, j)));
                    self.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right nullspace `{v : M v = 0}`, one vector per free
    /// column in ascending column order.
    pub fn nullspace(&self) -> Vec<Vec<FqElem>> {
        let f = &self.field;
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![FqElem::ZERO; self.cols];
                v[free] = FqElem::ONE;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.get(r, free));
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_trivial_nullspace() {
        let f = Field::prime(2).unwrap();
        assert!(FqMatrix::identity(&f, 2).nullspace().is_empty());
    }

    #[test]
    fn zero_row_has_full_nullspace() {
        let f = Field::prime(2).unwrap();
        assert_eq!(FqMatrix::zeros(&f, 1, 2).nullspace().len(), 2);
    }

    #[test]
    fn hankel_padded_example() {
        let f = Field::prime(2).unwrap();
        let m = FqMatrix::from_rows(&f, &[vec![1, 1, 1], vec![1, 0, 1]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&ns[0]).iter().all(|c| c.is_zero()));
        // by hand: x2 = 0 from row difference, x0 = x1 = x2 ... solution (1,0,1)
        assert_eq!(ns[0], vec![FqElem(1), FqElem(0), FqElem(1)]);
    }

    #[test]
    fn nullspace_vectors_are_annihilated_gf9() {
        let f = Field::with_order(9).unwrap();
        let m = FqMatrix::from_rows(&f, &[vec![1, 4, 7, 2], vec![3, 5, 0, 8], vec![4, 0, 7, 1]]);
        let ns = m.nullspace();
        assert!(!ns.is_empty());
        for v in ns {
            assert!(m.mul_vec(&v).iter().all(|c| c.is_zero()));
        }
    }
}
