//! Exact dense linear algebra over the scalar field: row echelon form, rank,
//! solving, and span membership.  Desk-scale only; no pivoting heuristics.

use crate::exact::FieldElement;

#[derive(Debug, Clone)]
pub struct Matrix {
    pub rows: Vec<Vec<FieldElement>>,
    pub ncols: usize,
    pub m: u8,
}

impl Matrix {
    pub fn new(ncols: usize, m: u8) -> Self {
        Matrix {
            rows: Vec::new(),
            ncols,
            m,
        }
    }

    pub fn from_rows(rows: Vec<Vec<FieldElement>>, ncols: usize, m: u8) -> Self {
        for r in &rows {
            assert_eq!(r.len(), ncols);
        }
        Matrix { rows, ncols, m }
    }

    pub fn push_row(&mut self, row: Vec<FieldElement>) {
        assert_eq!(row.len(), self.ncols);
        self.rows.push(row);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Reduced row echelon form in place; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.ncols {
            if row >= self.rows.len() {
                break;
            }
            let Some(p) = (row..self.rows.len()).find(|&r| !self.rows[r][col].is_zero()) else {
                continue;
            };
            self.rows.swap(row, p);
            let inv = self.rows[row][col].inverse().expect("pivot nonzero");
            for c in col..self.ncols {
                self.rows[row][c] = self.rows[row][c].mul(&inv);
            }
            for r in 0..self.rows.len() {
                if r != row && !self.rows[r][col].is_zero() {
                    let f = self.rows[r][col].clone();
                    for c in col..self.ncols {
                        let sub = self.rows[row][c].mul(&f);
                        self.rows[r][c] = self.rows[r][c].sub(&sub);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        self.rows.truncate(row);
        pivots
    }

    pub fn rank(mut self) -> usize {
        self.rref().len()
    }
}

/// Incremental span with online reduction; rows are kept in rref.
#[derive(Debug, Clone)]
pub struct Span {
    ncols: usize,
    m: u8,
    /// (pivot column, reduced row) sorted by pivot column.
    rows: Vec<(usize, Vec<FieldElement>)>,
}

impl Span {
    pub fn new(ncols: usize, m: u8) -> Self {
        Span {
            ncols,
            m,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Reduce `v` against the span in place; returns the residual.
    pub fn reduce(&self, mut v: Vec<FieldElement>) -> Vec<FieldElement> {
        for (piv, row) in &self.rows {
            if !v[*piv].is_zero() {
                let f = v[*piv].clone();
                v[*piv] = FieldElement::zero(self.m);
                for c in *piv + 1..self.ncols {
                    v[c].sub_mul_assign(&row[c], &f);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        self.reduce(v.to_vec()).iter().all(|x| x.is_zero())
    }

    /// Insert a vector; returns true if it enlarged the span.  Rows are kept
    /// in echelon (not reduced echelon) form, sorted by pivot column.
    pub fn insert(&mut self, v: Vec<FieldElement>) -> bool {
        let mut r = self.reduce(v);
        let Some(piv) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[piv].inverse().expect("nonzero");
        for c in piv..self.ncols {
            if !r[c].is_zero() {
                r[c] = r[c].mul(&inv);
            }
        }
        let pos = self.rows.partition_point(|(p, _)| *p < piv);
        self.rows.insert(pos, (piv, r));
        true
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &Vec<FieldElement>> {
        self.rows.iter().map(|(_, r)| r)
    }

    /// Coordinates of `v` on the echelonized basis, if v lies in the span.
    pub fn coordinates(&self, v: &[FieldElement]) -> Option<Vec<FieldElement>> {
        let mut v = v.to_vec();
        let mut coords = vec![FieldElement::zero(self.m); self.rows.len()];
        for (k, (piv, row)) in self.rows.iter().enumerate() {
            if !v[*piv].is_zero() {
                let f = v[*piv].clone();
                v[*piv] = FieldElement::zero(self.m);
                for c in *piv + 1..self.ncols {
                    v[c].sub_mul_assign(&row[c], &f);
                }
                coords[k] = f;
            }
        }
        if v.iter().all(|x| x.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }
}

/// Expresses vectors as combinations of a fixed independent spanning set,
/// in the order the set was inserted.
#[derive(Debug, Clone)]
pub struct CoordSolver {
    ncols: usize,
    m: u8,
    /// (pivot, echelon row, expression of the row in the inserted basis)
    rows: Vec<(usize, Vec<FieldElement>, Vec<FieldElement>)>,
    nbasis: usize,
}

impl CoordSolver {
    pub fn new(ncols: usize, m: u8) -> Self {
        CoordSolver {
            ncols,
            m,
            rows: Vec::new(),
            nbasis: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.nbasis
    }

    /// Insert a basis vector; panics if it is dependent on earlier ones.
    pub fn insert(&mut self, v: Vec<FieldElement>) {
        let mut r = v;
        let mut combo = vec![FieldElement::zero(self.m); self.nbasis + 1];
        combo[self.nbasis] = FieldElement::one(self.m);
        for (_, _, c) in self.rows.iter_mut() {
            c.push(FieldElement::zero(self.m));
        }
        for (piv, row, rc) in &self.rows {
            if !r[*piv].is_zero() {
                let f = r[*piv].clone();
                r[*piv] = FieldElement::zero(self.m);
                for c in *piv + 1..self.ncols {
                    r[c].sub_mul_assign(&row[c], &f);
                }
                for (k, x) in rc.iter().enumerate() {
                    combo[k].sub_mul_assign(x, &f);
                }
            }
        }
        let piv = r
            .iter()
            .position(|x| !x.is_zero())
            .expect("inserted vector must be independent");
        let inv = r[piv].inverse().expect("nonzero");
        for c in piv..self.ncols {
            r[c] = r[c].mul(&inv);
        }
        for x in combo.iter_mut() {
            *x = x.mul(&inv);
        }
        let pos = self.rows.partition_point(|(p, _, _)| *p < piv);
        self.rows.insert(pos, (piv, r, combo));
        self.nbasis += 1;
    }

    /// Coordinates of `v` on the inserted basis, if it lies in the span.
    pub fn express(&self, v: &[FieldElement]) -> Option<Vec<FieldElement>> {
        let mut v = v.to_vec();
        let mut out = vec![FieldElement::zero(self.m); self.nbasis];
        for (piv, row, rc) in &self.rows {
            if !v[*piv].is_zero() {
                let f = v[*piv].clone();
                v[*piv] = FieldElement::zero(self.m);
                for c in *piv + 1..self.ncols {
                    v[c].sub_mul_assign(&row[c], &f);
                }
                for (k, x) in rc.iter().enumerate() {
                    out[k] = out[k].add(&x.mul(&f));
                }
            }
        }
        if v.iter().all(|x| x.is_zero()) {
            Some(out)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::FieldElement;

    fn fe(n: i64) -> FieldElement {
        FieldElement::from_int(1, n)
    }

    #[test]
    fn span_rank_and_membership() {
        let mut s = Span::new(3, 1);
        assert!(s.insert(vec![fe(1), fe(2), fe(3)]));
        assert!(s.insert(vec![fe(0), fe(1), fe(1)]));
        assert!(!s.insert(vec![fe(1), fe(3), fe(4)]));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[fe(2), fe(5), fe(7)]));
        assert!(!s.contains(&[fe(0), fe(0), fe(1)]));
        let coords = s.coordinates(&[fe(2), fe(5), fe(7)]).unwrap();
        assert_eq!(coords.len(), 2);
    }

    #[test]
    fn coord_solver_expresses_in_inserted_order() {
        let mut cs = CoordSolver::new(3, 1);
        cs.insert(vec![fe(1), fe(1), fe(0)]);
        cs.insert(vec![fe(1), fe(-1), fe(0)]);
        // 3*(1,1,0) + 2*(1,-1,0) = (5,1,0)
        let coords = cs.express(&[fe(5), fe(1), fe(0)]).unwrap();
        assert_eq!(coords, vec![fe(3), fe(2)]);
        assert!(cs.express(&[fe(0), fe(0), fe(1)]).is_none());
    }

    #[test]
    fn rref_rank() {
        let rows = vec![
            vec![fe(1), fe(2)],
            vec![fe(2), fe(4)],
            vec![fe(0), fe(1)],
        ];
        let m = Matrix::from_rows(rows, 2, 1);
        assert_eq!(m.rank(), 2);
    }
}
