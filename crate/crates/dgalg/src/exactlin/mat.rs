//! Dense matrices over an exact field, with reduced row-echelon machinery.
//!
//! Problem sizes stay in the hundreds of rows, so everything is dense
//! row-major; inner loops skip zero entries because the matrices arising
//! from structure constants are mostly zero.

use super::scalar::{FieldSpec, Scalar};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {} [", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn from_entries(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Mat {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        for e in &entries {
            field.check(e).expect("entry from wrong field");
        }
        Mat { field, rows, cols, entries }
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Mat {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Mat::from_entries(field, rows, cols, entries)
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Mat {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "row length mismatch");
            entries.extend(row);
        }
        Mat::from_entries(field, nrows, cols, entries)
    }

    /// Builds a matrix from integer literals; test and builder convenience.
    pub fn from_i64(field: FieldSpec, rows: usize, cols: usize, data: &[i64]) -> Mat {
        assert_eq!(data.len(), rows * cols);
        Mat::from_fn(field, rows, cols, |r, c| field.from_i64(data[r * cols + c]))
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Mat {
        Mat { field, rows, cols, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Scalar> {
        self.row(r).to_vec()
    }

    pub fn col_vec(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Mat { field: self.field, rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Mat { field: self.field, rows: self.rows, cols: self.cols, entries }
    }

    pub fn neg(&self) -> Mat {
        let entries = self.entries.iter().map(|a| -a).collect();
        Mat { field: self.field, rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        let entries = self.entries.iter().map(|a| a * s).collect();
        Mat { field: self.field, rows: self.rows, cols: self.cols, entries }
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = Mat::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(r, c);
                    let v = cur + &(a * b);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.at(r, c);
                if a.is_zero() || v[c].is_zero() {
                    continue;
                }
                out[r] = &out[r] + &(a * &v[c]);
            }
        }
        out
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        Mat::from_fn(self.field, self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self.at(r, c).clone()
            } else {
                other.at(r - self.rows, c).clone()
            }
        })
    }

    /// Selects the given rows and columns, in order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Mat {
        Mat::from_fn(self.field, rows.len(), cols.len(), |r, c| {
            self.at(rows[r], cols[c]).clone()
        })
    }

    /// Reduced row-echelon form together with the pivot column indices.
    /// The result is the unique canonical representative of the row space.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pr = 0usize;
        for pc in 0..m.cols {
            let Some(sel) = (pr..m.rows).find(|&r| !m.at(r, pc).is_zero()) else {
                continue;
            };
            if sel != pr {
                for c in 0..m.cols {
                    m.entries.swap(pr * m.cols + c, sel * m.cols + c);
                }
            }
            let inv = m.at(pr, pc).inv();
            for c in pc..m.cols {
                let v = m.at(pr, c) * &inv;
                m.set(pr, c, v);
            }
            for r in 0..m.rows {
                if r == pr || m.at(r, pc).is_zero() {
                    continue;
                }
                let factor = m.at(r, pc).clone();
                for c in pc..m.cols {
                    if m.at(pr, c).is_zero() {
                        continue;
                    }
                    let v = m.at(r, c) - &(&factor * m.at(pr, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(pc);
            pr += 1;
            if pr == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A canonical (rref) basis of the right null space; rows are the basis
    /// vectors, so `self * v = 0` for every row `v`.
    pub fn kernel_basis(&self) -> Mat {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set[*c]).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.at(i, f);
            }
            rows.push(v);
        }
        let raw = Mat::from_rows(self.field, self.cols, rows);
        // Canonicalize so equal kernels have identical matrices.
        raw.rref().0.drop_zero_rows()
    }

    pub fn drop_zero_rows(&self) -> Mat {
        let keep: Vec<usize> = (0..self.rows)
            .filter(|&r| self.row(r).iter().any(|e| !e.is_zero()))
            .collect();
        let all: Vec<usize> = (0..self.cols).collect();
        self.submatrix(&keep, &all)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(self.field, n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let left: Vec<usize> = (0..n).collect();
        let right: Vec<usize> = (n..2 * n).collect();
        Some(r.submatrix(&left, &right))
    }

    /// Flattens row-major into a single vector.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    pub fn unflatten(field: FieldSpec, rows: usize, cols: usize, flat: Vec<Scalar>) -> Mat {
        Mat::from_entries(field, rows, cols, flat)
    }
}

/// Incremental rref accumulator. Rows are fed one at a time and the reduced
/// echelon set is maintained; used for kernel computations whose constraint
/// matrices are far taller than they are wide.
pub struct RowReducer {
    field: FieldSpec,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowReducer {
    pub fn new(field: FieldSpec, ambient: usize) -> Self {
        RowReducer { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `row` against the accumulated basis (returns the residual).
    pub fn reduce(&self, mut row: Vec<Scalar>) -> Vec<Scalar> {
        assert_eq!(row.len(), self.ambient);
        for (i, &p) in self.pivots.iter().enumerate() {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            let basis = &self.rows[i];
            for c in p..self.ambient {
                if basis[c].is_zero() {
                    continue;
                }
                row[c] = &row[c] - &(&factor * &basis[c]);
            }
        }
        row
    }

    /// Adds a row; returns true if it enlarged the span.
    pub fn add_row(&mut self, row: Vec<Scalar>) -> bool {
        let mut row = self.reduce(row);
        let Some(p) = row.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let inv = row[p].inv();
        for c in p..self.ambient {
            if !row[c].is_zero() {
                row[c] = &row[c] * &inv;
            }
        }
        // Back-eliminate the new pivot from the existing rows.
        for (i, existing) in self.rows.iter_mut().enumerate() {
            let _ = i;
            if existing[p].is_zero() {
                continue;
            }
            let factor = existing[p].clone();
            for c in p..self.ambient {
                if row[c].is_zero() {
                    continue;
                }
                existing[c] = &existing[c] - &(&factor * &row[c]);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, row);
        true
    }

    pub fn contains(&self, row: &[Scalar]) -> bool {
        self.reduce(row.to_vec()).iter().all(Scalar::is_zero)
    }

    /// The accumulated rref basis as a matrix.
    pub fn basis(&self) -> Mat {
        Mat::from_rows(self.field, self.ambient, self.rows.clone())
    }
}

/// Solves coordinate problems against a fixed spanning set: given rows
/// `A`, expresses vectors as linear combinations of those rows.
pub struct SpanSolver {
    ambient: usize,
    nrows: usize,
    rref: Mat,
    transform: Mat, // rref = transform * original
    pivots: Vec<usize>,
}

impl SpanSolver {
    pub fn new(rows: &Mat) -> Self {
        let aug = rows.hstack(&Mat::identity(rows.field(), rows.rows()));
        // rref of the augmented matrix; pivots restricted to the left block
        let (r, pivots) = aug.rref();
        let left: Vec<usize> = (0..rows.cols()).collect();
        let right: Vec<usize> = (rows.cols()..rows.cols() + rows.rows()).collect();
        let all_rows: Vec<usize> = (0..rows.rows()).collect();
        let rref = r.submatrix(&all_rows, &left);
        let transform = r.submatrix(&all_rows, &right);
        let pivots: Vec<usize> = pivots.into_iter().filter(|&p| p < rows.cols()).collect();
        SpanSolver { ambient: rows.cols(), nrows: rows.rows(), rref, transform, pivots }
    }

    /// Coordinates of `v` in terms of the original rows, or None when `v`
    /// lies outside their span. When the rows are dependent an arbitrary
    /// consistent solution is returned.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient);
        let field = self.rref.field();
        let mut residual = v.to_vec();
        let mut combo = vec![field.zero(); self.nrows];
        for (i, &p) in self.pivots.iter().enumerate() {
            if residual[p].is_zero() {
                continue;
            }
            let factor = residual[p].clone();
            for c in 0..self.ambient {
                let b = self.rref.at(i, c);
                if b.is_zero() {
                    continue;
                }
                residual[c] = &residual[c] - &(&factor * b);
            }
            for j in 0..self.nrows {
                let t = self.transform.at(i, j);
                if t.is_zero() {
                    continue;
                }
                combo[j] = &combo[j] + &(&factor * t);
            }
        }
        if residual.iter().all(Scalar::is_zero) {
            Some(combo)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn rref_identity_case() {
        let m = Mat::identity(q(), 2);
        let (r, pivots) = m.rref();
        assert_eq!(r, m);
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn rref_forced_elimination() {
        let m = Mat::from_i64(q(), 2, 2, &[2, 4, 1, 2]);
        let (r, pivots) = m.rref();
        assert_eq!(r, Mat::from_i64(q(), 2, 2, &[1, 2, 0, 0]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn rref_idempotent() {
        let m = Mat::from_i64(q(), 3, 4, &[1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 1, 0]);
        let (r1, _) = m.rref();
        let (r2, _) = r1.rref();
        assert_eq!(r1, r2);
    }

    #[test]
    fn kernel_identity_is_zero() {
        let m = Mat::identity(q(), 3);
        assert_eq!(m.kernel_basis().rows(), 0);
    }

    #[test]
    fn kernel_forced() {
        let m = Mat::from_i64(q(), 1, 2, &[1, 2]);
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 1);
        // canonical representative of span{(-2, 1)}
        assert_eq!(
            k,
            Mat::from_fn(q(), 1, 2, |_, c| if c == 0 { q().one() } else { q().from_ratio(-1, 2) })
        );
        assert!(m.apply(&k.row_vec(0)).iter().all(Scalar::is_zero));
    }

    #[test]
    fn inverse_round_trip() {
        let m = Mat::from_i64(q(), 2, 2, &[1, 2, 3, 5]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(q(), 2));
        let sing = Mat::from_i64(q(), 2, 2, &[1, 2, 2, 4]);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn span_solver_coords() {
        let rows = Mat::from_i64(q(), 2, 3, &[1, 1, 0, 0, 1, 1]);
        let solver = SpanSolver::new(&rows);
        let v = vec![q().from_i64(2), q().from_i64(5), q().from_i64(3)];
        let coords = solver.coords(&v).unwrap();
        assert_eq!(coords, vec![q().from_i64(2), q().from_i64(3)]);
        let outside = vec![q().one(), q().zero(), q().zero()];
        assert!(solver.coords(&outside).is_none());
    }

    #[test]
    fn row_reducer_matches_rref() {
        let m = Mat::from_i64(q(), 4, 3, &[1, 2, 3, 2, 4, 6, 1, 0, 1, 0, 2, 2]);
        let mut red = RowReducer::new(q(), 3);
        for r in 0..m.rows() {
            red.add_row(m.row_vec(r));
        }
        assert_eq!(red.basis(), m.rref().0.drop_zero_rows());
    }
}
