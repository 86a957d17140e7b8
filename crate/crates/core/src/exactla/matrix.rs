//! Dense elimination over `F_p`: rank, left kernels, row-space membership and
//! greedy selection of independent rows.

use std::fmt::{self, Display, Write as _};

use super::field::PrimeField;

/// A row-echelon basis grown one vector at a time.
///
/// Every stored row has a leading 1 at its pivot column, and each row is
/// zero at the pivots of all rows inserted before it. Reducing a vector by
/// the stored rows in insertion order therefore clears every pivot column.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    field: PrimeField,
    width: usize,
    rows: Vec<(usize, Vec<u64>)>,
}

impl EchelonBasis {
    pub fn new(field: PrimeField, width: usize) -> Self {
        Self { field, width, rows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    fn reduce(&self, v: &mut [u64]) {
        let f = &self.field;
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c == 0 {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row).skip(*pivot) {
                if r != 0 {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
    }

    /// Whether `v` lies in the span of the rows inserted so far.
    pub fn contains(&self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.width);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v` if it is independent of the current rows. Returns whether it
    /// was added.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.width);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(pivot) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(w[pivot]);
        for x in w.iter_mut().skip(pivot) {
            *x = self.field.mul(*x, inv);
        }
        self.rows.push((pivot, w));
        true
    }
}

/// Rank of the matrix whose rows are `rows`, each of length `width`.
pub fn rank(field: &PrimeField, rows: &[Vec<u64>], width: usize) -> usize {
    let mut basis = EchelonBasis::new(*field, width);
    rows.iter().filter(|r| basis.insert(r)).count()
}

/// Indices of the rows selected by the matroid greedy algorithm: a row is
/// kept iff it is independent of the rows kept before it.
pub fn greedy_independent_rows<'a, I>(field: &PrimeField, width: usize, rows: I) -> Vec<usize>
where
    I: IntoIterator<Item = &'a [u64]>,
{
    let mut basis = EchelonBasis::new(*field, width);
    rows.into_iter()
        .enumerate()
        .filter_map(|(i, r)| basis.insert(r).then_some(i))
        .collect()
}

/// Basis of the left kernel `{ y : y^T M = 0 }`.
///
/// Rows are processed in order while tracking each reduced row as a
/// combination of original rows; a row that reduces to zero contributes its
/// combination. The `i`-th basis vector has coefficient 1 on its own row and
/// is supported on rows with smaller index otherwise, so the basis is
/// independent by construction.
pub fn left_kernel(field: &PrimeField, rows: &[Vec<u64>], width: usize) -> Vec<Vec<u64>> {
    let f = field;
    let n = rows.len();
    // (pivot, reduced row, combination of original rows)
    let mut basis: Vec<(usize, Vec<u64>, Vec<u64>)> = Vec::new();
    let mut kernel = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row.len(), width);
        let mut v = row.clone();
        let mut combo = vec![0u64; n];
        combo[i] = 1;
        for (pivot, brow, bcombo) in &basis {
            let c = v[*pivot];
            if c == 0 {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(brow) {
                *x = f.sub(*x, f.mul(c, r));
            }
            for (x, &r) in combo.iter_mut().zip(bcombo) {
                *x = f.sub(*x, f.mul(c, r));
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => kernel.push(combo),
            Some(pivot) => {
                let inv = f.inv(v[pivot]);
                v.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                combo.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                basis.push((pivot, v, combo));
            }
        }
    }
    debug_assert_eq!(kernel.len() + basis.len(), n, "rank-nullity");
    kernel
}

/// `y^T M` for a row vector `y`.
pub fn vec_mat(field: &PrimeField, y: &[u64], rows: &[Vec<u64>], width: usize) -> Vec<u64> {
    let mut out = vec![0u64; width];
    for (&c, row) in y.iter().zip(rows) {
        if c == 0 {
            continue;
        }
        for (o, &r) in out.iter_mut().zip(row) {
            *o = field.add(*o, field.mul(c, r));
        }
    }
    out
}

/// A matrix over `F_p` whose rows and columns carry combinatorial labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericMatrix<R, C> {
    pub field: PrimeField,
    pub row_labels: Vec<R>,
    pub col_labels: Vec<C>,
    pub rows: Vec<Vec<u64>>,
    /// Seed the generic parameters were drawn from.
    pub seed: u64,
}

impl<R, C> GenericMatrix<R, C> {
    pub fn zeros(field: PrimeField, row_labels: Vec<R>, col_labels: Vec<C>, seed: u64) -> Self {
        let rows = vec![vec![0; col_labels.len()]; row_labels.len()];
        Self { field, row_labels, col_labels, rows, seed }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn rank(&self) -> usize {
        rank(&self.field, &self.rows, self.n_cols())
    }

    pub fn left_kernel(&self) -> Vec<Vec<u64>> {
        let k = left_kernel(&self.field, &self.rows, self.n_cols());
        debug_assert_eq!(k.len() + self.rank(), self.n_rows());
        k
    }

    pub fn rows_independent(&self) -> bool {
        self.rank() == self.n_rows()
    }

    /// Whether `v` lies in the row space.
    pub fn row_space_contains(&self, v: &[u64]) -> bool {
        let mut basis = EchelonBasis::new(self.field, self.n_cols());
        for r in &self.rows {
            basis.insert(r);
        }
        basis.contains(v)
    }

    /// Labels of the rows kept by the greedy algorithm in the stored order.
    pub fn greedy_independent_rows(&self) -> Vec<&R> {
        greedy_independent_rows(&self.field, self.n_cols(), self.rows.iter().map(Vec::as_slice))
            .into_iter()
            .map(|i| &self.row_labels[i])
            .collect()
    }

    pub fn left_mul(&self, y: &[u64]) -> Vec<u64> {
        vec_mat(&self.field, y, &self.rows, self.n_cols())
    }
}

impl<R: Display, C> GenericMatrix<R, C> {
    /// One line per row: `label -> r0 r1 ...`, residues in decimal.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (label, row) in self.row_labels.iter().zip(&self.rows) {
            let _ = write!(s, "{label} ->");
            for x in row {
                let _ = write!(s, " {x}");
            }
            s.push('\n');
        }
        s
    }
}

impl<R: Display, C> Display for GenericMatrix<R, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}
