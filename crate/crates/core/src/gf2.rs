//! Linear algebra over GF(2) on the face index set.
//!
//! The boundary matrix has one row per edge and one column per face, with a
//! 1 where the edge lies on the face. Its kernel is exactly the set of face
//! subsets in which every edge has even degree, so the even subcomplexes of
//! a complex are the nonzero kernel vectors, and a complex is a circlet when
//! it is even and its kernel is spanned by the all-faces vector.

use thiserror::Error;

use crate::bits::BitVec;
use crate::complex::{FaceSubset, TwoComplex};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("complex is not even; offending edges: {}", .0.join(", "))]
    NotEven(Vec<String>),
}

/// Edge-by-face incidence matrix over GF(2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: Vec<BitVec>,
    cols: usize,
}

impl Gf2Matrix {
    pub fn new(rows: Vec<BitVec>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "row width mismatch");
        Self { rows, cols }
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.rows[row].get(col)
    }

    pub fn column_weight(&self, col: usize) -> usize {
        self.rows.iter().filter(|r| r.get(col)).count()
    }

    /// Keeps only the listed columns, in the given order.
    pub fn select_columns(&self, columns: &[usize]) -> Gf2Matrix {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                BitVec::from_indices(
                    columns.len(),
                    (0..columns.len()).filter(|&j| r.get(columns[j])),
                )
            })
            .filter(|r| !r.is_zero())
            .collect();
        Gf2Matrix::new(rows, columns.len())
    }

    /// `M x` over GF(2).
    pub fn apply(&self, x: &BitVec) -> BitVec {
        BitVec::from_indices(
            self.rows.len(),
            self.rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r.and(x).count_ones() % 2 == 1)
                .map(|(i, _)| i),
        )
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        row_reduce(&mut rows, self.cols).len()
    }
}

/// Reduces `rows` in place to reduced row-echelon form, leading entries at
/// the lowest column index. Returns the pivot columns in increasing order;
/// zero rows are dropped.
fn row_reduce(rows: &mut Vec<BitVec>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        let Some(found) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(next, found);
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    rows.truncate(next);
    pivots
}

pub fn boundary_matrix(k: &TwoComplex) -> Gf2Matrix {
    let nf = k.face_count();
    let mut rows = vec![BitVec::zeros(nf); k.edge_count()];
    for (fi, f) in k.faces().iter().enumerate() {
        for s in &f.walk {
            rows[s.edge].set(fi, true);
        }
    }
    Gf2Matrix::new(rows, nf)
}

/// Basis of `{x : M x = 0}` in reduced row-echelon form, ordered by pivot
/// (lowest set column) ascending.
pub fn kernel_basis(m: &Gf2Matrix) -> Vec<FaceSubset> {
    kernel_vectors(m).into_iter().map(FaceSubset::new).collect()
}

fn kernel_vectors(m: &Gf2Matrix) -> Vec<BitVec> {
    let cols = m.col_count();
    let mut rows = m.rows.clone();
    let pivots = row_reduce(&mut rows, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis: Vec<BitVec> = (0..cols)
        .filter(|&j| !is_pivot[j])
        .map(|free| {
            let mut v = BitVec::zeros(cols);
            v.set(free, true);
            for (row, &p) in rows.iter().zip(&pivots) {
                if row.get(free) {
                    v.set(p, true);
                }
            }
            v
        })
        .collect();
    row_reduce(&mut basis, cols);
    basis
}

pub fn kernel_dimension(k: &TwoComplex) -> usize {
    let m = boundary_matrix(k);
    m.col_count() - m.rank()
}

/// Even, and no proper nonempty face subset is even.
pub fn is_circlet(k: &TwoComplex) -> bool {
    k.is_even() && kernel_dimension(k) == 1
}

/// Kernel basis of the boundary matrix restricted to the faces of `part`,
/// expressed over the full face index set.
fn part_kernel(m: &Gf2Matrix, part: &FaceSubset) -> Vec<FaceSubset> {
    let columns: Vec<usize> = part.iter().collect();
    kernel_vectors(&m.select_columns(&columns))
        .into_iter()
        .map(|v| FaceSubset::from_indices(m.col_count(), v.iter_ones().map(|j| columns[j])))
        .collect()
}

/// Partitions the faces of an even complex into parts that each span a
/// circlet.
///
/// A part whose restricted kernel is one-dimensional is emitted as is.
/// Otherwise it is split by the first echelon basis vector that is a proper
/// subset of the part; the vector's support is processed before its
/// complement.
pub fn circlet_decomposition(k: &TwoComplex) -> Result<Vec<FaceSubset>, Gf2Error> {
    if !k.is_even() {
        return Err(Gf2Error::NotEven(
            k.odd_edges().into_iter().map(String::from).collect(),
        ));
    }
    let m = boundary_matrix(k);
    let mut parts = Vec::new();
    if k.face_count() > 0 {
        split(&m, k.all_faces(), &mut parts);
    }
    Ok(parts)
}

fn split(m: &Gf2Matrix, part: FaceSubset, out: &mut Vec<FaceSubset>) {
    let basis = part_kernel(m, &part);
    debug_assert!(
        !basis.is_empty(),
        "even part has the all-ones kernel vector"
    );
    if basis.len() == 1 {
        out.push(part);
        return;
    }
    let support = basis
        .into_iter()
        .find(|v| *v != part)
        .expect("a kernel of dimension >= 2 has a proper vector");
    let rest = support.complement_within(&part);
    split(m, support, out);
    split(m, rest, out);
}
