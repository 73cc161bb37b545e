//! Dense matrices and vectors over an idempotent semiring.
//!
//! Matrix sums, products, and powers lift the scalar ⊕/⊙ pointwise and
//! along inner products. The star of a matrix, A* = E ⊕ A ⊕ A² ⊕ …,
//! solves Y = A⊙Y ⊕ B as Y = A*⊙B; with B = E it is the closure itself.
//! Two closure routines are provided: back substitution for strictly
//! upper triangular (hence nilpotent) matrices, and Gauss-Jordan style
//! elimination for general square matrices, which reports the pivot
//! vertex when a diagonal star diverges.
//!
//! All values are immutable after construction; every operation returns
//! a fresh value, so concurrent use needs no synchronization. Operation
//! counts (⊕ and ⊙ applications actually performed) are exposed through
//! the `_counted` variants; the plain variants discard them.

use crate::error::Error;
use crate::semiring::{Elem, ExtendedScalar, Semiring};
use std::ops::Index;

/// Structural claim about a matrix. Advisory only: routines that need
/// triangularity re-verify it by scan and fail loudly if the hint lied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeHint {
    General,
    StrictlyUpperTriangular,
}

/// Counts of ⊕ and ⊙ applications performed by one operation.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct OpCount {
    pub oplus: u64,
    pub odot: u64,
}

impl std::ops::AddAssign for OpCount {
    fn add_assign(&mut self, rhs: Self) {
        self.oplus += rhs.oplus;
        self.odot += rhs.odot;
    }
}

/// A length-N vector of semiring elements.
#[derive(Debug, Clone)]
pub struct SemiringVector<S: Semiring> {
    semiring: S,
    entries: Vec<Elem<S>>,
}

impl<S: Semiring> SemiringVector<S> {
    pub fn new(semiring: S, entries: Vec<Elem<S>>) -> Self {
        Self { semiring, entries }
    }

    /// All-φ vector.
    pub fn zeros(semiring: S, len: usize) -> Self {
        Self {
            entries: vec![semiring.zero(); len],
            semiring,
        }
    }

    /// All-e vector.
    pub fn ones(semiring: S, len: usize) -> Self {
        Self {
            entries: vec![semiring.one(); len],
            semiring,
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn semiring(&self) -> S {
        self.semiring
    }

    pub fn get(&self, i: usize) -> Elem<S> {
        self.entries[i]
    }

    pub fn set(&mut self, i: usize, value: Elem<S>) {
        self.entries[i] = value;
    }

    pub fn entries(&self) -> &[Elem<S>] {
        &self.entries
    }

    /// Elementwise ⊕; folds the whole vector into a scalar with
    /// [`SemiringVector::fold_oplus`].
    pub fn oplus(&self, other: &Self) -> Result<Self, Error> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                left_rows: self.len(),
                left_cols: 1,
                right_rows: other.len(),
                right_cols: 1,
            });
        }
        let s = self.semiring;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| s.oplus(a, b))
            .collect();
        Ok(Self::new(s, entries))
    }

    /// ⊕-fold of all entries; φ on the empty vector.
    pub fn fold_oplus(&self) -> Elem<S> {
        let s = self.semiring;
        self.entries.iter().fold(s.zero(), |acc, &v| s.oplus(acc, v))
    }
}

impl<S: Semiring> Index<usize> for SemiringVector<S> {
    type Output = Elem<S>;

    fn index(&self, i: usize) -> &Elem<S> {
        &self.entries[i]
    }
}

impl<S: Semiring> PartialEq for SemiringVector<S> {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len()
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| self.semiring.elem_eq(a, b))
    }
}

/// A dense rows×cols matrix over a semiring, stored row-major.
#[derive(Debug, Clone)]
pub struct SemiringMatrix<S: Semiring> {
    semiring: S,
    rows: usize,
    cols: usize,
    shape_hint: ShapeHint,
    entries: Vec<Elem<S>>,
}

impl<S: Semiring> SemiringMatrix<S> {
    /// The all-φ matrix Φ.
    pub fn zeros(semiring: S, rows: usize, cols: usize) -> Self {
        Self {
            entries: vec![semiring.zero(); rows * cols],
            semiring,
            rows,
            cols,
            shape_hint: ShapeHint::General,
        }
    }

    /// The identity E: e on the diagonal, φ elsewhere.
    pub fn identity(semiring: S, n: usize) -> Self {
        let mut m = Self::zeros(semiring, n, n);
        for i in 0..n {
            m.set(i, i, semiring.one());
        }
        m
    }

    /// Build from explicit rows.
    ///
    /// Panics if the rows are ragged; this is a construction bug, not a
    /// runtime condition.
    pub fn from_rows(semiring: S, rows: Vec<Vec<Elem<S>>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged row {i} in matrix literal");
            entries.extend(row);
        }
        Self {
            semiring,
            rows: nrows,
            cols: ncols,
            shape_hint: ShapeHint::General,
            entries,
        }
    }

    /// Build rows×cols with `f(i, j)` supplying each entry.
    pub fn from_fn(
        semiring: S,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Elem<S>,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self {
            semiring,
            rows,
            cols,
            shape_hint: ShapeHint::General,
            entries,
        }
    }

    pub fn with_shape_hint(mut self, hint: ShapeHint) -> Self {
        self.shape_hint = hint;
        self
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn semiring(&self) -> S {
        self.semiring
    }

    pub fn shape_hint(&self) -> ShapeHint {
        self.shape_hint
    }

    pub fn get(&self, i: usize, j: usize) -> Elem<S> {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Elem<S>) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Elem<S>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_all_phi(&self) -> bool {
        self.entries.iter().all(ExtendedScalar::is_phi)
    }

    fn require_square(&self) -> Result<(), Error> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: self.cols,
                right_cols: self.cols,
            });
        }
        Ok(())
    }

    /// Verify by scan that the matrix is square with φ everywhere on and
    /// below the diagonal. The shape hint is never trusted.
    pub fn verify_strictly_upper(&self) -> Result<(), Error> {
        self.require_square()?;
        for i in 0..self.rows {
            for j in 0..=i {
                if !self.get(i, j).is_phi() {
                    return Err(Error::NotTriangular { row: i, col: j });
                }
            }
        }
        Ok(())
    }

    /// Elementwise ⊕.
    pub fn madd(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.madd_counted(other)?.0)
    }

    pub fn madd_counted(&self, other: &Self) -> Result<(Self, OpCount), Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(self.dims_mismatch(other));
        }
        let s = self.semiring;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| s.oplus(a, b))
            .collect();
        let count = OpCount {
            oplus: (self.rows * self.cols) as u64,
            odot: 0,
        };
        Ok((
            Self {
                semiring: s,
                rows: self.rows,
                cols: self.cols,
                shape_hint: ShapeHint::General,
                entries,
            },
            count,
        ))
    }

    /// Matrix product with inner products ⊕-folded; an empty fold is φ.
    pub fn mmul(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.mmul_counted(other)?.0)
    }

    /// As [`SemiringMatrix::mmul`], also reporting the ⊕/⊙ applications
    /// performed. Terms with a φ operand are skipped, not counted: φ
    /// annihilates, so they cannot change the fold.
    pub fn mmul_counted(&self, other: &Self) -> Result<(Self, OpCount), Error> {
        if self.cols != other.rows {
            return Err(self.dims_mismatch(other));
        }
        let s = self.semiring;
        let mut out = Self::zeros(s, self.rows, other.cols);
        let mut count = OpCount::default();
        let bcols = other.cols;
        for i in 0..self.rows {
            let arow = &self.entries[i * self.cols..(i + 1) * self.cols];
            for (k, &a) in arow.iter().enumerate() {
                if a.is_phi() {
                    continue;
                }
                let brow = &other.entries[k * bcols..(k + 1) * bcols];
                let orow = &mut out.entries[i * bcols..(i + 1) * bcols];
                for (j, &b) in brow.iter().enumerate() {
                    if b.is_phi() {
                        continue;
                    }
                    let term = s.odot(a, b)?;
                    orow[j] = s.oplus(orow[j], term);
                    count.odot += 1;
                    count.oplus += 1;
                }
            }
        }
        Ok((out, count))
    }

    /// n-th power of a square matrix; A⁰ = E.
    pub fn mpow(&self, n: usize) -> Result<Self, Error> {
        Ok(self.mpow_counted(n)?.0)
    }

    pub fn mpow_counted(&self, n: usize) -> Result<(Self, OpCount), Error> {
        self.require_square()?;
        let mut acc = Self::identity(self.semiring, self.rows);
        let mut count = OpCount::default();
        for _ in 0..n {
            let (next, c) = acc.mmul_counted(self)?;
            acc = next;
            count += c;
        }
        Ok((acc, count))
    }

    /// Matrix-vector product A⊙x.
    pub fn mul_vector(&self, x: &SemiringVector<S>) -> Result<SemiringVector<S>, Error> {
        if self.cols != x.len() {
            return Err(Error::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: x.len(),
                right_cols: 1,
            });
        }
        let s = self.semiring;
        let mut out = SemiringVector::zeros(s, self.rows);
        for i in 0..self.rows {
            let mut acc = s.zero();
            for (j, &a) in self.row(i).iter().enumerate() {
                if a.is_phi() {
                    continue;
                }
                acc = s.oplus(acc, s.odot(a, x.get(j))?);
            }
            out.set(i, acc);
        }
        Ok(out)
    }

    /// Solve x = A⊙x ⊕ b for strictly upper triangular A by direct back
    /// substitution: x_i = b_i ⊕ (⊕-fold over j > i of a_ij ⊙ x_j),
    /// processed from the last row upward.
    pub fn solve_triangular(&self, b: &SemiringVector<S>) -> Result<SemiringVector<S>, Error> {
        Ok(self.solve_triangular_counted(b)?.0)
    }

    /// As [`SemiringMatrix::solve_triangular`], also reporting operation
    /// counts. Counting is dense on purpose: every a_ij ⊙ x_j with j > i
    /// is applied and counted, so for an N×N system the ⊙ count is
    /// exactly N(N−1)/2, making quadratic-cost claims checkable.
    pub fn solve_triangular_counted(
        &self,
        b: &SemiringVector<S>,
    ) -> Result<(SemiringVector<S>, OpCount), Error> {
        self.verify_strictly_upper()?;
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: b.len(),
                right_cols: 1,
            });
        }
        let mut count = OpCount::default();
        let x = self.back_substitute(b, &mut count)?;
        Ok((x, count))
    }

    /// Back substitution core; triangularity already verified.
    fn back_substitute(
        &self,
        b: &SemiringVector<S>,
        count: &mut OpCount,
    ) -> Result<SemiringVector<S>, Error> {
        let s = self.semiring;
        let n = self.rows;
        let mut x = SemiringVector::zeros(s, n);
        for i in (0..n).rev() {
            let mut acc = b.get(i);
            for j in i + 1..n {
                let term = s.odot(self.get(i, j), x.get(j))?;
                acc = s.oplus(acc, term);
                count.odot += 1;
                count.oplus += 1;
            }
            x.set(i, acc);
        }
        Ok(x)
    }

    /// Closure A* = E ⊕ A ⊕ A² ⊕ … of a strictly upper triangular
    /// matrix, assembled column by column: column j of A* solves
    /// y = A⊙y ⊕ e_j.
    pub fn closure_triangular(&self) -> Result<Self, Error> {
        Ok(self.closure_triangular_counted()?.0)
    }

    pub fn closure_triangular_counted(&self) -> Result<(Self, OpCount), Error> {
        self.verify_strictly_upper()?;
        let s = self.semiring;
        let n = self.rows;
        let mut out = Self::zeros(s, n, n);
        let mut count = OpCount::default();
        let mut unit = SemiringVector::zeros(s, n);
        for j in 0..n {
            unit.set(j, s.one());
            let col = self.back_substitute(&unit, &mut count)?;
            for i in 0..n {
                out.set(i, j, col.get(i));
            }
            unit.set(j, s.zero());
        }
        Ok((out, count))
    }

    /// Closure of a general square matrix by elimination: at pivot k
    /// every entry absorbs a_ik ⊙ star(a_kk) ⊙ a_kj, then the diagonal
    /// is finalized with the scalar star. Idempotent ⊕ makes the
    /// in-place sweep sound: updates only join in weights of real paths.
    ///
    /// A diagonal star that fails at pivot k reports vertex k, the
    /// largest vertex on the offending cycle.
    pub fn closure_general(&self) -> Result<Self, Error> {
        Ok(self.closure_general_counted()?.0)
    }

    pub fn closure_general_counted(&self) -> Result<(Self, OpCount), Error> {
        self.require_square()?;
        let s = self.semiring;
        let n = self.rows;
        let mut m = self.clone();
        let mut count = OpCount::default();
        for k in 0..n {
            let pivot_star = s
                .star(m.get(k, k))
                .map_err(|_| Error::DivergenceAtVertex { vertex: k })?;
            for i in 0..n {
                let a_ik = m.get(i, k);
                if a_ik.is_phi() {
                    continue;
                }
                let left = s.odot(a_ik, pivot_star)?;
                count.odot += 1;
                for j in 0..n {
                    let a_kj = m.get(k, j);
                    if a_kj.is_phi() {
                        continue;
                    }
                    let term = s.odot(left, a_kj)?;
                    let joined = s.oplus(m.get(i, j), term);
                    m.set(i, j, joined);
                    count.odot += 1;
                    count.oplus += 1;
                }
            }
        }
        for i in 0..n {
            let d = s
                .star(m.get(i, i))
                .map_err(|_| Error::DivergenceAtVertex { vertex: i })?;
            m.set(i, i, d);
        }
        m.shape_hint = ShapeHint::General;
        Ok((m, count))
    }

    /// Closure dispatch: back substitution when the hint claims strict
    /// upper triangularity (still verified), elimination otherwise.
    pub fn closure(&self) -> Result<Self, Error> {
        match self.shape_hint {
            ShapeHint::StrictlyUpperTriangular => self.closure_triangular(),
            ShapeHint::General => self.closure_general(),
        }
    }

    fn dims_mismatch(&self, other: &Self) -> Error {
        Error::DimensionMismatch {
            left_rows: self.rows,
            left_cols: self.cols,
            right_rows: other.rows,
            right_cols: other.cols,
        }
    }

    /// Render in the matrix text format: one row per line, entries
    /// space-separated, φ as `.`. Integer semirings round-trip
    /// bit-exactly through [`SemiringMatrix::parse_text`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let mut first = true;
            for v in self.row(i) {
                if !first {
                    out.push(' ');
                }
                first = false;
                match v {
                    ExtendedScalar::Phi => out.push('.'),
                    ExtendedScalar::Finite(x) => out.push_str(&self.semiring.format_value(x)),
                }
            }
            out.push('\n');
        }
        out
    }

    /// Parse the matrix text format. Blank lines and `#` comments are
    /// skipped; all data rows must have the same width. Positions in
    /// errors are 1-based.
    pub fn parse_text(semiring: S, input: &str) -> Result<Self, Error> {
        let mut rows: Vec<Vec<Elem<S>>> = Vec::new();
        let mut width: Option<usize> = None;
        for (lineno, raw) in input.lines().enumerate() {
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            if line.trim().is_empty() {
                continue;
            }
            let mut row = Vec::new();
            for (start, token) in tokens_with_offsets(line) {
                let value = if token == "." {
                    semiring.zero()
                } else {
                    match semiring.parse_value(token) {
                        Some(v) => ExtendedScalar::Finite(v),
                        None => {
                            return Err(Error::parse(
                                lineno + 1,
                                start + 1,
                                format!("invalid {} entry `{token}`", S::NAME),
                            ))
                        }
                    }
                };
                row.push(value);
            }
            match width {
                None => width = Some(row.len()),
                Some(w) if w != row.len() => {
                    return Err(Error::parse(
                        lineno + 1,
                        1,
                        format!("row has {} entries, expected {w}", row.len()),
                    ))
                }
                Some(_) => {}
            }
            rows.push(row);
        }
        Ok(Self::from_rows(semiring, rows))
    }
}

impl<S: Semiring> Index<(usize, usize)> for SemiringMatrix<S> {
    type Output = Elem<S>;

    fn index(&self, (i, j): (usize, usize)) -> &Elem<S> {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.cols + j]
    }
}

/// Equality compares dimensions and entries (via the semiring's element
/// equality); the shape hint is advisory and excluded.
impl<S: Semiring> PartialEq for SemiringMatrix<S> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| self.semiring.elem_eq(a, b))
    }
}

/// Split on whitespace, yielding each token with its 0-based byte offset.
fn tokens_with_offsets(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace().map(move |tok| {
        let start = tok.as_ptr() as usize - line.as_ptr() as usize;
        (start, tok)
    })
}
