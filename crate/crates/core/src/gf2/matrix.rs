use std::fmt;

use super::{and_parity, or_shifted, words_for, Gf2Vector, WORD_BITS};
use crate::error::{Error, Result};

/// A dense matrix over GF(2), row-major with bit-packed rows.
///
/// Each row occupies `stride` words; padding bits past `cols` are always
/// zero. Degenerate shapes (`0 x c`, `r x 0`) are legal everywhere and have
/// rank 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

/// Reduced row echelon form plus its pivot columns (strictly increasing).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Gf2Matrix,
    pub pivots: Vec<usize>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Build from equal-length rows.
    pub fn from_rows(cols: usize, rows: &[Gf2Vector]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::VectorLength {
                    expected: cols,
                    got: r.len(),
                });
            }
            m.row_words_mut(i).copy_from_slice(r.words());
        }
        Ok(m)
    }

    /// Build from strings of '0'/'1', one per row. All rows must have equal
    /// length; an empty slice yields a `0 x 0` matrix.
    pub fn from_bit_rows(rows: &[&str]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let parsed = rows
            .iter()
            .map(|s| Gf2Vector::from_bitstring(s))
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(cols, &parsed)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        (self.data[i * self.stride + j / WORD_BITS] >> (j % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        let mask = 1u64 << (j % WORD_BITS);
        let w = &mut self.data[i * self.stride + j / WORD_BITS];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub(crate) fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub(crate) fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    /// Copy of row `i`.
    pub fn row(&self, i: usize) -> Gf2Vector {
        Gf2Vector::from_words(self.cols, self.row_words(i).to_vec())
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row_words(i)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (a, b) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(b * self.stride);
        head[a * self.stride..(a + 1) * self.stride].swap_with_slice(&mut tail[..self.stride]);
    }

    /// XOR row `src` into row `dst`, starting at word `from_word`.
    fn xor_row_into(&mut self, src: usize, dst: usize, from_word: usize) {
        debug_assert_ne!(src, dst);
        let (head, tail) = self.data.split_at_mut(src.max(dst) * self.stride);
        let (s, d) = if src < dst {
            (
                &head[src * self.stride..(src + 1) * self.stride],
                &mut tail[..self.stride],
            )
        } else {
            (
                &tail[..self.stride],
                &mut head[dst * self.stride..(dst + 1) * self.stride],
            )
        };
        for (x, y) in d.iter_mut().zip(s).skip(from_word) {
            *x ^= y;
        }
    }

    /// GF(2) row addition: row `dst` ^= row `src`.
    pub fn add_row_into(&mut self, src: usize, dst: usize) {
        assert!(src < self.rows && dst < self.rows && src != dst);
        self.xor_row_into(src, dst, 0);
    }

    /// Rank over GF(2) by forward Gaussian elimination with
    /// first-nonzero-column pivoting.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let w = col / WORD_BITS;
            let b = col % WORD_BITS;
            let pivot = (rank..m.rows).find(|&r| (m.data[r * m.stride + w] >> b) & 1 == 1);
            let Some(p) = pivot else { continue };
            m.swap_rows(rank, p);
            for r in rank + 1..m.rows {
                if (m.data[r * m.stride + w] >> b) & 1 == 1 {
                    m.xor_row_into(rank, r, w);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Reduced row echelon form (Gauss-Jordan), with pivot columns.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..m.cols {
            if next == m.rows {
                break;
            }
            let w = col / WORD_BITS;
            let b = col % WORD_BITS;
            let Some(p) = (next..m.rows).find(|&r| (m.data[r * m.stride + w] >> b) & 1 == 1) else {
                continue;
            };
            m.swap_rows(next, p);
            for r in 0..m.rows {
                if r != next && (m.data[r * m.stride + w] >> b) & 1 == 1 {
                    m.xor_row_into(next, r, w);
                }
            }
            pivots.push(col);
            next += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            let row = self.row_words(i);
            for (w, &word) in row.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let b = bits.trailing_zeros() as usize;
                    out.set(w * WORD_BITS + b, i, true);
                    bits &= bits - 1;
                }
            }
        }
        out
    }

    /// Matrix product over GF(2). Entry `(i, j)` is the parity of the AND of
    /// row `i` of `self` with column `j` of `rhs`.
    pub fn multiply(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "multiply",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: rhs.rows,
                rhs_cols: rhs.cols,
            });
        }
        self.mul_transpose(&rhs.transpose())
    }

    /// `self * rhs^T` without materializing the transpose; requires equal
    /// column counts.
    pub fn mul_transpose(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                op: "mul_transpose",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: rhs.rows,
                rhs_cols: rhs.cols,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.rows);
        for i in 0..self.rows {
            let a = self.row_words(i);
            for j in 0..rhs.rows {
                if and_parity(a, rhs.row_words(j)) {
                    out.set(i, j, true);
                }
            }
        }
        Ok(out)
    }

    /// `self * self^T`, exploiting symmetry.
    pub fn gram(&self) -> Self {
        let mut out = Self::zeros(self.rows, self.rows);
        for i in 0..self.rows {
            let a = self.row_words(i);
            for j in i..self.rows {
                if and_parity(a, self.row_words(j)) {
                    out.set(i, j, true);
                    out.set(j, i, true);
                }
            }
        }
        out
    }

    /// Kronecker product: block `(i, j)` of the result is `self[i][j] * rhs`.
    pub fn kron(&self, rhs: &Self) -> Result<Self> {
        let rows = self
            .rows
            .checked_mul(rhs.rows)
            .ok_or(Error::ShapeOverflow { op: "kron" })?;
        let cols = self
            .cols
            .checked_mul(rhs.cols)
            .ok_or(Error::ShapeOverflow { op: "kron" })?;
        rows.checked_mul(words_for(cols))
            .and_then(|words| words.checked_mul(8))
            .ok_or(Error::ShapeOverflow { op: "kron" })?;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            let a = self.row_words(i);
            for (w, &word) in a.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let j = w * WORD_BITS + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    for k in 0..rhs.rows {
                        let dst =
                            (i * rhs.rows + k) * out.stride..(i * rhs.rows + k + 1) * out.stride;
                        or_shifted(&mut out.data[dst], rhs.row_words(k), rhs.cols, j * rhs.cols);
                    }
                }
            }
        }
        Ok(out)
    }

    /// A basis (as rows) of the right kernel `{v : self * v^T = 0}`.
    /// Row count is `cols - rank`.
    pub fn kernel_basis(&self) -> Self {
        let Rref { matrix, pivots } = self.rref();
        let rank = pivots.len();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Self::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, true);
            for (t, &p) in pivots.iter().enumerate().take(rank) {
                if matrix.get(t, f) {
                    out.set(k, p, true);
                }
            }
        }
        out
    }

    /// True iff every row of `other` lies in the row space of `self`.
    pub fn row_space_contains(&self, other: &Self) -> Result<bool> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                op: "row_space_contains",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        let Rref { matrix, pivots } = self.rref();
        let mut scratch = vec![0u64; self.stride];
        for i in 0..other.rows {
            scratch.copy_from_slice(other.row_words(i));
            for (t, &p) in pivots.iter().enumerate() {
                if (scratch[p / WORD_BITS] >> (p % WORD_BITS)) & 1 == 1 {
                    for (x, y) in scratch.iter_mut().zip(matrix.row_words(t)) {
                        *x ^= y;
                    }
                }
            }
            if scratch.iter().any(|&w| w != 0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = Self::hstack(&[self, &Self::identity(n)]).expect("rows match");
        let Rref { matrix, pivots } = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                if matrix.get(i, n + j) {
                    inv.set(i, j, true);
                }
            }
        }
        Some(inv)
    }

    /// Stack matrices vertically; all must share the column count.
    pub fn vstack(parts: &[&Self]) -> Result<Self> {
        let cols = parts.first().map_or(0, |m| m.cols);
        for m in parts {
            if m.cols != cols {
                return Err(Error::DimensionMismatch {
                    op: "vstack",
                    lhs_rows: parts[0].rows,
                    lhs_cols: cols,
                    rhs_rows: m.rows,
                    rhs_cols: m.cols,
                });
            }
        }
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = Self::zeros(rows, cols);
        let mut at = 0;
        for m in parts {
            out.data[at * out.stride..(at + m.rows) * out.stride].copy_from_slice(&m.data);
            at += m.rows;
        }
        Ok(out)
    }

    /// Concatenate matrices horizontally; all must share the row count.
    pub fn hstack(parts: &[&Self]) -> Result<Self> {
        let rows = parts.first().map_or(0, |m| m.rows);
        for m in parts {
            if m.rows != rows {
                return Err(Error::DimensionMismatch {
                    op: "hstack",
                    lhs_rows: rows,
                    lhs_cols: parts[0].cols,
                    rhs_rows: m.rows,
                    rhs_cols: m.cols,
                });
            }
        }
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Self::zeros(rows, cols);
        for i in 0..rows {
            let mut at = 0;
            for m in parts {
                let dst = i * out.stride..(i + 1) * out.stride;
                or_shifted(&mut out.data[dst], m.row_words(i), m.cols, at);
                at += m.cols;
            }
        }
        Ok(out)
    }

    /// Copy of the row range `lo..hi`.
    pub fn submatrix_rows(&self, lo: usize, hi: usize) -> Self {
        assert!(
            lo <= hi && hi <= self.rows,
            "row range {lo}..{hi} out of range"
        );
        Self {
            rows: hi - lo,
            cols: self.cols,
            stride: self.stride,
            data: self.data[lo * self.stride..hi * self.stride].to_vec(),
        }
    }

    /// Serialize in the matrix text format: a `"<rows> <cols>"` header line,
    /// then one '0'/'1' line per row, each newline-terminated.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            s.push_str(&self.row(i).to_bitstring());
            s.push('\n');
        }
        s
    }

    /// Parse the matrix text format produced by [`Gf2Matrix::to_text`].
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix text".into()))?;
        let mut it = header.split_whitespace();
        let rows: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad matrix header {header:?}")))?;
        let cols: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad matrix header {header:?}")))?;
        if it.next().is_some() {
            return Err(Error::Parse(format!("bad matrix header {header:?}")));
        }
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {rows} rows, got {i}")))?;
            let line = line.trim_end_matches('\r');
            if line.len() != cols {
                return Err(Error::Parse(format!(
                    "row {i} has {} columns, expected {cols}",
                    line.len()
                )));
            }
            for (j, c) in line.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => m.set(i, j, true),
                    other => {
                        return Err(Error::Parse(format!(
                            "invalid character {other:?} in row {i}"
                        )))
                    }
                }
            }
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(Error::Parse("trailing content after matrix rows".into()));
        }
        Ok(m)
    }
}

impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{}", self.row(i).to_bitstring())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix({}x{})", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}
