//! Exact linear and affine algebra over GF(2), plus Smith normal form for
//! small integer matrices.
//!
//! Vectors are bit-packed into a single `u64` word (ambient dimension is at
//! most 64, far beyond anything the toolkit needs). All operations are pure
//! and deterministic: elimination always pivots on the lowest available
//! index, and tie-breaking between solutions picks the lexicographically
//! smallest bit-vector, where lexicographic order reads bit 0 first.

use std::fmt;

use thiserror::Error;

/// Errors raised by the GF(2) layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("empty point set has no affine rank")]
    EmptySet,
    #[error("vector length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
}

/// A vector in `Z_2^len`, `len <= 64`. Bit `i` is coordinate `i`.
///
/// Addition is componentwise XOR. The `Ord` instance is lexicographic on the
/// coordinate sequence `(x_0, x_1, ...)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gf2Vector {
    bits: u64,
    len: usize,
}

impl Gf2Vector {
    pub fn zeros(len: usize) -> Self {
        assert!(len <= 64, "Gf2Vector supports at most 64 coordinates");
        Gf2Vector { bits: 0, len }
    }

    /// Standard basis vector `e_i`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    /// Builds a vector from 0/1 coordinates.
    pub fn from_coords(coords: &[u8]) -> Self {
        let mut v = Self::zeros(coords.len());
        for (i, &c) in coords.iter().enumerate() {
            v.set(i, c % 2 == 1);
        }
        v
    }

    /// Builds a vector of length `len` whose set bits are the low `len` bits
    /// of `bits`.
    pub fn from_bits(len: usize, bits: u64) -> Self {
        assert!(len <= 64);
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        Gf2Vector { bits: bits & mask, len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "coordinate {i} out of range (len={})", self.len);
        (self.bits >> i) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "coordinate {i} out of range (len={})", self.len);
        if value {
            self.bits |= 1 << i;
        } else {
            self.bits &= !(1 << i);
        }
    }

    /// Componentwise XOR; both vectors must have equal length.
    pub fn xor(&self, other: &Self) -> Self {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        Gf2Vector { bits: self.bits ^ other.bits, len: self.len }
    }

    /// Scalar product `sum_i x_i y_i` over GF(2).
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        (self.bits & other.bits).count_ones() % 2 == 1
    }

    pub fn count_ones(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Indices of nonzero coordinates, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    /// Raw bit pattern; coordinate `i` at bit `i`. Useful as an opaque label.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Appends or drops coordinates, keeping the low ones.
    pub fn resized(&self, len: usize) -> Self {
        Self::from_bits(len, self.bits)
    }

    /// Removes coordinate `i`, shifting higher coordinates down.
    pub fn drop_coord(&self, i: usize) -> Self {
        assert!(i < self.len);
        let low = self.bits & ((1u64 << i) - 1);
        let high = if i + 1 >= 64 { 0 } else { self.bits >> (i + 1) };
        Gf2Vector { bits: low | (high << i), len: self.len - 1 }
    }

    /// Key under which lexicographic comparison of coordinate sequences
    /// agrees with numeric comparison.
    fn lex_key(&self) -> u64 {
        if self.len == 0 {
            0
        } else {
            self.bits.reverse_bits() >> (64 - self.len)
        }
    }

    /// Bit string, coordinate 0 first: e.g. `"101"`.
    pub fn to_bit_string(&self) -> String {
        (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }
}

impl PartialOrd for Gf2Vector {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Gf2Vector {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.lex_key().cmp(&other.lex_key()))
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_bit_string())
    }
}

/// A matrix over GF(2), stored row-major. Column `j` of a coloring matrix is
/// the image of facet `j`.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: Vec<Gf2Vector>,
    cols: usize,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf2Matrix { rows: vec![Gf2Vector::zeros(cols); rows], cols }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<Gf2Vector>, cols: usize) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "row length mismatch");
        }
        Gf2Matrix { rows, cols }
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Gf2Vector], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for i in 0..rows {
                m.set(i, j, c.get(i));
            }
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn row(&self, i: usize) -> Gf2Vector {
        self.rows[i]
    }

    pub fn column(&self, j: usize) -> Gf2Vector {
        let mut c = Gf2Vector::zeros(self.rows.len());
        for i in 0..self.rows.len() {
            c.set(i, self.get(i, j));
        }
        c
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.cols, self.rows.len());
        for i in 0..self.rows.len() {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Matrix-vector product `M x`.
    pub fn apply(&self, x: &Gf2Vector) -> Gf2Vector {
        assert_eq!(x.len(), self.cols, "dimension mismatch in apply");
        let mut y = Gf2Vector::zeros(self.rows.len());
        for i in 0..self.rows.len() {
            y.set(i, self.rows[i].dot(x));
        }
        y
    }

    /// Reduced row echelon form, pivoting on the lowest column index first.
    /// Returns `(nonzero rows, pivot column indices)`.
    pub fn rref(&self) -> (Vec<Gf2Vector>, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            if let Some(i) = (r..rows.len()).find(|&i| rows[i].get(c)) {
                rows.swap(r, i);
                let pivot_row = rows[r];
                for (j, row) in rows.iter_mut().enumerate() {
                    if j != r && row.get(c) {
                        *row = row.xor(&pivot_row);
                    }
                }
                pivots.push(c);
                r += 1;
            }
        }
        rows.truncate(r);
        (rows, pivots)
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}:", self.rows.len(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {}", r.to_bit_string())?;
        }
        Ok(())
    }
}

/// Dimension of the column space (equivalently the row space).
pub fn rank(m: &Gf2Matrix) -> usize {
    m.rref().1.len()
}

/// Rank of the linear span of the given vectors.
pub fn span_rank(vectors: &[Gf2Vector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let m = Gf2Matrix::from_rows(vectors.to_vec(), vectors[0].len());
    rank(&m)
}

/// Deterministic basis of `{x : Mx = 0}` derived from the reduced echelon
/// form; its size is `cols - rank`.
pub fn kernel_basis(m: &Gf2Matrix) -> Vec<Gf2Vector> {
    let (rows, pivots) = m.rref();
    let n = m.n_cols();
    let is_pivot = {
        let mut v = vec![false; n];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..n {
        if is_pivot[free] {
            continue;
        }
        let mut x = Gf2Vector::zeros(n);
        x.set(free, true);
        for (r, &p) in pivots.iter().enumerate() {
            if rows[r].get(free) {
                x.set(p, true);
            }
        }
        basis.push(x);
    }
    basis
}

/// Lexicographically smallest element of the affine space
/// `particular + span(kernel_rref)`, where the kernel basis rows are in
/// reduced echelon form with the given pivot columns.
fn lex_min_in_coset(mut particular: Gf2Vector, kernel_rref: &[Gf2Vector], pivots: &[usize]) -> Gf2Vector {
    for (r, &p) in pivots.iter().enumerate() {
        if particular.get(p) {
            particular = particular.xor(&kernel_rref[r]);
        }
    }
    particular
}

/// Finds the lexicographically smallest functional `c` with `c . col_j = 1`
/// for every active column `j`, or `None` when no such functional exists.
pub fn solve_all_ones(m: &Gf2Matrix, active: &[bool]) -> Option<Gf2Vector> {
    assert_eq!(active.len(), m.n_cols(), "active mask length mismatch");
    // The system is A c = 1 where the rows of A are the active columns of m.
    let rows: Vec<Gf2Vector> = (0..m.n_cols())
        .filter(|&j| active[j])
        .map(|j| m.column(j))
        .collect();
    let r = m.n_rows();
    if rows.is_empty() {
        return Some(Gf2Vector::zeros(r));
    }
    // Augmented elimination over [A | 1].
    let mut aug: Vec<(Gf2Vector, bool)> = rows.into_iter().map(|row| (row, true)).collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..r {
        if rank == aug.len() {
            break;
        }
        if let Some(i) = (rank..aug.len()).find(|&i| aug[i].0.get(c)) {
            aug.swap(rank, i);
            let (prow, pb) = aug[rank];
            for (j, (row, b)) in aug.iter_mut().enumerate() {
                if j != rank && row.get(c) {
                    *row = row.xor(&prow);
                    *b ^= pb;
                }
            }
            pivots.push(c);
            rank += 1;
        }
    }
    // Inconsistent if a zero row has right-hand side 1.
    if aug[rank..].iter().any(|(_, b)| *b) {
        return None;
    }
    let mut particular = Gf2Vector::zeros(r);
    for (i, &p) in pivots.iter().enumerate() {
        particular.set(p, aug[i].1);
    }
    // Kernel of A = all c orthogonal to every active column. Re-reduce the
    // kernel basis so leading bits sit at distinct pivot positions; clearing
    // those positions then yields the lexicographically smallest solution.
    let a = Gf2Matrix::from_rows(aug[..rank].iter().map(|(row, _)| *row).collect(), r);
    let kernel = kernel_basis(&a);
    let (kernel_rref, kernel_pivots) = Gf2Matrix::from_rows(kernel, r).rref();
    Some(lex_min_in_coset(particular, &kernel_rref, &kernel_pivots))
}

/// The lexicographically smallest element of the coset `v + span(vectors)`.
pub fn lex_min_mod_span(v: &Gf2Vector, vectors: &[Gf2Vector]) -> Gf2Vector {
    if vectors.is_empty() {
        return *v;
    }
    let (rref, pivots) = Gf2Matrix::from_rows(vectors.to_vec(), v.len()).rref();
    lex_min_in_coset(*v, &rref, &pivots)
}

/// A multiset of points of `Z_2^ambient` considered up to affine geometry.
#[derive(Clone, Debug)]
pub struct AffinePointSet {
    points: Vec<Gf2Vector>,
}

impl AffinePointSet {
    pub fn new(points: Vec<Gf2Vector>) -> Self {
        if let Some(first) = points.first() {
            for p in &points {
                assert_eq!(p.len(), first.len(), "mixed ambient dimensions");
            }
        }
        AffinePointSet { points }
    }

    pub fn points(&self) -> &[Gf2Vector] {
        &self.points
    }

    /// Deduplicated points in lexicographic order.
    pub fn distinct(&self) -> Vec<Gf2Vector> {
        let mut d = self.points.clone();
        d.sort();
        d.dedup();
        d
    }
}

/// Dimension of the affine hull: the rank of `{(1, p)}` minus one.
pub fn affine_rank(s: &AffinePointSet) -> Result<usize, Gf2Error> {
    let distinct = s.distinct();
    if distinct.is_empty() {
        return Err(Gf2Error::EmptySet);
    }
    let n = distinct[0].len();
    let lifted: Vec<Gf2Vector> = distinct
        .iter()
        .map(|p| {
            let mut v = p.resized(n + 1);
            v.set(n, true);
            v
        })
        .collect();
    Ok(span_rank(&lifted) - 1)
}

/// The affine isomorphism class of a full-dimensional point set, when it is
/// a boolean simplex or a join of a simplex with a simplicial prism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JoinShape {
    /// `r + 1` affinely independent points.
    Simplex(usize),
    /// `Delta^simplex_dim * Pi^prism_dim`; `simplex_dim = -1` means the
    /// prism alone. For `prism_dim == 2` all three main directions are
    /// reported; for `prism_dim >= 3` the direction is unique.
    SimplexJoinPrism {
        simplex_dim: i64,
        prism_dim: usize,
        main_directions: Vec<Gf2Vector>,
    },
    Other,
}

/// Recognizes boolean simplices and simplex-prism joins.
///
/// A direction `d` certifies the prism structure when the distinct points
/// split into exactly `k` lines `{p, p+d}` and `rank - k` single points;
/// candidate directions are the pairwise sums of points.
pub fn classify_point_set(s: &AffinePointSet) -> JoinShape {
    let distinct = s.distinct();
    let rank = match affine_rank(s) {
        Ok(r) => r,
        Err(_) => return JoinShape::Other,
    };
    let card = distinct.len();
    if card == rank + 1 {
        return JoinShape::Simplex(rank);
    }
    if card < rank + 1 || card > 2 * rank {
        return JoinShape::Other;
    }
    let k = card - rank;
    let point_set: std::collections::BTreeSet<Gf2Vector> = distinct.iter().copied().collect();
    let mut candidates: Vec<Gf2Vector> = Vec::new();
    for i in 0..distinct.len() {
        for j in (i + 1)..distinct.len() {
            candidates.push(distinct[i].xor(&distinct[j]));
        }
    }
    candidates.sort();
    candidates.dedup();
    let mut main_directions = Vec::new();
    for d in candidates {
        let mut pairs = 0usize;
        let mut singles = 0usize;
        for p in &distinct {
            let q = p.xor(&d);
            if point_set.contains(&q) {
                pairs += 1; // counted from both ends
            } else {
                singles += 1;
            }
        }
        if pairs == 2 * k && singles == rank - k {
            main_directions.push(d);
        }
    }
    if main_directions.is_empty() {
        JoinShape::Other
    } else {
        JoinShape::SimplexJoinPrism {
            simplex_dim: rank as i64 - k as i64 - 1,
            prism_dim: k,
            main_directions,
        }
    }
}

/// Diagonal of the Smith normal form of a small integer matrix:
/// `min(rows, cols)` nonnegative entries with `d_1 | d_2 | ...`.
///
/// The columns of the input extend to a basis of `Z^rows` if and only if
/// every one of the `cols` factors equals 1.
pub fn smith_normal_form(matrix: &[Vec<i64>]) -> Vec<i64> {
    let rows = matrix.len();
    let cols = if rows == 0 { 0 } else { matrix[0].len() };
    let n = rows.min(cols);
    let mut a: Vec<Vec<i64>> = matrix.to_vec();
    for row in &a {
        assert_eq!(row.len(), cols, "ragged integer matrix");
    }
    let mut diag = vec![0i64; n];
    for t in 0..n {
        loop {
            // Smallest nonzero entry of the trailing submatrix becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j] != 0
                        && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finalize_divisibility(diag);
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in (t + 1)..rows {
                let q = a[i][t].div_euclid(p);
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                if a[i][t] != 0 {
                    clean = false;
                }
            }
            for j in (t + 1)..cols {
                let q = a[t][j].div_euclid(p);
                if q != 0 {
                    for i in t..rows {
                        a[i][j] -= q * a[i][t];
                    }
                }
                if a[t][j] != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Pivot must divide the rest of the submatrix.
            let mut offender = None;
            'search: for i in (t + 1)..rows {
                for j in (t + 1)..cols {
                    if a[i][j] % p != 0 {
                        offender = Some(i);
                        break 'search;
                    }
                }
            }
            if let Some(i) = offender {
                for j in t..cols {
                    a[t][j] += a[i][j];
                }
                continue;
            }
            diag[t] = p.abs();
            break;
        }
    }
    finalize_divisibility(diag)
}

fn finalize_divisibility(mut diag: Vec<i64>) -> Vec<i64> {
    let n = diag.len();
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in (i + 1)..n {
                if diag[j] != 0 && (diag[i] == 0 || diag[j] % diag[i] != 0) {
                    let g = gcd(diag[i], diag[j]);
                    let l = if g == 0 { 0 } else { diag[i] / g * diag[j] };
                    diag[i] = g;
                    diag[j] = l.abs();
                    changed = true;
                }
            }
        }
        if !changed {
            return diag;
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
