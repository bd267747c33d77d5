//! Vector, affine, and integer colorings of a polytope, with the manifold,
//! freeness, orientability, and torus-action criteria, projections by
//! involutions, and subgroup extraction.
//!
//! A vector coloring assigns an element of `Z_2^r` to each facet; its kernel
//! is the subgroup acting on the real moment-angle manifold. An affine
//! coloring stores points `lambda_i` with the convention that the associated
//! vector coloring has columns `(1, lambda_i)`, coordinate 0 carrying the 1.
//! Predicates are computed on deterministic normal forms: vector colorings
//! are row-reduced to their effective rank, affine colorings are translated
//! by their lexicographically smallest point and re-coordinatized.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::FacetColoring;
use crate::gf2::{
    self, affine_rank, kernel_basis, solve_all_ones, span_rank, AffinePointSet, Gf2Matrix,
    Gf2Vector,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("projection by the zero involution")]
    ZeroInvolution,
    #[error("integer coloring has a zero column")]
    ZeroColumn,
    #[error("integer columns do not generate Z^r")]
    NotGenerating,
    #[error("the facets do not define a nonempty face")]
    EmptyFace,
}

/// A general vector-coloring: one `Z_2^ambient` column per facet. Zero
/// columns are allowed and mark boundary facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorColoring {
    ambient: usize,
    columns: Vec<Gf2Vector>,
}

impl VectorColoring {
    pub fn new(ambient: usize, columns: Vec<Gf2Vector>) -> Self {
        for c in &columns {
            assert_eq!(c.len(), ambient, "column dimension mismatch");
        }
        VectorColoring { ambient, columns }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn columns(&self) -> &[Gf2Vector] {
        &self.columns
    }

    pub fn num_facets(&self) -> usize {
        self.columns.len()
    }

    /// The `ambient x m` matrix with the coloring columns.
    pub fn matrix(&self) -> Gf2Matrix {
        Gf2Matrix::from_columns(&self.columns, self.ambient)
    }

    pub fn effective_rank(&self) -> usize {
        span_rank(&self.columns)
    }

    pub fn has_zero_column(&self) -> bool {
        self.columns.iter().any(|c| c.is_zero())
    }

    /// Normal form: the nonzero rows of the reduced row echelon form become
    /// the new coordinate functionals, so the ambient equals the effective
    /// rank while the kernel (the acting subgroup) is unchanged.
    pub fn normalized(&self) -> VectorColoring {
        let (rows, _) = self.matrix().rref();
        let rank = rows.len();
        let m = self.columns.len();
        let mut columns = vec![Gf2Vector::zeros(rank); m];
        for (i, row) in rows.iter().enumerate() {
            for (j, col) in columns.iter_mut().enumerate() {
                if row.get(j) {
                    col.set(i, true);
                }
            }
        }
        VectorColoring { ambient: rank, columns }
    }

    /// Columns as opaque facet labels.
    pub fn facet_coloring(&self) -> FacetColoring {
        FacetColoring::from_points(&self.columns)
    }

    /// Rewrites an orientable, boundary-free coloring in coordinates where
    /// the orientation character is the 0-th coordinate, yielding the affine
    /// points. `None` when a column is zero or no character exists.
    pub fn to_affine(&self) -> Option<AffineColoring> {
        if self.has_zero_column() {
            return None;
        }
        let c = orientation_character(self)?;
        let r = self.ambient;
        let pivot = c.support()[0];
        // Invertible map with first row `c`, then the identity rows except
        // the pivot row.
        let mut rows = vec![c];
        for i in 0..r {
            if i != pivot {
                rows.push(Gf2Vector::unit(r, i));
            }
        }
        let a = Gf2Matrix::from_rows(rows, r);
        let points: Vec<Gf2Vector> = self
            .columns
            .iter()
            .map(|col| {
                let image = a.apply(col);
                debug_assert!(image.get(0), "character must evaluate to 1");
                image.drop_coord(0)
            })
            .collect();
        Some(AffineColoring::new(r - 1, points))
    }
}

/// An affine coloring: one point of `Z_2^ambient` per facet. The associated
/// vector coloring has columns `(1, lambda_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineColoring {
    ambient: usize,
    points: Vec<Gf2Vector>,
}

impl AffineColoring {
    pub fn new(ambient: usize, points: Vec<Gf2Vector>) -> Self {
        for p in &points {
            assert_eq!(p.len(), ambient, "point dimension mismatch");
        }
        AffineColoring { ambient, points }
    }

    pub fn constant(m: usize) -> Self {
        AffineColoring { ambient: 0, points: vec![Gf2Vector::zeros(0); m] }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn points(&self) -> &[Gf2Vector] {
        &self.points
    }

    pub fn num_facets(&self) -> usize {
        self.points.len()
    }

    /// Dimension of the affine hull of the image.
    pub fn affine_rank(&self) -> usize {
        affine_rank(&AffinePointSet::new(self.points.clone())).expect("nonempty coloring")
    }

    /// The distinct image points, sorted.
    pub fn image(&self) -> Vec<Gf2Vector> {
        AffinePointSet::new(self.points.clone()).distinct()
    }

    /// Columns `(1, lambda_i)` with coordinate 0 carrying the 1.
    pub fn to_vector(&self) -> VectorColoring {
        let columns: Vec<Gf2Vector> = self
            .points
            .iter()
            .map(|p| {
                let mut v = Gf2Vector::zeros(self.ambient + 1);
                v.set(0, true);
                for i in 0..self.ambient {
                    v.set(i + 1, p.get(i));
                }
                v
            })
            .collect();
        VectorColoring::new(self.ambient + 1, columns)
    }

    /// Normal form of full affine rank: translate by the lexicographically
    /// smallest point, then express the differences in the reduced echelon
    /// basis of their span.
    pub fn normalized(&self) -> AffineColoring {
        let distinct = self.image();
        let origin = distinct[0];
        let dirs: Vec<Gf2Vector> = self.points.iter().map(|p| p.xor(&origin)).collect();
        let (basis, pivots) = Gf2Matrix::from_rows(dirs.clone(), self.ambient).rref();
        let rank = basis.len();
        let points: Vec<Gf2Vector> = dirs
            .iter()
            .map(|d| {
                let mut q = Gf2Vector::zeros(rank);
                // In reduced echelon form the coordinates are read off at
                // the pivot positions.
                for (j, &pcol) in pivots.iter().enumerate() {
                    q.set(j, d.get(pcol));
                }
                q
            })
            .collect();
        AffineColoring { ambient: rank, points }
    }

    /// Points as opaque facet labels.
    pub fn facet_coloring(&self) -> FacetColoring {
        FacetColoring::from_points(&self.points)
    }

    /// Expresses an ambient point in the coordinates of `normalized()`;
    /// `None` when it lies outside the affine hull of the image.
    pub fn normalize_point(&self, q: &Gf2Vector) -> Option<Gf2Vector> {
        assert_eq!(q.len(), self.ambient, "point dimension mismatch");
        let distinct = self.image();
        let origin = distinct[0];
        let dirs: Vec<Gf2Vector> = self.points.iter().map(|p| p.xor(&origin)).collect();
        let (basis, pivots) = Gf2Matrix::from_rows(dirs, self.ambient).rref();
        let d = q.xor(&origin);
        let mut coords = Gf2Vector::zeros(basis.len());
        for (j, &pcol) in pivots.iter().enumerate() {
            coords.set(j, d.get(pcol));
        }
        let mut reconstructed = Gf2Vector::zeros(self.ambient);
        for (j, b) in basis.iter().enumerate() {
            if coords.get(j) {
                reconstructed = reconstructed.xor(b);
            }
        }
        if reconstructed == d {
            Some(coords)
        } else {
            None
        }
    }
}

/// Outcome of the closed-manifold criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ManifoldStatus {
    Closed,
    /// Boundary facets: those with zero column.
    WithBoundary(Vec<usize>),
    /// A witness vertex where the distinct nonzero columns are dependent.
    NotManifold(usize),
}

/// Decides whether `N(P, Lambda)` is a closed manifold, a manifold with
/// boundary, or not a manifold. `vertex_facets` lists the facets through
/// each vertex (n-tuples for an n-polytope).
pub fn is_manifold(
    vertex_facets: &[Vec<usize>],
    coloring: &VectorColoring,
) -> Result<ManifoldStatus, ColoringError> {
    let m = coloring.num_facets();
    for (v, facets) in vertex_facets.iter().enumerate() {
        for &f in facets {
            if f >= m {
                return Err(ColoringError::DimensionMismatch(format!(
                    "vertex {v} references facet {f}, but the coloring has {m} columns"
                )));
            }
        }
    }
    for (v, facets) in vertex_facets.iter().enumerate() {
        let distinct: BTreeSet<Gf2Vector> = facets
            .iter()
            .map(|&f| coloring.columns()[f])
            .filter(|c| !c.is_zero())
            .collect();
        let vectors: Vec<Gf2Vector> = distinct.into_iter().collect();
        if span_rank(&vectors) < vectors.len() {
            return Ok(ManifoldStatus::NotManifold(v));
        }
    }
    let boundary: Vec<usize> = (0..m).filter(|&f| coloring.columns()[f].is_zero()).collect();
    if boundary.is_empty() {
        Ok(ManifoldStatus::Closed)
    } else {
        Ok(ManifoldStatus::WithBoundary(boundary))
    }
}

/// Freeness of the subgroup action: at every vertex the columns, counted
/// with multiplicity, must be linearly independent.
pub fn is_free(
    vertex_facets: &[Vec<usize>],
    coloring: &VectorColoring,
) -> Result<bool, ColoringError> {
    let m = coloring.num_facets();
    for (v, facets) in vertex_facets.iter().enumerate() {
        for &f in facets {
            if f >= m {
                return Err(ColoringError::DimensionMismatch(format!(
                    "vertex {v} references facet {f}, but the coloring has {m} columns"
                )));
            }
        }
        let vectors: Vec<Gf2Vector> = facets.iter().map(|&f| coloring.columns()[f]).collect();
        if span_rank(&vectors) < vectors.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The orientation character: the lexicographically smallest functional `c`
/// with `c . Lambda_i = 1` for every nonzero column, when one exists. The
/// quotient is closed and orientable iff the character exists and no column
/// is zero.
pub fn orientation_character(coloring: &VectorColoring) -> Option<Gf2Vector> {
    let active: Vec<bool> = coloring.columns().iter().map(|c| !c.is_zero()).collect();
    solve_all_ones(&coloring.matrix(), &active)
}

/// Whether the involution `x` preserves orientation: `c . x = 0`.
pub fn preserves_orientation(character: &Gf2Vector, x: &Gf2Vector) -> bool {
    !character.dot(x)
}

/// Projects an affine coloring along an involution: points `p` and `p + tau`
/// merge. The coset representative is the lexicographically smaller member
/// (the one with bit 0 at the lowest set bit of `tau`), and that coordinate
/// is dropped.
pub fn project(coloring: &AffineColoring, tau: &Gf2Vector) -> Result<AffineColoring, ColoringError> {
    if tau.len() != coloring.ambient() {
        return Err(ColoringError::DimensionMismatch(format!(
            "involution lives in Z_2^{}, coloring in Z_2^{}",
            tau.len(),
            coloring.ambient()
        )));
    }
    if tau.is_zero() {
        return Err(ColoringError::ZeroInvolution);
    }
    let t = tau.support()[0];
    let points: Vec<Gf2Vector> = coloring
        .points()
        .iter()
        .map(|p| {
            let rep = if p.get(t) { p.xor(tau) } else { *p };
            rep.drop_coord(t)
        })
        .collect();
    Ok(AffineColoring::new(coloring.ambient() - 1, points))
}

/// Projects a vector coloring along an involution of its target group:
/// the composition with the surjection whose kernel is spanned by `tau`
/// (drop the lowest set coordinate of `tau` after adding `x_t tau`).
pub fn project_vector(
    coloring: &VectorColoring,
    tau: &Gf2Vector,
) -> Result<VectorColoring, ColoringError> {
    if tau.len() != coloring.ambient() {
        return Err(ColoringError::DimensionMismatch(format!(
            "involution lives in Z_2^{}, coloring in Z_2^{}",
            tau.len(),
            coloring.ambient()
        )));
    }
    if tau.is_zero() {
        return Err(ColoringError::ZeroInvolution);
    }
    let t = tau.support()[0];
    let columns: Vec<Gf2Vector> = coloring
        .columns()
        .iter()
        .map(|c| {
            let rep = if c.get(t) { c.xor(tau) } else { *c };
            rep.drop_coord(t)
        })
        .collect();
    Ok(VectorColoring::new(coloring.ambient() - 1, columns))
}

/// The subgroup `H(Lambda) = Ker Lambda` of `Z_2^m`, described both by a
/// kernel basis and by defining equations (supports of the reduced row
/// basis of the row space).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupDescription {
    pub ambient: usize,
    pub basis: Vec<Gf2Vector>,
    pub defining_equations: Vec<Vec<usize>>,
}

pub fn subgroup_of(coloring: &VectorColoring) -> SubgroupDescription {
    let matrix = coloring.matrix();
    let basis = kernel_basis(&matrix);
    let (rows, _) = matrix.rref();
    let defining_equations: Vec<Vec<usize>> = rows.iter().map(|r| r.support()).collect();
    SubgroupDescription { ambient: coloring.num_facets(), basis, defining_equations }
}

/// An integer vector-coloring of rank `r`: columns generating `Z^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerColoring {
    rank: usize,
    columns: Vec<Vec<i64>>,
}

impl IntegerColoring {
    pub fn new(rank: usize, columns: Vec<Vec<i64>>) -> Result<Self, ColoringError> {
        for c in &columns {
            if c.len() != rank {
                return Err(ColoringError::DimensionMismatch(format!(
                    "column has {} entries, rank is {rank}",
                    c.len()
                )));
            }
        }
        // Columns must generate Z^r: all r Smith factors equal 1.
        let matrix: Vec<Vec<i64>> =
            (0..rank).map(|i| columns.iter().map(|c| c[i]).collect()).collect();
        let factors = gf2::smith_normal_form(&matrix);
        let ones = factors.iter().filter(|&&d| d == 1).count();
        if ones < rank {
            return Err(ColoringError::NotGenerating);
        }
        Ok(IntegerColoring { rank, columns })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    /// Reduction mod 2 as a GF(2) vector coloring.
    pub fn mod2(&self) -> VectorColoring {
        let columns: Vec<Gf2Vector> = self
            .columns
            .iter()
            .map(|c| {
                let coords: Vec<u8> = c.iter().map(|&x| (x.rem_euclid(2)) as u8).collect();
                Gf2Vector::from_coords(&coords)
            })
            .collect();
        VectorColoring::new(self.rank, columns)
    }
}

/// Whether `M(P, Lambda)` is a closed topological manifold: at every vertex
/// the distinct columns extend to a basis of `Z^r` (all Smith factors 1).
pub fn torus_is_manifold(
    vertex_facets: &[Vec<usize>],
    coloring: &IntegerColoring,
) -> Result<bool, ColoringError> {
    if coloring.columns().iter().any(|c| c.iter().all(|&x| x == 0)) {
        return Err(ColoringError::ZeroColumn);
    }
    let r = coloring.rank();
    for facets in vertex_facets {
        let mut distinct: Vec<&Vec<i64>> = facets.iter().map(|&f| &coloring.columns()[f]).collect();
        distinct.sort();
        distinct.dedup();
        if distinct.len() > r {
            return Ok(false);
        }
        let matrix: Vec<Vec<i64>> =
            (0..r).map(|i| distinct.iter().map(|c| c[i]).collect()).collect();
        let factors = gf2::smith_normal_form(&matrix);
        if factors.len() != distinct.len() || factors.iter().any(|&d| d != 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of the torus sphere test; `decidable` is false for rank > 4,
/// where no recognition procedure is available.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusSphereOutcome {
    pub is_sphere: bool,
    pub decidable: bool,
}

/// Whether `M(P, Lambda)` is a sphere `S^{3+r}`: every column must be a
/// standard basis vector, the assignment surjective, and the induced facet
/// coloring must give the model complex `C(3, r)`.
pub fn torus_is_sphere(
    p: &crate::polytope::SimplePolytope,
    coloring: &IntegerColoring,
) -> TorusSphereOutcome {
    let r = coloring.rank();
    let mut basis_index = Vec::with_capacity(coloring.columns().len());
    for c in coloring.columns() {
        let ones: Vec<usize> = (0..r).filter(|&i| c[i] == 1).collect();
        if ones.len() != 1 || c.iter().any(|&x| x != 0 && x != 1) {
            return TorusSphereOutcome { is_sphere: false, decidable: true };
        }
        basis_index.push(ones[0]);
    }
    let used: BTreeSet<usize> = basis_index.iter().copied().collect();
    if used.len() != r {
        return TorusSphereOutcome { is_sphere: false, decidable: true };
    }
    if r > 4 {
        return TorusSphereOutcome { is_sphere: false, decidable: false };
    }
    let labels: Vec<u64> = basis_index.iter().map(|&i| i as u64).collect();
    let cx = crate::complex::build_complex(p, &FacetColoring::new(labels))
        .expect("coloring length matches facet count");
    let recognized = crate::complex::recognize_c3r(&cx, p) == Some(r);
    TorusSphereOutcome { is_sphere: recognized, decidable: true }
}

/// JSON document for coloring files: `kind` is `vector`, `affine`, or
/// `integer`; entries are 0/1 for the GF(2) kinds.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColoringDocument {
    pub kind: String,
    pub rank: usize,
    pub columns: Vec<Vec<i64>>,
}

impl ColoringDocument {
    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }

    fn gf2_columns(&self) -> Result<Vec<Gf2Vector>, String> {
        self.columns
            .iter()
            .map(|c| {
                if c.len() != self.rank {
                    return Err(format!("column {:?} does not have {} entries", c, self.rank));
                }
                if c.iter().any(|&x| x != 0 && x != 1) {
                    return Err(format!("column {:?} has entries outside 0/1", c));
                }
                let coords: Vec<u8> = c.iter().map(|&x| x as u8).collect();
                Ok(Gf2Vector::from_coords(&coords))
            })
            .collect()
    }

    pub fn as_vector(&self) -> Result<VectorColoring, String> {
        match self.kind.as_str() {
            "vector" => Ok(VectorColoring::new(self.rank, self.gf2_columns()?)),
            "affine" => Ok(self.as_affine()?.to_vector()),
            other => Err(format!("expected a GF(2) coloring, got kind {other:?}")),
        }
    }

    pub fn as_affine(&self) -> Result<AffineColoring, String> {
        match self.kind.as_str() {
            "affine" => Ok(AffineColoring::new(self.rank, self.gf2_columns()?)),
            "vector" => {
                let v = VectorColoring::new(self.rank, self.gf2_columns()?);
                v.to_affine().ok_or_else(|| {
                    "vector coloring is not closed orientable; no affine form".to_string()
                })
            }
            other => Err(format!("expected an affine coloring, got kind {other:?}")),
        }
    }

    pub fn as_integer(&self) -> Result<IntegerColoring, String> {
        if self.kind != "integer" {
            return Err(format!("expected an integer coloring, got kind {:?}", self.kind));
        }
        IntegerColoring::new(self.rank, self.columns.clone()).map_err(|e| e.to_string())
    }

    pub fn from_affine(c: &AffineColoring) -> Self {
        ColoringDocument {
            kind: "affine".to_string(),
            rank: c.ambient(),
            columns: c
                .points()
                .iter()
                .map(|p| (0..c.ambient()).map(|i| i64::from(p.get(i))).collect())
                .collect(),
        }
    }

    pub fn from_vector(c: &VectorColoring) -> Self {
        ColoringDocument {
            kind: "vector".to_string(),
            rank: c.ambient(),
            columns: c
                .columns()
                .iter()
                .map(|p| (0..c.ambient()).map(|i| i64::from(p.get(i))).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::builtin;

    fn v(coords: &[u8]) -> Gf2Vector {
        Gf2Vector::from_coords(coords)
    }

    fn vertex_facets(p: &crate::polytope::SimplePolytope) -> Vec<Vec<usize>> {
        p.vertex_triples().iter().map(|t| t.to_vec()).collect()
    }

    fn cube_small_cover() -> VectorColoring {
        // Opposite facet pairs share a basis vector.
        VectorColoring::new(
            3,
            vec![
                v(&[1, 0, 0]),
                v(&[1, 0, 0]),
                v(&[0, 1, 0]),
                v(&[0, 1, 0]),
                v(&[0, 0, 1]),
                v(&[0, 0, 1]),
            ],
        )
    }

    #[test]
    fn manifold_criterion() {
        let cube = builtin("cube", None).unwrap();
        let vf = vertex_facets(&cube);
        assert_eq!(is_manifold(&vf, &cube_small_cover()).unwrap(), ManifoldStatus::Closed);

        let simplex = builtin("simplex", None).unwrap();
        let vf = vertex_facets(&simplex);
        let bad = VectorColoring::new(
            3,
            vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[1, 1, 0]), v(&[0, 0, 1])],
        );
        let witness = simplex.vertex_triples().iter().position(|t| *t == [0, 1, 2]).unwrap();
        assert_eq!(is_manifold(&vf, &bad).unwrap(), ManifoldStatus::NotManifold(witness));

        let cube_vf = vertex_facets(&cube);
        let with_zero = VectorColoring::new(
            3,
            vec![
                Gf2Vector::zeros(3),
                v(&[1, 0, 0]),
                v(&[0, 1, 0]),
                v(&[0, 1, 0]),
                v(&[0, 0, 1]),
                v(&[0, 0, 1]),
            ],
        );
        assert_eq!(is_manifold(&cube_vf, &with_zero).unwrap(), ManifoldStatus::WithBoundary(vec![0]));
    }

    #[test]
    fn freeness() {
        let cube = builtin("cube", None).unwrap();
        let vf = vertex_facets(&cube);
        assert!(is_free(&vf, &cube_small_cover()).unwrap());

        let simplex = builtin("simplex", None).unwrap();
        let vf = vertex_facets(&simplex);
        let repeated = VectorColoring::new(2, vec![v(&[1, 0]), v(&[1, 0]), v(&[0, 1]), v(&[1, 1])]);
        assert!(!is_free(&vf, &repeated).unwrap());

        // The identity coloring is always free.
        let identity = VectorColoring::new(4, (0..4).map(|i| Gf2Vector::unit(4, i)).collect());
        assert!(is_free(&vf, &identity).unwrap());
        // Free implies closed.
        assert_eq!(is_manifold(&vf, &identity).unwrap(), ManifoldStatus::Closed);
    }

    #[test]
    fn orientation_characters() {
        let constant = VectorColoring::new(1, vec![v(&[1]); 5]);
        assert_eq!(orientation_character(&constant), Some(v(&[1])));

        let affine = AffineColoring::new(2, vec![v(&[0, 0]), v(&[1, 0]), v(&[0, 1]), v(&[1, 1])]);
        let c = orientation_character(&affine.to_vector()).unwrap();
        assert_eq!(c, Gf2Vector::unit(3, 0), "affine-derived character is the 0-th coordinate");
        // Orientation-preserving elements are exactly the vector-space part.
        for bits in 0..8u64 {
            let x = Gf2Vector::from_bits(3, bits);
            assert_eq!(preserves_orientation(&c, &x), !x.get(0));
        }

        let obstructed = VectorColoring::new(
            3,
            vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1]), v(&[1, 1, 0])],
        );
        assert_eq!(orientation_character(&obstructed), None);

        // x = 0 always preserves orientation.
        assert!(preserves_orientation(&v(&[1, 1, 1]), &Gf2Vector::zeros(3)));
        assert!(preserves_orientation(&v(&[1, 1, 1]), &v(&[1, 1, 0])));
        assert!(!preserves_orientation(&v(&[1]), &v(&[1])));
    }

    #[test]
    fn projection_merges_fibers() {
        let rank1 = AffineColoring::new(1, vec![v(&[0]), v(&[1]), v(&[0])]);
        let proj = project(&rank1, &v(&[1])).unwrap();
        assert_eq!(proj.ambient(), 0);
        assert_eq!(proj.affine_rank(), 0);

        // Simplex RP^3 points, tau = e1 + e2.
        let lambda = AffineColoring::new(
            3,
            vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1]), v(&[1, 1, 1])],
        );
        let proj = project(&lambda, &v(&[1, 1, 0])).unwrap();
        assert_eq!(proj.ambient(), 2);
        assert_eq!(proj.points()[0], proj.points()[1], "e1 and e2 merge");
        assert_eq!(proj.points()[2], proj.points()[3], "e3 and e1+e2+e3 merge");
        assert_ne!(proj.points()[0], proj.points()[2]);

        assert_eq!(
            project(&lambda, &Gf2Vector::zeros(3)).unwrap_err(),
            ColoringError::ZeroInvolution
        );
    }

    #[test]
    fn double_projection_matches_subgroup_orbits() {
        let lambda = AffineColoring::new(
            3,
            vec![
                v(&[0, 0, 0]),
                v(&[1, 0, 0]),
                v(&[0, 1, 0]),
                v(&[0, 0, 1]),
                v(&[1, 1, 0]),
                v(&[1, 1, 1]),
            ],
        );
        let tau1 = v(&[1, 1, 0]);
        let tau2 = v(&[0, 1, 1]);
        let once = project(&lambda, &tau1).unwrap();
        // The image of tau2 under the tau1-projection, read off by
        // projecting the pair {0, tau2}.
        let carrier = AffineColoring::new(3, vec![Gf2Vector::zeros(3), tau2]);
        let image = project(&carrier, &tau1).unwrap();
        let tau2_image = image.points()[0].xor(&image.points()[1]);
        let twice = project(&once, &tau2_image).unwrap();
        // Fibers of the double projection = orbits of <tau1, tau2>.
        let group = [Gf2Vector::zeros(3), tau1, tau2, tau1.xor(&tau2)];
        let n = lambda.num_facets();
        for i in 0..n {
            for j in 0..n {
                let same_fiber = twice.points()[i] == twice.points()[j];
                let same_orbit =
                    group.iter().any(|g| lambda.points()[i].xor(g) == lambda.points()[j]);
                assert_eq!(same_fiber, same_orbit, "facets {i},{j}");
            }
        }
    }

    #[test]
    fn subgroups() {
        let identity = VectorColoring::new(4, (0..4).map(|i| Gf2Vector::unit(4, i)).collect());
        let s = subgroup_of(&identity);
        assert!(s.basis.is_empty());
        assert_eq!(s.defining_equations.len(), 4);

        let constant = VectorColoring::new(1, vec![v(&[1]); 6]);
        let s = subgroup_of(&constant);
        assert_eq!(s.basis.len(), 5);
        assert!(s.basis.iter().all(|b| b.count_ones() % 2 == 0));
        assert_eq!(s.defining_equations, vec![vec![0, 1, 2, 3, 4, 5]]);

        // Face coloring of the cube along facet 0: lambda_0 = e1, rest 0.
        let mut points = vec![Gf2Vector::zeros(1); 6];
        points[0] = v(&[1]);
        let lam = AffineColoring::new(1, points);
        let s = subgroup_of(&lam.to_vector());
        // Same subgroup as cut out by x_0 = 0 and x_0 + ... + x_5 = 0.
        for b in &s.basis {
            assert!(!b.get(0));
            assert_eq!(b.count_ones() % 2, 0);
        }
        assert_eq!(s.basis.len(), 4);
        // Kernel basis + equation rank = m.
        assert_eq!(s.basis.len() + s.defining_equations.len(), 6);
    }

    #[test]
    fn normalization() {
        // Ambient 3, affine rank 2.
        let lambda = AffineColoring::new(
            3,
            vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1]), v(&[1, 1, 1])],
        );
        assert_eq!(lambda.affine_rank(), 2);
        let norm = lambda.normalized();
        assert_eq!(norm.ambient(), 2);
        assert_eq!(norm.affine_rank(), 2);
        assert_eq!(norm.image().len(), 4, "distinct points stay distinct");
        // Same fibers.
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(
                    lambda.points()[i] == lambda.points()[j],
                    norm.points()[i] == norm.points()[j]
                );
            }
        }

        let vc = VectorColoring::new(3, vec![v(&[1, 1, 0]), v(&[1, 1, 0]), v(&[0, 0, 0])]);
        let n = vc.normalized();
        assert_eq!(n.ambient(), 1);
        assert_eq!(n.columns()[0], v(&[1]));
        assert_eq!(n.columns()[2], Gf2Vector::zeros(1));
        // Kernel is preserved.
        assert_eq!(kernel_basis(&vc.matrix()), kernel_basis(&n.matrix()));
    }

    #[test]
    fn affine_round_trip() {
        let lambda = AffineColoring::new(2, vec![v(&[0, 0]), v(&[1, 0]), v(&[0, 1]), v(&[1, 1])]);
        let back = lambda.to_vector().to_affine().unwrap();
        assert_eq!(back, lambda, "affine -> vector -> affine is the identity");
    }

    #[test]
    fn integer_colorings() {
        let simplex = builtin("simplex", None).unwrap();
        let vf = vertex_facets(&simplex);

        let ones = IntegerColoring::new(1, vec![vec![1]; 4]).unwrap();
        assert!(torus_is_manifold(&vf, &ones).unwrap());

        let cube = builtin("cube", None).unwrap();
        let cube_vf = vertex_facets(&cube);
        let std3 = IntegerColoring::new(
            3,
            vec![
                vec![1, 0, 0],
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![0, 1, 0],
                vec![0, 0, 1],
                vec![0, 0, 1],
            ],
        )
        .unwrap();
        assert!(torus_is_manifold(&cube_vf, &std3).unwrap());

        // Smith factor 2 at the vertex {0, 1, 3}.
        let bad = IntegerColoring::new(
            3,
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 2]],
        )
        .unwrap();
        assert!(!torus_is_manifold(&vf, &bad).unwrap());

        assert!(matches!(
            IntegerColoring::new(2, vec![vec![2, 0], vec![0, 1]]),
            Err(ColoringError::NotGenerating)
        ));
        let zero = IntegerColoring::new(1, vec![vec![1], vec![0], vec![1], vec![1]]).unwrap();
        assert_eq!(torus_is_manifold(&vf, &zero).unwrap_err(), ColoringError::ZeroColumn);
    }

    #[test]
    fn torus_spheres() {
        let simplex = builtin("simplex", None).unwrap();
        let e4 = IntegerColoring::new(
            4,
            (0..4).map(|i| (0..4).map(|j| i64::from(i == j)).collect()).collect(),
        )
        .unwrap();
        let out = torus_is_sphere(&simplex, &e4);
        assert!(out.is_sphere && out.decidable);

        for p in crate::polytope::all_builtins() {
            let ones = IntegerColoring::new(1, vec![vec![1]; p.num_facets()]).unwrap();
            let out = torus_is_sphere(&p, &ones);
            assert!(out.is_sphere && out.decidable, "{}", p.name());
        }

        let cube = builtin("cube", None).unwrap();
        let std3 = IntegerColoring::new(
            3,
            vec![
                vec![1, 0, 0],
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![0, 1, 0],
                vec![0, 0, 1],
                vec![0, 0, 1],
            ],
        )
        .unwrap();
        let out = torus_is_sphere(&cube, &std3);
        assert!(!out.is_sphere && out.decidable, "opposite classes are disconnected");
    }

    #[test]
    fn torus_manifold_implies_mod2_manifold() {
        // On random 0/1 integer colorings the torus condition is stronger
        // than the GF(2) one.
        let mut seed = 0x5555aaaa5555aaaau64;
        let mut next = || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for p in [builtin("simplex", None).unwrap(), builtin("cube", None).unwrap()] {
            let vf = vertex_facets(&p);
            let mut checked = 0;
            while checked < 20 {
                let r = 1 + (next() % 3) as usize;
                let columns: Vec<Vec<i64>> = (0..p.num_facets())
                    .map(|_| (0..r).map(|_| (next() % 2) as i64).collect())
                    .collect();
                if columns.iter().any(|c| c.iter().all(|&x| x == 0)) {
                    continue;
                }
                let Ok(ic) = IntegerColoring::new(r, columns) else { continue };
                checked += 1;
                if torus_is_manifold(&vf, &ic).unwrap() {
                    assert_eq!(is_manifold(&vf, &ic.mod2()).unwrap(), ManifoldStatus::Closed);
                }
            }
        }
    }

    #[test]
    fn coloring_document_parsing() {
        let doc = ColoringDocument::parse(
            r#"{"kind": "affine", "rank": 2, "columns": [[0,0],[1,0],[0,1],[1,1]]}"#,
        )
        .unwrap();
        let affine = doc.as_affine().unwrap();
        assert_eq!(affine.ambient(), 2);
        let vector = doc.as_vector().unwrap();
        assert_eq!(vector.ambient(), 3);
        assert!(vector.columns().iter().all(|c| c.get(0)));

        let bad =
            ColoringDocument::parse(r#"{"kind": "affine", "rank": 2, "columns": [[0,2]]}"#).unwrap();
        assert!(bad.as_affine().is_err());
    }
}
