//! The 3-sphere decision procedure and everything it parametrizes:
//! hyperelliptic involution enumeration, affine colorings induced by
//! Hamiltonian subgraphs, candidate special involutions from the shape of
//! the image point set, and the census of sphere subgroups.
//!
//! `N(P, lambda)` is a 3-sphere exactly when the complex `C(P, lambda)` is
//! the model complex `C(3, r+1)` for `r` the affine rank; an involution
//! `tau` is hyperelliptic exactly when the projected coloring passes the
//! same test one rank down.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::coloring::{project, subgroup_of, AffineColoring, SubgroupDescription};
use crate::complex::{
    build_complex, recognize_c3r, ColoringComplex, FacetColoring, OneFaceKind, UnionFind,
};
use crate::gf2::{classify_point_set, AffinePointSet, Gf2Vector, JoinShape};
use crate::hamilton::{enumerate_subgraphs, HamSubgraph, SubgraphKind, SubgraphPath};
use crate::polytope::SimplePolytope;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SphereError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("subgraph does not span the complex vertices")]
    NotSpanning,
    #[error("not a subgraph of the complex skeleton: {0}")]
    NotSubgraph(String),
    #[error("facet adjacency inside a face of the subgraph is not a tree")]
    FaceTreeViolation,
    #[error("the facets do not define a nonempty face")]
    EmptyFace,
}

/// Whether `N(P, lambda)` is homeomorphic to `S^3`: the complex must be the
/// model `C(3, r+1)` where `r` is the affine rank of the coloring.
pub fn is_sphere(p: &SimplePolytope, lambda: &AffineColoring) -> Result<bool, SphereError> {
    if lambda.num_facets() != p.num_facets() {
        return Err(SphereError::DimensionMismatch(format!(
            "coloring has {} points, polytope has {} facets",
            lambda.num_facets(),
            p.num_facets()
        )));
    }
    let normalized = lambda.normalized();
    let r = normalized.ambient();
    let cx = build_complex(p, &normalized.facet_coloring()).expect("length checked");
    Ok(recognize_c3r(&cx, p) == Some(r + 1))
}

/// Sphere test for an arbitrary vector coloring: `S^3` is closed and
/// orientable, so the coloring must admit an affine form, which is then
/// tested against the model complexes.
pub fn is_sphere_vector(
    p: &SimplePolytope,
    coloring: &crate::coloring::VectorColoring,
) -> Result<bool, SphereError> {
    if coloring.num_facets() != p.num_facets() {
        return Err(SphereError::DimensionMismatch(format!(
            "coloring has {} columns, polytope has {} facets",
            coloring.num_facets(),
            p.num_facets()
        )));
    }
    match coloring.to_affine() {
        None => Ok(false),
        Some(lambda) => is_sphere(p, &lambda),
    }
}

/// Hyperelliptic involutions of `N(P, lambda)` inside the canonical group of
/// orientation-preserving involutions, with the Hamiltonian subgraph behind
/// each one.
#[derive(Clone, Debug)]
pub struct HyperellipticReport {
    /// Affine rank of the coloring; involutions live in `Z_2^rank`
    /// (normalized coordinates).
    pub rank: usize,
    pub involutions: Vec<Gf2Vector>,
    /// The skeleton `C^1(P, lambda_tau)` for each involution, expressed in
    /// polytope vertices and edges.
    pub subgraphs: Vec<HamSubgraph>,
    /// Number of distinct image points of the coloring.
    pub image_size: usize,
    /// Affine isomorphism class of the image point set.
    pub shape: JoinShape,
    /// Whether the count lies in the set permitted for (rank, image, shape).
    pub allowed_set_check: bool,
}

/// The possible hyperelliptic involution counts for a given normalized rank,
/// image cardinality, and image shape.
pub fn allowed_counts(rank: usize, image_size: usize, shape: &JoinShape) -> Vec<usize> {
    if rank == 0 || rank >= 5 {
        return vec![0];
    }
    match shape {
        JoinShape::Simplex(_) => match rank {
            1 => vec![0, 1],
            2 => vec![0, 1, 2, 3],
            3 => vec![0, 1, 2, 3, 4, 6],
            4 => vec![0, 1, 2, 6],
            _ => vec![0],
        },
        JoinShape::SimplexJoinPrism { prism_dim: 2, .. } => match rank {
            2 => vec![0, 1, 2, 3],
            3 => vec![0, 1, 2, 3],
            4 => vec![0, 1, 2],
            _ => vec![0],
        },
        JoinShape::SimplexJoinPrism { .. } => vec![0, 1],
        JoinShape::Other => {
            let _ = image_size;
            vec![0]
        }
    }
}

/// Tests every nonzero involution of the normalized group by projecting and
/// applying the sphere criterion.
pub fn enumerate_hyperelliptic(
    p: &SimplePolytope,
    lambda: &AffineColoring,
) -> Result<HyperellipticReport, SphereError> {
    if lambda.num_facets() != p.num_facets() {
        return Err(SphereError::DimensionMismatch(format!(
            "coloring has {} points, polytope has {} facets",
            lambda.num_facets(),
            p.num_facets()
        )));
    }
    let normalized = lambda.normalized();
    let r = normalized.ambient();
    let full_complex = build_complex(p, &normalized.facet_coloring()).expect("length checked");
    let mut involutions = Vec::new();
    let mut subgraphs = Vec::new();
    let mut taus: Vec<Gf2Vector> = (1..(1u64 << r)).map(|b| Gf2Vector::from_bits(r, b)).collect();
    taus.sort();
    for tau in taus {
        let projected = project(&normalized, &tau).expect("nonzero involution");
        if is_sphere(p, &projected)? {
            let sub = skeleton_as_subgraph(p, &projected, &full_complex);
            involutions.push(tau);
            subgraphs.push(sub);
        }
    }
    let image = normalized.image();
    let shape = classify_point_set(&AffinePointSet::new(image.clone()));
    let allowed = allowed_counts(r, image.len(), &shape);
    let allowed_set_check = allowed.contains(&involutions.len());
    Ok(HyperellipticReport {
        rank: r,
        involutions,
        subgraphs,
        image_size: image.len(),
        shape,
        allowed_set_check,
    })
}

/// Expresses the 1-skeleton of `C(P, lambda_tau)` as a subgraph in polytope
/// vertices/edges, marking whether it covers every vertex of the finer
/// complex `C(P, lambda)`.
fn skeleton_as_subgraph(
    p: &SimplePolytope,
    projected: &AffineColoring,
    finer: &ColoringComplex,
) -> HamSubgraph {
    let cx = build_complex(p, &projected.facet_coloring()).expect("length checked");
    let kind = match (cx.cvertices.len(), cx.one_faces.len()) {
        (0, 0) => SubgraphKind::EmptySet,
        (0, _) => SubgraphKind::Cycle,
        (2, 3) => SubgraphKind::Theta,
        (4, 6) => SubgraphKind::K4,
        (v, e) => unreachable!("sphere skeleton with {v} vertices and {e} 1-faces"),
    };
    let branch_vertices = cx.cvertices.clone();
    let paths: Vec<SubgraphPath> = cx
        .one_faces
        .iter()
        .map(|of| {
            let vertices = walk_vertices(p, of);
            SubgraphPath { vertices, edges: of.edges.clone() }
        })
        .collect();
    let covered: BTreeSet<usize> = paths
        .iter()
        .flat_map(|path| path.vertices.iter().copied())
        .chain(branch_vertices.iter().copied())
        .collect();
    let spanning = finer.cvertices.iter().all(|v| covered.contains(v));
    HamSubgraph { kind, branch_vertices, paths, spanning }
}

/// Vertex walk of a 1-face: closed for circles (first = last).
fn walk_vertices(p: &SimplePolytope, of: &crate::complex::OneFace) -> Vec<usize> {
    let first = of.edges[0];
    let (a, b) = p.edges()[first].vertices;
    let start = match of.kind {
        OneFaceKind::Path => of.endpoints.expect("path endpoints").0,
        OneFaceKind::Circle => a.min(b),
    };
    let mut vertices = vec![start];
    let mut current = start;
    for &e in &of.edges {
        let (x, y) = p.edges()[e].vertices;
        current = if x == current { y } else { x };
        vertices.push(current);
    }
    vertices
}

/// Candidate special involutions read off the shape of the image point set:
/// pairwise vertex sums for a simplex, the main directions for joins with a
/// prism, nothing otherwise.
pub fn candidate_special_involutions(lambda: &AffineColoring) -> Vec<Gf2Vector> {
    let normalized = lambda.normalized();
    let image = normalized.image();
    match classify_point_set(&AffinePointSet::new(image.clone())) {
        JoinShape::Simplex(_) => {
            let mut sums = Vec::new();
            for i in 0..image.len() {
                for j in (i + 1)..image.len() {
                    sums.push(image[i].xor(&image[j]));
                }
            }
            sums.sort();
            sums.dedup();
            sums
        }
        JoinShape::SimplexJoinPrism { main_directions, .. } => main_directions,
        JoinShape::Other => vec![],
    }
}

/// Connected groups of cfacets not separated by the used 1-faces, ordered by
/// their smallest facet index. Returns `(region index per cfacet, count)`.
fn regions_of(cx: &ColoringComplex, used_one_faces: &[bool]) -> (Vec<usize>, usize) {
    let mut uf = UnionFind::new(cx.cfacets.len());
    for (i, of) in cx.one_faces.iter().enumerate() {
        if !used_one_faces[i] {
            uf.union(of.cfacets.0, of.cfacets.1);
        }
    }
    // Order regions by the smallest polytope facet they contain; cfacets are
    // already ordered by smallest member.
    let mut region_ids: BTreeMap<usize, usize> = BTreeMap::new();
    for c in 0..cx.cfacets.len() {
        let root = uf.find(c);
        let next = region_ids.len();
        region_ids.entry(root).or_insert(next);
    }
    let assignment: Vec<usize> = (0..cx.cfacets.len()).map(|c| region_ids[&uf.find(c)]).collect();
    (assignment, region_ids.len())
}

/// The affine coloring induced by a Hamiltonian subgraph of the complex
/// skeleton: inside each face of the subgraph the facet adjacency tree is
/// 2-colored, and the two colors of face `i` receive the prism points
/// `e_i` and `e_i + e_{r-1}` (so the special involution is `e_{r-1}`).
pub fn induced_coloring(
    p: &SimplePolytope,
    kappa: &FacetColoring,
    gamma: &HamSubgraph,
) -> Result<AffineColoring, SphereError> {
    let cx =
        build_complex(p, kappa).map_err(|e| SphereError::DimensionMismatch(e.to_string()))?;
    let gamma_edges: BTreeSet<usize> = gamma.edge_set().into_iter().collect();
    // The subgraph must consist of whole 1-faces of the complex.
    let mut used_one_faces = vec![false; cx.one_faces.len()];
    let mut covered_edges: BTreeSet<usize> = BTreeSet::new();
    for (i, of) in cx.one_faces.iter().enumerate() {
        let inside = of.edges.iter().filter(|e| gamma_edges.contains(e)).count();
        if inside == of.edges.len() {
            used_one_faces[i] = true;
            covered_edges.extend(of.edges.iter().copied());
        } else if inside > 0 {
            return Err(SphereError::NotSubgraph(format!(
                "1-face {i} is only partially covered"
            )));
        }
    }
    if covered_edges.len() != gamma_edges.len() {
        return Err(SphereError::NotSubgraph(
            "subgraph uses edges outside the complex skeleton".to_string(),
        ));
    }
    // Spanning: every complex vertex lies on the subgraph.
    let gamma_vertices: BTreeSet<usize> = gamma.vertex_set().into_iter().collect();
    if !cx.cvertices.iter().all(|v| gamma_vertices.contains(v)) {
        return Err(SphereError::NotSpanning);
    }
    let rank = match gamma.kind {
        SubgraphKind::EmptySet => 1,
        SubgraphKind::Cycle => 2,
        SubgraphKind::Theta => 3,
        SubgraphKind::K4 => 4,
    };
    let (region_of_cfacet, region_count) = regions_of(&cx, &used_one_faces);
    if region_count != rank {
        return Err(SphereError::NotSubgraph(format!(
            "subgraph of kind {:?} cuts the sphere into {region_count} faces, expected {rank}",
            gamma.kind
        )));
    }
    // 2-color the facet adjacency tree of each region.
    let side = two_color_regions(&cx, &used_one_faces, &region_of_cfacet, region_count)?;
    let m = p.num_facets();
    let mut points = vec![Gf2Vector::zeros(rank); m];
    for f in 0..m {
        let c = cx.cfacet_of[f];
        let region = region_of_cfacet[c];
        let mut point = Gf2Vector::unit(rank, region);
        if !side[c] {
            // The opposite base of the prism: add the main direction.
            point = point.xor(&Gf2Vector::unit(rank, rank - 1));
        }
        points[f] = point;
    }
    Ok(AffineColoring::new(rank, points))
}

/// For each region, 2-colors its cfacet adjacency graph (edges = unused
/// 1-faces). The graph must be a tree; the root (the cfacet with the
/// smallest facet index in the region) gets `true`.
fn two_color_regions(
    cx: &ColoringComplex,
    used_one_faces: &[bool],
    region_of_cfacet: &[usize],
    region_count: usize,
) -> Result<Vec<bool>, SphereError> {
    let n = cx.cfacets.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edge_count = vec![0usize; region_count];
    for (i, of) in cx.one_faces.iter().enumerate() {
        if !used_one_faces[i] {
            let (a, b) = of.cfacets;
            adj[a].push(b);
            adj[b].push(a);
            edge_count[region_of_cfacet[a]] += 1;
        }
    }
    let mut node_count = vec![0usize; region_count];
    for c in 0..n {
        node_count[region_of_cfacet[c]] += 1;
    }
    for r in 0..region_count {
        if edge_count[r] + 1 != node_count[r] {
            return Err(SphereError::FaceTreeViolation);
        }
    }
    let mut side = vec![true; n];
    let mut seen = vec![false; n];
    // The first unseen cfacet of a region (in index order) is the one with
    // its smallest facet: it becomes the root.
    for c in 0..n {
        if seen[c] {
            continue;
        }
        seen[c] = true;
        side[c] = true;
        let mut stack = vec![c];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    side[w] = !side[u];
                    stack.push(w);
                }
            }
        }
    }
    Ok(side)
}

/// The sphere coloring attached to a nonempty face `G` of the polytope:
/// the `s`-th facet of `G` is sent to `e_s`, everything else to 0.
pub fn coloring_from_face(p: &SimplePolytope, face: &[usize]) -> Result<AffineColoring, SphereError> {
    let mut g: Vec<usize> = face.to_vec();
    g.sort_unstable();
    g.dedup();
    if g.is_empty() || g.len() > 3 || g.len() != face.len() {
        return Err(SphereError::EmptyFace);
    }
    if g.iter().any(|&f| f >= p.num_facets()) {
        return Err(SphereError::EmptyFace);
    }
    let nonempty = match g.len() {
        1 => true,
        2 => p.edge_between(g[0], g[1]).is_some(),
        3 => p.vertex_triples().contains(&[g[0], g[1], g[2]]),
        _ => false,
    };
    if !nonempty {
        return Err(SphereError::EmptyFace);
    }
    let k = g.len();
    let mut points = vec![Gf2Vector::zeros(k); p.num_facets()];
    for (s, &f) in g.iter().enumerate() {
        points[f] = Gf2Vector::unit(k, s);
    }
    Ok(AffineColoring::new(k, points))
}

/// One subgroup `H` with `N(P, H)` a 3-sphere, together with the subgraph
/// parametrizing it and the region coloring that realizes it.
#[derive(Clone, Debug)]
pub struct SphereSubgroupEntry {
    pub subgraph: HamSubgraph,
    pub coloring: AffineColoring,
    pub subgroup: SubgroupDescription,
}

/// The sphere-subgroup census: every simple cycle, theta- and K4-subgraph of
/// the polytope graph, plus the orientation subgroup `H_0` as the separately
/// flagged empty-subgraph entry.
#[derive(Clone, Debug)]
pub struct SphereSubgroupsReport {
    pub entries: Vec<SphereSubgroupEntry>,
    /// The entry for `H_0` (constant coloring, empty subgraph).
    pub h0: SphereSubgroupEntry,
    pub truncated: bool,
}

/// Enumerates the subgroups of `Z_2^m` whose quotient is `S^3`, one per
/// cycle/theta/K4 subgraph of the graph of `P`.
pub fn sphere_subgroups(p: &SimplePolytope, limit: usize) -> SphereSubgroupsReport {
    let g = p.graph();
    let mut entries = Vec::new();
    let mut truncated = false;
    for kind in [SubgraphKind::Cycle, SubgraphKind::Theta, SubgraphKind::K4] {
        let budget = limit.saturating_sub(entries.len());
        let result = enumerate_subgraphs(&g, kind, false, budget);
        truncated |= result.truncated;
        for sub in result.items {
            let coloring = region_coloring(p, &sub);
            debug_assert_eq!(is_sphere(p, &coloring), Ok(true));
            let subgroup = subgroup_of(&coloring.to_vector());
            entries.push(SphereSubgroupEntry { subgraph: sub, coloring, subgroup });
        }
        if truncated {
            break;
        }
    }
    let constant = AffineColoring::constant(p.num_facets());
    let h0 = SphereSubgroupEntry {
        subgraph: HamSubgraph::empty(p.num_vertices() == 0),
        subgroup: subgroup_of(&constant.to_vector()),
        coloring: constant,
    };
    SphereSubgroupsReport { entries, h0, truncated }
}

/// Colors the faces cut out by a subgraph of the polytope graph with
/// affinely independent points: region 0 gets the origin, region `s` gets
/// `e_s`.
fn region_coloring(p: &SimplePolytope, sub: &HamSubgraph) -> AffineColoring {
    let gamma_edges: BTreeSet<usize> = sub.edge_set().into_iter().collect();
    let m = p.num_facets();
    let mut uf = UnionFind::new(m);
    for (idx, e) in p.edges().iter().enumerate() {
        if !gamma_edges.contains(&idx) {
            uf.union(e.facets.0, e.facets.1);
        }
    }
    let mut region_ids: BTreeMap<usize, usize> = BTreeMap::new();
    for f in 0..m {
        let root = uf.find(f);
        let next = region_ids.len();
        region_ids.entry(root).or_insert(next);
    }
    let k = region_ids.len() - 1;
    let points: Vec<Gf2Vector> = (0..m)
        .map(|f| {
            let region = region_ids[&uf.find(f)];
            if region == 0 {
                Gf2Vector::zeros(k)
            } else {
                Gf2Vector::unit(k, region - 1)
            }
        })
        .collect();
    AffineColoring::new(k, points)
}
