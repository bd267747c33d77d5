//! The complex `C(P, c)` defined by a facet coloring, invariants of facet
//! unions `P_omega`, and recognition of the model complexes `C(3, r)`.
//!
//! Facets of the complex ("cfacets") are connected components of equal-color
//! facet unions. 1-faces are maximal chains of polytope edges separating the
//! same pair of cfacets: either circles (closed, meeting no complex vertex)
//! or paths between two complex vertices. Complex vertices are polytope
//! vertices where three distinct cfacets meet.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::gf2::Gf2Vector;
use crate::hamilton::CubicGraph;
use crate::polytope::SimplePolytope;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("coloring has {0} labels but the polytope has {1} facets")]
    LengthMismatch(usize, usize),
}

/// A coloring of the facets by opaque labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetColoring {
    labels: Vec<u64>,
}

impl FacetColoring {
    pub fn new(labels: Vec<u64>) -> Self {
        FacetColoring { labels }
    }

    /// Labels facets by the bit patterns of GF(2) points.
    pub fn from_points(points: &[Gf2Vector]) -> Self {
        FacetColoring { labels: points.iter().map(|p| p.bits()).collect() }
    }

    /// Constant coloring on `m` facets.
    pub fn constant(m: usize) -> Self {
        FacetColoring { labels: vec![0; m] }
    }

    /// Each facet its own color.
    pub fn identity(m: usize) -> Self {
        FacetColoring { labels: (0..m as u64).collect() }
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OneFaceKind {
    Circle,
    Path,
}

/// A 1-face of the complex: a chain of polytope edges between two cfacets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneFace {
    pub kind: OneFaceKind,
    /// Polytope edge indices in walk order.
    pub edges: Vec<usize>,
    /// The two distinct cfacets this 1-face separates, ascending.
    pub cfacets: (usize, usize),
    /// Endpoint polytope vertices for a path; `None` for a circle.
    pub endpoints: Option<(usize, usize)>,
}

/// The complex `C(P, c)`.
#[derive(Clone, Debug)]
pub struct ColoringComplex {
    m: usize,
    /// Facet index sets of the cfacets, each sorted; ordered by smallest member.
    pub cfacets: Vec<Vec<usize>>,
    /// Facet -> cfacet index.
    pub cfacet_of: Vec<usize>,
    pub one_faces: Vec<OneFace>,
    /// Polytope vertex indices where three distinct cfacets meet, ascending.
    pub cvertices: Vec<usize>,
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Keep the smaller index as the root for canonical grouping.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Builds `C(P, c)`: cfacets by union-find over same-color edge-adjacent
/// facets, 1-faces by chaining boundary edges, complex vertices where three
/// distinct cfacets meet.
pub fn build_complex(p: &SimplePolytope, c: &FacetColoring) -> Result<ColoringComplex, ComplexError> {
    let m = p.num_facets();
    if c.len() != m {
        return Err(ComplexError::LengthMismatch(c.len(), m));
    }
    let labels = c.labels();
    let mut uf = UnionFind::new(m);
    for e in p.edges() {
        let (f1, f2) = e.facets;
        if labels[f1] == labels[f2] {
            uf.union(f1, f2);
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for f in 0..m {
        let root = uf.find(f);
        groups.entry(root).or_default().push(f);
    }
    let cfacets: Vec<Vec<usize>> = groups.into_values().collect();
    let mut cfacet_of = vec![0usize; m];
    for (i, grp) in cfacets.iter().enumerate() {
        for &f in grp {
            cfacet_of[f] = i;
        }
    }

    let cvertices: Vec<usize> = (0..p.num_vertices())
        .filter(|&v| {
            let t = p.vertex_triples()[v];
            let set: BTreeSet<usize> = t.iter().map(|&f| cfacet_of[f]).collect();
            set.len() == 3
        })
        .collect();
    let cvertex_set: BTreeSet<usize> = cvertices.iter().copied().collect();

    // Boundary edges and the unique continuation through non-complex vertices.
    let is_boundary: Vec<bool> = p
        .edges()
        .iter()
        .map(|e| cfacet_of[e.facets.0] != cfacet_of[e.facets.1])
        .collect();
    // At each polytope vertex, the incident boundary edges; a non-complex
    // vertex with two distinct cfacets carries exactly two of them.
    let mut boundary_at: Vec<Vec<usize>> = vec![Vec::new(); p.num_vertices()];
    for (idx, e) in p.edges().iter().enumerate() {
        if is_boundary[idx] {
            boundary_at[e.vertices.0].push(idx);
            boundary_at[e.vertices.1].push(idx);
        }
    }

    let mut used = vec![false; p.num_edges()];
    let mut one_faces = Vec::new();
    for start in 0..p.num_edges() {
        if !is_boundary[start] || used[start] {
            continue;
        }
        let face = trace_one_face(p, start, &is_boundary, &boundary_at, &cvertex_set, &mut used);
        let (a, b) = p.edges()[face.edges[0]].facets;
        let pair = {
            let (x, y) = (cfacet_of[a], cfacet_of[b]);
            if x <= y { (x, y) } else { (y, x) }
        };
        one_faces.push(OneFace { cfacets: pair, ..face });
    }

    Ok(ColoringComplex { m, cfacets, cfacet_of, one_faces, cvertices })
}

/// Extends from `start` in both directions until a complex vertex or closure.
fn trace_one_face(
    p: &SimplePolytope,
    start: usize,
    is_boundary: &[bool],
    boundary_at: &[Vec<usize>],
    cvertices: &BTreeSet<usize>,
    used: &mut [bool],
) -> OneFace {
    let step = |edge: usize, vertex: usize| -> Option<usize> {
        // Continue through a non-complex vertex along the other boundary edge.
        if cvertices.contains(&vertex) {
            return None;
        }
        let es = &boundary_at[vertex];
        debug_assert_eq!(es.len(), 2, "non-complex vertex must carry exactly two boundary edges");
        let next = if es[0] == edge { es[1] } else { es[0] };
        debug_assert!(is_boundary[next]);
        Some(next)
    };
    let other_end = |edge: usize, vertex: usize| -> usize {
        let (a, b) = p.edges()[edge].vertices;
        if a == vertex { b } else { a }
    };

    used[start] = true;
    let (sv, ev) = p.edges()[start].vertices;
    // Walk forward from `ev`.
    let mut forward = Vec::new();
    let mut vertex = ev;
    let mut edge = start;
    loop {
        match step(edge, vertex) {
            None => break,
            Some(next) => {
                if next == start {
                    // Closed circle.
                    let mut edges = vec![start];
                    edges.extend(forward.iter().copied());
                    return OneFace { kind: OneFaceKind::Circle, edges, cfacets: (0, 0), endpoints: None };
                }
                used[next] = true;
                forward.push(next);
                vertex = other_end(next, vertex);
                edge = next;
            }
        }
    }
    let forward_end = vertex;
    // Walk backward from `sv`.
    let mut backward = Vec::new();
    vertex = sv;
    edge = start;
    while let Some(next) = step(edge, vertex) {
        used[next] = true;
        backward.push(next);
        vertex = other_end(next, vertex);
        edge = next;
    }
    let backward_end = vertex;
    // Orient the path from its smaller endpoint.
    let mut edges: Vec<usize> = backward.into_iter().rev().collect();
    edges.push(start);
    edges.extend(forward);
    let (from, to) = (backward_end, forward_end);
    if from <= to {
        OneFace { kind: OneFaceKind::Path, edges, cfacets: (0, 0), endpoints: Some((from, to)) }
    } else {
        edges.reverse();
        OneFace { kind: OneFaceKind::Path, edges, cfacets: (0, 0), endpoints: Some((to, from)) }
    }
}

/// Topological invariants of a union of closed facets `P_omega`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsurfaceInvariants {
    pub omega: Vec<usize>,
    pub components: usize,
    pub euler_char: i64,
    pub is_empty: bool,
    pub is_all: bool,
    pub is_disk: bool,
    pub holes_per_component: Vec<i64>,
}

/// Computes components (facets sharing a vertex), the Euler characteristic
/// `V' - E' + |omega|` over cells incident to `omega`, and per-component
/// hole counts `2 - chi`.
pub fn subsurface(p: &SimplePolytope, omega: &[usize]) -> SubsurfaceInvariants {
    let mut omega: Vec<usize> = omega.to_vec();
    omega.sort_unstable();
    omega.dedup();
    let m = p.num_facets();
    let in_omega = {
        let mut v = vec![false; m];
        for &f in &omega {
            assert!(f < m, "facet index out of range");
            v[f] = true;
        }
        v
    };
    let is_empty = omega.is_empty();
    let is_all = omega.len() == m;
    if is_empty {
        return SubsurfaceInvariants {
            omega,
            components: 0,
            euler_char: 0,
            is_empty: true,
            is_all: false,
            is_disk: false,
            holes_per_component: vec![],
        };
    }
    let mut uf = UnionFind::new(m);
    for t in p.vertex_triples() {
        let members: Vec<usize> = t.iter().copied().filter(|&f| in_omega[f]).collect();
        for w in members.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let mut comp_of: BTreeMap<usize, usize> = BTreeMap::new();
    for &f in &omega {
        let root = uf.find(f);
        let next = comp_of.len();
        comp_of.entry(root).or_insert(next);
    }
    let components = comp_of.len();

    // chi per component; the total is their sum.
    let mut v_count = vec![0i64; components];
    let mut e_count = vec![0i64; components];
    let mut f_count = vec![0i64; components];
    for &f in &omega {
        let c = comp_of[&uf.find(f)];
        f_count[c] += 1;
    }
    for t in p.vertex_triples() {
        if let Some(&f) = t.iter().find(|&&f| in_omega[f]) {
            let c = comp_of[&uf.find(f)];
            v_count[c] += 1;
        }
    }
    for e in p.edges() {
        let (f1, f2) = e.facets;
        let rep = if in_omega[f1] {
            Some(f1)
        } else if in_omega[f2] {
            Some(f2)
        } else {
            None
        };
        if let Some(f) = rep {
            let c = comp_of[&uf.find(f)];
            e_count[c] += 1;
        }
    }
    let chi_per: Vec<i64> = (0..components).map(|c| v_count[c] - e_count[c] + f_count[c]).collect();
    let euler_char: i64 = chi_per.iter().sum();
    let holes_per_component: Vec<i64> = chi_per.iter().map(|&chi| 2 - chi).collect();
    let is_disk = components == 1 && euler_char == 1 && !is_all;
    SubsurfaceInvariants { omega, components, euler_char, is_empty, is_all, is_disk, holes_per_component }
}

/// Recognizes the model complexes `C(3, r)` for `r <= 4`:
/// one cfacet; two cfacets; three cfacets all disks; four cfacets all disks
/// and pairwise intersecting. Anything else is unrecognized.
pub fn recognize_c3r(cx: &ColoringComplex, p: &SimplePolytope) -> Option<usize> {
    match cx.cfacets.len() {
        1 => Some(1),
        2 => Some(2),
        3 => {
            if cx.cfacets.iter().all(|g| subsurface(p, g).is_disk) {
                Some(3)
            } else {
                None
            }
        }
        4 => {
            if !cx.cfacets.iter().all(|g| subsurface(p, g).is_disk) {
                return None;
            }
            let mut meet = [[false; 4]; 4];
            for of in &cx.one_faces {
                let (a, b) = of.cfacets;
                meet[a][b] = true;
                meet[b][a] = true;
            }
            for a in 0..4 {
                for b in (a + 1)..4 {
                    if !meet[a][b] {
                        return None;
                    }
                }
            }
            Some(4)
        }
        _ => None,
    }
}

/// Checks every structural invariant of a complex against its polytope.
pub fn validate_complex(cx: &ColoringComplex, p: &SimplePolytope) -> Vec<String> {
    let mut violations = Vec::new();
    let m = p.num_facets();
    if cx.m != m {
        violations.push(format!("complex has {} facets, polytope has {m}", cx.m));
    }
    // cfacets partition the facet set.
    let mut covered = vec![0usize; m];
    for grp in &cx.cfacets {
        for &f in grp {
            if f < m {
                covered[f] += 1;
            } else {
                violations.push(format!("facet partition: facet {f} out of range"));
            }
        }
    }
    if covered.iter().any(|&c| c != 1) {
        violations.push("facet partition: cfacets do not partition the facet set".to_string());
    }
    for (i, of) in cx.one_faces.iter().enumerate() {
        let (a, b) = of.cfacets;
        if a == b || a >= cx.cfacets.len() || b >= cx.cfacets.len() {
            violations.push(format!("1-face {i} does not lie in two distinct cfacets"));
        }
        match (of.kind, of.endpoints) {
            (OneFaceKind::Path, None) => {
                violations.push(format!("1-face {i} is a path without endpoints"))
            }
            (OneFaceKind::Circle, Some(_)) => {
                violations.push(format!("1-face {i} is a circle with endpoints"))
            }
            _ => {}
        }
    }
    for &v in &cx.cvertices {
        let t = p.vertex_triples()[v];
        let set: BTreeSet<usize> = t.iter().map(|&f| cx.cfacet_of[f]).collect();
        if set.len() != 3 {
            violations.push(format!("complex vertex {v} does not meet three distinct cfacets"));
        }
    }
    // Every boundary edge lies in exactly one 1-face.
    let mut edge_faces = vec![0usize; p.num_edges()];
    for of in &cx.one_faces {
        for &e in &of.edges {
            edge_faces[e] += 1;
        }
    }
    for (e, edge) in p.edges().iter().enumerate() {
        let boundary = cx.cfacet_of[edge.facets.0] != cx.cfacet_of[edge.facets.1];
        let expected = usize::from(boundary);
        if edge_faces[e] != expected {
            violations.push(format!("edge {e} lies in {} 1-faces, expected {expected}", edge_faces[e]));
        }
    }
    // Skeleton components: circles, or bridgeless cubic graphs.
    let paths: Vec<&OneFace> = cx.one_faces.iter().filter(|of| of.kind == OneFaceKind::Path).collect();
    let index_of: HashMap<usize, usize> =
        cx.cvertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut degree = vec![0usize; cx.cvertices.len()];
    let mut graph_edges = Vec::new();
    for of in &paths {
        if let Some((a, b)) = of.endpoints {
            match (index_of.get(&a), index_of.get(&b)) {
                (Some(&ia), Some(&ib)) => {
                    degree[ia] += 1;
                    degree[ib] += 1;
                    graph_edges.push((ia, ib));
                }
                _ => violations.push("1-face endpoint is not a complex vertex".to_string()),
            }
        }
    }
    if degree.iter().any(|&d| d != 3) {
        violations.push("1-skeleton is not 3-valent at complex vertices".to_string());
    } else if !cx.cvertices.is_empty() {
        match CubicGraph::new(cx.cvertices.len(), graph_edges) {
            Ok(g) => {
                if g.has_bridge() {
                    violations.push("bridge in 1-skeleton".to_string());
                }
            }
            Err(e) => violations.push(format!("1-skeleton not a cubic graph: {e}")),
        }
    }
    violations
}

/// The 1-skeleton as a cubic graph on the complex vertices, with circles
/// carried alongside.
pub struct SkeletonGraph {
    pub graph: CubicGraph,
    /// Skeleton edge index -> index of the path 1-face in `one_faces`.
    pub edge_one_faces: Vec<usize>,
    /// Skeleton vertex index -> polytope vertex index.
    pub vertex_ids: Vec<usize>,
}

/// Builds the skeleton graph; panics if the complex is not 3-valent at its
/// vertices (build_complex output always is).
pub fn skeleton_graph(cx: &ColoringComplex) -> SkeletonGraph {
    let index_of: HashMap<usize, usize> =
        cx.cvertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut edges = Vec::new();
    let mut edge_one_faces = Vec::new();
    let mut circles = Vec::new();
    for (i, of) in cx.one_faces.iter().enumerate() {
        match of.kind {
            OneFaceKind::Path => {
                let (a, b) = of.endpoints.expect("path has endpoints");
                edges.push((index_of[&a], index_of[&b]));
                edge_one_faces.push(i);
            }
            OneFaceKind::Circle => circles.push(i),
        }
    }
    let mut graph = CubicGraph::new(cx.cvertices.len(), edges).expect("skeleton is cubic");
    graph.circles = circles;
    // Faces: for each cfacet, its incident skeleton edges.
    let mut faces = vec![Vec::new(); cx.cfacets.len()];
    for (k, &i) in edge_one_faces.iter().enumerate() {
        let (a, b) = cx.one_faces[i].cfacets;
        faces[a].push(k);
        faces[b].push(k);
    }
    graph.faces = Some(faces);
    SkeletonGraph { graph, edge_one_faces, vertex_ids: cx.cvertices.clone() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{all_builtins, builtin};

    #[test]
    fn constant_coloring() {
        let p = builtin("cube", None).unwrap();
        let cx = build_complex(&p, &FacetColoring::constant(6)).unwrap();
        assert_eq!(cx.cfacets.len(), 1);
        assert!(cx.one_faces.is_empty());
        assert!(cx.cvertices.is_empty());
        assert_eq!(recognize_c3r(&cx, &p), Some(1));
        assert!(validate_complex(&cx, &p).is_empty());
    }

    #[test]
    fn simplex_four_colors() {
        let p = builtin("simplex", None).unwrap();
        let cx = build_complex(&p, &FacetColoring::identity(4)).unwrap();
        assert_eq!(cx.cfacets.len(), 4);
        assert_eq!(cx.one_faces.len(), 6);
        assert_eq!(cx.cvertices.len(), 4);
        assert!(cx.one_faces.iter().all(|of| of.kind == OneFaceKind::Path));
        assert_eq!(recognize_c3r(&cx, &p), Some(4));
        let sk = skeleton_graph(&cx);
        assert_eq!(sk.graph.n_vertices(), 4);
        assert_eq!(sk.graph.n_edges(), 6);
        assert!(sk.graph.circles.is_empty());
        assert!(validate_complex(&cx, &p).is_empty());
    }

    #[test]
    fn cube_opposite_pairs() {
        let p = builtin("cube", None).unwrap();
        // Opposite facets share a color: (0,1), (2,3), (4,5).
        let cx = build_complex(&p, &FacetColoring::new(vec![0, 0, 1, 1, 2, 2])).unwrap();
        assert_eq!(cx.cfacets.len(), 6, "opposite facets are disjoint, classes stay split");
        assert_eq!(cx.one_faces.len(), 12);
        assert_eq!(cx.cvertices.len(), 8);
        assert_eq!(recognize_c3r(&cx, &p), None);
        assert!(validate_complex(&cx, &p).is_empty());
    }

    #[test]
    fn two_complementary_disks_give_a_circle() {
        let p = builtin("prism", Some(5)).unwrap();
        // The top pentagon against everything else.
        let mut labels = vec![0u64; 7];
        labels[6] = 1;
        let cx = build_complex(&p, &FacetColoring::new(labels)).unwrap();
        assert_eq!(cx.cfacets.len(), 2);
        assert_eq!(cx.cvertices.len(), 0);
        assert_eq!(cx.one_faces.len(), 1);
        assert_eq!(cx.one_faces[0].kind, OneFaceKind::Circle);
        assert_eq!(recognize_c3r(&cx, &p), Some(2));
        let sk = skeleton_graph(&cx);
        assert_eq!(sk.graph.n_vertices(), 0);
        assert_eq!(sk.graph.circles.len(), 1);
    }

    #[test]
    fn subsurface_examples() {
        let p = builtin("cube", None).unwrap();
        let one = subsurface(&p, &[0]);
        assert_eq!(one.components, 1);
        assert_eq!(one.euler_char, 1);
        assert!(one.is_disk);
        assert_eq!(one.holes_per_component, vec![1]);

        let opposite = subsurface(&p, &[0, 1]);
        assert_eq!(opposite.components, 2);
        assert!(!opposite.is_disk);

        // Three facets around a vertex: facets 0 (x=0), 2 (y=0), 4 (z=0).
        let corner = subsurface(&p, &[0, 2, 4]);
        assert_eq!(corner.components, 1);
        assert_eq!(corner.euler_char, 1);
        assert!(corner.is_disk);

        let all = subsurface(&p, &[0, 1, 2, 3, 4, 5]);
        assert!(all.is_all);
        assert_eq!(all.euler_char, 2);
        assert!(!all.is_disk);

        let empty = subsurface(&p, &[]);
        assert!(empty.is_empty);
        assert_eq!(empty.components, 0);
    }

    #[test]
    fn face_colorings_recognize_as_codim_plus_one() {
        for p in all_builtins() {
            // G = a facet.
            let mut labels = vec![0u64; p.num_facets()];
            labels[0] = 1;
            let cx = build_complex(&p, &FacetColoring::new(labels)).unwrap();
            assert_eq!(recognize_c3r(&cx, &p), Some(2), "{} facet", p.name());
            // G = an edge.
            let e = p.edges()[0];
            let mut labels = vec![0u64; p.num_facets()];
            labels[e.facets.0] = 1;
            labels[e.facets.1] = 2;
            let cx = build_complex(&p, &FacetColoring::new(labels)).unwrap();
            assert_eq!(recognize_c3r(&cx, &p), Some(3), "{} edge", p.name());
            // G = a vertex.
            let t = p.vertex_triples()[0];
            let mut labels = vec![0u64; p.num_facets()];
            labels[t[0]] = 1;
            labels[t[1]] = 2;
            labels[t[2]] = 3;
            let cx = build_complex(&p, &FacetColoring::new(labels)).unwrap();
            assert_eq!(recognize_c3r(&cx, &p), Some(4), "{} vertex", p.name());
        }
    }

    #[test]
    fn build_complex_invariants_on_random_colorings() {
        let mut seed = 0xabcdef0123456789u64;
        let mut next = || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for p in all_builtins() {
            for _ in 0..30 {
                let colors = 1 + (next() % 4) as u64;
                let labels: Vec<u64> = (0..p.num_facets()).map(|_| next() % colors).collect();
                let cx = build_complex(&p, &FacetColoring::new(labels)).unwrap();
                assert!(validate_complex(&cx, &p).is_empty(), "{}", p.name());
                let total: usize = cx.cfacets.iter().map(|g| g.len()).sum();
                assert_eq!(total, p.num_facets());
                let sk = skeleton_graph(&cx);
                if sk.graph.n_vertices() > 0 {
                    assert!(!sk.graph.has_bridge());
                }
            }
        }
    }

    #[test]
    fn local_surface_property_and_adjacency_equivalence() {
        let mut seed = 0x3141592653589793u64;
        let mut next = || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for p in all_builtins() {
            for _ in 0..20 {
                let omega: Vec<usize> = (0..p.num_facets()).filter(|_| next() % 2 == 0).collect();
                // Local surface property: a vertex meeting exactly two
                // omega-facets sees them share an edge through it.
                for t in p.vertex_triples() {
                    let inside: Vec<usize> =
                        t.iter().copied().filter(|f| omega.contains(f)).collect();
                    if inside.len() == 2 {
                        assert!(p.edge_between(inside[0], inside[1]).is_some());
                    }
                }
                // Vertex-sharing and edge-sharing give the same partition.
                let by_vertex = subsurface(&p, &omega).components;
                let mut uf = UnionFind::new(p.num_facets());
                for e in p.edges() {
                    let (f1, f2) = e.facets;
                    if omega.contains(&f1) && omega.contains(&f2) {
                        uf.union(f1, f2);
                    }
                }
                let mut roots = BTreeSet::new();
                for &f in &omega {
                    roots.insert(uf.find(f));
                }
                assert_eq!(by_vertex, roots.len());
            }
        }
    }

    #[test]
    fn length_mismatch_rejected() {
        let p = builtin("simplex", None).unwrap();
        assert_eq!(
            build_complex(&p, &FacetColoring::constant(3)).unwrap_err(),
            ComplexError::LengthMismatch(3, 4)
        );
    }

    #[test]
    fn hand_built_violations_detected() {
        let p = builtin("simplex", None).unwrap();
        let good = build_complex(&p, &FacetColoring::identity(4)).unwrap();
        // Overlapping cfacets.
        let mut bad = good.clone();
        bad.cfacets[0] = vec![0, 1];
        assert!(validate_complex(&bad, &p).iter().any(|v| v.contains("partition")));
        // A path masquerading as a circle.
        let mut bad = good.clone();
        bad.one_faces[0].kind = OneFaceKind::Circle;
        assert!(!validate_complex(&bad, &p).is_empty());
        // Dropping a 1-face breaks both edge coverage and 3-valence.
        let mut bad = good.clone();
        bad.one_faces.pop();
        let violations = validate_complex(&bad, &p);
        assert!(violations.iter().any(|v| v.contains("1-face") || v.contains("3-valent")));
    }
}
