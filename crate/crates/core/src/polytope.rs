//! Combinatorial simple 3-polytopes.
//!
//! The sole source of truth is the list of vertex-facet incidence triples;
//! edges and facet boundary cycles are derived. Validation enforces the full
//! simple-polytope package: every facet pair shared by a vertex spans exactly
//! one edge with two endpoints, facet boundaries are single cycles, the Euler
//! relation holds, and the vertex graph is planar-polytopal in the Steinitz
//! sense (simple and 3-connected; sphericity is implied by the facet data).

use std::collections::{BTreeMap, BTreeSet};

use serde::Deserialize;
use thiserror::Error;

use crate::hamilton::CubicGraph;

#[derive(Debug, Error)]
pub enum PolytopeError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("unknown polytope name: {0}")]
    UnknownName(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

/// An edge of the polytope: the intersection of two facets, with its two
/// endpoint vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub facets: (usize, usize),
    pub vertices: (usize, usize),
}

/// A combinatorial simple 3-polytope.
#[derive(Clone, Debug)]
pub struct SimplePolytope {
    name: String,
    m: usize,
    vertices: Vec<[usize; 3]>,
    edges: Vec<Edge>,
    vertex_edges: Vec<[usize; 3]>,
    facet_cycles: Vec<Vec<usize>>, // edge indices in boundary order
}

impl PartialEq for SimplePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.m == other.m && self.vertices == other.vertices
    }
}

impl SimplePolytope {
    /// Builds and fully validates a polytope from raw incidence triples.
    pub fn new(name: &str, num_facets: usize, triples: Vec<[usize; 3]>) -> Result<Self, PolytopeError> {
        let triples = canonical_triples(triples);
        let violations = validate(num_facets, &triples);
        if let Some(v) = violations.first() {
            return Err(PolytopeError::Validation(v.clone()));
        }
        Ok(Self::build_unchecked(name, num_facets, triples))
    }

    fn build_unchecked(name: &str, m: usize, vertices: Vec<[usize; 3]>) -> Self {
        let edges = derive_edges(&vertices).expect("validated incidence");
        let mut vertex_edges = vec![[usize::MAX; 3]; vertices.len()];
        let mut fill = vec![0usize; vertices.len()];
        for (idx, e) in edges.iter().enumerate() {
            for v in [e.vertices.0, e.vertices.1] {
                vertex_edges[v][fill[v]] = idx;
                fill[v] += 1;
            }
        }
        let facet_cycles = (0..m)
            .map(|f| facet_cycle(f, &edges).expect("validated facet cycle"))
            .collect();
        SimplePolytope { name: name.to_string(), m, vertices, edges, vertex_edges, facet_cycles }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_facets(&self) -> usize {
        self.m
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Sorted facet triples, one per vertex, lexicographically ordered.
    pub fn vertex_triples(&self) -> &[[usize; 3]] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The three edges incident to a vertex.
    pub fn vertex_edges(&self, v: usize) -> [usize; 3] {
        self.vertex_edges[v]
    }

    /// Boundary edges of a facet in cyclic order.
    pub fn facet_cycle(&self, f: usize) -> &[usize] {
        &self.facet_cycles[f]
    }

    /// Vertices lying on a facet, ascending.
    pub fn facet_vertices(&self, f: usize) -> Vec<usize> {
        let mut vs: Vec<usize> = self
            .facet_cycles[f]
            .iter()
            .flat_map(|&e| [self.edges[e].vertices.0, self.edges[e].vertices.1])
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Looks up the edge between two facets, if the facets are adjacent.
    pub fn edge_between(&self, f1: usize, f2: usize) -> Option<usize> {
        let key = if f1 <= f2 { (f1, f2) } else { (f2, f1) };
        self.edges.iter().position(|e| e.facets == key)
    }

    /// The 1-skeleton as a cubic graph; faces carry the facet boundary
    /// cycles as edge-index lists.
    pub fn graph(&self) -> CubicGraph {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| e.vertices).collect();
        let mut g = CubicGraph::new(self.vertices.len(), edges).expect("polytope skeleton is cubic");
        g.faces = Some(self.facet_cycles.clone());
        g
    }

    /// Canonical JSON form: two-space indent, triples inline, keys in the
    /// order `name`, `num_facets`, `vertices`.
    pub fn to_canonical_json(&self) -> String {
        let mut out = String::new();
        out.push_str("{\n");
        out.push_str(&format!("  \"name\": {},\n", serde_json::to_string(&self.name).unwrap()));
        out.push_str(&format!("  \"num_facets\": {},\n", self.m));
        out.push_str("  \"vertices\": [\n");
        for (i, t) in self.vertices.iter().enumerate() {
            let sep = if i + 1 == self.vertices.len() { "" } else { "," };
            out.push_str(&format!("    [{}, {}, {}]{}\n", t[0], t[1], t[2], sep));
        }
        out.push_str("  ]\n");
        out.push_str("}\n");
        out
    }
}

fn canonical_triples(mut triples: Vec<[usize; 3]>) -> Vec<[usize; 3]> {
    for t in &mut triples {
        t.sort_unstable();
    }
    triples.sort_unstable();
    triples
}

/// Groups the facet pairs of each vertex triple into edges; `None` when some
/// pair does not occur in exactly two vertices.
fn derive_edges(triples: &[[usize; 3]]) -> Option<Vec<Edge>> {
    let mut pair_vertices: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (v, t) in triples.iter().enumerate() {
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            pair_vertices.entry((a, b)).or_default().push(v);
        }
    }
    let mut edges = Vec::new();
    for (pair, vs) in pair_vertices {
        if vs.len() != 2 {
            return None;
        }
        edges.push(Edge { facets: pair, vertices: (vs[0], vs[1]) });
    }
    Some(edges)
}

/// Walks the edges incident to facet `f` into a single closed cycle;
/// `None` when they do not form one.
fn facet_cycle(f: usize, edges: &[Edge]) -> Option<Vec<usize>> {
    let incident: Vec<usize> = (0..edges.len())
        .filter(|&e| edges[e].facets.0 == f || edges[e].facets.1 == f)
        .collect();
    if incident.is_empty() {
        return None;
    }
    // Each vertex on the facet must lie on exactly two incident edges.
    let mut at_vertex: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &e in &incident {
        at_vertex.entry(edges[e].vertices.0).or_default().push(e);
        at_vertex.entry(edges[e].vertices.1).or_default().push(e);
    }
    if at_vertex.values().any(|es| es.len() != 2) {
        return None;
    }
    let start = incident[0];
    let mut cycle = vec![start];
    let mut current_vertex = edges[start].vertices.1;
    let mut current_edge = start;
    while current_vertex != edges[start].vertices.0 {
        let es = &at_vertex[&current_vertex];
        let next = if es[0] == current_edge { es[1] } else { es[0] };
        cycle.push(next);
        let (a, b) = edges[next].vertices;
        current_vertex = if a == current_vertex { b } else { a };
        current_edge = next;
    }
    if cycle.len() == incident.len() {
        Some(cycle)
    } else {
        None
    }
}

/// Checks every simple-polytope invariant on raw incidence data, including
/// Steinitz 3-connectivity, and returns the violations found.
pub fn validate(num_facets: usize, triples: &[[usize; 3]]) -> Vec<String> {
    let mut violations = Vec::new();
    let mut cleaned: Vec<[usize; 3]> = Vec::new();
    let mut seen = BTreeSet::new();
    for t in triples {
        let mut s = *t;
        s.sort_unstable();
        if s[0] == s[1] || s[1] == s[2] {
            violations.push(format!("vertex triple {:?} has repeated facets", t));
            continue;
        }
        if s[2] >= num_facets {
            violations.push(format!("vertex triple {:?} references facet out of range", t));
            continue;
        }
        if !seen.insert(s) {
            violations.push(format!("duplicate vertex triple {:?}", s));
            continue;
        }
        cleaned.push(s);
    }
    cleaned.sort_unstable();
    let v = cleaned.len();
    if v < 4 {
        violations.push(format!("vertex count {v} below minimum 4"));
    }
    if v % 2 != 0 {
        violations.push(format!("vertex count {v} is odd"));
    }
    // Edge multiplicity: each facet pair occurring at a vertex must occur at
    // exactly two.
    let mut pair_count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for t in &cleaned {
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            *pair_count.entry((a, b)).or_insert(0) += 1;
        }
    }
    let mut multiplicity_ok = true;
    for (&(a, b), &c) in &pair_count {
        if c != 2 {
            violations.push(format!("edge multiplicity: facet pair ({a}, {b}) occurs in {c} vertices"));
            multiplicity_ok = false;
        }
    }
    let e = pair_count.len();
    if v as i64 - e as i64 + num_facets as i64 != 2 {
        violations.push(format!(
            "Euler relation violated: V - E + F = {} - {} + {} != 2",
            v, e, num_facets
        ));
    }
    if !multiplicity_ok || v < 4 {
        return violations;
    }
    let edges = match derive_edges(&cleaned) {
        Some(e) => e,
        None => return violations,
    };
    for f in 0..num_facets {
        if !edges.iter().any(|e| e.facets.0 == f || e.facets.1 == f) {
            violations.push(format!("facet {f} has no edges"));
        } else if facet_cycle(f, &edges).is_none() {
            violations.push(format!("facet {f} boundary is not a single closed cycle"));
        }
    }
    // Facet adjacency connectivity.
    if num_facets > 0 {
        let mut reach = vec![false; num_facets];
        reach[0] = true;
        let mut stack = vec![0usize];
        while let Some(f) = stack.pop() {
            for e in &edges {
                let (a, b) = e.facets;
                if a == f && !reach[b] {
                    reach[b] = true;
                    stack.push(b);
                }
                if b == f && !reach[a] {
                    reach[a] = true;
                    stack.push(a);
                }
            }
        }
        if reach.iter().any(|&r| !r) {
            violations.push("facet adjacency graph disconnected".to_string());
        }
    }
    if !violations.is_empty() {
        return violations;
    }
    // Steinitz: vertex graph simple and 3-connected.
    let graph_edges: Vec<(usize, usize)> = edges.iter().map(|e| e.vertices).collect();
    match CubicGraph::new(v, graph_edges) {
        Ok(g) => {
            if !g.is_simple_and_3_connected() {
                violations.push("vertex graph is not simple and 3-connected".to_string());
            }
        }
        Err(err) => violations.push(format!("vertex graph is not cubic: {err}")),
    }
    violations
}

#[derive(Deserialize)]
struct PolytopeDocument {
    name: String,
    num_facets: usize,
    vertices: Vec<[usize; 3]>,
}

/// Parses and validates a polytope JSON document.
pub fn parse(document: &str) -> Result<SimplePolytope, PolytopeError> {
    let doc: PolytopeDocument =
        serde_json::from_str(document).map_err(|e| PolytopeError::Schema(e.to_string()))?;
    SimplePolytope::new(&doc.name, doc.num_facets, doc.vertices)
}

/// A named entry of the builtin library.
pub struct PolytopeLibraryEntry {
    pub name: &'static str,
    pub parametric: bool,
    pub description: &'static str,
}

/// The builtin polytopes of the toolkit.
pub const LIBRARY: &[PolytopeLibraryEntry] = &[
    PolytopeLibraryEntry { name: "simplex", parametric: false, description: "3-simplex, 4 triangles" },
    PolytopeLibraryEntry { name: "cube", parametric: false, description: "3-cube, 6 quadrangles" },
    PolytopeLibraryEntry {
        name: "prism",
        parametric: true,
        description: "k-prism (k >= 3): two k-gons and k quadrangles",
    },
    PolytopeLibraryEntry {
        name: "dodecahedron",
        parametric: false,
        description: "dodecahedron, 12 pentagons",
    },
    PolytopeLibraryEntry {
        name: "barrel6",
        parametric: false,
        description: "6-barrel (Loebell polytope L(6)): 2 hexagons and 12 pentagons",
    },
];

/// Returns a builtin polytope by name; `prism` takes the gon count `k >= 3`.
pub fn builtin(name: &str, param: Option<usize>) -> Result<SimplePolytope, PolytopeError> {
    match name {
        "simplex" => SimplePolytope::new(
            "simplex",
            4,
            vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]],
        ),
        "cube" => {
            // Facet pairs (0,1), (2,3), (4,5) are opposite.
            let mut triples = Vec::new();
            for x in 0..2 {
                for y in 0..2 {
                    for z in 0..2 {
                        triples.push([x, 2 + y, 4 + z]);
                    }
                }
            }
            SimplePolytope::new("cube", 6, triples)
        }
        "prism" => {
            let k = param.ok_or_else(|| PolytopeError::BadParameter("prism requires k".into()))?;
            if k < 3 {
                return Err(PolytopeError::BadParameter(format!("prism requires k >= 3, got {k}")));
            }
            // Side facets 0..k-1 in cyclic order; bottom k, top k+1.
            let mut triples = Vec::new();
            for i in 0..k {
                triples.push([i, (i + 1) % k, k]);
                triples.push([i, (i + 1) % k, k + 1]);
            }
            SimplePolytope::new(&format!("prism{k}"), k + 2, triples)
        }
        "dodecahedron" => barrel("dodecahedron", 5),
        "barrel6" => barrel("barrel6", 6),
        other => Err(PolytopeError::UnknownName(other.to_string())),
    }
}

/// The k-barrel: bottom/top k-gons and two belts of k pentagons.
/// `barrel(5)` is the dodecahedron, `barrel(6)` the Loebell polytope L(6).
fn barrel(name: &str, k: usize) -> Result<SimplePolytope, PolytopeError> {
    let bottom = 0usize;
    let top = 1usize;
    let lower = |i: usize| 2 + (i % k);
    let upper = |i: usize| 2 + k + (i % k);
    let mut triples = Vec::new();
    for i in 0..k {
        triples.push([bottom, lower(i), lower(i + 1)]);
        triples.push([top, upper(i), upper(i + 1)]);
        triples.push([lower(i), upper(i), upper(i + 1)]);
        triples.push([lower(i), lower(i + 1), upper(i + 1)]);
    }
    SimplePolytope::new(name, 2 + 2 * k, triples)
}

/// Convenience list of every builtin used by tests and fuzzing: the named
/// solids plus small prisms.
pub fn all_builtins() -> Vec<SimplePolytope> {
    let mut all = vec![
        builtin("simplex", None).unwrap(),
        builtin("cube", None).unwrap(),
        builtin("dodecahedron", None).unwrap(),
        builtin("barrel6", None).unwrap(),
    ];
    for k in 3..=8 {
        all.push(builtin("prism", Some(k)).unwrap());
    }
    all
}
