//! Exhaustive search machinery on cubic graphs: Hamiltonian cycles,
//! 1-factorizations and perfect pairs, consistent cycle triples, and
//! theta-/K4-subgraph enumeration.
//!
//! Graphs here may have parallel edges (a theta-graph is two vertices joined
//! by three edges) but no loops. All searches are deterministic: adjacency is
//! scanned in edge-index order and results are reported in a canonical order
//! (sorted edge-index sets).

use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} has degree {1}, expected 3")]
    NotCubic(usize, usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("edge references vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("edge set is not a Hamiltonian cycle")]
    NotHamiltonian,
}

/// A 3-regular multigraph without loops. `faces`, when present, lists the
/// boundary of each 2-cell as edge indices (polytope facets or complex
/// cfacets); `circles` carries ids of vertexless circle components that live
/// alongside the graph when it comes from a coloring complex.
#[derive(Clone, Debug)]
pub struct CubicGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
    pub faces: Option<Vec<Vec<usize>>>,
    pub circles: Vec<usize>,
}

impl CubicGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for (idx, &(u, v)) in edges.iter().enumerate() {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v));
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            adj[u].push((v, idx));
            adj[v].push((u, idx));
        }
        for (v, nb) in adj.iter().enumerate() {
            if nb.len() != 3 {
                return Err(GraphError::NotCubic(v, nb.len()));
            }
        }
        let edges = edges
            .into_iter()
            .map(|(u, v)| if u <= v { (u, v) } else { (v, u) })
            .collect();
        Ok(CubicGraph { n, edges, adj, faces: None, circles: Vec::new() })
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, idx: usize) -> (usize, usize) {
        self.edges[idx]
    }

    /// Neighbors of `v` as `(vertex, edge index)`, in edge-index order.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let reached = self.reachable(&vec![false; self.n]);
        reached.iter().filter(|&&r| r).count() == self.n
    }

    fn reachable(&self, removed: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let Some(start) = (0..self.n).find(|&v| !removed[v]) else {
            return seen;
        };
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            for &(w, _) in &self.adj[u] {
                if !removed[w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Standard 2-coloring test; parallel edges are harmless (they form
    /// even cycles).
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &(w, _) in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!color[u].unwrap());
                            stack.push(w);
                        }
                        Some(c) => {
                            if c == color[u].unwrap() {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    fn component_count(&self, skip_edge: Option<usize>) -> usize {
        let mut seen = vec![false; self.n];
        let mut components = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &(w, e) in &self.adj[u] {
                    if Some(e) != skip_edge && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    /// An edge whose deletion increases the number of components.
    pub fn has_bridge(&self) -> bool {
        let base = self.component_count(None);
        (0..self.edges.len()).any(|e| self.component_count(Some(e)) > base)
    }

    /// True for the theta-graph: two vertices joined by three edges.
    pub fn is_theta(&self) -> bool {
        self.n == 2 && self.edges.len() == 3 && self.edges.iter().all(|&e| e == (0, 1))
    }

    /// Simple (no parallel edges) and 3-connected, checked by brute-force
    /// deletion of vertex pairs.
    pub fn is_simple_and_3_connected(&self) -> bool {
        if self.n < 4 {
            return false;
        }
        let mut seen_pairs = BTreeSet::new();
        for &e in &self.edges {
            if !seen_pairs.insert(e) {
                return false;
            }
        }
        for a in 0..self.n {
            let mut removed = vec![false; self.n];
            removed[a] = true;
            let reach = self.reachable(&removed);
            if (0..self.n).any(|v| !removed[v] && !reach[v]) {
                return false;
            }
            for b in (a + 1)..self.n {
                removed[b] = true;
                let reach = self.reachable(&removed);
                if (0..self.n).any(|v| !removed[v] && !reach[v]) {
                    return false;
                }
                removed[b] = false;
            }
        }
        true
    }
}

/// Search output plus a flag marking that the limit cut the search short.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult<T> {
    pub items: Vec<T>,
    pub truncated: bool,
}

/// All distinct Hamiltonian cycles as sorted edge-index sets, in
/// lexicographic order. Stops once `limit` cycles are collected and another
/// one is seen.
pub fn enumerate_hamiltonian_cycles(g: &CubicGraph, limit: usize) -> SearchResult<Vec<usize>> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut truncated = false;
    if g.n == 0 {
        return SearchResult { items: vec![], truncated: false };
    }
    let mut visited = vec![false; g.n];
    visited[0] = true;
    let mut path_edges: Vec<usize> = Vec::with_capacity(g.n);

    fn dfs(
        g: &CubicGraph,
        current: usize,
        visited: &mut Vec<bool>,
        path_edges: &mut Vec<usize>,
        found: &mut BTreeSet<Vec<usize>>,
        limit: usize,
        truncated: &mut bool,
    ) {
        if *truncated {
            return;
        }
        for &(w, e) in g.neighbors(current) {
            if *truncated {
                return;
            }
            if w == 0 && path_edges.len() == g.n - 1 {
                let mut cycle = path_edges.clone();
                cycle.push(e);
                cycle.sort_unstable();
                if !found.contains(&cycle) {
                    if found.len() == limit {
                        *truncated = true;
                        return;
                    }
                    found.insert(cycle);
                }
            } else if !visited[w] && path_edges.len() + 1 < g.n {
                visited[w] = true;
                path_edges.push(e);
                dfs(g, w, visited, path_edges, found, limit, truncated);
                path_edges.pop();
                visited[w] = false;
            }
        }
    }

    if g.n == 2 {
        // Theta-like graphs: a Hamiltonian cycle is any pair of parallel edges.
        for i in 0..g.edges.len() {
            for j in (i + 1)..g.edges.len() {
                let cycle = vec![i, j];
                if !found.contains(&cycle) {
                    if found.len() == limit {
                        truncated = true;
                        break;
                    }
                    found.insert(cycle);
                }
            }
        }
    } else {
        dfs(g, 0, &mut visited, &mut path_edges, &mut found, limit, &mut truncated);
    }
    SearchResult { items: found.into_iter().collect(), truncated }
}

/// Three disjoint perfect matchings covering the edge set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneFactorization {
    pub factors: [Vec<usize>; 3],
}

impl OneFactorization {
    pub fn is_valid(&self, g: &CubicGraph) -> bool {
        let mut count = vec![0usize; g.n_edges()];
        for f in &self.factors {
            let mut covered = vec![false; g.n_vertices()];
            for &e in f {
                count[e] += 1;
                let (u, v) = g.edge(e);
                if covered[u] || covered[v] {
                    return false;
                }
                covered[u] = true;
                covered[v] = true;
            }
            if covered.iter().any(|&c| !c) {
                return false;
            }
        }
        count.iter().all(|&c| c == 1)
    }
}

fn is_hamiltonian_cycle(g: &CubicGraph, edges: &[usize]) -> bool {
    if edges.len() != g.n || g.n == 0 {
        return false;
    }
    let mut deg = vec![0usize; g.n];
    for &e in edges {
        let (u, v) = g.edge(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    if deg.iter().any(|&d| d != 2) {
        return false;
    }
    // 2-regular covering all vertices: connected iff a single cycle.
    let edge_set: BTreeSet<usize> = edges.iter().copied().collect();
    let mut seen = vec![false; g.n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for &(w, e) in g.neighbors(u) {
            if edge_set.contains(&e) && !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == g.n
}

/// Splits the graph along a Hamiltonian cycle: chords form one factor and
/// the cycle edges alternate into the other two, with the lexicographically
/// smallest cycle edge placed first.
pub fn factorization_from_cycle(g: &CubicGraph, cycle: &[usize]) -> Result<OneFactorization, GraphError> {
    if !is_hamiltonian_cycle(g, cycle) {
        return Err(GraphError::NotHamiltonian);
    }
    let cycle_set: BTreeSet<usize> = cycle.iter().copied().collect();
    let chords: Vec<usize> = (0..g.n_edges()).filter(|e| !cycle_set.contains(e)).collect();
    // Walk the cycle starting from its smallest edge; alternation around an
    // even cycle does not depend on the walk direction.
    let start_edge = *cycle_set.iter().next().unwrap();
    let (start_vertex, mut current) = g.edge(start_edge);
    let mut factor_a = vec![start_edge];
    let mut factor_b = Vec::new();
    let mut prev_edge = start_edge;
    let mut step = 1usize;
    while current != start_vertex {
        let &(next_vertex, next_edge) = g
            .neighbors(current)
            .iter()
            .find(|&&(_, e)| e != prev_edge && cycle_set.contains(&e))
            .expect("cycle walk must continue");
        if step % 2 == 1 {
            factor_b.push(next_edge);
        } else {
            factor_a.push(next_edge);
        }
        prev_edge = next_edge;
        current = next_vertex;
        step += 1;
    }
    factor_a.sort_unstable();
    factor_b.sort_unstable();
    Ok(OneFactorization { factors: [factor_a, factor_b, chords] })
}

/// How many of the three unordered factor pairs union to a single
/// Hamiltonian cycle.
pub fn count_perfect_pairs(g: &CubicGraph, f: &OneFactorization) -> usize {
    let mut count = 0;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let mut union: Vec<usize> = f.factors[i].iter().chain(f.factors[j].iter()).copied().collect();
        union.sort_unstable();
        if is_hamiltonian_cycle(g, &union) {
            count += 1;
        }
    }
    count
}

/// All unordered triples of Hamiltonian cycles such that every edge lies on
/// exactly two of them. Each triple is reported as three sorted edge sets in
/// lexicographic order.
pub fn find_consistent_triples(g: &CubicGraph, limit: usize) -> SearchResult<[Vec<usize>; 3]> {
    let cycles = enumerate_hamiltonian_cycles(g, usize::MAX);
    let mut triples: BTreeSet<[Vec<usize>; 3]> = BTreeSet::new();
    let mut truncated = false;
    for cycle in &cycles.items {
        let f = factorization_from_cycle(g, cycle).expect("enumerated cycle is Hamiltonian");
        if count_perfect_pairs(g, &f) == 3 {
            let mut u13: Vec<usize> = f.factors[0].iter().chain(f.factors[2].iter()).copied().collect();
            let mut u23: Vec<usize> = f.factors[1].iter().chain(f.factors[2].iter()).copied().collect();
            u13.sort_unstable();
            u23.sort_unstable();
            let mut triple = [cycle.clone(), u13, u23];
            triple.sort();
            if !triples.contains(&triple) {
                if triples.len() == limit {
                    truncated = true;
                    break;
                }
                triples.insert(triple);
            }
        }
    }
    SearchResult { items: triples.into_iter().collect(), truncated }
}

/// The subgraph kinds that parametrize sphere quotients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SubgraphKind {
    EmptySet,
    Cycle,
    Theta,
    K4,
}

impl SubgraphKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            SubgraphKind::EmptySet => "empty",
            SubgraphKind::Cycle => "cycle",
            SubgraphKind::Theta => "theta",
            SubgraphKind::K4 => "k4",
        }
    }
}

/// A simple edge-path: `vertices.len() == edges.len() + 1`; for a closed
/// cycle the first and last vertex coincide.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubgraphPath {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// An embedded empty set, simple cycle, theta- or K4-subgraph whose edges
/// are simple edge-paths of the host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamSubgraph {
    pub kind: SubgraphKind,
    pub branch_vertices: Vec<usize>,
    pub paths: Vec<SubgraphPath>,
    pub spanning: bool,
}

impl HamSubgraph {
    pub fn empty(spanning: bool) -> Self {
        HamSubgraph { kind: SubgraphKind::EmptySet, branch_vertices: vec![], paths: vec![], spanning }
    }

    /// All host edges used by the subgraph, sorted.
    pub fn edge_set(&self) -> Vec<usize> {
        let mut e: Vec<usize> = self.paths.iter().flat_map(|p| p.edges.iter().copied()).collect();
        e.sort_unstable();
        e.dedup();
        e
    }

    /// All host vertices covered, sorted.
    pub fn vertex_set(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.paths.iter().flat_map(|p| p.vertices.iter().copied()).collect();
        v.extend(self.branch_vertices.iter().copied());
        v.sort_unstable();
        v.dedup();
        v
    }

    fn canonical_key(&self) -> (Vec<usize>, Vec<usize>) {
        (self.branch_vertices.clone(), self.edge_set())
    }
}

/// Enumerates all subgraphs of a kind, optionally restricted to spanning
/// (Hamiltonian) ones. Deterministic order; the limit counts subgraphs.
pub fn enumerate_subgraphs(
    g: &CubicGraph,
    kind: SubgraphKind,
    spanning: bool,
    limit: usize,
) -> SearchResult<HamSubgraph> {
    let mut collected: Vec<HamSubgraph> = Vec::new();
    let mut keys: BTreeSet<(Vec<usize>, Vec<usize>)> = BTreeSet::new();
    let mut truncated = false;
    let mut push = |s: HamSubgraph, truncated: &mut bool| -> bool {
        let key = s.canonical_key();
        if keys.contains(&key) {
            return true;
        }
        if collected.len() == limit {
            *truncated = true;
            return false;
        }
        keys.insert(key);
        collected.push(s);
        true
    };
    match kind {
        SubgraphKind::EmptySet => {
            // Meaningful only for vertexless skeletons; handled by callers.
        }
        SubgraphKind::Cycle => {
            'outer: for start in 0..g.n {
                let mut visited = vec![false; g.n];
                visited[start] = true;
                let mut stack_path: Vec<(usize, usize)> = Vec::new(); // (vertex, edge into it)
                // Iterative DFS over simple paths with all vertices >= start.
                fn cycle_dfs(
                    g: &CubicGraph,
                    start: usize,
                    current: usize,
                    visited: &mut Vec<bool>,
                    path: &mut Vec<(usize, usize)>,
                    spanning: bool,
                    push: &mut dyn FnMut(HamSubgraph) -> bool,
                ) -> bool {
                    for &(w, e) in g.neighbors(current) {
                        if w == start && !path.is_empty() {
                            let first_edge = path[0].1;
                            if e != first_edge && e > first_edge {
                                let mut vertices = vec![start];
                                vertices.extend(path.iter().map(|&(v, _)| v));
                                vertices.push(start);
                                let mut edges: Vec<usize> = path.iter().map(|&(_, e)| e).collect();
                                edges.push(e);
                                let is_spanning = vertices.len() - 1 == g.n;
                                if !spanning || is_spanning {
                                    let sub = HamSubgraph {
                                        kind: SubgraphKind::Cycle,
                                        branch_vertices: vec![],
                                        paths: vec![SubgraphPath { vertices, edges }],
                                        spanning: is_spanning,
                                    };
                                    if !push(sub) {
                                        return false;
                                    }
                                }
                            }
                        } else if w > start && !visited[w] {
                            visited[w] = true;
                            path.push((w, e));
                            if !cycle_dfs(g, start, w, visited, path, spanning, push) {
                                return false;
                            }
                            path.pop();
                            visited[w] = false;
                        }
                    }
                    true
                }
                // 2-cycles through parallel edges at `start` are found by the
                // same walk (path of length 1, closing edge > first edge).
                let keep_going = cycle_dfs(g, start, start, &mut visited, &mut stack_path, spanning, &mut |s| {
                    push(s, &mut truncated)
                });
                if !keep_going {
                    break 'outer;
                }
            }
        }
        SubgraphKind::Theta => {
            'outer_theta: for u in 0..g.n {
                for v in (u + 1)..g.n {
                    let paths = simple_paths(g, u, v, &[]);
                    for i in 0..paths.len() {
                        for j in (i + 1)..paths.len() {
                            if !paths_disjoint(&paths[i], &paths[j]) {
                                continue;
                            }
                            for k in (j + 1)..paths.len() {
                                if !paths_disjoint(&paths[i], &paths[k])
                                    || !paths_disjoint(&paths[j], &paths[k])
                                {
                                    continue;
                                }
                                let chosen = vec![paths[i].clone(), paths[j].clone(), paths[k].clone()];
                                let covered = covered_count(g.n, &chosen, &[u, v]);
                                let is_spanning = covered == g.n;
                                if spanning && !is_spanning {
                                    continue;
                                }
                                let sub = HamSubgraph {
                                    kind: SubgraphKind::Theta,
                                    branch_vertices: vec![u, v],
                                    paths: chosen,
                                    spanning: is_spanning,
                                };
                                if !push(sub, &mut truncated) {
                                    break 'outer_theta;
                                }
                            }
                        }
                    }
                }
            }
        }
        SubgraphKind::K4 => {
            'outer_k4: for a in 0..g.n {
                for b in (a + 1)..g.n {
                    for c in (b + 1)..g.n {
                        for d in (c + 1)..g.n {
                            let branch = [a, b, c, d];
                            let pairs = [(a, b), (a, c), (a, d), (b, c), (b, d), (c, d)];
                            let mut chosen: Vec<SubgraphPath> = Vec::with_capacity(6);
                            if !k4_assemble(g, &branch, &pairs, 0, &mut chosen, &mut |paths| {
                                let covered = covered_count(g.n, paths, &branch);
                                let is_spanning = covered == g.n;
                                if spanning && !is_spanning {
                                    return true;
                                }
                                let sub = HamSubgraph {
                                    kind: SubgraphKind::K4,
                                    branch_vertices: branch.to_vec(),
                                    paths: paths.to_vec(),
                                    spanning: is_spanning,
                                };
                                push(sub, &mut truncated)
                            }) {
                                break 'outer_k4;
                            }
                        }
                    }
                }
            }
        }
    }
    collected.sort_by_key(|s| s.canonical_key());
    SearchResult { items: collected, truncated }
}

/// All simple `u`-`v` paths avoiding `blocked` vertices internally, as
/// (vertices, edges) walks from `u` to `v`, in deterministic order.
fn simple_paths(g: &CubicGraph, u: usize, v: usize, blocked: &[usize]) -> Vec<SubgraphPath> {
    let mut result = Vec::new();
    let mut visited = vec![false; g.n];
    for &b in blocked {
        visited[b] = true;
    }
    visited[u] = true;
    let mut vertices = vec![u];
    let mut edges = Vec::new();

    fn dfs(
        g: &CubicGraph,
        current: usize,
        target: usize,
        visited: &mut Vec<bool>,
        vertices: &mut Vec<usize>,
        edges: &mut Vec<usize>,
        result: &mut Vec<SubgraphPath>,
    ) {
        for &(w, e) in g.neighbors(current) {
            if w == target {
                let mut vs = vertices.clone();
                vs.push(target);
                let mut es = edges.clone();
                es.push(e);
                result.push(SubgraphPath { vertices: vs, edges: es });
            } else if !visited[w] {
                visited[w] = true;
                vertices.push(w);
                edges.push(e);
                dfs(g, w, target, visited, vertices, edges, result);
                edges.pop();
                vertices.pop();
                visited[w] = false;
            }
        }
    }

    let mut visited2 = visited.clone();
    visited2[v] = true; // internal vertices must avoid the target too
    dfs(g, u, v, &mut visited2, &mut vertices, &mut edges, &mut result);
    result.sort();
    result.dedup();
    result
}

/// Internal-vertex and edge disjointness for paths sharing only endpoints.
fn paths_disjoint(p: &SubgraphPath, q: &SubgraphPath) -> bool {
    let pi: BTreeSet<usize> = p.vertices[1..p.vertices.len() - 1].iter().copied().collect();
    if q.vertices[1..q.vertices.len() - 1].iter().any(|w| pi.contains(w)) {
        return false;
    }
    let pe: BTreeSet<usize> = p.edges.iter().copied().collect();
    !q.edges.iter().any(|e| pe.contains(e))
}

fn covered_count(n: usize, paths: &[SubgraphPath], branch: &[usize]) -> usize {
    let mut seen = vec![false; n];
    for &b in branch {
        seen[b] = true;
    }
    for p in paths {
        for &v in &p.vertices {
            seen[v] = true;
        }
    }
    seen.iter().filter(|&&s| s).count()
}

/// Backtracks over the six K4 pair paths; `emit` returns false to abort the
/// whole search (limit reached).
fn k4_assemble(
    g: &CubicGraph,
    branch: &[usize; 4],
    pairs: &[(usize, usize); 6],
    idx: usize,
    chosen: &mut Vec<SubgraphPath>,
    emit: &mut dyn FnMut(&[SubgraphPath]) -> bool,
) -> bool {
    if idx == 6 {
        return emit(chosen);
    }
    let (u, v) = pairs[idx];
    let blocked: Vec<usize> = branch.iter().copied().filter(|&x| x != u && x != v).collect();
    for path in simple_paths(g, u, v, &blocked) {
        if chosen.iter().all(|p| paths_disjoint(p, &path)) {
            chosen.push(path);
            if !k4_assemble(g, branch, pairs, idx + 1, chosen, emit) {
                chosen.pop();
                return false;
            }
            chosen.pop();
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> CubicGraph {
        CubicGraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn cube_graph() -> CubicGraph {
        // Vertices are binary triples; edges flip one bit.
        let mut edges = Vec::new();
        for v in 0..8usize {
            for bit in [1, 2, 4] {
                let w = v ^ bit;
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        CubicGraph::new(8, edges).unwrap()
    }

    fn prism_graph(k: usize) -> CubicGraph {
        let mut edges = Vec::new();
        for i in 0..k {
            edges.push((i, (i + 1) % k));
        }
        for i in 0..k {
            edges.push((k + i, k + (i + 1) % k));
        }
        for i in 0..k {
            edges.push((i, k + i));
        }
        CubicGraph::new(2 * k, edges).unwrap()
    }

    fn theta() -> CubicGraph {
        CubicGraph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap()
    }

    #[test]
    fn hamiltonian_counts() {
        assert_eq!(enumerate_hamiltonian_cycles(&k4(), usize::MAX).items.len(), 3);
        assert_eq!(enumerate_hamiltonian_cycles(&cube_graph(), usize::MAX).items.len(), 6);
        assert_eq!(enumerate_hamiltonian_cycles(&theta(), usize::MAX).items.len(), 3);
    }

    #[test]
    fn hamiltonian_cycles_visit_each_vertex_once() {
        for g in [k4(), cube_graph(), prism_graph(5)] {
            for cycle in enumerate_hamiltonian_cycles(&g, usize::MAX).items {
                let mut deg = vec![0; g.n_vertices()];
                for &e in &cycle {
                    let (u, v) = g.edge(e);
                    deg[u] += 1;
                    deg[v] += 1;
                }
                assert!(deg.iter().all(|&d| d == 2));
            }
        }
    }

    #[test]
    fn truncation_flag() {
        let r = enumerate_hamiltonian_cycles(&cube_graph(), 2);
        assert_eq!(r.items.len(), 2);
        assert!(r.truncated);
        let r = enumerate_hamiltonian_cycles(&cube_graph(), 6);
        assert_eq!(r.items.len(), 6);
        assert!(!r.truncated);
    }

    #[test]
    fn factorization_shapes() {
        let g = k4();
        for cycle in enumerate_hamiltonian_cycles(&g, usize::MAX).items {
            let f = factorization_from_cycle(&g, &cycle).unwrap();
            assert!(f.is_valid(&g));
            assert!(f.factors.iter().all(|fac| fac.len() == 2));
        }
        let g = cube_graph();
        for cycle in enumerate_hamiltonian_cycles(&g, usize::MAX).items {
            let f = factorization_from_cycle(&g, &cycle).unwrap();
            assert!(f.is_valid(&g));
            assert!(f.factors.iter().all(|fac| fac.len() == 4));
        }
    }

    #[test]
    fn not_hamiltonian_rejected() {
        let g = k4();
        assert_eq!(factorization_from_cycle(&g, &[0, 1, 2]), Err(GraphError::NotHamiltonian));
    }

    #[test]
    fn perfect_pair_counts() {
        // Simplex: every Hamiltonian cycle has all three pairs perfect.
        let g = k4();
        for cycle in enumerate_hamiltonian_cycles(&g, usize::MAX).items {
            let f = factorization_from_cycle(&g, &cycle).unwrap();
            assert_eq!(count_perfect_pairs(&g, &f), 3);
        }
        // Cube: two of three.
        let g = cube_graph();
        for cycle in enumerate_hamiltonian_cycles(&g, usize::MAX).items {
            let f = factorization_from_cycle(&g, &cycle).unwrap();
            assert_eq!(count_perfect_pairs(&g, &f), 2);
        }
        // 5-prism: one of three.
        let g = prism_graph(5);
        for cycle in enumerate_hamiltonian_cycles(&g, usize::MAX).items {
            let f = factorization_from_cycle(&g, &cycle).unwrap();
            assert_eq!(count_perfect_pairs(&g, &f), 1);
        }
        // Cycle-derived pairs always include the cycle itself.
        for g in [k4(), cube_graph(), prism_graph(5)] {
            for cycle in enumerate_hamiltonian_cycles(&g, usize::MAX).items {
                let f = factorization_from_cycle(&g, &cycle).unwrap();
                assert!(count_perfect_pairs(&g, &f) >= 1);
            }
        }
    }

    #[test]
    fn consistent_triples() {
        assert!(!find_consistent_triples(&k4(), usize::MAX).items.is_empty());
        assert!(find_consistent_triples(&cube_graph(), usize::MAX).items.is_empty());
        assert!(!find_consistent_triples(&prism_graph(3), usize::MAX).items.is_empty());
        assert!(find_consistent_triples(&prism_graph(5), usize::MAX).items.is_empty());
    }

    #[test]
    fn triples_cover_each_edge_twice() {
        for g in [k4(), prism_graph(3)] {
            for triple in find_consistent_triples(&g, usize::MAX).items {
                let mut count = vec![0usize; g.n_edges()];
                for cycle in &triple {
                    assert!(is_hamiltonian_cycle(&g, cycle));
                    for &e in cycle {
                        count[e] += 1;
                    }
                }
                assert!(count.iter().all(|&c| c == 2));
            }
        }
    }

    #[test]
    fn bipartite_examples() {
        assert!(cube_graph().is_bipartite());
        assert!(!k4().is_bipartite());
        assert!(!prism_graph(5).is_bipartite());
        assert!(prism_graph(4).is_bipartite());
        assert!(theta().is_bipartite());
    }

    #[test]
    fn bipartite_blocks_triples() {
        for g in [cube_graph(), prism_graph(4), prism_graph(6)] {
            assert!(g.is_bipartite());
            assert!(find_consistent_triples(&g, usize::MAX).items.is_empty());
        }
    }

    #[test]
    fn triple_graphs_are_theta_or_polytopal() {
        for g in [k4(), prism_graph(3), theta()] {
            if !find_consistent_triples(&g, usize::MAX).items.is_empty() {
                assert!(g.is_theta() || g.is_simple_and_3_connected());
            }
        }
    }

    #[test]
    fn k4_cycle_census() {
        let r = enumerate_subgraphs(&k4(), SubgraphKind::Cycle, false, usize::MAX);
        assert_eq!(r.items.len(), 7); // four 3-cycles and three 4-cycles
        let spanning: Vec<_> = r.items.iter().filter(|s| s.spanning).collect();
        assert_eq!(spanning.len(), 3);
    }

    #[test]
    fn k4_whole_graph_is_the_unique_spanning_k4() {
        let r = enumerate_subgraphs(&k4(), SubgraphKind::K4, true, usize::MAX);
        assert_eq!(r.items.len(), 1);
        assert_eq!(r.items[0].edge_set(), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn cube_has_spanning_theta() {
        let r = enumerate_subgraphs(&cube_graph(), SubgraphKind::Theta, true, usize::MAX);
        assert!(!r.items.is_empty());
        for s in &r.items {
            assert_eq!(s.paths.len(), 3);
            assert!(s.spanning);
            assert_eq!(s.vertex_set().len(), 8);
        }
    }

    #[test]
    fn theta_graph_recognized() {
        assert!(theta().is_theta());
        assert!(!k4().is_theta());
        assert!(k4().is_simple_and_3_connected());
        assert!(cube_graph().is_simple_and_3_connected());
    }

    #[test]
    fn bridges_and_connectivity() {
        assert!(!k4().has_bridge());
        assert!(!cube_graph().has_bridge());
        assert!(cube_graph().is_connected());
    }
}
