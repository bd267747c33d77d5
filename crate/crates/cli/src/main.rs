//! polyquot: decision procedures for quotients of real moment-angle
//! manifolds over simple 3-polytopes.
//!
//! Every subcommand is a thin adapter over the library: it loads a polytope
//! (and usually a coloring), runs one decision procedure, and prints a
//! deterministic JSON object (keys sorted, lists sorted). Human output
//! mirrors the JSON content. Exit code 2 signals an input error, reported as
//! one line of JSON on stderr.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use polyquot::coloring::{
    is_free, is_manifold, orientation_character, AffineColoring, ColoringDocument,
    IntegerColoring, ManifoldStatus, SubgroupDescription, VectorColoring,
};
use polyquot::complex::{build_complex, ColoringComplex, OneFaceKind};
use polyquot::gf2::Gf2Vector;
use polyquot::hamilton::{
    count_perfect_pairs, enumerate_hamiltonian_cycles, enumerate_subgraphs,
    factorization_from_cycle, find_consistent_triples, HamSubgraph, SubgraphKind,
};
use polyquot::homology::{betti_choi_park, betti_direct, build_simplicial_model, is_rhs, RhsMode};
use polyquot::polytope::{builtin, parse, SimplePolytope, LIBRARY};
use polyquot::spheres::{enumerate_hyperelliptic, is_sphere, sphere_subgroups};

#[derive(Parser)]
#[command(name = "polyquot", version, about = "Exact decision procedures for polytope quotients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit machine-readable JSON (the default; kept for symmetry).
    #[arg(long, global = true)]
    json: bool,
    /// Human-readable summary instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    human: bool,
}

#[derive(Args)]
struct PolytopeArg {
    /// Path to a polytope JSON file, or `builtin:NAME[:K]`.
    #[arg(long)]
    polytope: String,
}

#[derive(Args)]
struct ColoringArg {
    /// Path to a coloring JSON file.
    #[arg(long)]
    coloring: String,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a polytope file and report violations.
    Validate(PolytopeArg),
    /// List builtin polytopes or print one in canonical JSON.
    Library {
        #[arg(long)]
        list: bool,
        #[arg(long)]
        get: Option<String>,
        #[arg(long)]
        param: Option<usize>,
    },
    /// Dump the complex C(P, c) of a coloring.
    Complex {
        #[command(flatten)]
        polytope: PolytopeArg,
        #[command(flatten)]
        coloring: ColoringArg,
    },
    /// Decide whether N(P, Lambda) is a closed manifold or has boundary.
    Manifold {
        #[command(flatten)]
        polytope: PolytopeArg,
        #[command(flatten)]
        coloring: ColoringArg,
    },
    /// Decide orientability and report the orientation character.
    Orientable {
        #[command(flatten)]
        polytope: PolytopeArg,
        #[command(flatten)]
        coloring: ColoringArg,
    },
    /// Decide whether N(P, lambda) is homeomorphic to the 3-sphere.
    Sphere {
        #[command(flatten)]
        polytope: PolytopeArg,
        #[command(flatten)]
        coloring: ColoringArg,
    },
    /// Decide whether N(P, lambda) is a rational homology 3-sphere.
    Rhs {
        #[command(flatten)]
        polytope: PolytopeArg,
        #[command(flatten)]
        coloring: ColoringArg,
        /// Restrict to hyperplanes through this point, e.g. `101`.
        #[arg(long)]
        through_point: Option<String>,
    },
    /// Rational Betti numbers via the facet-union decomposition.
    Betti {
        #[command(flatten)]
        polytope: PolytopeArg,
        #[command(flatten)]
        coloring: ColoringArg,
        /// Also run the independent simplicial computation and compare.
        #[arg(long)]
        direct: bool,
    },
    /// Enumerate hyperelliptic involutions of N(P, lambda).
    Hyperelliptic {
        #[command(flatten)]
        polytope: PolytopeArg,
        #[command(flatten)]
        coloring: ColoringArg,
    },
    /// Hamiltonian cycle and subgraph searches on the polytope graph.
    Hamiltonian {
        #[command(flatten)]
        polytope: PolytopeArg,
        /// Enumerate theta-subgraphs instead of cycles.
        #[arg(long)]
        theta: bool,
        /// Enumerate K4-subgraphs instead of cycles.
        #[arg(long, conflicts_with = "theta")]
        k4: bool,
        /// Only spanning (Hamiltonian) subgraphs.
        #[arg(long)]
        spanning: bool,
        /// Find triples of Hamiltonian cycles covering each edge twice.
        #[arg(long)]
        consistent_triples: bool,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Enumerate subgroups whose quotient is the 3-sphere.
    SphereSubgroups {
        #[command(flatten)]
        polytope: PolytopeArg,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Decide whether the torus space M(P, Lambda) is a manifold.
    TorusManifold {
        #[command(flatten)]
        polytope: PolytopeArg,
        #[command(flatten)]
        coloring: ColoringArg,
    },
    /// Decide whether M(P, Lambda) is a sphere.
    TorusSphere {
        #[command(flatten)]
        polytope: PolytopeArg,
        #[command(flatten)]
        coloring: ColoringArg,
    },
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(value) => {
            if cli.human {
                print_human(&value, 0);
            } else {
                println!("{}", serde_json::to_string(&value).expect("serializable"));
            }
            ExitCode::SUCCESS
        }
        Err(InputError(message)) => {
            eprintln!("{}", json!({ "error": message }));
            ExitCode::from(2)
        }
    }
}

fn print_human(value: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) | Value::Array(_) => {
                        println!("{pad}{k}:");
                        print_human(v, indent + 1);
                    }
                    _ => println!("{pad}{k}: {v}"),
                }
            }
        }
        Value::Array(items) => {
            for v in items {
                match v {
                    Value::Object(_) | Value::Array(_) => {
                        println!("{pad}-");
                        print_human(v, indent + 1);
                    }
                    _ => println!("{pad}- {v}"),
                }
            }
        }
        _ => println!("{pad}{value}"),
    }
}

fn load_polytope(arg: &PolytopeArg) -> Result<SimplePolytope, InputError> {
    if let Some(spec) = arg.polytope.strip_prefix("builtin:") {
        let mut parts = spec.split(':');
        let name = parts.next().unwrap_or_default();
        let param = match parts.next() {
            Some(k) => Some(k.parse::<usize>().map_err(|e| InputError(e.to_string()))?),
            None => None,
        };
        return Ok(builtin(name, param)?);
    }
    let text = std::fs::read_to_string(&arg.polytope)
        .map_err(|e| InputError(format!("{}: {e}", arg.polytope)))?;
    Ok(parse(&text)?)
}

fn load_coloring_doc(arg: &ColoringArg) -> Result<ColoringDocument, InputError> {
    let text = std::fs::read_to_string(&arg.coloring)
        .map_err(|e| InputError(format!("{}: {e}", arg.coloring)))?;
    Ok(ColoringDocument::parse(&text)?)
}

fn check_length(p: &SimplePolytope, columns: usize) -> Result<(), InputError> {
    if columns != p.num_facets() {
        return Err(InputError(format!(
            "coloring has {columns} columns, polytope has {} facets",
            p.num_facets()
        )));
    }
    Ok(())
}

fn vertex_facets(p: &SimplePolytope) -> Vec<Vec<usize>> {
    p.vertex_triples().iter().map(|t| t.to_vec()).collect()
}

fn default_limit(explicit: Option<usize>) -> usize {
    explicit
        .or_else(|| std::env::var("POLYQUOT_LIMIT").ok().and_then(|s| s.parse().ok()))
        .unwrap_or(100_000)
}

fn bitvec_json(v: &Gf2Vector) -> Value {
    Value::String(v.to_bit_string())
}

fn subgroup_json(s: &SubgroupDescription) -> Value {
    json!({
        "ambient": s.ambient,
        "basis": s.basis.iter().map(bitvec_json).collect::<Vec<_>>(),
        "equations": s.defining_equations,
    })
}

fn subgraph_json(s: &HamSubgraph) -> Value {
    json!({
        "kind": s.kind.as_str(),
        "branch_vertices": s.branch_vertices,
        "paths": s.paths.iter().map(|p| json!(p.vertices)).collect::<Vec<_>>(),
        "edges": s.edge_set(),
        "spanning": s.spanning,
    })
}

fn complex_json(cx: &ColoringComplex) -> Value {
    json!({
        "cfacets": cx.cfacets,
        "one_faces": cx.one_faces.iter().map(|of| json!({
            "kind": match of.kind { OneFaceKind::Circle => "circle", OneFaceKind::Path => "path" },
            "edges": of.edges,
            "cfacets": [of.cfacets.0, of.cfacets.1],
        })).collect::<Vec<_>>(),
        "cvertices": cx.cvertices,
    })
}

fn affine_from_doc(p: &SimplePolytope, doc: &ColoringDocument) -> Result<AffineColoring, InputError> {
    check_length(p, doc.columns.len())?;
    Ok(doc.as_affine()?)
}

fn vector_from_doc(p: &SimplePolytope, doc: &ColoringDocument) -> Result<VectorColoring, InputError> {
    check_length(p, doc.columns.len())?;
    Ok(doc.as_vector()?)
}

fn integer_from_doc(p: &SimplePolytope, doc: &ColoringDocument) -> Result<IntegerColoring, InputError> {
    check_length(p, doc.columns.len())?;
    Ok(doc.as_integer()?)
}

fn run(cli: &Cli) -> Result<Value, InputError> {
    match &cli.command {
        Command::Validate(polytope) => {
            if polytope.polytope.starts_with("builtin:") {
                let p = load_polytope(polytope)?;
                return Ok(json!({ "valid": true, "name": p.name(), "violations": [] }));
            }
            let text = std::fs::read_to_string(&polytope.polytope)
                .map_err(|e| InputError(format!("{}: {e}", polytope.polytope)))?;
            let doc: serde_json::Value = serde_json::from_str(&text)?;
            let name = doc.get("name").and_then(Value::as_str).unwrap_or("").to_string();
            let num_facets = doc
                .get("num_facets")
                .and_then(Value::as_u64)
                .ok_or_else(|| InputError("missing num_facets".into()))? as usize;
            let triples: Vec<[usize; 3]> =
                serde_json::from_value(doc.get("vertices").cloned().unwrap_or(Value::Null))
                    .map_err(|e| InputError(e.to_string()))?;
            let violations = polyquot::polytope::validate(num_facets, &triples);
            Ok(json!({ "valid": violations.is_empty(), "name": name, "violations": violations }))
        }
        Command::Library { list, get, param } => {
            if *list || get.is_none() {
                let entries: Vec<Value> = LIBRARY
                    .iter()
                    .map(|e| {
                        json!({
                            "name": e.name,
                            "parametric": e.parametric,
                            "description": e.description,
                        })
                    })
                    .collect();
                return Ok(json!({ "library": entries }));
            }
            let name = get.as_deref().unwrap();
            let p = builtin(name, *param)?;
            Ok(serde_json::from_str(&p.to_canonical_json())?)
        }
        Command::Complex { polytope, coloring } => {
            let p = load_polytope(polytope)?;
            let doc = load_coloring_doc(coloring)?;
            check_length(&p, doc.columns.len())?;
            let facet_coloring = match doc.kind.as_str() {
                "affine" => doc.as_affine()?.facet_coloring(),
                _ => doc.as_vector()?.facet_coloring(),
            };
            let cx = build_complex(&p, &facet_coloring)?;
            let recognized = polyquot::complex::recognize_c3r(&cx, &p);
            Ok(json!({
                "complex": complex_json(&cx),
                "model": recognized.map(|r| format!("C(3,{r})")),
            }))
        }
        Command::Manifold { polytope, coloring } => {
            let p = load_polytope(polytope)?;
            let doc = load_coloring_doc(coloring)?;
            let vc = vector_from_doc(&p, &doc)?;
            let status = is_manifold(&vertex_facets(&p), &vc)?;
            let free = is_free(&vertex_facets(&p), &vc)?;
            let (result, detail) = match status {
                ManifoldStatus::Closed => (true, json!({ "closed": true })),
                ManifoldStatus::WithBoundary(facets) => {
                    (true, json!({ "closed": false, "boundary_facets": facets }))
                }
                ManifoldStatus::NotManifold(v) => (false, json!({ "witness_vertex": v })),
            };
            let mut out = json!({ "result": result, "free": free });
            merge(&mut out, detail);
            Ok(out)
        }
        Command::Orientable { polytope, coloring } => {
            let p = load_polytope(polytope)?;
            let doc = load_coloring_doc(coloring)?;
            let vc = vector_from_doc(&p, &doc)?;
            let character = orientation_character(&vc);
            Ok(json!({
                "result": character.is_some(),
                "character": character.as_ref().map(|c| c.to_bit_string()),
                "closed": !vc.has_zero_column(),
            }))
        }
        Command::Sphere { polytope, coloring } => {
            let p = load_polytope(polytope)?;
            let doc = load_coloring_doc(coloring)?;
            let lambda = affine_from_doc(&p, &doc)?;
            let result = is_sphere(&p, &lambda)?;
            let r = lambda.normalized().ambient();
            Ok(json!({
                "result": result,
                "r": r,
                "complex": if result { Some(format!("C(3,{})", r + 1)) } else { None },
            }))
        }
        Command::Rhs { polytope, coloring, through_point } => {
            let p = load_polytope(polytope)?;
            let doc = load_coloring_doc(coloring)?;
            let lambda = affine_from_doc(&p, &doc)?;
            let mode = match through_point {
                Some(bits) => RhsMode::ThroughPoint(parse_bits(bits, lambda.ambient())?),
                None => RhsMode::AllHyperplanes,
            };
            let result = is_rhs(&p, &lambda, mode.clone())?;
            Ok(json!({
                "result": result,
                "mode": match mode {
                    RhsMode::AllHyperplanes => "all-hyperplanes".to_string(),
                    RhsMode::ThroughPoint(q) => format!("through-point:{}", q.to_bit_string()),
                },
                "rank": lambda.normalized().ambient(),
            }))
        }
        Command::Betti { polytope, coloring, direct } => {
            let p = load_polytope(polytope)?;
            let doc = load_coloring_doc(coloring)?;
            let vc = vector_from_doc(&p, &doc)?;
            let betti = betti_choi_park(&p, &vc)?;
            let orientable = orientation_character(&vc).is_some();
            let closed = !vc.has_zero_column();
            let mut out = json!({
                "b": betti.b,
                "method": "choi-park",
                "orientable": orientable,
                "closed": closed,
            });
            if *direct {
                let model = build_simplicial_model(&p, &vc);
                let direct_betti = betti_direct(&model);
                merge(
                    &mut out,
                    json!({
                        "direct": { "b": direct_betti.b, "method": "direct" },
                        "agree": direct_betti == betti,
                    }),
                );
            }
            Ok(out)
        }
        Command::Hyperelliptic { polytope, coloring } => {
            let p = load_polytope(polytope)?;
            let doc = load_coloring_doc(coloring)?;
            let lambda = affine_from_doc(&p, &doc)?;
            let report = enumerate_hyperelliptic(&p, &lambda)?;
            Ok(json!({
                "rank": report.rank,
                "count": report.involutions.len(),
                "involutions": report.involutions.iter().map(bitvec_json).collect::<Vec<_>>(),
                "subgraphs": report.subgraphs.iter().map(subgraph_json).collect::<Vec<_>>(),
                "image_size": report.image_size,
                "allowed_set_check": report.allowed_set_check,
            }))
        }
        Command::Hamiltonian { polytope, theta, k4, spanning, consistent_triples, limit } => {
            let p = load_polytope(polytope)?;
            let g = p.graph();
            let limit = default_limit(*limit);
            if *consistent_triples {
                let triples = find_consistent_triples(&g, limit);
                return Ok(json!({
                    "triples": triples.items,
                    "count": triples.items.len(),
                    "truncated": triples.truncated,
                }));
            }
            if *theta || *k4 {
                let kind = if *theta { SubgraphKind::Theta } else { SubgraphKind::K4 };
                let found = enumerate_subgraphs(&g, kind, *spanning, limit);
                return Ok(json!({
                    "subgraphs": found.items.iter().map(subgraph_json).collect::<Vec<_>>(),
                    "count": found.items.len(),
                    "truncated": found.truncated,
                }));
            }
            if *spanning {
                let cycles = enumerate_hamiltonian_cycles(&g, limit);
                let detailed: Vec<Value> = cycles
                    .items
                    .iter()
                    .map(|c| {
                        let f = factorization_from_cycle(&g, c).expect("hamiltonian");
                        json!({ "edges": c, "perfect_pairs": count_perfect_pairs(&g, &f) })
                    })
                    .collect();
                return Ok(json!({
                    "cycles": detailed,
                    "count": cycles.items.len(),
                    "truncated": cycles.truncated,
                }));
            }
            let found = enumerate_subgraphs(&g, SubgraphKind::Cycle, false, limit);
            Ok(json!({
                "subgraphs": found.items.iter().map(subgraph_json).collect::<Vec<_>>(),
                "count": found.items.len(),
                "truncated": found.truncated,
            }))
        }
        Command::SphereSubgroups { polytope, limit } => {
            let p = load_polytope(polytope)?;
            let report = sphere_subgroups(&p, default_limit(*limit));
            Ok(json!({
                "h0": {
                    "subgroup": subgroup_json(&report.h0.subgroup),
                    "subgraph": subgraph_json(&report.h0.subgraph),
                },
                "entries": report.entries.iter().map(|e| json!({
                    "subgraph": subgraph_json(&e.subgraph),
                    "subgroup": subgroup_json(&e.subgroup),
                })).collect::<Vec<_>>(),
                "count": report.entries.len(),
                "truncated": report.truncated,
            }))
        }
        Command::TorusManifold { polytope, coloring } => {
            let p = load_polytope(polytope)?;
            let doc = load_coloring_doc(coloring)?;
            let ic = integer_from_doc(&p, &doc)?;
            let result = polyquot::coloring::torus_is_manifold(&vertex_facets(&p), &ic)?;
            Ok(json!({ "result": result, "dimension": 3 + ic.rank() }))
        }
        Command::TorusSphere { polytope, coloring } => {
            let p = load_polytope(polytope)?;
            let doc = load_coloring_doc(coloring)?;
            let ic = integer_from_doc(&p, &doc)?;
            let outcome = polyquot::coloring::torus_is_sphere(&p, &ic);
            let mut out = json!({
                "result": outcome.is_sphere,
                "dimension": 3 + ic.rank(),
            });
            if !outcome.decidable {
                merge(
                    &mut out,
                    json!({ "warning": "not decidable: no recognition procedure for rank > 4" }),
                );
            }
            Ok(out)
        }
    }
}

fn parse_bits(text: &str, len: usize) -> Result<Gf2Vector, InputError> {
    if text.len() != len || text.chars().any(|c| c != '0' && c != '1') {
        return Err(InputError(format!("expected {len} bits of 0/1, got {text:?}")));
    }
    let coords: Vec<u8> = text.chars().map(|c| u8::from(c == '1')).collect();
    Ok(Gf2Vector::from_coords(&coords))
}

fn merge(target: &mut Value, addition: Value) {
    if let (Value::Object(t), Value::Object(a)) = (target, addition) {
        for (k, v) in a {
            t.insert(k, v);
        }
    }
}
