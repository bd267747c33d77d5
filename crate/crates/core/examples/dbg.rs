use polyquot::complex::*;
use polyquot::polytope::*;

fn main() {
    let mut seed = 0xabcdef0123456789u64;
    let mut next = move || {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        seed
    };
    for p in all_builtins() {
        for _ in 0..30 {
            let colors = 1 + (next() % 4) as u64;
            let labels: Vec<u64> = (0..p.num_facets()).map(|_| next() % colors).collect();
            let cx = build_complex(&p, &FacetColoring::new(labels.clone())).unwrap();
            let v = validate_complex(&cx, &p);
            if !v.is_empty() {
                println!("POLYTOPE {} labels {:?}", p.name(), labels);
                println!("violations: {:?}", v);
                println!("cfacets: {:?}", cx.cfacets);
                println!("cvertices: {:?}", cx.cvertices);
                for of in &cx.one_faces { println!("  {:?}", of); }
                return;
            }
        }
    }
    println!("all clean");
}
