//! Writes the family, c11 and drawing files under DIR and rebuilds
//! DIR/manifest.tsv, listing whatever obstruction files DIR/obstructions holds.
//!
//! cargo run -p projlink-cli --example build_catalog -- DIR

use std::fs;
use std::path::{Path, PathBuf};

use projlink_cli::campaigns::petersen_family;
use projlink_core::embedding::{is_nonseparating_embedding, EmbeddingSearch, Rp2Embedding};
use projlink_core::link::{classify_case, link_report, Case};
use projlink_core::{named, Graph};

struct Row {
    name: String,
    file: String,
    n: usize,
    m: usize,
    provenance: String,
}

fn write(dir: &Path, file: &str, text: &str) {
    let path = dir.join(file);
    fs::create_dir_all(path.parent().unwrap()).unwrap();
    fs::write(path, text).unwrap();
}

fn graph_row(dir: &Path, rows: &mut Vec<Row>, name: &str, file: &str, g: &Graph, extra: &str, provenance: &str) {
    let text = g.clone().with_name(name).to_el();
    let (head, body) = text.split_once('\n').unwrap();
    write(dir, file, &format!("{head}\n{extra}{body}\n"));
    rows.push(Row { name: name.into(), file: file.into(), n: g.vertex_count(), m: g.edge_count(), provenance: provenance.into() });
}

/// Every switching of every enumerated drawing of `g`.
fn signed_drawings(g: &Graph) -> Vec<Rp2Embedding> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for e in EmbeddingSearch::default().enumerate(g).unwrap() {
        for mask in 0u32..1 << n {
            out.push(e.switch_set(mask));
        }
    }
    out
}

fn pick(graphs: &[Graph], want: impl Fn(&Rp2Embedding) -> bool) -> Rp2Embedding {
    graphs
        .iter()
        .flat_map(signed_drawings)
        .find(|e| want(e))
        .expect("no drawing with the requested properties")
}

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).expect("catalog directory"));
    let mut rows = Vec::new();

    for g in petersen_family().unwrap() {
        let name = g.name().unwrap().to_string();
        graph_row(&dir, &mut rows, &name, &format!("family/{name}.el"), &g, "", "Petersen family: delta-wye and wye-delta closure of K6");
    }

    let c11 = named::complete(5).disjoint_union(&named::complete_bipartite(3, 3)).unwrap();
    graph_row(&dir, &mut rows, "c11", "c11.el", &c11, "# components: K5 on 0-4, K3,3 on 5-10\n# mark: 5\n", "C11: K5 and K3,3 components, Y centre marked in K3,3");

    let corpus = [
        named::complete(4),
        named::wheel(4),
        named::triangular_prism(),
        named::complete(5),
        named::complete_bipartite(3, 3),
        named::complete(6),
    ];
    let k6 = EmbeddingSearch::default().enumerate(&named::complete(6)).unwrap().remove(0);
    let cycle = Rp2Embedding::with_positive_signature(named::cycle(6), (0..6).map(|i| vec![(i + 5) % 6, (i + 1) % 6]).collect()).unwrap();
    let nonsep = |e: &Rp2Embedding| is_nonseparating_embedding(e).unwrap();
    let negatives = |e: &Rp2Embedding| e.one_homologous_edges().len();
    let star = pick(&corpus, |e| matches!(classify_case(e), Case::Star(_)) && negatives(e) >= 2 && nonsep(e));
    let triangle = pick(&corpus, |e| matches!(classify_case(e), Case::Triangle(..)) && nonsep(e));
    let neither = pick(&corpus, |e| classify_case(e) == Case::Neither);
    let sep1 = pick(&corpus, |e| nonsep(e) && link_report(e).unwrap().no_link_01 == Some(false));
    for (name, e, provenance) in [
        ("k6-rp2", k6, "first enumerated projective-plane drawing of K6"),
        ("cycle6-positive", cycle, "all-positive drawing of C6"),
        ("star-case", star, "first nonseparating drawing whose negative edges form a star of at least two edges"),
        ("triangle-case", triangle, "first nonseparating drawing whose negative edges form a triangle"),
        ("neither-case", neither, "first drawing with two disjoint negative edges"),
        ("separating-1hom", sep1, "first nonseparating drawing with a separating 1-homologous cycle"),
    ] {
        let file = format!("drawings/{name}.emb");
        let e = Rp2Embedding::parse_emb(&e.to_emb()).unwrap();
        let text = format!("# {name}\n{}", e.to_emb());
        write(&dir, &file, &text);
        rows.push(Row { name: name.into(), file, n: e.graph().vertex_count(), m: e.graph().edge_count(), provenance: provenance.into() });
    }

    let mut obs: Vec<PathBuf> = fs::read_dir(dir.join("obstructions"))
        .map(|d| d.filter_map(|e| e.ok()).map(|e| e.path()).filter(|p| p.extension().is_some_and(|x| x == "el")).collect())
        .unwrap_or_default();
    obs.sort();
    for p in obs {
        let g = Graph::parse_el(&fs::read_to_string(&p).unwrap()).unwrap();
        let name = p.file_stem().unwrap().to_string_lossy().into_owned();
        rows.push(Row {
            file: format!("obstructions/{name}.el"),
            name,
            n: g.vertex_count(),
            m: g.edge_count(),
            provenance: "forbidden minor of the projective plane: non-embeddable, every single deletion or contraction embeds".into(),
        });
    }

    let mut manifest = String::from("name\tfile\tvertices\tedges\tprovenance\n");
    for r in rows {
        manifest.push_str(&format!("{}\t{}\t{}\t{}\t{}\n", r.name, r.file, r.n, r.m, r.provenance));
    }
    write(&dir, "manifest.tsv", &manifest);
}
