use std::collections::HashMap;
use std::fs;
use std::path::PathBuf;

use projlink_core::canon::{canonical_form, is_isomorphic, CanonicalCode};
use projlink_core::embedding::is_projective_planar_by_embedding;
use projlink_core::minors::{
    has_minor, is_outerplanar, is_planar, is_projective_planar, verify_certificate, MinorCertificate, MinorSearch,
    ObstructionSet,
};
use projlink_core::transforms::{delta_y, join, Triangle};
use projlink_core::{named, Error, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Minor containment by exploring every deletion and contraction.
struct Oracle {
    pattern: Graph,
    memo: HashMap<CanonicalCode, bool>,
}

impl Oracle {
    fn new(pattern: Graph) -> Self {
        Oracle { pattern, memo: HashMap::new() }
    }

    fn contains(&mut self, g: &Graph) -> bool {
        let (n, m) = (g.vertex_count(), g.edge_count());
        let (pn, pm) = (self.pattern.vertex_count(), self.pattern.edge_count());
        if n < pn || m < pm {
            return false;
        }
        if n == pn && m == pm {
            return is_isomorphic(g, &self.pattern);
        }
        let code = canonical_form(g).unwrap();
        if let Some(&b) = self.memo.get(&code) {
            return b;
        }
        let mut found = false;
        for e in g.edges() {
            if self.contains(&g.delete_edge(e).unwrap()) || self.contains(&g.contract_edge(e).unwrap()) {
                found = true;
                break;
            }
        }
        if !found && n > pn {
            found = (0..n).any(|v| self.contains(&g.delete_vertex(v).unwrap()));
        }
        self.memo.insert(code, found);
        found
    }
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn catalog_obstructions() -> ObstructionSet {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/obstructions");
    let mut files: Vec<PathBuf> = fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    let graphs = files
        .iter()
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            Graph::parse_el(&fs::read_to_string(p).unwrap()).unwrap().with_name(name)
        })
        .collect();
    ObstructionSet::new("obstructions", graphs, "catalog").unwrap()
}

#[test]
fn agrees_with_oracle_on_random_hosts() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let patterns = [named::complete(5), named::complete_bipartite(3, 3), named::k44_minus_e()];
    let mut oracles: Vec<Oracle> = patterns.iter().cloned().map(Oracle::new).collect();
    for _ in 0..120 {
        let n = rng.gen_range(5..=8);
        let p = rng.gen_range(0.4..0.9);
        let host = random_graph(&mut rng, n, p);
        for (pat, oracle) in patterns.iter().zip(oracles.iter_mut()) {
            let found = has_minor(&host, pat).unwrap();
            if let Some(c) = &found {
                assert!(verify_certificate(&host, pat, c));
            }
            assert_eq!(found.is_some(), oracle.contains(&host), "{host:?} / {}", pat.name().unwrap_or("?"));
        }
    }
}

#[test]
fn k44e_contains_k5() {
    let g = named::k44_minus_e();
    let mut oracle = Oracle::new(named::complete(5));
    assert!(oracle.contains(&g));
    let cert = has_minor(&g, &named::complete(5)).unwrap().unwrap();
    assert!(verify_certificate(&g, &named::complete(5), &cert));
}

#[test]
fn k6_contains_k5() {
    let cert = has_minor(&named::complete(6), &named::complete(5)).unwrap().unwrap();
    assert!(cert.verify(&named::complete(6), &named::complete(5)));
}

#[test]
fn certificate_checker_rejects_bad_witnesses() {
    let host = named::complete(6);
    let pat = named::complete(5);
    let overlapping = MinorCertificate { branch_sets: vec![vec![0, 1], vec![1], vec![2], vec![3], vec![4]] };
    assert!(!verify_certificate(&host, &pat, &overlapping));
    let merged = MinorCertificate { branch_sets: vec![vec![0], vec![1], vec![2], vec![3], vec![4, 5]] };
    assert!(verify_certificate(&host, &pat, &merged));
    let path = named::path(6);
    let split = MinorCertificate { branch_sets: vec![vec![0, 2], vec![1]] };
    assert!(!verify_certificate(&path, &named::complete(2), &split));
    let missing_edge = MinorCertificate { branch_sets: vec![vec![0], vec![2]] };
    assert!(!verify_certificate(&path, &named::complete(2), &missing_edge));
    let short = MinorCertificate { branch_sets: vec![vec![0]] };
    assert!(!verify_certificate(&path, &named::complete(2), &short));
}

#[test]
fn nonadjacent_case_with_two_touched_vertices_has_no_k44e() {
    let g = named::k7_minus_two_edges(false);
    let h = delta_y(&g, Triangle::new(&g, 0, 2, 4).unwrap()).unwrap();
    assert_eq!(h.edge_count(), 19);
    assert!(has_minor(&h, &named::k44_minus_e()).unwrap().is_none());
    assert!(!Oracle::new(named::k44_minus_e()).contains(&h));
}

#[test]
fn budget_exhaustion_is_an_error() {
    let r = MinorSearch::with_budget(1).find(&named::petersen(), &named::complete(5));
    assert!(matches!(r, Err(Error::ResourceLimit { .. })));
}

#[test]
fn planarity_examples() {
    assert!(is_planar(&named::complete(4)));
    assert!(!is_planar(&named::complete(5)));
    assert!(!is_planar(&named::petersen()));
    assert!(Oracle::new(named::complete(5)).contains(&named::petersen()));
    assert!(is_outerplanar(&named::cycle(6)));
    assert!(!is_outerplanar(&named::complete(4)));
    assert!(!is_outerplanar(&named::wheel(5)));
    assert!(Oracle::new(named::complete(4)).contains(&named::wheel(5)));
}

#[test]
fn join_with_two_points() {
    assert!(is_isomorphic(&join(&named::edgeless(2), &named::edgeless(2)).unwrap(), &named::cycle(4)));
    let j = join(&named::cycle(5), &named::edgeless(2)).unwrap();
    assert_eq!((j.vertex_count(), j.edge_count()), (7, 15));
    let k = join(&named::complete(6), &named::edgeless(2)).unwrap();
    assert!(has_minor(&join(&named::complete(5), &named::edgeless(2)).unwrap(), &named::k44_minus_e()).unwrap().is_none());
    let cert = has_minor(&k, &named::k44_minus_e()).unwrap().unwrap();
    assert!(verify_certificate(&k, &named::k44_minus_e(), &cert));
}

#[test]
fn monotone_under_edge_addition() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let pat = named::complete_bipartite(3, 3);
    for _ in 0..40 {
        let g = random_graph(&mut rng, 7, 0.5);
        if has_minor(&g, &pat).unwrap().is_none() {
            continue;
        }
        for (u, v) in g.non_edges() {
            assert!(has_minor(&g.add_edge(u, v).unwrap(), &pat).unwrap().is_some());
        }
    }
}

#[test]
fn obstruction_catalog_is_sound() {
    let obs = catalog_obstructions();
    assert_eq!(obs.len(), 35, "forbidden minors of the projective plane");
    for g in &obs.graphs {
        assert!(!is_projective_planar_by_embedding(g, u64::MAX).unwrap(), "{:?}", g.name());
    }
    let mut smallest: Vec<&Graph> = obs.graphs.iter().collect();
    smallest.sort_by_key(|g| (g.edge_count(), g.vertex_count()));
    for g in smallest.into_iter().take(5) {
        for e in g.edges() {
            assert!(is_projective_planar_by_embedding(&g.delete_edge(e).unwrap(), u64::MAX).unwrap());
            assert!(is_projective_planar_by_embedding(&g.contract_edge(e).unwrap(), u64::MAX).unwrap());
        }
    }
}

#[test]
fn projective_planarity_examples() {
    let obs = catalog_obstructions();
    assert!(is_projective_planar(&named::complete(6), &obs).unwrap());
    assert!(!is_projective_planar(&named::k44_minus_e(), &obs).unwrap());
    let c11 = named::complete(5).disjoint_union(&named::complete_bipartite(3, 3)).unwrap();
    assert!(!is_projective_planar(&c11, &obs).unwrap());
    let empty = ObstructionSet::new("none", vec![], "").unwrap();
    assert!(matches!(is_projective_planar(&named::complete(6), &empty), Err(Error::CatalogMissing(_))));
}

#[test]
fn projective_planarity_is_minor_closed_on_samples() {
    let obs = catalog_obstructions();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..25 {
        let g = random_graph(&mut rng, 8, 0.55);
        if !is_projective_planar(&g, &obs).unwrap() {
            continue;
        }
        for e in g.edges() {
            assert!(is_projective_planar(&g.delete_edge(e).unwrap(), &obs).unwrap());
            assert!(is_projective_planar(&g.contract_edge(e).unwrap(), &obs).unwrap());
        }
    }
}
