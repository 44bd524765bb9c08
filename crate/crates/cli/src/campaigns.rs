//! The verification campaigns and the query commands behind the CLI.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fs;
use std::path::Path;

use projlink_core::canon::{automorphisms, canonical_form};
use projlink_core::embedding::{is_projective_planar_by_embedding, EmbeddingSearch, Rp2Embedding, DEFAULT_EMBEDDING_BUDGET};
use projlink_core::link::{classify_case, link_report, TSV_HEADER};
use projlink_core::minors::{
    is_outerplanar, is_planar, verify_certificate, MinorCertificate, MinorSearch, ObstructionSet,
    DEFAULT_MINOR_BUDGET,
};
use projlink_core::transforms::{delta_y, dy_closure, enumerate_edge_additions, enumerate_vertex_splits, join, y_delta, Triangle};
use projlink_core::{named, par, Error, Graph, Result};

use crate::catalog::{Catalog, ARCHDEACON, FAMILY};
use crate::report::{Report, Verdict};

/// Search budgets shared by the campaigns.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub minor_budget: u64,
    pub embedding_budget: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { minor_budget: DEFAULT_MINOR_BUDGET, embedding_budget: DEFAULT_EMBEDDING_BUDGET }
    }
}

pub fn format_certificate(c: &MinorCertificate) -> String {
    c.branch_sets
        .iter()
        .map(|s| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join("|")
}

pub fn parse_certificate(s: &str) -> Option<MinorCertificate> {
    let branch_sets = s
        .trim()
        .split('|')
        .map(|set| set.split(',').map(|v| v.trim().parse().ok()).collect::<Option<Vec<usize>>>())
        .collect::<Option<Vec<_>>>()?;
    Some(MinorCertificate { branch_sets })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Projective planarity decided twice: by forbidden minors and by
/// constructing an embedding.
#[derive(Clone, Debug)]
pub struct PpDecision {
    pub by_obstructions: bool,
    pub by_embedding: bool,
    pub witness: Option<String>,
}

impl PpDecision {
    pub fn agree(&self) -> bool {
        self.by_obstructions == self.by_embedding
    }
}

pub fn decide_pp(g: &Graph, obs: &ObstructionSet, s: Settings) -> Result<PpDecision> {
    let by_embedding = is_projective_planar_by_embedding(g, s.embedding_budget)?;
    let hit = obs.find_in(g, s.minor_budget)?;
    Ok(PpDecision {
        by_obstructions: hit.is_none(),
        by_embedding,
        witness: hit.map(|(i, c)| format!("{}:{}", obs.graphs[i].name().unwrap_or("?"), format_certificate(&c))),
    })
}

/// Name of a Petersen family member, read off its shape.
pub fn family_name(g: &Graph) -> &'static str {
    let min_degree = (0..g.vertex_count()).map(|v| g.degree(v)).min().unwrap_or(0);
    match (g.vertex_count(), g.is_bipartite()) {
        (6, _) => "k6",
        (7, _) if min_degree == 3 => "p7",
        (7, _) => "k331",
        (8, true) => "k44e",
        (8, false) => "p8",
        (9, _) => "p9",
        (10, _) => "p10",
        _ => "?",
    }
}

pub const FAMILY_ORDER: [&str; 7] = ["k6", "k331", "p7", "p8", "k44e", "p9", "p10"];

/// The seven graphs reached from `K6` by exchanges, named and in family order.
pub fn petersen_family() -> Result<Vec<Graph>> {
    let mut fam: Vec<Graph> = dy_closure(&named::complete(6))?
        .into_iter()
        .map(|g| {
            let name = family_name(&g);
            g.with_name(name)
        })
        .collect();
    fam.sort_by_key(|g| FAMILY_ORDER.iter().position(|&n| Some(n) == g.name()).unwrap_or(usize::MAX));
    Ok(fam)
}

pub fn verify_petersen_closure(cat: &Catalog, s: Settings) -> Result<Report> {
    let obs = cat.obstructions()?;
    let fam = petersen_family()?;
    let catalog_family = cat.group_graphs(FAMILY);
    let decisions = par::try_map(&fam, |g| decide_pp(g, &obs, s))?;
    let mut r = Report::new(
        "verify petersen-closure",
        &["graph", "vertices", "edges", "bipartite", "pp_obstructions", "pp_embedding", "catalog"],
    )
    .input("K6");
    let mut ok = fam.len() == 7;
    let mut k44e_like = 0;
    for (g, d) in fam.iter().zip(&decisions) {
        let listed = catalog_family.iter().find(|c| projlink_core::is_isomorphic(c, g));
        if (g.vertex_count(), g.edge_count(), g.is_bipartite()) == (8, 15, true) {
            k44e_like += 1;
        }
        ok &= d.by_obstructions && d.by_embedding;
        ok &= catalog_family.is_empty() || listed.is_some();
        r.push([
            g.name().unwrap_or("?").to_string(),
            g.vertex_count().to_string(),
            g.edge_count().to_string(),
            yes(g.is_bipartite()).into(),
            yes(d.by_obstructions).into(),
            yes(d.by_embedding).into(),
            listed.and_then(|c| c.name()).unwrap_or("-").to_string(),
        ]);
    }
    ok &= k44e_like == 1;
    r.note(format!("classes: {}", fam.len()));
    for (g, d) in fam.iter().zip(&decisions) {
        if !(d.by_obstructions && d.by_embedding) {
            r.note(format!("not projective planar: {}", g.name().unwrap_or("?")));
        }
    }
    r.note(format!("bipartite classes with 8 vertices and 15 edges: {k44e_like}"));
    r.verdict = Verdict::from_bool(ok);
    Ok(r)
}

/// One orbit of triangles of `K7 - 2e` under its automorphism group.
#[derive(Clone, Debug)]
pub struct TriangleOrbit {
    pub case: u8,
    pub touched: usize,
    pub subcase: &'static str,
    pub representative: [usize; 3],
    pub size: usize,
}

/// Orbits of triangles under the automorphisms of `g`, each with its
/// smallest member as representative.
pub fn triangle_orbits(g: &Graph) -> Vec<(Vec<usize>, usize)> {
    let perms = automorphisms(g, 1 << 20);
    let mut seen: HashSet<[usize; 3]> = HashSet::new();
    let mut out = Vec::new();
    for t in g.triangles() {
        if seen.contains(&t) {
            continue;
        }
        let mut orbit = BTreeSet::new();
        for p in &perms {
            let mut image = [p[t[0]], p[t[1]], p[t[2]]];
            image.sort_unstable();
            orbit.insert(image);
        }
        let rep = *orbit.iter().next().expect("identity is an automorphism");
        seen.extend(orbit.iter().copied());
        out.push((rep.to_vec(), orbit.len()));
    }
    out.sort();
    out
}

/// Classifies the triangle orbits of both `K7 - 2e` graphs by how many
/// triangle vertices lost an edge.
pub fn deltay_orbits() -> Vec<(Graph, TriangleOrbit)> {
    let mut out = Vec::new();
    for (case, adjacent) in [(1u8, true), (2u8, false)] {
        let g = named::k7_minus_two_edges(adjacent);
        let removed = named::complete(7).edges().into_iter().filter(|&(u, v)| !g.has_edge(u, v)).collect::<Vec<_>>();
        let lost = |v: usize| removed.iter().filter(|&&(a, b)| a == v || b == v).count();
        for (rep, size) in triangle_orbits(&g) {
            let touched: Vec<usize> = rep.iter().copied().filter(|&v| lost(v) > 0).collect();
            let subcase = match (case, touched.as_slice()) {
                (1, [v]) if lost(*v) == 1 => "one-removed",
                (1, [_]) => "two-removed",
                _ => "-",
            };
            let orbit = TriangleOrbit {
                case,
                touched: touched.len(),
                subcase,
                representative: [rep[0], rep[1], rep[2]],
                size,
            };
            out.push((g.clone(), orbit));
        }
    }
    out.sort_by_key(|(_, o)| (o.case, o.touched, o.subcase, o.representative));
    out
}

/// Whether the table expects a `K4,4 - e` minor after the exchange.
pub fn deltay_expects_minor(case: u8, touched: usize) -> bool {
    matches!((case, touched), (1, 0) | (1, 2) | (2, 1))
}

pub fn verify_deltay_table(s: Settings) -> Result<Report> {
    let orbits = deltay_orbits();
    let pattern = named::k44_minus_e();
    let results = par::try_map(&orbits, |(g, o)| {
        let [a, b, c] = o.representative;
        let h = delta_y(g, Triangle::new(g, a, b, c)?)?;
        let cert = MinorSearch::with_budget(s.minor_budget).find(&h, &pattern)?;
        if let Some(c) = &cert {
            assert!(verify_certificate(&h, &pattern, c), "search returned an invalid certificate");
        }
        Ok::<_, Error>(cert)
    })?;
    let mut r = Report::new(
        "verify deltay-table",
        &["case", "touched", "subcase", "triangle", "orbit_size", "k44e_minor", "expected", "new_graph", "certificate"],
    )
    .input("K7-2e adjacent")
    .input("K7-2e nonadjacent");
    let mut ok = true;
    let mut cells: BTreeMap<(u8, usize), usize> = BTreeMap::new();
    for ((_, o), cert) in orbits.iter().zip(&results) {
        let expect = deltay_expects_minor(o.case, o.touched);
        ok &= cert.is_some() == expect;
        *cells.entry((o.case, o.touched)).or_default() += 1;
        let [a, b, c] = o.representative;
        r.push([
            o.case.to_string(),
            o.touched.to_string(),
            o.subcase.to_string(),
            format!("{a},{b},{c}"),
            o.size.to_string(),
            if cert.is_some() { "present" } else { "absent" }.to_string(),
            if expect { "present" } else { "absent" }.to_string(),
            yes(cert.is_none()).to_string(),
            cert.as_ref().map_or("-".into(), format_certificate),
        ]);
    }
    let shape: Vec<((u8, usize), usize)> = cells.into_iter().collect();
    ok &= shape == [((1, 0), 1), ((1, 1), 2), ((1, 2), 1), ((2, 0), 1), ((2, 1), 1), ((2, 2), 1)];
    r.verdict = Verdict::from_bool(ok);
    Ok(r)
}

/// Classification of one 16-edge candidate.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub graph: Graph,
    pub source: &'static str,
    pub pp: PpDecision,
    pub k44e_minor: Option<MinorCertificate>,
}

impl Candidate {
    pub fn bucket(&self) -> &'static str {
        if !self.pp.agree() {
            "exception"
        } else if self.pp.by_embedding {
            "projective-planar"
        } else if self.k44e_minor.is_some() {
            "k44e-minor"
        } else {
            "exception"
        }
    }
}

/// Every isomorphism class of a family graph plus one edge or with one
/// vertex split, first occurrence kept.
pub fn sixteen_edge_candidates(family: &[Graph]) -> Result<Vec<(Graph, &'static str)>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in family {
        for (list, source) in [(enumerate_edge_additions(g)?, "edge"), (enumerate_vertex_splits(g)?, "split")] {
            for h in list {
                if seen.insert(canonical_form(&h)?) {
                    out.push((h, source));
                }
            }
        }
    }
    Ok(out)
}

pub fn classify_candidates(cands: &[(Graph, &'static str)], obs: &ObstructionSet, s: Settings) -> Result<Vec<Candidate>> {
    let pattern = named::k44_minus_e();
    par::try_map(cands, |(g, source)| {
        let name = g.name().unwrap_or("?").to_string();
        let run = || -> Result<Candidate> {
            let pp = decide_pp(g, obs, s)?;
            let k44e_minor = MinorSearch::with_budget(s.minor_budget).find(g, &pattern)?;
            Ok(Candidate { graph: g.clone(), source, pp, k44e_minor })
        };
        run().map_err(|e| e.for_candidate(name))
    })
}

pub fn search_sixteen(cat: &Catalog, s: Settings) -> Result<Report> {
    let obs = cat.obstructions()?;
    let family = petersen_family()?;
    let cands = sixteen_edge_candidates(&family)?;
    let classified = classify_candidates(&cands, &obs, s)?;
    let mut r = Report::new(
        "search sixteen",
        &["candidate", "source", "vertices", "edges", "pp_embedding", "pp_obstructions", "k44e_minor", "bucket", "witness"],
    );
    for g in &family {
        r = r.input(g.name().unwrap_or("?").to_string());
    }
    let mut exceptions = 0;
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for c in &classified {
        let bucket = c.bucket();
        exceptions += usize::from(bucket == "exception");
        *counts.entry(bucket).or_default() += 1;
        let witness = match bucket {
            "k44e-minor" => c.k44e_minor.as_ref().map(format_certificate).unwrap_or_default(),
            _ => c.pp.witness.clone().unwrap_or_else(|| "-".into()),
        };
        r.push([
            c.graph.name().unwrap_or("?").to_string(),
            c.source.to_string(),
            c.graph.vertex_count().to_string(),
            c.graph.edge_count().to_string(),
            yes(c.pp.by_embedding).to_string(),
            yes(c.pp.by_obstructions).to_string(),
            yes(c.k44e_minor.is_some()).to_string(),
            bucket.to_string(),
            witness,
        ]);
    }
    r.note(format!("candidates: {}", classified.len()));
    for (b, n) in counts {
        r.note(format!("{b}: {n}"));
    }
    r.note(format!("exceptions: {exceptions}"));
    r.verdict = Verdict::from_bool(exceptions == 0);
    Ok(r)
}

pub const C11: &str = "c11";

pub fn verify_c11(cat: &Catalog, s: Settings) -> Result<Report> {
    let obs = cat.obstructions()?;
    let g = cat.graph(C11)?;
    let marks = cat.marks(C11)?;
    let [v] = marks.as_slice() else {
        return Err(Error::CatalogInvalid { name: C11.into(), msg: format!("expected one marked vertex, found {}", marks.len()) });
    };
    let after = y_delta(&g, *v)?.with_name("c11-after");
    let mut r = Report::new("verify c11", &["stage", "vertices", "edges", "pp_obstructions", "pp_embedding", "witness"])
        .input(format!("{C11} mark {v}"));
    let mut ok = true;
    for (stage, h, want) in [("before", &g, false), ("after", &after, true)] {
        let d = decide_pp(h, &obs, s)?;
        ok &= d.by_obstructions == want && d.by_embedding == want;
        r.push([
            stage.to_string(),
            h.vertex_count().to_string(),
            h.edge_count().to_string(),
            yes(d.by_obstructions).to_string(),
            yes(d.by_embedding).to_string(),
            d.witness.unwrap_or_else(|| "-".into()),
        ]);
    }
    r.verdict = Verdict::from_bool(ok);
    Ok(r)
}

pub const ARCHDEACON_COUNT: usize = 32;

/// Checks the transcribed certificates for `G + K̄2`. Each file may carry
/// `# cert: a,b|c|...` (branch sets in the joined graph, whose two extra
/// vertices come last) and `# pattern: NAME` naming another catalog graph
/// to use instead of `K4,4 - e`.
pub fn verify_archdeacon(cat: &Catalog, s: Settings) -> Result<Report> {
    let rows = cat.group(ARCHDEACON);
    let mut r = Report::new("verify archdeacon", &["graph", "pattern", "certificate", "search"]);
    if rows.is_empty() {
        r.note("archdeacon catalog absent");
        r.verdict = Verdict::Skip;
        return Ok(r);
    }
    let names: Vec<String> = rows.iter().map(|row| row.name.clone()).collect();
    let checks = par::try_map(&names, |name| {
        let g = cat.graph(name)?;
        let host = join(&g, &named::edgeless(2))?;
        let dirs = cat.directives(name)?;
        let pattern_name = dirs.iter().find(|(k, _)| k == "pattern").map(|(_, v)| v.clone());
        let pattern = match &pattern_name {
            Some(p) => cat.graph(p)?,
            None => named::k44_minus_e(),
        };
        let cert = match dirs.iter().find(|(k, _)| k == "cert") {
            Some((_, v)) => Some(
                parse_certificate(v)
                    .map(|c| verify_certificate(&host, &pattern, &c))
                    .unwrap_or(false),
            ),
            None => None,
        };
        let found = MinorSearch::with_budget(s.minor_budget).find(&host, &pattern).map_err(|e| e.for_candidate(name.clone()))?;
        Ok::<_, Error>((pattern_name.unwrap_or_else(|| "k44e".into()), cert, found.is_some()))
    })?;
    let mut ok = names.len() == ARCHDEACON_COUNT;
    for (name, (pattern, cert, found)) in names.iter().zip(checks) {
        ok &= cert != Some(false) && found;
        let cert = match cert {
            Some(b) => if b { "valid" } else { "invalid" },
            None => "none",
        };
        r.push([name.clone(), pattern, cert.to_string(), if found { "present" } else { "absent" }.to_string()]);
    }
    r.verdict = Verdict::from_bool(ok);
    Ok(r)
}

/// Reads a graph from a `.el` or `.emb` file, a catalog name, or a built-in
/// name such as `K5`, `K3,3`, `K44-e` or `petersen`.
pub fn resolve_graph(spec: &str, cat: Option<&Catalog>) -> Result<Graph> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = fs::read_to_string(path)?;
        let g = if spec.ends_with(".emb") {
            Rp2Embedding::parse_emb(&text)?.graph().clone()
        } else {
            Graph::parse_el(&text)?
        };
        return Ok(g.with_name(spec));
    }
    if let Some(c) = cat.filter(|c| c.contains(spec)) {
        return c.graph(spec);
    }
    builtin(spec).map(|g| g.with_name(spec)).ok_or_else(|| Error::CatalogMissing(spec.to_string()))
}

fn builtin(spec: &str) -> Option<Graph> {
    let lower = spec.to_ascii_lowercase();
    match lower.as_str() {
        "petersen" | "p10" => return Some(named::petersen()),
        "k44-e" | "k44e" | "k4,4-e" => return Some(named::k44_minus_e()),
        _ => {}
    }
    let rest = lower.strip_prefix('k')?;
    let parts: Option<Vec<usize>> = if rest.contains(',') {
        rest.split(',').map(|p| p.parse().ok()).collect()
    } else if rest.len() > 1 && rest.len() <= 3 && !rest.starts_with('1') {
        rest.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
    } else {
        rest.parse().ok().map(|n: usize| vec![1; n])
    };
    let parts = parts?;
    if parts.is_empty() || parts.iter().sum::<usize>() > 16 {
        return None;
    }
    Some(named::complete_multipartite(&parts))
}

/// Queries for the `check` command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Query {
    Minor(String),
    Planar,
    ProjectivePlanar,
    Outerplanar,
}

pub fn check(cat: Option<&Catalog>, subject: &str, query: &Query, s: Settings) -> Result<Report> {
    let g = resolve_graph(subject, cat)?;
    let (label, result, witness) = match query {
        Query::Minor(p) => {
            let h = resolve_graph(p, cat)?;
            let cert = MinorSearch::with_budget(s.minor_budget).find(&g, &h)?;
            let w = cert.as_ref().map_or("-".into(), format_certificate);
            (format!("minor {p}"), if cert.is_some() { "present" } else { "absent" }.to_string(), w)
        }
        Query::Planar => ("planar".into(), yes(is_planar(&g)).into(), "-".into()),
        Query::Outerplanar => ("outerplanar".into(), yes(is_outerplanar(&g)).into(), "-".into()),
        Query::ProjectivePlanar => {
            let cat = cat.ok_or_else(|| Error::CatalogMissing("obstructions".into()))?;
            let d = decide_pp(&g, &cat.obstructions()?, s)?;
            if !d.agree() {
                let mut r = Report::new("check", &["subject", "query", "result", "witness"]).input(subject);
                r.push([subject.to_string(), "projective-planar".into(), "disagreement".into(), d.witness.unwrap_or_default()]);
                r.verdict = Verdict::Fail;
                return Ok(r);
            }
            ("projective-planar".into(), yes(d.by_embedding).into(), d.witness.unwrap_or_else(|| "-".into()))
        }
    };
    let mut r = Report::new("check", &["subject", "query", "result", "witness"]).input(subject);
    r.push([subject.to_string(), label, result, witness]);
    Ok(r)
}

pub fn link_conditions(file: &str) -> Result<Report> {
    let text = fs::read_to_string(file)?;
    let emb = Rp2Embedding::parse_emb(&text)?;
    let lr = link_report(&emb)?;
    let header: Vec<&str> = TSV_HEADER.split('\t').collect();
    let mut r = Report::new("link-conditions", &header).input(file);
    let name = Path::new(file).file_name().map_or(file.to_string(), |f| f.to_string_lossy().into_owned());
    r.push(lr.tsv_row(&name).split('\t').map(str::to_string).collect::<Vec<_>>());
    Ok(r)
}

pub fn rotation_string(e: &Rp2Embedding) -> String {
    (0..e.graph().vertex_count())
        .map(|v| format!("{v}:{}", e.rotation(v).iter().map(|w| w.to_string()).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn embed_enumerate(cat: Option<&Catalog>, subject: &str, max: Option<usize>, s: Settings) -> Result<Report> {
    let g = resolve_graph(subject, cat)?;
    let mut search = EmbeddingSearch::default().with_budget(s.embedding_budget);
    if let Some(m) = max {
        search = search.with_limit(m);
    }
    let embs = search.enumerate(&g)?;
    let mut r = Report::new("embed enumerate", &["index", "faces", "euler_genus", "case", "negative", "rotation"]).input(subject);
    for (i, e) in embs.iter().enumerate() {
        let neg: Vec<String> = e.one_homologous_edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
        r.push([
            i.to_string(),
            e.face_count().to_string(),
            e.euler_genus().to_string(),
            classify_case(e).to_string(),
            if neg.is_empty() { "-".into() } else { neg.join(",") },
            rotation_string(e),
        ]);
    }
    r.note(format!("embeddings: {}", embs.len()));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certificate_text_round_trip() {
        let c = MinorCertificate { branch_sets: vec![vec![0, 4], vec![1], vec![2, 3]] };
        assert_eq!(format_certificate(&c), "0,4|1|2,3");
        assert_eq!(parse_certificate("0,4|1|2,3"), Some(c));
        assert_eq!(parse_certificate("0,x"), None);
    }

    #[test]
    fn builtin_names() {
        assert_eq!(builtin("K5").unwrap().edge_count(), 10);
        assert_eq!(builtin("K3,3").unwrap().edge_count(), 9);
        assert_eq!(builtin("K33").unwrap().edge_count(), 9);
        assert_eq!(builtin("K44-e").unwrap().edge_count(), 15);
        assert_eq!(builtin("K1,2,2,2").unwrap().edge_count(), 18);
        assert_eq!(builtin("K12").unwrap().edge_count(), 66);
        assert!(builtin("nope").is_none());
    }

    #[test]
    fn family_is_named_in_order() {
        let fam = petersen_family().unwrap();
        let names: Vec<&str> = fam.iter().map(|g| g.name().unwrap()).collect();
        assert_eq!(names, FAMILY_ORDER);
    }

    #[test]
    fn deltay_orbit_shape() {
        let shape: Vec<(u8, usize, &str)> = deltay_orbits().iter().map(|(_, o)| (o.case, o.touched, o.subcase)).collect();
        assert_eq!(shape.len(), 7);
        for want in [(1, 1, "one-removed"), (1, 1, "two-removed"), (2, 0, "-"), (2, 2, "-")] {
            assert!(shape.contains(&want), "{want:?}");
        }
    }
}
