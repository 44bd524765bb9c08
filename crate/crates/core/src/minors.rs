//! Minor containment with branch-set certificates, and the surface
//! predicates built on it: planarity, outerplanarity and projective
//! planarity through forbidden-minor sets.
//!
//! A pattern `H` is a minor of `G` exactly when some contraction `G/F` by an
//! edge set `F` contains `H` as a (not necessarily induced) subgraph, so the
//! search walks contractions of the host depth first and tests for a
//! subgraph monomorphism at every node. Residual hosts are memoized by
//! canonical code, which collapses the many contraction orders that lead to
//! isomorphic graphs.

use std::collections::HashSet;

use crate::canon::{canonical_form, subgraph_monomorphism, CanonicalCode, MAX_CANON_VERTICES};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::named;

/// Default number of residual hosts a single minor search may expand.
pub const DEFAULT_MINOR_BUDGET: u64 = 5_000_000;

/// Witness that a pattern is a minor of a host: one branch set of host
/// vertices per pattern vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorCertificate {
    pub branch_sets: Vec<Vec<usize>>,
}

impl MinorCertificate {
    /// Checks disjointness, connectivity and edge coverage against the graphs.
    pub fn verify(&self, host: &Graph, pattern: &Graph) -> bool {
        verify_certificate(host, pattern, self)
    }
}

/// Independent checker for certificates, sharing no code with the search.
pub fn verify_certificate(host: &Graph, pattern: &Graph, cert: &MinorCertificate) -> bool {
    if cert.branch_sets.len() != pattern.vertex_count() {
        return false;
    }
    let mut masks = Vec::with_capacity(cert.branch_sets.len());
    let mut used = 0u32;
    for set in &cert.branch_sets {
        let mut mask = 0u32;
        for &v in set {
            if v >= host.vertex_count() || mask >> v & 1 == 1 {
                return false;
            }
            mask |= 1 << v;
        }
        if mask == 0 || mask & used != 0 || !host.is_connected_set(mask) {
            return false;
        }
        used |= mask;
        masks.push(mask);
    }
    pattern.edges().into_iter().all(|(a, b)| {
        bits(masks[a]).any(|v| host.neighbor_mask(v) & masks[b] != 0)
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum MemoKey {
    Canonical(CanonicalCode),
    Raw(u64),
}

fn memo_key(g: &Graph) -> MemoKey {
    if g.vertex_count() <= MAX_CANON_VERTICES {
        MemoKey::Canonical(canonical_form(g).expect("within canonical limit"))
    } else {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        g.hash(&mut h);
        MemoKey::Raw(h.finish())
    }
}

/// Configurable minor search.
#[derive(Clone, Debug)]
pub struct MinorSearch {
    budget: u64,
}

impl Default for MinorSearch {
    fn default() -> Self {
        MinorSearch { budget: DEFAULT_MINOR_BUDGET }
    }
}

struct Run<'a> {
    pattern: &'a Graph,
    budget: u64,
    expanded: u64,
    seen: HashSet<MemoKey>,
}

impl MinorSearch {
    pub fn with_budget(budget: u64) -> Self {
        MinorSearch { budget }
    }

    /// Returns a certificate when `pattern` is a minor of `host`, `None` when
    /// it provably is not, and [`Error::ResourceLimit`] when the budget runs out.
    pub fn find(&self, host: &Graph, pattern: &Graph) -> Result<Option<MinorCertificate>> {
        if pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count()
        {
            return Ok(None);
        }
        let mut run = Run { pattern, budget: self.budget, expanded: 0, seen: HashSet::new() };
        let branch: Vec<u32> = (0..host.vertex_count()).map(|v| 1u32 << v).collect();
        run.seen.insert(memo_key(host));
        run.explore(host, &branch)
    }
}

impl Run<'_> {
    fn explore(&mut self, g: &Graph, branch: &[u32]) -> Result<Option<MinorCertificate>> {
        self.expanded += 1;
        if self.expanded > self.budget {
            return Err(Error::ResourceLimit { what: "minor search", budget: self.budget });
        }
        if let Some(image) = subgraph_monomorphism(self.pattern, g) {
            let branch_sets = image.iter().map(|&h| bits(branch[h]).collect()).collect();
            return Ok(Some(MinorCertificate { branch_sets }));
        }
        if g.vertex_count() <= self.pattern.vertex_count() {
            return Ok(None);
        }
        let m = g.edge_count();
        let mut moves: Vec<(usize, (usize, usize))> = g
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let lost = 1 + (g.neighbor_mask(u) & g.neighbor_mask(v)).count_ones() as usize;
                (lost, (u, v))
            })
            .filter(|&(lost, _)| m - lost >= self.pattern.edge_count())
            .collect();
        moves.sort_unstable();
        for (_, (u, v)) in moves {
            let h = g.contract_edge((u, v)).expect("edge present");
            if !self.seen.insert(memo_key(&h)) {
                continue;
            }
            let mut next = branch.to_vec();
            next[u] |= next[v];
            next.remove(v);
            if let Some(cert) = self.explore(&h, &next)? {
                return Ok(Some(cert));
            }
        }
        Ok(None)
    }
}

/// Minor test with the default budget.
pub fn has_minor(host: &Graph, pattern: &Graph) -> Result<Option<MinorCertificate>> {
    MinorSearch::default().find(host, pattern)
}

fn contains(host: &Graph, pattern: &Graph) -> bool {
    MinorSearch::with_budget(u64::MAX)
        .find(host, pattern)
        .expect("unbounded search cannot exhaust its budget")
        .is_some()
}

/// Planarity by Kuratowski–Wagner: no `K5` and no `K3,3` minor.
pub fn is_planar(g: &Graph) -> bool {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if n <= 4 || m <= 8 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    !contains(g, &named::complete(5)) && !contains(g, &named::complete_bipartite(3, 3))
}

/// Outerplanarity: no `K4` and no `K2,3` minor.
pub fn is_outerplanar(g: &Graph) -> bool {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if n <= 3 || m <= 5 {
        return true;
    }
    if m > 2 * n - 3 {
        return false;
    }
    !contains(g, &named::complete(4)) && !contains(g, &named::complete_bipartite(2, 3))
}

/// A named family of minor-minimal forbidden graphs.
#[derive(Clone, Debug)]
pub struct ObstructionSet {
    pub name: String,
    pub graphs: Vec<Graph>,
    pub provenance: String,
}

impl ObstructionSet {
    /// Rejects duplicate isomorphism classes.
    pub fn new(name: impl Into<String>, graphs: Vec<Graph>, provenance: impl Into<String>) -> Result<Self> {
        let name = name.into();
        let mut codes = HashSet::new();
        for g in &graphs {
            if !codes.insert(canonical_form(g)?) {
                return Err(Error::CatalogInvalid {
                    name: name.clone(),
                    msg: format!("duplicate isomorphism class {}", g.name().unwrap_or("?")),
                });
            }
        }
        Ok(ObstructionSet { name, graphs, provenance: provenance.into() })
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    /// First member (in catalog order) that is a minor of `g`, with its certificate.
    pub fn find_in(&self, g: &Graph, budget: u64) -> Result<Option<(usize, MinorCertificate)>> {
        if self.graphs.is_empty() {
            return Err(Error::CatalogMissing(self.name.clone()));
        }
        let search = MinorSearch::with_budget(budget);
        for (i, obs) in self.graphs.iter().enumerate() {
            if let Some(cert) = search.find(g, obs)? {
                return Ok(Some((i, cert)));
            }
        }
        Ok(None)
    }
}

/// Projective planarity: none of the forbidden minors of the projective
/// plane occurs in `g`.
pub fn is_projective_planar(g: &Graph, obstructions: &ObstructionSet) -> Result<bool> {
    Ok(obstructions.find_in(g, DEFAULT_MINOR_BUDGET)?.is_none())
}
