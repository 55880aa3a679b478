//! A combinatorial model of the cluster category over an exceptional
//! catalog: objects are the catalog's modules together with one shifted
//! projective per quiver vertex, carrying a symmetric extension pairing.
//! Cluster-tilting sets, the two-complement exchange, the exchange graph,
//! and the dimension and quiver data of cluster-tilted endomorphism
//! algebras all reduce to exact Hom/Ext arithmetic in the module category,
//! which is how they are computed here — no triangulated structure is
//! materialized.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::catalog::Catalog;
use crate::complex::ClusterComplex;
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::rep::{coxeter_functor, hom_ext, Representation};
use crate::tilting::is_tilting_set;

/// An indecomposable object of the cluster category's fundamental domain:
/// an exceptional module (catalog entry index) or the shift of the
/// indecomposable projective at a quiver vertex.
///
/// The derived ordering (modules first, each kind by index) matches the
/// vertex order of [`ClusterComplex`](crate::complex::ClusterComplex), with
/// shifted projectives in the role of the negative vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClusterObject {
    /// Catalog entry index.
    Module(usize),
    /// Quiver vertex whose projective is shifted.
    ShiftedProjective(usize),
}

fn check_object(catalog: &Catalog, x: ClusterObject) -> Result<()> {
    match x {
        ClusterObject::Module(a) if a >= catalog.entries().len() => Err(Error::InvalidInput(
            "module object index is outside the catalog".into(),
        )),
        ClusterObject::ShiftedProjective(i) if i >= catalog.quiver().n() => Err(
            Error::InvalidInput("shifted projective names a missing vertex".into()),
        ),
        _ => Ok(()),
    }
}

/// The symmetric extension pairing on cluster objects.
///
/// For two modules it adds `Ext¹` in both directions; between the shifted
/// projective at vertex `i` and a module `M` it is the dimension of `M` at
/// `i` (that is `dim Hom(P(i), M)`); two shifted projectives never extend
/// each other. Symmetry is built in.
pub fn cluster_ext1(catalog: &Catalog, x: ClusterObject, y: ClusterObject) -> Result<usize> {
    check_object(catalog, x)?;
    check_object(catalog, y)?;
    let q = catalog.quiver();
    let entries = catalog.entries();
    match (x, y) {
        (ClusterObject::Module(a), ClusterObject::Module(b)) => {
            let forward = hom_ext(q, &entries[a].rep, &entries[b].rep)?.1;
            let backward = hom_ext(q, &entries[b].rep, &entries[a].rep)?.1;
            Ok(forward + backward)
        }
        (ClusterObject::Module(a), ClusterObject::ShiftedProjective(i))
        | (ClusterObject::ShiftedProjective(i), ClusterObject::Module(a)) => {
            Ok(entries[a].dims[i] as usize)
        }
        (ClusterObject::ShiftedProjective(_), ClusterObject::ShiftedProjective(_)) => Ok(0),
    }
}

/// Every object over the catalog: all modules, then all shifted
/// projectives.
pub fn all_objects(catalog: &Catalog) -> Vec<ClusterObject> {
    let mut out: Vec<ClusterObject> = (0..catalog.entries().len())
        .map(ClusterObject::Module)
        .collect();
    out.extend((0..catalog.quiver().n()).map(ClusterObject::ShiftedProjective));
    out
}

/// Whether the objects form a cluster-tilting set: one object per quiver
/// vertex, pairwise extension-free, and not extendable by any further
/// object over the catalog.
pub fn is_cluster_tilting(catalog: &Catalog, objs: &[ClusterObject]) -> Result<bool> {
    for &x in objs {
        check_object(catalog, x)?;
    }
    let distinct: BTreeSet<ClusterObject> = objs.iter().copied().collect();
    if distinct.len() != objs.len() || objs.len() != catalog.quiver().n() {
        return Ok(false);
    }
    for (i, &x) in objs.iter().enumerate() {
        for &y in &objs[i..] {
            if cluster_ext1(catalog, x, y)? != 0 {
                return Ok(false);
            }
        }
    }
    for candidate in all_objects(catalog) {
        if distinct.contains(&candidate) {
            continue;
        }
        let mut extends = cluster_ext1(catalog, candidate, candidate)? == 0;
        for &x in objs {
            if !extends {
                break;
            }
            extends = cluster_ext1(catalog, x, candidate)? == 0;
        }
        if extends {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The two objects completing an almost-complete set (one object fewer
/// than the quiver has vertices, pairwise extension-free) to a
/// cluster-tilting set, in canonical object order.
///
/// Unlike module-level complements, there are always exactly two over a
/// complete catalog; when the module part misses a vertex entirely, the
/// second complement is the shifted projective there.
pub fn cluster_complements(
    catalog: &Catalog,
    almost: &[ClusterObject],
) -> Result<(ClusterObject, ClusterObject)> {
    let n = catalog.quiver().n();
    for &x in almost {
        check_object(catalog, x)?;
    }
    let distinct: BTreeSet<ClusterObject> = almost.iter().copied().collect();
    if almost.len() + 1 != n || distinct.len() != almost.len() {
        return Err(Error::InvalidInput(
            "expected distinct objects, one fewer than the quiver has vertices".into(),
        ));
    }
    for (i, &x) in almost.iter().enumerate() {
        for &y in &almost[i..] {
            if cluster_ext1(catalog, x, y)? != 0 {
                return Err(Error::Precondition(
                    "the given objects extend each other".into(),
                ));
            }
        }
    }
    let mut found = Vec::new();
    'candidates: for candidate in all_objects(catalog) {
        if distinct.contains(&candidate) {
            continue;
        }
        if cluster_ext1(catalog, candidate, candidate)? != 0 {
            continue;
        }
        for &x in almost {
            if cluster_ext1(catalog, x, candidate)? != 0 {
                continue 'candidates;
            }
        }
        found.push(candidate);
    }
    if found.len() == 2 {
        Ok((found[0], found[1]))
    } else {
        Err(Error::Precondition(
            "complement count differs from two; the catalog may be capped short".into(),
        ))
    }
}

/// The exchange graph of an extended complex: one node per maximal simplex,
/// with an edge whenever two simplices share all but one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeGraph {
    /// Number of maximal simplices.
    pub node_count: usize,
    /// Sorted pairs of node indices (into the complex's maximal-simplex
    /// list) sharing all but one vertex.
    pub edges: Vec<(usize, usize)>,
}

impl ExchangeGraph {
    /// Per-node edge counts.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.node_count];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Whether every node is reachable from the first.
    pub fn is_connected(&self) -> bool {
        if self.node_count == 0 {
            return true;
        }
        let mut adjacent = vec![Vec::new(); self.node_count];
        for &(a, b) in &self.edges {
            adjacent[a].push(b);
            adjacent[b].push(a);
        }
        let mut seen = vec![false; self.node_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adjacent[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Builds the exchange graph of an extended complex over a complete
/// catalog, where every maximal simplex has one vertex per quiver vertex.
pub fn exchange_graph(x: &ClusterComplex) -> Result<ExchangeGraph> {
    if !x.include_negatives() {
        return Err(Error::Precondition(
            "the exchange graph needs the extended complex".into(),
        ));
    }
    if !x.catalog().is_complete() {
        return Err(Error::Precondition(
            "the exchange graph needs a complete catalog".into(),
        ));
    }
    let maximal = x.maximal_simplices();
    let n = x.catalog().quiver().n();
    let mut edges = Vec::new();
    for a in 0..maximal.len() {
        for b in (a + 1)..maximal.len() {
            let shared = maximal[a]
                .iter()
                .filter(|v| maximal[b].contains(v))
                .count();
            if shared + 1 == n {
                edges.push((a, b));
            }
        }
    }
    Ok(ExchangeGraph {
        node_count: maximal.len(),
        edges,
    })
}

/// Dimension data of the cluster-tilted algebra attached to a tilting
/// module `T`: the endomorphism dimension over the module category, the
/// dimension of the extension bimodule `Ext¹(T, τ⁻¹T)` glued on top of it,
/// and their sum, the dimension of the cluster-tilted algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClusterTiltedDims {
    /// `dim End(T) = Σ hom(T_i, T_j)`.
    pub end_a: usize,
    /// `dim Ext¹(T, τ⁻¹T) = Σ ext(T_i, τ⁻¹T_j)`; injective summands have
    /// `τ⁻¹T_j = 0` and contribute nothing.
    pub j_dim: usize,
    /// `end_a + j_dim`.
    pub end_c: usize,
}

/// Computes [`ClusterTiltedDims`] for an explicit tilting set; `j_dim`
/// vanishes exactly on slices, where the cluster-tilted algebra collapses
/// to the hereditary endomorphism algebra.
pub fn cluster_tilted_dims(q: &Quiver, modules: &[Representation]) -> Result<ClusterTiltedDims> {
    if !is_tilting_set(q, modules)? {
        return Err(Error::Precondition(
            "the summands do not form a tilting set".into(),
        ));
    }
    let mut end_a = 0usize;
    for a in modules {
        for b in modules {
            end_a += hom_ext(q, a, b)?.0;
        }
    }
    let translates: Vec<Representation> = modules
        .iter()
        .map(|m| coxeter_functor(q, m, -1))
        .collect::<Result<Vec<_>>>()?;
    let mut j_dim = 0usize;
    for a in modules {
        for tb in &translates {
            if tb.is_zero() {
                continue;
            }
            j_dim += hom_ext(q, a, tb)?.1;
        }
    }
    Ok(ClusterTiltedDims {
        end_a,
        j_dim,
        end_c: end_a + j_dim,
    })
}

/// A quiver with directed relation markers `(source, target, multiplicity)`;
/// each relation stands for that many independent relations on paths from
/// the source vertex to the target vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraPresentation {
    quiver: Quiver,
    relations: Vec<(usize, usize, usize)>,
}

/// Whether some path from `u` to `v` uses at least two arrows.
fn has_long_path(q: &Quiver, u: usize, v: usize) -> bool {
    // Reachability along one arrow, then along one or more arrows.
    let step: Vec<BTreeSet<usize>> = (0..q.n())
        .map(|x| {
            q.arrows()
                .iter()
                .filter(|&&(t, _)| t == x)
                .map(|&(_, h)| h)
                .collect()
        })
        .collect();
    let mut frontier: Vec<usize> = step[u].iter().copied().collect();
    let mut seen = BTreeSet::new();
    while let Some(w) = frontier.pop() {
        for &next in &step[w] {
            if next == v {
                return true;
            }
            if seen.insert(next) {
                frontier.push(next);
            }
        }
    }
    false
}

impl AlgebraPresentation {
    /// Validates that every relation has positive multiplicity, in-range
    /// endpoints, and a connecting path of length at least two.
    pub fn new(quiver: Quiver, relations: Vec<(usize, usize, usize)>) -> Result<Self> {
        for &(u, v, m) in &relations {
            if u >= quiver.n() || v >= quiver.n() {
                return Err(Error::InvalidInput(
                    "relation endpoint is outside the quiver".into(),
                ));
            }
            if m == 0 {
                return Err(Error::InvalidInput(
                    "relation multiplicity must be positive".into(),
                ));
            }
            if !has_long_path(&quiver, u, v) {
                return Err(Error::InvalidInput(
                    "relation endpoints need a connecting path of length at least two".into(),
                ));
            }
        }
        Ok(Self { quiver, relations })
    }

    /// The underlying acyclic quiver.
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// The relation markers.
    pub fn relations(&self) -> &[(usize, usize, usize)] {
        &self.relations
    }
}

/// Plain vertex/arrow data for a quiver that may contain directed cycles,
/// which the validated [`Quiver`] type rules out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawQuiver {
    /// Vertex identifiers, inherited from the source presentation.
    pub vertices: Vec<String>,
    /// Arrows as `(tail, head)` vertex indices.
    pub arrows: Vec<(usize, usize)>,
}

/// Shape validation of a [`RawQuiver`]: loops and opposite arrow pairs are
/// collected rather than rejected, since their presence is the signal that
/// the input presentation was not of the expected kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverShapeReport {
    /// Vertices carrying an arrow to themselves.
    pub loops: Vec<usize>,
    /// Unordered vertex pairs joined by arrows in both directions.
    pub two_cycles: Vec<(usize, usize)>,
}

impl QuiverShapeReport {
    /// True when neither loops nor two-cycles occur.
    pub fn passed(&self) -> bool {
        self.loops.is_empty() && self.two_cycles.is_empty()
    }
}

/// The quiver of the cluster-tilted algebra built from a presentation:
/// the original arrows plus, for each relation `(u, v, m)`, `m` new arrows
/// from `v` back to `u`. The report flags loops and two-cycles, which a
/// genuine cluster-tilted quiver never contains.
pub fn cluster_tilted_quiver(p: &AlgebraPresentation) -> (RawQuiver, QuiverShapeReport) {
    let mut arrows = p.quiver().arrows().to_vec();
    for &(u, v, m) in p.relations() {
        for _ in 0..m {
            arrows.push((v, u));
        }
    }
    let mut loops = Vec::new();
    for x in 0..p.quiver().n() {
        if arrows.iter().any(|&(t, h)| t == x && h == x) {
            loops.push(x);
        }
    }
    let mut two_cycles = Vec::new();
    for x in 0..p.quiver().n() {
        for y in (x + 1)..p.quiver().n() {
            if arrows.iter().any(|&a| a == (x, y)) && arrows.iter().any(|&a| a == (y, x)) {
                two_cycles.push((x, y));
            }
        }
    }
    (
        RawQuiver {
            vertices: p.quiver().vertex_ids().to_vec(),
            arrows,
        },
        QuiverShapeReport { loops, two_cycles },
    )
}
