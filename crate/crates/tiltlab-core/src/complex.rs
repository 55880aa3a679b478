//! Simplicial complexes of compatible exceptional modules, and the fan of
//! simplicial cones attached to their maximal simplices.
//!
//! Two flavours share one type, distinguished by [`ClusterComplex::include_negatives`]:
//!
//! * the **plain** complex has one vertex per catalog entry; its faces are
//!   the rigid subsets (partial tilting modules) and its maximal faces are
//!   the tilting modules;
//! * the **extended** complex (the cluster complex) adds one formal
//!   *negative* vertex per quiver vertex. A mixed set is a face when the
//!   modules form a rigid set and no module is supported on a negated
//!   vertex. Maximal faces pair a vertex subset Θ with a tilting module of
//!   the subcategory of representations supported on Θ.
//!
//! Both are flag complexes: a set is a face exactly when all its pairs are,
//! so everything is built from the pairwise compatibility graph. Each
//! maximal simplex with as many vertices as the quiver spans a simplicial
//! cone (generators: the module dimension vectors and the negated unit
//! vectors); [`cone_forms`] returns its dual linear forms and [`locate`]
//! finds the cones containing a given integer vector.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::quiver::{is_sincere, DimVector};
use crate::tilting::maximal_cliques;
use crate::{rat, Rat};
use num_traits::{Signed, Zero};

/// A vertex of a tilting complex: an exceptional module, named by its
/// catalog index, or the formal negative of the simple at a quiver vertex.
///
/// The derived ordering (modules first, each kind by index) is the canonical
/// vertex order used throughout: inside faces, across the face list, and for
/// cone generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ComplexVertex {
    /// Catalog entry index.
    Module(usize),
    /// Quiver vertex index whose simple is negated.
    Negative(usize),
}

/// A face written as the pair (module set, allowed support): `modules` are
/// sorted catalog indices and `support` is the set Θ of quiver vertices whose
/// simples remain allowed. The face's negative vertices are exactly the
/// complement of `support`, so the pair and the vertex set determine each
/// other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacePair {
    /// Sorted catalog indices of the module vertices.
    pub modules: Vec<usize>,
    /// Quiver vertices whose simples are not negated; every module's
    /// support lies inside this set.
    pub support: BTreeSet<usize>,
}

impl FacePair {
    /// The vertex set of the face, given the number of quiver vertices.
    pub fn vertices(&self, n: usize) -> Vec<ComplexVertex> {
        let mut out: Vec<ComplexVertex> =
            self.modules.iter().map(|&m| ComplexVertex::Module(m)).collect();
        out.extend((0..n).filter(|i| !self.support.contains(i)).map(ComplexVertex::Negative));
        out
    }
}

/// Coface statistics for the faces one vertex short of maximal dimension
/// (the ridges), used to check the sphere/disk structure of a complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudomanifoldReport {
    /// Every ridge together with the number of maximal simplices containing
    /// it. For a quiver with a single vertex the unique ridge is the empty
    /// face, contained in every maximal simplex.
    pub ridge_cofaces: Vec<(Vec<ComplexVertex>, usize)>,
    /// Ridges contained in exactly one maximal simplex.
    pub boundary: Vec<Vec<ComplexVertex>>,
    /// Ridges contained in exactly two maximal simplices.
    pub interior: Vec<Vec<ComplexVertex>>,
    /// Extended complexes must have every ridge in exactly two maximal
    /// simplices; plain complexes allow one (boundary) or two (interior).
    /// Anything else lands here.
    pub violations: Vec<(Vec<ComplexVertex>, usize)>,
    /// For plain complexes: whether the boundary ridges are exactly those
    /// whose summed dimension vector misses some quiver vertex. `None` for
    /// extended complexes, which have no boundary.
    pub boundary_matches_non_sincere: Option<bool>,
}

/// A simplicial cone spanned by the generators of a maximal simplex,
/// together with the dual linear forms (rows of the inverse generator
/// matrix), so `forms[i] · generators[j] = δ_ij`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    /// One integer generator per vertex, in canonical vertex order: the
    /// dimension vector for a module vertex, minus a unit vector for a
    /// negative vertex.
    pub generators: Vec<DimVector>,
    /// Rational covectors dual to the generators.
    pub forms: Vec<Vec<Rat>>,
}

impl Cone {
    /// Evaluates every form on an integer vector.
    pub fn form_values(&self, d: &[i64]) -> Vec<Rat> {
        self.forms
            .iter()
            .map(|row| {
                let mut acc = Rat::zero();
                for (f, &x) in row.iter().zip(d) {
                    acc += f * rat(x, 1);
                }
                acc
            })
            .collect()
    }

    /// Whether the closed cone contains the vector (all forms nonnegative).
    pub fn contains(&self, d: &[i64]) -> bool {
        self.form_values(d).iter().all(|v| !v.is_negative())
    }

    /// Whether the open cone contains the vector (all forms positive).
    pub fn contains_strictly(&self, d: &[i64]) -> bool {
        self.form_values(d).iter().all(|v| v.is_positive())
    }
}

/// A finite simplicial complex over a catalog of exceptional modules,
/// stored with all its faces, its maximal faces, and the pairwise
/// compatibility graph that generates it.
#[derive(Debug, Clone)]
pub struct ClusterComplex {
    catalog: Catalog,
    include_negatives: bool,
    vertices: Vec<ComplexVertex>,
    adjacency: Vec<BTreeSet<usize>>,
    faces: Vec<Vec<ComplexVertex>>,
    face_set: BTreeSet<Vec<ComplexVertex>>,
    maximal: Vec<Vec<ComplexVertex>>,
}

/// Builds the complex of compatible sets over a catalog.
///
/// Vertices are the catalog entries, plus one negative vertex per quiver
/// vertex when `include_negatives` is set. Compatibility is pairwise:
/// two modules are compatible when `Ext¹` vanishes both ways, a module and
/// `neg(i)` when the module's dimension at `i` is zero, and two negatives
/// always. Faces are all cliques; they are closed under subsets by
/// construction.
pub fn build_complex(catalog: &Catalog, include_negatives: bool) -> Result<ClusterComplex> {
    let n = catalog.quiver().n();
    let entries = catalog.entries();
    let tables = catalog.tables()?;
    let mut vertices: Vec<ComplexVertex> =
        (0..entries.len()).map(ComplexVertex::Module).collect();
    if include_negatives {
        vertices.extend((0..n).map(ComplexVertex::Negative));
    }
    let m = vertices.len();
    let compatible = |u: ComplexVertex, v: ComplexVertex| -> bool {
        match (u, v) {
            (ComplexVertex::Module(a), ComplexVertex::Module(b)) => {
                tables.ext[a][b] == 0 && tables.ext[b][a] == 0
            }
            (ComplexVertex::Module(a), ComplexVertex::Negative(i))
            | (ComplexVertex::Negative(i), ComplexVertex::Module(a)) => {
                entries[a].dims[i] == 0
            }
            (ComplexVertex::Negative(_), ComplexVertex::Negative(_)) => true,
        }
    };
    let mut adjacency = vec![BTreeSet::new(); m];
    for i in 0..m {
        for j in (i + 1)..m {
            if compatible(vertices[i], vertices[j]) {
                adjacency[i].insert(j);
                adjacency[j].insert(i);
            }
        }
    }
    // Every clique, found by extending each face only with later vertices
    // adjacent to all current members.
    let mut local_faces: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<(Vec<usize>, usize)> = (0..m).map(|v| (vec![v], v)).collect();
    stack.reverse();
    while let Some((face, last)) = stack.pop() {
        for next in (last + 1)..m {
            if face.iter().all(|&c| adjacency[c].contains(&next)) {
                let mut bigger = face.clone();
                bigger.push(next);
                stack.push((bigger, next));
            }
        }
        local_faces.push(face);
    }
    local_faces.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    let translate =
        |f: &[usize]| -> Vec<ComplexVertex> { f.iter().map(|&i| vertices[i]).collect() };
    let faces: Vec<Vec<ComplexVertex>> = local_faces.iter().map(|f| translate(f)).collect();
    let face_set: BTreeSet<Vec<ComplexVertex>> = faces.iter().cloned().collect();
    let maximal: Vec<Vec<ComplexVertex>> = maximal_cliques(m, &adjacency)
        .iter()
        .map(|f| translate(f))
        .collect();
    Ok(ClusterComplex {
        catalog: catalog.clone(),
        include_negatives,
        vertices,
        adjacency,
        faces,
        face_set,
        maximal,
    })
}

impl ClusterComplex {
    /// The catalog the complex was built over.
    pub fn catalog(&self) -> &Catalog {
        &self.catalog
    }

    /// Whether negative vertices were added (the extended complex).
    pub fn include_negatives(&self) -> bool {
        self.include_negatives
    }

    /// All vertices in canonical order: modules by catalog index, then
    /// negatives by quiver vertex.
    pub fn vertices(&self) -> &[ComplexVertex] {
        &self.vertices
    }

    /// All nonempty faces, sorted by size then lexicographically.
    pub fn faces(&self) -> &[Vec<ComplexVertex>] {
        &self.faces
    }

    /// The maximal faces, sorted lexicographically.
    pub fn maximal_simplices(&self) -> &[Vec<ComplexVertex>] {
        &self.maximal
    }

    /// Face counts by dimension: entry `k` counts the faces with `k + 1`
    /// vertices.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.faces.last().map_or(0, Vec::len);
        let mut f = vec![0usize; top];
        for face in &self.faces {
            f[face.len() - 1] += 1;
        }
        f
    }

    /// The alternating sum of the face counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Whether the given vertex set (in any order, duplicates collapsed) is
    /// a face. The empty set always is.
    pub fn is_face(&self, face: &[ComplexVertex]) -> bool {
        let canon: BTreeSet<ComplexVertex> = face.iter().copied().collect();
        if canon.is_empty() {
            return true;
        }
        let canon: Vec<ComplexVertex> = canon.into_iter().collect();
        self.face_set.contains(&canon)
    }

    /// Rewrites a face as its (modules, allowed support) pair. Fails if the
    /// set is not a face of this complex.
    pub fn face_pair(&self, face: &[ComplexVertex]) -> Result<FacePair> {
        if !self.is_face(face) {
            return Err(Error::InvalidInput("vertex set is not a face".into()));
        }
        let mut modules = Vec::new();
        let mut support: BTreeSet<usize> = (0..self.catalog.quiver().n()).collect();
        for v in face {
            match v {
                ComplexVertex::Module(a) => modules.push(*a),
                ComplexVertex::Negative(i) => {
                    support.remove(i);
                }
            }
        }
        modules.sort_unstable();
        modules.dedup();
        Ok(FacePair { modules, support })
    }

    /// Coface statistics for the ridges (faces one vertex short of the
    /// quiver's vertex count), classifying them as boundary, interior, or
    /// violations of the expected sphere/disk structure.
    pub fn pseudomanifold_report(&self) -> PseudomanifoldReport {
        let n = self.catalog.quiver().n();
        let ridges: Vec<Vec<ComplexVertex>> = if n == 1 {
            vec![Vec::new()]
        } else {
            self.faces
                .iter()
                .filter(|f| f.len() == n - 1)
                .cloned()
                .collect()
        };
        let mut report = PseudomanifoldReport {
            ridge_cofaces: Vec::new(),
            boundary: Vec::new(),
            interior: Vec::new(),
            violations: Vec::new(),
            boundary_matches_non_sincere: None,
        };
        let mut boundary_agrees = true;
        for ridge in ridges {
            let count = self
                .maximal
                .iter()
                .filter(|m| ridge.iter().all(|v| m.contains(v)))
                .count();
            match count {
                1 => report.boundary.push(ridge.clone()),
                2 => report.interior.push(ridge.clone()),
                _ => {}
            }
            let bad = if self.include_negatives { count != 2 } else { !(count == 1 || count == 2) };
            if bad {
                report.violations.push((ridge.clone(), count));
            }
            if !self.include_negatives {
                let mut total = vec![0i64; n];
                for v in &ridge {
                    if let ComplexVertex::Module(a) = v {
                        for (acc, &d) in total.iter_mut().zip(&self.catalog.entries()[*a].dims) {
                            *acc += d;
                        }
                    }
                }
                let expected = if is_sincere(&total) { 2 } else { 1 };
                if count != expected {
                    boundary_agrees = false;
                }
            }
            report.ridge_cofaces.push((ridge, count));
        }
        if !self.include_negatives {
            report.boundary_matches_non_sincere = Some(boundary_agrees);
        }
        report
    }

    /// The cone of a maximal simplex with one generator per quiver vertex:
    /// generators in canonical vertex order, forms the rows of the inverse
    /// generator matrix.
    pub fn cone_forms(&self, simplex: &[ComplexVertex]) -> Result<Cone> {
        let n = self.catalog.quiver().n();
        let mut canon: Vec<ComplexVertex> = simplex.to_vec();
        canon.sort_unstable();
        canon.dedup();
        if !self.maximal.contains(&canon) {
            return Err(Error::Precondition(
                "cone generators come from maximal simplices only".into(),
            ));
        }
        if canon.len() != n {
            return Err(Error::Precondition(
                "maximal simplex does not have one vertex per quiver vertex".into(),
            ));
        }
        let generators: Vec<DimVector> = canon
            .iter()
            .map(|v| match v {
                ComplexVertex::Module(a) => self.catalog.entries()[*a].dims.clone(),
                ComplexVertex::Negative(i) => {
                    let mut e = vec![0i64; n];
                    e[*i] = -1;
                    e
                }
            })
            .collect();
        let mut g = Mat::zero(n, n);
        for (j, gen) in generators.iter().enumerate() {
            for (i, &x) in gen.iter().enumerate() {
                g.set(i, j, rat(x, 1));
            }
        }
        let inv = g
            .inverse()
            .map_err(|_| Error::Internal("maximal simplex with dependent generators".into()))?;
        let forms: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| inv.get(i, j).clone()).collect())
            .collect();
        Ok(Cone { generators, forms })
    }

    /// Indices of every maximal simplex whose closed cone contains `d`
    /// (vectors on shared faces of the fan lie in several). Only defined on
    /// extended complexes, whose cones fill out the whole space for
    /// complete catalogs; maximal simplices without a full set of
    /// generators (possible under a cap) are skipped.
    pub fn locate(&self, d: &[i64]) -> Result<Vec<usize>> {
        if !self.include_negatives {
            return Err(Error::Precondition(
                "locate needs the extended complex".into(),
            ));
        }
        let n = self.catalog.quiver().n();
        if d.len() != n {
            return Err(Error::InvalidInput(
                "vector length must match the quiver's vertex count".into(),
            ));
        }
        let mut hits = Vec::new();
        for (ix, simplex) in self.maximal.iter().enumerate() {
            if simplex.len() != n {
                continue;
            }
            if self.cone_forms(simplex)?.contains(d) {
                hits.push(ix);
            }
        }
        Ok(hits)
    }

    /// Degree of a vertex in the compatibility graph.
    pub fn degree(&self, v: ComplexVertex) -> Option<usize> {
        let ix = self.vertices.iter().position(|&u| u == v)?;
        Some(self.adjacency[ix].len())
    }
}
