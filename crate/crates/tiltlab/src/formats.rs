//! On-disk JSON formats: quivers, explicit representations, algebra
//! presentations, complex exports, and the catalog cache payload.
//!
//! Rational matrix entries are written as strings (`"2"`, `"-1/3"`) so
//! files stay exact and readable; all lists use the library's canonical
//! orders, so serializing the same value twice yields identical bytes.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use tiltlab_core::catalog::{Catalog, CatalogEntry};
use tiltlab_core::cluster_cat::AlgebraPresentation;
use tiltlab_core::complex::{ClusterComplex, ComplexVertex};
use tiltlab_core::matrix::Mat;
use tiltlab_core::quiver::Quiver;
use tiltlab_core::rep::Representation;
use tiltlab_core::Rat;

use crate::{CliError, CliResult};

/// A quiver: named vertices and `[tail, head]` arrow pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverDto {
    /// Vertex names, defining the canonical vertex order.
    pub vertices: Vec<String>,
    /// Arrows as `[tail, head]` vertex-name pairs.
    pub arrows: Vec<(String, String)>,
}

impl QuiverDto {
    /// Validates and builds the quiver.
    pub fn to_quiver(&self) -> CliResult<Quiver> {
        Ok(Quiver::new(self.vertices.clone(), self.arrows.clone())?)
    }

    /// Snapshot of an existing quiver.
    pub fn of(q: &Quiver) -> Self {
        let ids = q.vertex_ids();
        QuiverDto {
            vertices: ids.to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|&(t, h)| (ids[t].clone(), ids[h].clone()))
                .collect(),
        }
    }
}

/// Reads and validates a quiver file, returning the raw bytes as well (the
/// cache key hashes them).
pub fn load_quiver(path: &std::path::Path) -> CliResult<(Quiver, Vec<u8>)> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let dto: QuiverDto = serde_json::from_slice(&bytes)?;
    Ok((dto.to_quiver()?, bytes))
}

/// A representation: dimension vector plus one row-major rational matrix
/// per arrow, entries as exact fraction strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationDto {
    /// Vertex dimensions in quiver order.
    pub dims: Vec<i64>,
    /// One matrix per arrow: `maps[a][row][col]`, shape `dims[head] × dims[tail]`.
    pub maps: Vec<Vec<Vec<String>>>,
}

fn parse_rat(s: &str) -> CliResult<Rat> {
    Rat::from_str(s).map_err(|e| CliError::Input(format!("bad rational {s:?}: {e}")))
}

impl RepresentationDto {
    /// Validates shapes against the quiver and builds the representation.
    pub fn to_representation(&self, q: &Quiver) -> CliResult<Representation> {
        if self.dims.len() != q.n() {
            return Err(CliError::Input(format!(
                "representation has {} dimensions, quiver has {} vertices",
                self.dims.len(),
                q.n()
            )));
        }
        let mut maps = Vec::with_capacity(self.maps.len());
        for rows in &self.maps {
            let parsed: Vec<Vec<Rat>> = rows
                .iter()
                .map(|row| row.iter().map(|s| parse_rat(s)).collect::<CliResult<_>>())
                .collect::<CliResult<_>>()?;
            maps.push(Mat::from_rows(parsed)?);
        }
        // Degenerate shapes (a zero dimension on either end) collapse to
        // empty row lists in JSON; resize them to what the quiver expects.
        for (a, &(t, h)) in q.arrows().iter().enumerate() {
            let (rows, cols) = (self.dims[h] as usize, self.dims[t] as usize);
            if (rows == 0 || cols == 0) && a < maps.len() {
                maps[a] = Mat::zero(rows, cols);
            }
        }
        Ok(Representation::new(q, self.dims.clone(), maps)?)
    }

    /// Snapshot of an existing representation.
    pub fn of(q: &Quiver, rep: &Representation) -> Self {
        let maps = (0..q.arrows().len())
            .map(|a| {
                let m = rep.map(a);
                (0..m.nrows())
                    .map(|r| (0..m.ncols()).map(|c| m.get(r, c).to_string()).collect())
                    .collect()
            })
            .collect();
        RepresentationDto {
            dims: rep.dims().to_vec(),
            maps,
        }
    }
}

/// Reads and validates a representation file against a quiver.
pub fn load_representation(
    path: &std::path::Path,
    q: &Quiver,
) -> CliResult<Representation> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let dto: RepresentationDto = serde_json::from_slice(&bytes)?;
    dto.to_representation(q)
}

/// An algebra presentation: a quiver plus relation markers
/// `[from, to, multiplicity]` naming vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDto {
    /// Vertex names.
    pub vertices: Vec<String>,
    /// Arrows as `[tail, head]` pairs.
    pub arrows: Vec<(String, String)>,
    /// Relations as `[from, to, multiplicity]` triples.
    pub relations: Vec<(String, String, usize)>,
}

impl PresentationDto {
    /// Validates and builds the presentation.
    pub fn to_presentation(&self) -> CliResult<AlgebraPresentation> {
        let q = Quiver::new(self.vertices.clone(), self.arrows.clone())?;
        let relations = self
            .relations
            .iter()
            .map(|(f, t, m)| Ok((q.vertex_index(f)?, q.vertex_index(t)?, *m)))
            .collect::<Result<Vec<_>, tiltlab_core::Error>>()?;
        Ok(AlgebraPresentation::new(q, relations)?)
    }
}

/// Reads and validates a presentation file.
pub fn load_presentation(path: &std::path::Path) -> CliResult<AlgebraPresentation> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let dto: PresentationDto = serde_json::from_slice(&bytes)?;
    dto.to_presentation()
}

/// A vertex of the exported complex: a module identified by its dimension
/// vector, or the negative counterpart of a quiver vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VertexDto {
    /// Exceptional module with this dimension vector.
    Module {
        /// Dimension vector in quiver order.
        dims: Vec<i64>,
    },
    /// Negative copy of a quiver vertex.
    Negative {
        /// Vertex name.
        vertex: String,
    },
}

/// Short human label for a complex vertex (`(1,1,0)` or `-[x]`).
pub fn vertex_label(catalog: &Catalog, v: ComplexVertex) -> String {
    match v {
        ComplexVertex::Module(i) => catalog
            .quiver()
            .dim_string(&catalog.entries()[i].dims),
        ComplexVertex::Negative(i) => format!("-[{}]", catalog.quiver().vertex_ids()[i]),
    }
}

fn vertex_dto(catalog: &Catalog, v: ComplexVertex) -> VertexDto {
    match v {
        ComplexVertex::Module(i) => VertexDto::Module {
            dims: catalog.entries()[i].dims.clone(),
        },
        ComplexVertex::Negative(i) => VertexDto::Negative {
            vertex: catalog.quiver().vertex_ids()[i].clone(),
        },
    }
}

/// One maximal simplex of the export: vertices, its cone's integer
/// generators (one per vertex, in vertex order), and the dual rational
/// forms (`forms[i] · generators[j] = δ_ij`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalSimplexDto {
    /// The simplex's vertices in canonical order.
    pub vertices: Vec<VertexDto>,
    /// Cone generators as rows.
    pub generators: Vec<Vec<i64>>,
    /// Dual linear forms as rows of fraction strings.
    pub forms: Vec<Vec<String>>,
}

/// Full export of a tilting/cluster complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexExportDto {
    /// The quiver the complex was built over.
    pub quiver: QuiverDto,
    /// Catalog cap used for the underlying module list.
    pub cap: i64,
    /// Whether the catalog provably contains every exceptional module.
    pub complete: bool,
    /// Whether negative vertices are included.
    pub extended: bool,
    /// Face counts by dimension (vertices first).
    pub f_vector: Vec<usize>,
    /// Alternating sum of the face counts.
    pub euler_characteristic: i64,
    /// Ridges contained in exactly one maximal simplex.
    pub boundary_ridges: usize,
    /// Ridges contained in exactly two maximal simplices.
    pub interior_ridges: usize,
    /// Ridges violating the pseudomanifold condition.
    pub ridge_violations: usize,
    /// All maximal simplices with their cone data.
    pub maximal_simplices: Vec<MaximalSimplexDto>,
}

/// Builds the export payload for a complex, including cone generators and
/// dual forms for every full-dimensional maximal simplex.
pub fn export_complex(complex: &ClusterComplex) -> CliResult<ComplexExportDto> {
    let catalog = complex.catalog();
    let n = catalog.quiver().n();
    let report = complex.pseudomanifold_report();
    let mut maximal = Vec::new();
    for simplex in complex.maximal_simplices() {
        let vertices = simplex.iter().map(|&v| vertex_dto(catalog, v)).collect();
        let (generators, forms) = if simplex.len() == n {
            let cone = complex.cone_forms(simplex)?;
            (
                cone.generators.clone(),
                cone.forms
                    .iter()
                    .map(|row| row.iter().map(|x| x.to_string()).collect())
                    .collect(),
            )
        } else {
            (Vec::new(), Vec::new())
        };
        maximal.push(MaximalSimplexDto {
            vertices,
            generators,
            forms,
        });
    }
    Ok(ComplexExportDto {
        quiver: QuiverDto::of(catalog.quiver()),
        cap: catalog.cap(),
        complete: catalog.is_complete(),
        extended: complex.include_negatives(),
        f_vector: complex.f_vector(),
        euler_characteristic: complex.euler_characteristic(),
        boundary_ridges: report.boundary.len(),
        interior_ridges: report.interior.len(),
        ridge_violations: report.violations.len(),
        maximal_simplices: maximal,
    })
}

/// Catalog cache payload: everything needed to reassemble the catalog
/// without re-running the reflection walk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogCacheDto {
    /// Format version; mismatches trigger a silent rebuild.
    pub version: u32,
    /// Content hash of the quiver file bytes and the cap.
    pub key: String,
    /// The quiver the catalog was built over.
    pub quiver: QuiverDto,
    /// Total-dimension cap.
    pub cap: i64,
    /// Whether the catalog contains every exceptional module.
    pub complete: bool,
    /// Entries in canonical order, each with explicit matrices.
    pub entries: Vec<RepresentationDto>,
    /// `hom[i][j] = dim Hom(M_i, M_j)`.
    pub hom: Vec<Vec<usize>>,
    /// `ext[i][j] = dim Ext¹(M_i, M_j)`.
    pub ext: Vec<Vec<usize>>,
}

impl CatalogCacheDto {
    /// Reassembles the catalog from the payload.
    pub fn to_catalog(&self) -> CliResult<Catalog> {
        let q = self.quiver.to_quiver()?;
        let entries = self
            .entries
            .iter()
            .map(|dto| {
                Ok(CatalogEntry {
                    dims: dto.dims.clone(),
                    rep: dto.to_representation(&q)?,
                })
            })
            .collect::<CliResult<Vec<_>>>()?;
        Ok(Catalog::from_parts(q, entries, self.cap, self.complete)?)
    }

    /// Builds the payload from a catalog (computing the Hom/Ext tables).
    pub fn of(catalog: &Catalog, key: String) -> CliResult<Self> {
        let tables = catalog.tables()?;
        Ok(CatalogCacheDto {
            version: crate::cache::CACHE_VERSION,
            key,
            quiver: QuiverDto::of(catalog.quiver()),
            cap: catalog.cap(),
            complete: catalog.is_complete(),
            entries: catalog
                .entries()
                .iter()
                .map(|e| RepresentationDto::of(catalog.quiver(), &e.rep))
                .collect(),
            hom: tables.hom,
            ext: tables.ext,
        })
    }
}

/// Parses a comma-separated dimension vector like `1,1,0`.
pub fn parse_dims(s: &str, n: usize) -> CliResult<Vec<i64>> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != n {
        return Err(CliError::Input(format!(
            "expected {n} comma-separated dimensions, got {} in {s:?}",
            parts.len()
        )));
    }
    parts
        .iter()
        .map(|p| {
            p.parse::<i64>()
                .map_err(|e| CliError::Input(format!("bad dimension {p:?}: {e}")))
        })
        .collect()
}

/// Parses a semicolon-separated list of dimension vectors like
/// `1,0,0;1,1,1`.
pub fn parse_dim_list(s: &str, n: usize) -> CliResult<Vec<Vec<i64>>> {
    s.split(';')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| parse_dims(p, n))
        .collect()
}
